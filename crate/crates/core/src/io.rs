//! Polyhedron file I/O and report rendering. The file format follows the
//! cdd convention for homogeneous cones: a kind line, `begin`, a counts
//! line `m d rational`, then `m` rows of `d` rationals whose leading entry
//! is always zero, then `end`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{format_rational, pair_count, points_from_dim, ConeVector, Rational};
use crate::generators::ConeDescription;
use crate::symmetry::OrbitRecord;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReprKind {
    H,
    V,
}

impl ReprKind {
    fn header(self) -> &'static str {
        match self {
            ReprKind::H => "H-representation",
            ReprKind::V => "V-representation",
        }
    }
}

/// Serialize one representation of a cone description.
pub fn write_poly(c: &ConeDescription, kind: ReprKind) -> Result<String> {
    let rows = match kind {
        ReprKind::H => c.hrep()?,
        ReprKind::V => c.vrep()?,
    };
    let d = pair_count(c.n()) + 1;
    let mut out = String::new();
    out.push_str(kind.header());
    out.push('\n');
    out.push_str("begin\n");
    out.push_str(&format!(" {} {} rational\n", rows.len(), d));
    for row in rows {
        out.push_str(" 0");
        for v in row.coords() {
            out.push(' ');
            out.push_str(&format_rational(v));
        }
        out.push('\n');
    }
    out.push_str("end\n");
    Ok(out)
}

fn parse_rational(tok: &str, line: usize) -> Result<Rational> {
    let bad = || Error::Parse {
        line,
        msg: format!("bad rational {tok:?}"),
    };
    match tok.split_once('/') {
        None => tok
            .parse::<num_bigint::BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((num, den)) => {
            let n = num.parse::<num_bigint::BigInt>().map_err(|_| bad())?;
            let d = den.parse::<num_bigint::BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Parse a polyhedron file into a cone description holding the read
/// representation.
pub fn read_poly(text: &str) -> Result<(ConeDescription, ReprKind)> {
    let mut lines = text.lines().enumerate();
    let err = |line: usize, msg: &str| Error::Parse {
        line,
        msg: msg.to_string(),
    };

    let (mut lineno, mut line) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    while line.trim().is_empty() {
        (lineno, line) = lines.next().ok_or_else(|| err(lineno + 1, "empty file"))?;
    }
    let kind = match line.trim() {
        "H-representation" => ReprKind::H,
        "V-representation" => ReprKind::V,
        other => {
            return Err(err(
                lineno + 1,
                &format!("expected a representation header, found {other:?}"),
            ))
        }
    };
    let (lineno, line) = lines.next().ok_or_else(|| err(lineno + 2, "missing begin"))?;
    if line.trim() != "begin" {
        return Err(err(lineno + 1, "expected `begin`"));
    }
    let (lineno, line) = lines
        .next()
        .ok_or_else(|| err(lineno + 2, "missing counts line"))?;
    let mut parts = line.split_whitespace();
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(lineno + 1, "bad row count"))?;
    let d: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(lineno + 1, "bad column count"))?;
    if parts.next() != Some("rational") {
        return Err(err(lineno + 1, "expected the `rational` number type"));
    }
    let n = points_from_dim(d - 1)
        .ok_or_else(|| err(lineno + 1, &format!("{} is not n(n-1) for any n >= 3", d - 1)))?;

    let mut rows: Vec<ConeVector> = Vec::with_capacity(m);
    let mut last_line = lineno;
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| err(last_line + 2, "unexpected end of rows"))?;
        last_line = lineno;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != d {
            return Err(err(
                lineno + 1,
                &format!("expected {d} entries, found {}", toks.len()),
            ));
        }
        let lead = parse_rational(toks[0], lineno + 1)?;
        if !lead.is_zero() {
            return Err(err(lineno + 1, "leading column must be zero for a cone"));
        }
        let coords = toks[1..]
            .iter()
            .map(|t| parse_rational(t, lineno + 1))
            .collect::<Result<Vec<_>>>()?;
        rows.push(ConeVector::from_rationals(n, coords)?);
    }
    let (lineno, line) = lines
        .next()
        .ok_or_else(|| err(last_line + 2, "missing end"))?;
    if line.trim() != "end" {
        return Err(err(lineno + 1, "expected `end`"));
    }
    let desc = match kind {
        ReprKind::H => ConeDescription::from_hrep(n, rows)?,
        ReprKind::V => ConeDescription::from_vrep(n, rows)?,
    };
    Ok((desc, kind))
}

/// A rendered table: TSV for machines, Markdown mirroring the published
/// layout for eyeballing.
#[derive(Clone, Debug)]
pub struct ReportTable {
    pub caption: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl ReportTable {
    pub fn new(caption: impl Into<String>, headers: Vec<String>) -> Self {
        ReportTable {
            caption: caption.into(),
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_tsv(&self) -> String {
        let mut out = format!("# {}\n", self.caption);
        out.push_str(&self.headers.join("\t"));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("**{}**\n\n", self.caption);
        out.push_str(&format!("| {} |\n", self.headers.join(" | ")));
        out.push_str(&format!(
            "|{}\n",
            " --- |".repeat(self.headers.len())
        ));
        for row in &self.rows {
            out.push_str(&format!("| {} |\n", row.join(" | ")));
        }
        out
    }

    pub fn render(&self, markdown: bool) -> String {
        if markdown {
            self.to_markdown()
        } else {
            self.to_tsv()
        }
    }
}

/// Emit orbit records appendix-style: one `(id, adj, inc, size)` header per
/// orbit followed by the representative's n-by-n matrix, ordered by
/// descending adjacency (see `sort_orbit_records` for the tiebreaks).
pub fn emit_appendix(orbits: &[OrbitRecord]) -> String {
    let mut sorted = orbits.to_vec();
    crate::dualdesc::sort_orbit_records(&mut sorted);
    let mut out = String::new();
    for (k, o) in sorted.iter().enumerate() {
        out.push_str(&format!(
            "({}, {}, {}, {})\n",
            k + 1,
            o.adjacency.map_or("?".into(), |a| a.to_string()),
            o.incidence.map_or("?".into(), |i| i.to_string()),
            o.size
        ));
        out.push_str(&o.representative.matrix_string());
        out.push('\n');
    }
    out
}
