//! Command-line front end: cone generation, representation conversion,
//! orbit reports, skeleton/ridge analysis, theorem checks, and summary
//! tables.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use oricone::dualdesc::{
    adjacency_decomposition, cone_hrep, double_description, facet_enumeration, AdjDecompOptions,
};
use oricone::facegraphs::{
    analyze_large_skeleton, build_graph, representation_matrix, GraphKind,
};
use oricone::generators::{
    self, nn_inequality, omcut_vrep, ocut_vrep, ordered_partitions, qhyp_hrep, qmet_hrep,
};
use oricone::io::{emit_appendix, read_poly, write_poly, ReportTable, ReprKind};
use oricone::symmetry::SymmetryGroup;
use oricone::verifiers::{self, CheckReport};
use oricone::{ConeDescription, ConeVector, Error, Result};

#[derive(Parser)]
#[command(name = "oricone", version, about = "Exact polyhedral computations for cones of quasi-semi-metrics and oriented multicuts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Cone {
    Qmet,
    Omcut,
    Ocut,
    Qhyp,
}

impl Cone {
    fn name(self) -> &'static str {
        match self {
            Cone::Qmet => "QMET",
            Cone::Omcut => "OMCUT",
            Cone::Ocut => "OCUT",
            Cone::Qhyp => "QHYP",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write the defining representation of a cone (H for QMET/QHYP, V for
    /// OMCUT/OCUT) as a polyhedron file.
    Generate {
        #[arg(value_enum)]
        cone: Cone,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert between representations: H input runs ray enumeration, V
    /// input runs facet enumeration.
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate all facet orbits of the cone generated by a V-file using
    /// the adjacency decomposition method.
    Adjdecomp {
        vfile: PathBuf,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Orbit decomposition of the rows of a polyhedron file.
    Orbits { file: PathBuf },
    /// Skeleton graph analysis of a cone.
    Skeleton {
        #[arg(value_enum)]
        cone: Cone,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        diameter: bool,
        #[arg(long)]
        md: bool,
    },
    /// Ridge graph analysis of a cone.
    Ridge {
        #[arg(value_enum)]
        cone: Cone,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        diameter: bool,
        #[arg(long)]
        md: bool,
    },
    /// Run one named check, or all checks appropriate for the size.
    Verify {
        check: String,
        #[arg(long)]
        n: usize,
    },
    /// Summary reports.
    Report {
        #[command(subcommand)]
        which: Report,
    },
}

#[derive(Subcommand)]
enum Report {
    /// Per-cone summary rows: ray/facet counts, orbit counts, diameters.
    Table1 {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long)]
        md: bool,
    },
    /// Computed OMCUT_3 orbit data next to the published table, flagging
    /// any cell where the print disagrees with the recomputation.
    Table2 {
        #[arg(long)]
        md: bool,
    },
    /// Appendix-style orbit listing for the extreme rays of QMET_n.
    AppendixRays {
        #[arg(long)]
        n: usize,
    },
    /// Appendix-style orbit listing for the facets of OMCUT_n.
    AppendixFacets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn jobs_from(opt: Option<usize>) -> usize {
    opt.or_else(|| {
        std::env::var("ORICONE_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1)
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Nodes and partner vectors for a cone's skeleton or ridge graph.
fn graph_inputs(cone: Cone, n: usize, kind: GraphKind) -> Result<(Vec<ConeVector>, Vec<ConeVector>)> {
    let (rays, facets): (Vec<ConeVector>, Vec<ConeVector>) = match cone {
        Cone::Qmet => {
            let h = qmet_hrep(n)?;
            let rays = double_description(&h)?;
            (rays.rays, h.hrep()?.to_vec())
        }
        Cone::Qhyp => {
            let h = qhyp_hrep(n)?;
            let rays = double_description(&h)?;
            // keep only the facet-defining rows
            let desc = rays.description();
            let mut facets = Vec::new();
            for f in h.hrep()? {
                if oricone::dualdesc::is_facet(f, &desc)? {
                    facets.push(f.clone());
                }
            }
            (rays.rays, facets)
        }
        Cone::Omcut => {
            let v = omcut_vrep(n)?;
            let facets = if n <= 4 {
                facet_enumeration(&v)?.facets
            } else {
                let seed = nn_inequality(n, 1, 2)?;
                let ad = adjacency_decomposition(&v, &seed, &AdjDecompOptions::default())?;
                let group = SymmetryGroup::new(n);
                let mut all = Vec::new();
                for o in &ad.orbits {
                    for img in group.expand_orbit_i64(&o.representative.primitive_i64s()?) {
                        all.push(ConeVector::from_integers(n, &img)?);
                    }
                }
                all
            };
            (v.vrep()?.to_vec(), facets)
        }
        Cone::Ocut => {
            let v = ocut_vrep(n)?;
            let facets = cone_hrep(&v)?;
            (v.vrep()?.to_vec(), facets)
        }
    };
    Ok(match kind {
        GraphKind::Skeleton => (rays, facets),
        GraphKind::Ridge => (facets, rays),
    })
}

fn graph_report(
    cone: Cone,
    n: usize,
    kind: GraphKind,
    matrix: bool,
    want_diameter: bool,
    md: bool,
) -> Result<String> {
    let (nodes, partner) = graph_inputs(cone, n, kind)?;
    let label = match kind {
        GraphKind::Skeleton => "skeleton",
        GraphKind::Ridge => "ridge",
    };
    let mut out = String::new();
    if nodes.len() <= 2000 {
        let g = build_graph(kind, &nodes, &partner, n)?;
        let m = representation_matrix(&g);
        let mut headers = vec!["Orbit".to_string()];
        if matrix {
            headers.extend((1..=m.orbit_count()).map(|j| format!("O{j}")));
        }
        headers.extend(["Adj", "Inc", "Size"].map(String::from));
        let mut table = ReportTable::new(
            format!("{} graph of {}_{n}: {} nodes", label, cone.name(), nodes.len()),
            headers,
        );
        for i in 0..m.orbit_count() {
            let mut row = vec![format!("O{}", i + 1)];
            if matrix {
                row.extend(m.entries[i].iter().map(|v| v.to_string()));
            }
            row.push(m.adjacency[i].to_string());
            row.push(m.incidence[i].to_string());
            row.push(m.size[i].to_string());
            table.push_row(row);
        }
        out.push_str(&table.render(md));
        if want_diameter {
            out.push_str(&format!("diameter\t{}\n", g.diameter()?));
        }
    } else {
        let a = analyze_large_skeleton(&nodes, &partner, n, want_diameter)?;
        let mut headers = vec!["Orbit".to_string()];
        if matrix {
            headers.extend((1..=a.orbits.len()).map(|j| format!("O{j}")));
        }
        headers.extend(["Adj", "Inc", "Size"].map(String::from));
        let mut table = ReportTable::new(
            format!("{} graph of {}_{n}: {} nodes", label, cone.name(), nodes.len()),
            headers,
        );
        for (i, o) in a.orbits.iter().enumerate() {
            let mut row = vec![format!("O{}", i + 1)];
            if matrix {
                row.extend(a.rep_rows[i].iter().map(|v| v.to_string()));
            }
            row.push(o.adjacency.unwrap_or(0).to_string());
            row.push(o.incidence.unwrap_or(0).to_string());
            row.push(o.size.to_string());
            table.push_row(row);
        }
        out.push_str(&table.render(md));
        if let Some(d) = a.diameter {
            out.push_str(&format!("diameter\t{d}\n"));
        }
    }
    Ok(out)
}

/// Rays of QMET_n together with their orbit representatives.
fn qmet_rays(n: usize) -> Result<(ConeDescription, Vec<ConeVector>, Vec<ConeVector>)> {
    let h = qmet_hrep(n)?;
    let enumeration = double_description(&h)?;
    let group = SymmetryGroup::new(n);
    let dec = group.orbit_decompose(&enumeration.rays);
    let reps = dec
        .records
        .iter()
        .map(|r| r.representative.clone())
        .collect();
    Ok((enumeration.description(), enumeration.rays, reps))
}

fn run_checks(name: &str, n: usize) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let all = name == "all";
    let want = |c: &str| all || name == c;

    if want("min-zeros") || want("no-symmetric-rays") || want("linf-embedding") || want("e-set-orbits") {
        let (_, rays, reps) = qmet_rays(n)?;
        if want("min-zeros") {
            reports.push(verifiers::check_min_zeros(n, &rays));
        }
        if want("no-symmetric-rays") {
            reports.push(verifiers::check_no_symmetric_rays(n, &rays));
        }
        if want("linf-embedding") {
            reports.push(verifiers::check_linf_embedding(n, &rays)?);
        }
        if want("e-set-orbits") {
            reports.push(verifiers::check_e_set_orbits(n, &reps));
        }
    }
    if want("multicuts-extreme") {
        reports.push(verifiers::check_multicuts_extreme(n)?);
    }
    if want("vertex-split") {
        reports.push(check_vertex_split(n)?);
    }
    if want("ridge-rules") {
        let h = qmet_hrep(n)?;
        let rays = double_description(&h)?;
        let ridge = build_graph(GraphKind::Ridge, h.hrep()?, &rays.rays, n)?;
        reports.push(verifiers::check_ridge_rules(n, &ridge));
    }
    if want("multicut-adjacency") || want("two-point-cut-rule") {
        let (skel, parts) = oricone::facegraphs::omcut_skeleton(n)?;
        if want("multicut-adjacency") {
            reports.push(verifiers::check_multicut_adjacency_rules(n, &skel, &parts));
        }
        if want("two-point-cut-rule") {
            reports.push(verifiers::report_two_point_cut_rule(n, &skel, &parts));
        }
    }
    if want("validity-families") && (n >= 4 || !all) {
        reports.push(verifiers::check_validity_families(n)?);
    }
    if want("facet-families") && (n >= 4 || !all) {
        reports.push(verifiers::check_facet_families(n)?);
    }
    if want("symmetric-facet-projection") {
        let v = omcut_vrep(n)?;
        let orbits = if n <= 4 {
            let fe = facet_enumeration(&v)?;
            let group = SymmetryGroup::new(n);
            group.orbit_decompose(&fe.facets).records
        } else {
            let seed = nn_inequality(n, 1, 2)?;
            adjacency_decomposition(&v, &seed, &AdjDecompOptions::default())?.orbits
        };
        reports.push(verifiers::check_symmetric_facet_projection(n, &orbits)?);
    }
    if want("ocut-membership") {
        reports.push(check_ocut_membership(n)?);
    }
    if want("table2-reference") {
        reports.push(verifiers::check_published_omcut3_tables()?);
    }
    if reports.is_empty() {
        return Err(Error::Unsupported(format!(
            "unknown check {name:?}; see `oricone verify --help`"
        )));
    }
    Ok(reports)
}

fn check_vertex_split(n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("vertex-split", format!("QMET_{n} -> QMET_{}", n + 1));
    let h = qmet_hrep(n)?;
    let rays = double_description(&h)?;
    let h_up = qmet_hrep(n + 1)?;
    let mut tested = 0usize;
    for r in &rays.rays {
        for p in 1..=n {
            tested += 1;
            let split = verifiers::vertex_split(r, p)?;
            if !oricone::dualdesc::is_extreme(&split, &h_up)? {
                report.fail(format!("split of {r:?} at {p} is not extreme"));
            }
        }
    }
    report.stat("splits_tested", tested);
    Ok(report)
}

fn check_ocut_membership(n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("ocut-membership", format!("OCUT_{n}"));
    let facets = verifiers::OcutFacets::new(n)?;
    let gens: Vec<ConeVector> = ocut_vrep(n)?.vrep()?.to_vec();
    let mut member = 0usize;
    let mut tested = 0usize;
    for p in ordered_partitions(n)? {
        let m = generators::multicut_vector(&p);
        let by_facets = facets.member(&m)?;
        let by_oracle = verifiers::in_conic_hull(&gens, &m)?;
        tested += 1;
        if by_facets != by_oracle {
            report.fail(format!(
                "facet test {by_facets} vs conic-hull oracle {by_oracle} on {:?}",
                p.blocks()
            ));
        }
        if by_facets {
            member += 1;
        }
        if p.q() == 2 && !by_facets {
            report.fail(format!("oriented cut {:?} rejected", p.blocks()));
        }
    }
    report.stat("vectors_tested", tested);
    report.stat("members", member);
    Ok(report)
}

fn report_table1(n_max: usize, md: bool) -> Result<String> {
    let mut table = ReportTable::new(
        "Small cones: counts, orbit counts and diameters",
        ["cone", "dim", "ext.rays(orbits)", "facets(orbits)", "diameters"]
            .map(String::from)
            .to_vec(),
    );
    for n in 3..=n_max.min(5) {
        // OMCUT_n row (equals QMET_n at n = 3)
        {
            let (nodes, partner) = graph_inputs(Cone::Omcut, n, GraphKind::Skeleton)?;
            let skel = build_graph(GraphKind::Skeleton, &nodes, &partner, n)?;
            let ridge = build_graph(GraphKind::Ridge, &partner, &nodes, n)?;
            let group = SymmetryGroup::new(n);
            let facet_orbits = group.orbit_decompose(&partner).orbit_count();
            table.push_row(vec![
                format!("OMCUT_{n}"),
                format!("{}", oricone::exact::pair_count(n)),
                format!("{}({})", nodes.len(), skel.orbits.len()),
                format!("{}({})", partner.len(), facet_orbits),
                format!("{}; {}", skel.diameter()?, ridge.diameter()?),
            ]);
        }
        if n >= 4 {
            let h = qmet_hrep(n)?;
            let rays = double_description(&h)?;
            let group = SymmetryGroup::new(n);
            let ray_orbits = group.orbit_decompose(&rays.rays).orbit_count();
            let (skel_d, ridge_d) = if rays.rays.len() <= 2000 {
                let skel = build_graph(GraphKind::Skeleton, &rays.rays, h.hrep()?, n)?;
                let ridge = build_graph(GraphKind::Ridge, h.hrep()?, &rays.rays, n)?;
                (skel.diameter()?, ridge.diameter()?)
            } else {
                let a = analyze_large_skeleton(&rays.rays, h.hrep()?, n, true)?;
                let ridge = build_graph(GraphKind::Ridge, h.hrep()?, &rays.rays, n)?;
                (a.diameter.unwrap(), ridge.diameter()?)
            };
            table.push_row(vec![
                format!("QMET_{n}"),
                format!("{}", oricone::exact::pair_count(n)),
                format!("{}({})", rays.rays.len(), ray_orbits),
                format!("{}(2)", h.hrep()?.len()),
                format!("{skel_d}; {ridge_d}"),
            ]);
        }
    }
    Ok(table.render(md))
}

fn real_main() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Generate { cone, n, output } => {
            let (desc, kind) = match cone {
                Cone::Qmet => (qmet_hrep(n)?, ReprKind::H),
                Cone::Qhyp => (qhyp_hrep(n)?, ReprKind::H),
                Cone::Omcut => (omcut_vrep(n)?, ReprKind::V),
                Cone::Ocut => (ocut_vrep(n)?, ReprKind::V),
            };
            emit(&write_poly(&desc, kind)?, output.as_ref())?;
        }
        Command::Dual { file, output } => {
            let (desc, kind) = read_poly(&std::fs::read_to_string(&file)?)?;
            let text = match kind {
                ReprKind::H => {
                    let rays = double_description(&desc)?;
                    write_poly(&rays.description(), ReprKind::V)?
                }
                ReprKind::V => {
                    let facets = facet_enumeration(&desc)?;
                    write_poly(&facets.description(), ReprKind::H)?
                }
            };
            emit(&text, output.as_ref())?;
        }
        Command::Adjdecomp {
            vfile,
            checkpoint,
            jobs,
        } => {
            let (desc, kind) = read_poly(&std::fs::read_to_string(&vfile)?)?;
            if kind != ReprKind::V {
                return Err(Error::MissingVrep);
            }
            let n = desc.n();
            let seed = nn_inequality(n, 1, 2)?;
            let opts = AdjDecompOptions {
                checkpoint,
                jobs: jobs_from(jobs),
                stop_after: None,
            };
            let ad = adjacency_decomposition(&desc, &seed, &opts)?;
            println!(
                "# {} facets in {} orbits (complete: {})",
                ad.total_facets(),
                ad.orbits.len(),
                ad.complete
            );
            print!("{}", emit_appendix(&ad.orbits));
        }
        Command::Orbits { file } => {
            let (desc, kind) = read_poly(&std::fs::read_to_string(&file)?)?;
            let rows = match kind {
                ReprKind::H => desc.hrep()?,
                ReprKind::V => desc.vrep()?,
            };
            let group = SymmetryGroup::new(desc.n());
            let dec = group.orbit_decompose(rows);
            let mut table = ReportTable::new(
                format!("{} rows in {} orbits", rows.len(), dec.orbit_count()),
                ["orbit", "size", "representative"].map(String::from).to_vec(),
            );
            for r in &dec.records {
                table.push_row(vec![
                    format!("{}", r.orbit_id + 1),
                    r.size.to_string(),
                    format!("{:?}", r.representative),
                ]);
            }
            print!("{}", table.to_tsv());
        }
        Command::Skeleton {
            cone,
            n,
            matrix,
            diameter,
            md,
        } => {
            print!(
                "{}",
                graph_report(cone, n, GraphKind::Skeleton, matrix, diameter, md)?
            );
        }
        Command::Ridge {
            cone,
            n,
            matrix,
            diameter,
            md,
        } => {
            print!(
                "{}",
                graph_report(cone, n, GraphKind::Ridge, matrix, diameter, md)?
            );
        }
        Command::Verify { check, n } => {
            let reports = run_checks(&check, n)?;
            let mut ok = true;
            for r in &reports {
                print!("{}", r.render());
                ok &= r.passed;
            }
            return Ok(ok);
        }
        Command::Report { which } => match which {
            Report::Table1 { n_max, md } => print!("{}", report_table1(n_max, md)?),
            Report::Table2 { md } => {
                let report = verifiers::check_published_omcut3_tables()?;
                let _ = md;
                print!("{}", report.render());
            }
            Report::AppendixRays { n } => {
                let h = qmet_hrep(n)?;
                let rays = double_description(&h)?;
                let a = analyze_large_skeleton(&rays.rays, h.hrep()?, n, false)?;
                print!("{}", emit_appendix(&a.orbits));
            }
            Report::AppendixFacets { n, jobs } => {
                let v = omcut_vrep(n)?;
                let seed = nn_inequality(n, 1, 2)?;
                let opts = AdjDecompOptions {
                    checkpoint: None,
                    jobs: jobs_from(jobs),
                    stop_after: None,
                };
                let ad = adjacency_decomposition(&v, &seed, &opts)?;
                print!("{}", emit_appendix(&ad.orbits));
            }
        },
    }
    Ok(true)
}

fn main() -> ExitCode {
    match real_main() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
