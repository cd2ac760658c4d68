use oricone::dualdesc::*;
use oricone::generators::*;
use oricone::symmetry::SymmetryGroup;

fn main() {
    let t0 = std::time::Instant::now();
    let q5 = qmet_hrep(5).unwrap();
    let rays = double_description(&q5).unwrap();
    println!("QMET_5 rays: {} ({:?})", rays.rays.len(), t0.elapsed());
    let g = SymmetryGroup::new(5);
    let t1 = std::time::Instant::now();
    let dec = g.orbit_decompose(&rays.rays);
    println!("QMET_5 ray orbits: {} ({:?})", dec.orbit_count(), t1.elapsed());

    let t2 = std::time::Instant::now();
    let o5 = omcut_vrep(5).unwrap();
    let seed = ot_inequality(5, 1, 2, 3).unwrap();
    let ad = adjacency_decomposition(&o5, &seed, &AdjDecompOptions::default()).unwrap();
    println!("adjdecomp OMCUT_5: {} orbits, {} facets ({:?})", ad.orbits.len(), ad.total_facets(), t2.elapsed());
    let first = &ad.orbits[0];
    let last = &ad.orbits[ad.orbits.len()-1];
    println!("first: (1, {:?}, {:?}, {})", first.adjacency, first.incidence, first.size);
    println!("last: ({}, {:?}, {:?}, {})", last.orbit_id, last.adjacency, last.incidence, last.size);
}
