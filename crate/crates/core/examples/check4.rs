use oricone::dualdesc::*;
use oricone::generators::*;
use oricone::symmetry::SymmetryGroup;

fn main() {
    let t0 = std::time::Instant::now();
    let q4 = qmet_hrep(4).unwrap();
    let rays = double_description(&q4).unwrap();
    println!("QMET_4 rays: {} ({:?})", rays.rays.len(), t0.elapsed());
    let g = SymmetryGroup::new(4);
    let dec = g.orbit_decompose(&rays.rays);
    println!("QMET_4 ray orbits: {}", dec.orbit_count());

    let t0 = std::time::Instant::now();
    let o4 = omcut_vrep(4).unwrap();
    let facets = facet_enumeration(&o4).unwrap();
    println!("OMCUT_4 facets: {} ({:?})", facets.facets.len(), t0.elapsed());
    let dec = g.orbit_decompose(&facets.facets);
    println!("OMCUT_4 facet orbits: {}", dec.orbit_count());
    for r in &dec.records {
        println!("  orbit size {}", r.size);
    }

    // adjacency decomposition agrees
    let t0 = std::time::Instant::now();
    let seed = ot_inequality(4, 1, 2, 3).unwrap();
    let ad = adjacency_decomposition(&o4, &seed, &AdjDecompOptions::default()).unwrap();
    println!("adjdecomp OMCUT_4: {} orbits, {} facets, complete={} ({:?})",
        ad.orbits.len(), ad.total_facets(), ad.complete, t0.elapsed());
    for o in &ad.orbits {
        println!("  (id {}, adj {:?}, inc {:?}, size {})", o.orbit_id, o.adjacency, o.incidence, o.size);
    }

    // OCUT_4 H-description (not full-dimensional), re-dualized
    let oc = ocut_vrep(4).unwrap();
    let hrep = cone_hrep(&oc).unwrap();
    println!("OCUT_4 hrep rows: {}", hrep.len());
    let back = double_description(&ConeDescription::from_hrep(4, hrep).unwrap()).unwrap();
    println!("OCUT_4 re-dualized rays: {}", back.rays.len());
}
