use oricone::dualdesc::*;
use oricone::generators::*;

fn main() {
    let o5 = omcut_vrep(5).unwrap();
    let seed = nn_inequality(5, 1, 2).unwrap();
    let t0 = std::time::Instant::now();
    let ad = adjacency_decomposition(&o5, &seed, &AdjDecompOptions { stop_after: Some(1), ..Default::default() }).unwrap();
    println!("one orbit processed in {:?}; adj {:?} inc {:?}", t0.elapsed(), ad.orbits[0].adjacency, ad.orbits[0].incidence);
}
