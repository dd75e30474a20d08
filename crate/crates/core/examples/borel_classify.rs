//! Is a pair of elements of sl3 inside a common Borel subalgebra, a common
//! nilradical, or neither?

use borel_lie::borel::{classify_tuple, cross_check};
use borel_lie::lie::{catalog, Subalgebra};
use borel_lie::sample;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> borel_lie::Result<()> {
    let sl3 = catalog::sl(3)?;
    // upper triangular part is the first five basis vectors, strictly upper the first three
    let b = Subalgebra::span(&sl3, &(0..5).map(|i| sl3.basis_element(i)).collect::<Vec<_>>())?;
    let n = Subalgebra::span(&sl3, &(0..3).map(|i| sl3.basis_element(i)).collect::<Vec<_>>())?;
    let mut rng = StdRng::seed_from_u64(3);
    let pairs = [
        ("borel", vec![sample::element_of(&mut rng, &b, 3), sample::element_of(&mut rng, &b, 3)]),
        ("nilradical", vec![sample::element_of(&mut rng, &n, 3), sample::element_of(&mut rng, &n, 3)]),
        ("generic", vec![sample::element(&mut rng, 8, 3), sample::element(&mut rng, 8, 3)]),
    ];
    for (name, pair) in pairs {
        let r = classify_tuple(&sl3, &pair, 4)?;
        let c = cross_check(&sl3, &pair, 4)?;
        println!("{name}: {} (k dim {}), cross-check {:?}", r.verdict.as_str(), r.k.dim(), c.status);
        println!("  evidence {}", serde_json::to_string(&r.evidence).unwrap());
    }
    Ok(())
}
