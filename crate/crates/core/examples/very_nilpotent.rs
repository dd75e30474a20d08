//! Value closures and the search for non-nilpotent iterated brackets.

use borel_lie::bracket::{find_non_nilpotent_witness, is_very_nilpotent_basis, value_closure};
use borel_lie::lie::{catalog, Element};
use borel_lie::sample;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> borel_lie::Result<()> {
    let mut rng = StdRng::seed_from_u64(1);

    let h5 = catalog::heisenberg(5)?;
    let basis = sample::basis(&mut rng, &h5, 3);
    let closure = value_closure(&h5, &basis, 4)?;
    let sizes: Vec<usize> = (1..=4).map(|d| closure.layer(d).len()).collect();
    println!("heisenberg(5), random basis: layer sizes {sizes:?}");
    let v = is_very_nilpotent_basis(&h5, &basis, 6)?;
    println!("  very nilpotent: {}, witness: {:?}", v.theorem_verdict, v.witness.map(|w| w.expr.to_string()));

    let sl2 = catalog::sl(2)?;
    let nil_basis = vec![sl2.basis_element(0), sl2.basis_element(2), Element::from_ints(&[1, 1, -1])];
    let w = find_non_nilpotent_witness(&sl2, &nil_basis, 3)?.expect("sl2 is not nilpotent");
    println!("sl2, basis (e, f, e + h - f): {} = {:?} at depth {}", w.expr, w.value.coords.iter().map(ToString::to_string).collect::<Vec<_>>(), w.depth);

    let sl3 = catalog::sl(3)?;
    for seed in 0..5 {
        let mut rng = StdRng::seed_from_u64(seed);
        let b = sample::basis(&mut rng, &sl3, 2);
        let w = find_non_nilpotent_witness(&sl3, &b, 6)?;
        println!("sl3 seed {seed}: {:?}", w.map(|w| (w.depth, w.expr.to_string())));
    }
    Ok(())
}
