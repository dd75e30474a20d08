//! Every basis of a semisimple algebra has an iterated bracket that is not
//! ad-nilpotent. The refuter finds one, descending through sl2-gradings when
//! the cheap search comes up empty. Bases made only of nilpotent elements
//! are the interesting inputs.

use borel_lie::lie::{catalog, Subalgebra};
use borel_lie::sample;
use borel_lie::semisimple::{refute_with, RefuteOptions};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> borel_lie::Result<()> {
    let sl3 = catalog::sl(3)?;
    let upper = Subalgebra::span(&sl3, &(0..3).map(|i| sl3.basis_element(i)).collect::<Vec<_>>())?;
    let lower = Subalgebra::span(&sl3, &(5..8).map(|i| sl3.basis_element(i)).collect::<Vec<_>>())?;
    for seed in 0..4 {
        let mut rng = StdRng::seed_from_u64(seed);
        let basis = sample::nilpotent_basis(&mut rng, &sl3, &upper, &[&upper, &lower], 2);
        for direct in [2, 0] {
            let r = refute_with(&sl3, &basis, RefuteOptions { direct_search_depth: direct })?;
            let x = r.outcome.reported_element();
            let kind = serde_json::to_value(&r.outcome).unwrap()["kind"].clone();
            println!(
                "seed {seed}, direct depth {direct}: {} descent levels, {kind}, re-checked non-nilpotent: {}",
                r.trace.len(),
                !sl3.is_ad_nilpotent(x)?
            );
            if let Some(t) = r.trace.first() {
                println!("  level 0: highest weight {}, k dim {}", t.highest_weight, t.k_dim);
            }
        }
    }
    Ok(())
}
