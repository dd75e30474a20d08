//! Invariant generators as explicit polynomials in the tuple coordinates.

use borel_lie::borel::{generator_value, symbolic_generators, tuple_variable_names, GeneratorExport};
use borel_lie::lie::catalog;
use borel_lie::sample;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> borel_lie::Result<()> {
    let sl2 = catalog::sl(2)?;
    let vars = tuple_variable_names(&sl2, 2);
    let gens = symbolic_generators(&sl2, 2, 1, 2)?;
    for g in &gens {
        println!("{} c{}: {}", g.expr, g.coeff_index, g.poly.to_text(&vars));
    }

    // symbolic and numeric evaluation agree
    let mut rng = StdRng::seed_from_u64(11);
    let tuple = vec![sample::element(&mut rng, 3, 4), sample::element(&mut rng, 3, 4)];
    let point: Vec<_> = tuple.iter().flat_map(|y| y.coords.clone()).collect();
    let agree = gens
        .iter()
        .all(|g| g.poly.eval(&point) == generator_value(&sl2, &g.expr, &tuple, g.coeff_index).unwrap());
    println!("agreement at a random point: {agree}");

    let one = symbolic_generators(&sl2, 1, 1, 1)?;
    println!("{}", serde_json::to_string_pretty(&GeneratorExport::new(&sl2, 1, 1, 1, &one)).unwrap());
    Ok(())
}
