//! Catalog algebras, Jacobi validation, Killing form, series and radical.

use borel_lie::lie::{catalog, LieAlgebra, SeriesKind};
use borel_lie::sample;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn describe(l: &LieAlgebra) -> borel_lie::Result<()> {
    println!("{} (dim {})", l.name(), l.dim());
    println!("  jacobi ok: {}", l.validate().is_ok());
    println!("  killing rank: {}", l.killing_form().rank());
    println!("  semisimple: {}", l.is_semisimple());
    println!("  lower central dims: {:?}", l.series_dims(SeriesKind::LowerCentral, None)?);
    println!("  derived dims: {:?}", l.series_dims(SeriesKind::Derived, None)?);
    println!("  radical dim: {}", l.radical().dim());
    println!("  center dim: {}", l.center().dim());
    Ok(())
}

fn main() -> borel_lie::Result<()> {
    for (family, n) in [("sl", 2), ("sl", 3), ("heisenberg", 5), ("borel_sl", 3), ("strictly_upper", 4)] {
        describe(&catalog::catalog(family, n)?)?;
    }

    let sl2 = catalog::sl(2)?;
    let e = sl2.basis_element(0);
    let f = sl2.basis_element(2);
    println!("[e, f] = {:?}", sl2.bracket(&e, &f)?.coords.iter().map(ToString::to_string).collect::<Vec<_>>());

    // the same algebra in a random basis
    let mut rng = StdRng::seed_from_u64(7);
    let p = sample::invertible(&mut rng, 3, 3);
    let twisted = sl2.change_of_basis(&p)?;
    println!("random basis still semisimple: {}", twisted.is_semisimple());
    print!("{}", twisted.to_json());
    Ok(())
}
