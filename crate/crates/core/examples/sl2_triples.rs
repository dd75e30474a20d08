//! sl2-triples through nilpotent elements and their characteristic gradings.

use borel_lie::lie::{catalog, Element};
use borel_lie::semisimple::{characteristic_grading, extremal_bracket_span, is_reductive_in, jacobson_morozov};

fn main() -> borel_lie::Result<()> {
    let sl3 = catalog::sl(3)?;
    // positives E12, E13, E23 come first
    let regular = Element::from_ints(&[1, 0, 1, 0, 0, 0, 0, 0]);
    let minimal = Element::from_ints(&[0, 1, 0, 0, 0, 0, 0, 0]);
    for (name, y) in [("regular", regular), ("minimal", minimal)] {
        let t = jacobson_morozov(&sl3, &y)?;
        let g = characteristic_grading(&sl3, &t.h)?;
        println!("{name}: relations hold {}", t.satisfies_relations(&sl3));
        println!("  h = {:?}", t.h.coords.iter().map(ToString::to_string).collect::<Vec<_>>());
        println!("  layers {:?}, highest weight {}", g.layer_dims(), g.highest_weight()?);
        let k = extremal_bracket_span(&sl3, &g)?;
        println!("  [g(top), g(-top)] has dim {}, reductive: {}", k.dim(), is_reductive_in(&sl3, &k)?);
    }
    Ok(())
}
