//! Counting and enumerating iterated brackets of two letters.

use borel_lie::bracket::{count_exprs, enumerate_exprs, CountMode};
use num_bigint::BigUint;

fn main() -> borel_lie::Result<()> {
    let exprs: Vec<String> = enumerate_exprs(2, 2)?.map(|e| e.to_string()).collect();
    println!("depth <= 2: {}", exprs.join(" "));
    for d in 1..=9 {
        let exact = count_exprs(2, d, CountMode::Exact);
        println!("depth {d}: {} expressions ({} bits)", exact, exact.bits());
    }
    let nine = count_exprs(2, 9, CountMode::Exact);
    let bound = BigUint::from(1u8) << 256usize;
    println!("depth 9 exceeds 2^256: {}", nine > bound);
    Ok(())
}
