//! The Hadamard predicate and its accepting set.
//!
//! Run with `cargo run --example predicate -- 3`.

use hkcolor::predicate::HadamardPredicate;
use hkcolor::Sign;

fn main() -> hkcolor::Result<()> {
    let r: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let h = HadamardPredicate::new(r)?;
    println!(
        "r = {r}, K = {}, {} accepting assignments",
        h.arity(),
        h.codeword_count()
    );
    for (i, c) in h.accepting_set().iter().enumerate() {
        let bits: String = c
            .bits()
            .iter()
            .map(|b| if *b == Sign::Plus { '+' } else { '-' })
            .collect();
        println!("  {i:>2}  {bits}");
    }
    let a = 1;
    let b = h.codeword_count() - 1;
    println!("codeword {a} * codeword {b} = codeword {}", h.product_index(a, b));
    Ok(())
}
