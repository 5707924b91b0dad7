//! How common are self-inverse (Hermitian) permutation gates?
//!
//! Prints exact counts and the non-Hermitian percentage for 1 to 5 qubits.
//!
//! ```bash
//! cargo run -p permgate --example gate_statistics
//! ```

use permgate::combinatorics::{
    factorial, involution_count, non_hermitian_fraction, render_percent,
};

fn main() -> Result<(), permgate::Error> {
    println!(
        "{:>6} {:>4} {:>36} {:>24}  non-Hermitian",
        "qubits", "M", "M!", "a[M]"
    );
    for n in 1..=5u32 {
        let m = 1usize << n;
        let ratio = non_hermitian_fraction(n)?;
        println!(
            "{n:>6} {m:>4} {:>36} {:>24}  {}",
            factorial(m),
            involution_count(m),
            render_percent(&ratio, 4)
        );
    }

    let r2 = non_hermitian_fraction(2)?;
    println!("\nexact fraction for two qubits: {r2}");
    Ok(())
}
