//! One-line notation, composition and permutation matrices.
//!
//! `(k,l,…,n)` lists, for each output basis state in turn, which input basis
//! state lands there (1-based).
//!
//! ```bash
//! cargo run -p permgate --example one_line_notation
//! ```

use permgate::classify::is_hermitian;
use permgate::Permutation;

fn print_matrix(name: &str, p: &Permutation) {
    println!("{name} = {p}");
    for row in p.to_matrix().rows() {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        println!("    [{}]", cells.join(" "));
    }
}

fn main() -> Result<(), permgate::Error> {
    let cnot: Permutation = "(1,2,4,3)".parse()?;
    print_matrix("CNOT", &cnot);
    println!("CNOT Hermitian: {}", is_hermitian(&cnot));
    println!("CNOT·CNOT = {}\n", cnot.compose(&cnot)?);

    // |00> -> |01>, |01> -> |11>, |10> -> |10>, |11> -> |00>.
    let b = Permutation::from_images(vec![1, 3, 2, 0])?;
    print_matrix("B", &b);
    let bb = b.compose(&b)?;
    println!("BB|00> = |{:02b}>", bb.apply(0));
    println!(
        "B unitary: {}, Hermitian: {}",
        b.to_matrix().is_unitary(),
        is_hermitian(&b)
    );
    println!("B⁻¹ = {}\n", b.inverse());

    match "(2,1,1,4)".parse::<Permutation>() {
        Ok(p) => println!("unexpectedly parsed {p}"),
        Err(e) => println!("(2,1,1,4) rejected: {e}"),
    }
    Ok(())
}
