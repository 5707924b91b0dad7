//! Optimizing a small reversible circuit with inverse cancellation and
//! templates generated from S₄.
//!
//! ```bash
//! cargo run -p permgate --example peephole_optimizer
//! ```

use permgate::circuit::{Circuit, GateInstance};
use permgate::optimizer::{optimize, DEFAULT_BUDGET};
use permgate::templates::{generate_templates, GateLibrary};
use permgate::SizeCap;

fn main() -> Result<(), permgate::Error> {
    let store = generate_templates(&GateLibrary::symmetric_group(4, SizeCap::Default)?, 3)?.store;

    let mut circuit = Circuit::new(3)?;
    circuit.add("X", &[0])?.add("X", &[0])?;
    circuit.add("CNOT", &[0, 1])?;
    circuit.push(GateInstance::inline("(2,3,1,4)".parse()?, &[0, 1])?)?;
    circuit.push(GateInstance::inline("(4,1,3,2)".parse()?, &[0, 1])?)?;
    circuit.add("TOFFOLI", &[0, 1, 2])?;
    circuit.add("SWAP", &[1, 2])?.add("SWAP", &[1, 2])?;

    print!("input:\n{circuit}");
    let (optimized, report) = optimize(&circuit, &store, DEFAULT_BUDGET)?;
    print!("\noutput:\n{optimized}");
    println!("\n{report}");
    println!(
        "same permutation: {}",
        optimized.permutation() == circuit.permutation()
    );
    Ok(())
}
