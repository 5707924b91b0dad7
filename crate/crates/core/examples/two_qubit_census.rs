//! Exhaustive census of the 24 two-qubit permutation gates: which are
//! Hermitian, which factor as `U_A ⊗ U_B`.
//!
//! ```bash
//! cargo run -p permgate --example two_qubit_census
//! ```

use permgate::classify::{classify_all, is_separable, list_gates, Bipartition, GateFilter};
use permgate::combinatorics::render_percent;
use permgate::SizeCap;

fn main() -> Result<(), permgate::Error> {
    let report = classify_all(2, SizeCap::Default)?;
    println!(
        "{} gates: {} Hermitian, {} non-Hermitian, {} separable, {} entangled",
        report.total,
        report.hermitian_count,
        report.non_hermitian_count,
        report.separable_count,
        report.entangled_count
    );
    println!(
        "non-Hermitian {}, entangled {}",
        render_percent(&report.non_hermitian_fraction, 2),
        render_percent(&report.entangled_fraction, 2)
    );

    let show = |title: &str, filter| -> Result<(), permgate::Error> {
        let gates = list_gates(2, filter, SizeCap::Default)?;
        let rendered: Vec<String> = gates.iter().map(ToString::to_string).collect();
        println!("\n{title} ({}):\n  {}", gates.len(), rendered.join(" "));
        Ok(())
    };
    show("Hermitian", GateFilter::Hermitian)?;
    show("non-Hermitian", GateFilter::NonHermitian)?;

    let split = Bipartition::new(2, &[1])?;
    println!("\nseparable gates and their factors (wire 1 | wire 0):");
    for gate in list_gates(2, GateFilter::Separable, SizeCap::Default)? {
        let (a, b) = is_separable(&gate, &split)?.expect("filtered as separable");
        println!("  {gate} = {a} ⊗ {b}");
    }

    let three = classify_all(3, SizeCap::Default)?;
    println!(
        "\nthree qubits: {} of {} gates are Hermitian, {} are entangled across every bipartition",
        three.hermitian_count, three.total, three.entangled_count
    );
    Ok(())
}
