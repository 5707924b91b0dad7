//! Identity templates from the multiplication table of S₄.
//!
//! ```bash
//! cargo run -p permgate --example template_generation
//! ```

use permgate::templates::{
    expand_template, generate_templates, multiplication_table, two_gate_templates, GateLibrary,
};
use permgate::SizeCap;

fn main() -> Result<(), permgate::Error> {
    let library = GateLibrary::symmetric_group(4, SizeCap::Default)?;
    let table = multiplication_table(&library, SizeCap::Default)?;
    println!("S4 has {} elements; row 5 of the table:", table.order());
    let row: Vec<&str> = table
        .row(5)
        .iter()
        .map(|&g| library.gates()[g].name.as_str())
        .collect();
    println!("  {}", row.join(" "));

    let pairs = two_gate_templates(&library)?;
    println!(
        "\n{} two-gate templates, e.g. {:?}",
        pairs.len(),
        pairs[5]
            .gates()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    let expansions = expand_template(&pairs[5], 1, &library)?;
    println!(
        "{} three-gate expansions of it; the first four:",
        expansions.len()
    );
    for t in expansions.iter().take(4) {
        let gates: Vec<String> = t.gates().iter().map(ToString::to_string).collect();
        println!(
            "  {}  verifies: {}  degenerate: {}",
            gates.join(" "),
            t.verify(),
            t.is_degenerate()
        );
    }

    for max_size in 2..=4 {
        let generation = generate_templates(&library, max_size)?;
        println!(
            "\nstore up to {max_size} gates: {} templates{}",
            generation.store.len(),
            if generation.truncated {
                " (truncated)"
            } else {
                ""
            }
        );
    }

    let small = generate_templates(&GateLibrary::symmetric_group(3, SizeCap::Default)?, 3)?;
    print!("\nS3 store file:\n{}", small.store);
    Ok(())
}
