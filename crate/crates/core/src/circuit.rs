//! Reversible circuits over permutation gates.
//!
//! Wire `w` is bit `w` of a register basis index. A `k`-qubit gate placed on
//! wires `[w₀, …, w_{k−1}]` reads its ket positions in listed order: `w₀`
//! carries the most significant bit of the gate's own basis index. With that
//! rule `CNOT = (1,2,4,3)` placed on `[c, t]` has control `c` and target `t`.
//!
//! Text format:
//!
//! ```text
//! qubits 3
//! gate CNOT 0 1      # builtin gate on wires 0 (control) and 1
//! perm (2,3,1,4) 2 0 # inline permutation gate
//! ```

use std::fmt;
use std::str::FromStr;

use crate::perm::Permutation;
use crate::{Error, Result, SizeCap};

/// Default wire cap; semantics are computed on `2ⁿ` basis indices.
pub const WIRE_CAP: usize = 12;

/// Builtin gate names with their one-line notation.
pub const BUILTIN_GATES: [(&str, &str); 6] = [
    ("I", "(1,2)"),
    ("X", "(2,1)"),
    ("SWAP", "(1,3,2,4)"),
    ("CNOT", "(1,2,4,3)"),
    ("TOFFOLI", "(1,2,3,4,5,6,8,7)"),
    ("FREDKIN", "(1,2,3,4,5,7,6,8)"),
];

pub fn builtin_gate(name: &str) -> Option<Permutation> {
    BUILTIN_GATES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| text.parse().expect("builtin notation is valid"))
}

/// Name of the builtin equal to `gate`, if any.
pub fn builtin_name(gate: &Permutation) -> Option<&'static str> {
    BUILTIN_GATES
        .iter()
        .find(|(_, text)| text.parse::<Permutation>().is_ok_and(|p| &p == gate))
        .map(|(name, _)| *name)
}

fn qubit_count(size: usize) -> Result<usize> {
    if size.is_power_of_two() {
        Ok(size.trailing_zeros() as usize)
    } else {
        Err(Error::Wiring(format!(
            "gate dimension {size} is not a power of two"
        )))
    }
}

fn check_wires(wires: &[usize], n_wires: usize) -> Result<()> {
    for (i, &w) in wires.iter().enumerate() {
        if w >= n_wires {
            return Err(Error::Wiring(format!(
                "wire {w} out of range for {n_wires} wires"
            )));
        }
        if wires[..i].contains(&w) {
            return Err(Error::Wiring(format!("wire {w} used twice")));
        }
    }
    Ok(())
}

/// Lifts `gate` to an `n_wires` register acting on `wires`, fixing all other
/// bits.
pub fn embed(gate: &Permutation, wires: &[usize], n_wires: usize) -> Result<Permutation> {
    let k = qubit_count(gate.size())?;
    if wires.len() != k {
        return Err(Error::Wiring(format!(
            "a {k}-qubit gate needs {k} wires, got {}",
            wires.len()
        )));
    }
    check_wires(wires, n_wires)?;
    if n_wires >= usize::BITS as usize {
        return Err(Error::Wiring(format!(
            "{n_wires} wires overflow the index type"
        )));
    }
    let mask: usize = wires.iter().map(|&w| 1 << w).sum();
    let local = |x: usize| wires.iter().fold(0, |acc, &w| (acc << 1) | ((x >> w) & 1));
    let place = |y: usize| {
        wires
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &w)| acc | (((y >> (k - 1 - i)) & 1) << w))
    };
    let images = (0..1usize << n_wires)
        .map(|x| (x & !mask) | place(gate.apply(local(x))))
        .collect();
    Ok(Permutation::from_images_unchecked(images))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GateLabel {
    Builtin(&'static str),
    Inline,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GateInstance {
    label: GateLabel,
    gate: Permutation,
    wires: Vec<usize>,
}

impl GateInstance {
    pub fn builtin(name: &str, wires: &[usize]) -> Result<Self> {
        let (name, text) = BUILTIN_GATES
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::Wiring(format!("unknown gate {name}")))?;
        Self::checked(GateLabel::Builtin(name), text.parse()?, wires)
    }

    pub fn inline(gate: Permutation, wires: &[usize]) -> Result<Self> {
        Self::checked(GateLabel::Inline, gate, wires)
    }

    /// Uses the builtin label when `gate` equals a builtin, inline otherwise.
    pub fn labelled(gate: Permutation, wires: &[usize]) -> Result<Self> {
        let label = builtin_name(&gate).map_or(GateLabel::Inline, GateLabel::Builtin);
        Self::checked(label, gate, wires)
    }

    fn checked(label: GateLabel, gate: Permutation, wires: &[usize]) -> Result<Self> {
        let k = qubit_count(gate.size())?;
        if wires.len() != k {
            return Err(Error::Wiring(format!(
                "a {k}-qubit gate needs {k} wires, got {}",
                wires.len()
            )));
        }
        check_wires(wires, usize::MAX)?;
        Ok(GateInstance {
            label,
            gate,
            wires: wires.to_vec(),
        })
    }

    pub fn label(&self) -> &GateLabel {
        &self.label
    }

    pub fn gate(&self) -> &Permutation {
        &self.gate
    }

    pub fn wires(&self) -> &[usize] {
        &self.wires
    }

    pub fn arity(&self) -> usize {
        self.wires.len()
    }
}

impl fmt::Display for GateInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            GateLabel::Builtin(name) => write!(f, "gate {name}")?,
            GateLabel::Inline => write!(f, "perm {}", self.gate)?,
        }
        for w in &self.wires {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// Gates applied left to right on `n_wires` wires.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    n_wires: usize,
    gates: Vec<GateInstance>,
}

impl Circuit {
    pub fn new(n_wires: usize) -> Result<Self> {
        Self::with_cap(n_wires, SizeCap::Default)
    }

    pub fn with_cap(n_wires: usize, cap: SizeCap) -> Result<Self> {
        if n_wires == 0 {
            return Err(Error::InvalidArgument(
                "a circuit needs at least one wire".into(),
            ));
        }
        cap.check("circuit (wires)", n_wires, WIRE_CAP)?;
        Ok(Circuit {
            n_wires,
            gates: Vec::new(),
        })
    }

    pub fn from_gates(n_wires: usize, gates: Vec<GateInstance>) -> Result<Self> {
        let mut circuit = Circuit::new(n_wires)?;
        for g in gates {
            circuit.push(g)?;
        }
        Ok(circuit)
    }

    pub fn push(&mut self, instance: GateInstance) -> Result<()> {
        check_wires(&instance.wires, self.n_wires)?;
        self.gates.push(instance);
        Ok(())
    }

    /// Appends a builtin gate; shorthand for tests and examples.
    pub fn add(&mut self, name: &str, wires: &[usize]) -> Result<&mut Self> {
        self.push(GateInstance::builtin(name, wires)?)?;
        Ok(self)
    }

    pub fn n_wires(&self) -> usize {
        self.n_wires
    }

    pub fn gates(&self) -> &[GateInstance] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub(crate) fn replace_gates(&self, gates: Vec<GateInstance>) -> Circuit {
        Circuit {
            n_wires: self.n_wires,
            gates,
        }
    }

    /// The register permutation the circuit implements.
    pub fn permutation(&self) -> Permutation {
        let mut acc = Permutation::identity(1 << self.n_wires).expect("n_wires ≥ 1");
        for g in &self.gates {
            let lifted = embed(&g.gate, &g.wires, self.n_wires).expect("instances are validated");
            acc = lifted.compose(&acc).expect("same register");
        }
        acc
    }
}

pub fn circuit_permutation(c: &Circuit) -> Permutation {
    c.permutation()
}

/// First basis index on which the two circuits disagree.
pub fn first_difference(a: &Circuit, b: &Circuit) -> Result<Option<usize>> {
    if a.n_wires != b.n_wires {
        return Err(Error::DimensionMismatch {
            expected: a.n_wires,
            found: b.n_wires,
        });
    }
    let (pa, pb) = (a.permutation(), b.permutation());
    Ok((0..pa.size()).find(|&x| pa.apply(x) != pb.apply(x)))
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits {}", self.n_wires)?;
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for Circuit {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut circuit: Option<Circuit> = None;
        for (index, raw) in text.lines().enumerate() {
            let number = index + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some(current) = circuit.as_mut() else {
                let n = line
                    .strip_prefix("qubits")
                    .filter(|rest| rest.starts_with(char::is_whitespace))
                    .and_then(|rest| rest.trim().parse::<usize>().ok())
                    .ok_or_else(|| {
                        Error::at_line(number, format!("expected `qubits <n>`, got `{line}`"))
                    })?;
                circuit = Some(Circuit::new(n).map_err(|e| Error::at_line(number, e))?);
                continue;
            };
            let instance = parse_gate_line(line).map_err(|e| Error::at_line(number, e))?;
            current
                .push(instance)
                .map_err(|e| Error::at_line(number, e))?;
        }
        circuit.ok_or_else(|| Error::at_line(1, "missing `qubits <n>` header"))
    }
}

fn parse_gate_line(line: &str) -> Result<GateInstance> {
    let (keyword, rest) = line
        .split_once(char::is_whitespace)
        .ok_or_else(|| Error::parse(line, "expected `gate` or `perm` followed by wires"))?;
    let rest = rest.trim_start();
    match keyword {
        "gate" => {
            let (name, wires) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            if builtin_gate(name).is_none() {
                return Err(Error::parse(name, "unknown gate name"));
            }
            GateInstance::builtin(name, &parse_wires(wires)?)
        }
        "perm" => {
            let close = rest
                .find(')')
                .ok_or_else(|| Error::parse(rest, "missing `)` in permutation"))?;
            let gate: Permutation = rest[..=close].parse()?;
            GateInstance::inline(gate, &parse_wires(&rest[close + 1..])?)
        }
        other => Err(Error::parse(other, "expected `gate` or `perm`")),
    }
}

fn parse_wires(text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(t, "expected a wire index"))
        })
        .collect()
}
