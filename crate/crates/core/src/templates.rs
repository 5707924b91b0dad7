//! Identity templates over a gate library.
//!
//! A template is a gate sequence whose composition, applied left to right, is
//! the identity. Because the gates of a fixed basis pair form the symmetric
//! group, every row of the group multiplication table is a rearrangement of
//! the group. That gives `N` two-gate templates `(U, U⁻¹)` and, for each
//! template and position, `N` ways to split one gate into an ordered pair.
//!
//! Templates are compared up to cyclic rotation and up to reversal with every
//! gate inverted; [`TemplateStore`] keeps one representative per class.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::perm::Permutation;
use crate::{Error, Result, SizeCap};

/// Default library size cap for multiplication tables (`|S₆| = 720`).
pub const LIBRARY_CAP: usize = 720;

/// Default cap on the number of templates produced by [`generate_templates`].
pub const DEFAULT_TEMPLATE_BUDGET: usize = 250_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGate {
    pub name: String,
    pub gate: Permutation,
}

impl NamedGate {
    pub fn new(name: impl Into<String>, gate: Permutation) -> Self {
        NamedGate {
            name: name.into(),
            gate,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GateLibrary {
    dimension: usize,
    gates: Vec<NamedGate>,
    positions: HashMap<Permutation, usize>,
}

impl GateLibrary {
    /// Requires a nonempty list of distinct, uniquely named gates of one size.
    pub fn new(gates: Vec<NamedGate>) -> Result<Self> {
        let dimension = gates
            .first()
            .map(|g| g.gate.size())
            .ok_or_else(|| Error::InvalidArgument("gate library is empty".into()))?;
        let mut names = HashSet::new();
        let mut positions = HashMap::with_capacity(gates.len());
        for (index, named) in gates.iter().enumerate() {
            if named.gate.size() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: named.gate.size(),
                });
            }
            if !names.insert(named.name.as_str()) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate gate name {}",
                    named.name
                )));
            }
            if positions.insert(named.gate.clone(), index).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "gate {} repeats an earlier permutation {}",
                    named.name, named.gate
                )));
            }
        }
        Ok(GateLibrary {
            dimension,
            gates,
            positions,
        })
    }

    /// Like [`GateLibrary::new`] but also checks closure under composition.
    pub fn new_group(gates: Vec<NamedGate>) -> Result<Self> {
        let library = Self::new(gates)?;
        multiplication_table(&library, SizeCap::Override)?;
        Ok(library)
    }

    /// All of `S_m`, named by one-line notation, in lexicographic order.
    pub fn symmetric_group(m: usize, cap: SizeCap) -> Result<Self> {
        let gates = Permutation::enumerate(m, cap)?
            .map(|p| NamedGate::new(p.to_string(), p))
            .collect();
        Self::new(gates)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn gates(&self) -> &[NamedGate] {
        &self.gates
    }

    pub fn position(&self, gate: &Permutation) -> Option<usize> {
        self.positions.get(gate).copied()
    }

    fn require(&self, gate: &Permutation) -> Result<usize> {
        self.position(gate)
            .ok_or_else(|| Error::NotInLibrary(gate.to_string()))
    }
}

/// `products[g][h]` is the library index of `g ∘ h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationTable {
    order: usize,
    products: Vec<usize>,
}

impl MultiplicationTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn product(&self, g: usize, h: usize) -> usize {
        self.products[g * self.order + h]
    }

    pub fn row(&self, g: usize) -> &[usize] {
        &self.products[g * self.order..(g + 1) * self.order]
    }

    pub fn column(&self, h: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).map(move |g| self.product(g, h))
    }
}

pub fn multiplication_table(library: &GateLibrary, cap: SizeCap) -> Result<MultiplicationTable> {
    cap.check("gate library", library.len(), LIBRARY_CAP)?;
    let order = library.len();
    let mut products = Vec::with_capacity(order * order);
    for g in &library.gates {
        for h in &library.gates {
            let gh = g.gate.compose(&h.gate)?;
            let index = library.position(&gh).ok_or_else(|| {
                Error::ClosureViolation(format!("{} · {} = {gh} is missing", g.name, h.name))
            })?;
            products.push(index);
        }
    }
    Ok(MultiplicationTable { order, products })
}

/// A gate sequence meant to compose to the identity. Construction only checks
/// shape; use [`Template::verify`] for the identity property.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Template {
    sequence: Vec<Permutation>,
}

impl Template {
    pub fn new(sequence: Vec<Permutation>) -> Result<Self> {
        if sequence.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "a template needs at least two gates, got {}",
                sequence.len()
            )));
        }
        let dimension = sequence[0].size();
        if let Some(bad) = sequence.iter().find(|p| p.size() != dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                found: bad.size(),
            });
        }
        Ok(Template { sequence })
    }

    pub fn dimension(&self) -> usize {
        self.sequence[0].size()
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn gates(&self) -> &[Permutation] {
        &self.sequence
    }

    /// Composition with the leftmost gate applied first.
    pub fn product(&self) -> Permutation {
        compose_run(&self.sequence)
    }

    pub fn verify(&self) -> bool {
        self.product().is_identity()
    }

    /// Contains an identity gate, or (beyond two gates) a cyclically adjacent
    /// pair of mutual inverses.
    pub fn is_degenerate(&self) -> bool {
        if self.sequence.iter().any(Permutation::is_identity) {
            return true;
        }
        let n = self.len();
        n > 2
            && (0..n).any(|i| {
                let next = &self.sequence[(i + 1) % n];
                self.sequence[i]
                    .compose(next)
                    .is_ok_and(|p| p.is_identity())
            })
    }

    pub fn rotated(&self, shift: usize) -> Template {
        let mut sequence = self.sequence.clone();
        sequence.rotate_left(shift % self.len());
        Template { sequence }
    }

    /// The sequence reversed with every gate inverted; also an identity word.
    pub fn reversed_inverse(&self) -> Template {
        Template {
            sequence: self
                .sequence
                .iter()
                .rev()
                .map(Permutation::inverse)
                .collect(),
        }
    }

    /// Smallest member of the rotation/reversal class.
    pub fn canonical(&self) -> Template {
        let mirrored = self.reversed_inverse();
        (0..self.len())
            .flat_map(|k| [self.rotated(k), mirrored.rotated(k)])
            .min()
            .expect("templates are nonempty")
    }
}

fn compose_run(gates: &[Permutation]) -> Permutation {
    let mut acc = gates[0].clone();
    for g in &gates[1..] {
        acc = g.compose(&acc).expect("gates share a dimension");
    }
    acc
}

pub fn verify_template(t: &Template) -> bool {
    t.verify()
}

/// `(U, U⁻¹)` for every library gate, in library order. The identity entry
/// gives the degenerate `(I, I)`.
pub fn two_gate_templates(library: &GateLibrary) -> Result<Vec<Template>> {
    library
        .gates
        .iter()
        .map(|g| {
            let inverse = g.gate.inverse();
            library.position(&inverse).ok_or_else(|| {
                Error::ClosureViolation(format!("inverse {inverse} of {} is missing", g.name))
            })?;
            Template::new(vec![g.gate.clone(), inverse])
        })
        .collect()
}

/// Replace the gate at `position` by each ordered pair `(Uᵢ, Uⱼ)` with
/// `Uⱼ ∘ Uᵢ` equal to it, one pair per library element `Uᵢ`.
pub fn expand_template(
    template: &Template,
    position: usize,
    library: &GateLibrary,
) -> Result<Vec<Template>> {
    if position >= template.len() {
        return Err(Error::IndexOutOfRange {
            index: position,
            len: template.len(),
        });
    }
    if template.dimension() != library.dimension {
        return Err(Error::DimensionMismatch {
            expected: library.dimension,
            found: template.dimension(),
        });
    }
    let target = &template.sequence[position];
    library.require(target)?;
    library
        .gates
        .iter()
        .map(|first| {
            let second = target.compose(&first.gate.inverse())?;
            library.position(&second).ok_or_else(|| {
                Error::ClosureViolation(format!(
                    "{target} · {}⁻¹ = {second} is missing",
                    first.name
                ))
            })?;
            let mut sequence = Vec::with_capacity(template.len() + 1);
            sequence.extend_from_slice(&template.sequence[..position]);
            sequence.push(first.gate.clone());
            sequence.push(second);
            sequence.extend_from_slice(&template.sequence[position + 1..]);
            Template::new(sequence)
        })
        .collect()
}

/// Deduplicated set of verified templates of one dimension.
///
/// Iteration order is by length, then by canonical form. Each class keeps the
/// representative it was first inserted with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateStore {
    dimension: usize,
    templates: BTreeMap<(usize, Template), Template>,
}

impl TemplateStore {
    pub fn new(dimension: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidDimension(0));
        }
        Ok(TemplateStore {
            dimension,
            templates: BTreeMap::new(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.templates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.templates.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Template> {
        self.templates.values()
    }

    /// Whether some member of `t`'s class is stored.
    pub fn contains(&self, t: &Template) -> bool {
        self.templates.contains_key(&(t.len(), t.canonical()))
    }

    /// Inserts a verified template; returns false when its class is present.
    pub fn insert(&mut self, t: Template) -> Result<bool> {
        if t.dimension() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: t.dimension(),
            });
        }
        if !t.verify() {
            return Err(Error::InvalidArgument(format!(
                "template {} does not compose to the identity",
                render_sequence(&t)
            )));
        }
        let key = (t.len(), t.canonical());
        if self.templates.contains_key(&key) {
            return Ok(false);
        }
        self.templates.insert(key, t);
        Ok(true)
    }

    pub fn max_len(&self) -> usize {
        self.templates
            .keys()
            .map(|(len, _)| *len)
            .max()
            .unwrap_or(0)
    }
}

fn render_sequence(t: &Template) -> String {
    t.sequence
        .iter()
        .map(Permutation::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

impl fmt::Display for TemplateStore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "templates dim={}", self.dimension)?;
        for t in self.iter() {
            writeln!(f, "template: {}", render_sequence(t))?;
        }
        Ok(())
    }
}

impl FromStr for TemplateStore {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (_, header) = lines
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| Error::at_line(1, "missing `templates dim=<M>` header"))?;
        let dimension: usize = header
            .strip_prefix("templates dim=")
            .and_then(|d| d.trim().parse().ok())
            .ok_or_else(|| Error::at_line(1, format!("bad header `{header}`")))?;
        let mut store = TemplateStore::new(dimension).map_err(|e| Error::at_line(1, e))?;
        for (number, line) in lines {
            if line.is_empty() {
                continue;
            }
            let body = line.strip_prefix("template:").ok_or_else(|| {
                Error::at_line(number, format!("expected `template:`, got `{line}`"))
            })?;
            let sequence = body
                .split(';')
                .map(|p| p.trim().parse::<Permutation>())
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::at_line(number, e))?;
            let template = Template::new(sequence).map_err(|e| Error::at_line(number, e))?;
            store
                .insert(template)
                .map_err(|e| Error::at_line(number, e))?;
        }
        Ok(store)
    }
}

#[derive(Debug, Clone)]
pub struct TemplateGeneration {
    pub store: TemplateStore,
    /// Set when the budget stopped generation early.
    pub truncated: bool,
}

/// Breadth-first template generation up to `max_size` gates with the default
/// budget.
pub fn generate_templates(library: &GateLibrary, max_size: usize) -> Result<TemplateGeneration> {
    generate_templates_with_budget(library, max_size, DEFAULT_TEMPLATE_BUDGET)
}

/// Starts from the non-trivial `(U, U⁻¹)` pairs and expands every stored
/// template of length `k` at every position to reach length `k + 1`. Words
/// with an identity gate, a cyclically adjacent inverse pair, or a shorter
/// identity word as a contiguous cyclic factor are dropped.
pub fn generate_templates_with_budget(
    library: &GateLibrary,
    max_size: usize,
    budget: usize,
) -> Result<TemplateGeneration> {
    if !(2..=6).contains(&max_size) {
        return Err(Error::InvalidArgument(format!(
            "max template size {max_size} is outside 2..=6"
        )));
    }
    let table = multiplication_table(library, SizeCap::Default)?;
    let identity = Permutation::identity(library.dimension)?;
    let identity_index = library.require(&identity)?;
    let inverse: Vec<usize> = (0..table.order())
        .map(|g| {
            table
                .row(g)
                .iter()
                .position(|&p| p == identity_index)
                .expect("group elements have inverses")
        })
        .collect();
    let words = WordOps {
        table: &table,
        inverse: &inverse,
        identity: identity_index,
    };

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut levels: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut truncated = false;

    let mut level: Vec<Vec<usize>> = Vec::new();
    for (g, &g_inverse) in inverse.iter().enumerate() {
        if g == identity_index {
            continue;
        }
        let word = vec![g, g_inverse];
        if seen.insert(words.canonical(&word)) {
            level.push(word);
        }
    }
    levels.push(level);

    'grow: for _ in 3..=max_size {
        let mut next = Vec::new();
        for word in levels.last().expect("at least one level") {
            for position in 0..word.len() {
                let target = word[position];
                for (first, &first_inverse) in inverse.iter().enumerate() {
                    let second = table.product(target, first_inverse);
                    let mut candidate = Vec::with_capacity(word.len() + 1);
                    candidate.extend_from_slice(&word[..position]);
                    candidate.push(first);
                    candidate.push(second);
                    candidate.extend_from_slice(&word[position + 1..]);
                    if !words.is_minimal(&candidate) {
                        continue;
                    }
                    if seen.len() >= budget {
                        truncated = true;
                        levels.push(next);
                        break 'grow;
                    }
                    if seen.insert(words.canonical(&candidate)) {
                        next.push(candidate);
                    }
                }
            }
        }
        levels.push(next);
    }

    let mut store = TemplateStore::new(library.dimension)?;
    for word in levels.iter().flatten() {
        let sequence = word
            .iter()
            .map(|&g| library.gates[g].gate.clone())
            .collect();
        store.insert(Template::new(sequence)?.canonical())?;
    }
    Ok(TemplateGeneration { store, truncated })
}

struct WordOps<'a> {
    table: &'a MultiplicationTable,
    inverse: &'a [usize],
    identity: usize,
}

impl WordOps<'_> {
    /// No identity gate and no proper cyclic factor composing to the identity.
    /// A factor of length `len − 1` would leave an identity gate, so factors up
    /// to `len − 2` suffice.
    fn is_minimal(&self, word: &[usize]) -> bool {
        let n = word.len();
        if word.contains(&self.identity) {
            return false;
        }
        for start in 0..n {
            let mut acc = word[start];
            for len in 2..n - 1 {
                acc = self.table.product(word[(start + len - 1) % n], acc);
                if acc == self.identity {
                    return false;
                }
            }
        }
        true
    }

    fn canonical(&self, word: &[usize]) -> Vec<usize> {
        let mirrored: Vec<usize> = word.iter().rev().map(|&g| self.inverse[g]).collect();
        let mut best = word.to_vec();
        for base in [word, mirrored.as_slice()] {
            for shift in 0..base.len() {
                let mut candidate = base.to_vec();
                candidate.rotate_left(shift);
                if candidate < best {
                    best = candidate;
                }
            }
        }
        best
    }
}
