use proptest::prelude::*;

use permgate::circuit::{embed, Circuit, GateInstance, BUILTIN_GATES};
use permgate::classify::{is_hermitian, is_separable, tensor, Bipartition};
use permgate::optimizer::{cancel_adjacent_inverses, optimize, template_rewrite, DEFAULT_BUDGET};
use permgate::templates::{generate_templates, GateLibrary, TemplateStore};
use permgate::{Permutation, SizeCap};

fn permutation(size: usize) -> impl Strategy<Value = Permutation> {
    Just((0..size).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn same_size_pair() -> impl Strategy<Value = (Permutation, Permutation)> {
    (1usize..10).prop_flat_map(|m| (permutation(m), permutation(m)))
}

fn instance(n_wires: usize) -> impl Strategy<Value = GateInstance> {
    let builtins: Vec<&'static str> = BUILTIN_GATES
        .iter()
        .map(|(name, _)| *name)
        .filter(|name| {
            let arity = permgate::circuit::builtin_gate(name)
                .unwrap()
                .size()
                .trailing_zeros();
            arity as usize <= n_wires
        })
        .collect();
    let named = (
        prop::sample::select(builtins),
        Just((0..n_wires).collect::<Vec<_>>()).prop_shuffle(),
    )
        .prop_map(|(name, wires)| {
            let arity = permgate::circuit::builtin_gate(name)
                .unwrap()
                .size()
                .trailing_zeros();
            GateInstance::builtin(name, &wires[..arity as usize]).unwrap()
        });
    let inline = (1..=n_wires.min(2))
        .prop_flat_map(move |k| {
            (
                permutation(1 << k),
                Just((0..n_wires).collect::<Vec<_>>()).prop_shuffle(),
                Just(k),
            )
        })
        .prop_map(|(gate, wires, k)| GateInstance::inline(gate, &wires[..k]).unwrap());
    prop_oneof![named, inline]
}

fn circuit() -> impl Strategy<Value = Circuit> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(instance(n), 0..=20)
            .prop_map(move |gates| Circuit::from_gates(n, gates).unwrap())
    })
}

fn s4_store() -> TemplateStore {
    let lib = GateLibrary::symmetric_group(4, SizeCap::Default).unwrap();
    generate_templates(&lib, 3).unwrap().store
}

proptest! {
    #[test]
    fn inverse_reverses_composition((p, q) in same_size_pair()) {
        let lhs = p.compose(&q).unwrap().inverse();
        let rhs = q.inverse().compose(&p.inverse()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn matrix_of_inverse_is_transpose(p in (1usize..10).prop_flat_map(permutation)) {
        let m = p.to_matrix();
        prop_assert_eq!(p.inverse().to_matrix(), m.transpose());
        prop_assert!(m.is_unitary());
        prop_assert_eq!(m.is_symmetric(), p.is_involution());
        prop_assert_eq!(p.is_involution(), p == p.inverse());
    }

    #[test]
    fn one_line_round_trip(p in (1usize..12).prop_flat_map(permutation)) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Permutation>().unwrap(), p.clone());
        let spaced = text.replace(',', ", ");
        prop_assert_eq!(spaced.parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn separable_factors_rebuild_the_gate(
        a in permutation(2),
        b in permutation(4),
        mask in 1usize..7,
    ) {
        // Any bipartition of three wires with |A| = 1 or 2; pick factor sizes to fit.
        let split = Bipartition::new(3, &(0..3).filter(|w| mask & (1 << w) != 0).collect::<Vec<_>>()).unwrap();
        let (fa, fb) = if split.block_a().len() == 1 { (a, b) } else { (b, a) };
        let gate = tensor(&split, &fa, &fb).unwrap();
        prop_assert_eq!(is_separable(&gate, &split).unwrap(), Some((fa.clone(), fb.clone())));
        prop_assert_eq!(is_hermitian(&gate), fa.is_involution() && fb.is_involution());
    }

    #[test]
    fn embedding_is_a_homomorphism(
        g in permutation(4),
        h in permutation(4),
        wires in Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
    ) {
        let w = &wires[..2];
        let lhs = embed(&g.compose(&h).unwrap(), w, 4).unwrap();
        let rhs = embed(&g, w, 4).unwrap().compose(&embed(&h, w, 4).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn disjoint_gates_commute(g in permutation(4), h in permutation(2), order in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        let first = GateInstance::inline(g, &order[..2]).unwrap();
        let second = GateInstance::inline(h, &order[2..]).unwrap();
        let ab = Circuit::from_gates(3, vec![first.clone(), second.clone()]).unwrap();
        let ba = Circuit::from_gates(3, vec![second, first]).unwrap();
        prop_assert_eq!(ab.permutation(), ba.permutation());
    }

    #[test]
    fn circuit_text_round_trip(c in circuit()) {
        let text = c.to_string();
        let parsed: Circuit = text.parse().unwrap();
        prop_assert_eq!(parsed.permutation(), c.permutation());
        prop_assert_eq!(parsed.to_string(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn passes_preserve_semantics_and_never_grow(c in circuit()) {
        let store = s4_store();
        let before = c.permutation();

        let cancelled = cancel_adjacent_inverses(&c);
        prop_assert_eq!(cancelled.permutation(), before.clone());
        prop_assert!(cancelled.len() <= c.len());

        if c.n_wires() >= 2 {
            let rewritten = template_rewrite(&c, &store, DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(rewritten.permutation(), before.clone());
            prop_assert!(rewritten.len() <= c.len());
        }

        let empty = TemplateStore::new(2).unwrap();
        let active = if c.n_wires() >= 2 { &store } else { &empty };
        let (optimized, report) = optimize(&c, active, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(optimized.permutation(), before);
        prop_assert!(optimized.len() <= c.len());
        prop_assert_eq!(report.gates_after, optimized.len());

        let (again, _) = optimize(&optimized, active, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(again, optimized.clone());

        // Deterministic.
        let (twice, _) = optimize(&c, active, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(twice, optimized);
    }
}
