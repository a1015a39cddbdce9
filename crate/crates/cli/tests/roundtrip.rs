use proptest::prelude::*;

use veronese_cli::document::{ComplexEntry, FatPointsEntry, GeneratorEntry, RingSpec, VeroneseEntry};
use veronese_cli::{parse_document, IdealDocument, Payload};

fn arb_ring() -> impl Strategy<Value = RingSpec> {
    (prop::collection::vec(2usize..=3, 1..=3), any::<bool>()).prop_map(|(blocks, named)| {
        let n: usize = blocks.iter().sum();
        RingSpec {
            names: named.then(|| (0..n).map(|i| format!("v{i}")).collect()),
            blocks,
        }
    })
}

fn arb_payload(ring: &RingSpec) -> BoxedStrategy<Payload> {
    let n: usize = ring.blocks.iter().sum();
    let min_block = *ring.blocks.iter().min().unwrap();
    let names: Vec<String> = match &ring.names {
        Some(names) => names.clone(),
        None => (1..=n).map(|i| format!("x{i}")).collect(),
    };
    let veronese = prop::collection::vec(
        (prop::collection::btree_set(1..=n, 1..=n), 1u32..=3)
            .prop_map(|(s, power)| VeroneseEntry { support: s.into_iter().collect(), power }),
        1..=3,
    )
    .prop_map(Payload::Veronese);
    let exps = prop::collection::vec(0u32..=2, n).prop_map(GeneratorEntry::Exponents);
    let text = prop::collection::vec((0..n, 1u32..=3), 1..=3).prop_map(move |factors| {
        let parts: Vec<String> = factors.iter().map(|(v, e)| format!("{}^{e}", names[*v])).collect();
        GeneratorEntry::Text(parts.join("*"))
    });
    let generators = prop::collection::vec(prop_oneof![exps, text], 1..=4).prop_map(Payload::Generators);
    let fat = prop::collection::vec(1u32..=3, 1..=min_block).prop_map(|mults| Payload::FatPoints(FatPointsEntry { mults }));
    // a single nonface is always an antichain
    let complex = prop::collection::btree_set(1..=n, 1..=n)
        .prop_map(|f| Payload::Complex(ComplexEntry { nonfaces: vec![f.into_iter().collect()] }));
    prop_oneof![veronese, generators, fat, complex].boxed()
}

fn arb_document() -> impl Strategy<Value = IdealDocument> {
    arb_ring().prop_flat_map(|ring| {
        let r = ring.clone();
        arb_payload(&ring).prop_map(move |payload| IdealDocument { ring: r.clone(), payload })
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(doc in arb_document()) {
        let parsed = parse_document(&doc.to_json()).unwrap();
        prop_assert_eq!(&parsed, &doc);
        prop_assert_eq!(parsed.to_json(), doc.to_json());
    }
}
