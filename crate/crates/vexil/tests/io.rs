use proptest::prelude::*;
use vexil::gamma::{q_lambda, GammaElement, StrictPartition};
use vexil::io::{gamma_from_json, gamma_to_json, render_schubert, OutputFormat, SchubertDocument};
use vexil::polycore::{h, x, y, Dyadic, Monomial, Polynomial};
use vexil::schubert::schubert;
use vexil::WeylType;

fn element() -> impl Strategy<Value = GammaElement> {
    let vars = [x(1), x(2), y(1), h(1)];
    let term = (
        proptest::collection::btree_set(1u32..6, 0..3),
        proptest::collection::vec((0usize..4, -2i32..3), 0..3),
        any::<i64>(),
        0u32..5,
    );
    proptest::collection::vec(term, 0..5).prop_map(move |terms| {
        let mut e = GammaElement::zero();
        for (parts, mono, num, den) in terms {
            let lambda = StrictPartition::from_unsorted(parts.into_iter().collect()).unwrap();
            let m = Monomial::from_pairs(mono.into_iter().map(|(i, e)| (vars[i], e)));
            e = &e + &q_lambda(&lambda).scale(&Polynomial::term(m, Dyadic::new(num, den)));
        }
        e
    })
}

proptest! {
    #[test]
    fn json_round_trip(e in element()) {
        let text = gamma_to_json(&e);
        prop_assert_eq!(gamma_from_json(&text).unwrap(), e.clone());
        prop_assert_eq!(gamma_to_json(&e), text);
    }
}

#[test]
fn schubert_documents() {
    let s = schubert(&"-2 1".parse().unwrap(), WeylType::C, 2).unwrap();
    let text = render_schubert(&s, OutputFormat::Json);
    let doc: SchubertDocument = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.to_schubert().unwrap(), s);
    assert_eq!(render_schubert(&s, OutputFormat::Json), text);
}
