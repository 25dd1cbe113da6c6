use proptest::prelude::*;
use qck_core::torus::{mutate_l, mutate_quantum_seed, Sign};
use qck_core::weyl::longest_element;
use qck_core::{CartanDatum, MutationState, QuantumSeed, ReducedWordData};

fn seed_for(name: &str, pick: usize) -> (CartanDatum, QuantumSeed) {
    let c = CartanDatum::by_name(name).unwrap();
    let words = longest_element(&c, 1000).unwrap().reduced_words(&c);
    let w = &words[pick % words.len()];
    let rwd = ReducedWordData::new(&c, w.letters()).unwrap();
    let s = QuantumSeed::from_word(&c, &rwd);
    (c, s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_sequences_stay_compatible(pick in 0usize..1000, seq in prop::collection::vec(0usize..16, 0..8), big in any::<bool>()) {
        let (c, s) = seed_for(if big { "A4" } else { "A3" }, pick);
        let mut state = MutationState::new(s.clone());
        for r in seq {
            let ex = state.seed().exchangeable.clone();
            let k = ex[r % ex.len()];
            let before = state.seed().clone();
            let plus = mutate_l(&before.l, &before.b, &before.exchangeable, k, Sign::Plus).unwrap();
            let minus = mutate_l(&before.l, &before.b, &before.exchangeable, k, Sign::Minus).unwrap();
            prop_assert_eq!(&plus, &minus);
            let back = mutate_quantum_seed(&mutate_quantum_seed(&before, k).unwrap(), k).unwrap();
            prop_assert_eq!(&back, &before);
            state.mutate(&c, k).unwrap();
            let cond = state.seed().check(&c);
            prop_assert!(cond.compatibility.is_none(), "{:?}", cond.compatibility);
            prop_assert!(cond.skew_symmetry.is_none());
            prop_assert_eq!(state.check_commutation().unwrap(), None);
        }
        while !state.history().is_empty() {
            state.undo().unwrap();
        }
        prop_assert_eq!(state, MutationState::new(s));
    }
}
