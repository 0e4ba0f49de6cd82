use std::collections::BTreeSet;

use proptest::prelude::*;
use qtest_core::boolfunc::{
    classify, from_parity_form, generate_functions, is_admissible, is_invariant_under,
    to_parity_form, FunctionClass, ParityForm, TruthTable,
};
use qtest_core::BitString;

fn affine_set(n: usize) -> BTreeSet<TruthTable> {
    let mut set = BTreeSet::new();
    for mask in 0..1u64 << n {
        for c in [false, true] {
            let pf = ParityForm::new(BitString::new(n, mask).unwrap(), c).unwrap();
            set.insert(from_parity_form(&pf));
        }
    }
    set
}

/// Direct affine evaluation, independent of `ParityForm`.
fn affine_table(n: usize, mask: u64, c: bool) -> TruthTable {
    TruthTable::from_fn(n, |x| c ^ ((x & mask).count_ones() % 2 == 1)).unwrap()
}

#[test]
fn generated_count_and_set_match_affine_family() {
    for n in 1..=8 {
        let (pos, neg) = generate_functions(n).unwrap();
        assert_eq!(pos.len(), 1 << n);
        assert_eq!(neg.len(), 1 << n);
        let generated: BTreeSet<_> = pos.iter().chain(&neg).cloned().collect();
        assert_eq!(generated.len(), 1 << (n + 1), "n={n}");
        assert_eq!(generated, affine_set(n), "n={n}");
        assert!(pos.iter().all(|t| !t.leading_bit()));
        assert!(neg.iter().all(|t| t.leading_bit()));
    }
}

#[test]
fn admissibility_matches_affine_existence_exhaustively() {
    for n in 1..=4usize {
        let len = 1usize << n;
        let affine: BTreeSet<TruthTable> = (0..1u64 << n)
            .flat_map(|m| [affine_table(n, m, false), affine_table(n, m, true)])
            .collect();
        let mut admissible = 0;
        for value in 0..1u64 << len {
            let tt = TruthTable::from_value(n, value).unwrap();
            let adm = is_admissible(&tt);
            assert_eq!(adm, affine.contains(&tt), "{tt}");
            assert_eq!(adm, to_parity_form(&tt).is_ok(), "{tt}");
            admissible += adm as usize;
        }
        assert_eq!(admissible, 1 << (n + 1));
    }
}

#[test]
fn each_level_is_previous_level_with_itself_or_mirror() {
    for n in 1..8 {
        let (pos, neg) = generate_functions(n).unwrap();
        let previous: BTreeSet<_> = pos.iter().chain(&neg).cloned().collect();
        let (next_pos, _) = generate_functions(n + 1).unwrap();
        for t in &next_pos {
            let half = t.len() / 2;
            let lo = TruthTable::new(n, t.bits()[..half].to_vec()).unwrap();
            let hi = TruthTable::new(n, t.bits()[half..].to_vec()).unwrap();
            assert!(previous.contains(&lo));
            assert!(hi == lo || hi == lo.complement(), "{t}");
        }
        // the mirror in the sorted list is the complement
        let sorted: Vec<_> = previous.iter().collect();
        for (i, t) in sorted.iter().enumerate() {
            assert_eq!(*sorted[sorted.len() - 1 - i], t.complement());
        }
    }
}

#[test]
fn complement_swaps_positive_and_negative() {
    for n in 1..=5 {
        let (pos, neg) = generate_functions(n).unwrap();
        for t in pos.iter().chain(&neg) {
            let want = match classify(t) {
                FunctionClass::Positive => FunctionClass::Negative,
                FunctionClass::Negative => FunctionClass::Positive,
                FunctionClass::NotAdmissible => unreachable!(),
            };
            assert_eq!(classify(&t.complement()), want);
        }
    }
}

#[test]
fn invariance_agrees_with_mask_shortcut() {
    for n in 1..=4 {
        let (pos, neg) = generate_functions(n).unwrap();
        for t in pos.iter().chain(&neg) {
            let pf = to_parity_form(t).unwrap();
            for d in 0..1u64 << n {
                let delta = BitString::new(n, d).unwrap();
                assert_eq!(
                    is_invariant_under(t, &delta).unwrap(),
                    pf.is_invariant_under(&delta).unwrap(),
                    "{t} delta={delta}"
                );
            }
        }
    }
}

proptest! {
    #[test]
    fn parity_form_round_trip(n in 1usize..=10, mask in any::<u64>(), c in any::<bool>()) {
        let mask = mask & ((1u64 << n) - 1);
        let pf = ParityForm::new(BitString::new(n, mask).unwrap(), c).unwrap();
        let tt = from_parity_form(&pf);
        prop_assert_eq!(tt.clone(), affine_table(n, mask, c));
        prop_assert_eq!(to_parity_form(&tt).unwrap(), pf);
        prop_assert_eq!(pf.complement(), tt.leading_bit());
    }

    #[test]
    fn hex_round_trip(n in 1usize..=8, seed in any::<u64>()) {
        let tt = TruthTable::from_fn(n, |i| (seed.rotate_left(i as u32 % 64) ^ i) & 1 == 1).unwrap();
        let hex = tt.to_hex();
        prop_assert_eq!(qtest_core::boolfunc::hex_decode(&hex, n).unwrap(), tt.clone());
        prop_assert_eq!(qtest_core::boolfunc::hex_decode(&format!("${hex}"), n).unwrap(), tt);
    }
}
