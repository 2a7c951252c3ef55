use proptest::prelude::*;

use gammoid_lab::bimaze::{mpt_decide, MptAnswer};
use gammoid_lab::dimaze::{link, LinkOutcome};
use gammoid_lab::duality::{to_bimaze, to_dimaze};
use gammoid_lab::io::{emit, parse, BimazeDoc, DimazeDoc};
use gammoid_lab::random::{random_dimaze, rng};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn link_certificates_check_out(seed in any::<u64>(), n in 1usize..9, mask in any::<u16>()) {
        let d = random_dimaze(&mut rng(seed), n, 0.3, 0.7);
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        match link(&d, &set).unwrap() {
            LinkOutcome::Linked(p) => {
                p.validate(&d, true).unwrap();
                let mut ini = p.initials();
                ini.sort_unstable();
                prop_assert_eq!(ini, set);
            }
            LinkOutcome::Separated { partial, separator } => {
                partial.validate(&d, true).unwrap();
                prop_assert!(separator.vertices.len() < set.len());
                prop_assert!(gammoid_lab::dimaze::separates(&d, &set, &separator.vertices));
            }
        }
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), n in 1usize..9) {
        let d = random_dimaze(&mut rng(seed), n, 0.3, 0.7);
        let text = emit(&DimazeDoc::from_dimaze(&d)).unwrap();
        let back: DimazeDoc = parse(&text, "dimaze").unwrap();
        prop_assert_eq!(back.to_dimaze().unwrap(), d.clone());

        let b = to_bimaze(&d).unwrap().bimaze;
        let text = emit(&BimazeDoc::from_bimaze(&b)).unwrap();
        let back: BimazeDoc = parse(&text, "bimaze").unwrap();
        prop_assert_eq!(back.to_bimaze().unwrap(), b.clone());
        prop_assert_eq!(to_dimaze(&b).unwrap().0, d);
    }

    #[test]
    fn linkable_iff_matchable_complement(seed in any::<u64>(), n in 1usize..8, mask in any::<u8>()) {
        // X is linkable onto the exits exactly when V∖X is m0-matchable onto the right class.
        let d = random_dimaze(&mut rng(seed), n, 0.35, 0.8);
        let b = to_bimaze(&d).unwrap().bimaze;
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let onto = match link(&d, &set).unwrap() {
            LinkOutcome::Linked(p) => {
                let mut t = p.terminals();
                t.sort_unstable();
                t == d.exits()
            }
            LinkOutcome::Separated { .. } => false,
        };
        let rest: Vec<usize> = (0..n).filter(|i| !set.contains(i)).collect();
        let matchable = rest.len() == b.graph.right_len() && matches!(mpt_decide(&b, &rest), MptAnswer::Yes(_));
        prop_assert_eq!(onto, matchable);
    }
}
