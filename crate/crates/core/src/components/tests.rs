use std::sync::Arc;

use super::*;
use crate::linalg::Rationals;
use crate::quiver::examples::*;

fn seq(layers: &[&[usize]]) -> SemisimpleSequence {
    SemisimpleSequence::new(layers.iter().map(|l| l.to_vec()).collect())
}

fn local(dims: &[usize]) -> SemisimpleSequence {
    SemisimpleSequence::local(dims)
}

fn q() -> Rationals {
    Rationals::default()
}

#[test]
fn generic_module_has_requested_layering() {
    let quiver = Arc::new(alpha_beta_beta());
    let s3 = seq(&[&[0, 1], &[2, 0], &[0, 1]]);
    let g = generic_module(&quiver, 3, &s3, q(), 1).unwrap();
    let (rad, soc) = g.theta();
    assert_eq!(rad, s3);
    // alpha maps the two middle vectors at 1 onto one line, so its
    // kernel is in the socle
    assert_eq!(soc, seq(&[&[1, 1], &[1, 0], &[0, 1]]));
}

#[test]
fn two_loops_generic_module_is_uniserial() {
    let quiver = Arc::new(loops(2));
    let s = local(&[1, 1, 1]);
    let g = generic_module(&quiver, 3, &s, q(), 5).unwrap();
    assert_eq!(g.radical_layering(), s);
    assert_eq!(g.socle_layering(), s);
}

#[test]
fn unrealizable_sequences_are_rejected() {
    let quiver = Arc::new(loops(2));
    assert!(generic_module(&quiver, 2, &local(&[1, 3]), q(), 0).is_err());
}

#[test]
fn radical_filtration_is_found() {
    let quiver = Arc::new(alpha_beta_beta());
    let f = PrimeField::new(101).unwrap();
    let s = seq(&[&[1, 1], &[1, 0], &[0, 1]]);
    let g = generic_module(&quiver, 3, &s, f, 2).unwrap();
    let v = has_governed_filtration(&g, &s, &SearchMode::Exhaustive).unwrap();
    match v {
        Verdict3::Yes {
            witness: Witness::Filtration(w),
        } => assert!(w.verify(&g).unwrap()),
        other => panic!("expected a witness, got {other:?}"),
    }
}

#[test]
fn example_2_8_g1_has_an_s3_filtration() {
    // G_1 = (1 -alpha-> 2) ⊕ (2 -beta1,beta2-> 1): radical layering (S1⊕S2, S1⊕S2, 0)
    let quiver = Arc::new(alpha_beta_beta());
    let f = PrimeField::new(101).unwrap();
    let s1 = seq(&[&[1, 1], &[1, 1], &[0, 0]]);
    let s3 = seq(&[&[0, 1], &[2, 0], &[0, 1]]);
    let g1 = generic_module(&quiver, 3, &s1, f.clone(), 3).unwrap();
    let v = has_governed_filtration(&g1, &s3, &SearchMode::Exhaustive).unwrap();
    assert!(v.is_yes());
    // and the same sequence does not govern the generic module of S^(6)
    let s6 = seq(&[&[1, 1], &[0, 1], &[1, 0]]);
    let g6 = generic_module(&quiver, 3, &s6, f, 3).unwrap();
    assert_eq!(
        has_governed_filtration(&g6, &s3, &SearchMode::Exhaustive).unwrap(),
        Verdict3::NoExhaustive
    );
}

#[test]
fn replay_mode_over_the_rationals() {
    let quiver = Arc::new(alpha_beta_beta());
    let s1 = seq(&[&[1, 1], &[1, 1], &[0, 0]]);
    let s3 = seq(&[&[0, 1], &[2, 0], &[0, 1]]);
    let g1 = generic_module(&quiver, 3, &s1, q(), 3).unwrap();
    assert!(
        has_governed_filtration(&g1, &s3, &SearchMode::replay_default())
            .unwrap()
            .is_yes()
    );
    assert!(has_governed_filtration(&g1, &s3, &SearchMode::Exhaustive).is_err());
    let bad = seq(&[&[1, 1], &[1, 0]]);
    assert!(has_governed_filtration(&g1, &bad, &SearchMode::replay_default()).is_err());
}

#[test]
fn gamma_values() {
    let quiver = Arc::new(two_cycle());
    let f = PrimeField::new(2).unwrap();
    let simple = Representation::simple(f.clone(), quiver.clone(), 2, 0);
    assert_eq!(
        gamma(&simple, &SearchMode::Exhaustive).unwrap(),
        Gamma {
            value: 1,
            exact: true
        }
    );
    // S1 ⊕ S2: governed by (S1⊕S2, 0), (S1, S2) and (S2, S1)
    let ss = Representation::semisimple(f, quiver, 2, &[1, 1]);
    assert_eq!(
        gamma(&ss, &SearchMode::Exhaustive).unwrap(),
        Gamma {
            value: 3,
            exact: true
        }
    );
}

#[test]
fn gamma_of_generic_component_module_is_one() {
    let quiver = Arc::new(alpha_beta_beta());
    let f = PrimeField::new(101).unwrap();
    let s3 = seq(&[&[0, 1], &[2, 0], &[0, 1]]);
    let g = generic_module(&quiver, 3, &s3, f, 4).unwrap();
    assert_eq!(
        gamma(&g, &SearchMode::Exhaustive).unwrap(),
        Gamma {
            value: 1,
            exact: true
        }
    );
}

fn count_components(quiver: Quiver, l: usize, d: &[usize]) -> usize {
    component_sequences(&Arc::new(quiver), l, d, &q(), &ComponentConfig::default())
        .unwrap()
        .len()
}

#[test]
fn observation_2_1_counts() {
    assert_eq!(count_components(two_cycle(), 2, &[1, 1]), 2);
    for l in 2..=4 {
        assert_eq!(count_components(oriented_cycle(l), l, &vec![1; l]), l);
    }
}

#[test]
fn example_2_8_components() {
    let quiver = Arc::new(alpha_beta_beta());
    let cfg = ComponentConfig::default();
    let c3 = component_sequences(&quiver, 3, &[2, 2], &q(), &cfg).unwrap();
    let mut expect3 = vec![
        seq(&[&[0, 1], &[2, 0], &[0, 1]]),
        seq(&[&[2, 0], &[0, 2], &[0, 0]]),
        seq(&[&[0, 2], &[2, 0], &[0, 0]]),
        seq(&[&[1, 1], &[0, 1], &[1, 0]]),
    ];
    let mut got = c3.clone();
    got.sort();
    expect3.sort();
    assert_eq!(got, expect3);
    let c4 = component_sequences(&quiver, 4, &[2, 2], &q(), &cfg).unwrap();
    let mut got = c4;
    got.sort();
    let mut expect4 = vec![
        seq(&[&[1, 0], &[0, 1], &[1, 0], &[0, 1]]),
        seq(&[&[0, 1], &[1, 0], &[0, 1], &[1, 0]]),
    ];
    expect4.sort();
    assert_eq!(got, expect4);
}

#[test]
fn containment_examples() {
    let quiver = Arc::new(loops(2));
    let cfg = ComponentConfig::default();
    let d2 = local(&[2, 1, 2]);
    let d3 = local(&[2, 2, 1]);
    let e2 = local(&[1, 1, 2, 1]);
    let e3 = local(&[1, 2, 1, 1]);
    assert!(containment(&quiver, &d2, &d2, &q(), &cfg).unwrap().is_yes());
    assert!(containment(&quiver, &d3, &e3, &q(), &cfg).unwrap().is_yes());
    assert_eq!(
        containment(&quiver, &d2, &e2, &q(), &cfg).unwrap(),
        Verdict3::NoMonteCarlo { trials: 3 }
    );
    assert!(containment(&quiver, &e2, &d2, &q(), &cfg).is_err());
}

#[test]
fn exhaustive_mode_agrees_on_example_2_8() {
    let quiver = Arc::new(alpha_beta_beta());
    let exhaustive = ComponentConfig {
        mode: DecisionMode::Exhaustive { p: 101 },
        ..ComponentConfig::default()
    };
    let f = PrimeField::new(101).unwrap();
    let rank = ComponentConfig::default();
    let l3 = realizable_sequences(&quiver, &[2, 2], 3);
    let l4 = realizable_sequences(&quiver, &[2, 2], 4);
    for s in &l3 {
        for t in l4
            .iter()
            .filter(|t| dominance_leq(t, &s.with_len(4).unwrap()).unwrap())
        {
            let a = containment(&quiver, s, t, &f, &exhaustive).unwrap();
            let b = containment(&quiver, s, t, &q(), &rank).unwrap();
            assert_eq!(a.is_yes(), b.is_yes(), "{s} in {t}: {a:?} vs {b:?}");
        }
    }
}

#[test]
fn local_formula_examples() {
    let sets = |l| local_components(2, 5, l).unwrap();
    assert_eq!(sets(2), vec![local(&[3, 2]), local(&[2, 3])]);
    assert_eq!(
        sets(3),
        vec![local(&[2, 2, 1]), local(&[2, 1, 2]), local(&[1, 2, 2])]
    );
    assert_eq!(sets(4).len(), 4);
    assert_eq!(sets(5), vec![local(&[1, 1, 1, 1, 1])]);
    assert_eq!(local_components(2, 3, 3).unwrap(), vec![local(&[1, 1, 1])]);
    assert_eq!(local_components(3, 2, 2).unwrap(), vec![local(&[1, 1])]);
    assert!(local_components(1, 2, 2).is_err());
}

#[test]
fn local_formula_matches_classification() {
    for r in [2, 3] {
        let quiver = Arc::new(loops(r));
        for d in 1..=4 {
            for l in 1..=4 {
                let mut a = local_components(r, d, l).unwrap();
                let mut b =
                    component_sequences(&quiver, l, &[d], &q(), &ComponentConfig::default())
                        .unwrap()
                        .into_iter()
                        .map(|s| {
                            SemisimpleSequence::local(
                                &s.layers()
                                    .iter()
                                    .map(|x| x[0])
                                    .filter(|&x| x > 0)
                                    .collect::<Vec<_>>(),
                            )
                        })
                        .collect::<Vec<_>>();
                a.sort();
                b.sort();
                assert_eq!(a, b, "r={r} d={d} L={l}");
            }
        }
    }
}

#[test]
fn reports_serialize() {
    let quiver = Arc::new(two_cycle());
    let reports =
        classify_components(&quiver, 2, &[1, 1], &q(), &ComponentConfig::default()).unwrap();
    let j = serde_json::to_value(&reports).unwrap();
    assert_eq!(j.as_array().unwrap().len(), 3);
    for r in j.as_array().unwrap() {
        for key in [
            "sequence",
            "is_component",
            "evidence",
            "theta",
            "field",
            "seed",
            "mode",
        ] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
}
