use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use truncpath::components::generic_module;
use truncpath::ssq::realizable_sequences;
use truncpath::{Field, Matrix, PrimeField, Quiver, Rat, Rationals, Subspace};

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn arb_quiver(max_n: usize, max_arrows: usize) -> impl Strategy<Value = Quiver> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((1..=n, 1..=n), 0..=max_arrows).prop_map(move |pairs| {
            let ids: Vec<String> = (0..pairs.len()).map(|k| format!("a{k}")).collect();
            let arrows: Vec<(&str, usize, usize)> = pairs
                .iter()
                .zip(&ids)
                .map(|(&(s, t), id)| (id.as_str(), s, t))
                .collect();
            Quiver::new(n, &arrows).unwrap()
        })
    })
}

fn arb_rat_matrix() -> impl Strategy<Value = Matrix<Rat>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec((-4i64..5, 1i64..4), r * c).prop_map(move |v| {
            Matrix::from_vec(r, c, v.into_iter().map(|(n, d)| Rat::new(n, d)).collect())
        })
    })
}

proptest! {
    #[test]
    fn rat_matches_bigrational(a in any::<i64>(), b in 1i64..i64::MAX, c in any::<i64>(), d in 1i64..i64::MAX) {
        let (x, y) = (Rat::new(a, b), Rat::new(c, d));
        prop_assert_eq!(x.add(&y).to_big(), big(a, b) + big(c, d));
        prop_assert_eq!(x.mul(&y).to_big(), big(a, b) * big(c, d));
        prop_assert_eq!(x.sub(&y).to_big(), big(a, b) - big(c, d));
    }

    #[test]
    fn rank_nullity(m in arb_rat_matrix()) {
        let f = Rationals::default();
        let k = m.kernel(&f);
        prop_assert_eq!(m.rank(&f) + k.dim(), m.cols());
        prop_assert_eq!(m.rank(&f), m.transpose().rank(&f));
        for v in k.basis() {
            prop_assert!(m.mul_vec(&f, v).iter().all(|x| f.is_zero(x)));
        }
    }

    #[test]
    fn grassmann_formula(a in arb_rat_matrix(), b in arb_rat_matrix()) {
        let f = Rationals::default();
        let n = a.cols().min(b.cols());
        let rows = |m: &Matrix<Rat>| -> Vec<Vec<Rat>> {
            (0..m.rows()).map(|r| m.row(r)[..n].to_vec()).collect()
        };
        let u = Subspace::span(&f, n, &rows(&a));
        let w = Subspace::span(&f, n, &rows(&b));
        prop_assert_eq!(u.sum(&f, &w).dim() + u.intersection(&f, &w).dim(), u.dim() + w.dim());
        prop_assert!(u.sum(&f, &w).contains_subspace(&f, &u));
        prop_assert!(u.contains_subspace(&f, &u.intersection(&f, &w)));
    }

    #[test]
    fn precyclic_is_closed_under_reaching(q in arb_quiver(5, 7)) {
        let pre = q.precyclic();
        let cyc = q.cyclic_vertices();
        for v in 0..q.num_vertices() {
            prop_assert!(!cyc[v] || pre[v]);
        }
        for a in q.arrows() {
            prop_assert!(!pre[a.target] || pre[a.source]);
        }
        prop_assert_eq!(q.has_oriented_cycle(), pre.iter().any(|&b| b));
    }

    #[test]
    fn separated_quiver_is_bipartite(q in arb_quiver(5, 7)) {
        let s = q.separated();
        let n = q.num_vertices();
        prop_assert_eq!(s.num_vertices(), 2 * n);
        prop_assert_eq!(s.arrows().len(), q.arrows().len());
        for a in s.arrows() {
            prop_assert!(a.source < n && a.target >= n);
        }
        prop_assert!(!s.has_oriented_cycle());
    }

    #[test]
    fn quiver_json_round_trip(q in arb_quiver(4, 6)) {
        let back = Quiver::from_json(&q.to_json_value().to_string()).unwrap();
        prop_assert_eq!(back.to_json_value(), q.to_json_value());
    }

    #[test]
    fn generic_modules_have_their_layering(
        q in arb_quiver(3, 4),
        d in prop::collection::vec(0usize..3, 3),
        l in 1usize..4,
        pick in any::<prop::sample::Index>(),
        seed in any::<u64>(),
    ) {
        let q = Arc::new(q);
        let d = &d[..q.num_vertices()];
        let candidates = realizable_sequences(&q, d, l);
        let s = pick.get(&candidates).clone();
        let g = generic_module(&q, l, &s, PrimeField::new(101).unwrap(), seed).unwrap();
        let (rad, soc) = g.theta();
        prop_assert_eq!(&rad, &s);
        prop_assert_eq!(rad.total(), d.to_vec());
        prop_assert_eq!(soc.total(), d.to_vec());
    }
}
