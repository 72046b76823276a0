//! Worked examples with frozen values. Each frozen value is also recomputed by
//! an independent route (recursion, brute force, or the tabloid oracle).

use num_bigint::BigInt;
use young_seminormal::combinat::{
    colour_semistandard_tableaux, enumerate_standard, qp_sets, tableau_from_weight, weight_of, KlsParams, Weight,
};
use young_seminormal::formulas::{
    d_remove_one_node, denom_add_one, denom_remove_node, denom_row_removal, denom_truncate, denom_two_row,
    denominator_bound, f_add_one, f_hook, f_two_row, lcm_binom, reduce_kls, summary_dispatch, upper_bound_kls,
    weights_kls, Route,
};
use young_seminormal::oracle::{garnir_relation_vectors, garnir_span, straightening_consistent, TabloidVector};
use young_seminormal::permalg::d_of;
use young_seminormal::rational::rat;
use young_seminormal::{AlgebraElement, Engine, Execution, Partition, Permutation, SpechtVector, Tableau};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn t(rows: &[&[usize]]) -> Tableau {
    Tableau::from_rows(rows).unwrap()
}

fn engine() -> Engine {
    Engine::new(Execution::Sequential)
}

fn vector(shape: &str, terms: &[(&[&[usize]], i64, i64)]) -> SpechtVector {
    SpechtVector::from_coords(&p(shape), terms.iter().map(|(rows, a, b)| (t(rows), rat(*a, *b)))).unwrap()
}

#[test]
fn up_arrow_tableaux() {
    let s = Tableau::initial_of(&p("2,2")).up_arrow(&p("4,3,2")).unwrap();
    assert_eq!(s, t(&[&[1, 2, 5, 6], &[3, 4, 7], &[8, 9]]));
    assert_eq!(Engine::up_arrow(&p("2,1"), &p("3,1")).unwrap(), t(&[&[1, 2, 4], &[3]]));
}

#[test]
fn colour_semistandard_examples() {
    let sst = colour_semistandard_tableaux(&p("2,1"), &p("3,1")).unwrap();
    assert_eq!(sst, vec![t(&[&[1, 2, 3], &[4]]), t(&[&[1, 2, 4], &[3]])]);
    let by_filter: Vec<Tableau> = enumerate_standard(&p("3,1"))
        .into_iter()
        .filter(|s| young_seminormal::combinat::ColourProfile::new(&p("2,1"), &p("3,1")).unwrap().is_colour_semistandard(s))
        .collect();
    assert_eq!(sst, by_filter);
}

#[test]
fn weights_and_their_tableaux() {
    let params = KlsParams::new(3, 3, 2, 3).unwrap();
    let s = t(&[&[1, 2, 3, 5, 6, 9], &[4, 7, 8], &[10, 11, 12]]);
    assert_eq!(weight_of(&s, params).unwrap(), Weight(vec![2, 1]));
    assert_eq!(tableau_from_weight(&Weight(vec![2, 1]), 3, 3, 3).unwrap(), s);

    let small = KlsParams::new(2, 1, 1, 1).unwrap();
    assert_eq!(weight_of(&t(&[&[1, 2, 3], &[4]]), small).unwrap(), Weight(vec![1]));

    let hook = t(&[&[1, 2, 3, 5], &[4], &[6]]);
    assert_eq!(tableau_from_weight(&Weight::unit(2, 2), 3, 1, 1).unwrap(), hook);
    assert_eq!(weight_of(&hook, KlsParams::new(3, 1, 2, 1).unwrap()).unwrap(), Weight::unit(2, 2));
}

#[test]
fn q_and_p_sets() {
    let r = qp_sets(&t(&[&[1, 2, 3], &[4]]), &p("2,1")).unwrap();
    assert_eq!((r.q, r.p), (vec![2], vec![2]));
    let r = qp_sets(&Engine::up_arrow(&p("2,1"), &p("3,1")).unwrap(), &p("2,1")).unwrap();
    assert!(r.q.is_empty() && r.p.is_empty());
    // hook with weight e_j: Q = [j+1, s+1], P = {j+1}
    let (k, s) = (3, 3);
    for j in 1..=s {
        let tab = tableau_from_weight(&Weight::unit(s, j), k, 1, 1).unwrap();
        let mut lambda = vec![k];
        lambda.extend(std::iter::repeat_n(1, s));
        let r = qp_sets(&tab, &Partition::new(lambda).unwrap()).unwrap();
        assert_eq!(r.q, (j + 1..=s + 1).collect::<Vec<_>>());
        assert_eq!(r.p, vec![j + 1]);
    }
}

#[test]
fn permutation_examples() {
    assert_eq!(d_of(&t(&[&[1, 3], &[2]])), Permutation::transposition(3, 2, 3).unwrap());
    assert_eq!(d_of(&t(&[&[1, 2, 4], &[3]])), Permutation::transposition(4, 3, 4).unwrap());
    let swap = Permutation::transposition(2, 1, 2).unwrap();
    assert_eq!(swap.shift(3, 5).unwrap(), Permutation::transposition(5, 4, 5).unwrap());

    let s12 = AlgebraElement::delta(Permutation::transposition(3, 1, 2).unwrap());
    let s23 = AlgebraElement::delta(Permutation::transposition(3, 2, 3).unwrap());
    let lhs = s12.add(&s23).unwrap().mul(&s12).unwrap();
    let mut expected = AlgebraElement::unit(3);
    expected = expected.add(&s23.mul(&s12).unwrap()).unwrap();
    assert_eq!(lhs, expected);
    let half = AlgebraElement::scaled_delta(Permutation::transposition(2, 1, 2).unwrap(), rat(1, 2));
    let two = AlgebraElement::scaled_delta(Permutation::transposition(2, 1, 2).unwrap(), rat(2, 1));
    assert_eq!(half.mul(&two).unwrap(), AlgebraElement::unit(2));
}

#[test]
fn straightening_examples() {
    let module = engine().module(&p("2,2"));
    let e = module.polytabloid(&t(&[&[1, 4], &[2, 3]])).unwrap();
    assert_eq!(e, vector("2,2", &[(&[&[1, 3], &[2, 4]], -1, 1), (&[&[1, 2], &[3, 4]], -1, 1)]));
    // the same value from the tabloid oracle
    let span = garnir_span(&p("2,2"));
    let mut v = TabloidVector::basis(&t(&[&[1, 4], &[2, 3]]));
    v.add(&t(&[&[1, 3], &[2, 4]]), &rat(1, 1));
    v.add(&t(&[&[1, 2], &[3, 4]]), &rat(1, 1));
    assert!(span.contains(&v));

    let col = engine().module(&p("1,1")).polytabloid(&t(&[&[2], &[1]])).unwrap();
    assert_eq!(col, vector("1,1", &[(&[&[1], &[2]], -1, 1)]));

    let m21 = engine().module(&p("2,1"));
    let e0 = SpechtVector::unit(&Tableau::initial_of(&p("2,1"))).unwrap();
    let moved = m21.act_perm(&Permutation::transposition(3, 2, 3).unwrap(), &e0).unwrap();
    assert_eq!(moved, SpechtVector::unit(&t(&[&[1, 3], &[2]])).unwrap());
    assert_eq!(m21.act_perm(&Permutation::transposition(3, 1, 2).unwrap(), &e0).unwrap(), e0);

    assert!(garnir_relation_vectors(&p("3")).is_empty());
    for shape in ["2,1", "2,2", "4"] {
        assert!(straightening_consistent(&p(shape)).unwrap());
    }
}

#[test]
fn seminormal_examples() {
    let e = engine();
    let f = e.seminormal_vector(&t(&[&[1, 3], &[2]])).unwrap();
    assert_eq!(*f, vector("2,1", &[(&[&[1, 3], &[2]], 1, 1), (&[&[1, 2], &[3]], 1, 2)]));
    assert_eq!(e.transition_row(&t(&[&[1, 3], &[2]])).unwrap().denominator, BigInt::from(2));
    let f = e.seminormal_vector(&t(&[&[1, 2, 4], &[3]])).unwrap();
    assert_eq!(*f, vector("3,1", &[(&[&[1, 2, 4], &[3]], 1, 1), (&[&[1, 2, 3], &[4]], 1, 3)]));
    assert_eq!(*f, f_add_one(&p("2,1")).unwrap());

    let d = e.d_element(&t(&[&[1, 3], &[2]])).unwrap();
    let mut expected = AlgebraElement::delta(Permutation::transposition(3, 2, 3).unwrap());
    expected.add_term(Permutation::identity(3), rat(1, 2));
    assert_eq!(d, expected);
}

#[test]
fn add_one_examples() {
    assert_eq!(denom_add_one(&p("2,1")), BigInt::from(3));
    assert_eq!(denom_add_one(&p("4")), BigInt::from(1));
    // removable nodes of (3,2): residues 2 and 0
    let d = denom_add_one(&p("2,2"));
    assert_eq!(d, BigInt::from(2));
    assert_eq!(d, engine().up_arrow_denominator(&p("2,2"), &p("3,2")).unwrap());
}

#[test]
fn remove_node_examples() {
    let e = engine();
    assert_eq!(denom_remove_node(&p("3,1"), 1).unwrap(), BigInt::from(3));
    assert_eq!(denom_remove_node(&p("4,3,3"), 3).unwrap(), BigInt::from(1));
    let d = denom_remove_node(&p("4,3,3"), 1).unwrap();
    assert_eq!(d, BigInt::from(3));
    assert_eq!(d, e.up_arrow_denominator(&p("3,3,3"), &p("4,3,3")).unwrap());

    let mut expected = AlgebraElement::delta(Permutation::transposition(4, 3, 4).unwrap());
    expected.add_term(Permutation::identity(4), rat(1, 3));
    assert_eq!(d_remove_one_node(&p("3,1"), 1).unwrap(), expected);
}

#[test]
fn two_row_examples() {
    let e = engine();
    let a = weights_kls(&e, KlsParams::new(2, 1, 1, 1).unwrap()).unwrap();
    assert_eq!(a.values().cloned().collect::<Vec<_>>(), vec![rat(1, 1), rat(1, 3)]);
    let a = weights_kls(&e, KlsParams::new(3, 2, 1, 5).unwrap()).unwrap();
    assert_eq!(a.values().min().unwrap(), &rat(1, 6));
    assert_eq!(a[&Weight(vec![2])], rat(1, 6));
    assert_eq!(f_two_row(3, 2, 5).unwrap(), *e.up_arrow_vector(&p("3,2"), &p("8,2")).unwrap());

    assert_eq!(lcm_binom(5, 0).unwrap(), BigInt::from(1));
    assert_eq!(lcm_binom(2, 2).unwrap(), BigInt::from(6));
    assert_eq!(lcm_binom(3, 2).unwrap(), BigInt::from(20));
    for (k, l, m, d) in [(2, 1, 1, 3), (5, 3, 2, 20), (3, 1, 1, 4)] {
        assert_eq!(denom_two_row(k, l, m).unwrap(), BigInt::from(d));
        let params = KlsParams::new(k, l, 1, m).unwrap();
        assert_eq!(e.up_arrow_denominator(&params.lambda(), &params.nu()).unwrap(), BigInt::from(d));
    }
}

#[test]
fn hook_examples() {
    let e = engine();
    for m in 1..=3 {
        assert_eq!(f_hook(3, 2, m).unwrap().denominator(), BigInt::from(5));
    }
    let a = weights_kls(&e, KlsParams::new(3, 1, 2, 1).unwrap()).unwrap();
    assert_eq!(a[&Weight::unit(2, 1)], rat(-1, 5));
    assert_eq!(a[&Weight::unit(2, 2)], rat(1, 5));
    for k in 1..=4 {
        let f = f_add_one(&p(&format!("{k},1"))).unwrap();
        assert_eq!(f, f_hook(k, 1, 1).unwrap());
        assert!(f.iter().filter(|(_, c)| **c != rat(1, 1)).all(|(_, c)| *c == rat(1, k as i64 + 1)));
    }
}

#[test]
fn kls_reduction_examples() {
    let e = engine();
    let r = reduce_kls(5, 3, 1, 2).unwrap();
    assert_eq!((r.k_tilde, r.l_tilde, r.s_tilde), (4, 2, 1));
    assert_eq!(denom_two_row(4, 2, 2).unwrap(), BigInt::from(20));
    assert_eq!(e.up_arrow_denominator(&p("5,3"), &p("7,3")).unwrap(), BigInt::from(20));
    let r = reduce_kls(4, 3, 2, 3).unwrap();
    assert_eq!((r.k_tilde, r.l_tilde, r.s_tilde), (4, 3, 2));
    for k in 1..=4 {
        for s in 1..=3 {
            let r = reduce_kls(k, 1, s, 2).unwrap();
            assert_eq!((r.k_tilde, r.l_tilde, r.s_tilde), (k + s - 1, 1, 1));
            assert_eq!(denom_two_row(k + s - 1, 1, 1).unwrap(), BigInt::from(k + s));
        }
    }
}

#[test]
fn upper_bound_examples() {
    assert_eq!(upper_bound_kls(2, 2, 2).unwrap(), BigInt::from(12));
    assert_eq!(upper_bound_kls(3, 2, 2).unwrap(), BigInt::from(20));
    for k in 1..=6 {
        assert_eq!(upper_bound_kls(k, 1, 1).unwrap(), BigInt::from(k + 1));
    }
    assert_eq!(engine().up_arrow_denominator(&p("3,2,2"), &p("5,2,2")).unwrap(), BigInt::from(20));
}

#[test]
fn truncation_and_row_removal_examples() {
    let e = engine();
    assert_eq!(denom_truncate(&p("2,2"), &p("4,3,2")).unwrap(), p("4,2"));
    assert_eq!(denom_truncate(&p("3,1"), &p("5,4,2,1")).unwrap(), p("5,1"));
    assert_eq!(denom_truncate(&p("3,2"), &p("4,2")).unwrap(), p("4,2"));
    assert_eq!(denom_row_removal(&p("3,2,1"), &p("3,3,2")).unwrap(), (p("2,1"), p("3,2")));
    for (lambda, nu) in [("2,2", "4,3,2"), ("3,1", "5,4,2,1")] {
        let small = denom_truncate(&p(lambda), &p(nu)).unwrap();
        assert_eq!(
            e.up_arrow_denominator(&p(lambda), &p(nu)).unwrap(),
            e.up_arrow_denominator(&p(lambda), &small).unwrap()
        );
    }
    // (2,1)↑(2,2) is the initial tableau of (2,2), so its denominator is 1
    let (a, b) = denom_row_removal(&p("2,1"), &p("2,2")).unwrap();
    assert_eq!((a.clone(), b.clone()), (p("1"), p("2")));
    assert_eq!(e.up_arrow_denominator(&p("2,1"), &p("2,2")).unwrap(), BigInt::from(1));
    assert_eq!(e.up_arrow_denominator(&a, &b).unwrap(), BigInt::from(1));
}

#[test]
fn general_bound_examples() {
    let e = engine();
    assert_eq!(denominator_bound(&p("3,1"), &p("3,1")).unwrap(), BigInt::from(1));
    assert_eq!(e.up_arrow_denominator(&p("2,1"), &p("3,1")).unwrap(), BigInt::from(3));
    let d = e.up_arrow_denominator(&p("2,2"), &p("4,2")).unwrap();
    assert_eq!(d, denom_two_row(2, 2, 2).unwrap());
    assert_eq!(d, BigInt::from(6));
}

#[test]
fn dispatch_examples() {
    let e = engine();
    let r = summary_dispatch(&e, &p("5,3"), &p("7,3"), 12).unwrap();
    assert_eq!((r.value, r.route), (Some(BigInt::from(20)), Route::ExactFormula));
    let r = summary_dispatch(&e, &p("3,2,1"), &p("3,2,1"), 12).unwrap();
    assert_eq!(r.value, Some(BigInt::from(1)));
    let r = summary_dispatch(&e, &p("2,1"), &p("2,2"), 12).unwrap();
    assert_eq!(r.value, Some(BigInt::from(1)));
    // reduces to (3,2²)↑2, so d = (k+1)(k+2) = 20 at k = 3
    let r = summary_dispatch(&e, &p("3,2,2"), &p("5,2,2"), 12).unwrap();
    assert_eq!(r.value, Some(BigInt::from(20)));
    assert_eq!(r.value.unwrap(), e.up_arrow_denominator(&p("3,2,2"), &p("5,2,2")).unwrap());
    let r = summary_dispatch(&e, &p("3,3,3"), &p("9,3,3"), 8).unwrap();
    assert_eq!((r.value, r.route), (None, Route::DivisorBoundOnly));
    assert!(r.bound.is_some());
}
