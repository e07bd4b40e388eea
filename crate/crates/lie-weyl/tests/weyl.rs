use std::collections::BTreeSet;
use std::sync::OnceLock;

use lie_rootsys::{q, qr, Root, RootSystem, Series, Weight};
use lie_weyl::{
    apply_word, descent_set, dominant_representative, dot_action, length_of, star_op, Coxeter,
    WeylError, WeylWord,
};
use proptest::prelude::*;

fn sys(series: Series) -> &'static RootSystem {
    static CACHE: OnceLock<Vec<RootSystem>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        [Series::E6, Series::E7, Series::E8, Series::F4, Series::G2]
            .into_iter()
            .map(|s| RootSystem::build(s).unwrap())
            .collect()
    });
    all.iter().find(|r| r.series() == series).unwrap()
}

fn w(s: &str) -> WeylWord {
    s.parse().unwrap()
}

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

fn ints(v: &[i64]) -> Weight {
    Weight::from_ints(v)
}

const X2: &str = "s1s3s1s2s5s6s5";

#[test]
fn e8_word_on_half_hvee() {
    let e8 = sys(Series::E8);
    let mu = ints(&[1, 0, 0, 1, 0, 1, 0, 1]);
    let img = apply_word(e8, &w("s6s2s4"), &mu).unwrap();
    assert_eq!(img, ints(&[1, -1, 1, 0, 2, -1, 1, 1]));
}

#[test]
fn f4_dot_action_example() {
    let f4 = sys(Series::F4);
    let half = ints(&[1, 0, 1, 1]);
    let rho = f4.rho();
    let lam = &half - &rho;
    let out = dot_action(f4, &w("s3s2"), &lam).unwrap();
    assert_eq!(&out + &rho, ints(&[1, 1, -1, 2]));
}

#[test]
fn trivial_actions() {
    let e7 = sys(Series::E7);
    let mu = Weight(vec![qr(1, 2), q(3), qr(-2, 3), q(0), q(1), q(5), qr(7, 4)]);
    assert_eq!(apply_word(e7, &WeylWord::identity(), &mu).unwrap(), mu);
    for i in 1..=7 {
        for j in 1..=7 {
            if i != j {
                let f = Weight::fundamental(7, j - 1);
                assert_eq!(apply_word(e7, &WeylWord::new(vec![i]), &f).unwrap(), f);
            }
        }
    }
    // ⟨μ + ρ, α_3∨⟩ = 0 forces the dot action of s3 to fix μ.
    let fixed = Weight(vec![q(2), qr(1, 3), q(-1), q(0), q(4), qr(-5, 2), q(1)]);
    assert_eq!(dot_action(e7, &w("s3"), &fixed).unwrap(), fixed);
}

#[test]
fn lengths() {
    let e8 = sys(Series::E8);
    assert_eq!(length_of(e8, &WeylWord::identity()).unwrap(), 0);
    assert_eq!(length_of(e8, &w("s5")).unwrap(), 1);
    assert_eq!(length_of(e8, &w(X2)).unwrap(), 7);
    assert_eq!(length_of(e8, &w("s1s1")).unwrap(), 0);
    assert_eq!(length_of(e8, &w("s1s3s1")).unwrap(), 3);
    assert_eq!(length_of(e8, &w("s1s2s1")).unwrap(), 1);
}

#[test]
fn equality_is_by_action() {
    let e8 = sys(Series::E8);
    let c = Coxeter::simple(e8);
    assert!(c.equal(&w("s1s3s1"), &w("s3s1s3")).unwrap());
    assert!(c.equal(&w("s1s2"), &w("s2s1")).unwrap());
    assert!(!c.equal(&w("s1s3"), &w("s3s1")).unwrap());
    assert!(c.equal(&w("s4s4"), &WeylWord::identity()).unwrap());
}

#[test]
fn table_iii_left_descents() {
    let e8 = sys(Series::E8);
    let rows: [(&str, &[usize]); 9] = [
        ("", &[1, 2, 3, 5, 6]),
        ("s4", &[1, 4, 6]),
        ("s5s4", &[1, 4, 5]),
        ("s2s5s4", &[1, 2, 5]),
        ("s2s3s5s4", &[2, 3, 5]),
        ("s4s2s3s5s4", &[4]),
        ("s2s4s2s3s5s4", &[2, 4]),
        ("s2s3s4s2s3s5s4", &[2, 3, 4]),
        ("s2s3s5s4s2s3s5s4", &[2, 3, 5]),
    ];
    for (prefix, expected) in rows {
        let word = w(&format!("{prefix}{X2}"));
        assert_eq!(
            descent_set(e8, &word, None).unwrap(),
            set(expected),
            "{word}"
        );
    }
    assert!(descent_set(e8, &WeylWord::identity(), None)
        .unwrap()
        .is_empty());
}

#[test]
fn table_0_descents_and_stars() {
    let e8 = sys(Series::E8);
    let d = |s: &str| descent_set(e8, &w(s), None).unwrap();
    assert_eq!(d("s2s4s6s2s3s5s7"), set(&[2, 4, 6]));
    assert_eq!(d("s4s6s2s3s5s7"), set(&[4, 6]));
    assert_eq!(d("s3s2s4s6s2s3s5s7"), set(&[2, 3, 6]));
    assert_eq!(d("s6s2s3s5s7"), set(&[2, 3, 6]));
    assert_eq!(d("s5s3s2s4s6s2s3s5s7"), set(&[2, 3, 5]));
    assert_eq!(d("s2s3s5s7"), set(&[2, 3, 5, 7]));

    let c = Coxeter::simple(e8);
    let check = |x: &str, s, t, y: &str| {
        let got = star_op(e8, &w(x), s, t).unwrap();
        assert!(
            c.equal(&got, &w(y)).unwrap(),
            "*({x}) = {got}, expected {y}"
        );
    };
    check("s2s4s6s2s3s5s7", 3, 4, "s3s2s4s6s2s3s5s7");
    check("s4s6s2s3s5s7", 3, 4, "s6s2s3s5s7");
    check("s3s2s4s6s2s3s5s7", 5, 6, "s5s3s2s4s6s2s3s5s7");
    check("s6s2s3s5s7", 5, 6, "s2s3s5s7");
}

#[test]
fn star_example_with_x2() {
    let e8 = sys(Series::E8);
    let c = Coxeter::simple(e8);
    let got = star_op(e8, &w(&format!("s4s2s3s5s4{X2}")), 4, 5).unwrap();
    assert!(c.equal(&got, &w(&format!("s2s3s5s4{X2}"))).unwrap());
}

#[test]
fn star_errors() {
    let e8 = sys(Series::E8);
    assert_eq!(
        star_op(e8, &w("s2"), 1, 2),
        Err(WeylError::NotAdjacent { s: 1, t: 2 })
    );
    assert!(matches!(
        star_op(e8, &WeylWord::identity(), 3, 4),
        Err(WeylError::NotInDomain { .. })
    ));
    assert!(star_op(e8, &w("s3s4"), 3, 4).is_ok());
    assert!(matches!(
        apply_word(e8, &w("s9"), &Weight::zero(8)),
        Err(WeylError::LetterOutOfRange { letter: 9, .. })
    ));
}

#[test]
fn g2_star_needs_order_three() {
    let g2 = sys(Series::G2);
    assert!(!Coxeter::simple(g2).adjacent(1, 2));
    let f4 = sys(Series::F4);
    let c = Coxeter::simple(f4);
    assert!(c.adjacent(1, 2));
    assert!(!c.adjacent(2, 3));
    assert!(c.adjacent(3, 4));
}

#[test]
fn subsystem_descents() {
    let e7 = sys(Series::E7);
    let basis: Vec<Root> = [
        [0, 0, 0, 0, 1, 1, 0],
        [1, 0, 1, 1, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 1],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 1, 1, 2, 1, 1, 0],
    ]
    .iter()
    .map(|r| Root(r.to_vec()))
    .collect();
    let c = Coxeter::subsystem(e7, &basis).unwrap();
    assert_eq!(c.positive_roots().len(), 31);
    let tau = descent_set(e7, &WeylWord::identity(), Some(&basis)).unwrap();
    assert!(tau.is_empty());

    let lam = e7
        .weight_from_pairings(&basis, &[1, 0, 1, 1, 1, -1, 2].map(q))
        .unwrap();
    let dom = e7
        .weight_from_pairings(&basis, &[1, 0, 1, 0, 1, 1, 2].map(q))
        .unwrap();
    let x = w("s6s4s2");
    assert_eq!(c.apply(&x, &dom).unwrap(), lam);
    assert_eq!(c.right_descents(&x).unwrap(), set(&[2, 4]));
    let eq = c.equal(&w("s6s4s2s3s5"), &w("s6s4s5s2s3")).unwrap();
    assert!(eq);
    let y = c.right_star(&w("s2s4s6"), 4, 6).unwrap();
    assert!(c.equal(&y, &w("s2s4")).unwrap());
}

#[test]
fn invalid_subsystems() {
    let e8 = sys(Series::E8);
    let bad = |rows: &[&[i64]]| {
        let b: Vec<Root> = rows.iter().map(|r| Root(r.to_vec())).collect();
        Coxeter::subsystem(e8, &b).unwrap_err()
    };
    assert!(matches!(
        bad(&[&[2, 0, 0, 0, 0, 0, 0, 0]]),
        WeylError::InvalidBasis(_)
    ));
    assert!(matches!(
        bad(&[&[-1, 0, 0, 0, 0, 0, 0, 0]]),
        WeylError::InvalidBasis(_)
    ));
    assert!(matches!(
        bad(&[&[1, 0, 0, 0, 0, 0, 0, 0], &[1, 0, 1, 0, 0, 0, 0, 0]]),
        WeylError::InvalidBasis(_)
    ));
    assert!(descent_set(e8, &w("s1"), Some(&[Root(vec![1, 1, 0, 0, 0, 0, 0, 0])])).is_err());
}

#[test]
fn dominant_representatives() {
    let e8 = sys(Series::E8);
    let mu = ints(&[1, -1, 1, 0, 2, -1, 1, 1]);
    let (dom, word) = dominant_representative(e8, &mu);
    assert_eq!(dom, ints(&[1, 0, 0, 1, 0, 1, 0, 1]));
    assert_eq!(apply_word(e8, &word, &mu).unwrap(), dom);
}

fn word_strategy(n: usize, max: usize) -> impl Strategy<Value = WeylWord> {
    prop::collection::vec(1..=n, 0..max).prop_map(WeylWord::new)
}

fn weight_strategy(n: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec((-6i64..=6, 1i64..=4), n)
        .prop_map(|v| Weight(v.into_iter().map(|(a, b)| qr(a, b)).collect()))
}

fn system_strategy() -> impl Strategy<Value = &'static RootSystem> {
    prop::sample::select(vec![
        Series::E6,
        Series::E7,
        Series::E8,
        Series::F4,
        Series::G2,
    ])
    .prop_map(sys)
}

fn case() -> impl Strategy<Value = (&'static RootSystem, WeylWord, Weight, usize)> {
    system_strategy().prop_flat_map(|rs| {
        let n = rs.rank();
        (Just(rs), word_strategy(n, 12), weight_strategy(n), 1..=n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn length_changes_by_one((rs, x, _mu, i) in case()) {
        let a = length_of(rs, &x).unwrap();
        let b = length_of(rs, &x.append(i)).unwrap();
        prop_assert_eq!(a.abs_diff(b), 1);
        prop_assert!(a <= x.len());
    }

    #[test]
    fn action_preserves_form((rs, x, mu, _i) in case()) {
        let img = apply_word(rs, &x, &mu).unwrap();
        prop_assert_eq!(rs.inner_weights(&img, &img), rs.inner_weights(&mu, &mu));
    }

    #[test]
    fn action_permutes_roots((rs, x, _mu, _i) in case()) {
        let c = Coxeter::simple(rs);
        let mut images = BTreeSet::new();
        for r in rs.positive_roots() {
            let img = c.apply_root(&x, r).unwrap();
            prop_assert!(rs.is_root(&img));
            images.insert(img.abs());
        }
        prop_assert_eq!(images.len(), rs.positive_roots().len());
    }

    #[test]
    fn descents_match_lengths((rs, x, _mu, s) in case()) {
        let d = descent_set(rs, &x, None).unwrap();
        let shorter = length_of(rs, &x.prepend(s)).unwrap() < length_of(rs, &x).unwrap();
        prop_assert_eq!(d.contains(&s), shorter);
    }

    #[test]
    fn star_is_an_involution((rs, x, _mu, _i) in case()) {
        let c = Coxeter::simple(rs);
        let n = rs.rank();
        for s in 1..=n {
            for t in s + 1..=n {
                if !c.adjacent(s, t) {
                    continue;
                }
                match c.left_star(&x, s, t) {
                    Ok(y) => {
                        let back = c.left_star(&y, s, t).unwrap();
                        prop_assert!(c.equal(&back, &x).unwrap());
                        prop_assert!(!c.equal(&y, &x).unwrap());
                    }
                    Err(e) => prop_assert!(matches!(e, WeylError::NotInDomain { .. }), "unexpected {:?}", e),
                }
                if let Ok(y) = c.right_star(&x, s, t) {
                    let back = c.right_star(&y, s, t).unwrap();
                    prop_assert!(c.equal(&back, &x).unwrap());
                }
            }
        }
    }

    #[test]
    fn dot_action_composes((rs, x, mu, i) in case()) {
        let y = x.append(i);
        let lhs = dot_action(rs, &y, &mu).unwrap();
        let rhs = dot_action(rs, &x, &dot_action(rs, &WeylWord::new(vec![i]), &mu).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dominant_representative_is_dominant((rs, x, mu, _i) in case()) {
        let moved = apply_word(rs, &x, &mu).unwrap();
        let (a, _) = dominant_representative(rs, &mu);
        let (b, wb) = dominant_representative(rs, &moved);
        prop_assert!(a.is_dominant());
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(apply_word(rs, &wb, &moved).unwrap(), b);
    }
}
