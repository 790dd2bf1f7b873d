//! Cross-module invariants tying classification verdicts to exhaustive
//! ground truth on instances small enough to enumerate completely.

use ecid::algebra::AlgebraElement;
use ecid::classify::{self, Verdict, WedderburnData};
use ecid::codes;
use ecid::cyclotomic;
use ecid::field::FiniteField;
use ecid::group::Group;
use ecid::json::{GroupSpec, IdempotentSpec};
use ecid::Ratio;
use std::path::PathBuf;

/// On every abelian semisimple instance small enough for a full idempotent
/// census (q^|G| <= 1e5), three statements must coincide: the classifier's
/// verdict, "every q-orbit has size <= p", and "every primitive idempotent
/// generates an ideal of dimension <= p".  The maximal primitive ideal
/// dimension must also equal t_w exactly.
#[test]
fn abelian_verdict_matches_exhaustive_ground_truth() {
    let cases: &[(&[u64], u64)] = &[
        (&[3], 2),
        (&[4], 3),
        (&[5], 2),
        (&[5], 3),
        (&[7], 2),
        (&[2, 2], 3),
        (&[3, 3], 2),
        (&[9], 2),
        (&[2, 4], 3),
        (&[10], 3),
    ];
    for &(invariants, p) in cases {
        let group = Group::abelian(invariants).unwrap();
        let field = FiniteField::prime(p).unwrap();
        let report = classify::classify_abelian_semisimple(&group, &field).unwrap();
        let data = cyclotomic::qorbits(&group, field.prime_power()).unwrap();
        let orbits_small = data.t.iter().all(|&t| t <= p);
        let search = codes::idempotent_search(&group, &field, 100_000).unwrap();
        let max_prim_dim = search.primitives().map(|e| e.dim).max().unwrap();
        let prims_small = search.primitives().all(|e| e.dim <= p);
        let verdict_ecd = report.verdict == Verdict::MinimalEcd;
        assert_eq!(
            verdict_ecd, orbits_small,
            "verdict vs orbit sizes for {invariants:?} over GF({p})"
        );
        assert_eq!(
            verdict_ecd, prims_small,
            "verdict vs primitive ideal dims for {invariants:?} over GF({p})"
        );
        assert_eq!(
            max_prim_dim, data.t_w,
            "largest minimal-ideal dimension must be t_w for {invariants:?} over GF({p})"
        );
        // orbit-size multiset = minimal-ideal dimension multiset
        let mut orbit_sizes: Vec<u64> = data.orbits.iter().map(|o| o.len() as u64).collect();
        let mut prim_dims: Vec<u64> = search.primitives().map(|e| e.dim).collect();
        orbit_sizes.sort_unstable();
        prim_dims.sort_unstable();
        assert_eq!(orbit_sizes, prim_dims);
    }
}

/// dim(e + f) = dim(e) + dim(f) for orthogonal idempotents, and
/// dim(e) + dim(1 - e) = |G|, over full censuses of two small algebras.
#[test]
fn orthogonal_dimension_additivity() {
    let cases: &[(&[u64], u64)] = &[(&[6], 2), (&[2, 2], 3)];
    for &(invariants, p) in cases {
        let group = Group::abelian(invariants).unwrap();
        let field = FiniteField::prime(p).unwrap();
        let search = codes::idempotent_search(&group, &field, 100_000).unwrap();
        let one = AlgebraElement::one(&field, &group);
        for a in &search.entries {
            let complement = one.sub(&a.element).unwrap();
            assert!(complement.is_idempotent());
            assert_eq!(
                a.dim + complement.ideal_dimension() as u64,
                group.order() as u64
            );
            for b in &search.entries {
                let ab = a.element.alg_mul(&b.element).unwrap();
                let ba = b.element.alg_mul(&a.element).unwrap();
                if ab.is_zero() && ba.is_zero() {
                    let sum = a.element.add(&b.element).unwrap();
                    assert_eq!(sum.ideal_dimension() as u64, a.dim + b.dim);
                }
            }
        }
    }
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

/// The orthogonal dimension-sum formula agrees with the rank oracle on the
/// bundled SL(2,3)/GF(25) idempotents, including the 24/5 rational bound.
#[test]
fn dimension_sum_rule_on_bundled_idempotents() {
    let text = std::fs::read_to_string(data_dir().join("SL23.json")).unwrap();
    let group = GroupSpec::parse(&text).unwrap().build().unwrap();
    let field = FiniteField::new(5, 2, Some(vec![2, 4, 1])).unwrap();
    let load = |name: &str| {
        let text = std::fs::read_to_string(data_dir().join(name)).unwrap();
        IdempotentSpec::parse(&text)
            .unwrap()
            .build(&field, &group)
            .unwrap()
    };
    let e1 = load("sl23_e1.json");
    let e2 = load("sl23_e2.json");
    let e3 = load("sl23_e3.json");
    let wd = WedderburnData::new(3, vec![(2, 1), (2, 1), (2, 1), (3, 1)]);
    let cert = classify::classify_nonabelian_semisimple(&group, &field, Some(&wd), false).unwrap();
    assert_eq!(cert.verdict, Verdict::MinimalEcd);
    let sum12 = codes::ecid_dimension_sum(&[e1.clone(), e2.clone()], &cert).unwrap();
    assert_eq!(sum12.dim, 3);
    assert_eq!(sum12.bound, Ratio::new(24, 3));
    let sum23 = codes::ecid_dimension_sum(&[e2.clone(), e3.clone()], &cert).unwrap();
    assert_eq!(sum23.dim, 5);
    assert_eq!(sum23.bound, Ratio::new(24, 5));
    let single = codes::ecid_dimension_sum(std::slice::from_ref(&e1), &cert).unwrap();
    assert_eq!(single.dim, 1);
    let all = codes::ecid_dimension_sum(&[e1, e2, e3], &cert).unwrap();
    assert_eq!(all.dim, 6);
    assert_eq!(all.bound, Ratio::new(4, 1));
}

/// The congruence set of the bundled dimension-2 idempotent over
/// GF(25)·SL(2,3): residue 2, candidates {2, 7, 12, 17, 22}, the true
/// dimension among them.
#[test]
fn congruence_set_of_bundled_e2() {
    let text = std::fs::read_to_string(data_dir().join("SL23.json")).unwrap();
    let group = GroupSpec::parse(&text).unwrap().build().unwrap();
    let field = FiniteField::new(5, 2, Some(vec![2, 4, 1])).unwrap();
    let text = std::fs::read_to_string(data_dir().join("sl23_e2.json")).unwrap();
    let e2 = IdempotentSpec::parse(&text)
        .unwrap()
        .build(&field, &group)
        .unwrap();
    let set = codes::dimension_congruence_set(&e2).unwrap();
    assert_eq!(set.residue, 2);
    assert_eq!(set.candidates, vec![2, 7, 12, 17, 22]);
    assert!(set.candidates.contains(&(e2.ideal_dimension() as u64)));
    assert_eq!(set.bounds[0].value, Ratio::new(24, 2));
}

/// The averaged commutator-subgroup idempotent of GF(25)·SL(2,3) cuts the
/// algebra into a 3-dimensional commutative part and its 21-dimensional
/// complement; the bundled idempotents e2, e3 live in the complement.
#[test]
fn commutator_hat_splits_the_algebra() {
    let text = std::fs::read_to_string(data_dir().join("SL23.json")).unwrap();
    let group = GroupSpec::parse(&text).unwrap().build().unwrap();
    let field = FiniteField::new(5, 2, Some(vec![2, 4, 1])).unwrap();
    let (comm, _) = group.commutator_subgroup();
    let hat = ecid::algebra::hat_idempotent(&group, &comm, &field).unwrap();
    assert!(hat.is_idempotent());
    assert_eq!(hat.alg_mul(&hat).unwrap(), hat);
    assert_eq!(hat.ideal_dimension(), 3);
    let complement = ecid::algebra::complement(&hat);
    assert!(complement.is_idempotent());
    assert_eq!(complement.ideal_dimension(), 21);
    for name in ["sl23_e2.json", "sl23_e3.json"] {
        let text = std::fs::read_to_string(data_dir().join(name)).unwrap();
        let e = IdempotentSpec::parse(&text)
            .unwrap()
            .build(&field, &group)
            .unwrap();
        assert!(e.alg_mul(&hat).unwrap().is_zero());
        assert!(hat.alg_mul(&e).unwrap().is_zero());
    }
}

/// The semisimple non-primitivity cut on the bundled table rows: row {1,3}
/// has d = 6 below |H|/3 = 8 and is caught; row {2,3} with d = 9 is not.
#[test]
fn semisimple_nonprimitivity_rows() {
    let text = std::fs::read_to_string(data_dir().join("SL23.json")).unwrap();
    let group = GroupSpec::parse(&text).unwrap().build().unwrap();
    let field = FiniteField::new(5, 2, Some(vec![2, 4, 1])).unwrap();
    let wd = WedderburnData::new(3, vec![(2, 1), (2, 1), (2, 1), (3, 1)]);
    let verdict = codes::nonprimitivity_test_semisimple(&group, &field, &wd, 3, 6).unwrap();
    assert_eq!(verdict.verdict, codes::PrimitivityVerdict::NotPrimitive);
    let verdict = codes::nonprimitivity_test_semisimple(&group, &field, &wd, 3, 9).unwrap();
    assert_eq!(verdict.verdict, codes::PrimitivityVerdict::Unknown);
    let verdict = codes::nonprimitivity_test_semisimple(&group, &field, &wd, 3, 24).unwrap();
    assert_eq!(verdict.verdict, codes::PrimitivityVerdict::Unknown);
    // a below max(t_w, max n_j d_j) = 3 is inadmissible
    assert_eq!(
        codes::nonprimitivity_test_semisimple(&group, &field, &wd, 2, 6).unwrap_err(),
        codes::CodesError::InadmissibleBound { a: 2, needed: 3 }
    );
}
