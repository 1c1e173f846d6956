//! Checks against values computed independently of the library: plain
//! machine-integer loops, and constants fixed by a one-off brute force.

use num_traits::{One, Zero};
use pell_core::classifier::{self, ClassificationReport};
use pell_core::identities::{self, Arity};
use pell_core::numtheory;
use pell_core::pellmat::{self, Generator, Mat3, Similarity};
use pell_core::sequences::{self, SequenceId};
use pell_core::{zsqrt2, BigInt, BigMat3};

fn big(v: i128) -> BigInt {
    BigInt::from(v)
}

/// Straight loop over `x(k) = Σ c[i]·x(k-1-i) + constant` in `i128`.
fn naive(coeffs: &[i128], constant: i128, initials: &[i128], count: usize) -> Vec<i128> {
    let mut v = initials.to_vec();
    while v.len() < count {
        let k = v.len();
        let next = coeffs.iter().enumerate().map(|(i, c)| c * v[k - 1 - i]).sum::<i128>() + constant;
        v.push(next);
    }
    v.truncate(count);
    v
}

#[test]
fn builtin_sequences_match_naive_loops() {
    let cases: [(SequenceId, Vec<i128>); 8] = [
        (SequenceId::E, naive(&[2, 1], 0, &[0, 1], 90)),
        (SequenceId::Q, naive(&[2, 1], 0, &[1, 3], 90)),
        (SequenceId::QHat, naive(&[2, 1], 0, &[2, 2], 90)),
        (SequenceId::B, naive(&[1, 3, 1], 0, &[0, 1, 1], 90)),
        (SequenceId::R, naive(&[2, 1], 1, &[0, 0], 90)),
        (SequenceId::A, naive(&[3, -1, -1], 0, &[1, 1, 2], 90)),
        (SequenceId::S, naive(&[3, -1, -1], 1, &[0, 0, 1], 90)),
        (SequenceId::J, naive(&[0, 6, 0, -1], 0, &[0, 1, 4, 7], 80)),
    ];
    for (id, expected) in cases {
        let got = sequences::terms(id, 0, expected.len() as i64 - 1).unwrap();
        let expected: Vec<BigInt> = expected.into_iter().map(big).collect();
        assert_eq!(got, expected, "{id}");
    }
}

#[test]
fn known_prefixes() {
    let e = sequences::terms(SequenceId::E, 1, 8).unwrap();
    assert_eq!(e, [1, 2, 5, 12, 29, 70, 169, 408].map(big));
    let r = sequences::terms(SequenceId::R, 0, 9).unwrap();
    assert_eq!(r, [0, 0, 1, 3, 8, 20, 49, 119, 288, 696].map(big));
    assert_eq!(sequences::term(SequenceId::S, 5).unwrap(), big(32));
    assert_eq!(sequences::term(SequenceId::J, 4).unwrap(), big(24));
}

#[test]
fn recurrence_closure_and_bridges_to_500() {
    let n = 500;
    let e = sequences::terms(SequenceId::E, 0, n + 1).unwrap();
    let b = sequences::terms(SequenceId::B, 0, n).unwrap();
    let r = sequences::terms(SequenceId::R, 0, n).unwrap();
    let a = sequences::terms(SequenceId::A, 0, n).unwrap();
    let s = sequences::terms(SequenceId::S, 0, n).unwrap();
    let mut running = BigInt::zero();
    for k in 0..=n as usize {
        if k >= 1 {
            assert_eq!(e[k + 1], &e[k] * 2 + &e[k - 1]);
            assert_eq!(e[k], &b[k] + &b[k - 1]);
        }
        if k >= 2 {
            assert_eq!(r[k], &r[k - 1] * 2 + &r[k - 2] + 1);
        }
        assert_eq!(a[k], &r[k] + 1);
        assert_eq!(b[k], &r[k] + (k % 2) as i32);
        running += &r[k];
        assert_eq!(s[k], running);
    }
    assert_eq!(sequences::partial_sum(n).unwrap(), s[n as usize]);
}

#[test]
fn closed_forms_match_powers_to_200() {
    for g in Generator::ALL {
        let m: BigMat3 = g.matrix();
        let mut power = m.clone();
        for n in 1..=200 {
            assert_eq!(g.closed_form(n).unwrap(), power, "{} at {n}", g.name());
            power = &power * &m;
        }
    }
    let ones = |rows: [[i64; 3]; 3]| BigMat3::from_ints(rows);
    assert_eq!(pellmat::closed_form_u1(2).unwrap(), ones([[1, 1, 1], [2, 2, 3], [2, 2, 3]]));
    assert_eq!(pellmat::closed_form_u2(2).unwrap(), ones([[2, 1, 2], [1, 2, 2], [2, 2, 3]]));
}

#[test]
fn inverse_powers_to_200() {
    let id = BigMat3::identity();
    for n in 1..=200 {
        let u2n = pellmat::mat_pow(&pellmat::u2::<BigInt>(), n as u64);
        let u3n = pellmat::mat_pow(&pellmat::u3::<BigInt>(), n as u64);
        assert_eq!(&pellmat::closed_form_u2_inv(n).unwrap() * &u2n, id);
        assert_eq!(&pellmat::closed_form_u3_inv(n).unwrap() * &u3n, id);
        assert_eq!(Some(pellmat::closed_form_u2_inv(n).unwrap()), u2n.inverse_unimodular());
    }
}

#[test]
fn determinant_and_trace_families_to_200() {
    let e = sequences::pell_extended::<BigInt>().terms(-1, 200).unwrap();
    let (u1, u2, u3) = (pellmat::u1::<BigInt>(), pellmat::u2::<BigInt>(), pellmat::u3::<BigInt>());
    let (mut p1, mut p2, mut p3) = (u1.clone(), u2.clone(), u3.clone());
    for n in 1..=200usize {
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        assert!(p1.det().is_zero());
        assert!(p2.det().is_one());
        assert_eq!(p3.det(), sign);
        // e[k] holds E(k-1).
        assert_eq!(p1.trace(), (&e[n] + &e[n + 1]) * 2);
        assert_eq!(p1.trace(), p1.transpose().trace());
        p1 = &p1 * &u1;
        p2 = &p2 * &u2;
        p3 = &p3 * &u3;
    }
}

#[test]
fn binet_to_500() {
    for n in 1..=500 {
        assert!(zsqrt2::binet_check(n).unwrap(), "{n}");
        assert!(zsqrt2::binet_sum_difference(n).unwrap());
        assert!(zsqrt2::binet_consecutive_sum(n).unwrap());
        assert!(zsqrt2::binet_b(n).unwrap());
        assert!(zsqrt2::binet_a_r(n).unwrap());
    }
    assert!(zsqrt2::binet_a_r(0).unwrap());
}

#[test]
fn eigen_residuals_vanish() {
    for g in Generator::ALL {
        let m = g.matrix::<BigInt>();
        for t in g.eigen_system::<BigInt>() {
            assert!(pellmat::eigen_residual(&m, &t), "{}", g.name());
        }
    }
}

#[test]
fn similarity_views() {
    let u1 = pellmat::u1::<BigInt>();
    assert_eq!(pellmat::similar_over_rationals(&u1, &u1.transpose()), Similarity::Similar);
    let u2 = pellmat::u2::<BigInt>();
    assert_eq!(pellmat::similar_over_rationals(&u1, &u2), Similarity::NotSimilar);
    let id = BigMat3::identity();
    assert_eq!(pellmat::similar_over_rationals(&id, &id), Similarity::Indeterminate);
}

// gcd(r(n), r(n-1)) for n = 2..=19, by Euclid on an independent iteration.
const GCD_CONSECUTIVE: [i64; 18] = [1, 1, 1, 4, 1, 7, 1, 24, 1, 41, 1, 140, 1, 239, 1, 816, 1, 1393];

#[test]
fn gcd_consecutive_oracle() {
    for (i, &g) in GCD_CONSECUTIVE.iter().enumerate() {
        assert_eq!(numtheory::gcd_consecutive(i as i64 + 2).unwrap(), BigInt::from(g));
    }
    for n in 2..=81 {
        assert_eq!(numtheory::gcd_consecutive(n).unwrap(), numtheory::gcd_expected(n).unwrap(), "{n}");
    }
}

#[test]
fn gcd_reduction_branches() {
    for n in (2..=60).step_by(2) {
        for row in numtheory::gcd_reduction_rows(n, &numtheory::even_ks(n)).unwrap() {
            assert!(row.agrees(), "even n={n} k={}", row.k);
            if row.k == n {
                assert!(row.gcd_reduced.is_one());
            }
        }
    }
    for n in (3..=61).step_by(2) {
        let ks: Vec<i64> = (3..=n).step_by(2).collect();
        for row in numtheory::gcd_reduction_rows_odd(n, &ks).unwrap() {
            assert!(row.agrees(), "odd n={n} k={}", row.k);
        }
    }
}

#[test]
fn number_theory_ranges() {
    for m in 1..=250 {
        assert!(numtheory::congruence_mod4(m).unwrap(), "{m}");
    }
    for n in 1..=250 {
        assert!(numtheory::double_index_check(n).unwrap(), "{n}");
    }
    assert!(numtheory::partial_sum_bound(400).unwrap());
    assert!(numtheory::sidon_check(60).unwrap().distinct);
}

// Fixed by exhaustive enumeration of all 512 matrices, cross-checked against
// an independent script that factored each characteristic polynomial.
const PELL_COUNT: usize = 18;
const BUCKETS: [(i64, &[&[u16]]); 3] = [
    (1, &[&[351, 443, 501]]),
    (0, &[&[127, 191, 463, 487, 506, 508], &[223, 251, 367, 446, 493, 502]]),
    (-1, &[&[239, 254, 494]]),
];

#[test]
fn census_frozen_constants() {
    let report = classifier::classify();
    assert_eq!(report.total, 512);
    assert_eq!(report.pell_count, PELL_COUNT);
    assert_eq!(report.buckets.len(), BUCKETS.len());
    for (bucket, (root, orbits)) in report.buckets.iter().zip(BUCKETS) {
        assert_eq!(bucket.third_root, root);
        let got: Vec<&[u16]> = bucket.orbits.iter().map(Vec::as_slice).collect();
        assert_eq!(got, orbits);
        assert_eq!((bucket.trace, bucket.det), (2 + root, -root));
    }
    assert_eq!(report.rational_similarity_classes, Some(3));
    assert!(report.validate().is_empty());
    assert_eq!(classifier::classify(), report);
}

#[test]
fn census_representatives() {
    let report: ClassificationReport = classifier::classify();
    let expected = [("u1", 127, "x(x^2 - 2x - 1)"), ("u2", 239, "(x + 1)(x^2 - 2x - 1)"), ("u3", 351, "(x - 1)(x^2 - 2x - 1)")];
    for (rep, (name, index, bucket)) in report.representatives.iter().zip(expected) {
        assert_eq!((rep.name.as_str(), rep.index, rep.bucket.as_str()), (name, index, bucket));
    }
}

#[test]
fn char_poly_invariant_under_conjugation() {
    let perms = classifier::permutation_matrices();
    for m in classifier::enumerate_binary3() {
        let cp = m.char_poly();
        for p in &perms {
            assert_eq!(classifier::conjugate(p, &m).char_poly(), cp);
        }
    }
}

#[test]
fn whole_catalog_passes() {
    let reports = identities::check_catalog(200, 100);
    assert_eq!(reports.len(), identities::catalog().len());
    for r in &reports {
        assert!(r.passed(), "{}: {:?}", r.id, r.failures.first());
        assert!(r.checked > 0, "{}", r.id);
    }
    assert!(identities::total_defect(&reports).is_zero());
}

#[test]
fn sign_factor_is_load_bearing() {
    for id in identities::catalog().iter().filter(|i| i.alternating) {
        assert!(id.sign_flip_detected(10), "{} passes with the sign flipped", id.code);
    }
    let flagged: Vec<&str> = identities::catalog().iter().filter(|i| i.alternating).map(|i| i.code).collect();
    for code in ["SIMP", "L7", "C28", "C23-17", "I27", "I28", "DET2"] {
        assert!(flagged.contains(&code), "{code}");
    }
}

#[test]
fn two_addition_formulas_agree_case_by_case() {
    let a = identities::find("ID9").unwrap().values(50, 50);
    let b = identities::find("C1-3").unwrap().values(50, 50);
    assert_eq!(a, b);
}

#[test]
fn lower_bounds_are_tight_enough() {
    // Every entry evaluates at its own lower bound.
    for id in identities::catalog() {
        let m = (id.arity != Arity::One).then_some(id.m_min.max(if id.m_at_least_n { id.n_min } else { 0 }));
        let k = (id.arity == Arity::Three).then_some(0);
        assert!(id.check_at(id.n_min, m, k).unwrap().pass, "{}", id.code);
    }
}

#[test]
fn intro_matrix_powers() {
    for n in 1..=100 {
        assert!(pellmat::intro_mat2_check(n).unwrap());
    }
    let m: Mat3<i64> = pellmat::u1();
    assert_eq!(m.row_sum_multiset(), [1, 3, 3]);
    assert_eq!(m.transpose().row_sum_multiset(), [2, 2, 3]);
}
