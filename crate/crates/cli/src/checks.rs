//! The `verify` suites: every check is summarised as a named range with the
//! failing points listed.

use num_bigint::BigInt;
use pell_core::identities::{self, IdentityReport};
use pell_core::numtheory;
use pell_core::pellmat::{self, Generator, Similarity};
use pell_core::sequences::{pell_extended, SequenceId};
use pell_core::{zsqrt2, BigMat3, Result};
use serde::{Deserialize, Serialize};

type MatFn = fn(i64) -> Result<BigMat3>;
type IntFn = fn(i64) -> BigInt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub n: i64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub range: (i64, i64),
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl CheckSummary {
    fn new(name: impl Into<String>, range: (i64, i64)) -> Self {
        Self { name: name.into(), range, checked: 0, failures: Vec::new() }
    }

    fn record(&mut self, n: i64, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure { n, detail: detail() });
        }
    }

    fn over(name: &str, lo: i64, hi: i64, mut f: impl FnMut(i64) -> Result<bool>) -> Result<Self> {
        let mut s = Self::new(name, (lo, hi));
        for n in lo..=hi {
            let ok = f(n)?;
            s.record(n, ok, || format!("{name} fails at n = {n}"));
        }
        Ok(s)
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn identities(n_max: i64, m_max: i64) -> Vec<IdentityReport> {
    identities::check_catalog(n_max, m_max)
}

pub fn matrices(n_max: i64) -> Result<Vec<CheckSummary>> {
    let mut out = Vec::new();

    for g in Generator::ALL {
        let m: BigMat3 = g.matrix();
        let mut power = m.clone();
        let name = format!("closed_form_{}", g.name());
        let mut s = CheckSummary::new(&name, (1, n_max));
        for n in 1..=n_max {
            let closed = g.closed_form(n)?;
            s.record(n, closed == power, || format!("closed form of {}^{n} differs from the power", g.name()));
            power = &power * &m;
        }
        out.push(s);
    }

    let id = BigMat3::identity();
    let inverse_pairs: [(&str, MatFn, BigMat3); 2] = [
        ("inverse_u2", pellmat::closed_form_u2_inv, pellmat::u2()),
        ("inverse_u3", pellmat::closed_form_u3_inv, pellmat::u3()),
    ];
    for (name, inv, m) in inverse_pairs {
        let mut power = m.clone();
        let mut s = CheckSummary::new(name, (1, n_max));
        for n in 1..=n_max {
            s.record(n, &inv(n)? * &power == id, || format!("{name}: product is not the identity at n = {n}"));
            power = &power * &m;
        }
        out.push(s);
    }

    let dets: [(&str, BigMat3, IntFn); 3] = [
        ("det_u1_power", pellmat::u1(), |_| BigInt::from(0)),
        ("det_u2_power", pellmat::u2(), |_| BigInt::from(1)),
        ("det_u3_power", pellmat::u3(), |n| BigInt::from(if n % 2 == 0 { 1 } else { -1 })),
    ];
    for (name, m, expected) in dets {
        let mut power = m.clone();
        let mut s = CheckSummary::new(name, (1, n_max));
        for n in 1..=n_max {
            let det = power.det();
            s.record(n, det == expected(n), || format!("{name}: det = {det} at n = {n}"));
            power = &power * &m;
        }
        out.push(s);
    }

    let e = pell_extended::<BigInt>().terms(-1, n_max)?;
    let u1: BigMat3 = pellmat::u1();
    let mut power = u1.clone();
    let mut s = CheckSummary::new("trace_u1_power", (1, n_max));
    for n in 1..=n_max {
        let i = n as usize;
        // e[i] = E(n-1), e[i+1] = E(n)
        let expected = (&e[i] + &e[i + 1]) * 2;
        let trace = power.trace();
        s.record(n, trace == expected, || format!("trace(u1^{n}) = {trace}, expected {expected}"));
        power = &power * &u1;
    }
    out.push(s);

    out.push(CheckSummary::over("binet", 1, n_max, zsqrt2::binet_check)?);
    out.push(CheckSummary::over("binet_sum_difference", 1, n_max, zsqrt2::binet_sum_difference)?);
    out.push(CheckSummary::over("binet_consecutive_sum", 1, n_max, zsqrt2::binet_consecutive_sum)?);
    out.push(CheckSummary::over("binet_b", 1, n_max, zsqrt2::binet_b)?);
    out.push(CheckSummary::over("binet_a_r", 0, n_max, zsqrt2::binet_a_r)?);
    out.push(CheckSummary::over("pell_2x2_power", 1, n_max, pellmat::intro_mat2_check)?);

    let mut s = CheckSummary::new("eigen_residual", (0, 0));
    for g in Generator::ALL {
        let m = g.matrix::<BigInt>();
        for t in g.eigen_system::<BigInt>() {
            s.record(0, pellmat::eigen_residual(&m, &t), || format!("{} eigenpair {} is off", g.name(), t.lam));
        }
    }
    out.push(s);

    let mut s = CheckSummary::new("similar_u1_u1T", (0, 0));
    let sim = pellmat::similar_over_rationals(&pellmat::u1::<BigInt>(), &pellmat::u1t());
    s.record(0, sim == Similarity::Similar, || format!("u1 vs u1T: {sim:?}"));
    out.push(s);

    Ok(out)
}

pub fn numtheory(n_max: i64) -> Result<Vec<CheckSummary>> {
    let mut out = vec![
        CheckSummary::over("congruence_mod4", 1, n_max, numtheory::congruence_mod4)?,
        CheckSummary::over("double_index", 1, n_max, numtheory::double_index_check)?,
    ];

    let mut s = CheckSummary::new("gcd_consecutive", (2, n_max));
    for row in numtheory::gcd_table(n_max)? {
        s.record(row.n, row.pass, || format!("gcd = {}, expected {}", row.gcd, row.expected));
    }
    out.push(s);

    let mut s = CheckSummary::new("gcd_reduction_even", (2, n_max));
    for n in (2..=n_max).step_by(2) {
        for row in numtheory::gcd_reduction_rows(n, &numtheory::even_ks(n))? {
            let at_diagonal_is_one = row.k != n || row.gcd_reduced == BigInt::from(1);
            s.record(n, row.agrees() && at_diagonal_is_one, || {
                format!("k = {}: reduced {} vs direct {}", row.k, row.gcd_reduced, row.gcd_direct)
            });
        }
    }
    out.push(s);

    let mut s = CheckSummary::new("gcd_reduction_odd", (3, n_max));
    for n in (3..=n_max).step_by(2) {
        let ks: Vec<i64> = (3..=n).step_by(2).collect();
        for row in numtheory::gcd_reduction_rows_odd(n, &ks)? {
            s.record(n, row.agrees(), || {
                format!("k = {}: reduced {} vs direct {}", row.k, row.gcd_reduced, row.gcd_direct)
            });
        }
    }
    out.push(s);

    let mut s = CheckSummary::new("partial_sum_bound", (1, n_max));
    s.record(n_max, numtheory::partial_sum_bound(n_max)?, || "s(n) >= r(n+1) somewhere".into());
    out.push(s);

    let mut s = CheckSummary::new("sidon", (1, n_max));
    let report = numtheory::sidon_check(n_max)?;
    s.record(n_max, report.distinct, || format!("collision {:?}", report.first_collision));
    out.push(s);

    let s_terms = pell_core::sequences::terms(SequenceId::S, 0, n_max)?;
    let mut s = CheckSummary::new("partial_sum_vs_recurrence", (0, n_max));
    for n in 0..=n_max {
        let direct = pell_core::sequences::partial_sum(n)?;
        s.record(n, direct == s_terms[n as usize], || format!("sum {direct} vs s(n) {}", s_terms[n as usize]));
    }
    out.push(s);

    Ok(out)
}
