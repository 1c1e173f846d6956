//! Catalog of identities between the Pell-family sequences, with an exact
//! checker and an exhaustive range harness.
//!
//! Each entry is a closed predicate in one parameter `n`, two parameters
//! `(n, m)`, or, for `I-01`, three parameters `(n, a, b)` carried in the
//! `n`, `m`, `k` slots. Both sides are evaluated exactly; a case passes iff
//! they are equal. Identities originally stated with a `1/2` factor are
//! stored multiplied through.
//!
//! Lower bounds come with a [`BoundSource`]: `Stated` bounds are the ones
//! attached to the identity where it was published (some of these reach the
//! backward values `E(-1) = 1` and `Q(-1) = 1`), `Derived` bounds are the
//! smallest `n` for which every referenced index is non-negative.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::alt_sign;
use crate::sequences::{builtin_spec, companion_extended, pell_extended, SequenceId};

/// Largest `a`, `b` the range harness uses for `I-01`.
pub const THREE_PARAM_CAP: i64 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Arity {
    One,
    Two,
    Three,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundSource {
    Stated,
    Derived,
}

/// Precomputed terms of every sequence the catalog references.
///
/// `E` and `Q` start at index -1; the others at 0.
pub struct Table {
    e: Vec<BigInt>,
    q: Vec<BigInt>,
    qhat: Vec<BigInt>,
    b: Vec<BigInt>,
    r: Vec<BigInt>,
    a: Vec<BigInt>,
}

impl Table {
    pub fn new(max_index: i64) -> Self {
        let hi = max_index.max(4);
        let base = |id| builtin_spec::<BigInt>(id).terms(0, hi).expect("valid range");
        Self {
            e: pell_extended::<BigInt>().terms(-1, hi).expect("valid range"),
            q: companion_extended::<BigInt>().terms(-1, hi).expect("valid range"),
            qhat: base(SequenceId::QHat),
            b: base(SequenceId::B),
            r: base(SequenceId::R),
            a: base(SequenceId::A),
        }
    }

    pub fn max_index(&self) -> i64 {
        self.b.len() as i64 - 1
    }

    fn at(v: &[BigInt], offset: i64, i: i64) -> BigInt {
        v[(i + offset) as usize].clone()
    }
}

/// Evaluation context: the term table plus the sign convention. With
/// `flip` set, every `(-1)^n` is replaced by `(-1)^(n+1)`.
struct Ctx<'a> {
    t: &'a Table,
    flip: bool,
}

impl Ctx<'_> {
    fn e(&self, i: i64) -> BigInt {
        Table::at(&self.t.e, 1, i)
    }
    fn q(&self, i: i64) -> BigInt {
        Table::at(&self.t.q, 1, i)
    }
    fn qh(&self, i: i64) -> BigInt {
        Table::at(&self.t.qhat, 0, i)
    }
    fn b(&self, i: i64) -> BigInt {
        Table::at(&self.t.b, 0, i)
    }
    fn r(&self, i: i64) -> BigInt {
        Table::at(&self.t.r, 0, i)
    }
    fn a(&self, i: i64) -> BigInt {
        Table::at(&self.t.a, 0, i)
    }
    /// `(-1)^p`, or its negation when flipped.
    fn alt(&self, p: i64) -> BigInt {
        alt_sign(if self.flip { p + 1 } else { p })
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Parameters of one case; `m` and `k` are 0 when unused.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Point {
    n: i64,
    m: i64,
    k: i64,
}

type Eval = fn(&Ctx<'_>, Point) -> (BigInt, BigInt);

/// One catalog entry.
pub struct Identity {
    pub code: &'static str,
    pub location: &'static str,
    pub formula: &'static str,
    /// Original statement when the catalog stores a multiplied-through form.
    pub cleared_from: Option<&'static str>,
    /// Published form when it differs from the top-left entry of the matrix
    /// product it comes from; that form fails for `m ≥ 2`.
    pub corrected_from: Option<&'static str>,
    pub arity: Arity,
    pub n_min: i64,
    pub m_min: i64,
    /// `I-02` additionally needs `m ≥ n`.
    pub m_at_least_n: bool,
    pub bound: BoundSource,
    /// Contains a `(-1)^n` factor.
    pub alternating: bool,
    eval: Eval,
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Identity")
            .field("code", &self.code)
            .field("formula", &self.formula)
            .finish_non_exhaustive()
    }
}

/// Shorthand for the three catalog layouts.
const fn one(
    code: &'static str,
    location: &'static str,
    formula: &'static str,
    n_min: i64,
    bound: BoundSource,
    alternating: bool,
    eval: Eval,
) -> Identity {
    Identity {
        code,
        location,
        formula,
        cleared_from: None,
        corrected_from: None,
        arity: Arity::One,
        n_min,
        m_min: 0,
        m_at_least_n: false,
        bound,
        alternating,
        eval,
    }
}

const fn two(code: &'static str, location: &'static str, formula: &'static str, eval: Eval) -> Identity {
    Identity {
        code,
        location,
        formula,
        cleared_from: None,
        corrected_from: None,
        arity: Arity::Two,
        n_min: 1,
        m_min: 1,
        m_at_least_n: false,
        bound: BoundSource::Stated,
        alternating: false,
        eval,
    }
}

const fn cleared(mut id: Identity, original: &'static str) -> Identity {
    id.cleared_from = Some(original);
    id
}

const fn corrected(mut id: Identity, printed: &'static str) -> Identity {
    id.corrected_from = Some(printed);
    id
}

use BoundSource::{Derived, Stated};

static CATALOG: [Identity; 54] = [
    Identity {
        code: "I-01",
        location: "Introduction, classical identities",
        formula: "E(n+a)E(n+b) - E(n)E(n+a+b) = E(a)E(b)(-1)^n",
        cleared_from: None,
        corrected_from: None,
        arity: Arity::Three,
        n_min: 0,
        m_min: 0,
        m_at_least_n: false,
        bound: Stated,
        alternating: true,
        eval: |c, p| {
            let (n, a, b) = (p.n, p.m, p.k);
            (
                c.e(n + a) * c.e(n + b) - c.e(n) * c.e(n + a + b),
                c.e(a) * c.e(b) * c.alt(n),
            )
        },
    },
    Identity {
        code: "I-02",
        location: "Introduction, classical identities",
        formula: "E(m)E(n+1) - E(m+1)E(n) = (-1)^n E(m-n)",
        cleared_from: None,
        corrected_from: None,
        arity: Arity::Two,
        n_min: 0,
        m_min: 0,
        m_at_least_n: true,
        bound: Derived,
        alternating: true,
        eval: |c, p| {
            let (n, m) = (p.n, p.m);
            (
                c.e(m) * c.e(n + 1) - c.e(m + 1) * c.e(n),
                c.alt(n) * c.e(m - n),
            )
        },
    },
    one("I-03", "Introduction, classical identities", "E(n)^2 + E(n+1)^2 = E(2n+1)", 0, Derived, false, |c, p| {
        let n = p.n;
        (c.e(n) * c.e(n) + c.e(n + 1) * c.e(n + 1), c.e(2 * n + 1))
    }),
    corrected(
        two("C1-1", "Determinant-zero addition corollary", "E(m+n-1) = E(m-1)E(n-1) + E(n)(2E(m-1)+E(m-2))", |c, p| {
            let (n, m) = (p.n, p.m);
            (
                c.e(m + n - 1),
                c.e(m - 1) * c.e(n - 1) + c.e(n) * (big(2) * c.e(m - 1) + c.e(m - 2)),
            )
        }),
        "E(m+n-1) = 2E(m-1)E(n-1) + E(n)(E(m-1)+E(m-2))",
    ),
    two(
        "C1-2",
        "Determinant-zero addition corollary",
        "E(m+n-1) + E(m+n-2) = 2E(m-1)E(n) + (E(m-1)+E(m-2))(E(n)+E(n-1))",
        |c, p| {
            let (n, m) = (p.n, p.m);
            (
                c.e(m + n - 1) + c.e(m + n - 2),
                big(2) * c.e(m - 1) * c.e(n) + (c.e(m - 1) + c.e(m - 2)) * (c.e(n) + c.e(n - 1)),
            )
        },
    ),
    two("C1-3", "Determinant-zero addition corollary", "E(m+n) = E(m)(E(n)+E(n-1)) + E(n)(E(m)+E(m-1))", |c, p| {
        let (n, m) = (p.n, p.m);
        (
            c.e(m + n),
            c.e(m) * (c.e(n) + c.e(n - 1)) + c.e(n) * (c.e(m) + c.e(m - 1)),
        )
    }),
    two(
        "C1-4",
        "Determinant-zero addition corollary",
        "E(m+n) + E(m+n-1) = 2E(m)E(n) + (E(m)+E(m-1))(E(n)+E(n-1))",
        |c, p| {
            let (n, m) = (p.n, p.m);
            (
                c.e(m + n) + c.e(m + n - 1),
                big(2) * c.e(m) * c.e(n) + (c.e(m) + c.e(m - 1)) * (c.e(n) + c.e(n - 1)),
            )
        },
    ),
    one("I4", "Binet theorem, determinant-zero generator", "Q(n-1) = E(n) + E(n-1)", 1, Derived, false, |c, p| {
        (c.q(p.n - 1), c.e(p.n) + c.e(p.n - 1))
    }),
    one("I3", "Binet theorem, determinant-zero generator", "E(n-1) + E(n-2) = 2E(n) - Q(n-1)", 2, Derived, false, |c, p| {
        let n = p.n;
        (c.e(n - 1) + c.e(n - 2), big(2) * c.e(n) - c.q(n - 1))
    }),
    one("L4", "Pell numbers from b", "E(n) = b(n) + b(n-1)", 1, Stated, false, |c, p| {
        (c.e(p.n), c.b(p.n) + c.b(p.n - 1))
    }),
    one("L6", "Pell four-term relation", "3E(n-1) + E(n) = E(n+1) - E(n-2)", 1, Stated, false, |c, p| {
        let n = p.n;
        (big(3) * c.e(n - 1) + c.e(n), c.e(n + 1) - c.e(n - 2))
    }),
    one("SIMP", "Simpson formula", "E(n)E(n-2) - E(n-1)^2 = (-1)^(n-1)", 2, Derived, true, |c, p| {
        let n = p.n;
        (c.e(n) * c.e(n - 2) - c.e(n - 1) * c.e(n - 1), c.alt(n - 1))
    }),
    one("L7", "Cassini-type Pell identity", "E(n)^2 - E(n-1)^2 - 2E(n)E(n-1) = (-1)^(n-1)", 1, Stated, true, |c, p| {
        let n = p.n;
        (
            c.e(n) * c.e(n) - c.e(n - 1) * c.e(n - 1) - big(2) * c.e(n) * c.e(n - 1),
            c.alt(n - 1),
        )
    }),
    one("L13", "Companion sequence from E", "Q(n) = E(n) + E(n+1)", 1, Stated, false, |c, p| {
        (c.q(p.n), c.e(p.n) + c.e(p.n + 1))
    }),
    one("DET2", "Determinant of u2^n", "(Q(n-1) - 2b(n))(-1)^n = 1", 1, Stated, true, |c, p| {
        let n = p.n;
        ((c.q(n - 1) - big(2) * c.b(n)) * c.alt(n), big(1))
    }),
    two(
        "ID7",
        "Determinant-one addition corollary",
        "E(m+n) + E(m+n-1) - b(m+n) = (E(m)+E(m-1)-b(m))(E(n)+E(n-1)-b(n)) + b(m)b(n) + E(m)E(n)",
        |c, p| {
            let (n, m) = (p.n, p.m);
            (
                c.e(m + n) + c.e(m + n - 1) - c.b(m + n),
                (c.e(m) + c.e(m - 1) - c.b(m)) * (c.e(n) + c.e(n - 1) - c.b(n))
                    + c.b(m) * c.b(n)
                    + c.e(m) * c.e(n),
            )
        },
    ),
    two(
        "ID8",
        "Determinant-one addition corollary",
        "b(m+n) = b(n)(E(m)+E(m-1)-b(m)) + b(m)(E(n)+E(n-1)-b(n)) + E(m)E(n)",
        |c, p| {
            let (n, m) = (p.n, p.m);
            (
                c.b(m + n),
                c.b(n) * (c.e(m) + c.e(m - 1) - c.b(m))
                    + c.b(m) * (c.e(n) + c.e(n - 1) - c.b(n))
                    + c.e(m) * c.e(n),
            )
        },
    ),
    two("ID9", "Determinant-one addition corollary", "E(m+n) = E(n)(E(m)+E(m-1)) + E(m)(E(n)+E(n-1))", |c, p| {
        let (n, m) = (p.n, p.m);
        (
            c.e(m + n),
            c.e(n) * (c.e(m) + c.e(m - 1)) + c.e(m) * (c.e(n) + c.e(n - 1)),
        )
    }),
    two(
        "ID10",
        "Determinant-one addition corollary",
        "E(m+n) + E(m+n-1) = (E(m)+E(m-1))(E(n)+E(n-1)) + 2E(m)E(n)",
        |c, p| {
            let (n, m) = (p.n, p.m);
            (
                c.e(m + n) + c.e(m + n - 1),
                (c.e(m) + c.e(m - 1)) * (c.e(n) + c.e(n - 1)) + big(2) * c.e(m) * c.e(n),
            )
        },
    ),
    two("ID11", "Companion addition corollary", "Q(m+n-1) = Q(n-1)Q(m-1) + 2E(n)E(m)", |c, p| {
        let (n, m) = (p.n, p.m);
        (
            c.q(m + n - 1),
            c.q(n - 1) * c.q(m - 1) + big(2) * c.e(n) * c.e(m),
        )
    }),
    two("ID12", "Companion addition corollary", "E(m+n) = E(m)Q(n-1) + E(n)Q(m-1)", |c, p| {
        let (n, m) = (p.n, p.m);
        (c.e(m + n), c.e(m) * c.q(n - 1) + c.e(n) * c.q(m - 1))
    }),
    two(
        "ID13",
        "Companion addition corollary",
        "b(m+n) = b(n)Q(m-1) + b(m)Q(n-1) - 2b(n)b(m) + E(n)E(m)",
        |c, p| {
            let (n, m) = (p.n, p.m);
            (
                c.b(m + n),
                c.b(n) * c.q(m - 1) + c.b(m) * c.q(n - 1) - big(2) * c.b(n) * c.b(m)
                    + c.e(n) * c.e(m),
            )
        },
    ),
    one("L11", "Parity bridge between b and r", "b(n) = r(n) + (n mod 2)", 1, Stated, false, |c, p| {
        (c.b(p.n), c.r(p.n) + big(p.n.rem_euclid(2)))
    }),
    one("L12", "Pell-Lucas numbers from E", "Q^(n) = E(n+1) + E(n-1)", 1, Stated, false, |c, p| {
        (c.qh(p.n), c.e(p.n + 1) + c.e(p.n - 1))
    }),
    one("C13", "Pell-Lucas numbers from r", "Q^(n) = 4r(n) + 2", 0, Stated, false, |c, p| {
        (c.qh(p.n), big(4) * c.r(p.n) + big(2))
    }),
    one("C16", "Companion sequence from r", "Q(n) = 2r(n+1) + 1", 0, Stated, false, |c, p| {
        (c.q(p.n), big(2) * c.r(p.n + 1) + big(1))
    }),
    one("QHATQ", "Pell-Lucas versus companion", "Q^(n) = 2Q(n-1)", 0, Stated, false, |c, p| {
        (c.qh(p.n), big(2) * c.q(p.n - 1))
    }),
    one("L13A", "Pell numbers from r", "E(n) = r(n) + r(n-1) + 1", 2, Stated, false, |c, p| {
        (c.e(p.n), c.r(p.n) + c.r(p.n - 1) + big(1))
    }),
    one("ID3", "Inverse-power auxiliary identities", "r(n) + E(n) = r(n+1)", 1, Stated, false, |c, p| {
        (c.r(p.n) + c.e(p.n), c.r(p.n + 1))
    }),
    one("ID4", "Inverse-power auxiliary identities", "E(n) + Q(n-1) = E(n+1)", 1, Stated, false, |c, p| {
        (c.e(p.n) + c.q(p.n - 1), c.e(p.n + 1))
    }),
    one("ID5", "Inverse-power auxiliary identities", "2E(n) + Q(n-1) = Q(n)", 1, Stated, false, |c, p| {
        (big(2) * c.e(p.n) + c.q(p.n - 1), c.q(p.n))
    }),
    one("ID6", "Inverse-power auxiliary identities", "E(n) + Q(n-1) - r(n) = Q(n) - r(n+1)", 1, Stated, false, |c, p| {
        let n = p.n;
        (c.e(n) + c.q(n - 1) - c.r(n), c.q(n) - c.r(n + 1))
    }),
    one("L22", "Companion sequence from b", "Q(n-1) = b(n+1) - b(n-1)", 1, Stated, false, |c, p| {
        (c.q(p.n - 1), c.b(p.n + 1) - c.b(p.n - 1))
    }),
    one(
        "C23-15",
        "Identities from u2^n u2^-n = I",
        "Q(n-1)^2 - (b(n)+r(n))Q(n-1) + 2b(n)r(n) - E(n)^2 = (-1)^n",
        1,
        Stated,
        true,
        |c, p| {
            let n = p.n;
            (
                c.q(n - 1) * c.q(n - 1) - (c.b(n) + c.r(n)) * c.q(n - 1) + big(2) * c.b(n) * c.r(n)
                    - c.e(n) * c.e(n),
                c.alt(n),
            )
        },
    ),
    one(
        "C23-16",
        "Identities from u2^n u2^-n = I",
        "E(n)^2 - (b(n)+r(n))Q(n-1) + 2b(n)r(n) = 0",
        1,
        Stated,
        false,
        |c, p| {
            let n = p.n;
            (
                c.e(n) * c.e(n) - (c.b(n) + c.r(n)) * c.q(n - 1) + big(2) * c.b(n) * c.r(n),
                big(0),
            )
        },
    ),
    one("C23-17", "Identities from u2^n u2^-n = I", "2E(n)^2 - Q(n-1)^2 = (-1)^(n-1)", 1, Stated, true, |c, p| {
        let n = p.n;
        (big(2) * c.e(n) * c.e(n) - c.q(n - 1) * c.q(n - 1), c.alt(n - 1))
    }),
    cleared(
        one("BINB", "Binet theorem for b", "2b(n) = (-1)^(n+1) + Q(n-1)", 1, Derived, true, |c, p| {
            (big(2) * c.b(p.n), c.alt(p.n + 1) + c.q(p.n - 1))
        }),
        "b(n) = ((-1)^(n+1) + Q(n-1)) / 2",
    ),
    one("L24", "a shifted from r", "a(n) = r(n) + 1", 0, Stated, false, |c, p| {
        (c.a(p.n), c.r(p.n) + big(1))
    }),
    one("L25", "a increments by E", "a(n+1) = a(n) + E(n)", 0, Stated, false, |c, p| {
        (c.a(p.n + 1), c.a(p.n) + c.e(p.n))
    }),
    one("C26", "E from r and a", "E(n+1) = E(n) + r(n) + a(n)", 0, Stated, false, |c, p| {
        (c.e(p.n + 1), c.e(p.n) + c.r(p.n) + c.a(p.n))
    }),
    one("C28", "Determinant of u3^n", "(a(n)+r(n))^2 - 2E(n)^2 = (-1)^n", 1, Stated, true, |c, p| {
        let n = p.n;
        let s = c.a(n) + c.r(n);
        (&s * &s - big(2) * c.e(n) * c.e(n), c.alt(n))
    }),
    two("I20", "Determinant-minus-one addition corollary", "a(m+n) = a(m)a(n) + r(m)r(n) + E(m)E(n)", |c, p| {
        let (n, m) = (p.n, p.m);
        (
            c.a(m + n),
            c.a(m) * c.a(n) + c.r(m) * c.r(n) + c.e(m) * c.e(n),
        )
    }),
    two("I21", "Determinant-minus-one addition corollary", "r(m+n) = r(m)a(n) + a(m)r(n) + E(m)E(n)", |c, p| {
        let (n, m) = (p.n, p.m);
        (
            c.r(m + n),
            c.r(m) * c.a(n) + c.a(m) * c.r(n) + c.e(m) * c.e(n),
        )
    }),
    two("I22", "Determinant-minus-one addition corollary", "E(m+n) = E(n)(r(m)+a(m)) + E(m)(r(n)+a(n))", |c, p| {
        let (n, m) = (p.n, p.m);
        (
            c.e(m + n),
            c.e(n) * (c.r(m) + c.a(m)) + c.e(m) * (c.r(n) + c.a(n)),
        )
    }),
    two(
        "I23",
        "Determinant-minus-one addition corollary",
        "r(m+n) + a(m+n) = 2E(m)E(n) + (r(m)+a(m))(r(n)+a(n))",
        |c, p| {
            let (n, m) = (p.n, p.m);
            (
                c.r(m + n) + c.a(m + n),
                big(2) * c.e(m) * c.e(n) + (c.r(m) + c.a(m)) * (c.r(n) + c.a(n)),
            )
        },
    ),
    one("I24", "Companion sequence from a and r", "a(n) + r(n) = Q(n-1)", 0, Stated, false, |c, p| {
        (c.a(p.n) + c.r(p.n), c.q(p.n - 1))
    }),
    one("I25", "Companion sequence from a and r", "E(n+1) = E(n) + Q(n-1)", 0, Stated, false, |c, p| {
        (c.e(p.n + 1), c.e(p.n) + c.q(p.n - 1))
    }),
    one("I26", "Companion sequence from a and r", "a(n+1) = a(n) + E(n)", 0, Stated, false, |c, p| {
        (c.a(p.n + 1), c.a(p.n) + c.e(p.n))
    }),
    one("L29-9", "b and E shift relations", "b(n) + E(n) = (-1)^(n+1) + b(n+1)", 1, Stated, true, |c, p| {
        (c.b(p.n) + c.e(p.n), c.alt(p.n + 1) + c.b(p.n + 1))
    }),
    one("L29-10", "b and E shift relations", "2b(n) + E(n) = (-1)^(n+1) + E(n+1)", 1, Stated, true, |c, p| {
        (big(2) * c.b(p.n) + c.e(p.n), c.alt(p.n + 1) + c.e(p.n + 1))
    }),
    one("I27", "Identities from u3^n u3^-n = I", "E(n)^2 = (-1)^n r(n) + b(n)Q(n-1)", 1, Stated, true, |c, p| {
        let n = p.n;
        (c.e(n) * c.e(n), c.alt(n) * c.r(n) + c.b(n) * c.q(n - 1))
    }),
    one("I28", "Identities from u3^n u3^-n = I", "Q(n-1) = (-1)^n + 2b(n)", 1, Stated, true, |c, p| {
        (c.q(p.n - 1), c.alt(p.n) + big(2) * c.b(p.n))
    }),
    cleared(
        one("BINA", "Binet theorem for a and r", "2a(n) = 1 + Q(n-1)", 1, Derived, false, |c, p| {
            (big(2) * c.a(p.n), big(1) + c.q(p.n - 1))
        }),
        "a(n) = (1 + Q(n-1)) / 2",
    ),
    cleared(
        one("BINR", "Binet theorem for a and r", "2r(n) = Q(n-1) - 1", 1, Derived, false, |c, p| {
            (big(2) * c.r(p.n), c.q(p.n - 1) - big(1))
        }),
        "r(n) = (-1 + Q(n-1)) / 2",
    ),
];

/// The full catalog in a fixed order.
pub fn catalog() -> &'static [Identity] {
    &CATALOG
}

/// Looks up an entry by code.
pub fn find(code: &str) -> Result<&'static Identity> {
    CATALOG
        .iter()
        .find(|id| id.code.eq_ignore_ascii_case(code))
        .ok_or_else(|| Error::UnknownIdentity(code.to_string()))
}

/// One identity instantiated at a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCase {
    pub id: String,
    pub n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(with = "crate::serde_int")]
    pub lhs: BigInt,
    #[serde(with = "crate::serde_int")]
    pub rhs: BigInt,
    pub pass: bool,
}

/// Result of an exhaustive range check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub n_range: (i64, i64),
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_range: Option<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_range: Option<(i64, i64)>,
    pub checked: u64,
    pub failures: Vec<IdentityCase>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Combines two reports for the same identity computed on disjoint parts
    /// of a range.
    pub fn merge(mut self, other: IdentityReport) -> IdentityReport {
        debug_assert_eq!(self.id, other.id);
        let hull = |a: (i64, i64), b: (i64, i64)| (a.0.min(b.0), a.1.max(b.1));
        self.n_range = hull(self.n_range, other.n_range);
        self.m_range = match (self.m_range, other.m_range) {
            (Some(a), Some(b)) => Some(hull(a, b)),
            (a, b) => a.or(b),
        };
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }
}

impl Identity {
    fn validate(&self, p: Point) -> Result<()> {
        let what = |v: &str| format!("{} parameter {v}", self.code);
        if p.n < self.n_min {
            return Err(Error::domain(what("n"), p.n, self.n_min));
        }
        match self.arity {
            Arity::One => {}
            Arity::Two => {
                let min = if self.m_at_least_n { p.n.max(self.m_min) } else { self.m_min };
                if p.m < min {
                    return Err(Error::domain(what("m"), p.m, min));
                }
            }
            Arity::Three => {
                if p.m < 0 {
                    return Err(Error::domain(what("a"), p.m, 0));
                }
                if p.k < 0 {
                    return Err(Error::domain(what("b"), p.k, 0));
                }
            }
        }
        Ok(())
    }

    fn largest_index(p: Point) -> i64 {
        2 * (p.n + p.m + p.k) + 2
    }

    fn case(&self, ctx: &Ctx<'_>, p: Point) -> IdentityCase {
        let (lhs, rhs) = (self.eval)(ctx, p);
        IdentityCase {
            id: self.code.to_string(),
            n: p.n,
            m: (self.arity != Arity::One).then_some(p.m),
            k: (self.arity == Arity::Three).then_some(p.k),
            pass: lhs == rhs,
            lhs,
            rhs,
        }
    }

    fn point(&self, n: i64, m: Option<i64>, k: Option<i64>) -> Result<Point> {
        let need = |v: Option<i64>, name: &str| {
            v.ok_or_else(|| Error::Argument(format!("{} needs parameter {name}", self.code)))
        };
        let p = match self.arity {
            Arity::One => Point { n, m: 0, k: 0 },
            Arity::Two => Point { n, m: need(m, "m")?, k: 0 },
            Arity::Three => Point { n, m: need(m, "a")?, k: need(k, "b")? },
        };
        self.validate(p)?;
        Ok(p)
    }

    /// Evaluates both sides at one point. For `I-01` pass `m = a`, `k = b`.
    pub fn check_at(&self, n: i64, m: Option<i64>, k: Option<i64>) -> Result<IdentityCase> {
        let p = self.point(n, m, k)?;
        let table = Table::new(Self::largest_index(p));
        Ok(self.case(&Ctx { t: &table, flip: false }, p))
    }

    fn points(&self, n_max: i64, m_max: i64) -> Vec<Point> {
        let mut out = Vec::new();
        for n in self.n_min..=n_max {
            match self.arity {
                Arity::One => out.push(Point { n, m: 0, k: 0 }),
                Arity::Two => {
                    let lo = if self.m_at_least_n { n.max(self.m_min) } else { self.m_min };
                    out.extend((lo..=m_max).map(|m| Point { n, m, k: 0 }));
                }
                Arity::Three => {
                    let cap = m_max.min(THREE_PARAM_CAP);
                    for a in 0..=cap {
                        out.extend((0..=cap).map(|b| Point { n, m: a, k: b }));
                    }
                }
            }
        }
        out
    }

    fn ranges(&self, n_max: i64, m_max: i64) -> IdentityReport {
        let (m_range, k_range) = match self.arity {
            Arity::One => (None, None),
            Arity::Two => (Some((self.m_min, m_max)), None),
            Arity::Three => {
                let cap = m_max.min(THREE_PARAM_CAP);
                (Some((0, cap)), Some((0, cap)))
            }
        };
        IdentityReport {
            id: self.code.to_string(),
            n_range: (self.n_min, n_max),
            m_range,
            k_range,
            checked: 0,
            failures: Vec::new(),
        }
    }

    /// Checks every valid point with `n ≤ n_max` and, for multi-parameter
    /// entries, `m ≤ m_max` (defaults to `n_max`). `I-01` caps `a`, `b` at
    /// [`THREE_PARAM_CAP`].
    pub fn check_range_in(&self, table: &Table, n_max: i64, m_max: Option<i64>) -> IdentityReport {
        self.range_with(table, n_max, m_max, false)
    }

    fn range_with(&self, table: &Table, n_max: i64, m_max: Option<i64>, flip: bool) -> IdentityReport {
        let m_max = m_max.unwrap_or(n_max);
        let points = self.points(n_max, m_max);
        let mut report = self.ranges(n_max, m_max);
        let needed = points.iter().map(|&p| Self::largest_index(p)).max().unwrap_or(0);
        let owned;
        let table = if needed > table.max_index() {
            owned = Table::new(needed);
            &owned
        } else {
            table
        };
        let ctx = Ctx { t: table, flip };
        for p in points {
            let case = self.case(&ctx, p);
            report.checked += 1;
            if !case.pass {
                report.failures.push(case);
            }
        }
        report
    }

    pub fn check_range(&self, n_max: i64, m_max: Option<i64>) -> IdentityReport {
        let m = m_max.unwrap_or(n_max);
        let table = Table::new(2 * (n_max + 2 * m) + 2);
        self.check_range_in(&table, n_max, m_max)
    }

    /// Evaluates with every `(-1)^p` replaced by `(-1)^(p+1)` and reports
    /// whether at least one point with all parameters `≤ cap` then fails.
    /// False for identities without a sign factor.
    pub fn sign_flip_detected(&self, cap: i64) -> bool {
        if !self.alternating {
            return false;
        }
        let points = self.points(cap, cap);
        let needed = points.iter().map(|&p| Self::largest_index(p)).max().unwrap_or(0);
        let table = Table::new(needed);
        let ctx = Ctx { t: &table, flip: true };
        points.into_iter().any(|p| !self.case(&ctx, p).pass)
    }

    /// Evaluates both sides over the grid and returns the `(lhs, rhs)` pairs,
    /// for comparing two entries case by case.
    pub fn values(&self, n_max: i64, m_max: i64) -> Vec<(i64, i64, BigInt, BigInt)> {
        let points = self.points(n_max, m_max);
        let needed = points.iter().map(|&p| Self::largest_index(p)).max().unwrap_or(0);
        let table = Table::new(needed);
        let ctx = Ctx { t: &table, flip: false };
        points
            .into_iter()
            .map(|p| {
                let (l, r) = (self.eval)(&ctx, p);
                (p.n, p.m, l, r)
            })
            .collect()
    }
}

/// `check(code, n, m)`; `I-01` additionally needs [`Identity::check_at`].
pub fn check(code: &str, n: i64, m: Option<i64>) -> Result<IdentityCase> {
    find(code)?.check_at(n, m, None)
}

pub fn check_range(code: &str, n_max: i64, m_max: Option<i64>) -> Result<IdentityReport> {
    let id = find(code)?;
    if n_max < id.n_min {
        return Err(Error::domain(format!("{} n_max", id.code), n_max, id.n_min));
    }
    Ok(id.check_range(n_max, m_max))
}

/// Runs the whole catalog: one-parameter entries up to `n_max`, the others
/// with both parameters up to `m_max`.
pub fn check_catalog(n_max: i64, m_max: i64) -> Vec<IdentityReport> {
    catalog_with(n_max, m_max, false)
}

/// [`check_catalog`] with every `(-1)^p` replaced by `(-1)^(p+1)`. Every
/// alternating entry is expected to fail.
pub fn check_catalog_sign_flipped(n_max: i64, m_max: i64) -> Vec<IdentityReport> {
    catalog_with(n_max, m_max, true)
}

fn catalog_with(n_max: i64, m_max: i64, flip: bool) -> Vec<IdentityReport> {
    let table = Table::new(2 * (n_max.max(m_max) * 3) + 2);
    CATALOG
        .iter()
        .map(|id| match id.arity {
            Arity::One => id.range_with(&table, n_max.max(id.n_min - 1), None, flip),
            Arity::Two | Arity::Three => id.range_with(&table, m_max, Some(m_max), flip),
        })
        .collect()
}

/// One exported catalog record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub code: String,
    pub location: String,
    pub formula: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cleared_from: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corrected_from: Option<String>,
    pub arity: Arity,
    pub n_min: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_min: Option<i64>,
    pub m_at_least_n: bool,
    pub bound: BoundSource,
    pub alternating: bool,
}

/// The catalog as serializable records, in catalog order.
pub fn export_catalog() -> Vec<CatalogRecord> {
    CATALOG
        .iter()
        .map(|id| CatalogRecord {
            code: id.code.into(),
            location: id.location.into(),
            formula: id.formula.into(),
            cleared_from: id.cleared_from.map(Into::into),
            corrected_from: id.corrected_from.map(Into::into),
            arity: id.arity,
            n_min: id.n_min,
            m_min: (id.arity != Arity::One).then_some(id.m_min),
            m_at_least_n: id.m_at_least_n,
            bound: id.bound,
            alternating: id.alternating,
        })
        .collect()
}

/// Sum of absolute differences over the failures; 0 for a clean report.
pub fn total_defect(reports: &[IdentityReport]) -> BigInt {
    reports
        .iter()
        .flat_map(|r| r.failures.iter())
        .map(|c| (&c.lhs - &c.rhs).abs())
        .sum()
}
