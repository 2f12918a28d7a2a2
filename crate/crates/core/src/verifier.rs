//! Verification orchestration: symbolic reports, seeded point checks,
//! parameter sweeps and the evaluation benchmark.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::binomial::binom_int;
use crate::error::{Error, Result};
use crate::identities::{self as id, chebyshev_closed, chebyshev_recurrence};
use crate::poly::{count_ring_ops, Polynomial};
use crate::rational::Rational;
use crate::ring::Ring;
use crate::sample::PointSample;

/// Outcome of comparing two constructions symbolically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity_name: String,
    pub parameter: i64,
    pub equal: bool,
    pub lhs_rendered: String,
    pub rhs_rendered: String,
    pub difference_rendered: String,
    pub term_counts: (usize, usize),
    pub elapsed_micros: u64,
}

impl IdentityReport {
    /// Compares `lhs` and `rhs`; `equal` is decided by their difference.
    pub fn compare(
        name: impl Into<String>,
        parameter: i64,
        lhs: &Polynomial,
        rhs: &Polynomial,
        elapsed_micros: u64,
    ) -> Result<Self> {
        let diff = lhs.try_sub(rhs)?;
        Ok(IdentityReport {
            identity_name: name.into(),
            parameter,
            equal: diff.is_zero(),
            lhs_rendered: lhs.render(),
            rhs_rendered: rhs.render(),
            difference_rendered: diff.render(),
            term_counts: (lhs.term_count(), rhs.term_count()),
            elapsed_micros,
        })
    }

    /// Builds both sides with `build`, timing construction and comparison.
    pub fn timed(
        name: impl Into<String>,
        parameter: i64,
        build: impl FnOnce() -> Result<(Polynomial, Polynomial)>,
    ) -> Result<Self> {
        let start = Instant::now();
        let (lhs, rhs) = build()?;
        let diff_free = IdentityReport::compare(name, parameter, &lhs, &rhs, 0)?;
        Ok(IdentityReport {
            elapsed_micros: start.elapsed().as_micros() as u64,
            ..diff_free
        })
    }
}

/// The lemma suites of the proof.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lemma {
    /// `f` definition vs. its single-sum closed form.
    F,
    /// `g` definition vs. its single-sum closed form.
    G,
    Jensen,
    /// Closed form vs. three-term recurrence.
    Chebyshev,
    /// Term-by-term telescoping sum vs. `(x-m) C(x, m)`.
    Telescope,
    /// `Σ_k (-1)^k C(k, j-k) · collapse(j, k)` vs. `(-1)^j U_j(1)`.
    Collapse,
}

impl Lemma {
    pub const ALL: [Lemma; 6] = [
        Lemma::F,
        Lemma::G,
        Lemma::Jensen,
        Lemma::Chebyshev,
        Lemma::Telescope,
        Lemma::Collapse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::F => "f",
            Lemma::G => "g",
            Lemma::Jensen => "jensen",
            Lemma::Chebyshev => "chebyshev",
            Lemma::Telescope => "telescope",
            Lemma::Collapse => "collapse",
        }
    }

    /// Parameter range swept by [`sweep`].
    pub fn suite_max(self) -> u32 {
        match self {
            Lemma::F | Lemma::G | Lemma::Telescope => 25,
            Lemma::Jensen | Lemma::Collapse => 20,
            Lemma::Chebyshev => 50,
        }
    }

    /// The two independent constructions this lemma equates.
    pub fn sides(self, parameter: u32) -> (Polynomial, Polynomial) {
        let p = parameter;
        match self {
            Lemma::F => (id::f_def(p), id::f_closed(p)),
            Lemma::G => (id::g_def(p), id::g_closed(p)),
            Lemma::Jensen => (id::jensen_lhs(p), id::jensen_rhs(p)),
            Lemma::Chebyshev => (chebyshev_closed(p).into_poly(), chebyshev_recurrence(p).into_poly()),
            Lemma::Telescope => (id::telescoped_sum(p), id::telescope_targets(p).1),
            Lemma::Collapse => collapse_sides(p),
        }
    }
}

fn collapse_sides(j: u32) -> (Polynomial, Polynomial) {
    let ring = id::z_ring();
    let j = i64::from(j);
    let mut inner = Polynomial::zero(&ring);
    for k in (j + 1) / 2..=j {
        let outer = Rational::from(binom_int(k, j - k));
        let collapsed = id::binomial_collapse(j, k).expect("k in the collapse range");
        let term = collapsed.scale(&outer);
        inner = if k % 2 == 0 { &inner + &term } else { &inner - &term };
    }
    let u_at_one = chebyshev_recurrence(j as u32).eval(&Rational::one());
    let signed = if j % 2 == 0 { u_at_one } else { -u_at_one };
    (inner, Polynomial::constant(&ring, signed))
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::UnknownLemma(s.to_string()))
    }
}

fn non_negative(parameter: i64) -> Result<u32> {
    u32::try_from(parameter)
        .map_err(|_| Error::Precondition(format!("parameter must be a non-negative 32-bit integer, got {parameter}")))
}

/// Symbolic check of the main identity at `m`.
pub fn verify_identity(m: u32) -> IdentityReport {
    IdentityReport::timed("main", i64::from(m), || Ok((id::lhs_identity(m), id::rhs_identity(m))))
        .expect("both sides live in (x, y, z)")
}

pub fn verify_lemma(name: &str, parameter: i64) -> Result<IdentityReport> {
    let lemma: Lemma = name.parse()?;
    let p = non_negative(parameter)?;
    IdentityReport::timed(lemma.name(), parameter, || Ok(lemma.sides(p)))
}

/// Both sides of a named identity: `main` or any lemma name.
pub fn identity_sides(name: &str, parameter: i64) -> Result<(Polynomial, Polynomial)> {
    let p = non_negative(parameter)?;
    if name == "main" {
        return Ok((id::lhs_identity(p), id::rhs_identity(p)));
    }
    let lemma: Lemma = name.parse().map_err(|_| Error::UnknownIdentity(name.to_string()))?;
    Ok(lemma.sides(p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointCheckReport {
    pub identity_name: String,
    pub parameter: i64,
    pub trials: u64,
    pub seed: u64,
    pub failures: u64,
    pub first_failure: Option<PointSample>,
}

/// Evaluates both sides of a named identity at `trials` seeded points.
pub fn random_point_check(identity_name: &str, m: i64, trials: u64, seed: u64) -> Result<PointCheckReport> {
    let (lhs, rhs) = identity_sides(identity_name, m)?;
    random_point_check_sides(identity_name, m, &lhs, &rhs, trials, seed)
}

/// [`random_point_check`] for explicitly supplied sides.
pub fn random_point_check_sides(
    identity_name: &str,
    parameter: i64,
    lhs: &Polynomial,
    rhs: &Polynomial,
    trials: u64,
    seed: u64,
) -> Result<PointCheckReport> {
    if trials == 0 {
        return Err(Error::Precondition("trials must be at least 1".into()));
    }
    lhs.ring().ensure_same(rhs.ring())?;
    let mut failures = 0;
    let mut first_failure = None;
    for index in 0..trials {
        let point = PointSample::draw(lhs.ring(), seed, index);
        if lhs.eval(&point)? != rhs.eval(&point)? {
            failures += 1;
            first_failure.get_or_insert(point);
        }
    }
    Ok(PointCheckReport {
        identity_name: identity_name.to_string(),
        parameter,
        trials,
        seed,
        failures,
        first_failure,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub m_max: u32,
    pub main: Vec<IdentityReport>,
    pub lemmas: Vec<IdentityReport>,
    pub elapsed_micros: u64,
}

impl SweepReport {
    pub fn all_equal(&self) -> bool {
        self.main.iter().chain(&self.lemmas).all(|r| r.equal)
    }
}

/// Main identity for every `m` in `0..=m_max`, plus every lemma suite over
/// its full range, on the global rayon pool.
pub fn sweep(m_max: u32) -> SweepReport {
    let start = Instant::now();
    let main: Vec<_> = (0..=m_max).into_par_iter().map(verify_identity).collect();
    let jobs: Vec<(Lemma, u32)> = Lemma::ALL
        .into_iter()
        .flat_map(|l| (0..=l.suite_max()).map(move |p| (l, p)))
        .collect();
    let lemmas = jobs
        .into_par_iter()
        .map(|(l, p)| {
            IdentityReport::timed(l.name(), i64::from(p), || Ok(l.sides(p))).expect("lemma sides share a ring")
        })
        .collect();
    SweepReport {
        m_max,
        main,
        lemmas,
        elapsed_micros: start.elapsed().as_micros() as u64,
    }
}

/// [`sweep`] on a dedicated pool of `jobs` threads.
pub fn sweep_with_jobs(m_max: u32, jobs: usize) -> Result<SweepReport> {
    if jobs == 0 {
        return Err(Error::Precondition("jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    Ok(pool.install(|| sweep(m_max)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrategyReport {
    pub name: String,
    pub ring_ops: u64,
    pub elapsed_micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchReport {
    pub m: u32,
    pub points: u64,
    pub seed: u64,
    pub strategies: Vec<StrategyReport>,
    pub disagreements: u64,
    pub agreed: bool,
}

impl BenchReport {
    pub fn strategy(&self, name: &str) -> Option<&StrategyReport> {
        self.strategies.iter().find(|s| s.name == name)
    }

    /// Closed forms used strictly fewer ring operations than the definitions.
    pub fn closed_cheaper(&self) -> bool {
        let ops = |n| self.strategy(n).map(|s| s.ring_ops).unwrap_or(0);
        ops("f_closed") < ops("f_def") && ops("g_closed") < ops("g_def")
    }
}

type Strategy = fn(&Polynomial, &Polynomial, &Polynomial, u32) -> Polynomial;

const STRATEGIES: [(&str, Strategy); 4] = [
    ("f_def", |x, y, z, m| id::f_def_with(x, y, z, m)),
    ("f_closed", |x, _, z, m| id::f_closed_with(x, z, m)),
    ("g_def", |x, _, z, m| id::g_def_with(x, z, m)),
    ("g_closed", |x, _, z, m| id::g_closed_with(x, z, m)),
];

/// Exact evaluation of `f` and `g` at `points` seeded samples, once through
/// each definition and once through each closed form.
///
/// Each strategy runs its construction over constant polynomials, so the
/// ring-operation count measures the cost of the formula itself.
pub fn bench(m: u32, points: u64, seed: u64) -> Result<BenchReport> {
    if points == 0 {
        return Err(Error::Precondition("points must be at least 1".into()));
    }
    let sample_ring = id::xyz_ring();
    let constants = Ring::constants();
    let samples: Vec<[Polynomial; 3]> = (0..points)
        .map(|i| {
            let p = PointSample::draw(&sample_ring, seed, i);
            ["x", "y", "z"].map(|v| Polynomial::constant(&constants, p.assignments[v].clone()))
        })
        .collect();

    let mut strategies = Vec::with_capacity(STRATEGIES.len());
    let mut values: Vec<Vec<Rational>> = Vec::with_capacity(STRATEGIES.len());
    for (name, run) in STRATEGIES {
        let start = Instant::now();
        let (vals, ops) = count_ring_ops(|| {
            samples
                .iter()
                .map(|[x, y, z]| run(x, y, z, m).as_constant().expect("constant ring"))
                .collect::<Vec<_>>()
        });
        strategies.push(StrategyReport {
            name: name.to_string(),
            ring_ops: ops,
            elapsed_micros: start.elapsed().as_micros() as u64,
        });
        values.push(vals);
    }

    let disagreements = (0..samples.len())
        .filter(|&i| values[0][i] != values[1][i] || values[2][i] != values[3][i])
        .count() as u64;
    Ok(BenchReport {
        m,
        points,
        seed,
        strategies,
        disagreements,
        agreed: disagreements == 0,
    })
}
