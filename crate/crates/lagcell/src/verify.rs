//! The verification harness behind `lagcell verify`.
//!
//! Each check either passes with a short summary or fails with the first
//! counterexample spelled out. The checks are exact; there are no
//! tolerances anywhere.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cells::{enumerate, Bounds, Space};
use crate::chain::{build, stabilize};
use crate::diagrams::ShiftedDiagram;
use crate::homology::{homology, Coefficients};
use crate::incidence::{degree, jacobian_mixed};
use crate::rowreduce::{
    is_lagrangian, jacobian_oracle, materialize, pattern, random_membership_values,
    random_nonzero_rational, rational_pow, GaussianRational, Rational,
};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Check {
    DdZero,
    Jacobian,
    Euler,
    Subdivision,
    RealEmbed,
    Lagrangian,
    Stabilize,
}

pub const ALL_CHECKS: [Check; 7] = [
    Check::DdZero,
    Check::Jacobian,
    Check::Euler,
    Check::Subdivision,
    Check::RealEmbed,
    Check::Lagrangian,
    Check::Stabilize,
];

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Check::DdZero => "ddzero",
            Check::Jacobian => "jacobian",
            Check::Euler => "euler",
            Check::Subdivision => "subdivision",
            Check::RealEmbed => "realembed",
            Check::Lagrangian => "lagrangian",
            Check::Stabilize => "stabilize",
        };
        write!(f, "{}", name)
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub check: Check,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(check: Check, detail: impl Into<String>) -> Self {
        CheckOutcome { check, passed: true, detail: detail.into() }
    }

    fn fail(check: Check, detail: impl Into<String>) -> Self {
        CheckOutcome { check, passed: false, detail: detail.into() }
    }
}

/// Runs one check at rank `n`. `samples` and `seed` only affect the
/// randomized checks (`jacobian`, `lagrangian`).
pub fn run_check(
    check: Check,
    n: usize,
    samples: usize,
    seed: u64,
    bounds: &Bounds,
) -> Result<CheckOutcome> {
    if n < 1 {
        return Err(Error::Domain("rank must be at least 1".into()));
    }
    match check {
        Check::DdZero => check_ddzero(n, bounds),
        Check::Jacobian => check_jacobian(n, samples, seed, bounds),
        Check::Euler => check_euler(n, bounds),
        Check::Subdivision => check_subdivision(n, bounds),
        Check::RealEmbed => check_realembed(n, bounds),
        Check::Lagrangian => check_lagrangian(n, samples, seed, bounds),
        Check::Stabilize => check_stabilize(n, bounds),
    }
}

fn check_ddzero(n: usize, bounds: &Bounds) -> Result<CheckOutcome> {
    let mut notes = Vec::new();
    let mut spaces = vec![Space::Real, Space::Complex];
    if n <= bounds.mixed {
        spaces.push(Space::Mixed);
    } else {
        notes.push(format!("mixed skipped (n > {})", bounds.mixed));
    }
    for space in spaces {
        let cc = build(n, space, bounds)?;
        let report = cc.verify_ddzero();
        if let Some(&(d, r, c, v)) = report.violations.first() {
            let source = cc.cells_in_dim(d + 1)[c].clone();
            let target = cc.cells_in_dim(d - 1)[r].clone();
            return Ok(CheckOutcome::fail(
                Check::DdZero,
                format!(
                    "(∂_{}∘∂_{})[{} → {}] = {} in the {} complex",
                    d,
                    d + 1,
                    source,
                    target,
                    v,
                    space
                ),
            ));
        }
        notes.push(format!("{}: ∂∘∂ = 0 across {} dims", space, cc.max_dim() + 1));
    }
    Ok(CheckOutcome::pass(Check::DdZero, notes.join("; ")))
}

/// Closed-form Jacobian monomials against the jet oracle, for every cover
/// and every `μ ≤ λ` at rank `n`, at `samples` random points for each of two
/// random parameter values.
fn check_jacobian(n: usize, samples: usize, seed: u64, bounds: &Bounds) -> Result<CheckOutcome> {
    if n > bounds.mixed {
        return Err(Error::Resource(format!(
            "jacobian check at rank {} exceeds bound {}",
            n, bounds.mixed
        )));
    }
    let diagrams = ShiftedDiagram::all(n)?;
    let jobs: Vec<(ShiftedDiagram, ShiftedDiagram, ShiftedDiagram)> = diagrams
        .iter()
        .flat_map(|lambda| {
            lambda.covers_above().into_iter().flat_map(move |(upper, _)| {
                lambda
                    .sub_diagrams()
                    .into_iter()
                    .map(move |mu| (lambda.clone(), upper.clone(), mu))
            })
        })
        .collect();
    let total = jobs.len();
    let failures: Vec<String> = jobs
        .into_par_iter()
        .enumerate()
        .filter_map(|(idx, (lambda, upper, mu))| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (idx as u64).wrapping_mul(0x9e3779b9));
            let expected = jacobian_mixed(&lambda, &upper, &mu).ok()?;
            for _ in 0..2 {
                let t: Rational = random_nonzero_rational(&mut rng);
                let monomial = rational_pow(&t, expected.exponent)
                    * Rational::from_integer(expected.sign.into());
                for _ in 0..samples.max(1) {
                    let z = random_membership_values(&lambda, &mu, &mut rng);
                    match jacobian_oracle(&lambda, &upper, &mu, &z, &t) {
                        Ok(det) => {
                            if det != monomial {
                                return Some(format!(
                                    "cover {} ⋖ {} with μ = {} at t = {}: formula {} but oracle {}",
                                    lambda, upper, mu, t, expected, det
                                ));
                            }
                        }
                        Err(e) => return Some(format!("oracle error: {}", e)),
                    }
                }
            }
            None
        })
        .collect();
    if let Some(first) = failures.first() {
        return Ok(CheckOutcome::fail(Check::Jacobian, first.clone()));
    }
    Ok(CheckOutcome::pass(
        Check::Jacobian,
        format!("{} (cover, μ) pairs agree with the oracle", total),
    ))
}

fn check_euler(n: usize, bounds: &Bounds) -> Result<CheckOutcome> {
    let mut notes = Vec::new();
    let complex = build(n, Space::Complex, bounds)?;
    let expected = 1i64 << n;
    if complex.euler_characteristic() != expected {
        return Ok(CheckOutcome::fail(
            Check::Euler,
            format!("complex χ = {}, expected {}", complex.euler_characteristic(), expected),
        ));
    }
    let real = build(n, Space::Real, bounds)?;
    let real_expected: i64 = ShiftedDiagram::all(n)?
        .iter()
        .map(|l| if l.size() % 2 == 0 { 1 } else { -1 })
        .sum();
    if real.euler_characteristic() != real_expected {
        return Ok(CheckOutcome::fail(
            Check::Euler,
            format!("real χ = {}, expected {}", real.euler_characteristic(), real_expected),
        ));
    }
    notes.push(format!("complex χ = {}, real χ = {}", expected, real_expected));
    for (space, cc) in [(Space::Complex, &complex), (Space::Real, &real)] {
        let h = homology(cc, Coefficients::Z)?;
        if h.euler_characteristic() != cc.euler_characteristic() {
            return Ok(CheckOutcome::fail(
                Check::Euler,
                format!("{}: homology χ disagrees with cell χ", space),
            ));
        }
    }
    if n <= bounds.mixed {
        let mixed = build(n, Space::Mixed, bounds)?;
        if mixed.euler_characteristic() != expected {
            return Ok(CheckOutcome::fail(
                Check::Euler,
                format!("mixed χ = {}, expected {}", mixed.euler_characteristic(), expected),
            ));
        }
        match homology(&mixed, Coefficients::Z) {
            Ok(h) if h.euler_characteristic() != expected => {
                return Ok(CheckOutcome::fail(Check::Euler, "mixed homology χ mismatch"));
            }
            Ok(_) => {}
            Err(Error::Integrity(msg)) => {
                return Ok(CheckOutcome::fail(
                    Check::Euler,
                    format!("mixed boundary is inconsistent: {}", msg),
                ));
            }
            Err(e) => return Err(e),
        }
        // Observed but not asserted: cell counts of the mixed structure.
        notes.push(format!(
            "mixed χ = {} with {} cells (4^n = {})",
            expected,
            mixed.num_cells(),
            1usize << (2 * n)
        ));
    } else {
        notes.push(format!("mixed skipped (n > {})", bounds.mixed));
    }
    Ok(CheckOutcome::pass(Check::Euler, notes.join("; ")))
}

fn check_subdivision(n: usize, bounds: &Bounds) -> Result<CheckOutcome> {
    let mixed = build(n, Space::Mixed, bounds)?;
    let complex = build(n, Space::Complex, bounds)?;
    let hm = match homology(&mixed, Coefficients::Z) {
        Ok(h) => h,
        Err(Error::Integrity(msg)) => {
            return Ok(CheckOutcome::fail(
                Check::Subdivision,
                format!("mixed boundary is inconsistent: {}", msg),
            ));
        }
        Err(e) => return Err(e),
    };
    let hc = homology(&complex, Coefficients::Z)?;
    let diagrams = ShiftedDiagram::all(n)?;
    let max_dim = complex.max_dim().max(mixed.max_dim());
    for d in 0..=max_dim {
        let gm = hm.group(d);
        let gc = hc.group(d);
        if gm != gc {
            return Ok(CheckOutcome::fail(
                Check::Subdivision,
                format!("H_{}: mixed {} vs complex {}", d, gm, gc),
            ));
        }
        if !gm.torsion.is_empty() {
            return Ok(CheckOutcome::fail(
                Check::Subdivision,
                format!("unexpected torsion in H_{}", d),
            ));
        }
        let expected = if d % 2 == 0 {
            diagrams.iter().filter(|l| l.size() == d / 2).count()
        } else {
            0
        };
        if gm.free_rank != expected {
            return Ok(CheckOutcome::fail(
                Check::Subdivision,
                format!("H_{} has rank {}, expected {}", d, gm.free_rank, expected),
            ));
        }
    }
    Ok(CheckOutcome::pass(
        Check::Subdivision,
        format!("mixed and complex homology agree through dimension {}", max_dim),
    ))
}

fn check_realembed(n: usize, bounds: &Bounds) -> Result<CheckOutcome> {
    let mixed = build(n, Space::Mixed, bounds)?;
    let restricted = mixed.real_subcomplex()?;
    let real = build(n, Space::Real, bounds)?;
    if restricted != real {
        for d in 0..=real.max_dim() {
            if restricted.boundary(d) != real.boundary(d) {
                return Ok(CheckOutcome::fail(
                    Check::RealEmbed,
                    format!("∂_{} differs between the μ = φ restriction and the real complex", d),
                ));
            }
        }
        return Ok(CheckOutcome::fail(Check::RealEmbed, "cell lists differ"));
    }
    Ok(CheckOutcome::pass(
        Check::RealEmbed,
        format!("μ = φ restriction equals the real complex ({} cells)", real.num_cells()),
    ))
}

fn check_lagrangian(n: usize, samples: usize, seed: u64, _bounds: &Bounds) -> Result<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0usize;
    for mask in 0u32..(1u32 << n) {
        let subset: std::collections::BTreeSet<usize> =
            (1..=n).filter(|j| mask & (1 << (j - 1)) != 0).collect();
        let p = pattern(&subset, n)?;
        for _ in 0..samples.max(1) {
            let values: std::collections::BTreeMap<_, GaussianRational> = p
                .lambda()
                .squares()
                .into_iter()
                .map(|sq| {
                    (
                        sq,
                        GaussianRational {
                            re: random_nonzero_rational(&mut rng),
                            im: random_nonzero_rational(&mut rng),
                        },
                    )
                })
                .collect();
            let m = materialize(&p, &values)?;
            if !is_lagrangian(&m)? {
                return Ok(CheckOutcome::fail(
                    Check::Lagrangian,
                    format!("materialized matrix for J = {:?} is not Lagrangian", subset),
                ));
            }
            checked += 1;
        }
    }
    Ok(CheckOutcome::pass(
        Check::Lagrangian,
        format!("{} random matrices over {} subsets satisfy MΩMᵀ = 0", checked, 1u32 << n),
    ))
}

fn check_stabilize(n: usize, bounds: &Bounds) -> Result<CheckOutcome> {
    let mut pairs = 0usize;
    for space in [Space::Real, Space::Mixed] {
        if space == Space::Mixed && n > bounds.mixed {
            continue;
        }
        let cells = enumerate(n, space, bounds)?;
        for m in 1..=2usize {
            for c in &cells {
                for cp in &cells {
                    if cp.dim() != c.dim() + 1 {
                        continue;
                    }
                    let d = degree(c, cp)?;
                    let ds = degree(&stabilize(c, m), &stabilize(cp, m))?;
                    if d != ds {
                        return Ok(CheckOutcome::fail(
                            Check::Stabilize,
                            format!(
                                "degree({}, {}) = {} but {} after stabilizing by {}",
                                c, cp, d, ds, m
                            ),
                        ));
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(CheckOutcome::pass(
        Check::Stabilize,
        format!("{} cell pairs keep their degrees under stabilization", pairs),
    ))
}
