//! Spectral radius of graphs, the small equitable quotient matrices attached to
//! the extremal candidates, and their cubic characteristic polynomials.
//!
//! Quotient matrices and polynomials carry exact rational entries; floating
//! point only appears in square roots and in [`largest_root`].

use alloc::vec;
use alloc::vec::Vec;

use libm::{fabs, sqrt};
use num_traits::Zero;
use thiserror::Error;

use crate::graph::Graph;
use crate::half::HalfInt;
use crate::Rational;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;
/// The Rayleigh quotient and residual are evaluated every this many steps.
pub const CHECK_EVERY: usize = 50;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error("power iteration did not converge after {iterations} steps: best estimate {estimate}, residual {residual:e}")]
    NonConvergence { estimate: f64, residual: f64, iterations: usize },
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("vector has length {found}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
}

/// Largest adjacency eigenvalue with its nonnegative unit eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub lambda1: f64,
    pub vector: Vec<f64>,
    /// `max_i |(A x - lambda1 x)_i|`.
    pub residual: f64,
    pub iterations: usize,
}

/// Power iteration on `A + I`.
///
/// Every adjacency matrix has `lambda_min >= -lambda1`, so `A + I` has
/// `lambda1 + 1` as its eigenvalue of largest modulus whenever the graph has an
/// edge; starting from the all-ones vector keeps every iterate nonnegative.
/// For a disconnected graph the limit vector may vanish off the components that
/// attain `lambda1`; `lambda1` itself is still exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerIteration {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for PowerIteration {
    fn default() -> Self {
        PowerIteration { tol: DEFAULT_TOL, max_iter: DEFAULT_MAX_ITER }
    }
}

impl PowerIteration {
    pub fn with_tol(tol: f64) -> Self {
        PowerIteration { tol, ..Self::default() }
    }

    pub fn run(&self, g: &Graph) -> Result<SpectralResult, SpectralError> {
        self.run_from(g, &vec![1.0; g.order()])
    }

    /// Starts from a caller-supplied nonnegative vector (warm start).
    pub fn run_from(&self, g: &Graph, start: &[f64]) -> Result<SpectralResult, SpectralError> {
        let n = g.order();
        if n == 0 {
            return Err(SpectralError::EmptyGraph);
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(SpectralError::BadTolerance(self.tol));
        }
        if start.len() != n {
            return Err(SpectralError::LengthMismatch { expected: n, found: start.len() });
        }
        let adj = g.adjacency_lists();
        let mut x = start.to_vec();
        if normalize(&mut x) == 0.0 {
            return Err(SpectralError::ZeroVector);
        }
        let mut ax = vec![0.0; n];
        let mut best = (0.0, f64::INFINITY);
        for iter in 0..=self.max_iter {
            mul(&adj, &x, &mut ax);
            if iter % CHECK_EVERY == 0 || iter == self.max_iter {
                let lambda = dot(&x, &ax);
                let residual = x.iter().zip(&ax).map(|(xi, yi)| fabs(yi - lambda * xi)).fold(0.0, f64::max);
                if residual <= self.tol {
                    return Ok(SpectralResult { lambda1: lambda, vector: x, residual, iterations: iter });
                }
                if residual < best.1 {
                    best = (lambda, residual);
                }
            }
            for (xi, yi) in x.iter_mut().zip(&ax) {
                *xi += yi;
            }
            normalize(&mut x);
        }
        Err(SpectralError::NonConvergence { estimate: best.0, residual: best.1, iterations: self.max_iter })
    }
}

fn mul(adj: &[Vec<u32>], x: &[f64], out: &mut [f64]) {
    for (o, nb) in out.iter_mut().zip(adj) {
        *o = nb.iter().map(|&j| x[j as usize]).sum();
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(x: &mut [f64]) -> f64 {
    let norm = sqrt(dot(x, x));
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
    norm
}

/// `numer / denom` in double precision.
pub fn rational_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `lambda1(g)` to residual `tol` with the default iteration budget.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult, SpectralError> {
    PowerIteration::with_tol(tol).run(g)
}

/// `z^T A z / z^T z`.
pub fn rayleigh_quotient(g: &Graph, z: &[f64]) -> Result<f64, SpectralError> {
    if z.len() != g.order() {
        return Err(SpectralError::LengthMismatch { expected: g.order(), found: z.len() });
    }
    let zz = dot(z, z);
    if zz == 0.0 {
        return Err(SpectralError::ZeroVector);
    }
    let num: f64 = g.edges().map(|(u, v)| 2.0 * z[u] * z[v]).sum();
    Ok(num / zz)
}

/// Largest eigenvalue of the nonnegative matrix `[[a, b], [c, d]]`.
pub fn matrix2_radius(a: f64, b: f64, c: f64, d: f64) -> f64 {
    (a + d + sqrt((a - d) * (a - d) + 4.0 * b * c)) / 2.0
}

/// `lambda1([[d, n - n0], [n0, dp]])`, the join bound for max degrees `d`, `dp`
/// on parts of sizes `n0` and `n - n0`.
pub fn quotient2_radius(d: f64, dp: f64, n0: usize, n: usize) -> f64 {
    assert!(n0 <= n, "n0 must not exceed n");
    matrix2_radius(d, (n - n0) as f64, n0 as f64, dp)
}

/// Upper bound on `lambda1(join(g, h))` from the maximum degrees of the parts.
pub fn join_upper_bound(g: &Graph, h: &Graph) -> f64 {
    quotient2_radius(g.max_degree() as f64, h.max_degree() as f64, g.order(), g.order() + h.order())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("n/2 +- s must be integers (n = {n}, s = {s})")]
    NonIntegralParts { n: usize, s: HalfInt },
    #[error("part sizes out of range for n = {n}, s = {s}: {reason}")]
    PartSize { n: usize, s: HalfInt, reason: &'static str },
    #[error("largest root bracket failed: the polynomial does not have three real roots")]
    Bracket,
}

/// Sizes `(n/2 + s, n/2 - s)`.
pub fn part_sizes(n: usize, s: HalfInt) -> Result<(usize, usize), QuotientError> {
    match (s.offset_half(n), (-s).offset_half(n)) {
        (Some(l), Some(r)) => Ok((l, r)),
        _ if (n as i64 + s.twice()) % 2 != 0 => Err(QuotientError::NonIntegralParts { n, s }),
        _ => Err(QuotientError::PartSize { n, s, reason: "a part would have negative size" }),
    }
}

/// 2x2 or 3x3 quotient matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    order: usize,
    entries: [[Rational; 3]; 3],
}

impl QuotientMatrix {
    pub fn new2(rows: [[Rational; 2]; 2]) -> Self {
        let mut entries = [[Rational::zero(); 3]; 3];
        for i in 0..2 {
            entries[i][..2].copy_from_slice(&rows[i]);
        }
        QuotientMatrix { order: 2, entries }
    }

    pub fn new3(entries: [[Rational; 3]; 3]) -> Self {
        QuotientMatrix { order: 3, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        assert!(i < self.order && j < self.order);
        self.entries[i][j]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.order).map(|i| self.entries[i][..self.order].to_vec()).collect()
    }

    pub fn row_sum(&self, i: usize) -> Rational {
        self.entries[i][..self.order].iter().sum()
    }

    /// `det(lambda I - M)` for a 3x3 matrix, via trace, principal minors and determinant.
    pub fn char_poly(&self) -> CubicPoly {
        assert_eq!(self.order, 3, "char_poly is defined for 3x3 quotient matrices");
        let m = &self.entries;
        let trace = m[0][0] + m[1][1] + m[2][2];
        let minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0]
            + m[1][1] * m[2][2] - m[1][2] * m[2][1];
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        CubicPoly { c2: -trace, c1: minors, c0: -det }
    }

    /// Largest real eigenvalue.
    pub fn spectral_radius(&self) -> Result<f64, QuotientError> {
        let f = rational_f64;
        if self.order == 2 {
            let m = &self.entries;
            Ok(matrix2_radius(f(m[0][0]), f(m[0][1]), f(m[1][0]), f(m[1][1])))
        } else {
            largest_root(&self.char_poly())
        }
    }
}

/// Monic cubic `lambda^3 + c2 lambda^2 + c1 lambda + c0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubicPoly {
    pub c2: Rational,
    pub c1: Rational,
    pub c0: Rational,
}

impl CubicPoly {
    pub fn from_roots(a: Rational, b: Rational, c: Rational) -> Self {
        CubicPoly { c2: -(a + b + c), c1: a * b + a * c + b * c, c0: -(a * b * c) }
    }

    pub fn eval(&self, x: Rational) -> Rational {
        ((x + self.c2) * x + self.c1) * x + self.c0
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let [a, b, c] = self.coefficients_f64();
        ((x + a) * x + b) * x + c
    }

    /// `[c2, c1, c0]` as floats.
    pub fn coefficients_f64(&self) -> [f64; 3] {
        [self.c2, self.c1, self.c0].map(rational_f64)
    }

    /// Coefficients `[lambda^2, lambda, 1]` of `self - other` (the cubic terms cancel).
    pub fn minus(&self, other: &CubicPoly) -> [Rational; 3] {
        [self.c2 - other.c2, self.c1 - other.c1, self.c0 - other.c0]
    }

    /// Discriminant divided by `scale^6` with `scale = max(1, |c2|, |c1|^(1/2), |c0|^(1/3))`.
    pub fn scaled_discriminant(&self) -> f64 {
        let [b, c, d] = self.coefficients_f64();
        let disc = 18.0 * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * c * c * c - 27.0 * d * d;
        let scale = 1f64.max(fabs(b)).max(sqrt(fabs(c))).max(libm::cbrt(fabs(d)));
        let s3 = scale * scale * scale;
        disc / (s3 * s3)
    }

    pub fn has_three_real_roots(&self) -> bool {
        self.scaled_discriminant() >= -1e-9
    }
}

/// Largest real root of a monic cubic with three real roots.
///
/// Brackets the root between the larger critical point and
/// `1 + max(1, |c2| + |c1| + |c0|)`, then runs Newton from the right with a
/// bisection fallback until the bracket is 1e-12 wide or cannot shrink further.
pub fn largest_root(p: &CubicPoly) -> Result<f64, QuotientError> {
    let [a, b, c] = p.coefficients_f64();
    let f = |x: f64| ((x + a) * x + b) * x + c;
    let df = |x: f64| (3.0 * x + 2.0 * a) * x + b;
    let crit = a * a - 3.0 * b;
    if crit < 0.0 {
        return Err(QuotientError::Bracket);
    }
    let mut lo = (-a + sqrt(crit)) / 3.0;
    let mut hi = 1.0 + 1f64.max(fabs(a) + fabs(b) + fabs(c));
    let flo = f(lo);
    let scale = 1.0 + fabs(lo) * fabs(lo) * fabs(lo);
    if flo > 0.0 {
        // a double root at the critical point evaluates to rounding noise
        return if flo <= 1e-12 * scale { Ok(lo) } else { Err(QuotientError::Bracket) };
    }
    if flo == 0.0 {
        return Ok(lo);
    }
    let mut x = hi;
    for _ in 0..500 {
        if hi - lo <= 1e-12 {
            break;
        }
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let d = df(x);
        let newton = if d != 0.0 { x - fx / d } else { f64::NAN };
        let mid = lo + (hi - lo) / 2.0;
        x = if newton > lo && newton < hi { newton } else { mid };
        if x == lo || x == hi {
            if mid == lo || mid == hi {
                break;
            }
            x = mid;
        }
    }
    Ok(if fabs(f(lo)) < fabs(f(hi)) { lo } else { hi })
}

fn rat(v: i64) -> Rational {
    Rational::from_integer(v as i128)
}

/// The 3x3 equitable quotient matrix of the candidate with parts `n/2 + s`
/// (carrying a `(k-1)`-regular graph) and `n/2 - s` (carrying one edge):
///
/// ```text
/// [ k-1   n/2-s-2   2 ]
/// [ n/2+s    0      0 ]
/// [ n/2+s    0      1 ]
/// ```
pub fn pi_matrix(n: usize, k: usize, s: HalfInt) -> Result<QuotientMatrix, QuotientError> {
    let (l, r) = part_sizes(n, s)?;
    if r < 2 {
        return Err(QuotientError::PartSize { n, s, reason: "n/2 - s must be at least 2" });
    }
    let (l, r, k) = (l as i64, r as i64, k as i64);
    Ok(QuotientMatrix::new3([
        [rat(k - 1), rat(r - 2), rat(2)],
        [rat(l), rat(0), rat(0)],
        [rat(l), rat(0), rat(1)],
    ]))
}

/// `lambda^3 - k lambda^2 - (n^2/4 - s^2 - k + 1) lambda + n^2/4 - s^2 - n - 2s`
/// for arbitrary `s`, without any part-size checks.
pub fn ps_formula(n: usize, k: usize, s: Rational) -> CubicPoly {
    let n = Rational::from_integer(n as i128);
    let k = Rational::from_integer(k as i128);
    let one = Rational::from_integer(1);
    let two = Rational::from_integer(2);
    let q = n * n / Rational::from_integer(4) - s * s;
    CubicPoly { c2: -k, c1: -(q - k + one), c0: q - n - two * s }
}

/// Characteristic polynomial of [`pi_matrix`], under the same preconditions.
pub fn char_poly_ps(n: usize, k: usize, s: HalfInt) -> Result<CubicPoly, QuotientError> {
    pi_matrix(n, k, s)?;
    Ok(ps_formula(n, k, s.to_rational()))
}

/// Spectral radius `mu_s` of `[[k-1, n/2-s], [n/2+s, 0]]` and the second
/// coordinate `eta` of its eigenvector normalised to `[1, eta]`.
pub fn q_matrix_radius(n: usize, k: usize, s: HalfInt) -> Result<(f64, f64), QuotientError> {
    let (l, r) = part_sizes(n, s)?;
    if r == 0 {
        return Err(QuotientError::PartSize { n, s, reason: "n/2 - s must be positive" });
    }
    let d = k as f64 - 1.0;
    let mu = matrix2_radius(d, r as f64, l as f64, 0.0);
    Ok((mu, (mu - d) / r as f64))
}

/// Outcome of checking the two exact polynomial identities for one `(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub n: usize,
    pub k: usize,
    /// `P_{1/2} - P_{-1/2} = -2`
    pub half: bool,
    /// `P_1 - P_{-1} = -4`
    pub one: bool,
    /// `P_0 - P_1 = 3 - lambda`
    pub zero_one: bool,
}

impl IdentityCheck {
    pub fn all_hold(&self) -> bool {
        self.half && self.one && self.zero_one
    }
}

pub fn check_identities(n: usize, k: usize) -> IdentityCheck {
    let z = Rational::zero();
    let p = |twice: i128| ps_formula(n, k, Rational::new(twice, 2));
    let antisym = |twice: i128| p(twice).minus(&p(-twice)) == [z, z, Rational::new(-4 * twice, 2)];
    IdentityCheck {
        n,
        k,
        half: antisym(1),
        one: antisym(2),
        zero_one: p(0).minus(&p(2)) == [z, rat(-1), rat(3)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, join};

    fn r(v: i64) -> Rational {
        rat(v)
    }

    #[test]
    fn spectral_radius_examples() {
        for n in 2..12 {
            let res = spectral_radius(&Graph::complete(n).unwrap(), 1e-10).unwrap();
            assert!((res.lambda1 - (n as f64 - 1.0)).abs() < 1e-9);
            assert!(res.residual <= 1e-10);
        }
        let c = spectral_radius(&Graph::cycle(9).unwrap(), 1e-10).unwrap();
        assert!((c.lambda1 - 2.0).abs() < 1e-9);
        for (a, b) in [(1, 5), (3, 3), (4, 9), (2, 7)] {
            let res = spectral_radius(&complete_bipartite(a, b).unwrap(), 1e-10).unwrap();
            assert!((res.lambda1 - ((a * b) as f64).sqrt()).abs() < 1e-9, "{a} {b}");
            let norm: f64 = res.vector.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-12);
            assert!(res.vector.iter().all(|&x| x >= 0.0));
        }
        assert_eq!(spectral_radius(&Graph::empty(0).unwrap(), 1e-10), Err(SpectralError::EmptyGraph));
        assert_eq!(spectral_radius(&Graph::empty(3).unwrap(), 1e-10).unwrap().lambda1, 0.0);
        assert!(matches!(spectral_radius(&Graph::empty(3).unwrap(), 0.0), Err(SpectralError::BadTolerance(_))));
    }

    #[test]
    fn non_convergence_reports_best_estimate() {
        let g = Graph::path(40).unwrap();
        let err = PowerIteration { tol: 1e-14, max_iter: 60 }.run(&g).unwrap_err();
        match err {
            SpectralError::NonConvergence { estimate, residual, iterations } => {
                assert_eq!(iterations, 60);
                assert!(estimate > 1.9 && estimate < 2.0);
                assert!(residual > 1e-14);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rayleigh_examples() {
        assert_eq!(rayleigh_quotient(&Graph::complete(2).unwrap(), &[1.0, 1.0]).unwrap(), 1.0);
        assert_eq!(rayleigh_quotient(&Graph::cycle(4).unwrap(), &[1.0; 4]).unwrap(), 2.0);
        assert_eq!(rayleigh_quotient(&Graph::cycle(4).unwrap(), &[0.0; 4]), Err(SpectralError::ZeroVector));
        let g = Graph::wheel(6).unwrap();
        let res = spectral_radius(&g, 1e-10).unwrap();
        assert!((rayleigh_quotient(&g, &res.vector).unwrap() - res.lambda1).abs() < 1e-10);
    }

    #[test]
    fn quotient2_examples() {
        assert!((quotient2_radius(0.0, 0.0, 3, 8) - 15f64.sqrt()).abs() < 1e-12);
        for n in [20usize, 21, 50, 101] {
            let k = 5usize;
            let (c, f) = (n.div_ceil(2), n / 2);
            let mu = quotient2_radius((k - 1) as f64, 0.0, c, n);
            let expected = ((k - 1) as f64 + (((k - 1) * (k - 1) + 4 * c * f) as f64).sqrt()) / 2.0;
            assert!((mu - expected).abs() < 1e-12);
        }
        let unbalanced = quotient2_radius(1.0, 1.0, 26, 50);
        let balanced = matrix2_radius(25.0, 1.0, 24.0, 1.0);
        assert!(unbalanced > balanced);
    }

    #[test]
    fn join_bound_is_exact_for_empty_parts() {
        let bound = join_upper_bound(&Graph::empty(3).unwrap(), &Graph::empty(5).unwrap());
        let exact = spectral_radius(&complete_bipartite(3, 5).unwrap(), 1e-12).unwrap().lambda1;
        assert!((bound - exact).abs() < 1e-9);
        let g = Graph::cycle(5).unwrap();
        let h = Graph::complete(3).unwrap();
        let exact = spectral_radius(&join(&g, &h).unwrap(), 1e-12).unwrap().lambda1;
        assert!((join_upper_bound(&g, &h) - exact).abs() < 1e-9);
    }

    #[test]
    fn pi_matrix_example() {
        let m = pi_matrix(20, 3, HalfInt::ZERO).unwrap();
        let expected = [[2, 8, 2], [10, 0, 0], [10, 0, 1]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.entry(i, j), r(expected[i][j]));
            }
        }
        let m = pi_matrix(41, 4, HalfInt::HALF).unwrap();
        assert_eq!(m.row_sum(0), r(3) + Rational::new(41, 2) - Rational::new(1, 2));
        assert!(matches!(pi_matrix(20, 3, HalfInt::HALF), Err(QuotientError::NonIntegralParts { .. })));
        assert!(matches!(pi_matrix(4, 3, HalfInt::ONE), Err(QuotientError::PartSize { .. })));
    }

    #[test]
    fn char_poly_example() {
        let p = char_poly_ps(20, 3, HalfInt::ZERO).unwrap();
        assert_eq!((p.c2, p.c1, p.c0), (r(-3), r(-98), r(80)));
        assert_eq!(pi_matrix(20, 3, HalfInt::ZERO).unwrap().char_poly(), p);
    }

    #[test]
    fn identities_hold() {
        for n in 4..40 {
            for k in 2..9 {
                assert!(check_identities(n, k).all_hold());
            }
        }
    }

    #[test]
    fn largest_root_examples() {
        assert_eq!(largest_root(&CubicPoly::from_roots(r(0), r(0), r(0))).unwrap(), 0.0);
        let p = CubicPoly::from_roots(r(1), r(2), r(3));
        assert!((largest_root(&p).unwrap() - 3.0).abs() <= 1e-12);
        let p = CubicPoly::from_roots(r(-7), Rational::new(1, 3), r(5));
        assert!((largest_root(&p).unwrap() - 5.0).abs() <= 1e-12);
        let p = CubicPoly::from_roots(r(2), r(2), r(-1));
        assert!((largest_root(&p).unwrap() - 2.0).abs() <= 1e-6);
        // lambda^3 + 1 has a single real root
        let p = CubicPoly { c2: r(0), c1: r(0), c0: r(1) };
        assert_eq!(largest_root(&p), Err(QuotientError::Bracket));
        assert!(!p.has_three_real_roots());
        assert!(char_poly_ps(200, 7, HalfInt::ZERO).unwrap().has_three_real_roots());
    }

    #[test]
    fn q_matrix_examples() {
        for n in [10usize, 40, 100] {
            let (mu, eta) = q_matrix_radius(n, 1, HalfInt::ZERO).unwrap();
            assert!((mu - n as f64 / 2.0).abs() < 1e-12);
            assert!((eta - 1.0).abs() < 1e-12);
        }
        let gap = |n| (1.0 - q_matrix_radius(n, 4, HalfInt::ZERO).unwrap().1).abs();
        assert!(gap(1000) < gap(100));
        for n in (5..200).step_by(2) {
            let a = q_matrix_radius(n, 6, HalfInt::HALF).unwrap().0;
            let b = q_matrix_radius(n, 6, -HalfInt::HALF).unwrap().0;
            assert!((a - b).abs() < 1e-12);
        }
    }
}
