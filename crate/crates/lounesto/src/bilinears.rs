//! The five bilinear covariants (sigma, omega, J, K, S) of a 4-component
//! spinor in the Weyl representation, computed by direct matrix evaluation,
//! plus the closed-form covariants of the charge-conjugation eigenspinors.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{gamma, gamma0123_lower, gamma_lower_pair, Mat4, Variance, I};
use crate::multivector::{Blade, Multivector};

/// Index pairs (mu < nu) for the six stored S components, in storage order.
pub const S_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// A spinor value: 4 complex components, upper 2-block first (Weyl ordering).
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct SpinorValue(pub [Complex64; 4]);

impl SpinorValue {
    pub fn zero() -> Self {
        SpinorValue([Complex64::ZERO; 4])
    }

    pub fn from_blocks(upper: [Complex64; 2], lower: [Complex64; 2]) -> Self {
        SpinorValue([upper[0], upper[1], lower[0], lower[1]])
    }

    pub fn upper(&self) -> [Complex64; 2] {
        [self.0[0], self.0[1]]
    }

    pub fn lower(&self) -> [Complex64; 2] {
        [self.0[2], self.0[3]]
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(&self, c: Complex64) -> SpinorValue {
        let mut out = *self;
        for v in out.0.iter_mut() {
            *v *= c;
        }
        out
    }

    pub fn add(&self, other: &SpinorValue) -> SpinorValue {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &SpinorValue) -> SpinorValue {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a -= b;
        }
        out
    }

    /// Hermitian inner product <self, other> = self^dagger other.
    pub fn inner(&self, other: &SpinorValue) -> Complex64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// The sandwich psi^dagger gamma0 M psi.
    pub fn dirac_sandwich(&self, m: &Mat4) -> Complex64 {
        let g0 = gamma(0, Variance::Upper);
        let v = (*m).apply(self.0);
        let gv = g0.apply(v);
        self.0
            .iter()
            .zip(gv.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// The Dirac adjoint row psi^dagger gamma0.
    pub fn dirac_adjoint_row(&self) -> [Complex64; 4] {
        // gamma0 swaps the two 2-blocks and is symmetric, so the row is
        // (conj of lower block, conj of upper block)
        [
            self.0[2].conj(),
            self.0[3].conj(),
            self.0[0].conj(),
            self.0[1].conj(),
        ]
    }
}

/// The quintuple (sigma, omega, J_mu, K_mu, S_{mu nu}) of real components.
/// Vector/bivector components are stored with lower indices.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct BilinearSet {
    pub sigma: f64,
    pub omega: f64,
    pub j: [f64; 4],
    pub k: [f64; 4],
    /// S_{mu nu} for the pairs in [`S_PAIRS`] order.
    pub s: [f64; 6],
}

impl BilinearSet {
    pub fn zero() -> Self {
        BilinearSet {
            sigma: 0.0,
            omega: 0.0,
            j: [0.0; 4],
            k: [0.0; 4],
            s: [0.0; 6],
        }
    }

    pub fn max_component(&self) -> f64 {
        let mut m = self.sigma.abs().max(self.omega.abs());
        for v in self.j.iter().chain(self.k.iter()).chain(self.s.iter()) {
            m = m.max(v.abs());
        }
        m
    }

    pub fn j_max(&self) -> f64 {
        self.j.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn k_max(&self) -> f64 {
        self.k.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn s_max(&self) -> f64 {
        self.s.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }
}

/// Multivector form of a [`BilinearSet`].
pub struct CovariantMultivectors {
    pub sigma: f64,
    pub j: Multivector,
    pub s: Multivector,
    pub k: Multivector,
    pub omega: f64,
}

fn vector_mv(components: &[f64; 4]) -> Multivector {
    let mut out = Multivector::zero();
    for (mu, v) in components.iter().enumerate() {
        out.set_coeff(Blade(1 << mu), Complex64::new(*v, 0.0));
    }
    out
}

/// Assemble J, S, K as multivectors: J = sum_mu J_mu e^mu,
/// S = sum_{mu<nu} S_{mu nu} e^{mu nu}, K likewise.
pub fn bilinears_to_multivectors(b: &BilinearSet) -> CovariantMultivectors {
    let mut s = Multivector::zero();
    for (idx, (mu, nu)) in S_PAIRS.iter().enumerate() {
        s.set_coeff(
            Blade((1 << mu) | (1 << nu)),
            Complex64::new(b.s[idx], 0.0),
        );
    }
    CovariantMultivectors {
        sigma: b.sigma,
        j: vector_mv(&b.j),
        s,
        k: vector_mv(&b.k),
        omega: b.omega,
    }
}

/// Imaginary-residue tolerance for the realness check, relative to ||psi||^2.
pub const REALNESS_TOL: f64 = 1e-10;

fn take_real(value: Complex64, scale: f64) -> Result<f64> {
    let tol = REALNESS_TOL * scale.max(1.0);
    if value.im.abs() > tol {
        return Err(Error::NonRealCovariant {
            residue: value.im.abs(),
            tol,
        });
    }
    Ok(value.re)
}

/// Computes the five bilinear covariants of `psi` by sandwich evaluation:
/// sigma = psi+ g0 psi, omega = -psi+ g0 g0123 psi, J_mu = psi+ g0 g_mu psi,
/// K_mu = psi+ g0 i g0123 g_mu psi, S_{mu nu} = psi+ g0 i g_mu g_nu psi.
pub fn compute_bilinears(psi: &SpinorValue) -> Result<BilinearSet> {
    let scale = psi.norm_sq();
    let p = gamma0123_lower();

    let sigma = take_real(psi.dirac_sandwich(&Mat4::identity()), scale)?;
    let omega = take_real(-psi.dirac_sandwich(&p), scale)?;

    let mut j = [0.0; 4];
    let mut k = [0.0; 4];
    for mu in 0..4 {
        let g = gamma(mu, Variance::Lower);
        j[mu] = take_real(psi.dirac_sandwich(&g), scale)?;
        k[mu] = take_real(psi.dirac_sandwich(&(p * g).scale(I)), scale)?;
    }

    let mut s = [0.0; 6];
    for (idx, (mu, nu)) in S_PAIRS.iter().enumerate() {
        let g = gamma_lower_pair(*mu, *nu).scale(I);
        s[idx] = take_real(psi.dirac_sandwich(&g), scale)?;
    }

    Ok(BilinearSet {
        sigma,
        omega,
        j,
        k,
        s,
    })
}

/// Closed-form ELKO covariants in terms of the two components
/// (alpha, beta) of the left-handed 2-spinor: sigma = omega = 0, K = 0,
/// J built from the quadratic monomials and the printed S coefficients
/// (the two gamma^{02} contributions summed).
pub fn elko_bilinears_closed_form(alpha: Complex64, beta: Complex64) -> BilinearSet {
    let a = alpha;
    let b = beta;

    let j = [
        2.0 * (a.norm_sqr() + b.norm_sqr()),
        (a * b.conj() + a.conj() * b).re * 2.0,
        (I * (a.conj() * b - a * b.conj())).re * 2.0,
        2.0 * (b.norm_sqr() - a.norm_sqr()),
    ];

    let a2 = a * a;
    let b2 = b * b;
    let ab = a * b;
    // coefficients on gamma^{mu nu} planes, converted to the mu < nu storage
    // order (coefficient on gamma^{31} becomes -S_{13})
    let s_02 = 2.0 * (a2 + b2).im;
    let s_31 = (a2 + b2).re;
    let s_01 = (b2 - a2).re;
    let s_03 = 2.0 * ab.re;
    let s_12 = -ab.im;
    let s_23 = (a2 - b2).im;

    BilinearSet {
        sigma: 0.0,
        omega: 0.0,
        j,
        k: [0.0; 4],
        s: [s_01, s_02, s_03, s_12, -s_31, s_23],
    }
}
