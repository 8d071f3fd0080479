//! Weyl (chiral) 4x4 representation of Cl(1,3) and the bidirectional bridge
//! to the blade algebra.
//!
//! The sixteen matrices Gamma_A obtained from ascending products of the
//! upper-index gammas form a basis of C(4); the reciprocal basis satisfying
//! Tr(Gamma_A^rec Gamma_B) = 4 delta_AB is obtained once by solving the Gram
//! system numerically and validated at startup.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::LazyLock;

use num_complex::Complex64;

use crate::linalg;
use crate::multivector::{Blade, Multivector, METRIC};

pub const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::ZERO;

/// Dense 2x2 complex matrix (Pauli matrices, helicity operator).
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

impl Mat2 {
    pub fn zero() -> Self {
        Mat2([[ZERO; 2]; 2])
    }

    pub fn identity() -> Self {
        Mat2([[ONE, ZERO], [ZERO, ONE]])
    }

    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
        ]
    }

    pub fn adjoint(&self) -> Mat2 {
        let mut out = Mat2::zero();
        for r in 0..2 {
            for c in 0..2 {
                out.0[r][c] = self.0[c][r].conj();
            }
        }
        out
    }

    pub fn max_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, c: Complex64) -> Mat2 {
        let mut out = *self;
        for v in out.0.iter_mut().flatten() {
            *v *= c;
        }
        out
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for r in 0..2 {
            for c in 0..2 {
                for k in 0..2 {
                    out.0[r][c] += self.0[r][k] * rhs.0[k][c];
                }
            }
        }
        out
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(mut self, rhs: Mat2) -> Mat2 {
        for (a, b) in self.0.iter_mut().flatten().zip(rhs.0.iter().flatten()) {
            *a += b;
        }
        self
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(mut self, rhs: Mat2) -> Mat2 {
        for (a, b) in self.0.iter_mut().flatten().zip(rhs.0.iter().flatten()) {
            *a -= b;
        }
        self
    }
}

/// Dense 4x4 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Mat4(pub [[Complex64; 4]; 4]);

impl Mat4 {
    pub fn zero() -> Self {
        Mat4([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Mat4::zero();
        for i in 0..4 {
            m.0[i][i] = ONE;
        }
        m
    }

    /// Block matrix [[a, b], [c, d]] of 2x2 blocks.
    pub fn from_blocks(a: Mat2, b: Mat2, c: Mat2, d: Mat2) -> Self {
        let mut m = Mat4::zero();
        for r in 0..2 {
            for col in 0..2 {
                m.0[r][col] = a.0[r][col];
                m.0[r][col + 2] = b.0[r][col];
                m.0[r + 2][col] = c.0[r][col];
                m.0[r + 2][col + 2] = d.0[r][col];
            }
        }
        m
    }

    pub fn apply(&self, v: [Complex64; 4]) -> [Complex64; 4] {
        let mut out = [ZERO; 4];
        for r in 0..4 {
            for c in 0..4 {
                out[r] += self.0[r][c] * v[c];
            }
        }
        out
    }

    pub fn adjoint(&self) -> Mat4 {
        let mut out = Mat4::zero();
        for r in 0..4 {
            for c in 0..4 {
                out.0[r][c] = self.0[c][r].conj();
            }
        }
        out
    }

    pub fn conj(&self) -> Mat4 {
        let mut out = *self;
        for v in out.0.iter_mut().flatten() {
            *v = v.conj();
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..4).map(|i| self.0[i][i]).sum()
    }

    pub fn scale(&self, c: Complex64) -> Mat4 {
        let mut out = *self;
        for v in out.0.iter_mut().flatten() {
            *v *= c;
        }
        out
    }

    pub fn max_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Mat4, tol: f64) -> bool {
        (*self - *other).max_norm() <= tol
    }

    /// Rank-one outer product `u v^T` (v already a row, no conjugation).
    pub fn outer(u: [Complex64; 4], v_row: [Complex64; 4]) -> Mat4 {
        let mut out = Mat4::zero();
        for r in 0..4 {
            for c in 0..4 {
                out.0[r][c] = u[r] * v_row[c];
            }
        }
        out
    }
}

impl Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: Mat4) -> Mat4 {
        let mut out = Mat4::zero();
        for r in 0..4 {
            for k in 0..4 {
                let a = self.0[r][k];
                if a == ZERO {
                    continue;
                }
                for c in 0..4 {
                    out.0[r][c] += a * rhs.0[k][c];
                }
            }
        }
        out
    }
}

impl Add for Mat4 {
    type Output = Mat4;
    fn add(mut self, rhs: Mat4) -> Mat4 {
        for (a, b) in self.0.iter_mut().flatten().zip(rhs.0.iter().flatten()) {
            *a += b;
        }
        self
    }
}

impl Sub for Mat4 {
    type Output = Mat4;
    fn sub(mut self, rhs: Mat4) -> Mat4 {
        for (a, b) in self.0.iter_mut().flatten().zip(rhs.0.iter().flatten()) {
            *a -= b;
        }
        self
    }
}

impl Neg for Mat4 {
    type Output = Mat4;
    fn neg(self) -> Mat4 {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// Pauli matrix sigma_k, k in 1..=3.
pub fn pauli(k: usize) -> Mat2 {
    match k {
        1 => Mat2([[ZERO, ONE], [ONE, ZERO]]),
        2 => Mat2([[ZERO, -I], [I, ZERO]]),
        3 => Mat2([[ONE, ZERO], [ZERO, -ONE]]),
        _ => panic!("pauli index must be 1..=3"),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variance {
    Upper,
    Lower,
}

/// gamma^mu (Upper) or gamma_mu (Lower) in the Weyl representation.
pub fn gamma(mu: usize, variance: Variance) -> Mat4 {
    assert!(mu < 4, "gamma index out of range");
    let up = if mu == 0 {
        Mat4::from_blocks(Mat2::zero(), Mat2::identity(), Mat2::identity(), Mat2::zero())
    } else {
        let s = pauli(mu);
        Mat4::from_blocks(Mat2::zero(), -s, s, Mat2::zero())
    };
    match variance {
        Variance::Upper => up,
        Variance::Lower => up.scale(Complex64::new(METRIC[mu], 0.0)),
    }
}

/// gamma_mu gamma_nu with lower indices.
pub fn gamma_lower_pair(mu: usize, nu: usize) -> Mat4 {
    gamma(mu, Variance::Lower) * gamma(nu, Variance::Lower)
}

/// gamma_0123 = gamma_0 gamma_1 gamma_2 gamma_3 (all indices lower).
pub fn gamma0123_lower() -> Mat4 {
    gamma(0, Variance::Lower)
        * gamma(1, Variance::Lower)
        * gamma(2, Variance::Lower)
        * gamma(3, Variance::Lower)
}

struct GammaBasis {
    /// Gamma_A: ascending product of upper-index gammas for each blade mask.
    blades: [Mat4; 16],
    /// Reciprocal basis with Tr(Gamma_A^rec Gamma_B) = 4 delta_AB.
    reciprocal: [Mat4; 16],
}

impl GammaBasis {
    fn build() -> Self {
        let mut blades = [Mat4::identity(); 16];
        for blade in Blade::all() {
            let mut m = Mat4::identity();
            for mu in blade.generators() {
                m = m * gamma(mu, Variance::Upper);
            }
            blades[blade.index()] = m;
        }

        // Gram system: G_AB = Tr(Gamma_A Gamma_B) / 4, solved column by column.
        let gram: Vec<Vec<Complex64>> = (0..16)
            .map(|a| {
                (0..16)
                    .map(|b| (blades[a] * blades[b]).trace() * Complex64::new(0.25, 0.0))
                    .collect()
            })
            .collect();

        let mut reciprocal = [Mat4::zero(); 16];
        for a in 0..16 {
            let mut lhs = gram.clone();
            let mut rhs = vec![ZERO; 16];
            rhs[a] = ONE;
            let x = linalg::solve(&mut lhs, &mut rhs, 1e-12)
                .expect("gamma Gram system must be nonsingular");
            let mut m = Mat4::zero();
            for (b, coeff) in x.iter().enumerate() {
                m = m + blades[b].scale(*coeff);
            }
            reciprocal[a] = m;
        }

        let basis = GammaBasis { blades, reciprocal };
        basis.validate();
        basis
    }

    fn validate(&self) {
        for a in 0..16 {
            for b in 0..16 {
                let t = (self.reciprocal[a] * self.blades[b]).trace();
                let expected = if a == b { Complex64::new(4.0, 0.0) } else { ZERO };
                assert!(
                    (t - expected).norm() < 1e-10,
                    "reciprocal basis validation failed at ({a},{b}): {t}"
                );
            }
        }
    }

    fn get() -> &'static GammaBasis {
        static BASIS: LazyLock<GammaBasis> = LazyLock::new(GammaBasis::build);
        &BASIS
    }
}

/// Matrix image of a blade under the algebra homomorphism.
pub fn blade_matrix(blade: Blade) -> Mat4 {
    GammaBasis::get().blades[blade.index()]
}

/// Algebra homomorphism: e^{mu...} -> gamma^mu ... products, extended linearly.
pub fn mv_to_matrix(a: &Multivector) -> Mat4 {
    let basis = GammaBasis::get();
    let mut out = Mat4::zero();
    for blade in Blade::all() {
        let c = a.coeff(blade);
        if c != ZERO {
            out = out + basis.blades[blade.index()].scale(c);
        }
    }
    out
}

/// Exact inverse of [`mv_to_matrix`] via trace projection onto the
/// reciprocal basis.
pub fn matrix_to_mv(m: &Mat4) -> Multivector {
    let basis = GammaBasis::get();
    let mut out = Multivector::zero();
    for blade in Blade::all() {
        let c = (basis.reciprocal[blade.index()] * *m).trace() * Complex64::new(0.25, 0.0);
        out.set_coeff(blade, c);
    }
    out
}
