//! Dense Cl(1,3) arithmetic over the 16-blade basis generated by
//! e0, e1, e2, e3 with metric diag(+1, -1, -1, -1).
//!
//! Blades are indexed by bitmask: bit `mu` set means the generator `e^mu`
//! is present, so `0b0000` is the scalar and `0b1111` the pseudoscalar
//! e0123. Coefficients are complex throughout; "real multivector" is a
//! checked predicate, not a separate type.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};
use std::sync::LazyLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg;

/// Relative threshold under which a coefficient counts as zero/real.
pub const COEFF_TOL: f64 = 1e-10;

/// Metric signature of Cl(1,3): eta^{mu mu}.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// One of the 16 canonical basis blades, identified by its index bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Blade(pub u8);

impl Blade {
    pub const COUNT: usize = 16;

    pub const SCALAR: Blade = Blade(0);
    pub const PSEUDOSCALAR: Blade = Blade(0b1111);

    pub fn all() -> impl Iterator<Item = Blade> {
        (0u8..16).map(Blade)
    }

    /// Grade = number of generators in the blade.
    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Ascending generator indices of this blade.
    pub fn generators(self) -> impl Iterator<Item = usize> {
        (0..4).filter(move |mu| self.0 & (1 << mu) != 0)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for mu in self.generators() {
            write!(f, "{mu}")?;
        }
        Ok(())
    }
}

/// Product of two canonical blades: resulting blade and sign.
///
/// The sign combines the reordering parity (each generator of `b` is walked
/// left past the higher-index generators of `a`) with the metric factors of
/// the contracted generators.
fn blade_mul(a: u8, b: u8) -> (u8, f64) {
    let mut swaps = 0u32;
    let mut rest = a >> 1;
    while rest != 0 {
        swaps += (rest & b).count_ones();
        rest >>= 1;
    }
    let mut sign = if swaps % 2 == 0 { 1.0 } else { -1.0 };
    for mu in 0..4 {
        if a & b & (1 << mu) != 0 {
            sign *= METRIC[mu];
        }
    }
    (a ^ b, sign)
}

/// Precomputed signed 16x16 blade multiplication table.
pub struct MulTable {
    entries: [[(u8, f64); 16]; 16],
}

impl MulTable {
    fn build() -> Self {
        let mut entries = [[(0u8, 0.0); 16]; 16];
        for a in 0..16u8 {
            for b in 0..16u8 {
                entries[a as usize][b as usize] = blade_mul(a, b);
            }
        }
        MulTable { entries }
    }

    pub fn get() -> &'static MulTable {
        static TABLE: LazyLock<MulTable> = LazyLock::new(MulTable::build);
        &TABLE
    }

    /// Result blade and sign for the Clifford product of two blades.
    pub fn product(&self, a: Blade, b: Blade) -> (Blade, f64) {
        let (mask, sign) = self.entries[a.index()][b.index()];
        (Blade(mask), sign)
    }
}

/// A general (complexified) element of Cl(1,3).
#[derive(Clone, PartialEq, Debug)]
pub struct Multivector {
    coeffs: [Complex64; 16],
}

impl Default for Multivector {
    fn default() -> Self {
        Multivector::zero()
    }
}

impl Multivector {
    pub fn zero() -> Self {
        Multivector {
            coeffs: [Complex64::ZERO; 16],
        }
    }

    pub fn from_coeffs(coeffs: [Complex64; 16]) -> Self {
        Multivector { coeffs }
    }

    pub fn scalar(c: Complex64) -> Self {
        let mut m = Multivector::zero();
        m.coeffs[0] = c;
        m
    }

    pub fn real_scalar(x: f64) -> Self {
        Multivector::scalar(Complex64::new(x, 0.0))
    }

    pub fn one() -> Self {
        Multivector::real_scalar(1.0)
    }

    pub fn blade(blade: Blade) -> Self {
        let mut m = Multivector::zero();
        m.coeffs[blade.index()] = Complex64::ONE;
        m
    }

    /// The basis vector e^mu.
    pub fn basis_vector(mu: usize) -> Self {
        assert!(mu < 4, "basis vector index out of range");
        Multivector::blade(Blade(1 << mu))
    }

    /// e0123, the grade-4 volume element; squares to -1.
    pub fn pseudoscalar() -> Self {
        Multivector::blade(Blade::PSEUDOSCALAR)
    }

    /// The element written gamma_0123 in matrix form: the pseudoscalar with
    /// all four indices lowered, i.e. -e0123.
    pub fn pseudoscalar_lower() -> Self {
        -Multivector::pseudoscalar()
    }

    pub fn coeff(&self, blade: Blade) -> Complex64 {
        self.coeffs[blade.index()]
    }

    pub fn set_coeff(&mut self, blade: Blade, value: Complex64) {
        self.coeffs[blade.index()] = value;
    }

    pub fn coeffs(&self) -> &[Complex64; 16] {
        &self.coeffs
    }

    pub fn scalar_part(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Largest coefficient magnitude.
    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// True when every coefficient is real within `COEFF_TOL` relative to
    /// the element's own scale.
    pub fn is_real(&self) -> bool {
        let scale = self.max_norm().max(1.0);
        self.coeffs.iter().all(|c| c.im.abs() <= COEFF_TOL * scale)
    }

    /// Grade-r homogeneous part.
    pub fn grade_project(&self, r: usize) -> Result<Multivector> {
        if r > 4 {
            return Err(Error::GradeOutOfRange(r));
        }
        let mut out = Multivector::zero();
        for blade in Blade::all() {
            if blade.grade() == r {
                out.coeffs[blade.index()] = self.coeffs[blade.index()];
            }
        }
        Ok(out)
    }

    /// Clifford product via the precomputed table.
    pub fn clifford_product(&self, other: &Multivector) -> Multivector {
        let table = MulTable::get();
        let mut out = Multivector::zero();
        for a in Blade::all() {
            let ca = self.coeffs[a.index()];
            if ca == Complex64::ZERO {
                continue;
            }
            for b in Blade::all() {
                let cb = other.coeffs[b.index()];
                if cb == Complex64::ZERO {
                    continue;
                }
                let (blade, sign) = table.product(a, b);
                out.coeffs[blade.index()] += ca * cb * sign;
            }
        }
        out
    }

    /// Exterior product: the grade-(r+s) part of the Clifford product,
    /// blade pair by blade pair (disjoint index sets only).
    pub fn wedge(&self, other: &Multivector) -> Multivector {
        let table = MulTable::get();
        let mut out = Multivector::zero();
        for a in Blade::all() {
            let ca = self.coeffs[a.index()];
            if ca == Complex64::ZERO {
                continue;
            }
            for b in Blade::all() {
                if a.0 & b.0 != 0 {
                    continue;
                }
                let cb = other.coeffs[b.index()];
                if cb == Complex64::ZERO {
                    continue;
                }
                let (blade, sign) = table.product(a, b);
                out.coeffs[blade.index()] += ca * cb * sign;
            }
        }
        out
    }

    /// Right contraction: for homogeneous grades r >= s the grade-(r-s)
    /// part of the Clifford product, zero when r < s.
    pub fn right_contract(&self, other: &Multivector) -> Multivector {
        let table = MulTable::get();
        let mut out = Multivector::zero();
        for a in Blade::all() {
            let ca = self.coeffs[a.index()];
            if ca == Complex64::ZERO {
                continue;
            }
            for b in Blade::all() {
                // result grade r-s requires the contracted indices of b to
                // all lie inside a
                if b.0 & !a.0 != 0 {
                    continue;
                }
                let cb = other.coeffs[b.index()];
                if cb == Complex64::ZERO {
                    continue;
                }
                let (blade, sign) = table.product(a, b);
                out.coeffs[blade.index()] += ca * cb * sign;
            }
        }
        out
    }

    /// Reversal: grade-r blades pick up (-1)^{r(r-1)/2}.
    pub fn reverse(&self) -> Multivector {
        let mut out = self.clone();
        for blade in Blade::all() {
            let r = blade.grade();
            if (r * (r.saturating_sub(1)) / 2) % 2 == 1 {
                out.coeffs[blade.index()] = -out.coeffs[blade.index()];
            }
        }
        out
    }

    /// Scalar product a.b = <reverse(a) b>_0. Reduces to eta^{mu nu} a_mu b_nu
    /// on grade-1 inputs.
    pub fn scalar_product(&self, other: &Multivector) -> Complex64 {
        self.reverse().clifford_product(other).scalar_part()
    }

    /// Inverse in the full 16-dimensional algebra via a dense linear solve
    /// of `a * x = 1`.
    pub fn mv_inverse(&self) -> Result<Multivector> {
        let table = MulTable::get();
        // left-multiplication matrix: column k holds a * e_k
        let mut lhs = vec![vec![Complex64::ZERO; 16]; 16];
        for a in Blade::all() {
            let ca = self.coeffs[a.index()];
            if ca == Complex64::ZERO {
                continue;
            }
            for k in Blade::all() {
                let (blade, sign) = table.product(a, k);
                lhs[blade.index()][k.index()] += ca * sign;
            }
        }
        let mut rhs = vec![Complex64::ZERO; 16];
        rhs[0] = Complex64::ONE;
        let x = linalg::solve(&mut lhs, &mut rhs, 1e-12).ok_or(Error::Singular)?;
        let mut coeffs = [Complex64::ZERO; 16];
        coeffs.copy_from_slice(&x);
        let inv = Multivector::from_coeffs(coeffs);

        let residual = (self.clifford_product(&inv) - Multivector::one()).max_norm();
        if residual > 1e-10 * self.max_norm().max(1.0) * inv.max_norm().max(1.0) {
            return Err(Error::Singular);
        }
        Ok(inv)
    }

    pub fn scale(&self, c: Complex64) -> Multivector {
        let mut out = self.clone();
        for v in out.coeffs.iter_mut() {
            *v *= c;
        }
        out
    }

    pub fn scale_real(&self, x: f64) -> Multivector {
        self.scale(Complex64::new(x, 0.0))
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        (self.clone() - other.clone()).max_norm() <= tol
    }
}

impl Index<Blade> for Multivector {
    type Output = Complex64;
    fn index(&self, blade: Blade) -> &Complex64 {
        &self.coeffs[blade.index()]
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: Multivector) -> Multivector {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
        self
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(mut self, rhs: Multivector) -> Multivector {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
        self
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(mut self) -> Multivector {
        for a in self.coeffs.iter_mut() {
            *a = -*a;
        }
        self
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.clifford_product(rhs)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for blade in Blade::all() {
            let c = self.coeffs[blade.index()];
            if c == Complex64::ZERO {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {blade}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_mv(rng: &mut ChaCha8Rng) -> Multivector {
        let mut coeffs = [Complex64::ZERO; 16];
        for c in coeffs.iter_mut() {
            *c = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        }
        Multivector::from_coeffs(coeffs)
    }

    #[test]
    fn generator_squares_match_metric() {
        for mu in 0..4 {
            let e = Multivector::basis_vector(mu);
            let sq = &e * &e;
            assert_eq!(sq, Multivector::real_scalar(METRIC[mu]));
        }
    }

    #[test]
    fn anticommutation_is_exact_at_table_level() {
        for mu in 0..4 {
            for nu in 0..4 {
                let emu = Multivector::basis_vector(mu);
                let enu = Multivector::basis_vector(nu);
                let anti = &emu * &enu + &enu * &emu;
                let expected = if mu == nu {
                    Multivector::real_scalar(2.0 * METRIC[mu])
                } else {
                    Multivector::zero()
                };
                assert_eq!(anti, expected, "mu={mu} nu={nu}");
            }
        }
    }

    #[test]
    fn e0_times_e1_is_e01() {
        let p = &Multivector::basis_vector(0) * &Multivector::basis_vector(1);
        assert_eq!(p, Multivector::blade(Blade(0b0011)));
    }

    #[test]
    fn pseudoscalar_squares_to_minus_one() {
        let p = Multivector::pseudoscalar();
        assert_eq!(&p * &p, Multivector::real_scalar(-1.0));
    }

    #[test]
    fn table_is_associative_over_all_triples() {
        let table = MulTable::get();
        for a in Blade::all() {
            for b in Blade::all() {
                for c in Blade::all() {
                    let (ab, s_ab) = table.product(a, b);
                    let (ab_c, s_ab_c) = table.product(ab, c);
                    let (bc, s_bc) = table.product(b, c);
                    let (a_bc, s_a_bc) = table.product(a, bc);
                    assert_eq!(ab_c, a_bc);
                    assert_eq!(s_ab * s_ab_c, s_bc * s_a_bc);
                }
            }
        }
    }

    #[test]
    fn grade_projection_examples() {
        let a = Multivector::basis_vector(0) + Multivector::blade(Blade(0b0011)).scale_real(3.0);
        assert_eq!(a.grade_project(1).unwrap(), Multivector::basis_vector(0));
        let s = Multivector::real_scalar(5.0);
        assert_eq!(s.grade_project(0).unwrap(), s);
        assert!(matches!(
            s.grade_project(5),
            Err(Error::GradeOutOfRange(5))
        ));
    }

    #[test]
    fn grade_decomposition_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let a = random_mv(&mut rng);
            let mut sum = Multivector::zero();
            for r in 0..=4 {
                sum = sum + a.grade_project(r).unwrap();
            }
            assert!(sum.approx_eq(&a, 0.0));
        }
    }

    #[test]
    fn wedge_examples() {
        let e0 = Multivector::basis_vector(0);
        let e1 = Multivector::basis_vector(1);
        assert_eq!(e0.wedge(&e1), Multivector::blade(Blade(0b0011)));
        assert_eq!(e0.wedge(&e0), Multivector::zero());
    }

    #[test]
    fn wedge_matches_graded_product_on_homogeneous_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = random_mv(&mut rng);
            let b = random_mv(&mut rng);
            for r in 0..=4usize {
                for s in 0..=4usize {
                    if r + s > 4 {
                        continue;
                    }
                    let ar = a.grade_project(r).unwrap();
                    let bs = b.grade_project(s).unwrap();
                    let via_product = ar.clifford_product(&bs).grade_project(r + s).unwrap();
                    assert!(ar.wedge(&bs).approx_eq(&via_product, 1e-12));
                }
            }
        }
    }

    #[test]
    fn right_contraction_examples() {
        let e01 = Multivector::blade(Blade(0b0011));
        let e1 = Multivector::basis_vector(1);
        // e01 . e1 = e0 e1 e1 = eta_11 e0 = -e0
        assert_eq!(
            e01.right_contract(&e1),
            -Multivector::basis_vector(0)
        );
        let scalar = Multivector::real_scalar(2.0);
        assert_eq!(
            scalar.right_contract(&Multivector::basis_vector(0)),
            Multivector::zero()
        );
    }

    #[test]
    fn right_contraction_matches_graded_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let a = random_mv(&mut rng);
            let b = random_mv(&mut rng);
            for r in 0..=4usize {
                for s in 0..=r {
                    let ar = a.grade_project(r).unwrap();
                    let bs = b.grade_project(s).unwrap();
                    let via_product = ar.clifford_product(&bs).grade_project(r - s).unwrap();
                    assert!(ar.right_contract(&bs).approx_eq(&via_product, 1e-12));
                }
            }
        }
    }

    #[test]
    fn scalar_product_on_grade_one_is_the_metric() {
        let e0 = Multivector::basis_vector(0);
        let e1 = Multivector::basis_vector(1);
        assert_eq!(e0.scalar_product(&e0), Complex64::ONE);
        assert_eq!(e0.scalar_product(&e1), Complex64::ZERO);
        assert_eq!(e1.scalar_product(&e1), Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn reverse_signs_and_involution() {
        let e01 = Multivector::blade(Blade(0b0011));
        assert_eq!(e01.reverse(), -e01.clone());
        let s = Multivector::real_scalar(4.0);
        assert_eq!(s.reverse(), s);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let a = random_mv(&mut rng);
            assert!(a.reverse().reverse().approx_eq(&a, 0.0));
        }
    }

    #[test]
    fn reverse_is_an_antihomomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let a = random_mv(&mut rng);
            let b = random_mv(&mut rng);
            let lhs = a.clifford_product(&b).reverse();
            let rhs = b.reverse().clifford_product(&a.reverse());
            assert!(lhs.approx_eq(&rhs, 1e-12));
        }
    }

    #[test]
    fn inverse_of_simple_elements() {
        let e0 = Multivector::basis_vector(0);
        assert!(e0.mv_inverse().unwrap().approx_eq(&e0, 1e-12));
        let two = Multivector::real_scalar(2.0);
        assert!(two
            .mv_inverse()
            .unwrap()
            .approx_eq(&Multivector::real_scalar(0.5), 1e-12));
    }

    #[test]
    fn inverse_of_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut found = 0;
        for _ in 0..50 {
            let a = random_mv(&mut rng);
            if let Ok(inv) = a.mv_inverse() {
                found += 1;
                let res = (a.clifford_product(&inv) - Multivector::one()).max_norm();
                assert!(res <= 1e-10 * a.max_norm().max(1.0) * inv.max_norm().max(1.0));
            }
        }
        // random elements are invertible with probability 1
        assert!(found >= 48);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(matches!(
            Multivector::zero().mv_inverse(),
            Err(Error::Singular)
        ));
    }
}
