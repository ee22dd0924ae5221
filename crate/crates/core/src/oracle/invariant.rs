//! The simple sl2-module S_d and its invariant forms.

use num_traits::Zero;

use super::linalg::{inertia, solve_in_span, unit_basis};
use super::matrix::{is_zero, re, ExactMatrix, Q, Qi};
use crate::error::{Error, Result};
use crate::forms::Domain;

/// Kinds of forms on a module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum FormKind {
    Symmetric,
    SkewSymmetric,
    Hermitian,
    SkewHermitian,
}

impl FormKind {
    pub const ALL: [FormKind; 4] = [
        FormKind::Symmetric,
        FormKind::SkewSymmetric,
        FormKind::Hermitian,
        FormKind::SkewHermitian,
    ];

    pub fn is_bilinear(self) -> bool {
        matches!(self, FormKind::Symmetric | FormKind::SkewSymmetric)
    }

    pub fn name(self) -> &'static str {
        match self {
            FormKind::Symmetric => "symmetric",
            FormKind::SkewSymmetric => "skew-symmetric",
            FormKind::Hermitian => "Hermitian",
            FormKind::SkewHermitian => "skew-Hermitian",
        }
    }

    /// `+1` for the symmetric and Hermitian kinds.
    fn sign(self) -> i64 {
        match self {
            FormKind::Symmetric | FormKind::Hermitian => 1,
            _ => -1,
        }
    }

    /// `G^T` or `G^*`, whichever the kind pairs with.
    pub fn dual(self, g: &ExactMatrix) -> ExactMatrix {
        if self.is_bilinear() {
            g.transpose()
        } else {
            g.adjoint()
        }
    }

    /// Residual of the defining identity `G^T = +-G` or `G^* = +-G`.
    pub fn identity_residual(self, g: &ExactMatrix) -> ExactMatrix {
        &self.dual(g) - &g.scale(&re(self.sign()))
    }

    /// Residual of `Phi(Ax, y) + Phi(x, Ay) = 0` for the operator `a`.
    pub fn skew_residual(self, g: &ExactMatrix, a: &ExactMatrix) -> ExactMatrix {
        let at = if self.is_bilinear() { a.transpose() } else { a.adjoint() };
        &(&at * g) + &(g * a)
    }
}

/// Images of `e`, `h`, `f` on S_d with basis `v_0..v_{d-1}`:
/// `h v_k = (d-1-2k) v_k`, `f v_k = v_{k+1}`, `e v_k = k(d-k) v_{k-1}`.
pub fn standard_triple(d: usize) -> [ExactMatrix; 3] {
    let e = ExactMatrix::from_fn(d, d, |i, j| if j == i + 1 { re((j * (d - j)) as i64) } else { Qi::zero() });
    let h = ExactMatrix::from_fn(d, d, |i, j| if i == j { re(d as i64 - 1 - 2 * i as i64) } else { Qi::zero() });
    let f = ExactMatrix::from_fn(d, d, |i, j| if i == j + 1 { re(1) } else { Qi::zero() });
    [e, h, f]
}

/// `J = [[0, I], [-I, 0]]`; a complex `2n x 2n` matrix `X` is H-linear iff `X J = J conj(X)`.
pub fn quaternion_j(n: usize) -> ExactMatrix {
    ExactMatrix::standard_alternating(n)
}

/// Residual of the H-linearity constraint.
pub fn h_linear_residual(x: &ExactMatrix, j: &ExactMatrix) -> ExactMatrix {
    &(x * j) - &(j * &x.conj())
}

/// Whether a nonzero invariant form of this kind exists on S_d.
pub fn form_exists(domain: Domain, kind: FormKind, d: usize) -> bool {
    let odd = d % 2 == 1;
    match (domain, kind) {
        (Domain::R | Domain::C, FormKind::Symmetric) => odd,
        (Domain::R | Domain::C, FormKind::SkewSymmetric) => !odd,
        (Domain::R, _) => false,
        (Domain::C, _) => true,
        (Domain::H, FormKind::Hermitian) => odd,
        (Domain::H, FormKind::SkewHermitian) => !odd,
        (Domain::H, _) => false,
    }
}

/// Real basis of all invariant forms of the kind on S_d. Over H, forms are
/// written through the complex `2d` realization. Bilinear kinds over H have
/// no meaning and give the empty list; over R the sesquilinear kinds are
/// solved as their bilinear counterparts.
pub fn solve_invariant_forms(d: usize, kind: FormKind, domain: Domain) -> Vec<ExactMatrix> {
    let [e, h, f] = standard_triple(d);
    match domain {
        Domain::R => {
            let k = match kind {
                FormKind::Hermitian => FormKind::Symmetric,
                FormKind::SkewHermitian => FormKind::SkewSymmetric,
                other => other,
            };
            solve_in_span(&unit_basis(d, false), |g| {
                vec![k.identity_residual(g), k.skew_residual(g, &e), k.skew_residual(g, &h), k.skew_residual(g, &f)]
            })
        }
        Domain::C => solve_in_span(&unit_basis(d, true), |g| {
            vec![
                kind.identity_residual(g),
                kind.skew_residual(g, &e),
                kind.skew_residual(g, &h),
                kind.skew_residual(g, &f),
            ]
        }),
        Domain::H => {
            if kind.is_bilinear() {
                return vec![];
            }
            let j = quaternion_j(d);
            let lift = |m: &ExactMatrix| ExactMatrix::block_diag(&[m.clone(), m.clone()]);
            let (e, h, f) = (lift(&e), lift(&h), lift(&f));
            solve_in_span(&unit_basis(2 * d, true), |g| {
                vec![
                    h_linear_residual(g, &j),
                    kind.identity_residual(g),
                    kind.skew_residual(g, &e),
                    kind.skew_residual(g, &h),
                    kind.skew_residual(g, &f),
                ]
            })
        }
    }
}

/// Dimension of the space of invariant forms over the field the kind is
/// linear over: complex dimension for bilinear forms over C, real otherwise.
pub fn form_space_dim(d: usize, kind: FormKind, domain: Domain) -> usize {
    let n = solve_invariant_forms(d, kind, domain).len();
    if domain == Domain::C && kind.is_bilinear() {
        n / 2
    } else {
        n
    }
}

/// The invariant form of the kind on S_d, unique up to scale.
///
/// The generator is scaled so that its first nonzero entry is 1 or i, then
/// negated if needed so that Hermitian-type forms have nonnegative signature.
pub fn invariant_form_on_sd(d: usize, kind: FormKind, domain: Domain) -> Result<ExactMatrix> {
    if d == 0 || !form_exists(domain, kind, d) {
        return Err(Error::AbsentForm {
            kind: kind.name(),
            d,
            domain: domain.name(),
        });
    }
    // Over C the bilinear forms are complexifications of the real ones.
    let solve_domain = if domain == Domain::C && kind.is_bilinear() { Domain::R } else { domain };
    let sols = solve_invariant_forms(d, kind, solve_domain);
    if sols.len() != 1 {
        return Err(Error::Internal(format!(
            "{} forms on S_{d} over {}: solution space of dimension {}",
            kind.name(),
            domain.name(),
            sols.len()
        )));
    }
    let g = &sols[0];
    let first = g.entries().iter().find(|z| !is_zero(z)).expect("nonzero generator");
    let s: Q = if first.re.is_zero() { first.im.clone() } else { first.re.clone() };
    let mut g = g.scale(&Qi::new(s.recip(), Q::zero()));
    let hermitian_type = matches!(
        (domain, kind),
        (_, FormKind::Hermitian) | (Domain::R, FormKind::Symmetric)
    );
    if hermitian_type && inertia(&g).signature().is_negative() {
        g = -&g;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_brackets() {
        for d in 1..7 {
            let [e, h, f] = standard_triple(d);
            assert_eq!(h.commutator(&e), e.scale(&re(2)));
            assert_eq!(h.commutator(&f), f.scale(&re(-2)));
            assert_eq!(e.commutator(&f), h);
        }
    }

    #[test]
    fn small_forms() {
        assert_eq!(invariant_form_on_sd(1, FormKind::Symmetric, Domain::R).unwrap(), ExactMatrix::from_ints(1, 1, &[1]));
        let g = invariant_form_on_sd(2, FormKind::SkewSymmetric, Domain::R).unwrap();
        assert_eq!(g.transpose(), -&g);
        assert!(!g.is_zero());
        assert_eq!(
            invariant_form_on_sd(2, FormKind::Symmetric, Domain::R).unwrap_err().code(),
            "absent_form"
        );
        let g = invariant_form_on_sd(3, FormKind::Symmetric, Domain::R).unwrap();
        let i = inertia(&g);
        assert_eq!((i.pos, i.neg), (2, 1));
    }

    #[test]
    fn hermitian_over_c_and_h() {
        let g = invariant_form_on_sd(2, FormKind::Hermitian, Domain::C).unwrap();
        assert_eq!(inertia(&g).signature(), 0);
        let g = invariant_form_on_sd(3, FormKind::Hermitian, Domain::H).unwrap();
        assert_eq!(inertia(&g).signature(), 2);
        assert_eq!(g.rows(), 6);
    }

    #[test]
    fn quaternionic_absent_kinds_are_not_empty() {
        assert_eq!(form_space_dim(2, FormKind::Hermitian, Domain::H), 3);
        assert_eq!(form_space_dim(1, FormKind::SkewHermitian, Domain::H), 3);
    }
}
