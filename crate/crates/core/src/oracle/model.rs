//! Matrix models of V_m for each classical family.

use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use super::invariant::{h_linear_residual, invariant_form_on_sd, quaternion_j, standard_triple, FormKind};
use super::linalg::{inertia, is_positive_definite, rank, solution_dim, solve_in_span, unit_basis};
use super::matrix::{re, ExactMatrix, Q, Qi};
use crate::classical_orbits::{check_admissible, LabelData};
use crate::error::{Error, Result};
use crate::forms::{Domain, RealFormId};

/// Which elements of the triple to centralize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleElement {
    E,
    H,
    F,
}

pub const JUST_E: &[TripleElement] = &[TripleElement::E];
pub const WHOLE_TRIPLE: &[TripleElement] = &[TripleElement::E, TripleElement::H, TripleElement::F];

#[derive(Debug, Clone)]
pub struct MatrixModel {
    pub form: RealFormId,
    pub label: LabelData,
    pub domain: Domain,
    pub rep_e: ExactMatrix,
    pub rep_h: ExactMatrix,
    pub rep_f: ExactMatrix,
    pub gram: Option<ExactMatrix>,
    pub form_kind: Option<FormKind>,
    pub quaternion_j: Option<ExactMatrix>,
    pub trace_free: bool,
    algebra: OnceLock<Vec<ExactMatrix>>,
}

fn theta_s(p: u32, q: u32) -> ExactMatrix {
    ExactMatrix::signature_diag(p as usize, q as usize)
}

fn theta_ss(m: u32) -> Result<ExactMatrix> {
    if !m.is_multiple_of(2) {
        return Err(Error::Internal(format!("alternating multiplicity space of odd dimension {m}")));
    }
    Ok(ExactMatrix::standard_alternating(m as usize / 2))
}

fn delta(d: u32, kind: FormKind, domain: Domain) -> Result<ExactMatrix> {
    invariant_form_on_sd(d as usize, kind, domain)
}

/// Builds the model of `label` for a classical family. Low-rank parameters
/// are accepted here; the oracle covers them too.
pub fn build_model(form: &RealFormId, label: &LabelData) -> Result<MatrixModel> {
    use FormKind::*;
    use RealFormId::*;
    check_admissible(form, label)?;
    let domain = form.domain().expect("classical");
    let base = label.base();
    let pq = |d: u32| label.fine().map(|f| f.pq(d)).unwrap_or((base.m(d), 0));

    let mut reps: [Vec<ExactMatrix>; 3] = Default::default();
    // Gram blocks; over H these are the real blocks P and Q of P + Qj.
    let mut gp: Vec<ExactMatrix> = Vec::new();
    let mut gq: Vec<ExactMatrix> = Vec::new();
    for (d, m) in base.multiplicities().rev() {
        let rho = standard_triple(d as usize);
        let id = ExactMatrix::identity(m as usize);
        for (slot, r) in reps.iter_mut().zip(&rho) {
            slot.push(id.kron(r));
        }
        let odd = d % 2 == 1;
        let (p, q) = pq(d);
        let zero = ExactMatrix::zeros((m * d) as usize, (m * d) as usize);
        let (bp, bq) = match form {
            SlR(_) | SlC(_) | SlH(_) => continue,
            So(..) if odd => (theta_s(p, q).kron(&delta(d, Symmetric, Domain::R)?), zero),
            So(..) => (theta_ss(m)?.kron(&delta(d, SkewSymmetric, Domain::R)?), zero),
            SoC(_) if odd => (id.kron(&delta(d, Symmetric, Domain::R)?), zero),
            SoC(_) => (theta_ss(m)?.kron(&delta(d, SkewSymmetric, Domain::R)?), zero),
            SpR(_) if odd => (theta_ss(m)?.kron(&delta(d, Symmetric, Domain::R)?), zero),
            SpR(_) => (theta_s(p, q).kron(&delta(d, SkewSymmetric, Domain::R)?), zero),
            SpC(_) if odd => (theta_ss(m)?.kron(&delta(d, Symmetric, Domain::R)?), zero),
            SpC(_) => (id.kron(&delta(d, SkewSymmetric, Domain::R)?), zero),
            Su(..) => (theta_s(p, q).kron(&delta(d, Hermitian, Domain::C)?), zero),
            SpH(..) if odd => (theta_s(p, q).kron(&delta(d, Symmetric, Domain::R)?), zero),
            SpH(..) => (zero, id.kron(&delta(d, SkewSymmetric, Domain::R)?)),
            UStarH(_) if odd => (zero, id.kron(&delta(d, Symmetric, Domain::R)?)),
            UStarH(_) => (theta_s(p, q).kron(&delta(d, SkewSymmetric, Domain::R)?), zero),
            Exceptional(_) => unreachable!("checked by check_admissible"),
        };
        gp.push(bp);
        gq.push(bq);
    }
    let [e, h, f] = reps.map(|blocks| ExactMatrix::block_diag(&blocks));
    let n = e.rows();

    let form_kind = match form {
        SlR(_) | SlC(_) | SlH(_) => None,
        So(..) | SoC(_) => Some(Symmetric),
        SpR(_) | SpC(_) => Some(SkewSymmetric),
        Su(..) | SpH(..) => Some(Hermitian),
        UStarH(_) => Some(SkewHermitian),
        Exceptional(_) => unreachable!(),
    };
    let (rep_e, rep_h, rep_f, gram, quaternion_j) = if domain == Domain::H {
        let lift = |m: &ExactMatrix| ExactMatrix::block_diag(&[m.clone(), m.clone()]);
        let gram = form_kind.map(|_| {
            let p = ExactMatrix::block_diag(&gp);
            let q = ExactMatrix::block_diag(&gq);
            ExactMatrix::block2(&p, &q, &-&q, &p)
        });
        (lift(&e), lift(&h), lift(&f), gram, Some(quaternion_j(n)))
    } else {
        let gram = form_kind.map(|_| ExactMatrix::block_diag(&gp));
        (e, h, f, gram, None)
    };
    let model = MatrixModel {
        form: *form,
        label: label.clone(),
        domain,
        rep_e,
        rep_h,
        rep_f,
        gram,
        form_kind,
        quaternion_j,
        trace_free: matches!(form, SlR(_) | SlC(_) | SlH(_) | Su(..)),
        algebra: OnceLock::new(),
    };
    let problems = model.check();
    if problems.is_empty() {
        Ok(model)
    } else {
        Err(Error::Internal(format!("model of {form} at {label}: {}", problems.join("; "))))
    }
}

impl MatrixModel {
    pub fn size(&self) -> usize {
        self.rep_e.rows()
    }

    pub fn rep(&self, x: TripleElement) -> &ExactMatrix {
        match x {
            TripleElement::E => &self.rep_e,
            TripleElement::H => &self.rep_h,
            TripleElement::F => &self.rep_f,
        }
    }

    /// Residuals whose vanishing defines the algebra.
    pub fn algebra_residuals(&self, x: &ExactMatrix) -> Vec<ExactMatrix> {
        let mut out = Vec::new();
        if let Some(j) = &self.quaternion_j {
            out.push(h_linear_residual(x, j));
        }
        if let (Some(g), Some(k)) = (&self.gram, self.form_kind) {
            out.push(k.skew_residual(g, x));
        }
        if self.trace_free {
            out.push(ExactMatrix::from_fn(1, 1, |_, _| x.trace()));
        }
        out
    }

    /// Violated model invariants, as messages.
    pub fn check(&self) -> Vec<String> {
        let mut out = Vec::new();
        let two = re(2);
        if self.rep_h.commutator(&self.rep_e) != self.rep_e.scale(&two) {
            out.push("[h,e] != 2e".into());
        }
        if self.rep_h.commutator(&self.rep_f) != -&self.rep_f.scale(&two) {
            out.push("[h,f] != -2f".into());
        }
        if self.rep_e.commutator(&self.rep_f) != self.rep_h {
            out.push("[e,f] != h".into());
        }
        if let (Some(g), Some(k)) = (&self.gram, self.form_kind) {
            if rank(g) != g.rows() {
                out.push("gram is singular".into());
            }
            if !k.identity_residual(g).is_zero() {
                out.push(format!("gram is not {}", k.name()));
            }
            match self.expected_gram_signature() {
                Some(s) if inertia(g).signature() != s => {
                    out.push(format!("gram signature {} differs from {s}", inertia(g).signature()))
                }
                _ => {}
            }
        }
        for x in [&self.rep_e, &self.rep_h, &self.rep_f] {
            if self.algebra_residuals(x).iter().any(|r| !r.is_zero()) {
                out.push("triple leaves the algebra".into());
                break;
            }
        }
        if !self.is_real_domain_consistent() {
            out.push("non-real entries in a real model".into());
        }
        out
    }

    fn expected_gram_signature(&self) -> Option<i64> {
        match self.form {
            RealFormId::So(p, q) | RealFormId::Su(p, q) => Some(p as i64 - q as i64),
            RealFormId::SpH(p, q) => Some(2 * (p as i64 - q as i64)),
            _ => None,
        }
    }

    fn is_real_domain_consistent(&self) -> bool {
        self.domain != Domain::R
            || (self.rep_e.is_real() && self.rep_f.is_real() && self.gram.as_ref().is_none_or(|g| g.is_real()))
    }

    /// Real basis of the algebra in this realization; computed once.
    pub fn algebra_basis(&self) -> &[ExactMatrix] {
        self.algebra.get_or_init(|| {
            let complex = self.domain != Domain::R;
            solve_in_span(&unit_basis(self.size(), complex), |x| self.algebra_residuals(x))
        })
    }

    /// Real dimension of the algebra as solved.
    pub fn algebra_dim(&self) -> usize {
        self.algebra_basis().len()
    }

    fn commutator_residuals<'a>(&'a self, which: &'a [TripleElement]) -> impl Fn(&ExactMatrix) -> Vec<ExactMatrix> + 'a {
        move |b| which.iter().map(|&x| b.commutator(self.rep(x))).collect()
    }

    pub fn centralizer_basis(&self, which: &[TripleElement]) -> Vec<ExactMatrix> {
        solve_in_span(self.algebra_basis(), self.commutator_residuals(which))
    }
}

/// Real dimension of the centralizer of the chosen elements.
pub fn centralizer_dim(model: &MatrixModel, which: &[TripleElement]) -> usize {
    solution_dim(model.algebra_basis(), model.commutator_residuals(which))
}

/// Negative definiteness of `X -> Re tr(X^2)` on the centralizer of the triple.
pub fn compact_oracle(model: &MatrixModel) -> bool {
    let z = model.centralizer_basis(WHOLE_TRIPLE);
    let gram: Vec<Vec<Q>> = z
        .iter()
        .map(|a| z.iter().map(|b| -(a * b).trace().re).collect())
        .collect();
    is_positive_definite(&gram)
}

/// Dimensions around the Levi decomposition of `z(e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeviDims {
    pub z_e: usize,
    pub z_s: usize,
    /// `z(e)` intersected with the strictly positive `h`-weight spaces.
    pub positive_part: usize,
    /// `z(e)` intersected with the nonnegative `h`-weight spaces.
    pub nonnegative_part: usize,
}

impl LeviDims {
    /// `z(e) = z(s) + u` with `u` the positive part, and `z(e)` has no negative weights.
    pub fn consistent(&self) -> bool {
        self.z_e >= self.z_s && self.z_e - self.z_s == self.positive_part && self.nonnegative_part == self.z_e
    }
}

pub fn levi_dims(model: &MatrixModel) -> LeviDims {
    let n = model.size();
    let weight: Vec<Q> = (0..n).map(|i| model.rep_h.get(i, i).re.clone()).collect();
    let masked = |strict: bool| {
        let weight = &weight;
        move |x: &ExactMatrix| {
            let mut res: Vec<ExactMatrix> = vec![x.commutator(&model.rep_e)];
            res.push(ExactMatrix::from_fn(n, n, |i, j| {
                let diff = &weight[i] - &weight[j];
                let keep = if strict { diff.is_positive() } else { !diff.is_negative() };
                if keep {
                    Qi::zero()
                } else {
                    x.get(i, j).clone()
                }
            }));
            res
        }
    };
    LeviDims {
        z_e: centralizer_dim(model, JUST_E),
        z_s: centralizer_dim(model, WHOLE_TRIPLE),
        positive_part: solution_dim(model.algebra_basis(), masked(true)),
        nonnegative_part: solution_dim(model.algebra_basis(), masked(false)),
    }
}
