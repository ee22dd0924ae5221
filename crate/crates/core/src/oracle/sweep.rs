//! The full oracle sweep behind `verify`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::cayley::{bracket_violation, cayley, cayley_inverse, random_conjugate};
use super::invariant::{form_exists, form_space_dim, FormKind};
use super::model::{build_model, centralizer_dim, compact_oracle, levi_dims, JUST_E};
use crate::classical_orbits::{enumerate_labels, orbit_dimension, LabelData};
use crate::forms::{Domain, RealFormId};
use crate::selfdual::is_compact;

/// Classical forms of size at most `max_n`, quaternionic ones of size at most
/// `max_nq`, including compact and low-rank parameters.
pub fn forms_up_to(max_n: u32, max_nq: u32) -> Vec<RealFormId> {
    use RealFormId::*;
    let mut out = Vec::new();
    let signed = |n: u32| (0..=n / 2).map(move |q| (n - q, q));
    for n in 2..=max_n {
        out.push(SlR(n));
        out.extend(signed(n).map(|(p, q)| Su(p, q)));
        out.extend(signed(n).map(|(p, q)| So(p, q)));
        if n % 2 == 0 {
            out.push(SpR(n));
        }
    }
    for n in 2..=max_n {
        out.push(SlC(n));
        if n >= 3 {
            out.push(SoC(n));
        }
        if n % 2 == 0 {
            out.push(SpC(n));
        }
    }
    for n in 1..=max_nq {
        out.push(SlH(n));
        out.extend(signed(n).map(|(p, q)| SpH(p, q)));
        out.push(UStarH(n));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct LabelCheck {
    pub label: String,
    pub formula_dim: u64,
    pub oracle_dim: Option<u64>,
    pub theorem_compact: Option<bool>,
    pub oracle_compact: Option<bool>,
    pub z_e: usize,
    pub z_s: usize,
    pub radical: usize,
    pub diagnostics: Vec<String>,
}

impl LabelCheck {
    pub fn passed(&self) -> bool {
        self.diagnostics.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FormCheck {
    pub form: String,
    pub expected_algebra_dim: u64,
    pub solved_algebra_dim: Option<u64>,
    pub labels: Vec<LabelCheck>,
    pub diagnostics: Vec<String>,
}

impl FormCheck {
    pub fn passed(&self) -> bool {
        self.diagnostics.is_empty() && self.labels.iter().all(LabelCheck::passed)
    }
}

fn check_label(form: &RealFormId, label: &LabelData) -> LabelCheck {
    let mut diag = Vec::new();
    let formula_dim = match orbit_dimension(form, label) {
        Ok(d) => d,
        Err(e) => {
            diag.push(format!("formula: {e}"));
            0
        }
    };
    let theorem_compact = if form.is_complex() {
        None
    } else {
        match is_compact(form, label) {
            Ok(c) => Some(c),
            Err(e) => {
                diag.push(format!("criterion: {e}"));
                None
            }
        }
    };
    let mut out = LabelCheck {
        label: label.to_string(),
        formula_dim,
        oracle_dim: None,
        theorem_compact,
        oracle_compact: None,
        z_e: 0,
        z_s: 0,
        radical: 0,
        diagnostics: vec![],
    };
    let model = match build_model(form, label) {
        Ok(m) => m,
        Err(e) => {
            diag.push(format!("model: {e}"));
            out.diagnostics = diag;
            return out;
        }
    };
    let g = model.algebra_dim() as u64;
    let z = centralizer_dim(&model, JUST_E) as u64;
    let real_orbit = g.saturating_sub(z);
    let oracle_dim = if form.is_complex() { real_orbit / 2 } else { real_orbit };
    if form.is_complex() && !real_orbit.is_multiple_of(2) {
        diag.push(format!("complex orbit of odd real dimension {real_orbit}"));
    }
    if oracle_dim != formula_dim {
        diag.push(format!("formula gives {formula_dim}, centralizer solve gives {oracle_dim}"));
    }
    out.oracle_dim = Some(oracle_dim);
    if let Some(t) = theorem_compact {
        let c = compact_oracle(&model);
        out.oracle_compact = Some(c);
        if c != t {
            diag.push(format!("criterion says compact={t}, trace form says {c}"));
        }
    }
    let levi = levi_dims(&model);
    if !levi.consistent() {
        diag.push(format!("Levi split fails: {levi:?}"));
    }
    out.z_e = levi.z_e;
    out.z_s = levi.z_s;
    out.radical = levi.positive_part;
    out.diagnostics = diag;
    out
}

/// Checks every nonzero orbit label of one form.
pub fn verify_form(form: &RealFormId) -> FormCheck {
    let mut diagnostics = Vec::new();
    let expected = form.real_dimension();
    let labels = match enumerate_labels(form) {
        Ok(l) => l,
        Err(e) => {
            return FormCheck {
                form: form.to_string(),
                expected_algebra_dim: expected,
                solved_algebra_dim: None,
                labels: vec![],
                diagnostics: vec![format!("enumeration: {e}")],
            }
        }
    };
    let checks: Vec<LabelCheck> = labels.par_iter().map(|l| check_label(form, l)).collect();
    // The algebra itself does not depend on the label up to conjugacy; check it once.
    let solved = labels
        .first()
        .and_then(|l| build_model(form, l).ok())
        .map(|m| m.algebra_dim() as u64);
    if let Some(s) = solved {
        if s != expected {
            diagnostics.push(format!("algebra has dimension {s}, expected {expected}"));
        }
    }
    FormCheck {
        form: form.to_string(),
        expected_algebra_dim: expected,
        solved_algebra_dim: solved,
        labels: checks,
        diagnostics,
    }
}

/// Invariant forms on S_d: one-dimensional where they exist, zero over R and
/// C where they do not. Returns failure messages.
pub fn check_form_uniqueness(max_d: usize) -> Vec<String> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for domain in [Domain::R, Domain::C, Domain::H] {
            for kind in FormKind::ALL {
                if domain == Domain::R && !kind.is_bilinear() {
                    continue;
                }
                if domain == Domain::H && kind.is_bilinear() {
                    continue;
                }
                let dim = form_space_dim(d, kind, domain);
                let exists = form_exists(domain, kind, d);
                let ok = match (exists, domain) {
                    (true, _) => dim == 1,
                    (false, Domain::H) => true,
                    (false, _) => dim == 0,
                };
                if !ok {
                    out.push(format!("{} forms on S_{d} over {}: dimension {dim}", kind.name(), domain.name()));
                }
            }
        }
    }
    out
}

/// Random exact conjugates of standard triples through the Cayley round trip.
pub fn check_cayley(trials: usize, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for t in 0..trials {
        let d = 2 + t % 3;
        let (e, h, f) = random_conjugate(&mut rng, d);
        let res = cayley(&e, &h, &f).and_then(|(a, b, c)| {
            if let Some(rel) = bracket_violation(&a, &b, &c) {
                return Ok(Some(format!("trial {t}: transform violates {rel}")));
            }
            let back = cayley_inverse(&a, &b, &c)?;
            Ok((back != (e.clone(), h.clone(), f.clone())).then(|| format!("trial {t}: round trip differs")))
        });
        match res {
            Ok(Some(msg)) => out.push(msg),
            Ok(None) => {}
            Err(e) => out.push(format!("trial {t}: {e}")),
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub forms: Vec<FormCheck>,
    pub form_uniqueness_failures: Vec<String>,
    pub cayley_trials: usize,
    pub cayley_failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.forms.iter().all(FormCheck::passed) && self.form_uniqueness_failures.is_empty() && self.cayley_failures.is_empty()
    }

    pub fn label_count(&self) -> usize {
        self.forms.iter().map(|f| f.labels.len()).sum()
    }
}

/// Runs the oracle over the given forms, in parallel, keeping input order.
pub fn verify(forms: &[RealFormId]) -> VerifyReport {
    let forms: Vec<FormCheck> = forms.par_iter().map(verify_form).collect();
    let trials = 100;
    VerifyReport {
        forms,
        form_uniqueness_failures: check_form_uniqueness(8),
        cayley_trials: trials,
        cayley_failures: check_cayley(trials, 0x5eed),
    }
}
