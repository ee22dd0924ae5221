//! Compactness of real nilpotents, the matching (-1)-distinguished K-orbits,
//! and composition of verdicts over direct sums.
//!
//! A projectivized nilpotent K-orbit closure is self-dual exactly when the
//! orbit is (-1)-distinguished; that equivalence is taken as given here.

use serde::{Deserialize, Serialize};

use crate::classical_orbits::{check_admissible, enumerate_orbits, LabelData, OrbitDim, OrbitLabel, OrbitRecord};
use crate::error::{Error, Result};
use crate::exceptional::{self, ExceptionalRow};
use crate::forms::RealFormId;

/// How a K-orbit is identified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum KOrbitLabel {
    Classical(OrbitLabel),
    Exceptional { row_no: usize, dyn_k: Vec<i32>, dyn_g: Vec<i32> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KOrbitRecord {
    pub form: RealFormId,
    pub label: KOrbitLabel,
    /// `dim_C K.x`
    pub complex_dim: u64,
    /// `dim_C G.x`, always twice `complex_dim`.
    pub g_orbit_complex_dim: u64,
    /// Dimension of the projectivized closure.
    pub projective_dim: u64,
    pub minus1_distinguished: bool,
    pub self_dual: bool,
}

/// Verdict for one label of a classical real form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub form: RealFormId,
    pub label: LabelData,
    pub component_count: u8,
    pub compact: bool,
    pub minus1_distinguished: bool,
    pub self_dual: bool,
    pub real_dim: u64,
    pub complex_dim: u64,
    pub projective_dim: u64,
}

fn require_real_classical(form: &RealFormId) -> Result<()> {
    if form.is_exceptional() {
        return Err(Error::ExceptionalForm(form.to_string()));
    }
    if form.is_complex() {
        return Err(Error::ComplexFamily(form.to_string()));
    }
    Ok(())
}

/// Whether the nilpotents labelled by `label` are compact, i.e. the
/// reductive part of their centralizer is a compact Lie algebra.
pub fn is_compact(form: &RealFormId, label: &LabelData) -> Result<bool> {
    require_real_classical(form)?;
    check_admissible(form, label)?;
    let base = label.base();
    let pq_zero = |d: u32| match label.fine() {
        Some(f) => {
            let (p, q) = f.pq(d);
            p == 0 || q == 0
        }
        None => true,
    };
    let sizes: Vec<u32> = base.part_sizes().collect();
    let all = |pred: &dyn Fn(u32) -> bool| sizes.iter().all(|&d| pred(d));
    use RealFormId::*;
    Ok(match form {
        SlR(n) | SlH(n) => base.m(*n) == 1,
        So(..) => all(&|d| if d % 2 == 1 { pq_zero(d) } else { base.m(d) == 0 }),
        SpR(_) => all(&|d| if d % 2 == 0 { pq_zero(d) } else { base.m(d) == 0 }),
        Su(..) => all(&pq_zero),
        SpH(..) => all(&|d| if d % 2 == 1 { pq_zero(d) } else { base.m(d) <= 1 }),
        UStarH(_) => all(&|d| if d % 2 == 0 { pq_zero(d) } else { base.m(d) <= 1 }),
        SlC(_) | SoC(_) | SpC(_) | Exceptional(_) => unreachable!(),
    })
}

/// The K-orbit matched with a real orbit.
pub fn ks_k_orbit(rec: &OrbitRecord) -> Result<KOrbitRecord> {
    require_real_classical(&rec.form)?;
    let real_dim = match rec.dim {
        OrbitDim::Real(d) => d,
        OrbitDim::Complex(_) => return Err(Error::ComplexFamily(rec.form.to_string())),
    };
    if real_dim == 0 || real_dim % 2 != 0 {
        return Err(Error::Internal(format!(
            "orbit {} of {} has real dimension {real_dim}",
            rec.label.data, rec.form
        )));
    }
    let compact = is_compact(&rec.form, &rec.label.data)?;
    let complex_dim = real_dim / 2;
    Ok(KOrbitRecord {
        form: rec.form,
        label: KOrbitLabel::Classical(rec.label.clone()),
        complex_dim,
        g_orbit_complex_dim: 2 * complex_dim,
        projective_dim: complex_dim - 1,
        minus1_distinguished: compact,
        self_dual: compact,
    })
}

fn from_row(form: RealFormId, row: &ExceptionalRow) -> KOrbitRecord {
    KOrbitRecord {
        form,
        label: KOrbitLabel::Exceptional {
            row_no: row.row_no,
            dyn_k: row.dyn_k.clone(),
            dyn_g: row.dyn_g.clone(),
        },
        complex_dim: row.dim_k_orbit,
        g_orbit_complex_dim: 2 * row.dim_k_orbit,
        projective_dim: row.dim_k_orbit - 1,
        minus1_distinguished: true,
        self_dual: true,
    }
}

/// All self-dual projectivized nilpotent K-orbit closures of a real form.
pub fn list_selfdual(form: &RealFormId) -> Result<Vec<KOrbitRecord>> {
    if form.is_exceptional() {
        let rows = exceptional::query(form, None)?;
        return Ok(rows.iter().map(|r| from_row(*form, r)).collect());
    }
    require_real_classical(form)?;
    form.require_strict()?;
    let mut out = Vec::new();
    for rec in enumerate_orbits(form)? {
        let k = ks_k_orbit(&rec)?;
        if k.minus1_distinguished {
            out.push(k);
        }
    }
    Ok(out)
}

/// Full verdict for one label of a classical real form.
pub fn classify(form: &RealFormId, label: &LabelData) -> Result<Verdict> {
    require_real_classical(form)?;
    form.require_strict()?;
    let compact = is_compact(form, label)?;
    let count = crate::classical_orbits::component_count(form, label)?;
    let real_dim = crate::classical_orbits::orbit_dimension(form, label)?;
    let complex_dim = real_dim / 2;
    Ok(Verdict {
        form: *form,
        label: label.clone(),
        component_count: count,
        compact,
        minus1_distinguished: compact,
        self_dual: compact,
        real_dim,
        complex_dim,
        projective_dim: complex_dim - 1,
    })
}

/// A direct sum is self-dual iff every summand is.
pub fn compose_selfdual(verdicts: &[bool]) -> Result<bool> {
    if verdicts.is_empty() {
        return Err(Error::EmptyList);
    }
    Ok(verdicts.iter().all(|&v| v))
}

/// Projective dimension of the join of the given projective varieties.
pub fn join_projective_dim(proj_dims: &[u64]) -> Result<u64> {
    if proj_dims.is_empty() {
        return Err(Error::EmptyList);
    }
    Ok(proj_dims.iter().sum::<u64>() + proj_dims.len() as u64 - 1)
}
