//! Nonzero nilpotent orbits of the classical families, labelled by
//! partitions or fine partitions, with component splitting and dimensions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::RealFormId;
use crate::partitions::{enumerate_fine, enumerate_partitions, FinePartition, Flavor, Partition};

/// Label data of an orbit: a partition or a fine partition, depending on the family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LabelData {
    Plain(Partition),
    Fine(FinePartition),
}

impl LabelData {
    pub fn base(&self) -> &Partition {
        match self {
            LabelData::Plain(p) => p,
            LabelData::Fine(f) => f.base(),
        }
    }

    pub fn fine(&self) -> Option<&FinePartition> {
        match self {
            LabelData::Fine(f) => Some(f),
            LabelData::Plain(_) => None,
        }
    }

    /// Parses label text in the syntax the family expects.
    pub fn parse(form: &RealFormId, s: &str) -> Result<Self> {
        check_classical(form)?;
        Ok(match required_flavor(form) {
            Some(fl) => LabelData::Fine(FinePartition::parse(s, fl)?),
            None => LabelData::Plain(s.parse()?),
        })
    }
}

impl fmt::Display for LabelData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelData::Plain(p) => p.fmt(f),
            LabelData::Fine(x) => x.fmt(f),
        }
    }
}

/// A label plus the (opaque) component index among the orbits sharing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub data: LabelData,
    pub component_index: u8,
    pub component_count: u8,
}

/// Orbit dimension: real for real forms, complex for the complex families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrbitDim {
    Real(u64),
    Complex(u64),
}

impl OrbitDim {
    pub fn value(self) -> u64 {
        match self {
            OrbitDim::Real(d) | OrbitDim::Complex(d) => d,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub form: RealFormId,
    pub label: OrbitLabel,
    pub dim: OrbitDim,
}

/// Flavor of the fine partitions labelling the family, or `None` for plain partitions.
pub fn required_flavor(form: &RealFormId) -> Option<Flavor> {
    use RealFormId::*;
    match form {
        So(..) => Some(Flavor::FineSymmetric),
        SpR(_) => Some(Flavor::FineSkewSymmetric),
        Su(..) => Some(Flavor::Fine),
        SpH(..) => Some(Flavor::FineHermitian),
        UStarH(_) => Some(Flavor::FineSkewHermitian),
        _ => None,
    }
}

fn check_classical(form: &RealFormId) -> Result<()> {
    if form.is_exceptional() {
        Err(Error::ExceptionalForm(form.to_string()))
    } else {
        Ok(())
    }
}

/// Checks that `label` is a valid orbit label for `form`.
pub fn check_admissible(form: &RealFormId, label: &LabelData) -> Result<()> {
    check_classical(form)?;
    let fail = |reason: String| {
        Err(Error::Inadmissible {
            form: form.to_string(),
            label: label.to_string(),
            reason,
        })
    };
    let base = label.base();
    let n = form.n().expect("classical");
    if base.n() != n {
        return fail(format!("partitions {} rather than {n}", base.n()));
    }
    if base.is_trivial() {
        return fail("trivial partition labels the zero orbit".into());
    }
    match (required_flavor(form), label) {
        (None, LabelData::Plain(p)) => {
            let ok = match form {
                RealFormId::SoC(_) => p.is_symmetric()?,
                RealFormId::SpC(_) => p.is_skew_symmetric()?,
                _ => true,
            };
            if !ok {
                return fail("parity condition of the family fails".into());
            }
        }
        (Some(fl), LabelData::Fine(f)) if f.flavor() == fl => {
            if let Some(s) = form.signature() {
                if f.signature()? != s {
                    return fail(format!("signature {} differs from p-q = {s}", f.signature()?));
                }
            }
        }
        (Some(fl), _) => return fail(format!("expected a {} partition", fl.name())),
        (None, _) => return fail("expected a plain partition".into()),
    }
    Ok(())
}

/// Number of orbits sharing one label: 1, 2 or 4.
pub fn component_count(form: &RealFormId, label: &LabelData) -> Result<u8> {
    check_admissible(form, label)?;
    let base = label.base();
    let no_odd = base.part_sizes().all(|d| d % 2 == 0);
    Ok(match form {
        RealFormId::SlR(_) | RealFormId::SoC(_) => {
            if no_odd {
                2
            } else {
                1
            }
        }
        RealFormId::So(..) => {
            let f = label.fine().expect("fine label");
            if no_odd {
                4
            } else {
                let odd: Vec<_> = f.splits().filter(|(d, _)| d % 2 == 1).collect();
                let pattern = |a: bool| {
                    odd.iter().all(|(d, (p, q))| {
                        let v = if (d % 4 == 1) == a { p } else { q };
                        *v == 0
                    })
                };
                if pattern(true) || pattern(false) {
                    2
                } else {
                    1
                }
            }
        }
        _ => 1,
    })
}

/// Orbit dimension from the closed formulas; complex dimension for complex families.
pub fn orbit_dimension(form: &RealFormId, label: &LabelData) -> Result<u64> {
    check_admissible(form, label)?;
    let base = label.base();
    let n = form.n().expect("classical") as i64;
    let sq = base.transpose_square_sum() as i64;
    let odd = base.odd_part_count() as i64;
    use RealFormId::*;
    let twice = match form {
        SlR(_) | SlC(_) | Su(..) => 2 * (n * n - sq),
        SlH(_) => 8 * (n * n - sq),
        So(..) | SoC(_) => n * n - n - sq + odd,
        SpR(_) | SpC(_) => n * n + n - sq - odd,
        SpH(..) => 2 * (2 * n * n + n - 2 * sq - odd),
        UStarH(_) => 2 * (2 * n * n - n - 2 * sq + odd),
        Exceptional(_) => unreachable!(),
    };
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Internal(format!(
            "dimension formula for {form} at {label} gave {twice}/2"
        )));
    }
    Ok((twice / 2) as u64)
}

/// All label data of nonzero nilpotent orbits, without component multiplicity.
pub fn enumerate_labels(form: &RealFormId) -> Result<Vec<LabelData>> {
    check_classical(form)?;
    let n = form.n().expect("classical");
    let mut out = Vec::new();
    for m in enumerate_partitions(n, false)? {
        match required_flavor(form) {
            None => {
                let l = LabelData::Plain(m);
                if check_admissible(form, &l).is_ok() {
                    out.push(l);
                }
            }
            Some(fl) => {
                let parity_ok = match fl {
                    Flavor::FineSymmetric => m.is_symmetric()?,
                    Flavor::FineSkewSymmetric => m.is_skew_symmetric()?,
                    _ => true,
                };
                if parity_ok {
                    let filter = form.signature();
                    out.extend(enumerate_fine(&m, fl, filter)?.into_iter().map(LabelData::Fine));
                }
            }
        }
    }
    Ok(out)
}

/// Every nonzero nilpotent orbit of a classical form, one record per component.
pub fn enumerate_orbits(form: &RealFormId) -> Result<Vec<OrbitRecord>> {
    let mut out = Vec::new();
    for data in enumerate_labels(form)? {
        let k = component_count(form, &data)?;
        let d = orbit_dimension(form, &data)?;
        let dim = if form.is_complex() {
            OrbitDim::Complex(d)
        } else {
            OrbitDim::Real(d)
        };
        for i in 1..=k {
            out.push(OrbitRecord {
                form: *form,
                label: OrbitLabel {
                    data: data.clone(),
                    component_index: i,
                    component_count: k,
                },
                dim,
            });
        }
    }
    Ok(out)
}

/// The complex algebra whose orbit through the same element has complex
/// dimension equal to the real orbit dimension, together with the partition
/// describing that orbit. Quaternionic modules double every multiplicity.
pub fn complex_parent(form: &RealFormId, base: &Partition) -> Option<(RealFormId, LabelData)> {
    use RealFormId::*;
    let (f, m) = match *form {
        SlR(n) => (SlC(n), base.clone()),
        Su(p, q) => (SlC(p + q), base.clone()),
        So(p, q) => (SoC(p + q), base.clone()),
        SpR(n) => (SpC(n), base.clone()),
        SlH(n) => (SlC(2 * n), base.doubled()),
        SpH(p, q) => (SpC(2 * (p + q)), base.doubled()),
        UStarH(n) => (SoC(2 * n), base.doubled()),
        _ => return None,
    };
    Some((f, LabelData::Plain(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use RealFormId::*;

    fn label(form: RealFormId, s: &str) -> LabelData {
        LabelData::parse(&form, s).unwrap()
    }

    #[test]
    fn splitting() {
        assert_eq!(component_count(&SlR(2), &label(SlR(2), "[2]")).unwrap(), 2);
        assert_eq!(component_count(&So(2, 1), &label(So(2, 1), "[3:(1,0)]")).unwrap(), 2);
        assert_eq!(component_count(&So(3, 3), &label(So(3, 3), "[5:(1,0),1:(0,1)]")).unwrap(), 1);
        assert_eq!(component_count(&So(2, 2), &label(So(2, 2), "[2,2]")).unwrap(), 4);
        assert_eq!(component_count(&SoC(8), &label(SoC(8), "[4,4]")).unwrap(), 2);
    }

    #[test]
    fn formula_values() {
        assert_eq!(orbit_dimension(&SlC(3), &label(SlC(3), "[3]")).unwrap(), 6);
        assert_eq!(orbit_dimension(&So(3, 3), &label(So(3, 3), "[5:(1,0),1:(0,1)]")).unwrap(), 12);
        assert_eq!(orbit_dimension(&SpR(4), &label(SpR(4), "[4:(1,0)]")).unwrap(), 8);
    }

    #[test]
    fn listings() {
        let r = enumerate_orbits(&Su(1, 1)).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|x| x.dim == OrbitDim::Real(2)));
        assert_eq!(enumerate_orbits(&SlR(4)).unwrap().len(), 6);
        assert!(enumerate_orbits(&Su(2, 0)).unwrap().is_empty());
        let e = "E6(2)".parse::<RealFormId>().unwrap();
        assert_eq!(enumerate_orbits(&e).unwrap_err().code(), "exceptional_form");
    }

    #[test]
    fn admissibility() {
        let l = label(Su(2, 1), "[2:(1,0),1:(0,1)]");
        assert!(check_admissible(&Su(2, 1), &l).is_err());
        assert!(check_admissible(&Su(2, 1), &label(Su(2, 1), "[3:(1,0)]")).is_ok());
        assert!(LabelData::parse(&SoC(5), "[2,2,1]").is_ok());
        let l = LabelData::parse(&SoC(5), "[2,1,1,1]").unwrap();
        assert!(check_admissible(&SoC(5), &l).is_err());
    }
}
