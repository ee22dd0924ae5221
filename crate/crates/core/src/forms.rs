//! Real forms of the classical complex Lie algebras and the twelve
//! non-compact exceptional forms: parsing, validation, dimensions and the
//! low-rank isomorphisms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The twelve non-compact exceptional real forms. `M` stands for a minus sign.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExceptionalForm {
    E6_6,
    E6_2,
    E6_M14,
    E6_M26,
    E7_7,
    E7_M5,
    E7_M25,
    E8_8,
    E8_M24,
    F4_4,
    F4_M20,
    G2_2,
}

impl ExceptionalForm {
    pub const ALL: [ExceptionalForm; 12] = [
        ExceptionalForm::E6_6,
        ExceptionalForm::E6_2,
        ExceptionalForm::E6_M14,
        ExceptionalForm::E6_M26,
        ExceptionalForm::E7_7,
        ExceptionalForm::E7_M5,
        ExceptionalForm::E7_M25,
        ExceptionalForm::E8_8,
        ExceptionalForm::E8_M24,
        ExceptionalForm::F4_4,
        ExceptionalForm::F4_M20,
        ExceptionalForm::G2_2,
    ];

    pub fn label(self) -> &'static str {
        use ExceptionalForm::*;
        match self {
            E6_6 => "E6(6)",
            E6_2 => "E6(2)",
            E6_M14 => "E6(-14)",
            E6_M26 => "E6(-26)",
            E7_7 => "E7(7)",
            E7_M5 => "E7(-5)",
            E7_M25 => "E7(-25)",
            E8_8 => "E8(8)",
            E8_M24 => "E8(-24)",
            F4_4 => "F4(4)",
            F4_M20 => "F4(-20)",
            G2_2 => "G2(2)",
        }
    }

    /// The number in parentheses.
    pub fn label_signature(self) -> i64 {
        let l = self.label();
        l[3..l.len() - 1].parse().expect("well-formed label")
    }

    /// Rank of the complex algebra.
    pub fn rank(self) -> usize {
        use ExceptionalForm::*;
        match self {
            E6_6 | E6_2 | E6_M14 | E6_M26 => 6,
            E7_7 | E7_M5 | E7_M25 => 7,
            E8_8 | E8_M24 => 8,
            F4_4 | F4_M20 => 4,
            G2_2 => 2,
        }
    }

    /// Length of the characteristic recorded on the `k` side. The two
    /// E6 forms whose `k` is simple of rank 4 use four-node bases.
    pub fn k_diagram_len(self) -> usize {
        match self {
            ExceptionalForm::E6_6 | ExceptionalForm::E6_M26 => 4,
            other => other.rank(),
        }
    }

    fn table(self) -> (&'static str, u64, u64) {
        use ExceptionalForm::*;
        match self {
            E6_6 => ("sp(4)", 36, 42),
            E6_2 => ("su(2)+su(6)", 38, 40),
            E6_M14 => ("so(10)+R", 46, 32),
            E6_M26 => ("F4(-52)", 52, 26),
            E7_7 => ("su(8)", 63, 70),
            E7_M5 => ("so(12)+su(2)", 69, 64),
            E7_M25 => ("E6(-78)+R", 79, 54),
            E8_8 => ("so(16)", 120, 128),
            E8_M24 => ("E7(-133)+su(2)", 136, 112),
            F4_4 => ("sp(3)+su(2)", 24, 28),
            F4_M20 => ("so(9)", 36, 16),
            G2_2 => ("su(2)+su(2)", 6, 8),
        }
    }

    /// Type of the maximal compact subalgebra.
    pub fn k_type(self) -> &'static str {
        self.table().0
    }

    fn parse_label(s: &str) -> Option<Self> {
        let norm: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c.to_ascii_uppercase() })
            .collect();
        Self::ALL.into_iter().find(|f| f.label() == norm)
    }
}

/// Complex dimensions of `k` and `p` for an exceptional symmetric pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricPairDims {
    pub dim_k: u64,
    pub dim_p: u64,
    /// `dim_p - dim_k`, the signature of the Killing form.
    pub signature_t: i64,
}

/// A real form of a classical complex Lie algebra, a complex classical
/// algebra viewed as a real one, or an exceptional real form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RealFormId {
    SlR(u32),
    SlH(u32),
    Su(u32, u32),
    So(u32, u32),
    SpR(u32),
    SpH(u32, u32),
    UStarH(u32),
    SlC(u32),
    SoC(u32),
    SpC(u32),
    Exceptional(ExceptionalForm),
}

/// Scalars of the defining module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    R,
    C,
    H,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::R => "R",
            Domain::C => "C",
            Domain::H => "H",
        }
    }
}

impl RealFormId {
    pub fn is_exceptional(&self) -> bool {
        matches!(self, RealFormId::Exceptional(_))
    }

    /// `sl(n,C)`, `so(n,C)`, `sp(n,C)`: complex algebras whose orbits are reported in complex dimension.
    pub fn is_complex(&self) -> bool {
        matches!(self, RealFormId::SlC(_) | RealFormId::SoC(_) | RealFormId::SpC(_))
    }

    /// Dimension of the defining module over its scalars.
    pub fn n(&self) -> Option<u32> {
        use RealFormId::*;
        Some(match *self {
            SlR(n) | SlH(n) | SpR(n) | UStarH(n) | SlC(n) | SoC(n) | SpC(n) => n,
            Su(p, q) | So(p, q) | SpH(p, q) => p + q,
            Exceptional(_) => return None,
        })
    }

    /// Signature `p - q` of the defining form, for the families that have one.
    pub fn signature(&self) -> Option<i64> {
        match *self {
            RealFormId::Su(p, q) | RealFormId::So(p, q) | RealFormId::SpH(p, q) => Some(p as i64 - q as i64),
            _ => None,
        }
    }

    pub fn domain(&self) -> Option<Domain> {
        use RealFormId::*;
        match self {
            SlR(_) | So(..) | SpR(_) => Some(Domain::R),
            Su(..) | SlC(_) | SoC(_) | SpC(_) => Some(Domain::C),
            SlH(_) | SpH(..) | UStarH(_) => Some(Domain::H),
            Exceptional(_) => None,
        }
    }

    /// Swaps `(p,q)` so that `p >= q` and checks the parameter constraints.
    /// Low-rank forms pass; see [`RealFormId::is_low_rank`].
    pub fn normalize(self) -> Result<Self> {
        use RealFormId::*;
        let bad = |c: &str| {
            Err(Error::InvalidForm {
                form: self.to_string(),
                constraint: c.to_string(),
            })
        };
        let id = match self {
            Su(p, q) if q > p => Su(q, p),
            So(p, q) if q > p => So(q, p),
            SpH(p, q) if q > p => SpH(q, p),
            other => other,
        };
        match id {
            SlR(n) if n < 2 => bad("n must be at least 2"),
            SlC(n) if n < 2 => bad("n must be at least 2"),
            SlH(n) | UStarH(n) if n < 1 => bad("n must be at least 1"),
            SpH(p, q) if p + q < 1 => bad("p+q must be at least 1"),
            Su(p, q) if p + q < 2 => bad("p+q must be at least 2"),
            So(p, q) if p + q < 2 => bad("p+q must be at least 2"),
            SoC(n) if n < 3 => bad("n must be at least 3"),
            SpR(n) | SpC(n) if n % 2 == 1 => bad("n must be even"),
            SpR(n) | SpC(n) if n < 2 => bad("n must be at least 2"),
            ok => Ok(ok),
        }
    }

    /// Forms outside the ranges where the complex parent is simple of the
    /// listed type. They are usable for enumeration and the oracle only.
    pub fn is_low_rank(&self) -> bool {
        match *self {
            RealFormId::So(p, q) => matches!(p + q, 2 | 4),
            RealFormId::SoC(n) => n == 4,
            RealFormId::UStarH(n) => n < 3,
            _ => false,
        }
    }

    /// Fails for low-rank forms.
    pub fn require_strict(&self) -> Result<()> {
        if self.is_low_rank() {
            Err(Error::LowRank(self.to_string()))
        } else {
            Ok(())
        }
    }

    /// Real dimension of the Lie algebra.
    pub fn real_dimension(&self) -> u64 {
        use RealFormId::*;
        match *self {
            SlC(_) | SoC(_) | SpC(_) => 2 * self.complex_dimension(),
            Exceptional(e) => {
                let d = symmetric_pair_dims(e);
                d.dim_k + d.dim_p
            }
            _ => self.complex_dimension(),
        }
    }

    /// Complex dimension of the complexification (for complex families, of the algebra itself).
    pub fn complex_dimension(&self) -> u64 {
        use RealFormId::*;
        let n = self.n().unwrap_or(0) as u64;
        match *self {
            SlR(_) | Su(..) | SlC(_) => n * n - 1,
            SlH(_) => 4 * n * n - 1,
            So(..) | SoC(_) => n * (n - 1) / 2,
            SpR(_) | SpC(_) => n * (n + 1) / 2,
            SpH(..) => n * (2 * n + 1),
            UStarH(_) => n * (2 * n - 1),
            Exceptional(e) => {
                let d = symmetric_pair_dims(e);
                d.dim_k + d.dim_p
            }
        }
    }

    /// All forms isomorphic to `self` in the low-rank list, plus direct-sum entries.
    pub fn iso_equivalents(&self) -> Vec<IsoEntry> {
        let me = IsoEntry::Form(*self);
        let mut out: Vec<IsoEntry> = Vec::new();
        for group in iso_groups() {
            if group.contains(&me) {
                for e in group {
                    if e != me && !out.contains(&e) {
                        out.push(e);
                    }
                }
            }
        }
        out
    }
}

/// One member of an isomorphism class in the low-rank list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IsoEntry {
    Form(RealFormId),
    /// A complex algebra regarded as a real one; orbit dimensions double.
    Realified(RealFormId),
    /// Not simple; never used for orbit cross-checks.
    DirectSum(&'static str),
}

impl IsoEntry {
    pub fn form(&self) -> Option<RealFormId> {
        match self {
            IsoEntry::Form(f) => Some(*f),
            _ => None,
        }
    }
}

fn iso_groups() -> Vec<Vec<IsoEntry>> {
    use IsoEntry::{DirectSum as S, Form as F, Realified};
    use RealFormId::*;
    vec![
        vec![F(So(2, 0)), F(UStarH(1))],
        vec![F(SoC(3)), F(SlC(2)), F(SpC(2))],
        vec![F(So(3, 0)), F(Su(2, 0)), F(SpH(1, 0)), F(SlH(1))],
        vec![F(So(2, 1)), F(Su(1, 1)), F(SlR(2)), F(SpR(2))],
        vec![F(SoC(4)), S("sl(2,C)+sl(2,C)")],
        vec![F(So(4, 0)), S("su(2)+su(2)")],
        vec![F(So(3, 1)), Realified(SlC(2))],
        vec![F(So(2, 2)), S("sl(2,R)+sl(2,R)")],
        vec![F(UStarH(2)), S("su(2)+sl(2,R)")],
        vec![F(SoC(5)), F(SpC(4))],
        vec![F(So(5, 0)), F(SpH(2, 0))],
        vec![F(So(4, 1)), F(SpH(1, 1))],
        vec![F(So(3, 2)), F(SpR(4))],
        vec![F(SoC(6)), F(SlC(4))],
        vec![F(So(6, 0)), F(Su(4, 0))],
        vec![F(So(5, 1)), F(SlH(2))],
        vec![F(So(4, 2)), F(Su(2, 2))],
        vec![F(So(3, 3)), F(SlR(4))],
        vec![F(UStarH(3)), F(Su(3, 1))],
        vec![F(UStarH(4)), F(So(6, 2))],
    ]
}

/// Dimensions of `k` and `p` for an exceptional form.
pub fn symmetric_pair_dims(e: ExceptionalForm) -> SymmetricPairDims {
    let (_, dim_k, dim_p) = e.table();
    SymmetricPairDims {
        dim_k,
        dim_p,
        signature_t: dim_p as i64 - dim_k as i64,
    }
}

impl fmt::Display for RealFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use RealFormId::*;
        match self {
            SlR(n) => write!(f, "sl({n},R)"),
            SlH(n) => write!(f, "sl({n},H)"),
            Su(p, q) => write!(f, "su({p},{q})"),
            So(p, q) => write!(f, "so({p},{q})"),
            SpR(n) => write!(f, "sp({n},R)"),
            SpH(p, q) => write!(f, "sp({p},{q})"),
            UStarH(n) => write!(f, "u*({n},H)"),
            SlC(n) => write!(f, "sl({n},C)"),
            SoC(n) => write!(f, "so({n},C)"),
            SpC(n) => write!(f, "sp({n},C)"),
            Exceptional(e) => f.write_str(e.label()),
        }
    }
}

impl FromStr for RealFormId {
    type Err = Error;

    /// Parses the grammar printed by `Display`, case-insensitively. Does not normalize.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(e) = ExceptionalForm::parse_label(s) {
            return Ok(RealFormId::Exceptional(e));
        }
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
        let bad = || Error::parse(s.trim(), "unknown form; expected e.g. so(3,2), sl(4,R), u*(3,H), E6(2)");
        let (head, rest) = t.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let (a, b) = args.split_once(',').ok_or_else(bad)?;
        let num = |x: &str| x.parse::<u32>().map_err(|_| Error::parse(x, "expected a nonnegative integer"));
        use RealFormId::*;
        Ok(match (head, b) {
            ("sl", "r") => SlR(num(a)?),
            ("sl", "h") => SlH(num(a)?),
            ("sl", "c") => SlC(num(a)?),
            ("so", "c") => SoC(num(a)?),
            ("sp", "c") => SpC(num(a)?),
            ("sp", "r") => SpR(num(a)?),
            ("u*", "h") => UStarH(num(a)?),
            ("su", q) => Su(num(a)?, num(q)?),
            ("so", q) => So(num(a)?, num(q)?),
            ("sp", q) => SpH(num(a)?, num(q)?),
            _ => return Err(bad()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use RealFormId::*;

    #[test]
    fn normalization() {
        assert_eq!(So(1, 2).normalize().unwrap(), So(2, 1));
        assert_eq!(Su(2, 2).normalize().unwrap(), Su(2, 2));
        let e = SpR(3).normalize().unwrap_err();
        assert!(e.to_string().contains("n must be even"));
        assert!(So(2, 2).normalize().unwrap().is_low_rank());
        assert!(!So(3, 2).is_low_rank());
        assert!(So(1, 0).normalize().is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(Su(2, 1).real_dimension(), 8);
        assert_eq!(So(3, 2).real_dimension(), 10);
        assert_eq!(Exceptional(ExceptionalForm::G2_2).real_dimension(), 14);
        assert_eq!(SlC(2).real_dimension(), 6);
        assert_eq!(SlH(2).real_dimension(), 15);
        assert_eq!(UStarH(3).real_dimension(), 15);
        assert_eq!(SpH(1, 1).real_dimension(), 10);
    }

    #[test]
    fn isomorphism_list() {
        let f = |id: RealFormId| {
            let mut v: Vec<_> = id.iso_equivalents().iter().filter_map(IsoEntry::form).collect();
            v.sort();
            v
        };
        let mut want = vec![Su(1, 1), SlR(2), SpR(2)];
        want.sort();
        assert_eq!(f(So(2, 1)), want);
        assert_eq!(f(So(3, 3)), vec![SlR(4)]);
        let mut want = vec![SpH(1, 0), SlH(1), So(3, 0)];
        want.sort();
        assert_eq!(f(Su(2, 0)), want);
        assert!(Su(5, 2).iso_equivalents().is_empty());
        assert_eq!(UStarH(2).iso_equivalents(), vec![IsoEntry::DirectSum("su(2)+sl(2,R)")]);
    }

    #[test]
    fn pair_dims() {
        let d = symmetric_pair_dims(ExceptionalForm::E6_6);
        assert_eq!((d.dim_k, d.dim_p, d.signature_t), (36, 42, 6));
        let d = symmetric_pair_dims(ExceptionalForm::E8_M24);
        assert_eq!((d.dim_k, d.dim_p, d.signature_t), (136, 112, -24));
        let d = symmetric_pair_dims(ExceptionalForm::F4_M20);
        assert_eq!((d.dim_k, d.dim_p, d.signature_t), (36, 16, -20));
    }

    #[test]
    fn syntax() {
        for s in [
            "sl(4,R)", "sl(2,H)", "su(2,1)", "so(3,2)", "sp(4,R)", "sp(2,1)", "u*(3,H)", "sl(3,C)", "so(5,C)",
            "sp(4,C)", "E6(2)", "F4(-20)", "G2(2)",
        ] {
            assert_eq!(s.parse::<RealFormId>().unwrap().to_string(), s);
        }
        assert_eq!("SO(3, 2)".parse::<RealFormId>().unwrap(), So(3, 2));
        assert_eq!("e6(\u{2212}14)".parse::<RealFormId>().unwrap().to_string(), "E6(-14)");
        assert_eq!("so(3,x)".parse::<RealFormId>().unwrap_err().code(), "parse");
        assert!("E6(3)".parse::<RealFormId>().is_err());
    }
}
