//! Partitions in multiplicity form, their transposes, parity classes and
//! signed ("fine") refinements.
//!
//! A partition of `n` is stored as `d -> m_d`, the number of parts of size `d`.
//! Part lists are a derived view, always printed in decreasing order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of a positive integer, keyed by part size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    mult: BTreeMap<u32, u32>,
    n: u32,
}

impl Partition {
    /// Builds a partition from a list of parts in any order.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::ZeroSize);
        }
        let mut mult = BTreeMap::new();
        for &d in parts {
            if d == 0 {
                return Err(Error::InvalidPartition("parts must be positive".into()));
            }
            *mult.entry(d).or_insert(0) += 1;
        }
        Ok(Self::from_map_unchecked(mult))
    }

    /// Builds a partition from `(d, m_d)` pairs; zero multiplicities are dropped.
    pub fn from_multiplicities<I: IntoIterator<Item = (u32, u32)>>(it: I) -> Result<Self> {
        let mut mult = BTreeMap::new();
        for (d, m) in it {
            if d == 0 {
                return Err(Error::InvalidPartition("part size 0".into()));
            }
            if m > 0 {
                *mult.entry(d).or_insert(0) += m;
            }
        }
        if mult.is_empty() {
            return Err(Error::ZeroSize);
        }
        Ok(Self::from_map_unchecked(mult))
    }

    fn from_map_unchecked(mult: BTreeMap<u32, u32>) -> Self {
        let n = mult.iter().map(|(d, m)| d * m).sum();
        Partition { mult, n }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `m_d`; zero for absent part sizes.
    pub fn m(&self, d: u32) -> u32 {
        self.mult.get(&d).copied().unwrap_or(0)
    }

    /// Part sizes with positive multiplicity, increasing.
    pub fn part_sizes(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.mult.keys().copied()
    }

    /// `(d, m_d)` pairs with `m_d > 0`, increasing in `d`.
    pub fn multiplicities(&self) -> impl DoubleEndedIterator<Item = (u32, u32)> + '_ {
        self.mult.iter().map(|(d, m)| (*d, *m))
    }

    /// Parts in decreasing order.
    pub fn parts(&self) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.num_parts() as usize);
        for (d, m) in self.mult.iter().rev() {
            v.extend(std::iter::repeat_n(*d, *m as usize));
        }
        v
    }

    pub fn num_parts(&self) -> u32 {
        self.mult.values().sum()
    }

    pub fn largest_part(&self) -> u32 {
        *self.mult.keys().next_back().expect("nonempty")
    }

    /// True when every part equals 1.
    pub fn is_trivial(&self) -> bool {
        self.mult.len() == 1 && self.mult.contains_key(&1)
    }

    /// The conjugate partition, read off the columns of the Young diagram.
    pub fn transpose(&self) -> Partition {
        let parts = self.parts();
        let cols: Vec<u32> = (1..=self.largest_part())
            .map(|i| parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition::from_parts(&cols).expect("transpose of a valid partition")
    }

    /// `m_d` even for every even `d`.
    pub fn is_symmetric(&self) -> Result<bool> {
        self.require_nontrivial()?;
        Ok(self.mult.iter().all(|(d, m)| d % 2 == 1 || m % 2 == 0))
    }

    /// `m_d` even for every odd `d`.
    pub fn is_skew_symmetric(&self) -> Result<bool> {
        self.require_nontrivial()?;
        Ok(self.mult.iter().all(|(d, m)| d % 2 == 0 || m % 2 == 0))
    }

    fn require_nontrivial(&self) -> Result<()> {
        if self.is_trivial() {
            Err(Error::TrivialPartition(self.to_string()))
        } else {
            Ok(())
        }
    }

    /// Sum of `d^2 * m^t_d` over the transpose, i.e. the sum of squared column lengths.
    pub fn transpose_square_sum(&self) -> u64 {
        self.transpose()
            .multiplicities()
            .map(|(d, m)| (d as u64) * (d as u64) * m as u64)
            .sum()
    }

    /// Number of parts of odd size.
    pub fn odd_part_count(&self) -> u64 {
        self.multiplicities()
            .filter(|(d, _)| d % 2 == 1)
            .map(|(_, m)| m as u64)
            .sum()
    }

    /// The same partition with every multiplicity doubled.
    pub fn doubled(&self) -> Partition {
        Partition::from_map_unchecked(self.mult.iter().map(|(d, m)| (*d, 2 * m)).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = strip_brackets(s)?;
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok.contains(':') {
                return Err(Error::parse(tok, "fine syntax where a plain partition was expected"));
            }
            parts.push(parse_u32(tok)?);
        }
        Partition::from_parts(&parts)
    }
}

fn strip_brackets(s: &str) -> Result<&str> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::parse(t, "expected a bracketed list like [5,1]"))?;
    if inner.trim().is_empty() {
        return Err(Error::parse(t, "empty partition"));
    }
    Ok(inner)
}

fn parse_u32(tok: &str) -> Result<u32> {
    tok.trim()
        .parse::<u32>()
        .map_err(|_| Error::parse(tok.trim(), "expected a nonnegative integer"))
}

/// Which part sizes a fine partition refines into signed pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    Fine,
    FineHermitian,
    FineSkewHermitian,
    FineSymmetric,
    FineSkewSymmetric,
}

impl Flavor {
    pub fn refines(self, d: u32) -> bool {
        match self {
            Flavor::Fine => true,
            Flavor::FineHermitian | Flavor::FineSymmetric => d % 2 == 1,
            Flavor::FineSkewHermitian | Flavor::FineSkewSymmetric => d.is_multiple_of(2),
        }
    }

    pub fn has_signature(self) -> bool {
        matches!(self, Flavor::Fine | Flavor::FineHermitian | Flavor::FineSymmetric)
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Fine => "fine",
            Flavor::FineHermitian => "fine Hermitian",
            Flavor::FineSkewHermitian => "fine skew-Hermitian",
            Flavor::FineSymmetric => "fine symmetric",
            Flavor::FineSkewSymmetric => "fine skew-symmetric",
        }
    }

    fn check_base(self, m: &Partition) -> Result<()> {
        let (ok, required) = match self {
            Flavor::FineSymmetric => (m.is_symmetric()?, "symmetric"),
            Flavor::FineSkewSymmetric => (m.is_skew_symmetric()?, "skew-symmetric"),
            _ => return Ok(()),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Parity {
                partition: m.to_string(),
                required,
            })
        }
    }
}

/// A partition with the refined part sizes split as `m_d = p_d + q_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinePartition {
    base: Partition,
    flavor: Flavor,
    split: BTreeMap<u32, (u32, u32)>,
}

impl FinePartition {
    /// Validates and builds a fine partition. `split` must list exactly the
    /// refined part sizes of `base` that have positive multiplicity.
    pub fn new(base: Partition, flavor: Flavor, split: BTreeMap<u32, (u32, u32)>) -> Result<Self> {
        flavor.check_base(&base)?;
        for (&d, &(p, q)) in &split {
            if !flavor.refines(d) {
                return Err(Error::InvalidFine(format!(
                    "part size {d} is not refined in a {} partition",
                    flavor.name()
                )));
            }
            if p + q != base.m(d) || p + q == 0 {
                return Err(Error::InvalidFine(format!(
                    "split ({p},{q}) for part size {d} does not sum to m_{d} = {}",
                    base.m(d)
                )));
            }
        }
        for d in base.part_sizes() {
            if flavor.refines(d) && !split.contains_key(&d) {
                return Err(Error::InvalidFine(format!("missing split for part size {d}")));
            }
        }
        Ok(FinePartition { base, flavor, split })
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// `(p_d, q_d)`; `(0, 0)` for part sizes that are absent or unrefined.
    pub fn pq(&self, d: u32) -> (u32, u32) {
        self.split.get(&d).copied().unwrap_or((0, 0))
    }

    /// Refined `(d, (p_d, q_d))`, increasing in `d`.
    pub fn splits(&self) -> impl DoubleEndedIterator<Item = (u32, (u32, u32))> + '_ {
        self.split.iter().map(|(d, pq)| (*d, *pq))
    }

    /// `sum over odd d of (p_d - q_d)`.
    pub fn signature(&self) -> Result<i64> {
        if !self.flavor.has_signature() {
            return Err(Error::SignatureUndefined(self.flavor.name()));
        }
        Ok(self.signature_unchecked())
    }

    fn signature_unchecked(&self) -> i64 {
        self.split
            .iter()
            .filter(|(d, _)| *d % 2 == 1)
            .map(|(_, (p, q))| *p as i64 - *q as i64)
            .sum()
    }

    /// Parses the fine syntax `[5:(1,0),1:(0,1)]`. Unrefined parts are plain
    /// integers repeated `m_d` times, e.g. `[2,2,1:(1,0)]`.
    pub fn parse(s: &str, flavor: Flavor) -> Result<Self> {
        let inner = strip_brackets(s)?;
        let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
        let mut split = BTreeMap::new();
        for item in split_items(inner)? {
            if let Some((d, pq)) = item.split_once(':') {
                let d = parse_u32(d)?;
                let pq = pq.trim();
                let body = pq
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::parse(pq, "expected (p,q)"))?;
                let (p, q) = body
                    .split_once(',')
                    .ok_or_else(|| Error::parse(pq, "expected (p,q)"))?;
                let (p, q) = (parse_u32(p)?, parse_u32(q)?);
                if d == 0 || split.insert(d, (p, q)).is_some() {
                    return Err(Error::parse(item, "repeated or zero part size"));
                }
                *mult.entry(d).or_insert(0) += p + q;
            } else {
                let d = parse_u32(item)?;
                if split.contains_key(&d) {
                    return Err(Error::parse(item, "part size appears both split and unsplit"));
                }
                *mult.entry(d).or_insert(0) += 1;
            }
        }
        let base = Partition::from_multiplicities(mult)?;
        for d in base.part_sizes() {
            if flavor.refines(d) && !split.contains_key(&d) {
                return Err(Error::parse(
                    d.to_string(),
                    format!("part size must carry a split in a {} partition", flavor.name()),
                ));
            }
        }
        FinePartition::new(base, flavor, split)
    }
}

/// Splits on commas that are not inside parentheses.
fn split_items(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
        if !(0..=1).contains(&depth) {
            return Err(Error::parse(s, "unbalanced parentheses"));
        }
    }
    if depth != 0 {
        return Err(Error::parse(s, "unbalanced parentheses"));
    }
    out.push(s[start..].trim());
    Ok(out)
}

impl fmt::Display for FinePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items = Vec::new();
        for (d, m) in self.base.multiplicities().rev() {
            match self.split.get(&d) {
                Some((p, q)) => items.push(format!("{d}:({p},{q})")),
                None => items.extend(std::iter::repeat_n(d.to_string(), m as usize)),
            }
        }
        write!(f, "[{}]", items.join(","))
    }
}

/// All partitions of `n` in descending lexicographic order of their part lists.
pub fn enumerate_partitions(n: u32, include_trivial: bool) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    descend(n, n, &mut cur, &mut out);
    if !include_trivial {
        out.retain(|p| !p.is_trivial());
    }
    Ok(out)
}

fn descend(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_parts(cur).expect("nonempty"));
        return;
    }
    for d in (1..=max.min(rest)).rev() {
        cur.push(d);
        descend(rest - d, d, cur, out);
        cur.pop();
    }
}

/// Every refinement of `m` of the given flavor, optionally restricted to one signature.
///
/// Order: part sizes descending, and for each one `p_d` descending.
pub fn enumerate_fine(m: &Partition, flavor: Flavor, signature_filter: Option<i64>) -> Result<Vec<FinePartition>> {
    flavor.check_base(m)?;
    if signature_filter.is_some() && !flavor.has_signature() {
        return Err(Error::SignatureUndefined(flavor.name()));
    }
    let refined: Vec<(u32, u32)> = m.multiplicities().rev().filter(|(d, _)| flavor.refines(*d)).collect();
    let mut out = Vec::new();
    let mut cur = BTreeMap::new();
    refine(m, flavor, &refined, &mut cur, signature_filter, &mut out);
    Ok(out)
}

fn refine(
    m: &Partition,
    flavor: Flavor,
    rest: &[(u32, u32)],
    cur: &mut BTreeMap<u32, (u32, u32)>,
    filter: Option<i64>,
    out: &mut Vec<FinePartition>,
) {
    let Some((&(d, md), tail)) = rest.split_first() else {
        let f = FinePartition {
            base: m.clone(),
            flavor,
            split: cur.clone(),
        };
        if filter.is_none_or(|s| f.signature_unchecked() == s) {
            out.push(f);
        }
        return;
    };
    for p in (0..=md).rev() {
        cur.insert(d, (p, md - p));
        refine(m, flavor, tail, cur, filter, out);
    }
    cur.remove(&d);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[3]).transpose(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
        assert_eq!(p(&[4, 2]).transpose(), p(&[2, 2, 1, 1]));
    }

    #[test]
    fn parity_classes() {
        assert!(p(&[5, 1]).is_symmetric().unwrap());
        assert!(!p(&[2, 1]).is_symmetric().unwrap());
        assert!(p(&[2, 2]).is_skew_symmetric().unwrap());
        assert_eq!(p(&[1, 1]).is_symmetric().unwrap_err().code(), "trivial_partition");
    }

    #[test]
    fn signatures() {
        let f = FinePartition::parse("[3:(1,0)]", Flavor::Fine).unwrap();
        assert_eq!(f.signature().unwrap(), 1);
        let f = FinePartition::parse("[2:(1,0),1:(1,1)]", Flavor::Fine).unwrap();
        assert_eq!(f.signature().unwrap(), 0);
        let f = FinePartition::parse("[5:(1,0),1:(0,1)]", Flavor::FineSymmetric).unwrap();
        assert_eq!(f.signature().unwrap(), 0);
        let f = FinePartition::parse("[2:(1,1)]", Flavor::FineSkewSymmetric).unwrap();
        assert_eq!(f.signature().unwrap_err().code(), "signature_undefined");
    }

    #[test]
    fn partition_listing() {
        let all = enumerate_partitions(3, true).unwrap();
        assert_eq!(all, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(4, false).unwrap().len(), 4);
        assert!(enumerate_partitions(1, false).unwrap().is_empty());
        assert_eq!(enumerate_partitions(0, true).unwrap_err(), Error::ZeroSize);
    }

    #[test]
    fn fine_listing() {
        let r = enumerate_fine(&p(&[3]), Flavor::Fine, Some(1)).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].to_string(), "[3:(1,0)]");

        let r = enumerate_fine(&p(&[5, 1]), Flavor::FineSymmetric, Some(0)).unwrap();
        let s: Vec<_> = r.iter().map(ToString::to_string).collect();
        assert_eq!(s, ["[5:(1,0),1:(0,1)]", "[5:(0,1),1:(1,0)]"]);

        let r = enumerate_fine(&p(&[2, 2]), Flavor::FineSkewSymmetric, None).unwrap();
        let s: Vec<_> = r.iter().map(ToString::to_string).collect();
        assert_eq!(s, ["[2:(2,0)]", "[2:(1,1)]", "[2:(0,2)]"]);

        let e = enumerate_fine(&p(&[2, 1]), Flavor::FineSymmetric, None).unwrap_err();
        assert_eq!(e.code(), "parity");
    }

    #[test]
    fn text_round_trip() {
        for s in ["[5,1]", "[3,3,2,1,1]", "[7]"] {
            assert_eq!(s.parse::<Partition>().unwrap().to_string(), s);
        }
        assert_eq!("[1, 5]".parse::<Partition>().unwrap().to_string(), "[5,1]");
        for (s, fl) in [
            ("[5:(1,0),1:(0,1)]", Flavor::FineSymmetric),
            ("[2,1:(1,0)]", Flavor::FineHermitian),
            ("[4:(1,1),3,3]", Flavor::FineSkewHermitian),
        ] {
            assert_eq!(FinePartition::parse(s, fl).unwrap().to_string(), s);
        }
        assert!("[5,0]".parse::<Partition>().is_err());
        assert!("5,1".parse::<Partition>().is_err());
        assert!(FinePartition::parse("[2:(1,0),1]", Flavor::FineHermitian).is_err());
        assert!(FinePartition::parse("[3:(1,0)", Flavor::Fine).is_err());
    }
}
