//! Cayley transforms between complex and real Cayley triples.
//!
//! The forward map is `e' = i(e - f - h)/2`, `h' = e + f`,
//! `f' = i(e - f + h)/2`, and the inverse is `e = (h' - i(e' + f'))/2`,
//! `h = i(e' - f')`, `f = (h' + i(e' + f'))/2`. These satisfy the bracket
//! relations for every sl2-triple.

use rand::Rng;

use super::invariant::standard_triple;
use super::linalg::inverse;
use super::matrix::{i_unit, q, qf, ExactMatrix, Qi};
use crate::error::{Error, Result};

pub type Triple = (ExactMatrix, ExactMatrix, ExactMatrix);

/// First violated relation among `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn bracket_violation(e: &ExactMatrix, h: &ExactMatrix, f: &ExactMatrix) -> Option<&'static str> {
    let shapes = [e, h, f].iter().all(|m| m.is_square() && m.rows() == e.rows());
    if !shapes {
        return Some("shape mismatch");
    }
    let two = Qi::new(q(2), q(0));
    if h.commutator(e) != e.scale(&two) {
        Some("[h,e] = 2e")
    } else if h.commutator(f) != -&f.scale(&two) {
        Some("[h,f] = -2f")
    } else if &e.commutator(f) != h {
        Some("[e,f] = h")
    } else {
        None
    }
}

fn require_triple(e: &ExactMatrix, h: &ExactMatrix, f: &ExactMatrix) -> Result<()> {
    match bracket_violation(e, h, f) {
        Some(rel) => Err(Error::Bracket(format!("input violates {rel}"))),
        None => Ok(()),
    }
}

pub fn cayley(e: &ExactMatrix, h: &ExactMatrix, f: &ExactMatrix) -> Result<Triple> {
    require_triple(e, h, f)?;
    let half_i = Qi::new(q(0), qf(1, 2));
    let e_minus_f = e - f;
    Ok((
        (&e_minus_f - h).scale(&half_i),
        e + f,
        (&e_minus_f + h).scale(&half_i),
    ))
}

pub fn cayley_inverse(e: &ExactMatrix, h: &ExactMatrix, f: &ExactMatrix) -> Result<Triple> {
    require_triple(e, h, f)?;
    let half = Qi::new(qf(1, 2), q(0));
    let i_sum = (e + f).scale(&i_unit());
    Ok((
        (h - &i_sum).scale(&half),
        (e - f).scale(&i_unit()),
        (h + &i_sum).scale(&half),
    ))
}

/// The standard triple on S_d conjugated by a random invertible matrix with
/// small Gaussian-integer entries.
pub fn random_conjugate<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Triple {
    let [e, h, f] = standard_triple(d);
    loop {
        let p = ExactMatrix::from_fn(d, d, |_, _| Qi::new(q(rng.gen_range(-3..=3)), q(rng.gen_range(-3..=3))));
        if let Some(pinv) = inverse(&p) {
            let conj = |x: &ExactMatrix| &(&p * x) * &pinv;
            return (conj(&e), conj(&h), conj(&f));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn round_trip_standard() {
        let [e, h, f] = standard_triple(3);
        let (e1, h1, f1) = cayley(&e, &h, &f).unwrap();
        assert_eq!(bracket_violation(&e1, &h1, &f1), None);
        assert_eq!(h1, &e + &f);
        let back = cayley_inverse(&e1, &h1, &f1).unwrap();
        assert_eq!(back, (e, h, f));
    }

    #[test]
    fn random_conjugates() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for d in 2..5 {
            let (e, h, f) = random_conjugate(&mut rng, d);
            let (e1, h1, f1) = cayley(&e, &h, &f).unwrap();
            assert_eq!(bracket_violation(&e1, &h1, &f1), None);
            assert_eq!(cayley_inverse(&e1, &h1, &f1).unwrap(), (e, h, f));
        }
    }

    #[test]
    fn rejects_non_triples() {
        let [e, h, f] = standard_triple(2);
        let err = cayley(&f, &h, &e).unwrap_err();
        assert_eq!(err.code(), "bracket_violation");
    }
}
