//! Dense univariate polynomial helpers over ℚ (index = degree).

use super::coeff::Coeff;

pub(crate) fn trim(mut p: Vec<Coeff>) -> Vec<Coeff> {
    while p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn divrem(a: &[Coeff], b: &[Coeff]) -> (Vec<Coeff>, Vec<Coeff>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let monic = lead.is_one();
    let mut q = vec![Coeff::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let top = r.last().unwrap().clone();
        let f = if monic { top } else { top.div(&lead) };
        for (i, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                r[shift + i] = r[shift + i].sub(&f.mul(bc));
            }
        }
        q[shift] = f;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(p: Vec<Coeff>) -> Vec<Coeff> {
    let lead = p.last().unwrap().clone();
    if lead.is_one() {
        return p;
    }
    p.iter().map(|x| x.div(&lead)).collect()
}

/// Monic greatest common divisor; `[1]` when either input is a unit.
pub(crate) fn gcd(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![Coeff::one()];
        }
        let (_, r) = divrem(&x, &y);
        x = y;
        y = monic_or_empty(r);
    }
    if x.is_empty() {
        return vec![Coeff::one()];
    }
    monic(x)
}

fn monic_or_empty(p: Vec<Coeff>) -> Vec<Coeff> {
    if p.is_empty() {
        p
    } else {
        monic(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Vec<Coeff> {
        v.iter().map(|&x| Coeff::from_int(x)).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x+3)
        let g = gcd(&p(&[-2, 1, 1]), &p(&[-3, 2, 1]));
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(gcd(&p(&[1, 1]), &p(&[2, 1])), p(&[1]));
    }

    #[test]
    fn divrem_roundtrip() {
        let (q, r) = divrem(&p(&[5, 0, 3, 1]), &p(&[1, 2]));
        let mut back = vec![Coeff::zero(); 4];
        for (i, a) in q.iter().enumerate() {
            for (j, b) in p(&[1, 2]).iter().enumerate() {
                back[i + j] = back[i + j].add(&a.mul(b));
            }
        }
        for (i, a) in r.iter().enumerate() {
            back[i] = back[i].add(a);
        }
        assert_eq!(trim(back), p(&[5, 0, 3, 1]));
    }
}
