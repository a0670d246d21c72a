use super::mat::Mat;
use crate::diagram::Orientation;
use crate::ring::{qint, LaurentQ, RationalQ};

/// Generators of U_q(gl(m|n)), indices from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    E(usize),
    F(usize),
    L(usize),
    LInv(usize),
    K(usize),
    KInv(usize),
}

/// The vector representation V = ℚ(q)^{m|n} and its Hopf data.
#[derive(Clone, Debug)]
pub struct QGroupData {
    pub m: usize,
    pub n: usize,
    e: Vec<Mat>,
    f: Vec<Mat>,
}

fn qp(k: i32) -> RationalQ {
    RationalQ::q_pow(k)
}

impl QGroupData {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(m + n >= 1, "empty superdimension");
        let d = m + n;
        let mut e = Vec::new();
        let mut f = Vec::new();
        for i in 0..d.saturating_sub(1) {
            let mut a = Mat::zeros(d, d);
            a[(i, i + 1)] = RationalQ::one();
            f.push(a.transpose());
            e.push(a);
        }
        QGroupData { m, n, e, f }
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Degree of x_k, k from 1.
    pub fn odd(&self, k: usize) -> bool {
        k > self.m
    }

    pub fn parities(&self) -> Vec<bool> {
        (1..=self.dim()).map(|k| self.odd(k)).collect()
    }

    pub fn gen_odd(&self, g: Gen) -> bool {
        match g {
            Gen::E(i) | Gen::F(i) => self.odd(i) != self.odd(i + 1),
            _ => false,
        }
    }

    fn sgn(&self, k: usize) -> i32 {
        if self.odd(k) {
            -1
        } else {
            1
        }
    }

    /// Exponent of q by which K_i acts on x_k.
    fn k_weight(&self, i: usize, k: usize) -> i32 {
        let mut w = 0;
        if k == i {
            w += self.sgn(i);
        }
        if k == i + 1 {
            w -= self.sgn(i + 1);
        }
        w
    }

    /// Action on V.
    pub fn on_v(&self, g: Gen) -> Mat {
        let d = self.dim();
        let diag = |f: &dyn Fn(usize) -> i32| Mat::diagonal((1..=d).map(|k| qp(f(k))).collect());
        match g {
            Gen::E(i) => self.e[i - 1].clone(),
            Gen::F(i) => self.f[i - 1].clone(),
            Gen::L(i) => diag(&|k| (k == i) as i32),
            Gen::LInv(i) => diag(&|k| -((k == i) as i32)),
            Gen::K(i) => diag(&|k| self.k_weight(i, k)),
            Gen::KInv(i) => diag(&|k| -self.k_weight(i, k)),
        }
    }

    /// Antipode image acting on V.
    pub fn antipode_on_v(&self, g: Gen) -> Mat {
        let minus = RationalQ::from_int(-1);
        match g {
            Gen::E(i) => self.on_v(Gen::E(i)).mul(&self.on_v(Gen::K(i))).scale(&minus),
            Gen::F(i) => self.on_v(Gen::KInv(i)).mul(&self.on_v(Gen::F(i))).scale(&minus),
            Gen::L(i) => self.on_v(Gen::LInv(i)),
            Gen::LInv(i) => self.on_v(Gen::L(i)),
            Gen::K(i) => self.on_v(Gen::KInv(i)),
            Gen::KInv(i) => self.on_v(Gen::K(i)),
        }
    }

    /// Action on V* through `x(f)(v) = (-1)^{|x||f|} f(S(x)v)`.
    pub fn on_dual(&self, g: Gen) -> Mat {
        let s = self.antipode_on_v(g);
        let odd = self.gen_odd(g);
        let mut out = s.transpose();
        let d = self.dim();
        for j in 0..d {
            for k in 0..d {
                if odd && self.odd(k + 1) {
                    out[(j, k)] = -&out[(j, k)];
                }
            }
        }
        out
    }

    /// The six displayed dual-action formulas, for comparison.
    pub fn dual_formulas(&self, g: Gen) -> Option<Mat> {
        let d = self.dim();
        let m = self.m;
        let mut out = Mat::zeros(d, d);
        match g {
            Gen::E(i) => {
                out[(i, i - 1)] = if i < m { -qp(-1) } else { -qp(1) };
            }
            Gen::K(i) => {
                for k in 1..=d {
                    let w = if k == i {
                        if i <= m {
                            -1
                        } else {
                            1
                        }
                    } else if k == i + 1 {
                        if i < m {
                            1
                        } else {
                            -1
                        }
                    } else {
                        0
                    };
                    out[(k - 1, k - 1)] = qp(w);
                }
            }
            _ => return None,
        }
        Some(out)
    }

    fn on(&self, g: Gen, o: Orientation) -> Mat {
        match o {
            Orientation::Up => self.on_v(g),
            Orientation::Down => self.on_dual(g),
        }
    }

    /// Δ-extended action on the tensor product of V/V* named by `word`.
    /// The empty product is the trivial module.
    pub fn action(&self, g: Gen, word: &[Orientation]) -> Mat {
        let one = Mat::identity(self.dim());
        let factor_par = self.parities();
        let tensor = |fs: Vec<(Mat, bool)>| -> Mat {
            let mut acc = Mat::identity(1);
            let mut par = vec![false];
            for (f, odd) in fs {
                acc = acc.kron_super(&f, odd, &par);
                par = par.iter().flat_map(|&p| factor_par.iter().map(move |&q| p != q)).collect();
            }
            acc
        };
        let k = word.len();
        match g {
            Gen::E(i) | Gen::F(i) => {
                let size = self.dim().pow(k as u32);
                let mut sum = Mat::zeros(size, size);
                let odd = self.gen_odd(g);
                for pos in 0..k {
                    let fs = (0..k)
                        .map(|j| {
                            if j == pos {
                                (self.on(g, word[j]), odd)
                            } else if matches!(g, Gen::E(_)) {
                                if j < pos {
                                    (one.clone(), false)
                                } else {
                                    (self.on(Gen::KInv(i), word[j]), false)
                                }
                            } else if j < pos {
                                (self.on(Gen::K(i), word[j]), false)
                            } else {
                                (one.clone(), false)
                            }
                        })
                        .collect();
                    sum = sum.add(&tensor(fs));
                }
                sum
            }
            _ => tensor(word.iter().map(|&o| (self.on(g, o), false)).collect()),
        }
    }

    pub fn generators(&self) -> Vec<Gen> {
        let d = self.dim();
        let mut g = Vec::new();
        for i in 1..d {
            g.push(Gen::E(i));
            g.push(Gen::F(i));
        }
        for i in 1..=d {
            g.push(Gen::L(i));
        }
        g
    }

    /// Checks the defining relations as matrix identities on the given
    /// object. Returns `(relation, holds)` pairs.
    pub fn check_relations(&self, word: &[Orientation]) -> Vec<(String, bool)> {
        let d = self.dim();
        let m = self.m;
        let a = |g: Gen| self.action(g, word);
        let two = RationalQ::from_laurent(qint(2));
        let mut out = Vec::new();
        let mut push = |name: String, ok: bool| out.push((name, ok));
        for i in 1..=d {
            for j in 1..d {
                // L_i E_j L_i^-1 = q^{δij - δi,j+1} E_j
                let w = (i == j) as i32 - (i == j + 1) as i32;
                let (l, li) = (a(Gen::L(i)), a(Gen::LInv(i)));
                let ok_e = l.mul(&a(Gen::E(j))).mul(&li) == a(Gen::E(j)).scale(&qp(w));
                let ok_f = l.mul(&a(Gen::F(j))).mul(&li) == a(Gen::F(j)).scale(&qp(-w));
                push(format!("weight L{} E{}", i, j), ok_e);
                push(format!("weight L{} F{}", i, j), ok_f);
            }
        }
        let qmq = RationalQ::from_laurent(&LaurentQ::q_pow(1) - &LaurentQ::q_pow(-1));
        for i in 1..d {
            let (e, f) = (a(Gen::E(i)), a(Gen::F(i)));
            let s = |k: usize| RationalQ::from_int(self.sgn(k) as i64);
            let lhs = e.mul(&f).scale(&s(i)).sub(&f.mul(&e).scale(&s(i + 1)));
            let rhs = a(Gen::K(i)).sub(&a(Gen::KInv(i))).scale(&qmq.inv().unwrap());
            push(format!("commutator {}", i), lhs == rhs);
        }
        if self.n >= 1 && m >= 1 && m < d {
            let (e, f) = (a(Gen::E(m)), a(Gen::F(m)));
            push("odd square E".into(), e.mul(&e).is_zero());
            push("odd square F".into(), f.mul(&f).is_zero());
        }
        for i in 1..d {
            for j in 1..d {
                if i.abs_diff(j) >= 2 {
                    let (ei, ej) = (a(Gen::E(i)), a(Gen::E(j)));
                    let (fi, fj) = (a(Gen::F(i)), a(Gen::F(j)));
                    push(format!("far E{} E{}", i, j), ei.mul(&ej) == ej.mul(&ei));
                    push(format!("far F{} F{}", i, j), fi.mul(&fj) == fj.mul(&fi));
                }
                if i != j {
                    let (ei, fj) = (a(Gen::E(i)), a(Gen::F(j)));
                    push(format!("mixed E{} F{}", i, j), ei.mul(&fj) == fj.mul(&ei));
                }
            }
        }
        let serre = |x: &Mat, y: &Mat| x.mul(x).mul(y).sub(&x.mul(y).mul(x).scale(&two)).add(&y.mul(x).mul(x)).is_zero();
        for i in 1..d.saturating_sub(1) {
            if i == m || i + 1 == m {
                continue;
            }
            let (ei, ej) = (a(Gen::E(i)), a(Gen::E(i + 1)));
            let (fi, fj) = (a(Gen::F(i)), a(Gen::F(i + 1)));
            push(format!("serre E{} E{}", i, i + 1), serre(&ei, &ej));
            push(format!("serre E{} E{}", i + 1, i), serre(&ej, &ei));
            push(format!("serre F{} F{}", i, i + 1), serre(&fi, &fj));
            push(format!("serre F{} F{}", i + 1, i), serre(&fj, &fi));
        }
        if m >= 2 && m + 1 < d {
            for (name, x) in [("E", Gen::E as fn(usize) -> Gen), ("F", Gen::F as fn(usize) -> Gen)] {
                let (xm, xl, xr) = (a(x(m)), a(x(m - 1)), a(x(m + 1)));
                let p = |v: [&Mat; 4]| v[0].mul(v[1]).mul(v[2]).mul(v[3]);
                let sum = p([&xm, &xl, &xm, &xr])
                    .add(&p([&xl, &xm, &xr, &xm]))
                    .add(&p([&xm, &xr, &xm, &xl]))
                    .add(&p([&xr, &xm, &xl, &xm]))
                    .sub(&p([&xm, &xl, &xr, &xm]).scale(&two));
                push(format!("quartic {}", name), sum.is_zero());
            }
        }
        out
    }
}
