//! Test-only oracle: a generic induced-representation construction over
//! complex floats. It knows nothing about monomial bases or fibered sums; it
//! multiplies group elements from the presentation, finds coset
//! representatives by search and builds `Ind ψ` as dense complex matrices.

#![allow(dead_code)]

use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
    pub fn root(num: i64, den: u64) -> C64 {
        let ang = 2.0 * PI * (num as f64) / (den as f64);
        C64 {
            re: ang.cos(),
            im: ang.sin(),
        }
    }
    pub fn add(self, o: C64) -> C64 {
        C64 {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
    pub fn mul(self, o: C64) -> C64 {
        C64 {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
    pub fn conj(self) -> C64 {
        C64 {
            re: self.re,
            im: -self.im,
        }
    }
    pub fn abs2(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
}

/// `C_m ⋊_s C_N` with elements `(i, j) = x^i t^j`.
#[derive(Debug, Clone)]
pub struct Grp {
    pub m: u64,
    pub n: u64,
    pub s: u64,
}

impl Grp {
    pub fn order(&self) -> u64 {
        self.m * self.n
    }
    fn spow(&self, j: u64) -> u64 {
        let mut r = 1 % self.m;
        for _ in 0..j {
            r = r * self.s % self.m;
        }
        r
    }
    pub fn mul(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        ((a.0 + self.spow(a.1) * b.0) % self.m, (a.1 + b.1) % self.n)
    }
    pub fn inv(&self, a: (u64, u64)) -> (u64, u64) {
        self.elements()
            .into_iter()
            .find(|&b| self.mul(a, b) == (0, 0))
            .unwrap()
    }
    pub fn elements(&self) -> Vec<(u64, u64)> {
        let mut v = Vec::new();
        for j in 0..self.n {
            for i in 0..self.m {
                v.push((i, j));
            }
        }
        v
    }
}

/// Dense complex representation `Ind_{⟨x,t^f⟩}^G ψ`.
pub struct DenseInduced {
    pub grp: Grp,
    pub f: u64,
    pub a: u64,
    pub c: u64,
    reps: Vec<(u64, u64)>,
}

impl DenseInduced {
    pub fn new(grp: &Grp, f: u64, a: u64, c: u64) -> Self {
        let in_h = |g: (u64, u64)| g.1.is_multiple_of(f);
        let mut reps: Vec<(u64, u64)> = Vec::new();
        for g in grp.elements() {
            let covered = reps.iter().any(|&r| in_h(grp.mul(grp.inv(r), g)));
            if !covered {
                reps.push(g);
            }
        }
        assert_eq!(reps.len() as u64, f);
        DenseInduced {
            grp: grp.clone(),
            f,
            a,
            c,
            reps,
        }
    }

    fn psi(&self, h: (u64, u64)) -> Option<C64> {
        if !h.1.is_multiple_of(self.f) {
            return None;
        }
        let t_order = self.grp.n / self.f;
        let k = h.1 / self.f;
        let x = C64::root((self.a * h.0) as i64, self.grp.m);
        let t = C64::root((self.c * k) as i64, t_order);
        Some(x.mul(t))
    }

    pub fn matrix(&self, g: (u64, u64)) -> Vec<Vec<C64>> {
        let f = self.f as usize;
        let mut out = vec![vec![C64::ZERO; f]; f];
        for (col, &r) in self.reps.iter().enumerate() {
            for (row, &r2) in self.reps.iter().enumerate() {
                let h = self.grp.mul(self.grp.inv(r2), self.grp.mul(g, r));
                if let Some(v) = self.psi(h) {
                    out[row][col] = v;
                }
            }
        }
        out
    }

    pub fn character(&self, g: (u64, u64)) -> C64 {
        let mtx = self.matrix(g);
        (0..self.f as usize).fold(C64::ZERO, |acc, k| acc.add(mtx[k][k]))
    }

    fn average(&self, term: impl Fn((u64, u64)) -> C64) -> C64 {
        let total = self
            .grp
            .elements()
            .into_iter()
            .fold(C64::ZERO, |acc, g| acc.add(term(g)));
        let n = self.grp.order() as f64;
        C64 {
            re: total.re / n,
            im: total.im / n,
        }
    }

    pub fn norm(&self) -> i64 {
        let v = self.average(|g| {
            let c = self.character(g);
            C64 {
                re: c.abs2(),
                im: 0.0,
            }
        });
        rounded(v)
    }

    pub fn fs(&self) -> i64 {
        rounded(self.average(|g| self.character(self.grp.mul(g, g))))
    }

    /// `(1/|G|) Σ χ(g θ(g))` for `θ(x) = x^u`, `θ(t) = x^v t^w`.
    pub fn twisted_fs(&self, u: u64, v: u64, w: u64) -> i64 {
        let theta = |g: (u64, u64)| {
            let tx = ((u * g.0) % self.grp.m, 0);
            let mut tt = (0, 0);
            for _ in 0..g.1 {
                tt = self.grp.mul(tt, (v, w));
            }
            self.grp.mul(tx, tt)
        };
        rounded(self.average(|g| self.character(self.grp.mul(g, theta(g)))))
    }

    pub fn is_real(&self) -> bool {
        self.grp
            .elements()
            .into_iter()
            .all(|g| self.character(g).im.abs() < 1e-9)
    }

    pub fn det(&self, g: (u64, u64)) -> C64 {
        determinant(self.matrix(g))
    }
}

fn rounded(v: C64) -> i64 {
    assert!(v.im.abs() < 1e-6, "imaginary part {v:?}");
    let r = v.re.round();
    assert!((v.re - r).abs() < 1e-6, "non-integral {v:?}");
    r as i64
}

pub fn determinant(mut a: Vec<Vec<C64>>) -> C64 {
    let n = a.len();
    let mut det = C64 { re: 1.0, im: 0.0 };
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| a[x][col].abs2().partial_cmp(&a[y][col].abs2()).unwrap())
            .unwrap();
        if a[piv][col].abs2() < 1e-18 {
            return C64::ZERO;
        }
        if piv != col {
            a.swap(piv, col);
            det = C64 {
                re: -det.re,
                im: -det.im,
            };
        }
        let p = a[col][col];
        det = det.mul(p);
        let pinv = {
            let d = p.abs2();
            C64 {
                re: p.re / d,
                im: -p.im / d,
            }
        };
        let pivot_row = a[col].clone();
        for row in a.iter_mut().skip(col + 1) {
            let factor = row[col].mul(pinv);
            for (cell, &p) in row.iter_mut().zip(&pivot_row).skip(col) {
                let sub = factor.mul(p);
                *cell = C64 {
                    re: cell.re - sub.re,
                    im: cell.im - sub.im,
                };
            }
        }
    }
    det
}
