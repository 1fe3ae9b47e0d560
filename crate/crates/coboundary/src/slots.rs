//! Products of two elements of `A ⊗ A` placed in two of the three slots of
//! `A ⊗ A ⊗ A` and multiplied in the slot they share, e.g.
//! `r_{12}·r_{13} = Σ a_i·a_j ⊗ b_i ⊗ b_j`.

use antiflex_algebra::PreAlgebra;
use antiflex_linear::{int, Error, Matrix, Perm3, Result, Tensor3, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductOp {
    Prec,
    Succ,
    Dot,
}

impl ProductOp {
    pub fn tensor(self, palg: &PreAlgebra) -> Tensor3 {
        match self {
            ProductOp::Prec => palg.prec.clone(),
            ProductOp::Succ => palg.succ.clone(),
            ProductOp::Dot => palg.dot(),
        }
    }

    /// `≺ ↔ ≻`, `·` fixed.
    pub fn flipped(self) -> ProductOp {
        match self {
            ProductOp::Prec => ProductOp::Succ,
            ProductOp::Succ => ProductOp::Prec,
            ProductOp::Dot => ProductOp::Dot,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ProductOp::Prec => "≺",
            ProductOp::Succ => "≻",
            ProductOp::Dot => "·",
        }
    }
}

/// Placement `r_{pq}`: the first factor of `r` goes to slot `p`, the second to `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slots(pub [usize; 2]);

impl Slots {
    /// Parses the usual one-based notation, `"23"` for `r_{23}`.
    pub fn parse(s: &str) -> Result<Slots> {
        let d: Vec<usize> = s.chars().filter_map(|c| c.to_digit(10)).map(|d| d as usize).collect();
        if d.len() != 2 || s.chars().count() != 2 || d.iter().any(|&x| !(1..=3).contains(&x)) || d[0] == d[1] {
            return Err(Error::Precondition(format!("unknown slot pattern {s:?}")));
        }
        Ok(Slots([d[0] - 1, d[1] - 1]))
    }

    pub fn permuted(self, dest: [usize; 3]) -> Slots {
        Slots([dest[self.0[0]], dest[self.0[1]]])
    }
}

impl std::fmt::Display for Slots {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.0[0] + 1, self.0[1] + 1)
    }
}

/// `X_{px} op Y_{py}` with the product taken in the shared slot, the factor
/// of `X` on the left.
pub fn pairwise_tensor_product(c: &Tensor3, x: &Matrix, px: Slots, y: &Matrix, py: Slots) -> Result<Tensor3> {
    let n = c.dims()[0];
    if x.rows() != n || x.cols() != n || y.rows() != n || y.cols() != n {
        return Err(Error::Shape("pairwise product needs square elements of the algebra's dimension".into()));
    }
    let shared: Vec<usize> = px.0.iter().copied().filter(|s| py.0.contains(s)).collect();
    if shared.len() != 1 {
        return Err(Error::Precondition(format!("slot patterns {px} and {py} must share exactly one slot")));
    }
    let s = shared[0];
    let ix = px.0.iter().position(|&p| p == s).unwrap();
    let iy = py.0.iter().position(|&p| p == s).unwrap();
    let (ox, oy) = (px.0[1 - ix], py.0[1 - iy]);
    let mut out = Tensor3::cubic(n);
    for u in 0..n {
        for v in 0..n {
            let xc = &x[(u, v)];
            if xc.is_zero() {
                continue;
            }
            let (xs, xo) = if ix == 0 { (u, v) } else { (v, u) };
            for w in 0..n {
                for z in 0..n {
                    let yc = &y[(w, z)];
                    if yc.is_zero() {
                        continue;
                    }
                    let (ys, yo) = if iy == 0 { (w, z) } else { (z, w) };
                    let coeff = xc * yc;
                    for k in 0..n {
                        let ck = &c[(xs, ys, k)];
                        if ck.is_zero() {
                            continue;
                        }
                        let mut idx = [0; 3];
                        idx[s] = k;
                        idx[ox] = xo;
                        idx[oy] = yo;
                        out[(idx[0], idx[1], idx[2])] += &coeff * ck;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// One signed term `coef · X_{px} op Y_{py}` of a formal sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coef: i64,
    pub op: ProductOp,
    pub left: (Matrix, Slots),
    pub right: (Matrix, Slots),
}

impl Term {
    pub fn new(coef: i64, op: ProductOp, left: (&Matrix, &str), right: (&Matrix, &str)) -> Term {
        Term {
            coef,
            op,
            left: (left.0.clone(), Slots::parse(left.1).expect("catalog pattern")),
            right: (right.0.clone(), Slots::parse(right.1).expect("catalog pattern")),
        }
    }
}

/// A formal sum of pairwise products.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Catalog(pub Vec<Term>);

impl Catalog {
    pub fn evaluate(&self, palg: &PreAlgebra) -> Result<Tensor3> {
        let n = palg.dimension;
        let mut out = Tensor3::cubic(n);
        for t in &self.0 {
            let v = pairwise_tensor_product(&t.op.tensor(palg), &t.left.0, t.left.1, &t.right.0, t.right.1)?;
            out = &out + &v.scale(&int(t.coef));
        }
        Ok(out)
    }

    /// The flipping map: `≺ ↔ ≻` and the two operands exchanged, so that
    /// `X ≺ Y ↦ Y ≻ X`.
    pub fn flp(&self) -> Catalog {
        Catalog(
            self.0
                .iter()
                .map(|t| Term { coef: t.coef, op: t.op.flipped(), left: t.right.clone(), right: t.left.clone() })
                .collect(),
        )
    }

    /// Relabels slots; agrees with permuting the evaluated tensor.
    pub fn permute(&self, perm: Perm3) -> Catalog {
        let dest = perm.destinations();
        Catalog(
            self.0
                .iter()
                .map(|t| Term {
                    coef: t.coef,
                    op: t.op,
                    left: (t.left.0.clone(), t.left.1.permuted(dest)),
                    right: (t.right.0.clone(), t.right.1.permuted(dest)),
                })
                .collect(),
        )
    }
}
