//! Partial Smith normal form: reduce a matrix over a polynomial ring to
//! block-diag(I_s, B) using only unit pivots, where a unit is a nonzero
//! element of the declared coefficient field. The residual B contains no
//! unit entry. All row/column operations are logged and replayable.

use crate::matrix::MatRF;
use crate::ratfunc::QRatFunc;
use crate::vars::VarId;
use std::collections::BTreeSet;

/// The coefficient field deciding which entries count as units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffField {
    /// Units are nonzero rational constants.
    Q,
    /// Units are nonzero rational functions in the given variables only
    /// (e.g. the slice parameters t1, t2).
    RationalIn(BTreeSet<VarId>),
}

impl CoeffField {
    pub fn rational_in(vars: impl IntoIterator<Item = VarId>) -> Self {
        CoeffField::RationalIn(vars.into_iter().collect())
    }

    pub fn is_unit(&self, e: &QRatFunc) -> bool {
        if e.is_zero() {
            return false;
        }
        match self {
            CoeffField::Q => e.as_constant().is_some(),
            CoeffField::RationalIn(vs) => e.vars_all(|v| vs.contains(&v)),
        }
    }
}

#[derive(Clone, Debug)]
pub enum ElemOp {
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    /// row *= factor (factor is a unit)
    ScaleRow(usize, QRatFunc),
    /// row[dst] += factor * row[src]
    AddRowMul {
        dst: usize,
        src: usize,
        factor: QRatFunc,
    },
    /// col[dst] += factor * col[src]
    AddColMul {
        dst: usize,
        src: usize,
        factor: QRatFunc,
    },
}

pub fn apply_op(m: &mut MatRF, op: &ElemOp) {
    match op {
        ElemOp::SwapRows(a, b) => m.swap_rows(*a, *b),
        ElemOp::SwapCols(a, b) => m.swap_cols(*a, *b),
        ElemOp::ScaleRow(r, f) => {
            for c in 0..m.cols {
                let v = &m[(*r, c)] * f;
                m[(*r, c)] = v;
            }
        }
        ElemOp::AddRowMul { dst, src, factor } => {
            for c in 0..m.cols {
                if !m[(*src, c)].is_zero() {
                    let v = &m[(*dst, c)] + &(factor * &m[(*src, c)]);
                    m[(*dst, c)] = v;
                }
            }
        }
        ElemOp::AddColMul { dst, src, factor } => {
            for r in 0..m.rows {
                if !m[(r, *src)].is_zero() {
                    let v = &m[(r, *dst)] + &(factor * &m[(r, *src)]);
                    m[(r, *dst)] = v;
                }
            }
        }
    }
}

pub fn apply_ops(m: &MatRF, ops: &[ElemOp]) -> MatRF {
    let mut out = m.clone();
    for op in ops {
        apply_op(&mut out, op);
    }
    out
}

#[derive(Clone, Debug)]
pub struct PsnfResult {
    /// Size s of the leading identity block.
    pub identity_size: usize,
    /// The reduced matrix, block-diag(I_s, B), in full.
    pub reduced: MatRF,
    /// Residual B with all-zero rows and columns removed.
    pub residual: MatRF,
    /// The logged invertible operations taking the input to `reduced`.
    pub ops: Vec<ElemOp>,
}

/// Pivot preference: lowest (total degree, term count, row-major position)
/// among unit entries of the working submatrix.
fn pick_pivot(
    m: &MatRF,
    start: usize,
    field: &CoeffField,
) -> Option<(usize, usize)> {
    let mut best: Option<((u32, usize, usize, usize), usize, usize)> = None;
    for i in start..m.rows {
        for j in start..m.cols {
            let e = &m[(i, j)];
            if field.is_unit(e) {
                let key = (e.total_degree(), e.size(), i, j);
                if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
                    best = Some((key, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Reduce `m` to block-diag(I_s, B) with unit pivots only.
pub fn psnf(m: &MatRF, field: &CoeffField) -> PsnfResult {
    let mut w = m.clone();
    let mut ops: Vec<ElemOp> = Vec::new();
    let mut record = |w: &mut MatRF, op: ElemOp| {
        apply_op(w, &op);
        ops.push(op);
    };
    let mut s = 0;
    while let Some((pi, pj)) = pick_pivot(&w, s, field) {
        if pi != s {
            record(&mut w, ElemOp::SwapRows(s, pi));
        }
        if pj != s {
            record(&mut w, ElemOp::SwapCols(s, pj));
        }
        let inv = w[(s, s)].inv().expect("unit pivot");
        if w[(s, s)] != QRatFunc::one() {
            record(&mut w, ElemOp::ScaleRow(s, inv));
        }
        for i in 0..w.rows {
            if i != s && !w[(i, s)].is_zero() {
                let f = -&w[(i, s)];
                record(
                    &mut w,
                    ElemOp::AddRowMul {
                        dst: i,
                        src: s,
                        factor: f,
                    },
                );
            }
        }
        for j in 0..w.cols {
            if j != s && !w[(s, j)].is_zero() {
                let f = -&w[(s, j)];
                record(
                    &mut w,
                    ElemOp::AddColMul {
                        dst: j,
                        src: s,
                        factor: f,
                    },
                );
            }
        }
        s += 1;
        if s == w.rows.min(w.cols) {
            break;
        }
    }
    // prune residual
    let rrows: Vec<usize> = (s..w.rows)
        .filter(|&i| (s..w.cols).any(|j| !w[(i, j)].is_zero()))
        .collect();
    let rcols: Vec<usize> = (s..w.cols)
        .filter(|&j| (s..w.rows).any(|i| !w[(i, j)].is_zero()))
        .collect();
    let residual = if rrows.is_empty() || rcols.is_empty() {
        MatRF::zero(0, 0)
    } else {
        MatRF::from_rows(
            rrows
                .iter()
                .map(|&i| rcols.iter().map(|&j| w[(i, j)].clone()).collect())
                .collect(),
        )
    };
    PsnfResult {
        identity_size: s,
        reduced: w,
        residual,
        ops,
    }
}
