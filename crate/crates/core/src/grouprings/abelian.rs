//! Abelianization of finitely presented groups through the Smith normal form
//! of the relator exponent matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::laurent::ExponentVector;
use super::word::Word;

/// Integer matrix with rows of equal length.
pub type IntMatrix = Vec<Vec<BigInt>>;

/// Result of [`smith_normal_form`]: `left · input · right = diagonal`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    /// Inverse of `right`.
    pub right_inverse: IntMatrix,
}

fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

/// Smith normal form with unimodular transforms.
///
/// Pivots on the entry of least absolute value; the diagonal satisfies
/// `d_1 | d_2 | ...` and is nonnegative.
pub fn smith_normal_form(input: &IntMatrix, cols: usize) -> SmithForm {
    let rows = input.len();
    let mut a = input.clone();
    let mut left = identity(rows);
    let mut right = identity(cols);
    let mut right_inv = identity(cols);

    // column ops on `a` are mirrored on `right`; their inverses act on the
    // rows of `right_inv`
    let swap_cols = |a: &mut IntMatrix, right: &mut IntMatrix, right_inv: &mut IntMatrix, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in right.iter_mut() {
            row.swap(i, j);
        }
        right_inv.swap(i, j);
    };
    // col_j -= q * col_i
    let sub_col =
        |a: &mut IntMatrix, right: &mut IntMatrix, right_inv: &mut IntMatrix, j: usize, i: usize, q: &BigInt| {
            for row in a.iter_mut() {
                let v = &row[i] * q;
                row[j] -= v;
            }
            for row in right.iter_mut() {
                let v = &row[i] * q;
                row[j] -= v;
            }
            // inverse op: row_i += q * row_j
            let rj = right_inv[j].clone();
            for (x, y) in right_inv[i].iter_mut().zip(rj.iter()) {
                *x += q * y;
            }
        };
    let neg_col = |a: &mut IntMatrix, right: &mut IntMatrix, right_inv: &mut IntMatrix, j: usize| {
        for row in a.iter_mut() {
            row[j] = -row[j].clone();
        }
        for row in right.iter_mut() {
            row[j] = -row[j].clone();
        }
        for x in right_inv[j].iter_mut() {
            *x = -x.clone();
        }
    };

    let mut t = 0;
    while t < rows.min(cols) {
        // least nonzero |entry| in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        left.swap(t, pi);
        swap_cols(&mut a, &mut right, &mut right_inv, t, pj);

        let mut clean = true;
        for i in (t + 1)..rows {
            if !a[i][t].is_zero() {
                let q = a[i][t].div_floor(&a[t][t]);
                let pivot_row = a[t].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= &q * y;
                }
                let lt = left[t].clone();
                for (x, y) in left[i].iter_mut().zip(lt.iter()) {
                    *x -= &q * y;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in (t + 1)..cols {
            if !a[t][j].is_zero() {
                let q = a[t][j].div_floor(&a[t][t]);
                sub_col(&mut a, &mut right, &mut right_inv, j, t, &q);
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold any entry not divisible by the pivot into row t
        let mut fixed = true;
        'outer: for i in (t + 1)..rows {
            for j in (t + 1)..cols {
                if !(&a[i][j] % &a[t][t]).is_zero() {
                    let ri = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(ri.iter()) {
                        *x += y;
                    }
                    let li = left[i].clone();
                    for (x, y) in left[t].iter_mut().zip(li.iter()) {
                        *x += y;
                    }
                    fixed = false;
                    break 'outer;
                }
            }
        }
        if !fixed {
            continue;
        }
        if a[t][t].is_negative() {
            neg_col(&mut a, &mut right, &mut right_inv, t);
        }
        t += 1;
    }
    let diagonal = (0..rows.min(cols)).map(|i| a[i][i].clone()).collect();
    SmithForm { diagonal, left, right, right_inverse: right_inv }
}

/// Projection of a free group onto the free part of its abelianized quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianizationMap {
    pub rank: usize,
    pub gen_images: Vec<ExponentVector>,
    /// Invariant factors greater than one.
    pub torsion_invariants: Vec<BigInt>,
    /// All nonzero invariant factors `d_1 | d_2 | ...`, including ones.
    pub invariant_factors: Vec<BigInt>,
}

impl AbelianizationMap {
    pub fn num_generators(&self) -> usize {
        self.gen_images.len()
    }

    /// Image of a word in `Z^b`.
    pub fn image(&self, w: &Word) -> ExponentVector {
        let mut out = ExponentVector::zero(self.rank);
        for l in w.letters() {
            for (o, g) in out.0.iter_mut().zip(&self.gen_images[l.generator].0) {
                *o += g * l.exponent as i64;
            }
        }
        out
    }

    /// The map for the presentation where generator `g` is replaced by its inverse.
    pub fn with_inverted_generator(&self, g: usize) -> Self {
        let mut out = self.clone();
        out.gen_images[g] = out.gen_images[g].neg();
        out
    }

    /// The map after permuting generators: new generator `i` is old `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = self.clone();
        out.gen_images = perm.iter().map(|&p| self.gen_images[p].clone()).collect();
        out
    }

    /// The trivial map to `Z^0`.
    pub fn trivial(num_generators: usize) -> Self {
        AbelianizationMap {
            rank: 0,
            gen_images: vec![ExponentVector::zero(0); num_generators],
            torsion_invariants: Vec::new(),
            invariant_factors: Vec::new(),
        }
    }
}

/// Abelianizes `⟨g_0..g_{n-1} | relators⟩` and returns the projection onto
/// the free part `Z^b`.
///
/// The coordinates of `Z^b` are put in a canonical form (row Hermite form of
/// the image matrix) so the result does not depend on elimination order.
pub fn abelianize(num_generators: usize, relators: &[Word]) -> AbelianizationMap {
    let rel: IntMatrix =
        relators.iter().map(|w| w.exponent_sums(num_generators).into_iter().map(BigInt::from).collect()).collect();
    let snf = smith_normal_form(&rel, num_generators);
    let r = snf.diagonal.iter().filter(|d| !d.is_zero()).count();
    let rank = num_generators - r;
    // row vectors x ↦ x · right send the relator lattice onto the diagonal
    // lattice; coordinates r.. are free
    let mut images: IntMatrix =
        (r..num_generators).map(|j| (0..num_generators).map(|g| snf.right[g][j].clone()).collect()).collect();
    hermite_rows(&mut images, num_generators);
    let gen_images = (0..num_generators)
        .map(|g| {
            ExponentVector(
                images.iter().map(|row| row[g].to_i64().expect("abelianization image overflows i64")).collect(),
            )
        })
        .collect();
    let invariant_factors: Vec<BigInt> = snf.diagonal.iter().filter(|d| !d.is_zero()).cloned().collect();
    let torsion_invariants = invariant_factors.iter().filter(|d| **d > BigInt::one()).cloned().collect();
    AbelianizationMap { rank, gen_images, torsion_invariants, invariant_factors }
}

/// Row-style Hermite normal form in place: unimodular row operations only,
/// pivots positive, entries above pivots reduced.
fn hermite_rows(m: &mut IntMatrix, cols: usize) {
    let rows = m.len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !m[i][c].is_zero() && best.map_or(true, |b| m[i][c].abs() < m[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap(r, b);
            let mut done = true;
            for i in (r + 1)..rows {
                if !m[i][c].is_zero() {
                    let q = m[i][c].div_floor(&m[r][c]);
                    let pr = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(pr.iter()) {
                        *x -= &q * y;
                    }
                    if !m[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < rows && !m[r][c].is_zero() {
            if m[r][c].is_negative() {
                for x in m[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            for i in 0..r {
                let q = m[i][c].div_floor(&m[r][c]);
                if !q.is_zero() {
                    let pr = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(pr.iter()) {
                        *x -= &q * y;
                    }
                }
            }
            r += 1;
        }
    }
}
