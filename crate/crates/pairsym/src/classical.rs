//! Classical block codes used as raw material: generator matrices in
//! standard form, Reed-Solomon codes with their singly, doubly and triply
//! extended variants, and the sum-zero and repetition codes that work over
//! arbitrary residue rings.
//!
//! A classical code of length n and minimum Hamming distance d over q
//! symbols is MDS when |C| = q^(n-d+1). Any k columns of an MDS generator
//! matrix are an information set, so Gaussian elimination with leftmost
//! pivots always reaches the standard form (I_k | X).

use crate::alphabet::{Alphabet, Symbol};
use crate::code::Code;
use crate::error::{Error, Result};

const MAX_SPAN: u128 = 1 << 22;

/// A k x n generator matrix in standard form (I_k | X) over a ring or field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    alphabet: Alphabet,
    k: usize,
    n: usize,
    rows: Vec<Vec<Symbol>>,
}

impl GeneratorMatrix {
    pub fn new(alphabet: Alphabet, rows: Vec<Vec<Symbol>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::InvalidParameter(
                "matrix needs at least one row".into(),
            ));
        }
        let n = rows[0].len();
        if n < 2 || n < k {
            return Err(Error::InvalidParameter(format!(
                "matrix shape {k} x {n} unsupported"
            )));
        }
        for row in &rows {
            if row.len() != n {
                return Err(Error::LengthMismatch(n, row.len()));
            }
            if let Some(&s) = row.iter().find(|&&s| !alphabet.contains(s)) {
                return Err(Error::InvalidParameter(format!(
                    "entry {s} out of range for alphabet of order {}",
                    alphabet.order()
                )));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &entry) in row.iter().take(k).enumerate() {
                let expected = if i == j { 1 } else { 0 };
                if entry != expected {
                    return Err(Error::NotStandardForm);
                }
            }
        }
        Ok(GeneratorMatrix {
            alphabet,
            k,
            n,
            rows,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    pub fn span_size(&self) -> u128 {
        (self.alphabet.order() as u128).pow(self.k as u32)
    }

    /// Visit every codeword u * G once, in lexicographic order of the
    /// message u (which, thanks to the standard form, is also lexicographic
    /// order of the codewords). The buffer passed to `f` is reused.
    pub fn for_each_codeword(&self, mut f: impl FnMut(&[Symbol])) -> Result<()> {
        if self.span_size() > MAX_SPAN {
            return Err(Error::EnumerationTooLarge(format!(
                "span of size {}^{}",
                self.alphabet.order(),
                self.k
            )));
        }
        let a = &self.alphabet;
        let q = a.order();
        let (k, n) = (self.k, self.n);
        // scaled[i][s] = s * row_i, so stepping a digit is a pure vector add.
        let scaled: Vec<Vec<Vec<Symbol>>> = self
            .rows
            .iter()
            .map(|row| {
                (0..q)
                    .map(|s| row.iter().map(|&g| a.mul(s, g)).collect())
                    .collect()
            })
            .collect();
        let mut message = vec![0 as Symbol; k];
        // prefix[i] = sum over j <= i of message[j] * row_j.
        let mut prefix = vec![vec![0 as Symbol; n]; k];
        loop {
            f(&prefix[k - 1]);
            // Advance the message like a base-q counter, last digit fastest.
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                message[i] += 1;
                if message[i] < q {
                    break;
                }
                message[i] = 0;
            }
            // Digits i..k-1 changed; rebuild their prefixes.
            for j in i..k {
                let (lo, hi) = prefix.split_at_mut(j);
                let row = &scaled[j][message[j] as usize];
                let dst = &mut hi[0];
                if j == 0 {
                    dst.copy_from_slice(row);
                } else {
                    let base = &lo[j - 1];
                    for idx in 0..n {
                        dst[idx] = a.add(base[idx], row[idx]);
                    }
                }
            }
        }
    }

    /// Materialize the spanned code. The claimed pair distance is left unset.
    pub fn span(&self) -> Result<Code> {
        let mut words = Vec::with_capacity(self.span_size() as usize);
        self.for_each_codeword(|w| words.push(w.to_vec()))?;
        let code = Code::new(self.alphabet.clone(), self.n, words, None)?;
        if code.size() as u128 != self.span_size() {
            return Err(Error::SingularMatrix);
        }
        Ok(code)
    }

    /// Minimum pair weight over nonzero codewords. For a linear code this
    /// equals the minimum pair distance, scanning |C| words instead of all
    /// |C|^2 / 2 pairs.
    pub fn min_pair_weight(&self) -> Result<usize> {
        self.min_weight_by(crate::word::pair_weight_slice)
    }

    /// Minimum Hamming weight over nonzero codewords; equals the minimum
    /// Hamming distance of the spanned linear code.
    pub fn min_hamming_weight(&self) -> Result<usize> {
        self.min_weight_by(|w| w.iter().filter(|&&s| s != 0).count())
    }

    fn min_weight_by(&self, weight: impl Fn(&[Symbol]) -> usize) -> Result<usize> {
        let mut min = usize::MAX;
        let mut first = true;
        self.for_each_codeword(|w| {
            if first {
                first = false; // skip the zero word
            } else {
                min = min.min(weight(w));
            }
        })?;
        if min == usize::MAX {
            return Err(Error::TooFewCodewords);
        }
        Ok(min)
    }
}

/// Reduce `rows` over a field to standard form (I_k | X) by Gaussian
/// elimination with leftmost pivots. Fails if the leading k columns are not
/// an information set (impossible for an MDS generator matrix).
pub fn standard_form(alphabet: &Alphabet, rows: Vec<Vec<Symbol>>) -> Result<GeneratorMatrix> {
    if !alphabet.is_field() {
        return Err(Error::InvalidParameter(
            "row reduction needs a field alphabet".into(),
        ));
    }
    let k = rows.len();
    let mut m = rows;
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| m[r][col] != 0)
            .ok_or(Error::SingularMatrix)?;
        m.swap(col, pivot);
        let inv = alphabet.inv(m[col][col])?;
        for entry in m[col].iter_mut() {
            *entry = alphabet.mul(*entry, inv);
        }
        for r in 0..k {
            if r != col && m[r][col] != 0 {
                let factor = m[r][col];
                let (head, tail) = m.split_at_mut(r.max(col));
                let (src, dst) = if r < col {
                    (&tail[0], &mut head[r])
                } else {
                    (&head[col], &mut tail[0])
                };
                for (d, &s) in dst.iter_mut().zip(src.iter()) {
                    *d = alphabet.sub(*d, alphabet.mul(factor, s));
                }
            }
        }
    }
    GeneratorMatrix::new(alphabet.clone(), m)
}

/// Reed-Solomon code [n, k, n-k+1] over a field of order q, for n <= q + 1.
///
/// Rows are the monomials 1, x, ..., x^(k-1) evaluated at fixed points and
/// then row reduced. Evaluation points are taken in ascending canonical
/// order: the first n nonzero elements when n <= q - 1, all of the field
/// when n = q, and all of the field plus the point at infinity (a final
/// column (0, ..., 0, 1)) when n = q + 1.
pub fn reed_solomon(alphabet: &Alphabet, n: usize, k: usize) -> Result<GeneratorMatrix> {
    if !alphabet.is_field() {
        return Err(Error::InvalidParameter(
            "Reed-Solomon codes need a field alphabet".into(),
        ));
    }
    let q = alphabet.order() as usize;
    if n < 2 || n > q + 1 {
        return Err(Error::InvalidParameter(format!(
            "Reed-Solomon length must satisfy 2 <= n <= q + 1, got n={n}, q={q}"
        )));
    }
    if k < 1 || k > n {
        return Err(Error::InvalidParameter(format!(
            "Reed-Solomon dimension must satisfy 1 <= k <= n, got k={k}"
        )));
    }
    let infinity = n == q + 1;
    let points: Vec<Symbol> = if n < q {
        (1..=n as Symbol).collect()
    } else {
        (0..q as Symbol).collect()
    };
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        let mut row: Vec<Symbol> = points
            .iter()
            .map(|&x| {
                let mut v: Symbol = 1;
                for _ in 0..i {
                    v = alphabet.mul(v, x);
                }
                v
            })
            .collect();
        if infinity {
            row.push(if i == k - 1 { 1 } else { 0 });
        }
        rows.push(row);
    }
    standard_form(alphabet, rows)
}

/// Triply extended Reed-Solomon code over GF(2^m): dimension 3 gives the
/// [q+2, 3, q] code with columns (1, a, a^2) for every field element plus
/// (0,1,0) and (0,0,1); dimension q-1 gives its dual [q+2, q-1, 4]. Both are
/// MDS, and only exist in characteristic 2.
pub fn triply_extended_rs(alphabet: &Alphabet, k: usize) -> Result<GeneratorMatrix> {
    if !alphabet.is_field() || alphabet.characteristic() != 2 {
        return Err(Error::InvalidParameter(
            "triply extended Reed-Solomon codes need characteristic 2".into(),
        ));
    }
    let q = alphabet.order() as usize;
    if k != 3 && k + 1 != q {
        return Err(Error::InvalidParameter(format!(
            "triply extended dimension must be 3 or q - 1, got k={k}, q={q}"
        )));
    }
    let mut rows: Vec<Vec<Symbol>> = (0..3).map(|_| Vec::with_capacity(q + 2)).collect();
    for x in 0..q as Symbol {
        rows[0].push(1);
        rows[1].push(x);
        rows[2].push(alphabet.mul(x, x));
    }
    rows[0].extend([0, 0]);
    rows[1].extend([1, 0]);
    rows[2].extend([0, 1]);
    if k == 3 {
        return standard_form(alphabet, rows);
    }
    // Dual code: a basis of the kernel of the 3 x (q+2) matrix above. With
    // the matrix in standard form (I_3 | X), coordinate j >= 3 carries the
    // kernel vector e_j - sum_i X[i][j-3] e_i. The dual is MDS too, so plain
    // leftmost-pivot reduction brings the basis to standard form.
    let h = standard_form(alphabet, rows)?;
    let n = q + 2;
    let mut dual = Vec::with_capacity(n - 3);
    for j in 3..n {
        let mut v = vec![0 as Symbol; n];
        v[j] = 1;
        for (vi, row) in v.iter_mut().zip(h.rows()) {
            *vi = alphabet.neg(row[j]);
        }
        dual.push(v);
    }
    standard_form(alphabet, dual)
}

/// The sum-zero code: generator (I_{n-1} | -1 column) over any ring Z_q.
/// Its span is every word whose coordinates sum to zero; Hamming distance 2.
pub fn parity_check(alphabet: &Alphabet, n: usize) -> Result<GeneratorMatrix> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "sum-zero code needs length at least 2".into(),
        ));
    }
    let k = n - 1;
    let minus_one = alphabet.neg(1);
    let rows = (0..k)
        .map(|i| {
            let mut row = vec![0 as Symbol; n];
            row[i] = 1;
            row[n - 1] = minus_one;
            row
        })
        .collect();
    GeneratorMatrix::new(alphabet.clone(), rows)
}

/// The q constant words of length n; Hamming distance n.
pub fn repetition(alphabet: &Alphabet, n: usize) -> Result<Code> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "repetition code needs length at least 2".into(),
        ));
    }
    let words = (0..alphabet.order()).map(|s| vec![s; n]).collect();
    let mut code = Code::new(alphabet.clone(), n, words, None)?;
    code.set_provenance(format!("repetition(q={}, n={n})", alphabet.order()));
    Ok(code)
}

/// Report for `is_mds_classical`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalMdsReport {
    pub min_hamming_distance: usize,
    pub size: u128,
    pub bound: u128,
    pub is_mds: bool,
}

/// Scan the minimum Hamming distance and compare against q^(n-d+1).
pub fn is_mds_classical(code: &Code) -> Result<ClassicalMdsReport> {
    let d = code.min_hamming_distance()?;
    let q = code.alphabet().order() as u128;
    let exp = (code.n() - d + 1) as u32;
    let bound = q
        .checked_pow(exp)
        .ok_or_else(|| Error::Overflow(format!("{q}^{exp}")))?;
    let size = code.size() as u128;
    Ok(ClassicalMdsReport {
        min_hamming_distance: d,
        size,
        bound,
        is_mds: size == bound,
    })
}
