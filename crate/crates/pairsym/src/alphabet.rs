//! Finite alphabets: rings Z_q, fields GF(p^m), and finite abelian groups.
//!
//! Symbols are canonical integers in `0..q`. Field elements are polynomials
//! over Z_p reduced modulo a fixed irreducible polynomial; the element with
//! coefficients c_0..c_{m-1} is encoded as sum(c_i * p^i). The modulus is the
//! lexicographically smallest monic irreducible of degree m, comparing
//! coefficients from degree 0 upward, so every run picks the same field
//! presentation.

use std::sync::Arc;

use crate::error::{Error, Result};

/// Canonical integer encoding of an alphabet element.
pub type Symbol = u16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldData {
    p: u16,
    m: u32,
    q: u16,
    /// Coefficients of the modulus, degree 0 first; length m + 1, monic.
    modulus: Vec<u16>,
}

/// A ring Z_q or a field GF(p^m), carrying the arithmetic used by code
/// constructions. Cheap to clone.
#[derive(Debug, Clone)]
pub enum Alphabet {
    Ring { q: u16 },
    Field(Arc<FieldData>),
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Alphabet::Ring { q: a }, Alphabet::Ring { q: b }) => a == b,
            (Alphabet::Field(a), Alphabet::Field(b)) => {
                a.p == b.p && a.m == b.m && a.modulus == b.modulus
            }
            _ => false,
        }
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    /// The ring of integers modulo q, for any q >= 2.
    pub fn ring(q: u16) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParameter(format!(
                "ring order must be at least 2, got {q}"
            )));
        }
        Ok(Alphabet::Ring { q })
    }

    /// The field GF(p^m) with the canonical modulus.
    pub fn field(p: u16, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!(
                "field characteristic must be prime, got {p}"
            )));
        }
        if m < 1 {
            return Err(Error::InvalidParameter(
                "field extension degree must be at least 1".into(),
            ));
        }
        let q = (p as u128)
            .checked_pow(m)
            .filter(|&q| q <= u16::MAX as u128);
        let q = q.ok_or_else(|| {
            Error::InvalidParameter(format!("field order {p}^{m} exceeds symbol range"))
        })? as u16;
        let modulus = smallest_irreducible(p, m);
        Ok(Alphabet::Field(Arc::new(FieldData { p, m, q, modulus })))
    }

    /// A field with an explicitly given modulus (used when reading files).
    /// The modulus must be monic of degree m and irreducible over Z_p.
    pub fn field_with_modulus(p: u16, m: u32, modulus: Vec<u16>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!(
                "field characteristic must be prime, got {p}"
            )));
        }
        if modulus.len() != m as usize + 1 || *modulus.last().unwrap_or(&0) != 1 {
            return Err(Error::InvalidParameter(
                "modulus must be monic of degree m".into(),
            ));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidParameter(
                "modulus coefficients must be reduced mod p".into(),
            ));
        }
        if m > 1 && !is_irreducible(&modulus, p) {
            return Err(Error::InvalidParameter(
                "modulus is reducible over Z_p".into(),
            ));
        }
        let q = (p as u128)
            .checked_pow(m)
            .filter(|&q| q <= u16::MAX as u128);
        let q = q.ok_or_else(|| {
            Error::InvalidParameter(format!("field order {p}^{m} exceeds symbol range"))
        })? as u16;
        Ok(Alphabet::Field(Arc::new(FieldData { p, m, q, modulus })))
    }

    /// Number of symbols.
    pub fn order(&self) -> u16 {
        match self {
            Alphabet::Ring { q } => *q,
            Alphabet::Field(f) => f.q,
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            Alphabet::Ring { q } => is_prime(*q),
            Alphabet::Field(_) => true,
        }
    }

    /// Field characteristic, or q itself for a ring.
    pub fn characteristic(&self) -> u16 {
        match self {
            Alphabet::Ring { q } => *q,
            Alphabet::Field(f) => f.p,
        }
    }

    /// (p, m, modulus) for fields.
    pub fn field_parts(&self) -> Option<(u16, u32, &[u16])> {
        match self {
            Alphabet::Ring { .. } => None,
            Alphabet::Field(f) => Some((f.p, f.m, &f.modulus)),
        }
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s < self.order()
    }

    pub fn add(&self, a: Symbol, b: Symbol) -> Symbol {
        debug_assert!(self.contains(a) && self.contains(b));
        match self {
            Alphabet::Ring { q } => (((a as u32) + (b as u32)) % (*q as u32)) as Symbol,
            Alphabet::Field(f) => {
                let mut da = decode(a, f.p, f.m);
                let db = decode(b, f.p, f.m);
                for (x, y) in da.iter_mut().zip(db) {
                    *x = (*x + y) % f.p;
                }
                encode(&da, f.p)
            }
        }
    }

    pub fn neg(&self, a: Symbol) -> Symbol {
        debug_assert!(self.contains(a));
        match self {
            Alphabet::Ring { q } => ((*q as u32 - a as u32) % (*q as u32)) as Symbol,
            Alphabet::Field(f) => {
                let da: Vec<u16> = decode(a, f.p, f.m)
                    .into_iter()
                    .map(|c| (f.p - c) % f.p)
                    .collect();
                encode(&da, f.p)
            }
        }
    }

    pub fn sub(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Symbol, b: Symbol) -> Symbol {
        debug_assert!(self.contains(a) && self.contains(b));
        match self {
            Alphabet::Ring { q } => (((a as u32) * (b as u32)) % (*q as u32)) as Symbol,
            Alphabet::Field(f) => {
                let da = decode(a, f.p, f.m);
                let db = decode(b, f.p, f.m);
                let prod = poly_mul(&da, &db, f.p);
                let rem = poly_rem(&prod, &f.modulus, f.p);
                encode_padded(&rem, f.p, f.m)
            }
        }
    }

    /// Multiplicative inverse; fails for 0 and for ring elements sharing a
    /// factor with q.
    pub fn inv(&self, a: Symbol) -> Result<Symbol> {
        for b in 0..self.order() {
            if self.mul(a, b) == 1 {
                return Ok(b);
            }
        }
        Err(Error::NotInvertible(a, self.order()))
    }
}

pub(crate) fn is_prime(n: u16) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n as u32 {
        if (n as u32).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// True for q = p^m with p prime; returns (p, m).
pub fn prime_power(q: u16) -> Option<(u16, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u16;
    while (p as u32) * (p as u32) <= q as u32 {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut m = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                m += 1;
            }
            return if rest == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn decode(s: Symbol, p: u16, m: u32) -> Vec<u16> {
    let mut digits = Vec::with_capacity(m as usize);
    let mut v = s as u32;
    for _ in 0..m {
        digits.push((v % p as u32) as u16);
        v /= p as u32;
    }
    digits
}

fn encode(digits: &[u16], p: u16) -> Symbol {
    let mut v: u32 = 0;
    for &d in digits.iter().rev() {
        v = v * p as u32 + d as u32;
    }
    v as Symbol
}

fn encode_padded(digits: &[u16], p: u16, m: u32) -> Symbol {
    let mut padded = digits.to_vec();
    padded.resize(m as usize, 0);
    encode(&padded, p)
}

/// Polynomial product over Z_p, coefficients degree 0 first.
fn poly_mul(a: &[u16], b: &[u16], p: u16) -> Vec<u16> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u32 * y as u32) % p as u32;
        }
    }
    out.into_iter().map(|c| c as u16).collect()
}

/// Remainder of a modulo the monic polynomial md, over Z_p.
fn poly_rem(a: &[u16], md: &[u16], p: u16) -> Vec<u16> {
    let mut r: Vec<u16> = a.to_vec();
    let d = md.len() - 1;
    while r.len() > d {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - d;
        if lead != 0 {
            for (i, &c) in md.iter().enumerate() {
                let idx = shift + i;
                let sub = (lead as u32 * c as u32) % p as u32;
                r[idx] = ((r[idx] as u32 + p as u32 * p as u32 - sub) % p as u32) as u16;
            }
        }
        r.pop();
    }
    r
}

fn is_zero_poly(a: &[u16]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// Irreducibility over Z_p by trial division with monic divisors of degree
/// up to deg(f)/2. Fine at the small degrees used here.
fn is_irreducible(f: &[u16], p: u16) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    for t in 1..=deg / 2 {
        // All monic polynomials of degree t.
        let mut digits = vec![0u16; t];
        loop {
            let mut g = digits.clone();
            g.push(1);
            if is_zero_poly(&poly_rem(f, &g, p)) {
                return false;
            }
            let mut i = 0;
            let mut wrapped = true;
            while i < t {
                digits[i] += 1;
                if digits[i] < p {
                    wrapped = false;
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if wrapped {
                break;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible of degree m over Z_p,
/// comparing coefficient vectors (c_0, ..., c_{m-1}) with c_0 most
/// significant. Returned with degree-0 coefficient first, length m + 1.
fn smallest_irreducible(p: u16, m: u32) -> Vec<u16> {
    let m = m as usize;
    let mut coeffs = vec![0u16; m];
    loop {
        let mut f = coeffs.clone();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
        // Advance in lexicographic order: c_{m-1} moves fastest.
        let mut i = m;
        loop {
            assert!(i > 0, "no irreducible of degree {m} over Z_{p}");
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

/// Direct product of cyclic groups Z_{f_0} x ... x Z_{f_{k-1}}, written
/// additively. Elements are encoded in mixed radix with the first factor
/// most significant, matching the pairing used by the product construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<u16>,
    order: u16,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u16>) -> Result<Self> {
        if factors.is_empty() || factors.iter().any(|&f| f < 2) {
            return Err(Error::InvalidParameter(
                "group factors must all be at least 2".into(),
            ));
        }
        let order = factors
            .iter()
            .try_fold(1u32, |acc, &f| {
                let v = acc * f as u32;
                (v <= u16::MAX as u32).then_some(v)
            })
            .ok_or_else(|| Error::InvalidParameter("group order exceeds symbol range".into()))?;
        Ok(AbelianGroup {
            factors,
            order: order as u16,
        })
    }

    pub fn order(&self) -> u16 {
        self.order
    }

    pub fn factors(&self) -> &[u16] {
        &self.factors
    }

    pub fn encode(&self, components: &[u16]) -> Symbol {
        debug_assert_eq!(components.len(), self.factors.len());
        let mut v: u32 = 0;
        for (&c, &f) in components.iter().zip(&self.factors) {
            debug_assert!(c < f);
            v = v * f as u32 + c as u32;
        }
        v as Symbol
    }

    pub fn decode(&self, s: Symbol) -> Vec<u16> {
        let mut v = s as u32;
        let mut out = vec![0u16; self.factors.len()];
        for (slot, &f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (v % f as u32) as u16;
            v /= f as u32;
        }
        out
    }

    pub fn add(&self, a: Symbol, b: Symbol) -> Symbol {
        let da = self.decode(a);
        let db = self.decode(b);
        let sum: Vec<u16> = da
            .iter()
            .zip(&db)
            .zip(&self.factors)
            .map(|((&x, &y), &f)| (x + y) % f)
            .collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: Symbol) -> Symbol {
        let da = self.decode(a);
        let neg: Vec<u16> = da
            .iter()
            .zip(&self.factors)
            .map(|(&x, &f)| (f - x) % f)
            .collect();
        self.encode(&neg)
    }

    pub fn sub(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add(a, self.neg(b))
    }
}
