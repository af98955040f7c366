//! Linear codes from generator matrices: exhaustive codeword enumeration,
//! weight distributions, projective representatives, projectivity and
//! self-orthogonality checks.
//!
//! The generator is stored verbatim, never canonicalized: the extension
//! transform and its predicted weight distribution depend on the specific
//! row choices. Everything that enumerates is gated by a per-code message
//! cap and fails with `EnumerationTooLarge` instead of sampling.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::galois::Field;
use crate::linalg::{weight_and_support, Matrix, SupportMask};
use crate::{Error, Result, DEFAULT_ENUM_CAP};

/// Map from weight to codeword count; counts[0] = 1, total = q^k.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeightDistribution {
    counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn new() -> WeightDistribution {
        WeightDistribution {
            counts: BTreeMap::new(),
        }
    }

    pub fn from_pairs(pairs: &[(usize, u64)]) -> WeightDistribution {
        let mut d = WeightDistribution::new();
        for &(w, c) in pairs {
            d.add(w, c);
        }
        d
    }

    pub fn add(&mut self, weight: usize, count: u64) {
        if count > 0 {
            *self.counts.entry(weight).or_insert(0) += count;
        }
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Minimum nonzero weight (the minimum distance for a linear code).
    pub fn w_min(&self) -> Option<usize> {
        self.counts
            .iter()
            .find(|(w, c)| **w > 0 && **c > 0)
            .map(|(w, _)| *w)
    }

    pub fn w_max(&self) -> Option<usize> {
        self.counts
            .iter()
            .rev()
            .find(|(_, c)| **c > 0)
            .map(|(w, _)| *w)
    }

    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.counts
            .iter()
            .filter(|(w, c)| **w > 0 && **c > 0)
            .map(|(w, _)| *w)
            .collect()
    }
}

impl fmt::Debug for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightDistribution {
    /// Weight enumerator polynomial, e.g. `1 + 28z^12 + 3z^16`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in &self.counts {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (w, c) {
                (0, 1) => write!(f, "1")?,
                (0, c) => write!(f, "{c}")?,
                (w, 1) => write!(f, "z^{w}")?,
                (w, c) => write!(f, "{c}z^{w}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// One representative per scalar class of nonzero codewords: the message
/// vector has leading coefficient 1.
#[derive(Clone, Debug)]
pub struct ProjectiveRep {
    pub message: Vec<u16>,
    pub codeword: Vec<u16>,
    pub mask: SupportMask,
}

/// A linear [n, k] code over GF(q), held as a full-rank generator matrix.
pub struct LinearCode {
    gen: Matrix,
    cap: u64,
    dist: OnceLock<WeightDistribution>,
}

impl LinearCode {
    pub fn from_generator(gen: Matrix) -> Result<LinearCode> {
        LinearCode::from_generator_with_cap(gen, DEFAULT_ENUM_CAP)
    }

    /// Validates rank(G) = rows(G) and stores G verbatim.
    pub fn from_generator_with_cap(gen: Matrix, cap: u64) -> Result<LinearCode> {
        let rank = gen.rank();
        if gen.rows() == 0 || rank < gen.rows() {
            return Err(Error::RankDeficient {
                rank,
                rows: gen.rows(),
            });
        }
        Ok(LinearCode {
            gen,
            cap,
            dist: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        self.gen.field()
    }

    pub fn q(&self) -> u16 {
        self.gen.field().order()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// q^k, the number of messages.
    pub fn message_count(&self) -> u128 {
        (self.q() as u128).pow(self.k() as u32)
    }

    fn ensure_enumerable(&self) -> Result<u64> {
        let messages = self.message_count();
        if messages > self.cap as u128 {
            return Err(Error::EnumerationTooLarge {
                messages,
                cap: self.cap,
            });
        }
        Ok(messages as u64)
    }

    /// msg . G
    pub fn codeword_of(&self, msg: &[u16]) -> Vec<u16> {
        assert_eq!(msg.len(), self.k());
        let f = self.field();
        let mut cw = vec![0u16; self.n()];
        for (i, &mu) in msg.iter().enumerate() {
            if mu != 0 {
                for (c, out) in cw.iter_mut().enumerate() {
                    *out = f.add(*out, f.mul(mu, self.gen.get(i, c)));
                }
            }
        }
        cw
    }

    /// All q^k (message, codeword) pairs in lexicographic message order.
    pub fn enumerate_codewords(&self) -> Result<CodewordIter<'_>> {
        self.ensure_enumerable()?;
        Ok(CodewordIter {
            code: self,
            od: Odometer::new(self.k(), self.n()),
        })
    }

    /// Visit all (message, codeword) pairs in lex order; stop early when the
    /// callback returns true.
    pub(crate) fn scan_codewords_lex(&self, mut f: impl FnMut(&[u16], &[u16]) -> bool) {
        let mut od = Odometer::new(self.k(), self.n());
        while od.advance(self) {
            if f(od.message(), od.codeword()) {
                break;
            }
        }
    }

    /// Exact weight distribution by full enumeration; cached.
    pub fn weight_distribution(&self) -> Result<&WeightDistribution> {
        if let Some(d) = self.dist.get() {
            return Ok(d);
        }
        self.ensure_enumerable()?;
        let d = if self.q() == 2 {
            self.distribution_gray()
        } else {
            let mut counts = vec![0u64; self.n() + 1];
            self.scan_codewords_lex(|_, cw| {
                counts[cw.iter().filter(|&&x| x != 0).count()] += 1;
                false
            });
            collect_counts(&counts)
        };
        let _ = self.dist.set(d);
        Ok(self.dist.get().expect("just set"))
    }

    /// Gray-code walk: one generator-row XOR per step.
    fn distribution_gray(&self) -> WeightDistribution {
        let k = self.k();
        let words = self.n().div_ceil(64);
        let rows: Vec<Vec<u64>> = (0..k)
            .map(|r| SupportMask::from_entries(self.gen.row(r)).words().to_vec())
            .collect();
        let mut state = vec![0u64; words];
        let mut counts = vec![0u64; self.n() + 1];
        counts[0] = 1;
        for i in 1u64..1 << k {
            let row = &rows[i.trailing_zeros() as usize];
            let mut w = 0u32;
            for (s, r) in state.iter_mut().zip(row) {
                *s ^= r;
                w += s.count_ones();
            }
            counts[w as usize] += 1;
        }
        collect_counts(&counts)
    }

    pub fn w_min(&self) -> Result<usize> {
        Ok(self
            .weight_distribution()?
            .w_min()
            .expect("k >= 1 code has a nonzero codeword"))
    }

    pub fn w_max(&self) -> Result<usize> {
        Ok(self
            .weight_distribution()?
            .w_max()
            .expect("k >= 1 code has a nonzero codeword"))
    }

    /// Number of projective representatives, (q^k - 1) / (q - 1).
    pub fn rep_count(&self) -> u128 {
        (self.message_count() - 1) / (self.q() as u128 - 1).max(1)
    }

    /// The message of the representative at `index` in the deterministic
    /// scan order: leading-coefficient-1 messages in lexicographic order.
    pub fn rep_message(&self, index: u64) -> Vec<u16> {
        rep_message(self.q(), self.k(), index)
    }

    /// One representative per scalar class, lexicographic message order.
    pub fn projective_representatives(&self) -> Result<Vec<ProjectiveRep>> {
        self.ensure_enumerable()?;
        let mut reps = Vec::with_capacity(self.rep_count() as usize);
        self.scan_representatives(|msg, cw| {
            let (_, mask) = weight_and_support(cw);
            reps.push(ProjectiveRep {
                message: msg.to_vec(),
                codeword: cw.to_vec(),
                mask,
            });
        });
        Ok(reps)
    }

    /// Visit representatives in order without materializing them.
    pub(crate) fn scan_representatives(&self, mut f: impl FnMut(&[u16], &[u16])) {
        let k = self.k();
        let n = self.n();
        let fld = self.field();
        let mut msg = vec![0u16; k];
        let mut combined = vec![0u16; n];
        for lead in (0..k).rev() {
            msg.iter_mut().for_each(|d| *d = 0);
            msg[lead] = 1;
            let base = self.gen.row(lead);
            if lead == k - 1 {
                f(&msg, base);
                continue;
            }
            let mut od = Odometer::new(k - 1 - lead, n);
            while od.advance_rows(self, lead + 1) {
                let suffix = od.message();
                msg[lead + 1..].copy_from_slice(suffix);
                let part = od.codeword();
                for i in 0..n {
                    combined[i] = fld.add(base[i], part[i]);
                }
                f(&msg, &combined);
            }
        }
    }

    /// true iff no zero column and no two columns are scalar multiples.
    pub fn is_projective(&self) -> bool {
        let f = self.field();
        let mut normalized: Vec<Vec<u16>> = Vec::with_capacity(self.n());
        for c in 0..self.n() {
            let col = self.gen.column(c);
            let Some(lead) = col.iter().position(|&x| x != 0) else {
                return false;
            };
            let scale = f.inv(col[lead]).expect("nonzero");
            normalized.push(col.iter().map(|&x| f.mul(scale, x)).collect());
        }
        normalized.sort();
        normalized.windows(2).all(|w| w[0] != w[1])
    }

    /// C ⊆ C^⊥ under the standard inner product, i.e. G G^T = 0.
    pub fn is_self_orthogonal(&self) -> bool {
        self.gen.gram().is_zero()
    }

    /// Binary only: every nonzero weight divisible by four.
    pub fn is_doubly_even(&self) -> Result<bool> {
        if self.q() != 2 {
            return Err(Error::WrongCharacteristic { q: self.q() as u64 });
        }
        Ok(self
            .weight_distribution()?
            .nonzero_weights()
            .iter()
            .all(|w| w % 4 == 0))
    }

    /// The (k-1)-dimensional code generated by G without the given row.
    pub fn row_removed_subcode(&self, row: usize) -> Result<LinearCode> {
        if self.k() < 2 {
            return Err(Error::DimensionTooSmall { k: self.k() });
        }
        assert!(row < self.k());
        let rows: Vec<Vec<u16>> = (0..self.k())
            .filter(|&r| r != row)
            .map(|r| self.gen.row(r).to_vec())
            .collect();
        LinearCode::from_generator_with_cap(
            Matrix::from_rows(Arc::clone(self.field()), &rows),
            self.cap,
        )
    }

    /// The message whose codeword is v, or None when v is not in the code.
    pub fn message_of(&self, v: &[u16]) -> Option<Vec<u16>> {
        if v.len() != self.n() {
            return None;
        }
        let f = self.field();
        let k = self.k();
        let n = self.n();
        // augmented elimination: rref([G | I]) = [R | T] with R = T G
        let mut aug = Matrix::new(Arc::clone(f), k, n + k, vec![0; k * (n + k)]);
        for r in 0..k {
            for c in 0..n {
                aug.set(r, c, self.gen.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let rref = aug.rref();
        // rank(G) = k, so all k pivots sit in the first n columns
        let mut lambda = vec![0u16; k];
        for (i, &p) in rref.pivot_cols.iter().enumerate() {
            debug_assert!(p < n);
            lambda[i] = v[p];
        }
        // candidate = lambda . R must equal v
        for (c, &want) in v.iter().enumerate() {
            let mut s = 0u16;
            for (i, &l) in lambda.iter().enumerate() {
                s = f.add(s, f.mul(l, rref.matrix.get(i, c)));
            }
            if s != want {
                return None;
            }
        }
        let mut msg = vec![0u16; k];
        for (c, out) in msg.iter_mut().enumerate() {
            let mut s = 0u16;
            for (i, &l) in lambda.iter().enumerate() {
                s = f.add(s, f.mul(l, rref.matrix.get(i, n + c)));
            }
            *out = s;
        }
        Some(msg)
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]_{} code", self.n(), self.k(), self.q())
    }
}

fn collect_counts(counts: &[u64]) -> WeightDistribution {
    let mut d = WeightDistribution::new();
    for (w, &c) in counts.iter().enumerate() {
        d.add(w, c);
    }
    d
}

pub(crate) fn rep_message(q: u16, k: usize, index: u64) -> Vec<u16> {
    let q64 = q as u64;
    let mut block = 0usize;
    let mut offset = 0u64;
    loop {
        let size = q64.pow(block as u32);
        if index < offset + size {
            let lead = k - 1 - block;
            let mut rem = index - offset;
            let mut msg = vec![0u16; k];
            msg[lead] = 1;
            for i in (0..block).rev() {
                msg[lead + 1 + i] = (rem % q64) as u16;
                rem /= q64;
            }
            return msg;
        }
        offset += size;
        block += 1;
        assert!(block < k + 1, "rep index out of range");
    }
}

/// Lexicographic message odometer with prefix partial sums: digit j changing
/// costs one row addition plus copies of the suffix partials.
struct Odometer {
    digits: Vec<u16>,
    partials: Vec<Vec<u16>>,
    fresh: bool,
    done: bool,
}

impl Odometer {
    fn new(k: usize, n: usize) -> Odometer {
        Odometer {
            digits: vec![0; k],
            partials: vec![vec![0; n]; k],
            fresh: true,
            done: false,
        }
    }

    fn advance(&mut self, code: &LinearCode) -> bool {
        self.advance_rows(code, 0)
    }

    /// Advance using generator rows row_offset..row_offset + digits.len().
    fn advance_rows(&mut self, code: &LinearCode, row_offset: usize) -> bool {
        if self.done {
            return false;
        }
        if self.fresh {
            self.fresh = false;
            return true;
        }
        let q = code.q();
        let f = code.field();
        let k = self.digits.len();
        let Some(j) = (0..k).rev().find(|&j| self.digits[j] < q - 1) else {
            self.done = true;
            return false;
        };
        self.digits[j] += 1;
        // the digit is an element code, not a multiplicity: rebuild the
        // prefix sum with the scaled row
        let lam = self.digits[j];
        let row = code.gen.row(row_offset + j);
        if j == 0 {
            for (out, &r) in self.partials[0].iter_mut().zip(row) {
                *out = f.mul(lam, r);
            }
        } else {
            let (before, after) = self.partials.split_at_mut(j);
            let prev = &before[j - 1];
            for ((out, &p), &r) in after[0].iter_mut().zip(prev).zip(row) {
                *out = f.add(p, f.mul(lam, r));
            }
        }
        for l in j + 1..k {
            self.digits[l] = 0;
            let (before, after) = self.partials.split_at_mut(l);
            after[0].copy_from_slice(&before[l - 1]);
        }
        true
    }

    fn message(&self) -> &[u16] {
        &self.digits
    }

    fn codeword(&self) -> &[u16] {
        self.partials.last().expect("k >= 1")
    }
}

/// Iterator over all (message, codeword) pairs in lexicographic message order.
pub struct CodewordIter<'a> {
    code: &'a LinearCode,
    od: Odometer,
}

impl Iterator for CodewordIter<'_> {
    type Item = (Vec<u16>, Vec<u16>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.od.advance(self.code) {
            Some((self.od.message().to_vec(), self.od.codeword().to_vec()))
        } else {
            None
        }
    }
}
