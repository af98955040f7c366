//! Verification: the minimality oracle, the Ashikhmin-Barg test, the
//! Griesmer bound, and the consolidated code report.
//!
//! Minimality is decided by brute force over projective representatives:
//! a nonzero codeword c is minimal iff every codeword whose support is
//! contained in supp(c) is a scalar multiple of c, and support containment
//! is scalar-invariant, so it suffices to test representative pairs with
//! bitmask inclusion. The all-pairs scan runs in lexicographic message
//! order, outer loop the covering word, and reports the first failing pair,
//! so witnesses are stable across runs.

use crate::codes::{LinearCode, WeightDistribution};
use crate::linalg::weight_and_support;
use crate::{Error, Result};

/// Exact Ashikhmin-Barg status: the unreduced ratio w_min/w_max and the
/// cross-multiplied comparison q * w_min > (q - 1) * w_max.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbStatus {
    pub w_min: u64,
    pub w_max: u64,
    pub satisfied: bool,
}

pub fn ab_status(code: &LinearCode) -> Result<AbStatus> {
    let w_min = code.w_min()? as u64;
    let w_max = code.w_max()? as u64;
    let q = code.q() as u64;
    Ok(AbStatus {
        w_min,
        w_max,
        satisfied: q * w_min > (q - 1) * w_max,
    })
}

/// Witness of non-minimality: supp(covered) ⊆ supp(covering) while the two
/// codewords are not scalar multiples of each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub covering: Vec<u16>,
    pub covered: Vec<u16>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Minimality {
    Minimal,
    NonMinimal(Witness),
}

impl Minimality {
    pub fn is_minimal(&self) -> bool {
        matches!(self, Minimality::Minimal)
    }
}

/// All-pairs minimality test over the (q^k - 1)/(q - 1) projective
/// representatives. Returns the first witness in scan order when the code is
/// not minimal.
pub fn is_minimal(code: &LinearCode) -> Result<Minimality> {
    let reps = code.rep_count();
    let words = code.n().div_ceil(64);
    if code.message_count() > code.cap() as u128 {
        return Err(Error::EnumerationTooLarge {
            messages: code.message_count(),
            cap: code.cap(),
        });
    }
    let reps = reps as usize;
    let mut masks = vec![0u64; reps * words];
    let mut weights = vec![0u32; reps];
    let mut idx = 0usize;
    code.scan_representatives(|_, cw| {
        let (w, mask) = weight_and_support(cw);
        masks[idx * words..(idx + 1) * words].copy_from_slice(mask.words());
        weights[idx] = w as u32;
        idx += 1;
    });
    debug_assert_eq!(idx, reps);

    for i in 0..reps {
        let wi = weights[i];
        let mi = &masks[i * words..(i + 1) * words];
        for j in 0..reps {
            if j == i || weights[j] > wi {
                continue;
            }
            let mj = &masks[j * words..(j + 1) * words];
            if subset(mj, mi) {
                let covering = code.codeword_of(&code.rep_message(i as u64));
                let covered = code.codeword_of(&code.rep_message(j as u64));
                return Ok(Minimality::NonMinimal(Witness { covering, covered }));
            }
        }
    }
    Ok(Minimality::Minimal)
}

#[inline]
fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// true iff every codeword with support inside supp(c) is a scalar multiple
/// of c.
pub fn is_minimal_codeword(code: &LinearCode, c: &[u16]) -> Result<bool> {
    if c.iter().all(|&x| x == 0) {
        return Err(Error::ZeroCodeword);
    }
    let Some(msg) = code.message_of(c) else {
        return Err(Error::NotACodeword);
    };
    // normalize the message to its leading-coefficient-1 representative
    let f = code.field();
    let lead = msg.iter().find(|&&x| x != 0).copied().expect("nonzero");
    let scale = f.inv(lead)?;
    let class_msg: Vec<u16> = msg.iter().map(|&x| f.mul(scale, x)).collect();

    let (_, mask_c) = weight_and_support(c);
    if code.message_count() > code.cap() as u128 {
        return Err(Error::EnumerationTooLarge {
            messages: code.message_count(),
            cap: code.cap(),
        });
    }
    let mut minimal = true;
    code.scan_representatives(|m, cw| {
        if !minimal || m == class_msg.as_slice() {
            return;
        }
        let (_, mask) = weight_and_support(cw);
        if mask.is_subset_of(&mask_c) {
            minimal = false;
        }
    });
    Ok(minimal)
}

/// Griesmer bound g_q(k, d) = sum_{i=0}^{k-1} ceil(d / q^i).
pub fn griesmer(q: u64, k: usize, d: u64) -> u64 {
    let mut total = 0u64;
    let mut qi = 1u64;
    for i in 0..k {
        total += d.div_ceil(qi);
        if qi >= d {
            // every remaining term is 1
            total += (k - i - 1) as u64;
            break;
        }
        qi = qi.saturating_mul(q);
    }
    total
}

/// n - g_q(k, d); zero exactly for Griesmer codes.
pub fn griesmer_defect(code: &LinearCode) -> Result<u64> {
    let d = code.w_min()? as u64;
    let g = griesmer(code.q() as u64, code.k(), d);
    Ok(code.n() as u64 - g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalityVerdict {
    Minimal,
    NonMinimal(Witness),
    Skipped,
}

impl MinimalityVerdict {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            MinimalityVerdict::Minimal => Some(true),
            MinimalityVerdict::NonMinimal(_) => Some(false),
            MinimalityVerdict::Skipped => None,
        }
    }
}

/// The full verification verdict for one code.
#[derive(Clone, Debug)]
pub struct CodeReport {
    pub q: u16,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub w_max: usize,
    pub distribution: WeightDistribution,
    /// Unreduced exact ratio (w_min, w_max).
    pub ab_ratio: (u64, u64),
    pub ab_satisfied: bool,
    pub minimality: MinimalityVerdict,
    pub projective: bool,
    pub self_orthogonal: bool,
    /// None for q != 2.
    pub doubly_even: Option<bool>,
    pub griesmer_length: u64,
    pub griesmer_defect: u64,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    pub skip_minimality: bool,
    /// Skip the all-pairs minimality scan when q^k exceeds this; defaults to
    /// the code's enumeration cap.
    pub minimality_cap: Option<u64>,
}

/// Fill every report field; minimality is marked skipped above the cap or on
/// request, never extrapolated.
pub fn analyze(code: &LinearCode, opts: AnalyzeOptions) -> Result<CodeReport> {
    let distribution = code.weight_distribution()?.clone();
    let d = distribution.w_min().expect("nonzero codeword exists");
    let w_max = distribution.w_max().expect("nonzero codeword exists");
    let ab = ab_status(code)?;
    let min_cap = opts.minimality_cap.unwrap_or(code.cap());
    let minimality = if opts.skip_minimality || code.message_count() > min_cap as u128 {
        MinimalityVerdict::Skipped
    } else {
        match is_minimal(code)? {
            Minimality::Minimal => MinimalityVerdict::Minimal,
            Minimality::NonMinimal(w) => MinimalityVerdict::NonMinimal(w),
        }
    };
    let doubly_even = if code.q() == 2 {
        Some(code.is_doubly_even()?)
    } else {
        None
    };
    let g = griesmer(code.q() as u64, code.k(), d as u64);
    Ok(CodeReport {
        q: code.q(),
        n: code.n(),
        k: code.k(),
        d,
        w_max,
        distribution,
        ab_ratio: (ab.w_min, ab.w_max),
        ab_satisfied: ab.satisfied,
        minimality,
        projective: code.is_projective(),
        self_orthogonal: code.is_self_orthogonal(),
        doubly_even,
        griesmer_length: g,
        griesmer_defect: code.n() as u64 - g,
    })
}
