//! The explicit code families and transforms: simplex, even-weight,
//! Solomon-Stiffler, simplex complement, the extension that turns a code
//! satisfying the Ashikhmin-Barg condition into a minimal code violating it
//! (plus its self-orthogonal variant), the dual-BCH trace codes, and the
//! predicted extension weight distribution.
//!
//! Everything here is deterministic: column orders, codeword selections and
//! basis completions are pinned, so identical inputs give bit-identical
//! generator matrices across runs.

pub mod families;

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::codes::{LinearCode, WeightDistribution};
use crate::galois::{shared_field, Field};
use crate::linalg::Matrix;
use crate::{Error, Result};

/// All leading-coefficient-1 vectors of F_q^dim in ascending lexicographic
/// order (entry 0 compared first): one representative per projective point.
pub fn projective_points(field: &Arc<Field>, dim: usize) -> Vec<Vec<u16>> {
    let q = field.order() as u64;
    let count = ((q.pow(dim as u32) - 1) / (q - 1).max(1)) as usize;
    let mut pts = Vec::with_capacity(count);
    for lead in (0..dim).rev() {
        let free = dim - 1 - lead;
        let mut suffix = vec![0u16; free];
        loop {
            let mut v = vec![0u16; dim];
            v[lead] = 1;
            v[lead + 1..].copy_from_slice(&suffix);
            pts.push(v);
            // next suffix in lex order (entry 0 most significant)
            let Some(j) = (0..free).rev().find(|&j| suffix[j] + 1 < q as u16) else {
                break;
            };
            suffix[j] += 1;
            suffix[j + 1..].iter_mut().for_each(|d| *d = 0);
        }
    }
    pts
}

fn matrix_from_columns(field: Arc<Field>, dim: usize, cols: &[Vec<u16>]) -> Matrix {
    let mut m = Matrix::new(
        Arc::clone(&field),
        dim,
        cols.len(),
        vec![0; dim * cols.len()],
    );
    for (c, col) in cols.iter().enumerate() {
        for (r, &v) in col.iter().enumerate() {
            m.set(r, c, v);
        }
    }
    m
}

/// The q-ary simplex [(q^m - 1)/(q - 1), m, q^{m-1}] code: columns are all
/// projective points, in the deterministic order of [`projective_points`].
pub fn simplex(q: u64, m: usize) -> Result<LinearCode> {
    assert!(m >= 1, "simplex needs m >= 1");
    let field = shared_field(q)?;
    let cols = projective_points(&field, m);
    LinearCode::from_generator(matrix_from_columns(field, m, &cols))
}

/// The binary [n, n-1, 2] even-weight code with generator [I_{n-1} | 1].
/// Maximum weight n for even n, n - 1 for odd n.
pub fn even_weight_code(n: usize) -> Result<LinearCode> {
    if n < 3 {
        return Err(Error::LengthTooSmall { n });
    }
    let field = shared_field(2)?;
    let k = n - 1;
    let mut gen = Matrix::new(Arc::clone(&field), k, n, vec![0; k * n]);
    for i in 0..k {
        gen.set(i, i, 1);
        gen.set(i, n - 1, 1);
    }
    LinearCode::from_generator(gen)
}

/// Binary Solomon-Stiffler code: delete from the simplex(2, k) columns the
/// nonzero vectors of t mutually disjoint coordinate-block subspaces of
/// dimensions u_1 < ... < u_t (block i occupies coordinates starting at
/// u_1 + ... + u_{i-1}).
///
/// Parameters [2^k - 1 - sum(2^{u_i} - 1), k, 2^{k-1} - sum 2^{u_i - 1}],
/// meeting the Griesmer bound.
pub fn solomon_stiffler(k: usize, u: &[usize]) -> Result<LinearCode> {
    if u.is_empty() {
        return Err(Error::InvalidProfile("empty dimension profile".into()));
    }
    if u[0] < 1 {
        return Err(Error::InvalidProfile(format!("u_1 = {} < 1", u[0])));
    }
    if !u.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidProfile(format!(
            "profile {u:?} is not strictly increasing"
        )));
    }
    if u[u.len() - 1] >= k {
        return Err(Error::InvalidProfile(format!(
            "u_t = {} must be < k = {k}",
            u[u.len() - 1]
        )));
    }
    let total: usize = u.iter().sum();
    if total > k {
        return Err(Error::InvalidProfile(format!(
            "sum of profile {u:?} exceeds k = {k}"
        )));
    }
    let field = shared_field(2)?;
    let mut blocks = Vec::with_capacity(u.len());
    let mut off = 0usize;
    for &ui in u {
        blocks.push(off..off + ui);
        off += ui;
    }
    let cols: Vec<Vec<u16>> = projective_points(&field, k)
        .into_iter()
        .filter(|col| {
            !blocks.iter().any(|b| {
                col.iter()
                    .enumerate()
                    .all(|(i, &x)| x == 0 || b.contains(&i))
            })
        })
        .collect();
    LinearCode::from_generator(matrix_from_columns(field, k, &cols))
}

/// Simplex complement of a projective code.
#[derive(Debug)]
pub struct ComplementResult {
    pub code: LinearCode,
    /// The minimality threshold h > log_q(w_max) - k + 2, evaluated exactly
    /// as w_max < q^{k+h-2}. When it holds the complement is guaranteed
    /// minimal and Ashikhmin-Barg-satisfying.
    pub threshold_met: bool,
}

/// Normalize each column of C's generator to its leading-coefficient-1
/// representative, embed into F_q^{k+h} by appending h zero coordinates, and
/// delete the matching columns from simplex(q, k + h).
///
/// Yields a [(q^{k+h} - 1)/(q - 1) - n, k + h] code with minimum distance
/// q^{k+h-1} - w_max(C).
pub fn simplex_complement(code: &LinearCode, h: usize) -> Result<ComplementResult> {
    if !code.is_projective() {
        return Err(Error::NotProjective);
    }
    let q = code.q() as u64;
    let k = code.k();
    let kk = k + h;
    let n = code.n() as u128;
    let simplex_cols = ((q as u128).pow(kk as u32) - 1) / (q as u128 - 1);
    if n >= simplex_cols {
        return Err(Error::ConstraintViolated(format!(
            "complement needs n < (q^(k+h) - 1)/(q - 1) = {simplex_cols}, got n = {n}"
        )));
    }
    let field = code.field();
    let gen = code.generator();
    let mut embedded: BTreeSet<Vec<u16>> = BTreeSet::new();
    for c in 0..code.n() {
        let col = gen.column(c);
        let lead = col.iter().position(|&x| x != 0).expect("projective");
        let scale = field.inv(col[lead])?;
        let mut v: Vec<u16> = col.iter().map(|&x| field.mul(scale, x)).collect();
        v.resize(kk, 0);
        embedded.insert(v);
    }
    if embedded.len() != code.n() {
        return Err(Error::ColumnNotFound);
    }
    let mut removed = 0usize;
    let keep: Vec<Vec<u16>> = projective_points(field, kk)
        .into_iter()
        .filter(|col| {
            if embedded.contains(col) {
                removed += 1;
                false
            } else {
                true
            }
        })
        .collect();
    if removed != code.n() {
        return Err(Error::ColumnNotFound);
    }
    let out = LinearCode::from_generator_with_cap(
        matrix_from_columns(Arc::clone(field), kk, &keep),
        code.cap(),
    )?;
    let w_max = code.w_max()? as u128;
    let threshold_met = kk >= 2 && w_max < (q as u128).pow((kk - 2) as u32);
    Ok(ComplementResult {
        code: out,
        threshold_met,
    })
}

/// Output of the Ashikhmin-Barg-violating extension.
#[derive(Debug)]
pub struct ExtensionResult {
    /// The extended code C' of length n + n' + pad.
    pub code: LinearCode,
    /// Extension length ceil(q w_min / (q-1)) - w_max.
    pub n_prime: usize,
    /// Extra all-ones-row columns appended by the self-orthogonal variant.
    pub pad: usize,
    pub base_w_min: usize,
    pub base_w_max: usize,
    /// Weight distribution predicted from the base and subcode
    /// distributions; equals the measured distribution of `code`.
    pub predicted: WeightDistribution,
}

struct ExtensionCore {
    /// Rearranged basis codewords of the base code; row 0 has weight w_max,
    /// row 1 weight w_min.
    rows: Vec<Vec<u16>>,
    n_prime: usize,
    w_min: usize,
    w_max: usize,
    base_dist: WeightDistribution,
    sub_dist: WeightDistribution,
}

/// Deterministic basis selection for the extension.
///
/// Row 0 is the codeword of the lexicographically smallest message reaching
/// w_max. Rows 1..k span the hyperplane of codewords vanishing at i*, the
/// first support position of row 0 whose vanishing hyperplane contains a
/// min-weight codeword; row 1 is the lexicographically smallest such
/// min-weight codeword. (If no position qualifies, rows 1..k fall back to
/// the smallest non-proportional min-weight codeword plus a greedy
/// completion from the original generator rows.) The coordinate-section
/// choice is what makes the predicted distribution reproduce the published
/// tables for the trace-code families.
fn extension_core(code: &LinearCode) -> Result<ExtensionCore> {
    let k = code.k();
    if k < 2 {
        return Err(Error::DimensionTooSmall { k });
    }
    let q = code.q() as u64;
    let base_dist = code.weight_distribution()?.clone();
    let w_min = base_dist.w_min().expect("nonzero codeword");
    let w_max = base_dist.w_max().expect("nonzero codeword");
    if q * w_min as u64 <= (q - 1) * w_max as u64 {
        return Err(Error::AbConditionFails {
            q,
            w_min: w_min as u64,
            w_max: w_max as u64,
        });
    }
    let n_prime = (q as usize * w_min).div_ceil(q as usize - 1) - w_max;
    debug_assert!(n_prime >= 1);

    let field = code.field();
    let n = code.n();

    // one pass: r1 = first max-weight message; per-position flag of whether
    // some min-weight codeword vanishes there
    let mut r1_msg: Option<Vec<u16>> = None;
    let mut min_vanishes = vec![false; n];
    code.scan_codewords_lex(|msg, cw| {
        if msg.iter().all(|&x| x == 0) {
            return false;
        }
        let w = cw.iter().filter(|&&x| x != 0).count();
        if w == w_max && r1_msg.is_none() {
            r1_msg = Some(msg.to_vec());
        }
        if w == w_min {
            for (i, &x) in cw.iter().enumerate() {
                if x == 0 {
                    min_vanishes[i] = true;
                }
            }
        }
        false
    });
    let r1_msg = r1_msg.expect("w_max is attained");
    let r1 = code.codeword_of(&r1_msg);

    let istar = (0..n).find(|&i| r1[i] != 0 && min_vanishes[i]);

    // row 1 and the completion candidates, all in message space
    let (r2_msg, candidates) = match istar {
        Some(pos) => {
            let mut r2: Option<Vec<u16>> = None;
            code.scan_codewords_lex(|msg, cw| {
                if msg.iter().all(|&x| x == 0) {
                    return false;
                }
                let w = cw.iter().filter(|&&x| x != 0).count();
                if w == w_min && cw[pos] == 0 {
                    r2 = Some(msg.to_vec());
                    return true;
                }
                false
            });
            // deterministic basis of the message-space hyperplane
            // { mu : (mu G)[pos] = 0 }
            let g: Vec<u16> = (0..k).map(|j| code.generator().get(j, pos)).collect();
            let j0 = g.iter().position(|&x| x != 0).expect("r1[pos] != 0");
            let ratio_base = field.inv(g[j0])?;
            let mut cands = Vec::with_capacity(k - 1);
            for j in 0..k {
                if j == j0 {
                    continue;
                }
                let mut v = vec![0u16; k];
                v[j] = 1;
                v[j0] = field.neg(field.mul(g[j], ratio_base));
                cands.push(v);
            }
            (
                r2.expect("i* guarantees a vanishing min-weight word"),
                cands,
            )
        }
        None => {
            let mut r2: Option<Vec<u16>> = None;
            code.scan_codewords_lex(|msg, cw| {
                if msg.iter().all(|&x| x == 0) {
                    return false;
                }
                let w = cw.iter().filter(|&&x| x != 0).count();
                if w == w_min && !proportional(field, msg, &r1_msg) {
                    r2 = Some(msg.to_vec());
                    return true;
                }
                false
            });
            let cands = (0..k)
                .map(|j| {
                    let mut v = vec![0u16; k];
                    v[j] = 1;
                    v
                })
                .collect();
            (
                r2.expect("k >= 2 gives a non-proportional min-weight word"),
                cands,
            )
        }
    };

    // greedy completion to a basis, working in message space
    let mut elim = MessageElim::new(Arc::clone(field));
    let mut basis_msgs = vec![r1_msg.clone(), r2_msg.clone()];
    assert!(elim.insert(&r1_msg));
    assert!(elim.insert(&r2_msg));
    for cand in &candidates {
        if basis_msgs.len() == k {
            break;
        }
        if elim.insert(cand) {
            basis_msgs.push(cand.clone());
        }
    }
    assert_eq!(basis_msgs.len(), k, "basis completion failed");

    let rows: Vec<Vec<u16>> = basis_msgs.iter().map(|m| code.codeword_of(m)).collect();
    let sub = LinearCode::from_generator_with_cap(
        Matrix::from_rows(Arc::clone(field), &rows[1..]),
        code.cap(),
    )?;
    let sub_dist = sub.weight_distribution()?.clone();

    Ok(ExtensionCore {
        rows,
        n_prime,
        w_min,
        w_max,
        base_dist,
        sub_dist,
    })
}

fn proportional(field: &Arc<Field>, a: &[u16], b: &[u16]) -> bool {
    let pa: Vec<bool> = a.iter().map(|&x| x != 0).collect();
    let pb: Vec<bool> = b.iter().map(|&x| x != 0).collect();
    if pa != pb {
        return false;
    }
    let Some(i) = a.iter().position(|&x| x != 0) else {
        return true;
    };
    let lam = field.mul(a[i], field.inv(b[i]).expect("nonzero"));
    a.iter().zip(b).all(|(&x, &y)| x == field.mul(lam, y))
}

/// Incremental Gaussian elimination over message space.
struct MessageElim {
    field: Arc<Field>,
    reduced: Vec<Vec<u16>>,
    pivots: Vec<usize>,
}

impl MessageElim {
    fn new(field: Arc<Field>) -> MessageElim {
        MessageElim {
            field,
            reduced: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Insert a vector; false when it is dependent on the current span.
    fn insert(&mut self, v: &[u16]) -> bool {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.reduced.iter().zip(&self.pivots) {
            if v[p] != 0 {
                let factor = v[p];
                for (out, &r) in v.iter_mut().zip(row) {
                    *out = f.sub(*out, f.mul(factor, r));
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let scale = f.inv(v[p]).expect("nonzero");
        for out in v.iter_mut() {
            *out = f.mul(scale, *out);
        }
        self.reduced.push(v);
        self.pivots.push(p);
        true
    }
}

fn assemble_extension(
    field: &Arc<Field>,
    core: &ExtensionCore,
    values: &[u16],
    pad: usize,
) -> Matrix {
    let k = core.rows.len();
    let n = core.rows[0].len();
    let n_prime = core.n_prime;
    let total = n_prime + n + pad;
    let mut gen = Matrix::new(Arc::clone(field), k, total, vec![0; k * total]);
    for (c, &v) in values.iter().enumerate() {
        gen.set(0, c, v);
    }
    for (r, row) in core.rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            gen.set(r, n_prime + c, v);
        }
    }
    for c in 0..pad {
        gen.set(0, n_prime + n + c, 1);
    }
    gen
}

/// Weight-distribution transfer for the extension: it keeps the subcode
/// weights and shifts the remaining counts by the number of new nonzero
/// coordinates, merging additively on collision.
pub fn predict_extension_distribution(
    base: &WeightDistribution,
    sub: &WeightDistribution,
    shift: usize,
) -> Result<WeightDistribution> {
    let mut out = WeightDistribution::new();
    out.add(0, 1);
    for (&w, &count) in base.counts() {
        if w == 0 {
            continue;
        }
        let s = sub.count(w);
        if s > count {
            return Err(Error::InconsistentInputs(format!(
                "subcode has {s} codewords of weight {w}, base only {count}"
            )));
        }
        out.add(w, s);
        out.add(w + shift, count - s);
    }
    for (&w, &count) in sub.counts() {
        if w > 0 && count > base.count(w) {
            return Err(Error::InconsistentInputs(format!(
                "subcode weight {w} absent from base distribution"
            )));
        }
    }
    Ok(out)
}

/// Extend a code satisfying the Ashikhmin-Barg condition to a minimal code
/// violating it: n' new columns, nonzero only in the first row.
///
/// `values` supplies the n' first-row entries (all nonzero); default is all
/// ones. Only the count affects weights, not the values.
pub fn ab_violating_extend(code: &LinearCode, values: Option<&[u16]>) -> Result<ExtensionResult> {
    let core = extension_core(code)?;
    let field = code.field();
    let vals: Vec<u16> = match values {
        Some(v) => {
            if v.len() != core.n_prime {
                return Err(Error::BadValuesLength {
                    expected: core.n_prime,
                    got: v.len(),
                });
            }
            if let Some(i) = v.iter().position(|&x| x == 0) {
                return Err(Error::ZeroExtensionValue { index: i });
            }
            v.to_vec()
        }
        None => vec![1; core.n_prime],
    };
    let gen = assemble_extension(field, &core, &vals, 0);
    let out = LinearCode::from_generator_with_cap(gen, code.cap())?;
    let predicted = predict_extension_distribution(&core.base_dist, &core.sub_dist, core.n_prime)?;
    Ok(ExtensionResult {
        code: out,
        n_prime: core.n_prime,
        pad: 0,
        base_w_min: core.w_min,
        base_w_max: core.w_max,
        predicted,
    })
}

/// Self-orthogonal variant: run the extension with all-ones values, then
/// append up to q extra columns (value 1 in row 0 only) until the Gram
/// matrix vanishes.
///
/// Cross products are untouched by the padding, so only the first row's
/// self-product matters: pad makes n' + pad disappear mod char(q). The
/// extension still violates the Ashikhmin-Barg condition since padding only
/// raises w_max.
pub fn self_orthogonal_extend(code: &LinearCode) -> Result<ExtensionResult> {
    if !code.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    let core = extension_core(code)?;
    let field = code.field();
    let vals = vec![1u16; core.n_prime];
    let q = code.q() as usize;
    let mut pad = 0usize;
    loop {
        let gen = assemble_extension(field, &core, &vals, pad);
        if gen.gram().is_zero() {
            let out = LinearCode::from_generator_with_cap(gen, code.cap())?;
            let predicted = predict_extension_distribution(
                &core.base_dist,
                &core.sub_dist,
                core.n_prime + pad,
            )?;
            let q64 = q as u64;
            debug_assert!(
                q64 * core.w_min as u64 <= (q64 - 1) * (core.w_max + core.n_prime + pad) as u64
            );
            return Ok(ExtensionResult {
                code: out,
                n_prime: core.n_prime,
                pad,
                base_w_min: core.w_min,
                base_w_max: core.w_max,
                predicted,
            });
        }
        pad += 1;
        if pad > q {
            return Err(Error::PaddingExhausted);
        }
    }
}

/// Dual of the designed-distance-5 primitive BCH code of length 2^m - 1, in
/// trace form: rows Tr(e_j alpha^i) and Tr(e_j alpha^{3i}) for the
/// polynomial basis e_j of GF(2^m) and its canonical primitive element.
///
/// Dimension 2m (checked); for odd m the three nonzero weights are
/// 2^{m-1} and 2^{m-1} +- 2^{(m-1)/2}.
pub fn dual_bch_trace(m: usize) -> Result<LinearCode> {
    if m.is_multiple_of(2) || !(3..=9).contains(&m) {
        return Err(Error::UnsupportedDegree { m });
    }
    let f2m = shared_field(1u64 << m)?;
    let f2 = shared_field(2)?;
    let alpha = f2m.primitive_element();
    let alpha3 = f2m.mul(f2m.mul(alpha, alpha), alpha);
    let n = (1usize << m) - 1;
    let mut rows: Vec<Vec<u16>> = Vec::with_capacity(2 * m);
    for step in [alpha, alpha3] {
        for j in 0..m {
            let e = 1u16 << j;
            let mut row = Vec::with_capacity(n);
            let mut x = 1u16;
            for _ in 0..n {
                row.push(trace_to_gf2(&f2m, f2m.mul(e, x)));
                x = f2m.mul(x, step);
            }
            rows.push(row);
        }
    }
    LinearCode::from_generator(Matrix::from_rows(f2, &rows))
}

/// Absolute trace GF(2^m) -> GF(2).
fn trace_to_gf2(f: &Arc<Field>, x: u16) -> u16 {
    let mut t = 0u16;
    let mut y = x;
    for _ in 0..f.extension_degree() {
        t = f.add(t, y);
        y = f.mul(y, y);
    }
    debug_assert!(t <= 1);
    t
}
