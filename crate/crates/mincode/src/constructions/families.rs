//! Closed-form parameter calculators for the named code families: predicted
//! [n, k, d]_q, maximum weight and extension length of the final
//! Ashikhmin-Barg-violating code, plus full predicted weight distributions
//! where the family has one.
//!
//! These are pure arithmetic; the pipeline constructions are verified
//! against them where a built-in construction exists.

use crate::codes::WeightDistribution;
use crate::{Error, Result};

/// Named arguments for [`family_parameters`]; families read the fields they
/// need and reject missing or out-of-range values.
#[derive(Clone, Debug, Default)]
pub struct FamilyParams {
    pub q: Option<u64>,
    pub m: Option<u64>,
    pub k: Option<u64>,
    pub h: Option<u64>,
    pub t: Option<u64>,
    pub l: Option<u64>,
    pub n: Option<u64>,
    pub n1: Option<u64>,
    pub u: Vec<u64>,
}

/// Predicted parameters of a family's final code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedParams {
    pub family: String,
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub w_max: u64,
    pub n_prime: u64,
    pub distribution: Option<WeightDistribution>,
    pub minimality_condition: Option<String>,
}

fn need(v: Option<u64>, name: &str, family: &str) -> Result<u64> {
    v.ok_or_else(|| Error::ConstraintViolated(format!("{family} needs parameter {name}")))
}

fn check(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ConstraintViolated(msg.to_string()))
    }
}

fn pow2(e: u64) -> u64 {
    1u64 << e
}

/// Solomon-Stiffler profile sums; shared by P4.1 and P5.0.
fn ss_extension(family: &str, k: u64, u: &[u64], min_u: u64) -> Result<ExpectedParams> {
    check(!u.is_empty(), &format!("{family} needs at least one u_i"))?;
    check(
        u.windows(2).all(|w| w[0] < w[1]),
        &format!("{family}: u must be strictly increasing"),
    )?;
    check(u[0] >= min_u, &format!("{family}: u_1 must be >= {min_u}"))?;
    check(
        u[u.len() - 1] < k.saturating_sub(1),
        &format!("{family}: u_t must be < k - 1"),
    )?;
    let sum_u: u64 = u.iter().sum();
    check(sum_u < k, &format!("{family}: sum of u must be < k"))?;
    check(k < 63, &format!("{family}: k out of range"))?;
    let t = u.len() as u64;
    let del_n: u64 = u.iter().map(|&ui| pow2(ui) - 1).sum();
    let del_d: u64 = u.iter().map(|&ui| pow2(ui - 1)).sum();
    let base_n = pow2(k) - 1 - del_n;
    let d = pow2(k - 1) - del_d;
    let n_prime = pow2(k - 1) - u.iter().map(|&ui| pow2(ui)).sum::<u64>();
    let n = base_n + n_prime;
    debug_assert_eq!(
        n,
        pow2(k) + pow2(k - 1) + t - 1 - u.iter().map(|&ui| pow2(ui + 1)).sum::<u64>()
    );
    Ok(ExpectedParams {
        family: family.to_string(),
        n,
        k,
        d,
        w_max: pow2(k) - u.iter().map(|&ui| pow2(ui)).sum::<u64>(),
        n_prime,
        distribution: None,
        minimality_condition: None,
    })
}

/// Evaluate the closed-form parameters of a named family.
///
/// Families: P4.1..P4.5, P4.7..P4.11, P5.0..P5.4, P6.1, P6.2, C6.1.
pub fn family_parameters(family: &str, params: &FamilyParams) -> Result<ExpectedParams> {
    match family {
        "P4.1" => {
            let k = need(params.k, "k", family)?;
            ss_extension(family, k, &params.u, 1)
        }
        "P4.2" => {
            let m = need(params.m, "m", family)?;
            check(m >= 2, "P4.2 needs m >= 2")?;
            check(m <= 20, "P4.2: m out of range")?;
            let n_prime = pow2(2 * m - 1) - pow2(m) - pow2(m - 1);
            Ok(ExpectedParams {
                family: family.into(),
                n: pow2(2 * m) - 1 + n_prime,
                k: 3 * m,
                d: pow2(2 * m - 1) - pow2(m - 1),
                w_max: pow2(2 * m) - pow2(m),
                n_prime,
                distribution: None,
                minimality_condition: None,
            })
        }
        "P4.3" => {
            let m = need(params.m, "m", family)?;
            let h = need(params.h, "h", family)?;
            check(m >= 2 && h >= 1, "P4.3 needs m >= 2 and h >= 1")?;
            check(3 * m + h <= 40, "P4.3: parameters out of range")?;
            let n_prime = pow2(3 * m + h - 1) - pow2(2 * m) - pow2(m);
            Ok(ExpectedParams {
                family: family.into(),
                n: pow2(3 * m + h) - pow2(2 * m) + n_prime,
                k: 3 * m + h,
                d: pow2(3 * m + h - 1) - pow2(2 * m - 1) - pow2(m - 1),
                w_max: pow2(3 * m + h) - pow2(2 * m) - pow2(m),
                n_prime,
                distribution: None,
                minimality_condition: None,
            })
        }
        "P4.4" => {
            let m = need(params.m, "m", family)?;
            let l = need(params.l, "l", family)?;
            check(
                l >= 1 && m % l == 0 && (m / l) % 2 == 1,
                "P4.4 needs m/l odd",
            )?;
            check((4..=40).contains(&m), "P4.4: m out of range")?;
            let s = (m + l - 4) / 2;
            check((m + l) % 2 == 0, "P4.4: m + l must be even")?;
            check(pow2(m - 2) > 3 * pow2(s), "P4.4: n' must be positive")?;
            let n_prime = pow2(m - 2) - 3 * pow2(s);
            Ok(ExpectedParams {
                family: family.into(),
                n: pow2(m - 1) - 1 + n_prime,
                k: m,
                d: pow2(m - 2) - pow2(s),
                w_max: pow2(m - 1) - pow2((m + l - 2) / 2),
                n_prime,
                distribution: None,
                minimality_condition: None,
            })
        }
        "P4.5" => {
            let m = need(params.m, "m", family)?;
            let h = need(params.h, "h", family)?;
            check(
                m >= 5 && m % 2 == 1 && h >= 1,
                "P4.5 needs odd m >= 5 and h >= 1",
            )?;
            check(m + h <= 40, "P4.5: parameters out of range")?;
            let n_prime = pow2(m + h - 2) - pow2(m - 2) - pow2((m - 1) / 2);
            Ok(ExpectedParams {
                family: family.into(),
                n: pow2(m + h - 1) - pow2(m - 2) - 1 + n_prime,
                k: m + h - 1,
                d: pow2(m + h - 2) - pow2(m - 3) - pow2((m - 3) / 2),
                w_max: pow2(m + h - 1) - pow2(m - 2) - pow2((m - 1) / 2),
                n_prime,
                distribution: None,
                minimality_condition: None,
            })
        }
        "P4.7" => {
            let m = need(params.m, "m", family)?;
            let h = need(params.h, "h", family)?;
            check(m >= 3 && h >= 1, "P4.7 needs m >= 3 and h >= 1")?;
            check(2 * m + h <= 40, "P4.7: parameters out of range")?;
            let n_prime = pow2(2 * m + h - 3) - pow2(2 * m - 3) - pow2(m - 1);
            Ok(ExpectedParams {
                family: family.into(),
                n: pow2(2 * m + h - 2) - pow2(2 * m - 3) - pow2(m - 2) + n_prime,
                k: 2 * m + h - 2,
                d: pow2(2 * m + h - 3) - pow2(2 * m - 4) - pow2(m - 2),
                w_max: pow2(2 * m + h - 2) - pow2(2 * m - 3) - pow2(m - 1),
                n_prime,
                distribution: None,
                minimality_condition: None,
            })
        }
        "P4.8" => {
            let m = need(params.m, "m", family)?;
            let n1 = need(params.n1, "n1", family)?;
            check(m >= 3 && m % 2 == 1 && m <= 40, "P4.8 needs odd m >= 3")?;
            let s = pow2((m - 1) / 2);
            check(
                n1 == pow2(m - 1) || n1 == pow2(m - 1) + s,
                "P4.8: n1 must be 2^{m-1} or 2^{m-1} + 2^{(m-1)/2}",
            )?;
            check(n1 > 3 * s, "P4.8: n' must be positive")?;
            let n_prime = (n1 - 3 * s) / 2;
            Ok(ExpectedParams {
                family: family.into(),
                n: 3 * (n1 - s) / 2,
                k: m,
                d: (n1 - s) / 2,
                w_max: n1 - s,
                n_prime,
                distribution: None,
                minimality_condition: None,
            })
        }
        "P4.9" => {
            let m = need(params.m, "m", family)?;
            let n1 = need(params.n1, "n1", family)?;
            let t = need(params.t, "t", family)?;
            check(
                m >= 3 && m % 2 == 1 && t >= 1,
                "P4.9 needs odd m >= 3 and t >= 1",
            )?;
            check(m + t <= 40, "P4.9: parameters out of range")?;
            let s = pow2((m - 1) / 2);
            check(
                n1 == pow2(m - 1) || n1 == pow2(m - 1) + s,
                "P4.9: n1 must be 2^{m-1} or 2^{m-1} + 2^{(m-1)/2}",
            )?;
            let kk = m + t;
            check(pow2(kk - 1) > n1 + s, "P4.9: n' must be positive")?;
            let n_prime = pow2(kk - 1) - n1 - s;
            Ok(ExpectedParams {
                family: family.into(),
                n: 3 * pow2(kk - 1) - 2 * n1 - s - 1,
                k: kk,
                d: pow2(kk - 1) - (n1 + s) / 2,
                w_max: pow2(kk) - n1 - s,
                n_prime,
                distribution: None,
                minimality_condition: None,
            })
        }
        "P4.10" => {
            let q = need(params.q, "q", family)?;
            let m = need(params.m, "m", family)?;
            check(
                q >= 3 && q % 2 == 1 && is_prime(q),
                "P4.10 needs an odd prime q",
            )?;
            check(m >= 3 && m % 2 == 1, "P4.10 needs odd m >= 3")?;
            check(
                q.checked_pow(m as u32).is_some() && q.pow(m as u32) < u64::MAX / 4,
                "P4.10: parameters out of range",
            )?;
            let e = q.pow((m - 1) as u32);
            let f = q.pow((m - 2) as u32);
            let g = q.pow(((m - 3) / 2) as u32);
            let d = e - f - g;
            let base_w_max = e - f + g;
            let n_prime = (q * d).div_ceil(q - 1) - base_w_max;
            check(n_prime >= 1, "P4.10: n' must be positive")?;
            Ok(ExpectedParams {
                family: family.into(),
                n: e + n_prime,
                k: m,
                d,
                w_max: base_w_max + n_prime,
                n_prime,
                distribution: None,
                minimality_condition: None,
            })
        }
        "P4.11" => {
            let n0 = need(params.n, "n", family)?;
            let h = need(params.h, "h", family)?;
            check(n0 >= 3, "P4.11 needs n >= 3")?;
            check(n0 + h <= 40, "P4.11: parameters out of range")?;
            let kk = n0 + h - 1;
            check(
                kk >= 2 && n0 < pow2(kk - 1),
                "P4.11: complement needs n < 2^{n+h-2}",
            )?;
            let w0max = if n0 % 2 == 0 { n0 } else { n0 - 1 };
            let mid_len = pow2(kk) - n0 - 1;
            let d = pow2(kk - 1) - w0max;
            // the complement's maximum weight is 2^{k+h-2} only when h >= 1;
            // at h = 0 no message vanishes on all original coordinates and
            // the maximum drops to 2^{k+h-2} - 2
            let mid_wmax = if h >= 1 {
                pow2(kk - 1)
            } else {
                pow2(kk - 1) - 2
            };
            check(
                2 * d > mid_wmax,
                "P4.11: complement must satisfy the Ashikhmin-Barg condition",
            )?;
            let n_prime = 2 * d - mid_wmax;
            let threshold = kk >= 2 && w0max < pow2(kk - 2);
            let parity = if n0 % 2 == 0 {
                "log2(n) - n + 3"
            } else {
                "log2(n-1) - n + 3"
            };
            Ok(ExpectedParams {
                family: family.into(),
                n: mid_len + n_prime,
                k: kk,
                d,
                w_max: mid_wmax + n_prime,
                n_prime,
                distribution: None,
                minimality_condition: Some(format!(
                    "h > {parity}: {}",
                    if threshold {
                        "satisfied"
                    } else {
                        "not satisfied"
                    }
                )),
            })
        }
        "P5.0" => {
            let k = need(params.k, "k", family)?;
            check(k >= 5, "P5.0 needs k >= 5")?;
            ss_extension(family, k, &params.u, 3)
        }
        "P5.1" => {
            let m = need(params.m, "m", family)?;
            check((3..=40).contains(&m), "P5.1 needs m >= 3")?;
            let d = pow2(m - 1);
            let mut dist = WeightDistribution::new();
            dist.add(0, 1);
            dist.add(d as usize, d - 1);
            dist.add(pow2(m) as usize, d);
            Ok(ExpectedParams {
                family: family.into(),
                n: 3 * pow2(m - 1) - 1,
                k: m,
                d,
                w_max: pow2(m),
                n_prime: pow2(m - 1),
                distribution: Some(dist),
                minimality_condition: None,
            })
        }
        "P5.2" => {
            let m = need(params.m, "m", family)?;
            check((3..=20).contains(&m), "P5.2 needs m >= 3")?;
            Ok(ExpectedParams {
                family: family.into(),
                n: 3 * pow2(2 * m - 3) - 1,
                k: 2 * m - 1,
                d: pow2(2 * m - 3),
                w_max: pow2(2 * m - 2),
                n_prime: pow2(2 * m - 3) - pow2(m - 1),
                distribution: None,
                minimality_condition: Some(format!(
                    "self-orthogonal for m >= 4: {}",
                    if m >= 4 { "satisfied" } else { "not satisfied" }
                )),
            })
        }
        "P5.4" => {
            let m = need(params.m, "m", family)?;
            check((3..=20).contains(&m), "P5.4 needs m >= 3")?;
            Ok(ExpectedParams {
                family: family.into(),
                n: 3 * pow2(2 * m - 4) - 1,
                k: 2 * m - 2,
                d: pow2(2 * m - 4),
                w_max: pow2(2 * m - 3),
                n_prime: pow2(2 * m - 4) - pow2(m - 2),
                distribution: None,
                minimality_condition: Some(format!(
                    "self-orthogonal for m >= 4: {}",
                    if m >= 4 { "satisfied" } else { "not satisfied" }
                )),
            })
        }
        "P6.1" => {
            let q = need(params.q, "q", family)?;
            let m = need(params.m, "m", family)?;
            check(is_prime_power(q), "P6.1 needs a prime power q")?;
            check(m >= 2, "P6.1 needs m >= 2")?;
            check(
                q.checked_pow(m as u32).is_some(),
                "P6.1: parameters out of range",
            )?;
            let d = q.pow((m - 1) as u32);
            let n_prime = d.div_ceil(q - 1);
            let mut dist = WeightDistribution::new();
            dist.add(0, 1);
            dist.add(d as usize, d - 1);
            dist.add((d + n_prime) as usize, (q - 1) * d);
            Ok(ExpectedParams {
                family: family.into(),
                n: (q.pow(m as u32) - 1) / (q - 1) + n_prime,
                k: m,
                d,
                w_max: d + n_prime,
                n_prime,
                distribution: Some(dist),
                minimality_condition: None,
            })
        }
        "P6.2" => {
            let m = need(params.m, "m", family)?;
            check(m >= 5 && m % 2 == 1 && m <= 31, "P6.2 needs odd m >= 5")?;
            let big = pow2(m - 1);
            let s = pow2((m - 1) / 2);
            let half = pow2(m - 2);
            let hs = pow2((m - 3) / 2);
            let n_prime = big - 3 * s;
            let d = big - s;
            // unshifted rows are the subcode counts, shifted rows the rest;
            // weights may collide (they do at m = 5) and merge additively
            let mut dist = WeightDistribution::new();
            dist.add(0, 1);
            dist.add((big - s) as usize, (big + s - 1) * (half + hs));
            dist.add(big as usize, (big - 1) * (big + 1));
            dist.add((big + s) as usize, (big - s - 1) * (half - hs));
            dist.add((big - s + n_prime) as usize, (big - s) * (half + hs));
            dist.add((big + n_prime) as usize, big * (big + 1));
            dist.add((big + s + n_prime) as usize, (big + s) * (half - hs));
            Ok(ExpectedParams {
                family: family.into(),
                n: pow2(m) + n_prime - 1,
                k: 2 * m,
                d,
                w_max: big + s + n_prime,
                n_prime,
                distribution: Some(dist),
                minimality_condition: None,
            })
        }
        "C6.1" => {
            let m = need(params.m, "m", family)?;
            check((2..=30).contains(&m), "C6.1 needs m >= 2")?;
            let d = 3u64.pow((m - 1) as u32);
            let n_prime = d.div_ceil(2) + 1;
            let mut dist = WeightDistribution::new();
            dist.add(0, 1);
            dist.add(d as usize, d - 1);
            dist.add((d + n_prime) as usize, 2 * d);
            Ok(ExpectedParams {
                family: family.into(),
                n: (3u64.pow(m as u32) - 1) / 2 + n_prime,
                k: m,
                d,
                w_max: d + n_prime,
                n_prime,
                distribution: Some(dist),
                minimality_condition: None,
            })
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut t = n;
            while t.is_multiple_of(p) {
                t /= p;
            }
            return t == 1;
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp() -> FamilyParams {
        FamilyParams::default()
    }

    fn expect(family: &str, p: FamilyParams, n: u64, k: u64, d: u64, w_max: u64, n_prime: u64) {
        let e = family_parameters(family, &p).unwrap();
        assert_eq!(
            (e.n, e.k, e.d, e.w_max, e.n_prime),
            (n, k, d, w_max, n_prime),
            "{family} {p:?}"
        );
    }

    #[test]
    fn p4_1_examples() {
        expect(
            "P4.1",
            FamilyParams {
                k: Some(4),
                u: vec![1, 2],
                ..fp()
            },
            13,
            4,
            5,
            10,
            2,
        );
        expect(
            "P4.1",
            FamilyParams {
                k: Some(5),
                u: vec![1, 3],
                ..fp()
            },
            29,
            5,
            11,
            22,
            6,
        );
        expect(
            "P4.1",
            FamilyParams {
                k: Some(5),
                u: vec![3],
                ..fp()
            },
            32,
            5,
            12,
            24,
            8,
        );
        expect(
            "P4.1",
            FamilyParams {
                k: Some(7),
                u: vec![2, 4],
                ..fp()
            },
            153,
            7,
            54,
            108,
            44,
        );
        assert!(family_parameters(
            "P4.1",
            &FamilyParams {
                k: Some(4),
                u: vec![3],
                ..fp()
            }
        )
        .is_err());
        assert!(family_parameters(
            "P4.1",
            &FamilyParams {
                k: Some(4),
                u: vec![2, 1],
                ..fp()
            }
        )
        .is_err());
    }

    #[test]
    fn p4_2_to_p4_5_examples() {
        expect("P4.2", FamilyParams { m: Some(2), ..fp() }, 17, 6, 6, 12, 2);
        expect(
            "P4.3",
            FamilyParams {
                m: Some(2),
                h: Some(1),
                ..fp()
            },
            156,
            7,
            54,
            108,
            44,
        );
        expect(
            "P4.4",
            FamilyParams {
                m: Some(5),
                l: Some(1),
                ..fp()
            },
            17,
            5,
            6,
            12,
            2,
        );
        expect(
            "P4.4",
            FamilyParams {
                m: Some(6),
                l: Some(2),
                ..fp()
            },
            35,
            6,
            12,
            24,
            4,
        );
        expect(
            "P4.5",
            FamilyParams {
                m: Some(5),
                h: Some(1),
                ..fp()
            },
            27,
            5,
            10,
            20,
            4,
        );
    }

    #[test]
    fn p4_7_to_p4_10_examples() {
        expect(
            "P4.7",
            FamilyParams {
                m: Some(3),
                h: Some(1),
                ..fp()
            },
            26,
            5,
            10,
            20,
            4,
        );
        expect(
            "P4.8",
            FamilyParams {
                m: Some(5),
                n1: Some(16),
                ..fp()
            },
            18,
            5,
            6,
            12,
            2,
        );
        expect(
            "P4.8",
            FamilyParams {
                m: Some(5),
                n1: Some(20),
                ..fp()
            },
            24,
            5,
            8,
            16,
            4,
        );
        expect(
            "P4.9",
            FamilyParams {
                m: Some(3),
                n1: Some(4),
                t: Some(1),
                ..fp()
            },
            13,
            4,
            5,
            10,
            2,
        );
        expect(
            "P4.9",
            FamilyParams {
                m: Some(3),
                n1: Some(4),
                t: Some(2),
                ..fp()
            },
            37,
            5,
            13,
            26,
            10,
        );
        expect(
            "P4.10",
            FamilyParams {
                q: Some(3),
                m: Some(3),
                ..fp()
            },
            10,
            3,
            5,
            8,
            1,
        );
        expect(
            "P4.10",
            FamilyParams {
                q: Some(5),
                m: Some(3),
                ..fp()
            },
            28,
            3,
            19,
            24,
            3,
        );
    }

    #[test]
    fn p4_11_examples() {
        expect(
            "P4.11",
            FamilyParams {
                n: Some(4),
                h: Some(2),
                ..fp()
            },
            35,
            5,
            12,
            24,
            8,
        );
        expect(
            "P4.11",
            FamilyParams {
                n: Some(5),
                h: Some(1),
                ..fp()
            },
            34,
            5,
            12,
            24,
            8,
        );
        // h = 0 uses the corrected complement maximum weight
        expect(
            "P4.11",
            FamilyParams {
                n: Some(6),
                h: Some(0),
                ..fp()
            },
            31,
            5,
            10,
            20,
            6,
        );
        let e = family_parameters(
            "P4.11",
            &FamilyParams {
                n: Some(4),
                h: Some(2),
                ..fp()
            },
        )
        .unwrap();
        assert!(e.minimality_condition.unwrap().contains("satisfied"));
        // n = 4, h = 0 would delete enough columns to drop the dimension
        assert!(family_parameters(
            "P4.11",
            &FamilyParams {
                n: Some(4),
                h: Some(0),
                ..fp()
            }
        )
        .is_err());
    }

    #[test]
    fn p5_family_examples() {
        expect(
            "P5.0",
            FamilyParams {
                k: Some(5),
                u: vec![3],
                ..fp()
            },
            32,
            5,
            12,
            24,
            8,
        );
        assert!(family_parameters(
            "P5.0",
            &FamilyParams {
                k: Some(5),
                u: vec![2],
                ..fp()
            }
        )
        .is_err());
        assert!(family_parameters(
            "P5.0",
            &FamilyParams {
                k: Some(5),
                u: vec![4],
                ..fp()
            }
        )
        .is_err());

        let e = family_parameters("P5.1", &FamilyParams { m: Some(3), ..fp() }).unwrap();
        assert_eq!((e.n, e.k, e.d, e.w_max, e.n_prime), (11, 3, 4, 8, 4));
        assert_eq!(
            e.distribution.unwrap(),
            WeightDistribution::from_pairs(&[(0, 1), (4, 3), (8, 4)])
        );

        expect("P5.2", FamilyParams { m: Some(3), ..fp() }, 23, 5, 8, 16, 4);
        expect(
            "P5.2",
            FamilyParams { m: Some(4), ..fp() },
            95,
            7,
            32,
            64,
            24,
        );
        expect("P5.4", FamilyParams { m: Some(3), ..fp() }, 11, 4, 4, 8, 2);
        expect(
            "P5.4",
            FamilyParams { m: Some(4), ..fp() },
            47,
            6,
            16,
            32,
            12,
        );
    }

    #[test]
    fn p6_1_table() {
        // the published distribution table: A_{q^{m-1}} = q^{m-1} - 1 and
        // A_{q^{m-1}+n'} = (q-1) q^{m-1}
        for (q, m, n, d, n_prime) in [
            (2u64, 2u64, 5u64, 2u64, 2u64),
            (2, 3, 11, 4, 4),
            (2, 4, 23, 8, 8),
            (3, 2, 6, 3, 2),
            (3, 3, 18, 9, 5),
            (4, 2, 7, 4, 2),
            (4, 3, 27, 16, 6),
            (5, 2, 8, 5, 2),
            (7, 2, 10, 7, 2),
            (8, 2, 11, 8, 2),
            (9, 2, 12, 9, 2),
        ] {
            let e = family_parameters(
                "P6.1",
                &FamilyParams {
                    q: Some(q),
                    m: Some(m),
                    ..fp()
                },
            )
            .unwrap();
            assert_eq!(
                (e.n, e.k, e.d, e.n_prime),
                (n, m, d, n_prime),
                "P6.1 q={q} m={m}"
            );
            assert_eq!(e.w_max, d + n_prime);
            let dist = e.distribution.unwrap();
            assert_eq!(dist.count(d as usize), d - 1);
            assert_eq!(dist.count((d + n_prime) as usize), (q - 1) * d);
            assert_eq!(dist.total(), q.pow(m as u32));
        }
    }

    #[test]
    fn p6_2_table() {
        let e = family_parameters("P6.2", &FamilyParams { m: Some(5), ..fp() }).unwrap();
        assert_eq!((e.n, e.k, e.d, e.w_max, e.n_prime), (35, 10, 12, 24, 4));
        assert_eq!(
            e.distribution.unwrap(),
            WeightDistribution::from_pairs(&[(0, 1), (12, 190), (16, 375), (20, 338), (24, 120)])
        );

        // no collision at m = 7
        let e = family_parameters("P6.2", &FamilyParams { m: Some(7), ..fp() }).unwrap();
        assert_eq!((e.n, e.k, e.d, e.w_max, e.n_prime), (167, 14, 56, 112, 40));
        assert_eq!(
            e.distribution.unwrap(),
            WeightDistribution::from_pairs(&[
                (0, 1),
                (56, 2556),
                (64, 4095),
                (72, 1540),
                (96, 2016),
                (104, 4160),
                (112, 2016),
            ])
        );
        assert!(family_parameters("P6.2", &FamilyParams { m: Some(4), ..fp() }).is_err());
    }

    #[test]
    fn c6_1_table() {
        let e = family_parameters("C6.1", &FamilyParams { m: Some(2), ..fp() }).unwrap();
        assert_eq!((e.n, e.k, e.d, e.w_max, e.n_prime), (7, 2, 3, 6, 3));
        assert_eq!(
            e.distribution.unwrap(),
            WeightDistribution::from_pairs(&[(0, 1), (3, 2), (6, 6)])
        );
        let e = family_parameters("C6.1", &FamilyParams { m: Some(3), ..fp() }).unwrap();
        assert_eq!((e.n, e.k, e.d, e.w_max, e.n_prime), (19, 3, 9, 15, 6));
    }

    #[test]
    fn unknown_family() {
        assert!(matches!(
            family_parameters("P9.9", &fp()),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!(
            family_parameters("P6.1", &fp()),
            Err(Error::ConstraintViolated(_))
        ));
    }
}
