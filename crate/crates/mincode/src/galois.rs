//! Exact arithmetic in small finite fields GF(p^m).
//!
//! Elements are integer codes in `[0, q)`: the base-p digits d0, d1, ... of
//! the code (little-endian) are the coefficients of the polynomial
//! representative d0 + d1 x + ... . Code 0 is the additive identity, code 1
//! the multiplicative identity. Extension fields use a fixed monic
//! irreducible modulus per order, so element codes are bit-exact across runs
//! and file formats.
//!
//! All operations are table-driven; tables are built eagerly at construction
//! (the largest supported field, GF(512), costs two 512x512 u16 tables).

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 512;

/// Shared, memoized field handles. Fields are immutable after construction
/// and safe to share across workers.
pub fn shared_field(q: u64) -> Result<Arc<Field>> {
    static REGISTRY: OnceLock<Mutex<BTreeMap<u64, Arc<Field>>>> = OnceLock::new();
    let registry = REGISTRY.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut map = registry.lock().expect("field registry poisoned");
    if let Some(f) = map.get(&q) {
        return Ok(Arc::clone(f));
    }
    let f = Arc::new(Field::new(q)?);
    map.insert(q, Arc::clone(&f));
    Ok(f)
}

/// Canonical moduli, little-endian coefficients over GF(p), monic of degree m.
///
/// GF(4), GF(8), GF(9) are pinned by the file-format contract; the rest are
/// the standard (Conway-style) choices. Each entry is verified irreducible at
/// field construction.
const MODULI: &[(u64, &[u16])] = &[
    (4, &[1, 1, 1]),                        // x^2 + x + 1
    (8, &[1, 1, 0, 1]),                     // x^3 + x + 1
    (9, &[1, 0, 1]),                        // x^2 + 1
    (16, &[1, 1, 0, 0, 1]),                 // x^4 + x + 1
    (25, &[2, 4, 1]),                       // x^2 + 4x + 2
    (27, &[1, 2, 0, 1]),                    // x^3 + 2x + 1
    (32, &[1, 0, 1, 0, 0, 1]),              // x^5 + x^2 + 1
    (49, &[3, 6, 1]),                       // x^2 + 6x + 3
    (64, &[1, 1, 0, 1, 1, 0, 1]),           // x^6 + x^4 + x^3 + x + 1
    (81, &[2, 0, 0, 2, 1]),                 // x^4 + 2x^3 + 2
    (121, &[2, 7, 1]),                      // x^2 + 7x + 2
    (125, &[3, 3, 0, 1]),                   // x^3 + 3x + 3
    (128, &[1, 1, 0, 0, 0, 0, 0, 1]),       // x^7 + x + 1
    (169, &[2, 12, 1]),                     // x^2 + 12x + 2
    (243, &[1, 2, 0, 0, 0, 1]),             // x^5 + 2x + 1
    (256, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),    // x^8 + x^4 + x^3 + x^2 + 1
    (343, &[2, 6, 0, 1]),                   // x^3 + 6x + 2
    (512, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]), // x^9 + x^4 + 1
];

/// Arithmetic context for GF(q), q = p^m.
#[derive(Debug)]
pub struct Field {
    p: u16,
    m: usize,
    q: u16,
    modulus: Vec<u16>,
    add_t: Vec<u16>,
    mul_t: Vec<u16>,
    neg_t: Vec<u16>,
    inv_t: Vec<u16>,
}

impl Field {
    /// Build the field of order q.
    ///
    /// Errors with `NotAPrimePower` when q has two distinct prime factors,
    /// `UnsupportedOrder` when q > 512 or no modulus is registered.
    pub fn new(q: u64) -> Result<Field> {
        let (p, m) = factor_prime_power(q).ok_or(Error::NotAPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(Error::UnsupportedOrder(q));
        }
        let modulus: Vec<u16> = if m == 1 {
            Vec::new()
        } else {
            MODULI
                .iter()
                .find(|(ord, _)| *ord == q)
                .map(|(_, c)| c.to_vec())
                .ok_or(Error::UnsupportedOrder(q))?
        };
        if m > 1 {
            assert_eq!(modulus.len(), m + 1, "registered modulus has wrong degree");
            assert_eq!(modulus[m], 1, "registered modulus is not monic");
            assert!(
                poly_is_irreducible(&modulus, p),
                "registered modulus for GF({q}) is not irreducible"
            );
        }
        let q = q as u16;
        let mut field = Field {
            p: p as u16,
            m,
            q,
            modulus,
            add_t: Vec::new(),
            mul_t: Vec::new(),
            neg_t: Vec::new(),
            inv_t: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let mut add_t = vec![0u16; q * q];
        let mut mul_t = vec![0u16; q * q];
        for a in 0..q as u16 {
            for b in 0..q as u16 {
                add_t[a as usize * q + b as usize] = self.add_raw(a, b);
                mul_t[a as usize * q + b as usize] = self.mul_raw(a, b);
            }
        }
        let mut neg_t = vec![0u16; q];
        for a in 0..q as u16 {
            neg_t[a as usize] = self.neg_raw(a);
        }
        // inverse by exhaustive search
        let mut inv_t = vec![0u16; q];
        for a in 1..q as u16 {
            for b in 1..q as u16 {
                if mul_t[a as usize * q + b as usize] == 1 {
                    inv_t[a as usize] = b;
                    break;
                }
            }
            assert_ne!(inv_t[a as usize], 0, "no inverse for element {a}");
        }
        self.add_t = add_t;
        self.mul_t = mul_t;
        self.neg_t = neg_t;
        self.inv_t = inv_t;
    }

    pub fn characteristic(&self) -> u16 {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> u16 {
        self.q
    }

    /// Modulus coefficients (little-endian); empty for prime fields.
    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add_t[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul_t[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg_t[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u16) -> Result<u16> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_t[a as usize])
    }

    pub fn pow(&self, a: u16, e: u64) -> u16 {
        let mut acc = 1u16;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u16) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut x = a;
        let mut o = 1u64;
        while x != 1 {
            x = self.mul(x, a);
            o += 1;
        }
        Ok(o)
    }

    /// Smallest element code of multiplicative order q - 1.
    pub fn primitive_element(&self) -> u16 {
        for g in 2..self.q {
            if self.element_order(g).unwrap() == (self.q - 1) as u64 {
                return g;
            }
        }
        // q = 2: the only nonzero element
        1
    }

    /// Base-p digits of an element code, little-endian, length m.
    pub fn digits(&self, a: u16) -> Vec<u16> {
        let mut d = Vec::with_capacity(self.m);
        let mut a = a;
        for _ in 0..self.m {
            d.push(a % self.p);
            a /= self.p;
        }
        d
    }

    /// Element code from base-p digits (little-endian).
    pub fn from_digits(&self, d: &[u16]) -> u16 {
        let mut v = 0u16;
        for &x in d.iter().rev() {
            v = v * self.p + x;
        }
        v
    }

    fn add_raw(&self, a: u16, b: u16) -> u16 {
        if self.m == 1 {
            return ((a as u32 + b as u32) % self.p as u32) as u16;
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let sum: Vec<u16> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.from_digits(&sum)
    }

    fn neg_raw(&self, a: u16) -> u16 {
        let d: Vec<u16> = self
            .digits(a)
            .iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        self.from_digits(&d)
    }

    fn mul_raw(&self, a: u16, b: u16) -> u16 {
        if self.m == 1 {
            return ((a as u32 * b as u32) % self.p as u32) as u16;
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u32; 2 * self.m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u32 * y as u32) % self.p as u32;
            }
        }
        // reduce by the monic modulus
        let p = self.p as u32;
        for i in (self.m..prod.len()).rev() {
            let c = prod[i];
            if c != 0 {
                prod[i] = 0;
                for (j, &mc) in self.modulus[..self.m].iter().enumerate() {
                    let idx = i - self.m + j;
                    prod[idx] = (prod[idx] + p * p - (c * mc as u32) % p) % p;
                }
            }
        }
        let digits: Vec<u16> = prod[..self.m].iter().map(|&x| x as u16).collect();
        self.from_digits(&digits)
    }
}

fn factor_prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut t = q;
            let mut m = 0;
            while t.is_multiple_of(p) {
                t /= p;
                m += 1;
            }
            return if t == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// Trial division by every monic polynomial of degree 1..=deg/2 over GF(p).
fn poly_is_irreducible(modulus: &[u16], p: u64) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for id in 0..count {
            let mut f = Vec::with_capacity(d + 1);
            let mut t = id;
            for _ in 0..d {
                f.push((t % p) as u16);
                t /= p;
            }
            f.push(1);
            if poly_rem_is_zero(modulus, &f, p as u32) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(a: &[u16], f: &[u16], p: u32) -> bool {
    let mut r: Vec<u32> = a.iter().map(|&x| x as u32).collect();
    let df = f.len() - 1;
    for i in (df..r.len()).rev() {
        let c = r[i];
        if c != 0 {
            for (j, &fc) in f.iter().enumerate() {
                let idx = i - df + j;
                r[idx] = (r[idx] + p * p - (c * fc as u32) % p) % p;
            }
        }
    }
    r[..df].iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SUPPORTED: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

    #[test]
    fn rejects_non_prime_powers() {
        for q in [0u64, 1, 6, 10, 12, 15, 100] {
            assert!(
                matches!(Field::new(q), Err(Error::NotAPrimePower(_))),
                "q={q}"
            );
        }
    }

    #[test]
    fn rejects_unregistered_orders() {
        assert!(matches!(Field::new(529), Err(Error::UnsupportedOrder(529))));
        assert!(matches!(
            Field::new(1024),
            Err(Error::UnsupportedOrder(1024))
        ));
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(Field::new(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(Field::new(9).unwrap().modulus(), &[1, 0, 1]);
        assert!(Field::new(2).unwrap().modulus().is_empty());
    }

    #[test]
    fn all_registered_orders_construct() {
        for (q, _) in MODULI {
            let f = Field::new(*q).unwrap();
            assert_eq!(f.order() as u64, *q);
        }
        for p in [2u64, 3, 5, 7, 11, 13, 127, 251, 509] {
            assert_eq!(Field::new(p).unwrap().characteristic() as u64, p);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in SUPPORTED {
            let f = Field::new(q).unwrap();
            let q = q as u16;
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.mul(a, 0), 0);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_power_q_is_identity() {
        for q in SUPPORTED {
            let f = Field::new(q).unwrap();
            for a in 0..q as u16 {
                assert_eq!(f.pow(a, q), a);
            }
        }
    }

    #[test]
    fn digit_encoding_round_trips() {
        for q in SUPPORTED {
            let f = Field::new(q).unwrap();
            for a in 0..q as u16 {
                assert_eq!(f.from_digits(&f.digits(a)), a);
            }
        }
    }

    #[test]
    fn known_values() {
        let gf2 = Field::new(2).unwrap();
        assert_eq!(gf2.add(1, 1), 0);

        // 4 = (1,1) = 1+x, 7 = (1,2) = 1+2x; digit-wise sum (2,0) -> 2
        let gf9 = Field::new(9).unwrap();
        assert_eq!(gf9.add(4, 7), 2);

        // x * (x+1) = x^2 + x = 1 mod (x^2 + x + 1)
        let gf4 = Field::new(4).unwrap();
        assert_eq!(gf4.mul(2, 3), 1);

        let gf5 = Field::new(5).unwrap();
        assert_eq!(gf5.mul(3, 4), 2);

        let gf7 = Field::new(7).unwrap();
        assert_eq!(gf7.inv(3).unwrap(), 5);

        // inverse found by search must satisfy the defining identity
        let gf8 = Field::new(8).unwrap();
        let i2 = gf8.inv(2).unwrap();
        assert_eq!(gf8.mul(2, i2), 1);
        assert_eq!(i2, 5); // x * (x^2 + 1) = x^3 + x = 1 mod (x^3 + x + 1)

        assert!(matches!(gf8.inv(0), Err(Error::DivisionByZero)));
        for q in SUPPORTED {
            let f = Field::new(q).unwrap();
            assert_eq!(f.inv(1).unwrap(), 1);
        }
    }

    #[test]
    fn primitive_elements() {
        // x is primitive for the registered binary moduli used by the trace
        // construction
        for q in [8u64, 32, 128, 512] {
            let f = Field::new(q).unwrap();
            assert_eq!(f.primitive_element(), 2);
        }
        // GF(9) with modulus x^2 + 1: code 3 is x, which has order 4 since
        // x^2 = -1; the scalar 2 has order 2
        let gf9 = Field::new(9).unwrap();
        assert_eq!(gf9.element_order(2).unwrap(), 2);
        assert_eq!(gf9.element_order(3).unwrap(), 4);
        let g = gf9.primitive_element();
        assert_eq!(gf9.element_order(g).unwrap(), 8);
    }
}
