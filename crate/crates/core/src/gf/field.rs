//! Table-driven arithmetic for GF(q), q in {2, 3, 4, 5, 7, 9}.
//!
//! Elements are integer codes `0..q` reading the polynomial coefficients in
//! base p: code = c0 + c1·p for c0 + c1·x. The irreducible polynomials are
//! fixed so serialized vectors are portable: GF(4) uses x²+x+1 and GF(9)
//! uses x²+1. The field axioms are checked exhaustively at construction.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const SUPPORTED_ORDERS: [usize; 6] = [2, 3, 4, 5, 7, 9];

#[derive(Debug)]
pub struct Field {
    q: usize,
    p: usize,
    degree: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    poly: &'static str,
}

impl Field {
    /// Shared table for the given order.
    pub fn get(q: usize) -> Result<&'static Field> {
        static FIELDS: OnceLock<Vec<Field>> = OnceLock::new();
        let all = FIELDS.get_or_init(|| SUPPORTED_ORDERS.iter().map(|&q| Field::build(q)).collect());
        all.iter()
            .find(|f| f.q == q)
            .ok_or(Error::UnsupportedField { q })
    }

    fn build(q: usize) -> Field {
        let (p, degree, poly): (usize, usize, &'static str) = match q {
            2 | 3 | 5 | 7 => (q, 1, "prime"),
            4 => (2, 2, "x^2+x+1"),
            9 => (3, 2, "x^2+1"),
            _ => unreachable!("order outside the supported list"),
        };
        // x^2 = red1·x + red0 after reduction by the fixed polynomial
        let (red0, red1) = match q {
            4 => (1usize, 1usize),  // x^2 + x + 1 = 0 over GF(2)
            9 => (2usize, 0usize),  // x^2 + 1 = 0 over GF(3)
            _ => (0, 0),
        };

        let coeffs = |e: usize| (e % p, e / p);
        let encode = |c0: usize, c1: usize| c0 + c1 * p;

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            let (a0, a1) = coeffs(a);
            neg[a] = encode((p - a0) % p, (p - a1) % p) as u8;
            for b in 0..q {
                let (b0, b1) = coeffs(b);
                add[a * q + b] = encode((a0 + b0) % p, (a1 + b1) % p) as u8;
                if degree == 1 {
                    mul[a * q + b] = (a * b % p) as u8;
                } else {
                    // (a0 + a1 x)(b0 + b1 x) with x^2 reduced
                    let c0 = a0 * b0;
                    let c1 = a0 * b1 + a1 * b0;
                    let c2 = a1 * b1;
                    mul[a * q + b] = encode((c0 + c2 * red0) % p, (c1 + c2 * red1) % p) as u8;
                }
            }
        }
        let mut inv = vec![0u8; q];
        for a in 1..q {
            let found = (1..q).find(|&b| mul[a * q + b] == 1);
            inv[a] = found.expect("every nonzero element has an inverse") as u8;
        }

        let f = Field {
            q,
            p,
            degree,
            add,
            mul,
            neg,
            inv,
            poly,
        };
        f.verify_axioms();
        f
    }

    /// Exhaustive check of the field axioms; q ≤ 9 makes this cheap.
    fn verify_axioms(&self) {
        let q = self.q as u8;
        for a in 0..q {
            assert_eq!(self.add(a, 0), a);
            assert_eq!(self.mul(a, 1), a);
            assert_eq!(self.add(a, self.neg(a)), 0);
            if a != 0 {
                assert_eq!(self.mul(a, self.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(self.add(a, b), self.add(b, a));
                assert_eq!(self.mul(a, b), self.mul(b, a));
                for c in 0..q {
                    assert_eq!(self.add(self.add(a, b), c), self.add(a, self.add(b, c)));
                    assert_eq!(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)));
                    assert_eq!(
                        self.mul(a, self.add(b, c)),
                        self.add(self.mul(a, b), self.mul(a, c))
                    );
                }
            }
        }
        // the Frobenius map is additive, hence an automorphism here
        for a in 0..q {
            for b in 0..q {
                assert_eq!(
                    self.frobenius(self.add(a, b)),
                    self.add(self.frobenius(a), self.frobenius(b))
                );
            }
        }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn polynomial(&self) -> &'static str {
        self.poly
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u8, e: usize) -> u8 {
        let mut acc = 1u8;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// x ↦ x^p.
    pub fn frobenius(&self, a: u8) -> u8 {
        self.pow(a, self.p)
    }

    /// Conjugation x ↦ x^√q for quadratic extensions; identity on primes.
    pub fn conj(&self, a: u8) -> u8 {
        if self.degree == 2 {
            self.frobenius(a)
        } else {
            a
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }

    /// A non-square element, if the field has one (odd characteristic).
    pub fn non_square(&self) -> Option<u8> {
        (1..self.q as u8).find(|&a| (1..self.q as u8).all(|b| self.mul(b, b) != a))
    }
}
