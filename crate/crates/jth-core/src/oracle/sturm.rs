//! Classical Sturm chains over exact rationals.
//!
//! The chain is always built on the square-free part, so multiple roots are
//! counted once and the sign-variation count is exact. Variations are taken
//! with zero entries dropped, which makes V(ξ) equal the right limit V(ξ⁺);
//! the open-interval count below corrects for a root at the right endpoint.

use crate::error::{Error, Result};
use crate::jost::ThetaPolynomial;
use crate::scalar::{Rat, Scalar};

pub struct SturmChain {
    chain: Vec<ThetaPolynomial<Rat>>,
}

fn monic(p: ThetaPolynomial<Rat>) -> ThetaPolynomial<Rat> {
    match p.degree() {
        None => p,
        Some(d) => {
            let lead = p.coeff(d);
            ThetaPolynomial::new(p.coeffs().iter().map(|c| c.clone() / lead.clone()).collect())
        }
    }
}

/// Scale so the leading coefficient has absolute value 1 WITHOUT touching
/// its sign; Sturm chain links are only defined up to positive factors.
fn keep_sign_normalized(p: ThetaPolynomial<Rat>) -> ThetaPolynomial<Rat> {
    match p.degree() {
        None => p,
        Some(d) => {
            let lead = p.coeff(d).abs_val();
            ThetaPolynomial::new(p.coeffs().iter().map(|c| c.clone() / lead.clone()).collect())
        }
    }
}

fn poly_gcd(a: &ThetaPolynomial<Rat>, b: &ThetaPolynomial<Rat>) -> ThetaPolynomial<Rat> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = monic(r);
    }
    monic(a)
}

/// p / gcd(p, p′), normalized monic.
pub fn square_free_part(p: &ThetaPolynomial<Rat>) -> ThetaPolynomial<Rat> {
    let d = p.derivative();
    if d.is_zero() {
        return monic(p.clone());
    }
    let g = poly_gcd(p, &d);
    let (q, _) = p.div_rem(&g);
    monic(q)
}

impl SturmChain {
    pub fn new(p: &ThetaPolynomial<Rat>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p0 = square_free_part(p);
        let mut chain = vec![p0.clone()];
        let p1 = p0.derivative();
        if !p1.is_zero() {
            chain.push(p1);
            loop {
                let k = chain.len();
                let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
                if r.is_zero() {
                    break;
                }
                let neg =
                    ThetaPolynomial::new(r.coeffs().iter().map(|c| -c.clone()).collect());
                chain.push(keep_sign_normalized(neg));
            }
        }
        Ok(Self { chain })
    }

    /// The square-free polynomial heading the chain.
    pub fn head(&self) -> &ThetaPolynomial<Rat> {
        &self.chain[0]
    }

    /// Sign variations at x with zeros dropped (equals V(x⁺)).
    fn variations(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for p in &self.chain {
            let s = p.eval(x).sign0();
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Number of distinct real roots in the open interval (a, b).
    pub fn count_open(&self, a: &Rat, b: &Rat) -> Result<usize> {
        if a >= b {
            return Err(Error::Domain(format!(
                "interval ({a}, {b}) is empty or reversed"
            )));
        }
        let va = self.variations(a);
        let vb = self.variations(b);
        let at_b = usize::from(self.chain[0].eval(b).sign0() == 0);
        Ok(va - vb - at_b)
    }

    /// Isolating intervals (or exact points) for every root in (a, b),
    /// bisected until narrower than `width`; sorted left to right.
    pub fn isolate(&self, a: &Rat, b: &Rat, width: &Rat) -> Result<Vec<(Rat, Rat)>> {
        let mut out = Vec::new();
        self.isolate_rec(a.clone(), b.clone(), width, &mut out)?;
        Ok(out)
    }

    fn isolate_rec(
        &self,
        a: Rat,
        b: Rat,
        width: &Rat,
        out: &mut Vec<(Rat, Rat)>,
    ) -> Result<()> {
        let count = self.count_open(&a, &b)?;
        if count == 0 {
            return Ok(());
        }
        let gap = b.clone() - a.clone();
        if count == 1 && &gap < width {
            out.push((a, b));
            return Ok(());
        }
        let mid = (a.clone() + b.clone()) / Rat::from_i64(2);
        self.isolate_rec(a, mid.clone(), width, out)?;
        if self.chain[0].eval(&mid).sign0() == 0 {
            out.push((mid.clone(), mid.clone()));
        }
        self.isolate_rec(mid, b, width, out)
    }
}

/// Distinct real roots of p in (a, b).
pub fn sturm_count(p: &ThetaPolynomial<Rat>, a: &Rat, b: &Rat) -> Result<usize> {
    SturmChain::new(p)?.count_open(a, b)
}
