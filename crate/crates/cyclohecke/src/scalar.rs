//! Exact scalars: sparse Laurent polynomials in `q, v1, ..., vm` over the
//! rationals, their fraction field, the involution `omega`, q-numbers,
//! rational specializations and the genericity (semisimplicity) conditions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Errors raised by scalar arithmetic, parsing and specialization.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("parameter arity mismatch: {0} v-parameters vs {1}")]
    ArityMismatch(usize, usize),
    #[error("v-parameter index {0} out of range 1..={1}")]
    ParamIndex(usize, usize),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator vanishes at the given parameter values")]
    SpecializationSingularity,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

fn pow_coeff(base: &Coeff, exp: i64) -> Coeff {
    if exp == 0 {
        return Coeff::one();
    }
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    let mut acc = Coeff::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Sparse multivariate Laurent polynomial in `q, v1, ..., vm`.
///
/// Terms map a fixed-width exponent vector (length `m + 1`, the `q` exponent
/// first) to a nonzero rational coefficient; the map is the canonical form,
/// so derived equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    m: usize,
    terms: BTreeMap<Vec<i64>, Coeff>,
}

impl LaurentPoly {
    /// The zero polynomial over `m` v-parameters.
    pub fn zero(m: usize) -> Self {
        LaurentPoly { m, terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one(m: usize) -> Self {
        Self::constant(m, Coeff::one())
    }

    /// A constant polynomial.
    pub fn constant(m: usize, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; m + 1], c);
        }
        LaurentPoly { m, terms }
    }

    /// A single monomial `c * q^exps[0] * v1^exps[1] * ...`.
    pub fn monomial(m: usize, exps: &[i64], c: Coeff) -> Result<Self, ScalarError> {
        if exps.len() != m + 1 {
            return Err(ScalarError::ArityMismatch(exps.len(), m + 1));
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps.to_vec(), c);
        }
        Ok(LaurentPoly { m, terms })
    }

    /// The generator `q` (optionally a power of it).
    pub fn q_pow(m: usize, e: i64) -> Self {
        let mut exps = vec![0; m + 1];
        exps[0] = e;
        Self::monomial(m, &exps, Coeff::one()).expect("exponent width is m+1")
    }

    /// The generator `v_k`, 1-based.
    pub fn v(m: usize, k: usize) -> Result<Self, ScalarError> {
        if k == 0 || k > m {
            return Err(ScalarError::ParamIndex(k, m));
        }
        let mut exps = vec![0; m + 1];
        exps[k] = 1;
        Self::monomial(m, &exps, Coeff::one())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &Coeff)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn check_arity(&self, other: &Self) -> Result<(), ScalarError> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(ScalarError::ArityMismatch(self.m, other.m))
        }
    }

    /// Sum; errors on mismatched parameter counts.
    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_arity(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.get_mut(e) {
                Some(acc) => {
                    *acc += c;
                    if acc.is_zero() {
                        terms.remove(e);
                    }
                }
                None => {
                    terms.insert(e.clone(), c.clone());
                }
            }
        }
        Ok(LaurentPoly { m: self.m, terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_add(&other.neg())
    }

    /// Product; errors on mismatched parameter counts.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_arity(other)?;
        let mut terms: BTreeMap<Vec<i64>, Coeff> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                match terms.get_mut(&e) {
                    Some(acc) => {
                        *acc += c;
                        if acc.is_zero() {
                            terms.remove(&e);
                        }
                    }
                    None => {
                        terms.insert(e, c);
                    }
                }
            }
        }
        Ok(LaurentPoly { m: self.m, terms })
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            m: self.m,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// Negates every exponent vector (the involution `omega` on monomials).
    pub fn omega(&self) -> Self {
        LaurentPoly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Exact value at a parameter specialization (always defined: `q` and all
    /// `v_j` are nonzero in a [`ParamSpec`]).
    pub fn eval(&self, spec: &ParamSpec) -> Result<Coeff, ScalarError> {
        if spec.v.len() != self.m {
            return Err(ScalarError::ArityMismatch(self.m, spec.v.len()));
        }
        let mut acc = Coeff::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            t *= pow_coeff(&spec.q, e[0]);
            for (j, &ev) in e[1..].iter().enumerate() {
                if ev != 0 {
                    t *= pow_coeff(&spec.v[j], ev);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Componentwise minimum of all exponent vectors (None for 0).
    fn min_exps(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let mut min = it.next()?.clone();
        for e in it {
            for (mn, &x) in min.iter_mut().zip(e) {
                if x < *mn {
                    *mn = x;
                }
            }
        }
        Some(min)
    }

    fn shift_exps(&self, shift: &[i64]) -> Self {
        LaurentPoly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(x, s)| x - s).collect(), c.clone()))
                .collect(),
        }
    }

    /// Gcd of coefficient numerators over lcm of denominators (positive).
    fn rational_content(&self) -> Option<Coeff> {
        let mut it = self.terms.values();
        let first = it.next()?;
        let mut gnum: BigInt = first.numer().abs();
        let mut lden: BigInt = first.denom().clone();
        for c in it {
            gnum = num::integer::gcd(gnum, c.numer().abs());
            lden = num::integer::lcm(lden, c.denom().clone());
        }
        Some(Coeff::new(gnum, lden))
    }

    fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        LaurentPoly {
            m: self.m,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Coefficient of the lexicographically largest exponent vector.
    fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.iter().next_back().map(|(_, c)| c)
    }

    /// Exact quotient `self / den` in the Laurent ring, when it exists.
    ///
    /// Both operands are shifted to ordinary polynomials; single-divisor
    /// long division in the lexicographic monomial order leaves a zero
    /// remainder exactly when the division is exact.
    fn exact_quotient(&self, den: &Self) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.m));
        }
        let sn = self.min_exps()?;
        let sd = den.min_exps()?;
        let n0 = self.shift_exps(&sn);
        let d0 = den.shift_exps(&sd);
        let (dl_e, dl_c) = d0.terms.iter().next_back()?;
        let mut rem = n0.terms;
        let mut quot: BTreeMap<Vec<i64>, Coeff> = BTreeMap::new();
        while let Some((e, c)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let diff: Vec<i64> = e.iter().zip(dl_e).map(|(a, b)| a - b).collect();
            if diff.iter().any(|&x| x < 0) {
                return None;
            }
            let coef = &c / dl_c;
            for (de, dc) in &d0.terms {
                let target: Vec<i64> = de.iter().zip(&diff).map(|(a, b)| a + b).collect();
                let entry = rem.entry(target.clone()).or_insert_with(Coeff::zero);
                *entry -= &coef * dc;
                if entry.is_zero() {
                    rem.remove(&target);
                }
            }
            quot.insert(diff, coef);
        }
        // Undo the shifts: self/den = (n0/d0) * monomial(sn - sd).
        let back: Vec<i64> = sd.iter().zip(&sn).map(|(d, n)| d - n).collect();
        Some(LaurentPoly { m: self.m, terms: quot }.shift_exps(&back))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if e[0] != 0 {
                factors.push(if e[0] == 1 { "q".into() } else { format!("q^{}", e[0]) });
            }
            for (j, &ev) in e[1..].iter().enumerate() {
                if ev != 0 {
                    let name = format!("v{}", j + 1);
                    factors.push(if ev == 1 { name } else { format!("{}^{}", name, ev) });
                }
            }
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Rational function: a fraction of Laurent polynomials.
///
/// Equality is by cross-multiplication, so reduction is only an optimization;
/// after every arithmetic step the common monomial and rational content of
/// numerator and denominator is cancelled and the denominator's leading
/// coefficient is normalized positive.
#[derive(Debug, Clone)]
pub struct RatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        num.check_arity(&den)?;
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        let mut f = RatFn { num, den };
        f.normalize();
        Ok(f)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.m);
        RatFn { num: p, den }
    }

    pub fn zero(m: usize) -> Self {
        Self::from_poly(LaurentPoly::zero(m))
    }

    pub fn one(m: usize) -> Self {
        Self::from_poly(LaurentPoly::one(m))
    }

    pub fn constant(m: usize, c: Coeff) -> Self {
        Self::from_poly(LaurentPoly::constant(m, c))
    }

    pub fn from_int(m: usize, k: i64) -> Self {
        Self::constant(m, Coeff::from_integer(k.into()))
    }

    pub fn q(m: usize) -> Self {
        Self::from_poly(LaurentPoly::q_pow(m, 1))
    }

    pub fn q_pow(m: usize, e: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(m, e))
    }

    pub fn v(m: usize, k: usize) -> Result<Self, ScalarError> {
        Ok(Self::from_poly(LaurentPoly::v(m, k)?))
    }

    pub fn m(&self) -> usize {
        self.num.m
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one(self.num.m);
            return;
        }
        // Collapse fractions whose quotient lies in the Laurent ring.
        if let Some(t) = self.num.exact_quotient(&self.den) {
            self.num = t;
            self.den = LaurentPoly::one(self.num.m);
        } else if let Some(t) = self.den.exact_quotient(&self.num) {
            self.num = LaurentPoly::one(self.num.m);
            self.den = t;
        }
        // Common monomial content of numerator and denominator.
        let mn = self.num.min_exps().expect("nonzero");
        let md = self.den.min_exps().expect("nonzero denominator");
        let shift: Vec<i64> = mn.iter().zip(&md).map(|(a, b)| *a.min(b)).collect();
        if shift.iter().any(|&s| s != 0) {
            self.num = self.num.shift_exps(&shift);
            self.den = self.den.shift_exps(&shift);
        }
        // A monomial denominator divides out exactly in the Laurent ring.
        if self.den.terms().count() == 1 {
            let shift = self.den.min_exps().expect("nonzero denominator");
            if shift.iter().any(|&s| s != 0) {
                self.num = self.num.shift_exps(&shift);
                self.den = self.den.shift_exps(&shift);
            }
        }
        // Common rational content.
        let cn = self.num.rational_content().expect("nonzero");
        let cd = self.den.rational_content().expect("nonzero");
        let g = Coeff::new(
            num::integer::gcd(cn.numer().clone(), cd.numer().clone()),
            num::integer::lcm(cn.denom().clone(), cd.denom().clone()),
        );
        if !g.is_one() {
            let ginv = g.recip();
            self.num = self.num.scale(&ginv);
            self.den = self.den.scale(&ginv);
        }
        // Positive leading coefficient in the denominator.
        if self.den.leading_coeff().expect("nonzero").is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
        if self.num == self.den {
            self.num = LaurentPoly::one(self.num.m);
            self.den = LaurentPoly::one(self.num.m);
        }
    }

    fn check_arity(&self, other: &Self) -> Result<(), ScalarError> {
        self.num.check_arity(&other.num)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_arity(other)?;
        if self.den == other.den {
            return RatFn::new(self.num.checked_add(&other.num)?, self.den.clone());
        }
        let num = self
            .num
            .checked_mul(&other.den)?
            .checked_add(&other.num.checked_mul(&self.den)?)?;
        RatFn::new(num, self.den.checked_mul(&other.den)?)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_arity(other)?;
        RatFn::new(
            self.num.checked_mul(&other.num)?,
            self.den.checked_mul(&other.den)?,
        )
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        RatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn neg(&self) -> Self {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn pow_i(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.checked_inv()? } else { self.clone() };
        let mut acc = RatFn::one(self.m());
        for _ in 0..e.unsigned_abs() {
            acc = acc.checked_mul(&base)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Fixed sample point used by the probabilistic inequality pre-check of
/// [`ratfn_eq`]: pairwise "wild" rationals that rarely collide.
fn precheck_spec(m: usize) -> ParamSpec {
    let primes: [(i64, i64); 6] = [(23, 2), (29, 3), (31, 5), (37, 7), (41, 11), (43, 13)];
    let v = (0..m)
        .map(|j| {
            let (p, d) = primes[j % primes.len()];
            Coeff::new((p + 100 * (j / primes.len()) as i64).into(), d.into())
        })
        .collect();
    ParamSpec { q: Coeff::new(19.into(), 7.into()), v, n: 1 }
}

/// Equality `a/b = c/d  iff  a*d = c*b`, with a sample-point pre-check that
/// may only short-circuit a negative answer.
pub fn ratfn_eq(a: &RatFn, b: &RatFn) -> bool {
    if a.m() != b.m() {
        return false;
    }
    let spec = precheck_spec(a.m());
    if let (Ok(da), Ok(db)) = (a.den.eval(&spec), b.den.eval(&spec)) {
        if !da.is_zero() && !db.is_zero() {
            let na = a.num.eval(&spec).expect("arity checked");
            let nb = b.num.eval(&spec).expect("arity checked");
            if na * db != nb * da {
                return false;
            }
        }
    }
    let lhs = a.num.checked_mul(&b.den).expect("arity checked");
    let rhs = b.num.checked_mul(&a.den).expect("arity checked");
    lhs == rhs
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        ratfn_eq(self, other)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident, $ty:ident) => {
        impl std::ops::$trait for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                self.$checked(rhs).expect("parameter arity mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add, LaurentPoly);
forward_binop!(Sub, sub, checked_sub, LaurentPoly);
forward_binop!(Mul, mul, checked_mul, LaurentPoly);
forward_binop!(Add, add, checked_add, RatFn);
forward_binop!(Sub, sub, checked_sub, RatFn);
forward_binop!(Mul, mul, checked_mul, RatFn);
forward_binop!(Div, div, checked_div, RatFn);

/// The q-number `j_q = (q^j - q^-j)/(q - q^-1)`, returned in expanded form:
/// `q^(j-1) + q^(j-3) + ... + q^(1-j)` for `j >= 1`, with `(-j)_q = -(j_q)`.
pub fn q_number(m: usize, j: i64) -> RatFn {
    match j.cmp(&0) {
        Ordering::Equal => RatFn::zero(m),
        Ordering::Less => q_number(m, -j).neg(),
        Ordering::Greater => {
            let mut p = LaurentPoly::zero(m);
            let mut e = j - 1;
            while e >= 1 - j {
                p = p.checked_add(&LaurentPoly::q_pow(m, e)).expect("same arity");
                e -= 2;
            }
            RatFn::from_poly(p)
        }
    }
}

/// The involution `omega`: `q -> q^-1`, `v_j -> v_j^-1`.
pub fn apply_omega(f: &RatFn) -> RatFn {
    RatFn::new(f.num.omega(), f.den.omega()).expect("denominator stays nonzero")
}

/// A rational parameter point `(q, v_1, ..., v_m)` for a chain of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSpec {
    pub q: Coeff,
    pub v: Vec<Coeff>,
    pub n: usize,
}

impl ParamSpec {
    /// Builds a spec and rejects it unless it is generic for the given `n`.
    pub fn checked(q: Coeff, v: Vec<Coeff>, n: usize) -> Result<Self, Vec<GenericityViolation>> {
        let spec = ParamSpec { q, v, n };
        let violations = check_genericity(&spec);
        if violations.is_empty() {
            Ok(spec)
        } else {
            Err(violations)
        }
    }

    pub fn m(&self) -> usize {
        self.v.len()
    }
}

/// One failed semisimplicity condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenericityViolation {
    /// `q = 0` (the quadratic relation degenerates).
    QZero,
    /// `1 + q^2 + ... + q^(2N) = 0`.
    QSeriesVanishes { big_n: usize },
    /// `q^(2i) v_j = v_k` with `j != k`.
    Resonance { i: i64, j: usize, k: usize },
    /// `v_j = 0`.
    VZero { j: usize },
}

impl fmt::Display for GenericityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenericityViolation::QZero => write!(f, "q = 0"),
            GenericityViolation::QSeriesVanishes { big_n } => {
                write!(f, "1 + q^2 + ... + q^{} = 0", 2 * big_n)
            }
            GenericityViolation::Resonance { i, j, k } => {
                write!(f, "q^{}*v{} = v{}", 2 * i, j, k)
            }
            GenericityViolation::VZero { j } => write!(f, "v{} = 0", j),
        }
    }
}

/// Checks the semisimplicity conditions for `spec.n`; returns every violation.
pub fn check_genericity(spec: &ParamSpec) -> Vec<GenericityViolation> {
    let mut out = Vec::new();
    if spec.q.is_zero() {
        out.push(GenericityViolation::QZero);
    }
    for big_n in 1..spec.n {
        let q2 = &spec.q * &spec.q;
        let mut sum = Coeff::one();
        let mut p = Coeff::one();
        for _ in 1..=big_n {
            p *= &q2;
            sum += &p;
        }
        if sum.is_zero() {
            out.push(GenericityViolation::QSeriesVanishes { big_n });
        }
    }
    for (j0, vj) in spec.v.iter().enumerate() {
        if vj.is_zero() {
            out.push(GenericityViolation::VZero { j: j0 + 1 });
        }
    }
    if !spec.q.is_zero() {
        let bound = spec.n as i64;
        for j0 in 0..spec.v.len() {
            for k0 in (j0 + 1)..spec.v.len() {
                for i in (1 - bound)..bound {
                    if pow_coeff(&spec.q, 2 * i) * &spec.v[j0] == spec.v[k0] {
                        out.push(GenericityViolation::Resonance { i, j: j0 + 1, k: k0 + 1 });
                    }
                }
            }
        }
    }
    out
}

/// Exact value of `f` at `spec`; errors when the denominator vanishes there.
pub fn specialize(f: &RatFn, spec: &ParamSpec) -> Result<Coeff, ScalarError> {
    let den = f.den.eval(spec)?;
    if den.is_zero() {
        return Err(ScalarError::SpecializationSingularity);
    }
    Ok(f.num.eval(spec)? / den)
}

// ---------------------------------------------------------------------------
// Parsing of the canonical textual grammar.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>, ScalarError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => { out.push((i, Token::Plus)); i += 1 }
            b'-' => { out.push((i, Token::Minus)); i += 1 }
            b'*' => { out.push((i, Token::Star)); i += 1 }
            b'/' => { out.push((i, Token::Slash)); i += 1 }
            b'^' => { out.push((i, Token::Caret)); i += 1 }
            b'(' => { out.push((i, Token::LParen)); i += 1 }
            b')' => { out.push((i, Token::RParen)); i += 1 }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().expect("digits");
                out.push((start, Token::Int(n)));
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric()) {
                    i += 1;
                }
                out.push((start, Token::Ident(s[start..i].to_string())));
            }
            _ => {
                return Err(ScalarError::Parse { pos: i, msg: format!("unexpected byte {:?}", b as char) });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Token)],
    pos: usize,
    m: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, msg: &str) -> Result<T, ScalarError> {
        Err(ScalarError::Parse { pos: self.here(), msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<RatFn, ScalarError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFn, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = acc.checked_mul(&self.unary()?)?;
                }
                Some(Token::Slash) => {
                    self.bump();
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return self.err("division by zero");
                    }
                    acc = acc.checked_div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFn, ScalarError> {
        if let Some(Token::Minus) = self.peek() {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFn, ScalarError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.bump();
            let neg = if let Some(Token::Minus) = self.peek() {
                self.bump();
                true
            } else {
                false
            };
            let e = match self.bump() {
                Some(Token::Int(n)) => n,
                _ => return self.err("expected integer exponent"),
            };
            let e: i64 = match e.try_into() {
                Ok(x) => x,
                Err(_) => return self.err("exponent out of range"),
            };
            let e = if neg { -e } else { e };
            if base.is_zero() && e < 0 {
                return self.err("zero to a negative power");
            }
            return base.pow_i(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFn, ScalarError> {
        match self.bump() {
            Some(Token::Int(n)) => Ok(RatFn::constant(self.m, Coeff::from_integer(n))),
            Some(Token::Ident(name)) => {
                if name == "q" {
                    Ok(RatFn::q(self.m))
                } else if let Some(idx) = name.strip_prefix('v') {
                    match idx.parse::<usize>() {
                        Ok(k) if k >= 1 && k <= self.m => Ok(RatFn::v(self.m, k)?),
                        _ => self.err(&format!("unknown parameter `{}` (m = {})", name, self.m)),
                    }
                } else {
                    self.err(&format!("unknown identifier `{}`", name))
                }
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => self.err("expected `)`"),
                }
            }
            _ => self.err("expected a number, parameter or `(`"),
        }
    }
}

/// Parses the canonical rational-function grammar, e.g.
/// `((q - q^-1)*v2)/(v1 - v2)`, over `m` v-parameters.
pub fn parse_ratfn(s: &str, m: usize) -> Result<RatFn, ScalarError> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks: &toks, pos: 0, m, end: s.len() };
    let f = p.expr()?;
    if p.pos != toks.len() {
        return p.err("trailing input");
    }
    Ok(f)
}
