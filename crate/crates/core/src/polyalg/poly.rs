//! Sparse multivariate polynomials over arbitrary-precision rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{var_cmp, PolyError, DEGREE_CAP};

/// A polynomial in named indeterminates with exact rational coefficients.
///
/// `vars` is kept sorted by the canonical variable order and pruned to the
/// variables that actually occur, so two polynomials are equal iff their
/// term maps are equal. Exponent vectors run parallel to `vars`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u16>, BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        RatPoly { vars: Vec::new(), terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    pub fn from_rat(num: i64, den: i64) -> Self {
        Self::constant(BigRational::new(num.into(), den.into()))
    }

    /// The monomial `v^1`.
    pub fn var(v: &str) -> Self {
        Self::monomial(v, 1, BigRational::one())
    }

    /// The monomial `c * v^k`.
    pub fn monomial(v: &str, k: u16, c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if k == 0 {
            return Self::constant(c);
        }
        let mut terms = BTreeMap::new();
        terms.insert(vec![k], c);
        RatPoly { vars: vec![v.to_string()], terms }
    }

    /// Build from raw parts, dropping zero coefficients and unused variables.
    pub fn from_terms(vars: Vec<String>, terms: BTreeMap<Vec<u16>, BigRational>) -> Self {
        let mut p = RatPoly { vars, terms };
        p.prune();
        p
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e.get(i).copied().unwrap_or(0) != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return;
        }
        let vars: Vec<String> = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let exp: Vec<u16> = e
                    .iter()
                    .zip(&used)
                    .filter(|(_, &u)| u)
                    .map(|(&x, _)| x)
                    .collect();
                (exp, c.clone())
            })
            .collect();
        self.vars = vars;
        self.terms = terms;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    /// The constant term.
    pub fn constant_term(&self) -> BigRational {
        let key = vec![0u16; self.vars.len()];
        self.terms.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate over `(exponents, coefficient)` pairs (exponents parallel to `vars`).
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &BigRational)> {
        self.terms.iter()
    }

    /// Degree in a single variable (0 when the variable does not occur).
    pub fn degree(&self, v: &str) -> u16 {
        match self.vars.iter().position(|w| w == v) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        }
    }

    /// Total degree of the polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: &str, k: u16) -> RatPoly {
        let Some(i) = self.vars.iter().position(|w| w == v) else {
            return if k == 0 { self.clone() } else { RatPoly::zero() };
        };
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == k {
                let mut e2 = e.clone();
                e2[i] = 0;
                terms.insert(e2, c.clone());
            }
        }
        RatPoly::from_terms(self.vars.clone(), terms)
    }

    /// Merge the variable lists of two polynomials; returns the merged list
    /// and exponent-remapping tables for both operands.
    fn unify(&self, other: &Self) -> (Vec<String>, Vec<usize>, Vec<usize>) {
        let mut merged: Vec<String> = self.vars.clone();
        for v in &other.vars {
            if !merged.contains(v) {
                merged.push(v.clone());
            }
        }
        merged.sort_by(|a, b| var_cmp(a, b));
        let map_l: Vec<usize> = self
            .vars
            .iter()
            .map(|v| merged.iter().position(|w| w == v).unwrap())
            .collect();
        let map_r: Vec<usize> = other
            .vars
            .iter()
            .map(|v| merged.iter().position(|w| w == v).unwrap())
            .collect();
        (merged, map_l, map_r)
    }

    fn remap(exp: &[u16], map: &[usize], len: usize) -> Vec<u16> {
        let mut out = vec![0u16; len];
        for (i, &e) in exp.iter().enumerate() {
            out[map[i]] = e;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let (vars, map_l, map_r) = self.unify(other);
        let n = vars.len();
        let mut terms: BTreeMap<Vec<u16>, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            *terms
                .entry(Self::remap(e, &map_l, n))
                .or_insert_with(BigRational::zero) += c;
        }
        for (e, c) in &other.terms {
            *terms
                .entry(Self::remap(e, &map_r, n))
                .or_insert_with(BigRational::zero) += c;
        }
        RatPoly::from_terms(vars, terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Exact product, rejecting exponents beyond the degree cap.
    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let (vars, map_l, map_r) = self.unify(other);
        let n = vars.len();
        let mut terms: BTreeMap<Vec<u16>, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let ea = Self::remap(ea, &map_l, n);
            for (eb, cb) in &other.terms {
                let eb = Self::remap(eb, &map_r, n);
                let mut e = vec![0u16; n];
                for i in 0..n {
                    let s = ea[i] as u32 + eb[i] as u32;
                    if s > DEGREE_CAP as u32 {
                        return Err(PolyError::DegreeCap { var: vars[i].clone(), cap: DEGREE_CAP });
                    }
                    e[i] = s as u16;
                }
                *terms.entry(e).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        Ok(RatPoly::from_terms(vars, terms))
    }

    /// Product; panics past the degree cap (use [`RatPoly::try_mul`] to handle it).
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("degree cap exceeded")
    }

    pub fn try_pow(&self, k: u32) -> Result<Self, PolyError> {
        let mut acc = RatPoly::one();
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        self.try_pow(k).expect("degree cap exceeded")
    }

    /// Partial derivative with respect to `v`.
    pub fn deriv(&self, v: &str) -> Self {
        let Some(i) = self.vars.iter().position(|w| w == v) else {
            return Self::zero();
        };
        let mut terms: BTreeMap<Vec<u16>, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            *terms.entry(e2).or_insert_with(BigRational::zero) +=
                c * BigRational::from_integer((e[i] as i64).into());
        }
        RatPoly::from_terms(self.vars.clone(), terms)
    }

    /// Substitute a polynomial for a variable.
    pub fn subst(&self, v: &str, value: &RatPoly) -> Self {
        let Some(i) = self.vars.iter().position(|w| w == v) else {
            return self.clone();
        };
        let mut acc = RatPoly::zero();
        // Group by exponent of v and use Horner on the grouped pieces.
        let max = self.degree(v);
        for k in (0..=max).rev() {
            let mut slice = BTreeMap::new();
            for (e, c) in &self.terms {
                if e[i] == k {
                    let mut e2 = e.clone();
                    e2[i] = 0;
                    slice.insert(e2, c.clone());
                }
            }
            let part = RatPoly::from_terms(self.vars.clone(), slice);
            acc = acc.mul(value).add(&part);
        }
        acc
    }

    /// Substitute an exact rational value for a variable.
    pub fn subst_rat(&self, v: &str, value: &BigRational) -> Self {
        self.subst(v, &RatPoly::constant(value.clone()))
    }

    /// Rewrite `hh^2 -> h`, keeping at most a single power of `hh` per term.
    pub fn normalize_hhat(&self) -> Self {
        if !self.vars.iter().any(|v| v == "hh") {
            return self.clone();
        }
        let i_hh = self.vars.iter().position(|v| v == "hh").unwrap();
        let mut out = RatPoly::zero();
        let h = RatPoly::var("h");
        let hh = RatPoly::var("hh");
        for (e, c) in &self.terms {
            let k = e[i_hh];
            let mut e2 = e.clone();
            e2[i_hh] = 0;
            let base = RatPoly::from_terms(
                self.vars.clone(),
                BTreeMap::from([(e2, c.clone())]),
            );
            let mut term = base.mul(&h.pow(k as u32 / 2));
            if k % 2 == 1 {
                term = term.mul(&hh);
            }
            out = out.add(&term);
        }
        out
    }

    /// Evaluate at floating-point values given as `(name, value)` pairs.
    /// Variables missing from the assignment raise `UnknownVariable`.
    pub fn eval_f64(&self, assign: &[(&str, f64)]) -> Result<f64, PolyError> {
        let vals: Vec<f64> = self
            .vars
            .iter()
            .map(|v| {
                assign
                    .iter()
                    .find(|(n, _)| n == v)
                    .map(|(_, x)| *x)
                    .ok_or_else(|| PolyError::UnknownVariable(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut m = rational_to_f64(c);
            for (i, &k) in e.iter().enumerate() {
                m *= vals[i].powi(k as i32);
            }
            acc += m;
        }
        Ok(acc)
    }

    /// Evaluate at exact rational values for every variable.
    pub fn eval_rat(&self, assign: &[(&str, BigRational)]) -> Result<BigRational, PolyError> {
        let mut acc = self.clone();
        for (name, value) in assign {
            acc = acc.subst_rat(name, value);
        }
        if acc.is_constant() {
            Ok(acc.constant_term())
        } else {
            Err(PolyError::UnknownVariable(acc.vars[0].clone()))
        }
    }

    /// Leading term in the lexicographic order induced by the canonical
    /// variable order (largest exponent vector).
    fn leading(&self) -> Option<(&Vec<u16>, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Exact division: returns `None` if `self` is not a polynomial multiple
    /// of `divisor`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Work on raw term maps over a fixed common variable list so the
        // exponent coordinates never shift mid-division.
        let (vars, map_l, map_r) = self.unify(divisor);
        let n = vars.len();
        let mut rem: BTreeMap<Vec<u16>, BigRational> = self
            .terms
            .iter()
            .map(|(e, c)| (Self::remap(e, &map_l, n), c.clone()))
            .collect();
        let div: BTreeMap<Vec<u16>, BigRational> = divisor
            .terms
            .iter()
            .map(|(e, c)| (Self::remap(e, &map_r, n), c.clone()))
            .collect();
        let (lt_de, lt_dc) = div.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut quot: BTreeMap<Vec<u16>, BigRational> = BTreeMap::new();
        while let Some((lt_re, lt_rc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let mut qe = vec![0u16; n];
            for i in 0..n {
                if lt_re[i] < lt_de[i] {
                    return None;
                }
                qe[i] = lt_re[i] - lt_de[i];
            }
            let qc = lt_rc / &lt_dc;
            for (e, c) in &div {
                let mut te = vec![0u16; n];
                for i in 0..n {
                    te[i] = e[i] + qe[i];
                }
                let entry = rem.entry(te.clone()).or_insert_with(BigRational::zero);
                *entry -= &qc * c;
                if entry.is_zero() {
                    rem.remove(&te);
                }
            }
            *quot.entry(qe).or_insert_with(BigRational::zero) += qc;
        }
        Some(RatPoly::from_terms(vars, quot))
    }

    /// Rational content: gcd of all coefficient numerators divided by the
    /// lcm of denominators, signed so dividing by it makes the leading
    /// coefficient positive.
    pub fn content(&self) -> BigRational {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return BigRational::one();
        }
        let mut num_gcd = BigInt::from(0);
        let mut den_lcm = BigInt::from(1);
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if let Some((_, lc)) = self.leading() {
            if lc.is_negative() {
                content = -content;
            }
        }
        content
    }

    /// Monomial gcd of all terms (per-variable minimum exponent).
    pub fn monomial_content(&self) -> Vec<u16> {
        let n = self.vars.len();
        let mut m = vec![u16::MAX; n];
        for e in self.terms.keys() {
            for i in 0..n {
                m[i] = m[i].min(e[i]);
            }
        }
        if self.terms.is_empty() {
            m.fill(0);
        }
        m
    }

    /// Divide out the full (rational and monomial) content.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        let m = self.monomial_content();
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| {
                let e2: Vec<u16> = e.iter().zip(&m).map(|(&x, &y)| x - y).collect();
                (e2, k / &c)
            })
            .collect();
        RatPoly::from_terms(self.vars.clone(), terms)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    // Exact conversion path for small values, ratio of f64s otherwise.
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact `d/dt` in the ring `Q[t,tau][q,qp]`, closed under the Painlevé II
/// substitutions `dq = qp`, `dqp = t q + 2 q^3` (`tau` is a constant).
pub fn painleve_diff(p: &RatPoly) -> Result<RatPoly, PolyError> {
    for v in p.vars() {
        if !matches!(v.as_str(), "t" | "tau" | "q" | "qp") {
            return Err(PolyError::UnknownVariable(v.clone()));
        }
    }
    let q = RatPoly::var("q");
    let t = RatPoly::var("t");
    // qp' = t q + 2 q^3
    let qpp = t.mul(&q).add(&q.pow(3).scale(&BigRational::from_integer(2.into())));
    let mut out = p.deriv("t");
    out = out.add(&p.deriv("q").mul(&RatPoly::var("qp")));
    out = out.add(&p.deriv("qp").mul(&qpp));
    Ok(out)
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut piece = String::new();
            if !first {
                piece.push_str(if c.is_negative() { " - " } else { " + " });
            } else if c.is_negative() {
                piece.push('-');
            }
            let abs = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                piece.push_str(&format!("{abs}"));
            } else if abs.is_one() {
                piece.push_str(&mono.join("*"));
            } else {
                piece.push_str(&format!("{abs}*{}", mono.join("*")));
            }
            f.write_str(&piece)?;
            first = false;
        }
        Ok(())
    }
}


#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u16>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    exp: e.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for term in repr.terms {
            let num: num_bigint::BigInt = term
                .num
                .parse()
                .map_err(|_| D::Error::custom("bad numerator"))?;
            let den: num_bigint::BigInt = term
                .den
                .parse()
                .map_err(|_| D::Error::custom("bad denominator"))?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            if term.exp.len() != repr.vars.len() {
                return Err(D::Error::custom("exponent arity mismatch"));
            }
            terms.insert(term.exp, BigRational::new(num, den));
        }
        Ok(RatPoly::from_terms(repr.vars, terms))
    }
}
