//! Sparse multivariate polynomials over exact rationals.
//!
//! A polynomial is a map from monomials to nonzero coefficients. Monomials
//! are sorted exponent vectors over `VarId`s; the term order is lexicographic
//! in the registry order (lower ids are more significant), leading term
//! first. No zero coefficient is ever stored.

use crate::rat::{fmt_rat, parse_rat, Rat};
use crate::vars::{VarId, VarRegistry};
use crate::CoreError;
use num_traits::{One, Zero};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A monomial: sorted `(var, exp)` pairs with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub SmallVec<[(VarId, u16); 4]>);

impl Mono {
    pub fn one() -> Self {
        Mono(SmallVec::new())
    }

    pub fn var(v: VarId) -> Self {
        Mono(smallvec::smallvec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(VarId, u16)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        Mono(pairs.into_iter().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn exp_of(&self, v: VarId) -> u16 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out: SmallVec<[(VarId, u16); 4]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        j += 1;
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&p), None) => {
                    out.push(p);
                    i += 1;
                }
                (None, Some(&p)) => {
                    out.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Mono(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Mono) -> Option<Mono> {
        let mut out: SmallVec<[(VarId, u16); 4]> = SmallVec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            let mut rem = e;
            if j < other.0.len() && other.0[j].0 == v {
                if other.0[j].1 > e {
                    return None;
                }
                rem = e - other.0[j].1;
                j += 1;
            }
            if rem > 0 {
                out.push((v, rem));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Mono(out))
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }
}

impl Ord for Mono {
    /// Lexicographic in registry order: the first variable (lowest id) with a
    /// differing exponent decides; higher exponent sorts greater.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, _)), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {}
                            o => return o,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with `Rat` coefficients.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct QPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        QPoly { terms }
    }

    pub fn var(v: VarId) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(v), Rat::one());
        QPoly { terms }
    }

    pub fn monomial(m: Mono, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        QPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    /// Leading term in the lex order (greatest monomial).
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_one())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.get(&Mono::one()).cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: VarId) -> u16 {
        self.terms.keys().map(|m| m.exp_of(v)).max().unwrap_or(0)
    }

    /// All variables occurring with positive exponent.
    pub fn vars(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self.terms.keys().flat_map(|m| m.vars()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// True when every variable present satisfies the predicate.
    pub fn vars_all(&self, f: impl Fn(VarId) -> bool) -> bool {
        self.terms.keys().all(|m| m.vars().all(&f))
    }

    fn insert_add(terms: &mut BTreeMap<Mono, Rat>, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> QPoly {
        QPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: VarId) -> QPoly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp_of(v);
            if e == 0 {
                continue;
            }
            let mut pairs: Vec<(VarId, u16)> =
                m.0.iter()
                    .filter_map(|&(w, k)| {
                        if w == v {
                            if k > 1 {
                                Some((w, k - 1))
                            } else {
                                None
                            }
                        } else {
                            Some((w, k))
                        }
                    })
                    .collect();
            pairs.sort_by_key(|&(w, _)| w);
            Self::insert_add(
                &mut terms,
                Mono(pairs.into_iter().collect()),
                c.clone() * Rat::from_integer(e.into()),
            );
        }
        QPoly { terms }
    }

    /// Simultaneous substitution of variables by polynomials. Variables not
    /// in the map are left alone.
    pub fn substitute(&self, map: &HashMap<VarId, QPoly>) -> QPoly {
        let mut out = QPoly::zero();
        let mut pow_cache: HashMap<(VarId, u16), QPoly> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = QPoly::constant(c.clone());
            let mut plain: SmallVec<[(VarId, u16); 4]> = SmallVec::new();
            for &(v, e) in &m.0 {
                if let Some(p) = map.get(&v) {
                    let pe = pow_cache
                        .entry((v, e))
                        .or_insert_with(|| p.pow(e as u32))
                        .clone();
                    term = &term * &pe;
                } else {
                    plain.push((v, e));
                }
            }
            if !plain.is_empty() {
                term = term.mul_mono(&Mono(plain));
            }
            out = &out + &term;
        }
        out
    }

    pub fn pow(&self, e: u32) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at a full rational point; missing variables evaluate via `f`.
    pub fn eval(&self, f: &impl Fn(VarId) -> Rat) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                let val = f(v);
                for _ in 0..e {
                    t *= val.clone();
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact division; errors if `self` is not a polynomial multiple of `d`.
    pub fn exact_div(&self, d: &QPoly) -> Result<QPoly, CoreError> {
        if d.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        if let Some(c) = d.as_constant() {
            return Ok(self.scale(&(Rat::one() / c)));
        }
        let (dm, dc) = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quo = QPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm
                .checked_div(dm)
                .ok_or(CoreError::InexactDivision)?;
            let qc = rc.clone() / dc.clone();
            let t = QPoly::monomial(qm, qc);
            rem = &rem - &(&t * d);
            quo = &quo + &t;
        }
        Ok(quo)
    }

    /// Divides `self` exactly by `d`? (no remainder)
    pub fn divides_exactly(&self, d: &QPoly) -> bool {
        self.exact_div(d).is_ok()
    }

    /// Normalize by the leading rational coefficient (monic in lex order).
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some((_, c)) => self.scale(&(Rat::one() / c.clone())),
        }
    }

    /// Render in canonical sparse text form against a registry.
    pub fn render(&self, reg: &VarRegistry) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut s = fmt_rat(c);
            for &(v, e) in &m.0 {
                s.push('*');
                s.push_str(&reg.name(v));
                if e > 1 {
                    s.push('^');
                    s.push_str(&e.to_string());
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }

    /// Parse the canonical sparse text form. Unknown names are interned.
    pub fn parse(s: &str, reg: &VarRegistry) -> Result<QPoly, CoreError> {
        let mut out = QPoly::zero();
        let s = s.trim();
        if s == "0" {
            return Ok(out);
        }
        for (idx, term) in s.split('+').enumerate() {
            let term = term.trim();
            if term.is_empty() {
                return Err(CoreError::Parse {
                    pos: idx,
                    msg: "empty term".into(),
                });
            }
            let mut coeff = Rat::one();
            let mut pairs: Vec<(VarId, u16)> = Vec::new();
            let mut saw_coeff = false;
            for factor in term.split('*') {
                let factor = factor.trim();
                if let Some(c) = parse_rat(factor) {
                    if saw_coeff {
                        coeff *= c;
                    } else {
                        coeff = c;
                        saw_coeff = true;
                    }
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let e: u16 = e.trim().parse().map_err(|_| CoreError::Parse {
                            pos: idx,
                            msg: format!("bad exponent in {factor:?}"),
                        })?;
                        (n.trim(), e)
                    }
                    None => (factor, 1),
                };
                if name.is_empty() {
                    return Err(CoreError::Parse {
                        pos: idx,
                        msg: "empty variable name".into(),
                    });
                }
                pairs.push((reg.intern(name), exp));
            }
            out = &out + &QPoly::monomial(Mono::from_pairs(pairs), coeff);
        }
        Ok(out)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> =
                    m.0.iter()
                        .map(|&(v, e)| {
                            if e > 1 {
                                format!("v{v}^{e}")
                            } else {
                                format!("v{v}")
                            }
                        })
                        .collect();
                if vars.is_empty() {
                    fmt_rat(c)
                } else {
                    format!("{}*{}", fmt_rat(c), vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, other: &QPoly) -> QPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            QPoly::insert_add(&mut terms, m.clone(), c.clone());
        }
        QPoly { terms }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, other: &QPoly) -> QPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            QPoly::insert_add(&mut terms, m.clone(), -c.clone());
        }
        QPoly { terms }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut acc: HashMap<Mono, Rat> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                }
            }
        }
        QPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Multivariate gcd by primitive pseudo-remainder sequences. Coefficients are
// rationals, so contents bottom out at 1; the recursion is over the variable
// with the largest id present.
// ---------------------------------------------------------------------------

/// Coefficients of `p` as a univariate polynomial in `v`.
fn coeffs_in(p: &QPoly, v: VarId) -> BTreeMap<u16, QPoly> {
    let mut out: BTreeMap<u16, QPoly> = BTreeMap::new();
    for (m, c) in &p.terms {
        let e = m.exp_of(v);
        let rest = Mono(
            m.0.iter()
                .filter(|&&(w, _)| w != v)
                .cloned()
                .collect(),
        );
        let entry = out.entry(e).or_insert_with(QPoly::zero);
        *entry = &*entry + &QPoly::monomial(rest, c.clone());
    }
    out.retain(|_, q| !q.is_zero());
    out
}

fn from_coeffs(coeffs: &BTreeMap<u16, QPoly>, v: VarId) -> QPoly {
    let mut out = QPoly::zero();
    for (&e, q) in coeffs {
        let m = if e == 0 { Mono::one() } else { Mono(smallvec::smallvec![(v, e)]) };
        out = &out + &q.mul_mono(&m);
    }
    out
}

/// Content of `p` w.r.t. `v`: the gcd of its univariate coefficients.
fn content_in(p: &QPoly, v: VarId) -> QPoly {
    let mut g = QPoly::zero();
    for (_, q) in coeffs_in(p, v) {
        g = poly_gcd(&g, &q);
        if g.is_constant() && !g.is_zero() {
            return QPoly::one();
        }
    }
    g
}

/// Pseudo-remainder of `f` by `g` as univariates in `v` (deg f >= deg g).
fn pseudo_rem(f: &QPoly, g: &QPoly, v: VarId) -> QPoly {
    let dg = g.degree_in(v);
    let gc = coeffs_in(g, v);
    let lc_g = gc[&dg].clone();
    let mut r = f.clone();
    while !r.is_zero() {
        let dr = r.degree_in(v);
        if dr < dg {
            break;
        }
        let rc = coeffs_in(&r, v);
        let lc_r = rc[&dr].clone();
        // r := lc_g * r - lc_r * v^(dr-dg) * g
        let shift = if dr == dg {
            Mono::one()
        } else {
            Mono(smallvec::smallvec![(v, dr - dg)])
        };
        let t = lc_r.mul_mono(&shift);
        r = &(&r * &lc_g) - &(&t * g);
    }
    r
}

/// Greatest common divisor, normalized monic in the lex order.
pub fn poly_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return QPoly::one();
    }
    let v = a
        .vars()
        .into_iter()
        .chain(b.vars())
        .max()
        .expect("nonconstant");
    let da = a.degree_in(v);
    let db = b.degree_in(v);
    if da == 0 {
        return poly_gcd(a, &content_in(b, v));
    }
    if db == 0 {
        return poly_gcd(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let cg = poly_gcd(&ca, &cb);
    let mut f = a.exact_div(&ca).expect("content divides");
    let mut g = b.exact_div(&cb).expect("content divides");
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        let rc = content_in(&r, v);
        f = g;
        g = r.exact_div(&rc).expect("content divides");
        if g.degree_in(v) == 0 {
            g = QPoly::one();
            break;
        }
    }
    (&cg * &g).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn reg_xy() -> (VarRegistry, VarId, VarId) {
        let reg = VarRegistry::new();
        let x = reg.intern("x");
        let y = reg.intern("y");
        (reg, x, y)
    }

    #[test]
    fn difference_of_squares() {
        let (_, x, _) = reg_xy();
        let p = &QPoly::var(x) + &QPoly::one();
        let q = &QPoly::var(x) - &QPoly::one();
        let expect = &(&QPoly::var(x) * &QPoly::var(x)) - &QPoly::one();
        assert_eq!(&p * &q, expect);
    }

    #[test]
    fn additive_identity() {
        let (_, x, y) = reg_xy();
        let p = &(&QPoly::var(x) * &QPoly::var(y)) + &QPoly::constant(ratio(3, 7));
        assert_eq!(&p + &QPoly::zero(), p);
    }

    #[test]
    fn power_rule_on_br_entry() {
        // d/dc3 (t1*c3 + c3^2) = t1 + 2*c3
        let reg = VarRegistry::new();
        let t1 = reg.intern("t1");
        let c3 = reg.intern("c3");
        let p = &(&QPoly::var(t1) * &QPoly::var(c3)) + &(&QPoly::var(c3) * &QPoly::var(c3));
        let d = p.derivative(c3);
        let expect = &QPoly::var(t1) + &QPoly::var(c3).scale(&rat(2));
        assert_eq!(d, expect);
        // constants differentiate to zero
        assert!(QPoly::constant(rat(5)).derivative(c3).is_zero());
    }

    #[test]
    fn substitution_examples() {
        let reg = VarRegistry::new();
        let t1 = reg.intern("t1");
        let c3 = reg.intern("c3");
        let p = &(&QPoly::var(t1) * &QPoly::var(c3)) + &(&QPoly::var(c3) * &QPoly::var(c3));
        let mut map = HashMap::new();
        map.insert(c3, QPoly::zero());
        assert!(p.substitute(&map).is_zero());
        // identity assignment
        let mut id = HashMap::new();
        id.insert(c3, QPoly::var(c3));
        assert_eq!(p.substitute(&id), p);
    }

    #[test]
    fn render_parse_round_trip() {
        let reg = VarRegistry::new();
        let x = reg.intern("x1.0.0");
        let y = reg.intern("t1");
        let p = &(&QPoly::var(x).scale(&ratio(-3, 2)) * &QPoly::var(y)) + &QPoly::var(x).pow(2);
        let s = p.render(&reg);
        let q = QPoly::parse(&s, &reg).unwrap();
        assert_eq!(p, q);
        assert!(QPoly::parse("x ** 2", &reg).is_err());
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = reg_xy();
        let p = &(&QPoly::var(x) + &QPoly::var(y)) * &(&QPoly::var(x) - &QPoly::var(y));
        let q = p.exact_div(&(&QPoly::var(x) + &QPoly::var(y))).unwrap();
        assert_eq!(q, &QPoly::var(x) - &QPoly::var(y));
        assert!(p.exact_div(&QPoly::var(x)).is_err());
    }

    #[test]
    fn gcd_bivariate() {
        let (_, x, y) = reg_xy();
        let f = &QPoly::var(x) + &QPoly::var(y);
        let a = &f * &(&QPoly::var(x) + &QPoly::one());
        let b = &f * &(&QPoly::var(y) + &QPoly::constant(rat(2)));
        let g = poly_gcd(&a, &b);
        assert_eq!(g, f.monic());
        // coprime
        let g2 = poly_gcd(&QPoly::var(x), &(&QPoly::var(y) + &QPoly::one()));
        assert_eq!(g2, QPoly::one());
    }
}
