//! Affine varieties over `F_p`: brute-force point counts over `F_{p^n}`,
//! Frobenius fixed points and Weil zeta functions.

mod field;

pub use field::{make_field, make_field_with_budget, make_field_with_modulus, FiniteField, DEFAULT_BUDGET};

use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use rayon::prelude::*;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::witt::{ghost_inverse, GhostVector, WittElement};
use field::{checked_pow, is_prime};

/// `coeff · Π x_i^{exps[i]}`, coefficient reduced into `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub exps: Vec<u32>,
    pub coeff: u64,
}

/// A sum of [`Term`]s; the variety is its common zero locus with the others.
pub type Polynomial = Vec<Term>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineVariety {
    p: u64,
    vars: Vec<String>,
    polys: Vec<Polynomial>,
}

/// `c_1, ..., c_N` with `c_n = #X(F_{p^n})`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PointCountTable {
    pub counts: Vec<BigInt>,
}

impl AffineVariety {
    /// `polys` holds `(exponent vector, coefficient)` pairs.
    pub fn new(p: u64, vars: Vec<String>, polys: Vec<Vec<(Vec<u32>, i64)>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let polys = polys
            .into_iter()
            .map(|poly| {
                poly.into_iter()
                    .map(|(exps, c)| {
                        if exps.len() != vars.len() {
                            return Err(Error::invalid(format!(
                                "exponent vector {exps:?} has length {}, expected {}",
                                exps.len(),
                                vars.len()
                            )));
                        }
                        Ok(Term {
                            exps,
                            coeff: c.rem_euclid(p as i64) as u64,
                        })
                    })
                    .filter(|t| !matches!(t, Ok(Term { coeff: 0, .. })))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AffineVariety { p, vars, polys })
    }

    /// Variables named `x0, x1, ...`.
    pub fn with_anonymous_vars(p: u64, num_vars: usize, polys: Vec<Vec<(Vec<u32>, i64)>>) -> Result<Self> {
        Self::new(p, (0..num_vars).map(|i| format!("x{i}")).collect(), polys)
    }

    /// `A^d` over `F_p`.
    pub fn affine_space(p: u64, d: usize) -> Result<Self> {
        Self::with_anonymous_vars(p, d, vec![])
    }

    /// `G_m` as `{xy = 1}` in `A^2`.
    pub fn multiplicative_group(p: u64) -> Result<Self> {
        Self::with_anonymous_vars(p, 2, vec![vec![(vec![1, 1], 1), (vec![0, 0], -1)]])
    }

    /// Parses `{"p": 3, "vars": ["x","y"], "polys": [...]}`.
    ///
    /// `polys` is a list of polynomials, each a list of `[exponents, coeff]`
    /// pairs; a bare list of pairs is read as a single polynomial. `"num_vars"`
    /// may replace `"vars"`.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::invalid(format!("variety JSON: {e}")))?;
        Self::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let p = v
            .get("p")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::invalid("variety JSON needs an integer \"p\""))?;
        let vars: Vec<String> = match (v.get("vars"), v.get("num_vars")) {
            (Some(Value::Array(names)), _) => names
                .iter()
                .map(|n| {
                    n.as_str()
                        .map(str::to_owned)
                        .ok_or_else(|| Error::invalid("\"vars\" must be strings"))
                })
                .collect::<Result<_>>()?,
            (None, Some(n)) => {
                let n = n.as_u64().ok_or_else(|| Error::invalid("\"num_vars\" must be an integer"))?;
                (0..n).map(|i| format!("x{i}")).collect()
            }
            _ => return Err(Error::invalid("variety JSON needs \"vars\" or \"num_vars\"")),
        };
        let raw = match v.get("polys") {
            None | Some(Value::Null) => Vec::new(),
            Some(Value::Array(a)) => a.clone(),
            Some(_) => return Err(Error::invalid("\"polys\" must be a list")),
        };
        let single = raw.first().map(is_term).unwrap_or(false);
        let polys = if single {
            vec![parse_poly(&Value::Array(raw))?]
        } else {
            raw.iter().map(parse_poly).collect::<Result<_>>()?
        };
        Self::new(p, vars, polys)
    }

    pub fn to_json(&self) -> Value {
        let polys: Vec<Value> = self
            .polys
            .iter()
            .map(|poly| {
                Value::Array(
                    poly.iter()
                        .map(|t| serde_json::json!([t.exps, t.coeff]))
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({ "p": self.p, "vars": self.vars, "polys": polys })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    /// The same ambient space cut out by additional equations.
    pub fn with_extra(&self, extra: &[Polynomial]) -> Self {
        let mut out = self.clone();
        out.polys.extend(extra.iter().cloned());
        out
    }

    fn used_vars(&self) -> Vec<usize> {
        (0..self.num_vars())
            .filter(|&i| self.polys.iter().flatten().any(|t| t.exps[i] > 0))
            .collect()
    }
}

fn is_term(v: &Value) -> bool {
    matches!(v, Value::Array(pair) if pair.len() == 2 && pair[0].is_array() && pair[1].is_number())
}

fn parse_poly(v: &Value) -> Result<Vec<(Vec<u32>, i64)>> {
    let terms = v.as_array().ok_or_else(|| Error::invalid("polynomial must be a list of terms"))?;
    terms
        .iter()
        .map(|t| {
            if !is_term(t) {
                return Err(Error::invalid(format!("malformed term {t}")));
            }
            let exps = t[0]
                .as_array()
                .unwrap()
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|e| u32::try_from(e).ok())
                        .ok_or_else(|| Error::invalid(format!("bad exponent {e}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            let c = t[1].as_i64().ok_or_else(|| Error::invalid(format!("bad coefficient {}", t[1])))?;
            Ok((exps, c))
        })
        .collect()
}

/// A polynomial specialized to the variables that are actually enumerated,
/// with each monomial kept as the log of its coefficient and exponents
/// reduced modulo the order of the multiplicative group.
struct CompiledPoly {
    terms: Vec<(u64, Vec<(usize, u64)>)>,
    group: u64,
}

impl CompiledPoly {
    fn compile(poly: &Polynomial, used: &[usize], field: &FiniteField) -> Self {
        let group = field.size() as u64 - 1;
        let terms = poly
            .iter()
            .filter_map(|t| {
                let c = field.from_int(t.coeff as i64);
                (c != 0).then(|| {
                    let factors = used
                        .iter()
                        .enumerate()
                        .filter(|(_, &v)| t.exps[v] > 0)
                        .map(|(slot, &v)| (slot, t.exps[v] as u64 % group))
                        .collect();
                    (field.log(c) as u64, factors)
                })
            })
            .collect();
        CompiledPoly { terms, group }
    }

    fn vanishes(&self, field: &FiniteField, point: &[u32]) -> bool {
        let mut acc = 0;
        'terms: for (log_c, factors) in &self.terms {
            let mut l = *log_c;
            for &(slot, e) in factors {
                let x = point[slot];
                if x == 0 {
                    continue 'terms;
                }
                l = (l + e * field.log(x) as u64) % self.group;
            }
            acc = field.add(acc, field.exp(l));
        }
        acc == 0
    }
}

fn enumeration_size(q: u64, k: usize, budget: u64) -> Result<u64> {
    let needed = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(needed as u64)
}

/// Counts points of `domain^k` (a list of admissible coordinate values in
/// `field`) on which `accept` holds. Parallel over the first coordinate.
fn enumerate<F>(domain: &[u32], k: usize, accept: F) -> u64
where
    F: Fn(&[u32]) -> bool + Sync,
{
    if k == 0 {
        return accept(&[]) as u64;
    }
    domain
        .par_iter()
        .map(|&first| {
            let mut idx = vec![0usize; k];
            let mut point = vec![domain[0]; k];
            point[0] = first;
            let mut count = 0u64;
            loop {
                if accept(&point) {
                    count += 1;
                }
                // odometer over coordinates 1..k
                let mut j = 1;
                while j < k {
                    idx[j] += 1;
                    if idx[j] < domain.len() {
                        point[j] = domain[idx[j]];
                        break;
                    }
                    idx[j] = 0;
                    point[j] = domain[0];
                    j += 1;
                }
                if j == k {
                    break;
                }
            }
            count
        })
        .sum()
}

/// `#X(F_{p^n})` under the default budget.
pub fn count_points(x: &AffineVariety, n: usize) -> Result<BigInt> {
    count_points_with_budget(x, n, DEFAULT_BUDGET)
}

/// `#X(F_{p^n})` by enumeration. Equations are grouped into blocks that share
/// variables; each block is enumerated on its own variables and the counts
/// multiply. Variables absent from every equation contribute a factor `p^n`.
/// The budget bounds the points enumerated for any single block.
pub fn count_points_with_budget(x: &AffineVariety, n: usize, budget: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::invalid("extension degree must be positive"));
    }
    let split = x.split();
    if !split.consistent {
        return Ok(BigInt::zero());
    }
    if split.blocks.is_empty() {
        return Ok(Pow::pow(BigInt::from(x.p), n * split.free));
    }
    let q = checked_pow(x.p, n as u32).unwrap_or(u64::MAX);
    for block in &split.blocks {
        enumeration_size(q, block.vars.len(), budget)?;
    }
    let field = make_field_with_budget(x.p, n, budget)?;
    let domain: Vec<u32> = field.elements().collect();
    count_split(x, &split, &field, &domain, budget)
}

/// `#X(F_{p^n})` computed in a caller-supplied model of `F_{p^n}`.
pub fn count_points_in(x: &AffineVariety, field: &FiniteField, budget: u64) -> Result<BigInt> {
    if field.characteristic() != x.p {
        return Err(Error::invalid("field characteristic differs from the variety's"));
    }
    let domain: Vec<u32> = field.elements().collect();
    count_split(x, &x.split(), field, &domain, budget)
}

struct Block {
    vars: Vec<usize>,
    polys: Vec<usize>,
}

struct Split {
    blocks: Vec<Block>,
    free: usize,
    /// false if some equation is a nonzero constant
    consistent: bool,
}

impl AffineVariety {
    /// Groups the equations into classes connected by shared variables.
    fn split(&self) -> Split {
        let nv = self.num_vars();
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let mut consistent = true;
        let mut poly_vars = Vec::with_capacity(self.polys.len());
        for poly in &self.polys {
            let vars: Vec<usize> = (0..nv).filter(|&i| poly.iter().any(|t| t.exps[i] > 0)).collect();
            if vars.is_empty() && poly.iter().map(|t| t.coeff).sum::<u64>() % self.p != 0 {
                consistent = false;
            }
            for w in vars.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
            poly_vars.push(vars);
        }
        let used = self.used_vars();
        let mut blocks: Vec<Block> = Vec::new();
        let mut root_of_block: Vec<usize> = Vec::new();
        for &v in &used {
            let r = find(&mut parent, v);
            match root_of_block.iter().position(|&x| x == r) {
                Some(i) => blocks[i].vars.push(v),
                None => {
                    root_of_block.push(r);
                    blocks.push(Block { vars: vec![v], polys: vec![] });
                }
            }
        }
        for (i, vars) in poly_vars.iter().enumerate() {
            if let Some(&v) = vars.first() {
                let r = find(&mut parent, v);
                let b = root_of_block.iter().position(|&x| x == r).unwrap();
                blocks[b].polys.push(i);
            }
        }
        Split {
            blocks,
            free: nv - used.len(),
            consistent,
        }
    }
}

/// Product over blocks of the points of `domain^{vars}` satisfying the
/// block's equations, times `|domain|^{free}`.
fn count_split(x: &AffineVariety, split: &Split, field: &FiniteField, domain: &[u32], budget: u64) -> Result<BigInt> {
    if !split.consistent {
        return Ok(BigInt::zero());
    }
    for block in &split.blocks {
        enumeration_size(field.size() as u64, block.vars.len(), budget)?;
    }
    let mut total: BigInt = Pow::pow(BigInt::from(domain.len()), split.free);
    for block in &split.blocks {
        let compiled: Vec<CompiledPoly> = block
            .polys
            .iter()
            .map(|&i| CompiledPoly::compile(&x.polys[i], &block.vars, field))
            .collect();
        let count = enumerate(domain, block.vars.len(), |pt| compiled.iter().all(|c| c.vanishes(field, pt)));
        if count == 0 {
            return Ok(BigInt::zero());
        }
        total *= count;
    }
    Ok(total)
}

/// Points of `X(F_{p^m})` fixed by the `n`-th Frobenius iterate, under the
/// default budget.
pub fn frobenius_fixed_count(x: &AffineVariety, n: usize, m: usize) -> Result<BigInt> {
    frobenius_fixed_count_with_budget(x, n, m, DEFAULT_BUDGET)
}

/// Counts `P ∈ X(F_{p^m})` with `Fr^n(P) = P`, i.e. coordinates in the copy of
/// `F_{p^n}` inside `F_{p^m}`. The budget applies to `p^m` raised to the size
/// of each block of variables.
pub fn frobenius_fixed_count_with_budget(x: &AffineVariety, n: usize, m: usize, budget: u64) -> Result<BigInt> {
    if n == 0 || m == 0 || m % n != 0 {
        return Err(Error::NotDivisible { n: n as u32, m: m as u32 });
    }
    let split = x.split();
    let q_big = checked_pow(x.p, m as u32).unwrap_or(u64::MAX);
    for block in &split.blocks {
        enumeration_size(q_big, block.vars.len(), budget)?;
    }
    let big = make_field_with_budget(x.p, m, budget)?;
    let fixed: Vec<u32> = big.elements().filter(|&a| big.frobenius_iter(a, n) == a).collect();
    let small = make_field_with_budget(x.p, n, budget)?;
    let mut image = small.embed_into(&big)?;
    image.sort_unstable();
    debug_assert_eq!(image, fixed, "fixed field must be the embedded subfield");
    count_split(x, &split, &big, &fixed, budget)
}

/// `#X(F_{p^n})` for `n = 1..=order`.
pub fn point_count_table(x: &AffineVariety, order: usize, budget: u64) -> Result<PointCountTable> {
    let counts = (1..=order)
        .map(|n| count_points_with_budget(x, n, budget))
        .collect::<Result<_>>()?;
    Ok(PointCountTable { counts })
}

/// `exp(Σ #X(F_{p^n}) t^n / n)` under the default budget.
pub fn weil_zeta(x: &AffineVariety, order: usize) -> Result<WittElement> {
    weil_zeta_with_budget(x, order, DEFAULT_BUDGET)
}

pub fn weil_zeta_with_budget(x: &AffineVariety, order: usize, budget: u64) -> Result<WittElement> {
    let table = point_count_table(x, order, budget)?;
    let z = ghost_inverse(&GhostVector::from_ints(&table.counts));
    if !z.is_integral() {
        return Err(Error::IntegralityViolation("weil_zeta"));
    }
    Ok(z)
}

/// `X × Y` on disjoint variables.
pub fn product_variety(x: &AffineVariety, y: &AffineVariety) -> Result<AffineVariety> {
    if x.p != y.p {
        return Err(Error::invalid("product of varieties over different primes"));
    }
    let (nx, ny) = (x.num_vars(), y.num_vars());
    let mut vars: Vec<String> = x.vars.iter().map(|v| format!("{v}_1")).collect();
    vars.extend(y.vars.iter().map(|v| format!("{v}_2")));
    let lift = |poly: &Polynomial, offset: usize, width: usize| -> Polynomial {
        poly.iter()
            .map(|t| {
                let mut exps = vec![0; nx + ny];
                exps[offset..offset + width].copy_from_slice(&t.exps);
                Term { exps, coeff: t.coeff }
            })
            .collect()
    };
    let mut polys: Vec<Polynomial> = x.polys.iter().map(|p| lift(p, 0, nx)).collect();
    polys.extend(y.polys.iter().map(|p| lift(p, nx, ny)));
    Ok(AffineVariety { p: x.p, vars, polys })
}

/// Points of `X(F_{p^n})` violating at least one of `extra`, i.e.
/// `#(X − Y)` for `Y = X ∩ V(extra)`.
pub fn complement_count(x: &AffineVariety, extra: &[Polynomial], n: usize) -> Result<BigInt> {
    complement_count_with_budget(x, extra, n, DEFAULT_BUDGET)
}

pub fn complement_count_with_budget(x: &AffineVariety, extra: &[Polynomial], n: usize, budget: u64) -> Result<BigInt> {
    for t in extra.iter().flatten() {
        if t.exps.len() != x.num_vars() {
            return Err(Error::invalid("extra polynomial has the wrong number of variables"));
        }
    }
    let y = x.with_extra(extra);
    // enumerate over the variables either X or Y constrains
    let used = y.used_vars();
    let free = (x.num_vars() - used.len()) as u32;
    let q = checked_pow(x.p, n as u32).unwrap_or(u64::MAX);
    enumeration_size(q, used.len(), budget)?;
    if used.is_empty() {
        return Ok(count_points_with_budget(x, n, budget)? - count_points_with_budget(&y, n, budget)?);
    }
    let field = make_field_with_budget(x.p, n, budget)?;
    let base: Vec<CompiledPoly> = x.polys.iter().map(|p| CompiledPoly::compile(p, &used, &field)).collect();
    let cut: Vec<CompiledPoly> = extra.iter().map(|p| CompiledPoly::compile(p, &used, &field)).collect();
    let domain: Vec<u32> = field.elements().collect();
    let count = enumerate(&domain, used.len(), |pt| {
        base.iter().all(|c| c.vanishes(&field, pt)) && !cut.iter().all(|c| c.vanishes(&field, pt))
    });
    Ok(Pow::pow(BigInt::from(q), free) * count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::almkvist::w0_from_witt;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn circle() -> AffineVariety {
        AffineVariety::from_json(r#"{"p": 3, "vars": ["x","y"], "polys": [[[[2,0],1],[[0,2],1],[[0,0],-1]]]}"#).unwrap()
    }

    #[test]
    fn json_nestings() {
        let flat = AffineVariety::from_json(r#"{"p": 3, "vars": ["x","y"], "polys": [[[2,0],1],[[0,2],1],[[0,0],-1]]}"#).unwrap();
        assert_eq!(flat, circle());
        let back = AffineVariety::from_value(&circle().to_json()).unwrap();
        assert_eq!(back, circle());
        assert!(AffineVariety::from_json(r#"{"p": 4, "num_vars": 1}"#).is_err());
        assert!(AffineVariety::from_json(r#"{"p": 3, "vars": ["x"], "polys": [[[[1,1],1]]]}"#).is_err());
    }

    #[test]
    fn count_examples() {
        let a1 = AffineVariety::affine_space(2, 1).unwrap();
        for n in 1..6 {
            assert_eq!(count_points(&a1, n).unwrap(), b(1 << n));
        }
        assert_eq!(count_points(&AffineVariety::multiplicative_group(3).unwrap(), 2).unwrap(), b(8));
        assert_eq!(count_points(&circle(), 1).unwrap(), b(4));
    }

    #[test]
    fn count_matches_naive_prime_field_oracle() {
        // x^3 + 2y^2 + xy - 1 over F_7 by integer arithmetic
        let x = AffineVariety::with_anonymous_vars(7, 2, vec![vec![(vec![3, 0], 1), (vec![0, 2], 2), (vec![1, 1], 1), (vec![0, 0], -1)]]).unwrap();
        let naive = (0..7i64)
            .flat_map(|a| (0..7i64).map(move |c| (a, c)))
            .filter(|&(a, c)| (a * a * a + 2 * c * c + a * c - 1).rem_euclid(7) == 0)
            .count();
        assert_eq!(count_points(&x, 1).unwrap(), b(naive as i64));
    }

    #[test]
    fn frobenius_examples() {
        let a1 = AffineVariety::affine_space(2, 1).unwrap();
        assert_eq!(frobenius_fixed_count(&a1, 1, 2).unwrap(), b(2));
        let gm = AffineVariety::multiplicative_group(3).unwrap();
        assert_eq!(frobenius_fixed_count(&gm, 1, 2).unwrap(), b(2));
        assert_eq!(frobenius_fixed_count(&circle(), 2, 2).unwrap(), count_points(&circle(), 2).unwrap());
        assert!(matches!(frobenius_fixed_count(&gm, 2, 3), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn zeta_examples() {
        let z = weil_zeta(&AffineVariety::affine_space(3, 1).unwrap(), 6).unwrap();
        assert_eq!(z, WittElement::geometric(&b(3), 6));
        let z = weil_zeta(&AffineVariety::multiplicative_group(3).unwrap(), 6).unwrap();
        let w = w0_from_witt(&z, 2).unwrap().unwrap();
        assert_eq!(w.to_string(), "(1-t)/(1-3t)");
        let point = AffineVariety::with_anonymous_vars(5, 1, vec![vec![(vec![1], 1)]]).unwrap();
        assert_eq!(weil_zeta(&point, 5).unwrap(), WittElement::one(5));
    }

    #[test]
    fn product_and_complement() {
        let a1 = AffineVariety::affine_space(3, 1).unwrap();
        let a2 = product_variety(&a1, &a1).unwrap();
        assert_eq!(count_points(&a2, 2).unwrap(), b(81));
        let x = AffineVariety::affine_space(5, 1).unwrap();
        let origin = vec![Term { exps: vec![1], coeff: 1 }];
        assert_eq!(complement_count(&x, &[origin], 1).unwrap(), b(4));
        let c = circle();
        assert_eq!(complement_count(&c, c.polys(), 1).unwrap(), b(0));
    }

    #[test]
    fn budget_enforced() {
        let gm = AffineVariety::multiplicative_group(2).unwrap();
        assert!(matches!(count_points_with_budget(&gm, 6, 1000), Err(Error::BudgetExceeded { .. })));
        // free variables are not enumerated
        let a3 = AffineVariety::affine_space(2, 3).unwrap();
        assert_eq!(count_points_with_budget(&a3, 20, 10).unwrap(), BigInt::from(2).pow(60u32));
        // independent blocks are enumerated separately
        let gm2 = product_variety(&gm, &gm).unwrap();
        assert_eq!(count_points_with_budget(&gm2, 6, 5000).unwrap(), b(63 * 63));
        let empty = AffineVariety::with_anonymous_vars(3, 2, vec![vec![(vec![1, 0], 1)], vec![(vec![0, 0], 2)]]).unwrap();
        assert_eq!(count_points(&empty, 2).unwrap(), b(0));
    }
}
