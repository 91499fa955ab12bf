//! Discrete dynamical systems and homology actions: fixed-point counts,
//! Artin-Mazur zeta functions, quasi-unipotence, and the Witt and Hadamard
//! invariants of a Morse-Smale homology action.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::Value;

use crate::almkvist::{l_map, tr_map, w0_from_matrix};
use crate::error::{Error, Result};
use crate::exact::{cyclotomic, IntMatrix, IntPoly};
use crate::exact::cyclotomic::indices_up_to_degree;
use crate::hadamard::LinRecSeq;
use crate::witt::{adams, ghost_inverse, GhostVector, WittElement};

/// A self-map of `{0, ..., size-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteDynSystem {
    map: Vec<usize>,
}

impl FiniteDynSystem {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        if let Some(bad) = map.iter().find(|&&v| v >= n) {
            return Err(Error::invalid(format!("map value {bad} out of range for {n} points")));
        }
        Ok(FiniteDynSystem { map })
    }

    pub fn identity(size: usize) -> Self {
        FiniteDynSystem { map: (0..size).collect() }
    }

    /// `i ↦ i + 1 mod len`.
    pub fn cycle(len: usize) -> Self {
        FiniteDynSystem {
            map: (0..len).map(|i| (i + 1) % len).collect(),
        }
    }

    /// Disjoint cycles of the given lengths, laid out consecutively.
    pub fn from_cycle_type(lengths: &[usize]) -> Self {
        let mut map = Vec::new();
        for &l in lengths {
            let base = map.len();
            map.extend((0..l).map(|i| base + (i + 1) % l));
        }
        FiniteDynSystem { map }
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn iterate(&self, x: usize, n: usize) -> usize {
        (0..n).fold(x, |y, _| self.map[y])
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.size()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// Cycle lengths in order of smallest member, if the map is a bijection.
    pub fn cycle_lengths(&self) -> Option<Vec<usize>> {
        if !self.is_permutation() {
            return None;
        }
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.map[x];
                len += 1;
            }
            out.push(len);
        }
        Some(out)
    }

    pub fn is_invariant(&self, subset: &[usize]) -> bool {
        let mut inside = vec![false; self.size()];
        for &x in subset {
            inside[x] = true;
        }
        subset.iter().all(|&x| inside[self.map[x]])
    }

    /// The restriction to an invariant subset, relabeled in the order given.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        let mut label = vec![usize::MAX; self.size()];
        for (i, &x) in subset.iter().enumerate() {
            if x >= self.size() || label[x] != usize::MAX {
                return Err(Error::invalid("subset must list distinct points"));
            }
            label[x] = i;
        }
        if !self.is_invariant(subset) {
            return Err(Error::invalid("subset is not invariant"));
        }
        Ok(FiniteDynSystem {
            map: subset.iter().map(|&x| label[self.map[x]]).collect(),
        })
    }

    /// `φ ∘ f ∘ φ^{-1}` for a bijection `φ` given as an image list.
    pub fn conjugate(&self, phi: &[usize]) -> Result<Self> {
        let n = self.size();
        let mut inv = vec![usize::MAX; n];
        if phi.len() != n {
            return Err(Error::invalid("relabeling has the wrong size"));
        }
        for (i, &v) in phi.iter().enumerate() {
            if v >= n || inv[v] != usize::MAX {
                return Err(Error::invalid("relabeling is not a bijection"));
            }
            inv[v] = i;
        }
        Ok(FiniteDynSystem {
            map: (0..n).map(|y| phi[self.map[inv[y]]]).collect(),
        })
    }
}

/// `#Fix(f^n)`.
pub fn fix_count(s: &FiniteDynSystem, n: usize) -> u64 {
    fix_count_in(s, &(0..s.size()).collect::<Vec<_>>(), n)
}

/// Fixed points of `f^n` lying in `subset`.
pub fn fix_count_in(s: &FiniteDynSystem, subset: &[usize], n: usize) -> u64 {
    assert!(n >= 1, "iterate index must be positive");
    subset.par_iter().filter(|&&x| s.iterate(x, n) == x).count() as u64
}

/// `exp(Σ #Fix(f^n) t^n / n)`.
pub fn am_zeta(s: &FiniteDynSystem, order: usize) -> WittElement {
    let counts: Vec<BigInt> = (1..=order).map(|n| fix_count(s, n).into()).collect();
    ghost_inverse(&GhostVector::from_ints(&counts))
}

/// `(x, y) ↦ (f x, g y)` on `size(s) · size(t)` points, `(i, j)` at `i·size(t) + j`.
pub fn product_system(s: &FiniteDynSystem, t: &FiniteDynSystem) -> FiniteDynSystem {
    let m = t.size();
    FiniteDynSystem {
        map: (0..s.size() * m)
            .map(|k| s.map[k / m] * m + t.map[k % m])
            .collect(),
    }
}

/// Cyclotomic indices (with multiplicity) whose product is the characteristic
/// polynomial of `m` with its `x^k` factor removed, if it factors so.
pub fn cyclotomic_factorization(m: &IntMatrix) -> Option<Vec<u64>> {
    let mut rest = m.char_poly().strip_x();
    let mut found = Vec::new();
    let deg = rest.degree().unwrap_or(0) as u64;
    for j in indices_up_to_degree(deg) {
        let phi = cyclotomic(j);
        loop {
            if rest.degree().unwrap_or(0) < phi.degree().unwrap_or(0) {
                break;
            }
            let (q, r) = rest.div_rem_monic(&phi);
            if !r.is_zero() {
                break;
            }
            rest = q;
            found.push(j);
        }
    }
    rest.is_one().then_some(found)
}

/// All eigenvalues of `m` are zero or roots of unity.
pub fn is_quasi_unipotent(m: &IntMatrix) -> bool {
    cyclotomic_factorization(m).is_some()
}

/// The matrices `M_k` by which a map acts on `H_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HomologyAction {
    pub matrices: Vec<IntMatrix>,
}

impl HomologyAction {
    pub fn new(matrices: Vec<IntMatrix>) -> Self {
        HomologyAction { matrices }
    }

    /// Parses `{"matrices": [[[1]], [[0,-1],[1,0]]]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::invalid(format!("homology JSON: {e}")))?;
        let list = v
            .get("matrices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::invalid("homology JSON needs a \"matrices\" list"))?;
        let matrices = list.iter().map(matrix_from_value).collect::<Result<_>>()?;
        Ok(Self::new(matrices))
    }

    fn warnings(&self) -> Vec<String> {
        self.matrices
            .iter()
            .enumerate()
            .filter(|(_, m)| !is_quasi_unipotent(m))
            .map(|(k, m)| format!("M_{k} = {m} is not quasi-unipotent"))
            .collect()
    }
}

/// A square integer matrix from a JSON list of rows.
pub fn matrix_from_value(v: &Value) -> Result<IntMatrix> {
    let rows = v.as_array().ok_or_else(|| Error::invalid("matrix must be a list of rows"))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::invalid("matrix row must be a list"))?
                .iter()
                .map(|e| parse_int(e).ok_or_else(|| Error::invalid(format!("bad matrix entry {e}"))))
                .collect::<Result<Vec<BigInt>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_rows(rows)
}

fn parse_int(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

/// Generator `L(M_k)` and its Adams images for one homology degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WittInvariant {
    pub degree: usize,
    pub generator: WittElement,
    /// `Ψ_2, Ψ_3, Ψ_4` of the generator, each to the generator's order.
    pub adams_images: Vec<WittElement>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MorseSmaleWitt {
    pub invariants: Vec<WittInvariant>,
    pub warnings: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MorseSmaleHadamard {
    pub sequences: Vec<LinRecSeq>,
    pub warnings: Vec<String>,
}

/// Highest Adams index sampled for the lambda-closure.
pub const ADAMS_SAMPLE: usize = 4;

/// Generators `L([H_k, M_k])` of the Witt invariant with Adams images.
pub fn morse_smale_witt(h: &HomologyAction, order: usize) -> Result<MorseSmaleWitt> {
    let invariants = h
        .matrices
        .iter()
        .enumerate()
        .map(|(k, m)| {
            let w = w0_from_matrix(m);
            let adams_images = (2..=ADAMS_SAMPLE)
                .map(|n| adams(&l_map(&w, order * n), n))
                .collect::<Result<_>>()?;
            Ok(WittInvariant {
                degree: k,
                generator: l_map(&w, order),
                adams_images,
            })
        })
        .collect::<Result<_>>()?;
    Ok(MorseSmaleWitt {
        invariants,
        warnings: h.warnings(),
    })
}

/// Generators `Tr([H_k, M_k])` of the Hadamard invariant.
pub fn morse_smale_hadamard(h: &HomologyAction, count: usize) -> Result<MorseSmaleHadamard> {
    let sequences = h
        .matrices
        .iter()
        .map(|m| tr_map(&w0_from_matrix(m), count))
        .collect::<Result<_>>()?;
    Ok(MorseSmaleHadamard {
        sequences,
        warnings: h.warnings(),
    })
}

/// `lcm` of the cyclotomic indices of a quasi-unipotent matrix: a period of
/// its trace sequence when it is also invertible.
pub fn predicted_period(m: &IntMatrix) -> Option<u64> {
    let idx = cyclotomic_factorization(m)?;
    Some(idx.iter().fold(1, |acc, &j| num_integer::lcm(acc, j)))
}

/// Characteristic polynomial with its `x^k` factor removed.
pub fn reduced_char_poly(m: &IntMatrix) -> IntPoly {
    m.char_poly().strip_x()
}
