//! Code-level analysis of idempotent-generated group codes: exact dimension
//! through the rank oracle, exact minimum Hamming distance by full codeword
//! enumeration, rational lower bounds, dimension congruence sets, and
//! arithmetic non-primitivity tests.
//!
//! Distance enumeration walks every nonzero coefficient tuple of a row-space
//! basis in lexicographic order with shared prefix sums, tracking the
//! current minimum and nothing else; the candidate budget is the only
//! guard.  The loop is parallelized over leading-coefficient strata with a
//! deterministic min-merge, so results never depend on thread count.

use crate::algebra::{self, AlgebraElement};
use crate::arith::Ratio;
use crate::classify::{ClassificationReport, WedderburnData};
use crate::cyclotomic::witness_orbit_size;
use crate::field::{FMatrix, FiniteField};
use crate::group::Group;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on the number of codewords a distance enumeration may visit,
/// and on the number of candidate vectors an idempotent search may test.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodesError {
    #[error("the zero element generates the zero code")]
    ZeroCode,
    #[error("enumeration needs {required} candidates, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("the element is not an idempotent")]
    NotIdempotent,
    #[error("the congruence set is defined for idempotents other than 0 and 1")]
    TrivialIdempotent,
    #[error("congruence set is empty: no dimension r + kp fits 1 <= dim <= |H| - 1")]
    InconsistentCongruence,
    #[error("bound parameter a = {a} is below max(t_w, max n_j d_j) = {needed}")]
    InadmissibleBound { a: u64, needed: u64 },
    #[error("parts {0} and {1} are not orthogonal")]
    OrthogonalityViolated(usize, usize),
    #[error("an ECD/ECID classification certificate is required")]
    MissingCertificate,
    #[error("dimension formula gives {formula} but the rank oracle gives {rank}")]
    DimensionMismatch { formula: u64, rank: u64 },
    #[error("the group algebra is semisimple here (p does not divide |H|)")]
    SemisimpleContext,
    #[error("the group algebra is not semisimple here (p divides |H|)")]
    ModularContext,
    #[error("the group must be abelian for this bound")]
    NotAbelian,
    #[error(transparent)]
    Algebra(#[from] algebra::AlgebraError),
}

// ---------------------------------------------------------------------------
// Report vocabulary

/// A lower bound on the minimum distance, kept as an exact rational and
/// tagged with the rule that produced it.  `assumes_primitive` marks bounds
/// that are only valid when the generating idempotent is primitive;
/// `conditions` names the arithmetic hypotheses that licensed the bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub value: Ratio,
    pub rule: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub assumes_primitive: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrimitivityVerdict {
    Primitive,
    NotPrimitive,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Primitivity {
    pub verdict: PrimitivityVerdict,
    pub justification: String,
}

impl Primitivity {
    fn unknown(reason: &str) -> Primitivity {
        Primitivity {
            verdict: PrimitivityVerdict::Unknown,
            justification: reason.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DimMethod {
    RankOracle,
    DimensionFormula,
    CongruenceSet,
}

/// Candidate dimensions r + kp from the congruence dim = |H| lambda_1(e)
/// mod p, with the distance bound |H|/(r + kp) attached to each candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceSet {
    pub residue: u64,
    pub candidates: Vec<u64>,
    pub bounds: Vec<Bound>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceOutcome {
    Exact(u64),
    BoundsOnly,
}

/// Full analysis of one idempotent-generated code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    /// Coefficient vectors of the generating element (one list per group
    /// element, constant term first).
    pub element: Vec<Vec<u64>>,
    /// Whether the element was verified idempotent (None = too large to
    /// check).
    pub idempotent: Option<bool>,
    pub dim: Option<u64>,
    pub dim_method: DimMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub congruence: Option<CongruenceSet>,
    pub distance: DistanceOutcome,
    pub bounds: Vec<Bound>,
    pub primitivity: Primitivity,
}

// ---------------------------------------------------------------------------
// Exact minimum distance

/// Exact minimum Hamming distance of the left ideal generated by `e`,
/// by full enumeration of the q^dim codewords.  Fails when e = 0 or when
/// q^dim exceeds the budget.
pub fn min_distance_exact(e: &AlgebraElement, budget: u64) -> Result<u64, CodesError> {
    if e.is_zero() {
        return Err(CodesError::ZeroCode);
    }
    let basis = e.right_mul_matrix().row_basis();
    min_weight_of_row_space(&basis, budget)
}

/// Minimum weight of the row space of a basis matrix (rows must be linearly
/// independent, as produced by row echelon reduction).
pub fn min_weight_of_row_space(basis: &FMatrix, budget: u64) -> Result<u64, CodesError> {
    let k = basis.rows();
    if k == 0 {
        return Err(CodesError::ZeroCode);
    }
    let q = basis.field().q();
    let required = (q as u128)
        .checked_pow(k as u32)
        .unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(CodesError::BudgetExceeded {
            required,
            budget,
        });
    }
    let ctx = basis.field().scalar();
    let n = basis.cols();
    // Scaled rows c * row_i for every coefficient value; the enumeration
    // then only ever adds precomputed vectors.
    let scaled: Vec<Vec<Vec<u64>>> = (0..k)
        .map(|i| {
            (0..q)
                .map(|c| ctx.scaled_row(basis.row_codes(i), c))
                .collect()
        })
        .collect();
    let best = match ctx.add_table() {
        Some((table, tq)) => enumerate_min_weight(
            move |a, b| table[a as usize * tq + b as usize] as u64,
            k,
            q,
            n,
            &scaled,
        ),
        None => enumerate_min_weight(move |a, b| ctx.add(a, b), k, q, n, &scaled),
    };
    Ok(best)
}

/// Lexicographic enumeration with shared prefix sums, parallel over the
/// first coefficient.  `add` is the field addition on element codes.
fn enumerate_min_weight<F>(add: F, k: usize, q: u64, n: usize, scaled: &[Vec<Vec<u64>>]) -> u64
where
    F: Fn(u64, u64) -> u64 + Sync + Copy,
{
    if k == 1 {
        let mut best = u64::MAX;
        for c in 1..q {
            let w = scaled[0][c as usize].iter().filter(|&&x| x != 0).count() as u64;
            best = best.min(w);
        }
        return best;
    }
    let threads = std::thread::available_parallelism()
        .map(|t| t.get())
        .unwrap_or(1)
        .min(8)
        .min(q as usize);
    let stratum = |c0: u64| -> u64 { enumerate_stratum(add, c0, k, q, n, scaled) };
    if threads <= 1 {
        (0..q).map(stratum).fold(u64::MAX, u64::min)
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    scope.spawn(move || {
                        let mut best = u64::MAX;
                        let mut c0 = t as u64;
                        while c0 < q {
                            best = best.min(stratum(c0));
                            c0 += threads as u64;
                        }
                        best
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration thread"))
                .fold(u64::MAX, u64::min)
        })
    }
}

/// One stratum: the first coefficient is fixed at c0, the remaining k-1
/// coefficients run through all values (the last one in the innermost
/// loop, weights accumulated in a single pass).
fn enumerate_stratum<F>(add: F, c0: u64, k: usize, q: u64, n: usize, scaled: &[Vec<Vec<u64>>]) -> u64
where
    F: Fn(u64, u64) -> u64 + Copy,
{
    debug_assert!(k >= 2);
    let mids = k - 2;
    let mut best = u64::MAX;
    // digits[m] is the coefficient at overall position m + 1
    let mut digits = vec![0u64; mids];
    // prefixes[j] = sum over positions 0..=j of the scaled rows, j <= k-2
    let mut prefixes: Vec<Vec<u64>> = Vec::with_capacity(k - 1);
    prefixes.push(scaled[0][c0 as usize].clone());
    for _ in 0..mids {
        let prev = prefixes.last().unwrap().clone(); // middle digits start at 0
        prefixes.push(prev);
    }
    loop {
        let prefix_zero = c0 == 0 && digits.iter().all(|&d| d == 0);
        {
            let base = &prefixes[k - 2];
            for c in 0..q {
                if c == 0 && prefix_zero {
                    continue; // the all-zero tuple is not a codeword
                }
                let srow = &scaled[k - 1][c as usize];
                let mut w = 0u64;
                for t in 0..n {
                    if add(base[t], srow[t]) != 0 {
                        w += 1;
                    }
                }
                if w < best {
                    best = w;
                }
            }
        }
        // Odometer over the middle digits, rightmost fastest.
        let mut m = mids;
        loop {
            if m == 0 {
                return best;
            }
            m -= 1;
            digits[m] += 1;
            if digits[m] < q {
                break;
            }
            digits[m] = 0;
        }
        // Rebuild the prefix chain from the changed position onward.
        for j in m..mids {
            let (left, right) = prefixes.split_at_mut(j + 1);
            let prev = &left[j];
            let cur = &mut right[0];
            let row = &scaled[j + 1][digits[j] as usize];
            for t in 0..n {
                cur[t] = add(prev[t], row[t]);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Bounds

/// The bound chain for a minimal abelian code: the totient product
/// prod p_i/(p_i - 1), the orbit bound |G|/t_w, and (when one of the
/// minimal-ECD conditions holds) the dimension-formula bound
/// |G|/D(|G| lambda_1(e)), plus |G|/p under the totient condition.
/// All of these assume the generating idempotent is primitive.
pub fn abelian_bounds(e: &AlgebraElement) -> Result<Vec<Bound>, CodesError> {
    let group = e.group();
    let field = e.field();
    if !group.is_abelian() {
        return Err(CodesError::NotAbelian);
    }
    let n = group.order() as u64;
    let p = field.p();
    if n % p == 0 {
        return Err(CodesError::ModularContext);
    }
    let q = field.prime_power();
    let (exponent, _) = group.exponent();
    let t_w = witness_orbit_size(exponent, q);
    let phi = crate::arith::euler_phi(exponent);
    let mut bounds = Vec::new();
    let mut totient = Ratio::from_int(1);
    let mut m = n;
    let mut prime = 2u64;
    while m > 1 {
        if m % prime == 0 {
            totient = totient.mul(&Ratio::new(prime, prime - 1));
            while m % prime == 0 {
                m /= prime;
            }
        }
        prime += 1;
    }
    bounds.push(Bound {
        value: totient,
        rule: "totient-ratio".into(),
        assumes_primitive: true,
        conditions: vec![],
    });
    bounds.push(Bound {
        value: Ratio::new(n, t_w),
        rule: "order-over-max-orbit".into(),
        assumes_primitive: true,
        conditions: vec![],
    });
    let mut conditions = Vec::new();
    if t_w <= p {
        conditions.push("max-orbit-dim".to_string());
        conditions.push("splitting-index".to_string());
    }
    if phi <= p {
        conditions.push("totient-exponent".to_string());
    }
    if !conditions.is_empty() {
        let r = e.identity_residue()?;
        let d = algebra::dimension_formula_d(r, p);
        bounds.push(Bound {
            value: Ratio::new(n, d),
            rule: "order-over-dimension-formula".into(),
            assumes_primitive: true,
            conditions: conditions.clone(),
        });
        if phi <= p {
            bounds.push(Bound {
                value: Ratio::new(n, p),
                rule: "order-over-char".into(),
                assumes_primitive: true,
                conditions: vec!["totient-exponent".to_string()],
            });
        }
    }
    Ok(bounds)
}

// ---------------------------------------------------------------------------
// Non-primitivity tests

/// Abelian semisimple test: a distance below |G|/t_w rules out primitivity.
pub fn nonprimitivity_test_abelian(f: &AlgebraElement, d: u64) -> Result<Primitivity, CodesError> {
    let group = f.group();
    let field = f.field();
    if !group.is_abelian() {
        return Err(CodesError::NotAbelian);
    }
    let n = group.order() as u64;
    if n % field.p() == 0 {
        return Err(CodesError::ModularContext);
    }
    let t_w = witness_orbit_size(group.exponent().0, field.prime_power());
    if d * t_w < n {
        Ok(Primitivity {
            verdict: PrimitivityVerdict::NotPrimitive,
            justification: format!("d = {d} < |G|/t_w = {}", Ratio::new(n, t_w)),
        })
    } else {
        Ok(Primitivity::unknown("distance does not contradict primitivity"))
    }
}

/// Semisimple test: with a >= max(t_w, max n_j d_j), a distance below |H|/a
/// rules out primitivity.  Over a splitting field a = max n_j is admissible.
pub fn nonprimitivity_test_semisimple(
    h: &Group,
    field: &FiniteField,
    wd: &WedderburnData,
    a: u64,
    d: u64,
) -> Result<Primitivity, CodesError> {
    let n = h.order() as u64;
    if n % field.p() == 0 {
        return Err(CodesError::ModularContext);
    }
    let (_, quotient) = h.commutator_subgroup();
    let t_w = witness_orbit_size(quotient.exponent().0, field.prime_power());
    let needed = t_w.max(wd.max_component_dim());
    if a < needed {
        return Err(CodesError::InadmissibleBound { a, needed });
    }
    if d * a < n {
        Ok(Primitivity {
            verdict: PrimitivityVerdict::NotPrimitive,
            justification: format!("d = {d} < |H|/a = {}", Ratio::new(n, a)),
        })
    } else {
        Ok(Primitivity::unknown("distance does not contradict primitivity"))
    }
}

/// Modular test: in a certified ECID algebra a distance below |H|/p rules
/// out primitivity.
pub fn nonprimitivity_test_modular(
    h: &Group,
    field: &FiniteField,
    d: u64,
    certificate: &ClassificationReport,
) -> Result<Primitivity, CodesError> {
    let n = h.order() as u64;
    let p = field.p();
    if n % p != 0 {
        return Err(CodesError::SemisimpleContext);
    }
    if !certificate.verdict.is_certified_ecd() {
        return Err(CodesError::MissingCertificate);
    }
    if d * p < n {
        Ok(Primitivity {
            verdict: PrimitivityVerdict::NotPrimitive,
            justification: format!("d = {d} < |H|/p = {}", Ratio::new(n, p)),
        })
    } else {
        Ok(Primitivity::unknown("distance does not contradict primitivity"))
    }
}

// ---------------------------------------------------------------------------
// Dimension congruence

/// The set of dimensions compatible with dim = |H| lambda_1(e) mod p for a
/// nonzero, non-identity idempotent: {r + kp} clipped to 1 <= dim <= |H|-1,
/// each with its distance bound |H|/(r + kp).
pub fn dimension_congruence_set(e: &AlgebraElement) -> Result<CongruenceSet, CodesError> {
    if e.is_zero() || e.is_one() {
        return Err(CodesError::TrivialIdempotent);
    }
    if !e.is_idempotent() {
        return Err(CodesError::NotIdempotent);
    }
    let n = e.group().order() as u64;
    let p = e.field().p();
    let r = e.identity_residue()?;
    let mut candidates = Vec::new();
    if r < n {
        let kmax = (n - (r + 1)) / p;
        for k in 0..=kmax {
            let dim = r + k * p;
            if dim >= 1 {
                candidates.push(dim);
            }
        }
    }
    if candidates.is_empty() {
        return Err(CodesError::InconsistentCongruence);
    }
    let bounds = candidates
        .iter()
        .map(|&dim| Bound {
            value: Ratio::new(n, dim),
            rule: "order-over-congruence-dim".into(),
            assumes_primitive: false,
            conditions: vec![format!("dim = {dim}")],
        })
        .collect();
    Ok(CongruenceSet {
        residue: r,
        candidates,
        bounds,
    })
}

// ---------------------------------------------------------------------------
// ECID dimension sums

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EcidDimensionSum {
    pub dim: u64,
    pub bound: Ratio,
}

const RANK_CROSS_CHECK_LIMIT: usize = 512;

/// Dimension of the code generated by a sum of pairwise orthogonal
/// primitive idempotents in a certified ECID algebra: the sum of the
/// residues r_i with zeros replaced by p, and the bound |H|/dim.
/// Orthogonality is checked by multiplication; the formula is cross-checked
/// against the rank oracle when the group is small enough.
pub fn ecid_dimension_sum(
    parts: &[AlgebraElement],
    certificate: &ClassificationReport,
) -> Result<EcidDimensionSum, CodesError> {
    if !certificate.verdict.is_certified_ecd() {
        return Err(CodesError::MissingCertificate);
    }
    let first = parts.first().ok_or(CodesError::ZeroCode)?;
    let n = first.group().order() as u64;
    let p = first.field().p();
    for (i, a) in parts.iter().enumerate() {
        for (j, b) in parts.iter().enumerate().skip(i + 1) {
            if !a.alg_mul(b)?.is_zero() || !b.alg_mul(a)?.is_zero() {
                return Err(CodesError::OrthogonalityViolated(i, j));
            }
        }
    }
    let mut dim = 0u64;
    for part in parts {
        let r = part.identity_residue()?;
        dim += if r == 0 { p } else { r };
    }
    if first.group().order() <= RANK_CROSS_CHECK_LIMIT {
        let mut sum = parts[0].clone();
        for part in &parts[1..] {
            sum = sum.add(part)?;
        }
        let rank = sum.ideal_dimension() as u64;
        if rank != dim {
            return Err(CodesError::DimensionMismatch { formula: dim, rank });
        }
    }
    Ok(EcidDimensionSum {
        dim,
        bound: Ratio::new(n, dim),
    })
}

// ---------------------------------------------------------------------------
// Exhaustive idempotent search

#[derive(Debug, Clone)]
pub struct IdempotentEntry {
    pub element: AlgebraElement,
    pub dim: u64,
    pub primitive: bool,
}

/// Census of every idempotent of F_q H, with ideal dimensions and exact
/// primitivity flags.  Entries are sorted by (dimension, coefficient codes).
#[derive(Debug, Clone)]
pub struct IdempotentSearch {
    pub entries: Vec<IdempotentEntry>,
}

impl IdempotentSearch {
    pub fn primitives(&self) -> impl Iterator<Item = &IdempotentEntry> {
        self.entries.iter().filter(|e| e.primitive)
    }

    pub fn position_of(&self, e: &AlgebraElement) -> Option<usize> {
        self.entries.iter().position(|entry| entry.element == *e)
    }

    /// Greedy decomposition of an idempotent into pairwise orthogonal
    /// primitive idempotents from the census; returns entry indices.
    pub fn decompose_into_primitives(&self, e: &AlgebraElement) -> Option<Vec<usize>> {
        let mut rest = e.clone();
        let mut parts = Vec::new();
        while !rest.is_zero() {
            let pick = self.entries.iter().position(|f| {
                f.primitive
                    && f.element.alg_mul(&rest).map(|x| x == f.element).unwrap_or(false)
                    && rest.alg_mul(&f.element).map(|x| x == f.element).unwrap_or(false)
            })?;
            rest = rest.sub(&self.entries[pick].element).ok()?;
            parts.push(pick);
        }
        Some(parts)
    }
}

/// Enumerates all q^|H| coefficient vectors (within the candidate budget),
/// keeps the idempotents, and flags each as primitive or not: e != 0 is
/// primitive iff no idempotent f outside {0, e} satisfies fe = ef = f.
pub fn idempotent_search(
    group: &Group,
    field: &FiniteField,
    budget: u64,
) -> Result<IdempotentSearch, CodesError> {
    let n = group.order();
    let q = field.q();
    let required = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(CodesError::BudgetExceeded { required, budget });
    }
    let ctx = field.scalar();
    // j_of[k][i] = index j with g_i * g_j = g_k
    let j_of: Vec<Vec<usize>> = (0..n)
        .map(|k| (0..n).map(|i| group.mul(group.inv(i), k)).collect())
        .collect();
    let mut idempotents: Vec<Vec<u64>> = Vec::new();
    let mut cand = vec![0u64; n];
    'outer: loop {
        // idempotency with per-coordinate early exit:
        // (e^2)_k = sum over i of e_i * e_{i^-1 k}
        let mut is_idem = true;
        for k in 0..n {
            let mut acc = 0u64;
            let jk = &j_of[k];
            for i in 0..n {
                let ei = cand[i];
                if ei == 0 {
                    continue;
                }
                let ej = cand[jk[i]];
                if ej == 0 {
                    continue;
                }
                acc = ctx.add(acc, ctx.mul(ei, ej));
            }
            if acc != cand[k] {
                is_idem = false;
                break;
            }
        }
        if is_idem {
            idempotents.push(cand.clone());
        }
        // odometer
        let mut pos = 0usize;
        loop {
            if pos == n {
                break 'outer;
            }
            cand[pos] += 1;
            if cand[pos] < q {
                break;
            }
            cand[pos] = 0;
            pos += 1;
        }
    }
    // dimensions
    let mut entries: Vec<IdempotentEntry> = idempotents
        .into_iter()
        .map(|codes| {
            let element = AlgebraElement::from_codes(field, group, codes);
            let dim = element.ideal_dimension() as u64;
            IdempotentEntry {
                element,
                dim,
                primitive: false,
            }
        })
        .collect();
    entries.sort_by(|a, b| (a.dim, a.element.codes()).cmp(&(b.dim, b.element.codes())));
    // primitivity: f <= e with f outside {0, e} forces 0 < dim f < dim e
    for idx in 0..entries.len() {
        if entries[idx].dim == 0 {
            continue; // the zero idempotent is not primitive
        }
        let e = &entries[idx].element;
        let mut dominated = false;
        for candidate in &entries {
            if candidate.dim == 0 || candidate.dim >= entries[idx].dim {
                continue;
            }
            let f = &candidate.element;
            if f.alg_mul(e).unwrap() == *f && e.alg_mul(f).unwrap() == *f {
                dominated = true;
                break;
            }
        }
        entries[idx].primitive = !dominated;
    }
    Ok(IdempotentSearch { entries })
}

// ---------------------------------------------------------------------------
// Full analysis

/// Context shared by code analyses: an optional classification certificate
/// for the ambient algebra, optional Wedderburn data, and the enumeration
/// budget.
#[derive(Debug, Clone, Copy)]
pub struct AnalysisContext<'a> {
    pub classification: Option<&'a ClassificationReport>,
    pub wedderburn: Option<&'a WedderburnData>,
    pub budget: u64,
    /// Largest group order for which the rank oracle (and the idempotency
    /// check) is run; above it the analysis falls back to the dimension
    /// formula or the congruence set.
    pub rank_limit: usize,
}

impl<'a> Default for AnalysisContext<'a> {
    fn default() -> Self {
        AnalysisContext {
            classification: None,
            wedderburn: None,
            budget: DEFAULT_BUDGET,
            rank_limit: 2048,
        }
    }
}

/// Analyze the code generated by one element: dimension (rank oracle when
/// feasible, dimension formula in a certified ECD context otherwise),
/// congruence set, exact distance when the budget allows, bounds, and a
/// primitivity verdict with its justification.
pub fn analyze_code(e: &AlgebraElement, actx: &AnalysisContext) -> Result<CodeReport, CodesError> {
    let group = e.group().clone();
    let field = e.field().clone();
    let n = group.order();
    let p = field.p();
    let q = field.q();
    let semisimple = n as u64 % p != 0;
    let small = n <= actx.rank_limit;
    let idempotent = if small { Some(e.is_idempotent()) } else { None };
    let certified = actx
        .classification
        .map(|c| c.verdict.is_certified_ecd())
        .unwrap_or(false);

    // dimension
    let (dim, dim_method) = if small {
        (Some(e.ideal_dimension() as u64), DimMethod::RankOracle)
    } else if certified && idempotent != Some(false) {
        let r = e.identity_residue()?;
        (
            Some(algebra::dimension_formula_d(r, p)),
            DimMethod::DimensionFormula,
        )
    } else {
        (None, DimMethod::CongruenceSet)
    };
    // Cross-check: in a certified ECD context the fast formula must agree
    // with the rank oracle whenever both apply.
    if certified && idempotent == Some(true) {
        if let (Some(d), DimMethod::RankOracle) = (dim, dim_method) {
            if d <= p {
                let formula = algebra::dimension_formula_d(e.identity_residue()?, p);
                if formula != d {
                    return Err(CodesError::DimensionMismatch { formula, rank: d });
                }
            }
        }
    }

    // congruence set
    let congruence = if idempotent == Some(true) && !e.is_zero() && !e.is_one() {
        let set = dimension_congruence_set(e)?;
        if let Some(d) = dim {
            assert!(
                set.candidates.contains(&d),
                "rank dimension must satisfy the congruence"
            );
        }
        Some(set)
    } else {
        None
    };

    // distance
    let mut distance = DistanceOutcome::BoundsOnly;
    let mut exact_d = None;
    if let Some(d) = dim {
        if d > 0 && !e.is_zero() {
            let required = (q as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
            if required <= actx.budget as u128 {
                let dd = min_distance_exact(e, actx.budget)?;
                distance = DistanceOutcome::Exact(dd);
                exact_d = Some(dd);
            }
        }
    }

    // primitivity
    let primitivity = primitivity_verdict(e, actx, idempotent, dim, exact_d, semisimple)?;

    // bounds
    let mut bounds = Vec::new();
    if let Some(d) = dim {
        if d > 0 {
            bounds.push(Bound {
                value: Ratio::new(n as u64, d),
                rule: "order-over-dim".into(),
                assumes_primitive: false,
                conditions: vec![],
            });
        }
    }
    if semisimple && group.is_abelian() && primitivity.verdict == PrimitivityVerdict::Primitive {
        bounds.extend(abelian_bounds(e)?);
    }
    if semisimple
        && !group.is_abelian()
        && primitivity.verdict == PrimitivityVerdict::Primitive
    {
        if let Some(wd) = actx.wedderburn {
            // a primitive idempotent generates a minimal ideal of dimension
            // at most a = max(t_w, max n_j d_j), so d >= |H|/a
            let (_, quotient) = group.commutator_subgroup();
            let t_w = witness_orbit_size(quotient.exponent().0, field.prime_power());
            let a = t_w.max(wd.max_component_dim());
            bounds.push(Bound {
                value: Ratio::new(n as u64, a),
                rule: "order-over-component-max".into(),
                assumes_primitive: true,
                conditions: vec!["supplied decomposition data".into()],
            });
        }
    }
    if let Some(d) = exact_d {
        for b in &bounds {
            debug_assert!(b.value.le_int(d), "emitted bound exceeds the exact distance");
        }
    }

    Ok(CodeReport {
        element: e.coeff_elements().iter().map(|c| c.coeffs().to_vec()).collect(),
        idempotent,
        dim,
        dim_method,
        congruence,
        distance,
        bounds,
        primitivity,
    })
}

fn primitivity_verdict(
    e: &AlgebraElement,
    actx: &AnalysisContext,
    idempotent: Option<bool>,
    dim: Option<u64>,
    exact_d: Option<u64>,
    semisimple: bool,
) -> Result<Primitivity, CodesError> {
    let group = e.group();
    let field = e.field();
    let n = group.order() as u64;
    let p = field.p();
    match idempotent {
        Some(false) => {
            return Ok(Primitivity::unknown(
                "not an idempotent; primitivity does not apply",
            ))
        }
        None => return Ok(Primitivity::unknown("idempotency not verified at this size")),
        Some(true) => {}
    }
    if e.is_zero() {
        return Ok(Primitivity {
            verdict: PrimitivityVerdict::NotPrimitive,
            justification: "the zero idempotent is excluded by definition".into(),
        });
    }
    if dim == Some(1) {
        return Ok(Primitivity {
            verdict: PrimitivityVerdict::Primitive,
            justification: "one-dimensional ideals are minimal".into(),
        });
    }
    // Containment argument inside the Wedderburn decomposition, conditional
    // on the supplied component data.
    if semisimple && !group.is_abelian() {
        if let (Some(wd), Some(d)) = (actx.wedderburn, dim) {
            let (comm, quotient) = group.commutator_subgroup();
            let hat = algebra::hat_idempotent(group, &comm, field)?;
            let in_noncommutative =
                e.alg_mul(&hat)?.is_zero() && hat.alg_mul(e)?.is_zero();
            if in_noncommutative {
                let (single, multi) = component_sums(wd, d);
                if single && !multi {
                    return Ok(Primitivity {
                        verdict: PrimitivityVerdict::Primitive,
                        justification: format!(
                            "contained in the non-commutative part with minimal component dimension {d} \
                             (conditional on supplied decomposition data)"
                        ),
                    });
                }
            } else {
                let t_w = witness_orbit_size(quotient.exponent().0, field.prime_power());
                let in_commutative = e.alg_mul(&hat)? == *e && hat.alg_mul(e)? == *e;
                if in_commutative && t_w == 1 && d >= 2 {
                    return Ok(Primitivity {
                        verdict: PrimitivityVerdict::NotPrimitive,
                        justification:
                            "contained in a commutative part that splits into one-dimensional ideals"
                                .into(),
                    });
                }
            }
        }
    }
    if let Some(d) = exact_d {
        if semisimple && group.is_abelian() {
            let verdict = nonprimitivity_test_abelian(e, d)?;
            if verdict.verdict == PrimitivityVerdict::NotPrimitive {
                return Ok(verdict);
            }
        }
        if semisimple && !group.is_abelian() {
            if let Some(wd) = actx.wedderburn {
                let (_, quotient) = group.commutator_subgroup();
                let t_w = witness_orbit_size(quotient.exponent().0, field.prime_power());
                let a = t_w.max(wd.max_component_dim());
                let verdict = nonprimitivity_test_semisimple(group, field, wd, a, d)?;
                if verdict.verdict == PrimitivityVerdict::NotPrimitive {
                    return Ok(verdict);
                }
            }
        }
        if !semisimple {
            if let Some(cert) = actx.classification {
                if cert.verdict.is_certified_ecd() && d * p < n {
                    return Ok(Primitivity {
                        verdict: PrimitivityVerdict::NotPrimitive,
                        justification: format!("d = {d} < |H|/p = {}", Ratio::new(n, p)),
                    });
                }
            }
        }
    }
    Ok(Primitivity::unknown("no rule decided primitivity"))
}

/// For the multiset of minimal-ideal dimensions of the non-commutative part
/// (value n_j * d_j with multiplicity n_j): can `target` be realized as a
/// single member, and as a sum of two or more members?
fn component_sums(wd: &WedderburnData, target: u64) -> (bool, bool) {
    let items: Vec<(u64, u64)> = wd
        .noncommutative
        .iter()
        .map(|&(nj, dj)| (nj * dj, nj))
        .collect();
    let single = items.iter().any(|&(v, _)| v == target);
    if target == 0 {
        return (false, false);
    }
    // bounded knapsack over (sum, part count saturated at 2)
    let t = target as usize;
    let mut reach = vec![[false; 3]; t + 1];
    reach[0][0] = true;
    for &(v, count) in &items {
        for _ in 0..count {
            for s in (0..=t).rev() {
                for cls in 0..3usize {
                    if reach[s][cls] {
                        let ns = s + v as usize;
                        if ns <= t {
                            reach[ns][(cls + 1).min(2)] = true;
                        }
                    }
                }
            }
        }
    }
    (single && reach[t][1], reach[t][2])
}
