//! Finite groups as Cayley tables with structural queries: element orders,
//! exponent with a maximal-order witness, commutator subgroup and quotient,
//! conjugacy classes, and the Sylow exact-divisibility test.
//!
//! Groups built from abelian invariants keep a mixed-radix representation so
//! multiplication, orders and orbit walks are computed arithmetically per
//! element; the n x n table is never materialized for them.  Permutation
//! closures and user-supplied Cayley tables are stored densely.

use crate::arith::{self, SplitMix64};
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Orders above this are rejected by the constructors; every structural
/// query stays cheap below it.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Above this order, associativity of user-supplied tables is checked on
/// sampled triples instead of exhaustively.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 256;
const ASSOC_SAMPLES: usize = 10_000;

/// Fixed seed for sampled structure checks, recorded in reports.
pub const STRUCTURE_CHECK_SEED: u64 = 0x5EC1D0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("abelian invariant {0} is smaller than 2")]
    InvariantTooSmall(u64),
    #[error("group order {0} exceeds the cap {1}")]
    OrderCapExceeded(usize, usize),
    #[error("generator {0:?} is not a permutation of 1..={1}")]
    BadPermutation(Vec<usize>, usize),
    #[error("table is not square")]
    NotSquare,
    #[error("table entry {0} out of range for order {1}")]
    EntryOutOfRange(usize, usize),
    #[error("row or column {0} is not a permutation (Latin square violated)")]
    NotLatin(usize),
    #[error("table has no identity element")]
    NoIdentity,
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("labels length {0} does not match order {1}")]
    LabelsLength(usize, usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("index set is not a subgroup")]
    NotSubgroup,
}

#[derive(PartialEq, Eq)]
enum GroupRepr {
    /// Dense n x n table, row-major: table[i*n + j] = index of g_i * g_j.
    Table(Vec<u32>),
    /// Direct product of cyclic groups; element index is mixed-radix over
    /// the invariants (first factor most significant), identity = 0.
    Abelian { moduli: Vec<u64> },
}

/// How associativity of the multiplication was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssocCheck {
    /// Holds structurally (mixed-radix addition, composition of mappings).
    ByConstruction,
    /// Every triple of a user-supplied table was checked.
    Exhaustive,
    /// Sampled triples of a large user-supplied table, with the seed used.
    Sampled(u64),
}

struct GroupInner {
    n: usize,
    repr: GroupRepr,
    identity: usize,
    labels: Vec<String>,
    inverses: Vec<u32>,
    orders: Vec<u64>,
    abelian: bool,
    assoc: AssocCheck,
}

/// A finite group, immutable and cheap to clone (shared handle).
#[derive(Clone)]
pub struct Group(Arc<GroupInner>);

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.n == other.0.n
                && self.0.identity == other.0.identity
                && self.0.repr == other.0.repr)
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {})", self.0.n)
    }
}

impl Group {
    // -- constructors -------------------------------------------------------

    /// Direct product of cyclic groups C_{m1} x ... x C_{mk}, elements in
    /// mixed-radix order with the identity first.
    pub fn abelian(invariants: &[u64]) -> Result<Group, GroupError> {
        Group::abelian_with_cap(invariants, DEFAULT_ORDER_CAP)
    }

    pub fn abelian_with_cap(invariants: &[u64], cap: usize) -> Result<Group, GroupError> {
        if let Some(&m) = invariants.iter().find(|&&m| m < 2) {
            return Err(GroupError::InvariantTooSmall(m));
        }
        let mut order: u128 = 1;
        for &m in invariants {
            order = order.saturating_mul(m as u128);
        }
        if order > cap as u128 {
            let reported = order.min(usize::MAX as u128) as usize;
            return Err(GroupError::OrderCapExceeded(reported, cap));
        }
        let n = order as usize;
        let moduli = invariants.to_vec();
        let labels = (0..n)
            .map(|i| abelian_label(&moduli, i as u64))
            .collect::<Vec<_>>();
        let inverses = (0..n)
            .map(|i| abelian_inv(&moduli, i as u64) as u32)
            .collect::<Vec<_>>();
        let orders = (0..n)
            .map(|i| abelian_order(&moduli, i as u64))
            .collect::<Vec<_>>();
        Ok(Group(Arc::new(GroupInner {
            n,
            repr: GroupRepr::Abelian { moduli },
            identity: 0,
            labels,
            inverses,
            orders,
            abelian: true,
            assoc: AssocCheck::ByConstruction,
        })))
    }

    /// Closure of permutation generators under composition, found by
    /// breadth-first search from the identity; element order is BFS
    /// discovery order (identity first), labels are cycle notation.
    ///
    /// Generators are one-line images of 1..=m.  Products compose as
    /// mappings: (a*b)(x) = a(b(x)), i.e. b acts first.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Result<Group, GroupError> {
        Group::from_permutations_with_cap(generators, DEFAULT_ORDER_CAP)
    }

    pub fn from_permutations_with_cap(
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Group, GroupError> {
        let m = generators.iter().map(|g| g.len()).max().unwrap_or(1);
        let mut gens: Vec<Vec<u16>> = Vec::new();
        for g in generators {
            let mut img: Vec<u16> = vec![0; m];
            let mut seen = vec![false; m];
            if g.len() > m {
                return Err(GroupError::BadPermutation(g.clone(), m));
            }
            for (i, &v) in g.iter().enumerate() {
                if v < 1 || v > m || seen[v - 1] {
                    return Err(GroupError::BadPermutation(g.clone(), m));
                }
                seen[v - 1] = true;
                img[i] = (v - 1) as u16;
            }
            // points beyond the written prefix are fixed
            for (i, slot) in img.iter_mut().enumerate().skip(g.len()) {
                if seen[i] {
                    return Err(GroupError::BadPermutation(g.clone(), m));
                }
                *slot = i as u16;
            }
            gens.push(img);
        }
        let identity: Vec<u16> = (0..m as u16).collect();
        let mut elements: Vec<Vec<u16>> = vec![identity.clone()];
        let mut index: HashMap<Vec<u16>, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(cur) = queue.pop_front() {
            for gen in &gens {
                let next = perm_compose(&elements[cur], gen);
                if !index.contains_key(&next) {
                    if elements.len() == cap {
                        return Err(GroupError::OrderCapExceeded(cap + 1, cap));
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = perm_compose(&elements[i], &elements[j]);
                table[i * n + j] = index[&prod] as u32;
            }
        }
        let labels = elements.iter().map(|e| cycle_notation(e)).collect();
        Group::from_table(table, n, Some(labels), true)
    }

    /// Group from an explicit Cayley table (`table[i][j]` = index of
    /// g_i * g_j, 0-based).  Checks the Latin-square property, locates the
    /// identity, and verifies associativity (exhaustively up to order 256,
    /// on sampled triples above).
    pub fn from_cayley(
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Group, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NoIdentity);
        }
        if n > DEFAULT_ORDER_CAP {
            return Err(GroupError::OrderCapExceeded(n, DEFAULT_ORDER_CAP));
        }
        let mut flat = vec![0u32; n * n];
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare);
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange(v, n));
                }
                flat[i * n + j] = v as u32;
            }
        }
        Group::from_table(flat, n, labels, false)
    }

    fn from_table(
        table: Vec<u32>,
        n: usize,
        labels: Option<Vec<String>>,
        assoc_known: bool,
    ) -> Result<Group, GroupError> {
        // Latin square: every row and column is a permutation.
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = table[i * n + j] as usize;
                if seen[v] {
                    return Err(GroupError::NotLatin(i));
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let v = table[i * n + j] as usize;
                if seen[v] {
                    return Err(GroupError::NotLatin(j));
                }
                seen[v] = true;
            }
        }
        // Identity: the row and column that are the identity permutation.
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| table[e * n + j] as usize == j && table[j * n + e] as usize == j))
            .ok_or(GroupError::NoIdentity)?;
        // Associativity.
        let mut assoc = if assoc_known {
            AssocCheck::ByConstruction
        } else {
            AssocCheck::Exhaustive
        };
        if !assoc_known {
            if n <= EXHAUSTIVE_ASSOC_LIMIT {
                for a in 0..n {
                    for b in 0..n {
                        let ab = table[a * n + b] as usize;
                        for c in 0..n {
                            let bc = table[b * n + c] as usize;
                            if table[ab * n + c] != table[a * n + bc] {
                                return Err(GroupError::NotAssociative(a, b, c));
                            }
                        }
                    }
                }
            } else {
                let mut rng = SplitMix64(STRUCTURE_CHECK_SEED);
                for _ in 0..ASSOC_SAMPLES {
                    let a = rng.below(n as u64) as usize;
                    let b = rng.below(n as u64) as usize;
                    let c = rng.below(n as u64) as usize;
                    let ab = table[a * n + b] as usize;
                    let bc = table[b * n + c] as usize;
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
                assoc = AssocCheck::Sampled(STRUCTURE_CHECK_SEED);
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(GroupError::LabelsLength(l.len(), n));
                }
                l
            }
            None => (0..n).map(|i| if i == identity { "1".into() } else { format!("g{i}") }).collect(),
        };
        let inverses: Vec<u32> = (0..n)
            .map(|i| (0..n).find(|&j| table[i * n + j] as usize == identity).unwrap() as u32)
            .collect();
        let mut orders = vec![0u64; n];
        for i in 0..n {
            let mut x = i;
            let mut o = 1u64;
            while x != identity {
                x = table[x * n + i] as usize;
                o += 1;
            }
            orders[i] = o;
        }
        let abelian = (0..n).all(|i| (i..n).all(|j| table[i * n + j] == table[j * n + i]));
        Ok(Group(Arc::new(GroupInner {
            n,
            repr: GroupRepr::Table(table),
            identity,
            labels,
            inverses,
            orders,
            abelian,
            assoc,
        })))
    }

    // -- basic queries ------------------------------------------------------

    pub fn order(&self) -> usize {
        self.0.n
    }

    pub fn identity(&self) -> usize {
        self.0.identity
    }

    pub fn is_abelian(&self) -> bool {
        self.0.abelian
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    /// How associativity of this group's multiplication was established.
    pub fn associativity_check(&self) -> AssocCheck {
        self.0.assoc
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.0.repr {
            GroupRepr::Table(t) => t[i * self.0.n + j] as usize,
            GroupRepr::Abelian { moduli } => {
                let mut out = 0u64;
                let (mut a, mut b) = (i as u64, j as u64);
                let mut stride = 1u64;
                // digits run least-significant-first over reversed moduli
                for &m in moduli.iter().rev() {
                    let d = (a % m + b % m) % m;
                    out += d * stride;
                    stride *= m;
                    a /= m;
                    b /= m;
                }
                out as usize
            }
        }
    }

    pub fn inv(&self, i: usize) -> usize {
        self.0.inverses[i] as usize
    }

    /// g_i raised to a non-negative power, by repeated squaring.
    pub fn pow(&self, i: usize, e: u64) -> usize {
        let mut base = i;
        let mut acc = self.0.identity;
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

    pub fn element_order(&self, i: usize) -> u64 {
        self.0.orders[i]
    }

    /// (exp(G), witness): the lcm of all element orders, together with the
    /// smallest element index realizing it.  In an abelian group a witness
    /// always exists; in general no single element need realize the lcm, in
    /// which case the witness is `None`.
    pub fn exponent(&self) -> (u64, Option<usize>) {
        let exp = self.0.orders.iter().copied().fold(1u64, arith::lcm);
        let w = (0..self.0.n).find(|&i| self.0.orders[i] == exp);
        (exp, w)
    }

    // -- structure ----------------------------------------------------------

    /// The commutator subgroup H' (as a sorted index set) and the quotient
    /// H/H' as a group on cosets, each coset represented by its smallest
    /// member index.
    pub fn commutator_subgroup(&self) -> (Vec<usize>, Group) {
        if self.0.abelian {
            return (vec![self.0.identity], self.clone());
        }
        let n = self.0.n;
        let mut in_set = vec![false; n];
        let mut gens: Vec<usize> = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if !in_set[c] {
                    in_set[c] = true;
                    gens.push(c);
                }
            }
        }
        let subgroup = self.closure(&gens);
        let quotient = self.quotient_by(&subgroup);
        (subgroup, quotient)
    }

    /// Subgroup generated by the given elements (sorted indices).
    pub fn closure(&self, generators: &[usize]) -> Vec<usize> {
        let n = self.0.n;
        let mut in_set = vec![false; n];
        in_set[self.0.identity] = true;
        let mut members = vec![self.0.identity];
        let mut queue: VecDeque<usize> = VecDeque::from([self.0.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in generators {
                let y = self.mul(x, g);
                if !in_set[y] {
                    in_set[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// True when the sorted index set is closed under the table (and thus a
    /// subgroup, by finiteness).
    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        if !members.contains(&self.0.identity) {
            return false;
        }
        let in_set: Vec<bool> = {
            let mut v = vec![false; self.0.n];
            for &m in members {
                if m >= self.0.n {
                    return false;
                }
                v[m] = true;
            }
            v
        };
        members
            .iter()
            .all(|&a| members.iter().all(|&b| in_set[self.mul(a, b)]))
    }

    /// Quotient by a normal subgroup; cosets canonically represented by
    /// their smallest member index.
    fn quotient_by(&self, subgroup: &[usize]) -> Group {
        let n = self.0.n;
        let mut coset_rep = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..n {
            if coset_rep[g] != usize::MAX {
                continue;
            }
            // left coset g*N; for normal N the left/right cosets agree
            let members: Vec<usize> = subgroup.iter().map(|&h| self.mul(g, h)).collect();
            let rep = *members.iter().min().unwrap();
            for &m in &members {
                coset_rep[m] = rep;
            }
            reps.push(rep);
        }
        reps.sort_unstable();
        let rep_index: HashMap<usize, usize> =
            reps.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        let m = reps.len();
        let mut table = vec![vec![0usize; m]; m];
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                table[a][b] = rep_index[&coset_rep[self.mul(ra, rb)]];
            }
        }
        let labels = reps
            .iter()
            .map(|&r| format!("[{}]", self.0.labels[r]))
            .collect();
        Group::from_cayley(&table, Some(labels)).expect("quotient table is a group")
    }

    /// Number of conjugacy classes.
    pub fn conjugacy_class_count(&self) -> usize {
        if self.0.abelian {
            return self.0.n;
        }
        let n = self.0.n;
        let mut visited = vec![false; n];
        let mut classes = 0usize;
        for g in 0..n {
            if visited[g] {
                continue;
            }
            classes += 1;
            for h in 0..n {
                let c = self.mul(self.mul(self.inv(h), g), h);
                visited[c] = true;
            }
        }
        classes
    }

    /// True iff p divides |G| exactly once; then every Sylow p-subgroup has
    /// order p, hence is cyclic of order p.
    pub fn sylow_is_cp(&self, p: u64) -> Result<bool, GroupError> {
        if !arith::is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let n = self.0.n as u64;
        Ok(n % p == 0 && (n / p) % p != 0)
    }
}

// -- abelian helpers ---------------------------------------------------------

fn abelian_digits(moduli: &[u64], mut idx: u64) -> Vec<u64> {
    let mut digits = vec![0u64; moduli.len()];
    for (k, &m) in moduli.iter().enumerate().rev() {
        digits[k] = idx % m;
        idx /= m;
    }
    digits
}

fn abelian_label(moduli: &[u64], idx: u64) -> String {
    let digits = abelian_digits(moduli, idx);
    if moduli.len() == 1 {
        match digits[0] {
            0 => "1".to_string(),
            1 => "x".to_string(),
            d => format!("x^{d}"),
        }
    } else {
        let parts: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

fn abelian_inv(moduli: &[u64], idx: u64) -> u64 {
    let digits = abelian_digits(moduli, idx);
    let mut out = 0u64;
    for (k, &m) in moduli.iter().enumerate() {
        let d = if digits[k] == 0 { 0 } else { m - digits[k] };
        out = out * m + d;
    }
    out
}

fn abelian_order(moduli: &[u64], idx: u64) -> u64 {
    let digits = abelian_digits(moduli, idx);
    let mut o = 1u64;
    for (k, &m) in moduli.iter().enumerate() {
        o = arith::lcm(o, m / arith::gcd(digits[k], m));
    }
    o
}

// -- permutation helpers -----------------------------------------------------

/// Composition as mappings: (a*b)(x) = a(b(x)).
fn perm_compose(a: &[u16], b: &[u16]) -> Vec<u16> {
    b.iter().map(|&bx| a[bx as usize]).collect()
}

fn cycle_notation(perm: &[u16]) -> String {
    let m = perm.len();
    let mut seen = vec![false; m];
    let mut out = String::new();
    for start in 0..m {
        if seen[start] || perm[start] as usize == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = perm[start] as usize;
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = perm[x] as usize;
        }
        let sep = if m > 9 { "," } else { "" };
        let body: Vec<String> = cycle.iter().map(|&p| (p + 1).to_string()).collect();
        out.push('(');
        out.push_str(&body.join(sep));
        out.push(')');
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}
