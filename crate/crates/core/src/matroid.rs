//! Independence oracles over small finite ground sets.
//!
//! Everything here is ground-set agnostic: an [`IndependenceOracle`] is a named
//! ground set plus a side-effect free predicate on subsets. Exhaustive checks
//! (axioms, duals, enumeration) sweep all `2^n` subsets and refuse ground sets
//! larger than the caller's cap.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default enumeration cap for exhaustive sweeps.
pub const DEFAULT_CAP: usize = 20;

/// Subsets are bitmasks, so oracles never address more than this many elements.
pub const MAX_ORACLE_ELEMENTS: usize = 64;

const NONE: u64 = u64::MAX;

/// A subset of a ground set, as a bitmask over ground indices.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ElemSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(ElemSet::EMPTY, |s, i| s.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        ElemSet(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        ElemSet(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ElemSet) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An ordered list of distinct element identifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_ORACLE_ELEMENTS {
            return Err(Error::GroundTooLarge(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        Ok(GroundSet { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<ElemSet> {
        names.iter().try_fold(ElemSet::EMPTY, |acc, n| {
            let n = n.as_ref();
            self.index_of(n)
                .map(|i| acc.with(i))
                .ok_or_else(|| Error::UnknownElement(n.to_string()))
        })
    }

    pub fn names_of(&self, set: ElemSet) -> Vec<String> {
        set.iter().map(|i| self.names[i].clone()).collect()
    }
}

type Predicate = dyn Fn(ElemSet) -> bool + Send + Sync;

/// A ground set together with a deterministic independence predicate.
///
/// Answers are memoized per subset; cloning shares the memo.
#[derive(Clone)]
pub struct IndependenceOracle {
    ground: Arc<GroundSet>,
    predicate: Arc<Predicate>,
    memo: Arc<RwLock<HashMap<ElemSet, bool>>>,
}

impl fmt::Debug for IndependenceOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IndependenceOracle")
            .field("ground", &self.ground.names)
            .finish_non_exhaustive()
    }
}

impl IndependenceOracle {
    pub fn new<F>(ground: GroundSet, predicate: F) -> Self
    where
        F: Fn(ElemSet) -> bool + Send + Sync + 'static,
    {
        IndependenceOracle {
            ground: Arc::new(ground),
            predicate: Arc::new(predicate),
            memo: Arc::new(RwLock::new(HashMap::new())),
        }
    }

    /// Oracle whose independent sets are exactly the listed family.
    pub fn from_family<I: IntoIterator<Item = ElemSet>>(ground: GroundSet, family: I) -> Self {
        let family: std::collections::HashSet<ElemSet> = family.into_iter().collect();
        Self::new(ground, move |s| family.contains(&s))
    }

    /// The uniform matroid `U_{rank,n}` on the given names.
    pub fn uniform<I, S>(rank: usize, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Ok(Self::new(GroundSet::new(names)?, move |s| s.len() <= rank))
    }

    pub fn free<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Ok(Self::new(GroundSet::new(names)?, |_| true))
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn is_independent(&self, set: ElemSet) -> bool {
        if let Some(&known) = self.memo.read().expect("memo poisoned").get(&set) {
            return known;
        }
        let answer = (self.predicate)(set);
        self.memo
            .write()
            .expect("memo poisoned")
            .insert(set, answer);
        answer
    }

    pub fn is_independent_names<S: AsRef<str>>(&self, names: &[S]) -> Result<bool> {
        Ok(self.is_independent(self.ground.set_of(names)?))
    }

    fn evaluate(&self, set: ElemSet) -> bool {
        (self.predicate)(set)
    }

    /// Greedily extends `start` by elements of `within`, visited in ground order.
    pub fn greedy_extend(&self, start: ElemSet, within: ElemSet) -> ElemSet {
        within.difference(start).iter().fold(start, |acc, i| {
            let next = acc.with(i);
            if self.is_independent(next) {
                next
            } else {
                acc
            }
        })
    }

    /// Rank of `set`, by greedy extension (assumes the oracle is a matroid).
    pub fn rank(&self, set: ElemSet) -> usize {
        self.greedy_extend(ElemSet::EMPTY, set).len()
    }

    /// The restriction `M|keep`, re-indexed onto the kept elements in ground order.
    pub fn restrict(&self, keep: ElemSet) -> IndependenceOracle {
        let kept: Vec<usize> = keep.iter().collect();
        let ground = GroundSet::new(kept.iter().map(|&i| self.ground.name(i).to_string()))
            .expect("restriction of a valid ground set");
        let host = self.clone();
        IndependenceOracle::new(ground, move |s| host.is_independent(lift(&kept, s)))
    }
}

fn lift(map: &[usize], sub: ElemSet) -> ElemSet {
    ElemSet::from_indices(sub.iter().map(|i| map[i]))
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n > MAX_ORACLE_ELEMENTS || n >= usize::BITS as usize - 1 {
        Err(Error::TooLarge { size: n, cap })
    } else {
        Ok(())
    }
}

/// Evaluates the predicate on every subset; index `mask` holds the answer for `ElemSet(mask)`.
pub fn independence_table(m: &IndependenceOracle, cap: usize) -> Result<Vec<bool>> {
    let n = m.ground().len();
    check_cap(n, cap)?;
    let size = 1usize << n;
    if n >= 12 {
        Ok((0..size)
            .into_par_iter()
            .map(|mask| m.evaluate(ElemSet(mask as u64)))
            .collect())
    } else {
        Ok((0..size)
            .map(|mask| m.evaluate(ElemSet(mask as u64)))
            .collect())
    }
}

/// For each independent mask, the elements whose addition keeps it independent.
fn extension_masks(table: &[bool], n: usize) -> Vec<u64> {
    let full = ElemSet::full(n).0;
    (0..table.len())
        .map(|mask| {
            if !table[mask] {
                return 0;
            }
            let outside = full & !(mask as u64);
            ElemSet(outside)
                .iter()
                .filter(|&i| table[mask | (1usize << i)])
                .fold(0u64, |acc, i| acc | (1u64 << i))
        })
        .collect()
}

fn maximal_masks(table: &[bool], ext: &[u64]) -> Vec<bool> {
    table
        .iter()
        .zip(ext)
        .map(|(&ind, &e)| ind && e == 0)
        .collect()
}

/// Outcome of one axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub passed: bool,
    /// The violating subsets, in the order the axiom names them.
    pub witness: Vec<ElemSet>,
    pub note: Option<String>,
}

impl AxiomResult {
    fn pass() -> Self {
        AxiomResult {
            passed: true,
            witness: Vec::new(),
            note: None,
        }
    }

    fn fail(witness: Vec<ElemSet>) -> Self {
        AxiomResult {
            passed: false,
            witness,
            note: None,
        }
    }
}

/// Result of [`check_axioms`].
///
/// Witnesses: `i1` is `[∅]`; `i2` is `[I, I']` with `I ⊆ I'`, `I'` independent and
/// `I` dependent; `i3` is `[I, I']` with `I` non-maximal, `I'` maximal and no
/// `x ∈ I'∖I` such that `I+x` is independent; `im` is `[I, X]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub i1: AxiomResult,
    pub i2: AxiomResult,
    pub i3: AxiomResult,
    pub im: AxiomResult,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.i1.passed && self.i2.passed && self.i3.passed && self.im.passed
    }
}

/// Ground sets up to this size get the explicit `3^n` sweep for (IM).
const IM_EXHAUSTIVE_LIMIT: usize = 12;

/// Checks (I1), (I2), (I3) and (IM) by exhaustive enumeration.
pub fn check_axioms(m: &IndependenceOracle, cap: usize) -> Result<AxiomReport> {
    let n = m.ground().len();
    let table = independence_table(m, cap)?;
    Ok(axioms_from_table(&table, n))
}

fn axioms_from_table(table: &[bool], n: usize) -> AxiomReport {
    let i1 = if table[0] {
        AxiomResult::pass()
    } else {
        AxiomResult::fail(vec![ElemSet::EMPTY])
    };

    let i2 = (0..table.len())
        .filter(|&mask| table[mask])
        .find_map(|mask| {
            ElemSet(mask as u64)
                .iter()
                .find(|&i| !table[mask & !(1usize << i)])
                .map(|i| {
                    AxiomResult::fail(vec![ElemSet(mask as u64).without(i), ElemSet(mask as u64)])
                })
        })
        .unwrap_or_else(AxiomResult::pass);

    let i3 = i3_from_table(table, n);

    let im = if n <= IM_EXHAUSTIVE_LIMIT {
        check_im_exhaustive(table, n)
    } else {
        AxiomResult {
            passed: true,
            witness: Vec::new(),
            note: Some("finite family: every nonempty subfamily has a maximal element".into()),
        }
    };

    AxiomReport { i1, i2, i3, im }
}

fn i3_from_table(table: &[bool], n: usize) -> AxiomResult {
    let full = ElemSet::full(n).0;
    let ext = extension_masks(table, n);
    let maximal = maximal_masks(table, &ext);

    // max_below[mask]: some maximal set contained in mask, or NONE.
    let mut max_below: Vec<u64> = (0..table.len())
        .map(|mask| if maximal[mask] { mask as u64 } else { NONE })
        .collect();
    for bit in 0..n {
        for mask in 0..table.len() {
            if mask & (1 << bit) != 0 && max_below[mask] == NONE {
                max_below[mask] = max_below[mask & !(1 << bit)];
            }
        }
    }
    // (I3) fails at a non-maximal I exactly when some maximal I' avoids every extension of I.
    (0..table.len())
        .filter(|&mask| table[mask] && !maximal[mask])
        .find_map(|mask| {
            let avoid = (full & !ext[mask]) as usize;
            let witness = max_below[avoid];
            (witness != NONE)
                .then(|| AxiomResult::fail(vec![ElemSet(mask as u64), ElemSet(witness)]))
        })
        .unwrap_or_else(AxiomResult::pass)
}

/// (I3) alone, for sweeps where (IM) is not of interest.
pub fn check_i3(m: &IndependenceOracle, cap: usize) -> Result<AxiomResult> {
    let table = independence_table(m, cap)?;
    Ok(i3_from_table(&table, m.ground().len()))
}

/// For every `X` and independent `I ⊆ X`, exhibits a maximal independent set
/// between `I` and `X`.
fn check_im_exhaustive(table: &[bool], n: usize) -> AxiomResult {
    let full = ElemSet::full(n).0 as usize;
    let mut above = vec![NONE; table.len()];
    for x in 0..=full {
        // Submasks of x in decreasing numeric order see supersets first.
        let mut j = x;
        loop {
            let mut found = NONE;
            let mut rest = x & !j;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let k = j | bit;
                if table[k] && above[k] == NONE {
                    found = k as u64;
                    break;
                }
                if above[k] != NONE {
                    found = above[k];
                    break;
                }
            }
            // found == NONE with j independent means j itself is maximal inside x.
            above[j] = found;
            if j == 0 {
                break;
            }
            j = (j - 1) & x;
        }
    }
    AxiomResult::pass()
}

/// The dual matroid: bases are complements of bases.
pub fn dual(m: &IndependenceOracle, cap: usize) -> Result<IndependenceOracle> {
    let n = m.ground().len();
    let table = independence_table(m, cap)?;
    let ext = extension_masks(&table, n);
    let full = ElemSet::full(n).0 as usize;
    let mut covered: Vec<bool> = vec![false; table.len()];
    for mask in 0..table.len() {
        if table[mask] && ext[mask] == 0 {
            covered[full & !mask] = true;
        }
    }
    // Downward closure: independent in the dual iff contained in some cobase.
    for bit in 0..n {
        for mask in 0..table.len() {
            if mask & (1 << bit) == 0 && covered[mask | (1 << bit)] {
                covered[mask] = true;
            }
        }
    }
    let covered = Arc::new(covered);
    Ok(IndependenceOracle::new(m.ground().clone(), move |s| {
        covered[s.0 as usize]
    }))
}

/// A minor `M/C∖D` rewritten as `M/S∖R` with `S` independent and `R` coindependent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSpec {
    pub contract: ElemSet,
    pub delete: ElemSet,
    pub normalized_s: ElemSet,
    pub normalized_r: ElemSet,
}

/// Picks `S` as a base of `M|C` plus a base of `M.D`, and `R := (C∪D)∖S`.
pub fn minor_normalize(
    m: &IndependenceOracle,
    contract: ElemSet,
    delete: ElemSet,
) -> Result<MinorSpec> {
    let full = m.ground().full();
    if !contract.intersection(delete).is_empty() {
        return Err(Error::Precondition(format!(
            "contract and delete sets intersect in {:?}",
            m.ground().names_of(contract.intersection(delete))
        )));
    }
    if !contract.union(delete).is_subset(full) {
        return Err(Error::Precondition(
            "minor sets leave the ground set".into(),
        ));
    }
    let base_c = m.greedy_extend(ElemSet::EMPTY, contract);
    let base_rest = m.greedy_extend(ElemSet::EMPTY, full.difference(delete));
    let base_contracted_d = m.greedy_extend(base_rest, delete).difference(base_rest);
    let s = base_c.union(base_contracted_d);
    Ok(MinorSpec {
        contract,
        delete,
        normalized_s: s,
        normalized_r: contract.union(delete).difference(s),
    })
}

/// The minor `M/C∖D` on `E∖(C∪D)` (ground order kept).
pub fn minor(
    m: &IndependenceOracle,
    contract: ElemSet,
    delete: ElemSet,
) -> Result<IndependenceOracle> {
    let spec = minor_normalize(m, contract, delete)?;
    Ok(minor_from_spec(m, &spec))
}

pub fn minor_from_spec(m: &IndependenceOracle, spec: &MinorSpec) -> IndependenceOracle {
    let removed = spec.contract.union(spec.delete);
    let kept: Vec<usize> = m.ground().full().difference(removed).iter().collect();
    let ground = GroundSet::new(kept.iter().map(|&i| m.ground().name(i).to_string()))
        .expect("sub-ground of a valid ground set");
    let host = m.clone();
    let s = spec.normalized_s;
    IndependenceOracle::new(ground, move |sub| {
        host.is_independent(lift(&kept, sub).union(s))
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SetKind {
    Bases,
    Circuits,
    Cocircuits,
}

/// Exact enumeration, sorted by size and then by mask.
pub fn enumerate(m: &IndependenceOracle, kind: SetKind, cap: usize) -> Result<Vec<ElemSet>> {
    let n = m.ground().len();
    let mut out = match kind {
        SetKind::Bases => {
            let table = independence_table(m, cap)?;
            let ext = extension_masks(&table, n);
            (0..table.len())
                .filter(|&mask| table[mask] && ext[mask] == 0)
                .map(|mask| ElemSet(mask as u64))
                .collect::<Vec<_>>()
        }
        SetKind::Circuits => circuits_from_table(&independence_table(m, cap)?, n),
        SetKind::Cocircuits => circuits_from_table(&independence_table(&dual(m, cap)?, cap)?, n),
    };
    out.sort_by_key(|s| (s.len(), s.0));
    Ok(out)
}

fn circuits_from_table(table: &[bool], n: usize) -> Vec<ElemSet> {
    // dep_below[mask]: some proper subset of mask is dependent.
    let mut dep_below = vec![false; table.len()];
    for mask in 1..table.len() {
        dep_below[mask] = ElemSet(mask as u64).iter().any(|i| {
            let sub = mask & !(1usize << i);
            !table[sub] || dep_below[sub]
        });
    }
    let _ = n;
    (0..table.len())
        .filter(|&mask| !table[mask] && !dep_below[mask])
        .map(|mask| ElemSet(mask as u64))
        .collect()
}

/// Elements lying in every base.
pub fn coloops(m: &IndependenceOracle, cap: usize) -> Result<ElemSet> {
    let bases = enumerate(m, SetKind::Bases, cap)?;
    if bases.is_empty() {
        return Err(Error::Precondition(
            "oracle has no maximal independent set".into(),
        ));
    }
    Ok(bases
        .iter()
        .fold(m.ground().full(), |acc, b| acc.intersection(*b)))
}

/// Compares two oracles over the same names subset-by-subset.
///
/// Returns the first subset (in `a`'s indexing) on which they disagree.
pub fn first_difference(
    a: &IndependenceOracle,
    b: &IndependenceOracle,
    cap: usize,
) -> Result<Option<ElemSet>> {
    let n = a.ground().len();
    if b.ground().len() != n {
        return Err(Error::Precondition(format!(
            "ground sets differ in size ({n} vs {})",
            b.ground().len()
        )));
    }
    let map: Vec<usize> = a
        .ground()
        .names()
        .iter()
        .map(|name| {
            b.ground()
                .index_of(name)
                .ok_or_else(|| Error::UnknownElement(name.clone()))
        })
        .collect::<Result<_>>()?;
    let ta = independence_table(a, cap)?;
    let tb = independence_table(b, cap)?;
    Ok((0..ta.len())
        .find(|&mask| ta[mask] != tb[lift(&map, ElemSet(mask as u64)).0 as usize])
        .map(|mask| ElemSet(mask as u64)))
}

pub fn same_matroid(a: &IndependenceOracle, b: &IndependenceOracle, cap: usize) -> Result<bool> {
    Ok(first_difference(a, b, cap)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u12() -> IndependenceOracle {
        IndependenceOracle::uniform(1, ["a", "b"]).unwrap()
    }

    #[test]
    fn uniform_passes_all_axioms() {
        let report = check_axioms(&u12(), DEFAULT_CAP).unwrap();
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn empty_set_dependent_fails_i1() {
        let g = GroundSet::new(["a"]).unwrap();
        let m = IndependenceOracle::from_family(g, [ElemSet::singleton(0)]);
        let report = check_axioms(&m, DEFAULT_CAP).unwrap();
        assert!(!report.i1.passed);
        assert_eq!(report.i1.witness, vec![ElemSet::EMPTY]);
        assert!(!m.is_independent(report.i1.witness[0]));
    }

    #[test]
    fn i2_and_i3_witnesses_recheck() {
        // {a,b} independent but {b} not: violates (I2).
        let g = GroundSet::new(["a", "b"]).unwrap();
        let m = IndependenceOracle::from_family(g, [ElemSet(0), ElemSet(1), ElemSet(3)]);
        let r = check_axioms(&m, DEFAULT_CAP).unwrap();
        assert!(!r.i2.passed);
        let (small, big) = (r.i2.witness[0], r.i2.witness[1]);
        assert!(small.is_subset(big) && m.is_independent(big) && !m.is_independent(small));

        // maximal sets {a} and {b,c}: {b} cannot be augmented from {a}.
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let fam = [0b000, 0b001, 0b010, 0b100, 0b110].map(ElemSet);
        let m = IndependenceOracle::from_family(g, fam);
        let r = check_axioms(&m, DEFAULT_CAP).unwrap();
        assert!(r.i2.passed);
        assert!(!r.i3.passed);
        let (i, imax) = (r.i3.witness[0], r.i3.witness[1]);
        assert!(m.is_independent(i) && m.is_independent(imax));
        assert!(imax
            .difference(i)
            .iter()
            .all(|x| !m.is_independent(i.with(x))));
    }

    #[test]
    fn cap_is_enforced() {
        let m = IndependenceOracle::free((0..5).map(|i| format!("e{i}"))).unwrap();
        assert!(matches!(
            check_axioms(&m, 4),
            Err(Error::TooLarge { size: 5, cap: 4 })
        ));
    }

    #[test]
    fn dual_examples() {
        let d = dual(&u12(), DEFAULT_CAP).unwrap();
        let bases = enumerate(&d, SetKind::Bases, DEFAULT_CAP).unwrap();
        assert_eq!(bases, vec![ElemSet(0b01), ElemSet(0b10)]);

        let free = IndependenceOracle::free(["a", "b"]).unwrap();
        let d = dual(&free, DEFAULT_CAP).unwrap();
        assert!(d.is_independent(ElemSet::EMPTY));
        assert!(!d.is_independent(ElemSet(0b01)));
        assert!(!d.is_independent(ElemSet(0b10)));
    }

    #[test]
    fn normalize_u13() {
        let m = IndependenceOracle::uniform(1, ["s", "x", "t"]).unwrap();
        let g = m.ground().clone();
        let spec =
            minor_normalize(&m, g.set_of(&["x"]).unwrap(), g.set_of(&["t"]).unwrap()).unwrap();
        assert_eq!(spec.normalized_s, g.set_of(&["x"]).unwrap());
        assert_eq!(spec.normalized_r, g.set_of(&["t"]).unwrap());

        let spec = minor_normalize(&m, ElemSet::EMPTY, ElemSet::EMPTY).unwrap();
        assert!(spec.normalized_s.is_empty() && spec.normalized_r.is_empty());

        assert!(minor_normalize(&m, ElemSet(1), ElemSet(1)).is_err());
    }

    #[test]
    fn minor_of_u13_is_a_loop() {
        let m = IndependenceOracle::uniform(1, ["s", "x", "t"]).unwrap();
        let g = m.ground().clone();
        let mm = minor(&m, g.set_of(&["x"]).unwrap(), g.set_of(&["t"]).unwrap()).unwrap();
        assert_eq!(mm.ground().names(), ["s".to_string()]);
        assert!(mm.is_independent(ElemSet::EMPTY));
        assert!(!mm.is_independent(ElemSet(1)));

        let same = minor(&m, ElemSet::EMPTY, ElemSet::EMPTY).unwrap();
        assert!(same_matroid(&m, &same, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn enumerations_of_u12() {
        let m = u12();
        assert_eq!(
            enumerate(&m, SetKind::Circuits, DEFAULT_CAP).unwrap(),
            vec![ElemSet(0b11)]
        );
        assert_eq!(
            enumerate(&m, SetKind::Cocircuits, DEFAULT_CAP).unwrap(),
            vec![ElemSet(0b11)]
        );
        assert_eq!(coloops(&m, DEFAULT_CAP).unwrap(), ElemSet::EMPTY);
        let free = IndependenceOracle::free(["a", "b"]).unwrap();
        assert_eq!(coloops(&free, DEFAULT_CAP).unwrap(), ElemSet(0b11));
    }

    #[test]
    fn restriction_reindexes() {
        let m = IndependenceOracle::uniform(1, ["a", "b", "c"]).unwrap();
        let r = m.restrict(ElemSet(0b101));
        assert_eq!(r.ground().names(), ["a".to_string(), "c".to_string()]);
        assert!(!r.is_independent(ElemSet(0b11)));
        assert!(r.is_independent(ElemSet(0b10)));
    }

    #[test]
    fn first_difference_matches_by_name() {
        let a = IndependenceOracle::uniform(1, ["a", "b"]).unwrap();
        let g = GroundSet::new(["b", "a"]).unwrap();
        let b = IndependenceOracle::from_family(g, [ElemSet(0), ElemSet(1), ElemSet(2)]);
        assert_eq!(first_difference(&a, &b, DEFAULT_CAP).unwrap(), None);
        let c = IndependenceOracle::free(["b", "a"]).unwrap();
        assert_eq!(
            first_difference(&a, &c, DEFAULT_CAP).unwrap(),
            Some(ElemSet(0b11))
        );
    }
}
