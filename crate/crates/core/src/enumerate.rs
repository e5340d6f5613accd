//! Bounded exhaustive search for smooth, cone-free presentations.
//!
//! Completeness is only claimed within the [`SearchCaps`]; re-running with
//! larger caps and comparing is the available evidence that the caps are
//! large enough.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::checks::{ambient_well_formed, prime_divisors, smooth_general, TriState};
use crate::classify::Coindex2Family;
use crate::presentation::Presentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchCaps {
    pub max_codim: usize,
    pub max_degree: u64,
    pub max_weight: u64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            max_codim: 3,
            max_degree: 30,
            max_weight: 10,
        }
    }
}

impl SearchCaps {
    pub fn doubled(self) -> SearchCaps {
        SearchCaps {
            max_codim: self.max_codim * 2,
            max_degree: self.max_degree * 2,
            max_weight: self.max_weight * 2,
        }
    }
}

impl fmt::Display for SearchCaps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "max_codim={} max_degree={} max_weight={}",
            self.max_codim, self.max_degree, self.max_weight
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationResult {
    /// Presentations whose general member is smooth, sorted by
    /// `(codim, weights, degrees)`.
    pub found: Vec<Presentation>,
    /// Candidates passing every decidable test whose quasi-smoothness could
    /// not be decided.
    pub undecided: Vec<Presentation>,
    pub caps: SearchCaps,
    /// Survivors that touch a cap; the search may be incomplete near them.
    pub warnings: Vec<String>,
}

fn sort_key(pres: &Presentation) -> (usize, &[u64], &[u64]) {
    (pres.codim(), pres.weights(), pres.degrees())
}

fn sort_presentations(list: &mut Vec<Presentation>) {
    list.sort_by(|a, b| sort_key(a).cmp(&sort_key(b)));
    list.dedup();
}

/// All cone-free presentations of dimension `dim` and `i_X = index` within
/// `caps` whose general member is smooth (`found`) or possibly smooth
/// (`undecided`).
pub fn enumerate_wcis(dim: usize, index: i64, caps: SearchCaps) -> EnumerationResult {
    let mut found = Vec::new();
    let mut undecided = Vec::new();
    for codim in 0..=caps.max_codim {
        let search = Search::new(dim, codim, index, caps);
        let (f, u) = search.run();
        found.extend(f);
        undecided.extend(u);
    }
    sort_presentations(&mut found);
    sort_presentations(&mut undecided);

    let warnings = found
        .iter()
        .chain(&undecided)
        .filter_map(|pres| cap_warning(pres, caps))
        .collect();
    EnumerationResult {
        found,
        undecided,
        caps,
        warnings,
    }
}

fn cap_warning(pres: &Presentation, caps: SearchCaps) -> Option<String> {
    let mut hits = Vec::new();
    if pres.codim() == caps.max_codim {
        hits.push("max_codim");
    }
    if pres.weights().last().is_some_and(|&w| w == caps.max_weight) {
        hits.push("max_weight");
    }
    if pres.degrees().last().is_some_and(|&d| d == caps.max_degree) {
        hits.push("max_degree");
    }
    (!hits.is_empty()).then(|| format!("{pres} touches {}", hits.join(", ")))
}

/// One `(dim, codim, index)` slice of the search space.
struct Search {
    codim: usize,
    len: usize,
    index: i64,
    caps: SearchCaps,
    /// Prime factors of each admissible weight value.
    factors: Vec<Vec<u64>>,
}

/// Weights chosen so far, largest first, with per-prime counts.
struct Walk {
    weights: Vec<u64>,
    counts: Vec<usize>,
}

#[derive(Default)]
struct Hits {
    found: Vec<Presentation>,
    undecided: Vec<Presentation>,
}

impl Search {
    fn new(dim: usize, codim: usize, index: i64, caps: SearchCaps) -> Self {
        let factors = (0..=caps.max_weight)
            .map(|w| {
                if w < 2 {
                    Vec::new()
                } else {
                    prime_divisors(&[w])
                }
            })
            .collect();
        Search {
            codim,
            len: dim + codim + 1,
            index,
            caps,
            factors,
        }
    }

    fn run(&self) -> (Vec<Presentation>, Vec<Presentation>) {
        // no varieties of dimension 0
        if self.len < 2 {
            return (Vec::new(), Vec::new());
        }
        // Weights are chosen largest first; fan out over the two largest.
        let mut prefixes = Vec::new();
        for a in 1..=self.caps.max_weight {
            for b in 1..=a {
                prefixes.push([a, b]);
            }
        }
        let hits = prefixes
            .into_par_iter()
            .map(|prefix| {
                let mut hits = Hits::default();
                let mut walk = Walk {
                    weights: Vec::with_capacity(self.len),
                    counts: vec![0; self.caps.max_weight as usize + 1],
                };
                if prefix.iter().all(|&w| self.push_weight(w, &mut walk)) {
                    self.weights_dfs(&mut walk, &mut hits);
                }
                hits
            })
            .reduce(Hits::default, |mut acc, hits| {
                acc.found.extend(hits.found);
                acc.undecided.extend(hits.undecided);
                acc
            });
        (hits.found, hits.undecided)
    }

    /// Appends `w` unless the weights chosen so far can no longer be completed:
    /// some prime divides more weights than there are equations, or the
    /// degrees they force cost more than any completion can pay for.
    fn push_weight(&self, w: u64, walk: &mut Walk) -> bool {
        let primes = &self.factors[w as usize];
        if primes
            .iter()
            .any(|&p| walk.counts[p as usize] >= self.codim)
        {
            return false;
        }
        for &p in &self.factors[w as usize] {
            walk.counts[p as usize] += 1;
        }
        walk.weights.push(w);
        // the weights still to come are at most `w` each
        let left = (self.len - walk.weights.len()) as u64;
        let budget = walk.weights.iter().sum::<u64>() + left * w;
        let fits = budget as i64 - self.index >= 0
            && self.forced_degrees(walk).is_some_and(|(count, cost)| {
                count <= self.codim && cost as i64 <= budget as i64 - self.index
            });
        if !fits {
            self.pop_weight(walk);
        }
        fits
    }

    fn pop_weight(&self, walk: &mut Walk) {
        let w = walk.weights.pop().expect("non-empty");
        for &p in &self.factors[w as usize] {
            walk.counts[p as usize] -= 1;
        }
    }

    fn weights_dfs(&self, walk: &mut Walk, hits: &mut Hits) {
        if walk.weights.len() == self.len {
            let ascending: Vec<u64> = walk.weights.iter().rev().copied().collect();
            self.visit_weights(&ascending, hits);
            return;
        }
        let top = *walk.weights.last().expect("prefix");
        for w in (1..=top).rev() {
            if self.push_weight(w, walk) {
                self.weights_dfs(walk, hits);
                self.pop_weight(walk);
            }
        }
    }

    /// Lower bounds on the number and on the total degree of the equations
    /// the weights need, or `None` when some weight value has no admissible
    /// multiple at all. Adding weights never lowers either.
    ///
    /// Each value `v > 1` occurring `m` times needs `m` degrees divisible by
    /// `v`, none of them equal to a weight; likewise each prime. Values whose
    /// least common multiple exceeds `max_degree` cannot share a degree, so a
    /// set of pairwise such values (chosen greedily from the top) adds up.
    /// Every other degree is at least the smallest non-weight.
    fn forced_degrees(&self, walk: &Walk) -> Option<(usize, u64)> {
        let weights = &walk.weights;
        let is_weight = |d: &u64| weights.contains(d);
        let floor = (1..).find(|d| !is_weight(d)).expect("finite");
        let smallest_multiple = |v: u64| {
            (1..)
                .map(|m| m * v)
                .take_while(|&d| d <= self.caps.max_degree)
                .find(|d| !is_weight(d))
        };
        let bound =
            |count: usize, cost: u64| cost + self.codim.saturating_sub(count) as u64 * floor;

        let mut chosen = [0u64; 64];
        let mut len = 0;
        let (mut count, mut cost) = (0, 0);
        // weights are stored largest first, so runs of equal values are adjacent
        for run in weights.chunk_by(|a, b| a == b) {
            let v = run[0];
            if v == 1 {
                break;
            }
            let smallest = smallest_multiple(v)?;
            if len < chosen.len()
                && chosen[..len]
                    .iter()
                    .all(|&u| lcm(u, v) > self.caps.max_degree)
            {
                chosen[len] = v;
                len += 1;
                count += run.len();
                cost += run.len() as u64 * smallest;
            }
        }
        let mut best = (count, bound(count, cost));

        for (p, &run) in walk.counts.iter().enumerate().filter(|(_, &run)| run > 0) {
            let cost = bound(run, run as u64 * smallest_multiple(p as u64)?);
            best = (best.0.max(run), best.1.max(cost));
        }
        Some(best)
    }

    fn visit_weights(&self, weights: &[u64], hits: &mut Hits) {
        if !ambient_well_formed(weights) {
            return;
        }
        let total = weights.iter().sum::<u64>() as i64 - self.index;
        if total < 0 || total > self.codim as i64 * self.caps.max_degree as i64 {
            return;
        }
        let strata = Strata::new(weights, self.caps.max_degree);
        let mut ctx = DegreeSearch {
            weights,
            strata: &strata,
            attained: vec![0; strata.len()],
            degrees: Vec::with_capacity(self.codim),
            codim: self.codim,
            max_degree: self.caps.max_degree,
        };
        ctx.dfs(1, total as u64, hits);
    }
}

/// One constraint per prime `p` and non-empty set `V` of `p`-divisible weight
/// values: the general member misses the coordinate stratum of the weights
/// with values in `V` only if at least as many degrees lie in the semigroup of
/// `V` as there are such weights. Cone degrees are left out of the semigroups.
struct Strata {
    primes: Vec<u64>,
    needed: Vec<usize>,
    /// Attainable degrees of every constraint, `words` words each.
    bits: Vec<u64>,
    words: usize,
    max_degree: u64,
}

impl Strata {
    fn new(weights: &[u64], max_degree: u64) -> Self {
        let words = max_degree as usize / 64 + 1;
        let mut cone = vec![0u64; words];
        for &w in weights.iter().filter(|&&w| w <= max_degree) {
            cone[w as usize / 64] |= 1 << (w % 64);
        }
        let mut strata = Strata {
            primes: Vec::new(),
            needed: Vec::new(),
            bits: Vec::new(),
            words,
            max_degree,
        };
        for p in prime_divisors(weights) {
            let mut values: Vec<(u64, usize)> = Vec::new();
            for &w in weights.iter().filter(|&&w| w % p == 0) {
                match values.last_mut() {
                    Some(last) if last.0 == w => last.1 += 1,
                    _ => values.push((w, 1)),
                }
            }
            // semigroup of each value subset, built from the subset without its lowest value
            let subsets = 1usize << values.len();
            let mut tables = vec![0u64; subsets * words];
            tables[0] = 1;
            let mut needed = vec![0usize; subsets];
            for mask in 1..subsets {
                let low = mask.trailing_zeros() as usize;
                let parent = mask & (mask - 1);
                needed[mask] = needed[parent] + values[low].1;
                let (head, tail) = tables.split_at_mut(mask * words);
                let table = &mut tail[..words];
                table.copy_from_slice(&head[parent * words..(parent + 1) * words]);
                close_under(table, values[low].0, max_degree);
            }
            for mask in 1..subsets {
                strata.primes.push(p);
                strata.needed.push(needed[mask]);
                let table = &tables[mask * words..(mask + 1) * words];
                strata
                    .bits
                    .extend(table.iter().zip(&cone).map(|(t, c)| t & !c));
            }
        }
        strata
    }

    fn len(&self) -> usize {
        self.needed.len()
    }

    fn attainable(&self, index: usize, d: u64) -> bool {
        self.bits[index * self.words + d as usize / 64] & (1 << (d % 64)) != 0
    }

    /// Smallest attainable degree of constraint `index` that is at least `min`.
    fn next(&self, index: usize, min: u64) -> Option<u64> {
        if min > self.max_degree {
            return None;
        }
        let table = &self.bits[index * self.words..(index + 1) * self.words];
        let mut word = min as usize / 64;
        let mut bits = table[word] & (!0u64 << (min % 64));
        loop {
            if bits != 0 {
                return Some(word as u64 * 64 + bits.trailing_zeros() as u64);
            }
            word += 1;
            if word == self.words {
                return None;
            }
            bits = table[word];
        }
    }
}

/// Closes the bit set `table` (bits `0..=max`) under adding `step`.
fn close_under(table: &mut [u64], step: u64, max: u64) {
    let top_mask = !0u64 >> (63 - max % 64);
    let mut shift = step;
    // after the pass with `shift`, every sum with fewer than `2 * shift / step` copies is present
    while shift <= max {
        let (words, bits) = ((shift / 64) as usize, (shift % 64) as u32);
        for i in (words..table.len()).rev() {
            let mut moved = table[i - words] << bits;
            if bits > 0 && i > words {
                moved |= table[i - words - 1] >> (64 - bits);
            }
            table[i] |= moved;
        }
        let last = table.len() - 1;
        table[last] &= top_mask;
        shift *= 2;
    }
}

struct DegreeSearch<'a> {
    weights: &'a [u64],
    strata: &'a Strata,
    attained: Vec<usize>,
    degrees: Vec<u64>,
    codim: usize,
    max_degree: u64,
}

impl DegreeSearch<'_> {
    fn dfs(&mut self, min: u64, remaining: u64, hits: &mut Hits) {
        let slots = (self.codim - self.degrees.len()) as u64;
        if slots == 0 {
            if remaining == 0 {
                self.visit(hits);
            }
            return;
        }
        if !self.feasible(min, remaining, slots) {
            return;
        }
        // d is the smallest of the remaining `slots` degrees; the last one is forced.
        let (lo, hi) = if slots == 1 {
            (remaining.max(min), remaining.min(self.max_degree))
        } else {
            (min, self.max_degree.min(remaining / slots))
        };
        for d in lo..=hi {
            let rest = remaining - d;
            if rest > (slots - 1) * self.max_degree {
                continue;
            }
            // cone candidates are discarded here
            if self.weights.binary_search(&d).is_ok() {
                continue;
            }
            self.push(d);
            self.dfs(d, rest, hits);
            self.pop();
        }
    }

    /// Whether `slots` more degrees, each at least `min` and summing to
    /// `remaining`, could still satisfy every stratum.
    ///
    /// Two primes whose product exceeds `max_degree` never divide the same
    /// degree, so the deficits of primes above `sqrt(max_degree)` need
    /// pairwise distinct degrees and their costs add up.
    fn feasible(&self, min: u64, remaining: u64, slots: u64) -> bool {
        // (prime, deficit, extra cost over `min`) of the costliest stratum per large prime
        let mut large: Vec<(u64, u64, u64)> = Vec::new();
        for (index, &got) in self.attained.iter().enumerate() {
            let deficit = self.strata.needed[index].saturating_sub(got) as u64;
            if deficit == 0 {
                continue;
            }
            if deficit > slots {
                return false;
            }
            let Some(smallest) = self.strata.next(index, min) else {
                return false;
            };
            let prime = self.strata.primes[index];
            let extra = deficit * (smallest - min);
            if slots * min + extra > remaining {
                return false;
            }
            if prime * prime > self.max_degree {
                match large.iter_mut().find(|(p, _, _)| *p == prime) {
                    Some(entry) if entry.2 >= extra => {}
                    Some(entry) => *entry = (prime, deficit, extra),
                    None => large.push((prime, deficit, extra)),
                }
            }
        }
        let deficit: u64 = large.iter().map(|e| e.1).sum();
        let extra: u64 = large.iter().map(|e| e.2).sum();
        deficit <= slots && slots * min + extra <= remaining
    }

    fn push(&mut self, d: u64) {
        for (index, got) in self.attained.iter_mut().enumerate() {
            *got += usize::from(self.strata.attainable(index, d));
        }
        self.degrees.push(d);
    }

    fn pop(&mut self) {
        let d = self.degrees.pop().expect("non-empty");
        for (index, got) in self.attained.iter_mut().enumerate() {
            *got -= usize::from(self.strata.attainable(index, d));
        }
    }

    fn visit(&self, hits: &mut Hits) {
        if self
            .attained
            .iter()
            .zip(&self.strata.needed)
            .any(|(got, needed)| got < needed)
        {
            return;
        }
        let pres = Presentation::new(self.weights.to_vec(), self.degrees.clone())
            .expect("search produces valid presentations");
        match smooth_general(&pres) {
            TriState::True => hits.found.push(pres),
            TriState::Unknown => hits.undecided.push(pres),
            TriState::False => {}
        }
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

fn table_entry(weights: &[u64], degrees: &[u64]) -> Presentation {
    Presentation::new(weights.to_vec(), degrees.to_vec()).expect("valid table entry")
}

/// Smooth cone-free Fano families of dimension 1 and 2.
pub fn fano_table() -> Vec<Presentation> {
    vec![
        table_entry(&[1, 1, 1], &[2]),
        table_entry(&[1, 1], &[]),
        table_entry(&[1, 1, 2, 3], &[6]),
        table_entry(&[1, 1, 1, 2], &[4]),
        table_entry(&[1, 1, 1, 1], &[3]),
        table_entry(&[1, 1, 1, 1, 1], &[2, 2]),
        table_entry(&[1, 1, 1, 1], &[2]),
        table_entry(&[1, 1, 1], &[]),
    ]
}

/// Smooth cone-free families with trivial canonical class in dimension 1 and 2.
pub fn calabi_yau_table() -> Vec<Presentation> {
    vec![
        table_entry(&[1, 2, 3], &[6]),
        table_entry(&[1, 1, 2], &[4]),
        table_entry(&[1, 1, 1], &[3]),
        table_entry(&[1, 1, 1, 1], &[2, 2]),
        table_entry(&[1, 1, 1, 3], &[6]),
        table_entry(&[1, 1, 1, 1], &[4]),
        table_entry(&[1, 1, 1, 1, 1], &[2, 3]),
        table_entry(&[1, 1, 1, 1, 1, 1], &[2, 2, 2]),
    ]
}

/// Expected against enumerated entries for one table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableComparison {
    pub expected: Vec<Presentation>,
    pub found: Vec<Presentation>,
    pub missing: Vec<Presentation>,
    pub unexpected: Vec<Presentation>,
}

impl TableComparison {
    fn new(mut expected: Vec<Presentation>, mut found: Vec<Presentation>) -> Self {
        sort_presentations(&mut expected);
        sort_presentations(&mut found);
        let missing = expected
            .iter()
            .filter(|p| !found.contains(p))
            .cloned()
            .collect();
        let unexpected = found
            .iter()
            .filter(|p| !expected.contains(p))
            .cloned()
            .collect();
        TableComparison {
            expected,
            found,
            missing,
            unexpected,
        }
    }

    pub fn matches(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesReport {
    pub fano: TableComparison,
    pub calabi_yau: TableComparison,
    pub undecided: Vec<Presentation>,
    pub caps: SearchCaps,
    pub warnings: Vec<String>,
}

impl TablesReport {
    pub fn passed(&self) -> bool {
        self.fano.matches() && self.calabi_yau.matches() && self.undecided.is_empty()
    }
}

/// `(dim, index)` runs whose union is the Fano table.
pub const FANO_RUNS: [(usize, i64); 5] = [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)];
/// `(dim, index)` runs whose union is the Calabi–Yau table.
pub const CALABI_YAU_RUNS: [(usize, i64); 2] = [(1, 0), (2, 0)];

/// Re-derives both tables by enumeration and compares them with the
/// hard-coded lists.
pub fn reproduce_tables(caps: SearchCaps) -> TablesReport {
    let mut undecided = Vec::new();
    let mut warnings = Vec::new();
    let mut collect = |runs: &[(usize, i64)]| {
        let mut found = Vec::new();
        for &(dim, index) in runs {
            let result = enumerate_wcis(dim, index, caps);
            found.extend(result.found);
            undecided.extend(result.undecided);
            warnings.extend(result.warnings);
        }
        found
    };
    let fano_found = collect(&FANO_RUNS);
    let cy_found = collect(&CALABI_YAU_RUNS);
    sort_presentations(&mut undecided);
    TablesReport {
        fano: TableComparison::new(fano_table(), fano_found),
        calabi_yau: TableComparison::new(calabi_yau_table(), cy_found),
        undecided,
        caps,
        warnings,
    }
}

/// The four index `n - 1` families in dimension `dim`.
pub fn coindex2_expected(dim: usize) -> Vec<Presentation> {
    let mut list: Vec<Presentation> = Coindex2Family::ALL
        .into_iter()
        .map(|family| family.presentation(dim))
        .collect();
    sort_presentations(&mut list);
    list
}

/// Smooth families with `i_X = n - 1` under default caps; meant for `n >= 3`.
pub fn enumerate_coindex2(dim: usize) -> EnumerationResult {
    enumerate_coindex2_with(dim, SearchCaps::default())
}

pub fn enumerate_coindex2_with(dim: usize, caps: SearchCaps) -> EnumerationResult {
    enumerate_wcis(dim, dim as i64 - 1, caps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(weights: &[u64], degrees: &[u64]) -> Presentation {
        Presentation::new(weights.to_vec(), degrees.to_vec()).unwrap()
    }

    #[test]
    fn default_caps_dominate_tables() {
        let caps = SearchCaps::default();
        for pres in fano_table().iter().chain(&calabi_yau_table()) {
            assert!(pres.codim() <= caps.max_codim);
            assert!(pres.weights().iter().all(|&w| w <= caps.max_weight));
            assert!(pres.degrees().iter().all(|&d| d <= caps.max_degree));
        }
    }

    #[test]
    fn dim2_index1_is_the_del_pezzo_block() {
        let result = enumerate_wcis(2, 1, SearchCaps::default());
        assert_eq!(
            result.found,
            vec![
                p(&[1, 1, 1, 1], &[3]),
                p(&[1, 1, 1, 2], &[4]),
                p(&[1, 1, 2, 3], &[6]),
                p(&[1, 1, 1, 1, 1], &[2, 2]),
            ]
        );
        assert!(result.undecided.is_empty());
    }

    #[test]
    fn elliptic_curves() {
        let result = enumerate_wcis(1, 0, SearchCaps::default());
        assert_eq!(
            result.found,
            vec![
                p(&[1, 1, 1], &[3]),
                p(&[1, 1, 2], &[4]),
                p(&[1, 2, 3], &[6]),
                p(&[1, 1, 1, 1], &[2, 2]),
            ]
        );
    }

    #[test]
    fn fano_curves() {
        assert_eq!(
            enumerate_wcis(1, 1, SearchCaps::default()).found,
            vec![p(&[1, 1, 1], &[2])]
        );
        assert_eq!(
            enumerate_wcis(1, 2, SearchCaps::default()).found,
            vec![p(&[1, 1], &[])]
        );
    }

    #[test]
    fn index_above_bound_is_empty() {
        let result = enumerate_wcis(2, 5, SearchCaps::default());
        assert!(result.found.is_empty());
        assert!(result.undecided.is_empty());
    }

    #[test]
    fn small_caps_lose_entries() {
        let caps = SearchCaps {
            max_degree: 5,
            ..SearchCaps::default()
        };
        let report = reproduce_tables(caps);
        assert!(!report.passed());
        assert!(report.fano.missing.contains(&p(&[1, 1, 2, 3], &[6])));
        assert!(report.calabi_yau.missing.contains(&p(&[1, 1, 1, 3], &[6])));
        assert!(report.calabi_yau.missing.contains(&p(&[1, 2, 3], &[6])));

        let caps = SearchCaps {
            max_codim: 1,
            ..SearchCaps::default()
        };
        let report = reproduce_tables(caps);
        assert!(!report.passed());
        assert_eq!(report.fano.missing, vec![p(&[1, 1, 1, 1, 1], &[2, 2])]);
        assert_eq!(
            report.calabi_yau.missing,
            vec![
                p(&[1, 1, 1, 1], &[2, 2]),
                p(&[1, 1, 1, 1, 1], &[2, 3]),
                p(&[1, 1, 1, 1, 1, 1], &[2, 2, 2]),
            ]
        );
    }

    #[test]
    fn cap_warnings_flag_boundary_hits() {
        let report = reproduce_tables(SearchCaps::default());
        assert!(report
            .warnings
            .iter()
            .any(|w| w.starts_with("w=1,1,1,1,1,1 d=2,2,2") && w.contains("max_codim")));
        assert_eq!(
            cap_warning(&p(&[1, 1, 2, 3], &[6]), SearchCaps::default()),
            None
        );
    }

    #[test]
    fn coindex2_family_list() {
        let expected = coindex2_expected(3);
        assert_eq!(
            expected,
            vec![
                p(&[1, 1, 1, 1, 1], &[3]),
                p(&[1, 1, 1, 1, 2], &[4]),
                p(&[1, 1, 1, 2, 3], &[6]),
                p(&[1, 1, 1, 1, 1, 1], &[2, 2]),
            ]
        );
        assert!(expected.iter().all(|pres| pres.index() == 2));
    }

    #[test]
    fn close_under_matches_semigroup_membership() {
        use crate::checks::semigroup_member;
        for max in [0u64, 17, 63, 64, 65, 130] {
            for gens in [vec![4u64], vec![6, 10], vec![7, 9, 12], vec![1], vec![70]] {
                let words = max as usize / 64 + 1;
                let mut table = vec![0u64; words];
                table[0] = 1;
                for &g in &gens {
                    close_under(&mut table, g, max);
                }
                for d in 0..words as u64 * 64 {
                    let bit = table[d as usize / 64] & (1 << (d % 64)) != 0;
                    let expected = d <= max && semigroup_member(d, &gens);
                    assert_eq!(bit, expected, "max={max} gens={gens:?} d={d}");
                }
            }
        }
    }

    #[test]
    fn strata_cover_every_value_subset() {
        use crate::checks::semigroup_member;
        let weights = [1, 2, 2, 4, 6, 9];
        let strata = Strata::new(&weights, 40);
        // p = 2: values {2, 4, 6}; p = 3: values {6, 9}
        assert_eq!(strata.len(), 7 + 3);
        for index in 0..strata.len() {
            let p = strata.primes[index];
            assert!(weights.iter().filter(|w| *w % p == 0).count() >= strata.needed[index]);
            for d in 0..=40 {
                if strata.attainable(index, d) {
                    assert!(d % p == 0 && !weights.contains(&d));
                }
            }
        }
        // the full 2-divisible set: four weights, degrees in <2, 4, 6> that are not weights
        let full = (0..strata.len())
            .find(|&i| strata.primes[i] == 2 && strata.needed[i] == 4)
            .unwrap();
        for d in 0..=40 {
            let expected = semigroup_member(d, &[2, 4, 6]) && !weights.contains(&d);
            assert_eq!(strata.attainable(full, d), expected);
        }
        assert_eq!(strata.next(full, 5), Some(8));
        assert_eq!(strata.next(full, 41), None);
    }

    #[test]
    fn dimension_zero_is_empty() {
        let result = enumerate_wcis(0, 1, SearchCaps::default());
        assert!(result.found.is_empty() && result.undecided.is_empty());
    }
}
