//! Todd-Coxeter coset enumeration over the trivial subgroup, HLT strategy
//! with a lookahead-and-compact pass when the table hits its row budget.
//! Coset numbering is by first appearance, so runs are deterministic for a
//! fixed presentation.

use std::collections::VecDeque;

use thiserror::Error;

use crate::presentation::Presentation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CosetError {
    #[error("enumeration aborted: coset limit {0} exceeded")]
    Aborted(usize),
    #[error("coset limit must be at least 1")]
    BadLimit,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnumStatus {
    InProgress,
    Complete,
    Aborted,
}

/// The coset table: one row per coset, one column per generator and per
/// inverse generator. Entry 0 means undefined. Row 1 is the subgroup coset.
#[derive(Clone, Debug)]
pub struct CosetTable {
    ngens: usize,
    rows: Vec<Vec<u32>>, // rows[coset][col], coset ids 1-based; rows[0] unused
    parent: Vec<u32>,    // union-find over coset ids
    live: usize,
    pub status: EnumStatus,
}

impl CosetTable {
    fn new(ngens: usize) -> Self {
        CosetTable {
            ngens,
            rows: vec![vec![0; 2 * ngens.max(1)], vec![0; 2 * ngens.max(1)]],
            parent: vec![0, 1],
            live: 1,
            status: EnumStatus::InProgress,
        }
    }

    pub fn num_cosets(&self) -> usize {
        self.live
    }

    fn allocated(&self) -> usize {
        self.rows.len() - 1
    }

    fn ncols(&self) -> usize {
        2 * self.ngens.max(1)
    }

    fn rep(&mut self, mut a: u32) -> u32 {
        while self.parent[a as usize] != a {
            let up = self.parent[self.parent[a as usize] as usize];
            self.parent[a as usize] = up;
            a = up;
        }
        a
    }

    fn is_alive(&mut self, a: u32) -> bool {
        self.rep(a) == a
    }

    fn entry(&mut self, a: u32, col: usize) -> u32 {
        let raw = self.rows[a as usize][col];
        if raw == 0 {
            0
        } else {
            let r = self.rep(raw);
            self.rows[a as usize][col] = r;
            r
        }
    }

    fn define(&mut self, a: u32, col: usize) -> u32 {
        let b = self.rows.len() as u32;
        self.rows.push(vec![0; self.ncols()]);
        self.parent.push(b);
        self.live += 1;
        self.rows[a as usize][col] = b;
        self.rows[b as usize][col ^ 1] = a;
        b
    }

    /// Public view: the action of generator `g` (0-based) on a live coset,
    /// by current coset numbering.
    pub fn action(&mut self, coset: usize, gen: usize) -> Option<usize> {
        let e = self.entry(coset as u32, 2 * gen);
        if e == 0 {
            None
        } else {
            Some(e as usize)
        }
    }

    /// Live coset ids in increasing order.
    pub fn live_cosets(&mut self) -> Vec<u32> {
        (1..=self.allocated() as u32)
            .filter(|&a| self.rep(a) == a)
            .collect()
    }
}

fn word_cols(word: &[i32]) -> Vec<usize> {
    word.iter()
        .map(|&l| {
            let g = (l.unsigned_abs() - 1) as usize;
            if l > 0 {
                2 * g
            } else {
                2 * g + 1
            }
        })
        .collect()
}

struct Enumerator {
    table: CosetTable,
    queue: VecDeque<u32>,
    limit: usize,
}

impl Enumerator {
    fn merge(&mut self, a: u32, b: u32) {
        let x = self.table.rep(a);
        let y = self.table.rep(b);
        if x == y {
            return;
        }
        let (keep, kill) = if x < y { (x, y) } else { (y, x) };
        self.table.parent[kill as usize] = keep;
        self.table.live -= 1;
        self.queue.push_back(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(dead) = self.queue.pop_front() {
            for col in 0..self.table.ncols() {
                let delta = self.table.rows[dead as usize][col];
                if delta == 0 {
                    continue;
                }
                self.table.rows[dead as usize][col] = 0;
                // Remove the reciprocal link before re-routing it.
                self.table.rows[delta as usize][col ^ 1] = 0;
                let mu = self.table.rep(dead);
                let nu = self.table.rep(delta);
                let mu_img = self.table.entry(mu, col);
                if mu_img != 0 {
                    self.merge(nu, mu_img);
                } else {
                    let nu_img = self.table.entry(nu, col ^ 1);
                    if nu_img != 0 {
                        self.merge(mu, nu_img);
                    } else {
                        self.table.rows[mu as usize][col] = nu;
                        self.table.rows[nu as usize][col ^ 1] = mu;
                    }
                }
            }
        }
    }

    /// HLT scan of one relator from one coset, defining cosets to fill gaps.
    /// The unscanned segment is `word[i..=j]`; `j` goes signed so an empty
    /// gap after consuming position 0 is distinguishable from a gap of one.
    fn scan_and_fill(&mut self, alpha: u32, word: &[usize]) {
        if word.is_empty() {
            return;
        }
        let mut f = alpha;
        let mut i: isize = 0;
        let mut b = alpha;
        let mut j: isize = word.len() as isize - 1;
        loop {
            while i <= j {
                let next = self.table.entry(f, word[i as usize]);
                if next == 0 {
                    break;
                }
                f = next;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return;
            }
            while j >= i {
                let prev = self.table.entry(b, word[j as usize] ^ 1);
                if prev == 0 {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return;
            }
            if i == j {
                // Deduction closing the cycle.
                self.table.rows[f as usize][word[i as usize]] = b;
                self.table.rows[b as usize][word[i as usize] ^ 1] = f;
                return;
            }
            self.table.define(f, word[i as usize]);
        }
    }

    /// Scan without defining: deductions and coincidences only. Used by the
    /// lookahead pass.
    fn scan_only(&mut self, alpha: u32, word: &[usize]) {
        if word.is_empty() {
            return;
        }
        let mut f = alpha;
        let mut i: isize = 0;
        let mut b = alpha;
        let mut j: isize = word.len() as isize - 1;
        while i <= j {
            let next = self.table.entry(f, word[i as usize]);
            if next == 0 {
                break;
            }
            f = next;
            i += 1;
        }
        if i > j {
            if f != b {
                self.coincidence(f, b);
            }
            return;
        }
        while j >= i {
            let prev = self.table.entry(b, word[j as usize] ^ 1);
            if prev == 0 {
                break;
            }
            b = prev;
            j -= 1;
        }
        if j < i {
            self.coincidence(f, b);
        } else if i == j {
            self.table.rows[f as usize][word[i as usize]] = b;
            self.table.rows[b as usize][word[i as usize] ^ 1] = f;
        }
    }

    /// Renumbers live cosets consecutively, preserving their order. Returns
    /// the new id of the scan cursor.
    fn compact(&mut self, cursor: u32) -> u32 {
        let live = self.table.live_cosets();
        let mut remap = vec![0u32; self.table.allocated() + 1];
        for (new_idx, &old) in live.iter().enumerate() {
            remap[old as usize] = new_idx as u32 + 1;
        }
        let ncols = self.table.ncols();
        let mut rows = vec![vec![0u32; ncols]];
        for &old in &live {
            let mut row = Vec::with_capacity(ncols);
            for col in 0..ncols {
                let e = self.table.entry(old, col);
                row.push(if e == 0 { 0 } else { remap[e as usize] });
            }
            rows.push(row);
        }
        let live_count = live.len();
        self.table.rows = rows;
        self.table.parent = (0..=live_count as u32).collect();
        self.table.live = live_count;
        // The cursor moves to the new id of the first live coset at or after
        // its old position.
        let mut new_cursor = live_count as u32 + 1;
        for &old in &live {
            if old >= cursor {
                new_cursor = remap[old as usize];
                break;
            }
        }
        new_cursor
    }
}

/// Result of an enumeration: the group order when the table completed, and
/// the final table either way.
#[derive(Debug)]
pub struct EnumerationResult {
    pub order: Option<usize>,
    pub table: CosetTable,
}

/// Runs coset enumeration for the presentation over the trivial subgroup.
/// Completion means the table is a full permutation action and the number of
/// cosets is the group order. Exceeding `coset_limit` live cosets after a
/// lookahead-and-compact attempt aborts.
pub fn todd_coxeter(pres: &Presentation, coset_limit: usize) -> Result<EnumerationResult, CosetError> {
    if coset_limit == 0 {
        return Err(CosetError::BadLimit);
    }
    let ngens = pres.generators().len();
    let relators: Vec<Vec<usize>> = pres
        .relators()
        .iter()
        .map(|r| word_cols(r.word()))
        .collect();
    let mut e = Enumerator {
        table: CosetTable::new(ngens),
        queue: VecDeque::new(),
        limit: coset_limit,
    };
    let mut cursor: u32 = 1;
    loop {
        if cursor as usize > e.table.allocated() {
            break;
        }
        if !e.table.is_alive(cursor) {
            cursor += 1;
            continue;
        }
        for word in &relators {
            if !e.table.is_alive(cursor) {
                break;
            }
            e.scan_and_fill(cursor, word);
        }
        if e.table.is_alive(cursor) {
            for col in 0..e.table.ncols() {
                if ngens > 0 && e.table.entry(cursor, col) == 0 {
                    e.table.define(cursor, col);
                }
            }
        }
        cursor += 1;
        if e.table.allocated() > e.limit {
            // Lookahead: deduction-only sweep, then compact dead rows.
            let live = e.table.live_cosets();
            for alpha in live {
                if !e.table.is_alive(alpha) {
                    continue;
                }
                for word in &relators {
                    if !e.table.is_alive(alpha) {
                        break;
                    }
                    e.scan_only(alpha, word);
                }
            }
            cursor = e.compact(cursor);
            if e.table.allocated() > e.limit {
                e.table.status = EnumStatus::Aborted;
                return Ok(EnumerationResult {
                    order: None,
                    table: e.table,
                });
            }
        }
    }
    // A final compaction gives first-appearance numbering on the result.
    let _ = e.compact(1);
    e.table.status = EnumStatus::Complete;
    let order = e.table.num_cosets();
    debug_assert!(verify_complete(&mut e.table, pres));
    Ok(EnumerationResult {
        order: Some(order),
        table: e.table,
    })
}

/// Soundness of a completed table: every generator column is a permutation
/// of the live cosets and every relator traces back to its starting coset.
pub fn verify_complete(table: &mut CosetTable, pres: &Presentation) -> bool {
    if table.status != EnumStatus::Complete {
        return false;
    }
    let cosets = table.live_cosets();
    let ncols = table.ncols();
    for col in 0..ncols {
        let mut seen = vec![false; cosets.len() + 1];
        for &c in &cosets {
            let img = table.entry(c, col);
            if img == 0 || seen[img as usize] {
                return false;
            }
            seen[img as usize] = true;
        }
    }
    for r in pres.relators() {
        let word = word_cols(r.word());
        for &c in &cosets {
            let mut x = c;
            for &col in &word {
                x = table.entry(x, col);
            }
            if x != c {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{build_presentation, parse_presentation, Builtin};

    fn order_of(pres: &Presentation, limit: usize) -> usize {
        todd_coxeter(pres, limit).unwrap().order.expect("complete")
    }

    #[test]
    fn cyclic_group() {
        let p = parse_presentation("gens: a; rels: a^4").unwrap();
        assert_eq!(order_of(&p, 100), 4);
    }

    #[test]
    fn symmetric_group_on_coxeter_generators() {
        let p = parse_presentation("gens: a,b; rels: a^2, b^2, (a b)^3").unwrap();
        assert_eq!(order_of(&p, 100), 6);
    }

    #[test]
    fn symmetric_groups_via_presentations() {
        assert_eq!(
            order_of(&build_presentation(Builtin::Sn4 { n: 3 }), 1000),
            6
        );
        assert_eq!(
            order_of(&build_presentation(Builtin::Sn4 { n: 4 }), 1000),
            24
        );
        assert_eq!(
            order_of(&build_presentation(Builtin::Sn3 { n: 4 }), 1000),
            24
        );
    }

    #[test]
    fn pres11_orders() {
        assert_eq!(
            order_of(&build_presentation(Builtin::Pres11 { n: 2 }), 100),
            4
        );
        assert_eq!(
            order_of(&build_presentation(Builtin::Pres11 { n: 3 }), 2000),
            48
        );
    }

    #[test]
    fn table3_orders() {
        assert_eq!(
            order_of(&build_presentation(Builtin::Table3 { n: 2 }), 100),
            4
        );
        assert_eq!(
            order_of(&build_presentation(Builtin::Table3 { n: 3 }), 5000),
            48
        );
    }

    #[test]
    fn killing_kernel_leaves_symmetric_group() {
        for n in 2..=4 {
            let mut p = build_presentation(Builtin::Table3 { n });
            for pair in crate::perm::UPair::all(n) {
                let name = format!("g_{}_{}", pair.lo(), pair.hi());
                p.push_named(&[(&name, 1)]).unwrap();
            }
            let expected: usize = (1..=n).product();
            assert_eq!(order_of(&p, 5000), expected);
        }
    }

    #[test]
    fn free_generator_gets_enumerated_anyway() {
        // A generator absent from all relators makes the group infinite;
        // enumeration must abort rather than claim completion.
        let p = parse_presentation("gens: a, b; rels: a^2").unwrap();
        let r = todd_coxeter(&p, 50).unwrap();
        assert_eq!(r.order, None);
        assert_eq!(r.table.status, EnumStatus::Aborted);
    }

    #[test]
    fn infinite_group_aborts() {
        let p = build_presentation(Builtin::Artin2 { n: 3 });
        let r = todd_coxeter(&p, 200).unwrap();
        assert_eq!(r.order, None);
    }

    #[test]
    fn deterministic_tables() {
        let p = build_presentation(Builtin::Table3 { n: 3 });
        let mut a = todd_coxeter(&p, 5000).unwrap();
        let mut b = todd_coxeter(&p, 5000).unwrap();
        let ca = a.table.live_cosets();
        let cb = b.table.live_cosets();
        assert_eq!(ca, cb);
        for &c in &ca {
            for g in 0..p.generators().len() {
                assert_eq!(a.table.action(c as usize, g), b.table.action(c as usize, g));
            }
        }
    }

    #[test]
    fn completed_tables_verify() {
        for pres in [
            parse_presentation("gens: a; rels: a^7").unwrap(),
            build_presentation(Builtin::Sn4 { n: 4 }),
            build_presentation(Builtin::Pres11 { n: 3 }),
        ] {
            let mut r = todd_coxeter(&pres, 5000).unwrap();
            assert!(r.order.is_some());
            assert!(verify_complete(&mut r.table, &pres));
        }
    }

    #[test]
    fn bad_limit_rejected() {
        let p = parse_presentation("gens: a; rels: a^2").unwrap();
        assert!(matches!(todd_coxeter(&p, 0), Err(CosetError::BadLimit)));
    }
}
