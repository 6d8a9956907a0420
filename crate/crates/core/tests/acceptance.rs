//! Acceptance suite: one test per verification criterion, each printing a
//! pass line (run with `--nocapture` to see them). Every bound is exact; no
//! floating point is involved anywhere.

use modbraid::braid::{concat, invert, parse_word, BraidLetter, BraidWord};
use modbraid::burau::in_level;
use modbraid::chain::{
    check_chain_map, check_closed_forms, cocycle_via_section, eta, kappa, phi, Cell2,
};
use modbraid::coset::todd_coxeter;
use modbraid::ext::{
    bar_cocycle, elem_from_word, ext_mul, normal_generators_b4, omega_splitting_check,
    search_splitting_zn, verify_relation_table, ExtElement, RingTag, TableId,
};
use modbraid::perm::{pair_action, Permutation, UPair};
use modbraid::presentation::{
    build_extension_presentation, build_presentation, enumerate_zn, kernel_presentation_z2,
    zn_extension_data, Builtin,
};
use modbraid::strand::{winding_vector, PairVector, Ring};

fn pass(criterion: u32, detail: &str) {
    println!("criterion {criterion}: PASS - {detail}");
}

/// Closed-form cocycle correctness: the section cocycle evaluated through
/// the strand-diagram oracle equals `phi` over `Z` and `kappa` over `Z_2` on
/// every cell, exactly.
#[test]
fn criterion_01_closed_form_cocycles() {
    let mut cells = 0usize;
    for n in 3..=6 {
        for cell in Cell2::all(n) {
            assert_eq!(
                cocycle_via_section(&cell, n, RingTag::GN),
                phi(&cell, n),
                "phi mismatch at {cell}, n={n}"
            );
            assert_eq!(
                cocycle_via_section(&cell, n, RingTag::Z2),
                kappa(&cell, n),
                "kappa mismatch at {cell}, n={n}"
            );
            cells += 1;
        }
        // The three nonzero conjugation-cell orderings are exactly the ones
        // the closed form lists.
        for cell in Cell2::all(n) {
            if let Cell2::E(i, k, j) = cell {
                let nonzero = (i < k && k < j) || (j < i && i < k) || (k < j && j < i);
                assert_eq!(!phi(&cell, n).is_zero(), nonzero, "case split at {cell}");
            }
        }
    }
    pass(1, &format!("section cocycle = phi and kappa on {cells} cells, n=3..6"));
}

/// Mod 2 reduction: `eta . phi = kappa` on every cell.
#[test]
fn criterion_02_mod2_reduction() {
    let mut cells = 0usize;
    for n in 3..=6 {
        for cell in Cell2::all(n) {
            assert_eq!(eta(&phi(&cell, n)), kappa(&cell, n), "at {cell}, n={n}");
            cells += 1;
        }
    }
    pass(2, &format!("eta . phi = kappa on {cells} cells, n=3..6"));
}

/// Cocycle condition, stated operationally: the group law is associative on
/// all |S_4|^3 section-element triples, and the cocycle is normalized.
#[test]
fn criterion_03_cocycle_condition() {
    let n = 4;
    let id = Permutation::identity(n);
    for ring in [RingTag::GN, RingTag::Z2] {
        for p in Permutation::all(n) {
            assert!(bar_cocycle(&p, &id, ring).unwrap().is_zero());
            assert!(bar_cocycle(&id, &p, ring).unwrap().is_zero());
        }
    }
    let mut triples = 0u64;
    for ring in [RingTag::GN, RingTag::Z2] {
        let elems: Vec<ExtElement> = Permutation::all(n)
            .into_iter()
            .map(|p| ExtElement {
                perm: p,
                vec: PairVector::zero(n, ring.kernel_ring()),
                ring,
            })
            .collect();
        for a in &elems {
            for b in &elems {
                let ab = ext_mul(a, b).unwrap();
                for c in &elems {
                    let lhs = ext_mul(&ab, c).unwrap();
                    let rhs = ext_mul(a, &ext_mul(b, c).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "associativity fails at ({a}, {b}, {c})");
                    triples += 1;
                }
            }
        }
    }
    assert_eq!(triples, 2 * 13_824);
    pass(3, "ext_mul associative on 13824 triples per ring, cocycle normalized");
}

struct OracleDfs {
    n: usize,
    ring: RingTag,
    alphabet: Vec<BraidLetter>,
    letters: Vec<BraidLetter>,
    prefix_elems: Vec<ExtElement>,
    budget: usize,
    checked: u64,
}

impl OracleDfs {
    fn elem(&self, letters: &[BraidLetter]) -> ExtElement {
        let w = BraidWord::new(self.n, letters.to_vec()).unwrap();
        elem_from_word(&w, self.ring).unwrap()
    }

    fn run(&mut self) {
        let len = self.letters.len();
        let whole = self.prefix_elems[len].clone();
        for split in 0..=len {
            let u = &self.prefix_elems[split];
            let v = self.elem(&self.letters[split..]);
            let product = ext_mul(u, &v).unwrap();
            assert_eq!(
                product, whole,
                "oracle mismatch: ring {:?}, word {:?} split at {split}",
                self.ring, self.letters
            );
            self.checked += 1;
        }
        if len < self.budget {
            for idx in 0..self.alphabet.len() {
                let letter = self.alphabet[idx];
                self.letters.push(letter);
                self.prefix_elems.push(self.elem(&self.letters));
                self.run();
                self.letters.pop();
                self.prefix_elems.pop();
            }
        }
    }
}

/// Oracle equivalence: the derived multiplication formula agrees with
/// direct braid-word evaluation on all products of Artin words with total
/// length up to 8, in both the integral and mod 2 extensions.
#[test]
fn criterion_04_oracle_equivalence() {
    let budget = 8;
    let mut total = 0u64;
    for n in 2..=4 {
        for ring in [RingTag::GN, RingTag::Z2] {
            let mut alphabet = Vec::new();
            for i in 1..n {
                alphabet.push(BraidLetter::artin(i, 1));
                alphabet.push(BraidLetter::artin(i, -1));
            }
            let mut dfs = OracleDfs {
                n,
                ring,
                alphabet,
                letters: Vec::new(),
                prefix_elems: vec![ExtElement::identity(n, ring)],
                budget,
                checked: 0,
            };
            dfs.run();
            total += dfs.checked;
        }
    }
    pass(4, &format!("{total} split products up to Artin length {budget} agree with ext_mul"));
}

/// Relation tables: every row of the three tables over all index tuples,
/// with the scaled table at t = 1, 2, 3.
#[test]
fn criterion_05_relation_tables() {
    let mut rows = 0usize;
    for n in 3..=6 {
        let mut reports = vec![
            verify_relation_table(TableId::One, n),
            verify_relation_table(TableId::Three, n),
        ];
        for t in 1..=3 {
            reports.push(verify_relation_table(TableId::Two { t }, n));
        }
        for report in reports {
            assert!(
                report.all_pass(),
                "{} has {} failing rows at n={n}",
                report.table,
                report.failures()
            );
            rows += report.rows.len();
        }
    }
    pass(5, &format!("{rows} relation rows hold across tables 1, 2 (t=1,2,3), 3, n=3..6"));
}

/// Order two of the integral class: the explicit section splits the scaled
/// extension for even t, while the mod 2 extension admits no splitting at
/// all for n = 2, 3, 4 (exhaustive over every lift assignment).
#[test]
fn criterion_06_order_two_and_nonsplitting() {
    for n in 2..=5 {
        let report = omega_splitting_check(n, 2).unwrap();
        assert!(report.all_pass(), "omega fails at n={n}, t=2");
    }
    for n in 2..=4 {
        assert!(
            search_splitting_zn(n).unwrap().is_none(),
            "unexpected splitting found at n={n}"
        );
    }
    pass(6, "omega splits G_n^2 for n<=5; no Z_n splitting exists for n=2,3,4");
}

/// Orders: elementwise closure, enumeration of the Artin-generator
/// presentation, and enumeration of the transposition-lift presentation all
/// give n! * 2^(n(n-1)/2).
#[test]
fn criterion_07_orders_triangulate() {
    let expected = [(2usize, 4usize), (3, 48), (4, 1536)];
    for (n, order) in expected {
        assert_eq!(enumerate_zn(n).unwrap(), order, "closure order at n={n}");
        let p11 = build_presentation(Builtin::Pres11 { n });
        assert_eq!(
            todd_coxeter(&p11, 1_000_000).unwrap().order,
            Some(order),
            "pres11 order at n={n}"
        );
        let t3 = build_presentation(Builtin::Table3 { n });
        assert_eq!(
            todd_coxeter(&t3, 1_000_000).unwrap().order,
            Some(order),
            "table3 order at n={n}"
        );
    }
    pass(7, "closure = pres11 = table3 orders: 4, 48, 1536 for n = 2, 3, 4");
}

/// Stretch target: the same triangulation at n = 5 (122,880 cosets).
/// Ignored by default; run with `cargo test -- --ignored`.
#[test]
#[ignore = "stretch target; enable with --ignored"]
fn criterion_07_stretch_orders_n5() {
    let p11 = build_presentation(Builtin::Pres11 { n: 5 });
    assert_eq!(todd_coxeter(&p11, 2_000_000).unwrap().order, Some(122_880));
    let t3 = build_presentation(Builtin::Table3 { n: 5 });
    assert_eq!(todd_coxeter(&t3, 2_000_000).unwrap().order, Some(122_880));
    pass(7, "stretch: pres11 and table3 both give 122880 at n = 5");
}

/// Chain map: the comparison map commutes with the differentials on every
/// cell, as exact free-module identities.
#[test]
fn criterion_08_chain_map() {
    let mut rows = 0usize;
    for n in 2..=5 {
        let report = check_chain_map(n);
        assert!(report.all_pass(), "chain map fails at n={n}");
        rows += report.rows.len();
    }
    pass(8, &format!("chain map commutes on {rows} cells, n<=5"));
}

/// Normal generators: every emitted normal generator of the level 4
/// subgroup dies in the mod 4 braid group and lies in the Burau kernel.
#[test]
fn criterion_09_level4_generators() {
    let mut count = 0usize;
    for n in 1..=5 {
        for w in normal_generators_b4(n) {
            let e = elem_from_word(&w, RingTag::Z2).unwrap();
            assert!(e.is_identity(), "{w} nontrivial in the mod 4 group, n={n}");
            assert!(in_level(&w, 4), "{w} outside level 4, n={n}");
            count += 1;
        }
    }
    pass(9, &format!("{count} normal generators are trivial mod 4 and in level 4, n<=5"));
}

/// Figure fixtures: the winding-vector values behind the conjugation and
/// commutation computations reproduce for every index pattern.
#[test]
fn criterion_10_figure_fixtures() {
    let mut cases = 0usize;
    for n in 2..=6 {
        let unit = |i: usize, j: usize| PairVector::unit(n, UPair::new(i, j), Ring::Z);
        // Conjugation of a half twist: zero correction on the clean
        // orderings, g_{ij} - g_{kj} on the other three.
        for i in 1..=n {
            for k in 1..=n {
                for j in 1..=n {
                    if i == k || k == j || i == j {
                        continue;
                    }
                    let w = parse_word(
                        &format!("B({i},{j}) B({j},{k}) B({i},{j})^-1 B({i},{k})^-1"),
                        n,
                    )
                    .unwrap();
                    let v = winding_vector(&w).unwrap();
                    let dirty = (i < k && k < j) || (j < i && i < k) || (k < j && j < i);
                    let want = if dirty {
                        unit(i, j).add(&unit(k, j).neg()).unwrap()
                    } else {
                        PairVector::zero(n, Ring::Z)
                    };
                    assert_eq!(v, want, "conjugation value at (i,k,j)=({i},{k},{j})");
                    cases += 1;
                }
            }
        }
        // Conjugating a full twist relabels its pair, for every pair of
        // pairs (shared point or not).
        for a in UPair::all(n) {
            for b in UPair::all(n) {
                let w = parse_word(
                    &format!(
                        "B({},{}) g({},{}) B({},{})^-1",
                        a.lo(),
                        a.hi(),
                        b.lo(),
                        b.hi(),
                        a.lo(),
                        a.hi()
                    ),
                    n,
                )
                .unwrap();
                let image = pair_action(&Permutation::transposition(a, n), b);
                assert_eq!(
                    winding_vector(&w).unwrap(),
                    PairVector::unit(n, image, Ring::Z),
                    "full twist conjugation at a={a}, b={b}"
                );
                cases += 1;
            }
        }
        // Commutators of half twists on disjoint pairs: the interleaved
        // four-term value, zero otherwise.
        for a in UPair::all(n) {
            for b in UPair::all(n) {
                if a == b || !a.is_disjoint(&b) {
                    continue;
                }
                let w = parse_word(
                    &format!(
                        "B({},{}) B({},{}) B({},{})^-1 B({},{})^-1",
                        a.lo(),
                        a.hi(),
                        b.lo(),
                        b.hi(),
                        a.lo(),
                        a.hi(),
                        b.lo(),
                        b.hi()
                    ),
                    n,
                )
                .unwrap();
                let (i, j, k, l) = (a.lo(), a.hi(), b.lo(), b.hi());
                let want = if i < k && k < j && j < l {
                    unit(i, k)
                        .add(&unit(i, l).neg())
                        .unwrap()
                        .add(&unit(j, k).neg())
                        .unwrap()
                        .add(&unit(j, l))
                        .unwrap()
                } else if k < i && i < l && l < j {
                    unit(k, i)
                        .neg()
                        .add(&unit(k, j))
                        .unwrap()
                        .add(&unit(i, l))
                        .unwrap()
                        .add(&unit(l, j).neg())
                        .unwrap()
                } else {
                    PairVector::zero(n, Ring::Z)
                };
                assert_eq!(winding_vector(&w).unwrap(), want, "commutator at {a},{b}");
                cases += 1;
            }
        }
        // Inversion and additivity spot checks used throughout the figures.
        let samples = [
            parse_word("g(1,2)", n).unwrap(),
            parse_word("B(1,2) B(1,2) B(1,2)^-1 B(1,2)^-1", n).unwrap(),
        ];
        for w in &samples {
            assert_eq!(
                winding_vector(&invert(w)).unwrap(),
                winding_vector(w).unwrap().neg()
            );
            for v in &samples {
                let sum = winding_vector(&concat(w, v).unwrap()).unwrap();
                assert_eq!(
                    sum,
                    winding_vector(w)
                        .unwrap()
                        .add(&winding_vector(v).unwrap())
                        .unwrap()
                );
                cases += 1;
            }
        }
    }
    pass(10, &format!("{cases} winding fixtures reproduce, n<=6"));
}

/// Extension constructor: built from the kernel and quotient presentations
/// with oracle-computed conjugation and lift data, the output relator set
/// equals the published table up to relator normalization.
#[test]
fn criterion_11_extension_constructor() {
    for n in 2..=4 {
        let pres_k = kernel_presentation_z2(n);
        let pres_q = build_presentation(Builtin::Sn4 { n });
        let data = zn_extension_data(n, &pres_q).unwrap();
        let built = build_extension_presentation(&pres_k, &pres_q, &data).unwrap();
        let table3 = build_presentation(Builtin::Table3 { n });
        assert_eq!(
            built.canonical_relator_set(),
            table3.canonical_relator_set(),
            "constructed relator set differs at n={n}"
        );
    }
    pass(11, "constructed extension presentation matches the table for n = 2, 3, 4");
}

/// The closed-form check bundled as a report, mirroring the CLI surface.
#[test]
fn closed_forms_report_is_all_green() {
    for n in 3..=6 {
        let report = check_closed_forms(n);
        assert!(report.all_pass(), "closed-forms report fails at n={n}");
    }
}
