//! Dual construction of syntactic monoids for classical languages.
//!
//! For a regular language `L`, the boolean algebra generated by the two-sided
//! derivatives of the reversed language is closed under derivatives; its
//! atoms carry a deterministic transition structure and a monoid
//! multiplication through representative words. That monoid is isomorphic to
//! the syntactic monoid of `L`, and the atoms of the left-derivative-only
//! closure recover the minimal automaton — both checked here against the
//! direct constructions.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use crate::automaton::{run, DAutomaton};
use crate::error::Error;
use crate::free::{Alphabet, FreeElement, Word};
use crate::guard;
use crate::minimize::minimize;
use crate::syntactic::{syntactic_monoid, FiniteDMonoid, SyntacticResult};
use crate::variety::{FiniteDObject, VarietySpec, VarietyTag};

/// A regular language, owned as its canonical minimal complete DFA. Equality
/// of handles is equality of canonical forms, hence of languages.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegularLanguageHandle {
    dfa: DAutomaton,
}

impl RegularLanguageHandle {
    pub fn new(a: &DAutomaton) -> Result<Self, Error> {
        if a.variety.tag() != VarietyTag::Set {
            return Err(Error::VarietyMismatch {
                expected: "set".into(),
                got: a.variety.tag().to_string(),
            });
        }
        Ok(RegularLanguageHandle { dfa: minimize(a)?.0 })
    }

    pub fn dfa(&self) -> &DAutomaton {
        &self.dfa
    }

    pub fn size(&self) -> usize {
        self.dfa.size()
    }

    pub fn contains(&self, w: &[u8]) -> bool {
        self.dfa.accepts_word(w).unwrap_or(false)
    }

    fn order_key(&self) -> (usize, &Vec<Vec<usize>>, &Vec<usize>) {
        (self.dfa.size(), &self.dfa.delta, &self.dfa.output)
    }
}

impl PartialOrd for RegularLanguageHandle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RegularLanguageHandle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

/// Minimal DFA of the reversed language: reverse all transitions, take the
/// final states as initial set, determinize by the subset construction and
/// minimize.
pub fn reverse(l: &RegularLanguageHandle) -> Result<RegularLanguageHandle, Error> {
    let a = &l.dfa;
    let n = a.size();
    let k = a.alphabet.len();
    let mut preds: Vec<Vec<Vec<u16>>> = vec![vec![Vec::new(); n]; k];
    for (letter, row) in a.delta.iter().enumerate() {
        for (q, &t) in row.iter().enumerate() {
            preds[letter][t].push(q as u16);
        }
    }
    let start: Vec<u16> = (0..n as u16).filter(|&q| a.output[q as usize] == 1).collect();
    let mut ids: HashMap<Vec<u16>, usize> = Default::default();
    let mut subsets = vec![start.clone()];
    ids.insert(start, 0);
    let mut delta: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut head = 0;
    while head < subsets.len() {
        let cur = subsets[head].clone();
        for (letter, pred) in preds.iter().enumerate() {
            let mut next: Vec<u16> = Vec::new();
            for &q in &cur {
                for &p in &pred[q as usize] {
                    next.push(p);
                }
            }
            next.sort_unstable();
            next.dedup();
            let fresh = subsets.len();
            let id = *ids.entry(next.clone()).or_insert_with(|| {
                subsets.push(next);
                fresh
            });
            guard::check_carrier(subsets.len())?;
            delta[letter].push(id);
        }
        head += 1;
    }
    let output = subsets
        .iter()
        .map(|set| usize::from(set.contains(&(a.initial as u16))))
        .collect();
    let rev = DAutomaton {
        variety: VarietySpec::new(VarietyTag::Set)?,
        alphabet: a.alphabet.clone(),
        states: FiniteDObject::set(subsets.len()),
        delta,
        initial: 0,
        output,
    };
    RegularLanguageHandle::new(&rev)
}

/// All distinct two-sided derivatives `u⁻¹ L v⁻¹`, computed by varying the
/// initial state over the minimal DFA and the final set over the closure of
/// `F` under per-letter preimages.
pub fn two_sided_derivatives(
    l: &RegularLanguageHandle,
) -> Result<Vec<RegularLanguageHandle>, Error> {
    let a = &l.dfa;
    let n = a.size();
    let finals: Vec<bool> = a.output.iter().map(|&y| y == 1).collect();
    let mut final_sets: Vec<Vec<bool>> = vec![finals.clone()];
    let mut seen: HashSet<Vec<bool>> = [finals].into_iter().collect();
    let mut head = 0;
    while head < final_sets.len() {
        let cur = final_sets[head].clone();
        head += 1;
        for row in &a.delta {
            let pre: Vec<bool> = (0..n).map(|q| cur[row[q]]).collect();
            if seen.insert(pre.clone()) {
                final_sets.push(pre);
            }
        }
    }
    let mut out: Vec<RegularLanguageHandle> = Vec::new();
    let mut dedup: HashSet<RegularLanguageHandle> = Default::default();
    for initial in 0..n {
        for fs in &final_sets {
            let candidate = DAutomaton {
                variety: a.variety.clone(),
                alphabet: a.alphabet.clone(),
                states: FiniteDObject::set(n),
                delta: a.delta.clone(),
                initial,
                output: fs.iter().map(|&b| usize::from(b)).collect(),
            };
            let handle = RegularLanguageHandle::new(&candidate)?;
            if dedup.insert(handle.clone()) {
                out.push(handle);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Left derivatives only: the languages of the minimal DFA of `L` with the
/// initial state varied over all (reachable) states.
pub fn left_derivative_closure(
    l: &RegularLanguageHandle,
) -> Result<Vec<RegularLanguageHandle>, Error> {
    let a = &l.dfa;
    let mut out = Vec::new();
    let mut dedup: HashSet<RegularLanguageHandle> = Default::default();
    for initial in 0..a.size() {
        let candidate = DAutomaton { initial, ..a.clone() };
        let handle = RegularLanguageHandle::new(&candidate)?;
        if dedup.insert(handle.clone()) {
            out.push(handle);
        }
    }
    out.sort();
    Ok(out)
}

/// The boolean algebra generated by a finite, derivative-closed family of
/// languages, presented by its atoms: the nonempty acceptance-vector classes
/// of the synchronized product of the generators' minimal DFAs.
#[derive(Debug, Clone)]
pub struct LocalVariety {
    pub generators: Vec<RegularLanguageHandle>,
    pub alphabet: Alphabet,
    /// product transitions, `delta[letter][product_state]`.
    product_delta: Vec<Vec<u32>>,
    product_initial: u32,
    /// atom index of each product state.
    atom_of_state: Vec<u32>,
    /// acceptance vector and materialized language of each atom, ordered by
    /// first appearance in the shortlex BFS of the product.
    pub atoms: Vec<(Vec<bool>, RegularLanguageHandle)>,
}

impl LocalVariety {
    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    /// Atom index of a word.
    pub fn atom_of_word(&self, w: &[u8]) -> usize {
        let mut q = self.product_initial;
        for &l in w {
            q = self.product_delta[l as usize][q as usize];
        }
        self.atom_of_state[q as usize] as usize
    }

    /// Atom handle lookup by acceptance vector.
    pub fn atom_table(&self) -> HashMap<Vec<bool>, RegularLanguageHandle> {
        self.atoms.iter().cloned().collect()
    }
}

/// Builds the product automaton of the generators, groups its reachable
/// states by acceptance vector, and materializes each class as a language.
/// Atoms are pairwise disjoint, jointly exhaustive and nonempty.
pub fn boolean_closure_atoms(gens: &[RegularLanguageHandle]) -> Result<LocalVariety, Error> {
    if gens.is_empty() {
        return Err(Error::Config("atom construction needs at least one generator".into()));
    }
    let alphabet = gens[0].dfa.alphabet.clone();
    if gens.iter().any(|g| g.dfa.alphabet != alphabet) {
        return Err(Error::Config("generators must share one alphabet".into()));
    }
    let k = alphabet.len();
    let start: Vec<u16> = gens.iter().map(|g| g.dfa.initial as u16).collect();
    let mut ids: HashMap<Vec<u16>, u32> = Default::default();
    let mut tuples = vec![start.clone()];
    ids.insert(start, 0);
    let mut delta: Vec<Vec<u32>> = vec![Vec::new(); k];
    let mut head = 0;
    while head < tuples.len() {
        let cur = tuples[head].clone();
        for (letter, row) in delta.iter_mut().enumerate() {
            let next: Vec<u16> = cur
                .iter()
                .zip(gens)
                .map(|(&q, g)| g.dfa.delta[letter][q as usize] as u16)
                .collect();
            let fresh = tuples.len() as u32;
            let id = *ids.entry(next.clone()).or_insert_with(|| {
                tuples.push(next);
                fresh
            });
            guard::check_carrier(tuples.len())?;
            row.push(id);
        }
        head += 1;
    }
    let vector_of = |tuple: &[u16]| -> Vec<bool> {
        tuple
            .iter()
            .zip(gens)
            .map(|(&q, g)| g.dfa.output[q as usize] == 1)
            .collect()
    };
    let mut atom_ids: HashMap<Vec<bool>, u32> = Default::default();
    let mut atoms_vec: Vec<Vec<bool>> = Vec::new();
    let mut atom_of_state = Vec::with_capacity(tuples.len());
    for tuple in &tuples {
        let vec = vector_of(tuple);
        let fresh = atoms_vec.len() as u32;
        let id = *atom_ids.entry(vec.clone()).or_insert_with(|| {
            atoms_vec.push(vec);
            fresh
        });
        atom_of_state.push(id);
    }
    let mut atoms = Vec::with_capacity(atoms_vec.len());
    for (aid, vec) in atoms_vec.iter().enumerate() {
        let output = atom_of_state.iter().map(|&id| usize::from(id as usize == aid)).collect();
        let atom_dfa = DAutomaton {
            variety: VarietySpec::new(VarietyTag::Set)?,
            alphabet: alphabet.clone(),
            states: FiniteDObject::set(tuples.len()),
            delta: delta
                .iter()
                .map(|row| row.iter().map(|&x| x as usize).collect())
                .collect(),
            initial: 0,
            output,
        };
        atoms.push((vec.clone(), RegularLanguageHandle::new(&atom_dfa)?));
    }
    Ok(LocalVariety {
        generators: gens.to_vec(),
        alphabet,
        product_delta: delta,
        product_initial: 0,
        atom_of_state,
        atoms,
    })
}

/// Deterministic transition structure on the atoms: `z --a--> z'` where `z'`
/// is the unique atom with `a·z ⊆ z'`. Fails with
/// [`Error::NonFunctionalTransition`] when the generator family was not
/// derivative-closed. The initial atom is the one containing the empty word,
/// which is atom 0 by construction.
pub fn dual_transitions(v: &LocalVariety) -> Result<Vec<Vec<usize>>, Error> {
    let k = v.alphabet.len();
    let n = v.product_delta[0].len();
    let atom_count = v.atoms.len();
    let mut transitions = vec![vec![usize::MAX; atom_count]; k];
    for letter in 0..k {
        // synchronized pairs (state of w, state of a·w) over all words w
        let start = (v.product_initial, v.product_delta[letter][v.product_initial as usize]);
        let mut seen = vec![false; n * n];
        let mut stack = vec![start];
        seen[start.0 as usize * n + start.1 as usize] = true;
        let mut targets: Vec<HashSet<u32>> = vec![HashSet::new(); atom_count];
        while let Some((p, q)) = stack.pop() {
            targets[v.atom_of_state[p as usize] as usize].insert(v.atom_of_state[q as usize]);
            for row in &v.product_delta {
                let np = row[p as usize];
                let nq = row[q as usize];
                if !seen[np as usize * n + nq as usize] {
                    seen[np as usize * n + nq as usize] = true;
                    stack.push((np, nq));
                }
            }
        }
        for (z, succ) in targets.iter().enumerate() {
            match succ.len() {
                1 => transitions[letter][z] = *succ.iter().next().unwrap() as usize,
                _ => {
                    return Err(Error::NonFunctionalTransition {
                        atom: format!("atom {z}"),
                        letter: v.alphabet.char_of(letter as u8),
                    })
                }
            }
        }
    }
    Ok(transitions)
}

/// Dual algebra on the atoms: initial atom, transitions, and the monoid
/// multiplication obtained by composing representative words. Representative
/// independence is asserted with second witnesses where they exist.
#[derive(Debug, Clone)]
pub struct DualAlgebra {
    pub variety: LocalVariety,
    pub initial: usize,
    /// `transitions[letter][atom]`.
    pub transitions: Vec<Vec<usize>>,
    pub monoid: FiniteDMonoid,
    /// shortlex-least word reaching each atom from the initial one.
    pub witnesses: Vec<Word>,
}

pub fn dual_algebra(v: &LocalVariety) -> Result<DualAlgebra, Error> {
    let transitions = dual_transitions(v)?;
    let atom_count = v.atoms.len();
    let k = v.alphabet.len();
    let initial = 0usize;
    // first two shortlex witnesses per atom; expanding only recorded
    // witnesses is enough because prefixes of the two least words reaching an
    // atom are among the two least words of their own endpoints
    let mut witnesses: Vec<Vec<Word>> = vec![Vec::new(); atom_count];
    let mut heap: BinaryHeap<Reverse<((usize, Word), usize)>> = BinaryHeap::new();
    heap.push(Reverse(((0, Vec::new()), initial)));
    while let Some(Reverse(((_, word), atom))) = heap.pop() {
        if witnesses[atom].len() >= 2 || witnesses[atom].contains(&word) {
            continue;
        }
        witnesses[atom].push(word.clone());
        for letter in 0..k {
            let mut next = word.clone();
            next.push(letter as u8);
            let target = transitions[letter][atom];
            if witnesses[target].len() < 2 {
                heap.push(Reverse(((next.len(), next), target)));
            }
        }
    }
    debug_assert!(witnesses.iter().all(|w| !w.is_empty()), "dual algebra must be reachable");
    let run_from_atom = |mut z: usize, w: &Word| -> usize {
        for &l in w {
            z = transitions[l as usize][z];
        }
        z
    };
    let mut rows = vec![vec![0usize; atom_count]; atom_count];
    for z in 0..atom_count {
        for z2 in 0..atom_count {
            let prod = run_from_atom(z, &witnesses[z2][0]);
            if let Some(second) = witnesses[z2].get(1) {
                assert_eq!(
                    prod,
                    run_from_atom(z, second),
                    "atom multiplication must not depend on the representative word"
                );
            }
            rows[z][z2] = prod;
        }
    }
    let names: Vec<FreeElement> =
        witnesses.iter().map(|w| FreeElement::Word(w[0].clone())).collect();
    let monoid =
        FiniteDMonoid::from_rows(FiniteDObject::set(atom_count), &rows, initial, names);
    Ok(DualAlgebra {
        variety: v.clone(),
        initial,
        transitions,
        monoid,
        witnesses: witnesses.iter().map(|w| w[0].clone()).collect(),
    })
}

/// Result of [`verify_syndual`]: the two independently constructed monoids
/// and whether the generator-respecting isomorphism exists.
#[derive(Debug)]
pub struct SyndualReport {
    pub iso: bool,
    pub dual: DualAlgebra,
    pub syntactic: SyntacticResult,
}

/// Builds the dual algebra of the smallest local variety containing the
/// reversal of `L`, builds the syntactic monoid of `L` directly, and checks
/// that the generator-respecting map between them is an isomorphism.
pub fn verify_syndual(l: &RegularLanguageHandle) -> Result<SyndualReport, Error> {
    let rev = reverse(l)?;
    let gens = two_sided_derivatives(&rev)?;
    let variety = boolean_closure_atoms(&gens)?;
    let dual = dual_algebra(&variety)?;
    let syntactic = syntactic_monoid(&l.dfa)?;
    let iso = monoid_iso_on_generators(&dual, &syntactic)?;
    Ok(SyndualReport { iso, dual, syntactic })
}

fn monoid_iso_on_generators(
    dual: &DualAlgebra,
    syn: &SyntacticResult,
) -> Result<bool, Error> {
    let s = syn.syn();
    if dual.monoid.size() != s.size() {
        return Ok(false);
    }
    // the map is forced on generators, hence unique if it exists
    let mut h = Vec::with_capacity(dual.monoid.size());
    for w in &dual.witnesses {
        h.push(syn.pair.eval_free(&FreeElement::Word(w.clone()))?);
    }
    let mut image: Vec<usize> = h.clone();
    image.sort_unstable();
    image.dedup();
    if image.len() != s.size() {
        return Ok(false);
    }
    if h[dual.monoid.unit] != s.unit {
        return Ok(false);
    }
    for x in 0..dual.monoid.size() {
        for y in 0..dual.monoid.size() {
            if h[dual.monoid.mult(x, y)] != s.mult(h[x], h[y]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that the atoms of the boolean closure of the left derivatives of
/// the reversed language form exactly the minimal automaton of `L`: equal
/// state counts and a bijection respecting the initial state and all
/// transitions.
pub fn verify_mindual(l: &RegularLanguageHandle) -> Result<bool, Error> {
    let rev = reverse(l)?;
    let gens = left_derivative_closure(&rev)?;
    let variety = boolean_closure_atoms(&gens)?;
    let transitions = dual_transitions(&variety)?;
    let min = &l.dfa;
    if variety.atom_count() != min.size() {
        return Ok(false);
    }
    // witness word per atom by BFS over the dual transitions
    let atom_count = variety.atom_count();
    let mut witness: Vec<Option<Word>> = vec![None; atom_count];
    witness[0] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(z) = queue.pop_front() {
        for letter in 0..variety.alphabet.len() {
            let t = transitions[letter][z];
            if witness[t].is_none() {
                let mut w = witness[z].clone().unwrap();
                w.push(letter as u8);
                witness[t] = Some(w);
                queue.push_back(t);
            }
        }
    }
    let mut map = vec![usize::MAX; atom_count];
    let mut hit = vec![false; min.size()];
    for (z, w) in witness.iter().enumerate() {
        let w = match w {
            Some(w) => w,
            None => return Ok(false),
        };
        let state = run(min, w)?;
        if hit[state] {
            return Ok(false);
        }
        hit[state] = true;
        map[z] = state;
    }
    if map[0] != min.initial {
        return Ok(false);
    }
    for (letter, row) in transitions.iter().enumerate() {
        for z in 0..atom_count {
            if map[row[z]] != min.delta[letter][map[z]] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::dfa;
    use crate::regex::compile_regex;

    fn ab() -> Alphabet {
        Alphabet::from_str("ab").unwrap()
    }

    fn handle(pattern: &str) -> RegularLanguageHandle {
        RegularLanguageHandle::new(&compile_regex(pattern, &ab()).unwrap()).unwrap()
    }

    #[test]
    fn reverse_of_abstar_is_bastar() {
        let rev = reverse(&handle("(ab)*")).unwrap();
        let expect = handle("(ba)*");
        assert_eq!(rev, expect);
        for w in ab().words_upto(6) {
            let r: Vec<u8> = w.iter().rev().copied().collect();
            assert_eq!(rev.contains(&w), handle("(ab)*").contains(&r));
        }
    }

    #[test]
    fn reverse_is_involutive() {
        for pattern in ["(ab)*", "a|b", "(a|b)*abb", "∅"] {
            let l = handle(pattern);
            assert_eq!(reverse(&reverse(&l).unwrap()).unwrap(), l, "{pattern}");
        }
    }

    #[test]
    fn reverse_fixes_palindromic_languages() {
        let even_a = RegularLanguageHandle::new(&dfa(
            &ab(),
            2,
            vec![vec![1, 0], vec![0, 1]],
            0,
            &[0],
        ))
        .unwrap();
        assert_eq!(reverse(&even_a).unwrap(), even_a);
    }

    #[test]
    fn derivatives_of_total_and_empty() {
        let total = handle("(a|b)*");
        assert_eq!(two_sided_derivatives(&total).unwrap(), vec![total.clone()]);
        let empty = handle("∅");
        assert_eq!(two_sided_derivatives(&empty).unwrap(), vec![empty.clone()]);
    }

    #[test]
    fn derivatives_of_abstar() {
        let l = handle("(ab)*");
        let ds = two_sided_derivatives(&l).unwrap();
        assert_eq!(ds.len(), 5);
        for expect in ["(ab)*", "b(ab)*", "∅", "(ab)*a", "(ba)*"] {
            assert!(ds.contains(&handle(expect)), "missing {expect}");
        }
    }

    #[test]
    fn atoms_of_single_total_generator() {
        let v = boolean_closure_atoms(&[handle("(a|b)*")]).unwrap();
        assert_eq!(v.atom_count(), 1);
    }

    #[test]
    fn atoms_of_parity() {
        let even_a = RegularLanguageHandle::new(&dfa(
            &ab(),
            2,
            vec![vec![1, 0], vec![0, 1]],
            0,
            &[0],
        ))
        .unwrap();
        let v = boolean_closure_atoms(std::slice::from_ref(&even_a)).unwrap();
        assert_eq!(v.atom_count(), 2);
        // atoms partition: every word falls in exactly one
        for w in ab().words_upto(4) {
            let idx = v.atom_of_word(&w);
            let members: Vec<bool> =
                v.atoms.iter().map(|(_, h)| h.contains(&w)).collect();
            assert_eq!(members.iter().filter(|&&b| b).count(), 1);
            assert!(members[idx]);
        }
    }

    #[test]
    fn non_derivative_closed_generators_are_caught() {
        // {(ab)*} alone is not derivative-closed: prepending a to its
        // complement atom straddles both atoms
        let v = boolean_closure_atoms(std::slice::from_ref(&handle("(ab)*"))).unwrap();
        assert_eq!(v.atom_count(), 2);
        assert!(matches!(
            dual_transitions(&v),
            Err(Error::NonFunctionalTransition { .. })
        ));
    }

    #[test]
    fn parity_dual_algebra_is_z2() {
        let even_a = RegularLanguageHandle::new(&dfa(
            &ab(),
            2,
            vec![vec![1, 0], vec![0, 1]],
            0,
            &[0],
        ))
        .unwrap();
        let rev = reverse(&even_a).unwrap();
        let v = boolean_closure_atoms(&two_sided_derivatives(&rev).unwrap()).unwrap();
        let dual = dual_algebra(&v).unwrap();
        assert_eq!(dual.monoid.size(), 2);
        assert_eq!(dual.monoid.mult(1, 1), 0);
    }

    #[test]
    fn syndual_known_languages() {
        let even_a = RegularLanguageHandle::new(&dfa(
            &ab(),
            2,
            vec![vec![1, 0], vec![0, 1]],
            0,
            &[0],
        ))
        .unwrap();
        for (l, size) in [
            (handle("(a|b)*"), 1),
            (handle("(ab)*"), 6),
            (even_a, 2),
        ] {
            let report = verify_syndual(&l).unwrap();
            assert!(report.iso);
            assert_eq!(report.dual.monoid.size(), size);
            assert_eq!(report.syntactic.syn().size(), size);
        }
    }

    #[test]
    fn mindual_known_languages() {
        assert!(verify_mindual(&handle("(a|b)*")).unwrap());
        assert!(verify_mindual(&handle("(ab)*")).unwrap());
        assert!(verify_mindual(&handle("a|b")).unwrap());
        // 3 atoms for (ab)*: check the counts explicitly
        let rev = reverse(&handle("(ab)*")).unwrap();
        let v = boolean_closure_atoms(&left_derivative_closure(&rev).unwrap()).unwrap();
        assert_eq!(v.atom_count(), 3);
    }

    #[test]
    fn random_syndual_and_mindual_sweep() {
        use crate::automaton::random_automaton;
        let v = VarietySpec::new(VarietyTag::Set).unwrap();
        for seed in 0..10 {
            let a = random_automaton(&v, 3, &ab(), 1000 + seed).unwrap();
            let l = RegularLanguageHandle::new(&a).unwrap();
            let report = verify_syndual(&l).unwrap();
            assert!(report.iso, "syndual failed at seed {seed}");
            assert!(verify_mindual(&l).unwrap(), "mindual failed at seed {seed}");
        }
    }
}
