//! Reachable parts, observability quotients, minimal automata, and automaton
//! isomorphism via canonical forms.
//!
//! An automaton is minimal iff it is reachable (every state is generated from
//! the initial state by letters and the variety's operations) and simple
//! (states are separated by output experiments). Minimization takes the
//! reachable part, quotients by the observability partition, and renames the
//! result canonically; isomorphism of reachable automata is then plain table
//! equality of canonical forms.

use crate::automaton::{validate_automaton, DAutomaton};
use crate::error::Error;
use crate::free::{fm_add, fm_complement, fm_embed_word, fm_join, fm_smul, fm_unit, FreeElement};
use crate::variety::{generated_subalgebra, quotient_by_partition, DOps, Partition};

/// What [`minimize`] did: sizes, the observability partition of the reachable
/// part, and per minimal state the least free element reaching it (a word for
/// word-reachable states, a compound element for states only generated by the
/// variety's operations).
#[derive(Debug, Clone)]
pub struct MinimizationReport {
    pub reachable_size: usize,
    pub minimal_size: usize,
    pub partition: Partition,
    pub witness_words: Vec<FreeElement>,
}

/// Word-reach closure from the initial state followed by the generated
/// subalgebra (the image of evaluation of all free elements). Returns the
/// restricted automaton and the inclusion map (new id -> old id).
pub fn reachable_part(a: &DAutomaton) -> Result<(DAutomaton, Vec<usize>), Error> {
    let n = a.states.size();
    // BFS over letters in alphabet order: discovery order is shortlex
    let mut seen = vec![false; n];
    let mut order = Vec::new();
    seen[a.initial] = true;
    order.push(a.initial);
    let mut head = 0;
    while head < order.len() {
        let q = order[head];
        head += 1;
        for row in &a.delta {
            let t = row[q];
            if !seen[t] {
                seen[t] = true;
                order.push(t);
            }
        }
    }
    let (sub, incl) = generated_subalgebra(&a.states, &order, &a.variety)?;
    let mut pos = vec![usize::MAX; n];
    for (new, &old) in incl.iter().enumerate() {
        pos[old] = new;
    }
    let delta = a
        .delta
        .iter()
        .map(|row| {
            incl.iter()
                .map(|&old| {
                    let t = pos[row[old]];
                    debug_assert_ne!(t, usize::MAX, "transitions leave the generated subalgebra");
                    t
                })
                .collect()
        })
        .collect();
    let output = incl.iter().map(|&old| a.output[old]).collect();
    let restricted = DAutomaton {
        variety: a.variety.clone(),
        alphabet: a.alphabet.clone(),
        states: sub,
        delta,
        initial: pos[a.initial],
        output,
    };
    Ok((restricted, incl))
}

/// The kernel of the observation map: the coarsest partition refining the
/// output-value partition that is stable under every letter. Since it is the
/// kernel of a homomorphism it is a congruence of the state object; this is
/// asserted, and a failure signals an implementation bug.
pub fn observability_partition(a: &DAutomaton) -> Partition {
    let n = a.states.size();
    let mut part: Vec<usize> = a.output.clone();
    let mut blocks = distinct(&part);
    loop {
        // each round refines the previous partition, so the block count is
        // non-decreasing and equality means a fixpoint
        let mut sig_ids: std::collections::HashMap<Vec<usize>, usize> = Default::default();
        let mut next = vec![0usize; n];
        for q in 0..n {
            let mut sig = Vec::with_capacity(1 + a.delta.len());
            sig.push(part[q]);
            for row in &a.delta {
                sig.push(part[row[q]]);
            }
            let fresh = sig_ids.len();
            next[q] = *sig_ids.entry(sig).or_insert(fresh);
        }
        let next_blocks = sig_ids.len();
        part = next;
        if next_blocks == blocks {
            break;
        }
        blocks = next_blocks;
    }
    let partition = Partition::from_assignment(&part);
    quotient_by_partition(&a.states, &partition, &a.variety)
        .expect("observability kernel must be a congruence");
    partition
}

fn distinct(part: &[usize]) -> usize {
    let mut seen = std::collections::HashSet::new();
    part.iter().for_each(|&b| {
        seen.insert(b);
    });
    seen.len()
}

/// Minimal automaton plus a report. The result is reachable, simple, in
/// canonical form, and accepts the same language as the input.
pub fn minimize(a: &DAutomaton) -> Result<(DAutomaton, MinimizationReport), Error> {
    let violations = validate_automaton(a);
    if !violations.is_empty() {
        return Err(Error::InvalidAutomaton(violations));
    }
    let (reach, _) = reachable_part(a)?;
    let partition = observability_partition(&reach);
    let (qstates, proj) = quotient_by_partition(&reach.states, &partition, &reach.variety)
        .expect("observability kernel must be a congruence");
    let reps = partition.representatives();
    let delta: Vec<Vec<usize>> = reach
        .delta
        .iter()
        .map(|row| reps.iter().map(|&r| proj[row[r]]).collect())
        .collect();
    // stability of the partition under letters
    for (l, row) in reach.delta.iter().enumerate() {
        for q in 0..reach.states.size() {
            debug_assert_eq!(proj[row[q]], delta[l][proj[q]], "partition not letter-stable");
        }
    }
    let output: Vec<usize> = reps.iter().map(|&r| reach.output[r]).collect();
    let quotiented = DAutomaton {
        variety: reach.variety.clone(),
        alphabet: reach.alphabet.clone(),
        states: qstates,
        delta,
        initial: proj[reach.initial],
        output,
    };
    let canon = canonicalize(&quotiented)?;
    debug_assert!(canon.full, "quotient of a reachable automaton must be reachable");
    let report = MinimizationReport {
        reachable_size: reach.states.size(),
        minimal_size: canon.automaton.size(),
        partition,
        witness_words: canon.witnesses.clone(),
    };
    Ok((canon.automaton, report))
}

/// A reachable automaton renamed into canonical state order, with one
/// reaching free element recorded per covered state.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub automaton: DAutomaton,
    /// old id -> canonical id, `usize::MAX` for uncovered (unreachable) states.
    pub old_to_new: Vec<usize>,
    /// canonical id -> old id.
    pub new_to_old: Vec<usize>,
    /// canonical id -> least reaching free element.
    pub witnesses: Vec<FreeElement>,
    /// whether every state was covered.
    pub full: bool,
}

/// Canonical naming: for pointed automata the basepoint is state 0; then
/// word-reachable states in shortlex-BFS order; then the constants of the
/// theory; then closure under the variety's operations in deterministic
/// sweeps. Two isomorphic reachable automata canonicalize to equal tables.
pub fn canonicalize(a: &DAutomaton) -> Result<CanonicalForm, Error> {
    let n = a.states.size();
    let v = &a.variety;
    let mut old_to_new = vec![usize::MAX; n];
    let mut new_to_old: Vec<usize> = Vec::new();
    let mut witnesses: Vec<FreeElement> = Vec::new();
    let assign = |old: usize,
                      wit: FreeElement,
                      old_to_new: &mut Vec<usize>,
                      new_to_old: &mut Vec<usize>,
                      witnesses: &mut Vec<FreeElement>| {
        if old_to_new[old] == usize::MAX {
            old_to_new[old] = new_to_old.len();
            new_to_old.push(old);
            witnesses.push(wit);
            true
        } else {
            false
        }
    };
    if let Some(bp) = a.states.basepoint() {
        assign(
            bp,
            FreeElement::PointedWord(None),
            &mut old_to_new,
            &mut new_to_old,
            &mut witnesses,
        );
    }
    // shortlex BFS over words
    let mut queue = std::collections::VecDeque::new();
    assign(
        a.initial,
        fm_unit(v),
        &mut old_to_new,
        &mut new_to_old,
        &mut witnesses,
    );
    queue.push_back(a.initial);
    while let Some(q) = queue.pop_front() {
        for (l, row) in a.delta.iter().enumerate() {
            let t = row[q];
            if old_to_new[t] == usize::MAX {
                let wit = crate::free::fm_multiply(
                    &witnesses[old_to_new[q]],
                    &fm_embed_word(&[l as u8], v),
                    v,
                )?;
                assign(t, wit, &mut old_to_new, &mut new_to_old, &mut witnesses);
                queue.push_back(t);
            }
        }
    }
    // remaining constants of the theory
    match a.states.ops() {
        DOps::Semilattice { bottom, .. } => {
            assign(
                *bottom,
                FreeElement::WordSet(Vec::new()),
                &mut old_to_new,
                &mut new_to_old,
                &mut witnesses,
            );
        }
        DOps::Vect { zero, .. } => {
            assign(
                *zero,
                FreeElement::Poly(Vec::new()),
                &mut old_to_new,
                &mut new_to_old,
                &mut witnesses,
            );
        }
        _ => {}
    }
    // closure under the variety's operations, deterministic sweep order
    loop {
        let mut grew = false;
        let mut i = 0;
        while i < new_to_old.len() {
            let x = new_to_old[i];
            match a.states.ops() {
                DOps::Set | DOps::Pointed { .. } => {}
                DOps::Involution { inv } => {
                    let t = inv[x];
                    if old_to_new[t] == usize::MAX {
                        let wit = fm_complement(&witnesses[i])?;
                        assign(t, wit, &mut old_to_new, &mut new_to_old, &mut witnesses);
                        grew = true;
                    }
                }
                DOps::Semilattice { join, .. } => {
                    let mut j = 0;
                    while j <= i {
                        let y = new_to_old[j];
                        let t = join[x][y];
                        if old_to_new[t] == usize::MAX {
                            let wit = fm_join(&witnesses[i], &witnesses[j])?;
                            assign(t, wit, &mut old_to_new, &mut new_to_old, &mut witnesses);
                            grew = true;
                        }
                        j += 1;
                    }
                }
                DOps::Vect { p, add, smul, .. } => {
                    for s in 2..*p as usize {
                        let t = smul[s][x];
                        if old_to_new[t] == usize::MAX {
                            let wit = fm_smul(s as u32, &witnesses[i], *p)?;
                            assign(t, wit, &mut old_to_new, &mut new_to_old, &mut witnesses);
                            grew = true;
                        }
                    }
                    let mut j = 0;
                    while j <= i {
                        let y = new_to_old[j];
                        let t = add[x][y];
                        if old_to_new[t] == usize::MAX {
                            let wit = fm_add(&witnesses[i], &witnesses[j], *p)?;
                            assign(t, wit, &mut old_to_new, &mut new_to_old, &mut witnesses);
                            grew = true;
                        }
                        j += 1;
                    }
                }
            }
            i += 1;
        }
        if !grew {
            break;
        }
    }
    let full = new_to_old.len() == n;
    let covered = new_to_old.len();
    let mut pos = vec![usize::MAX; n];
    for (new, &old) in new_to_old.iter().enumerate() {
        pos[old] = new;
    }
    // the covered part is a subalgebra and delta-closed, so restriction works
    let states = crate::variety::restrict_to(&a.states, &new_to_old, &pos);
    let delta = a
        .delta
        .iter()
        .map(|row| (0..covered).map(|i| pos[row[new_to_old[i]]]).collect())
        .collect();
    let output = (0..covered).map(|i| a.output[new_to_old[i]]).collect();
    let automaton = DAutomaton {
        variety: v.clone(),
        alphabet: a.alphabet.clone(),
        states,
        delta,
        initial: pos[a.initial],
        output,
    };
    Ok(CanonicalForm { automaton, old_to_new, new_to_old, witnesses, full })
}

/// Decides isomorphism and returns the state bijection (a-state -> b-state)
/// when one exists. Reachable automata are compared by canonical-form table
/// equality; unreachable remainders are matched by a small backtracking
/// search.
pub fn automaton_iso(a: &DAutomaton, b: &DAutomaton) -> Result<Option<Vec<usize>>, Error> {
    if a.variety != b.variety || a.alphabet != b.alphabet || a.states.size() != b.states.size() {
        return Ok(None);
    }
    let ca = canonicalize(a)?;
    let cb = canonicalize(b)?;
    if ca.automaton != cb.automaton {
        return Ok(None);
    }
    let n = a.states.size();
    let mut map = vec![usize::MAX; n];
    for (new, &old_a) in ca.new_to_old.iter().enumerate() {
        map[old_a] = cb.new_to_old[new];
    }
    if ca.full {
        return Ok(Some(map));
    }
    // match the unreachable remainders by backtracking
    let rem_a: Vec<usize> = (0..n).filter(|&q| ca.old_to_new[q] == usize::MAX).collect();
    let rem_b: Vec<usize> = (0..n).filter(|&q| cb.old_to_new[q] == usize::MAX).collect();
    if rem_a.len() != rem_b.len() {
        return Ok(None);
    }
    let mut used = vec![false; n];
    if extend_iso(a, b, &mut map, &rem_a, &rem_b, &mut used, 0) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn extend_iso(
    a: &DAutomaton,
    b: &DAutomaton,
    map: &mut Vec<usize>,
    rem_a: &[usize],
    rem_b: &[usize],
    used: &mut Vec<bool>,
    i: usize,
) -> bool {
    if i == rem_a.len() {
        return iso_tables_ok(a, b, map);
    }
    let qa = rem_a[i];
    for &qb in rem_b {
        if used[qb] || a.output[qa] != b.output[qb] {
            continue;
        }
        map[qa] = qb;
        used[qb] = true;
        if extend_iso(a, b, map, rem_a, rem_b, used, i + 1) {
            return true;
        }
        map[qa] = usize::MAX;
        used[qb] = false;
    }
    false
}

fn iso_tables_ok(a: &DAutomaton, b: &DAutomaton, map: &[usize]) -> bool {
    let n = a.states.size();
    if map[a.initial] != b.initial {
        return false;
    }
    for q in 0..n {
        if b.output[map[q]] != a.output[q] {
            return false;
        }
        for (l, row) in a.delta.iter().enumerate() {
            if map[row[q]] != b.delta[l][map[q]] {
                return false;
            }
        }
    }
    match (a.states.ops(), b.states.ops()) {
        (DOps::Set, DOps::Set) => true,
        (DOps::Pointed { basepoint: pa }, DOps::Pointed { basepoint: pb }) => map[*pa] == *pb,
        (DOps::Involution { inv: ia }, DOps::Involution { inv: ib }) => {
            (0..n).all(|q| map[ia[q]] == ib[map[q]])
        }
        (DOps::Semilattice { bottom: ba, join: ja }, DOps::Semilattice { bottom: bb, join: jb }) => {
            map[*ba] == *bb && (0..n).all(|x| (0..n).all(|y| map[ja[x][y]] == jb[map[x]][map[y]]))
        }
        (
            DOps::Vect { p: pa, zero: za, add: aa, smul: sa },
            DOps::Vect { p: pb, zero: zb, add: ab, smul: sb },
        ) => {
            pa == pb
                && map[*za] == *zb
                && (0..n).all(|x| (0..n).all(|y| map[aa[x][y]] == ab[map[x]][map[y]]))
                && (0..*pa as usize).all(|s| (0..n).all(|x| map[sa[s][x]] == sb[s][map[x]]))
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{dfa, eval, lift_automaton, random_automaton, run};
    use crate::free::{fm_enumerate, Alphabet};
    use crate::variety::VarietySpec;

    fn ab() -> Alphabet {
        Alphabet::from_str("ab").unwrap()
    }

    fn a_only() -> Alphabet {
        Alphabet::from_str("a").unwrap()
    }

    fn abstar() -> DAutomaton {
        dfa(&ab(), 3, vec![vec![1, 2, 2], vec![2, 0, 2]], 0, &[0])
    }

    fn parity() -> DAutomaton {
        dfa(&a_only(), 2, vec![vec![1, 0]], 0, &[0])
    }

    #[test]
    fn reachable_part_drops_junk() {
        // state 2 unreachable
        let a = dfa(&a_only(), 3, vec![vec![1, 0, 2]], 0, &[1]);
        let (r, incl) = reachable_part(&a).unwrap();
        assert_eq!(r.size(), 2);
        assert_eq!(incl, vec![0, 1]);
    }

    #[test]
    fn reachable_part_of_reachable_is_identity() {
        let a = abstar();
        let (r, incl) = reachable_part(&a).unwrap();
        assert_eq!(r.size(), 3);
        assert_eq!(incl, vec![0, 1, 2]);
    }

    #[test]
    fn jsl_reachability_adds_operation_generated_states() {
        let v = VarietySpec::new(crate::variety::VarietyTag::Semilattice).unwrap();
        let lifted = lift_automaton(&parity(), &v).unwrap();
        // word-reachable: {0} and {1}; operation closure adds {} and {0,1}
        let (r, _) = reachable_part(&lifted).unwrap();
        assert_eq!(r.size(), 4);
    }

    #[test]
    fn observability_merges_bisimilar_states() {
        // states 1 and 2 have identical rows and outputs
        let a = dfa(&a_only(), 3, vec![vec![1, 0, 0]], 0, &[1, 2]);
        let p = observability_partition(&a);
        assert_eq!(p.len(), 2);
        assert_eq!(p.block_of(1), p.block_of(2));
    }

    #[test]
    fn observability_discrete_when_states_separated() {
        let p = observability_partition(&abstar());
        assert!(p.is_discrete());
    }

    #[test]
    fn language_preserved_on_deep_enumeration() {
        // enumerated elements up to word length 6, per the module contract
        let (m, _) = minimize(&abstar()).unwrap();
        let v = VarietySpec::new(crate::variety::VarietyTag::Set).unwrap();
        for u in fm_enumerate(&v, &ab(), 6) {
            assert_eq!(eval(&abstar(), &u).unwrap(), eval(&m, &u).unwrap());
        }
        for tag in [
            crate::variety::VarietyTag::Pointed,
            crate::variety::VarietyTag::Involution,
            crate::variety::VarietyTag::Semilattice,
            crate::variety::VarietyTag::Vect(3),
        ] {
            let v = VarietySpec::new(tag).unwrap();
            let lifted = lift_automaton(&parity(), &v).unwrap();
            let (m, _) = minimize(&lifted).unwrap();
            for u in fm_enumerate(&v, &a_only(), 6) {
                assert_eq!(eval(&lifted, &u).unwrap(), eval(&m, &u).unwrap(), "{tag} {u:?}");
            }
        }
    }

    #[test]
    fn minimize_abstar_is_already_minimal() {
        let (m, report) = minimize(&abstar()).unwrap();
        assert_eq!(m.size(), 3);
        assert_eq!(report.minimal_size, 3);
        assert!(automaton_iso(&m, &abstar()).unwrap().is_some());
    }

    #[test]
    fn minimize_collapses_redundant_dfa() {
        // 6-state recognizer of (ab)*: two interleaved copies plus junk sink
        let a = dfa(
            &ab(),
            6,
            vec![vec![1, 5, 5, 4, 5, 5], vec![5, 3, 5, 5, 0, 5]],
            0,
            &[0, 3],
        );
        for w in ab().words_upto(6) {
            assert_eq!(a.accepts_word(&w).unwrap(), abstar().accepts_word(&w).unwrap());
        }
        let (m, report) = minimize(&a).unwrap();
        assert_eq!(m.size(), 3);
        assert_eq!(report.reachable_size, 5);
        assert!(automaton_iso(&m, &minimize(&abstar()).unwrap().0).unwrap().is_some());
    }

    #[test]
    fn minimize_one_state() {
        let a = dfa(&a_only(), 1, vec![vec![0]], 0, &[0]);
        let (m, _) = minimize(&a).unwrap();
        assert_eq!(m.size(), 1);
    }

    #[test]
    fn minimize_is_idempotent_across_varieties() {
        let al = ab();
        for tag in [
            crate::variety::VarietyTag::Set,
            crate::variety::VarietyTag::Pointed,
            crate::variety::VarietyTag::Involution,
            crate::variety::VarietyTag::Semilattice,
            crate::variety::VarietyTag::Vect(2),
        ] {
            let v = VarietySpec::new(tag).unwrap();
            for seed in 0..8 {
                let a = random_automaton(&v, 3, &al, seed).unwrap();
                let (m1, _) = minimize(&a).unwrap();
                let (m2, _) = minimize(&m1).unwrap();
                assert!(automaton_iso(&m1, &m2).unwrap().is_some(), "{tag} seed {seed}");
            }
        }
    }

    #[test]
    fn minimize_preserves_language() {
        let al = ab();
        for tag in [
            crate::variety::VarietyTag::Pointed,
            crate::variety::VarietyTag::Involution,
            crate::variety::VarietyTag::Semilattice,
            crate::variety::VarietyTag::Vect(2),
        ] {
            let v = VarietySpec::new(tag).unwrap();
            for seed in 0..5 {
                let a = random_automaton(&v, 3, &al, seed).unwrap();
                let (m, _) = minimize(&a).unwrap();
                for u in fm_enumerate(&v, &al, 3) {
                    assert_eq!(eval(&a, &u).unwrap(), eval(&m, &u).unwrap(), "{tag} {seed} {u:?}");
                }
            }
        }
    }

    #[test]
    fn witnesses_reach_their_states() {
        let v = VarietySpec::new(crate::variety::VarietyTag::Semilattice).unwrap();
        let lifted = lift_automaton(&parity(), &v).unwrap();
        let (m, report) = minimize(&lifted).unwrap();
        for (state, wit) in report.witness_words.iter().enumerate() {
            assert_eq!(crate::automaton::action_of(&m, wit, m.initial).unwrap(), state);
        }
    }

    #[test]
    fn word_witnesses_are_shortlex_least() {
        let (m, report) = minimize(&abstar()).unwrap();
        for (state, wit) in report.witness_words.iter().enumerate() {
            if let FreeElement::Word(w) = wit {
                assert_eq!(run(&m, w).unwrap(), state);
                // no shorter-or-equal earlier word reaches it
                for earlier in ab().words_upto(w.len()) {
                    if crate::free::shortlex(&earlier, w) == std::cmp::Ordering::Less {
                        assert_ne!(run(&m, &earlier).unwrap(), state);
                    }
                }
            }
        }
    }

    #[test]
    fn pointed_automaton_with_undefined_initial() {
        // the initial state may be the basepoint: nothing is word-reachable
        // beyond it and the minimal automaton is the one-point algebra
        let v = VarietySpec::new(crate::variety::VarietyTag::Pointed).unwrap();
        let a = DAutomaton {
            variety: v,
            alphabet: a_only().clone(),
            states: crate::variety::FiniteDObject::pointed(3),
            delta: vec![vec![0, 2, 1]],
            initial: 0,
            output: vec![0, 1, 0],
        };
        assert!(crate::automaton::validate_automaton(&a).is_empty());
        let (m, report) = minimize(&a).unwrap();
        assert_eq!(m.size(), 1);
        assert_eq!(report.witness_words[0], FreeElement::PointedWord(None));
    }

    #[test]
    fn iso_is_renaming_invariant() {
        let a = abstar();
        // permute states: 0->2, 1->0, 2->1
        let perm = [2usize, 0, 1];
        let mut delta = vec![vec![0; 3]; 2];
        let mut output = vec![0; 3];
        for q in 0..3 {
            for l in 0..2 {
                delta[l][perm[q]] = perm[a.delta[l][q]];
            }
            output[perm[q]] = a.output[q];
        }
        let b = DAutomaton {
            variety: a.variety.clone(),
            alphabet: a.alphabet.clone(),
            states: crate::variety::FiniteDObject::set(3),
            delta,
            initial: perm[a.initial],
            output,
        };
        let iso = automaton_iso(&a, &b).unwrap().expect("permuted copy is isomorphic");
        assert_eq!(iso[a.initial], b.initial);
    }

    #[test]
    fn iso_rejects_different_languages() {
        let parity_ab = dfa(&ab(), 2, vec![vec![1, 0], vec![0, 1]], 0, &[0]);
        let (m1, _) = minimize(&parity_ab).unwrap();
        let (m2, _) = minimize(&abstar()).unwrap();
        assert!(automaton_iso(&m1, &m2).unwrap().is_none());
    }

    #[test]
    fn iso_with_unreachable_remainder() {
        // parity plus one unreachable self-loop state, and its image under
        // the permutation 0->1, 1->2, 2->0
        let a = dfa(&a_only(), 3, vec![vec![1, 0, 2]], 0, &[0]);
        let b = dfa(&a_only(), 3, vec![vec![0, 2, 1]], 1, &[1]);
        assert!(automaton_iso(&a, &b).unwrap().is_some());
        // differing junk output breaks it
        let c = dfa(&a_only(), 3, vec![vec![0, 2, 1]], 1, &[1, 0]);
        assert!(automaton_iso(&a, &c).unwrap().is_none());
    }
}
