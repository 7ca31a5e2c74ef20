//! Finite automata whose state space is an object of the ambient variety.
//!
//! Transitions are endomorphisms of the state object, the output map is a
//! homomorphism into the variety's fixed output object `Y`, and the initial
//! state is an element. Classical DFAs are the `Set` case; the other four
//! varieties arise by freely lifting a DFA ([`lift_automaton`]) or from a
//! monoid ([`derived_automaton`]).

use crate::error::{Error, Violation};
use crate::free::{Alphabet, FreeElement};
use crate::guard;
use crate::syntactic::FiniteDMonoid;
use crate::variety::{
    is_homomorphism, validate_object, DOps, FiniteDObject, VarietySpec, VarietyTag,
};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DAutomaton {
    pub variety: VarietySpec,
    pub alphabet: Alphabet,
    pub states: FiniteDObject,
    /// `delta[letter][state]` is the successor state.
    pub delta: Vec<Vec<usize>>,
    pub initial: usize,
    /// `output[state]` is an element of the output object `Y`.
    pub output: Vec<usize>,
}

impl DAutomaton {
    pub fn size(&self) -> usize {
        self.states.size()
    }

    /// Convenience for `Set` automata: does the automaton accept this word?
    pub fn accepts_word(&self, word: &[u8]) -> Result<bool, Error> {
        Ok(self.output[run(self, word)?] == self.variety.accept())
    }
}

/// Checks all structural invariants; an empty list means valid.
pub fn validate_automaton(a: &DAutomaton) -> Vec<Violation> {
    let mut out = validate_object(&a.states, &a.variety);
    let n = a.states.size();
    if a.initial >= n {
        out.push(Violation::new("initial state out of range", a.initial.to_string()));
    }
    if a.delta.len() != a.alphabet.len() {
        out.push(Violation::new(
            "transition arity",
            format!("{} letters, {} transition maps", a.alphabet.len(), a.delta.len()),
        ));
        return out;
    }
    for (l, row) in a.delta.iter().enumerate() {
        let letter = a.alphabet.char_of(l as u8);
        if row.len() != n || row.iter().any(|&q| q >= n) {
            out.push(Violation::new("transition table malformed", format!("letter {letter}")));
            continue;
        }
        if let Some(bp) = a.states.basepoint() {
            if row[bp] != bp {
                out.push(Violation::new(
                    "basepoint not preserved",
                    format!("delta_{letter}(bot) = {}", row[bp]),
                ));
                continue;
            }
        }
        match is_homomorphism(row, &a.states, &a.states, &a.variety) {
            Ok(true) => {}
            Ok(false) => out.push(Violation::new(
                "transition not an endomorphism",
                format!("letter {letter}"),
            )),
            Err(e) => out.push(Violation::new("transition check failed", e.to_string())),
        }
    }
    let y = a.variety.output_object();
    if a.output.len() != n || a.output.iter().any(|&v| v >= y.size()) {
        out.push(Violation::new("output table malformed", String::new()));
        return out;
    }
    match is_homomorphism(&a.output, &a.states, y, &a.variety) {
        Ok(true) => {}
        Ok(false) => {
            let witness = output_hom_witness(a);
            out.push(Violation::new("output not a homomorphism into Y", witness));
        }
        Err(e) => out.push(Violation::new("output check failed", e.to_string())),
    }
    out
}

/// Human-readable witness for a failing output map. For semilattices this
/// names the offending join (final states must form a prime upset).
fn output_hom_witness(a: &DAutomaton) -> String {
    let n = a.states.size();
    match a.states.ops() {
        DOps::Semilattice { join, .. } => {
            for x in 0..n {
                for y in 0..n {
                    let lhs = a.output[join[x][y]];
                    let rhs = a.output[x].max(a.output[y]);
                    if lhs != rhs {
                        return format!("f({x} v {y}) = {lhs} but f({x}) v f({y}) = {rhs}");
                    }
                }
            }
            String::new()
        }
        _ => "see output table".into(),
    }
}

/// Runs a word from the initial state: `run(A, ε)` is the initial state.
pub fn run(a: &DAutomaton, word: &[u8]) -> Result<usize, Error> {
    run_from(a, word, a.initial)
}

pub fn run_from(a: &DAutomaton, word: &[u8], mut state: usize) -> Result<usize, Error> {
    for &l in word {
        let row = a.delta.get(l as usize).ok_or(Error::UnknownElement {
            id: l as usize,
            size: a.delta.len(),
        })?;
        state = row[state];
    }
    Ok(state)
}

/// The action of a free element on a state: the extension of the letter
/// action along the variety's operations.
pub fn action_of(a: &DAutomaton, u: &FreeElement, state: usize) -> Result<usize, Error> {
    if !u.variety_tag_matches(a.variety.tag()) {
        return Err(Error::VarietyMismatch {
            expected: a.variety.tag().to_string(),
            got: format!("{u:?}"),
        });
    }
    let q = &a.states;
    Ok(match u {
        FreeElement::Word(w) | FreeElement::PointedWord(Some(w)) => run_from(a, w, state)?,
        FreeElement::PointedWord(None) => q.basepoint().expect("pointed carrier"),
        FreeElement::Signed { word, complemented } => {
            let t = run_from(a, word, state)?;
            if *complemented {
                q.involution_of(t).expect("involution carrier")
            } else {
                t
            }
        }
        FreeElement::WordSet(ws) => {
            let mut acc = q.bottom().expect("semilattice carrier");
            for w in ws {
                let t = run_from(a, w, state)?;
                acc = q.join_of(acc, t).unwrap();
            }
            acc
        }
        FreeElement::Poly(ts) => {
            let mut acc = q.zero().expect("module carrier");
            for (w, c) in ts {
                let t = run_from(a, w, state)?;
                let scaled = q.smul_of(*c, t).unwrap();
                acc = q.add_of(acc, scaled).unwrap();
            }
            acc
        }
    })
}

/// The language value of a free element: word outputs combined in `Y` along
/// the variety's operations.
pub fn eval(a: &DAutomaton, u: &FreeElement) -> Result<usize, Error> {
    if !u.variety_tag_matches(a.variety.tag()) {
        return Err(Error::VarietyMismatch {
            expected: a.variety.tag().to_string(),
            got: format!("{u:?}"),
        });
    }
    let y = a.variety.output_object();
    Ok(match u {
        FreeElement::Word(w) | FreeElement::PointedWord(Some(w)) => a.output[run(a, w)?],
        FreeElement::PointedWord(None) => y.basepoint().expect("pointed output"),
        FreeElement::Signed { word, complemented } => {
            let v = a.output[run(a, word)?];
            if *complemented {
                y.involution_of(v).unwrap()
            } else {
                v
            }
        }
        FreeElement::WordSet(ws) => {
            let mut acc = y.bottom().unwrap();
            for w in ws {
                acc = y.join_of(acc, a.output[run(a, w)?]).unwrap();
            }
            acc
        }
        FreeElement::Poly(ts) => {
            let mut acc = y.zero().unwrap();
            for (w, c) in ts {
                let v = a.output[run(a, w)?];
                acc = y.add_of(acc, y.smul_of(*c, v).unwrap()).unwrap();
            }
            acc
        }
    })
}

/// The automaton of a monoid: states are the monoid elements, the letter `a`
/// acts by right multiplication with `gen[a]`, the initial state is the unit
/// and the output map is `f` (which must be a homomorphism into `Y`).
pub fn derived_automaton(
    m: &FiniteDMonoid,
    gen: &[usize],
    f: &[usize],
    alphabet: &Alphabet,
    v: &VarietySpec,
) -> Result<DAutomaton, Error> {
    if gen.len() != alphabet.len() {
        return Err(Error::Config("one generator per letter required".into()));
    }
    match is_homomorphism(f, &m.carrier, v.output_object(), v) {
        Ok(true) => {}
        Ok(false) => return Err(Error::NotAMorphism("output map of derived automaton".into())),
        Err(e) => return Err(e),
    }
    let n = m.carrier.size();
    let delta = gen
        .iter()
        .map(|&g| (0..n).map(|x| m.mult(x, g)).collect())
        .collect();
    Ok(DAutomaton {
        variety: v.clone(),
        alphabet: alphabet.clone(),
        states: m.carrier.clone(),
        delta,
        initial: m.unit,
        output: f.to_vec(),
    })
}

/// Applies the free construction of `target` to the state set of a classical
/// DFA: `Q + bot` (pointed), `Q + ~Q` (involution), all subsets of `Q`
/// (semilattice, joins are unions), or `GF(p)^Q` (vector spaces). Evaluation
/// of the lift on embedded words agrees with the DFA's classical acceptance.
pub fn lift_automaton(a: &DAutomaton, target: &VarietySpec) -> Result<DAutomaton, Error> {
    if a.variety.tag() != VarietyTag::Set {
        return Err(Error::VarietyMismatch {
            expected: "set".into(),
            got: a.variety.tag().to_string(),
        });
    }
    if target.tag() == VarietyTag::Set {
        return Err(Error::Config("lift target must differ from set".into()));
    }
    let n = a.states.size();
    let k = a.alphabet.len();
    Ok(match target.tag() {
        VarietyTag::Set => unreachable!(),
        VarietyTag::Pointed => {
            guard::check_carrier(n + 1)?;
            let states = FiniteDObject::pointed(n + 1);
            let delta = (0..k)
                .map(|l| {
                    let mut row = vec![0usize; n + 1];
                    for q in 0..n {
                        row[q + 1] = a.delta[l][q] + 1;
                    }
                    row
                })
                .collect();
            let mut output = vec![0usize; n + 1];
            for q in 0..n {
                output[q + 1] = if a.output[q] == 1 { 1 } else { 0 };
            }
            DAutomaton {
                variety: target.clone(),
                alphabet: a.alphabet.clone(),
                states,
                delta,
                initial: a.initial + 1,
                output,
            }
        }
        VarietyTag::Involution => {
            guard::check_carrier(2 * n)?;
            let inv: Vec<usize> = (0..2 * n).map(|q| (q + n) % (2 * n)).collect();
            let states = FiniteDObject::involution(2 * n, inv);
            let delta = (0..k)
                .map(|l| {
                    (0..2 * n)
                        .map(|q| if q < n { a.delta[l][q] } else { a.delta[l][q - n] + n })
                        .collect()
                })
                .collect();
            let output = (0..2 * n)
                .map(|q| if q < n { a.output[q] } else { 1 - a.output[q - n] })
                .collect();
            DAutomaton {
                variety: target.clone(),
                alphabet: a.alphabet.clone(),
                states,
                delta,
                initial: a.initial,
                output,
            }
        }
        VarietyTag::Semilattice => {
            if n >= usize::BITS as usize {
                return Err(Error::SizeGuard {
                    requested: usize::MAX,
                    limit: guard::carrier_limit(),
                });
            }
            let size = 1usize << n;
            guard::check_carrier(size)?;
            let join = (0..size).map(|x| (0..size).map(|y| x | y).collect()).collect();
            let states = FiniteDObject::semilattice(size, 0, join);
            let delta = (0..k)
                .map(|l| {
                    (0..size)
                        .map(|mask: usize| {
                            let mut img = 0usize;
                            for q in 0..n {
                                if mask & (1 << q) != 0 {
                                    img |= 1 << a.delta[l][q];
                                }
                            }
                            img
                        })
                        .collect()
                })
                .collect();
            let output = (0..size)
                .map(|mask: usize| {
                    usize::from((0..n).any(|q| mask & (1 << q) != 0 && a.output[q] == 1))
                })
                .collect();
            DAutomaton {
                variety: target.clone(),
                alphabet: a.alphabet.clone(),
                states,
                delta,
                initial: 1usize << a.initial,
                output,
            }
        }
        VarietyTag::Vect(p) => {
            let size = (p as usize).checked_pow(n as u32).ok_or(Error::SizeGuard {
                requested: usize::MAX,
                limit: guard::carrier_limit(),
            })?;
            guard::check_carrier(size)?;
            let pu = p as usize;
            let digits = |mut x: usize| -> Vec<usize> {
                (0..n)
                    .map(|_| {
                        let d = x % pu;
                        x /= pu;
                        d
                    })
                    .collect()
            };
            let pack = |ds: &[usize]| -> usize {
                ds.iter().rev().fold(0usize, |acc, &d| acc * pu + d)
            };
            let add = (0..size)
                .map(|x| {
                    let dx = digits(x);
                    (0..size)
                        .map(|y| {
                            let dy = digits(y);
                            let ds: Vec<usize> =
                                dx.iter().zip(&dy).map(|(&a, &b)| (a + b) % pu).collect();
                            pack(&ds)
                        })
                        .collect()
                })
                .collect();
            let smul = (0..pu)
                .map(|s| {
                    (0..size)
                        .map(|x| {
                            let ds: Vec<usize> =
                                digits(x).iter().map(|&d| d * s % pu).collect();
                            pack(&ds)
                        })
                        .collect()
                })
                .collect();
            let states = FiniteDObject::vect(p, 0, add, smul);
            let delta = (0..k)
                .map(|l| {
                    (0..size)
                        .map(|x| {
                            let dx = digits(x);
                            let mut img = vec![0usize; n];
                            for q in 0..n {
                                let t = a.delta[l][q];
                                img[t] = (img[t] + dx[q]) % pu;
                            }
                            pack(&img)
                        })
                        .collect()
                })
                .collect();
            let output = (0..size)
                .map(|x| {
                    digits(x)
                        .iter()
                        .enumerate()
                        .map(|(q, &d)| d * a.output[q])
                        .sum::<usize>()
                        % pu
                })
                .collect();
            DAutomaton {
                variety: target.clone(),
                alphabet: a.alphabet.clone(),
                states,
                delta,
                initial: pack(
                    &(0..n).map(|q| usize::from(q == a.initial)).collect::<Vec<_>>(),
                ),
                output,
            }
        }
    })
}

/// A uniformly random complete DFA on `n_base_states`, lifted to the target
/// variety when it is not `Set`. Deterministic in the seed and always valid.
pub fn random_automaton(
    v: &VarietySpec,
    n_base_states: usize,
    alphabet: &Alphabet,
    seed: u64,
) -> Result<DAutomaton, Error> {
    if n_base_states == 0 {
        return Err(Error::Config("need at least one base state".into()));
    }
    guard::check_carrier(n_base_states)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n_base_states;
    let set = VarietySpec::new(VarietyTag::Set)?;
    let delta = (0..alphabet.len())
        .map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let output = (0..n).map(|_| usize::from(rng.gen_bool(0.5))).collect();
    let initial = rng.gen_range(0..n);
    let base = DAutomaton {
        variety: set,
        alphabet: alphabet.clone(),
        states: FiniteDObject::set(n),
        delta,
        initial,
        output,
    };
    if v.tag() == VarietyTag::Set {
        Ok(base)
    } else {
        lift_automaton(&base, v)
    }
}

/// Hand construction helper for classical DFAs in tests and fixtures.
pub fn dfa(
    alphabet: &Alphabet,
    n: usize,
    delta: Vec<Vec<usize>>,
    initial: usize,
    finals: &[usize],
) -> DAutomaton {
    let mut output = vec![0usize; n];
    for &f in finals {
        output[f] = 1;
    }
    DAutomaton {
        variety: VarietySpec::new(VarietyTag::Set).unwrap(),
        alphabet: alphabet.clone(),
        states: FiniteDObject::set(n),
        delta,
        initial,
        output,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::{fm_embed_word, fm_enumerate, parse_free_element};

    fn ab() -> Alphabet {
        Alphabet::from_str("ab").unwrap()
    }

    fn a_only() -> Alphabet {
        Alphabet::from_str("a").unwrap()
    }

    /// (ab)* over {a,b}: 0 init/final, 1 after a, 2 sink.
    fn abstar() -> DAutomaton {
        dfa(&ab(), 3, vec![vec![1, 2, 2], vec![2, 0, 2]], 0, &[0])
    }

    /// Even number of a's over {a}.
    fn parity() -> DAutomaton {
        dfa(&a_only(), 2, vec![vec![1, 0]], 0, &[0])
    }

    #[test]
    fn classical_dfa_is_valid() {
        assert!(validate_automaton(&abstar()).is_empty());
    }

    #[test]
    fn run_simulates() {
        let a = abstar();
        assert_eq!(run(&a, &[]).unwrap(), 0);
        assert_eq!(run(&a, &[0, 1]).unwrap(), 0);
        assert_eq!(run(&a, &[0, 0]).unwrap(), 2);
    }

    #[test]
    fn run_composes() {
        let a = abstar();
        for u in ab().words_upto(3) {
            for w in ab().words_upto(3) {
                let mut uw = u.clone();
                uw.extend_from_slice(&w);
                assert_eq!(
                    run(&a, &uw).unwrap(),
                    run_from(&a, &w, run(&a, &u).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn jsl_lift_eval_detects_intersection() {
        let v = VarietySpec::new(VarietyTag::Semilattice).unwrap();
        // L0 = {ab}: 4-state DFA, state 2 final
        let base = dfa(&ab(), 4, vec![vec![1, 3, 3, 3], vec![3, 2, 3, 3]], 0, &[2]);
        let lifted = lift_automaton(&base, &v).unwrap();
        assert!(validate_automaton(&lifted).is_empty());
        let u = parse_free_element("{ab,b}", &ab(), &v).unwrap();
        assert_eq!(eval(&lifted, &u).unwrap(), 1);
        let w = parse_free_element("{a,b}", &ab(), &v).unwrap();
        assert_eq!(eval(&lifted, &w).unwrap(), 0);
    }

    #[test]
    fn involution_lift_complements() {
        let v = VarietySpec::new(VarietyTag::Involution).unwrap();
        let base = dfa(&ab(), 4, vec![vec![1, 3, 3, 3], vec![3, 2, 3, 3]], 0, &[2]);
        let lifted = lift_automaton(&base, &v).unwrap();
        assert!(validate_automaton(&lifted).is_empty());
        let u = parse_free_element("!ab", &ab(), &v).unwrap();
        assert_eq!(eval(&lifted, &u).unwrap(), 0);
        let w = parse_free_element("!b", &ab(), &v).unwrap();
        assert_eq!(eval(&lifted, &w).unwrap(), 1);
    }

    #[test]
    fn vect2_parity_eval_is_linear() {
        let v = VarietySpec::new(VarietyTag::Vect(2)).unwrap();
        let lifted = lift_automaton(&parity(), &v).unwrap();
        assert!(validate_automaton(&lifted).is_empty());
        let u = parse_free_element("1*_ + 1*a", &a_only(), &v).unwrap();
        assert_eq!(eval(&lifted, &u).unwrap(), 1);
    }

    #[test]
    fn lift_agrees_with_classical_acceptance() {
        let base = abstar();
        for tag in [
            VarietyTag::Pointed,
            VarietyTag::Involution,
            VarietyTag::Semilattice,
            VarietyTag::Vect(2),
            VarietyTag::Vect(3),
        ] {
            let v = VarietySpec::new(tag).unwrap();
            let lifted = lift_automaton(&base, &v).unwrap();
            assert!(validate_automaton(&lifted).is_empty(), "{tag}");
            for w in ab().words_upto(2 * base.size()) {
                let expect = base.accepts_word(&w).unwrap();
                let got = eval(&lifted, &fm_embed_word(&w, &v)).unwrap();
                assert_eq!(got == v.accept(), expect, "{tag} at {w:?}");
                assert!(got == v.accept() || got == v.reject());
            }
        }
    }

    #[test]
    fn one_state_all_accepting_lifts_to_two_chain() {
        let v = VarietySpec::new(VarietyTag::Semilattice).unwrap();
        let base = dfa(&a_only(), 1, vec![vec![0]], 0, &[0]);
        let lifted = lift_automaton(&base, &v).unwrap();
        assert_eq!(lifted.size(), 2);
        assert_eq!(lifted.states, *v.output_object());
        assert_eq!(lifted.output, vec![0, 1]);
    }

    #[test]
    fn derived_automaton_of_trivial_monoid_is_constant() {
        let v = VarietySpec::new(VarietyTag::Set).unwrap();
        let m = crate::syntactic::FiniteDMonoid::from_rows(
            FiniteDObject::set(1),
            &[vec![0]],
            0,
            vec![crate::free::FreeElement::Word(vec![])],
        );
        let a = derived_automaton(&m, &[0], &[1], &a_only(), &v).unwrap();
        assert_eq!(a.size(), 1);
        for w in a_only().words_upto(4) {
            assert!(a.accepts_word(&w).unwrap());
        }
    }

    #[test]
    fn involution_lift_has_complementary_transitions() {
        let v = VarietySpec::new(VarietyTag::Involution).unwrap();
        let lifted = lift_automaton(&parity(), &v).unwrap();
        let n = lifted.size();
        for l in 0..lifted.alphabet.len() {
            for q in 0..n {
                let comp = lifted.states.involution_of(q).unwrap();
                assert_eq!(
                    lifted.delta[l][comp],
                    lifted.states.involution_of(lifted.delta[l][q]).unwrap()
                );
            }
        }
        for q in 0..n {
            let comp = lifted.states.involution_of(q).unwrap();
            assert_eq!(lifted.output[q], 1 - lifted.output[comp]);
        }
    }

    #[test]
    fn bad_jsl_output_is_flagged() {
        // free semilattice on 2 generators: {0, x=1, y=2, xvy=3}
        let v = VarietySpec::new(VarietyTag::Semilattice).unwrap();
        let join = vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 2, 3],
            vec![3, 3, 3, 3],
        ];
        let states = FiniteDObject::semilattice(4, 0, join);
        let a = DAutomaton {
            variety: v,
            alphabet: a_only().clone(),
            states,
            delta: vec![vec![0, 1, 2, 3]],
            initial: 1,
            output: vec![0, 1, 1, 0], // both generators final, join non-final
        };
        let violations = validate_automaton(&a);
        assert!(violations.iter().any(|v| v.law.contains("output not a homomorphism")));
    }

    #[test]
    fn pointed_sink_violation_is_named() {
        let v = VarietySpec::new(VarietyTag::Pointed).unwrap();
        let a = DAutomaton {
            variety: v,
            alphabet: a_only().clone(),
            states: FiniteDObject::pointed(2),
            delta: vec![vec![1, 1]], // moves bot off the basepoint
            initial: 1,
            output: vec![0, 1],
        };
        let violations = validate_automaton(&a);
        assert!(violations.iter().any(|v| v.law == "basepoint not preserved"));
    }

    #[test]
    fn random_automaton_is_deterministic_and_valid() {
        let al = ab();
        for tag in [
            VarietyTag::Set,
            VarietyTag::Pointed,
            VarietyTag::Involution,
            VarietyTag::Semilattice,
            VarietyTag::Vect(2),
        ] {
            let v = VarietySpec::new(tag).unwrap();
            let a1 = random_automaton(&v, 3, &al, 7).unwrap();
            let a2 = random_automaton(&v, 3, &al, 7).unwrap();
            assert_eq!(a1.delta, a2.delta, "{tag}");
            assert_eq!(a1.output, a2.output);
            assert_eq!(a1.initial, a2.initial);
            assert!(validate_automaton(&a1).is_empty(), "{tag}");
        }
    }

    #[test]
    fn one_state_random_dfa() {
        let v = VarietySpec::new(VarietyTag::Set).unwrap();
        let a = random_automaton(&v, 1, &a_only(), 3).unwrap();
        assert_eq!(a.size(), 1);
        assert!(a.output[0] == 0 || a.output[0] == 1);
    }

    #[test]
    fn vect_lift_size_guard() {
        let v = VarietySpec::new(VarietyTag::Vect(31)).unwrap();
        let base = dfa(&ab(), 4, vec![vec![0; 4], vec![0; 4]], 0, &[0]);
        assert!(matches!(lift_automaton(&base, &v), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn eval_agrees_with_action_followed_by_output() {
        for tag in [
            VarietyTag::Pointed,
            VarietyTag::Involution,
            VarietyTag::Semilattice,
            VarietyTag::Vect(3),
        ] {
            let v = VarietySpec::new(tag).unwrap();
            let lifted = lift_automaton(&parity(), &v).unwrap();
            for u in fm_enumerate(&v, &a_only(), 2) {
                let via_action = lifted.output[action_of(&lifted, &u, lifted.initial).unwrap()];
                assert_eq!(eval(&lifted, &u).unwrap(), via_action, "{tag} at {u:?}");
            }
        }
    }
}
