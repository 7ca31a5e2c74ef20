//! Transition monoids, syntactic monoids, and the independent
//! syntactic-congruence oracle.
//!
//! The transition monoid of an automaton is the closure of the letter actions
//! under composition and the variety's pointwise operations inside the
//! endomorphism monoid of the state object. The syntactic monoid of the
//! language is the transition monoid of the minimal automaton. The
//! [`SyntacticOracle`] decides the syntactic congruence directly from output
//! experiments on the minimal automaton, without consulting the closure; the
//! two routes cross-check each other.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::automaton::{action_of, validate_automaton, DAutomaton};
use crate::error::{Error, Violation};
use crate::free::{
    fm_add, fm_complement, fm_embed_word, fm_enumerate, fm_join, fm_multiply, fm_smul, fm_unit,
    FreeElement,
};
use crate::guard;
use crate::minimize::minimize;
use crate::variety::{is_homomorphism, validate_object, DOps, FiniteDObject, VarietySpec, VarietyTag};

/// A finite monoid internal to the ambient variety: a carrier object, a full
/// multiplication table, a unit, and one free-element preimage per element
/// (the least one produced during closure).
#[derive(Debug, Clone)]
pub struct FiniteDMonoid {
    pub carrier: FiniteDObject,
    table: Vec<u32>,
    pub unit: usize,
    pub names: Vec<FreeElement>,
}

impl FiniteDMonoid {
    pub fn from_rows(
        carrier: FiniteDObject,
        rows: &[Vec<usize>],
        unit: usize,
        names: Vec<FreeElement>,
    ) -> Self {
        let n = carrier.size();
        let mut table = vec![0u32; n * n];
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                table[i * n + j] = x as u32;
            }
        }
        FiniteDMonoid { carrier, table, unit, names }
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    /// `x • y` (apply `x` first when reading elements as actions).
    pub fn mult(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size() + y] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.mult(i, j)).collect()).collect()
    }

    /// Elements whose recorded name is a single letter; together with the
    /// unit these generate the monoid (multiplicatively for sets, under
    /// multiplication and the variety operations otherwise).
    pub fn letter_elements(&self) -> Vec<usize> {
        self.names
            .iter()
            .enumerate()
            .filter(|(_, name)| name.plain_word().map(|w| w.len() == 1).unwrap_or(false))
            .map(|(i, _)| i)
            .collect()
    }
}

/// A monoid quotient of the free monoid that recognizes a language: the
/// letter images generating it and the output map `f` into `Y`.
#[derive(Debug, Clone)]
pub struct RecognizingPair {
    pub monoid: FiniteDMonoid,
    pub e_on_letters: Vec<usize>,
    pub f: Vec<usize>,
    pub variety: VarietySpec,
}

impl RecognizingPair {
    /// Extends the letter map to the whole free monoid: words multiply out
    /// from the unit, compound elements combine through the carrier's
    /// operations.
    pub fn eval_free(&self, u: &FreeElement) -> Result<usize, Error> {
        if !u.variety_tag_matches(self.variety.tag()) {
            return Err(Error::VarietyMismatch {
                expected: self.variety.tag().to_string(),
                got: format!("{u:?}"),
            });
        }
        let m = &self.monoid;
        let word_img = |w: &[u8]| -> Result<usize, Error> {
            let mut acc = m.unit;
            for &l in w {
                let g = *self.e_on_letters.get(l as usize).ok_or(Error::UnknownElement {
                    id: l as usize,
                    size: self.e_on_letters.len(),
                })?;
                acc = m.mult(acc, g);
            }
            Ok(acc)
        };
        Ok(match u {
            FreeElement::Word(w) | FreeElement::PointedWord(Some(w)) => word_img(w)?,
            FreeElement::PointedWord(None) => m.carrier.basepoint().expect("pointed carrier"),
            FreeElement::Signed { word, complemented } => {
                let x = word_img(word)?;
                if *complemented {
                    m.carrier.involution_of(x).expect("involution carrier")
                } else {
                    x
                }
            }
            FreeElement::WordSet(ws) => {
                let mut acc = m.carrier.bottom().expect("semilattice carrier");
                for w in ws {
                    acc = m.carrier.join_of(acc, word_img(w)?).unwrap();
                }
                acc
            }
            FreeElement::Poly(ts) => {
                let mut acc = m.carrier.zero().expect("module carrier");
                for (w, c) in ts {
                    let x = m.carrier.smul_of(*c, word_img(w)?).unwrap();
                    acc = m.carrier.add_of(acc, x).unwrap();
                }
                acc
            }
        })
    }

    /// `f(e(u))`: the language value the pair assigns to a free element.
    pub fn recognize(&self, u: &FreeElement) -> Result<usize, Error> {
        Ok(self.f[self.eval_free(u)?])
    }
}

/// Which construction produced a syntactic monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntacticSource {
    TransitionOfMinimal,
    OracleQuotient,
    Dual,
}

#[derive(Debug, Clone)]
pub struct SyntacticResult {
    pub pair: RecognizingPair,
    pub source: SyntacticSource,
}

impl SyntacticResult {
    pub fn syn(&self) -> &FiniteDMonoid {
        &self.pair.monoid
    }
}

type Endomap = Vec<u16>;

fn compose_endomaps(first: &[u16], then: &[u16]) -> Endomap {
    first.iter().map(|&q| then[q as usize]).collect()
}

/// The transition monoid of an automaton: the closure of the identity and the
/// letter actions under composition and the variety's pointwise operations,
/// with least producing free elements recorded as names. `f` evaluates each
/// action at the initial state and applies the output map.
pub fn transition_monoid(a: &DAutomaton) -> Result<RecognizingPair, Error> {
    let violations = validate_automaton(a);
    if !violations.is_empty() {
        return Err(Error::InvalidAutomaton(violations));
    }
    let v = &a.variety;
    let n = a.states.size();
    let q_ops = a.states.ops();

    let mut done: HashMap<Endomap, usize> = Default::default();
    let mut maps: Vec<Endomap> = Vec::new();
    let mut names: Vec<FreeElement> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(FreeElement, Endomap)>> = BinaryHeap::new();

    let identity: Endomap = (0..n as u16).collect();
    heap.push(Reverse((fm_unit(v), identity)));
    match q_ops {
        DOps::Pointed { basepoint } => {
            heap.push(Reverse((
                FreeElement::PointedWord(None),
                vec![*basepoint as u16; n],
            )));
        }
        DOps::Semilattice { bottom, .. } => {
            heap.push(Reverse((FreeElement::WordSet(Vec::new()), vec![*bottom as u16; n])));
        }
        DOps::Vect { zero, .. } => {
            heap.push(Reverse((FreeElement::Poly(Vec::new()), vec![*zero as u16; n])));
        }
        _ => {}
    }

    while let Some(Reverse((name, map))) = heap.pop() {
        if done.contains_key(&map) {
            continue;
        }
        guard::check_carrier(done.len() + 1)?;
        let map_usize: Vec<usize> = map.iter().map(|&q| q as usize).collect();
        match is_homomorphism(&map_usize, &a.states, &a.states, v) {
            Ok(true) => {}
            _ => panic!("transition closure produced a non-endomorphism for {name:?}"),
        }
        let id = maps.len();
        done.insert(map.clone(), id);
        maps.push(map.clone());
        names.push(name.clone());

        // compose with each letter on the right: "map, then the letter"
        for (l, row) in a.delta.iter().enumerate() {
            let next: Endomap = map.iter().map(|&q| row[q as usize] as u16).collect();
            if !done.contains_key(&next) {
                let next_name = fm_multiply(&name, &fm_embed_word(&[l as u8], v), v)?;
                heap.push(Reverse((next_name, next)));
            }
        }
        // combine with everything named so far through the variety operations
        match q_ops {
            DOps::Set | DOps::Pointed { .. } => {}
            DOps::Involution { inv } => {
                let next: Endomap = map.iter().map(|&q| inv[q as usize] as u16).collect();
                if !done.contains_key(&next) {
                    heap.push(Reverse((fm_complement(&name)?, next)));
                }
            }
            DOps::Semilattice { join, .. } => {
                for other in 0..maps.len() {
                    let next: Endomap = map
                        .iter()
                        .zip(&maps[other])
                        .map(|(&x, &y)| join[x as usize][y as usize] as u16)
                        .collect();
                    if !done.contains_key(&next) {
                        heap.push(Reverse((fm_join(&name, &names[other])?, next)));
                    }
                }
            }
            DOps::Vect { p, add, smul, .. } => {
                for s in 2..*p as usize {
                    let next: Endomap =
                        map.iter().map(|&x| smul[s][x as usize] as u16).collect();
                    if !done.contains_key(&next) {
                        heap.push(Reverse((fm_smul(s as u32, &name, *p)?, next)));
                    }
                }
                for other in 0..maps.len() {
                    let next: Endomap = map
                        .iter()
                        .zip(&maps[other])
                        .map(|(&x, &y)| add[x as usize][y as usize] as u16)
                        .collect();
                    if !done.contains_key(&next) {
                        heap.push(Reverse((fm_add(&name, &names[other], *p)?, next)));
                    }
                }
            }
        }
    }

    // pointed carriers keep the basepoint (the constant-bot action) at id 0
    if let DOps::Pointed { basepoint } = q_ops {
        let bot_map: Endomap = vec![*basepoint as u16; n];
        let bot_id = done[&bot_map];
        if bot_id != 0 {
            let k = maps.len();
            let mut perm = vec![0usize; k]; // old id -> new id
            for (old, item) in perm.iter_mut().enumerate() {
                *item = match old.cmp(&bot_id) {
                    std::cmp::Ordering::Less => old + 1,
                    std::cmp::Ordering::Equal => 0,
                    std::cmp::Ordering::Greater => old,
                };
            }
            let mut new_maps = vec![Endomap::new(); k];
            let mut new_names = vec![FreeElement::Word(Vec::new()); k];
            for old in 0..k {
                new_maps[perm[old]] = maps[old].clone();
                new_names[perm[old]] = names[old].clone();
            }
            maps = new_maps;
            names = new_names;
            done = maps.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        }
    }

    let k = maps.len();
    let mut table = vec![0u32; k * k];
    for i in 0..k {
        for j in 0..k {
            let prod = compose_endomaps(&maps[i], &maps[j]);
            let id = *done
                .get(&prod)
                .expect("transition monoid must be closed under composition");
            table[i * k + j] = id as u32;
        }
    }
    let unit = done[&(0..n as u16).collect::<Endomap>()];
    let carrier_ops = match q_ops {
        DOps::Set => DOps::Set,
        DOps::Pointed { basepoint } => {
            DOps::Pointed { basepoint: done[&vec![*basepoint as u16; n]] }
        }
        DOps::Involution { inv } => {
            let table: Vec<usize> = maps
                .iter()
                .map(|m| {
                    let c: Endomap = m.iter().map(|&q| inv[q as usize] as u16).collect();
                    *done.get(&c).expect("transition monoid must be closed under complement")
                })
                .collect();
            DOps::Involution { inv: table }
        }
        DOps::Semilattice { bottom, join } => {
            let jt: Vec<Vec<usize>> = maps
                .iter()
                .map(|x| {
                    maps.iter()
                        .map(|y| {
                            let j: Endomap = x
                                .iter()
                                .zip(y.iter())
                                .map(|(&a, &b)| join[a as usize][b as usize] as u16)
                                .collect();
                            done[&j]
                        })
                        .collect()
                })
                .collect();
            DOps::Semilattice { bottom: done[&vec![*bottom as u16; n]], join: jt }
        }
        DOps::Vect { p, zero, add, smul } => {
            let at: Vec<Vec<usize>> = maps
                .iter()
                .map(|x| {
                    maps.iter()
                        .map(|y| {
                            let s: Endomap = x
                                .iter()
                                .zip(y.iter())
                                .map(|(&a, &b)| add[a as usize][b as usize] as u16)
                                .collect();
                            done[&s]
                        })
                        .collect()
                })
                .collect();
            let st: Vec<Vec<usize>> = (0..*p as usize)
                .map(|s| {
                    maps.iter()
                        .map(|x| {
                            let m: Endomap =
                                x.iter().map(|&a| smul[s][a as usize] as u16).collect();
                            done[&m]
                        })
                        .collect()
                })
                .collect();
            DOps::Vect { p: *p, zero: done[&vec![*zero as u16; n]], add: at, smul: st }
        }
    };
    let carrier = FiniteDObject::new(k, carrier_ops);
    let e_on_letters = a
        .delta
        .iter()
        .map(|row| done[&row.iter().map(|&q| q as u16).collect::<Endomap>()])
        .collect();
    let f = maps.iter().map(|m| a.output[m[a.initial] as usize]).collect();
    Ok(RecognizingPair { monoid: FiniteDMonoid { carrier, table, unit, names }, e_on_letters, f, variety: v.clone() })
}

/// The syntactic monoid: the transition monoid of the minimal automaton.
pub fn syntactic_monoid(a: &DAutomaton) -> Result<SyntacticResult, Error> {
    let (min, _) = minimize(a)?;
    let pair = transition_monoid(&min)?;
    Ok(SyntacticResult { pair, source: SyntacticSource::TransitionOfMinimal })
}

/// Independent decision procedure for the syntactic congruence, built from
/// the minimal automaton alone: two free elements are equivalent iff they
/// agree under every left context (a word-reachable state) and every right
/// context (an output experiment). Right contexts are represented by the
/// finitely many distinct functionals `q -> f(run(y, q))`, computed by
/// closing the output map under the letter actions; this realizes the word
/// scan `|y| < |M|` without enumerating words.
#[derive(Debug, Clone)]
pub struct SyntacticOracle {
    min: DAutomaton,
    reach: Vec<usize>,
    functionals: Vec<Vec<u8>>,
}

impl SyntacticOracle {
    pub fn new(a: &DAutomaton) -> Result<Self, Error> {
        let (min, _) = minimize(a)?;
        Ok(Self::for_minimal(min))
    }

    /// Builds the oracle from an already minimal automaton.
    pub fn for_minimal(min: DAutomaton) -> Self {
        let n = min.states.size();
        let mut reach = vec![min.initial];
        let mut seen = vec![false; n];
        seen[min.initial] = true;
        let mut head = 0;
        while head < reach.len() {
            let q = reach[head];
            head += 1;
            for row in &min.delta {
                if !seen[row[q]] {
                    seen[row[q]] = true;
                    reach.push(row[q]);
                }
            }
        }
        let base: Vec<u8> = min.output.iter().map(|&y| y as u8).collect();
        let mut functionals = vec![base.clone()];
        let mut known: std::collections::HashSet<Vec<u8>> = [base].into_iter().collect();
        let mut head = 0;
        while head < functionals.len() {
            let g = functionals[head].clone();
            head += 1;
            for row in &min.delta {
                let extended: Vec<u8> = (0..n).map(|q| g[row[q]]).collect();
                if known.insert(extended.clone()) {
                    functionals.push(extended);
                }
            }
        }
        SyntacticOracle { min, reach, functionals }
    }

    pub fn min_automaton(&self) -> &DAutomaton {
        &self.min
    }

    pub fn word_reachable(&self) -> &[usize] {
        &self.reach
    }

    /// The action of a free element on every state of the minimal automaton.
    pub fn action(&self, u: &FreeElement) -> Result<Vec<u16>, Error> {
        (0..self.min.states.size())
            .map(|q| action_of(&self.min, u, q).map(|t| t as u16))
            .collect()
    }

    /// Context table of an action map, restricted to word-reachable left
    /// contexts: the full syntactic signature of the element.
    pub fn signature_of_action(&self, action: &[u16]) -> Vec<u8> {
        let mut sig = Vec::with_capacity(self.reach.len() * self.functionals.len());
        for &p in &self.reach {
            let t = action[p] as usize;
            for g in &self.functionals {
                sig.push(g[t]);
            }
        }
        sig
    }

    pub fn signature(&self, u: &FreeElement) -> Result<Vec<u8>, Error> {
        Ok(self.signature_of_action(&self.action(u)?))
    }

    pub fn equivalent(&self, u: &FreeElement, w: &FreeElement) -> Result<bool, Error> {
        Ok(self.signature(u)? == self.signature(w)?)
    }
}

/// Free-standing form of the oracle for a single query.
pub fn syntactic_equivalent(
    a: &DAutomaton,
    u: &FreeElement,
    w: &FreeElement,
) -> Result<bool, Error> {
    SyntacticOracle::new(a)?.equivalent(u, w)
}

/// Groups the enumerated free elements of word length at most `max_len` by
/// syntactic equivalence. Classes are ordered by their least member and each
/// class lists its members in canonical order.
pub fn syntactic_partition_oracle(
    a: &DAutomaton,
    max_len: usize,
) -> Result<Vec<Vec<FreeElement>>, Error> {
    if max_len > 6 {
        return Err(Error::Config("oracle enumeration capped at max_len 6".into()));
    }
    let oracle = SyntacticOracle::new(a)?;
    let mut classes: Vec<Vec<FreeElement>> = Vec::new();
    let mut by_sig: HashMap<Vec<u8>, usize> = Default::default();
    for u in fm_enumerate(&a.variety, &a.alphabet, max_len) {
        let sig = oracle.signature(&u)?;
        let fresh = classes.len();
        let idx = *by_sig.entry(sig).or_insert_with(|| {
            classes.push(Vec::new());
            fresh
        });
        classes[idx].push(u);
    }
    Ok(classes)
}

/// Outcome of [`factor_through`]: either the mediating morphism or a witness
/// of its impossibility.
#[derive(Debug, Clone)]
pub enum FactorOutcome {
    Morphism(Vec<usize>),
    Counterexample(String),
}

impl FactorOutcome {
    pub fn morphism(&self) -> Option<&[usize]> {
        match self {
            FactorOutcome::Morphism(h) => Some(h),
            FactorOutcome::Counterexample(_) => None,
        }
    }
}

/// Attempts the universal-property factorization `h` with `h ∘ e = e_L`,
/// defined on each element through its recorded name. Succeeds iff the map
/// is a monoid morphism, a homomorphism of carriers, compatible with the
/// letter generators and with the output maps.
pub fn factor_through(
    pair: &RecognizingPair,
    syn: &SyntacticResult,
) -> Result<FactorOutcome, Error> {
    let m = &pair.monoid;
    let s = syn.syn();
    let mut h = Vec::with_capacity(m.size());
    for name in &m.names {
        h.push(syn.pair.eval_free(name)?);
    }
    if h[m.unit] != s.unit {
        return Ok(FactorOutcome::Counterexample("unit is not preserved".into()));
    }
    for (l, &g) in pair.e_on_letters.iter().enumerate() {
        if h[g] != syn.pair.e_on_letters[l] {
            return Ok(FactorOutcome::Counterexample(format!(
                "letter {l} maps to different generators"
            )));
        }
    }
    for x in 0..m.size() {
        for y in 0..m.size() {
            if h[m.mult(x, y)] != s.mult(h[x], h[y]) {
                return Ok(FactorOutcome::Counterexample(format!(
                    "h({x} • {y}) != h({x}) • h({y})"
                )));
            }
        }
    }
    match is_homomorphism(&h, &m.carrier, &s.carrier, &pair.variety) {
        Ok(true) => {}
        Ok(false) => {
            return Ok(FactorOutcome::Counterexample(
                "h is not a homomorphism of carriers".into(),
            ))
        }
        Err(e) => return Err(e),
    }
    for x in 0..m.size() {
        if syn.pair.f[h[x]] != pair.f[x] {
            return Ok(FactorOutcome::Counterexample(format!(
                "outputs disagree at element {x}"
            )));
        }
    }
    Ok(FactorOutcome::Morphism(h))
}

/// Exhaustive law checks: associativity, unit, bimorphism of the
/// multiplication (which instantiates to the zero law, the involution law,
/// distributivity over joins, and linearity), plus validity of the carrier.
/// Large set-based monoids use the generator-reduced associativity test,
/// valid because their letter elements generate multiplicatively.
pub fn monoid_validate(m: &FiniteDMonoid, v: &VarietySpec) -> Vec<Violation> {
    let mut out = validate_object(&m.carrier, v);
    let n = m.size();
    if m.unit >= n || m.table.len() != n * n || m.table.iter().any(|&x| x as usize >= n) {
        out.push(Violation::new("multiplication table malformed", String::new()));
        return out;
    }
    for x in 0..n {
        if m.mult(m.unit, x) != x || m.mult(x, m.unit) != x {
            out.push(Violation::new("unit law fails", format!("at {x}")));
        }
    }
    // associativity
    let full_scan = n <= 400 || {
        // generator-reduced test requires multiplicative generation
        let mut gens = m.letter_elements();
        gens.push(m.unit);
        let mut reach = vec![false; n];
        let mut stack = vec![m.unit];
        reach[m.unit] = true;
        while let Some(x) = stack.pop() {
            for &g in &gens {
                let t = m.mult(x, g);
                if !reach[t] {
                    reach[t] = true;
                    stack.push(t);
                }
            }
        }
        !reach.iter().all(|&r| r)
    };
    'assoc: {
        if full_scan {
            for x in 0..n {
                for y in 0..n {
                    let xy = m.mult(x, y);
                    for z in 0..n {
                        if m.mult(xy, z) != m.mult(x, m.mult(y, z)) {
                            out.push(Violation::new(
                                "associativity fails",
                                format!("({x},{y},{z})"),
                            ));
                            break 'assoc;
                        }
                    }
                }
            }
        } else {
            let mut gens = m.letter_elements();
            gens.push(m.unit);
            for &a in &gens {
                for x in 0..n {
                    let ax = m.mult(a, x);
                    for y in 0..n {
                        if m.mult(ax, y) != m.mult(a, m.mult(x, y)) {
                            out.push(Violation::new(
                                "associativity fails",
                                format!("({a},{x},{y})"),
                            ));
                            break 'assoc;
                        }
                    }
                }
            }
        }
    }
    // the multiplication must be a bimorphism: every translation is a
    // homomorphism of the carrier
    if !matches!(v.tag(), VarietyTag::Set) {
        for x in 0..n {
            let left: Vec<usize> = (0..n).map(|y| m.mult(x, y)).collect();
            let right: Vec<usize> = (0..n).map(|y| m.mult(y, x)).collect();
            for (label, tr) in [("left", &left), ("right", &right)] {
                match is_homomorphism(tr, &m.carrier, &m.carrier, v) {
                    Ok(true) => {}
                    Ok(false) => {
                        out.push(Violation::new(
                            "multiplication is not a bimorphism",
                            format!("{label} translation by {x}"),
                        ));
                    }
                    Err(e) => out.push(Violation::new("translation check failed", e.to_string())),
                }
            }
        }
    }
    out
}
