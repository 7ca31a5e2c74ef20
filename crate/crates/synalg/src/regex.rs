//! Regular expression frontend: a minimal dialect (`∅`, `()` for the empty
//! word, literals, `|`, juxtaposition, `*`, parentheses) compiled to a
//! complete DFA by the Thompson construction and the subset construction,
//! then minimized into canonical form.

use crate::automaton::DAutomaton;
use crate::error::Error;
use crate::free::Alphabet;
use crate::guard;
use crate::variety::{FiniteDObject, VarietySpec, VarietyTag};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    Empty,
    Epsilon,
    Literal(u8),
    Union(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

/// Recursive-descent parser; positions in errors are byte offsets.
pub fn parse_regex(input: &str, alphabet: &Alphabet) -> Result<Regex, Error> {
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut p = Parser { chars: &chars, pos: 0, alphabet, len: input.len() };
    let r = p.union()?;
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(r)
}

struct Parser<'a> {
    chars: &'a [(usize, char)],
    pos: usize,
    alphabet: &'a Alphabet,
    len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn byte_pos(&self) -> usize {
        self.chars.get(self.pos).map(|&(b, _)| b).unwrap_or(self.len)
    }

    fn error(&self, message: &str) -> Error {
        Error::RegexParse { pos: self.byte_pos(), message: message.into() }
    }

    fn union(&mut self) -> Result<Regex, Error> {
        let mut r = self.concat()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            let rhs = self.concat()?;
            r = Regex::Union(Box::new(r), Box::new(rhs));
        }
        Ok(r)
    }

    fn concat(&mut self) -> Result<Regex, Error> {
        let mut r = self.factor()?;
        while matches!(self.peek(), Some(c) if c != '|' && c != ')' && c != '*') {
            let rhs = self.factor()?;
            r = Regex::Concat(Box::new(r), Box::new(rhs));
        }
        Ok(r)
    }

    fn factor(&mut self) -> Result<Regex, Error> {
        let mut r = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            r = Regex::Star(Box::new(r));
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex, Error> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                if self.peek() == Some(')') {
                    self.pos += 1;
                    return Ok(Regex::Epsilon);
                }
                let inner = self.union()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('∅') => {
                self.pos += 1;
                Ok(Regex::Empty)
            }
            Some('*') => Err(self.error("'*' needs a preceding factor")),
            Some('|') | Some(')') | None => Err(self.error("expected a literal, '(' or '∅'")),
            Some(c) => {
                let idx = self.alphabet.index_of(c).map_err(|_| {
                    Error::RegexParse {
                        pos: self.byte_pos(),
                        message: format!("letter {c:?} not in alphabet"),
                    }
                })?;
                self.pos += 1;
                Ok(Regex::Literal(idx))
            }
        }
    }
}

struct Nfa {
    eps: Vec<Vec<usize>>,
    steps: Vec<Vec<(u8, usize)>>,
    start: usize,
    accept: usize,
}

impl Nfa {
    fn fresh(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.steps.push(Vec::new());
        self.eps.len() - 1
    }
}

fn thompson(r: &Regex, nfa: &mut Nfa) -> (usize, usize) {
    match r {
        Regex::Empty => {
            let s = nfa.fresh();
            let t = nfa.fresh();
            (s, t)
        }
        Regex::Epsilon => {
            let s = nfa.fresh();
            let t = nfa.fresh();
            nfa.eps[s].push(t);
            (s, t)
        }
        Regex::Literal(a) => {
            let s = nfa.fresh();
            let t = nfa.fresh();
            nfa.steps[s].push((*a, t));
            (s, t)
        }
        Regex::Union(x, y) => {
            let (sx, tx) = thompson(x, nfa);
            let (sy, ty) = thompson(y, nfa);
            let s = nfa.fresh();
            let t = nfa.fresh();
            nfa.eps[s].push(sx);
            nfa.eps[s].push(sy);
            nfa.eps[tx].push(t);
            nfa.eps[ty].push(t);
            (s, t)
        }
        Regex::Concat(x, y) => {
            let (sx, tx) = thompson(x, nfa);
            let (sy, ty) = thompson(y, nfa);
            nfa.eps[tx].push(sy);
            (sx, ty)
        }
        Regex::Star(x) => {
            let (sx, tx) = thompson(x, nfa);
            let s = nfa.fresh();
            let t = nfa.fresh();
            nfa.eps[s].push(sx);
            nfa.eps[s].push(t);
            nfa.eps[tx].push(sx);
            nfa.eps[tx].push(t);
            (s, t)
        }
    }
}

fn eps_closure(nfa: &Nfa, set: &mut Vec<usize>) {
    let mut i = 0;
    while i < set.len() {
        let q = set[i];
        for &t in &nfa.eps[q] {
            if !set.contains(&t) {
                set.push(t);
            }
        }
        i += 1;
    }
    set.sort_unstable();
    set.dedup();
}

/// Subset construction without minimization; the empty subset is the
/// completing sink, states are named in BFS discovery order.
pub fn regex_to_dfa_raw(r: &Regex, alphabet: &Alphabet) -> Result<DAutomaton, Error> {
    let mut nfa = Nfa { eps: Vec::new(), steps: Vec::new(), start: 0, accept: 0 };
    let (s, t) = thompson(r, &mut nfa);
    nfa.start = s;
    nfa.accept = t;

    let mut ids: std::collections::HashMap<Vec<usize>, usize> = Default::default();
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    let mut start_set = vec![nfa.start];
    eps_closure(&nfa, &mut start_set);
    ids.insert(start_set.clone(), 0);
    subsets.push(start_set);
    let mut delta: Vec<Vec<usize>> = vec![Vec::new(); alphabet.len()];
    let mut head = 0;
    while head < subsets.len() {
        let current = subsets[head].clone();
        for l in 0..alphabet.len() {
            let mut next: Vec<usize> = Vec::new();
            for &q in &current {
                for &(a, t) in &nfa.steps[q] {
                    if a as usize == l && !next.contains(&t) {
                        next.push(t);
                    }
                }
            }
            eps_closure(&nfa, &mut next);
            let fresh = subsets.len();
            let id = *ids.entry(next.clone()).or_insert_with(|| {
                subsets.push(next);
                fresh
            });
            guard::check_carrier(subsets.len())?;
            delta[l].push(id);
        }
        head += 1;
    }
    // ensure completeness: the empty subset may never have been produced for
    // total regexes, in which case the automaton is already complete
    let output = subsets
        .iter()
        .map(|set| usize::from(set.contains(&nfa.accept)))
        .collect();
    Ok(DAutomaton {
        variety: VarietySpec::new(VarietyTag::Set)?,
        alphabet: alphabet.clone(),
        states: FiniteDObject::set(subsets.len()),
        delta,
        initial: 0,
        output,
    })
}

/// Complete deterministic automaton of the regex, minimized and in canonical
/// (BFS) state order.
pub fn regex_to_dfa(r: &Regex, alphabet: &Alphabet) -> Result<DAutomaton, Error> {
    let raw = regex_to_dfa_raw(r, alphabet)?;
    Ok(crate::minimize::minimize(&raw)?.0)
}

/// Parses and compiles in one step.
pub fn compile_regex(input: &str, alphabet: &Alphabet) -> Result<DAutomaton, Error> {
    regex_to_dfa(&parse_regex(input, alphabet)?, alphabet)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::from_str("ab").unwrap()
    }

    fn accepts(a: &DAutomaton, s: &str) -> bool {
        a.accepts_word(&a.alphabet.word_of(s).unwrap()).unwrap()
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_regex("a|", &ab()).is_err());
        assert!(parse_regex("*a", &ab()).is_err());
        assert!(parse_regex("(a", &ab()).is_err());
        assert!(parse_regex("c", &ab()).is_err());
        assert!(matches!(
            parse_regex("a)b", &ab()),
            Err(Error::RegexParse { pos: 1, .. })
        ));
    }

    #[test]
    fn abstar_compiles_to_three_states() {
        let a = compile_regex("(ab)*", &ab()).unwrap();
        assert_eq!(a.size(), 3);
        assert!(accepts(&a, ""));
        assert!(accepts(&a, "abab"));
        assert!(!accepts(&a, "aa"));
        assert!(!accepts(&a, "aba"));
    }

    #[test]
    fn empty_language_is_one_rejecting_state() {
        let a = compile_regex("∅", &ab()).unwrap();
        assert_eq!(a.size(), 1);
        assert!(!accepts(&a, ""));
        assert!(!accepts(&a, "a"));
    }

    #[test]
    fn epsilon_regex() {
        let a = compile_regex("()", &ab()).unwrap();
        assert!(accepts(&a, ""));
        assert!(!accepts(&a, "a"));
    }

    #[test]
    fn union_accepts_exactly_two_words() {
        let a = compile_regex("a|b", &ab()).unwrap();
        for w in ab().words_upto(3) {
            let expect = w.len() == 1;
            assert_eq!(a.accepts_word(&w).unwrap(), expect, "{w:?}");
        }
    }

    #[test]
    fn brute_force_membership_agreement() {
        // (a|b)*abb against direct word scan
        let a = compile_regex("(a|b)*abb", &ab()).unwrap();
        for w in ab().words_upto(6) {
            let expect = w.len() >= 3 && w[w.len() - 3..] == [0, 1, 1];
            assert_eq!(a.accepts_word(&w).unwrap(), expect, "{w:?}");
        }
    }

    #[test]
    fn raw_subset_construction_is_complete_but_not_minimal() {
        let r = parse_regex("(ab)*", &ab()).unwrap();
        let raw = regex_to_dfa_raw(&r, &ab()).unwrap();
        assert!(raw.size() >= 3);
        assert!(crate::automaton::validate_automaton(&raw).is_empty());
        for w in ab().words_upto(5) {
            let expect = w.len() % 2 == 0 && w.chunks(2).all(|c| c == [0, 1]);
            assert_eq!(raw.accepts_word(&w).unwrap(), expect);
        }
    }
}
