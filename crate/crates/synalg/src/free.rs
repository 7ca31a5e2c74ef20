//! Normal forms and arithmetic of the free monoid of each variety.
//!
//! Over an alphabet `X0`, the free object is: words (sets), words plus `bot`
//! (pointed sets), words with a complement flag (involution algebras), finite
//! word sets including the empty one (semilattices), and finitely supported
//! polynomials over GF(p) (vector spaces). Normal forms are canonical: two
//! elements are equal iff their payloads are identical.

use crate::error::Error;
use crate::variety::{VarietySpec, VarietyTag};

/// Letters are stored as indices into the alphabet.
pub type Word = Vec<u8>;

/// An ordered alphabet of distinct single-character symbols. The declared
/// order fixes the shortlex order on words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self, Error> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::Config("alphabet must have at least one letter".into()));
        }
        if letters.len() > u8::MAX as usize {
            return Err(Error::Config("alphabet too large".into()));
        }
        for (i, &c) in letters.iter().enumerate() {
            if letters[..i].contains(&c) {
                return Err(Error::Config(format!("duplicate letter {c:?}")));
            }
        }
        Ok(Alphabet { letters })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn from_str(s: &str) -> Result<Self, Error> {
        Alphabet::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn char_of(&self, idx: u8) -> char {
        self.letters[idx as usize]
    }

    pub fn index_of(&self, c: char) -> Result<u8, Error> {
        self.letters
            .iter()
            .position(|&l| l == c)
            .map(|i| i as u8)
            .ok_or(Error::UnknownLetter(c))
    }

    pub fn word_of(&self, s: &str) -> Result<Word, Error> {
        s.chars().map(|c| self.index_of(c)).collect()
    }

    pub fn render_word(&self, w: &[u8]) -> String {
        if w.is_empty() {
            "_".to_string()
        } else {
            w.iter().map(|&i| self.char_of(i)).collect()
        }
    }

    /// All words of length at most `max_len`, in shortlex order.
    pub fn words_upto(&self, max_len: usize) -> Vec<Word> {
        let mut out: Vec<Word> = vec![Vec::new()];
        let mut level: Vec<Word> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(level.len() * self.len());
            for w in &level {
                for a in 0..self.len() as u8 {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            level = next;
        }
        out
    }
}

/// Shortlex comparison: by length, then lexicographically by letter index.
pub fn shortlex(a: &[u8], b: &[u8]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A normal-form element of the free monoid of one variety.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FreeElement {
    /// Sets: a word.
    Word(Word),
    /// Pointed sets: a word or the absorbing `bot` (`None`).
    PointedWord(Option<Word>),
    /// Involution algebras: a word with a complement flag.
    Signed { word: Word, complemented: bool },
    /// Semilattices: a finite word set, sorted shortlex, no duplicates.
    /// The empty set is the zero of the free semiring.
    WordSet(Vec<Word>),
    /// GF(p) polynomials: shortlex-sorted terms with nonzero coefficients.
    Poly(Vec<(Word, u32)>),
}

use FreeElement::*;

impl FreeElement {
    /// The longest word occurring in the element; `bot`, the empty set and
    /// the zero polynomial have level 0.
    pub fn level(&self) -> usize {
        match self {
            Word(w) => w.len(),
            PointedWord(Some(w)) => w.len(),
            PointedWord(None) => 0,
            Signed { word, .. } => word.len(),
            WordSet(ws) => ws.iter().map(|w| w.len()).max().unwrap_or(0),
            Poly(ts) => ts.iter().map(|(w, _)| w.len()).max().unwrap_or(0),
        }
    }

    /// True for the canonical image of a plain word (no complement, a
    /// singleton set, a single coefficient-1 term).
    pub fn plain_word(&self) -> Option<&Word> {
        match self {
            Word(w) => Some(w),
            PointedWord(Some(w)) => Some(w),
            Signed { word, complemented: false } => Some(word),
            WordSet(ws) if ws.len() == 1 => Some(&ws[0]),
            Poly(ts) if ts.len() == 1 && ts[0].1 == 1 => Some(&ts[0].0),
            _ => None,
        }
    }

    pub fn variety_tag_matches(&self, tag: VarietyTag) -> bool {
        matches!(
            (self, tag),
            (Word(_), VarietyTag::Set)
                | (PointedWord(_), VarietyTag::Pointed)
                | (Signed { .. }, VarietyTag::Involution)
                | (WordSet(_), VarietyTag::Semilattice)
                | (Poly(_), VarietyTag::Vect(_))
        )
    }

    /// Canonical images of plain words render as the bare word; compound
    /// elements use the structured syntax (`bot`, `!w`, `{w1,w2}`,
    /// `c1*w1 + c2*w2`, `0`).
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if let Some(w) = self.plain_word() {
            return alphabet.render_word(w);
        }
        match self {
            Word(w) => alphabet.render_word(w),
            PointedWord(Some(w)) => alphabet.render_word(w),
            PointedWord(None) => "bot".to_string(),
            Signed { word, complemented: false } => alphabet.render_word(word),
            Signed { word, complemented: true } => format!("!{}", alphabet.render_word(word)),
            WordSet(ws) => {
                let inner: Vec<String> = ws.iter().map(|w| alphabet.render_word(w)).collect();
                format!("{{{}}}", inner.join(","))
            }
            Poly(ts) => {
                if ts.is_empty() {
                    return "0".to_string();
                }
                ts.iter()
                    .map(|(w, c)| format!("{c}*{}", alphabet.render_word(w)))
                    .collect::<Vec<_>>()
                    .join(" + ")
            }
        }
    }
}

// The canonical order drives element naming everywhere: plain words come
// first in shortlex order, then compound elements by (level, shape). It is a
// total order consistent with structural equality.
impl Ord for FreeElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let rank = |e: &FreeElement| if e.plain_word().is_some() { 0u8 } else { 1 };
        self.level()
            .cmp(&other.level())
            .then_with(|| rank(self).cmp(&rank(other)))
            .then_with(|| match (self.plain_word(), other.plain_word()) {
                (Some(a), Some(b)) => shortlex(a, b),
                _ => compound_cmp(self, other),
            })
    }
}

impl PartialOrd for FreeElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn compound_cmp(a: &FreeElement, b: &FreeElement) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match (a, b) {
        (PointedWord(None), PointedWord(None)) => Ordering::Equal,
        (Signed { word: wa, .. }, Signed { word: wb, .. }) => shortlex(wa, wb),
        (WordSet(xs), WordSet(ys)) => xs.len().cmp(&ys.len()).then_with(|| {
            xs.iter()
                .zip(ys)
                .map(|(x, y)| shortlex(x, y))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        }),
        (Poly(xs), Poly(ys)) => xs.len().cmp(&ys.len()).then_with(|| {
            xs.iter()
                .zip(ys)
                .map(|((wx, cx), (wy, cy))| shortlex(wx, wy).then(cx.cmp(cy)))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        }),
        // mixed payloads only occur across varieties; any fixed order will do
        _ => discriminant_index(a).cmp(&discriminant_index(b)),
    }
}

fn discriminant_index(e: &FreeElement) -> u8 {
    match e {
        Word(_) => 0,
        PointedWord(_) => 1,
        Signed { .. } => 2,
        WordSet(_) => 3,
        Poly(_) => 4,
    }
}

fn normalize_word_set(mut ws: Vec<Word>) -> Vec<Word> {
    ws.sort_by(|a, b| shortlex(a, b));
    ws.dedup();
    ws
}

fn normalize_poly(terms: Vec<(Word, u32)>, p: u32) -> Vec<(Word, u32)> {
    let mut map: std::collections::BTreeMap<(usize, Word), u32> = Default::default();
    for (w, c) in terms {
        let e = map.entry((w.len(), w)).or_insert(0);
        *e = (*e + c) % p;
    }
    map.into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|((_, w), c)| (w, c))
        .collect()
}

/// The unit element in normal form.
pub fn fm_unit(v: &VarietySpec) -> FreeElement {
    match v.tag() {
        VarietyTag::Set => Word(Vec::new()),
        VarietyTag::Pointed => PointedWord(Some(Vec::new())),
        VarietyTag::Involution => Signed { word: Vec::new(), complemented: false },
        VarietyTag::Semilattice => WordSet(vec![Vec::new()]),
        VarietyTag::Vect(_) => Poly(vec![(Vec::new(), 1)]),
    }
}

/// The additive zero of the free object, for the varieties that have one.
pub fn fm_zero(v: &VarietySpec) -> Option<FreeElement> {
    match v.tag() {
        VarietyTag::Pointed => Some(PointedWord(None)),
        VarietyTag::Semilattice => Some(WordSet(Vec::new())),
        VarietyTag::Vect(_) => Some(Poly(Vec::new())),
        _ => None,
    }
}

/// Canonical image of a word: plain / non-bot / uncomplemented / singleton /
/// coefficient-1 monomial.
pub fn fm_embed_word(word: &[u8], v: &VarietySpec) -> FreeElement {
    let w: Word = word.to_vec();
    match v.tag() {
        VarietyTag::Set => Word(w),
        VarietyTag::Pointed => PointedWord(Some(w)),
        VarietyTag::Involution => Signed { word: w, complemented: false },
        VarietyTag::Semilattice => WordSet(vec![w]),
        VarietyTag::Vect(_) => Poly(vec![(w, 1)]),
    }
}

fn mismatch(v: &VarietySpec, e: &FreeElement) -> Error {
    Error::VarietyMismatch {
        expected: v.tag().to_string(),
        got: format!("free element {e:?}"),
    }
}

/// Normal-form product: concatenation, extended per variety (bot-absorbing,
/// complement-flag xor, elementwise set concatenation, polynomial
/// convolution).
pub fn fm_multiply(
    u: &FreeElement,
    w: &FreeElement,
    v: &VarietySpec,
) -> Result<FreeElement, Error> {
    if !u.variety_tag_matches(v.tag()) {
        return Err(mismatch(v, u));
    }
    if !w.variety_tag_matches(v.tag()) {
        return Err(mismatch(v, w));
    }
    let cat = |a: &Word, b: &Word| -> Word {
        let mut r = a.clone();
        r.extend_from_slice(b);
        r
    };
    Ok(match (u, w) {
        (Word(a), Word(b)) => Word(cat(a, b)),
        (PointedWord(None), PointedWord(_)) | (PointedWord(_), PointedWord(None)) => {
            PointedWord(None)
        }
        (PointedWord(Some(a)), PointedWord(Some(b))) => PointedWord(Some(cat(a, b))),
        (Signed { word: a, complemented: ca }, Signed { word: b, complemented: cb }) => {
            Signed { word: cat(a, b), complemented: ca ^ cb }
        }
        (WordSet(xs), WordSet(ys)) => {
            let mut out = Vec::with_capacity(xs.len() * ys.len());
            for a in xs {
                for b in ys {
                    out.push(cat(a, b));
                }
            }
            WordSet(normalize_word_set(out))
        }
        (Poly(xs), Poly(ys)) => {
            let p = match v.tag() {
                VarietyTag::Vect(p) => p,
                _ => unreachable!(),
            };
            let mut out = Vec::with_capacity(xs.len() * ys.len());
            for (a, ca) in xs {
                for (b, cb) in ys {
                    out.push((cat(a, b), ca * cb % p));
                }
            }
            Poly(normalize_poly(out, p))
        }
        _ => return Err(mismatch(v, w)),
    })
}

/// Pointwise complement (involution algebras only).
pub fn fm_complement(u: &FreeElement) -> Result<FreeElement, Error> {
    match u {
        Signed { word, complemented } => {
            Ok(Signed { word: word.clone(), complemented: !complemented })
        }
        _ => Err(Error::NotAMorphism("complement applies to involution elements".into())),
    }
}

/// Union of word sets (semilattices only).
pub fn fm_join(u: &FreeElement, w: &FreeElement) -> Result<FreeElement, Error> {
    match (u, w) {
        (WordSet(a), WordSet(b)) => {
            let mut out = a.clone();
            out.extend(b.iter().cloned());
            Ok(WordSet(normalize_word_set(out)))
        }
        _ => Err(Error::NotAMorphism("join applies to word sets".into())),
    }
}

/// Formal sum of polynomials (vector spaces only).
pub fn fm_add(u: &FreeElement, w: &FreeElement, p: u32) -> Result<FreeElement, Error> {
    match (u, w) {
        (Poly(a), Poly(b)) => {
            let mut out = a.clone();
            out.extend(b.iter().cloned());
            Ok(Poly(normalize_poly(out, p)))
        }
        _ => Err(Error::NotAMorphism("addition applies to polynomials".into())),
    }
}

/// Scalar multiple of a polynomial (vector spaces only).
pub fn fm_smul(s: u32, u: &FreeElement, p: u32) -> Result<FreeElement, Error> {
    match u {
        Poly(a) => Ok(Poly(normalize_poly(
            a.iter().map(|(w, c)| (w.clone(), c * s % p)).collect(),
            p,
        ))),
        _ => Err(Error::NotAMorphism("scalar multiplication applies to polynomials".into())),
    }
}

/// Deterministic test-harness enumeration: all words of length at most
/// `max_len`, plus a bounded family of compound elements (the absorbing
/// `bot`, all complemented words, word sets of size at most 3 including the
/// empty set, polynomials with at most 3 terms including the zero one).
/// The result is sorted in canonical order.
pub fn fm_enumerate(v: &VarietySpec, alphabet: &Alphabet, max_len: usize) -> Vec<FreeElement> {
    let words = alphabet.words_upto(max_len);
    let mut out: Vec<FreeElement> = Vec::new();
    match v.tag() {
        VarietyTag::Set => {
            out.extend(words.into_iter().map(Word));
        }
        VarietyTag::Pointed => {
            out.push(PointedWord(None));
            out.extend(words.into_iter().map(|w| PointedWord(Some(w))));
        }
        VarietyTag::Involution => {
            for w in words {
                out.push(Signed { word: w.clone(), complemented: false });
                out.push(Signed { word: w, complemented: true });
            }
        }
        VarietyTag::Semilattice => {
            out.push(WordSet(Vec::new()));
            for sub in subsets_upto(&words, 3) {
                out.push(WordSet(sub));
            }
        }
        VarietyTag::Vect(p) => {
            out.push(Poly(Vec::new()));
            for sub in subsets_upto(&words, 3) {
                let k = sub.len();
                let mut coeffs = vec![1u32; k];
                loop {
                    out.push(Poly(
                        sub.iter().cloned().zip(coeffs.iter().copied()).collect(),
                    ));
                    // odometer over coefficients 1..p
                    let mut i = 0;
                    while i < k {
                        coeffs[i] += 1;
                        if coeffs[i] < p {
                            break;
                        }
                        coeffs[i] = 1;
                        i += 1;
                    }
                    if i == k {
                        break;
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Nonempty subsets of `words` (already shortlex sorted) of size <= k,
/// each subset kept in shortlex order.
fn subsets_upto(words: &[Word], k: usize) -> Vec<Vec<Word>> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<Word>)> = vec![(0, Vec::new())];
    while let Some((start, cur)) = stack.pop() {
        for i in start..words.len() {
            let mut next = cur.clone();
            next.push(words[i].clone());
            out.push(next.clone());
            if next.len() < k {
                stack.push((i + 1, next));
            }
        }
    }
    out
}

/// Parses the CLI syntax for free elements: `_` for the empty word, `bot`,
/// `!w` for a complemented word, `{w1,w2}` for word sets (`{}` is the empty
/// set), `c1*w1 + c2*w2` for polynomials (`0` is the zero polynomial), and a
/// bare word otherwise.
pub fn parse_free_element(
    s: &str,
    alphabet: &Alphabet,
    v: &VarietySpec,
) -> Result<FreeElement, Error> {
    let s = s.trim();
    let parse_word = |t: &str| -> Result<Word, Error> {
        if t == "_" {
            Ok(Vec::new())
        } else {
            alphabet.word_of(t)
        }
    };
    match v.tag() {
        VarietyTag::Set => Ok(Word(parse_word(s)?)),
        VarietyTag::Pointed => {
            if s == "bot" {
                Ok(PointedWord(None))
            } else {
                Ok(PointedWord(Some(parse_word(s)?)))
            }
        }
        VarietyTag::Involution => {
            if let Some(rest) = s.strip_prefix('!') {
                Ok(Signed { word: parse_word(rest)?, complemented: true })
            } else {
                Ok(Signed { word: parse_word(s)?, complemented: false })
            }
        }
        VarietyTag::Semilattice => {
            let inner = match s.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
                Some(inner) => inner,
                // a bare word is the singleton set
                None => return Ok(WordSet(vec![parse_word(s)?])),
            };
            let mut ws = Vec::new();
            if !inner.trim().is_empty() {
                for part in inner.split(',') {
                    ws.push(parse_word(part.trim())?);
                }
            }
            Ok(WordSet(normalize_word_set(ws)))
        }
        VarietyTag::Vect(p) => {
            if s == "0" {
                return Ok(Poly(Vec::new()));
            }
            let mut terms = Vec::new();
            for part in s.split('+') {
                let part = part.trim();
                let (c, w) = match part.split_once('*') {
                    Some((c, w)) => {
                        let c: u32 = c.trim().parse().map_err(|_| {
                            Error::Config(format!("bad coefficient in {part:?}"))
                        })?;
                        (c, w.trim())
                    }
                    None => (1, part),
                };
                terms.push((parse_word(w)?, c));
            }
            Ok(Poly(normalize_poly(terms, p)))
        }
    }
}
