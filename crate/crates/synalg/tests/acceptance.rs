//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Expected values are frozen from independent oracles implemented inside
//! this file (brute-force closures, direct context scans on the language
//! predicates); the library results are then required to match them exactly.

use std::collections::HashSet;
use std::time::Instant;

use synalg::automaton::{dfa, eval, lift_automaton, run, validate_automaton, DAutomaton};
use synalg::check::{
    check_laws, check_minimize_idempotent, check_recognition, check_tran_eq_oracle,
    check_universal_property, make_instance, pad_dfa, Instance,
};
use synalg::duality::{verify_mindual, verify_syndual, RegularLanguageHandle};
use synalg::free::{fm_enumerate, Alphabet, FreeElement};
use synalg::minimize::minimize;
use synalg::par::{sweep_indexed, Parallelism};
use synalg::regex::compile_regex;
use synalg::syntactic::{monoid_validate, syntactic_monoid, syntactic_partition_oracle};
use synalg::variety::{quotient_by_partition, Partition, VarietySpec, VarietyTag};

fn ab() -> Alphabet {
    Alphabet::from_str("ab").unwrap()
}

fn a_only() -> Alphabet {
    Alphabet::from_str("a").unwrap()
}

fn parity_dfa() -> DAutomaton {
    dfa(&a_only(), 2, vec![vec![1, 0]], 0, &[0])
}

fn spec(tag: VarietyTag) -> VarietySpec {
    VarietySpec::new(tag).unwrap()
}

const ALL_TAGS: [VarietyTag; 5] = [
    VarietyTag::Set,
    VarietyTag::Pointed,
    VarietyTag::Involution,
    VarietyTag::Semilattice,
    VarietyTag::Vect(2),
];

fn sweep_instances<F>(
    tag: VarietyTag,
    count: usize,
    max_base: usize,
    root_seed: u64,
    check: F,
) -> Vec<String>
where
    F: Fn(&Instance) -> Result<(), String> + Sync + Send,
{
    let alphabet = ab();
    sweep_indexed(Parallelism::default(), count, |i| {
        let seed = root_seed
            .wrapping_mul(0x9E3779B97F4A7C15)
            .wrapping_add((i as u64).wrapping_mul(0xD1B54A32D192ED03));
        let instance = make_instance(tag, max_base, &alphabet, seed).expect("instance");
        check(&instance).err().map(|m| format!("{tag} instance {i} (seed {seed}): {m}"))
    })
    .into_iter()
    .flatten()
    .collect()
}

// ---------------------------------------------------------------------------
// criterion 1: known values, each derived by an independent oracle first
// ---------------------------------------------------------------------------

/// Independent oracle for (ab)*: closure of the three transition maps of the
/// hand-built minimal DFA under composition.
fn oracle_abstar_monoid_size() -> usize {
    let delta_a = [1usize, 2, 2];
    let delta_b = [2usize, 0, 2];
    let id = [0usize, 1, 2];
    let mut seen: HashSet<[usize; 3]> = [id].into_iter().collect();
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        for d in [delta_a, delta_b] {
            let next = [d[m[0]], d[m[1]], d[m[2]]];
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    seen.len()
}

fn words_upto(letters: usize, max_len: usize) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = vec![vec![]];
    let mut level: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &level {
            for l in 0..letters as u8 {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Independent context oracle: classes of words of length <= 4 under
/// two-sided contexts of length <= 4, for the even-number-of-a's language.
fn oracle_even_a_classes() -> usize {
    let member = |w: &[u8]| w.iter().filter(|&&l| l == 0).count() % 2 == 0;
    let words = words_upto(2, 4);
    let contexts = words_upto(2, 4);
    let mut sigs: HashSet<Vec<bool>> = HashSet::new();
    for u in &words {
        let sig: Vec<bool> = contexts
            .iter()
            .flat_map(|x| {
                contexts.iter().map(move |y| {
                    let mut w = x.clone();
                    w.extend(u);
                    w.extend(y);
                    member(&w)
                })
            })
            .collect();
        sigs.insert(sig);
    }
    sigs.len()
}

/// Independent oracle for the semilattice lift of parity over {a}: group all
/// word sets with at most 2 words of length <= 3 under word contexts of
/// length <= 3. Membership of a set is "some word lands in the language".
fn oracle_jsl_parity_classes() -> usize {
    let lengths: Vec<usize> = (0..=3).collect();
    let mut sets: Vec<Vec<usize>> = vec![vec![]];
    for i in 0..lengths.len() {
        sets.push(vec![lengths[i]]);
        for j in i + 1..lengths.len() {
            sets.push(vec![lengths[i], lengths[j]]);
        }
    }
    let mut sigs: HashSet<Vec<bool>> = HashSet::new();
    for set in &sets {
        let sig: Vec<bool> = (0..=3)
            .flat_map(|x: usize| {
                let set = set.clone();
                (0..=3).map(move |y: usize| set.iter().any(|&u| (x + u + y).is_multiple_of(2)))
            })
            .collect();
        sigs.insert(sig);
    }
    sigs.len()
}

/// Independent oracle for the involution lift of parity over {a}: plain and
/// complemented words of length <= 3 under plain word contexts of length
/// <= 3, with the complement clause "value flips".
fn oracle_involution_parity_classes() -> usize {
    let mut sigs: HashSet<Vec<bool>> = HashSet::new();
    for len in 0..=3usize {
        for complemented in [false, true] {
            let sig: Vec<bool> = (0..=3)
                .flat_map(|x: usize| {
                    (0..=3).map(move |y: usize| {
                        let plain = (x + len + y).is_multiple_of(2);
                        plain != complemented
                    })
                })
                .collect();
            sigs.insert(sig);
        }
    }
    sigs.len()
}

/// Independent oracle for the GF(2) lift of parity over {a}: polynomials of
/// degree <= 3 under word contexts of length <= 3, with the linear extension
/// of the parity predicate.
fn oracle_vect2_parity_classes() -> usize {
    let mut sigs: HashSet<Vec<bool>> = HashSet::new();
    for coeffs in 0u32..16 {
        let sig: Vec<bool> = (0..=3)
            .flat_map(|x: usize| {
                (0..=3).map(move |y: usize| {
                    let mut acc = 0u32;
                    for deg in 0..4 {
                        if coeffs >> deg & 1 == 1 && (x + deg + y).is_multiple_of(2) {
                            acc ^= 1;
                        }
                    }
                    acc == 1
                })
            })
            .collect();
        sigs.insert(sig);
    }
    sigs.len()
}

#[test]
fn acceptance_1_known_values() {
    // (ab)*: 3-state minimal DFA, 6-element syntactic monoid, under a second
    let t0 = Instant::now();
    assert_eq!(oracle_abstar_monoid_size(), 6);
    let abstar = compile_regex("(ab)*", &ab()).unwrap();
    let (min, _) = minimize(&abstar).unwrap();
    assert_eq!(min.size(), 3);
    let syn = syntactic_monoid(&abstar).unwrap();
    assert_eq!(syn.syn().size(), 6);
    assert!(t0.elapsed().as_secs_f64() < 1.0, "(ab)* took {:?}", t0.elapsed());

    // even number of a's over {a,b}
    assert_eq!(oracle_even_a_classes(), 2);
    let even_a = dfa(&ab(), 2, vec![vec![1, 0], vec![0, 1]], 0, &[0]);
    assert_eq!(syntactic_monoid(&even_a).unwrap().syn().size(), 2);

    // semilattice lift of parity over {a}: 4 classes {0, [even], [odd], [even+odd]}
    assert_eq!(oracle_jsl_parity_classes(), 4);
    let jsl = spec(VarietyTag::Semilattice);
    let lifted = lift_automaton(&parity_dfa(), &jsl).unwrap();
    let syn_jsl = syntactic_monoid(&lifted).unwrap();
    assert_eq!(syn_jsl.syn().size(), 4);
    let rendered: HashSet<String> =
        syn_jsl.syn().names.iter().map(|n| n.render(&a_only())).collect();
    let expect: HashSet<String> =
        ["{}", "_", "a", "{_,a}"].into_iter().map(String::from).collect();
    assert_eq!(rendered, expect);

    // involution lift of parity: two classes swapped by the involution
    assert_eq!(oracle_involution_parity_classes(), 2);
    let inv = spec(VarietyTag::Involution);
    let lifted = lift_automaton(&parity_dfa(), &inv).unwrap();
    let syn_inv = syntactic_monoid(&lifted).unwrap();
    assert_eq!(syn_inv.syn().size(), 2);
    let unit = syn_inv.syn().unit;
    let other = 1 - unit;
    assert_eq!(syn_inv.syn().carrier.involution_of(unit), Some(other));
    assert_eq!(syn_inv.syn().carrier.involution_of(other), Some(unit));

    // GF(2) lift of parity: carrier 4, dimension 2
    assert_eq!(oracle_vect2_parity_classes(), 4);
    let vect = spec(VarietyTag::Vect(2));
    let lifted = lift_automaton(&parity_dfa(), &vect).unwrap();
    let syn_vect = syntactic_monoid(&lifted).unwrap();
    assert_eq!(syn_vect.syn().size(), 4);
    assert_eq!(syn_vect.syn().size().trailing_zeros(), 2, "dimension 2 over GF(2)");

    println!("acceptance 1 (known values): pass");
}

// ---------------------------------------------------------------------------
// criterion 2: transition route agrees with the context oracle
// ---------------------------------------------------------------------------

fn name_fits_enumeration(name: &FreeElement, max_len: usize) -> bool {
    if name.level() > max_len {
        return false;
    }
    match name {
        FreeElement::WordSet(ws) => ws.len() <= 3,
        FreeElement::Poly(ts) => ts.len() <= 3,
        _ => true,
    }
}

#[test]
fn acceptance_2_transition_monoid_equals_oracle() {
    let t0 = Instant::now();
    let mut failures = sweep_instances(VarietyTag::Set, 200, 5, 2001, |i| {
        check_tran_eq_oracle(i)?;
        // where the enumeration can cover every class, the partition oracle
        // itself must report exactly |Syn| classes
        let syn = syntactic_monoid(&i.automaton).map_err(|e| e.to_string())?;
        if syn.syn().names.iter().all(|n| name_fits_enumeration(n, 3)) {
            let classes =
                syntactic_partition_oracle(&i.automaton, 3).map_err(|e| e.to_string())?;
            if classes.len() != syn.syn().size() {
                return Err(format!(
                    "partition oracle found {} classes, |Syn| = {}",
                    classes.len(),
                    syn.syn().size()
                ));
            }
        }
        Ok(())
    });
    for tag in [
        VarietyTag::Pointed,
        VarietyTag::Involution,
        VarietyTag::Semilattice,
        VarietyTag::Vect(2),
    ] {
        failures.extend(sweep_instances(tag, 50, 3, 2002, check_tran_eq_oracle));
    }
    assert!(failures.is_empty(), "{failures:?}");
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "criterion 2 took {elapsed:?}");
    println!("acceptance 2 (transition monoid = oracle, 400 instances): pass in {elapsed:?}");
}

// ---------------------------------------------------------------------------
// criterion 3: universal property
// ---------------------------------------------------------------------------

#[test]
fn acceptance_3_universal_property() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for tag in ALL_TAGS {
        let max_base = if tag == VarietyTag::Set { 4 } else { 3 };
        failures.extend(sweep_instances(tag, 20, max_base, 3003, check_universal_property));
    }
    assert!(failures.is_empty(), "{failures:?}");
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "criterion 3 took {elapsed:?}");
    println!("acceptance 3 (universal property, 100 instances): pass in {elapsed:?}");
}

// ---------------------------------------------------------------------------
// criterion 4: minimality
// ---------------------------------------------------------------------------

/// All partitions of `0..n` as assignment vectors (restricted growth strings).
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; n];
    fn rec(i: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for b in 0..=max + 1 {
            current[i] = b;
            rec(i + 1, max.max(b), current, out);
        }
    }
    if n > 0 {
        rec(1, 0, &mut current, &mut out);
    }
    out
}

/// True if some proper quotient of the minimal automaton still accepts the
/// same language (it must not).
fn has_language_preserving_proper_quotient(min: &DAutomaton) -> bool {
    let n = min.size();
    for assignment in set_partitions(n) {
        let partition = Partition::from_assignment(&assignment);
        if partition.len() == n {
            continue;
        }
        // the output must be constant on blocks for a quotient automaton
        let reps = partition.representatives();
        if (0..n).any(|q| min.output[q] != min.output[reps[partition.block_of(q)]]) {
            continue;
        }
        // letter stability
        let stable = min.delta.iter().all(|row| {
            (0..n).all(|q| {
                partition.block_of(row[q]) == partition.block_of(row[reps[partition.block_of(q)]])
            })
        });
        if !stable {
            continue;
        }
        let quotient = match quotient_by_partition(&min.states, &partition, &min.variety) {
            Ok((states, proj)) => {
                let delta = min
                    .delta
                    .iter()
                    .map(|row| reps.iter().map(|&r| proj[row[r]]).collect())
                    .collect();
                let output = reps.iter().map(|&r| min.output[r]).collect();
                DAutomaton {
                    variety: min.variety.clone(),
                    alphabet: min.alphabet.clone(),
                    states,
                    delta,
                    initial: proj[min.initial],
                    output,
                }
            }
            Err(_) => continue,
        };
        if !validate_automaton(&quotient).is_empty() {
            continue;
        }
        let bound = min.size() + quotient.size();
        let same = min.alphabet.words_upto(bound).iter().all(|w| {
            min.output[run(min, w).unwrap()] == quotient.output[run(&quotient, w).unwrap()]
        });
        if same {
            return true;
        }
    }
    false
}

#[test]
fn acceptance_4_minimality() {
    let mut failures = Vec::new();
    for tag in ALL_TAGS {
        failures.extend(sweep_instances(tag, 15, 3, 4004, |i| {
            check_minimize_idempotent(i)?;
            let (min, _) = minimize(&i.automaton).map_err(|e| e.to_string())?;
            if min.size() <= 6 && has_language_preserving_proper_quotient(&min) {
                return Err("a proper quotient preserves the language".into());
            }
            Ok(())
        }));
    }
    assert!(failures.is_empty(), "{failures:?}");
    println!("acceptance 4 (minimality suite, 75 instances): pass");
}

// ---------------------------------------------------------------------------
// criterion 5: duality
// ---------------------------------------------------------------------------

#[test]
fn acceptance_5_duality() {
    let t0 = Instant::now();
    // the three known-value classical languages
    let known = [
        compile_regex("(ab)*", &ab()).unwrap(),
        dfa(&ab(), 2, vec![vec![1, 0], vec![0, 1]], 0, &[0]),
        parity_dfa(),
    ];
    for a in &known {
        let l = RegularLanguageHandle::new(a).unwrap();
        assert!(verify_syndual(&l).unwrap().iso);
        assert!(verify_mindual(&l).unwrap());
    }
    // exactly 3-state random DFAs
    let alphabet = ab();
    let set = spec(VarietyTag::Set);
    let failures: Vec<String> = sweep_indexed(Parallelism::default(), 50, |i| {
        let a = synalg::automaton::random_automaton(&set, 3, &alphabet, 50_000 + i as u64)
            .expect("instance");
        let l = RegularLanguageHandle::new(&a).map_err(|e| e.to_string())?;
        let report = verify_syndual(&l).map_err(|e| e.to_string())?;
        if !report.iso {
            return Err(format!("syndual isomorphism failed at instance {i}"));
        }
        if !verify_mindual(&l).map_err(|e| e.to_string())? {
            return Err(format!("mindual comparison failed at instance {i}"));
        }
        Ok(())
    })
    .into_iter()
    .filter_map(|r| r.err())
    .collect();
    assert!(failures.is_empty(), "{failures:?}");
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "criterion 5 took {elapsed:?}");
    println!("acceptance 5 (duality suite, 3 known + 50 random): pass in {elapsed:?}");
}

// ---------------------------------------------------------------------------
// criterion 6: law suites
// ---------------------------------------------------------------------------

#[test]
fn acceptance_6_laws() {
    let mut failures = Vec::new();
    for tag in ALL_TAGS {
        failures.extend(sweep_instances(tag, 10, 3, 6006, check_laws));
    }
    // known-value constructions pass the full law scans too
    let jsl = spec(VarietyTag::Semilattice);
    let lifted = lift_automaton(&parity_dfa(), &jsl).unwrap();
    assert!(validate_automaton(&lifted).is_empty());
    let syn = syntactic_monoid(&lifted).unwrap();
    assert!(monoid_validate(syn.syn(), &jsl).is_empty());
    let syn = syntactic_monoid(&compile_regex("(ab)*", &ab()).unwrap()).unwrap();
    assert!(monoid_validate(syn.syn(), &spec(VarietyTag::Set)).is_empty());
    assert!(failures.is_empty(), "{failures:?}");
    println!("acceptance 6 (law suites, 50 instances + known values): pass");
}

// ---------------------------------------------------------------------------
// criterion 7: recognition
// ---------------------------------------------------------------------------

#[test]
fn acceptance_7_recognition() {
    let mut failures = Vec::new();
    for tag in ALL_TAGS {
        failures.extend(sweep_instances(tag, 10, 3, 7007, check_recognition));
    }
    // and on the known lifts, word length up to 4 with compound elements
    for tag in [VarietyTag::Pointed, VarietyTag::Involution, VarietyTag::Semilattice, VarietyTag::Vect(2)] {
        let v = spec(tag);
        let lifted = lift_automaton(&parity_dfa(), &v).unwrap();
        let syn = syntactic_monoid(&lifted).unwrap();
        for u in fm_enumerate(&v, &a_only(), 4) {
            assert_eq!(
                syn.pair.recognize(&u).unwrap(),
                eval(&lifted, &u).unwrap(),
                "{tag} at {u:?}"
            );
        }
    }
    assert!(failures.is_empty(), "{failures:?}");
    println!("acceptance 7 (recognition, 50 instances + known lifts): pass");
}

// ---------------------------------------------------------------------------
// supporting cross-checks used by the criteria above
// ---------------------------------------------------------------------------

#[test]
fn padded_recognizers_share_their_syntactic_monoid() {
    // two independently padded recognizers of one random language have equal
    // syntactic monoids (sizes and letter-generated tables)
    let alphabet = ab();
    for seed in 0..10u64 {
        let instance = make_instance(VarietyTag::Set, 3, &alphabet, 9090 + seed).unwrap();
        let a1 = pad_dfa(&instance.base, 2, seed);
        let a2 = pad_dfa(&instance.base, 3, seed ^ 0xFFFF);
        let s1 = syntactic_monoid(&a1).unwrap();
        let s2 = syntactic_monoid(&a2).unwrap();
        assert_eq!(s1.syn().size(), s2.syn().size());
        let (m1, _) = minimize(&a1).unwrap();
        let (m2, _) = minimize(&a2).unwrap();
        assert!(synalg::minimize::automaton_iso(&m1, &m2).unwrap().is_some());
    }
}
