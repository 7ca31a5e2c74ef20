//! Strict JSON serialization of automata and rendering of monoids.
//!
//! The automaton file format names states, maps transitions letter by
//! letter, and carries the variety's operation tables (omitted for plain
//! sets). Parsing is strict: unknown or missing fields are rejected with a
//! JSON pointer, and the parsed automaton must pass validation.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::automaton::{validate_automaton, DAutomaton};
use crate::error::Error;
use crate::free::Alphabet;
use crate::syntactic::{monoid_validate, RecognizingPair};
use crate::variety::{DOps, FiniteDObject, VarietySpec, VarietyTag};

fn state_name(i: usize) -> String {
    format!("q{i}")
}

fn output_value_string(v: &VarietySpec, y: usize) -> String {
    match v.tag() {
        VarietyTag::Pointed => {
            if y == 0 {
                "bot".into()
            } else {
                "1".into()
            }
        }
        _ => y.to_string(),
    }
}

fn parse_output_value(v: &VarietySpec, s: &str, pointer: &str) -> Result<usize, Error> {
    let y_size = v.output_object().size();
    let parsed = match v.tag() {
        VarietyTag::Pointed => match s {
            "bot" => Some(0),
            "1" => Some(1),
            _ => None,
        },
        _ => s.parse::<usize>().ok().filter(|&y| y < y_size),
    };
    parsed.ok_or_else(|| Error::Schema {
        pointer: pointer.into(),
        message: format!("bad output value {s:?}"),
    })
}

/// Serializes an automaton to the strict JSON schema.
pub fn emit_automaton(a: &DAutomaton) -> Value {
    let n = a.states.size();
    let names: Vec<String> = (0..n).map(state_name).collect();
    let mut root = Map::new();
    root.insert("variety".into(), json!(a.variety.tag().short_name()));
    if let VarietyTag::Vect(p) = a.variety.tag() {
        root.insert("p".into(), json!(p));
    }
    root.insert(
        "alphabet".into(),
        Value::Array(a.alphabet.letters().iter().map(|c| json!(c.to_string())).collect()),
    );
    root.insert("states".into(), Value::Array(names.iter().map(|s| json!(s)).collect()));
    let ops = match a.states.ops() {
        DOps::Set => None,
        DOps::Pointed { basepoint } => Some(json!({ "basepoint": names[*basepoint] })),
        DOps::Involution { inv } => {
            let table: BTreeMap<&String, &String> =
                (0..n).map(|x| (&names[x], &names[inv[x]])).collect();
            Some(json!({ "involution": table }))
        }
        DOps::Semilattice { bottom, join } => {
            let table: BTreeMap<&String, BTreeMap<&String, &String>> = (0..n)
                .map(|x| (&names[x], (0..n).map(|y| (&names[y], &names[join[x][y]])).collect()))
                .collect();
            Some(json!({ "bottom": names[*bottom], "join": table }))
        }
        DOps::Vect { p, zero, add, smul } => {
            let add_table: BTreeMap<&String, BTreeMap<&String, &String>> = (0..n)
                .map(|x| (&names[x], (0..n).map(|y| (&names[y], &names[add[x][y]])).collect()))
                .collect();
            let smul_table: BTreeMap<String, BTreeMap<&String, &String>> = (0..*p as usize)
                .map(|s| {
                    (s.to_string(), (0..n).map(|x| (&names[x], &names[smul[s][x]])).collect())
                })
                .collect();
            Some(json!({ "zero": names[*zero], "add": add_table, "smul": smul_table }))
        }
    };
    if let Some(ops) = ops {
        root.insert("ops".into(), ops);
    }
    root.insert("initial".into(), json!(names[a.initial]));
    let delta: BTreeMap<String, BTreeMap<&String, &String>> = (0..a.alphabet.len())
        .map(|l| {
            (
                a.alphabet.char_of(l as u8).to_string(),
                (0..n).map(|q| (&names[q], &names[a.delta[l][q]])).collect(),
            )
        })
        .collect();
    root.insert("delta".into(), json!(delta));
    let output: BTreeMap<&String, String> = (0..n)
        .map(|q| (&names[q], output_value_string(&a.variety, a.output[q])))
        .collect();
    root.insert("output".into(), json!(output));
    Value::Object(root)
}

pub fn emit_automaton_string(a: &DAutomaton) -> String {
    serde_json::to_string_pretty(&emit_automaton(a)).expect("automaton serialization")
}

pub fn write_automaton_file(a: &DAutomaton, path: &Path) -> Result<(), Error> {
    std::fs::write(path, emit_automaton_string(a) + "\n")?;
    Ok(())
}

struct Walker;

impl Walker {
    fn object<'a>(&self, v: &'a Value, pointer: &str) -> Result<&'a Map<String, Value>, Error> {
        v.as_object().ok_or_else(|| Error::Schema {
            pointer: pointer.into(),
            message: "expected an object".into(),
        })
    }

    fn field<'a>(&self, m: &'a Map<String, Value>, key: &str, pointer: &str) -> Result<&'a Value, Error> {
        m.get(key).ok_or_else(|| Error::Schema {
            pointer: format!("{pointer}/{key}"),
            message: "missing field".into(),
        })
    }

    fn string<'a>(&self, v: &'a Value, pointer: &str) -> Result<&'a str, Error> {
        v.as_str().ok_or_else(|| Error::Schema {
            pointer: pointer.into(),
            message: "expected a string".into(),
        })
    }
}

/// Strict parse of the automaton schema followed by full validation.
pub fn parse_automaton_value(root: &Value) -> Result<DAutomaton, Error> {
    let w = Walker;
    let top = w.object(root, "")?;
    let variety_name = w.string(w.field(top, "variety", "")?, "/variety")?;
    let tag = match variety_name {
        "set" => VarietyTag::Set,
        "pointed" => VarietyTag::Pointed,
        "involution" => VarietyTag::Involution,
        "jsl" => VarietyTag::Semilattice,
        "vect" => {
            let p = w
                .field(top, "p", "")?
                .as_u64()
                .ok_or_else(|| Error::Schema {
                    pointer: "/p".into(),
                    message: "expected a prime".into(),
                })?;
            VarietyTag::Vect(p as u32)
        }
        other => {
            return Err(Error::Schema {
                pointer: "/variety".into(),
                message: format!("unknown variety {other:?}"),
            })
        }
    };
    let variety = VarietySpec::new(tag).map_err(|e| Error::Schema {
        pointer: "/p".into(),
        message: e.to_string(),
    })?;
    let mut allowed = vec!["variety", "alphabet", "states", "initial", "delta", "output"];
    if tag != VarietyTag::Set {
        allowed.push("ops");
    }
    if matches!(tag, VarietyTag::Vect(_)) {
        allowed.push("p");
    }
    for key in top.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(Error::Schema {
                pointer: format!("/{key}"),
                message: "unknown field".into(),
            });
        }
    }

    let alphabet_value = w.field(top, "alphabet", "")?;
    let letters = alphabet_value
        .as_array()
        .ok_or_else(|| Error::Schema {
            pointer: "/alphabet".into(),
            message: "expected an array".into(),
        })?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let s = w.string(v, &format!("/alphabet/{i}"))?;
            let mut chars = s.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => Ok(c),
                _ => Err(Error::Schema {
                    pointer: format!("/alphabet/{i}"),
                    message: "letters are single characters".into(),
                }),
            }
        })
        .collect::<Result<Vec<char>, Error>>()?;
    let alphabet = Alphabet::new(letters).map_err(|e| Error::Schema {
        pointer: "/alphabet".into(),
        message: e.to_string(),
    })?;

    let state_values = w
        .field(top, "states", "")?
        .as_array()
        .ok_or_else(|| Error::Schema {
            pointer: "/states".into(),
            message: "expected an array".into(),
        })?;
    let mut state_ids: BTreeMap<String, usize> = BTreeMap::new();
    for (i, v) in state_values.iter().enumerate() {
        let name = w.string(v, &format!("/states/{i}"))?;
        if state_ids.insert(name.to_string(), i).is_some() {
            return Err(Error::Schema {
                pointer: format!("/states/{i}"),
                message: format!("duplicate state {name:?}"),
            });
        }
    }
    let n = state_ids.len();
    if n == 0 {
        return Err(Error::Schema {
            pointer: "/states".into(),
            message: "at least one state required".into(),
        });
    }
    let lookup_state = |name: &str, pointer: &str| -> Result<usize, Error> {
        state_ids.get(name).copied().ok_or_else(|| Error::Schema {
            pointer: pointer.into(),
            message: format!("unknown state {name:?}"),
        })
    };
    // a map state-name -> state-name, required total on states
    let state_map = |value: &Value, pointer: &str| -> Result<Vec<usize>, Error> {
        let obj = w.object(value, pointer)?;
        let mut out = vec![usize::MAX; n];
        for (key, val) in obj {
            let from = lookup_state(key, &format!("{pointer}/{key}"))?;
            let to = lookup_state(
                w.string(val, &format!("{pointer}/{key}"))?,
                &format!("{pointer}/{key}"),
            )?;
            out[from] = to;
        }
        if let Some(missing) = out.iter().position(|&x| x == usize::MAX) {
            return Err(Error::Schema {
                pointer: pointer.into(),
                message: format!("missing entry for state {:?}", state_values[missing]),
            });
        }
        Ok(out)
    };

    let ops = match tag {
        VarietyTag::Set => {
            DOps::Set
        }
        _ => {
            let ops_value = w.field(top, "ops", "")?;
            let ops_obj = w.object(ops_value, "/ops")?;
            let check_keys = |expect: &[&str]| -> Result<(), Error> {
                for key in ops_obj.keys() {
                    if !expect.contains(&key.as_str()) {
                        return Err(Error::Schema {
                            pointer: format!("/ops/{key}"),
                            message: "unknown field".into(),
                        });
                    }
                }
                for key in expect {
                    if !ops_obj.contains_key(*key) {
                        return Err(Error::Schema {
                            pointer: format!("/ops/{key}"),
                            message: "missing field".into(),
                        });
                    }
                }
                Ok(())
            };
            match tag {
                VarietyTag::Pointed => {
                    check_keys(&["basepoint"])?;
                    let bp = lookup_state(
                        w.string(ops_obj.get("basepoint").unwrap(), "/ops/basepoint")?,
                        "/ops/basepoint",
                    )?;
                    DOps::Pointed { basepoint: bp }
                }
                VarietyTag::Involution => {
                    check_keys(&["involution"])?;
                    let inv = state_map(ops_obj.get("involution").unwrap(), "/ops/involution")?;
                    DOps::Involution { inv }
                }
                VarietyTag::Semilattice => {
                    check_keys(&["bottom", "join"])?;
                    let bottom = lookup_state(
                        w.string(ops_obj.get("bottom").unwrap(), "/ops/bottom")?,
                        "/ops/bottom",
                    )?;
                    let join_obj = w.object(ops_obj.get("join").unwrap(), "/ops/join")?;
                    let mut join = vec![vec![usize::MAX; n]; n];
                    for (key, val) in join_obj {
                        let x = lookup_state(key, &format!("/ops/join/{key}"))?;
                        join[x] = state_map(val, &format!("/ops/join/{key}"))?;
                    }
                    if let Some(missing) = join.iter().position(|row| row[0] == usize::MAX) {
                        return Err(Error::Schema {
                            pointer: "/ops/join".into(),
                            message: format!("missing row for state {:?}", state_values[missing]),
                        });
                    }
                    DOps::Semilattice { bottom, join }
                }
                VarietyTag::Vect(p) => {
                    check_keys(&["zero", "add", "smul"])?;
                    let zero = lookup_state(
                        w.string(ops_obj.get("zero").unwrap(), "/ops/zero")?,
                        "/ops/zero",
                    )?;
                    let add_obj = w.object(ops_obj.get("add").unwrap(), "/ops/add")?;
                    let mut add = vec![vec![usize::MAX; n]; n];
                    for (key, val) in add_obj {
                        let x = lookup_state(key, &format!("/ops/add/{key}"))?;
                        add[x] = state_map(val, &format!("/ops/add/{key}"))?;
                    }
                    if let Some(missing) = add.iter().position(|row| row[0] == usize::MAX) {
                        return Err(Error::Schema {
                            pointer: "/ops/add".into(),
                            message: format!("missing row for state {:?}", state_values[missing]),
                        });
                    }
                    let smul_obj = w.object(ops_obj.get("smul").unwrap(), "/ops/smul")?;
                    let mut smul = vec![vec![usize::MAX; n]; p as usize];
                    for (key, val) in smul_obj {
                        let s: usize = key.parse().ok().filter(|&s| s < p as usize).ok_or_else(
                            || Error::Schema {
                                pointer: format!("/ops/smul/{key}"),
                                message: "scalar out of range".into(),
                            },
                        )?;
                        smul[s] = state_map(val, &format!("/ops/smul/{key}"))?;
                    }
                    if let Some(missing) = smul.iter().position(|row| row.is_empty() || row[0] == usize::MAX) {
                        return Err(Error::Schema {
                            pointer: "/ops/smul".into(),
                            message: format!("missing row for scalar {missing}"),
                        });
                    }
                    DOps::Vect { p, zero, add, smul }
                }
                VarietyTag::Set => unreachable!(),
            }
        }
    };

    let initial = lookup_state(w.string(w.field(top, "initial", "")?, "/initial")?, "/initial")?;

    let delta_obj = w.object(w.field(top, "delta", "")?, "/delta")?;
    let mut delta = vec![Vec::new(); alphabet.len()];
    for (key, val) in delta_obj {
        let mut chars = key.chars();
        let letter = match (chars.next(), chars.next()) {
            (Some(c), None) => alphabet.index_of(c).map_err(|_| Error::Schema {
                pointer: format!("/delta/{key}"),
                message: "letter not in alphabet".into(),
            })?,
            _ => {
                return Err(Error::Schema {
                    pointer: format!("/delta/{key}"),
                    message: "letters are single characters".into(),
                })
            }
        };
        delta[letter as usize] = state_map(val, &format!("/delta/{key}"))?;
    }
    if let Some(missing) = delta.iter().position(|row| row.is_empty()) {
        return Err(Error::Schema {
            pointer: "/delta".into(),
            message: format!("missing transitions for letter {:?}", alphabet.char_of(missing as u8)),
        });
    }

    let output_obj = w.object(w.field(top, "output", "")?, "/output")?;
    let mut output = vec![usize::MAX; n];
    for (key, val) in output_obj {
        let q = lookup_state(key, &format!("/output/{key}"))?;
        let s = w.string(val, &format!("/output/{key}"))?;
        output[q] = parse_output_value(&variety, s, &format!("/output/{key}"))?;
    }
    if let Some(missing) = output.iter().position(|&x| x == usize::MAX) {
        return Err(Error::Schema {
            pointer: "/output".into(),
            message: format!("missing output for state {:?}", state_values[missing]),
        });
    }

    let automaton = DAutomaton {
        variety,
        alphabet,
        states: FiniteDObject::new(n, ops),
        delta,
        initial,
        output,
    };
    let violations = validate_automaton(&automaton);
    if !violations.is_empty() {
        return Err(Error::InvalidAutomaton(violations));
    }
    Ok(automaton)
}

pub fn parse_automaton_str(text: &str) -> Result<DAutomaton, Error> {
    let value: Value = serde_json::from_str(text)?;
    parse_automaton_value(&value)
}

pub fn parse_automaton_file(path: &Path) -> Result<DAutomaton, Error> {
    parse_automaton_str(&std::fs::read_to_string(path)?)
}

/// Output format of monoid rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonoidFormat {
    Table,
    Json,
}

/// Deterministic rendering of a recognizing pair: elements in canonical name
/// order, the generators, the output values, the full multiplication table
/// and the law-check summary.
pub fn emit_monoid(pair: &RecognizingPair, format: MonoidFormat, alphabet: &Alphabet) -> String {
    let m = &pair.monoid;
    let names: Vec<String> = m.names.iter().map(|x| format!("[{}]", x.render(alphabet))).collect();
    let laws = monoid_validate(m, &pair.variety);
    match format {
        MonoidFormat::Table => {
            let mut out = String::new();
            out.push_str(&format!("elements ({}): {}\n", m.size(), names.join(" ")));
            out.push_str(&format!("unit: {}\n", names[m.unit]));
            let gens: Vec<String> = pair
                .e_on_letters
                .iter()
                .enumerate()
                .map(|(l, &g)| format!("{} -> {}", alphabet.char_of(l as u8), names[g]))
                .collect();
            out.push_str(&format!("generators: {}\n", gens.join(", ")));
            let fs: Vec<String> = (0..m.size())
                .map(|x| {
                    format!("{}={}", names[x], output_value_string(&pair.variety, pair.f[x]))
                })
                .collect();
            out.push_str(&format!("f: {}\n", fs.join(" ")));
            let width = names.iter().map(|s| s.len()).max().unwrap_or(1) + 1;
            out.push_str("mult:\n");
            out.push_str(&format!("{:width$}", ""));
            for name in &names {
                out.push_str(&format!("{name:width$}"));
            }
            out.push('\n');
            for x in 0..m.size() {
                out.push_str(&format!("{:width$}", names[x]));
                for y in 0..m.size() {
                    out.push_str(&format!("{:width$}", names[m.mult(x, y)]));
                }
                out.push('\n');
            }
            if laws.is_empty() {
                out.push_str("laws: ok\n");
            } else {
                out.push_str(&format!(
                    "laws: {} violation(s): {}\n",
                    laws.len(),
                    laws.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
                ));
            }
            out
        }
        MonoidFormat::Json => {
            let table: Vec<Vec<&String>> = (0..m.size())
                .map(|x| (0..m.size()).map(|y| &names[m.mult(x, y)]).collect())
                .collect();
            let gens: BTreeMap<String, &String> = pair
                .e_on_letters
                .iter()
                .enumerate()
                .map(|(l, &g)| (alphabet.char_of(l as u8).to_string(), &names[g]))
                .collect();
            let f: Vec<String> =
                (0..m.size()).map(|x| output_value_string(&pair.variety, pair.f[x])).collect();
            let value = json!({
                "variety": pair.variety.tag().short_name(),
                "elements": names,
                "unit": names[m.unit],
                "generators": gens,
                "f": f,
                "mult": table,
                "laws": {
                    "ok": laws.is_empty(),
                    "violations": laws.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                },
            });
            serde_json::to_string_pretty(&value).expect("monoid serialization")
        }
    }
}
