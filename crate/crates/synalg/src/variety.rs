//! The five supported commutative varieties and their finite objects.
//!
//! A [`FiniteDObject`] is a finite carrier `0..n` together with the operation
//! tables of one variety: nothing (sets), a basepoint (pointed sets), an
//! involution table, a join table with bottom (semilattices with zero), or
//! addition and scalar multiplication over a prime field. All laws are
//! checkable by exhaustive table scans at this scale, and validators report
//! violations as data.

use crate::error::{Error, Violation};

/// Which commutative variety is in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarietyTag {
    /// Plain sets: classical deterministic automata and monoids.
    Set,
    /// Pointed sets: partial automata and monoids with zero.
    Pointed,
    /// Involution algebras: automata with complementary states.
    Involution,
    /// Join-semilattices with zero: idempotent semirings.
    Semilattice,
    /// Vector spaces over GF(p), p prime: weighted automata and
    /// associative algebras.
    Vect(u32),
}

impl VarietyTag {
    pub fn short_name(&self) -> &'static str {
        match self {
            VarietyTag::Set => "set",
            VarietyTag::Pointed => "pointed",
            VarietyTag::Involution => "involution",
            VarietyTag::Semilattice => "jsl",
            VarietyTag::Vect(_) => "vect",
        }
    }
}

impl std::fmt::Display for VarietyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VarietyTag::Vect(p) => write!(f, "vect({p})"),
            other => f.write_str(other.short_name()),
        }
    }
}

const MAX_PRIME: u32 = 31;

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).all(|d| !p.is_multiple_of(d))
}

/// A variety together with its fixed output object `Y`.
#[derive(Debug, Clone)]
pub struct VarietySpec {
    tag: VarietyTag,
    output: FiniteDObject,
}

impl PartialEq for VarietySpec {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag
    }
}
impl Eq for VarietySpec {}

impl std::hash::Hash for VarietySpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.tag.hash(state);
    }
}

impl VarietySpec {
    /// Builds the spec and its canonical output object. Rejects `Vect(p)`
    /// unless `p` is prime and at most 31.
    pub fn new(tag: VarietyTag) -> Result<Self, Error> {
        if let VarietyTag::Vect(p) = tag {
            if !is_prime(p) || p > MAX_PRIME {
                return Err(Error::Config(format!(
                    "vect parameter {p} must be a prime <= {MAX_PRIME}"
                )));
            }
        }
        let output = match tag {
            VarietyTag::Set => FiniteDObject::set(2),
            VarietyTag::Pointed => FiniteDObject::pointed(2),
            VarietyTag::Involution => FiniteDObject::involution_pair(),
            VarietyTag::Semilattice => FiniteDObject::two_chain(),
            VarietyTag::Vect(p) => FiniteDObject::gfp_line(p),
        };
        Ok(VarietySpec { tag, output })
    }

    pub fn tag(&self) -> VarietyTag {
        self.tag
    }

    /// The fixed output object `Y` of this variety.
    pub fn output_object(&self) -> &FiniteDObject {
        &self.output
    }

    /// The accepting element of `Y` (`1` in every variety).
    pub fn accept(&self) -> usize {
        1
    }

    /// The rejecting element of `Y` (`0`, which is the basepoint for
    /// pointed sets and the scalar zero for `Vect`).
    pub fn reject(&self) -> usize {
        0
    }
}

/// Operation tables of a finite object, per variety.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DOps {
    Set,
    Pointed { basepoint: usize },
    Involution { inv: Vec<usize> },
    Semilattice { bottom: usize, join: Vec<Vec<usize>> },
    Vect { p: u32, zero: usize, add: Vec<Vec<usize>>, smul: Vec<Vec<usize>> },
}

impl DOps {
    fn tag(&self) -> VarietyTag {
        match self {
            DOps::Set => VarietyTag::Set,
            DOps::Pointed { .. } => VarietyTag::Pointed,
            DOps::Involution { .. } => VarietyTag::Involution,
            DOps::Semilattice { .. } => VarietyTag::Semilattice,
            DOps::Vect { p, .. } => VarietyTag::Vect(*p),
        }
    }
}

/// A finite object of the ambient variety: elements `0..size` plus the
/// operation tables of [`DOps`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteDObject {
    size: usize,
    ops: DOps,
}

impl FiniteDObject {
    pub fn new(size: usize, ops: DOps) -> Self {
        FiniteDObject { size, ops }
    }

    pub fn set(size: usize) -> Self {
        FiniteDObject { size, ops: DOps::Set }
    }

    /// Pointed set with the basepoint at element 0.
    pub fn pointed(size: usize) -> Self {
        FiniteDObject { size, ops: DOps::Pointed { basepoint: 0 } }
    }

    /// The two-element involution algebra with `~0 = 1`.
    pub fn involution_pair() -> Self {
        FiniteDObject { size: 2, ops: DOps::Involution { inv: vec![1, 0] } }
    }

    pub fn involution(size: usize, inv: Vec<usize>) -> Self {
        FiniteDObject { size, ops: DOps::Involution { inv } }
    }

    /// The two-chain `0 < 1` with join = max and bottom 0.
    pub fn two_chain() -> Self {
        FiniteDObject {
            size: 2,
            ops: DOps::Semilattice { bottom: 0, join: vec![vec![0, 1], vec![1, 1]] },
        }
    }

    pub fn semilattice(size: usize, bottom: usize, join: Vec<Vec<usize>>) -> Self {
        FiniteDObject { size, ops: DOps::Semilattice { bottom, join } }
    }

    /// The one-dimensional space over GF(p): elements are the scalars.
    pub fn gfp_line(p: u32) -> Self {
        let n = p as usize;
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let smul = (0..n).map(|s| (0..n).map(|a| (s * a) % n).collect()).collect();
        FiniteDObject { size: n, ops: DOps::Vect { p, zero: 0, add, smul } }
    }

    pub fn vect(p: u32, zero: usize, add: Vec<Vec<usize>>, smul: Vec<Vec<usize>>) -> Self {
        let size = add.len();
        FiniteDObject { size, ops: DOps::Vect { p, zero, add, smul } }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ops(&self) -> &DOps {
        &self.ops
    }

    pub fn tag(&self) -> VarietyTag {
        self.ops.tag()
    }

    /// The constants of the theory (basepoint / bottom / zero), if any.
    pub fn constants(&self) -> Vec<usize> {
        match &self.ops {
            DOps::Set | DOps::Involution { .. } => vec![],
            DOps::Pointed { basepoint } => vec![*basepoint],
            DOps::Semilattice { bottom, .. } => vec![*bottom],
            DOps::Vect { zero, .. } => vec![*zero],
        }
    }

    pub fn basepoint(&self) -> Option<usize> {
        match &self.ops {
            DOps::Pointed { basepoint } => Some(*basepoint),
            _ => None,
        }
    }

    pub fn involution_of(&self, x: usize) -> Option<usize> {
        match &self.ops {
            DOps::Involution { inv } => Some(inv[x]),
            _ => None,
        }
    }

    pub fn join_of(&self, x: usize, y: usize) -> Option<usize> {
        match &self.ops {
            DOps::Semilattice { join, .. } => Some(join[x][y]),
            _ => None,
        }
    }

    pub fn bottom(&self) -> Option<usize> {
        match &self.ops {
            DOps::Semilattice { bottom, .. } => Some(*bottom),
            _ => None,
        }
    }

    pub fn add_of(&self, x: usize, y: usize) -> Option<usize> {
        match &self.ops {
            DOps::Vect { add, .. } => Some(add[x][y]),
            _ => None,
        }
    }

    pub fn smul_of(&self, s: u32, x: usize) -> Option<usize> {
        match &self.ops {
            DOps::Vect { p, smul, .. } => Some(smul[(s % p) as usize][x]),
            _ => None,
        }
    }

    pub fn zero(&self) -> Option<usize> {
        match &self.ops {
            DOps::Vect { zero, .. } => Some(*zero),
            _ => None,
        }
    }

    fn in_range(&self, x: usize) -> Result<(), Error> {
        if x < self.size {
            Ok(())
        } else {
            Err(Error::UnknownElement { id: x, size: self.size })
        }
    }
}

/// Checks every equation of the variety on `obj` and returns the violations
/// found (empty means valid). Malformed tables (wrong arity, out-of-range
/// entries) are reported as violations too.
pub fn validate_object(obj: &FiniteDObject, v: &VarietySpec) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = obj.size;
    if obj.tag() != v.tag() {
        out.push(Violation::new(
            "variety tag mismatch",
            format!("object is {}, spec is {}", obj.tag(), v.tag()),
        ));
        return out;
    }
    let range_ok = |x: usize| x < n;
    match &obj.ops {
        DOps::Set => {}
        DOps::Pointed { basepoint } => {
            if !range_ok(*basepoint) {
                out.push(Violation::new("basepoint out of range", basepoint.to_string()));
            }
        }
        DOps::Involution { inv } => {
            if inv.len() != n {
                out.push(Violation::new("involution table arity", format!("{} != {n}", inv.len())));
                return out;
            }
            for x in 0..n {
                if !range_ok(inv[x]) {
                    out.push(Violation::new("involution entry out of range", format!("~{x}")));
                } else if inv[inv[x]] != x {
                    out.push(Violation::new("involution not self-inverse", format!("at {x}")));
                }
            }
        }
        DOps::Semilattice { bottom, join } => {
            if join.len() != n || join.iter().any(|row| row.len() != n) {
                out.push(Violation::new("join table arity", format!("{}x? != {n}x{n}", join.len())));
                return out;
            }
            if !range_ok(*bottom) {
                out.push(Violation::new("bottom out of range", bottom.to_string()));
                return out;
            }
            for x in 0..n {
                for y in 0..n {
                    if !range_ok(join[x][y]) {
                        out.push(Violation::new("join entry out of range", format!("{x} v {y}")));
                        return out;
                    }
                }
            }
            for x in 0..n {
                if join[x][x] != x {
                    out.push(Violation::new("join not idempotent", format!("at {x}")));
                }
                if join[*bottom][x] != x || join[x][*bottom] != x {
                    out.push(Violation::new("bottom not a unit for join", format!("at {x}")));
                }
                for y in 0..n {
                    if join[x][y] != join[y][x] {
                        out.push(Violation::new("join not commutative", format!("({x},{y})")));
                    }
                    for z in 0..n {
                        if join[join[x][y]][z] != join[x][join[y][z]] {
                            out.push(Violation::new("join not associative", format!("({x},{y},{z})")));
                        }
                    }
                }
            }
        }
        DOps::Vect { p, zero, add, smul } => {
            let p = *p;
            if !is_prime(p) || p > MAX_PRIME {
                out.push(Violation::new("p not a small prime", p.to_string()));
                return out;
            }
            if add.len() != n
                || add.iter().any(|row| row.len() != n)
                || smul.len() != p as usize
                || smul.iter().any(|row| row.len() != n)
            {
                out.push(Violation::new("module table arity", format!("carrier {n}, p {p}")));
                return out;
            }
            if add.iter().flatten().any(|&x| !range_ok(x)) || smul.iter().flatten().any(|&x| !range_ok(x)) {
                out.push(Violation::new("module entry out of range", String::new()));
                return out;
            }
            if !range_ok(*zero) {
                out.push(Violation::new("zero out of range", zero.to_string()));
                return out;
            }
            for x in 0..n {
                if add[*zero][x] != x {
                    out.push(Violation::new("zero not a unit for addition", format!("at {x}")));
                }
                if smul[1 % p as usize][x] != x {
                    out.push(Violation::new("1·x != x", format!("at {x}")));
                }
                if smul[0][x] != *zero {
                    out.push(Violation::new("0·x != 0", format!("at {x}")));
                }
                // additive inverse: (p-1)·x + x = 0
                if add[smul[(p - 1) as usize][x]][x] != *zero {
                    out.push(Violation::new("no additive inverse", format!("at {x}")));
                }
                for y in 0..n {
                    if add[x][y] != add[y][x] {
                        out.push(Violation::new("addition not commutative", format!("({x},{y})")));
                    }
                    for z in 0..n {
                        if add[add[x][y]][z] != add[x][add[y][z]] {
                            out.push(Violation::new("addition not associative", format!("({x},{y},{z})")));
                        }
                    }
                }
            }
            for s in 0..p as usize {
                for t in 0..p as usize {
                    for x in 0..n {
                        if smul[(s + t) % p as usize][x] != add[smul[s][x]][smul[t][x]] {
                            out.push(Violation::new("(r+s)x != rx+sx", format!("({s},{t},{x})")));
                        }
                        if smul[(s * t) % p as usize][x] != smul[s][smul[t][x]] {
                            out.push(Violation::new("(rs)x != r(sx)", format!("({s},{t},{x})")));
                        }
                    }
                }
                for x in 0..n {
                    for y in 0..n {
                        if smul[s][add[x][y]] != add[smul[s][x]][smul[s][y]] {
                            out.push(Violation::new("r(x+y) != rx+ry", format!("({s},{x},{y})")));
                        }
                    }
                }
            }
        }
    }
    out
}

/// True iff `map` (total on `a`'s elements) commutes with every operation
/// table of the variety. Out-of-range entries are input errors.
pub fn is_homomorphism(
    map: &[usize],
    a: &FiniteDObject,
    b: &FiniteDObject,
    v: &VarietySpec,
) -> Result<bool, Error> {
    if a.tag() != v.tag() || b.tag() != v.tag() {
        return Err(Error::VarietyMismatch {
            expected: v.tag().to_string(),
            got: format!("{} -> {}", a.tag(), b.tag()),
        });
    }
    if map.len() != a.size {
        return Err(Error::UnknownElement { id: map.len(), size: a.size });
    }
    for &y in map {
        b.in_range(y)?;
    }
    let ok = match (&a.ops, &b.ops) {
        (DOps::Set, DOps::Set) => true,
        (DOps::Pointed { basepoint: pa }, DOps::Pointed { basepoint: pb }) => map[*pa] == *pb,
        (DOps::Involution { inv: ia }, DOps::Involution { inv: ib }) => {
            (0..a.size).all(|x| map[ia[x]] == ib[map[x]])
        }
        (
            DOps::Semilattice { bottom: ba, join: ja },
            DOps::Semilattice { bottom: bb, join: jb },
        ) => {
            map[*ba] == *bb
                && (0..a.size).all(|x| (0..a.size).all(|y| map[ja[x][y]] == jb[map[x]][map[y]]))
        }
        (
            DOps::Vect { p: pa, zero: za, add: aa, smul: sa },
            DOps::Vect { p: pb, zero: zb, add: ab, smul: sb },
        ) => {
            pa == pb
                && map[*za] == *zb
                && (0..a.size).all(|x| (0..a.size).all(|y| map[aa[x][y]] == ab[map[x]][map[y]]))
                && (0..*pa as usize)
                    .all(|s| (0..a.size).all(|x| map[sa[s][x]] == sb[s][map[x]]))
        }
        _ => false,
    };
    Ok(ok)
}

/// The least subobject of `obj` containing `seeds`, closed under all variety
/// operations, with inherited tables. Elements of the result are renumbered
/// `0..k` in first-discovery order: constants of the theory first, then seeds
/// in the given order, then closure sweeps. Returns the object and the
/// inclusion map (new id -> old id).
pub fn generated_subalgebra(
    obj: &FiniteDObject,
    seeds: &[usize],
    v: &VarietySpec,
) -> Result<(FiniteDObject, Vec<usize>), Error> {
    if obj.tag() != v.tag() {
        return Err(Error::VarietyMismatch {
            expected: v.tag().to_string(),
            got: obj.tag().to_string(),
        });
    }
    for &s in seeds {
        obj.in_range(s)?;
    }
    let mut incl: Vec<usize> = Vec::new();
    let mut pos = vec![usize::MAX; obj.size];
    let push = |x: usize, incl: &mut Vec<usize>, pos: &mut Vec<usize>| {
        if pos[x] == usize::MAX {
            pos[x] = incl.len();
            incl.push(x);
        }
    };
    for c in obj.constants() {
        push(c, &mut incl, &mut pos);
    }
    for &s in seeds {
        push(s, &mut incl, &mut pos);
    }
    loop {
        let before = incl.len();
        let mut i = 0;
        while i < incl.len() {
            let x = incl[i];
            match &obj.ops {
                DOps::Set | DOps::Pointed { .. } => {}
                DOps::Involution { inv } => push(inv[x], &mut incl, &mut pos),
                DOps::Semilattice { join, .. } => {
                    let mut j = 0;
                    while j <= i {
                        push(join[x][incl[j]], &mut incl, &mut pos);
                        j += 1;
                    }
                }
                DOps::Vect { p, add, smul, .. } => {
                    for s in 0..*p as usize {
                        push(smul[s][x], &mut incl, &mut pos);
                    }
                    let mut j = 0;
                    while j <= i {
                        push(add[x][incl[j]], &mut incl, &mut pos);
                        j += 1;
                    }
                }
            }
            i += 1;
        }
        if incl.len() == before {
            break;
        }
    }
    let sub = restrict_ops(obj, &incl, &pos);
    Ok((sub, incl))
}

/// Restricts the operation tables of `obj` to the subset `incl` (which must
/// be closed under all operations), renumbering through `pos`.
pub(crate) fn restrict_to(obj: &FiniteDObject, incl: &[usize], pos: &[usize]) -> FiniteDObject {
    restrict_ops(obj, incl, pos)
}

fn restrict_ops(obj: &FiniteDObject, incl: &[usize], pos: &[usize]) -> FiniteDObject {
    let k = incl.len();
    let ops = match &obj.ops {
        DOps::Set => DOps::Set,
        DOps::Pointed { basepoint } => DOps::Pointed { basepoint: pos[*basepoint] },
        DOps::Involution { inv } => {
            DOps::Involution { inv: incl.iter().map(|&x| pos[inv[x]]).collect() }
        }
        DOps::Semilattice { bottom, join } => DOps::Semilattice {
            bottom: pos[*bottom],
            join: incl
                .iter()
                .map(|&x| incl.iter().map(|&y| pos[join[x][y]]).collect())
                .collect(),
        },
        DOps::Vect { p, zero, add, smul } => DOps::Vect {
            p: *p,
            zero: pos[*zero],
            add: incl
                .iter()
                .map(|&x| incl.iter().map(|&y| pos[add[x][y]]).collect())
                .collect(),
            smul: (0..*p as usize)
                .map(|s| incl.iter().map(|&x| pos[smul[s][x]]).collect())
                .collect(),
        },
    };
    FiniteDObject { size: k, ops }
}

/// A partition of the elements of a [`FiniteDObject`] into disjoint covering
/// blocks. Blocks are normalized: ordered by their least element, each block
/// sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition from an arbitrary block assignment (values need not
    /// be contiguous). The result is renumbered canonically.
    pub fn from_assignment(assignment: &[usize]) -> Self {
        let n = assignment.len();
        let mut first_of = std::collections::HashMap::new();
        let mut block_of = vec![0usize; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let id = *first_of.entry(assignment[x]).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            block_of[x] = id;
            blocks[id].push(x);
        }
        Partition { block_of, blocks }
    }

    pub fn discrete(n: usize) -> Self {
        Partition::from_assignment(&(0..n).collect::<Vec<_>>())
    }

    pub fn total(n: usize) -> Self {
        Partition::from_assignment(&vec![0; n])
    }

    /// Builds from explicit blocks; fails unless they exactly partition `0..n`.
    pub fn from_blocks(n: usize, raw: &[Vec<usize>]) -> Result<Self, Error> {
        let mut assignment = vec![usize::MAX; n];
        for (i, block) in raw.iter().enumerate() {
            for &x in block {
                if x >= n {
                    return Err(Error::UnknownElement { id: x, size: n });
                }
                if assignment[x] != usize::MAX {
                    return Err(Error::Config(format!("element {x} appears in two blocks")));
                }
                assignment[x] = i;
            }
        }
        if let Some(x) = assignment.iter().position(|&b| b == usize::MAX) {
            return Err(Error::Config(format!("element {x} not covered by any block")));
        }
        Ok(Partition::from_assignment(&assignment))
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn assignment(&self) -> &[usize] {
        &self.block_of
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.block_of.len()
    }

    /// Representative (least element) of each block.
    pub fn representatives(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }
}

/// Quotient of `obj` by `p`, provided `p` is a congruence (every operation
/// well-defined on blocks). Returns the quotient object and the projection
/// map (old id -> block id); the projection is a homomorphism by
/// construction. Block ids follow the normalized partition order, which puts
/// the basepoint block first for pointed objects.
pub fn quotient_by_partition(
    obj: &FiniteDObject,
    p: &Partition,
    v: &VarietySpec,
) -> Result<(FiniteDObject, Vec<usize>), Error> {
    if obj.tag() != v.tag() {
        return Err(Error::VarietyMismatch {
            expected: v.tag().to_string(),
            got: obj.tag().to_string(),
        });
    }
    if p.block_of.len() != obj.size {
        return Err(Error::Config(format!(
            "partition covers {} elements, object has {}",
            p.block_of.len(),
            obj.size
        )));
    }
    let k = p.len();
    let reps = p.representatives();
    let bl = |x: usize| p.block_of[x];
    let ops = match &obj.ops {
        DOps::Set => DOps::Set,
        DOps::Pointed { basepoint } => DOps::Pointed { basepoint: bl(*basepoint) },
        DOps::Involution { inv } => {
            let table: Vec<usize> = reps.iter().map(|&r| bl(inv[r])).collect();
            for x in 0..obj.size {
                if bl(inv[x]) != table[bl(x)] {
                    return Err(Error::NotACongruence {
                        op: "involution".into(),
                        witness: format!("~{} and ~{} land in different blocks", reps[bl(x)], x),
                    });
                }
            }
            DOps::Involution { inv: table }
        }
        DOps::Semilattice { bottom, join } => {
            let table: Vec<Vec<usize>> = reps
                .iter()
                .map(|&rx| reps.iter().map(|&ry| bl(join[rx][ry])).collect())
                .collect();
            for x in 0..obj.size {
                for y in 0..obj.size {
                    if bl(join[x][y]) != table[bl(x)][bl(y)] {
                        return Err(Error::NotACongruence {
                            op: "join".into(),
                            witness: format!("({x} v {y}) vs block representatives"),
                        });
                    }
                }
            }
            DOps::Semilattice { bottom: bl(*bottom), join: table }
        }
        DOps::Vect { p: pr, zero, add, smul } => {
            let addq: Vec<Vec<usize>> = reps
                .iter()
                .map(|&rx| reps.iter().map(|&ry| bl(add[rx][ry])).collect())
                .collect();
            let smulq: Vec<Vec<usize>> = (0..*pr as usize)
                .map(|s| reps.iter().map(|&rx| bl(smul[s][rx])).collect())
                .collect();
            for x in 0..obj.size {
                for y in 0..obj.size {
                    if bl(add[x][y]) != addq[bl(x)][bl(y)] {
                        return Err(Error::NotACongruence {
                            op: "addition".into(),
                            witness: format!("({x} + {y}) vs block representatives"),
                        });
                    }
                }
                for s in 0..*pr as usize {
                    if bl(smul[s][x]) != smulq[s][bl(x)] {
                        return Err(Error::NotACongruence {
                            op: "scalar multiplication".into(),
                            witness: format!("({s}·{x}) vs block representative"),
                        });
                    }
                }
            }
            DOps::Vect { p: *pr, zero: bl(*zero), add: addq, smul: smulq }
        }
    };
    Ok((FiniteDObject { size: k, ops }, p.block_of.clone()))
}
