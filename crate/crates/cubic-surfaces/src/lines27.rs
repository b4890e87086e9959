//! Abstract combinatorics of the 27 lines on a smooth cubic surface.
//!
//! Labels follow the classical scheme E1..E6, G1..G6, F12..F56 with the
//! incidence rules: Ei meets Gj iff i != j; Ei or Gi meets Fhk iff
//! i in {h,k}; Fij meets Fhk iff {i,j} and {h,k} are disjoint.  Incident
//! pairs close into 45 tritangent triples, ordered L-sets are quintuples
//! with the fixed meeting pattern, and the permutations of the labels
//! preserving incidence form the Weyl group E6 of order 51,840, enumerated
//! here explicitly from the extended L-sets.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// One of the 27 line labels, stored as 0..=26 in the fixed numbering
/// E1..E6 = 0..5, G1..G6 = 6..11, F12..F56 = 12..26 (so the conventional
/// 1-based index is `0-based + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub u8);

/// The (i, j) pairs behind F12..F56, in numbering order.
pub const F_PAIRS: [(u8, u8); 15] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 6),
    (3, 4),
    (3, 5),
    (3, 6),
    (4, 5),
    (4, 6),
    (5, 6),
];

impl Label {
    pub fn e(i: u8) -> Label {
        assert!((1..=6).contains(&i));
        Label(i - 1)
    }

    pub fn g(i: u8) -> Label {
        assert!((1..=6).contains(&i));
        Label(5 + i)
    }

    pub fn f(i: u8, j: u8) -> Label {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let k = F_PAIRS.iter().position(|&p| p == (i, j)).expect("valid pair");
        Label(12 + k as u8)
    }

    pub fn all() -> impl Iterator<Item = Label> {
        (0..27).map(Label)
    }

    /// 1-based index in the conventional numbering.
    pub fn index(self) -> u8 {
        self.0 + 1
    }

    pub fn from_index(i: u8) -> Label {
        assert!((1..=27).contains(&i));
        Label(i - 1)
    }

    pub fn name(self) -> String {
        match self.0 {
            0..=5 => format!("E{}", self.0 + 1),
            6..=11 => format!("G{}", self.0 - 5),
            _ => {
                let (i, j) = F_PAIRS[self.0 as usize - 12];
                format!("F{}{}", i, j)
            }
        }
    }

    pub fn from_name(s: &str) -> Option<Label> {
        let bytes = s.as_bytes();
        match bytes.first()? {
            b'E' | b'e' if s.len() == 2 => {
                let i = (bytes[1] as char).to_digit(10)? as u8;
                (1..=6).contains(&i).then(|| Label::e(i))
            }
            b'G' | b'g' if s.len() == 2 => {
                let i = (bytes[1] as char).to_digit(10)? as u8;
                (1..=6).contains(&i).then(|| Label::g(i))
            }
            b'F' | b'f' if s.len() == 3 => {
                let i = (bytes[1] as char).to_digit(10)? as u8;
                let j = (bytes[2] as char).to_digit(10)? as u8;
                (i < j && (1..=6).contains(&i) && (1..=6).contains(&j)).then(|| Label::f(i, j))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Incidence of two distinct labels (a label is not incident to itself).
pub fn incidence(a: Label, b: Label) -> bool {
    if a == b {
        return false;
    }
    let kind = |l: Label| -> (u8, u8, u8) {
        match l.0 {
            0..=5 => (0, l.0 + 1, 0),
            6..=11 => (1, l.0 - 5, 0),
            _ => {
                let (i, j) = F_PAIRS[l.0 as usize - 12];
                (2, i, j)
            }
        }
    };
    let (ka, i1, j1) = kind(a);
    let (kb, i2, j2) = kind(b);
    match (ka, kb) {
        (0, 0) | (1, 1) => false,
        (0, 1) | (1, 0) => i1 != i2,
        (0, 2) | (1, 2) => i1 == i2 || i1 == j2,
        (2, 0) | (2, 1) => i2 == i1 || i2 == j1,
        (2, 2) => i1 != i2 && i1 != j2 && j1 != i2 && j1 != j2,
        _ => unreachable!(),
    }
}

/// The 45 tritangent triples in the conventional order: ids 1..=30 are the
/// (Ei, Gj, Fij) planes grouped by i, ids 31..=45 the (F1k, Fhl, Fmn)
/// partitions of {1..6} into three pairs, keyed by the pair containing 1.
pub fn triples() -> &'static Vec<[Label; 3]> {
    static TRIPLES: OnceLock<Vec<[Label; 3]>> = OnceLock::new();
    TRIPLES.get_or_init(|| {
        let mut out = Vec::with_capacity(45);
        for i in 1..=6u8 {
            for j in 1..=6u8 {
                if i == j {
                    continue;
                }
                out.push([Label::e(i), Label::g(j), Label::f(i, j)]);
            }
        }
        for k in 2..=6u8 {
            let rest: Vec<u8> = (2..=6).filter(|&m| m != k).collect();
            for idx in 1..=3usize {
                let h = rest[0];
                let l = rest[idx];
                let others: Vec<u8> = rest[1..]
                    .iter()
                    .copied()
                    .filter(|&m| m != l)
                    .collect();
                out.push([
                    Label::f(1, k),
                    Label::f(h, l),
                    Label::f(others[0], others[1]),
                ]);
            }
        }
        assert_eq!(out.len(), 45);
        out
    })
}

/// Triple id (1..=45) containing both labels, when they are incident.
pub fn triple_id_of_pair(a: Label, b: Label) -> Option<u8> {
    static PAIR_TO_ID: OnceLock<HashMap<(u8, u8), u8>> = OnceLock::new();
    let map = PAIR_TO_ID.get_or_init(|| {
        let mut m = HashMap::new();
        for (k, t) in triples().iter().enumerate() {
            for x in 0..3 {
                for y in 0..3 {
                    if x != y {
                        m.insert((t[x].0, t[y].0), k as u8 + 1);
                    }
                }
            }
        }
        m
    });
    map.get(&(a.0, b.0)).copied()
}

pub fn triple_lines(id: u8) -> [Label; 3] {
    triples()[id as usize - 1]
}

/// The third label of the unique tritangent triple through two incident
/// labels.
pub fn res_label(a: Label, b: Label) -> Result<Label> {
    let id = triple_id_of_pair(a, b).ok_or(Error::NotIncident)?;
    let t = triple_lines(id);
    Ok(*t.iter().find(|&&l| l != a && l != b).unwrap())
}

fn res_unchecked(a: Label, b: Label) -> Label {
    res_label(a, b).expect("incident labels")
}

// ---------------------------------------------------------------------------
// L-sets
// ---------------------------------------------------------------------------

/// The basic L-set (E1, G4, E2, G3, E3).
pub fn basic_lset() -> [Label; 5] {
    [
        Label::e(1),
        Label::g(4),
        Label::e(2),
        Label::g(3),
        Label::e(3),
    ]
}

/// The basic extended L-set (E1, G4, E2, G3, E3, E5).
pub fn basic_extended() -> [Label; 6] {
    let b = basic_lset();
    [b[0], b[1], b[2], b[3], b[4], Label::e(5)]
}

/// The required incidence pattern of Definition-style L-sets: l2 meets
/// l1, l3, l5; l4 meets l1, l3; no other pair meets.
pub fn is_lset_labels(l: &[Label; 5]) -> bool {
    let mut seen = BTreeSet::new();
    for &x in l.iter() {
        if !seen.insert(x) {
            return false;
        }
    }
    let inc = |i: usize, j: usize| incidence(l[i], l[j]);
    inc(0, 1)
        && inc(1, 2)
        && inc(1, 4)
        && inc(0, 3)
        && inc(2, 3)
        && !inc(0, 2)
        && !inc(0, 4)
        && !inc(2, 4)
        && !inc(3, 4)
        && !inc(1, 3)
}

/// Extended pattern: a valid L-set plus a sixth label meeting exactly l2
/// and l4.
pub fn is_extended_labels(l: &[Label; 6]) -> bool {
    let five: [Label; 5] = [l[0], l[1], l[2], l[3], l[4]];
    if !is_lset_labels(&five) {
        return false;
    }
    if five.contains(&l[5]) {
        return false;
    }
    incidence(l[5], l[1])
        && incidence(l[5], l[3])
        && !incidence(l[5], l[0])
        && !incidence(l[5], l[2])
        && !incidence(l[5], l[4])
}

/// All 25,920 L-sets, in lexicographic order of label indices.
pub fn enumerate_lsets() -> &'static Vec<[Label; 5]> {
    static LSETS: OnceLock<Vec<[Label; 5]>> = OnceLock::new();
    LSETS.get_or_init(|| {
        let mut out = vec![];
        for a in 0..27u8 {
            for b in 0..27u8 {
                if !incidence(Label(a), Label(b)) {
                    continue;
                }
                for c in 0..27u8 {
                    if c == a
                        || !incidence(Label(b), Label(c))
                        || incidence(Label(a), Label(c))
                    {
                        continue;
                    }
                    for d in 0..27u8 {
                        if d == b
                            || !incidence(Label(a), Label(d))
                            || !incidence(Label(c), Label(d))
                            || incidence(Label(b), Label(d))
                        {
                            continue;
                        }
                        for e in 0..27u8 {
                            if e == a
                                || e == c
                                || e == d
                                || !incidence(Label(b), Label(e))
                                || incidence(Label(a), Label(e))
                                || incidence(Label(c), Label(e))
                                || incidence(Label(d), Label(e))
                            {
                                continue;
                            }
                            out.push([Label(a), Label(b), Label(c), Label(d), Label(e)]);
                        }
                    }
                }
            }
        }
        out
    })
}

/// The two labels completing an L-set to an extended L-set: the common
/// transversals of l2 and l4 other than l1, l3 and res(l2, l5), sorted.
pub fn extend_lset(l: &[Label; 5]) -> [Label; 2] {
    let r = res_unchecked(l[1], l[4]);
    let mut found = vec![];
    for cand in Label::all() {
        if incidence(cand, l[1])
            && incidence(cand, l[3])
            && cand != l[0]
            && cand != l[2]
            && cand != r
        {
            found.push(cand);
        }
    }
    assert_eq!(found.len(), 2, "an L-set has exactly two extensions");
    [found[0], found[1]]
}

// ---------------------------------------------------------------------------
// the canonical residuation program
// ---------------------------------------------------------------------------

/// Cell recipes shared by the abstract and the geometric construction:
/// cells 0..6 are the input lines l1..l6, later cells are residues of two
/// earlier cells.  `SLOT_CELLS` lists, in a fixed order, the 27 cells that
/// carry the 27 lines.
pub const RES_CELLS: [(usize, usize); 24] = [
    (1, 4),   //  6: r3 = res(l2, l5)
    (0, 1),   //  7: res(r1, s1)
    (2, 3),   //  8: res(r2, s2)
    (7, 8),   //  9: t
    (6, 3),   // 10: res(r3, s2)
    (5, 9),   // 11: res(r4, t)
    (10, 11), // 12: u
    (1, 12),  // 13: r5 = res(s1, u)
    (2, 1),   // 14: res(r2, s1)
    (6, 1),   // 15: res(r3, s1)
    (5, 1),   // 16: res(r4, s1)
    (13, 1),  // 17: res(r5, s1)
    (0, 3),   // 18: res(r1, s2)
    (5, 3),   // 19: res(r4, s2)
    (13, 3),  // 20: res(r5, s2)
    (7, 10),  // 21: double (1,3)
    (7, 19),  // 22: double (1,4)
    (7, 20),  // 23: double (1,5)
    (14, 10), // 24: double (2,3)
    (14, 19), // 25: double (2,4)
    (14, 20), // 26: double (2,5)
    (15, 19), // 27: double (3,4)
    (15, 20), // 28: double (3,5)
    (16, 20), // 29: double (4,5)
];

/// Cells holding the 27 lines: s1, s2, r1..r5, res(r_i, s1), res(r_i, s2),
/// then the ten doubles res(res(r_i, s1), res(r_j, s2)) for i < j.
pub const SLOT_CELLS: [usize; 27] = [
    1, 3, 0, 2, 6, 5, 13, // s1, s2, r1, r2, r3, r4, r5
    7, 14, 15, 16, 17, // res(r_i, s1)
    18, 8, 10, 19, 20, // res(r_i, s2)
    9, 21, 22, 23, 24, 25, 26, 27, 28, 29, // doubles
];

/// Runs the residuation program on an extended label tuple; returns all 30
/// cells.  Fails when some recipe hits a non-incident pair, which signals
/// an invalid extended L-set.
fn run_program_labels(ext: &[Label; 6]) -> Result<Vec<Label>> {
    let mut cells: Vec<Label> = ext.to_vec();
    for &(i, j) in RES_CELLS.iter() {
        let r = res_label(cells[i], cells[j]).map_err(|_| Error::InvalidExtendedLSet)?;
        cells.push(r);
    }
    Ok(cells)
}

/// Labels occupying the 27 slots when the program runs on the basic
/// extended L-set; this is the canonical labelling every construction
/// refers to.
pub fn slot_labels() -> &'static [Label; 27] {
    static SLOTS: OnceLock<[Label; 27]> = OnceLock::new();
    SLOTS.get_or_init(|| {
        let cells = run_program_labels(&basic_extended()).expect("basic extended L-set");
        let mut out = [Label(0); 27];
        for (k, &cell) in SLOT_CELLS.iter().enumerate() {
            out[k] = cells[cell];
        }
        let distinct: BTreeSet<Label> = out.iter().copied().collect();
        assert_eq!(distinct.len(), 27);
        out
    })
}

// ---------------------------------------------------------------------------
// permutations
// ---------------------------------------------------------------------------

/// A permutation of the 27 labels; `images[i]` is the image of Label(i).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(pub [u8; 27]);

impl Perm {
    pub fn identity() -> Perm {
        let mut p = [0u8; 27];
        for (i, v) in p.iter_mut().enumerate() {
            *v = i as u8;
        }
        Perm(p)
    }

    pub fn apply(&self, l: Label) -> Label {
        Label(self.0[l.0 as usize])
    }

    /// self ∘ other: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut p = [0u8; 27];
        for i in 0..27 {
            p[i] = self.0[other.0[i] as usize];
        }
        Perm(p)
    }

    pub fn inverse(&self) -> Perm {
        let mut p = [0u8; 27];
        for i in 0..27 {
            p[self.0[i] as usize] = i as u8;
        }
        Perm(p)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i as u8 == v)
    }

    pub fn order(&self) -> usize {
        let mut acc = *self;
        let mut n = 1;
        while !acc.is_identity() {
            acc = acc.compose(self);
            n += 1;
        }
        n
    }

    pub fn preserves_incidence(&self) -> bool {
        for a in 0..27u8 {
            for b in (a + 1)..27 {
                if incidence(Label(a), Label(b))
                    != incidence(self.apply(Label(a)), self.apply(Label(b)))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Cycle lengths >= 2, sorted.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = [false; 27];
        let mut out = vec![];
        for i in 0..27usize {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j] as usize;
                len += 1;
            }
            if len >= 2 {
                out.push(len);
            }
        }
        out.sort_unstable();
        out
    }

    /// Disjoint-cycle notation on the 1-based indices, fixed points
    /// omitted, cycles sorted by least element, e.g. "(2,19)(3,22)".
    pub fn cycle_notation(&self) -> String {
        let mut seen = [false; 27];
        let mut s = String::new();
        for i in 0..27usize {
            if seen[i] || self.0[i] as usize == i {
                seen[i] = true;
                continue;
            }
            let mut cycle = vec![];
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.0[j] as usize;
            }
            s.push('(');
            s.push_str(
                &cycle
                    .iter()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("id");
        }
        s
    }

    /// Parses disjoint cycles of 1-based indices: "(2,19)(3,22)" or "id".
    pub fn from_cycles(src: &str) -> Result<Perm> {
        let mut p = Perm::identity();
        let s = src.trim();
        if s == "id" || s.is_empty() {
            return Ok(p);
        }
        for part in s.split(')') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let inner = part
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("bad cycle `{}`", part)))?;
            let items: Vec<usize> = inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad index `{}`", t)))
                })
                .collect::<Result<_>>()?;
            for w in &items {
                if !(1..=27).contains(w) {
                    return Err(Error::Parse(format!("index {} out of range", w)));
                }
            }
            for k in 0..items.len() {
                let from = items[k] - 1;
                let to = items[(k + 1) % items.len()] - 1;
                p.0[from] = to as u8;
            }
        }
        Ok(p)
    }

    /// The induced permutation of the 45 triple ids.
    pub fn triple_action(&self) -> [u8; 45] {
        let mut out = [0u8; 45];
        for id in 1..=45u8 {
            let t = triple_lines(id);
            let img = self.apply(t[0]);
            let img2 = self.apply(t[1]);
            out[id as usize - 1] =
                triple_id_of_pair(img, img2).expect("incidence-preserving permutation");
        }
        out
    }
}

/// The unique incidence-preserving permutation sending the basic extended
/// L-set to the target, computed by running the residuation program on both
/// and matching slots.
pub fn perm_from_extended(target: &[Label; 6]) -> Result<Perm> {
    if !is_extended_labels(target) {
        return Err(Error::InvalidExtendedLSet);
    }
    let cells = run_program_labels(target)?;
    let base = slot_labels();
    let mut p = [255u8; 27];
    for (k, &cell) in SLOT_CELLS.iter().enumerate() {
        p[base[k].0 as usize] = cells[cell].0;
    }
    let mut seen = [false; 27];
    for &v in &p {
        if v == 255 || seen[v as usize] {
            return Err(Error::InvalidExtendedLSet);
        }
        seen[v as usize] = true;
    }
    Ok(Perm(p))
}

/// The image (π(E1), π(G4), π(E2), π(G3), π(E3)) of the basic L-set.
pub fn lset_image(p: &Perm) -> [Label; 5] {
    let b = basic_lset();
    [
        p.apply(b[0]),
        p.apply(b[1]),
        p.apply(b[2]),
        p.apply(b[3]),
        p.apply(b[4]),
    ]
}

// ---------------------------------------------------------------------------
// the full group
// ---------------------------------------------------------------------------

/// The 51,840 incidence-preserving permutations, sorted; built once from
/// the 25,920 L-sets and their two extensions each.
pub struct E6Group {
    perms: Vec<Perm>,
}

impl E6Group {
    pub fn elements(&self) -> &[Perm] {
        &self.perms
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.perms.binary_search(p).is_ok()
    }

    /// Checks that the set is a group: generate the closure of a generating
    /// subset found greedily inside the set and compare.
    pub fn verify_group(&self) -> bool {
        for p in &self.perms {
            if !self.contains(&p.inverse()) {
                return false;
            }
        }
        let mut gens: Vec<Perm> = vec![];
        let mut closure: HashSet<Perm> = HashSet::new();
        closure.insert(Perm::identity());
        for p in &self.perms {
            if closure.contains(p) {
                continue;
            }
            gens.push(*p);
            // BFS closure of the enlarged generating set
            let mut frontier: Vec<Perm> = closure.iter().copied().collect();
            while let Some(q) = frontier.pop() {
                for g in &gens {
                    let r = g.compose(&q);
                    if closure.insert(r) {
                        frontier.push(r);
                    }
                }
            }
            if closure.len() == self.perms.len() {
                break;
            }
        }
        closure.len() == self.perms.len() && self.perms.iter().all(|p| closure.contains(p))
    }
}

pub fn e6() -> &'static E6Group {
    static GROUP: OnceLock<E6Group> = OnceLock::new();
    GROUP.get_or_init(|| {
        let mut perms = Vec::with_capacity(51_840);
        for l in enumerate_lsets() {
            for six in extend_lset(l) {
                let ext = [l[0], l[1], l[2], l[3], l[4], six];
                perms.push(perm_from_extended(&ext).expect("valid extension"));
            }
        }
        perms.sort_unstable();
        perms.dedup();
        E6Group { perms }
    })
}

/// All elements of E6 mapping the designated set of triple ids onto itself,
/// with a small generating set found greedily.
pub struct AdmissibleSubgroup {
    pub elements: Vec<Perm>,
    pub generators: Vec<Perm>,
}

pub fn admissible_subgroup(eckardt_ids: &[u8]) -> AdmissibleSubgroup {
    let ids: BTreeSet<u8> = eckardt_ids.iter().copied().collect();
    let keep = |p: &Perm| -> bool {
        if ids.is_empty() {
            return true;
        }
        let act = p.triple_action();
        ids.iter().all(|&id| ids.contains(&act[id as usize - 1]))
    };
    let elements: Vec<Perm> = e6().elements().iter().filter(|p| keep(p)).copied().collect();
    let generators = generating_set(&elements);
    AdmissibleSubgroup {
        elements,
        generators,
    }
}

/// Greedy generating set of a permutation group given by its full element
/// list.
pub fn generating_set(elements: &[Perm]) -> Vec<Perm> {
    let mut gens: Vec<Perm> = vec![];
    let mut closure: HashSet<Perm> = HashSet::new();
    closure.insert(Perm::identity());
    for p in elements {
        if closure.contains(p) {
            continue;
        }
        gens.push(*p);
        let mut frontier: Vec<Perm> = closure.iter().copied().collect();
        while let Some(q) = frontier.pop() {
            for g in &gens {
                for r in [g.compose(&q), q.compose(g)] {
                    if closure.insert(r) {
                        frontier.push(r);
                    }
                }
            }
        }
        if closure.len() == elements.len() {
            break;
        }
    }
    gens
}

/// BFS closure of a set of permutations.
pub fn generated_group(gens: &[Perm]) -> Vec<Perm> {
    let mut closure: HashSet<Perm> = HashSet::new();
    closure.insert(Perm::identity());
    let mut frontier: Vec<Perm> = vec![Perm::identity()];
    while let Some(q) = frontier.pop() {
        for g in gens {
            let r = g.compose(&q);
            if closure.insert(r) {
                frontier.push(r);
            }
        }
    }
    let mut out: Vec<Perm> = closure.into_iter().collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incidence_rules() {
        assert!(incidence(Label::e(1), Label::g(4)));
        assert!(!incidence(Label::e(1), Label::g(1)));
        assert!(incidence(Label::e(1), Label::f(1, 4)));
        assert!(!incidence(Label::e(1), Label::f(2, 3)));
        assert!(incidence(Label::f(1, 4), Label::f(2, 3)));
        assert!(!incidence(Label::f(1, 4), Label::f(4, 5)));
    }

    #[test]
    fn graph_is_ten_regular() {
        for a in Label::all() {
            let deg = Label::all().filter(|&b| incidence(a, b)).count();
            assert_eq!(deg, 10, "degree of {}", a);
        }
    }

    #[test]
    fn triangles_are_the_45_triples() {
        // count triangles in the incidence graph and compare the vertex sets
        let tri: BTreeSet<[u8; 3]> = triples()
            .iter()
            .map(|t| {
                let mut v = [t[0].0, t[1].0, t[2].0];
                v.sort_unstable();
                v
            })
            .collect();
        assert_eq!(tri.len(), 45);
        let mut count = 0;
        for a in 0..27u8 {
            for b in (a + 1)..27 {
                if !incidence(Label(a), Label(b)) {
                    continue;
                }
                for c in (b + 1)..27 {
                    if incidence(Label(a), Label(c)) && incidence(Label(b), Label(c)) {
                        count += 1;
                        assert!(tri.contains(&[a, b, c]));
                    }
                }
            }
        }
        assert_eq!(count, 45);
    }

    #[test]
    fn residue_examples() {
        assert_eq!(res_label(Label::e(1), Label::g(4)).unwrap(), Label::f(1, 4));
        assert_eq!(
            res_label(Label::f(1, 4), Label::f(2, 3)).unwrap(),
            Label::f(5, 6)
        );
        assert_eq!(
            res_label(Label::e(1), Label::g(1)).unwrap_err(),
            Error::NotIncident
        );
        // res(a, res(a, b)) = b
        for a in Label::all() {
            for b in Label::all() {
                if incidence(a, b) {
                    let r = res_label(a, b).unwrap();
                    assert_eq!(res_label(a, r).unwrap(), b);
                }
            }
        }
    }

    #[test]
    fn triple_table_spot_rows() {
        assert_eq!(triple_lines(3), [Label::e(1), Label::g(4), Label::f(1, 4)]);
        assert_eq!(
            triple_lines(37),
            [Label::f(1, 4), Label::f(2, 3), Label::f(5, 6)]
        );
        assert_eq!(
            triple_lines(45),
            [Label::f(1, 6), Label::f(2, 5), Label::f(3, 4)]
        );
        assert_eq!(triple_id_of_pair(Label::e(2), Label::g(4)), Some(8));
        // every incident pair lies in exactly one triple
        for a in Label::all() {
            for b in Label::all() {
                assert_eq!(
                    triple_id_of_pair(a, b).is_some(),
                    incidence(a, b),
                    "{} {}",
                    a,
                    b
                );
            }
        }
    }

    #[test]
    fn lset_census() {
        let lsets = enumerate_lsets();
        assert_eq!(lsets.len(), 25_920);
        assert!(lsets.contains(&basic_lset()));
        for l in lsets.iter().step_by(997) {
            assert!(is_lset_labels(l));
        }
        // moving l5 into the l4 slot breaks the pattern (l4 must not meet l2)
        let b = basic_lset();
        assert!(!is_lset_labels(&[b[0], b[1], b[2], b[4], b[3]]));
        let same = [b[0]; 5];
        assert!(!is_lset_labels(&same));
    }

    #[test]
    fn extensions_of_basic_lset() {
        let ext = extend_lset(&basic_lset());
        assert_eq!(ext, [Label::e(5), Label::e(6)]);
        for six in ext {
            let b = basic_lset();
            assert!(is_extended_labels(&[b[0], b[1], b[2], b[3], b[4], six]));
        }
    }

    #[test]
    fn residuation_program_slots() {
        let cells = run_program_labels(&basic_extended()).unwrap();
        // r5, t, u from the constructive scheme
        assert_eq!(cells[13], Label::e(6)); // r5
        assert_eq!(cells[9], Label::f(5, 6)); // t
        assert_eq!(cells[12], Label::f(4, 6)); // u
        let slots = slot_labels();
        let distinct: BTreeSet<Label> = slots.iter().copied().collect();
        assert_eq!(distinct.len(), 27);
    }

    #[test]
    fn identity_from_basic_extended() {
        let p = perm_from_extended(&basic_extended()).unwrap();
        assert!(p.is_identity());
    }

    #[test]
    fn e6_census_and_closure() {
        let g = e6();
        assert_eq!(g.order(), 51_840);
        assert!(g.verify_group());
        for p in g.elements().iter().step_by(1999) {
            assert!(p.preserves_incidence());
        }
    }

    #[test]
    fn admissible_orders() {
        assert_eq!(admissible_subgroup(&[]).elements.len(), 51_840);
        assert_eq!(admissible_subgroup(&[3]).elements.len(), 1_152);
        let a6 = admissible_subgroup(&[3, 6, 7, 13, 17, 34]);
        assert_eq!(a6.elements.len(), 96);
        let images: BTreeSet<[Label; 5]> = a6.elements.iter().map(lset_image).collect();
        assert_eq!(images.len(), 48);
    }

    #[test]
    fn cycle_notation_roundtrip() {
        let src = "(2,19)(3,22)(4,7)(5,25)(6,26)(8,13)(9,14)(11,16)(12,17)(18,27)(20,24)(21,23)";
        let p = Perm::from_cycles(src).unwrap();
        assert_eq!(p.cycle_notation(), src);
        assert_eq!(p.order(), 2);
        assert_eq!(p.cycle_type(), vec![2; 12]);
        assert!(p.preserves_incidence());
    }
}
