//! Finite (bounded) posets over a dense bit-relation.
//!
//! Elements are indices into a name table; every relation row is a single
//! `u64` mask, so the representation is capped at 64 elements. All posets
//! are immutable after construction and revalidated against the order
//! axioms before they are handed out.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

pub type Elem = usize;

pub const MAX_ELEMENTS: usize = 64;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Iterate the set bits of a mask as element indices.
pub(crate) fn bits(mask: u64) -> impl Iterator<Item = Elem> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let x = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(x)
        }
    })
}

pub(crate) fn bit(x: Elem) -> u64 {
    1u64 << x
}

#[derive(Clone, Debug)]
pub struct Poset {
    id: u64,
    names: Vec<String>,
    /// up[x] = { y | x <= y }, including x itself.
    up: Vec<u64>,
    /// down[y] = { x | x <= y }, including y itself.
    down: Vec<u64>,
    /// covers[x] = { y | y covers x } (transitive reduction of <).
    covers: Vec<u64>,
}

impl Poset {
    /// Build a poset from a cover list. `leq` is the reflexive-transitive
    /// closure of the covers; a cycle in the input is rejected.
    pub fn from_covers<S: AsRef<str>>(names: &[S], covers: &[(S, S)]) -> Result<Poset> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(n));
        }
        let mut index: BTreeMap<&str, Elem> = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.as_ref(), i).is_some() {
                return Err(Error::DuplicateName(name.as_ref().to_string()));
            }
        }
        let mut succ = vec![0u64; n];
        for (lo, hi) in covers {
            let l = *index
                .get(lo.as_ref())
                .ok_or_else(|| Error::UnknownName(lo.as_ref().to_string()))?;
            let h = *index
                .get(hi.as_ref())
                .ok_or_else(|| Error::UnknownName(hi.as_ref().to_string()))?;
            succ[l] |= bit(h);
        }
        // Strict reachability by iterated squaring of the successor relation.
        let mut reach = succ.clone();
        loop {
            let mut changed = false;
            for x in 0..n {
                let mut r = reach[x];
                for y in bits(reach[x]) {
                    r |= reach[y];
                }
                if r != reach[x] {
                    reach[x] = r;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for x in 0..n {
            if reach[x] & bit(x) != 0 {
                return Err(Error::CycleDetected(cycle_witness(x, &succ, names)));
            }
        }
        let up: Vec<u64> = (0..n).map(|x| reach[x] | bit(x)).collect();
        let names = names.iter().map(|s| s.as_ref().to_string()).collect();
        Poset::from_leq(names, up)
    }

    /// Build from a precomputed `leq` relation given as up-masks.
    /// Validates all three order axioms.
    pub(crate) fn from_leq(names: Vec<String>, up: Vec<u64>) -> Result<Poset> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(n));
        }
        debug_assert_eq!(up.len(), n);
        let full = full_mask(n);
        for x in 0..n {
            // reflexive
            assert!(up[x] & bit(x) != 0, "leq must be reflexive");
            assert!(up[x] & !full == 0, "relation row out of range");
        }
        let mut down = vec![0u64; n];
        for x in 0..n {
            for y in bits(up[x]) {
                down[y] |= bit(x);
            }
        }
        for x in 0..n {
            for y in bits(up[x]) {
                if x != y && up[y] & bit(x) != 0 {
                    let c = vec![names[x].clone(), names[y].clone(), names[x].clone()];
                    return Err(Error::CycleDetected(c));
                }
                // transitive
                assert!(up[y] & !up[x] == 0, "leq must be transitive");
            }
        }
        let mut covers = vec![0u64; n];
        for x in 0..n {
            let strict_up = up[x] & !bit(x);
            for y in bits(strict_up) {
                let between = strict_up & (down[y] & !bit(y));
                if between == 0 {
                    covers[x] |= bit(y);
                }
            }
        }
        Ok(Poset {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            names,
            up,
            down,
            covers,
        })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub(crate) fn id(&self) -> u64 {
        self.id
    }

    pub fn full_mask(&self) -> u64 {
        full_mask(self.size())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn elem(&self, name: &str) -> Result<Elem> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.up[x] & bit(y) != 0
    }

    pub(crate) fn up_mask(&self, x: Elem) -> u64 {
        self.up[x]
    }

    pub(crate) fn down_mask(&self, x: Elem) -> u64 {
        self.down[x]
    }

    pub fn covers_of(&self, x: Elem) -> impl Iterator<Item = Elem> {
        bits(self.covers[x])
    }

    /// Cover pairs (lo, hi) in index order.
    pub fn cover_pairs(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for x in 0..self.size() {
            for y in bits(self.covers[x]) {
                out.push((x, y));
            }
        }
        out
    }

    /// Height of an element: length of a longest chain from a minimal element.
    pub fn height(&self, x: Elem) -> usize {
        let mut h = vec![usize::MAX; self.size()];
        for y in self.topo_order() {
            let below = self.down[y] & !bit(y);
            h[y] = bits(below).map(|z| h[z] + 1).max().unwrap_or(0);
        }
        h[x]
    }

    fn topo_order(&self) -> Vec<Elem> {
        let mut order: Vec<Elem> = (0..self.size()).collect();
        order.sort_by_key(|&x| self.down[x].count_ones());
        order
    }

    pub fn empty_subset(&self) -> Subset {
        Subset {
            owner: self.id,
            mask: 0,
        }
    }

    pub fn full_subset(&self) -> Subset {
        Subset {
            owner: self.id,
            mask: self.full_mask(),
        }
    }

    pub fn subset(&self, elems: &[Elem]) -> Subset {
        let mut mask = 0u64;
        for &e in elems {
            assert!(e < self.size(), "element index out of range");
            mask |= bit(e);
        }
        self.subset_mask(mask)
    }

    pub fn subset_mask(&self, mask: u64) -> Subset {
        assert!(mask & !self.full_mask() == 0, "mask out of range");
        Subset {
            owner: self.id,
            mask,
        }
    }

    pub fn subset_by_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Subset> {
        let mut mask = 0u64;
        for n in names {
            mask |= bit(self.elem(n.as_ref())?);
        }
        Ok(self.subset_mask(mask))
    }

    /// Mask of a subset after checking it belongs to this poset.
    pub(crate) fn owned(&self, s: &Subset) -> Result<u64> {
        if s.owner == self.id {
            Ok(s.mask)
        } else {
            Err(Error::ForeignSubset)
        }
    }

    /// Render a subset mask as `{a,b,c}` in element-index order.
    pub fn render_mask(&self, mask: u64) -> String {
        let mut out = String::from("{");
        let mut first = true;
        for x in bits(mask) {
            if !first {
                out.push(',');
            }
            out.push_str(&self.names[x]);
            first = false;
        }
        out.push('}');
        out
    }

    pub fn render_subset(&self, s: &Subset) -> Result<String> {
        let m = self.owned(s)?;
        Ok(self.render_mask(m))
    }

    /// Canonical byte string: equal iff the posets are isomorphic.
    ///
    /// Colors are refined by (in/out degree, then neighbor color multisets)
    /// until stable; the remaining symmetry is resolved by taking the
    /// lexicographically least relation encoding over all permutations
    /// respecting the ordered color partition.
    pub fn canonical_form(&self) -> Vec<u8> {
        let n = self.size();
        let mut color: Vec<usize> = vec![0; n];
        // initial invariant: degrees
        let init: Vec<(u32, u32)> = (0..n)
            .map(|x| (self.down[x].count_ones(), self.up[x].count_ones()))
            .collect();
        assign_colors(&mut color, &init);
        loop {
            let sig: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
                .map(|x| {
                    let mut ups: Vec<usize> =
                        bits(self.up[x] & !bit(x)).map(|y| color[y]).collect();
                    let mut downs: Vec<usize> =
                        bits(self.down[x] & !bit(x)).map(|y| color[y]).collect();
                    ups.sort_unstable();
                    downs.sort_unstable();
                    (color[x], ups, downs)
                })
                .collect();
            let before = count_colors(&color);
            assign_colors(&mut color, &sig);
            if count_colors(&color) == before {
                break;
            }
        }
        // cells in color order
        let ncolors = count_colors(&color);
        let mut cells: Vec<Vec<Elem>> = vec![Vec::new(); ncolors];
        for x in 0..n {
            cells[color[x]].push(x);
        }
        let mut best: Option<Vec<u8>> = None;
        let mut perm: Vec<Elem> = Vec::with_capacity(n);
        self.canon_rec(&cells, 0, &mut perm, &mut best);
        best.expect("at least one permutation")
    }

    fn canon_rec(
        &self,
        cells: &[Vec<Elem>],
        cell_idx: usize,
        perm: &mut Vec<Elem>,
        best: &mut Option<Vec<u8>>,
    ) {
        if cell_idx == cells.len() {
            let enc = self.encode_under(perm);
            if best.as_ref().map_or(true, |b| enc < *b) {
                *best = Some(enc);
            }
            return;
        }
        let cell = &cells[cell_idx];
        let mut order: Vec<Elem> = cell.clone();
        permute_all(&mut order, 0, &mut |p| {
            perm.extend_from_slice(p);
            self.canon_rec(cells, cell_idx + 1, perm, best);
            perm.truncate(perm.len() - p.len());
        });
    }

    fn encode_under(&self, perm: &[Elem]) -> Vec<u8> {
        let n = perm.len();
        let mut out = Vec::with_capacity(1 + (n * n + 7) / 8);
        out.push(n as u8);
        let mut acc = 0u8;
        let mut nbits = 0;
        for &i in perm {
            for &j in perm {
                acc = (acc << 1) | u8::from(self.leq(i, j));
                nbits += 1;
                if nbits == 8 {
                    out.push(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push(acc << (8 - nbits));
        }
        out
    }
}

fn permute_all(items: &mut Vec<Elem>, k: usize, f: &mut impl FnMut(&[Elem])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, f);
        items.swap(k, i);
    }
}

fn assign_colors<T: Ord + Clone>(color: &mut [usize], sig: &[T]) {
    let mut sorted: Vec<&T> = sig.iter().collect();
    sorted.sort();
    sorted.dedup();
    for (x, s) in sig.iter().enumerate() {
        color[x] = sorted.binary_search(&s).unwrap();
    }
}

fn count_colors(color: &[usize]) -> usize {
    color.iter().max().map_or(0, |m| m + 1)
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Find some cycle through `start` in the strict successor relation.
fn cycle_witness<S: AsRef<str>>(start: Elem, succ: &[u64], names: &[S]) -> Vec<String> {
    let mut path = vec![start];
    let mut seen = bit(start);
    let mut cur = start;
    loop {
        // walk any successor that can reach back to start
        let mut next = None;
        for y in bits(succ[cur]) {
            if y == start {
                path.push(start);
                return path.iter().map(|&x| names[x].as_ref().to_string()).collect();
            }
            if seen & bit(y) == 0 && reaches(succ, y, start) {
                next = Some(y);
                break;
            }
        }
        match next {
            Some(y) => {
                path.push(y);
                seen |= bit(y);
                cur = y;
            }
            None => {
                // fall back to the trivial self-loop rendering
                return path.iter().map(|&x| names[x].as_ref().to_string()).collect();
            }
        }
    }
}

fn reaches(succ: &[u64], from: Elem, to: Elem) -> bool {
    let mut frontier = bit(from);
    let mut seen = 0u64;
    while frontier != 0 {
        if frontier & bit(to) != 0 {
            return true;
        }
        seen |= frontier;
        let mut next = 0u64;
        for x in bits(frontier) {
            next |= succ[x];
        }
        frontier = next & !seen;
    }
    false
}

/// A set of elements of one specific poset. Operations on a subset owned
/// by a different poset fail with `ForeignSubset`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Subset {
    pub(crate) owner: u64,
    pub(crate) mask: u64,
}

impl Subset {
    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn card(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.mask & bit(x) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> {
        bits(self.mask)
    }
}

/// A poset with designated distinct bottom and top.
#[derive(Clone, Debug)]
pub struct BoundedPoset {
    poset: Poset,
    bottom: Elem,
    top: Elem,
}

impl BoundedPoset {
    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }
}

impl std::ops::Deref for BoundedPoset {
    type Target = Poset;

    fn deref(&self) -> &Poset {
        &self.poset
    }
}

/// Designate the unique minimum and maximum of `p` as bounds.
pub fn as_bounded(p: Poset) -> Result<BoundedPoset> {
    let full = p.full_mask();
    let bottom = (0..p.size()).find(|&x| p.up[x] == full).ok_or(Error::NoBottom)?;
    let top = (0..p.size()).find(|&x| p.down[x] == full).ok_or(Error::NoTop)?;
    if bottom == top {
        return Err(Error::Trivial);
    }
    Ok(BoundedPoset { poset: p, bottom, top })
}

/// Glue two bounded posets at a shared bottom and top; all other elements
/// of one side are incomparable with all other elements of the other side.
/// Name clashes are resolved by suffixing the right operand's names with `_r`.
pub fn horizontal_sum(p: &BoundedPoset, q: &BoundedPoset) -> Result<BoundedPoset> {
    let np = p.size();
    let q_middle: Vec<Elem> = (0..q.size())
        .filter(|&x| x != q.bottom && x != q.top)
        .collect();
    let n = np + q_middle.len();
    if n > MAX_ELEMENTS {
        return Err(Error::TooLarge(n));
    }
    let mut names: Vec<String> = p.names().to_vec();
    for &x in &q_middle {
        let mut name = q.name(x).to_string();
        while names.contains(&name) {
            name.push_str("_r");
        }
        names.push(name);
    }
    // new index of a q-middle element
    let q_new: BTreeMap<Elem, Elem> = q_middle
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, np + i))
        .collect();
    let map_q = |m: u64| -> u64 {
        let mut out = 0u64;
        for y in bits(m) {
            if y == q.bottom {
                out |= bit(p.bottom);
            } else if y == q.top {
                out |= bit(p.top);
            } else {
                out |= bit(q_new[&y]);
            }
        }
        out
    };
    let mut up = vec![0u64; n];
    for x in 0..np {
        up[x] = p.up_mask(x);
        if x == p.bottom {
            up[x] = full_mask(n);
        }
    }
    for &x in &q_middle {
        up[q_new[&x]] = map_q(q.up_mask(x));
    }
    as_bounded(Poset::from_leq(names, up)?)
}
