//! The orthogonality relation, the complement-set operator on elements and
//! subsets, closed subsets, and the complete ortholattice of closed sets.

use crate::cone::{lower_mask, upper_mask};
use crate::error::{Error, Result};
use crate::poset::{bit, bits, BoundedPoset, Elem, Poset, Subset};

/// a ⊥ b: sup{a,b} = 1 and inf{a,b} = 0.
pub fn perp(bp: &BoundedPoset, a: Elem, b: Elem) -> bool {
    let m = bit(a) | bit(b);
    // sup is top iff U(a,b) = {top}; dually for inf.
    upper_mask(bp, m) == bit(bp.top()) && lower_mask(bp, m) == bit(bp.bottom())
}

pub(crate) fn plus_elem_mask(bp: &BoundedPoset, a: Elem) -> u64 {
    (0..bp.size()).filter(|&x| perp(bp, a, x)).fold(0, |acc, x| acc | bit(x))
}

/// a⁺: the set of all complements of a.
pub fn plus_elem(bp: &BoundedPoset, a: Elem) -> Subset {
    bp.subset_mask(plus_elem_mask(bp, a))
}

pub(crate) fn plus_set_mask(bp: &BoundedPoset, a: u64) -> u64 {
    bits(a).fold(bp.full_mask(), |acc, x| acc & plus_elem_mask(bp, x))
}

/// A⁺ = ⋂_{a∈A} a⁺, with ∅⁺ = P and P⁺ = ∅.
pub fn plus_set(bp: &BoundedPoset, a: &Subset) -> Result<Subset> {
    Ok(bp.subset_mask(plus_set_mask(bp, bp.poset().owned(a)?)))
}

pub(crate) fn bi_plus_mask(bp: &BoundedPoset, a: u64) -> u64 {
    plus_set_mask(bp, plus_set_mask(bp, a))
}

/// (A⁺)⁺.
pub fn bi_plus(bp: &BoundedPoset, a: &Subset) -> Result<Subset> {
    Ok(bp.subset_mask(bi_plus_mask(bp, bp.poset().owned(a)?)))
}

/// A is closed iff (A⁺)⁺ = A.
pub fn is_closed(bp: &BoundedPoset, a: &Subset) -> Result<bool> {
    let m = bp.poset().owned(a)?;
    Ok(bi_plus_mask(bp, m) == m)
}

/// Least element of a⁺ if one exists; error if a has no complement at all.
pub fn plus_least(bp: &BoundedPoset, a: Elem) -> Result<Option<Elem>> {
    let m = plus_elem_mask(bp, a);
    if m == 0 {
        return Err(Error::EmptyComplementSet(bp.name(a).to_string()));
    }
    Ok(crate::cone::least_of(bp, m))
}

/// Greatest element of a⁺ if one exists; error if a has no complement.
pub fn plus_greatest(bp: &BoundedPoset, a: Elem) -> Result<Option<Elem>> {
    let m = plus_elem_mask(bp, a);
    if m == 0 {
        return Err(Error::EmptyComplementSet(bp.name(a).to_string()));
    }
    Ok(crate::cone::greatest_of(bp, m))
}

/// The complete ortholattice of ⁺-closed subsets, ordered by inclusion.
#[derive(Clone, Debug)]
pub struct ClLattice {
    base_id: u64,
    /// Closed sets as masks of the base poset, sorted ascending.
    elements: Vec<u64>,
    /// ortho[i] = index of elements[i]⁺.
    ortho: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl ClLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.elements.binary_search(&mask).ok()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.elements[i] & !self.elements[j] == 0
    }

    pub fn ortho(&self, i: usize) -> usize {
        self.ortho[i]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Meet is intersection.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.index_of(self.elements[i] & self.elements[j])
            .expect("closed sets are intersection-closed")
    }

    pub fn base_id(&self) -> u64 {
        self.base_id
    }

    /// Join is the double complement of the union.
    pub fn join_in(&self, bp: &BoundedPoset, i: usize, j: usize) -> usize {
        assert_eq!(bp.id(), self.base_id, "lattice belongs to another poset");
        self.index_of(bi_plus_mask(bp, self.elements[i] | self.elements[j]))
            .expect("join of closed sets is closed")
    }

    /// The inclusion order as a standalone poset, elements labelled by
    /// their member sets.
    pub fn to_poset(&self, bp: &BoundedPoset) -> Result<Poset> {
        assert_eq!(bp.id(), self.base_id);
        family_poset(bp.poset(), &self.elements, |a, b| a & !b == 0)
    }
}

/// Order a family of subset-masks by a containment-style relation and
/// build the resulting poset, labelling elements with rendered sets.
pub(crate) fn family_poset(
    base: &Poset,
    sets: &[u64],
    le: impl Fn(u64, u64) -> bool,
) -> Result<Poset> {
    let names: Vec<String> = sets.iter().map(|&m| base.render_mask(m)).collect();
    let mut up = vec![0u64; sets.len()];
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate() {
            if le(a, b) {
                up[i] |= bit(j);
            }
        }
    }
    Poset::from_leq(names, up)
}

/// Enumerate the closed sets of `bp` as all intersections of the
/// single-element complement sets together with P, and verify the
/// ortholattice axioms.
pub fn closed_sets(bp: &BoundedPoset) -> ClLattice {
    let full = bp.full_mask();
    let mut sets: Vec<u64> = vec![full];
    let generators: Vec<u64> = (0..bp.size()).map(|x| plus_elem_mask(bp, x)).collect();
    for g in generators {
        let mut new: Vec<u64> = sets.iter().map(|&s| s & g).collect();
        new.push(g);
        for m in new {
            if !sets.contains(&m) {
                sets.push(m);
            }
        }
    }
    // intersection closure needs one more sweep since new sets meet old ones
    loop {
        let mut added = false;
        let snapshot = sets.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let m = a & b;
                if !sets.contains(&m) {
                    sets.push(m);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    sets.sort_unstable();
    sets.dedup();
    let index = |m: u64| sets.binary_search(&m).expect("closed under the operator");
    let ortho: Vec<usize> = sets.iter().map(|&m| index(plus_set_mask(bp, m))).collect();
    let cl = ClLattice {
        base_id: bp.id(),
        bottom: index(0),
        top: index(full),
        elements: sets,
        ortho,
    };
    verify_ortholattice(bp, &cl);
    cl
}

fn verify_ortholattice(bp: &BoundedPoset, cl: &ClLattice) {
    let k = cl.len();
    assert_eq!(cl.elements[cl.bottom], 0, "empty set must be closed");
    assert_eq!(cl.elements[cl.top], bp.full_mask(), "P must be closed");
    for i in 0..k {
        let m = cl.elements[i];
        assert_eq!(bi_plus_mask(bp, m), m, "every element must be closed");
        assert_eq!(cl.ortho[cl.ortho[i]], i, "ortho must be an involution");
        assert_eq!(m & cl.elements[cl.ortho[i]], 0, "X ∩ X⁺ = ∅");
        assert_eq!(cl.meet(i, cl.ortho[i]), cl.bottom, "X ∧ X⁺ = ∅");
        assert_eq!(cl.join_in(bp, i, cl.ortho[i]), cl.top, "X ∨ X⁺ = P");
        for j in 0..k {
            if cl.le(i, j) {
                assert!(cl.le(cl.ortho[j], cl.ortho[i]), "ortho must be antitone");
            }
        }
    }
}
