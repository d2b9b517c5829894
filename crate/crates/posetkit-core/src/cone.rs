//! Cone and closure operators: U, L, Min, Max, up/down closure, the
//! quasiorders on subsets, and sup/inf existence.

use crate::error::Result;
use crate::poset::{bit, bits, Elem, Poset, Subset};

// Mask-level kernels. These are the hot path for every check in the
// crate; the public wrappers below add ownership validation.

pub(crate) fn upper_mask(p: &Poset, a: u64) -> u64 {
    bits(a).fold(p.full_mask(), |acc, x| acc & p.up_mask(x))
}

pub(crate) fn lower_mask(p: &Poset, a: u64) -> u64 {
    bits(a).fold(p.full_mask(), |acc, x| acc & p.down_mask(x))
}

pub(crate) fn min_mask(p: &Poset, a: u64) -> u64 {
    bits(a)
        .filter(|&x| p.down_mask(x) & a == bit(x))
        .fold(0, |acc, x| acc | bit(x))
}

pub(crate) fn max_mask(p: &Poset, a: u64) -> u64 {
    bits(a)
        .filter(|&x| p.up_mask(x) & a == bit(x))
        .fold(0, |acc, x| acc | bit(x))
}

pub(crate) fn upclose_mask(p: &Poset, a: u64) -> u64 {
    bits(a).fold(0, |acc, x| acc | p.up_mask(x))
}

pub(crate) fn downclose_mask(p: &Poset, a: u64) -> u64 {
    bits(a).fold(0, |acc, x| acc | p.down_mask(x))
}

pub(crate) fn le1_mask(p: &Poset, a: u64, b: u64) -> bool {
    a & !downclose_mask(p, b) == 0
}

pub(crate) fn le2_mask(p: &Poset, a: u64, b: u64) -> bool {
    b & !upclose_mask(p, a) == 0
}

pub(crate) fn set_le_mask(p: &Poset, a: u64, b: u64) -> bool {
    b & !upper_mask(p, a) == 0
}

/// Least element of a mask, if it has one.
pub(crate) fn least_of(p: &Poset, m: u64) -> Option<Elem> {
    bits(m).find(|&x| m & !p.up_mask(x) == 0)
}

/// Greatest element of a mask, if it has one.
pub(crate) fn greatest_of(p: &Poset, m: u64) -> Option<Elem> {
    bits(m).find(|&x| m & !p.down_mask(x) == 0)
}

pub(crate) fn sup_mask(p: &Poset, a: u64) -> Option<Elem> {
    least_of(p, upper_mask(p, a))
}

pub(crate) fn inf_mask(p: &Poset, a: u64) -> Option<Elem> {
    greatest_of(p, lower_mask(p, a))
}

/// U(A): common upper bounds of A. U(∅) = P.
pub fn upper(p: &Poset, a: &Subset) -> Result<Subset> {
    Ok(p.subset_mask(upper_mask(p, p.owned(a)?)))
}

/// L(A): common lower bounds of A. L(∅) = P.
pub fn lower(p: &Poset, a: &Subset) -> Result<Subset> {
    Ok(p.subset_mask(lower_mask(p, p.owned(a)?)))
}

/// Minimal elements of A; empty iff A is empty.
pub fn min_of(p: &Poset, a: &Subset) -> Result<Subset> {
    Ok(p.subset_mask(min_mask(p, p.owned(a)?)))
}

/// Maximal elements of A; empty iff A is empty.
pub fn max_of(p: &Poset, a: &Subset) -> Result<Subset> {
    Ok(p.subset_mask(max_mask(p, p.owned(a)?)))
}

/// A↑: smallest upset including A.
pub fn upclose(p: &Poset, a: &Subset) -> Result<Subset> {
    Ok(p.subset_mask(upclose_mask(p, p.owned(a)?)))
}

/// A↓: smallest downset including A.
pub fn downclose(p: &Poset, a: &Subset) -> Result<Subset> {
    Ok(p.subset_mask(downclose_mask(p, p.owned(a)?)))
}

/// A ≤₁ B: every x ∈ A lies below some y ∈ B. Vacuously true for A = ∅.
pub fn le1(p: &Poset, a: &Subset, b: &Subset) -> Result<bool> {
    Ok(le1_mask(p, p.owned(a)?, p.owned(b)?))
}

/// A ≤₂ B: every y ∈ B lies above some x ∈ A. Vacuously true for B = ∅.
pub fn le2(p: &Poset, a: &Subset, b: &Subset) -> Result<bool> {
    Ok(le2_mask(p, p.owned(a)?, p.owned(b)?))
}

/// A ≤ B: x ≤ y for all x ∈ A, y ∈ B. Vacuously true if either is empty.
pub fn set_le(p: &Poset, a: &Subset, b: &Subset) -> Result<bool> {
    Ok(set_le_mask(p, p.owned(a)?, p.owned(b)?))
}

/// A ⊑ B: A ≤₁ B and A ≤₂ B.
pub fn sqle(p: &Poset, a: &Subset, b: &Subset) -> Result<bool> {
    let (am, bm) = (p.owned(a)?, p.owned(b)?);
    Ok(le1_mask(p, am, bm) && le2_mask(p, am, bm))
}

/// ⋁A: least element of U(A), if it exists.
pub fn sup_of(p: &Poset, a: &Subset) -> Result<Option<Elem>> {
    Ok(sup_mask(p, p.owned(a)?))
}

/// ⋀A: greatest element of L(A), if it exists.
pub fn inf_of(p: &Poset, a: &Subset) -> Result<Option<Elem>> {
    Ok(inf_mask(p, p.owned(a)?))
}
