//! Dedekind-MacNeille completion, orthogonality inside it, convex hulls
//! and the bounded poset of non-empty convex subsets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::checks::PropertyReport;
use crate::complement::{family_poset, perp};
use crate::cone::{downclose_mask, le1_mask, le2_mask, lower_mask, sup_mask, upclose_mask, upper_mask};
use crate::error::{Error, Result};
use crate::poset::{bit, bits, BoundedPoset, Poset};
use crate::residuation::CapConfig;

/// The completion: all cuts (sets with LU(B) = B) of a poset, ordered by
/// inclusion. Meets are intersections, joins are LU of unions.
pub struct DMLattice {
    base_id: u64,
    cuts: Vec<u64>,
}

impl DMLattice {
    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn cuts(&self) -> &[u64] {
        &self.cuts
    }

    pub fn index_of(&self, cut: u64) -> Option<usize> {
        self.cuts.iter().position(|&c| c == cut)
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.cuts[i] & !self.cuts[j] == 0
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.index_of(self.cuts[i] & self.cuts[j])
            .expect("cut family is closed under intersection")
    }

    pub fn join(&self, p: &Poset, i: usize, j: usize) -> usize {
        let m = lower_mask(p, upper_mask(p, self.cuts[i] | self.cuts[j]));
        self.index_of(m).expect("LU of a union of cuts is a cut")
    }

    pub fn to_poset(&self, p: &Poset) -> Result<Poset> {
        family_poset(p, &self.cuts, |a, b| a & !b == 0)
    }

    fn check_base(&self, p: &Poset) {
        assert_eq!(p.id(), self.base_id, "cut family belongs to another poset");
    }
}

/// All cuts of `p`: the intersection closure of the principal down-sets
/// together with P itself (= L(∅)), sorted by size then mask.
pub fn dm_completion(p: &Poset) -> DMLattice {
    let full = p.full_mask();
    let mut cuts: Vec<u64> = vec![full];
    for x in 0..p.size() {
        let g = p.down_mask(x);
        let mut new: Vec<u64> = cuts.iter().map(|&c| c & g).collect();
        new.push(g);
        for m in new {
            if !cuts.contains(&m) {
                cuts.push(m);
            }
        }
    }
    cuts.sort_by_key(|&m| (m.count_ones(), m));
    DMLattice {
        base_id: p.id(),
        cuts,
    }
}

/// x ≤ y iff L(x) ⊆ L(y), and both lattice operations of the completion
/// restrict correctly: a cut is a principal down-set exactly when the
/// corresponding sup/inf exists in the base poset (checked over all
/// subsets, so only sensible for small posets).
pub fn embedding_check(p: &Poset) -> PropertyReport {
    let n = p.size();
    for x in 0..n {
        for y in 0..n {
            if p.leq(x, y) != (p.down_mask(x) & !p.down_mask(y) == 0) {
                return PropertyReport::fail(
                    "dm-embedding",
                    vec![
                        ("x".to_string(), p.name(x).to_string()),
                        ("y".to_string(), p.name(y).to_string()),
                    ],
                );
            }
        }
    }
    let full = p.full_mask();
    for a in 0..=full {
        if a & !full != 0 {
            continue;
        }
        // joins: L(s) = LU(A) iff s = sup A; meets: L(s) = L(A) iff s = inf A
        let join_cut = lower_mask(p, upper_mask(p, a));
        let meet_cut = lower_mask(p, a);
        let sup = sup_mask(p, a);
        let inf = crate::cone::inf_mask(p, a);
        for s in 0..n {
            let join_ok = (p.down_mask(s) == join_cut) == (sup == Some(s));
            let meet_ok = (p.down_mask(s) == meet_cut) == (inf == Some(s));
            if !join_ok || !meet_ok {
                return PropertyReport::fail(
                    "dm-embedding",
                    vec![
                        ("A".to_string(), p.render_mask(a)),
                        ("s".to_string(), p.name(s).to_string()),
                    ],
                )
                .with_note(if !join_ok { "join law" } else { "meet law" });
            }
        }
    }
    PropertyReport::pass("dm-embedding")
}

/// Lattice closure of the cut family: pairwise meets are intersections
/// and stay inside, pairwise joins are LU of unions, stay inside, and
/// are least upper bounds.
pub fn dm_lattice_check(p: &Poset) -> PropertyReport {
    let dm = dm_completion(p);
    let k = dm.len();
    for i in 0..k {
        for j in 0..k {
            let meet = dm.cuts[i] & dm.cuts[j];
            let join = lower_mask(p, upper_mask(p, dm.cuts[i] | dm.cuts[j]));
            let bad = dm.index_of(meet).is_none()
                || dm.index_of(join).is_none()
                || dm.cuts[i] & !join != 0
                || dm.cuts[j] & !join != 0
                || dm.cuts.iter().any(|&c| {
                    dm.cuts[i] & !c == 0 && dm.cuts[j] & !c == 0 && join & !c != 0
                });
            if bad {
                return PropertyReport::fail(
                    "dm-lattice",
                    vec![
                        ("A".to_string(), p.render_mask(dm.cuts[i])),
                        ("B".to_string(), p.render_mask(dm.cuts[j])),
                    ],
                );
            }
        }
    }
    PropertyReport::pass("dm-lattice")
}

fn cut_perp(bp: &BoundedPoset, dm: &DMLattice, i: usize, j: usize) -> bool {
    let p = bp.poset();
    let join = lower_mask(p, upper_mask(p, dm.cuts[i] | dm.cuts[j]));
    let meet = dm.cuts[i] & dm.cuts[j];
    join == p.full_mask() && meet == bit(bp.bottom())
}

/// Orthogonality of two cuts A ⊥ B is equivalent to: sup(A∪B) = 1 in the
/// base poset, and x ∧ y = 0 for every x ∈ A, y ∈ B. Verified over all
/// cut pairs.
pub fn dm_orthogonality_check(bp: &BoundedPoset) -> PropertyReport {
    let p = bp.poset();
    let dm = dm_completion(p);
    dm.check_base(p);
    for i in 0..dm.len() {
        for j in 0..dm.len() {
            let lhs = cut_perp(bp, &dm, i, j);
            let sup_is_one = sup_mask(p, dm.cuts[i] | dm.cuts[j]) == Some(bp.top());
            let infs_zero = bits(dm.cuts[i]).all(|x| {
                bits(dm.cuts[j]).all(|y| p.down_mask(x) & p.down_mask(y) == bit(bp.bottom()))
            });
            if lhs != (sup_is_one && infs_zero) {
                return PropertyReport::fail(
                    "dm-orthogonality",
                    vec![
                        ("A".to_string(), p.render_mask(dm.cuts[i])),
                        ("B".to_string(), p.render_mask(dm.cuts[j])),
                    ],
                );
            }
        }
    }
    // the embedding respects ⊥: a ⊥ b iff L(a) ⊥ L(b)
    for a in 0..bp.size() {
        for b in 0..bp.size() {
            let i = dm.index_of(p.down_mask(a)).unwrap();
            let j = dm.index_of(p.down_mask(b)).unwrap();
            if perp(bp, a, b) != cut_perp(bp, &dm, i, j) {
                return PropertyReport::fail(
                    "dm-orthogonality",
                    vec![
                        ("a".to_string(), bp.name(a).to_string()),
                        ("b".to_string(), bp.name(b).to_string()),
                    ],
                )
                .with_note("embedding does not respect orthogonality");
            }
        }
    }
    PropertyReport::pass("dm-orthogonality")
}

/// Ā = A↓ ∩ A↑, the smallest convex superset.
pub fn convex_hull(p: &Poset, mask: u64) -> u64 {
    downclose_mask(p, mask) & upclose_mask(p, mask)
}

pub fn is_convex(p: &Poset, mask: u64) -> bool {
    convex_hull(p, mask) == mask
}

/// The non-empty convex subsets of a bounded poset, ordered by
/// A ⊑ B ⟺ A ≤₁ B and A ≤₂ B, with bounds {0} and {1}.
pub struct ConvPoset {
    base_id: u64,
    sets: Vec<u64>,
    bottom: usize,
    top: usize,
}

impl ConvPoset {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.sets.iter().position(|&s| s == mask)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn le(&self, p: &Poset, i: usize, j: usize) -> bool {
        le1_mask(p, self.sets[i], self.sets[j]) && le2_mask(p, self.sets[i], self.sets[j])
    }

    /// Materialize as an ordinary poset; fails once the family outgrows
    /// the element limit.
    pub fn to_poset(&self, bp: &BoundedPoset) -> Result<Poset> {
        assert_eq!(bp.id(), self.base_id, "convex family belongs to another poset");
        if self.sets.len() > crate::poset::MAX_ELEMENTS {
            return Err(Error::TooLarge(self.sets.len()));
        }
        let p = bp.poset();
        family_poset(p, &self.sets, |a, b| {
            le1_mask(p, a, b) && le2_mask(p, a, b)
        })
    }
}

/// Enumerate Conv★(P). Guarded by a base-size cap since the family is
/// exponential in the worst case.
pub fn conv_star(bp: &BoundedPoset, cap: usize) -> Result<ConvPoset> {
    if bp.size() > cap {
        return Err(Error::SizeCapExceeded {
            size: bp.size(),
            cap,
        });
    }
    let p = bp.poset();
    let full = bp.full_mask();
    let mut sets = Vec::new();
    for m in 1..=full {
        if m & !full == 0 && is_convex(p, m) {
            sets.push(m);
        }
    }
    sets.sort_by_key(|&m| (m.count_ones(), m));
    let bottom = sets.iter().position(|&s| s == bit(bp.bottom())).unwrap();
    let top = sets.iter().position(|&s| s == bit(bp.top())).unwrap();
    Ok(ConvPoset {
        base_id: bp.id(),
        sets,
        bottom,
        top,
    })
}

/// A ⊥ B for subsets: every pair of members is orthogonal.
pub fn subsets_orthogonal(bp: &BoundedPoset, a: u64, b: u64) -> bool {
    bits(a).all(|x| bits(b).all(|y| perp(bp, x, y)))
}

fn conv_perp(bp: &BoundedPoset, cp: &ConvPoset, i: usize, j: usize) -> bool {
    let p = bp.poset();
    let mut upper_is_top_only = true;
    let mut lower_is_bottom_only = true;
    for k in 0..cp.len() {
        if cp.le(p, i, k) && cp.le(p, j, k) && k != cp.top() {
            upper_is_top_only = false;
        }
        if cp.le(p, k, i) && cp.le(p, k, j) && k != cp.bottom() {
            lower_is_bottom_only = false;
        }
        if !upper_is_top_only && !lower_is_bottom_only {
            return false;
        }
    }
    upper_is_top_only && lower_is_bottom_only
}

/// A ⊥ B in the base poset iff Ā ⊥ B̄ in Conv★(P), verified over all
/// non-empty subset pairs (or a seeded sample past the cap).
pub fn hull_orthogonality_check(bp: &BoundedPoset, cfg: &CapConfig) -> Result<PropertyReport> {
    let p = bp.poset();
    let cp = conv_star(bp, usize::MAX)?;
    let full = bp.full_mask();
    let check = |a: u64, b: u64| -> bool {
        let i = cp.index_of(convex_hull(p, a)).unwrap();
        let j = cp.index_of(convex_hull(p, b)).unwrap();
        subsets_orthogonal(bp, a, b) == conv_perp(bp, &cp, i, j)
    };
    let fail_report = |a: u64, b: u64| {
        PropertyReport::fail(
            "hull-orthogonality",
            vec![
                ("A".to_string(), p.render_mask(a)),
                ("B".to_string(), p.render_mask(b)),
            ],
        )
    };
    if bp.size() <= cfg.cap {
        for a in 1..=full {
            if a & !full != 0 {
                continue;
            }
            for b in 1..=full {
                if b & !full != 0 {
                    continue;
                }
                if !check(a, b) {
                    return Ok(fail_report(a, b));
                }
            }
        }
        Ok(PropertyReport::pass("hull-orthogonality"))
    } else if let Some(count) = cfg.sample {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..count {
            let a = rng.gen_range(1..=full);
            let b = rng.gen_range(1..=full);
            if !check(a, b) {
                return Ok(fail_report(a, b)
                    .with_note(&format!("sampled {count} instances (non-exhaustive)")));
            }
        }
        Ok(PropertyReport::pass("hull-orthogonality")
            .with_note(&format!("sampled {count} instances (non-exhaustive)")))
    } else {
        Err(Error::SizeCapExceeded {
            size: bp.size(),
            cap: cfg.cap,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dm_of_a_lattice_is_itself() {
        // N₅ is already a lattice, so D adds nothing beyond the new bottom L(0)={0}
        let bp = fixtures::n5();
        let dm = dm_completion(bp.poset());
        assert_eq!(dm.len(), 5);
        for x in 0..bp.size() {
            assert!(dm.index_of(bp.poset().down_mask(x)).is_some());
        }
    }

    #[test]
    fn dm_of_fig8_adds_cuts() {
        // sup{a,b} is missing, so L({a,b} upper bounds) is a proper new cut
        let bp = fixtures::fig8();
        let p = bp.poset();
        let dm = dm_completion(p);
        assert!(dm.len() > bp.size());
        let a = bp.elem("a").unwrap();
        let b = bp.elem("b").unwrap();
        let cut = p.down_mask(a) | p.down_mask(b); // {0,a,b} = LU(a,b)
        assert_eq!(lower_mask(p, upper_mask(p, bit(a) | bit(b))), cut);
        assert!(dm.index_of(cut).is_some());
    }

    #[test]
    fn dm_checks_on_fixtures() {
        for (name, bp) in fixtures::all_bounded() {
            assert!(embedding_check(bp.poset()).holds, "{name} embedding");
            assert!(dm_lattice_check(bp.poset()).holds, "{name} lattice");
            assert!(dm_orthogonality_check(&bp).holds, "{name} orthogonality");
        }
    }

    #[test]
    fn hull_is_smallest_convex_superset() {
        // oracle: intersect all convex supersets directly
        let bp = fixtures::fig4();
        let p = bp.poset();
        let full = bp.full_mask();
        for a in 0..=full {
            let mut smallest = full;
            for c in 0..=full {
                if a & !c == 0 && is_convex(p, c) {
                    smallest &= c;
                }
            }
            assert_eq!(convex_hull(p, a), smallest, "mask {a:b}");
        }
    }

    #[test]
    fn conv_star_of_diamond_matches_fig10() {
        let bp = fixtures::fig9();
        let cp = conv_star(&bp, 14).unwrap();
        assert_eq!(cp.len(), 12);
        let q = cp.to_poset(&bp).unwrap();
        let expected = fixtures::fig10_expected();
        assert_eq!(q.canonical_form(), expected.canonical_form());
    }

    #[test]
    fn conv_star_order_is_partial_order() {
        for (name, bp) in fixtures::all_bounded() {
            if bp.size() > 10 {
                continue;
            }
            let cp = conv_star(&bp, 14).unwrap();
            let p = bp.poset();
            for i in 0..cp.len() {
                assert!(cp.le(p, cp.bottom(), i), "{name}: bottom");
                assert!(cp.le(p, i, cp.top()), "{name}: top");
                for j in 0..cp.len() {
                    if cp.le(p, i, j) && cp.le(p, j, i) {
                        assert_eq!(i, j, "{name}: antisymmetry");
                    }
                }
            }
        }
    }

    #[test]
    fn sqsubseteq_not_antisymmetric_on_arbitrary_subsets() {
        // {0,1} and {0,a,1} are ⊑-equivalent but distinct in the diamond
        let bp = fixtures::fig9();
        let p = bp.poset();
        let a = bp.subset_by_names(&["0", "1"]).unwrap().mask();
        let b = bp.subset_by_names(&["0", "a", "1"]).unwrap().mask();
        assert!(le1_mask(p, a, b) && le2_mask(p, a, b));
        assert!(le1_mask(p, b, a) && le2_mask(p, b, a));
        assert_ne!(a, b);
        assert!(!is_convex(p, b));
    }

    #[test]
    fn hull_orthogonality_on_small_fixtures() {
        let cfg = CapConfig {
            cap: 6,
            ..CapConfig::default()
        };
        for bp in [fixtures::fig9(), fixtures::n5(), fixtures::two_chain()] {
            let r = hull_orthogonality_check(&bp, &cfg).unwrap();
            assert!(r.holds, "{:?}", r.witness);
        }
    }

    #[test]
    fn hull_orthogonality_cap_and_sampling() {
        let bp = fixtures::fig4(); // 10 elements
        let cfg = CapConfig {
            cap: 6,
            ..CapConfig::default()
        };
        assert!(matches!(
            hull_orthogonality_check(&bp, &cfg),
            Err(Error::SizeCapExceeded { size: 10, cap: 6 })
        ));
        let sampled = hull_orthogonality_check(
            &bp,
            &CapConfig {
                cap: 6,
                sample: Some(500),
                seed: 7,
            },
        )
        .unwrap();
        assert!(sampled.holds);
        assert!(sampled.note.unwrap().contains("non-exhaustive"));
    }

    #[test]
    fn subset_orthogonality_examples() {
        let bp = fixtures::fig9();
        let a = bp.subset_by_names(&["a"]).unwrap().mask();
        let b = bp.subset_by_names(&["b"]).unwrap().mask();
        assert!(subsets_orthogonal(&bp, a, b));
        assert!(!subsets_orthogonal(&bp, a, a));
    }
}
