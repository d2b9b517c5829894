//! Property-based tests: canonical forms are label-invariant and the
//! Galois laws of ⁺ hold on arbitrary subsets of the fixture posets.

use proptest::prelude::*;

use posetkit_core::complement::plus_set;
use posetkit_core::fixtures;
use posetkit_core::{BoundedPoset, Poset};

/// A random poset on `n` elements from a random strict upper-triangular
/// relation, transitively closed, then reduced to cover pairs.
fn poset_from_rel(n: usize, rel_bits: u64) -> Poset {
    let mut leq = vec![0u64; n];
    let mut k = 0;
    for i in 0..n {
        leq[i] |= 1 << i;
        for j in (i + 1)..n {
            if rel_bits >> k & 1 == 1 {
                leq[i] |= 1 << j;
            }
            k += 1;
        }
    }
    // transitive closure (indices are already a linear extension)
    for i in (0..n).rev() {
        for j in (i + 1)..n {
            if leq[i] >> j & 1 == 1 {
                leq[i] |= leq[j];
            }
        }
    }
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if leq[i] >> j & 1 == 1 {
                let via = (i + 1..n)
                    .any(|m| m != j && leq[i] >> m & 1 == 1 && leq[m] >> j & 1 == 1);
                if !via {
                    covers.push((names[i].clone(), names[j].clone()));
                }
            }
        }
    }
    Poset::from_covers(&names, &covers).expect("covers from a closed relation")
}

/// The same poset with elements listed in permuted order.
fn permuted(p: &Poset, perm: &[usize]) -> Poset {
    let names: Vec<String> = perm.iter().map(|&i| p.name(i).to_string()).collect();
    let covers: Vec<(String, String)> = p
        .cover_pairs()
        .into_iter()
        .map(|(x, y)| (p.name(x).to_string(), p.name(y).to_string()))
        .collect();
    Poset::from_covers(&names, &covers).expect("same covers")
}

proptest! {
    #[test]
    fn canonical_form_is_label_invariant(
        n in 1usize..8,
        rel in any::<u64>(),
        shuffle in any::<u64>(),
    ) {
        let p = poset_from_rel(n, rel);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = shuffle | 1;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let q = permuted(&p, &perm);
        prop_assert_eq!(p.canonical_form(), q.canonical_form());
    }
}

fn galois_on(bp: &BoundedPoset, am: u64, bm: u64) -> Result<(), TestCaseError> {
    let full = bp.full_mask();
    let sub = |m: u64| bp.subset_mask(m & full);
    let plus = |m: u64| plus_set(bp, &sub(m)).unwrap().mask();
    let (a, b) = (am & full, bm & full);
    // A ⊆ A⁺⁺ and the induced closure is idempotent: A⁺⁺⁺ = A⁺
    prop_assert_eq!(a & !plus(plus(a)), 0);
    prop_assert_eq!(plus(plus(plus(a))), plus(a));
    // antitone on inclusions
    prop_assert_eq!(plus(a | b) & !plus(a & b), 0);
    if a & !b == 0 {
        prop_assert_eq!(plus(b) & !plus(a), 0);
    }
    // the Galois equivalence A ⊆ B⁺ ⟺ B ⊆ A⁺
    prop_assert_eq!(a & !plus(b) == 0, b & !plus(a) == 0);
    Ok(())
}

proptest! {
    #[test]
    fn galois_laws_on_random_subsets(am in any::<u64>(), bm in any::<u64>()) {
        for (_, bp) in fixtures::all_bounded() {
            galois_on(&bp, am, bm)?;
        }
    }
}
