//! The worked examples' posets, transcribed from their Hasse diagrams.

use crate::poset::{as_bounded, BoundedPoset, Poset};

fn bounded(names: &[&str], covers: &[(&str, &str)]) -> BoundedPoset {
    as_bounded(Poset::from_covers(names, covers).expect("fixture covers")).expect("fixture bounds")
}

/// Two-element chain 0 < 1, the smallest Boolean poset.
pub fn two_chain() -> BoundedPoset {
    bounded(&["0", "1"], &[("0", "1")])
}

/// 14-element uniquely complemented poset that is not Boolean.
pub fn fig1() -> BoundedPoset {
    bounded(
        &[
            "0", "a", "b", "c", "d", "e", "f", "f'", "e'", "d'", "c'", "b'", "a'", "1",
        ],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("0", "d"),
            ("0", "e"),
            ("a", "f"),
            ("a", "c'"),
            ("a", "b'"),
            ("b", "f"),
            ("b", "c'"),
            ("b", "a'"),
            ("c", "e'"),
            ("c", "d'"),
            ("c", "b'"),
            ("c", "a'"),
            ("d", "e'"),
            ("d", "f'"),
            ("d", "a'"),
            ("e", "d'"),
            ("e", "f'"),
            ("e", "a'"),
            ("f", "e'"),
            ("f", "d'"),
            ("f'", "c'"),
            ("f'", "b'"),
            ("e'", "1"),
            ("d'", "1"),
            ("c'", "1"),
            ("b'", "1"),
            ("a'", "1"),
        ],
    )
}

/// The non-modular lattice N₅.
pub fn n5() -> BoundedPoset {
    bounded(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("a", "c"), ("b", "1"), ("c", "1")],
    )
}

/// Non-distributive complemented lattice: four atoms a..d, four coatoms
/// e..h, every complement set an antichain.
pub fn fig4() -> BoundedPoset {
    bounded(
        &["0", "a", "b", "c", "d", "e", "f", "g", "h", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("0", "d"),
            ("a", "e"),
            ("a", "f"),
            ("a", "g"),
            ("b", "e"),
            ("b", "h"),
            ("c", "e"),
            ("c", "h"),
            ("d", "f"),
            ("d", "g"),
            ("d", "h"),
            ("e", "1"),
            ("f", "1"),
            ("g", "1"),
            ("h", "1"),
        ],
    )
}

/// Horizontal sum of the Fig. 4 poset and the four-element chain 0<i<j<1.
pub fn fig6() -> BoundedPoset {
    bounded(
        &["0", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("0", "d"),
            ("a", "e"),
            ("a", "f"),
            ("a", "g"),
            ("b", "e"),
            ("b", "h"),
            ("c", "e"),
            ("c", "h"),
            ("d", "f"),
            ("d", "g"),
            ("d", "h"),
            ("e", "1"),
            ("f", "1"),
            ("g", "1"),
            ("h", "1"),
            ("0", "i"),
            ("i", "j"),
            ("j", "1"),
        ],
    )
}

/// 18-element complemented poset violating the antitone conditions:
/// f ≤ k but k⁺ = [c,o] is not below f⁺ = [b,n] in any of the three senses.
pub fn fig7() -> BoundedPoset {
    bounded(
        &[
            "0", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o",
            "p", "1",
        ],
        &[
            ("0", "a"),
            ("a", "b"),
            ("b", "d"),
            ("0", "f"),
            ("f", "k"),
            ("k", "1"),
            ("0", "c"),
            ("c", "h"),
            ("b", "e"),
            ("d", "i"),
            ("d", "j"),
            ("e", "i"),
            ("e", "j"),
            ("i", "n"),
            ("j", "n"),
            ("n", "1"),
            ("a", "k"),
            ("f", "p"),
            ("p", "1"),
            ("c", "g"),
            ("g", "l"),
            ("g", "m"),
            ("h", "l"),
            ("h", "m"),
            ("l", "o"),
            ("m", "o"),
            ("o", "p"),
        ],
    )
}

/// Non-distributive complemented poset where a ∨ b does not exist and the
/// generalized De Morgan laws fail.
pub fn fig8() -> BoundedPoset {
    bounded(
        &["0", "a", "b", "c", "d", "e", "f", "g", "h", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("0", "d"),
            ("a", "e"),
            ("a", "f"),
            ("b", "e"),
            ("b", "f"),
            ("c", "g"),
            ("c", "h"),
            ("d", "g"),
            ("d", "h"),
            ("e", "1"),
            ("f", "1"),
            ("g", "1"),
            ("h", "1"),
        ],
    )
}

/// The four-element diamond 0 < a,b < 1.
pub fn fig9() -> BoundedPoset {
    bounded(
        &["0", "a", "b", "1"],
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )
}

/// Expected shape of the closed-set lattice of N₅ (six elements).
pub fn fig3_expected() -> Poset {
    Poset::from_covers(
        &["empty", "0", "b", "ac", "1", "P"],
        &[
            ("empty", "0"),
            ("empty", "b"),
            ("empty", "ac"),
            ("empty", "1"),
            ("0", "P"),
            ("b", "P"),
            ("ac", "P"),
            ("1", "P"),
        ],
    )
    .expect("fig3")
}

/// Labels of the ten closed sets of the Fig. 4 poset, rendered the way
/// `Poset::render_mask` does and listed in the lattice's enumeration
/// order (cardinality, then mask).
pub fn fig5_expected_labels() -> Vec<&'static str> {
    vec![
        "{}",
        "{0}",
        "{a}",
        "{b,c}",
        "{d}",
        "{e}",
        "{f,g}",
        "{h}",
        "{1}",
        "{0,a,b,c,d,e,f,g,h,1}",
    ]
}

/// Expected shape of the poset of non-empty convex subsets of the diamond
/// (twelve elements).
pub fn fig10_expected() -> Poset {
    Poset::from_covers(
        &[
            "0", "0a", "0b", "a", "0ab", "b", "ab", "0ab1", "ab1", "a1", "b1", "1",
        ],
        &[
            ("0", "0a"),
            ("0", "0b"),
            ("0a", "a"),
            ("0a", "0ab"),
            ("0b", "b"),
            ("0b", "0ab"),
            ("a", "a1"),
            ("b", "b1"),
            ("0ab", "ab"),
            ("0ab", "0ab1"),
            ("ab", "ab1"),
            ("0ab1", "ab1"),
            ("ab1", "a1"),
            ("ab1", "b1"),
            ("a1", "1"),
            ("b1", "1"),
        ],
    )
    .expect("fig10")
}

/// All input fixtures by figure name, for sweep-style tests.
pub fn all_bounded() -> Vec<(&'static str, BoundedPoset)> {
    vec![
        ("two-chain", two_chain()),
        ("fig1", fig1()),
        ("n5", n5()),
        ("fig4", fig4()),
        ("fig6", fig6()),
        ("fig7", fig7()),
        ("fig8", fig8()),
        ("fig9", fig9()),
    ]
}
