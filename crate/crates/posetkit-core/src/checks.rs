//! Structural predicates with failure witnesses: distributivity, modularity,
//! complementation flavors, N₅-with-bounds, antitone conditions and the
//! generalized De Morgan laws.

use serde::Serialize;

use crate::complement::{plus_elem_mask, plus_set_mask};
use crate::cone::{
    le1_mask, le2_mask, lower_mask, max_mask, min_mask, set_le_mask, upper_mask,
};
use crate::poset::{bit, bits, BoundedPoset, Elem};

/// A named property verdict. When `holds` is false the witness binds the
/// quantified variables of the first failing instance in canonical element
/// order; existential searches use it for the found instance instead.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub bindings: Vec<(String, String)>,
}

impl PropertyReport {
    pub fn pass(property: &str) -> Self {
        PropertyReport {
            property: property.to_string(),
            holds: true,
            witness: None,
            note: None,
        }
    }

    pub fn fail(property: &str, bindings: Vec<(String, String)>) -> Self {
        PropertyReport {
            property: property.to_string(),
            holds: false,
            witness: Some(Witness { bindings }),
            note: None,
        }
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    pub fn with_witness(mut self, bindings: Vec<(String, String)>) -> Self {
        self.witness = Some(Witness { bindings });
        self
    }
}

fn b(name: &str, value: String) -> (String, String) {
    (name.to_string(), value)
}

/// Both sides of one of the four distributive identities, as masks.
pub(crate) fn distributive_sides(
    bp: &BoundedPoset,
    form: u8,
    x: Elem,
    y: Elem,
    z: Elem,
) -> (u64, u64) {
    let p = bp.poset();
    let (xm, ym, zm) = (bit(x), bit(y), bit(z));
    match form {
        1 => (
            lower_mask(p, upper_mask(p, xm | ym) | zm),
            lower_mask(p, upper_mask(p, lower_mask(p, xm | zm) | lower_mask(p, ym | zm))),
        ),
        2 => (
            upper_mask(p, lower_mask(p, upper_mask(p, xm | ym) | zm)),
            upper_mask(p, lower_mask(p, xm | zm) | lower_mask(p, ym | zm)),
        ),
        3 => (
            upper_mask(p, lower_mask(p, xm | ym) | zm),
            upper_mask(p, lower_mask(p, upper_mask(p, xm | zm) | upper_mask(p, ym | zm))),
        ),
        4 => (
            lower_mask(p, upper_mask(p, lower_mask(p, xm | ym) | zm)),
            lower_mask(p, upper_mask(p, xm | zm) | upper_mask(p, ym | zm)),
        ),
        _ => panic!("distributive form must be 1..=4"),
    }
}

/// Check one of the four distributive identities over all triples.
pub fn is_distributive(bp: &BoundedPoset, form: u8) -> PropertyReport {
    let n = bp.size();
    let name = format!("distributive-{form}");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (lhs, rhs) = distributive_sides(bp, form, x, y, z);
                if lhs != rhs {
                    return PropertyReport::fail(
                        &name,
                        vec![
                            b("x", bp.name(x).into()),
                            b("y", bp.name(y).into()),
                            b("z", bp.name(z).into()),
                            b("lhs", bp.render_mask(lhs)),
                            b("rhs", bp.render_mask(rhs)),
                        ],
                    );
                }
            }
        }
    }
    PropertyReport::pass(&name)
}

/// Check both displayed modularity conditions; they are equivalent and
/// the agreement is asserted.
pub fn is_modular(bp: &BoundedPoset) -> PropertyReport {
    let p = bp.poset();
    let n = bp.size();
    let mut first: Option<(Elem, Elem, Elem, u64, u64)> = None;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !p.leq(z, x) {
                    continue;
                }
                let lhs = upper_mask(p, lower_mask(p, bit(x) | bit(y)) | bit(z));
                let rhs = upper_mask(p, lower_mask(p, bit(x) | upper_mask(p, bit(y) | bit(z))));
                if lhs != rhs && first.is_none() {
                    first = Some((x, y, z, lhs, rhs));
                }
            }
        }
    }
    let mut dual_fails = false;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !p.leq(x, z) {
                    continue;
                }
                let lhs = lower_mask(p, upper_mask(p, bit(x) | bit(y)) | bit(z));
                let rhs = lower_mask(p, upper_mask(p, bit(x) | lower_mask(p, bit(y) | bit(z))));
                if lhs != rhs {
                    dual_fails = true;
                    break 'outer;
                }
            }
        }
    }
    assert_eq!(
        first.is_some(),
        dual_fails,
        "the two modularity conditions must agree"
    );
    match first {
        None => PropertyReport::pass("modular"),
        Some((x, y, z, lhs, rhs)) => PropertyReport::fail(
            "modular",
            vec![
                b("x", bp.name(x).into()),
                b("y", bp.name(y).into()),
                b("z", bp.name(z).into()),
                b("lhs", bp.render_mask(lhs)),
                b("rhs", bp.render_mask(rhs)),
            ],
        ),
    }
}

pub fn is_complemented(bp: &BoundedPoset) -> PropertyReport {
    for x in 0..bp.size() {
        if plus_elem_mask(bp, x) == 0 {
            return PropertyReport::fail("complemented", vec![b("x", bp.name(x).into())]);
        }
    }
    PropertyReport::pass("complemented")
}

pub fn is_uniquely_complemented(bp: &BoundedPoset) -> PropertyReport {
    for x in 0..bp.size() {
        let m = plus_elem_mask(bp, x);
        if m.count_ones() != 1 {
            return PropertyReport::fail(
                "uniquely-complemented",
                vec![b("x", bp.name(x).into()), b("x+", bp.render_mask(m))],
            );
        }
    }
    PropertyReport::pass("uniquely-complemented")
}

/// Boolean = distributive (form 1) and complemented.
pub fn is_boolean(bp: &BoundedPoset) -> PropertyReport {
    let d = is_distributive(bp, 1);
    if !d.holds {
        return PropertyReport {
            property: "boolean".into(),
            holds: false,
            witness: d.witness,
            note: Some("not distributive".into()),
        };
    }
    let c = is_complemented(bp);
    if !c.holds {
        return PropertyReport {
            property: "boolean".into(),
            holds: false,
            witness: c.witness,
            note: Some("not complemented".into()),
        };
    }
    PropertyReport::pass("boolean")
}

/// For each a there must exist a greatest x with L(a,x) = {0}.
///
/// The source text never defines pseudocomplementation; this reading is
/// the one its Fig. 1 counterexample argument uses.
pub fn is_pseudocomplemented(bp: &BoundedPoset) -> PropertyReport {
    let p = bp.poset();
    let zero = bit(bp.bottom());
    for a in 0..bp.size() {
        let ann: u64 = (0..bp.size())
            .filter(|&x| lower_mask(p, bit(a) | bit(x)) == zero)
            .fold(0, |acc, x| acc | bit(x));
        let has_greatest = crate::cone::greatest_of(p, ann).is_some();
        if !has_greatest {
            return PropertyReport::fail(
                "pseudocomplemented",
                vec![
                    b("a", bp.name(a).into()),
                    b("maximal-annihilators", bp.render_mask(max_mask(p, ann))),
                ],
            );
        }
    }
    PropertyReport::pass("pseudocomplemented")
}

/// Search for a sublattice {0,e,f,g,1} isomorphic to N₅: e < f, g
/// incomparable to both, and all pairwise sups/infs existing inside the
/// five-element set with N₅'s operation table.
pub fn has_n5_with_bounds(bp: &BoundedPoset) -> PropertyReport {
    let p = bp.poset();
    let (zero, one) = (bp.bottom(), bp.top());
    for e in 0..bp.size() {
        if e == zero || e == one {
            continue;
        }
        for f in 0..bp.size() {
            if f == zero || f == one || f == e || !p.leq(e, f) {
                continue;
            }
            for g in 0..bp.size() {
                if g == zero || g == one || g == e || g == f {
                    continue;
                }
                if p.leq(e, g) || p.leq(g, e) || p.leq(f, g) || p.leq(g, f) {
                    continue;
                }
                let sup_eg = crate::cone::sup_mask(p, bit(e) | bit(g));
                let sup_fg = crate::cone::sup_mask(p, bit(f) | bit(g));
                let inf_eg = crate::cone::inf_mask(p, bit(e) | bit(g));
                let inf_fg = crate::cone::inf_mask(p, bit(f) | bit(g));
                if sup_eg == Some(one)
                    && sup_fg == Some(one)
                    && inf_eg == Some(zero)
                    && inf_fg == Some(zero)
                {
                    return PropertyReport {
                        property: "n5-with-bounds".into(),
                        holds: true,
                        witness: Some(Witness {
                            bindings: vec![
                                b("e", bp.name(e).into()),
                                b("f", bp.name(f).into()),
                                b("g", bp.name(g).into()),
                            ],
                        }),
                        note: None,
                    };
                }
            }
        }
    }
    PropertyReport {
        property: "n5-with-bounds".into(),
        holds: false,
        witness: None,
        note: None,
    }
}

/// (x⁺, ≤) is an antichain for every x.
pub fn complement_antichain_all(bp: &BoundedPoset) -> PropertyReport {
    let p = bp.poset();
    for x in 0..bp.size() {
        let m = plus_elem_mask(bp, x);
        for u in bits(m) {
            for v in bits(m) {
                if u != v && p.leq(u, v) {
                    return PropertyReport::fail(
                        "antichain-complements",
                        vec![
                            b("x", bp.name(x).into()),
                            b("u", bp.name(u).into()),
                            b("v", bp.name(v).into()),
                        ],
                    );
                }
            }
        }
    }
    PropertyReport::pass("antichain-complements")
}

/// (x⁺, ≤) is convex for every x.
pub fn complement_convex_all(bp: &BoundedPoset) -> PropertyReport {
    let p = bp.poset();
    for x in 0..bp.size() {
        let m = plus_elem_mask(bp, x);
        let hull = crate::cone::downclose_mask(p, m) & crate::cone::upclose_mask(p, m);
        if hull != m {
            return PropertyReport::fail(
                "convex-complements",
                vec![b("x", bp.name(x).into()), b("x+", bp.render_mask(m))],
            );
        }
    }
    PropertyReport::pass("convex-complements")
}

/// The five antitone statements plus the implications among them.
pub struct AntitoneReport {
    /// Conditions (i)..(v), in order.
    pub conditions: Vec<PropertyReport>,
    pub implications: Vec<PropertyReport>,
}

pub fn antitone_conditions(bp: &BoundedPoset) -> AntitoneReport {
    let p = bp.poset();
    let n = bp.size();
    let plus: Vec<u64> = (0..n).map(|x| plus_elem_mask(bp, x)).collect();

    let pairwise = |name: &str, f: &dyn Fn(Elem, Elem) -> bool, need_leq: bool| {
        for x in 0..n {
            for y in 0..n {
                if need_leq && !p.leq(x, y) {
                    continue;
                }
                if !f(x, y) {
                    return PropertyReport::fail(
                        name,
                        vec![b("x", bp.name(x).into()), b("y", bp.name(y).into())],
                    );
                }
            }
        }
        PropertyReport::pass(name)
    };

    let c1 = pairwise("antitone-i", &|x, y| set_le_mask(p, plus[y], plus[x]), true);
    let c2 = pairwise("antitone-ii", &|x, y| le1_mask(p, plus[y], plus[x]), true);
    let c3 = pairwise("antitone-iii", &|x, y| le2_mask(p, plus[y], plus[x]), true);
    let c4 = pairwise(
        "antitone-iv",
        &|x, y| {
            let lhs = plus_set_mask(bp, min_mask(p, upper_mask(p, bit(x) | bit(y))));
            let rhs = max_mask(p, lower_mask(p, plus[x] | plus[y]));
            le1_mask(p, lhs, rhs)
        },
        false,
    );
    let c5 = pairwise(
        "antitone-v",
        &|x, y| {
            let lhs = min_mask(p, upper_mask(p, plus[x] | plus[y]));
            let rhs = plus_set_mask(bp, max_mask(p, lower_mask(p, bit(x) | bit(y))));
            le2_mask(p, lhs, rhs)
        },
        false,
    );

    let all_have_greatest = (0..n).all(|x| crate::cone::greatest_of(p, plus[x]).is_some());
    let all_have_least = (0..n).all(|x| crate::cone::least_of(p, plus[x]).is_some());
    // the theorem speaks about complemented posets only
    let complemented = is_complemented(bp).holds;

    let implication = |name: &str, hyp: bool, concl: bool| {
        if !hyp {
            PropertyReport::pass(name).with_note("vacuous (hypothesis fails)")
        } else if concl {
            PropertyReport::pass(name)
        } else {
            PropertyReport::fail(name, vec![])
        }
    };
    let implications = vec![
        implication("antitone-i-implies-ii", complemented && c1.holds, c2.holds),
        implication("antitone-i-implies-iii", complemented && c1.holds, c3.holds),
        implication("antitone-iv-implies-ii", complemented && c4.holds, c2.holds),
        implication("antitone-v-implies-iii", complemented && c5.holds, c3.holds),
        implication(
            "antitone-i-implies-iv-given-greatest",
            complemented && c1.holds && all_have_greatest,
            c4.holds,
        ),
        implication(
            "antitone-i-implies-v-given-least",
            complemented && c1.holds && all_have_least,
            c5.holds,
        ),
    ];
    AntitoneReport {
        conditions: vec![c1, c2, c3, c4, c5],
        implications,
    }
}

/// The two generalized De Morgan identities, each over all pairs.
pub fn de_morgan_check(bp: &BoundedPoset) -> (PropertyReport, PropertyReport) {
    let p = bp.poset();
    let n = bp.size();
    let plus: Vec<u64> = (0..n).map(|x| plus_elem_mask(bp, x)).collect();
    let law = |name: &str, f: &dyn Fn(Elem, Elem) -> (u64, u64)| {
        for x in 0..n {
            for y in 0..n {
                let (lhs, rhs) = f(x, y);
                if lhs != rhs {
                    return PropertyReport::fail(
                        name,
                        vec![
                            b("x", bp.name(x).into()),
                            b("y", bp.name(y).into()),
                            b("lhs", bp.render_mask(lhs)),
                            b("rhs", bp.render_mask(rhs)),
                        ],
                    );
                }
            }
        }
        PropertyReport::pass(name)
    };
    let first = law("de-morgan-1", &|x, y| {
        (
            plus_set_mask(bp, min_mask(p, upper_mask(p, bit(x) | bit(y)))),
            max_mask(p, lower_mask(p, plus[x] | plus[y])),
        )
    });
    let second = law("de-morgan-2", &|x, y| {
        (
            plus_set_mask(bp, max_mask(p, lower_mask(p, bit(x) | bit(y)))),
            min_mask(p, upper_mask(p, plus[x] | plus[y])),
        )
    });
    (first, second)
}

/// On distributive bounded posets: every element has at most one
/// complement, and total unique complementation is an antitone involution.
pub fn prop2_check(bp: &BoundedPoset) -> PropertyReport {
    if !is_distributive(bp, 1).holds {
        return PropertyReport::pass("prop2-unique-complement")
            .with_note("vacuous (not distributive)");
    }
    let p = bp.poset();
    let n = bp.size();
    let plus: Vec<u64> = (0..n).map(|x| plus_elem_mask(bp, x)).collect();
    for x in 0..n {
        if plus[x].count_ones() > 1 {
            return PropertyReport::fail(
                "prop2-unique-complement",
                vec![b("x", bp.name(x).into()), b("x+", bp.render_mask(plus[x]))],
            );
        }
    }
    if plus.iter().all(|m| m.count_ones() == 1) {
        let comp: Vec<Elem> = plus.iter().map(|&m| m.trailing_zeros() as Elem).collect();
        for x in 0..n {
            if comp[comp[x]] != x {
                return PropertyReport::fail(
                    "prop2-unique-complement",
                    vec![b("x", bp.name(x).into())],
                )
                .with_note("complementation is not an involution");
            }
            for y in 0..n {
                if p.leq(x, y) && !p.leq(comp[y], comp[x]) {
                    return PropertyReport::fail(
                        "prop2-unique-complement",
                        vec![b("x", bp.name(x).into()), b("y", bp.name(y).into())],
                    )
                    .with_note("complementation is not antitone");
                }
            }
        }
    }
    PropertyReport::pass("prop2-unique-complement")
}
