//! Candidate extensions of `L(c_{p,q}, 0)` by its simple modules, tensor
//! product invariants, and the classification verdict for a simple rational
//! C₂-cofinite algebra with given `(c, c̃)`.
//!
//! The scanner only applies necessary conditions: summands other than the
//! vacuum must have positive integral weight and the vacuum occurs once.
//! Nothing here checks that a candidate carries a vertex algebra structure.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{irreducible_character_of, CharacterSeries, ModuleLabel};
use crate::error::Result;
use crate::minimal_models::{integral_weight, recognize_central_charge, KacEntry, MinimalModel};
use crate::par;
use crate::rational::{format_rational, int, Rational};

pub const CANDIDATE_NOTE: &str = "necessary-condition only";

/// The vacuum entry followed by every Kac entry of positive integral weight.
pub fn integral_weight_entries(p: i64, q: i64) -> Result<Vec<KacEntry>> {
    let table = MinimalModel::new(p, q)?.kac_table();
    let mut entries: Vec<KacEntry> = table.entries.iter().filter(|e| e.h == int(0)).cloned().collect();
    entries.extend(table.entries.into_iter().filter(|e| integral_weight(&e.h).is_some_and(|h| h > 0)));
    Ok(entries)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCandidate {
    pub model: MinimalModel,
    /// Multiplicity per Kac label; the vacuum `(1, 1)` maps to 1.
    pub multiplicities: BTreeMap<(i64, i64), u32>,
    pub character: CharacterSeries,
}

impl ExtensionCandidate {
    pub fn total_multiplicity(&self) -> u32 {
        self.multiplicities.values().sum()
    }

    /// JSON export: model, multiplicities keyed `"r,s"`, first 20 coefficients.
    pub fn export(&self) -> Value {
        let mult: serde_json::Map<String, Value> =
            self.multiplicities.iter().map(|((r, s), m)| (format!("{r},{s}"), json!(m))).collect();
        let coeffs: Vec<String> = self.character.dimensions().iter().take(20).map(|c| c.to_string()).collect();
        json!({
            "model": { "p": self.model.p(), "q": self.model.q() },
            "multiplicities": mult,
            "leading_exponent": format_rational(self.character.series.leading_exponent()),
            "coefficients": coeffs,
            "note": CANDIDATE_NOTE,
        })
    }
}

/// All multiplicity vectors over `slots` entries with sum at most `budget`.
fn assignments(slots: usize, budget: u32) -> Vec<Vec<u32>> {
    if slots == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for m in 0..=budget {
        for mut rest in assignments(slots - 1, budget - m) {
            rest.insert(0, m);
            out.push(rest);
        }
    }
    out
}

/// Every direct sum of the vacuum (once) and positive-integral-weight
/// irreducibles with total multiplicity at most `max_total_multiplicity`,
/// each with its character to order `order`, sorted by multiplicity vector.
pub fn scan_extensions(p: i64, q: i64, max_total_multiplicity: u32, order: usize) -> Result<Vec<ExtensionCandidate>> {
    let model = MinimalModel::new(p, q)?;
    if max_total_multiplicity == 0 {
        return Ok(Vec::new());
    }
    let entries = integral_weight_entries(p, q)?;
    let characters: Vec<CharacterSeries> =
        entries.iter().map(|e| irreducible_character_of(&model, e.r, e.s, order)).collect::<Result<_>>()?;
    let mut vectors = assignments(entries.len() - 1, max_total_multiplicity - 1);
    vectors.sort();
    let candidates = par::map_slice(&vectors, |rest| {
        let mut series = characters[0].series.clone();
        let mut multiplicities = BTreeMap::from([((entries[0].r, entries[0].s), 1u32)]);
        for (i, &m) in rest.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let e = &entries[i + 1];
            multiplicities.insert((e.r, e.s), m);
            let term = characters[i + 1].series.scale(&int(i64::from(m)));
            series = series.add(&term).expect("integral weight offsets");
        }
        let summands = multiplicities.iter().map(|(&label, &m)| (label, m)).collect();
        ExtensionCandidate {
            model: model.clone(),
            multiplicities,
            character: CharacterSeries { label: ModuleLabel::DirectSum { p, q, summands }, series },
        }
    });
    Ok(candidates)
}

/// `(Σc, Σc̃)` over tensor factors.
///
/// Additivity of `c̃` holds because the minimal weight of a tensor product of
/// irreducibles is the sum of the factors' minimal weights.
pub fn tensor_invariants(factors: &[(Rational, Rational)]) -> (Rational, Rational) {
    factors.iter().fold((int(0), int(0)), |(c, ct), (a, b)| (c + a, ct + b))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag")]
pub enum VerdictTag {
    ZeroAlgebra,
    TrivialAlgebraC,
    ExtensionOfMinimalModel { p: i64, q: i64 },
    NoSuchAlgebra,
    OutsideTheoremScope,
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictTag::ExtensionOfMinimalModel { p, q } => write!(f, "ExtensionOfMinimalModel({p},{q})"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub tag: VerdictTag,
    pub note: String,
}

/// Verdict for a hypothetical simple, rational, C₂-cofinite algebra with
/// central charge `c` and effective central charge `c_tilde`.
pub fn classify_voa(c: &Rational, c_tilde: &Rational) -> ClassificationVerdict {
    let zero = int(0);
    let (tag, note) = if c_tilde < &zero {
        (VerdictTag::ZeroAlgebra, "c̃ < 0 forces the algebra to be zero".to_string())
    } else if c_tilde == &zero {
        (VerdictTag::TrivialAlgebraC, "c̃ = 0 forces the algebra to be the ground field".to_string())
    } else if c == c_tilde && c < &int(1) {
        match recognize_central_charge(c) {
            Some((p, q)) => (
                VerdictTag::ExtensionOfMinimalModel { p, q },
                format!("c = c̃ < 1 with c = c_{{{p},{q}}}: an extension of L(c_{{{p},{q}}}, 0) by its simple modules"),
            ),
            None => (
                VerdictTag::NoSuchAlgebra,
                format!("c = c̃ < 1 forces c = c_{{p,q}}, but {} is no such value", format_rational(c)),
            ),
        }
    } else if c == c_tilde {
        (VerdictTag::OutsideTheoremScope, "c = c̃ ≥ 1 is not covered".to_string())
    } else {
        (VerdictTag::OutsideTheoremScope, "c ≠ c̃ is not covered".to_string())
    };
    ClassificationVerdict { tag, note }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minimal_models::central_charge;
    use crate::rational::rat;

    fn weights(p: i64, q: i64) -> Vec<Rational> {
        integral_weight_entries(p, q).unwrap().into_iter().map(|e| e.h).collect()
    }

    #[test]
    fn integral_entries() {
        assert_eq!(weights(3, 4), vec![int(0)]);
        assert_eq!(weights(2, 5), vec![int(0)]);
        assert_eq!(weights(5, 6), vec![int(0), int(3)]);
        assert!(integral_weight_entries(4, 6).is_err());
    }

    #[test]
    fn assignment_counts() {
        assert_eq!(assignments(0, 3), vec![Vec::<u32>::new()]);
        assert_eq!(assignments(1, 2), vec![vec![0], vec![1], vec![2]]);
        // stars and bars: C(2 + 3, 2)
        assert_eq!(assignments(2, 3).len(), 10);
    }

    #[test]
    fn scan_small_models() {
        for bound in 1..4 {
            let c = scan_extensions(3, 4, bound, 20).unwrap();
            assert_eq!(c.len(), 1);
            assert_eq!(c[0].total_multiplicity(), 1);
        }
        let tri = scan_extensions(5, 6, 2, 30).unwrap();
        assert_eq!(tri.len(), 2);
        assert_eq!(tri[1].multiplicities, BTreeMap::from([((1, 1), 1), ((1, 5), 1)]));
        for cand in &tri {
            assert_eq!(cand.character.dimensions()[0], 1.into());
        }
        assert!(scan_extensions(5, 6, 0, 10).unwrap().is_empty());
    }

    #[test]
    fn export_shape() {
        let tri = scan_extensions(5, 6, 2, 30).unwrap();
        let v = tri[1].export();
        assert_eq!(v["multiplicities"]["1,5"], 1);
        assert_eq!(v["coefficients"].as_array().unwrap().len(), 20);
        assert_eq!(v["note"], CANDIDATE_NOTE);
    }

    #[test]
    fn tensor_examples() {
        let ly = (rat(-22, 5), rat(2, 5));
        assert_eq!(tensor_invariants(&[ly.clone(), (int(5), int(5))]), (rat(3, 5), rat(27, 5)));
        let mut five = vec![ly; 5];
        assert_eq!(tensor_invariants(&five), (int(-22), int(2)));
        five.push((int(22), int(22)));
        assert_eq!(tensor_invariants(&five), (int(0), int(24)));
        assert_eq!(tensor_invariants(&[]), (int(0), int(0)));
    }

    #[test]
    fn classifier_table() {
        assert_eq!(classify_voa(&int(7), &int(-1)).tag, VerdictTag::ZeroAlgebra);
        assert_eq!(classify_voa(&int(0), &int(0)).tag, VerdictTag::TrivialAlgebraC);
        assert_eq!(classify_voa(&rat(1, 2), &rat(1, 2)).tag, VerdictTag::ExtensionOfMinimalModel { p: 3, q: 4 });
        assert_eq!(classify_voa(&rat(3, 5), &rat(3, 5)).tag, VerdictTag::NoSuchAlgebra);
        assert_eq!(classify_voa(&rat(3, 5), &rat(27, 5)).tag, VerdictTag::OutsideTheoremScope);
        assert_eq!(classify_voa(&int(2), &int(2)).tag, VerdictTag::OutsideTheoremScope);
        let c = central_charge(2, 5).unwrap();
        assert_eq!(classify_voa(&c, &rat(2, 5)).tag, VerdictTag::OutsideTheoremScope);
    }
}
