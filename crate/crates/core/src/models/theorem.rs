use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::wedge::dihedral_pairs;
use crate::coxeter::{hyperbolicity, racg_from_flag, HyperbolicityReport};
use crate::factory::Pi1Certificate;
use crate::simplicial::{homology, square_report, HomologyResult, SimplicialComplex};

/// A dimension that is known exactly or only bounded below. Serialised as a
/// number or as a string like `"≥3"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    Exact(u32),
    AtLeast(u32),
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Exact(d) => write!(f, "{d}"),
            Dimension::AtLeast(d) => write!(f, "≥{d}"),
        }
    }
}

impl Serialize for Dimension {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dimension::Exact(d) => s.serialize_u32(*d),
            Dimension::AtLeast(_) => s.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Dimension {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Exact(u32),
            Bound(String),
        }
        match Raw::deserialize(d)? {
            Raw::Exact(n) => Ok(Dimension::Exact(n)),
            Raw::Bound(s) => s
                .strip_prefix('≥')
                .and_then(|n| n.parse().ok())
                .map(Dimension::AtLeast)
                .ok_or_else(|| serde::de::Error::custom(format!("bad dimension `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NerveStats {
    pub f_vector: Vec<usize>,
    pub dim: isize,
    pub homology: HomologyResult,
    pub flag: bool,
    pub empty_squares: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Upper bound for the geometric dimension with virtually cyclic
/// stabilisers: the Davis complex has dimension `dim L + 1`, and the
/// upgrade from finite to virtually cyclic stabilisers attaches cells of
/// dimension at most 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GdAccounting {
    pub davis_dim: u32,
    pub attached_cell_dim: u32,
    pub upper_bound: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainTheoremReport {
    pub nerve: NerveStats,
    pub hypotheses: Vec<HypothesisCheck>,
    /// Names of failed hypotheses; predictions are withheld when non-empty.
    pub failed: Vec<String>,
    pub hyperbolicity: Option<HyperbolicityReport>,
    pub hyperbolic: Option<bool>,
    pub predicted_cd: Option<Dimension>,
    pub predicted_gd: Option<Dimension>,
    pub gd_accounting: Option<GdAccounting>,
    /// Generator pairs with `m_st = ∞`. This is a lower bound for the number
    /// of maximal infinite virtually cyclic subgroups attached, since
    /// distinct pairs may share a maximal envelope.
    pub dihedral_pairs: Option<usize>,
    pub certificate: Pi1Certificate,
}

impl MainTheoremReport {
    pub fn predictions(&self) -> Option<(Dimension, Dimension)> {
        Some((self.predicted_cd?, self.predicted_gd?))
    }
}

/// Checks that `L` is a flag acyclic 2-complex with a valid finite-quotient
/// certificate, then reads the dimensions off the hyperbolicity test of the
/// right-angled Coxeter group with nerve `L`.
pub fn main_theorem_report(l: &SimplicialComplex, cert: &Pi1Certificate) -> MainTheoremReport {
    let h = homology(l, true);
    let sq = square_report(l);
    let nerve = NerveStats {
        f_vector: l.f_vector(),
        dim: l.dim(),
        homology: h.clone(),
        flag: sq.is_flag,
        empty_squares: sq.empty_squares.len(),
    };
    let check = |name: &str, holds: bool, detail: String| HypothesisCheck {
        name: name.to_string(),
        holds,
        detail,
    };
    let hypotheses = vec![
        check(
            "flag",
            sq.is_flag,
            match &sq.flag_witness {
                Some(w) => format!("missing simplex {w:?}"),
                None => "every clique spans a simplex".into(),
            },
        ),
        check("dimension 2", l.dim() == 2, format!("dim L = {}", l.dim())),
        check(
            "acyclic",
            h.is_trivial(),
            if h.is_trivial() {
                "all reduced homology vanishes".into()
            } else {
                "non-zero reduced homology".into()
            },
        ),
        check(
            "pi1 certificate",
            cert.valid && cert.reverify(),
            format!("image order {} in degree {}", cert.checks.image_order, cert.degree),
        ),
    ];
    let failed: Vec<String> = hypotheses.iter().filter(|c| !c.holds).map(|c| c.name.clone()).collect();
    let mut report = MainTheoremReport {
        nerve,
        hypotheses,
        failed,
        hyperbolicity: None,
        hyperbolic: None,
        predicted_cd: None,
        predicted_gd: None,
        gd_accounting: None,
        dihedral_pairs: None,
        certificate: cert.clone(),
    };
    if !report.failed.is_empty() {
        return report;
    }
    let sys = racg_from_flag(l).expect("flag hypothesis holds");
    let hyp = hyperbolicity(&sys);
    let hyperbolic = hyp.hyperbolic == Some(true);
    report.dihedral_pairs = dihedral_pairs(&sys).ok().map(|p| p.len());
    report.hyperbolic = Some(hyperbolic);
    report.hyperbolicity = Some(hyp);
    if hyperbolic {
        let davis_dim = l.dim() as u32 + 1;
        let attached_cell_dim = 2;
        report.predicted_cd = Some(Dimension::Exact(2));
        report.predicted_gd = Some(Dimension::Exact(3));
        report.gd_accounting = Some(GdAccounting {
            davis_dim,
            attached_cell_dim,
            upper_bound: davis_dim.max(attached_cell_dim),
        });
    } else {
        report.predicted_cd = Some(Dimension::AtLeast(3));
        report.predicted_gd = Some(Dimension::AtLeast(3));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factory::{pi1_certificate, spine_presentation};

    fn cert() -> Pi1Certificate {
        pi1_certificate(&spine_presentation(), &[vec![2, 3, 4, 5, 1], vec![1, 5, 2, 4, 3]]).unwrap()
    }

    #[test]
    fn dimension_serialisation() {
        assert_eq!(serde_json::to_string(&Dimension::Exact(2)).unwrap(), "2");
        assert_eq!(serde_json::to_string(&Dimension::AtLeast(3)).unwrap(), "\"≥3\"");
        for d in [Dimension::Exact(3), Dimension::AtLeast(3)] {
            let s = serde_json::to_string(&d).unwrap();
            assert_eq!(serde_json::from_str::<Dimension>(&s).unwrap(), d);
        }
    }

    #[test]
    fn four_cycle_fails_hypotheses() {
        let edges: Vec<Vec<String>> = (0..4).map(|i| vec![format!("v{i}"), format!("v{}", (i + 1) % 4)]).collect();
        let l = SimplicialComplex::faces_closure(&edges).unwrap();
        let r = main_theorem_report(&l, &cert());
        assert_eq!(r.failed, vec!["dimension 2", "acyclic"]);
        assert!(r.predictions().is_none());
    }

    #[test]
    fn invalid_certificate_is_named() {
        let tri = SimplicialComplex::faces_closure(&[vec!["a", "b", "c"]]).unwrap();
        let bad = pi1_certificate(&spine_presentation(), &[vec![2, 1, 3, 4, 5], vec![1, 2, 3, 4, 5]]).unwrap();
        let r = main_theorem_report(&tri, &bad);
        assert_eq!(r.failed, vec!["pi1 certificate"]);
    }
}
