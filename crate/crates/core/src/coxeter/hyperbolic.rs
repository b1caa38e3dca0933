use serde::{Deserialize, Serialize};

use super::system::{nerve, CoxeterSystem};
use crate::simplicial::squares::{flag_witness, induced_squares};

/// Four generators `(s, t, u, v)` with `u, v` each commuting with `s` and
/// `t`, while `m_st = m_uv = ∞`. Then `⟨s,t⟩ × ⟨u,v⟩ ≅ D∞ × D∞ ⊇ Z²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Z2Witness {
    pub s: String,
    pub t: String,
    pub u: String,
    pub v: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperbolicityReport {
    pub right_angled: bool,
    pub flag: bool,
    pub empty_squares: Vec<[String; 4]>,
    /// Decided only for right-angled systems.
    pub hyperbolic: Option<bool>,
    pub z2_witness: Option<Z2Witness>,
}

/// Flag-no-squares test on the nerve. For right-angled systems the nerve is
/// the clique complex of the commutation graph, so it is flag and the answer
/// depends on induced 4-cycles only.
pub fn hyperbolicity(sys: &CoxeterSystem) -> HyperbolicityReport {
    let l = match sys.flag_complex() {
        Some(l) => l.clone(),
        None => nerve(sys),
    };
    let flag = flag_witness(&l).is_none();
    let squares = induced_squares(&l);
    let empty_squares = squares.iter().map(|q| q.map(|v| l.label(v).to_string())).collect();
    if !sys.is_right_angled() {
        return HyperbolicityReport {
            right_angled: false,
            flag,
            empty_squares,
            hyperbolic: None,
            z2_witness: None,
        };
    }
    // square a-b-c-d: a,c and b,d are the non-commuting pairs
    let z2_witness = squares.first().map(|&[a, b, c, d]| Z2Witness {
        s: l.label(a).to_string(),
        t: l.label(c).to_string(),
        u: l.label(b).to_string(),
        v: l.label(d).to_string(),
    });
    HyperbolicityReport {
        right_angled: true,
        flag,
        hyperbolic: Some(flag && squares.is_empty()),
        empty_squares,
        z2_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::system::racg_from_flag;
    use crate::simplicial::SimplicialComplex;

    fn cycle(n: usize) -> SimplicialComplex {
        let edges: Vec<Vec<String>> = (0..n).map(|i| vec![format!("v{}", i + 1), format!("v{}", (i + 1) % n + 1)]).collect();
        SimplicialComplex::faces_closure(&edges).unwrap()
    }

    #[test]
    fn four_cycle_contains_z2() {
        let sys = racg_from_flag(&cycle(4)).unwrap();
        let r = hyperbolicity(&sys);
        assert_eq!(r.hyperbolic, Some(false));
        let w = r.z2_witness.unwrap();
        let g = |x: &str| sys.generator(x).unwrap();
        let mut st = [w.s.clone(), w.t.clone()];
        st.sort();
        let mut uv = [w.u.clone(), w.v.clone()];
        uv.sort();
        assert_eq!(st, ["v1".to_string(), "v3".to_string()]);
        assert_eq!(uv, ["v2".to_string(), "v4".to_string()]);
        for a in [&w.s, &w.t] {
            for b in [&w.u, &w.v] {
                assert_eq!(sys.entry(g(a), g(b)), Some(2));
            }
        }
        assert_eq!(sys.entry(g(&w.s), g(&w.t)), None);
        assert_eq!(sys.entry(g(&w.u), g(&w.v)), None);
    }

    #[test]
    fn five_cycle_is_hyperbolic() {
        let r = hyperbolicity(&racg_from_flag(&cycle(5)).unwrap());
        assert_eq!(r.hyperbolic, Some(true));
        assert!(r.z2_witness.is_none());
    }
}
