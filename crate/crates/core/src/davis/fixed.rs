use crate::coxeter::Word;
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

use super::ball::{DavisBall, SphericalCoset};
use crate::limits::check_cells;

/// Maximal simplex size minus one; `-1` for the empty complex.
pub fn dim_of(k: &SimplicialComplex) -> isize {
    k.dim()
}

/// Full subcomplex on the cosets fixed by `g`.
///
/// Inside the chamber `u`, the coset `uW_T` is fixed exactly when `T`
/// contains the support of `u⁻¹gu`, so the fixed chains of that chamber run
/// from this support up to maximal spherical subsets.
pub fn fixed_subcomplex(ball: &DavisBall, g: &Word) -> Result<SimplicialComplex> {
    if ball.system().reduce(g)?.is_empty() {
        return Err(Error::IdentityElement);
    }
    build(ball, std::slice::from_ref(g))
}

/// `X^#`: union of the fixed subcomplexes of the generators.
pub fn hash_union_sharp(ball: &DavisBall) -> Result<SimplicialComplex> {
    let gens: Vec<Word> = (0..ball.system().rank()).map(Word::letter).collect();
    build(ball, &gens)
}

fn build(ball: &DavisBall, elements: &[Word]) -> Result<SimplicialComplex> {
    let sys = ball.system();
    let mut chains: Vec<Vec<SphericalCoset>> = Vec::new();
    for u in ball.chambers() {
        for g in elements {
            let conj = sys.reduce(&u.inverse().concat(g).concat(u))?;
            let mut support = conj.0.clone();
            support.sort_unstable();
            support.dedup();
            for flag in ball.flags_above(&support) {
                let chain = flag
                    .into_iter()
                    .map(|t| {
                        Ok(SphericalCoset {
                            rep: sys.min_coset_rep(u, &t)?,
                            t,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                chains.push(chain);
                check_cells("fixed chains", chains.len() as u64)?;
            }
        }
    }
    Ok(ball.order_complex(chains))
}

/// `X^sing`: chains whose smallest coset has `T ≠ ∅`. Such a chain has
/// stabiliser `uW_Tu⁻¹`; since every coset above has a larger `T`, this is
/// the full subcomplex on cosets with `T ≠ ∅`.
pub fn singular_subcomplex(ball: &DavisBall) -> Result<SimplicialComplex> {
    let (k, cosets) = ball.realization_with_cosets()?;
    Ok(k.full_subcomplex(|v| !cosets[v].t.is_empty()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{racg_from_flag, CoxeterSystem};
    use crate::davis::davis_ball;
    use crate::simplicial::homology;

    fn sys(maximal: &[Vec<&str>]) -> CoxeterSystem {
        racg_from_flag(&SimplicialComplex::faces_closure(maximal).unwrap()).unwrap()
    }

    #[test]
    fn klein_four_ball() {
        let w = sys(&[vec!["s", "t"]]);
        let b = davis_ball(&w, 2).unwrap();
        assert_eq!(b.chambers().len(), 4);
        assert_eq!(b.coset_count(), 9);
        let k = b.realization().unwrap();
        // barycentric subdivision of a square 2-cell
        assert_eq!(k.f_vector(), vec![9, 16, 8]);
        assert!(homology(&k, true).is_trivial());

        let wall = fixed_subcomplex(&b, &Word::letter(0)).unwrap();
        assert_eq!(wall.f_vector(), vec![3, 2]);
        let mut v: Vec<&str> = wall.vertex_labels().iter().map(String::as_str).collect();
        v.sort();
        assert_eq!(v, ["W{s,t}", "W{s}", "tW{s}"]);

        let sharp = hash_union_sharp(&b).unwrap();
        let sing = singular_subcomplex(&b).unwrap();
        assert_eq!(sharp.f_vector(), vec![5, 4]);
        assert!(sharp.is_subcomplex_of(&sing));
        assert_eq!(dim_of(&sing), 1);
        assert!(homology(&sing, true).is_trivial());
        assert_eq!(b.singular_dim(), 1);
        assert_eq!(b.realization_dim(), 2);
    }

    #[test]
    fn infinite_dihedral_ball() {
        let w = sys(&[vec!["s"], vec!["t"]]);
        let b = davis_ball(&w, 2).unwrap();
        let reps: Vec<String> = b.chambers().iter().map(|u| w.format_word(u)).collect();
        assert_eq!(reps, ["", "s", "t", "st", "ts"]);
        let k = b.realization().unwrap();
        assert_eq!(k.f_vector(), vec![11, 10]);
        assert!(homology(&k, true).is_trivial());
        let wall = fixed_subcomplex(&b, &Word::letter(0)).unwrap();
        assert_eq!(wall.vertex_labels(), ["W{s}"]);
        let sharp = hash_union_sharp(&b).unwrap();
        assert_eq!(dim_of(&sharp), 0);
        assert_eq!(dim_of(&singular_subcomplex(&b).unwrap()), 0);
        assert_eq!((b.singular_dim(), b.realization_dim()), (0, 1));
    }

    #[test]
    fn reflection_walls() {
        let w = sys(&[vec!["s"], vec!["t"]]);
        let b = davis_ball(&w, 3).unwrap();
        let g = w.parse_word("sts").unwrap();
        let wall = fixed_subcomplex(&b, &g).unwrap();
        assert_eq!(wall.vertex_labels(), ["sW{t}"]);
        assert!(matches!(fixed_subcomplex(&b, &w.parse_word("ss").unwrap()), Err(Error::IdentityElement)));
    }

    #[test]
    fn radius_zero_is_one_chamber() {
        let w = sys(&[vec!["a", "b"], vec!["b", "c"]]);
        let b = davis_ball(&w, 0).unwrap();
        let k = b.realization().unwrap();
        let c = crate::davis::chamber(w.flag_complex().unwrap()).unwrap();
        assert_eq!(k.f_vector(), c.k.f_vector());
        assert_eq!(singular_subcomplex(&b).unwrap().f_vector(), c.mirror_union().f_vector());
    }

    #[test]
    fn order_relation() {
        let w = sys(&[vec!["s", "t"]]);
        let b = davis_ball(&w, 2).unwrap();
        let cosets = b.cosets().unwrap();
        let json = b.to_json().unwrap();
        for &[x, y] in &json.order {
            assert!(b.contains(&cosets[x], &cosets[y]));
        }
        let pairs = cosets
            .iter()
            .flat_map(|a| cosets.iter().map(move |c| (a, c)))
            .filter(|(a, c)| a != c && b.contains(a, c))
            .count();
        assert_eq!(pairs, json.order.len());
        assert_eq!(json.cosets[0].rep, "");
        assert!(cosets.iter().all(|c| b.is_member(c)));
    }
}
