//! Word problem for right-angled Coxeter groups.
//!
//! Words are reduced by cancelling a letter against an equal letter that can
//! be shuffled next to it through commuting letters; the reduced word is then
//! brought to ShortLex form (lexicographically least among its commutation
//! class, under the declared generator order). Reduced words of the same
//! element differ only by commutations, so the result is canonical.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::system::CoxeterSystem;
use crate::error::{Error, Result};

/// A sequence of generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(pub Vec<usize>);

/// Canonical ShortLex representative of a group element.
pub type NormalForm = Word;

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(s: usize) -> Self {
        Word(vec![s])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Inverse word; every generator is an involution.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Order used for ball listings: length first, then lexicographic.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl CoxeterSystem {
    /// Parses a word. When every generator label is a single character the
    /// word may be written without separators (`"sts"`); otherwise labels are
    /// separated by whitespace. The empty string and `ε` are the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Word::identity());
        }
        let single_char = self.generators().iter().all(|g| g.chars().count() == 1);
        let tokens: Vec<String> = if single_char && !text.contains(char::is_whitespace) {
            text.chars().map(String::from).collect()
        } else {
            text.split_whitespace().map(String::from).collect()
        };
        Ok(Word(tokens.iter().map(|t| self.generator(t)).collect::<Result<_>>()?))
    }

    /// Inverse of [`parse_word`](Self::parse_word); the identity is `""`.
    pub fn format_word(&self, w: &Word) -> String {
        let single_char = self.generators().iter().all(|g| g.chars().count() == 1);
        let parts: Vec<&str> = w.0.iter().map(|&s| self.label(s)).collect();
        if single_char {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }

    fn require_right_angled(&self) -> Result<()> {
        if self.is_right_angled() {
            Ok(())
        } else {
            Err(Error::NotRightAngled)
        }
    }

    fn check_letters(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&s| s >= self.rank()) {
            Some(&s) => Err(Error::GeneratorOutOfRange(s)),
            None => Ok(()),
        }
    }

    /// Right-multiplies a reduced word by `s`, keeping it reduced.
    fn push_reduced(&self, word: &mut Vec<usize>, s: usize) {
        for i in (0..word.len()).rev() {
            let x = word[i];
            if x == s {
                word.remove(i);
                return;
            }
            if !self.commute(x, s) {
                break;
            }
        }
        word.push(s);
    }

    /// Lexicographically least rearrangement by commutations of a reduced word.
    fn shortlex(&self, mut word: Vec<usize>) -> Vec<usize> {
        let mut out = Vec::with_capacity(word.len());
        while !word.is_empty() {
            // letters that can be moved to the front: everything before them
            // commutes with them (equal letters never do)
            let mut best: Option<usize> = None;
            for i in 0..word.len() {
                let x = word[i];
                if word[..i].iter().all(|&y| y != x && self.commute(x, y)) && best.is_none_or(|b| x < word[b]) {
                    best = Some(i);
                }
            }
            let i = best.expect("first letter is always movable");
            out.push(word.remove(i));
        }
        out
    }

    /// ShortLex normal form of `w`.
    pub fn reduce(&self, w: &Word) -> Result<NormalForm> {
        self.require_right_angled()?;
        self.check_letters(w)?;
        let mut reduced = Vec::with_capacity(w.len());
        for &s in &w.0 {
            self.push_reduced(&mut reduced, s);
        }
        Ok(Word(self.shortlex(reduced)))
    }

    /// Normal form of `w · s`.
    pub fn multiply(&self, w: &NormalForm, s: usize) -> Result<NormalForm> {
        let mut v = w.0.clone();
        v.push(s);
        self.reduce(&Word(v))
    }

    /// All normal forms of length at most `r`, in ShortLex order.
    pub fn ball(&self, r: usize) -> Result<Vec<NormalForm>> {
        self.require_right_angled()?;
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        seen.insert(Word::identity());
        let mut all = vec![Word::identity()];
        let mut frontier = vec![Word::identity()];
        for len in 1..=r {
            let mut next = BTreeSet::new();
            for w in &frontier {
                for s in 0..self.rank() {
                    let v = self.multiply(w, s)?;
                    if v.len() == len && !seen.contains(&v) {
                        next.insert(v);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next.iter().cloned().collect();
            seen.extend(next);
            all.extend(frontier.iter().cloned());
        }
        all.sort_by(Word::shortlex_cmp);
        Ok(all)
    }

    /// Set of letters that can end a reduced expression of `w` (its right
    /// descents).
    pub fn right_descents(&self, w: &NormalForm) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &x) in w.0.iter().enumerate() {
            if w.0[i + 1..].iter().all(|&y| y != x && self.commute(x, y)) {
                out.push(x);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Shortest element of `w W_T`: right-multiply by letters of `T` while
    /// that shortens the word.
    pub fn min_coset_rep(&self, w: &Word, t: &[usize]) -> Result<NormalForm> {
        self.require_right_angled()?;
        if !self.is_spherical(t)? {
            return Err(Error::NotSpherical(self.labels(t)));
        }
        let mut current = self.reduce(w)?;
        loop {
            let shorter = t.iter().find_map(|&s| {
                let v = self.multiply(&current, s).ok()?;
                (v.len() < current.len()).then_some(v)
            });
            match shorter {
                Some(v) => current = v,
                None => return Ok(current),
            }
        }
    }

    /// Whether `w ∈ W_T`.
    pub fn in_special_subgroup(&self, w: &Word, t: &[usize]) -> Result<bool> {
        let nf = self.reduce(w)?;
        Ok(nf.0.iter().all(|s| t.contains(s)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::system::{racg_from_flag, CoxeterMatrix};
    use crate::simplicial::SimplicialComplex;

    fn dihedral_inf() -> CoxeterSystem {
        racg_from_flag(&SimplicialComplex::faces_closure(&[vec!["s"], vec!["t"]]).unwrap()).unwrap()
    }

    fn klein() -> CoxeterSystem {
        racg_from_flag(&SimplicialComplex::faces_closure(&[vec!["s", "t"]]).unwrap()).unwrap()
    }

    #[test]
    fn cancellations() {
        let sys = klein();
        let w = |x: &str| sys.parse_word(x).unwrap();
        assert_eq!(sys.reduce(&w("ss")).unwrap(), Word::identity());
        assert_eq!(sys.reduce(&w("sts")).unwrap(), w("t"));
        assert_eq!(sys.reduce(&w("ts")).unwrap(), w("st"));
        let d = dihedral_inf();
        let w = |x: &str| d.parse_word(x).unwrap();
        assert_eq!(d.reduce(&w("stts")).unwrap(), Word::identity());
        assert_eq!(d.reduce(&w("sts")).unwrap(), w("sts"));
    }

    #[test]
    fn balls() {
        let d = dihedral_inf();
        let b: Vec<String> = d.ball(2).unwrap().iter().map(|w| d.format_word(w)).collect();
        assert_eq!(b, vec!["", "s", "t", "st", "ts"]);
        let k = klein();
        assert_eq!(k.ball(2).unwrap().len(), 4);
        assert_eq!(k.ball(7).unwrap().len(), 4);
        assert_eq!(d.ball(0).unwrap(), vec![Word::identity()]);
    }

    #[test]
    fn coset_reps() {
        let d = dihedral_inf();
        let s = vec![0];
        assert_eq!(d.min_coset_rep(&Word::identity(), &s).unwrap(), Word::identity());
        assert_eq!(d.min_coset_rep(&Word::letter(0), &s).unwrap(), Word::identity());
        assert_eq!(d.min_coset_rep(&d.parse_word("ts").unwrap(), &s).unwrap(), Word::letter(1));
        assert!(matches!(d.min_coset_rep(&Word::identity(), &[0, 1]), Err(Error::NotSpherical(_))));
    }

    #[test]
    fn special_subgroups() {
        let d = dihedral_inf();
        assert!(d.in_special_subgroup(&Word::identity(), &[]).unwrap());
        assert!(!d.in_special_subgroup(&d.parse_word("st").unwrap(), &[0]).unwrap());
        let k = klein();
        assert!(k.in_special_subgroup(&k.parse_word("sts").unwrap(), &[1]).unwrap());
    }

    #[test]
    fn descents() {
        let k = klein();
        assert_eq!(k.right_descents(&k.parse_word("st").unwrap()), vec![0, 1]);
        let d = dihedral_inf();
        assert_eq!(d.right_descents(&d.parse_word("st").unwrap()), vec![1]);
    }

    #[test]
    fn non_right_angled_rejected() {
        let m = CoxeterMatrix::new(vec!["s".into(), "t".into()], [((0, 1), 3)]).unwrap();
        let sys = CoxeterSystem::new(m);
        assert!(matches!(sys.reduce(&Word::letter(0)), Err(Error::NotRightAngled)));
    }

    #[test]
    fn multi_character_labels() {
        let l = SimplicialComplex::faces_closure(&[vec!["ab", "cd"], vec!["ef"]]).unwrap();
        let sys = racg_from_flag(&l).unwrap();
        let w = sys.parse_word("cd ab cd ef").unwrap();
        let nf = sys.reduce(&w).unwrap();
        assert_eq!(sys.format_word(&nf), "ab ef");
        assert!(sys.parse_word("zz").is_err());
    }
}
