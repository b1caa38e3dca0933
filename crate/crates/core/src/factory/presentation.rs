use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// A generator or its formal inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    fn inv(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// A finite group presentation. Generators are single lowercase ASCII
/// letters; in relator strings the uppercase letter is the inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<char>,
    relators: Vec<Vec<Letter>>,
}

/// `{"generators":["x","y"],"relators":["xxxxxYXYX", ...]}`. Whitespace in
/// relator strings is ignored.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
}

impl Presentation {
    /// Parses and freely reduces the relators. A relator that reduces to the
    /// empty word is rejected.
    pub fn new<S: AsRef<str>>(generators: &[S], relators: &[S]) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            let g = g.as_ref();
            let mut chars = g.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_lowercase() => {
                    if gens.contains(&c) {
                        return Err(Error::InvalidPresentation(format!("duplicate generator `{c}`")));
                    }
                    gens.push(c)
                }
                _ => {
                    return Err(Error::InvalidPresentation(format!(
                        "generator `{g}` is not a single lowercase letter"
                    )))
                }
            }
        }
        let mut rels = Vec::with_capacity(relators.len());
        for r in relators {
            let mut word: Vec<Letter> = Vec::new();
            for c in r.as_ref().chars().filter(|c| !c.is_whitespace()) {
                let lower = c.to_ascii_lowercase();
                let generator = gens
                    .iter()
                    .position(|&g| g == lower)
                    .ok_or_else(|| Error::InvalidPresentation(format!("relator uses unknown generator `{c}`")))?;
                let letter = Letter {
                    generator,
                    inverse: c.is_ascii_uppercase(),
                };
                if word.last() == Some(&letter.inv()) {
                    word.pop();
                } else {
                    word.push(letter);
                }
            }
            if word.is_empty() {
                return Err(Error::InvalidPresentation(format!(
                    "relator `{}` reduces to the empty word",
                    r.as_ref()
                )));
            }
            rels.push(word);
        }
        Ok(Presentation {
            generators: gens,
            relators: rels,
        })
    }

    pub fn from_json(json: &PresentationJson) -> Result<Self> {
        Self::new(&json.generators, &json.relators)
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            generators: self.generators.iter().map(|c| c.to_string()).collect(),
            relators: (0..self.relators.len()).map(|i| self.relator_string(i)).collect(),
        }
    }

    pub fn generators(&self) -> &[char] {
        &self.generators
    }

    pub fn relators(&self) -> &[Vec<Letter>] {
        &self.relators
    }

    pub fn relator_string(&self, i: usize) -> String {
        self.relators[i]
            .iter()
            .map(|l| {
                let c = self.generators[l.generator];
                if l.inverse {
                    c.to_ascii_uppercase()
                } else {
                    c
                }
            })
            .collect()
    }

    /// Exponent sums: row `i` is relator `i`, column `j` generator `j`.
    pub fn abelianized(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators.len()];
                for l in r {
                    row[l.generator] += if l.inverse { -1 } else { 1 };
                }
                row
            })
            .collect()
    }
}

/// Number of edges each generator loop is subdivided into.
pub const LOOP_EDGES: usize = 3;

/// Simplicial triangulation of the presentation 2-complex.
///
/// The single 0-cell is `o`; generator `x` is the loop `o, x.1, x.2`. A
/// relator of length `n` walks a cyclic sequence of `3n` loop vertices
/// `p_j`. Its 2-cell is a collar of fresh vertices `r{i}.q{j}` followed by a
/// cone to `r{i}.c`: triangles `p_j p_{j+1} q_j`, `p_{j+1} q_j q_{j+1}` and
/// `c q_j q_{j+1}`. The collar keeps triangles distinct when the relator runs
/// along the same loop edge more than once.
pub fn presentation_complex(p: &Presentation) -> SimplicialComplex {
    let mut labels = vec!["o".to_string()];
    let mut loops = Vec::with_capacity(p.generators.len());
    for g in &p.generators {
        let a = labels.len();
        labels.push(format!("{g}.1"));
        labels.push(format!("{g}.2"));
        loops.push([0, a, a + 1]);
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for lp in &loops {
        for j in 0..LOOP_EDGES {
            cells.push(vec![lp[j], lp[(j + 1) % LOOP_EDGES]]);
        }
    }
    for (i, rel) in p.relators.iter().enumerate() {
        let mut boundary = Vec::with_capacity(LOOP_EDGES * rel.len());
        for l in rel {
            let lp = loops[l.generator];
            if l.inverse {
                boundary.extend([lp[0], lp[2], lp[1]]);
            } else {
                boundary.extend(lp);
            }
        }
        let n = boundary.len();
        let q0 = labels.len();
        for j in 0..n {
            labels.push(format!("r{i}.q{j}"));
        }
        let apex = labels.len();
        labels.push(format!("r{i}.c"));
        for j in 0..n {
            let (pj, pk) = (boundary[j], boundary[(j + 1) % n]);
            let (qj, qk) = (q0 + j, q0 + (j + 1) % n);
            cells.push(vec![pj, pk, qj]);
            cells.push(vec![pk, qj, qk]);
            cells.push(vec![apex, qj, qk]);
        }
    }
    SimplicialComplex::from_indexed(labels, cells)
}
