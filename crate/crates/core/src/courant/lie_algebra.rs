//! Finite-dimensional Lie algebras by structure constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::symcore::{rat, Rational};

/// `structure[i][j][k]` is the coefficient of `e_k` in `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    pub name: String,
    structure: Vec<Vec<Vec<Rational>>>,
}

impl LieAlgebra {
    /// Validate skew-symmetry and the Jacobi identity on the basis.
    pub fn new(name: &str, structure: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let d = structure.len();
        if structure.iter().any(|row| row.len() != d || row.iter().any(|c| c.len() != d)) {
            return Err(Error::InvalidStructure("structure constants must form a d×d×d array".into()));
        }
        let g = LieAlgebra { name: name.into(), structure };
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if g.structure[i][j][k] != -g.structure[j][i][k].clone() {
                        return Err(Error::InvalidStructure(format!("bracket [e{i}, e{j}] is not skew")));
                    }
                }
                for k in 0..d {
                    let (a, b, c) = (g.unit(i), g.unit(j), g.unit(k));
                    let t1 = g.bracket(&a, &g.bracket(&b, &c));
                    let t2 = g.bracket(&g.bracket(&a, &b), &c);
                    let t3 = g.bracket(&b, &g.bracket(&a, &c));
                    if (0..d).any(|m| t1[m] != &t2[m] + &t3[m]) {
                        return Err(Error::InvalidStructure(format!("Jacobi fails on e{i}, e{j}, e{k}")));
                    }
                }
            }
        }
        Ok(g)
    }

    /// Rotations: `[e_i, e_j] = ε_{ijk} e_k`.
    pub fn so3() -> Self {
        let mut s = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            s[i][j][k] = rat(1);
            s[j][i][k] = rat(-1);
        }
        LieAlgebra::new("so3", s).expect("so3 is a Lie algebra")
    }

    pub fn dim(&self) -> usize {
        self.structure.len()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.structure[i][j][k]
    }

    pub fn unit(&self, i: usize) -> Vec<Rational> {
        (0..self.dim()).map(|j| if i == j { rat(1) } else { rat(0) }).collect()
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for i in 0..d {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if v[j].is_zero() {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &uv * &self.structure[i][j][k];
                }
            }
        }
        out
    }

    /// Killing form `tr(ad_a ad_b)`.
    pub fn killing_form(&self) -> Vec<Vec<Rational>> {
        let d = self.dim();
        let mut g = vec![vec![Rational::zero(); d]; d];
        for (a, row) in g.iter_mut().enumerate() {
            for (b, entry) in row.iter_mut().enumerate() {
                for c in 0..d {
                    for e in 0..d {
                        *entry += &self.structure[a][e][c] * &self.structure[b][c][e];
                    }
                }
            }
        }
        g
    }

    /// Check that a Gram matrix is symmetric and ad-invariant.
    pub fn check_invariant_form(&self, gram: &[Vec<Rational>]) -> Result<()> {
        let d = self.dim();
        if gram.len() != d || gram.iter().any(|r| r.len() != d) {
            return Err(Error::RankMismatch { expected: d, found: gram.len() });
        }
        let pair = |u: &[Rational], v: &[Rational]| {
            let mut s = Rational::zero();
            for i in 0..d {
                for j in 0..d {
                    s += &u[i] * &gram[i][j] * &v[j];
                }
            }
            s
        };
        for a in 0..d {
            for b in 0..d {
                if gram[a][b] != gram[b][a] {
                    return Err(Error::InvalidStructure("pairing matrix is not symmetric".into()));
                }
                for c in 0..d {
                    let (ua, ub, uc) = (self.unit(a), self.unit(b), self.unit(c));
                    let s = pair(&self.bracket(&ua, &ub), &uc) + pair(&ub, &self.bracket(&ua, &uc));
                    if !s.is_zero() {
                        return Err(Error::InvalidStructure("pairing is not ad-invariant".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so3_killing_form_is_minus_two() {
        let g = LieAlgebra::so3();
        let k = g.killing_form();
        for (i, row) in k.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, if i == j { rat(-2) } else { rat(0) });
            }
        }
        g.check_invariant_form(&k).unwrap();
    }

    #[test]
    fn non_invariant_form_is_rejected() {
        let g = LieAlgebra::so3();
        let mut m = g.killing_form();
        m[0][0] = rat(1);
        assert!(g.check_invariant_form(&m).is_err());
    }
}
