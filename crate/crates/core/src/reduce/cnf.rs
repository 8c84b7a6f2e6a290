use alloc::vec::Vec;

use crate::{Error, Result};

/// A 3-CNF formula. Literals use the DIMACS convention: variable `i` (1-based)
/// appears as `i` or `-i`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    /// Validates that every clause has exactly three literals over distinct
    /// variables in `1..=num_vars`.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        let mut out = Vec::with_capacity(clauses.len());
        for (j, clause) in clauses.into_iter().enumerate() {
            let lits: [i32; 3] = clause.as_slice().try_into().map_err(|_| {
                Error::InvalidParameter(alloc::format!(
                    "clause {j} has {} literals, expected 3",
                    clause.len()
                ))
            })?;
            for &lit in &lits {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > num_vars {
                    return Err(Error::InvalidParameter(alloc::format!(
                        "clause {j}: literal {lit} outside 1..={num_vars}"
                    )));
                }
            }
            let vars = lits.map(i32::unsigned_abs);
            if vars[0] == vars[1] || vars[0] == vars[2] || vars[1] == vars[2] {
                return Err(Error::InvalidParameter(alloc::format!(
                    "clause {j} repeats a variable"
                )));
            }
            out.push(lits);
        }
        Ok(CnfFormula {
            num_vars,
            clauses: out,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// Every clause is all-positive or all-negative.
    pub fn is_monotone(&self) -> bool {
        self.first_mixed_clause().is_none()
    }

    pub fn first_mixed_clause(&self) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| !(c.iter().all(|&l| l > 0) || c.iter().all(|&l| l < 0)))
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.first_unsatisfied(assignment).is_none()
    }

    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses.iter().position(|c| {
            !c.iter()
                .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }
}
