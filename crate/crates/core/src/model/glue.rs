//! Glue labels and symmetric glue functions.

use super::ModelError;

/// Index into a system's glue table. Id 0 is the null glue.
pub type GlueId = usize;

pub const NULL_GLUE: GlueId = 0;

/// A symmetric strength table over glue ids, with id 0 reserved for the
/// null glue that binds nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueFunction {
    names: Vec<String>,
    strengths: Vec<u32>,
    diagonal: bool,
}

impl GlueFunction {
    /// Builds a function from the non-null glues. `names` and `matrix`
    /// exclude the null glue; it is added as id 0.
    pub fn new(names: Vec<String>, matrix: Vec<Vec<u32>>) -> Result<Self, ModelError> {
        let n = names.len();
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(ModelError::GlueMatrixShape { expected: n });
        }
        for i in 0..n {
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(ModelError::AsymmetricGlues {
                        a: names[i].clone(),
                        b: names[j].clone(),
                    });
                }
            }
        }
        check_unique(&names)?;
        let size = n + 1;
        let mut strengths = vec![0; size * size];
        for i in 0..n {
            for j in 0..n {
                strengths[(i + 1) * size + j + 1] = matrix[i][j];
            }
        }
        let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || matrix[i][j] == 0));
        let mut all = Vec::with_capacity(size);
        all.push("null".to_string());
        all.extend(names);
        Ok(GlueFunction {
            names: all,
            strengths,
            diagonal,
        })
    }

    /// A diagonal function where glue `i` binds only itself.
    pub fn diagonal(names: Vec<String>, strengths: Vec<u32>) -> Result<Self, ModelError> {
        let n = names.len();
        if strengths.len() != n {
            return Err(ModelError::GlueMatrixShape { expected: n });
        }
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { strengths[i] } else { 0 })
                    .collect()
            })
            .collect();
        GlueFunction::new(names, matrix)
    }

    /// Number of glues including the null glue.
    pub fn size(&self) -> usize {
        self.names.len()
    }

    /// Number of non-null glues.
    pub fn glue_count(&self) -> usize {
        self.names.len() - 1
    }

    pub fn is_diagonal(&self) -> bool {
        self.diagonal
    }

    pub fn name(&self, id: GlueId) -> &str {
        &self.names[id]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<GlueId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn glue_strength(&self, a: GlueId, b: GlueId) -> Result<u32, ModelError> {
        let size = self.size();
        for id in [a, b] {
            if id >= size {
                return Err(ModelError::InvalidGlue { id, size });
            }
        }
        Ok(self.strength(a, b))
    }

    /// Unchecked lookup; panics on out-of-range ids.
    #[inline]
    pub fn strength(&self, a: GlueId, b: GlueId) -> u32 {
        self.strengths[a * self.size() + b]
    }

    /// The matrix over non-null glues, row-major.
    pub fn matrix(&self) -> Vec<Vec<u32>> {
        (1..self.size())
            .map(|i| (1..self.size()).map(|j| self.strength(i, j)).collect())
            .collect()
    }
}

fn check_unique(names: &[String]) -> Result<(), ModelError> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if n == "null" || !seen.insert(n.as_str()) {
            return Err(ModelError::DuplicateName(n.clone()));
        }
    }
    Ok(())
}
