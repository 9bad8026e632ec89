//! Mixed search spaces and the solutions that live in them.
//!
//! A [`SearchSpace`] is an ordered list of dimensions. Solutions store the
//! continuous components first and the discrete components second, each
//! group in the order the dimensions were declared. Discrete components are
//! kept as `i64`: the integer itself for an [`DimensionSpec::IntegerRange`],
//! the index into the value list for a [`DimensionSpec::Categorical`].

use std::collections::HashSet;

use rand::Rng;

use crate::error::{Error, Result};

/// Domain of one decision variable.
#[derive(Debug, Clone, PartialEq)]
pub enum DimensionSpec {
    Continuous { lo: f64, hi: f64 },
    /// Consecutive integers `lo..=hi`.
    IntegerRange { lo: i64, hi: i64 },
    /// Unordered symbols; stored in solutions by index.
    Categorical { values: Vec<String> },
}

impl DimensionSpec {
    pub fn continuous(lo: f64, hi: f64) -> Self {
        DimensionSpec::Continuous { lo, hi }
    }

    pub fn integer(lo: i64, hi: i64) -> Self {
        DimensionSpec::IntegerRange { lo, hi }
    }

    pub fn categorical<I, S>(values: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        DimensionSpec::Categorical {
            values: values.into_iter().map(Into::into).collect(),
        }
    }

    pub fn is_continuous(&self) -> bool {
        matches!(self, DimensionSpec::Continuous { .. })
    }

    fn validate(&self, index: usize) -> Result<()> {
        let invalid = |reason: &str| Error::InvalidDimension {
            index,
            reason: reason.to_string(),
        };
        match self {
            DimensionSpec::Continuous { lo, hi } => {
                if !lo.is_finite() || !hi.is_finite() {
                    return Err(invalid("continuous bounds must be finite"));
                }
                if lo >= hi {
                    return Err(invalid("continuous bounds require lo < hi"));
                }
            }
            DimensionSpec::IntegerRange { lo, hi } => {
                if lo > hi {
                    return Err(invalid("integer range requires lo <= hi"));
                }
            }
            DimensionSpec::Categorical { values } => {
                if values.is_empty() {
                    return Err(invalid("categorical value set is empty"));
                }
                let distinct: HashSet<&String> = values.iter().collect();
                if distinct.len() != values.len() {
                    return Err(invalid("categorical values must be distinct"));
                }
            }
        }
        Ok(())
    }
}

/// Closed interval of a continuous dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub lo: f64,
    pub hi: f64,
}

impl Bounds {
    pub fn range(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn clamp(&self, v: f64) -> f64 {
        v.clamp(self.lo, self.hi)
    }
}

/// Domain of one discrete component.
#[derive(Debug, Clone, PartialEq)]
pub enum DiscreteDomain {
    Integer { lo: i64, hi: i64 },
    Categorical { values: Vec<String> },
}

impl DiscreteDomain {
    /// Number of admissible values.
    pub fn cardinality(&self) -> u64 {
        match self {
            DiscreteDomain::Integer { lo, hi } => (hi - lo) as u64 + 1,
            DiscreteDomain::Categorical { values } => values.len() as u64,
        }
    }

    /// Smallest and largest admissible code.
    pub fn code_range(&self) -> (i64, i64) {
        match self {
            DiscreteDomain::Integer { lo, hi } => (*lo, *hi),
            DiscreteDomain::Categorical { values } => (0, values.len() as i64 - 1),
        }
    }

    pub fn contains(&self, code: i64) -> bool {
        let (lo, hi) = self.code_range();
        (lo..=hi).contains(&code)
    }
}

/// The domain of a mixed-variable problem.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpace {
    dims: Vec<DimensionSpec>,
    continuous: Vec<Bounds>,
    discrete: Vec<DiscreteDomain>,
}

impl SearchSpace {
    pub fn new(dims: Vec<DimensionSpec>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut continuous = Vec::new();
        let mut discrete = Vec::new();
        for (index, dim) in dims.iter().enumerate() {
            dim.validate(index)?;
            match dim {
                DimensionSpec::Continuous { lo, hi } => continuous.push(Bounds { lo: *lo, hi: *hi }),
                DimensionSpec::IntegerRange { lo, hi } => {
                    discrete.push(DiscreteDomain::Integer { lo: *lo, hi: *hi })
                }
                DimensionSpec::Categorical { values } => discrete.push(DiscreteDomain::Categorical {
                    values: values.clone(),
                }),
            }
        }
        Ok(SearchSpace {
            dims,
            continuous,
            discrete,
        })
    }

    pub fn dims(&self) -> &[DimensionSpec] {
        &self.dims
    }

    /// Total dimension `D = n_c + n_d`.
    pub fn dim(&self) -> usize {
        self.dims.len()
    }

    pub fn n_continuous(&self) -> usize {
        self.continuous.len()
    }

    pub fn n_discrete(&self) -> usize {
        self.discrete.len()
    }

    pub fn continuous(&self) -> &[Bounds] {
        &self.continuous
    }

    pub fn discrete(&self) -> &[DiscreteDomain] {
        &self.discrete
    }

    /// Checks component counts only.
    pub fn check_shape(&self, sol: &MixedSolution) -> Result<()> {
        if sol.cont.len() != self.n_continuous() {
            return Err(Error::LengthMismatch {
                expected: self.n_continuous(),
                actual: sol.cont.len(),
            });
        }
        if sol.disc.len() != self.n_discrete() {
            return Err(Error::LengthMismatch {
                expected: self.n_discrete(),
                actual: sol.disc.len(),
            });
        }
        Ok(())
    }

    /// Checks counts and domain membership of every component.
    ///
    /// Reported indices are positions within the continuous block followed
    /// by the discrete block.
    pub fn check(&self, sol: &MixedSolution) -> Result<()> {
        self.check_shape(sol)?;
        for (index, (b, v)) in self.continuous.iter().zip(&sol.cont).enumerate() {
            if !(b.lo..=b.hi).contains(v) {
                return Err(Error::OutOfDomain { index });
            }
        }
        for (k, (d, v)) in self.discrete.iter().zip(&sol.disc).enumerate() {
            if !d.contains(*v) {
                return Err(Error::OutOfDomain {
                    index: self.n_continuous() + k,
                });
            }
        }
        Ok(())
    }

    pub fn contains(&self, sol: &MixedSolution) -> bool {
        self.check(sol).is_ok()
    }

    /// Draws a solution uniformly over every dimension.
    ///
    /// Draw order: continuous components in order, then discrete components
    /// in order, one draw each.
    pub fn random_solution<R: Rng + ?Sized>(&self, rng: &mut R) -> MixedSolution {
        let cont = self
            .continuous
            .iter()
            .map(|b| rng.gen_range(b.lo..=b.hi))
            .collect();
        let disc = self
            .discrete
            .iter()
            .map(|d| {
                let (lo, hi) = d.code_range();
                rng.gen_range(lo..=hi)
            })
            .collect();
        MixedSolution { cont, disc }
    }

    /// Projects continuous and integer components into their bounds.
    ///
    /// Categorical codes are left untouched.
    pub fn clamp(&self, sol: &MixedSolution) -> Result<MixedSolution> {
        let mut out = sol.clone();
        self.clamp_in_place(&mut out)?;
        Ok(out)
    }

    pub fn clamp_in_place(&self, sol: &mut MixedSolution) -> Result<()> {
        self.check_shape(sol)?;
        for (b, v) in self.continuous.iter().zip(sol.cont.iter_mut()) {
            *v = b.clamp(*v);
        }
        for (d, v) in self.discrete.iter().zip(sol.disc.iter_mut()) {
            if let DiscreteDomain::Integer { lo, hi } = d {
                *v = (*v).clamp(*lo, *hi);
            }
        }
        Ok(())
    }

    /// Symbol held by discrete component `k` of `sol`, rendered as text.
    pub fn discrete_label(&self, k: usize, code: i64) -> Option<String> {
        match self.discrete.get(k)? {
            DiscreteDomain::Integer { .. } => Some(code.to_string()),
            DiscreteDomain::Categorical { values } => {
                usize::try_from(code).ok().and_then(|i| values.get(i)).cloned()
            }
        }
    }
}

/// A point `X = (x_c, x_d)` of a [`SearchSpace`].
#[derive(Debug, Clone, PartialEq)]
pub struct MixedSolution {
    pub cont: Vec<f64>,
    pub disc: Vec<i64>,
}

impl MixedSolution {
    pub fn new(cont: Vec<f64>, disc: Vec<i64>) -> Self {
        MixedSolution { cont, disc }
    }
}

/// A population member: a solution with its cached objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct Firefly {
    pub solution: MixedSolution,
    pub fitness: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    fn space(dims: Vec<DimensionSpec>) -> SearchSpace {
        SearchSpace::new(dims).unwrap()
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert_eq!(SearchSpace::new(vec![]), Err(Error::EmptySpace));
        assert!(SearchSpace::new(vec![DimensionSpec::continuous(1.0, 1.0)]).is_err());
        assert!(SearchSpace::new(vec![DimensionSpec::continuous(0.0, f64::INFINITY)]).is_err());
        assert!(SearchSpace::new(vec![DimensionSpec::integer(3, 2)]).is_err());
        assert!(SearchSpace::new(vec![DimensionSpec::categorical(Vec::<String>::new())]).is_err());
        assert!(SearchSpace::new(vec![DimensionSpec::categorical(["a", "a"])]).is_err());
        assert!(SearchSpace::new(vec![DimensionSpec::integer(5, 5)]).is_ok());
    }

    #[test]
    fn layout_puts_continuous_first() {
        let s = space(vec![
            DimensionSpec::integer(0, 3),
            DimensionSpec::continuous(0.0, 1.0),
            DimensionSpec::categorical(["a", "b"]),
        ]);
        assert_eq!((s.dim(), s.n_continuous(), s.n_discrete()), (3, 1, 2));
        let x = s.random_solution(&mut seeded(1));
        assert_eq!((x.cont.len(), x.disc.len()), (1, 2));
    }

    #[test]
    fn random_solution_unit_interval() {
        let s = space(vec![DimensionSpec::continuous(0.0, 1.0)]);
        let mut rng = seeded(7);
        for _ in 0..100 {
            let x = s.random_solution(&mut rng);
            assert!((0.0..=1.0).contains(&x.cont[0]));
        }
    }

    #[test]
    fn random_solution_singleton_integer() {
        let s = space(vec![DimensionSpec::integer(5, 5)]);
        let mut rng = seeded(3);
        for _ in 0..50 {
            assert_eq!(s.random_solution(&mut rng).disc, vec![5]);
        }
    }

    #[test]
    fn random_solution_categorical_is_uniform() {
        let s = space(vec![DimensionSpec::categorical(["a", "b", "c"])]);
        let mut rng = seeded(11);
        let n = 3000;
        let mut counts = [0usize; 3];
        for _ in 0..n {
            counts[s.random_solution(&mut rng).disc[0] as usize] += 1;
        }
        let tol = 3.0 / (n as f64).sqrt();
        for c in counts {
            assert!((c as f64 / n as f64 - 1.0 / 3.0).abs() < tol, "{counts:?}");
        }
    }

    #[test]
    fn clamp_examples() {
        let s = space(vec![
            DimensionSpec::continuous(0.0, 1.0),
            DimensionSpec::integer(2, 9),
            DimensionSpec::categorical(["a", "b"]),
        ]);
        let x = MixedSolution::new(vec![1.7], vec![-3, 1]);
        let c = s.clamp(&x).unwrap();
        assert_eq!(c, MixedSolution::new(vec![1.0], vec![2, 1]));
        assert_eq!(s.clamp(&c).unwrap(), c);

        let feasible = MixedSolution::new(vec![0.25], vec![4, 0]);
        assert_eq!(s.clamp(&feasible).unwrap(), feasible);

        let bad = MixedSolution::new(vec![0.5, 0.5], vec![4, 0]);
        assert!(matches!(s.clamp(&bad), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn labels_resolve_symbols() {
        let s = space(vec![DimensionSpec::categorical(["a", "b", "c"]), DimensionSpec::integer(0, 4)]);
        assert_eq!(s.discrete_label(0, 2).as_deref(), Some("c"));
        assert_eq!(s.discrete_label(1, 3).as_deref(), Some("3"));
        assert_eq!(s.discrete_label(0, 9), None);
    }

    #[test]
    fn identical_seeds_identical_populations() {
        let s = space(vec![
            DimensionSpec::continuous(-5.0, 5.0),
            DimensionSpec::integer(-3, 3),
            DimensionSpec::categorical(["x", "y", "z"]),
        ]);
        let draw = |seed| {
            let mut rng = seeded(seed);
            (0..25).map(|_| s.random_solution(&mut rng)).collect::<Vec<_>>()
        };
        assert_eq!(draw(42), draw(42));
        assert_ne!(draw(42), draw(43));
    }
}
