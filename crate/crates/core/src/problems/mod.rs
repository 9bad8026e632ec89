//! Benchmark problems: three penalized engineering designs and a family of
//! shifted synthetic functions.

pub mod engineering;
pub mod synthetic;

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::space::{DimensionSpec, MixedSolution, SearchSpace};
use engineering::*;
pub use synthetic::SyntheticFamily;

/// Default penalty coefficient for every engineering problem.
pub const PENALTY_COEFFICIENT: f64 = 1e6;

/// Best-known costs, used as AE reference values.
pub const VESSEL_BEST_KNOWN: f64 = 6059.714335;
pub const BEAM_BEST_KNOWN: f64 = 1.724852;
pub const SPRING_BEST_KNOWN: f64 = 1.059_404_8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PenaltyMode {
    /// `M · Σ max(0, g)`.
    MagnitudeOnly,
    /// `M · Σ max(0, g) + M · #violated`.
    MagnitudePlusCount,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PenaltySpec {
    pub coefficient: f64,
    pub mode: PenaltyMode,
}

impl PenaltySpec {
    pub fn new(mode: PenaltyMode) -> Self {
        PenaltySpec {
            coefficient: PENALTY_COEFFICIENT,
            mode,
        }
    }

    pub fn apply(&self, raw: f64, constraints: &[f64]) -> f64 {
        let magnitude: f64 = constraints.iter().map(|g| g.max(0.0)).sum();
        let count = constraints.iter().filter(|&&g| g > 0.0).count() as f64;
        match self.mode {
            PenaltyMode::MagnitudeOnly => raw + self.coefficient * magnitude,
            PenaltyMode::MagnitudePlusCount => raw + self.coefficient * (magnitude + count),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Model {
    Vessel(PenaltySpec),
    Beam(PenaltySpec),
    Spring(PenaltySpec),
    Synthetic { family: SyntheticFamily, shift: Vec<f64> },
}

/// A named benchmark instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    name: String,
    space: SearchSpace,
    reference_optimum: f64,
    model: Model,
}

impl Problem {
    /// Pressure vessel. Thicknesses are integer multiples of 0.0625 (1..=99
    /// steps); radius and length are continuous in `[10, 200]`.
    pub fn vessel() -> Self {
        let space = SearchSpace::new(vec![
            DimensionSpec::integer(1, 99),
            DimensionSpec::integer(1, 99),
            DimensionSpec::continuous(10.0, 200.0),
            DimensionSpec::continuous(10.0, 200.0),
        ])
        .expect("static space");
        Problem {
            name: "vessel".into(),
            space,
            reference_optimum: VESSEL_BEST_KNOWN,
            model: Model::Vessel(PenaltySpec::new(PenaltyMode::MagnitudeOnly)),
        }
    }

    /// Welded beam, four continuous variables.
    pub fn beam() -> Self {
        let space = SearchSpace::new(vec![
            DimensionSpec::continuous(0.1, 2.0),
            DimensionSpec::continuous(0.1, 10.0),
            DimensionSpec::continuous(0.1, 10.0),
            DimensionSpec::continuous(0.1, 2.0),
        ])
        .expect("static space");
        Problem {
            name: "beam".into(),
            space,
            reference_optimum: BEAM_BEST_KNOWN,
            model: Model::Beam(PenaltySpec::new(PenaltyMode::MagnitudePlusCount)),
        }
    }

    /// Coil spring: wire and coil diameters continuous, coil count integer.
    pub fn csd() -> Self {
        let space = SearchSpace::new(vec![
            DimensionSpec::continuous(0.1, 0.5),
            DimensionSpec::continuous(0.6, 3.0),
            DimensionSpec::integer(1, 70),
        ])
        .expect("static space");
        Problem {
            name: "csd".into(),
            space,
            reference_optimum: SPRING_BEST_KNOWN,
            model: Model::Spring(PenaltySpec::new(PenaltyMode::MagnitudeOnly)),
        }
    }

    /// Shifted synthetic function on `dim` axes: the first half continuous,
    /// the second half restricted to integers within the same bounds.
    pub fn synthetic(family: SyntheticFamily, dim: usize) -> Result<Self> {
        if dim < 2 || !dim.is_multiple_of(2) {
            return Err(Error::Config(format!("synthetic dimension must be even and at least 2, got {dim}")));
        }
        let (lo, hi) = family.bounds();
        let mut dims = vec![DimensionSpec::continuous(lo, hi); dim / 2];
        dims.extend(vec![DimensionSpec::integer(lo.ceil() as i64, hi.floor() as i64); dim / 2]);
        let space = SearchSpace::new(dims)?;
        let shift = family.shift(dim);
        let optimum_value = family.evaluate(&shift, &shift);
        Ok(Problem {
            name: family.name().into(),
            space,
            reference_optimum: optimum_value,
            model: Model::Synthetic { family, shift },
        })
    }

    /// Overrides the AE reference value.
    pub fn with_reference(mut self, reference_optimum: f64) -> Self {
        self.reference_optimum = reference_optimum;
        self
    }

    pub fn with_penalty(mut self, penalty: PenaltySpec) -> Self {
        match &mut self.model {
            Model::Vessel(p) | Model::Beam(p) | Model::Spring(p) => *p = penalty,
            Model::Synthetic { .. } => {}
        }
        self
    }

    pub fn is_engineering(&self) -> bool {
        !matches!(self.model, Model::Synthetic { .. })
    }

    /// Known optimum of a synthetic instance as a solution.
    pub fn optimum(&self) -> Option<MixedSolution> {
        match &self.model {
            Model::Synthetic { shift, .. } => {
                let n = self.space.n_continuous();
                Some(MixedSolution::new(
                    shift[..n].to_vec(),
                    shift[n..].iter().map(|v| *v as i64).collect(),
                ))
            }
            _ => None,
        }
    }

    /// Physical design variables, in the problem's natural order.
    pub fn design_variables(&self, x: &MixedSolution) -> Vec<f64> {
        match &self.model {
            // cont = (r, L), disc = (n_s, n_h)
            Model::Vessel(_) => vec![
                x.disc[0] as f64 * VESSEL_THICKNESS_STEP,
                x.disc[1] as f64 * VESSEL_THICKNESS_STEP,
                x.cont[0],
                x.cont[1],
            ],
            // cont = (d, D), disc = (N)
            Model::Spring(_) => vec![x.cont[0], x.cont[1], x.disc[0] as f64],
            Model::Beam(_) | Model::Synthetic { .. } => {
                x.cont.iter().copied().chain(x.disc.iter().map(|&v| v as f64)).collect()
            }
        }
    }

    /// Unpenalized objective.
    pub fn raw_objective(&self, x: &MixedSolution) -> f64 {
        let v = self.design_variables(x);
        match &self.model {
            Model::Vessel(_) => vessel_cost(v[0], v[1], v[2], v[3]),
            Model::Beam(_) => beam_cost(v[0], v[1], v[2], v[3]),
            Model::Spring(_) => spring_weight(v[0], v[1], v[2]),
            Model::Synthetic { family, shift } => family.evaluate(&v, shift),
        }
    }

    /// Constraint values `g(x)`; empty for unconstrained problems.
    pub fn constraints(&self, x: &MixedSolution) -> Vec<f64> {
        let v = self.design_variables(x);
        match &self.model {
            Model::Vessel(_) => vessel_constraints(v[0], v[1], v[2], v[3]).to_vec(),
            Model::Beam(_) => beam_constraints(v[0], v[1], v[2], v[3]).to_vec(),
            Model::Spring(_) => spring_constraints(v[0], v[1], v[2]).to_vec(),
            Model::Synthetic { .. } => Vec::new(),
        }
    }

    pub fn is_feasible(&self, x: &MixedSolution, tol: f64) -> bool {
        self.constraints(x).iter().all(|&g| g <= tol)
    }
}

impl Objective for Problem {
    fn name(&self) -> &str {
        &self.name
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate(&self, x: &MixedSolution) -> f64 {
        let raw = self.raw_objective(x);
        match &self.model {
            Model::Vessel(p) | Model::Beam(p) | Model::Spring(p) => p.apply(raw, &self.constraints(x)),
            Model::Synthetic { .. } => raw,
        }
    }

    fn reference_optimum(&self) -> f64 {
        self.reference_optimum
    }
}

/// `|achieved − reference|`.
pub fn absolute_error(problem: &dyn Objective, achieved: f64) -> f64 {
    (achieved - problem.reference_optimum()).abs()
}

pub const ENGINEERING_NAMES: [&str; 3] = ["vessel", "beam", "csd"];

/// Every registered problem name.
pub fn problem_names() -> Vec<&'static str> {
    SyntheticFamily::ALL
        .iter()
        .map(|f| f.name())
        .chain(ENGINEERING_NAMES)
        .collect()
}

/// Looks a problem up by name. `dim` only applies to synthetic functions.
pub fn problem_by_name(name: &str, dim: usize) -> Result<Problem> {
    match name {
        "vessel" => Ok(Problem::vessel()),
        "beam" => Ok(Problem::beam()),
        "csd" => Ok(Problem::csd()),
        _ => match SyntheticFamily::from_name(name) {
            Some(f) => Problem::synthetic(f, dim),
            None => Err(Error::UnknownProblem(name.to_string())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn penalty_arithmetic() {
        let p = PenaltySpec::new(PenaltyMode::MagnitudeOnly);
        assert_eq!(p.apply(5.0, &[-1.0, -2.0]), 5.0);
        assert_eq!(p.apply(5.0, &[-1.0, 10.0]), 5.0 + 1e7);
        let q = PenaltySpec::new(PenaltyMode::MagnitudePlusCount);
        assert_eq!(q.apply(5.0, &[0.5, 2.0, -1.0]), 5.0 + 1e6 * 2.5 + 2e6);
    }

    #[test]
    fn vessel_penalty_on_length() {
        let v = Problem::vessel();
        // L = 250 lies outside the box, but the formula itself is total
        let g = vessel_constraints(1.0, 1.0, 50.0, 250.0);
        let raw = vessel_cost(1.0, 1.0, 50.0, 250.0);
        let positive: f64 = g.iter().map(|x| x.max(0.0)).sum();
        assert!(g[3] == 10.0 && positive >= 10.0);
        let penalized = PenaltySpec::new(PenaltyMode::MagnitudeOnly).apply(raw, &g);
        assert_eq!(penalized - raw, 1e6 * positive);

        // d_s = d_h = 1 (16 steps), r = 50, L = 100
        let x = MixedSolution::new(vec![50.0, 100.0], vec![16, 16]);
        assert!((v.raw_objective(&x) - 8865.86).abs() < 1e-9);
    }

    #[test]
    fn known_designs_are_feasible() {
        // best-known vessel: 13 and 7 thickness steps
        let v = Problem::vessel();
        let x = MixedSolution::new(vec![42.0, 176.6366], vec![13, 7]);
        assert!(v.constraints(&x)[..2].iter().all(|&g| g <= 0.0));

        let b = Problem::beam();
        let x = MixedSolution::new(vec![0.3, 3.0, 9.0, 0.4], vec![]);
        assert!(b.is_feasible(&x, 0.0), "{:?}", b.constraints(&x));
        assert_eq!(b.evaluate(&x), b.raw_objective(&x));

        let s = Problem::csd();
        let x = MixedSolution::new(vec![0.3, 1.4], vec![9]);
        assert!(s.is_feasible(&x, 0.0), "{:?}", s.constraints(&x));
        assert_eq!(s.evaluate(&x), s.raw_objective(&x));
    }

    #[test]
    fn synthetic_optimum_has_zero_error() {
        for f in SyntheticFamily::ALL {
            let p = Problem::synthetic(f, 10).unwrap();
            let o = p.optimum().unwrap();
            assert!(p.space().contains(&o));
            assert_eq!(absolute_error(&p, p.evaluate(&o)), 0.0, "{f:?}");
        }
        let r = Problem::synthetic(SyntheticFamily::Rastrigin, 10).unwrap();
        assert_eq!(r.reference_optimum(), 0.0);
    }

    #[test]
    fn sphere_unit_step() {
        let p = Problem::synthetic(SyntheticFamily::Sphere, 10).unwrap();
        let mut x = p.optimum().unwrap();
        x.cont[2] += 1.0;
        assert!((p.evaluate(&x) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn registry() {
        assert_eq!(problem_names().len(), 10);
        for name in problem_names() {
            assert_eq!(problem_by_name(name, 6).unwrap().name(), name);
        }
        assert_eq!(problem_by_name("f99", 50), Err(Error::UnknownProblem("f99".into())));
        assert!(problem_by_name("sphere", 7).is_err());
    }

    #[test]
    fn absolute_error_examples() {
        let p = Problem::beam().with_reference(-1400.0);
        assert_eq!(absolute_error(&p, -1400.0), 0.0);
        assert_eq!(absolute_error(&p, -919.0), 481.0);
        assert_eq!(absolute_error(&p, -1400.0 + 3.5), absolute_error(&p, -1400.0 - 3.5));
    }
}
