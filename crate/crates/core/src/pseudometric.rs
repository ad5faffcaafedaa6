//! Composite pseudometrics on digital images.
//!
//! A positive weighted sum of pseudometrics is again a pseudometric, and it
//! is a metric as soon as one summand is. [`PseudometricSpec::WeightedSum`]
//! builds such sums; with unit weights it is the plain sum.

use crate::distance::{ExtendedDistance, LpExponent};
use crate::error::{Error, Result};
use crate::euler::euler_diff;
use crate::hausdorff::{hausdorff_lp, hausdorff_path};
use crate::lattice::DigitalImage;
use crate::metrics::{diam_diff, PointMetric};

#[derive(Debug, Clone)]
pub enum PseudometricSpec<'a> {
    /// Hausdorff metric over ℓp.
    HausdorffLp(LpExponent),
    /// Hausdorff metric over shortest paths in the given ambient image.
    HausdorffPath(&'a DigitalImage),
    /// Difference of ℓp diameters.
    DiamDiffLp(LpExponent),
    /// Difference of shortest-path diameters, measured in the given ambient
    /// or, for `None`, in each image itself under its own adjacency.
    DiamDiffPath(Option<&'a DigitalImage>),
    /// Difference of Euler characteristics, each image under its own adjacency.
    EulerDiff,
    WeightedSum(Vec<(f64, PseudometricSpec<'a>)>),
}

impl<'a> PseudometricSpec<'a> {
    /// Validating constructor for weighted sums.
    pub fn weighted_sum(terms: Vec<(f64, PseudometricSpec<'a>)>) -> Result<Self> {
        validate_terms(&terms)?;
        Ok(PseudometricSpec::WeightedSum(terms))
    }

    /// Whether this spec is a metric rather than only a pseudometric.
    pub fn is_metric(&self) -> bool {
        match self {
            PseudometricSpec::HausdorffLp(_) | PseudometricSpec::HausdorffPath(_) => true,
            PseudometricSpec::WeightedSum(terms) => terms.iter().any(|(_, t)| t.is_metric()),
            _ => false,
        }
    }
}

fn validate_terms(terms: &[(f64, PseudometricSpec<'_>)]) -> Result<()> {
    if terms.is_empty() {
        return Err(Error::EmptySum);
    }
    if let Some(&(w, _)) = terms.iter().find(|(w, _)| !(w.is_finite() && *w > 0.0)) {
        return Err(Error::InvalidWeight(w));
    }
    Ok(())
}

pub fn eval_pseudometric(
    spec: &PseudometricSpec<'_>,
    a: &DigitalImage,
    b: &DigitalImage,
) -> Result<ExtendedDistance> {
    match spec {
        PseudometricSpec::HausdorffLp(p) => {
            Ok(hausdorff_lp(a.points(), b.points(), p.get())?.value)
        }
        PseudometricSpec::HausdorffPath(ambient) => {
            Ok(hausdorff_path(ambient, a.points(), b.points())?.value)
        }
        PseudometricSpec::DiamDiffLp(p) => diam_diff(a.points(), b.points(), PointMetric::Lp(*p)),
        PseudometricSpec::DiamDiffPath(Some(ambient)) => {
            diam_diff(a.points(), b.points(), PointMetric::Path(ambient))
        }
        PseudometricSpec::DiamDiffPath(None) => {
            let da = crate::metrics::diameter(a.points(), PointMetric::Path(a))?;
            let db = crate::metrics::diameter(b.points(), PointMetric::Path(b))?;
            if a.dim() != b.dim() {
                return Err(Error::DimensionMismatch {
                    expected: a.dim(),
                    found: b.dim(),
                });
            }
            Ok(da.abs_diff(db))
        }
        PseudometricSpec::EulerDiff => Ok(euler_diff(a, b).into()),
        PseudometricSpec::WeightedSum(terms) => {
            validate_terms(terms)?;
            let mut total = ExtendedDistance::ZERO;
            for (w, term) in terms {
                total = total + eval_pseudometric(term, a, b)?.scale(*w);
            }
            Ok(total)
        }
    }
}
