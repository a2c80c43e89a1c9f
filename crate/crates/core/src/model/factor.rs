use serde::{Deserialize, Serialize};

use super::{classify_with, ClassReport};
use crate::catlim::{pseudocolimit_of_arrow, pseudolimit_of_arrow};
use crate::error::{Error, Result};
use crate::fincat::{compose_functors, FinFunctor};
use crate::search::SearchLimits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorMode {
    /// Weak equivalence `d` then fibration `v`, through the pseudolimit.
    WeThenFib,
    /// Cofibration `i` then trivial fibration `e`, through the pseudocolimit.
    CofThenTrivFib,
    /// Trivial cofibration then fibration: factor `d` as `e∘i` and return
    /// `(i, v∘e)`.
    TrivCofThenFib,
}

impl FactorMode {
    pub const ALL: [FactorMode; 3] = [
        FactorMode::WeThenFib,
        FactorMode::CofThenTrivFib,
        FactorMode::TrivCofThenFib,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FactorMode::WeThenFib => "WE_then_Fib",
            FactorMode::CofThenTrivFib => "Cof_then_TrivFib",
            FactorMode::TrivCofThenFib => "TrivCof_then_Fib",
        }
    }

    pub fn parse(s: &str) -> Option<FactorMode> {
        FactorMode::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorizationWitness {
    pub mode: FactorMode,
    pub left: FinFunctor,
    pub right: FinFunctor,
    pub left_report: ClassReport,
    pub right_report: ClassReport,
}

/// Factor `f = right∘left`, with both parts classified. A part missing the
/// class its mode promises is reported as a consistency fault.
pub fn factor(
    f: &FinFunctor,
    mode: FactorMode,
    limits: SearchLimits,
) -> Result<FactorizationWitness> {
    let (left, right) = match mode {
        FactorMode::WeThenFib => {
            let pl = pseudolimit_of_arrow(f);
            (pl.d, pl.v)
        }
        FactorMode::CofThenTrivFib => {
            let pc = pseudocolimit_of_arrow(f);
            (pc.i, pc.e)
        }
        FactorMode::TrivCofThenFib => {
            let pl = pseudolimit_of_arrow(f);
            let pc = pseudocolimit_of_arrow(&pl.d);
            let right = compose_functors(&pl.v, &pc.e)?;
            (pc.i, right)
        }
    };
    if compose_functors(&right, &left)? != *f {
        return Err(Error::Consistency(format!(
            "{} factorization does not compose back",
            mode.name()
        )));
    }
    let left_report = classify_with(&left, limits)?;
    let right_report = classify_with(&right, limits)?;
    let ok = match mode {
        FactorMode::WeThenFib => left_report.is_weak_equivalence && right_report.is_fibration,
        FactorMode::CofThenTrivFib => {
            left_report.is_cofibration && right_report.is_trivial_fibration
        }
        FactorMode::TrivCofThenFib => {
            left_report.is_trivial_cofibration && right_report.is_fibration
        }
    };
    if !ok {
        return Err(Error::Consistency(format!(
            "{} factorization parts miss their classes",
            mode.name()
        )));
    }
    Ok(FactorizationWitness {
        mode,
        left,
        right,
        left_report,
        right_report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{generating_maps, NamedCat};

    #[test]
    fn identity_on_point_through_pseudocolimit() {
        let one = NamedCat::One.arc();
        let w = factor(
            &FinFunctor::identity(&one),
            FactorMode::CofThenTrivFib,
            SearchLimits::default(),
        )
        .unwrap();
        let mid = w.left.codomain();
        assert_eq!(mid.num_objects(), 2);
        assert!(mid.is_chaotic());
        assert!(w.left.is_injective_on_objects());
    }

    #[test]
    fn all_modes_on_generators() {
        for f in generating_maps() {
            for mode in FactorMode::ALL {
                let w = factor(&f, mode, SearchLimits::default()).unwrap();
                assert_eq!(compose_functors(&w.right, &w.left).unwrap(), f);
            }
        }
    }

    #[test]
    fn fibration_part_trivial_iff_input_is_equivalence() {
        let iso = NamedCat::FreeIso.arc();
        let one = NamedCat::One.arc();
        let w = factor(
            &FinFunctor::terminal(&iso, &one),
            FactorMode::WeThenFib,
            SearchLimits::default(),
        )
        .unwrap();
        assert!(w.right_report.is_trivial_fibration);
        let two = NamedCat::TwoDiscrete.arc();
        let w = factor(
            &FinFunctor::terminal(&two, &one),
            FactorMode::WeThenFib,
            SearchLimits::default(),
        )
        .unwrap();
        assert!(!w.right_report.is_weak_equivalence);
    }
}
