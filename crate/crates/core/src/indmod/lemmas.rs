//! The degree-lowering operators of the reduction lemmas and the reduction
//! loop built from them.

use std::cmp::Ordering;

use serde::Serialize;

use super::{IndVector, InducedModule, ModuleKind};
use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::exponents::Triple;
use crate::pbw::UEElement;
use crate::report::Report;
use crate::scalars::Scalar;

/// Which lemma row to apply. The rows are named after the operator family;
/// each one removes a unit from one block of the degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Row {
    G,
    J,
    L,
}

impl Row {
    pub const ALL: [Row; 3] = [Row::G, Row::J, Row::L];

    pub fn from_name(s: &str) -> Option<Row> {
        match s {
            "G" | "g" => Some(Row::G),
            "J" | "j" => Some(Row::J),
            "L" | "l" => Some(Row::L),
            _ => None,
        }
    }

    /// The triple component this row lowers. Component 2 must be nonzero
    /// for `G`; component 2 zero and 1 nonzero for `J`; components 1, 2 zero
    /// and 0 nonzero for `L`.
    fn component(self) -> usize {
        match self {
            Row::G => 2,
            Row::J => 1,
            Row::L => 0,
        }
    }
}

/// One application of a lemma operator.
#[derive(Clone, Debug)]
pub struct Step {
    pub row: Row,
    pub operator: Generator,
    pub before: Triple,
    pub predicted: Triple,
    pub result: IndVector,
}

fn hypothesis(row: Row, reason: impl Into<String>) -> Error {
    Error::Hypothesis {
        row: format!("{row:?}"),
        reason: reason.into(),
    }
}

fn guard(c: Scalar, what: &str) -> Result<()> {
    if c.is_identically_nonzero() {
        Ok(())
    } else {
        Err(Error::VanishingCoefficient(format!("{what} = {c}")))
    }
}

impl InducedModule {
    /// The row whose hypothesis matches the shape of `deg`, or `None` for
    /// the zero triple.
    pub fn choose_row(&self, deg: &Triple) -> Option<Row> {
        Row::ALL.into_iter().find(|r| !deg.component(r.component()).is_zero())
    }

    /// The lemma operator for `row` at degree `deg` and the predicted degree
    /// after applying it. Fails when `deg` does not have the row's shape or a
    /// coefficient the lemma needs to be nonzero vanishes.
    pub fn lemma_operator(&self, row: Row, deg: &Triple) -> Result<(Generator, Triple)> {
        let n = row.component();
        for higher in n + 1..3 {
            if !deg.component(higher).is_zero() {
                return Err(hypothesis(row, format!("component {higher} of {deg} is nonzero")));
            }
        }
        let block = deg.component(n);
        let (Some(min), Some(max)) = (block.min_position(), block.max_position()) else {
            return Err(hypothesis(row, format!("component {n} of {deg} is zero")));
        };
        let spec = self.spec();
        let (op, s) = match (self.kind(), row) {
            (ModuleKind::Universal { k, .. }, Row::G) => {
                guard(spec.f().clone(), "F")?;
                (Generator::G(k + min as i64), min)
            }
            (ModuleKind::Universal { k, d, .. }, Row::J) => {
                guard(spec.f().clone(), "F")?;
                (Generator::J(k + d as i64 + min as i64), min)
            }
            (ModuleKind::Universal { l, .. }, Row::L) => (Generator::L(l + min as i64), min),
            (ModuleKind::Opaque { k, .. }, Row::G) => {
                let r = min as i64;
                // [L_{-r}, G_{k+r}] = -(alpha + k + r - r beta) G_k
                guard(spec.lg_coefficient(-r, k + r), "alpha + k + r - r*beta")?;
                (Generator::G(k + r), min)
            }
            (ModuleKind::Opaque { d2, .. }, Row::J) => {
                let q = d2 as i64 + min as i64;
                guard(&Scalar::from_int(q) * self.level().value(3), "(d2 + q)*ell3")?;
                (Generator::J(q), min)
            }
            (ModuleKind::Opaque { k, d1, .. }, Row::L) => {
                let dp = d1 as i64 + max as i64;
                guard(spec.lg_coefficient(k + dp, -dp), "alpha - (d1 + p) + (k + d1 + p)*beta")?;
                (Generator::L(k + dp), max)
            }
            (kind, _) => {
                return Err(Error::Invalid(format!("no reduction lemma for {}", kind.name())));
            }
        };
        let predicted = deg.minus_unit(n, s).expect("position is occupied");
        Ok((op, predicted))
    }

    pub fn lemma_reduction_step(&self, row: Row, v: &IndVector) -> Result<Step> {
        let before = self.degree(v)?;
        let (operator, predicted) = self.lemma_operator(row, &before)?;
        let result = self.act(operator, v)?;
        Ok(Step {
            row,
            operator,
            before,
            predicted,
            result,
        })
    }
}

/// A completed reduction into the coefficient part.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub operators: Vec<Generator>,
    pub degrees: Vec<Triple>,
    pub value: UEElement,
}

/// Applies lemma operators until `v` has no prefix, checking that the degree
/// strictly drops at each step.
pub fn reduce_to_v(module: &InducedModule, v: &IndVector, max_steps: usize) -> Result<Reduction> {
    if !matches!(module.kind(), ModuleKind::Universal { .. }) {
        return Err(Error::Invalid(format!(
            "reduction runs over the universal coefficient module, not {}",
            module.kind().name()
        )));
    }
    let mut cur = v.clone();
    let mut deg = module.degree(&cur)?;
    let mut operators = Vec::new();
    let mut degrees = vec![deg.clone()];
    while let Some(row) = module.choose_row(&deg) {
        if operators.len() == max_steps {
            return Err(Error::StepBudget(max_steps));
        }
        let step = module.lemma_reduction_step(row, &cur)?;
        let next = module.degree(&step.result)?;
        if module.degree_order().compare_triples(&next, &deg) != Ordering::Less {
            return Err(Error::Invalid(format!(
                "degree did not drop: {deg} -> {next} under {}",
                step.operator
            )));
        }
        operators.push(step.operator);
        degrees.push(next.clone());
        cur = step.result;
        deg = next;
    }
    let value = module.v_part(&cur).expect("zero degree means no prefix");
    Ok(Reduction {
        operators,
        degrees,
        value,
    })
}

/// Applies `row` to every sample and compares the resulting degree with the
/// lemma's prediction.
pub fn lemma_degree_check(module: &InducedModule, row: Row, samples: &[IndVector]) -> Report {
    use rayon::prelude::*;
    let outcomes: Vec<(String, Option<(String, String)>)> = samples
        .par_iter()
        .map_init(module.factory(), |m, v| {
            let inputs = v.to_string();
            let got = m.lemma_reduction_step(row, v).and_then(|step| {
                let deg = m.degree(&step.result)?;
                Ok((step.predicted, deg))
            });
            match got {
                Ok((want, deg)) if want == deg => (inputs, None),
                Ok((want, deg)) => (inputs, Some((want.to_string(), deg.to_string()))),
                Err(e) => (inputs, Some(("a degree".into(), e.to_string()))),
            }
        })
        .collect();
    let mut report = Report::new("check-lemma")
        .with_config("module", module.kind())
        .with_config("row", row)
        .with_config("order", module.degree_order())
        .with_config("bindings", module.spec().bindings().to_string());
    for (inputs, o) in outcomes {
        match o {
            None => report.pass(),
            Some((want, got)) => report.fail(inputs, want, got),
        }
    }
    report
}
