use std::fmt;
use std::time::Instant;

use thiserror::Error;

use super::report::{BenchReport, BenchRow, OpCounters};
use super::subject::{Selection, Subject};
use super::workload::{Op, OpClass, WorkloadSpec};
use crate::{GraphError, VertexId};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid workload: {0}")]
    Workload(String),

    #[error(transparent)]
    Store(#[from] GraphError),

    #[error("{0}")]
    Disagreement(Box<Disagreement>),
}

/// The shortest failing prefix of an operation stream and what each store
/// answered to its final operation.
#[derive(Debug, Clone, PartialEq)]
pub struct Disagreement {
    pub prefix_len: usize,
    pub op: Op,
    pub answers: Vec<(String, String)>,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "stores disagree at op #{} {}:", self.prefix_len, self.op)?;
        for (name, answer) in &self.answers {
            write!(f, " {name}={answer}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Answer {
    Bool(bool),
    List(Vec<VertexId>),
    Failed(String),
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Bool(b) => write!(f, "{b}"),
            Answer::List(v) => write!(f, "{v:?}"),
            Answer::Failed(e) => write!(f, "error({e})"),
        }
    }
}

struct Execution {
    subjects: Vec<Box<dyn Subject>>,
    counters: Vec<OpCounters>,
    /// Index of the first op the stores disagreed on, with their answers.
    divergence: Option<(usize, Vec<(String, String)>)>,
}

fn apply(subject: &mut dyn Subject, op: &Op) -> Option<(Answer, u64)> {
    let traced = match *op {
        Op::Add(x, y) => subject.add(x, y).map(|t| (Answer::Bool(t.value), t.cost)),
        Op::ContainsHit(x, y) | Op::ContainsMiss(x, y) => subject
            .contains(x, y)
            .map(|t| (Answer::Bool(t.value), t.cost)),
        Op::Enumerate(x) if subject.enumerates() => subject
            .neighbors(x)
            .map(|t| (Answer::List(t.value), t.cost)),
        Op::Enumerate(_) => return None,
    };
    Some(traced.unwrap_or_else(|e| (Answer::Failed(e.to_string()), 0)))
}

fn execute<F>(ops: &[Op], factory: &F) -> Result<Execution, GraphError>
where
    F: Fn() -> Result<Vec<Box<dyn Subject>>, GraphError>,
{
    let mut subjects = factory()?;
    let mut counters = vec![OpCounters::default(); subjects.len()];
    let mut answers: Vec<Option<Answer>> = vec![None; subjects.len()];
    for (i, op) in ops.iter().enumerate() {
        let class = op.class();
        for (s, subject) in subjects.iter_mut().enumerate() {
            let start = Instant::now();
            let result = apply(subject.as_mut(), op);
            let wall = start.elapsed().as_nanos();
            if let Some((_, cost)) = &result {
                counters[s].record(class, *cost, wall);
            }
            answers[s] = result.map(|(a, _)| a);
        }
        let mut given = answers.iter().flatten();
        if let Some(first) = given.next() {
            if given.any(|a| a != first) {
                let report = subjects
                    .iter()
                    .zip(&answers)
                    .filter_map(|(s, a)| a.as_ref().map(|a| (s.name().to_string(), a.to_string())))
                    .collect();
                return Ok(Execution {
                    subjects,
                    counters,
                    divergence: Some((i, report)),
                });
            }
        }
    }
    Ok(Execution {
        subjects,
        counters,
        divergence: None,
    })
}

/// Runs `ops` against fresh stores from `factory` in lockstep.
///
/// On the first disagreement the stream is shrunk by bisection to its
/// shortest failing prefix, rebuilding fresh stores for every probe.
pub fn differential<F>(ops: &[Op], edges: usize, factory: F) -> Result<BenchReport, BenchError>
where
    F: Fn() -> Result<Vec<Box<dyn Subject>>, GraphError>,
{
    let run = execute(ops, &factory)?;
    let Some((first_bad, _)) = run.divergence else {
        return Ok(report(&run, edges));
    };

    let fails = |len: usize| -> Result<bool, GraphError> {
        Ok(execute(&ops[..len], &factory)?.divergence.is_some())
    };
    let (mut lo, mut hi) = (1, first_bad + 1);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if fails(mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let shrunk = execute(&ops[..hi], &factory)?;
    let (at, answers) = shrunk.divergence.expect("bisection keeps a failing prefix");
    Err(BenchError::Disagreement(Box::new(Disagreement {
        prefix_len: at + 1,
        op: ops[at],
        answers,
    })))
}

fn report(run: &Execution, edges: usize) -> BenchReport {
    let mut rows = Vec::new();
    for (subject, counters) in run.subjects.iter().zip(&run.counters) {
        for class in OpClass::ALL {
            if class == OpClass::Enumerate && !subject.enumerates() {
                continue;
            }
            let stats = counters.get(class);
            rows.push(BenchRow {
                structure: subject.name().to_string(),
                operation: class,
                unit: subject.cost_unit(class),
                edges,
                count_ops: stats.ops,
                mean_counter: stats.mean(),
                max_counter: stats.max,
                wall_ns: stats.wall_ns,
                slots_allocated: subject.slots_allocated(),
            });
        }
    }
    BenchReport { rows }
}

/// Generates `spec`'s stream and runs it against every selected store,
/// each sized for `spec.m` edges.
pub fn run_workload(spec: &WorkloadSpec, selection: &Selection) -> Result<BenchReport, BenchError> {
    let ops = spec.generate().map_err(BenchError::Workload)?;
    if selection.structures.is_empty() {
        return Err(BenchError::Workload("no structures selected".into()));
    }
    differential(&ops, spec.m, || selection.build(spec.n, spec.m))
}

/// Runs `base` with `m` scaled by each factor. Rows are labelled
/// `structure@m=<edges>`.
pub fn scaling_sweep(
    base: &WorkloadSpec,
    factors: &[usize],
    selection: &Selection,
) -> Result<BenchReport, BenchError> {
    let mut out = BenchReport::default();
    for &factor in factors {
        let spec = WorkloadSpec {
            m: base.m * factor,
            ..base.clone()
        };
        let mut part = run_workload(&spec, selection)?;
        for row in &mut part.rows {
            row.structure = format!("{}@m={}", row.structure, spec.m);
        }
        out.rows.append(&mut part.rows);
    }
    Ok(out)
}
