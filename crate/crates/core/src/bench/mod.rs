//! Seeded workloads, operation counters and differential execution.
//!
//! Every store reports a per-operation cost (hash slots inspected, list
//! nodes visited, or matrix cells read). The runner feeds one materialized
//! operation stream to every selected store in lockstep, checks that all
//! answers agree, and aggregates the costs into [`BenchReport`] rows.
//! Complexity claims are checked against these counters, never against
//! wall-clock time.

mod report;
mod rng;
mod run;
mod subject;
mod workload;

pub use report::{BenchReport, BenchRow, ClassStats, CostUnit, OpCounters, CSV_HEADER};
pub use rng::Lcg64;
pub use run::{differential, run_workload, scaling_sweep, BenchError, Disagreement};
pub use subject::{Selection, StructureKind, Subject};
pub use workload::{Generator, Op, OpClass, OpMix, WorkloadSpec};
