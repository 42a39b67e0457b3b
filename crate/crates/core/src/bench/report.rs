use std::fmt::Write as _;

use super::workload::OpClass;

/// Exact header of the benchmark CSV.
pub const CSV_HEADER: &str =
    "structure,operation,count_ops,mean_counter,max_counter,wall_ns,slots_allocated";

/// What a counter value measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostUnit {
    /// Hash slots inspected.
    Probes,
    /// Linked-list nodes visited.
    Traversals,
    /// Adjacency-matrix cells read.
    Cells,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassStats {
    pub ops: u64,
    pub total: u64,
    pub max: u64,
    pub wall_ns: u128,
}

impl ClassStats {
    #[inline]
    pub fn record(&mut self, cost: u64, wall_ns: u128) {
        self.ops += 1;
        self.total += cost;
        self.max = self.max.max(cost);
        self.wall_ns += wall_ns;
    }

    pub fn mean(&self) -> f64 {
        if self.ops == 0 {
            0.0
        } else {
            self.total as f64 / self.ops as f64
        }
    }
}

/// Per-class cost accumulators for one store. Monotone until [`reset`](Self::reset).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OpCounters {
    classes: [ClassStats; 4],
}

impl OpCounters {
    #[inline]
    pub fn record(&mut self, class: OpClass, cost: u64, wall_ns: u128) {
        self.classes[class.index()].record(cost, wall_ns);
    }

    pub fn get(&self, class: OpClass) -> &ClassStats {
        &self.classes[class.index()]
    }

    pub fn reset(&mut self) {
        *self = OpCounters::default();
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub structure: String,
    pub operation: OpClass,
    pub unit: CostUnit,
    /// Add operations in the workload that produced this row.
    pub edges: usize,
    pub count_ops: u64,
    pub mean_counter: f64,
    pub max_counter: u64,
    pub wall_ns: u128,
    pub slots_allocated: usize,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn row(&self, structure: &str, operation: OpClass) -> Option<&BenchRow> {
        self.rows
            .iter()
            .find(|r| r.structure == structure && r.operation == operation)
    }

    /// Rows for one structure, in sweep order when the report comes from
    /// [`scaling_sweep`](super::scaling_sweep).
    pub fn series<'a>(
        &'a self,
        structure: &'a str,
        operation: OpClass,
    ) -> impl Iterator<Item = &'a BenchRow> + 'a {
        self.rows.iter().filter(move |r| {
            r.operation == operation && r.structure.split('@').next() == Some(structure)
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{:.6},{},{},{}",
                r.structure,
                r.operation,
                r.count_ops,
                r.mean_counter,
                r.max_counter,
                r.wall_ns,
                r.slots_allocated
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counters_accumulate_and_reset() {
        let mut c = OpCounters::default();
        c.record(OpClass::Add, 3, 10);
        c.record(OpClass::Add, 1, 10);
        c.record(OpClass::Enumerate, 7, 1);
        let add = c.get(OpClass::Add);
        assert_eq!((add.ops, add.total, add.max, add.wall_ns), (2, 4, 3, 20));
        assert_eq!(add.mean(), 2.0);
        assert_eq!(c.get(OpClass::ContainsHit).mean(), 0.0);
        c.reset();
        assert_eq!(c, OpCounters::default());
    }

    #[test]
    fn csv_layout() {
        let report = BenchReport {
            rows: vec![BenchRow {
                structure: "hashlist".into(),
                operation: OpClass::ContainsMiss,
                unit: CostUnit::Probes,
                edges: 10,
                count_ops: 4,
                mean_counter: 1.25,
                max_counter: 3,
                wall_ns: 99,
                slots_allocated: 52,
            }],
        };
        assert_eq!(
            report.to_csv(),
            format!("{CSV_HEADER}\nhashlist,contains_miss,4,1.250000,3,99,52\n")
        );
    }
}
