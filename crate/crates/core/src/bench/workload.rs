use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use super::rng::Lcg64;
use crate::{pack_edge, VertexId};

/// Shape of the graph the add operations build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// Independent uniform `(x, y)` pairs; repeats are possible.
    Uniform,
    /// Vertex 0 pointing at `1, 2, ..., n - 1`, in that order.
    Star,
    /// Right and down edges of a `rows x cols` lattice, shuffled.
    Grid,
}

impl FromStr for Generator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Generator::Uniform),
            "star" => Ok(Generator::Star),
            "grid" => Ok(Generator::Grid),
            other => Err(format!(
                "unknown generator `{other}` (expected uniform, star or grid)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpClass {
    Add,
    ContainsHit,
    ContainsMiss,
    Enumerate,
}

impl OpClass {
    pub const ALL: [OpClass; 4] = [
        OpClass::Add,
        OpClass::ContainsHit,
        OpClass::ContainsMiss,
        OpClass::Enumerate,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OpClass::Add => "add",
            OpClass::ContainsHit => "contains_hit",
            OpClass::ContainsMiss => "contains_miss",
            OpClass::Enumerate => "enumerate",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for OpClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add(VertexId, VertexId),
    /// Query for an edge added earlier in the stream.
    ContainsHit(VertexId, VertexId),
    /// Query for an edge the generator believes absent.
    ContainsMiss(VertexId, VertexId),
    Enumerate(VertexId),
}

impl Op {
    pub fn class(&self) -> OpClass {
        match self {
            Op::Add(..) => OpClass::Add,
            Op::ContainsHit(..) => OpClass::ContainsHit,
            Op::ContainsMiss(..) => OpClass::ContainsMiss,
            Op::Enumerate(_) => OpClass::Enumerate,
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Op::Add(x, y) => write!(f, "add({x}, {y})"),
            Op::ContainsHit(x, y) | Op::ContainsMiss(x, y) => write!(f, "contains({x}, {y})"),
            Op::Enumerate(x) => write!(f, "neighbors({x})"),
        }
    }
}

/// Fractions of the operation stream per class. Must sum to 1 and give
/// adds a positive share.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpMix {
    pub add: f64,
    pub contains_hit: f64,
    pub contains_miss: f64,
    pub enumerate: f64,
}

impl OpMix {
    pub const fn new(add: f64, contains_hit: f64, contains_miss: f64, enumerate: f64) -> Self {
        OpMix {
            add,
            contains_hit,
            contains_miss,
            enumerate,
        }
    }

    pub const ADD_ONLY: OpMix = OpMix::new(1.0, 0.0, 0.0, 0.0);

    pub fn validate(&self) -> Result<(), String> {
        let parts = [
            self.add,
            self.contains_hit,
            self.contains_miss,
            self.enumerate,
        ];
        if parts.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(format!("mix fractions must lie in [0, 1]: {self}"));
        }
        if (parts.iter().sum::<f64>() - 1.0).abs() > 1e-9 {
            return Err(format!("mix fractions must sum to 1: {self}"));
        }
        if self.add <= 0.0 {
            return Err("mix needs a positive add fraction".into());
        }
        Ok(())
    }
}

impl Default for OpMix {
    fn default() -> Self {
        OpMix::new(0.6, 0.2, 0.15, 0.05)
    }
}

impl fmt::Display for OpMix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            self.add, self.contains_hit, self.contains_miss, self.enumerate
        )
    }
}

impl FromStr for OpMix {
    type Err = String;

    /// `add,hit,miss,enumerate`, e.g. `0.6,0.2,0.15,0.05`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<f64>()
                    .map_err(|e| format!("bad mix fraction `{p}`: {e}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let [add, hit, miss, enumerate] = parts[..] else {
            return Err(format!(
                "mix needs four comma-separated fractions, got `{s}`"
            ));
        };
        let mix = OpMix::new(add, hit, miss, enumerate);
        mix.validate()?;
        Ok(mix)
    }
}

/// A reproducible operation stream.
///
/// The stream holds exactly `m` add operations drawn from `generator`, and
/// `round(m / mix.add) - m` queries split between the remaining classes in
/// proportion to `mix`. Interleaved streams shuffle the classes together;
/// phased streams run every add first and every query after.
#[derive(Debug, Clone, PartialEq)]
pub struct WorkloadSpec {
    pub generator: Generator,
    pub n: u32,
    pub m: usize,
    pub mix: OpMix,
    pub seed: u64,
    pub phased: bool,
}

impl WorkloadSpec {
    pub fn new(generator: Generator, n: u32, m: usize) -> Self {
        WorkloadSpec {
            generator,
            n,
            m,
            mix: OpMix::default(),
            seed: 1,
            phased: false,
        }
    }

    pub fn mix(mut self, mix: OpMix) -> Self {
        self.mix = mix;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn phased(mut self, phased: bool) -> Self {
        self.phased = phased;
        self
    }

    pub fn validate(&self) -> Result<(), String> {
        self.mix.validate()?;
        if self.n == 0 {
            return Err("workload needs at least one vertex".into());
        }
        if self.m == 0 {
            return Err("workload needs at least one add (m > 0)".into());
        }
        if self.generator == Generator::Star && self.n < 2 {
            return Err("star workload needs n >= 2".into());
        }
        if self.generator == Generator::Grid && self.n < 2 {
            return Err("grid workload needs n >= 2".into());
        }
        Ok(())
    }

    pub fn total_ops(&self) -> usize {
        ((self.m as f64 / self.mix.add).round() as usize).max(self.m)
    }

    fn class_counts(&self) -> [usize; 4] {
        let total = self.total_ops();
        let queries = total - self.m;
        let q = self.mix.contains_hit + self.mix.contains_miss + self.mix.enumerate;
        if queries == 0 || q <= 0.0 {
            return [self.m, 0, 0, 0];
        }
        let hit = (queries as f64 * self.mix.contains_hit / q).round() as usize;
        let miss =
            ((queries as f64 * self.mix.contains_miss / q).round() as usize).min(queries - hit);
        [self.m, hit, miss, queries - hit - miss]
    }

    /// Materializes the stream. Identical specs give identical streams.
    pub fn generate(&self) -> Result<Vec<Op>, String> {
        self.validate()?;
        let mut rng = Lcg64::new(self.seed);
        let [adds, hits, misses, enums] = self.class_counts();
        let mut classes = Vec::with_capacity(adds + hits + misses + enums);
        let mut queries = Vec::with_capacity(hits + misses + enums);
        queries.extend(std::iter::repeat_n(OpClass::ContainsHit, hits));
        queries.extend(std::iter::repeat_n(OpClass::ContainsMiss, misses));
        queries.extend(std::iter::repeat_n(OpClass::Enumerate, enums));
        classes.extend(std::iter::repeat_n(OpClass::Add, adds));
        if self.phased {
            rng.shuffle(&mut queries);
            classes.append(&mut queries);
        } else {
            classes.append(&mut queries);
            rng.shuffle(&mut classes);
        }

        let mut source = EdgeSource::new(self.generator, self.n, &mut rng);
        let mut present: HashSet<u64> = HashSet::new();
        let mut added: Vec<(VertexId, VertexId)> = Vec::new();
        let n = u64::from(self.n);
        let mut ops = Vec::with_capacity(classes.len());
        for class in classes {
            let op = match class {
                OpClass::Add => {
                    let (x, y) = source.next(&mut rng);
                    if present.insert(pack_edge(x, y).get()) {
                        added.push((x, y));
                    }
                    Op::Add(x, y)
                }
                OpClass::ContainsHit if !added.is_empty() => {
                    let (x, y) = added[rng.below(added.len() as u64) as usize];
                    Op::ContainsHit(x, y)
                }
                OpClass::ContainsHit | OpClass::ContainsMiss => {
                    let mut pair = (0, 0);
                    for _ in 0..32 {
                        pair = (rng.below(n) as VertexId, rng.below(n) as VertexId);
                        if !present.contains(&pack_edge(pair.0, pair.1).get()) {
                            break;
                        }
                    }
                    Op::ContainsMiss(pair.0, pair.1)
                }
                OpClass::Enumerate => Op::Enumerate(rng.below(n) as VertexId),
            };
            ops.push(op);
        }
        Ok(ops)
    }
}

enum EdgeSource {
    Uniform {
        n: u64,
    },
    Cycle {
        edges: Vec<(VertexId, VertexId)>,
        at: usize,
    },
}

impl EdgeSource {
    fn new(generator: Generator, n: u32, rng: &mut Lcg64) -> Self {
        match generator {
            Generator::Uniform => EdgeSource::Uniform { n: u64::from(n) },
            Generator::Star => EdgeSource::Cycle {
                edges: (1..n).map(|y| (0, y)).collect(),
                at: 0,
            },
            Generator::Grid => {
                let rows = ((n as f64).sqrt() as u32).max(1);
                let cols = n / rows;
                let id = |r: u32, c: u32| r * cols + c;
                let mut edges = Vec::new();
                for r in 0..rows {
                    for c in 0..cols {
                        if c + 1 < cols {
                            edges.push((id(r, c), id(r, c + 1)));
                        }
                        if r + 1 < rows {
                            edges.push((id(r, c), id(r + 1, c)));
                        }
                    }
                }
                if edges.is_empty() {
                    edges.push((0, 0));
                }
                rng.shuffle(&mut edges);
                EdgeSource::Cycle { edges, at: 0 }
            }
        }
    }

    fn next(&mut self, rng: &mut Lcg64) -> (VertexId, VertexId) {
        match self {
            EdgeSource::Uniform { n } => (rng.below(*n) as VertexId, rng.below(*n) as VertexId),
            EdgeSource::Cycle { edges, at } => {
                let e = edges[*at % edges.len()];
                *at += 1;
                e
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_quotas() {
        let spec = WorkloadSpec::new(Generator::Uniform, 1000, 60_000);
        let ops = spec.generate().unwrap();
        assert_eq!(ops.len(), 100_000);
        let count = |c: OpClass| ops.iter().filter(|o| o.class() == c).count();
        assert_eq!(count(OpClass::Add), 60_000);
        assert_eq!(count(OpClass::ContainsHit), 20_000);
        assert_eq!(count(OpClass::ContainsMiss), 15_000);
        assert_eq!(count(OpClass::Enumerate), 5_000);
    }

    #[test]
    fn deterministic() {
        let spec = WorkloadSpec::new(Generator::Grid, 500, 2_000).seed(99);
        assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
        assert_ne!(
            spec.generate().unwrap(),
            spec.clone().seed(100).generate().unwrap()
        );
    }

    #[test]
    fn hits_were_added_and_misses_were_not() {
        let spec = WorkloadSpec::new(Generator::Uniform, 50, 1_000).seed(3);
        let mut present = HashSet::new();
        for op in spec.generate().unwrap() {
            match op {
                Op::Add(x, y) => {
                    present.insert((x, y));
                }
                Op::ContainsHit(x, y) => assert!(present.contains(&(x, y))),
                Op::ContainsMiss(x, y) => assert!(!present.contains(&(x, y))),
                Op::Enumerate(x) => assert!(x < 50),
            }
        }
    }

    #[test]
    fn phased_star() {
        let spec = WorkloadSpec::new(Generator::Star, 101, 100)
            .mix(OpMix::new(0.5, 0.5, 0.0, 0.0))
            .phased(true);
        let ops = spec.generate().unwrap();
        assert_eq!(ops.len(), 200);
        for (i, op) in ops[..100].iter().enumerate() {
            assert_eq!(*op, Op::Add(0, i as u32 + 1));
        }
        assert!(ops[100..]
            .iter()
            .all(|o| matches!(o, Op::ContainsHit(0, _))));
    }

    #[test]
    fn grid_edges_are_lattice_neighbors() {
        let spec = WorkloadSpec::new(Generator::Grid, 100, 180).mix(OpMix::ADD_ONLY);
        let mut seen = HashSet::new();
        for op in spec.generate().unwrap() {
            let Op::Add(x, y) = op else {
                panic!("add-only mix")
            };
            assert!(y == x + 1 || y == x + 10, "({x}, {y})");
            seen.insert((x, y));
        }
        // A 10x10 lattice has exactly 180 directed right/down edges.
        assert_eq!(seen.len(), 180);
    }

    #[test]
    fn mix_parsing() {
        assert_eq!(
            "0.6,0.2,0.15,0.05".parse::<OpMix>().unwrap(),
            OpMix::default()
        );
        assert!("0.5,0.5".parse::<OpMix>().is_err());
        assert!("0.5,0.2,0.2,0.2".parse::<OpMix>().is_err());
        assert!("0,0.5,0.5,0".parse::<OpMix>().is_err());
        assert!("a,b,c,d".parse::<OpMix>().is_err());
    }
}
