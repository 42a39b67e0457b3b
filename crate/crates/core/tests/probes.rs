//! Operation-count measurements of the hashed and list stores.

use hashlist_core::bench::{
    run_workload, scaling_sweep, Generator, Lcg64, OpClass, OpMix, Selection, StructureKind,
    WorkloadSpec,
};
use hashlist_core::{EdgeHash, EdgeStore, StoreConfig};

#[test]
fn linear_probing_at_half_load() {
    const EDGES: usize = 1 << 15;
    let mut t = EdgeHash::new(StoreConfig::new(1 << 20, EDGES)).unwrap();
    assert_eq!(t.capacity(), 2 * EDGES);
    let mut rng = Lcg64::new(2024);
    let mut stored = Vec::with_capacity(EDGES);
    while stored.len() < EDGES {
        let (x, y) = (rng.below(1 << 20) as u32, rng.below(1 << 20) as u32);
        if t.add_edge(x, y).unwrap() {
            stored.push((x, y));
        }
    }
    assert_eq!(t.load_factor(), 0.5);
    assert_eq!(t.rebuilds(), 0);

    let hit: u64 = stored
        .iter()
        .map(|&(x, y)| t.contains_traced(x, y).unwrap().cost)
        .sum();
    let hit_mean = hit as f64 / EDGES as f64;

    let mut miss = 0u64;
    let mut misses = 0u64;
    while misses < 100_000 {
        let (x, y) = (rng.below(1 << 20) as u32, rng.below(1 << 20) as u32);
        let r = t.contains_traced(x, y).unwrap();
        if !r.value {
            miss += r.cost;
            misses += 1;
        }
    }
    let miss_mean = miss as f64 / misses as f64;
    // Classical expectations at load 1/2 are 1.5 and 2.5.
    assert!(hit_mean <= 2.0, "successful mean {hit_mean}");
    assert!(miss_mean <= 4.0, "unsuccessful mean {miss_mean}");
}

#[test]
fn uniform_workload_contains_probes() {
    let spec = WorkloadSpec::new(Generator::Uniform, 1000, 100_000).seed(3);
    let sel = Selection::new([StructureKind::HashList, StructureKind::MultiList]);
    let report = run_workload(&spec, &sel).unwrap();
    for class in [OpClass::ContainsHit, OpClass::ContainsMiss] {
        let mean = report.row("hashlist", class).unwrap().mean_counter;
        assert!(mean <= 4.0, "{class}: {mean}");
    }
}

#[test]
fn star_contrast() {
    let k = 10_000;
    let spec = WorkloadSpec::new(Generator::Star, k + 1, k as usize)
        .mix(OpMix::new(0.5, 0.5, 0.0, 0.0))
        .phased(true);
    let sel = Selection::new([StructureKind::HashList, StructureKind::MultiList]);
    let report = run_workload(&spec, &sel).unwrap();
    let ml = report
        .row("multilist", OpClass::ContainsHit)
        .unwrap()
        .mean_counter;
    let hl = report
        .row("hashlist", OpClass::ContainsHit)
        .unwrap()
        .mean_counter;
    assert!(ml >= 1_000.0, "multilist {ml}");
    assert!(hl <= 4.0, "hashlist {hl}");
}

#[test]
fn enumerate_rows_count_every_node() {
    let spec = WorkloadSpec::new(Generator::Uniform, 500, 20_000).seed(8);
    let sel = Selection::new([StructureKind::HashList, StructureKind::MultiList]);
    let report = run_workload(&spec, &sel).unwrap();
    let hl = report.row("hashlist", OpClass::Enumerate).unwrap();
    let ml = report.row("multilist", OpClass::Enumerate).unwrap();
    // Both walk the same chains, one node per neighbor.
    assert_eq!(hl.mean_counter, ml.mean_counter);
    assert_eq!(hl.max_counter, ml.max_counter);
}

#[test]
fn multilist_scan_grows_with_degree() {
    let base = WorkloadSpec::new(Generator::Uniform, 1000, 10_000)
        .seed(12)
        .phased(true);
    let sel = Selection::new([StructureKind::HashList, StructureKind::MultiList]);
    let report = scaling_sweep(&base, &[1, 2, 4], &sel).unwrap();
    let scans: Vec<f64> = report
        .series("multilist", OpClass::ContainsMiss)
        .map(|r| r.mean_counter)
        .collect();
    // A miss walks the whole chain, so the mean tracks the mean degree m / n.
    for (scan, m) in scans.iter().zip([10_000.0, 20_000.0, 40_000.0]) {
        let degree = m / 1000.0;
        assert!(
            (scan / degree - 1.0).abs() < 0.1,
            "scan {scan} vs degree {degree}"
        );
    }
    for row in report.series("hashlist", OpClass::Add) {
        let capacity = (row.slots_allocated - 1000) / 3;
        assert!(capacity.is_power_of_two());
        assert!(
            capacity as f64 / row.edges as f64 <= 4.0,
            "{}",
            row.structure
        );
    }
}
