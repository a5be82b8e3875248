//! Engine output against files produced by `oracle/betti_oracle.py`, which
//! uses a knapsack sieve and unreduced boundary matrices modulo 2^31 - 1.

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;

use sally_core::conjectures::{scan_with, ConjectureReport};
use sally_core::hochster::betti_table;
use sally_core::SallyParams;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn parse_params(e: u32, field: &str) -> SallyParams {
    match field.split_once(',') {
        Some((m, n)) => SallyParams::two(e, m.parse().unwrap(), n.parse().unwrap()).unwrap(),
        None => SallyParams::one(e, field.parse().unwrap()).unwrap(),
    }
}

fn oracle_totals() -> Vec<(SallyParams, Vec<u64>)> {
    let text = fs::read_to_string(golden("betti_totals.tsv")).unwrap();
    text.lines()
        .map(|line| {
            let cols: Vec<&str> = line.split('\t').collect();
            let e: u32 = cols[0].parse().unwrap();
            let totals = cols[2].split(',').map(|x| x.parse().unwrap()).collect();
            (parse_params(e, cols[1]), totals)
        })
        .collect()
}

#[test]
fn betti_totals_match_oracle() {
    let rows = oracle_totals();
    assert_eq!(rows.len(), 145);
    for (p, expected) in rows {
        let table = betti_table(&p.semigroup(), None);
        assert_eq!(table.totals(), expected.as_slice(), "{p}");
    }
}

#[test]
fn conjecture_reports_match_oracle_byte_for_byte() {
    let mut cache: HashMap<SallyParams, Vec<u64>> = HashMap::new();
    for e in 6..=10 {
        for id in 1..=5 {
            let report: ConjectureReport = scan_with(id, e, |p| {
                cache.entry(*p).or_insert_with(|| betti_table(&p.semigroup(), None).totals().to_vec()).clone()
            })
            .unwrap();
            let expected = fs::read_to_string(golden(&format!("conjecture{id}_e{e}.txt"))).unwrap();
            assert_eq!(report.to_string(), expected, "conjecture {id} at e={e}");
        }
    }
}

#[test]
fn cached_and_direct_scans_agree() {
    for id in 1..=5 {
        let direct = sally_core::conjectures::scan(id, 7).unwrap();
        let expected = fs::read_to_string(golden(&format!("conjecture{id}_e7.txt"))).unwrap();
        assert_eq!(direct.to_string(), expected);
    }
}
