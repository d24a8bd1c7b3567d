//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num::rational::BigRational;
use num::BigInt;
use rayon::prelude::*;

use braidquot::braid::{check_structure, involution_image, relation_set, KodairaStructure};
use braidquot::db::{load_group_db, GroupDb};
use braidquot::families::{self, FamilyVariant, FormSpec};
use braidquot::invariants::{covering_data, diagonal_slope_bound, slope_series};
use braidquot::io::{parse_structure_file, write_structure_file, StructureFile};
use braidquot::search::{
    orbit_count, scan, search, ScanSearchOutcome, SearchConfig, SearchMode, StructureList, ZFilter,
};
use braidquot::zmod::is_prime;
use braidquot::{Elem, GroupLabel};

fn db() -> &'static GroupDb {
    static DB: OnceLock<GroupDb> = OnceLock::new();
    DB.get_or_init(|| {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/smallgroups_1_63.txt");
        load_group_db(path).expect("bundled database loads")
    })
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn count_jobs(label: GroupLabel, jobs: usize) -> u64 {
    let g = db().get(label).unwrap();
    let mut cfg = SearchConfig::new(2, ZFilter::AnyOrder, SearchMode::Count);
    cfg.jobs = jobs;
    search(g, &cfg).unwrap().count
}

fn enumerate_all(label: GroupLabel) -> &'static StructureList {
    static S49: OnceLock<StructureList> = OnceLock::new();
    static S50: OnceLock<StructureList> = OnceLock::new();
    let cell = match (label.order, label.index) {
        (32, 49) => &S49,
        (32, 50) => &S50,
        _ => panic!("only the order-32 extra-special groups are cached"),
    };
    cell.get_or_init(|| {
        let g = db().get(label).unwrap();
        let mut cfg = SearchConfig::new(2, ZFilter::AnyOrder, SearchMode::Enumerate);
        cfg.jobs = 8;
        search(g, &cfg).unwrap().exemplars
    })
}

#[test]
fn criterion_01_small_order_emptiness() {
    let report = scan(db(), 1, 31, 2, false, 4).unwrap();
    assert_eq!(report.rows.len(), 93);
    for row in &report.rows {
        assert!(!row.found_structures(), "unexpected structure on {}", row.label);
    }
    println!("[PASS] criterion 1: scan 1..31 at genus 2 finds zero structures on all 93 groups");
}

#[test]
fn criterion_02_order_32_characterization() {
    let report = scan(db(), 32, 32, 2, false, 4).unwrap();
    assert_eq!(report.rows.len(), 51);
    let with_structures: BTreeSet<GroupLabel> = report
        .rows
        .iter()
        .filter(|r| r.found_structures())
        .map(|r| r.label)
        .collect();
    let expected: BTreeSet<GroupLabel> =
        [GroupLabel::new(32, 49), GroupLabel::new(32, 50)].into_iter().collect();
    assert_eq!(with_structures, expected);
    println!("[PASS] criterion 2: order-32 structures exist exactly on 32/49 and 32/50");
}

#[test]
fn criterion_03_epimorphism_count() {
    for index in [49u32, 50] {
        let label = GroupLabel::new(32, index);
        assert_eq!(count_jobs(label, 8), 2_211_840, "count on {label}");
        let list = enumerate_all(label);
        assert_eq!(list.len(), 2_211_840);
        let g = db().get(label).unwrap();
        // every found structure has n = 2 and is strong
        let all_good = (0..list.len()).into_par_iter().all(|i| {
            let s = list.to_structure(i, g);
            if s.n != 2 {
                return false;
            }
            let v = check_structure(g, &s).unwrap();
            v.is_structure && v.is_strong
        });
        assert!(all_good, "all structures on {label} verify strong of type (2, 2)");
    }
    println!("[PASS] criterion 3: 2211840 epimorphisms on each of 32/49 and 32/50, all strong of type (2, 2)");
}

#[test]
fn criterion_04_orbit_counts() {
    let cases = [(49u32, 1152usize, 1920usize), (50, 1920, 1152)];
    for (index, expect_aut, expect_orbits) in cases {
        let label = GroupLabel::new(32, index);
        let g = db().get(label).unwrap();
        let list = enumerate_all(label);
        let report = orbit_count(g, list, None).unwrap();
        assert_eq!(report.aut_order, expect_aut, "|Aut| of {label}");
        assert_eq!(report.orbits, expect_orbits, "orbits on {label}");
        assert_eq!(report.aut_order * report.orbits, 2_211_840);
        assert_eq!(report.min_orbit_size, expect_aut as u64, "free action on {label}");
        assert_eq!(report.max_orbit_size, expect_aut as u64);
    }
    println!("[PASS] criterion 4: 1920 orbits for 32/49 (|Aut| = 1152), 1152 for 32/50 (|Aut| = 1920)");
}

#[test]
fn criterion_05_gap_theorem() {
    let report = scan(db(), 33, 63, 2, false, 4).unwrap();
    let searched: BTreeSet<GroupLabel> = report
        .rows
        .iter()
        .filter(|r| r.outcome != ScanSearchOutcome::NotSearched)
        .map(|r| r.label)
        .collect();
    let expected: BTreeSet<GroupLabel> =
        [GroupLabel::new(54, 5), GroupLabel::new(54, 6)].into_iter().collect();
    assert_eq!(searched, expected, "filter survivors in 33..63");
    for row in &report.rows {
        assert!(!row.found_structures(), "unexpected structure on {}", row.label);
    }
    // the survivors really were searched over every z order, not just n = 2
    for label in [GroupLabel::new(54, 5), GroupLabel::new(54, 6)] {
        let g = db().get(label).unwrap();
        let cfg = SearchConfig::new(2, ZFilter::AnyOrder, SearchMode::Count);
        assert_eq!(search(g, &cfg).unwrap().count, 0);
    }
    println!("[PASS] criterion 5: orders 33..63 filter to 54/5 and 54/6 only; neither is a quotient");
}

#[test]
fn criterion_06_theorem2_witnesses() {
    for (b, p, order) in [(2usize, 3u32, 243u64), (3, 2, 128)] {
        for variant in [FamilyVariant::H, FamilyVariant::G] {
            let (g, s) = families::theorem2_structure(b, p, variant).unwrap();
            assert_eq!(g.order(), order);
            let v = check_structure(&g, &s).unwrap();
            assert!(v.is_structure, "({b}, {p}, {variant}) verifies");
            assert!(v.is_strong, "({b}, {p}, {variant}) is strong");
            assert_eq!(v.z_order, p);
        }
    }
    println!("[PASS] criterion 6: strong witnesses of types (2, 3) and (3, 2) at orders 243 and 128, both variants");
}

#[test]
fn criterion_07_theorem1_witnesses() {
    for (b, p) in [(2usize, 5u32), (2, 7)] {
        for variant in [FamilyVariant::H, FamilyVariant::G] {
            let (g, s) = families::theorem1_structure(b, p, variant, None).unwrap();
            assert_eq!(g.order(), (p as u64).pow(9));
            let v = check_structure(&g, &s).unwrap();
            let expect_m = (p as u64).pow(4);
            assert!(v.is_structure);
            assert_eq!(v.m1, expect_m, "index of K1 at p = {p}");
            assert_eq!(v.m2, expect_m);
            assert!(!v.is_strong);
        }
    }
    println!("[PASS] criterion 7: non-strong witnesses at p in {{5, 7}} with m1 = m2 = p^4, both variants");
}

#[test]
fn criterion_08_slope_numerics() {
    let primes: Vec<u64> = (5..=97).filter(|&p| is_prime(p)).collect();
    let report = slope_series(&primes).unwrap();
    let expected_max = ratio(2, 1) + ratio(12, 35);
    assert_eq!(report.points[0].1, expected_max); // p = 5
    assert_eq!(report.points[1].1, expected_max); // p = 7
    assert!(report.max_attained_at_5_and_7);
    assert!(report.strictly_decreasing_from_7);
    assert!(report.all_above_2_plus_1_3);
    assert!(report.all_in_diagonal_range);
    for (_, nu, _) in &report.points {
        assert!(diagonal_slope_bound(nu));
    }
    println!("[PASS] criterion 8: slope 2 + 12/35 at p = 5, 7; strictly decreasing beyond; all in range");
}

#[test]
fn criterion_09_signature_minimum() {
    // signatures over the structures found in criteria 2..7
    let mut sigmas: Vec<(BigRational, u64, u64)> = Vec::new(); // (sigma, b, order)
    let mut nus: Vec<BigRational> = Vec::new();

    // order-32 structures are all of type (2, 2) and strong
    for index in [49u32, 50] {
        let g = db().get(GroupLabel::new(32, index)).unwrap();
        let list = enumerate_all(GroupLabel::new(32, index));
        // all share (b, n, order, m) so one covering evaluation suffices,
        // but sample a few structures to tie m to the actual verdicts
        for i in [0usize, list.len() / 2, list.len() - 1] {
            let s = list.to_structure(i, g);
            let v = check_structure(g, &s).unwrap();
            let inv = covering_data(2, s.n as u64, 32, v.m1 as u128, v.m2 as u128).unwrap();
            sigmas.push((inv.sigma, 2, 32));
            nus.push(inv.nu);
        }
    }
    for (b, p, order) in [(2usize, 3u32, 243u64), (3, 2, 128)] {
        for variant in [FamilyVariant::H, FamilyVariant::G] {
            let (g, s) = families::theorem2_structure(b, p, variant).unwrap();
            let v = check_structure(&g, &s).unwrap();
            let inv = covering_data(
                b as u64,
                s.n as u64,
                order as u128,
                v.m1 as u128,
                v.m2 as u128,
            )
            .unwrap();
            sigmas.push((inv.sigma, b as u64, order));
            nus.push(inv.nu);
        }
    }
    for (b, p) in [(2usize, 5u32), (2, 7)] {
        for variant in [FamilyVariant::H, FamilyVariant::G] {
            let (g, s) = families::theorem1_structure(b, p, variant, None).unwrap();
            let v = check_structure(&g, &s).unwrap();
            let inv = covering_data(
                b as u64,
                s.n as u64,
                g.order() as u128,
                v.m1 as u128,
                v.m2 as u128,
            )
            .unwrap();
            sigmas.push((inv.sigma, b as u64, g.order()));
            nus.push(inv.nu);
        }
    }

    for nu in &nus {
        assert!(diagonal_slope_bound(nu), "every verified structure sits in the diagonal slope range");
    }
    let sixteen = ratio(16, 1);
    let four = BigInt::from(4);
    let mut min = sigmas[0].0.clone();
    for (sigma, _, _) in &sigmas {
        assert!(sigma.is_integer(), "sigma must be integral for genuine quotients");
        assert_eq!(sigma.to_integer() % &four, BigInt::from(0), "Meyer: 4 | sigma");
        if *sigma < min {
            min = sigma.clone();
        }
    }
    assert_eq!(min, sixteen);
    for (sigma, b, order) in &sigmas {
        if *sigma == sixteen {
            assert_eq!((*b, *order), (2, 32), "sigma = 16 only at type (2, 2) on order 32");
        }
    }
    println!("[PASS] criterion 9: min sigma = 16, attained only at (b, n, |G|) = (2, 2, 32); all divisible by 4");
}

#[test]
fn criterion_10a_relation_count() {
    for b in 2..=6 {
        assert_eq!(relation_set(b).unwrap().len(), 4 * b * b + 2 * b + 2);
    }
    println!("[PASS] criterion 10a: relation count 4b^2 + 2b + 2 for b = 2..6");
}

#[test]
fn criterion_10b_involution_invariance_on_order_32() {
    for index in [49u32, 50] {
        let label = GroupLabel::new(32, index);
        let g = db().get(label).unwrap();
        let list = enumerate_all(label);
        let ok = (0..list.len()).into_par_iter().all(|i| {
            let s = list.to_structure(i, g);
            let image = involution_image(g, &s);
            check_structure(g, &image).unwrap().is_structure
        });
        assert!(ok, "involution fixes the structure set of {label}");
    }
    // sampled non-structures are taken to non-structures
    let g = db().get(GroupLabel::new(32, 49)).unwrap();
    let mut seed = 0x9e3779b97f4a7c15u64;
    let mut next = || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed % 32
    };
    let mut checked = 0;
    while checked < 200 {
        let tuple: Vec<Elem> = (0..9).map(|_| next()).collect();
        let cand = KodairaStructure {
            label: Some(GroupLabel::new(32, 49)),
            b: 2,
            n: 2,
            tuple,
        };
        let direct = check_structure(g, &cand).unwrap().is_structure;
        let image = check_structure(g, &involution_image(g, &cand)).unwrap().is_structure;
        assert_eq!(direct, image);
        checked += 1;
    }
    println!("[PASS] criterion 10b: involution invariance on all order-32 structures and 200 random candidates");
}

#[test]
fn criterion_10c_abelian_impossibility() {
    let mut abelian_count = 0;
    for label in db().labels_in_orders(1, 63) {
        let g = db().get(label).unwrap();
        let cls = braidquot::classify::classify(g).unwrap();
        if !cls.abelian {
            continue;
        }
        abelian_count += 1;
        let cfg = SearchConfig::new(2, ZFilter::AnyOrder, SearchMode::Exists);
        assert_eq!(search(g, &cfg).unwrap().count, 0, "abelian {label}");
    }
    assert!(abelian_count > 100, "catalogue has many abelian groups");
    println!("[PASS] criterion 10c: no structures on any of the {abelian_count} abelian groups of order <= 63");
}

#[test]
fn criterion_10d_determinant_closed_form() {
    for b in [2usize, 3] {
        for p in [5u32, 7, 11] {
            let mut tested = 0;
            // sampled grid: uniform scalars c, d with b c = b d = 1 scaled
            // through every unit, plus perturbed vectors
            for c in 1..p {
                for d in 1..p {
                    let lambda = balanced_vector(b, p, c);
                    let mu = balanced_vector(b, p, d);
                    let spec = FormSpec {
                        b,
                        p,
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                    };
                    if spec.validate().is_err() {
                        continue;
                    }
                    let omega = families::omega_matrix(&spec).unwrap();
                    let mut expect = 1u64;
                    for j in 0..b {
                        let prod = lambda[j] as u64 * mu[j] as u64 % p as u64;
                        let factor = (1 + p as u64 - prod) % p as u64;
                        expect = expect * factor % p as u64 * factor % p as u64;
                    }
                    assert_eq!(omega.det() as u64, expect, "b={b} p={p}");
                    assert!(omega.is_alternating());
                    assert_ne!(omega.det(), 0);
                    tested += 1;
                }
            }
            assert!(tested > 0, "grid produced no valid specs at b={b}, p={p}");
        }
    }
    println!("[PASS] criterion 10d: det(Omega) = prod (1 - lambda_j mu_j)^2 over the sampled scalar grid");
}

/// First vector with entries summing to 1 whose first entry is c: used to
/// walk a deterministic sample of valid scalar vectors.
fn balanced_vector(b: usize, p: u32, c: u32) -> Vec<u32> {
    let mut v = vec![c; b];
    let sum: u64 = v.iter().map(|&x| x as u64).sum();
    let have = (sum % p as u64) as u32;
    // adjust the last entry to force the sum to 1 mod p, keeping it nonzero
    let last = v[b - 1];
    let want = (1 + p - have % p) % p;
    let adjusted = (last + want) % p;
    v[b - 1] = if adjusted == 0 { last } else { adjusted };
    v
}

#[test]
fn criterion_10e_class2_associativity() {
    use braidquot::class2::Class2Group;
    use braidquot::zmod::MatZp;
    // exhaustive associativity for every family presentation of order <= 243
    let mut cases: Vec<Class2Group> = Vec::new();
    for (rank, p) in [(2usize, 2u32), (2, 3), (2, 5), (4, 2), (4, 3)] {
        let mut a = MatZp::zero(p, rank, rank);
        for j in (0..rank).step_by(2) {
            a.set(j, j + 1, p - 1);
            a.set(j + 1, j, 1);
        }
        for carries in [vec![0u32; rank], {
            let mut v = vec![0u32; rank];
            v[rank - 2] = 1;
            v[rank - 1] = 1;
            v
        }] {
            cases.push(Class2Group::new(p, &a, carries).unwrap());
        }
    }
    for g in &cases {
        let n = g.order();
        assert!(n <= 243);
        for x in 0..n {
            for y in 0..n {
                let xy = g.mul(x, y);
                for z in 0..n {
                    assert_eq!(g.mul(xy, z), g.mul(x, g.mul(y, z)));
                }
            }
        }
    }
    println!("[PASS] criterion 10e: class-2 multiplication associative, exhaustive at order <= 243");
}

#[test]
fn roundtrip_serialized_structures_reverify() {
    // a slice of enumerated structures survives a write/read cycle untouched
    let label = GroupLabel::new(32, 49);
    let g = db().get(label).unwrap();
    let mut cfg = SearchConfig::new(2, ZFilter::AnyOrder, SearchMode::Exists);
    cfg.jobs = 1;
    let found = search(g, &cfg).unwrap().exemplars;
    assert_eq!(found.len(), 1);
    let file = StructureFile {
        family: None,
        records: vec![found.to_structure(0, g)],
    };
    let mut buf = Vec::new();
    write_structure_file(&mut buf, &file).unwrap();
    let parsed = parse_structure_file(std::str::from_utf8(&buf).unwrap()).unwrap();
    assert_eq!(parsed.records, file.records);
    let v = check_structure(g, &parsed.records[0]).unwrap();
    assert!(v.is_structure && v.is_strong);
}
