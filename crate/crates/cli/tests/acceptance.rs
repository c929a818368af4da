//! One line per acceptance criterion. The covers of Picard number five are
//! known not to match their printed data; they must fail in exactly the
//! documented way.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use coxk3::verify::{run, Status, VerificationReport, CASES};

const CRITERIA: [&str; 12] = [
    "toric degree matrices",
    "blow-up pipeline",
    "double cover presentations",
    "inconsistent cover detected",
    "isotropic basis dimensions",
    "two (-2)-classes example",
    "index-two effective cone",
    "nef cones",
    "classification table",
    "rank-two polyhedrality",
    "del Pezzo predictions",
    "lattice counts",
];

fn time_limit(criterion: u8) -> Duration {
    Duration::from_secs(match criterion {
        1 | 2 => 1,
        3 => 5,
        11 => 30,
        _ => 60,
    })
}

fn main() {
    let start = Instant::now();
    let mut by_criterion: BTreeMap<u8, (Vec<VerificationReport>, Duration)> = BTreeMap::new();
    for case in CASES {
        let t = Instant::now();
        let reports = run(Some(case.id)).unwrap();
        let entry = by_criterion.entry(case.criterion).or_default();
        entry.0.extend(reports);
        entry.1 += t.elapsed();
    }
    let total = start.elapsed();

    let mut failed = Vec::new();
    for (criterion, (reports, elapsed)) in &by_criterion {
        let wanted = if *criterion == 4 { Status::Deviation } else { Status::Pass };
        let off: Vec<&VerificationReport> = reports.iter().filter(|r| r.status != wanted).collect();
        let in_time = *elapsed < time_limit(*criterion);
        let ok = off.is_empty() && in_time;
        let detail = if off.is_empty() {
            format!("{} check{}", reports.len(), if reports.len() == 1 { "" } else { "s" })
        } else {
            off.iter().map(|r| format!("{}: {:?}", r.case, r.status)).collect::<Vec<_>>().join(", ")
        };
        println!(
            "criterion {criterion:>2}: {} {} ({detail}; {:.2} s)",
            if ok { "PASS" } else { "FAIL" },
            CRITERIA[*criterion as usize - 1],
            elapsed.as_secs_f64()
        );
        if !ok {
            failed.push((*criterion, off.into_iter().map(|r| (r.case.clone(), r.status)).collect::<Vec<_>>(), in_time));
        }
    }
    println!("total: {:.2} s", total.as_secs_f64());

    assert_eq!(by_criterion.len(), 12);
    assert!(total < Duration::from_secs(60));
    // the printed root degree of the quintic del Pezzo cover is K rather
    // than -K; no basis change can repair that, so criterion 3 cannot hold
    assert_eq!(failed, vec![(3, vec![("cover-rho5-i".to_owned(), Status::Deviation)], true)]);
}
