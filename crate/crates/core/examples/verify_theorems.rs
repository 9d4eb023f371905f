// Exhaustive verifiers on a small alphabet, printing their reports.

use majinv::mahonian::{
    verify_classification, verify_distinctness, verify_kappa_machinery, verify_macmahon,
    verify_product_formula, verify_psi, verify_theorem_majinv,
};

pub fn run_example() -> majinv::Result<()> {
    let reports = [
        ("macmahon r=3", verify_macmahon(3, 5)?),
        ("equidistribution r=2", verify_theorem_majinv(2, 4)?),
        ("classification r=2", verify_classification(2, 4)?),
        ("distinctness r=2", verify_distinctness(2, 3)?),
        ("kappa machinery r=3", verify_kappa_machinery(3)?),
        ("product formula r=3", verify_product_formula(3, 4)?),
        ("psi r=2", verify_psi(2, 5)?),
    ];
    for (name, report) in &reports {
        println!(
            "{name}: checked {}, violations {}",
            report.checked,
            report.violations.len()
        );
        assert!(report.is_clean());
    }
    println!("{}", reports[2].1.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> majinv::Result<()> {
    run_example()
}
