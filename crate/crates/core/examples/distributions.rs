// Distribution polynomials over rearrangement classes, q-multinomials and
// the bipartitional product formula.

use majinv::qseries::{bipartitional_product_formula, q_factorial, q_multinomial};
use majinv::relations::{extract_bipartition, kappa_closure};
use majinv::{distribution, Composition, MajInvStatistic, Relation};

pub fn run_example() -> majinv::Result<()> {
    let c = Composition::new(vec![2, 1, 1])?;
    let inv = MajInvStatistic::inv(3)?;
    let maj = MajInvStatistic::maj(3)?;
    let target = q_multinomial(&c)?;
    println!("[4; 2,1,1]_q = {target}");
    assert_eq!(distribution(&inv, &c)?, target);
    assert_eq!(distribution(&maj, &c)?, target);

    let big = q_factorial(12);
    println!(
        "[12]_q! has degree {:?} and value {} at q = 1",
        big.degree(),
        big.eval_at_one()
    );

    let u = Relation::from_pairs(3, &[(1, 2)])?;
    let h = kappa_closure(&u);
    let b = extract_bipartition(&h)?;
    let stat = MajInvStatistic::new(u.clone(), h.difference(&u)?)?;
    for c in [vec![1, 1, 1], vec![2, 2, 1], vec![0, 3, 2]] {
        let c = Composition::new(c)?;
        let brute = distribution(&stat, &c)?;
        let formula = bipartitional_product_formula(&c, &b)?;
        println!("R({c}): {brute}");
        assert_eq!(brute, formula);
    }
    println!("JSON: {}", target.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> majinv::Result<()> {
    run_example()
}
