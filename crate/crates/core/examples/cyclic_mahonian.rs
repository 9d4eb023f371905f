// A mahonian maj-inv statistic whose relations do not combine into a total
// order: U = {(1,2)}, V = {(2,3),(3,1)} on [3]. Its distribution is the
// q-multinomial on every class checked, although U + V is a 3-cycle.

use majinv::qseries::q_multinomial;
use majinv::relations::{is_kappa_extension, is_total_order};
use majinv::{distribution, Composition, MajInvStatistic, Relation};

pub fn run_example() -> majinv::Result<()> {
    let u = Relation::from_pairs(3, &[(1, 2)])?;
    let v = Relation::from_pairs(3, &[(2, 3), (3, 1)])?;
    let s = u.union(&v)?;
    println!("U + V = {s:?}: total order = {}", is_total_order(&s));
    assert!(!is_total_order(&s));
    assert!(!is_kappa_extension(&s, &u)?);

    let stat = MajInvStatistic::new(u, v)?;
    let mut classes = 0;
    for c in Composition::all_up_to(3, 7)? {
        assert_eq!(distribution(&stat, &c)?, q_multinomial(&c)?);
        classes += 1;
    }
    println!("maj'_U + inv'_V matches the q-multinomial on {classes} classes");
    Ok(())
}

#[allow(dead_code)]
fn main() -> majinv::Result<()> {
    run_example()
}
