// New mahonian statistics from g-maps and set pairs.

use std::collections::BTreeSet;

use majinv::mahonian::stat_eo_permutation_formula;
use majinv::qseries::is_mahonian_up_to;
use majinv::relations::{s_ab, u_ab};
use majinv::{distribution, Composition, GMap, MajInvStatistic};
use num_rational::Ratio;

pub fn run_example() -> majinv::Result<()> {
    let k = Ratio::new(3, 2);
    let g = GMap::g_k(4, k)?;
    let stat = MajInvStatistic::from_gmap(&g);
    println!("stat_g for k = {k}: U = {:?}", stat.u());
    assert!(is_mahonian_up_to(&stat, 4));

    let b: BTreeSet<usize> = [1, 3].into_iter().collect();
    let h = MajInvStatistic::from_gmap(&GMap::h_b(4, &b)?);
    println!("stat_H for B = {b:?}: U = {:?}", h.u());
    assert!(is_mahonian_up_to(&h, 4));

    for r in [3, 4] {
        let evens: BTreeSet<usize> = (1..=r).filter(|x| x % 2 == 0).collect();
        let odds: BTreeSet<usize> = (1..=r).filter(|x| x % 2 == 1).collect();
        let u = u_ab(r, &evens, &odds)?;
        let eo = MajInvStatistic::new(u.clone(), s_ab(r, &evens)?.difference(&u)?)?;
        let dist = distribution(&eo, &Composition::new(vec![1; r])?)?;
        println!("stat_EO over S_{r}: {dist}");
        assert_eq!(dist, stat_eo_permutation_formula(r));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> majinv::Result<()> {
    run_example()
}
