// Evaluate inv, maj, k-maj, set-MAJ and a g-map statistic on a few words.

use majinv::relations::{natural_order, GMap, SetAlphabet, Threshold};
use majinv::statistics::{graphical_inv, graphical_maj, k_maj, set_maj, stat_fg};
use majinv::{MajInvStatistic, Word};

pub fn run_example() -> majinv::Result<()> {
    let gt = natural_order(4)?;
    let w = Word::parse("3 1 4 2 2 1", 4)?;
    let inv = graphical_inv(&gt, &w)?;
    let maj = graphical_maj(&gt, &w)?;
    println!("w = {w}: inv = {inv}, maj = {maj}");
    for k in 1..=4 {
        println!("  {k}-maj = {}", k_maj(4, k, &w)?);
    }
    assert_eq!(k_maj(4, 1, &w)?, maj);
    assert_eq!(k_maj(4, 4, &w)?, inv);

    let alpha = SetAlphabet::new(vec![
        vec![3, 9],
        vec![2],
        vec![1, 4, 8],
        vec![7],
        vec![5, 6],
    ])?;
    let pi = Word::parse("1 2 3 4 5", 5)?;
    let value = set_maj(&alpha, &pi)?;
    println!("MAJ of the set sequence {{3,9}}{{2}}{{1,4,8}}{{7}}{{5,6}} = {value}");
    assert_eq!(value, 7);

    // f ranks the natural order; g(y) = y + 1 below 3 gives maj on [3].
    let m = GMap::new(
        vec![1, 2, 3],
        vec![
            Threshold::Finite(2),
            Threshold::Finite(3),
            Threshold::Infinity,
        ],
    )?;
    let stat = MajInvStatistic::from_gmap(&m);
    let w3 = Word::parse("3 1 2 3 1", 3)?;
    println!(
        "stat_fg(w) = {} (relations U = {:?}, V = {:?})",
        stat_fg(&m, &w3)?,
        stat.u(),
        stat.v()
    );
    assert_eq!(stat_fg(&m, &w3)?, stat.eval(&w3)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> majinv::Result<()> {
    run_example()
}
