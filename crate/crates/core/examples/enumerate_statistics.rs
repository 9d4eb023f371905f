// The r! mahonian maj-inv statistics attached to a total order, with their
// g-map parametrization.

use majinv::mahonian::{enumerate_mahonian_stats, mahonian_gmaps};
use majinv::qseries::is_mahonian_up_to;
use majinv::relations::{gmap_to_relation, relation_to_gmap};
use majinv::Relation;

pub fn run_example() -> majinv::Result<()> {
    // 1 > 3 > 2
    let s = Relation::from_pairs(3, &[(1, 3), (1, 2), (3, 2)])?;
    let gmaps = mahonian_gmaps(&s)?;
    let stats = enumerate_mahonian_stats(&s)?;
    println!("{} statistics for S = {s:?}", stats.len());
    for (m, stat) in gmaps.iter().zip(&stats) {
        let g: Vec<String> = m.g_values().iter().map(|t| t.to_string()).collect();
        println!(
            "  f = {:?}, g = [{}]: U = {:?}",
            m.f_values(),
            g.join(", "),
            stat.u()
        );
        assert!(is_mahonian_up_to(stat, 4));
        assert_eq!(&gmap_to_relation(m), stat.u());
        assert_eq!(&relation_to_gmap(stat.u(), &s)?, m);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> majinv::Result<()> {
    run_example()
}
