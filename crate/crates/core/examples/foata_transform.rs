// The transformation psi^U: a class-preserving bijection carrying
// maj'_U + inv'_{S \ U} to inv'_S when S is a kappa-extension of U.

use majinv::relations::{is_kappa_extension, natural_order, u_k};
use majinv::statistics::{graphical_inv, graphical_maj};
use majinv::transform::{gamma, psi, psi_inverse, x_factorization};
use majinv::words::enumerate_class;
use majinv::{Composition, Word};

pub fn run_example() -> majinv::Result<()> {
    let gt = natural_order(3)?;
    let w = Word::parse("3 1 2", 3)?;
    println!("psi(3 1 2) = {}", psi(&gt, &w)?);
    println!(
        "psi^-1(1 3 2) = {}",
        psi_inverse(&gt, &Word::parse("1 3 2", 3)?)?
    );

    let f = x_factorization(&gt, &Word::parse("3 1", 3)?, 2)?;
    println!("2-factorization of 3 1: {:?}", f);
    println!("gamma_2(3 1) = {}", gamma(&gt, 2, &Word::parse("3 1", 3)?)?);

    // U_2 = {(x, y): x >= y + 2} on [4], with the natural order as S.
    let u = u_k(4, 2)?;
    let s = natural_order(4)?;
    assert!(is_kappa_extension(&s, &u)?);
    let v = s.difference(&u)?;
    let c = Composition::new(vec![2, 1, 2, 1])?;
    let mut checked = 0;
    for w in enumerate_class(&c) {
        let image = psi(&u, &w)?;
        let left = graphical_inv(&s, &image)?;
        let right = graphical_maj(&u, &w)? + graphical_inv(&v, &w)?;
        assert_eq!(left, right);
        assert_eq!(psi_inverse(&u, &image)?, w);
        checked += 1;
    }
    println!("inv'_S(psi(w)) = 2-maj(w) on all {checked} words of R({c})");
    Ok(())
}

#[allow(dead_code)]
fn main() -> majinv::Result<()> {
    run_example()
}
