// Bipartitional relations, kappa-extensions and the kappa-closure.

use majinv::relations::{
    divides, extract_bipartition, forbidden_quadruple, is_bipartitional, is_kappa_extensible,
    is_kappa_extension, kappa_closure,
};
use majinv::Relation;

pub fn run_example() -> majinv::Result<()> {
    let u = Relation::from_pairs(3, &[(1, 2)])?;
    let closure = kappa_closure(&u);
    println!("U = {u:?}");
    println!("closure = {closure:?}");
    assert!(is_kappa_extension(&closure, &u)?);
    assert!(is_bipartitional(&closure));
    println!(
        "closure as bipartition: {}",
        extract_bipartition(&closure)?.to_json()
    );

    let chain = Relation::from_pairs(3, &[(1, 2), (2, 3)])?;
    println!(
        "chain {chain:?}: extensible = {}, forbidden quadruple = {:?}",
        is_kappa_extensible(&chain),
        forbidden_quadruple(&chain)
    );

    let d = divides(9)?;
    assert!(!is_kappa_extensible(&d));
    println!(
        "divisibility on [9] has forbidden quadruple {:?}",
        forbidden_quadruple(&d)
    );

    let json = closure.to_json();
    assert_eq!(Relation::from_json(&json)?, closure);
    println!("JSON form: {json}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> majinv::Result<()> {
    run_example()
}
