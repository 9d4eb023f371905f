// Acceptance gate. Every comparison is exact (integer or polynomial
// equality); there are no floating-point tolerances. Prints one PASS/FAIL
// line per criterion and exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use majinv::mahonian::{
    is_classified_pair, set_maj_permutation_distribution, verify_applications,
    verify_classification, verify_distinctness, verify_kappa_machinery, verify_macmahon,
    verify_product_formula, verify_psi, verify_theorem_majinv, Report,
};
use majinv::qseries::q_factorial;
use majinv::relations::{
    divides, is_kappa_extensible, set_alphabet_relations, u_k, v_k, SetAlphabet,
};
use majinv::statistics::set_maj;
use majinv::{QPolynomial, Relation, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn clean(name: &str, rep: &Report) -> Result<(), String> {
    if rep.is_clean() {
        Ok(())
    } else {
        Err(format!(
            "{name}: {} violation(s), first: {} ({})",
            rep.violations.len(),
            rep.violations[0].case,
            rep.violations[0].detail
        ))
    }
}

fn macmahon() -> Outcome {
    let mut classes = 0;
    for r in 1..=4 {
        let rep = verify_macmahon(r, 6).map_err(|e| e.to_string())?;
        clean(&format!("r={r}"), &rep)?;
        classes += rep.witness("classes").and_then(|v| v.as_u64()).unwrap_or(0);
    }
    Ok(format!(
        "inv, maj and the q-multinomial agree on {classes} classes (r <= 4, weight <= 6)"
    ))
}

fn worked_set_maj() -> Outcome {
    let alpha = SetAlphabet::new(vec![
        vec![3, 9],
        vec![2],
        vec![1, 4, 8],
        vec![7],
        vec![5, 6],
    ])
    .map_err(|e| e.to_string())?;
    let pi = Word::new(vec![1, 2, 3, 4, 5], 5).map_err(|e| e.to_string())?;
    let value = set_maj(&alpha, &pi).map_err(|e| e.to_string())?;
    if value == 7 {
        Ok("MAJ({3,9}{2}{1,4,8}{7}{5,6}) = 7".into())
    } else {
        Err(format!("got {value}, expected 7"))
    }
}

fn set_maj_factorial() -> Outcome {
    let collections: Vec<Vec<Vec<u64>>> = vec![
        vec![vec![1], vec![0]],
        vec![vec![0, 5], vec![1, 2, 3]],
        vec![vec![4], vec![1, 7], vec![0, 9, 2]],
        vec![vec![3, 9], vec![2], vec![1, 4, 8]],
        vec![vec![10, 11], vec![0], vec![5, 20], vec![6]],
        vec![vec![3, 9], vec![2], vec![1, 4, 8], vec![7]],
        vec![vec![0, 1, 2], vec![3, 4], vec![5], vec![6, 7, 8]],
        vec![vec![8], vec![2, 6], vec![1, 9], vec![0, 3, 5]],
    ];
    for sets in collections {
        let r = sets.len();
        let alpha = SetAlphabet::new(sets.clone()).map_err(|e| e.to_string())?;
        let dist = set_maj_permutation_distribution(&alpha).map_err(|e| e.to_string())?;
        if dist != q_factorial(r) {
            return Err(format!("{sets:?}: {dist} differs from [{r}]_q!"));
        }
        let (u, v, _) = set_alphabet_relations(&alpha);
        if !is_classified_pair(&u, &v) {
            return Err(format!(
                "{sets:?}: set-MAJ pair is outside the classification"
            ));
        }
    }
    for r in 1..=4 {
        for k in 1..=r {
            let (u, v) = (u_k(r, k).unwrap(), v_k(r, k).unwrap());
            if !is_classified_pair(&u, &v) {
                return Err(format!(
                    "(U_{k}, V_{k}) on [{r}] is outside the classification"
                ));
            }
        }
    }
    Ok("set-MAJ distribution = [r]_q! on 8 collections (r = 2, 3, 4); Rawlings and set-MAJ pairs classified".into())
}

fn theorem_majinv() -> Outcome {
    let mut parts = Vec::new();
    for (r, pairs) in [(2, 256u64), (3, 262_144)] {
        let rep = verify_theorem_majinv(r, 4).map_err(|e| e.to_string())?;
        clean(&format!("r={r}"), &rep)?;
        if rep.checked != pairs {
            return Err(format!(
                "r={r}: checked {} pairs, expected {pairs}",
                rep.checked
            ));
        }
        parts.push(format!(
            "r={r}: {pairs} pairs, {} extensions",
            rep.witness("kappa_extension_pairs").unwrap()
        ));
    }
    Ok(format!(
        "equidistribution (weight <= 4) <=> kappa-extension; {}",
        parts.join("; ")
    ))
}

fn psi_theorem() -> Outcome {
    let mut checked = 0;
    for r in 1..=3 {
        let rep = verify_psi(r, 6).map_err(|e| e.to_string())?;
        clean(&format!("r={r}"), &rep)?;
        checked += rep.checked;
    }
    Ok(format!(
        "psi bijective, last letter kept, identity holds ({checked} checks, r <= 3, length <= 6)"
    ))
}

fn classification() -> Outcome {
    let mut lines = Vec::new();
    let mut failed = false;
    for (r, expected) in [(2, 4u64), (3, 36)] {
        let rep = verify_classification(r, 4).map_err(|e| e.to_string())?;
        let found = rep
            .witness("mahonian_pairs")
            .and_then(|v| v.as_u64())
            .unwrap_or(0);
        let mismatched: Vec<&str> = rep
            .violations
            .iter()
            .filter(|v| v.case.starts_with("U="))
            .map(|v| v.case.as_str())
            .collect();
        if rep.is_clean() && found == expected {
            lines.push(format!("r={r}: {found} mahonian pairs"));
        } else {
            failed = true;
            lines.push(format!(
                "r={r}: {found} mahonian pairs, expected {expected}; {} pair(s) mahonian but unclassified, e.g. {}",
                mismatched.len(),
                mismatched.first().unwrap_or(&"-")
            ));
        }
    }
    if failed {
        Err(lines.join("; "))
    } else {
        Ok(lines.join("; "))
    }
}

fn distinctness() -> Outcome {
    let rep = verify_distinctness(3, 3).map_err(|e| e.to_string())?;
    clean("r=3", &rep)?;
    let n = rep
        .witness("statistics")
        .and_then(|v| v.as_u64())
        .unwrap_or(0);
    if n != 36 {
        return Err(format!("{n} classified statistics, expected 36"));
    }
    Ok(format!(
        "36 statistics pairwise separated by words of length <= 3 ({} pairs)",
        rep.checked
    ))
}

fn kappa_machinery() -> Outcome {
    let rep = verify_kappa_machinery(3).map_err(|e| e.to_string())?;
    clean("r=3", &rep)?;
    let chain = Relation::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
    if is_kappa_extensible(&chain) || is_kappa_extensible(&divides(9).unwrap()) {
        return Err("a negative instance was accepted".into());
    }
    Ok(format!(
        "512 relations, {} bipartitional, {} kappa-extensible; chain and divisibility rejected",
        rep.witness("bipartitional").unwrap(),
        rep.witness("kappa_extensible").unwrap()
    ))
}

fn product_formula() -> Outcome {
    let rep = verify_product_formula(3, 5).map_err(|e| e.to_string())?;
    clean("r=3", &rep)?;
    Ok(format!(
        "{} kappa-extensible U x {} compositions match; exponent beta_l * C(m_l, 2)",
        rep.witness("kappa_extensible_relations").unwrap(),
        rep.witness("compositions").unwrap()
    ))
}

fn applications() -> Outcome {
    let rep = verify_applications(4).map_err(|e| e.to_string())?;
    clean("applications", &rep)?;
    let q = |c: &[i64]| QPolynomial::from_i64s(c);
    let s3 = q(&[2, 2, 2]);
    let s4 = (&q(&[1, 1, 1]) * &q(&[1, 1, 1, 1])).scale(&2.into());
    let eo = rep.witness("stat_EO").unwrap();
    if eo["S_3"] != s3.to_string() || eo["S_4"] != s4.to_string() {
        return Err(format!("stat_EO distributions {eo}"));
    }
    Ok(format!(
        "stat_EO: S_3 -> {s3}, S_4 -> {s4}; g_k, H_B, A/B families mahonian at r <= 4 ({} checks)",
        rep.checked
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 macmahon", macmahon),
        ("2 set-maj example", worked_set_maj),
        ("3 set-maj factorial", set_maj_factorial),
        ("4 equidistribution theorem", theorem_majinv),
        ("5 psi transformation", psi_theorem),
        ("6 classification count", classification),
        ("7 distinctness", distinctness),
        ("8 kappa machinery", kappa_machinery),
        ("9 product formula", product_formula),
        ("10 applications", applications),
    ];
    let mut failed = BTreeSet::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS [{name}] {detail} ({ms} ms)"),
            Err(detail) => {
                println!("FAIL [{name}] {detail} ({ms} ms)");
                failed.insert(name);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!(
            "acceptance: {} of 10 criteria fail: {:?}",
            failed.len(),
            failed
        );
        ExitCode::FAILURE
    }
}
