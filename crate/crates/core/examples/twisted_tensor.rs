//! Twisted tensor products: the lambda family on k2 (x) k2 and the
//! Hom-twisting families on the two-dimensional algebra.

use homtwist::cli::table::render_table;
use homtwist::exact::{frac, int, zero, Rational};
use homtwist::gallery;
use homtwist::twisted::{check_hom_twisting_map, check_twisting_map, ttp};

pub fn run() -> homtwist::Result<()> {
    for lambda in [int(0), int(2)] {
        let r = gallery::k2_lambda_map(&lambda);
        println!("lambda = {lambda}: {}", check_twisting_map(&gallery::k2(), &gallery::k2(), &r)?);
        println!("{}", render_table(&ttp(&gallery::k2(), &gallery::k2(), &r)?));
    }

    let c: [Rational; 5] = [int(1), frac(1, 2), int(-2), int(0), int(3)];
    let b = gallery::homtwist_r1(&int(1), &int(3), &zero(), &c)?;
    let (d, r) = (b.algebra("D")?, b.twisting("R")?);
    println!("R1 is a Hom-twisting map: {}", check_hom_twisting_map(d, d, r)?);
    let classical = check_twisting_map(d, d, r)?;
    match classical.first_failure() {
        Some(f) => println!("but not a classical twisting map: {f}"),
        None => println!("and also a classical twisting map"),
    }
    // (phi (x) phi) . R1 = 0 for phi(e1) = 1, phi(e2) = lambda1, so D (x)_R1 D has zero product
    let b2 = gallery::homtwist_r2(&int(1), &int(3), &zero(), &c)?;
    println!("D (x)_R2 D:\n{}", render_table(b2.algebra("product")?));
    Ok(())
}

#[allow(dead_code)]
fn main() -> homtwist::Result<()> {
    run()
}
