//! Iterated twisted tensor products: the two-sided Hom-smash product and a
//! triple of flips.

use homtwist::exact::{int, zero};
use homtwist::gallery;
use homtwist::smash::{smash_left, smash_right, smash_two_sided};
use homtwist::twisted::{check_braid, iterated_ttp, TwistingMap};

pub fn run() -> homtwist::Result<()> {
    let b = gallery::sweedler_h4(&int(2))?;
    let (h, a) = (b.bialgebra("H_hom")?, b.algebra("A_hom")?);
    let (left, right) = (b.action("action_hom")?, b.action("action_right_hom")?);
    let r1 = smash_left(a, h, left)?.twisting;
    let r2 = smash_right(h, a, right)?.twisting;
    let r3 = TwistingMap::flip(a.dim(), a.dim());
    println!("braid relation: {}", check_braid(&r1, &r2, &r3)?);
    let it = smash_two_sided(a, h, a, left, right)?;
    println!("A # H # A has dimension {}", it.algebra.dim());

    let x = gallery::k2();
    let y = gallery::two_dim_algebra(&int(1), &int(2), &zero())?;
    let z = gallery::dual_numbers();
    let it = iterated_ttp(
        &x,
        &y,
        &z,
        &TwistingMap::flip(2, 2),
        &TwistingMap::flip(2, 2),
        &TwistingMap::flip(2, 2),
    )?;
    println!("both bracketings of k2 (x) D (x) k[y]/(y^2) agree, dimension {}", it.algebra.dim());
    Ok(())
}

#[allow(dead_code)]
fn main() -> homtwist::Result<()> {
    run()
}
