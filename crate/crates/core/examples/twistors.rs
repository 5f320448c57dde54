//! Deforming a Hom-associative algebra along a Hom-twistor, and the
//! alpha-pseudotwistor coming from a Yau twist.

use homtwist::algebra::{yau_twist_algebra, HomAlgebra};
use homtwist::cli::table::render_table;
use homtwist::exact::{int, zero};
use homtwist::gallery;
use homtwist::twistor::{check_alpha_pseudotwistor, check_hom_twistor, deform, deform_with_alpha, yau_operator};

pub fn run() -> homtwist::Result<()> {
    let (a, l1, l2) = (int(2), int(3), int(-1));
    let d = gallery::two_dim_algebra(&a, &l1, &l2)?;
    let t = gallery::two_dim_twistor(&l1, &l2)?;
    println!("T is a Hom-twistor: {}", check_hom_twistor(&d, &t)?);
    let dt = deform(&d, &t)?;
    println!("D^T:\n{}", render_table(&dt));

    let d0 = gallery::two_dim_algebra(&a, &l1, &zero())?;
    let plain = HomAlgebra::plain(d0.mul_matrix().clone())?;
    let alpha = d0.alpha();
    let (t, c1, c2) = yau_operator(alpha)?;
    println!("alpha (x) alpha is an alpha-pseudotwistor: {}", check_alpha_pseudotwistor(&plain, alpha, &t, &c1, &c2)?);
    let deformed = deform_with_alpha(&plain, alpha, &t)?;
    println!("same as the Yau twist: {}", deformed == yau_twist_algebra(&plain, alpha)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> homtwist::Result<()> {
    run()
}
