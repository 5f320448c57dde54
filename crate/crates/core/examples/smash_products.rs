//! Hom-smash products over Sweedler's Hopf algebra, the coactions on them,
//! and a Yetter-Drinfeld module over k[C2].

use homtwist::algebra::check_hom_algebra;
use homtwist::cli::table::render_table;
use homtwist::exact::{int, one, Matrix};
use homtwist::gallery;
use homtwist::smash::{
    check_bicomodule, check_comodule_hom_algebra, check_smash_twist_compat, check_yetter_drinfeld,
    coaction_lambda_smash, coaction_rho_smash, smash_left, smash_right, ActionTable, CoactionTable, Side,
};

pub fn run() -> homtwist::Result<()> {
    let b = gallery::sweedler_h4(&int(2))?;
    let (h, a) = (b.bialgebra("H_hom")?, b.algebra("A_hom")?);
    let left = smash_left(a, h, b.action("action_hom")?)?;
    println!("A # H is Hom-associative: {}", check_hom_algebra(&left.algebra)?);
    println!("{}", render_table(&left.algebra));
    let right = smash_right(h, a, b.action("action_right_hom")?)?;
    println!("H # A is Hom-associative: {}", check_hom_algebra(&right.algebra)?);
    let rho = coaction_rho_smash(a, h, b.action("action_hom")?)?;
    println!("rho makes A # H a comodule Hom-algebra: {}", check_comodule_hom_algebra(h, &left.algebra, &rho)?);

    let (h0, a0) = (b.bialgebra("H")?, b.algebra("A")?);
    let compat = check_smash_twist_compat(
        h0,
        a0,
        b.action("action")?,
        &b.linear_map("alpha_h")?.matrix,
        &b.linear_map("alpha_a")?.matrix,
    )?;
    println!("twisting commutes with smashing: {compat}");

    let c2 = gallery::cyclic_group_bialgebra(2);
    let act = ActionTable::from_fn(Side::Left, 2, Matrix::identity(2), |g, m| vec![(if g == 0 { m } else { 1 - m }, one())])?;
    let triv = CoactionTable::from_fn(Side::Left, 2, Matrix::identity(2), |m| vec![(0, m, one())])?;
    println!("Yetter-Drinfeld: {}", check_yetter_drinfeld(&c2, &act, &triv)?);
    let k2 = gallery::k2();
    let lam = coaction_lambda_smash(&k2, &c2, &act, &triv)?;
    let rho = coaction_rho_smash(&k2, &c2, &act)?;
    println!("bicomodule: {}", check_bicomodule(c2.coalgebra(), &lam, &rho)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> homtwist::Result<()> {
    run()
}
