//! U_q(sl2) in PBW form, its Hom-bialgebra twist and the twisted action on
//! the quantum plane.

use homtwist::exact::{frac, int};
use homtwist::quantum::{
    check_uq_module_hom_algebra, pbw_normalize, rho_l, uq_coproduct, verify_example32, Gen, PlaneMono, QPlaneElement,
    UqParams,
};

pub fn run() -> homtwist::Result<()> {
    let params = UqParams::new(int(2), int(3), int(5), 0)?;
    let q = &params.q;
    println!("EF = {}", pbw_normalize(&[Gen::E, Gen::F], q));
    println!("KEF = {}", pbw_normalize(&[Gen::K, Gen::E, Gen::F], q));
    let delta: Vec<String> = uq_coproduct(&Gen::E.element(), q)
        .terms()
        .map(|((x, y), c)| format!("{c} {x}⊗{y}"))
        .collect();
    println!("Delta(E) = {}", delta.join(" + "));

    let xy = QPlaneElement::basis(PlaneMono::new(1, 1));
    for g in Gen::ALL {
        println!("{g:?} . xy = {}", rho_l(&g.element(), &xy, &params));
    }
    println!("module Hom-algebra up to degree 2: {}", check_uq_module_hom_algebra(&params, 2));
    println!("smash product closed forms: {}", verify_example32(&params, 1)?);

    let other = UqParams::new(int(3), frac(1, 2), int(2), 1)?;
    println!("l = 1 module Hom-algebra: {}", check_uq_module_hom_algebra(&other, 1));
    Ok(())
}

#[allow(dead_code)]
fn main() -> homtwist::Result<()> {
    run()
}
