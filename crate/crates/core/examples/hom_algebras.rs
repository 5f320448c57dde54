//! Hom-associative algebras from structure constants, Yau twists and
//! Hom-bialgebras.

use homtwist::algebra::{check_associative, check_hom_algebra, yau_twist_algebra};
use homtwist::cli::table::render_table;
use homtwist::coalgebra::{check_hom_bialgebra, yau_twist_bialgebra};
use homtwist::exact::{frac, int, Matrix};
use homtwist::gallery;

pub fn run() -> homtwist::Result<()> {
    let d = gallery::two_dim_algebra(&int(1), &int(2), &frac(1, 2))?;
    println!("D(1, 2, 1/2):\n{}", render_table(&d));
    println!("Hom-associative: {}", check_hom_algebra(&d)?);
    // not associative unless lambda2 = 0
    println!("associative: {}", check_associative(&d)?);

    let swap = Matrix::permutation(&[1, 0]);
    let twisted = yau_twist_algebra(&gallery::k2(), &swap)?;
    println!("\n(k2)_swap:\n{}", render_table(&twisted));
    println!("Hom-associative: {}", check_hom_algebra(&twisted)?);

    let h = gallery::cyclic_group_bialgebra(3);
    let rotate = Matrix::permutation(&[0, 2, 1]);
    let h_alpha = yau_twist_bialgebra(&h, &rotate)?;
    println!("\nk[C3] twisted by inversion is a Hom-bialgebra: {}", check_hom_bialgebra(&h_alpha)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> homtwist::Result<()> {
    run()
}
