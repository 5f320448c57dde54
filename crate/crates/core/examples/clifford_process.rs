//! The Clifford process applied to the Yau twist of k2 by the swap.

use homtwist::algebra::check_hom_algebra;
use homtwist::cli::table::render_table;
use homtwist::exact::int;
use homtwist::gallery;
use homtwist::twisted::check_hom_twisting_map;

pub fn run() -> homtwist::Result<()> {
    for q in [int(2), int(-3)] {
        let b = gallery::clifford(&q)?;
        let r = check_hom_twisting_map(b.algebra("A")?, b.algebra("C")?, b.twisting("R")?)?;
        println!("q = {q}: R is a Hom-twisting map: {r}");
        let bar = b.algebra("algebra")?;
        println!("Hom-associative: {}", check_hom_algebra(bar)?);
        println!("{}", render_table(bar));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> homtwist::Result<()> {
    run()
}
