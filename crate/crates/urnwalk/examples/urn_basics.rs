//! The three urn schemes and their exact draw probabilities, plus the
//! exchangeability contrast between Pólya and Friedman.

use urnwalk::urn::{Color, UrnScheme, UrnState};
use Color::{Blue as B, White as W};

fn main() {
    let polya = UrnState::new(UrnScheme::PolyaEggenberger, 1, 1).unwrap();
    let friedman = UrnState::new(UrnScheme::Friedman, 1, 0).unwrap();

    println!("Pólya(1,1) white probability:    {}", polya.white_probability());
    println!("Friedman(1,0) white probability: {}", friedman.white_probability());

    let after = polya.apply_draw(W).apply_draw(W).apply_draw(B);
    println!(
        "Pólya(1,1) after W,W,B: {} white / {} total, next white prob {}",
        after.whites(),
        after.total_balls(),
        after.white_probability()
    );

    // Pólya draw sequences are exchangeable; Friedman sequences are not.
    println!(
        "Pólya   P(W,W,B,B) = {},  P(W,B,W,B) = {}",
        polya.sequence_probability(&[W, W, B, B]),
        polya.sequence_probability(&[W, B, W, B]),
    );
    println!(
        "Friedman P(W,W,W,B) = {},  P(W,B,W,W) = {}",
        friedman.sequence_probability(&[W, W, W, B]),
        friedman.sequence_probability(&[W, B, W, W]),
    );
}
