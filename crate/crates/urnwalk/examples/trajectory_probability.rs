//! Exact probability of a 2-D diagonal path and its rotation onto the
//! axis-stepping simple walk.

use urnwalk::urn::{Color, UrnScheme};
use urnwalk::walk::{map_to_simple_2d, Trajectory};
use Color::{Blue as B, White as W};

fn main() {
    // first urn Pólya(1,1), second urn Pólya(2,1); eight diagonal steps
    let steps: Vec<Vec<Color>> = [
        [W, W],
        [W, W],
        [B, W],
        [B, B],
        [B, W],
        [B, W],
        [B, W],
        [W, W],
    ]
    .iter()
    .map(|p| p.to_vec())
    .collect();
    let t = Trajectory::new(
        vec![
            (UrnScheme::PolyaEggenberger, 1, 1),
            (UrnScheme::PolyaEggenberger, 2, 1),
        ],
        steps,
    );

    println!("path probability: {}", t.probability().unwrap());

    let diagonal: Vec<(i64, i64)> = t
        .positions()
        .unwrap()
        .iter()
        .map(|p| (p[0], p[1]))
        .collect();
    let simple = map_to_simple_2d(&diagonal).unwrap();
    println!("diagonal walk     -> simple walk");
    for (d, s) in diagonal.iter().zip(&simple) {
        println!("({:>2},{:>2})          -> ({},{})", d.0, d.1, s.0, s.1);
    }

    // the same eight steps under two fair coins
    let coin_steps = t.steps.clone();
    let coin = Trajectory::new(
        vec![
            (UrnScheme::fair_coin(), 1, 1),
            (UrnScheme::fair_coin(), 1, 1),
        ],
        coin_steps,
    );
    println!("same path, fair coins: {}", coin.probability().unwrap());
}
