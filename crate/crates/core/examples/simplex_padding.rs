//! Prepending simplex blocks to a hull-1 code keeps the hull one-dimensional
//! and adds 4^{k-1} to the distance per block; stripping reverses it.

use hullforge::construct::{extend_simplex, fixture, simplex, strip_simplex};
use hullforge::hull::hull_dimension;

fn main() {
    for k in 2..=4 {
        let s = simplex(k);
        let wd = s.weight_distribution().unwrap();
        println!(
            "S_{k}: length {}, weights {:?}",
            s.length(),
            wd.counts()
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .collect::<Vec<_>>()
        );
    }

    let base = fixture("G_[13,3,9]").unwrap().code();
    for blocks in 0..=3 {
        let padded = extend_simplex(&base, blocks).unwrap();
        println!(
            "G_[13,3,9] + {blocks} blocks -> [{}, 3, {}], hull {}",
            padded.length(),
            padded.min_distance().unwrap(),
            hull_dimension(&padded)
        );
        if blocks > 0 {
            let back = strip_simplex(&padded, blocks).unwrap();
            assert_eq!(back, base.clone());
        }
    }
}
