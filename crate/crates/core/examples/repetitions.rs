// The infinity series never repeats a block x within less than 2|x| of
// itself; its variations contain squares and cubes.
//
//     cargo run --example repetitions

use infinity_series::analysis::{
    scan_powers, scan_proximal_repetitions, scan_repetitions, GapMode,
};
use infinity_series::RadixRecurrence;

fn main() {
    let s = RadixRecurrence::infinity();
    let close = scan_proximal_repetitions(&s, 1 << 12, 16);
    println!("x y x with |y| < 2|x| in s[..2^12]: {}", close.len());

    let boundary = scan_repetitions(&s, 1 << 8, 8, GapMode::Boundary);
    for r in boundary.iter().take(4) {
        println!(
            "  |y| = 2|x| at {}: x = {:?}",
            r.position, r.x_values.values
        );
    }

    let u = RadixRecurrence::first_variation();
    let squares = scan_repetitions(&u, 64, 2, GapMode::Square);
    let cubes = scan_powers(&u, 64, 2, 3);
    println!(
        "u: first square {:?} at {}",
        squares[0].x_values.values, squares[0].position
    );
    println!(
        "u: first cube {:?} at {}",
        cubes[0].x_values.values, cubes[0].position
    );
}
