// How often does each note occur among the first 2^N positions? A single
// binomial coefficient answers it, and note 0 thins out like 1/sqrt(N).
//
//     cargo run --example counting

use infinity_series::analysis::{count_note_brute, count_note_formula, density};
use infinity_series::RadixRecurrence;

fn main() {
    let s = RadixRecurrence::infinity();
    let exponent = 12;
    println!("note  formula  counted  (first 2^{exponent} positions)");
    for a in -4..=4 {
        let formula = count_note_formula(a, exponent).unwrap();
        let counted = count_note_brute(&s, a, exponent);
        assert_eq!(formula, counted as u128);
        println!("{a:>4} {formula:>8} {counted:>8}");
    }

    for n in [2u32, 10, 20, 60, 120] {
        let d = density(0, n).unwrap();
        println!(
            "density of 0 below 2^{n}: {:.6}",
            *d.numer() as f64 / *d.denom() as f64
        );
    }
}
