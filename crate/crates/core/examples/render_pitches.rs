// Play the series as pitches: each value is a half-step offset from a
// base note. Prints the opening phrase in text, CSV and JSON.
//
//     cargo run --example render_pitches

use infinity_series::export::{export, Format, MelodyRow};
use infinity_series::pitch::{render_melody, render_note, Pitch};
use infinity_series::RadixRecurrence;

fn main() {
    let s = RadixRecurrence::infinity();
    let base: Pitch = "G4".parse().unwrap();
    let phrase = s.block(0, 16);
    println!("{}", render_melody(base, &phrase.values));

    let row = MelodyRow {
        start: phrase.start,
        base: base.to_string(),
        notes: phrase
            .values
            .iter()
            .map(|&v| render_note(base, v))
            .collect(),
    };
    for format in [Format::Csv, Format::Json] {
        let bytes = export(std::slice::from_ref(&row), format).unwrap();
        println!("{}", String::from_utf8(bytes).unwrap().trim_end());
    }
}
