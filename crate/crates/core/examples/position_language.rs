// Where does a given note occur? The positions of note `a`, written in
// binary, are recognized by a one-counter pushdown automaton, and that
// language is not regular.
//
//     cargo run --example position_language

use infinity_series::position::{
    binary_word, build_recognizer, enumerate_positions, pumping_witness,
};

fn main() {
    let note = 0;
    let positions = enumerate_positions(note, 19, 1 << 10);
    println!("first positions of {note}: {positions:?}");

    let m = build_recognizer(3);
    for n in [7u64, 19, 20] {
        let word = binary_word(n);
        println!("M_3 on {word}: {}", m.accepts(&word).unwrap());
    }

    let witness = pumping_witness(1, 4).unwrap();
    println!(
        "pumping constant {}: z = {} survives none of its {} splits",
        witness.pump_constant,
        witness.word,
        witness.refutations.len()
    );
    assert!(witness.verify());
    for r in witness.refutations.iter().take(3) {
        println!(
            "  |u| = {}, |v| = {} -> {} has note {}",
            r.u_len, r.v_len, r.pumped, r.pumped_value
        );
    }
}
