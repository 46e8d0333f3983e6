// Which consecutive pairs (i, j) occur? Every pair is sorted into one of
// seven cases; attainable ones come with a constructed position.
//
//     cargo run --example note_pairs

use infinity_series::analysis::{case_table, classify_pair, quad_table};

fn main() {
    for (i, j) in [(2, -1), (3, 2), (3, -2), (1, -2), (-3, -5)] {
        let c = classify_pair(i, j);
        let at = c
            .witness
            .as_ref()
            .map(|w| format!("at n = {} ({})", w.position.unwrap(), w.word))
            .unwrap_or_else(|| "nowhere".into());
        println!(
            "({i:>2}, {j:>2}) {:?}, case {}, {at}",
            c.verdict, c.case_label
        );
    }

    print!("{}", case_table(-4..=4, -4..=4).unwrap().to_text());

    // The four values at 2k..2k+2 are tied to (s(k), s(k+1)).
    let q = quad_table(23).unwrap();
    println!("n = 23: {:?}", q.relations());
}
