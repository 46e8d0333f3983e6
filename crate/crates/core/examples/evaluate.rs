// Evaluate the infinity series three ways: the recursion, the run-length
// closed form, and the doubling substitution.
//
//     cargo run --example evaluate

use infinity_series::{eval_closed_form, expand_morphism, RadixRecurrence, RunLengthWord};

fn main() {
    let s = RadixRecurrence::infinity();
    println!("{s}");

    let opening = s.block(0, 20);
    println!("first 20 notes: {:?}", opening.values);

    for n in [19u64, 1_000_000, 1 << 40] {
        let word = RunLengthWord::decompose(n).expect("n > 0");
        println!(
            "s({n}) = {} ; closed form over {} runs of {word} = {}",
            s.eval(n),
            word.runs().len(),
            eval_closed_form(n)
        );
        assert_eq!(s.eval(n), eval_closed_form(n));
    }

    let morphic = expand_morphism(64);
    assert_eq!(morphic.values, s.prefix(64));
    println!("a -> (-a, a+1) from 0 reproduces the first 64 notes");

    // Blocks far out are filled from their parent range, not from zero.
    let far = s.block(1 << 50, 8);
    println!("s[2^50 ..][..8] = {:?}", far.values);
}
