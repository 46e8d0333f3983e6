// Define a recurrence in the plain-text format, evaluate it and check its
// properties.
//
//     cargo run --example custom_sequence

use infinity_series::analysis::scan_runs;
use infinity_series::analysis::RunPredicate;
use infinity_series::properties::{run_one, HarnessConfig};
use infinity_series::RadixRecurrence;

const CONFIG: &str = "\
# w(3n) = -w(n), w(3n+1) = w(n) + 1, w(3n+2) = -w(n) + 2
name w
radix 3
branch 0 - 0
branch 1 + 1
branch 2 - 2
";

fn main() {
    let w = RadixRecurrence::parse_config("custom", CONFIG).unwrap();
    println!("{w}");
    println!("first 27 notes: {:?}", w.prefix(27));
    println!(
        "longest non-negative run in the first 3^8: {}",
        scan_runs(&w, 3usize.pow(8), RunPredicate::NonNegative)
    );

    let config = HarnessConfig::for_sequence(&w);
    for id in [2, 8] {
        let e = run_one(&w, &config, id);
        println!("property {id} ({}): {}", e.name(), e.verdict);
    }

    // Round trip through the text format.
    let again = RadixRecurrence::parse_config("custom", &w.to_config()).unwrap();
    assert_eq!(again.prefix(100), w.prefix(100));
}
