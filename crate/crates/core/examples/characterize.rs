// Run the eight bounded property checks on every builtin sequence.
//
//     cargo run --release --example characterize

use infinity_series::properties::{run_all, HarnessConfig};
use infinity_series::RadixRecurrence;

fn main() {
    for name in RadixRecurrence::BUILTIN_NAMES {
        let seq = RadixRecurrence::builtin(name).unwrap();
        let report = run_all(&seq, &HarnessConfig::for_sequence(&seq));
        println!("{}", report.to_text());
        for entry in &report.properties {
            assert!(entry.reverify(&seq), "{name} property {}", entry.id);
        }
    }
}
