//! Convert the built-in input-weight functions rdN_K (output = binary
//! count of ones in the input) and tabulate the extra lines each needs.
//!
//! All inputs of one weight w map to the same output pattern, and they all
//! share the input parity w mod 2, so the largest parity class is the
//! largest binomial coefficient C(N, w). That is what drives the garbage
//! count: g = ceil(log2 C(N, N/2)) + 1.

use std::time::Instant;

use revparity::{convert_irreversible, rd_generate, rd_name, verify, ParityProfile};

fn main() {
    println!("function  inputs  outputs  garbage  ancilla  largest-class  runtime-ms");
    for n in [5usize, 7, 8, 10, 16, 20] {
        let table = rd_generate(n).unwrap();
        let profile = ParityProfile::of(&table);
        let start = Instant::now();
        let converted = convert_irreversible(&table);
        let runtime = start.elapsed().as_secs_f64() * 1e3;
        assert!(verify(&converted).passed());
        println!(
            "{:<9} {:<7} {:<8} {:<8} {:<8} {:<14} {runtime:.3}",
            rd_name(n),
            table.num_inputs(),
            table.num_outputs(),
            converted.garbage(),
            converted.ancilla(),
            profile.max_class(),
        );
    }
}
