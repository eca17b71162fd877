//! Empirical check of the O((n+m)·2^n) conversion cost: time the
//! input-weight functions from 10 to 18 inputs and watch the runtime
//! double with every extra input.

use revparity::bench::{growth_ratios, scaling_check};

fn main() {
    let points = scaling_check(18).unwrap();
    let ratios = growth_ratios(&points);

    println!(" n      rows   runtime-ms   ratio");
    for (i, point) in points.iter().enumerate() {
        let ratio = if i == 0 {
            "    -".to_string()
        } else {
            format!("{:>5.2}", ratios[i - 1])
        };
        println!(
            "{:>2} {:>9} {:>12.3}   {ratio}",
            point.inputs,
            1u64 << point.inputs,
            point.runtime_ms
        );
    }

    let mean = ratios
        .iter()
        .product::<f64>()
        .powf(1.0 / ratios.len() as f64);
    println!("\ngeometric mean of ratios: {mean:.3} (doubling would be 2.0)");
}
