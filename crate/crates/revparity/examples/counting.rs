//! How many n-variable parity-preserving reversible functions exist?
//! Exactly (2^{n-1}!)²: the odd-parity rows permute among themselves, as
//! do the even-parity rows. For n <= 3 the formula is cross-checked by
//! constructing and verifying every such permutation.

use revparity::{count_parity_preserving, enumerate_parity_preserving};

fn main() {
    println!(" n | parity-preserving reversible functions");
    println!("---+----------------------------------------");
    for n in 1..=6 {
        println!("{n:>2} | {}", count_parity_preserving(n));
    }

    println!();
    for n in 1..=3 {
        let enumerated = enumerate_parity_preserving(n).unwrap();
        let formula = count_parity_preserving(n);
        assert_eq!(num_bigint::BigUint::from(enumerated), formula);
        println!("n={n}: brute-force enumeration found {enumerated}, formula agrees");
    }
    println!(
        "n=4 would need (8!)\u{b2} = {} table constructions; formula only",
        count_parity_preserving(4)
    );
}
