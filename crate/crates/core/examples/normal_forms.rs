//! Integer normal forms and the arithmetic underneath the integral side.
//!
//! `cargo run --example normal_forms`

use genalg::exactmath::{crt, factor, hnf, snf, Factorization, IntMatrix};
use num_bigint::BigInt;

fn main() -> genalg::Result<()> {
    let a = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let s = snf(&a);
    println!("SNF diagonal {:?}, rank {}", s.diagonal, s.rank());
    assert_eq!(s.left.mul(&a).mul(&s.right), s.diagonal_matrix());
    assert_eq!(s.left.mul(&s.left_inverse), IntMatrix::identity(3));

    let lattice = hnf(3, &a.to_rows())?;
    println!(
        "HNF basis {:?}, pivots {:?}, index {:?}",
        lattice.basis(),
        lattice.pivots(),
        lattice.index()
    );

    let x = crt(&[
        (BigInt::from(4), BigInt::from(3)),
        (BigInt::from(6), BigInt::from(5)),
        (BigInt::from(7), BigInt::from(2)),
    ])?;
    println!("x = 3 mod 4, 5 mod 6, 2 mod 7: x = {x}");
    assert!(crt(&[(BigInt::from(4), BigInt::from(1)), (BigInt::from(6), BigInt::from(2))]).is_err());

    for n in [
        "360",
        "1000000007",
        "600851475143",
        "340282366920938463463374607431768211457",
    ] {
        match factor(&n.parse().unwrap(), 1 << 20)? {
            Factorization::Complete(f) => println!("{n} = {f:?}"),
            Factorization::Incomplete { found, cofactor } => println!("{n}: found {found:?}, unfactored {cofactor}"),
        }
    }
    Ok(())
}
