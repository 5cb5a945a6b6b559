//! Split octonions from the Cayley-Dickson doubling, and three generators.
//!
//! `cargo run --example octonions`

use genalg::algebra::{identities, is_generating};
use genalg::exactmath::Field;
use genalg::zoo::{cayley_dickson, octonion_generators, quaternion_algebra, split_etale, split_octonion};

fn main() -> genalg::Result<()> {
    for field in [Field::prime(2)?, Field::prime(5)?, Field::Rational] {
        let o = split_octonion(field)?;
        let [a, b, c] = octonion_generators(field)?;
        let cert = is_generating(&o, &[a.clone(), b.clone(), c.clone()], false)?;
        println!(
            "octonions over {field}: dim {}, alternative {}, associative {} (violated at {:?}), triple closure {}",
            o.dim(),
            identities::is_alternative(&o),
            identities::is_associative(&o),
            identities::associativity_violation(&o),
            cert.closure_dim,
        );
        // Two elements of an alternative algebra generate an associative subalgebra.
        let pair = is_generating(&o, &[a, b], false)?;
        println!("  a pair reaches only dim {}", pair.closure_dim);
    }

    // The Hamilton quaternions (-1, -1) over Q, built by hand.
    let q = Field::Rational;
    let minus_one = q.from_i64(-1);
    let by_hand = cayley_dickson(&cayley_dickson(&split_etale(q, 1)?, &minus_one)?, &minus_one)?;
    let direct = quaternion_algebra(q, &minus_one, &minus_one)?;
    println!(
        "H over Q: dim {}, built twice identically: {}",
        direct.dim(),
        by_hand == direct
    );
    Ok(())
}
