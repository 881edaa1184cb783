//! Exact scalars: Q(z) with z a primitive 8th root of unity, the family
//! parameter `l`, and rational functions in the curve parameter `t`.
//!
//! `cargo run --example exact_arithmetic`

use superdegen::exact::{display_t, parse_rational, parse_scalar, Cyclo8, Field, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r2 = Scalar::Const(Cyclo8::sqrt2());
    println!("sqrt2 = {r2}, squared = {}", r2.mul(&r2));

    let i = Scalar::Const(Cyclo8::i());
    println!("i^2 = {}", i.mul(&i));

    // (l^2 - 1) / (l - 1) reduces to l + 1
    let l = Scalar::lambda();
    let q = l.mul(&l).sub(&Scalar::one()).div(&l.sub(&Scalar::one())).unwrap();
    println!("(l^2 - 1)/(l - 1) = {q}");
    println!("at l = 3: {}", q.substitute_lambda(&Scalar::from_i64(3)).unwrap());

    let s = parse_scalar("1/2*z^3 + l/(l + 2)")?;
    println!("parsed: {s}");

    let f = parse_rational("(t^2 + t)/t")?;
    println!(
        "(t^2 + t)/t = {}, order at 0 = {:?}",
        display_t(&f),
        f.order_at_zero()
    );
    println!("value at t = 0: {:?}", f.eval_at_zero().map(|v| v.to_string()));

    let g = parse_rational("1/t")?;
    println!(
        "1/t has order {:?} and no value at 0: {:?}",
        g.order_at_zero(),
        g.eval_at_zero()
    );
    Ok(())
}
