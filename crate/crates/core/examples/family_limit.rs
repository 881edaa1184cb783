//! A family limit: setting the family parameter to `1/t` in (18;l|1) and
//! letting `t -> 0` along a curve gives (16|2). Prints the transported
//! constants before and after the limit.
//!
//! `cargo run --example family_limit`

use superdegen::catalog::Catalog;
use superdegen::degen::{shipped, specialization_limit, transport_along, verify_specialization, Cert};
use superdegen::exact::{display_t, Field};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::embedded();
    let certs = shipped("family_limits")?;
    let Some(Cert::Specialization(c)) = certs.iter().find(|c| c.target() == "(16|2)") else {
        return Err("no certificate for (16|2)".into());
    };
    println!("{} : {} -> {}", c.id, c.source, c.target);

    let point = transport_along(cat, c)?.map_err(|v| v.detail().to_string())?;
    for (name, v) in point.constants.named_entries() {
        if !v.is_zero() {
            println!("  {name} = {}", display_t(v));
        }
    }
    let limit = specialization_limit(cat, c)?.map_err(|v| v.detail().to_string())?;
    println!("limit at t = 0:");
    for (name, v) in limit.named_entries() {
        if !v.is_zero() {
            println!("  {name} = {v}");
        }
    }
    println!("verdict: {:?}", verify_specialization(cat, c)?);
    Ok(())
}
