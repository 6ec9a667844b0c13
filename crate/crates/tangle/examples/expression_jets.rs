//! Parse a scalar expression and evaluate it together with its first
//! three derivatives via jet arithmetic.
//!
//! ```text
//! cargo run -p tangle --example expression_jets
//! ```

use tangle::expr::Expression;

fn main() -> tangle::Result<()> {
    let kappa = Expression::parse("1 + s^2")?;
    println!("expression: {kappa}");
    println!("variable:   {:?}", kappa.variable());
    println!();
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>12}",
        "s", "value", "d1", "d2", "d3"
    );
    for i in 0..=8 {
        let s = -2.0 + 0.5 * i as f64;
        let j = kappa.evaluate_jet(s, 3)?;
        println!(
            "{s:>6.2} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            j.c0, j.c1, j.c2, j.c3
        );
    }

    // The same machinery differentiates compositions exactly.
    let phase = Expression::parse("sin(t^2/2)")?;
    let j = phase.evaluate_jet(1.0, 3)?;
    println!();
    println!("{phase} at t=1: value {:.6}, slope {:.6}", j.c0, j.c1);
    println!(
        "analytic:          value {:.6}, slope {:.6}",
        0.5f64.sin(),
        0.5f64.cos()
    );

    // Domain violations are errors, not NaNs.
    let sqrt = Expression::parse("sqrt(x)")?;
    println!();
    println!(
        "sqrt(-1) evaluates to: {:?}",
        sqrt.evaluate(-1.0).unwrap_err().to_string()
    );
    Ok(())
}
