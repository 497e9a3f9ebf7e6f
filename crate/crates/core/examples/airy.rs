//! Airy functions on both sides of the origin, with and without extended
//! exponent, and the first few zeros of `Ai`.

use turnpoint::numerics::{airy, airy_scaled, airy_zero};

fn main() {
    println!("{:>8} {:>14} {:>14} {:>12}", "x", "Ai", "Bi", "Wronskian");
    for x in [-20.0, -5.0, -1.0, 0.0, 1.0, 5.0, 20.0] {
        let p = airy(x);
        let w = p.ai * p.bi_prime - p.ai_prime * p.bi;
        println!("{x:>8} {:>14.6e} {:>14.6e} {:>12.3e}", p.ai, p.bi, w * std::f64::consts::PI);
    }
    let big = airy_scaled(500.0);
    println!("Ai(500) = {}   Bi(500) = {}", big.ai, big.bi);
    let zeros: Vec<f64> = (1..=5).map(|k| airy_zero(k).unwrap()).collect();
    println!("zeros of Ai: {zeros:.6?}");
}
