//! Decay of the asymptotic error with the degree, in each region of the
//! Meixner family.

use turnpoint::families::{build_error_table, FamilyKind, FamilySpec, Region};

fn main() {
    let spec = FamilySpec::new(FamilyKind::Meixner { c: 0.25, beta: 1.0 }).unwrap();
    let ns = [100, 200, 400, 800];
    let cases = [
        (Region::Outer, vec![3.5, 4.0]),
        (Region::AiryPlus, vec![3.02, 3.05]),
        (Region::Band, vec![0.5, 1.0, 2.0]),
        (Region::Saturated, vec![0.1, 0.2]),
    ];
    for (region, ys) in cases {
        let t = build_error_table(&spec, &ns, &ys, region).unwrap();
        println!(
            "{region:?}: slope {:.3} +- {:.3}, max N rel_dev {:.3e}",
            t.slope, t.slope_stderr, t.max_scaled_dev
        );
    }
}
