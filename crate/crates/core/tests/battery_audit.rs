use nakloc_core::battery;
use nakloc_core::verify::{self, Options};

#[test]
fn standard_battery_has_no_failures() {
    let reports = verify::verify_battery(&battery::standard(), Options::default());
    for r in &reports {
        for f in &r.failures {
            eprintln!("{} [{}] {}", f.algebra, f.invariant, f.detail);
        }
    }
    let table = verify::failure_table(&reports);
    assert!(table.is_empty(), "{table:?}");
}
