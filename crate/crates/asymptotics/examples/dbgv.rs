use asymptotics::durfee::{vl_series, vl_series_remark0, MuRangeChoice};
use std::time::Instant;

fn main() {
    for k_max in [1i64, 2, 3, 4, 5, 6] {
        let t0 = Instant::now();
        let a = vl_series(60, 0, k_max, 1e-10, MuRangeChoice::Inclusive).unwrap();
        let t1 = t0.elapsed();
        let t0b = Instant::now();
        let b = vl_series_remark0(60, k_max, 1e-10, MuRangeChoice::Inclusive).unwrap();
        println!("k_max={k_max}: general {:?} ({} terms, v={}), remark {:?} (v={})",
            t1, a.terms.len(), a.value, t0b.elapsed(), b.value);
    }
}
