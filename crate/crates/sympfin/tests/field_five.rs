use std::time::{Duration, Instant};

use sympfin::tables::combined_dims_for_pair;
use sympfin::{plane_counts, Ideals, PlaneCounts, SympSpace};

#[test]
fn tables_over_f5_within_budget() {
    let start = Instant::now();
    let s = SympSpace::standard(5, 4).unwrap();
    assert_eq!(plane_counts(&s).unwrap(), PlaneCounts::formula(5, 4));
    let ideals = Ideals::compute(&s);
    let d = ideals.dims();
    assert_eq!((d.dim_n, d.dim_d), (355, 270));
    assert!(d.m_equals_n && d.d_constructions_agree);
    assert!(sympfin::tables::contains_total(&s, &ideals.d));
    let c = combined_dims_for_pair(&s, &ideals.n, 0, 2).unwrap();
    assert_eq!((c.dim_o, c.dim_u), (375, 20));
    assert!(c.pr1_is_u && c.pr2_is_n);
    assert!(start.elapsed() < Duration::from_secs(180), "took {:?}", start.elapsed());
}
