use sqext_core::ring::{Field, Ring};
use sqext_core::serre::{sheaf_cohomology_table, SerreContext};
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let ctx1 = SerreContext::standard(Ring::new(Field::Fp(32003), vec!["x0".into(), "x1".into()]));
    let t1 = sheaf_cohomology_table(1, -5, 5, 0, 1, &ctx1).unwrap();
    println!("P1 grid in {:?}: {:?}", t0.elapsed(), t1);
    let t0 = Instant::now();
    let ctx2 = SerreContext::standard(Ring::new(
        Field::Fp(32003),
        vec!["x0".into(), "x1".into(), "x2".into()],
    ));
    let t2 = sheaf_cohomology_table(2, -5, 5, 0, 2, &ctx2).unwrap();
    println!("P2 grid in {:?}:", t0.elapsed());
    for (i, row) in t2.iter().enumerate() {
        println!("  d={}: {:?}", i as i64 - 5, row);
    }
}
