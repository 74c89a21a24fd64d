use hybrid_qmc::fbpoly::FbPoly;
use hybrid_qmc::pointsets::*;
use hybrid_qmc::space::*;

fn main() {
    let space = SpaceParams::new(2, 2.0, 2.0, 1, 1).unwrap();
    let w = WeightSpec::uniform(WeightFamily::Constant(1.0)).unwrap();
    let res = cbc_construct(&space, &w, 2, None).unwrap();
    println!("cbc: g={} z={} err={:.17}", res.point_set.gen_poly()[0].to_index(), res.point_set.gen_int()[0], res.int_error);
    let f = FbPoly::smallest_irreducible(2, 2).unwrap();
    for g in 1..4u64 {
        for z in [1u64, 3] {
            let ps = HybridPointSet::from_generators(2, 2, f.clone(), vec![FbPoly::from_index(2, g).unwrap()], vec![z]).unwrap();
            let e = qmc_int_error(&ps, &space, &w).unwrap();
            println!("g={g} z={z} err={e:.17}");
        }
    }
    // 1-d digital errors per g
    let s10 = SpaceParams::new(2, 2.0, 2.0, 1, 0).unwrap();
    for g in 1..4u64 {
        let ps = HybridPointSet::from_generators(2, 2, f.clone(), vec![FbPoly::from_index(2, g).unwrap()], vec![]).unwrap();
        let e = qmc_int_error(&ps, &s10, &w).unwrap();
        println!("1d g={g} err={e:.17} pts={:?}", (0..4).map(|v| ps.walsh_point(v)[0].to_string()).collect::<Vec<_>>());
    }
}
