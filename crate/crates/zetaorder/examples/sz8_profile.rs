use std::time::Instant;
use zetaorder::chartab::CharacterTable;
use zetaorder::groups::{make_catalog, GroupTag};

fn main() {
    let t0 = Instant::now();
    let g = make_catalog(GroupTag::Sz8).unwrap();
    println!("construct: {:?}", t0.elapsed());

    let t0 = Instant::now();
    let normals = g.normal_subgroups();
    println!("normal_subgroups ({} found): {:?}", normals.len(), t0.elapsed());

    let t0 = Instant::now();
    let _ = CharacterTable::new(&g).unwrap();
    println!("table: {:?}", t0.elapsed());

    let t0 = Instant::now();
    let agl5 = make_catalog(GroupTag::Agl1(5)).unwrap();
    let emb = g.find_subgroup_isomorphic(&agl5, 0).unwrap();
    println!("embed search (order {}): {:?}", emb.order(), t0.elapsed());

    let t0 = Instant::now();
    let cert = zetaorder::certify::certify_s2(&g).unwrap();
    println!("certify_s2: {:?}", t0.elapsed());
    let t0 = Instant::now();
    let v = zetaorder::certify::verify_certificate(&g, &cert).unwrap();
    println!("verify_s2 ({}): {:?}", v.is_accept(), t0.elapsed());
}
