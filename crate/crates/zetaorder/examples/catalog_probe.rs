use zetaorder::groups::{make_catalog, GroupTag};
fn main() {
    for tag in [GroupTag::Symmetric(3), GroupTag::Agl1(4), GroupTag::Agl1(5), GroupTag::Agl1Prime(7),
                GroupTag::Psl2(7), GroupTag::Sl2_3, GroupTag::Q8, GroupTag::Psl3_3] {
        let g = make_catalog(tag).unwrap();
        println!("{tag}: order {} degree {} classes {}", g.order(), g.degree(), g.class_count());
    }
    let t0 = std::time::Instant::now();
    let sz = make_catalog(GroupTag::Sz8).unwrap();
    println!("Sz(8): order {} degree {} classes {} in {:?}", sz.order(), sz.degree(), sz.class_count(), t0.elapsed());
}
