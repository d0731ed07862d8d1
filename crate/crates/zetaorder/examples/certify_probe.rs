use zetaorder::certify::{certify_s2, certify_s3, verify_certificate, thompson_match, is_minimal_simple};
use zetaorder::groups::{make_catalog, GroupTag};

fn main() {
    for tag in [GroupTag::Psl3_3, GroupTag::Sz8] {
        let g = make_catalog(tag).unwrap();
        let t0 = std::time::Instant::now();
        println!("thompson({tag}) = {:?}", thompson_match(&g).map(|i| format!("{i}")));
        let cert2 = certify_s2(&g).unwrap();
        let v2 = verify_certificate(&g, &cert2).unwrap();
        println!("S2 {tag}: {:?} | accept={}", cert2.strategy_log, v2.is_accept());
        let cert3 = certify_s3(&g).unwrap().unwrap();
        let v3 = verify_certificate(&g, &cert3).unwrap();
        println!("S3 {tag}: {:?} | accept={} total {:?}", cert3.strategy_log, v3.is_accept(), t0.elapsed());
    }
    for (tag, bound) in [(GroupTag::Alternating(5), 500), (GroupTag::Psl2(7), 500), (GroupTag::Psl2(9), 500), (GroupTag::Psl2(8), 504), (GroupTag::Symmetric(5), 500)] {
        let g = make_catalog(tag).unwrap();
        let t0 = std::time::Instant::now();
        let ms = is_minimal_simple(&g, bound).unwrap();
        println!("minimal_simple({tag}) = {ms} in {:?}", t0.elapsed());
    }
    // classification lookup for a non-materializable Suzuki group
    let cert = zetaorder::certify::certify_s3_classification(zetaorder::certify::ThompsonInstance::Sz(32)).unwrap();
    println!("Sz(32) classification cert: {:?}", cert.strategy_log);
}
