use zetaorder::chartab::CharacterTable;
use zetaorder::groups::{make_catalog, GroupTag};

fn main() {
    for tag in [GroupTag::Symmetric(3), GroupTag::Agl1(7), GroupTag::Agl1Prime(7),
                GroupTag::Sl2_3, GroupTag::Alternating(5), GroupTag::Psl2(7)] {
        let g = make_catalog(tag).unwrap();
        let t0 = std::time::Instant::now();
        let table = CharacterTable::new(&g).unwrap();
        println!("{tag}: degrees {:?} in {:?}", table.degrees(), t0.elapsed());
    }
    for tag in [GroupTag::Psl2(8), GroupTag::Psl2(9), GroupTag::Psl2(13), GroupTag::Psl3_3, GroupTag::Sz8] {
        let g = make_catalog(tag).unwrap();
        let t0 = std::time::Instant::now();
        let table = CharacterTable::new(&g).unwrap();
        println!("{tag}: degrees {:?} in {:?}", table.degrees(), t0.elapsed());
    }
}
