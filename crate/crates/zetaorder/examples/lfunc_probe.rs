use zetaorder::chartab::ClassFunction;
use zetaorder::lfunc::{builtin_field, builtin_view, factor_pattern_mod_p, LocalIdentity, ZetaSelector};

fn main() {
    // factor patterns of x^3 - 2
    let f = vec![-2i64, 0, 0, 1];
    println!("p=5: {:?}  p=7: {:?}  p=31: {:?}",
        factor_pattern_mod_p(&f, 5), factor_pattern_mod_p(&f, 7), factor_pattern_mod_p(&f, 31));

    let field = builtin_field("x3m2split").unwrap();
    for p in [5u64, 7, 31] {
        println!("frob class at {p}: {}", field.frobenius_class(p).unwrap());
    }
    // local factors
    let triv = ClassFunction::trivial(&field.group);
    println!("trivial@5: {}", field.local_factor(&triv, 5).unwrap().poly);
    let chi2 = field.table.irreducibles().iter().find(|c| c.degree_u64() == 2).unwrap();
    println!("chi2@5: {}", field.local_factor(chi2, 5).unwrap().poly);
    let reg = ClassFunction::regular(&field.group);
    println!("r_G@7: {}", field.local_factor(&reg, 7).unwrap().poly);

    // identities at p = 5
    for (name, id) in [("factorization", LocalIdentity::Factorization), ("regular", LocalIdentity::Regular), ("grouped", LocalIdentity::Grouped)] {
        let chk = field.check_local_identity(5, &id).unwrap();
        println!("{name}@5: pass={} lhs={} rhs={}", chk.pass, chk.lhs, chk.rhs);
    }

    // dirichlet coefficients of zeta_{Q(cbrt2)}
    let (field, view, _) = builtin_view("q_cbrt2").unwrap();
    let view = view.unwrap();
    let series = field.dirichlet_coefficients(&ZetaSelector::SubfieldZeta(&view), 32).unwrap();
    let ints: Vec<i64> = series.integer_coefficients().unwrap().iter().map(|b| i64::try_from(b).unwrap()).collect();
    println!("zeta_Q(cbrt2) a_1..a_32: {ints:?}");

    // ramified table
    let base = builtin_field("x3m2split").unwrap();
    for p in [2u64, 3] {
        let факс: Vec<String> = base.ramified_local_factors(p).unwrap().iter().map(|f| format!("{f}")).collect();
        println!("ramified factors @{p}: {факс:?}");
    }
}
