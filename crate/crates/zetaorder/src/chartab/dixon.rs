//! Dixon's modular method for exact character tables: split the class
//! algebra over a prime field F_ℓ with ℓ ≡ 1 (mod exp G), read off central
//! characters as simultaneous eigenvectors, then lift the eigenvalue
//! multiplicities back to exact cyclotomic values through the discrete
//! Fourier relation.

use crate::cyclo::Cyclotomic;
use crate::groups::Group;
use crate::modp::{is_prime_u64, poly_roots, primitive_root, Fp, Mat};

use super::ChartabError;

/// Class-count cap for the dense class-algebra computation.
pub const MAX_CLASSES: usize = 128;

/// Exact irreducible character values, one row per irreducible, one column
/// per conjugacy class, sorted by (degree, canonical value key). All values
/// are stored at conductor exp(G).
pub fn character_values(g: &Group) -> Result<Vec<Vec<Cyclotomic>>, ChartabError> {
    let r = g.class_count();
    if r > MAX_CLASSES {
        return Err(ChartabError::TooManyClasses {
            classes: r,
            max: MAX_CLASSES,
        });
    }
    let order = g.order() as u64;
    let exponent = g.exponent();
    let ell = dixon_prime(order, exponent);
    let f = Fp::new(ell);

    // Class-algebra structure constants c[i][j][k] = #{(x,y) ∈ C_i × C_j :
    // xy = z_k}, computed in one pass per (j, k) by classifying x = z_k·y⁻¹.
    let classes = g.conjugacy_classes();
    let mut c = vec![0u64; r * r * r];
    for k in 0..r {
        let zk = classes[k].rep as usize;
        for j in 0..r {
            for &y in &classes[j].members {
                let x = g.mul(zk, g.inv(y as usize) as usize);
                let i = g.class_of(x);
                c[(i * r + j) * r + k] += 1;
            }
        }
    }

    // Split F_ℓ^r into simultaneous eigenspaces of the class-sum matrices.
    let mut subspaces: Vec<Mat> = vec![Mat::identity(r)];
    for i in 1..r {
        if subspaces.iter().all(|b| b.cols == 1) {
            break;
        }
        let mut mi = Mat::zero(r, r);
        for j in 0..r {
            for k in 0..r {
                mi[(j, k)] = c[(i * r + j) * r + k] % ell;
            }
        }
        let mut next = Vec::new();
        for b in &subspaces {
            if b.cols == 1 {
                next.push(b.clone());
                continue;
            }
            let mb = mi.mul(&f, b);
            let x = b.solve(&f, &mb);
            let eigenvalues = poly_roots(&f, &x.charpoly(&f));
            let mut found = 0;
            for &lam in &eigenvalues {
                let mut shifted = x.clone();
                for d in 0..shifted.rows {
                    shifted[(d, d)] = f.sub(shifted[(d, d)], lam);
                }
                let ns = shifted.nullspace(&f);
                if ns.cols == 0 {
                    continue;
                }
                found += ns.cols;
                next.push(b.mul(&f, &ns));
            }
            if found != b.cols {
                return Err(ChartabError::InternalInconsistency(format!(
                    "class matrix {i} split only {found} of {} dimensions",
                    b.cols
                )));
            }
        }
        subspaces = next;
    }
    if subspaces.len() != r || subspaces.iter().any(|b| b.cols != 1) {
        return Err(ChartabError::InternalInconsistency(
            "class algebra did not split into r one-dimensional eigenspaces".into(),
        ));
    }

    // Central characters ω, normalized so ω(identity class) = 1.
    let class_sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();
    let inverse_class: Vec<usize> = (0..r).map(|j| g.inverse_class(j)).collect();
    let mut rows: Vec<(u64, Vec<u64>)> = Vec::with_capacity(r);
    for b in &subspaces {
        let mut omega: Vec<u64> = (0..r).map(|j| b[(j, 0)]).collect();
        if omega[0] == 0 {
            return Err(ChartabError::InternalInconsistency(
                "central character vanishes on the identity class".into(),
            ));
        }
        let scale = f.inv(omega[0]);
        for w in omega.iter_mut() {
            *w = f.mul(*w, scale);
        }
        // d² = |G| / Σ_j ω_j ω_{j*} / h_j, lifted to an exact integer.
        let mut t = 0u64;
        for j in 0..r {
            let term = f.mul(f.mul(omega[j], omega[inverse_class[j]]), f.inv(class_sizes[j] % ell));
            t = f.add(t, term);
        }
        let d_sq = f.mul(order % ell, f.inv(t));
        if d_sq > order {
            return Err(ChartabError::InternalInconsistency(
                "lifted degree square exceeds the group order".into(),
            ));
        }
        let d = isqrt(d_sq);
        if d * d != d_sq {
            return Err(ChartabError::InternalInconsistency(
                "lifted degree square is not a perfect square".into(),
            ));
        }
        let chi: Vec<u64> = (0..r)
            .map(|j| f.mul(f.mul(d % ell, omega[j]), f.inv(class_sizes[j] % ell)))
            .collect();
        rows.push((d, chi));
    }

    // Lift each χ(g_j) to a cyclotomic through its eigenvalue multiplicities
    // μ_t = n⁻¹ Σ_k χ(g^k) w^{−tk}, w a fixed primitive n-th root mod ℓ.
    let z = primitive_root(ell);
    let mut lifted: Vec<(u64, Vec<Cyclotomic>)> = Vec::with_capacity(r);
    for (d, chi) in rows {
        let mut values = Vec::with_capacity(r);
        for j in 0..r {
            let rep = classes[j].rep as usize;
            let n = g.element_order(rep);
            let w_inv = f.inv(f.pow(z, (ell - 1) / n));
            let n_inv = f.inv(n % ell);
            let chi_pows: Vec<u64> = (0..n).map(|k| chi[g.power_class(j, k as i64)]).collect();
            let mut terms = Vec::new();
            for t in 0..n {
                let mut mu = 0u64;
                let mut wk = 1u64;
                let wt = f.pow(w_inv, t);
                for &cp in &chi_pows {
                    mu = f.add(mu, f.mul(cp, wk));
                    wk = f.mul(wk, wt);
                }
                mu = f.mul(mu, n_inv);
                if mu > d {
                    return Err(ChartabError::InternalInconsistency(
                        "lifted eigenvalue multiplicity exceeds the degree".into(),
                    ));
                }
                if mu > 0 {
                    terms.push((t as i64, crate::cyclo::rat_int(mu as i64)));
                }
            }
            values.push(Cyclotomic::from_terms(n as u32, terms).raise_conductor(exponent as u32));
        }
        lifted.push((d, values));
    }

    lifted.sort_by(|(da, va), (db, vb)| {
        da.cmp(db).then_with(|| {
            for (x, y) in va.iter().zip(vb) {
                let ord = x.cmp_key(y);
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    Ok(lifted.into_iter().map(|(_, v)| v).collect())
}

/// Least prime ℓ ≡ 1 (mod exponent) exceeding 2·|G|^{3/2}.
fn dixon_prime(order: u64, exponent: u64) -> u64 {
    let bound = 2 * order * (isqrt(order) + 1);
    let mut k = bound / exponent + 1;
    loop {
        let candidate = k * exponent + 1;
        if candidate > bound && is_prime_u64(candidate) {
            return candidate;
        }
        k += 1;
    }
}

fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}
