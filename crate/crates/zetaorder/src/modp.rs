//! Arithmetic, dense linear algebra, and polynomial machinery over prime
//! fields F_p with p < 2^63. Shared by the modular character-table
//! computation and by polynomial factorization patterns mod p.

/// A prime field F_p. All element values are reduced representatives.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Fp {
        debug_assert!(is_prime_u64(p));
        Fp { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }
}

/// Deterministic Miller–Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    let f = Fp { p: n };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = f.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = f.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Least primitive root mod p.
pub fn primitive_root(p: u64) -> u64 {
    let f = Fp::new(p);
    let phi = p - 1;
    let mut factors = Vec::new();
    let mut rest = phi;
    let mut d = 2;
    while d * d <= rest {
        if rest % d == 0 {
            factors.push(d);
            while rest % d == 0 {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        factors.push(rest);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| f.pow(g, phi / q) != 1))
        .expect("primitive root exists")
}

// ---------------------------------------------------------------------------
// Dense matrices over F_p
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn mul(&self, f: &Fp, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, other[(k, j)]));
                }
            }
        }
        out
    }

    /// Solves A·X = B where A has full column rank; panics on inconsistency.
    pub fn solve(&self, f: &Fp, b: &Mat) -> Mat {
        assert_eq!(self.rows, b.rows);
        let (rows, cols, bc) = (self.rows, self.cols, b.cols);
        let mut aug = Mat::zero(rows, cols + bc);
        for i in 0..rows {
            for j in 0..cols {
                aug[(i, j)] = self[(i, j)];
            }
            for j in 0..bc {
                aug[(i, cols + j)] = b[(i, j)];
            }
        }
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..cols {
            let Some(r) = (pivot_row..rows).find(|&r| aug[(r, col)] != 0) else {
                continue;
            };
            aug.swap_rows(pivot_row, r);
            let inv = f.inv(aug[(pivot_row, col)]);
            for j in col..cols + bc {
                aug[(pivot_row, j)] = f.mul(aug[(pivot_row, j)], inv);
            }
            for i in 0..rows {
                if i != pivot_row && aug[(i, col)] != 0 {
                    let factor = aug[(i, col)];
                    for j in col..cols + bc {
                        let t = f.mul(factor, aug[(pivot_row, j)]);
                        aug[(i, j)] = f.sub(aug[(i, j)], t);
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        assert_eq!(pivots.len(), cols, "matrix does not have full column rank");
        // Rows past the pivot count must be consistent (all-zero).
        for i in cols..rows {
            for j in 0..bc {
                assert_eq!(aug[(i, cols + j)], 0, "inconsistent system");
            }
        }
        let mut x = Mat::zero(cols, bc);
        for i in 0..cols {
            for j in 0..bc {
                x[(i, j)] = aug[(i, cols + j)];
            }
        }
        x
    }

    /// Basis of the right nullspace, as columns.
    pub fn nullspace(&self, f: &Fp) -> Mat {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
        let mut pivot_row = 0;
        for col in 0..cols {
            let Some(r) = (pivot_row..rows).find(|&r| a[(r, col)] != 0) else {
                continue;
            };
            a.swap_rows(pivot_row, r);
            let inv = f.inv(a[(pivot_row, col)]);
            for j in col..cols {
                a[(pivot_row, j)] = f.mul(a[(pivot_row, j)], inv);
            }
            for i in 0..rows {
                if i != pivot_row && a[(i, col)] != 0 {
                    let factor = a[(i, col)];
                    for j in col..cols {
                        let t = f.mul(factor, a[(pivot_row, j)]);
                        a[(i, j)] = f.sub(a[(i, j)], t);
                    }
                }
            }
            pivot_of_col[col] = Some(pivot_row);
            pivot_row += 1;
        }
        let free: Vec<usize> = (0..cols).filter(|&c| pivot_of_col[c].is_none()).collect();
        let mut basis = Mat::zero(cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis[(fc, k)] = 1;
            for c in 0..cols {
                if let Some(pr) = pivot_of_col[c] {
                    basis[(c, k)] = f.neg(a[(pr, fc)]);
                }
            }
        }
        basis
    }

    /// Characteristic polynomial, low-to-high coefficients, via Hessenberg
    /// reduction.
    pub fn charpoly(&self, f: &Fp) -> Vec<u64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut h = self.clone();
        // Similarity reduction to upper Hessenberg form.
        for j in 0..n.saturating_sub(2) {
            let Some(pivot) = (j + 1..n).find(|&i| h[(i, j)] != 0) else {
                continue;
            };
            if pivot != j + 1 {
                h.swap_rows(j + 1, pivot);
                h.swap_cols(j + 1, pivot);
            }
            let inv = f.inv(h[(j + 1, j)]);
            for i in j + 2..n {
                let factor = f.mul(h[(i, j)], inv);
                if factor == 0 {
                    continue;
                }
                // row_i -= factor * row_{j+1}; col_{j+1} += factor * col_i.
                for c in 0..n {
                    let t = f.mul(factor, h[(j + 1, c)]);
                    h[(i, c)] = f.sub(h[(i, c)], t);
                }
                for r in 0..n {
                    let t = f.mul(factor, h[(r, i)]);
                    h[(r, j + 1)] = f.add(h[(r, j + 1)], t);
                }
            }
        }
        // p_0 = 1; p_k from the leading k×k Hessenberg block.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=n {
            // (x − h[k-1][k-1]) · p_{k-1}
            let prev = &polys[k - 1];
            let mut pk = vec![0u64; prev.len() + 1];
            for (i, &c) in prev.iter().enumerate() {
                pk[i + 1] = f.add(pk[i + 1], c);
                pk[i] = f.sub(pk[i], f.mul(h[(k - 1, k - 1)], c));
            }
            let mut beta = 1u64; // running product of subdiagonal entries
            for i in (0..k - 1).rev() {
                beta = f.mul(beta, h[(i + 1, i)]);
                if beta == 0 {
                    break;
                }
                let coef = f.mul(beta, h[(i, k - 1)]);
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[i].iter().enumerate() {
                    pk[d] = f.sub(pk[d], f.mul(coef, c));
                }
            }
            polys.push(pk);
        }
        polys.pop().unwrap()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

// ---------------------------------------------------------------------------
// Dense polynomials over F_p (low-to-high coefficient order)
// ---------------------------------------------------------------------------

pub fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn poly_mul(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder a mod b, b nonzero.
pub fn poly_rem(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = f.inv(b[db]);
    while r.len() > db {
        let coef = f.mul(*r.last().unwrap(), lead_inv);
        let shift = r.len() - 1 - db;
        if coef != 0 {
            for (i, &c) in b.iter().enumerate() {
                let t = f.mul(coef, c);
                r[shift + i] = f.sub(r[shift + i], t);
            }
        }
        r.pop();
        poly_trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    r
}

/// Monic gcd.
pub fn poly_gcd(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(f, &x, &y);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = f.inv(lead);
        for c in x.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
    x
}

/// base(x)^e mod m(x).
pub fn poly_powmod(f: &Fp, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(f, &poly_mul(f, &acc, &b), m);
        }
        b = poly_rem(f, &poly_mul(f, &b, &b), m);
        e >>= 1;
    }
    acc
}

/// All roots in F_p of a nonzero polynomial, sorted ascending.
pub fn poly_roots(f: &Fp, a: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    poly_trim(&mut a);
    assert!(!a.is_empty(), "zero polynomial");
    let mut roots = Vec::new();
    // Strip roots at zero.
    while a.len() > 1 && a[0] == 0 {
        if !roots.contains(&0) {
            roots.push(0);
        }
        a.remove(0);
    }
    if a.len() <= 1 {
        roots.sort_unstable();
        return roots;
    }
    // Squarefree part with all roots in F_p: gcd(a, x^p − x).
    let xp = poly_powmod(f, &[0, 1], f.p, &a);
    let mut xp_minus_x = xp;
    while xp_minus_x.len() < 2 {
        xp_minus_x.push(0);
    }
    xp_minus_x[1] = f.sub(xp_minus_x[1], 1);
    poly_trim(&mut xp_minus_x);
    let g = if xp_minus_x.is_empty() {
        a.clone()
    } else {
        poly_gcd(f, &a, &xp_minus_x)
    };
    split_linear(f, g, &mut roots);
    roots.sort_unstable();
    roots
}

/// Splits a monic squarefree product of linear factors into its roots, with
/// a deterministic shift sequence.
fn split_linear(f: &Fp, g: Vec<u64>, roots: &mut Vec<u64>) {
    if g.len() <= 1 {
        return;
    }
    if g.len() == 2 {
        // x + c = 0
        roots.push(f.neg(g[0]));
        return;
    }
    for delta in 0..f.p {
        // gcd((x + δ)^{(p−1)/2} − 1, g)
        let mut h = poly_powmod(f, &[delta, 1], (f.p - 1) / 2, &g);
        if h.is_empty() {
            h = vec![0];
        }
        h[0] = f.sub(h[0], 1);
        poly_trim(&mut h);
        if h.is_empty() {
            continue;
        }
        let d = poly_gcd(f, &g, &h);
        if d.len() > 1 && d.len() < g.len() {
            let mut quotient = poly_quotient(f, &g, &d);
            poly_trim(&mut quotient);
            split_linear(f, d, roots);
            split_linear(f, quotient, roots);
            return;
        }
    }
    unreachable!("equal-degree splitting failed");
}

fn poly_quotient(f: &Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = f.inv(b[db]);
    let mut q = vec![0u64; r.len().saturating_sub(db)];
    while r.len() > db {
        let coef = f.mul(*r.last().unwrap(), lead_inv);
        let shift = r.len() - 1 - db;
        q[shift] = coef;
        for (i, &c) in b.iter().enumerate() {
            let t = f.mul(coef, c);
            r[shift + i] = f.sub(r[shift + i], t);
        }
        r.pop();
        poly_trim(&mut r);
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 0..2000u64 {
            let trial = n >= 2 && (2..n).all(|d| d * d > n || n % d != 0);
            assert_eq!(is_prime_u64(n), trial, "n = {n}");
        }
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(3_215_031_751));
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(13), 2);
        let p = 1009;
        let f = Fp::new(p);
        let g = primitive_root(p);
        let mut seen = vec![false; p as usize];
        let mut x = 1;
        for _ in 0..p - 1 {
            assert!(!seen[x as usize]);
            seen[x as usize] = true;
            x = f.mul(x, g);
        }
    }

    #[test]
    fn charpoly_of_companion_matrix() {
        // Companion matrix of x^3 + 2x + 5 over F_101.
        let f = Fp::new(101);
        let mut m = Mat::zero(3, 3);
        m[(0, 2)] = f.neg(5);
        m[(1, 0)] = 1;
        m[(1, 2)] = f.neg(2);
        m[(2, 1)] = 1;
        let cp = m.charpoly(&f);
        assert_eq!(cp, vec![5, 2, 0, 1]);
    }

    #[test]
    fn roots_of_factored_polynomial() {
        let f = Fp::new(10007);
        // (x − 3)(x − 500)(x − 10006)
        let poly = poly_mul(
            &f,
            &poly_mul(&f, &[f.neg(3), 1], &[f.neg(500), 1]),
            &[f.neg(10006), 1],
        );
        assert_eq!(poly_roots(&f, &poly), vec![3, 500, 10006]);
    }

    #[test]
    fn nullspace_and_solve() {
        let f = Fp::new(29);
        let mut a = Mat::zero(3, 3);
        // Rank-2 matrix.
        let rows = [[1u64, 2, 3], [4, 5, 6], [7, 8, 9]];
        for i in 0..3 {
            for j in 0..3 {
                a[(i, j)] = rows[i][j] % 29;
            }
        }
        let ns = a.nullspace(&f);
        assert_eq!(ns.cols, 1);
        let v = a.mul(&f, &ns);
        assert!(v.data.iter().all(|&x| x == 0));
    }
}
