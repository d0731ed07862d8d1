//! Exact rational simplex for small equality-form programs
//! (A x = b, x ≥ 0), with Bland's rule on a fixed variable ordering for
//! termination and determinism. Optima come with an exact dual certificate.

use num_traits::{One, Signed, Zero};

use crate::cyclo::Rational;

#[derive(Debug, Clone)]
pub enum LpOutcome {
    Infeasible,
    Optimal {
        point: Vec<Rational>,
        value: Rational,
        /// y with yᵀA ≥ c and yᵀb = value, the optimality certificate.
        dual: Vec<Rational>,
    },
}

/// Maximizes cᵀx subject to A x = b, x ≥ 0 with b ≥ 0. The feasible region
/// here is always bounded (columns are genuine characters), so an optimum
/// exists whenever the program is feasible.
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    assert_eq!(b.len(), m);
    assert_eq!(c.len(), n);
    debug_assert!(b.iter().all(|v| !v.is_negative()));

    // Tableau over columns [original | artificial], artificial basis.
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = a[i].clone();
            for k in 0..m {
                row.push(if k == i { Rational::one() } else { Rational::zero() });
            }
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase 1: minimize the artificial sum.
    let phase1: Vec<Rational> = (0..n + m)
        .map(|j| {
            if j < n {
                Rational::zero()
            } else {
                Rational::one()
            }
        })
        .collect();
    let v1 = run_simplex(&mut t, &mut basis, &phase1, n + m, true);
    if !v1.is_zero() {
        return LpOutcome::Infeasible;
    }
    // Drive surviving artificials out of the basis or drop redundant rows.
    let mut row = 0;
    while row < t.len() {
        if basis[row] >= n {
            if let Some(j) = (0..n).find(|&j| !t[row][j].is_zero()) {
                pivot(&mut t, &mut basis, row, j);
            } else {
                t.remove(row);
                basis.remove(row);
                continue;
            }
        }
        row += 1;
    }

    // Phase 2: maximize c, i.e. minimize −c. Artificial columns are barred
    // from the basis but kept so the final tableau exposes B⁻¹ for duals.
    let phase2: Vec<Rational> = (0..n + m)
        .map(|j| {
            if j < n {
                -c[j].clone()
            } else {
                Rational::zero()
            }
        })
        .collect();
    let v2 = run_simplex(&mut t, &mut basis, &phase2, n, false);

    let mut point = vec![Rational::zero(); n];
    for (i, &bj) in basis.iter().enumerate() {
        if bj < n {
            point[bj] = t[i].last().unwrap().clone();
        }
    }
    // y = c_Bᵀ B⁻¹ read from the artificial block (columns n..n+m of the
    // original tableau). Dropped rows correspond to redundant constraints;
    // their dual components are reported as 0.
    let mut dual = vec![Rational::zero(); m];
    for (orig, d) in dual.iter_mut().enumerate() {
        let col = n + orig;
        let mut acc = Rational::zero();
        for (i, &bj) in basis.iter().enumerate() {
            if bj < n {
                acc += c[bj].clone() * t[i][col].clone();
            }
        }
        *d = acc;
    }
    LpOutcome::Optimal {
        point,
        value: -v2,
        dual,
    }
}

/// Any feasible point of A x = b, x ≥ 0, or None.
pub fn feasible_point(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = if a.is_empty() { 0 } else { a[0].len() };
    match maximize(a, b, &vec![Rational::zero(); n]) {
        LpOutcome::Infeasible => None,
        LpOutcome::Optimal { point, .. } => Some(point),
    }
}

/// Minimizes the objective over the tableau with Bland's rule; `limit` caps
/// which columns may enter. Returns the optimal objective value.
fn run_simplex(
    t: &mut Vec<Vec<Rational>>,
    basis: &mut [usize],
    objective: &[Rational],
    limit: usize,
    phase1: bool,
) -> Rational {
    loop {
        // Reduced costs r_j = c_j − c_Bᵀ B⁻¹ A_j.
        let mut entering = None;
        for j in 0..limit {
            if basis.contains(&j) {
                continue;
            }
            let mut r = objective[j].clone();
            for (i, &bj) in basis.iter().enumerate() {
                if !objective[bj].is_zero() {
                    r -= objective[bj].clone() * t[i][j].clone();
                }
            }
            if r.is_negative() {
                entering = Some(j);
                break; // Bland: first eligible index.
            }
        }
        let Some(j) = entering else {
            let mut value = Rational::zero();
            for (i, &bj) in basis.iter().enumerate() {
                value += objective[bj].clone() * t[i].last().unwrap().clone();
            }
            return value;
        };
        // Ratio test; ties resolved by least basis variable (Bland).
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..t.len() {
            if t[i][j].is_positive() {
                let ratio = t[i].last().unwrap().clone() / t[i][j].clone();
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((best, r)) => {
                        if ratio < *r || (ratio == *r && basis[i] < basis[*best]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((row, _)) = leave else {
            // Unbounded; cannot happen in phase 1 and is excluded by the
            // callers' bounded feasible regions in phase 2.
            assert!(!phase1, "phase 1 is always bounded");
            panic!("unbounded linear program");
        };
        pivot(t, basis, row, j);
    }
}

fn pivot(t: &mut [Vec<Rational>], basis: &mut [usize], row: usize, col: usize) {
    let inv = t[row][col].clone();
    for v in t[row].iter_mut() {
        *v /= inv.clone();
    }
    for i in 0..t.len() {
        if i == row || t[i][col].is_zero() {
            continue;
        }
        let factor = t[i][col].clone();
        for j in 0..t[i].len() {
            let delta = factor.clone() * t[row][j].clone();
            t[i][j] -= delta;
        }
    }
    basis[row] = col;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{rat, rat_int};

    fn r(n: i64) -> Rational {
        rat_int(n)
    }

    #[test]
    fn feasibility_and_maximization() {
        // x1 + x2 = 3, x2 + x3 = 2, maximize x3.
        let a = vec![
            vec![r(1), r(1), r(0)],
            vec![r(0), r(1), r(1)],
        ];
        let b = vec![r(3), r(2)];
        let c = vec![r(0), r(0), r(1)];
        match maximize(&a, &b, &c) {
            LpOutcome::Optimal { point, value, dual } => {
                assert_eq!(value, r(2));
                assert_eq!(point[2], r(2));
                // Dual certificate: yᵀA ≥ c and yᵀb = value.
                for j in 0..3 {
                    let yaj = dual[0].clone() * a[0][j].clone() + dual[1].clone() * a[1][j].clone();
                    assert!(yaj >= c[j]);
                }
                assert_eq!(dual[0].clone() * b[0].clone() + dual[1].clone() * b[1].clone(), value);
            }
            LpOutcome::Infeasible => panic!("feasible program"),
        }
    }

    #[test]
    fn detects_infeasibility() {
        // x1 = 1 and x1 = 2 simultaneously.
        let a = vec![vec![r(1)], vec![r(1)]];
        let b = vec![r(1), r(2)];
        assert!(feasible_point(&a, &b).is_none());
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let a = vec![vec![r(1), r(1)], vec![r(2), r(2)]];
        let b = vec![r(2), r(4)];
        let x = feasible_point(&a, &b).unwrap();
        assert_eq!(x[0].clone() + x[1].clone(), r(2));
    }

    #[test]
    fn fractional_optimum() {
        // 2x1 + 3x2 = 1, maximize x1: optimum 1/2.
        let a = vec![vec![r(2), r(3)]];
        let b = vec![r(1)];
        let c = vec![r(1), r(0)];
        match maximize(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(1, 2)),
            _ => panic!(),
        }
    }
}
