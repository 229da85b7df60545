//! Exact feasibility testing for small linear systems with integer data.
//!
//! A phase-1 simplex over nonnegative variables, run entirely in integer
//! arithmetic: the tableau keeps a single implicit positive denominator and
//! pivots with the fraction-free update
//! `T'[r][c] = (T[r][c]·T[p][q] − T[r][q]·T[p][c]) / d`, whose division is
//! exact because every entry is a quotient of minors of the original system
//! (Bareiss). Bland's rule prevents cycling. With the problem sizes used
//! here (a handful of rows, coefficients that are 0/1 after scaling, one
//! column of large right-hand sides) every entry is bounded by a minor of a
//! small 0/1 matrix times one right-hand side, so `i128` never overflows;
//! all products are checked anyway.

/// How a row compares to its right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// One row `coeffs · λ  ⋈  rhs` of a system over variables `λ ≥ 0`.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<i128>,
    pub relation: Relation,
    pub rhs: i128,
}

impl Constraint {
    pub fn le(coeffs: Vec<i128>, rhs: i128) -> Self {
        Constraint { coeffs, relation: Relation::Le, rhs }
    }
    pub fn ge(coeffs: Vec<i128>, rhs: i128) -> Self {
        Constraint { coeffs, relation: Relation::Ge, rhs }
    }
    pub fn eq(coeffs: Vec<i128>, rhs: i128) -> Self {
        Constraint { coeffs, relation: Relation::Eq, rhs }
    }
}

fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("tableau entry overflow")
}

/// Is there `λ ≥ 0` satisfying every constraint?
pub fn feasible(num_vars: usize, constraints: &[Constraint]) -> bool {
    let m = constraints.len();
    if m == 0 {
        return true;
    }
    let slacks = constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let cols = num_vars + slacks + m; // original vars, slack/surplus, artificials
    let rhs_col = cols;

    // Rows normalized to equalities with nonnegative right-hand side, one
    // artificial basic variable each.
    let mut t = vec![vec![0i128; cols + 1]; m + 1];
    let mut basis = vec![0usize; m];
    let mut slack_at = num_vars;
    for (i, c) in constraints.iter().enumerate() {
        assert_eq!(c.coeffs.len(), num_vars, "constraint width mismatch");
        let flip = c.rhs < 0;
        let sign = if flip { -1 } else { 1 };
        for (j, &a) in c.coeffs.iter().enumerate() {
            t[i][j] = sign * a;
        }
        match c.relation {
            Relation::Le => {
                t[i][slack_at] = sign; // +slack (surplus if the row was flipped)
                slack_at += 1;
            }
            Relation::Ge => {
                t[i][slack_at] = -sign;
                slack_at += 1;
            }
            Relation::Eq => {}
        }
        let art = num_vars + slacks + i;
        t[i][art] = 1;
        basis[i] = art;
        t[i][rhs_col] = sign * c.rhs;
    }
    // Phase-1 objective: minimize the artificial sum. With the artificial
    // basis, the reduced-cost row is the sum of all constraint rows over the
    // non-artificial columns (and zero over the artificial identity).
    for j in 0..=cols {
        let mut s = 0i128;
        for row in t.iter().take(m) {
            s += row[j];
        }
        t[m][j] = s;
    }
    for i in 0..m {
        t[m][num_vars + slacks + i] = 0;
    }

    let mut denom: i128 = 1;
    // Bland: enter the lowest-indexed column that can still reduce the
    // artificial sum.
    while let Some(entering) = (0..cols).find(|&j| t[m][j] > 0) {
        // Ratio test over strictly positive column entries; Bland tie-break
        // on the smallest basis index. All entries share one denominator, so
        // ratios compare by cross-multiplication.
        let mut leaving: Option<usize> = None;
        for i in 0..m {
            if t[i][entering] <= 0 {
                continue;
            }
            let better = match leaving {
                None => true,
                Some(l) => {
                    let lhs = mul(t[i][rhs_col], t[l][entering]);
                    let rhs = mul(t[l][rhs_col], t[i][entering]);
                    lhs < rhs || (lhs == rhs && basis[i] < basis[l])
                }
            };
            if better {
                leaving = Some(i);
            }
        }
        let p = leaving.expect("phase-1 objective is bounded below by zero");
        let pivot = t[p][entering];
        debug_assert!(pivot > 0);
        let pivot_row = t[p].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r == p {
                continue;
            }
            let factor = row[entering];
            for (cell, &pcell) in row.iter_mut().zip(&pivot_row) {
                let num = mul(*cell, pivot) - mul(factor, pcell);
                debug_assert_eq!(num % denom, 0, "fraction-free division must be exact");
                *cell = num / denom;
            }
        }
        basis[p] = entering;
        denom = pivot;
    }
    // Feasible exactly when no artificial mass remains.
    t[m][rhs_col] == 0
}
