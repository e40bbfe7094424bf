//! Two-phase primal simplex over exact rationals with Bland's rule.
//!
//! Problems arrive as rows `a·v {=, ≥, ≤} b` with `b ≥ 0` over nonnegative
//! variables. Phase one minimizes the artificial variables to find a basic
//! feasible point (a positive optimum there yields Farkas multipliers
//! proving infeasibility); phase two optimizes the real objective. Bland's
//! rule (least eligible index enters, least basic index leaves on ratio
//! ties) guarantees termination. Every row keeps an initial unit column, so
//! the simplex multipliers can be read off the final tableau and handed out
//! as certificates.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    Eq,
    Ge,
    Le,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpRow {
    pub kind: RowKind,
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

/// `rows` over `num_vars` nonnegative variables, every `rhs` nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSystem {
    pub num_vars: usize,
    pub rows: Vec<LpRow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplexOutcome {
    Optimal {
        values: Vec<BigRational>,
        objective: BigRational,
        /// Simplex multipliers per input row at the optimum: for any
        /// feasible v, Σ yᵢ (aᵢ·v) ≥ Σ yᵢ bᵢ, with yᵢ ≥ 0 on ≥-rows and
        /// yᵢ ≤ 0 on ≤-rows.
        duals: Vec<BigRational>,
    },
    /// Farkas multipliers: same sign conditions, Σ yᵢ aᵢ ≤ 0 componentwise
    /// and Σ yᵢ bᵢ > 0, so no nonnegative v satisfies the rows.
    Infeasible { duals: Vec<BigRational> },
}

struct Tableau {
    /// Row-major body including every column; last entry of each row is the
    /// right-hand side.
    rows: Vec<Vec<BigRational>>,
    /// Basic column per row.
    basis: Vec<usize>,
    /// Initial unit column per row (slack or artificial), for dual
    /// extraction.
    marker: Vec<usize>,
    /// Original input row per tableau row (redundant rows get dropped).
    origin: Vec<usize>,
    columns: usize,
    first_artificial: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigRational {
        &self.rows[i][self.columns]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let factor = self.rows[row][col].clone();
        debug_assert!(!factor.is_zero());
        for entry in self.rows[row].iter_mut() {
            *entry /= factor.clone();
        }
        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let scale = self.rows[i][col].clone();
            for c in 0..=self.columns {
                let delta = &scale * &self.rows[row][c];
                self.rows[i][c] -= delta;
            }
        }
        self.basis[row] = col;
    }

    /// Reduced cost of a column under objective `cost`.
    fn reduced_cost(&self, cost: &[BigRational], col: usize) -> BigRational {
        let mut z = BigRational::zero();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if !cb.is_zero() {
                z += cb * &row[col];
            }
        }
        &cost[col] - z
    }

    fn objective_value(&self, cost: &[BigRational]) -> BigRational {
        let mut z = BigRational::zero();
        for (i, _) in self.rows.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if !cb.is_zero() {
                z += cb * self.rhs(i);
            }
        }
        z
    }

    /// Minimizes `cost` with Bland's rule; columns in `banned` never enter.
    fn run(&mut self, cost: &[BigRational], ban_artificials: bool) -> Result<()> {
        loop {
            let mut entering = None;
            for col in 0..self.columns {
                if ban_artificials && col >= self.first_artificial {
                    continue;
                }
                if self.basis.contains(&col) {
                    continue;
                }
                if self.reduced_cost(cost, col).is_negative() {
                    entering = Some(col);
                    break;
                }
            }
            let Some(col) = entering else {
                return Ok(());
            };
            // Ratio test; Bland tie-break on the least basic column.
            let mut leaving: Option<(usize, BigRational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leaving {
                    None => true,
                    Some((best_row, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*best_row])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((row, _)) = leaving else {
                return Err(Error::Internal(
                    "simplex objective unbounded on a capped problem".to_string(),
                ));
            };
            self.pivot(row, col);
        }
    }

    /// Simplex multipliers per original input row: read off the initial
    /// unit columns, zero for dropped rows.
    fn duals(&self, cost: &[BigRational], input_rows: usize) -> Vec<BigRational> {
        let mut duals = alloc::vec![BigRational::zero(); input_rows];
        for (i, _) in self.rows.iter().enumerate() {
            let marker = self.marker[i];
            let y = &cost[marker] - self.reduced_cost(cost, marker);
            duals[self.origin[i]] = y;
        }
        duals
    }
}

/// Maximizes `objective · v` subject to the system. The objective has one
/// entry per variable.
pub fn maximize(system: &LpSystem, objective: &[BigRational]) -> Result<SimplexOutcome> {
    if objective.len() != system.num_vars {
        return Err(Error::InvalidArgument(format_args_len(
            objective.len(),
            system.num_vars,
        )));
    }
    for (i, row) in system.rows.iter().enumerate() {
        if row.coeffs.len() != system.num_vars {
            return Err(Error::InvalidArgument(alloc::format!(
                "row {i} has {} coefficients for {} variables",
                row.coeffs.len(),
                system.num_vars
            )));
        }
        if row.rhs.is_negative() {
            return Err(Error::InvalidArgument(alloc::format!(
                "row {i} has negative right-hand side"
            )));
        }
    }

    // Standard form: original vars, then slack/surplus, then artificials.
    let m = system.rows.len();
    let num_slack = system
        .rows
        .iter()
        .filter(|r| r.kind != RowKind::Eq)
        .count();
    let num_artificial = system
        .rows
        .iter()
        .filter(|r| r.kind != RowKind::Le)
        .count();
    let first_slack = system.num_vars;
    let first_artificial = first_slack + num_slack;
    let columns = first_artificial + num_artificial;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut marker = Vec::with_capacity(m);
    let mut slack_cursor = first_slack;
    let mut artificial_cursor = first_artificial;
    for row in &system.rows {
        let mut body = alloc::vec![BigRational::zero(); columns + 1];
        for (j, c) in row.coeffs.iter().enumerate() {
            body[j] = c.clone();
        }
        body[columns] = row.rhs.clone();
        match row.kind {
            RowKind::Le => {
                body[slack_cursor] = BigRational::one();
                basis.push(slack_cursor);
                marker.push(slack_cursor);
                slack_cursor += 1;
            }
            RowKind::Ge => {
                body[slack_cursor] = -BigRational::one();
                slack_cursor += 1;
                body[artificial_cursor] = BigRational::one();
                basis.push(artificial_cursor);
                marker.push(artificial_cursor);
                artificial_cursor += 1;
            }
            RowKind::Eq => {
                body[artificial_cursor] = BigRational::one();
                basis.push(artificial_cursor);
                marker.push(artificial_cursor);
                artificial_cursor += 1;
            }
        }
        rows.push(body);
    }

    let mut tableau = Tableau {
        rows,
        basis,
        marker,
        origin: (0..m).collect(),
        columns,
        first_artificial,
    };

    // Phase one: minimize the artificial sum.
    let mut phase1_cost = alloc::vec![BigRational::zero(); columns];
    for c in first_artificial..columns {
        phase1_cost[c] = BigRational::one();
    }
    tableau.run(&phase1_cost, false)?;
    if tableau.objective_value(&phase1_cost).is_positive() {
        let duals = tableau.duals(&phase1_cost, m);
        return Ok(SimplexOutcome::Infeasible { duals });
    }

    // Drive leftover artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < tableau.rows.len() {
        if tableau.basis[i] >= first_artificial {
            debug_assert!(tableau.rhs(i).is_zero());
            let pivot_col =
                (0..first_artificial).find(|&c| !tableau.rows[i][c].is_zero());
            match pivot_col {
                Some(c) => {
                    tableau.pivot(i, c);
                    i += 1;
                }
                None => {
                    tableau.rows.remove(i);
                    tableau.basis.remove(i);
                    tableau.marker.remove(i);
                    tableau.origin.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }

    // Phase two: minimize the negated objective.
    let mut phase2_cost = alloc::vec![BigRational::zero(); columns];
    for (j, c) in objective.iter().enumerate() {
        phase2_cost[j] = -c.clone();
    }
    tableau.run(&phase2_cost, true)?;

    let mut values = alloc::vec![BigRational::zero(); system.num_vars];
    for (i, &b) in tableau.basis.iter().enumerate() {
        if b < system.num_vars {
            values[b] = tableau.rhs(i).clone();
        }
    }
    let objective_value = -tableau.objective_value(&phase2_cost);
    let duals = tableau.duals(&phase2_cost, m);
    Ok(SimplexOutcome::Optimal {
        values,
        objective: objective_value,
        duals,
    })
}

fn format_args_len(got: usize, want: usize) -> alloc::string::String {
    alloc::format!("objective has {got} entries for {want} variables")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn row(kind: RowKind, coeffs: &[i64], rhs: i64) -> LpRow {
        LpRow {
            kind,
            coeffs: coeffs.iter().map(|&c| rat(c, 1)).collect(),
            rhs: rat(rhs, 1),
        }
    }

    #[test]
    fn maximize_simple_bounded() {
        // max x + y s.t. x + 2y ≤ 4, 3x + y ≤ 6. Optimum at (8/5, 6/5).
        let system = LpSystem {
            num_vars: 2,
            rows: alloc::vec![
                row(RowKind::Le, &[1, 2], 4),
                row(RowKind::Le, &[3, 1], 6),
            ],
        };
        match maximize(&system, &[rat(1, 1), rat(1, 1)]).unwrap() {
            SimplexOutcome::Optimal {
                values, objective, ..
            } => {
                assert_eq!(values, alloc::vec![rat(8, 5), rat(6, 5)]);
                assert_eq!(objective, rat(14, 5));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn equality_and_ge_rows() {
        // max z s.t. x + y = 1, x − z ≥ 0, y − z ≥ 0: optimum z = 1/2.
        let system = LpSystem {
            num_vars: 3,
            rows: alloc::vec![
                row(RowKind::Eq, &[1, 1, 0], 1),
                row(RowKind::Ge, &[1, 0, -1], 0),
                row(RowKind::Ge, &[0, 1, -1], 0),
            ],
        };
        match maximize(&system, &[rat(0, 1), rat(0, 1), rat(1, 1)]).unwrap() {
            SimplexOutcome::Optimal {
                values, objective, ..
            } => {
                assert_eq!(objective, rat(1, 2));
                assert_eq!(values[0], rat(1, 2));
                assert_eq!(values[1], rat(1, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible_system_yields_farkas_duals() {
        // x + y = 1 and x + y ≥ 2 cannot both hold with x, y ≥ 0... they
        // can (x+y=1 contradicts ≥ 2). Farkas: y1·1 + y2·2 > 0 with
        // y1 + y2 ≤ 0 componentwise on coefficients.
        let system = LpSystem {
            num_vars: 2,
            rows: alloc::vec![
                row(RowKind::Eq, &[1, 1], 1),
                row(RowKind::Ge, &[1, 1], 2),
            ],
        };
        match maximize(&system, &[rat(1, 1), rat(0, 1)]).unwrap() {
            SimplexOutcome::Infeasible { duals } => {
                // Re-verify the Farkas conditions.
                assert!(duals[1] >= BigRational::zero());
                let combo0 = &duals[0] + &duals[1];
                assert!(combo0 <= BigRational::zero());
                let rhs = &duals[0] * rat(1, 1) + &duals[1] * rat(2, 1);
                assert!(rhs > BigRational::zero());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degenerate_redundant_rows_are_dropped() {
        // The same equality twice plus its doubled form.
        let system = LpSystem {
            num_vars: 2,
            rows: alloc::vec![
                row(RowKind::Eq, &[1, 1], 1),
                row(RowKind::Eq, &[1, 1], 1),
                row(RowKind::Eq, &[2, 2], 2),
            ],
        };
        match maximize(&system, &[rat(1, 1), rat(0, 1)]).unwrap() {
            SimplexOutcome::Optimal {
                values, objective, ..
            } => {
                assert_eq!(objective, rat(1, 1));
                assert_eq!(values[0], rat(1, 1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_rhs_degenerate_start() {
        // max z s.t. x − z ≥ 0, x ≤ 3: optimum 3.
        let system = LpSystem {
            num_vars: 2,
            rows: alloc::vec![
                row(RowKind::Ge, &[1, -1], 0),
                row(RowKind::Le, &[1, 0], 3),
            ],
        };
        match maximize(&system, &[rat(0, 1), rat(1, 1)]).unwrap() {
            SimplexOutcome::Optimal { objective, .. } => assert_eq!(objective, rat(3, 1)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
