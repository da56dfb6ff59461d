//! Dense two-phase simplex over free variables, plus the two geometric
//! certificates built on it: edge tests and extreme-point tests.
//!
//! Variables are unrestricted reals; every bound, including nonnegativity,
//! is an explicit constraint row. Internally each variable is split into a
//! difference of two nonnegative parts and rows are scaled to unit max-norm
//! before the usual slack/surplus/artificial machinery. Bland's rule keeps
//! the pivot sequence finite; a hard pivot cap turns pathological inputs
//! into an error instead of a hang.

use crate::error::{Error, Result};
use crate::geom;
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

impl Constraint {
    pub fn new(coeffs: Vec<f64>, relation: Relation, rhs: f64) -> Self {
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    }
}

/// A maximization problem over free variables. `objective: None` means a
/// pure feasibility problem (reported value 0).
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub objective: Option<Vec<f64>>,
    pub constraints: Vec<Constraint>,
    pub num_vars: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<f64>, value: f64 },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

/// Solve by two-phase simplex with Bland's rule.
///
/// # Examples
///
/// ```
/// use shadowlab::lp::{solve, Constraint, LinearProgram, LpOutcome, Relation};
///
/// let lp = LinearProgram {
///     objective: Some(vec![1.0]),
///     constraints: vec![
///         Constraint::new(vec![1.0], Relation::Le, 1.0),
///         Constraint::new(vec![1.0], Relation::Ge, 0.0),
///     ],
///     num_vars: 1,
/// };
/// match solve(&lp).unwrap() {
///     LpOutcome::Optimal { value, .. } => assert!((value - 1.0).abs() < 1e-9),
///     other => panic!("unexpected {other:?}"),
/// }
/// ```
pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    let m = lp.num_vars;
    if let Some(obj) = &lp.objective {
        if obj.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                got: obj.len(),
            });
        }
        geom::validate_finite(obj, "lp objective")?;
    }
    for c in &lp.constraints {
        if c.coeffs.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                got: c.coeffs.len(),
            });
        }
        geom::validate_finite(&c.coeffs, "lp constraint")?;
        if !c.rhs.is_finite() {
            return Err(Error::NonFinite("lp rhs".into()));
        }
    }

    // split free variables, scale rows, normalize rhs >= 0
    let mut rows: Vec<(Vec<f64>, Relation, f64)> = Vec::with_capacity(lp.constraints.len());
    for c in &lp.constraints {
        let scale = c.coeffs.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        if scale == 0.0 {
            let ok = match c.relation {
                Relation::Le => c.rhs >= -tol::LP_TOL,
                Relation::Ge => c.rhs <= tol::LP_TOL,
                Relation::Eq => c.rhs.abs() <= tol::LP_TOL,
            };
            if ok {
                continue;
            }
            return Ok(LpOutcome::Infeasible);
        }
        let mut split = Vec::with_capacity(2 * m);
        for &a in &c.coeffs {
            split.push(a / scale);
            split.push(-a / scale);
        }
        let mut rhs = c.rhs / scale;
        let mut rel = c.relation;
        if rhs < 0.0 {
            for a in &mut split {
                *a = -*a;
            }
            rhs = -rhs;
            rel = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        rows.push((split, rel, rhs));
    }

    let nsplit = 2 * m;
    let nrows = rows.len();
    let mut nslack = 0usize;
    let mut nart = 0usize;
    for (_, rel, _) in &rows {
        match rel {
            Relation::Le => nslack += 1,
            Relation::Ge => {
                nslack += 1;
                nart += 1;
            }
            Relation::Eq => nart += 1,
        }
    }
    let ncols = nsplit + nslack + nart;
    let art_start = nsplit + nslack;

    // tableau: nrows x (ncols + 1), last column is rhs
    let mut t = vec![vec![0.0f64; ncols + 1]; nrows];
    let mut basis = vec![0usize; nrows];
    {
        let mut s = nsplit;
        let mut a = art_start;
        for (i, (split, rel, rhs)) in rows.iter().enumerate() {
            t[i][..nsplit].copy_from_slice(split);
            t[i][ncols] = *rhs;
            match rel {
                Relation::Le => {
                    t[i][s] = 1.0;
                    basis[i] = s;
                    s += 1;
                }
                Relation::Ge => {
                    t[i][s] = -1.0;
                    s += 1;
                    t[i][a] = 1.0;
                    basis[i] = a;
                    a += 1;
                }
                Relation::Eq => {
                    t[i][a] = 1.0;
                    basis[i] = a;
                    a += 1;
                }
            }
        }
    }

    let mut pivots: u64 = 0;

    // phase 1: maximize -(sum of artificials)
    if nart > 0 {
        let mut cost = vec![0.0f64; ncols];
        for j in art_start..ncols {
            cost[j] = -1.0;
        }
        let mut costrow = reduced_costs(&t, &basis, &cost, ncols);
        run_simplex(&mut t, &mut basis, &mut costrow, ncols, &mut pivots)?;
        let infeas: f64 = (0..nrows)
            .filter(|&i| basis[i] >= art_start)
            .map(|i| t[i][ncols])
            .sum();
        if infeas > tol::LP_TOL {
            return Ok(LpOutcome::Infeasible);
        }
        // drive artificials out of the basis; rows that cannot pivot are
        // redundant and get dropped
        let mut drop_rows = Vec::new();
        for i in 0..nrows {
            if basis[i] < art_start {
                continue;
            }
            match (0..art_start).find(|&j| t[i][j].abs() > tol::LP_TOL) {
                Some(j) => {
                    pivot(&mut t, &mut basis, &mut costrow, i, j, ncols);
                    pivots += 1;
                }
                None => drop_rows.push(i),
            }
        }
        for &i in drop_rows.iter().rev() {
            t.remove(i);
            basis.remove(i);
        }
    }

    // phase 2 on the real objective; artificial columns stay but may not
    // re-enter (their reduced cost is forced unattractive by exclusion)
    let obj = match &lp.objective {
        None => {
            let x = extract(&t, &basis, m, nsplit, ncols);
            return Ok(LpOutcome::Optimal { x, value: 0.0 });
        }
        Some(obj) => obj,
    };
    let oscale = obj.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let mut cost = vec![0.0f64; ncols];
    if oscale > 0.0 {
        for (k, &c) in obj.iter().enumerate() {
            cost[2 * k] = c / oscale;
            cost[2 * k + 1] = -c / oscale;
        }
    }
    let mut costrow = reduced_costs(&t, &basis, &cost, ncols);
    for j in art_start..ncols {
        costrow[j] = f64::NEG_INFINITY; // artificials must not re-enter
    }
    if run_simplex(&mut t, &mut basis, &mut costrow, ncols, &mut pivots)? {
        return Ok(LpOutcome::Unbounded);
    }
    let x = extract(&t, &basis, m, nsplit, ncols);
    let value = obj.iter().zip(&x).map(|(c, xi)| c * xi).sum();
    Ok(LpOutcome::Optimal { x, value })
}

fn reduced_costs(t: &[Vec<f64>], basis: &[usize], cost: &[f64], ncols: usize) -> Vec<f64> {
    let mut row = cost.to_vec();
    row.push(0.0); // objective value slot (negated)
    for (i, &b) in basis.iter().enumerate() {
        let cb = cost[b];
        if cb != 0.0 {
            for j in 0..=ncols {
                row[j] -= cb * t[i][j];
            }
        }
    }
    row
}

/// Returns Ok(true) when unbounded, Ok(false) at optimality.
fn run_simplex(
    t: &mut Vec<Vec<f64>>,
    basis: &mut Vec<usize>,
    costrow: &mut Vec<f64>,
    ncols: usize,
    pivots: &mut u64,
) -> Result<bool> {
    loop {
        // Bland: lowest-index improving column
        let enter = (0..ncols).find(|&j| costrow[j] > tol::LP_TOL);
        let enter = match enter {
            Some(j) => j,
            None => return Ok(false),
        };
        // ratio test, ties broken by smallest basic variable index
        let mut best: Option<(f64, usize, usize)> = None; // (ratio, basis var, row)
        for i in 0..t.len() {
            let a = t[i][enter];
            if a > tol::LP_TOL {
                let ratio = t[i][ncols] / a;
                let key = (ratio, basis[i]);
                match best {
                    Some((r, b, _)) if (r, b) <= key => {}
                    _ => best = Some((ratio, basis[i], i)),
                }
            }
        }
        let (_, _, leave) = match best {
            Some(x) => x,
            None => return Ok(true),
        };
        pivot(t, basis, costrow, leave, enter, ncols);
        *pivots += 1;
        if *pivots > tol::LP_MAX_PIVOTS {
            return Err(Error::SolverStalled(*pivots));
        }
    }
}

fn pivot(
    t: &mut [Vec<f64>],
    basis: &mut [usize],
    costrow: &mut [f64],
    row: usize,
    col: usize,
    ncols: usize,
) {
    let p = t[row][col];
    for j in 0..=ncols {
        t[row][j] /= p;
    }
    t[row][col] = 1.0;
    for i in 0..t.len() {
        if i != row {
            let f = t[i][col];
            if f != 0.0 {
                for j in 0..=ncols {
                    t[i][j] -= f * t[row][j];
                }
                t[i][col] = 0.0;
            }
        }
    }
    let f = costrow[col];
    if f != 0.0 && f.is_finite() {
        for j in 0..=ncols {
            costrow[j] -= f * t[row][j];
        }
        costrow[col] = 0.0;
    } else if f.is_finite() {
        costrow[col] = 0.0;
    }
    basis[row] = col;
}

fn extract(t: &[Vec<f64>], basis: &[usize], m: usize, nsplit: usize, ncols: usize) -> Vec<f64> {
    let mut split = vec![0.0f64; nsplit];
    for (i, &b) in basis.iter().enumerate() {
        if b < nsplit {
            split[b] = t[i][ncols];
        }
    }
    (0..m).map(|k| split[2 * k] - split[2 * k + 1]).collect()
}

/// Is segment `[v_i, v_j]` an edge of `conv(vertices)`?
///
/// Certified by a feasibility LP: an edge needs a direction `c` and level
/// `t` with `c . v_i = c . v_j = t` while every other vertex stays below
/// `t - 1` (the unit gap is free by rescaling).
pub fn is_edge(vertices: &[Vec<f64>], i: usize, j: usize) -> Result<bool> {
    if i == j || i >= vertices.len() || j >= vertices.len() {
        return Err(Error::InvalidParameter(format!(
            "is_edge needs two distinct vertex indices, got ({i}, {j}) among {}",
            vertices.len()
        )));
    }
    let n = vertices[i].len();
    let mut constraints = Vec::with_capacity(vertices.len());
    let row = |w: &[f64], rel: Relation, rhs: f64| {
        let mut c = w.to_vec();
        c.push(-1.0); // the level variable t
        Constraint::new(c, rel, rhs)
    };
    constraints.push(row(&vertices[i], Relation::Eq, 0.0));
    constraints.push(row(&vertices[j], Relation::Eq, 0.0));
    for (k, w) in vertices.iter().enumerate() {
        if w.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: w.len(),
            });
        }
        if k != i && k != j {
            constraints.push(row(w, Relation::Le, -1.0));
        }
    }
    let lp = LinearProgram {
        objective: None,
        constraints,
        num_vars: n + 1,
    };
    Ok(solve(&lp)?.is_feasible())
}

/// Is `points[i]` outside the convex hull of the other points?
///
/// Feasibility of `points[i] = sum(lambda_k * points[k])`, `lambda >= 0`,
/// `sum(lambda) = 1` decides it: feasible means the point is a convex
/// combination of the rest, hence not extreme.
pub fn is_extreme(points: &[Vec<f64>], i: usize) -> Result<bool> {
    if i >= points.len() {
        return Err(Error::InvalidParameter(format!(
            "is_extreme index {i} out of range {}",
            points.len()
        )));
    }
    if points.len() == 1 {
        return Ok(true);
    }
    let n = points[i].len();
    let others: Vec<&Vec<f64>> = points
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != i)
        .map(|(_, p)| p)
        .collect();
    let nv = others.len();
    let mut constraints = Vec::with_capacity(n + 1 + nv);
    for d in 0..n {
        let coeffs: Vec<f64> = others
            .iter()
            .map(|p| {
                if p.len() != n {
                    f64::NAN // caught by validate_finite inside solve
                } else {
                    p[d]
                }
            })
            .collect();
        constraints.push(Constraint::new(coeffs, Relation::Eq, points[i][d]));
    }
    constraints.push(Constraint::new(vec![1.0; nv], Relation::Eq, 1.0));
    for k in 0..nv {
        let mut coeffs = vec![0.0; nv];
        coeffs[k] = 1.0;
        constraints.push(Constraint::new(coeffs, Relation::Ge, 0.0));
    }
    let lp = LinearProgram {
        objective: None,
        constraints,
        num_vars: nv,
    };
    Ok(!solve(&lp)?.is_feasible())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use rand::Rng as _;

    fn lp(obj: Option<Vec<f64>>, cons: Vec<(Vec<f64>, Relation, f64)>) -> LinearProgram {
        let num_vars = cons
            .first()
            .map(|c| c.0.len())
            .or_else(|| obj.as_ref().map(|o| o.len()))
            .unwrap_or(0);
        LinearProgram {
            objective: obj,
            constraints: cons
                .into_iter()
                .map(|(c, r, b)| Constraint::new(c, r, b))
                .collect(),
            num_vars,
        }
    }

    #[test]
    fn simple_bounded_maximum() {
        let p = lp(
            Some(vec![1.0]),
            vec![
                (vec![1.0], Relation::Le, 1.0),
                (vec![1.0], Relation::Ge, 0.0),
            ],
        );
        match solve(&p).unwrap() {
            LpOutcome::Optimal { x, value } => {
                assert!((value - 1.0).abs() < 1e-9);
                assert!((x[0] - 1.0).abs() < 1e-9);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn detects_infeasible() {
        let p = lp(
            None,
            vec![
                (vec![1.0], Relation::Ge, 2.0),
                (vec![1.0], Relation::Le, 1.0),
            ],
        );
        assert_eq!(solve(&p).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        let p = lp(Some(vec![1.0]), vec![(vec![1.0], Relation::Ge, 0.0)]);
        assert_eq!(solve(&p).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn free_variables_can_go_negative() {
        let p = lp(
            Some(vec![-1.0]),
            vec![(vec![1.0], Relation::Ge, -5.0)],
        );
        match solve(&p).unwrap() {
            LpOutcome::Optimal { x, value } => {
                assert!((value - 5.0).abs() < 1e-9);
                assert!((x[0] + 5.0).abs() < 1e-9);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn equality_rows_are_respected() {
        let p = lp(
            Some(vec![1.0, 1.0]),
            vec![
                (vec![1.0, 1.0], Relation::Eq, 2.0),
                (vec![1.0, 0.0], Relation::Le, 5.0),
                (vec![0.0, 1.0], Relation::Le, 5.0),
            ],
        );
        match solve(&p).unwrap() {
            LpOutcome::Optimal { value, .. } => assert!((value - 2.0).abs() < 1e-9),
            other => panic!("unexpected {other:?}"),
        }
    }

    /// exhaustive oracle: the optimum of a bounded feasible LP sits at a
    /// vertex, i.e. at some square subsystem of active constraints
    fn enumeration_oracle(p: &LinearProgram) -> LpOutcome {
        let n = p.num_vars;
        let rows: Vec<&Constraint> = p.constraints.iter().collect();
        let obj = p.objective.as_ref().unwrap();
        let mut best: Option<(Vec<f64>, f64)> = None;
        let mut subset = vec![0usize; n];
        fn rec(
            rows: &[&Constraint],
            obj: &[f64],
            n: usize,
            start: usize,
            depth: usize,
            subset: &mut Vec<usize>,
            best: &mut Option<(Vec<f64>, f64)>,
        ) {
            if depth == n {
                let a: Vec<Vec<f64>> = subset.iter().map(|&r| rows[r].coeffs.clone()).collect();
                let b: Vec<f64> = subset.iter().map(|&r| rows[r].rhs).collect();
                if let Ok(x) = crate::geom::solve_system(&a, &b) {
                    let feasible = rows.iter().all(|c| {
                        let lhs = crate::geom::dot(&c.coeffs, &x);
                        match c.relation {
                            Relation::Le => lhs <= c.rhs + 1e-6,
                            Relation::Ge => lhs >= c.rhs - 1e-6,
                            Relation::Eq => (lhs - c.rhs).abs() <= 1e-6,
                        }
                    });
                    if feasible {
                        let v = crate::geom::dot(obj, &x);
                        if best.as_ref().map_or(true, |(_, bv)| v > *bv) {
                            *best = Some((x, v));
                        }
                    }
                }
                return;
            }
            for r in start..rows.len() {
                subset[depth] = r;
                rec(rows, obj, n, r + 1, depth + 1, subset, best);
            }
        }
        rec(&rows, obj, n, 0, 0, &mut subset, &mut best);
        match best {
            Some((x, value)) => LpOutcome::Optimal { x, value },
            None => LpOutcome::Infeasible,
        }
    }

    #[test]
    fn random_lps_agree_with_vertex_enumeration() {
        let mut rng = Rng::new(20260818);
        for trial in 0..20 {
            let n = 5;
            let mut cons: Vec<(Vec<f64>, Relation, f64)> = Vec::new();
            // box keeps the region bounded so the oracle's vertex scan is exhaustive
            for k in 0..n {
                let mut e = vec![0.0; n];
                e[k] = 1.0;
                cons.push((e.clone(), Relation::Le, 10.0));
                cons.push((e, Relation::Ge, -10.0));
            }
            for _ in 0..8 {
                let coeffs: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let rel = match rng.gen_range(0..6) {
                    0 => Relation::Ge,
                    _ => Relation::Le, // mostly Le so many instances stay feasible
                };
                cons.push((coeffs, rel, rng.gen_range(-2.0..2.0)));
            }
            let obj: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let p = lp(Some(obj), cons);
            let got = solve(&p).unwrap();
            let want = enumeration_oracle(&p);
            match (&got, &want) {
                (LpOutcome::Infeasible, LpOutcome::Infeasible) => {}
                (
                    LpOutcome::Optimal { value: gv, .. },
                    LpOutcome::Optimal { value: wv, .. },
                ) => {
                    assert!(
                        (gv - wv).abs() <= 1e-7 * gv.abs().max(1.0),
                        "trial {trial}: simplex {gv} vs oracle {wv}"
                    );
                }
                _ => panic!("trial {trial}: status mismatch {got:?} vs {want:?}"),
            }
        }
    }

    #[test]
    fn row_permutation_leaves_status_and_value() {
        let mut rng = Rng::new(77);
        let base = lp(
            Some(vec![1.0, 2.0, -1.0]),
            vec![
                (vec![1.0, 1.0, 1.0], Relation::Le, 4.0),
                (vec![1.0, -1.0, 0.0], Relation::Ge, -3.0),
                (vec![0.0, 1.0, 2.0], Relation::Le, 5.0),
                (vec![1.0, 0.0, 0.0], Relation::Ge, 0.0),
                (vec![0.0, 1.0, 0.0], Relation::Ge, 0.0),
                (vec![0.0, 0.0, 1.0], Relation::Ge, -1.0),
            ],
        );
        let reference = match solve(&base).unwrap() {
            LpOutcome::Optimal { value, .. } => value,
            other => panic!("unexpected {other:?}"),
        };
        for _ in 0..10 {
            let mut shuffled = base.clone();
            // Fisher-Yates on the constraint rows
            for i in (1..shuffled.constraints.len()).rev() {
                let j = rng.gen_range(0..=i);
                shuffled.constraints.swap(i, j);
            }
            match solve(&shuffled).unwrap() {
                LpOutcome::Optimal { value, .. } => {
                    assert!((value - reference).abs() < 1e-9)
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn unit_square_edges_and_diagonals() {
        let square = vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
        ];
        assert!(is_edge(&square, 0, 1).unwrap());
        assert!(is_edge(&square, 1, 2).unwrap());
        assert!(!is_edge(&square, 0, 2).unwrap(), "diagonal is not an edge");
        assert!(!is_edge(&square, 1, 3).unwrap());
        assert!(is_edge(&square, 0, 0).is_err());
    }

    #[test]
    fn is_edge_is_symmetric() {
        let pts = vec![
            vec![0.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![1.0, 1.0, 1.0],
        ];
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                assert_eq!(
                    is_edge(&pts, i, j).unwrap(),
                    is_edge(&pts, j, i).unwrap(),
                    "asymmetric at ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn segment_counts_as_an_edge() {
        let seg = vec![vec![0.0, 0.0], vec![1.0, 0.0]];
        assert!(is_edge(&seg, 0, 1).unwrap());
    }

    #[test]
    fn extreme_point_detection() {
        let pts = vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
            vec![0.5, 0.5],
        ];
        for i in 0..4 {
            assert!(is_extreme(&pts, i).unwrap(), "corner {i}");
        }
        assert!(!is_extreme(&pts, 4).unwrap(), "center is interior");
        // midpoint of an edge is also not extreme
        let with_mid = vec![
            vec![0.0, 0.0],
            vec![2.0, 0.0],
            vec![1.0, 0.0],
            vec![0.0, 2.0],
        ];
        assert!(!is_extreme(&with_mid, 2).unwrap());
    }

    #[test]
    fn random_lattice_points_match_pairwise_membership_oracle() {
        // oracle: scan all points; p_i is extreme iff the LP test used on a
        // shifted copy agrees -- here we validate against a direct geometric
        // fact instead: a point strictly inside the bounding box hull of the
        // others in every coordinate plus convex membership. We check
        // consistency: removing a non-extreme point never changes extremes.
        let mut rng = Rng::new(11);
        let pts: Vec<Vec<f64>> = (0..30)
            .map(|_| (0..3).map(|_| rng.gen_range(0..6) as f64).collect())
            .collect();
        let mut dedup: Vec<Vec<f64>> = Vec::new();
        for p in pts {
            if !dedup.iter().any(|q| crate::geom::dist(q, &p) < 1e-12) {
                dedup.push(p);
            }
        }
        let flags: Vec<bool> = (0..dedup.len())
            .map(|i| is_extreme(&dedup, i).unwrap())
            .collect();
        assert!(flags.iter().any(|&f| f), "some point must be extreme");
        // removing all non-extreme points must leave every survivor extreme
        let hull_only: Vec<Vec<f64>> = dedup
            .iter()
            .zip(&flags)
            .filter(|(_, &f)| f)
            .map(|(p, _)| p.clone())
            .collect();
        for i in 0..hull_only.len() {
            assert!(is_extreme(&hull_only, i).unwrap());
        }
    }
}
