//! Independent brute-force verification: coordinate-perturbation optimality
//! tests, seeded random instance generation, cell sampling, and end-to-end
//! checks of a solution-set description.
//!
//! The optimality oracles here decide minimality/maximality by actually
//! substituting candidate values and re-evaluating the equations, not by the
//! classifier formulas in the enumeration module, so agreement tests between
//! the two are meaningful. Random generation uses ChaCha8 so reports are
//! reproducible across runs and platforms.

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::enumeration::{
    is_maximal, is_minimal, maximal_above, minimal_below, SolutionSetDescription,
};
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;
use crate::rat::Rat;
use crate::subsystem::{Rel, SolutionCell};

fn require_solution(instance: &ProblemInstance, x: &[Rat]) -> Result<()> {
    if instance.is_solution(x)? {
        Ok(())
    } else {
        Err(Error::NotASolution)
    }
}

/// Smaller candidate values to try when probing whether one coordinate of a
/// solution can decrease: 0, the column entries below, and a 1/1000 nudge.
fn decrease_candidates(instance: &ProblemInstance, x: &[Rat], j: usize) -> Vec<Rat> {
    let mut cands = vec![Rat::zero()];
    for i in 0..instance.rows() {
        let a = instance.entry(i, j);
        if a < &x[j] {
            cands.push(a.clone());
        }
    }
    let eps = Rat::new(1, 1000);
    if x[j] >= eps {
        cands.push(&x[j] - &eps);
    }
    cands.sort();
    cands.dedup();
    cands
}

fn increase_candidates(instance: &ProblemInstance, x: &[Rat], j: usize) -> Vec<Rat> {
    let one = Rat::one();
    let mut cands = vec![one.clone()];
    for i in 0..instance.rows() {
        let a = instance.entry(i, j);
        if a > &x[j] && a <= &one {
            cands.push(a.clone());
        }
    }
    let eps = Rat::new(1, 1000);
    if &x[j] + &eps <= one {
        cands.push(&x[j] + &eps);
    }
    cands.sort();
    cands.dedup();
    cands
}

fn stays_solution(instance: &ProblemInstance, x: &[Rat], j: usize, v: Rat) -> bool {
    let mut y = x.to_vec();
    y[j] = v;
    instance.evaluate(&y).expect("dimensions checked") == instance.rhs()
}

/// True iff the solution `x` is minimal: no single coordinate can be
/// replaced by a smaller value without breaking some equation. Decided by
/// substituting every candidate value; order convexity makes the
/// single-coordinate probe sufficient.
pub fn coordinate_decrease_oracle(instance: &ProblemInstance, x: &[Rat]) -> Result<bool> {
    require_solution(instance, x)?;
    for j in 0..instance.cols() {
        if x[j].is_zero() {
            continue;
        }
        let decreasable = decrease_candidates(instance, x, j)
            .into_iter()
            .filter(|v| v < &x[j])
            .any(|v| stays_solution(instance, x, j, v));
        // Closed form: coordinate j can decrease iff a_ij < x_j for all i.
        debug_assert_eq!(
            decreasable,
            (0..instance.rows()).all(|i| instance.entry(i, j) < &x[j])
        );
        if decreasable {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff the solution `x` is maximal: no single coordinate below 1 can be
/// replaced by a larger value without breaking some equation.
pub fn coordinate_increase_oracle(instance: &ProblemInstance, x: &[Rat]) -> Result<bool> {
    require_solution(instance, x)?;
    let one = Rat::one();
    for j in 0..instance.cols() {
        if x[j] == one {
            continue;
        }
        let increasable = increase_candidates(instance, x, j)
            .into_iter()
            .filter(|v| v > &x[j])
            .any(|v| stays_solution(instance, x, j, v));
        debug_assert_eq!(
            increasable,
            (0..instance.rows()).all(|i| instance.entry(i, j) <= &x[j])
        );
        if increasable {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Draws an instance together with a planted solution `x*`: entries and
/// `x*` coordinates are uniform on `{0, step, 2*step, ..., 1}` and
/// `b_i = sum_j min(a_ij, x*_j)`. Rows evaluating to zero are redrawn, so
/// the result is always a valid, solvable instance. Identical seeds yield
/// identical output.
pub fn random_solvable_instance(
    seed: u64,
    m: usize,
    n: usize,
    step: &Rat,
) -> Result<(ProblemInstance, Vec<Rat>)> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyInstance);
    }
    let levels = grid_levels(step)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| -> Rat {
        let k = rng.random_range(0..=levels);
        Rat::new(k as i64, levels as i64)
    };
    let planted: Vec<Rat> = loop {
        let x: Vec<Rat> = (0..n).map(|_| draw(&mut rng)).collect();
        if x.iter().any(Rat::is_positive) {
            break x;
        }
    };
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for _ in 0..m {
        loop {
            let row: Vec<Rat> = (0..n).map(|_| draw(&mut rng)).collect();
            let bi: Rat = row
                .iter()
                .zip(&planted)
                .map(|(aij, xj)| aij.min(xj).clone())
                .sum();
            if bi.is_positive() {
                a.push(row);
                b.push(bi);
                break;
            }
        }
    }
    let instance = ProblemInstance::new(a, b)?;
    debug_assert!(instance.is_solution(&planted).unwrap_or(false));
    Ok((instance, planted))
}

fn grid_levels(step: &Rat) -> Result<u32> {
    let invalid = || Error::InvalidStep {
        step: step.to_string(),
    };
    if !step.is_positive() || *step > Rat::one() {
        return Err(invalid());
    }
    let recip = &Rat::one() / step;
    if recip.denom() != &num_bigint::BigInt::from(1) {
        return Err(invalid());
    }
    u32::try_from(recip.numer().clone()).map_err(|_| invalid())
}

/// A one-sided bound: value plus strictness.
type BoundSlot = Option<(Rat, bool)>;

/// Per-parameter bounding box read off the single-variable constraints.
fn param_box(cell: &SolutionCell) -> Option<Vec<(Rat, bool, Rat, bool)>> {
    let d = cell.dim();
    let mut boxes: Vec<(BoundSlot, BoundSlot)> = vec![(None, None); d];
    for c in &cell.constraints {
        let nonzero: Vec<usize> = (0..d).filter(|&l| !c.coeffs[l].is_zero()).collect();
        if let [l] = nonzero[..] {
            let val = &c.rhs / &c.coeffs[l];
            let strict = c.rel == Rel::Lt;
            let (lo, hi) = &mut boxes[l];
            if c.coeffs[l].is_positive() {
                match hi {
                    Some((v, s)) => {
                        if val < *v {
                            *v = val;
                            *s = strict;
                        } else if val == *v {
                            *s |= strict;
                        }
                    }
                    None => *hi = Some((val, strict)),
                }
            } else {
                match lo {
                    Some((v, s)) => {
                        if val > *v {
                            *v = val;
                            *s = strict;
                        } else if val == *v {
                            *s |= strict;
                        }
                    }
                    None => *lo = Some((val, strict)),
                }
            }
        }
    }
    boxes
        .into_iter()
        .map(|(lo, hi)| {
            let (lv, ls) = lo?;
            let (hv, hs) = hi?;
            Some((lv, ls, hv, hs))
        })
        .collect()
}

fn satisfies_all(cell: &SolutionCell, t: &[Rat]) -> bool {
    cell.constraints.iter().all(|c| c.holds_at(t))
}

/// Returns exactly `count` member points of a nonempty cell: the witness
/// first, then every bounding-box corner reachable with closed constraints,
/// then seeded interior points (cycling through the collected points if the
/// region is too thin to sample). Every returned point satisfies the cell's
/// constraints exactly.
pub fn sample_cell(cell: &SolutionCell, seed: u64, count: usize) -> Vec<Vec<Rat>> {
    if count == 0 {
        return Vec::new();
    }
    let d = cell.dim();
    let mut points: Vec<Vec<Rat>> = vec![cell.witness.clone()];
    if d > 0 {
        if let Some(boxes) = param_box(cell) {
            // Corner points reachable with closed constraints.
            if d <= 12 {
                for pattern in 0..(1u32 << d) {
                    let mut t = Vec::with_capacity(d);
                    let mut reachable = true;
                    for (l, (lo, ls, hi, hs)) in boxes.iter().enumerate() {
                        let take_hi = pattern & (1 << l) != 0;
                        let (v, strict) = if take_hi { (hi, hs) } else { (lo, ls) };
                        if *strict {
                            reachable = false;
                            break;
                        }
                        t.push(v.clone());
                    }
                    if reachable && satisfies_all(cell, &t) {
                        let p = cell.point_at(&t);
                        if !points.contains(&p) {
                            points.push(p);
                        }
                    }
                }
            }
            // Seeded interior points.
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let denom = Rat::from_int(1024);
            let mut attempts = 0usize;
            while points.len() < count && attempts < 64 * count {
                attempts += 1;
                let t: Vec<Rat> = boxes
                    .iter()
                    .map(|(lo, _, hi, _)| {
                        let k = rng.random_range(1..1024u32);
                        let lambda = Rat::from_int(k as i64) / denom.clone();
                        lo + &(&(hi - lo) * &lambda)
                    })
                    .collect();
                if satisfies_all(cell, &t) {
                    points.push(cell.point_at(&t));
                }
            }
        }
    }
    // Exactly `count` points: truncate, or cycle the collected ones.
    let mut out = Vec::with_capacity(count);
    let mut i = 0;
    while out.len() < count {
        out.push(points[i % points.len()].clone());
        i += 1;
    }
    out
}

/// Enumerates every solution whose coordinates lie on the grid
/// `{0, 1/steps, ..., 1}`. Exponential in the number of columns; intended
/// for desk-scale cross-checks only.
pub fn lattice_solutions(instance: &ProblemInstance, steps: u32) -> Vec<Vec<Rat>> {
    let n = instance.cols();
    let mut found = Vec::new();
    let mut current = vec![0u32; n];
    loop {
        let x: Vec<Rat> = current
            .iter()
            .map(|&k| Rat::new(k as i64, steps as i64))
            .collect();
        if instance.is_solution(&x).unwrap_or(false) {
            found.push(x);
        }
        let mut j = n;
        loop {
            if j == 0 {
                return found;
            }
            j -= 1;
            current[j] += 1;
            if current[j] <= steps {
                break;
            }
            current[j] = 0;
        }
    }
}

/// One failed check, reported verbatim.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub check: String,
    pub point: Vec<Rat>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.point.iter().map(|v| v.to_string()).collect();
        write!(f, "{}: ({}) {}", self.check, coords.join(", "), self.detail)
    }
}

/// Aggregate result of `verify_description`. Failures are report entries,
/// never errors.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub cells_checked: usize,
    pub points_checked: usize,
    pub trials_run: usize,
    pub probes_run: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

const SAMPLES_PER_CELL: usize = 5;

/// Checks a solution-set description against the instance it was produced
/// for, over seeded samples:
///
/// (a) every sampled cell point solves the system and passes both its
///     kind's classifier and the matching coordinate oracle;
/// (b) for interpolated random solutions, the constructed minimal point
///     below lands in some minimal cell and the maximal point above in some
///     maximal cell;
/// (c) perturbed non-solutions are members of no cell.
pub fn verify_description(
    instance: &ProblemInstance,
    description: &SolutionSetDescription,
    seed: u64,
    trials: usize,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    let fail = |report: &mut VerificationReport, check: &str, point: &[Rat], detail: String| {
        report.counterexamples.push(Counterexample {
            check: check.to_string(),
            point: point.to_vec(),
            detail,
        });
    };

    // (a) Sampled cell points.
    let mut minimal_samples: Vec<Vec<Rat>> = Vec::new();
    let mut maximal_samples: Vec<Vec<Rat>> = Vec::new();
    let all_cells = description
        .minimal_cells
        .iter()
        .map(|c| (c, true))
        .chain(description.maximal_cells.iter().map(|c| (c, false)));
    for (idx, (cell, is_min_kind)) in all_cells.enumerate() {
        report.cells_checked += 1;
        let samples = sample_cell(cell, seed.wrapping_add(idx as u64), SAMPLES_PER_CELL);
        for point in samples {
            report.points_checked += 1;
            match instance.is_solution(&point) {
                Ok(true) => {}
                Ok(false) => {
                    fail(
                        &mut report,
                        "cell point solves system",
                        &point,
                        "sampled cell point does not satisfy the equations".to_string(),
                    );
                    continue;
                }
                Err(e) => {
                    fail(&mut report, "cell point in domain", &point, e.to_string());
                    continue;
                }
            }
            if is_min_kind {
                if !is_minimal(instance, &point).unwrap_or(false) {
                    fail(
                        &mut report,
                        "cell point is minimal",
                        &point,
                        "classifier rejects a minimal-cell point".to_string(),
                    );
                }
                if !coordinate_decrease_oracle(instance, &point).unwrap_or(false) {
                    fail(
                        &mut report,
                        "decrease oracle confirms minimal",
                        &point,
                        "a coordinate of a minimal-cell point can decrease".to_string(),
                    );
                }
                minimal_samples.push(point);
            } else {
                if !is_maximal(instance, &point).unwrap_or(false) {
                    fail(
                        &mut report,
                        "cell point is maximal",
                        &point,
                        "classifier rejects a maximal-cell point".to_string(),
                    );
                }
                if !coordinate_increase_oracle(instance, &point).unwrap_or(false) {
                    fail(
                        &mut report,
                        "increase oracle confirms maximal",
                        &point,
                        "a coordinate of a maximal-cell point can increase".to_string(),
                    );
                }
                maximal_samples.push(point);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_cafe);
    let denom = Rat::from_int(1024);

    // (b) Interpolated solutions and their bounding pair.
    if !minimal_samples.is_empty() && !maximal_samples.is_empty() {
        for _ in 0..trials {
            report.trials_run += 1;
            let u = &minimal_samples[rng.random_range(0..minimal_samples.len())];
            let v = &maximal_samples[rng.random_range(0..maximal_samples.len())];
            let x: Vec<Rat> = if u.iter().zip(v).all(|(a, b)| a <= b) {
                let k = rng.random_range(0..=1024u32);
                let lambda = Rat::from_int(k as i64) / denom.clone();
                u.iter()
                    .zip(v)
                    .map(|(a, b)| a + &(&(b - a) * &lambda))
                    .collect()
            } else {
                u.clone()
            };
            if !instance.is_solution(&x).unwrap_or(false) {
                fail(
                    &mut report,
                    "order interval point solves system",
                    &x,
                    "interpolant between a minimal and maximal solution fails".to_string(),
                );
                continue;
            }
            let below = match minimal_below(instance, &x) {
                Ok(p) => p,
                Err(e) => {
                    fail(&mut report, "minimal point below exists", &x, e.to_string());
                    continue;
                }
            };
            let above = match maximal_above(instance, &x) {
                Ok(p) => p,
                Err(e) => {
                    fail(&mut report, "maximal point above exists", &x, e.to_string());
                    continue;
                }
            };
            if !(below.iter().zip(&x).all(|(a, b)| a <= b)
                && x.iter().zip(&above).all(|(a, b)| a <= b))
            {
                fail(
                    &mut report,
                    "sandwich ordering",
                    &x,
                    format!("not between ({below:?}) and ({above:?})"),
                );
            }
            if !description.minimal_cells.iter().any(|c| c.contains(&below)) {
                fail(
                    &mut report,
                    "minimal point lies in an enumerated cell",
                    &below,
                    "constructed minimal solution missing from every minimal cell".to_string(),
                );
            }
            if !description.maximal_cells.iter().any(|c| c.contains(&above)) {
                fail(
                    &mut report,
                    "maximal point lies in an enumerated cell",
                    &above,
                    "constructed maximal solution missing from every maximal cell".to_string(),
                );
            }
        }
    }

    // (c) Perturbed non-solutions are members of no cell. For unsolvable
    // instances, probe random grid points instead: none may be a solution.
    for _ in 0..trials {
        report.probes_run += 1;
        let base: Vec<Rat> = if minimal_samples.is_empty() {
            (0..instance.cols())
                .map(|_| Rat::new(rng.random_range(0..=20u32) as i64, 20))
                .collect()
        } else {
            let pool = if maximal_samples.is_empty() || rng.random_range(0..2u32) == 0 {
                &minimal_samples
            } else {
                &maximal_samples
            };
            pool[rng.random_range(0..pool.len())].clone()
        };
        let mut probe = base.clone();
        let j = rng.random_range(0..instance.cols());
        let eps = Rat::new(1, 1000);
        probe[j] = if rng.random_range(0..2u32) == 0 && probe[j] >= eps {
            &probe[j] - &eps
        } else if &probe[j] + &eps <= Rat::one() {
            &probe[j] + &eps
        } else {
            &probe[j] - &eps
        };
        if instance.evaluate(&probe).expect("dims") == instance.rhs() {
            continue; // perturbation happened to stay a solution
        }
        if instance.is_solution(&probe).unwrap_or(false) {
            fail(
                &mut report,
                "non-solution rejected",
                &probe,
                "membership query accepted a perturbed non-solution".to_string(),
            );
        }
        let holder = description
            .minimal_cells
            .iter()
            .chain(&description.maximal_cells)
            .position(|c| c.contains(&probe));
        if let Some(pos) = holder {
            fail(
                &mut report,
                "non-solution outside all cells",
                &probe,
                format!("cell #{pos} claims a perturbed non-solution"),
            );
        }
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::describe_solution_set;
    use crate::instance::test_util::*;

    #[test]
    fn decrease_oracle_examples() {
        let inst = example_instance();
        assert!(coordinate_decrease_oracle(&inst, &vec_r(&["0.55", "0.55", "0.45"])).unwrap());
        assert!(!coordinate_decrease_oracle(&inst, &vec_r(&["0.3", "1", "0.7"])).unwrap());

        // Lower bound vector that is a solution is the unique minimal one.
        let inst = instance(&[&["0.5", "0.3"], &["0.2", "0.3"]], &["0.7", "0.5"]);
        let lower = inst.bounds().lower;
        assert!(coordinate_decrease_oracle(&inst, &lower).unwrap());
    }

    #[test]
    fn increase_oracle_examples() {
        let inst = example_instance();
        assert!(coordinate_increase_oracle(&inst, &vec_r(&["0.6", "1", "0.4"])).unwrap());
        assert!(!coordinate_increase_oracle(&inst, &vec_r(&["0.6", "0.6", "0.4"])).unwrap());

        let inst = instance(&[&["0.4", "0.6"]], &["1.0"]);
        assert!(coordinate_increase_oracle(&inst, &vec_r(&["1", "1"])).unwrap());
    }

    #[test]
    fn oracles_require_a_solution() {
        let inst = example_instance();
        assert!(matches!(
            coordinate_decrease_oracle(&inst, &vec_r(&["0", "0", "0"])),
            Err(Error::NotASolution)
        ));
        assert!(matches!(
            coordinate_increase_oracle(&inst, &vec_r(&["0", "0", "0"])),
            Err(Error::NotASolution)
        ));
    }

    #[test]
    fn random_instances_are_planted_and_deterministic() {
        let step = Rat::new(1, 10);
        let (inst, planted) = random_solvable_instance(1, 2, 3, &step).unwrap();
        assert!(inst.is_solution(&planted).unwrap());
        assert!(matches!(
            inst.precheck(),
            crate::instance::Feasibility::PossiblySolvable
        ));
        let (inst2, planted2) = random_solvable_instance(1, 2, 3, &step).unwrap();
        assert_eq!(inst, inst2);
        assert_eq!(planted, planted2);
        let (inst3, _) = random_solvable_instance(2, 2, 3, &step).unwrap();
        assert_ne!(inst, inst3);

        assert!(matches!(
            random_solvable_instance(1, 2, 3, &Rat::new(3, 10)),
            Err(Error::InvalidStep { .. })
        ));
    }

    #[test]
    fn sampling_closed_segment_includes_endpoints() {
        let inst = example_instance();
        let cells = crate::enumeration::enumerate_minimal(&inst).unwrap();
        let samples = sample_cell(&cells[0], 7, 3);
        assert_eq!(samples.len(), 3);
        assert!(samples.contains(&vec_r(&["0.3", "0.6", "0.7"])));
        assert!(samples.contains(&vec_r(&["0.4", "0.5", "0.6"])));
        for s in &samples {
            assert!(inst.is_solution(s).unwrap());
        }
    }

    #[test]
    fn sampling_point_cell_repeats() {
        let inst = example_instance();
        let cells = crate::enumeration::enumerate_maximal(&inst).unwrap();
        let point_cell = &cells[1]; // the isolated point (0.3, 1, 0.7)
        assert_eq!(point_cell.dim(), 0);
        let samples = sample_cell(point_cell, 7, 4);
        assert_eq!(samples, vec![vec_r(&["0.3", "1", "0.7"]); 4]);
    }

    #[test]
    fn sampling_open_segment_avoids_endpoints() {
        let inst = example_instance();
        let cells = crate::enumeration::enumerate_maximal(&inst).unwrap();
        let open = &cells[0];
        let samples = sample_cell(open, 11, 6);
        assert_eq!(samples.len(), 6);
        for s in &samples {
            assert!(s != &vec_r(&["0.3", "0.6", "0.7"]));
            assert!(s != &vec_r(&["0.4", "0.5", "0.6"]));
            assert!(inst.is_solution(s).unwrap());
            assert!(open.contains(s));
        }
    }

    #[test]
    fn verify_worked_example_description_passes() {
        let inst = example_instance();
        let desc = describe_solution_set(&inst).unwrap();
        let report = verify_description(&inst, &desc, 42, 32);
        assert!(
            report.passed(),
            "counterexamples: {:?}",
            report.counterexamples
        );
        assert_eq!(report.cells_checked, 8);
        assert!(report.points_checked >= 40);
        assert_eq!(report.trials_run, 32);
    }

    #[test]
    fn verify_empty_description_is_vacuous() {
        let inst = instance(&[&["0.2"]], &["0.5"]);
        let desc = describe_solution_set(&inst).unwrap();
        let report = verify_description(&inst, &desc, 42, 16);
        assert!(report.passed());
        assert_eq!(report.cells_checked, 0);
        assert_eq!(report.trials_run, 0);
        assert_eq!(report.probes_run, 16);
    }

    #[test]
    fn verify_flags_corrupted_witness() {
        let inst = example_instance();
        let mut desc = describe_solution_set(&inst).unwrap();
        let eps = Rat::new(1, 1000);
        desc.minimal_cells[0].witness[0] = &desc.minimal_cells[0].witness[0] + &eps;
        let corrupted = desc.minimal_cells[0].witness.clone();
        let report = verify_description(&inst, &desc, 42, 8);
        assert!(!report.passed());
        assert!(
            report.counterexamples.iter().any(|c| c.point == corrupted),
            "report must name the corrupted point: {:?}",
            report.counterexamples
        );
    }

    #[test]
    fn lattice_search_confirms_unsolvable_pair() {
        // Identical left-hand sides, different right-hand sides.
        let inst = instance(&[&["0.5", "0.5"], &["0.5", "0.5"]], &["1.0", "0.9"]);
        assert!(lattice_solutions(&inst, 20).is_empty());
        assert!(!crate::enumeration::is_solvable(&inst).unwrap());
    }

    #[test]
    fn planted_solution_closure() {
        let step = Rat::new(1, 10);
        for seed in 0..20 {
            let (inst, x) = random_solvable_instance(seed, 3, 3, &step).unwrap();
            let below = minimal_below(&inst, &x).unwrap();
            let above = maximal_above(&inst, &x).unwrap();
            assert!(below.iter().zip(&x).all(|(a, b)| a <= b));
            assert!(x.iter().zip(&above).all(|(a, b)| a <= b));
            assert!(crate::enumeration::is_solvable(&inst).unwrap());
        }
    }
}
