//! Property tests for the solver's structural invariants.

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use addmin::enumeration::{enumerate_maximal, enumerate_minimal};
use addmin::grid::build_grids;
use addmin::oracle::random_solvable_instance;
use addmin::subsystem::{build_maximal_system, build_minimal_system, BoxLinearSystem};
use addmin::{
    build_index_space, maximal_above, minimal_below, solve_box_system, CellKind, CellSource,
    ProblemInstance, Rat,
};

fn tenth(k: u32) -> Rat {
    Rat::new(k as i64, 10)
}

/// Random vector on the 1/10 grid, from a seeded generator.
fn grid_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    (0..n).map(|_| tenth(rng.random_range(0..=10))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluate_is_monotone(seed in any::<u64>(), m in 1usize..=4, n in 1usize..=4) {
        let step = Rat::new(1, 10);
        let (inst, _) = random_solvable_instance(seed, m, n, &step).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let x = grid_vec(&mut rng, n);
        // y >= x componentwise.
        let y: Vec<Rat> = x
            .iter()
            .map(|v| {
                let bump = tenth(rng.random_range(0..=10));
                (v + &bump).min(Rat::one())
            })
            .collect();
        let ex = inst.evaluate(&x).unwrap();
        let ey = inst.evaluate(&y).unwrap();
        prop_assert!(ex.iter().zip(&ey).all(|(a, b)| a <= b));
    }

    #[test]
    fn solutions_dominate_the_lower_bound_vector(seed in any::<u64>(), m in 1usize..=4, n in 1usize..=4) {
        let step = Rat::new(1, 10);
        let (inst, planted) = random_solvable_instance(seed, m, n, &step).unwrap();
        let lower = inst.bounds().lower;
        prop_assert!(lower.iter().zip(&planted).all(|(lo, x)| lo <= x));
    }

    #[test]
    fn order_convexity_on_the_bounding_pair(seed in any::<u64>(), m in 1usize..=3, n in 1usize..=3) {
        let step = Rat::new(1, 10);
        let (inst, planted) = random_solvable_instance(seed, m, n, &step).unwrap();
        let below = minimal_below(&inst, &planted).unwrap();
        let above = maximal_above(&inst, &planted).unwrap();
        for k in 0..=4u32 {
            let lambda = Rat::new(k as i64, 4);
            let point: Vec<Rat> = below
                .iter()
                .zip(&above)
                .map(|(u, v)| u + &(&(v - u) * &lambda))
                .collect();
            prop_assert!(inst.is_solution(&point).unwrap());
        }
    }

    #[test]
    fn enumerations_agree_on_solvability(seed in any::<u64>(), m in 1usize..=3, n in 1usize..=3, bump in 0u32..=3) {
        let step = Rat::new(1, 10);
        let (inst, _) = random_solvable_instance(seed, m, n, &step).unwrap();
        // Perturbing one right-hand side entry upward often makes the
        // system unsolvable; either way both enumerations must agree.
        let mut b = inst.rhs().to_vec();
        b[0] = &b[0] + &tenth(bump);
        let inst = match ProblemInstance::new(inst.matrix().to_vec(), b) {
            Ok(inst) => inst,
            Err(_) => return Ok(()), // b left [0, n] entirely
        };
        let minimal = enumerate_minimal(&inst).unwrap();
        let maximal = enumerate_maximal(&inst).unwrap();
        prop_assert_eq!(minimal.is_empty(), maximal.is_empty());
    }

    #[test]
    fn grid_segments_contain_no_matrix_entry(seed in any::<u64>(), m in 1usize..=4, n in 1usize..=4) {
        let step = Rat::new(1, 10);
        let (inst, _) = random_solvable_instance(seed, m, n, &step).unwrap();
        let grids = build_grids(&inst, &inst.bounds()).unwrap();
        for (j, grid) in grids.iter().enumerate() {
            prop_assert!(grid.q.windows(2).all(|w| w[0] < w[1]));
            for i in 0..m {
                let a = inst.entry(i, j);
                for w in grid.q.windows(2) {
                    prop_assert!(a <= &w[0] || a >= &w[1]);
                }
            }
        }
    }

    #[test]
    fn index_space_counts_match_the_product_formulas(seed in any::<u64>(), m in 1usize..=4, n in 1usize..=4) {
        let step = Rat::new(1, 10);
        let (inst, _) = random_solvable_instance(seed, m, n, &step).unwrap();
        let grids = build_grids(&inst, &inst.bounds()).unwrap();
        let minimal = build_index_space(&grids, CellKind::Minimal, 1_000_000).unwrap();
        let maximal = build_index_space(&grids, CellKind::Maximal, 1_000_000).unwrap();
        let k_count: u128 = grids
            .iter()
            .map(|g| if g.pinned { 1 } else { g.segments() as u128 })
            .product();
        let m_count: u128 = grids
            .iter()
            .map(|g| g.segments() as u128 + 1)
            .product();
        prop_assert_eq!(minimal.total, k_count);
        prop_assert_eq!(maximal.total, m_count);
        prop_assert_eq!(minimal.iter_tuples().count() as u128, k_count);
        prop_assert_eq!(maximal.iter_tuples().count() as u128, m_count);
    }

    #[test]
    fn minimal_cell_samples_stay_between_the_bound_vectors(seed in any::<u64>(), m in 1usize..=4, n in 1usize..=4) {
        let step = Rat::new(1, 10);
        let (inst, _) = random_solvable_instance(seed, m, n, &step).unwrap();
        let bounds = inst.bounds();
        for cell in enumerate_minimal(&inst).unwrap() {
            for point in addmin::sample_cell(&cell, seed, 5) {
                for (j, v) in point.iter().enumerate() {
                    prop_assert!(&bounds.lower[j] <= v && v <= &bounds.upper[j]);
                }
            }
        }
    }

    /// If a solution strictly below `x` exists, then already some single
    /// coordinate of `x` can be lowered onto it while staying a solution.
    #[test]
    fn single_coordinate_decreases_interpolate(seed in any::<u64>(), m in 1usize..=4, n in 2usize..=4) {
        let step = Rat::new(1, 10);
        let (inst, planted) = random_solvable_instance(seed, m, n, &step).unwrap();
        let below = minimal_below(&inst, &planted).unwrap();
        for j in 0..n {
            if below[j] < planted[j] {
                let mut z = planted.clone();
                z[j] = below[j].clone();
                prop_assert!(inst.is_solution(&z).unwrap());
            }
        }
    }

    #[test]
    fn decimal_display_round_trips(num in -10_000i64..10_000, twos in 0u32..=6, fives in 0u32..=6) {
        let den = 2i64.pow(twos) * 5i64.pow(fives);
        let value = Rat::new(num, den);
        let text = value.to_string();
        prop_assert!(!text.contains('/'));
        prop_assert_eq!(Rat::parse_decimal(&text).unwrap(), value);
    }
}

/// Independent desk-scale interpretation of a box system: does the lattice
/// point (over the free variables) satisfy the bounds and equality rows?
fn lattice_point_satisfies(system: &BoxLinearSystem, values: &[Rat]) -> bool {
    for (f, b) in system.bounds.iter().enumerate() {
        let v = &values[f];
        let lo_ok = if b.lo_strict { v > &b.lo } else { v >= &b.lo };
        let hi_ok = if b.hi_strict { v < &b.hi } else { v <= &b.hi };
        if !lo_ok || !hi_ok {
            return false;
        }
    }
    system.rows.iter().all(|row| {
        let lhs: Rat = row
            .coeffs
            .iter()
            .zip(values)
            .map(|(c, v)| c * v)
            .sum::<Rat>()
            + &row.constant;
        lhs == row.rhs
    })
}

/// Every lattice assignment of the free variables, on the 1/20 grid within
/// the boxes.
fn lattice_assignments(system: &BoxLinearSystem) -> Vec<Vec<Rat>> {
    let steps = 20i64;
    let ranges: Vec<Vec<Rat>> = system
        .bounds
        .iter()
        .map(|b| {
            // Smallest/largest multiples of 1/20 inside [lo, hi].
            let mut vals = Vec::new();
            for k in 0..=steps {
                let v = Rat::new(k, steps);
                if v >= b.lo && v <= b.hi {
                    vals.push(v);
                }
            }
            vals
        })
        .collect();
    let mut out = vec![Vec::new()];
    for range in ranges {
        let mut next = Vec::new();
        for partial in &out {
            for v in &range {
                let mut p = partial.clone();
                p.push(v.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Every lattice solution of a small instance is bracketed by enumerated
/// cells: its minimal solution below lies in some minimal cell and its
/// maximal solution above in some maximal cell. This exercises completeness
/// of both enumerations over whole solution sets, not just planted points.
#[test]
fn enumerations_cover_all_lattice_solutions() {
    let step = Rat::new(1, 10);
    let mut solutions_checked = 0usize;
    for seed in 0..30u64 {
        let m = 1 + (seed % 3) as usize;
        let n = 1 + ((seed / 3) % 3) as usize;
        let (inst, _) = random_solvable_instance(seed, m, n, &step).unwrap();
        let minimal_cells = enumerate_minimal(&inst).unwrap();
        let maximal_cells = enumerate_maximal(&inst).unwrap();
        for x in addmin::oracle::lattice_solutions(&inst, 10) {
            solutions_checked += 1;
            let below = minimal_below(&inst, &x).unwrap();
            let above = maximal_above(&inst, &x).unwrap();
            assert!(
                minimal_cells.iter().any(|c| c.contains(&below)),
                "seed {seed}: minimal solution {below:?} missing from every cell"
            );
            assert!(
                maximal_cells.iter().any(|c| c.contains(&above)),
                "seed {seed}: maximal solution {above:?} missing from every cell"
            );
        }
    }
    assert!(solutions_checked > 100, "expected a substantial sample");
}

/// When the solver reports a subsystem empty, a refined-lattice search over
/// its box must find nothing either.
#[test]
fn empty_subsystems_are_definitively_empty() {
    let step = Rat::new(1, 10);
    let mut checked_empties = 0;
    for seed in 0..40u64 {
        let n = if seed % 2 == 0 { 2 } else { 3 };
        let (inst, _) = random_solvable_instance(seed, 2, n, &step).unwrap();
        let bounds = inst.bounds();
        let grids = build_grids(&inst, &bounds).unwrap();
        for kind in [CellKind::Minimal, CellKind::Maximal] {
            let space = build_index_space(&grids, kind, 1_000_000).unwrap();
            for tuple in space.iter_tuples() {
                let system = match kind {
                    CellKind::Minimal => build_minimal_system(&inst, &grids, &tuple).unwrap(),
                    CellKind::Maximal => build_maximal_system(&inst, &grids, &tuple).unwrap(),
                };
                let source = CellSource { kind, index: tuple };
                if solve_box_system(&system, source).is_none() {
                    checked_empties += 1;
                    for values in lattice_assignments(&system) {
                        assert!(
                            !lattice_point_satisfies(&system, &values),
                            "solver reported empty but lattice point {values:?} satisfies the subsystem"
                        );
                    }
                }
            }
        }
    }
    assert!(checked_empties > 0, "expected some empty subsystems");
}

/// The worked example's empty subsystem, spelled out.
#[test]
fn worked_example_empty_subsystem_has_no_lattice_point() {
    let inst = ProblemInstance::new(
        vec![
            vec![Rat::new(2, 5), Rat::new(3, 5), Rat::new(1, 2)],
            vec![Rat::new(7, 10), Rat::new(1, 2), Rat::new(4, 5)],
        ],
        vec![Rat::new(7, 5), Rat::new(3, 2)],
    )
    .unwrap();
    let grids = build_grids(&inst, &inst.bounds()).unwrap();
    let k = vec![
        addmin::IndexEntry::Seg(1),
        addmin::IndexEntry::Seg(1),
        addmin::IndexEntry::Seg(1),
    ];
    let system = build_minimal_system(&inst, &grids, &k).unwrap();
    assert!(solve_box_system(
        &system,
        CellSource {
            kind: CellKind::Minimal,
            index: k
        }
    )
    .is_none());
    for values in lattice_assignments(&system) {
        assert!(!lattice_point_satisfies(&system, &values));
    }
}
