//! Round-trip, soundness and linkage properties of the exact rational
//! representation solver.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use ordcheck_core::monotone::{is_villegas_additive, EventAlgebra, IntegerBox};
use ordcheck_core::relation::check_properties_with_cap;
use ordcheck_core::represent::{
    induced_linear_relation, linear_representation_system, solve_linear_representation,
    solve_qualitative_probability, verify_definetti_properties, InputVerdict, LinearOutcome,
    QualitativeOutcome, VerdictSet,
};
use ordcheck_core::sample::{random_below, stream_rng};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn random_positive_unit_weights(seed: u64, stream: u64, d: usize) -> Vec<BigRational> {
    let mut rng = stream_rng(seed, stream);
    let raw: Vec<BigRational> = (0..d)
        .map(|_| rat(1 + random_below(&mut rng, 30) as i64, 1))
        .collect();
    let total: BigRational = raw.iter().fold(BigRational::zero(), |a, w| a + w);
    raw.into_iter().map(|w| w / total.clone()).collect()
}

fn random_points(seed: u64, stream: u64, d: usize, count: usize) -> Vec<Vec<i64>> {
    let mut rng = stream_rng(seed ^ 0xDEAD, stream);
    let mut points: Vec<Vec<i64>> = Vec::new();
    while points.len() < count {
        let p: Vec<i64> = (0..d)
            .map(|_| random_below(&mut rng, 9) as i64 - 4)
            .collect();
        if !points.contains(&p) {
            points.push(p);
        }
    }
    points
}

/// Consecutive verdicts along the utility-sorted sample encode the whole
/// order; the solver must reproduce every pair of the sample exactly.
fn round_trip_case(seed: u64, stream: u64, d: usize, count: usize) {
    let weights = random_positive_unit_weights(seed, stream, d);
    let points = random_points(seed, stream, d, count);
    let utilities: Vec<BigRational> = points
        .iter()
        .map(|p| IntegerBox::utility(&weights, p))
        .collect();
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| utilities[b].cmp(&utilities[a]).then(a.cmp(&b)));
    let mut entries = Vec::new();
    for pair in order.windows(2) {
        let (hi, lo) = (pair[0], pair[1]);
        let verdict = if utilities[hi] > utilities[lo] {
            InputVerdict::Succ
        } else {
            InputVerdict::Sim
        };
        entries.push((points[hi].clone(), points[lo].clone(), verdict));
    }
    let vs = VerdictSet::new(d, &entries).unwrap();
    match solve_linear_representation(&vs).unwrap() {
        LinearOutcome::Witness(w) => {
            assert!(w.slack.is_positive());
            // Soundness re-check straight from the definitions.
            let sum: BigRational = w.weights.iter().fold(BigRational::zero(), |a, x| a + x);
            assert!(sum.is_one());
            for weight in &w.weights {
                assert!(weight >= &w.slack);
            }
            // The witness re-induces the input's verdicts on all pairs of
            // the sample, not just the listed ones.
            let original = induced_linear_relation(&weights, &points).unwrap();
            let recovered = induced_linear_relation(&w.weights, &points).unwrap();
            assert_eq!(original, recovered, "seed {seed} stream {stream}");
        }
        LinearOutcome::Infeasible(cert) => {
            panic!("induced verdicts must be representable: {cert:?}")
        }
    }
}

#[test]
fn round_trip_random_instances() {
    let mut stream = 0;
    for d in 1..=4usize {
        for _ in 0..10 {
            // d = 1 only has 9 distinct points in the sampled range.
            let pool = if d == 1 { 8 } else { 20 };
            let count = (3 + stream as usize % 10).min(pool);
            round_trip_case(0x10E, stream, d, count);
            stream += 1;
        }
    }
}

/// Witnesses induce relations passing the full box verification: complete,
/// strongly additive on in-box quadruples, monotone.
#[test]
fn witnesses_pass_box_verification() {
    let boxes: [(Vec<i64>, Vec<i64>); 3] = [
        (vec![0, 0], vec![3, 3]),
        (vec![0, 0, 0], vec![2, 2, 2]),
        (vec![0, 0, 0, 0], vec![1, 1, 1, 1]),
    ];
    for (stream, (lo, hi)) in boxes.into_iter().enumerate() {
        let d = lo.len();
        let weights = random_positive_unit_weights(0xB0C5, stream as u64, d);
        let points = random_points(0xB0C5, stream as u64, d, 6);
        let utilities: Vec<BigRational> = points
            .iter()
            .map(|p| IntegerBox::utility(&weights, p))
            .collect();
        let mut entries = Vec::new();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let verdict = if utilities[i] > utilities[j] {
                    InputVerdict::Succ
                } else if utilities[j] > utilities[i] {
                    InputVerdict::Prec
                } else {
                    InputVerdict::Sim
                };
                entries.push((points[i].clone(), points[j].clone(), verdict));
            }
        }
        let vs = VerdictSet::new(d, &entries).unwrap();
        let LinearOutcome::Witness(w) = solve_linear_representation(&vs).unwrap() else {
            panic!("representable by construction");
        };
        let bx = IntegerBox::new(lo, hi).unwrap();
        let report = verify_definetti_properties(&w.weights, &bx).unwrap();
        assert!(report.all_hold(), "{report:?}");
    }
}

/// Measure witnesses are monotone under inclusion and induce
/// Villegas-additive transitive relations.
#[test]
fn measure_witnesses_are_monotone_and_villegas_additive() {
    for atoms in 1..=3u32 {
        let algebra = EventAlgebra::new(atoms).unwrap();
        for stream in 0..4u64 {
            let weights = random_positive_unit_weights(0x3EA5 + u64::from(atoms), stream, atoms as usize);
            let rel = algebra.measure_relation(&weights).unwrap();
            let outcome = solve_qualitative_probability(&rel, &algebra, false).unwrap();
            let QualitativeOutcome::Witness(w) = outcome else {
                panic!("measure-induced relations are representable");
            };
            // Monotone under inclusion.
            let events = algebra.event_count();
            for a in 0..events {
                for b in 0..events {
                    if algebra.is_subset(b as u32, a as u32) {
                        assert!(w.event_values[a] >= w.event_values[b]);
                    }
                }
            }
            // The induced relation is Villegas-additive and transitive.
            let induced = algebra.measure_relation(&w.atom_weights).unwrap();
            assert!(is_villegas_additive(&induced, &algebra).unwrap().holds);
            let props = check_properties_with_cap(&induced, events).unwrap();
            assert!(props.transitive.holds() && props.complete.holds());
        }
    }
}

/// Certificates survive independent re-verification, and tampering with a
/// multiplier breaks them.
#[test]
fn certificates_reverify_and_tampering_is_detected() {
    let vs = VerdictSet::new(
        2,
        &[
            (vec![1, 0], vec![0, 1], InputVerdict::Succ),
            (vec![0, 1], vec![1, 0], InputVerdict::Succ),
        ],
    )
    .unwrap();
    let tagged = linear_representation_system(&vs);
    let LinearOutcome::Infeasible(cert) = solve_linear_representation(&vs).unwrap() else {
        panic!("contradictory strict pair must be infeasible");
    };
    assert!(cert.verify(&tagged));
    let mut tampered = cert.clone();
    for y in tampered.multipliers.iter_mut() {
        *y = BigRational::zero();
    }
    assert!(!tampered.verify(&tagged));
}

/// The weights found by the solver stay within the declared margin of the
/// strict constraints: re-evaluating each strict row leaves at least the
/// slack.
#[test]
fn strict_rows_keep_the_reported_margin() {
    let vs = VerdictSet::new(
        3,
        &[
            (vec![2, 0, 0], vec![0, 1, 0], InputVerdict::Succ),
            (vec![0, 0, 2], vec![1, 0, 0], InputVerdict::Succ),
            (vec![1, 1, 1], vec![2, 1, 0], InputVerdict::Sim),
        ],
    )
    .unwrap();
    let LinearOutcome::Witness(w) = solve_linear_representation(&vs).unwrap() else {
        panic!("feasible instance");
    };
    for (&(lhs, rhs), kind) in &vs.verdicts {
        let diff: BigRational = (0..3)
            .map(|k| {
                &w.weights[k]
                    * BigRational::from_integer((vs.points[lhs][k] - vs.points[rhs][k]).into())
            })
            .fold(BigRational::zero(), |a, t| a + t);
        match kind {
            ordcheck_core::represent::VerdictKind::Succ => assert!(diff >= w.slack),
            ordcheck_core::represent::VerdictKind::Sim => assert!(diff.is_zero()),
        }
    }
}
