//! Exact rational representation of comparison verdicts by positive linear
//! utilities and of event comparisons by probability measures.
//!
//! Strict preference cannot be written as a linear constraint, so it is
//! encoded by a shared slack: maximize ε subject to p·(x−y) ≥ ε for every
//! strict verdict (and weight positivity, when required, as p_i ≥ ε). An
//! optimum ε > 0 is a faithful witness and doubles as a robustness margin;
//! an optimum ε = 0, or an infeasible system, yields a certificate — a
//! signed rational combination of the input constraints deriving a
//! contradiction — that re-verifies by plain arithmetic. ε is capped at 1 to
//! keep the program bounded; any positive value certifies strictness, so
//! the cap costs nothing.
//!
//! Everything here is exact BigRational arithmetic; no floating point.

pub mod simplex;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monotone::{point_label, EventAlgebra, IntegerBox};
use crate::relation::BinaryRelation;
use simplex::{LpRow, LpSystem, RowKind, SimplexOutcome};

/// Point cap for the exhaustive quadruple scan in the box verification.
pub const DEFINETTI_POINT_CAP: usize = 32;

// ---------------------------------------------------------------------------
// Verdict sets
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputVerdict {
    /// lhs ≻ rhs
    Succ,
    /// lhs ∼ rhs
    Sim,
    /// lhs ≺ rhs
    Prec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum VerdictKind {
    Succ,
    Sim,
}

/// A partial specification of a relation on lattice points: distinct points
/// and, for selected ordered pairs, a strict or indifferent verdict.
/// ≺ entries are stored flipped; indifference is stored under the smaller
/// point index. Marking one ordered pair twice incompatibly is an input
/// error (opposed strict verdicts on the two orientations are not — they
/// make the system infeasible, which is the solver's business to certify).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictSet {
    pub dimension: usize,
    pub points: Vec<Vec<i64>>,
    pub verdicts: BTreeMap<(usize, usize), VerdictKind>,
}

impl VerdictSet {
    pub fn new(
        dimension: usize,
        entries: &[(Vec<i64>, Vec<i64>, InputVerdict)],
    ) -> Result<Self> {
        if dimension < 1 {
            return Err(Error::InvalidArgument("dimension must be at least 1".to_string()));
        }
        if entries.is_empty() {
            return Err(Error::InvalidArgument("at least one verdict required".to_string()));
        }
        let mut points: Vec<Vec<i64>> = Vec::new();
        let index_of = |p: &Vec<i64>, points: &mut Vec<Vec<i64>>| -> Result<usize> {
            if p.len() != dimension {
                return Err(Error::InvalidArgument(format!(
                    "point {} has dimension {}, expected {dimension}",
                    point_label(p),
                    p.len()
                )));
            }
            Ok(match points.iter().position(|q| q == p) {
                Some(i) => i,
                None => {
                    points.push(p.clone());
                    points.len() - 1
                }
            })
        };
        let mut verdicts: BTreeMap<(usize, usize), VerdictKind> = BTreeMap::new();
        for (lhs, rhs, verdict) in entries {
            let li = index_of(lhs, &mut points)?;
            let ri = index_of(rhs, &mut points)?;
            let (key, kind) = match verdict {
                InputVerdict::Succ => ((li, ri), VerdictKind::Succ),
                InputVerdict::Prec => ((ri, li), VerdictKind::Succ),
                InputVerdict::Sim => ((li.min(ri), li.max(ri)), VerdictKind::Sim),
            };
            if let Some(existing) = verdicts.get(&key) {
                if *existing != kind {
                    return Err(Error::InconsistentVerdicts {
                        lhs: point_label(&points[key.0]),
                        rhs: point_label(&points[key.1]),
                    });
                }
            }
            // An indifference mark conflicts with a strict mark on either
            // orientation of the same pair.
            let conflicting = match kind {
                VerdictKind::Sim => verdicts.get(&(key.0, key.1)) == Some(&VerdictKind::Succ)
                    || verdicts.get(&(key.1, key.0)) == Some(&VerdictKind::Succ),
                VerdictKind::Succ => {
                    verdicts.get(&(key.0.min(key.1), key.0.max(key.1)))
                        == Some(&VerdictKind::Sim)
                }
            };
            if conflicting {
                return Err(Error::InconsistentVerdicts {
                    lhs: point_label(&points[key.0]),
                    rhs: point_label(&points[key.1]),
                });
            }
            verdicts.insert(key, kind);
        }
        Ok(VerdictSet {
            dimension,
            points,
            verdicts,
        })
    }
}

// ---------------------------------------------------------------------------
// Witnesses and certificates
// ---------------------------------------------------------------------------

/// Positive rational weights summing to one, with the shared strictness
/// slack they support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationWitness {
    pub weights: Vec<BigRational>,
    pub slack: BigRational,
}

/// Rational atom weights summing to one with the induced event values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureWitness {
    pub atom_weights: Vec<BigRational>,
    pub event_values: Vec<BigRational>,
    pub slack: BigRational,
}

/// What a constraint row came from, for readable certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintTag {
    /// Weights sum to one.
    Normalization,
    /// Strict comparison between items `lhs` and `rhs`.
    Strict { lhs: usize, rhs: usize },
    /// Indifference between items `lhs` and `rhs`.
    Tie { lhs: usize, rhs: usize },
    /// Weight `index` at least the shared slack.
    Positivity { index: usize },
    /// The slack cap ε ≤ 1.
    SlackCap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    /// The constraints admit no solution at all.
    SystemInfeasible,
    /// Solutions exist but none with positive strictness slack.
    NoStrictSlack,
}

/// A signed rational combination of the input constraints deriving a
/// contradiction: ≥-rows carry nonnegative multipliers, ≤-rows nonpositive
/// ones, equalities are free. Summing multiplier·row bounds a nonnegative
/// quantity by an impossible value; `verify` re-checks this by arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfeasibilityCertificate {
    pub kind: CertificateKind,
    /// One multiplier per row of the system the solver ran.
    pub multipliers: Vec<BigRational>,
}

/// An LP with tagged rows, kept so certificates can be re-verified against
/// exactly the system that was solved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedSystem {
    pub system: LpSystem,
    pub tags: Vec<ConstraintTag>,
    /// Index of the shared slack variable ε.
    pub epsilon: usize,
}

impl InfeasibilityCertificate {
    /// Re-derives the contradiction: checks the sign conditions and that
    /// the combined coefficients are nonpositive everywhere (strictly
    /// negative on ε for the no-slack kind) while the combined right-hand
    /// side is positive (nonnegative for the no-slack kind).
    pub fn verify(&self, tagged: &TaggedSystem) -> bool {
        let system = &tagged.system;
        if self.multipliers.len() != system.rows.len() {
            return false;
        }
        for (row, y) in system.rows.iter().zip(&self.multipliers) {
            let sign_ok = match row.kind {
                RowKind::Ge => !y.is_negative(),
                RowKind::Le => !y.is_positive(),
                RowKind::Eq => true,
            };
            if !sign_ok {
                return false;
            }
        }
        let mut combined = alloc::vec![BigRational::zero(); system.num_vars];
        let mut rhs = BigRational::zero();
        for (row, y) in system.rows.iter().zip(&self.multipliers) {
            if y.is_zero() {
                continue;
            }
            for (c, a) in combined.iter_mut().zip(&row.coeffs) {
                *c += y * a;
            }
            rhs += y * &row.rhs;
        }
        match self.kind {
            CertificateKind::SystemInfeasible => {
                combined.iter().all(|c| !c.is_positive()) && rhs.is_positive()
            }
            CertificateKind::NoStrictSlack => {
                combined
                    .iter()
                    .enumerate()
                    .all(|(j, c)| {
                        if j == tagged.epsilon {
                            c.is_negative()
                        } else {
                            !c.is_positive()
                        }
                    })
                    && !rhs.is_negative()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearOutcome {
    Witness(RepresentationWitness),
    Infeasible(InfeasibilityCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QualitativeOutcome {
    Witness(MeasureWitness),
    Infeasible(InfeasibilityCertificate),
}

// ---------------------------------------------------------------------------
// Linear representation
// ---------------------------------------------------------------------------

/// Builds the slack-maximization program for a verdict set: weights p and
/// slack ε, Σp = 1, p·(x−y) ≥ ε on strict verdicts, p·(x−y) = 0 on ties,
/// p_i ≥ ε, ε ≤ 1.
pub fn linear_representation_system(vs: &VerdictSet) -> TaggedSystem {
    let d = vs.dimension;
    let epsilon = d;
    let num_vars = d + 1;
    let mut rows = Vec::new();
    let mut tags = Vec::new();

    let mut norm = alloc::vec![BigRational::one(); d];
    norm.push(BigRational::zero());
    rows.push(LpRow {
        kind: RowKind::Eq,
        coeffs: norm,
        rhs: BigRational::one(),
    });
    tags.push(ConstraintTag::Normalization);

    for (&(lhs, rhs), kind) in &vs.verdicts {
        let mut coeffs: Vec<BigRational> = (0..d)
            .map(|k| BigRational::from_integer((vs.points[lhs][k] - vs.points[rhs][k]).into()))
            .collect();
        match kind {
            VerdictKind::Succ => {
                coeffs.push(-BigRational::one());
                rows.push(LpRow {
                    kind: RowKind::Ge,
                    coeffs,
                    rhs: BigRational::zero(),
                });
                tags.push(ConstraintTag::Strict { lhs, rhs });
            }
            VerdictKind::Sim => {
                coeffs.push(BigRational::zero());
                rows.push(LpRow {
                    kind: RowKind::Eq,
                    coeffs,
                    rhs: BigRational::zero(),
                });
                tags.push(ConstraintTag::Tie { lhs, rhs });
            }
        }
    }

    for k in 0..d {
        let mut coeffs = alloc::vec![BigRational::zero(); num_vars];
        coeffs[k] = BigRational::one();
        coeffs[epsilon] = -BigRational::one();
        rows.push(LpRow {
            kind: RowKind::Ge,
            coeffs,
            rhs: BigRational::zero(),
        });
        tags.push(ConstraintTag::Positivity { index: k });
    }

    let mut cap = alloc::vec![BigRational::zero(); num_vars];
    cap[epsilon] = BigRational::one();
    rows.push(LpRow {
        kind: RowKind::Le,
        coeffs: cap,
        rhs: BigRational::one(),
    });
    tags.push(ConstraintTag::SlackCap);

    TaggedSystem {
        system: LpSystem { num_vars, rows },
        tags,
        epsilon,
    }
}

fn solve_tagged(tagged: &TaggedSystem) -> Result<(Option<Vec<BigRational>>, InfeasibilityCertificate)> {
    let mut objective = alloc::vec![BigRational::zero(); tagged.system.num_vars];
    objective[tagged.epsilon] = BigRational::one();
    match simplex::maximize(&tagged.system, &objective)? {
        SimplexOutcome::Optimal {
            values,
            objective: best,
            duals,
        } => {
            if best.is_positive() {
                Ok((
                    Some(values),
                    InfeasibilityCertificate {
                        kind: CertificateKind::NoStrictSlack,
                        multipliers: Vec::new(),
                    },
                ))
            } else {
                let cert = InfeasibilityCertificate {
                    kind: CertificateKind::NoStrictSlack,
                    multipliers: duals,
                };
                if !cert.verify(tagged) {
                    return Err(Error::Internal(
                        "no-slack certificate failed re-verification".to_string(),
                    ));
                }
                Ok((None, cert))
            }
        }
        SimplexOutcome::Infeasible { duals } => {
            let cert = InfeasibilityCertificate {
                kind: CertificateKind::SystemInfeasible,
                multipliers: duals,
            };
            if !cert.verify(tagged) {
                return Err(Error::Internal(
                    "infeasibility certificate failed re-verification".to_string(),
                ));
            }
            Ok((None, cert))
        }
    }
}

/// Finds positive weights summing to one that reproduce every verdict with
/// maximal shared slack, or certifies that none exist.
pub fn solve_linear_representation(vs: &VerdictSet) -> Result<LinearOutcome> {
    let tagged = linear_representation_system(vs);
    let (solution, cert) = solve_tagged(&tagged)?;
    let Some(values) = solution else {
        return Ok(LinearOutcome::Infeasible(cert));
    };
    let weights: Vec<BigRational> = values[..vs.dimension].to_vec();
    let slack = values[vs.dimension].clone();
    // Witness soundness: every constraint must hold exactly.
    let sum: BigRational = weights.iter().fold(BigRational::zero(), |a, w| a + w);
    let mut sound = sum.is_one() && slack.is_positive();
    for w in &weights {
        sound &= w >= &slack;
    }
    for (&(lhs, rhs), kind) in &vs.verdicts {
        let diff: BigRational = (0..vs.dimension)
            .map(|k| {
                &weights[k]
                    * BigRational::from_integer((vs.points[lhs][k] - vs.points[rhs][k]).into())
            })
            .fold(BigRational::zero(), |a, t| a + t);
        match kind {
            VerdictKind::Succ => sound &= diff >= slack,
            VerdictKind::Sim => sound &= diff.is_zero(),
        }
    }
    if !sound {
        return Err(Error::Internal(
            "representation witness failed exact re-verification".to_string(),
        ));
    }
    Ok(LinearOutcome::Witness(RepresentationWitness {
        weights,
        slack,
    }))
}

fn validate_positive_unit_weights(weights: &[BigRational]) -> Result<()> {
    if weights.is_empty() {
        return Err(Error::InvalidWeights("no weights supplied".to_string()));
    }
    if let Some(i) = weights.iter().position(|w| !w.is_positive()) {
        return Err(Error::NonPositiveWeight { index: i });
    }
    let sum: BigRational = weights.iter().fold(BigRational::zero(), |a, w| a + w);
    if !sum.is_one() {
        return Err(Error::InvalidWeights(format!("weights sum to {sum}, not 1")));
    }
    Ok(())
}

/// The relation x ≽ y iff p·x ≥ p·y on the given points.
pub fn induced_linear_relation(
    weights: &[BigRational],
    points: &[Vec<i64>],
) -> Result<BinaryRelation> {
    validate_positive_unit_weights(weights)?;
    for p in points {
        if p.len() != weights.len() {
            return Err(Error::InvalidArgument(format!(
                "point {} has dimension {}, weights have {}",
                point_label(p),
                p.len(),
                weights.len()
            )));
        }
    }
    let carrier = crate::relation::Carrier::new(points.iter().map(|p| point_label(p)))?;
    let utilities: Vec<BigRational> = points
        .iter()
        .map(|p| IntegerBox::utility(weights, p))
        .collect();
    Ok(BinaryRelation::from_fn(carrier, |i, j| {
        utilities[i] >= utilities[j]
    }))
}

/// Report of the box-level checks on an induced relation: completeness,
/// strong additivity over all in-box quadruples, and monotonicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinettiReport {
    pub complete: bool,
    pub strongly_additive: bool,
    pub strong_additivity_witness: Option<[Vec<i64>; 4]>,
    pub monotone: bool,
    pub monotone_witness: Option<(Vec<i64>, Vec<i64>)>,
}

impl DefinettiReport {
    pub fn all_hold(&self) -> bool {
        self.complete && self.strongly_additive && self.monotone
    }
}

/// Exhaustively checks the relation induced by positive unit weights on a
/// box: complete, strongly additive for every quadruple whose sums stay in
/// the box, and monotone (strict dominance forces strict preference).
pub fn verify_definetti_properties(
    weights: &[BigRational],
    bx: &IntegerBox,
) -> Result<DefinettiReport> {
    validate_positive_unit_weights(weights)?;
    if weights.len() != bx.dimension() {
        return Err(Error::InvalidWeights(format!(
            "{} weights for a box of dimension {}",
            weights.len(),
            bx.dimension()
        )));
    }
    let points = bx.points()?;
    if points.len() > DEFINETTI_POINT_CAP {
        return Err(Error::CapExceeded {
            what: "box verification points",
            size: points.len(),
            cap: DEFINETTI_POINT_CAP,
        });
    }
    let n = points.len();
    let utilities: Vec<BigRational> = points
        .iter()
        .map(|p| IntegerBox::utility(weights, p))
        .collect();

    // Completeness of the induced relation: utilities totally order points.
    let complete = (0..n)
        .all(|i| (0..n).all(|j| utilities[i] >= utilities[j] || utilities[j] >= utilities[i]));

    // Pairwise sums and their utilities, when inside the box.
    let mut sum_utility: Vec<Vec<Option<BigRational>>> = alloc::vec![alloc::vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if bx.add(&points[i], &points[j]).is_some() {
                sum_utility[i][j] = Some(&utilities[i] + &utilities[j]);
            }
        }
    }
    let mut strong_witness = None;
    'outer: for x1 in 0..n {
        for y1 in 0..n {
            if utilities[x1] < utilities[y1] {
                continue;
            }
            for x2 in 0..n {
                let Some(ux) = &sum_utility[x1][x2] else { continue };
                for y2 in 0..n {
                    if utilities[x2] < utilities[y2] {
                        continue;
                    }
                    let Some(uy) = &sum_utility[y1][y2] else { continue };
                    if ux < uy {
                        strong_witness = Some([
                            points[x1].clone(),
                            points[x2].clone(),
                            points[y1].clone(),
                            points[y2].clone(),
                        ]);
                        break 'outer;
                    }
                }
            }
        }
    }

    let mut monotone_witness = None;
    'dominance: for i in 0..n {
        for j in 0..n {
            let dominates = points[i] != points[j] && IntegerBox::leq(&points[j], &points[i]);
            if dominates && utilities[i] <= utilities[j] {
                monotone_witness = Some((points[i].clone(), points[j].clone()));
                break 'dominance;
            }
        }
    }

    Ok(DefinettiReport {
        complete,
        strongly_additive: strong_witness.is_none(),
        strong_additivity_witness: strong_witness,
        monotone: monotone_witness.is_none(),
        monotone_witness,
    })
}

// ---------------------------------------------------------------------------
// Qualitative probability
// ---------------------------------------------------------------------------

/// Builds the measure-representation program for a complete event relation:
/// atom weights w and slack ε, Σw = 1, P(A) − P(B) ≥ ε on A ≻ B,
/// P(A) = P(B) on A ∼ B, optionally w_i ≥ ε, ε ≤ 1.
pub fn qualitative_probability_system(
    rel: &BinaryRelation,
    algebra: &EventAlgebra,
    require_positive_atoms: bool,
) -> Result<TaggedSystem> {
    let events = algebra.event_count();
    if rel.carrier().len() != events {
        return Err(Error::CarrierMismatch {
            left: rel.carrier().describe(),
            right: format!("event algebra with {events} events"),
        });
    }
    let atoms = algebra.atoms() as usize;
    let epsilon = atoms;
    let num_vars = atoms + 1;
    let mut rows = Vec::new();
    let mut tags = Vec::new();

    let mut norm = alloc::vec![BigRational::one(); atoms];
    norm.push(BigRational::zero());
    rows.push(LpRow {
        kind: RowKind::Eq,
        coeffs: norm,
        rhs: BigRational::one(),
    });
    tags.push(ConstraintTag::Normalization);

    let event_coeff = |a: usize, b: usize| -> Vec<BigRational> {
        let mut coeffs = alloc::vec![BigRational::zero(); num_vars];
        for atom in 0..atoms {
            let in_a = a >> atom & 1 == 1;
            let in_b = b >> atom & 1 == 1;
            if in_a && !in_b {
                coeffs[atom] = BigRational::one();
            } else if in_b && !in_a {
                coeffs[atom] = -BigRational::one();
            }
        }
        coeffs
    };

    for a in 0..events {
        for b in a + 1..events {
            match (rel.holds(a, b), rel.holds(b, a)) {
                (true, true) => {
                    let coeffs = event_coeff(a, b);
                    rows.push(LpRow {
                        kind: RowKind::Eq,
                        coeffs,
                        rhs: BigRational::zero(),
                    });
                    tags.push(ConstraintTag::Tie { lhs: a, rhs: b });
                }
                (true, false) => {
                    let mut coeffs = event_coeff(a, b);
                    coeffs[epsilon] = -BigRational::one();
                    rows.push(LpRow {
                        kind: RowKind::Ge,
                        coeffs,
                        rhs: BigRational::zero(),
                    });
                    tags.push(ConstraintTag::Strict { lhs: a, rhs: b });
                }
                (false, true) => {
                    let mut coeffs = event_coeff(b, a);
                    coeffs[epsilon] = -BigRational::one();
                    rows.push(LpRow {
                        kind: RowKind::Ge,
                        coeffs,
                        rhs: BigRational::zero(),
                    });
                    tags.push(ConstraintTag::Strict { lhs: b, rhs: a });
                }
                (false, false) => {
                    return Err(Error::NotComplete(
                        rel.carrier().label(a).to_string(),
                        rel.carrier().label(b).to_string(),
                    ));
                }
            }
        }
    }

    if require_positive_atoms {
        for k in 0..atoms {
            let mut coeffs = alloc::vec![BigRational::zero(); num_vars];
            coeffs[k] = BigRational::one();
            coeffs[epsilon] = -BigRational::one();
            rows.push(LpRow {
                kind: RowKind::Ge,
                coeffs,
                rhs: BigRational::zero(),
            });
            tags.push(ConstraintTag::Positivity { index: k });
        }
    }

    let mut cap = alloc::vec![BigRational::zero(); num_vars];
    cap[epsilon] = BigRational::one();
    rows.push(LpRow {
        kind: RowKind::Le,
        coeffs: cap,
        rhs: BigRational::one(),
    });
    tags.push(ConstraintTag::SlackCap);

    Ok(TaggedSystem {
        system: LpSystem { num_vars, rows },
        tags,
        epsilon,
    })
}

/// Finds a probability measure over the atoms reproducing every event-pair
/// verdict of a complete relation, or certifies that none exists. Null
/// atoms are allowed unless `require_positive_atoms` is set.
pub fn solve_qualitative_probability(
    rel: &BinaryRelation,
    algebra: &EventAlgebra,
    require_positive_atoms: bool,
) -> Result<QualitativeOutcome> {
    let tagged = qualitative_probability_system(rel, algebra, require_positive_atoms)?;
    let (solution, cert) = solve_tagged(&tagged)?;
    let Some(values) = solution else {
        return Ok(QualitativeOutcome::Infeasible(cert));
    };
    let atoms = algebra.atoms() as usize;
    let atom_weights: Vec<BigRational> = values[..atoms].to_vec();
    let slack = values[atoms].clone();
    let event_values: Vec<BigRational> = (0..algebra.event_count())
        .map(|m| algebra.event_value(&atom_weights, m as u32))
        .collect();
    // Witness soundness: the induced comparisons must reproduce the input.
    let mut sound = slack.is_positive();
    let sum: BigRational = atom_weights.iter().fold(BigRational::zero(), |a, w| a + w);
    sound &= sum.is_one();
    if require_positive_atoms {
        for w in &atom_weights {
            sound &= w >= &slack;
        }
    } else {
        for w in &atom_weights {
            sound &= !w.is_negative();
        }
    }
    for a in 0..algebra.event_count() {
        for b in 0..algebra.event_count() {
            sound &= rel.holds(a, b) == (event_values[a] >= event_values[b]);
        }
    }
    if !sound {
        return Err(Error::Internal(
            "measure witness failed exact re-verification".to_string(),
        ));
    }
    Ok(QualitativeOutcome::Witness(MeasureWitness {
        atom_weights,
        event_values,
        slack,
    }))
}
