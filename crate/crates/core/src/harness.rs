//! Randomized verification of the S-norm / T-norm laws and of De Morgan duality.
//!
//! Every trial draws its operands from its own ChaCha stream keyed by `(seed, law, trial)`,
//! so a report is reproducible from the seed alone and independent of trial order.

use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alm::{cog_merge, WeightedPoint};
use crate::extended::{
    check_demorgan_extended, complement_sm, ext_thicken, ext_thin, NeutralElements, SizeOrder,
};
use crate::morphology::{check_duality, BinaryImage, MaskOctet};
use crate::string_matrix::{left, Layer, StringMatrix, Symbol};

/// Counterexamples kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 5;

pub type TrialRng = ChaCha8Rng;

pub fn trial_rng(seed: u64, law: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((law << 40) | trial);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Commutativity,
    Monotony,
    Associativity,
    NeutralityOfZero,
    NeutralityOfOne,
    ThinningDuality,
    ExtendedDuality,
    ConstantBranchDuality,
}

impl Law {
    fn stream(self) -> u64 {
        self as u64
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Law::Commutativity => "commutativity",
            Law::Monotony => "monotony",
            Law::Associativity => "associativity",
            Law::NeutralityOfZero => "neutrality-of-zero",
            Law::NeutralityOfOne => "neutrality-of-one",
            Law::ThinningDuality => "thinning-duality",
            Law::ExtendedDuality => "extended-duality",
            Law::ConstantBranchDuality => "constant-branch-duality",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    /// Operands in their text formats.
    pub operands: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub subject: String,
    pub law: Law,
    pub trials: usize,
    pub passes: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl AxiomReport {
    fn new(subject: impl Into<String>, law: Law) -> Self {
        AxiomReport {
            subject: subject.into(),
            law,
            trials: 0,
            passes: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, trial: usize, outcome: std::result::Result<(), Counterexample>) {
        self.trials += 1;
        match outcome {
            Ok(()) => self.passes += 1,
            Err(mut cx) => {
                if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                    cx.trial = trial;
                    self.counterexamples.push(cx);
                }
            }
        }
    }

    pub fn all_pass(&self) -> bool {
        self.passes == self.trials
    }

    pub fn pass_rate(&self) -> f64 {
        if self.trials == 0 {
            return 1.0;
        }
        self.passes as f64 / self.trials as f64
    }

    pub fn line(&self) -> String {
        format!(
            "{} {}: {}/{} passed ({:.1}%){}",
            self.subject,
            self.law,
            self.passes,
            self.trials,
            100.0 * self.pass_rate(),
            if self.all_pass() { "" } else { " FAIL" }
        )
    }

    /// The report line followed by every stored counterexample, verbatim.
    pub fn to_text(&self) -> String {
        let mut out = self.line();
        out.push('\n');
        for cx in &self.counterexamples {
            out.push_str(&format!("  trial {}: {}\n", cx.trial, cx.detail));
            for (i, op) in cx.operands.iter().enumerate() {
                out.push_str(&format!("  operand {i}:\n"));
                for l in op.lines() {
                    out.push_str(&format!("    {l}\n"));
                }
            }
        }
        out
    }
}

pub fn reports_to_json(reports: &[AxiomReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// Relative placement of `c` against `a < b`, the five cases of a size-monotony proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeSituation {
    /// c < a < b
    BelowBoth,
    /// c = a < b
    EqualsSmaller,
    /// a < c < b
    Between,
    /// a < b = c
    EqualsLarger,
    /// a < b < c
    AboveBoth,
}

impl SizeSituation {
    pub const ALL: [SizeSituation; 5] = [
        SizeSituation::BelowBoth,
        SizeSituation::EqualsSmaller,
        SizeSituation::Between,
        SizeSituation::EqualsLarger,
        SizeSituation::AboveBoth,
    ];

    /// Sizes `(a, b, c)` built from three ascending distinct sizes `lo < mid < hi`.
    fn arrange(self, lo: usize, mid: usize, hi: usize) -> (usize, usize, usize) {
        match self {
            SizeSituation::BelowBoth => (mid, hi, lo),
            SizeSituation::EqualsSmaller => (lo, mid, lo),
            SizeSituation::Between => (lo, hi, mid),
            SizeSituation::EqualsLarger => (lo, mid, mid),
            SizeSituation::AboveBoth => (lo, mid, hi),
        }
    }
}

/// An operator together with its operand generator and the comparisons its laws use.
pub trait NormSubject {
    type Value: Clone + fmt::Display;

    fn name(&self) -> String;
    fn apply(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sample(&self, rng: &mut TrialRng) -> Self::Value;
    /// Draws `(a, b, c)` with `a < b` and `c` placed per `situation`.
    fn sample_situation(
        &self,
        situation: SizeSituation,
        rng: &mut TrialRng,
    ) -> (Self::Value, Self::Value, Self::Value);
    /// The order monotony is stated in.
    fn le(&self, x: &Self::Value, y: &Self::Value) -> bool;
    /// Equality used for commutativity.
    fn commute_eq(&self, x: &Self::Value, y: &Self::Value) -> bool;
    /// Equality used for associativity; `Err` explains the mismatch.
    fn assoc_eq(&self, x: &Self::Value, y: &Self::Value) -> std::result::Result<(), String>;
    /// Whether `result = op(a, neutral)` counts as `a`.
    fn neutral_eq(&self, a: &Self::Value, result: &Self::Value) -> bool;
    /// Whether `neutral` is a legitimate partner for `a`.
    fn neutral_applies(&self, _a: &Self::Value, _neutral: &Self::Value) -> bool {
        true
    }
    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
}

fn cx<V: fmt::Display>(operands: &[&V], detail: String) -> Counterexample {
    Counterexample {
        trial: 0,
        operands: operands.iter().map(|v| v.to_string()).collect(),
        detail,
    }
}

/// Runs commutativity, monotony, associativity and neutrality of `neutral`.
pub fn check_laws<S: NormSubject>(
    subject: &S,
    neutral: &S::Value,
    neutral_law: Law,
    trials: usize,
    seed: u64,
) -> Vec<AxiomReport> {
    assert!(trials >= 1, "trials must be at least 1");
    let name = subject.name();

    let mut commutativity = AxiomReport::new(&name, Law::Commutativity);
    for t in 0..trials {
        let mut rng = trial_rng(seed, Law::Commutativity.stream(), t as u64);
        let (a, b) = (subject.sample(&mut rng), subject.sample(&mut rng));
        let (ab, ba) = (subject.apply(&a, &b), subject.apply(&b, &a));
        let outcome = if subject.commute_eq(&ab, &ba) {
            Ok(())
        } else {
            Err(cx(&[&a, &b], format!("op(a,b) =\n{ab}op(b,a) =\n{ba}")))
        };
        commutativity.record(t, outcome);
    }

    let mut monotony = AxiomReport::new(&name, Law::Monotony);
    for t in 0..trials {
        let mut rng = trial_rng(seed, Law::Monotony.stream(), t as u64);
        let situation = SizeSituation::ALL[t % SizeSituation::ALL.len()];
        let (a, b, c) = subject.sample_situation(situation, &mut rng);
        let (ac, bc) = (subject.apply(&a, &c), subject.apply(&b, &c));
        let outcome = if !subject.le(&a, &b) || subject.le(&ac, &bc) {
            Ok(())
        } else {
            Err(cx(
                &[&a, &b, &c],
                format!("{situation:?}: op(a,c) not <= op(b,c)"),
            ))
        };
        monotony.record(t, outcome);
    }

    let mut associativity = AxiomReport::new(&name, Law::Associativity);
    for t in 0..trials {
        let mut rng = trial_rng(seed, Law::Associativity.stream(), t as u64);
        let a = subject.sample(&mut rng);
        let b = subject.sample(&mut rng);
        let c = subject.sample(&mut rng);
        let lhs = subject.apply(&a, &subject.apply(&b, &c));
        let rhs = subject.apply(&subject.apply(&a, &b), &c);
        let outcome = subject.assoc_eq(&lhs, &rhs).map_err(|why| {
            cx(
                &[&a, &b, &c],
                format!("{why}\nop(a,op(b,c)) =\n{lhs}op(op(a,b),c) =\n{rhs}"),
            )
        });
        associativity.record(t, outcome);
    }

    let mut neutrality = AxiomReport::new(&name, neutral_law);
    for t in 0..trials {
        let mut rng = trial_rng(seed, neutral_law.stream(), t as u64);
        let a = loop {
            let a = subject.sample(&mut rng);
            if subject.neutral_applies(&a, neutral) {
                break a;
            }
        };
        let r = subject.apply(&a, neutral);
        let outcome = if subject.neutral_eq(&a, &r) {
            Ok(())
        } else {
            Err(cx(&[&a, neutral], format!("op(a, neutral) =\n{r}")))
        };
        neutrality.record(t, outcome);
    }

    vec![commutativity, monotony, associativity, neutrality]
}

/// The four S-norm laws with the subject's zero as neutral element.
pub fn check_snorm<S: NormSubject>(subject: &S, trials: usize, seed: u64) -> Vec<AxiomReport> {
    check_laws(
        subject,
        &subject.zero(),
        Law::NeutralityOfZero,
        trials,
        seed,
    )
}

/// The four T-norm laws with the subject's one as neutral element.
pub fn check_tnorm<S: NormSubject>(subject: &S, trials: usize, seed: u64) -> Vec<AxiomReport> {
    check_laws(subject, &subject.one(), Law::NeutralityOfOne, trials, seed)
}

/// Random depth-1 string matrices with sizes uniform in `min_size..=max_size`.
#[derive(Debug, Clone, Copy)]
pub struct MatrixGenerator {
    pub min_size: usize,
    pub max_size: usize,
    pub p_one: f64,
}

impl Default for MatrixGenerator {
    fn default() -> Self {
        MatrixGenerator {
            min_size: 1,
            max_size: 9,
            p_one: 0.5,
        }
    }
}

impl MatrixGenerator {
    pub fn of_size(&self, size: usize, rng: &mut TrialRng) -> StringMatrix {
        let cells = (0..size * size)
            .map(|_| Symbol::from_bit(rng.random_bool(self.p_one)))
            .collect();
        Layer::new(size, cells)
            .expect("positive size")
            .into_matrix()
    }

    pub fn sample(&self, rng: &mut TrialRng) -> StringMatrix {
        let size = rng.random_range(self.min_size..=self.max_size);
        self.of_size(size, rng)
    }

    /// Two matrices of different sizes.
    pub fn sample_unequal_pair(&self, rng: &mut TrialRng) -> (StringMatrix, StringMatrix) {
        let [s, t] = self.distinct_sizes::<2>(rng);
        let (s, t) = if rng.random_bool(0.5) { (s, t) } else { (t, s) };
        (self.of_size(s, rng), self.of_size(t, rng))
    }

    /// `N` distinct sizes in ascending order.
    fn distinct_sizes<const N: usize>(&self, rng: &mut TrialRng) -> [usize; N] {
        let span = self.max_size - self.min_size + 1;
        assert!(span >= N, "size range too narrow for {N} distinct sizes");
        let mut picked: Vec<usize> = sample(rng, span, N)
            .into_iter()
            .map(|i| i + self.min_size)
            .collect();
        picked.sort_unstable();
        picked.try_into().expect("N sizes")
    }

    pub fn sample_situation(
        &self,
        situation: SizeSituation,
        rng: &mut TrialRng,
    ) -> (StringMatrix, StringMatrix, StringMatrix) {
        let [lo, mid, hi] = self.distinct_sizes::<3>(rng);
        let (a, b, c) = situation.arrange(lo, mid, hi);
        (
            self.of_size(a, rng),
            self.of_size(b, rng),
            self.of_size(c, rng),
        )
    }
}

/// Numeric layer equal and history layers equal as multisets.
fn same_left_and_history(x: &StringMatrix, y: &StringMatrix) -> std::result::Result<(), String> {
    if left(x) != left(y) {
        return Err("numeric layers differ".into());
    }
    let history = |m: &StringMatrix| {
        let mut h: Vec<Layer> = m.layers()[1..].to_vec();
        h.sort();
        h
    };
    if history(x) != history(y) {
        return Err(format!(
            "history layers differ ({} vs {} layers)",
            x.depth() - 1,
            y.depth() - 1
        ));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtendedKind {
    Thin,
    Thicken,
}

/// Extended Thinning or Thickening on generated depth-1 matrices.
#[derive(Debug, Clone, Copy)]
pub struct ExtendedSubject {
    pub kind: ExtendedKind,
    pub generator: MatrixGenerator,
}

impl ExtendedSubject {
    pub fn thin() -> Self {
        ExtendedSubject {
            kind: ExtendedKind::Thin,
            generator: MatrixGenerator::default(),
        }
    }

    pub fn thicken() -> Self {
        ExtendedSubject {
            kind: ExtendedKind::Thicken,
            generator: MatrixGenerator::default(),
        }
    }
}

impl NormSubject for ExtendedSubject {
    type Value = StringMatrix;

    fn name(&self) -> String {
        match self.kind {
            ExtendedKind::Thin => "ext-thin".into(),
            ExtendedKind::Thicken => "ext-thicken".into(),
        }
    }

    fn apply(&self, a: &StringMatrix, b: &StringMatrix) -> StringMatrix {
        match self.kind {
            ExtendedKind::Thin => ext_thin(a, b),
            ExtendedKind::Thicken => ext_thicken(a, b),
        }
    }

    fn sample(&self, rng: &mut TrialRng) -> StringMatrix {
        self.generator.sample(rng)
    }

    fn sample_situation(
        &self,
        situation: SizeSituation,
        rng: &mut TrialRng,
    ) -> (StringMatrix, StringMatrix, StringMatrix) {
        self.generator.sample_situation(situation, rng)
    }

    fn le(&self, x: &StringMatrix, y: &StringMatrix) -> bool {
        SizeOrder::le(x, y)
    }

    fn commute_eq(&self, x: &StringMatrix, y: &StringMatrix) -> bool {
        x == y
    }

    fn assoc_eq(&self, x: &StringMatrix, y: &StringMatrix) -> std::result::Result<(), String> {
        same_left_and_history(x, y)
    }

    fn neutral_eq(&self, a: &StringMatrix, result: &StringMatrix) -> bool {
        left(result) == left(a)
    }

    /// The neutral element acts as a structuring element, so it must be strictly smaller
    /// than its partner.
    fn neutral_applies(&self, a: &StringMatrix, neutral: &StringMatrix) -> bool {
        a.size() > neutral.size()
    }

    fn zero(&self) -> StringMatrix {
        NeutralElements::zero()
    }

    fn one(&self) -> StringMatrix {
        NeutralElements::one()
    }
}

/// Wraps a subject and swaps its neutral elements; a negative control for the harness.
pub struct SwappedNeutrals<S>(pub S);

impl<S: NormSubject> NormSubject for SwappedNeutrals<S> {
    type Value = S::Value;

    fn name(&self) -> String {
        format!("{}(swapped-neutrals)", self.0.name())
    }
    fn apply(&self, a: &S::Value, b: &S::Value) -> S::Value {
        self.0.apply(a, b)
    }
    fn sample(&self, rng: &mut TrialRng) -> S::Value {
        self.0.sample(rng)
    }
    fn sample_situation(
        &self,
        situation: SizeSituation,
        rng: &mut TrialRng,
    ) -> (S::Value, S::Value, S::Value) {
        self.0.sample_situation(situation, rng)
    }
    fn le(&self, x: &S::Value, y: &S::Value) -> bool {
        self.0.le(x, y)
    }
    fn commute_eq(&self, x: &S::Value, y: &S::Value) -> bool {
        self.0.commute_eq(x, y)
    }
    fn assoc_eq(&self, x: &S::Value, y: &S::Value) -> std::result::Result<(), String> {
        self.0.assoc_eq(x, y)
    }
    fn neutral_eq(&self, a: &S::Value, result: &S::Value) -> bool {
        self.0.neutral_eq(a, result)
    }
    fn neutral_applies(&self, a: &S::Value, neutral: &S::Value) -> bool {
        self.0.neutral_applies(a, neutral)
    }
    fn zero(&self) -> S::Value {
        self.0.one()
    }
    fn one(&self) -> S::Value {
        self.0.zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Max,
    Min,
}

/// Reference max / min on depth-1 matrices, totally ordered by size and then contents.
#[derive(Debug, Clone, Copy)]
pub struct MinMaxSubject {
    pub extremum: Extremum,
    pub generator: MatrixGenerator,
}

impl MinMaxSubject {
    pub fn max() -> Self {
        MinMaxSubject {
            extremum: Extremum::Max,
            generator: MatrixGenerator::default(),
        }
    }

    pub fn min() -> Self {
        MinMaxSubject {
            extremum: Extremum::Min,
            generator: MatrixGenerator::default(),
        }
    }

    fn key(m: &StringMatrix) -> (usize, &[Layer]) {
        (m.size(), m.layers())
    }
}

impl NormSubject for MinMaxSubject {
    type Value = StringMatrix;

    fn name(&self) -> String {
        match self.extremum {
            Extremum::Max => "max-by-size".into(),
            Extremum::Min => "min-by-size".into(),
        }
    }

    fn apply(&self, a: &StringMatrix, b: &StringMatrix) -> StringMatrix {
        let a_wins = match self.extremum {
            Extremum::Max => Self::key(a) >= Self::key(b),
            Extremum::Min => Self::key(a) <= Self::key(b),
        };
        if a_wins {
            a.clone()
        } else {
            b.clone()
        }
    }

    fn sample(&self, rng: &mut TrialRng) -> StringMatrix {
        self.generator.sample(rng)
    }

    fn sample_situation(
        &self,
        situation: SizeSituation,
        rng: &mut TrialRng,
    ) -> (StringMatrix, StringMatrix, StringMatrix) {
        self.generator.sample_situation(situation, rng)
    }

    fn le(&self, x: &StringMatrix, y: &StringMatrix) -> bool {
        SizeOrder::le(x, y)
    }

    fn commute_eq(&self, x: &StringMatrix, y: &StringMatrix) -> bool {
        x == y
    }

    fn assoc_eq(&self, x: &StringMatrix, y: &StringMatrix) -> std::result::Result<(), String> {
        same_left_and_history(x, y)
    }

    fn neutral_eq(&self, a: &StringMatrix, result: &StringMatrix) -> bool {
        left(result) == left(a)
    }

    /// Bottom of the order: the 1x1 `[0]`.
    fn zero(&self) -> StringMatrix {
        NeutralElements::zero()
    }

    /// Top of the generated universe: the all-`1` matrix of the largest size.
    fn one(&self) -> StringMatrix {
        StringMatrix::constant(self.generator.max_size, Symbol::One)
    }
}

/// Pairwise center-of-gravity merging on points of one column.
#[derive(Debug, Clone, Copy)]
pub struct CogSubject {
    /// Carry accumulated weights between merges; otherwise every merge sees unit weights.
    pub carry_weights: bool,
}

impl CogSubject {
    const TOLERANCE: f64 = 1e-9;

    fn point(rng: &mut TrialRng) -> WeightedPoint {
        WeightedPoint::new(rng.random_range(0..64) as f64, 1.0)
    }

    fn close(x: &WeightedPoint, y: &WeightedPoint) -> bool {
        (x.y - y.y).abs() <= Self::TOLERANCE * (1.0 + x.y.abs())
            && (x.weight - y.weight).abs() <= Self::TOLERANCE * (1.0 + x.weight.abs())
    }
}

impl NormSubject for CogSubject {
    type Value = WeightedPoint;

    fn name(&self) -> String {
        if self.carry_weights {
            "cog(weighted)".into()
        } else {
            "cog".into()
        }
    }

    fn apply(&self, a: &WeightedPoint, b: &WeightedPoint) -> WeightedPoint {
        if self.carry_weights {
            cog_merge(*a, *b).unwrap_or(*a)
        } else {
            let unit = |p: &WeightedPoint| WeightedPoint::new(p.y, 1.0);
            let merged = cog_merge(unit(a), unit(b)).expect("unit weights");
            WeightedPoint::new(merged.y, 1.0)
        }
    }

    fn sample(&self, rng: &mut TrialRng) -> WeightedPoint {
        Self::point(rng)
    }

    fn sample_situation(
        &self,
        situation: SizeSituation,
        rng: &mut TrialRng,
    ) -> (WeightedPoint, WeightedPoint, WeightedPoint) {
        let mut ys = sample(rng, 64, 3).into_vec();
        ys.sort_unstable();
        let (a, b, c) = situation.arrange(ys[0], ys[1], ys[2]);
        let point = |y: usize| WeightedPoint::new(y as f64, 1.0);
        (point(a), point(b), point(c))
    }

    fn le(&self, x: &WeightedPoint, y: &WeightedPoint) -> bool {
        x.y <= y.y + Self::TOLERANCE
    }

    fn commute_eq(&self, x: &WeightedPoint, y: &WeightedPoint) -> bool {
        Self::close(x, y)
    }

    fn assoc_eq(&self, x: &WeightedPoint, y: &WeightedPoint) -> std::result::Result<(), String> {
        if Self::close(x, y) {
            Ok(())
        } else {
            Err(format!("delegates differ: {} vs {}", x.y, y.y))
        }
    }

    fn neutral_eq(&self, a: &WeightedPoint, result: &WeightedPoint) -> bool {
        Self::close(a, result)
    }

    fn zero(&self) -> WeightedPoint {
        WeightedPoint::new(0.0, 0.0)
    }

    fn one(&self) -> WeightedPoint {
        WeightedPoint::new(0.0, 0.0)
    }
}

/// Classical duality on random `size x size` images against every mask of `octet`; one
/// trial per (image, mask) pair.
pub fn check_thinning_duality(
    octet: &MaskOctet,
    images: usize,
    size: usize,
    seed: u64,
) -> AxiomReport {
    let mut report = AxiomReport::new("thinning/thickening", Law::ThinningDuality);
    let mut trial = 0;
    for i in 0..images {
        let mut rng = trial_rng(seed, Law::ThinningDuality.stream(), i as u64);
        let cells = (0..size * size).map(|_| rng.random_bool(0.5)).collect();
        let img = BinaryImage::from_cells(size, size, cells).expect("positive size");
        for mask in octet.masks() {
            let outcome = match check_duality(&img, mask) {
                (true, true) => Ok(()),
                pair => Err(Counterexample {
                    trial: 0,
                    operands: vec![img.to_pgm(), mask.to_text()],
                    detail: format!("duality results {pair:?}"),
                }),
            };
            report.record(trial, outcome);
            trial += 1;
        }
    }
    report
}

/// Extended De Morgan on random unequal-size pairs, plus the equal-size constant branch.
pub fn check_extended_duality(
    generator: &MatrixGenerator,
    trials: usize,
    seed: u64,
) -> Vec<AxiomReport> {
    let mut unequal = AxiomReport::new("ext-thin/ext-thicken", Law::ExtendedDuality);
    for t in 0..trials {
        let mut rng = trial_rng(seed, Law::ExtendedDuality.stream(), t as u64);
        let (a, b) = generator.sample_unequal_pair(&mut rng);
        let outcome = match check_demorgan_extended(&a, &b) {
            (true, true) => Ok(()),
            pair => Err(cx(&[&a, &b], format!("duality results {pair:?}"))),
        };
        unequal.record(t, outcome);
    }

    let mut constant = AxiomReport::new("ext-thin/ext-thicken", Law::ConstantBranchDuality);
    for t in 0..trials {
        let mut rng = trial_rng(seed, Law::ConstantBranchDuality.stream(), t as u64);
        let a = generator.sample(&mut rng);
        let b = generator.of_size(a.size(), &mut rng);
        let ok = complement_sm(&ext_thin(&a, &b)) == ext_thicken(&a, &b)
            && complement_sm(&ext_thicken(&a, &b)) == ext_thin(&a, &b)
            && check_demorgan_extended(&a, &b) == (true, true);
        let outcome = if ok {
            Ok(())
        } else {
            Err(cx(&[&a, &b], "constant branch is not self-dual".into()))
        };
        constant.record(t, outcome);
    }
    vec![unequal, constant]
}
