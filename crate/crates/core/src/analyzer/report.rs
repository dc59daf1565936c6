use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    JohnConstant,
    DiamOverDist,
    DecayExponent,
    HolderFit,
    DiamRatioFit,
    LimsupA,
    LimsupB,
    SupCorollary,
    LemmaD,
    SchwarzPick,
    DilatationSandwich,
    DilatationBound,
}

impl Quantity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Quantity::JohnConstant => "john_constant",
            Quantity::DiamOverDist => "diam_over_dist",
            Quantity::DecayExponent => "decay_exponent",
            Quantity::HolderFit => "holder_fit",
            Quantity::DiamRatioFit => "diam_ratio_fit",
            Quantity::LimsupA => "limsup_a",
            Quantity::LimsupB => "limsup_b",
            Quantity::SupCorollary => "sup_corollary",
            Quantity::LemmaD => "lemma_d",
            Quantity::SchwarzPick => "schwarz_pick",
            Quantity::DilatationSandwich => "dilatation_sandwich",
            Quantity::DilatationBound => "dilatation_bound",
        }
    }

    /// Inequalities valid for every map of the class, as opposed to
    /// one-directional sufficient criteria.
    pub fn is_unconditional(&self) -> bool {
        matches!(
            self,
            Quantity::LemmaD | Quantity::SchwarzPick | Quantity::DilatationSandwich | Quantity::DilatationBound
        )
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    SufficientConditionMet,
    Inconclusive,
    Violated,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::SufficientConditionMet => "sufficient_condition_met",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Violated => "violated",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ReportValue {
    Scalar(f64),
    /// `(C, delta)` of a fitted envelope.
    Pair(f64, f64),
}

impl ReportValue {
    pub fn scalar(&self) -> Option<f64> {
        match *self {
            ReportValue::Scalar(v) => Some(v),
            ReportValue::Pair(..) => None,
        }
    }
}

/// Result of one analysis run.
#[derive(Clone, Debug, PartialEq)]
pub struct CriterionReport {
    pub map_name: String,
    pub quantity: Quantity,
    pub value: ReportValue,
    pub verdict: Verdict,
    /// Threshold the value was compared against, when there is one.
    pub threshold: Option<f64>,
    /// Grid sizes, radii and constants used, in insertion order.
    pub parameters: Vec<(String, String)>,
    /// Per-radius curve behind the value, e.g. `(r, M(r))`.
    pub curve: Vec<(f64, f64)>,
    pub warnings: Vec<String>,
}

impl CriterionReport {
    pub(crate) fn new(map_name: &str, quantity: Quantity, value: ReportValue, verdict: Verdict) -> Self {
        debug_assert!(quantity.is_unconditional() || verdict != Verdict::Violated);
        Self {
            map_name: map_name.to_string(),
            quantity,
            value,
            verdict,
            threshold: None,
            parameters: Vec::new(),
            curve: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.push((key.to_string(), value.to_string()));
        self
    }

    pub fn parameter(&self, key: &str) -> Option<&str> {
        self.parameters.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}
