//! Evaluation results shared by the G-function, quadrature, and series
//! engines.

/// How a value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Mellin-Barnes contour quadrature.
    Contour,
    /// Residue series over the right pole family (three 1F2-type sums).
    ResidueSeries,
    /// Analytic limit / small-argument expansion.
    Limit,
    /// Direct numerical integration on the real axis.
    Quadrature,
    /// Series composition of G-function terms.
    Series,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Contour => "contour",
            Method::ResidueSeries => "residue-series",
            Method::Limit => "limit",
            Method::Quadrature => "quadrature",
            Method::Series => "series",
        }
    }
}

/// Work counters carried alongside every value.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Work {
    /// Series terms consumed (including inner hypergeometric terms).
    pub terms: u64,
    /// Quadrature panels evaluated (real-axis or contour).
    pub panels: u64,
}

impl Work {
    pub fn merge(self, other: Work) -> Work {
        Work {
            terms: self.terms + other.terms,
            panels: self.panels + other.panels,
        }
    }
}

/// A numeric value with an absolute error estimate and provenance.
#[derive(Debug, Clone, Copy)]
pub struct EvaluationResult {
    pub value: f64,
    /// Estimated absolute error; always non-negative.
    pub abs_err_est: f64,
    pub method: Method,
    pub work: Work,
    /// Set when intermediate partial sums exceeded `1e8` times the result,
    /// signalling digit loss from cancellation.
    pub cancellation_warning: bool,
}

impl EvaluationResult {
    pub fn new(value: f64, abs_err_est: f64, method: Method, work: Work) -> Self {
        EvaluationResult {
            value,
            abs_err_est: abs_err_est.abs(),
            method,
            work,
            cancellation_warning: false,
        }
    }

    pub fn with_cancellation_warning(mut self, warn: bool) -> Self {
        self.cancellation_warning = warn;
        self
    }
}
