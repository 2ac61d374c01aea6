//! Machine-readable reports. Field order is fixed by the struct layout, and
//! every float goes through [`Decimal`], so equal inputs give equal bytes.

use std::fmt::Write as _;

use prodbasis::boundent::{PptCheck, RangeReport};
use prodbasis::constructions::ProductState;
use prodbasis::verification::VerificationReport;
use prodbasis::winding::WindingMove;
use prodbasis::ComplexMatrix;
use serde::{Deserialize, Serialize};

use crate::basis_file::MoveRecord;
use crate::decimal::{amplitude, Amplitude, Decimal};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub a: Vec<Amplitude>,
    pub b: Vec<Amplitude>,
}

impl Witness {
    fn from_state(s: &ProductState) -> Self {
        Self {
            a: s.a.entries().iter().copied().map(amplitude).collect(),
            b: s.b.entries().iter().copied().map(amplitude).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub dims: [usize; 2],
    pub family: String,
    pub states: usize,
    pub gram_max_offdiag: Decimal,
    pub gram_max_diag_error: Decimal,
    pub span_rank: usize,
    pub complement_dim: usize,
    pub max_product_overlap: Decimal,
    pub upb_margin: Decimal,
    pub verdict: String,
    pub restarts: usize,
    pub restarts_used: usize,
    pub iterations_total: usize,
    pub seed: u64,
    pub witness: Option<Witness>,
}

impl VerifyReport {
    pub fn new(
        family: &str,
        report: &VerificationReport,
        restarts: usize,
        upb_margin: f64,
    ) -> Self {
        Self {
            dims: [report.d_a, report.d_b],
            family: family.to_owned(),
            states: report.states,
            gram_max_offdiag: Decimal(report.gram_max_offdiag),
            gram_max_diag_error: Decimal(report.gram_max_diag_error),
            span_rank: report.span_rank,
            complement_dim: report.complement_dim,
            max_product_overlap: Decimal(report.max_product_overlap),
            upb_margin: Decimal(upb_margin),
            verdict: report.verdict.as_str().to_owned(),
            restarts,
            restarts_used: report.restarts_used,
            iterations_total: report.iterations_total,
            seed: report.seed,
            witness: report.witness_state.as_ref().map(Witness::from_state),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "dims                 {}x{}",
            self.dims[0], self.dims[1]
        );
        let _ = writeln!(out, "family               {}", self.family);
        let _ = writeln!(out, "states               {}", self.states);
        let _ = writeln!(out, "gram max offdiag     {:.3e}", self.gram_max_offdiag.0);
        let _ = writeln!(
            out,
            "gram max diag error  {:.3e}",
            self.gram_max_diag_error.0
        );
        let _ = writeln!(out, "span rank            {}", self.span_rank);
        let _ = writeln!(out, "complement dim       {}", self.complement_dim);
        if self.complement_dim > 0 {
            let _ = writeln!(
                out,
                "max product overlap  {}",
                self.max_product_overlap.to_text()
            );
            let _ = writeln!(
                out,
                "restarts             {} (seed {})",
                self.restarts_used, self.seed
            );
            let _ = writeln!(out, "iterations           {}", self.iterations_total);
        }
        let _ = writeln!(out, "verdict              {}", self.verdict);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundentReport {
    pub dims: [usize; 2],
    pub states: usize,
    pub upb_max_product_overlap: Decimal,
    pub trace: Decimal,
    pub rank: usize,
    pub min_pt_eigenvalue: Decimal,
    pub ppt: bool,
    pub range_max_product_overlap: Decimal,
    pub range_verdict: String,
    pub seed: u64,
}

impl BoundentReport {
    pub fn new(upb: &VerificationReport, trace: f64, ppt: &PptCheck, range: &RangeReport) -> Self {
        Self {
            dims: [upb.d_a, upb.d_b],
            states: upb.states,
            upb_max_product_overlap: Decimal(upb.max_product_overlap),
            trace: Decimal(trace),
            rank: range.rank,
            min_pt_eigenvalue: Decimal(ppt.min_pt_eigenvalue),
            ppt: ppt.ppt,
            range_max_product_overlap: Decimal(range.max_product_overlap),
            range_verdict: range.verdict.as_str().to_owned(),
            seed: upb.seed,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "dims                       {}x{}",
            self.dims[0], self.dims[1]
        );
        let _ = writeln!(out, "basis states               {}", self.states);
        let _ = writeln!(out, "trace                      {:.12}", self.trace.0);
        let _ = writeln!(out, "rank                       {}", self.rank);
        let _ = writeln!(
            out,
            "min partial-transpose eig  {:.6e}",
            self.min_pt_eigenvalue.0
        );
        let _ = writeln!(out, "ppt                        {}", self.ppt);
        let _ = writeln!(
            out,
            "range max product overlap  {}",
            self.range_max_product_overlap.to_text()
        );
        let _ = writeln!(out, "range verdict              {}", self.range_verdict);
        out
    }
}

/// A density operator on disk, rows of `[re, im]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityFile {
    pub format_version: u32,
    pub dims: [usize; 2],
    pub matrix: Vec<Vec<Amplitude>>,
}

impl DensityFile {
    pub fn new(m: &ComplexMatrix, d_a: usize, d_b: usize) -> Self {
        Self {
            format_version: crate::basis_file::FORMAT_VERSION,
            dims: [d_a, d_b],
            matrix: m
                .data()
                .chunks(m.cols())
                .map(|r| r.iter().copied().map(amplitude).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MoveSummary {
    /// Dimensions of the two local subspaces.
    pub split_dims: [usize; 2],
    #[serde(flatten)]
    pub mv: MoveRecord,
}

impl MoveSummary {
    pub fn new(mv: &WindingMove) -> Self {
        Self {
            split_dims: [mv.split.dim_a(), mv.split.dim_b()],
            mv: MoveRecord::from_move(mv),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnwindReport {
    pub dims: [usize; 2],
    pub depth: usize,
    pub found: bool,
    pub certified: bool,
    pub moves: Vec<MoveSummary>,
}

impl UnwindReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.found {
            let _ = writeln!(out, "not unwound within depth {}", self.depth);
            return out;
        }
        let _ = writeln!(
            out,
            "certified unwinding sequence: {} move(s)",
            self.moves.len()
        );
        for (i, mv) in self.moves.iter().enumerate() {
            let _ = writeln!(
                out,
                "  move {}: split dims A' {} B' {}",
                i + 1,
                mv.split_dims[0],
                mv.split_dims[1]
            );
        }
        let _ = writeln!(out, "final basis is Cartesian: {}", self.certified);
        out
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    crate::json::to_pretty(value).expect("report values are finite")
}
