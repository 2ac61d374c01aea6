//! One function per subcommand. Each returns the exit code or a [`CliError`].

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use prodbasis::boundent::{is_ppt, range_criterion_report, upb_density_state};
use prodbasis::constructions::{cartesian_basis, gen_tiles1, gen_tiles2, ProductBasis};
use prodbasis::sampling::stream_rng;
use prodbasis::verification::{check_upb, SeesawOptions, UpbConfig, Verdict};
use prodbasis::winding::{apply_winding_move, is_cartesian, unwind as unwind_basis, wind_randomly};
use prodbasis::{Error, Tolerances};

use crate::basis_file::{load_basis, BasisFile, LoadError};
use crate::render::render as render_basis;
use crate::report::{
    to_json, BoundentReport, DensityFile, MoveSummary, UnwindReport, VerifyReport,
};
use crate::{
    exit, BoundentArgs, ConstructArgs, FamilyArg, Format, RenderArgs, SearchArgs, UnwindArgs,
    VerifyArgs, WindArgs,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<prodbasis::Error> for CliError {
    fn from(e: prodbasis::Error) -> Self {
        let code = match e {
            Error::IncompleteBasis { .. } => exit::INCOMPLETE_BASIS,
            _ => exit::FAILURE,
        };
        Self::new(code, e.to_string())
    }
}

impl From<LoadError> for CliError {
    fn from(e: LoadError) -> Self {
        Self::new(exit::FAILURE, e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self::new(exit::FAILURE, e.to_string())
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| {
        CliError::new(
            exit::FAILURE,
            format!("cannot write {}: {e}", path.display()),
        )
    })
}

/// Writes the basis to `path`, or to `out` when no path is given. Returns
/// where the human summary should go.
fn emit_basis<'a>(
    basis: &ProductBasis,
    path: Option<&Path>,
    out: &'a mut dyn Write,
    diag: &'a mut dyn Write,
) -> Result<&'a mut dyn Write, CliError> {
    let text = BasisFile::from_basis(basis).to_json();
    match path {
        Some(path) => {
            write_file(path, &text)?;
            Ok(out)
        }
        None => {
            out.write_all(text.as_bytes())?;
            Ok(diag)
        }
    }
}

fn seesaw_options(search: &SearchArgs) -> SeesawOptions {
    SeesawOptions {
        restarts: search.restarts,
        seed: search.seed,
        ..SeesawOptions::default()
    }
}

pub fn construct(
    args: &ConstructArgs,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> Result<u8, CliError> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| {
            CliError::new(
                exit::INVALID_DIMENSION,
                format!("--{flag} is required for this family"),
            )
        })
    };
    let built = match args.family {
        FamilyArg::Gentiles1 => gen_tiles1(need(args.n, "n")?),
        FamilyArg::Gentiles2 => gen_tiles2(need(args.m, "m")?, need(args.n, "n")?),
        FamilyArg::Cartesian => cartesian_basis(need(args.m, "m")?, need(args.n, "n")?),
    };
    let basis = match built {
        Ok(basis) => basis,
        Err(Error::InvalidDimension(msg)) => {
            return Err(CliError::new(exit::INVALID_DIMENSION, msg))
        }
        Err(e) => return Err(e.into()),
    };
    let summary = emit_basis(&basis, args.out.as_deref(), out, diag)?;
    writeln!(
        summary,
        "{} states on {}x{} ({})",
        basis.len(),
        basis.d_a(),
        basis.d_b(),
        basis.family()
    )?;
    Ok(exit::OK)
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let basis = load_basis(&args.path)?;
    let tolerances = Tolerances {
        upb_margin: args.tol,
        ..Tolerances::DEFAULT
    };
    let config = UpbConfig {
        seesaw: seesaw_options(&args.search),
        tolerances,
    };
    let report = check_upb(&basis, &config)?;
    let shown = VerifyReport::new(
        basis.family().as_str(),
        &report,
        args.search.restarts,
        args.tol,
    );
    match args.format {
        Format::Text => out.write_all(shown.to_text().as_bytes())?,
        Format::Json => out.write_all(to_json(&shown).as_bytes())?,
    }
    Ok(match report.verdict {
        Verdict::UpbNumeric | Verdict::CompleteBasis => exit::OK,
        Verdict::Extendible => exit::EXTENDIBLE,
        Verdict::Inconclusive => exit::INCONCLUSIVE,
    })
}

pub fn render(args: &RenderArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let basis = load_basis(&args.path)?;
    let text = render_basis(&basis).ok_or_else(|| {
        CliError::new(
            exit::FAILURE,
            "no tile metadata: some states lack tile_cells",
        )
    })?;
    out.write_all(text.as_bytes())?;
    Ok(exit::OK)
}

pub fn boundent(
    args: &BoundentArgs,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> Result<u8, CliError> {
    let basis = load_basis(&args.path)?;
    let config = UpbConfig {
        seesaw: seesaw_options(&args.search),
        tolerances: Tolerances::DEFAULT,
    };
    let upb = check_upb(&basis, &config)?;
    if upb.verdict != Verdict::UpbNumeric {
        writeln!(
            diag,
            "basis verdict is {}; the checks need a UPB",
            upb.verdict
        )?;
        return Ok(exit::NOT_UPB);
    }
    let rho = upb_density_state(&basis)?;
    let ppt = is_ppt(&rho, Tolerances::DEFAULT.ppt)?;
    let range = range_criterion_report(&rho, &config.seesaw, &Tolerances::DEFAULT)?;
    let report = BoundentReport::new(&upb, rho.matrix().trace().re, &ppt, &range);
    if let Some(path) = &args.out {
        let file = DensityFile::new(rho.matrix(), rho.d_a(), rho.d_b());
        write_file(path, &to_json(&file))?;
        writeln!(diag, "density matrix written to {}", path.display())?;
    }
    match args.format {
        Format::Text => out.write_all(report.to_text().as_bytes())?,
        Format::Json => out.write_all(to_json(&report).as_bytes())?,
    }
    Ok(exit::OK)
}

pub fn wind(args: &WindArgs, out: &mut dyn Write, diag: &mut dyn Write) -> Result<u8, CliError> {
    let start = match (&args.path, &args.cartesian) {
        (Some(path), _) => load_basis(path)?,
        (None, Some(dims)) => cartesian_basis(dims[0], dims[1])?,
        (None, None) => {
            return Err(CliError::new(
                exit::FAILURE,
                "give a basis file or --cartesian DA DB",
            ))
        }
    };
    let (wound, moves) = wind_randomly(&start, args.moves, &mut stream_rng(args.seed, 0))?;
    let summary = emit_basis(&wound, args.out.as_deref(), out, diag)?;
    writeln!(
        summary,
        "applied {} move(s) to {}x{} (seed {})",
        moves.len(),
        wound.d_a(),
        wound.d_b(),
        args.seed
    )?;
    for (i, mv) in moves.iter().enumerate() {
        writeln!(
            summary,
            "  move {}: split dims A' {} B' {}",
            i + 1,
            mv.split.dim_a(),
            mv.split.dim_b()
        )?;
    }
    Ok(exit::OK)
}

pub fn unwind(
    args: &UnwindArgs,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> Result<u8, CliError> {
    let basis = load_basis(&args.path)?;
    let found = unwind_basis(&basis, args.depth)?;
    let mut report = UnwindReport {
        dims: [basis.d_a(), basis.d_b()],
        depth: args.depth,
        found: found.is_some(),
        certified: false,
        moves: Vec::new(),
    };
    if let Some(path) = &found {
        // Certify once more here, on the basis exactly as loaded.
        let mut replay = basis.clone();
        for mv in path {
            replay = apply_winding_move(&replay, mv)?;
        }
        report.certified = is_cartesian(&replay, Tolerances::DEFAULT.ray)?;
        report.moves = path.iter().map(MoveSummary::new).collect();
        if let Some(target) = &args.out {
            write_file(target, &BasisFile::from_basis(&replay).to_json())?;
            writeln!(diag, "unwound basis written to {}", target.display())?;
        }
    }
    match args.format {
        Format::Text => out.write_all(report.to_text().as_bytes())?,
        Format::Json => out.write_all(to_json(&report).as_bytes())?,
    }
    Ok(match (report.found, report.certified) {
        (true, true) => exit::OK,
        (true, false) => {
            return Err(CliError::new(
                exit::FAILURE,
                "unwinding sequence failed certification",
            ))
        }
        (false, _) => exit::INCONCLUSIVE,
    })
}
