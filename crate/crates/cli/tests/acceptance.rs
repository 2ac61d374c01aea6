//! Acceptance gate: eight criteria, one PASS/FAIL line each.
//!
//! Runs as its own harness so the verdict lines are always printed. The
//! process exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use prodbasis::boundent::{
    is_ppt, range_criterion_report, upb_density_state, DensityMatrix, RangeVerdict,
};
use prodbasis::constructions::{
    cyclic_shift_basis, gen_tiles1, gen_tiles2, Family, ProductBasis, ProductState,
};
use prodbasis::numkernel::kron;
use prodbasis::sampling::{haar_unitary, random_unit_vector, stream_rng, SeededRng};
use prodbasis::verification::{
    basis_set_equal_up_to_phase, check_upb, gram_matrix, grid_oracle_max_product_overlap,
    seesaw_max_product_overlap, SeesawOptions, UpbConfig, Verdict,
};
use prodbasis::winding::{
    apply_winding_move, inverse_move, is_cartesian, random_wound_basis, unwind,
};
use prodbasis::{ComplexMatrix, ComplexVector, Tolerances, C64};
use prodbasis_cli::{load_basis, save_basis, BasisFile};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gram_deviation(basis: &ProductBasis) -> f64 {
    gram_matrix(basis).max_abs_diff(&ComplexMatrix::identity(basis.len()))
}

fn upb_instances() -> Vec<(String, ProductBasis)> {
    vec![
        ("GenTiles1(4)".into(), gen_tiles1(4).unwrap()),
        ("GenTiles1(6)".into(), gen_tiles1(6).unwrap()),
        ("GenTiles2(3,4)".into(), gen_tiles2(3, 4).unwrap()),
        ("GenTiles2(4,4)".into(), gen_tiles2(4, 4).unwrap()),
    ]
}

fn counts_and_orthonormality() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in [4, 6, 8, 10] {
        let basis = gen_tiles1(n).map_err(|e| e.to_string())?;
        ensure(basis.len() == (n - 1) * (n - 1), || {
            format!("GenTiles1({n}) has {} states", basis.len())
        })?;
        let dev = gram_deviation(&basis);
        ensure(dev <= 1e-10, || {
            format!("GenTiles1({n}) Gram deviation {dev:e}")
        })?;
        worst = worst.max(dev);
    }
    for (m, n) in [(3, 4), (3, 5), (4, 4), (4, 5), (5, 6)] {
        let basis = gen_tiles2(m, n).map_err(|e| e.to_string())?;
        ensure(basis.len() == m * n - 2 * m + 1, || {
            format!("GenTiles2({m},{n}) has {} states", basis.len())
        })?;
        let dev = gram_deviation(&basis);
        ensure(dev <= 1e-10, || {
            format!("GenTiles2({m},{n}) Gram deviation {dev:e}")
        })?;
        worst = worst.max(dev);
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "9 instances, max |G - I| = {worst:.1e}, {elapsed:.2?}"
    ))
}

fn symmetry_invariance() -> Outcome {
    let mut checked = 0;
    for n in [4, 6, 8] {
        let basis = gen_tiles1(n).unwrap();
        for s in 0..n as isize {
            let shifted = cyclic_shift_basis(&basis, s).map_err(|e| e.to_string())?;
            let m =
                basis_set_equal_up_to_phase(&basis, &shifted, 1e-9).map_err(|e| e.to_string())?;
            ensure(m.equal, || {
                format!("n={n} s={s}: min overlap {}", m.min_overlap)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} shifts matched at tolerance 1e-9"))
}

fn unextendibility() -> Outcome {
    let mut lines = Vec::new();
    for (name, basis) in upb_instances() {
        let mut values = Vec::new();
        let mut slowest = Duration::ZERO;
        for seed in 0..5 {
            let start = Instant::now();
            let config = UpbConfig {
                seesaw: SeesawOptions {
                    restarts: 500,
                    seed,
                    ..SeesawOptions::default()
                },
                tolerances: Tolerances::DEFAULT,
            };
            let report = check_upb(&basis, &config).map_err(|e| e.to_string())?;
            ensure(report.verdict == Verdict::UpbNumeric, || {
                format!("{name} seed {seed}: {}", report.verdict)
            })?;
            ensure(report.max_product_overlap < 1.0 - 1e-3, || {
                format!("{name}: {}", report.max_product_overlap)
            })?;
            values.push(report.max_product_overlap);
            slowest = slowest.max(start.elapsed());
        }
        ensure(slowest < Duration::from_secs(60), || {
            format!("{name} took {slowest:?}")
        })?;
        let hi = values.iter().cloned().fold(f64::MIN, f64::max);
        let lo = values.iter().cloned().fold(f64::MAX, f64::min);
        ensure(hi - lo < 1e-6, || format!("{name}: spread {:e}", hi - lo))?;
        lines.push(format!(
            "{name} {hi:.9} (spread {:.0e}, slowest {slowest:.2?})",
            hi - lo
        ));
    }
    Ok(lines.join(", "))
}

fn random_projector(rng: &mut SeededRng, n: usize, rank: usize) -> ComplexMatrix {
    let u = haar_unitary(rng, n);
    (0..rank).fold(ComplexMatrix::zeros(n, n), |p, j| {
        let v = u.column(j);
        p.add(&ComplexMatrix::outer(&v, &v))
    })
}

fn oracle_agreement() -> Outcome {
    let mut rng = stream_rng(2024, 0);
    let opts = SeesawOptions {
        restarts: 50,
        ..SeesawOptions::default()
    };
    let mut worst_gap = f64::MIN;
    let mut projectors = 0;
    for (d_a, d_b) in [(2, 2), (2, 3)] {
        let n = d_a * d_b;
        for i in 0..50 {
            let rank = 1 + i % (n - 1);
            let q = random_projector(&mut rng, n, rank);
            let ss = seesaw_max_product_overlap(&q, d_a, d_b, &opts).map_err(|e| e.to_string())?;
            let grid =
                grid_oracle_max_product_overlap(&q, d_a, d_b, 64).map_err(|e| e.to_string())?;
            ensure(ss.value >= grid.value - 1e-6, || {
                format!(
                    "{d_a}x{d_b} #{i}: see-saw {} < oracle {}",
                    ss.value, grid.value
                )
            })?;
            worst_gap = worst_gap.max(grid.value - ss.value);
            projectors += 1;
        }
        for i in 0..10 {
            let v = kron(
                &random_unit_vector(&mut rng, d_a),
                &random_unit_vector(&mut rng, d_b),
            );
            let q = ComplexMatrix::outer(&v, &v);
            let ss = seesaw_max_product_overlap(&q, d_a, d_b, &opts).map_err(|e| e.to_string())?;
            let grid =
                grid_oracle_max_product_overlap(&q, d_a, d_b, 64).map_err(|e| e.to_string())?;
            ensure(ss.value >= 0.998 && grid.value >= 0.998, || {
                format!(
                    "{d_a}x{d_b} product #{i}: see-saw {}, oracle {}",
                    ss.value, grid.value
                )
            })?;
        }
    }
    Ok(format!("{projectors} projectors, max(oracle - see-saw) = {worst_gap:.1e}; 20 product projectors >= 0.998"))
}

fn bound_entanglement() -> Outcome {
    let opts = SeesawOptions::default();
    let mut lines = Vec::new();
    for (name, basis) in upb_instances() {
        let rho = upb_density_state(&basis).map_err(|e| e.to_string())?;
        let ppt = is_ppt(&rho, 1e-10).map_err(|e| e.to_string())?;
        ensure(ppt.min_pt_eigenvalue >= -1e-10, || {
            format!("{name}: min PT eigenvalue {}", ppt.min_pt_eigenvalue)
        })?;
        let range =
            range_criterion_report(&rho, &opts, &Tolerances::DEFAULT).map_err(|e| e.to_string())?;
        ensure(
            range.verdict == RangeVerdict::Entangled && range.max_product_overlap < 1.0 - 1e-3,
            || format!("{name}: range overlap {}", range.max_product_overlap),
        )?;
        lines.push(format!(
            "{name} rank {} range {:.6}",
            range.rank, range.max_product_overlap
        ));
    }
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let bell = DensityMatrix::pure(&ComplexVector::from_real(&[h, 0.0, 0.0, h]), 2, 2).unwrap();
    let control = is_ppt(&bell, 1e-10).unwrap().min_pt_eigenvalue;
    ensure((control + 0.5).abs() <= 1e-10, || {
        format!("Bell control min PT eigenvalue {control}")
    })?;
    lines.push(format!("Bell control {control:.12}"));
    Ok(lines.join(", "))
}

fn winding_round_trips() -> Outcome {
    let mut worst = 0.0f64;
    for (d_a, d_b) in [(2, 2), (2, 3), (3, 3)] {
        let identity = ComplexMatrix::identity(d_a * d_b);
        for seed in 0..100u64 {
            let k = 1 + (seed % 3) as usize;
            let start = prodbasis::constructions::cartesian_basis(d_a, d_b).unwrap();
            let (wound, moves) =
                random_wound_basis(d_a, d_b, k, seed).map_err(|e| e.to_string())?;
            // Gram after every forward move.
            let mut forward = start;
            for mv in &moves {
                forward = apply_winding_move(&forward, mv).map_err(|e| e.to_string())?;
                worst = worst.max(gram_matrix(&forward).max_abs_diff(&identity));
            }
            ensure(forward == wound, || {
                format!("{d_a}x{d_b} seed {seed}: replay differs")
            })?;
            let mut back = wound;
            for mv in moves.iter().rev() {
                back = apply_winding_move(&back, &inverse_move(mv)).map_err(|e| e.to_string())?;
                worst = worst.max(gram_matrix(&back).max_abs_diff(&identity));
            }
            ensure(is_cartesian(&back, 1e-8).unwrap(), || {
                format!("{d_a}x{d_b} seed {seed}: not restored")
            })?;
        }
    }
    ensure(worst <= 1e-10, || format!("Gram deviation {worst:e}"))?;
    Ok(format!("300 instances restored, max |G - I| = {worst:.1e}"))
}

fn unwinder() -> Outcome {
    let mut lines = Vec::new();
    for d_b in [2, 3, 4] {
        let mut found = 0;
        let mut longest = 0;
        for seed in 0..100u64 {
            let (wound, _) = random_wound_basis(2, d_b, 1, seed).map_err(|e| e.to_string())?;
            let Some(path) = unwind(&wound, 2).map_err(|e| e.to_string())? else {
                return Err(format!("2x{d_b} seed {seed}: not unwound within depth 2"));
            };
            let mut replay = wound;
            for mv in &path {
                replay = apply_winding_move(&replay, mv).map_err(|e| e.to_string())?;
            }
            ensure(is_cartesian(&replay, 1e-8).unwrap(), || {
                format!("2x{d_b} seed {seed}: certification failed")
            })?;
            found += 1;
            longest = longest.max(path.len());
        }
        lines.push(format!("2x{d_b} {found}/100 (longest {longest})"));
    }
    Ok(lines.join(", "))
}

fn run_cli(args: &[&str]) -> (u8, Vec<u8>) {
    let mut out = Vec::new();
    let mut diag = Vec::new();
    let code = prodbasis_cli::run_from(args.iter().copied(), &mut out, &mut diag);
    (code, out)
}

fn determinism_and_serialization() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let tiles = dir.path().join("tiles.json");
    save_basis(&gen_tiles2(3, 5).unwrap(), &tiles).map_err(|e| e.to_string())?;
    let tiles = tiles.to_str().unwrap();
    for args in [
        vec![
            "prodbasis",
            "verify",
            tiles,
            "--restarts",
            "100",
            "--seed",
            "9",
            "--format",
            "json",
        ],
        vec![
            "prodbasis",
            "boundent",
            tiles,
            "--restarts",
            "100",
            "--seed",
            "9",
            "--format",
            "json",
        ],
    ] {
        let (c1, first) = run_cli(&args);
        let (c2, second) = run_cli(&args);
        ensure(c1 == 0 && c2 == 0, || {
            format!("{} exited {c1}/{c2}", args[1])
        })?;
        ensure(first == second, || format!("{} reports differ", args[1]))?;
    }

    let mut rng = stream_rng(8, 0);
    let mut states = Vec::with_capacity(1000);
    for i in 0..1000 {
        let d = 2 + (i / 100) % 4;
        let a = random_unit_vector(&mut rng, d);
        let b = random_unit_vector(&mut rng, d);
        states.push(ProductState::new(a, b, format!("r{i}")).unwrap());
    }
    let mut mismatches = 0;
    for (i, chunk) in states.chunks(100).enumerate() {
        let d = 2 + i % 4;
        let basis = ProductBasis::new(d, d, chunk.to_vec(), Family::Custom).unwrap();
        let path = dir.path().join(format!("random{i}.json"));
        save_basis(&basis, &path).map_err(|e| e.to_string())?;
        let back = load_basis(&path).map_err(|e| e.to_string())?;
        let again = BasisFile::from_json(&BasisFile::from_basis(&back).to_json()).unwrap();
        ensure(again == BasisFile::from_basis(&basis), || {
            "second save differs".to_owned()
        })?;
        for (x, y) in basis.states().iter().zip(back.states()) {
            let bits = |v: &ComplexVector| -> Vec<u64> {
                v.entries()
                    .iter()
                    .flat_map(|z: &C64| [z.re.to_bits(), z.im.to_bits()])
                    .collect()
            };
            if bits(&x.a) != bits(&y.a) || bits(&x.b) != bits(&y.b) {
                mismatches += 1;
            }
        }
    }
    ensure(mismatches == 0, || {
        format!("{mismatches} states changed bits")
    })?;
    Ok(
        "byte-identical verify/boundent JSON; 1000 random states bit-exact through files"
            .to_owned(),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("counts and orthonormality", counts_and_orthonormality),
        ("cyclic symmetry invariance", symmetry_invariance),
        ("unextendibility, 500 restarts x 5 seeds", unextendibility),
        ("see-saw vs grid oracle", oracle_agreement),
        ("PPT and range-criterion signature", bound_entanglement),
        ("winding round trips", winding_round_trips),
        ("certified unwinding", unwinder),
        (
            "determinism and serialization",
            determinism_and_serialization,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
