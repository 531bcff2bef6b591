use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use morikawa::algebra::{build_h, build_p, coeff_polys, parse_rational, PolyDoc};
use morikawa::galois::{s10_evidence, sample_cycle_types, GaloisReport};
use morikawa::geometry::{
    classify, default_contact_tol, inscribed_square, side_length_curve, CircleContact, ContactKind,
    Scene,
};
use morikawa::minimize::{interval, minimize_mu, z};
use morikawa::verify::{run_suite, RadiusSpec};
use morikawa::Strategy;
use serde_json::json;

use crate::num::g15;
use crate::svg::line_plot;
use crate::{CliError, Format};

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// `dir/stem_z.ext` next to `out`.
fn companion(out: &Path, ext: &str) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}_z.{ext}"))
}

pub fn mu(r: f64, tol: f64) -> Result<String, CliError> {
    let m = minimize_mu(r, tol)?;
    Ok(format!(
        "r = {}\nx_m = {}\nmu = {}\nresidual_zprime = {}\nevaluations = {}\n",
        g15(m.r),
        g15(m.x_m),
        g15(m.mu),
        g15(m.residual_zprime),
        m.iterations
    ))
}

pub fn curve(r: f64, n: usize, out: &Path, format: Format) -> Result<String, CliError> {
    if n < 2 {
        return Err(CliError::Usage("--n must be at least 2".into()));
    }
    let scene = Scene::new(r)?;
    let sides = side_length_curve(&scene, n, Strategy::default())?;
    let (a, b) = interval();
    let zs = (1..=n)
        .map(|i| {
            let x = a + (b - a) * i as f64 / (n + 1) as f64;
            z(r, x).map(|v| (x, v))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let z_out = match format {
        Format::Csv => {
            write(out, &csv("theta,s", &sides))?;
            let path = companion(out, "csv");
            write(&path, &csv("x,z", &zs))?;
            path
        }
        Format::Svg => {
            let title = format!("side length at r = {}", g15(r));
            write(out, &line_plot(&title, "theta", "s", &sides))?;
            let path = companion(out, "svg");
            let title = format!("z(x) at r = {}", g15(r));
            write(&path, &line_plot(&title, "x", "z", &zs))?;
            path
        }
    };
    Ok(format!("wrote {} and {}\n", out.display(), z_out.display()))
}

fn csv(header: &str, rows: &[(f64, f64)]) -> String {
    let mut s = format!("{header}\n");
    for &(a, b) in rows {
        let _ = writeln!(s, "{},{}", g15(a), g15(b));
    }
    s
}

fn contact(c: &CircleContact) -> String {
    let kind = match c.kind {
        ContactKind::Corner => "corner",
        ContactKind::SideTangent => "side-tangent",
        ContactKind::CornerWithTangency => "corner-with-tangency",
        ContactKind::None => "none",
    };
    let mut s = kind.to_string();
    if let Some(v) = c.vertex {
        let _ = write!(s, " vertex={v:?}");
    }
    if let Some(side) = c.side {
        let _ = write!(s, " side={side:?}");
    }
    s
}

pub fn classify_cmd(r: f64, theta: f64, tol: Option<f64>) -> Result<String, CliError> {
    let scene = Scene::new(r)?;
    let sq = inscribed_square(&scene, theta)?;
    let tol = tol.unwrap_or_else(|| default_contact_tol(&scene));
    let prof = classify(&scene, &sq, tol)?;
    let mut s = String::new();
    let _ = writeln!(s, "r = {}\ntheta = {}\ns = {}", g15(r), g15(theta), g15(sq.s));
    for (name, p) in [("v_dn", sq.v_dn), ("v_B", sq.v_b), ("v_up", sq.v_up), ("v_A", sq.v_a)] {
        let _ = writeln!(s, "{name} = ({}, {})", g15(p.x), g15(p.y));
    }
    let line = match prof.line_contact {
        morikawa::geometry::LineContact::CornerOnLine => "corner",
        morikawa::geometry::LineContact::SideOnLine => "side",
    };
    let _ = writeln!(s, "line_contact = {line}");
    let _ = writeln!(s, "c1_contact = {}", contact(&prof.c1_contact));
    let _ = writeln!(s, "cr_contact = {}", contact(&prof.cr_contact));
    let _ = writeln!(s, "hint = {}", prof.named_hint.map_or("none", |h| h.label()));
    Ok(s)
}

pub fn poly(t: &str, out: &Path) -> Result<String, CliError> {
    let t0 = parse_rational(t)?;
    let uni = |p: &morikawa::algebra::BivarPoly| {
        serde_json::to_value(PolyDoc::from_uni(&p.specialize(&t0), "x")).expect("serializable")
    };
    let components: serde_json::Map<String, serde_json::Value> = coeff_polys()
        .named()
        .into_iter()
        .map(|(name, p)| (name.to_string(), uni(p)))
        .collect();
    let doc = json!({
        "t": t0.to_string(),
        "p": uni(&build_p()),
        "components": components,
    });
    write(out, &(serde_json::to_string(&doc).expect("serializable") + "\n"))?;
    Ok(format!("wrote {}\n", out.display()))
}

pub fn hpoly(out: &Path) -> Result<String, CliError> {
    write(out, &(PolyDoc::from_sparse(&build_h(), ["k", "x", "y"]).to_json() + "\n"))?;
    Ok(format!("wrote {}\n", out.display()))
}

pub fn galois(k: &str, primes: usize, seed: u64, out: &Path) -> Result<String, CliError> {
    let k0 = parse_rational(k)?;
    let hist = sample_cycle_types(&k0, primes, seed)?;
    let evidence = s10_evidence(&hist)?;
    let report = GaloisReport::new(k0.to_string(), seed, &hist, &evidence);
    write(out, &(report.to_json() + "\n"))?;
    let verdict = if report.verdict { "consistent with S10" } else { "not established" };
    Ok(format!(
        "primes = {}\nskipped = {}\npatterns = {}\nverdict = {verdict}\nwrote {}\n",
        report.primes,
        report.skipped,
        report.patterns.len(),
        out.display()
    ))
}

pub fn verify(list: &str) -> Result<(String, usize), CliError> {
    let radii = list
        .split(',')
        .map(RadiusSpec::parse)
        .collect::<Result<Vec<_>, _>>()?;
    let checks = run_suite(&radii)?;
    let mut s = format!("{:<8} {:<22} {:<22} {:<22} {}\n", "r", "check", "value", "threshold", "result");
    let mut failed = 0;
    for c in &checks {
        if !c.pass {
            failed += 1;
        }
        let _ = writeln!(
            s,
            "{:<8} {:<22} {:<22} {:<22} {}",
            c.r,
            c.name,
            g15(c.value),
            g15(c.threshold),
            if c.pass { "PASS" } else { "FAIL" }
        );
    }
    let _ = writeln!(s, "{} checks, {failed} failed", checks.len());
    Ok((s, failed))
}
