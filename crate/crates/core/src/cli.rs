//! The commands behind the `cdavis` binary. Each returns a [`RunReport`];
//! an `Err` means the input was unusable.

use std::path::Path;

use serde_json::{json, Value};

use crate::coxeter::{hyperbolicity, nerve, racg_from_flag, CoxeterJson, CoxeterSystem};
use crate::davis::{davis_ball, dim_of, hash_union_sharp, singular_subcomplex, DavisBall};
use crate::error::{Error, Result};
use crate::factory::{flag_spine_complex, presentation_complex, search_certificate, spine_complex, spine_presentation};
use crate::models::{farey_slopes, farrell_quotient, main_theorem_report, Dimension};
use crate::report::{status_of, ReportBuilder, RunReport, Status};
use crate::simplicial::homology::homology_capped;
use crate::simplicial::squares::flag_witness;
use crate::simplicial::{homology, square_report, ComplexJson, SimplicialComplex};

fn read(path: &Path) -> Result<Vec<u8>> {
    Ok(std::fs::read(path)?)
}

fn parse_complex(bytes: &[u8]) -> Result<SimplicialComplex> {
    SimplicialComplex::from_json(&serde_json::from_slice::<ComplexJson>(bytes)?)
}

enum Input {
    Complex(SimplicialComplex),
    System(CoxeterSystem),
}

/// A Coxeter matrix file (it has a `matrix` key) or a nerve complex file.
fn parse_input(bytes: &[u8]) -> Result<Input> {
    let v: Value = serde_json::from_slice(bytes)?;
    if v.get("matrix").is_some() {
        Ok(Input::System(CoxeterSystem::from_json(&serde_json::from_value::<CoxeterJson>(v)?)?))
    } else {
        Ok(Input::Complex(SimplicialComplex::from_json(&serde_json::from_value::<ComplexJson>(v)?)?))
    }
}

fn parse_system(bytes: &[u8]) -> Result<CoxeterSystem> {
    match parse_input(bytes)? {
        Input::System(s) => Ok(s),
        Input::Complex(l) => racg_from_flag(&l),
    }
}

pub fn cmd_homology(path: &Path, unreduced: bool) -> Result<RunReport> {
    let bytes = read(path)?;
    let k = parse_complex(&bytes)?;
    let mut r = ReportBuilder::new("homology", &bytes);
    r.step("complex", Status::Pass, json!({ "f_vector": k.f_vector(), "dim": k.dim() }));
    match homology_capped(&k, !unreduced) {
        Ok(h) => r.step("homology", Status::Pass, &h),
        Err(e) => r.step("homology", Status::Indeterminate, e.to_string()),
    };
    Ok(r.finish())
}

pub fn cmd_hyperbolic(path: &Path) -> Result<RunReport> {
    let bytes = read(path)?;
    let sys = match parse_input(&bytes)? {
        Input::System(s) => s,
        Input::Complex(l) => {
            let mut r = ReportBuilder::new("hyperbolic", &bytes);
            if let Some(w) = flag_witness(&l) {
                r.step("flag", Status::Fail, json!({ "missing_simplex": l.simplex_labels(&w) }));
                return Ok(r.finish());
            }
            r.step("flag", Status::Pass, json!({ "missing_simplex": null }));
            let report = hyperbolicity(&racg_from_flag(&l)?);
            r.step("hyperbolicity", Status::Pass, &report);
            return Ok(r.finish());
        }
    };
    let mut r = ReportBuilder::new("hyperbolic", &bytes);
    let report = hyperbolicity(&sys);
    let status = if report.hyperbolic.is_some() {
        Status::Pass
    } else {
        Status::Indeterminate
    };
    r.step("hyperbolicity", status, &report);
    Ok(r.finish())
}

pub fn cmd_nerve(path: &Path) -> Result<RunReport> {
    let bytes = read(path)?;
    let sys = parse_system(&bytes)?;
    let l = nerve(&sys);
    let mut r = ReportBuilder::new("nerve", &bytes);
    r.step("nerve", Status::Pass, l.to_json());
    Ok(r.finish())
}

pub fn cmd_racg(path: &Path) -> Result<RunReport> {
    let bytes = read(path)?;
    let l = parse_complex(&bytes)?;
    let mut r = ReportBuilder::new("racg", &bytes);
    match racg_from_flag(&l) {
        Ok(sys) => r.step("coxeter matrix", Status::Pass, sys.matrix().to_json()),
        Err(Error::NotFlag(w)) => r.step("coxeter matrix", Status::Fail, json!({ "missing_simplex": w })),
        Err(e) => return Err(e),
    };
    Ok(r.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DavisPart {
    Ball,
    Singular,
    Sharp,
}

fn subcomplex_data(k: &SimplicialComplex) -> Value {
    json!({
        "dim": dim_of(k),
        "f_vector": k.f_vector(),
        "homology": homology_capped(k, true).ok(),
    })
}

fn ball_step(r: &mut ReportBuilder, ball: &DavisBall) -> Option<SimplicialComplex> {
    let realization = ball.realization().ok();
    let explicit = realization.as_ref().map(dim_of);
    let ok = explicit.is_none_or(|d| d == ball.realization_dim());
    r.step(
        "ball",
        status_of(ok),
        json!({
            "radius": ball.radius(),
            "chambers": ball.chambers().len(),
            "cosets": ball.coset_count(),
            "realization_dim": ball.realization_dim(),
            "explicit_dim": explicit,
        }),
    );
    realization
}

pub fn cmd_davis(path: &Path, radius: usize, part: DavisPart) -> Result<RunReport> {
    let bytes = read(path)?;
    let sys = parse_system(&bytes)?;
    let ball = davis_ball(&sys, radius)?;
    let mut r = ReportBuilder::new("davis", &bytes);
    ball_step(&mut r, &ball);
    match part {
        DavisPart::Ball => {}
        DavisPart::Singular => singular_step(&mut r, &ball),
        DavisPart::Sharp => {
            let sharp = hash_union_sharp(&ball)?;
            let mut data = subcomplex_data(&sharp);
            let inside = singular_subcomplex(&ball).ok().map(|s| sharp.is_subcomplex_of(&s));
            data["inside_singular"] = json!(inside);
            r.step("sharp", status_of(inside != Some(false)), data);
        }
    }
    Ok(r.finish())
}

fn singular_step(r: &mut ReportBuilder, ball: &DavisBall) {
    let dim = ball.singular_dim();
    let (explicit, ok) = match singular_subcomplex(ball) {
        Ok(s) => {
            let d = subcomplex_data(&s);
            let ok = d["dim"] == json!(dim);
            (d, ok)
        }
        Err(e) => (json!(e.to_string()), true),
    };
    r.step("singular", status_of(ok), json!({ "dim": dim, "explicit": explicit }));
}

pub fn cmd_farrell(slopes: usize) -> Result<RunReport> {
    let mut r = ReportBuilder::new("farrell", format!("farrell --slopes {slopes}").as_bytes());
    let mut ranks = Vec::new();
    for k in 0..=slopes {
        let set = farey_slopes(k);
        let x = farrell_quotient(&set);
        let h = homology(&x, false);
        // H₃ has rank k − 1 once a slope is filled, and H₁ is Z² mod the slopes
        let expected_h3 = k.saturating_sub(1);
        let ok = h.betti(3) == expected_h3 && (k > 0 || (h.betti(1) == 2 && h.betti(2) == 1));
        let pairs: Vec<[i64; 2]> = set.slopes().iter().map(|s| [s.p, s.q]).collect();
        r.step(
            &format!("slopes {k}"),
            status_of(ok),
            json!({ "slopes": pairs, "f_vector": x.f_vector(), "homology": h }),
        );
        if k > 0 {
            ranks.push(h.betti(3));
        }
    }
    let monotone = ranks.windows(2).all(|w| w[0] <= w[1]);
    r.step("h3 growth", status_of(monotone), &ranks);
    Ok(r.finish())
}

pub fn cmd_spine(out: Option<&Path>) -> Result<RunReport> {
    let mut r = ReportBuilder::new("spine", b"spine");
    let p = spine_presentation();
    let pc = presentation_complex(&p);
    r.step(
        "presentation",
        status_of(homology(&pc, true).is_trivial()),
        json!({ "presentation": p.to_json(), "abelianized": p.abelianized(), "f_vector": pc.f_vector() }),
    );
    let l = spine_complex();
    let h = homology(&l, true);
    r.step("complex", Status::Pass, json!({ "f_vector": l.f_vector() }));
    r.step("acyclic", status_of(h.is_trivial()), &h);
    let sq = square_report(&l);
    r.step(
        "flag no squares",
        status_of(sq.flag_no_squares()),
        json!({ "flag": sq.is_flag, "empty_squares": sq.empty_squares.len() }),
    );
    match search_certificate(&p, 5) {
        Some(c) => r.step("certificate", status_of(c.valid && c.checks.image_order == 60), &c),
        None => r.step("certificate", Status::Fail, "no degree 5 quotient"),
    };
    if let Some(out) = out {
        std::fs::write(out, serde_json::to_vec(&l.to_json())?)?;
    }
    Ok(r.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub radius: usize,
    pub skip_nsq_subdivision: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            radius: 1,
            skip_nsq_subdivision: false,
        }
    }
}

pub fn cmd_certify_main_theorem(opts: CertifyOptions) -> Result<RunReport> {
    let args = format!(
        "certify-main-theorem --radius {}{}",
        opts.radius,
        if opts.skip_nsq_subdivision { " --skip-nsq-subdivision" } else { "" }
    );
    let mut r = ReportBuilder::new("certify-main-theorem", args.as_bytes());
    let l = if opts.skip_nsq_subdivision {
        flag_spine_complex()
    } else {
        spine_complex()
    };
    r.step("nerve", Status::Pass, json!({ "f_vector": l.f_vector(), "dim": l.dim() }));
    let h = homology(&l, true);
    r.step("acyclic", status_of(h.is_trivial()), &h);
    let sq = square_report(&l);
    r.step("flag", status_of(sq.is_flag), json!({ "missing_simplex": sq.flag_witness }));
    // informational: the square count selects the branch below
    r.step("empty squares", Status::Pass, json!({ "count": sq.empty_squares.len() }));
    let Some(cert) = search_certificate(&spine_presentation(), 5) else {
        r.step("certificate", Status::Fail, "no degree 5 quotient");
        return Ok(r.finish());
    };
    r.step(
        "certificate",
        status_of(cert.valid && cert.reverify()),
        json!({ "images": cert.images, "image_order": cert.checks.image_order }),
    );
    let Ok(sys) = racg_from_flag(&l) else {
        return Ok(r.finish());
    };
    r.step("racg", Status::Pass, json!({ "rank": sys.rank() }));
    let hyp = hyperbolicity(&sys);
    let hyperbolic = hyp.hyperbolic == Some(true);
    r.step(
        "hyperbolicity",
        status_of(hyperbolic == sq.empty_squares.is_empty()),
        json!({ "hyperbolic": hyperbolic, "z2_witness": hyp.z2_witness }),
    );
    if opts.radius == 0 {
        r.step(
            "singular dimension",
            Status::Indeterminate,
            json!({ "radius": 0, "reason": "insufficient radius" }),
        );
    } else {
        match davis_ball(&sys, opts.radius) {
            Ok(ball) => {
                let (sing, real) = (ball.singular_dim(), ball.realization_dim());
                let expected = l.dim();
                r.step(
                    "singular dimension",
                    status_of(sing == expected && real == expected + 1),
                    json!({ "radius": opts.radius, "singular_dim": sing, "realization_dim": real, "chambers": ball.chambers().len(), "cosets": ball.coset_count() }),
                );
            }
            Err(e) => {
                r.step("singular dimension", Status::Indeterminate, json!({ "radius": opts.radius, "reason": e.to_string() }));
            }
        }
    }
    let report = main_theorem_report(&l, &cert);
    r.step(
        "dihedral pairs",
        Status::Pass,
        json!({ "count": report.dihedral_pairs, "lower_bound_proxy": true }),
    );
    let consistent = match (report.hyperbolic, report.predictions()) {
        (Some(true), Some(p)) => p == (Dimension::Exact(2), Dimension::Exact(3)),
        (Some(false), Some(p)) => p == (Dimension::AtLeast(3), Dimension::AtLeast(3)),
        _ => false,
    };
    r.step("main theorem", status_of(consistent), &report);
    Ok(r.finish())
}
