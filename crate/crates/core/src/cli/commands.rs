use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::PathBuf;

use super::io::{
    column_name, format_coord, format_weights, grid_csv, table_csv, to_db, with_suffix, write_file,
};
use super::plot::gnuplot_script;
use super::scenario::Scenario;
use super::{AverageArgs, CliError, Command, CommonArgs, ModelArg};
use crate::analysis::{
    average_power_curve, check_fot_bound, measure_peak_to_null, plateau_edges, power_components,
    rayleigh_beamwidth, spatial_exploration, FotVerdict,
};
use crate::design::{designed_pattern, predict_shift, synthesize_weights, SynthesizedWeights};
use crate::model::{
    classify_state, sweep, Axis, AxisKind, BeamGrid, FixedPoint, Model, StateKind, Support,
};

const DEFAULT_ANGLES: usize = 721;
const DEFAULT_RANGES: usize = 241;
const DEFAULT_COMPARE_ANGLES: usize = 361;

/// Files written by a command and the text summary printed to stdout.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub files: Vec<PathBuf>,
    pub summary: String,
}

/// Scenario plus command-line overrides.
struct Run {
    sc: Scenario,
    model: Model,
    support: Support,
    stem: PathBuf,
    plot: bool,
    verdict: FotVerdict,
    files: Vec<PathBuf>,
    summary: String,
}

impl Run {
    fn prepare(args: &CommonArgs) -> Result<Self, CliError> {
        let sc = Scenario::load(&args.scenario)?;
        let model = match args.model {
            Some(ModelArg::Exact) => Model::Exact,
            Some(ModelArg::Compact) => Model::Compact,
            None => sc.model.unwrap_or_default(),
        };
        let support = if args.continuous_wave || sc.continuous_wave {
            Support::ContinuousWave
        } else {
            Support::Pulsed
        };
        let verdict = check_fot_bound(&sc.config);
        if args.strict && !verdict.satisfies_bound() {
            return Err(CliError::BoundViolated {
                fot: sc.config.fot(),
            });
        }
        let mut summary = String::new();
        let c = &sc.config;
        let _ = writeln!(
            summary,
            "array: M = {}, d = {} m, f_c = {} Hz, f_o = {} Hz, T = {} s, phi_o = {} rad",
            c.m_antennas(),
            c.spacing_m(),
            c.carrier_hz(),
            c.offset_hz(),
            c.pulse_s(),
            c.initial_phase_rad()
        );
        let _ = writeln!(
            summary,
            "target: R_o = {} m, theta = {:.6} deg, t_o = {} s",
            sc.target.range_m(),
            sc.target.angle_rad().to_degrees(),
            sc.target.delay()
        );
        let _ = writeln!(summary, "f_oT = {} : {}", c.fot(), verdict.label());
        Ok(Run {
            stem: args.out.clone().unwrap_or_else(|| sc.stem.clone()),
            plot: args.plot || sc.plot_script,
            sc,
            model,
            support,
            verdict,
            files: Vec::new(),
            summary,
        })
    }

    fn time(&self) -> f64 {
        self.sc.time_s.unwrap_or_else(|| self.sc.target.delay())
    }

    fn emit(&mut self, suffix: &str, contents: &str) -> Result<PathBuf, CliError> {
        let path = with_suffix(&self.stem, suffix);
        write_file(&path, contents)?;
        self.files.push(path.clone());
        Ok(path)
    }

    fn emit_grid(&mut self, suffix: &str, title: &str, grid: &BeamGrid) -> Result<(), CliError> {
        let path = self.emit(suffix, &grid_csv(grid))?;
        if self.plot {
            let n = grid.axes.len();
            let x = (n, column_name(grid.axes[n - 1].kind));
            let y = (n == 2).then(|| (1, column_name(grid.axes[0].kind)));
            let script = gnuplot_script(&path, title, x, y, (n + 3, "power_norm_db"));
            self.emit(&format!("{suffix}.gp"), &script)?;
        }
        Ok(())
    }

    fn finish(mut self) -> Result<Report, CliError> {
        let mut listing = String::new();
        for f in &self.files {
            let _ = writeln!(listing, "wrote {}", f.display());
        }
        let summary_path = with_suffix(&self.stem, "_summary.txt");
        write_file(&summary_path, &self.summary)?;
        self.files.push(summary_path.clone());
        let _ = writeln!(listing, "wrote {}", summary_path.display());
        self.summary.push_str(&listing);
        Ok(Report {
            files: self.files,
            summary: self.summary,
        })
    }

    fn angle_axis(&self, default_count: usize) -> Axis {
        self.sc
            .axes
            .iter()
            .find(|a| a.kind == AxisKind::Angle)
            .cloned()
            .unwrap_or_else(|| default_angles(default_count))
    }
}

fn default_angles(count: usize) -> Axis {
    Axis::linspace(AxisKind::Angle, -PI / 2.0, PI / 2.0, count)
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Pattern(args) => cmd_pattern(args),
        Command::Design(args) => cmd_design(args),
        Command::Average(args) => cmd_average(args),
        Command::Compare(args) => cmd_compare(args),
    }
}

pub fn cmd_pattern(args: &CommonArgs) -> Result<Report, CliError> {
    let mut run = Run::prepare(args)?;
    let axes = if run.sc.axes.is_empty() {
        vec![default_angles(DEFAULT_ANGLES)]
    } else {
        run.sc.axes.clone()
    };
    let fixed = FixedPoint {
        time_s: run.time(),
        ..FixedPoint::at_target(&run.sc.target)
    };
    let grid = sweep(&run.sc.config, &axes, fixed, run.model, run.support)?;
    run.emit_grid(".csv", "beampattern", &grid)?;

    let (peak_i, peak_p) = grid.argmax();
    let m2 = (run.sc.config.m_antennas() as f64).powi(2);
    let mut s = String::new();
    let coords: Vec<String> = grid
        .axes
        .iter()
        .zip(grid.coords(peak_i))
        .map(|(a, v)| format!("{} = {}", column_name(a.kind), format_coord(a.kind, v)))
        .collect();
    let _ = writeln!(
        s,
        "peak: {} ; power = {} ({:.3} dB re M^2)",
        coords.join(", "),
        peak_p,
        to_db(peak_p, m2)
    );

    if let Some(ai) = grid.axes.iter().position(|a| a.kind == AxisKind::Angle) {
        let angles = &grid.axes[ai].values;
        let slice: Vec<f64> = match (grid.axes.len(), ai) {
            (1, _) => grid.power.clone(),
            (_, 0) => {
                let cols = grid.axes[1].values.len();
                (0..angles.len())
                    .map(|r| grid.at(r, peak_i % cols))
                    .collect()
            }
            _ => {
                let cols = grid.axes[1].values.len();
                grid.row(peak_i / cols).to_vec()
            }
        };
        match measure_peak_to_null(angles, &slice) {
            Some((p, n)) => {
                let _ = writeln!(
                    s,
                    "measured peak-to-first-null: {:.6} rad ({:.4} deg)",
                    (n - p).abs(),
                    (n - p).abs().to_degrees()
                );
            }
            None => {
                let _ = writeln!(s, "measured peak-to-first-null: no null on grid");
            }
        }
        match rayleigh_beamwidth(&run.sc.config) {
            Ok(r) => {
                let _ = writeln!(
                    s,
                    "rayleigh beamwidth: exact {:.6} rad, approx {:.6} rad",
                    r.bw_exact_rad, r.bw_approx_rad
                );
            }
            Err(e) => {
                let _ = writeln!(s, "rayleigh beamwidth: n/a ({e})");
            }
        }
    }

    let times: Vec<f64> = grid
        .axes
        .iter()
        .find(|a| a.kind == AxisKind::Time)
        .map_or_else(|| vec![fixed.time_s], |a| a.values.clone());
    let _ = writeln!(s, "states at the target:");
    for (t0, t1, kind, count) in state_runs(&run.sc, &times) {
        if t0 == t1 {
            let _ = writeln!(s, "  t = {t0} s: {} ({count} active)", state_name(kind));
        } else {
            let _ = writeln!(
                s,
                "  t in [{t0}, {t1}] s: {} ({count} active)",
                state_name(kind)
            );
        }
    }
    run.summary.push_str(&s);
    run.finish()
}

fn state_name(kind: StateKind) -> &'static str {
    match kind {
        StateKind::NotIlluminated => "not illuminated",
        StateKind::Transient1 => "transient-1",
        StateKind::Steady => "steady",
        StateKind::Transient2 => "transient-2",
        StateKind::Expired => "expired",
    }
}

fn state_runs(sc: &Scenario, times: &[f64]) -> Vec<(f64, f64, StateKind, usize)> {
    let mut runs: Vec<(f64, f64, StateKind, usize)> = Vec::new();
    for &t in times {
        let st = classify_state(&sc.config, &sc.target, t);
        match runs.last_mut() {
            Some(last) if last.2 == st.kind && last.3 == st.active_antennas => last.1 = t,
            _ => runs.push((t, t, st.kind, st.active_antennas)),
        }
    }
    runs
}

fn synthesize(run: &Run) -> Result<SynthesizedWeights, CliError> {
    let design = run
        .sc
        .design
        .as_ref()
        .ok_or_else(|| CliError::Validation("scenario has no [design] section".to_string()))?;
    Ok(synthesize_weights(
        &design.desired,
        run.sc.config.m_antennas(),
    )?)
}

pub fn cmd_design(args: &CommonArgs) -> Result<Report, CliError> {
    let mut run = Run::prepare(args)?;
    let synth = synthesize(&run)?;
    let design = run.sc.design.clone().expect("checked by synthesize");
    let desired = &design.desired;
    let t_o = run.sc.target.delay();
    let times = design
        .times_s
        .clone()
        .unwrap_or_else(|| vec![t_o, 1.5 * t_o, 2.0 * t_o]);
    let angles = run.angle_axis(DEFAULT_ANGLES);

    let comments = vec![
        format!("M = {}, K = {}", synth.weights().len(), desired.grid_size()),
        format!("regions_deg = {:?}", desired.regions_deg()),
        format!("residual = {}", synth.residual()),
    ];
    run.emit("_weights.txt", &format_weights(synth.weights(), &comments))?;

    let achieved_cfg = run
        .sc
        .config
        .clone()
        .with_weights(synth.weights().to_vec())?;
    let mask_rows: Vec<Vec<String>> = (0..desired.grid_size())
        .map(|k| {
            let f = desired.f_theta(k);
            let af = crate::model::array_factor_compact(
                &achieved_cfg,
                &crate::model::Target::new(run.sc.target.range_m(), desired.angle_rad(k))
                    .expect("grid angles are in range"),
                t_o,
            )
            .expect("half-wavelength checked");
            vec![
                format!("{f}"),
                format!("{:.6}", desired.angle_rad(k).to_degrees()),
                format!("{}", desired.mask()[k]),
                format!("{}", af.norm()),
            ]
        })
        .collect();
    run.emit(
        "_mask.csv",
        &table_csv(
            &["f_theta", "angle_deg", "mask_abs", "achieved_abs"],
            &mask_rows,
        ),
    )?;

    let mut power = Vec::with_capacity(times.len() * angles.values.len());
    let mut s = String::new();
    let _ = writeln!(
        s,
        "design: K = {}, residual = {:.6e} (|AF| rms), {:.4} dB rms, truncation energy = {:.6e}, peak |AF| = {:.6}",
        desired.grid_size(),
        synth.residual(),
        synth.residual_db(),
        synth.truncation_energy(),
        synth.peak_gain()
    );
    for &t in &times {
        let g = designed_pattern(&synth, &run.sc.config, &run.sc.target, t, &angles.values)?;
        let region = match plateau_edges(&angles.values, &g.power, 3.0) {
            Ok((lo, hi)) => format!(
                "-3 dB region [{:.3}, {:.3}] deg",
                lo.to_degrees(),
                hi.to_degrees()
            ),
            Err(_) => "no -3 dB region".to_string(),
        };
        let _ = writeln!(
            s,
            "  t = {t} s: predicted shift {:+.6} in f_theta, {region}",
            predict_shift(&run.sc.config, t, t_o)
        );
        power.extend(g.power);
    }
    let grid = BeamGrid {
        axes: vec![Axis::new(AxisKind::Time, times), angles],
        power,
        config: achieved_cfg,
    };
    run.emit_grid(".csv", "designed beampattern", &grid)?;
    run.summary.push_str(&s);
    run.finish()
}

pub fn cmd_average(args: &AverageArgs) -> Result<Report, CliError> {
    let mut run = Run::prepare(&args.common)?;
    let angles = run.angle_axis(DEFAULT_ANGLES).values;
    let cfg = run.sc.config.clone();
    let m = cfg.m_antennas();
    let curve = average_power_curve(&cfg, &angles);
    let m2 = (m as f64).powi(2);
    let peak = curve.iter().copied().fold(0.0, f64::max);

    let mut header = vec!["angle_deg", "power_lin", "power_db", "power_norm_db"];
    if args.components {
        header.extend(["p1", "p2"]);
    }
    let rows: Vec<Vec<String>> = angles
        .iter()
        .zip(&curve)
        .map(|(&th, &p)| {
            let mut row = vec![
                format!("{:.6}", th.to_degrees()),
                format!("{p}"),
                format!("{:.6}", to_db(p, m2)),
                format!("{:.6}", to_db(p, peak)),
            ];
            if args.components {
                match power_components(m, cfg.fot(), cfg.initial_phase_rad(), th) {
                    Some(c) => row.extend([format!("{}", c.p1), format!("{}", c.p2)]),
                    None => row.extend([String::new(), String::new()]),
                }
            }
            row
        })
        .collect();
    let path = run.emit(".csv", &table_csv(&header, &rows))?;
    if run.plot {
        let script = gnuplot_script(
            &path,
            "average beampattern",
            (1, "angle_deg"),
            None,
            (4, "power_norm_db"),
        );
        run.emit(".csv.gp", &script)?;
    }

    let mut s = String::new();
    match spatial_exploration(cfg.fot(), cfg.initial_phase_rad()) {
        Ok(se) => {
            let _ = writeln!(
                s,
                "theta_1 = {:.6} rad ({:.4} deg), theta_2 = {:.6} rad ({:.4} deg)",
                se.theta1_rad,
                se.theta1_rad.to_degrees(),
                se.theta2_rad,
                se.theta2_rad.to_degrees()
            );
            let _ = writeln!(
                s,
                "sin(theta_1) = {:.6}, sin(theta_2) = {:.6}",
                se.sin_theta1, se.sin_theta2
            );
            let _ = writeln!(
                s,
                "se_exact = {:.6} rad, se_approx = {:.6} rad",
                se.se_exact_rad, se.se_approx_rad
            );
        }
        Err(e) => {
            let _ = writeln!(s, "closed-form plateau edges: n/a ({e})");
        }
    }
    match plateau_edges(&angles, &curve, args.threshold_db) {
        Ok((lo, hi)) => {
            let _ = writeln!(
                s,
                "empirical SE ({} dB) = {:.6} rad, plateau [{:.4}, {:.4}] deg",
                args.threshold_db,
                hi - lo,
                lo.to_degrees(),
                hi.to_degrees()
            );
        }
        Err(e) => {
            let _ = writeln!(s, "empirical SE: n/a ({e})");
        }
    }
    if run.verdict == FotVerdict::Violated {
        let _ = writeln!(
            s,
            "warning: f_oT outside the valid range; plateau no longer fits in the visible region"
        );
    }
    run.summary.push_str(&s);
    run.finish()
}

/// Least-squares line through the per-range beam centroid, in `f_theta` per metre.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TiltFit {
    pub slope_per_m: f64,
    pub intercept: f64,
    /// RMS of the fit residual, in `f_theta`.
    pub rms: f64,
    pub rows_used: usize,
}

/// Beam tilt across range for a grid with one range and one angle axis.
///
/// Each lit range row is reduced to the circular centroid of its power over
/// `f_theta = sin(theta)/2`, weighting by `cos(theta)` so a uniform angle grid
/// integrates with the `sin(theta)` measure. The centroids are unwrapped along
/// range and fitted with a line. `None` if fewer than two rows carry power.
pub fn range_tilt(grid: &BeamGrid) -> Option<TiltFit> {
    let ri = grid.axes.iter().position(|a| a.kind == AxisKind::Range)?;
    let ai = grid.axes.iter().position(|a| a.kind == AxisKind::Angle)?;
    let ranges = &grid.axes[ri].values;
    let angles = &grid.axes[ai].values;
    let cols = grid.axes.get(1)?.values.len();
    let cell = |r: usize, a: usize| {
        if ri == 0 {
            grid.power[r * cols + a]
        } else {
            grid.power[a * cols + r]
        }
    };
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for (r, &range) in ranges.iter().enumerate() {
        let (mut re, mut im) = (0.0, 0.0);
        for (a, &th) in angles.iter().enumerate() {
            let w = cell(r, a) * th.cos();
            let ph = PI * th.sin();
            re += w * ph.cos();
            im += w * ph.sin();
        }
        if re.hypot(im) > 0.0 {
            pts.push((range, im.atan2(re) / (2.0 * PI)));
        }
    }
    if pts.len() < 2 {
        return None;
    }
    for i in 1..pts.len() {
        let d = pts[i].1 - pts[i - 1].1;
        pts[i].1 -= d.round();
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let intercept = my - slope * mx;
    let rms = (pts
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum::<f64>()
        / n)
        .sqrt();
    Some(TiltFit {
        slope_per_m: slope,
        intercept,
        rms,
        rows_used: pts.len(),
    })
}

pub fn cmd_compare(args: &CommonArgs) -> Result<Report, CliError> {
    let mut run = Run::prepare(args)?;
    let synth = synthesize(&run)?;
    let axes = compare_axes(&run.sc)?;
    let fixed = FixedPoint {
        time_s: run.time(),
        ..FixedPoint::at_target(&run.sc.target)
    };
    let base = run.sc.config.clone();
    let par_cfg = base.clone().with_offset(0.0)?;
    let dft_cfg = base.clone().with_weights(synth.weights().to_vec())?;
    let grids = [
        (
            "_par.csv",
            "phased array",
            sweep(&par_cfg, &axes, fixed, run.model, run.support)?,
        ),
        (
            "_fda.csv",
            "conventional FDA",
            sweep(&base, &axes, fixed, run.model, run.support)?,
        ),
        (
            "_dft.csv",
            "DFT-designed FDA",
            sweep(&dft_cfg, &axes, fixed, Model::Compact, run.support)?,
        ),
    ];
    let mut s = String::new();
    let _ = writeln!(
        s,
        "model: {:?}, support: {:?}, t = {} s; expected FDA tilt f_o/c = {:.6e} f_theta per km",
        run.model,
        run.support,
        fixed.time_s,
        base.offset_hz() / crate::model::SPEED_OF_LIGHT * 1e3
    );
    for (suffix, title, grid) in &grids {
        run.emit_grid(suffix, title, grid)?;
        match range_tilt(grid) {
            Some(fit) => {
                let _ = writeln!(
                    s,
                    "{title}: tilt {:.6e} f_theta per km, fit rms {:.3e}, {} lit ranges",
                    fit.slope_per_m * 1e3,
                    fit.rms,
                    fit.rows_used
                );
            }
            None => {
                let _ = writeln!(s, "{title}: tilt n/a (fewer than two lit ranges)");
            }
        }
    }
    run.summary.push_str(&s);
    run.finish()
}

fn compare_axes(sc: &Scenario) -> Result<Vec<Axis>, CliError> {
    if sc.axes.is_empty() {
        let far = 2.0 * sc.target.range_m().max(1.0);
        return Ok(vec![
            Axis::linspace(AxisKind::Range, 0.0, far, DEFAULT_RANGES),
            default_angles(DEFAULT_COMPARE_ANGLES),
        ]);
    }
    let kinds: Vec<AxisKind> = sc.axes.iter().map(|a| a.kind).collect();
    if kinds.len() == 2 && kinds.contains(&AxisKind::Range) && kinds.contains(&AxisKind::Angle) {
        Ok(sc.axes.clone())
    } else {
        Err(CliError::Validation(
            "compare needs a range axis and an angle axis".to_string(),
        ))
    }
}
