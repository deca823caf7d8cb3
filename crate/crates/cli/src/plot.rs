//! Sampled capacity curves over the normalized one-blowup slice
//! `ω = (1 | x)`, `x ∈ (0, 1)`: exact CSV (with every breakpoint hit
//! exactly) or an SVG polyline chart (decimal rendering, display only).

use std::process::ExitCode;

use capcalc::lattice::CohomClass;
use capcalc::tropical::{breakpoints_unit_interval, eval, minimizer_set, TropicalCapacity};
use capcalc::Error;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::{parse_k_range, PlotFormat};

// Stroke palette for f_1 .. f_8 in order.
const COLORS: [&str; 8] = [
    "#000000", "#d62728", "#ff7f0e", "#bcbd22", "#2ca02c", "#1f77b4", "#17becf", "#9467bd",
];

pub fn cmd_plot(
    n: usize,
    k: &str,
    samples: u32,
    out: Option<&str>,
    format: PlotFormat,
) -> Result<ExitCode, Error> {
    if n != 1 {
        return Err(Error::Parse(
            "plotting is defined on the one-parameter slice; use --n 1".into(),
        ));
    }
    if samples < 2 {
        return Err(Error::Parse("need at least 2 samples".into()));
    }
    let ks: Vec<u32> = parse_k_range(k)?.collect();
    let curves: Vec<TropicalCapacity> = ks
        .iter()
        .map(|&k| minimizer_set(1, k, None))
        .collect::<Result<_, _>>()?;

    // Uniform interior samples plus the exact pairwise breakpoints of
    // every curve.
    let mut xs: Vec<BigRational> = (1..=samples as i64)
        .map(|i| BigRational::new(i.into(), (samples as i64 + 1).into()))
        .collect();
    let mut breakpoints: Vec<BigRational> = Vec::new();
    for tp in &curves {
        for b in breakpoints_unit_interval(tp) {
            if !breakpoints.contains(&b) {
                breakpoints.push(b);
            }
        }
    }
    xs.extend(breakpoints.iter().cloned());
    xs.sort();
    xs.dedup();

    let mut table: Vec<(BigRational, Vec<BigRational>, bool)> = Vec::with_capacity(xs.len());
    for x in xs {
        let w = CohomClass::new(BigRational::one(), vec![x.clone()]);
        let row = curves
            .iter()
            .map(|tp| eval(tp, &w))
            .collect::<Result<Vec<_>, _>>()?;
        let is_bp = breakpoints.contains(&x);
        table.push((x, row, is_bp));
    }

    let rendered = match format {
        PlotFormat::Csv => render_csv(&ks, &table),
        PlotFormat::Svg => render_svg(&ks, &table),
    };
    match out {
        None => {
            print!("{rendered}");
        }
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn render_csv(ks: &[u32], table: &[(BigRational, Vec<BigRational>, bool)]) -> String {
    let mut out = String::from("x");
    for k in ks {
        out.push_str(&format!(",f{k}"));
    }
    out.push_str(",breakpoint\n");
    for (x, row, is_bp) in table {
        out.push_str(&x.to_string());
        for v in row {
            out.push(',');
            out.push_str(&v.to_string());
        }
        out.push_str(if *is_bp { ",1\n" } else { ",0\n" });
    }
    out
}

fn render_svg(ks: &[u32], table: &[(BigRational, Vec<BigRational>, bool)]) -> String {
    let (width, height, margin) = (640.0, 480.0, 48.0);
    let y_max = table
        .iter()
        .flat_map(|(_, row, _)| row.iter())
        .filter_map(|v| v.to_f64())
        .fold(1.0f64, f64::max);
    let px = |x: f64| margin + x * (width - 2.0 * margin);
    let py = |y: f64| height - margin - (y / y_max) * (height - 2.0 * margin);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width} {height}\" \
         font-family=\"monospace\" font-size=\"12\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n"
    ));
    // Axes.
    svg.push_str(&format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#555\"/>\n",
        px(0.0),
        py(0.0),
        px(1.0),
        py(0.0)
    ));
    svg.push_str(&format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#555\"/>\n",
        px(0.0),
        py(0.0),
        px(0.0),
        py(y_max)
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\">0</text><text x=\"{}\" y=\"{}\">1</text>\
         <text x=\"{}\" y=\"{}\">{y_max:.1}</text>\n",
        px(0.0) - 12.0,
        py(0.0) + 16.0,
        px(1.0) - 4.0,
        py(0.0) + 16.0,
        px(0.0) - 40.0,
        py(y_max) + 4.0,
    ));

    for (ci, k) in ks.iter().enumerate() {
        let color = COLORS[ci % COLORS.len()];
        let pts: Vec<String> = table
            .iter()
            .filter_map(|(x, row, _)| {
                let xf = x.to_f64()?;
                let yf = row[ci].to_f64()?;
                Some(format!("{:.2},{:.2}", px(xf), py(yf)))
            })
            .collect();
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            pts.join(" ")
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" fill=\"{color}\">f{k}</text>\n",
            width - margin + 6.0,
            py(0.0) - 14.0 * (ks.len() - ci) as f64,
        ));
        // Breakpoint markers.
        for (x, row, is_bp) in table {
            if *is_bp {
                if let (Some(xf), Some(yf)) = (x.to_f64(), row[ci].to_f64()) {
                    svg.push_str(&format!(
                        "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.2\" fill=\"{color}\"/>\n",
                        px(xf),
                        py(yf)
                    ));
                }
            }
        }
    }
    svg.push_str("</svg>\n");
    svg
}
