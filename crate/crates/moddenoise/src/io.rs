//! Text formats: edge lists, signal/sample/spectrum/sweep/bound CSV and the
//! JSON configs. All parsers are total over arbitrary input (they return
//! errors, never panic), since they face untrusted files.

use num_complex::Complex64;

use crate::bounds::BoundQuery;
use crate::error::{Error, Result};
use crate::experiment::{ExperimentConfig, SweepResult};
use crate::graph::Graph;

/// Cap on the vertex count accepted from an edge-list file, to keep parsing
/// of hostile inputs from allocating unboundedly.
pub const MAX_EDGE_LIST_VERTICES: usize = 1_000_000;

/// Full-precision decimal with 17 significant digits; round-trips f64
/// exactly, so downstream comparisons are stable.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Parses an edge-list document: first line `n`, then one `i j` pair per
/// line, 1-based, whitespace-separated. Blank lines and `#` comments are
/// skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (lineno, first) = lines
        .next()
        .ok_or_else(|| Error::Validation("edge list is empty".into()))?;
    let n: usize = first.parse().map_err(|_| {
        Error::Validation(format!("line {lineno}: expected a vertex count, got `{first}`"))
    })?;
    if n > MAX_EDGE_LIST_VERTICES {
        return Err(Error::Validation(format!(
            "vertex count {n} exceeds the limit {MAX_EDGE_LIST_VERTICES}"
        )));
    }

    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let mut parts = line.split_whitespace();
        let (a, b) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Validation(format!(
                    "line {lineno}: expected `i j`, got `{line}`"
                )))
            }
        };
        let i: usize = a.parse().map_err(|_| {
            Error::Validation(format!("line {lineno}: bad vertex `{a}`"))
        })?;
        let j: usize = b.parse().map_err(|_| {
            Error::Validation(format!("line {lineno}: bad vertex `{b}`"))
        })?;
        if i == 0 || j == 0 {
            return Err(Error::Validation(format!(
                "line {lineno}: vertices are 1-based, got {i} {j}"
            )));
        }
        edges.push((i - 1, j - 1));
    }
    Graph::custom(n, &edges)
}

/// Renders a graph in the edge-list format.
pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", graph.n()));
    for &(i, j) in graph.edges() {
        out.push_str(&format!("{} {}\n", i + 1, j + 1));
    }
    out
}

/// Renders eigenvalues as `j,lambda_j` rows, descending-index order.
pub fn write_spectrum_csv(eigenvalues: &[f64]) -> String {
    let mut out = String::from("j,lambda_j\n");
    for (idx, lambda) in eigenvalues.iter().enumerate() {
        out.push_str(&format!("{},{}\n", idx + 1, format_float(*lambda)));
    }
    out
}

/// Renders a complex signal as `i,re,im` rows.
pub fn write_signal_csv(values: &[Complex64]) -> String {
    let mut out = String::from("i,re,im\n");
    for (idx, v) in values.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{}\n",
            idx + 1,
            format_float(v.re),
            format_float(v.im)
        ));
    }
    out
}

/// Parses `i,re,im` rows (header optional). Indices must be 1-based and
/// sequential.
pub fn parse_signal_csv(text: &str) -> Result<Vec<Complex64>> {
    let mut values = Vec::new();
    let mut expected = 1usize;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        if cells.len() != 3 {
            return Err(Error::Validation(format!(
                "line {lineno}: expected `i,re,im`, got `{line}`"
            )));
        }
        if lineno == 1 && cells[0].parse::<usize>().is_err() {
            continue; // header
        }
        let i: usize = cells[0].parse().map_err(|_| {
            Error::Validation(format!("line {lineno}: bad index `{}`", cells[0]))
        })?;
        if i != expected {
            return Err(Error::Validation(format!(
                "line {lineno}: expected index {expected}, got {i}"
            )));
        }
        let re: f64 = cells[1].parse().map_err(|_| {
            Error::Validation(format!("line {lineno}: bad real part `{}`", cells[1]))
        })?;
        let im: f64 = cells[2].parse().map_err(|_| {
            Error::Validation(format!("line {lineno}: bad imaginary part `{}`", cells[2]))
        })?;
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::Validation(format!(
                "line {lineno}: non-finite entry"
            )));
        }
        values.push(Complex64::new(re, im));
        expected += 1;
    }
    if values.is_empty() {
        return Err(Error::Validation("signal file has no data rows".into()));
    }
    Ok(values)
}

/// Renders real samples as `i,x,f` rows.
pub fn write_samples_csv(grid: &[f64], samples: &[f64]) -> Result<String> {
    if grid.len() != samples.len() {
        return Err(Error::SizeMismatch(format!(
            "grid has {} points, samples {}",
            grid.len(),
            samples.len()
        )));
    }
    let mut out = String::from("i,x,f\n");
    for (idx, (x, f)) in grid.iter().zip(samples).enumerate() {
        out.push_str(&format!(
            "{},{},{}\n",
            idx + 1,
            format_float(*x),
            format_float(*f)
        ));
    }
    Ok(out)
}

/// Renders an aggregated sweep as
/// `sigma,method,mean_mse,stderr_mse,mean_mu_star,trials,gamma` rows;
/// the mu column is empty for series without a multiplier.
pub fn write_sweep_csv(result: &SweepResult) -> String {
    let mut out = String::from("sigma,method,mean_mse,stderr_mse,mean_mu_star,trials,gamma\n");
    for row in &result.rows {
        let mu = row.mean_mu_star.map(format_float).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            format_float(row.sigma),
            row.method,
            format_float(row.mean_mse),
            format_float(row.stderr_mse),
            mu,
            row.trials,
            format_float(row.gamma)
        ));
    }
    out
}

/// Renders bound-curve rows as `sigma,bound_value,condition_ok`.
pub fn write_bounds_csv(rows: &[(f64, f64, bool)]) -> String {
    let mut out = String::from("sigma,bound_value,condition_ok\n");
    for (sigma, value, ok) in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            format_float(*sigma),
            format_float(*value),
            ok
        ));
    }
    out
}

/// Parses and validates a sweep configuration document.
pub fn parse_experiment_config(text: &str) -> Result<ExperimentConfig> {
    let cfg: ExperimentConfig = serde_json::from_str(text)?;
    cfg.validate()?;
    Ok(cfg)
}

/// Serializes a sweep configuration for exact replay.
pub fn write_experiment_config(cfg: &ExperimentConfig) -> Result<String> {
    Ok(serde_json::to_string_pretty(cfg)?)
}

/// Parses and validates a bound-query document.
pub fn parse_bound_query(text: &str) -> Result<BoundQuery> {
    let q: BoundQuery = serde_json::from_str(text)?;
    q.validate()?;
    Ok(q)
}

/// Parses and validates a bound-curve request document.
pub fn parse_bound_curve_request(text: &str) -> Result<crate::bounds::BoundCurveRequest> {
    let req: crate::bounds::BoundCurveRequest = serde_json::from_str(text)?;
    req.query.validate()?;
    Ok(req)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let text = "4\n1 2\n2 3\n3 4\n4 1\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.max_degree(), 2);
        // edges come back canonicalized (i < j, sorted)
        let rendered = write_edge_list(&g);
        assert_eq!(rendered, "4\n1 2\n1 4\n2 3\n3 4\n");
        let again = parse_edge_list(&rendered).unwrap();
        assert_eq!(again.edges(), g.edges());
    }

    #[test]
    fn edge_list_accepts_comments_and_blank_lines() {
        let g = parse_edge_list("# a square\n\n4\n1 2\n2 3\n# middle\n3 4\n4 1\n").unwrap();
        assert_eq!(g.edges().len(), 4);
    }

    #[test]
    fn edge_list_rejects_garbage() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("abc\n").is_err());
        assert!(parse_edge_list("3\n1\n").is_err());
        assert!(parse_edge_list("3\n0 1\n").is_err());
        assert!(parse_edge_list("3\n1 2 3\n").is_err());
        assert!(parse_edge_list("99999999999999999999\n").is_err());
        // valid syntax, disconnected graph
        assert!(parse_edge_list("3\n1 2\n").is_err());
    }

    #[test]
    fn signal_csv_round_trip() {
        let values = vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(-0.25, 1.5e-17),
            Complex64::new(0.0, -1.0),
        ];
        let text = write_signal_csv(&values);
        let parsed = parse_signal_csv(&text).unwrap();
        assert_eq!(parsed, values);
    }

    #[test]
    fn signal_csv_rejects_bad_rows() {
        assert!(parse_signal_csv("i,re,im\n").is_err()); // no data
        assert!(parse_signal_csv("1,0.5\n").is_err()); // short row
        assert!(parse_signal_csv("2,1.0,0.0\n").is_err()); // wrong index
        assert!(parse_signal_csv("1,nan,0.0\n").is_err()); // non-finite
    }

    #[test]
    fn float_format_is_17_significant_digits_and_round_trips() {
        for x in [0.1, 2.0 / 3.0, 1e-300, 123456.789, f64::MIN_POSITIVE] {
            let s = format_float(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
        assert_eq!(format_float(1.0), "1.0000000000000000e0");
    }

    #[test]
    fn spectrum_csv_shape() {
        let text = write_spectrum_csv(&[3.0, 1.0, 0.0]);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("j,lambda_j"));
        assert!(lines.next().unwrap().starts_with("1,3.0"));
    }

    #[test]
    fn config_json_round_trip() {
        let text = r#"{
            "n": 16,
            "function": "f2",
            "graph_family": "path",
            "sigma_grid": [0.01, 0.02],
            "trials": 2,
            "gamma_rule": {"rule": "linear", "c": 400.0},
            "base_seed": 7,
            "methods": ["ucqp", "trs"]
        }"#;
        let cfg = parse_experiment_config(text).unwrap();
        let rendered = write_experiment_config(&cfg).unwrap();
        let back = parse_experiment_config(&rendered).unwrap();
        assert_eq!(cfg, back);
    }

    #[test]
    fn config_json_rejects_invalid() {
        assert!(parse_experiment_config("{}").is_err());
        assert!(parse_experiment_config("not json").is_err());
    }

    #[test]
    fn bound_query_json() {
        let text = r#"{
            "n": 500, "delta": 2, "b_n": 0.5, "sigma": 0.05,
            "lambda_bar": 0.01, "lambda_min": 1e-5, "lambda_1": 4.0,
            "low_size": 7, "epsilon": 0.5
        }"#;
        let q = parse_bound_query(text).unwrap();
        assert_eq!(q.n, 500);
        assert_eq!(q.epsilon, Some(0.5));
        assert!(parse_bound_query(r#"{"n": 1}"#).is_err());
    }
}
