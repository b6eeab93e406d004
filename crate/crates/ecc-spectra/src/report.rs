//! Report rendering: the JSON schema, CSV summaries and the text view.
//!
//! Exact values (polynomial coefficients) are serialized as decimal strings
//! so they never pass through floating point; floats are rounded to 12
//! significant digits.

use serde_json::{json, Value};

use crate::exact::IntPolynomial;
use crate::theorems::Analysis;

/// Rounds to 12 significant digits via a decimal round-trip.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// JSON report for one analysis:
/// `{ graph_id, n, m, class: { is_clique_tree, in_ct, diameter, radius,
/// center }, char_poly: [decimal strings, lowest degree first],
/// inertia_exact: [p, m, z], spectrum: [floats], symmetric, checks: [{ id,
/// applicable, passed, witness }] }`.
pub fn to_json(a: &Analysis) -> Value {
    let coeffs: Vec<String> = a
        .char_poly
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect();
    let spectrum: Vec<Value> = a
        .spectrum
        .values()
        .iter()
        .map(|&x| json!(round_sig12(x)))
        .collect();
    let checks: Vec<Value> = a
        .checks
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "applicable": c.applicable,
                "passed": c.passed,
                "witness": c.witness,
            })
        })
        .collect();
    json!({
        "graph_id": a.graph_id,
        "n": a.n,
        "m": a.m,
        "class": {
            "is_clique_tree": a.class.is_clique_tree,
            "in_ct": a.class.in_ct,
            "diameter": a.class.diameter,
            "radius": a.class.radius,
            "center": a.class.center,
        },
        "char_poly": coeffs,
        "inertia_exact": [a.inertia.n_plus, a.inertia.n_minus, a.inertia.n_zero],
        "spectrum": spectrum,
        "symmetric": a.symmetric,
        "checks": checks,
    })
}

pub fn csv_header() -> &'static str {
    "graph_id,n,m,in_ct,diameter,n_plus,n_minus,n_zero,symmetric,checks_applicable,checks_passed,failed_checks"
}

pub fn to_csv_row(a: &Analysis) -> String {
    let failed: Vec<&str> = a.failed_checks().map(|c| c.id).collect();
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        a.graph_id,
        a.n,
        a.m,
        a.class
            .in_ct
            .map_or_else(|| "?".into(), |b| b.to_string()),
        a.class
            .diameter
            .map_or_else(|| "?".into(), |d| d.to_string()),
        a.inertia.n_plus,
        a.inertia.n_minus,
        a.inertia.n_zero,
        a.symmetric,
        a.applicable_count(),
        a.passed_count(),
        failed.join(";"),
    )
}

/// Known factored forms of the fixture characteristic polynomials. The
/// expansions are rebuilt from the factors at runtime and matched against
/// the sign-normalized computed polynomial.
fn golden_factorizations() -> Vec<(IntPolynomial, &'static str)> {
    let x_pow = |k: usize| {
        let mut c = vec![0i64; k + 1];
        c[k] = 1;
        IntPolynomial::from_i64_coeffs(&c)
    };
    let poly = IntPolynomial::from_i64_coeffs;
    let product = |factors: &[IntPolynomial]| {
        factors
            .iter()
            .fold(IntPolynomial::from_i64_coeffs(&[1]), |acc, f| acc.mul(f))
    };
    vec![
        (
            product(&[x_pow(7), poly(&[320, 0, -216, 0, 1])]),
            "x^7 * (x^4 - 216*x^2 + 320)",
        ),
        (
            product(&[x_pow(7), poly(&[720, -360, -199, 0, 1])]),
            "x^7 * (x^4 - 199*x^2 - 360*x + 720)",
        ),
        (
            product(&[
                x_pow(11),
                poly(&[-2, 1]),
                poly(&[18, 1]),
                poly(&[-356, -16, 1]),
            ]),
            "x^11 * (x - 2) * (x + 18) * (x^2 - 16*x - 356)",
        ),
        (
            product(&[
                x_pow(3),
                poly(&[-1536, 1728, 528, -588, -147, 0, 1]),
            ]),
            "x^3 * (x^6 - 147*x^4 - 588*x^3 + 528*x^2 + 1728*x - 1536)",
        ),
        (
            product(&[
                x_pow(1),
                poly(&[-1, 1]),
                poly(&[-1, 1]),
                poly(&[4, 1]),
                poly(&[4, 1]),
                poly(&[288, -144, -106, -6, 1]),
            ]),
            "x * (x - 1)^2 * (x + 4)^2 * (x^4 - 6*x^3 - 106*x^2 - 144*x + 288)",
        ),
    ]
}

/// Factored rendering when the expanded polynomial matches a stored golden
/// factorization (up to the sign of the leading coefficient).
pub fn factored_display(p: &IntPolynomial) -> Option<String> {
    let normalized = p.sign_normalized();
    golden_factorizations()
        .into_iter()
        .find(|(expansion, _)| *expansion == normalized)
        .map(|(_, display)| display.to_string())
}

/// Multi-line human-readable report. The polynomial prints factored only if
/// it matches a stored golden factorization; eigenvalues are grouped by
/// multiplicity at display precision, with the zero multiplicity taken from
/// the exact count.
pub fn to_text(a: &Analysis) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}: n={} m={}\n", a.graph_id, a.n, a.m));
    let class_line = match (a.class.is_clique_tree, a.class.in_ct) {
        (Some(ct), Some(in_ct)) => format!(
            "  class: {}{}, diameter {} ({}), radius {}, center {:?}\n",
            if ct { "clique tree" } else { "not a clique tree" },
            if in_ct {
                ", in the supported class"
            } else {
                ", outside the supported class"
            },
            a.class.diameter.unwrap_or(0),
            if a.class.diameter.unwrap_or(0) % 2 == 1 {
                "odd"
            } else {
                "even"
            },
            a.class.radius.unwrap_or(0),
            a.class.center.clone().unwrap_or_default(),
        ),
        _ => format!(
            "  class: raw matrix, implied diameter {}\n",
            a.class
                .diameter
                .map_or_else(|| "?".into(), |d| d.to_string())
        ),
    };
    out.push_str(&class_line);
    let poly_line = match factored_display(&a.char_poly) {
        Some(f) => f,
        None => a.char_poly.display_expanded(),
    };
    out.push_str(&format!("  char poly: {poly_line}\n"));
    out.push_str(&format!(
        "  inertia: {}  rank {}\n",
        a.inertia,
        a.inertia.rank()
    ));
    let mut groups: Vec<String> = Vec::new();
    for (value, count) in a.spectrum.clustered(1e-6) {
        let shown = round_sig12(value);
        let is_zero_cluster = shown.abs() <= 1e-6;
        let (value_str, mult) = if is_zero_cluster {
            ("0".to_string(), a.inertia.n_zero)
        } else {
            (format!("{shown}"), count)
        };
        if mult > 1 {
            groups.push(format!("{value_str}^({mult})"));
        } else {
            groups.push(value_str);
        }
    }
    out.push_str(&format!("  spectrum: {{{}}}\n", groups.join(", ")));
    out.push_str(&format!("  symmetric: {}\n", a.symmetric));
    out.push_str(&format!(
        "  checks: {} applicable, {} passed\n",
        a.applicable_count(),
        a.passed_count()
    ));
    for c in &a.checks {
        let status = match (c.applicable, c.passed) {
            (false, _) => "skip".to_string(),
            (true, Some(true)) => "pass".to_string(),
            _ => "FAIL".to_string(),
        };
        match &c.witness {
            Some(w) => out.push_str(&format!("    [{status}] {}: {w}\n", c.id)),
            None => out.push_str(&format!("    [{status}] {}\n", c.id)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::theorems::{verify_graph, verify_matrix, AnalysisOptions};

    #[test]
    fn json_schema_keys_and_decimal_strings() {
        let g = gen::fixture_graph("g1").unwrap();
        let a = verify_graph("g1", &g, &AnalysisOptions::default()).unwrap();
        let v = to_json(&a);
        assert_eq!(v["graph_id"], "g1");
        assert_eq!(v["n"], 11);
        assert_eq!(v["m"], 15);
        assert_eq!(v["inertia_exact"], json!([2, 2, 7]));
        assert_eq!(v["class"]["diameter"], 3);
        // lowest degree first, decimal strings
        let coeffs = v["char_poly"].as_array().unwrap();
        assert_eq!(coeffs.len(), 12);
        assert_eq!(coeffs[7], "320");
        assert_eq!(coeffs[9], "-216");
        assert_eq!(coeffs[11], "1");
        assert_eq!(v["symmetric"], true);
        assert_eq!(v["checks"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn matrix_reports_have_null_class_fields() {
        let gen::Fixture::Matrix(m) = gen::fixture("h1_matrix").unwrap() else {
            panic!()
        };
        let a = verify_matrix("h1", &m, &AnalysisOptions::default()).unwrap();
        let v = to_json(&a);
        assert!(v["class"]["is_clique_tree"].is_null());
        assert_eq!(v["class"]["diameter"], 3);
        assert_eq!(v["inertia_exact"], json!([3, 3, 3]));
    }

    #[test]
    fn golden_factorizations_match_fixture_polynomials() {
        for (name, expect) in [
            ("g1", "x^7 * (x^4 - 216*x^2 + 320)"),
            ("g2", "x^7 * (x^4 - 199*x^2 - 360*x + 720)"),
            ("g3", "x^11 * (x - 2) * (x + 18) * (x^2 - 16*x - 356)"),
        ] {
            let g = gen::fixture_graph(name).unwrap();
            let a = verify_graph(name, &g, &AnalysisOptions::default()).unwrap();
            assert_eq!(factored_display(&a.char_poly).as_deref(), Some(expect));
        }
        let gen::Fixture::Matrix(m) = gen::fixture("h2_matrix").unwrap() else {
            panic!()
        };
        let a = verify_matrix("h2", &m, &AnalysisOptions::default()).unwrap();
        assert_eq!(
            factored_display(&a.char_poly).as_deref(),
            Some("x * (x - 1)^2 * (x + 4)^2 * (x^4 - 6*x^3 - 106*x^2 - 144*x + 288)")
        );
    }

    #[test]
    fn unknown_polynomials_print_expanded() {
        let g = gen::clique_path(&[3, 3, 3]).unwrap();
        let a = verify_graph("cp", &g, &AnalysisOptions::default()).unwrap();
        let text = to_text(&a);
        assert!(text.contains("char poly: "));
        assert!(factored_display(&a.char_poly).is_none());
    }

    #[test]
    fn csv_row_shape() {
        let g = gen::fixture_graph("g1").unwrap();
        let a = verify_graph("g1", &g, &AnalysisOptions::default()).unwrap();
        let row = to_csv_row(&a);
        assert!(row.starts_with("g1,11,15,true,3,2,2,7,true,"));
        assert_eq!(row.split(',').count(), csv_header().split(',').count());
    }

    #[test]
    fn rounding_keeps_twelve_significant_digits() {
        assert_eq!(round_sig12(1.0), 1.0);
        assert_eq!(round_sig12(0.0), 0.0);
        let x = 14.832_398_741_237_654;
        let r = round_sig12(x);
        assert!((r - x).abs() < 1e-10);
        assert_eq!(round_sig12(r), r);
    }
}
