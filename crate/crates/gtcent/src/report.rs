//! Result reporting: per-node scores with provenance, emitted as CSV or
//! JSON.

use serde::Serialize;

/// Per-node scores plus the provenance needed to reproduce them.
#[derive(Debug, Clone, Serialize)]
pub struct CentralityReport {
    pub measure: String,
    pub parameters: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Scores indexed like the graph's nodes.
    pub scores: Vec<f64>,
}

impl CentralityReport {
    pub fn new(measure: impl Into<String>, scores: Vec<f64>) -> Self {
        CentralityReport {
            measure: measure.into(),
            parameters: Vec::new(),
            seed: None,
            scores: Vec::new(),
        }
        .with_scores(scores)
    }

    fn with_scores(mut self, scores: Vec<f64>) -> Self {
        self.scores = scores;
        self
    }

    pub fn param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.parameters.push((key.into(), value.to_string()));
        self
    }

    pub fn seeded(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// Rows sorted by descending score, ties broken by label. Scores are
    /// compared at the printed 12-digit precision so equal-looking rows
    /// order the same way no matter which algorithm produced them.
    pub fn ranked<'l>(&self, labels: &'l [String]) -> Vec<(&'l str, f64)> {
        let mut rows: Vec<(&str, f64, f64)> = (0..self.scores.len())
            .map(|v| {
                let rounded: f64 = format_sig12(self.scores[v])
                    .parse()
                    .unwrap_or(self.scores[v]);
                (labels[v].as_str(), self.scores[v], rounded)
            })
            .collect();
        rows.sort_by(|a, b| {
            b.2.partial_cmp(&a.2)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then_with(|| a.0.cmp(b.0))
        });
        rows.into_iter().map(|(l, s, _)| (l, s)).collect()
    }

    /// `node,score` rows at 12 significant digits.
    pub fn to_csv(&self, labels: &[String]) -> String {
        let mut out = String::from("node,score\n");
        for (label, score) in self.ranked(labels) {
            out.push_str(&format!("{},{}\n", label, format_sig12(score)));
        }
        out
    }

    pub fn to_json(&self, labels: &[String]) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            node: &'a str,
            score: f64,
        }
        #[derive(Serialize)]
        struct Meta<'a> {
            measure: &'a str,
            parameters: &'a [(String, String)],
            #[serde(skip_serializing_if = "Option::is_none")]
            seed: Option<u64>,
            version: &'a str,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            metadata: Meta<'a>,
            scores: Vec<Row<'a>>,
        }
        let doc = Doc {
            metadata: Meta {
                measure: &self.measure,
                parameters: &self.parameters,
                seed: self.seed,
                version: env!("CARGO_PKG_VERSION"),
            },
            scores: self
                .ranked(labels)
                .into_iter()
                .map(|(node, score)| Row { node, score })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }
}

/// Formats a float with 12 significant digits, in plain decimal notation
/// for moderate magnitudes, scientific otherwise.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        // Trailing zeros carry no information; strip them.
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{x:.11e}")
    }
}
