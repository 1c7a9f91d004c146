//! Dimension tables in text, CSV, JSON and LaTeX.
//!
//! A table varies exactly one parameter: the weight (at a fixed level) or the
//! level (at a fixed weight). Big integers are printed without separators.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

use crate::arith::is_prime;
use crate::dims::{GroupFamily, PrincipalLevel, Weight};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Full,
    Gamma0,
    Paramodular,
    Principal,
}

impl Family {
    pub fn with_level(self, level: Option<u64>) -> Result<GroupFamily> {
        let need = |level: Option<u64>| {
            level.ok_or_else(|| Error::InvalidRange(format!("family {self:?} requires a level")))
        };
        Ok(match self {
            Family::Full => {
                if let Some(l) = level {
                    return Err(Error::InvalidRange(format!(
                        "the full-level family takes no level, got {l}"
                    )));
                }
                GroupFamily::FullLevel
            }
            Family::Gamma0 => GroupFamily::Gamma0(need(level)?),
            Family::Paramodular => GroupFamily::Paramodular(need(level)?),
            Family::Principal => GroupFamily::Principal(PrincipalLevel::parse(need(level)?)?),
        })
    }

    fn group_symbol(self, level: &str) -> (String, String) {
        match self {
            Family::Full => ("Sp(4,Z)".into(), "\\Gamma".into()),
            Family::Gamma0 => (format!("Gamma_0({level})"), format!("\\Gamma_0({level})")),
            Family::Paramodular => (format!("K({level})"), format!("K({level})")),
            Family::Principal => (format!("Gamma({level})"), format!("\\Gamma({level})")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
    Latex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub family: Family,
    pub weights: Vec<u32>,
    /// Empty for the full-level family.
    pub levels: Vec<u64>,
    pub format: Format,
}

enum Axis {
    Weight,
    Level,
}

struct Rendered {
    axis_name: &'static str,
    text_label: String,
    latex_label: String,
    rows: Vec<(String, String)>,
}

impl TableSpec {
    fn validate(&self) -> Result<Axis> {
        if self.weights.is_empty() {
            return Err(Error::InvalidRange("empty weight range".into()));
        }
        match self.family {
            Family::Full if !self.levels.is_empty() => {
                return Err(Error::InvalidRange(
                    "the full-level family takes no level".into(),
                ))
            }
            Family::Full => return Ok(Axis::Weight),
            _ if self.levels.is_empty() => {
                return Err(Error::InvalidRange("empty level range".into()))
            }
            _ => {}
        }
        match (self.weights.len() > 1, self.levels.len() > 1) {
            (true, true) => Err(Error::InvalidRange(
                "a table varies either the weight or the level, not both".into(),
            )),
            (_, true) => Ok(Axis::Level),
            _ => Ok(Axis::Weight),
        }
    }

    fn compute(&self) -> Result<Rendered> {
        let axis = self.validate()?;
        let mut rows = Vec::new();
        let (axis_name, k_label, level_label) = match axis {
            Axis::Weight => {
                let level = self.levels.first().copied();
                let family = self.family.with_level(level)?;
                for &k in &self.weights {
                    rows.push((
                        k.to_string(),
                        family.dimension(Weight::new(k)?)?.to_string(),
                    ));
                }
                (
                    "k",
                    "k".to_string(),
                    level.map(|l| l.to_string()).unwrap_or_default(),
                )
            }
            Axis::Level => {
                let k = Weight::new(self.weights[0])?;
                for &level in &self.levels {
                    let family = self.family.with_level(Some(level))?;
                    rows.push((level.to_string(), family.dimension(k)?.to_string()));
                }
                let name = if self.levels.iter().all(|&l| is_prime(l)) {
                    "p"
                } else {
                    "N"
                };
                (name, k.to_string(), name.to_string())
            }
        };
        let (text_group, latex_group) = self.family.group_symbol(&level_label);
        Ok(Rendered {
            axis_name,
            text_label: format!("dim S_{k_label}({text_group})"),
            latex_label: format!("\\dim S_{{{k_label}}}({latex_group})"),
            rows,
        })
    }

    pub fn emit(&self) -> Result<String> {
        let table = self.compute()?;
        Ok(match self.format {
            Format::Text => render_text(&table),
            Format::Csv => render_csv(&table),
            Format::Json => render_json(&table),
            Format::Latex => render_latex(&table),
        })
    }
}

pub fn emit_table(spec: &TableSpec) -> Result<String> {
    spec.emit()
}

fn render_text(t: &Rendered) -> String {
    let label_width = t.text_label.len().max(t.axis_name.len());
    let widths: Vec<usize> = t.rows.iter().map(|(a, d)| a.len().max(d.len())).collect();
    let mut out = String::new();
    let _ = write!(out, "{:<label_width$}", t.axis_name);
    for ((a, _), w) in t.rows.iter().zip(&widths) {
        let _ = write!(out, "  {a:>w$}");
    }
    out.push('\n');
    let _ = write!(out, "{:<label_width$}", t.text_label);
    for ((_, d), w) in t.rows.iter().zip(&widths) {
        let _ = write!(out, "  {d:>w$}");
    }
    out.push('\n');
    out
}

fn render_csv(t: &Rendered) -> String {
    let mut out = format!("{},dim\n", t.axis_name);
    for (a, d) in &t.rows {
        let _ = writeln!(out, "{a},{d}");
    }
    out
}

fn number(digits: &str) -> Value {
    Value::Number(Number::from_str(digits).expect("decimal integer"))
}

fn render_json(t: &Rendered) -> String {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|(a, d)| {
            let mut obj = Map::new();
            obj.insert(t.axis_name.to_string(), number(a));
            obj.insert("dim".to_string(), number(d));
            Value::Object(obj)
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&Value::Array(rows)).expect("json");
    out.push('\n');
    out
}

fn render_latex(t: &Rendered) -> String {
    let cols = "|c".repeat(t.rows.len());
    let mut out = format!("\\begin{{tabular}}{{|c|{cols}|}}\n\\hline\n");
    let axis: Vec<&str> = t.rows.iter().map(|(a, _)| a.as_str()).collect();
    let dims: Vec<&str> = t.rows.iter().map(|(_, d)| d.as_str()).collect();
    let _ = writeln!(out, "${}$ & {} \\\\", t.axis_name, axis.join(" & "));
    out.push_str("\\hline\n\\hline\n");
    let _ = writeln!(out, "${}$ & {} \\\\", t.latex_label, dims.join(" & "));
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, weights: Vec<u32>, levels: Vec<u64>, format: Format) -> TableSpec {
        TableSpec {
            family,
            weights,
            levels,
            format,
        }
    }

    #[test]
    fn principal_weight4_csv() {
        let s = spec(
            Family::Principal,
            vec![4],
            vec![2, 3, 5, 7, 11, 13, 17],
            Format::Csv,
        );
        assert_eq!(
            s.emit().unwrap(),
            "p,dim\n2,0\n3,15\n5,5655\n7,199500\n11,20683575\n13,112567455\n17,1687834800\n"
        );
    }

    #[test]
    fn full_level_text() {
        let s = spec(Family::Full, (10..=20).collect(), vec![], Format::Text);
        let out = s.emit().unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        let values: Vec<&str> = lines[1].split_whitespace().skip(2).collect();
        assert_eq!(
            values,
            ["1", "0", "1", "0", "1", "0", "2", "0", "2", "0", "3"]
        );
        assert!(lines[1].starts_with("dim S_k(Sp(4,Z))"));
    }

    #[test]
    fn empty_ranges_rejected() {
        assert!(spec(Family::Full, vec![], vec![], Format::Text)
            .emit()
            .is_err());
        assert!(spec(Family::Gamma0, vec![4], vec![], Format::Text)
            .emit()
            .is_err());
        assert!(
            spec(Family::Principal, vec![4, 5], vec![3, 5], Format::Text)
                .emit()
                .is_err()
        );
    }

    #[test]
    fn json_rows_are_numbers() {
        let s = spec(Family::Principal, (4..=5).collect(), vec![5], Format::Json);
        let v: Value = serde_json::from_str(&s.emit().unwrap()).unwrap();
        assert_eq!(v[0]["k"], 4);
        assert_eq!(v[0]["dim"], 5655);
        assert_eq!(v[1]["dim"], 18980);
    }

    #[test]
    fn json_keeps_big_integers_exact() {
        let s = spec(Family::Principal, vec![20], vec![97], Format::Json);
        let out = s.emit().unwrap();
        let dim = crate::dims::dim_principal_prime(Weight::new(20).unwrap(), 97).unwrap();
        assert!(*dim.value() > num::BigUint::from(1u64 << 53));
        assert!(out.contains(&format!("\"dim\": {dim}")));
    }

    #[test]
    fn latex_layout() {
        let s = spec(
            Family::Gamma0,
            vec![4],
            vec![2, 3, 5, 7, 11, 13],
            Format::Latex,
        );
        let out = s.emit().unwrap();
        assert!(out.starts_with("\\begin{tabular}{|c||c|c|c|c|c|c|}"));
        assert!(out.contains("$p$ & 2 & 3 & 5 & 7 & 11 & 13 \\\\"));
        assert!(out.contains("$\\dim S_{4}(\\Gamma_0(p))$ & 0 & 1 & 1 & 3 & 7 & 11 \\\\"));
        assert!(out.ends_with("\\end{tabular}\n"));
    }

    #[test]
    fn deterministic() {
        let s = spec(
            Family::Paramodular,
            vec![4],
            vec![2, 3, 5, 7, 11, 13, 17, 19],
            Format::Text,
        );
        assert_eq!(s.emit().unwrap(), s.emit().unwrap());
    }

    #[test]
    fn domain_errors_propagate() {
        let s = spec(Family::Gamma0, vec![4], vec![13, 17], Format::Csv);
        assert_eq!(s.emit(), Err(Error::NotTabulated { k: 4, level: 17 }));
    }
}
