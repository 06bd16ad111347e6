use serde::Serialize;

use super::character::{CharacterTable, Provenance};
use crate::exact_arith::Cyclotomic;

#[derive(Serialize)]
struct ClassJson {
    label: String,
    size: usize,
    representative: usize,
}

#[derive(Serialize)]
struct RowJson {
    name: String,
    dim: usize,
    values: Vec<String>,
    provenance: Provenance,
}

#[derive(Serialize)]
struct TableJson {
    group_order: usize,
    classes: Vec<ClassJson>,
    rows: Vec<RowJson>,
}

/// Column header in the `2[ι]` style: class size (omitted when 1) and representative.
pub fn class_header(size: usize, label: &str) -> String {
    if size == 1 {
        format!("[{label}]")
    } else {
        format!("{size}[{label}]")
    }
}

fn width(s: &str) -> usize {
    s.chars().filter(|c| !('\u{300}'..='\u{36f}').contains(c)).count()
}

fn pad(s: &str, w: usize) -> String {
    format!("{}{s}", " ".repeat(w.saturating_sub(width(s))))
}

/// Replaces ASCII minus signs by U+2212 for display.
fn pretty(v: &Cyclotomic) -> String {
    v.to_string().replace('-', "−")
}

impl CharacterTable {
    fn headers(&self) -> Vec<String> {
        let g = self.group();
        self.classes()
            .iter()
            .map(|c| class_header(c.size(), g.label(c.representative)))
            .collect()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let g = self.group();
        let dims = self.dims();
        let doc = TableJson {
            group_order: g.order(),
            classes: self
                .classes()
                .iter()
                .map(|c| ClassJson {
                    label: g.label(c.representative).to_string(),
                    size: c.size(),
                    representative: c.representative.index(),
                })
                .collect(),
            rows: self
                .rows()
                .iter()
                .enumerate()
                .map(|(k, r)| RowJson {
                    name: self.row_names()[k].clone(),
                    dim: dims[k],
                    values: r.values().iter().map(|v| v.to_string()).collect(),
                    provenance: self.provenance()[k],
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    /// Aligned plain-text table with `size[rep]` column headers.
    pub fn to_text(&self) -> String {
        let headers = self.headers();
        let cells: Vec<Vec<String>> = self
            .rows()
            .iter()
            .map(|r| r.values().iter().map(pretty).collect())
            .collect();
        let name_w = self.row_names().iter().map(|s| width(s)).max().unwrap_or(0);
        let col_w: Vec<usize> = (0..headers.len())
            .map(|j| {
                cells
                    .iter()
                    .map(|r| width(&r[j]))
                    .chain([width(&headers[j])])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        out.push_str(&" ".repeat(name_w));
        for (h, w) in headers.iter().zip(&col_w) {
            out.push_str("  ");
            out.push_str(&pad(h, *w));
        }
        out.push('\n');
        for (name, row) in self.row_names().iter().zip(&cells) {
            out.push_str(&pad(name, name_w));
            for (v, w) in row.iter().zip(&col_w) {
                out.push_str("  ");
                out.push_str(&pad(v, *w));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let quote = |s: &str| {
            if s.contains([',', '"']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        let mut out = String::from("character");
        for h in self.headers() {
            out.push(',');
            out.push_str(&quote(&h));
        }
        out.push('\n');
        for (name, row) in self.row_names().iter().zip(self.rows()) {
            out.push_str(&quote(name));
            for v in row.values() {
                out.push(',');
                out.push_str(&quote(&v.to_string()));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let g = self.group();
        let mut out = String::new();
        out.push_str(&format!("\\begin{{tabular}}{{c|{}}}\n", "c".repeat(self.classes().len())));
        let heads: Vec<String> = self
            .classes()
            .iter()
            .map(|c| {
                let l = latex_label(g.label(c.representative));
                if c.size() == 1 {
                    format!("$[{l}]$")
                } else {
                    format!("${}[{l}]$", c.size())
                }
            })
            .collect();
        out.push_str(&format!(" & {} \\\\\n\\hline\n", heads.join(" & ")));
        for (name, row) in self.row_names().iter().zip(self.rows()) {
            let vals: Vec<String> = row.values().iter().map(|v| format!("${}$", latex_value(v))).collect();
            out.push_str(&format!("${}$ & {} \\\\\n", latex_label(name), vals.join(" & ")));
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

fn latex_value(v: &Cyclotomic) -> String {
    let s = v.to_string();
    if let Some(rest) = s.strip_prefix("E(") {
        // E(n)^k notation from the general printer
        return format!("\\zeta_{{{}}}", rest.replace(")^", "}^{").replace(')', "}"));
    }
    s
}

/// Maps the Greek letters, hats and minus signs used in labels to LaTeX.
pub fn latex_label(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        let hat = chars.peek() == Some(&'\u{302}');
        if hat {
            chars.next();
        }
        let piece = match c {
            'ι' => "\\iota".to_string(),
            'γ' => "\\gamma".to_string(),
            'κ' => "\\kappa".to_string(),
            'χ' => "\\chi_".to_string(),
            'φ' => "\\varphi_".to_string(),
            'Θ' => "\\Theta".to_string(),
            'Î' => "\\hat{I}".to_string(),
            'Ĉ' => "\\hat{C}".to_string(),
            '−' => "-".to_string(),
            other => other.to_string(),
        };
        if hat {
            out.push_str(&format!("\\hat{{{}}}", piece.trim_end_matches('_')));
        } else {
            out.push_str(&piece);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::generate_group;
    use crate::repr_theory::character_table;

    #[test]
    fn renders_klein_table() {
        let g = generate_group(&[1u8, 2u8], |a, b| a ^ b, |a| a.to_string()).unwrap().0;
        let t = character_table(&g).unwrap();
        let text = t.to_text();
        assert!(text.starts_with("    [0]  [1]  [2]  [3]\n"));
        assert!(text.contains("χ2"));
        assert!(text.contains('−'));
        let csv = t.to_csv();
        assert_eq!(csv.lines().next().unwrap(), "character,[0],[1],[2],[3]");
        let json = t.to_json_value();
        assert_eq!(json["rows"].as_array().unwrap().len(), 4);
        assert_eq!(json["rows"][0]["provenance"]["method"], "dixon");
        assert!(t.to_latex().contains("\\chi_1"));
    }

    #[test]
    fn latex_labels() {
        assert_eq!(latex_label("−ι"), "-\\iota");
        assert_eq!(latex_label("Θ̂"), "\\hat{\\Theta}");
        assert_eq!(latex_label("Ĉ*P̂"), "\\hat{C}*\\hat{P}");
    }
}
