use serde::{Deserialize, Serialize};

use super::Arrangement;
use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational};

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Text(String),
    Int(i64),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Input {
    l: usize,
    hyperplanes: Vec<Vec<Entry>>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize)]
struct Output<'a> {
    l: usize,
    hyperplanes: Vec<Vec<String>>,
    labels: &'a [String],
}

impl Arrangement {
    /// Parses `{"l": .., "hyperplanes": [[..]], "labels": [..]}` where the
    /// coefficients are rational strings `"p/q"` or integers.
    pub fn from_json(text: &str) -> Result<Arrangement> {
        let input: Input = serde_json::from_str(text).map_err(|e| Error::Parse {
            field: "document".into(),
            message: e.to_string(),
        })?;
        let mut forms = Vec::with_capacity(input.hyperplanes.len());
        for (i, row) in input.hyperplanes.iter().enumerate() {
            let mut form = Vec::with_capacity(row.len());
            for (j, e) in row.iter().enumerate() {
                let v = match e {
                    Entry::Text(s) => parse_rational(s),
                    Entry::Int(k) => Some(crate::scalar::q(*k)),
                };
                form.push(v.ok_or_else(|| Error::Parse {
                    field: format!("hyperplanes[{i}][{j}]"),
                    message: "expected a rational \"p/q\" or integer".into(),
                })?);
            }
            forms.push(form);
        }
        match input.labels {
            Some(labels) => Arrangement::with_labels(input.l, forms, labels),
            None => Arrangement::new(input.l, forms),
        }
    }

    pub fn to_json(&self) -> String {
        let out = Output {
            l: self.l,
            hyperplanes: self
                .forms
                .iter()
                .map(|f| f.iter().map(format_rational).collect())
                .collect(),
            labels: &self.labels,
        };
        serde_json::to_string_pretty(&out).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"l": 2, "hyperplanes": [["1", "0"], ["1/2", -3]], "labels": ["x", "h"]}"#;
        let a = Arrangement::from_json(text).unwrap();
        assert_eq!(a.n(), 2);
        assert_eq!(a.labels()[1], "h");
        assert_eq!(Arrangement::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn errors_name_the_field() {
        let err = Arrangement::from_json(r#"{"l": 2, "hyperplanes": [["1", "x"]]}"#).unwrap_err();
        assert!(err.to_string().contains("hyperplanes[0][1]"), "{err}");
        let err = Arrangement::from_json("{\"l\": 2,\n \"hyperplanes\": [[1, 2]").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
