//! Instance files: a single JSON object `{"A": [[...]], "b": [...]}` with
//! optional `name` and `description` metadata.
//!
//! Numerals may be JSON strings (`"0.4"`) or bare number tokens (`0.4`).
//! Number tokens are captured as raw text before any float conversion and
//! parsed decimally, so `0.4` is read as exactly 2/5.

use std::path::Path;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::instance::ProblemInstance;
use crate::rat::Rat;

/// The on-disk form of an instance: numeral tokens plus metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDocument {
    pub a: Vec<Vec<String>>,
    pub b: Vec<String>,
    pub name: Option<String>,
    pub description: Option<String>,
}

fn numeral_token(value: &Value, context: &str) -> Result<String> {
    match value {
        Value::String(s) => Ok(s.clone()),
        // With arbitrary precision enabled this is the raw source token.
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Document(format!(
            "{context}: expected a numeral (string or number), got {other}"
        ))),
    }
}

impl InstanceDocument {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)?;
        let Value::Object(map) = value else {
            return Err(Error::Document("top level must be a JSON object".into()));
        };
        for key in map.keys() {
            if !matches!(key.as_str(), "A" | "b" | "name" | "description") {
                return Err(Error::Document(format!("unknown key {key:?}")));
            }
        }
        let a_value = map
            .get("A")
            .ok_or_else(|| Error::Document("missing key \"A\"".into()))?;
        let Value::Array(rows) = a_value else {
            return Err(Error::Document("\"A\" must be an array of rows".into()));
        };
        let mut a = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let Value::Array(entries) = row else {
                return Err(Error::Document(format!(
                    "row {} of \"A\" must be an array",
                    i + 1
                )));
            };
            let mut tokens = Vec::with_capacity(entries.len());
            for (j, entry) in entries.iter().enumerate() {
                tokens.push(numeral_token(entry, &format!("A[{}][{}]", i + 1, j + 1))?);
            }
            a.push(tokens);
        }
        let b_value = map
            .get("b")
            .ok_or_else(|| Error::Document("missing key \"b\"".into()))?;
        let Value::Array(entries) = b_value else {
            return Err(Error::Document("\"b\" must be an array".into()));
        };
        let mut b = Vec::with_capacity(entries.len());
        for (i, entry) in entries.iter().enumerate() {
            b.push(numeral_token(entry, &format!("b[{}]", i + 1))?);
        }
        let text_field = |key: &str| -> Result<Option<String>> {
            match map.get(key) {
                None | Some(Value::Null) => Ok(None),
                Some(Value::String(s)) => Ok(Some(s.clone())),
                Some(other) => Err(Error::Document(format!(
                    "{key:?} must be a string, got {other}"
                ))),
            }
        };
        Ok(InstanceDocument {
            a,
            b,
            name: text_field("name")?,
            description: text_field("description")?,
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut map = Map::new();
        if let Some(name) = &self.name {
            map.insert("name".into(), Value::String(name.clone()));
        }
        if let Some(description) = &self.description {
            map.insert("description".into(), Value::String(description.clone()));
        }
        map.insert(
            "A".into(),
            Value::Array(
                self.a
                    .iter()
                    .map(|row| Value::Array(row.iter().map(|t| Value::String(t.clone())).collect()))
                    .collect(),
            ),
        );
        map.insert(
            "b".into(),
            Value::Array(self.b.iter().map(|t| Value::String(t.clone())).collect()),
        );
        serde_json::to_string_pretty(&Value::Object(map)).expect("string tree serializes")
    }

    /// Parses every token and validates the dimensions and ranges.
    pub fn to_instance(&self) -> Result<ProblemInstance> {
        let a = self
            .a
            .iter()
            .map(|row| row.iter().map(|t| Rat::parse_decimal(t)).collect())
            .collect::<Result<Vec<Vec<Rat>>>>()?;
        let b = self
            .b
            .iter()
            .map(|t| Rat::parse_decimal(t))
            .collect::<Result<Vec<Rat>>>()?;
        ProblemInstance::new(a, b)
    }

    pub fn from_instance(
        instance: &ProblemInstance,
        name: Option<String>,
        description: Option<String>,
    ) -> Self {
        InstanceDocument {
            a: instance
                .matrix()
                .iter()
                .map(|row| row.iter().map(Rat::to_string).collect())
                .collect(),
            b: instance.rhs().iter().map(Rat::to_string).collect(),
            name,
            description,
        }
    }
}

/// Reads and validates an instance file.
pub fn load_instance(path: &Path) -> Result<ProblemInstance> {
    let text = std::fs::read_to_string(path)?;
    InstanceDocument::from_json_str(&text)?.to_instance()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::test_util::*;

    #[test]
    fn reads_strings_and_number_tokens_exactly() {
        let doc = InstanceDocument::from_json_str(
            r#"{"A": [["0.4", 0.6, 0.5], [0.7, "0.5", 0.8]], "b": [1.4, "1.5"]}"#,
        )
        .unwrap();
        assert_eq!(doc.a[0], vec!["0.4", "0.6", "0.5"]);
        let inst = doc.to_instance().unwrap();
        assert_eq!(inst, example_instance());
        // The classic float-corruption case: 0.1 must be exactly 1/10.
        let doc = InstanceDocument::from_json_str(r#"{"A": [[0.1]], "b": [0.1]}"#).unwrap();
        let inst = doc.to_instance().unwrap();
        assert_eq!(inst.entry(0, 0), &Rat::new(1, 10));
    }

    #[test]
    fn round_trips_through_json() {
        let inst = example_instance();
        let doc = InstanceDocument::from_instance(&inst, Some("worked-example".into()), None);
        let text = doc.to_json_string();
        let again = InstanceDocument::from_json_str(&text).unwrap();
        assert_eq!(doc, again);
        assert_eq!(again.to_instance().unwrap(), inst);
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(InstanceDocument::from_json_str("[1, 2]").is_err());
        assert!(InstanceDocument::from_json_str(r#"{"A": [[0.5]]}"#).is_err());
        assert!(InstanceDocument::from_json_str(r#"{"A": [[0.5]], "b": [0.5], "bb": 1}"#).is_err());
        assert!(InstanceDocument::from_json_str(r#"{"A": [[true]], "b": [0.5]}"#).is_err());
        let doc = InstanceDocument::from_json_str(r#"{"A": [["0.x"]], "b": [0.5]}"#).unwrap();
        assert!(matches!(
            doc.to_instance(),
            Err(Error::ParseNumeral { token }) if token == "0.x"
        ));
    }
}
