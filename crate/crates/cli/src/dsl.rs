//! Group descriptor text:
//!
//! ```text
//! desc := "cyclic:" N | "dihedral:" P | "klein:" K
//!       | "product(" desc ("," desc)* ")"
//!       | "semidirect(" desc "," desc "," "action=" ("@" path | json) ")"
//!       | "table:@" path
//! ```
//!
//! An action is `{"generator_images": [...]}` with one entry per complement
//! generator: a unit `u` (or `[u]`) meaning `x ↦ x^u`, or a 0/1 matrix whose
//! column `j` is the image of the `j`-th basis vector of a klein kernel.

use std::fs;

use axgroup_core::groups::{ActionSpec, AutomorphismSpec, MultiplicationTable};
use axgroup_core::GroupDescriptor;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DslError {
    #[error("descriptor `{text}`, at offset {at}: {message}")]
    Syntax { text: String, at: usize, message: String },
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {message}")]
    File { path: String, message: String },
}

/// Parses a descriptor; `seed` drives the sampled associativity check on
/// large table files.
pub fn parse_descriptor(text: &str, seed: u64) -> Result<GroupDescriptor, DslError> {
    let mut p = Parser { text, at: 0, seed };
    let d = p.descriptor()?;
    p.skip_ws();
    if p.at != text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(d)
}

struct Parser<'a> {
    text: &'a str,
    at: usize,
    seed: u64,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> DslError {
        DslError::Syntax { text: self.text.to_string(), at: self.at, message: message.into() }
    }

    fn rest(&self) -> &str {
        &self.text[self.at..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.at = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.at += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), DslError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<u32, DslError> {
        self.skip_ws();
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let n = self.rest()[..digits].parse().map_err(|_| self.error("number out of range"))?;
        self.at += digits;
        Ok(n)
    }

    /// A path runs up to the next `,` or `)` at this nesting level, or the end.
    fn path(&mut self) -> Result<String, DslError> {
        self.skip_ws();
        let len = self.rest().find([',', ')']).unwrap_or(self.rest().len());
        let path = self.rest()[..len].trim().to_string();
        if path.is_empty() {
            return Err(self.error("expected a file path after `@`"));
        }
        self.at += len;
        Ok(path)
    }

    fn descriptor(&mut self) -> Result<GroupDescriptor, DslError> {
        if self.eat("cyclic:") {
            Ok(GroupDescriptor::Cyclic(self.number()?))
        } else if self.eat("dihedral:") {
            Ok(GroupDescriptor::Dihedral(self.number()?))
        } else if self.eat("klein:") {
            Ok(GroupDescriptor::Klein(self.number()?))
        } else if self.eat("product(") {
            let mut parts = vec![self.descriptor()?];
            while self.eat(",") {
                parts.push(self.descriptor()?);
            }
            self.expect(")")?;
            Ok(GroupDescriptor::Product(parts))
        } else if self.eat("semidirect(") {
            let kernel = self.descriptor()?;
            self.expect(",")?;
            let complement = self.descriptor()?;
            self.expect(",")?;
            self.expect("action=")?;
            let action = if self.eat("@") {
                let path = self.path()?;
                let text = read(&path)?;
                let value: Value = serde_json::from_str(&text)
                    .map_err(|e| DslError::File { path: path.clone(), message: e.to_string() })?;
                action_from_json(&value).map_err(|message| DslError::File { path, message })?
            } else {
                self.skip_ws();
                let mut stream = serde_json::Deserializer::from_str(self.rest()).into_iter::<Value>();
                let value = match stream.next() {
                    Some(Ok(v)) => v,
                    _ => return Err(self.error("expected `@file` or inline JSON action")),
                };
                self.at += stream.byte_offset();
                action_from_json(&value).map_err(|m| self.error(m))?
            };
            self.expect(")")?;
            Ok(GroupDescriptor::Semidirect {
                kernel: Box::new(kernel),
                complement: Box::new(complement),
                action,
            })
        } else if self.eat("table:") {
            self.expect("@")?;
            let path = self.path()?;
            let table = MultiplicationTable::from_json(&read(&path)?)
                .and_then(|t| t.validate_with_seed(self.seed).map(|()| t))
                .map_err(|e| DslError::File { path, message: e.to_string() })?;
            Ok(GroupDescriptor::Table(table))
        } else {
            Err(self.error("expected cyclic:, dihedral:, klein:, product(, semidirect( or table:"))
        }
    }
}

fn read(path: &str) -> Result<String, DslError> {
    fs::read_to_string(path).map_err(|source| DslError::Io { path: path.to_string(), source })
}

fn action_from_json(value: &Value) -> Result<ActionSpec, String> {
    let images = value
        .get("generator_images")
        .and_then(Value::as_array)
        .ok_or("action must be an object with a `generator_images` array")?;
    let spec = |v: &Value| -> Option<AutomorphismSpec> {
        if let Some(u) = v.as_i64() {
            return Some(AutomorphismSpec::Unit(u));
        }
        let items = v.as_array()?;
        if let [single] = items.as_slice() {
            if let Some(u) = single.as_i64() {
                return Some(AutomorphismSpec::Unit(u));
            }
        }
        let rows = items
            .iter()
            .map(|row| {
                row.as_array()?
                    .iter()
                    .map(|x| x.as_u64().filter(|&b| b <= 1).map(|b| b as u8))
                    .collect::<Option<Vec<u8>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(AutomorphismSpec::Matrix(rows))
    };
    images
        .iter()
        .enumerate()
        .map(|(i, v)| spec(v).ok_or_else(|| format!("generator image {i} is neither a unit nor a 0/1 matrix")))
        .collect::<Result<_, _>>()
        .map(|generator_images| ActionSpec { generator_images })
}
