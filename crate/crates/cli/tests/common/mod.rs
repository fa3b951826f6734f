//! Shared helpers for the integration suites: binary invocation and a
//! validator for the JSON Schema subset used by the shipped schemas
//! (type / required / properties / items / enum / additionalProperties).
//!
//! Each test binary uses its own slice of these helpers.
#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

pub fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sempoly"))
        .args(args)
        .output()
        .expect("binary launches")
}

pub fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

pub fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

pub fn load_schema(name: &str) -> serde_json::Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("read {}: {e}", path.display()));
    serde_json::from_str(&text).expect("schema parses")
}

/// Validate `value` against `schema`, collecting violations.
pub fn validate(schema: &serde_json::Value, value: &serde_json::Value) -> Vec<String> {
    let mut errors = Vec::new();
    validate_at(schema, value, "$", &mut errors);
    errors
}

pub fn assert_valid(schema: &serde_json::Value, value: &serde_json::Value) {
    let errors = validate(schema, value);
    assert!(errors.is_empty(), "schema violations: {errors:#?}\nvalue: {value:#}");
}

fn type_name(value: &serde_json::Value) -> &'static str {
    match value {
        serde_json::Value::Null => "null",
        serde_json::Value::Bool(_) => "boolean",
        serde_json::Value::Number(n) => {
            if n.is_i64() || n.is_u64() {
                "integer"
            } else {
                "number"
            }
        }
        serde_json::Value::String(_) => "string",
        serde_json::Value::Array(_) => "array",
        serde_json::Value::Object(_) => "object",
    }
}

fn type_matches(expected: &str, value: &serde_json::Value) -> bool {
    let actual = type_name(value);
    expected == actual || (expected == "number" && actual == "integer")
}

fn validate_at(
    schema: &serde_json::Value,
    value: &serde_json::Value,
    path: &str,
    errors: &mut Vec<String>,
) {
    let Some(schema_object) = schema.as_object() else {
        errors.push(format!("{path}: schema node is not an object"));
        return;
    };

    if let Some(type_spec) = schema_object.get("type") {
        let allowed: Vec<String> = match type_spec {
            serde_json::Value::String(s) => vec![s.clone()],
            serde_json::Value::Array(list) => list
                .iter()
                .filter_map(|v| v.as_str().map(str::to_owned))
                .collect(),
            _ => vec![],
        };
        if !allowed.iter().any(|t| type_matches(t, value)) {
            errors.push(format!(
                "{path}: expected type {allowed:?}, found {}",
                type_name(value)
            ));
            return;
        }
    }

    if let Some(allowed) = schema_object.get("enum").and_then(|e| e.as_array()) {
        if !allowed.contains(value) {
            errors.push(format!("{path}: value {value} not in enum {allowed:?}"));
        }
    }

    if let Some(object) = value.as_object() {
        if let Some(required) = schema_object.get("required").and_then(|r| r.as_array()) {
            for key in required.iter().filter_map(|k| k.as_str()) {
                if !object.contains_key(key) {
                    errors.push(format!("{path}: missing required property {key:?}"));
                }
            }
        }
        let properties = schema_object.get("properties").and_then(|p| p.as_object());
        if let Some(properties) = properties {
            for (key, subvalue) in object {
                match properties.get(key) {
                    Some(subschema) => {
                        validate_at(subschema, subvalue, &format!("{path}.{key}"), errors)
                    }
                    None => {
                        let extras_allowed = schema_object
                            .get("additionalProperties")
                            .and_then(|a| a.as_bool())
                            .unwrap_or(true);
                        if !extras_allowed {
                            errors.push(format!("{path}: unexpected property {key:?}"));
                        }
                    }
                }
            }
        }
    }

    if let (Some(items), Some(array)) = (schema_object.get("items"), value.as_array()) {
        for (i, item) in array.iter().enumerate() {
            validate_at(items, item, &format!("{path}[{i}]"), errors);
        }
    }
}
