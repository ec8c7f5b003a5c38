use serde_json::{json, Map, Value};
use std::fmt::Display;

/// Output of one command. `results` is command-specific.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs_echo: Value,
    pub results: Map<String, Value>,
    pub seed: u64,
    pub trials: usize,
    pub errors: Vec<String>,
}

pub(crate) fn num<T: Display>(v: T) -> Value {
    Value::String(v.to_string())
}

pub(crate) fn nums<T: Display>(v: &[T]) -> Value {
    Value::Array(v.iter().map(num).collect())
}

fn render(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(render).collect::<Vec<_>>().join(", ")
        ),
        Value::Object(map) => format!(
            "{{{}}}",
            map.iter()
                .map(|(k, v)| format!("{k}: {}", render(v)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        other => other.to_string(),
    }
}

impl Report {
    pub fn new(command: String, seed: u64, trials: usize) -> Self {
        Self {
            command,
            inputs_echo: Value::Object(Map::new()),
            results: Map::new(),
            seed,
            trials,
            errors: Vec::new(),
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs_echo": self.inputs_echo,
            "results": self.results,
            "provenance": { "seed": num(self.seed), "trials": num(self.trials) },
            "errors": self.errors,
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let width = self
            .results
            .keys()
            .map(String::len)
            .max()
            .unwrap_or(0)
            .max(7);
        let mut out = format!("{:width$}  {}\n", "command", self.command);
        if let Value::Object(echo) = &self.inputs_echo {
            for (k, v) in echo {
                out.push_str(&format!("{:width$}  {}\n", k, render(v)));
            }
        }
        for (k, v) in &self.results {
            out.push_str(&format!("{:width$}  {}\n", k, render(v)));
        }
        out
    }
}
