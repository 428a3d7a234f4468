use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// Row outcome, ordered by exit-code severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Ok,
    Mismatch,
    Usage,
    Parse,
    Limit,
}

impl Kind {
    pub fn code(self) -> u8 {
        match self {
            Kind::Ok => 0,
            Kind::Mismatch => 1,
            Kind::Usage => 2,
            Kind::Parse => 3,
            Kind::Limit => 4,
        }
    }

    fn status(self) -> &'static str {
        match self {
            Kind::Ok => "ok",
            Kind::Mismatch => "mismatch",
            Kind::Usage | Kind::Parse => "error",
            Kind::Limit => "partial",
        }
    }
}

/// One output row: the input's label, a headline value and named fields.
pub struct Row {
    label: String,
    pub kind: Kind,
    value: Option<Value>,
    fields: Vec<(&'static str, Value)>,
    message: Option<String>,
}

impl Row {
    pub fn value(v: Value) -> Row {
        Row { label: String::new(), kind: Kind::Ok, value: Some(v), fields: Vec::new(), message: None }
    }

    pub fn fields() -> Row {
        Row { value: None, ..Row::value(Value::Null) }
    }

    pub fn error(kind: Kind, message: String) -> Row {
        Row { kind, message: Some(message), ..Row::fields() }
    }

    pub fn field(mut self, name: &'static str, v: Value) -> Row {
        self.fields.push((name, v));
        self
    }

    pub fn labeled(mut self, label: String) -> Row {
        self.label = label;
        self
    }

    fn columns(&self) -> Vec<(&str, Value)> {
        let mut out = vec![("graph6", Value::String(self.label.clone()))];
        if let Some(v) = &self.value {
            out.push(("value", v.clone()));
        }
        out.extend(self.fields.iter().map(|(k, v)| (*k, v.clone())));
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        v => v.to_string(),
    }
}

pub struct Table {
    format: Format,
}

impl Table {
    pub fn new(format: Format) -> Table {
        Table { format }
    }

    pub fn print(&self, rows: &[Row]) {
        match self.format {
            Format::Json => {
                for r in rows {
                    let mut m: Map<String, Value> = r.columns().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
                    m.insert("status".into(), r.kind.status().into());
                    if let Some(msg) = &r.message {
                        m.insert("error".into(), msg.clone().into());
                    }
                    println!("{}", Value::Object(m));
                }
            }
            Format::Csv => {
                let mut header: Vec<String> = Vec::new();
                for r in rows {
                    for (k, _) in r.columns() {
                        if !header.iter().any(|h| h == k) {
                            header.push(k.to_string());
                        }
                    }
                }
                header.push("status".into());
                header.push("error".into());
                let mut w = csv::Writer::from_writer(std::io::stdout());
                w.write_record(&header).expect("stdout");
                for r in rows {
                    let cols = r.columns();
                    let record: Vec<String> = header
                        .iter()
                        .map(|h| match h.as_str() {
                            "status" => r.kind.status().to_string(),
                            "error" => r.message.clone().unwrap_or_default(),
                            h => cols.iter().find(|(k, _)| *k == h).map(|(_, v)| cell(v)).unwrap_or_default(),
                        })
                        .collect();
                    w.write_record(&record).expect("stdout");
                }
                w.flush().expect("stdout");
            }
            Format::Plain => {
                for r in rows {
                    let mut parts = Vec::new();
                    match (&r.message, &r.value) {
                        (Some(_), _) => parts.push(r.kind.status().to_string()),
                        (None, Some(v)) => parts.push(cell(v)),
                        (None, None) => {}
                    }
                    for (k, v) in r.columns() {
                        if k != "value" && k != "certificate" {
                            parts.push(format!("{k}={}", cell(&v)));
                        }
                    }
                    if let Some(msg) = &r.message {
                        parts.push(format!("error={msg:?}"));
                    }
                    println!("{}", parts.join(" "));
                }
            }
        }
    }
}
