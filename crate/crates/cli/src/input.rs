use std::io::BufRead;
use std::path::PathBuf;

use clap::Args;
use hopforce::graph::{make_family, parse_graph6, Family};
use hopforce::Graph;

use crate::output::Kind;
use crate::{PARSE, USAGE};

#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Named family and its integer parameters, e.g. `--family path 8`
    #[arg(long, num_args = 1.., value_names = ["NAME", "PARAMS"])]
    family: Option<Vec<String>>,
    /// One graph in graph6
    #[arg(long)]
    g6: Option<String>,
    /// One graph6 per line; `-` reads stdin
    #[arg(long)]
    file: Option<PathBuf>,
}

pub enum Item {
    Graph(Graph),
    Bad { text: String, kind: Kind, message: String },
}

fn graph6_item(text: &str) -> Item {
    match parse_graph6(text) {
        Ok(g) => Item::Graph(g),
        Err(e) => Item::Bad { text: text.to_string(), kind: Kind::Parse, message: e.to_string() },
    }
}

pub fn family(words: &[String]) -> Result<Graph, String> {
    let (name, rest) = words.split_first().ok_or("--family needs a name")?;
    let params = rest
        .iter()
        .map(|w| w.parse::<usize>().map_err(|_| format!("family parameter {w:?} is not a nonnegative integer")))
        .collect::<Result<Vec<_>, _>>()?;
    let name = name.to_ascii_lowercase().replace('-', "_");
    let f = Family::parse(&name, &params).map_err(|e| format!("{e} (known: {})", Family::NAMES.join(", ")))?;
    make_family(&f).map_err(|e| e.to_string())
}

/// Reads every input row; only unusable sources are fatal.
pub fn load(args: &InputArgs) -> Result<Vec<Item>, (u8, String)> {
    if let Some(words) = &args.family {
        return family(words).map(|g| vec![Item::Graph(g)]).map_err(|e| (USAGE, e));
    }
    if let Some(text) = &args.g6 {
        return Ok(vec![graph6_item(text.trim())]);
    }
    let path = args.file.as_ref().expect("clap requires one input");
    let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(std::io::stdin().lock())
    } else {
        let f = std::fs::File::open(path).map_err(|e| (USAGE, format!("{}: {e}", path.display())))?;
        Box::new(std::io::BufReader::new(f))
    };
    let mut items = Vec::new();
    for line in reader.lines() {
        let line = line.map_err(|e| (PARSE, format!("{}: {e}", path.display())))?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        items.push(graph6_item(t));
    }
    Ok(items)
}
