//! Text and JSON forms of command results.

use serde_json::{json, Value};

use schubert::asm::PartialAsm;
use schubert::perm::{CellSet, Permutation};
use schubert::poly::{Polynomial, Var};

/// A result in both output modes; `main` picks one.
pub struct Rendered {
    pub text: String,
    pub json: Value,
}

impl Rendered {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Rendered { text: text.into(), json }
    }

    pub fn boolean(b: bool) -> Self {
        Rendered::new(b.to_string(), json!(b))
    }

    pub fn count(n: usize) -> Self {
        Rendered::new(n.to_string(), json!(n))
    }

    pub fn polynomial(p: &Polynomial) -> Self {
        Rendered::new(p.to_string(), p.to_json())
    }

    pub fn matrix(a: &PartialAsm) -> Self {
        Rendered::new(a.to_display(), json!(a.to_rows()))
    }

    pub fn matrices(list: &[PartialAsm]) -> Self {
        let text = list.iter().map(PartialAsm::to_display).collect::<Vec<_>>().join("\n\n");
        let rows: Vec<Value> = list.iter().map(|a| json!(a.to_rows())).collect();
        Rendered::new(text, Value::Array(rows))
    }

    pub fn cells(cells: &CellSet) -> Self {
        let pairs: Vec<[u32; 2]> = cells.iter().map(|(i, j)| [i, j]).collect();
        Rendered::new(cells.to_string(), json!(pairs))
    }

    pub fn permutations(perms: &[Permutation]) -> Self {
        let text = perms
            .iter()
            .map(|w| braced(w.one_line()))
            .collect::<Vec<_>>()
            .join(", ");
        let arrays: Vec<&[u32]> = perms.iter().map(Permutation::one_line).collect();
        Rendered::new(format!("{{{text}}}"), json!(arrays))
    }

    pub fn integers(values: &[usize]) -> Self {
        Rendered::new(braced(values), json!(values))
    }
}

/// `{a, b, c}`
pub fn braced<T: ToString>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

/// `ideal (g1, g2, ...)`
pub fn ideal_text(gens: &[Polynomial]) -> String {
    let parts: Vec<String> = gens.iter().map(ToString::to_string).collect();
    format!("ideal ({})", parts.join(", "))
}

pub fn var_list(vars: &[Var]) -> String {
    vars.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn envelope(command: &str, result: Value) -> Value {
    json!({"schema_version": 1, "command": command, "result": result})
}
