//! Browser bindings. Every export takes plain strings and returns a JSON
//! string, either the result or `{"error": ..}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use kschub::bijections::phi;
use kschub::expr;
use kschub::fillings::FillingClass;
use kschub::inflated::{inflate_svt, inflate_tabloid, AugmentedFilling};
use kschub::render::grid;
use kschub::verify::check_class;
use kschub::{Filling, Partition};

fn error(message: impl ToString) -> Value {
    json!({ "error": message.to_string() })
}

fn finish(v: Result<Value, Value>) -> String {
    match v {
        Ok(v) | Err(v) => v.to_string(),
    }
}

/// Inflate `top` over the bare tableau of `lambda`. `kind` is `"tabloid"`
/// or `"svt"`.
#[wasm_bindgen]
pub fn inflate(top: &str, lambda: &str, kind: &str) -> String {
    finish((|| {
        let top = Filling::from_notation(top).map_err(error)?;
        let lambda: Partition = lambda.parse().map_err(error)?;
        let (class, inflate): (_, fn(&AugmentedFilling) -> _) = match kind {
            "tabloid" => (FillingClass::Tabloid, inflate_tabloid),
            "svt" => (FillingClass::Svt, inflate_svt),
            other => return Err(error(format!("unknown kind {other:?}"))),
        };
        check_class(&top, class).map_err(error)?;
        let d = inflate(&AugmentedFilling::new(top, lambda));
        Ok(json!({
            "inflated_weight": d.inflated_weight(),
            "column_strict": d.is_column_strict(),
            "picture": d.render(),
        }))
    })())
}

/// The dilation chain of a set-valued tableau and the elegant filling
/// recording it.
#[wasm_bindgen]
pub fn dilation(notation: &str) -> String {
    finish((|| {
        let s = Filling::from_notation(notation).map_err(error)?;
        check_class(&s, FillingClass::Svt).map_err(error)?;
        let p = phi(&s).map_err(error)?;
        let steps: Vec<Value> = p
            .trace
            .steps
            .iter()
            .map(|st| {
                json!({
                    "picture": grid(&st.before),
                    "row": st.row,
                    "ejected": st.ejected,
                    "new_cell": st.new_cell,
                })
            })
            .collect();
        Ok(json!({
            "steps": steps,
            "terminal": grid(&p.terminal),
            "elegant": grid(&p.elegant),
        }))
    })())
}

/// Evaluate an expression. `degree` of 0 picks the default bound.
#[wasm_bindgen]
pub fn expand(source: &str, degree: usize) -> String {
    finish((|| {
        let program = expr::parse(source).map_err(|d| json!({ "error": d.message, "position": d.position }))?;
        let d = if degree == 0 { program.default_degree() } else { degree };
        let result = expr::eval(&program, d)
            .map_err(|e| json!({ "error": e.error.to_string(), "position": e.span.map(|s| s.start) }))?;
        Ok(json!({
            "normalized": program.to_string(),
            "degree_bound": d,
            "text": result.to_text(),
            "expansion": result,
        }))
    })())
}
