//! ASCII rendering in French convention: the bottom row is printed last.

use std::collections::BTreeMap;

use crate::fillings::{Filling, Letter};

fn cell_text(entries: &[Letter]) -> String {
    let sep = if entries.iter().any(|&x| x >= 10) { "," } else { "" };
    entries.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// Draws positioned cells; `None` entries render as `.` (inner cells).
pub fn positioned(cells: &BTreeMap<(usize, usize), Option<Vec<Letter>>>) -> String {
    if cells.is_empty() {
        return "(empty)\n".to_string();
    }
    let max_row = cells.keys().map(|k| k.0).max().unwrap();
    let max_col = cells.keys().map(|k| k.1).max().unwrap();
    let mut width = vec![1usize; max_col + 1];
    for (&(_, c), e) in cells {
        let w = e.as_deref().map_or(1, |e| cell_text(e).len());
        width[c] = width[c].max(w);
    }
    let mut out = String::new();
    for r in (1..=max_row).rev() {
        let mut line = String::new();
        for (c, w) in width.iter().enumerate().skip(1) {
            let text = match cells.get(&(r, c)) {
                Some(Some(e)) => cell_text(e),
                Some(None) => ".".to_string(),
                None => String::new(),
            };
            line.push_str(&format!("{:>w$} ", text, w = *w));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// A filling as a grid, top row first.
pub fn grid(f: &Filling) -> String {
    let mut cells = BTreeMap::new();
    for r in 1..=f.num_rows() {
        for c in 1..=f.inner()[r - 1] {
            cells.insert((r, c), None);
        }
    }
    for (pos, e) in f.cells() {
        cells.insert(pos, Some(e.to_vec()));
    }
    positioned(&cells)
}
