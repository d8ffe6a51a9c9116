//! RSK row insertion on tableaux stored bottom row first.

use crate::fillings::{Filling, Letter};

/// Row-inserts `x` starting at row index `start` (0-based) of `rows`,
/// bumping the leftmost entry strictly greater than `x` in each row.
/// Returns the `(row, col)` (1-based) of the cell created.
pub fn row_insert(rows: &mut Vec<Vec<Letter>>, mut x: Letter, start: usize) -> (usize, usize) {
    let mut r = start;
    loop {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let row = &mut rows[r];
        match row.iter().position(|&y| y > x) {
            Some(k) => {
                x = std::mem::replace(&mut row[k], x);
                r += 1;
            }
            None => {
                row.push(x);
                return (r + 1, row.len());
            }
        }
    }
}

/// The insertion tableau `P(w)`, rows bottom first.
pub fn insertion_tableau(word: &[Letter]) -> Vec<Vec<Letter>> {
    let mut rows = Vec::new();
    for &x in word {
        row_insert(&mut rows, x, 0);
    }
    rows
}

/// Knuth equivalence, decided by comparing insertion tableaux.
pub fn knuth_equivalent(u: &[Letter], v: &[Letter]) -> bool {
    insertion_tableau(u) == insertion_tableau(v)
}

/// `P(w)` as a filling.
pub fn insertion_filling(word: &[Letter]) -> Filling {
    Filling::from_singleton_rows(insertion_tableau(word)).expect("insertion tableau is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fillings::{row_word, Filling};

    #[test]
    fn p_of_row_word_is_the_tableau() {
        let t = Filling::from_notation("1 1 2 4 / 2 3 5 / 4").unwrap();
        assert_eq!(insertion_filling(&row_word(&t).unwrap()), t);
    }

    #[test]
    fn elementary_knuth_relations() {
        // yzx ~ yxz for x < y <= z, xzy ~ zxy for x <= y < z
        assert!(knuth_equivalent(&[2, 3, 1], &[2, 1, 3]));
        assert!(knuth_equivalent(&[1, 3, 2], &[3, 1, 2]));
        assert!(!knuth_equivalent(&[1, 2, 3], &[3, 2, 1]));
    }

    #[test]
    fn insertion_reports_new_cell() {
        let mut rows = vec![vec![1, 3], vec![4]];
        assert_eq!(row_insert(&mut rows, 2, 0), (3, 1));
        assert_eq!(rows, vec![vec![1, 2], vec![3], vec![4]]);
        assert_eq!(row_insert(&mut rows, 1, 0), (4, 1));
        assert_eq!(row_insert(&mut rows, 5, 1), (2, 2));
    }
}
