//! Inflated weight of tabloids and set-valued tableaux placed caty-corner
//! above `T_λ`.
//!
//! Rows are laid out as a fully staggered star: the bottom row occupies the
//! rightmost columns and each higher row sits strictly left of every row
//! below it. Letters then slide right onto columns already holding smaller
//! entries. Columns with nothing below are never targets, so a letter that
//! cannot move keeps its own fresh column.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::{self, Constraint, Filling, FillingClass, Letter, Word};
use crate::shapes::{partitions_up_to, star, Composition, Partition, SkewShape};

/// A filling sitting caty-corner above the superstandard tableau `T_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AugmentedFilling {
    pub top: Filling,
    pub lambda: Partition,
}

impl AugmentedFilling {
    pub fn new(top: Filling, lambda: Partition) -> Self {
        AugmentedFilling { top, lambda }
    }

    /// `T_λ` with nothing above it.
    pub fn bare(lambda: Partition) -> Self {
        AugmentedFilling { top: Filling::from_rows(Vec::new()).unwrap(), lambda }
    }

    /// Rows of `top * T_λ`, bottom first: the rows of `T_λ` and then those
    /// of `top`.
    pub fn combined_rows(&self) -> Vec<Vec<Vec<Letter>>> {
        let mut rows = Filling::superstandard(&self.lambda).rows().to_vec();
        rows.extend(self.top.rows().iter().cloned());
        rows
    }

    /// The combined filling on the star shape. For a tabloid of composition
    /// shape the outer boundary need not be a partition.
    pub fn combined(&self) -> Filling {
        let shift = self.top.max_col();
        let mut outer: Vec<usize> = self.lambda.parts().iter().map(|&p| p + shift).collect();
        let mut inner = vec![shift; self.lambda.len()];
        outer.extend(self.top.outer());
        inner.extend(self.top.inner());
        Filling::new(outer, inner, self.combined_rows()).expect("star layout is well formed")
    }

    /// The combined skew shape `shape(top) * λ`, for straight tops.
    pub fn shape(&self) -> Option<SkewShape> {
        self.top.straight_shape().map(|mu| star(&mu, &self.lambda))
    }

    /// Letter-count weight of `top * T_λ`.
    pub fn weight(&self) -> Composition {
        let top = self.top.content();
        let n = top.entries().len().max(self.lambda.len());
        Composition::new((0..n).map(|i| top.get(i) + self.lambda.get(i)).collect())
    }

    /// Row word of `top * T_λ`; needs singleton cells.
    pub fn row_word(&self) -> Result<Word> {
        let mut w = fillings::row_word(&self.top)?;
        w.extend(fillings::row_word(&Filling::superstandard(&self.lambda))?);
        Ok(w)
    }

    /// True iff the column word of `top` is `λ`-Yamanouchi.
    pub fn is_column_yamanouchi(&self) -> bool {
        fillings::is_yamanouchi(&fillings::column_word(&self.top), &self.lambda)
    }
}

/// Cells at explicit `(row, col)` positions of the staggered layout, with
/// gaps, and the topmost occupied cell of each column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflatedTableau {
    pub cells: BTreeMap<(usize, usize), Vec<Letter>>,
    /// `(col, max entry of the topmost cell)` for each occupied column.
    pub uncovered: Vec<(usize, Letter)>,
}

impl InflatedTableau {
    fn from_cells(cells: BTreeMap<(usize, usize), Vec<Letter>>) -> Self {
        let mut tops: BTreeMap<usize, (usize, Letter)> = BTreeMap::new();
        for (&(r, c), e) in &cells {
            let m = *e.last().unwrap();
            tops.entry(c)
                .and_modify(|t| {
                    if r > t.0 {
                        *t = (r, m)
                    }
                })
                .or_insert((r, m));
        }
        let uncovered = tops.into_iter().map(|(c, (_, m))| (c, m)).collect();
        InflatedTableau { cells, uncovered }
    }

    /// Conjugate of the sorted uncovered maxima.
    pub fn inflated_weight(&self) -> Partition {
        Partition::from_unsorted(self.uncovered.iter().map(|&(_, m)| m as usize).collect()).conjugate()
    }

    /// Entries of each occupied column, bottom to top.
    pub fn columns(&self) -> BTreeMap<usize, Vec<Letter>> {
        let mut cols: BTreeMap<usize, Vec<Letter>> = BTreeMap::new();
        for (&(_, c), e) in &self.cells {
            cols.entry(c).or_default().extend(e);
        }
        cols
    }

    /// Strictly increasing up every column across occupied cells.
    pub fn is_column_strict(&self) -> bool {
        self.columns().values().all(|v| v.windows(2).all(|w| w[0] < w[1]))
    }

    /// Every occupied column holds exactly `1, 2, …, max`, with no multicells.
    pub fn has_interval_columns(&self) -> bool {
        self.cells.values().all(|e| e.len() == 1)
            && self.columns().values().all(|v| v.iter().enumerate().all(|(i, &x)| x as usize == i + 1))
    }

    /// Drawing with empty columns squeezed out.
    pub fn render(&self) -> String {
        let used: Vec<usize> = self.columns().keys().copied().collect();
        let cells = self
            .cells
            .iter()
            .map(|(&(r, c), e)| {
                let k = used.binary_search(&c).unwrap() + 1;
                ((r, k), Some(e.clone()))
            })
            .collect();
        crate::render::positioned(&cells)
    }
}

#[derive(Serialize, Deserialize)]
struct CellJson {
    row: usize,
    col: usize,
    entries: Vec<Letter>,
}

#[derive(Serialize, Deserialize)]
struct UncoveredJson {
    col: usize,
    max: Letter,
}

#[derive(Serialize, Deserialize)]
struct InflatedJson {
    cells: Vec<CellJson>,
    uncovered: Vec<UncoveredJson>,
}

impl Serialize for InflatedTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        InflatedJson {
            cells: self.cells.iter().map(|(&(row, col), e)| CellJson { row, col, entries: e.clone() }).collect(),
            uncovered: self.uncovered.iter().map(|&(col, max)| UncoveredJson { col, max }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for InflatedTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = InflatedJson::deserialize(d)?;
        let cells = j.cells.into_iter().map(|c| ((c.row, c.col), c.entries)).collect();
        let t = InflatedTableau::from_cells(cells);
        let given: Vec<(usize, Letter)> = j.uncovered.iter().map(|u| (u.col, u.max)).collect();
        if given != t.uncovered {
            return Err(serde::de::Error::custom("uncovered list does not match cells"));
        }
        Ok(t)
    }
}

/// Staggered starting column of every cell: `start[r][k]` for the `k`-th
/// cell of row `r` (0-based).
fn staggered_columns(rows: &[Vec<Vec<Letter>>]) -> Vec<Vec<usize>> {
    let mut above = 0;
    let mut out = vec![Vec::new(); rows.len()];
    for r in (0..rows.len()).rev() {
        out[r] = (0..rows[r].len()).map(|k| above + k + 1).collect();
        above += rows[r].len();
    }
    out
}

/// The letter-by-letter procedure for tabloids: rows bottom to top, letters
/// of a row right to left, each moving to the rightmost empty cell of its
/// row over a column whose entries below are all smaller.
fn inflate_letters(rows: &[Vec<Letter>]) -> InflatedTableau {
    let cell_rows: Vec<Vec<Vec<Letter>>> = rows.iter().map(|r| r.iter().map(|&x| vec![x]).collect()).collect();
    let start = staggered_columns(&cell_rows);
    let width = start.iter().flatten().copied().max().unwrap_or(0);
    let mut col_top: Vec<Option<Letter>> = vec![None; width + 1];
    let mut cells = BTreeMap::new();
    for (r, row) in rows.iter().enumerate() {
        let below = col_top.clone();
        let mut taken = vec![false; width + 1];
        let mut placed = Vec::new();
        for (k, &e) in row.iter().enumerate().rev() {
            let target =
                (1..=width).rev().find(|&j| !taken[j] && below[j].is_some_and(|m| m < e)).unwrap_or(start[r][k]);
            taken[target] = true;
            placed.push((target, e));
        }
        for (j, e) in placed {
            col_top[j] = Some(e);
            cells.insert((r + 1, j), vec![e]);
        }
    }
    InflatedTableau::from_cells(cells)
}

/// Cell-level procedure shared by the row and column constructions.
/// `(row, col) -> (owning cell, entries)`
type Grid = BTreeMap<(usize, usize), ((usize, usize), Vec<Letter>)>;

/// `order` lists cells `(row, k)` in processing order.
fn inflate_cells(rows: &[Vec<Vec<Letter>>], order: &[(usize, usize)]) -> InflatedTableau {
    let start = staggered_columns(rows);
    let width = start.iter().flatten().copied().max().unwrap_or(0);
    let mut grid: Grid = BTreeMap::new();
    for &(r, k) in order {
        let below_max = |grid: &Grid, j: usize| {
            grid.range((0, j)..(r, j)).filter(|((_, c), _)| *c == j).map(|(_, (_, e))| *e.last().unwrap()).max()
        };
        let free = |grid: &Grid, j: usize, own: bool| match grid.get(&(r, j)) {
            None => true,
            Some((owner, _)) => own && *owner == (r, k),
        };
        let mut entries = rows[r][k].clone();
        entries.reverse();
        let home = start[r][k];
        let mut bound = width;
        for (i, &e) in entries.iter().enumerate() {
            let target =
                (1..=bound).rev().find(|&j| free(&grid, j, i > 0) && below_max(&grid, j).is_some_and(|m| m < e));
            let j = match target {
                Some(j) => {
                    bound = j;
                    j
                }
                None => {
                    if i == 0 {
                        bound = home;
                    }
                    home
                }
            };
            let slot = grid.entry((r, j)).or_insert(((r, k), Vec::new()));
            slot.1.push(e);
            slot.1.sort_unstable();
        }
    }
    let cells = grid.into_iter().map(|((r, c), (_, e))| ((r + 1, c), e)).collect();
    InflatedTableau::from_cells(cells)
}

/// Inflated weight tableau of a tabloid over `T_λ`, built letter by letter.
pub fn inflate_tabloid(a: &AugmentedFilling) -> InflatedTableau {
    let rows: Vec<Vec<Letter>> =
        a.combined_rows().iter().map(|r| r.iter().map(|c| *c.last().unwrap()).collect()).collect();
    inflate_letters(&rows)
}

/// Inflated weight tableau of a set-valued tableau over `T_λ`, by rows:
/// entries of a cell move largest first, each later one to the rightmost
/// admissible cell weakly left of the previous.
pub fn inflate_svt(a: &AugmentedFilling) -> InflatedTableau {
    let rows = a.combined_rows();
    let order: Vec<(usize, usize)> =
        rows.iter().enumerate().flat_map(|(r, row)| (0..row.len()).rev().map(move |k| (r, k))).collect();
    inflate_cells(&rows, &order)
}

/// Same moves as [`inflate_svt`], but the cells of `top` are taken by
/// columns, right to left, each column bottom to top, after `T_λ`.
pub fn inflate_svt_by_columns(a: &AugmentedFilling) -> InflatedTableau {
    let rows = a.combined_rows();
    let base = a.lambda.len();
    let mut order: Vec<(usize, usize)> =
        (0..base).flat_map(|r| (0..rows[r].len()).rev().map(move |k| (r, k))).collect();
    let top = &a.top;
    for col in (1..=top.max_col()).rev() {
        for r in 1..=top.num_rows() {
            if top.cell(r, col).is_some() {
                order.push((base + r - 1, col - top.inner()[r - 1] - 1));
            }
        }
    }
    inflate_cells(&rows, &order)
}

/// `ιwt(A)`: uses the tabloid procedure when every cell is a singleton.
pub fn inflated_weight(a: &AugmentedFilling) -> Partition {
    if a.top.has_multicell() {
        inflate_svt(a).inflated_weight()
    } else {
        inflate_tabloid(a).inflated_weight()
    }
}

/// `(row Yamanouchi?, ιwt = wt?)` for a tabloid over `T_λ`; the two agree.
pub fn check_yamanouchi_weight_equivalence(a: &AugmentedFilling) -> Result<(bool, bool)> {
    let yam = fillings::is_yamanouchi(&a.row_word()?, &Partition::empty());
    let eq = a.weight() == inflate_tabloid(a).inflated_weight();
    Ok((yam, eq))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AugmentedKind {
    Tabloid,
    Ssyt,
    Svt,
}

/// Which tops to search over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopConstraint {
    /// Tops of this straight shape (SSYT or SVT).
    Shape(Partition),
    /// Tabloids of this composition shape.
    RowLengths(Composition),
    /// Every straight shape that can reach the target (SSYT or SVT).
    AnyShape,
}

/// All augmented fillings of `kind` over `T_λ` with inflated weight
/// `target`. Entries are searched up to `max_entry`, by default `ℓ(target)`,
/// which bounds every uncovered maximum and hence every entry.
pub fn enumerate_augmented(
    lambda: &Partition,
    kind: AugmentedKind,
    target: &Partition,
    constraint: &TopConstraint,
    max_entry: Option<Letter>,
) -> Result<Vec<AugmentedFilling>> {
    if !target.contains(lambda) {
        return Ok(Vec::new());
    }
    let bound = max_entry.unwrap_or(target.len() as Letter);
    let budget = target.size() - lambda.size();
    let mut out = Vec::new();
    let mut keep = |top: &Filling| {
        if top.total_entries() > budget {
            return;
        }
        let a = AugmentedFilling::new(top.clone(), lambda.clone());
        if &inflated_weight(&a) == target {
            out.push(a);
        }
    };
    let shapes = |c: &TopConstraint| -> Vec<Partition> {
        match c {
            TopConstraint::Shape(p) => vec![p.clone()],
            _ => partitions_up_to(budget).into_iter().filter(|p| p.len() <= bound as usize).collect(),
        }
    };
    let max = Constraint::MaxEntry(bound);
    match (kind, constraint) {
        (AugmentedKind::Tabloid, TopConstraint::RowLengths(alpha)) => {
            fillings::for_each(alpha.entries(), &[], FillingClass::Tabloid, &max, &mut keep)?;
        }
        (AugmentedKind::Ssyt, c) | (AugmentedKind::Svt, c) if !matches!(c, TopConstraint::RowLengths(_)) => {
            let class = if kind == AugmentedKind::Ssyt { FillingClass::Ssyt } else { FillingClass::Svt };
            for shape in shapes(c) {
                if shape.size() > budget {
                    continue;
                }
                fillings::for_each(shape.parts(), &[], class, &max, &mut keep)?;
            }
        }
        _ => return Err(Error::Unsupported(format!("{kind:?} tops cannot be constrained by {constraint:?}"))),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn aug(top: &str, lambda: Partition) -> AugmentedFilling {
        AugmentedFilling::new(Filling::from_notation(top).unwrap(), lambda)
    }

    #[test]
    fn tabloid_example_with_holes() {
        let a = aug("1 2 4 5 7 / 2 3 6 / 1", part![]);
        let d = inflate_tabloid(&a);
        let mut maxima: Vec<Letter> = d.uncovered.iter().map(|u| u.1).collect();
        maxima.sort_unstable_by(|x, y| y.cmp(x));
        assert_eq!(maxima, vec![7, 6, 4, 3, 2, 1]);
        assert_eq!(d.inflated_weight(), part![6, 5, 4, 3, 2, 2, 1]);
        assert!(d.is_column_strict());
        // row 2 reads 2 3 _ 6 over 1 2 4 5 7
        let row2: Vec<_> = d.cells.iter().filter(|(k, _)| k.0 == 2).map(|(_, e)| e[0]).collect();
        assert_eq!(row2, vec![2, 3, 6]);
    }

    #[test]
    fn tabloid_over_superstandard() {
        let a = aug("1 2 / 1", part![3, 1]);
        let d = inflate_tabloid(&a);
        assert_eq!(d.inflated_weight(), part![5, 2]);
        assert_eq!(a.row_word().unwrap(), vec![1, 1, 2, 2, 1, 1, 1]);
        assert_eq!(check_yamanouchi_weight_equivalence(&a).unwrap(), (true, true));
    }

    #[test]
    fn superstandard_alone_is_right_justified() {
        let a = AugmentedFilling::bare(part![3, 2, 2]);
        let d = inflate_tabloid(&a);
        assert_eq!(d.inflated_weight(), part![3, 2, 2]);
        assert!(d.has_interval_columns());
        let cols: Vec<usize> = d.columns().keys().copied().collect();
        // row i sits over the rightmost λ_i columns
        for &(r, c) in d.cells.keys() {
            let rank = cols.iter().position(|&x| x == c).unwrap();
            assert!(rank + part![3, 2, 2].get(r - 1) >= 3);
        }
        assert_eq!(inflated_weight(&AugmentedFilling::bare(part![])), part![]);
    }

    #[test]
    fn svt_examples() {
        let a = aug("1 5 / 4,8 9", part![]);
        assert_eq!(inflate_svt(&a).inflated_weight(), part![9, 8].conjugate());
        assert_eq!(part![9, 8].conjugate(), part![2, 2, 2, 2, 2, 2, 2, 2, 1]);

        let a = aug("1 5 6 / 4,7,8 9", part![]);
        let d = inflate_svt(&a);
        assert_eq!(d.inflated_weight(), part![3, 3, 3, 3, 2, 2, 2, 2, 1]);
        let row2: Vec<Vec<Letter>> = d.cells.iter().filter(|(k, _)| k.0 == 2).map(|(_, e)| e.clone()).collect();
        assert_eq!(row2, vec![vec![4], vec![7, 8], vec![9]]);
    }

    #[test]
    fn svt_procedure_matches_tabloid_on_ssyt() {
        let a = aug("1 1 2 / 2 3", part![2, 1]);
        assert_eq!(inflate_svt(&a), inflate_tabloid(&a));
    }

    #[test]
    fn equivalence_small_cases() {
        assert_eq!(check_yamanouchi_weight_equivalence(&aug("2", part![])).unwrap(), (false, false));
        let empty = AugmentedFilling::bare(part![2, 1]);
        assert_eq!(check_yamanouchi_weight_equivalence(&empty).unwrap(), (true, true));
    }

    #[test]
    fn enumerate_highest_weights_of_g21() {
        let found =
            enumerate_augmented(&part![], AugmentedKind::Ssyt, &part![2, 1], &TopConstraint::AnyShape, None).unwrap();
        let tops: Vec<String> = found.iter().map(|a| a.top.to_notation()).collect();
        assert_eq!(tops, vec!["1 2", "1 1 / 2"]);
        let none =
            enumerate_augmented(&part![2], AugmentedKind::Ssyt, &part![1, 1], &TopConstraint::AnyShape, None).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn inflated_json_round_trip() {
        let d = inflate_svt(&aug("1 5 6 / 4,7,8 9", part![]));
        let j = serde_json::to_string(&d).unwrap();
        let back: InflatedTableau = serde_json::from_str(&j).unwrap();
        assert_eq!(back, d);
    }
}
