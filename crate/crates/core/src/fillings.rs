//! One grid type for SSYT, tabloids, set-valued tableaux, reverse plane
//! partitions and strict elegant fillings, with validators, reading words,
//! weights and a backtracking enumerator.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Composition, Partition, SkewShape};

pub type Letter = u32;
pub type Word = Vec<Letter>;

/// A filling of a row diagram: row `r` (1-based, bottom first) covers
/// columns `inner[r-1]+1 ..= outer[r-1]`, each cell holding a non-empty
/// strictly increasing set of letters.
///
/// `outer` need not be a partition: tabloids of composition shape are
/// fillings too. Every other class requires a genuine skew shape.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    outer: Vec<usize>,
    inner: Vec<usize>,
    rows: Vec<Vec<Vec<Letter>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FillingClass {
    Ssyt,
    Tabloid,
    Svt,
    Rpp,
    Elegant,
}

impl std::str::FromStr for FillingClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "ssyt" => FillingClass::Ssyt,
            "tabloid" => FillingClass::Tabloid,
            "svt" => FillingClass::Svt,
            "rpp" => FillingClass::Rpp,
            "elegant" | "ef" => FillingClass::Elegant,
            other => return Err(Error::Unsupported(format!("unknown filling class {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightRule {
    /// Entry `i` counts occurrences of letter `i`.
    LetterCount,
    /// Entry `i` counts columns containing letter `i` (reverse plane partitions).
    ColumnCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub entries: Composition,
    pub rule: WeightRule,
}

impl Filling {
    pub fn new(outer: Vec<usize>, inner: Vec<usize>, rows: Vec<Vec<Vec<Letter>>>) -> Result<Self> {
        let mut outer = outer;
        let mut inner = inner;
        let mut rows = rows;
        if inner.len() > outer.len() && inner[outer.len()..].iter().any(|&x| x > 0) {
            return Err(Error::InvalidFilling("inner shape has more rows than outer".into()));
        }
        inner.resize(outer.len(), 0);
        while outer.last() == Some(&0) && rows.last().is_some_and(|r| r.is_empty()) {
            outer.pop();
            inner.pop();
            rows.pop();
        }
        if rows.len() != outer.len() {
            return Err(Error::InvalidFilling(format!(
                "{} rows given for a shape with {} rows",
                rows.len(),
                outer.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if inner[r] > outer[r] || row.len() != outer[r] - inner[r] {
                return Err(Error::InvalidFilling(format!(
                    "row {} has {} cells, shape wants {}",
                    r + 1,
                    row.len(),
                    outer[r].saturating_sub(inner[r])
                )));
            }
            for cell in row {
                if cell.is_empty() || cell.contains(&0) || cell.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::InvalidFilling(format!(
                        "cell {cell:?} in row {} is not a strictly increasing set of positive letters",
                        r + 1
                    )));
                }
            }
        }
        Ok(Filling { outer, inner, rows })
    }

    /// A left-justified filling whose row lengths are those of `rows`.
    pub fn from_rows(rows: Vec<Vec<Vec<Letter>>>) -> Result<Self> {
        let outer = rows.iter().map(Vec::len).collect();
        Filling::new(outer, Vec::new(), rows)
    }

    /// A left-justified filling with one letter per cell.
    pub fn from_singleton_rows(rows: Vec<Vec<Letter>>) -> Result<Self> {
        Filling::from_rows(rows.into_iter().map(|r| r.into_iter().map(|x| vec![x]).collect()).collect())
    }

    pub fn from_shape(shape: &SkewShape, rows: Vec<Vec<Vec<Letter>>>) -> Result<Self> {
        Filling::new(shape.outer.parts().to_vec(), shape.inner.parts().to_vec(), rows)
    }

    /// The empty filling of `λ/λ`.
    pub fn empty_of(lambda: &Partition) -> Self {
        Filling { outer: lambda.parts().to_vec(), inner: lambda.parts().to_vec(), rows: vec![Vec::new(); lambda.len()] }
    }

    /// The superstandard tableau `T_λ`: row `i` holds `λ_i` copies of `i`.
    pub fn superstandard(lambda: &Partition) -> Self {
        let rows = lambda.parts().iter().enumerate().map(|(i, &p)| vec![vec![i as Letter + 1]; p]).collect();
        Filling::from_rows(rows).expect("superstandard tableau is well formed")
    }

    /// Parses the compact notation used in tests and on the command line:
    /// rows bottom first separated by `/`, cells by whitespace, entries of a
    /// set-valued cell by `,`, and `.` for a cell of the inner shape.
    ///
    /// `"1,2 2 2,3 / 4 5,7 / 5"` is the tableau with column word 541257223.
    pub fn from_notation(text: &str) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for (r, row_text) in text.split('/').enumerate() {
            let mut row = Vec::new();
            let mut skipped = 0;
            for tok in row_text.split_whitespace() {
                if tok == "." {
                    if !row.is_empty() {
                        return Err(Error::InvalidFilling(format!("'.' after a filled cell in row {}", r + 1)));
                    }
                    skipped += 1;
                    continue;
                }
                let cell = tok
                    .split(',')
                    .map(|t| t.parse::<Letter>().map_err(|_| Error::InvalidFilling(format!("bad letter {t:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                row.push(cell);
            }
            outer.push(skipped + row.len());
            inner.push(skipped);
            rows.push(row);
        }
        if text.trim().is_empty() {
            return Filling::new(Vec::new(), Vec::new(), Vec::new());
        }
        Filling::new(outer, inner, rows)
    }

    /// Inverse of [`Filling::from_notation`].
    pub fn to_notation(&self) -> String {
        self.rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut toks: Vec<String> = vec![".".to_string(); self.inner[r]];
                toks.extend(row.iter().map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")));
                toks.join(" ")
            })
            .collect::<Vec<_>>()
            .join(" / ")
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Cells of row `row` (1-based), left to right.
    pub fn row(&self, row: usize) -> &[Vec<Letter>] {
        &self.rows[row - 1]
    }

    pub fn rows(&self) -> &[Vec<Vec<Letter>>] {
        &self.rows
    }

    /// Row lengths (cells per row).
    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn cell(&self, row: usize, col: usize) -> Option<&[Letter]> {
        if row == 0 || row > self.rows.len() || col <= self.inner[row - 1] {
            return None;
        }
        self.rows[row - 1].get(col - self.inner[row - 1] - 1).map(Vec::as_slice)
    }

    pub(crate) fn cell_mut(&mut self, row: usize, col: usize) -> Option<&mut Vec<Letter>> {
        if row == 0 || row > self.rows.len() || col <= self.inner[row - 1] {
            return None;
        }
        let off = self.inner[row - 1];
        self.rows[row - 1].get_mut(col - off - 1)
    }

    /// `((row, col), entries)` in row-major order, bottom row first.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), &[Letter])> + '_ {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            row.iter().enumerate().map(move |(k, c)| ((r + 1, self.inner[r] + k + 1), c.as_slice()))
        })
    }

    /// The skew shape, when `outer` and `inner` are partitions.
    pub fn skew_shape(&self) -> Option<SkewShape> {
        let outer = Partition::new(self.outer.clone()).ok()?;
        let inner = Partition::new(self.inner.clone()).ok()?;
        SkewShape::new(outer, inner).ok()
    }

    /// The straight shape, when the filling is left-justified with
    /// weakly decreasing rows.
    pub fn straight_shape(&self) -> Option<Partition> {
        if self.inner.iter().any(|&x| x > 0) {
            return None;
        }
        Partition::new(self.outer.clone()).ok()
    }

    pub fn is_straight(&self) -> bool {
        self.straight_shape().is_some()
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn total_entries(&self) -> usize {
        self.rows.iter().flatten().map(Vec::len).sum()
    }

    /// `|wt| − #cells`.
    pub fn excess(&self) -> usize {
        self.total_entries() - self.num_cells()
    }

    pub fn has_multicell(&self) -> bool {
        self.rows.iter().flatten().any(|c| c.len() > 1)
    }

    pub fn max_entry(&self) -> Letter {
        self.rows.iter().flatten().flatten().copied().max().unwrap_or(0)
    }

    pub fn max_col(&self) -> usize {
        self.outer.iter().copied().max().unwrap_or(0)
    }

    /// Letter-count weight, ignoring the class.
    pub fn content(&self) -> Composition {
        let mut w = vec![0usize; self.max_entry() as usize];
        for &x in self.rows.iter().flatten().flatten() {
            w[x as usize - 1] += 1;
        }
        Composition::new(w)
    }

    /// Cells of the given column, bottom to top.
    pub fn column(&self, col: usize) -> Vec<((usize, usize), &[Letter])> {
        (1..=self.rows.len()).filter_map(|r| self.cell(r, col).map(|c| ((r, col), c))).collect()
    }

    /// Keeps only the cells in columns `>= col`.
    pub fn columns_from(&self, col: usize) -> Filling {
        let mut inner = Vec::new();
        let mut outer = Vec::new();
        let mut rows = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            let start = self.inner[r].max(col - 1);
            let end = self.outer[r].max(start);
            inner.push(start);
            outer.push(end);
            rows.push(row[(start - self.inner[r]).min(row.len())..].to_vec());
        }
        Filling { outer, inner, rows }
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling[{}]", self.to_notation())
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::grid(self))
    }
}

#[derive(Serialize, Deserialize)]
struct FillingJson {
    outer: Vec<usize>,
    #[serde(default)]
    inner: Vec<usize>,
    rows: Vec<Vec<Vec<Letter>>>,
}

impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut inner = self.inner.clone();
        while inner.last() == Some(&0) {
            inner.pop();
        }
        FillingJson { outer: self.outer.clone(), inner, rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FillingJson::deserialize(d)?;
        Filling::new(j.outer, j.inner, j.rows).map_err(serde::de::Error::custom)
    }
}

/// True iff `f` satisfies the defining conditions of `class`.
pub fn validate(f: &Filling, class: FillingClass) -> bool {
    if class != FillingClass::Tabloid && f.skew_shape().is_none() {
        return false;
    }
    if class != FillingClass::Svt && f.has_multicell() {
        return false;
    }
    let first = |c: &[Letter]| c[0];
    let last = |c: &[Letter]| *c.last().unwrap();
    for ((r, c), cell) in f.cells() {
        let left = f.cell(r, c - 1);
        let below = if r > 1 { f.cell(r - 1, c) } else { None };
        let ok = match class {
            FillingClass::Tabloid => left.is_none_or(|l| l[0] <= cell[0]),
            FillingClass::Ssyt | FillingClass::Svt => {
                left.is_none_or(|l| last(l) <= first(cell)) && below.is_none_or(|b| last(b) < first(cell))
            }
            FillingClass::Rpp => left.is_none_or(|l| l[0] <= cell[0]) && below.is_none_or(|b| b[0] <= cell[0]),
            FillingClass::Elegant => {
                left.is_none_or(|l| l[0] < cell[0]) && below.is_none_or(|b| b[0] < cell[0]) && (cell[0] as usize) < r
            }
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Weight of `f` under the rule for `class`: column-count for reverse plane
/// partitions, letter-count otherwise.
pub fn weight(f: &Filling, class: FillingClass) -> WeightVector {
    if class != FillingClass::Rpp {
        return WeightVector { entries: f.content(), rule: WeightRule::LetterCount };
    }
    let mut w = vec![0usize; f.max_entry() as usize];
    for ((r, c), cell) in f.cells() {
        let below = if r > 1 { f.cell(r - 1, c) } else { None };
        if below != Some(cell) {
            w[cell[0] as usize - 1] += 1;
        }
    }
    WeightVector { entries: Composition::new(w), rule: WeightRule::ColumnCount }
}

/// Row word: rows top to bottom, each left to right. Requires singleton cells.
pub fn row_word(f: &Filling) -> Result<Word> {
    if f.has_multicell() {
        return Err(Error::InvalidFilling("row word needs singleton cells".into()));
    }
    Ok(f.rows.iter().rev().flat_map(|row| row.iter().map(|c| c[0])).collect())
}

/// Column word: columns left to right, cells top to bottom, letters
/// ascending within a cell.
pub fn column_word(f: &Filling) -> Word {
    column_word_positions(f).into_iter().map(|(x, _)| x).collect()
}

/// Column word with the `(row, col)` each letter came from.
pub fn column_word_positions(f: &Filling) -> Vec<(Letter, (usize, usize))> {
    let mut out = Vec::new();
    for col in 1..=f.max_col() {
        for r in (1..=f.num_rows()).rev() {
            if let Some(cell) = f.cell(r, col) {
                out.extend(cell.iter().map(|&x| (x, (r, col))));
            }
        }
    }
    out
}

/// Set-valued row word: for each row from the top, the non-minimal letters
/// of its cells right to left (largest first within a cell), then the
/// minimal letters left to right.
pub fn sv_row_word(f: &Filling) -> Word {
    let mut out = Vec::new();
    for row in f.rows.iter().rev() {
        for cell in row.iter().rev() {
            out.extend(cell[1..].iter().rev());
        }
        out.extend(row.iter().map(|c| c[0]));
    }
    out
}

/// `λ`-Yamanouchi test: every suffix `v` has `wt_i(v)+λ_i ≥ wt_{i+1}(v)+λ_{i+1}`.
pub fn is_yamanouchi(w: &[Letter], lambda: &Partition) -> bool {
    let top = w.iter().copied().max().unwrap_or(0) as usize;
    let mut counts: Vec<usize> =
        (0..=top.max(lambda.len()) + 1).map(|i| if i == 0 { 0 } else { lambda.get(i - 1) }).collect();
    for &a in w.iter().rev() {
        let a = a as usize;
        counts[a] += 1;
        if a >= 2 && counts[a] > counts[a - 1] {
            return false;
        }
    }
    true
}

/// What an enumeration is constrained by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// Exact weight (column-count for RPP). Entries are bounded by its length.
    Weight(Composition),
    /// Every letter at most `N`.
    MaxEntry(Letter),
    /// No constraint; only meaningful for elegant fillings, whose row bound
    /// keeps the enumeration finite.
    Free,
}

/// All fillings of `shape` in `class` meeting `constraint`, in the order of
/// a backtracking search over cells (rows bottom to top, each left to right)
/// with candidates in increasing order.
pub fn enumerate(shape: &SkewShape, class: FillingClass, constraint: &Constraint) -> Result<Vec<Filling>> {
    let mut out = Vec::new();
    for_each(shape.outer.parts(), shape.inner.parts(), class, constraint, &mut |f| out.push(f.clone()))?;
    Ok(out)
}

/// Tabloids of composition shape `alpha` meeting `constraint`.
pub fn enumerate_tabloids(alpha: &Composition, constraint: &Constraint) -> Result<Vec<Filling>> {
    let mut out = Vec::new();
    for_each(alpha.entries(), &[], FillingClass::Tabloid, constraint, &mut |f| out.push(f.clone()))?;
    Ok(out)
}

/// Number of fillings `enumerate` would return, without materialising them.
pub fn count(shape: &SkewShape, class: FillingClass, constraint: &Constraint) -> Result<u64> {
    let mut n = 0u64;
    for_each(shape.outer.parts(), shape.inner.parts(), class, constraint, &mut |_| n += 1)?;
    Ok(n)
}

/// Streams every filling of the row diagram `outer/inner` in `class`
/// meeting `constraint` to `visit`.
pub fn for_each(
    outer: &[usize],
    inner: &[usize],
    class: FillingClass,
    constraint: &Constraint,
    visit: &mut dyn FnMut(&Filling),
) -> Result<()> {
    let mut inner = inner.to_vec();
    inner.resize(outer.len(), 0);
    if outer.iter().zip(&inner).any(|(o, i)| i > o) {
        return Ok(());
    }
    if class != FillingClass::Tabloid {
        let o = Partition::new(outer.to_vec());
        let i = Partition::new(inner.clone());
        match (o, i) {
            (Ok(o), Ok(i)) if o.contains(&i) => {}
            _ => return Err(Error::InvalidFilling(format!("{outer:?}/{inner:?} is not a skew shape"))),
        }
    }
    let (bound, remaining) = match constraint {
        Constraint::Weight(alpha) => (alpha.len() as Letter, Some(alpha.trimmed().to_vec())),
        Constraint::MaxEntry(n) => (*n, None),
        Constraint::Free => {
            if class != FillingClass::Elegant {
                return Err(Error::Unsupported(
                    "an unconstrained enumeration is only finite for elegant fillings".into(),
                ));
            }
            (outer.len().saturating_sub(1) as Letter, None)
        }
    };
    let order: Vec<(usize, usize)> =
        (0..outer.len()).flat_map(|r| (inner[r] + 1..=outer[r]).map(move |c| (r, c))).collect();
    if let Some(rem) = &remaining {
        let total: usize = rem.iter().sum();
        let cells = order.len();
        let feasible = match class {
            FillingClass::Svt => total >= cells,
            FillingClass::Rpp => total <= cells,
            _ => total == cells,
        };
        if !feasible {
            return Ok(());
        }
    }
    let mut search = Search {
        outer,
        inner: &inner,
        class,
        bound,
        remaining,
        rows: outer.iter().map(|_| Vec::new()).collect(),
        order,
    };
    search.go(0, visit);
    Ok(())
}

struct Search<'a> {
    outer: &'a [usize],
    inner: &'a [usize],
    class: FillingClass,
    bound: Letter,
    remaining: Option<Vec<usize>>,
    rows: Vec<Vec<Vec<Letter>>>,
    order: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn below(&self, r: usize, c: usize) -> Option<&[Letter]> {
        if r == 0 || c <= self.inner[r - 1] || c > self.outer[r - 1] {
            return None;
        }
        self.rows[r - 1].get(c - self.inner[r - 1] - 1).map(Vec::as_slice)
    }

    fn remaining_ok(&self, cells_left: usize) -> bool {
        let Some(rem) = &self.remaining else { return true };
        let total: usize = rem.iter().sum();
        match self.class {
            FillingClass::Svt => total >= cells_left,
            FillingClass::Rpp => total <= cells_left,
            _ => total == cells_left,
        }
    }

    fn available(&self, x: Letter) -> bool {
        self.remaining.as_ref().is_none_or(|rem| rem[x as usize - 1] > 0)
    }

    fn take(&mut self, x: Letter) {
        if let Some(rem) = &mut self.remaining {
            rem[x as usize - 1] -= 1;
        }
    }

    fn give(&mut self, x: Letter) {
        if let Some(rem) = &mut self.remaining {
            rem[x as usize - 1] += 1;
        }
    }

    fn go(&mut self, k: usize, visit: &mut dyn FnMut(&Filling)) {
        if k == self.order.len() {
            if self.remaining.as_ref().is_none_or(|rem| rem.iter().all(|&x| x == 0)) {
                let f = Filling { outer: self.outer.to_vec(), inner: self.inner.to_vec(), rows: self.rows.clone() };
                visit(&f);
            }
            return;
        }
        let (r, c) = self.order[k];
        let left_max = self.rows[r].last().map(|l| *l.last().unwrap());
        let left_min = self.rows[r].last().map(|l| l[0]);
        let below = self.below(r, c).map(|b| (b[0], *b.last().unwrap()));
        let cells_left = self.order.len() - k - 1;
        match self.class {
            FillingClass::Svt => {
                let lo = left_max.unwrap_or(1).max(below.map_or(1, |b| b.1 + 1));
                let mut cell = Vec::new();
                self.subsets(lo, k, cells_left, &mut cell, visit);
            }
            _ => {
                let (lo, hi) = match self.class {
                    FillingClass::Ssyt => (left_min.unwrap_or(1).max(below.map_or(1, |b| b.0 + 1)), self.bound),
                    FillingClass::Tabloid => (left_min.unwrap_or(1), self.bound),
                    FillingClass::Rpp => (left_min.unwrap_or(1).max(below.map_or(1, |b| b.0)), self.bound),
                    FillingClass::Elegant => {
                        (left_min.map_or(1, |l| l + 1).max(below.map_or(1, |b| b.0 + 1)), self.bound.min(r as Letter))
                    }
                    FillingClass::Svt => unreachable!(),
                };
                for x in lo..=hi {
                    // a repeated letter directly above contributes no new column
                    let counts = self.class != FillingClass::Rpp || below.map(|b| b.0) != Some(x);
                    if counts {
                        if !self.available(x) {
                            continue;
                        }
                        self.take(x);
                    }
                    if self.remaining_ok(cells_left) {
                        self.rows[r].push(vec![x]);
                        self.go(k + 1, visit);
                        self.rows[r].pop();
                    }
                    if counts {
                        self.give(x);
                    }
                }
            }
        }
    }

    /// Set-valued cells: every non-empty subset of `lo..=bound`, grown in
    /// lexicographic order.
    fn subsets(
        &mut self,
        lo: Letter,
        k: usize,
        cells_left: usize,
        cell: &mut Vec<Letter>,
        visit: &mut dyn FnMut(&Filling),
    ) {
        let (r, _) = self.order[k];
        for x in lo..=self.bound {
            if !self.available(x) {
                continue;
            }
            self.take(x);
            cell.push(x);
            if self.remaining_ok(cells_left) {
                self.rows[r].push(cell.clone());
                self.go(k + 1, visit);
                self.rows[r].pop();
            }
            self.subsets(x + 1, k, cells_left, cell, visit);
            cell.pop();
            self.give(x);
        }
    }
}

/// Kostka number `K_{λμ}`: semistandard tableaux of shape `λ` and weight `μ`.
pub fn kostka(lambda: &Partition, mu: &Composition) -> u64 {
    count(&SkewShape::straight(lambda.clone()), FillingClass::Ssyt, &Constraint::Weight(mu.clone()))
        .expect("straight shape")
}

/// `k_{shape,μ}`: signed count of set-valued tableaux of weight `μ`, with
/// sign `(−1)^{|μ| − #cells}`.
pub fn k_coeff(shape: &SkewShape, mu: &Composition) -> i64 {
    let cells = shape.num_cells();
    if mu.size() < cells {
        return 0;
    }
    let n = count(shape, FillingClass::Svt, &Constraint::Weight(mu.clone())).expect("skew shape") as i64;
    if (mu.size() - cells).is_multiple_of(2) {
        n
    } else {
        -n
    }
}

/// `r_{shape,α}`: reverse plane partitions of column-count weight `α`.
pub fn r_coeff(shape: &SkewShape, alpha: &Composition) -> u64 {
    count(shape, FillingClass::Rpp, &Constraint::Weight(alpha.clone())).expect("skew shape")
}

/// `F^λ_μ`: strict elegant fillings of `λ/μ`; zero when `μ ⊄ λ`.
pub fn elegant_count(lambda: &Partition, mu: &Partition) -> u64 {
    match SkewShape::new(lambda.clone(), mu.clone()) {
        Ok(shape) => count(&shape, FillingClass::Elegant, &Constraint::Free).expect("skew shape"),
        Err(_) => 0,
    }
}
