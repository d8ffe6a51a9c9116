//! Maps between the filling families: `∂` from reverse plane partitions to
//! augmented tabloids and back, dilation and `φ` from set-valued tableaux to
//! elegant fillings, and the sign-reversing involution `τ`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::{self, validate, Constraint, Filling, FillingClass, Letter};
use crate::inflated::{inflated_weight, AugmentedFilling};
use crate::rsk;
use crate::shapes::{Partition, SkewShape};

/// `∂(R)`: row `x` of the tabloid lists, in increasing order, the rows of
/// the topmost `x` in each column of `R` containing `x`. Returns `T * T_λ`
/// where `λ` is the inner shape of `R`.
pub fn partial_map(r: &Filling) -> Result<AugmentedFilling> {
    if !validate(r, FillingClass::Rpp) {
        return Err(Error::InvalidFilling(format!("{r:?} is not a reverse plane partition")));
    }
    let shape = r.skew_shape().expect("validated");
    let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); r.max_entry() as usize];
    for ((row, col), cell) in r.cells() {
        let x = cell[0];
        if r.cell(row + 1, col) != Some(&[x][..]) {
            rows[x as usize - 1].push(row as Letter);
        }
    }
    for row in &mut rows {
        row.sort_unstable();
    }
    let lengths = rows.iter().map(Vec::len).collect();
    let cells = rows.into_iter().map(|r| r.into_iter().map(|x| vec![x]).collect()).collect();
    let top = Filling::new(lengths, Vec::new(), cells)?;
    Ok(AugmentedFilling::new(top, shape.inner))
}

/// Inverse of [`partial_map`]: rebuilds the reverse plane partition of shape
/// `ν/λ`. Letter `i` goes, for each entry `e` of tabloid row `i` taken right
/// to left, into the leftmost empty cell of row `e`, and floods the empty
/// cells beneath it in that column.
pub fn partial_inverse(a: &AugmentedFilling, nu: &Partition) -> Result<Filling> {
    if a.top.has_multicell() || !validate(&a.top, FillingClass::Tabloid) {
        return Err(Error::InvalidFilling("top of an augmented tabloid must be a tabloid".into()));
    }
    let iwt = inflated_weight(a);
    if &iwt != nu {
        return Err(Error::NotInImage(format!("inflated weight is {iwt:?}, not {nu:?}")));
    }
    let shape = SkewShape::new(nu.clone(), a.lambda.clone())?;
    let mut grid: BTreeMap<(usize, usize), Letter> = BTreeMap::new();
    for i in 1..=a.top.num_rows() {
        for cell in a.top.row(i).iter().rev() {
            let e = cell[0] as usize;
            if e == 0 || e > shape.num_rows() {
                return Err(Error::NotInImage(format!("row {e} lies outside the shape")));
            }
            let (first, last) = shape.row_span(e);
            let col = (first..=last)
                .find(|&c| !grid.contains_key(&(e, c)))
                .ok_or_else(|| Error::NotInImage(format!("row {e} has no empty cell for letter {i}")))?;
            grid.insert((e, col), i as Letter);
            for below in (1..e).rev() {
                if !shape.contains_cell((below, col)) || grid.contains_key(&(below, col)) {
                    break;
                }
                grid.insert((below, col), i as Letter);
            }
        }
    }
    let rows: Vec<Vec<Vec<Letter>>> = (1..=shape.num_rows())
        .map(|row| {
            let (first, last) = shape.row_span(row);
            (first..=last).map(|c| grid.get(&(row, c)).map(|&x| vec![x]).unwrap_or_default()).collect()
        })
        .collect();
    if rows.iter().flatten().any(Vec::is_empty) {
        return Err(Error::NotInImage("construction leaves empty cells".into()));
    }
    let r = Filling::from_shape(&shape, rows)?;
    if partial_map(&r).ok().as_ref() != Some(a) {
        return Err(Error::NotInImage("reconstruction does not map back".into()));
    }
    Ok(r)
}

/// One dilation step, recorded on the tableau it was applied to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DilationStep {
    pub before: Filling,
    /// Highest row holding a multicell.
    pub row: usize,
    /// Largest entry of the rightmost multicell of that row.
    pub ejected: Letter,
    /// Cell created by the insertion.
    pub new_cell: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DilationTrace {
    pub steps: Vec<DilationStep>,
    pub terminal: Filling,
}

fn require_straight_svt(s: &Filling) -> Result<Partition> {
    if !validate(s, FillingClass::Svt) {
        return Err(Error::InvalidFilling(format!("{s:?} is not a set-valued tableau")));
    }
    s.straight_shape().ok_or_else(|| Error::Unsupported("dilation is defined here for straight shapes".into()))
}

/// `di(S)`: removes the largest entry of the rightmost multicell in the
/// highest row holding one, and row-inserts it into the rows above.
pub fn dilate(s: &Filling) -> Result<(Filling, DilationStep)> {
    require_straight_svt(s)?;
    let row = (1..=s.num_rows()).rev().find(|&r| s.row(r).iter().any(|c| c.len() > 1)).ok_or(Error::AlreadyTerminal)?;
    let k = s.row(row).iter().rposition(|c| c.len() > 1).unwrap();
    let mut rows = s.rows().to_vec();
    let ejected = rows[row - 1][k].pop().unwrap();
    let mut above: Vec<Vec<Letter>> = rows[row..].iter().map(|r| r.iter().map(|c| c[0]).collect()).collect();
    let (dr, col) = rsk::row_insert(&mut above, ejected, 0);
    rows.truncate(row);
    rows.extend(above.into_iter().map(|r| r.into_iter().map(|x| vec![x]).collect()));
    let next = Filling::from_rows(rows)?;
    Ok((next, DilationStep { before: s.clone(), row, ejected, new_cell: (row + dr, col) }))
}

/// Iterated dilation until no multicell remains.
pub fn dilation_trace(s: &Filling) -> Result<DilationTrace> {
    require_straight_svt(s)?;
    let mut cur = s.clone();
    let mut steps = Vec::new();
    while cur.has_multicell() {
        let (next, step) = dilate(&cur)?;
        steps.push(step);
        cur = next;
    }
    Ok(DilationTrace { steps, terminal: cur })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiResult {
    /// Strict elegant filling of `shape(terminal)/shape(S)`.
    pub elegant: Filling,
    pub terminal: Filling,
    pub trace: DilationTrace,
}

/// `φ(S)`: each cell created by a dilation step records its row minus the
/// row the step ejected from.
pub fn phi(s: &Filling) -> Result<PhiResult> {
    let start = require_straight_svt(s)?;
    let trace = dilation_trace(s)?;
    let end = trace.terminal.straight_shape().expect("dilation keeps straight shapes");
    let shape = SkewShape::new(end, start)?;
    let mut values = BTreeMap::new();
    for step in &trace.steps {
        values.insert(step.new_cell, (step.new_cell.0 - step.row) as Letter);
    }
    let rows = (1..=shape.num_rows())
        .map(|r| {
            let (a, b) = shape.row_span(r);
            (a..=b).map(|c| vec![values[&(r, c)]]).collect()
        })
        .collect();
    let elegant = Filling::from_shape(&shape, rows)?;
    Ok(PhiResult { elegant, terminal: trace.terminal.clone(), trace })
}

/// All set-valued tableaux of shape `η` whose set-valued row word is Knuth
/// equivalent to the row word of `T`, by exhaustive search over the
/// weight of `T`.
pub fn phi_t_fiber(t: &Filling, eta: &Partition) -> Result<Vec<Filling>> {
    if !validate(t, FillingClass::Ssyt) || !t.is_straight() {
        return Err(Error::InvalidFilling(format!("{t:?} is not a straight semistandard tableau")));
    }
    let target = rsk::insertion_tableau(&fillings::row_word(t)?);
    let mut out = Vec::new();
    fillings::for_each(eta.parts(), &[], FillingClass::Svt, &Constraint::Weight(t.content()), &mut |s| {
        if rsk::insertion_tableau(&fillings::sv_row_word(s)) == target {
            out.push(s.clone());
        }
    })?;
    Ok(out)
}

/// Where `τ` acted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauToggle {
    /// Rightmost column `c` with `S_{≥c}` not column `λ`-Yamanouchi.
    pub column: usize,
    /// The offending letter `y`.
    pub letter: Letter,
    /// Row of the cell in column `c` holding that `y`.
    pub row: usize,
    /// Leftmost cell of that row containing `y`.
    pub cell_min: (usize, usize),
    /// Whether `y−1` was inserted (true) or deleted (false).
    pub added: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauOutcome {
    pub result: AugmentedFilling,
    /// `None` at a fixed point.
    pub toggle: Option<TauToggle>,
}

/// `τ` on `S * T_λ`. Fixed points are the column `λ`-Yamanouchi tableaux;
/// otherwise `y−1` is toggled in the leftmost cell of row `r` containing `y`,
/// where `y` at `(r, c)` is the rightmost letter of `w(S)·w(T_λ)` whose
/// suffix holds more `y`s than `(y−1)`s.
pub fn tau(a: &AugmentedFilling) -> Result<TauOutcome> {
    let s = &a.top;
    if !validate(s, FillingClass::Svt) {
        return Err(Error::InvalidFilling(format!("{s:?} is not a set-valued tableau")));
    }
    let word = fillings::column_word_positions(s);
    let top = word.iter().map(|w| w.0).max().unwrap_or(0) as usize;
    let mut counts: Vec<usize> =
        (0..=top.max(a.lambda.len())).map(|i| if i == 0 { 0 } else { a.lambda.get(i - 1) }).collect();
    let mut failure = None;
    for &(y, pos) in word.iter().rev() {
        let y = y as usize;
        counts[y] += 1;
        if y >= 2 && counts[y] > counts[y - 1] {
            failure = Some((y as Letter, pos));
            break;
        }
    }
    let Some((y, (row, column))) = failure else {
        return Ok(TauOutcome { result: a.clone(), toggle: None });
    };
    let (first, last) = (s.inner()[row - 1] + 1, s.outer()[row - 1]);
    let min_col = (first..=last).find(|&c| s.cell(row, c).is_some_and(|e| e.contains(&y))).expect("row holds y");
    let mut next = s.clone();
    let cell = next.cell_mut(row, min_col).unwrap();
    let added = match cell.binary_search(&(y - 1)) {
        Ok(i) => {
            cell.remove(i);
            false
        }
        Err(i) => {
            cell.insert(i, y - 1);
            true
        }
    };
    if !validate(&next, FillingClass::Svt) {
        return Err(Error::Invariant(format!("tau produced {next:?} from {s:?}")));
    }
    Ok(TauOutcome {
        result: AugmentedFilling::new(next, a.lambda.clone()),
        toggle: Some(TauToggle { column, letter: y, row, cell_min: (row, min_col), added }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inflated::inflated_weight;
    use crate::part;

    fn f(s: &str) -> Filling {
        Filling::from_notation(s).unwrap()
    }

    #[test]
    fn partial_map_example() {
        let r = f(". . 2 2 / 1 1 2 / 1 3 / 1");
        let a = partial_map(&r).unwrap();
        assert_eq!(a.top, f("2 4 / 1 2 / 3"));
        assert_eq!(a.lambda, part![2]);
        assert_eq!(inflated_weight(&a), part![4, 3, 2, 1]);
        assert_eq!(partial_inverse(&a, &part![4, 3, 2, 1]).unwrap(), r);
    }

    #[test]
    fn partial_map_trivial_cases() {
        let lambda = part![2, 1];
        let a = partial_map(&Filling::empty_of(&lambda)).unwrap();
        assert_eq!(a, AugmentedFilling::bare(lambda.clone()));
        assert_eq!(partial_inverse(&a, &lambda).unwrap(), Filling::empty_of(&lambda));

        let nu = part![3, 2, 2];
        let t = Filling::superstandard(&nu);
        let a = partial_map(&t).unwrap();
        // row x of the tabloid lists x once per column of height ≥ x
        assert_eq!(a.top, f("1 1 1 / 2 2 / 3 3"));
        assert_eq!(inflated_weight(&a), nu);
    }

    #[test]
    fn partial_inverse_rejects_wrong_target() {
        let a = partial_map(&f(". . 2 2 / 1 1 2 / 1 3 / 1")).unwrap();
        assert!(matches!(partial_inverse(&a, &part![4, 3, 2]), Err(Error::NotInImage(_))));
    }

    #[test]
    fn dilation_example() {
        let s = f("1 1,2 2,3 5 / 3,4 4,5,6 8 / 6 7 / 7");
        let (d, step) = dilate(&s).unwrap();
        assert_eq!((step.row, step.ejected), (2, 6));
        assert_eq!(d, f("1 1,2 2,3 5 / 3,4 4,5 8 / 6 6 / 7 7"));
        assert_eq!(d.content(), s.content());

        let (d, step) = dilate(&f("1 1,2")).unwrap();
        assert_eq!(d, f("1 1 / 2"));
        assert_eq!(step.new_cell, (2, 1));

        assert_eq!(dilate(&f("1 2 / 3")).unwrap_err(), Error::AlreadyTerminal);
    }

    #[test]
    fn phi_example() {
        let s = f("1 1 1,2,3,4 / 2 2,3 / 4");
        let p = phi(&s).unwrap();
        assert_eq!(p.elegant, f(". . . / . . 1 / . 2 / 2 3"));
        assert_eq!(p.terminal, f("1 1 1 / 2 2 2 / 3 3 / 4 4"));
        let chain: Vec<Filling> = p.trace.steps.iter().map(|s| s.before.clone()).collect();
        assert_eq!(
            chain,
            vec![
                f("1 1 1,2,3,4 / 2 2,3 / 4"),
                f("1 1 1,2,3,4 / 2 2 / 3 / 4"),
                f("1 1 1,2,3 / 2 2 4 / 3 / 4"),
                f("1 1 1,2 / 2 2 3 / 3 4 / 4"),
            ]
        );
        assert!(validate(&p.elegant, FillingClass::Elegant));

        let t = f("1 1 2 / 2 3");
        let p = phi(&t).unwrap();
        assert_eq!(p.terminal, t);
        assert_eq!(p.elegant.num_cells(), 0);
    }

    #[test]
    fn fibers() {
        let t11 = Filling::superstandard(&part![1, 1]);
        assert_eq!(phi_t_fiber(&t11, &part![1]).unwrap(), vec![f("1,2")]);
        let t21 = Filling::superstandard(&part![2, 1]);
        assert_eq!(phi_t_fiber(&t21, &part![2, 1]).unwrap(), vec![t21.clone()]);
        assert!(phi_t_fiber(&t21, &part![1]).unwrap().is_empty());
    }

    #[test]
    fn tau_example() {
        let a = AugmentedFilling::new(f("5,7 7"), part![2, 1]);
        let out = tau(&a).unwrap();
        assert_eq!(out.result.top, f("5,6,7 7"));
        let t = out.toggle.clone().unwrap();
        assert_eq!((t.column, t.letter, t.row, t.cell_min, t.added), (2, 7, 1, (1, 1), true));
        let back = tau(&out.result).unwrap();
        assert_eq!(back.result, a);
        assert!(!back.toggle.unwrap().added);

        let fixed = AugmentedFilling::new(f("1"), part![]);
        assert_eq!(tau(&fixed).unwrap().toggle, None);
    }
}
