//! The table of component counts `K_n^l` and its defining recurrence.
//!
//! Two columns are grounded directly in the updown numbers (for `n >= 1`):
//!
//! ```text
//! K_n^0 = Kbar_{n-1}          K_n^1 = Kbar_{n+1}
//! ```
//!
//! and every other cell is reached by rearranging
//!
//! ```text
//! K_{n-2}^{l+1} = K_n^l - n l K_n^{l-1}
//! ```
//!
//! into `K_n^l = K_{n+2}^{l-1} - (n+2)(l-1) K_{n+2}^{l-2}`. The recurrence
//! runs backwards into `n <= 0`, where it no longer determines every cell:
//! a cell whose needed dependency would sit in column `l < 0`, or is itself
//! undetermined, is [`CellValue::Unknown`]. When the coefficient
//! `(n+2)(l-1)` vanishes the second dependency is not needed at all, and the
//! cell stays determined even if that dependency is Unknown; this shortcut is
//! what fills the triangle of zeros and factorials below `n = 0`. Unknown is
//! a value, not an error; asking for a cell with `l < 0` is an error.

use std::collections::HashMap;

use crate::error::{check_guard, Error, Result};
use crate::euler::EulerSequence;
use crate::report::{Mismatch, Section, Status};
use crate::series::factorial;
use crate::Count;

/// Largest updown index the recurrence will extend the seed sequence to.
pub const EULER_INDEX_GUARD: usize = 5000;
/// Largest number of cells a single [`Recurrence::table`] call materializes.
pub const TABLE_CELLS_GUARD: u64 = 2_000_000;
/// Largest depth accepted by [`corollary3_check`].
pub const COROLLARY3_MAX_DEPTH: u32 = 30;

/// A table entry: determined, or not determined by the seed plus recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellValue {
    Known(Count),
    Unknown,
}

impl CellValue {
    pub fn known(&self) -> Option<&Count> {
        match self {
            CellValue::Known(v) => Some(v),
            CellValue::Unknown => None,
        }
    }
}

/// How a cell was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Seed column `l = 0`, `n >= 1`: `Kbar_{n-1}`.
    BaseL0,
    /// Seed column `l = 1`, `n >= 1`: `Kbar_{n+1}`.
    BaseL1,
    /// Everything else: the rearranged recurrence.
    Recurrence,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::BaseL0 => "BaseL0",
            Provenance::BaseL1 => "BaseL1",
            Provenance::Recurrence => "Recurrence",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub n: i64,
    pub l: u32,
    pub value: CellValue,
    pub provenance: Provenance,
}

/// A rectangular window of cells, rows ordered by descending `n` and columns
/// by ascending `l` (the layout the table is usually printed in).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseTable {
    n_min: i64,
    n_max: i64,
    l_max: u32,
    cells: Vec<Cell>,
}

impl MorseTable {
    pub fn n_min(&self) -> i64 {
        self.n_min
    }

    pub fn n_max(&self) -> i64 {
        self.n_max
    }

    pub fn l_max(&self) -> u32 {
        self.l_max
    }

    pub fn get(&self, n: i64, l: u32) -> Option<&Cell> {
        if n < self.n_min || n > self.n_max || l > self.l_max {
            return None;
        }
        let row = (self.n_max - n) as usize;
        Some(&self.cells[row * (self.l_max as usize + 1) + l as usize])
    }

    /// All cells, row-major in the printed order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }
}

/// Memoized evaluator for `K_n^l`.
///
/// The memo is owned and mutated through `&mut self`, so an instance is
/// thread-confined by construction; independent instances compute identical
/// values.
#[derive(Debug)]
pub struct Recurrence {
    euler: EulerSequence,
    memo: HashMap<(i64, u32), CellValue>,
}

impl Default for Recurrence {
    fn default() -> Self {
        Self::new()
    }
}

impl Recurrence {
    pub fn new() -> Recurrence {
        Recurrence {
            euler: EulerSequence::new(0),
            memo: HashMap::new(),
        }
    }

    /// Seed cell `K_n^0 = Kbar_{n-1}` or `K_n^1 = Kbar_{n+1}` (`n >= 1`).
    pub fn base_cell(&mut self, n: i64, l: u32) -> Result<Count> {
        if n < 1 || l > 1 {
            return Err(Error::domain(format!(
                "base cells exist only for n >= 1 and l in {{0, 1}} (got n = {n}, l = {l})"
            )));
        }
        let index = if l == 0 { n - 1 } else { n + 1 } as usize;
        check_guard("euler_index", index as u64, EULER_INDEX_GUARD as u64)?;
        self.euler.extend_to(index);
        Ok(self.euler.get(index).clone())
    }

    /// `K_n^l` for any integer `n`; `l < 0` is a domain error, while cells
    /// the recurrence cannot determine come back as `Unknown`.
    pub fn cell(&mut self, n: i64, l: i64) -> Result<CellValue> {
        if l < 0 {
            return Err(Error::domain(format!(
                "column index l must be non-negative (got {l})"
            )));
        }
        if l > u32::MAX as i64 {
            return Err(Error::Guard {
                guard: "column_index",
                limit: u32::MAX as u64,
                actual: l as u64,
            });
        }
        self.cell_inner(n, l as u32)
    }

    fn cell_inner(&mut self, n: i64, l: u32) -> Result<CellValue> {
        let mut stack = vec![(n, l)];
        while let Some(&(cn, cl)) = stack.last() {
            if self.memo.contains_key(&(cn, cl)) {
                stack.pop();
                continue;
            }
            if cn >= 1 && cl <= 1 {
                let v = self.base_cell(cn, cl)?;
                self.memo.insert((cn, cl), CellValue::Known(v));
                stack.pop();
                continue;
            }
            if cl == 0 {
                // n <= 0 and no seed: the recurrence would need column -1.
                self.memo.insert((cn, cl), CellValue::Unknown);
                stack.pop();
                continue;
            }
            let n2 = cn
                .checked_add(2)
                .ok_or_else(|| Error::domain("n out of representable range"))?;
            // The second dependency enters with coefficient (n+2)(l-1); when
            // that vanishes the dependency is never consulted, Unknown or not.
            let needs_second = n2 != 0 && cl >= 2;
            let first = (n2, cl - 1);
            let second = (n2, cl.wrapping_sub(2));
            let mut missing = Vec::new();
            if !self.memo.contains_key(&first) {
                missing.push(first);
            }
            if needs_second && !self.memo.contains_key(&second) {
                missing.push(second);
            }
            if !missing.is_empty() {
                stack.extend(missing);
                continue;
            }
            let value = match (&self.memo[&first], needs_second) {
                (CellValue::Unknown, _) => CellValue::Unknown,
                (CellValue::Known(a), false) => CellValue::Known(a.clone()),
                (CellValue::Known(a), true) => match &self.memo[&second] {
                    CellValue::Unknown => CellValue::Unknown,
                    CellValue::Known(b) => {
                        let coeff = Count::from(n2) * Count::from(cl as i64 - 1);
                        CellValue::Known(a - coeff * b)
                    }
                },
            };
            self.memo.insert((cn, cl), value);
            stack.pop();
        }
        Ok(self.memo[&(n, l)].clone())
    }

    /// The window `n_min ..= n_max` by `0 ..= l_max`, with provenance.
    pub fn table(&mut self, n_min: i64, n_max: i64, l_max: u32) -> Result<MorseTable> {
        if n_min > n_max {
            return Err(Error::domain(format!(
                "empty row range: n_min = {n_min} > n_max = {n_max}"
            )));
        }
        let rows = (n_max as i128 - n_min as i128 + 1) as u128;
        let cells = rows * (l_max as u128 + 1);
        check_guard(
            "table_cells",
            cells.min(u64::MAX as u128) as u64,
            TABLE_CELLS_GUARD,
        )?;
        let mut out = Vec::with_capacity(cells as usize);
        for n in (n_min..=n_max).rev() {
            for l in 0..=l_max {
                let value = self.cell_inner(n, l)?;
                let provenance = match (n >= 1, l) {
                    (true, 0) => Provenance::BaseL0,
                    (true, 1) => Provenance::BaseL1,
                    _ => Provenance::Recurrence,
                };
                out.push(Cell {
                    n,
                    l,
                    value,
                    provenance,
                });
            }
        }
        Ok(MorseTable {
            n_min,
            n_max,
            l_max,
            cells: out,
        })
    }
}

/// Checks the structure of the rows `n <= 0`: every cell above the
/// anti-diagonal vanishes, the anti-diagonal itself carries factorials,
///
/// ```text
/// K_n^l = 0 for l > -n,   K_n^{-n} = (-n-1)!   (n <= -1),
/// K_0^l = 0 for l > 1,
/// ```
///
/// down to `n = -depth`, with the zero band checked through
/// `l = -n + depth`.
pub fn corollary3_check(rec: &mut Recurrence, depth: u32) -> Result<Section> {
    if depth == 0 {
        return Err(Error::domain("corollary3_check needs depth >= 1"));
    }
    check_guard("corollary3_depth", depth as u64, COROLLARY3_MAX_DEPTH as u64)?;
    let mut section = Section::new(
        "corollary3",
        "K_n^{-n} = (-n-1)! and K_n^l = 0 for l > -n (n <= -1); K_0^l = 0 for l > 1",
    );
    let mut checked = 0usize;
    let mut expect = |section: &mut Section, value: &CellValue, want: &Count, n: i64, l: u32| {
        checked += 1;
        match value {
            CellValue::Known(v) if v == want => {}
            CellValue::Known(v) => section.details.push(Mismatch::new(
                format!("K_{n}^{l}"),
                v.to_string(),
                want.to_string(),
            )),
            CellValue::Unknown => section.details.push(Mismatch::new(
                format!("K_{n}^{l}"),
                "Unknown",
                want.to_string(),
            )),
        }
    };
    let zero = Count::from(0);
    for d in 1..=depth {
        let n = -(d as i64);
        let diag = rec.cell_inner(n, d)?;
        expect(&mut section, &diag, &factorial(d as usize - 1), n, d);
        for l in d + 1..=d + depth {
            let v = rec.cell_inner(n, l)?;
            expect(&mut section, &v, &zero, n, l);
        }
    }
    for l in 2..=depth + 1 {
        let v = rec.cell_inner(0, l)?;
        expect(&mut section, &v, &zero, 0, l);
    }
    section.status = if section.details.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    section.notes.push(format!(
        "checked {checked} cells: diagonal factorials and zero bands for n = -1 ..= -{depth}, \
         plus the row n = 0 for 2 <= l <= {}",
        depth + 1
    ));
    Ok(section)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn known(rec: &mut Recurrence, n: i64, l: i64) -> i64 {
        match rec.cell(n, l).unwrap() {
            CellValue::Known(v) => i64::try_from(&v).unwrap(),
            CellValue::Unknown => panic!("cell ({n}, {l}) unexpectedly Unknown"),
        }
    }

    fn is_unknown(rec: &mut Recurrence, n: i64, l: i64) -> bool {
        matches!(rec.cell(n, l).unwrap(), CellValue::Unknown)
    }

    #[test]
    fn seed_cells() {
        let mut rec = Recurrence::new();
        assert_eq!(rec.base_cell(2, 1).unwrap(), Count::from(2));
        assert_eq!(rec.base_cell(4, 0).unwrap(), Count::from(2));
        assert_eq!(rec.base_cell(3, 0).unwrap(), Count::from(1));
        assert_eq!(rec.base_cell(3, 1).unwrap(), Count::from(5));
        assert!(rec.base_cell(0, 0).is_err());
        assert!(rec.base_cell(3, 2).is_err());
    }

    #[test]
    fn spot_values() {
        let mut rec = Recurrence::new();
        assert_eq!(known(&mut rec, 3, 2), 36);
        assert_eq!(known(&mut rec, 0, 1), 1);
        assert_eq!(known(&mut rec, -4, 4), 6);
        assert_eq!(known(&mut rec, 1, 4), 24);
        assert!(is_unknown(&mut rec, -2, 1));
        assert!(rec.cell(3, -1).is_err());
    }

    #[test]
    fn positive_rows_match_closed_products() {
        // Row n = 1 is l! and row n = 2 is 2^l l!.
        let mut rec = Recurrence::new();
        let mut fact = 1i64;
        for l in 0..=8i64 {
            if l > 1 {
                fact *= l;
            }
            assert_eq!(known(&mut rec, 1, l), fact, "row 1, l = {l}");
            assert_eq!(
                known(&mut rec, 2, l),
                fact << l,
                "row 2, l = {l}"
            );
        }
    }

    #[test]
    fn non_positive_window_matches_the_known_layout() {
        let mut rec = Recurrence::new();
        let t = rec.table(-5, 0, 5).unwrap();
        let expect: [(i64, [Option<i64>; 5]); 6] = [
            (0, [Some(1), Some(0), Some(0), Some(0), Some(0)]),
            (-1, [Some(1), Some(0), Some(0), Some(0), Some(0)]),
            (-2, [None, Some(1), Some(0), Some(0), Some(0)]),
            (-3, [None, None, Some(2), Some(0), Some(0)]),
            (-4, [None, None, None, Some(6), Some(0)]),
            (-5, [None, None, None, None, Some(24)]),
        ];
        for (n, row) in expect {
            for (i, want) in row.iter().enumerate() {
                let l = i as u32 + 1;
                let cell = t.get(n, l).unwrap();
                match want {
                    Some(v) => assert_eq!(
                        cell.value.known().map(|c| i64::try_from(c).unwrap()),
                        Some(*v),
                        "cell ({n}, {l})"
                    ),
                    None => assert_eq!(cell.value, CellValue::Unknown, "cell ({n}, {l})"),
                }
            }
            // Column l = 0 is undetermined everywhere in this window.
            assert_eq!(t.get(n, 0).unwrap().value, CellValue::Unknown);
        }
    }

    #[test]
    fn provenance_marks_the_seed_columns() {
        let mut rec = Recurrence::new();
        let t = rec.table(-1, 3, 2).unwrap();
        assert_eq!(t.get(3, 0).unwrap().provenance, Provenance::BaseL0);
        assert_eq!(t.get(3, 1).unwrap().provenance, Provenance::BaseL1);
        assert_eq!(t.get(3, 2).unwrap().provenance, Provenance::Recurrence);
        assert_eq!(t.get(-1, 0).unwrap().provenance, Provenance::Recurrence);
        assert_eq!(t.get(-1, 1).unwrap().provenance, Provenance::Recurrence);
    }

    #[test]
    fn recurrence_identity_holds_wherever_determined() {
        let mut rec = Recurrence::new();
        for n in -6..=8i64 {
            for l in 0..=6i64 {
                let lhs = rec.cell(n - 2, l + 1).unwrap();
                let a = rec.cell(n, l).unwrap();
                let b = if n * l == 0 {
                    CellValue::Known(Count::from(0))
                } else {
                    rec.cell(n, l - 1).unwrap()
                };
                if let (CellValue::Known(lhs), CellValue::Known(a), CellValue::Known(b)) =
                    (lhs, a, b)
                {
                    assert_eq!(
                        lhs,
                        a - Count::from(n * l) * b,
                        "identity broken at (n, l) = ({n}, {l})"
                    );
                }
            }
        }
    }

    #[test]
    fn table_bounds_and_guards() {
        let mut rec = Recurrence::new();
        assert!(rec.table(2, 1, 3).is_err());
        match rec.table(0, 3_000_000, 0) {
            Err(Error::Guard { guard, .. }) => assert_eq!(guard, "table_cells"),
            other => panic!("expected guard refusal, got {other:?}"),
        }
        let t = rec.table(-2, 2, 1).unwrap();
        assert!(t.get(3, 0).is_none());
        assert!(t.get(0, 2).is_none());
        assert_eq!(t.get(2, 1).unwrap().value.known(), Some(&Count::from(2)));
    }

    #[test]
    fn diagonal_factorial_structure() {
        let mut rec = Recurrence::new();
        let section = corollary3_check(&mut rec, 8).unwrap();
        assert_eq!(section.status, Status::Pass);
        assert!(section.details.is_empty());
        assert!(corollary3_check(&mut rec, 0).is_err());
        assert!(corollary3_check(&mut rec, 31).is_err());
    }
}
