//! Exact truncated power series over the rationals.
//!
//! A [`Series`] holds coefficients `a_0 ..= a_N` of a formal series known
//! through order `N`; every operation truncates to the order its inputs
//! justify (the minimum of the operand orders unless the operation itself
//! gains or loses a degree). A [`BiSeries`] is the two-variable analogue on a
//! rectangular coefficient window.
//!
//! The module also builds the specific exponential generating functions of
//! the component counts: `K(t) = tan(t) + sec(t)` for the updown numbers, the
//! closed forms of the columns `K_l(t) = sum_n K_n^l t^n / n!` for
//! `l = 0 ..= 4`, the same columns assembled from the recurrence table, and
//! the residual of the governing PDE `K_x = (1-2x) K_yy - x y K_yyy`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{check_guard, Error, Result};
use crate::table::{CellValue, Recurrence};
use crate::Count;

pub type Rat = BigRational;

/// Largest order accepted by [`egf_k`].
pub const EGF_K_MAX_ORDER: usize = 60;
/// Largest order accepted by [`egf_column_closed`].
pub const EGF_COLUMN_MAX_ORDER: usize = 40;

pub(crate) fn factorial(k: usize) -> Count {
    let mut f = Count::from(1);
    for i in 2..=k {
        f *= Count::from(i);
    }
    f
}

fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Count::from(v))
}

/// One-variable series known through a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Wraps explicit coefficients `a_0 ..= a_N` (`coeffs` must be non-empty).
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Series {
        assert!(!coeffs.is_empty(), "a series carries at least order 0");
        Series { coeffs }
    }

    pub fn constant(value: Rat, order: usize) -> Series {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = value;
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Series {
        Series::constant(Rat::zero(), order)
    }

    pub fn one(order: usize) -> Series {
        Series::constant(Rat::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Drops coefficients beyond `order` (which must not exceed the known
    /// order).
    pub fn truncate(&self, order: usize) -> Series {
        assert!(
            order <= self.order(),
            "cannot extend a series from order {} to {}",
            self.order(),
            order
        );
        Series::from_coeffs(self.coeffs[..=order].to_vec())
    }

    pub fn add(&self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        Series { coeffs }
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect();
        Series { coeffs }
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![Rat::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                let term = &self.coeffs[i] * &rhs.coeffs[j];
                coeffs[i + j] += term;
            }
        }
        Series { coeffs }
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Series quotient; the divisor needs a non-zero constant term.
    pub fn div(&self, rhs: &Series) -> Result<Series> {
        if rhs.coeffs[0].is_zero() {
            return Err(Error::domain(
                "series division requires a divisor with non-zero constant term",
            ));
        }
        let n = self.order().min(rhs.order());
        let mut q = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                if i <= rhs.order() {
                    acc -= &rhs.coeffs[i] * &q[k - i];
                }
            }
            q.push(acc / &rhs.coeffs[0]);
        }
        Ok(Series { coeffs: q })
    }

    /// Termwise derivative, dropping one order.
    pub fn derive(&self) -> Result<Series> {
        if self.order() == 0 {
            return Err(Error::domain(
                "derivative of an order-0 series carries no information",
            ));
        }
        let coeffs = (1..=self.order())
            .map(|k| &self.coeffs[k] * rat_int(k as i64))
            .collect();
        Ok(Series { coeffs })
    }

    /// Antiderivative with constant term 0, gaining one order.
    pub fn integrate(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        for (k, a) in self.coeffs.iter().enumerate() {
            coeffs.push(a / rat_int(k as i64 + 1));
        }
        Series { coeffs }
    }

    /// Multiplication by `t`, gaining one order.
    pub fn shift_up(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Substitution `self(inner)`; `inner` needs constant term 0.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::domain(
                "series composition requires an inner series with constant term 0",
            ));
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// `k! * a_k` for every coefficient, the integer form of an EGF column.
    pub fn egf_scaled(&self) -> Vec<Rat> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a * Rat::from_integer(factorial(k)))
            .collect()
    }
}

/// Maclaurin series of `sin`.
pub fn sin(order: usize) -> Series {
    let mut coeffs = vec![Rat::zero(); order + 1];
    for (k, c) in coeffs.iter_mut().enumerate() {
        if k % 2 == 1 {
            let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
            *c = Rat::new(Count::from(sign), factorial(k));
        }
    }
    Series { coeffs }
}

/// Maclaurin series of `cos`.
pub fn cos(order: usize) -> Series {
    let mut coeffs = vec![Rat::zero(); order + 1];
    for (k, c) in coeffs.iter_mut().enumerate() {
        if k % 2 == 0 {
            let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
            *c = Rat::new(Count::from(sign), factorial(k));
        }
    }
    Series { coeffs }
}

pub fn tan(order: usize) -> Series {
    sin(order)
        .div(&cos(order))
        .expect("cos has constant term 1")
}

pub fn sec(order: usize) -> Series {
    Series::one(order)
        .div(&cos(order))
        .expect("cos has constant term 1")
}

/// `tan(t) + sec(t)`, the EGF of the updown numbers.
pub fn egf_k(order: usize) -> Result<Series> {
    check_guard("egf_k_order", order as u64, EGF_K_MAX_ORDER as u64)?;
    Ok(tan(order).add(&sec(order)))
}

/// Closed form of the column EGF `K_l(t)` for `l = 0 ..= 4`.
///
/// `k3_prefactor` only enters at `l = 3`, where the constant in front of the
/// closed form is contested; pass 3 for the value that matches the table and
/// 7 for the printed variant.
pub fn egf_column_closed(l: u32, order: usize, k3_prefactor: &Rat) -> Result<Series> {
    check_guard("egf_column_order", order as u64, EGF_COLUMN_MAX_ORDER as u64)?;
    match l {
        0 => {
            if order == 0 {
                return Ok(Series::zero(0));
            }
            Ok(tan(order - 1).integrate().add(&sec(order - 1).integrate()))
        }
        1 => {
            let denom = Series::one(order).sub(&sin(order));
            Series::one(order).div(&denom)
        }
        2 => {
            let s = sin(order);
            let num = s.scale(&rat_int(3)).sub(&cos(order).shift_up().truncate(order));
            let one_minus = Series::one(order).sub(&s);
            num.div(&one_minus.mul(&one_minus))
        }
        3 => {
            let s = sin(order);
            let c = cos(order);
            let left = s.mul(&s.scale(&rat_int(3)).add(&Series::constant(rat_int(7), order)));
            let right = c
                .mul(&s.add(&Series::constant(rat_int(5), order)))
                .shift_up()
                .truncate(order);
            let num = left.sub(&right).scale(k3_prefactor);
            let one_minus = Series::one(order).sub(&s);
            num.div(&one_minus.mul(&one_minus).mul(&one_minus))
        }
        4 => {
            // Printed as a fourth derivative, so the inner expression is
            // built four orders deep and differentiated down.
            let n = order + 4;
            let s = sin(n);
            let c = cos(n);
            let u = Series::one(n).div(&Series::one(n).sub(&s))?;
            let u2 = u.mul(&u);
            let t2u = u.shift_up().shift_up().truncate(n).scale(&rat_int(3));
            let mid = c
                .mul(&Series::constant(rat_int(3), n).sub(&s))
                .mul(&u2)
                .shift_up()
                .truncate(n)
                .scale(&rat_int(3));
            let tail = Series::constant(rat_int(2), n).sub(&s).mul(&u2).scale(&rat_int(3));
            let mut f = t2u.sub(&mid).add(&tail);
            for _ in 0..4 {
                f = f.derive()?;
            }
            Ok(f)
        }
        _ => Err(Error::domain(format!(
            "no closed form implemented for column l = {l} (supported: 0 ..= 4)"
        ))),
    }
}

/// Column EGF `K_l(t)` assembled from the recurrence table.
///
/// Every cell with `n >= 0` is determined except `K_0^0`, which the table
/// leaves Unknown; by convention that single coefficient is assembled as 0,
/// and column comparisons for `l = 0` therefore start at `n = 1`.
pub fn egf_column_from_table(rec: &mut Recurrence, l: u32, order: usize) -> Result<Series> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        match rec.cell(n as i64, l as i64)? {
            CellValue::Known(v) => coeffs.push(Rat::new(v, factorial(n))),
            CellValue::Unknown if n == 0 && l == 0 => coeffs.push(Rat::zero()),
            CellValue::Unknown => {
                return Err(Error::domain(format!(
                    "table cell ({n}, {l}) is Unknown; cannot assemble the column EGF"
                )))
            }
        }
    }
    Ok(Series { coeffs })
}

/// Outcome of an exact coefficient comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    FirstMismatch { index: usize, lhs: Rat, rhs: Rat },
}

/// Compares two series coefficient-by-coefficient through `through`.
pub fn compare_series(lhs: &Series, rhs: &Series, through: usize) -> Result<Comparison> {
    if lhs.order() < through || rhs.order() < through {
        return Err(Error::domain(format!(
            "comparison through order {through} needs both series at that order \
             (have {} and {})",
            lhs.order(),
            rhs.order()
        )));
    }
    for k in 0..=through {
        if lhs.coeff(k) != rhs.coeff(k) {
            return Ok(Comparison::FirstMismatch {
                index: k,
                lhs: lhs.coeff(k).clone(),
                rhs: rhs.coeff(k).clone(),
            });
        }
    }
    Ok(Comparison::Equal)
}

/// Two-variable series on the rectangular window `x^0..=x^L`, `y^0..=y^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    // grid[l][n] is the coefficient of x^l y^n.
    grid: Vec<Vec<Rat>>,
}

impl BiSeries {
    pub fn from_grid(grid: Vec<Vec<Rat>>) -> BiSeries {
        assert!(!grid.is_empty() && !grid[0].is_empty());
        let width = grid[0].len();
        assert!(grid.iter().all(|row| row.len() == width), "ragged grid");
        BiSeries { grid }
    }

    pub fn x_order(&self) -> usize {
        self.grid.len() - 1
    }

    pub fn y_order(&self) -> usize {
        self.grid[0].len() - 1
    }

    pub fn entry(&self, l: usize, n: usize) -> &Rat {
        &self.grid[l][n]
    }

    pub fn is_zero(&self) -> bool {
        self.grid.iter().all(|row| row.iter().all(|c| c.is_zero()))
    }

    /// Entries with a non-zero coefficient, in (l, n) lexicographic order.
    pub fn support(&self) -> Vec<(usize, usize, Rat)> {
        let mut out = Vec::new();
        for (l, row) in self.grid.iter().enumerate() {
            for (n, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((l, n, c.clone()));
                }
            }
        }
        out
    }

    pub fn derive_x(&self) -> BiSeries {
        assert!(self.x_order() >= 1, "x-derivative needs x-order >= 1");
        let grid = (1..=self.x_order())
            .map(|l| {
                self.grid[l]
                    .iter()
                    .map(|c| c * rat_int(l as i64))
                    .collect()
            })
            .collect();
        BiSeries { grid }
    }

    pub fn derive_y(&self) -> BiSeries {
        assert!(self.y_order() >= 1, "y-derivative needs y-order >= 1");
        let grid = self
            .grid
            .iter()
            .map(|row| {
                (1..=self.y_order())
                    .map(|n| &row[n] * rat_int(n as i64))
                    .collect()
            })
            .collect();
        BiSeries { grid }
    }

    /// Multiplication by `x`; nothing is lost, so the window grows.
    pub fn shift_x(&self) -> BiSeries {
        let mut grid = Vec::with_capacity(self.grid.len() + 1);
        grid.push(vec![Rat::zero(); self.y_order() + 1]);
        grid.extend(self.grid.iter().cloned());
        BiSeries { grid }
    }

    /// Multiplication by `y`; the window grows.
    pub fn shift_y(&self) -> BiSeries {
        let grid = self
            .grid
            .iter()
            .map(|row| {
                let mut r = Vec::with_capacity(row.len() + 1);
                r.push(Rat::zero());
                r.extend(row.iter().cloned());
                r
            })
            .collect();
        BiSeries { grid }
    }

    pub fn scale_int(&self, c: i64) -> BiSeries {
        let c = rat_int(c);
        let grid = self
            .grid
            .iter()
            .map(|row| row.iter().map(|v| v * &c).collect())
            .collect();
        BiSeries { grid }
    }

    pub fn add(&self, rhs: &BiSeries) -> BiSeries {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &BiSeries) -> BiSeries {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(&self, rhs: &BiSeries, f: impl Fn(&Rat, &Rat) -> Rat) -> BiSeries {
        let lx = self.x_order().min(rhs.x_order());
        let ny = self.y_order().min(rhs.y_order());
        let grid = (0..=lx)
            .map(|l| (0..=ny).map(|n| f(&self.grid[l][n], &rhs.grid[l][n])).collect())
            .collect();
        BiSeries { grid }
    }

    /// Restriction to a smaller window.
    pub fn window(&self, x_order: usize, y_order: usize) -> BiSeries {
        assert!(x_order <= self.x_order() && y_order <= self.y_order());
        let grid = (0..=x_order)
            .map(|l| self.grid[l][..=y_order].to_vec())
            .collect();
        BiSeries { grid }
    }
}

/// Residual of `K_x = (1-2x) K_yy - x y K_yyy` on the window
/// `x^0..=x^l_window`, `y^0..=y^n_window`, computed from table values
/// `K_n^l` assembled as `K(x,y) = sum K_n^l x^l y^n / (l! n!)`.
///
/// The assembled grid reaches `l_window + 1` and `n_window + 3` so that every
/// windowed residual entry is fully determined. A zero residual everywhere on
/// the window is the expected outcome; the caller inspects it.
pub fn pde_residual(rec: &mut Recurrence, l_window: usize, n_window: usize) -> Result<BiSeries> {
    let lx = l_window + 1;
    let ny = n_window + 3;
    let mut grid = Vec::with_capacity(lx + 1);
    for l in 0..=lx {
        let mut row = Vec::with_capacity(ny + 1);
        for n in 0..=ny {
            let value = match rec.cell(n as i64, l as i64)? {
                CellValue::Known(v) => v,
                CellValue::Unknown if n == 0 && l == 0 => Count::from(0),
                CellValue::Unknown => {
                    return Err(Error::domain(format!(
                        "table cell ({n}, {l}) is Unknown; cannot assemble K(x, y)"
                    )))
                }
            };
            row.push(Rat::new(value, factorial(l) * factorial(n)));
        }
        grid.push(row);
    }
    let k = BiSeries::from_grid(grid);

    let kx = k.derive_x();
    let kyy = k.derive_y().derive_y();
    let kyyy = kyy.derive_y();
    let linear = kyy.sub(&kyy.shift_x().scale_int(2));
    let mixed = kyyy.shift_y().shift_x();
    let residual = kx.sub(&linear).add(&mixed);
    Ok(residual.window(l_window, n_window))
}
