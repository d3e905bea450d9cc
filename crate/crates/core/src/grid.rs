use crate::error::{GirthError, Result};

/// Geometric threshold grid `{ base^i : i_min <= i <= i_max }`.
///
/// Values are computed on demand, so wide grids cost nothing to hold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchGrid {
    base: f64,
    i_min: i32,
    i_max: i32,
}

impl SearchGrid {
    pub fn new(base: f64, i_min: i32, i_max: i32) -> Result<Self> {
        if !(base > 1.0 && base.is_finite()) {
            return Err(GirthError::InvalidParameter(format!("grid base {base} must exceed 1")));
        }
        if i_min > i_max {
            return Err(GirthError::InvalidParameter(format!("empty grid: i_min {i_min} > i_max {i_max}")));
        }
        let grid = SearchGrid { base, i_min, i_max };
        if i_max > i_min && grid.value(i_min + 1) <= grid.value(i_min) {
            return Err(GirthError::InvalidParameter(format!("grid base {base} too close to 1")));
        }
        Ok(grid)
    }

    /// Smallest grid with `base^i_min <= lo` and `base^i_max >= hi`.
    pub fn spanning(base: f64, lo: f64, hi: f64) -> Result<Self> {
        if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
            return Err(GirthError::InvalidParameter(format!("bad grid window [{lo}, {hi}]")));
        }
        if !(base > 1.0 && base.is_finite()) {
            return Err(GirthError::InvalidParameter(format!("grid base {base} must exceed 1")));
        }
        let ln = base.ln();
        let clamp = |x: f64| x.clamp(i32::MIN as f64 / 2.0, i32::MAX as f64 / 2.0) as i32;
        let mut i_min = clamp((lo.ln() / ln).floor());
        let mut i_max = clamp((hi.ln() / ln).ceil());
        // the logarithms may be off by one ulp either way
        while base.powi(i_min) > lo {
            i_min -= 1;
        }
        while base.powi(i_min + 1) <= lo {
            i_min += 1;
        }
        while base.powi(i_max) < hi {
            i_max += 1;
        }
        while i_max > i_min && base.powi(i_max - 1) >= hi {
            i_max -= 1;
        }
        SearchGrid::new(base, i_min, i_max)
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn i_min(&self) -> i32 {
        self.i_min
    }

    pub fn i_max(&self) -> i32 {
        self.i_max
    }

    pub fn len(&self) -> usize {
        (self.i_max - self.i_min) as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value(&self, i: i32) -> f64 {
        self.base.powi(i)
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (self.i_min..=self.i_max).map(|i| self.value(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_two() {
        let g = SearchGrid::new(2.0, 0, 3).unwrap();
        assert_eq!(g.values().collect::<Vec<_>>(), vec![1.0, 2.0, 4.0, 8.0]);
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn spanning_covers_window() {
        let g = SearchGrid::spanning(1.05, 0.37, 42.0).unwrap();
        assert!(g.value(g.i_min()) <= 0.37 && g.value(g.i_min() + 1) > 0.37);
        assert!(g.value(g.i_max()) >= 42.0 && g.value(g.i_max() - 1) < 42.0);
        let exact = SearchGrid::spanning(2.0, 4.0, 4.0).unwrap();
        assert_eq!((exact.i_min(), exact.i_max()), (2, 2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SearchGrid::new(1.0, 0, 3).is_err());
        assert!(SearchGrid::new(2.0, 3, 0).is_err());
        assert!(SearchGrid::spanning(2.0, 0.0, 1.0).is_err());
        assert!(SearchGrid::spanning(2.0, 2.0, 1.0).is_err());
    }
}
