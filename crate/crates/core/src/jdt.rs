//! Sheats symplectic jeu de taquin: elementary slides read off the split
//! form, corner-by-corner rectification, and the classical type-A reverse
//! rectification used by the key maps.

use crate::alphabet::{Letter, Partition, Rank};
use crate::columns::{Admissibility, Column};
use crate::error::{Error, Result};
use crate::tableaux::{KNSkewTableau, KNTableau, SkewShape};

/// Kind of an elementary slide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlideKind {
    Vertical,
    Horizontal,
}

/// One column of a sliding tableau: its letters occupy the contiguous
/// rows `top..top + letters.len()`, except that the column holding the
/// empty cell spans one extra row.
#[derive(Clone)]
struct SCol {
    top: usize,
    letters: Column,
}

/// A skew tableau mid-slide. Column extents are tracked directly so that
/// the intermediate states appearing between slides (where the inner
/// boundary is momentarily not a partition) are representable.
#[derive(Clone)]
pub(crate) struct SlideState {
    n: Rank,
    cols: Vec<SCol>,
}

impl SlideState {
    pub(crate) fn from_skew(t: &KNSkewTableau) -> Self {
        let cols = t
            .columns()
            .iter()
            .enumerate()
            .map(|(c, column)| SCol {
                top: t.shape().col_extent(c).0,
                letters: column.clone(),
            })
            .collect();
        SlideState { n: t.n(), cols }
    }

    pub(crate) fn from_columns(n: Rank, cols: Vec<Column>, tops: Vec<usize>) -> Self {
        let cols = tops
            .into_iter()
            .zip(cols)
            .map(|(top, letters)| SCol { top, letters })
            .collect();
        SlideState { n, cols }
    }

    fn pop_trailing_empty(&mut self) {
        while self.cols.last().is_some_and(|c| c.letters.is_empty()) {
            self.cols.pop();
        }
    }

    /// Inner corners: empty positions directly above a column whose right
    /// neighbour does not extend above them.
    pub(crate) fn inner_corners(&self) -> Vec<(usize, usize)> {
        let mut corners = Vec::new();
        for (c, col) in self.cols.iter().enumerate() {
            if col.letters.is_empty() || col.top == 0 {
                continue;
            }
            let r = col.top - 1;
            let right_ok = match self.cols.get(c + 1) {
                None => true,
                Some(next) => next.letters.is_empty() || next.top <= r,
            };
            if right_ok {
                corners.push((r, c));
            }
        }
        corners
    }

    /// Opens a hole at the inner corner, extending that column's span
    /// upward by one row.
    fn puncture(&mut self, corner: (usize, usize)) -> Result<()> {
        if !self.inner_corners().contains(&corner) {
            return Err(Error::Invalid(format!(
                "({}, {}) is not an inner corner",
                corner.0, corner.1
            )));
        }
        self.cols[corner.1].top -= 1;
        Ok(())
    }

    /// α: the entry below the hole in `rC`; β: the entry right of the
    /// hole in `ℓC` of the next column.
    fn neighbours(&self, hole: (usize, usize)) -> Result<(Option<Letter>, Option<Letter>)> {
        let (r, c) = hole;
        let cur = &self.cols[c];
        let alpha = if r < cur.top + cur.letters.len() {
            let (_, right) = cur.letters.split()?;
            Some(right.cells()[r - cur.top])
        } else {
            None
        };
        let beta = match self.cols.get(c + 1) {
            Some(next)
                if !next.letters.is_empty()
                    && r >= next.top
                    && r < next.top + next.letters.len() =>
            {
                let (left, _) = next.letters.split()?;
                Some(left.cells()[r - next.top])
            }
            _ => None,
        };
        Ok((alpha, beta))
    }

    /// One elementary slide of the hole; `None` means the cell left the
    /// shape and the slide is over.
    fn step(&mut self, hole: (usize, usize)) -> Result<Option<(SlideKind, (usize, usize))>> {
        let (r, c) = hole;
        let (alpha, beta) = self.neighbours(hole)?;
        let vertical = match (alpha, beta) {
            (None, None) => {
                self.pop_trailing_empty();
                return Ok(None);
            }
            (Some(a), Some(b)) => a <= b,
            (Some(_), None) => true,
            (None, Some(_)) => false,
        };
        if vertical {
            return Ok(Some((SlideKind::Vertical, (r + 1, c))));
        }
        let b = beta.expect("horizontal slide has a right neighbour");
        if b.is_barred() {
            // β moves from C₂ to Φ(C₁).
            let next = &mut self.cols[c + 1];
            let mut cells = next.letters.cells().to_vec();
            let pos = cells.iter().position(|l| *l == b).expect("barred β lies in C₂");
            cells.remove(pos);
            next.letters = Column::from_letters(cells);

            let cur = &mut self.cols[c];
            let mut d = cur.letters.phi()?.cells().to_vec();
            debug_assert!(!d.contains(&b));
            d.push(b);
            cur.letters = Column::from_letters(d).phi_inverse(self.n)?;
        } else {
            // β moves from Φ(C₂) to C₁.
            let next = &mut self.cols[c + 1];
            let mut d = next.letters.phi()?.cells().to_vec();
            let pos = d.iter().position(|l| *l == b).expect("unbarred β lies in Φ(C₂)");
            d.remove(pos);
            next.letters = Column::from_letters(d).phi_inverse(self.n)?;

            let cur = &mut self.cols[c];
            let mut cells = cur.letters.cells().to_vec();
            debug_assert!(!cells.contains(&b));
            cells.push(b);
            cur.letters = Column::from_letters(cells);
        }
        // If the filled column breaks the 1CC at z, erase z and z̄ and give
        // back a cell at both ends of the column. A column emptied this
        // way leaves the shape, shifting everything to its right.
        let cur = &mut self.cols[c];
        if let Admissibility::BreaksAt(z) = cur.letters.admissibility() {
            let cells: Vec<Letter> = cur
                .letters
                .cells()
                .iter()
                .copied()
                .filter(|l| l.abs() != z)
                .collect();
            if cells.is_empty() {
                self.cols.remove(c);
                return Ok(Some((SlideKind::Horizontal, (r, c))));
            }
            cur.letters = Column::from_letters(cells);
            cur.top += 1;
        }
        Ok(Some((SlideKind::Horizontal, (r, c + 1))))
    }

    /// Runs a full slide from the given inner corner.
    pub(crate) fn slide(&mut self, corner: (usize, usize)) -> Result<Vec<SlideKind>> {
        self.puncture(corner)?;
        let mut hole = corner;
        let mut kinds = Vec::new();
        while let Some((kind, next)) = self.step(hole)? {
            kinds.push(kind);
            hole = next;
        }
        Ok(kinds)
    }

    pub(crate) fn is_straight(&self) -> bool {
        self.cols.iter().all(|c| c.top == 0 || c.letters.is_empty())
    }

    pub(crate) fn into_tableau(mut self) -> Result<KNTableau> {
        self.pop_trailing_empty();
        debug_assert!(self.is_straight());
        KNTableau::new(self.n, self.cols.into_iter().map(|c| c.letters).collect())
    }

    pub(crate) fn to_skew(&self) -> Result<KNSkewTableau> {
        let tops: Vec<i64> = self.cols.iter().map(|c| c.top as i64).collect();
        let bottoms: Vec<i64> = self
            .cols
            .iter()
            .map(|c| (c.top + c.letters.len()) as i64)
            .collect();
        if tops.windows(2).any(|w| w[0] < w[1]) || bottoms.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ShapeMismatch(
                "intermediate slide state is not a skew shape".into(),
            ));
        }
        let shape = SkewShape::new(
            Partition::new(bottoms)?.conjugate(),
            Partition::new(tops)?.conjugate(),
        )?;
        KNSkewTableau::new(self.n, shape, self.cols.iter().map(|c| c.letters.clone()).collect())
    }
}

/// A skew tableau with one marked empty cell, stepped slide by slide.
pub struct PuncturedSkewTableau {
    state: SlideState,
    hole: (usize, usize),
    done: bool,
}

impl PuncturedSkewTableau {
    /// Punctures `t` at the inner corner `(row, col)` (0-based).
    pub fn new(t: &KNSkewTableau, row: usize, col: usize) -> Result<Self> {
        let mut state = SlideState::from_skew(t);
        state.puncture((row, col))?;
        Ok(PuncturedSkewTableau { state, hole: (row, col), done: false })
    }

    pub fn hole(&self) -> (usize, usize) {
        self.hole
    }

    /// Performs one elementary slide; `Err(NoNeighbor)` signals that the
    /// cell has left the shape and the slide is finished.
    pub fn step(&mut self) -> Result<SlideKind> {
        if self.done {
            return Err(Error::NoNeighbor);
        }
        match self.state.step(self.hole)? {
            Some((kind, next)) => {
                self.hole = next;
                Ok(kind)
            }
            None => {
                self.done = true;
                Err(Error::NoNeighbor)
            }
        }
    }

    /// The tableau after the slide has finished.
    pub fn into_tableau(self) -> Result<KNSkewTableau> {
        if !self.done {
            return Err(Error::Invalid("the slide has not finished".into()));
        }
        self.state.to_skew()
    }
}

pub(crate) fn rectify_state(mut state: SlideState) -> Result<KNTableau> {
    loop {
        let corners = state.inner_corners();
        let Some(&corner) = corners.iter().max_by_key(|(_, c)| *c) else {
            break;
        };
        state.slide(corner)?;
    }
    state.into_tableau()
}

/// Rectifies a KN skew tableau, filling the bottom-most inner corner of
/// the right-most column first. The result is order-independent; see
/// [`rectify_with_choice`] for exercising other orders.
pub fn rectify(t: &KNSkewTableau) -> Result<KNTableau> {
    rectify_state(SlideState::from_skew(t))
}

/// Rectifies choosing among the available inner corners with `choose`,
/// which receives the corner list (sorted by column) and returns an index
/// into it.
pub fn rectify_with_choice(
    t: &KNSkewTableau,
    mut choose: impl FnMut(&[(usize, usize)]) -> usize,
) -> Result<KNTableau> {
    let mut state = SlideState::from_skew(t);
    loop {
        let mut corners = state.inner_corners();
        if corners.is_empty() {
            break;
        }
        corners.sort();
        let pick = corners[choose(&corners).min(corners.len() - 1)];
        state.slide(pick)?;
    }
    state.into_tableau()
}

/// The unique all-positive skew tableau of the given shape whose
/// rectification is the Yamanouchi tableau of weight λ. A filling
/// rectifies to K(λ) exactly when its column reading is a lattice word of
/// weight λ, which drives the cell-by-cell search.
fn lattice_filling(lambda: &Partition, shape: &SkewShape, n: Rank) -> Result<KNSkewTableau> {
    if shape.num_cells() != lambda.size() {
        return Err(Error::ShapeMismatch(format!(
            "shape {shape} has {} cells, λ = {lambda} needs {}",
            shape.num_cells(),
            lambda.size()
        )));
    }
    let ncols = shape.num_cols();
    let extents: Vec<(usize, usize)> = (0..ncols).map(|c| shape.col_extent(c)).collect();
    // Reading order: columns right to left, top to bottom.
    let mut order = Vec::new();
    for c in (0..ncols).rev() {
        for i in 0..extents[c].1 {
            order.push((c, i));
        }
    }
    let mut grid: Vec<Vec<i64>> = extents.iter().map(|&(_, len)| vec![0; len]).collect();
    let mut wt = vec![0i64; n];

    fn search(
        pos: usize,
        order: &[(usize, usize)],
        extents: &[(usize, usize)],
        grid: &mut Vec<Vec<i64>>,
        wt: &mut Vec<i64>,
        lambda: &Partition,
        n: Rank,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let (c, i) = order[pos];
        let row = extents[c].0 + i;
        let lower = if i > 0 { grid[c][i - 1] + 1 } else { 1 };
        let upper = match extents.get(c + 1) {
            Some(&(t, len)) if row >= t && row < t + len => grid[c + 1][row - t],
            _ => n as i64,
        };
        for v in lower..=upper {
            let k = v as usize;
            if wt[k - 1] + 1 > lambda.part(k) {
                continue; // would overshoot the target weight
            }
            if k > 1 && wt[k - 1] >= wt[k - 2] {
                continue; // prefix weight must stay a partition
            }
            grid[c][i] = v;
            wt[k - 1] += 1;
            if search(pos + 1, order, extents, grid, wt, lambda, n) {
                return true;
            }
            wt[k - 1] -= 1;
        }
        grid[c][i] = 0;
        false
    }

    if !search(0, &order, &extents, &mut grid, &mut wt, lambda, n) {
        return Err(Error::ShapeMismatch(format!(
            "no lattice filling of {shape} with weight {lambda}"
        )));
    }
    let cols = grid
        .into_iter()
        .map(|cells| {
            Column::from_letters(cells.into_iter().map(|v| Letter::new(v).unwrap()).collect())
        })
        .collect();
    KNSkewTableau::new(n, shape.clone(), cols)
}

/// Anti-rectification for all-positive tableaux: the unique all-positive
/// skew tableau of shape `target` that rectifies to `t`. Computed along
/// the crystal path: raise `t` to the Yamanouchi tableau, build the
/// lattice filling of the target shape, then replay the lowering
/// operators on the skew tableau.
pub fn type_a_reverse_rectify(t: &KNTableau, target: &SkewShape) -> Result<KNSkewTableau> {
    if t.columns().iter().any(|c| c.cells().iter().any(|l| l.is_barred())) {
        return Err(Error::Invalid(
            "reverse rectification needs an all-positive tableau".into(),
        ));
    }
    let mut own: Vec<usize> = t.columns().iter().map(Column::len).collect();
    let mut want: Vec<usize> = (0..target.num_cols()).map(|c| target.col_extent(c).1).collect();
    own.sort_unstable();
    want.sort_unstable();
    if own != want {
        return Err(Error::ShapeMismatch(format!(
            "target {} does not have the column lengths of the tableau",
            target.outer()
        )));
    }
    let (highest, colors) = crate::crystal::to_highest(t);
    let lambda = highest.shape();
    let mut skew = lattice_filling(&lambda, target, t.n())?;
    for &i in colors.iter().rev() {
        skew = crate::crystal::f_skew(&skew, i)
            .expect("lowering path exists on the anti-rectified tableau");
    }
    Ok(skew)
}
