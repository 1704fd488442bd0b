//! Edge colourings of complete graphs and exact monochromatic-clique search.

use crate::bitset::VertexSet;

use super::cliques::find_clique;

/// A colouring of the pairs of `{0, .., m - 1}` with colours `0..palette`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    m: usize,
    palette: usize,
    /// Upper triangle, row-major.
    colors: Vec<u8>,
}

impl EdgeColoring {
    /// Colours pair `(i, j)`, `i < j`, with `color(i, j)`. Panics on a colour
    /// outside the palette.
    pub fn from_fn(m: usize, palette: usize, mut color: impl FnMut(usize, usize) -> usize) -> Self {
        assert!((1..=256).contains(&palette), "palette size {palette} out of range");
        let mut colors = Vec::with_capacity(m * m.saturating_sub(1) / 2);
        for i in 0..m {
            for j in i + 1..m {
                let c = color(i, j);
                assert!(c < palette, "colour {c} outside palette of {palette}");
                colors.push(c as u8);
            }
        }
        EdgeColoring { m, palette, colors }
    }

    pub fn constant(m: usize, palette: usize, c: usize) -> Self {
        Self::from_fn(m, palette, |_, _| c)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    fn index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        // rows 0..i hold (m-1) + (m-2) + .. + (m-i) pairs
        i * (2 * self.m - i - 1) / 2 + (j - i - 1)
    }

    /// Colour of the pair `{i, j}`. Panics when `i == j` or out of range.
    pub fn color(&self, i: usize, j: usize) -> usize {
        assert!(i != j && i < self.m && j < self.m, "pair ({i}, {j}) not an edge of K_{}", self.m);
        self.colors[self.index(i, j)] as usize
    }

    /// Adjacency rows of the graph formed by the pairs of colour `c`.
    pub fn color_rows(&self, c: usize) -> Vec<VertexSet> {
        let mut rows = vec![VertexSet::new(self.m); self.m];
        for i in 0..self.m {
            for j in i + 1..self.m {
                if self.color(i, j) == c {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        rows
    }
}

/// Exact search for a set of `targets[c]` vertices all of whose pairs have
/// colour `c`. Colours are tried in increasing order and the
/// lexicographically first set is returned.
///
/// A target of 0 or 1 is met by the first `target` vertices whenever the
/// colouring has that many.
pub fn ramsey_monochromatic(coloring: &EdgeColoring, targets: &[usize]) -> Option<(usize, VertexSet)> {
    assert_eq!(
        targets.len(),
        coloring.palette(),
        "one target per colour required"
    );
    let m = coloring.m();
    for (c, &k) in targets.iter().enumerate() {
        if k > m {
            continue;
        }
        if k <= 1 {
            return Some((c, VertexSet::from_iter_in(m, 0..k)));
        }
        if let Some(set) = find_clique(&coloring.color_rows(c), k) {
            return Some((c, VertexSet::from_slice(m, &set)));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_colouring() {
        let c = EdgeColoring::constant(5, 2, 0);
        let (col, set) = ramsey_monochromatic(&c, &[3, 3]).unwrap();
        assert_eq!(col, 0);
        assert_eq!(set.to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn pentagon_has_no_monochromatic_triangle() {
        let c = EdgeColoring::from_fn(5, 2, |i, j| usize::from(!matches!((j - i) % 5, 1 | 4)));
        assert_eq!(ramsey_monochromatic(&c, &[3, 3]), None);
        assert!(ramsey_monochromatic(&c, &[2, 3]).is_some());
    }

    #[test]
    fn pair_indexing_round_trips() {
        let c = EdgeColoring::from_fn(7, 49, |i, j| i * 7 + j);
        for i in 0..7 {
            for j in 0..7 {
                if i != j {
                    assert_eq!(c.color(i, j), i.min(j) * 7 + i.max(j));
                }
            }
        }
    }
}
