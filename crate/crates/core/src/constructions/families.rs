//! Edge lists of every graph family.
//!
//! Vertices are numbered row by row: the top row left to right, then the
//! next row left to right, and so on. Rows drawn flush right share their
//! last column.

use crate::cpr::CprGraph;

/// Accumulates labeled edges for one graph.
pub(crate) struct Layout {
    n: usize,
    rank: usize,
    edges: Vec<(usize, usize, usize)>,
}

impl Layout {
    pub(crate) fn new(rank: usize) -> Self {
        Self {
            n: 0,
            rank,
            edges: Vec::new(),
        }
    }

    /// Allocates `len` fresh vertices, returned in order.
    pub(crate) fn row(&mut self, len: usize) -> Vec<usize> {
        let start = self.n + 1;
        self.n += len;
        (start..=self.n).collect()
    }

    /// A row whose consecutive vertices are joined by `labels`.
    pub(crate) fn path(&mut self, labels: &[usize]) -> Vec<usize> {
        let row = self.row(labels.len() + 1);
        for (k, &l) in labels.iter().enumerate() {
            self.edge(row[k], row[k + 1], &[l]);
        }
        row
    }

    pub(crate) fn edge(&mut self, u: usize, v: usize, labels: &[usize]) {
        for &l in labels {
            self.edges.push((u, v, l));
        }
    }

    pub(crate) fn finish(self) -> CprGraph {
        CprGraph::new(self.n, self.rank, self.edges).expect("family layouts are well formed")
    }
}

/// `len` labels alternating between 0 and 1 and ending with 1.
pub(crate) fn alt01(len: usize) -> Vec<usize> {
    (0..len).map(|k| (len - k) % 2).collect()
}

fn up_to(from: usize, to_exclusive: usize) -> impl Iterator<Item = usize> {
    from..to_exclusive
}

pub(crate) fn simplex(n: usize) -> CprGraph {
    let mut g = Layout::new(n - 1);
    g.path(&(0..n - 1).collect::<Vec<_>>());
    g.finish()
}

/// A single path: an alternating 0/1 head followed by `2, 3, ..., r-1`.
pub(crate) fn sym_rank(n: usize, r: usize) -> CprGraph {
    let mut labels = alt01(n - r + 1);
    labels.extend(up_to(2, r));
    let mut g = Layout::new(r);
    g.path(&labels);
    g.finish()
}

/// Two rows joined by vertical 0-edges. The top row carries `1..r-1`, the
/// bottom row `0..r-1`, and both continue with `tail` edges alternating
/// `r-2, r-1`. Top vertex `k` sits over bottom vertex `k+1`.
pub(crate) fn ladder(r: usize, tail: usize) -> CprGraph {
    let tail_labels: Vec<usize> = (0..tail)
        .map(|k| if k % 2 == 0 { r - 2 } else { r - 1 })
        .collect();
    let mut top_labels: Vec<usize> = up_to(1, r).collect();
    top_labels.extend(&tail_labels);
    let mut bottom_labels: Vec<usize> = up_to(0, r).collect();
    bottom_labels.extend(&tail_labels);
    let mut g = Layout::new(r);
    let top = g.path(&top_labels);
    let bottom = g.path(&bottom_labels);
    for k in 1..top.len() {
        g.edge(top[k], bottom[k + 1], &[0]);
    }
    g.finish()
}

/// Rows of `(n+4)/2` and `(n-4)/2` vertices, each an alternating head then
/// `2..r-1`.
fn sym2_rows(g: &mut Layout, n: usize, r: usize) -> (Vec<usize>, Vec<usize>) {
    let row = |verts: usize| {
        let edges = verts - 1;
        let mut labels = alt01(edges - (r - 2));
        labels.extend(up_to(2, r));
        labels
    };
    let top = g.path(&row((n + 4) / 2));
    let bottom = g.path(&row((n - 4) / 2));
    (top, bottom)
}

pub(crate) fn sym2a(n: usize, r: usize) -> CprGraph {
    let mut g = Layout::new(r);
    sym2_rows(&mut g, n, r);
    g.finish()
}

pub(crate) fn sym2b(n: usize, r: usize) -> CprGraph {
    let mut g = Layout::new(r);
    let (top, bottom) = sym2_rows(&mut g, n, r);
    g.edge(*top.last().unwrap(), *bottom.last().unwrap(), &[r - 2]);
    g.finish()
}

pub(crate) fn sym3(n: usize) -> CprGraph {
    let r = n / 2;
    let mut g = Layout::new(r);
    let top = g.path(&up_to(0, r).collect::<Vec<_>>());
    let bottom = g.path(&up_to(2, r).collect::<Vec<_>>());
    g.edge(*top.last().unwrap(), *bottom.last().unwrap(), &[r - 2]);
    g.finish()
}

pub(crate) fn sym4(n: usize) -> CprGraph {
    let mut g = Layout::new(4);
    let row = g.row(n);
    g.edge(row[0], row[1], &[0]);
    g.edge(row[1], row[2], &[1]);
    g.edge(row[2], row[3], &[0, 2]);
    let run = alt01(n - 6);
    for (k, &l) in run.iter().enumerate() {
        g.edge(row[3 + k], row[4 + k], &[l]);
    }
    g.edge(row[n - 3], row[n - 2], &[2]);
    g.edge(row[n - 2], row[n - 1], &[3]);
    g.finish()
}

/// Two flush-right rows ending in `2..r-1`, joined by `(r-3)`-edges in the
/// last two columns. The top row has four more 0/1 edges than the bottom.
pub(crate) fn even_r(n: usize, r: usize) -> CprGraph {
    let i = n / 2 - r;
    let mut top_labels = alt01(i + 3);
    top_labels.extend(up_to(2, r));
    let mut bottom_labels = alt01(i - 1);
    bottom_labels.extend(up_to(2, r));
    let mut g = Layout::new(r);
    let top = g.path(&top_labels);
    let bottom = g.path(&bottom_labels);
    join_last_columns(&mut g, &top, &bottom, 2, r - 3);
    g.finish()
}

fn join_last_columns(g: &mut Layout, top: &[usize], bottom: &[usize], count: usize, label: usize) {
    for k in 1..=count {
        g.edge(top[top.len() - k], bottom[bottom.len() - k], &[label]);
    }
}

/// n ≡ 2 (mod 4), rank 4.
pub(crate) fn f1(n: usize) -> CprGraph {
    let mut g = Layout::new(4);
    let row = g.row(n);
    g.edge(row[0], row[1], &[0, 2]);
    for (k, l) in [1, 0, 1, 2].into_iter().enumerate() {
        g.edge(row[1 + k], row[2 + k], &[l]);
    }
    for k in 0..n - 6 {
        g.edge(row[5 + k], row[6 + k], &[if k % 2 == 0 { 3 } else { 2 }]);
    }
    g.finish()
}

/// n ≡ 2 (mod 4), rank 5.
pub(crate) fn f2(n: usize) -> CprGraph {
    let mut g = Layout::new(5);
    let row = g.row(n);
    g.edge(row[0], row[1], &[0]);
    g.edge(row[1], row[2], &[1]);
    g.edge(row[2], row[3], &[0, 2]);
    g.edge(row[3], row[4], &[1]);
    g.edge(row[4], row[5], &[2]);
    for k in 0..n - 6 {
        g.edge(row[5 + k], row[6 + k], &[if k % 2 == 0 { 3 } else { 4 }]);
    }
    g.finish()
}

/// n ≡ 0 (mod 4), rank 4: an octahedral block of six vertices hanging over
/// a long bottom path.
pub(crate) fn f3(n: usize) -> CprGraph {
    let mut g = Layout::new(4);
    let [g_, a, d] = [1, 2, 3];
    let [h, c, e] = [4, 5, 6];
    g.row(6);
    let bottom = g.row(n - 6);
    let (l, nn, m, i, b) = (bottom[0], bottom[1], bottom[2], bottom[3], bottom[4]);
    g.edge(g_, a, &[3]);
    g.edge(a, d, &[2]);
    g.edge(h, c, &[3]);
    g.edge(c, e, &[2]);
    g.edge(h, g_, &[0]);
    g.edge(c, a, &[0]);
    g.edge(e, d, &[0, 1, 3]);
    g.edge(i, h, &[1]);
    g.edge(b, c, &[1]);
    g.edge(l, nn, &[0]);
    g.edge(nn, m, &[1]);
    for k in 0..n - 9 {
        g.edge(
            bottom[2 + k],
            bottom[3 + k],
            &[if k % 2 == 0 { 2 } else { 3 }],
        );
    }
    g.finish()
}

/// n ≡ 0 (mod 4), rank 5.
pub(crate) fn f4(n: usize) -> CprGraph {
    let mut top_labels = vec![2, 1, 2];
    top_labels.extend((0..n - 8).map(|k| if k % 2 == 0 { 3 } else { 4 }));
    let mut g = Layout::new(5);
    let top = g.path(&top_labels);
    let bottom = g.path(&[2, 1, 2]);
    g.edge(bottom[2], top[0], &[0]);
    g.edge(bottom[3], top[1], &[0]);
    g.finish()
}

/// n ≡ 3 (mod 4), ranks 7 and up. The top row opens with `0, 1, {0,2}, 1`
/// and `4k` alternating 0/1 edges, then runs `2..r-1` (plus a final `r-2`
/// when `extended`). The bottom row mirrors the top from label 3 on and is
/// joined to it in the last two columns by `(r-3)`-edges, or in the last
/// four by `(r-4)`-edges when `extended`.
pub(crate) fn three_mod(n: usize, r: usize, k: usize, extended: bool) -> CprGraph {
    let mut top_labels = vec![0, 1, 0, 1];
    top_labels.extend(alt01(4 * k));
    top_labels.extend(up_to(2, r));
    let mut bottom_labels: Vec<usize> = up_to(3, r).collect();
    if extended {
        top_labels.push(r - 2);
        bottom_labels.push(r - 2);
    }
    let mut g = Layout::new(r);
    let top = g.path(&top_labels);
    g.edge(top[2], top[3], &[2]);
    let bottom = g.path(&bottom_labels);
    if extended {
        join_last_columns(&mut g, &top, &bottom, 4, r - 4);
    } else {
        join_last_columns(&mut g, &top, &bottom, 2, r - 3);
    }
    debug_assert_eq!(g.n, n);
    g.finish()
}

/// n ≡ 3 (mod 4), rank 4.
pub(crate) fn t34(n: usize) -> CprGraph {
    let mut g = Layout::new(4);
    let mut top_labels = alt01(n - 13);
    let double_at = top_labels.len();
    top_labels.extend([0, 1, 2, 1, 2]);
    let top = g.path(&top_labels);
    g.edge(top[double_at], top[double_at + 1], &[2]);
    let bottom = g.path(&[2, 1, 2, 1, 2, 1]);
    let t = top.len();
    g.edge(top[t - 3], bottom[1], &[3]);
    g.edge(top[t - 2], bottom[2], &[3]);
    g.finish()
}

/// n ≡ 3 (mod 4), rank 5.
pub(crate) fn t35(n: usize) -> CprGraph {
    let mut g = Layout::new(5);
    let mut top_labels = alt01(n - 11);
    top_labels.extend([2, 3, 4, 3, 4]);
    let top = g.path(&top_labels);
    let b = g.row(5);
    g.edge(b[0], b[1], &[3]);
    g.edge(b[1], b[2], &[2, 4]);
    g.edge(b[2], b[3], &[3]);
    g.edge(b[3], b[4], &[4]);
    let t = top.len();
    g.edge(b[3], top[t - 2], &[2]);
    g.edge(b[4], top[t - 1], &[2]);
    g.finish()
}

/// n ≡ 3 (mod 4), rank 5, alternative layout: the rank-6 layout with the
/// hanging rows' labels lowered by one and the top row stopping at label 4.
pub(crate) fn t35bis(n: usize) -> CprGraph {
    let mut g = Layout::new(5);
    let mut top_labels = alt01(n - 10);
    top_labels.extend([2, 3, 4]);
    let top = g.path(&top_labels);
    hang_two_rows(&mut g, &top, 0);
    g.finish()
}

/// n ≡ 3 (mod 4), rank 6.
pub(crate) fn t36(n: usize) -> CprGraph {
    let mut g = Layout::new(6);
    let mut top_labels = alt01(n - 11);
    top_labels.extend([2, 3, 4, 5]);
    let top = g.path(&top_labels);
    hang_two_rows(&mut g, &top, 1);
    g.finish()
}

// Two 3-vertex rows under the right end of `top`; `s` shifts every label.
fn hang_two_rows(g: &mut Layout, top: &[usize], s: usize) {
    let m = g.row(3);
    let c = g.row(3);
    let t = top.len();
    g.edge(m[0], top[t - 2], &[2 + s]);
    g.edge(m[1], top[t - 1], &[2 + s]);
    g.edge(m[0], m[1], &[4 + s]);
    g.edge(m[1], m[2], &[3 + s]);
    g.edge(c[0], c[1], &[4 + s]);
    g.edge(c[1], c[2], &[3 + s]);
    g.edge(c[0], m[0], &[1 + s, 3 + s]);
    g.edge(c[1], m[1], &[1 + s]);
    g.edge(c[2], m[2], &[1 + s, 2 + s, 4 + s]);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_heads_end_with_one() {
        assert_eq!(alt01(0), Vec::<usize>::new());
        assert_eq!(alt01(3), vec![1, 0, 1]);
        assert_eq!(alt01(4), vec![0, 1, 0, 1]);
    }

    #[test]
    fn simplex_is_a_path() {
        let g = simplex(5);
        assert_eq!(g.edges(), &[(1, 2, 0), (2, 3, 1), (3, 4, 2), (4, 5, 3)]);
    }

    #[test]
    fn ladder_at_rank_six_has_six_zero_edges() {
        let g = ladder(6, 0);
        assert_eq!(g.n(), 13);
        assert_eq!(g.edges_with_label(0).count(), 6);
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(sym2a(8, 3).n(), 8);
        assert_eq!(sym2b(12, 4).n(), 12);
        assert_eq!(sym3(10).n(), 10);
        assert_eq!(sym4(11).n(), 11);
        assert_eq!(even_r(16, 6).n(), 16);
        assert_eq!(f1(10).n(), 10);
        assert_eq!(f2(14).n(), 14);
        assert_eq!(f3(16).n(), 16);
        assert_eq!(f4(12).n(), 12);
        assert_eq!(three_mod(15, 7, 0, false).n(), 15);
        assert_eq!(three_mod(19, 8, 0, true).n(), 19);
        assert_eq!(three_mod(19, 7, 1, false).n(), 19);
        assert_eq!(t34(15).n(), 15);
        assert_eq!(t35(15).n(), 15);
        assert_eq!(t35bis(15).n(), 15);
        assert_eq!(t36(15).n(), 15);
    }
}
