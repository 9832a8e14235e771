//! Ordered partitions and equitable refinement.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::bitset::VertexSet;

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(5) ^ x).wrapping_mul(0x517c_c1b7_2722_0a95)
}

/// Ordered partition of `0..n`: cells are consecutive runs of `lab`.
#[derive(Clone, Debug)]
pub(crate) struct Partition {
    lab: Vec<usize>,
    /// Cell length, valid at cell starts.
    len: Vec<usize>,
    cells: usize,
}

impl Partition {
    pub(crate) fn unit(n: usize) -> Partition {
        let mut len = alloc::vec![0; n];
        len[0] = n;
        Partition { lab: (0..n).collect(), len, cells: 1 }
    }

    pub(crate) fn lab(&self) -> &[usize] {
        &self.lab
    }

    pub(crate) fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    pub(crate) fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..start + self.len[start]]
    }

    /// Start of the first smallest non-singleton cell.
    pub(crate) fn target_cell(&self) -> usize {
        let n = self.lab.len();
        let mut best: Option<(usize, usize)> = None;
        let mut c = 0;
        while c < n {
            let l = self.len[c];
            if l > 1 && best.map_or(true, |(bl, _)| l < bl) {
                best = Some((l, c));
            }
            c += l;
        }
        best.expect("partition is not discrete").1
    }

    /// Splits `w` off the front of the cell at `start` and refines.
    pub(crate) fn individualize<S: VertexSet>(&mut self, rows: &[S], start: usize, w: usize) -> (usize, u64) {
        let l = self.len[start];
        let at = (start..start + l).find(|&i| self.lab[i] == w).expect("w lies in the cell");
        self.lab.swap(start, at);
        self.len[start] = 1;
        self.len[start + 1] = l - 1;
        self.cells += 1;
        self.refine(rows, start)
    }

    /// Refines the whole partition starting from the cell at position 0.
    pub(crate) fn refine_all<S: VertexSet>(&mut self, rows: &[S]) -> (usize, u64) {
        self.refine(rows, 0)
    }

    /// Equitable refinement, seeded with the cell at `seed` as splitter.
    /// Returns the cell count and a hash of the splitting trace; both depend
    /// only on positions and counts, never on vertex names.
    fn refine<S: VertexSet>(&mut self, rows: &[S], seed: usize) -> (usize, u64) {
        let n = self.lab.len();
        let mut queue = VecDeque::new();
        let mut queued = alloc::vec![false; n];
        queue.push_back(seed);
        queued[seed] = true;
        let mut h = 0u64;
        let mut counts: Vec<(usize, usize)> = Vec::with_capacity(n);
        while let Some(ws) = queue.pop_front() {
            if self.is_discrete() {
                break;
            }
            queued[ws] = false;
            let mut splitter = S::default();
            for &v in self.cell(ws) {
                splitter.insert(v);
            }
            let mut c = 0;
            while c < n {
                let l = self.len[c];
                if l == 1 {
                    c += 1;
                    continue;
                }
                counts.clear();
                counts.extend(self.lab[c..c + l].iter().map(|&v| (rows[v].intersect(splitter).len(), v)));
                let k0 = counts[0].0;
                if counts.iter().all(|&(k, _)| k == k0) {
                    h = mix(h, (c as u64) << 32 | k0 as u64);
                    c += l;
                    continue;
                }
                counts.sort_unstable();
                // write back the sorted cell and cut it into groups
                let mut groups: Vec<(usize, usize)> = Vec::new(); // (start, len)
                let mut i = 0;
                while i < l {
                    let k = counts[i].0;
                    let mut j = i;
                    while j < l && counts[j].0 == k {
                        self.lab[c + j] = counts[j].1;
                        j += 1;
                    }
                    groups.push((c + i, j - i));
                    h = mix(h, ((ws as u64) << 48) ^ ((c + i) as u64) << 24 ^ (k as u64) << 8 ^ (j - i) as u64);
                    i = j;
                }
                for &(gs, gl) in &groups {
                    self.len[gs] = gl;
                }
                self.cells += groups.len() - 1;
                if queued[c] {
                    for &(gs, _) in &groups[1..] {
                        queued[gs] = true;
                        queue.push_back(gs);
                    }
                } else {
                    let largest = groups
                        .iter()
                        .enumerate()
                        .max_by(|a, b| a.1 .1.cmp(&b.1 .1).then(b.0.cmp(&a.0)))
                        .map(|(i, _)| i)
                        .expect("at least two groups");
                    for (gi, &(gs, _)) in groups.iter().enumerate() {
                        if gi != largest {
                            queued[gs] = true;
                            queue.push_back(gs);
                        }
                    }
                }
                c += l;
            }
        }
        (self.cells, mix(h, self.cells as u64))
    }
}
