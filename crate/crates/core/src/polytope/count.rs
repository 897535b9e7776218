//! Lattice points of `{z in Z^d : A z <= c}` by coordinate-wise enumeration
//! inside a bounding box, narrowing each coordinate's range from the
//! inequalities and the box.

use rayon::prelude::*;

pub(crate) struct Region<'a> {
    pub normals: &'a [Vec<i64>],
    pub rhs: Vec<i64>,
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl Region<'_> {
    fn dim(&self) -> usize {
        self.lo.len()
    }

    /// `tail_min[j][i]`: the smallest value of `sum_{t > i} a_jt z_t` over the box.
    fn tail_minima(&self) -> Vec<Vec<i64>> {
        let d = self.dim();
        self.normals
            .iter()
            .map(|a| {
                let mut out = vec![0i64; d];
                let mut acc = 0i64;
                for i in (0..d).rev() {
                    out[i] = acc;
                    acc += (a[i] * self.lo[i]).min(a[i] * self.hi[i]);
                }
                out
            })
            .collect()
    }

    fn range(&self, i: usize, partial: &[i64], tail_min: &[Vec<i64>]) -> Option<(i64, i64)> {
        let (mut lo, mut hi) = (self.lo[i], self.hi[i]);
        for (j, a) in self.normals.iter().enumerate() {
            let slack = self.rhs[j] - partial[j] - tail_min[j][i];
            let c = a[i];
            if c > 0 {
                hi = hi.min(slack.div_euclid(c));
            } else if c < 0 {
                lo = lo.max(-(slack.div_euclid(-c)));
            } else if slack < 0 {
                return None;
            }
            if lo > hi {
                return None;
            }
        }
        Some((lo, hi))
    }

    pub fn count(&self) -> u64 {
        let d = self.dim();
        if d == 0 {
            return u64::from(self.rhs.iter().all(|&r| r >= 0));
        }
        let tail_min = self.tail_minima();
        let partial = vec![0i64; self.normals.len()];
        let Some((lo, hi)) = self.range(0, &partial, &tail_min) else {
            return 0;
        };
        if d == 1 {
            return (hi - lo + 1) as u64;
        }
        (lo..=hi)
            .into_par_iter()
            .map(|z0| {
                let partial: Vec<i64> = self.normals.iter().map(|a| a[0] * z0).collect();
                self.count_from(1, partial, &tail_min)
            })
            .sum()
    }

    fn count_from(&self, i: usize, partial: Vec<i64>, tail_min: &[Vec<i64>]) -> u64 {
        let Some((lo, hi)) = self.range(i, &partial, tail_min) else {
            return 0;
        };
        if i + 1 == self.dim() {
            return (hi - lo + 1) as u64;
        }
        let mut total = 0;
        let mut next = partial.clone();
        for z in lo..=hi {
            for (j, a) in self.normals.iter().enumerate() {
                next[j] = partial[j] + a[i] * z;
            }
            total += self.count_from(i + 1, next.clone(), tail_min);
        }
        total
    }

    /// The points themselves, in lexicographic order.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let d = self.dim();
        let mut out = Vec::new();
        if d == 0 {
            if self.rhs.iter().all(|&r| r >= 0) {
                out.push(Vec::new());
            }
            return out;
        }
        let tail_min = self.tail_minima();
        let mut prefix = Vec::with_capacity(d);
        self.collect_from(0, vec![0; self.normals.len()], &tail_min, &mut prefix, &mut out);
        out
    }

    fn collect_from(
        &self,
        i: usize,
        partial: Vec<i64>,
        tail_min: &[Vec<i64>],
        prefix: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        let Some((lo, hi)) = self.range(i, &partial, tail_min) else {
            return;
        };
        for z in lo..=hi {
            prefix.push(z);
            if i + 1 == self.dim() {
                out.push(prefix.clone());
            } else {
                let next = self
                    .normals
                    .iter()
                    .zip(&partial)
                    .map(|(a, p)| p + a[i] * z)
                    .collect();
                self.collect_from(i + 1, next, tail_min, prefix, out);
            }
            prefix.pop();
        }
    }
}
