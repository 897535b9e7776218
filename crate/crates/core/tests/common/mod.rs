//! Brute-force reference computations used by the integration tests. Nothing
//! here calls into the library beyond reading graph and matrix data.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use rootpoly::digraph::DiGraph;

pub type Mask = u64;

pub fn bits(mask: Mask) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

pub fn popcount(mask: Mask) -> usize {
    mask.count_ones() as usize
}

fn edges_of(g: &DiGraph) -> Vec<(usize, usize)> {
    g.edges().to_vec()
}

/// Weak connectivity of the spanning subgraph on `vertices` using the edge subset `keep`.
pub fn weakly_connected_on(n: usize, edges: &[(usize, usize)], vertices: Mask, keep: Mask) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for e in bits(keep) {
        let (t, h) = edges[e];
        if vertices >> t & 1 == 1 && vertices >> h & 1 == 1 {
            let (a, b) = (find(&mut parent, t), find(&mut parent, h));
            parent[a] = b;
        }
    }
    let vs: Vec<usize> = bits(vertices).filter(|&v| v < n).collect();
    let Some(&first) = vs.first() else { return true };
    let root = find(&mut parent, first);
    vs.iter().all(|&v| find(&mut parent, v) == root)
}

pub fn all_vertices(n: usize) -> Mask {
    if n == 64 { u64::MAX } else { (1 << n) - 1 }
}

pub fn all_edges(m: usize) -> Mask {
    if m == 64 { u64::MAX } else { (1 << m) - 1 }
}

/// Vertices reachable from `s` along edges in `keep`.
pub fn reach(n: usize, edges: &[(usize, usize)], s: usize, keep: Mask) -> Mask {
    let mut seen = 1u64 << s;
    loop {
        let mut grew = false;
        for e in bits(keep) {
            let (t, h) = edges[e];
            if seen >> t & 1 == 1 && seen >> h & 1 == 0 {
                seen |= 1 << h;
                grew = true;
            }
        }
        if !grew {
            return seen & all_vertices(n);
        }
    }
}

/// Kahn's algorithm on the edge subset; loops count as cycles.
pub fn acyclic(n: usize, edges: &[(usize, usize)], keep: Mask) -> bool {
    let mut indeg = vec![0usize; n];
    for e in bits(keep) {
        indeg[edges[e].1] += 1;
    }
    let mut alive = keep;
    let mut removed = vec![false; n];
    loop {
        let Some(v) = (0..n).find(|&v| !removed[v] && indeg[v] == 0) else {
            break;
        };
        removed[v] = true;
        for e in bits(alive) {
            if edges[e].0 == v {
                indeg[edges[e].1] -= 1;
                alive &= !(1 << e);
            }
        }
    }
    removed.iter().all(|&r| r)
}

/// Directed cuts as edge masks: for every vertex set `S` whose crossing edges
/// all leave `S`, with the crossing set nonempty. The flag records whether both
/// shores are weakly connected.
pub fn directed_cuts(g: &DiGraph) -> Vec<(Mask, bool)> {
    let n = g.n();
    let edges = edges_of(g);
    let full = all_vertices(n);
    let mut out = BTreeSet::new();
    for s in 1..full {
        let mut crossing = 0u64;
        let mut ok = true;
        for (e, &(t, h)) in edges.iter().enumerate() {
            let (ti, hi) = (s >> t & 1 == 1, s >> h & 1 == 1);
            if ti && !hi {
                crossing |= 1 << e;
            } else if !ti && hi {
                ok = false;
                break;
            }
        }
        if ok && crossing != 0 {
            let everything = all_edges(edges.len());
            let elementary = weakly_connected_on(n, &edges, s, everything)
                && weakly_connected_on(n, &edges, full & !s, everything);
            out.insert((crossing, elementary));
        }
    }
    // The same edge set may arise from several vertex sets; it is elementary if any is.
    let mut merged: Vec<(Mask, bool)> = Vec::new();
    for (c, el) in out {
        match merged.last_mut() {
            Some((last, flag)) if *last == c => *flag |= el,
            _ => merged.push((c, el)),
        }
    }
    merged
}

pub fn net_degree(g: &DiGraph, mask: Mask) -> Vec<i64> {
    let mut z = vec![0i64; g.n()];
    for e in bits(mask) {
        let (t, h) = g.edges()[e];
        z[h] += 1;
        z[t] -= 1;
    }
    z
}

pub fn subsets_by_size(m: usize) -> Vec<Mask> {
    let mut all: Vec<Mask> = (0..1u64 << m).collect();
    all.sort_by_key(|&x| (popcount(x), x.reverse_bits()));
    all
}

/// Minimum dijoins over all edge subsets, with their distinct net degree vectors.
pub fn min_dijoins(g: &DiGraph) -> (usize, Vec<Mask>, BTreeSet<Vec<i64>>) {
    let cuts: Vec<Mask> = directed_cuts(g).into_iter().map(|(c, _)| c).collect();
    let m = g.m();
    for size in 0..=m {
        let found: Vec<Mask> = (0..1u64 << m)
            .filter(|&k| popcount(k) == size && cuts.iter().all(|&c| c & k != 0))
            .collect();
        if !found.is_empty() {
            let vectors = found.iter().map(|&k| net_degree(g, k)).collect();
            return (size, found, vectors);
        }
    }
    unreachable!("the full edge set meets every cut")
}

/// Maximum number of pairwise disjoint directed cuts, by exhaustive search.
pub fn max_disjoint_cuts(g: &DiGraph) -> usize {
    let cuts: Vec<Mask> = directed_cuts(g).into_iter().map(|(c, _)| c).collect();
    fn go(cuts: &[Mask], i: usize, used: Mask) -> usize {
        if i == cuts.len() {
            return 0;
        }
        let skip = go(cuts, i + 1, used);
        if cuts[i] & used == 0 {
            skip.max(1 + go(cuts, i + 1, used | cuts[i]))
        } else {
            skip
        }
    }
    go(&cuts, 0, 0)
}

pub fn minfas(g: &DiGraph) -> usize {
    let edges = edges_of(g);
    let full = all_edges(g.m());
    (0..=full)
        .filter(|&f| acyclic(g.n(), &edges, full & !f))
        .map(popcount)
        .min()
        .unwrap()
}

pub fn minfas_rooted(g: &DiGraph, s: usize) -> Option<usize> {
    let edges = edges_of(g);
    let full = all_edges(g.m());
    let vs = all_vertices(g.n());
    (0..=full)
        .filter(|&f| {
            let keep = full & !f;
            acyclic(g.n(), &edges, keep) && reach(g.n(), &edges, s, keep) == vs
        })
        .map(popcount)
        .min()
}

/// Arborescences rooted at `s`: no loops, at most one entering edge per vertex,
/// none into `s`, every used vertex reachable from `s` inside the set.
pub fn is_arborescence(g: &DiGraph, s: usize, f: Mask) -> bool {
    let edges = edges_of(g);
    let mut heads = 0u64;
    for e in bits(f) {
        let (t, h) = edges[e];
        if t == h || h == s || heads >> h & 1 == 1 {
            return false;
        }
        heads |= 1 << h;
    }
    let r = reach(g.n(), &edges, s, f);
    heads & !r == 0
}

pub fn spanning_arborescences(g: &DiGraph, s: usize) -> Vec<Mask> {
    (0..=all_edges(g.m()))
        .filter(|&f| popcount(f) + 1 == g.n() && is_arborescence(g, s, f))
        .collect()
}

/// Lexicographically minimal feasible word of `basis` by trying every permutation.
pub fn lexmin_word(feasible: &dyn Fn(Mask) -> bool, basis: Mask, order: &[usize]) -> Option<Vec<usize>> {
    let rank_of = |e: usize| order.iter().position(|&x| x == e).unwrap();
    bits(basis)
        .permutations(popcount(basis))
        .filter(|w| {
            let mut acc = 0u64;
            w.iter().all(|&e| {
                acc |= 1 << e;
                feasible(acc)
            })
        })
        .min_by_key(|w| w.iter().map(|&e| rank_of(e)).collect::<Vec<_>>())
}

/// Greedoid polynomial of the branching greedoid straight from the definition.
pub fn greedoid_polynomial(g: &DiGraph, s: usize, order: &[usize]) -> Vec<i64> {
    let feasible = |f: Mask| is_arborescence(g, s, f);
    let all = all_edges(g.m());
    let max_rank = (0..=all)
        .filter(|&f| feasible(f))
        .map(popcount)
        .max()
        .unwrap();
    let bases: Vec<Mask> = (0..=all)
        .filter(|&f| popcount(f) == max_rank && feasible(f))
        .collect();
    let rank_of = |e: usize| order.iter().position(|&x| x == e).unwrap();
    let key = |w: &[usize]| w.iter().map(|&e| rank_of(e)).collect::<Vec<_>>();
    let mut counts = vec![0i64; g.m() + 1];
    for &b in &bases {
        let wb = lexmin_word(&feasible, b, order).unwrap();
        let mut active = 0;
        for e in bits(all & !b) {
            let ok = bits(b).all(|f| {
                let other = (b & !(1 << f)) | (1 << e);
                if !feasible(other) {
                    return true;
                }
                let wo = lexmin_word(&feasible, other, order).unwrap();
                key(&wb) < key(&wo)
            });
            if ok {
                active += 1;
            }
        }
        counts[active] += 1;
    }
    trim(counts)
}

pub fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Parking enumerator over a box much larger than needed.
pub fn parking_enumerator(g: &DiGraph, s: usize) -> Vec<i64> {
    let n = g.n();
    let edges = edges_of(g);
    let others: Vec<usize> = (0..n).filter(|&v| v != s).collect();
    let cap = g.m() + 1;
    let mut counts = vec![0i64; cap * n + 1];
    let total = cap.pow(others.len() as u32);
    for code in 0..total {
        let mut c = code;
        let p: Vec<usize> = others
            .iter()
            .map(|_| {
                let d = c % cap;
                c /= cap;
                d
            })
            .collect();
        let ok = (1u64..1 << others.len()).all(|sel| {
            let set: Mask = bits(sel).map(|i| 1u64 << others[i]).sum();
            bits(sel).any(|i| {
                let u = others[i];
                let entering = edges
                    .iter()
                    .filter(|&&(t, h)| h == u && set >> t & 1 == 0)
                    .count();
                p[i] < entering
            })
        });
        if ok {
            counts[p.iter().sum::<usize>()] += 1;
        }
    }
    trim(counts)
}

/// Exact determinant by fraction-free elimination.
pub fn det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let (x, y) = (a[r][c], a[i][c]);
                for j in 0..cols {
                    a[i][j] = a[i][j] * x - a[r][j] * y;
                }
                let g = a[i].iter().fold(0i128, |g, &v| gcd(g, v));
                if g > 1 {
                    for v in a[i].iter_mut() {
                        *v /= g;
                    }
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Normal of the hyperplane through `d` points of `Z^d`, by cofactor expansion.
fn normal_through(points: &[&Vec<i64>]) -> Vec<i128> {
    let d = points[0].len();
    let base = points[0];
    let diffs: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| (a - b) as i128).collect())
        .collect();
    (0..d)
        .map(|j| {
            let minor: Vec<Vec<i128>> = diffs
                .iter()
                .map(|r| (0..d).filter(|&c| c != j).map(|c| r[c]).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * det(minor)
        })
        .collect()
}

fn dot(a: &[i128], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(x, &y)| x * y as i128).sum()
}

/// A full-dimensional lattice polytope `conv(points)` in `Z^d` described by
/// facets found from every `d`-subset of points.
pub struct Polytope {
    pub points: Vec<Vec<i64>>,
    pub dim: usize,
    /// `(normal, offset)` with `normal . x <= offset` on the polytope, primitive normals.
    pub facets: Vec<(Vec<i128>, i128)>,
}

impl Polytope {
    pub fn new(points: Vec<Vec<i64>>) -> Self {
        let dim = points[0].len();
        let mut facets = BTreeSet::new();
        if dim == 0 {
            return Self { points, dim, facets: Vec::new() };
        }
        for pick in (0..points.len()).combinations(dim) {
            let ps: Vec<&Vec<i64>> = pick.iter().map(|&i| &points[i]).collect();
            let mut nrm = normal_through(&ps);
            let g = nrm.iter().fold(0, |g, &v| gcd(g, v));
            if g == 0 {
                continue;
            }
            nrm.iter_mut().for_each(|v| *v /= g);
            let off = dot(&nrm, ps[0]);
            let vals: Vec<i128> = points.iter().map(|p| dot(&nrm, p)).collect();
            let above = vals.iter().any(|&v| v > off);
            let below = vals.iter().any(|&v| v < off);
            match (above, below) {
                (false, true) => {
                    facets.insert((nrm, off));
                }
                (true, false) => {
                    facets.insert((nrm.iter().map(|v| -v).collect(), -off));
                }
                _ => {}
            }
        }
        Self { points, dim, facets: facets.into_iter().collect() }
    }

    /// Lattice points of `k P` (or its interior) by scanning the bounding box.
    pub fn lattice_points(&self, k: i64, interior: bool) -> Vec<Vec<i64>> {
        let d = self.dim;
        let lo: Vec<i64> = (0..d).map(|i| k * self.points.iter().map(|p| p[i]).min().unwrap()).collect();
        let hi: Vec<i64> = (0..d).map(|i| k * self.points.iter().map(|p| p[i]).max().unwrap()).collect();
        let mut out = Vec::new();
        let mut x = lo.clone();
        if d == 0 {
            // A point is its own relative interior in every dilate.
            return vec![Vec::new()];
        }
        loop {
            let inside = self.facets.iter().all(|(a, b)| {
                let v = dot(a, &x);
                if interior { v < k as i128 * b } else { v <= k as i128 * b }
            });
            if inside {
                out.push(x.clone());
            }
            let mut i = 0;
            loop {
                if i == d {
                    return out;
                }
                x[i] += 1;
                if x[i] <= hi[i] {
                    break;
                }
                x[i] = lo[i];
                i += 1;
            }
        }
    }

    /// h*-vector from the point counts of the first `d + 1` dilates.
    pub fn hstar(&self) -> Vec<i64> {
        let d = self.dim as i64;
        let binom = |n: i64, k: i64| -> i64 {
            if k < 0 || n < k {
                return 0;
            }
            (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
        };
        let counts: Vec<i64> = (0..=d).map(|k| self.lattice_points(k, false).len() as i64).collect();
        let mut h = Vec::new();
        for k in 0..=d {
            let known: i64 = (0..k).map(|j| h[j as usize] * binom(k + d - j, d)).sum();
            h.push(counts[k as usize] - known);
        }
        trim(h)
    }

    /// Normalized volume from a placing triangulation, built by adding points
    /// one at a time and coning from each new point over the visible boundary.
    pub fn normalized_volume(&self) -> i128 {
        let d = self.dim;
        let pts = &self.points;
        if d == 0 {
            return 1;
        }
        let orient = |face: &[usize], x: &Vec<i64>| -> i128 {
            let base = &pts[face[0]];
            let rows: Vec<Vec<i128>> = face[1..]
                .iter()
                .map(|&i| &pts[i])
                .chain(std::iter::once(x))
                .map(|p| p.iter().zip(base).map(|(a, b)| (a - b) as i128).collect())
                .collect();
            det(rows)
        };
        let Some(start) = (0..pts.len()).combinations(d + 1).find(|s| orient(&s[..d], &pts[s[d]]) != 0) else {
            return 0;
        };
        let mut simplices: Vec<Vec<usize>> = vec![start.clone()];
        for p in 0..pts.len() {
            if start.contains(&p) {
                continue;
            }
            let mut faces: std::collections::BTreeMap<Vec<usize>, (usize, usize)> = Default::default();
            for s in &simplices {
                for skip in 0..=d {
                    let face: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    faces.entry(face).or_insert((0, s[skip])).0 += 1;
                }
            }
            let mut added = Vec::new();
            for (face, (count, opposite)) in faces {
                if count != 1 {
                    continue;
                }
                let a = orient(&face, &pts[opposite]);
                let b = orient(&face, &pts[p]);
                if a.signum() * b.signum() < 0 {
                    let mut s = face.clone();
                    s.push(p);
                    s.sort_unstable();
                    added.push(s);
                }
            }
            simplices.extend(added);
        }
        simplices
            .iter()
            .map(|s| orient(&s[..d], &pts[s[d]]).abs())
            .sum()
    }
}

/// The extended root polytope of a connected digraph in the coordinates
/// obtained by dropping vertex 0.
pub fn digraph_polytope(g: &DiGraph) -> Polytope {
    let mut pts = vec![vec![0i64; g.n() - 1]];
    for &(t, h) in g.edges() {
        let mut v = vec![0i64; g.n()];
        v[h] += 1;
        v[t] -= 1;
        pts.push(v[1..].to_vec());
    }
    Polytope::new(pts)
}

/// Full-rank coordinates for the column span of an integer matrix: the rows of
/// some nonsingular maximal square minor. Returns the kept rows.
pub fn chart_rows(a: &[Vec<i64>]) -> Vec<usize> {
    let r = rank(a);
    let cols = a.first().map_or(0, Vec::len);
    for rows in (0..a.len()).combinations(r) {
        for cs in (0..cols).combinations(r) {
            let m: Vec<Vec<i128>> = rows.iter().map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect()).collect();
            if det(m).abs() == 1 {
                return rows;
            }
        }
    }
    panic!("no unimodular minor");
}

pub fn matrix_polytope(a: &[Vec<i64>]) -> Polytope {
    let rows = chart_rows(a);
    let cols = a.first().map_or(0, Vec::len);
    let mut pts = vec![vec![0i64; rows.len()]];
    for j in 0..cols {
        pts.push(rows.iter().map(|&i| a[i][j]).collect());
    }
    Polytope::new(pts)
}

/// Sign vectors of the signed cocircuits, up to negation, from every
/// independent set of `r - 1` columns.
pub fn cocircuit_signs(a: &[Vec<i64>]) -> Vec<Vec<i8>> {
    let rows = chart_rows(a);
    let r = rows.len();
    let cols = a.first().map_or(0, Vec::len);
    let col = |j: usize| -> Vec<i64> { rows.iter().map(|&i| a[i][j]).collect() };
    let mut out = BTreeSet::new();
    for pick in (0..cols).combinations(r.saturating_sub(1)) {
        let vs: Vec<Vec<i64>> = pick.iter().map(|&j| col(j)).collect();
        if r == 0 || rank(&vs) != r - 1 {
            continue;
        }
        // y orthogonal to the picked columns: cofactors of the r x (r-1) matrix.
        let y: Vec<i128> = (0..r)
            .map(|i| {
                let minor: Vec<Vec<i128>> = vs
                    .iter()
                    .map(|v| (0..r).filter(|&k| k != i).map(|k| v[k] as i128).collect())
                    .collect();
                let s = if i % 2 == 0 { 1 } else { -1 };
                s * det(minor)
            })
            .collect();
        let signs: Vec<i8> = (0..cols).map(|j| dot(&y, &col(j)).signum() as i8).collect();
        let neg: Vec<i8> = signs.iter().map(|s| -s).collect();
        out.insert(signs.clone().max(neg));
    }
    out.into_iter().collect()
}

/// Minimum dijoins of the matroid of `a`: smallest sets meeting every directed cocircuit.
pub fn matroid_min_dijoins(a: &[Vec<i64>]) -> (usize, BTreeSet<Vec<i64>>) {
    let cols = a.first().map_or(0, Vec::len);
    let directed: Vec<Mask> = cocircuit_signs(a)
        .into_iter()
        .filter(|s| s.iter().all(|&x| x >= 0) || s.iter().all(|&x| x <= 0))
        .map(|s| (0..cols).filter(|&j| s[j] != 0).map(|j| 1u64 << j).sum())
        .collect();
    for size in 0..=cols {
        let found: Vec<Mask> = (0..1u64 << cols)
            .filter(|&k| popcount(k) == size && directed.iter().all(|&c| c & k != 0))
            .collect();
        if !found.is_empty() {
            let sums = found
                .iter()
                .map(|&k| (0..a.len()).map(|i| bits(k).map(|j| a[i][j]).sum()).collect())
                .collect();
            return (size, sums);
        }
    }
    unreachable!()
}

pub fn incidence_matrix(g: &DiGraph) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; g.m()]; g.n()];
    for (e, &(t, h)) in g.edges().iter().enumerate() {
        if t != h {
            a[h][e] += 1;
            a[t][e] -= 1;
        }
    }
    a
}

/// Admissible layerings with `l(0) = 0`: labels rising by at most one along
/// every edge, tight edges spanning a weakly connected subgraph.
pub fn admissible_layerings(g: &DiGraph) -> BTreeSet<Vec<i64>> {
    let n = g.n();
    let edges = edges_of(g);
    let span = n as i64 - 1;
    let width = (2 * span + 1) as usize;
    let mut out = BTreeSet::new();
    for code in 0..width.pow((n - 1) as u32) {
        let mut c = code;
        let mut l = vec![0i64];
        for _ in 1..n {
            l.push((c % width) as i64 - span);
            c /= width;
        }
        if edges.iter().any(|&(t, h)| l[h] - l[t] > 1) {
            continue;
        }
        let tight: Mask = edges
            .iter()
            .enumerate()
            .filter(|&(_, &(t, h))| l[h] - l[t] == 1)
            .map(|(e, _)| 1u64 << e)
            .sum();
        if weakly_connected_on(n, &edges, all_vertices(n), tight) {
            out.insert(l);
        }
    }
    out
}

pub fn is_eulerian(g: &DiGraph) -> bool {
    (0..g.n()).all(|v| {
        g.edges().iter().filter(|e| e.0 == v).count() == g.edges().iter().filter(|e| e.1 == v).count()
    })
}

pub fn poly(p: &rootpoly::algebra::Polynomial) -> Vec<i64> {
    let v = p.to_i64_vec().expect("small coefficients");
    if v.is_empty() { vec![0] } else { v }
}
