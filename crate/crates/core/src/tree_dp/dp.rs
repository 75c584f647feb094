//! Memoized recurrence over subtree prefixes.
//!
//! An entry `P(v, i, δin, δout, δsib, Cin, Cout, Csib)` is the fewest
//! vertices `W ⊆ T_i(v)` such that
//!
//! * the nearest members of `W` are at distance `δin` from `v` and carry
//!   exactly the colors `Cin`, and
//! * every vertex of `T_i(v)` has a same-colored nearest neighbor in `W`
//!   together with an assumed set of vertices at distance `δsib` from `v`
//!   among the later siblings' subtrees (colors `Csib`) and one at distance
//!   `δout` outside `T(v)` (colors `Cout`).
//!
//! Infeasible or contradictory parameters have value ∞. For `i ≥ 1` and
//! `v ∉ W` the entry splits into the prefix `T_{i-1}(v)` and the last
//! child's full subtree: pick `δa`, `δb` with `min(δa, δb) = δin` and color
//! sets whose union at the minimum is `Cin`. Each side then sees the other
//! side and the original sibling/outside assumptions as its external
//! context. The assumed external sets are never materialized; a top-level
//! query uses `δout = δsib = ∞`, and every internal assumption is the
//! complementary half of the same split.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Vertex;

use super::color_set::ColorSet;
use super::rooted::RootedTree;

/// Hop distance extended with ∞.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dist(u32);

impl Dist {
    pub const INF: Dist = Dist(u32::MAX);
    pub const ZERO: Dist = Dist(0);

    pub fn finite(d: u32) -> Dist {
        assert!(d != u32::MAX, "finite distance overflow");
        Dist(d)
    }

    pub fn is_inf(self) -> bool {
        self == Dist::INF
    }

    pub fn value(self) -> Option<u32> {
        (!self.is_inf()).then_some(self.0)
    }

    /// `∞ + 1 = ∞`.
    pub fn succ(self) -> Dist {
        if self.is_inf() {
            self
        } else {
            Dist(self.0 + 1)
        }
    }

    /// `∞ - 1 = ∞`; must not be called on 0.
    pub fn pred(self) -> Dist {
        if self.is_inf() {
            self
        } else {
            debug_assert!(self.0 > 0);
            Dist(self.0 - 1)
        }
    }
}

impl fmt::Debug for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(d) => write!(f, "{d}"),
            None => f.write_str("∞"),
        }
    }
}

/// Minimum distance among `(distance, colors)` pairs and the union of the
/// colors of every pair attaining it. All-∞ input gives `(∞, ∅)`.
pub fn nearest(pairs: &[(Dist, ColorSet)]) -> (Dist, ColorSet) {
    let best = pairs.iter().map(|p| p.0).min().unwrap_or(Dist::INF);
    if best.is_inf() {
        return (Dist::INF, ColorSet::EMPTY);
    }
    let colors = pairs.iter().filter(|p| p.0 == best).fold(ColorSet::EMPTY, |acc, p| acc | p.1);
    (best, colors)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DpKey {
    pub v: u32,
    pub i: u32,
    pub din: Dist,
    pub dout: Dist,
    pub dsib: Dist,
    pub cin: ColorSet,
    pub cout: ColorSet,
    pub csib: ColorSet,
}

impl fmt::Debug for DpKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P(v={}, i={}, in={:?}{:?}, out={:?}{:?}, sib={:?}{:?})",
            self.v, self.i, self.din, self.cin, self.dout, self.cout, self.dsib, self.csib
        )
    }
}

impl DpKey {
    /// Key for the whole subtree of `v` with the given outside context.
    pub fn full(tree: &RootedTree<'_>, v: Vertex, din: Dist, cin: ColorSet, dout: Dist, cout: ColorSet) -> DpKey {
        DpKey {
            v: v as u32,
            i: tree.num_children(v) as u32,
            din,
            dout,
            dsib: Dist::INF,
            cin,
            cout,
            csib: ColorSet::EMPTY,
        }
    }

    /// `δ = ∞ ⟺ C = ∅` for all three pairs, and `δout, δsib ≥ 1`.
    pub fn is_well_formed(&self) -> bool {
        let pair_ok = |d: Dist, c: ColorSet| d.is_inf() == c.is_empty();
        pair_ok(self.din, self.cin)
            && pair_ok(self.dout, self.cout)
            && pair_ok(self.dsib, self.csib)
            && self.dout != Dist::ZERO
            && self.dsib != Dist::ZERO
    }
}

const INF_SIZE: u32 = u32::MAX;

fn add(a: u32, b: u32) -> u32 {
    if a == INF_SIZE || b == INF_SIZE {
        INF_SIZE
    } else {
        a + b
    }
}

#[derive(Debug, Clone)]
enum Decision {
    Infeasible,
    /// `W = ∅`.
    Empty,
    /// `v ∈ W`; one full-subtree key per child in `T_i(v)`.
    Select(Vec<DpKey>),
    Split {
        prefix: DpKey,
        child: DpKey,
    },
}

/// Memo table statistics after a solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DpStats {
    pub memo_entries: usize,
    /// Largest number of entries sharing one `(v, i)`.
    pub max_entries_per_prefix: usize,
}

/// Owns the memo table for one tree. Entries are written once.
pub struct TreeDp<'t, 'g> {
    tree: &'t RootedTree<'g>,
    memo: HashMap<DpKey, u32>,
}

impl<'t, 'g> TreeDp<'t, 'g> {
    pub fn new(tree: &'t RootedTree<'g>) -> Self {
        TreeDp { tree, memo: HashMap::new() }
    }

    pub fn tree(&self) -> &'t RootedTree<'g> {
        self.tree
    }

    /// The entry's value; `None` stands for ∞.
    pub fn entry(&mut self, key: &DpKey) -> Option<usize> {
        if !self.key_in_range(key) {
            return None;
        }
        let v = self.value(*key);
        (v != INF_SIZE).then_some(v as usize)
    }

    /// A minimum partial subset for `key`, or `None` when the entry is ∞.
    pub fn witness(&mut self, key: &DpKey) -> Result<Option<Vec<Vertex>>> {
        if self.entry(key).is_none() {
            return Ok(None);
        }
        let mut out = Vec::new();
        self.reconstruct(*key, &mut out)?;
        out.sort_unstable();
        Ok(Some(out))
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn stats(&self) -> DpStats {
        let mut per_prefix: HashMap<(u32, u32), usize> = HashMap::new();
        for k in self.memo.keys() {
            *per_prefix.entry((k.v, k.i)).or_default() += 1;
        }
        DpStats {
            memo_entries: self.memo.len(),
            max_entries_per_prefix: per_prefix.values().copied().max().unwrap_or(0),
        }
    }

    fn key_in_range(&self, key: &DpKey) -> bool {
        let v = key.v as usize;
        v < self.tree.n() && key.i as usize <= self.tree.num_children(v)
    }

    fn value(&mut self, key: DpKey) -> u32 {
        if let Some(&x) = self.memo.get(&key) {
            return x;
        }
        let (x, _) = self.evaluate(&key, false);
        self.memo.insert(key, x);
        x
    }

    /// Best full-subtree key of `c` under the given outside context, over
    /// `δ ∈ {0..h(c)} ∪ {∞}` and every color set `C'`; first minimum wins.
    fn best_full(&mut self, c: Vertex, dout: Dist, cout: ColorSet) -> (u32, DpKey) {
        let tree = self.tree;
        let colors = tree.subtree_colors(c);
        let mut best = (INF_SIZE, DpKey::full(tree, c, Dist::INF, ColorSet::EMPTY, dout, cout));
        for d in 0..=tree.height(c) {
            for cin in colors.nonempty_subsets() {
                let key = DpKey::full(tree, c, Dist::finite(d), cin, dout, cout);
                let val = self.value(key);
                if val < best.0 {
                    best = (val, key);
                }
            }
        }
        let key = DpKey::full(tree, c, Dist::INF, ColorSet::EMPTY, dout, cout);
        let val = self.value(key);
        if val < best.0 {
            best = (val, key);
        }
        best
    }

    fn evaluate(&mut self, key: &DpKey, record: bool) -> (u32, Decision) {
        const NONE: (u32, Decision) = (INF_SIZE, Decision::Infeasible);
        if !key.is_well_formed() {
            return NONE;
        }
        let tree = self.tree;
        let g = tree.graph();
        let v = key.v as usize;
        let i = key.i as usize;
        let own = ColorSet::single(g.color(v));

        // Validity: v needs its own color among its overall nearest vertices.
        let (_, cmin) = nearest(&[(key.din, key.cin), (key.dout, key.cout), (key.dsib, key.csib)]);
        if (cmin & own).is_empty() {
            return NONE;
        }
        if let Some(d) = key.din.value() {
            if d > tree.prefix_height(v, i) || !key.cin.is_subset(tree.prefix_colors(v, i)) {
                return NONE;
            }
        }

        if key.din == Dist::ZERO {
            if key.cin != own {
                return NONE;
            }
            // v is selected; the children are independent and each sees v
            // at distance 1.
            let mut total = 1;
            let mut picks = Vec::new();
            for &c in &tree.children(v)[..i] {
                let (val, k) = self.best_full(c, Dist::finite(1), own);
                total = add(total, val);
                if total == INF_SIZE {
                    return NONE;
                }
                if record {
                    picks.push(k);
                }
            }
            return (total, Decision::Select(picks));
        }

        if i == 0 {
            // T_0(v) = {v} and v ∉ W, so W is empty.
            return if key.din.is_inf() { (0, Decision::Empty) } else { NONE };
        }

        let child = tree.children(v)[i - 1];
        let prefix_reach = tree.prefix_height(v, i - 1);
        let prefix_colors = tree.prefix_colors(v, i - 1);
        let child_reach = tree.height(child) + 1;
        let child_colors = tree.subtree_colors(child);
        let din = key.din;

        let candidates = |reach: u32| -> Vec<Dist> {
            let mut out: Vec<Dist> = match din.value() {
                Some(d) => (d..=reach).map(Dist::finite).collect(),
                None => Vec::new(),
            };
            out.push(Dist::INF);
            out
        };
        let cand_a = candidates(prefix_reach);
        let cand_b = candidates(child_reach);

        let mut best = NONE;
        let mut options = Vec::new();
        for &da in &cand_a {
            for &db in &cand_b {
                if da.min(db) != din {
                    continue;
                }
                options.clear();
                color_options(da, db, din, key.cin, prefix_colors, child_colors, &mut options);
                for &(ca, cb) in &options {
                    let (dx, csib) = nearest(&[(db, cb), (key.dsib, key.csib)]);
                    let (dext, cext) = nearest(&[(da, ca), (key.dsib, key.csib), (key.dout, key.cout)]);
                    let child_key = DpKey::full(tree, child, db.pred(), cb, dext.succ(), cext);
                    let cval = self.value(child_key);
                    if cval == INF_SIZE || cval >= best.0 {
                        continue;
                    }
                    let prefix_key = DpKey {
                        v: key.v,
                        i: key.i - 1,
                        din: da,
                        dout: key.dout,
                        dsib: dx,
                        cin: ca,
                        cout: key.cout,
                        csib,
                    };
                    let total = add(cval, self.value(prefix_key));
                    if total < best.0 {
                        best = (
                            total,
                            if record {
                                Decision::Split { prefix: prefix_key, child: child_key }
                            } else {
                                Decision::Infeasible
                            },
                        );
                    }
                }
            }
        }
        best
    }

    fn reconstruct(&mut self, key: DpKey, out: &mut Vec<Vertex>) -> Result<()> {
        let (_, decision) = self.evaluate(&key, true);
        match decision {
            Decision::Infeasible => {
                return Err(Error::InvalidInput(format!("no derivation for {key:?}")));
            }
            Decision::Empty => {}
            Decision::Select(children) => {
                out.push(key.v as usize);
                for k in children {
                    self.reconstruct(k, out)?;
                }
            }
            Decision::Split { prefix, child } => {
                self.reconstruct(prefix, out)?;
                self.reconstruct(child, out)?;
            }
        }
        Ok(())
    }
}

/// Color-set pairs `(Ca, Cb)` for one distance split, in bit order.
fn color_options(
    da: Dist,
    db: Dist,
    din: Dist,
    cin: ColorSet,
    prefix_colors: ColorSet,
    child_colors: ColorSet,
    out: &mut Vec<(ColorSet, ColorSet)>,
) {
    if din.is_inf() {
        out.push((ColorSet::EMPTY, ColorSet::EMPTY));
        return;
    }
    let free = |d: Dist, avail: ColorSet, out: &mut Vec<ColorSet>| {
        if d.is_inf() {
            out.push(ColorSet::EMPTY);
        } else {
            out.extend(avail.nonempty_subsets());
        }
    };
    let mut sides = Vec::new();
    if da == din && db == din {
        // every color of Cin goes left, right or both; neither side empty
        for ca in cin.nonempty_subsets().filter(|ca| ca.is_subset(prefix_colors)) {
            let rest = cin - ca;
            let mut extras = vec![ColorSet::EMPTY];
            extras.extend(ca.nonempty_subsets());
            for extra in extras {
                let cb = rest | extra;
                if !cb.is_empty() && cb.is_subset(child_colors) {
                    out.push((ca, cb));
                }
            }
        }
    } else if da == din {
        if cin.is_subset(prefix_colors) {
            free(db, child_colors, &mut sides);
            out.extend(sides.into_iter().map(|cb| (cin, cb)));
        }
    } else if cin.is_subset(child_colors) {
        free(da, prefix_colors, &mut sides);
        out.extend(sides.into_iter().map(|ca| (ca, cin)));
    }
}

#[cfg(test)]
mod tests {
    use super::super::rooted::root_tree;
    use super::*;
    use crate::graph::ColoredGraph;

    fn leaf_key(din: Dist, cin: ColorSet, cout: ColorSet) -> DpKey {
        DpKey { v: 0, i: 0, din, dout: Dist::finite(1), dsib: Dist::INF, cin, cout, csib: ColorSet::EMPTY }
    }

    #[test]
    fn leaf_entries() {
        let g = ColoredGraph::new(2, vec![1], &[]).unwrap();
        let t = root_tree(&g, 0).unwrap();
        let mut dp = TreeDp::new(&t);
        let red = ColorSet::single(1);
        let blue = ColorSet::single(2);
        assert_eq!(dp.entry(&leaf_key(Dist::ZERO, red, red)), Some(1));
        assert_eq!(dp.entry(&leaf_key(Dist::INF, ColorSet::EMPTY, red)), Some(0));
        assert_eq!(dp.entry(&leaf_key(Dist::INF, ColorSet::EMPTY, blue)), None);
        // v selected but the claimed nearest colors are wrong
        assert_eq!(dp.entry(&leaf_key(Dist::ZERO, blue, red)), None);
    }

    #[test]
    fn malformed_keys_are_infinite() {
        let g = ColoredGraph::new(1, vec![1], &[]).unwrap();
        let t = root_tree(&g, 0).unwrap();
        let mut dp = TreeDp::new(&t);
        let mut k = leaf_key(Dist::INF, ColorSet::single(1), ColorSet::single(1));
        assert!(!k.is_well_formed());
        assert_eq!(dp.entry(&k), None);
        k.i = 3;
        assert_eq!(dp.entry(&k), None);
    }

    #[test]
    fn nearest_unions_attaining_colors() {
        let (a, b) = (ColorSet::single(1), ColorSet::single(2));
        assert_eq!(nearest(&[(Dist::finite(2), a), (Dist::finite(2), b)]), (Dist::finite(2), a | b));
        assert_eq!(nearest(&[(Dist::finite(1), a), (Dist::finite(2), b)]), (Dist::finite(1), a));
        assert_eq!(nearest(&[(Dist::INF, ColorSet::EMPTY)]), (Dist::INF, ColorSet::EMPTY));
        assert_eq!(Dist::INF.succ(), Dist::INF);
        assert_eq!(Dist::finite(3).pred(), Dist::finite(2));
    }

    #[test]
    fn split_color_assignments() {
        let mut out = Vec::new();
        let cin = ColorSet::from_colors([1, 2]);
        let all = ColorSet::from_colors([1, 2, 3]);
        let d = Dist::finite(2);
        color_options(d, d, d, cin, all, all, &mut out);
        // 3^2 assignments minus the two with an empty side
        assert_eq!(out.len(), 7);
        assert!(out.iter().all(|&(a, b)| (a | b) == cin && !a.is_empty() && !b.is_empty()));
    }

    #[test]
    fn memo_is_write_once_and_deterministic() {
        let g = ColoredGraph::new(2, vec![1, 1, 2, 2], &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let t = root_tree(&g, 0).unwrap();
        let key = DpKey::full(&t, 0, Dist::ZERO, ColorSet::single(1), Dist::INF, ColorSet::EMPTY);
        let mut dp = TreeDp::new(&t);
        let first = dp.entry(&key);
        let len = dp.memo_len();
        assert_eq!(dp.entry(&key), first);
        assert_eq!(dp.memo_len(), len);
        let mut fresh = TreeDp::new(&t);
        assert_eq!(fresh.entry(&key), first);
    }
}
