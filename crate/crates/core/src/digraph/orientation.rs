use super::{DiGraph, UGraph};
use crate::sets::IndexSet;

/// All `2^m` orientations of `u`; the `i`-th item orients edge `j` forward
/// exactly when bit `j` of `i` is set.
pub fn enumerate_orientations(u: &UGraph) -> impl Iterator<Item = DiGraph> + '_ {
    (0u64..1u64 << u.m()).map(move |bits| u.orient(IndexSet(bits)))
}
