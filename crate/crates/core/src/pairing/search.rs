use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::Ratio;
use serde::Serialize;

use crate::exact::binomial;
use crate::{Error, Result};

use super::graph::Multigraph;
use super::model::Pairing;
use super::Caps;

/// Vertex sets are bitmasks, so graphs above this size are refused outright.
const MASK_LIMIT: usize = 63;

/// Exact minimum boundary ratios over `1 <= |U| <= max_size`, with one
/// minimising set for each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoperimetricNumbers {
    pub max_size: usize,
    pub vertex: Ratio<u64>,
    pub vertex_witness: Vec<usize>,
    pub edge: Ratio<u64>,
    pub edge_witness: Vec<usize>,
}

fn neighbour_masks(g: &Multigraph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbours(v).iter().fold(0u64, |m, &w| m | (1 << w))).collect()
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// `floor(u·n)`, forgiving a few ulps of rounding in the product.
fn size_limit(u: f64, n: usize) -> Result<usize> {
    if !(u > 0.0 && u <= 1.0) {
        return Err(Error::InvalidInput(format!("fraction u = {u} must lie in (0, 1]")));
    }
    let k = (u * n as f64 + 1e-9).floor() as usize;
    if k == 0 {
        return Err(Error::InvalidInput(format!("u·n = {u}·{n} admits no nonempty subset")));
    }
    Ok(k.min(n))
}

fn check_scan(g: &Multigraph, caps: &Caps) -> Result<()> {
    let limit = (caps.subset_scan_bits as usize).min(MASK_LIMIT);
    if g.n() > limit {
        return Err(Error::CapExceeded {
            what: "exhaustive subset scan",
            required: format!("2^{}", g.n()),
            cap: format!("2^{limit}"),
        });
    }
    Ok(())
}

/// `i_V` and `i_E` restricted to nonempty sets of at most `floor(u·n)`
/// vertices, by visiting all `2^n` subsets in Gray-code order.
///
/// Flipping one vertex `w` changes only the counts `into[v]` (edges from `v`
/// into `U`) of `w`'s neighbours, so each step costs `O(deg w)`.
pub fn min_isoperimetric_exhaustive(g: &Multigraph, u: f64, caps: &Caps) -> Result<IsoperimetricNumbers> {
    check_scan(g, caps)?;
    let n = g.n();
    let max_size = size_limit(u, n)?;

    let mut into = vec![0usize; n];
    let mut mask = 0u64;
    let (mut size, mut vb, mut eb) = (0usize, 0usize, 0usize);
    // Best ratios as (numerator, denominator, set).
    let mut best_v: Option<(usize, usize, u64)> = None;
    let mut best_e: Option<(usize, usize, u64)> = None;

    for step in 1u64..(1u64 << n) {
        let w = step.trailing_zeros() as usize;
        let bit = 1u64 << w;
        if mask & bit == 0 {
            // w stops being a candidate boundary vertex
            eb -= into[w];
            vb -= usize::from(into[w] > 0);
            mask |= bit;
            size += 1;
            for &v in g.neighbours(w) {
                into[v] += 1;
                if mask >> v & 1 == 0 {
                    eb += 1;
                    vb += usize::from(into[v] == 1);
                }
            }
        } else {
            mask &= !bit;
            size -= 1;
            for &v in g.neighbours(w) {
                into[v] -= 1;
                if mask >> v & 1 == 0 {
                    eb -= 1;
                    vb -= usize::from(into[v] == 0);
                }
            }
            eb += into[w];
            vb += usize::from(into[w] > 0);
        }
        if size == 0 || size > max_size {
            continue;
        }
        if best_v.map_or(true, |(a, b, _)| vb * b < a * size) {
            best_v = Some((vb, size, mask));
        }
        if best_e.map_or(true, |(a, b, _)| eb * b < a * size) {
            best_e = Some((eb, size, mask));
        }
    }
    let (vn, vd, vm) = best_v.expect("max_size >= 1");
    let (en, ed, em) = best_e.expect("max_size >= 1");
    Ok(IsoperimetricNumbers {
        max_size,
        vertex: Ratio::new(vn as u64, vd as u64),
        vertex_witness: members(vm),
        edge: Ratio::new(en as u64, ed as u64),
        edge_witness: members(em),
    })
}

fn check_subset_count(n: usize, un: usize, caps: &Caps) -> Result<()> {
    if un == 0 || un > n {
        return Err(Error::InvalidInput(format!("subset size {un} must lie in 1..={n}")));
    }
    if n > MASK_LIMIT {
        return Err(Error::CapExceeded { what: "subset masks", required: n.to_string(), cap: MASK_LIMIT.to_string() });
    }
    let total = binomial(n as u64, un as u64);
    if total > BigUint::from(caps.subsets) {
        return Err(Error::CapExceeded {
            what: "subset enumeration",
            required: total.to_string(),
            cap: caps.subsets.to_string(),
        });
    }
    Ok(())
}

/// Calls `visit(vertex_boundary, edge_boundary)` for every `un`-subset.
fn for_each_subset(g: &Multigraph, un: usize, mut visit: impl FnMut(usize, usize)) {
    let n = g.n();
    let masks = neighbour_masks(g);
    let top = 1u64 << n;
    let mut set = (1u64 << un) - 1;
    while set < top {
        let mut reach = 0u64;
        let mut eb = 0usize;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            reach |= masks[v];
            eb += g.neighbours(v).iter().filter(|&&w| set >> w & 1 == 0).count();
        }
        visit((reach & !set).count_ones() as usize, eb);
        // next set with the same popcount
        let c = set & set.wrapping_neg();
        let r = set + c;
        set = (((r ^ set) >> 2) / c) | r;
    }
}

/// Number of `un`-subsets of the projected graph with exactly `yn` boundary
/// edges and, when given, exactly `sn` boundary vertices.
pub fn count_subsets_with_signature(
    p: &Pairing,
    un: usize,
    sn: Option<usize>,
    yn: usize,
    caps: &Caps,
) -> Result<u64> {
    check_subset_count(p.n(), un, caps)?;
    let g = p.project();
    let mut count = 0u64;
    for_each_subset(&g, un, |vb, eb| {
        if eb == yn && sn.map_or(true, |s| s == vb) {
            count += 1;
        }
    });
    Ok(count)
}

/// Counts of `un`-subsets keyed by `(vertex_boundary, edge_boundary)`.
pub fn signature_histogram(p: &Pairing, un: usize, caps: &Caps) -> Result<BTreeMap<(usize, usize), u64>> {
    check_subset_count(p.n(), un, caps)?;
    let g = p.project();
    let mut hist = BTreeMap::new();
    for_each_subset(&g, un, |vb, eb| *hist.entry((vb, eb)).or_insert(0) += 1);
    Ok(hist)
}
