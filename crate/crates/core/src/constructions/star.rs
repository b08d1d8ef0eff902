use super::{place, ConstructionReport, Validity};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::packing::CopySystem;

/// Axis lines of the grid `[v]^(s-1)` placed at `offset`. Each line lists its
/// `v` vertices in coordinate order; every grid point lies on `s - 1` lines.
fn grid_lines(v: usize, dims: usize, offset: usize) -> Vec<Vec<usize>> {
    let size = v.pow(dims as u32);
    let mut lines = Vec::with_capacity(dims * size / v.max(1));
    for axis in 0..dims {
        let stride = v.pow(axis as u32);
        for p in 0..size {
            if (p / stride).is_multiple_of(v) {
                lines.push((0..v).map(|c| offset + p + c * stride).collect());
            }
        }
    }
    lines
}

/// Copies of `F` in which every vertex meets at most `s - 1` copies, so no
/// vertex sees `s` colors and no multicolor `K_{1,s}` exists.
///
/// The ground set is split into `m = ⌊n / v^(s-1)⌋` grid blocks with `r`
/// leftover vertices. When `m >= v^(s-1) (s-1)` the leftovers are absorbed:
/// `r(s-1)` line copies are removed, each leftover vertex `x_i` takes over
/// `s-1` of those lines minus their last vertex, and the freed last vertices
/// (each now in `s-2` copies) are grouped into fresh copies `v` at a time.
/// Below that threshold the leftovers stay unused and the report is marked
/// [`Validity::LargeNOnly`].
pub fn star_construction(f: &Graph, s: usize, n: usize) -> Result<ConstructionReport> {
    if s < 2 {
        return Err(Error::param("star construction needs s >= 2"));
    }
    let v = f.n();
    if v < 2 || f.edge_count() == 0 {
        return Err(Error::param("pattern must have an edge"));
    }
    if n < v {
        return Err(Error::param(format!("n = {n} is smaller than v(F) = {v}")));
    }
    let dims = s - 1;
    // A block larger than n (or overflowing) leaves every vertex over.
    let block = u32::try_from(dims).ok().and_then(|d| v.checked_pow(d)).unwrap_or(usize::MAX);
    let (m, r) = (n / block, n % block);
    let padded = r > 0 && m >= block.saturating_mul(dims);
    let mut lines: Vec<Vec<usize>> = (0..m).flat_map(|b| grid_lines(v, dims, b * block)).collect();
    if padded {
        // The first line of each of the first `r(s-1)` blocks is disjoint from
        // the others, so these are removed without shared vertices.
        let per_block = lines.len() / m;
        let removed: Vec<Vec<usize>> = (0..r * dims).map(|b| lines[b * per_block].clone()).collect();
        let keep = |i: usize| !(i.is_multiple_of(per_block) && i / per_block < r * dims);
        lines = lines.into_iter().enumerate().filter(|&(i, _)| keep(i)).map(|(_, l)| l).collect();
        for i in 0..r {
            let x = m * block + i;
            for j in 0..dims {
                let mut line = removed[i * dims + j][..v - 1].to_vec();
                line.push(x);
                lines.push(line);
            }
        }
        let freed: Vec<usize> = removed.iter().map(|l| l[v - 1]).collect();
        lines.extend(freed.chunks_exact(v).map(<[usize]>::to_vec));
    }
    let copies: Vec<Vec<Edge>> = lines.iter().map(|l| place(f, l)).collect();
    let system = CopySystem::new(n, f.clone(), copies)?;
    let validity = if r == 0 || padded { Validity::Exact } else { Validity::LargeNOnly };
    let star = Graph::star(s)?;
    let mut report = ConstructionReport::certify(system, &star, validity, "star-coordinate-lines");
    if validity == Validity::LargeNOnly {
        report = report.with_note(format!(
            "{r} leftover vertices unused; padding needs n >= v(F)^(2s-2)(s-1)"
        ));
    }
    Ok(report)
}
