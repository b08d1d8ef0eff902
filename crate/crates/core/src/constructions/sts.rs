use super::{ConstructionReport, Validity};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::packing::CopySystem;

fn triangle(a: usize, b: usize, c: usize) -> Vec<Edge> {
    vec![Edge::new(a, b), Edge::new(a, c), Edge::new(b, c)]
}

/// Steiner triple system on `n ≡ 1, 3 (mod 6)` points as a `K_3` system
/// whose copies partition the edges of `K_n`.
///
/// `n = 6k + 3` uses Bose's construction over `Z_{2k+1} × Z_3` with the
/// idempotent quasigroup `x∘y = (k+1)(x+y)`. `n = 6k + 1` uses Skolem's
/// construction over `Z_{2k} × Z_3` plus a point at infinity, with the
/// half-idempotent quasigroup obtained from addition in `Z_{2k}`.
pub fn sts_construction(n: usize) -> Result<CopySystem> {
    let triples = match n % 6 {
        3 => bose(n / 6),
        1 => skolem(n / 6),
        _ => return Err(Error::param(format!("no Steiner triple system on {n} points"))),
    };
    CopySystem::new(n, Graph::complete(3), triples)
}

fn bose(k: usize) -> Vec<Vec<Edge>> {
    let m = 2 * k + 1;
    let at = |x: usize, i: usize| x + (i % 3) * m;
    let op = |x: usize, y: usize| (k + 1) * (x + y) % m;
    let mut out: Vec<Vec<Edge>> = (0..m).map(|x| triangle(at(x, 0), at(x, 1), at(x, 2))).collect();
    for i in 0..3 {
        for x in 0..m {
            for y in x + 1..m {
                out.push(triangle(at(x, i), at(y, i), at(op(x, y), i + 1)));
            }
        }
    }
    out
}

fn skolem(k: usize) -> Vec<Vec<Edge>> {
    let m = 2 * k;
    let inf = 3 * m;
    let at = |x: usize, i: usize| x + (i % 3) * m;
    let op = |x: usize, y: usize| {
        let s = (x + y) % m;
        if s.is_multiple_of(2) {
            s / 2
        } else {
            k + (s - 1) / 2
        }
    };
    let mut out: Vec<Vec<Edge>> = (0..k).map(|x| triangle(at(x, 0), at(x, 1), at(x, 2))).collect();
    for i in 0..3 {
        for x in 0..k {
            out.push(triangle(inf, at(x + k, i), at(x, i + 1)));
        }
        for x in 0..m {
            for y in x + 1..m {
                out.push(triangle(at(x, i), at(y, i), at(op(x, y), i + 1)));
            }
        }
    }
    out
}

/// The Steiner triple system on `n` points with every triple its own color,
/// checked directly for a multicolor `K_t`. A failed check is reported in the
/// returned report rather than as an error.
pub fn sts_lower_bound(n: usize, t: usize) -> Result<ConstructionReport> {
    if t < 2 {
        return Err(Error::param("t must be at least 2"));
    }
    let system = sts_construction(n)?;
    let report = ConstructionReport::certify(system, &Graph::complete(t), Validity::LargeNOnly, "steiner-triple-system");
    let note = if report.verified {
        format!("no multicolor K_{t} on {n} points")
    } else {
        format!("multicolor K_{t} present on {n} points")
    };
    Ok(report.with_note(note))
}
