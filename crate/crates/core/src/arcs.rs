//! Non-crossing arc diagrams for `A_n^h` (points on a line) and `Ã_n^h`
//! (points on a circle).
//!
//! A non-projective `M(i,l)` is the arc from `i+l` back to `i`; a projective
//! `P_k` is a loop at `k`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::NakayamaAlgebra;
use crate::error::{Error, Result};
use crate::modcat::Indec;
use crate::subcats::Subcat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcShape {
    Line,
    Circle,
}

/// Arcs are stored as `[source, target]` with the source `length` steps
/// after the target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcDiagram {
    pub shape: ArcShape,
    pub n: usize,
    pub arcs: BTreeSet<(usize, usize)>,
    pub loops: BTreeSet<usize>,
}

impl ArcDiagram {
    pub fn arc_length(&self, (j, i): (usize, usize)) -> usize {
        match self.shape {
            ArcShape::Line => j - i,
            ArcShape::Circle => (j + self.n - i) % self.n,
        }
    }

    /// Points covered by an arc, from target to source.
    fn points(&self, arc: (usize, usize)) -> Vec<usize> {
        let (_, i) = arc;
        (0..=self.arc_length(arc)).map(|o| (i - 1 + o) % self.n + 1).collect()
    }

    fn interior(&self, arc: (usize, usize)) -> Vec<usize> {
        let p = self.points(arc);
        p[1..p.len() - 1].to_vec()
    }

    /// Whether two distinct arcs are compatible: distinct endpoints, and
    /// either disjoint or strictly nested.
    fn compatible(&self, x: (usize, usize), y: (usize, usize)) -> bool {
        let ends = [x.0, x.1];
        if ends.contains(&y.0) || ends.contains(&y.1) {
            return false;
        }
        let (px, py) = (self.points(x), self.points(y));
        let disjoint = px.iter().all(|p| !py.contains(p));
        let (ix, iy) = (self.interior(x), self.interior(y));
        disjoint || py.iter().all(|p| ix.contains(p)) || px.iter().all(|p| iy.contains(p))
    }

    pub fn is_valid(&self, h: usize) -> bool {
        let max_len = (self.n - 1).min(h - 1);
        let arcs: Vec<_> = self.arcs.iter().copied().collect();
        arcs.iter().all(|&(j, i)| {
            j != i
                && (1..=self.n).contains(&i)
                && (1..=self.n).contains(&j)
                && (self.shape == ArcShape::Circle || j > i)
                && self.arc_length((j, i)) <= max_len
                && !self.loops.contains(&i)
                && !self.loops.contains(&j)
        }) && arcs
            .iter()
            .enumerate()
            .all(|(k, &x)| arcs[k + 1..].iter().all(|&y| self.compatible(x, y)))
            && self.loops.iter().all(|k| (1..=self.n).contains(k))
    }

    /// A terminal sketch: one row of points (`o` marks a loop), then one row
    /// per arc with `+` at its ends.
    pub fn ascii(&self) -> String {
        let mut out = String::new();
        let col = |p: usize| 4 * (p - 1);
        let width = col(self.n) + 1;
        let mut pts = vec![' '; width];
        let mut labels = vec![' '; width + 4];
        for p in 1..=self.n {
            pts[col(p)] = if self.loops.contains(&p) { 'o' } else { '.' };
            for (k, ch) in p.to_string().chars().enumerate() {
                labels[col(p) + k] = ch;
            }
        }
        let mut arcs: Vec<_> = self.arcs.iter().copied().collect();
        arcs.sort_by_key(|&a| std::cmp::Reverse(self.arc_length(a)));
        for arc in arcs {
            let mut row = vec![' '; width];
            let pts_of = self.points(arc);
            for w in pts_of.windows(2) {
                if w[1] > w[0] {
                    row[col(w[0])..col(w[1])].fill('-');
                } else {
                    row[col(w[0])..].fill('-');
                    row[..col(w[1])].fill('-');
                }
            }
            row[col(arc.0)] = '+';
            row[col(arc.1)] = '+';
            out.push_str(row.iter().collect::<String>().trim_end());
            out.push('\n');
        }
        out.push_str(pts.iter().collect::<String>().trim_end());
        out.push('\n');
        out.push_str(labels.iter().collect::<String>().trim_end());
        out.push('\n');
        out
    }
}

fn uniform(a: &NakayamaAlgebra) -> Result<(ArcShape, usize)> {
    if let Some((n, _)) = a.as_uniform_cycle() {
        Ok((ArcShape::Circle, n))
    } else if let Some((n, _)) = a.as_uniform_line() {
        Ok((ArcShape::Line, n))
    } else {
        Err(Error::NotUniformFamily)
    }
}

pub fn to_arc_diagram(a: &NakayamaAlgebra, w_tilde: &Subcat) -> Result<ArcDiagram> {
    let (shape, n) = uniform(a)?;
    let mut d = ArcDiagram { shape, n, arcs: BTreeSet::new(), loops: BTreeSet::new() };
    for &x in w_tilde {
        if a.is_projective(x) {
            d.loops.insert(x.vertex);
        } else {
            d.arcs.insert((a.factor(x, x.length), x.vertex));
        }
    }
    Ok(d)
}

pub fn from_arc_diagram(a: &NakayamaAlgebra, d: &ArcDiagram) -> Result<Subcat> {
    let (shape, n) = uniform(a)?;
    if shape != d.shape || n != d.n {
        return Err(Error::StructureViolation("diagram does not match the algebra".into()));
    }
    let mut out: Subcat = d.loops.iter().map(|&k| a.projective(k)).collect();
    for &(j, i) in &d.arcs {
        out.insert(a.check(Indec::new(i, d.arc_length((j, i))))?);
    }
    Ok(out)
}

/// Every valid diagram with `n` points and arcs shorter than `h`.
pub fn enumerate_diagrams(shape: ArcShape, n: usize, h: usize) -> Vec<ArcDiagram> {
    let base = ArcDiagram { shape, n, arcs: BTreeSet::new(), loops: BTreeSet::new() };
    let max_len = (n - 1).min(h - 1);
    let mut candidates = Vec::new();
    for i in 1..=n {
        for l in 1..=max_len {
            let j = i + l;
            match shape {
                ArcShape::Line if j <= n => candidates.push((j, i)),
                ArcShape::Line => {}
                ArcShape::Circle => candidates.push(((j - 1) % n + 1, i)),
            }
        }
    }
    fn go(base: &ArcDiagram, cands: &[(usize, usize)], start: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(cur.clone());
        for k in start..cands.len() {
            let x = cands[k];
            if cur.iter().all(|&y| base.compatible(x, y)) {
                cur.push(x);
                go(base, cands, k + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut arc_sets = Vec::new();
    go(&base, &candidates, 0, &mut Vec::new(), &mut arc_sets);
    let mut out = Vec::new();
    for arcs in arc_sets {
        let ends: BTreeSet<usize> = arcs.iter().flat_map(|&(j, i)| [j, i]).collect();
        let free: Vec<usize> = (1..=n).filter(|p| !ends.contains(p)).collect();
        for mask in 0u64..(1 << free.len()) {
            let loops = free
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &p)| p)
                .collect();
            out.push(ArcDiagram { shape, n, arcs: arcs.iter().copied().collect(), loops });
        }
    }
    out.sort();
    out
}

pub fn count_noncrossing(shape: ArcShape, n: usize, h: usize) -> usize {
    enumerate_diagrams(shape, n, h).len()
}
