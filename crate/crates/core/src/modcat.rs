//! Combinatorics of the module category of a Nakayama algebra.
//!
//! Every indecomposable is uniserial, so maps between indecomposables are
//! indexed by the radical layer their image lands in. All Hom/Ext data below
//! is computed from that position arithmetic.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::NakayamaAlgebra;
use crate::error::{Error, Result};

/// The indecomposable `M(a,t) = P_a / rad^t P_a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Indec {
    pub vertex: usize,
    pub length: usize,
}

impl Indec {
    pub const fn new(vertex: usize, length: usize) -> Self {
        Self { vertex, length }
    }
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.vertex, self.length)
    }
}

/// A map between indecomposables, determined up to automorphism by the
/// radical layer `pos` of the target containing its image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Map {
    pub source: Indec,
    pub target: Indec,
    pub pos: usize,
}

impl Map {
    pub fn image_length(&self) -> usize {
        self.target.length - self.pos
    }
}

/// `P_1 -> P_0 -> X -> 0`; `domain` is `None` for projective `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjPresentation {
    pub domain: Option<Indec>,
    pub codomain: Indec,
    pub shift: usize,
}

/// The syzygy orbit `X, ΩX, Ω²X, ...` until it repeats.
///
/// `seq[pre..pre+period]` is the periodic part. A zero entry is a fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub seq: Vec<Option<Indec>>,
    pub pre: usize,
    pub period: usize,
}

impl Orbit {
    /// `Ω^i X`.
    pub fn get(&self, i: usize) -> Option<Indec> {
        if i < self.seq.len() {
            self.seq[i]
        } else {
            self.seq[self.pre + (i - self.pre) % self.period]
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ProjDim {
    Finite(usize),
    Infinite,
}

impl fmt::Display for ProjDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjDim::Finite(d) => write!(f, "{d}"),
            ProjDim::Infinite => f.write_str("inf"),
        }
    }
}

impl NakayamaAlgebra {
    /// Short name: `P_a` for projectives, `S_a` for simples, else `M(a,t)`.
    pub fn name(&self, x: Indec) -> String {
        if self.is_valid(x) && self.is_projective(x) {
            format!("P{}", x.vertex)
        } else if x.length == 1 {
            format!("S{}", x.vertex)
        } else {
            x.to_string()
        }
    }

    pub fn names(&self, xs: &[Indec]) -> String {
        if xs.is_empty() {
            return "0".into();
        }
        xs.iter().map(|&x| self.name(x)).collect::<Vec<_>>().join(", ")
    }

    /// The `k`-th composition factor vertex of `M(a,t)` counted from the top.
    pub fn factor(&self, x: Indec, k: usize) -> usize {
        self.step(x.vertex, k).expect("composition factor inside the module")
    }

    pub fn hom_positions(&self, x: Indec, y: Indec) -> Vec<usize> {
        if self.component_of(x.vertex) != self.component_of(y.vertex) {
            return Vec::new();
        }
        (0..y.length)
            .filter(|&v| y.length - v <= x.length && self.step(y.vertex, v) == Some(x.vertex))
            .collect()
    }

    pub fn hom_dim(&self, x: Indec, y: Indec) -> usize {
        self.hom_positions(x, y).len()
    }

    pub fn hom_maps(&self, x: Indec, y: Indec) -> Vec<Map> {
        self.hom_positions(x, y)
            .into_iter()
            .map(|pos| Map { source: x, target: y, pos })
            .collect()
    }

    /// `g ∘ f`, or `None` when the composite vanishes.
    pub fn compose(&self, f: Map, g: Map) -> Option<Map> {
        assert_eq!(f.target, g.source, "maps are not composable");
        let pos = f.pos + g.pos;
        (pos < g.target.length).then_some(Map { source: f.source, target: g.target, pos })
    }

    pub fn kernel(&self, f: Map) -> Option<Indec> {
        let l = f.image_length();
        (f.source.length > l).then(|| Indec::new(self.factor(f.source, l), f.source.length - l))
    }

    pub fn cokernel(&self, f: Map) -> Option<Indec> {
        (f.pos > 0).then(|| Indec::new(f.target.vertex, f.pos))
    }

    pub fn image(&self, f: Map) -> Indec {
        Indec::new(f.source.vertex, f.image_length())
    }

    pub fn proj_presentation(&self, x: Indec) -> ProjPresentation {
        let p0 = self.projective(x.vertex);
        if self.is_projective(x) {
            ProjPresentation { domain: None, codomain: p0, shift: 0 }
        } else {
            let top = self.factor(x, x.length);
            ProjPresentation { domain: Some(self.projective(top)), codomain: p0, shift: x.length }
        }
    }

    pub fn syzygy(&self, x: Indec) -> Option<Indec> {
        let c = self.kupisch(x.vertex);
        (x.length < c).then(|| Indec::new(self.factor(x, x.length), c - x.length))
    }

    pub fn syzygy_orbit(&self, x: Indec) -> Orbit {
        let mut seq = vec![Some(x)];
        loop {
            let next = seq.last().unwrap().and_then(|y| self.syzygy(y));
            if let Some(i) = seq.iter().position(|&s| s == next) {
                let period = seq.len() - i;
                return Orbit { seq, pre: i, period };
            }
            seq.push(next);
        }
    }

    pub fn proj_dim(&self, x: Indec) -> ProjDim {
        let orbit = self.syzygy_orbit(x);
        match orbit.seq.iter().position(Option::is_none) {
            Some(i) => ProjDim::Finite(i - 1),
            None => ProjDim::Infinite,
        }
    }

    /// Positions of a basis of `Ext¹(X,Y)` inside `Hom(ΩX,Y)`: the maps that
    /// do not extend along `ΩX -> P_0`.
    pub fn ext1_positions(&self, x: Indec, y: Indec) -> Vec<usize> {
        let Some(om) = self.syzygy(x) else {
            return Vec::new();
        };
        let p0 = self.projective(x.vertex);
        let restricted: BTreeSet<usize> = self
            .hom_positions(p0, y)
            .into_iter()
            .map(|w| w + x.length)
            .filter(|&v| v < y.length)
            .collect();
        self.hom_positions(om, y)
            .into_iter()
            .filter(|v| !restricted.contains(v))
            .collect()
    }

    pub fn ext1_dim(&self, x: Indec, y: Indec) -> usize {
        let Some(om) = self.syzygy(x) else {
            return 0;
        };
        let p0 = self.projective(x.vertex);
        let d = self.hom_dim(om, y) + self.hom_dim(x, y);
        d.checked_sub(self.hom_dim(p0, y))
            .expect("long exact sequence gives a non-negative Ext dimension")
    }

    /// `dim Ext^i(X,Y)` for `i >= 1`.
    pub fn ext_dim(&self, x: Indec, y: Indec, i: usize) -> usize {
        assert!(i >= 1, "Ext degree must be positive");
        self.syzygy_orbit(x).get(i - 1).map_or(0, |z| self.ext1_dim(z, y))
    }

    pub fn tau(&self, x: Indec) -> Result<Indec> {
        if self.is_projective(x) {
            return Err(Error::ProjectiveHasNoTau(x));
        }
        Ok(Indec::new(self.factor(x, 1), x.length))
    }

    pub fn quotients(&self, x: Indec) -> Vec<Indec> {
        (1..=x.length).map(|u| Indec::new(x.vertex, u)).collect()
    }

    pub fn submodules(&self, x: Indec) -> Vec<Indec> {
        (0..x.length)
            .map(|v| Indec::new(self.factor(x, v), x.length - v))
            .collect()
    }

    pub fn comp_factor_mult(&self, x: Indec, i: usize) -> usize {
        (0..x.length).filter(|&k| self.factor(x, k) == i).count()
    }

    pub fn gen_closure(&self, g: &BTreeSet<Indec>) -> BTreeSet<Indec> {
        g.iter().flat_map(|&x| self.quotients(x)).collect()
    }

    pub fn sub_closure(&self, g: &BTreeSet<Indec>) -> BTreeSet<Indec> {
        g.iter().flat_map(|&x| self.submodules(x)).collect()
    }

    /// Middle terms of the short exact sequences `0 -> sub -> E -> quot -> 0`,
    /// the split one first. Each non-split middle comes from a basis element
    /// of `Ext¹(quot, sub)` at position `v`, giving
    /// `E = M(a2, t2+t1-v) ⊕ M(a1, v)`.
    pub fn extension_middles(&self, sub: Indec, quot: Indec) -> Vec<Vec<Indec>> {
        let mut split = vec![sub, quot];
        split.sort();
        let mut out = vec![split];
        for v in self.ext1_positions(quot, sub) {
            let mut e = vec![Indec::new(quot.vertex, quot.length + sub.length - v)];
            if v > 0 {
                e.push(Indec::new(sub.vertex, v));
            }
            e.sort();
            out.push(e);
        }
        out
    }

    /// Parses a comma or `+` separated list of `M(a,t)`, `Pa`, `Sa`; `0` or
    /// an empty string is the zero module.
    pub fn parse_modules(&self, text: &str) -> Result<Vec<Indec>> {
        let mut out = Vec::new();
        for (pos, tok) in split_literals(text) {
            if tok == "0" {
                continue;
            }
            let perr = |m: &str| Error::Parse { position: pos, message: format!("{m}: `{tok}`") };
            let x = if let Some(rest) = tok.strip_prefix('P') {
                let a: usize = rest.trim().parse().map_err(|_| perr("bad projective literal"))?;
                if a == 0 || a > self.n() {
                    return Err(perr("vertex out of range"));
                }
                self.projective(a)
            } else if let Some(rest) = tok.strip_prefix('S') {
                let a: usize = rest.trim().parse().map_err(|_| perr("bad simple literal"))?;
                Indec::new(a, 1)
            } else if let Some(inner) = tok.strip_prefix("M(").and_then(|r| r.strip_suffix(')')) {
                let mut it = inner.split(',').map(|s| s.trim().parse::<usize>());
                match (it.next(), it.next(), it.next()) {
                    (Some(Ok(a)), Some(Ok(t)), None) => Indec::new(a, t),
                    _ => return Err(perr("expected M(a,t)")),
                }
            } else {
                return Err(perr("unknown module literal"));
            };
            out.push(self.check(x)?);
        }
        Ok(out)
    }
}

/// Splits on `,`/`+` outside parentheses, keeping byte offsets.
fn split_literals(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    let mut push = |s: usize, e: usize| {
        let raw = &text[s..e];
        let t = raw.trim();
        if !t.is_empty() {
            out.push((s + raw.find(t).unwrap_or(0), t));
        }
    };
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' | '+' if depth == 0 => {
                push(start, i);
                start = i + 1;
            }
            _ => {}
        }
    }
    push(start, text.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: usize, t: usize) -> Indec {
        Indec::new(a, t)
    }

    fn line(n: usize, h: usize) -> NakayamaAlgebra {
        NakayamaAlgebra::build_line(n, h).unwrap()
    }

    fn cycle(n: usize, h: usize) -> NakayamaAlgebra {
        NakayamaAlgebra::build_cycle(n, h).unwrap()
    }

    #[test]
    fn hom_examples() {
        let a = line(3, 2);
        assert_eq!(a.hom_positions(a.projective(3), a.projective(2)), vec![1]);
        for x in 1..=3 {
            for y in 1..=3 {
                assert_eq!(a.hom_dim(m(x, 1), m(y, 1)), usize::from(x == y));
            }
        }
        for n in 1..=4 {
            let c = cycle(n, 5);
            for x in c.list_indecomposables() {
                assert_eq!(c.hom_dim(x, x), x.length.div_ceil(n));
            }
        }
    }

    #[test]
    fn kernel_cokernel_compose() {
        let a = line(3, 3);
        let f = a.hom_maps(m(1, 3), m(1, 2))[0];
        assert_eq!(a.kernel(f), Some(m(3, 1)));
        assert_eq!(a.cokernel(f), None);
        let g = a.hom_maps(m(2, 2), m(1, 3))[0];
        assert_eq!(a.kernel(g), None);
        assert_eq!(a.cokernel(g), Some(m(1, 1)));
        let h = a.hom_maps(m(1, 2), m(1, 1))[0];
        assert_eq!(a.compose(g, f).map(|c| c.pos), Some(1));
        assert_eq!(a.compose(f, h).map(|c| c.pos), Some(0));
        let gf = a.compose(g, f).unwrap();
        assert_eq!(a.compose(gf, h), None);
    }

    #[test]
    fn syzygy_examples() {
        let a2 = line(2, 2);
        assert_eq!(a2.syzygy(m(1, 1)), Some(m(2, 1)));
        let p = a2.proj_presentation(m(1, 1));
        assert_eq!((p.domain, p.codomain, p.shift), (Some(m(2, 1)), m(1, 2), 1));
        assert_eq!(a2.syzygy(m(1, 2)), None);
        assert_eq!(a2.proj_presentation(m(1, 2)).domain, None);

        let c = cycle(3, 3);
        assert_eq!(c.syzygy(m(1, 1)), Some(m(2, 2)));
        assert_eq!(c.syzygy(m(2, 2)), Some(m(1, 1)));
        let o = c.syzygy_orbit(m(1, 1));
        assert_eq!((o.pre, o.period), (0, 2));
        assert_eq!(o.get(7), Some(m(2, 2)));
    }

    #[test]
    fn ext_examples() {
        let a2 = line(2, 2);
        assert_eq!(a2.ext_dim(m(1, 1), m(1, 2), 1), 0);
        assert_eq!(a2.ext_dim(m(1, 1), m(2, 1), 1), 1);
        let a = line(3, 2);
        assert_eq!(a.ext_dim(m(1, 1), m(2, 1), 1), 1);
        assert_eq!(a.ext_dim(m(1, 1), m(3, 1), 2), 1);
        for x in a.list_indecomposables() {
            for y in a.list_indecomposables() {
                assert_eq!(a.ext1_positions(x, y).len(), a.ext1_dim(x, y));
            }
        }
        let c = cycle(3, 3);
        assert_eq!(c.ext_dim(m(1, 1), m(1, 1), 2), 1);
    }

    #[test]
    fn tau_examples() {
        let a2 = line(2, 2);
        assert_eq!(a2.tau(m(1, 1)), Ok(m(2, 1)));
        assert_eq!(a2.tau(m(1, 2)), Err(Error::ProjectiveHasNoTau(m(1, 2))));
        assert_eq!(cycle(3, 3).tau(m(1, 2)), Ok(m(2, 2)));
        assert_eq!(line(4, 2).tau(m(2, 1)), Ok(m(3, 1)));
    }

    #[test]
    fn sub_quotient_mult() {
        let a = line(3, 2);
        assert_eq!(a.submodules(m(1, 2)), vec![m(1, 2), m(2, 1)]);
        assert_eq!(a.quotients(m(1, 2)), vec![m(1, 1), m(1, 2)]);
        assert_eq!(cycle(3, 3).comp_factor_mult(m(2, 2), 3), 1);
        assert_eq!(a.comp_factor_mult(m(2, 2), 1), 0);
        for alg in [line(4, 3), cycle(3, 4)] {
            for x in alg.list_indecomposables() {
                for i in alg.vertices() {
                    assert_eq!(alg.hom_dim(alg.projective(i), x), alg.comp_factor_mult(x, i));
                }
            }
        }
    }

    #[test]
    fn gen_closure_examples() {
        let a2 = line(2, 2);
        let g = BTreeSet::from([m(1, 2), m(1, 1)]);
        assert_eq!(a2.gen_closure(&g), g);
        let a = line(3, 2);
        let projs: BTreeSet<_> = a.vertices().map(|v| a.projective(v)).collect();
        assert_eq!(a.gen_closure(&projs), a.list_indecomposables().into_iter().collect());
        assert!(a.gen_closure(&BTreeSet::new()).is_empty());
    }

    #[test]
    fn extension_middle_examples() {
        let a2 = line(2, 2);
        assert_eq!(a2.extension_middles(m(2, 1), m(1, 1)), vec![vec![m(1, 1), m(2, 1)], vec![m(1, 2)]]);
        assert_eq!(a2.extension_middles(m(1, 1), m(2, 1)).len(), 1);
        let a = line(3, 3);
        assert_eq!(a.extension_middles(m(3, 1), m(1, 2))[1], vec![m(1, 3)]);
        assert_eq!(a.extension_middles(m(2, 2), m(1, 1)), vec![vec![m(1, 1), m(2, 2)], vec![m(1, 3)]]);
    }

    #[test]
    fn proj_dim_examples() {
        let a = line(3, 2);
        assert_eq!(a.proj_dim(m(1, 1)), ProjDim::Finite(2));
        assert_eq!(a.proj_dim(m(2, 1)), ProjDim::Finite(1));
        assert_eq!(a.proj_dim(m(1, 2)), ProjDim::Finite(0));
        let c = cycle(3, 2);
        assert_eq!(c.proj_dim(m(2, 1)), ProjDim::Infinite);
    }

    #[test]
    fn parse_module_lists() {
        let a = line(3, 2);
        assert_eq!(a.parse_modules("P1+P3 + S1").unwrap(), vec![m(1, 2), m(3, 1), m(1, 1)]);
        assert_eq!(a.parse_modules("M(1,2), S2").unwrap(), vec![m(1, 2), m(2, 1)]);
        assert_eq!(a.parse_modules("0").unwrap(), vec![]);
        assert_eq!(a.parse_modules("").unwrap(), vec![]);
        assert!(matches!(a.parse_modules("M(1,3)"), Err(Error::InvalidModule(_))));
        assert!(matches!(a.parse_modules("S1, Q2"), Err(Error::Parse { position: 4, .. })));
        assert_eq!(a.names(&[m(1, 2), m(2, 1), m(3, 1)]), "P1, S2, P3");
    }
}
