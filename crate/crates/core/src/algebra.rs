//! Nakayama algebras given by Kupisch series over linear and cyclic quivers.
//!
//! Vertices are numbered globally `1..=n`, component by component. Arrows run
//! `i -> i+1` inside a component (and `m -> 1` on a cycle), so the composition
//! factors of `M(a,t)` read `S_a, S_{a+1}, ..., S_{a+t-1}` from top to socle.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modcat::Indec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Line,
    Cycle,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Line => f.write_str("line"),
            Shape::Cycle => f.write_str("cycle"),
        }
    }
}

/// One connected component: a quiver shape plus the Loewy lengths of its
/// indecomposable projectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub shape: Shape,
    pub kupisch: Vec<usize>,
}

impl Component {
    pub fn len(&self) -> usize {
        self.kupisch.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kupisch.is_empty()
    }

    fn validate(&self, index: usize) -> Result<()> {
        let c = &self.kupisch;
        let m = c.len();
        let bad = |msg: String| Err(Error::InvalidKupisch(format!("component {}: {msg}", index + 1)));
        if m == 0 {
            return bad("empty Kupisch series".into());
        }
        if let Some(i) = c.iter().position(|&x| x == 0) {
            return bad(format!("c[{}] = 0, Loewy lengths must be positive", i + 1));
        }
        match self.shape {
            Shape::Line => {
                if c[m - 1] != 1 {
                    return bad(format!("c[{m}] = {} but the sink of a line must have c = 1", c[m - 1]));
                }
                for i in 0..m - 1 {
                    if c[i] > c[i + 1] + 1 {
                        return bad(format!(
                            "c[{}] = {} > c[{}] + 1 = {}",
                            i + 1,
                            c[i],
                            i + 2,
                            c[i + 1] + 1
                        ));
                    }
                    if c[i] < 2 {
                        return bad(format!("c[{}] = 1 puts the arrow {} -> {} into the ideal", i + 1, i + 1, i + 2));
                    }
                    if c[i] > m - i {
                        return bad(format!("c[{}] = {} exceeds the longest path length {}", i + 1, c[i], m - i));
                    }
                }
            }
            Shape::Cycle => {
                for i in 0..m {
                    if c[i] < 2 {
                        return bad(format!("c[{}] = {} < 2 on a cycle (ideal not admissible)", i + 1, c[i]));
                    }
                    let next = c[(i + 1) % m];
                    if c[i] > next + 1 {
                        return bad(format!(
                            "c[{}] = {} > c[{}] + 1 = {}",
                            i + 1,
                            c[i],
                            (i + 1) % m + 1,
                            next + 1
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A (possibly disconnected, possibly zero) basic Nakayama algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NakayamaAlgebra {
    components: Vec<Component>,
    offsets: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraDatum {
    components: Vec<Component>,
}

impl NakayamaAlgebra {
    /// `A_n^h`, the linear quiver with `n` vertices modulo the `h`-th power of
    /// the arrow ideal.
    pub fn build_line(n: usize, h: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidKupisch("a line needs at least one vertex".into()));
        }
        if h < 2 && n > 1 {
            return Err(Error::InvalidKupisch(format!("h = {h} < 2 is not admissible")));
        }
        let kupisch = (1..=n).map(|i| h.max(1).min(n - i + 1)).collect();
        Self::from_components(vec![Component { shape: Shape::Line, kupisch }])
    }

    /// `Ã_n^h`, the cyclic quiver with `n` vertices modulo the `h`-th power of
    /// the arrow ideal.
    pub fn build_cycle(n: usize, h: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidKupisch("a cycle needs at least one vertex".into()));
        }
        if h < 2 {
            return Err(Error::InvalidKupisch(format!("h = {h} < 2 is not admissible")));
        }
        Self::from_components(vec![Component { shape: Shape::Cycle, kupisch: vec![h; n] }])
    }

    pub fn from_kupisch(data: Vec<(Shape, Vec<usize>)>) -> Result<Self> {
        Self::from_components(
            data.into_iter()
                .map(|(shape, kupisch)| Component { shape, kupisch })
                .collect(),
        )
    }

    pub fn from_components(components: Vec<Component>) -> Result<Self> {
        for (k, comp) in components.iter().enumerate() {
            comp.validate(k)?;
        }
        let mut offsets = Vec::with_capacity(components.len());
        let mut acc = 0;
        for comp in &components {
            offsets.push(acc);
            acc += comp.len();
        }
        Ok(Self { components, offsets })
    }

    /// The zero algebra (no vertices).
    pub fn zero() -> Self {
        Self { components: Vec::new(), offsets: Vec::new() }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Number of simple modules.
    pub fn n(&self) -> usize {
        self.components.iter().map(Component::len).sum()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n()
    }

    /// `(component index, 0-based local index)` of a global vertex.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        assert!(v >= 1 && v <= self.n(), "vertex {v} out of range");
        let k = self.offsets.partition_point(|&o| o < v) - 1;
        (k, v - 1 - self.offsets[k])
    }

    pub fn global(&self, comp: usize, local: usize) -> usize {
        self.offsets[comp] + local + 1
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.locate(v).0
    }

    /// Loewy length `c[v]` of the projective `P_v`.
    pub fn kupisch(&self, v: usize) -> usize {
        let (k, i) = self.locate(v);
        self.components[k].kupisch[i]
    }

    /// The vertex reached from `v` after following `k` arrows.
    pub fn step(&self, v: usize, k: usize) -> Option<usize> {
        let (comp, i) = self.locate(v);
        let c = &self.components[comp];
        let m = c.len();
        match c.shape {
            Shape::Line => (i + k < m).then(|| self.global(comp, i + k)),
            Shape::Cycle => Some(self.global(comp, (i + k) % m)),
        }
    }

    pub fn predecessor(&self, v: usize) -> Option<usize> {
        let (comp, i) = self.locate(v);
        let c = &self.components[comp];
        match c.shape {
            Shape::Line => (i > 0).then(|| self.global(comp, i - 1)),
            Shape::Cycle => Some(self.global(comp, (i + c.len() - 1) % c.len())),
        }
    }

    /// Arrows `(source, target)` of the quiver.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        self.vertices()
            .filter_map(|v| self.step(v, 1).map(|w| (v, w)))
            .collect()
    }

    pub fn is_valid(&self, x: Indec) -> bool {
        x.vertex >= 1 && x.vertex <= self.n() && x.length >= 1 && x.length <= self.kupisch(x.vertex)
    }

    pub fn check(&self, x: Indec) -> Result<Indec> {
        if self.is_valid(x) {
            Ok(x)
        } else {
            Err(Error::InvalidModule(x))
        }
    }

    pub fn projective(&self, v: usize) -> Indec {
        Indec::new(v, self.kupisch(v))
    }

    pub fn simple(&self, v: usize) -> Indec {
        Indec::new(v, 1)
    }

    pub fn is_projective(&self, x: Indec) -> bool {
        x.length == self.kupisch(x.vertex)
    }

    /// All indecomposables `M(a,t)`, sorted by `(vertex, length)`.
    pub fn list_indecomposables(&self) -> Vec<Indec> {
        self.vertices()
            .flat_map(|a| (1..=self.kupisch(a)).map(move |t| Indec::new(a, t)))
            .collect()
    }

    /// Self-injective connected algebras among Nakayama algebras are exactly
    /// the cycles with constant Kupisch series.
    pub fn as_uniform_cycle(&self) -> Option<(usize, usize)> {
        match self.components.as_slice() {
            [c] if c.shape == Shape::Cycle && c.kupisch.iter().all(|&x| x == c.kupisch[0]) => {
                Some((c.len(), c.kupisch[0]))
            }
            _ => None,
        }
    }

    /// `(n, h)` when this algebra is `A_n^h` (with `h` capped at `n` when the
    /// algebra is hereditary, and `h = 2` for the field).
    pub fn as_uniform_line(&self) -> Option<(usize, usize)> {
        match self.components.as_slice() {
            [c] if c.shape == Shape::Line => {
                let n = c.len();
                let h = if n == 1 { 2 } else { c.kupisch[0] };
                let expected = Self::build_line(n, h).ok()?;
                (expected.components[0] == *c).then_some((n, h))
            }
            _ => None,
        }
    }

    /// Hereditary iff every component is a line whose radicals of projectives
    /// are projective.
    pub fn is_hereditary(&self) -> bool {
        self.components.iter().all(|c| {
            c.shape == Shape::Line && c.kupisch.windows(2).all(|w| w[0] == w[1] + 1)
        })
    }

    /// `A/AeA` for the idempotent of the vertex set `killed`.
    pub fn quotient_by_vertices(&self, killed: &BTreeSet<usize>) -> Quotient {
        let mut components = Vec::new();
        let mut parent_vertex = Vec::new();
        for (k, comp) in self.components.iter().enumerate() {
            let m = comp.len();
            let alive = |i: usize| !killed.contains(&self.global(k, i));
            if (0..m).all(alive) {
                components.push(comp.clone());
                parent_vertex.extend((0..m).map(|i| self.global(k, i)));
                continue;
            }
            // Maximal runs of surviving vertices; on a cycle a run may wrap.
            let starts: Vec<usize> = (0..m)
                .filter(|&i| {
                    alive(i)
                        && match comp.shape {
                            Shape::Line => i == 0 || !alive(i - 1),
                            Shape::Cycle => !alive((i + m - 1) % m),
                        }
                })
                .collect();
            for s in starts {
                let mut run = Vec::new();
                let mut i = s;
                loop {
                    run.push(i);
                    let next = match comp.shape {
                        Shape::Line if i + 1 < m => i + 1,
                        Shape::Line => break,
                        Shape::Cycle => (i + 1) % m,
                    };
                    if !alive(next) || next == s {
                        break;
                    }
                    i = next;
                }
                let len = run.len();
                let kupisch = run
                    .iter()
                    .enumerate()
                    .map(|(j, &i)| comp.kupisch[i].min(len - j))
                    .collect();
                components.push(Component { shape: Shape::Line, kupisch });
                parent_vertex.extend(run.iter().map(|&i| self.global(k, i)));
            }
        }
        let algebra = Self::from_components(components).expect("quotients of Nakayama algebras are Nakayama");
        let mut child_vertex = vec![None; self.n() + 1];
        for (j, &p) in parent_vertex.iter().enumerate() {
            child_vertex[p] = Some(j + 1);
        }
        Quotient { algebra, parent_vertex, child_vertex, killed: killed.clone() }
    }

    /// Canonical text form `kupisch:line=...;cycle=...`.
    pub fn to_spec_string(&self) -> String {
        let body: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                let ks: Vec<String> = c.kupisch.iter().map(usize::to_string).collect();
                format!("{}={}", c.shape, ks.join(","))
            })
            .collect();
        format!("kupisch:{}", body.join(";"))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(AlgebraDatum { components: self.components.clone() })
            .expect("algebra datum serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let datum: AlgebraDatum = serde_json::from_str(text).map_err(|e| Error::Parse {
            position: e.column().saturating_sub(1),
            message: e.to_string(),
        })?;
        Self::from_components(datum.components)
    }

    /// Parses `line:n,h`, `cycle:n,h`, `kupisch:line=2,2,1;cycle=3,3` or the
    /// JSON form `{"components":[...]}`.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        let lead = text.len() - trimmed.len();
        let text = trimmed.trim_end();
        if text.starts_with('{') {
            return Self::from_json(text);
        }
        let perr = |position: usize, message: &str| Error::Parse { position: lead + position, message: message.into() };
        let colon = text
            .find(':')
            .ok_or_else(|| perr(0, "expected `line:`, `cycle:` or `kupisch:`"))?;
        let (head, rest) = (&text[..colon], &text[colon + 1..]);
        let body_at = colon + 1;
        match head {
            "line" | "cycle" => {
                let nums = parse_numbers(rest, lead + body_at)?;
                let [n, h] = nums.as_slice() else {
                    return Err(perr(body_at, "expected two numbers `n,h`"));
                };
                if head == "line" {
                    Self::build_line(*n, *h)
                } else {
                    Self::build_cycle(*n, *h)
                }
            }
            "kupisch" => {
                let mut comps = Vec::new();
                let mut at = body_at;
                for part in rest.split(';') {
                    let eq = part
                        .find('=')
                        .ok_or_else(|| perr(at, "expected `line=` or `cycle=`"))?;
                    let shape = match part[..eq].trim() {
                        "line" => Shape::Line,
                        "cycle" => Shape::Cycle,
                        _ => return Err(perr(at, "unknown component shape")),
                    };
                    let kupisch = parse_numbers(&part[eq + 1..], lead + at + eq + 1)?;
                    comps.push(Component { shape, kupisch });
                    at += part.len() + 1;
                }
                Self::from_components(comps)
            }
            _ => Err(perr(0, "expected `line:`, `cycle:` or `kupisch:`")),
        }
    }
}

fn parse_numbers(text: &str, offset: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut at = offset;
    for piece in text.split(',') {
        let t = piece.trim();
        let n = t.parse::<usize>().map_err(|_| Error::Parse {
            position: at + piece.find(|c: char| !c.is_whitespace()).unwrap_or(0),
            message: format!("expected a non-negative integer, found `{t}`"),
        })?;
        out.push(n);
        at += piece.len() + 1;
    }
    Ok(out)
}

impl fmt::Display for NakayamaAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_spec_string())
    }
}

/// The quotient `A/AeA` together with the fully faithful embedding of its
/// module category into `A`-mod.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: NakayamaAlgebra,
    parent_vertex: Vec<usize>,
    child_vertex: Vec<Option<usize>>,
    killed: BTreeSet<usize>,
}

impl Quotient {
    pub fn killed(&self) -> &BTreeSet<usize> {
        &self.killed
    }

    pub fn parent_vertex(&self, v: usize) -> usize {
        self.parent_vertex[v - 1]
    }

    /// `M(a,t)` over the quotient, seen as an `A`-module.
    pub fn embed(&self, x: Indec) -> Indec {
        Indec::new(self.parent_vertex(x.vertex), x.length)
    }

    /// The quotient module corresponding to an `A`-module, if it has no
    /// composition factor at a killed vertex.
    pub fn restrict(&self, x: Indec) -> Option<Indec> {
        let v = self.child_vertex.get(x.vertex).copied().flatten()?;
        let y = Indec::new(v, x.length);
        self.algebra.is_valid(y).then_some(y)
    }
}
