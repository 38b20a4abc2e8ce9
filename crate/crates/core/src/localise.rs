//! Universal localisations: canonical forms, the minimal trivial modules `W`
//! and their deformation `W̃`, the shift bijection `Φ` to orthogonal
//! collections, reconstruction of the localised algebra `B` and its module
//! structure over `A`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde_json::json;

use crate::algebra::{Component, NakayamaAlgebra, Shape};
use crate::error::{Error, Result};
use crate::modcat::Indec;
use crate::subcats::{self, Subcat};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub injective: bool,
    pub surjective: bool,
    pub pure: bool,
    pub annihilated: BTreeSet<usize>,
    pub semisimple: bool,
    pub homological: bool,
}

/// One epiclass of universal localisations. Equality and hashing use `xcat`.
#[derive(Clone, Debug)]
pub struct Localisation {
    pub algebra: NakayamaAlgebra,
    pub sigma: Subcat,
    pub trivial: Subcat,
    pub w: Subcat,
    pub w_tilde: Subcat,
    pub xcat: Subcat,
    pub simples: Subcat,
    pub collection: Subcat,
    pub b: NakayamaAlgebra,
    /// `B`-indecomposable to the `A`-module it restricts to.
    pub to_a: BTreeMap<Indec, Indec>,
    pub to_b: BTreeMap<Indec, Indec>,
    /// `B ⊗ P_i` as an `A`-module, per vertex (index `i - 1`).
    pub reflections: Vec<Vec<Indec>>,
    pub ab: Vec<Indec>,
    /// `u_i`: the unit `P_i -> B ⊗ P_i` has kernel `rad^{u_i} P_i`.
    pub unit_image: Vec<usize>,
    pub flags: Flags,
}

impl PartialEq for Localisation {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.xcat == other.xcat
    }
}

impl Eq for Localisation {}

impl Hash for Localisation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.xcat.hash(state);
    }
}

impl Localisation {
    pub fn dim_ab(&self) -> usize {
        self.ab.iter().map(|x| x.length).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.trivial.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.xcat.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let a = &self.algebra;
        let names = |s: &Subcat| s.iter().map(|&x| a.name(x)).collect::<Vec<_>>();
        json!({
            "sigma": names(&self.sigma),
            "trivial_set": names(&self.trivial),
            "w": names(&self.w),
            "w_tilde": names(&self.w_tilde),
            "collection_mainnak": names(&self.collection),
            "simples": names(&self.simples),
            "xcat": names(&self.xcat),
            "B": self.b.to_json(),
            "AB": self.ab.iter().map(|&x| a.name(x)).collect::<Vec<_>>(),
            "dim_AB": self.dim_ab(),
            "flags": {
                "injective": self.flags.injective,
                "surjective": self.flags.surjective,
                "pure": self.flags.pure,
                "annihilated": self.flags.annihilated,
                "semisimple": self.flags.semisimple,
                "homological": self.flags.homological,
            },
        })
    }
}

impl fmt::Display for Localisation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<Indec> = self.trivial.iter().copied().collect();
        write!(f, "{{{}}}", if v.is_empty() { String::new() } else { self.algebra.names(&v) })
    }
}

/// `Φ`: projectives to their tops, `M(a,t)` to `M(a,t+1)` otherwise.
pub fn phi(a: &NakayamaAlgebra, x: Indec) -> Indec {
    if a.is_projective(x) {
        Indec::new(x.vertex, 1)
    } else {
        Indec::new(x.vertex, x.length + 1)
    }
}

pub fn phi_inverse(a: &NakayamaAlgebra, x: Indec) -> Indec {
    if x.length >= 2 {
        Indec::new(x.vertex, x.length - 1)
    } else {
        a.projective(x.vertex)
    }
}

/// Modules represented by maps `P_b -> P_a` with image `rad^l P_a`.
pub fn map_to_modules(a: &NakayamaAlgebra, maps: &[(usize, usize, usize)]) -> Result<Subcat> {
    let mut out = Subcat::new();
    for &(b, t, l) in maps {
        let bad = |reason: &str| Error::InvalidMap {
            source_vertex: b,
            target_vertex: t,
            shift: l,
            reason: reason.into(),
        };
        if b == 0 || t == 0 || b > a.n() || t > a.n() {
            return Err(bad("vertex out of range"));
        }
        if l >= a.kupisch(t) {
            return Err(bad("zero map; pass annihilated projectives as modules"));
        }
        if !a.hom_positions(a.projective(b), a.projective(t)).contains(&l) {
            return Err(bad("no map with this image between these projectives"));
        }
        if l > 0 {
            out.insert(Indec::new(t, l));
        }
    }
    Ok(out)
}

fn comp_size(a: &NakayamaAlgebra, x: Indec) -> usize {
    a.components()[a.component_of(x.vertex)].len()
}

/// End vertex of the arc of a non-projective module (`P_1` of its
/// presentation).
fn arc_end(a: &NakayamaAlgebra, x: Indec) -> usize {
    a.factor(x, x.length)
}

/// Offset of vertex `q` along the arc of `x`, in `0..=x.length`.
fn offset(a: &NakayamaAlgebra, x: Indec, q: usize) -> Option<usize> {
    (0..=x.length).find(|&o| a.step(x.vertex, o) == Some(q))
}

fn strictly_inside(a: &NakayamaAlgebra, x: Indec, q: usize) -> bool {
    offset(a, x, q).is_some_and(|o| o > 0 && o < x.length)
}

fn violation(p: &str, msg: String) -> Error {
    Error::PropertyViolation(p.into(), msg)
}

fn split(a: &NakayamaAlgebra, set: &Subcat) -> (Vec<Indec>, Vec<Indec>) {
    set.iter().copied().partition(|&x| !a.is_projective(x))
}

fn check_common(a: &NakayamaAlgebra, arcs: &[Indec], tags: [&str; 3]) -> Result<()> {
    let [len_tag, dom_tag, nest_tag] = tags;
    for &x in arcs {
        if x.length + 1 > comp_size(a, x) {
            return Err(violation(len_tag, format!("{} has length {} >= n", a.name(x), x.length)));
        }
    }
    let ends: BTreeSet<usize> = arcs.iter().map(|&x| arc_end(a, x)).collect();
    if ends.len() != arcs.len() {
        return Err(violation(dom_tag, "two presentations share a domain".into()));
    }
    for &x1 in arcs {
        for &x2 in arcs {
            if x1 != x2 && strictly_inside(a, x1, x2.vertex) != strictly_inside(a, x1, arc_end(a, x2)) {
                return Err(violation(
                    nest_tag,
                    format!("{} and {} cross", a.name(x1), a.name(x2)),
                ));
            }
        }
    }
    Ok(())
}

/// Properties (1)-(5) of the minimal trivial modules.
pub fn check_w_properties(a: &NakayamaAlgebra, w: &Subcat) -> Result<()> {
    let (arcs, loops) = split(a, w);
    check_common(a, &arcs, ["1", "4", "5"])?;
    // Chains follow arc ends to arc starts; a closed chain composes to an
    // endomorphism.
    let next: BTreeMap<usize, usize> = arcs.iter().map(|&x| (x.vertex, arc_end(a, x))).collect();
    for &x in &arcs {
        let mut v = arc_end(a, x);
        let mut steps = 0;
        while let Some(&u) = next.get(&v) {
            if v == x.vertex || steps > arcs.len() {
                break;
            }
            v = u;
            steps += 1;
        }
        if v == x.vertex {
            return Err(violation("2", format!("chain through {} closes up", a.name(x))));
        }
    }
    for &x in &arcs {
        for &p in &loops {
            if offset(a, x, p.vertex).is_some() {
                return Err(violation(
                    "3",
                    format!("presentation of {} factors through {}", a.name(x), a.name(p)),
                ));
            }
        }
    }
    Ok(())
}

/// Properties (1')-(4') of the deformed set, plus: no projective sits at an
/// end of an arc.
pub fn check_w_tilde_properties(a: &NakayamaAlgebra, wt: &Subcat) -> Result<()> {
    let (arcs, loops) = split(a, wt);
    check_common(a, &arcs, ["1'", "3'", "4'"])?;
    let starts: BTreeSet<usize> = arcs.iter().map(|x| x.vertex).collect();
    for &x in &arcs {
        if starts.contains(&arc_end(a, x)) {
            return Err(violation("2'", format!("presentation of {} composes", a.name(x))));
        }
        for &p in &loops {
            if offset(a, x, p.vertex).is_some_and(|o| o == 0 || o == x.length) {
                return Err(violation("2'", format!("{} sits at an end of {}", a.name(p), a.name(x))));
            }
        }
    }
    Ok(())
}

/// Replaces each maximal chain of consecutive presentations by its composite,
/// keeping the projective covers of the inner members.
pub fn w_tilde(a: &NakayamaAlgebra, w: &Subcat) -> Result<Subcat> {
    check_w_properties(a, w)?;
    let mut out = Subcat::new();
    for c in chains(a, w) {
        if c.len() == 1 {
            out.insert(c[0]);
            continue;
        }
        let head = c[0];
        let total: usize = c.iter().map(|x| x.length).sum();
        if total >= a.kupisch(head.vertex) {
            return Err(Error::StructureViolation(format!(
                "chain starting at {} composes to zero",
                a.name(head)
            )));
        }
        out.insert(Indec::new(head.vertex, total));
        out.extend(c[1..].iter().map(|x| a.projective(x.vertex)));
    }
    Ok(out)
}

/// Maximal chains of `W`, each listed head first; projectives form singleton
/// chains.
pub fn chains(a: &NakayamaAlgebra, w: &Subcat) -> Vec<Vec<Indec>> {
    let (arcs, loops) = split(a, w);
    let by_start: BTreeMap<usize, Indec> = arcs.iter().map(|&x| (x.vertex, x)).collect();
    let ends: BTreeSet<usize> = arcs.iter().map(|&x| arc_end(a, x)).collect();
    let mut out: Vec<Vec<Indec>> = loops.into_iter().map(|p| vec![p]).collect();
    for &x in &arcs {
        if ends.contains(&x.vertex) {
            continue;
        }
        let mut chain = vec![x];
        let mut cur = x;
        while let Some(&y) = by_start.get(&arc_end(a, cur)) {
            if chain.contains(&y) {
                break;
            }
            chain.push(y);
            cur = y;
        }
        out.push(chain);
    }
    out.sort();
    out
}

/// Inverse of [`w_tilde`]: splits each arc at the projectives lying directly
/// inside it.
pub fn unfold_w_tilde(a: &NakayamaAlgebra, wt: &Subcat) -> Result<Subcat> {
    check_w_tilde_properties(a, wt)?;
    let (arcs, loops) = split(a, wt);
    let mut used = BTreeSet::new();
    let mut out = Subcat::new();
    for &x in &arcs {
        let mut cuts: Vec<usize> = loops
            .iter()
            .filter(|p| strictly_inside(a, x, p.vertex))
            .filter(|p| {
                !arcs.iter().any(|&y| y != x && strictly_inside(a, y, p.vertex) && nested(a, y, x))
            })
            .map(|p| {
                used.insert(*p);
                offset(a, x, p.vertex).expect("inside")
            })
            .collect();
        cuts.sort();
        let mut prev = 0;
        for o in cuts.into_iter().chain([x.length]) {
            out.insert(Indec::new(a.factor(x, prev), o - prev));
            prev = o;
        }
    }
    out.extend(loops.into_iter().filter(|p| !used.contains(p)));
    Ok(out)
}

/// Whether arc `inner` lies inside arc `outer`.
fn nested(a: &NakayamaAlgebra, inner: Indec, outer: Indec) -> bool {
    match (offset(a, outer, inner.vertex), offset(a, outer, arc_end(a, inner))) {
        (Some(s), Some(e)) => s < e,
        _ => false,
    }
}

/// Minimal trivial module per vertex: `P_i` if trivial, else the shortest
/// trivial quotient `M(i,t)`.
pub fn minimal_trivial(a: &NakayamaAlgebra, trivial: &Subcat) -> Subcat {
    a.vertices()
        .filter_map(|i| {
            let p = a.projective(i);
            if trivial.contains(&p) {
                return Some(p);
            }
            (1..a.kupisch(i)).map(|t| Indec::new(i, t)).find(|x| trivial.contains(x))
        })
        .collect()
}

/// The canonical localisation of `A` at the modules `sigma`.
pub fn canonicalise(a: &NakayamaAlgebra, sigma: &Subcat) -> Result<Localisation> {
    for &x in sigma {
        a.check(x)?;
    }
    let xcat = subcats::sigma_star(a, sigma);
    let trivial = subcats::lower_star(a, &xcat);
    let w = minimal_trivial(a, &trivial);
    let w_tilde = w_tilde(a, &w)?;
    check_w_tilde_properties(a, &w_tilde)?;
    let collection: Subcat = w_tilde.iter().map(|&x| phi(a, x)).collect();
    if !subcats::is_orthogonal_collection(a, &collection) {
        return Err(Error::StructureViolation(format!(
            "Φ(W̃) = {{{}}} is not orthogonal",
            a.names(&collection.iter().copied().collect::<Vec<_>>())
        )));
    }
    let simples = subcats::simples_of_wide(a, &xcat)?;
    let (b, to_a) = reconstruct_algebra(a, &xcat, &simples)?;
    let to_b: BTreeMap<Indec, Indec> = to_a.iter().map(|(&k, &v)| (v, k)).collect();

    let mut reflections = Vec::with_capacity(a.n());
    for i in a.vertices() {
        let mut r = Vec::new();
        for &y in &simples {
            let cover = to_a[&b.projective(to_b[&y].vertex)];
            r.extend(std::iter::repeat_n(cover, a.comp_factor_mult(y, i)));
        }
        r.sort();
        reflections.push(r);
    }
    let mut ab: Vec<Indec> = reflections.iter().flatten().copied().collect();
    ab.sort();
    let unit_image: Vec<usize> = a
        .vertices()
        .map(|i| {
            xcat.iter()
                .flat_map(|&x| a.hom_maps(a.projective(i), x))
                .map(|f| f.image_length())
                .max()
                .unwrap_or(0)
        })
        .collect();

    let annihilated: BTreeSet<usize> = a.vertices().filter(|&i| reflections[i - 1].is_empty()).collect();
    let quotient_cat: Subcat = a
        .list_indecomposables()
        .into_iter()
        .filter(|&x| (0..x.length).all(|k| !annihilated.contains(&a.factor(x, k))))
        .collect();
    let mut loc = Localisation {
        algebra: a.clone(),
        sigma: sigma.clone(),
        trivial,
        w,
        w_tilde,
        xcat: xcat.clone(),
        simples: simples.clone(),
        collection,
        b,
        to_a,
        to_b,
        reflections,
        ab,
        flags: Flags {
            injective: a.vertices().all(|i| unit_image[i - 1] == a.kupisch(i)),
            surjective: xcat == quotient_cat,
            pure: annihilated.is_empty(),
            annihilated,
            semisimple: xcat == simples,
            homological: false,
        },
        unit_image,
    };
    loc.flags.homological = is_homological(&loc);
    Ok(loc)
}

/// The localisation whose module category is the wide subcategory `xcat`.
pub fn from_xcat(a: &NakayamaAlgebra, xcat: &Subcat) -> Result<Localisation> {
    let loc = canonicalise(a, &subcats::lower_star(a, xcat))?;
    if loc.xcat != *xcat {
        return Err(Error::StructureViolation(format!(
            "{{{}}} is not the essential image of a localisation",
            a.names(&xcat.iter().copied().collect::<Vec<_>>())
        )));
    }
    Ok(loc)
}

/// The localisation indexed by an orthogonal collection under `Φ`.
pub fn from_collection(a: &NakayamaAlgebra, collection: &Subcat) -> Result<Localisation> {
    let wt: Subcat = collection.iter().map(|&x| phi_inverse(a, x)).collect();
    let w = unfold_w_tilde(a, &wt)?;
    let loc = canonicalise(a, &w)?;
    if loc.w_tilde != wt || loc.w != w {
        return Err(Error::StructureViolation(format!(
            "collection {{{}}} does not round-trip through W̃",
            a.names(&collection.iter().copied().collect::<Vec<_>>())
        )));
    }
    Ok(loc)
}

/// Rebuilds the basic algebra `B` with `mod B ≃ xcat` from the simple
/// objects and their extensions; returns `B` with the dictionary
/// `B-indecomposable -> A-module`.
pub fn reconstruct_algebra(
    a: &NakayamaAlgebra,
    xcat: &Subcat,
    simples: &Subcat,
) -> Result<(NakayamaAlgebra, BTreeMap<Indec, Indec>)> {
    let sv = |m: String| Error::StructureViolation(m);
    let simp: Vec<Indec> = simples.iter().copied().collect();
    let mut succ: BTreeMap<Indec, Indec> = BTreeMap::new();
    let mut pred: BTreeMap<Indec, Indec> = BTreeMap::new();
    for &x in &simp {
        for &y in &simp {
            match a.ext1_dim(x, y) {
                0 => {}
                1 => {
                    if succ.insert(x, y).is_some() || pred.insert(y, x).is_some() {
                        return Err(sv(format!("{} has two arrows at one end", a.name(x))));
                    }
                }
                d => return Err(sv(format!("Ext¹({}, {}) has dimension {d}", a.name(x), a.name(y)))),
            }
        }
    }
    // Components, ordered by their smallest simple object.
    let mut seen = BTreeSet::new();
    let mut comps: Vec<(Shape, Vec<Indec>)> = Vec::new();
    for &x in &simp {
        if seen.contains(&x) {
            continue;
        }
        let mut start = x;
        let mut shape = Shape::Line;
        while let Some(&p) = pred.get(&start) {
            if p == x {
                shape = Shape::Cycle;
                break;
            }
            start = p;
        }
        let start = if shape == Shape::Cycle { x } else { start };
        let mut members = vec![start];
        let mut cur = start;
        while let Some(&s) = succ.get(&cur) {
            if s == start {
                break;
            }
            members.push(s);
            cur = s;
        }
        seen.extend(members.iter().copied());
        comps.push((shape, members));
    }
    comps.sort_by_key(|(_, m)| *m.iter().min().expect("non-empty"));
    let order: Vec<Indec> = comps.iter().flat_map(|(_, m)| m.iter().copied()).collect();
    let index: BTreeMap<Indec, usize> = order.iter().enumerate().map(|(i, &y)| (y, i + 1)).collect();

    // Filtration of each member by simple objects, top first.
    let mut to_a = BTreeMap::new();
    let mut lengths: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in xcat {
        let mut layers = Vec::new();
        let mut rest = Some(x);
        while let Some(r) = rest {
            let top = simp
                .iter()
                .copied()
                .find(|s| s.vertex == r.vertex && s.length <= r.length)
                .ok_or_else(|| sv(format!("{} has no simple top in the subcategory", a.name(r))))?;
            layers.push(top);
            rest = (r.length > top.length).then(|| Indec::new(a.factor(r, top.length), r.length - top.length));
            if let Some(k) = rest {
                if !xcat.contains(&k) {
                    return Err(sv(format!("kernel {} of {} leaves the subcategory", a.name(k), a.name(r))));
                }
            }
        }
        if layers.windows(2).any(|p| succ.get(&p[0]) != Some(&p[1])) {
            return Err(sv(format!("filtration of {} does not follow the arrows", a.name(x))));
        }
        let j = index[&layers[0]];
        let e = lengths.entry(j).or_insert(0);
        *e = (*e).max(layers.len());
        if to_a.insert(Indec::new(j, layers.len()), x).is_some() {
            return Err(sv(format!("two modules share the filtration of {}", a.name(x))));
        }
    }
    let mut components = Vec::new();
    let mut j = 1;
    for (shape, members) in &comps {
        let kupisch: Vec<usize> = (j..j + members.len()).map(|v| lengths[&v]).collect();
        j += members.len();
        components.push(Component { shape: *shape, kupisch });
    }
    let b = NakayamaAlgebra::from_components(components).map_err(|e| sv(format!("B is not Nakayama: {e}")))?;
    if to_a.len() != b.list_indecomposables().len() {
        return Err(sv("B-modules and the subcategory differ in size".into()));
    }
    let b_proj: Subcat = b.vertices().map(|v| to_a[&b.projective(v)]).collect();
    let ext_proj: Subcat = xcat
        .iter()
        .copied()
        .filter(|&x| xcat.iter().all(|&m| a.ext1_dim(x, m) == 0))
        .collect();
    if b_proj != ext_proj {
        return Err(sv("projective B-modules are not the Ext-projectives".into()));
    }
    Ok((b, to_a))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Whether `Ext_A^i` and `Ext_B^i` agree on the subcategory for all `i >= 1`.
/// Both sequences are eventually periodic, so a finite window decides.
pub fn is_homological(loc: &Localisation) -> bool {
    let (a, b) = (&loc.algebra, &loc.b);
    let orbits: Vec<_> = loc
        .xcat
        .iter()
        .map(|&x| (x, a.syzygy_orbit(x), b.syzygy_orbit(loc.to_b[&x])))
        .collect();
    orbits.iter().all(|(_, oa, ob)| {
        let window = oa.pre.max(ob.pre) + lcm(oa.period, ob.period) + 1;
        (1..=window).all(|i| {
            let za = oa.get(i - 1);
            let zb = ob.get(i - 1);
            loc.xcat.iter().all(|&y| {
                let ea = za.map_or(0, |z| a.ext1_dim(z, y));
                let eb = zb.map_or(0, |z| b.ext1_dim(z, loc.to_b[&y]));
                ea == eb
            })
        })
    })
}

/// All universal localisations, one per orthogonal collection, in collection
/// order.
pub fn enumerate_uniloc(a: &NakayamaAlgebra) -> Result<Vec<Localisation>> {
    use rayon::prelude::*;
    subcats::enumerate_orth_collections(a)
        .par_iter()
        .map(|c| from_collection(a, c))
        .collect()
}

/// The homological localisations of `Ã_n^h` predicted by the classification
/// for self-injective Nakayama algebras.
pub fn classify_homological_selfinjective(n: usize, h: usize) -> Result<Vec<Localisation>> {
    if n < 2 || h < 2 {
        return Err(Error::NotSelfInjective);
    }
    let a = NakayamaAlgebra::build_cycle(n, h)?;
    let projs: Vec<Indec> = a.vertices().map(|v| a.projective(v)).collect();
    let mut sigmas: Vec<Subcat> = vec![Subcat::new(), projs.iter().copied().collect()];
    if h <= n {
        // Projective orthogonal collections are exactly the semisimple
        // localisations.
        for c in subcats::enumerate_orth_collections(&a) {
            if !c.is_empty() && c.iter().all(|&x| a.is_projective(x)) {
                sigmas.push(subcats::lower_star(&a, &c));
            }
        }
    }
    let d = gcd(n, h);
    if d != 1 && h > 2 {
        let kmax = if h == d { d - 2 } else { d - 1 };
        for mask in 1u32..(1 << d) {
            let k = mask.count_ones() as usize;
            if k > kmax {
                continue;
            }
            let sigma: Subcat = (1..=n)
                .filter(|v| mask & (1 << ((v - 1) % d)) != 0)
                .map(|v| a.simple(v))
                .collect();
            sigmas.push(sigma);
        }
    }
    let mut out: Vec<Localisation> = Vec::new();
    for s in sigmas {
        let loc = canonicalise(&a, &s)?;
        if !out.contains(&loc) {
            out.push(loc);
        }
    }
    Ok(out)
}

/// The localisation of `A/AeA` with the same module category, for a
/// localisation annihilating the vertices `E`.
pub fn compose_with_quotient(loc: &Localisation) -> Result<(crate::algebra::Quotient, Localisation)> {
    if loc.flags.annihilated.is_empty() {
        return Err(Error::NotAnnihilating);
    }
    let q = loc.algebra.quotient_by_vertices(&loc.flags.annihilated);
    let xcat: Subcat = loc
        .xcat
        .iter()
        .map(|&x| {
            q.restrict(x)
                .ok_or_else(|| Error::StructureViolation(format!("{x} meets an annihilated vertex")))
        })
        .collect::<Result<_>>()?;
    let inner = from_xcat(&q.algebra, &xcat)?;
    Ok((q, inner))
}

/// Lifts a localisation of `A/AeA` back to `A` by adding `Ae`.
pub fn lift_from_quotient(
    a: &NakayamaAlgebra,
    q: &crate::algebra::Quotient,
    inner: &Localisation,
) -> Result<Localisation> {
    let mut sigma: Subcat = inner.trivial.iter().map(|&x| q.embed(x)).collect();
    sigma.extend(q.killed().iter().map(|&v| a.projective(v)));
    canonicalise(a, &sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: usize, t: usize) -> Indec {
        Indec::new(a, t)
    }

    fn set(xs: &[Indec]) -> Subcat {
        xs.iter().copied().collect()
    }

    fn line(n: usize, h: usize) -> NakayamaAlgebra {
        NakayamaAlgebra::build_line(n, h).unwrap()
    }

    #[test]
    fn map_to_modules_examples() {
        let a = line(3, 2);
        assert_eq!(map_to_modules(&a, &[(3, 2, 1)]).unwrap(), set(&[m(2, 1)]));
        assert_eq!(map_to_modules(&a, &[(2, 2, 0)]).unwrap(), Subcat::new());
        assert!(matches!(map_to_modules(&a, &[(3, 1, 1)]), Err(Error::InvalidMap { .. })));
        assert!(matches!(map_to_modules(&a, &[(3, 1, 2)]), Err(Error::InvalidMap { .. })));
        assert_eq!(map_to_modules(&line(2, 2), &[(2, 1, 1)]).unwrap(), set(&[m(1, 1)]));
    }

    #[test]
    fn phi_examples() {
        let a = line(3, 2);
        assert_eq!(phi(&a, a.projective(3)), m(3, 1));
        assert_eq!(phi(&a, m(2, 1)), m(2, 2));
        assert_eq!(phi(&a, m(1, 1)), m(1, 2));
        for x in a.list_indecomposables() {
            assert_eq!(phi_inverse(&a, phi(&a, x)), x);
        }
        let c = NakayamaAlgebra::build_cycle(3, 3).unwrap();
        assert_eq!(phi(&c, m(1, 2)), m(1, 3));
    }

    #[test]
    fn canonicalise_examples() {
        let a = line(3, 2);
        let loc = canonicalise(&a, &set(&[m(2, 1)])).unwrap();
        assert_eq!(loc.trivial, set(&[m(2, 1)]));
        assert_eq!(loc.w, set(&[m(2, 1)]));
        assert_eq!(loc.w_tilde, set(&[m(2, 1)]));
        assert_eq!(loc.collection, set(&[m(2, 2)]));
        assert_eq!(loc.simples, set(&[m(1, 1), m(2, 2)]));
        assert_eq!(loc.b.components().len(), 2);
        assert!(loc.b.components().iter().all(|c| c.shape == Shape::Line && c.kupisch == vec![1]));

        let id = canonicalise(&a, &Subcat::new()).unwrap();
        assert!(id.trivial.is_empty());
        assert_eq!(id.b, a);
        assert!(id.flags.injective && id.flags.pure && id.flags.surjective && id.flags.homological);
        assert!(id.to_a.iter().all(|(k, v)| k == v));

        let projs: Subcat = a.vertices().map(|v| a.projective(v)).collect();
        let zero = canonicalise(&a, &projs).unwrap();
        assert_eq!(zero.trivial.len(), 5);
        assert_eq!(zero.w, projs);
        assert_eq!(zero.b.n(), 0);
    }

    #[test]
    fn w_tilde_examples() {
        let a = line(3, 3);
        assert_eq!(w_tilde(&a, &set(&[m(1, 1), m(2, 1)])).unwrap(), set(&[m(1, 2), m(2, 2)]));
        assert_eq!(unfold_w_tilde(&a, &set(&[m(1, 2), m(2, 2)])).unwrap(), set(&[m(1, 1), m(2, 1)]));
        let w = set(&[m(1, 1)]);
        assert_eq!(w_tilde(&a, &w).unwrap(), w);
        let a32 = line(3, 2);
        let loc = canonicalise(&a32, &set(&[m(1, 1), m(2, 1)])).unwrap();
        assert_eq!(loc.w, a32.vertices().map(|v| a32.projective(v)).collect());
        assert!(loc.xcat.is_empty());
    }

    #[test]
    fn property_violations_are_named() {
        let a = line(4, 4);
        match check_w_properties(&a, &set(&[m(1, 2), m(2, 2)])) {
            Err(Error::PropertyViolation(p, _)) => assert_eq!(p, "5"),
            other => panic!("{other:?}"),
        }
        match check_w_properties(&a, &set(&[m(1, 2), m(2, 2), m(2, 1)])) {
            Err(Error::PropertyViolation(p, _)) => assert_eq!(p, "4"),
            other => panic!("{other:?}"),
        }
        match check_w_properties(&line(3, 3), &set(&[m(1, 2), m(3, 1)])) {
            Err(Error::PropertyViolation(p, _)) => assert_eq!(p, "3"),
            other => panic!("{other:?}"),
        }
        let c = NakayamaAlgebra::build_cycle(2, 4).unwrap();
        match check_w_properties(&c, &set(&[m(1, 1), m(2, 1)])) {
            Err(Error::PropertyViolation(p, _)) => assert_eq!(p, "2"),
            other => panic!("{other:?}"),
        }
        match check_w_properties(&c, &set(&[m(1, 2)])) {
            Err(Error::PropertyViolation(p, _)) => assert_eq!(p, "1"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn reconstruct_examples() {
        let c = NakayamaAlgebra::build_cycle(6, 3).unwrap();
        let loc = canonicalise(&c, &set(&[m(1, 1), m(4, 1)])).unwrap();
        assert_eq!(loc.xcat.len(), 8);
        assert_eq!(loc.b, NakayamaAlgebra::build_cycle(4, 2).unwrap());
        assert!(loc.flags.homological);
    }

    #[test]
    fn module_of_localisation_examples() {
        let a = line(3, 2);
        let loc = canonicalise(&a, &set(&[m(2, 1)])).unwrap();
        assert_eq!(loc.reflections, vec![vec![m(1, 1)], vec![m(2, 2)], vec![m(2, 2)]]);
        assert_eq!(loc.ab, vec![m(1, 1), m(2, 2), m(2, 2)]);
        assert_eq!(loc.dim_ab(), 5);
        assert!(!loc.flags.injective && loc.flags.pure && !loc.flags.surjective);
        let id = canonicalise(&a, &Subcat::new()).unwrap();
        assert_eq!(id.unit_image, vec![2, 2, 1]);
        let a2 = line(2, 2);
        let loc = canonicalise(&a2, &set(&[m(1, 1)])).unwrap();
        assert_eq!(loc.xcat, set(&[m(1, 2)]));
        assert_eq!(loc.reflections, vec![vec![m(1, 2)], vec![m(1, 2)]]);
        assert_eq!(loc.unit_image, vec![2, 1]);
        assert!(loc.flags.injective && loc.flags.pure);
    }

    #[test]
    fn predicates_examples() {
        let a = line(3, 2);
        let loc = canonicalise(&a, &set(&[a.projective(2)])).unwrap();
        assert!(loc.flags.surjective);
        assert_eq!(loc.flags.annihilated, BTreeSet::from([2]));
        assert!(!loc.flags.homological);
        let k = line(1, 2);
        assert_eq!(enumerate_uniloc(&k).unwrap().len(), 2);
    }

    #[test]
    fn enumerate_examples() {
        let a2 = line(2, 2);
        let locs = enumerate_uniloc(&a2).unwrap();
        let trivial: BTreeSet<Subcat> = locs.iter().map(|l| l.trivial.clone()).collect();
        let want: BTreeSet<Subcat> = [
            set(&[]),
            set(&[m(1, 1)]),
            set(&[m(1, 2)]),
            set(&[m(2, 1)]),
            set(&[m(1, 2), m(2, 1), m(1, 1)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(trivial, want);
        assert_eq!(enumerate_uniloc(&NakayamaAlgebra::build_cycle(3, 3).unwrap()).unwrap().len(), 20);
    }

    #[test]
    fn classification_examples() {
        let locs = classify_homological_selfinjective(6, 3).unwrap();
        let non_ss: Vec<_> = locs
            .iter()
            .filter(|l| !l.is_identity() && !l.is_zero() && !l.flags.semisimple)
            .collect();
        assert_eq!(non_ss.len(), 3);
        let nonzero = classify_homological_selfinjective(3, 3).unwrap().iter().filter(|l| !l.is_zero()).count();
        assert_eq!(nonzero, 7);
        assert_eq!(classify_homological_selfinjective(2, 3).unwrap().len(), 2);
        assert!(matches!(classify_homological_selfinjective(1, 3), Err(Error::NotSelfInjective)));
    }

    #[test]
    fn quotient_composition() {
        let a2 = line(2, 2);
        let loc = canonicalise(&a2, &set(&[m(2, 1)])).unwrap();
        let (q, inner) = compose_with_quotient(&loc).unwrap();
        assert!(inner.is_identity());
        assert_eq!(lift_from_quotient(&a2, &q, &inner).unwrap(), loc);
        let a = line(3, 2);
        let loc = canonicalise(&a, &set(&[m(2, 2)])).unwrap();
        let (q, inner) = compose_with_quotient(&loc).unwrap();
        assert_eq!(q.algebra.components().len(), 2);
        assert!(inner.is_identity());
        assert!(matches!(
            compose_with_quotient(&canonicalise(&a, &Subcat::new()).unwrap()),
            Err(Error::NotAnnihilating)
        ));
    }
}
