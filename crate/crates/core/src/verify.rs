//! Exhaustive invariant checks over a family of algebras.
//!
//! Each algebra is checked independently; [`verify_battery`] runs them in
//! parallel and returns the reports in input order.

use std::collections::{BTreeMap, BTreeSet};

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::NakayamaAlgebra;
use crate::arcs;
use crate::error::Result;
use crate::localise::{self, Localisation};
use crate::modcat::{Indec, ProjDim};
use crate::oracle::{Matrix, Morphism, Oracle, Rep, DEFAULT_PRIME};
use crate::subcats::{self, Subcat};
use crate::tautilt::{self, SupportTauTilting};

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Also run the linear-algebra sweeps.
    pub oracle: bool,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self { oracle: false, seed: 7 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub algebra: String,
    pub invariant: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AlgebraReport {
    pub algebra: String,
    pub n: usize,
    pub uniloc: usize,
    pub checks: usize,
    /// Wide subcategories whose torsion closure needed more than one
    /// Gen + extension sweep.
    pub beta_extra_sweeps: usize,
    pub oracle_pairs: usize,
    pub failures: Vec<Failure>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Checker {
    report: AlgebraReport,
}

impl Checker {
    fn check(&mut self, invariant: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.report.checks += 1;
        if !ok {
            self.report.failures.push(Failure {
                algebra: self.report.algebra.clone(),
                invariant: invariant.to_string(),
                detail: detail(),
            });
        }
    }

    fn ok<T>(&mut self, invariant: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => {
                self.report.checks += 1;
                Some(v)
            }
            Err(e) => {
                self.check(invariant, false, || e.to_string());
                None
            }
        }
    }
}

fn names(a: &NakayamaAlgebra, s: &Subcat) -> String {
    let v: Vec<Indec> = s.iter().copied().collect();
    format!("{{{}}}", a.names(&v))
}

pub fn verify_battery(algebras: &[(String, NakayamaAlgebra)], opts: Options) -> Vec<AlgebraReport> {
    algebras.par_iter().map(|(name, a)| verify_algebra(name, a, opts)).collect()
}

pub fn verify_algebra(name: &str, a: &NakayamaAlgebra, opts: Options) -> AlgebraReport {
    let mut ck = Checker { report: AlgebraReport { algebra: name.to_string(), n: a.n(), ..Default::default() } };
    check_modules(&mut ck, a);
    let torsion = subcats::enumerate_torsion_classes(a);
    let colls = subcats::enumerate_orth_collections(a);
    let wide = subcats::enumerate_wide(a);
    check_subcats(&mut ck, a, &torsion, &colls, &wide);
    if let Some(locs) = ck.ok("uniloc.enumerate", localise::enumerate_uniloc(a)) {
        ck.report.uniloc = locs.len();
        check_counts(&mut ck, a, &torsion, &colls, &wide, &locs);
        check_localisations(&mut ck, a, &colls, &locs);
        check_tau_tilting(&mut ck, a, &torsion, &locs);
        check_arcs(&mut ck, a, &locs);
        check_selfinjective(&mut ck, a, &locs);
        if opts.oracle {
            check_oracle(&mut ck, a, &locs, opts.seed);
        }
    }
    ck.report
}

fn check_modules(ck: &mut Checker, a: &NakayamaAlgebra) {
    let ind = a.list_indecomposables();
    let total: usize = a.vertices().map(|v| a.kupisch(v)).sum();
    ck.check("modules.count", ind.len() == total, || format!("{} indecomposables, expected {total}", ind.len()));
    for &x in &ind {
        for i in a.vertices() {
            let (h, m) = (a.hom_dim(a.projective(i), x), a.comp_factor_mult(x, i));
            ck.check("modules.hom_from_projective", h == m, || format!("Hom(P{i}, {x}) = {h}, [{x}:S{i}] = {m}"));
        }
        let orbit = a.syzygy_orbit(x);
        ck.check("modules.syzygy_orbit", orbit.period >= 1, || format!("{x}"));
    }
}

fn check_subcats(ck: &mut Checker, a: &NakayamaAlgebra, torsion: &[Subcat], colls: &[Subcat], wide: &[Subcat]) {
    for t in torsion {
        let Some(al) = ck.ok("subcats.alpha", subcats::alpha(a, t)) else { continue };
        ck.check("subcats.alpha_is_wide", subcats::is_wide(a, &al), || names(a, t));
        ck.check("subcats.beta_alpha", subcats::beta(a, &al) == *t, || names(a, t));
        let (Some(ext), Some(split)) = (
            ck.ok("subcats.ext_projectives", subcats::ext_projectives(a, t)),
            ck.ok("subcats.split_projectives", subcats::split_projectives(a, t)),
        ) else {
            continue;
        };
        ck.check("subcats.split_in_ext_projectives", split.is_subset(&ext), || names(a, t));
        for &x in &split {
            let has = a.quotients(x).iter().any(|q| al.contains(q));
            ck.check("subcats.split_projective_quotient", has, || format!("{x} in {}", names(a, t)));
        }
    }
    for c in wide {
        ck.check("subcats.is_wide", subcats::is_wide(a, c), || names(a, c));
        let (b, extra) = subcats::beta_with_diagnostic(a, c);
        ck.report.beta_extra_sweeps += usize::from(extra);
        if let Some(back) = ck.ok("subcats.alpha", subcats::alpha(a, &b)) {
            ck.check("subcats.alpha_beta", back == *c, || names(a, c));
        }
        if let Some(s) = ck.ok("subcats.simples_of_wide", subcats::simples_of_wide(a, c)) {
            ck.check("subcats.wide_simples_round_trip", subcats::wide_from_collection(a, &s) == *c, || names(a, c));
        }
    }
    for s in colls {
        let w = subcats::wide_from_collection(a, s);
        let back = subcats::simples_of_wide(a, &w).ok();
        ck.check("subcats.collection_round_trip", back.as_ref() == Some(s), || names(a, s));
    }
    let ind = a.list_indecomposables();
    for (k, &x) in ind.iter().enumerate() {
        for &y in &ind[k..] {
            let sigma: Subcat = [x, y].into_iter().collect();
            let star = subcats::sigma_star(a, &sigma);
            ck.check("subcats.sigma_star_is_wide", subcats::is_wide(a, &star), || names(a, &sigma));
        }
    }
}

fn check_counts(
    ck: &mut Checker,
    a: &NakayamaAlgebra,
    torsion: &[Subcat],
    colls: &[Subcat],
    wide: &[Subcat],
    locs: &[Localisation],
) {
    let stt = tautilt::enumerate_stt(a);
    let mut sorted = stt.clone();
    sorted.sort();
    let brute = tautilt::enumerate_stt_brute_force(a);
    let counts = [colls.len(), wide.len(), torsion.len(), stt.len(), locs.len()];
    ck.check("counts.orth_wide_torsion_stt_uniloc", counts.iter().all(|&c| c == counts[0]), || {
        format!("orth/wide/torsion/stt/uniloc = {counts:?}")
    });
    ck.check("counts.stt_brute_force", sorted == brute, || {
        format!("{} via torsion classes, {} by brute force", sorted.len(), brute.len())
    });
    let distinct: BTreeSet<&Subcat> = wide.iter().collect();
    ck.check("counts.wide_distinct", distinct.len() == wide.len(), String::new);
}

fn check_localisations(ck: &mut Checker, a: &NakayamaAlgebra, colls: &[Subcat], locs: &[Localisation]) {
    let coll_set: BTreeSet<&Subcat> = colls.iter().collect();
    let by_phi: BTreeSet<&Subcat> = locs.iter().map(|l| &l.collection).collect();
    let by_simples: BTreeSet<&Subcat> = locs.iter().map(|l| &l.simples).collect();
    ck.check("uniloc.phi_bijective", by_phi == coll_set, || format!("{} images", by_phi.len()));
    ck.check("uniloc.simples_bijective", by_simples == coll_set, || format!("{} images", by_simples.len()));
    let xcats: BTreeSet<&Subcat> = locs.iter().map(|l| &l.xcat).collect();
    ck.check("uniloc.distinct", xcats.len() == locs.len(), String::new);

    for loc in locs {
        let tag = || format!("at {}", names(a, &loc.trivial));
        let fix = subcats::sigma_star(a, &subcats::lower_star(a, &loc.xcat));
        ck.check("uniloc.fixpoint", fix == loc.xcat, tag);
        ck.check("uniloc.w_determines", subcats::sigma_star(a, &loc.w) == loc.xcat, tag);
        ck.check("uniloc.xcat_wide", subcats::is_wide(a, &loc.xcat), tag);
        ck.ok("uniloc.w_properties", localise::check_w_properties(a, &loc.w));
        ck.ok("uniloc.w_tilde_properties", localise::check_w_tilde_properties(a, &loc.w_tilde));
        check_trivial_closure(ck, a, loc);

        let e = &loc.flags.annihilated;
        let split_closed = a.sub_closure(&loc.xcat) == loc.xcat && a.gen_closure(&loc.xcat) == loc.xcat;
        ck.check("uniloc.surjective_iff_closed", loc.flags.surjective == split_closed, tag);
        if loc.flags.surjective {
            let pe: Subcat = e.iter().map(|&v| a.projective(v)).collect();
            let q = localise::canonicalise(a, &pe).ok();
            ck.check("uniloc.surjective_is_quotient", q.as_ref() == Some(loc), tag);
        }
        if a.is_hereditary() {
            ck.check("uniloc.hereditary_pure_iff_injective", loc.flags.pure == loc.flags.injective, tag);
        }
        let annihilates: BTreeSet<usize> = a
            .vertices()
            .filter(|&i| loc.xcat.iter().all(|&x| a.comp_factor_mult(x, i) == 0))
            .collect();
        ck.check("uniloc.annihilated_vertices", annihilates == *e, tag);
        if !e.is_empty() && e.len() < a.n() {
            if let Some((q, inner)) = ck.ok("uniloc.compose_with_quotient", localise::compose_with_quotient(loc)) {
                let back = localise::lift_from_quotient(a, &q, &inner).ok();
                ck.check("uniloc.quotient_round_trip", back.as_ref() == Some(loc), tag);
            }
        }
    }
}

/// `*𝒳` is closed under extensions and under cokernels of injections whose
/// cokernel has projective dimension at most one.
fn check_trivial_closure(ck: &mut Checker, a: &NakayamaAlgebra, loc: &Localisation) {
    let triv = &loc.trivial;
    for &x in triv {
        for &y in triv {
            for e in a.extension_middles(x, y) {
                let ok = e.iter().all(|m| triv.contains(m));
                ck.check("trivial.extension_closed", ok, || format!("0 -> {x} -> {e:?} -> {y} -> 0"));
            }
            for f in a.hom_maps(x, y) {
                if a.kernel(f).is_some() {
                    continue;
                }
                if let Some(c) = a.cokernel(f) {
                    if matches!(a.proj_dim(c), ProjDim::Finite(d) if d <= 1) {
                        ck.check("trivial.cokernel_closed", triv.contains(&c), || format!("coker({x} -> {y}) = {c}"));
                    }
                }
            }
        }
    }
}

fn check_tau_tilting(ck: &mut Checker, a: &NakayamaAlgebra, torsion: &[Subcat], locs: &[Localisation]) {
    let loc_set: BTreeSet<&Subcat> = locs.iter().map(|l| &l.xcat).collect();
    for t in torsion {
        let Some(s) = ck.ok("stt.from_torsion", tautilt::stt_from_torsion(a, t)) else { continue };
        ck.check("stt.gen_round_trip", tautilt::torsion_from_stt(a, &s) == *t, || s.display(a));
        let Some(l) = ck.ok("stt.psi", tautilt::psi(a, &s)) else { continue };
        let tag = || s.display(a);
        ck.check("stt.psi_lands_in_uniloc", loc_set.contains(&l.xcat), tag);
        let back = tautilt::psi_inverse(a, &l).ok();
        ck.check("stt.psi_inverse_psi", back.as_ref() == Some(&s), tag);
        ck.check("stt.pure_iff_tau_tilting", l.flags.pure == s.is_tau_tilting(), tag);
        ck.check("stt.annihilated_is_support", l.flags.annihilated == s.killed, tag);
        let via = localise::canonicalise(a, &tautilt::sigma_prime(a, &s)).ok();
        ck.check("stt.sigma_prime", via.as_ref() == Some(&l), tag);
        check_summands(ck, a, &s, t, &l);
    }
    for l in locs {
        let back = tautilt::psi_inverse(a, l).ok().and_then(|s| tautilt::psi(a, &s).ok());
        ck.check("stt.psi_psi_inverse", back.as_ref() == Some(l), || names(a, &l.trivial));
    }
    // Inclusion of module categories implies inclusion of torsion classes.
    let gens: Vec<Subcat> = locs.iter().map(|l| subcats::beta(a, &l.xcat)).collect();
    for (i, l1) in locs.iter().enumerate() {
        for (j, l2) in locs.iter().enumerate() {
            if i != j && l1.xcat.is_subset(&l2.xcat) {
                ck.check("stt.order_compatible", gens[i].is_subset(&gens[j]), || {
                    format!("{} below {}", names(a, &l1.trivial), names(a, &l2.trivial))
                });
            }
        }
    }
}

/// Summands of `T` against the trivial modules of `Ψ(T)`.
fn check_summands(ck: &mut Checker, a: &NakayamaAlgebra, s: &SupportTauTilting, gen: &Subcat, l: &Localisation) {
    let split = subcats::split_projectives(a, gen).unwrap_or_default();
    for &x in &s.modules {
        let non_split = !split.contains(&x);
        ck.check("stt.non_split_iff_trivial", non_split == l.trivial.contains(&x), || {
            format!("{x} in {}", s.display(a))
        });
    }
    for &x in &l.trivial {
        ck.check("stt.trivial_in_add_iff_gen", s.modules.contains(&x) == gen.contains(&x), || {
            format!("{x} in {}", s.display(a))
        });
    }
}

fn check_arcs(ck: &mut Checker, a: &NakayamaAlgebra, locs: &[Localisation]) {
    let (shape, n, h) = if let Some((n, h)) = a.as_uniform_cycle() {
        (arcs::ArcShape::Circle, n, h)
    } else if let Some((n, h)) = a.as_uniform_line() {
        (arcs::ArcShape::Line, n, h)
    } else {
        return;
    };
    let all = arcs::enumerate_diagrams(shape, n, h);
    ck.check("arcs.count", all.len() == locs.len(), || format!("{} diagrams, {} localisations", all.len(), locs.len()));
    let all: BTreeSet<_> = all.into_iter().collect();
    let mut seen = BTreeSet::new();
    for l in locs {
        let Some(d) = ck.ok("arcs.to_diagram", arcs::to_arc_diagram(a, &l.w_tilde)) else { continue };
        let tag = || names(a, &l.w_tilde);
        ck.check("arcs.valid", d.is_valid(h), tag);
        ck.check("arcs.enumerated", all.contains(&d), tag);
        let back = arcs::from_arc_diagram(a, &d).ok();
        ck.check("arcs.round_trip", back.as_ref() == Some(&l.w_tilde), tag);
        seen.insert(d);
    }
    ck.check("arcs.injective", seen.len() == locs.len(), String::new);
}

/// Predicted by the periodicity of syzygies over `Ã_n^h`.
pub fn syzygy_returns(n: usize, h: usize, s: usize, z: usize) -> bool {
    if 2 * s == h {
        (z * s).is_multiple_of(n)
    } else {
        z.is_multiple_of(2) && (z / 2 * h).is_multiple_of(n)
    }
}

fn check_selfinjective(ck: &mut Checker, a: &NakayamaAlgebra, locs: &[Localisation]) {
    let Some((n, h)) = a.as_uniform_cycle() else { return };
    if n < 2 || h < 2 {
        return;
    }
    for x in a.list_indecomposables().into_iter().filter(|&x| !a.is_projective(x)) {
        let mut cur = x;
        for z in 1..=2 * n * h {
            cur = a.syzygy(cur).expect("self-injective");
            let predicted = syzygy_returns(n, h, x.length, z);
            ck.check("selfinjective.syzygy_period", (cur == x) == predicted, || format!("Ω^{z} {x} = {cur}"));
            if predicted {
                let e = a.ext_dim(x, x, z);
                ck.check("selfinjective.ext_at_period", e == 1, || format!("Ext^{z}({x},{x}) = {e}"));
            }
        }
    }
    let found: BTreeSet<&Subcat> = locs.iter().filter(|l| l.flags.homological).map(|l| &l.xcat).collect();
    if let Some(cls) = ck.ok("selfinjective.classify", localise::classify_homological_selfinjective(n, h)) {
        let predicted: BTreeSet<&Subcat> = cls.iter().map(|l| &l.xcat).collect();
        ck.check("selfinjective.homological_classification", found == predicted, || {
            format!("{} homological, {} predicted", found.len(), predicted.len())
        });
    }
}

/// The unit `P_i -> B ⊗ P_i` found over the field: a map from `P_i` inducing
/// bijections `Hom(B ⊗ P_i, X) -> Hom(P_i, X)` for every `X` in the
/// subcategory. `None` when no candidate passes.
pub fn unit_map(o: &Oracle, loc: &Localisation, i: usize, rng: &mut StdRng) -> Option<(Rep, Rep, Morphism)> {
    let r = o.realize(&loc.reflections[i - 1]);
    let xs: Vec<Rep> = loc.xcat.iter().map(|&x| o.realize(&[x])).collect();
    for _ in 0..8 {
        let v = o.random_vector(r.dims[i - 1], rng);
        let (pr, eta) = o.map_from_projective(i, &r, &v);
        let universal = xs.iter().all(|xr| {
            let from_r = o.hom_space(&r, xr);
            let from_p = o.hom_space(&pr, xr);
            if from_r.len() != from_p.len() {
                return false;
            }
            if from_r.is_empty() {
                return true;
            }
            let cols: Vec<Vec<u64>> = from_r.iter().map(|g| g.after(&eta).flatten()).collect();
            Matrix::from_columns(o.p, cols[0].len(), &cols).rank() == from_r.len()
        });
        if universal {
            return Some((pr, r, eta));
        }
    }
    None
}

/// Summands of `AB` and of the cokernel of the unit `A -> AB`, computed over
/// the field.
pub fn unit_cokernel_summands(loc: &Localisation, seed: u64) -> Option<Vec<Indec>> {
    let o = Oracle::new(&loc.algebra, DEFAULT_PRIME);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = loc.ab.clone();
    for i in loc.algebra.vertices() {
        let (_, r, eta) = unit_map(&o, loc, i, &mut rng)?;
        let (c, _) = o.cokernel(&r, &eta);
        out.extend(o.decompose(&c));
    }
    out.sort();
    out.dedup();
    Some(out)
}

fn check_oracle(ck: &mut Checker, a: &NakayamaAlgebra, locs: &[Localisation], seed: u64) {
    let o = Oracle::new(a, DEFAULT_PRIME);
    let ind = a.list_indecomposables();
    for &x in &ind {
        for &y in &ind {
            ck.report.oracle_pairs += 1;
            let (h, hl) = (a.hom_dim(x, y), o.hom_dim_lin(x, y));
            ck.check("oracle.hom", h == hl, || format!("Hom({x},{y}): {h} vs {hl}"));
            let (e, (e1, e2)) = (a.ext1_dim(x, y), o.ext1_routes(x, y));
            ck.check("oracle.ext1", e == e1 && e == e2, || format!("Ext¹({x},{y}): {e} vs {e1}/{e2}"));
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let small = a.n() <= 4;
    for loc in locs {
        let tag = || names(a, &loc.trivial);
        if small {
            let d = o.end_dim_lin(&loc.ab);
            ck.check("oracle.end_dim_ab", d == loc.dim_ab(), || format!("{}: {d} vs {}", tag(), loc.dim_ab()));
        }
        for i in a.vertices() {
            let unit = unit_map(&o, loc, i, &mut rng);
            ck.check("oracle.unit_universal", unit.is_some(), || format!("{} at P{i}", tag()));
            if let Some((_, _, eta)) = unit {
                let r = eta.rank();
                ck.check("oracle.unit_image", r == loc.unit_image[i - 1], || format!("{} at P{i}: rank {r}", tag()));
            }
        }
        if a.is_hereditary() && loc.flags.pure {
            check_hereditary_tilting(ck, a, loc, seed);
        }
    }
}

/// Over a hereditary algebra, `AB` together with the cokernel of the unit
/// gives the additive closure of the tilting module `Ψ⁻¹`.
fn check_hereditary_tilting(ck: &mut Checker, a: &NakayamaAlgebra, loc: &Localisation, seed: u64) {
    let got: Option<BTreeSet<Indec>> = unit_cokernel_summands(loc, seed).map(|v| v.into_iter().collect());
    let want = tautilt::psi_inverse(a, loc).ok().map(|s| s.modules);
    ck.check("oracle.hereditary_tilting", got.is_some() && got == want, || {
        format!("{} gives {:?}, expected {:?}", names(a, &loc.trivial), got, want)
    });
}

/// Totals per invariant name over a set of reports.
pub fn failure_table(reports: &[AlgebraReport]) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for f in reports.iter().flat_map(|r| &r.failures) {
        *out.entry(f.invariant.clone()).or_insert(0) += 1;
    }
    out
}
