//! τ-rigid and support τ-tilting modules, classical tilting, and the
//! bijection `Ψ` with universal localisations.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::json;

use crate::algebra::NakayamaAlgebra;
use crate::error::{Error, Result};
use crate::localise::{self, Localisation};
use crate::modcat::{Indec, ProjDim};
use crate::subcats::{self, Subcat};

/// A basic support τ-tilting module `T` together with the vertex set `E`
/// of the idempotent it is supported away from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportTauTilting {
    pub modules: Subcat,
    pub killed: BTreeSet<usize>,
}

impl SupportTauTilting {
    pub fn is_tau_tilting(&self) -> bool {
        self.killed.is_empty()
    }

    pub fn display(&self, a: &NakayamaAlgebra) -> String {
        let mods: Vec<String> = self.modules.iter().map(|&x| a.name(x)).collect();
        let ks: Vec<String> = self.killed.iter().map(usize::to_string).collect();
        let body = if mods.is_empty() { "0".to_string() } else { mods.join("+") };
        format!("{body} | support:{{{}}}", ks.join(","))
    }

    pub fn to_json(&self, a: &NakayamaAlgebra) -> serde_json::Value {
        json!({
            "modules": self.modules.iter().map(|&x| a.name(x)).collect::<Vec<_>>(),
            "killed": self.killed,
        })
    }

    /// Parses `P1+P3+S1 | support:{2}`; the braces list the killed vertices.
    pub fn parse(a: &NakayamaAlgebra, text: &str) -> Result<Self> {
        let (mods, rest) = match text.find('|') {
            Some(i) => (&text[..i], Some((i + 1, &text[i + 1..]))),
            None => (text, None),
        };
        let modules: Subcat = a.parse_modules(mods)?.into_iter().collect();
        let mut killed = BTreeSet::new();
        if let Some((at, rest)) = rest {
            let perr = |m: &str| Error::Parse { position: at, message: m.into() };
            let body = rest
                .trim()
                .strip_prefix("support:")
                .and_then(|r| r.trim().strip_prefix('{'))
                .and_then(|r| r.strip_suffix('}'))
                .ok_or_else(|| perr("expected `support:{...}`"))?;
            for v in body.split(',').map(str::trim).filter(|v| !v.is_empty()) {
                let v: usize = v.parse().map_err(|_| perr("bad vertex in support set"))?;
                if v == 0 || v > a.n() {
                    return Err(perr("vertex out of range"));
                }
                killed.insert(v);
            }
        }
        Ok(Self { modules, killed })
    }
}

impl fmt::Display for SupportTauTilting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mods: Vec<String> = self.modules.iter().map(Indec::to_string).collect();
        write!(f, "{} | {:?}", mods.join("+"), self.killed)
    }
}

pub fn is_tau_rigid(a: &NakayamaAlgebra, m: &[Indec]) -> bool {
    m.iter().all(|&x| {
        m.iter()
            .filter(|&&y| !a.is_projective(y))
            .all(|&y| a.hom_dim(x, a.tau(y).expect("non-projective")) == 0)
    })
}

/// Projective dimension at most one, no self-extensions, and `n` distinct
/// summands.
pub fn is_tilting_classical(a: &NakayamaAlgebra, t: &[Indec]) -> bool {
    let distinct: BTreeSet<Indec> = t.iter().copied().collect();
    distinct.len() == a.n()
        && t.iter().all(|&x| matches!(a.proj_dim(x), ProjDim::Finite(d) if d <= 1))
        && t.iter().all(|&x| t.iter().all(|&y| a.ext1_dim(x, y) == 0))
}

fn support(a: &NakayamaAlgebra, set: &Subcat) -> BTreeSet<usize> {
    set.iter()
        .flat_map(|&x| (0..x.length).map(move |k| a.factor(x, k)))
        .collect()
}

pub fn stt_from_torsion(a: &NakayamaAlgebra, t: &Subcat) -> Result<SupportTauTilting> {
    let modules = subcats::ext_projectives(a, t)?;
    let sup = support(a, t);
    Ok(SupportTauTilting { modules, killed: a.vertices().filter(|v| !sup.contains(v)).collect() })
}

pub fn torsion_from_stt(a: &NakayamaAlgebra, stt: &SupportTauTilting) -> Subcat {
    a.gen_closure(&stt.modules)
}

/// All support τ-tilting modules, via torsion classes.
pub fn enumerate_stt(a: &NakayamaAlgebra) -> Vec<SupportTauTilting> {
    subcats::enumerate_torsion_classes(a)
        .iter()
        .map(|t| stt_from_torsion(a, t).expect("enumerated classes are torsion"))
        .collect()
}

/// All support τ-tilting modules by brute force: for each vertex set `E`,
/// every τ-rigid module over `A/AeA` with `n - |E|` summands.
pub fn enumerate_stt_brute_force(a: &NakayamaAlgebra) -> Vec<SupportTauTilting> {
    fn go(q: &NakayamaAlgebra, ind: &[Indec], start: usize, need: usize, cur: &mut Vec<Indec>, out: &mut Vec<Vec<Indec>>) {
        if cur.len() == need {
            out.push(cur.clone());
            return;
        }
        for i in start..ind.len() {
            let x = ind[i];
            let ok = {
                cur.push(x);
                let r = is_tau_rigid(q, cur);
                cur.pop();
                r
            };
            if ok {
                cur.push(x);
                go(q, ind, i + 1, need, cur, out);
                cur.pop();
            }
        }
    }
    let n = a.n();
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let killed: BTreeSet<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        let q = a.quotient_by_vertices(&killed);
        let ind = q.algebra.list_indecomposables();
        let mut found = Vec::new();
        go(&q.algebra, &ind, 0, q.algebra.n(), &mut Vec::new(), &mut found);
        for t in found {
            out.push(SupportTauTilting {
                modules: t.into_iter().map(|x| q.embed(x)).collect(),
                killed: killed.clone(),
            });
        }
    }
    out.sort();
    out
}

/// `Ψ(T)`: the localisation whose module category is `α(Gen T)`.
pub fn psi(a: &NakayamaAlgebra, stt: &SupportTauTilting) -> Result<Localisation> {
    let t = torsion_from_stt(a, stt);
    localise::from_xcat(a, &subcats::alpha(a, &t)?)
}

/// `Ψ⁻¹`: Ext-projectives of `β(𝒳)`.
pub fn psi_inverse(a: &NakayamaAlgebra, loc: &Localisation) -> Result<SupportTauTilting> {
    stt_from_torsion(a, &subcats::beta(a, &loc.xcat))
}

/// `Σ'_T`: the projectives `P_i` for `i ∈ E` and the summands of `T` that are
/// not split-projective in `Gen T`.
pub fn sigma_prime(a: &NakayamaAlgebra, stt: &SupportTauTilting) -> Subcat {
    let gen = torsion_from_stt(a, stt);
    let split = subcats::split_projectives_unchecked(&gen);
    stt.killed
        .iter()
        .map(|&v| a.projective(v))
        .chain(stt.modules.iter().copied().filter(|x| !split.contains(x)))
        .collect()
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

    fn stt(mods: &[Indec], killed: &[usize]) -> SupportTauTilting {
        SupportTauTilting { modules: set(mods), killed: killed.iter().copied().collect() }
    }

    #[test]
    fn tau_rigid_examples() {
        let c = NakayamaAlgebra::build_cycle(3, 3).unwrap();
        let projs: Vec<Indec> = c.vertices().map(|v| c.projective(v)).collect();
        assert!(is_tau_rigid(&c, &projs));
        assert!(is_tau_rigid(&c, &[m(1, 3), m(3, 3), m(1, 1)]));
        assert!(!is_tau_rigid(&c, &[m(1, 1), m(2, 1)]));
    }

    #[test]
    fn tilting_examples() {
        let a = NakayamaAlgebra::build_line(3, 2).unwrap();
        let projs: Vec<Indec> = a.vertices().map(|v| a.projective(v)).collect();
        assert!(is_tilting_classical(&a, &projs));
        assert!(is_tilting_classical(&a, &[m(2, 2), m(1, 2), m(2, 1)]));
        assert!(!is_tilting_classical(&a, &[m(1, 2), m(2, 2), m(1, 1)]));
    }

    #[test]
    fn enumeration_examples() {
        let c = NakayamaAlgebra::build_cycle(3, 3).unwrap();
        let all = enumerate_stt(&c);
        assert_eq!(all.len(), 20);
        assert_eq!(all.iter().filter(|s| s.is_tau_tilting()).count(), 10);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, enumerate_stt_brute_force(&c));
        let a2 = NakayamaAlgebra::build_line(2, 2).unwrap();
        assert_eq!(enumerate_stt(&a2).len(), 5);
        let full: Subcat = a2.list_indecomposables().into_iter().collect();
        assert_eq!(stt_from_torsion(&a2, &full).unwrap(), stt(&[m(1, 2), m(2, 1)], &[]));
    }

    #[test]
    fn psi_examples() {
        let a2 = NakayamaAlgebra::build_line(2, 2).unwrap();
        let l1 = psi(&a2, &stt(&[m(1, 2), m(1, 1)], &[])).unwrap();
        assert_eq!(l1.trivial, set(&[m(1, 1)]));
        let l2 = psi(&a2, &stt(&[m(1, 1)], &[2])).unwrap();
        assert_eq!(l2.trivial, set(&[m(2, 1)]));
        assert!(psi(&a2, &stt(&[m(1, 2), m(2, 1)], &[])).unwrap().is_identity());
        let c = NakayamaAlgebra::build_cycle(3, 3).unwrap();
        let l = psi(&c, &stt(&[m(1, 3), m(3, 3), m(1, 1)], &[])).unwrap();
        assert_eq!(l, localise::canonicalise(&c, &set(&[m(1, 1)])).unwrap());
        assert_eq!(psi_inverse(&c, &l).unwrap(), stt(&[m(1, 3), m(3, 3), m(1, 1)], &[]));
    }

    #[test]
    fn sigma_prime_examples() {
        let c = NakayamaAlgebra::build_cycle(3, 3).unwrap();
        assert_eq!(sigma_prime(&c, &stt(&[m(1, 3), m(1, 2), m(2, 1)], &[])), set(&[m(1, 2)]));
        assert_eq!(sigma_prime(&c, &stt(&[m(2, 3), m(2, 2), m(2, 1)], &[])), set(&[m(2, 1), m(2, 2)]));
        assert!(sigma_prime(&c, &stt(&[m(1, 3), m(2, 3), m(3, 3)], &[])).is_empty());
    }

    #[test]
    fn text_round_trip() {
        let c = NakayamaAlgebra::build_cycle(3, 3).unwrap();
        let s = SupportTauTilting::parse(&c, "P1+P3+S1 | support:{}").unwrap();
        assert_eq!(s, stt(&[m(1, 3), m(3, 3), m(1, 1)], &[]));
        assert_eq!(s.display(&c), "S1+P1+P3 | support:{}");
        let a2 = NakayamaAlgebra::build_line(2, 2).unwrap();
        let s = SupportTauTilting::parse(&a2, "S1 | support:{2}").unwrap();
        assert_eq!(s, stt(&[m(1, 1)], &[2]));
        assert!(SupportTauTilting::parse(&a2, "S1 | supp{2}").is_err());
    }
}
