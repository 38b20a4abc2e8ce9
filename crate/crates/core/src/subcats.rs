//! Wide subcategories, torsion classes and orthogonal collections, the maps
//! between them, and their exhaustive enumeration.
//!
//! Subcategories are stored extensionally as sets of indecomposables.

use std::collections::BTreeSet;

use crate::algebra::NakayamaAlgebra;
use crate::error::{Error, Result};
use crate::modcat::Indec;

pub type Subcat = BTreeSet<Indec>;

/// Whether the minimal presentation of `x` induces a bijection
/// `Hom(P_0, w) -> Hom(P_1, w)`. For projective `x` this asks `Hom(x, w) = 0`.
pub fn presentation_iso(a: &NakayamaAlgebra, x: Indec, w: Indec) -> bool {
    let p0 = a.projective(x.vertex);
    let hp0 = a.hom_positions(p0, w);
    if a.is_projective(x) {
        return hp0.is_empty();
    }
    let p1 = a.projective(a.factor(x, x.length));
    hp0.iter().all(|&v| v + x.length < w.length) && hp0.len() == a.hom_dim(p1, w)
}

/// `Σ^*`: the modules against which every member of `sigma` has an
/// invertible presentation.
pub fn sigma_star(a: &NakayamaAlgebra, sigma: &Subcat) -> Subcat {
    a.list_indecomposables()
        .into_iter()
        .filter(|&w| sigma.iter().all(|&c| presentation_iso(a, c, w)))
        .collect()
}

/// `*𝒞`: the modules whose presentation is invertible against all of `cat`.
pub fn lower_star(a: &NakayamaAlgebra, cat: &Subcat) -> Subcat {
    a.list_indecomposables()
        .into_iter()
        .filter(|&x| cat.iter().all(|&c| presentation_iso(a, x, c)))
        .collect()
}

fn all_in(set: &Subcat, xs: impl IntoIterator<Item = Indec>) -> bool {
    xs.into_iter().all(|x| set.contains(&x))
}

pub fn is_extension_closed(a: &NakayamaAlgebra, set: &Subcat) -> bool {
    set.iter().all(|&sub| {
        set.iter()
            .all(|&quot| a.extension_middles(sub, quot).into_iter().all(|e| all_in(set, e)))
    })
}

pub fn is_quotient_closed(a: &NakayamaAlgebra, set: &Subcat) -> bool {
    set.iter().all(|&x| all_in(set, a.quotients(x)))
}

pub fn is_torsion(a: &NakayamaAlgebra, set: &Subcat) -> bool {
    is_quotient_closed(a, set) && is_extension_closed(a, set)
}

/// Closed under kernels, cokernels (of maps between indecomposables) and
/// extensions.
pub fn is_wide(a: &NakayamaAlgebra, set: &Subcat) -> bool {
    let maps_ok = set.iter().all(|&x| {
        set.iter().all(|&y| {
            a.hom_maps(x, y).into_iter().all(|f| {
                a.kernel(f).is_none_or(|k| set.contains(&k)) && a.cokernel(f).is_none_or(|c| set.contains(&c))
            })
        })
    });
    maps_ok && is_extension_closed(a, set)
}

pub fn is_orthogonal_collection(a: &NakayamaAlgebra, set: &Subcat) -> bool {
    set.iter()
        .all(|&x| set.iter().all(|&y| a.hom_dim(x, y) == usize::from(x == y)))
}

/// The simple objects of a wide subcategory.
pub fn simples_of_wide(a: &NakayamaAlgebra, cat: &Subcat) -> Result<Subcat> {
    if !is_wide(a, cat) {
        return Err(Error::NotWide(a.names(&cat.iter().copied().collect::<Vec<_>>())));
    }
    Ok(cat
        .iter()
        .copied()
        .filter(|&x| {
            cat.iter()
                .all(|&c| a.hom_maps(x, c).into_iter().all(|f| a.kernel(f).is_none()))
        })
        .collect())
}

/// Closure of `set` under taking summands of extension middles.
pub fn extension_closure(a: &NakayamaAlgebra, set: &Subcat) -> Subcat {
    let mut out = set.clone();
    loop {
        let mut new = Vec::new();
        for &sub in &out {
            for &quot in &out {
                for e in a.extension_middles(sub, quot) {
                    new.extend(e.into_iter().filter(|x| !out.contains(x)));
                }
            }
        }
        if new.is_empty() {
            return out;
        }
        out.extend(new);
    }
}

/// The wide subcategory whose simple objects are `simples`: everything
/// filtered by them.
pub fn wide_from_collection(a: &NakayamaAlgebra, simples: &Subcat) -> Subcat {
    extension_closure(a, simples)
}

fn check_torsion(a: &NakayamaAlgebra, t: &Subcat) -> Result<()> {
    if is_torsion(a, t) {
        Ok(())
    } else {
        Err(Error::NotTorsion(a.names(&t.iter().copied().collect::<Vec<_>>())))
    }
}

/// `α(𝒯)`: members all of whose kernels of maps from indecomposables of `𝒯`
/// stay in `𝒯`.
pub fn alpha(a: &NakayamaAlgebra, t: &Subcat) -> Result<Subcat> {
    check_torsion(a, t)?;
    Ok(alpha_unchecked(a, t))
}

pub(crate) fn alpha_unchecked(a: &NakayamaAlgebra, t: &Subcat) -> Subcat {
    t.iter()
        .copied()
        .filter(|&x| {
            t.iter()
                .all(|&y| a.hom_maps(y, x).into_iter().all(|g| a.kernel(g).is_none_or(|k| t.contains(&k))))
        })
        .collect()
}

/// `β(𝒞)` with a flag telling whether more than one Gen + extension sweep
/// was needed to reach a torsion class.
pub fn beta_with_diagnostic(a: &NakayamaAlgebra, cat: &Subcat) -> (Subcat, bool) {
    let g = a.gen_closure(cat);
    let mut out = g.clone();
    for &sub in &g {
        for &quot in &g {
            for e in a.extension_middles(sub, quot) {
                out.extend(e);
            }
        }
    }
    let mut extra = false;
    while !is_torsion(a, &out) {
        extra = true;
        out = extension_closure(a, &a.gen_closure(&out));
    }
    (out, extra)
}

/// The smallest torsion class containing `cat`.
pub fn beta(a: &NakayamaAlgebra, cat: &Subcat) -> Subcat {
    beta_with_diagnostic(a, cat).0
}

pub fn ext_projectives(a: &NakayamaAlgebra, t: &Subcat) -> Result<Subcat> {
    check_torsion(a, t)?;
    Ok(ext_projectives_unchecked(a, t))
}

pub(crate) fn ext_projectives_unchecked(a: &NakayamaAlgebra, t: &Subcat) -> Subcat {
    t.iter()
        .copied()
        .filter(|&x| t.iter().all(|&m| a.ext1_dim(x, m) == 0))
        .collect()
}

pub fn split_projectives(a: &NakayamaAlgebra, t: &Subcat) -> Result<Subcat> {
    check_torsion(a, t)?;
    Ok(split_projectives_unchecked(t))
}

pub(crate) fn split_projectives_unchecked(t: &Subcat) -> Subcat {
    t.iter()
        .copied()
        .filter(|&x| !t.iter().any(|y| y.vertex == x.vertex && y.length > x.length))
        .collect()
}

/// Bricks: indecomposables with one-dimensional endomorphism ring.
pub fn bricks(a: &NakayamaAlgebra) -> Vec<Indec> {
    a.list_indecomposables()
        .into_iter()
        .filter(|&x| a.hom_dim(x, x) == 1)
        .collect()
}

/// All orthogonal collections, by backtracking over bricks in
/// `(vertex, length)` order.
pub fn enumerate_orth_collections(a: &NakayamaAlgebra) -> Vec<Subcat> {
    fn go(a: &NakayamaAlgebra, bricks: &[Indec], start: usize, cur: &mut Vec<Indec>, out: &mut Vec<Subcat>) {
        out.push(cur.iter().copied().collect());
        for i in start..bricks.len() {
            let x = bricks[i];
            if cur.iter().all(|&y| a.hom_dim(x, y) == 0 && a.hom_dim(y, x) == 0) {
                cur.push(x);
                go(a, bricks, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    let b = bricks(a);
    let mut out = Vec::new();
    go(a, &b, 0, &mut Vec::new(), &mut out);
    for s in &out {
        let tops: BTreeSet<usize> = s.iter().map(|x| x.vertex).collect();
        assert_eq!(tops.len(), s.len(), "orthogonal collection with a repeated top");
    }
    out
}

/// All torsion classes. A quotient-closed set is a choice of prefix length
/// `l_a` per vertex; candidates are filtered by extension closure.
pub fn enumerate_torsion_classes(a: &NakayamaAlgebra) -> Vec<Subcat> {
    let n = a.n();
    let caps: Vec<usize> = a.vertices().map(|v| a.kupisch(v)).collect();
    let mut out = Vec::new();
    let mut lens = vec![0usize; n];
    loop {
        // S_{a+l} and M(a,l) force M(a,l+1) whenever it exists.
        let cheap_ok = (0..n).all(|i| {
            let l = lens[i];
            l == 0 || l == caps[i] || lens[a.step(i + 1, l).expect("inside P") - 1] == 0
        });
        if cheap_ok {
            let set: Subcat = (0..n)
                .flat_map(|i| (1..=lens[i]).map(move |t| Indec::new(i + 1, t)))
                .collect();
            if is_extension_closed(a, &set) {
                out.push(set);
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if lens[i] < caps[i] {
                lens[i] += 1;
                break;
            }
            lens[i] = 0;
            i += 1;
        }
    }
}

pub fn enumerate_wide(a: &NakayamaAlgebra) -> Vec<Subcat> {
    enumerate_orth_collections(a)
        .iter()
        .map(|s| wide_from_collection(a, s))
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

    fn line(n: usize, h: usize) -> NakayamaAlgebra {
        NakayamaAlgebra::build_line(n, h).unwrap()
    }

    fn all(a: &NakayamaAlgebra) -> Subcat {
        a.list_indecomposables().into_iter().collect()
    }

    #[test]
    fn sigma_star_examples() {
        let a = line(3, 2);
        assert_eq!(sigma_star(&a, &set(&[m(2, 1)])), set(&[m(1, 1), m(2, 2)]));
        assert_eq!(sigma_star(&a, &Subcat::new()), all(&a));
        let a2 = line(2, 2);
        assert_eq!(sigma_star(&a2, &set(&[m(1, 1)])), set(&[m(1, 2)]));
    }

    #[test]
    fn lower_star_examples() {
        let a = line(3, 2);
        assert_eq!(lower_star(&a, &set(&[m(1, 1), m(2, 2)])), set(&[m(2, 1)]));
        assert_eq!(lower_star(&a, &all(&a)), Subcat::new());
        assert_eq!(lower_star(&a, &Subcat::new()), all(&a));
    }

    #[test]
    fn simples_examples() {
        let a = line(3, 2);
        let c = set(&[m(1, 1), m(2, 2)]);
        assert_eq!(simples_of_wide(&a, &c).unwrap(), c);
        let simples: Subcat = a.vertices().map(|v| a.simple(v)).collect();
        assert_eq!(simples_of_wide(&a, &all(&a)).unwrap(), simples);
        assert_eq!(simples_of_wide(&a, &Subcat::new()).unwrap(), Subcat::new());
        assert!(matches!(simples_of_wide(&a, &set(&[m(1, 2), m(1, 1)])), Err(Error::NotWide(_))));
    }

    #[test]
    fn wide_from_collection_examples() {
        let a = line(3, 2);
        let c = set(&[m(1, 1), m(2, 2)]);
        assert_eq!(wide_from_collection(&a, &c), c);
        let simples: Subcat = a.vertices().map(|v| a.simple(v)).collect();
        assert_eq!(wide_from_collection(&a, &simples), all(&a));
        let c6 = NakayamaAlgebra::build_cycle(6, 3).unwrap();
        let w = wide_from_collection(&c6, &set(&[m(1, 1), m(4, 1)]));
        assert!(is_wide(&c6, &w));
        assert_eq!(simples_of_wide(&c6, &w).unwrap(), set(&[m(1, 1), m(4, 1)]));
    }

    #[test]
    fn alpha_examples() {
        let a2 = line(2, 2);
        assert_eq!(alpha(&a2, &set(&[m(1, 2), m(1, 1)])).unwrap(), set(&[m(1, 2)]));
        assert_eq!(alpha(&a2, &all(&a2)).unwrap(), all(&a2));
        assert_eq!(alpha(&a2, &Subcat::new()).unwrap(), Subcat::new());
        assert!(matches!(alpha(&a2, &set(&[m(1, 2)])), Err(Error::NotTorsion(_))));
    }

    #[test]
    fn beta_examples() {
        let a2 = line(2, 2);
        assert_eq!(beta(&a2, &set(&[m(1, 2)])), set(&[m(1, 2), m(1, 1)]));
        assert_eq!(beta(&a2, &Subcat::new()), Subcat::new());
        let a = line(3, 2);
        let (b, extra) = beta_with_diagnostic(&a, &set(&[m(1, 1), m(2, 2)]));
        assert_eq!(b, set(&[m(1, 1), m(1, 2), m(2, 1), m(2, 2)]));
        assert!(!extra);
        let smallest = enumerate_torsion_classes(&a)
            .into_iter()
            .filter(|t| t.contains(&m(1, 1)) && t.contains(&m(2, 2)))
            .min_by_key(|t| t.len())
            .unwrap();
        assert_eq!(smallest, b);
    }

    #[test]
    fn projectives_of_torsion_classes() {
        let a2 = line(2, 2);
        let projs: Subcat = a2.vertices().map(|v| a2.projective(v)).collect();
        assert_eq!(ext_projectives(&a2, &all(&a2)).unwrap(), projs);
        assert_eq!(split_projectives(&a2, &all(&a2)).unwrap(), projs);
        let t = set(&[m(1, 2), m(1, 1)]);
        assert_eq!(ext_projectives(&a2, &t).unwrap(), t);
        assert_eq!(split_projectives(&a2, &t).unwrap(), set(&[m(1, 2)]));
        let c = NakayamaAlgebra::build_cycle(3, 3).unwrap();
        let t = c.gen_closure(&set(&[m(1, 3), m(3, 3), m(1, 1)]));
        assert_eq!(ext_projectives(&c, &t).unwrap(), set(&[m(1, 3), m(3, 3), m(1, 1)]));
    }

    #[test]
    fn enumeration_counts() {
        let a = line(3, 2);
        assert_eq!(enumerate_orth_collections(&a).len(), 12);
        assert_eq!(enumerate_torsion_classes(&a).len(), 12);
        assert_eq!(enumerate_wide(&a).len(), 12);
        assert_eq!(enumerate_torsion_classes(&line(2, 2)).len(), 5);
        let c = NakayamaAlgebra::build_cycle(3, 3).unwrap();
        assert_eq!(enumerate_orth_collections(&c).len(), 20);
        assert_eq!(enumerate_torsion_classes(&c).len(), 20);
        assert_eq!(enumerate_wide(&c).len(), 20);
        assert_eq!(enumerate_orth_collections(&line(1, 2)).len(), 2);
    }
}
