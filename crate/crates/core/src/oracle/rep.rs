//! Explicit representations of the bound quiver and the linear algebra on
//! them: Hom spaces as intertwiner nullspaces, kernels, cokernels, pushouts
//! and decomposition into uniserials by rank counts.

use rand::Rng;

use super::fp::Matrix;
use crate::algebra::NakayamaAlgebra;
use crate::modcat::Indec;

/// A representation: one space per vertex, one matrix per arrow
/// (`dims[w] x dims[v]` for `v -> w`), arrows in `algebra.arrows()` order.
#[derive(Clone, Debug)]
pub struct Rep {
    pub dims: Vec<usize>,
    pub arrows: Vec<Matrix>,
}

impl Rep {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Per-vertex linear maps.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub maps: Vec<Matrix>,
}

impl Morphism {
    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &Morphism) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&f.maps).map(|(g, f)| g.mul(f)).collect() }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: u64) -> Morphism {
        Morphism { maps: self.maps.iter().map(|m| m.scale(c)).collect() }
    }

    pub fn flatten(&self) -> Vec<u64> {
        self.maps
            .iter()
            .flat_map(|m| (0..m.rows).flat_map(move |i| (0..m.cols).map(move |j| m.get(i, j))))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Matrix::rank).sum()
    }
}

pub struct Oracle<'a> {
    pub alg: &'a NakayamaAlgebra,
    pub p: u64,
    arrows: Vec<(usize, usize)>,
}

impl<'a> Oracle<'a> {
    pub fn new(alg: &'a NakayamaAlgebra, p: u64) -> Self {
        Self { alg, p, arrows: alg.arrows() }
    }

    fn arrow_index(&self, v: usize) -> Option<usize> {
        self.arrows.iter().position(|&(s, _)| s == v)
    }

    /// Uniserial summands realised on the basis of their composition-factor
    /// positions, arrows acting as shifts; direct sums block-wise.
    pub fn realize(&self, modules: &[Indec]) -> Rep {
        let n = self.alg.n();
        let mut basis: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (s, &x) in modules.iter().enumerate() {
            assert!(self.alg.is_valid(x), "{x} is not a module");
            for k in 0..x.length {
                basis[self.alg.factor(x, k) - 1].push((s, k));
            }
        }
        let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
        let arrows = self
            .arrows
            .iter()
            .map(|&(v, w)| {
                let mut m = Matrix::zeros(self.p, dims[w - 1], dims[v - 1]);
                for (j, &(s, k)) in basis[v - 1].iter().enumerate() {
                    if let Some(i) = basis[w - 1].iter().position(|&b| b == (s, k + 1)) {
                        m.set(i, j, 1);
                    }
                }
                m
            })
            .collect();
        Rep { dims, arrows }
    }

    /// The map `V_a -> V_{a+len}` of the path of length `len` from `a`.
    pub fn path(&self, rep: &Rep, a: usize, len: usize) -> Option<Matrix> {
        let mut m = Matrix::identity(self.p, rep.dims[a - 1]);
        let mut v = a;
        for _ in 0..len {
            let k = self.arrow_index(v)?;
            m = rep.arrows[k].mul(&m);
            v = self.arrows[k].1;
        }
        Some(m)
    }

    pub fn satisfies_relations(&self, rep: &Rep) -> bool {
        self.alg
            .vertices()
            .all(|a| self.path(rep, a, self.alg.kupisch(a)).is_none_or(|m| m.is_zero()))
    }

    pub fn hom_space(&self, v: &Rep, w: &Rep) -> Vec<Morphism> {
        let n = self.alg.n();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0;
        for i in 0..n {
            offsets.push(acc);
            acc += w.dims[i] * v.dims[i];
        }
        let unknowns = acc;
        let idx = |vert: usize, r: usize, c: usize| offsets[vert] + r * v.dims[vert] + c;
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for (k, &(s, t)) in self.arrows.iter().enumerate() {
            let (s, t) = (s - 1, t - 1);
            // W_α f_s - f_t V_α = 0, entry (r, c) with r < dim W_t, c < dim V_s.
            for r in 0..w.dims[t] {
                for c in 0..v.dims[s] {
                    let mut row = vec![0u64; unknowns];
                    for j in 0..w.dims[s] {
                        let coef = w.arrows[k].get(r, j);
                        if coef != 0 {
                            let e = &mut row[idx(s, j, c)];
                            *e = (*e + coef) % self.p;
                        }
                    }
                    for j in 0..v.dims[t] {
                        let coef = v.arrows[k].get(j, c);
                        if coef != 0 {
                            let e = &mut row[idx(t, r, j)];
                            *e = (*e + self.p - coef) % self.p;
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let mut sys = Matrix::zeros(self.p, rows.len(), unknowns);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                sys.set(i, j, x);
            }
        }
        let null = sys.nullspace();
        (0..null.cols)
            .map(|col| Morphism {
                maps: (0..n)
                    .map(|vert| {
                        let mut m = Matrix::zeros(self.p, w.dims[vert], v.dims[vert]);
                        for r in 0..w.dims[vert] {
                            for c in 0..v.dims[vert] {
                                m.set(r, c, null.get(idx(vert, r, c), col));
                            }
                        }
                        m
                    })
                    .collect(),
            })
            .collect()
    }

    pub fn is_morphism(&self, v: &Rep, w: &Rep, f: &Morphism) -> bool {
        self.arrows.iter().enumerate().all(|(k, &(s, t))| {
            w.arrows[k].mul(&f.maps[s - 1]) == f.maps[t - 1].mul(&v.arrows[k])
        })
    }

    pub fn hom_dim_lin(&self, x: Indec, y: Indec) -> usize {
        self.hom_space(&self.realize(&[x]), &self.realize(&[y])).len()
    }

    pub fn end_dim_lin(&self, modules: &[Indec]) -> usize {
        let r = self.realize(modules);
        self.hom_space(&r, &r).len()
    }

    /// Kernel representation and its inclusion.
    pub fn kernel(&self, v: &Rep, f: &Morphism) -> (Rep, Morphism) {
        let incl: Vec<Matrix> = f.maps.iter().map(Matrix::nullspace).collect();
        let dims: Vec<usize> = incl.iter().map(|m| m.cols).collect();
        let arrows = self
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let img = v.arrows[k].mul(&incl[s - 1]);
                incl[t - 1].solve(&img).expect("kernel is a subrepresentation")
            })
            .collect();
        (Rep { dims, arrows }, Morphism { maps: incl })
    }

    /// Cokernel representation and the projection onto it.
    pub fn cokernel(&self, w: &Rep, f: &Morphism) -> (Rep, Morphism) {
        let proj: Vec<Matrix> = f.maps.iter().map(Matrix::cokernel_projection).collect();
        let dims: Vec<usize> = proj.iter().map(|m| m.rows).collect();
        let arrows = self
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let right_inv = proj[s - 1]
                    .solve(&Matrix::identity(self.p, dims[s - 1]))
                    .expect("projection has full row rank");
                proj[t - 1].mul(&w.arrows[k]).mul(&right_inv)
            })
            .collect();
        (Rep { dims, arrows }, Morphism { maps: proj })
    }

    /// Multiplicities of the uniserial summands, by
    /// `#{M(a,u) : u >= t} = rk path(a, t-1) - rk path(a-1, t)`.
    pub fn decompose(&self, rep: &Rep) -> Vec<Indec> {
        let rk = |a: usize, len: usize| self.path(rep, a, len).map_or(0, |m| m.rank());
        let at_least = |a: usize, t: usize| {
            if t > self.alg.kupisch(a) {
                return 0;
            }
            let above = self.alg.predecessor(a).map_or(0, |b| rk(b, t));
            rk(a, t - 1) - above
        };
        let mut out = Vec::new();
        for a in self.alg.vertices() {
            for t in 1..=self.alg.kupisch(a) {
                let mult = at_least(a, t) - at_least(a, t + 1);
                out.extend(std::iter::repeat_n(Indec::new(a, t), mult));
            }
        }
        out
    }

    /// `P_a -> M(a,t)` sending the top to the top.
    pub fn projective_cover(&self, x: Indec) -> (Rep, Rep, Morphism) {
        let p0 = self.alg.projective(x.vertex);
        let (pr, xr) = (self.realize(&[p0]), self.realize(&[x]));
        let maps = self
            .alg
            .vertices()
            .map(|v| {
                let mut m = Matrix::zeros(self.p, xr.dims[v - 1], pr.dims[v - 1]);
                let pos_p: Vec<usize> = (0..p0.length).filter(|&k| self.alg.factor(p0, k) == v).collect();
                let pos_x: Vec<usize> = (0..x.length).filter(|&k| self.alg.factor(x, k) == v).collect();
                for (j, k) in pos_p.iter().enumerate() {
                    if let Some(i) = pos_x.iter().position(|q| q == k) {
                        m.set(i, j, 1);
                    }
                }
                m
            })
            .collect();
        (pr, xr, Morphism { maps })
    }

    /// The map `P_i -> R` sending the top of `P_i` to `x ∈ e_i R`.
    pub fn map_from_projective(&self, i: usize, r: &Rep, x: &Matrix) -> (Rep, Morphism) {
        let pi = self.alg.projective(i);
        let pr = self.realize(&[pi]);
        let mut maps: Vec<Matrix> = (0..self.alg.n())
            .map(|v| Matrix::zeros(self.p, r.dims[v], pr.dims[v]))
            .collect();
        let mut seen = vec![0usize; self.alg.n()];
        for k in 0..pi.length {
            let v = self.alg.factor(pi, k);
            let img = self.path(r, i, k).expect("path inside P_i").mul(x);
            let col = seen[v - 1];
            seen[v - 1] += 1;
            for row in 0..img.rows {
                maps[v - 1].set(row, col, img.get(row, 0));
            }
        }
        (pr, Morphism { maps })
    }

    /// Two independent computations of `dim Ext¹(X,Y)` from the explicit
    /// presentation `0 -> K -> P_0 -> X -> 0`.
    pub fn ext1_routes(&self, x: Indec, y: Indec) -> (usize, usize) {
        let (pr, xr, cover) = self.projective_cover(x);
        let (kr, incl) = self.kernel(&pr, &cover);
        let yr = self.realize(&[y]);
        let hom_k = self.hom_space(&kr, &yr);
        let hom_p = self.hom_space(&pr, &yr);
        let hom_x = self.hom_space(&xr, &yr);
        let route1 = hom_k.len() + hom_x.len() - hom_p.len();
        let cols: Vec<Vec<u64>> = hom_p.iter().map(|g| g.after(&incl).flatten()).collect();
        let len = cols.first().map_or(0, Vec::len);
        let rank = if cols.is_empty() { 0 } else { Matrix::from_columns(self.p, len, &cols).rank() };
        (route1, hom_k.len() - rank)
    }

    pub fn ext1_dim_lin(&self, x: Indec, y: Indec) -> usize {
        self.ext1_routes(x, y).0
    }

    /// Middle terms (decomposed) of the pushouts of `0 -> K -> P_0 -> X -> 0`
    /// along every map `K -> Y` in the given list.
    pub fn pushout_middles(&self, x: Indec, y: Indec, maps: &[Morphism]) -> Vec<Vec<Indec>> {
        let (pr, _, cover) = self.projective_cover(x);
        let (_, incl) = self.kernel(&pr, &cover);
        let yr = self.realize(&[y]);
        let sum = direct_sum(&pr, &yr);
        maps.iter()
            .map(|f| {
                let g = Morphism {
                    maps: (0..self.alg.n())
                        .map(|v| stack(&incl.maps[v], &f.maps[v].neg()))
                        .collect(),
                };
                let (e, _) = self.cokernel(&sum, &g);
                let mut d = self.decompose(&e);
                d.sort();
                d
            })
            .collect()
    }

    /// Every map `ΩX -> Y` over the field (only sensible for `p = 2` and
    /// small Hom spaces).
    pub fn all_syzygy_maps(&self, x: Indec, y: Indec) -> Vec<Morphism> {
        let (pr, _, cover) = self.projective_cover(x);
        let (kr, _) = self.kernel(&pr, &cover);
        let yr = self.realize(&[y]);
        let basis = self.hom_space(&kr, &yr);
        let total = (self.p as usize).pow(basis.len() as u32);
        (0..total)
            .map(|mut code| {
                let mut acc = Morphism {
                    maps: (0..self.alg.n())
                        .map(|v| Matrix::zeros(self.p, yr.dims[v], kr.dims[v]))
                        .collect(),
                };
                for b in &basis {
                    let c = (code % self.p as usize) as u64;
                    code /= self.p as usize;
                    acc = acc.add(&b.scale(c));
                }
                acc
            })
            .collect()
    }

    /// `dim Hom(Y, τX)` modulo maps factoring through the injective hull of
    /// `Y`.
    pub fn stable_hom_to_tau(&self, y: Indec, tau_x: Indec) -> usize {
        let soc = self.alg.factor(y, y.length - 1);
        let hull = self
            .alg
            .list_indecomposables()
            .into_iter()
            .filter(|&z| self.alg.factor(z, z.length - 1) == soc)
            .max_by_key(|z| z.length)
            .expect("some module has this socle");
        let (yr, ir, tr) = (self.realize(&[y]), self.realize(&[hull]), self.realize(&[tau_x]));
        let iota = self
            .hom_space(&yr, &ir)
            .into_iter()
            .find(|f| f.rank() == y.length)
            .expect("Y embeds in its injective hull");
        let hom_yt = self.hom_space(&yr, &tr);
        let through: Vec<Vec<u64>> =
            self.hom_space(&ir, &tr).iter().map(|g| g.after(&iota).flatten()).collect();
        let rank = if through.is_empty() {
            0
        } else {
            Matrix::from_columns(self.p, through[0].len(), &through).rank()
        };
        hom_yt.len() - rank
    }

    pub fn random_vector(&self, dim: usize, rng: &mut impl Rng) -> Matrix {
        Matrix::random(self.p, dim, 1, rng)
    }
}

pub fn direct_sum(a: &Rep, b: &Rep) -> Rep {
    let dims = a.dims.iter().zip(&b.dims).map(|(x, y)| x + y).collect();
    let arrows = a.arrows.iter().zip(&b.arrows).map(|(x, y)| block_diag(x, y)).collect();
    Rep { dims, arrows }
}

fn block_diag(x: &Matrix, y: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(x.p, x.rows + y.rows, x.cols + y.cols);
    for i in 0..x.rows {
        for j in 0..x.cols {
            m.set(i, j, x.get(i, j));
        }
    }
    for i in 0..y.rows {
        for j in 0..y.cols {
            m.set(x.rows + i, x.cols + j, y.get(i, j));
        }
    }
    m
}

fn stack(top: &Matrix, bottom: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(top.p, top.rows + bottom.rows, top.cols);
    for i in 0..top.rows {
        for j in 0..top.cols {
            m.set(i, j, top.get(i, j));
        }
    }
    for i in 0..bottom.rows {
        for j in 0..bottom.cols {
            m.set(top.rows + i, j, bottom.get(i, j));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: usize, t: usize) -> Indec {
        Indec::new(a, t)
    }

    #[test]
    fn realize_examples() {
        let a = NakayamaAlgebra::build_line(3, 2).unwrap();
        let o = Oracle::new(&a, 101);
        let r = o.realize(&[a.projective(1)]);
        assert_eq!(r.dims, vec![1, 1, 0]);
        assert_eq!(r.arrows[0].get(0, 0), 1);
        assert!(o.satisfies_relations(&r));
        assert_eq!(o.realize(&[]).total_dim(), 0);
        let c = NakayamaAlgebra::build_cycle(3, 3).unwrap();
        let oc = Oracle::new(&c, 101);
        assert_eq!(oc.realize(&[c.projective(1)]).dims, vec![1, 1, 1]);
    }

    #[test]
    fn hom_ext_small() {
        let a = NakayamaAlgebra::build_line(3, 2).unwrap();
        let o = Oracle::new(&a, 101);
        assert_eq!(o.hom_dim_lin(m(3, 1), m(2, 2)), 1);
        assert_eq!(o.hom_dim_lin(m(1, 1), m(1, 1)), 1);
        assert_eq!(o.ext1_routes(m(1, 1), m(2, 1)), (1, 1));
        assert_eq!(o.end_dim_lin(&[m(1, 1), m(2, 2), m(2, 2)]), 5);
    }

    #[test]
    fn decompose_realisations() {
        let c = NakayamaAlgebra::build_cycle(2, 5).unwrap();
        let o = Oracle::new(&c, 101);
        let mods = vec![m(1, 5), m(1, 3), m(2, 1), m(2, 4), m(2, 4)];
        let mut d = o.decompose(&o.realize(&mods));
        d.sort();
        let mut want = mods.clone();
        want.sort();
        assert_eq!(d, want);
    }

    #[test]
    fn kernel_of_cover_is_syzygy() {
        let c = NakayamaAlgebra::build_cycle(3, 4).unwrap();
        let o = Oracle::new(&c, 101);
        for x in c.list_indecomposables() {
            let (pr, _, cover) = o.projective_cover(x);
            let (kr, _) = o.kernel(&pr, &cover);
            assert!(o.satisfies_relations(&kr));
            assert_eq!(o.decompose(&kr), c.syzygy(x).into_iter().collect::<Vec<_>>());
        }
    }
}
