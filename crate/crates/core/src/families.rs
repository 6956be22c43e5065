//! Concrete families: group algebras of cyclic groups, the pointed Hopf
//! algebras `H(n, d)` with their R-matrices `R_s`, the braided line `B` and
//! the quadratic Galois objects `C(a; alpha)` over it.
//!
//! `H(n, d)` is generated by a grouplike `g` of order `2m` and skew
//! primitives `x_1..x_n` with `x_i^2 = 0`, `x_i x_j = -x_j x_i`,
//! `g x_i = w^{d_i} x_i g`, `Delta(x_i) = 1 (x) x_i + x_i (x) g^m`. Basis
//! element `g^j x_S` has index `j * 2^n + S`, where bit `i` of `S` stands
//! for `x_{i+1}` and `x_S` is the increasing product.

use std::sync::Arc;

use crate::braiding::{tensor_power_mul, Category, Module, RMatrix};
use crate::exact::{Field, Matrix};
use crate::hopf::{FDAlgebra, FDCoalgebra, FDHopf};
use crate::modcat::{biproduct, BraidedHopf, ComoduleAlgebra};
use crate::{Error, Result};

/// Parameters of `H(n, d)` with grouplike of order `2m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HndParams {
    pub n: usize,
    pub m: usize,
    pub d: Vec<usize>,
}

impl HndParams {
    pub fn new(n: usize, m: usize, d: Vec<usize>) -> Self {
        HndParams { n, m, d }
    }

    pub fn order(&self) -> usize {
        2 * self.m
    }

    pub fn dim(&self) -> usize {
        self.order() << self.n
    }

    /// `d` has length `n` and odd entries in `[1, 2m)`.
    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::BadParams("m must be positive".into()));
        }
        if self.d.len() != self.n {
            return Err(Error::BadParams(format!("expected {} exponents, got {}", self.n, self.d.len())));
        }
        for (i, &di) in self.d.iter().enumerate() {
            if di % 2 == 0 || di >= self.order() {
                return Err(Error::BadParams(format!("d_{} = {di} must be odd and below {}", i + 1, self.order())));
            }
        }
        Ok(())
    }

    /// Parameters with the last generator dropped.
    pub fn truncated(&self) -> Self {
        let k = self.n.saturating_sub(1);
        HndParams::new(k, self.m, self.d[..k].to_vec())
    }

    pub fn last(&self) -> Option<usize> {
        self.d.last().copied()
    }
}

/// Primitive root of unity of order `2m` in the field; the characteristic
/// must not divide `2m`.
pub fn omega<F: Field>(field: &F, m: usize) -> Result<F::Elem> {
    let p = field.characteristic();
    if p != 0 && (2 * m as u64) % p == 0 {
        return Err(Error::BadParams(format!("characteristic {p} divides {}", 2 * m)));
    }
    field
        .root_of_unity(2 * m as u64)
        .map_err(|e| Error::BadParams(e.to_string()))
}

/// `K[Z_{2m}]` with basis `g^j`, `j = 0..2m`.
pub fn group_hopf<F: Field>(m: usize, field: &F) -> Result<FDHopf<F>> {
    let k = 2 * m;
    let table: Vec<Vec<usize>> = (0..k).map(|i| (0..k).map(|j| (i + j) % k).collect()).collect();
    let inverse: Vec<usize> = (0..k).map(|i| (k - i) % k).collect();
    Ok(FDHopf::group_algebra(field, &table, &inverse, 0)?)
}

/// `R_s = (1/2m) sum_{j,t} w^{-jt} g^j (x) g^{st}` in a Hopf algebra whose
/// grouplike `g^j` sits at index `j * dim / 2m` (both `K[Z_{2m}]` and `H(n, d)`).
pub fn r_s<F: Field>(h: &FDHopf<F>, m: usize, s: usize) -> Result<RMatrix<F>> {
    let f = h.field();
    let k = 2 * m;
    if h.dim() % k != 0 {
        return Err(Error::BadParams(format!("dimension {} is not a multiple of {k}", h.dim())));
    }
    let stride = h.dim() / k;
    let w = omega(f, m)?;
    let scale = f.inv(&f.from_i64(k as i64)).ok_or_else(|| Error::BadParams("2m not invertible".into()))?;
    let n = h.dim();
    let mut el = vec![f.zero(); n * n];
    for j in 0..k {
        for t in 0..k {
            let c = f.mul(&scale, &f.pow(&w, ((k - (j * t) % k) % k) as u64));
            let idx = (j * stride) * n + ((s * t) % k) * stride;
            el[idx] = f.add(&el[idx], &c);
        }
    }
    RMatrix::new(h, el)
}

/// `{ s in 0..2m : s d_i = m mod 2m for all i }`.
pub fn qt_congruence(p: &HndParams) -> Vec<usize> {
    let k = p.order();
    (0..k).filter(|&s| p.d.iter().all(|&di| (s * di) % k == p.m)).collect()
}

/// Sign of the reordering `x_S x_T -> x_{S u T}`.
fn merge_sign(s: usize, t: usize) -> i64 {
    let mut inv = 0;
    for i in 0..usize::BITS as usize {
        if s >> i & 1 == 1 {
            inv += (t & ((1usize << i) - 1)).count_ones();
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn basis_name(j: usize, set: usize, n: usize) -> String {
    let mut s = if j == 0 && set != 0 { String::new() } else { format!("g^{j}") };
    for i in 0..n {
        if set >> i & 1 == 1 {
            if !s.is_empty() {
                s.push(' ');
            }
            s.push_str(&format!("x{}", i + 1));
        }
    }
    s
}

/// The Hopf algebra `H(n, d)`.
pub fn hnd<F: Field>(p: &HndParams, field: &F) -> Result<FDHopf<F>> {
    p.validate()?;
    let f = field;
    let w = omega(f, p.m)?;
    let k = p.order();
    let ns = 1usize << p.n;
    let dim = k * ns;
    let dsum = |set: usize| -> usize { (0..p.n).filter(|&i| set >> i & 1 == 1).map(|i| p.d[i]).sum() };
    let names: Vec<String> = (0..dim).map(|i| basis_name(i / ns, i % ns, p.n)).collect();
    let mut unit = vec![f.zero(); dim];
    unit[0] = f.one();
    let alg = FDAlgebra::from_products(f, dim, unit, |x, y| {
        let (a, s) = (x / ns, x % ns);
        let (b, t) = (y / ns, y % ns);
        if s & t != 0 {
            return vec![];
        }
        // x_S g^b = w^{-b sum_S d} g^b x_S
        let e = (k - (b * dsum(s)) % k) % k;
        let c = f.mul(&f.pow(&w, e as u64), &f.from_i64(merge_sign(s, t)));
        vec![(((a + b) % k) * ns + (s | t), c)]
    })?
    .with_basis_names(names);
    let g_idx = ns;
    let gm_idx = p.m * ns;
    // Delta on generators, then extended multiplicatively
    let mut delta_g = crate::braiding::Sparse::new();
    delta_g.insert(g_idx * dim + g_idx, f.one());
    let delta_x: Vec<crate::braiding::Sparse<F::Elem>> = (0..p.n)
        .map(|i| {
            let xi = 1usize << i;
            let mut v = crate::braiding::Sparse::new();
            v.insert(xi, f.one());
            v.insert(xi * dim + gm_idx, f.one());
            v
        })
        .collect();
    let mut comult = Matrix::zeros(f, dim * dim, dim);
    let mut counit = Matrix::zeros(f, 1, dim);
    let mut antipode = Matrix::zeros(f, dim, dim);
    let mut s_g_inv = vec![f.zero(); dim];
    s_g_inv[(k - 1) * ns] = f.one();
    let s_x: Vec<Vec<F::Elem>> = (0..p.n)
        .map(|i| {
            let mut xi = vec![f.zero(); dim];
            xi[1 << i] = f.neg(&f.one());
            let mut gm = vec![f.zero(); dim];
            gm[gm_idx] = f.one();
            alg.mul_vec(&xi, &gm)
        })
        .collect();
    for idx in 0..dim {
        let (j, set) = (idx / ns, idx % ns);
        let mut d = crate::braiding::tensor_power_unit(&alg, 2);
        for _ in 0..j {
            d = tensor_power_mul(&alg, 2, &d, &delta_g);
        }
        // S(g^j x_S) = S(x_{i_r}) ... S(x_{i_1}) g^{-j}
        let mut sv = vec![f.zero(); dim];
        sv[0] = f.one();
        for i in 0..p.n {
            if set >> i & 1 == 1 {
                d = tensor_power_mul(&alg, 2, &d, &delta_x[i]);
                sv = alg.mul_vec(&s_x[i], &sv);
            }
        }
        for _ in 0..j {
            sv = alg.mul_vec(&sv, &s_g_inv);
        }
        for (r, c) in d {
            comult.set(r, idx, c);
        }
        for (r, c) in sv.into_iter().enumerate() {
            antipode.set(r, idx, c);
        }
        if set == 0 {
            counit.set(0, idx, f.one());
        }
    }
    let co = FDCoalgebra::new(comult, counit)?;
    Ok(FDHopf::new(alg, co, antipode)?)
}

/// Braided category `H(n-1, d') -mod` with R-matrix `R_s`.
pub fn base_category<F: Field>(p: &HndParams, s: usize, field: &F) -> Result<Category<F>> {
    let q = p.truncated();
    let l = hnd(&q, field)?;
    let r = r_s(&l, p.m, s)?;
    Category::new(l, r)
}

/// `L`-module structure on `span{1, w}` with `g . w = w^{d_n} w` and
/// `x_i . w = alpha_i 1`.
fn line_carrier<F: Field>(l: &FDHopf<F>, p: &HndParams, alpha: &[F::Elem], field: &F) -> Result<Module<F>> {
    let f = field;
    let q = p.truncated();
    let ns = 1usize << q.n;
    let w = omega(f, p.m)?;
    let dn = p.last().ok_or_else(|| Error::BadParams("n must be positive".into()))?;
    let actions = (0..l.dim())
        .map(|idx| {
            let (j, set) = (idx / ns, idx % ns);
            let mut a = Matrix::zeros(f, 2, 2);
            if set == 0 {
                a.set(0, 0, f.one());
                a.set(1, 1, f.pow(&w, ((j * dn) % p.order()) as u64));
            } else if set.count_ones() == 1 {
                a.set(0, 1, alpha[set.trailing_zeros() as usize].clone());
            }
            a
        })
        .collect();
    Module::new(2, actions)
}

/// The braided line `B = K[x]/(x^2)` in `H(n-1, d')`-mod with `R_s`,
/// `g . x = w^{d_n} x`, `x_i . x = 0`, `x` primitive.
pub fn braided_line<F: Field>(p: &HndParams, s: usize, field: &F) -> Result<BraidedHopf<F>> {
    p.validate()?;
    if p.n == 0 {
        return Err(Error::BadParams("n must be positive".into()));
    }
    if !qt_congruence(p).contains(&s) {
        return Err(Error::BadParams(format!("s = {s} is not in the QT congruence class")));
    }
    let f = field;
    let cat = Arc::new(base_category(p, s, f)?);
    let carrier = line_carrier(cat.hopf(), p, &vec![f.zero(); p.n - 1], f)?;
    let alg = FDAlgebra::from_products(f, 2, vec![f.one(), f.zero()], |x, y| {
        if x + y < 2 {
            vec![(x + y, f.one())]
        } else {
            vec![]
        }
    })?
    .with_basis_names(vec!["1".into(), "x".into()]);
    // Delta(1) = 1 (x) 1, Delta(x) = 1 (x) x + x (x) 1
    let comult = Matrix::from_i64_rows(f, &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]]);
    let counit = Matrix::from_i64_rows(f, &[&[1, 0]]);
    let antipode = Matrix::from_i64_rows(f, &[&[1, 0], &[0, -1]]);
    let h = FDHopf::new(alg, FDCoalgebra::new(comult, counit)?, antipode)?;
    BraidedHopf::new(cat, h, carrier)
}

/// `Psi: H(n, d) -> B x H(n-1, d')`, `g -> 1 x g`, `x_i -> 1 x x_i`,
/// `x_n -> x x g^m`. Returns `(Psi, H(n, d), B x H(n-1, d'))`.
pub fn psi_iso<F: Field>(p: &HndParams, s: usize, field: &F) -> Result<(Matrix<F>, FDHopf<F>, FDHopf<F>)> {
    let f = field;
    let h = hnd(p, f)?;
    let b = braided_line(p, s, f)?;
    let bl = biproduct(&b)?;
    let q = p.truncated();
    let ldim = b.cat().hopf().dim();
    let lns = 1usize << q.n;
    let ns = 1usize << p.n;
    let unit_b = |l: usize| l;
    let x_b = |l: usize| ldim + l;
    let mut img_g = vec![f.zero(); bl.dim()];
    img_g[unit_b(lns)] = f.one();
    let img_x: Vec<Vec<F::Elem>> = (0..p.n)
        .map(|i| {
            let mut v = vec![f.zero(); bl.dim()];
            if i + 1 < p.n {
                v[unit_b(1 << i)] = f.one();
            } else {
                v[x_b(p.m * lns)] = f.one();
            }
            v
        })
        .collect();
    let alg = bl.algebra();
    let mut psi = Matrix::zeros(f, bl.dim(), h.dim());
    for idx in 0..h.dim() {
        let (j, set) = (idx / ns, idx % ns);
        let mut v = bl.unit().to_vec();
        for _ in 0..j {
            v = alg.mul_vec(&v, &img_g);
        }
        for (i, xi) in img_x.iter().enumerate() {
            if set >> i & 1 == 1 {
                v = alg.mul_vec(&v, xi);
            }
        }
        for (r, c) in v.into_iter().enumerate() {
            psi.set(r, idx, c);
        }
    }
    Ok((psi, h, bl))
}

/// `I_n = { i < n : d_i = -d_n mod 2m }` (0-based indices).
pub fn i_n(p: &HndParams) -> Vec<usize> {
    let k = p.order();
    match p.last() {
        None => vec![],
        Some(dn) => (0..p.n - 1).filter(|&i| (p.d[i] + dn) % k == 0).collect(),
    }
}

/// `r_n = |I_n| + [d_n = m]`, the dimension of the group of `B`-Galois objects.
pub fn gal_group_dimension(p: &HndParams) -> usize {
    i_n(p).len() + usize::from(p.last() == Some(p.m))
}

/// `C(a; alpha) = span{1, w}`, `w^2 = a`, `g . w = w^{d_n} w`,
/// `x_i . w = alpha_i`, `rho(w) = 1 (x) x + w (x) 1`, over the braided line `b`.
pub fn c_object<F: Field>(
    p: &HndParams,
    b: &BraidedHopf<F>,
    a: &F::Elem,
    alpha: &[F::Elem],
) -> Result<ComoduleAlgebra<F>> {
    let f = b.field();
    if alpha.len() + 1 != p.n {
        return Err(Error::BadParams(format!("alpha must have {} entries", p.n - 1)));
    }
    let allowed = i_n(p);
    if let Some(i) = (0..alpha.len()).find(|i| !f.is_zero(&alpha[*i]) && !allowed.contains(i)) {
        return Err(Error::BadAlpha(i));
    }
    if !f.is_zero(a) && p.last() != Some(p.m) {
        return Err(Error::BadA);
    }
    let carrier = line_carrier(b.cat().hopf(), p, alpha, f)?;
    let a2 = a.clone();
    let alg = FDAlgebra::from_products(f, 2, vec![f.one(), f.zero()], move |x, y| match (x, y) {
        (1, 1) => vec![(0, a2.clone())],
        _ => vec![(x + y, f.one())],
    })?
    .with_basis_names(vec!["1".into(), "w".into()]);
    // rho(1) = 1 (x) 1, rho(w) = 1 (x) x + w (x) 1; index t * 2 + b
    let coaction = Matrix::from_i64_rows(f, &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]]);
    Ok(ComoduleAlgebra {
        algebra: alg,
        carrier,
        coaction,
    })
}

/// `B` itself as a comodule algebra: the trivial Galois object.
pub fn line_as_object<F: Field>(b: &BraidedHopf<F>) -> ComoduleAlgebra<F> {
    crate::modcat::regular_comodule_algebra(b)
}

/// Default prime for `m`: `F_5` for `m = 2`, `F_13` for `m = 1, 3`, otherwise
/// the smallest prime `p = 1 mod 2m`.
pub fn default_prime(m: usize) -> u64 {
    match m {
        1 | 3 => return 13,
        2 => return 5,
        _ => {}
    }
    let k = 2 * m as u64;
    (k + 1..).step_by(k as usize).find(|&p| crate::exact::is_prime(p)).expect("Dirichlet")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{check_qt, is_triangular};
    use crate::exact::{PrimeField, Rationals};
    use crate::hopf::{hopf_morphism_check, verify_hopf};

    #[test]
    fn sweedler_is_a_hopf_algebra() {
        let h = hnd(&HndParams::new(1, 1, vec![1]), &Rationals).unwrap();
        assert_eq!(h.dim(), 4);
        assert!(verify_hopf(&h, None).unwrap().passed());
        // S^2 is conjugation by g: S^2(x) = -x
        let s2 = h.antipode().mul(h.antipode()).unwrap();
        assert_eq!(s2.get(1, 1), &Rationals.from_i64(-1));
    }

    #[test]
    fn two_generator_family_over_f13() {
        let f = PrimeField::new(13).unwrap();
        for d in [vec![3, 3], vec![5, 1]] {
            let h = hnd(&HndParams::new(2, 3, d), &f).unwrap();
            assert_eq!(h.dim(), 24);
            assert!(verify_hopf(&h, None).unwrap().passed());
        }
    }

    #[test]
    fn even_exponent_rejected() {
        let f = PrimeField::new(13).unwrap();
        assert!(matches!(hnd(&HndParams::new(1, 3, vec![2]), &f), Err(Error::BadParams(_))));
    }

    #[test]
    fn congruence_classes() {
        assert_eq!(qt_congruence(&HndParams::new(1, 1, vec![1])), vec![1]);
        assert_eq!(qt_congruence(&HndParams::new(2, 3, vec![3, 3])), vec![1, 3, 5]);
        assert_eq!(qt_congruence(&HndParams::new(2, 3, vec![5, 1])), vec![3]);
    }

    #[test]
    fn r_s_on_z2() {
        let q = Rationals;
        let h = group_hopf(1, &q).unwrap();
        let r0 = r_s(&h, 1, 0).unwrap();
        assert_eq!(r0.element(), &[q.one(), q.zero(), q.zero(), q.zero()]);
        let r1 = r_s(&h, 1, 1).unwrap();
        let half = q.div(&q.one(), &q.from_i64(2)).unwrap();
        assert_eq!(r1.element(), &[half.clone(), half.clone(), half.clone(), q.neg(&half)]);
        assert!(check_qt(&h, &r1).unwrap().passed());
        assert!(is_triangular(&h, &r1));
    }

    #[test]
    fn triangular_only_at_s_equal_m() {
        let f = PrimeField::new(13).unwrap();
        let p = HndParams::new(1, 3, vec![3]);
        let h = hnd(&p, &f).unwrap();
        for s in qt_congruence(&p) {
            let r = r_s(&h, 3, s).unwrap();
            assert!(check_qt(&h, &r).unwrap().passed());
            assert_eq!(is_triangular(&h, &r), s == 3, "s = {s}");
        }
    }

    #[test]
    fn sweedler_from_braided_line() {
        let p = HndParams::new(1, 1, vec![1]);
        let (psi, h, bl) = psi_iso(&p, 1, &Rationals).unwrap();
        assert!(verify_hopf(&bl, None).unwrap().passed());
        assert!(hopf_morphism_check(&psi, &h, &bl).unwrap().passed());
        assert!(psi.inverse().is_ok());
    }

    #[test]
    fn galois_dimensions() {
        for j in 1..=4 {
            assert_eq!(gal_group_dimension(&HndParams::new(j, 1, vec![1; j])), j);
        }
        let p = HndParams::new(2, 3, vec![5, 1]);
        assert_eq!(i_n(&p), vec![0]);
        assert_eq!(gal_group_dimension(&p), 1);
    }

    #[test]
    fn c_object_guards() {
        let f = PrimeField::new(13).unwrap();
        let p = HndParams::new(2, 3, vec![5, 1]);
        let b = braided_line(&p, 3, &f).unwrap();
        assert!(matches!(c_object(&p, &b, &1, &[0]), Err(Error::BadA)));
        assert!(c_object(&p, &b, &0, &[1]).is_ok());
        let q = HndParams::new(2, 3, vec![1, 1]);
        let b = braided_line(&q, 3, &f).unwrap();
        assert!(matches!(c_object(&q, &b, &0, &[1]), Err(Error::BadAlpha(0))));
        let q = HndParams::new(2, 3, vec![3, 3]);
        let b = braided_line(&q, 3, &f).unwrap();
        assert!(c_object(&q, &b, &2, &[5]).is_ok());
    }

    #[test]
    fn default_primes() {
        assert_eq!(default_prime(3), 13);
        assert_eq!(default_prime(2), 5);
    }
}
