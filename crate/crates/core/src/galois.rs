//! Hopf-Galois objects in a braided module category: canonical map,
//! coinvariants, the cotensor group law, opposites, normal bases, cocycle
//! twists, centralizers, the map `A -> (A # H)^A` and its round trip.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braiding::Module;
use crate::diagram::{braid, braid_inv, comult, compile, id, map, mult, unit, Diagram};
use crate::exact::{Field, Matrix, SubspaceBasis};
use crate::families::{omega, HndParams};
use crate::hopf::{compare_maps, opposite_algebra, AxiomReport, AxiomResult, FDAlgebra};
use crate::modcat::{
    dual_smash, smash_product, verify_comodule_algebra, verify_module_algebra, BraidedHopf, ComoduleAlgebra, HComodule,
    ModuleAlgebra,
};
use crate::{Error, Result};

/// Candidate evaluations allowed in the morphism and normal-basis searches.
pub const SEARCH_BUDGET: u64 = 1_000_000;

/// A right `H`-comodule algebra with bijective canonical map and trivial
/// coinvariants.
#[derive(Debug, Clone, PartialEq)]
pub struct GaloisObject<F: Field> {
    object: ComoduleAlgebra<F>,
    can: Matrix<F>,
}

impl<F: Field> GaloisObject<F> {
    pub fn new(h: &BraidedHopf<F>, a: ComoduleAlgebra<F>) -> Result<Self> {
        let rep = check_galois(h, &a)?;
        if !rep.passed() {
            let names: Vec<String> = rep.failures().iter().map(|r| r.name.clone()).collect();
            return Err(Error::NotGalois(names.join(", ")));
        }
        let can = canonical_map(h, &a)?;
        Ok(GaloisObject { object: a, can })
    }

    pub fn object(&self) -> &ComoduleAlgebra<F> {
        &self.object
    }
    pub fn can(&self) -> &Matrix<F> {
        &self.can
    }
    pub fn dim(&self) -> usize {
        self.object.dim()
    }
    pub fn into_object(self) -> ComoduleAlgebra<F> {
        self.object
    }
}

/// `can(a (x) b) = a b0 (x) b1`.
pub fn canonical_map<F: Field>(h: &BraidedHopf<F>, a: &ComoduleAlgebra<F>) -> Result<Matrix<F>> {
    let mut env = h.env(&[("A", &a.carrier)])?;
    env.register_algebra("A", &a.algebra)?;
    env.register_map("rho", a.coaction.clone(), &["A"], &["A", "H"])?;
    Ok(compile(
        &Diagram::new(&["A", "A"])
            .then(vec![id("A"), map("rho")])
            .then(vec![mult("A"), id("H")]),
        &env,
    )?)
}

/// Basis of `ker(rho - id (x) eta)`.
pub fn coinvariants<F: Field>(h: &BraidedHopf<F>, c: &HComodule<F>) -> Result<Vec<Vec<F::Elem>>> {
    let f = h.field();
    let n = c.carrier.dim();
    let eta = Matrix::from_columns(f, h.dim(), &[h.hopf().unit().to_vec()]);
    let triv = Matrix::identity(f, n).kron(&eta)?;
    Ok(c.coaction.sub(&triv)?.kernel())
}

/// Comodule algebra axioms plus the Galois clauses, each reported.
pub fn check_galois<F: Field>(h: &BraidedHopf<F>, a: &ComoduleAlgebra<F>) -> Result<AxiomReport> {
    let mut rep = verify_comodule_algebra(h, a)?;
    rep.push(AxiomResult::from_bool("dim A = dim H", a.dim() == h.dim()));
    let can = canonical_map(h, a)?;
    rep.push(AxiomResult::from_bool(
        "canonical map invertible",
        can.is_square() && can.rank() == can.rows(),
    ));
    let co = coinvariants(h, &a.comodule())?;
    let one_dim = co.len() == 1 && {
        let u = SubspaceBasis::new(h.field(), a.dim(), &co)?;
        u.coordinates(a.algebra.unit()).is_some()
    };
    rep.push(AxiomResult::from_bool("coinvariants spanned by 1", one_dim));
    // faithful flatness holds for every nonzero finite-dimensional space
    rep.push(AxiomResult::from_bool("faithfully flat", a.dim() > 0));
    Ok(rep)
}

pub fn is_galois<F: Field>(h: &BraidedHopf<F>, a: &ComoduleAlgebra<F>) -> Result<bool> {
    Ok(check_galois(h, a)?.passed())
}

/// `lambda = Phi^{-1}_{H,B} rho: B -> H (x) B`.
pub fn left_coaction<F: Field>(h: &BraidedHopf<F>, a: &ComoduleAlgebra<F>) -> Result<Matrix<F>> {
    let mut env = h.env(&[("A", &a.carrier)])?;
    env.register_map("rho", a.coaction.clone(), &["A"], &["A", "H"])?;
    Ok(compile(
        &Diagram::new(&["A"]).then(vec![map("rho")]).then(vec![braid_inv("H", "A")]),
        &env,
    )?)
}

fn coords_in<F: Field>(sub: &SubspaceBasis<F>, v: &[F::Elem], what: &str) -> Result<Vec<F::Elem>> {
    sub.coordinates(v).ok_or_else(|| Error::NotClosed(what.to_string()))
}

/// `L`-module structure restricted to a stable subspace.
pub fn restrict_module<F: Field>(m: &Module<F>, sub: &SubspaceBasis<F>) -> Result<Module<F>> {
    let f = sub.matrix().field().clone();
    let k = sub.dim();
    let mut actions = Vec::with_capacity(m.hopf_dim());
    for act in m.actions() {
        let mut r = Matrix::zeros(&f, k, k);
        for j in 0..k {
            let v = act.apply(&sub.vector(j))?;
            for (i, c) in coords_in(sub, &v, "the L-action")?.into_iter().enumerate() {
                r.set(i, j, c);
            }
        }
        actions.push(r);
    }
    Module::new(k, actions)
}

/// Restriction of an algebra, `H`-coaction and `L`-action on `N` to a
/// subspace; each closure is checked.
pub fn restrict_comodule_algebra<F: Field>(
    h: &BraidedHopf<F>,
    algebra: &FDAlgebra<F>,
    coaction: &Matrix<F>,
    carrier: &Module<F>,
    sub: &SubspaceBasis<F>,
) -> Result<ComoduleAlgebra<F>> {
    let f = h.field();
    let k = sub.dim();
    let hd = h.dim();
    let basis: Vec<Vec<F::Elem>> = (0..k).map(|i| sub.vector(i)).collect();
    let mut m = Matrix::zeros(f, k, k * k);
    for i in 0..k {
        for j in 0..k {
            let v = algebra.mul_vec(&basis[i], &basis[j]);
            for (r, c) in coords_in(sub, &v, "multiplication")?.into_iter().enumerate() {
                m.set(r, i * k + j, c);
            }
        }
    }
    let u = coords_in(sub, algebra.unit(), "the unit")?;
    let n = sub.ambient_dim();
    let mut rho = Matrix::zeros(f, k * hd, k);
    for j in 0..k {
        let v = coaction.apply(&basis[j])?;
        for c in 0..hd {
            let slice: Vec<F::Elem> = (0..n).map(|x| v[x * hd + c].clone()).collect();
            for (r, val) in coords_in(sub, &slice, "the coaction")?.into_iter().enumerate() {
                rho.set(r * hd + c, j, val);
            }
        }
    }
    Ok(ComoduleAlgebra {
        algebra: FDAlgebra::new(m, u)?,
        carrier: restrict_module(carrier, sub)?,
        coaction: rho,
    })
}

/// Kernel of `rho_A (x) B - A (x) lambda_B` inside `A (x) B`, with the
/// braided product `(mu_A (x) mu_B)(A (x) Phi_{B,A} (x) B)` and coaction
/// `A (x) rho_B`. Requires trivial monodromy of `(A, B)`.
pub fn cotensor<F: Field>(h: &BraidedHopf<F>, a: &GaloisObject<F>, b: &GaloisObject<F>) -> Result<GaloisObject<F>> {
    let (ao, bo) = (a.object(), b.object());
    let cat = h.cat();
    if !crate::braiding::monodromy(cat, &ao.carrier, &bo.carrier).is_identity() {
        return Err(Error::MonodromyFails);
    }
    let lam = left_coaction(h, bo)?;
    let mut env = h.env(&[("A", &ao.carrier), ("B", &bo.carrier)])?;
    env.register_algebra("A", &ao.algebra)?;
    env.register_algebra("B", &bo.algebra)?;
    env.register_map("rhoA", ao.coaction.clone(), &["A"], &["A", "H"])?;
    env.register_map("rhoB", bo.coaction.clone(), &["B"], &["B", "H"])?;
    env.register_map("lamB", lam, &["B"], &["H", "B"])?;
    let d1 = compile(&Diagram::new(&["A", "B"]).then(vec![map("rhoA"), id("B")]), &env)?;
    let d2 = compile(&Diagram::new(&["A", "B"]).then(vec![id("A"), map("lamB")]), &env)?;
    let ker = d1.sub(&d2)?.kernel();
    if ker.is_empty() {
        return Err(Error::NotGalois("cotensor product is zero".into()));
    }
    let sub = SubspaceBasis::new(h.field(), ao.dim() * bo.dim(), &ker)?;
    let prod = compile(
        &Diagram::new(&["A", "B", "A", "B"])
            .then(vec![id("A"), braid("B", "A"), id("B")])
            .then(vec![mult("A"), mult("B")]),
        &env,
    )?;
    let u = ao.algebra.unit_matrix().kron(&bo.algebra.unit_matrix())?.column(0);
    let ab = FDAlgebra::new(prod, u)?;
    let rho = compile(&Diagram::new(&["A", "B"]).then(vec![id("A"), map("rhoB")]), &env)?;
    let carrier = cat.tensor(&ao.carrier, &bo.carrier);
    let c = restrict_comodule_algebra(h, &ab, &rho, &carrier, &sub)?;
    GaloisObject::new(h, c)
}

/// Basis of the cotensor product inside `A (x) B` (same kernel as `cotensor`).
pub fn cotensor_inclusion<F: Field>(h: &BraidedHopf<F>, a: &GaloisObject<F>, b: &GaloisObject<F>) -> Result<Matrix<F>> {
    let (ao, bo) = (a.object(), b.object());
    let lam = left_coaction(h, bo)?;
    let mut env = h.env(&[("A", &ao.carrier), ("B", &bo.carrier)])?;
    env.register_map("rhoA", ao.coaction.clone(), &["A"], &["A", "H"])?;
    env.register_map("lamB", lam, &["B"], &["H", "B"])?;
    let d1 = compile(&Diagram::new(&["A", "B"]).then(vec![map("rhoA"), id("B")]), &env)?;
    let d2 = compile(&Diagram::new(&["A", "B"]).then(vec![id("A"), map("lamB")]), &env)?;
    let ker = d1.sub(&d2)?.kernel();
    Ok(Matrix::from_columns(h.field(), ao.dim() * bo.dim(), &ker))
}

/// `A-bar`: multiplication `mu Phi_{A,A}`, coaction `(A (x) S) rho`.
pub fn opposite_galois<F: Field>(h: &BraidedHopf<F>, a: &GaloisObject<F>) -> Result<GaloisObject<F>> {
    let ao = a.object();
    let phi = h.cat().braid(&ao.carrier, &ao.carrier);
    let alg = opposite_algebra(&ao.algebra, &phi)?;
    let coaction = Matrix::identity(h.field(), ao.dim())
        .kron(h.hopf().antipode())?
        .mul(&ao.coaction)?;
    GaloisObject::new(
        h,
        ComoduleAlgebra {
            algebra: alg,
            carrier: ao.carrier.clone(),
            coaction,
        },
    )
}

/// Unital, multiplicative, colinear and `L`-linear.
pub fn verify_comodule_algebra_morphism<F: Field>(
    h: &BraidedHopf<F>,
    f: &Matrix<F>,
    a: &ComoduleAlgebra<F>,
    b: &ComoduleAlgebra<F>,
) -> Result<AxiomReport> {
    let fl = h.field();
    if f.rows() != b.dim() || f.cols() != a.dim() {
        return Err(Error::Shape("morphism has wrong shape".into()));
    }
    let mut rep = AxiomReport::new();
    let fu = f.apply(a.algebra.unit())?;
    rep.push(AxiomResult::from_bool("unital", fu == b.algebra.unit()));
    let lhs = f.mul(a.algebra.mult())?;
    let rhs = b.algebra.mult().mul(&f.kron(f)?)?;
    rep.push(compare_maps("multiplicative", &lhs, &rhs, &[a.dim(), a.dim()]));
    let lhs = b.coaction.mul(f)?;
    let rhs = f.kron(&Matrix::identity(fl, h.dim()))?.mul(&a.coaction)?;
    rep.push(compare_maps("colinear", &lhs, &rhs, &[a.dim()]));
    rep.push(AxiomResult::from_bool("L-linear", a.carrier.is_morphism_to(&b.carrier, f)));
    Ok(rep)
}

/// Outcome of the morphism search.
#[derive(Debug, Clone, PartialEq)]
pub enum MorphismSearch<F: Field> {
    Found(Matrix<F>),
    NoneExists,
    Unknown,
}

/// Affine solution set `p + span(kernel)` of the linear conditions on a
/// map `X -> Y` given as rows over the `dim Y * dim X` entries (row-major).
struct Affine<F: Field> {
    particular: Vec<F::Elem>,
    directions: Vec<Vec<F::Elem>>,
}

fn solve_affine<F: Field>(eqs: &Matrix<F>, rhs: &[F::Elem]) -> Result<Option<Affine<F>>> {
    match eqs.solve(rhs)? {
        None => Ok(None),
        Some(p) => Ok(Some(Affine {
            particular: p,
            directions: eqs.kernel(),
        })),
    }
}

/// Linear conditions for `f: X -> Y` (entry `f[r][c]` is unknown `r * dx + c`):
/// colinearity `rho_Y f = (f (x) H) rho_X` and `L`-linearity.
fn linear_conditions<F: Field>(
    h: &BraidedHopf<F>,
    x_coaction: &Matrix<F>,
    x_carrier: &Module<F>,
    y_coaction: &Matrix<F>,
    y_carrier: &Module<F>,
) -> Vec<Vec<F::Elem>> {
    let fl = h.field();
    let (dx, dy, hd) = (x_carrier.dim(), y_carrier.dim(), h.dim());
    let nv = dx * dy;
    let mut rows = Vec::new();
    // colinear: row (p = r*hd + k, c)
    for r in 0..dy {
        for k in 0..hd {
            for c in 0..dx {
                let mut row = vec![fl.zero(); nv];
                let p = r * hd + k;
                for r2 in 0..dy {
                    let v = y_coaction.get(p, r2);
                    if !fl.is_zero(v) {
                        row[r2 * dx + c] = fl.add(&row[r2 * dx + c], v);
                    }
                }
                for c2 in 0..dx {
                    let v = x_coaction.get(c2 * hd + k, c);
                    if !fl.is_zero(v) {
                        row[r * dx + c2] = fl.sub(&row[r * dx + c2], v);
                    }
                }
                rows.push(row);
            }
        }
    }
    // L-linear: act_Y(l) f = f act_X(l)
    for (ay, ax) in y_carrier.actions().iter().zip(x_carrier.actions()) {
        for r in 0..dy {
            for c in 0..dx {
                let mut row = vec![fl.zero(); nv];
                for r2 in 0..dy {
                    let v = ay.get(r, r2);
                    if !fl.is_zero(v) {
                        row[r2 * dx + c] = fl.add(&row[r2 * dx + c], v);
                    }
                }
                for c2 in 0..dx {
                    let v = ax.get(c2, c);
                    if !fl.is_zero(v) {
                        row[r * dx + c2] = fl.sub(&row[r * dx + c2], v);
                    }
                }
                rows.push(row);
            }
        }
    }
    rows
}

fn point<F: Field>(f: &F, aff: &Affine<F>, coeffs: &[F::Elem]) -> Vec<F::Elem> {
    let mut v = aff.particular.clone();
    for (c, d) in coeffs.iter().zip(&aff.directions) {
        if f.is_zero(c) {
            continue;
        }
        for (x, y) in v.iter_mut().zip(d) {
            *x = f.add(x, &f.mul(c, y));
        }
    }
    v
}

/// Enumerates coefficient vectors over `values^k`: seeded random draws
/// first, then the full grid when it fits in the budget. Returns
/// `(first hit, exhaustive)`.
fn grid_search<F: Field>(
    values: &[F::Elem],
    k: usize,
    seed: u64,
    mut accept: impl FnMut(&[F::Elem]) -> bool,
) -> (Option<Vec<F::Elem>>, bool) {
    let size = (values.len() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_draws = size.min(256).min(SEARCH_BUDGET as u128) as u64;
    for _ in 0..random_draws {
        let c: Vec<F::Elem> = (0..k).map(|_| values[rng.gen_range(0..values.len())].clone()).collect();
        if accept(&c) {
            return (Some(c), false);
        }
    }
    if size > SEARCH_BUDGET as u128 {
        return (None, false);
    }
    let mut idx = vec![0usize; k];
    loop {
        let c: Vec<F::Elem> = idx.iter().map(|&i| values[i].clone()).collect();
        if accept(&c) {
            return (Some(c), true);
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return (None, true);
            }
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Values used per search coordinate: the whole prime field, or the
/// integers `0..2 * degree_bound` over `Q`.
fn search_values<F: Field>(f: &F, degree_bound: usize) -> Vec<F::Elem> {
    match f.elements() {
        Some(e) => e,
        None => (0..2 * degree_bound.max(1) as i64).map(|i| f.from_i64(i)).collect(),
    }
}

fn to_matrix<F: Field>(f: &F, v: &[F::Elem], rows: usize, cols: usize) -> Matrix<F> {
    Matrix::from_fn(f, rows, cols, |r, c| v[r * cols + c].clone())
}

/// Searches for an invertible comodule algebra morphism `A -> B`.
pub fn find_comodule_algebra_morphism<F: Field>(
    h: &BraidedHopf<F>,
    a: &ComoduleAlgebra<F>,
    b: &ComoduleAlgebra<F>,
    seed: u64,
) -> Result<MorphismSearch<F>> {
    let fl = h.field();
    if a.dim() != b.dim() {
        return Ok(MorphismSearch::NoneExists);
    }
    let (dx, dy) = (a.dim(), b.dim());
    let mut rows = linear_conditions(h, &a.coaction, &a.carrier, &b.coaction, &b.carrier);
    let mut rhs = vec![fl.zero(); rows.len()];
    // unital
    for r in 0..dy {
        let mut row = vec![fl.zero(); dx * dy];
        for (c, u) in a.algebra.unit().iter().enumerate() {
            row[r * dx + c] = u.clone();
        }
        rows.push(row);
        rhs.push(b.algebra.unit()[r].clone());
    }
    let eqs = Matrix::from_rows(fl, rows)?;
    let aff = match solve_affine(&eqs, &rhs)? {
        None => return Ok(MorphismSearch::NoneExists),
        Some(aff) => aff,
    };
    let good = |v: &[F::Elem]| -> bool {
        let m = to_matrix(fl, v, dy, dx);
        m.rank() == dx
            && verify_comodule_algebra_morphism(h, &m, a, b)
                .map(|r| r.passed())
                .unwrap_or(false)
    };
    let k = aff.directions.len();
    if k == 0 {
        return Ok(if good(&aff.particular) {
            MorphismSearch::Found(to_matrix(fl, &aff.particular, dy, dx))
        } else {
            MorphismSearch::NoneExists
        });
    }
    let values = search_values(fl, dx);
    let exact_field = fl.elements().is_some();
    let (hit, exhaustive) = grid_search::<F>(&values, k, seed, |c| good(&point(fl, &aff, c)));
    Ok(match hit {
        Some(c) => MorphismSearch::Found(to_matrix(fl, &point(fl, &aff, &c), dy, dx)),
        None if exhaustive && exact_field => MorphismSearch::NoneExists,
        None => MorphismSearch::Unknown,
    })
}

/// An invertible colinear `L`-linear map `H -> T`, if one exists.
///
/// The solution space of the linear conditions is searched over a grid.
/// Over `F_p` the grid is the whole field, so an exhaustive sweep decides
/// existence exactly; over `Q` each coordinate ranges over `2 dim T`
/// integers, more than the degree of the determinant, so a determinant
/// that vanishes on the grid vanishes identically.
pub fn has_normal_basis<F: Field>(h: &BraidedHopf<F>, t: &GaloisObject<F>, seed: u64) -> Result<Option<Matrix<F>>> {
    let fl = h.field();
    let to = t.object();
    let (dx, dy) = (h.dim(), to.dim());
    if dx != dy {
        return Ok(None);
    }
    let rows = linear_conditions(h, h.hopf().comult(), h.carrier(), &to.coaction, &to.carrier);
    let eqs = Matrix::from_rows(fl, rows)?;
    let dirs = eqs.kernel();
    if dirs.is_empty() {
        return Ok(None);
    }
    let aff = Affine {
        particular: vec![fl.zero(); dx * dy],
        directions: dirs,
    };
    let k = aff.directions.len();
    let values = search_values(fl, dx);
    let (hit, exhaustive) = grid_search::<F>(&values, k, seed, |c| {
        to_matrix(fl, &point(fl, &aff, c), dy, dx).rank() == dx
    });
    match hit {
        Some(c) => Ok(Some(to_matrix(fl, &point(fl, &aff, &c), dy, dx))),
        None if exhaustive => Ok(None),
        None => Err(Error::SearchBudgetExceeded(SEARCH_BUDGET)),
    }
}

/// A linear form `sigma: H (x) H -> K` and its convolution inverse.
#[derive(Debug, Clone, PartialEq)]
pub struct CocycleData<F: Field> {
    pub sigma: Matrix<F>,
    pub sigma_inv: Matrix<F>,
}

/// `Delta_{H (x) H} = (H (x) Phi (x) H)(Delta (x) Delta)`.
fn tensor_comult<F: Field>(h: &BraidedHopf<F>) -> Result<Matrix<F>> {
    let env = h.env(&[])?;
    Ok(compile(
        &Diagram::new(&["H", "H"])
            .then(vec![comult("H"), comult("H")])
            .then(vec![id("H"), braid("H", "H"), id("H")]),
        &env,
    )?)
}

impl<F: Field> CocycleData<F> {
    /// `sigma` is `1 x dim^2`; its convolution inverse is solved for.
    pub fn new(h: &BraidedHopf<F>, sigma: Matrix<F>) -> Result<Self> {
        let fl = h.field();
        let n2 = h.dim() * h.dim();
        if sigma.rows() != 1 || sigma.cols() != n2 {
            return Err(Error::Shape("sigma must be 1 x dim^2".into()));
        }
        let d = tensor_comult(h)?;
        // (sigma * tau)(c) = sum_{u,v} sigma[u] tau[v] D[u n2 + v, c]
        let lin = Matrix::from_fn(fl, n2, n2, |c, v| {
            let mut acc = fl.zero();
            for u in 0..n2 {
                let s = sigma.get(0, u);
                if !fl.is_zero(s) {
                    acc = fl.add(&acc, &fl.mul(s, d.get(u * n2 + v, c)));
                }
            }
            acc
        });
        let eps2 = h.hopf().counit().kron(h.hopf().counit())?;
        let tau = lin
            .solve(eps2.row(0))?
            .ok_or_else(|| Error::Verification("sigma has no convolution inverse".into()))?;
        let sigma_inv = Matrix::from_rows(fl, vec![tau])?;
        let data = CocycleData { sigma, sigma_inv };
        if data.convolve(h, &data.sigma_inv, &data.sigma)? != eps2 {
            return Err(Error::Verification("sigma has no two-sided convolution inverse".into()));
        }
        Ok(data)
    }

    fn convolve(&self, h: &BraidedHopf<F>, a: &Matrix<F>, b: &Matrix<F>) -> Result<Matrix<F>> {
        Ok(a.kron(b)?.mul(&tensor_comult(h)?)?)
    }

    /// `sigma = eps (x) eps`.
    pub fn trivial(h: &BraidedHopf<F>) -> Result<Self> {
        Self::new(h, h.hopf().counit().kron(h.hopf().counit())?)
    }
}

/// Cocycle condition `sigma(h1, g1') sigma(h2' g2, f) = sigma(g1, f1') sigma(h, g2' f2)`,
/// normalization, and `L`-linearity of `sigma`.
pub fn check_cocycle<F: Field>(h: &BraidedHopf<F>, sigma: &Matrix<F>) -> Result<AxiomReport> {
    let n = h.dim();
    let mut rep = AxiomReport::new();
    let mut env = h.env(&[])?;
    env.register_map("sigma", sigma.clone(), &["H", "H"], &[])?;
    let lhs = compile(
        &Diagram::new(&["H", "H", "H"])
            .then(vec![comult("H"), comult("H"), id("H")])
            .then(vec![id("H"), braid("H", "H"), id("H"), id("H")])
            .then(vec![map("sigma"), mult("H"), id("H")])
            .then(vec![map("sigma")]),
        &env,
    )?;
    let rhs = compile(
        &Diagram::new(&["H", "H", "H"])
            .then(vec![id("H"), comult("H"), comult("H")])
            .then(vec![id("H"), id("H"), braid("H", "H"), id("H")])
            .then(vec![id("H"), map("sigma"), mult("H")])
            .then(vec![map("sigma")]),
        &env,
    )?;
    rep.push(compare_maps("cocycle condition", &lhs, &rhs, &[n, n, n]));
    let left = compile(&Diagram::new(&["H"]).then(vec![unit("H"), id("H")]).then(vec![map("sigma")]), &env)?;
    let right = compile(&Diagram::new(&["H"]).then(vec![id("H"), unit("H")]).then(vec![map("sigma")]), &env)?;
    let eps = h.hopf().counit().clone();
    rep.push(compare_maps("normalized on the left", &left, &eps, &[n]));
    rep.push(compare_maps("normalized on the right", &right, &eps, &[n]));
    let hh = h.cat().tensor(h.carrier(), h.carrier());
    let k = h.cat().unit_object();
    rep.push(AxiomResult::from_bool("sigma L-linear", hh.is_morphism_to(&k, sigma)));
    Ok(rep)
}

/// `H_sigma`: product `sigma(h1, k1') h2' k2`, unit `sigma^{-1}(1, 1) 1`,
/// coaction `Delta`.
pub fn cocycle_twist<F: Field>(h: &BraidedHopf<F>, sigma: &CocycleData<F>) -> Result<GaloisObject<F>> {
    let rep = check_cocycle(h, &sigma.sigma)?;
    if !rep.passed() {
        let names: Vec<String> = rep.failures().iter().map(|r| r.name.clone()).collect();
        return Err(Error::Verification(format!("not a cocycle: {names:?}")));
    }
    let fl = h.field();
    let mut env = h.env(&[])?;
    env.register_map("sigma", sigma.sigma.clone(), &["H", "H"], &[])?;
    let m = compile(
        &Diagram::new(&["H", "H"])
            .then(vec![comult("H"), comult("H")])
            .then(vec![id("H"), braid("H", "H"), id("H")])
            .then(vec![map("sigma"), mult("H")]),
        &env,
    )?;
    let one = h.hopf().unit();
    let u11 = {
        let e = Matrix::from_columns(fl, h.dim(), &[one.to_vec()]);
        sigma.sigma_inv.mul(&e.kron(&e)?)?.get(0, 0).clone()
    };
    let u: Vec<F::Elem> = one.iter().map(|x| fl.mul(x, &u11)).collect();
    GaloisObject::new(
        h,
        ComoduleAlgebra {
            algebra: FDAlgebra::new(m, u)?,
            carrier: h.carrier().clone(),
            coaction: h.hopf().comult().clone(),
        },
    )
}

/// Kernel of the stacked maps `x -> nu(a (x) x) - mu_M(Phi_{A,M}(a (x) x))`
/// over a basis `a` of `A`; `left: A (x) M -> M`, `right: M (x) A -> M`.
pub fn centralizer<F: Field>(
    f: &F,
    dim_a: usize,
    left: &Matrix<F>,
    right: &Matrix<F>,
    phi_am: &Matrix<F>,
) -> Result<Vec<Vec<F::Elem>>> {
    let dm = left.rows();
    let diff = left.sub(&right.mul(phi_am)?)?;
    let stacked = Matrix::from_fn(f, dim_a * dm, dm, |r, x| {
        let (a, i) = (r / dm, r % dm);
        diff.get(i, a * dm + x).clone()
    });
    Ok(stacked.kernel())
}

/// Both Azumaya maps `A (x) A -> End(A)`:
/// `F(a (x) b)(c) = (a c') b'` with `Phi(b (x) c) = c' (x) b'`, and
/// `G(a (x) b)(c) = b' (c' a)` with `Phi(c (x) b) = b' (x) c'`.
pub fn azumaya_check<F: Field>(a: &FDAlgebra<F>, phi: &Matrix<F>) -> Result<AxiomReport> {
    let fl = a.field();
    let n = a.dim();
    let mut rep = AxiomReport::new();
    rep.push(AxiomResult::from_bool("nonzero", n > 0));
    let mut env = crate::diagram::Env::new(fl);
    env.object("A", n);
    env.register_algebra("A", a)?;
    env.register_braiding("A", "A", phi.clone())?;
    let tf = compile(
        &Diagram::new(&["A", "A", "A"])
            .then(vec![id("A"), braid("A", "A")])
            .then(vec![mult("A"), id("A")])
            .then(vec![mult("A")]),
        &env,
    )?;
    let tg = compile(
        &Diagram::new(&["A", "A", "A"])
            .then(vec![braid("A", "A"), id("A")])
            .then(vec![id("A"), mult("A")])
            .then(vec![mult("A")]),
        &env,
    )?;
    let fm = Matrix::from_fn(fl, n * n, n * n, |row, col| {
        let (i, j) = (row / n, row % n);
        tf.get(i, col * n + j).clone()
    });
    let gm = Matrix::from_fn(fl, n * n, n * n, |row, col| {
        let (i, j) = (row / n, row % n);
        let (x, y) = (col / n, col % n);
        tg.get(i, (j * n + y) * n + x).clone()
    });
    rep.push(AxiomResult::from_bool("F invertible", fm.rank() == n * n));
    rep.push(AxiomResult::from_bool("G invertible", gm.rank() == n * n));
    Ok(rep)
}

/// `(A # H)^A` with its inclusion into `A # H`.
#[derive(Debug, Clone)]
pub struct Upsilon<F: Field> {
    pub object: GaloisObject<F>,
    pub basis: SubspaceBasis<F>,
}

/// `(A # H)^A` as a right `H`-comodule algebra (coaction `A (x) Delta`).
pub fn upsilon<F: Field>(h: &BraidedHopf<F>, a: &ModuleAlgebra<F>) -> Result<Upsilon<F>> {
    let fl = h.field();
    let cat = h.cat();
    let az = azumaya_check(&a.algebra, &cat.braid(&a.carrier, &a.carrier))?;
    if !az.passed() {
        let names: Vec<String> = az.failures().iter().map(|r| r.name.clone()).collect();
        return Err(Error::NotAzumaya(names.join(", ")));
    }
    let ma = verify_module_algebra(h, a)?;
    if !ma.passed() {
        let names: Vec<String> = ma.failures().iter().map(|r| r.name.clone()).collect();
        return Err(Error::Verification(format!("not a module algebra: {names:?}")));
    }
    let (s, s_carrier) = smash_product(h, a)?;
    let (da, hd) = (a.dim(), h.dim());
    let dm = da * hd;
    // a -> a # 1
    let j = Matrix::identity(fl, da).kron(&Matrix::from_columns(fl, hd, &[h.hopf().unit().to_vec()]))?;
    let left = s.mult().mul(&j.kron(&Matrix::identity(fl, dm))?)?;
    let right = s.mult().mul(&Matrix::identity(fl, dm).kron(&j)?)?;
    let phi = cat.braid(&a.carrier, &s_carrier);
    let ker = centralizer(fl, da, &left, &right, &phi)?;
    if ker.is_empty() {
        return Err(Error::NotGalois("centralizer is zero".into()));
    }
    let basis = SubspaceBasis::new(fl, dm, &ker)?;
    let co = Matrix::identity(fl, da).kron(h.hopf().comult())?;
    let obj = restrict_comodule_algebra(h, &s, &co, &s_carrier, &basis)?;
    Ok(Upsilon {
        object: GaloisObject::new(h, obj)?,
        basis,
    })
}

/// Coordinates of the columns of `map: X -> ambient` in a subspace basis.
pub fn corestrict<F: Field>(basis: &SubspaceBasis<F>, map: &Matrix<F>) -> Result<Matrix<F>> {
    let cols = (0..map.cols())
        .map(|c| coords_in(basis, &map.column(c), "the image"))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(map.field(), basis.dim(), &cols))
}

/// `h -> 1 # h`, the comparison map for the trivial action.
pub fn trivial_action_witness<F: Field>(h: &BraidedHopf<F>, a: &ModuleAlgebra<F>) -> Result<Matrix<F>> {
    let fl = h.field();
    Ok(Matrix::from_columns(fl, a.dim(), &[a.algebra.unit().to_vec()]).kron(&Matrix::identity(fl, h.dim()))?)
}

/// `h -> theta(S h1) # h2`, for `theta: H -> A` (e.g. `End(P)`).
pub fn inner_witness<F: Field>(h: &BraidedHopf<F>, theta: &Matrix<F>) -> Result<Matrix<F>> {
    let fl = h.field();
    let ts = theta.mul(h.hopf().antipode())?;
    Ok(ts.kron(&Matrix::identity(fl, h.dim()))?.mul(h.hopf().comult())?)
}

/// `T -> T # H* -> ((T # H*) # H)^{T # H*} -> T` via
/// `gamma = (T (x) eps_{H*} (x) eps_H) j`; true when `gamma` is an
/// invertible comodule algebra morphism.
pub fn gamma_roundtrip<F: Field>(h: &BraidedHopf<F>, t: &GaloisObject<F>) -> Result<bool> {
    Ok(gamma_map(h, t)?.1)
}

/// `gamma` together with the verdict, plus `dim (A # H)^A`.
pub fn gamma_map<F: Field>(h: &BraidedHopf<F>, t: &GaloisObject<F>) -> Result<(Matrix<F>, bool, usize)> {
    let fl = h.field();
    let (hd, ts) = dual_smash(h, t.object())?;
    let up = upsilon(h, &ts)?;
    let eps_dual = hd.hopf().counit();
    let proj = Matrix::identity(fl, t.dim())
        .kron(eps_dual)?
        .kron(h.hopf().counit())?;
    let gamma = proj.mul(up.basis.matrix())?;
    let rep = verify_comodule_algebra_morphism(h, &gamma, up.object.object(), t.object())?;
    let ok = rep.passed() && gamma.is_square() && gamma.rank() == gamma.rows();
    Ok((gamma, ok, up.object.dim()))
}

/// `(a, alpha)` classifying a two-dimensional Galois object over the braided
/// line: `z` solves `rho(z) = 1 (x) x + z (x) 1` with `g . z = w^{d_n} z`,
/// then `z^2 = a 1` and `x_i . z = alpha_i 1`.
pub fn galois_invariant<F: Field>(
    p: &HndParams,
    b: &BraidedHopf<F>,
    t: &GaloisObject<F>,
) -> Result<(F::Elem, Vec<F::Elem>)> {
    let fl = b.field();
    let to = t.object();
    if to.dim() != 2 || b.dim() != 2 {
        return Err(Error::NotClassifiableShape(format!("dimension {}", to.dim())));
    }
    let dn = p.last().ok_or_else(|| Error::BadParams("n must be positive".into()))?;
    let w = omega(fl, p.m)?;
    let ns = 1usize << (p.n - 1);
    let one_t = to.algebra.unit().to_vec();
    // (rho - id (x) eta) z = 1_T (x) x
    let eta = Matrix::from_columns(fl, 2, &[b.hopf().unit().to_vec()]);
    let lhs1 = to.coaction.sub(&Matrix::identity(fl, 2).kron(&eta)?)?;
    let mut rhs1 = vec![fl.zero(); 4];
    for (t_idx, c) in one_t.iter().enumerate() {
        rhs1[t_idx * 2 + 1] = c.clone();
    }
    let g_act = to.carrier.act(ns).sub(&Matrix::identity(fl, 2).scale(&fl.pow(&w, dn as u64)))?;
    let eqs = lhs1.vstack(&g_act)?;
    let mut rhs = rhs1.clone();
    rhs.extend([fl.zero(), fl.zero()]);
    let z = eqs.solve(&rhs)?.ok_or_else(|| {
        Error::NotClassifiableShape(format!(
            "coaction {:?} has no normalized primitive",
            to.coaction.data().iter().map(|x| fl.format(x)).collect::<Vec<_>>()
        ))
    })?;
    let unit_basis = SubspaceBasis::new(fl, 2, &[one_t.clone()])?;
    let z2 = to.algebra.mul_vec(&z, &z);
    let a = unit_basis
        .coordinates(&z2)
        .ok_or_else(|| Error::NotClassifiableShape("z^2 is not a scalar".into()))?[0]
        .clone();
    let mut alpha = Vec::with_capacity(p.n - 1);
    for i in 0..p.n - 1 {
        let v = to.carrier.act(1 << i).apply(&z)?;
        let c = unit_basis
            .coordinates(&v)
            .ok_or_else(|| Error::NotClassifiableShape(format!("x_{} . z is not a scalar", i + 1)))?;
        alpha.push(c[0].clone());
    }
    Ok((a, alpha))
}

/// `H` as a Galois object over itself via `Delta`.
pub fn trivial_object<F: Field>(h: &BraidedHopf<F>) -> Result<GaloisObject<F>> {
    GaloisObject::new(h, crate::modcat::regular_comodule_algebra(h))
}

