//! Modules over an ordinary Hopf algebra, quasi-triangular structures, and
//! the braided category of modules they define.

use std::collections::BTreeMap;

use crate::diagram::Env;
use crate::exact::{Field, Matrix};
use crate::hopf::{compare_maps, is_cocommutative, AxiomReport, AxiomResult, FDAlgebra, FDHopf, Witness};
use crate::{Error, Result};

/// Sparse vector keyed by flat tensor index.
pub type Sparse<E> = BTreeMap<usize, E>;

/// A left module over an ordinary algebra: one action matrix per basis element.
#[derive(Debug, Clone, PartialEq)]
pub struct Module<F: Field> {
    dim: usize,
    actions: Vec<Matrix<F>>,
    cols: Vec<Vec<Vec<(usize, F::Elem)>>>,
}

impl<F: Field> Module<F> {
    pub fn new(dim: usize, actions: Vec<Matrix<F>>) -> Result<Self> {
        if actions.iter().any(|a| a.rows() != dim || a.cols() != dim) {
            return Err(Error::Shape(format!("action matrices must be {dim}x{dim}")));
        }
        let cols = actions.iter().map(Matrix::sparse_columns).collect();
        Ok(Module { dim, actions, cols })
    }

    /// From `nu: H (x) M -> M`, a `dim x (hdim * dim)` matrix.
    pub fn from_action_map(hdim: usize, nu: &Matrix<F>) -> Result<Self> {
        let dim = nu.rows();
        if nu.cols() != hdim * dim {
            return Err(Error::Shape("action map has wrong width".into()));
        }
        let actions = (0..hdim)
            .map(|h| Matrix::from_fn(nu.field(), dim, dim, |i, j| nu.get(i, h * dim + j).clone()))
            .collect();
        Self::new(dim, actions)
    }

    /// Left regular module.
    pub fn regular(a: &FDAlgebra<F>) -> Self {
        let actions = (0..a.dim()).map(|i| a.left_mult(&a.basis_vector(i))).collect();
        Self::new(a.dim(), actions).expect("square actions")
    }

    /// `h . m = eps(h) m` on `K^dim`.
    pub fn trivial(h: &FDHopf<F>, dim: usize) -> Self {
        let f = h.field();
        let actions = (0..h.dim())
            .map(|i| Matrix::identity(f, dim).scale(h.counit().get(0, i)))
            .collect();
        Self::new(dim, actions).expect("square actions")
    }

    /// One-dimensional module where each basis element acts by a scalar.
    pub fn character(field: &F, values: &[F::Elem]) -> Self {
        let actions = values.iter().map(|v| Matrix::scalar(field, v.clone())).collect();
        Self::new(1, actions).expect("1x1 actions")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn hopf_dim(&self) -> usize {
        self.actions.len()
    }
    pub fn act(&self, h: usize) -> &Matrix<F> {
        &self.actions[h]
    }
    pub fn actions(&self) -> &[Matrix<F>] {
        &self.actions
    }

    /// `e_h . e_m` as a sparse column.
    pub fn act_basis(&self, h: usize, m: usize) -> &[(usize, F::Elem)] {
        &self.cols[h][m]
    }

    /// Matrix of the action of an arbitrary element.
    pub fn act_elem(&self, field: &F, h: &[F::Elem]) -> Matrix<F> {
        let mut out = Matrix::zeros(field, self.dim, self.dim);
        for (i, c) in h.iter().enumerate() {
            if !field.is_zero(c) {
                out = out.add(&self.actions[i].scale(c)).expect("same shape");
            }
        }
        out
    }

    /// `nu: H (x) M -> M`.
    pub fn action_map(&self, field: &F) -> Matrix<F> {
        let d = self.dim;
        Matrix::from_fn(field, d, self.hopf_dim() * d, |i, c| self.actions[c / d].get(i, c % d).clone())
    }

    /// Representation axioms over the algebra `a`.
    pub fn verify(&self, a: &FDAlgebra<F>) -> AxiomReport {
        let f = a.field();
        let mut rep = AxiomReport::new();
        if self.hopf_dim() != a.dim() {
            rep.push(AxiomResult::from_bool("action count", false));
            return rep;
        }
        let mut assoc = AxiomResult::ok("action associative");
        'outer: for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.actions[i].mul(&self.actions[j]).expect("square");
                let mut prod = vec![f.zero(); a.dim()];
                for (k, c) in a.basis_product(i, j) {
                    prod[*k] = c.clone();
                }
                let rhs = self.act_elem(f, &prod);
                if lhs != rhs {
                    let r = compare_maps("action associative", &lhs, &rhs, &[self.dim]);
                    let mut w = r.witness.expect("differs");
                    w.index = vec![i, j, w.index[0]];
                    assoc = AxiomResult::failed("action associative", w);
                    break 'outer;
                }
            }
        }
        rep.push(assoc);
        let one = self.act_elem(f, a.unit());
        rep.push(compare_maps("action unital", &one, &Matrix::identity(f, self.dim), &[self.dim]));
        rep
    }

    /// Whether `f: self -> other` commutes with the actions.
    pub fn is_morphism_to(&self, other: &Self, f: &Matrix<F>) -> bool {
        self.hopf_dim() == other.hopf_dim()
            && (0..self.hopf_dim()).all(|h| {
                f.mul(&self.actions[h]).ok() == other.actions[h].mul(f).ok()
            })
    }
}

/// Tensor product module over an ordinary Hopf algebra, via `Delta`.
pub fn tensor_modules<F: Field>(h: &FDHopf<F>, m: &Module<F>, n: &Module<F>) -> Result<Module<F>> {
    if m.hopf_dim() != h.dim() || n.hopf_dim() != h.dim() {
        return Err(Error::HopfMismatch("module over a different algebra".into()));
    }
    let f = h.field();
    let (dm, dn) = (m.dim(), n.dim());
    let actions = (0..h.dim())
        .map(|i| {
            let mut out = Matrix::zeros(f, dm * dn, dm * dn);
            for (k, c) in h.comult_of(i) {
                let (a, b) = (k / h.dim(), k % h.dim());
                for x in 0..dm {
                    for y in 0..dn {
                        for (p, u) in m.act_basis(a, x) {
                            for (q, v) in n.act_basis(b, y) {
                                out.add_at(p * dn + q, x * dn + y, &f.mul(&c, &f.mul(u, v)));
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    Module::new(dm * dn, actions)
}

/// Coordinate dual module, `(h . f)(m) = f(S(h) . m)`.
pub fn dual_module<F: Field>(h: &FDHopf<F>, m: &Module<F>) -> Result<Module<F>> {
    let f = h.field();
    let actions = (0..h.dim())
        .map(|i| m.act_elem(f, &h.antipode().column(i)).transpose())
        .collect();
    Module::new(m.dim(), actions)
}

/// Product in the componentwise algebra `A^{(x) k}`.
pub fn tensor_power_mul<F: Field>(a: &FDAlgebra<F>, k: usize, x: &Sparse<F::Elem>, y: &Sparse<F::Elem>) -> Sparse<F::Elem> {
    let f = a.field();
    let n = a.dim();
    let dims = vec![n; k];
    let mut out: Sparse<F::Elem> = BTreeMap::new();
    for (&i, u) in x {
        let pi = crate::hopf::split_index(i, &dims);
        for (&j, v) in y {
            let pj = crate::hopf::split_index(j, &dims);
            let mut acc = vec![(0usize, f.mul(u, v))];
            for t in 0..k {
                let prod = a.basis_product(pi[t], pj[t]);
                let mut next = Vec::with_capacity(acc.len() * prod.len());
                for (idx, c) in &acc {
                    for (q, w) in prod {
                        next.push((idx * n + q, f.mul(c, w)));
                    }
                }
                acc = next;
            }
            for (idx, c) in acc {
                let e = out.entry(idx).or_insert_with(|| f.zero());
                *e = f.add(e, &c);
            }
        }
    }
    out.retain(|_, c| !f.is_zero(c));
    out
}

/// The unit `1 (x) ... (x) 1` of `A^{(x) k}`.
pub fn tensor_power_unit<F: Field>(a: &FDAlgebra<F>, k: usize) -> Sparse<F::Elem> {
    let f = a.field();
    let mut acc: Vec<(usize, F::Elem)> = vec![(0, f.one())];
    let u: Vec<(usize, F::Elem)> = a
        .unit()
        .iter()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(i, c)| (i, c.clone()))
        .collect();
    for _ in 0..k {
        let mut next = Vec::new();
        for (idx, c) in &acc {
            for (i, w) in &u {
                next.push((idx * a.dim() + i, f.mul(c, w)));
            }
        }
        acc = next;
    }
    collect_sparse(f, acc)
}

fn collect_sparse<F: Field>(f: &F, terms: impl IntoIterator<Item = (usize, F::Elem)>) -> Sparse<F::Elem> {
    let mut out: Sparse<F::Elem> = BTreeMap::new();
    for (i, c) in terms {
        let e = out.entry(i).or_insert_with(|| f.zero());
        *e = f.add(e, &c);
    }
    out.retain(|_, c| !f.is_zero(c));
    out
}

fn sparse_from_dense<F: Field>(f: &F, v: &[F::Elem]) -> Sparse<F::Elem> {
    collect_sparse(f, v.iter().cloned().enumerate())
}

fn format_sparse<F: Field>(f: &F, v: &Sparse<F::Elem>) -> Vec<String> {
    v.iter().map(|(i, c)| format!("{i}:{}", f.format(c))).collect()
}

/// A candidate universal R-matrix `R = sum R1 (x) R2` in `H (x) H`, with its
/// inverse in the algebra `H (x) H`.
#[derive(Debug, Clone, PartialEq)]
pub struct RMatrix<F: Field> {
    n: usize,
    element: Vec<F::Elem>,
    inverse: Vec<F::Elem>,
}

impl<F: Field> RMatrix<F> {
    /// Computes and verifies the inverse; tries `(S (x) id)(R)` first.
    pub fn new(h: &FDHopf<F>, element: Vec<F::Elem>) -> Result<Self> {
        let n = h.dim();
        let f = h.field();
        if element.len() != n * n {
            return Err(Error::Shape(format!("R needs {} coefficients", n * n)));
        }
        let r = sparse_from_dense(f, &element);
        let one = tensor_power_unit(h.algebra(), 2);
        let is_inverse = |c: &Sparse<F::Elem>| {
            tensor_power_mul(h.algebra(), 2, &r, c) == one && tensor_power_mul(h.algebra(), 2, c, &r) == one
        };
        let s_id = h.antipode().kron(&Matrix::identity(f, n))?;
        let candidate = sparse_from_dense(f, &s_id.apply(&element)?);
        let inverse = if is_inverse(&candidate) {
            candidate
        } else {
            let cols: Vec<Vec<F::Elem>> = (0..n * n)
                .map(|u| {
                    let e: Sparse<F::Elem> = [(u, f.one())].into_iter().collect();
                    let p = tensor_power_mul(h.algebra(), 2, &r, &e);
                    let mut v = vec![f.zero(); n * n];
                    for (i, c) in p {
                        v[i] = c;
                    }
                    v
                })
                .collect();
            let left = Matrix::from_columns(f, n * n, &cols);
            let mut rhs = vec![f.zero(); n * n];
            for (i, c) in &one {
                rhs[*i] = c.clone();
            }
            let x = left.solve(&rhs)?.ok_or(Error::RNotInvertible)?;
            let x = sparse_from_dense(f, &x);
            if !is_inverse(&x) {
                return Err(Error::RNotInvertible);
            }
            x
        };
        let mut inv = vec![f.zero(); n * n];
        for (i, c) in inverse {
            inv[i] = c;
        }
        Ok(RMatrix {
            n,
            element,
            inverse: inv,
        })
    }

    /// `R = 1 (x) 1`.
    pub fn trivial(h: &FDHopf<F>) -> Self {
        let f = h.field();
        let one = tensor_power_unit(h.algebra(), 2);
        let mut element = vec![f.zero(); h.dim() * h.dim()];
        for (i, c) in one {
            element[i] = c;
        }
        RMatrix::new(h, element).expect("1 (x) 1 is invertible")
    }

    pub fn dim(&self) -> usize {
        self.n
    }
    pub fn element(&self) -> &[F::Elem] {
        &self.element
    }
    pub fn inverse(&self) -> &[F::Elem] {
        &self.inverse
    }

    /// Nonzero terms `(a, b, c)` of `R = sum c e_a (x) e_b`.
    pub fn terms(&self, f: &F) -> Vec<(usize, usize, F::Elem)> {
        self.element
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(k, c)| (k / self.n, k % self.n, c.clone()))
            .collect()
    }

    /// `R21 = tau(R)`.
    pub fn flipped(&self) -> Vec<F::Elem> {
        let n = self.n;
        (0..n * n).map(|k| self.element[(k % n) * n + k / n].clone()).collect()
    }
}

/// Quasi-triangularity axioms for a candidate element of `H (x) H`.
pub fn check_qt_element<F: Field>(h: &FDHopf<F>, element: &[F::Elem]) -> Result<AxiomReport> {
    let n = h.dim();
    let f = h.field();
    if element.len() != n * n {
        return Err(Error::Shape("R has wrong length".into()));
    }
    let a = h.algebra();
    let mut rep = AxiomReport::new();
    let r = sparse_from_dense(f, element);
    rep.push(AxiomResult::from_bool("R invertible", RMatrix::new(h, element.to_vec()).is_ok()));

    let terms: Vec<(usize, usize, F::Elem)> = r.iter().map(|(k, c)| (k / n, k % n, c.clone())).collect();
    let unit: Vec<(usize, F::Elem)> = sparse_from_dense(f, a.unit()).into_iter().collect();
    let comult: Vec<Vec<(usize, F::Elem)>> = (0..n).map(|i| h.comult_of(i)).collect();
    // R_{13}, R_{23}, R_{12} in H^{(x)3}
    let embed = |pos: (usize, usize)| {
        let mut out = Vec::new();
        for (x, y, c) in &terms {
            for (u, w) in &unit {
                let mut idx = [0usize; 3];
                idx[pos.0] = *x;
                idx[pos.1] = *y;
                let other = 3 - pos.0 - pos.1;
                idx[other] = *u;
                out.push(((idx[0] * n + idx[1]) * n + idx[2], f.mul(c, w)));
            }
        }
        collect_sparse(f, out)
    };
    let (r13, r23, r12) = (embed((0, 2)), embed((1, 2)), embed((0, 1)));
    let mut delta_left = Vec::new();
    let mut delta_right = Vec::new();
    for (x, y, c) in &terms {
        for (k, d) in &comult[*x] {
            delta_left.push((k * n + y, f.mul(c, d)));
        }
        for (k, d) in &comult[*y] {
            delta_right.push((x * n * n + k, f.mul(c, d)));
        }
    }
    let check = |name: &str, lhs: Sparse<F::Elem>, rhs: Sparse<F::Elem>| {
        if lhs == rhs {
            AxiomResult::ok(name)
        } else {
            AxiomResult::failed(
                name,
                Witness {
                    index: vec![],
                    lhs: format_sparse(f, &lhs),
                    rhs: format_sparse(f, &rhs),
                },
            )
        }
    };
    rep.push(check(
        "(Delta (x) id)R = R13 R23",
        collect_sparse(f, delta_left),
        tensor_power_mul(a, 3, &r13, &r23),
    ));
    rep.push(check(
        "(id (x) Delta)R = R13 R12",
        collect_sparse(f, delta_right),
        tensor_power_mul(a, 3, &r13, &r12),
    ));
    let mut inter = AxiomResult::ok("R Delta(h) = Delta^op(h) R");
    for i in 0..n {
        let d = collect_sparse(f, comult[i].iter().cloned());
        let dop = collect_sparse(f, comult[i].iter().map(|(k, c)| ((k % n) * n + k / n, c.clone())));
        let lhs = tensor_power_mul(a, 2, &r, &d);
        let rhs = tensor_power_mul(a, 2, &dop, &r);
        if lhs != rhs {
            inter = AxiomResult::failed(
                "R Delta(h) = Delta^op(h) R",
                Witness {
                    index: vec![i],
                    lhs: format_sparse(f, &lhs),
                    rhs: format_sparse(f, &rhs),
                },
            );
            break;
        }
    }
    rep.push(inter);
    let one = sparse_from_dense(f, a.unit());
    let eps = |i: usize| h.counit().get(0, i).clone();
    let left_counit = collect_sparse(f, terms.iter().map(|(x, y, c)| (*y, f.mul(c, &eps(*x)))));
    let right_counit = collect_sparse(f, terms.iter().map(|(x, y, c)| (*x, f.mul(c, &eps(*y)))));
    rep.push(check("(eps (x) id)R = 1", left_counit, one.clone()));
    rep.push(check("(id (x) eps)R = 1", right_counit, one));
    Ok(rep)
}

pub fn check_qt<F: Field>(h: &FDHopf<F>, r: &RMatrix<F>) -> Result<AxiomReport> {
    check_qt_element(h, r.element())
}

/// `R21 R = 1 (x) 1`.
pub fn is_triangular<F: Field>(h: &FDHopf<F>, r: &RMatrix<F>) -> bool {
    let f = h.field();
    let r21 = sparse_from_dense(f, &r.flipped());
    let rr = sparse_from_dense(f, r.element());
    tensor_power_mul(h.algebra(), 2, &r21, &rr) == tensor_power_unit(h.algebra(), 2)
}

/// `Phi(m (x) n) = R2 . n (x) R1 . m` as a `(dimN dimM) x (dimM dimN)` matrix.
pub fn braiding_matrix<F: Field>(f: &F, r: &RMatrix<F>, m: &Module<F>, n: &Module<F>) -> Matrix<F> {
    let (dm, dn) = (m.dim(), n.dim());
    let mut out = Matrix::zeros(f, dn * dm, dm * dn);
    for (a, b, c) in r.terms(f) {
        for x in 0..dm {
            for y in 0..dn {
                for (p, u) in n.act_basis(b, y) {
                    let cu = f.mul(&c, u);
                    for (q, v) in m.act_basis(a, x) {
                        out.add_at(p * dm + q, x * dn + y, &f.mul(&cu, v));
                    }
                }
            }
        }
    }
    out
}

/// `Phi^{-1}(n (x) m) = R1 . m (x) S^{-1}(R2) . n`, a map `N (x) M -> M (x) N`.
pub fn braiding_inverse_matrix<F: Field>(
    f: &F,
    r: &RMatrix<F>,
    s_inv: &Matrix<F>,
    m: &Module<F>,
    n: &Module<F>,
) -> Matrix<F> {
    let (dm, dn) = (m.dim(), n.dim());
    let mut out = Matrix::zeros(f, dm * dn, dn * dm);
    let s_inv_acts: Vec<Matrix<F>> = (0..r.dim()).map(|b| n.act_elem(f, &s_inv.column(b))).collect();
    for (a, b, c) in r.terms(f) {
        let sb = s_inv_acts[b].sparse_columns();
        for y in 0..dn {
            for x in 0..dm {
                for (q, v) in m.act_basis(a, x) {
                    let cv = f.mul(&c, v);
                    for (p, u) in &sb[y] {
                        out.add_at(q * dn + p, y * dm + x, &f.mul(&cv, u));
                    }
                }
            }
        }
    }
    out
}

/// The braided category of left modules over a quasi-triangular Hopf algebra
/// `(L, R)`. `Category::vect` is the case `L = K`, where the braiding is the flip.
#[derive(Debug, Clone, PartialEq)]
pub struct Category<F: Field> {
    l: FDHopf<F>,
    r: RMatrix<F>,
    s_inv: Matrix<F>,
}

impl<F: Field> Category<F> {
    pub fn vect(field: &F) -> Self {
        let l = FDHopf::ground(field);
        let r = RMatrix::trivial(&l);
        Category {
            s_inv: Matrix::identity(field, 1),
            l,
            r,
        }
    }

    /// Requires `(L, R)` to pass every quasi-triangularity axiom.
    pub fn new(l: FDHopf<F>, r: RMatrix<F>) -> Result<Self> {
        let rep = check_qt(&l, &r)?;
        if !rep.passed() {
            let names: Vec<_> = rep.failures().iter().map(|x| x.name.clone()).collect();
            return Err(Error::Verification(format!("R is not quasi-triangular: {names:?}")));
        }
        let s_inv = l.antipode().inverse().map_err(|_| Error::SNotInvertible)?;
        Ok(Category { l, r, s_inv })
    }

    pub fn field(&self) -> &F {
        self.l.field()
    }
    pub fn hopf(&self) -> &FDHopf<F> {
        &self.l
    }
    pub fn rmatrix(&self) -> &RMatrix<F> {
        &self.r
    }
    pub fn antipode_inverse(&self) -> &Matrix<F> {
        &self.s_inv
    }

    /// Whether this is plain vector spaces.
    pub fn is_vect(&self) -> bool {
        self.l.dim() == 1
    }

    /// An object on which `L` acts through the counit.
    pub fn trivial_object(&self, dim: usize) -> Module<F> {
        Module::trivial(&self.l, dim)
    }

    pub fn unit_object(&self) -> Module<F> {
        self.trivial_object(1)
    }

    pub fn check_object(&self, m: &Module<F>) -> Result<()> {
        let rep = m.verify(self.l.algebra());
        if rep.passed() {
            Ok(())
        } else {
            Err(Error::NotAModule(format!("{:?}", rep.failures()[0])))
        }
    }

    pub fn braid(&self, m: &Module<F>, n: &Module<F>) -> Matrix<F> {
        if self.is_vect() {
            return Matrix::flip(self.field(), m.dim(), n.dim());
        }
        braiding_matrix(self.field(), &self.r, m, n)
    }

    /// `Phi_{M,N}^{-1}: N (x) M -> M (x) N`.
    pub fn braid_inv(&self, m: &Module<F>, n: &Module<F>) -> Matrix<F> {
        if self.is_vect() {
            return Matrix::flip(self.field(), n.dim(), m.dim());
        }
        braiding_inverse_matrix(self.field(), &self.r, &self.s_inv, m, n)
    }

    pub fn tensor(&self, m: &Module<F>, n: &Module<F>) -> Module<F> {
        tensor_modules(&self.l, m, n).expect("objects of this category")
    }

    pub fn dual(&self, m: &Module<F>) -> Module<F> {
        dual_module(&self.l, m).expect("objects of this category")
    }

    /// Inner hom `[M, N]` on `Hom(M, N)`, coordinates `phi[i*dimM + j]` = entry `(i, j)`;
    /// `l . phi = l1 phi S(l2)`.
    pub fn inner_hom(&self, m: &Module<F>, n: &Module<F>) -> Module<F> {
        let f = self.field();
        let (dm, dn) = (m.dim(), n.dim());
        let ld = self.l.dim();
        let actions = (0..ld)
            .map(|l| {
                let mut out = Matrix::zeros(f, dn * dm, dn * dm);
                for (k, c) in self.l.comult_of(l) {
                    let (a, b) = (k / ld, k % ld);
                    let left = n.act(a).scale(&c);
                    let right = m.act_elem(f, &self.l.antipode().column(b));
                    for i in 0..dn {
                        for j in 0..dm {
                            // image of the matrix unit E_ij
                            for p in 0..dn {
                                let lp = left.get(p, i);
                                if f.is_zero(lp) {
                                    continue;
                                }
                                for q in 0..dm {
                                    let rq = right.get(j, q);
                                    if !f.is_zero(rq) {
                                        out.add_at(p * dm + q, i * dm + j, &f.mul(lp, rq));
                                    }
                                }
                            }
                        }
                    }
                }
                out
            })
            .collect();
        Module::new(dn * dm, actions).expect("square actions")
    }

    /// Whether `f: M -> N` is `L`-linear.
    pub fn is_morphism(&self, f: &Matrix<F>, m: &Module<F>, n: &Module<F>) -> bool {
        m.is_morphism_to(n, f)
    }

    /// Environment with the named objects and every braiding between them.
    pub fn env(&self, objects: &[(&str, &Module<F>)]) -> Result<Env<F>> {
        let mut env = Env::new(self.field());
        for (name, m) in objects {
            env.object(name, m.dim());
        }
        for (x, mx) in objects {
            for (y, my) in objects {
                env.register_braiding(x, y, self.braid(mx, my))?;
            }
        }
        Ok(env)
    }
}

/// `Phi_{N,M} Phi_{M,N} = id`.
pub fn check_symmetric_pair<F: Field>(phi_mn: &Matrix<F>, phi_nm: &Matrix<F>) -> bool {
    phi_nm.mul(phi_mn).map(|m| m.is_identity()).unwrap_or(false)
}

/// The monodromy `Phi_{N,M} Phi_{M,N}`.
pub fn monodromy<F: Field>(cat: &Category<F>, m: &Module<F>, n: &Module<F>) -> Matrix<F> {
    cat.braid(n, m).mul(&cat.braid(m, n)).expect("compatible shapes")
}

/// `Delta = Phi_{H,H} Delta`.
pub fn check_cocommutative<F: Field>(h: &FDHopf<F>, phi_hh: &Matrix<F>) -> bool {
    is_cocommutative(h.coalgebra(), Some(phi_hh))
}

/// `Phi_{M,N}` is a morphism of `B`-modules `M (x) N -> N (x) M`.
pub fn check_h_linearity<F: Field>(
    b: &crate::modcat::BraidedHopf<F>,
    m: &crate::modcat::HModule<F>,
    n: &crate::modcat::HModule<F>,
) -> Result<AxiomResult> {
    let phi = b.cat().braid(&m.carrier, &n.carrier);
    check_h_linearity_with(b, m, n, &phi)
}

/// As `check_h_linearity`, for an arbitrary operator `phi: M (x) N -> N (x) M`
/// (the tensor actions still use the category braiding).
pub fn check_h_linearity_with<F: Field>(
    b: &crate::modcat::BraidedHopf<F>,
    m: &crate::modcat::HModule<F>,
    n: &crate::modcat::HModule<F>,
    phi: &Matrix<F>,
) -> Result<AxiomResult> {
    use crate::modcat::tensor_module;
    let mn = tensor_module(b, m, n)?;
    let nm = tensor_module(b, n, m)?;
    let lhs = phi.mul(&mn.action)?;
    let rhs = nm.action.mul(&Matrix::identity(b.field(), b.dim()).kron(phi)?)?;
    Ok(compare_maps(
        "braiding B-linear",
        &lhs,
        &rhs,
        &[b.dim(), m.carrier.dim(), n.carrier.dim()],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rationals;
    use crate::families;

    #[test]
    fn trivial_r_gives_flip() {
        let q = Rationals;
        let h = families::group_hopf(1, &q).unwrap();
        let r = RMatrix::trivial(&h);
        assert!(check_qt(&h, &r).unwrap().passed());
        let reg = Module::regular(h.algebra());
        assert_eq!(braiding_matrix(&q, &r, &reg, &reg), Matrix::flip(&q, 2, 2));
        let k = Module::trivial(&h, 1);
        assert!(braiding_matrix(&q, &r, &k, &k).is_identity());
    }

    #[test]
    fn sign_representation_braids_with_minus_one() {
        let q = Rationals;
        let h = families::group_hopf(1, &q).unwrap();
        let r = families::r_s(&h, 1, 1).unwrap();
        let sign = Module::character(&q, &[q.one(), q.from_i64(-1)]);
        let phi = braiding_matrix(&q, &r, &sign, &sign);
        assert_eq!(phi, Matrix::scalar(&q, q.from_i64(-1)));
    }

    #[test]
    fn r_one_fails_on_h4() {
        let q = Rationals;
        let h4 = families::hnd(&families::HndParams::new(1, 1, vec![1]), &q).unwrap();
        let rep = check_qt(&h4, &RMatrix::trivial(&h4)).unwrap();
        let w = rep.get("R Delta(h) = Delta^op(h) R").unwrap();
        assert!(!w.pass);
        // basis index 1 is x
        assert_eq!(w.witness.as_ref().unwrap().index, vec![1]);
    }

    #[test]
    fn tensor_of_signs_is_trivial() {
        let q = Rationals;
        let h = families::group_hopf(1, &q).unwrap();
        let sign = Module::character(&q, &[q.one(), q.from_i64(-1)]);
        let t = tensor_modules(&h, &sign, &sign).unwrap();
        assert_eq!(t, Module::trivial(&h, 1));
        let reg = Module::regular(h.algebra());
        let rr = tensor_modules(&h, &reg, &reg).unwrap();
        assert_eq!(*rr.act(1), reg.act(1).kron(reg.act(1)).unwrap());
        let k = Module::trivial(&h, 1);
        assert_eq!(tensor_modules(&h, &k, &reg).unwrap(), reg);
    }

    #[test]
    fn inverse_formula_matches() {
        let q = Rationals;
        let h = families::group_hopf(1, &q).unwrap();
        let cat = Category::new(h.clone(), families::r_s(&h, 1, 1).unwrap()).unwrap();
        let reg = Module::regular(h.algebra());
        let sign = Module::character(&q, &[q.one(), q.from_i64(-1)]);
        let phi = cat.braid(&reg, &sign);
        let inv = cat.braid_inv(&reg, &sign);
        assert!(inv.mul(&phi).unwrap().is_identity());
    }

    #[test]
    fn cocommutativity_examples() {
        let q = Rationals;
        let h = families::group_hopf(1, &q).unwrap();
        assert!(check_cocommutative(&h, &Matrix::flip(&q, 2, 2)));
        let h4 = families::hnd(&families::HndParams::new(1, 1, vec![1]), &q).unwrap();
        assert!(!check_cocommutative(&h4, &Matrix::flip(&q, 4, 4)));
        let k = FDHopf::ground(&q);
        assert!(check_cocommutative(&k, &Matrix::identity(&q, 1)));
    }
}
