//! Algebras, coalgebras and Hopf algebras given by structure constants,
//! their axiom checkers, opposites and duals.

use crate::diagram::{
    antipode, comult, compile, counit, coev, ev, id, mult, unit, Block, Diagram, DiagramError, Env,
};
use crate::exact::{ExactError, Field, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// First failing input of an axiom: the basis multi-index and both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub index: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl AxiomResult {
    pub fn ok(name: &str) -> Self {
        AxiomResult {
            name: name.to_string(),
            pass: true,
            witness: None,
        }
    }

    pub fn failed(name: &str, witness: Witness) -> Self {
        AxiomResult {
            name: name.to_string(),
            pass: false,
            witness: Some(witness),
        }
    }

    pub fn from_bool(name: &str, pass: bool) -> Self {
        if pass {
            Self::ok(name)
        } else {
            Self::failed(
                name,
                Witness {
                    index: vec![],
                    lhs: vec![],
                    rhs: vec![],
                },
            )
        }
    }
}

/// Ordered list of axiom outcomes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, r: AxiomResult) {
        self.results.push(r);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.results.extend(other.results);
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> Vec<&AxiomResult> {
        self.results.iter().filter(|r| !r.pass).collect()
    }

    pub fn get(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

/// Splits a flat tensor index into per-factor indices (first factor most significant).
pub fn split_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

/// Compares two matrices column by column; the first differing column is the
/// witness, reported as a multi-index over `in_dims`.
pub fn compare_maps<F: Field>(name: &str, lhs: &Matrix<F>, rhs: &Matrix<F>, in_dims: &[usize]) -> AxiomResult {
    let f = lhs.field();
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return AxiomResult::failed(
            name,
            Witness {
                index: vec![],
                lhs: vec![format!("{}x{}", lhs.rows(), lhs.cols())],
                rhs: vec![format!("{}x{}", rhs.rows(), rhs.cols())],
            },
        );
    }
    for c in 0..lhs.cols() {
        if (0..lhs.rows()).any(|r| lhs.get(r, c) != rhs.get(r, c)) {
            let fmt = |m: &Matrix<F>| m.column(c).iter().map(|x| f.format(x)).collect();
            return AxiomResult::failed(
                name,
                Witness {
                    index: split_index(c, in_dims),
                    lhs: fmt(lhs),
                    rhs: fmt(rhs),
                },
            );
        }
    }
    AxiomResult::ok(name)
}

/// Finite-dimensional algebra: `mult` is `dim x dim^2` with column `i*dim+j`
/// holding `e_i e_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct FDAlgebra<F: Field> {
    dim: usize,
    mult: Matrix<F>,
    unit: Vec<F::Elem>,
    cols: Vec<Vec<(usize, F::Elem)>>,
    basis_names: Option<Vec<String>>,
}

impl<F: Field> FDAlgebra<F> {
    pub fn new(mult: Matrix<F>, unit: Vec<F::Elem>) -> Result<Self, HopfError> {
        let dim = unit.len();
        if mult.rows() != dim || mult.cols() != dim * dim {
            return Err(HopfError::Shape(format!(
                "multiplication is {}x{}, expected {dim}x{}",
                mult.rows(),
                mult.cols(),
                dim * dim
            )));
        }
        let cols = mult.sparse_columns();
        Ok(FDAlgebra {
            dim,
            mult,
            unit,
            cols,
            basis_names: None,
        })
    }

    /// Builds the algebra from a product rule on basis pairs.
    pub fn from_products(
        field: &F,
        dim: usize,
        unit: Vec<F::Elem>,
        mut prod: impl FnMut(usize, usize) -> Vec<(usize, F::Elem)>,
    ) -> Result<Self, HopfError> {
        let mut m = Matrix::zeros(field, dim, dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in prod(i, j) {
                    m.add_at(k, i * dim + j, &c);
                }
            }
        }
        Self::new(m, unit)
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Self {
        self.basis_names = Some(names);
        self
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn field(&self) -> &F {
        self.mult.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn mult(&self) -> &Matrix<F> {
        &self.mult
    }
    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }
    pub fn unit_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.field(), self.dim, &[self.unit.clone()])
    }

    /// `e_i e_j` as a sparse vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.cols[i * self.dim + j]
    }

    pub fn mul_vec(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut out = vec![f.zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in self.basis_product(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&xy, c));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let f = self.field();
        let mut v = vec![f.zero(); self.dim];
        v[i] = f.one();
        v
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult(&self, a: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim).map(|j| self.mul_vec(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field(), self.dim, &cols)
    }

    /// Matrix of right multiplication by `a`.
    pub fn right_mult(&self, a: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim).map(|j| self.mul_vec(&self.basis_vector(j), a)).collect();
        Matrix::from_columns(self.field(), self.dim, &cols)
    }

    /// Componentwise tensor product algebra `A (x) B` with plain flip.
    pub fn tensor(&self, other: &Self) -> Result<Self, HopfError> {
        let f = self.field();
        let (da, db) = (self.dim, other.dim);
        let mut unit = Vec::with_capacity(da * db);
        for x in &self.unit {
            for y in &other.unit {
                unit.push(f.mul(x, y));
            }
        }
        Self::from_products(f, da * db, unit, |p, q| {
            let (a1, b1, a2, b2) = (p / db, p % db, q / db, q % db);
            let mut out = Vec::new();
            for (i, x) in self.basis_product(a1, a2) {
                for (j, y) in other.basis_product(b1, b2) {
                    out.push((i * db + j, f.mul(x, y)));
                }
            }
            out
        })
    }

    /// The matrix algebra `End(K^n)`, basis `E_ij` at index `i*n+j`.
    pub fn matrix_algebra(field: &F, n: usize) -> Self {
        let mut unit = vec![field.zero(); n * n];
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        Self::from_products(field, n * n, unit, |p, q| {
            let (i, j, k, l) = (p / n, p % n, q / n, q % n);
            if j == k {
                vec![(i * n + l, field.one())]
            } else {
                vec![]
            }
        })
        .expect("well-formed matrix algebra")
    }

    /// The one-dimensional algebra `K`.
    pub fn ground(field: &F) -> Self {
        Self::matrix_algebra(field, 1)
    }
}

/// Finite-dimensional coalgebra: `comult` is `dim^2 x dim`, `counit` is `1 x dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct FDCoalgebra<F: Field> {
    dim: usize,
    comult: Matrix<F>,
    counit: Matrix<F>,
}

impl<F: Field> FDCoalgebra<F> {
    pub fn new(comult: Matrix<F>, counit: Matrix<F>) -> Result<Self, HopfError> {
        let dim = counit.cols();
        if counit.rows() != 1 || comult.rows() != dim * dim || comult.cols() != dim {
            return Err(HopfError::Shape(format!(
                "comultiplication {}x{} and counit {}x{} are inconsistent",
                comult.rows(),
                comult.cols(),
                counit.rows(),
                counit.cols()
            )));
        }
        Ok(FDCoalgebra { dim, comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn field(&self) -> &F {
        self.comult.field()
    }
    pub fn comult(&self) -> &Matrix<F> {
        &self.comult
    }
    pub fn counit(&self) -> &Matrix<F> {
        &self.counit
    }
    pub fn counit_of(&self, i: usize) -> &F::Elem {
        self.counit.get(0, i)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FDHopf<F: Field> {
    algebra: FDAlgebra<F>,
    coalgebra: FDCoalgebra<F>,
    antipode: Matrix<F>,
}

impl<F: Field> FDHopf<F> {
    pub fn new(algebra: FDAlgebra<F>, coalgebra: FDCoalgebra<F>, antipode: Matrix<F>) -> Result<Self, HopfError> {
        let n = algebra.dim();
        if coalgebra.dim() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(HopfError::Shape("algebra, coalgebra and antipode dimensions differ".into()));
        }
        if algebra.field() != coalgebra.field() || algebra.field() != antipode.field() {
            return Err(ExactError::FieldMismatch.into());
        }
        Ok(FDHopf {
            algebra,
            coalgebra,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn algebra(&self) -> &FDAlgebra<F> {
        &self.algebra
    }
    pub fn coalgebra(&self) -> &FDCoalgebra<F> {
        &self.coalgebra
    }
    pub fn antipode(&self) -> &Matrix<F> {
        &self.antipode
    }
    pub fn mult(&self) -> &Matrix<F> {
        self.algebra.mult()
    }
    pub fn comult(&self) -> &Matrix<F> {
        self.coalgebra.comult()
    }
    pub fn counit(&self) -> &Matrix<F> {
        self.coalgebra.counit()
    }
    pub fn unit(&self) -> &[F::Elem] {
        self.algebra.unit()
    }

    /// The trivial Hopf algebra `K`.
    pub fn ground(field: &F) -> Self {
        let alg = FDAlgebra::ground(field);
        let co = FDCoalgebra::new(Matrix::identity(field, 1), Matrix::identity(field, 1)).expect("dim 1");
        FDHopf::new(alg, co, Matrix::identity(field, 1)).expect("dim 1")
    }

    /// Group algebra of a finite group given by its multiplication table and inverses.
    pub fn group_algebra(field: &F, table: &[Vec<usize>], inverse: &[usize], identity: usize) -> Result<Self, HopfError> {
        let n = table.len();
        let mut unit = vec![field.zero(); n];
        unit[identity] = field.one();
        let alg = FDAlgebra::from_products(field, n, unit, |i, j| vec![(table[i][j], field.one())])?;
        let comult = Matrix::from_fn(field, n * n, n, |r, c| if r == c * n + c { field.one() } else { field.zero() });
        let counit = Matrix::from_fn(field, 1, n, |_, _| field.one());
        let s = Matrix::from_fn(field, n, n, |r, c| if r == inverse[c] { field.one() } else { field.zero() });
        FDHopf::new(alg, FDCoalgebra::new(comult, counit)?, s)
    }

    /// `Delta(e_i)` as a sparse vector over `H (x) H`.
    pub fn comult_of(&self, i: usize) -> Vec<(usize, F::Elem)> {
        self.comult().column_sparse(i)
    }
}

fn algebra_env<F: Field>(a: &FDAlgebra<F>) -> Result<Env<F>, HopfError> {
    let mut env = Env::new(a.field());
    env.register_algebra("A", a)?;
    Ok(env)
}

/// Associativity and two-sided unit.
pub fn verify_algebra<F: Field>(a: &FDAlgebra<F>) -> Result<AxiomReport, HopfError> {
    let env = algebra_env(a)?;
    let n = a.dim();
    let mut rep = AxiomReport::new();
    let lhs = compile(
        &Diagram::new(&["A", "A", "A"])
            .then(vec![mult("A"), id("A")])
            .then(vec![mult("A")]),
        &env,
    )?;
    let rhs = compile(
        &Diagram::new(&["A", "A", "A"])
            .then(vec![id("A"), mult("A")])
            .then(vec![mult("A")]),
        &env,
    )?;
    rep.push(compare_maps("associativity", &lhs, &rhs, &[n, n, n]));
    let identity = Matrix::identity(a.field(), n);
    let left = compile(
        &Diagram::new(&["A"]).then(vec![unit("A"), id("A")]).then(vec![mult("A")]),
        &env,
    )?;
    rep.push(compare_maps("left unit", &left, &identity, &[n]));
    let right = compile(
        &Diagram::new(&["A"]).then(vec![id("A"), unit("A")]).then(vec![mult("A")]),
        &env,
    )?;
    rep.push(compare_maps("right unit", &right, &identity, &[n]));
    Ok(rep)
}

/// Coassociativity and two-sided counit.
pub fn verify_coalgebra<F: Field>(c: &FDCoalgebra<F>) -> Result<AxiomReport, HopfError> {
    let mut env = Env::new(c.field());
    env.register_coalgebra("C", c)?;
    let n = c.dim();
    let mut rep = AxiomReport::new();
    let lhs = compile(
        &Diagram::new(&["C"])
            .then(vec![comult("C")])
            .then(vec![comult("C"), id("C")]),
        &env,
    )?;
    let rhs = compile(
        &Diagram::new(&["C"])
            .then(vec![comult("C")])
            .then(vec![id("C"), comult("C")]),
        &env,
    )?;
    rep.push(compare_maps("coassociativity", &lhs, &rhs, &[n]));
    let identity = Matrix::identity(c.field(), n);
    let left = compile(
        &Diagram::new(&["C"]).then(vec![comult("C")]).then(vec![counit("C"), id("C")]),
        &env,
    )?;
    rep.push(compare_maps("left counit", &left, &identity, &[n]));
    let right = compile(
        &Diagram::new(&["C"]).then(vec![comult("C")]).then(vec![id("C"), counit("C")]),
        &env,
    )?;
    rep.push(compare_maps("right counit", &right, &identity, &[n]));
    Ok(rep)
}

/// Environment holding `H` and the middle crossing `H (x) H -> H (x) H`
/// (the plain flip when `middle` is `None`).
fn hopf_env<F: Field>(h: &FDHopf<F>, middle: Option<&Matrix<F>>) -> Result<Env<F>, HopfError> {
    let mut env = Env::new(h.field());
    env.register_hopf("H", h)?;
    let phi = match middle {
        Some(m) => m.clone(),
        None => Matrix::flip(h.field(), h.dim(), h.dim()),
    };
    env.register_braiding("H", "H", phi)?;
    Ok(env)
}

/// All bialgebra and antipode axioms. The crossing in `Delta(ab) = Delta(a)Delta(b)`
/// is `middle` (the plain flip for ordinary Hopf algebras).
pub fn verify_hopf<F: Field>(h: &FDHopf<F>, middle: Option<&Matrix<F>>) -> Result<AxiomReport, HopfError> {
    let n = h.dim();
    let f = h.field();
    let mut rep = verify_algebra(h.algebra())?;
    rep.extend(verify_coalgebra(h.coalgebra())?);
    let env = hopf_env(h, middle)?;
    let lhs = compile(&Diagram::new(&["H", "H"]).then(vec![mult("H")]).then(vec![comult("H")]), &env)?;
    let rhs = compile(
        &Diagram::new(&["H", "H"])
            .then(vec![comult("H"), comult("H")])
            .then(vec![id("H"), Block::Braid("H".into(), "H".into()), id("H")])
            .then(vec![mult("H"), mult("H")]),
        &env,
    )?;
    rep.push(compare_maps("comultiplication multiplicative", &lhs, &rhs, &[n, n]));
    let du = compile(&Diagram::new(&[]).then(vec![unit("H")]).then(vec![comult("H")]), &env)?;
    let uu = compile(&Diagram::new(&[]).then(vec![unit("H"), unit("H")]), &env)?;
    rep.push(compare_maps("comultiplication unital", &du, &uu, &[]));
    let em = compile(&Diagram::new(&["H", "H"]).then(vec![mult("H")]).then(vec![counit("H")]), &env)?;
    let ee = compile(&Diagram::new(&["H", "H"]).then(vec![counit("H"), counit("H")]), &env)?;
    rep.push(compare_maps("counit multiplicative", &em, &ee, &[n, n]));
    let eu = compile(&Diagram::new(&[]).then(vec![unit("H")]).then(vec![counit("H")]), &env)?;
    rep.push(compare_maps("counit unital", &eu, &Matrix::identity(f, 1), &[]));
    let ue = compile(&Diagram::new(&["H"]).then(vec![counit("H")]).then(vec![unit("H")]), &env)?;
    let s_left = compile(
        &Diagram::new(&["H"])
            .then(vec![comult("H")])
            .then(vec![antipode("H"), id("H")])
            .then(vec![mult("H")]),
        &env,
    )?;
    rep.push(compare_maps("antipode left", &s_left, &ue, &[n]));
    let s_right = compile(
        &Diagram::new(&["H"])
            .then(vec![comult("H")])
            .then(vec![id("H"), antipode("H")])
            .then(vec![mult("H")]),
        &env,
    )?;
    rep.push(compare_maps("antipode right", &s_right, &ue, &[n]));
    Ok(rep)
}

/// `mu = mu * Phi` for the given crossing (plain flip when `None`).
pub fn is_commutative<F: Field>(a: &FDAlgebra<F>, phi: Option<&Matrix<F>>) -> bool {
    let flip = Matrix::flip(a.field(), a.dim(), a.dim());
    let phi = phi.unwrap_or(&flip);
    a.mult().mul(phi).map(|m| &m == a.mult()).unwrap_or(false)
}

/// `Delta = Phi * Delta` for the given crossing (plain flip when `None`).
pub fn is_cocommutative<F: Field>(c: &FDCoalgebra<F>, phi: Option<&Matrix<F>>) -> bool {
    let flip = Matrix::flip(c.field(), c.dim(), c.dim());
    let phi = phi.unwrap_or(&flip);
    phi.mul(c.comult()).map(|m| &m == c.comult()).unwrap_or(false)
}

/// Opposite algebra with multiplication `mu * Phi_{A,A}`.
pub fn opposite_algebra<F: Field>(a: &FDAlgebra<F>, phi: &Matrix<F>) -> Result<FDAlgebra<F>, HopfError> {
    let n = a.dim();
    if phi.rows() != n * n || phi.cols() != n * n {
        return Err(HopfError::Shape("crossing must be dim^2 x dim^2".into()));
    }
    phi.inverse()?;
    FDAlgebra::new(a.mult().mul(phi)?, a.unit().to_vec())
}

/// Dual Hopf algebra on the coordinate dual basis. `phi` is the crossing
/// `H* (x) H -> H (x) H*` (plain flip when `None`). Multiplication is
/// `<fg, h> = f(h1') g'(h2)` with `Phi(g (x) h1) = h1' (x) g'`, and the
/// comultiplication is determined by `<f1, h'> <f2', k> = f(hk)` with
/// `Phi(f2 (x) h) = h' (x) f2'`.
pub fn dual_hopf<F: Field>(h: &FDHopf<F>, phi: Option<&Matrix<F>>) -> Result<FDHopf<F>, HopfError> {
    let n = h.dim();
    let fld = h.field();
    let mut env = Env::new(fld);
    env.register_hopf("H", h)?;
    let phi = match phi {
        Some(m) => m.clone(),
        None => Matrix::flip(fld, n, n),
    };
    env.register_braiding("H*", "H", phi)?;
    // <fg, h> as a functional on H* (x) H* (x) H, then curried through Coev.
    let mult_d = compile(
        &Diagram::new(&["H*", "H*"])
            .then(vec![id("H*"), id("H*"), coev("H")])
            .then(vec![id("H*"), id("H*"), comult("H"), id("H*")])
            .then(vec![id("H*"), Block::Braid("H*".into(), "H".into()), id("H"), id("H*")])
            .then(vec![ev("H"), ev("H"), id("H*")]),
        &env,
    )?;
    let pairing = compile(
        &Diagram::new(&["H*", "H*", "H", "H"])
            .then(vec![id("H*"), Block::Braid("H*".into(), "H".into()), id("H")])
            .then(vec![ev("H"), ev("H")]),
        &env,
    )?;
    let p = Matrix::from_fn(fld, n * n, n * n, |uv, hk| pairing.get(0, uv * n * n + hk).clone());
    let comult_d = p.transpose().inverse()?.mul(&h.mult().transpose())?;
    let unit_d: Vec<F::Elem> = (0..n).map(|i| h.counit().get(0, i).clone()).collect();
    let counit_d = Matrix::from_fn(fld, 1, n, |_, i| h.unit()[i].clone());
    let alg = FDAlgebra::new(mult_d, unit_d)?;
    let co = FDCoalgebra::new(comult_d, counit_d)?;
    FDHopf::new(alg, co, h.antipode().transpose())
}

/// Hopf algebra morphism axioms for `f: H1 -> H2` (`dim H2 x dim H1`).
pub fn hopf_morphism_check<F: Field>(f: &Matrix<F>, h1: &FDHopf<F>, h2: &FDHopf<F>) -> Result<AxiomReport, HopfError> {
    let (n1, n2) = (h1.dim(), h2.dim());
    if f.rows() != n2 || f.cols() != n1 {
        return Err(HopfError::Shape(format!("map is {}x{}, expected {n2}x{n1}", f.rows(), f.cols())));
    }
    let ff = f.kron(f)?;
    let mut rep = AxiomReport::new();
    rep.push(compare_maps(
        "multiplicative",
        &f.mul(h1.mult())?,
        &h2.mult().mul(&ff)?,
        &[n1, n1],
    ));
    let u1 = h1.algebra().unit_matrix();
    rep.push(compare_maps("unital", &f.mul(&u1)?, &h2.algebra().unit_matrix(), &[]));
    rep.push(compare_maps(
        "comultiplicative",
        &ff.mul(h1.comult())?,
        &h2.comult().mul(f)?,
        &[n1],
    ));
    rep.push(compare_maps("counital", &h2.counit().mul(f)?, h1.counit(), &[n1]));
    rep.push(compare_maps(
        "commutes with antipode",
        &f.mul(h1.antipode())?,
        &h2.antipode().mul(f)?,
        &[n1],
    ));
    Ok(rep)
}

/// Whether `f` is a Hopf isomorphism (morphism axioms and invertible).
pub fn is_hopf_isomorphism<F: Field>(f: &Matrix<F>, h1: &FDHopf<F>, h2: &FDHopf<F>) -> Result<bool, HopfError> {
    Ok(hopf_morphism_check(f, h1, h2)?.passed() && f.is_square() && f.inverse().is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PrimeField, Rationals};

    fn z2(f: &Rationals) -> FDHopf<Rationals> {
        FDHopf::group_algebra(f, &[vec![0, 1], vec![1, 0]], &[0, 1], 0).unwrap()
    }

    fn cyclic(f: &PrimeField, n: usize) -> FDHopf<PrimeField> {
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let inv: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        FDHopf::group_algebra(f, &table, &inv, 0).unwrap()
    }

    #[test]
    fn group_algebras_pass() {
        let q = Rationals;
        assert!(verify_hopf(&z2(&q), None).unwrap().passed());
        let f = PrimeField::new(13).unwrap();
        assert!(verify_hopf(&cyclic(&f, 6), None).unwrap().passed());
    }

    #[test]
    fn corrupted_multiplication_reports_failures() {
        let q = Rationals;
        let h = z2(&q);
        let mut m = h.mult().clone();
        // g*g = g instead of 1
        m.set(0, 3, q.zero());
        m.set(1, 3, q.one());
        let a = FDAlgebra::new(m, h.unit().to_vec()).unwrap();
        let rep = verify_algebra(&a).unwrap();
        assert!(rep.get("associativity").unwrap().pass);
        assert!(rep.get("left unit").unwrap().pass);
        let h2 = FDHopf::new(a, h.coalgebra().clone(), h.antipode().clone()).unwrap();
        let rep = verify_hopf(&h2, None).unwrap();
        let anti = rep.get("antipode left").unwrap();
        assert!(!anti.pass);
        assert_eq!(anti.witness.as_ref().unwrap().index, vec![1]);
    }

    #[test]
    fn dual_of_group_algebra() {
        let q = Rationals;
        let h = z2(&q);
        let d = dual_hopf(&h, None).unwrap();
        assert!(verify_hopf(&d, None).unwrap().passed());
        assert!(is_commutative(d.algebra(), None));
        assert!(is_cocommutative(d.coalgebra(), None));
        let dd = dual_hopf(&d, None).unwrap();
        let id2 = Matrix::identity(&q, 2);
        assert!(is_hopf_isomorphism(&id2, &h, &dd).unwrap());
    }

    #[test]
    fn cyclic_group_is_self_dual() {
        let f = PrimeField::new(13).unwrap();
        let h = cyclic(&f, 6);
        let d = dual_hopf(&h, None).unwrap();
        assert!(verify_hopf(&d, None).unwrap().passed());
        let w = f.root_of_unity(6).unwrap();
        // g^j -> sum_t w^{jt} e_t*
        let fourier = Matrix::from_fn(&f, 6, 6, |t, j| f.pow(&w, (j * t) as u64));
        assert!(fourier.inverse().is_ok());
        assert!(is_hopf_isomorphism(&fourier, &h, &d).unwrap());
    }

    #[test]
    fn opposite_of_commutative_is_same() {
        let q = Rationals;
        let h = z2(&q);
        let flip = Matrix::flip(&q, 2, 2);
        assert_eq!(opposite_algebra(h.algebra(), &flip).unwrap(), *h.algebra());
        let k = FDAlgebra::ground(&q);
        assert_eq!(opposite_algebra(&k, &Matrix::identity(&q, 1)).unwrap(), k);
    }

    #[test]
    fn counit_is_morphism_to_ground() {
        let q = Rationals;
        let h = z2(&q);
        let k = FDHopf::ground(&q);
        assert!(hopf_morphism_check(h.counit(), &h, &k).unwrap().passed());
        assert!(hopf_morphism_check(&Matrix::identity(&q, 2), &h, &h).unwrap().passed());
    }

    #[test]
    fn matrix_algebra_passes() {
        let q = Rationals;
        for n in 1..=3 {
            assert!(verify_algebra(&FDAlgebra::matrix_algebra(&q, n)).unwrap().passed());
        }
    }
}
