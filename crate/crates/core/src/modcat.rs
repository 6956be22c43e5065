//! Hopf algebras, modules, comodules and their products inside a braided
//! category of modules `C = L-mod`.
//!
//! Every structure carries its underlying object of `C` (an `L`-module, the
//! "carrier"); ordinary Hopf algebras live in `Category::vect`. Basis order
//! of product carriers is left factor major: `(a_i (x) h_j) -> i * dim H + j`.

use std::sync::Arc;

use crate::braiding::{Category, Module};
use crate::diagram::{
    antipode, braid, braid_inv, coev, comult, compile, counit, custom, ev, flip, id, map, mult, unit, Diagram, Env,
};
use crate::exact::{Field, Matrix};
use crate::hopf::{
    compare_maps, dual_hopf, verify_algebra, verify_hopf, AxiomReport, AxiomResult, FDAlgebra, FDCoalgebra, FDHopf,
    Witness,
};
use crate::{Error, Result};

/// Hopf algebra in a braided module category.
#[derive(Debug, Clone)]
pub struct BraidedHopf<F: Field> {
    cat: Arc<Category<F>>,
    hopf: FDHopf<F>,
    carrier: Module<F>,
}

/// Whether `f: X -> Y` commutes with the `L`-actions.
fn is_linear<F: Field>(f: &Matrix<F>, x: &Module<F>, y: &Module<F>) -> bool {
    x.is_morphism_to(y, f)
}

/// `L`-linearity of the structure maps of an algebra in `C`.
pub fn algebra_linearity<F: Field>(cat: &Category<F>, a: &FDAlgebra<F>, carrier: &Module<F>) -> AxiomReport {
    let mut rep = AxiomReport::new();
    let aa = cat.tensor(carrier, carrier);
    rep.push(AxiomResult::from_bool(
        "multiplication L-linear",
        is_linear(a.mult(), &aa, carrier),
    ));
    rep.push(AxiomResult::from_bool(
        "unit L-linear",
        is_linear(&a.unit_matrix(), &cat.unit_object(), carrier),
    ));
    rep
}

impl<F: Field> BraidedHopf<F> {
    /// Checks `L`-linearity of all structure maps and the Hopf axioms with
    /// middle crossing `Phi_{H,H}`.
    pub fn new(cat: Arc<Category<F>>, hopf: FDHopf<F>, carrier: Module<F>) -> Result<Self> {
        let b = Self::from_parts(cat, hopf, carrier)?;
        let rep = b.verify()?;
        if !rep.passed() {
            let names: Vec<String> = rep.failures().iter().map(|r| r.name.clone()).collect();
            return Err(Error::Verification(format!("braided Hopf axioms failed: {names:?}")));
        }
        Ok(b)
    }

    /// No axiom checks beyond shapes.
    pub fn from_parts(cat: Arc<Category<F>>, hopf: FDHopf<F>, carrier: Module<F>) -> Result<Self> {
        if carrier.dim() != hopf.dim() || carrier.hopf_dim() != cat.hopf().dim() {
            return Err(Error::Shape("carrier does not match the Hopf algebra or the category".into()));
        }
        Ok(BraidedHopf { cat, hopf, carrier })
    }

    /// An ordinary Hopf algebra, viewed in plain vector spaces.
    pub fn ordinary(hopf: FDHopf<F>) -> Self {
        let cat = Arc::new(Category::vect(hopf.field()));
        let carrier = cat.trivial_object(hopf.dim());
        BraidedHopf { cat, hopf, carrier }
    }

    pub fn verify(&self) -> Result<AxiomReport> {
        let cat = &self.cat;
        let mut rep = AxiomReport::new();
        let obj = cat.check_object(&self.carrier);
        rep.push(AxiomResult::from_bool("carrier is an L-module", obj.is_ok()));
        if obj.is_err() {
            return Ok(rep);
        }
        rep.extend(algebra_linearity(cat, self.hopf.algebra(), &self.carrier));
        let hh = cat.tensor(&self.carrier, &self.carrier);
        let k = cat.unit_object();
        rep.push(AxiomResult::from_bool(
            "comultiplication L-linear",
            is_linear(self.hopf.comult(), &self.carrier, &hh),
        ));
        rep.push(AxiomResult::from_bool(
            "counit L-linear",
            is_linear(self.hopf.counit(), &self.carrier, &k),
        ));
        rep.push(AxiomResult::from_bool(
            "antipode L-linear",
            is_linear(self.hopf.antipode(), &self.carrier, &self.carrier),
        ));
        rep.extend(verify_hopf(&self.hopf, Some(&self.phi()))?);
        Ok(rep)
    }

    pub fn cat(&self) -> &Arc<Category<F>> {
        &self.cat
    }
    pub fn hopf(&self) -> &FDHopf<F> {
        &self.hopf
    }
    pub fn carrier(&self) -> &Module<F> {
        &self.carrier
    }
    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }
    pub fn field(&self) -> &F {
        self.hopf.field()
    }

    /// `Phi_{H,H}`.
    pub fn phi(&self) -> Matrix<F> {
        self.cat.braid(&self.carrier, &self.carrier)
    }

    /// Dual Hopf algebra `H* = [H, I]` in the same category.
    pub fn dual(&self) -> Result<Self> {
        let dc = self.cat.dual(&self.carrier);
        let phi = self.cat.braid(&dc, &self.carrier);
        let d = dual_hopf(&self.hopf, Some(&phi))?;
        Self::new(self.cat.clone(), d, dc)
    }

    /// Environment with `H` registered (structure maps, `H*`, braidings among
    /// `H`, `H*` and the extra objects).
    pub fn env(&self, extra: &[(&str, &Module<F>)]) -> Result<Env<F>> {
        let dc = self.cat.dual(&self.carrier);
        let mut objs: Vec<(&str, &Module<F>)> = vec![("H", &self.carrier), ("H*", &dc)];
        objs.extend_from_slice(extra);
        let mut env = self.cat.env(&objs)?;
        env.register_hopf("H", &self.hopf)?;
        Ok(env)
    }
}

/// Left module over a braided Hopf algebra: `action: H (x) M -> M`.
#[derive(Debug, Clone, PartialEq)]
pub struct HModule<F: Field> {
    pub carrier: Module<F>,
    pub action: Matrix<F>,
}

/// Right comodule: `coaction: M -> M (x) H`.
#[derive(Debug, Clone, PartialEq)]
pub struct HComodule<F: Field> {
    pub carrier: Module<F>,
    pub coaction: Matrix<F>,
}

/// Algebra in `C` with an `H`-action.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleAlgebra<F: Field> {
    pub algebra: FDAlgebra<F>,
    pub carrier: Module<F>,
    pub action: Matrix<F>,
}

/// Algebra in `C` with a right `H`-coaction.
#[derive(Debug, Clone, PartialEq)]
pub struct ComoduleAlgebra<F: Field> {
    pub algebra: FDAlgebra<F>,
    pub carrier: Module<F>,
    pub coaction: Matrix<F>,
}

impl<F: Field> ModuleAlgebra<F> {
    pub fn module(&self) -> HModule<F> {
        HModule {
            carrier: self.carrier.clone(),
            action: self.action.clone(),
        }
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

impl<F: Field> ComoduleAlgebra<F> {
    pub fn comodule(&self) -> HComodule<F> {
        HComodule {
            carrier: self.carrier.clone(),
            coaction: self.coaction.clone(),
        }
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// `H`-module axioms, including `L`-linearity of the action.
pub fn verify_module<F: Field>(h: &BraidedHopf<F>, m: &HModule<F>) -> Result<AxiomReport> {
    let n = m.carrier.dim();
    if m.action.rows() != n || m.action.cols() != h.dim() * n {
        return Err(Error::Shape("action has wrong shape".into()));
    }
    let cat = h.cat();
    let mut rep = AxiomReport::new();
    let hm = cat.tensor(h.carrier(), &m.carrier);
    rep.push(AxiomResult::from_bool("action L-linear", is_linear(&m.action, &hm, &m.carrier)));
    let mut env = h.env(&[("M", &m.carrier)])?;
    env.register_map("act", m.action.clone(), &["H", "M"], &["M"])?;
    let lhs = compile(&Diagram::new(&["H", "H", "M"]).then(vec![mult("H"), id("M")]).then(vec![map("act")]), &env)?;
    let rhs = compile(
        &Diagram::new(&["H", "H", "M"])
            .then(vec![id("H"), map("act")])
            .then(vec![map("act")]),
        &env,
    )?;
    rep.push(compare_maps("action associative", &lhs, &rhs, &[h.dim(), h.dim(), n]));
    let u = compile(&Diagram::new(&["M"]).then(vec![unit("H"), id("M")]).then(vec![map("act")]), &env)?;
    rep.push(compare_maps("action unital", &u, &Matrix::identity(h.field(), n), &[n]));
    Ok(rep)
}

/// Comodule axioms, including `L`-linearity of the coaction.
pub fn verify_comodule<F: Field>(h: &BraidedHopf<F>, c: &HComodule<F>) -> Result<AxiomReport> {
    let n = c.carrier.dim();
    if c.coaction.cols() != n || c.coaction.rows() != h.dim() * n {
        return Err(Error::Shape("coaction has wrong shape".into()));
    }
    let cat = h.cat();
    let mut rep = AxiomReport::new();
    let mh = cat.tensor(&c.carrier, h.carrier());
    rep.push(AxiomResult::from_bool("coaction L-linear", is_linear(&c.coaction, &c.carrier, &mh)));
    let mut env = h.env(&[("M", &c.carrier)])?;
    env.register_map("rho", c.coaction.clone(), &["M"], &["M", "H"])?;
    let lhs = compile(&Diagram::new(&["M"]).then(vec![map("rho")]).then(vec![map("rho"), id("H")]), &env)?;
    let rhs = compile(&Diagram::new(&["M"]).then(vec![map("rho")]).then(vec![id("M"), comult("H")]), &env)?;
    rep.push(compare_maps("coaction coassociative", &lhs, &rhs, &[n]));
    let e = compile(&Diagram::new(&["M"]).then(vec![map("rho")]).then(vec![id("M"), counit("H")]), &env)?;
    rep.push(compare_maps("coaction counital", &e, &Matrix::identity(h.field(), n), &[n]));
    Ok(rep)
}

/// `h . (m (x) n) = h1 . m' (x) h2' . n` with `Phi(h2 (x) m) = m' (x) h2'`.
pub fn tensor_module<F: Field>(h: &BraidedHopf<F>, m: &HModule<F>, n: &HModule<F>) -> Result<HModule<F>> {
    let mut env = h.env(&[("M", &m.carrier), ("N", &n.carrier)])?;
    env.register_map("actM", m.action.clone(), &["H", "M"], &["M"])?;
    env.register_map("actN", n.action.clone(), &["H", "N"], &["N"])?;
    let action = compile(
        &Diagram::new(&["H", "M", "N"])
            .then(vec![comult("H"), id("M"), id("N")])
            .then(vec![id("H"), braid("H", "M"), id("N")])
            .then(vec![map("actM"), map("actN")]),
        &env,
    )?;
    Ok(HModule {
        carrier: h.cat().tensor(&m.carrier, &n.carrier),
        action,
    })
}

/// Algebra axioms, `L`-linearity, module axioms and
/// `h . (ab) = (h1 . a')(h2' . b)`, `h . 1 = eps(h) 1`.
pub fn verify_module_algebra<F: Field>(h: &BraidedHopf<F>, a: &ModuleAlgebra<F>) -> Result<AxiomReport> {
    let n = a.dim();
    let mut rep = verify_algebra(&a.algebra)?;
    rep.extend(algebra_linearity(h.cat(), &a.algebra, &a.carrier));
    rep.extend(verify_module(h, &a.module())?);
    let mut env = h.env(&[("A", &a.carrier)])?;
    env.register_algebra("A", &a.algebra)?;
    env.register_map("act", a.action.clone(), &["H", "A"], &["A"])?;
    let lhs = compile(&Diagram::new(&["H", "A", "A"]).then(vec![id("H"), mult("A")]).then(vec![map("act")]), &env)?;
    let rhs = compile(
        &Diagram::new(&["H", "A", "A"])
            .then(vec![comult("H"), id("A"), id("A")])
            .then(vec![id("H"), braid("H", "A"), id("A")])
            .then(vec![map("act"), map("act")])
            .then(vec![mult("A")]),
        &env,
    )?;
    rep.push(compare_maps("action multiplicative", &lhs, &rhs, &[h.dim(), n, n]));
    let u1 = compile(&Diagram::new(&["H"]).then(vec![id("H"), unit("A")]).then(vec![map("act")]), &env)?;
    let u2 = compile(&Diagram::new(&["H"]).then(vec![counit("H")]).then(vec![unit("A")]), &env)?;
    rep.push(compare_maps("action unital on 1", &u1, &u2, &[h.dim()]));
    Ok(rep)
}

/// Algebra axioms, `L`-linearity, comodule axioms and `rho(ab) = rho(a) rho(b)`
/// in the braided tensor product algebra `A (x) H`, `rho(1) = 1 (x) 1`.
pub fn verify_comodule_algebra<F: Field>(h: &BraidedHopf<F>, a: &ComoduleAlgebra<F>) -> Result<AxiomReport> {
    let n = a.dim();
    let mut rep = verify_algebra(&a.algebra)?;
    rep.extend(algebra_linearity(h.cat(), &a.algebra, &a.carrier));
    rep.extend(verify_comodule(h, &a.comodule())?);
    let mut env = h.env(&[("A", &a.carrier)])?;
    env.register_algebra("A", &a.algebra)?;
    env.register_map("rho", a.coaction.clone(), &["A"], &["A", "H"])?;
    let lhs = compile(&Diagram::new(&["A", "A"]).then(vec![mult("A")]).then(vec![map("rho")]), &env)?;
    let rhs = compile(
        &Diagram::new(&["A", "A"])
            .then(vec![map("rho"), map("rho")])
            .then(vec![id("A"), braid("H", "A"), id("H")])
            .then(vec![mult("A"), mult("H")]),
        &env,
    )?;
    rep.push(compare_maps("coaction multiplicative", &lhs, &rhs, &[n, n]));
    let u1 = compile(&Diagram::new(&[]).then(vec![unit("A")]).then(vec![map("rho")]), &env)?;
    let u2 = compile(&Diagram::new(&[]).then(vec![unit("A"), unit("H")]), &env)?;
    rep.push(compare_maps("coaction unital", &u1, &u2, &[]));
    Ok(rep)
}

/// `h . a = eps(h) a`.
pub fn trivial_module_structure<F: Field>(h: &BraidedHopf<F>, a: &FDAlgebra<F>, carrier: &Module<F>) -> ModuleAlgebra<F> {
    let action = h
        .hopf()
        .counit()
        .kron(&Matrix::identity(h.field(), a.dim()))
        .expect("same field");
    ModuleAlgebra {
        algebra: a.clone(),
        carrier: carrier.clone(),
        action,
    }
}

/// Smash product `A # H` on `A (x) H`:
/// `(a # h)(b # k) = a (h1 . b') # h2' k` with `Phi(h2 (x) b) = b' (x) h2'`.
pub fn smash_product<F: Field>(h: &BraidedHopf<F>, a: &ModuleAlgebra<F>) -> Result<(FDAlgebra<F>, Module<F>)> {
    let mut env = h.env(&[("A", &a.carrier)])?;
    env.register_algebra("A", &a.algebra)?;
    env.register_map("act", a.action.clone(), &["H", "A"], &["A"])?;
    let m = compile(
        &Diagram::new(&["A", "H", "A", "H"])
            .then(vec![id("A"), comult("H"), id("A"), id("H")])
            .then(vec![id("A"), id("H"), braid("H", "A"), id("H")])
            .then(vec![id("A"), map("act"), id("H"), id("H")])
            .then(vec![mult("A"), mult("H")]),
        &env,
    )?;
    let f = h.field();
    let mut u = Vec::with_capacity(a.dim() * h.dim());
    for x in a.algebra.unit() {
        for y in h.hopf().unit() {
            u.push(f.mul(x, y));
        }
    }
    Ok((FDAlgebra::new(m, u)?, h.cat().tensor(&a.carrier, h.carrier())))
}

/// `H*`-module structure on a right `H`-comodule:
/// `f . m = m0' <f', m1>` with `Phi(f (x) m0) = m0' (x) f'`.
pub fn module_from_comodule<F: Field>(h: &BraidedHopf<F>, c: &HComodule<F>) -> Result<HModule<F>> {
    let mut env = h.env(&[("M", &c.carrier)])?;
    env.register_map("rho", c.coaction.clone(), &["M"], &["M", "H"])?;
    let action = compile(
        &Diagram::new(&["H*", "M"])
            .then(vec![id("H*"), map("rho")])
            .then(vec![braid("H*", "M"), id("H")])
            .then(vec![id("M"), ev("H")]),
        &env,
    )?;
    Ok(HModule {
        carrier: c.carrier.clone(),
        action,
    })
}

/// Right `H`-comodule structure on a left `H*`-module:
/// `rho(n) = Phi_{H,N}(e_i (x) e^i . n)`.
pub fn comodule_from_module<F: Field>(h: &BraidedHopf<F>, m: &HModule<F>) -> Result<HComodule<F>> {
    let mut env = h.env(&[("N", &m.carrier)])?;
    env.register_map("act", m.action.clone(), &["H*", "N"], &["N"])?;
    let coaction = compile(
        &Diagram::new(&["N"])
            .then(vec![coev("H"), id("N")])
            .then(vec![id("H"), map("act")])
            .then(vec![braid("H", "N")]),
        &env,
    )?;
    Ok(HComodule {
        carrier: m.carrier.clone(),
        coaction,
    })
}

/// `T # H*` for a right `H`-comodule algebra `T`, together with the left
/// `H`-action `h . (t # f) = <f1'', h'> t' # f2`, where
/// `Phi^{-1}(t (x) f1) = f1' (x) t'` and `Phi^{-1}(h (x) f1') = f1'' (x) h'`.
pub fn dual_smash<F: Field>(h: &BraidedHopf<F>, t: &ComoduleAlgebra<F>) -> Result<(BraidedHopf<F>, ModuleAlgebra<F>)> {
    let hd = h.dual()?;
    let tm = module_from_comodule(h, &t.comodule())?;
    let t_over_dual = ModuleAlgebra {
        algebra: t.algebra.clone(),
        carrier: t.carrier.clone(),
        action: tm.action,
    };
    let (alg, carrier) = smash_product(&hd, &t_over_dual)?;
    let env = {
        let mut env = h.env(&[("T", &t.carrier)])?;
        env.register_coalgebra("H*", hd.hopf().coalgebra())?;
        env
    };
    let action = compile(
        &Diagram::new(&["H", "T", "H*"])
            .then(vec![id("H"), id("T"), comult("H*")])
            .then(vec![id("H"), braid_inv("H*", "T"), id("H*")])
            .then(vec![braid_inv("H*", "H"), id("T"), id("H*")])
            .then(vec![ev("H"), id("T"), id("H*")]),
        &env,
    )?;
    Ok((
        hd,
        ModuleAlgebra {
            algebra: alg,
            carrier,
            action,
        },
    ))
}

/// `H`-action on `H*`: `h . f = f1' <f2', h''>` with
/// `Phi^{-1}(h (x) f1) = f1' (x) h'` and `Phi^{-1}(h' (x) f2) = f2' (x) h''`.
pub fn dual_action<F: Field>(h: &BraidedHopf<F>) -> Result<Matrix<F>> {
    let hd = h.dual()?;
    let mut env = h.env(&[])?;
    env.register_coalgebra("H*", hd.hopf().coalgebra())?;
    Ok(compile(
        &Diagram::new(&["H", "H*"])
            .then(vec![id("H"), comult("H*")])
            .then(vec![braid_inv("H*", "H"), id("H*")])
            .then(vec![id("H*"), braid_inv("H*", "H")])
            .then(vec![id("H*"), ev("H")]),
        &env,
    )?)
}

/// Multiplication of `Tbar * H*` on `T (x) H*`, where `Tbar` has product
/// `mu_T Phi_{T,T}` and the coaction of `T`:
/// `(a * f)(b * g) = mu_T Phi(a (x) b0') * (b1 . f') g`, `Phi(f (x) b) = b' (x) f'`.
pub fn star_product<F: Field>(h: &BraidedHopf<F>, t: &ComoduleAlgebra<F>) -> Result<Matrix<F>> {
    let hd = h.dual()?;
    let act = dual_action(h)?;
    let mut env = h.env(&[("T", &t.carrier)])?;
    env.register_algebra("T", &t.algebra)?;
    env.register_algebra("H*", hd.hopf().algebra())?;
    env.register_map("rho", t.coaction.clone(), &["T"], &["T", "H"])?;
    env.register_map("act", act, &["H", "H*"], &["H*"])?;
    Ok(compile(
        &Diagram::new(&["T", "H*", "T", "H*"])
            .then(vec![id("T"), braid("H*", "T"), id("H*")])
            .then(vec![id("T"), map("rho"), id("H*"), id("H*")])
            .then(vec![braid("T", "T"), map("act"), id("H*")])
            .then(vec![mult("T"), mult("H*")]),
        &env,
    )?)
}

/// Multiplication of `Tbar # H*` (smash product for the `H*`-action induced
/// by the coaction of `T`), on `T (x) H*`.
pub fn bar_smash_product<F: Field>(h: &BraidedHopf<F>, t: &ComoduleAlgebra<F>) -> Result<Matrix<F>> {
    let hd = h.dual()?;
    let phi = h.cat().braid(&t.carrier, &t.carrier);
    let bar = crate::hopf::opposite_algebra(&t.algebra, &phi)?;
    let tm = module_from_comodule(h, &t.comodule())?;
    let ma = ModuleAlgebra {
        algebra: bar,
        carrier: t.carrier.clone(),
        action: tm.action,
    };
    Ok(smash_product(&hd, &ma)?.0.mult().clone())
}

/// Radford biproduct `B x L` of a Hopf algebra `B` in `L-mod` (category
/// with R-matrix `R`), as an ordinary Hopf algebra on `B (x) L`.
pub fn biproduct<F: Field>(b: &BraidedHopf<F>) -> Result<FDHopf<F>> {
    let cat = b.cat();
    let l = cat.hopf();
    let f = b.field();
    let (db, dl) = (b.dim(), l.dim());
    let reg = HModule {
        carrier: b.carrier().clone(),
        action: b.hopf().mult().clone(),
    };
    let lin = crate::braiding::check_h_linearity(b, &reg, &reg)?;
    if !lin.pass {
        return Err(Error::BraidingNotBLinear(format!("{:?}", lin.witness)));
    }
    let mut env = Env::new(f);
    env.register_hopf("B", b.hopf())?;
    env.register_hopf("L", l)?;
    env.register_map("act", b.carrier().action_map(f), &["L", "B"], &["B"])?;
    // lambda(m) = R2 (x) R1 . m
    let mut lam = Matrix::zeros(f, dl * db, db);
    for (x, y, c) in cat.rmatrix().terms(f) {
        for m in 0..db {
            for (p, v) in b.carrier().act_basis(x, m) {
                lam.add_at(y * db + p, m, &f.mul(&c, v));
            }
        }
    }
    env.register_map("lambda", lam, &["B"], &["L", "B"])?;
    let mult_m = compile(
        &Diagram::new(&["B", "L", "B", "L"])
            .then(vec![id("B"), comult("L"), id("B"), id("L")])
            .then(vec![id("B"), id("L"), flip("L", "B"), id("L")])
            .then(vec![id("B"), map("act"), id("L"), id("L")])
            .then(vec![mult("B"), mult("L")]),
        &env,
    )?;
    let comult_m = compile(
        &Diagram::new(&["B", "L"])
            .then(vec![comult("B"), comult("L")])
            .then(vec![id("B"), map("lambda"), id("L"), id("L")])
            .then(vec![id("B"), id("L"), flip("B", "L"), id("L")])
            .then(vec![id("B"), mult("L"), id("B"), id("L")]),
        &env,
    )?;
    let counit_m = compile(&Diagram::new(&["B", "L"]).then(vec![counit("B"), counit("L")]), &env)?;
    // S(b x h) = (1 x S_L(b[-1] h)) (S_B(b[0]) x 1)
    let antipode_m = compile(
        &Diagram::new(&["B", "L"])
            .then(vec![map("lambda"), id("L")])
            .then(vec![id("L"), flip("B", "L")])
            .then(vec![mult("L"), antipode("B")])
            .then(vec![antipode("L"), id("B")])
            .then(vec![comult("L"), id("B")])
            .then(vec![id("L"), flip("L", "B")])
            .then(vec![map("act"), id("L")]),
        &env,
    )?;
    let mut u = Vec::with_capacity(db * dl);
    for x in b.hopf().unit() {
        for y in l.unit() {
            u.push(f.mul(x, y));
        }
    }
    let alg = FDAlgebra::new(mult_m, u)?;
    let co = FDCoalgebra::new(comult_m, counit_m)?;
    Ok(FDHopf::new(alg, co, antipode_m)?)
}

/// `iota: L -> B x L, h -> 1 x h` and `pi: B x L -> L, b x h -> eps(b) h`.
pub fn biproduct_maps<F: Field>(b: &BraidedHopf<F>) -> (Matrix<F>, Matrix<F>) {
    let f = b.field();
    let l = b.cat().hopf();
    let ib = Matrix::from_columns(f, b.dim(), &[b.hopf().unit().to_vec()]);
    let iota = ib.kron(&Matrix::identity(f, l.dim())).expect("same field");
    let pi = b.hopf().counit().kron(&Matrix::identity(f, l.dim())).expect("same field");
    (iota, pi)
}

/// Convolution `f * g = mu (f (x) g) Delta` of maps `H -> A`.
pub fn convolve<F: Field>(h: &BraidedHopf<F>, a: &FDAlgebra<F>, f1: &Matrix<F>, f2: &Matrix<F>) -> Result<Matrix<F>> {
    Ok(a.mult().mul(&f1.kron(f2)?)?.mul(h.hopf().comult())?)
}

/// Inner action test: `h . a = f(h1) (a' f^{-1}(h2)')` with
/// `Phi(f^{-1}(h2) (x) a) = a' (x) f^{-1}(h2)'`; `f` and `f_inv` must be
/// convolution inverse.
pub fn check_inner_action<F: Field>(
    h: &BraidedHopf<F>,
    a: &ModuleAlgebra<F>,
    f: &Matrix<F>,
    f_inv: &Matrix<F>,
) -> Result<AxiomResult> {
    let fld = h.field();
    let ue = Matrix::from_columns(fld, a.dim(), &[a.algebra.unit().to_vec()]).mul(h.hopf().counit())?;
    let c1 = convolve(h, &a.algebra, f, f_inv)?;
    let c2 = convolve(h, &a.algebra, f_inv, f)?;
    if c1 != ue || c2 != ue {
        return Ok(AxiomResult::failed(
            "convolution inverse",
            Witness {
                index: vec![],
                lhs: vec![],
                rhs: vec![],
            },
        ));
    }
    let mut env = h.env(&[("A", &a.carrier)])?;
    env.register_algebra("A", &a.algebra)?;
    let rhs = compile(
        &Diagram::new(&["H", "A"])
            .then(vec![comult("H"), id("A")])
            .then(vec![
                custom(f.clone(), &["H"], &["A"]),
                custom(f_inv.clone(), &["H"], &["A"]),
                id("A"),
            ])
            .then(vec![id("A"), braid("A", "A")])
            .then(vec![id("A"), mult("A")])
            .then(vec![mult("A")]),
        &env,
    )?;
    Ok(compare_maps("inner action", &a.action, &rhs, &[h.dim(), a.dim()]))
}

/// `End(P) = [P, P]` for an `H`-module `P`, with the action
/// `(h . phi)(m) = h1 . phi'(S(h2)' . m)`, `Phi(S(h2) (x) phi) = phi' (x) S(h2)'`,
/// and `theta: H -> End(P)`, `h -> (m -> h . m)`.
pub fn endomorphism_algebra<F: Field>(h: &BraidedHopf<F>, p: &HModule<F>) -> Result<(ModuleAlgebra<F>, Matrix<F>)> {
    let f = h.field();
    let n = p.carrier.dim();
    let alg = FDAlgebra::matrix_algebra(f, n);
    let end_obj = h.cat().inner_hom(&p.carrier, &p.carrier);
    // evaluation [P,P] (x) P -> P
    let ev_m = Matrix::from_fn(f, n, n * n * n, |i, c| {
        let (phi, m) = (c / n, c % n);
        if phi / n == i && phi % n == m {
            f.one()
        } else {
            f.zero()
        }
    });
    let mut env = h.env(&[("E", &end_obj), ("P", &p.carrier)])?;
    env.register_map("act", p.action.clone(), &["H", "P"], &["P"])?;
    env.register_map("evP", ev_m, &["E", "P"], &["P"])?;
    // (h . phi)(m) as a map H (x) E (x) P -> P, then curried
    let applied = compile(
        &Diagram::new(&["H", "E", "P"])
            .then(vec![comult("H"), id("E"), id("P")])
            .then(vec![id("H"), antipode("H"), id("E"), id("P")])
            .then(vec![id("H"), braid("H", "E"), id("P")])
            .then(vec![id("H"), id("E"), map("act")])
            .then(vec![id("H"), map("evP")])
            .then(vec![map("act")]),
        &env,
    )?;
    let hd = h.dim();
    let action = Matrix::from_fn(f, n * n, hd * n * n, |row, col| {
        // row = i*n + j: coefficient of E_ij in h . phi is entry (i, j) = <e_i, (h.phi)(e_j)>
        let (i, j) = (row / n, row % n);
        applied.get(i, col * n + j).clone()
    });
    let theta = Matrix::from_fn(f, n * n, hd, |row, hh| {
        let (i, j) = (row / n, row % n);
        p.action.get(i, hh * n + j).clone()
    });
    Ok((
        ModuleAlgebra {
            algebra: alg,
            carrier: end_obj,
            action,
        },
        theta,
    ))
}

/// Regular module `H` acting on itself by multiplication.
pub fn regular_module<F: Field>(h: &BraidedHopf<F>) -> HModule<F> {
    HModule {
        carrier: h.carrier().clone(),
        action: h.hopf().mult().clone(),
    }
}

/// `H` as a right comodule algebra over itself via `Delta`.
pub fn regular_comodule_algebra<F: Field>(h: &BraidedHopf<F>) -> ComoduleAlgebra<F> {
    ComoduleAlgebra {
        algebra: h.hopf().algebra().clone(),
        carrier: h.carrier().clone(),
        coaction: h.hopf().comult().clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PrimeField, Rationals};
    use crate::families;

    fn z2() -> BraidedHopf<Rationals> {
        BraidedHopf::ordinary(families::group_hopf(1, &Rationals).unwrap())
    }

    #[test]
    fn smash_with_trivial_action_is_tensor_algebra() {
        let h = z2();
        let q = Rationals;
        let a = FDAlgebra::matrix_algebra(&q, 2);
        let carrier = h.cat().trivial_object(4);
        let ma = trivial_module_structure(&h, &a, &carrier);
        assert!(verify_module_algebra(&h, &ma).unwrap().passed());
        let (s, _) = smash_product(&h, &ma).unwrap();
        assert_eq!(s, a.tensor(h.hopf().algebra()).unwrap());
        assert_eq!(s.dim(), 8);
    }

    #[test]
    fn regular_coaction_round_trip() {
        let h = z2();
        let t = regular_comodule_algebra(&h);
        assert!(verify_comodule_algebra(&h, &t).unwrap().passed());
        let m = module_from_comodule(&h, &t.comodule()).unwrap();
        let hd = h.dual().unwrap();
        assert!(verify_module(&hd, &m).unwrap().passed());
        let back = comodule_from_module(&h, &m).unwrap();
        assert_eq!(back.coaction, t.coaction);
    }

    #[test]
    fn dual_smash_of_regular_object() {
        let h = z2();
        let t = regular_comodule_algebra(&h);
        let (_, ts) = dual_smash(&h, &t).unwrap();
        assert_eq!(ts.dim(), 4);
        assert!(verify_algebra(&ts.algebra).unwrap().passed());
        assert!(verify_module_algebra(&h, &ts).unwrap().passed());
    }

    #[test]
    fn endomorphisms_have_inner_action() {
        let f = PrimeField::new(13).unwrap();
        let h = BraidedHopf::ordinary(families::group_hopf(3, &f).unwrap());
        let p = regular_module(&h);
        let (end, theta) = endomorphism_algebra(&h, &p).unwrap();
        assert!(verify_module_algebra(&h, &end).unwrap().passed());
        let theta_s = theta.mul(h.hopf().antipode()).unwrap();
        assert!(check_inner_action(&h, &end, &theta, &theta_s).unwrap().pass);
    }
}
