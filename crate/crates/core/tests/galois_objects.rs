use hopf_galois::families::{braided_line, c_object, group_hopf, hnd, line_as_object, HndParams};
use hopf_galois::galois::*;
use hopf_galois::hopf::FDAlgebra;
use hopf_galois::modcat::{
    bar_smash_product, dual_smash, endomorphism_algebra, regular_module, star_product, trivial_module_structure,
    BraidedHopf, ComoduleAlgebra,
};
use hopf_galois::{Error, Field, Matrix, PrimeField, Rationals};

fn f13() -> PrimeField {
    PrimeField::new(13).unwrap()
}

fn line(n: usize, m: usize, d: Vec<usize>, s: usize) -> (HndParams, BraidedHopf<PrimeField>) {
    let p = HndParams::new(n, m, d);
    let b = braided_line(&p, s, &f13()).unwrap();
    (p, b)
}

fn c(p: &HndParams, b: &BraidedHopf<PrimeField>, a: u64, alpha: &[u64]) -> GaloisObject<PrimeField> {
    GaloisObject::new(b, c_object(p, b, &a, alpha).unwrap()).unwrap()
}

#[test]
fn regular_object_is_galois_and_trivial_coaction_is_not() {
    let q = Rationals;
    let h = BraidedHopf::ordinary(group_hopf(1, &q).unwrap());
    assert!(trivial_object(&h).is_ok());
    // K x K with a -> a (x) 1
    let kk = FDAlgebra::from_products(&q, 2, vec![q.one(), q.one()], |i, j| {
        if i == j {
            vec![(i, q.one())]
        } else {
            vec![]
        }
    })
    .unwrap();
    let eta = Matrix::from_columns(&q, 2, &[h.hopf().unit().to_vec()]);
    let a = ComoduleAlgebra {
        algebra: kk,
        carrier: h.cat().trivial_object(2),
        coaction: Matrix::identity(&q, 2).kron(&eta).unwrap(),
    };
    let rep = check_galois(&h, &a).unwrap();
    assert!(!rep.get("canonical map invertible").unwrap().pass);
    assert_eq!(coinvariants(&h, &a.comodule()).unwrap().len(), 2);
}

#[test]
fn c_objects_have_one_dimensional_coinvariants() {
    let (p, b) = line(2, 3, vec![5, 1], 3);
    let t = c(&p, &b, 0, &[1]);
    assert_eq!(t.can().rank(), 4);
    assert_eq!(coinvariants(&b, &t.object().comodule()).unwrap(), vec![vec![1, 0]]);
    let lam = left_coaction(&b, t.object()).unwrap();
    assert_eq!(lam.rows(), 4);
}

#[test]
fn cotensor_kernel_and_theta() {
    let (p, b) = line(2, 3, vec![5, 1], 3);
    let f = f13();
    let (s, t) = (c(&p, &b, 0, &[2]), c(&p, &b, 0, &[7]));
    let inc = cotensor_inclusion(&b, &s, &t).unwrap();
    // span{1 (x) 1, 1 (x) z + y (x) 1} in the basis (1,1),(1,z),(y,1),(y,z)
    let expected = Matrix::from_i64_rows(&f, &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]]);
    assert_eq!(inc.rank(), 2);
    assert_eq!(inc.hstack(&expected).unwrap().rank(), 2);
    let st = cotensor(&b, &s, &t).unwrap();
    let sum = c(&p, &b, 0, &[9]);
    let found = find_comodule_algebra_morphism(&b, sum.object(), st.object(), 0).unwrap();
    assert!(matches!(found, MorphismSearch::Found(_)));
    assert_eq!(galois_invariant(&p, &b, &st).unwrap(), (0, vec![9]));
}

#[test]
fn distinct_invariants_admit_no_isomorphism() {
    let (p, b) = line(2, 3, vec![5, 1], 3);
    let (s, t) = (c(&p, &b, 0, &[2]), c(&p, &b, 0, &[3]));
    let r = find_comodule_algebra_morphism(&b, s.object(), t.object(), 0).unwrap();
    assert_eq!(r, MorphismSearch::NoneExists);
}

#[test]
fn opposite_negates_invariant() {
    let (p, b) = line(2, 3, vec![5, 1], 3);
    let t = c(&p, &b, 0, &[4]);
    let op = opposite_galois(&b, &t).unwrap();
    assert_eq!(galois_invariant(&p, &b, &op).unwrap(), (0, vec![9]));
    let prod = cotensor(&b, &t, &op).unwrap();
    let triv = trivial_object(&b).unwrap();
    assert!(matches!(
        find_comodule_algebra_morphism(&b, triv.object(), prod.object(), 0).unwrap(),
        MorphismSearch::Found(_)
    ));
}

#[test]
fn invariant_additive_when_dn_is_m() {
    let (p, b) = line(2, 3, vec![3, 3], 1);
    let (s, t) = (c(&p, &b, 2, &[5]), c(&p, &b, 7, &[1]));
    let st = cotensor(&b, &s, &t).unwrap();
    assert_eq!(galois_invariant(&p, &b, &st).unwrap(), (9, vec![6]));
    let triv = trivial_object(&b).unwrap();
    assert_eq!(galois_invariant(&p, &b, &triv).unwrap(), (0, vec![0]));
}

#[test]
fn normal_basis_decisions() {
    let (p, b) = line(2, 3, vec![3, 3], 3);
    for a in 0..5 {
        assert!(has_normal_basis(&b, &c(&p, &b, a, &[0]), 0).unwrap().is_some());
    }
    let (p, b) = line(2, 3, vec![5, 1], 3);
    for al in 1..6 {
        assert_eq!(has_normal_basis(&b, &c(&p, &b, 0, &[al]), 0).unwrap(), None);
    }
}

#[test]
fn cocycle_twists_of_the_line() {
    let (p, b) = line(1, 3, vec![3], 3);
    for a in 0..3 {
        let sigma = CocycleData::new(&b, Matrix::from_i64_rows(&f13(), &[&[1, 0, 0, a]])).unwrap();
        let t = cocycle_twist(&b, &sigma).unwrap();
        assert_eq!(galois_invariant(&p, &b, &t).unwrap(), (a as u64, vec![]));
        assert!(has_normal_basis(&b, &t, 0).unwrap().is_some());
    }
    let (_, b) = line(1, 3, vec![1], 3);
    let sigma = Matrix::from_i64_rows(&f13(), &[&[1, 0, 0, 1]]);
    let rep = check_cocycle(&b, &sigma).unwrap();
    assert!(!rep.get("sigma L-linear").unwrap().pass);
    assert!(check_cocycle(&b, &Matrix::from_i64_rows(&f13(), &[&[1, 0, 0, 0]])).unwrap().passed());
}

#[test]
fn azumaya_examples() {
    let q = Rationals;
    let e = FDAlgebra::matrix_algebra(&q, 2);
    assert!(azumaya_check(&e, &Matrix::flip(&q, 4, 4)).unwrap().passed());
    let kk = FDAlgebra::from_products(&q, 2, vec![q.one(), q.one()], |i, j| {
        if i == j {
            vec![(i, q.one())]
        } else {
            vec![]
        }
    })
    .unwrap();
    assert!(!azumaya_check(&kk, &Matrix::flip(&q, 2, 2)).unwrap().passed());
    let k = FDAlgebra::ground(&q);
    assert!(azumaya_check(&k, &Matrix::identity(&q, 1)).unwrap().passed());
}

fn sweedler() -> BraidedHopf<PrimeField> {
    BraidedHopf::ordinary(hnd(&HndParams::new(1, 1, vec![1]), &f13()).unwrap())
}

#[test]
fn upsilon_of_trivial_action() {
    let h = sweedler();
    let f = f13();
    let a = trivial_module_structure(&h, &FDAlgebra::matrix_algebra(&f, 2), &h.cat().trivial_object(4));
    let up = upsilon(&h, &a).unwrap();
    assert_eq!(up.object.dim(), 4);
    let w = corestrict(&up.basis, &trivial_action_witness(&h, &a).unwrap()).unwrap();
    let reg = trivial_object(&h).unwrap();
    assert!(verify_comodule_algebra_morphism(&h, &w, reg.object(), up.object.object()).unwrap().passed());
    assert_eq!(w.rank(), 4);
}

#[test]
fn upsilon_of_endomorphisms_has_normal_basis() {
    let h = sweedler();
    let p = regular_module(&h);
    let (end, theta) = endomorphism_algebra(&h, &p).unwrap();
    let up = upsilon(&h, &end).unwrap();
    assert_eq!(up.object.dim(), 4);
    let w = corestrict(&up.basis, &inner_witness(&h, &theta).unwrap()).unwrap();
    let reg = trivial_object(&h).unwrap();
    assert!(verify_comodule_algebra_morphism(&h, &w, reg.object(), up.object.object()).unwrap().passed());
    assert_eq!(w.rank(), 4);
    assert!(has_normal_basis(&h, &up.object, 0).unwrap().is_some());
}

#[test]
fn gamma_round_trips() {
    let p = HndParams::new(1, 1, vec![1]);
    let b = braided_line(&p, 1, &f13()).unwrap();
    for t in [trivial_object(&b).unwrap(), c(&p, &b, 3, &[])] {
        let (_, ok, dim) = gamma_map(&b, &t).unwrap();
        assert!(ok);
        assert_eq!(dim, 2);
    }
}

#[test]
fn dual_smash_of_galois_object_is_azumaya() {
    let (p, b) = line(2, 3, vec![3, 3], 3);
    let t = c(&p, &b, 4, &[0]);
    let (_, ts) = dual_smash(&b, t.object()).unwrap();
    let phi = b.cat().braid(&ts.carrier, &ts.carrier);
    assert!(azumaya_check(&ts.algebra, &phi).unwrap().passed());
}

#[test]
fn star_and_smash_agree_for_commutative_h() {
    let (p, b) = line(2, 3, vec![3, 3], 3);
    for t in [c(&p, &b, 4, &[0]), c(&p, &b, 0, &[2])] {
        let s1 = star_product(&b, t.object()).unwrap();
        let s2 = bar_smash_product(&b, t.object()).unwrap();
        assert_eq!(s1, s2);
    }
}

#[test]
fn inner_action_needs_the_normal_basis() {
    let (p, b) = line(2, 3, vec![5, 1], 3);
    let t = c(&p, &b, 0, &[1]);
    let (_, ts) = dual_smash(&b, t.object()).unwrap();
    let up = upsilon(&b, &ts).unwrap();
    assert_eq!(has_normal_basis(&b, &up.object, 0).unwrap(), None);
}

#[test]
fn line_is_the_trivial_class() {
    let (p, b) = line(2, 3, vec![5, 1], 3);
    let t = GaloisObject::new(&b, line_as_object(&b)).unwrap();
    assert_eq!(galois_invariant(&p, &b, &t).unwrap(), (0, vec![0]));
    assert!(matches!(c_object(&p, &b, &1, &[0]), Err(Error::BadA)));
}
