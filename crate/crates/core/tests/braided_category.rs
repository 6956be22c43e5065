use hopf_galois::braiding::{
    check_cocommutative, check_h_linearity, check_h_linearity_with, check_qt, check_symmetric_pair, monodromy,
    Category, Module,
};
use hopf_galois::families::{braided_line, group_hopf, hnd, omega, qt_congruence, r_s, HndParams};
use hopf_galois::hopf::FDHopf;
use hopf_galois::modcat::{regular_module, BraidedHopf, HModule};
use hopf_galois::{Field, Matrix, PrimeField};

fn f13() -> PrimeField {
    PrimeField::new(13).unwrap()
}

/// Characters `g -> w^a`, vanishing on the skew primitives of `H(n, d)`.
fn characters_of(f: &PrimeField, m: usize, dim: usize) -> Vec<Module<PrimeField>> {
    let w = omega(f, m).unwrap();
    let stride = dim / (2 * m);
    (0..2 * m)
        .map(|a| {
            let vals: Vec<u64> = (0..dim)
                .map(|i| if i % stride == 0 { f.pow(&w, (a * (i / stride)) as u64) } else { 0 })
                .collect();
            Module::character(f, &vals)
        })
        .collect()
}

fn characters(f: &PrimeField, m: usize) -> Vec<Module<PrimeField>> {
    characters_of(f, m, 2 * m)
}

/// Modules used for the categorical identities: characters and the regular module.
fn sample_modules(h: &FDHopf<PrimeField>, f: &PrimeField, m: usize) -> Vec<Module<PrimeField>> {
    let mut v: Vec<_> = characters_of(f, m, h.dim()).into_iter().take(3).collect();
    v.push(Module::regular(h.algebra()));
    v
}

fn categories() -> Vec<(Category<PrimeField>, usize)> {
    let f = f13();
    let mut out = Vec::new();
    for m in [1, 3] {
        let g = group_hopf(m, &f).unwrap();
        for s in [1, m] {
            out.push((Category::new(g.clone(), r_s(&g, m, s).unwrap()).unwrap(), m));
        }
    }
    let p = HndParams::new(1, 3, vec![3]);
    let h = hnd(&p, &f).unwrap();
    out.push((Category::new(h.clone(), r_s(&h, 3, 1).unwrap()).unwrap(), 3));
    out
}

#[test]
fn hexagon_identities() {
    let f = f13();
    for (cat, m) in categories() {
        let mods = sample_modules(cat.hopf(), &f, m);
        for l in &mods {
            for mm in &mods {
                for n in &mods {
                    let (dl, dm, dn) = (l.dim(), mm.dim(), n.dim());
                    let lm = cat.tensor(l, mm);
                    let lhs = cat.braid(&lm, n);
                    let rhs = cat
                        .braid(l, n)
                        .kron(&Matrix::identity(&f, dm))
                        .unwrap()
                        .mul(&Matrix::identity(&f, dl).kron(&cat.braid(mm, n)).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                    let mn = cat.tensor(mm, n);
                    let lhs = cat.braid(l, &mn);
                    let rhs = Matrix::identity(&f, dm)
                        .kron(&cat.braid(l, n))
                        .unwrap()
                        .mul(&cat.braid(l, mm).kron(&Matrix::identity(&f, dn)).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn inverse_formula_matches_matrix_inverse() {
    let f = f13();
    for (cat, m) in categories() {
        let mods = sample_modules(cat.hopf(), &f, m);
        for a in &mods {
            for b in &mods {
                assert_eq!(cat.braid_inv(a, b), cat.braid(a, b).inverse().unwrap());
            }
        }
    }
}

#[test]
fn naturality_on_right_multiplications() {
    let f = f13();
    for (cat, m) in categories() {
        let h = cat.hopf();
        let reg = Module::regular(h.algebra());
        let others = sample_modules(h, &f, m);
        for k in [1, h.dim() - 1, h.dim() / 2] {
            // right multiplication by a basis element is a left-module map
            let rk = h.algebra().right_mult(&h.algebra().basis_vector(k));
            assert!(reg.is_morphism_to(&reg, &rk));
            for n in &others {
                let idn = Matrix::identity(&f, n.dim());
                let lhs = idn.kron(&rk).unwrap().mul(&cat.braid(&reg, n)).unwrap();
                let rhs = cat.braid(&reg, n).mul(&rk.kron(&idn).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn character_monodromy() {
    let f = f13();
    for m in [1, 3] {
        let g = group_hopf(m, &f).unwrap();
        let w = omega(&f, m).unwrap();
        let chars = characters(&f, m);
        for s in 0..2 * m {
            let cat = Category::new(g.clone(), r_s(&g, m, s).unwrap()).unwrap();
            for a in 0..2 * m {
                for b in 0..2 * m {
                    let mono = monodromy(&cat, &chars[a], &chars[b]);
                    let expected = f.pow(&w, ((2 * s * a * b) % (2 * m)) as u64);
                    assert_eq!(mono, Matrix::scalar(&f, expected), "m={m} s={s} a={a} b={b}");
                    let phi_ab = cat.braid(&chars[a], &chars[b]);
                    let phi_ba = cat.braid(&chars[b], &chars[a]);
                    assert_eq!(check_symmetric_pair(&phi_ab, &phi_ba), expected == 1);
                }
            }
        }
    }
}

#[test]
fn faithful_characters_of_z4_are_not_symmetric() {
    let f = PrimeField::new(5).unwrap();
    let g = group_hopf(2, &f).unwrap();
    let cat = Category::new(g.clone(), r_s(&g, 2, 1).unwrap()).unwrap();
    let w = omega(&f, 2).unwrap();
    let chi = Module::character(&f, &(0..4).map(|j| f.pow(&w, j)).collect::<Vec<_>>());
    assert!(!check_symmetric_pair(&cat.braid(&chi, &chi), &cat.braid(&chi, &chi)));
}

#[test]
fn qt_congruence_matches_checker() {
    let f = f13();
    for (n, m, d) in [(1, 1, vec![1]), (1, 3, vec![3]), (2, 3, vec![3, 3]), (2, 3, vec![5, 1])] {
        let p = HndParams::new(n, m, d);
        let h = hnd(&p, &f).unwrap();
        let passing: Vec<usize> = (0..2 * m)
            .filter(|&s| check_qt(&h, &r_s(&h, m, s).unwrap()).unwrap().passed())
            .collect();
        assert_eq!(passing, qt_congruence(&p));
    }
}

fn trivial_b_module(b: &BraidedHopf<PrimeField>, carrier: Module<PrimeField>) -> HModule<PrimeField> {
    let action = b.hopf().counit().kron(&Matrix::identity(b.field(), carrier.dim())).unwrap();
    HModule { carrier, action }
}

/// Generating set: `B` itself and characters of `L` with `B` acting by the counit.
fn generating_set(b: &BraidedHopf<PrimeField>, m: usize) -> Vec<HModule<PrimeField>> {
    let f = b.field();
    let mut g = vec![regular_module(b)];
    let l = b.cat().hopf();
    for chi in characters(f, m) {
        if l.dim() == 2 * m {
            g.push(trivial_b_module(b, chi));
        }
    }
    g
}

#[test]
fn linearity_equivalent_to_cocommutative_and_symmetric() {
    let f = f13();
    for (n, m, d, s) in [(1, 1, vec![1], 1), (1, 3, vec![3], 1), (1, 3, vec![3], 3), (1, 3, vec![1], 3)] {
        let p = HndParams::new(n, m, d);
        let b = braided_line(&p, s, &f).unwrap();
        let gens = generating_set(&b, m);
        let linear = gens
            .iter()
            .all(|x| gens.iter().all(|y| check_h_linearity(&b, x, y).unwrap().pass));
        let cocomm = check_cocommutative(b.hopf(), &b.phi());
        let symmetric = gens.iter().all(|x| {
            let cat = b.cat();
            check_symmetric_pair(&cat.braid(b.carrier(), &x.carrier), &cat.braid(&x.carrier, b.carrier()))
        });
        assert_eq!(linear, cocomm && symmetric, "params {:?} s={s}", p);
    }
}

#[test]
fn flip_is_not_linear_over_the_line() {
    let f = f13();
    let p = HndParams::new(1, 1, vec![1]);
    let b = braided_line(&p, 1, &f).unwrap();
    let reg = regular_module(&b);
    assert!(check_h_linearity(&b, &reg, &reg).unwrap().pass);
    let tau = Matrix::flip(&f, 2, 2);
    let r = check_h_linearity_with(&b, &reg, &reg, &tau).unwrap();
    assert!(!r.pass);
    assert!(r.witness.is_some());
}

#[test]
fn cocommutativity_examples() {
    let f = f13();
    let h4 = hnd(&HndParams::new(1, 1, vec![1]), &f).unwrap();
    assert!(!check_cocommutative(&h4, &Matrix::flip(&f, 4, 4)));
    let g = group_hopf(3, &f).unwrap();
    assert!(check_cocommutative(&g, &Matrix::flip(&f, 6, 6)));
    let k = FDHopf::ground(&f);
    assert!(check_cocommutative(&k, &Matrix::identity(&f, 1)));
}
