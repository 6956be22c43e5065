//! String diagrams as straight-line programs over named wire objects.
//!
//! A diagram is read top to bottom: the first layer is applied first. Wires
//! are listed left to right in tensor-factor order, and a layer is a
//! horizontal juxtaposition of blocks whose inputs, concatenated, must equal
//! the current wire list.

use std::collections::HashMap;
use std::sync::Arc;

use crate::exact::{ExactError, Field, Matrix};
use crate::hopf::{FDAlgebra, FDCoalgebra, FDHopf};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("wire mismatch at layer {layer}: expected {expected:?}, found {found:?}")]
    WireMismatch {
        layer: usize,
        expected: Vec<String>,
        found: Vec<String>,
    },
    #[error("unresolved box {0}")]
    UnresolvedBox(String),
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A named object with its dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WireObject {
    pub name: String,
    pub dim: usize,
}

/// Name of the coordinate dual of `x`.
pub fn dual_name(x: &str) -> String {
    format!("{x}*")
}

#[derive(Debug, Clone)]
pub enum Block<F: Field> {
    Id(String),
    Mult(String),
    Comult(String),
    Unit(String),
    Counit(String),
    Antipode(String),
    /// The registered braiding `X (x) Y -> Y (x) X`.
    Braid(String, String),
    /// Inverse of the registered braiding `X (x) Y -> Y (x) X`, i.e. a map `Y (x) X -> X (x) Y`.
    BraidInv(String, String),
    /// Evaluation `X* (x) X -> I`.
    Ev(String),
    /// Coevaluation `I -> X (x) X*`.
    Coev(String),
    /// Plain swap of tensor factors, `X (x) Y -> Y (x) X`.
    Flip(String, String),
    /// A morphism registered in the environment under this name.
    Map(String),
    Custom {
        matrix: Arc<Matrix<F>>,
        inputs: Vec<String>,
        outputs: Vec<String>,
    },
}

pub fn id<F: Field>(x: &str) -> Block<F> {
    Block::Id(x.to_string())
}
pub fn mult<F: Field>(x: &str) -> Block<F> {
    Block::Mult(x.to_string())
}
pub fn comult<F: Field>(x: &str) -> Block<F> {
    Block::Comult(x.to_string())
}
pub fn unit<F: Field>(x: &str) -> Block<F> {
    Block::Unit(x.to_string())
}
pub fn counit<F: Field>(x: &str) -> Block<F> {
    Block::Counit(x.to_string())
}
pub fn antipode<F: Field>(x: &str) -> Block<F> {
    Block::Antipode(x.to_string())
}
pub fn braid<F: Field>(x: &str, y: &str) -> Block<F> {
    Block::Braid(x.to_string(), y.to_string())
}
pub fn braid_inv<F: Field>(x: &str, y: &str) -> Block<F> {
    Block::BraidInv(x.to_string(), y.to_string())
}
pub fn ev<F: Field>(x: &str) -> Block<F> {
    Block::Ev(x.to_string())
}
pub fn coev<F: Field>(x: &str) -> Block<F> {
    Block::Coev(x.to_string())
}
pub fn flip<F: Field>(x: &str, y: &str) -> Block<F> {
    Block::Flip(x.to_string(), y.to_string())
}
pub fn map<F: Field>(name: &str) -> Block<F> {
    Block::Map(name.to_string())
}
pub fn custom<F: Field>(matrix: Matrix<F>, inputs: &[&str], outputs: &[&str]) -> Block<F> {
    Block::Custom {
        matrix: Arc::new(matrix),
        inputs: inputs.iter().map(|s| s.to_string()).collect(),
        outputs: outputs.iter().map(|s| s.to_string()).collect(),
    }
}

#[derive(Debug, Clone)]
struct Morphism<F: Field> {
    matrix: Arc<Matrix<F>>,
    inputs: Vec<String>,
    outputs: Vec<String>,
}

/// Registry of objects, structure maps and braidings a diagram refers to.
#[derive(Debug, Clone)]
pub struct Env<F: Field> {
    field: F,
    objects: HashMap<String, usize>,
    maps: HashMap<String, Morphism<F>>,
    braidings: HashMap<(String, String), (Arc<Matrix<F>>, Arc<Matrix<F>>)>,
}

impl<F: Field> Env<F> {
    pub fn new(field: &F) -> Self {
        Env {
            field: field.clone(),
            objects: HashMap::new(),
            maps: HashMap::new(),
            braidings: HashMap::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Registers `name` and its dual `name*`.
    pub fn object(&mut self, name: &str, dim: usize) -> &mut Self {
        self.objects.insert(name.to_string(), dim);
        self.objects.insert(dual_name(name), dim);
        self
    }

    pub fn dim(&self, name: &str) -> Result<usize, DiagramError> {
        self.objects
            .get(name)
            .copied()
            .ok_or_else(|| DiagramError::UnknownObject(name.to_string()))
    }

    fn total_dim(&self, wires: &[String]) -> Result<usize, DiagramError> {
        wires.iter().map(|w| self.dim(w)).product()
    }

    pub fn register_map(
        &mut self,
        name: &str,
        matrix: Matrix<F>,
        inputs: &[&str],
        outputs: &[&str],
    ) -> Result<&mut Self, DiagramError> {
        let inputs: Vec<String> = inputs.iter().map(|s| s.to_string()).collect();
        let outputs: Vec<String> = outputs.iter().map(|s| s.to_string()).collect();
        let (r, c) = (self.total_dim(&outputs)?, self.total_dim(&inputs)?);
        if matrix.rows() != r || matrix.cols() != c {
            return Err(ExactError::Shape(format!(
                "map {name} is {}x{}, wires need {r}x{c}",
                matrix.rows(),
                matrix.cols()
            ))
            .into());
        }
        self.maps.insert(
            name.to_string(),
            Morphism {
                matrix: Arc::new(matrix),
                inputs,
                outputs,
            },
        );
        Ok(self)
    }

    pub fn register_algebra(&mut self, obj: &str, a: &FDAlgebra<F>) -> Result<&mut Self, DiagramError> {
        self.object(obj, a.dim());
        self.register_map(&format!("mult:{obj}"), a.mult().clone(), &[obj, obj], &[obj])?;
        self.register_map(&format!("unit:{obj}"), a.unit_matrix(), &[], &[obj])
    }

    pub fn register_coalgebra(&mut self, obj: &str, c: &FDCoalgebra<F>) -> Result<&mut Self, DiagramError> {
        self.object(obj, c.dim());
        self.register_map(&format!("comult:{obj}"), c.comult().clone(), &[obj], &[obj, obj])?;
        self.register_map(&format!("counit:{obj}"), c.counit().clone(), &[obj], &[])
    }

    pub fn register_hopf(&mut self, obj: &str, h: &FDHopf<F>) -> Result<&mut Self, DiagramError> {
        self.register_algebra(obj, h.algebra())?;
        self.register_coalgebra(obj, h.coalgebra())?;
        self.register_map(&format!("antipode:{obj}"), h.antipode().clone(), &[obj], &[obj])
    }

    /// Registers `phi: X (x) Y -> Y (x) X`; its inverse is computed and stored.
    pub fn register_braiding(&mut self, x: &str, y: &str, phi: Matrix<F>) -> Result<&mut Self, DiagramError> {
        let n = self.dim(x)? * self.dim(y)?;
        if phi.rows() != n || phi.cols() != n {
            return Err(ExactError::Shape(format!("braiding {x},{y} has wrong size")).into());
        }
        let inv = phi.inverse()?;
        self.braidings
            .insert((x.to_string(), y.to_string()), (Arc::new(phi), Arc::new(inv)));
        Ok(self)
    }

    pub fn braiding(&self, x: &str, y: &str) -> Option<&Matrix<F>> {
        self.braidings.get(&(x.to_string(), y.to_string())).map(|b| b.0.as_ref())
    }

    pub fn has_braiding(&self, x: &str, y: &str) -> bool {
        self.braidings.contains_key(&(x.to_string(), y.to_string()))
    }

    fn named(&self, key: &str) -> Result<&Morphism<F>, DiagramError> {
        self.maps
            .get(key)
            .ok_or_else(|| DiagramError::UnresolvedBox(key.to_string()))
    }
}

/// A layered diagram with declared input wires.
#[derive(Debug, Clone)]
pub struct Diagram<F: Field> {
    inputs: Vec<String>,
    layers: Vec<Vec<Block<F>>>,
}

impl<F: Field> Diagram<F> {
    pub fn new(inputs: &[&str]) -> Self {
        Diagram {
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            layers: Vec::new(),
        }
    }

    /// Identity diagram on the given wires.
    pub fn identity(wires: &[&str]) -> Self {
        Self::new(wires)
    }

    pub fn then(mut self, layer: Vec<Block<F>>) -> Self {
        self.layers.push(layer);
        self
    }

    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }

    pub fn layers(&self) -> &[Vec<Block<F>>] {
        &self.layers
    }

    /// Output wires, after checking every layer against the environment.
    pub fn outputs(&self, env: &Env<F>) -> Result<Vec<String>, DiagramError> {
        let mut wires = self.inputs.clone();
        for (li, layer) in self.layers.iter().enumerate() {
            let mut ins = Vec::new();
            let mut outs = Vec::new();
            for b in layer {
                let r = resolve(b, env)?;
                ins.extend(r.inputs);
                outs.extend(r.outputs);
            }
            if ins != wires {
                return Err(DiagramError::WireMismatch {
                    layer: li,
                    expected: wires,
                    found: ins,
                });
            }
            wires = outs;
        }
        Ok(wires)
    }
}

enum Action<F: Field> {
    Identity,
    Swap(usize, usize),
    Columns(Arc<Vec<Vec<(usize, F::Elem)>>>),
}

struct Resolved<F: Field> {
    inputs: Vec<String>,
    outputs: Vec<String>,
    action: Action<F>,
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn from_matrix<F: Field>(m: &Matrix<F>, inputs: Vec<String>, outputs: Vec<String>) -> Resolved<F> {
    Resolved {
        inputs,
        outputs,
        action: Action::Columns(Arc::new(m.sparse_columns())),
    }
}

fn resolve<F: Field>(b: &Block<F>, env: &Env<F>) -> Result<Resolved<F>, DiagramError> {
    let f = env.field();
    let named = |kind: &str, x: &str| -> Result<Resolved<F>, DiagramError> {
        let m = env.named(&format!("{kind}:{x}"))?;
        Ok(from_matrix(&m.matrix, m.inputs.clone(), m.outputs.clone()))
    };
    Ok(match b {
        Block::Id(x) => {
            env.dim(x)?;
            Resolved {
                inputs: vec![x.clone()],
                outputs: vec![x.clone()],
                action: Action::Identity,
            }
        }
        Block::Mult(x) => named("mult", x)?,
        Block::Comult(x) => named("comult", x)?,
        Block::Unit(x) => named("unit", x)?,
        Block::Counit(x) => named("counit", x)?,
        Block::Antipode(x) => named("antipode", x)?,
        Block::Map(name) => {
            let m = env.named(name)?;
            from_matrix(&m.matrix, m.inputs.clone(), m.outputs.clone())
        }
        Block::Braid(x, y) | Block::BraidInv(x, y) => {
            let (phi, inv) = env
                .braidings
                .get(&(x.clone(), y.clone()))
                .ok_or_else(|| DiagramError::UnresolvedBox(format!("braiding {x},{y}")))?;
            if matches!(b, Block::Braid(..)) {
                from_matrix(phi, vec![x.clone(), y.clone()], vec![y.clone(), x.clone()])
            } else {
                from_matrix(inv, vec![y.clone(), x.clone()], vec![x.clone(), y.clone()])
            }
        }
        Block::Flip(x, y) => Resolved {
            inputs: vec![x.clone(), y.clone()],
            outputs: vec![y.clone(), x.clone()],
            action: Action::Swap(env.dim(x)?, env.dim(y)?),
        },
        Block::Ev(x) => {
            let d = env.dim(x)?;
            let cols = (0..d * d)
                .map(|k| if k / d == k % d { vec![(0, f.one())] } else { vec![] })
                .collect();
            Resolved {
                inputs: strings(&[&dual_name(x), x]),
                outputs: vec![],
                action: Action::Columns(Arc::new(cols)),
            }
        }
        Block::Coev(x) => {
            let d = env.dim(x)?;
            let col = (0..d).map(|i| (i * d + i, f.one())).collect();
            Resolved {
                inputs: vec![],
                outputs: strings(&[x, &dual_name(x)]),
                action: Action::Columns(Arc::new(vec![col])),
            }
        }
        Block::Custom {
            matrix,
            inputs,
            outputs,
        } => {
            let (r, c) = (env.total_dim(outputs)?, env.total_dim(inputs)?);
            if matrix.rows() != r || matrix.cols() != c {
                return Err(DiagramError::UnresolvedBox(format!(
                    "custom block {}x{} on wires {inputs:?} -> {outputs:?}",
                    matrix.rows(),
                    matrix.cols()
                )));
            }
            from_matrix(matrix, inputs.clone(), outputs.clone())
        }
    })
}

struct Layer<F: Field> {
    in_sizes: Vec<usize>,
    out_sizes: Vec<usize>,
    actions: Vec<Action<F>>,
}

fn apply_layer<F: Field>(field: &F, layer: &Layer<F>, v: &HashMap<usize, F::Elem>) -> HashMap<usize, F::Elem> {
    let nb = layer.in_sizes.len();
    let mut out: HashMap<usize, F::Elem> = HashMap::new();
    let mut parts = vec![0usize; nb];
    for (&idx, c) in v {
        let mut rest = idx;
        for b in (0..nb).rev() {
            parts[b] = rest % layer.in_sizes[b];
            rest /= layer.in_sizes[b];
        }
        // expand the product of per-block images
        let mut acc: Vec<(usize, F::Elem)> = vec![(0, c.clone())];
        for b in 0..nb {
            let osz = layer.out_sizes[b];
            let mut next = Vec::new();
            match &layer.actions[b] {
                Action::Identity => {
                    for (i, x) in acc {
                        next.push((i * osz + parts[b], x));
                    }
                }
                Action::Swap(dx, dy) => {
                    let (x, y) = (parts[b] / dy, parts[b] % dy);
                    let j = y * dx + x;
                    for (i, a) in acc {
                        next.push((i * osz + j, a));
                    }
                }
                Action::Columns(cols) => {
                    let col = &cols[parts[b]];
                    for (i, a) in &acc {
                        for (j, m) in col {
                            next.push((i * osz + j, field.mul(a, m)));
                        }
                    }
                }
            }
            acc = next;
            if acc.is_empty() {
                break;
            }
        }
        for (i, a) in acc {
            let e = out.entry(i).or_insert_with(|| field.zero());
            *e = field.add(e, &a);
        }
    }
    out.retain(|_, a| !field.is_zero(a));
    out
}

/// Compiles a diagram into the matrix of the morphism it denotes.
pub fn compile<F: Field>(d: &Diagram<F>, env: &Env<F>) -> Result<Matrix<F>, DiagramError> {
    let field = env.field();
    let mut wires = d.inputs.clone();
    let mut layers = Vec::with_capacity(d.layers.len());
    for (li, layer) in d.layers.iter().enumerate() {
        let mut ins = Vec::new();
        let mut outs = Vec::new();
        let mut in_sizes = Vec::new();
        let mut out_sizes = Vec::new();
        let mut actions = Vec::new();
        for b in layer {
            let r = resolve(b, env)?;
            in_sizes.push(env.total_dim(&r.inputs)?);
            out_sizes.push(env.total_dim(&r.outputs)?);
            ins.extend(r.inputs);
            outs.extend(r.outputs);
            actions.push(r.action);
        }
        if ins != wires {
            return Err(DiagramError::WireMismatch {
                layer: li,
                expected: wires,
                found: ins,
            });
        }
        wires = outs;
        layers.push(Layer {
            in_sizes,
            out_sizes,
            actions,
        });
    }
    let n_in = env.total_dim(&d.inputs)?;
    let n_out = env.total_dim(&wires)?;
    let mut m = Matrix::zeros(field, n_out, n_in);
    for col in 0..n_in {
        let mut v = HashMap::new();
        v.insert(col, field.one());
        for layer in &layers {
            v = apply_layer(field, layer, &v);
            if v.is_empty() {
                break;
            }
        }
        for (i, a) in v {
            m.set(i, col, a);
        }
    }
    Ok(m)
}

/// Whether two diagrams with the same boundary denote the same morphism.
pub fn diagrams_equal<F: Field>(d1: &Diagram<F>, d2: &Diagram<F>, env: &Env<F>) -> Result<bool, DiagramError> {
    let (o1, o2) = (d1.outputs(env)?, d2.outputs(env)?);
    if d1.inputs != d2.inputs || o1 != o2 {
        return Err(DiagramError::WireMismatch {
            layer: 0,
            expected: o1,
            found: o2,
        });
    }
    Ok(compile(d1, env)? == compile(d2, env)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{PrimeField, Rationals};

    #[test]
    fn identity_layer() {
        let q = Rationals;
        let mut env = Env::new(&q);
        env.object("X", 3);
        let d = Diagram::new(&["X"]).then(vec![id("X")]);
        assert!(compile(&d, &env).unwrap().is_identity());
        assert!(compile(&Diagram::identity(&["X", "X"]), &env).unwrap().is_identity());
    }

    #[test]
    fn snake_identities() {
        let q = Rationals;
        for dim in 1..=3 {
            let mut env = Env::new(&q);
            env.object("X", dim);
            let x_star = dual_name("X");
            let d = Diagram::new(&["X"])
                .then(vec![coev("X"), id("X")])
                .then(vec![id("X"), ev("X")]);
            assert!(diagrams_equal(&d, &Diagram::identity(&["X"]), &env).unwrap());
            // the mate: X* -> X* (x) X (x) X* -> X*
            let d2 = Diagram::new(&[x_star.as_str()])
                .then(vec![id(&x_star), coev("X")])
                .then(vec![ev("X"), id(&x_star)]);
            assert!(compile(&d2, &env).unwrap().is_identity());
        }
    }

    #[test]
    fn flip_twice() {
        let f = PrimeField::new(13).unwrap();
        let mut env = Env::new(&f);
        env.object("X", 2).object("Y", 3);
        let d = Diagram::new(&["X", "Y"])
            .then(vec![flip("X", "Y")])
            .then(vec![flip("Y", "X")]);
        assert!(compile(&d, &env).unwrap().is_identity());
        let single = Diagram::new(&["X", "Y"]).then(vec![flip("X", "Y")]);
        assert_eq!(compile(&single, &env).unwrap(), Matrix::flip(&f, 2, 3));
    }

    #[test]
    fn wire_mismatch_reports_layer() {
        let q = Rationals;
        let mut env = Env::new(&q);
        env.object("X", 2).object("Y", 2);
        let d = Diagram::new(&["X", "Y"])
            .then(vec![id("X"), id("Y")])
            .then(vec![id("Y"), id("X")]);
        assert!(matches!(compile(&d, &env), Err(DiagramError::WireMismatch { layer: 1, .. })));
        let u = Diagram::new(&["X"]).then(vec![mult("X")]);
        assert!(matches!(compile(&u, &env), Err(DiagramError::UnresolvedBox(_))));
    }

    #[test]
    fn functoriality() {
        let f = PrimeField::new(13).unwrap();
        let a = Matrix::from_i64_rows(&f, &[&[1, 2], &[3, 4], &[0, 5]]);
        let b = Matrix::from_i64_rows(&f, &[&[2, 0, 1], &[1, 1, 1]]);
        let mut env = Env::new(&f);
        env.object("X", 2).object("Y", 3);
        let d = Diagram::new(&["X", "X"])
            .then(vec![custom(a.clone(), &["X"], &["Y"]), id("X")])
            .then(vec![custom(b.clone(), &["Y"], &["X"]), custom(a.clone(), &["X"], &["Y"])]);
        let expected = b
            .mul(&a)
            .unwrap()
            .kron(&a)
            .unwrap();
        assert_eq!(compile(&d, &env).unwrap(), expected);
    }

    #[test]
    fn braid_inverse_cancels() {
        let f = PrimeField::new(13).unwrap();
        let mut env = Env::new(&f);
        env.object("X", 2);
        let phi = Matrix::flip(&f, 2, 2).scale(&5);
        env.register_braiding("X", "X", phi).unwrap();
        let d = Diagram::new(&["X", "X"])
            .then(vec![braid("X", "X")])
            .then(vec![braid_inv("X", "X")]);
        assert!(compile(&d, &env).unwrap().is_identity());
    }
}
