//! Reflexive forms over the small fields: alternating bilinear forms and
//! ordinary quadratic forms (parabolic, hyperbolic, elliptic), plus an
//! optional hermitian kind behind the `hermitian` feature.
//!
//! Quadratic kinds store explicit upper-triangular coefficients; the
//! associated bilinear form is `b(u,v) = Q(u+v) − Q(u) − Q(v)`, which keeps
//! characteristic 2 honest (the Gram matrix alone cannot represent the
//! quadric there, and the parabolic form's bilinear radical is a 1-space
//! carrying no singular point). Witt splitting peels off hyperbolic pairs
//! and is the algebraic oracle for polar rank.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gf::field::Field;
use crate::gf::linalg::{nullspace, Matrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadKind {
    Parabolic,
    Hyperbolic,
    Elliptic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    Alternating,
    Quadratic(QuadKind),
    #[cfg(feature = "hermitian")]
    Hermitian,
}

#[derive(Debug)]
pub struct Form {
    kind: FormKind,
    dim: usize,
    field: &'static Field,
    gram: Matrix,
    /// Upper-triangular coefficients of Q for the quadratic kinds.
    quad: Option<Matrix>,
}

impl Form {
    /// Nondegenerate alternating form on 2n coordinates, block-paired as
    /// (0,1), (2,3), ...
    pub fn alternating(field: &'static Field, n: usize) -> Form {
        assert!(n >= 1);
        let dim = 2 * n;
        let mut gram = Matrix::zero(dim, dim);
        for i in 0..n {
            gram.set(2 * i, 2 * i + 1, 1);
            gram.set(2 * i + 1, 2 * i, field.neg(1));
        }
        Form {
            kind: FormKind::Alternating,
            dim,
            field,
            gram,
            quad: None,
        }
    }

    /// Standard quadratic form of the given kind and Witt index `n`:
    /// hyperbolic pairs x_{2i}·x_{2i+1} on the leading coordinates and, for
    /// the parabolic and elliptic kinds, an anisotropic tail chosen as the
    /// smallest valid coefficients for the field.
    pub fn quadratic(field: &'static Field, kind: QuadKind, n: usize) -> Form {
        assert!(n >= 1);
        let dim = match kind {
            QuadKind::Hyperbolic => 2 * n,
            QuadKind::Parabolic => 2 * n + 1,
            QuadKind::Elliptic => 2 * n + 2,
        };
        let mut quad = Matrix::zero(dim, dim);
        for i in 0..n {
            quad.set(2 * i, 2 * i + 1, 1);
        }
        match kind {
            QuadKind::Hyperbolic => {}
            QuadKind::Parabolic => {
                quad.set(2 * n, 2 * n, 1);
            }
            QuadKind::Elliptic => {
                let (b, c) = anisotropic_binary(field);
                quad.set(2 * n, 2 * n, 1);
                quad.set(2 * n, 2 * n + 1, b);
                quad.set(2 * n + 1, 2 * n + 1, c);
            }
        }
        let gram = gram_of_quadratic(field, dim, &quad);
        let form = Form {
            kind: FormKind::Quadratic(kind),
            dim,
            field,
            gram,
            quad: Some(quad),
        };
        debug_assert!(form.quadric_is_nondegenerate());
        form
    }

    /// Hermitian form with identity Gram matrix over a quadratic extension.
    #[cfg(feature = "hermitian")]
    pub fn hermitian(field: &'static Field, dim: usize) -> Form {
        assert!(field.degree() == 2, "hermitian forms need GF(p^2)");
        Form {
            kind: FormKind::Hermitian,
            dim,
            field,
            gram: Matrix::identity(dim),
            quad: None,
        }
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    /// The reflexive (sesquilinear for hermitian) form value.
    pub fn bilinear(&self, u: &[u8], v: &[u8]) -> u8 {
        let f = self.field;
        let mut acc = 0u8;
        for i in 0..self.dim {
            if u[i] == 0 {
                continue;
            }
            for j in 0..self.dim {
                let g = self.gram.at(i, j);
                if g == 0 || v[j] == 0 {
                    continue;
                }
                let vj = match self.kind {
                    #[cfg(feature = "hermitian")]
                    FormKind::Hermitian => f.conj(v[j]),
                    _ => v[j],
                };
                acc = f.add(acc, f.mul(u[i], f.mul(g, vj)));
            }
        }
        acc
    }

    /// Q(v) for the quadratic kinds.
    pub fn eval_quad(&self, v: &[u8]) -> Option<u8> {
        let quad = self.quad.as_ref()?;
        let f = self.field;
        let mut acc = 0u8;
        for i in 0..self.dim {
            if v[i] == 0 {
                continue;
            }
            for j in i..self.dim {
                let c = quad.at(i, j);
                if c != 0 && v[j] != 0 {
                    acc = f.add(acc, f.mul(c, f.mul(v[i], v[j])));
                }
            }
        }
        Some(acc)
    }

    /// A nonzero vector is singular when it can be a point of the polar
    /// geometry: always for alternating forms, `Q(v) = 0` for quadratic
    /// ones, `h(v,v) = 0` for hermitian.
    pub fn is_singular(&self, v: &[u8]) -> bool {
        match self.kind {
            FormKind::Alternating => true,
            FormKind::Quadratic(_) => self.eval_quad(v) == Some(0),
            #[cfg(feature = "hermitian")]
            FormKind::Hermitian => self.bilinear(v, v) == 0,
        }
    }

    /// Orthogonal complement with respect to the (sesqui)linear part. For a
    /// nondegenerate form `dim W + dim W^⊥ = dim V`; the parabolic quadric
    /// in characteristic 2 has a 1-dimensional bilinear radical, which then
    /// sits inside every complement.
    pub fn perp_of(&self, w: &Subspace) -> Subspace {
        let f = self.field;
        let rows: Vec<Vec<u8>> = w
            .basis_rows()
            .iter()
            .map(|wv| {
                (0..self.dim)
                    .map(|j| {
                        let mut e = vec![0u8; self.dim];
                        e[j] = 1;
                        self.bilinear(&e, wv)
                    })
                    .collect()
            })
            .collect();
        let m = Matrix::from_rows(self.dim, &rows).expect("perp rows have full width");
        nullspace(f, &m)
    }

    /// Radical of the bilinear part.
    pub fn radical(&self) -> Subspace {
        self.perp_of(&Subspace::full(self.field, self.dim))
    }

    /// Number of hyperbolic pairs split off by [`Form::decompose`] with the
    /// canonical picker: the Witt index for nondegenerate forms.
    pub fn witt_index(&self) -> usize {
        self.decompose(None).pairs.len()
    }

    /// Splits off hyperbolic pairs until the remainder contains no singular
    /// vector outside the radical of the bilinear part. `seed` randomizes
    /// the choice of each singular vector; `None` takes the first in the
    /// canonical vector order.
    pub fn decompose(&self, seed: Option<u64>) -> HyperbolicDecomposition {
        self.decompose_within(&Subspace::full(self.field, self.dim), seed)
    }

    /// [`Form::decompose`] restricted to a subspace: splitting happens
    /// entirely inside `start`, so the pair count is the Witt index of the
    /// restricted form.
    pub fn decompose_within(
        &self,
        start: &Subspace,
        seed: Option<u64>,
    ) -> HyperbolicDecomposition {
        let f = self.field;
        let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
        let mut current = start.clone();
        let mut pairs: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
        loop {
            // candidates: singular vectors not orthogonal to all of `current`
            let basis = current.basis_rows();
            let candidates: Vec<Vec<u8>> = current
                .vectors(f)
                .into_iter()
                .filter(|v| v.iter().any(|&c| c != 0))
                .filter(|v| self.is_singular(v))
                .filter(|v| basis.iter().any(|w| self.bilinear(v, w) != 0))
                .collect();
            if candidates.is_empty() {
                return HyperbolicDecomposition {
                    pairs,
                    residual: current,
                };
            }
            let v = match rng.as_mut() {
                None => candidates[0].clone(),
                Some(r) => candidates[r.gen_range(0..candidates.len())].clone(),
            };
            let raw = basis
                .iter()
                .find(|w| self.bilinear(&v, w) != 0)
                .expect("candidate meets some basis vector")
                .clone();
            // scale the partner so that b(v, w) = 1, then shift it along v
            // until it is singular; the shift cannot change b(v, ·) because
            // b(v, v) = 0 for every kind
            let c = self.bilinear(&v, &raw);
            let scale = match self.kind {
                #[cfg(feature = "hermitian")]
                FormKind::Hermitian => f.inv(f.conj(c)),
                _ => f.inv(c),
            };
            let w1: Vec<u8> = raw.iter().map(|&c| f.mul(c, scale)).collect();
            let w = f
                .elements()
                .map(|lambda| {
                    w1.iter()
                        .zip(&v)
                        .map(|(&wc, &vc)| f.add(wc, f.mul(lambda, vc)))
                        .collect::<Vec<u8>>()
                })
                .find(|w2| self.is_singular(w2))
                .expect("some shift of the partner is singular");
            debug_assert_eq!(self.bilinear(&v, &w), 1);
            let pair_span =
                Subspace::span(f, self.dim, &[v.clone(), w.clone()]).expect("pair spans");
            current = Subspace::intersect(f, &current, &self.perp_of(&pair_span));
            pairs.push((v, w));
        }
    }

    /// The standard quadrics here are nondegenerate: no nonzero singular
    /// vector is orthogonal to the whole space.
    fn quadric_is_nondegenerate(&self) -> bool {
        let rad = self.radical();
        rad.vectors(self.field)
            .iter()
            .filter(|v| v.iter().any(|&c| c != 0))
            .all(|v| !self.is_singular(v))
    }
}

/// The outcome of Witt splitting: hyperbolic pairs `(v_i, w_i)` with
/// `b(v_i, w_j) = δ_ij`, all singular, plus the orthogonal residual
/// (anisotropic part and bilinear radical).
#[derive(Debug)]
pub struct HyperbolicDecomposition {
    pub pairs: Vec<(Vec<u8>, Vec<u8>)>,
    pub residual: Subspace,
}

fn gram_of_quadratic(field: &Field, dim: usize, quad: &Matrix) -> Matrix {
    let mut gram = Matrix::zero(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            let v = if i == j {
                // b(e_i, e_i) = Q(2e_i) − 2Q(e_i) = 2·Q(e_i)
                field.add(quad.at(i, i), quad.at(i, i))
            } else if i < j {
                quad.at(i, j)
            } else {
                quad.at(j, i)
            };
            gram.set(i, j, v);
        }
    }
    gram
}

/// Coefficients `(b, c)` making `x² + bxy + cy²` anisotropic: `b = 0` with
/// `c` the negated smallest non-square in odd characteristic, `b = 1` with
/// the smallest workable `c` in characteristic 2.
fn anisotropic_binary(field: &Field) -> (u8, u8) {
    let b = if field.characteristic() == 2 { 1 } else { 0 };
    for c in 1..field.order() as u8 {
        let anisotropic = field.elements().all(|x| {
            field.elements().all(|y| {
                if x == 0 && y == 0 {
                    return true;
                }
                let xx = field.mul(x, x);
                let xy = field.mul(b, field.mul(x, y));
                let yy = field.mul(c, field.mul(y, y));
                field.add(field.add(xx, xy), yy) != 0
            })
        });
        if anisotropic {
            return (b, c);
        }
    }
    unreachable!("an anisotropic binary form exists over every finite field");
}
