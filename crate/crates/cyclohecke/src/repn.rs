//! Seminormal representations of H(m,1,n): construction on the standard
//! m-tableau basis, Jucys-Murphy operators, Baxterized elements,
//! intertwiners, restriction, primitive idempotents, irreducibility
//! certificates and relation checking.

use std::fmt;

use num::BigRational;
use thiserror::Error;

use crate::combinatorics::{
    enumerate_standard_tableaux, BoundaryKind, MNode, MPartition, StandardMTableau,
};
use crate::matrix::{Field, Matrix};
use crate::scalar::{
    check_genericity, GenericityViolation, ParamSpec, RatFn, ScalarError,
};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum RepnError {
    #[error("parameter point is not generic: {0:?}")]
    NonGeneric(Vec<GenericityViolation>),
    #[error("q = +-1 degenerates the seminormal denominators")]
    UnitQ,
    #[error("spectral parameters collide (alpha = beta)")]
    SpectralCollision,
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("entries {0} and {1} may not be exchanged (non-standard swap)")]
    NonStandardSwap(usize, usize),
    #[error("generator index {0} out of range")]
    IndexRange(usize),
    #[error("check failed: {0}")]
    Check(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// The parameters `(q, v_1, ..., v_m)` inside a coefficient field `T`:
/// either the symbolic fraction field or exact rationals at a generic point.
#[derive(Debug, Clone)]
pub struct Params<T> {
    m: usize,
    q: T,
    q_inv: T,
    v: Vec<T>,
}

impl Params<RatFn> {
    pub fn symbolic(m: usize) -> Self {
        Params {
            m,
            q: RatFn::q(m),
            q_inv: RatFn::q_pow(m, -1),
            v: (1..=m).map(|k| RatFn::v(m, k).expect("k <= m")).collect(),
        }
    }
}

impl Params<BigRational> {
    /// Rejects non-generic points, and `q = +-1` (where same-component
    /// contents collide and the seminormal denominators vanish).
    pub fn numeric(spec: &ParamSpec) -> Result<Self, RepnError> {
        let violations = check_genericity(spec);
        if !violations.is_empty() {
            return Err(RepnError::NonGeneric(violations));
        }
        let one = <BigRational as Field>::one_like(&spec.q);
        if spec.q == one || spec.q == Field::neg(&one) {
            return Err(RepnError::UnitQ);
        }
        Ok(Params {
            m: spec.v.len(),
            q: spec.q.clone(),
            q_inv: Field::inv(&spec.q),
            v: spec.v.clone(),
        })
    }
}

impl<T: Field> Params<T> {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn q_inv(&self) -> &T {
        &self.q_inv
    }

    pub fn v(&self, k: usize) -> &T {
        &self.v[k - 1]
    }

    /// `q - q^-1`.
    pub fn q_minus_q_inv(&self) -> T {
        self.q.sub(&self.q_inv)
    }

    /// The content `v_k * q^(2z)`.
    pub fn content(&self, k: usize, z: i64) -> T {
        let step = if z >= 0 {
            self.q.mul(&self.q)
        } else {
            self.q_inv.mul(&self.q_inv)
        };
        let mut out = self.v[k - 1].clone();
        for _ in 0..z.unsigned_abs() {
            out = out.mul(&step);
        }
        out
    }

    pub fn content_of(&self, node: &MNode) -> T {
        self.content(node.pos, node.content_z())
    }

    pub fn zero(&self) -> T {
        self.q.zero_like()
    }

    pub fn one(&self) -> T {
        self.q.one_like()
    }
}

/// Which one-dimensional module the leftover generators act on when a
/// push-through terminates: `sigma |> = q` (the default) or `sigma |> =
/// -q^-1`; `tau |> = v_1` in both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Vacuum {
    #[default]
    Q,
    NegQInv,
}

/// A representation of H(m,1,n) on the ordered standard m-tableau basis of
/// one shape: one matrix per generator, columns holding the images of the
/// basis vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation<T> {
    pub m: usize,
    pub n: usize,
    pub shape: MPartition,
    pub basis: Vec<StandardMTableau>,
    pub tau: Matrix<T>,
    pub sigmas: Vec<Matrix<T>>,
}

impl<T: Field> Representation<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn generators(&self) -> Vec<&Matrix<T>> {
        let mut out = vec![&self.tau];
        out.extend(self.sigmas.iter());
        out
    }
}

/// Builds the seminormal representation of shape `lambda`: `tau` acts
/// diagonally by first contents; `sigma_i` maps the basis vector of `X` to
///
/// ```text
/// (q - q^-1) c(i+1) / (c(i+1) - c(i)) * X
///   + (q c(i+1) - q^-1 c(i)) / (c(i+1) - c(i)) * X^{s_i}
/// ```
///
/// (with `X^{s_i} = 0` when non-standard, in which case the diagonal
/// coefficient collapses to `q` or `-q^-1`).  The `NegQInv` vacuum swaps the
/// off-diagonal coefficient for `(q c(i) - q^-1 c(i+1)) / (c(i+1) - c(i))`.
pub fn build_representation<T: Field>(
    shape: &MPartition,
    params: &Params<T>,
    vacuum: Vacuum,
) -> Representation<T> {
    let basis = enumerate_standard_tableaux(shape);
    let n = shape.size();
    let dim = basis.len();
    let one = params.one();
    let tau = if n == 0 {
        // H(m,1,0) has no generators; keep a placeholder identity.
        Matrix::identity(dim, &one)
    } else {
        let tau_diag: Vec<T> = basis
            .iter()
            .map(|x| {
                let (k, z) = x.content_pair(1);
                params.content(k, z)
            })
            .collect();
        Matrix::diagonal(&tau_diag)
    };
    let mut sigmas = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut mat = Matrix::zeros(dim, dim, &one);
        for (col, x) in basis.iter().enumerate() {
            let (k1, z1) = x.content_pair(i);
            let (k2, z2) = x.content_pair(i + 1);
            match x.apply_adjacent_transposition(i) {
                None => {
                    // i and i+1 adjacent in a row (z2 = z1 + 1) or column.
                    debug_assert!(k1 == k2 && (z2 == z1 + 1 || z2 == z1 - 1));
                    *mat.at_mut(col, col) = if z2 == z1 + 1 {
                        params.q().clone()
                    } else {
                        params.q_inv().neg()
                    };
                }
                Some(y) => {
                    let c1 = params.content(k1, z1);
                    let c2 = params.content(k2, z2);
                    let den_inv = c2.sub(&c1).inv();
                    let row = basis.binary_search(&y).expect("swap stays in the basis");
                    *mat.at_mut(col, col) = params.q_minus_q_inv().mul(&c2).mul(&den_inv);
                    let off = match vacuum {
                        Vacuum::Q => params.q().mul(&c2).sub(&params.q_inv().mul(&c1)),
                        Vacuum::NegQInv => params.q().mul(&c1).sub(&params.q_inv().mul(&c2)),
                    };
                    *mat.at_mut(row, col) = off.mul(&den_inv);
                }
            }
        }
        sigmas.push(mat);
    }
    Representation { m: params.m(), n, shape: shape.clone(), basis, tau, sigmas }
}

/// The diagonal change-of-basis constant relating the two vacua: the product
/// of `q c(j) - q^-1 c(k)` over all pairs `j < k`, skipping pairs in the
/// same component whose diagonal offsets coincide or differ by one (an
/// adjacent transposition permutes the remaining factors apart from the pair
/// `(i, i+1)` itself).  Conjugating the default-vacuum matrices by
/// `diag(c_X)` (inverse on the left) yields the `NegQInv`-vacuum matrices.
pub fn vacuum_change_constant<T: Field>(x: &StandardMTableau, params: &Params<T>) -> T {
    let mut out = params.one();
    for j in 1..=x.n() {
        for k in (j + 1)..=x.n() {
            let (kj, zj) = x.content_pair(j);
            let (kk, zk) = x.content_pair(k);
            if kj == kk && (zj - zk).abs() <= 1 {
                continue;
            }
            let cj = params.content(kj, zj);
            let ck = params.content(kk, zk);
            out = out.mul(&params.q().mul(&cj).sub(&params.q_inv().mul(&ck)));
        }
    }
    out
}

/// A failed defining relation, with the first differing matrix entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: String,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for RelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "relation {} fails at entry ({}, {})", self.relation, self.row, self.col)
    }
}

/// Checks all defining relations of H(m,1,n) on arbitrary generator
/// matrices: braid, far commutation, the mixed `tau sigma_1 tau sigma_1`
/// relation, `tau sigma_i = sigma_i tau` for `i > 1`, the quadratic relation
/// and the cyclotomic relation.
pub fn check_generator_relations<T: Field>(
    tau: &Matrix<T>,
    sigmas: &[Matrix<T>],
    params: &Params<T>,
) -> Result<(), RelationFailure> {
    let dim = tau.rows();
    if dim == 0 {
        return Ok(());
    }
    let one = params.one();
    let id = Matrix::identity(dim, &one);
    let expect_eq = |name: String, a: &Matrix<T>, b: &Matrix<T>| -> Result<(), RelationFailure> {
        match a.first_difference(b) {
            None => Ok(()),
            Some((row, col)) => Err(RelationFailure { relation: name, row, col }),
        }
    };
    for (i0, s) in sigmas.iter().enumerate() {
        let lhs = s.mul(s);
        let rhs = s.scale(&params.q_minus_q_inv()).add(&id);
        expect_eq(format!("sigma_{}^2 = (q - q^-1) sigma_{} + 1", i0 + 1, i0 + 1), &lhs, &rhs)?;
    }
    for i0 in 0..sigmas.len().saturating_sub(1) {
        let a = &sigmas[i0];
        let b = &sigmas[i0 + 1];
        let lhs = a.mul(&b.mul(a));
        let rhs = b.mul(&a.mul(b));
        expect_eq(
            format!("braid relation for sigma_{}, sigma_{}", i0 + 1, i0 + 2),
            &lhs,
            &rhs,
        )?;
    }
    for i0 in 0..sigmas.len() {
        for j0 in i0 + 2..sigmas.len() {
            let lhs = sigmas[i0].mul(&sigmas[j0]);
            let rhs = sigmas[j0].mul(&sigmas[i0]);
            expect_eq(
                format!("commutation of sigma_{} and sigma_{}", i0 + 1, j0 + 1),
                &lhs,
                &rhs,
            )?;
        }
    }
    if let Some(s1) = sigmas.first() {
        let ts = tau.mul(s1);
        let st = s1.mul(tau);
        expect_eq(
            "tau sigma_1 tau sigma_1 = sigma_1 tau sigma_1 tau".to_string(),
            &ts.mul(&ts),
            &st.mul(&st),
        )?;
    }
    for (i0, s) in sigmas.iter().enumerate().skip(1) {
        expect_eq(
            format!("commutation of tau and sigma_{}", i0 + 1),
            &tau.mul(s),
            &s.mul(tau),
        )?;
    }
    let mut cyclo = id;
    for k in 1..=params.m() {
        let factor = tau.sub(&Matrix::identity(dim, &one).scale(params.v(k)));
        cyclo = cyclo.mul(&factor);
    }
    let zero = Matrix::zeros(dim, dim, &one);
    expect_eq("cyclotomic relation (tau - v_1)...(tau - v_m) = 0".to_string(), &cyclo, &zero)?;
    Ok(())
}

pub fn verify_defining_relations<T: Field>(
    rep: &Representation<T>,
    params: &Params<T>,
) -> Result<(), RelationFailure> {
    if rep.n == 0 {
        // H(m,1,0) has no generators.
        return Ok(());
    }
    check_generator_relations(&rep.tau, &rep.sigmas, params)
}

/// Jucys-Murphy matrices `J_1 = tau`, `J_{i+1} = sigma_i J_i sigma_i` for
/// arbitrary generator matrices.
pub fn jm_from_generators<T: Field>(tau: &Matrix<T>, sigmas: &[Matrix<T>]) -> Vec<Matrix<T>> {
    let mut out = vec![tau.clone()];
    for s in sigmas {
        let prev = out.last().expect("J_1 present");
        out.push(s.mul(&prev.mul(s)));
    }
    out
}

/// The `n` Jucys-Murphy matrices of a representation; diagonal with the
/// content strings of the basis on the diagonal.
pub fn jm_matrices<T: Field>(rep: &Representation<T>) -> Vec<Matrix<T>> {
    jm_from_generators(&rep.tau, &rep.sigmas)
}

/// The Baxterized generator `sigma_i(alpha, beta) = sigma_i +
/// (q - q^-1) beta / (alpha - beta)`.
pub fn baxterized_sigma<T: Field>(
    rep: &Representation<T>,
    i: usize,
    alpha: &T,
    beta: &T,
    params: &Params<T>,
) -> Result<Matrix<T>, RepnError> {
    if i == 0 || i > rep.sigmas.len() {
        return Err(RepnError::IndexRange(i));
    }
    let diff = alpha.sub(beta);
    if diff.is_zero() {
        return Err(RepnError::SpectralCollision);
    }
    let shift = params.q_minus_q_inv().mul(beta).mul(&diff.inv());
    let id = Matrix::identity(rep.dim(), &params.one());
    Ok(rep.sigmas[i - 1].add(&id.scale(&shift)))
}

/// The function `f(alpha, beta) = (q alpha - q^-1 beta)/(alpha - beta)`
/// appearing in the Baxterized inversion relation.
pub fn baxter_f<T: Field>(alpha: &T, beta: &T, params: &Params<T>) -> T {
    params
        .q()
        .mul(alpha)
        .sub(&params.q_inv().mul(beta))
        .mul(&alpha.sub(beta).inv())
}

/// Checks the three Baxterized relations at fixed generic spectral
/// parameters `v1 q^(2k)`, k = 0, 1, 2, 3: the inversion relation
/// `sigma_i(a, b) sigma_i(b, a) = f(a, b) f(b, a)` for every `i`, the
/// spectral braid relation
/// `sigma_i(a, b) sigma_{i+1}(a, g) sigma_i(b, g)
///  = sigma_{i+1}(b, g) sigma_i(a, g) sigma_{i+1}(a, b)`
/// for adjacent pairs, and far commutation
/// `sigma_i(a, b) sigma_j(g, d) = sigma_j(g, d) sigma_i(a, b)` for
/// `|i - j| > 1`.
pub fn verify_baxter_relations<T: Field>(
    rep: &Representation<T>,
    params: &Params<T>,
) -> Result<(), RepnError> {
    let q2 = params.q().mul(params.q());
    let a = params.v(1).clone();
    let b = q2.mul(&a);
    let g = q2.mul(&b);
    let d = q2.mul(&g);
    let fail = |what: String| RepnError::Check(what);
    let nsig = rep.sigmas.len();
    for i in 1..=nsig {
        let lhs = baxterized_sigma(rep, i, &a, &b, params)?
            .mul(&baxterized_sigma(rep, i, &b, &a, params)?);
        let f = baxter_f(&a, &b, params).mul(&baxter_f(&b, &a, params));
        let rhs = Matrix::identity(rep.dim(), &params.one()).scale(&f);
        if lhs.first_difference(&rhs).is_some() {
            return Err(fail(format!("Baxterized inversion fails at sigma_{}", i)));
        }
    }
    for i in 1..nsig {
        let lhs = baxterized_sigma(rep, i, &a, &b, params)?
            .mul(&baxterized_sigma(rep, i + 1, &a, &g, params)?)
            .mul(&baxterized_sigma(rep, i, &b, &g, params)?);
        let rhs = baxterized_sigma(rep, i + 1, &b, &g, params)?
            .mul(&baxterized_sigma(rep, i, &a, &g, params)?)
            .mul(&baxterized_sigma(rep, i + 1, &a, &b, params)?);
        if lhs.first_difference(&rhs).is_some() {
            return Err(fail(format!(
                "Baxterized braid relation fails at sigma_{}, sigma_{}",
                i,
                i + 1
            )));
        }
    }
    for i in 1..=nsig {
        for j in (i + 2)..=nsig {
            let x = baxterized_sigma(rep, i, &a, &b, params)?;
            let y = baxterized_sigma(rep, j, &g, &d, params)?;
            if x.mul(&y).first_difference(&y.mul(&x)).is_some() {
                return Err(fail(format!(
                    "Baxterized far commutation fails at sigma_{}, sigma_{}",
                    i, j
                )));
            }
        }
    }
    Ok(())
}

/// Intertwiners `U_{i+1} = sigma_i J_i - J_i sigma_i`; the column of `X` is
/// `(q^-1 c(i) - q c(i+1)) X^{s_i}`.
pub fn intertwiner_matrices<T: Field>(rep: &Representation<T>) -> Vec<Matrix<T>> {
    let jms = jm_matrices(rep);
    rep.sigmas
        .iter()
        .zip(&jms)
        .map(|(s, j)| s.mul(j).sub(&j.mul(s)))
        .collect()
}

/// Restriction to H(m,1,n-1): partitions the basis by the shape of the
/// entries `1, ..., n-1`; returns the blocks as representations in canonical
/// basis order, sorted by shape in the canonical m-partition order.
pub fn restriction<T: Field>(rep: &Representation<T>) -> Vec<(MPartition, Representation<T>)> {
    assert!(rep.n >= 1, "restriction needs n >= 1");
    let mut groups: Vec<(MPartition, Vec<usize>)> = Vec::new();
    for (idx, x) in rep.basis.iter().enumerate() {
        let sub = x.restricted(rep.n - 1).shape().clone();
        match groups.iter_mut().find(|(s, _)| *s == sub) {
            Some((_, v)) => v.push(idx),
            None => groups.push((sub, vec![idx])),
        }
    }
    groups.sort_by(|a, b| b.0.cmp(&a.0));
    groups
        .into_iter()
        .map(|(mu, mut indices)| {
            // Canonical order of the sub-tableaux.
            indices.sort_by_key(|&idx| rep.basis[idx].restricted(rep.n - 1));
            let pick = |mat: &Matrix<T>| {
                Matrix::from_fn(indices.len(), indices.len(), |r, c| {
                    mat.at(indices[r], indices[c]).clone()
                })
            };
            let block = Representation {
                m: rep.m,
                n: rep.n - 1,
                shape: mu.clone(),
                basis: indices.iter().map(|&idx| rep.basis[idx].restricted(rep.n - 1)).collect(),
                tau: pick(&rep.tau),
                sigmas: rep.sigmas[..rep.n.saturating_sub(2)].iter().map(pick).collect(),
            };
            (mu, block)
        })
        .collect()
}

/// The primitive idempotent `E_X` evaluated on given JM matrices:
/// the product over `k = 1, ..., n` of
/// `prod_{beta addable to sh(X|k-1), beta != alpha_k}
///  (J_k - c(beta)) / (c(alpha_k) - c(beta))`.
pub fn idempotent_from_jms<T: Field>(
    x: &StandardMTableau,
    jms: &[Matrix<T>],
    params: &Params<T>,
) -> Matrix<T> {
    let dim = jms[0].rows();
    let one = params.one();
    let mut e = Matrix::identity(dim, &one);
    for k in 1..=x.n() {
        let alpha = *x.node_of(k);
        let mu = x.restricted(k - 1);
        let c_alpha = params.content_of(&alpha);
        for beta in mu.shape().boundary_nodes(BoundaryKind::Addable) {
            if beta == alpha {
                continue;
            }
            let c_beta = params.content_of(&beta);
            let scale = c_alpha.sub(&c_beta).inv();
            let factor = jms[k - 1]
                .sub(&Matrix::identity(dim, &one).scale(&c_beta))
                .scale(&scale);
            e = e.mul(&factor);
        }
    }
    e
}

/// The idempotent `E_X` inside an ambient representation of the same (m, n):
/// the diagonal unit at `X` when the shapes agree, the zero matrix otherwise.
pub fn idempotent<T: Field>(
    x: &StandardMTableau,
    ambient: &Representation<T>,
    params: &Params<T>,
) -> Matrix<T> {
    idempotent_from_jms(x, &jm_matrices(ambient), params)
}

/// Checks the matrix-unit identity
/// `rho(sigma_i + (q - q^-1) c(i+1)/(c(i) - c(i+1))) E_X
///  = E_{X^{s_i}} rho(sigma_i + (q - q^-1) c(i)/(c(i+1) - c(i)))`
/// inside the given representation, and that the left side is nonzero when
/// the ambient shape matches `X`.
pub fn verify_matrix_unit_identity<T: Field>(
    rep: &Representation<T>,
    i: usize,
    x: &StandardMTableau,
    params: &Params<T>,
) -> Result<(), RepnError> {
    if i == 0 || i > rep.sigmas.len() {
        return Err(RepnError::IndexRange(i));
    }
    let y = x
        .apply_adjacent_transposition(i)
        .ok_or(RepnError::NonStandardSwap(i, i + 1))?;
    let jms = jm_matrices(rep);
    let e_x = idempotent_from_jms(x, &jms, params);
    let e_y = idempotent_from_jms(&y, &jms, params);
    let (k1, z1) = x.content_pair(i);
    let (k2, z2) = x.content_pair(i + 1);
    let c1 = params.content(k1, z1);
    let c2 = params.content(k2, z2);
    let id = Matrix::identity(rep.dim(), &params.one());
    let lhs_shift = params.q_minus_q_inv().mul(&c2).mul(&c1.sub(&c2).inv());
    let rhs_shift = params.q_minus_q_inv().mul(&c1).mul(&c2.sub(&c1).inv());
    let sigma = &rep.sigmas[i - 1];
    let lhs = sigma.add(&id.scale(&lhs_shift)).mul(&e_x);
    let rhs = e_y.mul(&sigma.add(&id.scale(&rhs_shift)));
    if lhs != rhs {
        return Err(RepnError::Check("matrix-unit identity".to_string()));
    }
    if *x.shape() == rep.shape && lhs.is_zero() {
        return Err(RepnError::Check("matrix-unit product vanished".to_string()));
    }
    Ok(())
}

/// Matrices of an irreducible representation of the affine Hecke algebra of
/// type A1 on generators `X, Y, sigma`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineH2Rep<T> {
    pub x: Matrix<T>,
    pub y: Matrix<T>,
    pub sigma: Matrix<T>,
}

/// One-dimensional: `X -> a`, `Y -> q^(2 eps) a`, `sigma -> eps q^eps`.
pub fn h2_one_dimensional<T: Field>(a: &T, eps: i8, params: &Params<T>) -> AffineH2Rep<T> {
    assert!(eps == 1 || eps == -1, "eps must be +-1");
    let (qe, q2) = if eps == 1 {
        (params.q().clone(), params.q().mul(params.q()))
    } else {
        (params.q_inv().neg(), params.q_inv().mul(params.q_inv()))
    };
    AffineH2Rep {
        x: Matrix::diagonal(&[a.clone()]),
        y: Matrix::diagonal(&[q2.mul(a)]),
        sigma: Matrix::diagonal(&[qe]),
    }
}

/// Two-dimensional, in the basis diagonalizing `X = diag(a, b)`:
/// `Y = diag(b, a)` and
/// `sigma = [[(q - q^-1) b/(b - a), 1 - (q - q^-1)^2 a b/(b - a)^2], [1, -(q - q^-1) a/(b - a)]]`.
pub fn h2_two_dimensional<T: Field>(
    a: &T,
    b: &T,
    params: &Params<T>,
) -> Result<AffineH2Rep<T>, RepnError> {
    let q2 = params.q().mul(params.q());
    let q2i = params.q_inv().mul(params.q_inv());
    if b.sub(a).is_zero() {
        return Err(RepnError::Degenerate("b = a".to_string()));
    }
    if b.sub(&q2.mul(a)).is_zero() || b.sub(&q2i.mul(a)).is_zero() {
        return Err(RepnError::Degenerate("b = q^(+-2) a".to_string()));
    }
    let d_inv = b.sub(a).inv();
    let w = params.q_minus_q_inv();
    let mut sigma = Matrix::zeros(2, 2, a);
    *sigma.at_mut(0, 0) = w.mul(b).mul(&d_inv);
    *sigma.at_mut(0, 1) = params
        .one()
        .sub(&w.mul(&w).mul(a).mul(b).mul(&d_inv).mul(&d_inv));
    *sigma.at_mut(1, 0) = params.one();
    *sigma.at_mut(1, 1) = w.mul(a).mul(&d_inv).neg();
    Ok(AffineH2Rep {
        x: Matrix::diagonal(&[a.clone(), b.clone()]),
        y: Matrix::diagonal(&[b.clone(), a.clone()]),
        sigma,
    })
}

/// Dimension of the commutant `{M : [M, rho(g)] = 0 for all generators g}`
/// by exact rational nullspace of the stacked commutator system; 1 certifies
/// irreducibility at the given generic point.
pub fn commutant_dimension(rep: &Representation<BigRational>) -> usize {
    let d = rep.dim();
    if d == 0 {
        return 0;
    }
    let gens = rep.generators();
    let zero = <BigRational as num::Zero>::zero();
    let mut system = Matrix::zeros(gens.len() * d * d, d * d, &zero);
    for (g_idx, g) in gens.iter().enumerate() {
        for r in 0..d {
            for s in 0..d {
                let row = (g_idx * d + r) * d + s;
                for k in 0..d {
                    // d/d(M[r][k]) of (M g)[r][s]  and  -d/d(M[k][s]) of (g M)[r][s].
                    let acc = system.at_mut(row, r * d + k);
                    *acc = Field::add(acc, g.at(k, s));
                    let acc = system.at_mut(row, k * d + s);
                    *acc = Field::sub(acc, g.at(r, k));
                }
            }
        }
    }
    system.nullspace_dim()
}

/// One letter of a word in the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    Tau { inverse: bool },
    Sigma { i: usize, inverse: bool },
}

/// Trace of the product of generator matrices.  `sigma_i^-1` uses the
/// quadratic relation (`sigma^-1 = sigma - (q - q^-1)`); `tau^-1` inverts
/// the diagonal matrix.
pub fn word_trace<T: Field>(
    rep: &Representation<T>,
    word: &[Letter],
    params: &Params<T>,
) -> Result<T, RepnError> {
    let mut acc = Matrix::identity(rep.dim(), &params.one());
    for letter in word {
        let factor = match *letter {
            Letter::Tau { inverse: false } => rep.tau.clone(),
            Letter::Tau { inverse: true } => rep
                .tau
                .inverse()
                .ok_or_else(|| RepnError::Degenerate("tau is singular".to_string()))?,
            Letter::Sigma { i, inverse } => {
                if i == 0 || i > rep.sigmas.len() {
                    return Err(RepnError::IndexRange(i));
                }
                let s = &rep.sigmas[i - 1];
                if inverse {
                    let id = Matrix::identity(rep.dim(), &params.one());
                    s.sub(&id.scale(&params.q_minus_q_inv()))
                } else {
                    s.clone()
                }
            }
        };
        acc = acc.mul(&factor);
    }
    Ok(acc.trace())
}

/// Specializes a symbolic representation at a generic rational point.
pub fn specialize_representation(
    rep: &Representation<RatFn>,
    spec: &ParamSpec,
) -> Result<Representation<BigRational>, RepnError> {
    let violations = check_genericity(spec);
    if !violations.is_empty() {
        return Err(RepnError::NonGeneric(violations));
    }
    let sp = |mat: &Matrix<RatFn>| mat.try_map(|f| crate::scalar::specialize(f, spec));
    Ok(Representation {
        m: rep.m,
        n: rep.n,
        shape: rep.shape.clone(),
        basis: rep.basis.clone(),
        tau: sp(&rep.tau)?,
        sigmas: rep.sigmas.iter().map(sp).collect::<Result<_, _>>()?,
    })
}

fn matrix_json(mat: &Matrix<RatFn>) -> serde_json::Value {
    serde_json::Value::Array(
        (0..mat.rows())
            .map(|r| {
                serde_json::Value::Array(
                    (0..mat.cols())
                        .map(|c| serde_json::Value::String(mat.at(r, c).to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// JSON form of a symbolic representation:
/// `{shape, basis: [tableau], generators: {tau: [[ratfn]], sigma: [[[ratfn]]]}}`
/// with all scalars rendered in the canonical rational-function grammar.
pub fn representation_json(rep: &Representation<RatFn>) -> serde_json::Value {
    serde_json::json!({
        "shape": rep.shape.to_string(),
        "basis": rep.basis.iter().map(|x| x.to_string()).collect::<Vec<String>>(),
        "generators": {
            "tau": matrix_json(&rep.tau),
            "sigma": rep.sigmas.iter().map(matrix_json).collect::<Vec<serde_json::Value>>(),
        },
    })
}

/// Parses the JSON produced by `representation_json` back into a symbolic
/// representation (the round trip is exact).
pub fn representation_from_json(
    value: &serde_json::Value,
) -> Result<Representation<RatFn>, RepnError> {
    let bad = |what: &str| RepnError::Check(format!("malformed representation JSON: {}", what));
    let shape: MPartition = value
        .get("shape")
        .and_then(serde_json::Value::as_str)
        .ok_or_else(|| bad("shape"))?
        .parse()
        .map_err(|_| bad("shape"))?;
    let m = shape.components().len();
    let basis = value
        .get("basis")
        .and_then(serde_json::Value::as_array)
        .ok_or_else(|| bad("basis"))?
        .iter()
        .map(|s| {
            s.as_str()
                .ok_or_else(|| bad("basis entry"))?
                .parse::<StandardMTableau>()
                .map_err(|_| bad("basis entry"))
        })
        .collect::<Result<Vec<StandardMTableau>, RepnError>>()?;
    let parse_matrix = |v: &serde_json::Value| -> Result<Matrix<RatFn>, RepnError> {
        let rows = v.as_array().ok_or_else(|| bad("matrix"))?;
        let mut entries: Vec<Vec<RatFn>> = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row.as_array().ok_or_else(|| bad("matrix row"))?;
            if row.len() != rows.len() {
                return Err(bad("matrix is not square"));
            }
            entries.push(
                row.iter()
                    .map(|s| {
                        crate::scalar::parse_ratfn(
                            s.as_str().ok_or_else(|| bad("matrix entry"))?,
                            m,
                        )
                        .map_err(RepnError::Scalar)
                    })
                    .collect::<Result<Vec<RatFn>, RepnError>>()?,
            );
        }
        if entries.len() != basis.len() {
            return Err(bad("matrix dimension"));
        }
        Ok(Matrix::from_fn(entries.len(), entries.len(), |r, c| entries[r][c].clone()))
    };
    let generators = value.get("generators").ok_or_else(|| bad("generators"))?;
    let tau = parse_matrix(generators.get("tau").ok_or_else(|| bad("tau"))?)?;
    let sigmas = generators
        .get("sigma")
        .and_then(serde_json::Value::as_array)
        .ok_or_else(|| bad("sigma"))?
        .iter()
        .map(parse_matrix)
        .collect::<Result<Vec<Matrix<RatFn>>, RepnError>>()?;
    let n = shape.size();
    if sigmas.len() != n.saturating_sub(1) {
        return Err(bad("sigma count"));
    }
    Ok(Representation { m, n, shape, basis, tau, sigmas })
}
