//! The rewriting rules that move generators of H(m,1,n) through free tableau
//! symbols, the induced module structure on tensor products of seminormal
//! modules, decomposition via idempotent ranks, and the explicit invariant
//! subspaces of the small rank-4 products.

use std::collections::BTreeMap;

use num::BigRational;
use thiserror::Error;

use crate::combinatorics::{
    enumerate_mpartitions, enumerate_standard_tableaux, BoundaryKind, MPartition,
    StandardMTableau,
};
use crate::matrix::{Field, Matrix};
use crate::repn::{
    build_representation, jm_from_generators, idempotent_from_jms, Params, RelationFailure,
    Representation, RepnError, Vacuum,
};
use crate::scalar::{parse_ratfn, RatFn, ScalarError};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SmashError {
    #[error("tensor product needs at least one factor")]
    EmptyProduct,
    #[error("factor shapes have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("generator index {0} out of range")]
    IndexRange(usize),
    #[error("check failed: {0}")]
    Check(String),
    #[error("defining relation failed on the tensor module: {0}")]
    Relation(RelationFailure),
    #[error(transparent)]
    Repn(#[from] RepnError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A generator of H(m,1,n) to push through a tableau symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Tau,
    /// `Sigma(i)` with `1 <= i <= n - 1`.
    Sigma(usize),
}

/// One term of a push-through: `scalar * Y * (residual_id + residual_sigma *
/// sigma_i)`; for `tau` the residual is always the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct PushTerm<T> {
    pub tableau: StandardMTableau,
    pub scalar: T,
    pub residual_id: T,
    pub residual_sigma: T,
}

/// The rewriting of `g * X` as a combination of tableau symbols times
/// residual algebra elements.
#[derive(Debug, Clone, PartialEq)]
pub struct PushResult<T> {
    pub terms: Vec<PushTerm<T>>,
}

/// The diagonal and residual coefficients of the `sigma_i` rewriting rule:
/// `sigma_i * X = a * X + X^{s_i} * (sigma_i + b)` with
/// `a = (q - q^-1) c(i+1) / (c(i+1) - c(i))` and
/// `b = (q - q^-1) c(i) / (c(i+1) - c(i))`.
/// When `X^{s_i}` is non-standard the second term vanishes and `a` collapses
/// to `q` (row neighbors) or `-q^-1` (column neighbors).
fn sigma_push_coefficients<T: Field>(
    x: &StandardMTableau,
    i: usize,
    params: &Params<T>,
) -> (T, T) {
    let (k1, z1) = x.content_pair(i);
    let (k2, z2) = x.content_pair(i + 1);
    let c1 = params.content(k1, z1);
    let c2 = params.content(k2, z2);
    let den_inv = c2.sub(&c1).inv();
    let w = params.q_minus_q_inv();
    (w.mul(&c2).mul(&den_inv), w.mul(&c1).mul(&den_inv))
}

/// Rewrites `g * X` per the defining instructions.
pub fn push_through<T: Field>(
    g: Generator,
    x: &StandardMTableau,
    params: &Params<T>,
) -> Result<PushResult<T>, SmashError> {
    let one = params.one();
    let zero = params.zero();
    match g {
        Generator::Tau => {
            let (k, z) = x.content_pair(1);
            Ok(PushResult {
                terms: vec![PushTerm {
                    tableau: x.clone(),
                    scalar: params.content(k, z),
                    residual_id: one,
                    residual_sigma: zero,
                }],
            })
        }
        Generator::Sigma(i) => {
            if i == 0 || i >= x.n() {
                return Err(SmashError::IndexRange(i));
            }
            let (a, b) = sigma_push_coefficients(x, i, params);
            let mut terms = vec![PushTerm {
                tableau: x.clone(),
                scalar: a,
                residual_id: one.clone(),
                residual_sigma: zero.clone(),
            }];
            if let Some(y) = x.apply_adjacent_transposition(i) {
                terms.push(PushTerm {
                    tableau: y,
                    scalar: one,
                    residual_id: b,
                    residual_sigma: params.one(),
                });
            }
            Ok(PushResult { terms })
        }
    }
}

/// The H(m,1,n)-module on the tensor product of the spaces underlying the
/// seminormal modules of `shapes`, with basis the tuples of standard
/// m-tableaux ordered lexicographically (leftmost factor most significant).
#[derive(Debug, Clone, PartialEq)]
pub struct TensorModule<T> {
    pub m: usize,
    pub n: usize,
    pub shapes: Vec<MPartition>,
    pub factor_bases: Vec<Vec<StandardMTableau>>,
    pub tau: Matrix<T>,
    pub sigmas: Vec<Matrix<T>>,
}

impl<T: Field> TensorModule<T> {
    pub fn dim(&self) -> usize {
        self.factor_bases.iter().map(|b| b.len()).product()
    }

    pub fn generators(&self) -> Vec<&Matrix<T>> {
        let mut out = vec![&self.tau];
        out.extend(self.sigmas.iter());
        out
    }

    /// The tuple of factor-basis indices of one module basis vector.
    pub fn tuple(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factor_bases.len()];
        for (slot, basis) in out.iter_mut().zip(&self.factor_bases).rev() {
            *slot = index % basis.len();
            index /= basis.len();
        }
        out
    }

    fn index_of(&self, tuple: &[usize]) -> usize {
        let mut out = 0;
        for (idx, basis) in tuple.iter().zip(&self.factor_bases) {
            out = out * basis.len() + idx;
        }
        out
    }
}

/// Builds the tensor module by pushing each generator through the factors
/// left to right and evaluating the final residual on the vacuum
/// (`sigma_i -> q`, `tau -> v_1`; the `NegQInv` vacuum sends `sigma_i` to
/// `-q^-1` instead).
pub fn build_tensor_module<T: Field>(
    shapes: &[MPartition],
    params: &Params<T>,
    vacuum: Vacuum,
) -> Result<TensorModule<T>, SmashError> {
    let first = shapes.first().ok_or(SmashError::EmptyProduct)?;
    let n = first.size();
    for s in shapes {
        if s.size() != n {
            return Err(SmashError::SizeMismatch(n, s.size()));
        }
    }
    let factor_bases: Vec<Vec<StandardMTableau>> =
        shapes.iter().map(enumerate_standard_tableaux).collect();
    let mut module = TensorModule {
        m: params.m(),
        n,
        shapes: shapes.to_vec(),
        factor_bases,
        tau: Matrix::zeros(0, 0, &params.one()),
        sigmas: Vec::new(),
    };
    let dim = module.dim();
    let one = params.one();
    // tau never passes the leftmost factor: it acts by the first content of
    // the leftmost tableau.
    let tau_diag: Vec<T> = (0..dim)
        .map(|col| {
            let tuple = module.tuple(col);
            if n == 0 {
                return params.v(1).clone();
            }
            let x = &module.factor_bases[0][tuple[0]];
            let (k, z) = x.content_pair(1);
            params.content(k, z)
        })
        .collect();
    module.tau = Matrix::diagonal(&tau_diag);
    let vac = match vacuum {
        Vacuum::Q => params.q().clone(),
        Vacuum::NegQInv => params.q_inv().neg(),
    };
    for i in 1..n {
        let mut mat = Matrix::zeros(dim, dim, &one);
        for col in 0..dim {
            let tuple = module.tuple(col);
            // Branches carry (prefix of rewritten factor indices, residual
            // a + b sigma_i still to be pushed right).
            let mut branches: Vec<(Vec<usize>, T, T)> =
                vec![(Vec::new(), params.zero(), params.one())];
            for (f, &x_idx) in tuple.iter().enumerate() {
                let basis = &module.factor_bases[f];
                let x = &basis[x_idx];
                let mut next = Vec::with_capacity(branches.len() * 2);
                for (prefix, a, b) in branches {
                    if b.is_zero() {
                        let mut prefix = prefix;
                        prefix.push(x_idx);
                        next.push((prefix, a, b));
                        continue;
                    }
                    let (ca, cb) = sigma_push_coefficients(x, i, params);
                    let diag = a.add(&b.mul(&ca));
                    if !diag.is_zero() {
                        let mut prefix = prefix.clone();
                        prefix.push(x_idx);
                        next.push((prefix, diag, params.zero()));
                    }
                    if let Some(y) = x.apply_adjacent_transposition(i) {
                        let y_idx = basis.binary_search(&y).expect("swap stays in basis");
                        let mut prefix = prefix;
                        prefix.push(y_idx);
                        next.push((prefix, b.mul(&cb), b));
                    }
                }
                branches = next;
            }
            for (prefix, a, b) in branches {
                let scalar = a.add(&b.mul(&vac));
                if scalar.is_zero() {
                    continue;
                }
                let row = module.index_of(&prefix);
                let acc = mat.at_mut(row, col);
                *acc = acc.add(&scalar);
            }
        }
        module.sigmas.push(mat);
    }
    Ok(module)
}

/// Checks the defining relations of H(m,1,n) on the module matrices.
pub fn verify_tensor_relations<T: Field>(
    module: &TensorModule<T>,
    params: &Params<T>,
) -> Result<(), SmashError> {
    crate::repn::check_generator_relations(&module.tau, &module.sigmas, params)
        .map_err(SmashError::Relation)
}

fn decompose_matrices(
    m: usize,
    n: usize,
    tau: &Matrix<BigRational>,
    sigmas: &[Matrix<BigRational>],
    params: &Params<BigRational>,
) -> Result<Vec<(MPartition, usize)>, SmashError> {
    if n == 0 {
        // H(m,1,0) is the ground field: one copy of the trivial module per
        // basis vector.
        return Ok(vec![(MPartition::empty(m), tau.rows())]);
    }
    let jms = jm_from_generators(tau, sigmas);
    let mut out = Vec::new();
    let mut total = 0usize;
    for mu in enumerate_mpartitions(m, n) {
        let tableaux = enumerate_standard_tableaux(&mu);
        let first = tableaux.first().expect("shape has a standard tableau");
        let mult = idempotent_from_jms(first, &jms[..n], params).rank();
        if tableaux.len() > 1 {
            let last = tableaux.last().expect("non-empty");
            let check = idempotent_from_jms(last, &jms[..n], params).rank();
            if check != mult {
                return Err(SmashError::Check(format!(
                    "idempotent rank depends on the tableau choice for {}",
                    mu
                )));
            }
        }
        if mult > 0 {
            total += mult * tableaux.len();
            out.push((mu, mult));
        }
    }
    if total != tau.rows() {
        return Err(SmashError::Check(format!(
            "multiplicities account for dimension {} of {}",
            total,
            tau.rows()
        )));
    }
    Ok(out)
}

/// Decomposes the module into irreducibles at a generic rational point: the
/// multiplicity of `V_mu` is the rank of a primitive idempotent `E_X` with
/// `X` of shape `mu` (independent of the choice of `X`).
pub fn decompose(
    module: &TensorModule<BigRational>,
    params: &Params<BigRational>,
) -> Result<Vec<(MPartition, usize)>, SmashError> {
    decompose_matrices(module.m, module.n, &module.tau, &module.sigmas, params)
}

/// Restriction to H(m,1,n-1) is compatible with the tensor product: the
/// decomposition of the restricted module matches the multiset obtained by
/// removing one node from every factor and decomposing the summands.
pub fn verify_restriction_compatibility(
    shapes: &[MPartition],
    params: &Params<BigRational>,
) -> Result<(), SmashError> {
    let module = build_tensor_module(shapes, params, Vacuum::Q)?;
    let n = module.n;
    if n == 0 {
        return Err(SmashError::Check("restriction needs n >= 1".to_string()));
    }
    let restricted_sigmas = &module.sigmas[..n.saturating_sub(2)];
    let lhs = decompose_matrices(module.m, n - 1, &module.tau, restricted_sigmas, params)?;
    // Right-hand side: each removable node alpha of the leftmost factor
    // contributes the summand V_{shapes[0] \ alpha} with multiplicity the
    // product of the full dimensions of the remaining factors.
    let tail_mult: usize = shapes[1..]
        .iter()
        .map(|s| enumerate_standard_tableaux(s).len())
        .product();
    let mut rhs: BTreeMap<MPartition, usize> = BTreeMap::new();
    for alpha in shapes[0].boundary_nodes(BoundaryKind::Removable) {
        let sub = shapes[0].without_node(&alpha).expect("removable");
        *rhs.entry(sub).or_insert(0) += tail_mult;
    }
    let lhs_map: BTreeMap<MPartition, usize> = lhs.into_iter().collect();
    if lhs_map != rhs {
        return Err(SmashError::Check(format!(
            "restricted decomposition mismatch: computed {:?}, expected {:?}",
            lhs_map, rhs
        )));
    }
    Ok(())
}

/// One explicit invariant-subspace certificate: spanning vectors, given as
/// `(coefficient, leftmost factor index, rightmost factor index)` triples in
/// the stated basis labels, must satisfy `M_g * S = S * R_g` exactly for the
/// target seminormal module `R`.
struct SubspaceCase {
    left: &'static str,
    right: &'static str,
    /// Permutation sending the stated label `Y_j` (1-based) to the canonical
    /// index in the right factor basis.
    right_relabel: Vec<usize>,
    /// Each subspace is a list of vectors; each vector a list of
    /// `(coefficient, X label, Y label)` with 1-based labels.
    subspaces: Vec<Vec<Vec<(&'static str, usize, usize)>>>,
}

fn subspace_cases() -> Vec<SubspaceCase> {
    let q2 = "q^2 + q^-2";
    let nq2 = "-(q^2 + q^-2)";
    let nq3r = "-(q^3 + q^-3)/(q + q^-1)";
    vec![
        SubspaceCase {
            left: "[[2,1]]",
            right: "[[2,1]]",
            right_relabel: vec![0, 1],
            subspaces: vec![
                vec![vec![("1", 1, 2)], vec![("q^2 + 1 + q^-2", 2, 1)]],
                vec![
                    vec![("1", 1, 1), ("1", 1, 2)],
                    vec![("1", 2, 1), ("1", 2, 2)],
                ],
            ],
        },
        SubspaceCase {
            left: "[[2,1,1]]",
            right: "[[2,2]]",
            right_relabel: vec![0, 1],
            subspaces: vec![
                vec![
                    vec![("1", 1, 2)],
                    vec![("q^2 + 1 + q^-2", 2, 1)],
                    vec![("q^2 + 1 + q^-2", 3, 1)],
                ],
                vec![
                    vec![("1", 1, 1), ("1", 1, 2)],
                    vec![("1", 2, 1), ("1", 2, 2)],
                    vec![("1", 3, 1), (nq2, 3, 2)],
                ],
            ],
        },
        SubspaceCase {
            left: "[[2,1,1]]",
            right: "[[2,1,1]]",
            right_relabel: vec![0, 1, 2],
            subspaces: vec![
                vec![
                    vec![("1", 1, 2)],
                    vec![("q^2 + 1 + q^-2", 2, 1)],
                    vec![("-(q^2 + 1 + q^-2)*(q^2 + q^-2)", 3, 1)],
                ],
                vec![
                    vec![("1", 1, 1), ("1", 1, 2)],
                    vec![("1", 2, 1), ("1", 2, 2)],
                    vec![(nq2, 3, 1), (nq3r, 3, 2), ("1", 3, 3)],
                ],
                vec![
                    vec![("1", 1, 3)],
                    vec![("-(q^2 + 1 + q^-2)", 2, 3)],
                    vec![("-(q^2 + 1 + q^-2)*(q^2 + q^-2)", 3, 2)],
                ],
            ],
        },
        SubspaceCase {
            left: "[[2,1,1]]",
            right: "[[3,1]]",
            right_relabel: vec![2, 1, 0],
            subspaces: vec![
                vec![
                    vec![("1", 1, 1)],
                    vec![("q^2 + 1 + q^-2", 2, 2)],
                    vec![("(q^2 + 1 + q^-2)*(q^2 + q^-2)", 3, 3)],
                ],
                vec![
                    vec![("1", 1, 1), ("1", 1, 2)],
                    vec![("1", 2, 1), ("1", 2, 2)],
                    vec![("1", 3, 1), (q2, 3, 3)],
                ],
                vec![
                    vec![("1", 1, 3)],
                    vec![("1", 2, 3)],
                    vec![("1", 3, 2), (nq3r, 3, 3)],
                ],
            ],
        },
    ]
}

/// Verifies the explicit rank-4 subspace certificates: for each listed
/// product of single-component shapes, the stated vectors span invariant
/// subspaces on which the generators act exactly by the seminormal matrices
/// of the left factor, and the subspace dimensions fill the module.
pub fn verify_explicit_subspaces() -> Result<(), SmashError> {
    let params = Params::<RatFn>::symbolic(1);
    for case in subspace_cases() {
        let left: MPartition = case.left.parse().expect("shape literal");
        let right: MPartition = case.right.parse().expect("shape literal");
        let module = build_tensor_module(&[left.clone(), right], &params, Vacuum::Q)?;
        let target = build_representation(&left, &params, Vacuum::Q);
        let dim = module.dim();
        let right_dim = module.factor_bases[1].len();
        let mut covered = 0usize;
        for subspace in &case.subspaces {
            let k = subspace.len();
            if k != target.dim() {
                return Err(SmashError::Check(format!(
                    "subspace of {} x {} has {} vectors, target needs {}",
                    case.left,
                    case.right,
                    k,
                    target.dim()
                )));
            }
            let mut span = Matrix::zeros(dim, k, &params.one());
            for (c, vector) in subspace.iter().enumerate() {
                for &(coeff, xi, yj) in vector {
                    let row = (xi - 1) * right_dim + case.right_relabel[yj - 1];
                    let value = parse_ratfn(coeff, 1)?;
                    *span.at_mut(row, c) = span.at(row, c).checked_add(&value)?;
                }
            }
            let pairs: Vec<(&Matrix<RatFn>, &Matrix<RatFn>)> = std::iter::once(&module.tau)
                .chain(&module.sigmas)
                .zip(target.generators())
                .collect();
            for (g_idx, (mg, rg)) in pairs.into_iter().enumerate() {
                let lhs = mg.mul(&span);
                let rhs = span.mul(rg);
                if lhs != rhs {
                    return Err(SmashError::Check(format!(
                        "subspace of {} x {} is not carried by generator {}",
                        case.left, case.right, g_idx
                    )));
                }
            }
            covered += k;
        }
        if covered != dim {
            return Err(SmashError::Check(format!(
                "subspaces of {} x {} cover dimension {} of {}",
                case.left, case.right, covered, dim
            )));
        }
    }
    Ok(())
}

/// An element of the A-type Hecke subalgebra generated by the `sigma_i`, on
/// the basis `T_w` indexed by permutations in one-line notation (0-based
/// images).
#[derive(Debug, Clone, PartialEq)]
pub struct HeckeElt {
    n: usize,
    m: usize,
    terms: BTreeMap<Vec<usize>, RatFn>,
}

impl HeckeElt {
    pub fn zero(n: usize, m: usize) -> Self {
        HeckeElt { n, m, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize, m: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0..n).collect(), RatFn::one(m));
        HeckeElt { n, m, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, w: &[usize]) -> RatFn {
        self.terms.get(w).cloned().unwrap_or_else(|| RatFn::zero(self.m))
    }

    /// The coefficient of `T_e` when no other basis element appears.
    pub fn as_scalar(&self) -> Option<RatFn> {
        let e: Vec<usize> = (0..self.n).collect();
        match self.terms.len() {
            0 => Some(RatFn::zero(self.m)),
            1 => self.terms.get(&e).cloned(),
            _ => None,
        }
    }

    fn insert(terms: &mut BTreeMap<Vec<usize>, RatFn>, w: Vec<usize>, c: RatFn) {
        if c.is_zero() {
            return;
        }
        match terms.get_mut(&w) {
            Some(acc) => {
                *acc = acc.checked_add(&c).expect("same arity");
                if acc.is_zero() {
                    terms.remove(&w);
                }
            }
            None => {
                terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            Self::insert(&mut terms, w.clone(), c.clone());
        }
        HeckeElt { n: self.n, m: self.m, terms }
    }

    pub fn scale(&self, c: &RatFn) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.m);
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, x)| (w.clone(), x.checked_mul(c).expect("same arity")))
            .collect();
        HeckeElt { n: self.n, m: self.m, terms }
    }

    /// Left multiplication by `sigma_i`: `sigma_i T_w = T_{s_i w}`, plus
    /// `(q - q^-1) T_w` when the length decreases.
    pub fn left_mul_sigma(&self, i: usize, params: &Params<RatFn>) -> Self {
        assert!(i >= 1 && i < self.n, "generator index in range");
        let w_coeff = params.q_minus_q_inv();
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            let pos_lo = w.iter().position(|&v| v == i - 1).expect("value present");
            let pos_hi = w.iter().position(|&v| v == i).expect("value present");
            let mut sw = w.clone();
            sw.swap(pos_lo, pos_hi);
            if pos_lo > pos_hi {
                // Length drops: the quadratic relation adds a T_w term.
                Self::insert(&mut terms, w.clone(), c.checked_mul(&w_coeff).expect("arity"));
            }
            Self::insert(&mut terms, sw, c.clone());
        }
        HeckeElt { n: self.n, m: self.m, terms }
    }
}

/// Pushes the Jucys-Murphy word `J_i = sigma_{i-1} ... sigma_1 tau sigma_1
/// ... sigma_{i-1}` through the symbol of `x`, keeping the residuals as
/// exact Hecke-algebra elements on the `T_w` basis.
pub fn jm_push_expansion(
    x: &StandardMTableau,
    i: usize,
    params: &Params<RatFn>,
) -> Result<BTreeMap<StandardMTableau, HeckeElt>, SmashError> {
    let n = x.n();
    if i == 0 || i > n {
        return Err(SmashError::IndexRange(i));
    }
    let mut state: BTreeMap<StandardMTableau, HeckeElt> = BTreeMap::new();
    state.insert(x.clone(), HeckeElt::identity(n, params.m()));
    let mut word: Vec<Option<usize>> = Vec::new();
    for j in (1..i).rev() {
        word.push(Some(j));
    }
    word.push(None); // tau
    for j in 1..i {
        word.push(Some(j));
    }
    // Apply the word right-to-left onto the symbol.
    for letter in word.into_iter().rev() {
        let mut next: BTreeMap<StandardMTableau, HeckeElt> = BTreeMap::new();
        let mut merge = |y: StandardMTableau, h: HeckeElt| {
            if h.is_zero() {
                return;
            }
            match next.get_mut(&y) {
                Some(acc) => *acc = acc.add(&h),
                None => {
                    next.insert(y, h);
                }
            }
        };
        for (y, h) in state {
            match letter {
                None => {
                    let (k, z) = y.content_pair(1);
                    merge(y, h.scale(&params.content(k, z)));
                }
                Some(j) => {
                    let (a, b) = sigma_push_coefficients(&y, j, params);
                    if let Some(ys) = y.apply_adjacent_transposition(j) {
                        merge(ys, h.left_mul_sigma(j, params).add(&h.scale(&b)));
                    }
                    merge(y, h.scale(&a));
                }
            }
        }
        state = next;
    }
    Ok(state)
}

/// The Jucys-Murphy element passes through every tableau symbol as the pure
/// scalar `c(X|i)`: all residuals cancel in the Hecke algebra.
pub fn verify_jm_push(
    x: &StandardMTableau,
    i: usize,
    params: &Params<RatFn>,
) -> Result<(), SmashError> {
    let expansion = jm_push_expansion(x, i, params)?;
    let (k, z) = x.content_pair(i);
    let expected = params.content(k, z);
    for (y, h) in &expansion {
        if y == x {
            match h.as_scalar() {
                Some(c) if c == expected => {}
                _ => {
                    return Err(SmashError::Check(format!(
                        "J_{} residual on {} is not the content scalar",
                        i, x
                    )))
                }
            }
        } else if !h.is_zero() {
            return Err(SmashError::Check(format!(
                "J_{} leaks onto {} when pushed through {}",
                i, y, x
            )));
        }
    }
    if !expansion.contains_key(x) {
        return Err(SmashError::Check(format!("J_{} annihilates {}", i, x)));
    }
    Ok(())
}

/// JSON export of a decomposition as `[{shape, multiplicity}]`.
pub fn decomposition_json(decomposition: &[(MPartition, usize)]) -> serde_json::Value {
    serde_json::Value::Array(
        decomposition
            .iter()
            .map(|(shape, mult)| {
                serde_json::json!({
                    "shape": shape.to_string(),
                    "multiplicity": mult,
                })
            })
            .collect(),
    )
}

/// The one-factor module agrees with the seminormal construction entry by
/// entry.
pub fn single_factor_as_representation<T: Field>(
    shape: &MPartition,
    params: &Params<T>,
    vacuum: Vacuum,
) -> Result<Representation<T>, SmashError> {
    let module = build_tensor_module(std::slice::from_ref(shape), params, vacuum)?;
    Ok(Representation {
        m: module.m,
        n: module.n,
        shape: shape.clone(),
        basis: module.factor_bases.into_iter().next().expect("one factor"),
        tau: module.tau,
        sigmas: module.sigmas,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ParamSpec;

    fn mp(s: &str) -> MPartition {
        s.parse().expect("m-partition literal")
    }

    fn sym(m: usize) -> Params<RatFn> {
        Params::symbolic(m)
    }

    fn numeric(q: i64, v: &[i64], n: usize) -> Params<BigRational> {
        let spec = ParamSpec::checked(
            BigRational::new(q.into(), 1.into()),
            v.iter().map(|&x| BigRational::new(x.into(), 1.into())).collect(),
            n,
        )
        .expect("generic point");
        Params::numeric(&spec).expect("generic point")
    }

    #[test]
    fn push_through_examples() {
        let params = sym(2);
        let shape = mp("[[1],[1]]");
        let basis = enumerate_standard_tableaux(&shape);
        // tau picks the first content, with identity residual.
        let t = push_through(Generator::Tau, &basis[0], &params).unwrap();
        assert_eq!(t.terms.len(), 1);
        assert_eq!(t.terms[0].scalar, RatFn::v(2, 1).unwrap());
        assert!(t.terms[0].residual_id.is_one());
        assert!(t.terms[0].residual_sigma.is_zero());
        // sigma_1 through X_1: diagonal term plus swapped term with residual.
        let s = push_through(Generator::Sigma(1), &basis[0], &params).unwrap();
        assert_eq!(s.terms.len(), 2);
        assert_eq!(s.terms[0].scalar, parse_ratfn("-(q - q^-1)*v2/(v1 - v2)", 2).unwrap());
        assert_eq!(s.terms[1].tableau, basis[1]);
        assert_eq!(s.terms[1].residual_id, parse_ratfn("(q - q^-1)*v1/(v2 - v1)", 2).unwrap());
        assert!(s.terms[1].residual_sigma.is_one());
        // Row-adjacent entries give the single eigen term q.
        let row = mp("[[2]]");
        let row_basis = enumerate_standard_tableaux(&row);
        let e = push_through(Generator::Sigma(1), &row_basis[0], &params).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].scalar, RatFn::q(2));
        assert!(push_through(Generator::Sigma(2), &row_basis[0], &params).is_err());
    }

    #[test]
    fn single_factor_matches_seminormal() {
        for m in 1..=2usize {
            let params = sym(m);
            for n in 1..=3usize {
                for shape in enumerate_mpartitions(m, n) {
                    for vacuum in [Vacuum::Q, Vacuum::NegQInv] {
                        let direct = build_representation(&shape, &params, vacuum);
                        let via_module =
                            single_factor_as_representation(&shape, &params, vacuum).unwrap();
                        assert_eq!(direct, via_module, "shape {}", shape);
                    }
                }
            }
        }
    }

    #[test]
    fn golden_rank_four_product() {
        let params = sym(1);
        let shape = mp("[[2,1]]");
        let module =
            build_tensor_module(&[shape.clone(), shape.clone()], &params, Vacuum::Q).unwrap();
        assert_eq!(module.dim(), 4);
        let q = RatFn::q(1);
        let nqi = RatFn::q_pow(1, -1).neg();
        let sigma1 = Matrix::diagonal(&[q.clone(), q, nqi.clone(), nqi]);
        assert_eq!(module.sigmas[0], sigma1);
        let expect = [
            ["-q^-2/(q + q^-1)", "0", "0", "(q^2 + 1 + q^-2)/(q + q^-1)"],
            ["0", "-q^-2/(q + q^-1)", "1/(q + q^-1)", "(q^2 + q^-2)/(q + q^-1)"],
            ["(-q^2 - q^-2)/(q + q^-1)", "(q^2 + 1 + q^-2)/(q + q^-1)", "q^2/(q + q^-1)", "0"],
            ["1/(q + q^-1)", "0", "0", "q^2/(q + q^-1)"],
        ];
        for (r, row) in expect.iter().enumerate() {
            for (c, s) in row.iter().enumerate() {
                assert_eq!(
                    *module.sigmas[1].at(r, c),
                    parse_ratfn(s, 1).unwrap(),
                    "entry ({}, {})",
                    r,
                    c
                );
            }
        }
        verify_tensor_relations(&module, &params).unwrap();
    }

    #[test]
    fn one_row_right_factor_is_identity_twist() {
        let params = sym(2);
        for left in ["[[2,1],[]]", "[[1,1],[1]]", "[[2],[1]]"] {
            let left = mp(left);
            let varpi = mp("[[3],[]]");
            let module =
                build_tensor_module(&[left.clone(), varpi], &params, Vacuum::Q).unwrap();
            let direct = build_representation(&left, &params, Vacuum::Q);
            assert_eq!(module.tau, direct.tau, "left {}", left);
            assert_eq!(module.sigmas, direct.sigmas, "left {}", left);
        }
    }

    #[test]
    fn tensor_relations_symbolic() {
        let params = sym(2);
        let shapes = enumerate_mpartitions(2, 2);
        for a in &shapes {
            for b in &shapes {
                let module =
                    build_tensor_module(&[a.clone(), b.clone()], &params, Vacuum::Q).unwrap();
                verify_tensor_relations(&module, &params).unwrap();
            }
        }
        // A three-factor module also satisfies the relations.
        let t = mp("[[1],[1]]");
        let module =
            build_tensor_module(&[t.clone(), t.clone(), t], &params, Vacuum::Q).unwrap();
        assert_eq!(module.dim(), 8);
        verify_tensor_relations(&module, &params).unwrap();
    }

    #[test]
    fn factor_size_mismatch_is_rejected() {
        let params = sym(1);
        let err = build_tensor_module(&[mp("[[2]]"), mp("[[2,1]]")], &params, Vacuum::Q);
        assert_eq!(err, Err(SmashError::SizeMismatch(2, 3)));
        let err = build_tensor_module::<RatFn>(&[], &params, Vacuum::Q);
        assert_eq!(err, Err(SmashError::EmptyProduct));
    }

    #[test]
    fn decompose_examples() {
        let params = numeric(2, &[1], 4);
        // (2,1) x (2,1): two copies of (2,1).
        let m21 = build_tensor_module(&[mp("[[2,1]]"), mp("[[2,1]]")], &params, Vacuum::Q)
            .unwrap();
        assert_eq!(decompose(&m21, &params).unwrap(), vec![(mp("[[2,1]]"), 2)]);
        // (2,1,1) x (3,1): three copies of (2,1,1).
        let m211 = build_tensor_module(&[mp("[[2,1,1]]"), mp("[[3,1]]")], &params, Vacuum::Q)
            .unwrap();
        assert_eq!(decompose(&m211, &params).unwrap(), vec![(mp("[[2,1,1]]"), 3)]);
        // One-dimensional right factor: a single copy.
        let mrow = build_tensor_module(&[mp("[[2,1,1]]"), mp("[[4]]")], &params, Vacuum::Q)
            .unwrap();
        assert_eq!(decompose(&mrow, &params).unwrap(), vec![(mp("[[2,1,1]]"), 1)]);
    }

    #[test]
    fn decompose_all_pairs_small() {
        for (m, q, v) in [(1usize, 2i64, vec![1i64]), (2, 2, vec![1, 3])] {
            let params = numeric(q, &v, 3);
            let shapes = enumerate_mpartitions(m, 3);
            for a in &shapes {
                for b in &shapes {
                    let module =
                        build_tensor_module(&[a.clone(), b.clone()], &params, Vacuum::Q)
                            .unwrap();
                    let dim_b = enumerate_standard_tableaux(b).len();
                    assert_eq!(
                        decompose(&module, &params).unwrap(),
                        vec![(a.clone(), dim_b)],
                        "{} x {}",
                        a,
                        b
                    );
                }
            }
        }
    }

    #[test]
    fn restriction_compatibility() {
        let params1 = numeric(2, &[1], 3);
        verify_restriction_compatibility(&[mp("[[2,1]]"), mp("[[2,1]]")], &params1).unwrap();
        verify_restriction_compatibility(&[mp("[[2,1]]")], &params1).unwrap();
        let params2 = numeric(2, &[1, 3], 2);
        verify_restriction_compatibility(&[mp("[[1],[1]]"), mp("[[1],[1]]")], &params2)
            .unwrap();
    }

    #[test]
    fn explicit_subspaces() {
        verify_explicit_subspaces().unwrap();
    }

    #[test]
    fn trace_of_sigma1_sigma3() {
        // The product sigma_1 sigma_3 has trace -2 + q^-2 on the (2,1,1)
        // module, so 2(-2 + q^-2) on its product with (2,2).
        let params = sym(1);
        let module = build_tensor_module(&[mp("[[2,1,1]]"), mp("[[2,2]]")], &params, Vacuum::Q)
            .unwrap();
        let trace = module.sigmas[0].mul(&module.sigmas[2]).trace();
        let expected = parse_ratfn("2*(-2 + q^-2)", 1).unwrap();
        assert_eq!(trace, expected);
    }

    #[test]
    fn hecke_engine_relations() {
        let params = sym(1);
        let e = HeckeElt::identity(3, 1);
        // Quadratic relation: sigma_1^2 = (q - q^-1) sigma_1 + 1.
        let s1 = e.left_mul_sigma(1, &params);
        let s11 = s1.left_mul_sigma(1, &params);
        let rhs = s1.scale(&params.q_minus_q_inv()).add(&e);
        assert_eq!(s11, rhs);
        // Braid relation on the T_w basis.
        let lhs = e
            .left_mul_sigma(1, &params)
            .left_mul_sigma(2, &params)
            .left_mul_sigma(1, &params);
        let rhs = e
            .left_mul_sigma(2, &params)
            .left_mul_sigma(1, &params)
            .left_mul_sigma(2, &params);
        assert_eq!(lhs, rhs);
        assert_eq!(e.as_scalar(), Some(RatFn::one(1)));
        assert!(s1.as_scalar().is_none());
    }

    #[test]
    fn jm_words_push_as_content_scalars() {
        for m in 1..=2usize {
            let params = sym(m);
            for n in 1..=3usize {
                for shape in enumerate_mpartitions(m, n) {
                    for x in enumerate_standard_tableaux(&shape) {
                        for i in 1..=n {
                            verify_jm_push(&x, i, &params).unwrap();
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_json_shape() {
        let json = decomposition_json(&[(mp("[[2,1]]"), 2)]);
        assert_eq!(json[0]["shape"], "[[2,1]]");
        assert_eq!(json[0]["multiplicity"], 2);
    }
}
