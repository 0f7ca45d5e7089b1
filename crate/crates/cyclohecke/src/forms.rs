//! Invariant bilinear and sesquilinear forms on the seminormal modules:
//! closed-form diagonal Gram matrices, the invariance laws they satisfy and
//! the rescaled (tilde) basis variants.

use thiserror::Error;

use crate::combinatorics::{MPartition, StandardMTableau};
use crate::matrix::{Field, Matrix};
use crate::repn::{Params, Representation, RepnError};
use crate::scalar::{apply_omega, q_number, RatFn, ScalarError};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum FormsError {
    #[error("degenerate parameters: contents {0} and {1} of a basis tableau coincide")]
    ContentCollision(usize, usize),
    #[error("basis mismatch between representation and Gram matrix")]
    BasisMismatch,
    #[error("invariance law `{law}` fails for generator {generator} at entry ({row}, {col})")]
    Invariance { law: String, generator: String, row: usize, col: usize },
    #[error("Gram diagonal entry for {0} is not omega-stable")]
    NotOmegaStable(String),
    #[error(transparent)]
    Repn(#[from] RepnError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A diagonal Gram matrix on the ordered standard m-tableau basis of one
/// shape.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix<T> {
    pub shape: MPartition,
    pub basis: Vec<StandardMTableau>,
    pub diag: Vec<T>,
}

impl<T: Field> GramMatrix<T> {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn to_matrix(&self) -> Matrix<T> {
        Matrix::diagonal(&self.diag)
    }

    pub fn entry(&self, x: &StandardMTableau) -> Option<&T> {
        self.basis.iter().position(|b| b == x).map(|i| &self.diag[i])
    }
}

/// Whether the pair of positions `(j, k)` of a tableau contributes a factor
/// to its Gram entry: pairs in the same component whose diagonal offsets
/// coincide or differ by one are skipped.
fn pair_contributes(x: &StandardMTableau, j: usize, k: usize) -> bool {
    let (kj, zj) = x.content_pair(j);
    let (kk, zk) = x.content_pair(k);
    !(kj == kk && (zj - zk).abs() <= 1)
}

/// The diagonal Gram entry of one tableau: the product over contributing
/// pairs `j < k` of `(q^-1 c(j) - q c(k)) / (c(j) - c(k))`.
pub fn gram_entry<T: Field>(x: &StandardMTableau, params: &Params<T>) -> Result<T, FormsError> {
    let mut out = params.one();
    for j in 1..=x.n() {
        for k in (j + 1)..=x.n() {
            if !pair_contributes(x, j, k) {
                continue;
            }
            let (kj, zj) = x.content_pair(j);
            let (kk, zk) = x.content_pair(k);
            let cj = params.content(kj, zj);
            let ck = params.content(kk, zk);
            let den = cj.sub(&ck);
            if den.is_zero() {
                return Err(FormsError::ContentCollision(j, k));
            }
            let num = params.q_inv().mul(&cj).sub(&params.q().mul(&ck));
            out = out.mul(&num).mul(&den.inv());
        }
    }
    Ok(out)
}

/// The diagonal Gram matrix of a shape, on the canonically ordered standard
/// m-tableau basis.
pub fn gram_matrix<T: Field>(
    shape: &MPartition,
    params: &Params<T>,
) -> Result<GramMatrix<T>, FormsError> {
    let basis = crate::combinatorics::enumerate_standard_tableaux(shape);
    let diag = basis
        .iter()
        .map(|x| gram_entry(x, params))
        .collect::<Result<Vec<T>, _>>()?;
    Ok(GramMatrix { shape: shape.clone(), basis, diag })
}

/// The multiplicative update of the Gram entry under an admissible adjacent
/// transposition: `g(X^{s_i}) = g(X) * (q c(i) - q^-1 c(i+1)) /
/// (q^-1 c(i) - q c(i+1))`, contents taken in `X`.
pub fn neighbor_ratio<T: Field>(
    x: &StandardMTableau,
    i: usize,
    params: &Params<T>,
) -> Result<T, FormsError> {
    let (k1, z1) = x.content_pair(i);
    let (k2, z2) = x.content_pair(i + 1);
    let c1 = params.content(k1, z1);
    let c2 = params.content(k2, z2);
    let den = params.q_inv().mul(&c1).sub(&params.q().mul(&c2));
    if den.is_zero() {
        return Err(FormsError::ContentCollision(i, i + 1));
    }
    let num = params.q().mul(&c1).sub(&params.q_inv().mul(&c2));
    Ok(num.mul(&den.inv()))
}

/// The two invariance laws a diagonal Gram matrix satisfies against the
/// generator matrices `A` of its module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvarianceLaw {
    /// `A^t G = G A`: the form is invariant under the antiautomorphism that
    /// fixes each generator.
    Transpose,
    /// `A^t G omega(A) = G`, with `omega` inverting `q` and every `v_k`
    /// entrywise.
    OmegaSesquilinear,
}

impl InvarianceLaw {
    fn name(self) -> &'static str {
        match self {
            InvarianceLaw::Transpose => "A^t G = G A",
            InvarianceLaw::OmegaSesquilinear => "A^t G omega(A) = G",
        }
    }
}

fn generator_names(rep: &Representation<RatFn>) -> Vec<String> {
    let mut names = vec!["tau".to_string()];
    names.extend((1..rep.n).map(|i| format!("sigma{}", i)));
    names
}

/// Checks one invariance law for every generator of the module.
pub fn verify_invariance(
    rep: &Representation<RatFn>,
    gram: &GramMatrix<RatFn>,
    law: InvarianceLaw,
) -> Result<(), FormsError> {
    if rep.basis != gram.basis {
        return Err(FormsError::BasisMismatch);
    }
    let g = gram.to_matrix();
    for (name, a) in generator_names(rep).into_iter().zip(rep.generators()) {
        let lhs;
        let rhs;
        match law {
            InvarianceLaw::Transpose => {
                lhs = a.transpose().mul(&g);
                rhs = g.mul(a);
            }
            InvarianceLaw::OmegaSesquilinear => {
                lhs = a.transpose().mul(&g).mul(&a.map(apply_omega));
                rhs = g.clone();
            }
        }
        if let Some((row, col)) = lhs.first_difference(&rhs) {
            return Err(FormsError::Invariance {
                law: law.name().to_string(),
                generator: name,
                row,
                col,
            });
        }
    }
    Ok(())
}

/// The module rewritten on the rescaled basis `g_X * X`: each generator
/// matrix `A` becomes `D A D^-1` with `D = diag(g)`.
pub fn tilde_basis_representation(
    rep: &Representation<RatFn>,
    gram: &GramMatrix<RatFn>,
) -> Result<Representation<RatFn>, FormsError> {
    if rep.basis != gram.basis {
        return Err(FormsError::BasisMismatch);
    }
    let d = gram.to_matrix();
    let d_inv = Matrix::diagonal(
        &gram.diag.iter().map(|g| g.inv()).collect::<Vec<RatFn>>(),
    );
    let conj = |a: &Matrix<RatFn>| d.mul(a).mul(&d_inv);
    Ok(Representation {
        m: rep.m,
        n: rep.n,
        shape: rep.shape.clone(),
        basis: rep.basis.clone(),
        tau: conj(&rep.tau),
        sigmas: rep.sigmas.iter().map(conj).collect(),
    })
}

/// Checks the rescaled-basis forms of the invariance laws: on the tilde
/// basis the generators satisfy `A G = G A^t` and `A G omega(A)^t = G`.
pub fn verify_invariance_tilde(
    rep: &Representation<RatFn>,
    gram: &GramMatrix<RatFn>,
    law: InvarianceLaw,
) -> Result<(), FormsError> {
    let tilde = tilde_basis_representation(rep, gram)?;
    let g = gram.to_matrix();
    for (name, a) in generator_names(&tilde).into_iter().zip(tilde.generators()) {
        let lhs;
        let rhs;
        match law {
            InvarianceLaw::Transpose => {
                lhs = a.mul(&g);
                rhs = g.mul(&a.transpose());
            }
            InvarianceLaw::OmegaSesquilinear => {
                lhs = a.mul(&g).mul(&a.map(apply_omega).transpose());
                rhs = g.clone();
            }
        }
        if let Some((row, col)) = lhs.first_difference(&rhs) {
            return Err(FormsError::Invariance {
                law: format!("tilde {}", law.name()),
                generator: name,
                row,
                col,
            });
        }
    }
    Ok(())
}

/// Every symbolic Gram entry is fixed by `omega` (inverting `q` and the
/// `v_k` leaves each factor unchanged).
pub fn verify_omega_stability(gram: &GramMatrix<RatFn>) -> Result<(), FormsError> {
    for (x, g) in gram.basis.iter().zip(&gram.diag) {
        if apply_omega(g) != *g {
            return Err(FormsError::NotOmegaStable(x.to_string()));
        }
    }
    Ok(())
}

/// For `m = 1` the Gram entry collapses to a ratio of q-numbers: the product
/// over contributing pairs of `(d - 1)_q / d_q`, with `d` the difference of
/// diagonal offsets.
pub fn gram_entry_qnumbers(x: &StandardMTableau) -> Result<RatFn, FormsError> {
    assert_eq!(x.m(), 1, "q-number form is specific to m = 1");
    let mut out = RatFn::one(1);
    for j in 1..=x.n() {
        for k in (j + 1)..=x.n() {
            if !pair_contributes(x, j, k) {
                continue;
            }
            let (_, zj) = x.content_pair(j);
            let (_, zk) = x.content_pair(k);
            let d = zj - zk;
            let num = q_number(1, d - 1);
            let den = q_number(1, d);
            if den.is_zero() {
                return Err(FormsError::ContentCollision(j, k));
            }
            out = out.checked_mul(&num.checked_div(&den)?)?;
        }
    }
    Ok(out)
}

/// JSON export of the Gram diagonal, keyed by the rendered basis tableaux.
pub fn export_json(gram: &GramMatrix<RatFn>) -> serde_json::Value {
    serde_json::json!({
        "shape": gram.shape.to_string(),
        "diagonal": gram
            .basis
            .iter()
            .zip(&gram.diag)
            .map(|(x, g)| serde_json::json!({
                "tableau": x.to_string(),
                "value": g.to_string(),
            }))
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_mpartitions;
    use crate::repn::{build_representation, Vacuum};
    use crate::scalar::parse_ratfn;

    fn symbolic_gram(shape: &str, m: usize) -> GramMatrix<RatFn> {
        let shape: MPartition = shape.parse().unwrap();
        gram_matrix(&shape, &Params::symbolic(m)).unwrap()
    }

    #[test]
    fn golden_three_dimensional_diagonal() {
        let gram = symbolic_gram("[[1,1],[1]]", 2);
        let expected = [
            "(q^-2*v1 - q^2*v2)/(v1 - v2)",
            "1",
            "(q*v1 - q^-1*v2)/(q^-1*v1 - q*v2)",
        ];
        assert_eq!(gram.dim(), 3);
        for (g, e) in gram.diag.iter().zip(expected) {
            assert_eq!(*g, parse_ratfn(e, 2).unwrap());
        }
    }

    #[test]
    fn two_box_diagonals() {
        // Single row: entries adjacent in a row contribute no factor.
        let row = symbolic_gram("[[2]]", 1);
        assert!(row.diag[0].is_one());
        // Two separate components: one contributing pair.
        let split = symbolic_gram("[[1],[1]]", 2);
        assert_eq!(split.dim(), 2);
        assert_eq!(split.diag[0], parse_ratfn("(q^-1*v1 - q*v2)/(v1 - v2)", 2).unwrap());
        assert_eq!(split.diag[1], parse_ratfn("(q^-1*v2 - q*v1)/(v2 - v1)", 2).unwrap());
    }

    #[test]
    fn invariance_laws_symbolic() {
        for m in 1..=2usize {
            let params = Params::symbolic(m);
            for n in 0..=3usize {
                for shape in enumerate_mpartitions(m, n) {
                    let rep = build_representation(&shape, &params, Vacuum::Q);
                    let gram = gram_matrix(&shape, &params).unwrap();
                    verify_invariance(&rep, &gram, InvarianceLaw::Transpose).unwrap();
                    verify_invariance(&rep, &gram, InvarianceLaw::OmegaSesquilinear).unwrap();
                    verify_invariance_tilde(&rep, &gram, InvarianceLaw::Transpose).unwrap();
                    verify_invariance_tilde(&rep, &gram, InvarianceLaw::OmegaSesquilinear)
                        .unwrap();
                }
            }
        }
    }

    #[test]
    fn corrupted_gram_fails_invariance() {
        let shape: MPartition = "[[2,1]]".parse().unwrap();
        let params = Params::symbolic(1);
        let rep = build_representation(&shape, &params, Vacuum::Q);
        let mut gram = gram_matrix(&shape, &params).unwrap();
        gram.diag[1] = gram.diag[1].checked_mul(&RatFn::q(1)).unwrap();
        let err = verify_invariance(&rep, &gram, InvarianceLaw::Transpose).unwrap_err();
        match err {
            FormsError::Invariance { generator, .. } => assert_eq!(generator, "sigma2"),
            other => panic!("unexpected error {other:?}"),
        }
        // A basis mismatch is reported as such.
        let other: MPartition = "[[3]]".parse().unwrap();
        let rep3 = build_representation(&other, &params, Vacuum::Q);
        assert_eq!(
            verify_invariance(&rep3, &gram, InvarianceLaw::Transpose),
            Err(FormsError::BasisMismatch)
        );
    }

    #[test]
    fn omega_stability_and_qnumber_form() {
        for m in 1..=2usize {
            let params = Params::symbolic(m);
            for n in 0..=4usize {
                for shape in enumerate_mpartitions(m, n) {
                    let gram = gram_matrix(&shape, &params).unwrap();
                    verify_omega_stability(&gram).unwrap();
                    if m == 1 {
                        for (x, g) in gram.basis.iter().zip(&gram.diag) {
                            assert_eq!(*g, gram_entry_qnumbers(x).unwrap(), "{}", x);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn neighbor_ratio_matches_entry_quotient() {
        let params = Params::symbolic(2);
        for n in 2..=4usize {
            for shape in enumerate_mpartitions(2, n) {
                let gram = gram_matrix(&shape, &params).unwrap();
                for x in &gram.basis {
                    for i in 1..n {
                        if let Some(y) = x.apply_adjacent_transposition(i) {
                            let gx = gram.entry(x).unwrap();
                            let gy = gram.entry(&y).unwrap();
                            let ratio = neighbor_ratio(x, i, &params).unwrap();
                            assert_eq!(gx.checked_mul(&ratio).unwrap(), *gy);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn numeric_gram_matches_specialized_symbolic() {
        use crate::scalar::{specialize, ParamSpec};
        use num::BigRational;
        let spec = ParamSpec::checked(
            BigRational::new(2.into(), 1.into()),
            vec![
                BigRational::new(1.into(), 1.into()),
                BigRational::new(3.into(), 1.into()),
            ],
            3,
        )
        .unwrap();
        let nparams = Params::numeric(&spec).unwrap();
        let sparams = Params::symbolic(2);
        for shape in enumerate_mpartitions(2, 3) {
            let ng = gram_matrix(&shape, &nparams).unwrap();
            let sg = gram_matrix(&shape, &sparams).unwrap();
            for (a, b) in ng.diag.iter().zip(&sg.diag) {
                assert_eq!(*a, specialize(b, &spec).unwrap());
            }
        }
    }

    #[test]
    fn json_export_shape() {
        let gram = symbolic_gram("[[1,1],[1]]", 2);
        let json = export_json(&gram);
        assert_eq!(json["shape"], "[[1,1],[1]]");
        assert_eq!(json["diagonal"].as_array().unwrap().len(), 3);
        assert_eq!(json["diagonal"][1]["value"], "1");
    }
}
