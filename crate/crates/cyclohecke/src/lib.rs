//! Exact-arithmetic construction and verification of the seminormal
//! irreducible representations of the cyclotomic Hecke algebras H(m,1,n).
//!
//! The algebra H(m,1,n) is generated by `tau, sigma_1, ..., sigma_{n-1}`
//! subject to the braid relations, the quadratic relation
//! `sigma_i^2 = (q - q^-1) sigma_i + 1` and the cyclotomic relation
//! `(tau - v_1)...(tau - v_m) = 0`.  Everything here is computed over the
//! fraction field of Laurent polynomials in `q, v_1, ..., v_m` with rational
//! coefficients, or over exact rationals at a generic specialization.
//!
//! Module map:
//! * [`scalar`] — sparse Laurent polynomials, rational functions, involution
//!   `omega`, rational specializations and genericity checks;
//! * [`matrix`] — dense matrices over any exact field, rank/nullspace/solve;
//! * [`combinatorics`] — m-partitions, standard m-tableaux, contents and
//!   content strings with the tableau/string bijection;
//! * [`bratteli`] — powers of the Young graph, path counting, dimension
//!   identities, DOT export;
//! * [`repn`] — the seminormal representations, Jucys-Murphy operators,
//!   Baxterized elements, intertwiners, idempotents, relation checking;
//! * [`forms`] — diagonal Gram forms and their invariance laws;
//! * [`smash`] — push-through rewriting instructions and the tensor-product
//!   modules with decomposition via idempotent ranks.

pub mod bratteli;
pub mod combinatorics;
pub mod forms;
pub mod matrix;
pub mod repn;
pub mod scalar;
pub mod smash;
