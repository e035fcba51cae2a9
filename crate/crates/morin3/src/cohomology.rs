//! Mod-2 simplicial cohomology of a complex: bases, cohomologous tests, cup
//! products, the Bockstein Sq^1, evaluation pairings, and the Poincare
//! duality pairing.
//!
//! Cochains in degree k are GF(2) vectors indexed by the k-simplex table of
//! the underlying complex. The coboundary is the transpose of the boundary;
//! a basis of H^k is found by reducing a kernel basis of `delta^k` against
//! the column space of `delta^{k-1}`, which is kept as an echelon so that
//! "is this cochain a coboundary?" stays cheap under repeated queries.
//!
//! The cup product is the Alexander-Whitney front-face/back-face formula with
//! respect to the global vertex order:
//!
//! ```text
//! (u cup v)(v_0 < ... < v_{p+q}) = u(v_0..v_p) * v(v_p..v_{p+q})
//! ```
//!
//! It is commutative and associative only up to coboundary, which is all the
//! class-level computations here ever use. Sq^1 is computed as the integer
//! Bockstein: lift a cocycle to the 0/1 integer cochain, take the integer
//! coboundary (all entries even), halve, reduce mod 2.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::complex::SimplicialComplex3;
use crate::error::{Error, Result};
use crate::gf2::{self, Echelon, Gf2Matrix, Gf2Vector};

static NEXT_CONTEXT_ID: AtomicU64 = AtomicU64::new(0);

/// A cohomology class: a cocycle representative tagged with its degree and
/// owning context. Equality of classes is always decided by
/// [`CohomologyContext::cohomologous`], never by comparing representatives.
#[derive(Clone, Debug)]
pub struct CohomologyClass {
    ctx_id: u64,
    degree: usize,
    rep: Gf2Vector,
}

impl CohomologyClass {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rep(&self) -> &Gf2Vector {
        &self.rep
    }

    /// Sorted support of the representative, for reports.
    pub fn support(&self) -> &[usize] {
        self.rep.support()
    }
}

/// Per-complex cache: coboundary matrices, cohomology bases, coboundary
/// membership data, and the fundamental cycle when the complex is closed.
#[derive(Debug)]
pub struct CohomologyContext {
    id: u64,
    complex: SimplicialComplex3,
    coboundary: [Gf2Matrix; 4],
    /// Echelon of the image of delta^{k-1} inside C^k (empty for k = 0).
    coboundary_image: [Echelon; 4],
    /// Cocycle representatives of a basis of H^k.
    basis: [Vec<Gf2Vector>; 4],
    fundamental: Option<Gf2Vector>,
}

impl CohomologyContext {
    pub fn new(complex: SimplicialComplex3) -> Self {
        let id = NEXT_CONTEXT_ID.fetch_add(1, Ordering::Relaxed);
        let coboundary = [0, 1, 2, 3].map(|k| complex.coboundary_matrix(k));

        let mut coboundary_image: [Echelon; 4] = Default::default();
        for k in 1..4usize {
            let mut ech = Echelon::new();
            let delta = &coboundary[k - 1];
            for j in 0..complex.n(k - 1) {
                let col = gf2::Gf2Vector::unit(complex.n(k - 1), j);
                let img = delta.mul_vec(&col).expect("column size matches");
                ech.insert(&img);
            }
            coboundary_image[k] = ech;
        }

        let mut basis: [Vec<Gf2Vector>; 4] = Default::default();
        for k in 0..4usize {
            let kernel = gf2::kernel_basis(&coboundary[k]);
            let mut span = coboundary_image[k].clone();
            let mut reps = Vec::new();
            for z in kernel {
                // z is a cocycle; keep it when independent modulo
                // coboundaries and previously accepted representatives.
                if span.insert(&z) {
                    reps.push(z);
                }
            }
            basis[k] = reps;
        }

        let fundamental = complex.fundamental_cycle().ok();
        CohomologyContext {
            id,
            complex,
            coboundary,
            coboundary_image,
            basis,
            fundamental,
        }
    }

    pub fn complex(&self) -> &SimplicialComplex3 {
        &self.complex
    }

    pub fn is_closed(&self) -> bool {
        self.fundamental.is_some()
    }

    pub fn fundamental_cycle(&self) -> Result<&Gf2Vector> {
        self.fundamental.as_ref().ok_or(Error::NotClosed)
    }

    /// dim H^k, equal to dim ker(delta^k) - rank(delta^{k-1}).
    pub fn betti(&self, k: usize) -> usize {
        assert!(k <= 3);
        self.basis[k].len()
    }

    /// Cocycle representatives of the stored H^k basis.
    pub fn basis_reps(&self, k: usize) -> &[Gf2Vector] {
        &self.basis[k]
    }

    pub fn basis_classes(&self, k: usize) -> Vec<CohomologyClass> {
        self.basis[k]
            .iter()
            .map(|rep| CohomologyClass {
                ctx_id: self.id,
                degree: k,
                rep: rep.clone(),
            })
            .collect()
    }

    /// Wraps a cochain as a class after checking it is a cocycle.
    pub fn class(&self, degree: usize, rep: Gf2Vector) -> Result<CohomologyClass> {
        if degree > 3 {
            return Err(Error::DegreeOverflow(degree));
        }
        if rep.len() != self.complex.n(degree) {
            return Err(Error::DimensionMismatch {
                expected: self.complex.n(degree),
                got: rep.len(),
            });
        }
        if !self.coboundary[degree].mul_vec(&rep)?.is_zero() {
            return Err(Error::NotACocycle);
        }
        Ok(CohomologyClass {
            ctx_id: self.id,
            degree,
            rep,
        })
    }

    pub fn zero_class(&self, degree: usize) -> CohomologyClass {
        CohomologyClass {
            ctx_id: self.id,
            degree,
            rep: Gf2Vector::zeros(self.complex.n(degree)),
        }
    }

    fn check_ownership(&self, u: &CohomologyClass) -> Result<()> {
        if u.ctx_id != self.id {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    /// Representative accessor that enforces ownership, for cross-context
    /// plumbing like pullbacks.
    pub fn rep_of<'c>(&self, u: &'c CohomologyClass) -> Result<&'c Gf2Vector> {
        self.check_ownership(u)?;
        Ok(&u.rep)
    }

    /// delta^k applied to a k-cochain.
    pub fn coboundary_of(&self, k: usize, cochain: &Gf2Vector) -> Result<Gf2Vector> {
        assert!(k <= 3);
        self.coboundary[k].mul_vec(cochain)
    }

    /// Mod-2 sum of two classes of equal degree.
    pub fn add(&self, u: &CohomologyClass, v: &CohomologyClass) -> Result<CohomologyClass> {
        self.check_ownership(u)?;
        self.check_ownership(v)?;
        if u.degree != v.degree {
            return Err(Error::DegreeMismatch {
                left: u.degree,
                right: v.degree,
            });
        }
        Ok(CohomologyClass {
            ctx_id: self.id,
            degree: u.degree,
            rep: u.rep.add(&v.rep)?,
        })
    }

    /// True when the two cocycles differ by a coboundary.
    pub fn cohomologous(&self, u: &CohomologyClass, v: &CohomologyClass) -> Result<bool> {
        self.check_ownership(u)?;
        self.check_ownership(v)?;
        if u.degree != v.degree {
            return Err(Error::DegreeMismatch {
                left: u.degree,
                right: v.degree,
            });
        }
        let diff = u.rep.add(&v.rep)?;
        Ok(self.coboundary_image[u.degree].contains(&diff))
    }

    pub fn is_zero_class(&self, u: &CohomologyClass) -> Result<bool> {
        let zero = self.zero_class(u.degree);
        self.cohomologous(u, &zero)
    }

    /// Alexander-Whitney cup product at cochain level.
    pub fn cup(&self, u: &CohomologyClass, v: &CohomologyClass) -> Result<CohomologyClass> {
        self.check_ownership(u)?;
        self.check_ownership(v)?;
        let rep = self.cup_reps(u.degree, &u.rep, v.degree, &v.rep)?;
        Ok(CohomologyClass {
            ctx_id: self.id,
            degree: u.degree + v.degree,
            rep,
        })
    }

    fn cup_reps(
        &self,
        p: usize,
        u: &Gf2Vector,
        q: usize,
        v: &Gf2Vector,
    ) -> Result<Gf2Vector> {
        let total = p + q;
        if total > 3 {
            return Err(Error::DegreeOverflow(total));
        }
        let mut support = Vec::new();
        for i in 0..self.complex.n(total) {
            let sigma = self.complex.simplex(total, i);
            let front = self
                .complex
                .index_of(&sigma[..=p])
                .expect("front face is a simplex of the complex");
            let back = self
                .complex
                .index_of(&sigma[p..])
                .expect("back face is a simplex of the complex");
            if u.get(front) && v.get(back) {
                support.push(i);
            }
        }
        Gf2Vector::from_support(self.complex.n(total), &support)
    }

    /// The Bockstein Sq^1 via integer lift: lift to the 0/1 integer cochain,
    /// take the integer coboundary, halve, reduce mod 2.
    pub fn sq1(&self, u: &CohomologyClass) -> Result<CohomologyClass> {
        self.check_ownership(u)?;
        let k = u.degree;
        if k > 2 {
            return Err(Error::DegreeOverflow(k + 1));
        }
        if !self.coboundary[k].mul_vec(&u.rep)?.is_zero() {
            return Err(Error::NotACocycle);
        }
        let mut support = Vec::new();
        for i in 0..self.complex.n(k + 1) {
            let mut total: i64 = 0;
            for (omit, &face) in self.complex.faces_of(k + 1, i).iter().enumerate() {
                if u.rep.get(face) {
                    total += if omit % 2 == 0 { 1 } else { -1 };
                }
            }
            debug_assert!(total.rem_euclid(2) == 0, "integer coboundary of a mod-2 cocycle is even");
            if (total / 2).rem_euclid(2) == 1 {
                support.push(i);
            }
        }
        let rep = Gf2Vector::from_support(self.complex.n(k + 1), &support)?;
        debug_assert!(self.coboundary[k + 1].mul_vec(&rep)?.is_zero());
        Ok(CohomologyClass {
            ctx_id: self.id,
            degree: k + 1,
            rep,
        })
    }

    /// Evaluation of a degree-k cocycle on a k-cycle: the mod-2 count of
    /// simplices shared by the two supports.
    pub fn evaluate(&self, u: &CohomologyClass, cycle: &Gf2Vector) -> Result<bool> {
        self.check_ownership(u)?;
        if cycle.len() != self.complex.n(u.degree) {
            return Err(Error::DimensionMismatch {
                expected: self.complex.n(u.degree),
                got: cycle.len(),
            });
        }
        u.rep.dot(cycle)
    }

    /// Evaluation against the fundamental cycle; requires degree 3 and a
    /// closed complex.
    pub fn evaluate_fundamental(&self, u: &CohomologyClass) -> Result<bool> {
        self.check_ownership(u)?;
        if u.degree != 3 {
            return Err(Error::DegreeMismatch {
                left: u.degree,
                right: 3,
            });
        }
        let z = self.fundamental_cycle()?;
        u.rep.dot(z)
    }

    /// The pairing (alpha, beta) -> <alpha cup beta, [M]> at representative
    /// level.
    pub fn pairing(&self, alpha: &CohomologyClass, beta: &CohomologyClass) -> Result<bool> {
        let product = self.cup(alpha, beta)?;
        if product.degree != 3 {
            return Err(Error::DegreeMismatch {
                left: product.degree,
                right: 3,
            });
        }
        self.evaluate_fundamental(&product)
    }

    /// Matrix of the Poincare duality pairing on the H^k x H^{3-k} bases.
    /// Nondegenerate (full rank) exactly when the complex behaves like a
    /// closed manifold mod 2.
    pub fn duality_pairing_matrix(&self, k: usize) -> Result<Gf2Matrix> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        assert!(k <= 3);
        let rows_basis = self.basis_classes(k);
        let cols_basis = self.basis_classes(3 - k);
        let mut rows = Vec::with_capacity(rows_basis.len());
        for alpha in &rows_basis {
            let mut support = Vec::new();
            for (j, beta) in cols_basis.iter().enumerate() {
                if self.pairing(alpha, beta)? {
                    support.push(j);
                }
            }
            rows.push(support);
        }
        Gf2Matrix::from_rows(cols_basis.len(), rows)
    }

    /// Solves for the unique class alpha in H^k with
    /// `<alpha cup basis_{3-k}[i], [M]> = rhs[i]` for every i.
    ///
    /// This backs both the Wu class and Poincare duals of cycles. Fails with
    /// `NoSolution` when the pairing is degenerate (inconsistent or
    /// underdetermined system), i.e. when the complex is not a closed
    /// manifold mod 2.
    pub fn solve_against_pairing(&self, k: usize, rhs: &[bool]) -> Result<CohomologyClass> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        let unknowns = self.basis_classes(k);
        let equations = self.basis_classes(3 - k);
        if rhs.len() != equations.len() {
            return Err(Error::DimensionMismatch {
                expected: equations.len(),
                got: rhs.len(),
            });
        }
        let mut rows = Vec::with_capacity(equations.len());
        for beta in &equations {
            let mut support = Vec::new();
            for (j, alpha) in unknowns.iter().enumerate() {
                if self.pairing(alpha, beta)? {
                    support.push(j);
                }
            }
            rows.push(support);
        }
        let system = Gf2Matrix::from_rows(unknowns.len(), rows)?;
        let rhs_support: Vec<usize> = rhs
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect();
        let b = Gf2Vector::from_support(equations.len(), &rhs_support)?;
        if gf2::rref(&system).rank < unknowns.len() {
            return Err(Error::NoSolution);
        }
        let coeffs = gf2::solve(&system, &b)?.ok_or(Error::NoSolution)?;
        let mut rep = Gf2Vector::zeros(self.complex.n(k));
        for &j in coeffs.support() {
            rep = rep.add(&unknowns[j].rep)?;
        }
        Ok(CohomologyClass {
            ctx_id: self.id,
            degree: k,
            rep,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ctx(name: &str) -> CohomologyContext {
        CohomologyContext::new(builtins::by_name(name).unwrap())
    }

    fn random_cochain(rng: &mut ChaCha8Rng, len: usize) -> Gf2Vector {
        let support: Vec<usize> = (0..len).filter(|_| rng.gen_bool(0.5)).collect();
        Gf2Vector::from_support(len, &support).unwrap()
    }

    #[test]
    fn betti_numbers_of_builtins() {
        let cases: [(&str, [usize; 4]); 5] = [
            ("S3", [1, 0, 0, 1]),
            ("T3", [1, 3, 3, 1]),
            ("RP3", [1, 1, 1, 1]),
            ("S2xS1", [1, 1, 1, 1]),
            ("RP2xS1", [1, 2, 2, 1]),
        ];
        for (name, expected) in cases {
            let c = ctx(name);
            let got = [c.betti(0), c.betti(1), c.betti(2), c.betti(3)];
            assert_eq!(got, expected, "{name}");
        }
    }

    #[test]
    fn betti_matches_rank_formula() {
        for name in builtins::BUILTIN_NAMES {
            let c = ctx(name);
            for k in 0..4usize {
                let dim_kernel = gf2::kernel_basis(&c.complex.coboundary_matrix(k)).len();
                let rank_prev = if k == 0 {
                    0
                } else {
                    gf2::rref(&c.complex.coboundary_matrix(k - 1)).rank
                };
                assert_eq!(c.betti(k), dim_kernel - rank_prev, "{name} k={k}");
            }
        }
    }

    #[test]
    fn delta_squared_is_zero() {
        for name in builtins::BUILTIN_NAMES {
            let c = ctx(name);
            for k in 0..3 {
                let prod = c.coboundary[k + 1].mul(&c.coboundary[k]).unwrap();
                assert!(prod.is_zero(), "{name} delta^{} delta^{}", k + 1, k);
            }
        }
    }

    #[test]
    fn stored_basis_reps_are_cocycles() {
        for name in builtins::BUILTIN_NAMES {
            let c = ctx(name);
            for k in 0..4 {
                for rep in c.basis_reps(k) {
                    assert!(c.coboundary[k].mul_vec(rep).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn cohomologous_is_reflexive_and_separates_h0() {
        let c = ctx("S3");
        let ones = c
            .class(0, Gf2Vector::ones(c.complex().n(0)))
            .unwrap();
        assert!(c.cohomologous(&ones, &ones).unwrap());
        let zero = c.zero_class(0);
        assert!(!c.cohomologous(&ones, &zero).unwrap());
    }

    #[test]
    fn coboundaries_are_cohomologous_to_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let c = ctx("T3");
        for _ in 0..20 {
            let raw = random_cochain(&mut rng, c.complex().n(1));
            let db = c.coboundary_of(1, &raw).unwrap();
            let class = c.class(2, db).unwrap();
            assert!(c.is_zero_class(&class).unwrap());
        }
    }

    #[test]
    fn cup_with_zero_is_zero() {
        let c = ctx("T3");
        let b1 = c.basis_classes(1);
        let zero = c.zero_class(1);
        let prod = c.cup(&b1[0], &zero).unwrap();
        assert!(prod.rep().is_zero());
    }

    #[test]
    fn torus_triple_product_is_one() {
        // The triple cup form on H^1(T^3) is alternating with determinant
        // normalization, so any basis pairs to 1.
        let c = ctx("T3");
        let b = c.basis_classes(1);
        let xy = c.cup(&b[0], &b[1]).unwrap();
        let xyz = c.cup(&xy, &b[2]).unwrap();
        assert!(c.evaluate_fundamental(&xyz).unwrap());
    }

    #[test]
    fn rp3_generator_squares_nontrivially() {
        let c = ctx("RP3");
        let a = &c.basis_classes(1)[0];
        let aa = c.cup(a, a).unwrap();
        assert!(!c.is_zero_class(&aa).unwrap());
    }

    #[test]
    fn sq1_of_zero_is_zero() {
        let c = ctx("RP3");
        let z = c.zero_class(1);
        assert!(c.sq1(&z).unwrap().rep().is_zero());
    }

    #[test]
    fn sq1_is_squaring_on_degree_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for name in builtins::BUILTIN_NAMES {
            let c = ctx(name);
            // Random cocycle: random coefficients on the basis plus a random
            // coboundary.
            for _ in 0..10 {
                let mut rep = Gf2Vector::zeros(c.complex().n(1));
                for basis_rep in c.basis_reps(1) {
                    if rng.gen_bool(0.5) {
                        rep = rep.add(basis_rep).unwrap();
                    }
                }
                let raw0 = random_cochain(&mut rng, c.complex().n(0));
                rep = rep.add(&c.coboundary_of(0, &raw0).unwrap()).unwrap();
                let u = c.class(1, rep).unwrap();
                let lhs = c.sq1(&u).unwrap();
                let rhs = c.cup(&u, &u).unwrap();
                assert!(c.cohomologous(&lhs, &rhs).unwrap(), "{name}");
            }
        }
    }

    #[test]
    fn sq1_on_rp3_matches_square_of_generator() {
        let c = ctx("RP3");
        let a = &c.basis_classes(1)[0];
        let sq = c.sq1(a).unwrap();
        let aa = c.cup(a, a).unwrap();
        assert!(c.cohomologous(&sq, &aa).unwrap());
        assert!(!c.is_zero_class(&sq).unwrap());
    }

    #[test]
    fn sq1_class_is_representative_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(4242);
        let c = ctx("RP2xS1");
        let a = &c.basis_classes(1)[0];
        for _ in 0..10 {
            let raw = random_cochain(&mut rng, c.complex().n(0));
            let shifted = c
                .class(1, a.rep().add(&c.coboundary_of(0, &raw).unwrap()).unwrap())
                .unwrap();
            let lhs = c.sq1(a).unwrap();
            let rhs = c.sq1(&shifted).unwrap();
            assert!(c.cohomologous(&lhs, &rhs).unwrap());
        }
    }

    #[test]
    fn evaluate_against_zero_cycle_is_zero() {
        let c = ctx("S3");
        let top = c.basis_classes(3).remove(0);
        let zero = Gf2Vector::zeros(c.complex().n(3));
        assert!(!c.evaluate(&top, &zero).unwrap());
    }

    #[test]
    fn single_facet_indicator_evaluates_to_one() {
        let c = ctx("T3");
        let ind = c
            .class(3, Gf2Vector::unit(c.complex().n(3), 17))
            .unwrap();
        assert!(c.evaluate_fundamental(&ind).unwrap());
    }

    #[test]
    fn cup_class_only_depends_on_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let c = ctx("RP2xS1");
        let basis = c.basis_classes(1);
        for _ in 0..10 {
            let u = &basis[0];
            let v = &basis[1];
            let raw_u = random_cochain(&mut rng, c.complex().n(0));
            let raw_v = random_cochain(&mut rng, c.complex().n(0));
            let u2 = c
                .class(1, u.rep().add(&c.coboundary_of(0, &raw_u).unwrap()).unwrap())
                .unwrap();
            let v2 = c
                .class(1, v.rep().add(&c.coboundary_of(0, &raw_v).unwrap()).unwrap())
                .unwrap();
            let p1 = c.cup(u, v).unwrap();
            let p2 = c.cup(&u2, &v2).unwrap();
            assert!(c.cohomologous(&p1, &p2).unwrap());
        }
    }

    #[test]
    fn cup_is_commutative_at_class_level() {
        let mut rng = ChaCha8Rng::seed_from_u64(31337);
        for name in ["T3", "RP3", "RP2xS1"] {
            let c = ctx(name);
            let basis = c.basis_classes(1);
            for _ in 0..10 {
                let mut pick = |deg: usize| {
                    let mut rep = Gf2Vector::zeros(c.complex().n(deg));
                    for b in c.basis_reps(deg) {
                        if rng.gen_bool(0.5) {
                            rep = rep.add(b).unwrap();
                        }
                    }
                    c.class(deg, rep).unwrap()
                };
                let u = pick(1);
                let v = pick(2);
                let uv = c.cup(&u, &v).unwrap();
                let vu = c.cup(&v, &u).unwrap();
                assert!(c.cohomologous(&uv, &vu).unwrap(), "{name}");
            }
            let _ = &basis;
        }
    }

    #[test]
    fn duality_pairing_is_full_rank_on_builtins() {
        for name in builtins::BUILTIN_NAMES {
            let c = ctx(name);
            for k in 0..4 {
                let p = c.duality_pairing_matrix(k).unwrap();
                assert_eq!(p.rows(), c.betti(k), "{name} k={k}");
                assert_eq!(p.cols(), c.betti(3 - k), "{name} k={k}");
                assert_eq!(gf2::rref(&p).rank, c.betti(k), "{name} k={k}");
            }
        }
    }

    #[test]
    fn rp3_pairing_in_degree_one_is_unit() {
        let c = ctx("RP3");
        let p = c.duality_pairing_matrix(1).unwrap();
        assert_eq!((p.rows(), p.cols()), (1, 1));
        assert!(p.get(0, 0));
    }

    #[test]
    fn sphere_pairing_in_degree_zero_is_unit() {
        let c = ctx("S3");
        let p = c.duality_pairing_matrix(0).unwrap();
        assert_eq!((p.rows(), p.cols()), (1, 1));
        assert!(p.get(0, 0));
    }

    #[test]
    fn pairing_rank_is_invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(555);
        for name in ["T3", "RP2xS1"] {
            let facets = builtins::builtin_facets(name).unwrap();
            let c = CohomologyContext::new(SimplicialComplex3::build(&facets).unwrap());
            let mut labels: Vec<u32> = c.complex().vertices().to_vec();
            use rand::seq::SliceRandom;
            labels.shuffle(&mut rng);
            let relabel: std::collections::BTreeMap<u32, u32> = c
                .complex()
                .vertices()
                .iter()
                .copied()
                .zip(labels)
                .collect();
            let permuted: Vec<[u32; 4]> = facets
                .iter()
                .map(|f| {
                    let mut g = f.map(|v| relabel[&v]);
                    g.sort_unstable();
                    g
                })
                .collect();
            let c2 = CohomologyContext::new(SimplicialComplex3::build(&permuted).unwrap());
            for k in 0..4 {
                let r1 = gf2::rref(&c.duality_pairing_matrix(k).unwrap()).rank;
                let r2 = gf2::rref(&c2.duality_pairing_matrix(k).unwrap()).rank;
                assert_eq!(r1, r2, "{name} k={k}");
            }
        }
    }

    #[test]
    fn disconnected_complex_keeps_nondegenerate_pairing() {
        // Disjoint union of two 4-simplex boundaries: b = (2, 0, 0, 2) and
        // the H^0 x H^3 pairing is block diagonal of full rank.
        let mut facets = Vec::new();
        for base in [0u32, 5] {
            for omit in 0..5 {
                let f: Vec<u32> = (0..5)
                    .filter(|&i| i != omit)
                    .map(|i| base + i)
                    .collect();
                facets.push([f[0], f[1], f[2], f[3]]);
            }
        }
        let c = CohomologyContext::new(SimplicialComplex3::build(&facets).unwrap());
        assert_eq!([c.betti(0), c.betti(1), c.betti(2), c.betti(3)], [2, 0, 0, 2]);
        for k in 0..4 {
            let p = c.duality_pairing_matrix(k).unwrap();
            assert_eq!(gf2::rref(&p).rank, c.betti(k));
        }
    }

    #[test]
    fn context_mismatch_is_detected() {
        let a = ctx("S3");
        let b = ctx("S3");
        let ua = a.zero_class(1);
        let ub = b.zero_class(1);
        assert_eq!(a.cohomologous(&ua, &ub), Err(Error::ContextMismatch));
    }

    #[test]
    fn degree_mismatch_is_detected() {
        let c = ctx("S3");
        let u = c.zero_class(1);
        let v = c.zero_class(2);
        assert_eq!(
            c.cohomologous(&u, &v),
            Err(Error::DegreeMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn cup_overflow_is_detected() {
        let c = ctx("S3");
        let u = c.zero_class(2);
        assert!(matches!(c.cup(&u, &u), Err(Error::DegreeOverflow(4))));
    }
}
