//! Randomized property tests for the combinatorial and linear-algebra core.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use proptest::prelude::*;

use lagcell::cells::{Sign, SignAssignment};
use lagcell::diagrams::ShiftedDiagram;
use lagcell::homology::smith_normal_form;
use lagcell::incidence::eps_transport;
use lagcell::rowreduce::{
    det_rational, random_membership_values, rat, transition_apply, GaussianRational,
    Rational,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    /// Subset -> diagram -> subset is the identity at every rank up to 10.
    #[test]
    fn subset_diagram_bijection(n in 1usize..=10, mask in 0u32..1024) {
        let mask = mask & ((1 << n) - 1);
        let subset: BTreeSet<usize> = (1..=n).filter(|j| mask & (1 << (j - 1)) != 0).collect();
        let d = ShiftedDiagram::from_subset(&subset, n).unwrap();
        prop_assert_eq!(d.subset(), subset);
        prop_assert_eq!(d.size(), d.parts().iter().sum::<usize>());
    }

    /// Invariant factors divide in order, and for square matrices their
    /// product equals |det| computed by the independent Bareiss routine.
    #[test]
    fn snf_agrees_with_bareiss(entries in proptest::collection::vec(-6i64..=6, 9)) {
        let m: Vec<Vec<BigInt>> = entries
            .chunks(3)
            .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let snf = smith_normal_form(&m);
        for w in snf.factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).bits() == 0);
        }
        let rm: Vec<Vec<Rational>> = entries
            .chunks(3)
            .map(|row| row.iter().map(|&v| rat(v, 1)).collect())
            .collect();
        let det = det_rational(&rm);
        let product = snf
            .factors
            .iter()
            .fold(BigInt::from(1), |acc, f| acc * f);
        if snf.rank == 3 {
            let expected = if det < rat(0, 1) { -det } else { det };
            prop_assert_eq!(Rational::from_integer(product), expected);
        } else {
            prop_assert_eq!(det, rat(0, 1));
        }
    }
}

/// The sign of every corner coordinate after a transition matches the
/// transported assignment for the sign of t.
#[test]
fn transition_transports_component_signs() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in 1..=4 {
        for lambda in ShiftedDiagram::all(n).unwrap() {
            for mu in lambda.sub_diagrams() {
                let corners = mu.corners();
                for (upper, rd) in lambda.covers_above() {
                    for branch in [Sign::Plus, Sign::Minus] {
                        let z = random_membership_values(&lambda, &mu, &mut rng);
                        let eps_signs: Vec<(_, Sign)> = corners
                            .iter()
                            .map(|sq| {
                                let s = if z[sq].im > rat(0, 1) { Sign::Plus } else { Sign::Minus };
                                (*sq, s)
                            })
                            .collect();
                        let eps = SignAssignment::new(&mu, eps_signs).unwrap();
                        let expected = eps_transport(&eps, &rd, &mu, branch).unwrap();

                        let t = GaussianRational::from_rational(match branch {
                            Sign::Plus => rat(3, 7),
                            Sign::Minus => rat(-3, 7),
                        });
                        let image = transition_apply(&lambda, &upper, &z, &t).unwrap();
                        let image_signs: BTreeMap<_, Sign> = corners
                            .iter()
                            .map(|sq| {
                                let s = if image[sq].im > rat(0, 1) {
                                    Sign::Plus
                                } else {
                                    Sign::Minus
                                };
                                (*sq, s)
                            })
                            .collect();
                        for sq in &corners {
                            assert_eq!(
                                image_signs[sq],
                                expected.sign_at(*sq).unwrap(),
                                "corner {} of μ = {} under {} ⋖ {} at t {}",
                                sq,
                                mu,
                                lambda,
                                upper,
                                match branch {
                                    Sign::Plus => "positive",
                                    Sign::Minus => "negative",
                                }
                            );
                        }
                    }
                }
            }
        }
    }
}
