//! First-order jets: a value together with exact partial derivatives.
//!
//! A jet carries one partial per active real coordinate of a transition map
//! (the `x` of every box of `λ`, the `y` of every box of `μ`, and `t`), so
//! each scalar operation costs `O(#partials)` exact multiplications.

use super::scalar::{GaussianRational, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Jet {
    value: GaussianRational,
    partials: Vec<GaussianRational>,
}

impl Jet {
    pub fn constant(value: GaussianRational, nvars: usize) -> Self {
        Jet { value, partials: vec![GaussianRational::zero(); nvars] }
    }

    /// A jet seeded as a coordinate function: `d(value)/d(var) = direction`.
    /// The direction is `1` for an `x`-coordinate and `i` for a `y`-coordinate.
    pub fn variable(
        value: GaussianRational,
        var: usize,
        nvars: usize,
        direction: GaussianRational,
    ) -> Self {
        let mut partials = vec![GaussianRational::zero(); nvars];
        partials[var] = direction;
        Jet { value, partials }
    }

    pub fn value(&self) -> &GaussianRational {
        &self.value
    }

    pub fn partials(&self) -> &[GaussianRational] {
        &self.partials
    }

    pub fn nvars(&self) -> usize {
        self.partials.len()
    }
}

impl Scalar for Jet {
    fn s_add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars(), o.nvars());
        Jet {
            value: self.value.add(&o.value),
            partials: self
                .partials
                .iter()
                .zip(&o.partials)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    fn s_sub(&self, o: &Self) -> Self {
        assert_eq!(self.nvars(), o.nvars());
        Jet {
            value: self.value.sub(&o.value),
            partials: self
                .partials
                .iter()
                .zip(&o.partials)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    fn s_mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars(), o.nvars());
        Jet {
            value: self.value.mul(&o.value),
            partials: self
                .partials
                .iter()
                .zip(&o.partials)
                .map(|(a, b)| self.value.mul(b).add(&a.mul(&o.value)))
                .collect(),
        }
    }

    fn s_neg(&self) -> Self {
        Jet {
            value: self.value.neg(),
            partials: self.partials.iter().map(|p| p.neg()).collect(),
        }
    }

    fn s_inv(&self) -> Self {
        let vinv = self.value.inv();
        let neg_vinv_sq = vinv.mul(&vinv).neg();
        Jet {
            value: vinv,
            partials: self.partials.iter().map(|p| neg_vinv_sq.mul(p)).collect(),
        }
    }

    fn s_is_zero(&self) -> bool {
        self.value.is_zero()
    }
}
