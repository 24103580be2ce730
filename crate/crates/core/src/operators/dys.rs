use super::linear::{resolvent_linear, LinearPlaneOperator, Vec2};
use crate::srg::DysClass;
use crate::{Error, Result};

/// `T_γ(A,B,C) = I − J_{γB} + J_{γA}(2J_{γB} − I − γCJ_{γB})` for linear `A`, `B`, `C`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DysOperator {
    a: LinearPlaneOperator,
    b: LinearPlaneOperator,
    c: LinearPlaneOperator,
    ja: LinearPlaneOperator,
    jb: LinearPlaneOperator,
    class: DysClass,
}

/// Checks `A`, `B` monotone, `C` β-cocoercive, `γ ∈ (0, 2β)` and builds the operator.
pub fn dys_assemble(
    a: &LinearPlaneOperator,
    b: &LinearPlaneOperator,
    c: &LinearPlaneOperator,
    beta: f64,
    gamma: f64,
) -> Result<DysOperator> {
    let class = DysClass::new(beta, gamma)?;
    if !a.is_monotone() {
        return Err(Error::NotMonotone("A"));
    }
    if !b.is_monotone() {
        return Err(Error::NotMonotone("B"));
    }
    if !c.is_cocoercive(beta) {
        return Err(Error::NotCocoercive { beta });
    }
    Ok(DysOperator {
        a: *a,
        b: *b,
        c: *c,
        ja: resolvent_linear(a, gamma)?,
        jb: resolvent_linear(b, gamma)?,
        class,
    })
}

impl DysOperator {
    pub fn apply(&self, x: Vec2) -> Vec2 {
        let g = self.class.gamma();
        let xb = self.jb.apply(x);
        let cxb = self.c.apply(xb);
        let inner = [2.0 * xb[0] - x[0] - g * cxb[0], 2.0 * xb[1] - x[1] - g * cxb[1]];
        let xa = self.ja.apply(inner);
        [x[0] - xb[0] + xa[0], x[1] - xb[1] + xa[1]]
    }

    /// The assembled 2×2 matrix.
    pub fn matrix(&self) -> LinearPlaneOperator {
        let id = LinearPlaneOperator::identity();
        let g = self.class.gamma();
        let inner = self.jb.scale(2.0) - id - (self.c * self.jb).scale(g);
        id - self.jb + self.ja * inner
    }

    pub fn class(&self) -> &DysClass {
        &self.class
    }

    pub fn a(&self) -> &LinearPlaneOperator {
        &self.a
    }

    pub fn b(&self) -> &LinearPlaneOperator {
        &self.b
    }

    pub fn c(&self) -> &LinearPlaneOperator {
        &self.c
    }

    pub fn resolvent_a(&self) -> &LinearPlaneOperator {
        &self.ja
    }

    pub fn resolvent_b(&self) -> &LinearPlaneOperator {
        &self.jb
    }

    /// `A + B + C`.
    pub fn inclusion_operator(&self) -> LinearPlaneOperator {
        self.a + self.b + self.c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::cpt;
    use crate::operators::{monotone_with_resolvent, scaled_rotation};
    use crate::srg::dys_srg_map;

    #[test]
    fn zero_operators_give_identity() {
        let z = LinearPlaneOperator::zero();
        let t = dys_assemble(&z, &z, &z, 1.0, 1.0).unwrap();
        assert_eq!(t.matrix(), LinearPlaneOperator::identity());
        assert_eq!(t.apply([0.3, -2.0]), [0.3, -2.0]);
    }

    #[test]
    fn matches_complex_map() {
        let (beta, gamma) = (1.0, 1.3);
        let (z1, z2, z3) = (cpt(0.4, 0.3), cpt(0.2, -0.35), cpt(0.6, 0.45));
        let a = monotone_with_resolvent(z1, gamma).unwrap();
        let b = monotone_with_resolvent(z2, gamma).unwrap();
        let c = scaled_rotation(z3);
        let t = dys_assemble(&a, &b, &c, beta, gamma).unwrap();
        let expected = scaled_rotation(dys_srg_map(z1, z2, z3, gamma));
        assert!(t.matrix().max_abs_diff(&expected) < 1e-12);
        let x = [0.7, -0.2];
        let (p, q) = (t.apply(x), expected.apply(x));
        assert!((p[0] - q[0]).abs() < 1e-12 && (p[1] - q[1]).abs() < 1e-12);
    }

    #[test]
    fn unit_factors_give_identity() {
        let one = cpt(1.0, 0.0);
        let a = monotone_with_resolvent(one, 0.5).unwrap();
        let t = dys_assemble(&a, &a, &LinearPlaneOperator::zero(), 1.0, 0.5).unwrap();
        assert!(t.matrix().max_abs_diff(&LinearPlaneOperator::identity()) < 1e-15);
    }

    #[test]
    fn validation() {
        let z = LinearPlaneOperator::zero();
        let bad = LinearPlaneOperator::scalar(-1.0);
        assert!(matches!(dys_assemble(&bad, &z, &z, 1.0, 1.0), Err(Error::NotMonotone("A"))));
        assert!(matches!(dys_assemble(&z, &bad, &z, 1.0, 1.0), Err(Error::NotMonotone("B"))));
        let c = LinearPlaneOperator::scalar(2.0);
        assert!(matches!(dys_assemble(&z, &z, &c, 1.0, 1.0), Err(Error::NotCocoercive { .. })));
        assert!(matches!(dys_assemble(&z, &z, &z, 1.0, 2.5), Err(Error::InvalidGamma { .. })));
    }
}
