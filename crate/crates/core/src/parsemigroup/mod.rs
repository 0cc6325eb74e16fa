//! Exel's semigroup `S(G)`, the partial group algebra `K_par G` and its idempotent
//! subalgebra `B`.

mod algebra;
mod selem;

pub use algebra::{cod_act, cod_act_alg, dom_act, epsilon, idempotent, nu, ParAlgElt};
pub use selem::{enumerate_idempotents, enumerate_s, semigroup_order, sg_mul, sg_normalize, sg_star, IdemSet, SElem};

pub(crate) use algebra::{cod_act_monomial, dom_act_monomial};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Ring;
    use crate::group::FiniteGroup;

    #[test]
    fn words_in_c2_and_c3() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(sg_normalize(&c2, &[]), SElem::ONE);
        assert_eq!(sg_normalize(&c2, &[1, 1]), SElem::e(1));
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let aa = sg_normalize(&c3, &[1, 1]);
        assert_eq!(aa, SElem { idem: IdemSet::from_ids(&[1]), grp: 2 });
        assert_eq!(sg_star(&c3, aa), SElem { idem: IdemSet::from_ids(&[2]), grp: 1 });
        assert_eq!(sg_mul(&c2, SElem::e(1), SElem::gen(1)), SElem::gen(1));
    }

    #[test]
    fn counts() {
        for (spec, n) in [(FiniteGroup::cyclic(2), 3), (FiniteGroup::cyclic(3), 8), (FiniteGroup::symmetric(3), 112)] {
            let g = spec.unwrap();
            let s = enumerate_s(&g).unwrap();
            assert_eq!(s.len(), n);
            assert_eq!(s.len(), semigroup_order(g.order()));
            assert_eq!(enumerate_idempotents(&g).unwrap().len(), 1 << (g.order() - 1));
        }
    }

    #[test]
    fn c2_enumeration_order() {
        let g = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(enumerate_s(&g).unwrap(), alloc::vec![SElem::ONE, SElem::e(1), SElem::gen(1)]);
    }

    #[test]
    fn nu_rules() {
        let q = Ring::Rationals;
        let g = FiniteGroup::cyclic(2).unwrap();
        assert!(nu(q, 0).is_zero());
        assert!(nu(q, 1).mul(&g, &ParAlgElt::gen(q, 1)).unwrap().is_zero());
        assert_eq!(ParAlgElt::e(q, 1).add(&nu(q, 1)).unwrap(), ParAlgElt::one(q));
    }

    #[test]
    fn actions_on_b() {
        let q = Ring::Rationals;
        let g = FiniteGroup::symmetric(3).unwrap();
        for x in 0..6 {
            assert_eq!(dom_act(&g, x, &ParAlgElt::one(q)).unwrap(), ParAlgElt::e(q, x));
            assert_eq!(cod_act(&g, &ParAlgElt::one(q), x).unwrap(), ParAlgElt::e(q, g.inv(x)));
        }
        assert_eq!(dom_act(&g, 1, &ParAlgElt::gen(q, 1)), Err(crate::Error::NotInB));
        let u = ParAlgElt::e(q, 2);
        assert_eq!(cod_act_alg(&g, &u, &ParAlgElt::one(q)).unwrap(), u);
    }

    #[test]
    fn epsilon_basics() {
        let q = Ring::Rationals;
        let g = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(epsilon(&g, &ParAlgElt::one(q)), ParAlgElt::one(q));
        for x in 0..6 {
            assert_eq!(epsilon(&g, &ParAlgElt::e(q, x)), ParAlgElt::e(q, x));
        }
    }
}
