//! Picard lattice and intersection form: descent, symmetry, equivariance and row independence.

use chowquot::divcalc::{
    class_of, curve_class, expression_triple, form, lattice, relation_vectors, DivisorExpression, Symbol,
    SUBSTITUTION_ROW, SYMBOLS,
};
use chowquot::tilegroup::{all_labels, group_elements};
use proptest::prelude::*;

fn expression() -> impl Strategy<Value = DivisorExpression> {
    proptest::array::uniform21(-2i64..=2).prop_map(DivisorExpression::from_coeffs)
}

/// Expressions in boundary labels only, with no q*H term.
fn label_expression() -> impl Strategy<Value = DivisorExpression> {
    proptest::array::uniform20(-2i64..=2).prop_map(|c| {
        let mut coeffs = [0; SYMBOLS];
        for (l, x) in all_labels().into_iter().zip(c) {
            coeffs[Symbol::Label(l).index()] = x;
        }
        DivisorExpression::from_coeffs(coeffs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn relations_are_annihilated(k in 0usize..9, b in expression(), c in expression(), row in 0usize..8) {
        let r = &relation_vectors()[k];
        prop_assert_eq!(expression_triple(r, &b, &c, row), 0);
        prop_assert!(class_of(r).is_zero());
    }

    #[test]
    fn tensor_matches_label_expansion(a in expression(), b in expression(), c in expression()) {
        let t = form().triple(&class_of(&a), &class_of(&b), &class_of(&c));
        prop_assert_eq!(t, expression_triple(&a, &b, &c, SUBSTITUTION_ROW));
    }

    #[test]
    fn triple_is_symmetric(a in expression(), b in expression(), c in expression()) {
        let (a, b, c) = (class_of(&a), class_of(&b), class_of(&c));
        let f = form();
        let t = f.triple(&a, &b, &c);
        for (x, y, z) in [(&a, &c, &b), (&b, &a, &c), (&b, &c, &a), (&c, &a, &b), (&c, &b, &a)] {
            prop_assert_eq!(f.triple(x, y, z), t);
        }
    }

    #[test]
    fn triple_is_equivariant(g in 0usize..48, a in expression(), b in expression(), c in expression()) {
        let g = &group_elements()[g];
        let p = lattice();
        let (a, b, c) = (class_of(&a), class_of(&b), class_of(&c));
        prop_assert_eq!(form().triple(&p.act(g, &a), &p.act(g, &b), &p.act(g, &c)), form().triple(&a, &b, &c));
    }

    #[test]
    fn substitution_row_does_not_matter(a in expression(), b in expression(), c in expression(), r1 in 0usize..8, r2 in 0usize..8) {
        prop_assert_eq!(expression_triple(&a, &b, &c, r1), expression_triple(&a, &b, &c, r2));
    }

    #[test]
    fn class_map_is_linear_and_the_action_composes(a in expression(), b in expression(), g in 0usize..48, h in 0usize..48) {
        prop_assert_eq!(class_of(&(a.clone() + b.clone())), class_of(&a) + class_of(&b));
        let els = group_elements();
        let p = lattice();
        let d = class_of(&a);
        prop_assert_eq!(p.act(&els[g].compose(&els[h]), &d), p.act(&els[g], &p.act(&els[h], &d)));
    }

    #[test]
    fn curve_classes_pair_like_triples(e in 0usize..20, f in 0usize..20, d in label_expression()) {
        let labels = all_labels();
        let (e, f) = (labels[e], labels[f]);
        let (ee, fe) = (DivisorExpression::label(e), DivisorExpression::label(f));
        prop_assert_eq!(curve_class(e, f).pair(&class_of(&d)), expression_triple(&ee, &fe, &d, SUBSTITUTION_ROW));
    }
}
