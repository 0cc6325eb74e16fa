use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use parhom_core::exactalg::Ring;
use parhom_core::group::{FiniteGroup, GroupSpec};
use parhom_core::parsemigroup::*;
use proptest::prelude::*;

/// Equivalence classes of words under the defining relations, explored by two-way
/// rewriting with a length cap.
fn rewrite_class(g: &FiniteGroup, start: &[usize], cap: usize) -> HashSet<Vec<usize>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    let n = g.order();
    while let Some(w) = queue.pop_front() {
        let mut next: Vec<Vec<usize>> = Vec::new();
        // [1] = 1
        for i in 0..w.len() {
            if w[i] == 0 {
                let mut v = w.clone();
                v.remove(i);
                next.push(v);
            }
        }
        if w.len() < cap {
            for i in 0..=w.len() {
                let mut v = w.clone();
                v.insert(i, 0);
                next.push(v);
            }
        }
        for i in 0..w.len() {
            // [s^-1][s][t] -> [s^-1][st]  and  [s][t][t^-1] -> [st][t^-1]
            if i + 2 < w.len() {
                let (x, y, z) = (w[i], w[i + 1], w[i + 2]);
                if x == g.inv(y) {
                    let mut v = w[..i].to_vec();
                    v.extend([x, g.mul(y, z)]);
                    v.extend(&w[i + 3..]);
                    next.push(v);
                }
                if z == g.inv(y) {
                    let mut v = w[..i].to_vec();
                    v.extend([g.mul(x, y), z]);
                    v.extend(&w[i + 3..]);
                    next.push(v);
                }
            }
            // reverse directions on pairs
            if i + 1 < w.len() && w.len() < cap {
                let (x, y) = (w[i], w[i + 1]);
                let mut v = w[..i].to_vec();
                v.extend([x, g.inv(x), g.mul(x, y)]);
                v.extend(&w[i + 2..]);
                next.push(v);
                let mut v = w[..i].to_vec();
                v.extend([g.mul(x, y), g.inv(y), y]);
                v.extend(&w[i + 2..]);
                next.push(v);
            }
        }
        for v in next {
            debug_assert!(v.iter().all(|&a| a < n));
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

fn all_words(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..n {
                let mut v: Vec<usize> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Prefix-product model: a word is determined by the set of its prefix products
/// together with its total product.
fn prefix_model(g: &FiniteGroup, word: &[usize]) -> (BTreeSet<usize>, usize) {
    let mut acc = 0;
    let mut set = BTreeSet::from([0]);
    for &x in word {
        acc = g.mul(acc, x);
        set.insert(acc);
    }
    (set, acc)
}

fn from_prefix_model(model: &(BTreeSet<usize>, usize)) -> SElem {
    let ids: Vec<usize> = model.0.iter().copied().filter(|&a| a != 0 && a != model.1).collect();
    SElem { idem: IdemSet::from_ids(&ids), grp: model.1 }
}

#[test]
fn rewriting_oracle_agrees_on_c3() {
    let g = FiniteGroup::cyclic(3).unwrap();
    let words = all_words(3, 3);
    let mut class_of: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<HashSet<Vec<usize>>> = Vec::new();
    for w in &words {
        if class_of.contains_key(w) {
            continue;
        }
        let c = rewrite_class(&g, w, 5);
        for v in &c {
            class_of.insert(v.clone(), classes.len());
        }
        classes.push(c);
    }
    for a in &words {
        for b in &words {
            let same_nf = sg_normalize(&g, a) == sg_normalize(&g, b);
            let same_class = class_of[a] == class_of[b];
            assert_eq!(same_nf, same_class, "{:?} vs {:?}", a, b);
        }
    }
}

#[test]
fn rewriting_oracle_on_c3_squares() {
    // [a][a] = e_a [a^2]
    let g = FiniteGroup::cyclic(3).unwrap();
    let class = rewrite_class(&g, &[1, 1], 5);
    // e_a [a^2] = [a][a^-1][a^2]
    assert!(class.contains(&vec![1, 2, 2]));
    let c2 = FiniteGroup::cyclic(2).unwrap();
    // e_g [g] = [g]
    assert!(rewrite_class(&c2, &[1, 1, 1], 4).contains(&vec![1]));
}

fn rewriting_oracle_sampled(g: &FiniteGroup, samples: &[Vec<usize>]) {
    for w in samples {
        let class = rewrite_class(g, w, w.len() + 1);
        let nf = sg_normalize(g, w);
        for v in &class {
            assert_eq!(sg_normalize(g, v), nf, "{:?} rewrites to {:?}", w, v);
        }
    }
}

#[test]
fn rewriting_preserves_normal_form_s3() {
    let g = FiniteGroup::symmetric(3).unwrap();
    let words: Vec<Vec<usize>> = all_words(6, 3).into_iter().filter(|w| w.len() == 3).collect();
    rewriting_oracle_sampled(&g, &words);
}

#[test]
fn prefix_model_matches_normal_form() {
    for g in [FiniteGroup::cyclic(3).unwrap(), FiniteGroup::symmetric(3).unwrap()] {
        for w in all_words(g.order(), 4) {
            assert_eq!(sg_normalize(&g, &w), from_prefix_model(&prefix_model(&g, &w)), "{:?}", w);
        }
    }
}

/// Closure of the generators under concatenation in the prefix model.
fn closure_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    let gens: Vec<(BTreeSet<usize>, usize)> = (0..n).map(|x| prefix_model(g, &[x])).collect();
    let mut seen: HashSet<(BTreeSet<usize>, usize)> = gens.iter().cloned().collect();
    let mut frontier: Vec<_> = gens.clone();
    while let Some(x) = frontier.pop() {
        for y in &gens {
            let (p, a) = (&x.0, x.1);
            let mut set = p.clone();
            set.extend(y.0.iter().map(|&q| g.mul(a, q)));
            let z = (set, g.mul(a, y.1));
            if seen.insert(z.clone()) {
                frontier.push(z);
            }
        }
    }
    seen.len()
}

#[test]
fn closure_oracle_counts() {
    let c2 = GroupSpec::Cyclic(2);
    let cases = [
        (FiniteGroup::cyclic(2).unwrap(), 3),
        (FiniteGroup::cyclic(3).unwrap(), 8),
        (FiniteGroup::product(&[c2.clone(), c2]).unwrap(), 20),
        (FiniteGroup::symmetric(3).unwrap(), 112),
    ];
    for (g, expected) in cases {
        assert_eq!(closure_count(&g), expected);
        assert_eq!(enumerate_s(&g).unwrap().len(), expected);
        assert_eq!(enumerate_idempotents(&g).unwrap().len(), 1 << (g.order() - 1));
    }
}

fn small_groups() -> Vec<FiniteGroup> {
    let c2 = GroupSpec::Cyclic(2);
    vec![
        FiniteGroup::cyclic(2).unwrap(),
        FiniteGroup::cyclic(3).unwrap(),
        FiniteGroup::product(&[c2.clone(), c2]).unwrap(),
    ]
}

#[test]
fn exhaustive_laws_small_groups() {
    for g in small_groups() {
        let s = enumerate_s(&g).unwrap();
        for &x in &s {
            let xs = sg_star(&g, x);
            assert_eq!(sg_mul(&g, sg_mul(&g, x, xs), x), x);
            assert_eq!(sg_mul(&g, sg_mul(&g, xs, x), xs), xs);
            assert_eq!(sg_mul(&g, xs, x).grp, 0);
            assert_eq!(sg_mul(&g, SElem::ONE, x), x);
            assert_eq!(sg_mul(&g, x, SElem::ONE), x);
            for &y in &s {
                if x.is_idempotent() && y.is_idempotent() {
                    assert_eq!(sg_mul(&g, x, y), sg_mul(&g, y, x));
                }
            }
        }
        if g.order() <= 3 {
            for &x in &s {
                for &y in &s {
                    for &z in &s {
                        assert_eq!(sg_mul(&g, sg_mul(&g, x, y), z), sg_mul(&g, x, sg_mul(&g, y, z)));
                    }
                }
            }
        }
        let q = Ring::Rationals;
        for &x in &s {
            let z = ParAlgElt::monomial(q, x);
            assert_eq!(epsilon(&g, &z), ParAlgElt::monomial(q, sg_mul(&g, sg_star(&g, x), x)));
        }
    }
}

#[test]
fn b_actions_are_multiplication_on_b() {
    let q = Ring::Rationals;
    for g in small_groups() {
        let b = enumerate_idempotents(&g).unwrap();
        for &w in &b {
            for &u in &b {
                let wu = ParAlgElt::monomial(q, sg_mul(&g, w, u));
                let (wa, ua) = (ParAlgElt::monomial(q, w), ParAlgElt::monomial(q, u));
                // w ▷ u as w u w*, u ◁ w as w* u w
                let dom = wa.mul(&g, &ua).unwrap().mul(&g, &ParAlgElt::monomial(q, sg_star(&g, w))).unwrap();
                assert_eq!(dom, wu);
                assert_eq!(cod_act_alg(&g, &ua, &wa).unwrap(), wu);
            }
        }
    }
}

#[test]
fn idempotents_are_self_inverse() {
    let g = FiniteGroup::symmetric(3).unwrap();
    for x in 0..6 {
        assert_eq!(sg_star(&g, SElem::e(x)), SElem::e(x));
    }
    assert_eq!(sg_star(&g, SElem::ONE), SElem::ONE);
}

/// ε([g_1]…[g_n]) = e_{g_n^{-1}} e_{g_n^{-1} g_{n-1}^{-1}} … e_{g_n^{-1}…g_1^{-1}}
fn epsilon_closed_form(g: &FiniteGroup, word: &[usize]) -> SElem {
    let mut acc = 0;
    let mut ids = Vec::new();
    for &x in word.iter().rev() {
        acc = g.mul(acc, g.inv(x));
        ids.push(acc);
    }
    SElem::idempotent(IdemSet::from_ids(&ids))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normal_form_matches_prefix_model(word in prop::collection::vec(0usize..6, 0..=5), which in 0usize..2) {
        let g = if which == 0 { FiniteGroup::cyclic(3).unwrap() } else { FiniteGroup::symmetric(3).unwrap() };
        let word: Vec<usize> = word.into_iter().map(|a| a % g.order()).collect();
        prop_assert_eq!(sg_normalize(&g, &word), from_prefix_model(&prefix_model(&g, &word)));
    }

    #[test]
    fn epsilon_suite_s3(word in prop::collection::vec(0usize..6, 0..=4)) {
        let g = FiniteGroup::symmetric(3).unwrap();
        let q = Ring::Rationals;
        let z = sg_normalize(&g, &word);
        let eps = epsilon(&g, &ParAlgElt::monomial(q, z));
        prop_assert_eq!(eps.clone(), ParAlgElt::monomial(q, epsilon_closed_form(&g, &word)));
        prop_assert_eq!(eps, ParAlgElt::monomial(q, sg_mul(&g, sg_star(&g, z), z)));
    }

    #[test]
    fn epsilon_twisted_rule(word in prop::collection::vec(0usize..6, 0..=4), h in 0usize..6) {
        // [h^{-1}] ε(z) = ε(z[h]) [h^{-1}]
        let g = FiniteGroup::symmetric(3).unwrap();
        let q = Ring::Rationals;
        let z = ParAlgElt::monomial(q, sg_normalize(&g, &word));
        let hinv = ParAlgElt::gen(q, g.inv(h));
        let lhs = hinv.mul(&g, &epsilon(&g, &z)).unwrap();
        let zh = z.mul(&g, &ParAlgElt::gen(q, h)).unwrap();
        let rhs = epsilon(&g, &zh).mul(&g, &hinv).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn associativity_s3(a in 0usize..112, b in 0usize..112, c in 0usize..112) {
        let g = FiniteGroup::symmetric(3).unwrap();
        let s = enumerate_s(&g).unwrap();
        let (x, y, z) = (s[a], s[b], s[c]);
        prop_assert_eq!(sg_mul(&g, sg_mul(&g, x, y), z), sg_mul(&g, x, sg_mul(&g, y, z)));
    }

    #[test]
    fn left_identity_s3(a in 0usize..112) {
        let g = FiniteGroup::symmetric(3).unwrap();
        let s = enumerate_s(&g).unwrap();
        prop_assert_eq!(sg_mul(&g, SElem::ONE, s[a]), s[a]);
    }

    #[test]
    fn nu_rules_s3(a in 0usize..6, b in 0usize..6) {
        let g = FiniteGroup::symmetric(3).unwrap();
        let q = Ring::Rationals;
        let (na, nb) = (nu(q, a), nu(q, b));
        prop_assert_eq!(na.mul(&g, &nb).unwrap(), nb.mul(&g, &na).unwrap());
        let ga = ParAlgElt::gen(q, a);
        prop_assert_eq!(ga.mul(&g, &nb).unwrap(), nu(q, g.mul(a, b)).mul(&g, &ga).unwrap());
        prop_assert!(na.mul(&g, &ga).unwrap().is_zero());
    }

    #[test]
    fn idempotents_commute_s3(a in 0usize..6, b in 0usize..6) {
        let g = FiniteGroup::symmetric(3).unwrap();
        let q = Ring::Rationals;
        let (ea, eb) = (ParAlgElt::e(q, a), ParAlgElt::e(q, b));
        prop_assert_eq!(ea.mul(&g, &eb).unwrap(), eb.mul(&g, &ea).unwrap());
        prop_assert_eq!(ea.mul(&g, &ea).unwrap(), ea);
    }
}
