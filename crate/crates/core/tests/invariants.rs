use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use qck_core::aqn::{multiply, words_of_content};
use qck_core::torus::{torus_mul, TorusElement};
use qck_core::uq::minor_table;
use qck_core::weyl::{bruhat_leq, enumerate_group, orbit, preceq, WeylElement};
use qck_core::{AqnElement, CartanDatum, Laurent, MinorSpec, Weight, WeylWord};

fn a(name: &str) -> CartanDatum {
    CartanDatum::by_name(name).unwrap()
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-3i64..=3, -2i64..=2), 0..4).prop_map(Laurent::from_terms)
}

/// A random element of `A_q(n)` for A3 with weight of height at most 3.
fn element() -> impl Strategy<Value = AqnElement> {
    prop::collection::vec(0i64..=1, 3)
        .prop_flat_map(|beta| {
            let words = words_of_content(&beta);
            (Just(beta), prop::collection::vec(laurent(), words.len()))
        })
        .prop_map(|(beta, coefs)| {
            let words = words_of_content(&beta);
            AqnElement::from_table(beta, words.into_iter().zip(coefs))
        })
}

fn pairing(c: &CartanDatum, x: &[i64], y: &[i64]) -> i64 {
    c.bilinear(&Weight::from_root_coords(x.to_vec()), &Weight::from_root_coords(y.to_vec())).unwrap()
}

fn skew(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(-3i64..=3, n * (n - 1) / 2).prop_map(move |v| {
        let mut l = vec![vec![0; n]; n];
        let mut it = v.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let x = it.next().unwrap();
                l[i][j] = x;
                l[j][i] = -x;
            }
        }
        l
    })
}

fn torus(n: usize) -> impl Strategy<Value = TorusElement> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, n), laurent()), 0..4).prop_map(TorusElement::from_terms)
}

fn weight(n: usize) -> impl Strategy<Value = Weight> {
    (prop::collection::vec(-3i64..=3, n), prop::collection::vec(-3i64..=3, n)).prop_map(|(p, a)| Weight::new(p, a))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn torus_is_associative(l in skew(3), x in torus(3), y in torus(3), z in torus(3)) {
        let xy = torus_mul(&x, &y, &l).unwrap();
        let yz = torus_mul(&y, &z, &l).unwrap();
        prop_assert_eq!(torus_mul(&xy, &z, &l).unwrap(), torus_mul(&x, &yz, &l).unwrap());
    }

    #[test]
    fn torus_generators_q_commute(l in skew(4), i in 0usize..4, j in 0usize..4) {
        let (xi, xj) = (TorusElement::generator(4, i), TorusElement::generator(4, j));
        let lhs = torus_mul(&xi, &xj, &l).unwrap();
        let rhs = torus_mul(&xj, &xi, &l).unwrap().shift(2 * l[i][j]);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bilinear_is_weyl_invariant(lam in weight(3), root in prop::collection::vec(-3i64..=3, 3), word in prop::collection::vec(0usize..3, 0..6)) {
        let c = a("A3");
        let mu = Weight::from_root_coords(root);
        let w = WeylWord::new(word);
        let before = c.bilinear(&lam, &mu).unwrap();
        prop_assert_eq!(c.bilinear(&c.apply_word(&w, &lam), &c.apply_word(&w, &mu)).unwrap(), before);
        prop_assert_eq!(c.bilinear(&mu, &lam).unwrap(), before);
    }

    #[test]
    fn reflections_are_involutions(lam in weight(4), i in 0usize..4) {
        let c = a("D4");
        prop_assert_eq!(c.simple_reflection(i, &c.simple_reflection(i, &lam)), lam.clone());
        prop_assert_eq!(c.pairing_h(i, &c.simple_reflection(i, &lam)).unwrap(), -c.pairing_h(i, &lam).unwrap());
    }

    #[test]
    fn product_is_associative(x in element(), y in element(), z in element()) {
        let c = a("A3");
        let left = multiply(&c, &multiply(&c, &x, &y), &z);
        let right = multiply(&c, &x, &multiply(&c, &y, &z));
        prop_assert_eq!(left, right);
        prop_assert_eq!(multiply(&c, &AqnElement::unit(3), &x), x);
    }

    #[test]
    fn bar_is_twisted_antimultiplicative(x in element(), y in element()) {
        let c = a("A3");
        let lhs = multiply(&c, &x, &y).bar();
        let rhs = multiply(&c, &y.bar(), &x.bar()).shift(pairing(&c, x.beta(), y.beta()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_boson_rules(x in element(), y in element(), i in 0usize..3) {
        let c = a("A3");
        let ai = c.simple_root(i);
        // wt(u) = -β(u)
        let wt = |u: &AqnElement| -c.bilinear(&ai, &Weight::from_root_coords(u.beta().to_vec())).unwrap();
        let xy = multiply(&c, &x, &y);
        let lhs = xy.e_action(i);
        let rhs = multiply(&c, &x.e_action(i), &y).add(&multiply(&c, &x, &y.e_action(i)).shift(wt(&x)));
        if let Ok(rhs) = rhs {
            prop_assert_eq!(lhs, rhs);
        } else {
            prop_assert!(lhs.is_zero());
        }
        let lhs = xy.e_star_action(i);
        let rhs = multiply(&c, &x, &y.e_star_action(i)).add(&multiply(&c, &x.e_star_action(i), &y).shift(wt(&y)));
        if let Ok(rhs) = rhs {
            prop_assert_eq!(lhs, rhs);
        } else {
            prop_assert!(lhs.is_zero());
        }
    }

    #[test]
    fn raising_and_orbit_word_agree(word in prop::collection::vec(0usize..3, 0..8), i in 0usize..3) {
        let c = a("A3");
        let lam = c.fundamental(i);
        let mu = c.apply_word(&WeylWord::new(word), &lam);
        let w = qck_core::weyl::orbit_word(&c, &mu, &lam).unwrap();
        prop_assert!(c.is_reduced(&w));
        prop_assert_eq!(c.apply_word(&w, &lam), mu);
    }
}

/// Products of all subwords of one reduced word of `w`.
fn subword_products(c: &CartanDatum, w: &WeylWord) -> BTreeSet<Vec<i64>> {
    let n = w.len();
    (0u32..1 << n)
        .map(|mask| {
            let letters = (0..n).filter(|k| mask & (1 << k) != 0).map(|k| w.letters()[k]).collect();
            WeylElement::from_word(c, &WeylWord::new(letters)).rho_image().alpha().to_vec()
        })
        .collect()
}

#[test]
fn bruhat_matches_subword_property() {
    for name in ["A2", "A3", "A4"] {
        let c = a(name);
        let elements = enumerate_group(&c, 1000).unwrap();
        for w in &elements {
            let ww = w.reduced_word(&c);
            let below = subword_products(&c, &ww);
            for u in &elements {
                let uw = u.reduced_word(&c);
                let expected = below.contains(u.rho_image().alpha());
                assert_eq!(bruhat_leq(&c, &uw, &ww).unwrap(), expected, "{name}: {:?} <= {:?}", uw, ww);
            }
        }
    }
}

#[test]
fn preceq_is_a_partial_order() {
    for name in ["A2", "A3"] {
        let c = a(name);
        let mut lambdas: Vec<Weight> = (0..c.rank()).map(|i| c.fundamental(i)).collect();
        lambdas.push(c.rho());
        for lam in lambdas {
            let orb = orbit(&c, &lam, 1000).unwrap();
            let rel: BTreeMap<(usize, usize), bool> = (0..orb.len())
                .flat_map(|x| (0..orb.len()).map(move |y| (x, y)))
                .map(|(x, y)| ((x, y), preceq(&c, &orb[x], &orb[y], &lam).unwrap()))
                .collect();
            for x in 0..orb.len() {
                assert!(rel[&(x, x)]);
                for y in 0..orb.len() {
                    if x != y {
                        assert!(!(rel[&(x, y)] && rel[&(y, x)]), "antisymmetry");
                    }
                    for z in 0..orb.len() {
                        if rel[&(x, y)] && rel[&(y, z)] {
                            assert!(rel[&(x, z)], "transitivity");
                        }
                    }
                }
                // the lowest weight is below everything, λ above everything
                assert!(preceq(&c, &orb[x], &lam, &lam).unwrap());
            }
        }
    }
}

/// For minuscule `λ` every weight vector is extremal and `e_i u_{s_i μ} = u_μ`
/// when `⟨h_i, μ⟩ = 1`, so a minor is 1 exactly on words walking from `μ` to `ζ`.
fn minuscule_minor(c: &CartanDatum, mu: &Weight, zeta: &Weight, word: &[usize]) -> Laurent {
    let mut cur = mu.clone();
    for &i in word.iter().rev() {
        let up = &cur + &c.simple_root(i);
        if c.pairing_h(i, &up).unwrap() != 1 {
            return Laurent::zero();
        }
        cur = up;
    }
    if &cur == zeta {
        Laurent::one()
    } else {
        Laurent::zero()
    }
}

#[test]
fn minors_of_minuscule_weights() {
    for (name, minuscule) in [("A2", vec![0, 1]), ("A3", vec![0, 1, 2]), ("D4", vec![0, 2, 3])] {
        let c = a(name);
        for i in minuscule {
            let lam = c.fundamental(i);
            let orb = orbit(&c, &lam, 1000).unwrap();
            for mu in &orb {
                for zeta in &orb {
                    if !preceq(&c, mu, zeta, &lam).unwrap() {
                        continue;
                    }
                    let spec = MinorSpec::with_lambda(&c, mu.clone(), zeta.clone(), lam.clone()).unwrap();
                    let table = minor_table(&c, &spec).unwrap();
                    for word in words_of_content(&spec.beta()) {
                        let got = table.get(&word).cloned().unwrap_or_else(Laurent::zero);
                        assert_eq!(got, minuscule_minor(&c, mu, zeta, &word), "{name} {:?} {:?} {:?}", mu, zeta, word);
                    }
                }
            }
        }
    }
}

#[test]
fn divided_power_minor_oracle() {
    // D(s_1(nϖ_1), nϖ_1) on (1^n) is [n]_q! in A1
    let c = a("A1");
    for n in 1..=5u32 {
        let lam = (n as i64) * &c.fundamental(0);
        let spec = MinorSpec::with_lambda(&c, c.simple_reflection(0, &lam), lam.clone(), lam).unwrap();
        let table = minor_table(&c, &spec).unwrap();
        assert_eq!(table[&vec![0; n as usize]], Laurent::quantum_factorial(n));
    }
}
