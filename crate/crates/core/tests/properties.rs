mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use superlie::assoc::{collect, expand_poly, expand_term, Expander};
use superlie::Parity::{Even, Odd};
use superlie::{
    bracket, left_normalize, multidegree, normal_form, parse_expression, Alphabet, AssocPoly,
    AssocWord, LiePoly, Parity, SuperBasis,
};

use common::{random_poly, random_term};

fn alphabet_from(bits: &[bool]) -> Alphabet {
    let ps: Vec<Parity> = bits.iter().map(|&b| if b { Odd } else { Even }).collect();
    Alphabet::with_parities(&ps).unwrap()
}

fn parities() -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weight_and_parity_are_additive(bits in parities(), seed: u64, wl in 1usize..4, wr in 1usize..4) {
        let a = alphabet_from(&bits);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_term(&mut rng, &a, wl);
        let r = random_term(&mut rng, &a, wr);
        let t = superlie::LieTerm::bracket(&l, &r);
        prop_assert_eq!(t.weight(), wl + wr);
        prop_assert_eq!(t.parity(), l.parity() + r.parity());
        let odd_leaves = t.leaves().iter().filter(|&&i| a.parity(i).unwrap().is_odd()).count();
        prop_assert_eq!(t.parity().is_odd(), odd_leaves % 2 == 1);
    }

    #[test]
    fn expansion_is_a_super_commutator(bits in parities(), seed: u64) {
        let a = alphabet_from(&bits);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_term(&mut rng, &a, 2);
        let r = random_term(&mut rng, &a, 2);
        let lhs = expand_term(&superlie::LieTerm::bracket(&l, &r));
        let (el, er) = (expand_term(&l), expand_term(&r));
        let sign = BigInt::from(-l.parity().koszul_sign(r.parity()));
        let mut rhs = el.mul(&er);
        rhs.add_scaled(&er.mul(&el), &sign);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_keeps_multidegree(bits in parities(), seed: u64, w in 1usize..6) {
        let a = alphabet_from(&bits);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_term(&mut rng, &a, w);
        let degree = t.multidegree(a.len());
        for (word, _) in &expand_term(&t) {
            prop_assert_eq!(word.len(), w);
            prop_assert_eq!(multidegree(word, &a).unwrap(), degree.clone());
            prop_assert_eq!(word.parity(&a).unwrap(), t.parity());
        }
    }

    #[test]
    fn left_normalize_is_sound_and_left_normed(bits in parities(), seed: u64, w in 1usize..6) {
        let a = alphabet_from(&bits);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_term(&mut rng, &a, w);
        let ln = left_normalize(&t, &a).unwrap();
        prop_assert_eq!(expand_poly(&ln), expand_term(&t));
        for (s, _) in &ln {
            prop_assert!(s.is_left_comb());
            prop_assert_eq!(s.multidegree(a.len()), t.multidegree(a.len()));
        }
    }

    #[test]
    fn normal_form_is_sound_and_stable(bits in parities(), seed: u64) {
        let a = alphabet_from(&bits);
        let sb = SuperBasis::new(&a, 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poly(&mut rng, &a, 5);
        let nf = normal_form(&p, &sb).unwrap();
        prop_assert_eq!(expand_poly(&nf.to_lie_poly()), expand_poly(&p));
        prop_assert_eq!(normal_form(&nf.to_lie_poly(), &sb).unwrap(), nf);
    }

    #[test]
    fn normal_form_is_linear(bits in parities(), seed: u64, k in -3i64..=3) {
        let a = alphabet_from(&bits);
        let sb = SuperBasis::new(&a, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poly(&mut rng, &a, 4);
        let q = random_poly(&mut rng, &a, 4);
        let mut sum = p.clone();
        sum.add_scaled(&q, &BigInt::from(k));
        let mut expected = normal_form(&p, &sb).unwrap().to_lie_poly();
        expected.add_scaled(&normal_form(&q, &sb).unwrap().to_lie_poly(), &BigInt::from(k));
        prop_assert_eq!(normal_form(&sum, &sb).unwrap().to_lie_poly(), expected);
    }

    #[test]
    fn antisymmetry_holds_in_normal_form(bits in parities(), seed: u64) {
        let a = alphabet_from(&bits);
        let sb = SuperBasis::new(&a, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = LiePoly::monomial(random_term(&mut rng, &a, 2));
        let v = LiePoly::monomial(random_term(&mut rng, &a, 2));
        let pu = u.homogeneous_parity().unwrap();
        let pv = v.homogeneous_parity().unwrap();
        let mut total = bracket(&u, &v);
        total.add_scaled(&bracket(&v, &u), &BigInt::from(pu.koszul_sign(pv)));
        prop_assert!(normal_form(&total, &sb).unwrap().is_zero());
    }

    #[test]
    fn rendering_round_trips(bits in parities(), seed: u64) {
        let a = alphabet_from(&bits);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poly(&mut rng, &a, 5);
        let text = p.display(&a).to_string();
        prop_assert_eq!(parse_expression(&text, &a).unwrap(), p);
    }

    #[test]
    fn collection_reproduces_the_word(bits in parities(), letters in prop::collection::vec(0usize..3, 1..=5)) {
        let a = alphabet_from(&bits);
        let word = AssocWord::new(letters.into_iter().map(|i| i % a.len()).collect());
        let hall = superlie::HallBasis::new(&a, word.len()).unwrap();
        let collected = collect(&word, &hall).unwrap();
        let ex = Expander::new(&hall);
        let mut back = AssocPoly::zero();
        for (product, c) in &collected {
            prop_assert!(product.is_basic());
            back.add_scaled(&ex.product(product.factors()), c);
        }
        prop_assert_eq!(back, AssocPoly::monomial(word));
    }
}
