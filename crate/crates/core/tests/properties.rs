use std::sync::Arc;

use mtc_core::coend::Coend;
use mtc_core::format::parse_hopf;
use mtc_core::modular::phi_element;
use mtc_core::zoo::generate;
use mtc_core::{CycloField, CycloScalar, ExactMatrix, Vector};
use num_rational::BigRational;
use proptest::prelude::*;

fn scalar(f: &Arc<CycloField>, coeffs: &[(i64, i64)]) -> CycloScalar {
    let c = coeffs
        .iter()
        .take(f.degree())
        .map(|&(n, d)| BigRational::new(n.into(), d.into()))
        .chain(std::iter::repeat(BigRational::from_integer(0.into())))
        .take(f.degree())
        .collect();
    f.from_coeffs(c).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..10, 1i64..6), 4)
}

fn combination(f: &Arc<CycloField>, basis: &[Vector], ks: &[i64]) -> Vector {
    let mut out = vec![f.zero(); basis[0].len()];
    for (b, &k) in basis.iter().zip(ks) {
        for (o, x) in out.iter_mut().zip(b) {
            *o += &(x * &f.from_int(k));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms(order in prop::sample::select(vec![1usize, 3, 4, 12]), a in coeffs(), b in coeffs(), c in coeffs()) {
        let f = CycloField::new(order).unwrap();
        let (a, b, c) = (scalar(&f, &a), scalar(&f, &b), scalar(&f, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_none());
        }
        let zeta = f.zeta_pow(1);
        prop_assert!(zeta.pow(order as u32).is_one());
    }

    #[test]
    fn matrix_inverse_and_rank(entries in prop::collection::vec(-3i64..4, 9)) {
        let f = CycloField::new(1).unwrap();
        let rows = entries.chunks(3).map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect();
        let m = ExactMatrix::from_rows(&f, 3, rows);
        prop_assert_eq!(m.rank() + m.kernel().len(), 3);
        match m.inverse() {
            Some(inv) => prop_assert!(m.mul(&inv).is_identity()),
            None => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn malformed_files_are_errors_not_panics(cut in 0usize..400, junk in "[\\[\\]{}\",:0-9a-z/ -]{0,8}") {
        let text = mtc_core::format::to_json(&generate("z2").unwrap()).unwrap();
        let cut = cut.min(text.len());
        let broken = format!("{}{junk}{}", &text[..cut], &text[cut..]);
        let _ = parse_hopf(&broken);
    }
}

#[test]
fn drinfeld_map_is_multiplicative_on_class_functions() {
    for name in ["double_z2", "sweedler_r1", "z3_braided"] {
        let h = generate(name).unwrap();
        let c = Coend::build(&h).unwrap();
        let f = h.field().clone();
        let cf = c.class_functions();
        let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig::with_cases(16));
        let ks = prop::collection::vec(-4i64..5, cf.len());
        runner
            .run(&(ks.clone(), ks), |(a, b)| {
                let x = combination(&f, &cf, &a);
                let y = combination(&f, &cf, &b);
                let lhs = phi_element(&c, &c.product(&x, &y));
                let rhs = h.mul(&phi_element(&c, &x), &phi_element(&c, &y));
                prop_assert_eq!(lhs, rhs, "{}", name);
                Ok(())
            })
            .unwrap();
    }
}
