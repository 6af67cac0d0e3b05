mod common;

use num_bigint::BigInt;
use rootdata::cartan::Family;
use rootdata::generic_group::{
    order_polynomial, table_check, table_row, table_rows, toric_order, CompleteRootDatum, Method, OrderPolynomial,
};
use rootdata::isogeny::{classify_isogeny, gl_unitary_automorphism, morphism_check, Twist};
use rootdata::rootdatum::{
    catalog_by_name, enumerate_isogeny_classes, gl_datum, rank1_classify, weyl_order, Rank1Kind, DEFAULT_WEYL_CAP,
};
use rootdata::{IntMat, QPoly};

use common::*;

#[test]
fn isogeny_class_counts() {
    // subgroups of the fundamental group
    for (t, n) in [("A1", 2), ("A3", 3), ("D4", 5), ("E6", 2), ("A5", 4), ("G2", 1)] {
        assert_eq!(enumerate_isogeny_classes(&cartan(t)).len(), n, "{t}");
    }
}

#[test]
fn rank_one_trichotomy() {
    assert_eq!(rank1_classify(&catalog_by_name("SL(2)").unwrap()).unwrap(), Rank1Kind::SL2Like);
    assert_eq!(rank1_classify(&catalog_by_name("PGL(2)").unwrap()).unwrap(), Rank1Kind::PGL2Like);
    assert_eq!(rank1_classify(&gl_datum(2).unwrap()).unwrap(), Rank1Kind::GL2Like);
}

#[test]
fn large_rows_have_consistent_shape() {
    // E₇ and E₈ are not recomputed; only the factored form is checked
    for (key, label) in table_rows() {
        let row = table_row(key.0, key.1, key.2).unwrap();
        let c = std(key.0, key.1);
        let nroots: usize = rootdata::rootdatum::sc_datum(&c).num_roots();
        let o = OrderPolynomial::new(row).unwrap();
        assert!(o.check_shape(nroots, key.1), "{label}");
    }
}

#[test]
fn e7_falls_back_to_the_table() {
    let crd = CompleteRootDatum::untwisted(&rootdata::rootdatum::sc_datum(&std(Family::E, 7)));
    let o = order_polynomial(&crd, Method::Bn, DEFAULT_WEYL_CAP).unwrap();
    assert!(o.table_sourced);
    assert_eq!(weyl_order(crd.datum().cartan()), BigInt::from(2_903_040));
}

#[test]
fn gl_tori_and_unitary_twist() {
    let gl = CompleteRootDatum::untwisted(&gl_datum(3).unwrap());
    // Coxeter torus of GL₃ has order y³ − 1
    assert_eq!(toric_order(&gl, &[0, 1]).unwrap(), QPoly::binomial(3, 1));
    assert_eq!(toric_order(&gl, &[]).unwrap(), QPoly::binomial(1, 1).pow(3));
    let u = gl_unitary_automorphism(3).unwrap();
    let c = classify_isogeny(&u);
    assert!(c.isomorphism);
    assert_eq!(c.endo.unwrap().twist, Twist::Twisted);
}

#[test]
fn sl_to_pgl_is_not_surjective() {
    let (sl, pgl) = (catalog_by_name("SL(2)").unwrap(), catalog_by_name("PGL(2)").unwrap());
    // X(PGL₂) = ℤα → X(SL₂) = ℤω, α ↦ 2ω
    let rep = morphism_check(&pgl, &sl, &IntMat::from_i64(&[vec![2]]), 2);
    assert!(!rep.is_hom_of_root_data || !rep.is_surjective);
    assert_eq!(rep.cokernel_invariants, vec![BigInt::from(2)]);
}

#[test]
fn table_check_reports_matches() {
    for t in ["A3", "B3", "G2"] {
        let crd = CompleteRootDatum::untwisted(&rootdata::rootdatum::adjoint_datum(&cartan(t)));
        let r = table_check(&crd, Method::Molien, DEFAULT_WEYL_CAP).unwrap();
        assert!(r.matches && r.diff().is_zero(), "{t}");
    }
}

fn order_of(crd: &CompleteRootDatum) -> QPoly {
    order_polynomial(crd, Method::Molien, DEFAULT_WEYL_CAP).unwrap().poly
}

#[test]
fn restriction_of_scalars() {
    use rootdata::generic_group::make_complete;
    use rootdata::rootdatum::{direct_product, sc_datum};
    use rootdata::{QuadMat, QuadNum};
    for (t, r) in [("A1", 2), ("A1", 3), ("A1", 6), ("A2", 2), ("B2", 2), ("G2", 3), ("A3", 2)] {
        let base = sc_datum(&cartan(t));
        let n = base.rank();
        let d = (1..r).fold(base.clone(), |acc, _| direct_product(&acc, &base));
        // φ₀ moves factor k to factor k + 1
        let mut phi = QuadMat::zeros(n * r, n * r);
        for k in 0..r {
            for i in 0..n {
                phi.set(((k + 1) % r) * n + i, k * n + i, QuadNum::from_int(1));
            }
        }
        let crd = make_complete(&d, &phi).unwrap();
        let expected = order_of(&CompleteRootDatum::untwisted(&base)).compose_power(r);
        assert_eq!(order_of(&crd), expected, "{t} x{r}");
    }
}

#[test]
fn duality_and_products_preserve_orders() {
    use rootdata::generic_group::{complete_product, dual_complete, parse_twisted_type, product_order, standard_complete};
    let crds: Vec<CompleteRootDatum> = ["A2", "2A3", "B3", "C3", "G2", "2B2", "2D4", "3D4", "2G2"]
        .iter()
        .map(|t| standard_complete(parse_twisted_type(t).unwrap(), true).unwrap())
        .collect();
    for c in &crds {
        assert_eq!(order_of(&dual_complete(c).unwrap()), order_of(c));
    }
    for (i, a) in crds.iter().enumerate().take(5) {
        let b = &crds[(i + 3) % crds.len()];
        if a.datum().rank() + b.datum().rank() > 6 {
            continue;
        }
        let p = complete_product(a, b).unwrap();
        let o1 = OrderPolynomial::new(order_of(a)).unwrap();
        let o2 = OrderPolynomial::new(order_of(b)).unwrap();
        assert_eq!(order_of(&p), product_order(&o1, &o2).unwrap().poly);
    }
}

#[test]
fn suzuki_group_order() {
    use rootdata::generic_group::{group_order, parse_twisted_type, standard_complete};
    use rootdata::QuadNum;
    let crd = standard_complete(parse_twisted_type("2B2").unwrap(), false).unwrap();
    let order = order_polynomial(&crd, Method::Molien, DEFAULT_WEYL_CAP).unwrap();
    assert_eq!(order.poly.to_string(), "y^10 - y^8 + y^6 - y^4");
    // |Sz(8)| = 29120
    let q = QuadNum::parse_power("2^3/2").unwrap();
    assert_eq!(group_order(&crd, &order, &q).unwrap(), BigInt::from(29120));
}
