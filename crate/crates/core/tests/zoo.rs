use mtc_core::algebra::{verify_module, verify_simple_list};
use mtc_core::braided::{
    pivotal_structure, ribbon_from_grouplikes, verify_r_matrix, verify_ribbon, yang_baxter,
};
use mtc_core::zoo::{generate, EXAMPLE_NAMES};

#[test]
fn every_example_is_a_ribbon_hopf_algebra_with_simples() {
    for name in EXAMPLE_NAMES {
        let h = generate(name).unwrap();
        let s = h.verify();
        assert!(s.passed(), "{name}: {s}");
        let rm = h.r_matrix.as_ref().unwrap();
        let r = verify_r_matrix(&h, rm);
        assert!(r.passed(), "{name}: {r}");
        assert!(yang_baxter(&h, &rm.r).passed, "{name}");
        for m in &h.modules {
            let v = verify_module(&h.algebra, m);
            assert!(v.passed, "{name}: {v}");
        }
        let simples = verify_simple_list(&h.algebra, &h.modules);
        assert!(simples.passed(), "{name}: {simples}");
        if let Some(rib) = &h.ribbon {
            let (s, data) = verify_ribbon(&h, rm, &rib.element);
            assert!(s.passed(), "{name}: {s}");
            assert!(data.is_some());
        } else {
            assert!(
                name.starts_with("sweedler") || *name == "double_sweedler",
                "{name} lacks a ribbon"
            );
        }
    }
}

#[test]
fn double_sweedler_shape() {
    let d = generate("double_sweedler").unwrap();
    assert_eq!(d.dim(), 16);
    assert_eq!(d.algebra.trace_radical().len(), 6);
    assert_eq!(d.algebra.center_basis().len(), 5);
    assert!(d.ribbon.is_none());
    assert!(pivotal_structure(&d).is_some());
    let rm = d.r_matrix.as_ref().unwrap();
    assert!(d.grouplikes.iter().all(|g| ribbon_from_grouplikes(&d, rm, std::slice::from_ref(g)).is_none()));
}

#[test]
fn unknown_example_is_an_error() {
    assert!(generate("nope").is_err());
}
