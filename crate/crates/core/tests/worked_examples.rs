use nilcone_core::classical_orbits::{component_count, enumerate_orbits, orbit_dimension, LabelData};
use nilcone_core::exceptional::{affine_minus1_distinguished, query};
use nilcone_core::forms::{symmetric_pair_dims, IsoEntry};
use nilcone_core::partitions::{enumerate_fine, enumerate_partitions, FinePartition, Flavor, Partition};
use nilcone_core::selfdual::{classify, compose_selfdual, is_compact, join_projective_dim, ks_k_orbit, list_selfdual};
use nilcone_core::{ExceptionalForm, RealFormId};

fn form(s: &str) -> RealFormId {
    s.parse().unwrap()
}

fn label(f: &str, l: &str) -> (RealFormId, LabelData) {
    let f = form(f);
    let l = LabelData::parse(&f, l).unwrap();
    (f, l)
}

fn parts(p: &[u32]) -> Partition {
    Partition::from_parts(p).unwrap()
}

#[test]
fn partitions_layer() {
    assert_eq!(parts(&[3]).transpose(), parts(&[1, 1, 1]));
    assert_eq!(parts(&[2, 1]).transpose(), parts(&[2, 1]));
    assert_eq!(parts(&[4, 2]).transpose(), parts(&[2, 2, 1, 1]));
    assert!(parts(&[5, 1]).is_symmetric().unwrap());
    assert!(!parts(&[2, 1]).is_symmetric().unwrap());
    assert!(parts(&[2, 2]).is_skew_symmetric().unwrap());
    assert_eq!(parts(&[1, 1]).is_symmetric().unwrap_err().code(), "trivial_partition");

    let f = FinePartition::parse("[3:(1,0)]", Flavor::Fine).unwrap();
    assert_eq!(f.signature().unwrap(), 1);
    let f = FinePartition::parse("[2:(1,0),1:(1,1)]", Flavor::Fine).unwrap();
    assert_eq!(f.signature().unwrap(), 0);
    let f = FinePartition::parse("[5:(1,0),1:(0,1)]", Flavor::FineSymmetric).unwrap();
    assert_eq!(f.signature().unwrap(), 0);
    let skew = FinePartition::parse("[2:(1,1)]", Flavor::FineSkewSymmetric).unwrap();
    assert_eq!(skew.signature().unwrap_err().code(), "signature_undefined");

    assert_eq!(enumerate_partitions(3, true).unwrap(), vec![parts(&[3]), parts(&[2, 1]), parts(&[1, 1, 1])]);
    assert_eq!(enumerate_partitions(4, false).unwrap().len(), 4);

    let one = enumerate_fine(&parts(&[3]), Flavor::Fine, Some(1)).unwrap();
    assert_eq!(one.len(), 1);
    assert_eq!(one[0].to_string(), "[3:(1,0)]");
    let two: Vec<String> = enumerate_fine(&parts(&[5, 1]), Flavor::FineSymmetric, Some(0))
        .unwrap()
        .iter()
        .map(|f| f.to_string())
        .collect();
    assert_eq!(two, ["[5:(1,0),1:(0,1)]", "[5:(0,1),1:(1,0)]"]);
    assert_eq!(enumerate_fine(&parts(&[2, 2]), Flavor::FineSkewSymmetric, None).unwrap().len(), 3);
    assert_eq!(
        enumerate_fine(&parts(&[2, 1]), Flavor::FineSymmetric, None).unwrap_err().code(),
        "parity"
    );
}

#[test]
fn forms_layer() {
    assert_eq!(form("so(1,2)").normalize().unwrap(), form("so(2,1)"));
    assert_eq!(form("su(2,2)").normalize().unwrap(), form("su(2,2)"));
    assert_eq!(RealFormId::SpR(3).normalize().unwrap_err().code(), "invalid_form");
    assert_eq!(form("su(2,1)").real_dimension(), 8);
    assert_eq!(form("so(3,2)").real_dimension(), 10);
    assert_eq!(form("G2(2)").real_dimension(), 14);

    let d = symmetric_pair_dims(ExceptionalForm::E8_M24);
    assert_eq!((d.dim_k, d.dim_p, d.signature_t), (136, 112, -24));
    let d = symmetric_pair_dims(ExceptionalForm::F4_M20);
    assert_eq!((d.dim_k, d.dim_p, d.signature_t), (36, 16, -20));

    let isos = |s: &str| -> Vec<RealFormId> { form(s).iso_equivalents().iter().filter_map(IsoEntry::form).collect() };
    let so21 = isos("so(2,1)");
    for other in ["su(1,1)", "sl(2,R)", "sp(2,R)"] {
        assert!(so21.contains(&form(other)), "{other}");
    }
    assert!(isos("so(3,3)").contains(&form("sl(4,R)")));
    let su2 = isos("su(2,0)");
    for other in ["sp(1,0)", "sl(1,H)", "so(3,0)"] {
        assert!(su2.contains(&form(other)), "{other}");
    }
    for s in ["sl(4,R)", "sl(2,H)", "su(2,1)", "so(3,2)", "sp(4,R)", "sp(2,1)", "u*(3,H)", "sl(3,C)", "so(5,C)", "sp(4,C)", "E6(2)", "F4(-20)", "G2(2)"] {
        assert_eq!(form(s).to_string(), s);
    }
}

#[test]
fn iso_lists_are_symmetric() {
    let all = ["so(2,1)", "su(1,1)", "sl(2,R)", "sp(2,R)", "so(3,3)", "sl(4,R)", "so(3,2)", "sp(4,R)", "so(4,1)", "sp(1,1)", "so(5,1)", "sl(2,H)", "so(4,2)", "su(2,2)", "su(2,0)"];
    for a in all {
        let fa = form(a);
        for b in fa.iso_equivalents().iter().filter_map(IsoEntry::form) {
            let back: Vec<RealFormId> = b.iso_equivalents().iter().filter_map(IsoEntry::form).collect();
            assert!(back.contains(&fa), "{a} -> {b} but not back");
        }
    }
}

#[test]
fn classical_orbits_layer() {
    let cc = |f: &str, l: &str| {
        let (f, l) = label(f, l);
        component_count(&f, &l).unwrap()
    };
    assert_eq!(cc("sl(2,R)", "[2]"), 2);
    assert_eq!(cc("so(2,1)", "[3:(1,0)]"), 2);
    assert_eq!(cc("so(3,3)", "[5:(1,0),1:(0,1)]"), 1);

    let dim = |f: &str, l: &str| {
        let (f, l) = label(f, l);
        orbit_dimension(&f, &l).unwrap()
    };
    assert_eq!(dim("sl(3,C)", "[3]"), 6);
    assert_eq!(dim("so(3,3)", "[5:(1,0),1:(0,1)]"), 12);
    assert_eq!(dim("sp(4,R)", "[4:(1,0)]"), 8);

    let su11 = enumerate_orbits(&form("su(1,1)")).unwrap();
    assert_eq!(su11.len(), 2);
    assert!(su11.iter().all(|r| r.dim.value() == 2));
    assert_eq!(enumerate_orbits(&form("sl(4,R)")).unwrap().len(), 6);
    assert!(enumerate_orbits(&form("su(2,0)")).unwrap().is_empty());
    assert_eq!(enumerate_orbits(&form("G2(2)")).unwrap_err().code(), "exceptional_form");
}

#[test]
fn selfdual_layer() {
    let compact = |f: &str, l: &str| {
        let (f, l) = label(f, l);
        is_compact(&f, &l).unwrap()
    };
    assert!(compact("sl(4,R)", "[4]"));
    assert!(!compact("so(3,3)", "[3:(1,1)]"));
    assert!(compact("sp(2,1)", "[2,1:(1,0)]"));

    let so33 = form("so(3,3)");
    let rec = enumerate_orbits(&so33).unwrap().into_iter().find(|r| r.dim.value() == 12).unwrap();
    let k = ks_k_orbit(&rec).unwrap();
    assert_eq!((k.complex_dim, k.g_orbit_complex_dim, k.projective_dim), (6, 12, 5));
    let rec = &enumerate_orbits(&form("su(1,1)")).unwrap()[0];
    let k = ks_k_orbit(rec).unwrap();
    assert_eq!((k.complex_dim, k.projective_dim), (1, 0));

    let dims = |f: &str| -> Vec<u64> { list_selfdual(&form(f)).unwrap().iter().map(|r| r.complex_dim).collect() };
    assert_eq!(dims("G2(2)"), [5, 5, 6]);
    assert_eq!(dims("E6(6)"), [35, 33, 33, 36]);
    let mut su21 = dims("su(2,1)");
    su21.sort_unstable();
    assert_eq!(su21, [2, 2, 3]);
    assert_eq!(list_selfdual(&form("sl(3,C)")).unwrap_err().code(), "complex_family");

    let (f, l) = label("su(2,1)", "[3:(1,0)]");
    let v = classify(&f, &l).unwrap();
    assert!(v.compact && v.self_dual);
    assert_eq!(v.complex_dim, 3);

    assert!(compose_selfdual(&[true, true]).unwrap());
    assert!(!compose_selfdual(&[true, false]).unwrap());
    assert!(!compose_selfdual(&[false]).unwrap());
    assert_eq!(compose_selfdual(&[]).unwrap_err().code(), "empty_list");
    assert_eq!(join_projective_dim(&[5]).unwrap(), 5);
    assert_eq!(join_projective_dim(&[0, 0]).unwrap(), 1);
    assert_eq!(join_projective_dim(&[5, 2, 0]).unwrap(), 9);
}

#[test]
fn exceptional_layer() {
    let r = query(&form("E7(-25)"), None).unwrap()[0];
    assert_eq!(r.dyn_g, [0, 0, 0, 0, 0, 0, 2]);
    assert_eq!((r.dim_k_orbit, r.intersection_count, r.radu_dim), (27, 4, 0));
    assert_eq!(r.levi.to_string(), "F_4");
    let r = query(&form("G2(2)"), None).unwrap()[2];
    assert_eq!((r.dyn_k.as_slice(), r.dyn_g.as_slice()), (&[4, 8][..], &[2, 2][..]));
    assert_eq!((r.dim_k_orbit, r.intersection_count, r.radu_dim), (6, 1, 0));

    assert_eq!(query(&form("F4(4)"), None).unwrap().len(), 10);
    let affine = query(&form("E6(2)"), Some(&|r| r.radu_dim == 0)).unwrap();
    assert_eq!(affine.len(), 1);
    assert_eq!(affine[0].row_no, 6);
    assert_eq!(affine[0].dyn_k, [0, 0, 4, 0, 0, 8]);
    let mut dims: Vec<u64> = query(&form("F4(-20)"), None).unwrap().iter().map(|r| r.dim_k_orbit).collect();
    dims.sort_unstable();
    assert_eq!(dims, [11, 15]);
    assert_eq!(query(&form("sl(2,R)"), None).unwrap_err().code(), "classical_form");

    let rows = |f: &str| -> Vec<usize> { affine_minus1_distinguished(&form(f)).unwrap().iter().map(|r| r.row_no).collect() };
    assert_eq!(rows("E6(6)"), [4]);
    assert_eq!(rows("E7(7)"), [26, 27]);
    assert!(rows("F4(-20)").is_empty());

    for e in ExceptionalForm::ALL {
        let rs = query(&RealFormId::Exceptional(e), None).unwrap();
        let dim_p = symmetric_pair_dims(e).dim_p;
        for (i, r) in rs.iter().enumerate() {
            assert_eq!(r.row_no, i + 1);
            assert!(r.dim_k_orbit >= 1 && r.dim_k_orbit <= dim_p);
            for s in &rs {
                if s.dyn_g == r.dyn_g {
                    assert_eq!(s.dim_k_orbit, r.dim_k_orbit, "{} rows {} {}", e.label(), r.row_no, s.row_no);
                }
            }
        }
    }
}
