use nilcone_core::classical_orbits::{complex_parent, enumerate_labels, enumerate_orbits, orbit_dimension};
use nilcone_core::partitions::{enumerate_fine, enumerate_partitions, Flavor, Partition};
use nilcone_core::selfdual::{compose_selfdual, join_projective_dim};
use nilcone_core::RealFormId;
use proptest::prelude::*;

fn partition_strategy(max_n: u32) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        let all = enumerate_partitions(n, true).unwrap();
        let len = all.len();
        (0..len).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn transpose_is_an_involution(m in partition_strategy(30)) {
        prop_assert_eq!(m.transpose().transpose(), m.clone());
        prop_assert_eq!(m.transpose().n(), m.n());
    }

    #[test]
    fn text_round_trip(m in partition_strategy(20)) {
        let back: Partition = m.to_string().parse().unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn fine_count_and_signatures(m in partition_strategy(12)) {
        let fine = enumerate_fine(&m, Flavor::Fine, None).unwrap();
        let want: usize = m.multiplicities().map(|(_, k)| k as usize + 1).product();
        prop_assert_eq!(fine.len(), want);
        let k: i64 = m.multiplicities().filter(|(d, _)| d % 2 == 1).map(|(_, c)| c as i64).sum();
        for f in &fine {
            let s = f.signature().unwrap();
            prop_assert!(s.abs() <= k && (k - s) % 2 == 0);
            let back = nilcone_core::FinePartition::parse(&f.to_string(), Flavor::Fine).unwrap();
            prop_assert_eq!(&back, f);
        }
        for s in [-1i64, 0, 1, 2] {
            for f in enumerate_fine(&m, Flavor::Fine, Some(s)).unwrap() {
                prop_assert_eq!(f.signature().unwrap(), s);
            }
        }
    }

    #[test]
    fn composition_is_a_conjunction(v in proptest::collection::vec(any::<bool>(), 1..8)) {
        let mut r = v.clone();
        r.reverse();
        prop_assert_eq!(compose_selfdual(&v).unwrap(), v.iter().all(|&b| b));
        prop_assert_eq!(compose_selfdual(&r).unwrap(), compose_selfdual(&v).unwrap());
    }

    #[test]
    fn join_adds_affine_dimensions(v in proptest::collection::vec(0u64..50, 1..6)) {
        let affine: u64 = v.iter().map(|d| d + 1).sum();
        prop_assert_eq!(join_projective_dim(&v).unwrap(), affine - 1);
    }
}

fn brute_p(n: u32, max: u32) -> usize {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n)).map(|k| brute_p(n - k, k)).sum()
}

#[test]
fn partition_counts() {
    for n in 1..=20 {
        let all = enumerate_partitions(n, true).unwrap();
        assert_eq!(all.len(), brute_p(n, n), "p({n})");
        let mut sorted = all.clone();
        sorted.sort_by_key(|p| std::cmp::Reverse(p.parts()));
        assert_eq!(sorted, all, "order for n = {n}");
    }
    assert!(enumerate_partitions(1, false).unwrap().is_empty());
    assert_eq!(enumerate_partitions(0, true).unwrap_err().code(), "zero_size");
}

fn real_forms_up_to(n: u32) -> Vec<RealFormId> {
    let mut out = Vec::new();
    for k in 2..=n {
        out.push(RealFormId::SlR(k));
        for q in 0..=k / 2 {
            out.push(RealFormId::Su(k - q, q));
            if k == 3 || k >= 5 {
                out.push(RealFormId::So(k - q, q));
            }
            out.push(RealFormId::SpH(k - q, q));
        }
        if k % 2 == 0 {
            out.push(RealFormId::SpR(k));
        }
    }
    for k in 1..=n {
        out.push(RealFormId::SlH(k));
        out.push(RealFormId::UStarH(k));
    }
    out
}

#[test]
fn parity_and_complex_parent() {
    for f in real_forms_up_to(8) {
        for r in enumerate_orbits(&f).unwrap() {
            let d = r.dim.value();
            assert_eq!(d % 2, 0, "{f} {}", r.label.data);
            let (pf, pl) = complex_parent(&f, r.label.data.base()).unwrap();
            assert_eq!(orbit_dimension(&pf, &pl).unwrap(), d, "{f} {} vs {pf}", r.label.data);
        }
    }
}

#[test]
fn labels_are_distinct() {
    for f in real_forms_up_to(7) {
        let labels = enumerate_labels(&f).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            assert!(seen.insert(l.to_string()), "{f}: {l} twice");
        }
    }
}
