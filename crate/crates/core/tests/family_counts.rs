use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rho_partitions::combinatorics::{
    count, count_via_series, decoration_weight, enumerate_partitions, merca_a, merca_a_series,
    Family,
};
use rho_partitions::series::Series;

fn series_families() -> Vec<Family> {
    let mut out = vec![
        Family::Unrestricted,
        Family::Overpartition,
        Family::OverpartitionOdd,
        Family::OverpartitionEven,
        Family::Cubic,
        Family::Pod,
        Family::Ped,
    ];
    for ell in [2, 3, 4, 5, 7] {
        out.push(Family::LRegular(ell));
        out.push(Family::OverpartitionLRegular(ell));
    }
    for k in [1, 2, 3, 5] {
        out.push(Family::KColored(k));
    }
    out
}

#[test]
fn unrestricted_enumeration_matches_inverse_euler_product() {
    let p = Series::pochhammer(1, 1, 40).inverse().unwrap();
    for n in 0..=40 {
        assert_eq!(BigInt::from(count(Family::Unrestricted, n)), p.coeffs()[n]);
    }
}

#[test]
fn enumeration_matches_series_for_every_family() {
    for family in series_families() {
        let series = count_via_series(family, 30).unwrap();
        for n in 0..=30 {
            assert_eq!(
                BigInt::from(count(family, n)),
                series.coeffs()[n],
                "{family} at n={n}"
            );
        }
    }
}

#[test]
fn overpartition_weight_is_two_to_distinct_sizes() {
    for n in 0..=20 {
        for p in enumerate_partitions(n) {
            let d = p.multiplicities().count();
            assert_eq!(
                decoration_weight(Family::Overpartition, &p),
                BigUint::from(1u32) << d
            );
        }
    }
}

#[test]
fn family_relations() {
    for n in 0..=30 {
        let p = count(Family::Unrestricted, n);
        assert_eq!(count(Family::KColored(1), n), p);
        assert!(count(Family::Ped, n) <= p);
        if n % 2 == 1 {
            assert!(count(Family::OverpartitionEven, n).is_zero());
        }
    }
}

#[test]
fn even_less_than_odd_small_values() {
    // Partitions of 5 with every even part below every odd part:
    // 5, 3+2, 3+1+1, 1+1+1+1+1.
    assert_eq!(count(Family::EvenLessThanOdd, 5), BigUint::from(4u32));
    assert_eq!(count(Family::EvenLessThanOdd, 0), BigUint::from(1u32));
}

#[test]
fn merca_series_matches_enumeration() {
    let s = merca_a_series(40);
    for n in 1..=40 {
        assert_eq!(BigInt::from(merca_a(n)), s.coeffs()[n], "n={n}");
    }
}
