//! Cross-module consistency checks: the same quantity computed along two
//! independent code paths must agree exactly.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use f1geom::fan::{fan_product, standard_fan, Cone, Fan, StandardFanKind};
use f1geom::hermitian::{count_poly, zeta_rank1, GramForm, PhiSystem};
use f1geom::oracle::{
    compare_counts, projective_count_fq, quadric_count_fq, toric_count_fq, PrimeField,
};
use f1geom::points::{glued_points, orbit_points, CyclotomicIndex, Sign};
use f1geom::quadric::{
    quadric_count_poly, quadric_f1_count, quadric_f1_strata_counts, strata, stratum_counts_fq,
};
use f1geom::zeta::{fan_count_poly, weil_limit, zeta, CountPolynomial};
use f1geom::Error;

fn corpus() -> Vec<(String, Fan)> {
    let mut fans = Vec::new();
    for d in 1..=3 {
        fans.push((
            format!("projective({d})"),
            standard_fan(StandardFanKind::Projective, d).unwrap(),
        ));
        fans.push((
            format!("affine({d})"),
            standard_fan(StandardFanKind::Affine, d).unwrap(),
        ));
        fans.push((
            format!("torus({d})"),
            standard_fan(StandardFanKind::Torus, d).unwrap(),
        ));
    }
    let p1 = standard_fan(StandardFanKind::Projective, 1).unwrap();
    fans.push(("p1 x p1".into(), fan_product(&p1, &p1)));
    let a1 = standard_fan(StandardFanKind::Affine, 1).unwrap();
    let t1 = standard_fan(StandardFanKind::Torus, 1).unwrap();
    fans.push(("a1 x gm".into(), fan_product(&a1, &t1)));
    fans
}

fn index(n: u32) -> CyclotomicIndex {
    CyclotomicIndex::new(n).unwrap()
}

/// Chart-by-chart gluing and direct orbit enumeration produce the same point
/// sets, without duplicates.
#[test]
fn glued_and_orbit_enumerations_agree() {
    for (name, fan) in corpus() {
        for n in 1..=2u32 {
            let glued = glued_points(&fan, index(n)).unwrap();
            let orbits = orbit_points(&fan, index(n));
            let orbit_set: BTreeSet<_> = orbits.iter().cloned().collect();
            assert_eq!(
                orbits.len(),
                orbit_set.len(),
                "{name}, n={n}: duplicate orbits"
            );
            assert_eq!(glued, orbit_set, "{name}, n={n}");
        }
    }
}

type OrbitKey = (Cone, Vec<(Sign, u32)>);

fn scaled_keys(points: &BTreeSet<f1geom::points::OrbitPoint>, scale: u32) -> Vec<OrbitKey> {
    points
        .iter()
        .map(|p| {
            let values = p
                .torus_values()
                .iter()
                .map(|v| (v.sign(), v.exponent() * scale))
                .collect();
            (p.support().clone(), values)
        })
        .collect()
}

/// A degree-m point set embeds into the degree-n point set when m divides n:
/// roots of unity map by scaling exponents by n/m. The image keys stay
/// distinct, so the counts are monotone along divisibility.
#[test]
fn extension_scaling_embeds_point_sets() {
    for (name, fan) in corpus() {
        for (m, n) in [(1u32, 2u32), (1, 3), (2, 4)] {
            let small = glued_points(&fan, index(m)).unwrap();
            let big = glued_points(&fan, index(n)).unwrap();
            let big_keys: BTreeSet<OrbitKey> = scaled_keys(&big, 1).into_iter().collect();
            let mapped = scaled_keys(&small, n / m);
            let distinct: BTreeSet<&OrbitKey> = mapped.iter().collect();
            assert_eq!(distinct.len(), mapped.len(), "{name}: scaling collided");
            for key in &mapped {
                assert!(
                    big_keys.contains(key),
                    "{name}: degree-{m} point missing from degree-{n} set"
                );
            }
        }
    }
}

/// compare_counts accepts every corpus fan with its own polynomial and
/// pinpoints the first failing prime, with both counts, for a wrong one.
#[test]
fn count_comparison_detects_mutations() {
    let primes = [2u64, 3, 5, 7];
    for (name, fan) in corpus() {
        let poly = fan_count_poly(&fan);
        assert_eq!(compare_counts(&poly, &fan, &primes), Ok(()), "{name}");
    }
    let plane = standard_fan(StandardFanKind::Projective, 2).unwrap();
    let wrong = fan_count_poly(&plane).add(&CountPolynomial::one());
    match compare_counts(&wrong, &plane, &primes) {
        Err(Error::CountMismatch {
            modulus,
            closed_form,
            enumerated,
        }) => {
            assert_eq!(modulus, 2);
            assert_eq!(closed_form, BigInt::from(8));
            assert_eq!(enumerated, BigInt::from(7));
        }
        other => panic!("expected a count mismatch, got {other:?}"),
    }
}

/// The quadric's locally closed pieces, counted inside the full F_p
/// enumeration, match the standalone counts of the isomorphic varieties:
/// affine spaces of dimensions 4, 3, 2 and a projective plane.
#[test]
fn quadric_strata_match_standalone_varieties() {
    let plane = standard_fan(StandardFanKind::Projective, 2).unwrap();
    for p in [2u64, 3, 5] {
        let field = PrimeField::new(p).unwrap();
        let counts = stratum_counts_fq(field);
        assert_eq!(counts[0], p.pow(4));
        assert_eq!(counts[1], p.pow(3));
        assert_eq!(counts[2], p.pow(2));
        assert_eq!(counts[3], toric_count_fq(&plane, field).unwrap());
        assert_eq!(counts[3], projective_count_fq(2, field).unwrap());
        assert_eq!(counts.iter().sum::<u64>(), quadric_count_fq(field).unwrap());
        for (stratum, count) in strata().iter().zip(counts) {
            assert_eq!(
                stratum.count_poly.eval(&BigInt::from(p)),
                BigInt::from(count),
                "stratum {} at p={p}",
                stratum.name
            );
        }
    }
}

/// Cyclotomic quadric counts decompose over the strata, with the closed
/// piece counted by the glued projective-plane enumeration.
#[test]
fn quadric_cyclotomic_counts_decompose() {
    let plane = standard_fan(StandardFanKind::Projective, 2).unwrap();
    for n in 1..=3u32 {
        let counts = quadric_f1_strata_counts(index(n)).unwrap();
        let x = BigInt::from(2 * n + 1);
        assert_eq!(counts[0], x.pow(4));
        assert_eq!(counts[1], x.pow(3));
        assert_eq!(counts[2], x.pow(2));
        assert_eq!(
            counts[3],
            BigInt::from(glued_points(&plane, index(n)).unwrap().len())
        );
        let total: BigInt = counts.iter().sum();
        assert_eq!(total, quadric_f1_count(index(n)));
    }
    let at_one = quadric_f1_strata_counts(index(1)).unwrap();
    let expected: Vec<BigInt> = [81, 27, 9, 13].iter().map(|&c| BigInt::from(c)).collect();
    assert_eq!(at_one.to_vec(), expected);
    assert_eq!(
        quadric_count_poly().eval(&BigInt::from(3)),
        BigInt::from(130)
    );
}

/// Serializing any corpus fan and parsing it back is the identity, and the
/// serialized form itself round-trips byte for byte.
#[test]
fn fan_documents_round_trip_over_corpus() {
    for (name, fan) in corpus() {
        let text = f1geom::document::serialize_fan(&fan);
        let reparsed = f1geom::document::parse_fan(&text).unwrap();
        assert_eq!(reparsed, fan, "{name}");
        assert_eq!(f1geom::document::serialize_fan(&reparsed), text, "{name}");
        assert_eq!(fan_count_poly(&reparsed), fan_count_poly(&fan), "{name}");
    }
}

/// From a hermitian form to the zeta function: the identity form on Z^2
/// yields the counting polynomial x^2, and the scaled rank-1 form with unit
/// ball {+-1, +-2} reproduces the t=2 rank-1 zeta function.
#[test]
fn gram_form_to_zeta_pipeline() {
    let id2 = GramForm::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
    let phi = f1geom::hermitian::from_gram(&id2).unwrap();
    assert_eq!(phi.t(), 2);
    let poly = count_poly(&phi).unwrap().to_count_poly().unwrap();
    assert_eq!(poly, CountPolynomial::from_i64(&[0, 0, 1]));

    let quarter = GramForm::new(vec![vec![BigRational::new(
        BigInt::from(1),
        BigInt::from(4),
    )]])
    .unwrap();
    let phi = f1geom::hermitian::from_gram(&quarter).unwrap();
    assert_eq!(phi.vectors().len(), 2);
    let poly = count_poly(&phi).unwrap().to_count_poly().unwrap();
    assert_eq!(poly, CountPolynomial::from_i64(&[1, -1, 1]));
    assert_eq!(zeta(&poly).factors(), zeta_rank1(2).unwrap().factors());
    assert_eq!(
        count_poly(&PhiSystem::segment(2))
            .unwrap()
            .to_count_poly()
            .unwrap(),
        poly
    );
}

/// The numeric limit defining each corpus fan's zeta value agrees with the
/// closed-form factor product away from the poles.
#[test]
fn weil_limit_tracks_fan_zetas() {
    for (name, fan) in corpus() {
        let poly = fan_count_poly(&fan);
        let z = zeta(&poly);
        let s = 6.5;
        let direct = z.eval(s).unwrap();
        let limit = weil_limit(&poly, s, 1e-4).unwrap();
        let rel = (limit - direct).abs() / direct.abs();
        assert!(rel < 1e-5, "{name}: limit {limit}, closed form {direct}");
    }
}
