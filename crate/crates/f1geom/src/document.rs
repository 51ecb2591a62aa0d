//! JSON interchange for fans and short-vector systems.
//!
//! A fan document lists the rank, the rays, and the maximal cones as
//! lists of ray indices; faces are reconstructed on parse. Serialization
//! is canonical (rays sorted, index lists ascending, cone list sorted) so
//! documents round-trip byte-identically once canonicalized.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::{Cone, Fan, LatticeVector};
use crate::hermitian::PhiSystem;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FanDocument {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PhiDocument {
    pub rank: usize,
    pub vectors: Vec<Vec<i64>>,
}

pub fn parse_fan_document(text: &str) -> Result<FanDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_phi_document(text: &str) -> Result<PhiDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Build the fan of a document: indices resolved, rays primitivized,
/// faces added, axioms checked. An empty cone list yields the torus fan.
pub fn fan_from_document(doc: &FanDocument) -> Result<Fan> {
    let rays: Vec<LatticeVector> = doc
        .rays
        .iter()
        .map(|coords| LatticeVector::new(coords.iter().map(|&x| BigInt::from(x)).collect()))
        .collect();
    let mut maximal = Vec::with_capacity(doc.cones.len());
    for (pos, indices) in doc.cones.iter().enumerate() {
        let mut cone_rays = Vec::with_capacity(indices.len());
        for &i in indices {
            let ray = rays.get(i).ok_or_else(|| {
                Error::Parse(format!("cone {pos} references missing ray index {i}"))
            })?;
            cone_rays.push(ray.clone());
        }
        maximal.push(Cone::new(doc.rank, cone_rays)?);
    }
    Fan::from_maximal_cones(doc.rank, maximal)
}

pub fn parse_fan(text: &str) -> Result<Fan> {
    fan_from_document(&parse_fan_document(text)?)
}

/// Canonical document of a fan: the sorted ray union, maximal cones as
/// ascending index lists, cone list sorted.
pub fn fan_to_document(f: &Fan) -> FanDocument {
    let rays = f.rays();
    let ray_rows: Vec<Vec<i64>> = rays
        .iter()
        .map(|r| {
            r.coords()
                .iter()
                .map(|c| c.to_i64().expect("ray coordinate fits in i64"))
                .collect()
        })
        .collect();
    let mut cones: Vec<Vec<usize>> = f
        .maximal_cones()
        .iter()
        .map(|c| {
            let mut indices: Vec<usize> = c
                .rays()
                .iter()
                .map(|r| rays.binary_search(r).expect("cone rays are fan rays"))
                .collect();
            indices.sort_unstable();
            indices
        })
        .collect();
    cones.sort();
    FanDocument {
        rank: f.rank(),
        rays: ray_rows,
        cones,
    }
}

pub fn serialize_fan(f: &Fan) -> String {
    serde_json::to_string(&fan_to_document(f)).expect("document serialization cannot fail")
}

pub fn phi_from_document(doc: &PhiDocument) -> Result<PhiSystem> {
    let vectors = doc
        .vectors
        .iter()
        .map(|coords| LatticeVector::new(coords.iter().map(|&x| BigInt::from(x)).collect()))
        .collect();
    PhiSystem::new(doc.rank, vectors)
}

pub fn parse_phi(text: &str) -> Result<PhiSystem> {
    phi_from_document(&parse_phi_document(text)?)
}

pub fn phi_to_document(phi: &PhiSystem) -> PhiDocument {
    PhiDocument {
        rank: phi.rank(),
        vectors: phi
            .vectors()
            .iter()
            .map(|v| {
                v.coords()
                    .iter()
                    .map(|c| c.to_i64().expect("vector coordinate fits in i64"))
                    .collect()
            })
            .collect(),
    }
}

pub fn serialize_phi(phi: &PhiSystem) -> String {
    serde_json::to_string(&phi_to_document(phi)).expect("document serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{standard_fan, StandardFanKind};

    #[test]
    fn parse_projective_plane() {
        let text = r#"{"rank":2,"rays":[[1,0],[0,1],[-1,-1]],"cones":[[0,1],[1,2],[2,0]]}"#;
        let fan = parse_fan(text).unwrap();
        assert_eq!(fan.cones().len(), 7);
        assert_eq!(fan, standard_fan(StandardFanKind::Projective, 2).unwrap());
    }

    #[test]
    fn parse_torus_from_empty_lists() {
        let fan = parse_fan(r#"{"rank":2,"rays":[],"cones":[]}"#).unwrap();
        assert_eq!(fan.cones().len(), 1);
        assert_eq!(fan, standard_fan(StandardFanKind::Torus, 2).unwrap());
    }

    #[test]
    fn parse_rejects_non_regular_cones() {
        let text = r#"{"rank":2,"rays":[[1,0],[1,2]],"cones":[[0,1]]}"#;
        assert!(matches!(parse_fan(text), Err(Error::InvalidFan(_))));
    }

    #[test]
    fn parse_reports_schema_and_index_errors() {
        assert!(matches!(parse_fan("not json"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_fan(r#"{"rank":2,"rays":[[1,0]],"cones":[[0,1]]}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn fan_documents_round_trip() {
        for fan in [
            standard_fan(StandardFanKind::Projective, 2).unwrap(),
            standard_fan(StandardFanKind::Affine, 3).unwrap(),
            standard_fan(StandardFanKind::Torus, 2).unwrap(),
        ] {
            let text = serialize_fan(&fan);
            let reparsed = parse_fan(&text).unwrap();
            assert_eq!(reparsed, fan);
            assert_eq!(serialize_fan(&reparsed), text);
        }
    }

    #[test]
    fn phi_documents_round_trip() {
        let phi = parse_phi(r#"{"rank":2,"vectors":[[1,0],[0,1],[1,1]]}"#).unwrap();
        assert_eq!(phi.t(), 3);
        let text = serialize_phi(&phi);
        assert_eq!(parse_phi(&text).unwrap(), phi);
        assert!(matches!(
            parse_phi(r#"{"rank":1,"vectors":[[1],[-1]]}"#),
            Err(Error::InvalidPhi(_))
        ));
    }
}
