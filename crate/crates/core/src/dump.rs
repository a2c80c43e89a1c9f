//! Serialized forms of categories, functors and transformations.
//!
//! Every dump carries its categories in full, so a dump can be replayed on
//! its own and is re-validated when read back.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::fincat::{FinCat, FinFunctor, MorId, NatTransform, ObjId, RawCat};

pub(crate) mod composite_list {
    use super::*;

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<(MorId, MorId), MorId>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let list: Vec<[MorId; 3]> = map.iter().map(|(&(g, f), &h)| [g, f, h]).collect();
        list.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<(MorId, MorId), MorId>, D::Error> {
        let list = Vec::<[MorId; 3]>::deserialize(d)?;
        let mut map = BTreeMap::new();
        for [g, f, h] in list {
            if map.insert((g, f), h).is_some() {
                return Err(D::Error::custom(format!("composite {g}.{f} given twice")));
            }
        }
        Ok(map)
    }
}

impl Serialize for FinCat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_raw().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinCat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        RawCat::deserialize(d)?.into_cat().map_err(D::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorDump {
    pub domain: RawCat,
    pub codomain: RawCat,
    pub objects: Vec<ObjId>,
    pub arrows: Vec<MorId>,
}

impl From<&FinFunctor> for FunctorDump {
    fn from(f: &FinFunctor) -> Self {
        FunctorDump {
            domain: f.domain().to_raw(),
            codomain: f.codomain().to_raw(),
            objects: f.object_map().to_vec(),
            arrows: f.morphism_map().to_vec(),
        }
    }
}

impl FunctorDump {
    pub fn into_functor(self) -> Result<FinFunctor> {
        let dom = Arc::new(self.domain.into_cat()?);
        let cod = Arc::new(self.codomain.into_cat()?);
        Ok(FinFunctor::new(dom, cod, self.objects, self.arrows)?)
    }
}

impl Serialize for FinFunctor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FunctorDump::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinFunctor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        FunctorDump::deserialize(d)?
            .into_functor()
            .map_err(D::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformDump {
    pub source: FunctorDump,
    pub target: FunctorDump,
    pub components: Vec<MorId>,
}

impl From<&NatTransform> for TransformDump {
    fn from(t: &NatTransform) -> Self {
        TransformDump {
            source: t.source().into(),
            target: t.target().into(),
            components: t.components().to_vec(),
        }
    }
}

impl TransformDump {
    pub fn into_transform(self) -> Result<NatTransform> {
        let source = self.source.into_functor()?;
        let target = self.target.into_functor()?;
        NatTransform::new(source, target, self.components)
    }
}

impl Serialize for NatTransform {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TransformDump::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for NatTransform {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        TransformDump::deserialize(d)?
            .into_transform()
            .map_err(D::Error::custom)
    }
}
