//! Tensor schemes (signatures with word-valued sources and targets) and
//! their morphisms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use crate::error::SchemeError;

/// Words over a set of objects; the empty word is the monoid unit.
pub type Word<T> = Vec<T>;

pub fn word_to_string<T: Debug>(w: &Word<T>) -> String {
    format!("{w:?}")
}

/// Label bound shared by all diagram decorations.
pub trait Label: Clone + Ord + Debug {}
impl<T: Clone + Ord + Debug> Label for T {}

/// A finite tensor scheme: a table of generating morphisms with source and
/// target words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteScheme<O: Label, M: Label> {
    objects: BTreeSet<O>,
    morphisms: BTreeMap<M, (Word<O>, Word<O>)>,
}

impl<O: Label, M: Label> FiniteScheme<O, M> {
    pub fn new(
        objects: impl IntoIterator<Item = O>,
        morphisms: impl IntoIterator<Item = (M, Word<O>, Word<O>)>,
    ) -> Result<Self, SchemeError> {
        let objects: BTreeSet<O> = objects.into_iter().collect();
        let mut table = BTreeMap::new();
        for (m, src, tgt) in morphisms {
            for x in src.iter().chain(tgt.iter()) {
                if !objects.contains(x) {
                    return Err(SchemeError::UnknownObject(format!("{x:?}")));
                }
            }
            table.insert(m, (src, tgt));
        }
        Ok(FiniteScheme { objects, morphisms: table })
    }

    pub fn objects(&self) -> &BTreeSet<O> {
        &self.objects
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &M> {
        self.morphisms.keys()
    }

    pub fn contains_obj(&self, o: &O) -> bool {
        self.objects.contains(o)
    }

    pub fn get(&self, m: &M) -> Option<&(Word<O>, Word<O>)> {
        self.morphisms.get(m)
    }

    pub fn src(&self, m: &M) -> Result<&Word<O>, SchemeError> {
        self.morphisms
            .get(m)
            .map(|(s, _)| s)
            .ok_or_else(|| SchemeError::UnknownMorphism(format!("{m:?}")))
    }

    pub fn tgt(&self, m: &M) -> Result<&Word<O>, SchemeError> {
        self.morphisms
            .get(m)
            .map(|(_, t)| t)
            .ok_or_else(|| SchemeError::UnknownMorphism(format!("{m:?}")))
    }
}

/// A morphism of tensor schemes: maps on objects and morphisms whose word
/// extensions commute with source and target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeMap<O1: Label, M1: Label, O2: Label, M2: Label> {
    pub on_obj: BTreeMap<O1, O2>,
    pub on_mor: BTreeMap<M1, M2>,
}

impl<O1: Label, M1: Label, O2: Label, M2: Label> SchemeMap<O1, M1, O2, M2> {
    pub fn apply_word(&self, w: &Word<O1>) -> Word<O2> {
        w.iter().map(|x| self.on_obj[x].clone()).collect()
    }

    /// Check the source/target square against the two schemes.
    pub fn validate(
        &self,
        from: &FiniteScheme<O1, M1>,
        to: &FiniteScheme<O2, M2>,
    ) -> Result<(), SchemeError> {
        for o in from.objects() {
            let img = self
                .on_obj
                .get(o)
                .ok_or_else(|| SchemeError::UnknownObject(format!("{o:?}")))?;
            if !to.contains_obj(img) {
                return Err(SchemeError::UnknownObject(format!("{img:?}")));
            }
        }
        for m in from.morphisms() {
            let img =
                self.on_mor.get(m).ok_or_else(|| SchemeError::UnknownMorphism(format!("{m:?}")))?;
            let (s1, t1) = from.get(m).unwrap();
            if to.src(img)? != &self.apply_word(s1) || to.tgt(img)? != &self.apply_word(t1) {
                return Err(SchemeError::SquareDoesNotCommute(format!("{m:?}")));
            }
        }
        Ok(())
    }

    pub fn then<O3: Label, M3: Label>(
        &self,
        other: &SchemeMap<O2, M2, O3, M3>,
    ) -> SchemeMap<O1, M1, O3, M3> {
        SchemeMap {
            on_obj: self
                .on_obj
                .iter()
                .map(|(a, b)| (a.clone(), other.on_obj[b].clone()))
                .collect(),
            on_mor: self
                .on_mor
                .iter()
                .map(|(a, b)| (a.clone(), other.on_mor[b].clone()))
                .collect(),
        }
    }
}
