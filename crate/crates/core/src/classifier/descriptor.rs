use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::ClassifierError;
use crate::finite_groups::GroupName;

/// Which maximal finite subgroup a descriptor is taken inside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// No context: every realization of the abstract group.
    Any,
    /// Inside `⟨α_i⟩` for the matching `i`.
    Cyclic,
    /// Inside `Dic_{4n} = ⟨α_0, Δ⟩`.
    DicN,
    /// Inside `Dic_{4(n-2)} = ⟨α_0 α_2 α_0⁻¹, Δ⟩`.
    DicNMinus2,
    T1,
    O1,
    I,
}

impl Ambient {
    pub fn token(self) -> &'static str {
        match self {
            Ambient::Any => "any",
            Ambient::Cyclic => "cyclic",
            Ambient::DicN => "Dic4n",
            Ambient::DicNMinus2 => "Dic4(n-2)",
            Ambient::T1 => "T1",
            Ambient::O1 => "O1",
            Ambient::I => "I",
        }
    }

    pub fn is_polyhedral(self) -> bool {
        matches!(self, Ambient::T1 | Ambient::O1 | Ambient::I)
    }
}

impl FromStr for Ambient {
    type Err = ClassifierError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "any" => Ambient::Any,
            "cyclic" => Ambient::Cyclic,
            "Dic4n" => Ambient::DicN,
            "Dic4(n-2)" => Ambient::DicNMinus2,
            "T1" => Ambient::T1,
            "O1" => Ambient::O1,
            "I" => Ambient::I,
            _ => return Err(ClassifierError::BadDescriptor(format!("unknown ambient `{s}`"))),
        })
    }
}

/// An abstract finite group placed in a maximal context.
///
/// Text form: `GROUP[@AMBIENT][:t1|:not-t1]`, e.g. `Z4`, `Dic16@Dic4n`,
/// `Q8@O1:not-t1`. The suffix only applies inside `O1` and says whether the
/// subgroup lies in the copy of `T1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupDescriptor {
    pub group: GroupName,
    pub ambient: Ambient,
    pub inside_t1_copy: Option<bool>,
}

impl SubgroupDescriptor {
    pub fn new(group: GroupName, ambient: Ambient) -> Self {
        SubgroupDescriptor { group: normalize(group), ambient, inside_t1_copy: None }
    }

    pub fn any(group: GroupName) -> Self {
        Self::new(group, Ambient::Any)
    }

    pub fn with_t1_tag(mut self, inside: bool) -> Self {
        self.inside_t1_copy = Some(inside);
        self
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self.group, GroupName::Cyclic(_))
    }
}

/// `Dic_4` is cyclic of order 4.
fn normalize(g: GroupName) -> GroupName {
    match g {
        GroupName::Dic(4) => GroupName::Cyclic(4),
        other => other,
    }
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.group)?;
        if self.ambient != Ambient::Any {
            write!(f, "@{}", self.ambient.token())?;
        }
        match self.inside_t1_copy {
            Some(true) => write!(f, ":t1"),
            Some(false) => write!(f, ":not-t1"),
            None => Ok(()),
        }
    }
}

impl Serialize for SubgroupDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for SubgroupDescriptor {
    type Err = ClassifierError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (rest, tag) = match s.rsplit_once(':') {
            Some((r, "t1")) => (r, Some(true)),
            Some((r, "not-t1")) => (r, Some(false)),
            Some((_, t)) => return Err(ClassifierError::BadDescriptor(format!("unknown tag `{t}`"))),
            None => (s, None),
        };
        let (group, ambient) = match rest.split_once('@') {
            Some((g, a)) => (g, a.parse()?),
            None => (rest, Ambient::Any),
        };
        let group: GroupName = group.parse().map_err(|_| ClassifierError::BadDescriptor(format!("unknown group `{group}`")))?;
        let mut d = SubgroupDescriptor::new(group, ambient);
        d.inside_t1_copy = tag;
        Ok(d)
    }
}
