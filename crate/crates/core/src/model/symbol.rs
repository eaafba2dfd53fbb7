use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Which kind of institutional statement a component belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Regulative,
    Constitutive,
    Shared,
}

/// The seventeen component symbols of IG Script.
///
/// Variants are declared in tabular column order, so the derived `Ord`
/// is the order used by the CSV exporter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentSymbol {
    Attributes,
    AttributesProperty,
    Deontic,
    Aim,
    DirectObject,
    DirectObjectProperty,
    IndirectObject,
    IndirectObjectProperty,
    ActivationCondition,
    ExecutionConstraint,
    ConstitutedEntity,
    ConstitutedEntityProperty,
    Modal,
    ConstitutiveFunction,
    ConstitutingProperties,
    ConstitutingPropertiesProperty,
    OrElse,
}

use ComponentSymbol::*;

impl ComponentSymbol {
    pub const ALL: [ComponentSymbol; 17] = [
        Attributes,
        AttributesProperty,
        Deontic,
        Aim,
        DirectObject,
        DirectObjectProperty,
        IndirectObject,
        IndirectObjectProperty,
        ActivationCondition,
        ExecutionConstraint,
        ConstitutedEntity,
        ConstitutedEntityProperty,
        Modal,
        ConstitutiveFunction,
        ConstitutingProperties,
        ConstitutingPropertiesProperty,
        OrElse,
    ];

    /// All symbols ordered by code length, longest first. Symbol
    /// recognition walks this list so `Bdir,p` wins over `Bdir`.
    pub(crate) const BY_CODE_LENGTH: [ComponentSymbol; 17] = [
        DirectObjectProperty,
        IndirectObjectProperty,
        DirectObject,
        IndirectObject,
        AttributesProperty,
        ConstitutedEntityProperty,
        ConstitutingPropertiesProperty,
        ActivationCondition,
        ExecutionConstraint,
        Attributes,
        Deontic,
        Aim,
        ConstitutedEntity,
        Modal,
        ConstitutiveFunction,
        ConstitutingProperties,
        OrElse,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Attributes => "A",
            AttributesProperty => "A,p",
            Deontic => "D",
            Aim => "I",
            DirectObject => "Bdir",
            DirectObjectProperty => "Bdir,p",
            IndirectObject => "Bind",
            IndirectObjectProperty => "Bind,p",
            ConstitutedEntity => "E",
            ConstitutedEntityProperty => "E,p",
            Modal => "M",
            ConstitutiveFunction => "F",
            ConstitutingProperties => "P",
            ConstitutingPropertiesProperty => "P,p",
            ActivationCondition => "Cac",
            ExecutionConstraint => "Cex",
            OrElse => "O",
        }
    }

    /// Human-readable component name, also used as the CSV column header.
    pub fn name(self) -> &'static str {
        match self {
            Attributes => "Attributes",
            AttributesProperty => "Attributes Property",
            Deontic => "Deontic",
            Aim => "Aim",
            DirectObject => "Direct Object",
            DirectObjectProperty => "Direct Object Property",
            IndirectObject => "Indirect Object",
            IndirectObjectProperty => "Indirect Object Property",
            ActivationCondition => "Activation Condition",
            ExecutionConstraint => "Execution Constraint",
            ConstitutedEntity => "Constituted Entity",
            ConstitutedEntityProperty => "Constituted Entity Property",
            Modal => "Modal",
            ConstitutiveFunction => "Constitutive Function",
            ConstitutingProperties => "Constituting Properties",
            ConstitutingPropertiesProperty => "Constituting Properties Property",
            OrElse => "Or Else",
        }
    }

    pub fn family(self) -> Family {
        match self {
            Attributes
            | AttributesProperty
            | Deontic
            | Aim
            | DirectObject
            | DirectObjectProperty
            | IndirectObject
            | IndirectObjectProperty => Family::Regulative,
            ConstitutedEntity
            | ConstitutedEntityProperty
            | Modal
            | ConstitutiveFunction
            | ConstitutingProperties
            | ConstitutingPropertiesProperty => Family::Constitutive,
            ActivationCondition | ExecutionConstraint | OrElse => Family::Shared,
        }
    }

    pub fn is_property(self) -> bool {
        self.parent().is_some()
    }

    /// The component a property qualifies (`Bdir,p` -> `Bdir`).
    pub fn parent(self) -> Option<ComponentSymbol> {
        match self {
            AttributesProperty => Some(Attributes),
            DirectObjectProperty => Some(DirectObject),
            IndirectObjectProperty => Some(IndirectObject),
            ConstitutedEntityProperty => Some(ConstitutedEntity),
            ConstitutingPropertiesProperty => Some(ConstitutingProperties),
            _ => None,
        }
    }

    /// Compulsory components of the symbol's statement family.
    ///
    /// Context (`Cac`, `Cex`) is also compulsory but carries implied
    /// defaults ("under any condition", "without constraints") when absent,
    /// so it is not reported as required here.
    pub fn is_required(self) -> bool {
        matches!(self, Attributes | Aim | ConstitutedEntity | ConstitutiveFunction)
    }

    /// Exact, case-sensitive lookup.
    pub fn from_code(code: &str) -> Result<Self, Error> {
        Self::BY_CODE_LENGTH
            .iter()
            .copied()
            .find(|s| s.code() == code)
            .ok_or_else(|| Error::UnknownSymbol(code.to_string()))
    }
}

impl fmt::Display for ComponentSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Serialize for ComponentSymbol {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for ComponentSymbol {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let code = String::deserialize(deserializer)?;
        ComponentSymbol::from_code(&code).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LogicalOperator {
    #[serde(rename = "AND")]
    And,
    #[serde(rename = "OR")]
    Or,
    #[serde(rename = "XOR")]
    Xor,
}

impl LogicalOperator {
    pub const ALL: [LogicalOperator; 3] = [LogicalOperator::And, LogicalOperator::Or, LogicalOperator::Xor];

    pub fn token(self) -> &'static str {
        match self {
            LogicalOperator::And => "AND",
            LogicalOperator::Or => "OR",
            LogicalOperator::Xor => "XOR",
        }
    }

    pub fn from_token(token: &str) -> Option<Self> {
        match token {
            "AND" => Some(LogicalOperator::And),
            "OR" => Some(LogicalOperator::Or),
            "XOR" => Some(LogicalOperator::Xor),
            _ => None,
        }
    }
}

impl fmt::Display for LogicalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// IG Core < IG Extended < IG Logico.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Core,
    Extended,
    #[default]
    Logico,
}

impl Level {
    pub fn rank(self) -> u8 {
        self as u8
    }
}

impl std::str::FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "core" => Ok(Level::Core),
            "extended" => Ok(Level::Extended),
            "logico" => Ok(Level::Logico),
            _ => Err(Error::UnknownLevel(s.to_string())),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Core => "core",
            Level::Extended => "extended",
            Level::Logico => "logico",
        })
    }
}
