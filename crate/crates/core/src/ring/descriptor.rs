use std::fmt;
use std::str::FromStr;

use super::Modulus;
use crate::error::{Error, Result};

/// Names a concrete coefficient domain; the CLI-facing form is
/// `gf2`, `gfp:7`, `int` or `gfp_poly:3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainDescriptor {
    Gf2,
    Gfp(Modulus),
    Int,
    /// Univariate polynomials `GF(p)[y]`.
    GfpPoly(Modulus),
}

impl DomainDescriptor {
    pub fn is_field(&self) -> bool {
        matches!(self, DomainDescriptor::Gf2 | DomainDescriptor::Gfp(_))
    }

    /// All shipped domains have unique factorisation.
    pub fn is_factorial(&self) -> bool {
        true
    }

    /// Principal ideal domain. `GF(p)[y]` is one; so is `Z`.
    pub fn is_pid(&self) -> bool {
        true
    }

    /// Characteristic 2 prime field.
    pub fn is_binary_field(&self) -> bool {
        match self {
            DomainDescriptor::Gf2 => true,
            DomainDescriptor::Gfp(p) => p.get() == 2,
            _ => false,
        }
    }

    /// Number of elements, for finite domains.
    pub fn order(&self) -> Option<u64> {
        match self {
            DomainDescriptor::Gf2 => Some(2),
            DomainDescriptor::Gfp(p) => Some(p.get() as u64),
            _ => None,
        }
    }
}

impl fmt::Display for DomainDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainDescriptor::Gf2 => write!(f, "gf2"),
            DomainDescriptor::Gfp(p) => write!(f, "gfp:{p}"),
            DomainDescriptor::Int => write!(f, "int"),
            DomainDescriptor::GfpPoly(p) => write!(f, "gfp_poly:{p}"),
        }
    }
}

impl FromStr for DomainDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let modulus = |rest: &str| -> Result<Modulus> {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::UnknownDescriptor(s.to_string()))?;
            Modulus::new(p)
        };
        match s {
            "gf2" => Ok(DomainDescriptor::Gf2),
            "int" => Ok(DomainDescriptor::Int),
            _ => {
                if let Some(rest) = s.strip_prefix("gfp_poly:") {
                    Ok(DomainDescriptor::GfpPoly(modulus(rest)?))
                } else if let Some(rest) = s.strip_prefix("gfp:") {
                    Ok(DomainDescriptor::Gfp(modulus(rest)?))
                } else {
                    Err(Error::UnknownDescriptor(s.to_string()))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for text in ["gf2", "gfp:7", "int", "gfp_poly:3"] {
            let d: DomainDescriptor = text.parse().unwrap();
            assert_eq!(d.to_string(), text);
        }
    }

    #[test]
    fn flags() {
        let d: DomainDescriptor = "gfp:5".parse().unwrap();
        assert!(d.is_field() && d.is_factorial());
        let d: DomainDescriptor = "gfp_poly:5".parse().unwrap();
        assert!(!d.is_field() && d.is_factorial() && d.is_pid());
        assert!(!DomainDescriptor::Int.is_field());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!("gfp:8".parse::<DomainDescriptor>(), Err(Error::NotPrime(8)));
        assert!(matches!(
            "rational".parse::<DomainDescriptor>(),
            Err(Error::UnknownDescriptor(_))
        ));
        assert!(matches!(
            "gfp:x".parse::<DomainDescriptor>(),
            Err(Error::UnknownDescriptor(_))
        ));
        assert_eq!(
            "gfp:4294967311".parse::<DomainDescriptor>(),
            Err(Error::ModulusOutOfRange(4294967311))
        );
    }
}
