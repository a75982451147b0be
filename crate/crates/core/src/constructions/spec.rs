use std::fmt;
use std::str::FromStr;

use super::class2::{gothic, gpns, named_example, NamedExample};
use super::frobenius::{frobenius, KernelKind};
use super::tables::{
    cyclic, dihedral, extraspecial, generalized_dihedral, heisenberg, metacyclic, two_group,
    TwoGroupKind, CONSTRUCTION_LIMIT,
};
use crate::error::{Error, Result};
use crate::fp::{Class2Group, DEFAULT_EXPANSION_LIMIT};
use crate::group::GroupTable;

/// A buildable group, written compactly as colon-separated fields:
///
/// ```text
/// cyclic:9            dihedral:16         quaternion:16       semidihedral:16
/// gdihedral:3x3       metacyclic:9:3:4    heisenberg:3:2      extraspecial:3:9
/// frobenius:cyclic:9:2[:seed]             frobenius:elementary:9:2
/// gpns:2:4:1-3,1-4,2-4,3-4                gothic:3:3,2        example1:3
/// frobenius:cyclic:7:2*cyclic:3           (direct product)
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    Semidihedral(usize),
    GeneralizedDihedral(Vec<usize>),
    Metacyclic { n: usize, d: usize, t: usize },
    Frobenius { kernel: KernelKind, order: usize, complement: usize, seed: Option<u64> },
    Heisenberg { p: u32, k: usize },
    Extraspecial { p: u32, exponent: u32 },
    Gpns { p: u32, n: usize, edges: String },
    Gothic { p: u32, parts: Vec<usize> },
    Named { id: NamedExample, p: u32 },
    DirectProduct(Vec<FamilySpec>),
}

/// Either representation a family can produce.
#[derive(Clone, Debug)]
pub enum BuiltGroup {
    Table(GroupTable),
    Class2(Class2Group),
}

impl BuiltGroup {
    pub fn name(&self) -> &str {
        match self {
            BuiltGroup::Table(g) => g.name(),
            BuiltGroup::Class2(g) => g.name(),
        }
    }

    pub fn with_name(self, name: impl Into<String>) -> Self {
        match self {
            BuiltGroup::Table(g) => BuiltGroup::Table(g.with_name(name)),
            BuiltGroup::Class2(g) => BuiltGroup::Class2(g.with_name(name)),
        }
    }

    /// Expands structured groups up to `limit` elements.
    pub fn to_table(&self, limit: usize) -> Result<GroupTable> {
        match self {
            BuiltGroup::Table(g) => Ok(g.clone()),
            BuiltGroup::Class2(g) => g.expand_to_table(limit),
        }
    }

    pub fn as_class2(&self) -> Option<&Class2Group> {
        match self {
            BuiltGroup::Class2(g) => Some(g),
            BuiltGroup::Table(_) => None,
        }
    }
}

fn list(items: &[usize], sep: &str) -> String {
    items.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            FamilySpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            FamilySpec::Quaternion(n) => write!(f, "quaternion:{n}"),
            FamilySpec::Semidihedral(n) => write!(f, "semidihedral:{n}"),
            FamilySpec::GeneralizedDihedral(fs) => write!(f, "gdihedral:{}", list(fs, "x")),
            FamilySpec::Metacyclic { n, d, t } => write!(f, "metacyclic:{n}:{d}:{t}"),
            FamilySpec::Frobenius { kernel, order, complement, seed } => {
                let k = match kernel {
                    KernelKind::Cyclic => "cyclic",
                    KernelKind::Elementary => "elementary",
                };
                write!(f, "frobenius:{k}:{order}:{complement}")?;
                if let Some(s) = seed {
                    write!(f, ":{s}")?;
                }
                Ok(())
            }
            FamilySpec::Heisenberg { p, k } => write!(f, "heisenberg:{p}:{k}"),
            FamilySpec::Extraspecial { p, exponent } => write!(f, "extraspecial:{p}:{exponent}"),
            FamilySpec::Gpns { p, n, edges } => write!(f, "gpns:{p}:{n}:{edges}"),
            FamilySpec::Gothic { p, parts } => write!(f, "gothic:{p}:{}", list(parts, ",")),
            FamilySpec::Named { id, p } => write!(f, "{}:{p}", id.id()),
            FamilySpec::DirectProduct(parts) => {
                let s: Vec<String> = parts.iter().map(ToString::to_string).collect();
                f.write_str(&s.join("*"))
            }
        }
    }
}

fn num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidParameters(format!("{what}: `{s}` is not a number")))
}

fn nums(s: &str, sep: char, what: &str) -> Result<Vec<usize>> {
    s.split(sep).map(|x| num(x, what)).collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.contains('*') {
            let parts = text.split('*').map(str::parse).collect::<Result<Vec<FamilySpec>>>()?;
            return Ok(FamilySpec::DirectProduct(parts));
        }
        let fields: Vec<&str> = text.split(':').collect();
        let arity = |k: usize| -> Result<()> {
            if fields.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameters(format!(
                    "`{text}`: expected {} parameter(s)",
                    k - 1
                )))
            }
        };
        let spec = match fields[0] {
            "cyclic" => {
                arity(2)?;
                FamilySpec::Cyclic(num(fields[1], "order")?)
            }
            "dihedral" => {
                arity(2)?;
                FamilySpec::Dihedral(num(fields[1], "order")?)
            }
            "quaternion" => {
                arity(2)?;
                FamilySpec::Quaternion(num(fields[1], "order")?)
            }
            "semidihedral" => {
                arity(2)?;
                FamilySpec::Semidihedral(num(fields[1], "order")?)
            }
            "gdihedral" => {
                arity(2)?;
                FamilySpec::GeneralizedDihedral(nums(fields[1], 'x', "factor")?)
            }
            "metacyclic" => {
                arity(4)?;
                FamilySpec::Metacyclic {
                    n: num(fields[1], "n")?,
                    d: num(fields[2], "d")?,
                    t: num(fields[3], "t")?,
                }
            }
            "frobenius" => {
                if fields.len() != 4 && fields.len() != 5 {
                    return Err(Error::InvalidParameters(format!(
                        "`{text}`: expected frobenius:<cyclic|elementary>:<kernel>:<complement>[:seed]"
                    )));
                }
                let kernel = match fields[1] {
                    "cyclic" => KernelKind::Cyclic,
                    "elementary" => KernelKind::Elementary,
                    other => {
                        return Err(Error::InvalidParameters(format!("unknown kernel kind `{other}`")))
                    }
                };
                FamilySpec::Frobenius {
                    kernel,
                    order: num(fields[2], "kernel order")?,
                    complement: num(fields[3], "complement order")?,
                    seed: fields.get(4).map(|s| num(s, "seed")).transpose()?,
                }
            }
            "heisenberg" => {
                arity(3)?;
                FamilySpec::Heisenberg {
                    p: num(fields[1], "p")?,
                    k: num(fields[2], "k")?,
                }
            }
            "extraspecial" => {
                arity(3)?;
                FamilySpec::Extraspecial {
                    p: num(fields[1], "p")?,
                    exponent: num(fields[2], "exponent")?,
                }
            }
            "gpns" => {
                if fields.len() != 3 && fields.len() != 4 {
                    return Err(Error::InvalidParameters(format!("`{text}`: expected gpns:<p>:<n>:<edges>")));
                }
                FamilySpec::Gpns {
                    p: num(fields[1], "p")?,
                    n: num(fields[2], "n")?,
                    edges: fields.get(3).unwrap_or(&"").to_string(),
                }
            }
            "gothic" => {
                arity(3)?;
                FamilySpec::Gothic {
                    p: num(fields[1], "p")?,
                    parts: nums(fields[2], ',', "part")?,
                }
            }
            "example1" | "example2" => {
                arity(2)?;
                FamilySpec::Named {
                    id: fields[0].parse()?,
                    p: num(fields[1], "p")?,
                }
            }
            other => return Err(Error::UnknownEntry(other.to_string())),
        };
        Ok(spec)
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<BuiltGroup> {
        let table = |g: Result<GroupTable>| g.map(BuiltGroup::Table);
        match self {
            FamilySpec::Cyclic(n) => table(cyclic(*n)),
            FamilySpec::Dihedral(n) if n.is_power_of_two() => table(two_group(TwoGroupKind::Dihedral, *n)),
            FamilySpec::Dihedral(n) => table(dihedral(*n)),
            FamilySpec::Quaternion(n) => table(two_group(TwoGroupKind::Quaternion, *n)),
            FamilySpec::Semidihedral(n) => table(two_group(TwoGroupKind::Semidihedral, *n)),
            FamilySpec::GeneralizedDihedral(fs) => table(generalized_dihedral(fs)),
            FamilySpec::Metacyclic { n, d, t } => table(metacyclic(format!("M({n},{d},{t})"), *n, *d, *t, 0)),
            FamilySpec::Frobenius { kernel, order, complement, seed } => {
                table(frobenius(*kernel, *order, *complement, *seed))
            }
            FamilySpec::Heisenberg { p, k } => table(heisenberg(*p, *k)),
            FamilySpec::Extraspecial { p, exponent } => table(extraspecial(*p, *exponent, false)),
            FamilySpec::Gpns { p, n, edges } => gpns(*p, *n, edges).map(BuiltGroup::Class2),
            FamilySpec::Gothic { p, parts } => gothic(*p, parts).map(BuiltGroup::Class2),
            FamilySpec::Named { id, p } => named_example(*id, *p).map(BuiltGroup::Class2),
            FamilySpec::DirectProduct(parts) => {
                let mut iter = parts.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Error::InvalidParameters("empty direct product".into()))?;
                let mut acc = first.build()?.to_table(DEFAULT_EXPANSION_LIMIT)?;
                for part in iter {
                    let next = part.build()?.to_table(DEFAULT_EXPANSION_LIMIT)?;
                    acc = acc.direct_product(&next, CONSTRUCTION_LIMIT)?;
                }
                Ok(BuiltGroup::Table(acc))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for text in [
            "cyclic:9",
            "dihedral:16",
            "quaternion:16",
            "semidihedral:16",
            "gdihedral:3x3",
            "metacyclic:9:3:4",
            "frobenius:cyclic:9:2",
            "frobenius:cyclic:9:2:8",
            "frobenius:elementary:9:2",
            "heisenberg:3:2",
            "extraspecial:3:9",
            "gpns:2:4:1-3,1-4,2-4,3-4",
            "gothic:3:3,2",
            "example1:3",
            "frobenius:cyclic:7:2*cyclic:3",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            spec.build().unwrap();
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("nope:3".parse::<FamilySpec>(), Err(Error::UnknownEntry(_))));
        assert!("cyclic".parse::<FamilySpec>().is_err());
        assert!("cyclic:x".parse::<FamilySpec>().is_err());
        assert!("frobenius:weird:9:2".parse::<FamilySpec>().is_err());
        assert!("gothic:3:1".parse::<FamilySpec>().unwrap().build().is_err());
    }

    #[test]
    fn products() {
        let h: FamilySpec = "frobenius:cyclic:7:2*cyclic:3".parse().unwrap();
        let g = h.build().unwrap().to_table(CONSTRUCTION_LIMIT).unwrap();
        assert_eq!(g.order(), 42);
        assert_eq!(g.center().len(), 3);
        let big: FamilySpec = "example1:3*cyclic:3".parse().unwrap();
        assert!(big.build().is_err());
    }
}
