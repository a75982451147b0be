use std::fs;
use std::path::PathBuf;

use clap::Args;

use cgraph::constructions::{BuiltGroup, FamilySpec};
use cgraph::group::load_cayley_table;

/// Where a single group comes from: a family with its parameters, a
/// compact spec string, or a Cayley file.
#[derive(Args, Debug, Clone, Default)]
pub struct Source {
    /// Family: gothic, gpns, example1, example2, frobenius, dihedral,
    /// quaternion, semidihedral, cyclic, gdihedral, heisenberg, extraspecial
    #[arg(long)]
    pub family: Option<String>,
    /// Compact spec such as `gothic:3:3,2` or `dihedral:8*cyclic:2`
    #[arg(long, conflicts_with = "family")]
    pub spec: Option<String>,
    /// Cayley table file
    #[arg(long, conflicts_with_all = ["family", "spec"])]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub p: Option<u32>,
    /// Generator count (gpns) or k (heisenberg)
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge set such as `1-3,1-4,2-4,3-4`
    #[arg(long)]
    pub edges: Option<String>,
    /// Path lengths (gothic) or factors (gdihedral), comma separated
    #[arg(long)]
    pub parts: Option<String>,
    /// Frobenius kernel as `cyclic:<order>` or `elementary:<order>`
    #[arg(long)]
    pub kernel: Option<String>,
    /// Frobenius complement order
    #[arg(long)]
    pub complement: Option<usize>,
    /// Frobenius action seed
    #[arg(long)]
    pub seed: Option<u64>,
    /// Group order (cyclic, dihedral, quaternion, semidihedral)
    #[arg(long)]
    pub order: Option<usize>,
    /// Exponent (extraspecial)
    #[arg(long)]
    pub exponent: Option<u32>,
    /// Name shown in reports
    #[arg(long)]
    pub name: Option<String>,
    /// Check Cayley files for associativity and the Latin property
    #[arg(long)]
    pub validate: bool,
}

fn need<T: ToString>(v: &Option<T>, flag: &str, family: &str) -> Result<String, String> {
    v.as_ref().map(ToString::to_string).ok_or_else(|| format!("--family {family} needs --{flag}"))
}

impl Source {
    pub fn is_given(&self) -> bool {
        self.family.is_some() || self.spec.is_some() || self.input.is_some()
    }

    /// The compact spec the family flags describe.
    pub fn family_spec(&self) -> Result<Option<FamilySpec>, String> {
        if let Some(s) = &self.spec {
            return s.parse().map(Some).map_err(|e| format!("--spec {s}: {e}"));
        }
        let Some(f) = self.family.as_deref() else {
            return Ok(None);
        };
        let text = match f {
            "gothic" => format!("gothic:{}:{}", need(&self.p, "p", f)?, need(&self.parts, "parts", f)?),
            "gpns" => format!(
                "gpns:{}:{}:{}",
                need(&self.p, "p", f)?,
                need(&self.n, "n", f)?,
                self.edges.clone().unwrap_or_default()
            ),
            "example1" | "example2" => format!("{f}:{}", need(&self.p, "p", f)?),
            "frobenius" => {
                let kernel = need(&self.kernel, "kernel", f)?;
                let mut s = format!("frobenius:{kernel}:{}", need(&self.complement, "complement", f)?);
                if let Some(seed) = self.seed {
                    s.push_str(&format!(":{seed}"));
                }
                s
            }
            "cyclic" | "dihedral" | "quaternion" | "semidihedral" => format!("{f}:{}", need(&self.order, "order", f)?),
            "gdihedral" => format!("gdihedral:{}", need(&self.parts, "parts", f)?.replace(',', "x")),
            "heisenberg" => format!("heisenberg:{}:{}", need(&self.p, "p", f)?, need(&self.n, "n", f)?),
            "extraspecial" => format!("extraspecial:{}:{}", need(&self.p, "p", f)?, need(&self.exponent, "exponent", f)?),
            other => return Err(format!("unknown family `{other}`")),
        };
        text.parse().map(Some).map_err(|e| format!("{text}: {e}"))
    }

    pub fn build(&self) -> Result<BuiltGroup, String> {
        let built = if let Some(path) = &self.input {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let table = load_cayley_table(&text, self.validate).map_err(|e| format!("{}: {e}", path.display()))?;
            BuiltGroup::Table(table.with_name(name))
        } else {
            match self.family_spec()? {
                Some(spec) => spec.build().map_err(|e| format!("{spec}: {e}"))?,
                None => return Err("no group given; use --family, --spec or --input".into()),
            }
        };
        Ok(match &self.name {
            Some(n) => built.with_name(n.clone()),
            None => built,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: Source) -> String {
        s.family_spec().unwrap().unwrap().to_string()
    }

    #[test]
    fn family_flags_map_to_specs() {
        let base = |f: &str| Source { family: Some(f.into()), ..Default::default() };
        assert_eq!(spec(Source { p: Some(3), parts: Some("3,2".into()), ..base("gothic") }), "gothic:3:3,2");
        assert_eq!(
            spec(Source { p: Some(2), n: Some(4), edges: Some("1-3,1-4,2-4,3-4".into()), ..base("gpns") }),
            "gpns:2:4:1-3,1-4,2-4,3-4"
        );
        assert_eq!(
            spec(Source { kernel: Some("cyclic:9".into()), complement: Some(2), ..base("frobenius") }),
            "frobenius:cyclic:9:2"
        );
        assert_eq!(spec(Source { parts: Some("3,3".into()), ..base("gdihedral") }), "gdihedral:3x3");
        assert_eq!(spec(Source { p: Some(3), exponent: Some(9), ..base("extraspecial") }), "extraspecial:3:9");
        assert_eq!(spec(Source { spec: Some("dihedral:8*cyclic:2".into()), ..Default::default() }), "dihedral:8*cyclic:2");
    }

    #[test]
    fn missing_parameters_are_named() {
        let s = Source { family: Some("frobenius".into()), kernel: Some("cyclic:9".into()), ..Default::default() };
        assert_eq!(s.family_spec().unwrap_err(), "--family frobenius needs --complement");
        assert!(Source::default().build().is_err());
        assert!(Source { family: Some("bogus".into()), ..Default::default() }.family_spec().is_err());
    }
}
