use crate::error::{Error, Result};
use crate::fp::{Class2Group, EdgeSet};

pub fn gpns(p: u32, n: usize, edges: &str) -> Result<Class2Group> {
    Class2Group::new(p, EdgeSet::parse(n, edges)?)
}

/// Vertex ranges `(first, last)`, 1-based and inclusive, of the paths whose
/// union is S̄ for ℊ_p(n₁, ..., n_k).
pub fn gothic_paths(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut start = 1;
    parts
        .iter()
        .map(|&ni| {
            let range = (start, start + ni);
            start += ni + 1;
            range
        })
        .collect()
}

/// ℊ_p(n₁, ..., n_k): n* = Σ nᵢ + k generators, S̄ a disjoint union of paths
/// of lengths n₁, ..., n_k.
///
/// ℊ_p(2) comes back degenerate (its middle generator is central); callers
/// can see this through [`Class2Group::is_nondegenerate`].
pub fn gothic(p: u32, parts: &[usize]) -> Result<Class2Group> {
    if parts.is_empty() {
        return Err(Error::InvalidParameters("gothic family needs at least one part".into()));
    }
    if let Some(bad) = parts.iter().find(|&&ni| ni < 2) {
        return Err(Error::InvalidParameters(format!("gothic part {bad} is below 2")));
    }
    let n: usize = parts.iter().sum::<usize>() + parts.len();
    let path_edges = gothic_paths(parts)
        .into_iter()
        .flat_map(|(a, b)| (a..b).map(|j| (j, j + 1)));
    let s = EdgeSet::from_complement(n, path_edges)?;
    let list = parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    Ok(Class2Group::new(p, s)?.with_name(format!("Gothic_{p}({list})")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedExample {
    Example1,
    Example2,
}

impl NamedExample {
    pub fn edges(self) -> &'static str {
        match self {
            NamedExample::Example1 => "1-3,1-4,2-4,3-4",
            NamedExample::Example2 => "1-4,2-4,3-4",
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            NamedExample::Example1 => "example1",
            NamedExample::Example2 => "example2",
        }
    }
}

impl std::str::FromStr for NamedExample {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "example1" => Ok(NamedExample::Example1),
            "example2" => Ok(NamedExample::Example2),
            other => Err(Error::UnknownEntry(other.to_string())),
        }
    }
}

pub fn named_example(id: NamedExample, p: u32) -> Result<Class2Group> {
    Ok(gpns(p, 4, id.edges())?.with_name(format!("{}_p{p}", id.id())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gothic_5_7_4_paths() {
        let g = gothic(2, &[5, 7, 4]).unwrap();
        assert_eq!(g.n(), 19);
        assert_eq!(gothic_paths(&[5, 7, 4]), vec![(1, 6), (7, 14), (15, 19)]);
        let complement: Vec<(usize, usize)> = (0..19)
            .flat_map(|i| ((i + 1)..19).map(move |j| (i, j)))
            .filter(|&(i, j)| g.edges().in_complement(i, j))
            .map(|(i, j)| (i + 1, j + 1))
            .collect();
        let mut expected: Vec<(usize, usize)> = (1..6).map(|j| (j, j + 1)).collect();
        expected.extend((7..14).map(|j| (j, j + 1)));
        expected.extend((15..19).map(|j| (j, j + 1)));
        assert_eq!(complement, expected);
        assert!(g.is_nondegenerate());
        assert_eq!(g.order_exponent(), 19 + 171 - 16);
        assert_eq!(g.order(), None);
    }

    #[test]
    fn gothic_small_cases() {
        let g = gothic(3, &[3]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().to_text(), "1-3,1-4,2-4");
        let g = gothic(2, &[2, 2]).unwrap();
        assert_eq!(g.n(), 6);
        let degenerate = gothic(3, &[2]).unwrap();
        assert!(!degenerate.is_nondegenerate());
        assert!(gothic(3, &[1, 2]).is_err());
        assert!(gothic(3, &[]).is_err());
    }

    #[test]
    fn named_orders() {
        for p in [2u32, 3] {
            let e1 = named_example(NamedExample::Example1, p).unwrap();
            assert_eq!(e1.order_exponent(), 8);
            assert_eq!(e1.central_quotient_exponent(), 4);
            let e2 = named_example(NamedExample::Example2, p).unwrap();
            assert_eq!(e2.order_exponent(), 7);
            assert_eq!(e2.central_quotient_exponent(), 4);
        }
        assert!("example3".parse::<NamedExample>().is_err());
    }
}
