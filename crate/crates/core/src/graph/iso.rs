use std::collections::BTreeMap;

use super::twins::{closed_twin_partition, quotient_by_twins};
use super::SimpleGraph;
use crate::error::{Error, Result};

/// Cap on twin-quotient size for [`isomorphic`].
pub const DEFAULT_ISO_LIMIT: usize = 256;

/// `f[v]` is the image of `v`; checks bijectivity and edge preservation in
/// both directions.
pub fn is_isomorphism(g1: &SimpleGraph, g2: &SimpleGraph, f: &[usize]) -> bool {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || f.len() != n || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let mut hit = vec![false; n];
    for &x in f {
        if x >= n || hit[x] {
            return false;
        }
        hit[x] = true;
    }
    g1.edges().all(|(u, v)| g2.has_edge(f[u], f[v]))
}

pub fn isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    isomorphic_with_limit(g1, g2, DEFAULT_ISO_LIMIT)
}

/// Searches for an isomorphism. Both graphs are first collapsed by closed
/// twins; the quotients are matched with class sizes as vertex weights and
/// the match is lifted back class by class.
pub fn isomorphic_with_limit(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    limit: usize,
) -> Result<Option<Vec<usize>>> {
    let t1 = closed_twin_partition(g1);
    let t2 = closed_twin_partition(g2);
    for t in [&t1, &t2] {
        if t.len() > limit {
            return Err(Error::IsomorphismLimit {
                vertices: t.len(),
                limit,
            });
        }
    }
    if g1.vertex_count() != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || t1.len() != t2.len()
    {
        return Ok(None);
    }
    let q1 = quotient_by_twins(g1, &t1)?;
    let q2 = quotient_by_twins(g2, &t2)?;
    let Some(qmap) = weighted_iso(&q1, &t1.sizes(), &q2, &t2.sizes()) else {
        return Ok(None);
    };
    let mut f = vec![0; g1.vertex_count()];
    for (c, class) in t1.classes.iter().enumerate() {
        for (&u, &v) in class.iter().zip(&t2.classes[qmap[c]]) {
            f[u] = v;
        }
    }
    debug_assert!(is_isomorphism(g1, g2, &f));
    Ok(Some(f))
}

/// Stable colouring of both graphs at once, so colours are comparable.
fn refine(g1: &SimpleGraph, w1: &[usize], g2: &SimpleGraph, w2: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n1 = g1.vertex_count();
    let graphs = [g1, g2];
    let mut colors: Vec<usize> = w1.iter().chain(w2).copied().collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..colors.len())
            .map(|x| {
                let (g, off, v) = if x < n1 { (graphs[0], 0, x) } else { (graphs[1], n1, x - n1) };
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| colors[u + off]).collect();
                nb.sort_unstable();
                (colors[x], nb)
            })
            .collect();
        let mut ids = BTreeMap::new();
        for s in &sigs {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        colors = sigs.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            break;
        }
        classes = ids.len();
    }
    let c2 = colors.split_off(n1);
    (colors, c2)
}

fn weighted_iso(g1: &SimpleGraph, w1: &[usize], g2: &SimpleGraph, w2: &[usize]) -> Option<Vec<usize>> {
    let n = g1.vertex_count();
    let (c1, c2) = refine(g1, w1, g2, w2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return None;
    }
    let mut class_size = BTreeMap::new();
    for &c in &c1 {
        *class_size.entry(c).or_insert(0usize) += 1;
    }

    // Place vertices with many placed neighbours first, then rare colours.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut placed_nb = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (placed_nb[v], std::cmp::Reverse(class_size[&c1[v]]), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[v] = true;
        for u in g1.neighbors(v) {
            placed_nb[u] += 1;
        }
        order.push(v);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(0, &order, g1, g2, &c1, &c2, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    depth: usize,
    order: &[usize],
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    c1: &[usize],
    c2: &[usize],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for u in 0..g2.vertex_count() {
        if used[u] || c2[u] != c1[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| g1.has_edge(v, w) == g2.has_edge(u, map[w]));
        if !consistent {
            continue;
        }
        map[v] = u;
        used[u] = true;
        if search(depth + 1, order, g1, g2, c1, c2, map, used) {
            return true;
        }
        used[u] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Returns `f ∘ σ`, where σ permutes vertices of `g1` within closed-twin
/// classes. The result is re-verified as an isomorphism.
pub fn extend_iso_by_twin_permutations(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    f: &[usize],
    sigma: &[usize],
) -> Result<Vec<usize>> {
    let n = g1.vertex_count();
    if sigma.len() != n || f.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: sigma.len().min(f.len()),
        });
    }
    if !is_isomorphism(g1, g2, f) {
        return Err(Error::InvalidParameters("f is not an isomorphism".into()));
    }
    let t = closed_twin_partition(g1);
    let mut hit = vec![false; n];
    for (v, &s) in sigma.iter().enumerate() {
        if s >= n || hit[s] {
            return Err(Error::InvalidParameters("σ is not a permutation".into()));
        }
        hit[s] = true;
        if t.class_of[s] != t.class_of[v] {
            return Err(Error::PermutationCrossesClass { vertex: v });
        }
    }
    let out: Vec<usize> = sigma.iter().map(|&s| f[s]).collect();
    assert!(is_isomorphism(g1, g2, &out), "twin permutation broke the isomorphism");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn self_iso() {
        let g = SimpleGraph::path(5);
        let f = isomorphic(&g, &g).unwrap().unwrap();
        assert!(is_isomorphism(&g, &g, &f));
    }

    #[test]
    fn triangle_vs_path() {
        assert_eq!(isomorphic(&SimpleGraph::complete(3), &SimpleGraph::path(3)).unwrap(), None);
    }

    #[test]
    fn limit_enforced() {
        let g = SimpleGraph::empty(300);
        assert!(matches!(
            isomorphic(&g, &g),
            Err(Error::IsomorphismLimit { vertices: 300, limit: 256 })
        ));
        // Twin collapse keeps big complete graphs under the limit.
        let k = SimpleGraph::complete(400);
        assert!(isomorphic(&k, &k).unwrap().is_some());
    }

    #[test]
    fn twin_permutations() {
        let k = SimpleGraph::complete(4);
        let id: Vec<usize> = (0..4).collect();
        assert_eq!(extend_iso_by_twin_permutations(&k, &k, &id, &id).unwrap(), id);
        let f = extend_iso_by_twin_permutations(&k, &k, &id, &[2, 0, 3, 1]).unwrap();
        assert_eq!(f, vec![2, 0, 3, 1]);

        let p = SimpleGraph::path(3);
        let id: Vec<usize> = (0..3).collect();
        assert_eq!(
            extend_iso_by_twin_permutations(&p, &p, &id, &[1, 0, 2]),
            Err(Error::PermutationCrossesClass { vertex: 0 })
        );
    }

    fn relabel(g: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
        SimpleGraph::from_edges(g.vertex_count(), g.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    fn brute_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> bool {
        fn go(k: usize, perm: &mut Vec<usize>, g1: &SimpleGraph, g2: &SimpleGraph) -> bool {
            if k == perm.len() {
                return is_isomorphism(g1, g2, perm);
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                if go(k + 1, perm, g1, g2) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        let mut perm: Vec<usize> = (0..g1.vertex_count()).collect();
        g1.vertex_count() == g2.vertex_count() && go(0, &mut perm, g1, g2)
    }

    fn arb_graph(n: usize) -> impl Strategy<Value = SimpleGraph> {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
            SimpleGraph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e))
        })
    }

    proptest! {
        #[test]
        fn finds_relabelled_copies(g in arb_graph(7), perm in Just((0..7).collect::<Vec<usize>>()).prop_shuffle()) {
            let h = relabel(&g, &perm);
            let f = isomorphic(&g, &h).unwrap();
            prop_assert!(f.is_some());
            prop_assert!(is_isomorphism(&g, &h, &f.unwrap()));
        }

        #[test]
        fn agrees_with_brute_force(g in arb_graph(6), h in arb_graph(6)) {
            let found = isomorphic(&g, &h).unwrap();
            prop_assert_eq!(found.is_some(), brute_isomorphic(&g, &h));
            let back = isomorphic(&h, &g).unwrap();
            prop_assert_eq!(found.is_some(), back.is_some());
        }
    }
}
