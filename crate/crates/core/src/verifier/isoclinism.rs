use std::collections::{BTreeMap, VecDeque};

use crate::group::{GroupTable, Subgroup};

/// Largest |G/Z(G)| for which [`find_isoclinism`] searches.
pub const ISOCLINISM_SEARCH_LIMIT: usize = 64;

/// Cyclic factors of an abelian subgroup as prime powers, ascending; `None`
/// when the subgroup is not abelian.
pub fn abelian_invariants(g: &GroupTable, h: &Subgroup) -> Option<Vec<u64>> {
    let members = h.members();
    if members.iter().any(|&a| members.iter().any(|&b| !g.commutes(a as usize, b as usize))) {
        return None;
    }
    let orders: Vec<u64> = members.iter().map(|&x| g.element_order(x as usize) as u64).collect();
    let mut n = members.len() as u64;
    let mut out = Vec::new();
    let mut q = 2;
    while n > 1 {
        if !n.is_multiple_of(q) {
            q += 1;
            continue;
        }
        while n.is_multiple_of(q) {
            n /= q;
        }
        // s_k = log_q #{x : x^{q^k} = 1} = Σ min(k, e_i).
        let mut s = vec![0u32];
        let mut qk = 1u64;
        loop {
            qk *= q;
            let count = orders.iter().filter(|&&o| qk.is_multiple_of(o)).count() as u64;
            let e = count.ilog(q);
            if e == *s.last().expect("nonempty") {
                break;
            }
            s.push(e);
        }
        // Factors with exponent ≥ k number s_k − s_{k−1}.
        let at_least: Vec<u32> = s.windows(2).map(|w| w[1] - w[0]).chain([0]).collect();
        for k in 1..at_least.len() {
            let exactly = at_least[k - 1] - at_least[k];
            for _ in 0..exactly {
                out.push(q.pow(k as u32));
            }
        }
    }
    out.sort_unstable();
    Some(out)
}

pub fn format_invariants(inv: &[u64]) -> String {
    if inv.is_empty() {
        return "1".into();
    }
    inv.iter().map(|m| format!("C{m}")).collect::<Vec<_>>().join("x")
}

/// Multiset of element orders of a subgroup.
pub fn order_profile(g: &GroupTable, h: &Subgroup) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for &x in h.members() {
        *out.entry(g.element_order(x as usize)).or_insert(0) += 1;
    }
    out
}

/// G/Z(G) with coset indices and least representatives.
struct CentralQuotient {
    q: GroupTable,
    coset_of: Vec<usize>,
    reps: Vec<usize>,
}

impl CentralQuotient {
    fn new(g: &GroupTable) -> Self {
        let (q, coset_of, reps) = g.quotient(g.center()).expect("center is normal");
        CentralQuotient { q, coset_of, reps }
    }
}

/// Checks that `lift`, which sends each element of `a` to some element of
/// `b`, induces an isomorphism α: A/Z(A) → B/Z(B) and that
/// β([x, y]) = [α(x), α(y)] extends to an isomorphism A′ → B′.
pub fn verify_isoclinism(a: &GroupTable, b: &GroupTable, lift: impl Fn(usize) -> usize) -> Result<(), String> {
    let (qa, qb) = (CentralQuotient::new(a), CentralQuotient::new(b));
    let m = qa.reps.len();
    if m != qb.reps.len() {
        return Err(format!("|A/Z| = {m} but |B/Z| = {}", qb.reps.len()));
    }
    let alpha: Vec<usize> = qa.reps.iter().map(|&r| qb.coset_of[lift(r)]).collect();
    for x in 0..a.order() {
        if qb.coset_of[lift(x)] != alpha[qa.coset_of[x]] {
            return Err(format!("α is not well defined at g{x}"));
        }
    }
    let mut seen = vec![false; m];
    for &c in &alpha {
        if std::mem::replace(&mut seen[c], true) {
            return Err("α is not injective".into());
        }
    }
    for x in 0..m {
        for y in 0..m {
            if alpha[qa.q.mul(x, y)] != qb.q.mul(alpha[x], alpha[y]) {
                return Err(format!("α is not a homomorphism at cosets {x}, {y}"));
            }
        }
    }
    commutator_map(a, b, &qa, &qb, &alpha)
}

fn commutator_map(
    a: &GroupTable,
    b: &GroupTable,
    qa: &CentralQuotient,
    qb: &CentralQuotient,
    alpha: &[usize],
) -> Result<(), String> {
    let mut beta = vec![usize::MAX; a.order()];
    let mut gens = Vec::new();
    for x in 0..qa.reps.len() {
        for y in 0..qa.reps.len() {
            let c = a.commutator(qa.reps[x], qa.reps[y]);
            let d = b.commutator(qb.reps[alpha[x]], qb.reps[alpha[y]]);
            match beta[c] {
                usize::MAX => {
                    beta[c] = d;
                    gens.push(c);
                }
                prev if prev != d => return Err(format!("β is not well defined at g{c}")),
                _ => {}
            }
        }
    }
    let mut queue: VecDeque<usize> = gens.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        for &s in &gens {
            let (y, image) = (a.mul(x, s), b.mul(beta[x], beta[s]));
            match beta[y] {
                usize::MAX => {
                    beta[y] = image;
                    queue.push_back(y);
                }
                prev if prev != image => return Err(format!("β does not extend at g{y}")),
                _ => {}
            }
        }
    }
    let domain: Vec<usize> = (0..a.order()).filter(|&x| beta[x] != usize::MAX).collect();
    let b_derived = b.derived_subgroup();
    if domain.len() != b_derived.len() {
        return Err(format!("|A′| = {} but |B′| = {}", domain.len(), b_derived.len()));
    }
    let mut hit = vec![false; b.order()];
    for &x in &domain {
        if std::mem::replace(&mut hit[beta[x]], true) {
            return Err("β is not injective".into());
        }
    }
    for &x in &domain {
        for &y in &domain {
            if beta[a.mul(x, y)] != b.mul(beta[x], beta[y]) {
                return Err(format!("β is not a homomorphism at g{x}, g{y}"));
            }
        }
    }
    Ok(())
}

/// Exhaustive search for an isoclinism when |A/Z(A)| is at most
/// [`ISOCLINISM_SEARCH_LIMIT`]. Returns α as a map on cosets (ordered by least
/// element), or `None` when no isoclinism exists. `Err` when the quotient is
/// too large to search.
pub fn find_isoclinism(a: &GroupTable, b: &GroupTable) -> Result<Option<Vec<usize>>, String> {
    let (qa, qb) = (CentralQuotient::new(a), CentralQuotient::new(b));
    let m = qa.reps.len();
    if m > ISOCLINISM_SEARCH_LIMIT {
        return Err(format!("|G/Z| = {m} is above the search limit {ISOCLINISM_SEARCH_LIMIT}"));
    }
    if m != qb.reps.len() || a.derived_subgroup().len() != b.derived_subgroup().len() {
        return Ok(None);
    }
    let mut gens = Vec::new();
    let mut span = qa.q.closure([]);
    while span.len() < m {
        let next = (0..m).find(|&x| !span.contains(x)).expect("proper");
        gens.push(next);
        span = qa.q.closure(gens.iter().copied());
    }
    let mut found = None;
    let mut images = Vec::new();
    search(&qa, &qb, &gens, &mut images, &mut |alpha| {
        let ok = commutator_map(a, b, &qa, &qb, alpha).is_ok();
        if ok {
            found = Some(alpha.to_vec());
        }
        ok
    });
    Ok(found)
}

/// Backtracks over generator images; `done` sees each full isomorphism and
/// stops the search by returning true.
fn search(
    qa: &CentralQuotient,
    qb: &CentralQuotient,
    gens: &[usize],
    images: &mut Vec<usize>,
    done: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if images.len() == gens.len() {
        return match extend(&qa.q, &qb.q, gens, images) {
            Some(alpha) => done(&alpha),
            None => false,
        };
    }
    let want = qa.q.element_order(gens[images.len()]);
    for y in 1..qb.reps.len() {
        if qb.q.element_order(y) != want || images.contains(&y) {
            continue;
        }
        images.push(y);
        if search(qa, qb, gens, images, done) {
            return true;
        }
        images.pop();
    }
    false
}

/// The homomorphism determined by generator images, if it is a well-defined
/// bijection.
fn extend(qa: &GroupTable, qb: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let m = qa.order();
    let mut f = vec![usize::MAX; m];
    f[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let (y, image) = (qa.mul(x, s), qb.mul(f[x], t));
            match f[y] {
                usize::MAX => {
                    f[y] = image;
                    queue.push_back(y);
                }
                prev if prev != image => return None,
                _ => {}
            }
        }
    }
    let mut hit = vec![false; m];
    for &y in &f {
        if std::mem::replace(&mut hit[y], true) {
            return None;
        }
    }
    Some(f)
}
