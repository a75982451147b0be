use serde_json::{json, Value};

use super::checks::Outcome;
use super::isoclinism::{
    abelian_invariants, find_isoclinism, format_invariants, order_profile, verify_isoclinism,
    ISOCLINISM_SEARCH_LIMIT,
};
use super::subject::Subject;
use crate::error::{Error, Result};
use crate::graph::{is_isomorphism, isomorphic, SimpleGraph};
use crate::group::GroupTable;

fn tables<'a>(a: &'a Subject, b: &'a Subject) -> Result<(&'a GroupTable, &'a GroupTable)> {
    match (&a.table, &b.table) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(Error::InvalidParameters(format!(
            "pair checks need Cayley tables; {} or {} has none",
            a.name, b.name
        ))),
    }
}

/// An isomorphism search whose answer is re-verified before it is trusted.
fn iso(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    let f = isomorphic(g1, g2)?;
    if let Some(f) = &f {
        if !is_isomorphism(g1, g2, f) {
            return Err(Error::InvalidParameters("isomorphism witness failed verification".into()));
        }
    }
    Ok(f)
}

/// The bijection as label pairs.
fn witness_map(g1: &SimpleGraph, g2: &SimpleGraph, f: &[usize]) -> Value {
    Value::Array(f.iter().enumerate().map(|(u, &v)| json!([g1.label(u), g2.label(v)])).collect())
}

pub(crate) fn c_sizes(a: &Subject, b: &Subject) -> Result<Outcome> {
    let (ta, tb) = tables(a, b)?;
    let p_groups = a.prime.is_some() && a.prime == b.prime;
    let f = iso(&a.elements.graph, &b.elements.graph)?;
    let sizes = json!({
        "orders": [ta.order(), tb.order()],
        "indices": [a.index().to_string(), b.index().to_string()],
        "centers": [ta.center().len(), tb.center().len()],
    });
    let Some(f) = f.filter(|_| p_groups) else {
        return Ok(Outcome::vacuous(json!({ "pGroups": p_groups, "sizes": sizes })));
    };
    let eq = [ta.order() == tb.order(), a.index() == b.index(), ta.center().len() == tb.center().len()];
    Ok(Outcome::verdict(
        eq.iter().all(|&x| x),
        json!({ "sizes": sizes, "equalities": eq, "bijection": witness_map(&a.elements.graph, &b.elements.graph, &f) }),
    ))
}

pub(crate) fn c_star_equiv(a: &Subject, b: &Subject) -> Result<Outcome> {
    let (ta, tb) = tables(a, b)?;
    if ta.order() != tb.order() {
        return Ok(Outcome::vacuous(json!({ "orders": [ta.order(), tb.order()] })));
    }
    let sa = a.model.star_graph().graph;
    let sb = b.model.star_graph().graph;
    let full = iso(&a.elements.graph, &b.elements.graph)?;
    let star = iso(&sa, &sb)?;
    let broke = match (full.is_some(), star.is_some()) {
        (true, false) => Some("commuting isomorphic but star graphs not"),
        (false, true) => Some("star isomorphic but commuting graphs not"),
        _ => None,
    };
    let mut w = json!({ "commutingIsomorphic": full.is_some(), "starIsomorphic": star.is_some() });
    if let Some(f) = &full {
        w["commutingBijection"] = witness_map(&a.elements.graph, &b.elements.graph, f);
    }
    if let Some(f) = &star {
        w["starBijection"] = witness_map(&sa, &sb, f);
    }
    if let Some(d) = broke {
        w["brokenDirection"] = d.into();
    }
    Ok(Outcome::verdict(broke.is_none(), w))
}

/// `b` must be `a` × C_m as built by [`GroupTable::direct_product`], so
/// g ↦ (g, 1) lifts the isoclinism.
pub(crate) fn isoclinic_star(a: &Subject, b: &Subject) -> Result<Outcome> {
    let (ta, tb) = tables(a, b)?;
    let explicit = if tb.order() % ta.order() == 0 {
        verify_isoclinism(ta, tb, |x| x)
    } else {
        Err("orders do not divide".into())
    };
    let searched = (a.model.index() <= ISOCLINISM_SEARCH_LIMIT)
        .then(|| find_isoclinism(ta, tb).ok().flatten().is_some());
    if let Err(e) = &explicit {
        return Ok(Outcome::vacuous(json!({ "isoclinism": e, "searchFound": searched })));
    }
    let sa = a.model.star_graph().graph;
    let sb = b.model.star_graph().graph;
    let star = iso(&sa, &sb)?;
    let gamma = iso(&a.gamma, &b.gamma)?;
    let mut w = json!({ "starIsomorphic": star.is_some(), "centralizerIsomorphic": gamma.is_some(),
                        "searchFound": searched });
    if let Some(f) = &star {
        w["starBijection"] = witness_map(&sa, &sb, f);
    }
    if let Some(f) = &gamma {
        w["centralizerBijection"] = witness_map(&a.gamma, &b.gamma, f);
    }
    Ok(Outcome::verdict(star.is_some() && gamma.is_some(), w))
}

/// Pairs with isomorphic Γ_Z graphs are shown not to be isoclinic by an
/// invariant that isoclinism preserves, or by exhausting the search.
pub(crate) fn not_isoclinic_refute(a: &Subject, b: &Subject) -> Result<Outcome> {
    let (ta, tb) = tables(a, b)?;
    let Some(f) = iso(&a.gamma, &b.gamma)? else {
        return Ok(Outcome::vacuous(json!({ "centralizerIsomorphic": false })));
    };
    let (da, db) = (ta.derived_subgroup(), tb.derived_subgroup());
    let inv = (abelian_invariants(ta, &da), abelian_invariants(tb, &db));
    let reason = if a.index() != b.index() {
        Some(format!("|G:Z| is {} vs {}", a.index(), b.index()))
    } else if da.len() != db.len() {
        Some(format!("|G′| is {} vs {}", da.len(), db.len()))
    } else if let (Some(x), Some(y)) = &inv {
        (x != y).then(|| format!("G′ is {} vs {}", format_invariants(x), format_invariants(y)))
    } else if order_profile(ta, &da) != order_profile(tb, &db) {
        Some("G′ element orders differ".into())
    } else {
        None
    };
    let reason = match reason {
        Some(r) => Some(r),
        None if a.model.index() <= ISOCLINISM_SEARCH_LIMIT => match find_isoclinism(ta, tb) {
            Ok(None) => Some("exhaustive search found no isoclinism".into()),
            _ => None,
        },
        None => None,
    };
    let mut w = json!({ "centralizerBijection": witness_map(&a.gamma, &b.gamma, &f) });
    if let (Some(x), Some(y)) = &inv {
        w["derivedInvariants"] = json!([format_invariants(x), format_invariants(y)]);
    }
    match &reason {
        Some(r) => w["refutedBy"] = r.clone().into(),
        None => w["refutedBy"] = Value::Null,
    }
    Ok(Outcome::verdict(reason.is_some(), w))
}
