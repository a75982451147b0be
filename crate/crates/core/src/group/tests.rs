//! Tables here are built from independent models (permutations, quaternion
//! units) and every structural query is compared with a naive recomputation.

use super::*;
use crate::error::Error;

fn perm_group(name: &str, gens: &[Vec<usize>]) -> GroupTable {
    let deg = gens[0].len();
    let id: Vec<usize> = (0..deg).collect();
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let next: Vec<usize> = (0..deg).map(|x| g[elems[i][x]]).collect();
            if !elems.contains(&next) {
                elems.push(next);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let index = |p: &Vec<usize>| elems.iter().position(|q| q == p).unwrap();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| index(&(0..deg).map(|x| elems[a][elems[b][x]]).collect()))
                .collect()
        })
        .collect();
    GroupTable::from_rows(name, &rows, true).unwrap()
}

fn s3() -> GroupTable {
    perm_group("S3", &[vec![1, 0, 2], vec![1, 2, 0]])
}

/// Symmetries of a regular m-gon.
fn dihedral_perm(m: usize) -> GroupTable {
    let rot: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    let refl: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    perm_group(&format!("D{}", 2 * m), &[rot, refl])
}

/// Elements ±1, ±i, ±j, ±k as (sign, unit) with unit 0..4 = 1, i, j, k;
/// index = 2·unit + (sign < 0).
fn q8() -> GroupTable {
    // unit products: (sign, unit)
    let t = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let rows: Vec<Vec<usize>> = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (sa, ua) = (if a % 2 == 0 { 1 } else { -1 }, a / 2);
                    let (sb, ub) = (if b % 2 == 0 { 1 } else { -1 }, b / 2);
                    let (s, u) = t[ua][ub];
                    2 * u + usize::from(s * sa * sb < 0)
                })
                .collect()
        })
        .collect();
    GroupTable::from_rows("Q8", &rows, true).unwrap()
}

fn brute_center(g: &GroupTable) -> Vec<u32> {
    let n = g.order();
    (0..n)
        .filter(|&z| (0..n).all(|x| g.mul(z, x) == g.mul(x, z)))
        .map(|z| z as u32)
        .collect()
}

fn brute_centralizer(g: &GroupTable, x: usize) -> Vec<u32> {
    (0..g.order())
        .filter(|&h| g.mul(h, x) == g.mul(x, h))
        .map(|h| h as u32)
        .collect()
}

fn brute_z(g: &GroupTable, x: usize) -> Vec<u32> {
    let c = brute_centralizer(g, x);
    c.iter()
        .copied()
        .filter(|&a| c.iter().all(|&b| g.mul(a as usize, b as usize) == g.mul(b as usize, a as usize)))
        .collect()
}

fn brute_closure(g: &GroupTable, gens: &[usize]) -> Vec<u32> {
    let mut set = vec![0usize];
    set.extend_from_slice(gens);
    loop {
        let mut grew = false;
        for a in set.clone() {
            for b in set.clone() {
                let c = g.mul(a, b);
                if !set.contains(&c) {
                    set.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    set.sort_unstable();
    set.dedup();
    set.into_iter().map(|x| x as u32).collect()
}

fn brute_derived(g: &GroupTable) -> Vec<u32> {
    let n = g.order();
    let mut comms = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(a, b);
            let ba = g.mul(b, a);
            // [a, b] = (ba)⁻¹ ab, inverse found by search
            let inv = (0..n).find(|&y| g.mul(ba, y) == 0).unwrap();
            comms.push(g.mul(inv, ab));
        }
    }
    brute_closure(g, &comms)
}

fn corpus() -> Vec<GroupTable> {
    vec![s3(), q8(), dihedral_perm(4), dihedral_perm(8), dihedral_perm(9)]
}

#[test]
fn trivial_group() {
    let g = load_cayley_table("1\n0\n", true).unwrap();
    assert_eq!(g.order(), 1);
    assert!(g.is_abelian());
    assert_eq!(g.nilpotence_class(), Nilpotence::Class(0));
}

#[test]
fn s3_facts() {
    let g = s3();
    assert!(g.center().is_trivial());
    let involutions = (1..6).filter(|&x| g.element_order(x) == 2).count();
    assert_eq!(involutions, 3);
    let t = (1..6).find(|&x| g.element_order(x) == 2).unwrap();
    assert_eq!(g.centralizer(ElementId(t as u32)).unwrap().len(), 2);
    assert_eq!(g.derived_subgroup().len(), 3);
    assert_eq!(g.nilpotence_class(), Nilpotence::NotNilpotent);
    assert!(g.is_ca_group());
    let mut sizes: Vec<usize> = g
        .distinct_centralizer_family()
        .unwrap()
        .entries
        .iter()
        .map(|e| e.centralizer.len())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![2, 2, 2, 3]);
}

#[test]
fn q8_facts() {
    let g = q8();
    let (i, minus_one) = (2usize, 1usize);
    assert_eq!(g.center().members(), &[0, minus_one as u32]);
    let ci = g.centralizer(ElementId(i as u32)).unwrap();
    assert_eq!(ci.members(), &[0, 1, 2, 3]);
    assert_eq!(g.z_of(ElementId(i as u32)).unwrap(), ci);
    assert_eq!(g.centralizer_of_set(&ci), ci);
    assert_eq!(g.centralizer_of_set(g.center()).len(), 8);
    assert_eq!(g.centralizer_of_set(&Subgroup::whole(8)), *g.center());
    assert_eq!(g.derived_subgroup().members(), &[0, 1]);
    let lcs: Vec<usize> = g.lower_central_series().iter().map(Subgroup::len).collect();
    assert_eq!(lcs, vec![8, 2, 1]);
    assert_eq!(g.nilpotence_class(), Nilpotence::Class(2));
    assert!(g.is_ca_group() && g.is_f_group());
    let fam = g.distinct_centralizer_family().unwrap();
    assert_eq!(fam.entries.len(), 3);
    assert!(fam.entries.iter().all(|e| e.centralizer.len() == 4));
    assert!(fam.is_order_reversing_bijection());
    assert_eq!(
        g.z_of(ElementId(minus_one as u32)),
        Err(Error::CentralElement("g1".into()))
    );
}

#[test]
fn d8_rotation() {
    let g = dihedral_perm(4);
    let r = (1..8).find(|&x| g.element_order(x) == 4).unwrap();
    let z = g.z_of(ElementId(r as u32)).unwrap();
    assert_eq!(z.len(), 4);
    assert_eq!(z, g.closure([r]));
    assert_eq!(g.nilpotence_class(), Nilpotence::Class(2));
    assert!(g.is_ca_group());
}

#[test]
fn d16_series() {
    let g = dihedral_perm(8);
    let lcs: Vec<usize> = g.lower_central_series().iter().map(Subgroup::len).collect();
    assert_eq!(lcs, vec![16, 4, 2, 1]);
    assert_eq!(g.nilpotence_class(), Nilpotence::Class(3));
    // Noncentral centralizers are ⟨r⟩ and the four Klein groups ⟨s, r⁴⟩.
    let r = (1..16).find(|&x| g.element_order(x) == 8).unwrap();
    assert_eq!(brute_z(&g, r), brute_centralizer(&g, r));
    assert!(g.is_ca_group());
    assert!(g.is_f_group());
}

#[test]
fn s3_squared_is_not_ca() {
    let g = s3().direct_product(&s3(), DEFAULT_TABLE_LIMIT).unwrap();
    assert!(!g.is_ca_group());
    assert!(!g.is_f_group());
    let brute_ca = (0..36).filter(|&x| !g.is_central(x)).all(|x| {
        let c = brute_centralizer(&g, x);
        c.iter().all(|&a| c.iter().all(|&b| g.commutes(a as usize, b as usize)))
    });
    assert!(!brute_ca);
}

#[test]
fn extraspecial_family_sizes() {
    // Unitriangular matrices: (a, b, c)(a', b', c') = (a+a', b+b', c+c'+ab').
    for p in [2usize, 3] {
        let n = p * p * p;
        let enc = |a: usize, b: usize, c: usize| a + p * b + p * p * c;
        let g = GroupTable::from_fn("H", n, true, |x, y| {
            let (a, b, c) = (x % p, (x / p) % p, x / (p * p));
            let (a2, b2, c2) = (y % p, (y / p) % p, y / (p * p));
            enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)
        })
        .unwrap();
        assert_eq!(g.distinct_centralizer_family().unwrap().entries.len(), p + 1);
    }
}

#[test]
fn matches_brute_force() {
    for g in corpus() {
        assert_eq!(g.center().members(), brute_center(&g).as_slice(), "{}", g.name());
        assert_eq!(g.derived_subgroup().members(), brute_derived(&g).as_slice());
        for x in 0..g.order() {
            let c = g.centralizer(ElementId(x as u32)).unwrap();
            assert_eq!(c.members(), brute_centralizer(&g, x).as_slice());
            assert!(g.closure([x]).is_subgroup_of(&c));
            assert!(g.center().is_subgroup_of(&c));
            if !g.is_central(x) {
                assert_eq!(g.z_of(ElementId(x as u32)).unwrap().members(), brute_z(&g, x).as_slice());
            }
            for y in 0..g.order() {
                assert_eq!(g.closure([x, y]).members(), brute_closure(&g, &[x, y]).as_slice());
            }
        }
        for h in g.lower_central_series() {
            assert_eq!(g.order() % h.len(), 0);
        }
    }
}

#[test]
fn centralizer_laws() {
    for g in corpus() {
        let nc: Vec<usize> = (0..g.order()).filter(|&x| !g.is_central(x)).collect();
        let c = |x: usize| g.centralizer(ElementId(x as u32)).unwrap();
        let z = |x: usize| g.z_of(ElementId(x as u32)).unwrap();
        for &a in &nc {
            assert!(z(a).contains(a));
            assert!(g.center().is_proper_subgroup_of(&z(a)));
            assert_eq!(g.centralizer_of_set(&z(a)), c(a));
            let mut cover = g.center().mask().clone();
            for &b in &nc {
                if c(a).contains(b) {
                    cover.union_with(z(b).mask());
                }
            }
            assert_eq!(&cover, c(a).mask());
            for &b in &nc {
                let commute = c(b).contains(a);
                assert_eq!(commute, z(a).is_subgroup_of(&c(b)));
                assert_eq!(commute, z(b).is_subgroup_of(&c(a)));
                assert_eq!(z(b).contains(a), z(a).is_subgroup_of(&z(b)));
                assert_eq!(c(a) == c(b), z(a) == z(b));
                assert_eq!(c(a).is_subgroup_of(&c(b)), z(b).is_subgroup_of(&z(a)));
            }
        }
        assert!(g.distinct_centralizer_family().unwrap().is_order_reversing_bijection());
    }
}

#[test]
fn load_errors() {
    assert!(matches!(load_cayley_table("", false), Err(Error::MalformedTable(_))));
    assert!(matches!(load_cayley_table("2\n0 1\n", false), Err(Error::MalformedTable(_))));
    assert!(matches!(
        load_cayley_table("2\n0 1\n1 2\n", false),
        Err(Error::EntryOutOfRange { row: 1, col: 1, value: 2, order: 2 })
    ));
    assert!(matches!(
        load_cayley_table("2\n1 0\n0 1\n", false),
        Err(Error::IdentityNotZero)
    ));
    assert!(matches!(
        load_cayley_table("3\n0 1 2\n1 1 0\n2 0 1\n", false),
        Err(Error::NotLatinSquare { .. })
    ));
    // A loop of order 5 with identity 0 that is not a group.
    let loop5 = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
    assert!(load_cayley_table(loop5, false).is_ok());
    assert!(matches!(load_cayley_table(loop5, true), Err(Error::NotAssociative { .. })));
    assert!(matches!(
        load_cayley_table_with_limits("3\n0 1 2\n1 2 0\n2 0 1\n", false, 2, 2),
        Err(Error::SizeLimit { order: 3, limit: 2 })
    ));
}

#[test]
fn text_round_trip() {
    for g in corpus() {
        let text = format_cayley(&g);
        let back = load_cayley_table(&text, true).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.name(), g.name());
    }
}

#[test]
fn reindexing_moves_identity() {
    // Z/3 with identity labelled 2.
    let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
    let g = GroupTable::from_rows_reindexed("C3", &rows, true).unwrap();
    assert_eq!(g.mul(0, 1), 1);
    assert!(g.is_abelian());
}

#[test]
fn direct_products() {
    let c2 = GroupTable::from_fn("C2", 2, true, |a, b| a ^ b).unwrap();
    let v4 = c2.direct_product(&c2, DEFAULT_TABLE_LIMIT).unwrap();
    assert_eq!(v4.order(), 4);
    assert!((0..4).all(|x| v4.inv(x) == x));
    let trivial = GroupTable::from_fn("1", 1, true, |_, _| 0).unwrap();
    let s = s3().direct_product(&trivial, DEFAULT_TABLE_LIMIT).unwrap();
    assert_eq!(s.table_rows(), s3().table_rows());
    let c3 = GroupTable::from_fn("C3", 3, true, |a, b| (a + b) % 3).unwrap();
    let p = dihedral_perm(7).direct_product(&c3, DEFAULT_TABLE_LIMIT).unwrap();
    assert_eq!(p.order(), 42);
    assert_eq!(p.center().len(), 3);
    assert!(matches!(
        p.direct_product(&p, 1000),
        Err(Error::SizeLimit { .. })
    ));
}

#[test]
fn quotient_by_center() {
    let g = dihedral_perm(8);
    let (q, coset_of, reps) = g.quotient(g.center()).unwrap();
    assert_eq!(q.order(), 8);
    assert_eq!(coset_of[0], 0);
    assert_eq!(reps.len(), 8);
    assert_eq!(q.nilpotence_class(), Nilpotence::Class(2));
}

impl GroupTable {
    fn table_rows(&self) -> Vec<Vec<u16>> {
        (0..self.order()).map(|a| self.row(a).to_vec()).collect()
    }
}
