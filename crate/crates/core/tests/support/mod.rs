//! Shared test helpers: fixtures, identity checks and a naive enumeration
//! oracle that does not use any of the library's search or canonical-form
//! code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use finsemi_core::congruence::{alpha, beta, delta, gamma, is_congruence_simple, Partition};
use finsemi_core::constructions::{
    box_product, direct_product, end1, g_of, subsemiring, subsemiring_generated, two_element, v_of,
    y_of,
};
use finsemi_core::enumeration::are_isomorphic;
use finsemi_core::ideals::{annihilator, is_bi_ideal, is_ideal, sums, translates};
use finsemi_core::{ElementSubset, FiniteSemigroup, FiniteSemilattice, FiniteSemiring, Table};

pub fn t(k: usize) -> FiniteSemiring {
    two_element(k).unwrap()
}

/// Z/nZ as a ring.
pub fn zn(n: usize) -> FiniteSemiring {
    FiniteSemiring::new(
        Table::from_fn(n, |x, y| (x + y) % n).unwrap(),
        Table::from_fn(n, |x, y| (x * y) % n).unwrap(),
    )
    .unwrap()
}

/// GF(4) with elements 0, 1, a, a+1 encoded as bit pairs.
pub fn gf4() -> FiniteSemiring {
    fn mul(x: usize, y: usize) -> usize {
        // carry-less product reduced by a^2 = a + 1
        let mut p = 0;
        for i in 0..2 {
            if y >> i & 1 == 1 {
                p ^= x << i;
            }
        }
        if p & 4 != 0 {
            p ^= 0b111;
        }
        p
    }
    FiniteSemiring::new(
        Table::from_fn(4, |x, y| x ^ y).unwrap(),
        Table::from_fn(4, mul).unwrap(),
    )
    .unwrap()
}

/// Symmetric group on three points, elements in lex order of their images.
pub fn s3() -> FiniteSemigroup {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let op = Table::from_fn(6, |a, b| {
        let c = [
            perms[b][perms[a][0]],
            perms[b][perms[a][1]],
            perms[b][perms[a][2]],
        ];
        perms.iter().position(|p| *p == c).unwrap()
    })
    .unwrap();
    FiniteSemigroup::new(op).unwrap()
}

pub fn z(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::cyclic_group(n)
}

pub fn klein() -> FiniteSemigroup {
    z(2).product(&z(2))
}

/// Named fixtures used by the property suites.
pub fn fixtures() -> Vec<(String, FiniteSemiring)> {
    let mut out: Vec<(String, FiniteSemiring)> = (1..=8).map(|k| (format!("T{k}"), t(k))).collect();
    out.push(("Z3".into(), zn(3)));
    out.push(("Z4".into(), zn(4)));
    out.push(("Z6".into(), zn(6)));
    out.push(("F4".into(), gf4()));
    out.push(("T2xT2".into(), direct_product(&t(2), &t(2))));
    out.push(("T4xT6".into(), direct_product(&t(4), &t(6))));
    out.push(("V(1)".into(), v_of(&z(1)).unwrap()));
    out.push(("V(Z2)".into(), v_of(&z(2)).unwrap()));
    out.push(("V(Z3)".into(), v_of(&z(3)).unwrap()));
    out.push(("V(Z4)".into(), v_of(&z(4)).unwrap()));
    out.push(("V(Z2xZ2)".into(), v_of(&klein()).unwrap()));
    out.push(("V(S3)".into(), v_of(&s3()).unwrap()));
    out.push((
        "T6 box V(Z2)".into(),
        box_product(&t(6), &v_of(&z(2)).unwrap()).unwrap(),
    ));
    out.push(("T8 box T8".into(), box_product(&t(8), &t(8)).unwrap()));
    for (name, l) in [
        ("chain2", FiniteSemilattice::chain(2)),
        ("chain3", FiniteSemilattice::chain(3)),
        ("diamond", FiniteSemilattice::diamond()),
    ] {
        let e = end1(&l).unwrap();
        out.push((format!("End1({name})"), e.semiring.clone()));
        out.push((
            format!("Y({name})"),
            subsemiring_generated(&e.semiring, &y_of(&e))
                .unwrap()
                .semiring,
        ));
        out.push((
            format!("G({name})"),
            subsemiring(&e.semiring, &g_of(&e)).unwrap().semiring,
        ));
    }
    out
}

pub fn subsets(n: usize) -> impl Iterator<Item = ElementSubset> {
    (1u32..1 << n).map(move |m| ElementSubset::new(n, (0..n).filter(|i| m >> i & 1 == 1)).unwrap())
}

fn equal(p: &Partition, q: &Partition) -> bool {
    p.labels() == q.labels()
}

/// True if every pair of `i` is related by `p`.
fn square_inside(i: &ElementSubset, p: &Partition) -> bool {
    i.members()
        .iter()
        .all(|&x| i.members().iter().all(|&y| p.same_block(x, y)))
}

fn no_nontrivial_nilpotents(s: &FiniteSemiring) -> bool {
    s.mult_absorbing().is_some() && !s.has_nontrivial_nilpotent()
}

/// Checks the facts about alpha, beta, gamma and delta that hold in every
/// semiring and, when the semiring has an absorbing element and no
/// non-trivial nilpotents, the annihilator facts and the bi-absorbing
/// dichotomy. Returns a description of every violation.
pub fn lemma_violations(s: &FiniteSemiring) -> Vec<String> {
    let n = s.order();
    let mut bad = Vec::new();
    let mut fail = |cond: bool, what: String| {
        if !cond {
            bad.push(what);
        }
    };
    let zero = s.zero();
    let o = s.bi_absorbing();
    let id = Partition::identity(n);

    if let Some(w) = s.mult_absorbing() {
        fail(s.add(w, w) == w, "w + w != w".into());
    }

    for i in subsets(n) {
        if is_ideal(s, &i).unwrap() {
            let a = alpha(s, &i).unwrap();
            fail(
                square_inside(&i, &a),
                format!("I x I not inside alpha_I for {:?}", i.members()),
            );
            let is_zero = zero.is_some_and(|z| i.members() == [z]);
            fail(
                a.is_identity() == is_zero,
                format!("alpha_I = id iff I = {{0}} fails for {:?}", i.members()),
            );
        }
        if is_bi_ideal(s, &i).unwrap() {
            let b = beta(s, &i).unwrap();
            let a = alpha(s, &i).unwrap();
            let is_o = o.is_some_and(|o| i.members() == [o]);
            fail(
                b.is_identity() == is_o,
                format!("beta_I = id iff I = {{o}} fails for {:?}", i.members()),
            );
            fail(
                b.is_full() == i.is_everything(),
                format!("beta_I full iff I = S fails for {:?}", i.members()),
            );
            fail(
                b.refines(&a),
                format!("beta_I not inside alpha_I for {:?}", i.members()),
            );
            fail(
                equal(&a, &b) == i.is_everything(),
                format!("beta_I = alpha_I iff I = S fails for {:?}", i.members()),
            );
            if s.add_absorbing().is_some() {
                fail(
                    a.is_full(),
                    format!(
                        "alpha_I not full despite additive absorber for {:?}",
                        i.members()
                    ),
                );
            }
        }
    }

    let g2 = gamma(s, 2).unwrap();
    let g3 = gamma(s, 3).unwrap();
    let d = delta(s).unwrap();
    if g2.is_identity() && d.is_full() {
        fail(
            s.is_add_cancellative(),
            "gamma_2 = id and delta full, but not cancellative".into(),
        );
    }
    if g2.is_full() && g3.is_identity() {
        let char2 = zero.is_some_and(|z| s.elements().all(|x| s.add(x, x) == z));
        fail(
            s.is_ring() && char2,
            "gamma_2 full and gamma_3 = id, but not a ring of characteristic 2".into(),
        );
    }
    if g2.is_full() && g3.is_full() {
        fail(
            o.is_some_and(|o| {
                s.elements()
                    .all(|x| (2..=n + 2).all(|k| s.n_multiple(x, k) == o))
            }),
            "gamma_2 = gamma_3 full, but some kx != o".into(),
        );
    }
    fail(
        equal(&d, &id) == s.is_add_idempotent(),
        "delta = id iff additively idempotent fails".into(),
    );

    if !no_nontrivial_nilpotents(s) {
        return bad;
    }
    let w = s.mult_absorbing().unwrap();

    let sw = translates(s, w);
    fail(
        is_bi_ideal(s, &sw).unwrap(),
        "S + w is not a bi-ideal".into(),
    );
    fail(
        (sw.len() == 1) == (o == Some(w)),
        "|S + w| = 1 iff w = o fails".into(),
    );
    fail(
        sw.is_everything() == (zero == Some(w)),
        "S + w = S iff w = 0 fails".into(),
    );

    for a in s.elements() {
        let ann = annihilator(s, a).unwrap();
        fail(
            ann.left == ann.right,
            format!("left and right annihilators differ at {a}"),
        );
        fail(
            is_ideal(s, &ann.left).unwrap(),
            format!("annihilator is not an ideal at {a}"),
        );
        let aw = ann.left;
        if zero == Some(w) {
            // the annihilator is exactly the block of w
            let al = alpha(s, &aw).unwrap();
            fail(aw.contains(w), format!("w not in (a:w) at {a}"));
            let block: Vec<usize> = s.elements().filter(|&x| al.same_block(x, w)).collect();
            fail(
                block == aw.members(),
                format!("(a:w) is not a block of alpha at {a}"),
            );
        }
        if o == Some(w) {
            fail(
                is_bi_ideal(s, &aw).unwrap(),
                format!("(a:o) is not a bi-ideal at {a}"),
            );
            fail(
                alpha(s, &aw).unwrap().is_full(),
                format!("alpha of (a:o) is not full at {a}"),
            );
            let b = beta(s, &aw).unwrap();
            if b.is_identity() {
                fail(
                    s.elements()
                        .filter(|&x| x != w)
                        .all(|x| s.mul(a, x) != w && s.mul(x, a) != w),
                    format!("beta of (a:o) is id but {a} divides o"),
                );
            }
            if b.is_full() {
                fail(
                    s.elements().all(|x| s.mul(a, x) == w && s.mul(x, a) == w),
                    format!("beta of (a:o) is full but aS != {{o}} at {a}"),
                );
            }
        }
    }

    if let Some(o) = o {
        if n >= 2 && is_congruence_simple(s) {
            let case1 = are_isomorphic(s, &t(8)).is_some();
            let case2 = sums(s).is_everything()
                && s.elements()
                    .filter(|&x| x != o)
                    .all(|x| s.elements().filter(|&y| y != o).all(|y| s.mul(x, y) != o));
            fail(
                case1 != case2,
                "not exactly one of: T8, or S + S = S without zero divisors".into(),
            );
        }
    }
    bad
}

/// For congruence-simple semirings with an absorbing element and no
/// non-trivial nilpotents: w is 0_S or o_S, and there are no zero divisors.
pub fn structure_violations(s: &FiniteSemiring) -> Vec<String> {
    let mut bad = Vec::new();
    let w = match s.mult_absorbing() {
        Some(w) => w,
        None => return vec!["no absorbing element".into()],
    };
    if s.zero() != Some(w) && s.bi_absorbing() != Some(w) {
        bad.push(format!("w = {w} is neither 0_S nor o_S"));
    }
    for a in s.elements().filter(|&a| a != w) {
        for b in s.elements().filter(|&b| b != w) {
            if s.mul(a, b) == w {
                bad.push(format!("{a} * {b} = w"));
            }
        }
    }
    bad
}

// ---------------------------------------------------------------------------
// Naive oracle

pub type Flat = (Vec<u8>, Vec<u8>);

fn tables(n: usize) -> impl Iterator<Item = Vec<u8>> {
    let cells = n * n;
    (0..(n as u64).pow(cells as u32)).map(move |mut code| {
        let mut t = vec![0u8; cells];
        for c in t.iter_mut() {
            *c = (code % n as u64) as u8;
            code /= n as u64;
        }
        t
    })
}

fn assoc(n: usize, t: &[u8]) -> bool {
    let f = |x: usize, y: usize| t[x * n + y] as usize;
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(f(x, y), z) == f(x, f(y, z)))))
}

fn comm(n: usize, t: &[u8]) -> bool {
    (0..n).all(|x| (0..n).all(|y| t[x * n + y] == t[y * n + x]))
}

fn distributes(n: usize, a: &[u8], m: &[u8]) -> bool {
    let add = |x: usize, y: usize| a[x * n + y] as usize;
    let mul = |x: usize, y: usize| m[x * n + y] as usize;
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
                    && mul(add(x, y), z) == add(mul(x, z), mul(y, z))
            })
        })
    })
}

fn absorbing(n: usize, m: &[u8]) -> Option<usize> {
    (0..n).find(|&w| (0..n).all(|x| m[x * n + w] as usize == w && m[w * n + x] as usize == w))
}

fn has_nilpotent(n: usize, m: &[u8], w: usize) -> bool {
    (0..n).filter(|&x| x != w).any(|x| {
        let mut p = x;
        (1..=n).any(|_| {
            p = m[p * n + x] as usize;
            p == w
        })
    })
}

/// Every map `0..n -> 0..n` is read as the kernel `x ~ y iff f(x) = f(y)`.
fn simple(n: usize, a: &[u8], m: &[u8]) -> bool {
    if n < 2 {
        return false;
    }
    let mut kernels = BTreeSet::new();
    for f in tables_of_len(n, n) {
        let rel = |x: usize, y: usize| f[x] == f[y];
        let ok = (0..n).all(|x| {
            (0..n).all(|y| {
                !rel(x, y)
                    || (0..n).all(|z| {
                        rel(a[x * n + z] as usize, a[y * n + z] as usize)
                            && rel(m[x * n + z] as usize, m[y * n + z] as usize)
                            && rel(m[z * n + x] as usize, m[z * n + y] as usize)
                    })
            })
        });
        if ok {
            let kernel: Vec<bool> = (0..n * n).map(|i| rel(i / n, i % n)).collect();
            kernels.insert(kernel);
        }
    }
    kernels.len() == 2
}

fn tables_of_len(n: usize, len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..(n as u64).pow(len as u32)).map(move |mut code| {
        let mut t = vec![0u8; len];
        for c in t.iter_mut() {
            *c = (code % n as u64) as u8;
            code /= n as u64;
        }
        t
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest relabeled `(add, mul)` pair over the whole orbit.
pub fn orbit_min(n: usize, a: &[u8], m: &[u8]) -> Flat {
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut a2 = vec![0u8; n * n];
            let mut m2 = vec![0u8; n * n];
            for x in 0..n {
                for y in 0..n {
                    a2[p[x] * n + p[y]] = p[a[x * n + y] as usize] as u8;
                    m2[p[x] * n + p[y]] = p[m[x * n + y] as usize] as u8;
                }
            }
            (a2, m2)
        })
        .min()
        .unwrap()
}

pub fn flat(s: &FiniteSemiring) -> Flat {
    let b = |t: &Table| t.cells().iter().map(|&c| c as u8).collect();
    (b(s.add_table()), b(s.mul_table()))
}

/// Oracle flags, in the same order as the library's search constraints.
#[derive(Debug, Clone, Copy)]
pub struct OracleFlags {
    pub absorbing: bool,
    pub no_nilpotents: bool,
    pub simple: bool,
    pub commutative: bool,
}

/// Scans every table pair of order `n` and returns the isomorphism classes
/// satisfying each flag combination, keyed by the 4-bit combination index
/// (bit 0 absorbing, 1 no nilpotents, 2 simple, 3 commutative).
pub fn oracle_classes(n: usize) -> Vec<BTreeSet<Flat>> {
    let adds: Vec<Vec<u8>> = tables(n).filter(|t| comm(n, t) && assoc(n, t)).collect();
    let muls: Vec<Vec<u8>> = tables(n).filter(|t| assoc(n, t)).collect();
    let mut out = vec![BTreeSet::new(); 16];
    let mut seen = BTreeSet::new();
    for a in &adds {
        for m in &muls {
            if !distributes(n, a, m) {
                continue;
            }
            let key = orbit_min(n, a, m);
            if !seen.insert(key.clone()) {
                continue;
            }
            let w = absorbing(n, m);
            let props = OracleFlags {
                absorbing: w.is_some(),
                no_nilpotents: w.is_none_or(|w| !has_nilpotent(n, m, w)),
                simple: simple(n, a, m),
                commutative: comm(n, m),
            };
            for (bits, set) in out.iter_mut().enumerate() {
                let want = |b: usize| bits >> b & 1 == 1;
                if (!want(0) || props.absorbing)
                    && (!want(1) || props.no_nilpotents)
                    && (!want(2) || props.simple)
                    && (!want(3) || props.commutative)
                {
                    set.insert(key.clone());
                }
            }
        }
    }
    out
}
