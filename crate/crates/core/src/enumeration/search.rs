//! Backtracking fill of operation tables with incremental checks of
//! associativity and distributivity.

pub(crate) const UNSET: u8 = u8::MAX;

/// Filling state for one table of order `n`.
pub(crate) struct Filler<'a> {
    n: usize,
    cells: Vec<u8>,
    /// The addition the table must distribute over, if any.
    add: Option<&'a [u8]>,
    /// `sum_preimage[s]` lists `(y, z)` with `y + z = s`.
    sum_preimage: Vec<Vec<(usize, usize)>>,
    commutative: bool,
    cancellative: bool,
    /// `x * x` must differ from this element for `x` other than it.
    no_square_to: Option<u8>,
    order: Vec<(usize, usize)>,
}

impl<'a> Filler<'a> {
    pub(crate) fn new(n: usize) -> Self {
        Filler {
            n,
            cells: vec![UNSET; n * n],
            add: None,
            sum_preimage: Vec::new(),
            commutative: false,
            cancellative: false,
            no_square_to: None,
            order: Vec::new(),
        }
    }

    pub(crate) fn distributing_over(mut self, add: &'a [u8]) -> Self {
        let n = self.n;
        let mut pre = vec![Vec::new(); n];
        for y in 0..n {
            for z in 0..n {
                pre[add[y * n + z] as usize].push((y, z));
            }
        }
        self.add = Some(add);
        self.sum_preimage = pre;
        self
    }

    pub(crate) fn commutative(mut self, yes: bool) -> Self {
        self.commutative = yes;
        self
    }

    pub(crate) fn cancellative(mut self, yes: bool) -> Self {
        self.cancellative = yes;
        self
    }

    pub(crate) fn no_square_to(mut self, w: Option<u8>) -> Self {
        self.no_square_to = w;
        self
    }

    /// Pins row and column `w` to `w`. Returns false if that already breaks a
    /// constraint.
    pub(crate) fn absorbing(&mut self, w: usize) -> bool {
        let n = self.n;
        for x in 0..n {
            self.cells[w * n + x] = w as u8;
            self.cells[x * n + w] = w as u8;
        }
        (0..n).all(|x| self.consistent(w, x) && self.consistent(x, w))
    }

    pub(crate) fn preset(&mut self, x: usize, y: usize, v: u8) {
        self.cells[x * self.n + y] = v;
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> u8 {
        self.cells[x * self.n + y]
    }

    /// Runs `visit` on every completion of the preset cells.
    pub(crate) fn run(&mut self, visit: &mut dyn FnMut(&[u8])) {
        let n = self.n;
        self.order = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| !self.commutative || x <= y)
            .filter(|&(x, y)| self.get(x, y) == UNSET)
            .collect();
        self.descend(0, visit);
    }

    fn descend(&mut self, depth: usize, visit: &mut dyn FnMut(&[u8])) {
        if depth == self.order.len() {
            visit(&self.cells);
            return;
        }
        let (x, y) = self.order[depth];
        let n = self.n;
        for v in 0..n as u8 {
            self.cells[x * n + y] = v;
            if self.commutative {
                self.cells[y * n + x] = v;
            }
            let ok =
                self.consistent(x, y) && (!self.commutative || x == y || self.consistent(y, x));
            if ok {
                self.descend(depth + 1, visit);
            }
        }
        self.cells[x * n + y] = UNSET;
        if self.commutative {
            self.cells[y * n + x] = UNSET;
        }
    }

    /// Checks every constraint instance that uses cell `(a, b)` and whose
    /// other cells are all set.
    fn consistent(&self, a: usize, b: usize) -> bool {
        let n = self.n;
        let v = self.get(a, b);
        debug_assert_ne!(v, UNSET);
        let m = |x: usize, y: usize| -> u8 {
            if x >= n || y >= n {
                UNSET
            } else {
                self.cells[x * n + y]
            }
        };
        let agree = |l: u8, r: u8| l == UNSET || r == UNSET || l == r;
        let vu = v as usize;

        if let Some(w) = self.no_square_to {
            if a == b && v == w && a != w as usize {
                return false;
            }
        }
        if self.cancellative {
            for z in 0..n {
                if z != b && m(a, z) == v {
                    return false;
                }
                if z != a && m(z, b) == v {
                    return false;
                }
            }
        }

        // (ab)z = a(bz)
        for z in 0..n {
            let bz = m(b, z);
            if !agree(m(vu, z), m(a, bz as usize)) {
                return false;
            }
        }
        // (xa)b = x(ab)
        for x in 0..n {
            let xa = m(x, a);
            if !agree(m(xa as usize, b), m(x, vu)) {
                return false;
            }
        }
        for x in 0..n {
            for y in 0..n {
                // (xy)b = x(yb) where xy = a
                if m(x, y) == a as u8 {
                    let yb = m(y, b);
                    if !agree(v, m(x, yb as usize)) {
                        return false;
                    }
                }
                // a(yz) = (ay)z where yz = b; here (x, y) plays (y, z)
                if m(x, y) == b as u8 {
                    let ay = m(a, x);
                    if !agree(v, m(ay as usize, y)) {
                        return false;
                    }
                }
            }
        }

        if let Some(add) = self.add {
            let plus = |x: u8, y: u8| -> u8 {
                if x == UNSET || y == UNSET {
                    UNSET
                } else {
                    add[x as usize * n + y as usize]
                }
            };
            // a(y+z) = ay + az with (a, b) as a(y+z)
            for &(y, z) in &self.sum_preimage[b] {
                if !agree(v, plus(m(a, y), m(a, z))) {
                    return false;
                }
            }
            // a(b+z) = ab + az
            for z in 0..n {
                let bz = add[b * n + z] as usize;
                if !agree(m(a, bz), plus(v, m(a, z))) {
                    return false;
                }
            }
            // (y+z)b = yb + zb with (a, b) as (y+z)b
            for &(y, z) in &self.sum_preimage[a] {
                if !agree(v, plus(m(y, b), m(z, b))) {
                    return false;
                }
            }
            // (a+z)b = ab + zb
            for z in 0..n {
                let az = add[a * n + z] as usize;
                if !agree(m(az, b), plus(v, m(z, b))) {
                    return false;
                }
            }
        }
        true
    }
}

/// Every associative table of order `n` (labeled, not up to isomorphism).
pub(crate) fn associative_tables(
    n: usize,
    commutative: bool,
    cancellative: bool,
    visit: &mut dyn FnMut(&[u8]),
) {
    Filler::new(n)
        .commutative(commutative)
        .cancellative(cancellative)
        .run(visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, commutative: bool) -> usize {
        let mut c = 0;
        associative_tables(n, commutative, false, &mut |_| c += 1);
        c
    }

    // Labeled semigroup counts from brute force over all n^(n^2) tables.
    fn brute(n: usize, commutative: bool) -> usize {
        let cells = n * n;
        let total = n.pow(cells as u32);
        let mut t = vec![0usize; cells];
        let mut c = 0;
        for code in 0..total {
            let mut k = code;
            for cell in t.iter_mut() {
                *cell = k % n;
                k /= n;
            }
            let g = |x: usize, y: usize| t[x * n + y];
            let assoc =
                (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| g(g(x, y), z) == g(x, g(y, z)))));
            let comm = !commutative || (0..n).all(|x| (0..n).all(|y| g(x, y) == g(y, x)));
            if assoc && comm {
                c += 1;
            }
        }
        c
    }

    #[test]
    fn labeled_semigroup_counts_match_brute_force() {
        for n in 1..=3 {
            assert_eq!(count(n, false), brute(n, false), "n = {n}");
            assert_eq!(count(n, true), brute(n, true), "n = {n} commutative");
        }
    }

    #[test]
    fn cancellative_tables_of_order_three_are_latin() {
        let mut c = 0;
        associative_tables(3, false, true, &mut |t| {
            for x in 0..3 {
                let mut row: Vec<u8> = t[x * 3..x * 3 + 3].to_vec();
                row.sort();
                assert_eq!(row, vec![0, 1, 2]);
            }
            c += 1;
        });
        // Z3 has 3!/|Aut(Z3)| = 3 labelings
        assert_eq!(c, 3);
    }
}
