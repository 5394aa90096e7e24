//! Base and strong generating sets via the deterministic Schreier–Sims
//! algorithm.
//!
//! Level `i` stores the strong generators fixing the first `i` base points,
//! the orbit of the `i`-th base point under them, and an explicit
//! transversal (`u_delta` maps the base point to `delta`). Every element of
//! the group factors uniquely as `u_k * ... * u_1` (left-to-right product).

use num_bigint::BigUint;
use num_traits::One;

use super::Permutation;
use crate::error::PermError;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// Indexed by point: `(u, u^-1)` with `base^u = point`.
    transversal: Vec<Option<(Permutation, Permutation)>>,
    /// Per orbit position, how many of `gens` have had their Schreier
    /// generator sifted already.
    checked: Vec<usize>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = vec![None; degree];
        let id = Permutation::identity(degree);
        transversal[base] = Some((id.clone(), id));
        Self {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
            checked: vec![0],
        }
    }

    /// Closes the orbit under all generators after `gens` grew.
    fn close_orbit(&mut self) {
        let mut idx = 0;
        while idx < self.orbit.len() {
            let delta = self.orbit[idx];
            for g in &self.gens {
                let img = g.image(delta);
                if self.transversal[img].is_none() {
                    let u = self.transversal[delta].as_ref().unwrap().0.then(g);
                    let inv = u.inverse();
                    self.transversal[img] = Some((u, inv));
                    self.orbit.push(img);
                    self.checked.push(0);
                }
            }
            idx += 1;
        }
    }

    #[inline]
    fn rep(&self, point: usize) -> Option<&(Permutation, Permutation)> {
        self.transversal[point].as_ref()
    }
}

/// A stabilizer chain giving exact order and membership for a permutation group.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
    generators: Vec<Permutation>,
}

impl StabilizerChain {
    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            levels: Vec::new(),
            generators: Vec::new(),
        }
    }

    /// Builds a chain for the group generated by `gens`.
    ///
    /// An empty generator list gives the trivial group, whose degree is then 0.
    pub fn new(gens: &[Permutation]) -> Result<Self, PermError> {
        let degree = gens.first().map_or(0, Permutation::degree);
        Self::with_base(degree, gens, &[])
    }

    /// Builds a chain whose base starts with `base_prefix` (points may have
    /// trivial basic orbits).
    pub fn with_base(
        degree: usize,
        gens: &[Permutation],
        base_prefix: &[usize],
    ) -> Result<Self, PermError> {
        let mut chain = Self::trivial(degree);
        for &b in base_prefix {
            if b >= degree {
                return Err(PermError::PointOutOfRange {
                    point: b + 1,
                    degree,
                });
            }
            chain.levels.push(Level::new(degree, b));
        }
        for g in gens {
            chain.add_generator(g)?;
        }
        Ok(chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Generators that were actually added (members already present are skipped).
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn basic_orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Transversal element mapping the `level`-th base point to `point`.
    pub fn coset_rep(&self, level: usize, point: usize) -> Option<&Permutation> {
        self.levels[level].rep(point).map(|(u, _)| u)
    }

    pub(crate) fn coset_rep_inv(&self, level: usize, point: usize) -> Option<&Permutation> {
        self.levels[level].rep(point).map(|(_, inv)| inv)
    }

    /// Strong generators of the stabilizer of the first `level` base points.
    pub fn strong_generators(&self, level: usize) -> &[Permutation] {
        &self.levels[level].gens
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Order as `u128` when it fits (it does for degree up to 34).
    pub fn order_u128(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.iter().all(|l| l.orbit.len() == 1)
    }

    /// Sifts `g` from `start` downwards. Returns the residue and the level
    /// where sifting stopped (`depth()` when every level was passed).
    pub(crate) fn strip_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let img = g.image(level.base);
            match level.rep(img) {
                Some((_, inv)) => {
                    if img != level.base {
                        g = g.then(inv);
                    }
                }
                None => return (g, i),
            }
        }
        let depth = self.levels.len();
        (g, depth)
    }

    /// Membership test by sifting.
    pub fn contains(&self, g: &Permutation) -> Result<bool, PermError> {
        if g.degree() != self.degree {
            if self.levels.is_empty() && self.degree == 0 {
                return Ok(g.is_identity());
            }
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        Ok(self.sift_is_identity(g))
    }

    pub(crate) fn sift_is_identity(&self, g: &Permutation) -> bool {
        let (r, level) = self.strip_from(g.clone(), 0);
        level == self.levels.len() && r.is_identity()
    }

    /// Adds a generator and restores the chain invariants.
    pub fn add_generator(&mut self, g: &Permutation) -> Result<(), PermError> {
        if self.degree == 0 && self.levels.is_empty() && self.generators.is_empty() {
            self.degree = g.degree();
        }
        if g.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        if g.is_identity() || self.sift_is_identity(g) {
            return Ok(());
        }
        self.generators.push(g.clone());
        // g belongs to every level whose predecessors' base points it fixes.
        let mut top = self.levels.len();
        for (i, level) in self.levels.iter().enumerate() {
            if g.image(level.base) != level.base {
                top = i;
                break;
            }
        }
        if top == self.levels.len() {
            let b = g.first_moved().expect("non-identity");
            self.levels.push(Level::new(self.degree, b));
        }
        for level in &mut self.levels[..=top] {
            level.gens.push(g.clone());
            level.close_orbit();
        }
        self.complete(top);
        Ok(())
    }

    /// Holt's SCHREIERSIMS loop, starting at level `i` and descending to 0.
    fn complete(&mut self, mut i: usize) {
        loop {
            match self.check_level(i) {
                Some(j) => i = j,
                None => {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                }
            }
        }
    }

    /// Sifts unchecked Schreier generators of level `i`. On the first one
    /// that does not sift, extends the chain and returns the level to
    /// resume from.
    fn check_level(&mut self, i: usize) -> Option<usize> {
        let mut idx = 0;
        while idx < self.levels[i].orbit.len() {
            while self.levels[i].checked[idx] < self.levels[i].gens.len() {
                let level = &self.levels[i];
                let gi = level.checked[idx];
                let beta = level.orbit[idx];
                let x = &level.gens[gi];
                let img = x.image(beta);
                let (u_beta, _) = level.rep(beta).unwrap();
                let (_, u_img_inv) = level.rep(img).unwrap();
                let h = u_beta.then(x).then(u_img_inv);
                self.levels[i].checked[idx] = gi + 1;
                if h.is_identity() {
                    continue;
                }
                let (r, j) = self.strip_from(h, i + 1);
                if j < self.levels.len() || !r.is_identity() {
                    if j == self.levels.len() {
                        let b = r.first_moved().expect("non-identity residue");
                        self.levels.push(Level::new(self.degree, b));
                    }
                    for level in &mut self.levels[i + 1..=j] {
                        level.gens.push(r.clone());
                        level.close_orbit();
                    }
                    return Some(j);
                }
            }
            idx += 1;
        }
        None
    }

    /// Calls `f` on every group element, in transversal order.
    ///
    /// Intended for small groups; the caller is responsible for the size.
    pub fn for_each_element<F: FnMut(&Permutation) -> bool>(&self, mut f: F) {
        let id = Permutation::identity(self.degree);
        self.walk(self.levels.len(), id, &mut f);
    }

    // Builds g = u_k * ... * u_1 from the deepest level up. Returns false to stop.
    fn walk<F: FnMut(&Permutation) -> bool>(&self, k: usize, acc: Permutation, f: &mut F) -> bool {
        if k == 0 {
            return f(&acc);
        }
        let level = &self.levels[k - 1];
        for &p in &level.orbit {
            let (u, _) = level.rep(p).unwrap();
            if !self.walk(k - 1, acc.then(u), f) {
                return false;
            }
        }
        true
    }

    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        self.for_each_element(|g| {
            out.push(g.clone());
            true
        });
        out
    }

    /// Checks the documented invariants; used by tests.
    pub fn verify_invariants(&self, original: &[Permutation]) -> bool {
        for (i, level) in self.levels.iter().enumerate() {
            for g in &level.gens {
                if self.levels[..i].iter().any(|l| g.image(l.base) != l.base) {
                    return false;
                }
                if !self.sift_is_identity(g) {
                    return false;
                }
            }
            for &p in &level.orbit {
                let (u, inv) = level.rep(p).unwrap();
                if u.image(level.base) != p || !u.then(inv).is_identity() {
                    return false;
                }
            }
        }
        original
            .iter()
            .all(|g| g.degree() == self.degree && self.sift_is_identity(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn closure(gens: &[Permutation]) -> HashSet<Permutation> {
        let n = gens[0].degree();
        let mut set = HashSet::new();
        let mut frontier = vec![Permutation::identity(n)];
        set.insert(Permutation::identity(n));
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.then(g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    #[test]
    fn trivial_groups() {
        let c = StabilizerChain::new(&[]).unwrap();
        assert_eq!(c.order(), BigUint::one());
        let c = StabilizerChain::new(&[Permutation::identity(4)]).unwrap();
        assert_eq!(c.order(), BigUint::one());
        assert!(c.contains(&Permutation::identity(4)).unwrap());
    }

    #[test]
    fn simplex_generators_give_s5() {
        let gens: Vec<_> = (1..5).map(|i| cyc(5, &[&[i, i + 1]])).collect();
        let c = StabilizerChain::new(&gens).unwrap();
        assert_eq!(c.order(), BigUint::from(120u32));
        assert!(c.verify_invariants(&gens));
    }

    #[test]
    fn parity_obstruction_in_membership() {
        let gens = vec![cyc(5, &[&[1, 2, 3]]), cyc(5, &[&[3, 4, 5]])];
        let c = StabilizerChain::new(&gens).unwrap();
        assert_eq!(c.order(), BigUint::from(60u32));
        assert!(!c.contains(&cyc(5, &[&[1, 2]])).unwrap());
        assert!(c.contains(&cyc(5, &[&[1, 2], &[3, 4]])).unwrap());
        assert!(c.contains(&Permutation::identity(5)).unwrap());
        assert!(c.contains(&Permutation::identity(6)).is_err());
    }

    #[test]
    fn agrees_with_closure_on_small_groups() {
        let cases: Vec<Vec<Permutation>> = vec![
            vec![
                cyc(6, &[&[1, 2, 3, 4, 5, 6]]),
                cyc(6, &[&[1, 6], &[2, 5], &[3, 4]]),
            ],
            vec![
                cyc(7, &[&[1, 2], &[3, 4]]),
                cyc(7, &[&[2, 3], &[5, 6]]),
                cyc(7, &[&[4, 5, 7]]),
            ],
            vec![
                cyc(8, &[&[1, 2, 3, 4]]),
                cyc(8, &[&[5, 6, 7, 8]]),
                cyc(8, &[&[1, 5], &[2, 6]]),
            ],
        ];
        for gens in cases {
            let c = StabilizerChain::new(&gens).unwrap();
            let all = closure(&gens);
            assert_eq!(c.order(), BigUint::from(all.len()));
            assert_eq!(c.elements().into_iter().collect::<HashSet<_>>(), all);
            assert!(c.verify_invariants(&gens));
        }
    }

    #[test]
    fn prescribed_base_prefix_is_kept() {
        let gens: Vec<_> = (1..5).map(|i| cyc(6, &[&[i, i + 1]])).collect();
        let c = StabilizerChain::with_base(6, &gens, &[5, 4, 0]).unwrap();
        assert_eq!(&c.base()[..3], &[5, 4, 0]);
        assert_eq!(c.basic_orbit(0), &[5]);
        assert_eq!(c.order(), BigUint::from(120u32));
    }
}
