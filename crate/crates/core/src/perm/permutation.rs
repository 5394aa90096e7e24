use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::PermError;

/// Parity of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A bijection of the points `0..degree`.
///
/// Points are stored 0-based. The cycle constructors and the `Display`
/// impl use 1-based labels so that they line up with CPR graph vertices.
///
/// Products are read left to right: `p * q` first applies `p`, then `q`,
/// i.e. `x^(pq) = (x^p)^q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijective);
            }
            seen[x] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation from 1-based images (`images[p-1]` is the image of `p`).
    pub fn from_one_based(images: &[usize]) -> Result<Self, PermError> {
        if images.contains(&0) {
            return Err(PermError::PointOutOfRange {
                point: 0,
                degree: images.len(),
            });
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    /// Builds a permutation from disjoint cycles written with 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &p in cycle.iter() {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if touched[p - 1] {
                    return Err(PermError::NotBijective);
                }
                touched[p - 1] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                images[p - 1] = q - 1;
            }
        }
        Self::from_images(images)
    }

    /// Product of disjoint transpositions given as 1-based pairs.
    pub fn from_transpositions(degree: usize, pairs: &[(usize, usize)]) -> Result<Self, PermError> {
        let cycles: Vec<[usize; 2]> = pairs.iter().map(|&(a, b)| [a, b]).collect();
        let refs: Vec<&[usize]> = cycles.iter().map(|c| &c[..]).collect();
        Self::from_cycles(degree, &refs)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    /// 1-based image array, as used in serialized output.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.images().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// True iff `self` has order exactly 2.
    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.images().enumerate().all(|(i, x)| self.image(x) == i)
    }

    /// Checked left-to-right product: the result maps `x` to `other(self(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked left-to-right product. Panics on a degree mismatch.
    #[inline]
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self { images: inv }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            exp >>= 1;
        }
        acc
    }

    /// Cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// All cycle lengths, fixed points included, sorted in decreasing order.
    pub fn cycle_structure(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Points moved by `self`, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.images()
            .enumerate()
            .filter(|&(i, x)| i != x)
            .map(|(i, _)| i)
            .collect()
    }

    /// Smallest moved point, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images()
            .enumerate()
            .find(|&(i, x)| i != x)
            .map(|(i, _)| i)
    }

    /// The same permutation viewed on a larger point set (new points fixed).
    pub fn extend(&self, degree: usize) -> Result<Self, PermError> {
        if degree < self.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: degree,
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Ok(Self { images })
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.then(other) == other.then(self)
    }
}

/// Left-to-right product of two permutations: `x^(pq) = q(p(x))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation, PermError> {
    p.compose(q)
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self)
    }
}
