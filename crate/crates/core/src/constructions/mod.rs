//! Graph families, the rank-selection dispatcher, and operations that
//! derive new generating sets from old ones.

mod families;
mod ops;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cpr::CprGraph;
use crate::error::ConstructionError;
use crate::perm::{factorial, GroupKind};

pub use ops::{append_0101_tail, parabolic, rank_reduce, sesqui_extend};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyTag {
    Simplex,
    SymTable2,
    AltEvenRank,
    AltOddRank,
    Sym2a,
    Sym2b,
    Sym3,
    Sym4,
    EvenR,
    F1,
    F2,
    F3,
    F4,
    OneModR,
    ThreeModMax,
    ThreeModOdd,
    ThreeModMax2,
    ThreeModEven,
    T34,
    T35,
    T35bis,
    T36,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 22] = [
        FamilyTag::Simplex,
        FamilyTag::SymTable2,
        FamilyTag::AltEvenRank,
        FamilyTag::AltOddRank,
        FamilyTag::Sym2a,
        FamilyTag::Sym2b,
        FamilyTag::Sym3,
        FamilyTag::Sym4,
        FamilyTag::EvenR,
        FamilyTag::F1,
        FamilyTag::F2,
        FamilyTag::F3,
        FamilyTag::F4,
        FamilyTag::OneModR,
        FamilyTag::ThreeModMax,
        FamilyTag::ThreeModOdd,
        FamilyTag::ThreeModMax2,
        FamilyTag::ThreeModEven,
        FamilyTag::T34,
        FamilyTag::T35,
        FamilyTag::T35bis,
        FamilyTag::T36,
    ];

    /// Human-readable admissibility condition.
    pub fn hypotheses(self) -> &'static str {
        use FamilyTag::*;
        match self {
            Simplex => "n >= 2, r = n-1",
            SymTable2 => "n >= 5, 3 <= r <= n-2",
            AltEvenRank => "r even >= 4, n = 2r+1",
            AltOddRank => "r odd >= 5, n = 2r+3",
            Sym2a => "n even >= 8, 3 <= r <= (n-2)/2",
            Sym2b => "n even >= 10, 4 <= r <= (n-2)/2",
            Sym3 => "n even >= 8, r = n/2",
            Sym4 => "n = 3 mod 4, n >= 11, r = 4",
            EvenR => "n even >= 14, 6 <= r <= (n-2)/2",
            F1 => "n = 2 mod 4, n >= 10, r = 4",
            F2 => "n = 2 mod 4, n >= 10, r = 5",
            F3 => "n = 0 mod 4, n >= 16, r = 4",
            F4 => "n = 0 mod 4, n >= 12, r = 5",
            OneModR => "n = 1 mod 4, n >= 13, 4 <= r <= (n-1)/2",
            ThreeModMax => "n = 3 mod 4, n >= 15, r = (n-1)/2",
            ThreeModOdd => "n = 3 mod 4, n >= 15, r odd, 7 <= r < (n-1)/2",
            ThreeModMax2 => "n = 3 mod 4, n >= 19, r = (n-3)/2",
            ThreeModEven => "n = 3 mod 4, n >= 19, r even, 8 <= r < (n-3)/2",
            T34 => "n = 3 mod 4, n >= 15, r = 4",
            T35 | T35bis => "n = 3 mod 4, n >= 15, r = 5",
            T36 => "n = 3 mod 4, n >= 15, r = 6",
        }
    }

    /// Whether `(n, r)` satisfies this family's hypotheses.
    pub fn admits(self, n: usize, r: usize) -> bool {
        use FamilyTag::*;
        let even = n.is_multiple_of(2);
        let m4 = n % 4;
        match self {
            Simplex => n >= 2 && r == n - 1,
            SymTable2 => n >= 5 && (3..=n - 2).contains(&r),
            AltEvenRank => r >= 4 && r.is_multiple_of(2) && n == 2 * r + 1,
            AltOddRank => r >= 5 && r % 2 == 1 && n == 2 * r + 3,
            Sym2a => even && n >= 8 && (3..=(n - 2) / 2).contains(&r),
            Sym2b => even && n >= 10 && (4..=(n - 2) / 2).contains(&r),
            Sym3 => even && n >= 8 && r == n / 2,
            Sym4 => m4 == 3 && n >= 11 && r == 4,
            EvenR => even && n >= 14 && (6..=(n - 2) / 2).contains(&r),
            F1 => m4 == 2 && n >= 10 && r == 4,
            F2 => m4 == 2 && n >= 10 && r == 5,
            F3 => m4 == 0 && n >= 16 && r == 4,
            F4 => m4 == 0 && n >= 12 && r == 5,
            OneModR => m4 == 1 && n >= 13 && (4..=(n - 1) / 2).contains(&r),
            ThreeModMax => m4 == 3 && n >= 15 && r == (n - 1) / 2,
            ThreeModOdd => m4 == 3 && n >= 15 && r % 2 == 1 && r >= 7 && r < (n - 1) / 2,
            ThreeModMax2 => m4 == 3 && n >= 19 && r == (n - 3) / 2,
            ThreeModEven => m4 == 3 && n >= 19 && r.is_multiple_of(2) && r >= 8 && r < (n - 3) / 2,
            T34 => m4 == 3 && n >= 15 && r == 4,
            T35 | T35bis => m4 == 3 && n >= 15 && r == 5,
            T36 => m4 == 3 && n >= 15 && r == 6,
        }
    }

    pub fn group_kind(self) -> GroupKind {
        use FamilyTag::*;
        match self {
            Simplex | SymTable2 | Sym2b | Sym3 | Sym4 => GroupKind::Symmetric,
            Sym2a => GroupKind::Other,
            _ => GroupKind::Alternating,
        }
    }

    /// The group the family's graph generates.
    pub fn expected_group(self, n: usize) -> ExpectedGroup {
        use FamilyTag::*;
        match self {
            Simplex | SymTable2 | Sym2b | Sym3 | Sym4 => ExpectedGroup {
                kind: GroupKind::Symmetric,
                order: factorial(n),
            },
            Sym2a => ExpectedGroup {
                kind: GroupKind::Other,
                order: factorial((n - 4) / 2) * factorial((n + 4) / 2) / 2u32,
            },
            _ => ExpectedGroup {
                kind: GroupKind::Alternating,
                order: factorial(n) / 2u32,
            },
        }
    }

    /// Schläfli type the family is known to have, where one is recorded.
    pub fn expected_type(self, n: usize, r: usize) -> Option<ExpectedType> {
        use FamilyTag::*;
        let threes = |k: usize| std::iter::repeat_n(3u64, k);
        let n64 = n as u64;
        let r64 = r as u64;
        let v: Vec<u64> = match self {
            Simplex => threes(n - 2).collect(),
            SymTable2 => [n64 - r64 + 2, 6]
                .into_iter()
                .chain(threes(r - 3))
                .collect(),
            AltEvenRank => [10].into_iter().chain(threes(r - 2)).collect(),
            AltOddRank => [10]
                .into_iter()
                .chain(threes(r - 4))
                .chain([6, 4])
                .collect(),
            OneModR => {
                let top = (n64 - 1) / 2;
                if r64 == top {
                    [10].into_iter().chain(threes(r - 2)).collect()
                } else {
                    [10].into_iter()
                        .chain(threes(r - 4))
                        .chain([6, top - r64 + 3])
                        .collect()
                }
            }
            EvenR => {
                let i = n64 / 2 - r64;
                [(i + 4).lcm(&i), 6]
                    .into_iter()
                    .chain(threes(r - 6))
                    .chain([6, 6, 3])
                    .collect()
            }
            F1 => vec![5, 6, n64 - 4],
            F2 => vec![5, 5, 6, n64 - 5],
            F3 => vec![3, 12, (n64 - 8).lcm(&6)],
            F4 => vec![3, 4, 6, n64 - 7],
            ThreeModMax => [5, 5, 6]
                .into_iter()
                .chain(threes(r - 7))
                .chain([6, 6, 3])
                .collect(),
            ThreeModOdd => [n64 - 2 * (r64 - 2), 12, 6]
                .into_iter()
                .chain(threes(r - 7))
                .chain([6, 6, 3])
                .collect(),
            ThreeModMax2 => [5, 5, 6]
                .into_iter()
                .chain(threes(r - 8))
                .chain([6, 6, 6, 4])
                .collect(),
            ThreeModEven => [n64 - 2 * (r64 - 1), 12, 6]
                .into_iter()
                .chain(threes(r - 8))
                .chain([6, 6, 6, 4])
                .collect(),
            T34 if n == 15 => vec![10, 7, 4],
            T34 => vec![2 * (n64 - 10), 14, 4],
            T35 => vec![n64 - 10, 6, 6, 5],
            T35bis => vec![n64 - 9, 6, 5, 3],
            T36 => vec![n64 - 10, 6, 3, 5, 3],
            Sym2a | Sym2b | Sym3 | Sym4 => return None,
        };
        Some(ExpectedType(v))
    }

    fn graph(self, n: usize, r: usize) -> CprGraph {
        use FamilyTag::*;
        match self {
            Simplex => families::simplex(n),
            SymTable2 => families::sym_rank(n, r),
            AltEvenRank => families::ladder(r, 0),
            AltOddRank => families::ladder(r, 1),
            OneModR => families::ladder(r, (n - 1) / 2 - r),
            Sym2a => families::sym2a(n, r),
            Sym2b => families::sym2b(n, r),
            Sym3 => families::sym3(n),
            Sym4 => families::sym4(n),
            EvenR => families::even_r(n, r),
            F1 => families::f1(n),
            F2 => families::f2(n),
            F3 => families::f3(n),
            F4 => families::f4(n),
            ThreeModMax => families::three_mod(n, r, 0, false),
            ThreeModOdd => families::three_mod(n, r, (n - 2 * r - 1) / 4, false),
            ThreeModMax2 => families::three_mod(n, r, 0, true),
            ThreeModEven => families::three_mod(n, r, (n - 2 * r - 3) / 4, true),
            T34 => families::t34(n),
            T35 => families::t35(n),
            T35bis => families::t35bis(n),
            T36 => families::t36(n),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A family together with admissible parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyId {
    pub tag: FamilyTag,
    pub n: usize,
    pub r: usize,
}

impl FamilyId {
    pub fn new(tag: FamilyTag, n: usize, r: usize) -> Result<Self, ConstructionError> {
        if tag.admits(n, r) {
            Ok(Self { tag, n, r })
        } else {
            Err(ConstructionError::OutsideHypotheses {
                n,
                r,
                reason: format!("{tag} requires {}", tag.hypotheses()),
            })
        }
    }

    pub fn graph(&self) -> CprGraph {
        self.tag.graph(self.n, self.r)
    }

    pub fn expected_type(&self) -> Option<ExpectedType> {
        self.tag.expected_type(self.n, self.r)
    }

    pub fn expected_group(&self) -> ExpectedGroup {
        self.tag.expected_group(self.n)
    }
}

/// Schläfli type `{p_1, ..., p_{r-1}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExpectedType(pub Vec<u64>);

impl fmt::Display for ExpectedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedGroup {
    pub kind: GroupKind,
    pub order: BigUint,
}

/// A graph produced by a family, with what it is expected to certify.
#[derive(Debug, Clone)]
pub struct Construction {
    pub family: FamilyId,
    pub graph: CprGraph,
    pub expected_type: Option<ExpectedType>,
}

pub fn construct(family: FamilyId) -> Construction {
    Construction {
        family,
        graph: family.graph(),
        expected_type: family.expected_type(),
    }
}

/// Picks the family representing `A_n` at rank `r`.
///
/// `alt_rank5` selects the alternative rank-5 layout for n ≡ 3 (mod 4).
pub fn select_family(n: usize, r: usize, alt_rank5: bool) -> Result<FamilyId, ConstructionError> {
    use FamilyTag::*;
    let outside = |reason: String| ConstructionError::OutsideHypotheses { n, r, reason };
    if r < 4 {
        return Err(outside("ranks below 4 are not constructed".into()));
    }
    if n < 10 || r > (n - 1) / 2 {
        return Err(outside(format!(
            "rank must satisfy 4 <= r <= floor((n-1)/2) with n >= 10, here floor((n-1)/2) = {}",
            n.saturating_sub(1) / 2
        )));
    }
    if n == 12 && r == 4 {
        return Err(outside(
            "no construction here for A_12 at rank 4; it is known from a separate classification"
                .into(),
        ));
    }
    let tag = match n % 4 {
        0 | 2 if r >= 6 => EvenR,
        2 if r == 4 => F1,
        2 => F2,
        0 if r == 4 => F3,
        0 => F4,
        1 => OneModR,
        _ => {
            let max = (n - 1) / 2;
            match r {
                4 => T34,
                5 if alt_rank5 => T35bis,
                5 => T35,
                6 => T36,
                _ if r == max => ThreeModMax,
                _ if r + 1 == max && n >= 19 => ThreeModMax2,
                _ if r % 2 == 1 => ThreeModOdd,
                _ => ThreeModEven,
            }
        }
    };
    FamilyId::new(tag, n, r)
}

/// Graph, family and expected type of the dispatcher's choice for `(n, r)`.
pub fn build(
    n: usize,
    r: usize,
    alt_rank5: bool,
) -> Result<(CprGraph, FamilyId, Option<ExpectedType>), ConstructionError> {
    let family = select_family(n, r, alt_rank5)?;
    Ok((family.graph(), family, family.expected_type()))
}

/// One row of the machine-readable family listing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub tag: FamilyTag,
    pub hypotheses: String,
    pub group: GroupKind,
    pub instances: Vec<CatalogInstance>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogInstance {
    pub n: usize,
    pub r: usize,
    pub expected_type: Option<ExpectedType>,
}

/// Every family with its admissible `(n, r)` for `n` in `n_range`.
pub fn catalog(n_range: std::ops::RangeInclusive<usize>) -> Vec<CatalogEntry> {
    FamilyTag::ALL
        .iter()
        .map(|&tag| {
            let instances = n_range
                .clone()
                .flat_map(|n| (1..n).map(move |r| (n, r)))
                .filter(|&(n, r)| tag.admits(n, r))
                .map(|(n, r)| CatalogInstance {
                    n,
                    r,
                    expected_type: tag.expected_type(n, r),
                })
                .collect();
            CatalogEntry {
                tag,
                hypotheses: tag.hypotheses().to_string(),
                group: tag.group_kind(),
                instances,
            }
        })
        .collect()
}
