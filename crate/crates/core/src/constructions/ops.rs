use crate::cpr::Sggi;
use crate::error::ConstructionError;
use crate::perm::{is_transitive, Permutation, StabilizerChain};

/// Lowers the rank by one: `rho_{d-2}` becomes `rho_{d-2} rho_d` and
/// `rho_d` is dropped, where `d` is the last index.
pub fn rank_reduce(s: &Sggi) -> Result<Sggi, ConstructionError> {
    let rank = s.rank();
    if rank < 4 {
        return Err(ConstructionError::RankTooSmall { rank });
    }
    let mut gens = s.generators()[..rank - 1].to_vec();
    gens[rank - 3] = gens[rank - 3].then(s.generator(rank - 1));
    Ok(Sggi::new(s.degree(), gens)?)
}

/// Multiplies generator `k` by a central involution `tau` lying outside the
/// group. The result has the same order as the original or twice it.
pub fn sesqui_extend(s: &Sggi, k: usize, tau: &Permutation) -> Result<Sggi, ConstructionError> {
    if k >= s.rank() {
        return Err(ConstructionError::IndexOutOfRange {
            index: k,
            rank: s.rank(),
        });
    }
    if tau.degree() != s.degree() {
        return Err(crate::error::PermError::DegreeMismatch {
            left: s.degree(),
            right: tau.degree(),
        }
        .into());
    }
    if !tau.is_involution() {
        return Err(ConstructionError::TauNotInvolution);
    }
    if let Some(index) = s.generators().iter().position(|g| !g.commutes_with(tau)) {
        return Err(ConstructionError::TauNotCentral { index });
    }
    let chain = StabilizerChain::new(s.generators())?;
    if chain.contains(tau)? {
        return Err(ConstructionError::TauInGroup);
    }
    let mut gens = s.generators().to_vec();
    gens[k] = gens[k].then(tau);
    Ok(Sggi::new(s.degree(), gens)?)
}

/// Extends a transitive group on `n >= 5` points to `n + 4` points by two
/// new involutions `(i, n+1)(n+2, n+3)` and `(n+1, n+2)(n+3, n+4)`, with `i`
/// 1-based. The result generates `S_{n+4}` if some original generator is
/// odd and `A_{n+4}` otherwise.
///
/// The new generators need not commute with the old ones, so the result is
/// returned as a plain generator list.
pub fn append_0101_tail(
    generators: &[Permutation],
    i: usize,
) -> Result<Vec<Permutation>, ConstructionError> {
    let n = generators.first().map_or(0, Permutation::degree);
    if n < 5 {
        return Err(ConstructionError::DegreeTooSmall { n });
    }
    if i == 0 || i > n {
        return Err(crate::error::PermError::PointOutOfRange {
            point: i,
            degree: n,
        }
        .into());
    }
    if !is_transitive(generators, n) {
        return Err(ConstructionError::Intransitive);
    }
    let mut out = generators
        .iter()
        .map(|g| g.extend(n + 4))
        .collect::<Result<Vec<_>, _>>()?;
    out.push(Permutation::from_transpositions(
        n + 4,
        &[(i, n + 1), (n + 2, n + 3)],
    )?);
    out.push(Permutation::from_transpositions(
        n + 4,
        &[(n + 1, n + 2), (n + 3, n + 4)],
    )?);
    Ok(out)
}

/// The subgroup generated by the generators indexed by `indices`, in their
/// original order, on the same points.
pub fn parabolic(s: &Sggi, indices: &[usize]) -> Sggi {
    let mut keep: Vec<usize> = indices.iter().copied().filter(|&i| i < s.rank()).collect();
    keep.sort_unstable();
    keep.dedup();
    let gens = keep.iter().map(|&i| s.generator(i).clone()).collect();
    Sggi::new(s.degree(), gens).expect("a subset of an sggi is an sggi")
}
