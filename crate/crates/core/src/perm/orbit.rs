use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::PermError;

/// Orbit of a 0-based `point` under the generated group, ascending.
pub fn orbit(gens: &[Permutation], degree: usize, point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut queue = vec![point];
    let mut idx = 0;
    while idx < queue.len() {
        let x = queue[idx];
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
        idx += 1;
    }
    queue.sort_unstable();
    queue
}

/// All orbits, ordered by smallest point.
pub fn orbits(gens: &[Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree {
        if !assigned[p] {
            let o = orbit(gens, degree, p);
            for &x in &o {
                assigned[x] = true;
            }
            out.push(o);
        }
    }
    out
}

pub fn is_transitive(gens: &[Permutation], degree: usize) -> bool {
    degree <= 1 || orbit(gens, degree, 0).len() == degree
}

/// A partition of the points into blocks of imprimitivity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSystem {
    /// 0-based blocks, each ascending, ordered by smallest point.
    pub blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, Vec::len)
    }

    /// True iff every generator maps each block onto a block.
    pub fn is_preserved_by(&self, gens: &[Permutation]) -> bool {
        let degree: usize = self.blocks.iter().map(Vec::len).sum();
        let mut block_of = vec![0usize; degree];
        for (b, block) in self.blocks.iter().enumerate() {
            for &p in block {
                block_of[p] = b;
            }
        }
        gens.iter().all(|g| {
            self.blocks.iter().all(|block| {
                let target = block_of[g.image(block[0])];
                block.iter().all(|&p| block_of[g.image(p)] == target)
            })
        })
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Finest block system in which `a` and `b` share a block.
fn block_system_joining(gens: &[Permutation], degree: usize, a: usize, b: usize) -> BlockSystem {
    let mut parent: Vec<usize> = (0..degree).collect();
    let mut pending = vec![(a, b)];
    while let Some((x, y)) = pending.pop() {
        let rx = find(&mut parent, x);
        let ry = find(&mut parent, y);
        if rx == ry {
            continue;
        }
        parent[ry] = rx;
        for g in gens {
            pending.push((g.image(x), g.image(y)));
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut index_of_root = vec![usize::MAX; degree];
    for p in 0..degree {
        let r = find(&mut parent, p);
        if index_of_root[r] == usize::MAX {
            index_of_root[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[index_of_root[r]].push(p);
    }
    BlockSystem { blocks }
}

/// A nontrivial block system of a transitive group, if one exists.
///
/// Every seed pair `{0, p}` is closed under the generators; among the
/// resulting nontrivial systems the one with the smallest blocks is
/// returned (ties go to the smallest `p`).
pub fn minimal_block_system(
    gens: &[Permutation],
    degree: usize,
) -> Result<Option<BlockSystem>, PermError> {
    if !is_transitive(gens, degree) {
        return Err(PermError::Intransitive { degree });
    }
    let mut best: Option<BlockSystem> = None;
    for p in 1..degree {
        let sys = block_system_joining(gens, degree, 0, p);
        if sys.blocks.len() > 1
            && best
                .as_ref()
                .is_none_or(|b| sys.block_size() < b.block_size())
        {
            best = Some(sys);
        }
    }
    Ok(best)
}

pub fn is_primitive(gens: &[Permutation], degree: usize) -> Result<bool, PermError> {
    Ok(minimal_block_system(gens, degree)?.is_none())
}
