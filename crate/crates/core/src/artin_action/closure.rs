use std::collections::HashMap;

use super::{artin_endo, OracleError, QuotientEndo};
use crate::braid_words::BraidWord;
use crate::finite_groups::GroupTable;

pub const DEFAULT_CLOSURE_CAP: usize = 512;
pub const DEFAULT_IMAGE_LENGTH_CAP: usize = 10_000;

/// The image in `M_{0,n}` of a finitely generated subgroup.
#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub table: GroupTable,
    /// Shortest word found for each element, in table order.
    pub words: Vec<BraidWord>,
    pub endos: Vec<QuotientEndo>,
}

/// Breadth-first closure of the images of `generators` under composition.
///
/// Elements are numbered in discovery order (generators tried in the given
/// order, FIFO queue), so each label is a shortest word in the generators,
/// first in that order among equals.
pub fn closure_mod_center(generators: &[BraidWord], cap: usize) -> Result<ClosureResult, OracleError> {
    let n = generators.first().ok_or(OracleError::NoGenerators)?.n();
    if generators.iter().any(|g| g.n() != n) {
        return Err(OracleError::StrandMismatch);
    }
    let gen_endos: Vec<QuotientEndo> = generators.iter().map(artin_endo).collect();
    let mut index: HashMap<QuotientEndo, usize> = HashMap::new();
    let mut endos = vec![QuotientEndo::identity(n)];
    let mut words = vec![BraidWord::identity(n)];
    index.insert(endos[0].clone(), 0);
    // right[a][g] = a · g
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < endos.len() {
        let mut row = Vec::with_capacity(gen_endos.len());
        for (g, ge) in gen_endos.iter().enumerate() {
            let prod = endos[head].compose(ge);
            if prod.total_len() > DEFAULT_IMAGE_LENGTH_CAP {
                return Err(OracleError::LengthCap { limit: DEFAULT_IMAGE_LENGTH_CAP });
            }
            let next = index.len();
            let id = *index.entry(prod.clone()).or_insert(next);
            if id == next {
                if next >= cap {
                    return Err(OracleError::CapExceeded { cap });
                }
                endos.push(prod);
                words.push(&words[head] * &generators[g]);
            }
            row.push(id);
        }
        right.push(row);
        head += 1;
    }
    // the generator path of each element, read off the BFS tree
    let order = endos.len();
    let mut path: Vec<Vec<usize>> = vec![Vec::new(); order];
    for a in 0..order {
        for (g, &b) in right[a].iter().enumerate() {
            if b > a && path[b].is_empty() && b != 0 {
                let mut p = path[a].clone();
                p.push(g);
                path[b] = p;
            }
        }
    }
    let mul: Vec<Vec<usize>> = (0..order)
        .map(|a| (0..order).map(|b| path[b].iter().fold(a, |x, &g| right[x][g])).collect())
        .collect();
    let labels = words.iter().map(|w| w.to_string()).collect();
    let table = GroupTable::new(mul, labels).map_err(|_| OracleError::CapExceeded { cap })?;
    Ok(ClosureResult { table, words, endos })
}
