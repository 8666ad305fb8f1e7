//! Todd–Coxeter coset enumeration over the trivial subgroup (HLT strategy
//! with a union-find coincidence routine).

use std::collections::VecDeque;
use std::fmt;

use crate::braid_words::free_reduce;

use super::{GroupError, GroupTable};

pub const DEFAULT_MAX_COSETS: usize = 10_000;

/// A finite presentation; generator `g` (0-based) is letter `g + 1`, its
/// inverse `-(g + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    relators: Vec<Vec<i32>>,
}

fn power(letter: i32, k: usize) -> impl Iterator<Item = i32> {
    std::iter::repeat_n(letter, k)
}

impl Presentation {
    pub fn new(generators: usize, relators: Vec<Vec<i32>>) -> Result<Self, GroupError> {
        for r in &relators {
            if let Some(&l) = r.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > generators) {
                return Err(GroupError::BadPresentation(format!("letter {l} with {generators} generators")));
            }
        }
        let relators = relators.into_iter().map(free_reduce).filter(|r| !r.is_empty()).collect();
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Vec<i32>] {
        &self.relators
    }

    /// `⟨A, B, C | A^p = B^q = C^r = ABC⟩`.
    pub fn triangle(p: usize, q: usize, r: usize) -> Self {
        let abc_inv = [-3, -2, -1];
        let rel = |g: i32, k: usize| power(g, k).chain(abc_inv).collect::<Vec<_>>();
        Presentation::new(3, vec![rel(1, p), rel(2, q), rel(3, r)]).expect("valid letters")
    }

    /// `⟨A, B | A^p = B^q = (AB)²⟩`, relators `A^p B^{-q}` and `B^q (AB)^{-2}`.
    pub fn triangle_two_generator(p: usize, q: usize) -> Self {
        let r1 = power(1, p).chain(power(-2, q)).collect();
        let r2 = power(2, q).chain([-2, -1, -2, -1]).collect();
        Presentation::new(2, vec![r1, r2]).expect("valid letters")
    }

    /// `⟨A | A^k⟩`.
    pub fn cyclic(k: usize) -> Self {
        Presentation::new(1, vec![power(1, k).collect()]).expect("valid letters")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.generators).map(gen_name).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| word_text(r)).collect();
        write!(f, "⟨{} | {}⟩", names.join(", "), rels.join(", "))
    }
}

fn gen_name(g: usize) -> String {
    let base = (b'A' + (g % 26) as u8) as char;
    if g < 26 {
        base.to_string()
    } else {
        format!("{base}{}", g / 26)
    }
}

fn word_text(w: &[i32]) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.iter()
        .map(|&l| {
            let name = gen_name(l.unsigned_abs() as usize - 1);
            if l > 0 {
                name
            } else {
                format!("{name}^-1")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

const UNDEF: usize = usize::MAX;

struct Enumerator {
    cols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    queue: Vec<usize>,
    max: usize,
}

fn col(letter: i32) -> usize {
    let g = letter.unsigned_abs() as usize - 1;
    if letter > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

fn inv_col(c: usize) -> usize {
    c ^ 1
}

impl Enumerator {
    fn rep(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), GroupError> {
        if self.table.len() >= self.max {
            return Err(GroupError::CosetLimitExceeded { max: self.max });
        }
        let d = self.table.len();
        self.table.push(vec![UNDEF; self.cols]);
        self.parent.push(d);
        self.table[c][x] = d;
        self.table[d][inv_col(x)] = c;
        Ok(())
    }

    fn merge(&mut self, k: usize, l: usize) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (mu, nu) = (k.min(l), k.max(l));
        self.parent[nu] = mu;
        self.queue.push(nu);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.table[g][x];
                if d == UNDEF {
                    continue;
                }
                self.table[d][inv_col(x)] = UNDEF;
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.table[mu][x] != UNDEF {
                    let t = self.table[mu][x];
                    self.merge(nu, t);
                } else if self.table[nu][inv_col(x)] != UNDEF {
                    let t = self.table[nu][inv_col(x)];
                    self.merge(mu, t);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][inv_col(x)] = mu;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, a: usize, w: &[usize]) -> Result<(), GroupError> {
        let r = w.len();
        let (mut f, mut b) = (a, a);
        let (mut i, mut j) = (0usize, r as isize - 1);
        loop {
            while i < r && self.table[f][w[i]] != UNDEF {
                f = self.table[f][w[i]];
                i += 1;
            }
            if i == r {
                if f != a {
                    self.coincidence(f, a);
                }
                return Ok(());
            }
            while j >= i as isize && self.table[b][inv_col(w[j as usize])] != UNDEF {
                b = self.table[b][inv_col(w[j as usize])];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            } else if j == i as isize {
                self.table[f][w[i]] = b;
                self.table[b][inv_col(w[i])] = f;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// The group of a presentation as a table, with the order as its size.
///
/// Cosets are renumbered breadth first from the identity along columns
/// `A, A⁻¹, B, B⁻¹, …`; each label is the resulting shortest word.
pub fn coset_enumerate(p: &Presentation, max_cosets: usize) -> Result<GroupTable, GroupError> {
    let cols = 2 * p.generators;
    if cols == 0 {
        return GroupTable::new(vec![vec![0]], vec!["e".into()]);
    }
    let rels: Vec<Vec<usize>> = p.relators.iter().map(|r| r.iter().map(|&l| col(l)).collect()).collect();
    let mut e = Enumerator { cols, table: vec![vec![UNDEF; cols]], parent: vec![0], queue: Vec::new(), max: max_cosets };
    let mut a = 0;
    while a < e.table.len() {
        for r in &rels {
            if !e.live(a) {
                break;
            }
            e.scan_and_fill(a, r)?;
        }
        for x in 0..cols {
            if !e.live(a) {
                break;
            }
            if e.table[a][x] == UNDEF {
                e.define(a, x)?;
            }
        }
        a += 1;
    }
    // standardize live cosets by BFS from the identity coset
    let mut number = vec![UNDEF; e.table.len()];
    let mut order = vec![0usize];
    let mut words: Vec<Vec<i32>> = vec![Vec::new()];
    number[0] = 0;
    let mut q = VecDeque::from([0usize]);
    while let Some(c) = q.pop_front() {
        for x in 0..cols {
            let d = e.table[c][x];
            debug_assert!(d != UNDEF && e.live(d), "complete table after enumeration");
            if number[d] == UNDEF {
                number[d] = order.len();
                order.push(d);
                let mut w = words[number[c]].clone();
                let g = (x / 2) as i32 + 1;
                w.push(if x % 2 == 0 { g } else { -g });
                words.push(w);
                q.push_back(d);
            }
        }
    }
    let act = |c: usize, w: &[i32]| w.iter().fold(c, |c, &l| e.table[c][col(l)]);
    let mul: Vec<Vec<usize>> = order
        .iter()
        .map(|&c| words.iter().map(|w| number[act(c, w)]).collect())
        .collect();
    let labels = words.iter().map(|w| word_text(w)).collect();
    GroupTable::new(mul, labels)
}
