//! Congruence tables for subgroups of the binary polyhedral maximal
//! subgroups. Each row maps residues of `n` to the union of `G_i` the
//! subgroup lies in (and meets every part of).

use super::Placement;
use crate::finite_groups::GroupName;

const G0: Placement = Placement::G0;
const G1: Placement = Placement::G1;
const G2: Placement = Placement::G2;
const G01: Placement = Placement::G0_G1;
const G21: Placement = Placement::G2_G1;
const G02: Placement = Placement::G0_G2;

/// Which class of a two-class subgroup inside `O1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum O1Class {
    /// Subgroups of the copy of `T1`.
    InsideT1,
    /// Not contained in the copy of `T1`.
    Outside,
    /// The abstract type has a single class in `O1`.
    Only,
}

pub(crate) struct Row {
    pub ambient: &'static str,
    pub group: GroupName,
    pub class: O1Class,
    pub modulus: usize,
    pub rules: &'static [(&'static [usize], Placement)],
    pub case: &'static str,
}

use GroupName::{Cyclic, Dic};
use O1Class::{InsideT1, Only, Outside};

pub(crate) const ROWS: &[Row] = &[
    // binary tetrahedral, n ≡ 4 mod 6
    Row { ambient: "T1", group: GroupName::T1, class: Only, modulus: 12, rules: &[(&[4], G01), (&[10], G21)], case: "tetrahedral/T1" },
    Row { ambient: "T1", group: Cyclic(3), class: Only, modulus: 12, rules: &[(&[4, 10], G1)], case: "tetrahedral/Z3-Z6" },
    Row { ambient: "T1", group: Cyclic(6), class: Only, modulus: 12, rules: &[(&[4, 10], G1)], case: "tetrahedral/Z3-Z6" },
    Row { ambient: "T1", group: Cyclic(4), class: Only, modulus: 12, rules: &[(&[4], G0), (&[10], G2)], case: "tetrahedral/Z4-Q8" },
    Row { ambient: "T1", group: Dic(8), class: Only, modulus: 12, rules: &[(&[4], G0), (&[10], G2)], case: "tetrahedral/Z4-Q8" },
    // binary icosahedral, n ≡ 0, 2, 12, 20 mod 30
    Row {
        ambient: "I",
        group: GroupName::I,
        class: Only,
        modulus: 60,
        rules: &[(&[0], G0), (&[2], G2), (&[12, 20, 30, 32, 42, 50], G02)],
        case: "icosahedral/I",
    },
    Row { ambient: "I", group: Cyclic(3), class: Only, modulus: 30, rules: &[(&[0, 12], G0), (&[2, 20], G2)], case: "icosahedral/Z3-Z6" },
    Row { ambient: "I", group: Cyclic(6), class: Only, modulus: 30, rules: &[(&[0, 12], G0), (&[2, 20], G2)], case: "icosahedral/Z3-Z6" },
    Row { ambient: "I", group: Cyclic(5), class: Only, modulus: 30, rules: &[(&[0, 20], G0), (&[2, 12], G2)], case: "icosahedral/Z5-Z10" },
    Row { ambient: "I", group: Cyclic(10), class: Only, modulus: 30, rules: &[(&[0, 20], G0), (&[2, 12], G2)], case: "icosahedral/Z5-Z10" },
    Row {
        ambient: "I",
        group: Cyclic(4),
        class: Only,
        modulus: 60,
        rules: &[(&[0, 12, 20, 32], G0), (&[2, 30, 42, 50], G2)],
        case: "icosahedral/Z4-Q8",
    },
    Row {
        ambient: "I",
        group: Dic(8),
        class: Only,
        modulus: 60,
        rules: &[(&[0, 12, 20, 32], G0), (&[2, 30, 42, 50], G2)],
        case: "icosahedral/Z4-Q8",
    },
    Row {
        ambient: "I",
        group: GroupName::T1,
        class: Only,
        modulus: 60,
        rules: &[(&[0, 12], G0), (&[2, 50], G2), (&[20, 30, 32, 42], G02)],
        case: "icosahedral/T1-Dic12",
    },
    Row {
        ambient: "I",
        group: Dic(12),
        class: Only,
        modulus: 60,
        rules: &[(&[0, 12], G0), (&[2, 50], G2), (&[20, 30, 32, 42], G02)],
        case: "icosahedral/T1-Dic12",
    },
    Row {
        ambient: "I",
        group: Dic(20),
        class: Only,
        modulus: 60,
        rules: &[(&[0, 20], G0), (&[2, 42], G2), (&[12, 30, 32, 50], G02)],
        case: "icosahedral/Dic20",
    },
    // binary octahedral, n ≡ 0, 2 mod 6
    Row {
        ambient: "O1",
        group: GroupName::O1,
        class: Outside,
        modulus: 24,
        rules: &[(&[0], G0), (&[2], G2), (&[6, 8, 12, 14, 18, 20], G02)],
        case: "octahedral/O1",
    },
    Row {
        ambient: "O1",
        group: GroupName::T1,
        class: InsideT1,
        modulus: 12,
        rules: &[(&[0], G0), (&[2], G2), (&[6, 8], G02)],
        case: "octahedral/T1",
    },
    Row {
        ambient: "O1",
        group: Dic(16),
        class: Outside,
        modulus: 24,
        rules: &[(&[0, 8], G0), (&[2, 18], G2), (&[6, 12, 14, 20], G02)],
        case: "octahedral/Q16",
    },
    Row {
        ambient: "O1",
        group: Dic(12),
        class: Outside,
        modulus: 24,
        rules: &[(&[0, 6], G0), (&[2, 20], G2), (&[8, 12, 14, 18], G02)],
        case: "octahedral/Dic12",
    },
    Row { ambient: "O1", group: Cyclic(8), class: Outside, modulus: 12, rules: &[(&[0, 8], G0), (&[2, 6], G2)], case: "octahedral/Z8" },
    Row {
        ambient: "O1",
        group: Cyclic(4),
        class: InsideT1,
        modulus: 12,
        rules: &[(&[0, 8], G0), (&[2, 6], G2)],
        case: "octahedral/Z4-face",
    },
    Row {
        ambient: "O1",
        group: Cyclic(4),
        class: Outside,
        modulus: 24,
        rules: &[(&[0, 6, 8, 14], G0), (&[2, 12, 18, 20], G2)],
        case: "octahedral/Z4-edge",
    },
    Row {
        ambient: "O1",
        group: Dic(8),
        class: InsideT1,
        modulus: 12,
        rules: &[(&[0, 8], G0), (&[2, 6], G2)],
        case: "octahedral/Q8-in-T1",
    },
    Row {
        ambient: "O1",
        group: Dic(8),
        class: Outside,
        modulus: 24,
        rules: &[(&[0, 8], G0), (&[2, 18], G2), (&[6, 12, 14, 20], G02)],
        case: "octahedral/Q8-outside-T1",
    },
    Row { ambient: "O1", group: Cyclic(3), class: InsideT1, modulus: 6, rules: &[(&[0], G0), (&[2], G2)], case: "octahedral/Z3-Z6" },
    Row { ambient: "O1", group: Cyclic(6), class: InsideT1, modulus: 6, rules: &[(&[0], G0), (&[2], G2)], case: "octahedral/Z3-Z6" },
];

impl Row {
    pub fn lookup(&self, n: usize) -> Option<Placement> {
        let r = n % self.modulus;
        self.rules.iter().find(|(res, _)| res.contains(&r)).map(|&(_, p)| p)
    }
}

/// Rows for `group` inside the polyhedral `ambient`.
pub(crate) fn rows_for(ambient: &str, group: GroupName) -> Vec<&'static Row> {
    ROWS.iter().filter(|r| r.ambient == ambient && r.group == group).collect()
}
