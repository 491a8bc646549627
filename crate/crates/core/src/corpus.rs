//! Bundled tables and generated loops.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::{AlgebraRef, Elem, Kind};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::format;
use crate::ideal::{ideal_closure, Ideal};
use crate::loops::{reduced_latin_squares, MAX_LOOP_ORDER};
use crate::algebra::FiniteAlgebra;

/// Where a corpus entry came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Bundled,
    File,
    Generated,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Bundled => "bundled",
            Source::File => "file",
            Source::Generated => "generated",
        })
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub kind: Kind,
    pub order: usize,
    pub source: Source,
    pub algebra: AlgebraRef,
    /// Short names for well-known ideals, given by generating elements.
    pub named_ideals: Vec<(String, Vec<Elem>)>,
}

impl CorpusEntry {
    pub fn new(id: impl Into<String>, source: Source, algebra: AlgebraRef) -> Self {
        CorpusEntry {
            id: id.into(),
            kind: algebra.kind(),
            order: algebra.order(),
            source,
            algebra,
            named_ideals: Vec::new(),
        }
    }

    /// Parses and validates a table in the text format.
    pub fn from_text(id: impl Into<String>, source: Source, text: &str) -> Result<Self> {
        Ok(CorpusEntry::new(id, source, format::parse(text)?))
    }

    pub fn named_ideal(&self, name: &str) -> Option<Ideal> {
        self.named_ideals
            .iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .map(|(_, gens)| ideal_closure(&self.algebra, gens))
    }
}

struct Bundled {
    id: &'static str,
    text: &'static str,
    ideals: &'static [(&'static str, &'static [Elem])],
}

const BUNDLED: &[Bundled] = &[
    Bundled {
        id: "z2",
        text: include_str!("../corpus/z2.tbl"),
        ideals: &[],
    },
    Bundled {
        id: "z4",
        text: include_str!("../corpus/z4.tbl"),
        ideals: &[("2Z4", &[2])],
    },
    Bundled {
        id: "z2xz2",
        text: include_str!("../corpus/z2xz2.tbl"),
        ideals: &[("M", &[2]), ("N", &[1])],
    },
    Bundled {
        id: "z6",
        text: include_str!("../corpus/z6.tbl"),
        ideals: &[("Z2", &[3]), ("Z3", &[2])],
    },
    Bundled {
        id: "s3",
        text: include_str!("../corpus/s3.tbl"),
        ideals: &[("A3", &[1])],
    },
    Bundled {
        id: "d4",
        text: include_str!("../corpus/d4.tbl"),
        ideals: &[("Z", &[2]), ("R", &[1])],
    },
    Bundled {
        id: "q8",
        text: include_str!("../corpus/q8.tbl"),
        ideals: &[("Z", &[1])],
    },
    Bundled {
        id: "a4",
        text: include_str!("../corpus/a4.tbl"),
        ideals: &[("V4", &[3])],
    },
    Bundled {
        id: "l5",
        text: include_str!("../corpus/l5.tbl"),
        ideals: &[],
    },
];

/// Ids of the bundled groups, in a fixed order.
pub const BUNDLED_GROUPS: &[&str] = &["z2", "z4", "z2xz2", "z6", "s3", "d4", "q8", "a4"];

/// A freshly built bundled entry; accepts `s3` or `s3.tbl`, any case.
///
/// Each call builds a new algebra, so ideals from two calls do not mix.
pub fn bundled(name: &str) -> Result<CorpusEntry> {
    let key = name.trim().to_ascii_lowercase();
    let key = key.strip_suffix(".tbl").unwrap_or(&key);
    let b = BUNDLED
        .iter()
        .find(|b| b.id == key)
        .ok_or_else(|| Error::Parse {
            line: 0,
            column: 0,
            message: format!("no bundled algebra named `{name}`"),
        })?;
    let mut entry = CorpusEntry::from_text(b.id, Source::Bundled, b.text)?;
    entry.named_ideals = b
        .ideals
        .iter()
        .map(|(n, g)| (n.to_string(), g.to_vec()))
        .collect();
    Ok(entry)
}

pub fn bundled_names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|b| b.id)
}

/// All bundled groups.
pub fn bundled_groups() -> Vec<CorpusEntry> {
    BUNDLED_GROUPS
        .iter()
        .map(|id| bundled(id).expect("bundled tables are valid"))
        .collect()
}

/// Every loop of order `n` (one per reduced Latin square), built once per
/// process. Ids are `loop{n}-{index}` in enumeration order.
pub fn loops_of_order(n: usize) -> Result<&'static [CorpusEntry]> {
    static CACHE: [OnceLock<Vec<CorpusEntry>>; MAX_LOOP_ORDER + 1] = [const { OnceLock::new() }; MAX_LOOP_ORDER + 1];
    if n == 0 || n > MAX_LOOP_ORDER {
        reduced_latin_squares(n, Budget::default())?;
        unreachable!("orders outside 1..=6 are rejected");
    }
    Ok(CACHE[n].get_or_init(|| {
        reduced_latin_squares(n, Budget::default())
            .expect("order checked")
            .into_iter()
            .enumerate()
            .map(|(i, table)| {
                let alg = FiniteAlgebra::from_mul_table(Kind::Loop, table)
                    .expect("reduced Latin squares are loops");
                CorpusEntry::new(format!("loop{n}-{i}"), Source::Generated, alg)
            })
            .collect()
    }))
}

/// Every generated loop of order at most `max_order`.
pub fn loops_up_to(max_order: usize) -> Result<Vec<&'static CorpusEntry>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(loops_of_order(n)?.iter());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_bundled_table_validates() {
        for name in bundled_names() {
            let e = bundled(name).unwrap();
            assert_eq!(e.order, e.algebra.order());
            for (n, _) in &e.named_ideals {
                assert!(e.named_ideal(n).is_some());
            }
        }
    }

    #[test]
    fn lookup_variants() {
        assert_eq!(bundled("S3.tbl").unwrap().order, 6);
        assert!(bundled("s4").is_err());
    }

    #[test]
    fn named_ideals() {
        let s3 = bundled("s3").unwrap();
        assert_eq!(s3.named_ideal("a3").unwrap().members(), &[0, 1, 2]);
        let q8 = bundled("q8").unwrap();
        assert_eq!(q8.named_ideal("Z").unwrap().members(), &[0, 1]);
        let a4 = bundled("a4").unwrap();
        assert_eq!(a4.named_ideal("V4").unwrap().len(), 4);
    }

    #[test]
    fn l5_is_the_first_nonassociative_order_five_loop() {
        let l5 = bundled("l5").unwrap().algebra;
        let first = loops_of_order(5)
            .unwrap()
            .iter()
            .find(|e| !e.algebra.is_associative())
            .unwrap();
        assert_eq!(l5.mul_table(), first.algebra.mul_table());
        assert_eq!(l5.kind(), Kind::Loop);
    }

    #[test]
    fn loop_ids() {
        let l3 = loops_of_order(3).unwrap();
        assert_eq!(l3.len(), 1);
        assert_eq!(l3[0].id, "loop3-0");
        assert!(loops_of_order(7).is_err());
    }
}
