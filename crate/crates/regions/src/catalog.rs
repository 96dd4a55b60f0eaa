//! Built-in arrangements used by the test corpus and handy as examples.

use num::BigRational;

use crate::arrangement::{normals_from_ints, Arrangement};
use crate::error::Result;

fn ints(rows: Vec<Vec<i64>>) -> Vec<Vec<BigRational>> {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    normals_from_ints(&refs)
}

/// The coordinate arrangement in dimension `d`.
pub fn coordinate(d: usize) -> Arrangement {
    let rows: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect();
    Arrangement::from_normals(d, ints(rows)).unwrap()
}

/// `n` distinct lines through the origin of the plane, with slopes
/// `0, 1, ..., n-1` for the normals.
pub fn lines(n: usize) -> Arrangement {
    let rows: Vec<Vec<i64>> = (0..n).map(|k| vec![1, k as i64]).collect();
    Arrangement::from_normals(2, ints(rows)).unwrap()
}

/// The arrangement of hyperplanes `x_i = x_j` on `k` coordinates. Its rank
/// is `k - 1`, so it is never essential as given.
pub fn braid(k: usize) -> Arrangement {
    let mut rows = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let mut row = vec![0i64; k];
            row[i] = 1;
            row[j] = -1;
            rows.push(row);
        }
    }
    Arrangement::from_normals(k, ints(rows)).unwrap()
}

/// The essentialization of [`braid`], living in rank-many dimensions.
pub fn braid_essential(k: usize) -> Arrangement {
    braid(k).essentialize().unwrap()
}

/// Four planes in general position in three dimensions; the smallest
/// non-simplicial central arrangement used throughout the corpus.
pub fn generic_four_planes() -> Arrangement {
    Arrangement::from_normals(
        3,
        ints(vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 1],
        ]),
    )
    .unwrap()
}

/// Five planes in general position in three dimensions.
pub fn generic_five_planes() -> Arrangement {
    Arrangement::from_normals(
        3,
        ints(vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 1],
            vec![1, 2, 3],
        ]),
    )
    .unwrap()
}

/// One corpus member with its frozen expectations.
pub struct CorpusEntry {
    pub name: &'static str,
    pub arrangement: Arrangement,
    /// Expected chamber count.
    pub chambers: usize,
    /// Expected simpliciality; `None` for non-essential entries, where the
    /// test is an error by construction.
    pub simplicial: Option<bool>,
}

/// The desk-scale corpus: coordinate arrangements, pencils of lines,
/// braid arrangements (raw and essentialized), and generic arrangements in
/// rank three. Chamber counts follow the standard counting formulas
/// (2^d for coordinates, 2n for pencils, k! for braids, and
/// 2(1 + (n-1) + C(n-1, 2)) for generic central arrangements in rank 3).
pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry {
            name: "coordinate-2",
            arrangement: coordinate(2),
            chambers: 4,
            simplicial: Some(true),
        },
        CorpusEntry {
            name: "coordinate-3",
            arrangement: coordinate(3),
            chambers: 8,
            simplicial: Some(true),
        },
        CorpusEntry {
            name: "coordinate-4",
            arrangement: coordinate(4),
            chambers: 16,
            simplicial: Some(true),
        },
        CorpusEntry {
            name: "lines-2",
            arrangement: lines(2),
            chambers: 4,
            simplicial: Some(true),
        },
        CorpusEntry {
            name: "lines-3",
            arrangement: lines(3),
            chambers: 6,
            simplicial: Some(true),
        },
        CorpusEntry {
            name: "lines-4",
            arrangement: lines(4),
            chambers: 8,
            simplicial: Some(true),
        },
        CorpusEntry {
            name: "lines-5",
            arrangement: lines(5),
            chambers: 10,
            simplicial: Some(true),
        },
        CorpusEntry {
            name: "braid-3",
            arrangement: braid(3),
            chambers: 6,
            simplicial: None,
        },
        CorpusEntry {
            name: "braid-3-essential",
            arrangement: braid_essential(3),
            chambers: 6,
            simplicial: Some(true),
        },
        CorpusEntry {
            name: "generic-4-planes",
            arrangement: generic_four_planes(),
            chambers: 14,
            simplicial: Some(false),
        },
        CorpusEntry {
            name: "generic-5-planes",
            arrangement: generic_five_planes(),
            chambers: 22,
            simplicial: Some(false),
        },
    ]
}

/// Corpus entry by name; used by tests and examples.
pub fn by_name(name: &str) -> Result<Arrangement> {
    corpus()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.arrangement)
        .ok_or_else(|| crate::error::Error::Parse(format!("unknown catalog entry `{name}`")))
}
