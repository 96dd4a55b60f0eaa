//! Boundary-map ranks over the two-element field, as corroborating
//! evidence for contractibility in low degrees.

/// Rank of a 0/1 matrix over GF(2); rows are bit-packed.
fn gf2_rank(mut rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let mut rank = 0;

    for col in 0..cols {
        let word = col / 64;
        let bit = 1u64 << (col % 64);
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][word] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[word] & bit != 0 {
                for (w, p) in row.iter_mut().zip(&pivot_row) {
                    *w ^= p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn pack(indices: &[usize], cols: usize) -> Vec<u64> {
    let mut row = vec![0u64; cols.div_ceil(64).max(1)];
    for &i in indices {
        row[i / 64] |= 1u64 << (i % 64);
    }
    row
}

/// Reduced Betti numbers in degrees 0 and 1 over GF(2), from the vertex
/// count and the 1- and 2-simplices (as sorted vertex-index lists).
pub fn reduced_betti_01(
    vertices: usize,
    edges: &[Vec<usize>],
    triangles: &[Vec<usize>],
) -> (usize, usize) {
    assert!(vertices > 0);
    let edge_index: std::collections::HashMap<&[usize], usize> = edges
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_slice(), i))
        .collect();
    let d1: Vec<Vec<u64>> = edges.iter().map(|e| pack(e, vertices)).collect();
    let rank_d1 = gf2_rank(d1, vertices);
    let d2: Vec<Vec<u64>> = triangles
        .iter()
        .map(|t| {
            let faces = [vec![t[0], t[1]], vec![t[0], t[2]], vec![t[1], t[2]]];
            let idx: Vec<usize> = faces.iter().map(|f| edge_index[f.as_slice()]).collect();
            pack(&idx, edges.len())
        })
        .collect();
    let rank_d2 = if edges.is_empty() {
        0
    } else {
        gf2_rank(d2, edges.len())
    };
    let betti0_reduced = vertices - 1 - rank_d1;
    let betti1 = edges.len() - rank_d1 - rank_d2;
    (betti0_reduced, betti1)
}
