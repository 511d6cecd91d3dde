//! Dense linear algebra over `F_p` for the small matrices that arise here.

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^{p-2} is the inverse.
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn row_reduce(rows: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = inv_mod(rows[r][col], p);
        for v in rows[r].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for c in 0..width {
                    rows[i][c] = (rows[i][c] + p - f * rows[r][c] % p) % p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Solves `A x = b` for invertible square `A`.
pub(crate) fn solve(a: &[Vec<u64>], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let n = b.len();
    let mut rows: Vec<Vec<u64>> = a
        .iter()
        .zip(b)
        .map(|(r, &bi)| r.iter().copied().chain([bi]).collect())
        .collect();
    let pivots = row_reduce(&mut rows, p);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(rows.into_iter().map(|r| r[n]).collect())
}

/// A basis of `{e : Σ eᵢ vᵢ = 0}` for the given vectors `vᵢ`.
pub(crate) fn left_kernel(vectors: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let count = vectors.len();
    let dim = vectors.first().map_or(0, Vec::len);
    // Columns are the vectors; solve M e = 0 with M of shape dim × count.
    let mut rows: Vec<Vec<u64>> = (0..dim)
        .map(|d| vectors.iter().map(|v| v[d] % p).collect())
        .collect();
    let pivots = row_reduce(&mut rows, p);
    let free = (0..count).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut e = vec![0; count];
        e[f] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            e[pc] = (p - rows[r][f]) % p;
        }
        e
    })
    .collect()
}

pub(crate) fn rank(vectors: &[Vec<u64>], p: u64) -> usize {
    let mut rows = vectors.to_vec();
    row_reduce(&mut rows, p).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_p() {
        for p in [2u64, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }

    #[test]
    fn kernel_vectors_are_relations() {
        let p = 5;
        let vs = vec![vec![1, 2, 0], vec![2, 4, 0], vec![0, 0, 1], vec![1, 2, 1]];
        let ker = left_kernel(&vs, p);
        assert_eq!(ker.len(), 2);
        assert_eq!(rank(&vs, p), 2);
        for e in ker {
            for d in 0..3 {
                let s: u64 = e.iter().zip(&vs).map(|(&c, v)| c * v[d]).sum();
                assert_eq!(s % p, 0);
            }
        }
    }

    #[test]
    fn solve_small_system() {
        let a = vec![vec![0, 1], vec![2, 0]];
        assert_eq!(solve(&a, &[1, 1], 3), Some(vec![2, 1]));
        assert_eq!(solve(&[vec![1, 1], vec![1, 1]], &[0, 1], 3), None);
    }
}
