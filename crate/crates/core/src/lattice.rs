//! Small integer row lattices: Hermite normal form of a lattice containing
//! `diag(e) Z^k`, and diagonalisation with the column transform needed to
//! write down quotient maps.

/// Canonical upper-triangular HNF of the row lattice spanned by `rows`
/// together with the relation rows `moduli[i] * unit_i`.
///
/// The result is `k x k`, with positive pivots `h_i | moduli[i]` and entries
/// above each pivot reduced into `[0, h_i)`.
pub(crate) fn hnf_with_moduli<I>(rows: I, moduli: &[u64]) -> Vec<Vec<i64>>
where
    I: IntoIterator<Item = Vec<i128>>,
{
    let k = moduli.len();
    let m: Vec<i128> = moduli.iter().map(|&e| e as i128).collect();
    let reduce = |row: &mut [i128], from: usize| {
        for c in from..k {
            row[c] = row[c].rem_euclid(m[c]);
        }
    };

    let mut pending: Vec<Vec<i128>> = rows
        .into_iter()
        .map(|mut r| {
            debug_assert_eq!(r.len(), k);
            reduce(&mut r, 0);
            r
        })
        .filter(|r| r.iter().any(|&x| x != 0))
        .collect();
    let mut pivots: Vec<Vec<i128>> = Vec::with_capacity(k);

    for col in 0..k {
        // Relation rows for later columns are only introduced when their column
        // is reached, so reducing entries beyond `col` modulo them is harmless.
        let mut pivot = vec![0i128; k];
        pivot[col] = m[col];
        let mut rest = Vec::with_capacity(pending.len());
        for mut row in pending.drain(..) {
            while row[col] != 0 {
                let q = pivot[col].div_euclid(row[col]);
                for c in col..k {
                    pivot[c] -= q * row[c];
                }
                std::mem::swap(&mut pivot, &mut row);
                reduce(&mut row, col + 1);
            }
            reduce(&mut pivot, col + 1);
            if row.iter().any(|&x| x != 0) {
                rest.push(row);
            }
        }
        if pivot[col] < 0 {
            pivot.iter_mut().for_each(|x| *x = -*x);
            reduce(&mut pivot, col + 1);
        }
        pivots.push(pivot);
        pending = rest;
    }
    debug_assert!(pending.is_empty());

    for col in 0..k {
        let h = pivots[col][col];
        for r in 0..col {
            let q = pivots[r][col].div_euclid(h);
            if q != 0 {
                let (upper, lower) = pivots.split_at_mut(col);
                for c in col..k {
                    upper[r][c] -= q * lower[0][c];
                }
            }
        }
    }
    pivots
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as i64).collect())
        .collect()
}

/// Whether the integer vector `v` lies in the row span of the HNF `basis`.
pub(crate) fn hnf_contains(basis: &[Vec<i64>], v: &[i128]) -> bool {
    let mut v = v.to_vec();
    for (i, row) in basis.iter().enumerate() {
        let h = row[i] as i128;
        if v[i].rem_euclid(h) != 0 {
            return false;
        }
        let q = v[i] / h;
        if q != 0 {
            for c in i..v.len() {
                v[c] -= q * row[c] as i128;
            }
        }
    }
    v.iter().all(|&x| x == 0)
}

/// Diagonal form `U * L * V = diag(d)` of a full-rank square lattice basis.
pub(crate) struct Diagonal {
    pub d: Vec<i128>,
    /// Column transform `V`.
    pub v: Vec<Vec<i128>>,
    /// `V^{-1}`; row `i` is the preimage of the `i`-th unit vector.
    pub v_inv: Vec<Vec<i128>>,
}

pub(crate) fn diagonalize(basis: &[Vec<i64>]) -> Diagonal {
    let k = basis.len();
    let mut a: Vec<Vec<i128>> = basis
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let identity = |k: usize| -> Vec<Vec<i128>> {
        (0..k)
            .map(|i| (0..k).map(|j| i128::from(i == j)).collect())
            .collect()
    };
    let mut v = identity(k);
    let mut v_inv = identity(k);

    // column ops on `a` are mirrored on `v` (right) and `v_inv` (left, inverse)
    let col_addmul = |a: &mut Vec<Vec<i128>>,
                      v: &mut Vec<Vec<i128>>,
                      v_inv: &mut Vec<Vec<i128>>,
                      src: usize,
                      dst: usize,
                      q: i128| {
        for row in a.iter_mut().chain(v.iter_mut()) {
            row[dst] += q * row[src];
        }
        let (s, d) = (v_inv[dst].clone(), &mut v_inv[src]);
        for (x, y) in d.iter_mut().zip(s) {
            *x -= q * y;
        }
    };
    let col_swap = |a: &mut Vec<Vec<i128>>,
                    v: &mut Vec<Vec<i128>>,
                    v_inv: &mut Vec<Vec<i128>>,
                    i: usize,
                    j: usize| {
        for row in a.iter_mut().chain(v.iter_mut()) {
            row.swap(i, j);
        }
        v_inv.swap(i, j);
    };

    for t in 0..k {
        while let Some((pi, pj)) = (t..k)
            .flat_map(|i| (t..k).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs())
        {
            a.swap(t, pi);
            col_swap(&mut a, &mut v, &mut v_inv, t, pj);
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..k {
                let q = a[i][t] / p;
                if q != 0 {
                    let (top, bottom) = a.split_at_mut(i);
                    for c in t..k {
                        bottom[0][c] -= q * top[t][c];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..k {
                let q = a[t][j] / p;
                if q != 0 {
                    col_addmul(&mut a, &mut v, &mut v_inv, t, j, -q);
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                break;
            }
        }
    }
    let d = (0..k).map(|i| a[i][i].abs()).collect();
    Diagonal { d, v, v_inv }
}
