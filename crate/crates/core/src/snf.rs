//! Diagonalization of square integer matrices by unimodular row and column
//! operations. Only the column transform and its inverse are tracked, which is
//! all that is needed to present `Z^k / rowspace(M)` as a sum of cyclic groups.

/// `U * M * V = diag(diag)` for some unimodular `U`; `v_inv` is the inverse of `v`.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub diag: Vec<i128>,
    pub v: Vec<Vec<i128>>,
    pub v_inv: Vec<Vec<i128>>,
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

/// Diagonal entries come out non-negative and sorted ascending. The matrix must
/// be square; a diagonal input that is already sorted is returned unchanged
/// with `v = identity`.
pub fn diagonalize(mut a: Vec<Vec<i128>>) -> Diagonalization {
    let n = a.len();
    let mut v = identity(n);
    let mut v_inv = identity(n);

    for t in 0..n {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if a[i][j] != 0 {
                        let better = match pivot {
                            None => true,
                            Some((pi, pj)) => a[i][j].abs() < a[pi][pj].abs(),
                        };
                        if better {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            if pi != t {
                a.swap(pi, t);
            }
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(pj, t);
                }
                for row in v.iter_mut() {
                    row.swap(pj, t);
                }
                v_inv.swap(pj, t);
            }

            let mut clean = true;
            let p = a[t][t];
            for i in t + 1..n {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..n {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    for row in v.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    let src = v_inv[j].clone();
                    for (d, s) in v_inv[t].iter_mut().zip(&src) {
                        *d += q * s;
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[t][t] < 0 {
            for row in a.iter_mut() {
                row[t] = -row[t];
            }
            for row in v.iter_mut() {
                row[t] = -row[t];
            }
            for x in v_inv[t].iter_mut() {
                *x = -*x;
            }
        }
    }

    let diag: Vec<i128> = (0..n).map(|i| a[i][i]).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&i| diag[i]);
    let diag = perm.iter().map(|&i| diag[i]).collect();
    let v = v
        .iter()
        .map(|row| perm.iter().map(|&i| row[i]).collect())
        .collect();
    let v_inv = perm.iter().map(|&i| v_inv[i].clone()).collect();
    Diagonalization { diag, v, v_inv }
}
