use alloc::vec;
use alloc::vec::Vec;

pub type IntMatrix = Vec<Vec<i64>>;

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next. `v_inv` is the inverse of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<i64> {
        let k = self.d.len().min(self.d.first().map_or(0, Vec::len));
        (0..k).map(|i| self.d[i][i]).collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    let mut c = vec![vec![0i64; m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l] == 0 {
                continue;
            }
            for j in 0..m {
                c[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    c
}

pub fn vec_mat(x: &[i64], b: &IntMatrix) -> Vec<i64> {
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![0i64; m];
    for (l, &xl) in x.iter().enumerate() {
        if xl != 0 {
            for j in 0..m {
                out[j] += xl * b[l][j];
            }
        }
    }
    out
}

/// Smith normal form by alternating row and column elimination.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let r = m.len();
    let c = m.first().map_or(0, Vec::len);
    let mut a = m.clone();
    let mut u = identity(r);
    let mut v = identity(c);
    let mut vi = identity(c);
    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap(t, pi);
            u.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                for row in v.iter_mut() {
                    row.swap(t, pj);
                }
                vi.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..r {
                let q = a[i][t] / a[t][t];
                if q != 0 {
                    for j in 0..c {
                        a[i][j] -= q * a[t][j];
                    }
                    for j in 0..r {
                        u[i][j] -= q * u[t][j];
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..c {
                let q = a[t][j] / a[t][t];
                if q != 0 {
                    for i in 0..r {
                        a[i][j] -= q * a[i][t];
                    }
                    for i in 0..c {
                        v[i][j] -= q * v[i][t];
                    }
                    for k in 0..c {
                        vi[t][k] += q * vi[j][k];
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let p = a[t][t];
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in 0..c {
                        a[t][j] += a[i][j];
                    }
                    for j in 0..r {
                        u[t][j] += u[i][j];
                    }
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for j in 0..c {
                a[t][j] = -a[t][j];
            }
            for j in 0..r {
                u[t][j] = -u[t][j];
            }
        }
    }
    Snf {
        u,
        d: a,
        v,
        v_inv: vi,
    }
}

/// Determinant by fraction-free elimination (Bareiss).
pub fn determinant(m: &IntMatrix) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(s) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> Snf {
        let s = smith_normal_form(m);
        assert_eq!(mat_mul(&mat_mul(&s.u, m), &s.v), s.d);
        assert_eq!(determinant(&s.u).abs(), 1);
        assert_eq!(determinant(&s.v).abs(), 1);
        assert_eq!(mat_mul(&s.v, &s.v_inv), identity(s.v.len()));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if w[1] != 0 {
                assert_eq!(w[1] % w[0], 0);
            }
        }
        s
    }

    #[test]
    fn small_cases() {
        assert_eq!(check(&identity(3)).diagonal(), vec![1, 1, 1]);
        assert_eq!(check(&vec![vec![2, 0], vec![0, 3]]).diagonal(), vec![1, 6]);
        assert_eq!(check(&vec![vec![2, 0], vec![0, 2]]).diagonal(), vec![2, 2]);
        assert_eq!(
            check(&vec![
                vec![4, 0, 0],
                vec![0, 2, 0],
                vec![0, 0, 4],
                vec![1, 1, 1]
            ])
            .diagonal(),
            vec![1, 2, 4]
        );
    }

    #[test]
    fn cartan_matrix_determinants() {
        // E6 has determinant 3.
        let e6 = vec![
            vec![2, 0, -1, 0, 0, 0],
            vec![0, 2, 0, -1, 0, 0],
            vec![-1, 0, 2, -1, 0, 0],
            vec![0, -1, -1, 2, -1, 0],
            vec![0, 0, 0, -1, 2, -1],
            vec![0, 0, 0, 0, -1, 2],
        ];
        assert_eq!(determinant(&e6), 3);
        assert_eq!(check(&e6).diagonal(), vec![1, 1, 1, 1, 1, 3]);
    }
}
