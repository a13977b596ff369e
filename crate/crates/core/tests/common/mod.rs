//! Oracles written independently of the library code they check.
#![allow(dead_code)]

use std::collections::BTreeMap;

use snc_core::snc::Triangulation;

/// Rank over Q by fraction-free elimination in i128.
pub fn rank_q(mut m: Vec<Vec<i128>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            for j in c + 1..cols {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    r
}

/// Nonzero diagonal of a Smith form, by repeated row and column reduction.
pub fn smith_diagonal(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs())
        else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = m[i][t] / m[t][t];
            if q != 0 {
                for j in t..cols {
                    m[i][j] -= q * m[t][j];
                }
            }
            clean &= m[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = m[t][j] / m[t][t];
            if q != 0 {
                for i in t..rows {
                    m[i][j] -= q * m[i][t];
                }
            }
            clean &= m[t][j] == 0;
        }
        if !clean {
            continue;
        }
        // divisibility: fold a row with a non-multiple into row t
        let d = m[t][t];
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % d != 0)) {
            for j in t..cols {
                m[t][j] += m[i][j];
            }
            continue;
        }
        diag.push(d.abs());
        t += 1;
    }
    diag
}

pub struct SimplicialData {
    pub betti: [usize; 3],
    pub h1_free: usize,
    pub h1_torsion: Vec<i128>,
}

pub fn simplicial(t: &Triangulation) -> SimplicialData {
    let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for tri in &t.triangles {
        for k in 0..3 {
            let (a, b) = (tri[k], tri[(k + 1) % 3]);
            let n = edges.len();
            edges.entry((a.min(b), a.max(b))).or_insert(n);
        }
    }
    let e = edges.len();
    let mut d1 = vec![vec![0i128; e]; t.vertices];
    for (&(a, b), &i) in &edges {
        d1[a][i] -= 1;
        d1[b][i] += 1;
    }
    let mut d2 = vec![vec![0i128; t.triangles.len()]; e];
    for (ti, tri) in t.triangles.iter().enumerate() {
        let [a, b, c] = *tri;
        for (x, y, s) in [(b, c, 1), (a, c, -1), (a, b, 1)] {
            let sign = if x < y { s } else { -s };
            d2[edges[&(x.min(y), x.max(y))]][ti] += sign;
        }
    }
    let r1 = rank_q(d1);
    let diag = smith_diagonal(d2);
    let r2 = diag.len();
    SimplicialData {
        betti: [t.vertices - r1, e - r1 - r2, t.triangles.len() - r2],
        h1_free: e - r1 - r2,
        h1_torsion: diag.into_iter().filter(|&d| d > 1).collect(),
    }
}
