//! Brute-force reference implementations used to cross-check the solvers.
//! They work on plain adjacency matrices and share no code with the crate.

#![allow(dead_code)]

use chibound::Graph;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Graph) -> Matrix {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| u != v && g.has_edge(u, v)).collect())
        .collect()
}

pub fn clique_number(a: &Matrix) -> usize {
    let n = a.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let clique = vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| a[u][v]));
        if clique {
            best = best.max(vs.len());
        }
    }
    best
}

/// Smallest `k` admitting a proper coloring, by enumerating all `k^n` maps.
pub fn chromatic_number(a: &Matrix) -> usize {
    let n = a.len();
    if n == 0 {
        return 0;
    }
    (1..=n).find(|&k| has_coloring(a, k)).expect("n colors always suffice")
}

fn has_coloring(a: &Matrix, k: usize) -> bool {
    let n = a.len();
    let total = (k as u64).pow(n as u32);
    (0..total).any(|mut code| {
        let mut c = vec![0; n];
        for slot in c.iter_mut() {
            *slot = (code % k as u64) as usize;
            code /= k as u64;
        }
        (0..n).all(|u| (u + 1..n).all(|v| !a[u][v] || c[u] != c[v]))
    })
}

/// Whether `pattern` occurs induced in `host`: every injective map of the
/// pattern vertices is tried.
pub fn has_induced(host: &Matrix, pattern: &Matrix) -> bool {
    let k = pattern.len();
    let mut map = Vec::with_capacity(k);
    let mut used = vec![false; host.len()];
    extend(host, pattern, &mut map, &mut used)
}

fn extend(host: &Matrix, pattern: &Matrix, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = map.len();
    if i == pattern.len() {
        return (0..i).all(|a| (a + 1..i).all(|b| pattern[a][b] == host[map[a]][map[b]]));
    }
    for h in 0..host.len() {
        if used[h] {
            continue;
        }
        used[h] = true;
        map.push(h);
        if extend(host, pattern, map, used) {
            return true;
        }
        map.pop();
        used[h] = false;
    }
    false
}

/// graph6 decoder written from the format description (orders below 63
/// and the four-byte form up to 258047).
#[allow(clippy::needless_range_loop)]
pub fn decode_graph6(s: &str) -> Matrix {
    let bytes: Vec<u8> = s.trim_end().bytes().map(|b| b - 63).collect();
    let (n, body) = if bytes[0] == 63 {
        let n = ((bytes[1] as usize) << 12) | ((bytes[2] as usize) << 6) | bytes[3] as usize;
        (n, &bytes[4..])
    } else {
        (bytes[0] as usize, &bytes[1..])
    };
    let bits: Vec<bool> = body
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |i| b >> i & 1 == 1))
        .collect();
    let mut a = vec![vec![false; n]; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            a[i][j] = bits[k];
            a[j][i] = bits[k];
            k += 1;
        }
    }
    a
}
