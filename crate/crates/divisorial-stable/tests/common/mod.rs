#![allow(dead_code)]

use magma_core::OrderedMagma;
use order_core::FinitePoset;

/// Ideals of Z/2^n as a chain: id `i` stands for `(2^{n-i})`.
pub fn z2n_ideals(n: usize) -> OrderedMagma {
    OrderedMagma::from_fn(FinitePoset::chain(n + 1), |i, j| n - n.min((n - i) + (n - j))).unwrap()
}

pub fn z4_ideals() -> OrderedMagma {
    z2n_ideals(2)
}

/// `2^M` for a magma table on `k` points, element ids are bit masks.
pub fn powerset_of(table: &[Vec<usize>], drop_empty: bool) -> OrderedMagma {
    let k = table.len();
    let full = FinitePoset::boolean(k);
    let mul = |a: usize, b: usize| {
        let mut out = 0;
        for i in 0..k {
            for j in 0..k {
                if a >> i & 1 == 1 && b >> j & 1 == 1 {
                    out |= 1 << table[i][j];
                }
            }
        }
        out
    };
    if !drop_empty {
        return OrderedMagma::from_fn(full, mul).unwrap();
    }
    let keep: Vec<usize> = (1..1usize << k).collect();
    let labels = keep.iter().map(|m| format!("m{m}")).collect();
    let p = FinitePoset::from_fn(labels, |x, y| keep[x] & !keep[y] == 0).unwrap();
    OrderedMagma::from_fn(p, |x, y| mul(keep[x], keep[y]) - 1).unwrap()
}

pub fn cyclic_group(k: usize) -> Vec<Vec<usize>> {
    (0..k).map(|i| (0..k).map(|j| (i + j) % k).collect()).collect()
}

/// `{-n..n} ∪ {∞}` under addition clamped to `[-n, n]`, with `∞` absorbing.
/// With `minus_inf`, a bottom annihilator is adjoined as well.
pub fn clamped_integers(n: i64, minus_inf: bool) -> OrderedMagma {
    let span = (2 * n + 1) as usize;
    let m = OrderedMagma::from_fn(FinitePoset::chain(span + 1), |x, y| {
        if x == span || y == span {
            return span;
        }
        let s = (x as i64 - n) + (y as i64 - n);
        (s.clamp(-n, n) + n) as usize
    })
    .unwrap();
    if minus_inf {
        m.adjoin_annihilator()
    } else {
        m
    }
}

/// Monotone operation on a chain from an arbitrary table, by running maxima.
pub fn chain_magma(n: usize, raw: &[usize]) -> OrderedMagma {
    let mut t = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut v = raw[i * n + j] % n;
            if i > 0 {
                v = v.max(t[i - 1][j]);
            }
            if j > 0 {
                v = v.max(t[i][j - 1]);
            }
            t[i][j] = v;
        }
    }
    OrderedMagma::new(FinitePoset::chain(n), t).unwrap()
}

/// `G[∞]` for `G = Z/k` ordered discretely; with `minus_inf`, also `-∞`.
pub fn group_with_infinity(k: usize, minus_inf: bool) -> OrderedMagma {
    let mut labels: Vec<String> = (0..k).map(|g| format!("g{g}")).collect();
    labels.push("inf".into());
    let p = FinitePoset::from_fn(labels, |x, y| x == y || y == k).unwrap();
    let m = OrderedMagma::from_fn(p, |x, y| if x == k || y == k { k } else { (x + y) % k }).unwrap();
    if minus_inf {
        m.adjoin_annihilator()
    } else {
        m
    }
}
