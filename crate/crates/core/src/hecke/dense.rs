//! Dense T-basis arithmetic: elements of `H(n,q)` as vectors indexed by the
//! lexicographic rank of permutations, with per-`n` multiplication tables.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::coefficients::LaurentScalar;
use crate::combinatorics::{all_permutations, Permutation};

pub(crate) type Dense = Vec<LaurentScalar>;

pub(crate) struct Tables {
    pub n: usize,
    pub perms: Vec<Permutation>,
    pub len: Vec<u16>,
    pub inv: Vec<u32>,
    /// `right[w * (n-1) + g - 1]` is the rank of `w·s_g`.
    right: Vec<u32>,
    /// `left[w * (n-1) + g - 1]` is the rank of `s_g·w`.
    left: Vec<u32>,
    /// Canonical reduced words form a prefix tree; `children[v]` lists `(v·s_g, g)`.
    children: Vec<Vec<(u32, u8)>>,
    parent: Vec<u32>,
}

/// Rank of a word in the lexicographic order of `S_n`.
pub(crate) fn rank(word: &[u8]) -> usize {
    let n = word.len();
    let mut r = 0usize;
    for i in 0..n {
        let smaller = word[i + 1..].iter().filter(|&&v| v < word[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

impl Tables {
    fn build(n: usize) -> Self {
        let perms = all_permutations(n);
        let size = perms.len();
        let k = n.saturating_sub(1);
        let mut len = Vec::with_capacity(size);
        let mut inv = Vec::with_capacity(size);
        let mut right = vec![0u32; size * k];
        let mut left = vec![0u32; size * k];
        let mut children = vec![Vec::new(); size];
        let mut parent = vec![u32::MAX; size];
        for (w, p) in perms.iter().enumerate() {
            len.push(p.length() as u16);
            inv.push(rank(p.inverse().bytes()) as u32);
            for g in 1..n {
                right[w * k + g - 1] = rank(p.mul_generator_right(g).bytes()) as u32;
                left[w * k + g - 1] = rank(p.mul_generator_left(g).bytes()) as u32;
            }
            if let Some(&g) = p.reduced_word().last() {
                let par = rank(p.mul_generator_right(g).bytes());
                parent[w] = par as u32;
                children[par].push((w as u32, g as u8));
            }
        }
        Self { n, perms, len, inv, right, left, children, parent }
    }

    pub fn size(&self) -> usize {
        self.perms.len()
    }

    pub fn rank_of(&self, p: &Permutation) -> usize {
        debug_assert_eq!(p.n(), self.n);
        rank(p.bytes())
    }

    #[inline]
    pub fn right(&self, w: usize, g: usize) -> usize {
        self.right[w * (self.n - 1) + g - 1] as usize
    }

    #[inline]
    pub fn left(&self, w: usize, g: usize) -> usize {
        self.left[w * (self.n - 1) + g - 1] as usize
    }

    pub fn zero(&self) -> Dense {
        vec![LaurentScalar::zero(); self.size()]
    }

    pub fn identity(&self) -> Dense {
        let mut v = self.zero();
        v[0] = LaurentScalar::one();
        v
    }

    /// `x · T_{s_g}`.
    pub fn right_gen(&self, x: &[LaurentScalar], g: usize) -> Dense {
        let mut out = self.zero();
        for (w, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ws = self.right(w, g);
            if self.len[ws] > self.len[w] {
                out[ws].add_shifted(c, 0);
            } else {
                out[w].add_shifted(c, 1);
                out[w].sub_shifted(c, 0);
                out[ws].add_shifted(c, 1);
            }
        }
        out
    }

    /// `T_{s_g} · x`.
    pub fn left_gen(&self, g: usize, x: &[LaurentScalar]) -> Dense {
        let mut out = self.zero();
        for (w, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sw = self.left(w, g);
            if self.len[sw] > self.len[w] {
                out[sw].add_shifted(c, 0);
            } else {
                out[w].add_shifted(c, 1);
                out[w].sub_shifted(c, 0);
                out[sw].add_shifted(c, 1);
            }
        }
        out
    }

    /// `x · T_p`.
    pub fn right_perm(&self, x: &[LaurentScalar], p: &Permutation) -> Dense {
        let mut cur = x.to_vec();
        for g in p.reduced_word() {
            cur = self.right_gen(&cur, g);
        }
        cur
    }

    /// `x · y = Σ_v y_v (x·T_v)`, walking the tree of canonical reduced words and
    /// skipping subtrees that carry no support of `y`.
    pub fn mul(&self, x: &[LaurentScalar], y: &[LaurentScalar]) -> Dense {
        let mut live = vec![false; self.size()];
        for (v, c) in y.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut u = v;
            while !live[u] {
                live[u] = true;
                if u == 0 {
                    break;
                }
                u = self.parent[u] as usize;
            }
        }
        let mut out = self.zero();
        if !live[0] {
            return out;
        }
        // Explicit stack of (node, x·T_node); depth is at most the maximal length.
        let mut stack: Vec<(usize, Dense)> = vec![(0, x.to_vec())];
        while let Some((v, xv)) = stack.pop() {
            if !y[v].is_zero() {
                for (w, c) in xv.iter().enumerate() {
                    if !c.is_zero() {
                        out[w].add_product(c, &y[v]);
                    }
                }
            }
            for &(child, g) in &self.children[v] {
                if live[child as usize] {
                    stack.push((child as usize, self.right_gen(&xv, g as usize)));
                }
            }
        }
        out
    }

    /// Coefficient of `T_w` in `x·y`, from the trace form:
    /// `(xy)_w = q^{-ℓ(w)} Σ_u x_u q^{ℓ(u)} (y·T_{w⁻¹})_{u⁻¹}`.
    pub fn product_coeff(&self, x: &[LaurentScalar], y: &[LaurentScalar], w: usize) -> LaurentScalar {
        let yw = self.right_perm(y, &self.perms[self.inv[w] as usize]);
        self.trace_pair(x, &yw, self.len[w] as i32)
    }

    /// `q^{-shift} Σ_u x_u q^{ℓ(u)} z_{u⁻¹}`.
    pub fn trace_pair(&self, x: &[LaurentScalar], z: &[LaurentScalar], shift: i32) -> LaurentScalar {
        let mut acc = LaurentScalar::zero();
        for (u, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = &z[self.inv[u] as usize];
            if d.is_zero() {
                continue;
            }
            acc.add_product(c, &d.shift(self.len[u] as i32 - shift));
        }
        acc
    }
}

/// Shared read-only tables for `S_n`, built once per `n`.
pub(crate) fn tables(n: usize) -> Arc<Tables> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Tables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(Tables::build(n));
    cache.lock().unwrap().entry(n).or_insert(t).clone()
}
