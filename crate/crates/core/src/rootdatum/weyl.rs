//! Weyl groups enumerated as permutations of the root list.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::RootDatum;
use crate::cartan::{CartanMatrix, Family};
use crate::error::{Error, Result};
use crate::exact_linalg::IntMat;

/// Default enumeration cap; E₆ and F₄ fit, E₇ and E₈ need an explicit raise.
pub const DEFAULT_WEYL_CAP: usize = 2_000_000;

/// |W| from the type of C.
pub fn weyl_order(c: &CartanMatrix) -> BigInt {
    let fact = |n: usize| (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k));
    c.classify()
        .iter()
        .map(|l| match (l.family, l.rank) {
            (Family::A, n) => fact(n + 1),
            (Family::B | Family::C, n) => fact(n) * (BigInt::one() << n),
            (Family::D, n) => fact(n) * (BigInt::one() << (n - 1)),
            (Family::E, 6) => BigInt::from(51_840),
            (Family::E, 7) => BigInt::from(2_903_040),
            (Family::E, _) => BigInt::from(696_729_600u64),
            (Family::F, _) => BigInt::from(1152),
            (Family::G, _) => BigInt::from(12),
        })
        .fold(BigInt::one(), |a, b| a * b)
}

/// Elements in breadth-first order (identity first, each level in
/// lexicographic order of the smallest reduced word).
#[derive(Clone, Debug)]
pub struct WeylGroup {
    r: usize,
    n: usize,
    nroots: usize,
    npos: usize,
    perms: Vec<u16>,
    lengths: Vec<u32>,
    parent: Vec<u32>,
    last: Vec<u8>,
    index: HashMap<Vec<u16>, u32>,
    simple: Vec<usize>,
    gens: Vec<Vec<u16>>,
    gen_mats: Vec<IntMat>,
    cap: usize,
}

impl WeylGroup {
    pub fn new(d: &RootDatum, cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::BadParams("cap must be at least 1".into()));
        }
        let order = weyl_order(d.cartan());
        if order > BigInt::from(cap) {
            return Err(Error::CapExceeded { cap });
        }
        let nroots = d.num_roots();
        if nroots >= u16::MAX as usize {
            return Err(Error::BadParams("too many roots for the permutation representation".into()));
        }
        let r = d.base_size();
        let simple = d.base_indices().to_vec();
        let gens: Vec<Vec<u16>> =
            (0..r).map(|s| d.gen_perm(s).iter().map(|&x| x as u16).collect()).collect();
        let total = order.to_usize().unwrap();
        let mut g = WeylGroup {
            r,
            n: d.rank(),
            nroots,
            npos: nroots / 2,
            perms: Vec::with_capacity(total * nroots),
            lengths: Vec::with_capacity(total),
            parent: Vec::with_capacity(total),
            last: Vec::with_capacity(total),
            index: HashMap::with_capacity(total),
            simple,
            gens,
            gen_mats: d.weyl_gens().to_vec(),
            cap,
        };
        let id: Vec<u16> = (0..nroots as u16).collect();
        g.push(&id, u32::MAX, u8::MAX, 0);
        let mut level_start = 0;
        let mut buf = vec![0u16; nroots];
        loop {
            let level_end = g.lengths.len();
            if level_start == level_end {
                break;
            }
            for w in level_start..level_end {
                for s in 0..r {
                    let wp = &g.perms[w * nroots..(w + 1) * nroots];
                    for (j, b) in buf.iter_mut().enumerate() {
                        *b = wp[g.gens[s][j] as usize];
                    }
                    if !g.index.contains_key(&g.key(&buf)) {
                        if g.lengths.len() == cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        let len = g.lengths[w] + 1;
                        let p = buf.clone();
                        g.push(&p, w as u32, s as u8, len);
                    }
                }
            }
            level_start = level_end;
        }
        if g.len() != total {
            return Err(Error::ConsistencyFailure(format!("enumerated {} elements, expected {total}", g.len())));
        }
        // length equals the number of positive roots made negative
        let stride = (g.len() / 512).max(1);
        for i in (0..g.len()).step_by(stride) {
            if g.inversions(i) != g.lengths[i] as usize {
                return Err(Error::ConsistencyFailure(format!("length mismatch at element {i}")));
            }
        }
        Ok(g)
    }

    fn key(&self, perm: &[u16]) -> Vec<u16> {
        self.simple.iter().map(|&i| perm[i]).collect()
    }

    fn push(&mut self, perm: &[u16], parent: u32, last: u8, len: u32) {
        let k = self.key(perm);
        self.index.insert(k, self.lengths.len() as u32);
        self.perms.extend_from_slice(perm);
        self.lengths.push(len);
        self.parent.push(parent);
        self.last.push(last);
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn length(&self, i: usize) -> u32 {
        self.lengths[i]
    }

    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    /// Number of elements of each length 0, 1, ….
    pub fn length_profile(&self) -> Vec<usize> {
        let max = self.lengths.iter().copied().max().unwrap_or(0) as usize;
        let mut prof = vec![0; max + 1];
        for &l in &self.lengths {
            prof[l as usize] += 1;
        }
        prof
    }

    /// Image of root j under element i.
    pub fn perm(&self, i: usize) -> &[u16] {
        &self.perms[i * self.nroots..(i + 1) * self.nroots]
    }

    pub fn index_of_perm(&self, perm: &[u16]) -> Option<usize> {
        self.index.get(&self.key(perm)).map(|&x| x as usize)
    }

    /// Element with the given images of the simple roots.
    pub fn index_of_key(&self, key: &[u16]) -> Option<usize> {
        self.index.get(key).map(|&x| x as usize)
    }

    /// Positions of the simple roots in the root list.
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    /// The smallest reduced word, as generator indices.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.lengths[i] as usize);
        let mut cur = i;
        while self.parent[cur] != u32::MAX {
            w.push(self.last[cur] as usize);
            cur = self.parent[cur] as usize;
        }
        w.reverse();
        w
    }

    /// Element s_{w[0]}·s_{w[1]}·⋯.
    pub fn element_of_word(&self, word: &[usize]) -> Result<usize> {
        let mut cur = 0;
        for &s in word {
            if s >= self.r {
                return Err(Error::BadParams(format!("generator {} out of range", s + 1)));
            }
            cur = self.mul_gen(cur, s);
        }
        Ok(cur)
    }

    /// w·s
    pub fn mul_gen(&self, i: usize, s: usize) -> usize {
        let wp = self.perm(i);
        let p: Vec<u16> = self.gens[s].iter().map(|&j| wp[j as usize]).collect();
        self.index_of_perm(&p).expect("closed under generators")
    }

    /// s·w
    pub fn gen_mul(&self, s: usize, i: usize) -> usize {
        let p: Vec<u16> = self.perm(i).iter().map(|&j| self.gens[s][j as usize]).collect();
        self.index_of_perm(&p).expect("closed under generators")
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let (a, b) = (self.perm(i), self.perm(j));
        let p: Vec<u16> = b.iter().map(|&k| a[k as usize]).collect();
        self.index_of_perm(&p).expect("closed under multiplication")
    }

    pub fn inverse(&self, i: usize) -> usize {
        let a = self.perm(i);
        let mut p = vec![0u16; self.nroots];
        for (k, &v) in a.iter().enumerate() {
            p[v as usize] = k as u16;
        }
        self.index_of_perm(&p).unwrap()
    }

    pub fn inversions(&self, i: usize) -> usize {
        self.perm(i)[..self.npos].iter().filter(|&&v| v as usize >= self.npos).count()
    }

    /// Matrix of element i acting on X.
    pub fn matrix(&self, i: usize) -> IntMat {
        self.word(i).into_iter().fold(IntMat::identity(self.n), |acc, s| &acc * &self.gen_mats[s])
    }

    /// Concatenated generator indices as a string, 1-based: "121".
    pub fn word_string(&self, i: usize) -> String {
        format_word(&self.word(i))
    }
}

/// "121" → [0, 1, 0]; separators allowed for ranks above 9: "1,10,2".
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" || s == "1d" {
        return Ok(vec![]);
    }
    let toks: Vec<&str> = if s.contains(',') || s.contains(' ') {
        s.split([',', ' ']).filter(|t| !t.is_empty()).collect()
    } else {
        s.split("").filter(|t| !t.is_empty()).collect()
    };
    toks.iter()
        .map(|t| match t.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => Err(Error::Parse(format!("bad generator {t:?} in word {s:?}"))),
        })
        .collect()
}

pub fn format_word(w: &[usize]) -> String {
    if w.is_empty() {
        return "e".into();
    }
    if w.iter().all(|&s| s < 9) {
        w.iter().map(|s| (s + 1).to_string()).collect()
    } else {
        w.iter().map(|s| (s + 1).to_string()).collect::<Vec<_>>().join(",")
    }
}
