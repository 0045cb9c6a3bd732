//! Compositions and partitions: the index combinatorics behind every basis.
//!
//! A composition of `n` is an ordered sequence of positive parts summing to
//! `n`. The reverse refinement order `J ⪯ I` (J coarser than I) is descent-set
//! inclusion, and the canonical enumeration of all `2^(n-1)` compositions of
//! `n` is the ascending descent-set bitmask, so `(n)` comes first and `(1^n)`
//! last.

use std::cmp::Ordering;
use std::fmt;

use num::BigInt;

use crate::error::{Error, Result};

/// Ordered sequence of positive integer parts. The empty sequence is the
/// degree-0 composition indexing the unit element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::ZeroPart);
        }
        Ok(Composition { parts })
    }

    /// Degree-0 composition.
    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn single(part: u32) -> Self {
        assert!(part > 0);
        Composition { parts: vec![part] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Partial sums `{i_1, i_1+i_2, ..., i_1+...+i_{n-1}}`, a subset of
    /// `{1..|I|-1}`.
    pub fn descent_set(&self) -> Result<Vec<u32>> {
        if self.is_empty() {
            return Err(Error::EmptyComposition);
        }
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in &self.parts[..self.len() - 1] {
            acc += p;
            out.push(acc);
        }
        Ok(out)
    }

    /// Descent set as a bitmask: bit `k-1` set iff `k` is a descent.
    /// Well-defined for weights up to 128.
    pub fn descent_mask(&self) -> u128 {
        let mut mask = 0u128;
        let mut acc = 0u32;
        if self.is_empty() {
            return 0;
        }
        for &p in &self.parts[..self.len() - 1] {
            acc += p;
            mask |= 1u128 << (acc - 1);
        }
        mask
    }

    /// Reconstructs the composition of `n` with the given descent set.
    pub fn from_descents(n: u32, descents: &[u32]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree(0));
        }
        let mut ds: Vec<u32> = descents.to_vec();
        ds.sort_unstable();
        ds.dedup();
        if ds.iter().any(|&d| d == 0 || d >= n) {
            return Err(Error::IndexOutOfRange(n as usize));
        }
        let mut parts = Vec::with_capacity(ds.len() + 1);
        let mut prev = 0;
        for &d in &ds {
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Ok(Composition { parts })
    }

    fn from_mask(n: u32, mask: u128) -> Self {
        let mut parts = Vec::new();
        let mut prev = 0u32;
        for k in 1..n {
            if mask & (1u128 << (k - 1)) != 0 {
                parts.push(k - prev);
                prev = k;
            }
        }
        parts.push(n - prev);
        Composition { parts }
    }

    pub fn reverse(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// Ribbon conjugate, computed as the complement of the reversed
    /// composition's descent set.
    pub fn conjugate(&self) -> Result<Self> {
        if self.is_empty() {
            return Err(Error::EmptyComposition);
        }
        let n = self.weight();
        let rev_mask = self.reverse().descent_mask();
        let full = if n <= 1 { 0 } else { (1u128 << (n - 1)) - 1 };
        Ok(Self::from_mask(n, full & !rev_mask))
    }

    /// `I · J`, plain concatenation.
    pub fn concat(&self, other: &Composition) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// `I ▷ J`, fusing the last part of `I` with the first part of `J`.
    pub fn near_concat(&self, other: &Composition) -> Result<Self> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyComposition);
        }
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        Ok(Composition { parts })
    }

    /// `J ⪯ I`: every part of `J` is a sum of consecutive parts of `I`.
    pub fn is_coarsening_of(&self, finer: &Composition) -> bool {
        if self.weight() != finer.weight() {
            return false;
        }
        let jm = self.descent_mask();
        let im = finer.descent_mask();
        jm & !im == 0
    }

    /// All `J ⪯ self`, in canonical order.
    pub fn coarsenings(&self) -> Vec<Composition> {
        if self.is_empty() {
            return vec![Composition::empty()];
        }
        let n = self.weight();
        let ds = self.descent_set().unwrap();
        let k = ds.len();
        let mut out = Vec::with_capacity(1 << k);
        for sub in 0u64..(1u64 << k) {
            let chosen: Vec<u32> = (0..k).filter(|&i| sub & (1 << i) != 0).map(|i| ds[i]).collect();
            out.push(Composition::from_descents(n, &chosen).unwrap());
        }
        out.sort();
        out
    }

    /// All `J ⪰ self` (refinements), in canonical order.
    pub fn refinements(&self) -> Vec<Composition> {
        if self.is_empty() {
            return vec![Composition::empty()];
        }
        let n = self.weight();
        let base = self.descent_mask();
        let free: Vec<u32> = (1..n).filter(|&k| base & (1u128 << (k - 1)) == 0).collect();
        let k = free.len();
        let mut out = Vec::with_capacity(1 << k);
        for sub in 0u64..(1u64 << k) {
            let mut mask = base;
            for (i, &d) in free.iter().enumerate() {
                if sub & (1 << i) != 0 {
                    mask |= 1u128 << (d - 1);
                }
            }
            out.push(Composition::from_mask(n, mask));
        }
        out.sort();
        out
    }

    /// For `self = J ⪯ I`: the indices `(p_1, ..., p_s)` into `I` marking the
    /// last part of `I` absorbed into each part of `J` (`p_0 = 0` implied,
    /// `p_s = ℓ(I)`).
    pub fn breakpoints(&self, finer: &Composition) -> Result<Vec<usize>> {
        if !self.is_coarsening_of(finer) {
            return Err(Error::NotRefinement {
                fine: finer.to_string(),
                coarse: self.to_string(),
            });
        }
        let mut out = Vec::with_capacity(self.len());
        let mut idx = 0usize;
        for &j in &self.parts {
            let mut acc = 0u32;
            while acc < j {
                acc += finer.parts[idx];
                idx += 1;
            }
            debug_assert_eq!(acc, j);
            out.push(idx);
        }
        Ok(out)
    }

    /// For `self = J ⪰ I`: the contiguous blocks `J_p` of `J` with
    /// `|J_p| = i_p`.
    pub fn split(&self, coarser: &Composition) -> Result<Vec<Composition>> {
        if !coarser.is_coarsening_of(self) {
            return Err(Error::NotRefinement {
                fine: self.to_string(),
                coarse: coarser.to_string(),
            });
        }
        let bp = coarser.breakpoints(self)?;
        let mut out = Vec::with_capacity(bp.len());
        let mut prev = 0usize;
        for &p in &bp {
            out.push(Composition { parts: self.parts[prev..p].to_vec() });
            prev = p;
        }
        Ok(out)
    }

    /// Product of the successive partial sums of the parts.
    pub fn pi_u(&self) -> BigInt {
        let mut acc = 0u64;
        let mut prod = BigInt::from(1);
        for &p in &self.parts {
            acc += p as u64;
            prod *= acc;
        }
        prod
    }

    /// `π_u(J, I) = ∏_p π_u(J_p)` over the blocks of `self = J ⪰ I`.
    pub fn pi_u_rel(&self, coarser: &Composition) -> Result<BigInt> {
        Ok(self.split(coarser)?.iter().map(|b| b.pi_u()).product())
    }

    /// Last part.
    pub fn lp(&self) -> Result<u32> {
        self.parts.last().copied().ok_or(Error::EmptyComposition)
    }

    /// `lp(J, I) = ∏_p lp(J_p)` over the blocks of `self = J ⪰ I`.
    pub fn lp_rel(&self, coarser: &Composition) -> Result<BigInt> {
        let mut prod = BigInt::from(1);
        for b in self.split(coarser)? {
            prod *= b.lp()?;
        }
        Ok(prod)
    }

    pub fn sort_to_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Dot-joined form used in CSV headers, e.g. `3.1.2`.
    pub fn dot_form(&self) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(".")
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.descent_mask().cmp(&other.descent_mask()))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All `2^(n-1)` compositions of `n` in canonical (ascending bitmask) order.
pub fn compositions_of(n: u32) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let count = 1u128 << (n - 1);
    let mut out = Vec::with_capacity(count as usize);
    for mask in 0..count {
        out.push(Composition::from_mask(n, mask));
    }
    Ok(out)
}

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part-multiplicity counts `m_i`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `u(μ) = ∏_i m_i(μ)!`.
    pub fn u(&self) -> BigInt {
        let mut prod = BigInt::from(1);
        for (_, c) in self.multiplicities() {
            for k in 2..=c {
                prod *= k;
            }
        }
        prod
    }

    pub fn as_composition(&self) -> Composition {
        Composition { parts: self.parts.clone() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.as_composition(), f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All distinct rearrangements of the parts of `μ`.
pub fn multiset_permutations(mu: &Partition) -> Vec<Composition> {
    fn rec(counts: &mut Vec<(u32, u32)>, current: &mut Vec<u32>, total: usize, out: &mut Vec<Composition>) {
        if current.len() == total {
            out.push(Composition { parts: current.clone() });
            return;
        }
        for i in 0..counts.len() {
            if counts[i].1 == 0 {
                continue;
            }
            counts[i].1 -= 1;
            current.push(counts[i].0);
            rec(counts, current, total, out);
            current.pop();
            counts[i].1 += 1;
        }
    }
    let mut counts = mu.multiplicities();
    let mut out = Vec::new();
    rec(&mut counts, &mut Vec::new(), mu.len(), &mut out);
    out
}

/// All partitions of `n`, largest-part-first recursion order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
