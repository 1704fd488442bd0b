//! Size bounds for the extraction pipeline.
//!
//! Multicolour Ramsey numbers are replaced by the multinomial upper bound
//! `R(k1, .., kr) <= multinomial(sum(ki - 1); k1 - 1, .., kr - 1) + 1`.
//! The resulting quantities outgrow any exact representation almost
//! immediately, so each one is a [`Magnitude`]: an exact integer while it
//! stays below [`EXACT_BITS`] bits, an exact power of two `2^e` when the
//! exponent is exact, and otherwise an iterated-logarithm estimate.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

/// Largest exact value kept, in bits.
pub const EXACT_BITS: u64 = 1 << 20;
/// Largest number of factors multiplied when evaluating a multinomial exactly.
pub const EXACT_TERMS: u64 = 50_000;

/// Tops of normalized towers stay at or below this value.
const TOP_LIMIT: f64 = 1.152_921_504_606_847e18; // 2^60
const TOP_LIMIT_LOG2: f64 = 60.0;

/// A non-negative quantity that may be far too large to store exactly.
#[derive(Debug, Clone, PartialEq)]
pub enum Magnitude {
    Exact(BigUint),
    /// Exactly `2^e`.
    PowerOfTwo(BigUint),
    /// Estimate: applying `log2` `depth` times gives `top`.
    Tower { depth: u32, top: f64 },
}

/// `exp2^depth(top)` with `top <= 2^60` and `depth` minimal.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Tower {
    depth: u32,
    top: f64,
}

impl Tower {
    fn new(depth: u32, top: f64) -> Tower {
        let mut t = Tower { depth, top };
        while t.top > TOP_LIMIT {
            t.top = t.top.log2();
            t.depth += 1;
        }
        while t.depth > 0 && t.top <= TOP_LIMIT_LOG2 {
            t.top = t.top.exp2();
            t.depth -= 1;
        }
        t
    }

    fn log2(self) -> Tower {
        if self.depth == 0 {
            Tower::new(0, self.top.max(1.0).log2())
        } else {
            Tower::new(self.depth - 1, self.top)
        }
    }

    fn exp2(self) -> Tower {
        Tower::new(self.depth + 1, self.top)
    }

    /// Multiplication by a factor `c >= 1`.
    fn scale(self, c: f64) -> Tower {
        match self.depth {
            0 => Tower::new(0, self.top * c),
            1 => Tower::new(1, self.top + c.log2()),
            // log2 log2 (c x) = log2 (log2 c + log2 x), unchanged at f64 precision
            _ => self,
        }
    }

    fn cmp(&self, other: &Tower) -> Ordering {
        self.depth
            .cmp(&other.depth)
            .then(self.top.partial_cmp(&other.top).unwrap_or(Ordering::Equal))
    }
}

fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().expect("fits").max(1) as f64).log2();
    }
    let lead = (x >> (bits - 64)).to_u64().expect("64 bits");
    (bits - 64) as f64 + (lead as f64).log2()
}

fn tower_of_big(x: &BigUint) -> Tower {
    if x.bits() <= 60 {
        Tower::new(0, x.to_u64().expect("fits") as f64)
    } else {
        Tower::new(1, log2_big(x))
    }
}

impl Magnitude {
    pub fn exact(v: u64) -> Magnitude {
        Magnitude::Exact(BigUint::from(v))
    }

    pub fn as_exact(&self) -> Option<&BigUint> {
        match self {
            Magnitude::Exact(v) => Some(v),
            _ => None,
        }
    }

    /// The value as `u64`, if it is exact and fits.
    pub fn to_u64(&self) -> Option<u64> {
        self.as_exact().and_then(ToPrimitive::to_u64)
    }

    /// The value as `usize`, saturating for anything larger.
    pub fn saturating_usize(&self) -> usize {
        self.to_u64().and_then(|v| usize::try_from(v).ok()).unwrap_or(usize::MAX)
    }

    fn tower(&self) -> Tower {
        match self {
            Magnitude::Exact(v) => tower_of_big(v),
            Magnitude::PowerOfTwo(e) => tower_of_big(e).exp2(),
            Magnitude::Tower { depth, top } => Tower::new(*depth, *top),
        }
    }

    fn from_tower(t: Tower) -> Magnitude {
        match t.depth {
            0 if t.top < 9.0e15 => Magnitude::exact(t.top.round() as u64),
            _ => Magnitude::Tower {
                depth: t.depth,
                top: t.top,
            },
        }
    }

    /// `self - 1`, saturating at zero; estimates are unchanged.
    fn pred(&self) -> Magnitude {
        match self {
            Magnitude::Exact(v) if v.is_zero() => Magnitude::Exact(BigUint::zero()),
            Magnitude::Exact(v) => Magnitude::Exact(v - 1u32),
            Magnitude::PowerOfTwo(e) if e.bits() <= 20 => Magnitude::Exact((BigUint::one() << e.to_u64().unwrap()) - 1u32),
            other => other.clone(),
        }
    }

    pub fn add_small(&self, k: u64) -> Magnitude {
        match self {
            Magnitude::Exact(v) => Magnitude::Exact(v + k),
            Magnitude::PowerOfTwo(e) if e.bits() <= 20 => Magnitude::Exact((BigUint::one() << e.to_u64().unwrap()) + k),
            other => other.clone(),
        }
    }

    pub fn mul_small(&self, k: u64) -> Magnitude {
        match self {
            Magnitude::Exact(v) => Magnitude::Exact(v * k),
            other => Magnitude::from_tower(other.tower().scale(k.max(1) as f64)),
        }
    }

    /// `2^self`.
    pub fn pow2(&self) -> Magnitude {
        match self {
            Magnitude::Exact(e) if e.bits() <= 20 => Magnitude::Exact(BigUint::one() << e.to_u64().unwrap()),
            Magnitude::Exact(e) => Magnitude::PowerOfTwo(e.clone()),
            other => Magnitude::from_tower(other.tower().exp2()),
        }
    }

    pub fn is_estimate(&self) -> bool {
        matches!(self, Magnitude::Tower { .. })
    }
}

impl PartialOrd for Magnitude {
    fn partial_cmp(&self, other: &Magnitude) -> Option<Ordering> {
        use Magnitude::*;
        Some(match (self, other) {
            (Exact(a), Exact(b)) => a.cmp(b),
            (PowerOfTwo(a), PowerOfTwo(b)) => a.cmp(b),
            // x < 2^e iff bits(x) <= e
            (Exact(a), PowerOfTwo(e)) => {
                if BigUint::from(a.bits()) <= *e {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (PowerOfTwo(_), Exact(_)) => other.partial_cmp(self)?.reverse(),
            _ => self.tower().cmp(&other.tower()),
        })
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Magnitude::Exact(v) => write!(f, "{v}"),
            Magnitude::PowerOfTwo(e) => write!(f, "2^{e}"),
            Magnitude::Tower { depth, top } => {
                f.write_str("~")?;
                for _ in 0..*depth {
                    f.write_str("2^(")?;
                }
                write!(f, "{top:.3}")?;
                for _ in 0..*depth {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl Serialize for Magnitude {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `log2(k!)`.
fn log2_factorial(k: f64) -> f64 {
    if k < 32.0 {
        return (2..=k as u64).map(|i| (i as f64).log2()).sum();
    }
    let ln = k * k.ln() - k + 0.5 * (2.0 * std::f64::consts::PI * k).ln() + 1.0 / (12.0 * k) - 1.0 / (360.0 * k * k * k);
    ln / std::f64::consts::LN_2
}

/// `(base + lo) * (base + lo + 1) * .. * (base + hi)`.
fn shifted_product(base: &BigUint, lo: u64, hi: u64) -> BigUint {
    if lo > hi {
        return BigUint::one();
    }
    if hi - lo < 16 {
        return (lo..=hi).fold(BigUint::one(), |acc, i| acc * (base + i));
    }
    let mid = lo + (hi - lo) / 2;
    shifted_product(base, lo, mid) * shifted_product(base, mid + 1, hi)
}

fn factorial(k: u64) -> BigUint {
    shifted_product(&BigUint::zero(), 1, k)
}

/// Exact `multinomial(sum; parts)` when it is cheap enough: the largest
/// part may be any size, the others must sum to at most [`EXACT_TERMS`].
fn exact_multinomial(parts: &[BigUint]) -> Option<BigUint> {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let (big, rest) = sorted.split_first()?;
    let rest: Vec<u64> = rest.iter().map(ToPrimitive::to_u64).collect::<Option<_>>()?;
    let s = rest.iter().try_fold(0u64, |acc, &k| acc.checked_add(k))?;
    if s > EXACT_TERMS {
        return None;
    }
    // the result is below (big + s)^s
    let bits_bound = s as f64 * (log2_big(big).max(log2_big(&BigUint::from(s))) + 1.0);
    if bits_bound > EXACT_BITS as f64 {
        return None;
    }
    let numer = shifted_product(big, 1, s);
    let denom = rest.iter().fold(BigUint::one(), |acc, &k| acc * factorial(k));
    Some(numer / denom)
}

/// Multinomial upper bound on the Ramsey number `R(k1, .., kr)`.
pub fn ramsey_upper(parts: &[Magnitude]) -> Magnitude {
    if parts.is_empty() {
        return Magnitude::exact(1);
    }
    let reduced: Vec<Magnitude> = parts.iter().map(Magnitude::pred).collect();
    let exact: Option<Vec<BigUint>> = reduced.iter().map(|m| m.as_exact().cloned()).collect();
    if let Some(v) = exact.as_deref().and_then(exact_multinomial) {
        return Magnitude::Exact(v + 1u32);
    }
    let small: Option<Vec<u64>> = reduced.iter().map(Magnitude::to_u64).collect();
    if let Some(ks) = &small {
        if ks.iter().all(|&k| k < (1 << 50)) {
            let s: f64 = ks.iter().map(|&k| k as f64).sum();
            let log2 = log2_factorial(s) - ks.iter().map(|&k| log2_factorial(k as f64)).sum::<f64>();
            return Magnitude::from_tower(Tower::new(1, log2.max(0.0)));
        }
    }
    // At least one part is astronomically large.
    let towers: Vec<Tower> = reduced.iter().map(Magnitude::tower).collect();
    let biggest = towers
        .iter()
        .copied()
        .max_by(|a, b| a.cmp(b))
        .expect("non-empty");
    let huge = |t: &Tower| t.depth >= 1;
    let huge_count = towers.iter().filter(|t| huge(t)).count();
    let log2_result = if huge_count >= 2 {
        // entropy bound: log2 multinomial <= total * log2(r)
        let r = towers.len() as f64;
        biggest.scale(r * r.log2().max(1.0))
    } else {
        let small_parts: Vec<f64> = towers.iter().filter(|t| !huge(t)).map(|t| t.top).collect();
        let s: f64 = small_parts.iter().sum();
        let log2_big = biggest.log2();
        let mut est = log2_big.scale(s.max(1.0));
        if est.depth == 0 {
            let c: f64 = small_parts.iter().map(|&k| log2_factorial(k)).sum();
            est = Tower::new(0, (est.top - c).max(1.0));
        }
        est
    };
    Magnitude::from_tower(log2_result.exp2())
}

/// Half-split height needed for the escape-chain analysis: `4^(n-2)(n+1) + 2(n-2) + 1`.
pub fn half_split_height(n: u64) -> Magnitude {
    assert!(n >= 2, "half-split height defined for n >= 2");
    let four_pow = BigUint::one() << (2 * (n - 2));
    Magnitude::Exact(four_pow * (n + 1) + 2 * (n - 2) + 1u32)
}

/// Induced-matching size for the chain recursion:
/// `h(n, n', 2) = n` and
/// `h(n, n', t) = (n - 1) R(n, n, n, n, n, n, n, n', n', h(n, n', t - 1)) + 1`.
pub fn matching_size(n: u64, n_prime: &Magnitude, t: u32) -> Magnitude {
    assert!(t >= 2, "matching size defined for t >= 2");
    let mut h = Magnitude::exact(n);
    for _ in 3..=t {
        let mut parts: Vec<Magnitude> = vec![Magnitude::exact(n); 7];
        parts.push(n_prime.clone());
        parts.push(n_prime.clone());
        parts.push(h);
        h = ramsey_upper(&parts).mul_small(n.saturating_sub(1)).add_small(1);
    }
    h
}

/// Ramsey bound `m = R(n1 + n, 2n - 1, n + n2, n + n2 - 1)` for the
/// regular-triple colouring.
pub fn triple_ramsey_bound(n: u64, n1: &Magnitude, n2: &Magnitude) -> Magnitude {
    ramsey_upper(&[
        n1.add_small(n),
        Magnitude::exact(2 * n - 1),
        n2.add_small(n),
        n2.add_small(n - 1),
    ])
}

/// Independent-set size `f(n, n1, n2) = 2^(m + 1)`.
pub fn independent_set_size(n: u64, n1: &Magnitude, n2: &Magnitude) -> Magnitude {
    triple_ramsey_bound(n, n1, n2).add_small(1).pow2()
}

/// Every bound involved in extracting an outcome of size `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundSpec {
    pub n: u64,
    /// Half-split height `g(n)`.
    pub g: Magnitude,
    /// `h(n, g(n), t)` for `t = 2..=n`.
    pub h: Vec<Magnitude>,
    /// Ramsey bound `m` for the colouring of a regular triple with `n1 = h(n, g(n), n)`, `n2 = g(n)`.
    pub triple_ramsey: Magnitude,
    /// `f(n, h(n, g(n), n), g(n)) = 2^(triple_ramsey + 1)`.
    pub f: Magnitude,
    /// Vertex count `N = R(f, f)` (upper bound).
    pub vertices: Magnitude,
}

pub fn bounds(n: u64) -> BoundSpec {
    assert!(n >= 3, "bounds defined for n >= 3");
    let g = half_split_height(n);
    let h: Vec<Magnitude> = (2..=n as u32).map(|t| matching_size(n, &g, t)).collect();
    let n1 = h.last().expect("t = n present").clone();
    let triple_ramsey = triple_ramsey_bound(n, &n1, &g);
    let f = triple_ramsey.add_small(1).pow2();
    let vertices = ramsey_upper(&[f.clone(), f.clone()]);
    BoundSpec {
        n,
        g,
        h,
        triple_ramsey,
        f,
        vertices,
    }
}
