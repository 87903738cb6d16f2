//! Exhaustive breadth-first search over the Cayley graphs.
//!
//! A [`BallTable`] holds every element within a radius of the identity
//! together with its exact distance and the number of shortest paths reaching
//! it. Elements are stored in a compact window encoding: any element of length
//! at most `R` has its lit bulbs and cursor inside `[-(R+1), R+1]`.

use std::collections::{HashMap, HashSet};
use std::io::{self, Write};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::generator::{GenSet, Generator};
use crate::metrics::{self, WordMetric};

/// Largest radius the 128-bit window can hold.
pub const WINDOW_RADIUS_LIMIT: u32 = 62;

pub const DEFAULT_MAX_RADIUS: u32 = 14;
pub const DEFAULT_MAX_ENTRIES: usize = 1 << 24;

pub const MAX_RADIUS_ENV: &str = "LAMPLIGHTER_MAX_RADIUS";
pub const MAX_ENTRIES_ENV: &str = "LAMPLIGHTER_MAX_BALL_ENTRIES";

/// Resource caps for ball construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BallLimits {
    pub max_radius: u32,
    pub max_entries: usize,
}

impl Default for BallLimits {
    fn default() -> Self {
        BallLimits {
            max_radius: DEFAULT_MAX_RADIUS,
            max_entries: DEFAULT_MAX_ENTRIES,
        }
    }
}

impl BallLimits {
    /// Defaults, overridden by `LAMPLIGHTER_MAX_RADIUS` / `LAMPLIGHTER_MAX_BALL_ENTRIES` when set.
    pub fn from_env() -> Self {
        let mut limits = BallLimits::default();
        if let Some(r) = std::env::var(MAX_RADIUS_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            limits.max_radius = r;
        }
        if let Some(n) = std::env::var(MAX_ENTRIES_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            limits.max_entries = n;
        }
        limits
    }
}

/// Bit window over positions `-(R+1) ..= R+1` plus the cursor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EncodedElement {
    pub window: u128,
    pub cursor: i8,
}

#[derive(Debug, Clone, Copy)]
struct Codec {
    offset: i64,
}

impl Codec {
    fn new(radius: u32) -> Self {
        Codec {
            offset: radius as i64 + 1,
        }
    }

    fn bit(&self, p: i64) -> Option<u32> {
        let i = p + self.offset;
        (0..=2 * self.offset).contains(&i).then_some(i as u32)
    }

    fn encode(&self, e: &GroupElement) -> Option<EncodedElement> {
        self.bit(e.cursor())?;
        let mut window = 0u128;
        for &p in e.bulbs() {
            window |= 1u128 << self.bit(p)?;
        }
        Some(EncodedElement {
            window,
            cursor: e.cursor() as i8,
        })
    }

    fn decode(&self, x: EncodedElement) -> GroupElement {
        let bulbs = (0..128).filter(|i| x.window >> i & 1 == 1).map(|i| i as i64 - self.offset);
        GroupElement::new(bulbs, x.cursor as i64).expect("window positions are in range")
    }

    /// Right multiplication by `g`; caller guarantees the result stays in the window.
    fn apply(&self, x: EncodedElement, g: Generator) -> EncodedElement {
        let flip = |window: u128, c: i8| window ^ (1u128 << (c as i64 + self.offset));
        match g {
            Generator::A => EncodedElement {
                window: flip(x.window, x.cursor),
                cursor: x.cursor,
            },
            Generator::T => EncodedElement {
                window: x.window,
                cursor: x.cursor + 1,
            },
            Generator::TInv => EncodedElement {
                window: x.window,
                cursor: x.cursor - 1,
            },
            Generator::TA => EncodedElement {
                window: flip(x.window, x.cursor + 1),
                cursor: x.cursor + 1,
            },
            Generator::TAInv => EncodedElement {
                window: flip(x.window, x.cursor),
                cursor: x.cursor - 1,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub distance: u32,
    pub path_count: BigUint,
}

/// Every element within `radius` of the identity, with exact distances and
/// shortest-path counts.
#[derive(Debug, Clone)]
pub struct BallTable {
    genset: GenSet,
    radius: u32,
    codec: Codec,
    entries: HashMap<EncodedElement, Entry>,
    /// Sphere members in ascending key order, indexed by distance.
    layers: Vec<Vec<EncodedElement>>,
}

impl BallTable {
    /// Layered BFS from the identity. Path counts are summed over predecessors
    /// one layer closer, so the table does not depend on expansion order.
    pub fn build(genset: GenSet, radius: u32, limits: &BallLimits) -> Result<Self> {
        let max = limits.max_radius.min(WINDOW_RADIUS_LIMIT);
        if radius > max {
            return Err(Error::RadiusTooLarge { radius, max });
        }
        let codec = Codec::new(radius);
        let origin = codec.encode(&GroupElement::identity()).expect("identity fits");
        let mut entries = HashMap::from([(
            origin,
            Entry {
                distance: 0,
                path_count: BigUint::one(),
            },
        )]);
        let mut layers = vec![vec![origin]];

        for d in 1..=radius {
            let mut next: HashMap<EncodedElement, BigUint> = HashMap::new();
            for x in &layers[d as usize - 1] {
                let paths = &entries[x].path_count;
                for &g in genset.letters() {
                    let y = codec.apply(*x, g);
                    if entries.contains_key(&y) {
                        continue;
                    }
                    *next.entry(y).or_insert_with(BigUint::zero) += paths;
                }
            }
            if entries.len() + next.len() > limits.max_entries {
                return Err(Error::BallTooLarge {
                    max: limits.max_entries,
                });
            }
            let mut layer: Vec<EncodedElement> = next.keys().copied().collect();
            layer.sort_unstable();
            entries.extend(next.into_iter().map(|(k, path_count)| {
                (
                    k,
                    Entry {
                        distance: d,
                        path_count,
                    },
                )
            }));
            layers.push(layer);
        }

        Ok(BallTable {
            genset,
            radius,
            codec,
            entries,
            layers,
        })
    }

    pub fn genset(&self) -> GenSet {
        self.genset
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn entry(&self, e: &GroupElement) -> Result<&Entry> {
        self.codec
            .encode(e)
            .and_then(|k| self.entries.get(&k))
            .ok_or_else(|| Error::OutOfBall(e.to_string(), self.radius))
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        self.entry(e).is_ok()
    }

    /// Exact word length of `e` from the BFS.
    pub fn oracle_length(&self, e: &GroupElement) -> Result<u64> {
        self.entry(e).map(|x| x.distance as u64)
    }

    /// Number of distinct geodesic words from the identity to `e`.
    pub fn oracle_geodesic_count(&self, e: &GroupElement) -> Result<&BigUint> {
        self.entry(e).map(|x| &x.path_count)
    }

    pub fn sphere_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// All elements in (distance, key) order.
    pub fn iter(&self) -> impl Iterator<Item = (GroupElement, &Entry)> + '_ {
        self.layers
            .iter()
            .flatten()
            .map(move |k| (self.codec.decode(*k), &self.entries[k]))
    }

    /// Elements at exactly distance `d`.
    pub fn sphere(&self, d: u32) -> impl Iterator<Item = GroupElement> + '_ {
        self.layers
            .get(d as usize)
            .into_iter()
            .flatten()
            .map(move |k| self.codec.decode(*k))
    }

    /// Writes `distance,size` rows, one per sphere.
    pub fn write_sphere_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "distance,size")?;
        for (d, size) in self.sphere_sizes().iter().enumerate() {
            writeln!(out, "{d},{size}")?;
        }
        Ok(())
    }
}

impl WordMetric for BallTable {
    fn genset(&self) -> GenSet {
        self.genset
    }

    fn length(&self, e: &GroupElement) -> Result<u64> {
        self.oracle_length(e)
    }
}

/// Dead-end depth by brute force: BFS outward from `e`, scoring each visited
/// element with the closed-form length, until something farther from the
/// identity than `e` turns up. Returns the length of the shortest escaping word
/// minus one.
pub fn escape_depth(e: &GroupElement, genset: GenSet) -> u64 {
    let n = metrics::length(e, genset);
    let mut seen: HashSet<GroupElement> = HashSet::from([e.clone()]);
    let mut frontier = vec![e.clone()];
    let mut depth = 0u64;
    // walking right past every bulb and the cursor strictly increases length,
    // so this terminates
    loop {
        depth += 1;
        let mut next = Vec::new();
        for x in &frontier {
            for &g in genset.letters() {
                let y = x.apply(g);
                if seen.insert(y.clone()) {
                    if metrics::length(&y, genset) > n {
                        return depth - 1;
                    }
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(bulbs: &[i64], cursor: i64) -> GroupElement {
        GroupElement::new(bulbs.iter().copied(), cursor).unwrap()
    }

    fn ball(gs: GenSet, r: u32) -> BallTable {
        BallTable::build(gs, r, &BallLimits::default()).unwrap()
    }

    #[test]
    fn small_spheres() {
        assert_eq!(ball(GenSet::Automata, 0).sphere_sizes(), vec![1]);
        assert_eq!(ball(GenSet::Wreath, 0).len(), 1);
        assert_eq!(ball(GenSet::Automata, 1).sphere_sizes(), vec![1, 4]);
        assert_eq!(ball(GenSet::Wreath, 1).sphere_sizes(), vec![1, 3]);
        // exhaustive length-2 enumeration: {aT, at, ta, tt, Ta, TT}
        assert_eq!(ball(GenSet::Wreath, 2).sphere_sizes(), vec![1, 3, 6]);
    }

    #[test]
    fn oracle_lookups() {
        let b = ball(GenSet::Automata, 4);
        assert_eq!(b.oracle_length(&GroupElement::identity()).unwrap(), 0);
        assert_eq!(b.oracle_geodesic_count(&GroupElement::identity()).unwrap(), &BigUint::one());
        assert_eq!(b.oracle_length(&el(&[0], 0)).unwrap(), 2);
        assert_eq!(b.oracle_geodesic_count(&el(&[0], 0)).unwrap(), &BigUint::from(2u32));
        assert_eq!(b.oracle_length(&el(&[1], 0)).unwrap(), 2);
        assert_eq!(b.oracle_geodesic_count(&el(&[1], 0)).unwrap(), &BigUint::from(2u32));
        assert_eq!(b.oracle_geodesic_count(&el(&[0, 1], 0)).unwrap(), &BigUint::from(8u32));
        assert!(matches!(b.oracle_length(&el(&[], 5)), Err(Error::OutOfBall(_, 4))));
        assert!(b.oracle_length(&el(&[90], 0)).is_err());
    }

    #[test]
    fn ball_invariants() {
        let b = ball(GenSet::Automata, 6);
        assert_eq!(b.sphere_sizes().iter().sum::<usize>(), b.len());
        for (e, entry) in b.iter() {
            assert!(entry.distance <= 6);
            assert!(entry.path_count >= BigUint::one());
            assert_eq!(b.oracle_length(&e).unwrap(), entry.distance as u64);
        }
    }

    #[test]
    fn builds_are_deterministic() {
        let a: Vec<_> = ball(GenSet::Wreath, 8).iter().map(|(e, x)| (e, x.clone())).collect();
        let b: Vec<_> = ball(GenSet::Wreath, 8).iter().map(|(e, x)| (e, x.clone())).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn resource_limits() {
        let err = BallTable::build(GenSet::Automata, 15, &BallLimits::default()).unwrap_err();
        assert_eq!(err, Error::RadiusTooLarge { radius: 15, max: 14 });
        assert!(err.is_resource());
        let tight = BallLimits {
            max_radius: 14,
            max_entries: 20,
        };
        assert!(matches!(
            BallTable::build(GenSet::Automata, 5, &tight),
            Err(Error::BallTooLarge { max: 20 })
        ));
        let wide = BallLimits {
            max_radius: 100,
            max_entries: 10,
        };
        assert!(matches!(
            BallTable::build(GenSet::Automata, 63, &wide),
            Err(Error::RadiusTooLarge { max: 62, .. })
        ));
    }

    #[test]
    fn sphere_csv() {
        let mut buf = Vec::new();
        ball(GenSet::Automata, 2).write_sphere_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "distance,size\n0,1\n1,4\n2,10\n");
    }

    #[test]
    fn escape_depth_examples() {
        assert_eq!(escape_depth(&el(&[], 1), GenSet::Automata), 0);
        assert_eq!(escape_depth(&GroupElement::identity(), GenSet::Automata), 0);
        // frozen from brute force over all words of length <= 3
        assert_eq!(escape_depth(&el(&[0, 1], 0), GenSet::Automata), 2);
    }
}
