//! Gromov's four-point δ of the 1-skeleton, computed exactly.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::{DistanceMatrix, FlagComplex, Vertex};
use crate::error::{Error, Result};
use crate::generators::GeneratorSpec;

/// Largest vertex count accepted by the exact quadruple scan.
pub const EXACT_VERTEX_LIMIT: usize = 300;

/// A non-negative multiple of 1/2, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInteger(u64);

impl HalfInteger {
    pub const ZERO: HalfInteger = HalfInteger(0);

    pub fn from_twice(twice: u64) -> Self {
        HalfInteger(twice)
    }

    pub fn twice(self) -> u64 {
        self.0
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInteger {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("half-integer {s:?}"));
        match s.split_once('/') {
            Some((num, "2")) => num.parse().map(HalfInteger).map_err(|_| bad()),
            Some(_) => Err(bad()),
            None => s.parse::<u64>().map(|n| HalfInteger(2 * n)).map_err(|_| bad()),
        }
    }
}

impl Serialize for HalfInteger {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInteger {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeltaMethod {
    Exact,
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaResult {
    pub delta: HalfInteger,
    pub witness: [Vertex; 4],
    pub method: DeltaMethod,
}

impl DeltaResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serializes")
    }
}

/// Twice the four-point value of one quadruple: the gap between the two
/// largest of the three pairing sums.
#[inline]
pub fn quadruple_twice_delta(dm: &DistanceMatrix, [x, y, z, w]: [Vertex; 4]) -> u64 {
    let s1 = dm.raw(x, y) as u64 + dm.raw(z, w) as u64;
    let s2 = dm.raw(x, z) as u64 + dm.raw(y, w) as u64;
    let s3 = dm.raw(x, w) as u64 + dm.raw(y, z) as u64;
    let (hi, mid) = if s1 >= s2 { (s1, s2) } else { (s2, s1) };
    let (hi, mid) = if s3 >= hi { (s3, hi) } else { (hi, mid.max(s3)) };
    hi - mid
}

fn better(a: (u64, [Vertex; 4]), b: (u64, [Vertex; 4])) -> (u64, [Vertex; 4]) {
    if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

fn exact_scan(dm: &DistanceMatrix) -> (u64, [Vertex; 4]) {
    let n = dm.len();
    (0..n)
        .into_par_iter()
        .map(|x| {
            let rx = dm.row(x);
            let mut best = (0u64, [x; 4]);
            let mut found = false;
            for y in x + 1..n {
                let ry = dm.row(y);
                let dxy = rx[y] as u64;
                for z in y + 1..n {
                    let rz = dm.row(z);
                    let (dxz, dyz) = (rx[z] as u64, ry[z] as u64);
                    for w in z + 1..n {
                        let s1 = dxy + rz[w] as u64;
                        let s2 = dxz + ry[w] as u64;
                        let s3 = rx[w] as u64 + dyz;
                        let (hi, mid) = if s1 >= s2 { (s1, s2) } else { (s2, s1) };
                        let (hi, mid) = if s3 >= hi { (s3, hi) } else { (hi, mid.max(s3)) };
                        let v = hi - mid;
                        if !found || v > best.0 {
                            best = (v, [x, y, z, w]);
                            found = true;
                        }
                    }
                }
            }
            (found, best)
        })
        .filter(|(found, _)| *found)
        .map(|(_, b)| b)
        .reduce_with(better)
        .unwrap_or((0, [0; 4]))
}

/// Four-point δ of the graph metric on the 1-skeleton. The exact method
/// scans every quadruple `x < y < z < w` and reports the least one attaining
/// the maximum; the sampled method draws quadruples from a seeded
/// generator and can only underestimate.
pub fn four_point_delta(x: &FlagComplex, method: DeltaMethod) -> Result<DeltaResult> {
    let n = x.vertex_count();
    if n == 0 {
        return Err(Error::PreconditionViolated("empty complex".into()));
    }
    if method == DeltaMethod::Exact && n > EXACT_VERTEX_LIMIT {
        return Err(Error::TooLargeForExact { vertices: n, limit: EXACT_VERTEX_LIMIT });
    }
    let dm = DistanceMatrix::new(x);
    if dm.diameter().is_none() {
        return Err(Error::Disconnected);
    }
    let (twice, witness) = match method {
        DeltaMethod::Exact if n < 4 => {
            let v = |i: usize| i.min(n - 1);
            (0, [v(0), v(1), v(2), v(3)])
        }
        DeltaMethod::Exact => exact_scan(&dm),
        DeltaMethod::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut best = (0, [0; 4]);
            for _ in 0..samples {
                let mut q = [0; 4];
                for v in &mut q {
                    *v = rng.gen_range(0..n);
                }
                q.sort_unstable();
                best = better(best, (quadruple_twice_delta(&dm, q), q));
            }
            best
        }
    };
    Ok(DeltaResult { delta: HalfInteger(twice), witness, method })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub radius: usize,
    pub vertices: usize,
    pub result: DeltaResult,
}

/// δ of `family` at each radius: exact up to [`EXACT_VERTEX_LIMIT`]
/// vertices, sampled with the given budget and seed beyond it.
pub fn delta_growth_profile(
    family: &GeneratorSpec,
    radii: &[usize],
    samples: usize,
    seed: u64,
) -> Result<Vec<ProfileRow>> {
    radii
        .iter()
        .map(|&radius| {
            let x = family.with_scale(radius).build()?;
            let method = if x.vertex_count() <= EXACT_VERTEX_LIMIT {
                DeltaMethod::Exact
            } else {
                DeltaMethod::Sampled { samples, seed }
            };
            let result = four_point_delta(&x, method)?;
            Ok(ProfileRow { radius, vertices: x.vertex_count(), result })
        })
        .collect()
}

pub fn profile_csv(rows: &[ProfileRow]) -> String {
    let mut out = String::from("radius,vertices,delta\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.radius, r.vertices, r.result.delta));
    }
    out
}
