//! Exhaustive checks of the parallel-family and edge-bound lemmas.
//!
//! Labels in witnesses are printed 1-based.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bound::{euler_edge_lower, reduced_edge_bound, ReducedCounts};
use super::family::ParallelFamily;
use crate::value::{int, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepVerdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub lemma: String,
    pub parameters: String,
    pub verdict: SweepVerdict,
    pub witness: Option<String>,
}

impl SweepRecord {
    fn new(lemma: &str, parameters: String, pass: bool, witness: Option<String>) -> Self {
        SweepRecord {
            lemma: lemma.to_string(),
            parameters,
            verdict: if pass { SweepVerdict::Pass } else { SweepVerdict::Fail },
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == SweepVerdict::Pass
    }
}

fn describe(f: &ParallelFamily) -> String {
    format!("n={} k={} start={} size={}", f.n, f.k + 1, f.start + 1, f.size)
}

fn families(n: u32, size: u32, odd_k_only: bool) -> impl Iterator<Item = ParallelFamily> {
    (0..n)
        .filter(move |k| !odd_k_only || k % 2 == 1)
        .flat_map(move |k| (0..n).map(move |start| ParallelFamily { n, k, start, size }))
}

/// Families of `m n + 1` edges: every label pair occurs `>= 2m` times and one `>= 2m + 1`.
/// The witness counts families where more than one label exceeds `2m`.
pub fn pair_count_sweep(max_n: u32, max_m: u32) -> Vec<SweepRecord> {
    let cases: Vec<(u32, u32)> = (1..=max_n).flat_map(|n| (1..=max_m).map(move |m| (n, m))).collect();
    cases
        .into_par_iter()
        .map(|(n, m)| {
            let mut failure = None;
            let mut loose = 0usize;
            let mut total = 0usize;
            for f in families(n, m * n + 1, false) {
                let r = f.pair_counts().expect("size is m n + 1");
                total += 1;
                if r.above_2m.len() > 1 {
                    loose += 1;
                }
                if !r.holds() && failure.is_none() {
                    failure = Some(describe(&f));
                }
            }
            let witness = failure.clone().or_else(|| Some(format!("{loose} of {total} families exceed 2m at two labels")));
            SweepRecord::new("pair counts", format!("n={n} m={m}"), failure.is_none(), witness)
        })
        .collect()
}

/// Coherent families are exactly those with odd `k`.
pub fn parity_sweep(max_n: u32) -> Vec<SweepRecord> {
    (2..=max_n)
        .step_by(2)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let bad = (0..n).find(|k| ParallelFamily { n, k: *k, start: 0, size: n }.parity_admissible() != (k % 2 == 1));
            SweepRecord::new("odd pairing index", format!("n={n}"), bad.is_none(), bad.map(|k| format!("k={}", k + 1)))
        })
        .collect()
}

fn threshold_sweep<F>(lemma: &str, max_n: u32, guaranteed: impl Fn(u32) -> u32 + Sync, find: F) -> Vec<SweepRecord>
where
    F: Fn(&ParallelFamily) -> Option<u32> + Sync,
{
    (2..=max_n)
        .step_by(2)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let size = guaranteed(n);
            let missing = families(n, size, true).find(|f| find(f).is_none());
            let sharp = families(n, size - 1, true).find(|f| find(f).is_none());
            let pass = missing.is_none() && sharp.is_some();
            let witness = match (&missing, &sharp) {
                (Some(f), _) => Some(format!("no cycle in {}", describe(f))),
                (None, Some(f)) => Some(format!("sharp: none in {}", describe(f))),
                (None, None) => Some(format!("every family of size {} already has one", size - 1)),
            };
            SweepRecord::new(lemma, format!("n={n} size={size}"), pass, witness)
        })
        .collect()
}

/// Every coherent family of `n/2 + 1` edges contains an S-cycle, and some family of `n/2` does not.
pub fn s_cycle_sweep(max_n: u32) -> Vec<SweepRecord> {
    threshold_sweep("S-cycle", max_n, |n| n / 2 + 1, |f| f.find_s_cycle().ok().flatten())
}

/// Every coherent family of `n/2 + 3` edges contains an extended S-cycle, and some family of `n/2 + 2` does not.
pub fn extended_s_cycle_sweep(max_n: u32) -> Vec<SweepRecord> {
    threshold_sweep("extended S-cycle", max_n, |n| n / 2 + 3, |f| f.find_extended_s_cycle().ok().flatten())
}

/// All counts with `e <= max_e`, `2e >= 3f` and `chi <= v - e + f`: the bound `-chi(F) >= e/3` holds.
pub fn euler_chain_sweep(max_e: u64) -> SweepRecord {
    let mut checked = 0usize;
    let mut failure = None;
    for e in 0..=max_e {
        for f in 0..=(2 * e / 3) {
            for v in 1..=8u64 {
                let top = v as i64 - e as i64 + f as i64;
                for chi_surface in (top - 3)..=top {
                    let c = ReducedCounts { v_bar: v, e_bar: e, f_bar: f, chi_surface };
                    checked += 1;
                    let ok = match euler_edge_lower(&c) {
                        Ok(lower) => int(-c.chi_punctured() as i128) >= lower,
                        Err(_) => false,
                    };
                    if !ok && failure.is_none() {
                        failure = Some(format!("{c:?}"));
                    }
                }
            }
        }
    }
    let witness = failure.clone().or(Some(format!("{checked} count tuples")));
    SweepRecord::new("reduced Euler count", format!("e<={max_e}"), failure.is_none(), witness)
}

/// One cap pattern: caps as functions of `n`, and the constant the genus bound must reach.
struct CapPattern {
    name: &'static str,
    interior: fn(u64) -> Option<Rational>,
    boundary: fn(u64) -> Option<Rational>,
    e_bar: fn(u64, u64) -> Rational,
    check: fn(u64, Rational) -> bool,
}

fn cap_patterns() -> Vec<CapPattern> {
    vec![
        CapPattern {
            name: "cap n/2+2 gives genus >= 1/12",
            interior: |n| Some(int(n as i128 / 2 + 2)),
            boundary: |_| None,
            e_bar: |p, n| rat((p * n) as i128, (n + 4) as i128),
            check: |_p, g| g >= rat(1, 12),
        },
        CapPattern {
            name: "cap 2n gives genus >= 1/24",
            interior: |n| Some(int(2 * n as i128)),
            boundary: |_| None,
            e_bar: |p, _| rat(p as i128, 4),
            check: |_p, g| g == rat(1, 24),
        },
        CapPattern {
            name: "caps n and 2n give -chi >= p/6",
            interior: |n| Some(int(n as i128)),
            boundary: |n| Some(int(2 * n as i128)),
            e_bar: |p, _| rat(p as i128, 2),
            check: |_p, g| g == rat(1, 12),
        },
        CapPattern {
            name: "cap n/2 gives -chi >= p/3",
            interior: |n| Some(int(n as i128 / 2)),
            boundary: |_| None,
            e_bar: |p, _| int(p as i128),
            check: |_p, g| g == rat(1, 6),
        },
        CapPattern {
            name: "caps n/2 and 2n-2 give e > p/2",
            interior: |n| Some(int(n as i128 / 2)),
            boundary: |n| Some(int(2 * n as i128 - 2)),
            e_bar: |p, n| rat((p * n) as i128, (2 * n - 2) as i128),
            check: |_p, g| g > rat(1, 12),
        },
    ]
}

/// Each cap pattern reproduces its constant exactly for every even `n` in `4..=max_n`
/// and `p` in `1..=max_p`; plus the `n = 2`, cap 4 case giving `e >= p/4`.
pub fn edge_bound_sweep(max_n: u64, max_p: u64) -> Vec<SweepRecord> {
    let mut out: Vec<SweepRecord> = cap_patterns()
        .into_par_iter()
        .map(|pat| {
            let mut failure = None;
            'outer: for n in (4..=max_n).step_by(2) {
                for p in 1..=max_p {
                    let ok = match reduced_edge_bound(p, n, (pat.interior)(n), (pat.boundary)(n)) {
                        Ok(b) => {
                            b.e_bar_lower == (pat.e_bar)(p, n)
                                && b.neg_chi_lower == b.e_bar_lower / int(3)
                                && (pat.check)(p, b.genus_lower)
                        }
                        Err(_) => false,
                    };
                    if !ok {
                        failure = Some(format!("p={p} n={n}"));
                        break 'outer;
                    }
                }
            }
            SweepRecord::new(pat.name, format!("n even in 4..={max_n}, p<={max_p}"), failure.is_none(), failure)
        })
        .collect();
    let small = (1..=max_p).find(|p| {
        reduced_edge_bound(*p, 2, Some(int(4)), None).map(|b| b.e_bar_lower) != Ok(rat(*p as i128, 4))
    });
    out.push(SweepRecord::new(
        "n = 2 with cap 4 gives e >= p/4",
        format!("p<={max_p}"),
        small.is_none(),
        small.map(|p| format!("p={p}")),
    ));
    out
}
