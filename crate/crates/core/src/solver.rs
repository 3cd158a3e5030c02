//! Exact computation of the k-distance mutual-visibility number: a
//! brute-force subset oracle, a branch-and-bound maximizer that exploits
//! hereditarity (every subset of a valid set is valid), and maximum-set
//! enumeration for tiny graphs.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{all_pairs, DistanceMatrix, Graph};
use crate::vertex_set::VertexSet;
use crate::visibility::{geodesic_exists_avoiding, is_k_mv_set};

/// Hard cap for the brute-force oracle.
pub const BRUTE_FORCE_CAP: usize = 20;
/// Cap for exhaustive maximum-set enumeration.
pub const ENUMERATION_CAP: usize = 14;

/// Number of top-level branches carved out before (optional) parallel
/// processing. Fixed so that node counts and results do not depend on the
/// worker count.
const FRONTIER_TARGET: usize = 64;

const DEADLINE_CHECK_INTERVAL: u64 = 1 << 12;

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub mu: usize,
    /// The lexicographically least maximum set, reported deterministically.
    pub witness: VertexSet,
    pub k_effective: usize,
    pub clamped: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// Worker threads for the top-level branch split; 0 means all cores.
    /// The result and node count are independent of this value.
    pub threads: usize,
    /// Optional wall-clock budget; when exceeded the solve aborts with
    /// `Error::Budget` carrying the best lower bound found so far.
    pub budget: Option<Duration>,
}

/// Clamps `k` to the diameter: mu_k equals mu_d for every k >= d, so sweeps
/// over arbitrary k stay total. Always keeps k >= 1.
fn clamp_k(k: usize, dm: &DistanceMatrix) -> (usize, bool) {
    let ceiling = dm.diameter.max(1);
    if k > ceiling {
        (ceiling, true)
    } else {
        (k, false)
    }
}

fn validate(g: &Graph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    if g.n() == 0 {
        return Err(Error::Parameter("graph has no vertices".into()));
    }
    Ok(())
}

/// Reference oracle: scans subsets in decreasing-size lexicographic order
/// and returns the first valid one, which is therefore the lexicographically
/// least witness of maximum cardinality.
pub fn mu_k_bruteforce(g: &Graph, k: usize) -> Result<SolveResult> {
    let start = Instant::now();
    validate(g, k)?;
    if g.n() > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge {
            n: g.n(),
            cap: BRUTE_FORCE_CAP,
        });
    }
    let dm = all_pairs(g);
    if !dm.is_connected() {
        return Err(Error::Disconnected("solver requires a connected graph".into()));
    }
    let (k_eff, clamped) = clamp_k(k, &dm);
    let mut nodes = 0u64;
    for size in (0..=g.n()).rev() {
        for combo in Combinations::new(g.n(), size) {
            nodes += 1;
            let s = VertexSet::from_iter(g.n(), combo.iter().copied());
            if is_k_mv_set(g, &dm, &s, k_eff)? {
                return Ok(SolveResult {
                    mu: size,
                    witness: s,
                    k_effective: k_eff,
                    clamped,
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    Err(Error::Internal("subset scan found no valid set".into()))
}

/// Exact mu_k by branch-and-bound.
///
/// Branching order is degree-descending with id tie-breaks; a vertex stays a
/// candidate only while its addition keeps the current set valid; branches
/// are cut once `|current| + |candidates|` cannot beat the best bound. The
/// reported witness is recomputed canonically (lexicographically least
/// maximum set), so the output is identical for any worker count.
pub fn mu_k_exact(g: &Graph, k: usize) -> Result<SolveResult> {
    mu_k_exact_with(g, k, &SolveOptions::default())
}

pub fn mu_k_exact_with(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    validate(g, k)?;
    let dm = all_pairs(g);
    if !dm.is_connected() {
        return Err(Error::Disconnected("solver requires a connected graph".into()));
    }
    let (k_eff, clamped) = clamp_k(k, &dm);
    let deadline = opts.budget.map(|b| start.checked_add(b).expect("sane budget"));
    let ctx = Ctx {
        g,
        dm: &dm,
        k: k_eff as u32,
        deadline,
    };

    // Two greedy passes seed the lower bound: the branching order itself and
    // ascending degree, which favors the sparse fringes many extremal
    // families pack their sets into.
    let mut order_desc: Vec<usize> = (0..g.n()).collect();
    order_desc.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut order_asc: Vec<usize> = (0..g.n()).collect();
    order_asc.sort_by_key(|&v| (g.degree(v), v));
    let seed = ctx.greedy(&order_desc).max(ctx.greedy(&order_asc));

    let (mu, phase1_nodes) = phase1_value(&ctx, &order_desc, seed, opts.threads)?;
    let mut nodes = phase1_nodes;
    let witness = phase2_lex_witness(&ctx, mu, &mut nodes)?;
    debug_assert!(is_k_mv_set(g, &dm, &witness, k_eff)?);
    Ok(SolveResult {
        mu,
        witness,
        k_effective: k_eff,
        clamped,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// All k-MV sets of maximum cardinality, in lexicographic order.
pub fn enumerate_maximum_sets(g: &Graph, k: usize) -> Result<Vec<VertexSet>> {
    if g.n() > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            n: g.n(),
            cap: ENUMERATION_CAP,
        });
    }
    let mu = mu_k_bruteforce(g, k)?;
    let dm = all_pairs(g);
    let mut out = Vec::new();
    for combo in Combinations::new(g.n(), mu.mu) {
        let s = VertexSet::from_iter(g.n(), combo.iter().copied());
        if is_k_mv_set(g, &dm, &s, mu.k_effective)? {
            out.push(s);
        }
    }
    Ok(out)
}

struct Ctx<'a> {
    g: &'a Graph,
    dm: &'a DistanceMatrix,
    k: u32,
    deadline: Option<Instant>,
}

impl Ctx<'_> {
    fn visible(&self, a: usize, b: usize, blocked: &VertexSet) -> bool {
        geodesic_exists_avoiding(self.g, self.dm, a, b, blocked)
            .expect("connectivity checked before search")
    }

    /// Whether `members + u` is still a k-MV set, given that `members` is.
    ///
    /// Checks every pair involving `u`, then revalidates the existing pairs
    /// `u` could affect: adding `u` only blocks geodesics it lies on, i.e.
    /// pairs (a, b) with dist(a,u) + dist(u,b) = dist(a,b).
    fn can_add(&self, members: &[usize], sbits: &VertexSet, u: usize) -> bool {
        for &a in members {
            if self.dm.dist(a, u) > self.k {
                return false;
            }
        }
        let mut s_plus = sbits.clone();
        s_plus.insert(u);
        for &a in members {
            if !self.visible(a, u, &s_plus) {
                return false;
            }
        }
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if self.dm.dist(a, u) + self.dm.dist(u, b) == self.dm.dist(a, b)
                    && !self.visible(a, b, &s_plus)
                {
                    return false;
                }
            }
        }
        true
    }

    fn greedy(&self, order: &[usize]) -> usize {
        let mut members = Vec::new();
        let mut bits = VertexSet::empty(self.g.n());
        for &v in order {
            if self.can_add(&members, &bits, v) {
                members.push(v);
                bits.insert(v);
            }
        }
        members.len()
    }

    fn expired(&self, nodes: u64) -> bool {
        nodes % DEADLINE_CHECK_INTERVAL == 1
            && self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

#[derive(Clone)]
struct Frame {
    members: Vec<usize>,
    bits: VertexSet,
    cands: Vec<usize>,
}

/// Phase 1: the exact value of mu_k.
///
/// A fixed-size frontier of branches is carved out sequentially; each frame
/// is then searched independently with a private bound seeded from the
/// frontier-time best. Worker threads only schedule frames, so the value and
/// the total node count do not depend on the thread count.
fn phase1_value(ctx: &Ctx, order: &[usize], seed: usize, threads: usize) -> Result<(usize, u64)> {
    let n = ctx.g.n();
    let mut best = seed;
    let mut nodes = 0u64;
    let mut frames = VecDeque::new();
    frames.push_back(Frame {
        members: Vec::new(),
        bits: VertexSet::empty(n),
        cands: order.to_vec(),
    });

    while !frames.is_empty() && frames.len() < FRONTIER_TARGET {
        let frame = frames.pop_front().expect("nonempty queue");
        nodes += 1;
        if ctx.expired(nodes) {
            return Err(Error::Budget { lower_bound: best });
        }
        best = best.max(frame.members.len());
        if frame.members.len() + frame.cands.len() <= best || frame.cands.is_empty() {
            continue;
        }
        let v = frame.cands[0];
        let mut inc_members = frame.members.clone();
        inc_members.push(v);
        let mut inc_bits = frame.bits.clone();
        inc_bits.insert(v);
        let inc_cands: Vec<usize> = frame.cands[1..]
            .iter()
            .copied()
            .filter(|&u| ctx.can_add(&inc_members, &inc_bits, u))
            .collect();
        frames.push_back(Frame {
            members: inc_members,
            bits: inc_bits,
            cands: inc_cands,
        });
        frames.push_back(Frame {
            members: frame.members,
            bits: frame.bits,
            cands: frame.cands[1..].to_vec(),
        });
    }

    if frames.is_empty() {
        return Ok((best, nodes));
    }

    let base_bound = best;
    let worker_count = if threads == 0 {
        std::thread::available_parallelism().map_or(1, |p| p.get())
    } else {
        threads
    }
    .min(frames.len())
    .max(1);

    let queue = Mutex::new(frames);
    let results = Mutex::new(Vec::<(usize, u64)>::new());
    let aborted = AtomicBool::new(false);
    std::thread::scope(|scope| {
        for _ in 0..worker_count {
            scope.spawn(|| loop {
                let frame = queue.lock().expect("queue lock").pop_front();
                let Some(frame) = frame else { break };
                if aborted.load(AtomicOrdering::Relaxed) {
                    break;
                }
                let mut local_best = base_bound;
                let mut local_nodes = 0u64;
                let mut members = frame.members;
                let mut bits = frame.bits;
                let ok = dfs_max(
                    ctx,
                    &mut members,
                    &mut bits,
                    &frame.cands,
                    &mut local_best,
                    &mut local_nodes,
                );
                if ok.is_err() {
                    aborted.store(true, AtomicOrdering::Relaxed);
                }
                results
                    .lock()
                    .expect("results lock")
                    .push((local_best, local_nodes));
                if ok.is_err() {
                    break;
                }
            });
        }
    });

    let results = results.into_inner().expect("results lock");
    let mut value = base_bound;
    for &(b, c) in &results {
        value = value.max(b);
        nodes += c;
    }
    if aborted.load(AtomicOrdering::Relaxed) {
        return Err(Error::Budget { lower_bound: value });
    }
    Ok((value, nodes))
}

struct Expired;

fn dfs_max(
    ctx: &Ctx,
    members: &mut Vec<usize>,
    bits: &mut VertexSet,
    cands: &[usize],
    best: &mut usize,
    nodes: &mut u64,
) -> std::result::Result<(), Expired> {
    *nodes += 1;
    if ctx.expired(*nodes) {
        return Err(Expired);
    }
    if members.len() > *best {
        *best = members.len();
    }
    for i in 0..cands.len() {
        if members.len() + (cands.len() - i) <= *best {
            return Ok(());
        }
        let v = cands[i];
        members.push(v);
        bits.insert(v);
        let filtered: Vec<usize> = cands[i + 1..]
            .iter()
            .copied()
            .filter(|&u| ctx.can_add(members, bits, u))
            .collect();
        dfs_max(ctx, members, bits, &filtered, best, nodes)?;
        members.pop();
        bits.remove(v);
    }
    Ok(())
}

/// Phase 2: the canonical witness. Depth-first over ids in ascending order,
/// include-first, pruned by hereditarity; the first valid set of the target
/// size is the lexicographically least maximum set (it matches the
/// brute-force oracle's witness).
fn phase2_lex_witness(ctx: &Ctx, target: usize, nodes: &mut u64) -> Result<VertexSet> {
    let n = ctx.g.n();
    let mut members = Vec::new();
    let mut bits = VertexSet::empty(n);
    let cands: Vec<usize> = (0..n).collect();
    match dfs_lex(ctx, &mut members, &mut bits, &cands, target, nodes) {
        Ok(Some(w)) => Ok(w),
        Ok(None) => Err(Error::Internal(
            "no witness found at the proven optimum size".into(),
        )),
        Err(Expired) => Err(Error::Budget {
            lower_bound: target,
        }),
    }
}

fn dfs_lex(
    ctx: &Ctx,
    members: &mut Vec<usize>,
    bits: &mut VertexSet,
    cands: &[usize],
    target: usize,
    nodes: &mut u64,
) -> std::result::Result<Option<VertexSet>, Expired> {
    *nodes += 1;
    if ctx.expired(*nodes) {
        return Err(Expired);
    }
    if members.len() == target {
        return Ok(Some(bits.clone()));
    }
    for i in 0..cands.len() {
        if members.len() + (cands.len() - i) < target {
            return Ok(None);
        }
        let v = cands[i];
        members.push(v);
        bits.insert(v);
        let filtered: Vec<usize> = cands[i + 1..]
            .iter()
            .copied()
            .filter(|&u| ctx.can_add(members, bits, u))
            .collect();
        if let Some(found) = dfs_lex(ctx, members, bits, &filtered, target, nodes)? {
            return Ok(Some(found));
        }
        members.pop();
        bits.remove(v);
    }
    Ok(None)
}

/// Lexicographic k-combinations of 0..n.
struct Combinations {
    n: usize,
    k: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            k,
            idx: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.idx.clone());
        }
        let mut i = self.k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.idx[i] < self.n - self.k + i {
                self.idx[i] += 1;
                for j in i + 1..self.k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(self.idx.clone());
            }
        }
    }
}
