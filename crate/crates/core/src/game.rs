//! Move operators for the lit-only σ-game and Reeder's game, word actions,
//! and exhaustive orbit search.
//!
//! A lit-only configuration is a vector of `V*`; a move at an *on* vertex
//! toggles all its neighbors. A Reeder configuration is a vector of `V`; a
//! move at `s` flips `s` when it has an odd number of *on* neighbors. Both
//! moves are involutions and satisfy the simply-laced Coxeter relations, so
//! move sequences are words in the vertex generators.
//!
//! Exhaustive searches encode states as `u64` masks and allocate `2^n`
//! entries, so they are guarded by a capacity bound on `n`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::f2::F2Vector;
use crate::forms::OrbitClass;
use crate::graph::Graph;
use crate::masks::MoveTable;
use crate::theta::is_nondegenerate;

/// Default bound on `n` for exhaustive searches.
pub const DEFAULT_CAPACITY: usize = 24;
/// Largest capacity an override may request.
pub const MAX_CAPACITY: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Game {
    /// Lit-only σ-game on configurations in `V*`.
    Lit,
    /// Reeder's game on configurations in `V`.
    Reeder,
}

impl Game {
    #[inline]
    fn step(self, table: &MoveTable, state: u64, s: usize) -> u64 {
        match self {
            Game::Lit => table.lit(state, s),
            Game::Reeder => table.reeder(state, s),
        }
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Game::Lit => "lit",
            Game::Reeder => "reeder",
        })
    }
}

impl FromStr for Game {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lit" => Ok(Game::Lit),
            "reeder" => Ok(Game::Reeder),
            other => Err(format!("unknown game {other:?}; expected lit or reeder")),
        }
    }
}

/// A word in the vertex generators, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MoveWord(Vec<usize>);

impl MoveWord {
    pub fn new(letters: Vec<usize>) -> Self {
        MoveWord(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&s| s >= n) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n }),
            None => Ok(()),
        }
    }
}

impl From<Vec<usize>> for MoveWord {
    fn from(letters: Vec<usize>) -> Self {
        MoveWord(letters)
    }
}

impl fmt::Display for MoveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

fn check_len(g: &Graph, v: &F2Vector) -> Result<()> {
    if v.len() == g.vertex_count() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            found: v.len(),
        })
    }
}

/// `κ_s f = f + f(α_s) Σ_{st∈R} f_t`.
pub fn lit_move(g: &Graph, f: &F2Vector, s: usize) -> Result<F2Vector> {
    check_len(g, f)?;
    g.check_vertex(s)?;
    let mut out = f.clone();
    if f.get(s) {
        for &t in g.neighbors(s) {
            out.flip(t);
        }
    }
    Ok(out)
}

/// `τ_s α = α + B(α_s, α) α_s`.
pub fn reeder_move(g: &Graph, alpha: &F2Vector, s: usize) -> Result<F2Vector> {
    check_len(g, alpha)?;
    g.check_vertex(s)?;
    let mut out = alpha.clone();
    if g.neighbors(s).iter().filter(|&&t| alpha.get(t)).count() % 2 == 1 {
        out.flip(s);
    }
    Ok(out)
}

pub fn apply_word(g: &Graph, w: &MoveWord, v: &F2Vector, game: Game) -> Result<F2Vector> {
    check_len(g, v)?;
    w.check(g.vertex_count())?;
    let mut cur = v.clone();
    for &s in w.letters() {
        cur = match game {
            Game::Lit => lit_move(g, &cur, s)?,
            Game::Reeder => reeder_move(g, &cur, s)?,
        };
    }
    Ok(cur)
}

/// Orders states by on-count, then by numeric value.
#[inline]
fn weight_key(state: u64) -> (u32, u64) {
    (state.count_ones(), state)
}

/// Result of an orbit search from one starting configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSummary {
    pub orbit_size: u64,
    pub min_on: usize,
    /// Least-weight member; ties go to the numerically smallest mask.
    pub min_rep: F2Vector,
    /// A shortest word taking the start to `min_rep`.
    pub witness: MoveWord,
    /// `None` on degenerate graphs.
    pub q_class: Option<OrbitClass>,
}

fn check_capacity(g: &Graph, capacity: usize) -> Result<()> {
    let limit = capacity.min(MAX_CAPACITY);
    if g.vertex_count() > limit {
        Err(Error::Capacity {
            n: g.vertex_count(),
            limit,
        })
    } else {
        Ok(())
    }
}

/// Class of a state: by `Q(θ⁻¹(f))` for the lit game, by `Q(α)` for Reeder's.
fn state_class(table: &MoveTable, game: Game, state: u64, inverse: &ThetaInverse) -> OrbitClass {
    let alpha = match game {
        Game::Lit => inverse.apply(state),
        Game::Reeder => state,
    };
    OrbitClass::from_preimage(alpha == 0, table.q(alpha))
}

/// Columns of `A⁻¹` as masks, for fast `θ⁻¹`.
struct ThetaInverse {
    cols: Vec<u64>,
}

impl ThetaInverse {
    fn new(g: &Graph) -> Option<Self> {
        let n = g.vertex_count();
        let mut cols = Vec::with_capacity(n);
        for t in 0..n {
            let alpha = crate::theta::theta_solve(g, &F2Vector::unit(n, t)).ok()??;
            cols.push(alpha.to_mask()?);
        }
        Some(ThetaInverse { cols })
    }

    fn apply(&self, f: u64) -> u64 {
        let mut out = 0;
        let mut rest = f;
        while rest != 0 {
            out ^= self.cols[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        out
    }
}

/// BFS over the orbit of `start`, returning the summary and every member in
/// ascending mask order.
pub fn orbit_with_members(
    g: &Graph,
    start: &F2Vector,
    game: Game,
    capacity: usize,
) -> Result<(OrbitSummary, Vec<F2Vector>)> {
    check_len(g, start)?;
    check_capacity(g, capacity)?;
    let n = g.vertex_count();
    let table = MoveTable::new(g);
    let s0 = start.to_mask().expect("capacity keeps n <= 64");

    // state -> (predecessor, move) ; the start maps to itself
    let mut parent: HashMap<u64, (u64, u8)> = HashMap::from([(s0, (s0, u8::MAX))]);
    let mut queue = VecDeque::from([s0]);
    let mut best = s0;
    while let Some(x) = queue.pop_front() {
        if weight_key(x) < weight_key(best) {
            best = x;
        }
        for s in 0..n {
            let y = game.step(&table, x, s);
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(y) {
                e.insert((x, s as u8));
                queue.push_back(y);
            }
        }
    }

    let mut word = Vec::new();
    let mut cur = best;
    while cur != s0 {
        let (prev, s) = parent[&cur];
        word.push(s as usize);
        cur = prev;
    }
    word.reverse();

    let q_class = ThetaInverse::new(g)
        .filter(|_| is_nondegenerate(g))
        .map(|inv| state_class(&table, game, s0, &inv));

    let mut members: Vec<u64> = parent.keys().copied().collect();
    members.sort_unstable();
    let summary = OrbitSummary {
        orbit_size: members.len() as u64,
        min_on: best.count_ones() as usize,
        min_rep: F2Vector::from_mask(n, best),
        witness: MoveWord(word),
        q_class,
    };
    Ok((
        summary,
        members
            .into_iter()
            .map(|m| F2Vector::from_mask(n, m))
            .collect(),
    ))
}

pub fn orbit(g: &Graph, start: &F2Vector, game: Game, capacity: usize) -> Result<OrbitSummary> {
    orbit_with_members(g, start, game, capacity).map(|(s, _)| s)
}

/// One orbit in a full partition of the state space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitInfo {
    pub min_rep: u64,
    pub min_on: u32,
    /// Heaviest member; ties go to the numerically largest mask.
    pub max_rep: u64,
    pub size: u64,
}

/// Every state labeled with its orbit, plus a BFS tree inside each orbit
/// rooted at the orbit's minimum representative.
pub struct OrbitPartition {
    n: usize,
    game: Game,
    table: MoveTable,
    labels: Vec<u32>,
    parent_move: Vec<u8>,
    orbits: Vec<OrbitInfo>,
}

const UNSEEN: u32 = u32::MAX;
const ROOT: u8 = u8::MAX;

/// Partitions all `2^n` states into orbits.
///
/// States are swept in order of increasing on-count (then value), so the
/// first state met in each orbit is its minimum representative and orbits
/// come out sorted by it.
pub fn partition_orbits(g: &Graph, game: Game, capacity: usize) -> Result<OrbitPartition> {
    check_capacity(g, capacity)?;
    let n = g.vertex_count();
    let table = MoveTable::new(g);
    let total = 1usize << n;
    let mut labels = vec![UNSEEN; total];
    let mut parent_move = vec![ROOT; total];
    let mut orbits = Vec::new();
    let mut queue: Vec<u64> = Vec::new();

    for weight in 0..=n {
        for root in combinations(n, weight) {
            if labels[root as usize] != UNSEEN {
                continue;
            }
            let label = orbits.len() as u32;
            labels[root as usize] = label;
            queue.clear();
            queue.push(root);
            let mut head = 0;
            let mut heaviest = root;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                if weight_key(x) > weight_key(heaviest) {
                    heaviest = x;
                }
                for s in 0..n {
                    let y = game.step(&table, x, s);
                    let slot = &mut labels[y as usize];
                    if *slot == UNSEEN {
                        *slot = label;
                        parent_move[y as usize] = s as u8;
                        queue.push(y);
                    }
                }
            }
            orbits.push(OrbitInfo {
                min_rep: root,
                min_on: weight as u32,
                max_rep: heaviest,
                size: queue.len() as u64,
            });
        }
    }
    Ok(OrbitPartition {
        n,
        game,
        table,
        labels,
        parent_move,
        orbits,
    })
}

/// All `n`-bit masks with exactly `k` ones, ascending.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut next = if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur)
    })
}

impl OrbitPartition {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn game(&self) -> Game {
        self.game
    }

    /// Orbits sorted by minimum representative (on-count, then value).
    pub fn orbits(&self) -> &[OrbitInfo] {
        &self.orbits
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn label(&self, state: u64) -> usize {
        self.labels[state as usize] as usize
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn info(&self, state: u64) -> &OrbitInfo {
        &self.orbits[self.label(state)]
    }

    pub fn same_orbit(&self, a: u64, b: u64) -> bool {
        self.labels[a as usize] == self.labels[b as usize]
    }

    /// Largest minimum on-count over all orbits.
    pub fn max_min_on(&self) -> usize {
        self.orbits.iter().map(|o| o.min_on).max().unwrap_or(0) as usize
    }

    /// A shortest word taking `state` to its orbit's minimum representative.
    pub fn witness_to_min(&self, state: u64) -> MoveWord {
        let mut word = Vec::new();
        let mut cur = state;
        loop {
            let s = self.parent_move[cur as usize];
            if s == ROOT {
                break;
            }
            word.push(s as usize);
            cur = self.game.step(&self.table, cur, s as usize);
        }
        MoveWord(word)
    }
}

/// Minimum light number and a configuration that cannot be reduced below it.
pub fn min_light_number(g: &Graph, capacity: usize) -> Result<(usize, F2Vector)> {
    let part = partition_orbits(g, Game::Lit, capacity)?;
    let k = part.max_min_on();
    let worst = part
        .orbits()
        .iter()
        .find(|o| o.min_on as usize == k)
        .expect("at least the zero orbit exists");
    Ok((k, F2Vector::from_mask(g.vertex_count(), worst.min_rep)))
}

pub fn is_k_lit(g: &Graph, k: usize, capacity: usize) -> Result<bool> {
    if k >= g.vertex_count() {
        check_capacity(g, capacity)?;
        return Ok(true);
    }
    Ok(min_light_number(g, capacity)?.0 <= k)
}

/// `ρ_u`: replaces every `u` by `z u z`.
pub fn rewrite_word_rho(w: &MoveWord, u: usize, z: usize) -> MoveWord {
    let mut out = Vec::with_capacity(w.len() + 2 * w.letters().iter().filter(|&&s| s == u).count());
    for &s in w.letters() {
        if s == u {
            out.extend([z, u, z]);
        } else {
            out.push(s);
        }
    }
    MoveWord(out)
}

/// `δ_u`: projects a configuration of the subdivided graph onto the original
/// by folding the state of `z` into `u` and dropping coordinate `z`.
///
/// `z` must be the inserted vertex (the last id, of degree two) and `u` one
/// of its neighbors.
pub fn delta_project(ghat: &Graph, u: usize, z: usize, h: &F2Vector) -> Result<F2Vector> {
    check_len(ghat, h)?;
    let n_hat = ghat.vertex_count();
    if n_hat == 0 || z != n_hat - 1 || ghat.degree(z) != 2 {
        return Err(Error::NotSubdivisionVertex(z));
    }
    if !ghat.has_edge(u, z) {
        return Err(Error::NotSubdivisionEndpoint { u, z });
    }
    let mut out = F2Vector::from_indices(n_hat - 1, h.ones().filter(|&i| i != z));
    if h.get(z) {
        out.flip(u);
    }
    Ok(out)
}
