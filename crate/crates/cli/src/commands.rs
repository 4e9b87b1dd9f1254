//! Reports behind `analyze`, `orbits` and `minlight`.

use std::fmt::Write as _;

use serde::Serialize;
use sigma_core::theta::radical;
use sigma_core::{
    alternating_counts, edge_type, enumerate_perfect_matchings, eval_q, orbit, partition_orbits,
    q_kernel, theta_preimage, tree_perfect_matching, Error, F2Vector, Game, Graph, Matching,
    OrbitClass,
};

/// Backtracking over perfect matchings of non-trees is skipped above this.
pub const GENERAL_MATCHING_LIMIT: usize = 24;

#[derive(Clone, Debug, Serialize)]
pub struct EdgeTypeRow {
    pub edge: [usize; 2],
    #[serde(rename = "type")]
    pub kind: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub n: usize,
    pub edge_count: usize,
    pub edges: Vec<[usize; 2]>,
    pub is_connected: bool,
    pub is_tree: bool,
    pub is_path: bool,
    /// `false` when the graph was too large for the general matching search.
    pub matching_searched: bool,
    pub perfect_matching: Option<Vec<[usize; 2]>>,
    pub nondegenerate: bool,
    pub rank: usize,
    pub radical_dim: usize,
    pub radical_basis: Vec<String>,
    pub ker_q_dim: usize,
    pub ker_q_basis: Vec<String>,
    /// `a_s` per vertex; trees with a perfect matching only.
    pub a_values: Option<Vec<usize>>,
    pub edge_types: Option<Vec<EdgeTypeRow>>,
}

fn pairs(m: &Matching) -> Vec<[usize; 2]> {
    m.pairs().map(|e| [e.lo(), e.hi()]).collect()
}

pub fn analyze(g: &Graph) -> Result<AnalyzeReport, Error> {
    let rk = radical(g);
    let is_tree = g.is_tree();
    let (matching_searched, matching) = if is_tree {
        (true, tree_perfect_matching(g)?)
    } else if g.vertex_count() <= GENERAL_MATCHING_LIMIT {
        (true, enumerate_perfect_matchings(g, 1).into_iter().next())
    } else {
        (false, None)
    };

    let (a_values, edge_types) = match (&matching, is_tree) {
        (Some(m), true) => {
            let a = alternating_counts(g, m)?;
            let types = g
                .edges()
                .map(|e| {
                    let (s, t) = e.endpoints();
                    Ok(EdgeTypeRow {
                        edge: [s, t],
                        kind: edge_type(g, m, s, t)?.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            (Some(a), Some(types))
        }
        _ => (None, None),
    };

    let ker_q = q_kernel(g);
    Ok(AnalyzeReport {
        n: g.vertex_count(),
        edge_count: g.edge_count(),
        edges: g.edges().map(|e| [e.lo(), e.hi()]).collect(),
        is_connected: g.is_connected(),
        is_tree,
        is_path: g.is_path(),
        matching_searched,
        perfect_matching: matching.as_ref().map(pairs),
        nondegenerate: rk.is_invertible(),
        rank: rk.rank,
        radical_dim: rk.kernel.len(),
        radical_basis: rk.kernel.iter().map(F2Vector::to_bitstring).collect(),
        ker_q_dim: ker_q.len(),
        ker_q_basis: ker_q.iter().map(F2Vector::to_bitstring).collect(),
        a_values,
        edge_types,
    })
}

impl AnalyzeReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let yn = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "vertices      {}", self.n);
        let _ = writeln!(out, "edges         {}", self.edge_count);
        let _ = writeln!(out, "connected     {}", yn(self.is_connected));
        let _ = writeln!(out, "tree          {}", yn(self.is_tree));
        let _ = writeln!(out, "path          {}", yn(self.is_path));
        let pm = match (&self.perfect_matching, self.matching_searched) {
            (Some(p), _) => p
                .iter()
                .map(|[u, v]| format!("{{{u},{v}}}"))
                .collect::<Vec<_>>()
                .join(" "),
            (None, true) => "none".into(),
            (None, false) => "not searched".into(),
        };
        let _ = writeln!(out, "matching      {pm}");
        let _ = writeln!(out, "nondegenerate {}", yn(self.nondegenerate));
        let _ = writeln!(out, "rank          {}", self.rank);
        let _ = writeln!(out, "radical dim   {}", self.radical_dim);
        for b in &self.radical_basis {
            let _ = writeln!(out, "  {b}");
        }
        let _ = writeln!(out, "ker Q dim     {}", self.ker_q_dim);
        for b in &self.ker_q_basis {
            let _ = writeln!(out, "  {b}");
        }
        if let Some(a) = &self.a_values {
            let _ = writeln!(out, "vertex  a_s");
            for (s, v) in a.iter().enumerate() {
                let _ = writeln!(out, "{s:>6}  {v}");
            }
        }
        if let Some(types) = &self.edge_types {
            let _ = writeln!(out, "edge      type");
            for row in types {
                let e = format!("{{{},{}}}", row.edge[0], row.edge[1]);
                let _ = writeln!(out, "{e:<9} {}", row.kind);
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitRow {
    pub size: u64,
    pub min_on: usize,
    pub min_rep: String,
    pub q_class: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitTable {
    pub game: String,
    pub n: usize,
    pub orbit_count: usize,
    pub orbits: Vec<OrbitRow>,
}

/// Class of a state for `game`, or `None` on degenerate graphs.
fn class_of(g: &Graph, game: Game, state: &F2Vector) -> Result<Option<OrbitClass>, Error> {
    let alpha = match game {
        Game::Lit => match theta_preimage(g, state) {
            Ok(a) => a,
            Err(Error::Degenerate { .. }) => return Ok(None),
            Err(e) => return Err(e),
        },
        Game::Reeder if radical(g).is_invertible() => state.clone(),
        Game::Reeder => return Ok(None),
    };
    Ok(Some(OrbitClass::from_preimage(
        alpha.is_zero(),
        eval_q(g, &alpha)?,
    )))
}

pub fn orbit_table(g: &Graph, game: Game, capacity: usize) -> Result<OrbitTable, Error> {
    let n = g.vertex_count();
    let part = partition_orbits(g, game, capacity)?;
    let orbits = part
        .orbits()
        .iter()
        .map(|o| {
            let rep = F2Vector::from_mask(n, o.min_rep);
            Ok(OrbitRow {
                size: o.size,
                min_on: o.min_on as usize,
                q_class: class_of(g, game, &rep)?.map(|c| c.to_string()),
                min_rep: rep.to_bitstring(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(OrbitTable {
        game: game.to_string(),
        n,
        orbit_count: orbits.len(),
        orbits,
    })
}

impl OrbitTable {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} game, {} orbits", self.game, self.orbit_count);
        let w = self.n.max("min_rep".len());
        let _ = writeln!(
            out,
            "{:>10}  {:>6}  {:<w$}  class",
            "size", "min_on", "min_rep"
        );
        for r in &self.orbits {
            let _ = writeln!(
                out,
                "{:>10}  {:>6}  {:<w$}  {}",
                r.size,
                r.min_on,
                r.min_rep,
                r.q_class.as_deref().unwrap_or("-")
            );
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigOrbit {
    pub game: String,
    pub config: String,
    pub orbit_size: u64,
    pub min_on: usize,
    pub min_rep: String,
    pub witness: Vec<usize>,
    pub q_class: Option<String>,
}

pub fn config_orbit(
    g: &Graph,
    game: Game,
    config: &F2Vector,
    capacity: usize,
) -> Result<ConfigOrbit, Error> {
    let sum = orbit(g, config, game, capacity)?;
    Ok(ConfigOrbit {
        game: game.to_string(),
        config: config.to_bitstring(),
        orbit_size: sum.orbit_size,
        min_on: sum.min_on,
        min_rep: sum.min_rep.to_bitstring(),
        witness: sum.witness.letters().to_vec(),
        q_class: sum.q_class.map(|c| c.to_string()),
    })
}

impl ConfigOrbit {
    pub fn to_text(&self) -> String {
        let word: Vec<String> = self.witness.iter().map(|s| s.to_string()).collect();
        format!(
            "{} game, config {}\norbit size  {}\nmin_on      {}\nmin_rep     {}\nwitness     [{}]\nclass       {}\n",
            self.game,
            self.config,
            self.orbit_size,
            self.min_on,
            self.min_rep,
            word.join(" "),
            self.q_class.as_deref().unwrap_or("-"),
        )
    }
}

/// One orbit in a `minlight` report: a shortest word from the orbit's
/// heaviest member down to its minimum representative.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessRow {
    pub from: String,
    pub to: String,
    pub min_on: usize,
    pub word: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinLightReport {
    pub n: usize,
    pub min_light_number: usize,
    pub worst_config: String,
    pub orbits: Vec<WitnessRow>,
}

pub fn min_light(g: &Graph, capacity: usize) -> Result<MinLightReport, Error> {
    let n = g.vertex_count();
    let part = partition_orbits(g, Game::Lit, capacity)?;
    let k = part.max_min_on();
    let orbits: Vec<WitnessRow> = part
        .orbits()
        .iter()
        .map(|o| WitnessRow {
            from: F2Vector::from_mask(n, o.max_rep).to_bitstring(),
            to: F2Vector::from_mask(n, o.min_rep).to_bitstring(),
            min_on: o.min_on as usize,
            word: part.witness_to_min(o.max_rep).letters().to_vec(),
        })
        .collect();
    let worst = orbits
        .iter()
        .find(|r| r.min_on == k)
        .map(|r| r.to.clone())
        .expect("the zero orbit always exists");
    Ok(MinLightReport {
        n,
        min_light_number: k,
        worst_config: worst,
        orbits,
    })
}

impl MinLightReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "min light number {}", self.min_light_number);
        let _ = writeln!(out, "worst config     {}", self.worst_config);
        let w = self.n.max(4);
        let _ = writeln!(out, "{:<w$}  {:<w$}  word", "from", "to");
        for r in &self.orbits {
            let word: Vec<String> = r.word.iter().map(|s| s.to_string()).collect();
            let _ = writeln!(out, "{:<w$}  {:<w$}  [{}]", r.from, r.to, word.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sigma_core::catalog;

    #[test]
    fn e6_analysis() {
        let r = analyze(&catalog::dynkin_e6()).unwrap();
        assert!(r.is_tree && r.nondegenerate && !r.is_path);
        assert_eq!(r.perfect_matching, Some(vec![[0, 1], [2, 3], [4, 5]]));
        let a = r.a_values.unwrap();
        // a_5 = 1, a_6 = 2 in 1-based labels
        assert_eq!((a[4], a[5]), (1, 2));
        let types = r.edge_types.unwrap();
        let e45 = types.iter().find(|t| t.edge == [4, 5]).unwrap();
        assert_eq!(e45.kind, "odd");
    }

    #[test]
    fn star_analysis() {
        let r = analyze(&catalog::star(3)).unwrap();
        assert_eq!(r.perfect_matching, None);
        assert_eq!(r.radical_dim, 2);
        assert!(!r.nondegenerate);
        assert!(r.a_values.is_none());
    }

    #[test]
    fn ladder_matching_found() {
        let r = analyze(&catalog::ladder_8()).unwrap();
        assert!(!r.is_tree);
        assert_eq!(
            r.perfect_matching,
            Some(vec![[0, 1], [2, 3], [4, 5], [6, 7]])
        );
        assert!(r.edge_types.is_none());
    }

    #[test]
    fn p2_orbits() {
        let t = orbit_table(&catalog::path(2), Game::Lit, 24).unwrap();
        let sizes: Vec<u64> = t.orbits.iter().map(|o| o.size).collect();
        assert_eq!(sizes, vec![1, 3]);
        assert_eq!(t.orbits[0].q_class.as_deref(), Some("ZeroOrbit"));
    }

    #[test]
    fn witnesses_reach_minimum() {
        let g = catalog::ladder_8();
        let r = min_light(&g, 24).unwrap();
        assert_eq!(r.min_light_number, 2);
        for row in &r.orbits {
            let from: F2Vector = row.from.parse().unwrap();
            let w = sigma_core::MoveWord::new(row.word.clone());
            let end = sigma_core::apply_word(&g, &w, &from, Game::Lit).unwrap();
            assert_eq!(end.to_bitstring(), row.to);
        }
    }
}
