//! Checks closed-form predictions against exhaustive computation on the
//! constructed graphs.
//!
//! Every statement has a short id (`thm3.7`, `eq1`, ...) used on the command
//! line. An instance grid is a `;`-separated list of items; each item is a
//! `,`-separated list of graph names (see [`crate::named`]) and `key=range`
//! fields, where a range is `a` or `a..b` (inclusive). Ranges expand to their
//! cartesian product, e.g. `K3,t=2..5` gives four instances.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::action::SymmetryAction;
use crate::combinatorics::{factorial, stirling2};
use crate::config::Budget;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::formulas::{self, radical, Check, Prediction, Relation};
use crate::graph::{disjoint_union, Graph, RootedGraph};
use crate::indices::{is_steady, restriction_property};
use crate::io::graph6;
use crate::named::{parse_graph, parse_rooted};
use crate::par;
use crate::products;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "eq1")]
    PathCount,
    #[serde(rename = "eq2")]
    StirlingCount,
    #[serde(rename = "thm2.1")]
    UnionThreshold,
    #[serde(rename = "thm3.5")]
    SteadyRestriction,
    #[serde(rename = "thm3.7")]
    VertexSumPower,
    #[serde(rename = "cor3.8")]
    CompleteSum,
    #[serde(rename = "cor3.9")]
    CycleSum,
    #[serde(rename = "thm3.10")]
    NonIsomorphicSum,
    #[serde(rename = "thm3.12")]
    TwoConnectedSumThreshold,
    #[serde(rename = "thm3.13")]
    CycleSumThreshold,
    #[serde(rename = "thm4.2")]
    RootedGroup,
    #[serde(rename = "thm4.3")]
    RootedD,
    #[serde(rename = "thm4.4")]
    RootedThreshold,
    #[serde(rename = "eq3")]
    CoronaGroup,
    #[serde(rename = "thm5.1")]
    CoronaD,
    #[serde(rename = "thm5.2")]
    CoronaThreshold,
    #[serde(rename = "thm6.1")]
    LexThreshold,
    #[serde(rename = "lexd")]
    LexD,
}

impl TheoremId {
    pub const ALL: [TheoremId; 18] = [
        TheoremId::PathCount,
        TheoremId::StirlingCount,
        TheoremId::UnionThreshold,
        TheoremId::SteadyRestriction,
        TheoremId::VertexSumPower,
        TheoremId::CompleteSum,
        TheoremId::CycleSum,
        TheoremId::NonIsomorphicSum,
        TheoremId::TwoConnectedSumThreshold,
        TheoremId::CycleSumThreshold,
        TheoremId::RootedGroup,
        TheoremId::RootedD,
        TheoremId::RootedThreshold,
        TheoremId::CoronaGroup,
        TheoremId::CoronaD,
        TheoremId::CoronaThreshold,
        TheoremId::LexThreshold,
        TheoremId::LexD,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::PathCount => "eq1",
            TheoremId::StirlingCount => "eq2",
            TheoremId::UnionThreshold => "thm2.1",
            TheoremId::SteadyRestriction => "thm3.5",
            TheoremId::VertexSumPower => "thm3.7",
            TheoremId::CompleteSum => "cor3.8",
            TheoremId::CycleSum => "cor3.9",
            TheoremId::NonIsomorphicSum => "thm3.10",
            TheoremId::TwoConnectedSumThreshold => "thm3.12",
            TheoremId::CycleSumThreshold => "thm3.13",
            TheoremId::RootedGroup => "thm4.2",
            TheoremId::RootedD => "thm4.3",
            TheoremId::RootedThreshold => "thm4.4",
            TheoremId::CoronaGroup => "eq3",
            TheoremId::CoronaD => "thm5.1",
            TheoremId::CoronaThreshold => "thm5.2",
            TheoremId::LexThreshold => "thm6.1",
            TheoremId::LexD => "lexd",
        }
    }

    /// One line on what is compared.
    pub fn summary(self) -> &'static str {
        match self {
            TheoremId::PathCount => "Φ_k(P_n) = (k^n − k^⌈n/2⌉)/2",
            TheoremId::StirlingCount => "φ_k = k!·S(n,k)/|Aut| for k ≥ θ",
            TheoremId::UnionThreshold => "θ of a disjoint union of connected graphs",
            TheoremId::SteadyRestriction => "steady ⇔ distinguishing colorings restrict to G − u",
            TheoremId::VertexSumPower => "D(G_u^t) ≤ min{k : Φ_k(G−u) ≥ t}, equal when u is steady",
            TheoremId::CompleteSum => "D of t copies of K_n at a vertex",
            TheoremId::CycleSum => "D of t copies of C_n at a vertex",
            TheoremId::NonIsomorphicSum => "D of a sum of non-isomorphic 2-connected graphs",
            TheoremId::TwoConnectedSumThreshold => "θ of a sum of 2-connected graphs = θ(G') + 1",
            TheoremId::CycleSumThreshold => "θ of t copies of C_n at a vertex",
            TheoremId::RootedGroup => "|Aut(G_s(H))| = |Aut(G)|·|Aut(H,v)|^|G|",
            TheoremId::RootedD => "D(G_s(H)) = min{k : Φ_k(H,v) ≥ D(G)}",
            TheoremId::RootedThreshold => "θ(G_s(H)) = (|G|−1)|H| + θ(H,v)",
            TheoremId::CoronaGroup => "|Aut(G⊙H)| = |Aut(G)|·|Aut(H)|^|G|",
            TheoremId::CoronaD => "D(G⊙H) = min{k : k·Φ_k(H) ≥ D(G)}",
            TheoremId::CoronaThreshold => "θ(G⊙H) by whether H has symmetry",
            TheoremId::LexThreshold => "θ(G∘H) by whether H has symmetry",
            TheoremId::LexD => "D(G∘H) = min{k : Φ_k(H) ≥ D(G)}",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        let key = s.trim().to_ascii_lowercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.id() == key)
            .ok_or_else(|| Error::Precondition(format!("unknown theorem id {s:?}")))
    }
}

/// A named graph as it appears in a grid.
#[derive(Debug, Clone)]
pub struct Named<T> {
    pub name: String,
    pub value: T,
}

fn named_graph(token: &str) -> Result<Named<Graph>> {
    Ok(Named { name: token.to_string(), value: parse_graph(token)? })
}

fn named_rooted(token: &str) -> Result<Named<RootedGraph>> {
    let value = parse_rooted(token)?;
    let name = if token.contains('@') { token.to_string() } else { format!("{token}@{}", value.root()) };
    Ok(Named { name, value })
}

fn g6_name(g: &Graph) -> String {
    format!("g6:{}", graph6::encode(g))
}

/// One input to one statement.
#[derive(Debug, Clone)]
pub enum Instance {
    Sizes { n: u64, t: u64 },
    PathCount { n: u64, k: u64 },
    Single(Named<Graph>),
    Vertex { graph: Named<Graph>, u: usize },
    Power { base: Named<RootedGraph>, t: usize },
    Factors(Vec<Named<RootedGraph>>),
    Union(Vec<Named<Graph>>),
    Rooted { g: Named<Graph>, h: Named<RootedGraph> },
    Pair { g: Named<Graph>, h: Named<Graph> },
}

impl Instance {
    pub fn describe(&self) -> String {
        let join = |names: Vec<&str>| names.join(",");
        match self {
            Instance::Sizes { n, t } => format!("n={n},t={t}"),
            Instance::PathCount { n, k } => format!("n={n},k={k}"),
            Instance::Single(g) => g.name.clone(),
            Instance::Vertex { graph, u } => format!("{}@{u}", graph.name),
            Instance::Power { base, t } => format!("{},t={t}", base.name),
            Instance::Factors(fs) => join(fs.iter().map(|f| f.name.as_str()).collect()),
            Instance::Union(gs) => join(gs.iter().map(|g| g.name.as_str()).collect()),
            Instance::Rooted { g, h } => format!("{},{}", g.name, h.name),
            Instance::Pair { g, h } => format!("{},{}", g.name, h.name),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Agree,
    Disagree,
    /// A hypothesis of the statement fails on this input.
    Inconclusive,
    /// The instance did not fit the resource budget.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem_id: TheoremId,
    pub instance: String,
    pub predicted: Option<u64>,
    pub brute_force: Option<u64>,
    pub relation: Relation,
    pub preconditions_met: bool,
    pub agree: bool,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub checks: Vec<Check>,
}

impl TheoremVerdict {
    fn from_error(id: TheoremId, instance: String, err: Error) -> TheoremVerdict {
        let status = if err.is_budget() || matches!(err, Error::TooManyVertices { .. }) {
            Status::Skipped
        } else {
            Status::Inconclusive
        };
        TheoremVerdict {
            theorem_id: id,
            instance,
            predicted: None,
            brute_force: None,
            relation: Relation::Equal,
            preconditions_met: false,
            agree: false,
            status,
            case: None,
            reason: Some(err.to_string()),
            checks: Vec::new(),
        }
    }

    fn judge(id: TheoremId, instance: String, prediction: Prediction, truth: u64) -> TheoremVerdict {
        let met = prediction.preconditions_met();
        let agree = prediction.accepts(truth);
        let (status, reason) = if !met {
            let failed = prediction.failed_check().expect("some check failed");
            let why = if failed.detail.is_empty() { format!("{} fails", failed.name) } else { failed.detail.clone() };
            (Status::Inconclusive, Some(why))
        } else if agree {
            (Status::Agree, None)
        } else {
            (Status::Disagree, None)
        };
        TheoremVerdict {
            theorem_id: id,
            instance,
            predicted: Some(prediction.value),
            brute_force: Some(truth),
            relation: prediction.relation,
            preconditions_met: met,
            agree,
            status,
            case: prediction.case,
            reason,
            checks: prediction.checks,
        }
    }
}

/// Exhaustive values for one graph.
struct Truth {
    action: SymmetryAction,
}

impl Truth {
    fn of(g: &Graph, budget: &Budget) -> Result<Truth> {
        Ok(Truth { action: SymmetryAction::full(g, budget)? })
    }

    fn d(&self, budget: &Budget) -> Result<u64> {
        Ok(self.action.distinguishing_number(budget)? as u64)
    }

    fn theta(&self) -> u64 {
        self.action.theta() as u64
    }

    fn aut(&self) -> u64 {
        self.action.aut_order()
    }
}

fn wrong_shape(id: TheoremId, inst: &Instance) -> Error {
    Error::Precondition(format!("{id} does not take an instance of the form {:?}", inst.describe()))
}

/// A prediction with the exhaustive value it is compared against. The truth
/// is kept as a result so that a failed hypothesis outranks a blown budget.
type Row = (Prediction, Result<u64>, String);

fn evaluate_inner(id: TheoremId, inst: &Instance, budget: &Budget) -> Result<Vec<Row>> {
    use TheoremId as T;
    let desc = inst.describe();
    let one = |p: Prediction, t: Result<u64>| Ok(vec![(p, t, desc.clone())]);
    let exact = |v: u64| Prediction { value: v, relation: Relation::Equal, checks: Vec::new(), case: None };
    let truth = |g: &Graph| Truth::of(g, budget);
    match (id, inst) {
        (T::PathCount, Instance::PathCount { n, k }) => {
            let p = exact(formulas::phi_path_closed(*n, *k)?);
            let count = || {
                let action = SymmetryAction::full(&Graph::path(*n as usize)?, budget)?;
                let labeled: u64 = action.count_colorings(*k as usize, budget)?.iter().sum();
                action.divide_by_group(labeled)
            };
            one(p, count())
        }
        (T::StirlingCount, Instance::Single(g)) => {
            let action = SymmetryAction::full(&g.value, budget)?;
            let n = g.value.order() as u64;
            let theta = action.theta();
            let mut out = Vec::new();
            for k in theta..=theta + 2 {
                let labeled = factorial(k as u64)?
                    .checked_mul(stirling2(n, k as u64)?)
                    .ok_or(Error::Overflow("coloring count"))?;
                let mut p = exact(labeled / action.aut_order());
                p.checks.push(Check {
                    name: "|Aut| divides k!·S(n,k)".into(),
                    holds: labeled % action.aut_order() == 0,
                    detail: String::new(),
                });
                let count = action.count_colorings(k, budget).and_then(|c| action.divide_by_group(c[k]));
                out.push((p, count, format!("{},k={k}", g.name)));
            }
            Ok(out)
        }
        (T::UnionThreshold, Instance::Union(parts)) => {
            let graphs: Vec<Graph> = parts.iter().map(|p| p.value.clone()).collect();
            let p = formulas::theta_union(&graphs, budget)?;
            let (u, _) = disjoint_union(&graphs)?;
            one(p, truth(&u).map(|t| t.theta()))
        }
        (T::SteadyRestriction, Instance::Vertex { graph, u }) => {
            let mut p = exact(u64::from(is_steady(&graph.value, *u, budget)?));
            p.checks.push(Check { name: "G connected".into(), holds: graph.value.is_connected(), detail: String::new() });
            one(p, restriction_property(&graph.value, *u, budget).map(u64::from))
        }
        (T::VertexSumPower, Instance::Power { base, t }) => {
            let p = formulas::d_vertex_sum_power(base.value.graph(), base.value.root(), *t, budget)?;
            let (g, _) = products::vertex_sum_power(base.value.graph(), base.value.root(), *t)?;
            one(p, truth(&g).and_then(|t| t.d(budget)))
        }
        (T::CompleteSum | T::CycleSum | T::CycleSumThreshold, Instance::Sizes { n, t }) => {
            let p = exact(match id {
                T::CompleteSum => formulas::d_vsum_complete_closed(*n, *t)?,
                T::CycleSum => formulas::d_vsum_cycles(*n, *t)?,
                _ => formulas::theta_vsum_cycles(*n, *t)?,
            });
            let base = if id == T::CompleteSum { Graph::complete(*n as usize)? } else { Graph::cycle(*n as usize)? };
            let (g, _) = products::vertex_sum_power(&base, 0, *t as usize)?;
            let value = truth(&g).and_then(|tr| if id == T::CycleSumThreshold { Ok(tr.theta()) } else { tr.d(budget) });
            one(p, value)
        }
        (T::NonIsomorphicSum | T::TwoConnectedSumThreshold, Instance::Factors(fs)) => {
            let factors: Vec<RootedGraph> = fs.iter().map(|f| f.value.clone()).collect();
            let (g, _) = products::vertex_sum(&factors)?;
            if id == T::NonIsomorphicSum {
                one(formulas::d_vsum_nonisomorphic(&factors, budget)?, truth(&g).and_then(|t| t.d(budget)))
            } else {
                one(formulas::theta_vsum_2connected(&factors, budget)?, truth(&g).map(|t| t.theta()))
            }
        }
        (T::RootedGroup | T::RootedD | T::RootedThreshold, Instance::Rooted { g, h }) => {
            let (prod, _) = products::rooted_product_smooth(&g.value, &h.value)?;
            match id {
                T::RootedGroup => one(formulas::rooted_aut_order(&g.value, &h.value, budget)?, truth(&prod).map(|t| t.aut())),
                T::RootedD => one(formulas::d_rooted(&g.value, &h.value, budget)?, truth(&prod).and_then(|t| t.d(budget))),
                _ => one(formulas::theta_rooted(&g.value, &h.value, budget)?, truth(&prod).map(|t| t.theta())),
            }
        }
        (T::CoronaGroup | T::CoronaD | T::CoronaThreshold, Instance::Pair { g, h }) => {
            let (prod, _) = products::corona(&g.value, &h.value)?;
            match id {
                T::CoronaGroup => one(formulas::corona_aut_order(&g.value, &h.value, budget)?, truth(&prod).map(|t| t.aut())),
                T::CoronaD => one(formulas::d_corona(&g.value, &h.value, budget)?, truth(&prod).and_then(|t| t.d(budget))),
                _ => one(formulas::theta_corona(&g.value, &h.value, budget)?, truth(&prod).map(|t| t.theta())),
            }
        }
        (T::LexThreshold | T::LexD, Instance::Pair { g, h }) => {
            let (prod, _) = products::lexicographic(&g.value, &h.value)?;
            if id == T::LexThreshold {
                one(formulas::theta_lexicographic(&g.value, &h.value, budget)?, truth(&prod).map(|t| t.theta()))
            } else {
                one(formulas::d_lexicographic(&g.value, &h.value, budget)?, truth(&prod).and_then(|t| t.d(budget)))
            }
        }
        _ => Err(wrong_shape(id, inst)),
    }
}

fn settle(id: TheoremId, (p, truth, desc): Row) -> TheoremVerdict {
    match truth {
        Ok(t) => TheoremVerdict::judge(id, desc, p, t),
        Err(e) if p.preconditions_met() => TheoremVerdict::from_error(id, desc, e),
        Err(e) => {
            let mut v = TheoremVerdict::judge(id, desc, p, 0);
            v.brute_force = None;
            v.agree = false;
            if let Some(r) = v.reason.as_mut() {
                r.push_str(&format!("; exhaustive value not computed: {e}"));
            }
            v
        }
    }
}

/// Verdicts for one instance; `eq2` yields one per palette size.
pub fn evaluate(id: TheoremId, inst: &Instance, budget: &Budget) -> Vec<TheoremVerdict> {
    match evaluate_inner(id, inst, budget) {
        Ok(rows) => rows.into_iter().map(|row| settle(id, row)).collect(),
        Err(e) => vec![TheoremVerdict::from_error(id, inst.describe(), e)],
    }
}

/// Evaluates every instance, in parallel when the budget allows; output
/// keeps input order.
pub fn run(id: TheoremId, instances: Vec<Instance>, budget: &Budget) -> Vec<TheoremVerdict> {
    par::map(instances, budget.parallel, |inst| evaluate(id, &inst, budget)).into_iter().flatten().collect()
}

// ---------------------------------------------------------------------------
// Grids

fn parse_range(key: &str, raw: &str) -> Result<Vec<u64>> {
    let bad = || Error::Precondition(format!("bad range for {key}: {raw:?}"));
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    match raw.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(raw)?]),
    }
}

struct Item {
    graphs: Vec<String>,
    keys: Vec<(String, Vec<u64>)>,
}

impl Item {
    fn parse(raw: &str) -> Result<Item> {
        let mut graphs = Vec::new();
        let mut keys = Vec::new();
        for field in raw.split(',').map(str::trim).filter(|f| !f.is_empty()) {
            match field.split_once('=') {
                Some((k, v)) => {
                    let k = k.trim().to_string();
                    let range = parse_range(&k, v)?;
                    keys.push((k, range));
                }
                None => graphs.push(field.to_string()),
            }
        }
        Ok(Item { graphs, keys })
    }

    fn range(&self, key: &str) -> Result<Vec<u64>> {
        self.keys
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, r)| r.clone())
            .ok_or_else(|| Error::Precondition(format!("missing {key}=... in grid item")))
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.keys.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            Some((k, _)) => Err(Error::Precondition(format!("unexpected key {k:?}"))),
            None => Ok(()),
        }
    }

    fn graph_count(&self, lo: usize, hi: usize) -> Result<()> {
        let n = self.graphs.len();
        if n < lo || n > hi {
            let want = if lo == hi { format!("{lo}") } else if hi == usize::MAX { format!("at least {lo}") } else { format!("{lo} to {hi}") };
            return Err(Error::Precondition(format!("expected {want} graph names, found {n}")));
        }
        Ok(())
    }
}

/// `n` from `n=...` or from a single `K<n>` / `C<n>` name.
fn sizes_n(item: &Item, prefix: char) -> Result<Vec<u64>> {
    if let Some(name) = item.graphs.first() {
        let n = name
            .strip_prefix(prefix)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Precondition(format!("expected {prefix}<n>, found {name:?}")))?;
        return Ok(vec![n]);
    }
    item.range("n")
}

/// Expands one grid string for `id`.
pub fn parse_grid(id: TheoremId, spec: &str) -> Result<Vec<Instance>> {
    use TheoremId as T;
    let mut out = Vec::new();
    for raw in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let item = Item::parse(raw)?;
        match id {
            T::PathCount => {
                item.check_keys(&["n", "k"])?;
                item.graph_count(0, 0)?;
                for n in item.range("n")? {
                    for k in item.range("k")? {
                        out.push(Instance::PathCount { n, k });
                    }
                }
            }
            T::StirlingCount => {
                item.check_keys(&[])?;
                item.graph_count(1, 1)?;
                out.push(Instance::Single(named_graph(&item.graphs[0])?));
            }
            T::SteadyRestriction => {
                item.check_keys(&[])?;
                item.graph_count(1, 1)?;
                let token = &item.graphs[0];
                if token.rsplit_once('@').is_some_and(|(_, r)| !r.is_empty() && r.bytes().all(|b| b.is_ascii_digit())) {
                    let r = named_rooted(token)?;
                    let name = token.rsplit_once('@').map(|(n, _)| n.to_string()).unwrap_or_default();
                    out.push(Instance::Vertex { u: r.value.root(), graph: Named { name, value: r.value.graph().clone() } });
                } else {
                    let g = named_graph(token)?;
                    for u in 0..g.value.order() {
                        out.push(Instance::Vertex { graph: g.clone(), u });
                    }
                }
            }
            T::CompleteSum | T::CycleSum | T::CycleSumThreshold => {
                item.check_keys(&["n", "t"])?;
                item.graph_count(0, 1)?;
                let prefix = if id == T::CompleteSum { 'K' } else { 'C' };
                for n in sizes_n(&item, prefix)? {
                    for t in item.range("t")? {
                        out.push(Instance::Sizes { n, t });
                    }
                }
            }
            T::VertexSumPower => {
                item.check_keys(&["t"])?;
                item.graph_count(1, 1)?;
                let base = named_rooted(&item.graphs[0])?;
                for t in item.range("t")? {
                    out.push(Instance::Power { base: base.clone(), t: t as usize });
                }
            }
            T::NonIsomorphicSum | T::TwoConnectedSumThreshold => {
                item.check_keys(&[])?;
                item.graph_count(2, usize::MAX)?;
                out.push(Instance::Factors(item.graphs.iter().map(|g| named_rooted(g)).collect::<Result<_>>()?));
            }
            T::UnionThreshold => {
                item.check_keys(&[])?;
                item.graph_count(1, usize::MAX)?;
                out.push(Instance::Union(item.graphs.iter().map(|g| named_graph(g)).collect::<Result<_>>()?));
            }
            T::RootedGroup | T::RootedD | T::RootedThreshold => {
                item.check_keys(&[])?;
                item.graph_count(2, 2)?;
                out.push(Instance::Rooted { g: named_graph(&item.graphs[0])?, h: named_rooted(&item.graphs[1])? });
            }
            T::CoronaGroup | T::CoronaD | T::CoronaThreshold | T::LexThreshold | T::LexD => {
                item.check_keys(&[])?;
                item.graph_count(2, 2)?;
                out.push(Instance::Pair { g: named_graph(&item.graphs[0])?, h: named_graph(&item.graphs[1])? });
            }
        }
    }
    Ok(out)
}

fn fixture(n: usize) -> Result<Vec<Named<Graph>>> {
    Ok(fixtures::connected(n)?.into_iter().map(|g| Named { name: g6_name(&g), value: g }).collect())
}

/// One root per orbit of `Aut(H)`.
fn root_representatives(h: &Graph, budget: &Budget) -> Result<Vec<usize>> {
    let group = crate::autgroup::enumerate_automorphisms(h, budget)?;
    Ok(group.orbits().into_iter().map(|o| o[0]).collect())
}

/// Ordered pairs of fixture graphs with `lo ≤ |G|, |H|` and `cost(|G|, |H|) ≤ cap`.
fn fixture_pairs(lo: usize, cap: usize, cost: impl Fn(usize, usize) -> usize) -> Result<Vec<(Named<Graph>, Named<Graph>)>> {
    let mut out = Vec::new();
    for gn in lo..=fixtures::MAX_ORDER {
        for hn in lo..=fixtures::MAX_ORDER {
            if cost(gn, hn) > cap {
                continue;
            }
            for g in fixture(gn)? {
                for h in fixture(hn)? {
                    out.push((g.clone(), h));
                }
            }
        }
    }
    Ok(out)
}

/// The instances run by `verify all`.
pub fn default_grid(id: TheoremId, budget: &Budget) -> Result<Vec<Instance>> {
    use TheoremId as T;
    let g = |spec: &str| parse_grid(id, spec);
    match id {
        T::PathCount => g("n=2..8,k=1..4"),
        T::StirlingCount => Ok((1..=6).map(fixture).collect::<Result<Vec<_>>>()?.into_iter().flatten().map(Instance::Single).collect()),
        T::SteadyRestriction => {
            let mut out = Vec::new();
            for graph in (1..=6).map(fixture).collect::<Result<Vec<_>>>()?.into_iter().flatten() {
                for u in 0..graph.value.order() {
                    out.push(Instance::Vertex { graph: graph.clone(), u });
                }
            }
            Ok(out)
        }
        T::UnionThreshold => g(
            "K2,K2; P3,P3,P3; C4,K3; K2,P3,C5; P4,C4,K4-e; \
             asym6,asym6; asym6,asym7; asym6,asym6,asym7; asym7; asym6,asym7,asym7; \
             K2,asym6; P3,asym6,asym6; C4,asym6,asym7; K3,asym7,asym7; P14,asym6; P12,asym6",
        ),
        T::VertexSumPower => g("K3,t=2..5; K4,t=2..4; C5,t=2..3; C4,t=2..3; K4-e@0,t=2; P4@0,t=2; P3@1,t=2..3; S3@1,t=2"),
        T::CompleteSum => g("n=2..3,t=2..5; n=4,t=2..4; n=5,t=2"),
        T::CycleSum => g("n=3..4,t=2..4; n=5,t=2..3; n=6..7,t=2"),
        T::NonIsomorphicSum => g("K3@0,K4-e@0; S3@0,P3@1; K3@0,K4@0; C4@0,K4@0; C4@0,C5@0; K3@0,C4@0,K4@0; C5@0,petersen@0; K4-e@1,C4@0"),
        T::TwoConnectedSumThreshold => g("K3,K3; C4,C4; C5,C5; K3,C4,C5; K4,K4; K3,K4,C4; K4-e@1,K4-e@1; K3x3,C5; K4-e@0,K3"),
        T::CycleSumThreshold => g("n=3..6,t=2..3; n=7,t=2"),
        T::RootedGroup | T::RootedD | T::RootedThreshold => {
            let mut out = Vec::new();
            for (g, h) in fixture_pairs(2, 12, |a, b| a * b)? {
                for v in root_representatives(&h.value, budget)? {
                    let rooted = RootedGraph::new(h.value.clone(), v)?;
                    out.push(Instance::Rooted { g: g.clone(), h: Named { name: format!("{}@{v}", h.name), value: rooted } });
                }
            }
            out.extend(g("K5,P2@0; C5,P2@0; K2,P3@1; P2,P2@0; P2,P3@0")?);
            Ok(out)
        }
        T::CoronaGroup | T::CoronaD | T::CoronaThreshold => {
            let mut out: Vec<Instance> = fixture_pairs(1, 12, |a, b| a * (b + 1))?
                .into_iter()
                .filter(|(g, _)| g.value.order() >= 2)
                .map(|(g, h)| Instance::Pair { g, h })
                .collect();
            out.extend(g("P2,K2; K3,E2; C4,E2")?);
            if id == T::CoronaThreshold {
                out.extend(g("K1,K2; K1,C4; K1,P3")?);
            }
            Ok(out)
        }
        T::LexThreshold | T::LexD => {
            let mut out: Vec<Instance> =
                fixture_pairs(1, 12, |a, b| a * b)?.into_iter().map(|(g, h)| Instance::Pair { g, h }).collect();
            out.extend(g("C6,K2; C5,E2; P3,E3; C4,K1; K1,C5; K1,petersen")?);
            Ok(out)
        }
    }
}

// ---------------------------------------------------------------------------
// Radical closed forms

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalRow {
    pub family: String,
    pub t: u64,
    pub min_form: u64,
    pub radical: u64,
    pub agree: bool,
}

/// The printed radical expressions for `K3`, `K4`, `K5` and odd cycles `C5`,
/// `C7` against their defining min-forms, for `t` in `lo..=hi`.
pub fn radical_table(lo: u64, hi: u64) -> Result<Vec<RadicalRow>> {
    let mut out = Vec::new();
    let mut push = |family: &str, t: u64, min_form: u64, radical: u64| {
        out.push(RadicalRow { family: family.into(), t, min_form, radical, agree: min_form == radical });
    };
    for t in lo..=hi {
        push("K3", t, formulas::d_vsum_complete_closed(3, t)?, radical::k3(t));
        push("K4", t, formulas::d_vsum_complete_closed(4, t)?, radical::k4(t));
        push("K5", t, formulas::d_vsum_complete_closed(5, t)?, radical::k5(t));
        for n in [3u64, 5, 7] {
            push(&format!("C{n}"), t, formulas::d_vsum_cycles(n, t)?, radical::odd_cycle(n, t));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.id().parse::<TheoremId>().unwrap(), t);
            assert_eq!(serde_json::to_string(&t).unwrap(), format!("\"{}\"", t.id()));
        }
        assert!("thm9.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn grid_parsing() {
        let g = parse_grid(TheoremId::VertexSumPower, "K3,t=2..5").unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g[0].describe(), "K3@0,t=2");
        let g = parse_grid(TheoremId::PathCount, "n=2..3,k=1..2; n=4,k=1").unwrap();
        assert_eq!(g.len(), 5);
        let g = parse_grid(TheoremId::CompleteSum, "K4,t=2").unwrap();
        assert!(matches!(g[0], Instance::Sizes { n: 4, t: 2 }));
        assert!(parse_grid(TheoremId::VertexSumPower, "K3").is_err());
        assert!(parse_grid(TheoremId::VertexSumPower, "K3,t=5..2").is_err());
        assert!(parse_grid(TheoremId::CoronaD, "K3").is_err());
        assert!(parse_grid(TheoremId::CoronaD, "K3,K2,x=1").is_err());
        assert_eq!(parse_grid(TheoremId::SteadyRestriction, "P4").unwrap().len(), 4);
        assert_eq!(parse_grid(TheoremId::SteadyRestriction, "P4@1").unwrap().len(), 1);
    }

    #[test]
    fn complete_sums_agree() {
        let v = run(TheoremId::VertexSumPower, parse_grid(TheoremId::VertexSumPower, "K3,t=2..5").unwrap(), &b());
        assert!(v.iter().all(|x| x.status == Status::Agree), "{v:#?}");
        let d: Vec<u64> = v.iter().map(|x| x.brute_force.unwrap()).collect();
        assert_eq!(d, [3, 3, 4, 4]);
    }

    #[test]
    fn corona_threshold_example() {
        let v = run(TheoremId::CoronaThreshold, parse_grid(TheoremId::CoronaThreshold, "P2,K2").unwrap(), &b());
        assert_eq!((v[0].predicted, v[0].brute_force, v[0].status), (Some(6), Some(6), Status::Agree));
    }

    #[test]
    fn figure_one_is_inconclusive() {
        let v = run(TheoremId::NonIsomorphicSum, parse_grid(TheoremId::NonIsomorphicSum, "K3@0,K4-e@0").unwrap(), &b());
        assert_eq!(v[0].status, Status::Inconclusive);
        assert_eq!(v[0].reason.as_deref(), Some("root not steady in factor 2"));
        assert_eq!((v[0].predicted, v[0].brute_force), (Some(3), Some(2)));
    }

    #[test]
    fn budget_turns_into_skip() {
        let tight = Budget { max_aut: 10, ..b() };
        let v = run(TheoremId::CompleteSum, parse_grid(TheoremId::CompleteSum, "n=4,t=3").unwrap(), &tight);
        assert_eq!(v[0].status, Status::Skipped);
        assert!(v[0].reason.as_deref().unwrap().contains("cap"));
    }

    #[test]
    fn radical_mismatches_reported() {
        let rows = radical_table(2, 4).unwrap();
        let k3: Vec<_> = rows.iter().filter(|r| r.family == "K3" && !r.agree).map(|r| r.t).collect();
        assert_eq!(k3, [2, 4]);
    }
}
