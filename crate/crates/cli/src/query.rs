//! Query assembly and solver dispatch for `fairpath solve`.

use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;
use fairpath::constraints::MaxMinMode;
use fairpath::format::{parse_bound, parse_graph};
use fairpath::graph::dijkstra_dist;
use fairpath::testkit::oracle_solve;
use fairpath::{
    fpt_solve, solve_balance_fair, solve_exact_distance_any, BoundsSpec, ColoredDigraph, FairnessVariant, NoReason,
    SolveResult, SolverKind, Vertex,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolverChoice {
    /// dp when ell = dist(s, t) and the variant is one spec or balance, else fpt
    Auto,
    Dp,
    Fpt,
    Oracle,
}

/// Command-line query; vertices and colors are 1-based.
#[derive(Debug, Clone)]
pub struct QueryArgs {
    pub source: Option<usize>,
    pub target: Option<usize>,
    pub ell: Option<u64>,
    pub variant: Option<String>,
    pub bounds: Vec<String>,
    pub solver: SolverChoice,
    pub epsilon: f64,
    pub seed: u64,
}

fn vertex(flag: &str, given: Option<usize>, hint: Option<Vertex>, n: usize) -> Result<Vertex> {
    match given {
        Some(v) if v == 0 || v > n => bail!("--{flag} {v} outside 1..={n}"),
        Some(v) => Ok(v - 1),
        None => hint.ok_or_else(|| anyhow!("no --{flag} given and the file has no `c query` line")),
    }
}

fn slack(token: Option<&str>, variant: &str) -> Result<i64> {
    token
        .ok_or_else(|| anyhow!("variant `{variant}` needs a slack"))?
        .parse()
        .with_context(|| format!("invalid slack in `{variant}`"))
}

/// Parses a `--variant` value; `bounds` is the spec used for `bounds`.
pub fn parse_variant(text: &str, bounds: BoundsSpec) -> Result<FairnessVariant> {
    let parts: Vec<&str> = text.split(':').collect();
    let variant = match parts[0] {
        "balance" if parts.len() == 1 => FairnessVariant::Balance,
        "bounds" if parts.len() == 1 => FairnessVariant::ExplicitBounds(bounds),
        "maxmin" if parts.len() <= 3 => {
            let mode = match parts.get(2).copied().unwrap_or("diff") {
                "diff" => MaxMinMode::Difference,
                "quot" => MaxMinMode::Quotient,
                other => bail!("unknown maxmin mode `{other}`, expected diff or quot"),
            };
            FairnessVariant::MaxMin {
                slack: slack(parts.get(1).copied(), text)?,
                mode,
            }
        }
        "proportional" if parts.len() == 2 => FairnessVariant::Proportional {
            slack: slack(parts.get(1).copied(), text)?,
        },
        "mov" if parts.len() == 2 => FairnessVariant::MarginOfVictory {
            slack: slack(parts.get(1).copied(), text)?,
        },
        _ => bail!("unknown variant `{text}`"),
    };
    Ok(variant)
}

/// Colors default to `[0, n]`; file bounds apply first, then `--bounds`.
fn assemble_bounds(graph: &ColoredDigraph, file: &[(usize, u32, u32)], flags: &[String]) -> Result<BoundsSpec> {
    let c = graph.num_colors();
    let mut alphas = vec![0; c];
    let mut betas = vec![graph.n() as u32; c];
    let mut flagged = Vec::new();
    for token in flags {
        flagged.push(parse_bound(token).ok_or_else(|| anyhow!("invalid --bounds `{token}`, expected i:alpha:beta"))?);
    }
    for &(i, a, b) in file.iter().chain(&flagged) {
        if i >= c {
            bail!("bound on color {} but the graph has {c} colors", i + 1);
        }
        alphas[i] = a;
        betas[i] = b;
    }
    Ok(BoundsSpec::new(alphas, betas, None)?)
}

/// First yes, else a no that names the most specific reason.
fn first_yes(results: Vec<SolveResult>, fallback: SolveResult) -> SolveResult {
    let mut best: Option<SolveResult> = None;
    for r in results {
        if r.decision {
            return r;
        }
        let better = match &best {
            None => true,
            Some(b) => b.reason == Some(NoReason::InfeasibleBounds) && r.reason != Some(NoReason::InfeasibleBounds),
        };
        if better {
            best = Some(r);
        }
    }
    best.unwrap_or(fallback)
}

pub fn run_solve(text: &str, query: &QueryArgs) -> Result<SolveResult> {
    let parsed = parse_graph(text)?;
    let graph = &parsed.graph;
    let hint = &parsed.hint;
    let n = graph.n();
    let s = vertex("source", query.source, hint.source, n)?;
    let t = vertex("target", query.target, hint.target, n)?;
    if s == t {
        bail!("source and target coincide");
    }
    let dist = dijkstra_dist(graph, s)?.get(t);
    let explicit_bounds = !query.bounds.is_empty() || !hint.bounds.is_empty();
    let bounds = assemble_bounds(graph, &hint.bounds, &query.bounds)?;
    let variant_text = query
        .variant
        .clone()
        .unwrap_or_else(|| if explicit_bounds { "bounds" } else { "balance" }.to_string());
    let variant = parse_variant(&variant_text, bounds)?;

    let Some(ell) = query.ell.or(hint.ell).or(dist) else {
        let kind = match query.solver {
            SolverChoice::Auto | SolverChoice::Dp => SolverKind::Dp,
            SolverChoice::Fpt => SolverKind::Fpt,
            SolverChoice::Oracle => SolverKind::Oracle,
        };
        return Ok(SolveResult::no(kind, NoReason::Unreachable));
    };
    let balance = variant == FairnessVariant::Balance;
    let max_vertices = (ell.saturating_add(1)).min(n as u64) as u32;
    let specs = variant.compile(graph, max_vertices)?;
    let exact = dist.is_none_or(|d| d == ell);
    let solver = match query.solver {
        SolverChoice::Auto if exact && (balance || specs.len() == 1) => SolverChoice::Dp,
        SolverChoice::Auto => SolverChoice::Fpt,
        other => other,
    };
    Ok(match solver {
        SolverChoice::Dp => {
            if let Some(d) = dist.filter(|&d| d != ell) {
                bail!("the dp solver only answers ell = dist(s, t) = {d}, got ell = {ell}; use --solver fpt");
            }
            if balance {
                solve_balance_fair(graph, s, t)?
            } else if specs.is_empty() {
                SolveResult::no(SolverKind::Dp, NoReason::InfeasibleBounds)
            } else {
                solve_exact_distance_any(graph, s, t, &specs)?
            }
        }
        SolverChoice::Fpt => {
            let mut results = Vec::new();
            for spec in &specs {
                let r = fpt_solve(graph, s, t, spec, ell, query.epsilon, query.seed)?;
                let done = r.decision;
                results.push(r);
                if done {
                    break;
                }
            }
            let fallback =
                SolveResult::no(SolverKind::Fpt, NoReason::InfeasibleBounds).with_randomness(query.seed, query.epsilon);
            first_yes(results, fallback)
        }
        SolverChoice::Oracle => {
            let mut results = Vec::new();
            for spec in &specs {
                let r = oracle_solve(graph, s, t, spec, ell)?;
                let done = r.decision;
                results.push(r);
                if done {
                    break;
                }
            }
            first_yes(results, SolveResult::no(SolverKind::Oracle, NoReason::InfeasibleBounds))
        }
        SolverChoice::Auto => unreachable!("auto resolved above"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use fairpath::format::{write_graph, QueryHint};
    use fairpath::testkit::figure_one;

    fn query(solver: SolverChoice) -> QueryArgs {
        QueryArgs {
            source: None,
            target: None,
            ell: None,
            variant: None,
            bounds: Vec::new(),
            solver,
            epsilon: 0.01,
            seed: 1,
        }
    }

    fn figure_one_text() -> String {
        let (g, s, t) = figure_one();
        let hint = QueryHint {
            source: Some(s),
            target: Some(t),
            ..QueryHint::default()
        };
        write_graph(&g, &hint)
    }

    #[test]
    fn variants_parse() {
        let b = BoundsSpec::uniform(2, 1);
        assert_eq!(parse_variant("balance", b.clone()).unwrap(), FairnessVariant::Balance);
        assert_eq!(
            parse_variant("maxmin:2:quot", b.clone()).unwrap(),
            FairnessVariant::MaxMin {
                slack: 2,
                mode: MaxMinMode::Quotient
            }
        );
        assert_eq!(
            parse_variant("mov:1", b.clone()).unwrap(),
            FairnessVariant::MarginOfVictory { slack: 1 }
        );
        assert!(parse_variant("mov", b.clone()).is_err());
        assert!(parse_variant("maxmin:1:oops", b.clone()).is_err());
        assert!(parse_variant("fancy", b).is_err());
    }

    #[test]
    fn bounds_default_and_override() {
        let (g, _, _) = figure_one();
        let spec = assemble_bounds(&g, &[(0, 1, 2)], &["1:3:4".into()]).unwrap();
        assert_eq!(spec.alphas(), &[3, 0]);
        assert_eq!(spec.betas(), &[4, 18]);
        assert!(assemble_bounds(&g, &[], &["3:0:1".into()]).is_err());
        assert!(assemble_bounds(&g, &[], &["1:0".into()]).is_err());
    }

    #[test]
    fn auto_picks_dp_then_fpt() {
        let text = figure_one_text();
        let r = run_solve(&text, &query(SolverChoice::Auto)).unwrap();
        assert_eq!(r.solver, SolverKind::Dp);
        assert!(r.decision);
        let mut longer = query(SolverChoice::Auto);
        longer.ell = Some(10);
        let r = run_solve(&text, &longer).unwrap();
        assert_eq!(r.solver, SolverKind::Fpt);
        assert!(r.decision);
    }

    #[test]
    fn dp_rejects_slack_budget() {
        let mut q = query(SolverChoice::Dp);
        q.ell = Some(12);
        let err = run_solve(&figure_one_text(), &q).unwrap_err();
        assert!(err.to_string().contains("dist(s, t) = 9"));
    }

    #[test]
    fn all_solvers_agree_on_figure_one_bounds() {
        for bounds in [["1:5:5", "2:5:5"], ["1:6:9", "2:0:4"], ["1:0:3", "2:0:9"]] {
            let answers: Vec<bool> = [SolverChoice::Dp, SolverChoice::Fpt, SolverChoice::Oracle]
                .into_iter()
                .map(|solver| {
                    let mut q = query(solver);
                    q.bounds = bounds.iter().map(|b| b.to_string()).collect();
                    run_solve(&figure_one_text(), &q).unwrap().decision
                })
                .collect();
            assert!(answers.iter().all(|&a| a == answers[0]), "{bounds:?}: {answers:?}");
        }
    }
}
