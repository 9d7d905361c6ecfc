//! Representation type: Gabriel's theorem on the separated quiver for
//! radical square zero, Nakayama and special biserial tests, and arrow
//! multiplicity heuristics. Verdicts are conservative.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::quiver::Quiver;
use crate::tilting::Presentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepType {
    Finite,
    Tame,
    Wild,
    Unknown,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RepType::Finite => "finite",
            RepType::Tame => "tame",
            RepType::Wild => "wild",
            RepType::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// One applied rule and what it found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleOutcome {
    pub rule: String,
    pub citation: String,
    pub outcome: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeVerdict {
    pub verdict: RepType,
    pub evidence: Vec<RuleOutcome>,
}

/// Shape of a connected simple-laced graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphShape {
    Dynkin(String),
    Extended(String),
    Other,
}

/// Classifies a connected undirected multigraph on `n` vertices.
pub fn graph_shape(n: usize, edges: &[(usize, usize)]) -> GraphShape {
    let mut mult: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(a, b) in edges {
        if a == b {
            return if n == 1 && edges.len() == 1 {
                GraphShape::Extended("Ã0".into())
            } else {
                GraphShape::Other
            };
        }
        *mult.entry((a.min(b), a.max(b))).or_default() += 1;
    }
    if mult.values().any(|&m| m > 1) {
        return if n == 2 && edges.len() == 2 {
            GraphShape::Extended("Ã1".into())
        } else {
            GraphShape::Other
        };
    }
    let m = edges.len();
    let mut deg = vec![0usize; n];
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
        adj[a].push(b);
        adj[b].push(a);
    }
    if m == n {
        return if deg.iter().all(|&d| d == 2) {
            GraphShape::Extended(format!("Ã{}", n - 1))
        } else {
            GraphShape::Other
        };
    }
    if m + 1 != n {
        return GraphShape::Other;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    // length of the arm leaving `from` through `first`
    let arm = |from: usize, first: usize| {
        let (mut prev, mut cur, mut len) = (from, first, 1);
        while deg[cur] == 2 {
            let next = if adj[cur][0] == prev {
                adj[cur][1]
            } else {
                adj[cur][0]
            };
            prev = cur;
            cur = next;
            len += 1;
        }
        (len, deg[cur] == 1)
    };
    match branch.as_slice() {
        [] => GraphShape::Dynkin(format!("A{n}")),
        [c] if deg[*c] == 4 => {
            if n == 5 {
                GraphShape::Extended("D̃4".into())
            } else {
                GraphShape::Other
            }
        }
        [c] if deg[*c] == 3 => {
            let mut arms: Vec<usize> = adj[*c].iter().map(|&x| arm(*c, x).0).collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => GraphShape::Dynkin(format!("D{n}")),
                [1, 2, 2] => GraphShape::Dynkin("E6".into()),
                [1, 2, 3] => GraphShape::Dynkin("E7".into()),
                [1, 2, 4] => GraphShape::Dynkin("E8".into()),
                [2, 2, 2] => GraphShape::Extended("Ẽ6".into()),
                [1, 3, 3] => GraphShape::Extended("Ẽ7".into()),
                [1, 2, 5] => GraphShape::Extended("Ẽ8".into()),
                _ => GraphShape::Other,
            }
        }
        [a, b] if deg[*a] == 3 && deg[*b] == 3 => {
            // D̃: each branch point carries two leaves
            let leaves = |c: usize| adj[c].iter().filter(|&&x| arm(c, x) == (1, true)).count();
            if leaves(*a) == 2 && leaves(*b) == 2 {
                GraphShape::Extended(format!("D̃{}", n - 1))
            } else {
                GraphShape::Other
            }
        }
        _ => GraphShape::Other,
    }
}

/// For radical square zero algebras: the type of the separated quiver
/// read through Gabriel's theorem and its tame extension.
pub fn classify_separated(q: &Quiver) -> TypeVerdict {
    let s = q.separated();
    let mut shapes = Vec::new();
    for comp in s.connected_components() {
        let index: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let edges: Vec<(usize, usize)> = s
            .arrows()
            .iter()
            .filter(|a| index.contains_key(&a.source))
            .map(|a| (index[&a.source], index[&a.target]))
            .collect();
        shapes.push(graph_shape(comp.len(), &edges));
    }
    let names: Vec<String> = shapes
        .iter()
        .map(|g| match g {
            GraphShape::Dynkin(x) | GraphShape::Extended(x) => x.clone(),
            GraphShape::Other => "non-Dynkin".into(),
        })
        .collect();
    let verdict = if shapes.contains(&GraphShape::Other) {
        RepType::Wild
    } else if shapes.iter().any(|g| matches!(g, GraphShape::Extended(_))) {
        RepType::Tame
    } else {
        RepType::Finite
    };
    TypeVerdict {
        verdict,
        evidence: vec![RuleOutcome {
            rule: "separated_quiver".into(),
            citation: "Gabriel; Donovan-Freislich, Nazarova (radical square zero)".into(),
            outcome: format!("components {}: {verdict}", names.join(" + ")),
        }],
    }
}

/// Every vertex has at most one arrow in and one arrow out.
pub fn is_nakayama(q: &Quiver) -> bool {
    (0..q.num_vertices()).all(|v| q.arrows_from(v).count() <= 1 && q.arrows_to(v).count() <= 1)
}

/// At most two arrows in and out of each vertex, and for each arrow `β` at
/// most one `γ` with `γβ` nonzero and at most one `α` with `βα` nonzero.
/// A length-two path lies in the ideal exactly when it vanishes, so a
/// failure is decisive for any presentation. A pass counts only for
/// monomial presentations; otherwise the answer is `None`.
pub fn is_special_biserial(p: &Presentation) -> Option<bool> {
    let q = &p.quiver;
    let degrees_ok =
        (0..q.num_vertices()).all(|v| q.arrows_from(v).count() <= 2 && q.arrows_to(v).count() <= 2);
    let uniqueness_ok = (0..q.arrows().len()).all(|b| {
        let arrow = q.arrow(b);
        let after = q
            .arrows_from(arrow.target)
            .filter(|&g| p.is_nonzero_pair(b, g))
            .count();
        let before = q
            .arrows_to(arrow.source)
            .filter(|&a| p.is_nonzero_pair(a, b))
            .count();
        after <= 1 && before <= 1
    });
    match (degrees_ok && uniqueness_ok, p.monomial) {
        (false, _) => Some(false),
        (true, true) => Some(true),
        (true, false) => None,
    }
}

fn max_parallel_arrows(q: &Quiver) -> usize {
    let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for a in q.arrows() {
        *count.entry((a.source, a.target)).or_default() += 1;
    }
    count.values().copied().max().unwrap_or(0)
}

fn rule(rule: &str, citation: &str, outcome: impl Into<String>) -> RuleOutcome {
    RuleOutcome {
        rule: rule.into(),
        citation: citation.into(),
        outcome: outcome.into(),
    }
}

/// Applies the rules in order and stops at the first decision: triple
/// arrows, separated quiver (Loewy length at most 2), Nakayama, special
/// biserial, double arrows.
pub fn classify(p: &Presentation) -> TypeVerdict {
    let q = &p.quiver;
    let mut evidence = Vec::new();
    let par = max_parallel_arrows(q);
    if par >= 3 {
        evidence.push(rule(
            "triple_arrows",
            "triple arrows give wild type",
            format!("{par} parallel arrows"),
        ));
        return TypeVerdict {
            verdict: RepType::Wild,
            evidence,
        };
    }
    evidence.push(rule(
        "triple_arrows",
        "triple arrows give wild type",
        "none",
    ));
    if p.loewy_length <= 2 {
        let mut v = classify_separated(q);
        evidence.append(&mut v.evidence);
        return TypeVerdict {
            verdict: v.verdict,
            evidence,
        };
    }
    evidence.push(rule(
        "separated_quiver",
        "radical square zero only",
        "not applicable",
    ));
    if is_nakayama(q) {
        evidence.push(rule(
            "nakayama",
            "Nakayama algebras have finite type",
            "nakayama",
        ));
        return TypeVerdict {
            verdict: RepType::Finite,
            evidence,
        };
    }
    evidence.push(rule(
        "nakayama",
        "Nakayama algebras have finite type",
        "not nakayama",
    ));
    match is_special_biserial(p) {
        Some(true) => {
            evidence.push(rule(
                "special_biserial",
                "Wald-Waschbüsch: special biserial algebras are tame",
                "special biserial",
            ));
            return TypeVerdict {
                verdict: RepType::Tame,
                evidence,
            };
        }
        Some(false) => evidence.push(rule(
            "special_biserial",
            "Wald-Waschbüsch",
            "not special biserial",
        )),
        None => evidence.push(rule(
            "special_biserial",
            "Wald-Waschbüsch",
            "undecided: presentation not monomial",
        )),
    }
    if par == 2 {
        evidence.push(rule(
            "double_arrows",
            "double arrows give infinite type",
            "infinite",
        ));
    } else {
        evidence.push(rule(
            "double_arrows",
            "double arrows give infinite type",
            "none",
        ));
    }
    evidence.push(rule(
        "wildness",
        "no implemented criterion certifies wild type",
        "undecided: neither finite nor tame by the rules above, possibly wild",
    ));
    TypeVerdict {
        verdict: RepType::Unknown,
        evidence,
    }
}

/// `Λ_L = KQ / <paths of length L>`.
pub fn classify_truncated(q: &Quiver, l: usize) -> TypeVerdict {
    classify(&Presentation::truncated(q, l))
}
