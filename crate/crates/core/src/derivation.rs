//! Partition statements `α ⟶ (β₀, β₁)²` and derivations of them.
//!
//! A [`Derivation`] is a tree of rule applications. Each node records the
//! side conditions it relied on, with the concrete ordinals involved, so that
//! [`verify_derivation`] can replay every node using ordinal arithmetic alone.
//!
//! The product rule (`em_step`) is trusted: from `α ⟶ (k, γ)` with `α`
//! indecomposable and finite `k ≥ 2`, conclude `αβ ⟶ (2k, min(γ, ωβ))` for
//! any `β > 0`. Its countability hypothesis on `β` holds for every value of
//! [`Ordinal`], so it is recorded as satisfied rather than tested.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::ordinal::Ordinal;

/// `source ⟶ (goals[0], goals[1])²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionStatement {
    pub source: Ordinal,
    pub goals: [Ordinal; 2],
}

impl PartitionStatement {
    pub fn new(source: Ordinal, goal0: Ordinal, goal1: Ordinal) -> Self {
        PartitionStatement {
            source,
            goals: [goal0, goal1],
        }
    }

    pub fn to_unicode_string(&self) -> String {
        format!(
            "{} ⟶ ({}, {})",
            self.source.to_unicode_string(),
            self.goals[0].to_unicode_string(),
            self.goals[1].to_unicode_string()
        )
    }
}

impl fmt::Display for PartitionStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> ({}, {})",
            self.source, self.goals[0], self.goals[1]
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Some goal is at most 1 and does not exceed the source.
    Degenerate,
    /// `α ⟶ (2, α)` for `α ≥ 2`.
    TrivialPair,
    /// Exchange the two colors.
    Swap,
    /// Enlarge the source or shrink goals.
    Monotone,
    /// The product rule with right factor `beta`.
    EmStep { beta: Ordinal },
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Degenerate => "degenerate",
            Rule::TrivialPair => "trivial_pair",
            Rule::Swap => "swap",
            Rule::Monotone => "monotone",
            Rule::EmStep { .. } => "em_step",
        }
    }

    fn premise_count(&self) -> usize {
        match self {
            Rule::Degenerate | Rule::TrivialPair => 0,
            Rule::Swap | Rule::Monotone | Rule::EmStep { .. } => 1,
        }
    }
}

/// One checked side condition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Evidence {
    pub condition: String,
    pub values: BTreeMap<String, Ordinal>,
    pub ok: bool,
}

impl Evidence {
    fn new<'a>(
        condition: &str,
        ok: bool,
        values: impl IntoIterator<Item = (&'a str, &'a Ordinal)>,
    ) -> Self {
        Evidence {
            condition: condition.to_string(),
            values: values
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub conclusion: PartitionStatement,
    pub rule: Rule,
    pub premises: Vec<Derivation>,
    pub evidence: Vec<Evidence>,
}

impl Derivation {
    /// Number of nodes on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        1 + self
            .premises
            .iter()
            .map(Derivation::depth)
            .max()
            .unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .premises
            .iter()
            .map(Derivation::node_count)
            .sum::<usize>()
    }

    /// The node reached by following premise indices from the root.
    pub fn node(&self, path: &[usize]) -> Option<&Derivation> {
        path.iter().try_fold(self, |d, &i| d.premises.get(i))
    }

    pub fn node_mut(&mut self, path: &[usize]) -> Option<&mut Derivation> {
        path.iter().try_fold(self, |d, &i| d.premises.get_mut(i))
    }
}

/// A rule application that does not go through.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{rule}: {condition} fails ({detail})")]
pub struct DerivationError {
    pub rule: &'static str,
    pub condition: String,
    pub detail: String,
}

/// Where and why verification failed. `path` lists premise indices from the root.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("node {} ({rule}): {condition}: {detail}", format_path(path))]
pub struct VerifyFailure {
    pub path: Vec<usize>,
    pub rule: &'static str,
    pub condition: String,
    pub detail: String,
}

pub fn format_path(path: &[usize]) -> String {
    let mut s = String::from("root");
    for i in path {
        s.push('/');
        s.push_str(&i.to_string());
    }
    s
}

fn fail(rule: &Rule, evidence: &Evidence) -> DerivationError {
    let detail = evidence
        .values
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(", ");
    DerivationError {
        rule: rule.name(),
        condition: evidence.condition.clone(),
        detail,
    }
}

/// The conclusion a rule produces from its premises, for rules whose
/// conclusion is determined by them.
fn derived_conclusion(rule: &Rule, premises: &[&PartitionStatement]) -> Option<PartitionStatement> {
    match (rule, premises) {
        (Rule::Swap, [p]) => Some(PartitionStatement::new(
            p.source.clone(),
            p.goals[1].clone(),
            p.goals[0].clone(),
        )),
        (Rule::EmStep { beta }, [p]) => {
            let k = &p.goals[0];
            let gamma = &p.goals[1];
            Some(PartitionStatement::new(
                p.source.mul(beta),
                k.add(k),
                gamma.clone().min(Ordinal::omega().mul(beta)),
            ))
        }
        _ => None,
    }
}

/// Evaluates every side condition of `rule` for the step from `premises` to
/// `conclusion`. Shared by rule application and verification.
fn side_conditions(
    rule: &Rule,
    premises: &[&PartitionStatement],
    conclusion: &PartitionStatement,
) -> Vec<Evidence> {
    let [g0, g1] = &conclusion.goals;
    let source = &conclusion.source;
    let one = Ordinal::one();
    let two = Ordinal::from(2);
    match (rule, premises) {
        (Rule::Degenerate, []) => {
            let goal = conclusion.goals.iter().find(|g| **g <= one && *g <= source);
            match goal {
                Some(goal) => vec![Evidence::new(
                    "degenerate_goal",
                    true,
                    [("source", source), ("goal", goal)],
                )],
                None => vec![Evidence::new(
                    "degenerate_goal",
                    false,
                    [("source", source), ("goal_0", g0), ("goal_1", g1)],
                )],
            }
        }
        (Rule::TrivialPair, []) => vec![
            Evidence::new("source_at_least_two", *source >= two, [("source", source)]),
            Evidence::new(
                "goals_are_two_and_source",
                *g0 == two && g1 == source,
                [("source", source), ("goal_0", g0), ("goal_1", g1)],
            ),
        ],
        (Rule::Swap, [p]) => vec![Evidence::new(
            "goals_exchanged",
            p.source == *source && p.goals[0] == *g1 && p.goals[1] == *g0,
            [
                ("premise_source", &p.source),
                ("premise_goal_0", &p.goals[0]),
                ("premise_goal_1", &p.goals[1]),
                ("source", source),
                ("goal_0", g0),
                ("goal_1", g1),
            ],
        )],
        (Rule::Monotone, [p]) => vec![
            Evidence::new(
                "source_not_smaller",
                *source >= p.source,
                [("from", &p.source), ("to", source)],
            ),
            Evidence::new(
                "goal_0_not_larger",
                *g0 <= p.goals[0],
                [("from", &p.goals[0]), ("to", g0)],
            ),
            Evidence::new(
                "goal_1_not_larger",
                *g1 <= p.goals[1],
                [("from", &p.goals[1]), ("to", g1)],
            ),
        ],
        (Rule::EmStep { beta }, [p]) => {
            let alpha = &p.source;
            let k = &p.goals[0];
            let gamma = &p.goals[1];
            let product = alpha.mul(beta);
            let doubled = k.add(k);
            let omega_beta = Ordinal::omega().mul(beta);
            let min_goal = gamma.clone().min(omega_beta.clone());
            vec![
                Evidence::new("k_finite", k.is_finite(), [("k", k)]),
                Evidence::new("k_at_least_two", *k >= two, [("k", k)]),
                Evidence::new(
                    "alpha_indecomposable",
                    alpha.is_indecomposable(),
                    [("alpha", alpha)],
                ),
                Evidence::new("beta_positive", !beta.is_zero(), [("beta", beta)]),
                // every ordinal below ε₀ is countable
                Evidence::new("beta_countable", true, [("beta", beta)]),
                Evidence::new(
                    "source_is_product",
                    product == *source,
                    [("alpha", alpha), ("beta", beta), ("source", source)],
                ),
                Evidence::new(
                    "finite_goal_doubled",
                    doubled == *g0,
                    [("k", k), ("goal_0", g0)],
                ),
                Evidence::new(
                    "ordinal_goal_is_min",
                    min_goal == *g1,
                    [
                        ("gamma", gamma),
                        ("omega_beta", &omega_beta),
                        ("goal_1", g1),
                    ],
                ),
            ]
        }
        _ => vec![Evidence {
            condition: "premise_count".to_string(),
            values: BTreeMap::new(),
            ok: false,
        }],
    }
}

fn apply(
    rule: Rule,
    premises: Vec<Derivation>,
    conclusion: PartitionStatement,
) -> Result<Derivation, DerivationError> {
    let stmts: Vec<&PartitionStatement> = premises.iter().map(|d| &d.conclusion).collect();
    let evidence = side_conditions(&rule, &stmts, &conclusion);
    if let Some(bad) = evidence.iter().find(|e| !e.ok) {
        return Err(fail(&rule, bad));
    }
    Ok(Derivation {
        conclusion,
        rule,
        premises,
        evidence,
    })
}

/// `alpha ⟶ (goals)²` when some goal is 0, or 1 with `alpha ≥ 1`.
pub fn rule_degenerate(alpha: Ordinal, goals: [Ordinal; 2]) -> Result<Derivation, DerivationError> {
    let [g0, g1] = goals;
    apply(
        Rule::Degenerate,
        Vec::new(),
        PartitionStatement::new(alpha, g0, g1),
    )
}

/// `alpha ⟶ (2, alpha)²` for `alpha ≥ 2`.
pub fn rule_trivial_pair(alpha: Ordinal) -> Result<Derivation, DerivationError> {
    apply(
        Rule::TrivialPair,
        Vec::new(),
        PartitionStatement::new(alpha.clone(), Ordinal::from(2), alpha),
    )
}

pub fn rule_swap(premise: Derivation) -> Derivation {
    let conclusion = derived_conclusion(&Rule::Swap, &[&premise.conclusion]).expect("one premise");
    apply(Rule::Swap, vec![premise], conclusion).expect("swapping colors always applies")
}

/// Weakens `premise` to `source ⟶ (goals)²`.
pub fn rule_monotone(
    premise: Derivation,
    source: Ordinal,
    goals: [Ordinal; 2],
) -> Result<Derivation, DerivationError> {
    let [g0, g1] = goals;
    apply(
        Rule::Monotone,
        vec![premise],
        PartitionStatement::new(source, g0, g1),
    )
}

/// From `premise: α ⟶ (k, γ)` derive `αβ ⟶ (2k, min(γ, ωβ))`.
pub fn rule_em_step(premise: Derivation, beta: Ordinal) -> Result<Derivation, DerivationError> {
    let rule = Rule::EmStep { beta };
    let conclusion = derived_conclusion(&rule, &[&premise.conclusion]).expect("one premise");
    apply(rule, vec![premise], conclusion)
}

/// `ω^(1+ν·n) ⟶ (2^n, ω^(1+ν))²`, by induction on `n`: the degenerate rule at
/// `n = 0`, the trivial pair relation at `n = 1`, and the product rule with
/// `k = 2^(n-1)`, `β = ω^ν` for each further step.
pub fn em_headline(nu: &Ordinal, n: u64) -> Derivation {
    let omega = Ordinal::omega();
    let one = Ordinal::one();
    let top_goal = omega.pow(&one.add(nu));
    match n {
        0 => rule_degenerate(omega, [one, top_goal]).expect("goal 1 is degenerate below w"),
        1 => rule_trivial_pair(top_goal).expect("w^(1+nu) >= 2"),
        _ => {
            let premise = em_headline(nu, n - 1);
            let d = rule_em_step(premise, omega.pow(nu)).expect("side conditions hold for n >= 2");
            debug_assert_eq!(d.conclusion, headline_statement(nu, n));
            d
        }
    }
}

/// The statement [`em_headline`] derives, computed directly.
pub fn headline_statement(nu: &Ordinal, n: u64) -> PartitionStatement {
    let omega = Ordinal::omega();
    let one = Ordinal::one();
    let exponent = one.add(&nu.mul(&Ordinal::from(n)));
    let k = Ordinal::from(2).pow(&Ordinal::from(n));
    PartitionStatement::new(omega.pow(&exponent), k, omega.pow(&one.add(nu)))
}

/// `ω^(n·k) ⟶ (ω^n, k)²`. Degenerate when `n = 0` or `k = 0`; otherwise the
/// headline relation with `ν = n-1` and `k-1` steps, weakened from `2^(k-1)`
/// to `k` and from `ω^(1+(n-1)(k-1))` to `ω^(n·k)`, then color-swapped.
pub fn larson_instance(n: u64, k: u64) -> Derivation {
    let omega = Ordinal::omega();
    let source = omega.pow(&Ordinal::from(n * k));
    let omega_n = omega.pow(&Ordinal::from(n));
    let k_ord = Ordinal::from(k);
    if n == 0 || k == 0 {
        return rule_degenerate(source, [omega_n, k_ord]).expect("goal 0 or 1 against source 1");
    }
    let headline = em_headline(&Ordinal::from(n - 1), k - 1);
    let weakened = rule_monotone(headline, source, [k_ord, omega_n])
        .expect("n*k >= 1+(n-1)(k-1) and k <= 2^(k-1)");
    rule_swap(weakened)
}

/// Re-checks every node, premises before their conclusions, and reports the
/// first node whose rule, side conditions or recorded evidence do not hold.
pub fn verify_derivation(d: &Derivation) -> Result<(), VerifyFailure> {
    let mut path = Vec::new();
    verify_node(d, &mut path)
}

fn verify_node(d: &Derivation, path: &mut Vec<usize>) -> Result<(), VerifyFailure> {
    for (i, p) in d.premises.iter().enumerate() {
        path.push(i);
        verify_node(p, path)?;
        path.pop();
    }
    let failure = |condition: &str, detail: String| VerifyFailure {
        path: path.clone(),
        rule: d.rule.name(),
        condition: condition.to_string(),
        detail,
    };
    if d.premises.len() != d.rule.premise_count() {
        return Err(failure(
            "premise_count",
            format!(
                "expected {} premises, found {}",
                d.rule.premise_count(),
                d.premises.len()
            ),
        ));
    }
    let stmts: Vec<&PartitionStatement> = d.premises.iter().map(|p| &p.conclusion).collect();
    if let Some(expected) = derived_conclusion(&d.rule, &stmts) {
        if expected != d.conclusion {
            return Err(failure(
                "conclusion",
                format!("recorded {}, rule yields {}", d.conclusion, expected),
            ));
        }
    }
    let evidence = side_conditions(&d.rule, &stmts, &d.conclusion);
    if let Some(bad) = evidence.iter().find(|e| !e.ok) {
        return Err(failure(&bad.condition, fail(&d.rule, bad).detail));
    }
    if evidence != d.evidence {
        let what = d
            .evidence
            .iter()
            .zip(&evidence)
            .find(|(recorded, actual)| recorded != actual)
            .map(|(recorded, _)| recorded.condition.clone())
            .unwrap_or_else(|| "evidence list length".to_string());
        return Err(failure(
            "evidence",
            format!("recorded evidence does not match replay at {what}"),
        ));
    }
    Ok(())
}
