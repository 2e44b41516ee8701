//! Mutations of valid derivations, each recording the node it touched.

use ordpart::{Derivation, Ordinal, Rule};
use rand::seq::SliceRandom;
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tamper {
    BumpGoal,
    BumpSource,
    ForgeValue,
    ForgeFlag,
    ChangeBeta,
    DropPremise,
    /// Bump the first goal and rewrite the recorded evidence to match, so
    /// only a recomputation of the side conditions can catch it.
    ForgeConsistent,
}

pub const ALL: [Tamper; 7] = [
    Tamper::BumpGoal,
    Tamper::BumpSource,
    Tamper::ForgeValue,
    Tamper::ForgeFlag,
    Tamper::ChangeBeta,
    Tamper::DropPremise,
    Tamper::ForgeConsistent,
];

pub fn paths(d: &Derivation) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for (i, p) in d.premises.iter().enumerate() {
        for mut sub in paths(p) {
            sub.insert(0, i);
            out.push(sub);
        }
    }
    out
}

fn applicable(node: &Derivation, t: Tamper) -> bool {
    match t {
        Tamper::ChangeBeta => matches!(node.rule, Rule::EmStep { .. }),
        Tamper::DropPremise => !node.premises.is_empty(),
        Tamper::ForgeValue | Tamper::ForgeFlag => !node.evidence.is_empty(),
        Tamper::BumpGoal | Tamper::BumpSource => true,
        Tamper::ForgeConsistent => matches!(node.rule, Rule::EmStep { .. } | Rule::TrivialPair),
    }
}

/// Applies `t` at `path`. Returns false when `t` does not fit that node.
pub fn apply(d: &mut Derivation, path: &[usize], t: Tamper) -> bool {
    let node = d.node_mut(path).expect("path exists");
    if !applicable(node, t) {
        return false;
    }
    let one = Ordinal::one();
    match t {
        Tamper::BumpGoal => {
            if node.rule == Rule::Degenerate {
                let g = node.conclusion.source.add(&one);
                node.conclusion.goals = [g.clone(), g];
            } else {
                let g = &mut node.conclusion.goals[0];
                *g = g.add(&one);
            }
        }
        Tamper::BumpSource => {
            node.conclusion.source = node.conclusion.source.add(&one);
        }
        Tamper::ForgeValue => {
            let e = &mut node.evidence[0];
            let (_, v) = e.values.iter_mut().next().expect("evidence names a value");
            *v = v.add(&one);
        }
        Tamper::ForgeFlag => {
            let e = node.evidence.last_mut().unwrap();
            e.ok = !e.ok;
        }
        Tamper::ChangeBeta => {
            if let Rule::EmStep { beta } = &mut node.rule {
                *beta = beta.add(&one);
            }
        }
        Tamper::DropPremise => {
            node.premises.clear();
        }
        Tamper::ForgeConsistent => {
            let old = node.conclusion.goals[0].clone();
            let new = old.add(&one);
            node.conclusion.goals[0] = new.clone();
            for e in &mut node.evidence {
                if let Some(v) = e.values.get_mut("goal_0") {
                    *v = new.clone();
                }
                e.ok = true;
            }
        }
    }
    true
}

/// A mutation of kind `t` at a random node where it applies.
pub fn random_of<R: Rng>(
    rng: &mut R,
    d: &Derivation,
    t: Tamper,
) -> Option<(Derivation, Vec<usize>)> {
    let mut all = paths(d);
    all.shuffle(rng);
    all.into_iter().find_map(|path| {
        let mut out = d.clone();
        apply(&mut out, &path, t).then_some((out, path))
    })
}

/// A random applicable mutation of `d`, with the path it touched.
pub fn random<R: Rng>(rng: &mut R, d: &Derivation) -> (Derivation, Vec<usize>, Tamper) {
    let all = paths(d);
    loop {
        let path = all.choose(rng).unwrap().clone();
        let t = *ALL.choose(rng).unwrap();
        let mut out = d.clone();
        if apply(&mut out, &path, t) {
            return (out, path, t);
        }
    }
}
