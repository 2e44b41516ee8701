use std::cmp::Ordering;
use std::fs;

use num_bigint::BigUint;
use ordpart::derivation::{em_headline, format_path, larson_instance, verify_derivation};
use ordpart::interval::IntervalError;
use ordpart::json::{
    coloring_document, derivation_document, document, fin_set_value, interval_set_value,
    ordinal_value, read_coloring, read_derivation, statement_value, JsonError,
};
use ordpart::partition::{
    check_arrow_finite_with, decomposable_coloring, sierpinski_coloring, ArrowVerdict,
    PartitionError, RepeatEnumeration,
};
use ordpart::{
    Derivation, FinOrdSet, IntervalSet, Ordinal, PairColoring, ParseError, TableColoring,
};
use serde_json::{json, Value};

use crate::{CheckArgs, EmCmd, HomogArgs, IsetCmd, OrdCmd, RamseyCmd, WitnessArgs, WitnessKind};

#[derive(Debug)]
pub struct Failure {
    pub code: &'static str,
    pub message: String,
}

impl Failure {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::new("syntax", e.to_string())
    }
}

impl From<IntervalError> for Failure {
    fn from(e: IntervalError) -> Self {
        Failure::new("precondition", e.to_string())
    }
}

impl From<PartitionError> for Failure {
    fn from(e: PartitionError) -> Self {
        Failure::new("precondition", e.to_string())
    }
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Self {
        Failure::new("document", e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    True = 0,
    False = 1,
    Inconclusive = 3,
}

pub struct Outcome {
    pub doc: Value,
    pub text: String,
    pub status: Status,
}

impl Outcome {
    fn ok(kind: &str, body: Value, text: String) -> Self {
        Outcome {
            doc: document(kind, body),
            text,
            status: Status::True,
        }
    }

    fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Style {
    pub unicode: bool,
}

impl Style {
    fn ord(&self, x: &Ordinal) -> String {
        if self.unicode {
            x.to_unicode_string()
        } else {
            x.to_string()
        }
    }

    fn set(&self, s: &IntervalSet) -> String {
        if self.unicode {
            s.to_unicode_string()
        } else {
            s.to_string()
        }
    }

    fn fin(&self, s: &FinOrdSet) -> String {
        let items: Vec<String> = s.elements().iter().map(|x| self.ord(x)).collect();
        format!("{{{}}}", items.join(", "))
    }

    fn statement(&self, d: &Derivation) -> String {
        if self.unicode {
            d.conclusion.to_unicode_string()
        } else {
            d.conclusion.to_string()
        }
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn ordinal(text: &str) -> Result<Ordinal> {
    Ok(text.parse()?)
}

fn interval_set(text: &str) -> Result<IntervalSet> {
    Ok(text.parse()?)
}

fn read_file(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Failure::new("io", format!("{path}: {e}")))
}

pub fn ord(cmd: OrdCmd, st: Style) -> Result<Outcome> {
    Ok(match cmd {
        OrdCmd::Eval { expr } => {
            let x = ordinal(&expr)?;
            Outcome::ok(
                "ordinal",
                json!({ "ordinal": ordinal_value(&x) }),
                st.ord(&x),
            )
        }
        OrdCmd::Cmp { left, right } => {
            let (a, b) = (ordinal(&left)?, ordinal(&right)?);
            let sym = match a.cmp(&b) {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            Outcome::ok(
                "comparison",
                json!({ "left": a, "right": b, "result": sym }),
                sym.to_string(),
            )
        }
        OrdCmd::Cnf { expr } => {
            let x = ordinal(&expr)?;
            let terms: Vec<String> = x
                .terms()
                .iter()
                .map(|t| format!("({}, {})", st.ord(t.exponent()), t.coefficient()))
                .collect();
            Outcome::ok(
                "ordinal",
                json!({ "ordinal": ordinal_value(&x) }),
                format!("[{}]", terms.join(", ")),
            )
        }
        OrdCmd::Indecomp { expr } => {
            let x = ordinal(&expr)?;
            let yes = x.is_indecomposable();
            Outcome::ok(
                "indecomposable",
                json!({ "ordinal": x, "indecomposable": yes }),
                if yes { "yes" } else { "no" }.to_string(),
            )
            .with_status(if yes { Status::True } else { Status::False })
        }
        OrdCmd::Split { expr } => {
            let x = ordinal(&expr)?;
            match x.split_decomposable() {
                Some((b, c)) => Outcome::ok(
                    "split",
                    json!({ "ordinal": x, "split": { "beta": b, "gamma": c } }),
                    format!("({}, {})", st.ord(&b), st.ord(&c)),
                ),
                None => Outcome::ok(
                    "split",
                    json!({ "ordinal": x, "split": null }),
                    "indecomposable".to_string(),
                )
                .with_status(Status::False),
            }
        }
        OrdCmd::Code { expr } => {
            let x = ordinal(&expr)?;
            let code = x.godel_code().to_string();
            Outcome::ok("code", json!({ "ordinal": x, "code": code }), code)
        }
        OrdCmd::Decode { code } => {
            let n: BigUint = code
                .trim()
                .parse()
                .map_err(|_| Failure::new("syntax", format!("not a natural number: {code:?}")))?;
            match Ordinal::godel_decode(&n) {
                Some(x) => Outcome::ok(
                    "decode",
                    json!({ "code": n.to_string(), "ordinal": ordinal_value(&x) }),
                    st.ord(&x),
                ),
                None => Outcome::ok(
                    "decode",
                    json!({ "code": n.to_string(), "ordinal": null }),
                    "none".to_string(),
                )
                .with_status(Status::False),
            }
        }
    })
}

pub fn iset(cmd: IsetCmd, st: Style) -> Result<Outcome> {
    Ok(match cmd {
        IsetCmd::Otype { set } => {
            let s = interval_set(&set)?;
            let tp = s.order_type();
            Outcome::ok(
                "order_type",
                json!({ "set": interval_set_value(&s), "order_type": tp }),
                st.ord(&tp),
            )
        }
        IsetCmd::Trim(args) => {
            let a = interval_set(&args.a)?;
            let a1 = interval_set(&args.a1)?;
            let x = ordinal(&args.x)?;
            let alpha = ordinal(&args.alpha)?;
            let a2 = IntervalSet::trim_above(&a, &a1, &x, &alpha)?;
            Outcome::ok(
                "trim",
                json!({ "alpha": alpha, "x": x, "result": interval_set_value(&a2) }),
                st.set(&a2),
            )
        }
        IsetCmd::Segment(args) => {
            let beta = ordinal(&args.beta)?;
            let cuts = args
                .f
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(ordinal)
                .collect::<Result<Vec<_>>>()?;
            let pieces = IntervalSet::segment_partition(&beta, &cuts)?;
            let text = pieces
                .iter()
                .map(|p| st.set(p))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::ok(
                "segments",
                json!({
                    "beta": beta,
                    "cuts": cuts,
                    "pieces": pieces.iter().map(interval_set_value).collect::<Vec<_>>(),
                }),
                text,
            )
        }
        IsetCmd::Strong(args) => {
            let d = interval_set(&args.d)?;
            let beta = ordinal(&args.beta)?;
            let pieces = IntervalSet::strong_decompose_set(&d, &beta)?;
            let text = pieces
                .iter()
                .map(|p| format!("{}\t{}", st.set(p), st.ord(&p.order_type())))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::ok(
                "strong_decomposition",
                json!({
                    "beta": beta,
                    "set": interval_set_value(&d),
                    "pieces": pieces.iter().map(interval_set_value).collect::<Vec<_>>(),
                }),
                text,
            )
        }
    })
}

fn table_text(t: &TableColoring, st: Style) -> String {
    t.pairs()
        .map(|(x, y, c)| format!("{} {} {}", st.ord(x), st.ord(y), c))
        .collect::<Vec<_>>()
        .join("\n")
}

fn read_table(path: &str) -> Result<TableColoring> {
    match read_coloring(&read_file(path)?)? {
        PairColoring::Table(t) => Ok(t),
        PairColoring::Rule(_) => Err(Failure::new(
            "document",
            format!("{path}: expected a tabulated coloring"),
        )),
    }
}

fn check(args: CheckArgs, st: Style) -> Result<Outcome> {
    let witness = args.witness.as_deref().map(read_table).transpose()?;
    let verdict = check_arrow_finite_with(args.n, &args.goals, args.cap, witness.as_ref())?;
    let (name, status) = match &verdict {
        ArrowVerdict::HoldsDegenerate => ("holds_degenerate", Status::True),
        ArrowVerdict::Holds => ("holds", Status::True),
        ArrowVerdict::Refuted(_) => ("refuted", Status::False),
        ArrowVerdict::Inconclusive => ("inconclusive", Status::Inconclusive),
    };
    let goals: Vec<String> = args.goals.iter().map(ToString::to_string).collect();
    let head = format!("{} -> ({})", args.n, goals.join(", "));
    let (witness_value, text) = match &verdict {
        ArrowVerdict::Refuted(t) => (
            ordpart::json::coloring_value(&PairColoring::Table(t.clone())),
            format!("false: {head}\n{}", table_text(t, st)),
        ),
        ArrowVerdict::Inconclusive => (
            Value::Null,
            format!("inconclusive: {head} (n exceeds cap {})", args.cap),
        ),
        ArrowVerdict::HoldsDegenerate => (Value::Null, format!("true: {head} (degenerate)")),
        ArrowVerdict::Holds => (Value::Null, format!("true: {head}")),
    };
    Ok(Outcome::ok(
        "arrow",
        json!({
            "n": args.n,
            "goals": args.goals,
            "cap": args.cap,
            "verdict": name,
            "witness": witness_value,
        }),
        text,
    )
    .with_status(status))
}

fn homog(args: HomogArgs, st: Style) -> Result<Outcome> {
    let t = read_table(&args.coloring)?;
    if args.color >= t.colors() {
        return Err(PartitionError::ColorOutOfRange {
            color: args.color,
            colors: t.colors(),
        }
        .into());
    }
    let found = t.find_homogeneous(args.color, args.size);
    let (set, text, status) = match &found {
        Some(s) => (fin_set_value(s), st.fin(s), Status::True),
        None => (Value::Null, "none".to_string(), Status::False),
    };
    Ok(Outcome::ok(
        "homogeneous",
        json!({ "color": args.color, "size": args.size, "set": set }),
        text,
    )
    .with_status(status))
}

fn witness(args: WitnessArgs, st: Style) -> Result<Outcome> {
    let alpha = ordinal(&args.alpha)?;
    let coloring = match args.kind {
        WitnessKind::Sierpinski => sierpinski_coloring(&alpha)?,
        WitnessKind::Decomposable => decomposable_coloring(&alpha)?,
    };
    let coloring = match args.sample {
        None => coloring,
        Some(n) => {
            let mut e = RepeatEnumeration::new(alpha.clone())?;
            // index i(i+1)/2 unpairs to (i, 0): the i-th element in code order
            let points: Vec<Ordinal> = (0..n as u64).map(|i| e.get(i * (i + 1) / 2)).collect();
            PairColoring::Table(coloring.tabulate(&FinOrdSet::from_unsorted(points))?)
        }
    };
    let text = match &coloring {
        PairColoring::Table(t) => table_text(t, st),
        PairColoring::Rule(r) => {
            let rule = match &r.rule {
                ordpart::partition::ColoringRule::CodeOrder => {
                    "color 1 iff codes run against the order".to_string()
                }
                ordpart::partition::ColoringRule::Split { split } => {
                    format!("color 1 iff the pair straddles {}", st.ord(split))
                }
            };
            format!("pairs below {}: {rule}", st.ord(&r.bound))
        }
    };
    let doc = coloring_document(&coloring);
    Ok(Outcome {
        doc,
        text,
        status: Status::True,
    })
}

pub fn ramsey(cmd: RamseyCmd, st: Style) -> Result<Outcome> {
    match cmd {
        RamseyCmd::Check(args) => check(args, st),
        RamseyCmd::Homog(args) => homog(args, st),
        RamseyCmd::Witness(args) => witness(args, st),
    }
}

fn tree_text(d: &Derivation, st: Style, indent: usize, out: &mut Vec<String>) {
    let beta = match &d.rule {
        ordpart::Rule::EmStep { beta } => format!("  [beta={}]", st.ord(beta)),
        _ => String::new(),
    };
    out.push(format!(
        "{}{}: {}{}",
        "  ".repeat(indent),
        d.rule.name(),
        st.statement(d),
        beta
    ));
    for p in &d.premises {
        tree_text(p, st, indent + 1, out);
    }
}

fn derivation_outcome(d: &Derivation, st: Style) -> Outcome {
    let mut lines = vec![
        st.statement(d),
        format!("depth {}, {} nodes", d.depth(), d.node_count()),
    ];
    tree_text(d, st, 0, &mut lines);
    Outcome {
        doc: derivation_document(d),
        text: lines.join("\n"),
        status: Status::True,
    }
}

pub fn em(cmd: EmCmd, st: Style) -> Result<Outcome> {
    Ok(match cmd {
        EmCmd::Headline { nu, n } => derivation_outcome(&em_headline(&ordinal(&nu)?, n), st),
        EmCmd::Larson { n, k } => {
            if n.checked_mul(k).is_none() {
                return Err(Failure::new("range", "n*k overflows"));
            }
            derivation_outcome(&larson_instance(n, k), st)
        }
        EmCmd::Verify { file } => {
            let d = read_derivation(&read_file(&file)?)?;
            match verify_derivation(&d) {
                Ok(()) => Outcome::ok(
                    "verification",
                    json!({
                        "valid": true,
                        "statement": statement_value(&d.conclusion),
                        "failure": null,
                    }),
                    format!("valid: {}", st.statement(&d)),
                ),
                Err(f) => Outcome::ok(
                    "verification",
                    json!({
                        "valid": false,
                        "statement": statement_value(&d.conclusion),
                        "failure": {
                            "path": format_path(&f.path),
                            "rule": f.rule,
                            "condition": f.condition,
                            "detail": f.detail,
                        },
                    }),
                    format!("invalid: {f}"),
                )
                .with_status(Status::False),
            }
        }
    })
}
