//! The expression language: `ring 3; I = <x1^3, x1*x2^2>; I : <x2>`.
//!
//! Statements are separated by `;`. `ring N` fixes the number of variables
//! and clears all bindings; without it the ring size is the largest variable
//! index used in the script. Binary ideal operators are `+` (sum), `*`
//! (product), `&` (intersection), `:` (colon) and `^` (power); `^` binds
//! tightest, `+` loosest, the other three share one left-associative tier.

mod builtins;
mod syntax;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::json;
use thiserror::Error;

use crate::classes::{Characteristic, DEFAULT_K_MAX};
use crate::complex::SimplicialComplex;
use crate::error::{Error, ErrorKind};
use crate::ideal::MonomialIdeal;
use crate::json::{ComplexJson, IdealJson, PolarizedJson};
use crate::limits;
use crate::monomial::{Monomial, MAX_VARS};
use crate::polar::PolarizedIdeal;

pub use builtins::{lookup, FunctionSpec, FUNCTIONS};
pub use syntax::{max_variable, parse, parse_expr, BinOp, Expr, MonoLit, Program, Stmt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("{line}:{col}: unknown function `{name}`")]
    UnknownName {
        line: usize,
        col: usize,
        name: String,
    },

    #[error("{line}:{col}: wrong number of arguments ({got}) for {expected}")]
    Arity {
        line: usize,
        col: usize,
        name: String,
        expected: &'static str,
        got: usize,
    },

    #[error("in `{expr}`: unbound name `{name}`")]
    Unbound { expr: String, name: String },

    #[error("in `{expr}`: {msg}")]
    Type { expr: String, msg: String },

    #[error("in `{expr}`: {source}")]
    Eval { expr: String, source: Error },
}

impl DslError {
    pub fn code(&self) -> &'static str {
        match self {
            DslError::Syntax { .. } => "syntax-error",
            DslError::UnknownName { .. } => "unknown-name",
            DslError::Arity { .. } => "arity-error",
            DslError::Unbound { .. } => "unbound-name",
            DslError::Type { .. } => "type-error",
            DslError::Eval { source, .. } => source.code(),
        }
    }

    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            DslError::Syntax { .. } | DslError::UnknownName { .. } | DslError::Arity { .. }
        )
    }

    /// 1 for parse errors, 3 for resource limits, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            _ if self.is_parse_error() => 1,
            DslError::Eval { source, .. } if source.kind() == ErrorKind::Resource => 3,
            _ => 2,
        }
    }

    /// The offending sub-expression, for evaluation errors.
    pub fn expr(&self) -> Option<&str> {
        match self {
            DslError::Unbound { expr, .. }
            | DslError::Type { expr, .. }
            | DslError::Eval { expr, .. } => Some(expr),
            _ => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({"error": {"code": self.code(), "message": self.to_string(), "expr": self.expr()}})
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Ideal(MonomialIdeal),
    Polarized(PolarizedIdeal),
    Complex(SimplicialComplex),
    Int(i64),
    Bool(bool),
    Str(String),
    List(Vec<Value>),
    Record(Vec<(String, Value)>),
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Ideal(_) => "ideal",
            Value::Polarized(_) => "polarized ideal",
            Value::Complex(_) => "complex",
            Value::Int(_) => "integer",
            Value::Bool(_) => "boolean",
            Value::Str(_) => "string",
            Value::List(_) => "list",
            Value::Record(_) => "record",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Ideal(i) => serde_json::to_value(IdealJson::from(i)).expect("plain data"),
            Value::Polarized(p) => {
                serde_json::to_value(PolarizedJson::from(p)).expect("plain data")
            }
            Value::Complex(c) => serde_json::to_value(ComplexJson::from(c)).expect("plain data"),
            Value::Int(i) => json!(i),
            Value::Bool(b) => json!(b),
            Value::Str(s) => json!(s),
            Value::List(v) => serde_json::Value::Array(v.iter().map(Value::to_json).collect()),
            Value::Record(fields) => serde_json::Value::Object(
                fields
                    .iter()
                    .map(|(k, v)| (k.clone(), v.to_json()))
                    .collect(),
            ),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Ideal(i) => i.fmt(f),
            Value::Polarized(p) => p.fmt(f),
            Value::Complex(c) => c.fmt(f),
            Value::Int(i) => i.fmt(f),
            Value::Bool(b) => b.fmt(f),
            Value::Str(s) => f.write_str(s),
            Value::List(v) => {
                f.write_str("[")?;
                for (k, x) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    x.fmt(f)?;
                }
                f.write_str("]")
            }
            Value::Record(fields) => {
                f.write_str("{")?;
                for (k, (name, x)) in fields.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{name}: {x}")?;
                }
                f.write_str("}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub characteristic: Characteristic,
    pub k_max: u32,
    pub max_terms: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            characteristic: Characteristic::ZERO,
            k_max: DEFAULT_K_MAX,
            max_terms: limits::DEFAULT_MAX_TERMS,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

impl OutputFormat {
    pub fn render(self, v: &Value) -> String {
        match self {
            OutputFormat::Text => v.to_string(),
            OutputFormat::Json => v.to_json().to_string(),
        }
    }
}

/// Ring size, bindings and configuration of one interpreter run.
#[derive(Clone, Debug, Default)]
pub struct Session {
    nvars: Option<usize>,
    bindings: BTreeMap<String, Value>,
    config: Config,
}

impl Session {
    pub fn new(config: Config) -> Self {
        limits::set_max_terms(config.max_terms);
        Session {
            nvars: None,
            bindings: BTreeMap::new(),
            config,
        }
    }

    pub fn nvars(&self) -> Option<usize> {
        self.nvars
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.get(name)
    }

    /// Parses and runs a script, returning the value of every expression
    /// statement in order.
    pub fn run(&mut self, text: &str) -> Result<Vec<Value>, DslError> {
        let program = parse(text)?;
        self.run_program(&program)
    }

    pub fn run_program(&mut self, program: &Program) -> Result<Vec<Value>, DslError> {
        self.infer_ring(program);
        let mut out = Vec::new();
        for stmt in program {
            if let Some(v) = self.exec(stmt)? {
                out.push(v);
            }
        }
        Ok(out)
    }

    /// Runs a script and renders each result on its own line.
    pub fn run_to_lines(
        &mut self,
        text: &str,
        format: OutputFormat,
    ) -> Result<Vec<String>, DslError> {
        Ok(self.run(text)?.iter().map(|v| format.render(v)).collect())
    }

    fn infer_ring(&mut self, program: &Program) {
        if self.nvars.is_some() || program.iter().any(|s| matches!(s, Stmt::Ring(_))) {
            return;
        }
        let n = program
            .iter()
            .map(|s| match s {
                Stmt::Assign(_, e) | Stmt::Expr(e) => max_variable(e),
                Stmt::Ring(_) => 0,
            })
            .max()
            .unwrap_or(0);
        if n > 0 {
            self.nvars = Some(n);
        }
    }

    pub fn exec(&mut self, stmt: &Stmt) -> Result<Option<Value>, DslError> {
        match stmt {
            Stmt::Ring(n) => {
                if *n > MAX_VARS {
                    return Err(DslError::Eval {
                        expr: stmt.to_string(),
                        source: Error::InvalidInput(format!("at most {MAX_VARS} variables")),
                    });
                }
                self.nvars = Some(*n);
                self.bindings.clear();
                Ok(None)
            }
            Stmt::Assign(name, e) => {
                let v = self.eval(e)?;
                self.bindings.insert(name.clone(), v);
                Ok(None)
            }
            Stmt::Expr(e) => self.eval(e).map(Some),
        }
    }

    pub fn eval(&self, e: &Expr) -> Result<Value, DslError> {
        match e {
            Expr::Name(n) => self
                .bindings
                .get(n)
                .cloned()
                .ok_or_else(|| DslError::Unbound {
                    expr: e.to_string(),
                    name: n.clone(),
                }),
            Expr::Int(i) => i64::try_from(*i)
                .map(Value::Int)
                .map_err(|_| DslError::Type {
                    expr: e.to_string(),
                    msg: "integer too large".into(),
                }),
            Expr::Ideal(gens) => {
                let n = self.nvars.unwrap_or(0);
                let monos = gens
                    .iter()
                    .map(|m| {
                        let mut exps = vec![0u32; n];
                        for &(v, k) in m {
                            if v > n {
                                return Err(Error::IndexOutOfRange { index: v, nvars: n });
                            }
                            exps[v - 1] =
                                exps[v - 1].checked_add(k).ok_or(Error::ExponentOverflow)?;
                        }
                        Ok(Monomial::new(exps))
                    })
                    .collect::<Result<Vec<_>, Error>>()
                    .map_err(|source| DslError::Eval {
                        expr: e.to_string(),
                        source,
                    })?;
                MonomialIdeal::minimalize(monos, n)
                    .map(Value::Ideal)
                    .map_err(|source| DslError::Eval {
                        expr: e.to_string(),
                        source,
                    })
            }
            Expr::Binary(op, l, r) => {
                let a = self.eval_ideal(l)?;
                let b = self.eval_ideal(r)?;
                let res = match op {
                    BinOp::Add => a.sum(&b),
                    BinOp::Mul => a.product(&b),
                    BinOp::Meet => a.intersect(&b),
                    BinOp::Colon => a.colon(&b),
                };
                res.map(Value::Ideal).map_err(|source| DslError::Eval {
                    expr: e.to_string(),
                    source,
                })
            }
            Expr::Power(b, k) => {
                let a = self.eval_ideal(b)?;
                a.power(*k)
                    .map(Value::Ideal)
                    .map_err(|source| DslError::Eval {
                        expr: e.to_string(),
                        source,
                    })
            }
            Expr::Call(name, args) => builtins::call(self, e, name, args),
        }
    }

    pub(crate) fn eval_ideal(&self, e: &Expr) -> Result<MonomialIdeal, DslError> {
        match self.eval(e)? {
            Value::Ideal(i) => Ok(i),
            other => Err(DslError::Type {
                expr: e.to_string(),
                msg: format!("expected an ideal, found a {}", other.type_name()),
            }),
        }
    }
}
