use crate::classes::{self, Characteristic, IdealClass};
use crate::closure::{self, OracleVerdict};
use crate::complex::SimplicialComplex;
use crate::decomp::{self, MonomialPrime};
use crate::error::Error;
use crate::generate::{gen_ideal, GenParams};
use crate::ideal::{verify_almost_regular_sequence, MonomialIdeal};
use crate::monomial::{Monomial, MonomialOrder, VarSet};
use crate::polar::{self, PolarizedIdeal};
use crate::symbolic;

use super::{DslError, Expr, Session, Value};

/// One entry of the dispatch table.
#[derive(Clone, Copy, Debug)]
pub struct FunctionSpec {
    pub name: &'static str,
    pub min_args: usize,
    pub max_args: usize,
    pub signature: &'static str,
    /// A complete script exercising the function.
    pub example: &'static str,
}

const fn f(
    name: &'static str,
    min_args: usize,
    max_args: usize,
    signature: &'static str,
    example: &'static str,
) -> FunctionSpec {
    FunctionSpec {
        name,
        min_args,
        max_args,
        signature,
        example,
    }
}

pub const FUNCTIONS: &[FunctionSpec] = &[
    f("power", 2, 2, "power(I, k)", "power(<x1, x2>, 2)"),
    f(
        "contains",
        2,
        2,
        "contains(I, <u>)",
        "contains(<x1^2, x2>, <x1^3>)",
    ),
    f("subset", 2, 2, "subset(I, J)", "subset(<x1^2>, <x1>)"),
    f("equal", 2, 2, "equal(I, J)", "equal(<x1> + <x2>, <x2, x1>)"),
    f(
        "compare",
        2,
        3,
        "compare(<u>, <v> [, lex|grlex])",
        "compare(<x1*x3^3>, <x2^2>, grlex)",
    ),
    f(
        "saturate",
        2,
        2,
        "saturate(I, J)",
        "saturate(<x1^2, x1*x2>, <x1, x2>)",
    ),
    f(
        "radical",
        1,
        1,
        "radical(I)",
        "radical(<x1^2*x3^2, x1*x2*x3^2>)",
    ),
    f(
        "radical_dual",
        1,
        1,
        "radical_dual(I)",
        "radical_dual(<x1^2*x3^2, x1*x2*x3^2>)",
    ),
    f(
        "set_var_zero",
        2,
        2,
        "set_var_zero(I, j)",
        "set_var_zero(<x1^2, x2^2*x3>, 2)",
    ),
    f("closure", 1, 1, "closure(I)", "closure(<x1^2, x2^2>)"),
    f(
        "integral",
        2,
        2,
        "integral(I, <u>)",
        "integral(<x1^2, x2^2>, <x1*x2>)",
    ),
    f(
        "closure_oracle",
        2,
        3,
        "closure_oracle(I, <u> [, kmax])",
        "closure_oracle(<x1^2, x2^2>, <x1*x2>, 4)",
    ),
    f(
        "minprimes",
        1,
        1,
        "minprimes(I)",
        "minprimes(<x1^2*x3^2, x1*x2*x3^2>)",
    ),
    f(
        "assprimes",
        1,
        1,
        "assprimes(I)",
        "assprimes(<x1^2*x3^2, x1*x2*x3^2>)",
    ),
    f(
        "irreducible",
        1,
        1,
        "irreducible(I)",
        "irreducible(<x1^2*x3^2, x1*x2*x3^2>)",
    ),
    f(
        "jlocal",
        2,
        2,
        "jlocal(I, P)",
        "jlocal(<x1^2*x3^2, x1*x2*x3^2>, <x3>)",
    ),
    f(
        "complex",
        1,
        1,
        "complex(I)",
        "complex(<x1^2*x3^2, x1*x2*x3^2>)",
    ),
    f("dual", 1, 1, "dual(C)", "dual(complex(<x1*x2, x2*x3>))"),
    f(
        "stanley_reisner",
        1,
        1,
        "stanley_reisner(C)",
        "stanley_reisner(dual(complex(<x1^2*x2>)))",
    ),
    f("facets", 1, 1, "facets(C)", "facets(complex(<x1*x2, x3>))"),
    f(
        "symbolic",
        2,
        2,
        "symbolic(I, k)",
        "symbolic(<x1^2*x3^2, x1*x2*x3^2>, 2)",
    ),
    f(
        "symbolic_via_power",
        2,
        2,
        "symbolic_via_power(I, k)",
        "symbolic_via_power(<x1^2*x3^2, x1*x2*x3^2>, 2)",
    ),
    f(
        "symbolic_sqfree",
        2,
        2,
        "symbolic_sqfree(I, k)",
        "symbolic_sqfree(<x1*x2, x2*x3>, 2)",
    ),
    f(
        "symbolic_eq",
        2,
        2,
        "symbolic_eq(I, k)",
        "symbolic_eq(<x1^2*x3^2, x1*x2*x3^2>, 2)",
    ),
    f(
        "exponent_vector",
        1,
        1,
        "exponent_vector(I)",
        "exponent_vector(<x1^2, x1*x2^2>)",
    ),
    f(
        "polarize",
        1,
        1,
        "polarize(I)",
        "polarize(<x1^3, x1^2*x2, x1*x2^2>)",
    ),
    f(
        "depolarize",
        1,
        1,
        "depolarize(T)",
        "depolarize(polarize(<x1^2, x1*x2^2>))",
    ),
    f(
        "depolarize_enumerate",
        1,
        1,
        "depolarize_enumerate(T)",
        "depolarize_enumerate(polarize(<x1^2, x1*x2^2>))",
    ),
    f(
        "extension",
        1,
        1,
        "extension(T)",
        "extension(polarize(<x1^3, x1^2*x2>))",
    ),
    f(
        "order_check",
        1,
        2,
        "order_check(I [, samples])",
        "order_check(<x1^3, x1^2*x2, x1*x2^2>, 30)",
    ),
    f("analyze", 1, 1, "analyze(I)", "analyze(<x1^2, x1*x2^2>)"),
    f(
        "gen",
        3,
        4,
        "gen(class, max_deg, max_gens [, seed])",
        "ring 3; gen(universal_lexsegment, 4, 3, 7)",
    ),
    f(
        "is_borel_type",
        1,
        1,
        "is_borel_type(I)",
        "is_borel_type(<x1^3, x1^2*x2, x1*x2^2>)",
    ),
    f(
        "is_borel_type_ass",
        1,
        1,
        "is_borel_type_ass(I)",
        "is_borel_type_ass(<x1^2, x1*x2>)",
    ),
    f(
        "is_borel_fixed",
        1,
        2,
        "is_borel_fixed(I [, p])",
        "is_borel_fixed(<x1^3, x1*x2^2>, 2)",
    ),
    f(
        "is_strongly_stable",
        1,
        1,
        "is_strongly_stable(I)",
        "is_strongly_stable(<x1^2, x1*x2>)",
    ),
    f(
        "is_lexsegment",
        1,
        1,
        "is_lexsegment(I)",
        "is_lexsegment(<x1^2, x1*x2, x2^2>)",
    ),
    f(
        "is_universal_lexsegment",
        1,
        1,
        "is_universal_lexsegment(I)",
        "is_universal_lexsegment(<x1, x2>)",
    ),
    f(
        "is_universal_lexsegment_exchange",
        1,
        1,
        "is_universal_lexsegment_exchange(I)",
        "is_universal_lexsegment_exchange(<x1^2, x1*x2^3>)",
    ),
    f(
        "ul_witness",
        1,
        1,
        "ul_witness(I)",
        "ul_witness(<x1^2, x1*x2^3>)",
    ),
    f(
        "max_support_exchange",
        2,
        2,
        "max_support_exchange(I, <u>)",
        "max_support_exchange(<x1^2, x1*x2^3>, <x1^2*x2>)",
    ),
    f(
        "is_sqfree_strongly_stable",
        1,
        1,
        "is_sqfree_strongly_stable(I or T)",
        "is_sqfree_strongly_stable(polarize(<x1^2, x1*x2^2>))",
    ),
    f(
        "is_stably_lexsegment",
        1,
        2,
        "is_stably_lexsegment(I [, kmax])",
        "is_stably_lexsegment(<x1^2, x1*x2>, 3)",
    ),
    f(
        "almost_regular",
        1,
        1,
        "almost_regular(I)",
        "almost_regular(<x1^2, x1*x2^3>)",
    ),
    f(
        "depth_ul",
        1,
        1,
        "depth_ul(I)",
        "ring 4; depth_ul(<x1^2, x1*x2^3>)",
    ),
];

pub fn lookup(name: &str) -> Option<&'static FunctionSpec> {
    FUNCTIONS.iter().find(|f| f.name == name)
}

struct Args<'a> {
    session: &'a Session,
    call: &'a Expr,
    args: &'a [Expr],
}

impl Args<'_> {
    fn lift<T>(&self, r: Result<T, Error>) -> Result<T, DslError> {
        r.map_err(|source| DslError::Eval {
            expr: self.call.to_string(),
            source,
        })
    }

    fn type_error<T>(&self, i: usize, msg: String) -> Result<T, DslError> {
        Err(DslError::Type {
            expr: self.args[i].to_string(),
            msg,
        })
    }

    fn value(&self, i: usize) -> Result<Value, DslError> {
        self.session.eval(&self.args[i])
    }

    fn ideal(&self, i: usize) -> Result<MonomialIdeal, DslError> {
        self.session.eval_ideal(&self.args[i])
    }

    fn count(&self, i: usize) -> Result<u32, DslError> {
        match self.value(i)? {
            Value::Int(k) if (0..=i64::from(u32::MAX)).contains(&k) => Ok(k as u32),
            other => self.type_error(i, format!("expected a non-negative integer, found {other}")),
        }
    }

    fn opt_count(&self, i: usize, default: u32) -> Result<u32, DslError> {
        if i < self.args.len() {
            self.count(i)
        } else {
            Ok(default)
        }
    }

    /// A principal ideal `<u>` read as the monomial `u`.
    fn monomial(&self, i: usize) -> Result<Monomial, DslError> {
        let ideal = self.ideal(i)?;
        match ideal.gens() {
            [u] => Ok(u.clone()),
            _ => self.type_error(i, "expected a monomial `<u>`".into()),
        }
    }

    fn polarized(&self, i: usize) -> Result<PolarizedIdeal, DslError> {
        match self.value(i)? {
            Value::Polarized(p) => Ok(p),
            other => self.type_error(
                i,
                format!("expected a polarized ideal, found a {}", other.type_name()),
            ),
        }
    }

    fn complex(&self, i: usize) -> Result<SimplicialComplex, DslError> {
        match self.value(i)? {
            Value::Complex(c) => Ok(c),
            other => self.type_error(
                i,
                format!("expected a complex, found a {}", other.type_name()),
            ),
        }
    }

    fn prime(&self, i: usize) -> Result<MonomialPrime, DslError> {
        let ideal = self.ideal(i)?;
        let mut vars = VarSet::empty();
        for g in ideal.gens() {
            if g.degree() != 1 {
                return self.type_error(i, "expected a prime generated by variables".into());
            }
            vars = vars.union(g.support());
        }
        self.lift(MonomialPrime::new(ideal.nvars(), vars))
    }

    /// An unevaluated bare name, such as a class or an order.
    fn word(&self, i: usize) -> Result<&str, DslError> {
        match &self.args[i] {
            Expr::Name(s) => Ok(s),
            other => self.type_error(i, format!("expected a bare name, found `{other}`")),
        }
    }
}

fn ideals(list: Vec<MonomialIdeal>) -> Value {
    Value::List(list.into_iter().map(Value::Ideal).collect())
}

fn primes(list: Vec<MonomialPrime>) -> Value {
    Value::List(list.iter().map(|p| Value::Ideal(p.to_ideal())).collect())
}

fn ints<I: IntoIterator<Item = T>, T: Into<i64>>(it: I) -> Value {
    Value::List(it.into_iter().map(|x| Value::Int(x.into())).collect())
}

fn one_based(set: VarSet) -> Value {
    ints(set.to_one_based().into_iter().map(|i| i as i64))
}

fn record(fields: Vec<(&str, Value)>) -> Value {
    Value::Record(
        fields
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
    )
}

pub(super) fn call(
    session: &Session,
    call: &Expr,
    name: &str,
    args: &[Expr],
) -> Result<Value, DslError> {
    let a = Args {
        session,
        call,
        args,
    };
    let cfg = session.config();
    Ok(match name {
        "power" => Value::Ideal(a.lift(a.ideal(0)?.power(a.count(1)?))?),
        "contains" => Value::Bool(a.lift(a.ideal(0)?.contains(&a.monomial(1)?))?),
        "subset" => Value::Bool(a.lift(a.ideal(0)?.is_subset(&a.ideal(1)?))?),
        "equal" => Value::Bool(a.ideal(0)? == a.ideal(1)?),
        "compare" => {
            let order = if args.len() > 2 {
                match a.word(2)? {
                    "lex" => MonomialOrder::Lex,
                    "grlex" => MonomialOrder::GradedLex,
                    other => return a.type_error(2, format!("unknown order `{other}`")),
                }
            } else {
                MonomialOrder::Lex
            };
            let ord = a.lift(order.compare(&a.monomial(0)?, &a.monomial(1)?))?;
            Value::Int(ord as i64)
        }
        "saturate" => Value::Ideal(a.lift(a.ideal(0)?.saturate(&a.ideal(1)?))?),
        "radical" => Value::Ideal(a.ideal(0)?.radical()),
        "radical_dual" => Value::Ideal(a.lift(decomp::radical_via_dual(&a.ideal(0)?))?),
        "set_var_zero" => {
            let i = a.ideal(0)?;
            let j = a.count(1)? as usize;
            if j == 0 || j > i.nvars() {
                return Err(DslError::Eval {
                    expr: call.to_string(),
                    source: Error::IndexOutOfRange {
                        index: j,
                        nvars: i.nvars(),
                    },
                });
            }
            Value::Ideal(a.lift(i.set_var_zero(j - 1))?)
        }
        "closure" => Value::Ideal(a.lift(closure::integral_closure(&a.ideal(0)?))?),
        "integral" => {
            Value::Bool(a.lift(closure::is_integral_over(&a.monomial(1)?, &a.ideal(0)?))?)
        }
        "closure_oracle" => {
            let k_max = a.opt_count(2, cfg.k_max)?;
            match a.lift(closure::closure_oracle(
                &a.monomial(1)?,
                &a.ideal(0)?,
                k_max,
            ))? {
                OracleVerdict::Member(k) => record(vec![
                    ("member", Value::Bool(true)),
                    ("k", Value::Int(k.into())),
                ]),
                OracleVerdict::NotFoundUpToBound(k) => record(vec![
                    ("member", Value::Bool(false)),
                    ("bound", Value::Int(k.into())),
                ]),
            }
        }
        "minprimes" => primes(a.lift(decomp::min_primes(&a.ideal(0)?))?),
        "assprimes" => primes(a.lift(decomp::ass_primes(&a.ideal(0)?))?),
        "irreducible" => ideals(a.lift(decomp::irreducible_decomposition(&a.ideal(0)?))?),
        "jlocal" => Value::Ideal(a.lift(decomp::localization_kernel(&a.ideal(0)?, &a.prime(1)?))?),
        "complex" => Value::Complex(a.lift(decomp::eliminating_complex(&a.ideal(0)?))?),
        "dual" => Value::Complex(a.lift(a.complex(0)?.alexander_dual())?),
        "stanley_reisner" => Value::Ideal(a.complex(0)?.stanley_reisner()),
        "facets" => Value::List(
            a.lift(a.complex(0)?.facets())?
                .into_iter()
                .map(one_based)
                .collect(),
        ),
        "symbolic" => Value::Ideal(a.lift(symbolic::symbolic_power(&a.ideal(0)?, a.count(1)?))?),
        "symbolic_via_power" => Value::Ideal(a.lift(symbolic::symbolic_power_via_power(
            &a.ideal(0)?,
            a.count(1)?,
        ))?),
        "symbolic_sqfree" => Value::Ideal(a.lift(symbolic::symbolic_power_squarefree(
            &a.ideal(0)?,
            a.count(1)?,
        ))?),
        "symbolic_eq" => {
            let c = a.lift(symbolic::symbolic_equals_ordinary(
                &a.ideal(0)?,
                a.count(1)?,
            ))?;
            record(vec![
                ("equal", Value::Bool(c.equal)),
                ("certificate", Value::Bool(c.certificate)),
                ("ass_contained", Value::Bool(c.ass_contained)),
                ("ass_power", primes(c.ass_power)),
            ])
        }
        "exponent_vector" => ints(polar::exponent_vector(&a.ideal(0)?)),
        "polarize" => Value::Polarized(a.lift(polar::polarize(&a.ideal(0)?))?),
        "depolarize" => Value::Ideal(a.polarized(0)?.depolarize()),
        "depolarize_enumerate" => {
            let r = a.lift(polar::depolarize_enumerate(&a.polarized(0)?))?;
            record(vec![
                ("t", Value::Int(r.t as i64)),
                ("predicted", Value::Int(r.predicted as i64)),
                ("found", Value::Int(r.ideals.len() as i64)),
                ("matches_prediction", Value::Bool(r.matches_prediction())),
                ("subsets_tried", Value::Int(r.subsets_tried as i64)),
                (
                    "matching_subsets",
                    Value::List(r.matching_subsets.into_iter().map(one_based).collect()),
                ),
                ("ideals", ideals(r.ideals)),
            ])
        }
        "extension" => ints(a.polarized(0)?.extension().iter().copied()),
        "order_check" => {
            let samples = a.opt_count(1, 20)? as usize;
            Value::Bool(polar::order_preserving_check(
                &a.ideal(0)?,
                samples,
                cfg.seed,
            ))
        }
        "analyze" => {
            let r = a.lift(polar::analyze_structure(&a.ideal(0)?))?;
            let blocks = r
                .blocks
                .iter()
                .map(|b| {
                    record(vec![
                        ("a", ints(b.a.iter().map(|&i| i as i64 + 1))),
                        ("b", ints(b.b.iter().map(|&i| i as i64 + 1))),
                    ])
                })
                .collect();
            record(vec![
                ("exponents", ints(r.exponents.iter().copied())),
                ("w", one_based(r.w)),
                ("a", one_based(r.a)),
                ("b", one_based(r.b)),
                ("blocks", Value::List(blocks)),
                ("candidate", Value::Ideal(r.candidate)),
                ("reconstructs", Value::Bool(r.reconstructs)),
                ("polarization_stable", Value::Bool(r.polarization_stable)),
            ])
        }
        "gen" => {
            let class: IdealClass = a.lift(a.word(0)?.parse())?;
            let Some(n) = session.nvars() else {
                return Err(DslError::Type {
                    expr: call.to_string(),
                    msg: "ring size unknown; start the script with `ring N`".into(),
                });
            };
            let seed = if args.len() > 3 {
                u64::from(a.count(3)?)
            } else {
                cfg.seed
            };
            let params = GenParams::new(class, n, a.count(1)?, a.count(2)? as usize, seed)
                .with_characteristic(cfg.characteristic);
            Value::Ideal(a.lift(gen_ideal(&params))?)
        }
        "is_borel_type" => Value::Bool(a.lift(classes::is_borel_type(&a.ideal(0)?))?),
        "is_borel_type_ass" => Value::Bool(a.lift(classes::is_borel_type_via_ass(&a.ideal(0)?))?),
        "is_borel_fixed" => {
            let ch = if args.len() > 1 {
                a.lift(Characteristic::new(u64::from(a.count(1)?)))?
            } else {
                cfg.characteristic
            };
            Value::Bool(classes::is_borel_fixed(&a.ideal(0)?, ch))
        }
        "is_strongly_stable" => Value::Bool(classes::is_strongly_stable(&a.ideal(0)?)),
        "is_lexsegment" => Value::Bool(a.lift(classes::is_lexsegment(&a.ideal(0)?))?),
        "is_universal_lexsegment" => Value::Bool(classes::is_universal_lexsegment(&a.ideal(0)?)),
        "is_universal_lexsegment_exchange" => {
            Value::Bool(classes::is_universal_lexsegment_by_exchange(&a.ideal(0)?))
        }
        "ul_witness" => match classes::universal_lexsegment_witness(&a.ideal(0)?) {
            Some(w) => ints(w),
            None => Value::Bool(false),
        },
        "max_support_exchange" => Value::Bool(a.lift(classes::max_support_exchange_holds(
            &a.ideal(0)?,
            &a.monomial(1)?,
        ))?),
        "is_sqfree_strongly_stable" => match a.value(0)? {
            Value::Polarized(p) => Value::Bool(p.is_squarefree_strongly_stable()),
            Value::Ideal(i) => Value::Bool(a.lift(classes::is_squarefree_strongly_stable(&i))?),
            other => {
                return a.type_error(
                    0,
                    format!("expected an ideal, found a {}", other.type_name()),
                )
            }
        },
        "is_stably_lexsegment" => {
            let k_max = a.opt_count(1, cfg.k_max)?;
            match a.lift(classes::is_stably_lexsegment(&a.ideal(0)?, k_max))? {
                classes::StablyLexVerdict::TrueUpToBound(k) => record(vec![
                    ("holds", Value::Bool(true)),
                    ("bound", Value::Int(k.into())),
                ]),
                classes::StablyLexVerdict::False(k) => record(vec![
                    ("holds", Value::Bool(false)),
                    ("k", Value::Int(k.into())),
                ]),
            }
        }
        "almost_regular" => Value::Bool(
            a.lift(verify_almost_regular_sequence(&a.ideal(0)?))?
                .holds(),
        ),
        "depth_ul" => Value::Int(a.lift(classes::depth_universal_lex(&a.ideal(0)?))? as i64),
        other => unreachable!("`{other}` passed the parser but has no implementation"),
    })
}
