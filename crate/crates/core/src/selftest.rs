//! Golden scripts with known answers, run by `monideal selftest`.

use crate::dsl::{Config, OutputFormat, Session};

pub struct GoldenCase {
    pub name: &'static str,
    pub script: &'static str,
    /// Text rendering of each expression statement, in order.
    pub expected: &'static [&'static str],
}

pub const GOLDEN: &[GoldenCase] = &[
    GoldenCase {
        name: "colon of a Borel-fixed ideal in characteristic 2",
        script: "ring 2; I = <x1^3, x1*x2^2>; is_borel_fixed(I, 2); I : <x2>; is_borel_fixed(I : <x2>, 2)",
        expected: &["true", "<x1^3, x1*x2>", "false"],
    },
    GoldenCase {
        name: "square of a lexsegment ideal",
        script: "ring 3; I = <x1^3, x1^2*x2, x1^2*x3, x1*x2^2, x1*x2*x3>; is_lexsegment(I); \
                 contains(I^2, <x1^2*x2^2*x3^2>); contains(I^2, <x1^3*x3^3>); is_lexsegment(I^2)",
        expected: &["true", "true", "false", "false"],
    },
    GoldenCase {
        name: "closure of a square is larger than the square of the closure",
        script: "ring 6; I = <x1*x2*x3, x1*x4*x5, x2*x4*x6, x3*x5*x6>; U = <x1*x2*x3*x4*x5*x6>; \
                 equal(closure(I), I); contains(I^2, U); closure_oracle(I^2, U, 4); \
                 contains(closure(I)^2, U); contains(closure(I^2), U)",
        expected: &["true", "false", "{member: true, k: 2}", "false", "true"],
    },
    GoldenCase {
        name: "symbolic powers with an embedded prime",
        script: "ring 3; I = <x1^2*x3^2, x1*x2*x3^2>; minprimes(I); assprimes(I); I^2; \
                 symbolic(I, 1); symbolic(I, 2); symbolic(I, 3); symbolic_eq(I, 2)",
        expected: &[
            "[<x1>, <x3>]",
            "[<x1>, <x3>, <x1, x2>]",
            "<x1^4*x3^4, x1^3*x2*x3^4, x1^2*x2^2*x3^4>",
            "<x1*x3^2>",
            "<x1^2*x3^4>",
            "<x1^3*x3^6>",
            "{equal: false, certificate: false, ass_contained: true, ass_power: [<x1>, <x3>, <x1, x2>]}",
        ],
    },
    GoldenCase {
        name: "universal lexsegment ideal whose square is not lexsegment",
        script: "ring 3; I = <x1, x2>; is_universal_lexsegment(I); symbolic(I, 2); \
                 equal(symbolic(I, 2), I^2); is_lexsegment(I^2)",
        expected: &["true", "<x1^2, x1*x2, x2^2>", "true", "false"],
    },
    GoldenCase {
        name: "polarization",
        script: "polarize(<x1^3, x1^2*x2, x1*x2^2>)",
        expected: &["<x1_1*x1_2*x1_3, x1_1*x1_2*x2_1, x1_1*x2_1*x2_2>"],
    },
    GoldenCase {
        name: "exponent vector of a universal lexsegment ideal",
        script: "I = <x1^3, x1^2*x2*x3, x1^2*x2*x4, x1^2*x2*x5^3*x6^3, x1^2*x2*x5^3*x6^2*x7^2, \
                 x1^2*x2*x5^3*x6^2*x7*x8^2>; exponent_vector(I); is_sqfree_strongly_stable(polarize(I))",
        expected: &["[3, 1, 1, 1, 3, 3, 2, 2]", "true"],
    },
];

/// Runs every golden case; `Err` carries a description of the mismatch.
pub fn run_golden() -> Vec<(&'static str, Result<(), String>)> {
    GOLDEN
        .iter()
        .map(|case| {
            let mut session = Session::new(Config::default());
            let outcome = match session.run_to_lines(case.script, OutputFormat::Text) {
                Ok(lines) if lines == case.expected => Ok(()),
                Ok(lines) => Err(format!("expected {:?}, got {:?}", case.expected, lines)),
                Err(e) => Err(e.to_string()),
            };
            (case.name, outcome)
        })
        .collect()
}
