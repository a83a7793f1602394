//! The fixed identity catalogue.
//!
//! Each entry reads `lhs = sum of terms`, a term being a coefficient times an
//! optional gamma quotient times an optional series. Series are written
//! `upper; lower` with an optional `| argument` suffix (default 1).

use super::expr::Expr;
use super::{Constraint, GammaTemplate, IdentityEntry, SeriesTemplate, Term};

fn e(s: &str) -> Expr {
    Expr::parse(s).unwrap_or_else(|err| panic!("catalogue expression {s:?}: {err}"))
}

fn list(s: &str) -> Vec<Expr> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(e).collect()
}

fn series(s: &str) -> SeriesTemplate {
    let (params, argument) = match s.split_once('|') {
        Some((p, z)) => (p, e(z)),
        None => (s, e("1")),
    };
    let (upper, lower) = params.split_once(';').unwrap_or_else(|| panic!("series {s:?} lacks ';'"));
    SeriesTemplate { upper: list(upper), lower: list(lower), argument }
}

struct Builder(IdentityEntry);

fn entry(id: &'static str, params: &[&'static str], lhs: &str) -> Builder {
    Builder(IdentityEntry {
        id,
        free_params: params.to_vec(),
        lhs: series(lhs),
        rhs: Vec::new(),
        constraints: Vec::new(),
        integer_params: Vec::new(),
        example: Vec::new(),
    })
}

impl Builder {
    fn series_term(mut self, coefficient: &str, s: &str) -> Self {
        self.0.rhs.push(Term { coefficient: e(coefficient), gamma: None, series: Some(series(s)) });
        self
    }

    /// Gamma quotient written `num1, num2 / den1, den2`.
    fn gamma_term(mut self, coefficient: &str, gamma: &str, s: Option<&str>) -> Self {
        let (num, den) = gamma.split_once('/').unwrap_or_else(|| panic!("gamma quotient {gamma:?}"));
        self.0.rhs.push(Term {
            coefficient: e(coefficient),
            gamma: Some(GammaTemplate { num: list(num), den: list(den) }),
            series: s.map(series),
        });
        self
    }

    fn positive(mut self, exprs: &[&str]) -> Self {
        self.0.constraints.extend(exprs.iter().map(|s| Constraint::Positive(e(s))));
        self
    }

    fn not_pole(mut self, exprs: &[&str]) -> Self {
        self.0.constraints.extend(exprs.iter().map(|s| Constraint::NotNonPositiveInteger(e(s))));
        self
    }

    fn integer(mut self, params: &[&'static str]) -> Self {
        self.0.integer_params = params.to_vec();
        self
    }

    fn example(mut self, values: &[(&'static str, &'static str)]) -> Self {
        self.0.example = values.to_vec();
        self
    }

    fn fixed(id: &'static str, lhs: &str, factor: &str, rhs: &str) -> IdentityEntry {
        entry(id, &[], lhs).series_term(factor, rhs).0
    }
}

const B12_E: &str = "gamma + alpha*(alpha - gamma + 1)/(beta - 1)";
const B10_D: &str = "2*alpha - beta - gamma + beta*gamma/(alpha + 1) + 3";

pub(super) fn build() -> Vec<IdentityEntry> {
    let b12_lhs = format!("alpha, beta, gamma; alpha + 1, {B12_E} + 1");
    let b12_rhs = format!("alpha + 1, beta - 1, gamma; alpha + 2, {B12_E}");
    let b10_lhs = format!("alpha, beta, gamma; alpha + 1, {B10_D}");
    let b10_rhs = format!("alpha + 2, beta, gamma; alpha + 3, {B10_D}");
    let rest_bc = "d, d - b - c + 1 / d - b, d - c";

    vec![
        entry(
            "exotique2",
            &["alpha", "beta", "gamma"],
            "alpha + 1, beta + 1, gamma; 2*alpha + beta + 1, 2*beta + alpha + 1",
        )
        .series_term(
            "2*(alpha + beta)/(2*(alpha + beta) - gamma)",
            "alpha, beta, gamma; 2*alpha + beta + 1, 2*beta + alpha + 1",
        )
        .positive(&["2*alpha + 2*beta - gamma"])
        .not_pole(&["2*alpha + beta + 1", "2*beta + alpha + 1"])
        .example(&[("alpha", "1"), ("beta", "1"), ("gamma", "2")])
        .0,
        entry(
            "exotique",
            &["alpha", "beta"],
            "alpha + 1, beta + 1, alpha + beta; 2*alpha + beta + 1, 2*beta + alpha + 1",
        )
        .series_term("2", "alpha, beta, alpha + beta; 2*alpha + beta + 1, 2*beta + alpha + 1")
        .positive(&["alpha + beta"])
        .example(&[("alpha", "1"), ("beta", "1")])
        .0,
        entry("b12", &["alpha", "beta", "gamma"], &b12_lhs)
            .series_term(
                "(alpha - beta + 2)*(alpha + alpha^2 - gamma - alpha*gamma + beta*gamma) \
                 / ((alpha + 1)*(2*alpha + alpha^2 - alpha*beta - gamma - alpha*gamma + beta*gamma))",
                &b12_rhs,
            )
            .positive(&["alpha*(alpha - gamma + 1)/(beta - 1) + 2 - beta"])
            .example(&[("alpha", "4"), ("beta", "3"), ("gamma", "4")])
            .0,
        entry("couplage", &["alpha"], "2*alpha, 2*alpha, 2*alpha; 4*alpha, 3*alpha + 1")
            .series_term(
                "alpha*(2*alpha + 1)/((3*alpha + 1)*(4*alpha + 1))",
                "2*alpha + 2, 2*alpha + 1, 2*alpha + 1; 4*alpha + 2, 3*alpha + 2",
            )
            .positive(&["alpha"])
            .example(&[("alpha", "1")])
            .0,
        entry("b3", &["alpha"], "alpha^2, alpha^2, alpha + 1; alpha^2 + 1, alpha^2 + alpha + 1")
            .series_term("(alpha^3 + 1)/(alpha^2 + 1)", "alpha^2 + 1, alpha^2, alpha; alpha^2 + 2, alpha^2 + alpha")
            .example(&[("alpha", "2")])
            .0,
        entry("id1", &["alpha"], "alpha^2, alpha + 1, alpha^2; alpha^2 + 1, alpha^2 + alpha + 1")
            .series_term("(alpha^3 + 1)/(alpha^2 + 1)", "alpha^2 + 1, alpha, alpha^2; alpha^2 + 2, alpha^2 + alpha")
            .example(&[("alpha", "3")])
            .0,
        entry("id2", &["alpha"], "alpha^2 - alpha + 1, alpha, alpha^2 - alpha; alpha^2 - alpha + 2, alpha^2")
            .series_term(
                "alpha/(alpha^2 + 1)",
                "alpha^2 - alpha + 1, alpha + 1, alpha^2 - alpha + 1; alpha^2 - alpha + 2, alpha^2 + 2",
            )
            .example(&[("alpha", "2")])
            .0,
        entry("id3", &["alpha"], "6*alpha + 1, 4*alpha + 2, 3*alpha + 1; 6*alpha + 2, 7*alpha + 3")
            .series_term(
                "(3*alpha + 2)/(3*alpha + 3)",
                "6*alpha + 3, 4*alpha + 2, 3*alpha + 1; 6*alpha + 4, 7*alpha + 3",
            )
            .example(&[("alpha", "1")])
            .0,
        entry("b11", &["a", "b", "c", "d"], "a, b, c; a + 1, d")
            .series_term(
                "(a - b + 1)*(a - b + 2)*(a - c + 1)*(d - 1)/((a + 1)*(b - 1)*(a - d + 2)*(a - d + 1))",
                "a + 1, b - 1, c; a + 2, d - 1",
            )
            .gamma_term("(1 - a - a^2 - b + c + a*c - b*c - d + b*d)/((b - 1)*(a - d + 2)*(a - d + 1))", rest_bc, None)
            .positive(&["d - b - c + 1"])
            .not_pole(&["a + 1", "d"])
            .integer(&["b"])
            .example(&[("a", "2"), ("b", "2"), ("c", "1"), ("d", "5")])
            .0,
        entry("b13", &["a", "b", "c", "d"], "a, b, c; a + 1, d")
            .series_term("(a - b + 1)*(a - c + 1)/((a + 1)*(a - d + 1))", "a + 1, b, c; a + 2, d")
            .gamma_term("-1/(a - d + 1)", rest_bc, None)
            .positive(&["d - b - c + 1"])
            .not_pole(&["a + 1", "d"])
            .integer(&["b"])
            .example(&[("a", "2"), ("b", "2"), ("c", "1"), ("d", "5")])
            .0,
        entry("b9", &["a", "b", "c", "d"], "a, b, c; a + 1, d")
            .series_term(
                "(a - b + 1)*(a - b + 2)*(a - c + 1)*(a - c + 2)/((a + 1)*(a + 2)*(a - d + 2)*(a - d + 1))",
                "a + 2, b, c; a + 3, d",
            )
            .gamma_term(
                "-(3 + 5*a + 2*a^2 - b - a*b - c - a*c + b*c - d - a*d)/((a + 1)*(a - d + 2)*(a - d + 1))",
                rest_bc,
                None,
            )
            .positive(&["d - b - c + 1"])
            .not_pole(&["a + 1", "d"])
            .integer(&["b"])
            .example(&[("a", "2"), ("b", "2"), ("c", "1"), ("d", "5")])
            .0,
        entry("b10", &["alpha", "beta", "gamma"], &b10_lhs)
            .series_term(
                "(alpha + 1)*(alpha - beta + 2)*(alpha - gamma + 2) \
                 / ((alpha + 2)*(3*alpha + alpha^2 - beta - alpha*beta - gamma - alpha*gamma + beta*gamma + 2))",
                &b10_rhs,
            )
            .positive(&["2*alpha - 2*beta - 2*gamma + beta*gamma/(alpha + 1) + 4"])
            .not_pole(&["alpha + 1", B10_D])
            .example(&[("alpha", "7"), ("beta", "6"), ("gamma", "4")])
            .0,
        entry("b5", &["a", "b", "c", "d"], "a, b, c; a + 1, d")
            .series_term("b*c*(a - d - 1)*(a - d)/((a - b)*(a - c)*d*(d + 1))", "a, b + 1, c + 1; a + 1, d + 2")
            .gamma_term("a*(b*c + a*d - b*d - c*d)/((a - b)*(a - c))", "d, d - b - c + 1 / d - b + 1, d - c + 1", None)
            .positive(&["d - b - c + 1"])
            .not_pole(&["a + 1", "d"])
            .integer(&["b"])
            .example(&[("a", "3"), ("b", "1"), ("c", "1"), ("d", "4")])
            .0,
        entry(
            "b6",
            &["beta", "gamma", "delta"],
            "beta + gamma - delta, beta, gamma; beta + gamma - delta + 1, beta*gamma/delta",
        )
        .series_term(
            "(beta*gamma + delta - beta*delta - gamma*delta + delta^2)/(beta*gamma + delta)",
            "beta + gamma - delta, beta + 1, gamma + 1; beta + gamma - delta + 1, beta*gamma/delta + 2",
        )
        .positive(&["beta*gamma/delta - beta - gamma + 1"])
        .not_pole(&["beta + gamma - delta + 1", "beta*gamma/delta"])
        .example(&[("beta", "2"), ("gamma", "2"), ("delta", "1")])
        .0,
        entry(
            "b14",
            &["a1", "a2", "c1", "c2"],
            "a1*a2, a1*c1 + 1, a1*a2 - c1*c2 + 1; a1*a2 + 1, a1*a2 + a2*c2 - c1*c2 + 2",
        )
        .series_term(
            "(a1*a2 - a1*c1 + 1)*(a1*a2 + a2*c2 - c1*c2 + 1)/((a1*a2 + 1)*(a2*c2 - c1*c2 + 1))",
            "a1*a2 + 1, a1*c1, a1*a2 - c1*c2 + 1; a1*a2 + 2, a1*a2 + a2*c2 - c1*c2 + 1",
        )
        .positive(&["a2*c2 - a1*c1 + 1"])
        .example(&[("a1", "2"), ("a2", "2"), ("c1", "1"), ("c2", "1")])
        .0,
        entry(
            "b15",
            &["b1", "b2", "c1", "c2"],
            "b1*b2 + c1*c2 - b1*c1, b1*b2, c1*c2; b1*b2 + c1*c2 - b1*c1 + 1, b2*c2",
        )
        .series_term(
            "(b1*b2*c1*c2 + b1*c1 - b1*b2*b1*c1 - c1*c2*b1*c1 + b1^2*c1^2)/(b1*b2*c1*c2 + b1*c1)",
            "b1*b2 + c1*c2 - b1*c1, b1*b2 + 1, c1*c2 + 1; b1*b2 + c1*c2 - b1*c1 + 1, b2*c2 + 2",
        )
        .positive(&["b2*c2 - b1*b2 - c1*c2 + 1"])
        .example(&[("b1", "1"), ("b2", "2"), ("c1", "1"), ("c2", "2")])
        .0,
        entry("b16", &["b1", "b2", "c1", "c2"], "b1*c1 - 1, b1*b2, c1*c2; b1*c1, 2*b1*c1 - b1*b2 + b2*c2 - c1*c2 + 1")
            .series_term(
                "(b1*c1 - b1*b2 + 1)*(b1*c1 - c1*c2 + 1)/((b1*c1 + 1)*(b1*c1 - b1*b2 + b2*c2 - c1*c2 + 1))",
                "b1*c1 + 1, b1*b2, c1*c2; b1*c1 + 2, 2*b1*c1 - b1*b2 + b2*c2 - c1*c2 + 1",
            )
            .positive(&["2*b1*c1 - 2*b1*b2 + b2*c2 - 2*c1*c2 + 2"])
            .example(&[("b1", "2"), ("b2", "3"), ("c1", "4"), ("c2", "1")])
            .0,
        entry("thomae1", &["a", "b", "c", "d", "e"], "a, b, c; d, e")
            .gamma_term("1", "e, d + e - a - b - c / e - a, d + e - b - c", Some("a, d - b, d - c; d, d + e - b - c"))
            .positive(&["d + e - a - b - c"])
            .not_pole(&["d", "e"])
            .integer(&["a"])
            .example(&[("a", "1"), ("b", "1"), ("c", "2"), ("d", "4"), ("e", "4")])
            .0,
        entry("T3240", &["a", "b", "c", "d"], "b, c, d; a, a - b + c")
            .gamma_term(
                "1",
                "2*a, 2*a - 2*b - d, a - b + c, a - d + c / 2*a - 2*b, 2*a - d, a + c, a - b - d + c",
                Some(
                    "a - 1/2, a/2 + 3/4, b, d/2, d/2 + 1/2, a/2 - c/2, a/2 - c/2 + 1/2; \
                     a/2 - 1/4, a - b + 1/2, a - d/2 + 1/2, a - d/2, a/2 + c/2 + 1/2, a/2 + c/2",
                ),
            )
            .positive(&["2*a - 2*b - d", "a - b - d + c"])
            .not_pole(&["a", "a - b + c"])
            .integer(&["b"])
            .example(&[("a", "5"), ("b", "2"), ("c", "3/2"), ("d", "1")])
            .0,
        entry("gauss", &["a", "b", "c"], "a, b; c")
            .gamma_term("1", "c, c - a - b / c - a, c - b", None)
            .positive(&["c - a - b"])
            .not_pole(&["c"])
            .example(&[("a", "1"), ("b", "1"), ("c", "3")])
            .0,
        entry("C55", &["A1", "A2", "A3", "B1", "B2", "z"], "A1, A2, A3; B1, B2 | z")
            .series_term("(1 - A1 + A2)*(B1 - 1)/((A1 - 1)*(1 + A2 - B1))", "A1 - 1, A2, A3; B1 - 1, B2 | z")
            .series_term("A2*(B1 - A1)/((A1 - 1)*(B1 - A2 - 1))", "A1 - 1, A2 + 1, A3; B1, B2 | z")
            .example(&[("A1", "3"), ("A2", "3/2"), ("A3", "2"), ("B1", "4"), ("B2", "9/2"), ("z", "1")])
            .0,
        entry("C15", &["A1", "A2", "A3", "B1", "B2", "z"], "A1, A2, A3; B1, B2 | z")
            .series_term("1", "A1 + 1, A2, A3; B1, B2 | z")
            .series_term("-z*A2*A3/(B1*B2)", "A1 + 1, A2 + 1, A3 + 1; B1 + 1, B2 + 1 | z")
            .example(&[("A1", "1"), ("A2", "1"), ("A3", "1"), ("B1", "2"), ("B2", "3"), ("z", "1")])
            .0,
        entry("C27", &["A1", "A2", "A3", "B1", "B2", "z"], "A1, A2, A3; B1, B2 | z")
            .series_term("(A1 - A2 - 1)/(A1 - 1)", "A1 - 1, A2, A3; B1, B2 | z")
            .series_term("A2/(A1 - 1)", "A1 - 1, A2 + 1, A3; B1, B2 | z")
            .example(&[("A1", "3"), ("A2", "1"), ("A3", "2"), ("B1", "4"), ("B2", "5"), ("z", "1")])
            .0,
        entry("C54", &["A1", "A2", "A3", "B1", "B2", "z"], "A1, A2, A3; B1, B2 | z")
            .series_term("A2*(B1 - A1)/((A2 - A1)*B1)", "A1, A2 + 1, A3; B1 + 1, B2 | z")
            .series_term("A1*(B1 - A2)/((A1 - A2)*B1)", "A1 + 1, A2, A3; B1 + 1, B2 | z")
            .example(&[("A1", "1"), ("A2", "2"), ("A3", "1"), ("B1", "3"), ("B2", "4"), ("z", "1")])
            .0,
        Builder::fixed("3f2-1a", "2, 2, 2; 4, 4", "3/20", "4, 3, 3; 6, 5"),
        Builder::fixed("3f2-1b", "4, 3, 3; 6, 6", "2/21", "5, 4, 5; 8, 7"),
        Builder::fixed("counter1a", "2, 2, 2; 4, 4", "2", "1, 1, 2; 4, 4"),
        Builder::fixed("counter1b", "3, 2, 3; 6, 5", "2", "2, 1, 3; 6, 5"),
        Builder::fixed("counter2a", "4, 2, 3; 6, 5", "3/35", "4, 4, 5; 8, 6"),
        Builder::fixed("counter2b", "4, 3, 4; 7, 6", "5/7", "6, 3, 4; 8, 7"),
        Builder::fixed("counter2c", "4, 2, 3; 5, 6", "3/7", "4, 3, 4; 8, 5"),
        Builder::fixed("rewritten1", "3, 2, 4; 6, 5", "3", "2, 1, 4; 6, 5"),
        Builder::fixed("rewritten2", "3, 2, 2; 6, 5", "3/2", "2, 1, 2; 6, 5"),
        Builder::fixed("sato3hyp", "4, 2, 5; 6, 6", "5/9", "4, 3, 4; 7, 5"),
    ]
}
