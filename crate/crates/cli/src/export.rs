use std::fmt::Write as _;

use polygb::gbasis::Binomial;
use polygb::orders::{ExponentVector, MonomialOrder};
use polygb::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CasFormat {
    Macaulay2,
    Singular,
    Text,
}

fn monomial(m: &ExponentVector, var: &dyn Fn(Vertex) -> String) -> String {
    m.entries()
        .iter()
        .map(|&(v, e)| if e == 1 { var(v) } else { format!("{}^{e}", var(v)) })
        .collect::<Vec<_>>()
        .join("*")
}

fn binomial(g: &Binomial, var: &dyn Fn(Vertex) -> String) -> String {
    format!("{} - {}", monomial(g.plus(), var), monomial(g.minus(), var))
}

/// Generators oriented by `order`, as a script for an external system.
///
/// Ring variables are listed largest first, so the system's graded reverse
/// lexicographic order coincides with `order`.
pub fn render(format: CasFormat, gens: &[Binomial], order: &MonomialOrder) -> String {
    let mut gens: Vec<Binomial> = gens.iter().cloned().map(|g| g.oriented(order)).collect();
    gens.sort();
    let descending: Vec<Vertex> = order.base().vertices().iter().rev().copied().collect();
    let mut out = String::new();
    match format {
        CasFormat::Text => {
            for g in &gens {
                writeln!(out, "{g}").unwrap();
            }
        }
        CasFormat::Macaulay2 => {
            let var = |v: Vertex| format!("x_({},{})", v.x, v.y);
            let vars: Vec<String> = descending.iter().map(|&v| var(v)).collect();
            writeln!(out, "R = QQ[{}, MonomialOrder => GRevLex];", vars.join(", ")).unwrap();
            let body: Vec<String> = gens.iter().map(|g| format!("  {}", binomial(g, &var))).collect();
            writeln!(out, "I = ideal(\n{}\n);", body.join(",\n")).unwrap();
            writeln!(out, "G = gens gb I;").unwrap();
            writeln!(out, "print toString G;").unwrap();
            writeln!(out, "print isPrime I;").unwrap();
        }
        CasFormat::Singular => {
            let var = |v: Vertex| format!("x({})({})", v.x, v.y);
            let vars: Vec<String> = descending.iter().map(|&v| var(v)).collect();
            writeln!(out, "ring R = 0, ({}), dp;", vars.join(", ")).unwrap();
            let body: Vec<String> = gens.iter().map(|g| format!("  {}", binomial(g, &var))).collect();
            writeln!(out, "ideal I =\n{};", body.join(",\n")).unwrap();
            writeln!(out, "ideal G = std(I);").unwrap();
            writeln!(out, "G;").unwrap();
        }
    }
    out
}
