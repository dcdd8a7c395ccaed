//! Canonical printing with minimal parentheses.
//!
//! `parse_formula(format_formula(f))` returns a value syntactically
//! identical to `f`, and no parenthesis pair in the output can be removed
//! without changing the parse.

use super::ast::{Formula, Sequent, Term};

// Binding strength of each formula node. Parent contexts demand a minimum
// strength from a child; weaker children get wrapped in parentheses.
const PREC_IMPL: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_NEG: u8 = 4;
const PREC_ATOM: u8 = 5;

fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Impl(..) => PREC_IMPL,
        Formula::Or(..) => PREC_OR,
        Formula::And(..) => PREC_AND,
        Formula::Neg(..) => PREC_NEG,
        Formula::PropVar(_) | Formula::PredAtom(..) | Formula::EqAtom(..) => PREC_ATOM,
    }
}

pub fn format_term(t: &Term) -> String {
    let mut out = String::new();
    write_term(t, &mut out);
    out
}

fn write_term(t: &Term, out: &mut String) {
    match t {
        Term::Zero => out.push('0'),
        Term::Var(name) => out.push_str(name),
        Term::Succ(inner) => {
            write_term(inner, out);
            out.push_str("+1");
        }
    }
}

pub fn format_formula(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(f, PREC_IMPL, &mut out);
    out
}

fn write_formula(f: &Formula, min: u8, out: &mut String) {
    let wrap = prec(f) < min;
    if wrap {
        out.push('(');
    }
    match f {
        Formula::PropVar(name) => out.push_str(name),
        Formula::PredAtom(p, t) => {
            out.push(p.letter());
            out.push('(');
            write_term(t, out);
            out.push(')');
        }
        Formula::EqAtom(l, r) => {
            write_term(l, out);
            out.push('=');
            write_term(r, out);
        }
        Formula::Neg(inner) => {
            out.push('~');
            write_formula(inner, PREC_NEG, out);
        }
        Formula::And(l, r) => {
            write_formula(l, PREC_AND, out);
            out.push('&');
            write_formula(r, PREC_AND + 1, out);
        }
        Formula::Or(l, r) => {
            write_formula(l, PREC_OR, out);
            out.push('|');
            write_formula(r, PREC_OR + 1, out);
        }
        Formula::Impl(l, r) => {
            write_formula(l, PREC_IMPL + 1, out);
            out.push_str("->");
            write_formula(r, PREC_IMPL, out);
        }
    }
    if wrap {
        out.push(')');
    }
}

pub fn format_formula_list(fs: &[Formula]) -> String {
    fs.iter().map(format_formula).collect::<Vec<_>>().join(", ")
}

pub fn format_sequent(s: &Sequent) -> String {
    match (s.antecedent.is_empty(), s.succedent.is_empty()) {
        (true, true) => "=>".to_string(),
        (true, false) => format!("=> {}", format_formula_list(&s.succedent)),
        (false, true) => format!("{} =>", format_formula_list(&s.antecedent)),
        (false, false) => format!(
            "{} => {}",
            format_formula_list(&s.antecedent),
            format_formula_list(&s.succedent)
        ),
    }
}
