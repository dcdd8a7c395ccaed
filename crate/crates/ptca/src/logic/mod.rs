//! The formula and sequent languages used as cell-state alphabets:
//! parsing, canonical printing, equality modes, substitution and
//! free-variable computation.
//!
//! All values are immutable after construction and all operations are
//! pure functions.

mod ast;
mod eq;
mod parse;
mod print;
mod subst;

pub use ast::{Formula, Pred, Sequent, Term};
pub use eq::EqualityMode;
pub use parse::{parse_formula, parse_formula_list, parse_sequent, ParseError};
pub use print::{format_formula, format_formula_list, format_sequent, format_term};
pub use subst::{
    free_vars, free_vars_formula, substitute, substitute_formula, substitute_term, term_vars,
    Renaming,
};

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn seq(s: &str) -> Sequent {
        parse_sequent(s).unwrap()
    }

    #[test]
    fn parses_nested_implication() {
        // Leftmost cell of the modus-ponens demonstration grid.
        let got = f("(p->q)->r");
        let want = Formula::impl_(
            Formula::impl_(Formula::var("p"), Formula::var("q")),
            Formula::var("r"),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn parses_leaf() {
        assert_eq!(f("p"), Formula::var("p"));
    }

    #[test]
    fn precedence_of_negation_over_disjunction() {
        let got = f("~p|q");
        let want = Formula::or(Formula::neg(Formula::var("p")), Formula::var("q"));
        assert_eq!(got, want);
    }

    // Brute-force oracle: enumerate all small formulas and keep the ones
    // whose canonical rendering is exactly the input string. The grammar
    // is unambiguous iff exactly one tree renders to the string.
    fn enumerate_formulas(atoms: &[&str], size: usize) -> Vec<Formula> {
        let mut by_size: Vec<Vec<Formula>> = vec![Vec::new(); size + 1];
        for a in atoms {
            by_size[1].push(Formula::var(*a));
        }
        for n in 2..=size {
            let mut level = Vec::new();
            for inner in &by_size[n - 1] {
                level.push(Formula::neg(inner.clone()));
            }
            for left_n in 1..n - 1 {
                let right_n = n - 1 - left_n;
                for l in &by_size[left_n] {
                    for r in &by_size[right_n] {
                        level.push(Formula::and(l.clone(), r.clone()));
                        level.push(Formula::or(l.clone(), r.clone()));
                        level.push(Formula::impl_(l.clone(), r.clone()));
                    }
                }
            }
            by_size[n] = level;
        }
        by_size.into_iter().flatten().collect()
    }

    #[test]
    fn precedence_matches_exhaustive_oracle() {
        let universe = enumerate_formulas(&["p", "q", "r"], 5);
        for text in ["~p|q", "p->q->r", "p&q|r", "~p&q", "p|q&r", "~(p|q)"] {
            let trees: Vec<&Formula> = universe
                .iter()
                .filter(|t| format_formula(t) == text)
                .collect();
            assert_eq!(
                trees.len(),
                1,
                "oracle found {} trees for {text}",
                trees.len()
            );
            assert_eq!(&f(text), trees[0], "parser disagrees with oracle on {text}");
        }
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_formula("p->") {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_formula("p ? q") {
            Err(ParseError::Lexical { pos, ch }) => {
                assert_eq!((pos, ch), (2, '?'));
            }
            other => panic!("expected lexical error, got {other:?}"),
        }
        match parse_formula("N(x, y)") {
            Err(ParseError::PredicateArity { pred, .. }) => assert_eq!(pred, 'N'),
            other => panic!("expected arity error, got {other:?}"),
        }
    }

    #[test]
    fn parses_sequents() {
        let s = seq("p => q, r");
        assert_eq!(s.antecedent, vec![Formula::var("p")]);
        assert_eq!(s.succedent, vec![Formula::var("q"), Formula::var("r")]);

        let s = seq("N(x) => O(x), E(x)");
        assert_eq!(
            s.antecedent,
            vec![Formula::pred(Pred::Natural, Term::var("x"))]
        );
        assert_eq!(
            s.succedent,
            vec![
                Formula::pred(Pred::Odd, Term::var("x")),
                Formula::pred(Pred::Even, Term::var("x")),
            ]
        );

        let s = seq("=>");
        assert!(s.antecedent.is_empty() && s.succedent.is_empty());
    }

    #[test]
    fn double_sequent_arrow_rejected() {
        assert!(matches!(
            parse_sequent("p => q => r"),
            Err(ParseError::ExtraSequentArrow { .. })
        ));
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(
            format_formula(&Formula::impl_(
                Formula::impl_(Formula::var("p"), Formula::var("q")),
                Formula::var("r")
            )),
            "(p->q)->r"
        );
        assert_eq!(
            format_formula(&Formula::or(
                Formula::neg(Formula::var("p")),
                Formula::var("q")
            )),
            "~p|q"
        );
        // Right-associativity makes the parentheses redundant; the
        // round-trip confirms it.
        let nested = Formula::impl_(
            Formula::var("p"),
            Formula::impl_(Formula::var("q"), Formula::var("p")),
        );
        let text = format_formula(&nested);
        assert_eq!(text, "p->q->p");
        assert_eq!(f(&text), nested);
    }

    #[test]
    fn term_syntax_round_trips() {
        let s = seq("z=(y+1), N(y) => O(z)");
        assert_eq!(format_sequent(&s), "z=y+1, N(y) => O(z)");
        assert_eq!(seq(&format_sequent(&s)), s);
        assert_eq!(format_term(&Term::succ(Term::succ(Term::Zero))), "0+1+1");
    }

    #[test]
    fn whitespace_is_insignificant_between_tokens() {
        assert_eq!(f("  ( p -> q )   ->r "), f("(p->q)->r"));
        assert_eq!(seq(" N( x ) =>O( x ) ,  E(x)"), seq("N(x) => O(x), E(x)"));
        assert_eq!(f("~ p | q"), f("~p|q"));
    }

    #[test]
    fn bare_term_is_not_a_formula() {
        assert!(parse_formula("0").is_err());
        assert!(parse_formula("x+1").is_err());
    }

    #[test]
    fn set_sides_equality() {
        let a = seq("p => q, r");
        let b = seq("p => r, q");
        assert!(EqualityMode::SetSides.sequents_equal(&a, &b));
        assert!(!EqualityMode::Syntactic.sequents_equal(&a, &b));
        // Sets collapse duplicates.
        assert!(EqualityMode::SetSides.sequents_equal(&seq("p, p => q"), &seq("p => q")));
    }

    // Oracle: try every injective renaming of the variables of `a` onto
    // the variables of `b` and test set-sides equality of the images.
    fn alpha_oracle(a: &Sequent, b: &Sequent) -> bool {
        let va: Vec<String> = free_vars(a).into_iter().collect();
        let vb: Vec<String> = free_vars(b).into_iter().collect();
        if va.len() != vb.len() {
            return false;
        }
        fn perms(items: &[String]) -> Vec<Vec<String>> {
            if items.is_empty() {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for (i, x) in items.iter().enumerate() {
                let mut rest = items.to_vec();
                rest.remove(i);
                for mut p in perms(&rest) {
                    p.insert(0, x.clone());
                    out.push(p);
                }
            }
            out
        }
        perms(&vb).into_iter().any(|perm| {
            let renaming: Renaming = va
                .iter()
                .cloned()
                .zip(perm.into_iter().map(Term::Var))
                .collect();
            EqualityMode::SetSides.sequents_equal(&substitute(a, &renaming), b)
        })
    }

    #[test]
    fn alpha_equivalence_matches_renaming_oracle() {
        let cases = [
            ("N(y) => O(y)", "N(z) => O(z)", true),
            ("N(y) => O(y), E(y)", "N(z) => E(z), O(z)", true),
            ("N(x), E(y) => ", "E(u), N(w) => ", true),
            ("N(y) => O(y)", "N(z) => O(z+1)", false),
            ("N(y) => O(y+1)", "N(z) => O(z+1)", true),
            ("x=y, N(x) => ", "u=w, N(w) => ", false),
            ("x=y+1, N(y) => O(x)", "a=b+1, N(b) => O(a)", true),
            ("N(x), N(y) => ", "N(z) => ", false),
            ("p => q", "p => q", true),
            ("p => q", "q => p", false),
        ];
        for (sa, sb, want) in cases {
            let a = seq(sa);
            let b = seq(sb);
            assert_eq!(
                EqualityMode::AlphaEquivalent.sequents_equal(&a, &b),
                want,
                "alpha({sa}, {sb})"
            );
            assert_eq!(alpha_oracle(&a, &b), want, "oracle({sa}, {sb})");
        }
    }

    #[test]
    fn substitution_examples() {
        let s = seq("N(z) => O(z), E(z)");
        let mut r: Renaming = BTreeMap::new();
        r.insert("z".to_string(), Term::var("y"));
        assert_eq!(substitute(&s, &r), seq("N(y) => O(y), E(y)"));

        let s = seq("p => q");
        assert_eq!(substitute(&s, &BTreeMap::new()), s);

        let s = seq("N(x) => N(x+1)");
        let mut r: Renaming = BTreeMap::new();
        r.insert("x".to_string(), Term::Zero);
        assert_eq!(substitute(&s, &r), seq("N(0) => N(0+1)"));
    }

    #[test]
    fn free_vars_examples() {
        let vars = |s: &str| -> Vec<String> { free_vars(&seq(s)).into_iter().collect() };
        assert_eq!(vars("N(x) => O(x+1)"), vec!["x"]);
        assert!(vars("p => q").is_empty());
        assert_eq!(vars("z=(y+1), N(y) => O(z)"), vec!["y", "z"]);
    }
}
