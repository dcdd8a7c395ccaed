//! State equality modes.
//!
//! `Syntactic` is structural identity. `SetSides` compares sequent sides
//! as finite sets while formulas stay syntactic. `AlphaEquivalent`
//! additionally identifies states that differ only by a consistent
//! bijective renaming of term variables (propositional variables are
//! never renamed). Each mode is an equivalence relation, and each coarser
//! mode is implied by the finer one.

use super::ast::{Formula, Sequent, Term};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EqualityMode {
    #[default]
    Syntactic,
    SetSides,
    AlphaEquivalent,
}

impl EqualityMode {
    pub fn name(self) -> &'static str {
        match self {
            EqualityMode::Syntactic => "syntactic",
            EqualityMode::SetSides => "set-sides",
            EqualityMode::AlphaEquivalent => "alpha",
        }
    }

    pub fn from_name(name: &str) -> Option<EqualityMode> {
        match name {
            "syntactic" => Some(EqualityMode::Syntactic),
            "set-sides" => Some(EqualityMode::SetSides),
            "alpha" => Some(EqualityMode::AlphaEquivalent),
            _ => None,
        }
    }

    pub fn formulas_equal(self, a: &Formula, b: &Formula) -> bool {
        match self {
            // Set semantics only affects sequent sides; formulas compare
            // syntactically under both of the finer modes.
            EqualityMode::Syntactic | EqualityMode::SetSides => a == b,
            EqualityMode::AlphaEquivalent => {
                let mut binding = VarBinding::default();
                alpha_formula(a, b, &mut binding)
            }
        }
    }

    pub fn sequents_equal(self, a: &Sequent, b: &Sequent) -> bool {
        match self {
            EqualityMode::Syntactic => a == b,
            EqualityMode::SetSides => set_sides_equal(a, b),
            EqualityMode::AlphaEquivalent => alpha_sequents(a, b),
        }
    }
}

fn dedup(fs: &[Formula]) -> Vec<&Formula> {
    let mut out: Vec<&Formula> = Vec::new();
    for f in fs {
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

fn set_sides_equal(a: &Sequent, b: &Sequent) -> bool {
    let side_eq = |xs: &[Formula], ys: &[Formula]| {
        let xs = dedup(xs);
        let ys = dedup(ys);
        xs.len() == ys.len() && xs.iter().all(|x| ys.contains(x))
    };
    side_eq(&a.antecedent, &b.antecedent) && side_eq(&a.succedent, &b.succedent)
}

/// A partial bijection between term variable names, grown during alpha
/// matching. The reverse map enforces injectivity.
#[derive(Clone, Default)]
struct VarBinding {
    fwd: BTreeMap<String, String>,
    rev: BTreeMap<String, String>,
}

impl VarBinding {
    fn bind(&mut self, a: &str, b: &str) -> bool {
        match (self.fwd.get(a), self.rev.get(b)) {
            (Some(img), _) if img != b => false,
            (_, Some(pre)) if pre != a => false,
            _ => {
                self.fwd.insert(a.to_string(), b.to_string());
                self.rev.insert(b.to_string(), a.to_string());
                true
            }
        }
    }
}

fn alpha_term(a: &Term, b: &Term, binding: &mut VarBinding) -> bool {
    match (a, b) {
        (Term::Zero, Term::Zero) => true,
        (Term::Var(va), Term::Var(vb)) => binding.bind(va, vb),
        (Term::Succ(ia), Term::Succ(ib)) => alpha_term(ia, ib, binding),
        _ => false,
    }
}

fn alpha_formula(a: &Formula, b: &Formula, binding: &mut VarBinding) -> bool {
    match (a, b) {
        (Formula::PropVar(na), Formula::PropVar(nb)) => na == nb,
        (Formula::Neg(ia), Formula::Neg(ib)) => alpha_formula(ia, ib, binding),
        (Formula::And(la, ra), Formula::And(lb, rb))
        | (Formula::Or(la, ra), Formula::Or(lb, rb))
        | (Formula::Impl(la, ra), Formula::Impl(lb, rb)) => {
            alpha_formula(la, lb, binding) && alpha_formula(ra, rb, binding)
        }
        (Formula::PredAtom(pa, ta), Formula::PredAtom(pb, tb)) => {
            pa == pb && alpha_term(ta, tb, binding)
        }
        (Formula::EqAtom(la, ra), Formula::EqAtom(lb, rb)) => {
            alpha_term(la, lb, binding) && alpha_term(ra, rb, binding)
        }
        _ => false,
    }
}

/// Backtracking search for a perfect matching between the deduplicated
/// sides, threaded through one shared variable binding.
fn match_side(
    xs: &[&Formula],
    ys: &[&Formula],
    used: &mut Vec<bool>,
    binding: &VarBinding,
    cont: &mut dyn FnMut(&VarBinding) -> bool,
) -> bool {
    let Some((x, rest)) = xs.split_first() else {
        return cont(binding);
    };
    for (i, y) in ys.iter().enumerate() {
        if used[i] {
            continue;
        }
        let mut b2 = binding.clone();
        if alpha_formula(x, y, &mut b2) {
            used[i] = true;
            if match_side(rest, ys, used, &b2, cont) {
                used[i] = false;
                return true;
            }
            used[i] = false;
        }
    }
    false
}

fn alpha_sequents(a: &Sequent, b: &Sequent) -> bool {
    let ant_a = dedup(&a.antecedent);
    let ant_b = dedup(&b.antecedent);
    let suc_a = dedup(&a.succedent);
    let suc_b = dedup(&b.succedent);
    if ant_a.len() != ant_b.len() || suc_a.len() != suc_b.len() {
        return false;
    }
    let mut used_ant = vec![false; ant_b.len()];
    match_side(
        &ant_a,
        &ant_b,
        &mut used_ant,
        &VarBinding::default(),
        &mut {
            let suc_a = &suc_a;
            let suc_b = &suc_b;
            move |binding| {
                let mut used_suc = vec![false; suc_b.len()];
                match_side(suc_a, suc_b, &mut used_suc, binding, &mut |_| true)
            }
        },
    )
}
