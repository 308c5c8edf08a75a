mod common;

use common::*;
use proptest::prelude::*;
use trel_core::tableau::{BranchStatus, Strategy as Search};
use trel_core::{
    analyze, check_equivalence, eval2, eval3, is_determining, is_tautology, negated_form, parse as
    parse_text, refute, table, Assignment, CanonicalConjunction, Formula, Options, Program,
    TableMode, TruthValue, VarSet,
};

fn arb_assignment(vars: Vec<trel_core::Variable>) -> impl Strategy<Value = Assignment> {
    prop::collection::vec(prop::sample::select(TruthValue::ALL.to_vec()), vars.len())
        .prop_map(move |values| Assignment::from_values(&vars, &values))
}

fn formula_and_assignment(vars: usize, depth: u32) -> impl Strategy<Value = (Formula, Assignment)> {
    arb_formula(vars, depth).prop_flat_map(|f| {
        let vars = f.vars();
        (Just(f), arb_assignment(vars))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_parse_round_trip(f in arb_formula(4, 6)) {
        prop_assert_eq!(parse_text(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn vars_bounded_by_leaves(f in arb_formula(4, 6)) {
        let vars = f.vars();
        prop_assert!(!vars.is_empty());
        prop_assert!(vars.len() <= f.leaf_count());
    }

    #[test]
    fn program_agrees_with_tree_walk((f, a) in formula_and_assignment(4, 6)) {
        let program = Program::compile(&f);
        let values = a.project(program.vars()).unwrap();
        prop_assert_eq!(program.eval(&values), eval3(&f, &a).unwrap());
    }

    #[test]
    fn classical_restriction((f, a) in formula_and_assignment(4, 6)) {
        if a.is_definite() {
            prop_assert_eq!(eval3(&f, &a).unwrap(), eval2(&f, &a).unwrap());
        }
    }

    #[test]
    fn de_morgan(
        f in arb_formula(3, 3),
        g in arb_formula(3, 3),
        a in arb_assignment(parse("P & Q & R").vars()),
    ) {
        let lhs = Formula::not(Formula::and(f.clone(), g.clone()));
        let rhs = Formula::or(Formula::not(f), Formula::not(g));
        prop_assert_eq!(eval3(&lhs, &a).unwrap(), eval3(&rhs, &a).unwrap());
    }

    #[test]
    fn monotone_in_information(f in arb_formula(4, 6), seed in any::<u64>()) {
        let vars = f.vars();
        let mut rng = seed;
        let mut step = || { rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); rng >> 33 };
        let high: Vec<TruthValue> = vars.iter().map(|_| TruthValue::ALL[(step() % 3) as usize]).collect();
        let low: Vec<TruthValue> = high.iter().map(|&v| if step() % 2 == 0 { TruthValue::X } else { v }).collect();
        let lo = Assignment::from_values(&vars, &low);
        let hi = Assignment::from_values(&vars, &high);
        prop_assert!(lo.approximates(&hi));
        prop_assert!(eval3(&f, &lo).unwrap().approximates(eval3(&f, &hi).unwrap()));
    }

    #[test]
    fn all_unknown_collapses(f in arb_formula(5, 7)) {
        let a = Assignment::uniform(&f.vars(), TruthValue::X);
        prop_assert_eq!(eval3(&f, &a).unwrap(), TruthValue::X);
    }

    #[test]
    fn tables_are_consistent(f in arb_formula(3, 4)) {
        let opts = Options::default();
        let t = table(&f, TableMode::Three, &VarSet::default(), &opts).unwrap();
        prop_assert_eq!(t.rows.len(), 3usize.pow(f.vars().len() as u32));
        for pair in t.rows.windows(2) {
            prop_assert!(pair[0].values < pair[1].values);
        }
        for row in &t.rows {
            prop_assert_eq!(row.value, eval3(&f, &t.assignment(row)).unwrap());
        }
    }

    #[test]
    fn determining_sets_match_definition(f in arb_formula(3, 5)) {
        let opts = Options::default();
        for s in subsets(&f.vars()) {
            let set = VarSet::new(&f.vars(), s.clone()).unwrap();
            prop_assert_eq!(is_determining(&f, &set, &opts).unwrap(), oracle_determining(&f, &s));
        }
        let report = analyze(&f, &opts).unwrap();
        prop_assert_eq!(report.minimal_determining_sets.len(), oracle_minimal_sets(&f).len());
        prop_assert_eq!(
            report.is_t_relevant,
            report.minimal_determining_sets == vec![VarSet::all(&f.vars())]
        );
        prop_assert!(is_determining(&f, &VarSet::all(&f.vars()), &opts).unwrap());
    }

    #[test]
    fn tableau_sound_and_complete(f in arb_formula(4, 5)) {
        let opts = Options::default();
        let tautology = oracle_tautology(&f);
        for strategy in [Search::Default, Search::Reversed, Search::Exhaustive] {
            let tree = refute(&f, strategy, &opts).unwrap();
            prop_assert_eq!(tree.is_closed(), tautology);
            for b in &tree.branches {
                if let BranchStatus::Closed(pair) = &b.status {
                    prop_assert!(b.nodes.contains(&pair.earlier) && b.nodes.contains(&pair.later));
                }
            }
        }
        prop_assert_eq!(is_tautology(&f, &opts).unwrap(), tautology);
    }

    #[test]
    fn equivalence_implies_consequences(f in arb_formula(3, 5)) {
        let opts = Options::default();
        for s in subsets(&f.vars()).into_iter().filter(|s| !s.is_empty()) {
            let r = VarSet::new(&f.vars(), s.clone()).unwrap();
            let verdict = check_equivalence(&f, &r, &opts).unwrap();
            prop_assert_eq!(verdict.holds, verdict.witness.is_none());
            if let Some(w) = &verdict.witness {
                prop_assert_ne!(w.formula_value, w.canonical_value);
                prop_assert_eq!(eval3(&f, &w.assignment).unwrap(), w.formula_value);
            } else {
                prop_assert!(oracle_tautology(&f));
                prop_assert!(oracle_determining(&f, &s));
                for rj in &s {
                    let mut a = Assignment::uniform(&f.vars(), TruthValue::T);
                    a.set(rj.clone(), TruthValue::X);
                    prop_assert_eq!(eval3(&f, &a).unwrap(), TruthValue::X);
                }
            }
        }
    }

    #[test]
    fn canonical_duality(m in 1usize..=4, seed in 0u64..81) {
        let f = parse(&names(m).join(" & "));
        let r = VarSet::all(&f.vars());
        let c = CanonicalConjunction::new(r.clone()).unwrap();
        let neg = negated_form(&r).unwrap();
        let not_canon = Formula::not(c.to_formula());
        let values = trel_core::eval::decode_row(seed % 3u64.pow(m as u32), m, &TruthValue::ALL);
        let a = Assignment::from_values(&f.vars(), &values);
        let v = c.value(&a).unwrap();
        prop_assert_ne!(v, TruthValue::F);
        prop_assert_eq!(eval3(&c.to_formula(), &a).unwrap(), v);
        prop_assert_eq!(eval3(&neg, &a).unwrap(), v.dual());
        prop_assert_eq!(eval3(&not_canon, &a).unwrap(), v.dual());
    }
}
