use super::*;
use crate::scalar::ExactScalar;

fn q(n: i64, d: i64) -> ExactScalar {
    ExactScalar::ratio(n, d)
}

fn ls_example() -> ExactMatrix {
    ExactMatrix::from_rows(vec![
        vec![q(2, 1), q(0, 1), q(-5, 1), q(4, 1)],
        vec![q(7, 1), q(-4, 1), q(-9, 1), q(3, 2)],
        vec![q(3, 1), q(-4, 1), q(7, 1), q(-13, 2)],
        vec![q(1, 1), q(-4, 1), q(12, 1), q(-21, 2)],
    ])
    .unwrap()
}

fn drazin_example() -> ExactMatrix {
    ExactMatrix::from_ints(&[[1, -1, 1, 1], [0, 1, -1, 1], [1, -1, 1, 2], [1, -1, 1, 1]])
}

fn b() -> WorkBudget {
    WorkBudget::default()
}

#[test]
fn mp_golden_both_forms() {
    let a = ls_example();
    let expected = ExactMatrix::from_ints(&[
        [25779, -4905, 20742, -5037],
        [-3840, -2880, -4800, -960],
        [28350, -17010, 22680, -5670],
        [39558, -18810, 26484, -13074],
    ])
    .scale(&q(1, 102060));
    let col = mp_inverse(&a, Form::Column, b()).unwrap();
    let row = mp_inverse(&a, Form::Row, b()).unwrap();
    assert_eq!(col.inverse, expected);
    assert_eq!(row.inverse, expected);
    assert_eq!(col.rank_used, 3);
    assert_eq!(col.denominator, ExactScalar::from_int(102060));
    assert_eq!(col.representation, Representation::ColumnForm);
    assert_eq!(row.representation, Representation::RowForm);
    assert_eq!(mp_inverse_oracle(&a), expected);
}

#[test]
fn mp_trivial_cases() {
    let id = ExactMatrix::identity(3);
    let rep = mp_inverse(&id, Form::Auto, b()).unwrap();
    assert_eq!(rep.inverse, id);
    assert_eq!(rep.representation, Representation::FullRankAdjoint);

    let d = ExactMatrix::from_ints(&[[2, 0], [0, 0]]);
    let expected = ExactMatrix::from_rows(vec![vec![q(1, 2), q(0, 1)], vec![q(0, 1), q(0, 1)]]).unwrap();
    assert_eq!(mp_inverse(&d, Form::Auto, b()).unwrap().inverse, expected);

    let z = ExactMatrix::zeros(2, 3);
    let rep = mp_inverse(&z, Form::Auto, b()).unwrap();
    assert_eq!(rep.inverse, ExactMatrix::zeros(3, 2));
    assert_eq!(rep.rank_used, 0);
    assert_eq!(mp_inverse_oracle(&z), ExactMatrix::zeros(3, 2));
}

#[test]
fn mp_full_column_rank_uses_single_minor() {
    let a = ExactMatrix::from_gauss(&[[(1, 0), (0, 1)], [(2, 0), (0, 0)], [(0, -1), (1, 1)]]);
    let rep = mp_inverse(&a, Form::Column, b()).unwrap();
    assert_eq!(rep.representation, Representation::FullRankAdjoint);
    assert_eq!(rep.denominator, (&a.conj_transpose() * &a).det().unwrap());
    assert_eq!(rep.inverse, mp_inverse_oracle(&a));
    let row = mp_inverse(&a, Form::Row, b()).unwrap();
    assert_eq!(row.representation, Representation::RowForm);
    assert_eq!(row.inverse, rep.inverse);
}

#[test]
fn auto_form_picks_smaller_universe() {
    // 2x5 rank 2: C(5,2)=10 column subsets against C(2,2)=1 row subsets
    let a = ExactMatrix::from_ints(&[[1, 0, 2, 0, 1], [0, 1, 0, 3, 1]]);
    let rep = mp_inverse(&a, Form::Auto, b()).unwrap();
    assert_eq!(rep.representation, Representation::FullRankAdjoint);
    assert_eq!(rep.denominator, (&a * &a.conj_transpose()).det().unwrap());
    assert_eq!(rep.inverse, mp_inverse_oracle(&a));
}

#[test]
fn weighted_identity_weights_match_mp() {
    let a = ls_example();
    let w = WeightPair::identity(4, 4);
    let rep = weighted_mp_inverse(&a, &w, Form::Auto, b()).unwrap();
    assert_eq!(rep.inverse, mp_inverse(&a, Form::Auto, b()).unwrap().inverse);
    assert_eq!(
        weighted_mp_inverse(&a, &w, Form::Row, b()),
        Err(Error::RowFormUnsupported)
    );
}

#[test]
fn weighted_nonsingular_is_inverse() {
    let a = ExactMatrix::from_gauss(&[[(1, 0), (2, 1)], [(0, 0), (3, 0)]]);
    let w = WeightPair::new(
        ExactMatrix::from_gauss(&[[(2, 0), (0, 1)], [(0, -1), (3, 0)]]),
        ExactMatrix::from_ints(&[[5, 0], [0, 1]]),
    )
    .unwrap();
    let rep = weighted_mp_inverse(&a, &w, Form::Auto, b()).unwrap();
    assert_eq!(rep.inverse, a.inverse().unwrap());
}

#[test]
fn weighted_rejects_non_hpd() {
    let bad = ExactMatrix::from_ints(&[[1, 2], [2, 1]]);
    assert_eq!(
        WeightPair::new(bad.clone(), ExactMatrix::identity(2)),
        Err(Error::NotPositiveDefinite { which: "M" })
    );
    assert_eq!(
        WeightPair::new(ExactMatrix::identity(2), bad),
        Err(Error::NotPositiveDefinite { which: "N" })
    );
}

#[test]
fn weighted_defining_equations() {
    let a = ExactMatrix::from_gauss(&[
        [(1, 0), (0, 1), (2, 0), (1, 0)],
        [(0, 0), (1, 1), (0, 0), (-1, 0)],
        [(1, 0), (1, 2), (2, 0), (0, 0)],
    ]);
    let w = WeightPair::new(
        ExactMatrix::from_ints(&[[2, 0, 0], [0, 3, 0], [0, 0, 1]]),
        ExactMatrix::from_ints(&[[1, 0, 0, 0], [0, 4, 0, 0], [0, 0, 2, 0], [0, 0, 0, 5]]),
    )
    .unwrap();
    let rep = weighted_mp_inverse(&a, &w, Form::Auto, b()).unwrap();
    assert_eq!(rep.rank_used, 2);
    let v = verify_defining_equations(&a, &rep.inverse, &InverseKind::WeightedMp(w)).unwrap();
    assert!(v.all_hold(), "{v:?}");
}

#[test]
fn drazin_golden() {
    let a = drazin_example();
    let expected = ExactMatrix::from_rows(vec![
        vec![q(1, 2), q(1, 2), q(-1, 2), q(1, 2)],
        vec![q(7, 4), q(5, 2), q(-5, 2), q(7, 4)],
        vec![q(5, 4), q(3, 2), q(-3, 2), q(5, 4)],
        vec![q(1, 2), q(1, 2), q(-1, 2), q(1, 2)],
    ])
    .unwrap();
    for form in [Form::Column, Form::Row] {
        let rep = drazin_inverse(&a, form, b()).unwrap();
        assert_eq!(rep.inverse, expected);
        assert_eq!(rep.index_used, 2);
        assert_eq!(rep.rank_used, 2);
        assert_eq!(rep.denominator, ExactScalar::from_int(8));
    }
    assert_eq!(drazin_inverse_oracle(&a).unwrap(), expected);
}

#[test]
fn drazin_trivial_cases() {
    let a = ExactMatrix::from_gauss(&[[(1, 1), (2, 0)], [(0, 0), (0, 1)]]);
    let rep = drazin_inverse(&a, Form::Auto, b()).unwrap();
    assert_eq!(rep.inverse, a.inverse().unwrap());
    assert_eq!(rep.index_used, 0);
    assert_eq!(rep.representation, Representation::FullRankAdjoint);

    let j = ExactMatrix::from_ints(&[[0, 1, 0], [0, 0, 1], [0, 0, 0]]);
    let rep = drazin_inverse(&j, Form::Auto, b()).unwrap();
    assert!(rep.inverse.is_zero());
    assert_eq!(rep.index_used, 3);
    assert_eq!(drazin_inverse_oracle(&ExactMatrix::identity(3)).unwrap(), ExactMatrix::identity(3));
}

#[test]
fn group_inverse_cases() {
    let p = ExactMatrix::from_ints(&[[1, 1], [0, 0]]);
    assert_eq!(p.pow(2).unwrap(), p);
    assert_eq!(group_inverse(&p, Form::Auto, b()).unwrap().inverse, p);
    let a = ExactMatrix::from_ints(&[[2, 1], [1, 1]]);
    assert_eq!(group_inverse(&a, Form::Row, b()).unwrap().inverse, a.inverse().unwrap());
    assert_eq!(
        group_inverse(&drazin_example(), Form::Auto, b()),
        Err(Error::GroupInverseMissing { index: 2 })
    );
}

#[test]
fn w_drazin_identity_weight_is_drazin() {
    let a = drazin_example();
    let id = ExactMatrix::identity(4);
    for form in [Form::Column, Form::Row] {
        let rep = w_drazin_inverse(&a, &id, form, b()).unwrap();
        assert_eq!(rep.inverse, drazin_inverse(&a, Form::Auto, b()).unwrap().inverse);
    }
    let n = ExactMatrix::from_ints(&[[2, 1], [1, 1]]);
    let rep = w_drazin_inverse(&n, &ExactMatrix::identity(2), Form::Auto, b()).unwrap();
    assert_eq!(rep.inverse, n.inverse().unwrap());
}

#[test]
fn w_drazin_rectangular_forms_agree() {
    let a = ExactMatrix::from_ints(&[[1, 0], [0, 1], [1, 1]]);
    let w = ExactMatrix::from_ints(&[[1, 0, 0], [0, 0, 1]]);
    let col = w_drazin_inverse(&a, &w, Form::Column, b()).unwrap();
    let row = w_drazin_inverse(&a, &w, Form::Row, b()).unwrap();
    assert_eq!(col.inverse, row.inverse);
    let v = verify_defining_equations(&a, &col.inverse, &InverseKind::WDrazin(w.clone())).unwrap();
    assert!(v.all_hold(), "{v:?}");
    assert!(w_drazin_inverse(&a, &a, Form::Auto, b()).is_err());
}

#[test]
fn projector_cases() {
    let id = ExactMatrix::identity(3);
    for which in [
        ProjectorKind::In,
        ProjectorKind::Out,
        ProjectorKind::DrazinLeft,
        ProjectorKind::DrazinRight,
    ] {
        assert_eq!(projector(&id, which, b()).unwrap(), id);
        let z = ExactMatrix::zeros(3, 3);
        assert!(projector(&z, which, b()).unwrap().is_zero());
    }
    let a = ls_example();
    let pinv = mp_inverse(&a, Form::Auto, b()).unwrap().inverse;
    assert_eq!(projector(&a, ProjectorKind::In, b()).unwrap(), &pinv * &a);
    assert_eq!(projector(&a, ProjectorKind::Out, b()).unwrap(), &a * &pinv);
    let d = drazin_example();
    let dinv = drazin_inverse(&d, Form::Auto, b()).unwrap().inverse;
    assert_eq!(projector(&d, ProjectorKind::DrazinLeft, b()).unwrap(), &d * &dinv);
    assert_eq!(projector(&d, ProjectorKind::DrazinRight, b()).unwrap(), &dinv * &d);
}

#[test]
fn verify_reports() {
    let id = ExactMatrix::identity(2);
    assert!(verify_defining_equations(&id, &id, &InverseKind::Mp).unwrap().all_hold());
    let a = ExactMatrix::from_ints(&[[1, 1], [0, 1]]);
    let r = verify_defining_equations(&a, &a.conj_transpose(), &InverseKind::Mp).unwrap();
    assert!(!r.all_hold());
    assert!(r.failed().contains(&"AXA=A"));
    assert!(verify_defining_equations(&a, &ExactMatrix::zeros(3, 2), &InverseKind::Mp).is_err());
}

#[test]
fn budget_guard() {
    let mut rows = vec![vec![0i64; 20]; 20];
    for (i, row) in rows.iter_mut().enumerate().take(10) {
        row[i] = 1;
        row[(i + 3) % 20] = 2;
    }
    let a = ExactMatrix::from_ints(&rows);
    assert_eq!(a.rank(), 10);
    assert!(matches!(
        mp_inverse(&a, Form::Auto, WorkBudget::default()),
        Err(Error::BudgetExceeded { .. })
    ));
}
