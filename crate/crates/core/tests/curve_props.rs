use num_rational::BigRational;
use proptest::prelude::*;

use quartic_k3::cover::{cover_report_octavic, cover_report_quartic, fibration_fibers, PicardData};
use quartic_k3::octavic::{multiplicities, octavic_stability, parse_octavic, ConeSingularity};
use quartic_k3::poly::{NumberField, ProjPoint};
use quartic_k3::quartic::{
    classify_singularity, git_stability, parse_quartic, singular_points, MinimalOrbit, QuarticForm, SingularityKind,
    StabilityClass,
};
use quartic_k3::strata::{anti_invariant_part, SingularType, TABLE};

fn linear(c: &[i64]) -> String {
    format!("({}*x + {}*y + {}*z)", c[0], c[1], c[2])
}

fn det3(a: &[i64], b: &[i64], c: &[i64]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn proportional(a: &[i64], b: &[i64]) -> bool {
    (a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[1] * b[2] - a[2] * b[1]) == (0, 0, 0)
}

fn nonzero_line() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 3).prop_filter("a line", |c| c.iter().any(|&x| x != 0))
}

fn origin() -> ProjPoint {
    let q = NumberField::rationals();
    let r = |k: i64| q.from_rational(&BigRational::from_integer(k.into()));
    ProjPoint::new([r(0), r(0), r(1)])
}

fn unimodular() -> impl Strategy<Value = [[i64; 3]; 3]> {
    prop::collection::vec((0..3usize, 1..3usize, -2i64..=2), 1..5).prop_map(|ops| {
        let mut m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        for (i, shift, k) in ops {
            let j = (i + shift) % 3;
            for row in m.iter_mut() {
                row[j] += k * row[i];
            }
        }
        m
    })
}

/// Invariants every verdict must satisfy.
fn check_witnesses(f: &QuarticForm) -> Result<StabilityClass, TestCaseError> {
    let v = git_stability(f).map_err(|e| TestCaseError::fail(e.to_string()))?;
    match v.class {
        StabilityClass::Stable => {
            prop_assert!(v.witnesses.iter().all(|w| matches!(w.kind, SingularityKind::Node | SingularityKind::Cusp)));
            let t = v.singular_type().unwrap();
            prop_assert!(t.n + t.c <= 6, "type {} breaks the genus bound", t);
            let c = cover_report_quartic(&v, Some(t)).map_err(|e| TestCaseError::fail(e.to_string()))?;
            if let Some(PicardData::Tabulated(r)) = &c.picard {
                prop_assert_eq!(r.picard_rank, anti_invariant_part(t).rank() + 8);
            }
            prop_assert!(c.picard.is_some());
        }
        StabilityClass::Unstable => {
            prop_assert!(v.witnesses.iter().any(|w| w.multiplicity >= 3 || w.kind == SingularityKind::HigherA));
            prop_assert!(cover_report_quartic(&v, None).is_err());
        }
        StabilityClass::StrictlySemistable => {
            let c = cover_report_quartic(&v, None).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert!(c.picard.is_none());
        }
    }
    Ok(v.class)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Four lines: stable of type (6,0) unless two coincide or three meet.
    #[test]
    fn four_lines(lines in prop::collection::vec(nonzero_line(), 4)) {
        let f = parse_quartic(&lines.iter().map(|l| linear(l)).collect::<Vec<_>>().join("*")).unwrap();
        let idx = [0usize, 1, 2, 3];
        let repeated = idx.iter().any(|&i| idx.iter().any(|&j| i < j && proportional(&lines[i], &lines[j])));
        let concurrent = (0..4).any(|skip| {
            let t: Vec<&Vec<i64>> = lines.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, l)| l).collect();
            det3(t[0], t[1], t[2]) == 0
        });
        let class = check_witnesses(&f)?;
        if repeated || concurrent {
            prop_assert_eq!(class, StabilityClass::Unstable);
        } else {
            prop_assert_eq!(class, StabilityClass::Stable);
            prop_assert_eq!(git_stability(&f).unwrap().singular_type(), Some(SingularType::new(6, 0)));
        }
    }

    /// A double point at (0:0:1) with tangent cone `l1 l2`: a node when the
    /// lines differ; with `l1 = l2` a cusp exactly when the cubic term does
    /// not vanish along the tangent.
    #[test]
    fn double_point_at_origin(
        tangents in prop::collection::vec(-3i64..=3, 4),
        cubic in prop::collection::vec(-3i64..=3, 4),
        quartic in prop::collection::vec(-2i64..=2, 5),
        g in unimodular(),
    ) {
        let [a, b, c, d] = [tangents[0], tangents[1], tangents[2], tangents[3]];
        prop_assume!((a, b) != (0, 0) && (c, d) != (0, 0));
        let cubic_at = |x: i64, y: i64| cubic[0] * x * x * x + cubic[1] * x * x * y + cubic[2] * x * y * y + cubic[3] * y * y * y;
        let text = format!(
            "({a}*x + {b}*y)*({c}*x + {d}*y)*z^2 + ({}*x^3 + {}*x^2*y + {}*x*y^2 + {}*y^3)*z + {}*x^4 + {}*x^3*y + {}*x^2*y^2 + {}*x*y^3 + {}*y^4",
            cubic[0], cubic[1], cubic[2], cubic[3], quartic[0], quartic[1], quartic[2], quartic[3], quartic[4]
        );
        let f = parse_quartic(&text).unwrap();
        let p = origin();
        let kind = classify_singularity(&f, &p).unwrap().kind;
        let swapped = f.transform(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        prop_assert_eq!(classify_singularity(&swapped, &p).unwrap().kind, kind);
        // moving the plane around the point keeps the type
        let fixed_origin = [[g[0][0], g[0][1], 0], [g[1][0], g[1][1], 0], [g[2][0], g[2][1], 1]];
        let det2 = fixed_origin[0][0] * fixed_origin[1][1] - fixed_origin[0][1] * fixed_origin[1][0];
        if det2.abs() == 1 {
            prop_assert_eq!(classify_singularity(&f.transform(&fixed_origin), &p).unwrap().kind, kind);
        }
        if a * d - b * c != 0 {
            prop_assert_eq!(kind, SingularityKind::Node);
        } else {
            // the tangent line is a x + b y = 0, direction (-b, a)
            let (ta, tb) = if (a, b) != (0, 0) { (a, b) } else { (c, d) };
            if cubic_at(-tb, ta) != 0 {
                prop_assert_eq!(kind, SingularityKind::Cusp);
            } else {
                prop_assert!(!matches!(kind, SingularityKind::Node | SingularityKind::Cusp));
            }
        }
    }

    #[test]
    fn verdict_is_projectively_invariant(idx in 0usize..7, g in unimodular()) {
        let corpus = [
            "x^4 + y^4 + z^4",
            "y^2*z^2 - x^2*z^2 + x^4 + y^4",
            "y^2*z^2 - x^3*z + y^4",
            "y^2*z^2 - x^4",
            "(y*z + x^2)^2 + x*y^3",
            "x^3*z + y^4",
            "(x^2 + y^2 - z^2)*x*y",
        ];
        let f = parse_quartic(corpus[idx]).unwrap();
        let (v, w) = (git_stability(&f).unwrap(), git_stability(&f.transform(&g)).unwrap());
        prop_assert_eq!(v.class, w.class);
        prop_assert_eq!(v.minimal_orbit, w.minimal_orbit);
        prop_assert_eq!(v.singular_type(), w.singular_type());
        check_witnesses(&f.transform(&g))?;
    }

    /// `q^2` for a smooth conic `q`: semistable with the double conic as
    /// minimal orbit, and not a curve with isolated singularities.
    #[test]
    fn double_conics(c in prop::collection::vec(-2i64..=2, 6)) {
        let q = [[2 * c[0], c[3], c[4]], [c[3], 2 * c[1], c[5]], [c[4], c[5], 2 * c[2]]];
        let rows: Vec<Vec<i64>> = q.iter().map(|r| r.to_vec()).collect();
        prop_assume!(det3(&rows[0], &rows[1], &rows[2]) != 0);
        let text = format!(
            "({}*x^2 + {}*y^2 + {}*z^2 + {}*x*y + {}*x*z + {}*y*z)^2",
            c[0], c[1], c[2], c[3], c[4], c[5]
        );
        let f = parse_quartic(&text).unwrap();
        let v = git_stability(&f).unwrap();
        prop_assert_eq!(v.class, StabilityClass::StrictlySemistable);
        prop_assert_eq!(v.minimal_orbit, Some(MinimalOrbit::DoubleConic));
        prop_assert!(v.witnesses.iter().all(|w| w.kind == SingularityKind::NonIsolated));
        prop_assert!(singular_points(&f).is_err());
    }
}

/// Distinct points of `P^1` with multiplicities summing to 8.
fn octavic_roots() -> impl Strategy<Value = Vec<((i64, i64), u32)>> {
    let point = (-4i64..=4, 0i64..=3).prop_filter("a point", |&(a, b)| (a, b) != (0, 0));
    prop::collection::vec((point, 1u32..=6), 1..=8).prop_filter_map("distinct roots of total degree 8", |mut v| {
        v.dedup_by(|x, y| x.0 .0 * y.0 .1 == x.0 .1 * y.0 .0);
        for i in 0..v.len() {
            for j in 0..i {
                if v[i].0 .0 * v[j].0 .1 == v[i].0 .1 * v[j].0 .0 {
                    return None;
                }
            }
        }
        let total: u32 = v.iter().map(|r| r.1).sum();
        (total == 8).then_some(v)
    })
}

fn octavic_text(roots: &[((i64, i64), u32)]) -> String {
    roots.iter().map(|((a, b), m)| format!("({b}*x - {a}*y)^{m}")).collect::<Vec<_>>().join("*")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn octavic_profile_and_invariance(
        roots in octavic_roots(),
        m in prop::collection::vec(-3i64..=3, 4),
    ) {
        let f = parse_octavic(&octavic_text(&roots)).unwrap();
        let mut expected: Vec<u32> = roots.iter().map(|r| r.1).collect();
        expected.sort_unstable_by(|a, b| b.cmp(a));
        let v = octavic_stability(&f);
        prop_assert_eq!(&v.profile, &expected);
        prop_assert_eq!(multiplicities(&f).total(), 8);
        let top = expected[0];
        let class = if top <= 3 { StabilityClass::Stable } else if top == 4 { StabilityClass::StrictlySemistable } else { StabilityClass::Unstable };
        prop_assert_eq!(v.class, class);
        prop_assert_eq!(v.minimal_orbit.is_some(), expected == [4, 4]);

        prop_assert_eq!(octavic_stability(&f.swap()).profile, expected.clone());
        let mild = v.witnesses.iter().all(|w| matches!(w.kind, ConeSingularity::Node | ConeSingularity::Cusp));
        prop_assert_eq!(mild, v.class == StabilityClass::Stable);

        if m[0] * m[3] - m[1] * m[2] != 0 {
            let w = octavic_stability(&f.substitute([m[0], m[1], m[2], m[3]]).unwrap());
            prop_assert_eq!(w.class, v.class);
            prop_assert_eq!(w.minimal_orbit, v.minimal_orbit);
            prop_assert_eq!(w.profile, v.profile.clone());
        }
        match v.class {
            StabilityClass::Unstable => prop_assert!(cover_report_octavic(&v).is_err()),
            _ => prop_assert!(cover_report_octavic(&v).unwrap().picard.is_none()),
        }
    }
}

#[test]
fn fibration_euler_sums_stay_within_24() {
    let mut seen = 0;
    for (n, c, _) in TABLE {
        if let Ok(s) = fibration_fibers(SingularType::new(n, c)) {
            let sum: u32 = s.fibers.iter().map(|(f, k)| f.euler_number() * k).sum();
            assert_eq!(sum, s.euler_sum);
            assert!(sum <= 24);
            assert_eq!(s.residual_euler, 24 - sum);
            seen += 1;
        }
    }
    assert_eq!(seen, 2);
}
