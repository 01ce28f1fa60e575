use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::poly::field::solve_linear;
use crate::poly::form::Exp;
use crate::poly::solve::{attempt_change, common_zeros, to_rational_matrix, IMat3, ProjPoint, ATTEMPTS};
use crate::poly::{rat, Field, NfElem, Poly3, QForm, RatFunc, UPoly};
use crate::strata::SingularType;

use super::local::{classify_local, LocalModel, SingularityKind, SingularityReport};
use super::{count_type, QuarticError, QuarticForm};

pub const ORBIT_LIMIT_V0: &str = "maps to v0";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityClass {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilityClass::Stable => "stable",
            StabilityClass::StrictlySemistable => "strictly_semistable",
            StabilityClass::Unstable => "unstable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimalOrbit {
    DoubleConic,
    TwoTangentConics,
    NotMinimal,
    /// binary octavics with two distinct roots of multiplicity 4
    TwoQuadruplePoints,
}

impl fmt::Display for MinimalOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MinimalOrbit::DoubleConic => "double_conic",
            MinimalOrbit::TwoTangentConics => "two_tangent_conics",
            MinimalOrbit::NotMinimal => "not_minimal",
            MinimalOrbit::TwoQuadruplePoints => "two_quadruple_points",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityVerdict {
    pub class: StabilityClass,
    pub minimal_orbit: Option<MinimalOrbit>,
    pub orbit_limit: Option<String>,
    pub witnesses: Vec<SingularityReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl StabilityVerdict {
    /// `(n, c)` for stable verdicts.
    pub fn singular_type(&self) -> Option<SingularType> {
        (self.class == StabilityClass::Stable).then(|| count_type(&self.witnesses))
    }

    fn new(class: StabilityClass, witnesses: Vec<SingularityReport>) -> StabilityVerdict {
        StabilityVerdict { class, minimal_orbit: None, orbit_limit: None, witnesses, notes: Vec::new() }
    }
}

impl fmt::Display for StabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.class)?;
        if let Some(m) = self.minimal_orbit {
            write!(f, ", minimal orbit: {m}")?;
        }
        if let Some(l) = &self.orbit_limit {
            write!(f, ", {l}")?;
        }
        Ok(())
    }
}

/// `f = scale * q^2`, with `q` scaled so that its lexicographically leading
/// coefficient is positive and `scale = 1` whenever that is possible over `Q`.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleConic {
    pub q: QForm,
    pub scale: BigRational,
    pub rank: usize,
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(BigRational::new(root(r.numer())?, root(r.denom())?))
}

pub fn is_double_conic(f: &QuarticForm) -> Option<DoubleConic> {
    let poly = f.poly();
    let (e0, c0) = poly.lex_lead()?;
    if e0.iter().any(|k| k % 2 != 0) {
        return None;
    }
    let lambda = c0.clone();
    let g = poly.scale(&lambda.inverse());
    let lead: Exp = e0.map(|k| k / 2);
    let mut q = Poly3::monomial(rat(1), lead);
    // peel off one term of q per step, in decreasing lex order
    for _ in 0..6 {
        let r = g.sub(&q.mul(&q));
        let Some((e, c)) = r.lex_lead() else { break };
        if (0..3).any(|i| e[i] < lead[i]) {
            return None;
        }
        let next: Exp = std::array::from_fn(|i| e[i] - lead[i]);
        if next >= lead {
            return None;
        }
        q = q.add(&Poly3::monomial(c.divide(&rat(2)), next));
    }
    if !g.sub(&q.mul(&q)).is_zero() {
        return None;
    }
    let (q, scale) = match rational_sqrt(&lambda) {
        Some(s) => (q.scale(&s), rat(1)),
        None => (q, lambda),
    };
    let rank = conic_rank(&q);
    Some(DoubleConic { q, scale, rank })
}

fn conic_rank(q: &QForm) -> usize {
    let c = |e: Exp| q.coeff(&e);
    let half = |v: BigRational| v / rat(2);
    let mut m = [
        [c([2, 0, 0]), half(c([1, 1, 0])), half(c([1, 0, 1]))],
        [half(c([1, 1, 0])), c([0, 2, 0]), half(c([0, 1, 1]))],
        [half(c([1, 0, 1])), half(c([0, 1, 1])), c([0, 0, 2])],
    ];
    let mut rank = 0;
    for col in 0..3 {
        let Some(p) = (rank..3).find(|&i| !Field::is_zero(&m[i][col])) else { continue };
        m.swap(rank, p);
        for i in rank + 1..3 {
            let k = m[i][col].divide(&m[rank][col]);
            for j in 0..3 {
                let t = m[rank][j].times(&k);
                m[i][j] = m[i][j].minus(&t);
            }
        }
        rank += 1;
    }
    rank
}

fn inverse3(g: &IMat3) -> IMat3 {
    let det = crate::poly::solve::det3(g);
    assert!(det == 1 || det == -1, "change of coordinates is not unimodular");
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
            let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
            (g[r0][c0] * g[r1][c1] - g[r0][c1] * g[r1][c0]) * det
        })
    })
}

/// The nonconstant factors `a_i` of the square-free decomposition
/// `f = c * a_1 * a_2^2 * a_3^3 * a_4^4`, paired with their exponent `i`.
pub fn multiple_components(f: &QuarticForm) -> Vec<(QForm, u32)> {
    let g = monic_change(f);
    let moved = f.transform(&g);
    let rf = RatFunc::poly(UPoly::zero(&rat(0)));
    let coeffs: Vec<RatFunc> = moved
        .poly()
        .set_var(2, &rat(1))
        .coefficients_in(1)
        .iter()
        .map(|c| RatFunc::poly(c.to_univariate(0)))
        .collect();
    let p = UPoly::new(coeffs, &rf);
    let back = to_rational_matrix(&inverse3(&g));
    let mut out = Vec::new();
    for (i, a) in p.squarefree_decomposition().iter().enumerate() {
        let d = a.deg0() as u32;
        if d == 0 {
            continue;
        }
        let mut h = Poly3::zero(&rat(0));
        for (j, c) in a.coeffs().iter().enumerate() {
            let c = c.as_poly().expect("factors of a monic polynomial over Q[x] have polynomial coefficients");
            for (k, v) in c.coeffs().iter().enumerate() {
                if !Field::is_zero(v) {
                    h = h.add(&Poly3::monomial(v.clone(), [k as u32, j as u32, d - k as u32 - j as u32]));
                }
            }
        }
        out.push((h.compose_linear(&back), i as u32 + 1));
    }
    out
}

fn monic_change(f: &QuarticForm) -> IMat3 {
    (0..ATTEMPTS)
        .map(attempt_change)
        .find(|g| !Field::is_zero(&f.transform(g).coefficient(&[0, 4, 0])))
        .expect("some change makes the form monic in y")
}

/// After a change making `f` monic in `y`, `f` is reduced iff its
/// discriminant in `y` is a nonzero polynomial in `x` of degree at most 12,
/// so one of 13 specializations `x = a` is square-free.
pub fn is_reduced(f: &QuarticForm) -> bool {
    let moved = f.transform(&monic_change(f)).poly().set_var(2, &rat(1));
    (0..13).any(|a| {
        let p = moved.set_var(0, &rat(a)).to_univariate(1);
        p.gcd(&p.derivative()).is_constant()
    })
}

/// The singular points of a reduced quartic, with their local types.
pub fn singular_points(f: &QuarticForm) -> Result<Vec<SingularityReport>, QuarticError> {
    if !is_reduced(f) {
        return Err(QuarticError::NotReduced);
    }
    let grad = f.poly().gradient();
    let zs = common_zeros(&grad)?;
    zs.points.iter().map(|p| classify_local(&LocalModel::at(f, p))).collect()
}

/// Some point on the curve `h = 0`, found by cutting with a line.
fn point_on(h: &QForm) -> ProjPoint {
    let lines = ["x + 2*y + 3*z", "x", "y", "z", "x - y", "y - z"];
    for l in lines {
        let l = crate::poly::parse_polynomial(l, &['x', 'y', 'z']).expect("valid line");
        if let Ok(zs) = common_zeros(&[h.clone(), l]) {
            if let Some(p) = zs.points.into_iter().next() {
                return p;
            }
        }
    }
    panic!("no line cuts the curve in finitely many points")
}

fn non_isolated_report(f: &QuarticForm, p: ProjPoint) -> SingularityReport {
    let model = LocalModel::at(f, &p);
    let mut r = classify_local(&model).expect("points of a multiple component are singular");
    if r.multiplicity == 2 {
        r.kind = SingularityKind::NonIsolated;
        r.admissible = None;
        r.weight_four = None;
        r.tangent = None;
    }
    r
}

/// A point of multiplicity at least 3 on a non-reduced quartic that is not a
/// smooth double conic.
fn non_reduced_witness(f: &QuarticForm, parts: &[(QForm, u32)]) -> SingularityReport {
    let point = if let Some((a, _)) = parts.iter().find(|(_, e)| *e >= 3) {
        point_on(a)
    } else {
        let (line, _) = parts.iter().find(|(a, e)| *e == 2 && a.degree() == Some(1)).expect("a double line");
        let (rest, _) = parts.iter().find(|(_, e)| *e == 1).expect("a residual conic");
        common_zeros(&[line.clone(), rest.clone()]).expect("a line and a conic without common line").points[0].clone()
    };
    let r = classify_local(&LocalModel::at(f, &point)).expect("point is singular");
    assert!(r.multiplicity >= 3);
    r
}

pub fn git_stability(f: &QuarticForm) -> Result<StabilityVerdict, QuarticError> {
    if let Some(dc) = is_double_conic(f) {
        if dc.rank == 3 {
            let mut v =
                StabilityVerdict::new(StabilityClass::StrictlySemistable, vec![non_isolated_report(f, point_on(&dc.q))]);
            v.minimal_orbit = Some(MinimalOrbit::DoubleConic);
            return Ok(v);
        }
        let p = if dc.rank == 2 {
            common_zeros(&dc.q.gradient())?.points[0].clone()
        } else {
            let l = dc.q.gradient().into_iter().find(|d| !d.is_zero()).expect("nonzero conic");
            point_on(&l)
        };
        let w = classify_local(&LocalModel::at(f, &p))?;
        return Ok(StabilityVerdict::new(StabilityClass::Unstable, vec![w]));
    }
    if !is_reduced(f) {
        let parts = multiple_components(f);
        return Ok(StabilityVerdict::new(StabilityClass::Unstable, vec![non_reduced_witness(f, &parts)]));
    }

    let zs = common_zeros(&f.poly().gradient())?;
    let reports = zs.points.iter().map(|p| classify_local(&LocalModel::at(f, p))).collect::<Result<Vec<_>, _>>()?;
    let bad = |r: &SingularityReport| matches!(r.kind, SingularityKind::TripleOrWorse | SingularityKind::HigherA);
    if reports.iter().any(bad) {
        return Ok(StabilityVerdict::new(StabilityClass::Unstable, reports));
    }
    let tacnodes: Vec<&SingularityReport> = reports.iter().filter(|r| r.kind == SingularityKind::Tacnode).collect();
    if tacnodes.is_empty() {
        return Ok(StabilityVerdict::new(StabilityClass::Stable, reports));
    }
    let mut v = StabilityVerdict::new(StabilityClass::StrictlySemistable, Vec::new());
    if tacnodes.iter().any(|r| r.admissible == Some(false)) {
        v.orbit_limit = Some(ORBIT_LIMIT_V0.to_string());
    } else {
        let geometric: usize = tacnodes.iter().map(|r| r.point.degree()).sum();
        v.minimal_orbit = Some(if geometric == 2 && two_tangent_conics(f, &tacnodes) {
            MinimalOrbit::TwoTangentConics
        } else {
            v.notes.push(format!(
                "{geometric} tacnode(s) not arranged as two conics tangent at two points; \
                 factorization over larger extensions not attempted"
            ));
            MinimalOrbit::NotMinimal
        });
    }
    v.witnesses = reports;
    Ok(v)
}

/// Whether `f` lies in the pencil of products of conics tangent to the two
/// tacnodal tangents at the two tacnodes: `f` is then a combination of
/// `(T1 T2)^2`, `T1 T2 L^2` and `L^4`, where `L` joins the tacnodes.
fn two_tangent_conics(f: &QuarticForm, tacnodes: &[&SingularityReport]) -> bool {
    let (p1, t1, p2, t2) = match tacnodes {
        [a] if a.point.degree() == 2 => {
            let t = a.tangent.clone().expect("tacnodes carry their tangent");
            let tc = t.clone().map(|c| c.quadratic_conjugate());
            (a.point.clone(), t, a.point.quadratic_conjugate(), tc)
        }
        [a, b] if a.point.degree() == 1 && b.point.degree() == 1 => (
            a.point.clone(),
            a.tangent.clone().expect("tacnodes carry their tangent"),
            b.point.clone(),
            b.tangent.clone().expect("tacnodes carry their tangent"),
        ),
        _ => return false,
    };
    let zero = p1.coords[0].zero_like();
    let line = |l: &[NfElem; 3]| {
        (0..3).fold(Poly3::zero(&zero), |acc, i| acc.add(&Poly3::var(i, &zero).scale(&l[i])))
    };
    let (a, b) = (&p1.coords, &p2.coords);
    let l: [NfElem; 3] = std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        a[j].times(&b[k]).minus(&a[k].times(&b[j]))
    });
    let tt = line(&t1).mul(&line(&t2));
    let ll = line(&l).pow(2);
    let basis = [tt.pow(2), tt.mul(&ll), ll.pow(2)];
    let fk = f.poly().map(&zero, |c| zero.from_rational(c));
    let monomials: Vec<Exp> =
        (0..=4u32).flat_map(|i| (0..=4 - i).map(move |j| [i, j, 4 - i - j])).collect();
    let rows: Vec<Vec<NfElem>> = monomials.iter().map(|e| basis.iter().map(|p| p.coeff(e)).collect()).collect();
    let rhs: Vec<NfElem> = monomials.iter().map(|e| fk.coeff(e)).collect();
    solve_linear(&rows, &rhs, &zero).is_some()
}

/// `(n, c)` of a stable quartic, counting conjugate points separately.
pub fn singular_type(f: &QuarticForm) -> Result<SingularType, QuarticError> {
    let v = git_stability(f)?;
    v.singular_type().ok_or(QuarticError::NotStable(v.class))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quartic::parse_quartic;

    fn q(s: &str) -> QuarticForm {
        parse_quartic(s).unwrap()
    }

    fn verdict(s: &str) -> StabilityVerdict {
        git_stability(&q(s)).unwrap()
    }

    #[test]
    fn double_conic_detection() {
        let dc = is_double_conic(&q("(x^2+y^2+z^2)^2")).unwrap();
        assert_eq!(dc.q.to_string(), "x^2 + y^2 + z^2");
        assert_eq!((dc.scale.clone(), dc.rank), (rat(1), 3));
        let dc = is_double_conic(&q("-3*(x*y - z^2)^2")).unwrap();
        assert_eq!((dc.q.to_string(), dc.scale.clone()), ("x*y - z^2".to_string(), rat(-3)));
        assert_eq!(is_double_conic(&q("4*(x*y)^2")).unwrap().q.to_string(), "2*x*y");
        assert!(is_double_conic(&q("x^4 + y^4 + z^4")).is_none());
        assert!(is_double_conic(&q("(x^2 + y*z)^2 + x*y^3")).is_none());
    }

    #[test]
    fn inverse_of_change() {
        for k in 1..10 {
            let g = attempt_change(k);
            let h = inverse3(&g);
            for i in 0..3 {
                for j in 0..3 {
                    let s: i64 = (0..3).map(|l| g[i][l] * h[l][j]).sum();
                    assert_eq!(s, i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn square_free_parts() {
        let parts = multiple_components(&q("x^2*(y^2 - x*z)"));
        let mut shown: Vec<(String, u32)> = parts.iter().map(|(a, e)| (a.to_string(), *e)).collect();
        shown.sort();
        assert_eq!(shown.len(), 2);
        assert_eq!(shown.iter().find(|s| s.1 == 2).unwrap().0.replace('-', ""), "x");
        assert!(is_reduced(&q("x*y*(x+y-z)*(x-y+2*z)")));
        assert_eq!(singular_points(&q("x^3*(x + y + z)")).unwrap_err(), QuarticError::NotReduced);
    }

    #[test]
    fn fermat_is_smooth_and_stable() {
        let v = verdict("x^4 + y^4 + z^4");
        assert_eq!(v.class, StabilityClass::Stable);
        assert!(v.witnesses.is_empty());
        assert_eq!(singular_type(&q("x^4 + y^4 + z^4")).unwrap(), SingularType::new(0, 0));
    }

    #[test]
    fn four_lines() {
        assert_eq!(singular_type(&q("x*y*(x+y-z)*(x-y+2*z)")).unwrap(), SingularType::new(6, 0));
    }

    #[test]
    fn one_node_and_one_cusp() {
        assert_eq!(singular_type(&q("y^2*z^2 - x^2*z^2 + x^4 + y^4")).unwrap(), SingularType::new(1, 0));
        assert_eq!(singular_type(&q("y^2*z^2 - x^3*z + y^4")).unwrap(), SingularType::new(0, 1));
    }

    #[test]
    fn conjugate_nodes_count_twice() {
        // two conics meeting in four points, two of them conjugate over Q(i)
        let t = singular_type(&q("(x^2 + y^2 - z^2)*(x^2 + 2*y^2 - 3*z^2)")).unwrap();
        assert_eq!(t, SingularType::new(4, 0));
    }

    #[test]
    fn tangent_conics() {
        for s in ["y^2*z^2 - x^4", "(y*z - x^2)*(y*z + x^2)"] {
            let v = verdict(s);
            assert_eq!(v.class, StabilityClass::StrictlySemistable);
            assert_eq!(v.minimal_orbit, Some(MinimalOrbit::TwoTangentConics));
        }
        // conjugate pair of tacnodes: x^2 + y^2 = z^2 and x^2 + y^2 = 2z^2 - ... tangent at (1 : ±i : 0)
        let v = verdict("(x^2 + y^2 - z^2)*(x^2 + y^2 - 2*z^2)");
        assert_eq!(v.minimal_orbit, Some(MinimalOrbit::TwoTangentConics));
        assert_eq!(v.witnesses[0].point.degree(), 2);
    }

    #[test]
    fn tacnode_without_partner_is_not_minimal() {
        // a conic and a line tangent to it, plus another line through the tangency point's opposite
        let v = verdict("(y*z - x^2)*y*(y - z)");
        assert_eq!(v.class, StabilityClass::StrictlySemistable);
        assert_eq!(v.minimal_orbit, Some(MinimalOrbit::NotMinimal));
        assert!(!v.notes.is_empty());
    }

    #[test]
    fn inadmissible_maps_to_v0() {
        let v = verdict("(y*z + x^2)^2 + x*y^3");
        assert_eq!(v.class, StabilityClass::StrictlySemistable);
        assert_eq!(v.orbit_limit.as_deref(), Some(ORBIT_LIMIT_V0));
        assert_eq!(v.minimal_orbit, None);
    }

    #[test]
    fn double_conics() {
        let v = verdict("(x^2+y^2+z^2)^2");
        assert_eq!(v.minimal_orbit, Some(MinimalOrbit::DoubleConic));
        assert_eq!(v.witnesses[0].kind, SingularityKind::NonIsolated);
        for s in ["(x*y)^2", "x^4", "x^2*(y^2 - x*z)", "x^3*(x + y + z)", "(x^2 + y^2)*x*x"] {
            let v = verdict(s);
            assert_eq!(v.class, StabilityClass::Unstable, "{s}");
            assert!(v.witnesses[0].multiplicity >= 3, "{s}");
        }
    }

    #[test]
    fn unstable_reduced_curves() {
        for s in ["x^3*y + y^4", "z*(y^2*z - x^3)"] {
            let v = verdict(s);
            assert_eq!(v.class, StabilityClass::Unstable, "{s}");
            assert!(v.witnesses.iter().any(|w| w.multiplicity >= 3 || w.kind == SingularityKind::HigherA));
        }
        assert_eq!(singular_type(&q("x^3*y + y^4")).unwrap_err(), QuarticError::NotStable(StabilityClass::Unstable));
    }
}
