//! Exact feasibility of mixed equality / weak / strict linear systems over ℚ
//! by Gaussian substitution followed by Fourier–Motzkin elimination.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Eq,
    Le,
    Lt,
}

/// `coeffs · x  rel  rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rel: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, rel: Relation, rhs: Rational) -> Self {
        Constraint { coeffs, rel, rhs }
    }
}

/// An inequality `coeffs · x ≤ rhs` or `< rhs`.
#[derive(Clone, Debug)]
struct Ineq {
    coeffs: Vec<Rational>,
    strict: bool,
    rhs: Rational,
}

impl Ineq {
    /// Scales so the first nonzero coefficient has absolute value 1.
    fn normalized(mut self) -> Self {
        if let Some(c) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for a in &mut self.coeffs {
                *a /= &c;
            }
            self.rhs /= &c;
        }
        self
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn holds_trivially(&self) -> bool {
        if self.strict {
            self.rhs.is_positive()
        } else {
            !self.rhs.is_negative()
        }
    }
}

/// Keeps the tightest inequality per coefficient direction.
fn dedup(ineqs: Vec<Ineq>) -> Vec<Ineq> {
    let mut best: HashMap<Vec<Rational>, Ineq> = HashMap::new();
    let mut order = Vec::new();
    for q in ineqs {
        let q = q.normalized();
        match best.get_mut(&q.coeffs) {
            Some(cur) => {
                if q.rhs < cur.rhs || (q.rhs == cur.rhs && q.strict && !cur.strict) {
                    *cur = q;
                }
            }
            None => {
                order.push(q.coeffs.clone());
                best.insert(q.coeffs.clone(), q);
            }
        }
    }
    order.into_iter().map(|k| best.remove(&k).unwrap()).collect()
}

fn dot(coeffs: &[Rational], x: &[Rational]) -> Rational {
    coeffs.iter().zip(x).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

/// Returns a point satisfying every constraint, or `None` if the system is infeasible.
pub fn solve(nvars: usize, constraints: &[Constraint]) -> Option<Vec<Rational>> {
    // Gaussian substitution of equalities: x_p = (rhs − Σ_{j≠p} a_j x_j) / a_p.
    let mut eqs: Vec<(Vec<Rational>, Rational)> = Vec::new();
    let mut ineqs: Vec<Ineq> = Vec::new();
    for c in constraints {
        debug_assert_eq!(c.coeffs.len(), nvars);
        match c.rel {
            Relation::Eq => eqs.push((c.coeffs.clone(), c.rhs.clone())),
            Relation::Le | Relation::Lt => ineqs.push(Ineq {
                coeffs: c.coeffs.clone(),
                strict: c.rel == Relation::Lt,
                rhs: c.rhs.clone(),
            }),
        }
    }
    let mut substitutions: Vec<(usize, Vec<Rational>, Rational)> = Vec::new();
    let mut eliminated = vec![false; nvars];
    while let Some((coeffs, rhs)) = eqs.pop() {
        let Some(p) = coeffs.iter().position(|a| !a.is_zero()) else {
            if rhs.is_zero() {
                continue;
            }
            return None;
        };
        let ap = coeffs[p].clone();
        let expr: Vec<Rational> = coeffs.iter().map(|a| a / &ap).collect();
        let value = &rhs / &ap;
        let subst = |cs: &mut Vec<Rational>, r: &mut Rational| {
            let k = cs[p].clone();
            if k.is_zero() {
                return;
            }
            for (c, e) in cs.iter_mut().zip(&expr) {
                *c -= &k * e;
            }
            *r -= &k * &value;
        };
        for (cs, r) in eqs.iter_mut() {
            subst(cs, r);
        }
        for q in ineqs.iter_mut() {
            subst(&mut q.coeffs, &mut q.rhs);
        }
        for (_, cs, r) in substitutions.iter_mut() {
            subst(cs, r);
        }
        eliminated[p] = true;
        let mut rest = expr;
        rest[p] = Rational::zero();
        substitutions.push((p, rest, value));
    }

    // Fourier–Motzkin on the remaining variables.
    let mut levels: Vec<(usize, Vec<Ineq>)> = Vec::new();
    let mut current = dedup(ineqs);
    let mut free: Vec<usize> = (0..nvars).filter(|&v| !eliminated[v]).collect();
    loop {
        let mut kept = Vec::with_capacity(current.len());
        for q in current {
            if q.is_trivial() {
                if !q.holds_trivially() {
                    return None;
                }
            } else {
                kept.push(q);
            }
        }
        current = kept;
        if free.is_empty() {
            break;
        }
        // Eliminate the variable producing the fewest combinations.
        let (pos_in_free, &var) = free
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| {
                let pos = current.iter().filter(|q| q.coeffs[v].is_positive()).count();
                let neg = current.iter().filter(|q| q.coeffs[v].is_negative()).count();
                pos * neg
            })
            .unwrap();
        free.remove(pos_in_free);
        let (involved, others): (Vec<Ineq>, Vec<Ineq>) =
            current.into_iter().partition(|q| !q.coeffs[var].is_zero());
        let mut next = others;
        let uppers: Vec<&Ineq> = involved.iter().filter(|q| q.coeffs[var].is_positive()).collect();
        let lowers: Vec<&Ineq> = involved.iter().filter(|q| q.coeffs[var].is_negative()).collect();
        for u in &uppers {
            for l in &lowers {
                let a = u.coeffs[var].clone();
                let b = -l.coeffs[var].clone();
                let coeffs: Vec<Rational> =
                    u.coeffs.iter().zip(&l.coeffs).map(|(x, y)| x * &b + y * &a).collect();
                next.push(Ineq {
                    coeffs,
                    strict: u.strict || l.strict,
                    rhs: &u.rhs * &b + &l.rhs * &a,
                });
            }
        }
        levels.push((var, involved));
        current = dedup(next);
    }

    // Back-substitution, innermost level first.
    let mut x = vec![Rational::zero(); nvars];
    for (var, involved) in levels.iter().rev() {
        let mut lower: Option<(Rational, bool)> = None;
        let mut upper: Option<(Rational, bool)> = None;
        for q in involved {
            let a = &q.coeffs[*var];
            let mut rest = q.coeffs.clone();
            rest[*var] = Rational::zero();
            let bound = (&q.rhs - dot(&rest, &x)) / a;
            if a.is_positive() {
                if upper.as_ref().is_none_or(|(u, s)| bound < *u || (bound == *u && q.strict && !s)) {
                    upper = Some((bound, q.strict));
                }
            } else if lower.as_ref().is_none_or(|(l, s)| bound > *l || (bound == *l && q.strict && !s)) {
                lower = Some((bound, q.strict));
            }
        }
        x[*var] = match (lower, upper) {
            (Some((l, _)), Some((u, _))) => {
                if l == u {
                    l
                } else {
                    (l + u) / Rational::from_integer(2.into())
                }
            }
            (Some((l, _)), None) => l + Rational::one(),
            (None, Some((u, _))) => u - Rational::one(),
            (None, None) => Rational::zero(),
        };
    }
    for (p, expr, value) in substitutions.iter().rev() {
        x[*p] = value - dot(expr, &x);
    }
    debug_assert!(constraints.iter().all(|c| satisfies(c, &x)));
    Some(x)
}

/// Whether `x` satisfies the constraint.
pub fn satisfies(c: &Constraint, x: &[Rational]) -> bool {
    let lhs = dot(&c.coeffs, x);
    match c.rel {
        Relation::Eq => lhs == c.rhs,
        Relation::Le => lhs <= c.rhs,
        Relation::Lt => lhs < c.rhs,
    }
}
