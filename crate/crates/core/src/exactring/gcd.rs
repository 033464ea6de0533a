//! Polynomial gcd over `Q[q, t]`.
//!
//! Inputs are scaled to integer coefficients. One variable is specialized at
//! integer points, univariate gcds are taken with primitive remainder
//! sequences in `Z[x]`, and the result is interpolated and checked by trial
//! division. Inputs must already be stripped of monomial factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{exact_div, QTLaurent};

type UPoly = Vec<BigInt>;
type BPoly = Vec<UPoly>;

fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    u_trim(&mut out);
    out
}

fn int_content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divide out the integer content and make the leading coefficient positive.
fn u_primitive(p: &UPoly) -> UPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut g = int_content(p);
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    p.iter().map(|c| c / &g).collect()
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, y) in b.iter().enumerate() {
            r[i + shift] -= &lr * y;
        }
        r.pop();
        u_trim(&mut r);
    }
    r
}

/// Primitive gcd in `Z[q]`, positive leading coefficient.
fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_primitive(b);
    }
    if b.is_empty() {
        return u_primitive(a);
    }
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    x
}

/// Exact division in `Z[q]`; the caller guarantees divisibility.
fn u_div_exact(a: &UPoly, b: &UPoly) -> UPoly {
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return Vec::new();
    }
    let lb = b.last().unwrap();
    let mut quot = vec![BigInt::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / lb;
        for (i, y) in b.iter().enumerate() {
            rem[i + shift] -= &c * y;
        }
        quot[shift] = c;
        rem.pop();
        u_trim(&mut rem);
    }
    debug_assert!(rem.is_empty());
    u_trim(&mut quot);
    quot
}

fn b_trim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = u_gcd(&g, c);
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn primitive_part(p: &BPoly) -> BPoly {
    let c = content(p);
    let mut out: BPoly = if c.len() == 1 {
        p.iter().map(|u| u.iter().map(|x| x / &c[0]).collect()).collect()
    } else {
        p.iter().map(|u| u_div_exact(u, &c)).collect()
    };
    if out
        .last()
        .and_then(|u| u.last())
        .is_some_and(|c| c.is_negative())
    {
        for u in out.iter_mut() {
            for c in u.iter_mut() {
                *c = -c.clone();
            }
        }
    }
    out
}

fn prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        let mut next: BPoly = r.iter().map(|u| u_mul(u, &lb)).collect();
        for (i, bu) in b.iter().enumerate() {
            next[i + shift] = u_sub(&next[i + shift], &u_mul(bu, &lr));
        }
        next.pop();
        b_trim(&mut next);
        r = next;
    }
    r
}

/// Dense integer representation, indexed `[t_exp][q_exp]`, after clearing
/// denominators.
fn to_dense(p: &QTLaurent) -> BPoly {
    let lcm = p
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let (_, mt) = p.max_exponents();
    let mut out: BPoly = vec![Vec::new(); mt as usize + 1];
    for (&(eq, et), c) in p.terms() {
        debug_assert!(eq >= 0 && et >= 0);
        let row = &mut out[et as usize];
        if row.len() <= eq as usize {
            row.resize(eq as usize + 1, BigInt::zero());
        }
        row[eq as usize] = c.numer() * (&lcm / c.denom());
    }
    b_trim(&mut out);
    out
}

fn from_dense(p: &BPoly) -> QTLaurent {
    QTLaurent::from_terms(p.iter().enumerate().flat_map(|(et, u)| {
        u.iter()
            .enumerate()
            .map(move |(eq, c)| ((eq as i32, et as i32), BigRational::from_integer(c.clone())))
    }))
}

/// Evaluate the outer variable at `x0`, giving an element of `Z[inner]`.
fn eval_outer(p: &BPoly, x0: i64) -> UPoly {
    let x0 = BigInt::from(x0);
    let mut acc: UPoly = Vec::new();
    for u in p.iter().rev() {
        acc = acc.iter().map(|c| c * &x0).collect();
        if acc.len() < u.len() {
            acc.resize(u.len(), BigInt::zero());
        }
        for (i, c) in u.iter().enumerate() {
            acc[i] += c;
        }
        u_trim(&mut acc);
    }
    acc
}

fn transpose(p: &BPoly) -> BPoly {
    let width = p.iter().map(|u| u.len()).max().unwrap_or(0);
    let mut out: BPoly = vec![Vec::new(); width];
    for (i, u) in p.iter().enumerate() {
        for (j, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &mut out[j];
            if row.len() <= i {
                row.resize(i + 1, BigInt::zero());
            }
            row[i] = c.clone();
        }
    }
    b_trim(&mut out);
    out
}

/// Primitive PRS in the outer variable; the fallback path.
fn prs_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    let g = u_gcd(&content(a), &content(b));
    let (mut x, mut y) = (primitive_part(a), primitive_part(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { primitive_part(&r) };
    }
    primitive_part(&x).iter().map(|u| u_mul(u, &g)).collect()
}

fn eval_int(p: &UPoly, x0: i64) -> BigInt {
    let x0 = BigInt::from(x0);
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x0 + c)
}

fn to_rat(p: &UPoly) -> Vec<BigRational> {
    p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

/// Newton interpolation over `Q` through `(xs[i], ys[i])`.
fn interpolate(xs: &[i64], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let x: Vec<BigRational> = xs.iter().map(|&v| BigRational::from_integer(v.into())).collect();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&x[i] - &x[i - j]);
        }
    }
    // expand the Newton form into monomial coefficients
    let mut out = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // out = out * (X - x[i]) + coef[i]
        let mut next = vec![BigRational::zero(); n];
        for k in 0..n {
            if out[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &out[k];
            }
            next[k] -= &out[k] * &x[i];
        }
        next[0] += &coef[i];
        out = next;
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// `[outer][inner]` layout to a Laurent polynomial; `outer_is_t` fixes
/// which variable is which.
fn layout_to_laurent(p: &BPoly, outer_is_t: bool) -> QTLaurent {
    let d = from_dense(p);
    if outer_is_t {
        d
    } else {
        d.swap_qt()
    }
}

/// Brown-style gcd: specialize the outer variable at integer points, take
/// univariate gcds, interpolate, and confirm by trial division. `None` if
/// no confirmation is reached within the point budget.
fn interpolation_gcd(a: &BPoly, b: &BPoly, outer_is_t: bool) -> Option<BPoly> {
    // [inner][outer]: rows are polynomials in the outer variable
    let (at, bt) = (transpose(a), transpose(b));
    let (ca, cb) = (content(&at), content(&bt));
    let c = u_gcd(&ca, &cb);
    let at1: BPoly = at.iter().map(|u| u_div_exact(u, &ca)).collect();
    let bt1: BPoly = bt.iter().map(|u| u_div_exact(u, &cb)).collect();
    let (lca, lcb) = (at1.last().unwrap().clone(), bt1.last().unwrap().clone());
    let gamma = u_gcd(&lca, &lcb);
    let (a1, b1) = (transpose(&at1), transpose(&bt1));
    let bound = a1.len().min(b1.len()).saturating_sub(1) + gamma.len().saturating_sub(1);
    let a1l = layout_to_laurent(&a1, outer_is_t);
    let b1l = layout_to_laurent(&b1, outer_is_t);

    let with_content = |h: BPoly| -> BPoly {
        // h is [inner][outer]; multiply every row by c and return [outer][inner]
        transpose(&h.iter().map(|u| u_mul(u, &c)).collect::<Vec<_>>())
    };

    let mut xs: Vec<i64> = Vec::new();
    let mut images: Vec<Vec<BigRational>> = Vec::new();
    let mut cur_deg = usize::MAX;
    let candidates = (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] });
    for x0 in candidates.take(4 * bound + 40) {
        if eval_int(&lca, x0).is_zero() || eval_int(&lcb, x0).is_zero() {
            continue;
        }
        let g = u_gcd(&eval_outer(&a1, x0), &eval_outer(&b1, x0));
        let deg = g.len() - 1;
        if deg == 0 {
            return Some(with_content(vec![vec![BigInt::one()]]));
        }
        if deg > cur_deg {
            continue;
        }
        if deg < cur_deg {
            cur_deg = deg;
            xs.clear();
            images.clear();
        }
        let gx = BigRational::from_integer(eval_int(&gamma, x0));
        let lead = BigRational::from_integer(g.last().unwrap().clone());
        let scale = gx / lead;
        xs.push(x0);
        images.push(to_rat(&g).into_iter().map(|v| v * &scale).collect());
        if xs.len() <= bound {
            continue;
        }
        // interpolate each inner coefficient as a polynomial in the outer variable
        let rows: Vec<Vec<BigRational>> = (0..=cur_deg)
            .map(|k| {
                let ys: Vec<BigRational> = images.iter().map(|im| im[k].clone()).collect();
                interpolate(&xs, &ys)
            })
            .collect();
        let lcm = rows
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let h: BPoly = rows
            .iter()
            .map(|u| {
                let mut v: UPoly = u.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
                u_trim(&mut v);
                v
            })
            .collect();
        let hc = content(&h);
        let h: BPoly = h.iter().map(|u| u_div_exact(u, &hc)).collect();
        let hl = layout_to_laurent(&transpose(&h), outer_is_t);
        if exact_div(&a1l, &hl).is_ok() && exact_div(&b1l, &hl).is_ok() {
            return Some(with_content(h));
        }
    }
    None
}

/// Gcd of two nonzero polynomials (no negative exponents), up to a unit.
pub(crate) fn poly_gcd(a: &QTLaurent, b: &QTLaurent) -> QTLaurent {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return QTLaurent::one();
    }
    // [t][q] layout: outer t, inner q
    let (da, db) = (to_dense(a), to_dense(b));
    let (ta, tb) = (transpose(&da), transpose(&db));
    // specialize the variable of lower degree
    let (outer_is_t, x, y) = if da.len() <= ta.len() {
        (true, &da, &db)
    } else {
        (false, &ta, &tb)
    };
    let g = interpolation_gcd(x, y, outer_is_t).unwrap_or_else(|| prs_gcd(x, y));
    let out = layout_to_laurent(&g, outer_is_t);
    if out.is_zero() {
        QTLaurent::one()
    } else {
        out
    }
}
