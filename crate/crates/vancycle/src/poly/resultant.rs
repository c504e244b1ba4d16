//! Resultants, discriminant curves, and the morsification transform.

use super::mpoly::{Coeff, MPoly};
use super::PolyError;
use num_rational::BigRational;

fn same_ring(f: &MPoly, g: &MPoly) -> Result<(), PolyError> {
    if f.vars() != g.vars() {
        return Err(PolyError::VariableMismatch {
            expected: f.vars().to_vec(),
            found: g.vars().to_vec(),
        });
    }
    if f.field() != g.field() {
        return Err(PolyError::FieldMismatch);
    }
    Ok(())
}

fn var_refs(p: &MPoly) -> Vec<&str> {
    p.vars().iter().map(String::as_str).collect()
}

/// The resultant of `f` and `g` with respect to `var`: the determinant
/// of their Sylvester matrix, computed by Bareiss fraction-free
/// elimination over the remaining variables. The eliminated variable is
/// dropped from the result. Degenerate degrees follow the classical
/// conventions: `Res(f, c) = c^{deg f}` for `c` free of `var`, and the
/// resultant of two such polynomials is 1.
pub fn sylvester_resultant(f: &MPoly, g: &MPoly, var: &str) -> Result<MPoly, PolyError> {
    same_ring(f, g)?;
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroResultantInput);
    }
    let m = f.degree(var)?;
    let n = g.degree(var)?;
    if m == 0 && n == 0 {
        return MPoly::one(&var_refs(f), f.field())?.without_var(var);
    }
    if n == 0 {
        return g.pow(m as u32)?.without_var(var);
    }
    if m == 0 {
        return f.pow(n as u32)?.without_var(var);
    }
    let (m, n) = (m as usize, n as usize);
    let vars = var_refs(f);
    let zero = MPoly::zero(&vars, f.field())?;

    // Coefficients in descending powers of `var`, each still expressed
    // over the full variable list with the eliminated exponent zeroed.
    let fc: Vec<MPoly> = (0..=m)
        .rev()
        .map(|e| f.coeff_of(var, e as u32))
        .collect::<Result<_, _>>()?;
    let gc: Vec<MPoly> = (0..=n)
        .rev()
        .map(|e| g.coeff_of(var, e as u32))
        .collect::<Result<_, _>>()?;

    let dim = m + n;
    let mut mat = vec![vec![zero.clone(); dim]; dim];
    for r in 0..n {
        for (j, c) in fc.iter().enumerate() {
            mat[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in gc.iter().enumerate() {
            mat[n + r][r + j] = c.clone();
        }
    }

    let mut negate = false;
    let mut prev = MPoly::one(&vars, f.field())?;
    for p in 0..dim - 1 {
        if mat[p][p].is_zero() {
            let Some(r) = (p + 1..dim).find(|&r| !mat[r][p].is_zero()) else {
                return zero.without_var(var);
            };
            mat.swap(p, r);
            negate = !negate;
        }
        for r in p + 1..dim {
            for c in p + 1..dim {
                let t = mat[r][c]
                    .mul(&mat[p][p])?
                    .sub(&mat[r][p].mul(&mat[p][c])?)?;
                // Bareiss guarantees this division is exact.
                mat[r][c] = t.exact_div(&prev)?;
            }
            mat[r][p] = zero.clone();
        }
        prev = mat[p][p].clone();
    }
    let det = mat[dim - 1][dim - 1].clone();
    let det = if negate { det.neg() } else { det };
    det.without_var(var)
}

/// The discriminant curve of a plane projection: for `f` in the pinned
/// variables `x, y` and monic in `y` (leading `y`-coefficient a nonzero
/// constant), returns `d_f(t, x) = Res_y(f - t, ∂(f - t)/∂y)` over the
/// variables `t, x`. The normalization is the raw resultant; no sign or
/// leading-coefficient factor is divided out.
pub fn discriminant_curve(f: &MPoly) -> Result<MPoly, PolyError> {
    if f.vars() != ["x", "y"] {
        return Err(PolyError::VariableMismatch {
            expected: vec!["x".to_string(), "y".to_string()],
            found: f.vars().to_vec(),
        });
    }
    let lc = f.leading_coeff_in("y")?;
    if f.degree("y")? < 1 || !lc.is_constant() {
        return Err(PolyError::NotMonic);
    }
    let fibered = f
        .embed(&["t", "x", "y"])?
        .sub(&MPoly::var(&["t", "x", "y"], f.field(), "t")?)?;
    let dy = fibered.partial_derivative("y")?;
    sylvester_resultant(&fibered, &dy, "y")
}

/// The shear-plus-linear morsification `f(x + λy, y) + a·x` with exact
/// rational parameters.
pub fn perturb(f: &MPoly, lambda: &BigRational, a: &BigRational) -> Result<MPoly, PolyError> {
    let vars = var_refs(f);
    let x = MPoly::var(&vars, f.field(), "x")?;
    let y = MPoly::var(&vars, f.field(), "y")?;
    let sheared = f.substitute("x", &x.add(&y.scale(lambda))?)?;
    sheared.add(&x.scale(a))
}

fn uni_divmod(f: &MPoly, g: &MPoly, var: &str) -> Result<(MPoly, MPoly), PolyError> {
    if g.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    let d = f.field().d_value();
    let vars = var_refs(f);
    let n = g.degree(var)?;
    let glc = g.coeff_of(var, n as u32)?.constant_coeff();
    let var_idx = vars.iter().position(|v| *v == var).unwrap();
    let mut q = MPoly::zero(&vars, f.field())?;
    let mut r = f.clone();
    while !r.is_zero() {
        let m = r.degree(var)?;
        if m < n {
            break;
        }
        let rlc = r.coeff_of(var, m as u32)?.constant_coeff();
        let mut exps = vec![0; vars.len()];
        exps[var_idx] = (m - n) as u32;
        let t = MPoly::from_terms(&vars, f.field(), [(exps, rlc.div(&glc, d)?)])?;
        q = q.add(&t)?;
        r = r.sub(&t.mul(g)?)?;
    }
    Ok((q, r))
}

/// Monic gcd of two univariate polynomials over the coefficient field.
fn uni_gcd(f: &MPoly, g: &MPoly, var: &str) -> Result<MPoly, PolyError> {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = uni_divmod(&a, &b, var)?;
        a = b;
        b = r;
    }
    if a.is_zero() {
        return Ok(a);
    }
    let d = a.field().d_value();
    let lc = a.coeff_of(var, a.degree(var)? as u32)?.constant_coeff();
    a.scale_coeff(&Coeff::one().div(&lc, d)?)
}

/// Whether the discriminant curve of `f` is squarefree. Writing
/// `d_f = c(t)·p(t, x)` with `c` the gcd of the `x`-coefficients and `p`
/// primitive, the curve is reduced exactly when `c` is squarefree and
/// `Res_x(p, ∂p/∂x)` is nonzero; the content test catches repeated
/// `x`-free factors such as `t²`, which the resultant in `x` cannot see.
pub fn is_reduced_discriminant(f: &MPoly) -> Result<bool, PolyError> {
    let d = discriminant_curve(f)?;
    if d.is_zero() {
        return Ok(false);
    }
    let deg_x = d.degree("x")?;
    let mut content: Option<MPoly> = None;
    for e in 0..=deg_x as u32 {
        let c = d.coeff_of("x", e)?.without_var("x")?;
        if c.is_zero() {
            continue;
        }
        content = Some(match content {
            None => c,
            Some(g) => uni_gcd(&g, &c, "t")?,
        });
    }
    let content = content.expect("nonzero polynomial has a nonzero coefficient");
    if content.total_degree() > 0 {
        let dc = content.partial_derivative("t")?;
        if !uni_gcd(&content, &dc, "t")?.is_constant() {
            return Ok(false);
        }
    }
    let primitive = d.exact_div(&content.embed(&["t", "x"])?)?;
    if primitive.degree("x")? == 0 {
        return Ok(true);
    }
    let res = sylvester_resultant(&primitive, &primitive.partial_derivative("x")?, "x")?;
    Ok(!res.is_zero())
}
