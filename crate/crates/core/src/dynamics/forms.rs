//! Binary forms over F_p[t], stored as coefficient lists in descending
//! X-degree: `[a_0, ..., a_d]` is `a_0 X^d + a_1 X^(d-1) Y + ... + a_d Y^d`.

use crate::algebra::{FpPoly, PrimeField};

pub type Form = Vec<FpPoly>;

pub fn form_mul(a: &[FpPoly], b: &[FpPoly]) -> Form {
    let field = a[0].field();
    let mut out = vec![FpPoly::zero(field); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

pub fn form_add(a: &[FpPoly], b: &[FpPoly]) -> Form {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn form_scale(a: &[FpPoly], c: &FpPoly) -> Form {
    a.iter().map(|x| x * c).collect()
}

pub fn form_pow(a: &[FpPoly], e: usize) -> Form {
    let field = a[0].field();
    (0..e).fold(vec![FpPoly::one(field)], |acc, _| form_mul(&acc, a))
}

/// F(x, y) for polynomial arguments.
pub fn form_eval(f: &[FpPoly], x: &FpPoly, y: &FpPoly) -> FpPoly {
    let d = f.len() - 1;
    let field = x.field();
    let mut xp = Vec::with_capacity(d + 1);
    let mut yp = Vec::with_capacity(d + 1);
    xp.push(FpPoly::one(field));
    yp.push(FpPoly::one(field));
    for k in 1..=d {
        xp.push(&xp[k - 1] * x);
        yp.push(&yp[k - 1] * y);
    }
    f.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(FpPoly::zero(field), |acc, (i, c)| &acc + &(&(c * &xp[d - i]) * &yp[i]))
}

/// Sylvester matrix of forms of degrees m = `f.len() - 1` and n = `g.len() - 1`:
/// n shifted copies of f above m shifted copies of g.
pub fn sylvester_matrix(f: &[FpPoly], g: &[FpPoly]) -> Vec<Vec<FpPoly>> {
    let field = f[0].field();
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (coeffs, shifts) in [(f, n), (g, m)] {
        for i in 0..shifts {
            let mut row = vec![FpPoly::zero(field); size];
            for (j, c) in coeffs.iter().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant by fraction-free (Bareiss) elimination; every division is exact.
pub fn determinant(mut m: Vec<Vec<FpPoly>>, field: PrimeField) -> FpPoly {
    let n = m.len();
    if n == 0 {
        return FpPoly::one(field);
    }
    let mut negate = false;
    let mut prev = FpPoly::one(field);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return FpPoly::zero(field),
            }
        }
        let pivot_row = m[k].clone();
        for row in m.iter_mut().skip(k + 1) {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = &(&row[j] * &pivot_row[k]) - &(&lead * &pivot_row[j]);
                row[j] = v.div_exact(&prev).expect("Bareiss divisor nonzero");
            }
            row[k] = FpPoly::zero(field);
        }
        prev = pivot_row[k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Homogeneous resultant Res(F, G), the Sylvester determinant.
pub fn resultant(f: &[FpPoly], g: &[FpPoly]) -> FpPoly {
    let field = f[0].field();
    determinant(sylvester_matrix(f, g), field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fl(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(p: u64, c: &[u32]) -> FpPoly {
        FpPoly::new(fl(p), c.to_vec())
    }

    /// Cofactor expansion, independent of the elimination path.
    fn det_by_expansion(m: &[Vec<FpPoly>], field: PrimeField) -> FpPoly {
        let n = m.len();
        if n == 0 {
            return FpPoly::one(field);
        }
        let mut acc = FpPoly::zero(field);
        for (j, c) in m[0].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let minor: Vec<Vec<FpPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = c * &det_by_expansion(&minor, field);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let field = fl(5);
        let mut seed = 17u64;
        for n in 1..=5 {
            for _ in 0..10 {
                let m: Vec<Vec<FpPoly>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                                // roughly a third of entries zero, to exercise pivoting
                                let i = (seed >> 33) % 75;
                                if i < 25 {
                                    FpPoly::zero(field)
                                } else {
                                    FpPoly::from_index(field, i)
                                }
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(determinant(m.clone(), field), det_by_expansion(&m, field));
            }
        }
    }

    #[test]
    fn resultant_of_monomial_forms() {
        // [t X^2 : Y^2]
        let f = vec![poly(2, &[0, 1]), poly(2, &[]), poly(2, &[])];
        let g = vec![poly(2, &[]), poly(2, &[]), poly(2, &[1])];
        assert_eq!(resultant(&f, &g), poly(2, &[0, 0, 1]));
    }

    #[test]
    fn form_eval_matches_expansion() {
        // F = X^2 + t Y^2 at (t, 1) over F_2 is t^2 + t
        let f = vec![poly(2, &[1]), poly(2, &[]), poly(2, &[0, 1])];
        assert_eq!(form_eval(&f, &poly(2, &[0, 1]), &poly(2, &[1])), poly(2, &[0, 1, 1]));
    }
}
