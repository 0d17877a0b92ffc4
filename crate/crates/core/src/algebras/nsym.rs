use crate::combinat::{Composition, Permutation};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linear::{sign, LinComb, Scalar};
use crate::tableaux::{dual_immaculate_tableaux, frozen_set, two_row_frozen_first, two_row_frozen_second};

/// NSym in the complete basis `H_alpha`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NSymH;

impl HopfAlgebra for NSymH {
    type Key = Composition;

    fn degree(&self, key: &Composition) -> usize {
        key.size()
    }

    fn unit(&self) -> Composition {
        Composition::empty()
    }

    fn product(&self, a: &Composition, b: &Composition) -> LinComb<Composition> {
        LinComb::basis(a.concat(b))
    }

    /// Multiplicative extension of `Delta H_n = sum_i H_i (x) H_{n-i}`.
    fn coproduct(&self, key: &Composition) -> LinComb<(Composition, Composition)> {
        let mut acc: Vec<(Vec<u32>, Vec<u32>)> = vec![(Vec::new(), Vec::new())];
        for &a in key.parts() {
            acc = acc
                .into_iter()
                .flat_map(|(l, r)| {
                    (0..=a).map(move |i| {
                        let (mut l, mut r) = (l.clone(), r.clone());
                        if i > 0 {
                            l.push(i);
                        }
                        if i < a {
                            r.push(a - i);
                        }
                        (l, r)
                    })
                })
                .collect();
        }
        acc.into_iter()
            .map(|(l, r)| ((Composition::from_nonzero(l), Composition::from_nonzero(r)), Scalar::from(1)))
            .collect()
    }

    fn closed_antipode(&self, key: &Composition) -> Option<LinComb<Composition>> {
        Some(immaculate_lc_to_h(&s_of_h_closed(key)))
    }
}

/// `S_alpha = Det(H_{alpha_i + j - i})`, expanded with rows kept in order.
pub fn immaculate_to_h(alpha: &Composition) -> LinComb<Composition> {
    let a = alpha.parts();
    let k = a.len();
    let mut out = LinComb::zero();
    for sigma in Permutation::all(k) {
        let mut parts = Vec::with_capacity(k);
        let mut ok = true;
        for (i, &s) in sigma.values().iter().enumerate() {
            let v = a[i] as i64 + s as i64 - 1 - i as i64;
            if v < 0 {
                ok = false;
                break;
            }
            parts.push(v as u32);
        }
        if ok {
            out.add_term(Composition::from_nonzero(parts), sign(sigma.inversions()));
        }
    }
    out
}

pub fn immaculate_lc_to_h(v: &LinComb<Composition>) -> LinComb<Composition> {
    v.linear_extend(immaculate_to_h)
}

/// Inverse of [`immaculate_to_h`].
///
/// Every non-leading term of `S_alpha` is lexicographically larger than
/// `H_alpha`, so peeling off the smallest remaining key terminates.
pub fn h_to_immaculate(v: &LinComb<Composition>) -> LinComb<Composition> {
    let mut rest = v.clone();
    let mut out = LinComb::zero();
    while let Some(key) = rest.first_key().cloned() {
        let c = rest.coefficient(&key);
        rest.add_scaled(&immaculate_to_h(&key), &-c.clone());
        out.add_term(key, c);
    }
    out
}

/// `S(H_alpha) = (-1)^{|alpha|} sum_T S_{sh T}` over dual immaculate `T` with content `rev alpha`.
pub fn s_of_h_closed(alpha: &Composition) -> LinComb<Composition> {
    let content: Vec<u32> = alpha.reversal().into_parts();
    let s = sign(alpha.size());
    let mut out = LinComb::zero();
    for t in dual_immaculate_tableaux(&content) {
        out.add_term(t.shape(), s.clone());
    }
    out
}

/// `S(S_{n,1^k}) = (-1)^{n+k} S_{k+1,1^{n-1}}`.
pub fn antipode_hook(n: u32, k: u32) -> Result<LinComb<Composition>> {
    if n == 0 {
        return Err(Error::Precondition("hook arm must be positive".into()));
    }
    let mut parts = vec![k + 1];
    parts.extend(std::iter::repeat_n(1, n as usize - 1));
    Ok(LinComb::term(Composition::new(parts)?, sign((n + k) as usize)))
}

/// Two-part compositions `(m, n)` through the frozen tableau sets.
pub fn antipode_two_row(m: u32, n: u32) -> Result<LinComb<Composition>> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition("both rows must be nonempty".into()));
    }
    let t1 = frozen_set(&two_row_frozen_first(m, n)?);
    let t2 = frozen_set(&two_row_frozen_second(m, n)?);
    let mut out = LinComb::zero();
    for t in t1 {
        out.add_term(t.shape(), sign((m + n) as usize));
    }
    for t in t2 {
        out.add_term(t.shape(), sign((m + n + 1) as usize));
    }
    Ok(out)
}

/// `(n, 1^k)` as `(n, k)` when `alpha` is a hook.
pub fn as_hook(alpha: &Composition) -> Option<(u32, u32)> {
    let (&n, rest) = alpha.parts().split_first()?;
    rest.iter().all(|&p| p == 1).then_some((n, rest.len() as u32))
}

/// The known closed forms in the immaculate basis: hooks and two-row shapes.
pub fn immaculate_closed(alpha: &Composition) -> Option<LinComb<Composition>> {
    if alpha.is_empty() {
        return Some(LinComb::basis(Composition::empty()));
    }
    if let Some((n, k)) = as_hook(alpha) {
        return antipode_hook(n, k).ok();
    }
    match alpha.parts() {
        &[m, n] => antipode_two_row(m, n).ok(),
        _ => None,
    }
}

/// NSym in the immaculate basis, with structure maps transported from `H`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NSymImmaculate;

impl HopfAlgebra for NSymImmaculate {
    type Key = Composition;

    fn degree(&self, key: &Composition) -> usize {
        key.size()
    }

    fn unit(&self) -> Composition {
        Composition::empty()
    }

    fn product(&self, a: &Composition, b: &Composition) -> LinComb<Composition> {
        let (ha, hb) = (immaculate_to_h(a), immaculate_to_h(b));
        let mut prod = LinComb::zero();
        for (x, cx) in &ha {
            for (y, cy) in &hb {
                prod.add_term(x.concat(y), cx * cy);
            }
        }
        h_to_immaculate(&prod)
    }

    fn coproduct(&self, key: &Composition) -> LinComb<(Composition, Composition)> {
        let mut out = LinComb::zero();
        for ((b, g), c) in &crate::hopf::coproduct_lc(&NSymH, &immaculate_to_h(key)) {
            let (sb, sg) = (h_to_immaculate(&LinComb::basis(b.clone())), h_to_immaculate(&LinComb::basis(g.clone())));
            for (x, cx) in &sb {
                for (y, cy) in &sg {
                    out.add_term((x.clone(), y.clone()), c * cx * cy);
                }
            }
        }
        out
    }

    fn closed_antipode(&self, key: &Composition) -> Option<LinComb<Composition>> {
        immaculate_closed(key)
    }
}

/// Forgetful image in Sym: `H_alpha` goes to `h` of the sorted parts.
pub fn forget_to_sym(v: &LinComb<Composition>) -> LinComb<Composition> {
    v.map_keys(|a| {
        let mut p = a.parts().to_vec();
        p.sort_unstable_by(|x, y| y.cmp(x));
        Composition::from_nonzero(p)
    })
}

/// Conjugate of a partition.
pub fn conjugate_partition(lambda: &Composition) -> Composition {
    let p = lambda.parts();
    let width = p.first().copied().unwrap_or(0);
    Composition::from_nonzero((1..=width).map(|c| p.iter().filter(|&&r| r >= c).count() as u32))
}
