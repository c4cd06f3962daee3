//! Closed-form orders of finite classical groups. Independent of the
//! enumeration code: nothing here touches rings or algebras.

/// `|GL_n(F_q)| = prod_{i<n} (q^n - q^i)`.
pub fn gl(n: u32, q: u64) -> u64 {
    (0..n).map(|i| q.pow(n) - q.pow(i)).product()
}

pub fn sl(n: u32, q: u64) -> u64 {
    gl(n, q) / (q - 1)
}

/// `|U_n(q)| = q^{n(n-1)/2} prod_{i=1}^n (q^i - (-1)^i)`.
pub fn unitary(n: u32, q: u64) -> u64 {
    let mut order = q.pow(n * (n - 1) / 2) as i128;
    for i in 1..=n {
        let sign: i128 = if i % 2 == 0 { 1 } else { -1 };
        order *= q.pow(i) as i128 - sign;
    }
    order as u64
}

pub fn special_unitary(n: u32, q: u64) -> u64 {
    unitary(n, q) / (q + 1)
}

/// `|SO_{2m+1}(q)| = q^{m^2} prod_{i=1}^m (q^{2i} - 1)`, `q` odd.
pub fn special_orthogonal_odd(m: u32, q: u64) -> u64 {
    q.pow(m * m) * (1..=m).map(|i| q.pow(2 * i) - 1).product::<u64>()
}
