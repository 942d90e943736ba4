//! Prime generation and integer factorisation utilities.
//!
//! The segmented sieve streams primes over a range without materialising
//! them; block sums over primes up to 10^10 stay within desk-scale budgets.
//! Factorisation combines trial division, deterministic Miller–Rabin and
//! Brent's variant of Pollard rho, which is plenty for the norm sizes
//! produced by the relation engine.

use alloc::vec;
use alloc::vec::Vec;

/// Simple sieve of Eratosthenes up to `limit` inclusive.
pub fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    let mut i = 2usize;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    for (i, &c) in composite.iter().enumerate().skip(2) {
        if !c {
            out.push(i as u64);
        }
    }
    out
}

/// Integer square root (floor).
pub fn isqrt_u64(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = libm::sqrt(n as f64) as u64;
    // correct the float estimate
    while x > 0 && x.checked_mul(x).map_or(true, |v| v > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).map_or(false, |v| v <= n) {
        x += 1;
    }
    x
}

/// Streams every prime in `(lo, hi]` in increasing order into `f`.
///
/// Uses an odds-only segmented bitmap; segment span 2^21 numbers keeps the
/// working set cache-resident.
pub fn for_primes_in<F: FnMut(u64)>(lo: u64, hi: u64, mut f: F) {
    if hi < 2 || hi <= lo {
        return;
    }
    if lo < 2 {
        f(2);
    }
    let base = small_primes(isqrt_u64(hi));
    const SPAN: u64 = 1 << 21;
    // first odd candidate strictly above lo
    let mut seg_lo = (lo + 1).max(3);
    if seg_lo % 2 == 0 {
        seg_lo += 1;
    }
    let mut words = vec![0u64; (SPAN as usize / 2 + 63) / 64];
    while seg_lo <= hi {
        let seg_hi = seg_lo.saturating_add(SPAN - 1).min(hi);
        let count = ((seg_hi - seg_lo) / 2 + 1) as usize; // odd numbers in [seg_lo, seg_hi]
        let wlen = (count + 63) / 64;
        for w in words.iter_mut().take(wlen) {
            *w = u64::MAX;
        }
        // clear tail bits beyond count
        let tail_bits = count % 64;
        if tail_bits != 0 {
            words[wlen - 1] = (1u64 << tail_bits) - 1;
        }
        for &p in base.iter().skip(1) {
            // skip 2: only odd candidates are stored
            let mut start = match p.checked_mul(p) {
                Some(sq) if sq > seg_hi => break,
                Some(sq) => sq.max(((seg_lo + p - 1) / p) * p),
                None => break,
            };
            if start % 2 == 0 {
                start += p;
            }
            if start > seg_hi {
                continue;
            }
            let mut idx = ((start - seg_lo) / 2) as usize;
            let step = p as usize;
            while idx < count {
                words[idx >> 6] &= !(1u64 << (idx & 63));
                idx += step;
            }
        }
        for (wi, &w) in words.iter().enumerate().take(wlen) {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as u64;
                bits &= bits - 1;
                f(seg_lo + 2 * ((wi as u64) * 64 + b));
            }
        }
        seg_lo = match seg_hi.checked_add(1) {
            Some(v) => {
                if v % 2 == 0 {
                    v + 1
                } else {
                    v
                }
            }
            None => break,
        };
    }
}

/// Collects primes in `(lo, hi]` (use only for modest ranges).
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    let mut v = Vec::new();
    for_primes_in(lo, hi, |p| v.push(p));
    v
}

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for u64 (the 12-base certificate covers all
/// 64-bit integers).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: u64, c0: u64) -> u64 {
    // returns a nontrivial factor of composite odd n, or n on failure
    let mut c = c0;
    loop {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        let mut count = 0u64;
        while d == 1 && count < 1 << 22 {
            x = f(x);
            y = f(f(y));
            let diff = x.abs_diff(y);
            if diff == 0 {
                break;
            }
            d = gcd(diff, n);
            count += 1;
        }
        if d != 1 && d != n {
            return d;
        }
        c += 1;
        if c > c0 + 20 {
            return n;
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Full factorisation of `n` as sorted (prime, exponent) pairs.
pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut push = |p: u64, out: &mut Vec<(u64, u32)>| {
        if let Some(last) = out.iter_mut().find(|(q, _)| *q == p) {
            last.1 += 1;
        } else {
            out.push((p, 1));
        }
    };
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while n % p == 0 {
            push(p, &mut out);
            n /= p;
        }
    }
    // trial division with a wheel over residues coprime to 2,3,5
    let mut d = 49u64;
    let wheel = [2u64, 4, 2, 4, 6, 2, 6, 4, 2, 4, 6, 6, 2, 6, 4, 2, 6, 4, 6, 8, 4, 2, 4, 2, 4, 8, 6, 4, 6, 2];
    let mut wi = 0usize;
    while d.saturating_mul(d) <= n && d < 100_000 {
        while n % d == 0 {
            push(d, &mut out);
            n /= d;
        }
        d += wheel[wi % wheel.len()];
        wi += 1;
    }
    // remaining cofactor: prime, or split recursively with rho
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            push(m, &mut out);
            continue;
        }
        let f = pollard_brent(m, 1);
        if f == m || f == 1 {
            // extremely unlikely for u64; treat as prime-like to stay total
            push(m, &mut out);
            continue;
        }
        stack.push(f);
        stack.push(m / f);
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_match_known() {
        assert_eq!(small_primes(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn segmented_matches_simple() {
        let simple: Vec<u64> = small_primes(10_000);
        let seg = primes_in(1, 10_000);
        assert_eq!(seg, simple[0..].to_vec());
        let window: Vec<u64> = simple.iter().copied().filter(|&p| p > 100 && p <= 5000).collect();
        assert_eq!(primes_in(100, 5000), window);
    }

    #[test]
    fn segmented_crosses_segments() {
        // count π(2^22 + 1000) - π(2^22 - 1000) against direct MR
        let lo = (1u64 << 22) - 1000;
        let hi = (1u64 << 22) + 1000;
        let seg = primes_in(lo, hi);
        let direct: Vec<u64> = (lo + 1..=hi).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(seg, direct);
    }

    #[test]
    fn miller_rabin_agrees_with_sieve() {
        let ps = small_primes(2000);
        for n in 2..2000u64 {
            assert_eq!(is_prime_u64(n), ps.binary_search(&n).is_ok(), "n={n}");
        }
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest u64 prime
    }

    #[test]
    fn factorize_round_trips() {
        for &n in &[
            2u64,
            360,
            1_000_003,
            999_999_999_989,
            1_000_000_016_000_000_063, // (1e9+7)(1e9+9)
            (1 << 61) - 1,
        ] {
            let f = factorize_u64(n);
            let mut prod = 1u64;
            for &(p, e) in &f {
                assert!(is_prime_u64(p), "claimed prime {p}");
                for _ in 0..e {
                    prod *= p;
                }
            }
            assert_eq!(prod, n);
        }
    }
}
