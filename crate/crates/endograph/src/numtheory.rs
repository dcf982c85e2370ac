//! Closed-form counts for the endomorphism graph of a cyclic group, plus the
//! elementary arithmetic they are built from.
//!
//! Everything here is exact integer arithmetic with trial-division
//! factorization; inputs are desk-scale (n <= 10^6 by contract).

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi requires n >= 1");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Prime factorization as (prime, multiplicity) pairs, primes ascending.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// All divisors of n, sorted ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// n together with its sorted divisor list and prime factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorProfile {
    pub n: u64,
    pub divisors: Vec<u64>,
    pub factorization: Vec<(u64, u32)>,
}

impl DivisorProfile {
    pub fn new(n: u64) -> Self {
        DivisorProfile {
            n,
            divisors: divisors(n),
            factorization: factorize(n),
        }
    }
}

/// Number of edges of the (undirected) endomorphism graph of the cyclic
/// group of order n: all pairs minus one non-edge for every pair of elements
/// whose orders are incomparable under divisibility. The orders involved
/// range over the proper divisors 1 < d_1 < ... < d_k < n.
pub fn cyclic_edge_count(n: u64) -> u64 {
    assert!(n >= 1);
    let proper: Vec<u64> = divisors(n)
        .into_iter()
        .filter(|&d| d > 1 && d < n)
        .collect();
    let phi: Vec<u64> = proper.iter().map(|&d| euler_phi(d)).collect();
    let mut missing = 0;
    for i in 0..proper.len() {
        for j in i + 1..proper.len() {
            if !proper[j].is_multiple_of(proper[i]) {
                missing += phi[i] * phi[j];
            }
        }
    }
    n * (n - 1) / 2 - missing
}

/// Number of maximal cliques of the endomorphism graph of Z_n: the maximal
/// chains in the divisor lattice, counted by the multinomial coefficient
/// (n_1 + ... + n_k)! / (n_1! ... n_k!) over the prime multiplicities of n.
pub fn cyclic_maximal_clique_count(n: u64) -> u64 {
    assert!(n >= 1);
    let mults: Vec<u32> = factorize(n).into_iter().map(|(_, e)| e).collect();
    let mut count: u64 = 1;
    let mut placed: u32 = 0;
    // multinomial = product of binomials C(placed + e, e)
    for e in mults {
        for i in 1..=e {
            count = count * u64::from(placed + i) / u64::from(i);
        }
        placed += e;
    }
    count
}

/// Clique number (= chromatic number) of the endomorphism graph of Z_n:
/// write the primes dividing n with multiplicity in nonincreasing order
/// (q_1, ..., q_m), set r_i = q_1 * ... * q_i with r_0 = 1, and sum phi(r_i)
/// for i = 0..m. For n = 1 this is 1.
pub fn cyclic_clique_number(n: u64) -> u64 {
    assert!(n >= 1);
    let mut primes: Vec<u64> = Vec::new();
    for (p, e) in factorize(n) {
        for _ in 0..e {
            primes.push(p);
        }
    }
    primes.sort_unstable_by(|a, b| b.cmp(a));
    let mut sum = euler_phi(1);
    let mut r = 1;
    for q in primes {
        r *= q;
        sum += euler_phi(r);
    }
    sum
}
