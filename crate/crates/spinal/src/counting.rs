//! Exact closed-form counts and the relations connecting them.
//!
//! All values are exact big integers. Each public function records how its
//! value was obtained, so tables can show which numbers came from closed
//! forms and which from relations between families.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// How a count was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Direct evaluation of a closed form.
    Formula,
    /// Combination of other counts through a proven relation.
    Relation,
    /// Coefficient extraction from a generating-function expansion.
    Series,
    /// Exhaustive generation of the objects themselves.
    Enumeration,
    /// Independent brute-force reconstruction from first principles.
    Oracle,
}

impl Provenance {
    /// Stable lowercase name, used in tabular output.
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Formula => "formula",
            Provenance::Relation => "relation",
            Provenance::Series => "series",
            Provenance::Enumeration => "enumeration",
            Provenance::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// An exact count together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCount {
    /// The value.
    pub value: BigUint,
    /// How the value was obtained.
    pub provenance: Provenance,
}

impl ExactCount {
    /// Wraps a value computed by a closed form.
    pub fn formula(value: BigUint) -> Self {
        ExactCount { value, provenance: Provenance::Formula }
    }

    /// Wraps a value computed through a relation.
    pub fn relation(value: BigUint) -> Self {
        ExactCount { value, provenance: Provenance::Relation }
    }

    /// Wraps a value counted by exhaustive generation.
    pub fn enumeration(value: BigUint) -> Self {
        ExactCount { value, provenance: Provenance::Enumeration }
    }

    /// Wraps a value counted by the brute-force oracle.
    pub fn oracle(value: BigUint) -> Self {
        ExactCount { value, provenance: Provenance::Oracle }
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// n! as a big integer.
pub fn factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..u64::from(k) {
        acc *= u64::from(n) - i;
        acc /= i + 1;
    }
    acc
}

fn pow2(e: u32) -> BigUint {
    BigUint::one() << e
}

fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "expected exact division");
    q
}

/// Product (lo+1)(lo+2)...(hi), i.e. hi!/lo! when hi >= lo; one when the
/// range is empty.
fn factorial_ratio(hi: u32, lo_exclusive: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in (u64::from(lo_exclusive) + 1)..=u64::from(hi) {
        acc *= i;
    }
    acc
}

/// Number of partitions of `1..=n+k` into k pairs and n-k singletons:
/// (n+k)! / (2^k (n-k)! k!).
///
/// Zero when k > n.
pub fn count_pair_partitions(n: u32, k: u32) -> ExactCount {
    if k > n {
        return ExactCount::formula(BigUint::zero());
    }
    let value = exact_div(factorial_ratio(n + k, n - k), &(pow2(k) * factorial(k)));
    ExactCount::formula(value)
}

/// Number of equivalence classes of adjacent-occurrence words with
/// parameters (n, k); equal to the pair-partition count.
pub fn count_c1_classes(n: u32, k: u32) -> ExactCount {
    count_pair_partitions(n, k)
}

/// Number of equivalence classes of high-separated words with parameters
/// (n, k): C(n+2k, n-k) (2k)! / (2^k k!).
pub fn count_c2_classes(n: u32, k: u32) -> ExactCount {
    if k > n {
        return ExactCount::formula(BigUint::zero());
    }
    let matchings = exact_div(factorial(2 * k), &(pow2(k) * factorial(k)));
    ExactCount::formula(binomial(n + 2 * k, n - k) * matchings)
}

/// Number of unlabeled spinal tree-child networks with n leaves and k
/// reticulations: (n+k-1)! / (2^k k! (n-k-1)!).
///
/// Zero when n = 0 or k >= n.
pub fn count_nlstc(n: u32, k: u32) -> ExactCount {
    if n == 0 || k >= n {
        return ExactCount::formula(BigUint::zero());
    }
    let value = exact_div(factorial_ratio(n + k - 1, n - k - 1), &(pow2(k) * factorial(k)));
    ExactCount::formula(value)
}

/// Number of unlabeled spinal caterpillar tree-child networks with n
/// leaves and k reticulations: C(n-1+2k, n-1-k) (2k)! / (2^k k!).
///
/// Zero when n = 0 or k >= n.
pub fn count_nlsctc(n: u32, k: u32) -> ExactCount {
    if n == 0 || k >= n {
        return ExactCount::formula(BigUint::zero());
    }
    let matchings = exact_div(factorial(2 * k), &(pow2(k) * factorial(k)));
    ExactCount::formula(binomial(n - 1 + 2 * k, n - 1 - k) * matchings)
}

/// Number of labeled spinal tree-child networks with n leaves and k
/// reticulations: n! (n+k-2)! (n+3k-1) / (2^{k+1} k! (n-k-1)!).
///
/// One for n = 1, k = 0; zero outside 0 <= k < n.
pub fn count_stc(n: u32, k: u32) -> ExactCount {
    if n == 0 || k >= n {
        return ExactCount::formula(BigUint::zero());
    }
    if n == 1 {
        return ExactCount::formula(BigUint::one());
    }
    if k == 0 {
        // The ratio (n-2)!/(n-1)! cancels the factor n-1.
        return ExactCount::formula(exact_div(factorial(n), &BigUint::from(2u32)));
    }
    let value = exact_div(
        factorial(n) * factorial_ratio(n + k - 2, n - k - 1) * (n + 3 * k - 1),
        &(pow2(k + 1) * factorial(k)),
    );
    ExactCount::formula(value)
}

/// The labeled count evaluated with full factorials and one exact
/// division, as an independent arithmetic path to [`count_stc`].
pub fn count_stc_naive(n: u32, k: u32) -> ExactCount {
    if n == 0 || k >= n {
        return ExactCount::formula(BigUint::zero());
    }
    if n == 1 {
        return ExactCount::formula(BigUint::one());
    }
    let numerator = factorial(n) * factorial(n + k - 2) * (n + 3 * k - 1);
    let denominator = pow2(k + 1) * factorial(k) * factorial(n - k - 1);
    ExactCount::formula(exact_div(numerator, &denominator))
}

/// The labeled count derived from the unlabeled one:
/// n! NLSTC(n, k) - (n!/2) NLSTC(n-1, k).
pub fn count_stc_via_lemma(n: u32, k: u32) -> ExactCount {
    if n == 0 || k >= n {
        return ExactCount::relation(BigUint::zero());
    }
    if n == 1 {
        return ExactCount::relation(BigUint::one());
    }
    let whole = factorial(n) * count_nlstc(n, k).value;
    let half = exact_div(factorial(n), &BigUint::from(2u32)) * count_nlstc(n - 1, k).value;
    ExactCount::relation(whole - half)
}

/// Number of labeled marked trees with n leaves and k marks:
/// n! (n+k-2)! / (2^{k-1} (k-1)! (n-k)!).
///
/// Zero when k = 0 or k > n.
pub fn labeled_marked_tree_count(n: u32, k: u32) -> ExactCount {
    if k == 0 || k > n {
        return ExactCount::formula(BigUint::zero());
    }
    let value = exact_div(
        factorial(n) * factorial_ratio(n + k - 2, n - k),
        &(pow2(k - 1) * factorial(k - 1)),
    );
    ExactCount::formula(value)
}

/// Number of unlabeled marked trees with n leaves and k marks:
/// (n+k-2)! / (2^{k-1} (k-1)! (n-k)!).
///
/// Zero when k = 0 or k > n.
pub fn unlabeled_marked_tree_count(n: u32, k: u32) -> ExactCount {
    if k == 0 || k > n {
        return ExactCount::formula(BigUint::zero());
    }
    let value = exact_div(factorial_ratio(n + k - 2, n - k), &(pow2(k - 1) * factorial(k - 1)));
    ExactCount::formula(value)
}

/// The labeled count assembled from marked-tree counts:
/// (n/2) s(n-1, k+1) + n (n+k-2) s(n-1, k).
///
/// The first term counts cherry-terminated networks, the second the
/// non-cherry ones.
pub fn count_stc_via_marked(n: u32, k: u32) -> ExactCount {
    if n == 0 || k >= n {
        return ExactCount::relation(BigUint::zero());
    }
    if n == 1 {
        return ExactCount::relation(BigUint::one());
    }
    let cherry = exact_div(
        BigUint::from(n) * labeled_marked_tree_count(n - 1, k + 1).value,
        &BigUint::from(2u32),
    );
    let non_cherry = if k == 0 {
        BigUint::zero()
    } else {
        BigUint::from(n) * (n + k - 2) * labeled_marked_tree_count(n - 1, k).value
    };
    ExactCount::relation(cherry + non_cherry)
}

/// The unlabeled count assembled from marked-tree counts:
/// d(n-1, k+1) + (n+k-2) d(n-1, k).
pub fn count_nlstc_via_marked(n: u32, k: u32) -> ExactCount {
    if n == 0 || k >= n {
        return ExactCount::relation(BigUint::zero());
    }
    if n == 1 {
        return ExactCount::relation(BigUint::one());
    }
    let cherry = unlabeled_marked_tree_count(n - 1, k + 1).value;
    let non_cherry = if k == 0 {
        BigUint::zero()
    } else {
        BigUint::from(n + k - 2) * unlabeled_marked_tree_count(n - 1, k).value
    };
    ExactCount::relation(cherry + non_cherry)
}
