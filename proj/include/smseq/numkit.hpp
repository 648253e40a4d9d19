#pragma once

#include "smseq/common.hpp"
#include "smseq/digitstring.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace smseq::numkit {

/// Primality verdict. `Prime` and `Composite` are exact claims;
/// `ProbablePrime` carries error probability <= 4^-rounds.
enum class Verdict { Prime, Composite, ProbablePrime };

/// How hard to try when deciding primality above the deterministic bound.
struct Certainty {
    bool deterministic_mode = true;
    unsigned rounds = 25;

    static Certainty deterministic() { return {true, 0}; }
    static Certainty probable(unsigned rounds) { return {false, rounds}; }
};

// Strong-probable-prime testing is exact (fixed witness set) below this bound.
inline constexpr std::uint64_t kDeterministicBound64 = ~std::uint64_t{0};

/// Exact primality for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Primality for arbitrary-size inputs. Deterministic mode yields
/// Prime/Composite below 2^64 and Composite/ProbablePrime above it;
/// probable(r) mode runs r strong rounds with input-derived bases, so
/// repeated calls agree.
Verdict is_prime(const Natural& n, Certainty c = Certainty::deterministic());

/// Convenience: verdict is not Composite.
bool probably_prime(const Natural& n, unsigned rounds = 25);

/// Simple sieve of Eratosthenes, primes <= limit.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// k-th prime, 1-based (p_1 = 2). Served from a growing shared sieve.
std::uint64_t nth_prime(std::uint64_t k);

/// Greatest prime <= n (requires n >= 2) / least prime >= n.
Natural prev_prime(const Natural& n);
Natural next_prime(const Natural& n);

/// Floor of the m-th root: r with r^m <= n < (r+1)^m, m >= 2.
Natural integer_root(const Natural& n, unsigned m);

/// Decomposition n = a^b with a >= 2, b >= 2, b maximal; nullopt if none.
std::optional<std::pair<Natural, unsigned>> is_perfect_power(const Natural& n);

struct Factorization {
    // (prime, exponent), primes strictly increasing, exponents >= 1.
    std::vector<std::pair<Natural, unsigned>> factors;

    Natural value() const;
    unsigned max_exponent() const;
    std::uint64_t divisor_count() const;
};

/// Workload cap for factoring composite cofactors (default 2^64).
/// Tests may raise it; not safe to modify concurrently with use.
Natural& factorization_bound();

/// Exact factorization of n >= 1; 1 -> empty list. Composite cofactors
/// above factorization_bound() raise WorkloadError.
Factorization factorize(const Natural& n);

Natural factorial(std::uint64_t n);
/// n!! with 0!! = 1!! = 1.
Natural double_factorial(std::uint64_t n);

/// Base-B digits of n, most significant first, no leading zeros
/// (0 renders as a single 0 digit).
DigitString digits(const Natural& n, std::uint32_t base = 10);
/// Inverse of digits() up to leading-zero absorption.
Natural from_digits(const DigitString& d);

} // namespace smseq::numkit
