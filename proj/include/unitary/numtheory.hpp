#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace unitary {

struct PrimePower {
  long prime;
  long exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power decomposition of a positive integer, primes strictly
// increasing, all exponents >= 1. The empty list is n = 1. Doubles as a
// separated monomial: pair (i, j) with i the 1-based index of the prime
// corresponds to the variable in column i with superscript j.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> pairs);

  const std::vector<PrimePower>& pairs() const& { return pairs_; }
  // Ranging over `sieve.factor(n).pairs()` is common; the rvalue overload
  // hands the vector out by value so the loop never dangles.
  std::vector<PrimePower> pairs() && { return std::move(pairs_); }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

  // Reconstructs n.
  long value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
};

// Smallest-prime-factor sieve. Built once, immutable afterwards; all
// queries are pure reads and thread-safe.
class Sieve {
 public:
  explicit Sieve(long bound);

  long bound() const { return bound_; }
  const std::vector<long>& primes() const { return primes_; }

  bool is_prime(long n) const;
  long smallest_prime_factor(long n) const;

  // Throws std::domain_error for n < 1 or n > bound().
  Factorization factor(long n) const;

  // Number of distinct prime factors; omega(1) = 0.
  long omega(long n) const;

  // Smallest prime dividing n; throws for n <= 1.
  long leading_prime(long n) const;

  // 1-based index i with leading_prime(n) = p_i, i.e. the class A^i
  // containing n. Throws for n <= 1.
  long class_index(long n) const;

  // 1-based prime index of p; throws if p is not prime or out of range.
  long prime_index(long p) const;

  // p_i for 1-based i; throws if i exceeds the number of sieved primes.
  long nth_prime(long i) const;

  // All d with d | n and gcd(d, n/d) = 1, sorted ascending.
  std::vector<long> unitary_divisors(long n) const;

  bool is_squarefree(long n) const;

  // Shared sieve with the default bound of 10^6.
  static const Sieve& standard();

 private:
  long bound_;
  std::vector<int32_t> spf_;
  std::vector<long> primes_;
};

// k (+) m in the monoid-with-zero (N^+, (+)): k*m when gcd(k,m) = 1,
// otherwise the exterior zero, represented as nullopt.
std::optional<long> unitary_product(long k, long m);

// The monoid-with-zero isomorphism between separated monomials and N^+:
// the variable in column i with superscript j maps to p_i^j.
long phi_encode(const Factorization& m);
Factorization phi_decode(long n, const Sieve& sieve = Sieve::standard());

}  // namespace unitary
