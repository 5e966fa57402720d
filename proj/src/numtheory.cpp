#include "unitary/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace unitary {

Factorization::Factorization(std::vector<PrimePower> pairs)
    : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].exponent < 1) {
      throw std::invalid_argument("Factorization: exponent < 1");
    }
    if (i > 0 && pairs_[i - 1].prime >= pairs_[i].prime) {
      throw std::invalid_argument("Factorization: primes not increasing");
    }
  }
}

long Factorization::value() const {
  long n = 1;
  for (const auto& [p, a] : pairs_) {
    for (long e = 0; e < a; ++e) n *= p;
  }
  return n;
}

Sieve::Sieve(long bound) : bound_(bound) {
  if (bound < 1) throw std::invalid_argument("Sieve: bound < 1");
  spf_.assign(static_cast<std::size_t>(bound) + 1, 0);
  for (long i = 2; i <= bound; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<int32_t>(i);
      primes_.push_back(i);
    }
    for (long p : primes_) {
      if (p > spf_[i] || i * p > bound) break;
      spf_[i * p] = static_cast<int32_t>(p);
    }
  }
}

bool Sieve::is_prime(long n) const {
  return n >= 2 && n <= bound_ && spf_[n] == n;
}

long Sieve::smallest_prime_factor(long n) const {
  if (n < 2 || n > bound_) {
    throw std::domain_error("smallest_prime_factor: n out of sieve range");
  }
  return spf_[n];
}

Factorization Sieve::factor(long n) const {
  if (n < 1 || n > bound_) {
    throw std::domain_error("factor: n out of sieve range: " +
                            std::to_string(n));
  }
  std::vector<PrimePower> pairs;
  while (n > 1) {
    long p = spf_[n];
    long a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    pairs.push_back({p, a});
  }
  return Factorization(std::move(pairs));
}

long Sieve::omega(long n) const {
  if (n < 1 || n > bound_) {
    throw std::domain_error("omega: n out of sieve range");
  }
  long count = 0;
  while (n > 1) {
    long p = spf_[n];
    while (n % p == 0) n /= p;
    ++count;
  }
  return count;
}

long Sieve::leading_prime(long n) const {
  if (n <= 1) throw std::domain_error("leading_prime: undefined for n <= 1");
  return smallest_prime_factor(n);
}

long Sieve::class_index(long n) const { return prime_index(leading_prime(n)); }

long Sieve::prime_index(long p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) {
    throw std::domain_error("prime_index: not a prime in sieve range");
  }
  return static_cast<long>(it - primes_.begin()) + 1;
}

long Sieve::nth_prime(long i) const {
  if (i < 1 || i > static_cast<long>(primes_.size())) {
    throw std::domain_error("nth_prime: index out of sieve range");
  }
  return primes_[i - 1];
}

std::vector<long> Sieve::unitary_divisors(long n) const {
  // Unitary divisors are exactly the products of subsets of the
  // full prime-power parts of n.
  Factorization fac = factor(n);
  std::vector<long> divs{1};
  for (const auto& [p, a] : fac.pairs()) {
    long pp = 1;
    for (long e = 0; e < a; ++e) pp *= p;
    std::size_t sz = divs.size();
    for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pp);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool Sieve::is_squarefree(long n) const {
  if (n < 1 || n > bound_) {
    throw std::domain_error("is_squarefree: n out of sieve range");
  }
  while (n > 1) {
    long p = spf_[n];
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

const Sieve& Sieve::standard() {
  static const Sieve sieve(1000000);
  return sieve;
}

std::optional<long> unitary_product(long k, long m) {
  if (k < 1 || m < 1) throw std::domain_error("unitary_product: inputs < 1");
  if (std::gcd(k, m) != 1) return std::nullopt;
  return k * m;
}

long phi_encode(const Factorization& m) { return m.value(); }

Factorization phi_decode(long n, const Sieve& sieve) { return sieve.factor(n); }

}  // namespace unitary
