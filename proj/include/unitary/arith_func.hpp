#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "unitary/coeff.hpp"
#include "unitary/numtheory.hpp"

namespace unitary {

// An element of the truncated ring A_N: a function [1..N] -> Coeff.
// Operations are only defined between functions at the same bound;
// mixed bounds are a caller error and throw.
class ArithFunc {
 public:
  explicit ArithFunc(long bound);

  long bound() const { return bound_; }
  const Coeff& operator[](long n) const;
  void set(long n, Coeff v);
  void add_at(long n, const Coeff& v);

  bool is_zero() const;
  std::vector<long> support() const;

  static ArithFunc zero(long bound);
  static ArithFunc e(long k, long bound);  // indicator of k; throws if k > bound
  static ArithFunc one(long bound);        // constantly 1

  friend bool operator==(const ArithFunc& a, const ArithFunc& b) {
    return a.bound_ == b.bound_ && a.values_ == b.values_;
  }

 private:
  long bound_;
  std::vector<Coeff> values_;  // index 0 unused
};

// Throws std::invalid_argument unless both bounds agree.
void require_same_bound(const ArithFunc& f, const ArithFunc& g);

ArithFunc add(const ArithFunc& f, const ArithFunc& g);
ArithFunc sub(const ArithFunc& f, const ArithFunc& g);
ArithFunc scale(const Coeff& c, const ArithFunc& f);

// Unitary convolution: (f (+) g)(n) = sum over d || n of f(d) g(n/d).
ArithFunc uconv(const ArithFunc& f, const ArithFunc& g);

// Dirichlet convolution, kept as a comparison operation.
ArithFunc dconv(const ArithFunc& f, const ArithFunc& g);

// n-fold unitary power; upow(f, 0) = e_1.
ArithFunc upow(const ArithFunc& f, long n);

// Order N(f) = min supp(f); nullopt when the support is empty, i.e. the
// element is zero in A_N (order unresolvable at this truncation).
std::optional<long> order(const ArithFunc& f);

// Norm 1/N(f); 0 for empty support.
mpq_class norm(const ArithFunc& f);

// Degree = min omega(k) over supp(f); nullopt for empty support (there is
// no canonical value for the zero element, so we expose a sentinel).
std::optional<long> degree(const ArithFunc& f,
                           const Sieve& sieve = Sieve::standard());

bool is_unit(const ArithFunc& f);

// Convolution inverse by index recursion: g(1) = 1/f(1) and
// g(n) = -(1/f(1)) * sum over unitary divisors d > 1 of n of f(d) g(n/d).
// Throws std::domain_error for non-units.
ArithFunc inverse(const ArithFunc& f, const Sieve& sieve = Sieve::standard());

// Independent inversion route: with g = e_1 - f/f(1), the inverse is
// (1/f(1)) * sum of g^i, which terminates because order(g^i) strictly
// increases past the bound.
ArithFunc geometric_inverse(const ArithFunc& f);

// The unitary Moebius function mu*(r) = (-1)^omega(r), the inverse of 1.
ArithFunc mobius_star(long bound, const Sieve& sieve = Sieve::standard());

// Keys are (1-based prime index, exponent); the constructed f has
// f(1) = 1 and f(p_{i1}^{j1} ... p_{ir}^{jr}) = prod of the table
// entries, missing entries meaning 0.
ArithFunc multiplicative_from(const std::map<std::pair<long, long>, Coeff>& table,
                              long bound,
                              const Sieve& sieve = Sieve::standard());

// Checks f(nm) = f(n) f(m) for all coprime n, m with nm <= bound.
bool is_multiplicative(const ArithFunc& f);

}  // namespace unitary
