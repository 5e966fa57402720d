#pragma once

#include <vector>

#include "unitary/arith_func.hpp"

namespace unitary {

struct FactorizationCertificate {
  ArithFunc target;
  std::vector<ArithFunc> factors;
  bool verified;  // true iff the (+)-product of factors equals target in A_N
};

FactorizationCertificate verify_factorization(
    const ArithFunc& target, const std::vector<ArithFunc>& factors);

// Any factorization of a nonzero non-unit into atoms has at most
// degree(f) factors. Throws std::domain_error for units and zero.
long factorization_length_bound(const ArithFunc& f,
                                const Sieve& sieve = Sieve::standard());

// Strong-associate test by exact linear solving: g = u (+) f for some
// unit u, and symmetrically. Quadratic-size rational elimination, so
// intended for moderate bounds.
bool is_associate(const ArithFunc& f, const ArithFunc& g);

// Exhaustive search for two-factor products equal to f: factors have
// support of size <= 2 inside [2..support_cap] and coefficients drawn
// from coeff_set. Results are deduplicated up to scalar association and
// all pass verify_factorization. Throws for a zero target.
std::vector<FactorizationCertificate> atom_search(
    const ArithFunc& f, long support_cap, const std::vector<Coeff>& coeff_set);

}  // namespace unitary
