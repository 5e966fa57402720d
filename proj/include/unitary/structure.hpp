#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "unitary/arith_func.hpp"

namespace unitary {

// f split by leading prime: part i is supported on A^i = {k : lp(k) = p_i},
// the value at 1 is kept separately. Summing everything back gives f.
struct CanonicalDecomposition {
  long bound;
  Coeff constant_term;
  std::map<long, ArithFunc> parts;

  ArithFunc recompose() const;
};

CanonicalDecomposition canonical_decompose(
    const ArithFunc& f, const Sieve& sieve = Sieve::standard());

// Largest class index with a nonzero part; 0 when no class is hit
// (zero and pure-constant functions). The constant term is ignored.
long filtration_degree(const ArithFunc& f,
                       const Sieve& sieve = Sieve::standard());

// True when some support point lies in a class A^i with i > k. At
// truncation every element is of polynomial type, so this is how a test
// tells "genuinely degree <= k" from a truncation artifact.
bool has_support_above_class(const ArithFunc& f, long k,
                             const Sieve& sieve = Sieve::standard());

// Membership in I_k: f(n) = 0 for every n <= bound coprime to p_1...p_k.
bool in_Ik(const ArithFunc& f, long k, const Sieve& sieve = Sieve::standard());

// Tests f (+) e_{p_1...p_K} = 0 in A_N. Throws std::domain_error when
// p_1...p_K exceeds the bound (the witness index is out of range).
bool annihilates_squarefree_block(const ArithFunc& f, long K,
                                  const Sieve& sieve = Sieve::standard());

// Smallest n <= max_n with f^n = 0 in A_N; nullopt if none found.
std::optional<long> nilpotency_index(const ArithFunc& f, long max_n);

// Projection onto square-free indices; a ring retraction.
ArithFunc retract_sqf(const ArithFunc& f, const Sieve& sieve = Sieve::standard());

// Keeps indices whose factorization exponents all satisfy the predicate
// (index 1 is always kept). retract_Q with {1} equals retract_sqf.
ArithFunc retract_Q(const ArithFunc& f,
                    const std::function<bool(long)>& exponent_allowed,
                    const Sieve& sieve = Sieve::standard());
ArithFunc retract_Q(const ArithFunc& f, const std::set<long>& Q,
                    const Sieve& sieve = Sieve::standard());

// Defining table of a continuous endomorphism: (prime index i, exponent j)
// maps to the image of e_{p_i^j}. Construction validates the kernel
// condition gamma_{i,j} (+) gamma_{i,k} = 0 for every column i.
class GammaTable {
 public:
  GammaTable(std::map<std::pair<long, long>, ArithFunc> images, long bound);

  long bound() const { return bound_; }
  const std::map<std::pair<long, long>, ArithFunc>& images() const {
    return images_;
  }

  // Image of e_{p_i^j}; zero when the table has no entry.
  const ArithFunc* find(long i, long j) const;

 private:
  long bound_;
  std::map<std::pair<long, long>, ArithFunc> images_;
};

// theta(f) = sum over k of f(k) times the (+)-product of the images of
// the prime-power parts of k.
ArithFunc apply_endomorphism(const ArithFunc& f, const GammaTable& table,
                             const Sieve& sieve = Sieve::standard());

// Order-indexed echelonized family: entry k has order k and value 1 at k.
struct BasisFamily {
  std::map<long, ArithFunc> entries;
};

// Reduced echelon form of the span of the generators, ordered by index.
BasisFamily echelon_basis(const std::vector<ArithFunc>& generators);

struct ExpressResult {
  // (order, coefficient) pairs with strictly increasing orders.
  std::vector<std::pair<long, Coeff>> terms;
  // Whatever could not be eliminated; zero iff exact.
  ArithFunc residue;
  bool exact;
};

// Greedy elimination against the family: repeatedly strip the leading
// term of f using the basis entry of matching order.
ExpressResult express_in_basis(const ArithFunc& f, const BasisFamily& basis);

// Basis of {g supported on [1..M] : f (+) g = 0 in A_N}, by exact
// rational elimination over all constraint rows n <= N. An empty basis
// is evidence of regularity at this resolution.
std::vector<ArithFunc> regularity_kernel(const ArithFunc& f, long M);

struct NfgTranscript {
  long prime;
  long generator_cap;
  std::vector<std::string> lines;
  bool all_candidates_fail;
};

// For prime L > cap, checks that e_L admits no decomposition through the
// generators e_2..e_cap: L = i*k with gcd(i,k) = 1 and 2 <= k <= cap has
// no solution. Throws for non-prime L or L <= cap.
NfgTranscript demo_not_finitely_generated(long L, long generator_cap,
                                          const Sieve& sieve = Sieve::standard());

}  // namespace unitary
