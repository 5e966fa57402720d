#include "unitary/factorization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "unitary/linalg.hpp"

namespace unitary {

FactorizationCertificate verify_factorization(
    const ArithFunc& target, const std::vector<ArithFunc>& factors) {
  ArithFunc product = ArithFunc::e(1, target.bound());
  for (const auto& factor : factors) {
    require_same_bound(target, factor);
    product = uconv(product, factor);
  }
  return {target, factors, product == target};
}

long factorization_length_bound(const ArithFunc& f, const Sieve& sieve) {
  if (is_unit(f)) {
    throw std::domain_error("factorization_length_bound: f is a unit");
  }
  auto deg = degree(f, sieve);
  if (!deg) {
    throw std::domain_error("factorization_length_bound: f is zero in A_N");
  }
  return *deg;
}

namespace {

// Does some unit u with u (+) f = g exist? Exact linear system over the
// unknowns u(1..N), one row per output index.
bool unit_multiplier_exists(const ArithFunc& f, const ArithFunc& g) {
  const long N = f.bound();
  const auto& sieve = Sieve::standard();
  std::vector<std::vector<Coeff>> rows;
  std::vector<Coeff> rhs;
  for (long n = 1; n <= N; ++n) {
    std::vector<Coeff> row(N, Coeff());
    for (long d : sieve.unitary_divisors(n)) {
      row[d - 1] = f[n / d];
    }
    rows.push_back(std::move(row));
    rhs.push_back(g[n]);
  }
  LinearSolution sol = solve_linear(rows, rhs, static_cast<std::size_t>(N));
  if (!sol.consistent) return false;
  if (!sol.particular[0].is_zero()) return true;
  for (const auto& v : sol.nullspace) {
    if (!v[0].is_zero()) return true;
  }
  return false;
}

}  // namespace

bool is_associate(const ArithFunc& f, const ArithFunc& g) {
  require_same_bound(f, g);
  const bool fz = f.is_zero();
  const bool gz = g.is_zero();
  if (fz || gz) return fz && gz;
  if (order(f) != order(g)) return false;  // units preserve the order
  return unit_multiplier_exists(f, g) && unit_multiplier_exists(g, f);
}

namespace {

using SparseFunc = std::vector<std::pair<long, Coeff>>;

// Product of two sparse functions in A_N, as an index -> value map.
std::map<long, Coeff> sparse_uconv(const SparseFunc& a, const SparseFunc& b,
                                   long bound) {
  std::map<long, Coeff> prod;
  for (const auto& [s, cs] : a) {
    for (const auto& [t, ct] : b) {
      if (std::gcd(s, t) != 1) continue;
      long idx = s * t;
      if (idx > bound) continue;
      auto [it, inserted] = prod.try_emplace(idx, cs * ct);
      if (!inserted) it->second += cs * ct;
    }
  }
  std::erase_if(prod, [](const auto& kv) { return kv.second.is_zero(); });
  return prod;
}

std::string sparse_key(const SparseFunc& f) {
  std::string key;
  for (const auto& [idx, c] : f) {
    key += std::to_string(idx) + ":" + c.str() + ";";
  }
  return key;
}

// Normalizes (a, b) so that a has leading coefficient 1, the scalar
// moving into b; products are unchanged under this rescaling.
std::pair<SparseFunc, SparseFunc> monic_pair(SparseFunc a, SparseFunc b) {
  Coeff lead = a.front().second;
  Coeff inv = lead.inverse();
  for (auto& [idx, c] : a) c = c * inv;
  for (auto& [idx, c] : b) c = c * lead;
  return {std::move(a), std::move(b)};
}

ArithFunc densify(const SparseFunc& f, long bound) {
  ArithFunc g(bound);
  for (const auto& [idx, c] : f) g.set(idx, c);
  return g;
}

}  // namespace

std::vector<FactorizationCertificate> atom_search(
    const ArithFunc& f, long support_cap, const std::vector<Coeff>& coeff_set) {
  if (f.is_zero()) {
    throw std::domain_error("atom_search: zero target is trivially divisible");
  }
  std::vector<Coeff> coeffs;
  for (const Coeff& c : coeff_set) {
    if (!c.is_zero()) coeffs.push_back(c);
  }

  std::vector<SparseFunc> candidates;
  for (long s = 2; s <= support_cap; ++s) {
    for (const Coeff& c : coeffs) {
      candidates.push_back({{s, c}});
      for (long t = s + 1; t <= support_cap; ++t) {
        for (const Coeff& d : coeffs) {
          candidates.push_back({{s, c}, {t, d}});
        }
      }
    }
  }

  std::map<long, Coeff> target;
  for (long n : f.support()) target.emplace(n, f[n]);

  std::vector<FactorizationCertificate> found;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i; j < candidates.size(); ++j) {
      if (sparse_uconv(candidates[i], candidates[j], f.bound()) != target) {
        continue;
      }
      auto [a1, b1] = monic_pair(candidates[i], candidates[j]);
      auto [b2, a2] = monic_pair(candidates[j], candidates[i]);
      std::string key1 = sparse_key(a1) + "|" + sparse_key(b1);
      std::string key2 = sparse_key(b2) + "|" + sparse_key(a2);
      if (!seen.insert(std::min(key1, key2)).second) continue;
      found.push_back(verify_factorization(
          f, {densify(candidates[i], f.bound()),
              densify(candidates[j], f.bound())}));
    }
  }
  return found;
}

}  // namespace unitary
