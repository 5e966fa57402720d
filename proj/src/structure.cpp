#include "unitary/structure.hpp"

#include <numeric>
#include <stdexcept>

#include "unitary/linalg.hpp"

namespace unitary {

ArithFunc CanonicalDecomposition::recompose() const {
  ArithFunc f(bound);
  f.set(1, constant_term);
  for (const auto& [i, part] : parts) {
    f = add(f, part);
  }
  return f;
}

CanonicalDecomposition canonical_decompose(const ArithFunc& f,
                                           const Sieve& sieve) {
  CanonicalDecomposition dec{f.bound(), f[1], {}};
  for (long n = 2; n <= f.bound(); ++n) {
    if (f[n].is_zero()) continue;
    long i = sieve.class_index(n);
    auto [it, inserted] = dec.parts.try_emplace(i, ArithFunc(f.bound()));
    it->second.set(n, f[n]);
  }
  return dec;
}

long filtration_degree(const ArithFunc& f, const Sieve& sieve) {
  long deg = 0;
  for (long n = 2; n <= f.bound(); ++n) {
    if (!f[n].is_zero()) deg = std::max(deg, sieve.class_index(n));
  }
  return deg;
}

bool has_support_above_class(const ArithFunc& f, long k, const Sieve& sieve) {
  for (long n = 2; n <= f.bound(); ++n) {
    if (!f[n].is_zero() && sieve.class_index(n) > k) return true;
  }
  return false;
}

namespace {

long primorial_checked(long k, long bound, const Sieve& sieve) {
  long prod = 1;
  for (long i = 1; i <= k; ++i) {
    long p = sieve.nth_prime(i);
    if (prod > bound / p) return bound + 1;  // overflow-safe "too big"
    prod *= p;
  }
  return prod;
}

}  // namespace

bool in_Ik(const ArithFunc& f, long k, const Sieve& sieve) {
  if (k < 0) throw std::domain_error("in_Ik: k < 0");
  // n is coprime to p_1...p_k exactly when n = 1 or lp(n) > p_k.
  for (long n = 1; n <= f.bound(); ++n) {
    if (f[n].is_zero()) continue;
    if (n == 1 || sieve.class_index(n) > k) return false;
  }
  return true;
}

bool annihilates_squarefree_block(const ArithFunc& f, long K,
                                  const Sieve& sieve) {
  if (K < 1) throw std::domain_error("annihilates_squarefree_block: K < 1");
  long prod = primorial_checked(K, f.bound(), sieve);
  if (prod > f.bound()) {
    throw std::domain_error(
        "annihilates_squarefree_block: p_1...p_K exceeds the bound");
  }
  return uconv(f, ArithFunc::e(prod, f.bound())).is_zero();
}

std::optional<long> nilpotency_index(const ArithFunc& f, long max_n) {
  ArithFunc power = ArithFunc::e(1, f.bound());
  for (long n = 1; n <= max_n; ++n) {
    power = uconv(power, f);
    if (power.is_zero()) return n;
  }
  return std::nullopt;
}

ArithFunc retract_sqf(const ArithFunc& f, const Sieve& sieve) {
  ArithFunc g(f.bound());
  for (long n = 1; n <= f.bound(); ++n) {
    if (!f[n].is_zero() && sieve.is_squarefree(n)) g.set(n, f[n]);
  }
  return g;
}

ArithFunc retract_Q(const ArithFunc& f,
                    const std::function<bool(long)>& exponent_allowed,
                    const Sieve& sieve) {
  ArithFunc g(f.bound());
  for (long n = 1; n <= f.bound(); ++n) {
    if (f[n].is_zero()) continue;
    bool keep = true;
    for (const auto& [p, a] : sieve.factor(n).pairs()) {
      if (!exponent_allowed(a)) {
        keep = false;
        break;
      }
    }
    if (keep) g.set(n, f[n]);
  }
  return g;
}

ArithFunc retract_Q(const ArithFunc& f, const std::set<long>& Q,
                    const Sieve& sieve) {
  return retract_Q(
      f, [&Q](long a) { return Q.count(a) > 0; }, sieve);
}

GammaTable::GammaTable(std::map<std::pair<long, long>, ArithFunc> images,
                       long bound)
    : bound_(bound), images_(std::move(images)) {
  for (const auto& [key, img] : images_) {
    if (key.first < 1 || key.second < 1) {
      throw std::invalid_argument("GammaTable: indices must be >= 1");
    }
    if (img.bound() != bound_) {
      throw std::invalid_argument("GammaTable: image bound mismatch");
    }
  }
  // Kernel condition: images in the same column annihilate each other,
  // including each image squared.
  for (auto it = images_.begin(); it != images_.end(); ++it) {
    for (auto jt = it; jt != images_.end(); ++jt) {
      if (jt->first.first != it->first.first) break;
      if (!uconv(it->second, jt->second).is_zero()) {
        throw std::invalid_argument(
            "GammaTable: kernel condition violated in column " +
            std::to_string(it->first.first));
      }
    }
  }
}

const ArithFunc* GammaTable::find(long i, long j) const {
  auto it = images_.find({i, j});
  return it == images_.end() ? nullptr : &it->second;
}

ArithFunc apply_endomorphism(const ArithFunc& f, const GammaTable& table,
                             const Sieve& sieve) {
  if (f.bound() != table.bound()) {
    throw std::invalid_argument("apply_endomorphism: bound mismatch");
  }
  const long N = f.bound();
  ArithFunc result(N);
  result.set(1, f[1]);  // theta(e_1) = e_1, extended linearly
  for (long k = 2; k <= N; ++k) {
    if (f[k].is_zero()) continue;
    ArithFunc image = ArithFunc::e(1, N);
    bool zero = false;
    for (const auto& [p, a] : sieve.factor(k).pairs()) {
      const ArithFunc* gamma = table.find(sieve.prime_index(p), a);
      if (gamma == nullptr) {
        zero = true;
        break;
      }
      image = uconv(image, *gamma);
      if (image.is_zero()) {
        zero = true;
        break;
      }
    }
    if (!zero) result = add(result, scale(f[k], image));
  }
  return result;
}

BasisFamily echelon_basis(const std::vector<ArithFunc>& generators) {
  BasisFamily family;
  if (generators.empty()) return family;
  const long N = generators.front().bound();
  for (const auto& g : generators) require_same_bound(generators.front(), g);

  for (const auto& g : generators) {
    ArithFunc residue = g;
    // Reduce against existing entries, then insert the normalized
    // residue and back-eliminate its order from the others.
    while (true) {
      auto k = order(residue);
      if (!k) break;
      auto it = family.entries.find(*k);
      if (it == family.entries.end()) {
        residue = scale(residue[*k].inverse(), residue);
        for (auto& [ord, entry] : family.entries) {
          if (!entry[*k].is_zero()) {
            entry = sub(entry, scale(entry[*k], residue));
          }
        }
        family.entries.emplace(*k, std::move(residue));
        break;
      }
      residue = sub(residue, scale(residue[*k], it->second));
    }
  }
  return family;
}

ExpressResult express_in_basis(const ArithFunc& f, const BasisFamily& basis) {
  ExpressResult res{{}, f, false};
  while (true) {
    auto k = order(res.residue);
    if (!k) {
      res.exact = true;
      return res;
    }
    auto it = basis.entries.find(*k);
    if (it == basis.entries.end()) return res;  // nonzero residue
    Coeff a = res.residue[*k];
    res.terms.emplace_back(*k, a);
    res.residue = sub(res.residue, scale(a, it->second));
  }
}

std::vector<ArithFunc> regularity_kernel(const ArithFunc& f, long M) {
  const long N = f.bound();
  if (M < 1 || M > N) throw std::domain_error("regularity_kernel: bad M");
  // Row n: sum over unitary divisors d <= M of n of f(n/d) * g(d) = 0.
  std::vector<std::vector<Coeff>> rows;
  for (long n = 1; n <= N; ++n) {
    std::vector<Coeff> row(M, Coeff());
    bool nonzero = false;
    for (long d = 1; d <= M && d <= n; ++d) {
      if (n % d != 0) continue;
      long q = n / d;
      if (std::gcd(d, q) != 1 || f[q].is_zero()) continue;
      row[d - 1] = f[q];
      nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  std::vector<ArithFunc> basis;
  for (const auto& vec : kernel_basis(rows, static_cast<std::size_t>(M))) {
    ArithFunc g(N);
    for (long d = 1; d <= M; ++d) g.set(d, vec[d - 1]);
    basis.push_back(std::move(g));
  }
  return basis;
}

NfgTranscript demo_not_finitely_generated(long L, long generator_cap,
                                          const Sieve& sieve) {
  if (!sieve.is_prime(L)) {
    throw std::domain_error("demo_not_finitely_generated: L is not prime");
  }
  if (generator_cap >= L) {
    throw std::domain_error("demo_not_finitely_generated: cap must be < L");
  }
  NfgTranscript t{L, generator_cap, {}, true};
  t.lines.push_back("goal: e_" + std::to_string(L) +
                    " as a combination of e_2..e_" +
                    std::to_string(generator_cap));
  for (long k = 2; k <= generator_cap; ++k) {
    std::string line = "k=" + std::to_string(k) + ": ";
    if (L % k != 0) {
      line += std::to_string(L) + " is not a multiple of " + std::to_string(k);
    } else {
      // Unreachable for prime L > cap, but checked rather than assumed.
      long i = L / k;
      if (std::gcd(i, k) == 1) {
        line += "decomposition " + std::to_string(i) + "*" + std::to_string(k) +
                " exists";
        t.all_candidates_fail = false;
      } else {
        line += "only " + std::to_string(i) + "*" + std::to_string(k) +
                ", which shares a prime";
      }
    }
    t.lines.push_back(std::move(line));
  }
  t.lines.push_back(t.all_candidates_fail
                        ? "every candidate fails; e_" + std::to_string(L) +
                              " is outside (e_2..e_" +
                              std::to_string(generator_cap) + ")"
                        : "a decomposition was found");
  return t;
}

}  // namespace unitary
