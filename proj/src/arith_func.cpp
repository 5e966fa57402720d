#include "unitary/arith_func.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace unitary {

ArithFunc::ArithFunc(long bound) : bound_(bound) {
  if (bound < 1) throw std::invalid_argument("ArithFunc: bound < 1");
  values_.assign(static_cast<std::size_t>(bound) + 1, Coeff());
}

const Coeff& ArithFunc::operator[](long n) const {
  if (n < 1 || n > bound_) {
    throw std::out_of_range("ArithFunc: index " + std::to_string(n) +
                            " outside [1.." + std::to_string(bound_) + "]");
  }
  return values_[n];
}

void ArithFunc::set(long n, Coeff v) {
  if (n < 1 || n > bound_) {
    throw std::out_of_range("ArithFunc: index outside bound");
  }
  values_[n] = std::move(v);
}

void ArithFunc::add_at(long n, const Coeff& v) {
  if (n < 1 || n > bound_) {
    throw std::out_of_range("ArithFunc: index outside bound");
  }
  values_[n] += v;
}

bool ArithFunc::is_zero() const {
  for (long n = 1; n <= bound_; ++n) {
    if (!values_[n].is_zero()) return false;
  }
  return true;
}

std::vector<long> ArithFunc::support() const {
  std::vector<long> supp;
  for (long n = 1; n <= bound_; ++n) {
    if (!values_[n].is_zero()) supp.push_back(n);
  }
  return supp;
}

ArithFunc ArithFunc::zero(long bound) { return ArithFunc(bound); }

ArithFunc ArithFunc::e(long k, long bound) {
  ArithFunc f(bound);
  if (k < 1 || k > bound) {
    throw std::domain_error("e_k: k outside [1..bound]");
  }
  f.set(k, Coeff(1));
  return f;
}

ArithFunc ArithFunc::one(long bound) {
  ArithFunc f(bound);
  for (long n = 1; n <= bound; ++n) f.set(n, Coeff(1));
  return f;
}

void require_same_bound(const ArithFunc& f, const ArithFunc& g) {
  if (f.bound() != g.bound()) {
    throw std::invalid_argument("bound mismatch: " + std::to_string(f.bound()) +
                                " vs " + std::to_string(g.bound()));
  }
}

ArithFunc add(const ArithFunc& f, const ArithFunc& g) {
  require_same_bound(f, g);
  ArithFunc h(f.bound());
  for (long n = 1; n <= f.bound(); ++n) h.set(n, f[n] + g[n]);
  return h;
}

ArithFunc sub(const ArithFunc& f, const ArithFunc& g) {
  require_same_bound(f, g);
  ArithFunc h(f.bound());
  for (long n = 1; n <= f.bound(); ++n) h.set(n, f[n] - g[n]);
  return h;
}

ArithFunc scale(const Coeff& c, const ArithFunc& f) {
  ArithFunc h(f.bound());
  if (c.is_zero()) return h;
  for (long n = 1; n <= f.bound(); ++n) {
    if (!f[n].is_zero()) h.set(n, c * f[n]);
  }
  return h;
}

ArithFunc uconv(const ArithFunc& f, const ArithFunc& g) {
  require_same_bound(f, g);
  const long N = f.bound();
  ArithFunc h(N);
  for (long r = 1; r <= N; ++r) {
    if (f[r].is_zero()) continue;
    for (long s = 1; s * r <= N; ++s) {
      if (g[s].is_zero() || std::gcd(r, s) != 1) continue;
      h.add_at(r * s, f[r] * g[s]);
    }
  }
  return h;
}

ArithFunc dconv(const ArithFunc& f, const ArithFunc& g) {
  require_same_bound(f, g);
  const long N = f.bound();
  ArithFunc h(N);
  for (long r = 1; r <= N; ++r) {
    if (f[r].is_zero()) continue;
    for (long s = 1; s * r <= N; ++s) {
      if (g[s].is_zero()) continue;
      h.add_at(r * s, f[r] * g[s]);
    }
  }
  return h;
}

ArithFunc upow(const ArithFunc& f, long n) {
  if (n < 0) throw std::domain_error("upow: negative exponent");
  ArithFunc acc = ArithFunc::e(1, f.bound());
  for (long i = 0; i < n; ++i) acc = uconv(acc, f);
  return acc;
}

std::optional<long> order(const ArithFunc& f) {
  for (long n = 1; n <= f.bound(); ++n) {
    if (!f[n].is_zero()) return n;
  }
  return std::nullopt;
}

mpq_class norm(const ArithFunc& f) {
  auto k = order(f);
  if (!k) return mpq_class(0);
  mpq_class q(1, *k);
  q.canonicalize();
  return q;
}

std::optional<long> degree(const ArithFunc& f, const Sieve& sieve) {
  std::optional<long> deg;
  for (long n = 1; n <= f.bound(); ++n) {
    if (f[n].is_zero()) continue;
    long w = sieve.omega(n);
    if (!deg || w < *deg) deg = w;
    if (*deg == 0) break;
  }
  return deg;
}

bool is_unit(const ArithFunc& f) { return !f[1].is_zero(); }

ArithFunc inverse(const ArithFunc& f, const Sieve& sieve) {
  if (!is_unit(f)) throw std::domain_error("inverse: f(1) = 0 is not a unit");
  const long N = f.bound();
  ArithFunc g(N);
  Coeff lead_inv = f[1].inverse();
  g.set(1, lead_inv);
  for (long n = 2; n <= N; ++n) {
    Coeff acc;
    for (long d : sieve.unitary_divisors(n)) {
      if (d == 1 || f[d].is_zero()) continue;
      acc += f[d] * g[n / d];
    }
    if (!acc.is_zero()) g.set(n, -lead_inv * acc);
  }
  return g;
}

ArithFunc geometric_inverse(const ArithFunc& f) {
  if (!is_unit(f)) {
    throw std::domain_error("geometric_inverse: f(1) = 0 is not a unit");
  }
  const long N = f.bound();
  Coeff lead_inv = f[1].inverse();
  ArithFunc g = sub(ArithFunc::e(1, N), scale(lead_inv, f));  // order >= 2
  ArithFunc sum = ArithFunc::e(1, N);
  ArithFunc power = ArithFunc::e(1, N);
  while (true) {
    power = uconv(power, g);
    if (power.is_zero()) break;
    sum = add(sum, power);
  }
  return scale(lead_inv, sum);
}

ArithFunc mobius_star(long bound, const Sieve& sieve) {
  ArithFunc f(bound);
  for (long n = 1; n <= bound; ++n) {
    f.set(n, Coeff(sieve.omega(n) % 2 == 0 ? 1 : -1));
  }
  return f;
}

ArithFunc multiplicative_from(const std::map<std::pair<long, long>, Coeff>& table,
                              long bound, const Sieve& sieve) {
  ArithFunc f(bound);
  f.set(1, Coeff(1));
  for (long n = 2; n <= bound; ++n) {
    Coeff v(1);
    bool zero = false;
    for (const auto& [p, a] : sieve.factor(n).pairs()) {
      auto it = table.find({sieve.prime_index(p), a});
      if (it == table.end() || it->second.is_zero()) {
        zero = true;
        break;
      }
      v *= it->second;
    }
    if (!zero) f.set(n, std::move(v));
  }
  return f;
}

bool is_multiplicative(const ArithFunc& f) {
  const long N = f.bound();
  for (long n = 1; n <= N; ++n) {
    for (long m = n; n * m <= N; ++m) {
      if (std::gcd(n, m) != 1) continue;
      if (!(f[n * m] == f[n] * f[m])) return false;
    }
  }
  return true;
}

}  // namespace unitary
