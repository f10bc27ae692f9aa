#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simis/errors.hpp"
#include "simis/vertex_set.hpp"

namespace simis {

using Exponent = std::uint32_t;

/// A monomial x1^e1 ... xn^en in a ring with a fixed, ordered set of n
/// variables. The all-zero exponent vector is the unit monomial 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  /// The squarefree monomial whose support is `vars`.
  static Monomial squarefree(std::size_t n, VertexMask vars) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.exps_[i] = (vars >> i) & 1U;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  VertexMask support() const {
    VertexMask m = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] != 0) m |= VertexMask{1} << i;
    }
    return m;
  }

  /// Sum of the exponents of the variables in `vars`.
  std::uint64_t degree_in(VertexMask vars) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if ((vars >> i) & 1U) d += exps_[i];
    }
    return d;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic on exponent vectors.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<Exponent> exps_;
};

namespace detail {

inline void check_same_size(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": variable counts differ (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

inline Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) throw OverflowError("monomial exponent overflow");
  return a + b;
}

}  // namespace detail

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  detail::check_same_size(a.size(), b.size(), "multiply");
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::checked_add(a[i], b[i]);
  return Monomial(std::move(e));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  detail::check_same_size(a.size(), b.size(), "lcm");
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

/// Renders e.g. "x2^2*x3" (or "1").
inline std::string to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

class MonomialIdeal;
MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n);

/// A monomial ideal held by its minimal generating set, sorted
/// lexicographically so that equal ideals compare equal member-wise.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial(n)}); }

  std::size_t num_vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n);
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Reduces `gens` to its divisibility antichain.
inline MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n) {
  for (const auto& g : gens) detail::check_same_size(g.size(), n, "minimalize");

  // Any divisor of g has degree <= deg g, so scanning by degree means each
  // candidate only needs checking against what has already been kept.
  std::vector<std::pair<std::uint64_t, Monomial>> by_degree;
  by_degree.reserve(gens.size());
  for (auto& g : gens) {
    auto d = g.degree();
    by_degree.emplace_back(d, std::move(g));
  }
  std::sort(by_degree.begin(), by_degree.end());
  by_degree.erase(std::unique(by_degree.begin(), by_degree.end()), by_degree.end());

  std::vector<Monomial> kept;
  for (auto& [d, g] : by_degree) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(n, std::move(kept));
}

inline MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::check_same_size(a.num_vars(), b.num_vars(), "multiply");
  std::vector<Monomial> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) prods.push_back(g * h);
  }
  return minimalize(std::move(prods), a.num_vars());
}

inline MonomialIdeal power(const MonomialIdeal& ideal, unsigned k) {
  if (k == 0) throw ArgumentError("power: exponent must be at least 1");
  MonomialIdeal result = ideal;
  for (unsigned i = 1; i < k; ++i) result = multiply(result, ideal);
  return result;
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::check_same_size(a.num_vars(), b.num_vars(), "intersect");
  std::vector<Monomial> lcms;
  lcms.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) lcms.push_back(lcm(g, h));
  }
  return minimalize(std::move(lcms), a.num_vars());
}

inline bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  detail::check_same_size(ideal.num_vars(), m.size(), "contains_monomial");
  const auto& gens = ideal.generators();
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

inline bool ideals_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::check_same_size(a.num_vars(), b.num_vars(), "ideals_equal");
  return a == b;
}

/// The support of a monomial prime ideal: the variables generating it.
class PrimeSupport {
 public:
  PrimeSupport(VertexMask vars, std::size_t n) : vars_(vars) {
    if (vars == 0) throw ArgumentError("prime support must be nonempty");
    if ((vars & ~full_mask(n)) != 0) throw ArgumentError("prime support exceeds ambient variables");
  }

  VertexMask mask() const { return vars_; }
  std::vector<int> variables() const { return labels_of(vars_); }
  std::size_t size() const { return static_cast<std::size_t>(popcount(vars_)); }

  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
  friend auto operator<=>(const PrimeSupport&, const PrimeSupport&) = default;

 private:
  VertexMask vars_;
};

/// Minimal primes of a squarefree monomial ideal, i.e. the inclusion-minimal
/// variable sets meeting every generator's support. Sorted by mask.
inline std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw ArgumentError("minimal_primes: ideal must be neither zero nor unit");
  }
  if (!ideal.is_squarefree()) throw ArgumentError("minimal_primes: ideal must be squarefree");
  const std::size_t n = ideal.num_vars();
  if (n > 24) throw ResourceError("minimal_primes: brute force limited to 24 variables");

  std::vector<VertexMask> supports;
  VertexMask universe = 0;
  for (const auto& g : ideal.generators()) {
    supports.push_back(g.support());
    universe |= g.support();
  }

  // Visit subsets of the used variables in order of size so that any cover
  // containing an earlier-found cover can be dropped immediately.
  std::vector<VertexMask> candidates;
  for (VertexMask s = universe;; s = (s - 1) & universe) {
    candidates.push_back(s);
    if (s == 0) break;
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](VertexMask a, VertexMask b) { return popcount(a) < popcount(b); });

  std::vector<VertexMask> covers;
  for (VertexMask s : candidates) {
    bool hits_all = std::all_of(supports.begin(), supports.end(), [s](VertexMask e) { return (e & s) != 0; });
    if (!hits_all) continue;
    bool contains_smaller =
        std::any_of(covers.begin(), covers.end(), [s](VertexMask c) { return (c & s) == c; });
    if (!contains_smaller) covers.push_back(s);
  }
  std::sort(covers.begin(), covers.end());
  std::vector<PrimeSupport> out;
  for (VertexMask c : covers) out.emplace_back(c, n);
  return out;
}

/// m lies in (x_i : i in A)^k iff the exponents of m on A sum to at least k.
inline bool prime_power_contains(const PrimeSupport& prime, unsigned k, const Monomial& m) {
  if ((prime.mask() & ~full_mask(m.size())) != 0) {
    throw DimensionError("prime_power_contains: prime support exceeds monomial length");
  }
  return m.degree_in(prime.mask()) >= k;
}

/// Generators of (x_i : i in A)^k: every degree-k monomial in the variables of A.
inline MonomialIdeal prime_power(const PrimeSupport& prime, unsigned k, std::size_t n) {
  std::vector<int> vars;
  for (int label : prime.variables()) vars.push_back(label - 1);
  std::vector<Monomial> gens;
  std::vector<Exponent> exps(n, 0);
  // Distribute k among vars[idx..] recursively.
  auto place = [&](auto&& self, std::size_t idx, unsigned left) -> void {
    if (idx + 1 == vars.size()) {
      exps[vars[idx]] = left;
      gens.emplace_back(exps);
      exps[vars[idx]] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[vars[idx]] = e;
      self(self, idx + 1, left - e);
    }
    exps[vars[idx]] = 0;
  };
  place(place, 0, k);
  return minimalize(std::move(gens), n);
}

/// k-th symbolic power of a squarefree ideal: the intersection of the k-th
/// powers of its minimal primes.
inline MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned k) {
  if (k == 0) throw ArgumentError("symbolic_power: exponent must be at least 1");
  auto primes = minimal_primes(ideal);
  // Small primes first keeps the intermediate generating sets small.
  std::stable_sort(primes.begin(), primes.end(),
                   [](const PrimeSupport& a, const PrimeSupport& b) { return a.size() < b.size(); });
  const std::size_t n = ideal.num_vars();
  MonomialIdeal result = prime_power(primes.front(), k, n);
  for (std::size_t i = 1; i < primes.size(); ++i) result = intersect(result, prime_power(primes[i], k, n));
  return result;
}

struct SimisReport {
  unsigned k = 1;
  bool equal = true;
  std::optional<Monomial> witness;  // a generator of I^(k) outside I^k
};

/// Decides I^(k) == I^k. The zero and unit ideals are reported equal.
inline SimisReport is_simis(const MonomialIdeal& ideal, unsigned k) {
  if (k == 0) throw ArgumentError("is_simis: exponent must be at least 1");
  if (!ideal.is_squarefree()) throw ArgumentError("is_simis: ideal must be squarefree");
  SimisReport report{k, true, std::nullopt};
  if (ideal.is_zero() || ideal.is_unit()) return report;

  const auto ordinary = power(ideal, k);
  const auto symbolic = symbolic_power(ideal, k);
  for (const auto& g : ordinary.generators()) {
    if (!contains_monomial(symbolic, g)) {
      throw std::logic_error("is_simis: ordinary power not contained in symbolic power");
    }
  }
  if (ordinary == symbolic) return report;

  report.equal = false;
  // Generators are sorted, so the first miss is the lexicographically smallest.
  for (const auto& g : symbolic.generators()) {
    if (!contains_monomial(ordinary, g)) {
      report.witness = g;
      break;
    }
  }
  return report;
}

}  // namespace simis
