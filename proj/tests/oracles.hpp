#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's elimination code.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "stabclass/group.hpp"
#include "stabclass/linalg.hpp"

namespace oracle {

using stabclass::Element;
using stabclass::FiniteGroup;
using stabclass::Integer;

/// Size of the closure of a set of permutations (0-based images), by BFS.
inline std::size_t permutation_closure_size(const std::vector<std::vector<int>>& gens) {
  const std::size_t n = gens.front().size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        std::vector<int> q(n);
        for (std::size_t i = 0; i < n; ++i) q[i] = g[p[i]];
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

/// All index-2 subgroups, found by trying every subset of half size.
inline std::vector<std::vector<Element>> index_two_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<Element>> out;
  const std::size_t n = g.order();
  if (n % 2 != 0) return out;
  std::vector<Element> rest;
  for (Element x = 1; x < n; ++x) rest.push_back(x);
  std::vector<bool> pick(rest.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n / 2 - 1), true);
  do {
    std::vector<Element> h{0};
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (pick[i]) h.push_back(rest[i]);
    std::set<Element> hs(h.begin(), h.end());
    bool closed = true;
    for (Element a : h)
      for (Element b : h) closed = closed && hs.count(g.mul(a, b));
    if (closed) {
      std::sort(h.begin(), h.end());
      out.push_back(h);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Determinantal divisors: gcd of all k x k minors, for small dense matrices.
inline Integer det(std::vector<std::vector<Integer>> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline std::vector<Integer> invariant_factors_by_minors(const std::vector<std::vector<Integer>>& a) {
  const std::size_t r = a.size(), c = r ? a[0].size() : 0;
  std::vector<Integer> divisors{1};
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    Integer g = 0;
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::vector<Integer>> sub;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          std::vector<Integer> row;
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) row.push_back(a[i][j]);
          sub.push_back(row);
        }
        Integer d = det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

inline std::vector<std::vector<Integer>> dense(const stabclass::IntMatrix& m) {
  std::vector<std::vector<Integer>> d(m.rows(), std::vector<Integer>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& e : m.row(i)) d[i][e.col] = e.value;
  return d;
}

inline stabclass::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound, double density) {
  stabclass::IntMatrix m(r, c);
  std::uniform_int_distribution<int> val(-bound, bound);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) m.set(i, j, val(rng));
  return m;
}

/// Product of random elementary integer row operations applied to the identity.
inline stabclass::IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, std::size_t steps) {
  std::vector<std::vector<Integer>> u(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  if (n > 1) {
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> mult(-3, 3);
    for (std::size_t s = 0; s < steps; ++s) {
      const std::size_t i = idx(rng), j = idx(rng);
      if (i == j) {
        for (auto& x : u[i]) x = -x;
        continue;
      }
      const int k = mult(rng);
      for (std::size_t t = 0; t < n; ++t) u[i][t] += k * u[j][t];
    }
  }
  stabclass::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (u[i][j] != 0) m.set(i, j, u[i][j]);
  return m;
}

/// Commutator subgroup by closure of all commutators.
inline std::vector<Element> commutator_subgroup(const FiniteGroup& g) {
  std::set<Element> h{0};
  std::vector<Element> frontier{0};
  std::set<Element> comms;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) comms.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (Element c : comms) {
        const Element y = g.mul(x, c);
        if (h.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {h.begin(), h.end()};
}

/// Invariant factors of the abelianization, from the multiset of element
/// orders of the quotient (an abelian group is determined by it).
inline stabclass::AbelianGroup abelianization(const FiniteGroup& g) {
  const auto h = commutator_subgroup(g);
  std::set<Element> hs(h.begin(), h.end());
  // Coset representatives.
  std::vector<Element> rep(g.order(), 0);
  std::vector<Element> reps;
  std::vector<bool> done(g.order(), false);
  for (Element x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    reps.push_back(x);
    for (Element k : h) {
      done[g.mul(x, k)] = true;
      rep[g.mul(x, k)] = x;
    }
  }
  // For each prime power count elements of order dividing it and recover
  // cyclic factors by brute force over candidate decompositions: here we use
  // that for each p, the number of elements killed by p^j determines the
  // partition.
  auto order_in_quotient = [&](Element x) {
    std::size_t n = 1;
    Element y = x;
    while (!hs.count(y)) {
      y = g.mul(y, x);
      ++n;
    }
    return n;
  };
  std::vector<Integer> cyclic;
  std::size_t m = reps.size();
  for (std::size_t p = 2; p <= m; ++p) {
    bool prime = true;
    for (std::size_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (!prime || m % p != 0) continue;
    // c_j = log_p |{x : x^{p^j} = 1}|; the number of factors of order >= p^j is c_j - c_{j-1}.
    std::vector<std::size_t> c{0};
    std::size_t pj = 1;
    while (true) {
      pj *= p;
      std::size_t count = 0;
      for (Element x : reps)
        if (pj % order_in_quotient(x) == 0) ++count;
      std::size_t e = 0;
      while (count > 1) {
        count /= p;
        ++e;
      }
      if (e == c.back()) break;
      c.push_back(e);
    }
    for (std::size_t j = 1; j < c.size(); ++j) {
      const std::size_t at_least_j = c[j] - c[j - 1];
      const std::size_t at_least_next = j + 1 < c.size() ? c[j + 1] - c[j] : 0;
      Integer pw = 1;
      for (std::size_t t = 0; t < j; ++t) pw *= static_cast<long>(p);
      for (std::size_t t = 0; t < at_least_j - at_least_next; ++t) cyclic.push_back(pw);
    }
  }
  return stabclass::AbelianGroup::from_cyclic_orders(cyclic);
}

}  // namespace oracle
