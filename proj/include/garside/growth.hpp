#pragma once

// Growth with respect to the Garside generators: the left-weighted normal
// form automaton, exact ball counts, spectral growth rates, breadth-first
// oracles and the free-product lower-bound recurrence.

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "detail/budget.hpp"
#include "detail/parallel.hpp"
#include "parabolic.hpp"

namespace garside {

using BigInt = boost::multiprecision::cpp_int;

/// States are the proper simples sorted by (length, spelling); s -> t iff s.t is left-weighted.
struct NormalFormAutomaton {
  std::vector<Simple> states;
  std::vector<std::vector<int>> next;

  std::size_t state_count() const { return states.size(); }

  /// c_0..c_n: number of accepted state sequences of each length (c_0 = 1).
  std::vector<BigInt> sequence_counts(int n) const {
    std::vector<BigInt> c{1};
    std::vector<BigInt> v(states.size(), 1);
    for (int r = 1; r <= n; ++r) {
      BigInt total = 0;
      for (const auto& x : v) total += x;
      c.push_back(total);
      if (r == n) break;
      std::vector<BigInt> w(states.size(), 0);
      for (std::size_t s = 0; s < states.size(); ++s)
        for (int t : next[s]) w[t] += v[s];
      v = std::move(w);
    }
    return c;
  }
};

inline NormalFormAutomaton build_automaton(const Garside& g) {
  NormalFormAutomaton a;
  std::vector<Simple> simples = g.proper_simples(detail::budget(2'000'000));
  std::vector<std::pair<std::pair<int, std::vector<int>>, std::size_t>> keys(simples.size());
  detail::parallel_for(simples.size(), [&](std::size_t i) { keys[i] = {{simples[i].length(), g.spell(simples[i])}, i}; });
  std::sort(keys.begin(), keys.end());
  for (const auto& k : keys) a.states.push_back(simples[k.second]);
  a.next.resize(a.states.size());
  detail::parallel_for(a.states.size(), [&](std::size_t s) {
    for (std::size_t t = 0; t < a.states.size(); ++t)
      if (g.is_left_weighted(a.states[s], a.states[t])) a.next[s].push_back(static_cast<int>(t));
  });
  return a;
}

/// beta+(n) = sum_{r <= n} (n - r + 1) c_r: positive elements of Garside length <= n.
inline BigInt monoid_ball(const std::vector<BigInt>& c, int n) {
  BigInt total = 0;
  for (int r = 0; r <= n && r < static_cast<int>(c.size()); ++r) total += BigInt(n - r + 1) * c[r];
  return total;
}

/// beta(n) = sum_{r <= n} (2n - r + 1) c_r: shapes (k, r) with
/// max(k + r, 0) - min(k, 0) <= n.
inline BigInt group_ball(const std::vector<BigInt>& c, int n) {
  BigInt total = 0;
  for (int r = 0; r <= n && r < static_cast<int>(c.size()); ++r) total += BigInt(2 * n - r + 1) * c[r];
  return total;
}

inline BigInt count_monoid_ball(const NormalFormAutomaton& a, int n) { return monoid_ball(a.sequence_counts(n), n); }
inline BigInt count_group_ball(const NormalFormAutomaton& a, int n) { return group_ball(a.sequence_counts(n), n); }

struct SpectralEstimate {
  double rate = 1.0;
  double lower = 1.0;
  double upper = 1.0;
  long iterations = 0;
  bool converged = true;
};

/// Spectral radius of the transition matrix: shifted power iteration on each
/// strongly connected component with Collatz-Wielandt bounds; 1 for an empty
/// automaton.
inline SpectralEstimate spectral_radius(const NormalFormAutomaton& a, double tol = 1e-12, long cap = 100000) {
  const int n = static_cast<int>(a.state_count());
  SpectralEstimate best;
  if (n == 0) return best;
  best = {0.0, 0.0, 0.0, 0, true};

  // Tarjan's algorithm, iterative.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int counter = 0, ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < a.next[v].size()) {
        const int w = a.next[v][pos++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        while (true) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
      const int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }

  std::vector<std::vector<int>> members(ncomp);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);
  std::vector<int> local(n, -1);
  for (const auto& mem : members) {
    for (std::size_t i = 0; i < mem.size(); ++i) local[mem[i]] = static_cast<int>(i);
    const int c = comp[mem[0]];
    bool has_edge = false;
    for (int v : mem)
      for (int w : a.next[v]) has_edge = has_edge || comp[w] == c;
    if (!has_edge) continue;  // trivial component, radius 0
    const std::size_t m = mem.size();
    std::vector<double> x(m, 1.0), y(m);
    SpectralEstimate est{0, 0, 0, 0, false};
    for (long it = 1; it <= cap; ++it) {
      // y = (M + I) x, restricted to the component
      for (std::size_t i = 0; i < m; ++i) y[i] = x[i];
      for (std::size_t i = 0; i < m; ++i)
        for (int w : a.next[mem[i]])
          if (comp[w] == c) y[local[w]] += x[i];
      double lo = INFINITY, hi = 0, mx = 0;
      for (std::size_t i = 0; i < m; ++i) {
        lo = std::min(lo, y[i] / x[i]);
        hi = std::max(hi, y[i] / x[i]);
        mx = std::max(mx, y[i]);
      }
      est.iterations = it;
      est.lower = lo - 1.0;
      est.upper = hi - 1.0;
      for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / mx;
      if (hi - lo <= tol * hi) {
        est.converged = true;
        break;
      }
    }
    est.rate = 0.5 * (est.lower + est.upper);
    if (est.rate > best.rate) best = est;
  }
  return best;
}

inline double growth_rate(const Garside& g) { return spectral_radius(build_automaton(g)).rate; }

enum class GrowthMode { monoid, group };

struct GrowthReport {
  std::string system;
  int horizon = 0;
  GrowthMode mode = GrowthMode::monoid;
  std::vector<BigInt> beta_plus;
  std::vector<BigInt> beta;
  SpectralEstimate rate;
  /// beta(n)/beta(n-1) (or beta+ in monoid mode) at the horizon.
  double last_ratio = 0;
};

inline double big_ratio(const BigInt& a, const BigInt& b) {
  return b == 0 ? 0.0 : a.convert_to<double>() / b.convert_to<double>();
}

inline GrowthReport growth_report(const Garside& g, int horizon, GrowthMode mode) {
  if (horizon < 0) throw Error("bad_horizon", "horizon must be >= 0");
  const NormalFormAutomaton a = build_automaton(g);
  const std::vector<BigInt> c = a.sequence_counts(horizon);
  GrowthReport rep;
  rep.system = g.system().name();
  rep.horizon = horizon;
  rep.mode = mode;
  for (int n = 0; n <= horizon; ++n) {
    rep.beta_plus.push_back(monoid_ball(c, n));
    rep.beta.push_back(group_ball(c, n));
  }
  rep.rate = spectral_radius(a);
  const auto& seq = mode == GrowthMode::monoid ? rep.beta_plus : rep.beta;
  if (horizon >= 1) rep.last_ratio = big_ratio(seq[horizon], seq[horizon - 1]);
  return rep;
}

enum class GeneratorSet { atoms, garside };

/// Ball sizes |{g : |g| <= n}| for n = 0..horizon by breadth-first search
/// over canonical forms.
inline std::vector<BigInt> bfs_oracle(const Garside& g, GeneratorSet gens, GrowthMode mode, int horizon,
                                      std::size_t budget = detail::budget(3'000'000)) {
  if (horizon > 5) throw Error("budget_exceeded", "breadth-first oracle supports n <= 5");
  std::vector<GroupElement> step;
  if (gens == GeneratorSet::atoms) {
    for (int a : g.atoms().atoms()) step.push_back(g.atom(a));
  } else {
    std::vector<Simple> simples = g.proper_simples(budget);
    if (simples.size() + 2 > 200) throw Error("budget_exceeded", "breadth-first oracle needs |W| <= 200");
    for (const auto& s : simples) step.push_back(g.from_simple(s));
    step.push_back(g.delta());
  }
  if (mode == GrowthMode::group) {
    const std::size_t n = step.size();
    for (std::size_t i = 0; i < n; ++i) step.push_back(g.inverse(step[i]));
  }
  std::unordered_set<GroupElement, GroupElementHash> seen{g.identity()};
  std::vector<GroupElement> frontier{g.identity()};
  std::vector<BigInt> out{1};
  for (int r = 1; r <= horizon; ++r) {
    std::vector<std::vector<GroupElement>> produced(frontier.size());
    detail::parallel_for(frontier.size(), [&](std::size_t i) {
      for (const auto& s : step) produced[i].push_back(g.multiply(frontier[i], s));
    });
    std::vector<GroupElement> next;
    for (auto& batch : produced)
      for (auto& h : batch)
        if (seen.insert(h).second) {
          if (seen.size() > budget) throw Error("budget_exceeded", "breadth-first oracle exceeds its budget");
          next.push_back(std::move(h));
        }
    out.push_back(out.back() + next.size());
    frontier = std::move(next);
  }
  return out;
}

struct ParabolicComparison {
  double rate_x = 1;
  double rate_a = 1;
  bool strict = false;
};

/// Growth rate of A_X (through its own automaton; the Garside generators of
/// A_X embed isometrically) against that of A.
inline ParabolicComparison compare_parabolic(const Garside& g, AtomSet x) {
  g.system().check_atoms(x);
  if (x == g.atoms()) throw Error("not_proper", "X must be a proper subset of the atoms");
  ParabolicComparison out;
  out.rate_x = growth_rate(Garside(g.system_ptr(), x));
  out.rate_a = growth_rate(g);
  out.strict = out.rate_x < out.rate_a - 1e-9;
  return out;
}

struct FreeProductBound {
  double alpha = 1;
  int k = 1;
  double gamma = 0.5;
  double bound = 2;
  double residual = 0;
};

/// gamma: the positive root of 1 - alpha x - x^k; bound = 1/gamma.
inline FreeProductBound free_product_bound(double alpha, int k) {
  if (!(alpha >= 1)) throw Error("bad_alpha", "alpha must be >= 1");
  if (k < 1) throw Error("bad_k", "k must be >= 1");
  FreeProductBound out{alpha, k, 0, 0, 0};
  auto f = [&](double x) { return 1 - alpha * x - std::pow(x, k); };
  if (k == 1) {
    out.gamma = 1 / (alpha + 1);
    out.bound = alpha + 1;
  } else {
    double lo = 0, hi = 1 / alpha;  // f(lo) > 0 > f(hi)
    while (hi - lo > 1e-12 * 1e-3) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (f(mid) > 0 ? lo : hi) = mid;
    }
    out.gamma = 0.5 * (lo + hi);
    out.bound = 1 / out.gamma;
  }
  out.residual = std::abs(f(out.gamma));
  return out;
}

/// alpha_1 = 1, alpha_{i+1} = 1/gamma_i.
inline std::vector<double> diverging_sequence(int k, int steps) {
  if (steps < 1) throw Error("bad_steps", "steps must be >= 1");
  std::vector<double> out{1.0};
  while (static_cast<int>(out.size()) < steps) out.push_back(free_product_bound(out.back(), k).bound);
  return out;
}

}  // namespace garside
