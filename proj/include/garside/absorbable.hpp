#pragma once

// Absorbable elements: certificates, the constructive decompositions of
// Delta powers, parabolic elements and positive conjugators, and exact
// classifiers for the rank-two systems.

#include <optional>
#include <string>
#include <vector>

#include "detail/budget.hpp"
#include "parabolic.hpp"

namespace garside {

/// x absorbs y: inf(y) = 0 or sup(y) = 0, inf(xy) = inf(x), sup(xy) = sup(x).
struct AbsorptionCertificate {
  GroupElement absorbed;
  GroupElement absorber;
  int inf_x = 0;
  int sup_x = 0;
  int inf_xy = 0;
  int sup_xy = 0;
};

inline bool verify_certificate(const Garside& g, const GroupElement& y, const GroupElement& x) {
  if (y.inf != 0 && y.sup() != 0) return false;
  const GroupElement xy = g.multiply(x, y);
  return xy.inf == x.inf && xy.sup() == x.sup();
}

/// Re-checks a recorded certificate, including the recorded numbers.
inline bool verify_certificate(const Garside& g, const AbsorptionCertificate& c) {
  if (!verify_certificate(g, c.absorbed, c.absorber)) return false;
  const GroupElement xy = g.multiply(c.absorber, c.absorbed);
  return c.inf_x == c.absorber.inf && c.sup_x == c.absorber.sup() && c.inf_xy == xy.inf && c.sup_xy == xy.sup();
}

inline std::optional<AbsorptionCertificate> try_certify(const Garside& g, const GroupElement& y, const GroupElement& x) {
  if (!verify_certificate(g, y, x)) return std::nullopt;
  const GroupElement xy = g.multiply(x, y);
  return AbsorptionCertificate{y, x, x.inf, x.sup(), xy.inf, xy.sup()};
}

inline AbsorptionCertificate certify(const Garside& g, const GroupElement& y, const GroupElement& x) {
  auto c = try_certify(g, y, x);
  if (!c) throw Error("internal", "constructed absorber fails verification: " + g.to_text(x) + " on " + g.to_text(y));
  return *c;
}

/// If x absorbs y then xy absorbs y^{-1}.
inline AbsorptionCertificate inverse_certificate(const Garside& g, const AbsorptionCertificate& c) {
  return certify(g, g.inverse(c.absorbed), g.multiply(c.absorber, c.absorbed));
}

struct AbsorbableDecomposition {
  GroupElement target;
  std::vector<GroupElement> factors;
  std::vector<AbsorptionCertificate> certificates;
  int budget = 0;

  std::size_t size() const { return factors.size(); }

  void append(AbsorbableDecomposition&& other) {
    for (std::size_t i = 0; i < other.factors.size(); ++i) {
      factors.push_back(std::move(other.factors[i]));
      certificates.push_back(std::move(other.certificates[i]));
    }
  }
};

/// Product equals target, budget respected, every certificate re-verifies.
inline bool check_decomposition(const Garside& g, const AbsorbableDecomposition& d) {
  if (static_cast<int>(d.factors.size()) > d.budget) return false;
  if (d.factors.size() != d.certificates.size()) return false;
  GroupElement acc = g.identity();
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    if (d.certificates[i].absorbed != d.factors[i]) return false;
    if (!verify_certificate(g, d.certificates[i])) return false;
    acc = g.multiply(acc, d.factors[i]);
  }
  return acc == d.target;
}

namespace detail {

inline void require_commuting_pair(const Garside& g) {
  if (g.system().rank() < 3)
    throw Error("no_commuting_pair", g.system().name() + " has no pair of commuting atoms");
}

inline void require_proper(const Garside& g, AtomSet x) {
  g.system().check_atoms(x);
  if (x == g.atoms()) throw Error("not_proper", "X must be a proper subset of the atoms");
}

/// Inverted and reversed factor list with inverse-rule certificates.
inline AbsorbableDecomposition invert_decomposition(const Garside& g, const AbsorbableDecomposition& d) {
  AbsorbableDecomposition out;
  out.target = g.inverse(d.target);
  out.budget = d.budget;
  for (std::size_t i = d.factors.size(); i-- > 0;) {
    out.factors.push_back(g.inverse(d.factors[i]));
    out.certificates.push_back(inverse_certificate(g, d.certificates[i]));
  }
  return out;
}

inline void push(const Garside& g, AbsorbableDecomposition& d, const GroupElement& y, const GroupElement& x) {
  if (y.is_identity()) return;
  d.factors.push_back(y);
  d.certificates.push_back(certify(g, y, x));
}

/// Absorber for a positive element p of A_X (X proper) whose A_X-normal form
/// s_1...s_l has infimum 0.
inline std::optional<GroupElement> parabolic_positive_absorber(const Garside& g, AtomSet x, int l) {
  const ArtinSystem& sys = g.system();
  const AtomSet outside = g.atoms() - x;
  for (int j : outside.atoms()) {
    bool central = true;
    for (int i : x.atoms()) central = central && sys.commute(i, j);
    if (central) return g.power(g.atom(j), l);
  }
  int t = 0;
  for (int j : outside.atoms()) {
    for (int i : x.atoms())
      if (!sys.commute(i, j)) t = j;
    if (t) break;
  }
  if (!t) return std::nullopt;
  // y = tau_{X+t}^{l-1}(r_{X,t}) ... tau_{X+t}(r_{X,t}) r_{X,t}
  const AtomSet xt = x | AtomSet::single(t);
  const GroupElement r = ribbon(g, x, t, Side::right).value;
  const GroupElement rt = tau_sub(g, r, xt, 1);
  GroupElement y = g.identity();
  for (int i = l - 1; i >= 0; --i) y = g.multiply(y, i % 2 ? rt : r);
  return y;
}

}  // namespace detail

/// Delta^k as at most 3 absorbable elements.
inline AbsorbableDecomposition decompose_delta_power(const Garside& g, int k) {
  detail::require_commuting_pair(g);
  AbsorbableDecomposition d;
  d.target = g.delta_power(k);
  d.budget = 3;
  if (k == 0) return d;
  if (k < 0) return detail::invert_decomposition(g, decompose_delta_power(g, -k));
  const ArtinSystem& sys = g.system();
  int i = 0, j = 0;
  for (int a = 1; a <= sys.rank() && !i; ++a)
    for (int b = a + 1; b <= sys.rank(); ++b)
      if (sys.commute(a, b)) {
        i = a;
        j = b;
        break;
      }
  const GroupElement a = g.power(g.atom(i), k), b = g.power(g.atom(j), k);
  const GroupElement c = g.multiply({g.inverse(b), g.inverse(a), g.delta_power(k)});
  detail::push(g, d, a, b);
  detail::push(g, d, b, a);
  detail::push(g, d, c, b);
  return d;
}

/// Delta_X^k as at most 2 absorbable elements (X a proper subset).
///
/// Rules, in order: an atom outside X commuting with all of X absorbs
/// Delta_X^k; otherwise sigma_i^k, sigma_i^{-k} Delta_X^k with sigma_i in X
/// commuting with some sigma_j (outside X first); otherwise X is a single atom
/// with no commuting partner and Delta_X^k is absorbed by a ribbon product of
/// a larger parabolic.
inline AbsorbableDecomposition decompose_sub_delta_power(const Garside& g, AtomSet x, int k) {
  detail::require_commuting_pair(g);
  detail::require_proper(g, x);
  AbsorbableDecomposition d;
  d.target = g.power(sub_delta(g, x), k);
  d.budget = 2;
  if (k == 0 || x.empty()) return d;
  if (k < 0) return detail::invert_decomposition(g, decompose_sub_delta_power(g, x, -k));
  const ArtinSystem& sys = g.system();
  const AtomSet outside = g.atoms() - x;

  for (int j : outside.atoms()) {
    bool central = true;
    for (int i : x.atoms()) central = central && sys.commute(i, j);
    if (central) {
      detail::push(g, d, d.target, g.power(g.atom(j), k));
      return d;
    }
  }
  auto two_factor = [&](int i, int j) {
    const GroupElement a = g.power(g.atom(i), k);
    const GroupElement b = g.multiply(g.inverse(a), d.target);
    const auto ca = try_certify(g, a, g.power(g.atom(j), k));
    const auto cb = try_certify(g, b, a);
    if (!ca || !cb) return false;
    d.factors = {a, b};
    d.certificates = {*ca, *cb};
    return true;
  };
  for (int i : x.atoms())
    for (int j : outside.atoms())
      if (sys.commute(i, j) && two_factor(i, j)) return d;
  for (int i : x.atoms())
    for (int j : g.atoms().atoms())
      if (j != i && sys.commute(i, j) && two_factor(i, j)) return d;

  // Single factor: Delta_X^k has A_{X'}-normal form with k proper factors for X' = X + neighbour.
  for (int t : outside.atoms()) {
    const AtomSet bigger = x | AtomSet::single(t);
    if (bigger == g.atoms()) continue;
    bool adjacent = false;
    for (int i : x.atoms()) adjacent = adjacent || !sys.commute(i, t);
    if (!adjacent) continue;
    const Garside sub(g.system_ptr(), bigger);
    const GroupElement local = to_sub(g, sub, d.target);
    if (local.inf != 0) continue;
    const auto y = detail::parabolic_positive_absorber(g, bigger, local.canonical_length());
    if (!y) continue;
    if (auto c = try_certify(g, d.target, *y)) {
      d.factors = {d.target};
      d.certificates = {*c};
      return d;
    }
  }
  throw Error("no_commuting_pair", "no absorbable decomposition rule applies to Delta_" + x.to_string());
}

/// An element of a proper standard parabolic A_X as at most 3 absorbable elements.
inline AbsorbableDecomposition decompose_parabolic(const Garside& g, const GroupElement& x, AtomSet xs) {
  detail::require_commuting_pair(g);
  detail::require_proper(g, xs);
  if (!member(g, x, xs)) throw Error("not_in_parabolic", "element is not in A_" + xs.to_string());
  AbsorbableDecomposition d;
  d.target = x;
  d.budget = 3;
  if (x.is_identity()) return d;
  const Garside sub(g.system_ptr(), xs);
  const GroupElement local = to_sub(g, sub, x);
  d.append(decompose_sub_delta_power(g, xs, local.inf));
  const int l = local.canonical_length();
  if (l > 0) {
    GroupElement positive = sub.identity();
    positive.factors = local.factors;
    const GroupElement p = from_sub(g, sub, positive);
    const auto y = detail::parabolic_positive_absorber(g, xs, l);
    if (!y) throw Error("internal", "no absorber for the positive part");
    detail::push(g, d, p, *y);
  }
  return d;
}

/// A conjugator x with x^{-1} u x positive (u positive, supp u proper and
/// nonempty) as at most 9 absorbable elements.
inline AbsorbableDecomposition decompose_positive_conjugator(const Garside& g, const GroupElement& u,
                                                             const GroupElement& x) {
  detail::require_commuting_pair(g);
  g.require_positive(u);
  const AtomSet xs = support(g, u);
  detail::require_proper(g, xs);
  if (xs.empty()) throw Error("not_proper", "u must be nontrivial");
  if (g.multiply(g.multiply(g.inverse(x), u), x).inf < 0)
    throw Error("not_positive_conjugate", "x does not conjugate u to a positive element");

  AbsorbableDecomposition d;
  d.target = x;
  d.budget = 9;
  const int k = x.inf;
  GroupElement xplus = g.identity();
  xplus.factors = x.factors;
  const GroupElement uk = g.tau(u, k);
  const ConjugatorFactorization f = factor_conjugator(g, uk, xplus);
  const AtomSet x1 = support(g, uk);
  const int m = static_cast<int>(f.beta.factors.size());
  const GroupElement beta1 = g.multiply(g.power(sub_delta(g, x1), m), f.beta.value);
  const int q = beta1.inf;
  const GroupElement gamma = g.multiply(g.delta_power(-q), beta1);
  const AtomSet y1 = tau_atoms(g.system(), g.atoms(), x1);
  const AtomSet yq = q % 2 ? y1 : x1;
  const GroupElement dy = sub_delta(g, yq);

  d.append(decompose_delta_power(g, k + q));
  d.append(decompose_parabolic(g, g.tau(f.alpha, q), yq));
  d.append(decompose_sub_delta_power(g, yq, -q));
  detail::push(g, d, g.multiply(g.power(dy, q - m), gamma), g.power(dy, m - q));
  return d;
}

/// Smallest e in {1, 2} with tau_X^e trivial on X.
inline int central_exponent(const ArtinSystem& sys, AtomSet x) {
  for (int a : x.atoms())
    if (tau_atom(sys, x, a) != a) return 2;
  return 1;
}

/// An element normalizing A_X (X proper, nonempty) as at most 9 absorbable elements.
inline AbsorbableDecomposition decompose_normalizer(const Garside& g, const GroupElement& alpha, AtomSet xs) {
  detail::require_commuting_pair(g);
  detail::require_proper(g, xs);
  if (xs.empty()) throw Error("not_proper", "X must be nonempty");
  const GroupElement central = g.power(sub_delta(g, xs), central_exponent(g.system(), xs));
  if (g.multiply(g.multiply(g.inverse(alpha), central), alpha) != central)
    throw Error("not_normalizing", "element does not normalize A_" + xs.to_string());
  AbsorbableDecomposition d;
  if (member(g, alpha, xs)) {
    d = decompose_parabolic(g, alpha, xs);
  } else {
    d = decompose_positive_conjugator(g, central, alpha);
  }
  d.budget = 9;
  return d;
}

/// Exact absorbability on A1, A2 and I2(m): the identity, alternating
/// positive words of length p <= m-2, and their inverses.
inline bool classify_absorbable_small(const Garside& g, const GroupElement& y) {
  const ArtinSystem& sys = g.system();
  if (sys.rank() > 2) throw Error("rank_too_large", "exact classifier only covers A1, A2 and I2(m)");
  if (y.is_identity()) return true;
  if (sys.rank() == 1) return false;
  const int m = sys.matrix()(1, 2);
  const GroupElement p = y.sup() == 0 ? g.inverse(y) : y;
  return p.inf == 0 && p.canonical_length() == 1 && p.factors[0].length() <= m - 2;
}

/// Searches absorbers of infimum 0 and canonical length <= radius in
/// canonical order; never returns an unverified certificate.
inline std::optional<AbsorptionCertificate> bounded_search(const Garside& g, const GroupElement& y, int radius,
                                                           std::size_t budget = detail::budget(5'000'000)) {
  if (y.inf != 0 && y.sup() != 0) throw Error("precondition", "absorbable candidates need inf 0 or sup 0");
  if (auto c = try_certify(g, y, g.identity())) return c;
  const std::vector<Simple> states = g.proper_simples();
  std::vector<std::vector<Simple>> layer;
  for (const auto& s : states) layer.push_back({s});
  std::size_t visited = 0;
  for (int r = 1; r <= radius && !layer.empty(); ++r) {
    for (const auto& seq : layer) {
      if (++visited > budget) throw Error("budget_exceeded", "bounded search exceeds its budget");
      GroupElement x = g.identity();
      x.factors = seq;
      if (auto c = try_certify(g, y, x)) return c;
    }
    if (r == radius) break;
    std::vector<std::vector<Simple>> next;
    for (const auto& seq : layer)
      for (const auto& s : states)
        if (g.is_left_weighted(seq.back(), s)) {
          next.push_back(seq);
          next.back().push_back(s);
        }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace garside
