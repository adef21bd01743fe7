#pragma once

// Standard parabolic subgroups A_X: support, Delta_X, membership, ribbons and
// the factorization x = alpha * beta of positive conjugators.

#include <optional>
#include <string>
#include <vector>

#include "garside.hpp"

namespace garside {

/// Atoms occurring in any positive word for x.
inline AtomSet support(const Garside& g, const GroupElement& x) {
  g.require_positive(x);
  if (x.inf > 0) return g.atoms();
  AtomSet out;
  for (const auto& s : x.factors) out = out | g.system().support(s);
  return out;
}

/// Delta_X, the lcm of the atoms of X (identity for X empty).
inline GroupElement sub_delta(const Garside& g, AtomSet x) {
  g.system().check_atoms(x);
  if (!x.subset_of(g.atoms())) throw Error("bad_atom", "atom set " + x.to_string() + " outside the structure");
  return g.from_simple(g.system().longest_element(x));
}

/// Delta_X^{-p} h Delta_X^{p}.
inline GroupElement tau_sub(const Garside& g, const GroupElement& h, AtomSet x, int p = 1) {
  const GroupElement d = g.power(sub_delta(g, x), p);
  return g.multiply(g.multiply(g.inverse(d), h), d);
}

/// Image of the atom `a` of X under tau_X (conjugation by w0_X).
inline int tau_atom(const ArtinSystem& sys, AtomSet x, int a) {
  const CoxeterElement w0x = sys.longest_element(x);
  const CoxeterElement img = sys.multiply(sys.multiply(w0x, sys.reflection(a)), w0x);
  for (int b : x.atoms())
    if (sys.reflection(b) == img) return b;
  throw Error("internal", "tau_X does not permute the atoms of X");
}

inline AtomSet tau_atoms(const ArtinSystem& sys, AtomSet x, AtomSet y) {
  AtomSet out;
  for (int a : y.atoms()) out = out | AtomSet::single(tau_atom(sys, x, a));
  return out;
}

/// Membership test: with m = max(0, -inf g), g lies in A_X iff Delta_X^m g is
/// positive with support in X. Returns that positive part when it does.
inline std::optional<std::pair<int, GroupElement>> member_split(const Garside& g, const GroupElement& h, AtomSet x) {
  const int m = std::max(0, -h.inf);
  const GroupElement p = g.multiply(g.power(sub_delta(g, x), m), h);
  if (p.inf < 0 || !support(g, p).subset_of(x)) return std::nullopt;
  return std::make_pair(m, p);
}

inline bool member(const Garside& g, const GroupElement& h, AtomSet x) {
  return member_split(g, h, x).has_value();
}

/// Normal form inside A_X (structure `sub`) of an element of A_X given in `g`.
inline GroupElement to_sub(const Garside& g, const Garside& sub, const GroupElement& h) {
  const auto split = member_split(g, h, sub.atoms());
  if (!split) throw Error("not_in_parabolic", "element is not in A_" + sub.atoms().to_string());
  const GroupElement pos = sub.normalize(g.word(split->second));
  return sub.multiply(sub.delta_power(-split->first), pos);
}

/// Normal form in `g` of an element of the sub-structure `sub`.
inline GroupElement from_sub(const Garside& g, const Garside& sub, const GroupElement& h) {
  return g.normalize(sub.word(h));
}

struct RibbonFactor {
  AtomSet source;
  int atom = 0;
  Side side = Side::right;
  AtomSet target;
  GroupElement value;
};

/// Right ribbon r_{X,t} = Delta_{X+t} Delta_X^{-1} or left ribbon
/// r_{t,X} = Delta_X^{-1} Delta_{X+t}. Conjugation carries X onto the target.
inline RibbonFactor ribbon(const Garside& g, AtomSet x, int t, Side side) {
  const ArtinSystem& sys = g.system();
  sys.check_atom(t);
  sys.check_atoms(x);
  if (x.contains(t)) throw Error("bad_ribbon", "ribbon atom " + std::to_string(t) + " lies in " + x.to_string());
  const AtomSet xt = x | AtomSet::single(t);
  const CoxeterElement big = sys.longest_element(xt), small = sys.longest_element(x);
  const CoxeterElement carrier = side == Side::right ? sys.multiply(big, small) : sys.multiply(small, big);
  RibbonFactor r;
  r.source = x;
  r.atom = t;
  r.side = side;
  // r x r^{-1} for the right ribbon (r^{-1} x r for the left one) is tau_{X+t}(tau_X(x)).
  for (int a : x.atoms()) r.target = r.target | AtomSet::single(tau_atom(sys, xt, tau_atom(sys, x, a)));
  r.value = g.from_simple(carrier);
  return r;
}

/// Product of left ribbons r_1 ... r_m with sets X = sets[0], ..., Y = sets[m].
struct RibbonChain {
  std::vector<RibbonFactor> factors;
  std::vector<AtomSet> sets;
  GroupElement value;
};

enum class ConjugatorKind { in_parabolic, ribbon };

struct MinimalConjugator {
  GroupElement c;
  ConjugatorKind kind = ConjugatorKind::in_parabolic;
  int ribbon_atom = 0;  // t when kind == ribbon
};

namespace detail {

inline void require_conjugates_positive(const Garside& g, const GroupElement& u, const GroupElement& x) {
  g.require_positive(u);
  g.require_positive(x);
  if (g.multiply(g.multiply(g.inverse(x), u), x).inf < 0)
    throw Error("not_positive_conjugate", "x does not conjugate u to a positive element");
}

/// Smallest positive c with a <= c and c^{-1} u c positive.
inline GroupElement smallest_conjugator_above(const Garside& g, const GroupElement& u, GroupElement c) {
  while (true) {
    const GroupElement uc = g.multiply(u, c);
    const GroupElement next = g.multiply(g.inverse(u), g.join(uc, c, Order::prefix));
    if (next == c) return c;
    c = next;
  }
}

}  // namespace detail

/// A minimal nontrivial prefix c of x with c^{-1} u c positive, classified as
/// an element of A_X (X = supp u) or a left ribbon r_{t,X}.
inline MinimalConjugator minimal_conjugator(const Garside& g, const GroupElement& u, const GroupElement& x) {
  detail::require_conjugates_positive(g, u, x);
  if (x.is_identity()) throw Error("trivial_conjugator", "x must be nontrivial");
  const AtomSet xs = support(g, u);
  std::vector<std::pair<int, GroupElement>> found;
  for (int a : g.head(x).left_descents().atoms())
    found.emplace_back(a, detail::smallest_conjugator_above(g, u, g.atom(a)));
  const std::pair<int, GroupElement>* best = nullptr;
  for (const auto& cand : found) {
    bool minimal = true;
    for (const auto& other : found)
      if (other.second != cand.second && g.divides(other.second, cand.second, Order::prefix)) minimal = false;
    if (minimal) {
      best = &cand;
      break;  // atoms are scanned in increasing order
    }
  }
  const GroupElement& c = best->second;
  if (!g.divides(c, x, Order::prefix)) throw Error("internal", "minimal conjugator is not a prefix of x");
  if (member(g, c, xs)) return {c, ConjugatorKind::in_parabolic, 0};
  for (int t : (g.atoms() - xs).atoms())
    if (ribbon(g, xs, t, Side::left).value == c) return {c, ConjugatorKind::ribbon, t};
  throw Error("internal", "minimal conjugator is neither in A_X nor a ribbon");
}

struct ConjugatorFactorization {
  GroupElement alpha;
  RibbonChain beta;
};

/// x = alpha * beta with alpha in A_X and beta an X-ribbon-Y chain,
/// Y = supp(x^{-1} u x).
inline ConjugatorFactorization factor_conjugator(const Garside& g, const GroupElement& u, const GroupElement& x) {
  detail::require_conjugates_positive(g, u, x);
  struct Item {
    GroupElement c;
    bool is_ribbon;
    AtomSet set;  // support of the conjugated u before this factor
    int t;
  };
  std::vector<Item> items;
  GroupElement cur = u, rest = x;
  while (!rest.is_identity()) {
    const MinimalConjugator mc = minimal_conjugator(g, cur, rest);
    items.push_back({mc.c, mc.kind == ConjugatorKind::ribbon, support(g, cur), mc.ribbon_atom});
    const GroupElement ci = g.inverse(mc.c);
    cur = g.multiply(g.multiply(ci, cur), mc.c);
    rest = g.multiply(ci, rest);
  }
  // Move elements of parabolics leftward past ribbons: c_i c_{i+1} = (c_i c_{i+1} c_i^{-1}) c_i.
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      if (items[i].is_ribbon && !items[i + 1].is_ribbon) {
        const GroupElement c = g.multiply(g.multiply(items[i].c, items[i + 1].c), g.inverse(items[i].c));
        Item rib = items[i];
        items[i] = {c, false, rib.set, 0};
        items[i + 1] = rib;
        moved = true;
      }
    }
  }
  ConjugatorFactorization out;
  out.alpha = g.identity();
  out.beta.value = g.identity();
  const AtomSet xs = support(g, u);
  out.beta.sets.push_back(xs);
  for (const auto& it : items) {
    if (!it.is_ribbon) {
      out.alpha = g.multiply(out.alpha, it.c);
      continue;
    }
    RibbonFactor rf = ribbon(g, out.beta.sets.back(), it.t, Side::left);
    if (rf.value != it.c) throw Error("internal", "ribbon chain sets do not match");
    out.beta.value = g.multiply(out.beta.value, rf.value);
    out.beta.sets.push_back(rf.target);
    out.beta.factors.push_back(std::move(rf));
  }
  if (!member(g, out.alpha, xs)) throw Error("internal", "alpha is not in A_X");
  if (g.multiply(out.alpha, out.beta.value) != x) throw Error("internal", "alpha * beta != x");
  const GroupElement conj = g.multiply(g.multiply(g.inverse(x), u), x);
  if (support(g, conj) != out.beta.sets.back()) throw Error("internal", "ribbon chain target differs from supp(x^-1 u x)");
  return out;
}

}  // namespace garside
