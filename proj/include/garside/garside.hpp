#pragma once

// Garside structure of a spherical Artin-Tits group (or of a standard
// parabolic subgroup A_X, whose Garside element is Delta_X).
//
// Simple elements are carried by their Coxeter group images. Group elements
// are left normal forms Delta^k s_1 ... s_r.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "detail/budget.hpp"
#include "types.hpp"

namespace garside {

using Simple = CoxeterElement;

/// Left normal form Delta^inf s_1 ... s_r.
struct GroupElement {
  std::uint64_t owner = 0;
  int inf = 0;
  std::vector<Simple> factors;

  int sup() const { return inf + static_cast<int>(factors.size()); }
  int canonical_length() const { return static_cast<int>(factors.size()); }
  bool is_identity() const { return inf == 0 && factors.empty(); }
  bool is_positive() const { return inf >= 0; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  /// Canonical total order: inf, then the factor sequence.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.owner <=> b.owner; c != 0) return c;
    if (auto c = a.inf <=> b.inf; c != 0) return c;
    return a.factors <=> b.factors;
  }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<long long>{}(inf) ^ (owner * 0x9e3779b97f4a7c15ull);
    for (const auto& s : factors) h = (h * 1000003u) ^ s.hash();
    return h;
  }
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept { return g.hash(); }
};

struct Lengths {
  int inf = 0;
  int sup = 0;
  int canonical = 0;
  int geodesic = 0;
  friend bool operator==(const Lengths&, const Lengths&) = default;
};

class Garside {
 public:
  /// Garside structure of the whole group (X = all atoms) or of A_X.
  explicit Garside(SystemPtr sys, std::optional<AtomSet> x = std::nullopt)
      : sys_(std::move(sys)), x_(x.value_or(sys_->all_atoms())) {
    sys_->check_atoms(x_);
    delta_ = sys_->longest_element(x_);
    owner_ = sys_->fingerprint() * 0x100000001b3ull + x_.bits() + 1;
  }

  const ArtinSystem& system() const { return *sys_; }
  const SystemPtr& system_ptr() const { return sys_; }
  AtomSet atoms() const { return x_; }
  bool is_full() const { return x_ == sys_->all_atoms(); }
  std::uint64_t owner() const { return owner_; }

  // ---- simple elements -------------------------------------------------

  const Simple& delta_simple() const { return delta_; }
  const Simple& one() const { return sys_->identity(); }
  const Simple& atom_simple(int a) const {
    check_atom(a);
    return sys_->reflection(a);
  }
  bool is_delta(const Simple& s) const { return s == delta_; }
  bool is_proper(const Simple& s) const { return !s.is_identity() && s != delta_; }

  /// True iff s is a simple of this structure, i.e. s is a prefix of Delta.
  bool is_simple(const Simple& s) const {
    return sys_->multiply(sys_->inverse(s), delta_).length() == delta_.length() - s.length();
  }

  /// s^{-1} Delta: the simple with s * rc(s) = Delta.
  Simple right_complement(const Simple& s) const { return sys_->multiply(sys_->inverse(s), delta_); }
  /// Delta s^{-1}: the simple with lc(s) * s = Delta.
  Simple left_complement(const Simple& s) const { return sys_->multiply(delta_, sys_->inverse(s)); }

  /// Delta^{-p} s Delta^{p}.
  Simple tau_simple(const Simple& s, int p = 1) const {
    if (p % 2 == 0) return s;
    return sys_->multiply(sys_->multiply(delta_, s), delta_);
  }

  Simple lattice(const Simple& a, const Simple& b, LatticeOp op, Order side) const {
    if (op == LatticeOp::meet) return side == Order::prefix ? prefix_meet(a, b) : suffix_meet(a, b);
    if (side == Order::prefix) {
      // a v b = Delta (rc a ^suffix rc b)^{-1}
      return sys_->multiply(delta_, sys_->inverse(suffix_meet(right_complement(a), right_complement(b))));
    }
    return sys_->multiply(sys_->inverse(prefix_meet(left_complement(a), left_complement(b))), delta_);
  }

  Simple prefix_meet(const Simple& a, const Simple& b) const {
    Simple c = one(), ra = a, rb = b;
    while (true) {
      const AtomSet common = ra.left_descents() & rb.left_descents();
      if (common.empty()) return c;
      const int s = common.lowest();
      c = sys_->right_multiply_atom(c, s);
      ra = sys_->left_multiply_atom(s, ra);
      rb = sys_->left_multiply_atom(s, rb);
    }
  }

  Simple suffix_meet(const Simple& a, const Simple& b) const {
    Simple c = one(), ra = a, rb = b;
    while (true) {
      const AtomSet common = ra.right_descents() & rb.right_descents();
      if (common.empty()) return c;
      const int s = common.lowest();
      c = sys_->left_multiply_atom(s, c);
      ra = sys_->right_multiply_atom(ra, s);
      rb = sys_->right_multiply_atom(rb, s);
    }
  }

  /// a * b is left-weighted: every atomic prefix of b is an atomic suffix of a.
  bool is_left_weighted(const Simple& a, const Simple& b) const {
    return b.left_descents().subset_of(a.right_descents());
  }
  /// a * b is right-weighted: every atomic suffix of a is an atomic prefix of b.
  bool is_right_weighted(const Simple& a, const Simple& b) const {
    return a.right_descents().subset_of(b.left_descents());
  }

  /// Reduced spelling, smallest left descent first.
  std::vector<int> spell(const Simple& s) const { return sys_->reduced_word(s); }

  // ---- group elements ---------------------------------------------------

  GroupElement identity() const { return GroupElement{owner_, 0, {}}; }
  GroupElement delta_power(int k) const { return GroupElement{owner_, k, {}}; }
  GroupElement delta() const { return delta_power(1); }
  GroupElement atom(int a, int sign = 1) const {
    return sign > 0 ? from_simple(atom_simple(a)) : inverse(from_simple(atom_simple(a)));
  }

  GroupElement from_simple(const Simple& s) const {
    if (s.is_identity()) return identity();
    if (s == delta_) return delta_power(1);
    return GroupElement{owner_, 0, {s}};
  }

  /// Normal form of the element spelled by a signed atom word.
  GroupElement normalize(const AtomWord& w) const {
    std::vector<std::pair<Simple, int>> tokens;
    tokens.reserve(w.letters.size());
    for (int l : w.letters) {
      const int a = l > 0 ? l : -l;
      check_atom(a);
      tokens.emplace_back(sys_->reflection(a), l > 0 ? 1 : -1);
    }
    return evaluate(tokens, 0);
  }

  /// Normal form of a product of simples (each token s or s^{-1}) followed by Delta^trailing.
  GroupElement evaluate(const std::vector<std::pair<Simple, int>>& tokens, int trailing) const {
    // Running value Delta^{-d} E_1 ... E_n; entry j must still be conjugated by tau^{d - d_j}.
    int d = 0;
    std::vector<std::pair<Simple, int>> entries;
    entries.reserve(tokens.size());
    for (const auto& [s, sign] : tokens) {
      if (sign > 0) {
        entries.emplace_back(s, d);
      } else {
        ++d;
        entries.emplace_back(left_complement(s), d);
      }
    }
    std::vector<Simple> seq;
    seq.reserve(entries.size());
    for (auto& [s, dj] : entries) seq.push_back(((d - dj + trailing) & 1) ? tau_simple(s) : std::move(s));
    return left_weight(trailing - d, std::move(seq));
  }

  /// Normal form of Delta^k s_1 ... s_n for arbitrary simples s_i: bubble
  /// passes from the left until no pair changes, then Delta factors are
  /// merged into k and trivial factors dropped. Atoms move one at a time,
  /// which reaches (a c, c^{-1} b) with c = rc(a) ^ b.
  GroupElement left_weight(int k, std::vector<Simple> seq) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        Simple& a = seq[i];
        Simple& b = seq[i + 1];
        for (AtomSet m = b.left_descents() - a.right_descents(); !m.empty();
             m = b.left_descents() - a.right_descents()) {
          const int s = m.lowest();
          a = sys_->right_multiply_atom(a, s);
          b = sys_->left_multiply_atom(s, b);
          changed = true;
        }
      }
    }
    std::size_t lead = 0;
    while (lead < seq.size() && seq[lead] == delta_) ++lead;
    seq.erase(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(lead));
    while (!seq.empty() && seq.back().is_identity()) seq.pop_back();
    return GroupElement{owner_, k + static_cast<int>(lead), std::move(seq)};
  }

  GroupElement multiply(const GroupElement& g, const GroupElement& h) const {
    check_owner(g);
    check_owner(h);
    if (g.is_identity()) return h;
    if (h.is_identity()) return g;
    // Delta^a S Delta^b T = Delta^{a+b} tau^b(S) T
    std::vector<Simple> seq;
    seq.reserve(g.factors.size() + h.factors.size());
    for (const auto& s : g.factors) seq.push_back(tau_simple(s, h.inf));
    seq.insert(seq.end(), h.factors.begin(), h.factors.end());
    return left_weight(g.inf + h.inf, std::move(seq));
  }

  GroupElement multiply(std::initializer_list<GroupElement> gs) const {
    GroupElement acc = identity();
    for (const auto& g : gs) acc = multiply(acc, g);
    return acc;
  }

  GroupElement inverse(const GroupElement& g) const {
    check_owner(g);
    std::vector<std::pair<Simple, int>> tokens;
    for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) tokens.emplace_back(*it, -1);
    return evaluate(tokens, -g.inf);
  }

  GroupElement power(const GroupElement& g, int n) const {
    GroupElement base = n >= 0 ? g : inverse(g);
    GroupElement acc = identity();
    for (int i = 0; i < (n >= 0 ? n : -n); ++i) acc = multiply(acc, base);
    return acc;
  }

  /// Delta^{-p} g Delta^{p}.
  GroupElement tau(const GroupElement& g, int p = 1) const {
    check_owner(g);
    if (p % 2 == 0) return g;
    GroupElement out = g;
    for (auto& s : out.factors) s = tau_simple(s);
    return out;
  }

  /// Image under the anti-automorphism reversing words.
  GroupElement reverse(const GroupElement& g) const {
    check_owner(g);
    // rev(Delta^k s_1..s_r) = rev(s_r)..rev(s_1) Delta^k, and rev(s) has carrier s^{-1}.
    std::vector<std::pair<Simple, int>> tokens;
    for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) tokens.emplace_back(sys_->inverse(*it), 1);
    return evaluate(tokens, g.inf);
  }

  Lengths lengths(const GroupElement& g) const {
    return Lengths{g.inf, g.sup(), g.canonical_length(), std::max(g.sup(), 0) - std::min(g.inf, 0)};
  }

  bool equal(const GroupElement& g, const GroupElement& h) const {
    check_owner(g);
    check_owner(h);
    return g == h;
  }

  /// a is a prefix (a^{-1} b positive) or suffix (b a^{-1} positive) of b.
  bool divides(const GroupElement& a, const GroupElement& b, Order side) const {
    const GroupElement q = side == Order::prefix ? multiply(inverse(a), b) : multiply(b, inverse(a));
    return q.inf >= 0;
  }

  /// x ^ Delta for positive x.
  Simple head(const GroupElement& x) const {
    if (x.inf > 0) return delta_;
    return x.factors.empty() ? one() : x.factors.front();
  }

  /// gcd in the chosen order of two positive elements.
  GroupElement meet(const GroupElement& x, const GroupElement& y, Order side) const {
    require_positive(x);
    require_positive(y);
    if (side == Order::suffix) return reverse(meet(reverse(x), reverse(y), Order::prefix));
    GroupElement acc = identity(), rx = x, ry = y;
    while (true) {
      const Simple c = prefix_meet(head(rx), head(ry));
      if (c.is_identity()) return acc;
      const GroupElement ce = from_simple(c), ci = inverse(ce);
      acc = multiply(acc, ce);
      rx = multiply(ci, rx);
      ry = multiply(ci, ry);
    }
  }

  /// lcm in the chosen order of two positive elements.
  GroupElement join(const GroupElement& x, const GroupElement& y, Order side) const {
    require_positive(x);
    require_positive(y);
    if (side == Order::suffix) return reverse(join(reverse(x), reverse(y), Order::prefix));
    const int n = std::max(x.sup(), y.sup());
    const GroupElement dn = delta_power(n);
    // x v y = Delta^n (x^{-1} Delta^n ^suffix y^{-1} Delta^n)^{-1}
    const GroupElement cx = multiply(inverse(x), dn), cy = multiply(inverse(y), dn);
    return multiply(dn, inverse(meet(cx, cy, Order::suffix)));
  }

  /// A representative signed atom word (Delta powers spelled out).
  AtomWord word(const GroupElement& g) const {
    AtomWord w;
    const std::vector<int> dword = spell(delta_);
    for (int i = 0; i < g.inf; ++i) w.letters.insert(w.letters.end(), dword.begin(), dword.end());
    for (int i = 0; i < -g.inf; ++i)
      for (auto it = dword.rbegin(); it != dword.rend(); ++it) w.letters.push_back(-*it);
    for (const auto& s : g.factors) {
      const auto sw = spell(s);
      w.letters.insert(w.letters.end(), sw.begin(), sw.end());
    }
    return w;
  }

  /// "Δ^k · (1)(1 2)"; "Δ^k" when there are no factors.
  std::string to_text(const GroupElement& g) const {
    std::string out = "Δ^" + std::to_string(g.inf);
    if (g.factors.empty()) return out;
    out += " · ";
    for (const auto& s : g.factors) {
      out += "(";
      const auto sw = spell(s);
      for (std::size_t i = 0; i < sw.size(); ++i) out += (i ? " " : "") + std::to_string(sw[i]);
      out += ")";
    }
    return out;
  }

  /// Proper simples of this structure in canonical order.
  std::vector<Simple> proper_simples(std::size_t limit = detail::budget(2'000'000)) const {
    std::vector<Simple> all = sys_->enumerate(x_, limit);
    std::vector<Simple> out;
    out.reserve(all.size());
    for (auto& s : all)
      if (is_proper(s)) out.push_back(std::move(s));
    return out;
  }

  void check_atom(int a) const {
    sys_->check_atom(a);
    if (!x_.contains(a)) throw Error("bad_atom", "atom " + std::to_string(a) + " not in " + x_.to_string());
  }
  void check_owner(const GroupElement& g) const {
    if (g.owner != owner_) throw Error("mixed_systems", "element belongs to a different Garside structure");
  }
  void require_positive(const GroupElement& g) const {
    if (g.inf < 0) throw Error("not_positive", "positive element required");
  }

 private:
  SystemPtr sys_;
  AtomSet x_;
  Simple delta_;
  std::uint64_t owner_ = 0;
};

}  // namespace garside
