#pragma once

// Spherical-type Coxeter systems: matrices, the classification catalog, exact
// root-system models, and Coxeter group elements encoded by their action on
// roots.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ring.hpp"
#include "types.hpp"

namespace garside {

enum class Family { A, B, D, E, F, H, I2 };

/// A family/rank pair from the catalog of irreducible finite Coxeter graphs.
struct FamilyTag {
  Family family = Family::A;
  int rank = 1;
  int m = 0;  // dihedral order, I2 only

  std::string name() const {
    switch (family) {
      case Family::A: return "A" + std::to_string(rank);
      case Family::B: return "B" + std::to_string(rank);
      case Family::D: return "D" + std::to_string(rank);
      case Family::E: return "E" + std::to_string(rank);
      case Family::F: return "F" + std::to_string(rank);
      case Family::H: return "H" + std::to_string(rank);
      case Family::I2: return "I2(" + std::to_string(m) + ")";
    }
    return "?";
  }
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// Symmetric matrix m(s,t) over atoms 1..rank.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;

  explicit CoxeterMatrix(std::vector<std::vector<int>> entries) : m_(std::move(entries)) {
    const std::size_t n = m_.size();
    if (n == 0) throw Error("bad_matrix", "empty Coxeter matrix");
    if (n > 32) throw Error("bad_matrix", "rank above 32 is not supported");
    for (std::size_t i = 0; i < n; ++i) {
      if (m_[i].size() != n) throw Error("bad_matrix", "Coxeter matrix must be square");
      if (m_[i][i] != 1) throw Error("bad_matrix", "Coxeter matrix diagonal must be 1");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (m_[i][j] != m_[j][i]) throw Error("bad_matrix", "Coxeter matrix must be symmetric");
        if (i != j && m_[i][j] < 2) throw Error("bad_matrix", "off-diagonal entries must be >= 2");
      }
  }

  /// Canonical matrix for a catalog entry, atoms numbered along the graph.
  static CoxeterMatrix catalog(const FamilyTag& tag) {
    const int n = tag.rank;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    auto link = [&](int s, int t, int w) { m[s - 1][t - 1] = m[t - 1][s - 1] = w; };
    switch (tag.family) {
      case Family::A:
        for (int i = 1; i < n; ++i) link(i, i + 1, 3);
        break;
      case Family::B:
        for (int i = 1; i < n; ++i) link(i, i + 1, 3);
        link(1, 2, 4);
        break;
      case Family::D:
        // chain 1..n-1, atom n attached to n-2
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, 3);
        link(n - 2, n, 3);
        break;
      case Family::E:
        // chain 1..n-1, atom n attached to 3
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, 3);
        link(3, n, 3);
        break;
      case Family::F:
        link(1, 2, 3);
        link(2, 3, 4);
        link(3, 4, 3);
        break;
      case Family::H:
        for (int i = 1; i < n; ++i) link(i, i + 1, 3);
        link(1, 2, 5);
        break;
      case Family::I2:
        link(1, 2, tag.m);
        break;
    }
    return CoxeterMatrix(std::move(m));
  }

  int rank() const { return static_cast<int>(m_.size()); }
  /// Entry m(s,t) for 1-based atoms.
  int operator()(int s, int t) const { return m_[s - 1][t - 1]; }
  bool commute(int s, int t) const { return (*this)(s, t) == 2; }
  const std::vector<std::vector<int>>& entries() const { return m_; }

  /// Matrix after renaming atom i to perm[i-1] (perm is a permutation of 1..rank).
  CoxeterMatrix relabeled(const std::vector<int>& perm) const {
    const int n = rank();
    std::vector<std::vector<int>> out(n, std::vector<int>(n, 1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[perm[i] - 1][perm[j] - 1] = m_[i][j];
    return CoxeterMatrix(std::move(out));
  }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::vector<std::vector<int>> m_;
};

/// Identifies the catalog entry of an irreducible spherical Coxeter matrix.
/// Throws Error("reducible") for disconnected graphs and
/// Error("not_finite_type") for graphs outside the catalog.
inline FamilyTag classify(const CoxeterMatrix& cm) {
  const int n = cm.rank();
  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (cm(i, j) >= 3) {
        adj[i - 1].push_back(j - 1);
        adj[j - 1].push_back(i - 1);
        ++edges;
      }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) throw Error("reducible", "irreducible required: Coxeter graph is disconnected");

  const auto not_finite = [] { return Error("not_finite_type", "Coxeter graph is not of finite type"); };
  if (n == 1) return {Family::A, 1, 0};
  if (n == 2) {
    const int m = cm(1, 2);
    if (m == 3) return {Family::A, 2, 0};
    return {Family::I2, 2, m};
  }
  if (edges != n - 1) throw not_finite();  // contains a cycle

  int heavy = 0, heavy_u = -1, heavy_v = -1, heavy_w = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int m = cm(i, j);
      if (m >= 6) throw not_finite();
      if (m >= 4) {
        ++heavy;
        heavy_u = i - 1;
        heavy_v = j - 1;
        heavy_w = m;
      }
    }
  if (heavy > 1) throw not_finite();

  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 3) throw not_finite();
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.size() > 1) throw not_finite();

  if (heavy == 0) {
    if (branch.empty()) return {Family::A, n, 0};
    // Arm lengths (in nodes) from the branch node.
    std::vector<int> arms;
    const int c = branch[0];
    for (int start : adj[c]) {
      int prev = c, cur = start, len = 1;
      while (true) {
        int next = -1;
        for (int w : adj[cur])
          if (w != prev) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {Family::D, n, 0};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, n, 0};
    throw not_finite();
  }

  if (!branch.empty()) throw not_finite();
  const bool at_end = adj[heavy_u].size() == 1 || adj[heavy_v].size() == 1;
  if (heavy_w == 4) {
    if (at_end) return {Family::B, n, 0};
    if (n == 4) return {Family::F, 4, 0};
    throw not_finite();
  }
  // heavy_w == 5
  if (at_end && (n == 3 || n == 4)) return {Family::H, n, 0};
  throw not_finite();
}

/// Finite root system with the permutation action of each simple reflection.
///
/// Roots are indexed 0..2N-1: indices below N are positive roots (the first
/// `rank` of them are the simple roots, atom i at index i-1) and index r+N is
/// the negative of root r.
struct RootSystemModel {
  enum class Ring { integer, golden, dihedral };

  Ring ring = Ring::integer;
  int rank = 0;
  int positive_count = 0;
  /// Positive roots in simple-root coordinates (integer and golden models).
  std::vector<std::vector<GoldenInteger>> coefficients;
  /// Angle index k (root direction k*pi/m) of each positive root (dihedral model).
  std::vector<int> dihedral_angle;
  /// action[i][r]: image of root r under the reflection of atom i+1.
  std::vector<std::vector<std::uint16_t>> action;

  std::uint16_t negate(std::uint16_t r) const {
    const int n = positive_count;
    return static_cast<std::uint16_t>(r < n ? r + n : r - n);
  }
};

/// Builds the root model from a (generalized) Cartan matrix with
/// s_i(alpha_j) = alpha_j - cartan[i][j] * alpha_i.
template <class Ring>
RootSystemModel build_root_model(const std::vector<std::vector<Ring>>& cartan, RootSystemModel::Ring kind,
                                 std::size_t max_roots = 4096) {
  const int n = static_cast<int>(cartan.size());
  using Vec = std::vector<Ring>;
  std::vector<Vec> roots;
  std::map<Vec, int> index;
  for (int i = 0; i < n; ++i) {
    Vec e(n, Ring(0));
    e[i] = Ring(1);
    index.emplace(e, i);
    roots.push_back(std::move(e));
  }
  auto reflect = [&](int i, const Vec& v) {
    Ring c(0);
    for (int j = 0; j < n; ++j) c += cartan[i][j] * v[j];
    Vec out = v;
    out[i] -= c;
    return out;
  };
  for (std::size_t q = 0; q < roots.size(); ++q) {
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(q) == i) continue;
      Vec img = reflect(i, roots[q]);
      for (const Ring& c : img)
        if (sign_of(c) < 0) throw Error("not_finite_type", "root model produced a mixed-sign root");
      if (index.find(img) == index.end()) {
        if (roots.size() >= max_roots) throw Error("not_finite_type", "root system is infinite");
        index.emplace(img, static_cast<int>(roots.size()));
        roots.push_back(std::move(img));
      }
    }
  }
  RootSystemModel model;
  model.ring = kind;
  model.rank = n;
  model.positive_count = static_cast<int>(roots.size());
  const int npos = model.positive_count;
  model.action.assign(n, std::vector<std::uint16_t>(2 * npos));
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < npos; ++r) {
      std::uint16_t img;
      if (r == i) {
        img = static_cast<std::uint16_t>(i + npos);
      } else {
        img = static_cast<std::uint16_t>(index.at(reflect(i, roots[r])));
      }
      model.action[i][r] = img;
      model.action[i][r + npos] = model.negate(img);
    }
  }
  for (const auto& v : roots) {
    std::vector<GoldenInteger> g;
    g.reserve(v.size());
    for (const Ring& c : v) g.emplace_back(c);
    model.coefficients.push_back(std::move(g));
  }
  return model;
}

/// Exact model of the dihedral root system of order 2m: roots are the unit
/// vectors at angles k*pi/m, alpha_1 at k=0 and alpha_2 at k=m-1. Reflections
/// act on angle indices, so no irrational coordinates are ever formed.
inline RootSystemModel build_dihedral_model(int m) {
  RootSystemModel model;
  model.ring = RootSystemModel::Ring::dihedral;
  model.rank = 2;
  model.positive_count = m;
  // Positive index -> angle index: 0 -> 0, 1 -> m-1, then 1..m-2.
  std::vector<int> angle_of(m);
  angle_of[0] = 0;
  angle_of[1] = m - 1;
  for (int k = 1; k <= m - 2; ++k) angle_of[k + 1] = k;
  std::vector<int> pos_of_angle(m);
  for (int p = 0; p < m; ++p) pos_of_angle[angle_of[p]] = p;
  auto root_index = [&](int angle) {
    angle = ((angle % (2 * m)) + 2 * m) % (2 * m);
    if (angle < m) return pos_of_angle[angle];
    return pos_of_angle[angle - m] + m;
  };
  model.dihedral_angle = angle_of;
  model.action.assign(2, std::vector<std::uint16_t>(2 * m));
  for (int r = 0; r < 2 * m; ++r) {
    const int angle = r < m ? angle_of[r] : angle_of[r - m] + m;
    model.action[0][r] = static_cast<std::uint16_t>(root_index(m - angle));
    model.action[1][r] = static_cast<std::uint16_t>(root_index(m - 2 - angle));
  }
  return model;
}

/// Element of the Coxeter group, stored as the images of the positive roots.
class CoxeterElement {
 public:
  CoxeterElement() = default;

  const std::vector<std::uint16_t>& images() const { return img_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }
  AtomSet left_descents() const { return ldesc_; }
  AtomSet right_descents() const { return rdesc_; }
  AtomSet descents(Side side) const { return side == Side::left ? ldesc_ : rdesc_; }

  friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) { return a.img_ == b.img_; }
  /// Canonical order: by length, then by root images.
  friend std::strong_ordering operator<=>(const CoxeterElement& a, const CoxeterElement& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.img_ <=> b.img_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : img_) h = (h ^ v) * 1099511628211ull;
    return h;
  }

 private:
  friend class ArtinSystem;

  CoxeterElement(std::vector<std::uint16_t> img, int rank) : img_(std::move(img)) {
    const auto n = static_cast<std::uint16_t>(img_.size());
    std::uint32_t l = 0, r = 0;
    for (std::uint16_t i = 0; i < n; ++i) {
      const std::uint16_t v = img_[i];
      if (v >= n) {
        ++length_;
        if (v - n < rank) l |= 1u << (v - n);
        if (i < rank) r |= 1u << i;
      }
    }
    ldesc_ = AtomSet(l);
    rdesc_ = AtomSet(r);
  }

  std::vector<std::uint16_t> img_;
  int length_ = 0;
  AtomSet ldesc_;
  AtomSet rdesc_;
};

struct CoxeterElementHash {
  std::size_t operator()(const CoxeterElement& w) const noexcept { return w.hash(); }
};

/// A validated irreducible spherical Artin-Tits system with its Coxeter group.
/// Immutable after construction; share it through std::shared_ptr.
class ArtinSystem {
 public:
  ArtinSystem(const FamilyTag& tag, std::string name) : tag_(tag), name_(std::move(name)) {
    matrix_ = CoxeterMatrix::catalog(tag);
    roots_ = build_model(matrix_);
    rank_ = matrix_.rank();
    std::vector<std::uint16_t> id(roots_.positive_count);
    for (int i = 0; i < roots_.positive_count; ++i) id[i] = static_cast<std::uint16_t>(i);
    identity_ = CoxeterElement(std::move(id), rank_);
    for (int a = 1; a <= rank_; ++a) reflections_.push_back(right_multiply_atom(identity_, a));
    w0_ = longest_element(all_atoms());
    fingerprint_ = std::hash<std::string>{}(name_);
  }

  const std::string& name() const { return name_; }
  const FamilyTag& tag() const { return tag_; }
  int rank() const { return rank_; }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const RootSystemModel& roots() const { return roots_; }
  int positive_root_count() const { return roots_.positive_count; }
  AtomSet all_atoms() const { return AtomSet::first(rank_); }
  std::uint64_t fingerprint() const { return fingerprint_; }
  bool commute(int s, int t) const { return matrix_.commute(s, t); }

  const CoxeterElement& identity() const { return identity_; }
  const CoxeterElement& reflection(int atom) const { return reflections_.at(atom - 1); }
  const CoxeterElement& longest_element() const { return w0_; }

  CoxeterElement multiply(const CoxeterElement& u, const CoxeterElement& v) const {
    const int n = roots_.positive_count;
    std::vector<std::uint16_t> out(n);
    for (int i = 0; i < n; ++i) out[i] = apply(u, v.img_[i]);
    return CoxeterElement(std::move(out), rank_);
  }

  CoxeterElement inverse(const CoxeterElement& u) const {
    const int n = roots_.positive_count;
    std::vector<std::uint16_t> out(n);
    for (int i = 0; i < n; ++i) {
      const int k = u.img_[i];
      if (k < n)
        out[k] = static_cast<std::uint16_t>(i);
      else
        out[k - n] = static_cast<std::uint16_t>(i + n);
    }
    return CoxeterElement(std::move(out), rank_);
  }

  /// s_atom * w
  CoxeterElement left_multiply_atom(int atom, const CoxeterElement& w) const {
    const auto& act = roots_.action[atom - 1];
    std::vector<std::uint16_t> out(w.img_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = act[w.img_[i]];
    return CoxeterElement(std::move(out), rank_);
  }

  /// w * s_atom
  CoxeterElement right_multiply_atom(const CoxeterElement& w, int atom) const {
    const auto& act = roots_.action[atom - 1];
    const int n = roots_.positive_count;
    std::vector<std::uint16_t> out(n);
    for (int i = 0; i < n; ++i) out[i] = apply(w, act[i]);
    return CoxeterElement(std::move(out), rank_);
  }

  /// Longest element of the parabolic subgroup W_X.
  CoxeterElement longest_element(AtomSet x) const {
    CoxeterElement w = identity_;
    while (true) {
      const AtomSet grow = x - w.right_descents();
      if (grow.empty()) return w;
      w = right_multiply_atom(w, grow.lowest());
    }
  }

  AtomSet descents(const CoxeterElement& w, Side side) const { return w.descents(side); }

  /// Reduced word, extracting the smallest left descent first.
  std::vector<int> reduced_word(CoxeterElement w) const {
    std::vector<int> word;
    while (!w.is_identity()) {
      const int s = w.left_descents().lowest();
      word.push_back(s);
      w = left_multiply_atom(s, w);
    }
    return word;
  }

  AtomSet support(const CoxeterElement& w) const {
    std::uint32_t bits = 0;
    for (int s : reduced_word(w)) bits |= 1u << (s - 1);
    return AtomSet(bits);
  }

  /// Product of the reflections named by a positive word.
  CoxeterElement from_word(std::span<const int> letters) const {
    CoxeterElement w = identity_;
    for (int s : letters) {
      check_atom(s);
      w = right_multiply_atom(w, s);
    }
    return w;
  }

  /// Conjugate (w0_X) w (w0_X).
  CoxeterElement conjugate_by_longest(const CoxeterElement& w, AtomSet x) const {
    const CoxeterElement w0x = longest_element(x);
    return multiply(multiply(w0x, w), w0x);
  }

  /// All elements of W_X in canonical order (guarded by `limit`).
  std::vector<CoxeterElement> enumerate(AtomSet x, std::size_t limit = 2'000'000) const {
    std::unordered_set<CoxeterElement, CoxeterElementHash> seen{identity_};
    std::vector<CoxeterElement> out{identity_};
    const auto gens = x.atoms();
    for (std::size_t q = 0; q < out.size(); ++q) {
      for (int s : gens) {
        CoxeterElement v = right_multiply_atom(out[q], s);
        if (seen.insert(v).second) {
          if (out.size() >= limit) throw Error("budget_exceeded", "Coxeter group enumeration exceeds budget");
          out.push_back(std::move(v));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void check_atom(int s) const {
    if (s < 1 || s > rank_)
      throw Error("bad_atom", "atom " + std::to_string(s) + " out of range for " + name_);
  }
  void check_atoms(AtomSet x) const {
    if (!x.subset_of(all_atoms())) throw Error("bad_atom", "atom set " + x.to_string() + " out of range for " + name_);
  }

 private:
  std::uint16_t apply(const CoxeterElement& u, std::uint16_t r) const {
    const int n = roots_.positive_count;
    if (r < n) return u.img_[r];
    return roots_.negate(u.img_[r - n]);
  }

  static RootSystemModel build_model(const CoxeterMatrix& cm) {
    const int n = cm.rank();
    bool golden = false, integral = true;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const int m = cm(i, j);
        if (m == 5) golden = true;
        else if (m != 2 && m != 3 && m != 4 && m != 6) integral = false;
      }
    if (!integral) {
      if (n != 2) throw Error("not_finite_type", "unsupported edge label");
      return build_dihedral_model(cm(1, 2));
    }
    auto entries = [&](auto zero, auto phi) {
      using R = decltype(zero);
      std::vector<std::vector<R>> a(n, std::vector<R>(n, zero));
      for (int i = 0; i < n; ++i) {
        a[i][i] = R(2);
        for (int j = i + 1; j < n; ++j) {
          switch (cm(i + 1, j + 1)) {
            case 3: a[i][j] = a[j][i] = R(-1); break;
            case 4: a[i][j] = R(-1); a[j][i] = R(-2); break;
            case 6: a[i][j] = R(-1); a[j][i] = R(-3); break;
            case 5: a[i][j] = a[j][i] = R(0) - phi; break;
            default: break;
          }
        }
      }
      return a;
    };
    if (golden)
      return build_root_model(entries(GoldenInteger(0), GoldenInteger::phi()), RootSystemModel::Ring::golden);
    return build_root_model(entries(std::int64_t{0}, std::int64_t{0}), RootSystemModel::Ring::integer);
  }

  FamilyTag tag_;
  std::string name_;
  CoxeterMatrix matrix_;
  RootSystemModel roots_;
  int rank_ = 0;
  CoxeterElement identity_;
  std::vector<CoxeterElement> reflections_;
  CoxeterElement w0_;
  std::uint64_t fingerprint_ = 0;
};

using SystemPtr = std::shared_ptr<const ArtinSystem>;

/// Parses "A3", "B4", "D5", "E6".."E8", "F4", "H3", "H4", "I2(7)" (aliases
/// B2 = I2(4), H2 = I2(5), G2 = I2(6)).
inline SystemPtr parse_system(std::string_view spec) {
  std::string s(spec);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  auto fail = [&](const std::string& kind, const std::string& why) { return Error(kind, "'" + s + "': " + why); };
  if (s.empty()) throw fail("unknown_family", "empty system name");
  if (s == "B2") s = "I2(4)";
  if (s == "H2") s = "I2(5)";
  if (s == "G2") s = "I2(6)";

  auto parse_int = [&](const std::string& digits) {
    if (digits.empty() || digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw fail("unknown_family", "malformed rank");
    return std::stoi(digits);
  };
  FamilyTag tag;
  const char f = s[0];
  if (f == 'I') {
    if (s.size() < 5 || s.substr(0, 3) != "I2(" || s.back() != ')') throw fail("unknown_family", "expected I2(m)");
    tag = {Family::I2, 2, parse_int(s.substr(3, s.size() - 4))};
    if (tag.m < 3) throw fail("rank_out_of_range", "I2(m) requires m >= 3");
    if (tag.m > 1000) throw fail("rank_out_of_range", "I2(m) requires m <= 1000");
    return std::make_shared<const ArtinSystem>(tag, tag.name());
  }
  const int n = parse_int(s.substr(1));
  switch (f) {
    case 'A':
      if (n < 1 || n > 15) throw fail("rank_out_of_range", "A(n) requires 1 <= n <= 15");
      tag = {Family::A, n, 0};
      break;
    case 'B':
      if (n < 3 || n > 11) throw fail("rank_out_of_range", "B(n) requires 2 <= n <= 11 (B2 is I2(4))");
      tag = {Family::B, n, 0};
      break;
    case 'D':
      if (n < 3 || n > 11) throw fail("rank_out_of_range", "D(n) requires 3 <= n <= 11");
      tag = {Family::D, n, 0};
      break;
    case 'E':
      if (n < 6 || n > 8) throw fail("rank_out_of_range", "E(n) requires 6 <= n <= 8");
      tag = {Family::E, n, 0};
      break;
    case 'F':
      if (n != 4) throw fail("rank_out_of_range", "F(n) requires n = 4");
      tag = {Family::F, 4, 0};
      break;
    case 'H':
      if (n != 3 && n != 4) throw fail("rank_out_of_range", "H(n) requires n in {3, 4}");
      tag = {Family::H, n, 0};
      break;
    default:
      throw fail("unknown_family", "unknown family");
  }
  return std::make_shared<const ArtinSystem>(tag, tag.name());
}

}  // namespace garside
