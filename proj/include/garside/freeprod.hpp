#pragma once

// Bounded certification of free products <A_X, g> = A_X * <g>, the search for
// a complement g, the hyperbolicity constants, the Delzant predicate and
// orbit bounds for normalizers.

#include <algorithm>
#include <cmath>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cal_graph.hpp"
#include "detail/budget.hpp"
#include "detail/parallel.hpp"

namespace garside {

struct TheoremConstants {
  static constexpr int delta = 60;
  static constexpr int g_length_bound = 12;
  static constexpr int orbit_bound_parabolic = 3;
  static constexpr int orbit_bound_normalizer = 9;
  static constexpr long long N(long long kappa) { return 4 * kappa + 319; }
  static constexpr long long F(long long kappa) { return 8 * kappa + 638; }
};

/// One syllable of an alternating word: an element t of A_X or a power g^n.
struct Syllable {
  bool is_power = false;
  int exponent = 0;  // power syllables
  GroupElement t;    // parabolic syllables

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend std::strong_ordering operator<=>(const Syllable& a, const Syllable& b) {
    if (auto c = a.is_power <=> b.is_power; c != 0) return c;
    if (auto c = a.exponent <=> b.exponent; c != 0) return c;
    return a.t <=> b.t;
  }
};

struct FreeProductCertificate {
  AtomSet x;
  GroupElement g;
  int syllable_depth = 0;   // L
  int parabolic_radius = 0; // R
  int exponent_bound = 0;   // E
  bool verified = false;
  std::optional<std::vector<Syllable>> witness;
  bool witness_reevaluated = false;
  std::size_t parabolic_elements = 0;
  std::size_t half_words = 0;
};

/// Elements of A_X \ {1} with Garside length <= radius, in canonical order
/// of their normal forms inside A_X.
inline std::vector<GroupElement> parabolic_ball(const Garside& g, AtomSet x, int radius,
                                                std::size_t budget = detail::budget(2'000'000)) {
  const Garside sub(g.system_ptr(), x);
  std::vector<std::vector<Simple>> all{{}};
  const std::vector<Simple> states = sub.proper_simples(budget);
  std::vector<std::vector<Simple>> layer{{}};
  for (int r = 1; r <= radius; ++r) {
    std::vector<std::vector<Simple>> next;
    for (const auto& seq : layer)
      for (const auto& s : states)
        if (seq.empty() || sub.is_left_weighted(seq.back(), s)) {
          next.push_back(seq);
          next.back().push_back(s);
          if (all.size() + next.size() > budget) throw Error("budget_exceeded", "parabolic ball exceeds its budget");
        }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<GroupElement> local;
  for (const auto& seq : all) {
    const int r = static_cast<int>(seq.size());
    // geodesic length max(k + r, 0) - min(k, 0) <= radius
    for (int k = -radius; k <= radius; ++k) {
      if (std::max(k + r, 0) - std::min(k, 0) > radius) continue;
      if (k == 0 && r == 0) continue;
      local.push_back(GroupElement{sub.owner(), k, seq});
    }
  }
  std::sort(local.begin(), local.end());
  std::vector<GroupElement> out(local.size());
  detail::parallel_for(local.size(), [&](std::size_t i) { out[i] = from_sub(g, sub, local[i]); });
  return out;
}

namespace detail {

struct HalfWord {
  std::vector<int> syllables;  // index into the syllable table
  GroupElement value;
};

}  // namespace detail

/// Checks every reduced alternating word with at most L syllables (parabolic
/// syllables t of Garside length <= R, power syllables g^n with 0 < |n| <= E)
/// for triviality, by meeting halves of at most ceil(L/2) syllables in the
/// middle. t = 1 only occurs between powers of the same sign. `ball` is
/// parabolic_ball(g, x, R), shared across calls by search_candidate.
inline FreeProductCertificate verify_free_product(const Garside& g, AtomSet x, const GroupElement& gen, int L, int R,
                                                  int E, const std::vector<GroupElement>& ball,
                                                  std::size_t budget = detail::budget(3'000'000)) {
  g.system().check_atoms(x);
  if (x == g.atoms()) throw Error("precondition", "X must be a proper subset of the atoms");
  if (member(g, gen, x)) throw Error("precondition", "g lies in A_" + x.to_string());
  if (L < 1 || R < 0 || E < 1) throw Error("precondition", "need L >= 1, R >= 0, E >= 1");

  FreeProductCertificate cert;
  cert.x = x;
  cert.g = gen;
  cert.syllable_depth = L;
  cert.parabolic_radius = R;
  cert.exponent_bound = E;

  std::vector<Syllable> table;
  std::vector<GroupElement> values;
  for (const auto& t : ball) {
    table.push_back(Syllable{false, 0, t});
    values.push_back(t);
  }
  cert.parabolic_elements = table.size();
  // t = 1 is allowed strictly inside a word between powers of the same sign.
  const int unit = static_cast<int>(table.size());
  table.push_back(Syllable{false, 0, g.identity()});
  values.push_back(g.identity());
  const std::size_t first_power = table.size();
  for (int n = -E; n <= E; ++n) {
    if (n == 0) continue;
    table.push_back(Syllable{true, n, {}});
    values.push_back(g.power(gen, n));
  }
  auto is_power = [&](int idx) { return static_cast<std::size_t>(idx) >= first_power; };
  auto unit_ok = [&](const std::vector<int>& w, std::size_t i) {
    if (w[i] != unit) return true;
    if (i == 0 || i + 1 == w.size()) return false;
    return (table[w[i - 1]].exponent > 0) == (table[w[i + 1]].exponent > 0);
  };
  auto valid_word = [&](const std::vector<int>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!unit_ok(w, i)) return false;
    return true;
  };

  // All reduced alternating half-words with 1..h syllables.
  const int h = (L + 1) / 2;
  std::vector<detail::HalfWord> halves;
  std::vector<detail::HalfWord> layer;
  for (std::size_t i = 0; i < table.size(); ++i) layer.push_back({{static_cast<int>(i)}, values[i]});
  for (int len = 1; len <= h; ++len) {
    halves.insert(halves.end(), layer.begin(), layer.end());
    if (halves.size() > budget) throw Error("budget_exceeded", "free-product enumeration exceeds its budget");
    if (len == h) break;
    std::vector<std::vector<detail::HalfWord>> grown(layer.size());
    detail::parallel_for(layer.size(), [&](std::size_t i) {
      const bool last_power = is_power(layer[i].syllables.back());
      for (std::size_t j = 0; j < table.size(); ++j) {
        if (is_power(static_cast<int>(j)) == last_power) continue;
        detail::HalfWord w = layer[i];
        w.syllables.push_back(static_cast<int>(j));
        const std::size_t n = w.syllables.size();
        if (n >= 3 && w.syllables[n - 2] == unit && !unit_ok(w.syllables, n - 2)) continue;
        w.value = g.multiply(w.value, values[j]);
        grown[i].push_back(std::move(w));
      }
    });
    layer.clear();
    for (auto& batch : grown)
      for (auto& w : batch) layer.push_back(std::move(w));
  }
  cert.half_words = halves.size();

  std::unordered_map<GroupElement, std::vector<std::size_t>, GroupElementHash> by_value;
  for (std::size_t i = 0; i < halves.size(); ++i) by_value[halves[i].value].push_back(i);

  auto word_less = [&](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return table[a[i]] < table[b[i]];
    return false;
  };

  // Word P.S is trivial iff value(P) = value(S)^{-1}; |S| <= |P| <= |S| + 1.
  std::vector<std::optional<std::vector<int>>> best(halves.size() + 1);
  detail::parallel_for(halves.size() + 1, [&](std::size_t si) {
    const bool empty_suffix = si == halves.size();
    const GroupElement target = empty_suffix ? g.identity() : g.inverse(halves[si].value);
    const auto it = by_value.find(target);
    if (it == by_value.end()) return;
    const std::size_t slen = empty_suffix ? 0 : halves[si].syllables.size();
    for (std::size_t pi : it->second) {
      const auto& p = halves[pi].syllables;
      if (p.size() != slen && p.size() != slen + 1) continue;
      if (p.size() + slen > static_cast<std::size_t>(L)) continue;
      std::vector<int> w = p;
      if (!empty_suffix) {
        if (is_power(p.back()) == is_power(halves[si].syllables.front())) continue;
        w.insert(w.end(), halves[si].syllables.begin(), halves[si].syllables.end());
      }
      if (!valid_word(w)) continue;
      if (!best[si] || word_less(w, *best[si])) best[si] = std::move(w);
    }
  });
  std::optional<std::vector<int>> witness;
  for (auto& b : best)
    if (b && (!witness || word_less(*b, *witness))) witness = std::move(b);

  cert.verified = !witness.has_value();
  if (witness) {
    std::vector<Syllable> syl;
    AtomWord spelled;
    for (int idx : *witness) {
      syl.push_back(table[idx]);
      const GroupElement v = table[idx].is_power ? g.power(gen, table[idx].exponent) : table[idx].t;
      const AtomWord part = g.word(v);
      spelled.letters.insert(spelled.letters.end(), part.letters.begin(), part.letters.end());
    }
    cert.witness = std::move(syl);
    cert.witness_reevaluated = g.normalize(spelled).is_identity();
  }
  return cert;
}

inline FreeProductCertificate verify_free_product(const Garside& g, AtomSet x, const GroupElement& gen, int L, int R,
                                                  int E, std::size_t budget = detail::budget(3'000'000)) {
  g.system().check_atoms(x);
  if (x == g.atoms()) throw Error("precondition", "X must be a proper subset of the atoms");
  if (R < 0) throw Error("precondition", "need R >= 0");
  return verify_free_product(g, x, gen, L, R, E, parabolic_ball(g, x, R), budget);
}

inline Json to_json(const Garside& g, const Syllable& s) {
  if (s.is_power) return Json{{"power", s.exponent}};
  return Json{{"parabolic", to_json(g, s.t)}};
}

/// Certificate with every parameter that produced it.
inline Json to_json(const Garside& g, const FreeProductCertificate& c) {
  Json out{{"system", g.system().name()},
           {"x", atom_set_json(c.x)},
           {"g", to_json(g, c.g)},
           {"L", c.syllable_depth},
           {"R", c.parabolic_radius},
           {"E", c.exponent_bound},
           {"parabolic_elements", c.parabolic_elements},
           {"half_words", c.half_words},
           {"verified", c.verified}};
  if (c.witness) {
    Json w = Json::array();
    for (const auto& s : *c.witness) w.push_back(to_json(g, s));
    out["witness"] = w;
    out["witness_reevaluated"] = c.witness_reevaluated;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

struct CandidateSearch {
  std::optional<GroupElement> candidate;
  std::size_t tested = 0;
};

/// First positive element of infimum 0 and full support, by increasing sup,
/// rigid ones (s_r . s_1 left-weighted) first, then by normal form, that
/// passes verify_free_product against every maximal proper parabolic.
inline CandidateSearch search_candidate(const Garside& g, int len_bound, int L, int R, int E,
                                        std::size_t max_candidates = detail::budget(20'000)) {
  CandidateSearch out;
  const ArtinSystem& sys = g.system();
  if (sys.rank() < 3) return out;
  const std::vector<Simple> states = g.proper_simples();
  std::vector<std::vector<GroupElement>> balls;
  for (int a = 1; a <= sys.rank(); ++a) balls.push_back(parabolic_ball(g, g.atoms() - AtomSet::single(a), R));
  std::vector<std::vector<Simple>> layer;
  for (const auto& s : states) layer.push_back({s});
  for (int sup = 1; sup <= len_bound && !layer.empty(); ++sup) {
    std::vector<std::pair<bool, std::vector<Simple>>> ordered;
    for (const auto& seq : layer) {
      AtomSet supp;
      for (const auto& s : seq) supp = supp | sys.support(s);
      if (supp != g.atoms()) continue;
      ordered.emplace_back(!g.is_left_weighted(seq.back(), seq.front()), seq);
    }
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [non_rigid, seq] : ordered) {
      if (++out.tested > max_candidates) throw Error("budget_exceeded", "candidate search exceeds its budget");
      GroupElement cand = g.identity();
      cand.factors = seq;
      bool ok = true;
      for (int a = 1; a <= sys.rank() && ok; ++a)
        ok = verify_free_product(g, g.atoms() - AtomSet::single(a), cand, L, R, E, balls[a - 1]).verified;
      if (ok) {
        out.candidate = cand;
        return out;
      }
    }
    if (sup == len_bound) break;
    std::vector<std::vector<Simple>> next;
    for (const auto& seq : layer)
      for (const auto& s : states)
        if (g.is_left_weighted(seq.back(), s)) {
          next.push_back(seq);
          next.back().push_back(s);
        }
    layer = std::move(next);
  }
  return out;
}

struct DelzantResult {
  bool hypothesis = false;
  bool conclusion = false;
};

/// Literal evaluation of the Delzant hypothesis
/// d(x_{n+2}, x_n) >= max(d(x_{n+2}, x_{n+1}), d(x_{n+1}, x_n)) + 2 delta + a
/// and conclusion d(x_n, x_m) >= a |m - n| on a finite sequence.
inline DelzantResult delzant_check(const std::vector<std::vector<double>>& d, double a, double delta) {
  const std::size_t n = d.size();
  for (const auto& row : d)
    if (row.size() != n) throw Error("bad_matrix", "distance matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(d[i][j] >= 0) || !std::isfinite(d[i][j])) throw Error("bad_matrix", "distances must be finite and >= 0");
      if (d[i][j] != d[j][i]) throw Error("bad_matrix", "distance matrix must be symmetric");
      if (i == j && d[i][j] != 0) throw Error("bad_matrix", "distance matrix must have zero diagonal");
    }
  DelzantResult out{true, true};
  for (std::size_t i = 0; i + 2 < n; ++i)
    if (d[i + 2][i] < std::max(d[i + 2][i + 1], d[i + 1][i]) + 2 * delta + a) out.hypothesis = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i][j] < a * std::abs(static_cast<double>(j) - static_cast<double>(i))) out.conclusion = false;
  return out;
}

/// Certified upper bounds on d(base vertex, h^i base vertex), i = 1..n, for h
/// normalizing A_X.
inline std::vector<int> elliptic_orbit_report(const Garside& g, const GroupElement& h, AtomSet x, int n) {
  if (n < 1) throw Error("precondition", "n must be >= 1");
  if (x.empty() || x == g.atoms()) throw Error("not_proper", "X must be a nonempty proper subset");
  const GroupElement central = g.power(sub_delta(g, x), central_exponent(g.system(), x));
  if (g.multiply(g.multiply(g.inverse(h), central), h) != central)
    throw Error("not_normalizing", "element does not normalize A_" + x.to_string());
  const CalVertex base = base_vertex(g);
  std::vector<int> out;
  GroupElement hi = g.identity();
  for (int i = 1; i <= n; ++i) {
    hi = g.multiply(hi, h);
    const CalVertex v = vertex_of(g, hi);
    if (v == base) {
      out.push_back(0);
    } else if (member(g, hi, x)) {
      out.push_back(distance_upper_bound(g, base, v, decompose_parabolic(g, hi, x)));
    } else {
      out.push_back(distance_upper_bound(g, base, v, decompose_normalizer(g, hi, x)));
    }
  }
  return out;
}

}  // namespace garside
