#pragma once

// Oracles that share no code with the library's algorithms: a floating-point
// reflection representation enumerated by breadth-first search, braid
// relation closure on positive words, and small helpers for random input.

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <random>
#include <string>
#include <vector>

#include "garside.hpp"

namespace oracle {

using garside::AtomWord;
using garside::CoxeterMatrix;

/// W acting on R^n through s_i(a_j) = a_j - 2 B(i,j) a_i, B(i,j) = -cos(pi/m).
class ReflectionGroup {
 public:
  using Matrix = std::vector<double>;
  using Key = std::vector<std::int64_t>;

  explicit ReflectionGroup(const CoxeterMatrix& m, std::size_t cap = 20000) : n_(m.rank()) {
    for (int i = 0; i < n_; ++i) {
      Matrix s = identity();
      for (int j = 0; j < n_; ++j) {
        const double b = i == j ? 1.0 : -std::cos(M_PI / m(i + 1, j + 1));
        s[i * n_ + j] -= 2 * b;  // row i of column j
      }
      gens_.push_back(s);
    }
    add(identity(), {}, 0);
    std::vector<std::size_t> frontier{0};
    for (int len = 1; !frontier.empty(); ++len) {
      std::vector<std::size_t> next;
      for (std::size_t f : frontier)
        for (int a = 1; a <= n_; ++a) {
          Matrix w = mul(elements_[f], gens_[a - 1]);
          if (length_.count(key(w))) continue;
          std::vector<int> word = words_[f];
          word.push_back(a);
          next.push_back(elements_.size());
          add(std::move(w), std::move(word), len);
          if (elements_.size() > cap) throw std::runtime_error("reflection group too large");
        }
      frontier = std::move(next);
    }
  }

  std::size_t order() const { return elements_.size(); }
  /// A reduced word for each element, in breadth-first order.
  const std::vector<std::vector<int>>& words() const { return words_; }

  Matrix of(const std::vector<int>& word) const {
    Matrix w = identity();
    for (int a : word) w = mul(w, gens_[std::abs(a) - 1]);
    return w;
  }
  int length(const std::vector<int>& word) const { return length_.at(key(of(word))); }
  bool same(const std::vector<int>& u, const std::vector<int>& v) const { return key(of(u)) == key(of(v)); }

  std::vector<int> right_descents(const std::vector<int>& word) const {
    std::vector<int> out;
    const int l = length(word);
    for (int a = 1; a <= n_; ++a) {
      auto w = word;
      w.push_back(a);
      if (length(w) < l) out.push_back(a);
    }
    return out;
  }
  std::vector<int> left_descents(const std::vector<int>& word) const {
    std::vector<int> out;
    const int l = length(word);
    for (int a = 1; a <= n_; ++a) {
      std::vector<int> w{a};
      w.insert(w.end(), word.begin(), word.end());
      if (length(w) < l) out.push_back(a);
    }
    return out;
  }
  /// u is a prefix of v in the weak order: l(u) + l(u^{-1} v) = l(v).
  bool prefix(const std::vector<int>& u, const std::vector<int>& v) const {
    std::vector<int> w(u.rbegin(), u.rend());
    w.insert(w.end(), v.begin(), v.end());
    return length(u) + length(w) == length(v);
  }

 private:
  void add(Matrix w, std::vector<int> word, int len) {
    length_[key(w)] = len;
    words_.push_back(std::move(word));
    elements_.push_back(std::move(w));
  }
  Matrix identity() const {
    Matrix m(n_ * n_, 0.0);
    for (int i = 0; i < n_; ++i) m[i * n_ + i] = 1.0;
    return m;
  }
  Matrix mul(const Matrix& a, const Matrix& b) const {
    Matrix c(n_ * n_, 0.0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k)
        for (int j = 0; j < n_; ++j) c[i * n_ + j] += a[i * n_ + k] * b[k * n_ + j];
    return c;
  }
  static Key key(const Matrix& m) {
    Key k;
    for (double v : m) k.push_back(std::llround(v * 1e6));
    return k;
  }

  int n_;
  std::vector<Matrix> gens_;
  std::map<Key, int> length_;
  std::vector<std::vector<int>> words_;
  std::vector<Matrix> elements_;
};

/// Equivalence classes of positive words of length <= max_len under the
/// braid relations, by union-find over single relation moves.
class PositiveWordClasses {
 public:
  PositiveWordClasses(const CoxeterMatrix& m, int max_len) : m_(m) {
    const int r = m.rank();
    std::vector<std::vector<int>> layer{{}};
    add({});
    for (int len = 1; len <= max_len; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : layer)
        for (int a = 1; a <= r; ++a) {
          auto v = w;
          v.push_back(a);
          add(v);
          next.push_back(v);
        }
      layer = std::move(next);
    }
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (const auto& v : moves(words_[i])) unite(i, id_.at(v));
  }

  const std::vector<std::vector<int>>& words() const { return words_; }
  std::size_t class_of(std::size_t i) { return find(i); }

 private:
  void add(const std::vector<int>& w) {
    id_[w] = words_.size();
    words_.push_back(w);
    parent_.push_back(parent_.size());
  }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  std::vector<std::vector<int>> moves(const std::vector<int>& w) const {
    std::vector<std::vector<int>> out;
    const int r = m_.rank();
    for (int s = 1; s <= r; ++s)
      for (int t = 1; t <= r; ++t) {
        if (s == t) continue;
        const int len = m_(s, t);
        for (std::size_t p = 0; p + len <= w.size(); ++p) {
          bool match = true;
          for (int q = 0; q < len && match; ++q) match = w[p + q] == (q % 2 == 0 ? s : t);
          if (!match) continue;
          auto v = w;
          for (int q = 0; q < len; ++q) v[p + q] = q % 2 == 0 ? t : s;
          out.push_back(v);
        }
      }
    return out;
  }

  CoxeterMatrix m_;
  std::map<std::vector<int>, std::size_t> id_;
  std::vector<std::vector<int>> words_;
  std::vector<std::size_t> parent_;
};

inline AtomWord random_word(std::mt19937_64& rng, int rank, int max_len, bool positive = false) {
  std::uniform_int_distribution<int> len(0, max_len), atom(1, rank), sign(0, 1);
  AtomWord w;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) w.letters.push_back(atom(rng) * (positive || sign(rng) ? 1 : -1));
  return w;
}

inline std::vector<int> atoms_of(garside::AtomSet s) { return s.atoms(); }

}  // namespace oracle
