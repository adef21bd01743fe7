#pragma once

// Small vocabulary types shared by every module.

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace garside {

/// Domain error with a machine-readable kind ("reducible", "not_positive", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

enum class Side { left, right };
enum class Order { prefix, suffix };
enum class LatticeOp { meet, join };

/// Set of atoms, atom i (1-based) stored at bit i-1.
class AtomSet {
 public:
  constexpr AtomSet() = default;
  constexpr explicit AtomSet(std::uint32_t bits) : bits_(bits) {}

  static AtomSet of(const std::vector<int>& atoms) {
    AtomSet s;
    for (int a : atoms) {
      if (a < 1 || a > 32) throw Error("bad_atom", "atom index out of range: " + std::to_string(a));
      s.bits_ |= 1u << (a - 1);
    }
    return s;
  }
  static constexpr AtomSet first(int rank) {
    return AtomSet(rank >= 32 ? 0xffffffffu : ((1u << rank) - 1u));
  }
  static constexpr AtomSet single(int atom) { return AtomSet(1u << (atom - 1)); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int atom) const { return (bits_ >> (atom - 1)) & 1u; }
  constexpr bool subset_of(AtomSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Smallest atom in the set; 0 when empty.
  constexpr int lowest() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  std::vector<int> atoms() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr AtomSet operator|(AtomSet a, AtomSet b) { return AtomSet(a.bits_ | b.bits_); }
  friend constexpr AtomSet operator&(AtomSet a, AtomSet b) { return AtomSet(a.bits_ & b.bits_); }
  friend constexpr AtomSet operator-(AtomSet a, AtomSet b) { return AtomSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(AtomSet, AtomSet) = default;
  friend constexpr auto operator<=>(AtomSet, AtomSet) = default;

  std::string to_string() const {
    std::string s = "{";
    bool first_atom = true;
    for (int a : atoms()) {
      if (!first_atom) s += ",";
      s += std::to_string(a);
      first_atom = false;
    }
    return s + "}";
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Word in the atoms and their inverses: i stands for sigma_i, -i for its inverse.
struct AtomWord {
  std::vector<int> letters;

  /// Whitespace- or comma-separated nonzero integers.
  static AtomWord parse(std::string_view text) {
    AtomWord w;
    std::string buf(text);
    for (char& c : buf)
      if (c == ',') c = ' ';
    std::istringstream in(buf);
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw Error("bad_word", "not an atom letter: '" + tok + "'");
      }
      if (used != tok.size() || v == 0) throw Error("bad_word", "not an atom letter: '" + tok + "'");
      w.letters.push_back(v);
    }
    return w;
  }

  bool positive() const {
    for (int l : letters)
      if (l < 0) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(letters[i]);
    }
    return s;
  }

  friend bool operator==(const AtomWord&, const AtomWord&) = default;
};

/// Parses "1,3" / "1 3" / "[1,3]" / "" into an atom set.
inline AtomSet parse_atom_set(std::string_view text) {
  std::string buf(text);
  for (char& c : buf)
    if (c == ',' || c == '[' || c == ']' || c == '{' || c == '}') c = ' ';
  std::vector<int> atoms;
  std::istringstream in(buf);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error("bad_atom_set", "not an atom: '" + tok + "'");
    }
    if (used != tok.size()) throw Error("bad_atom_set", "not an atom: '" + tok + "'");
    atoms.push_back(v);
  }
  return AtomSet::of(atoms);
}

}  // namespace garside
