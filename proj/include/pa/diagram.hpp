#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pa {

/// A box colour: 0+, 0- or a positive integer n (2n marked points).
/// A bare 0 always means 0+.
class Colour {
 public:
  constexpr Colour() = default;
  constexpr Colour(int n) : n_(n) {}  // NOLINT: ints convert to their colour
  static constexpr Colour zero_minus() {
    Colour c;
    c.minus_ = true;
    return c;
  }

  constexpr int n() const { return n_; }
  constexpr int points() const { return 2 * n_; }
  constexpr bool is_zero_minus() const { return minus_; }

  constexpr bool operator==(const Colour& o) const { return n_ == o.n_ && minus_ == o.minus_; }
  constexpr bool operator!=(const Colour& o) const { return !(*this == o); }

  std::string str() const;
  /// Accepts "0", "0+", "0-" or a non-negative integer.
  static Colour parse(const std::string& s);

 private:
  int n_ = 0;
  bool minus_ = false;
};

/// A Temperley-Lieb diagram: a non-crossing perfect matching of the points
/// 1..2n of a box, read clockwise from the marked corner. Stored 0-based:
/// match()[i] == j means point i+1 is joined to point j+1.
class Diagram {
 public:
  Diagram() = default;
  /// Throws PreconditionError unless `match` is a fixed-point-free,
  /// non-crossing involution.
  explicit Diagram(std::vector<uint8_t> match);
  /// From 1-based pairs, e.g. {{1,4},{2,3}}.
  static Diagram from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  /// The identity of P_n: i <-> 2n+1-i.
  static Diagram identity(int n);

  int colour() const { return static_cast<int>(match_.size() / 2); }
  int points() const { return static_cast<int>(match_.size()); }
  const std::vector<uint8_t>& match() const { return match_; }
  /// 1-based partner of 1-based point p.
  int partner(int p) const { return match_[static_cast<size_t>(p - 1)] + 1; }

  /// 1-based pairs with the smaller endpoint first, sorted.
  std::vector<std::pair<int, int>> pairs() const;

  /// Reflection i -> 2n+1-i.
  Diagram reflected() const;
  /// Relabels point p as p + shift (mod 2n).
  Diagram rotated(int shift) const;

  auto operator<=>(const Diagram&) const = default;
  bool operator==(const Diagram&) const = default;

  std::string str() const;

 private:
  std::vector<uint8_t> match_;
};

bool is_noncrossing(const std::vector<uint8_t>& match);

long catalan(int n);

/// Largest colour enumerate_diagrams will produce (default 10).
int colour_cap();
void set_colour_cap(int cap);

/// All diagrams of colour n in lexicographic order of their match arrays.
/// Cached per colour; the returned reference stays valid for the process.
const std::vector<Diagram>& enumerate_diagrams(int n);

/// Index of d within enumerate_diagrams(d.colour()).
size_t diagram_index(const Diagram& d);

}  // namespace pa
