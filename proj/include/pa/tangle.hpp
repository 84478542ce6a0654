#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pa/element.hpp"

namespace pa {

/// Signals a broken internal invariant (e.g. a crossing output diagram).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A marked point: box 0 is the external box, boxes 1..b are internal.
/// Indices are 1-based and run clockwise from the box's marked region.
struct Point {
  int box = 0;
  int index = 1;
  auto operator<=>(const Point&) const = default;
  std::string str() const;
};

/// A planar tangle: an external box, ordered internal boxes, a perfect
/// matching of all marked points, and a count of free closed loops.
class Tangle {
 public:
  Tangle() = default;
  Tangle(Colour ext, std::vector<Colour> boxes);

  Colour ext() const { return ext_; }
  const std::vector<Colour>& boxes() const { return boxes_; }
  int num_boxes() const { return static_cast<int>(boxes_.size()); }
  Colour box_colour(int box) const { return box == 0 ? ext_ : boxes_.at(static_cast<size_t>(box - 1)); }
  int loops() const { return loops_; }
  void set_loops(int loops) { loops_ = loops; }
  void add_loops(int loops) { loops_ += loops; }

  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names) { names_ = std::move(names); }
  std::string box_name(int box) const;

  /// Joins two unmatched points; throws PreconditionError otherwise.
  void join(Point a, Point b);
  std::optional<Point> partner(Point p) const;
  Point mate(Point p) const;
  /// True when every marked point is matched.
  bool complete() const;
  /// Each strand once, smaller endpoint first, sorted.
  std::vector<std::pair<Point, Point>> strands() const;

  bool operator==(const Tangle& o) const;

  /// Textual form accepted by parse_tangle.
  std::string to_dsl() const;

 private:
  std::vector<Point>& slot(int box);
  const std::vector<Point>& slot(int box) const;

  Colour ext_;
  std::vector<Colour> boxes_;
  std::vector<std::string> names_;
  // partner_[box][index-1]; box < 0 marks an unmatched point.
  std::vector<std::vector<Point>> partner_;
  int loops_ = 0;
};

/// Parses the tangle DSL: one declaration per line,
///   ext <colour> | box <name> <colour> | strand <pt>-<pt> ... | loops <count>
/// with points e<i> or <name>.<i>. '#' starts a comment.
Tangle parse_tangle(const std::string& text);

struct Violation {
  enum class Kind { incomplete, parity, planarity };
  Kind kind;
  std::string message;
  std::optional<std::pair<Point, Point>> strand;
};

/// Planarity by Euler characteristic of the rotation system, then shading
/// parity. std::nullopt means the tangle is valid.
std::optional<Violation> validate(const Tangle& t);
/// Throws PreconditionError carrying the violation message.
void require_valid(const Tangle& t);

/// Euler characteristic V - E + F summed over components, and the component
/// count. A valid tangle has chi == 2 * components.
struct EulerData {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int components = 0;
  int chi() const { return vertices - edges + faces; }
};
EulerData euler_data(const Tangle& t);

/// Operadic composition: substitutes assignments[i] into internal box i.
/// Boxes are renumbered by replacing each substituted box with the internal
/// boxes of its tangle, in order.
Tangle substitute(const Tangle& outer, const std::map<int, Tangle>& assignments);

/// The reflected tangle: every box relabelled by i -> 2n+1-i.
Tangle adjoint(const Tangle& t);

/// Multilinear evaluation Z_T over the Temperley-Lieb model. `ring` is used
/// for tangles without inputs and must match the inputs otherwise.
Element evaluate(const Tangle& t, std::span<const Element> inputs, const Ring& ring);
Element evaluate(const Tangle& t, std::span<const Element> inputs);
Element evaluate(const Tangle& t, const Ring& ring);
Element evaluate(const Tangle& t, const Element& x);
Element evaluate(const Tangle& t, const Element& x, const Element& y);

}  // namespace pa
