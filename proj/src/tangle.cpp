#include "pa/tangle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace pa {

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::string Point::str() const {
  return box == 0 ? "e" + std::to_string(index) : "b" + std::to_string(box) + "." + std::to_string(index);
}

Tangle::Tangle(Colour ext, std::vector<Colour> boxes) : ext_(ext), boxes_(std::move(boxes)) {
  partner_.resize(boxes_.size() + 1);
  for (int b = 0; b <= num_boxes(); ++b) {
    partner_[static_cast<size_t>(b)].assign(static_cast<size_t>(box_colour(b).points()), Point{-1, 0});
  }
}

std::string Tangle::box_name(int box) const {
  if (box == 0) return "e";
  if (static_cast<size_t>(box) <= names_.size() && !names_[static_cast<size_t>(box - 1)].empty()) {
    return names_[static_cast<size_t>(box - 1)];
  }
  return "b" + std::to_string(box);
}

std::vector<Point>& Tangle::slot(int box) {
  if (box < 0 || box > num_boxes()) throw PreconditionError("no box " + std::to_string(box));
  return partner_[static_cast<size_t>(box)];
}
const std::vector<Point>& Tangle::slot(int box) const {
  if (box < 0 || box > num_boxes()) throw PreconditionError("no box " + std::to_string(box));
  return partner_[static_cast<size_t>(box)];
}

void Tangle::join(Point a, Point b) {
  auto& sa = slot(a.box);
  auto& sb = slot(b.box);
  auto in_range = [](const std::vector<Point>& s, int i) { return i >= 1 && i <= static_cast<int>(s.size()); };
  if (!in_range(sa, a.index)) throw PreconditionError("point " + a.str() + " out of range for its box colour");
  if (!in_range(sb, b.index)) throw PreconditionError("point " + b.str() + " out of range for its box colour");
  if (a == b) throw PreconditionError("strand joins point " + a.str() + " to itself");
  if (sa[a.index - 1].box >= 0) throw PreconditionError("point " + a.str() + " already matched");
  if (sb[b.index - 1].box >= 0) throw PreconditionError("point " + b.str() + " already matched");
  sa[a.index - 1] = b;
  sb[b.index - 1] = a;
}

std::optional<Point> Tangle::partner(Point p) const {
  const auto& s = slot(p.box);
  if (p.index < 1 || p.index > static_cast<int>(s.size())) throw PreconditionError("point out of range");
  Point q = s[p.index - 1];
  if (q.box < 0) return std::nullopt;
  return q;
}

Point Tangle::mate(Point p) const {
  auto q = partner(p);
  if (!q) throw PreconditionError("point " + p.str() + " is unmatched");
  return *q;
}

bool Tangle::complete() const {
  for (const auto& s : partner_) {
    for (const auto& q : s) {
      if (q.box < 0) return false;
    }
  }
  return true;
}

std::vector<std::pair<Point, Point>> Tangle::strands() const {
  std::vector<std::pair<Point, Point>> out;
  for (int b = 0; b <= num_boxes(); ++b) {
    const auto& s = slot(b);
    for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
      Point p{b, i};
      Point q = s[i - 1];
      if (q.box >= 0 && p < q) out.emplace_back(p, q);
    }
  }
  return out;
}

bool Tangle::operator==(const Tangle& o) const {
  return ext_ == o.ext_ && boxes_ == o.boxes_ && loops_ == o.loops_ && partner_ == o.partner_;
}

std::string Tangle::to_dsl() const {
  std::ostringstream os;
  os << "ext " << ext_.str() << "\n";
  for (int b = 1; b <= num_boxes(); ++b) os << "box " << box_name(b) << " " << box_colour(b).str() << "\n";
  auto pt = [this](Point p) {
    return p.box == 0 ? "e" + std::to_string(p.index) : box_name(p.box) + "." + std::to_string(p.index);
  };
  for (auto [a, b] : strands()) os << "strand " << pt(a) << "-" << pt(b) << "\n";
  if (loops_ != 0) os << "loops " << loops_ << "\n";
  return os.str();
}

// ------------------------------------------------------------------ DSL

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> split(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ';') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != ';' && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool is_uint(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Tangle parse_tangle(const std::string& text) {
  struct Pending {
    std::string a, b;
    int line, col_a, col_b;
  };
  std::optional<Colour> ext;
  std::vector<Colour> boxes;
  std::vector<std::string> names;
  std::map<std::string, int> box_ids;
  std::vector<Pending> strands;
  int loops = 0;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  // Statements may be separated by ';' on one line; a 'strand' keyword takes
  // every following token up to the next keyword.
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split(line);
    size_t i = 0;
    while (i < toks.size()) {
      const auto& kw = toks[i];
      auto need = [&](size_t k) -> const Token& {
        if (i + k >= toks.size()) {
          throw ParseError(lineno, kw.column + static_cast<int>(kw.text.size()), "missing argument to '" + kw.text + "'");
        }
        return toks[i + k];
      };
      auto colour_of = [&](const Token& t) {
        try {
          return Colour::parse(t.text);
        } catch (const PreconditionError&) {
          throw ParseError(lineno, t.column, "bad colour '" + t.text + "'");
        }
      };
      if (kw.text == "ext") {
        if (ext) throw ParseError(lineno, kw.column, "external colour declared twice");
        ext = colour_of(need(1));
        i += 2;
      } else if (kw.text == "box") {
        const auto& nm = need(1);
        const auto& col = need(2);
        if (!is_ident(nm.text) || (nm.text[0] == 'e' && is_uint(nm.text.substr(1)))) {
          throw ParseError(lineno, nm.column, "bad box name '" + nm.text + "'");
        }
        if (box_ids.count(nm.text)) throw ParseError(lineno, nm.column, "box '" + nm.text + "' declared twice");
        boxes.push_back(colour_of(col));
        names.push_back(nm.text);
        box_ids[nm.text] = static_cast<int>(boxes.size());
        i += 3;
      } else if (kw.text == "loops") {
        const auto& c = need(1);
        if (!is_uint(c.text)) throw ParseError(lineno, c.column, "bad loop count '" + c.text + "'");
        loops += std::stoi(c.text);
        i += 2;
      } else if (kw.text == "strand") {
        need(1);
        ++i;
        while (i < toks.size() && toks[i].text != "ext" && toks[i].text != "box" && toks[i].text != "loops" &&
               toks[i].text != "strand") {
          const auto& t = toks[i];
          auto dash = t.text.find('-');
          if (dash == std::string::npos || dash == 0 || dash + 1 >= t.text.size()) {
            throw ParseError(lineno, t.column + static_cast<int>(dash == std::string::npos ? t.text.size() : dash + 1),
                             "expected <point>-<point>, got '" + t.text + "'");
          }
          strands.push_back({t.text.substr(0, dash), t.text.substr(dash + 1), lineno, t.column,
                             t.column + static_cast<int>(dash) + 1});
          ++i;
        }
      } else {
        throw ParseError(lineno, kw.column, "unknown declaration '" + kw.text + "'");
      }
    }
  }
  if (!ext) throw ParseError(lineno, 1, "missing 'ext' declaration");
  Tangle t(*ext, boxes);
  t.set_names(names);
  t.set_loops(loops);
  auto point_of = [&](const std::string& s, int line_no, int col) {
    if (s.size() > 1 && s[0] == 'e' && is_uint(s.substr(1))) {
      return Point{0, std::stoi(s.substr(1))};
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) throw ParseError(line_no, col, "bad point '" + s + "'");
    auto it = box_ids.find(s.substr(0, dot));
    if (it == box_ids.end()) throw ParseError(line_no, col, "unknown box '" + s.substr(0, dot) + "'");
    if (!is_uint(s.substr(dot + 1))) throw ParseError(line_no, col + static_cast<int>(dot) + 1, "bad point index");
    return Point{it->second, std::stoi(s.substr(dot + 1))};
  };
  for (const auto& p : strands) {
    Point a = point_of(p.a, p.line, p.col_a);
    Point b = point_of(p.b, p.line, p.col_b);
    try {
      t.join(a, b);
    } catch (const PreconditionError& e) {
      throw ParseError(p.line, p.col_a, e.what());
    }
  }
  for (int b = 0; b <= t.num_boxes(); ++b) {
    for (int i = 1; i <= t.box_colour(b).points(); ++i) {
      if (!t.partner({b, i})) {
        throw ParseError(lineno, 1,
                         "unmatched point " + (b == 0 ? "e" + std::to_string(i) : t.box_name(b) + "." + std::to_string(i)) +
                             " (colour " + t.box_colour(b).str() + " needs " + std::to_string(t.box_colour(b).points()) +
                             " points)");
      }
    }
  }
  return t;
}

// ------------------------------------------------------------- validate

namespace {

// Flat numbering of all marked points.
struct Layout {
  std::vector<int> offset;  // offset[b] = first flat id of box b
  int total = 0;
  explicit Layout(const Tangle& t) {
    offset.resize(static_cast<size_t>(t.num_boxes()) + 1);
    for (int b = 0; b <= t.num_boxes(); ++b) {
      offset[static_cast<size_t>(b)] = total;
      total += t.box_colour(b).points();
    }
  }
  int id(Point p) const { return offset[static_cast<size_t>(p.box)] + p.index - 1; }
};

int find(std::vector<int>& uf, int x) {
  while (uf[x] != x) x = uf[x] = uf[uf[x]];
  return x;
}

}  // namespace

EulerData euler_data(const Tangle& t) {
  Layout lay(t);
  const int V = lay.total;
  // Darts: per vertex v, 3 outgoing darts: 0 = along arc to next point,
  // 1 = along arc to previous point, 2 = along the strand.
  auto dart = [](int v, int k) { return 3 * v + k; };
  std::vector<int> head(static_cast<size_t>(3 * V));
  std::vector<int> rev(static_cast<size_t>(3 * V));
  std::vector<int> sigma(static_cast<size_t>(3 * V));
  std::vector<int> uf(static_cast<size_t>(V));
  std::iota(uf.begin(), uf.end(), 0);
  int edges = 0;
  for (int b = 0; b <= t.num_boxes(); ++b) {
    const int N = t.box_colour(b).points();
    edges += N;  // boundary arcs
    for (int i = 1; i <= N; ++i) {
      int v = lay.id({b, i});
      int nxt = lay.id({b, i % N + 1});
      int prv = lay.id({b, (i + N - 2) % N + 1});
      int w = lay.id(t.mate({b, i}));
      head[dart(v, 0)] = nxt;
      rev[dart(v, 0)] = dart(nxt, 1);
      head[dart(v, 1)] = prv;
      rev[dart(v, 1)] = dart(prv, 0);
      head[dart(v, 2)] = w;
      rev[dart(v, 2)] = dart(w, 2);
      if (b == 0) {
        // strand points into the disk: clockwise order next, strand, prev
        sigma[dart(v, 0)] = dart(v, 2);
        sigma[dart(v, 2)] = dart(v, 1);
        sigma[dart(v, 1)] = dart(v, 0);
      } else {
        // strand leaves the internal box outward
        sigma[dart(v, 0)] = dart(v, 1);
        sigma[dart(v, 1)] = dart(v, 2);
        sigma[dart(v, 2)] = dart(v, 0);
      }
      uf[find(uf, v)] = find(uf, nxt);
      uf[find(uf, v)] = find(uf, w);
    }
  }
  edges += V / 2;  // strands
  std::vector<char> seen(static_cast<size_t>(3 * V), 0);
  int faces = 0;
  for (int d = 0; d < 3 * V; ++d) {
    if (seen[d]) continue;
    ++faces;
    int e = d;
    while (!seen[e]) {
      seen[e] = 1;
      e = sigma[rev[e]];
    }
  }
  int comps = 0;
  for (int v = 0; v < V; ++v) comps += find(uf, v) == v;
  return {V, edges, faces, comps};
}

std::optional<Violation> validate(const Tangle& t) {
  if (!t.complete()) {
    for (int b = 0; b <= t.num_boxes(); ++b) {
      for (int i = 1; i <= t.box_colour(b).points(); ++i) {
        if (!t.partner({b, i})) {
          return Violation{Violation::Kind::incomplete, "point " + Point{b, i}.str() + " is unmatched", std::nullopt};
        }
      }
    }
  }
  auto ed = euler_data(t);
  if (ed.chi() != 2 * ed.components) {
    // Report the first strand whose removal raises the Euler defect.
    std::optional<std::pair<Point, Point>> culprit;
    auto strands = t.strands();
    if (!strands.empty()) culprit = strands.front();
    return Violation{Violation::Kind::planarity,
                     "not planar: V - E + F = " + std::to_string(ed.chi()) + " over " +
                         std::to_string(ed.components) + " component(s)",
                     culprit};
  }
  // Shading: along a strand the parity flips, except that internal boxes are
  // read with opposite orientation.
  auto signed_parity = [](Point p) { return (p.index + (p.box == 0 ? 0 : 1)) % 2; };
  for (auto [a, b] : t.strands()) {
    if (signed_parity(a) == signed_parity(b)) {
      return Violation{Violation::Kind::parity, "shading violated by strand " + a.str() + "-" + b.str(),
                       std::make_pair(a, b)};
    }
  }
  return std::nullopt;
}

void require_valid(const Tangle& t) {
  if (auto v = validate(t)) throw PreconditionError("invalid tangle: " + v->message);
}

// ----------------------------------------------------------- substitute

Tangle substitute(const Tangle& outer, const std::map<int, Tangle>& assignments) {
  for (const auto& [box, inner] : assignments) {
    if (box < 1 || box > outer.num_boxes()) throw PreconditionError("no internal box " + std::to_string(box));
    if (inner.ext() != outer.box_colour(box)) {
      throw PreconditionError("colour mismatch substituting into box " + std::to_string(box) + ": " +
                              inner.ext().str() + " vs " + outer.box_colour(box).str());
    }
  }
  // New box numbering.
  std::vector<Colour> boxes;
  std::vector<std::string> names;
  std::vector<int> outer_new(static_cast<size_t>(outer.num_boxes()) + 1, -1);
  std::map<int, std::vector<int>> inner_new;  // outer box -> new id of each inner box
  for (int b = 1; b <= outer.num_boxes(); ++b) {
    auto it = assignments.find(b);
    if (it == assignments.end()) {
      boxes.push_back(outer.box_colour(b));
      names.push_back(outer.box_name(b));
      outer_new[static_cast<size_t>(b)] = static_cast<int>(boxes.size());
    } else {
      auto& ids = inner_new[b];
      for (int c = 1; c <= it->second.num_boxes(); ++c) {
        boxes.push_back(it->second.box_colour(c));
        names.push_back(outer.box_name(b) + "/" + it->second.box_name(c));
        ids.push_back(static_cast<int>(boxes.size()));
      }
    }
  }
  Tangle out(outer.ext(), boxes);
  out.set_names(names);
  int loops = outer.loops();
  for (const auto& [b, inner] : assignments) loops += inner.loops();

  // A location is either an outer point or an inner point of a substituted box.
  struct Loc {
    int sub;  // 0 = outer tangle, else outer box number being substituted
    Point p;
  };
  auto is_terminal = [&](const Loc& l) {
    if (l.sub != 0) return l.p.box != 0;
    return l.p.box == 0 || !assignments.count(l.p.box);
  };
  auto new_point = [&](const Loc& l) {
    if (l.sub == 0) return l.p.box == 0 ? l.p : Point{outer_new[static_cast<size_t>(l.p.box)], l.p.index};
    return Point{inner_new.at(l.sub)[static_cast<size_t>(l.p.box - 1)], l.p.index};
  };
  std::set<Point> visited_interface;  // outer points on substituted boxes
  // Follows the strand leaving terminal `start` until another terminal.
  auto walk = [&](Loc cur) {
    for (;;) {
      Loc nxt;
      if (cur.sub == 0) {
        nxt = {0, outer.mate(cur.p)};
        if (is_terminal(nxt)) return nxt;
        visited_interface.insert(nxt.p);
        const Tangle& inner = assignments.at(nxt.p.box);
        Loc in{nxt.p.box, inner.mate(Point{0, nxt.p.index})};
        if (is_terminal(in)) return in;
        cur = {0, Point{nxt.p.box, in.p.index}};
        visited_interface.insert(cur.p);
      } else {
        const Tangle& inner = assignments.at(cur.sub);
        Loc in{cur.sub, inner.mate(cur.p)};
        if (is_terminal(in)) return in;
        cur = {0, Point{cur.sub, in.p.index}};
        visited_interface.insert(cur.p);
      }
    }
  };
  auto connect_from = [&](const Loc& start) {
    Point a = new_point(start);
    if (out.partner(a)) return;
    Loc end = walk(start);
    out.join(a, new_point(end));
  };
  for (int i = 1; i <= outer.ext().points(); ++i) connect_from({0, Point{0, i}});
  for (int b = 1; b <= outer.num_boxes(); ++b) {
    if (assignments.count(b)) {
      const Tangle& inner = assignments.at(b);
      for (int c = 1; c <= inner.num_boxes(); ++c) {
        for (int i = 1; i <= inner.box_colour(c).points(); ++i) connect_from({b, Point{c, i}});
      }
    } else {
      for (int i = 1; i <= outer.box_colour(b).points(); ++i) connect_from({0, Point{b, i}});
    }
  }
  // Remaining interface points lie on closed loops.
  for (const auto& [b, inner] : assignments) {
    for (int i = 1; i <= inner.ext().points(); ++i) {
      Point start{b, i};
      if (visited_interface.count(start)) continue;
      ++loops;
      Point cur = start;
      do {
        visited_interface.insert(cur);
        Point in = inner.mate(Point{0, cur.index});  // ext point of inner
        Point back{b, in.index};
        visited_interface.insert(back);
        cur = outer.mate(back);
      } while (cur != start);
    }
  }
  out.set_loops(loops);
  return out;
}

Tangle adjoint(const Tangle& t) {
  Tangle out(t.ext(), t.boxes());
  out.set_names(t.names());
  out.set_loops(t.loops());
  auto refl = [&](Point p) { return Point{p.box, t.box_colour(p.box).points() + 1 - p.index}; };
  for (auto [a, b] : t.strands()) out.join(refl(a), refl(b));
  return out;
}

// ------------------------------------------------------------- evaluate

Element evaluate(const Tangle& t, std::span<const Element> inputs, const Ring& ring) {
  if (static_cast<int>(inputs.size()) != t.num_boxes()) {
    throw PreconditionError("tangle has " + std::to_string(t.num_boxes()) + " boxes but " +
                            std::to_string(inputs.size()) + " inputs were given");
  }
  for (int b = 1; b <= t.num_boxes(); ++b) {
    const auto& x = inputs[static_cast<size_t>(b - 1)];
    if (x.colour().n() != t.box_colour(b).n()) {
      throw PreconditionError("input " + std::to_string(b) + " has colour " + x.colour().str() + ", box needs " +
                              t.box_colour(b).str());
    }
    if (x.ring() != ring) throw ModeMismatch("input " + std::to_string(b) + " is over a different ring");
  }
  Element out(ring, t.ext());
  for (const auto& x : inputs) {
    if (x.is_zero()) return out;
  }
  Layout lay(t);
  const int V = lay.total;
  const int ext_pts = t.ext().points();
  std::vector<int> tmatch(static_cast<size_t>(V));
  for (int b = 0; b <= t.num_boxes(); ++b) {
    for (int i = 1; i <= t.box_colour(b).points(); ++i) tmatch[lay.id({b, i})] = lay.id(t.mate({b, i}));
  }
  std::vector<int> dmatch(static_cast<size_t>(V), -1);
  std::vector<const Element::Terms*> terms;
  std::vector<Element::Terms::const_iterator> its;
  for (const auto& x : inputs) {
    terms.push_back(&x.terms());
    its.push_back(x.terms().begin());
  }
  std::vector<char> seen(static_cast<size_t>(V));
  std::vector<uint8_t> omatch(static_cast<size_t>(ext_pts));
  const Scalar base = ring.one();
  for (;;) {
    Scalar coeff = base;
    for (size_t b = 0; b < its.size(); ++b) {
      const Diagram& d = its[b]->first;
      coeff *= its[b]->second;
      const int off = lay.offset[b + 1];
      const auto& m = d.match();
      for (size_t i = 0; i < m.size(); ++i) dmatch[off + i] = off + m[i];
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int p = 0; p < ext_pts; ++p) {
      if (seen[p]) continue;
      int cur = p;
      seen[p] = 1;
      for (;;) {
        int q = tmatch[cur];
        seen[q] = 1;
        if (q < ext_pts) {
          omatch[p] = static_cast<uint8_t>(q);
          omatch[q] = static_cast<uint8_t>(p);
          break;
        }
        cur = dmatch[q];
        seen[cur] = 1;
      }
    }
    int loops = t.loops();
    for (int p = ext_pts; p < V; ++p) {
      if (seen[p]) continue;
      ++loops;
      int cur = p;
      while (!seen[cur]) {
        seen[cur] = 1;
        int q = tmatch[cur];
        seen[q] = 1;
        cur = dmatch[q];
      }
    }
    if (!is_noncrossing(omatch)) {
      throw InternalError("evaluation produced a crossing diagram; tangle is not planar");
    }
    out.add_term(Diagram(omatch), coeff.times_delta_pow(loops));
    // odometer
    size_t b = 0;
    for (; b < its.size(); ++b) {
      if (++its[b] != terms[b]->end()) break;
      its[b] = terms[b]->begin();
    }
    if (b == its.size()) break;
  }
  return out;
}

Element evaluate(const Tangle& t, std::span<const Element> inputs) {
  if (inputs.empty()) throw PreconditionError("evaluate without inputs needs a ring");
  return evaluate(t, inputs, inputs.front().ring());
}

Element evaluate(const Tangle& t, const Ring& ring) { return evaluate(t, std::span<const Element>{}, ring); }

Element evaluate(const Tangle& t, const Element& x) { return evaluate(t, std::span<const Element>(&x, 1)); }

Element evaluate(const Tangle& t, const Element& x, const Element& y) {
  std::vector<Element> in{x, y};
  return evaluate(t, in);
}

}  // namespace pa
