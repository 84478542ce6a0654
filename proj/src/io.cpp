#include "pa/io.hpp"

#include <fstream>
#include <sstream>

namespace pa {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw FormatError(msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

mpq_class rational_field(const json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const PreconditionError& e) {
      bad(e.what());
    }
  }
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  bad("expected a rational as \"p/q\"");
}

Colour colour_field(const json& j) {
  if (j.is_number_integer()) return Colour(j.get<int>());
  if (j.is_string()) {
    try {
      return Colour::parse(j.get<std::string>());
    } catch (const PreconditionError& e) {
      bad(e.what());
    }
  }
  bad("expected a colour");
}

json colour_json(Colour c) {
  if (c.is_zero_minus()) return "0-";
  return c.n();
}

}  // namespace

json to_json(const Scalar& s) {
  json j;
  switch (s.mode()) {
    case Mode::symbolic: {
      j["mode"] = "symbolic";
      json terms = json::array();
      for (const auto& [e, c] : s.laurent().terms) terms.push_back({e, rational_str(c)});
      j["terms"] = terms;
      break;
    }
    case Mode::rational:
      j["mode"] = "rational";
      j["value"] = rational_str(s.rational().value);
      j["delta"] = rational_str(s.rational().delta);
      break;
    case Mode::floating:
      j["mode"] = "float";
      j["value"] = s.floating().value;
      j["delta"] = s.floating().delta;
      break;
  }
  return j;
}

Scalar scalar_from_json(const json& j) {
  const std::string mode = field(j, "mode").get<std::string>();
  if (mode == "symbolic") {
    Laurent p;
    for (const auto& t : field(j, "terms")) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) bad("symbolic term must be [exp, \"p/q\"]");
      p.terms.emplace_back(t[0].get<int>(), rational_field(t[1]));
    }
    Scalar s;
    for (const auto& [e, c] : p.terms) s += Scalar::monomial(c, e);
    return s;
  }
  if (mode == "rational") return Scalar(RationalAt{rational_field(field(j, "value")), rational_field(field(j, "delta"))});
  if (mode == "float") {
    const auto& v = field(j, "value");
    const auto& d = field(j, "delta");
    if (!v.is_number() || !d.is_number()) bad("float scalar needs numeric value and delta");
    return Scalar(FloatAt{v.get<double>(), d.get<double>()});
  }
  bad("unknown scalar mode '" + mode + "'");
}

Ring ring_of(const Scalar& s) {
  switch (s.mode()) {
    case Mode::symbolic: return Ring::symbolic();
    case Mode::rational: return Ring::rational(s.rational().delta);
    case Mode::floating: return Ring::floating(s.floating().delta);
  }
  return Ring::symbolic();
}

Ring parse_delta(const std::string& s) {
  if (s == "sym" || s == "symbolic") return Ring::symbolic();
  try {
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos) {
      size_t used = 0;
      const double d = std::stod(s, &used);
      if (used != s.size()) throw PreconditionError("bad delta '" + s + "'");
      return Ring::floating(d);
    }
    return Ring::rational(parse_rational(s));
  } catch (const std::invalid_argument&) {
    throw PreconditionError("bad delta '" + s + "': expected sym, p/q or a decimal");
  }
}

json to_json(const Element& x) {
  json j;
  j["colour"] = colour_json(x.colour());
  json terms = json::array();
  for (const auto& [d, c] : x.terms()) {
    json pairs = json::array();
    for (const auto& [a, b] : d.pairs()) pairs.push_back({a, b});
    terms.push_back({{"pairs", pairs}, {"coeff", to_json(c)}});
  }
  j["terms"] = terms;
  return j;
}

Element element_from_json(const json& j, const Ring& fallback) {
  const Colour colour = colour_field(field(j, "colour"));
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  std::optional<Ring> ring;
  std::vector<std::pair<Diagram, Scalar>> parsed;
  for (const auto& t : terms) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : field(t, "pairs")) {
      if (!p.is_array() || p.size() != 2) bad("a pair must have two points");
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    Diagram d;
    try {
      d = Diagram::from_pairs(colour.n(), pairs);
    } catch (const PreconditionError& e) {
      bad(std::string("bad diagram: ") + e.what());
    }
    Scalar c = scalar_from_json(field(t, "coeff"));
    Ring r = ring_of(c);
    if (ring && *ring != r) bad("element mixes coefficient rings");
    ring = r;
    parsed.emplace_back(d, c);
  }
  Element x(ring.value_or(fallback), colour);
  for (const auto& [d, c] : parsed) x.add_term(d, c);
  return x;
}

json to_json(const GradedElement& a) {
  json j;
  j["level"] = a.level();
  json comps = json::object();
  for (const auto& [n, x] : a.components()) comps[std::to_string(n)] = to_json(x);
  j["components"] = comps;
  return j;
}

GradedElement graded_from_json(const json& j, const Ring& fallback) {
  const auto& lv = field(j, "level");
  if (!lv.is_number_integer()) bad("level must be an integer");
  const int level = lv.get<int>();
  const auto& comps = field(j, "components");
  if (!comps.is_object()) bad("components must be an object");
  std::vector<Element> xs;
  std::optional<Ring> ring;
  for (const auto& [key, val] : comps.items()) {
    Element x = element_from_json(val, fallback);
    if (std::to_string(x.n()) != key) bad("component key " + key + " does not match its colour");
    if (!x.is_zero()) {
      if (ring && *ring != x.ring()) bad("graded element mixes coefficient rings");
      ring = x.ring();
    }
    xs.push_back(x);
  }
  GradedElement a(ring.value_or(fallback), level);
  for (const auto& x : xs) {
    if (x.n() < level) bad("component colour below level");
    if (!x.is_zero()) a.add(x);
  }
  return a;
}

json to_json(const Tangle& t) {
  json j;
  j["ext"] = colour_json(t.ext());
  json boxes = json::array();
  for (int b = 1; b <= t.num_boxes(); ++b) boxes.push_back({{"name", t.box_name(b)}, {"colour", colour_json(t.box_colour(b))}});
  j["boxes"] = boxes;
  json strands = json::array();
  for (const auto& [p, q] : t.strands()) strands.push_back({{p.box, p.index}, {q.box, q.index}});
  j["strands"] = strands;
  j["loops"] = t.loops();
  return j;
}

Tangle tangle_from_json(const json& j) {
  std::vector<Colour> boxes;
  std::vector<std::string> names;
  for (const auto& b : field(j, "boxes")) {
    boxes.push_back(colour_field(field(b, "colour")));
    names.push_back(b.contains("name") ? b["name"].get<std::string>() : "b" + std::to_string(boxes.size()));
  }
  Tangle t(colour_field(field(j, "ext")), boxes);
  t.set_names(names);
  try {
    for (const auto& s : field(j, "strands")) {
      if (!s.is_array() || s.size() != 2) bad("a strand joins two points");
      t.join({s[0][0].get<int>(), s[0][1].get<int>()}, {s[1][0].get<int>(), s[1][1].get<int>()});
    }
  } catch (const PreconditionError& e) {
    bad(e.what());
  }
  if (j.contains("loops")) t.set_loops(j["loops"].get<int>());
  return t;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace pa
