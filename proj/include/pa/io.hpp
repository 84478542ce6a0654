#pragma once

#include <stdexcept>
#include <string>

#include "pa/element.hpp"
#include "pa/report.hpp"
#include "pa/tangle.hpp"
#include "pa/tower.hpp"

namespace pa {

/// Malformed JSON input: bad syntax, missing fields or mixed rings.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Scalar& s);
json to_json(const Element& x);
json to_json(const GradedElement& a);
json to_json(const Tangle& t);

Scalar scalar_from_json(const json& j);
/// The ring is read off the coefficients; `fallback` is used for an element
/// without terms.
Element element_from_json(const json& j, const Ring& fallback = Ring::symbolic());
GradedElement graded_from_json(const json& j, const Ring& fallback = Ring::symbolic());
Tangle tangle_from_json(const json& j);

/// Ring carried by a scalar.
Ring ring_of(const Scalar& s);
/// "sym", "symbolic", "p/q" or a decimal such as "2.5".
Ring parse_delta(const std::string& s);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace pa
