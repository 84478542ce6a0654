#include "pa/diagram.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>

#include "pa/scalar.hpp"

namespace pa {

std::string Colour::str() const {
  if (n_ == 0) return minus_ ? "0-" : "0+";
  return std::to_string(n_);
}

Colour Colour::parse(const std::string& s) {
  if (s == "0-") return zero_minus();
  if (s == "0+" || s == "0") return Colour(0);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw PreconditionError("bad colour '" + s + "'");
  }
  return Colour(std::stoi(s));
}

bool is_noncrossing(const std::vector<uint8_t>& m) {
  const size_t n = m.size();
  for (size_t a = 0; a < n; ++a) {
    size_t b = m[a];
    if (b <= a) continue;
    for (size_t c = a + 1; c < b; ++c) {
      size_t d = m[c];
      if (d < a || d > b) return false;
    }
  }
  return true;
}

Diagram::Diagram(std::vector<uint8_t> match) : match_(std::move(match)) {
  const size_t n = match_.size();
  if (n % 2 != 0) throw PreconditionError("diagram needs an even number of points");
  for (size_t i = 0; i < n; ++i) {
    size_t j = match_[i];
    if (j >= n || j == i || match_[j] != i) throw PreconditionError("diagram matching is not a perfect matching");
    if ((i + j) % 2 == 0) throw PreconditionError("diagram pair joins two points of equal parity");
  }
  if (!is_noncrossing(match_)) throw PreconditionError("diagram matching is crossing");
}

Diagram Diagram::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> m(static_cast<size_t>(2 * n), -1);
  for (auto [a, b] : pairs) {
    if (a < 1 || b < 1 || a > 2 * n || b > 2 * n) throw PreconditionError("diagram point out of range");
    if (m[a - 1] != -1 || m[b - 1] != -1) throw PreconditionError("diagram point used twice");
    m[a - 1] = b - 1;
    m[b - 1] = a - 1;
  }
  std::vector<uint8_t> out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw PreconditionError("diagram point " + std::to_string(i + 1) + " unmatched");
    out[i] = static_cast<uint8_t>(m[i]);
  }
  return Diagram(std::move(out));
}

Diagram Diagram::identity(int n) {
  std::vector<uint8_t> m(static_cast<size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) m[i] = static_cast<uint8_t>(2 * n - 1 - i);
  return Diagram(std::move(m));
}

std::vector<std::pair<int, int>> Diagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < match_.size(); ++i) {
    if (match_[i] > i) out.emplace_back(static_cast<int>(i) + 1, match_[i] + 1);
  }
  return out;
}

Diagram Diagram::reflected() const {
  const int n = points();
  std::vector<uint8_t> m(match_.size());
  for (int i = 0; i < n; ++i) m[n - 1 - i] = static_cast<uint8_t>(n - 1 - match_[i]);
  Diagram d;
  d.match_ = std::move(m);
  return d;
}

Diagram Diagram::rotated(int shift) const {
  const int n = points();
  if (n == 0) return *this;
  auto mod = [n](int x) { return ((x % n) + n) % n; };
  std::vector<uint8_t> m(match_.size());
  for (int i = 0; i < n; ++i) m[mod(i + shift)] = static_cast<uint8_t>(mod(match_[i] + shift));
  Diagram d;
  d.match_ = std::move(m);
  return d;
}

std::string Diagram::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [a, b] : pairs()) {
    if (!first) os << ",";
    first = false;
    os << a << "-" << b;
  }
  os << "}";
  return os.str();
}

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

namespace {

std::atomic<int> g_cap{10};

void build(std::vector<int>& m, const std::vector<int>& free_pts, std::vector<std::vector<uint8_t>>& out) {
  if (free_pts.empty()) {
    std::vector<uint8_t> r(m.begin(), m.end());
    out.push_back(std::move(r));
    return;
  }
  // First free point pairs with a free point at odd offset; the points in
  // between and the points after are matched independently.
  for (size_t j = 1; j < free_pts.size(); j += 2) {
    m[free_pts[0]] = free_pts[j];
    m[free_pts[j]] = free_pts[0];
    std::vector<int> inside(free_pts.begin() + 1, free_pts.begin() + static_cast<long>(j));
    std::vector<int> outside(free_pts.begin() + static_cast<long>(j) + 1, free_pts.end());
    std::vector<std::vector<uint8_t>> in_out;
    build(m, inside, in_out);
    for (auto& partial : in_out) {
      std::vector<int> m2(partial.begin(), partial.end());
      build(m2, outside, out);
    }
  }
}

struct Cache {
  std::mutex mu;
  std::map<int, std::vector<Diagram>> lists;
  std::map<int, std::map<Diagram, size_t>> index;
};

Cache& cache() {
  static Cache c;
  return c;
}

}  // namespace

int colour_cap() { return g_cap.load(); }
void set_colour_cap(int cap) {
  if (cap < 0) throw PreconditionError("colour cap must be non-negative");
  g_cap.store(cap);
}

const std::vector<Diagram>& enumerate_diagrams(int n) {
  if (n < 0) throw PreconditionError("negative colour");
  if (n > colour_cap()) {
    throw PreconditionError("colour " + std::to_string(n) + " exceeds the colour cap " + std::to_string(colour_cap()));
  }
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto it = c.lists.find(n);
  if (it != c.lists.end()) return it->second;
  std::vector<int> m(static_cast<size_t>(2 * n), -1);
  std::vector<int> pts(static_cast<size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) pts[i] = i;
  std::vector<std::vector<uint8_t>> raw;
  build(m, pts, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<Diagram> ds;
  ds.reserve(raw.size());
  std::map<Diagram, size_t> idx;
  for (auto& r : raw) {
    ds.emplace_back(std::move(r));
    idx.emplace(ds.back(), ds.size() - 1);
  }
  c.index.emplace(n, std::move(idx));
  return c.lists.emplace(n, std::move(ds)).first->second;
}

size_t diagram_index(const Diagram& d) {
  enumerate_diagrams(d.colour());
  auto& c = cache();
  std::lock_guard lock(c.mu);
  return c.index.at(d.colour()).at(d);
}

}  // namespace pa
