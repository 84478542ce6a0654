#include "pa/annular.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pa {

namespace {

void need(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

std::string set_str(const std::vector<int>& s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

void check_subset(const std::vector<int>& s, int hi, const char* name) {
  need(std::is_sorted(s.begin(), s.end()) && std::adjacent_find(s.begin(), s.end()) == s.end(),
       std::string(name) + " must be strictly increasing");
  for (int a : s) need(a >= 1 && a <= hi, std::string(name) + " has index " + std::to_string(a) + " outside [1," + std::to_string(hi) + "]");
}

}  // namespace

const char* placement_name(CupPlacement p) {
  switch (p) {
    case CupPlacement::first: return "first";
    case CupPlacement::second: return "second";
    case CupPlacement::last: return "last";
    case CupPlacement::second_to_last: return "second_to_last";
  }
  return "?";
}

CupPlacement parse_placement(const std::string& s) {
  for (auto p : {CupPlacement::first, CupPlacement::second, CupPlacement::last, CupPlacement::second_to_last}) {
    if (s == placement_name(p)) return p;
  }
  throw PreconditionError("unknown cup placement '" + s + "'");
}

AnnularSpec AnnularSpec::T(int k, std::vector<int> A, std::vector<int> B, int m, int n) {
  AnnularSpec s;
  s.family = Family::T;
  s.k = k;
  s.m = m;
  s.n = n;
  s.A = std::move(A);
  s.B = std::move(B);
  return s;
}

AnnularSpec AnnularSpec::X(int n, int k) {
  AnnularSpec s;
  s.family = Family::X;
  s.k = k;
  s.m = n;
  s.n = k;
  return s;
}

AnnularSpec AnnularSpec::Y(int t, int k, CupPlacement p) {
  AnnularSpec s;
  s.family = Family::Y;
  s.k = k;
  s.m = t;
  s.n = k;
  s.placement = p;
  return s;
}

AnnularSpec AnnularSpec::Z(int t, int k, CupPlacement p) {
  AnnularSpec s = Y(t, k, p);
  s.family = Family::Z;
  return s;
}

std::string AnnularSpec::str() const {
  std::ostringstream os;
  switch (family) {
    case Family::T: os << "T(" << k << "," << set_str(A) << "," << set_str(B) << ")^" << m << "_" << n; break;
    case Family::X: os << "X^" << m << "_" << k; break;
    case Family::Y: os << "Y^" << m << "_" << k << "[" << placement_name(placement) << "]"; break;
    case Family::Z: os << "Z^" << m << "_" << k << "[" << placement_name(placement) << "]"; break;
  }
  return os.str();
}

std::vector<int> interval(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

Tangle t_tangle(int k, const std::vector<int>& A, const std::vector<int>& B, int m, int n) {
  need(k >= 0 && m >= k && n >= k, "T(k,A,B)^m_n needs m, n >= k >= 0");
  need(A.size() == B.size(), "|A| != |B|");
  check_subset(A, m - k, "A");
  check_subset(B, n - k, "B");
  Tangle t(m, {n});
  std::vector<char> ext_used(static_cast<size_t>(m - k) + 1, 0), int_used(static_cast<size_t>(n - k) + 1, 0);
  for (size_t i = 0; i < A.size(); ++i) {
    t.join({0, 2 * A[i] - 1}, {1, 2 * B[i] - 1});
    t.join({0, 2 * A[i]}, {1, 2 * B[i]});
    ext_used[static_cast<size_t>(A[i])] = int_used[static_cast<size_t>(B[i])] = 1;
  }
  for (int j = 1; j <= 2 * k; ++j) t.join({0, 2 * (m - k) + j}, {1, 2 * (n - k) + j});
  for (int a = 1; a <= m - k; ++a) {
    if (!ext_used[static_cast<size_t>(a)]) t.join({0, 2 * a - 1}, {0, 2 * a});
  }
  for (int b = 1; b <= n - k; ++b) {
    if (!int_used[static_cast<size_t>(b)]) t.join({1, 2 * b - 1}, {1, 2 * b});
  }
  return t;
}

Tangle x_tangle(int n, int k) { return t_tangle(k, {}, {}, n, k); }

Tangle cap_tangle(int n, int k) { return t_tangle(k, {}, {}, k, n); }

Tangle double_cup_tangle(int t, int k, int before) {
  need(k >= 0 && t >= k + 2, "Y/Z tangles need t >= k+2");
  const int singles = t - k - 2;
  need(before >= 0 && before <= singles, "double cup position out of range");
  Tangle tg(t, {k});
  int p = 1;
  for (int s = 0; s <= singles; ++s) {
    if (s == before) {
      tg.join({0, p}, {0, p + 3});
      tg.join({0, p + 1}, {0, p + 2});
      p += 4;
    }
    if (s < singles) {
      tg.join({0, p}, {0, p + 1});
      p += 2;
    }
  }
  for (int j = 1; j <= 2 * k; ++j) tg.join({0, 2 * (t - k) + j}, {1, j});
  return tg;
}

int singles_before(CupPlacement p, int t, int k) {
  const int singles = t - k - 2;
  switch (p) {
    case CupPlacement::first: return 0;
    case CupPlacement::second: return std::min(1, singles);
    case CupPlacement::last: return singles;
    case CupPlacement::second_to_last: return std::max(0, singles - 1);
  }
  return 0;
}

Tangle y_tangle(int t, int k, CupPlacement p) { return double_cup_tangle(t, k, singles_before(p, t, k)); }

Tangle z_tangle(int t, int k, CupPlacement p) { return double_cup_tangle(t, k, singles_before(p, t, k)); }

Tangle annular(const AnnularSpec& s) {
  switch (s.family) {
    case AnnularSpec::Family::T: return t_tangle(s.k, s.A, s.B, s.m, s.n);
    case AnnularSpec::Family::X: return x_tangle(s.m, s.k);
    case AnnularSpec::Family::Y: return y_tangle(s.m, s.k, s.placement);
    case AnnularSpec::Family::Z: return z_tangle(s.m, s.k, s.placement);
  }
  throw PreconditionError("unknown annular family");
}

TComposition compose_t(const AnnularSpec& first, const AnnularSpec& second) {
  need(first.family == AnnularSpec::Family::T && second.family == AnnularSpec::Family::T, "compose_t takes T tangles");
  need(first.k == second.k, "compose_t: level mismatch");
  need(first.n == second.m, "compose_t: colour mismatch " + std::to_string(first.n) + " vs " + std::to_string(second.m));
  t_tangle(first.k, first.A, first.B, first.m, first.n);
  t_tangle(second.k, second.A, second.B, second.m, second.n);
  const auto& B = first.B;
  const auto& C = second.A;
  std::vector<int> both, either;
  std::set_intersection(B.begin(), B.end(), C.begin(), C.end(), std::back_inserter(both));
  std::set_union(B.begin(), B.end(), C.begin(), C.end(), std::back_inserter(either));
  std::vector<int> E, F;
  for (int beta : both) {
    auto ib = std::lower_bound(B.begin(), B.end(), beta) - B.begin();
    auto ic = std::lower_bound(C.begin(), C.end(), beta) - C.begin();
    E.push_back(first.A[static_cast<size_t>(ib)]);
    F.push_back(second.B[static_cast<size_t>(ic)]);
  }
  TComposition out;
  out.delta_exponent = first.n - first.k - static_cast<int>(either.size());
  out.spec = AnnularSpec::T(first.k, E, F, first.m, second.n);
  return out;
}

std::vector<Tangle> enumerate_good(int k, int j, int i, bool excellent) {
  need(k >= 0 && k <= i && i <= j, "enumerate_good needs 0 <= k <= i <= j");
  std::vector<Tangle> out;
  const int free_through = 2 * (i - k);
  const int free_hi = 2 * (j - k);
  std::vector<int> q;
  auto emit = [&](const std::vector<int>& through) {
    // gaps between consecutive through points; the wrap gap is split at the
    // internal * so that no cap encloses it
    std::vector<std::pair<int, int>> gaps;  // [lo, hi]
    int prev = 0;
    for (int p : through) {
      if (p - prev - 1 > 0) gaps.emplace_back(prev + 1, p - 1);
      prev = p;
    }
    if (2 * j - prev > 0) gaps.emplace_back(prev + 1, 2 * j);
    std::vector<const std::vector<Diagram>*> choices;
    std::vector<std::vector<Diagram>> excellent_only;
    excellent_only.reserve(gaps.size());
    for (auto [lo, hi] : gaps) {
      const int L = (hi - lo + 1) / 2;
      if (excellent) {
        std::vector<std::pair<int, int>> adj;
        for (int a = 0; a < L; ++a) adj.emplace_back(2 * a + 1, 2 * a + 2);
        excellent_only.push_back({Diagram::from_pairs(L, adj)});
        choices.push_back(&excellent_only.back());
      } else {
        choices.push_back(&enumerate_diagrams(L));
      }
    }
    std::vector<size_t> idx(gaps.size(), 0);
    for (;;) {
      Tangle t(i, {j});
      for (size_t p = 0; p < through.size(); ++p) t.join({0, static_cast<int>(p) + 1}, {1, through[p]});
      for (size_t g = 0; g < gaps.size(); ++g) {
        const Diagram& d = (*choices[g])[idx[g]];
        for (auto [a, b] : d.pairs()) t.join({1, gaps[g].first + a - 1}, {1, gaps[g].first + b - 1});
      }
      out.push_back(std::move(t));
      // odometer with the first gap most significant
      int g = static_cast<int>(gaps.size()) - 1;
      for (; g >= 0; --g) {
        if (++idx[static_cast<size_t>(g)] < choices[static_cast<size_t>(g)]->size()) break;
        idx[static_cast<size_t>(g)] = 0;
      }
      if (g < 0) break;
    }
  };
  std::function<void(int)> rec = [&](int start) {
    const int p = static_cast<int>(q.size()) + 1;  // index of the next free through point
    if (static_cast<int>(q.size()) == free_through) {
      std::vector<int> through = q;
      for (int r = 1; r <= 2 * k; ++r) through.push_back(free_hi + r);
      emit(through);
      return;
    }
    for (int c = start; c <= free_hi - (free_through - p); ++c) {
      if ((c - p) % 2 != 0) continue;
      q.push_back(c);
      rec(c + 1);
      q.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace pa
