#include "pa/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <set>
#include <thread>

#include "pa/analysis.hpp"
#include "pa/annular.hpp"
#include "pa/gns.hpp"
#include "pa/random.hpp"
#include "pa/tl.hpp"
#include "pa/tower.hpp"

namespace pa {

namespace {

uint64_t mix(uint64_t seed, const std::string& tag, int a = 0, int b = 0) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : tag) h = (h ^ c) * 1099511628211ull;
  h ^= seed + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h = (h ^ static_cast<uint64_t>(a + 1000)) * 1099511628211ull;
  h = (h ^ static_cast<uint64_t>(b + 1000)) * 1099511628211ull;
  return h;
}

// Counts failures per identity within one clause.
class Clause {
 public:
  Clause(std::string check, json params) {
    r_.check = std::move(check);
    r_.params = std::move(params);
  }
  void check(const std::string& name, bool ok) {
    auto& f = fails_[name];
    if (!ok) ++f;
  }
  void residual(double v) { r_.residual(v); }
  json& details() { return r_.details; }
  Report done(int instances) {
    r_.details["instances"] = instances;
    for (const auto& [name, f] : fails_) {
      r_.expect(name, f == 0);
      if (f) r_.details["failures"][name] = f;
    }
    return r_;
  }

 private:
  Report r_;
  std::map<std::string, int> fails_;
};

Report renamed(Report r, const std::string& check) {
  r.check = check;
  return r;
}

// Folds several reports of one check into one.
Report merged(const std::string& check, json params, const std::vector<Report>& parts) {
  Report r;
  r.check = check;
  r.params = std::move(params);
  json runs = json::array();
  for (const auto& p : parts) {
    r.pass = r.pass && p.pass;
    r.residual(p.max_residual);
    runs.push_back({{"params", p.params}, {"status", p.pass ? "pass" : "fail"}, {"details", p.details}});
  }
  r.details["runs"] = runs;
  r.expect("every_run", r.pass);
  return r;
}

Ring exact_ring(const SuiteConfig& cfg) { return cfg.ring.value_or(Ring::symbolic()); }

GradedElement one(const Ring& ring, int k) { return GradedElement::of(unit(ring, k), k); }

// ----------------------------------------------------------------- filtalg

void filtalg(const SuiteConfig& cfg, std::vector<Task>& out) {
  const Ring R = exact_ring(cfg);
  const int N = cfg.instances;
  for (int k = 0; k <= cfg.level; ++k) {
    const int cap = cfg.colour_cap(k);
    const json params = {{"k", k}, {"max_colour", cap}, {"ring", R.describe()}};
    auto seed = [&](const char* tag) { return mix(cfg.seed, tag, k); };

    out.push_back([=, s = seed("assoc")] {
      Clause c("filtalg.associativity", params);
      Rng rng(s);
      for (int i = 0; i < N; ++i) {
        auto a = rand_graded(R, k, cap, rng), b = rand_graded(R, k, cap, rng), d = rand_graded(R, k, cap, rng);
        c.check("associative", sharp(sharp(a, b), d) == sharp(a, sharp(b, d)));
      }
      return c.done(N);
    });
    out.push_back([=, s = seed("unit")] {
      Clause c("filtalg.unit", params);
      Rng rng(s);
      const auto e = one(R, k);
      for (int i = 0; i < N; ++i) {
        auto a = rand_graded(R, k, cap, rng);
        c.check("left_unit", sharp(e, a) == a);
        c.check("right_unit", sharp(a, e) == a);
      }
      return c.done(N);
    });
    out.push_back([=, s = seed("dagger")] {
      Clause c("filtalg.dagger", params);
      Rng rng(s);
      for (int i = 0; i < N; ++i) {
        auto a = rand_graded(R, k, cap, rng), b = rand_graded(R, k, cap, rng);
        c.check("involutive", dagger(dagger(a)) == a);
        c.check("anti_multiplicative", dagger(sharp(a, b)) == sharp(dagger(b), dagger(a)));
        auto x = rand_element(R, k, rng);
        c.check("star_on_bottom", dagger(GradedElement::of(x, k)) == GradedElement::of(star(x), k));
      }
      return c.done(N);
    });
    out.push_back([=, s = seed("trace")] {
      Clause c("filtalg.trace", params);
      Rng rng(s);
      for (int i = 0; i < N; ++i) {
        auto a = rand_graded(R, k, cap, rng), b = rand_graded(R, k, cap, rng);
        c.check("formula", trace_tk(sharp(dagger(b), a)) == inner_product_formula(a, b));
        c.check("trace_property", trace_tk(sharp(a, b)) == trace_tk(sharp(b, a)));
      }
      return c.done(N);
    });
    out.push_back([=, s = seed("incl")] {
      Clause c("filtalg.inclusion", params);
      Rng rng(s);
      c.check("unital", include(one(R, k)) == one(R, k + 1));
      for (int i = 0; i < N; ++i) {
        auto a = rand_graded(R, k, cap, rng), b = rand_graded(R, k, cap, rng);
        c.check("multiplicative", include(sharp(a, b)) == sharp(include(a), include(b)));
        c.check("star", include(dagger(a)) == dagger(include(a)));
        c.check("trace_preserving", trace_tk(include(a)) == trace_tk(a));
        c.check("injective", !include(a).is_zero());
      }
      return c.done(N);
    });
    out.push_back([=, s = seed("expect")] {
      Clause c("filtalg.expectation", params);
      Rng rng(s);
      c.check("unital", cond_expect(one(R, k + 1)) == one(R, k));
      for (int i = 0; i < N; ++i) {
        auto x = rand_graded(R, k + 1, cap + 1, rng);
        auto a = rand_graded(R, k, cap, rng), b = rand_graded(R, k, cap, rng);
        c.check("retraction", cond_expect(include(a)) == a);
        c.check("bimodule", cond_expect(sharp(sharp(include(a), x), include(b))) == sharp(sharp(a, cond_expect(x)), b));
        c.check("trace_preserving", trace_tk(cond_expect(x)) == trace_tk(x));
        c.check("star", cond_expect(dagger(x)) == dagger(cond_expect(x)));
      }
      return c.done(N);
    });
  }

  out.push_back([=, s = mix(cfg.seed, "index")] {
    Clause c("filtalg.index_bijection", {{"max_index", 6}, {"levels", json::array({0, 1, 2})}});
    using P = std::pair<int, int>;
    int cases = 0;
    for (int k = 0; k <= 2; ++k) {
      for (int m = k; m <= 6; ++m) {
        for (int n = k; n <= 6; ++n) {
          for (int p = k; p <= 6; ++p) {
            ++cases;
            auto I = index_set_I(m, n, p, k), J = index_set_J(m, n, p, k), Jr = index_set_J(p, n, m, k);
            c.check("sharp_I_equals_J", std::set<P>(I.begin(), I.end()) == std::set<P>(Jr.begin(), Jr.end()));
            std::set<P> image;
            bool inverse = true;
            for (auto ts : I) {
              auto vu = index_map_T(m, n, p, ts);
              image.insert(vu);
              inverse = inverse && index_map_T(p, n, m, vu) == ts;
            }
            c.check("sharp_bijection", image == std::set<P>(J.begin(), J.end()) && image.size() == I.size());
            c.check("sharp_inverse", inverse);
            if (m < k + 1 || n < k + 1) continue;
            // a, b in F_{k+1}, c in F_k; the first coordinates differ by one
            auto Id = index_set_I_dot(m, n, p, k), Jd = index_set_J_dot(m, n, p, k);
            auto Jdr = index_set_J_dot(p + 1, n, m - 1, k);
            std::set<P> shifted;
            for (auto [v, u] : Jdr) shifted.insert({v + 1, u});
            c.check("dot_I_equals_shifted_J", std::set<P>(Id.begin(), Id.end()) == shifted);
            std::set<P> dimage;
            bool dinverse = true;
            for (auto ts : Id) {
              auto vu = index_map_T(m, n, p, ts);
              dimage.insert(vu);
              dinverse = dinverse && index_map_T(p + 1, n, m - 1, vu) == ts;
            }
            c.check("dot_bijection", dimage == std::set<P>(Jd.begin(), Jd.end()) && dimage.size() == Id.size());
            c.check("dot_inverse", dinverse);
          }
        }
      }
    }
    // the paired terms agree componentwise
    const Ring R0 = Ring::symbolic();
    Rng rng(s);
    for (int i = 0; i < 50; ++i) {
      const int k = rand_int(rng, 0, 2);
      const int m = k + rand_int(rng, 0, 2), n = k + rand_int(rng, 0, 2), p = k + rand_int(rng, 0, 2);
      auto a = rand_element(R0, m, rng, 2), b = rand_element(R0, n, rng, 2), d = rand_element(R0, p, rng, 2);
      for (auto [t, s2] : index_set_I(m, n, p, k)) {
        auto [v, u] = index_map_T(m, n, p, {t, s2});
        c.check("sharp_componentwise",
                sharp_component(sharp_component(a, b, k, t), d, k, s2) == sharp_component(a, sharp_component(b, d, k, v), k, u));
      }
      if (k == 0) continue;
      const int m1 = m + 1, n1 = n + 1;
      auto a1 = rand_element(R0, m1, rng, 2), b1 = rand_element(R0, n1, rng, 2);
      for (auto [t, s2] : index_set_I_dot(m1, n1, p, k)) {
        auto [v, u] = index_map_T(m1, n1, p, {t, s2});
        c.check("dot_componentwise", dot_component(sharp_component(a1, b1, k + 1, t), d, k, s2) ==
                                         dot_component(a1, dot_component(b1, d, k, v), k, u));
      }
    }
    c.details()["index_cases"] = cases;
    return c.done(50);
  });
}

// ----------------------------------------------------------------- annular

void annular_suite(const SuiteConfig& cfg, std::vector<Task>& out) {
  const int N = std::max(100, cfg.instances / 2);
  out.push_back([=, s = mix(cfg.seed, "compose")] {
    const Ring R = Ring::symbolic();
    Clause c("annular.compose", {{"max_colour", 7}});
    Rng rng(s);
    for (int i = 0; i < N; ++i) {
      const int k = rand_int(rng, 0, 2);
      const int m = rand_int(rng, k, 7), n = rand_int(rng, k, 7), p = rand_int(rng, k, 7);
      const int s1 = rand_int(rng, 0, std::min(m, n) - k), s2 = rand_int(rng, 0, std::min(n, p) - k);
      auto first = AnnularSpec::T(k, rand_subset(m - k, s1, rng), rand_subset(n - k, s1, rng), m, n);
      auto second = AnnularSpec::T(k, rand_subset(n - k, s2, rng), rand_subset(p - k, s2, rng), n, p);
      auto r = compose_t(first, second);
      Tangle sub = substitute(annular(first), {{1, annular(second)}});
      c.check("same_tangle", sub.strands() == annular(r.spec).strands());
      c.check("loop_exponent", sub.loops() == r.delta_exponent);
      auto x = rand_element(R, p, rng, 3);
      c.check("same_values", apply(first, apply(second, x)) == apply(r.spec, x).times_delta_pow(r.delta_exponent));
    }
    return c.done(N);
  });
  out.push_back([=] {
    Clause c("annular.families", {{"levels", json::array({0, 1, 2, 3})}});
    for (int k = 0; k <= 3; ++k) {
      for (int t = k; t <= k + 5; ++t) {
        c.check("x_valid", !validate(x_tangle(t, k)));
        c.check("x_is_t", x_tangle(t, k) == annular(AnnularSpec::T(k, {}, {}, t, k)));
        if (t < k + 2) continue;
        for (auto p : {CupPlacement::first, CupPlacement::second, CupPlacement::last, CupPlacement::second_to_last}) {
          c.check("y_valid", !validate(y_tangle(t, k, p)));
          c.check("z_valid", !validate(z_tangle(t, k, p)));
        }
      }
    }
    return c.done(0);
  });
  out.push_back([=] {
    Clause c("annular.good_tangles", {{"levels", json::array({0, 1, 2})}});
    json counts = json::array();
    for (int k = 0; k <= 2; ++k) {
      for (int j = k; j <= k + 3; ++j) {
        for (int i = k; i <= j; ++i) {
          auto good = enumerate_good(k, j, i, false);
          auto exc = enumerate_good(k, j, i, true);
          std::set<std::vector<std::pair<Point, Point>>> gs;
          bool valid = true;
          for (const auto& t : good) {
            valid = valid && !validate(t);
            gs.insert(t.strands());
          }
          c.check("valid", valid);
          c.check("distinct", gs.size() == good.size());
          bool subset = true;
          for (const auto& t : exc) subset = subset && gs.count(t.strands());
          c.check("excellent_subset", subset);
          c.check("diagonal", i != j || (good.size() == 1 && exc.size() == 1));
          counts.push_back({{"k", k}, {"j", j}, {"i", i}, {"good", good.size()}, {"excellent", exc.size()}});
        }
      }
    }
    c.details()["counts"] = counts;
    return c.done(0);
  });
}

// ----------------------------------------------------------------- gjs-iso

void gjs_suite(const SuiteConfig& cfg, std::vector<Task>& out) {
  const Ring R = exact_ring(cfg);
  const int N = std::max(1, cfg.instances / 4);
  for (int k = 0; k <= cfg.level; ++k) {
    const int cap = cfg.colour_cap(k);
    const json params = {{"k", k}, {"max_colour", cap}, {"ring", R.describe()}};
    out.push_back([=, s = mix(cfg.seed, "gjs.inverse", k)] {
      Clause c("gjs.inverse", params);
      Rng rng(s);
      for (int i = 0; i < N; ++i) {
        auto a = rand_graded(R, k, cap, rng);
        c.check("psi_phi", psi(phi(a)) == a);
        c.check("phi_psi", phi(psi(a)) == a);
      }
      return c.done(N);
    });
    out.push_back([=, s = mix(cfg.seed, "gjs.iso", k)] {
      Clause c("gjs.star_isomorphism", params);
      Rng rng(s);
      for (int i = 0; i < N; ++i) {
        auto a = rand_graded(R, k, cap, rng), b = rand_graded(R, k, cap, rng);
        c.check("multiplicative", phi(bullet(a, b)) == sharp(phi(a), phi(b)));
        c.check("star", phi(dagger(a)) == dagger(phi(a)));
      }
      return c.done(N);
    });
    out.push_back([=, s = mix(cfg.seed, "gjs.trace", k)] {
      Clause c("gjs.trace", params);
      Rng rng(s);
      for (int i = 0; i < N; ++i) {
        auto a = rand_graded(R, k, cap, rng);
        c.check("Tr_equals_tk_phi", trace_Tr(a) == trace_tk(phi(a)).times_delta_pow(k));
      }
      return c.done(N);
    });
    out.push_back([=] {
      Clause c("gjs.triangular", params);
      for (int n = k; n <= cap; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
          auto x = GradedElement::of(Element::of(R, d), k);
          for (const auto& y : {phi(x), psi(x)}) {
            c.check("unit_diagonal", y.component(n) == x.component(n));
            c.check("lower_colours_only", y.max_colour() <= n);
          }
        }
      }
      return c.done(0);
    });
  }
}

// ------------------------------------------------------------------- jones

void jones_suite(const SuiteConfig& cfg, std::vector<Task>& out) {
  const Ring R = exact_ring(cfg);
  const int N = 50;
  for (int k = 1; k <= cfg.level + 1; ++k) {
    const int cap = cfg.colour_cap(k);
    const json params = {{"k", k}, {"max_colour", cap}, {"ring", R.describe()}};
    out.push_back([=, s = mix(cfg.seed, "jones.rel", k)] {
      Clause c("jones.relations", params);
      Rng rng(s);
      const auto e = jones_e(R, k);
      c.check("idempotent", sharp(e, e) == e);
      c.check("self_adjoint", dagger(e) == e);
      c.check("expectation", cond_expect(e) == one(R, k).times_delta_pow(-2));
      for (int i = 0; i < N; ++i) {
        auto x = rand_graded(R, k, cap, rng);
        c.check("exe", sharp(sharp(e, include(x)), e) == sharp(include_to(cond_expect(x), k + 1), e));
        auto y = include_to(rand_graded(R, k - 1, cap - 1, rng), k + 1);
        c.check("commutes_with_lower", sharp(e, y) == sharp(y, e));
      }
      return c.done(N);
    });
    out.push_back([=, s = mix(cfg.seed, "jones.dot", k)] {
      Clause c("jones.dot_action", params);
      Rng rng(s);
      for (int i = 0; i < N; ++i) {
        auto a = rand_graded(R, k + 1, cap, rng), b = rand_graded(R, k + 1, cap, rng);
        auto x = rand_graded(R, k, cap - 1, rng);
        c.check("unit", dot_action(one(R, k + 1), x) == x);
        c.check("dual_route", dot_action(a, x) == dot_action_via_expectation(a, x));
        c.check("homomorphism", dot_action(sharp(a, b), x) == dot_action(a, dot_action(b, x)));
      }
      return c.done(N);
    });
  }
}

// --------------------------------------------------------------- estimates

std::vector<double> numeric_deltas(const SuiteConfig& cfg) {
  if (cfg.ring && cfg.ring->mode() != Mode::symbolic) return {cfg.ring->delta_value()};
  return {2.0, 2.5};
}

void estimates_suite(const SuiteConfig& cfg, std::vector<Task>& out) {
  for (double d : numeric_deltas(cfg)) {
    const Ring F = Ring::floating(d);
    out.push_back([=] {
      Clause c("estimates.gram", {{"delta", d}, {"max_n", 6}});
      json table = json::array();
      for (int n = 0; n <= 6; ++n) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(gram(F, n), Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff();
        c.check("positive_definite", lo > 0);
        table.push_back({{"n", n}, {"min_eigenvalue", lo}});
      }
      c.details()["min_eigenvalues"] = table;
      return c.done(0);
    });
    out.push_back([=, s = mix(cfg.seed, "estimate", static_cast<int>(d * 10))] {
      // 20 points: every (q, i) for p = 1, i <= 1 for p = 2, a spread for p = 3
      std::vector<std::array<int, 3>> grid;
      for (int q = 0; q <= 2; ++q) {
        for (int i = 0; i <= 2 - q; ++i) grid.push_back({1, q, i});
      }
      for (int q = 0; q <= 4; ++q) {
        for (int i = 0; i <= std::min(1, 4 - q); ++i) grid.push_back({2, q, i});
      }
      for (auto [q, i] : {std::pair{1, 1}, {2, 2}, {3, 1}, {4, 2}, {5, 1}}) grid.push_back({3, q, i});
      Rng rng(s);
      std::vector<Report> parts;
      for (auto [p, q, i] : grid) {
        const int k = (q + i) % (p + 1);
        parts.push_back(estimate_lemma_verify(rand_dense(F, p, rng), k, q, i));
      }
      Report r = merged("estimates.estimate_lemma", {{"delta", d}, {"points", grid.size()}}, parts);
      r.expect("grid_size", grid.size() == 20);
      return r;
    });
    struct Case {
      const char* name;
      int m, k;
    };
    for (Case cs : {Case{"unit", 1, 1}, Case{"random", 2, 0}, Case{"random", 2, 1}, Case{"random", 3, 1}}) {
      out.push_back([=, s = mix(cfg.seed, "bounded", cs.m * 10 + cs.k, static_cast<int>(d * 10))] {
        Rng rng(s);
        Element a = std::string(cs.name) == "unit" ? unit(F, cs.m) : rand_dense(F, cs.m, rng);
        Report r = boundedness_verify(a, cs.k, 100, s);
        r.check = "estimates.boundedness";
        r.params["element"] = cs.name;
        return r;
      });
    }
    out.push_back([=, s = mix(cfg.seed, "sumsq", static_cast<int>(d * 10))] {
      Report r = sum_square_verify(F, 3, 5, 100, s);
      r.check = "estimates.sum_square";
      r.params["delta"] = d;
      return r;
    });
    out.push_back([=, s = mix(cfg.seed, "opnorm", static_cast<int>(d * 10))] {
      Clause c("estimates.op_norm", {{"delta", d}});
      for (int n = 0; n <= 4; ++n) c.check("unit", std::abs(op_norm(unit(F, n)) - 1) < 1e-9);
      for (int n = 2; n <= 4; ++n) c.check("jones_projection", std::abs(op_norm(jones_projection(F, n)) - 1) < 1e-9);
      Rng rng(s);
      for (int i = 0; i < 20; ++i) {
        auto x = rand_dense(F, rand_int(rng, 1, 4), rng);
        const double nx = op_norm(x);
        const double res = std::abs(op_norm(multiply(star(x), x)) - nx * nx) / std::max(1.0, nx * nx);
        c.residual(res);
        c.check("c_star_identity", res < 1e-9);
        const double sq = Element::distance(multiply(psd_sqrt(multiply(star(x), x)), psd_sqrt(multiply(star(x), x))),
                                            multiply(star(x), x)) / std::max(1.0, nx * nx);
        c.residual(sq);
        c.check("psd_sqrt_squares", sq < 1e-9);
      }
      return c.done(20);
    });
  }
}

// -------------------------------------------------------- commutant-replay

void replay_suite(const SuiteConfig& cfg, std::vector<Task>& out) {
  const Ring S = Ring::symbolic();
  out.push_back([=, s = mix(cfg.seed, "cnk")] {
    Clause c("replay.cnk_membership", {{"instances", 100}});
    Rng rng(s);
    std::map<std::string, int> counts;
    for (int i = 0; i < 100; ++i) {
      const int k = rand_int(rng, 0, 2), n = k + rand_int(rng, 1, 3);
      Element x;
      switch (i % 3) {
        case 0: x = evaluate(x_tangle(n, k), rand_element(S, k, rng)); break;
        case 1: x = random_perp(S, n, k, rng); break;
        default: x = rand_element(S, n, rng, 4); break;
      }
      auto m = cnk_membership(x, k);
      c.check("routes_agree", m.routes_agree);
      if (i % 3 == 0) c.check("x_image_is_member", m.status == CnkStatus::member);
      if (i % 3 == 1 && !x.is_zero()) c.check("projected_is_perp", m.status == CnkStatus::perp);
      ++counts[cnk_status_name(m.status)];
    }
    for (int k = 0; k <= 3; ++k) {
      Rng r2(mix(s, "full", k));
      c.check("full_at_equal_colour", cnk_membership(rand_element(S, k, r2), k).status == CnkStatus::member);
    }
    c.details()["status_counts"] = counts;
    return c.done(100);
  });
  for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
    out.push_back([=, s = mix(cfg.seed, "ccomm", n, k)] {
      Rng rng(s);
      std::vector<Report> parts;
      for (int i = 0; i < 5; ++i) parts.push_back(ccommlem_verify(random_perp(S, n, k, rng), k));
      parts.push_back(ccommlem_verify(Element(S, n), k));
      return merged("replay.ccommlem", {{"n", n}, {"k", k}}, parts);
    });
  }
  for (int k = 0; k <= std::max(1, cfg.level); ++k) {
    out.push_back([=] { return renamed(dcomm_replay(k), "replay.dcomm"); });
  }
  for (auto [k, n] : {std::pair{1, 2}, {1, 3}, {0, 2}, {2, 3}}) {
    out.push_back([=, s = mix(cfg.seed, "xnxm", k, n)] { return renamed(xnxm_verify(S, k, n, s), "replay.xnxm"); });
  }
  for (auto [k, n] : {std::pair{1, 2}, {0, 2}}) {
    out.push_back([=, s = mix(cfg.seed, "telescope", k, n)] {
      return renamed(telescoping_verify(S, k, n, 2, s), "replay.telescoping");
    });
  }
  for (int k = 0; k <= 3; ++k) {
    out.push_back([=] { return renamed(commutant_verify(S, k), "commutant.pk_commutes"); });
    for (int i = 0; i <= k; ++i) {
      out.push_back([=, s = mix(cfg.seed, "el", k, i)] {
        return renamed(el_fixed_point_verify(S, k, i, s), "commutant.el_fixed_point");
      });
    }
  }
  out.push_back([=] { return renamed(extremality_verify(S), "commutant.extremality"); });
}

// -------------------------------------------------------------- positivity

void positivity_suite(const SuiteConfig& cfg, std::vector<Task>& out) {
  std::vector<mpq_class> deltas;
  if (cfg.ring && cfg.ring->mode() == Mode::rational) {
    deltas.push_back(cfg.ring->rational_delta());
  } else if (cfg.ring && cfg.ring->mode() == Mode::floating) {
    deltas.push_back(mpq_class(cfg.ring->float_delta()));
  } else {
    deltas = {mpq_class(2), mpq_class(5, 2)};
  }
  for (const auto& d : deltas) {
    if (d < 2) throw PreconditionError("positivity needs delta >= 2, got " + rational_str(d));
    for (int k = 0; k <= cfg.level; ++k) {
      out.push_back([=] { return renamed(positivity_verify(k, d, 6), "positivity.gram"); });
    }
  }
}

using Builder = void (*)(const SuiteConfig&, std::vector<Task>&);

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> b = {
      {"filtalg", filtalg},         {"annular", annular_suite},          {"gjs-iso", gjs_suite},
      {"jones", jones_suite},       {"estimates", estimates_suite},      {"commutant-replay", replay_suite},
      {"positivity", positivity_suite}};
  return b;
}

}  // namespace

json SuiteConfig::to_json() const {
  return {{"delta", ring ? ring->describe() : "default"},
          {"level", level},
          {"max_colour", max_colour < 0 ? json("k+3") : json(max_colour)},
          {"seed", seed},
          {"instances", instances}};
}

bool SuiteResult::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
}

json SuiteResult::to_json(const SuiteConfig& cfg) const {
  json j;
  j["suite"] = suite;
  j["config"] = cfg.to_json();
  j["status"] = pass() ? "pass" : "fail";
  int failed = 0;
  json reps = json::array();
  for (const auto& r : reports) {
    failed += !r.pass;
    reps.push_back(r.to_json());
  }
  j["summary"] = {{"checks", reports.size()}, {"failed", failed}};
  j["reports"] = reps;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, b] : builders()) v.push_back(n);
    v.push_back("all");
    return v;
  }();
  return names;
}

std::vector<Task> suite_tasks(const std::string& name, const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  bool found = false;
  for (const auto& [n, b] : builders()) {
    if (name == "all" || name == n) {
      b(cfg, tasks);
      found = true;
    }
  }
  if (!found) throw PreconditionError("unknown suite '" + name + "'");
  return tasks;
}

std::vector<Report> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<Report> out(tasks.size());
  auto run_one = [&](size_t i) {
    try {
      out[i] = tasks[i]();
    } catch (const std::exception& e) {
      out[i] = Report{};
      out[i].check = "error";
      out[i].params = {{"task", i}};
      out[i].pass = false;
      out[i].details["error"] = e.what();
    }
  };
  const size_t workers = static_cast<size_t>(std::max(1, jobs));
  if (workers == 1 || tasks.size() < 2) {
    for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < std::min(workers, tasks.size()); ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < tasks.size(); i = next++) run_one(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = name;
  res.reports = run_tasks(suite_tasks(name, cfg), cfg.jobs);
  std::stable_sort(res.reports.begin(), res.reports.end(), [](const Report& a, const Report& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.params.dump() < b.params.dump();
  });
  return res;
}

}  // namespace pa
