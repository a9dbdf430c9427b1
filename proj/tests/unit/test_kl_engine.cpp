#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "weylcells/g2_normal_form.hpp"
#include "weylcells/kl_cache.hpp"

using namespace weylcells;

namespace {

// P_{x,w} from R-polynomials: q^d P(1/q) - P(q) = sum_{x < y <= w} R_{x,y} P_{y,w},
// with R computed by its own recursion and Bruhat order from bruhat_leq.
struct ROracle {
  const KLTable& t;
  std::map<std::pair<int, int>, Poly> R, Pm;

  explicit ROracle(const KLTable& table) : t(table) {}

  bool le(int x, int w) { return bruhat_leq(t.element(x), t.element(w)).value(); }

  const Poly& r(int x, int w) {
    auto key = std::make_pair(x, w);
    if (auto it = R.find(key); it != R.end()) return it->second;
    Poly out;
    if (x == w) out = {1};
    else if (le(x, w)) {
      int s = 0;
      while (!(t.right_descent_mask(w) >> s & 1u)) ++s;
      const int ws = t.right_mul(w, s), xs = t.right_mul(x, s);
      if (t.right_descent_mask(x) >> s & 1u) out = r(xs, ws);
      else out = poly_add(poly_add(poly_shift(r(x, ws), 1), poly_scale(r(x, ws), -1)), poly_shift(r(xs, ws), 1));
    }
    return R[key] = out;
  }

  const Poly& p(int x, int w) {
    auto key = std::make_pair(x, w);
    if (auto it = Pm.find(key); it != Pm.end()) return it->second;
    Poly out;
    if (x == w) out = {1};
    else if (le(x, w)) {
      Poly rhs;
      for (std::size_t y = 0; y < t.size(); ++y) {
        const int yi = static_cast<int>(y);
        if (yi == x || t.length(yi) <= t.length(x) || t.length(yi) > t.length(w)) continue;
        if (!le(x, yi) || !le(yi, w)) continue;
        const Poly& a = r(x, yi);
        const Poly& b = p(yi, w);
        Poly prod;
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = 0; j < b.size(); ++j) {
            if (prod.size() < i + j + 1) prod.resize(i + j + 1, 0);
            prod[i + j] += a[i] * b[j];
          }
        rhs = poly_add(rhs, prod);
      }
      const int d = t.length(w) - t.length(x);
      for (int i = 0; i <= (d - 1) / 2 && i < static_cast<int>(rhs.size()); ++i) {
        out.resize(static_cast<std::size_t>(i) + 1, 0);
        out[static_cast<std::size_t>(i)] = -rhs[static_cast<std::size_t>(i)];
      }
      out = poly_add(out, {});
    }
    return Pm[key] = out;
  }
};

}  // namespace

TEST_CASE("polynomial helpers") {
  CHECK(format_poly({}) == "0");
  CHECK(format_poly({1, 2, 0, -1}) == "1 + 2*q - q^3");
  CHECK(degree({}) == -1);
  CHECK(poly_add({1, 1}, {0, -1}) == Poly{1});
  CHECK(poly_shift({1}, 2) == Poly{0, 0, 1});
}

TEST_CASE("ball sizes") {
  auto g2 = RootSystem::build(Family::G2, 2);
  CHECK(KLTable(g2, 0).size() == 1);
  CHECK(KLTable(g2, 1).size() == 4);
  CHECK(KLTable(g2, 2).size() == 9);
  CHECK_THROWS_AS(KLTable(g2, 20, 50), BallCapExceeded);
}

TEST_CASE("KL polynomials agree with the R-polynomial oracle") {
  for (auto [f, r, L] : std::vector<std::tuple<Family, int, int>>{{Family::A, 2, 7}, {Family::G2, 2, 8},
                                                                  {Family::C, 2, 7}, {Family::A, 3, 5}}) {
    auto rs = RootSystem::build(f, r);
    KLTable t(rs, L);
    ROracle oracle(t);
    for (std::size_t w = 0; w < t.size(); ++w)
      for (std::size_t x = 0; x < t.size(); ++x) {
        const int xi = static_cast<int>(x), wi = static_cast<int>(w);
        CHECK(t.leq(xi, wi) == oracle.le(xi, wi));
        if (t.length(xi) <= t.length(wi)) CHECK_MESSAGE(t.P(xi, wi) == oracle.p(xi, wi), rs->name() << " " << x << " " << w);
      }
  }
}

TEST_CASE("non-trivial polynomials appear") {
  auto a2 = RootSystem::build(Family::A, 2);
  KLTable t(a2, 8);
  bool nontrivial = false;
  for (std::size_t w = 0; w < t.size(); ++w)
    for (int x : t.ideal(static_cast<int>(w))) nontrivial = nontrivial || t.P(x, static_cast<int>(w)) != Poly{1};
  CHECK(nontrivial);
}

TEST_CASE("table properties") {
  for (auto [f, r, L] : std::vector<std::tuple<Family, int, int>>{{Family::A, 2, 10}, {Family::G2, 2, 10}}) {
    auto rs = RootSystem::build(f, r);
    KLTable t(rs, L);
    for (std::size_t w = 0; w < t.size(); ++w) {
      const int wi = static_cast<int>(w);
      const int winv = t.require_index(t.element(wi).inverse());
      for (int x : t.ideal(wi)) {
        const Poly& p = t.P(x, wi);
        CHECK(p.front() == 1);
        if (x != wi) CHECK(2 * degree(p) <= t.length(wi) - t.length(x) - 1);
        CHECK(t.P(t.require_index(t.element(x).inverse()), winv) == p);
        for (int s = 0; s <= r; ++s) {
          if (t.left_descent_mask(wi) >> s & 1u) CHECK(t.recompute(x, wi, s, Side::Left) == p);
          if (t.right_descent_mask(wi) >> s & 1u) CHECK(t.recompute(x, wi, s, Side::Right) == p);
        }
        if (t.length(wi) - t.length(x) == 1) CHECK(t.mu(x, wi) == 1);
      }
    }
    CHECK_THROWS_AS(t.recompute(0, 0, 0, Side::Left), std::invalid_argument);
  }
}

TEST_CASE("dihedral parabolic pairs have P = 1") {
  auto g2 = RootSystem::build(Family::G2, 2);
  KLTable t(g2, 10);
  for (auto J : std::vector<std::vector<int>>{{1, 2}, {0, 1}, {0, 2}}) {
    std::vector<int> in;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto rw = t.element(static_cast<int>(i)).reduced_word();
      bool ok = true;
      for (int l : rw.letters) ok = ok && std::find(J.begin(), J.end(), l) != J.end();
      if (ok) in.push_back(static_cast<int>(i));
    }
    for (int w : in)
      for (int x : in)
        if (t.leq(x, w)) CHECK(t.P(x, w) == Poly{1});
  }
}

TEST_CASE("mu and edges") {
  auto g2 = RootSystem::build(Family::G2, 2);
  KLTable t(g2, 6);
  const int e = 0;
  const int w = t.require_index(Element::from_generators(g2, {1, 0, 1}));
  CHECK(t.P(e, w) == Poly{1});
  CHECK(t.mu(e, w) == 0);  // degree-1 coefficient of 1
  const int s1 = t.require_index(Element::generator(g2, 1));
  CHECK(t.mu(s1, t.require_index(Element::from_generators(g2, {1, 0}))) == 1);
  CHECK(t.edge(t.require_index(Element::from_generators(g2, {1, 0})), s1));
  CHECK_FALSE(t.edge(s1, t.require_index(Element::generator(g2, 2))));
  CHECK_THROWS_AS(t.P(Element::identity(g2), Element::from_generators(g2, {0, 1, 2, 1, 2, 1, 0})), std::out_of_range);
}

TEST_CASE("cell graphs") {
  auto g2 = RootSystem::build(Family::G2, 2);
  KLTable t1(g2, 1);
  auto g1 = t1.cell_graph(Side::Left);
  CHECK(g1.components[static_cast<std::size_t>(g1.component[0])] == std::vector<int>{0});

  KLTable t(g2, 9);
  auto left = t.cell_graph(Side::Left);
  auto right = t.cell_graph(Side::Right);
  for (const auto& comp : left.components)
    for (int x : comp) CHECK(t.right_descent_mask(x) == t.right_descent_mask(comp.front()));
  for (const auto& comp : right.components)
    for (int x : comp) CHECK(t.left_descent_mask(x) == t.left_descent_mask(comp.front()));
  // edges respect the component numbering
  for (std::size_t x = 0; x < t.size(); ++x)
    for (int y : left.out[x]) CHECK(left.component[static_cast<std::size_t>(y)] <= left.component[x]);
  auto idx = [&](int i, int j, int k) { return t.require_index(g2_element(g2, {i, j, k})); };
  for (int i = 2; i <= 4; ++i) CHECK(left.component[idx(i, 4, 0)] == left.component[idx(1, 4, 0)]);
  CHECK(right.component[idx(1, 4, 0)] == right.component[idx(1, 1, 0)]);
}

TEST_CASE("distinguished involutions") {
  auto g2 = RootSystem::build(Family::G2, 2);
  KLTable t(g2, 7);
  CHECK(t.is_distinguished(0, 0));
  for (int i = 1; i <= 3; ++i) CHECK(t.is_distinguished(t.require_index(g2_element(g2, {i, i, 0})), 3));
  std::string why;
  CHECK_FALSE(t.is_distinguished(t.require_index(g2_element(g2, {1, 2, 0})), 3, &why));
  CHECK(why == "not an involution");
}

TEST_CASE("cache round trip") {
  auto a2 = RootSystem::build(Family::A, 2);
  KLTable t(a2, 6);
  std::ostringstream first;
  save_kl_cache(t, first);
  CHECK(first.str().rfind("klcache v1 A 2 L=6\n", 0) == 0);
  std::istringstream in(first.str());
  std::string warning;
  auto loaded = load_kl_cache(in, a2, 6, warning);
  REQUIRE(loaded);
  std::ostringstream second;
  save_kl_cache(*loaded, second);
  CHECK(first.str() == second.str());
  for (std::size_t w = 0; w < t.size(); ++w) CHECK(loaded->ideal(static_cast<int>(w)) == t.ideal(static_cast<int>(w)));
  CHECK(loaded->mu_pairs() == t.mu_pairs());

  std::istringstream stale(first.str());
  CHECK_FALSE(load_kl_cache(stale, a2, 7, warning).has_value());
  CHECK(warning.find("does not match") != std::string::npos);

  std::istringstream bad("klcache v1 A 2 L=6\nE 0 e\nE 2 1\n");
  CHECK_THROWS_AS(load_kl_cache(bad, a2, 6, warning), std::runtime_error);
  std::istringstream noncanon("klcache v1 A 2 L=6\nE 0 1,1\n");
  CHECK_THROWS_AS(load_kl_cache(noncanon, a2, 6, warning), std::runtime_error);
}
