#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "weylcells/affine_group.hpp"

using namespace weylcells;

namespace {

std::vector<std::pair<Family, int>> small_systems() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 3}, {Family::C, 2},
          {Family::C, 3}, {Family::D, 4}, {Family::F4, 4}, {Family::G2, 2}};
}

std::vector<std::pair<Family, int>> all_systems() {
  auto v = small_systems();
  v.insert(v.end(), {{Family::B, 5}, {Family::C, 6}, {Family::D, 5}, {Family::E6, 6}, {Family::E7, 7}, {Family::E8, 8}});
  return v;
}

std::vector<int> random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> d(0, n);
  std::vector<int> w;
  for (int i = 0; i < len; ++i) w.push_back(d(rng));
  return w;
}

// Word-inductive coordinate form: k(w s_i, a) = k(w, a) + k(s_i, wbar^{-1}(a)).
IntVec inductive_coordinate_form(const RootSystemPtr& rs, const std::vector<int>& word) {
  const auto nu = rs->num_positive();
  IntVec k(nu, 0);
  Element w = Element::identity(rs);
  for (int s : word) {
    Element winv = w.inverse();
    int simple = s == 0 ? rs->highest_short_index() : s - 1;
    for (std::size_t r = 0; r < nu; ++r) {
      IntVec img = winv.act(rs->root(static_cast<int>(r)).weight_coords);
      auto found = rs->find_root(img);
      REQUIRE(found);
      if (found->index != simple) continue;
      // k(s_i, +-alpha_i) = -+1 with alpha_0 = -theta
      int sign = found->positive ? -1 : 1;
      if (s == 0) sign = -sign;
      k[r] += sign;
    }
    w = w.times_generator(s);
  }
  return k;
}

}  // namespace

TEST_CASE("from_word reproduces the G2 fundamental translations") {
  auto rs = RootSystem::build(Family::G2, 2);
  CHECK(Element::from_generators(rs, {0, 1, 2, 1, 2, 1}) == Element::fundamental(rs, 1));
  CHECK(Element::from_generators(rs, {0, 1, 2, 1, 0, 2, 1, 2, 1, 2}) == Element::fundamental(rs, 2));
  CHECK(Element::from_generators(rs, {}) == Element::identity(rs));
  CHECK_THROWS_AS(Element::generator(rs, 3), std::invalid_argument);
  CHECK_THROWS_AS(Element::generator(rs, -1), std::invalid_argument);
}

TEST_CASE("generators are involutions of length one") {
  for (auto [f, n] : all_systems()) {
    auto rs = RootSystem::build(f, n);
    for (int i = 0; i <= n; ++i) {
      Element s = Element::generator(rs, i);
      CHECK(s.length() == 1);
      CHECK(s.is_involution());
      CHECK(s.in_affine_weyl());
      CHECK(s.left_descents() == std::vector<int>{i});
      CHECK(s.right_descents() == std::vector<int>{i});
    }
  }
}

TEST_CASE("group axioms on random elements") {
  std::mt19937 rng(7);
  for (auto [f, n] : small_systems()) {
    auto rs = RootSystem::build(f, n);
    Element e = Element::identity(rs);
    for (int trial = 0; trial < 20; ++trial) {
      Element a = Element::from_generators(rs, random_word(rng, n, 9));
      Element b = Element::from_generators(rs, random_word(rng, n, 7)) * Element::fundamental(rs, 1 + trial % n);
      Element c = Element::from_generators(rs, random_word(rng, n, 5));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * e == a);
      CHECK(a.inverse() * a == e);
      CHECK(b * b.inverse() == e);
      CHECK(b.inverse().length() == b.length());
    }
    // X is abelian and t_l t_m = t_{l+m}
    IntVec l(static_cast<std::size_t>(n)), m(static_cast<std::size_t>(n)), sum(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      l[static_cast<std::size_t>(i)] = i - 1;
      m[static_cast<std::size_t>(i)] = 2 * i + 1;
      sum[static_cast<std::size_t>(i)] = 3 * i;
    }
    CHECK(Element::translation(rs, l) * Element::translation(rs, m) == Element::translation(rs, sum));
  }
  auto g2 = RootSystem::build(Family::G2, 2);
  Element x1 = Element::fundamental(g2, 1);
  CHECK((x1 * x1).lambda() == IntVec{2, 0});
}

TEST_CASE("elements of different root systems do not multiply") {
  auto a = RootSystem::build(Family::A, 2);
  auto g = RootSystem::build(Family::G2, 2);
  CHECK_THROWS_AS(Element::generator(a, 1) * Element::generator(g, 1), std::invalid_argument);
}

TEST_CASE("length values for C, B and F4") {
  for (int n = 2; n <= 6; ++n) {
    auto rs = RootSystem::build(Family::C, n);
    for (int i = 1; i < n; ++i) CHECK(Element::fundamental(rs, i).length() == i * (2 * n - i + 1));
    CHECK(Element::fundamental(rs, n).length() == n * (n + 1) / 2);
  }
  for (int n = 3; n <= 6; ++n) {
    auto rs = RootSystem::build(Family::B, n);
    CHECK(Element::fundamental(rs, n - 1).inverse().length() == n * n - 1);
  }
  auto f4 = RootSystem::build(Family::F4, 4);
  CHECK(Element::fundamental(f4, 3).length() == 42);
  CHECK(Element::identity(f4).length() == 0);
}

TEST_CASE("length identities between simple reflections and fundamental translations") {
  for (auto [f, n] : all_systems()) {
    auto rs = RootSystem::build(f, n);
    for (int j = 1; j <= n; ++j) {
      Element x = Element::fundamental(rs, j);
      const auto lx = x.length();
      for (int i = 1; i <= n; ++i) {
        Element s = Element::generator(rs, i);
        if (i != j) {
          CHECK((s * x).length() == lx + 1);
          CHECK((x * s).length() == lx + 1);
        } else {
          CHECK((s * x).length() == lx + 1);
          CHECK((x * s).length() == lx - 1);
        }
      }
    }
  }
}

TEST_CASE("dominance is detected by additivity of length over W0") {
  std::mt19937 rng(11);
  for (auto [f, n] : small_systems()) {
    if (n > 4 || f == Family::F4) continue;
    auto rs = RootSystem::build(f, n);
    auto w0 = finite_weyl_group(rs);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 12; ++trial) {
      IntVec l(static_cast<std::size_t>(n));
      for (auto& c : l) c = d(rng);
      Element x = Element::translation(rs, l);
      bool dominant = std::all_of(l.begin(), l.end(), [](auto c) { return c >= 0; });
      bool additive = true;
      for (const auto& w : w0) additive = additive && (w * x).length() == w.length() + x.length();
      CHECK(dominant == additive);
    }
  }
  // F4 with a sample of W0
  auto f4 = RootSystem::build(Family::F4, 4);
  Element x = Element::dominant(f4, {1, 0, 2, 1});
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> word = random_word(rng, 4, 10);
    for (auto& s : word) s = 1 + s % 4;
    Element w = Element::from_generators(f4, word);
    CHECK((w * x).length() == w.length() + x.length());
  }
}

TEST_CASE("length is additive on dominant translations and scales under conjugate powers") {
  std::mt19937 rng(5);
  for (auto [f, n] : small_systems()) {
    auto rs = RootSystem::build(f, n);
    std::uniform_int_distribution<int> d(0, 3), e(-3, 3);
    for (int trial = 0; trial < 6; ++trial) {
      IntVec a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i)] = d(rng);
        b[static_cast<std::size_t>(i)] = d(rng);
        c[static_cast<std::size_t>(i)] = e(rng);
      }
      Element x = Element::dominant(rs, a), y = Element::dominant(rs, b);
      CHECK((x * y).length() == x.length() + y.length());
      Element t = Element::translation(rs, c);
      std::vector<int> word = random_word(rng, n, 8);
      for (auto& s : word) s = 1 + s % n;
      Element w = Element::from_generators(rs, word);
      Element power = Element::identity(rs);
      for (int k = 1; k <= 3; ++k) {
        power = power * t;
        CHECK((w * power * w.inverse()).length() == k * t.length());
      }
    }
  }
}

TEST_CASE("right descents and parabolic factorization of dominant translations") {
  for (auto [f, n] : small_systems()) {
    auto rs = RootSystem::build(f, n);
    for (int mask = 1; mask < (1 << n); ++mask) {
      IntVec a(static_cast<std::size_t>(n), 0);
      std::vector<int> J;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) {
          a[static_cast<std::size_t>(i)] = 1 + (i % 2);
          J.push_back(i + 1);
        }
      Element x = Element::dominant(rs, a);
      CHECK(x.right_descents() == J);
      Element wJ = longest_parabolic(rs, J);
      CHECK(x.length() == (x * wJ).length() + wJ.length());
    }
  }
}

TEST_CASE("descent sets from the coordinate form agree with length comparison") {
  std::mt19937 rng(3);
  for (auto [f, n] : all_systems()) {
    auto rs = RootSystem::build(f, n);
    for (int trial = 0; trial < 15; ++trial) {
      Element g = Element::from_generators(rs, random_word(rng, n, 12));
      if (trial % 3 == 0) g = g * Element::fundamental(rs, 1 + trial % n);
      const auto lg = g.length();
      for (int i = 0; i <= n; ++i) {
        CHECK(g.is_left_descent(i) == (g.generator_times(i).length() < lg));
        CHECK(g.is_right_descent(i) == (g.times_generator(i).length() < lg));
        CHECK(std::abs(g.times_generator(i).length() - lg) == 1);
      }
    }
  }
}

TEST_CASE("right descents via coordinate form at wbar(alpha_j)") {
  std::mt19937 rng(23);
  for (auto [f, n] : small_systems()) {
    auto rs = RootSystem::build(f, n);
    for (int trial = 0; trial < 15; ++trial) {
      Element g = Element::from_generators(rs, random_word(rng, n, 10));
      IntVec k = g.coordinate_form();
      for (int j = 0; j <= n; ++j) {
        // alpha_0 = -theta
        IntVec a = rs->root(j == 0 ? rs->highest_short_index() : j - 1).weight_coords;
        if (j == 0)
          for (auto& c : a) c = -c;
        auto r = rs->find_root(g.act(a));
        REQUIRE(r);
        std::int64_t kv = r->positive ? k[static_cast<std::size_t>(r->index)] : -k[static_cast<std::size_t>(r->index)];
        CHECK(g.is_right_descent(j) == (kv > 0));
      }
    }
  }
}

TEST_CASE("coordinate form matches the word-inductive definition") {
  std::mt19937 rng(17);
  for (auto [f, n] : small_systems()) {
    auto rs = RootSystem::build(f, n);
    CHECK(Element::identity(rs).coordinate_form() == IntVec(rs->num_positive(), 0));
    for (int i = 1; i <= n; ++i) {
      IntVec k(rs->num_positive(), 0);
      k[static_cast<std::size_t>(i - 1)] = -1;
      CHECK(Element::generator(rs, i).coordinate_form() == k);
    }
    for (int trial = 0; trial < 20; ++trial) {
      auto word = random_word(rng, n, 1 + trial);
      CHECK(Element::from_generators(rs, word).coordinate_form() == inductive_coordinate_form(rs, word));
    }
    IntVec a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = i + 1;
    Element x = Element::dominant(rs, a);
    IntVec k = x.coordinate_form();
    for (std::size_t r = 0; r < k.size(); ++r) CHECK(k[r] == rs->pair_weight(a, static_cast<int>(r)));
  }
}

TEST_CASE("reduced words") {
  std::mt19937 rng(29);
  for (auto [f, n] : all_systems()) {
    auto rs = RootSystem::build(f, n);
    CHECK(Element::identity(rs).reduced_word().letters.empty());
    for (int trial = 0; trial < 10; ++trial) {
      Element g = Element::from_generators(rs, random_word(rng, n, 14));
      if (trial % 2) g = Element::fundamental(rs, 1 + trial % n) * g;
      ReducedWord w = g.reduced_word();
      CHECK(static_cast<std::int64_t>(w.letters.size()) == g.length());
      Element back = Element::gamma(rs, w.gamma) * Element::from_generators(rs, w.letters);
      CHECK(back == g);
    }
    for (int j = 0; j <= n; ++j) CHECK(Element::gamma(rs, j).length() == 0);
  }
  auto g2 = RootSystem::build(Family::G2, 2);
  CHECK(Element::fundamental(g2, 1).reduced_word().letters.size() == 6);
}

TEST_CASE("C_n fundamental translations have the periodic reduced expressions") {
  for (int n = 2; n <= 5; ++n) {
    auto rs = RootSystem::build(Family::C, n);
    for (int i = 1; i <= n; ++i) {
      std::vector<int> block;
      for (int k = 0; k <= n; ++k) block.push_back(k);
      for (int k = n - 1; k >= i; --k) block.push_back(k);
      std::vector<int> word;
      for (int r = 0; r < i; ++r) word.insert(word.end(), block.begin(), block.end());
      Element w = Element::from_generators(rs, word);
      Element x = Element::fundamental(rs, i);
      if (i < n) {
        CHECK(w == x);
        CHECK(static_cast<std::int64_t>(word.size()) == x.length());
      } else {
        // x_n is not in W_a; the word differs from it by the length-zero factor
        CHECK(x.gamma_label() == n);
        CHECK(w.length() == static_cast<std::int64_t>(word.size()));
      }
    }
  }
}

TEST_CASE("Bruhat order agrees with the subword criterion") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::C, 2}, {Family::G2, 2}}) {
    auto rs = RootSystem::build(f, n);
    // every element of length <= 6 via breadth-first search
    std::vector<Element> ball{Element::identity(rs)};
    std::set<Element> seen{ball.front()};
    for (std::size_t h = 0; h < ball.size(); ++h) {
      if (ball[h].length() >= 6) continue;
      for (int s = 0; s <= n; ++s) {
        Element g = ball[h].times_generator(s);
        if (g.length() > ball[h].length() && seen.insert(g).second) ball.push_back(g);
      }
    }
    for (const Element& b : ball) {
      auto word = b.reduced_word().letters;
      std::set<Element> below;
      for (unsigned mask = 0; mask < (1u << word.size()); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < word.size(); ++i)
          if (mask & (1u << i)) sub.push_back(word[i]);
        below.insert(Element::from_generators(rs, sub));
      }
      for (const Element& a : ball) {
        auto le = bruhat_leq(a, b);
        REQUIRE(le.has_value());
        CHECK(*le == (below.count(a) > 0));
      }
    }
  }
}

TEST_CASE("Bruhat order on the extended group") {
  auto rs = RootSystem::build(Family::A, 2);
  Element g = Element::gamma(rs, 1);
  CHECK_FALSE(bruhat_leq(Element::identity(rs), g).has_value());
  CHECK(bruhat_leq(g, g * Element::generator(rs, 0)).value());
  CHECK(bruhat_leq(g * Element::generator(rs, 1), g * Element::from_generators(rs, {2, 1})).value());
  CHECK_FALSE(bruhat_leq(g * Element::generator(rs, 0), g * Element::from_generators(rs, {2, 1})).value());
  for (int n = 3; n <= 6; ++n) {
    auto b = RootSystem::build(Family::B, n);
    std::vector<int> K;
    for (int i = 1; i < n; ++i) K.push_back(i);
    Element y = Element::fundamental(b, n - 1).inverse() * longest_parabolic(b, K);
    CHECK(bruhat_leq(y * Element::generator(b, 0), y).value());
  }
}

TEST_CASE("make_dominant returns the minimal conjugator") {
  auto g2 = RootSystem::build(Family::G2, 2);
  Element s1 = Element::generator(g2, 1);
  Element x1 = Element::fundamental(g2, 1);
  auto [w, d] = make_dominant(s1 * x1 * s1);
  CHECK(w == s1);
  CHECK(d == x1);
  auto [w2, d2] = make_dominant(x1);
  CHECK(w2 == Element::identity(g2));
  CHECK(d2 == x1);
  CHECK_THROWS_AS(make_dominant(s1), std::invalid_argument);

  std::mt19937 rng(31);
  for (auto [f, n] : small_systems()) {
    if (n > 3) continue;
    auto rs = RootSystem::build(f, n);
    auto w0 = finite_weyl_group(rs);
    std::uniform_int_distribution<int> dist(-3, 1);
    for (int trial = 0; trial < 8; ++trial) {
      IntVec l(static_cast<std::size_t>(n));
      for (auto& c : l) c = dist(rng);
      Element x = Element::translation(rs, l);
      auto [conj, dom] = make_dominant(x);
      CHECK(conj * x * conj.inverse() == dom);
      // orbit oracle: the shortest w making x dominant
      std::int64_t best = -1;
      for (const auto& u : w0) {
        const IntVec m = (u * x * u.inverse()).lambda();
        if (std::all_of(m.begin(), m.end(), [](auto c) { return c >= 0; })) {
          if (best < 0 || u.length() < best) best = u.length();
          if (u.length() == best) CHECK((u * x * u.inverse()) == dom);
        }
      }
      CHECK(conj.length() == best);
    }
  }
}

TEST_CASE("longest elements of finite parabolic subgroups") {
  for (int n = 3; n <= 6; ++n) {
    auto rs = RootSystem::build(Family::B, n);
    std::vector<int> J;
    for (int i = 0; i < n; ++i) J.push_back(i);
    Element w = longest_parabolic(rs, J);
    CHECK(w.length() == n * n - n);
    CHECK(w.is_involution());
  }
  auto f4 = RootSystem::build(Family::F4, 4);
  CHECK(longest_parabolic(f4, {0, 1, 2, 3}).length() == 16);
  CHECK(longest_parabolic(f4, {1, 2, 3}).length() == 9);
  CHECK(longest_finite(f4).length() == 24);
  for (auto [f, n] : all_systems()) {
    auto rs = RootSystem::build(f, n);
    for (int i = 0; i <= n; ++i) CHECK(longest_parabolic(rs, {i}) == Element::generator(rs, i));
    CHECK(longest_finite(rs).length() == static_cast<std::int64_t>(rs->num_positive()));
    std::vector<int> S;
    for (int i = 0; i <= n; ++i) S.push_back(i);
    CHECK_THROWS_AS(longest_parabolic(rs, S), std::invalid_argument);
  }
}

TEST_CASE("finite Weyl group enumeration has the classical order") {
  for (auto [f, n] : small_systems()) {
    auto rs = RootSystem::build(f, n);
    CHECK(finite_weyl_group(rs).size() == rs->weyl_group_order());
  }
}

TEST_CASE("length-zero elements are exactly the Gamma representatives") {
  for (auto [f, n] : all_systems()) {
    auto rs = RootSystem::build(f, n);
    std::set<int> labels;
    for (int j = 0; j <= n; ++j) {
      Element t = Element::gamma(rs, j);
      CHECK(t.length() == 0);
      CHECK(t.gamma_label() <= j);
      labels.insert(t.gamma_label());
      CHECK((t.gamma_label() == 0) == t.in_affine_weyl());
    }
  }
}
