#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "weylcells/type_a.hpp"

using namespace weylcells;

namespace {

// RSK insertion shape of a finite permutation.
Partition rsk_shape(const std::vector<std::int64_t>& perm) {
  std::vector<std::vector<std::int64_t>> rows;
  for (auto v : perm) {
    std::int64_t x = v;
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
      if (it == rows[r].end()) {
        rows[r].push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  Partition shape;
  for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
  return shape;
}

// Direct search over explicit d-antichains (integer tuples from a window of
// several periods) and disjoint unions of them.
Partition mu_brute_force(const AffinePermutation& p) {
  const int n = p.n();
  std::vector<std::vector<std::int64_t>> chains;
  std::function<void(std::vector<std::int64_t>&, std::int64_t)> grow = [&](std::vector<std::int64_t>& cur,
                                                                          std::int64_t hi) {
    if (is_d_antichain(p, cur)) chains.push_back(cur);
    for (std::int64_t j = cur.back() + 1; j <= hi; ++j) {
      cur.push_back(j);
      if (is_d_antichain(p, cur)) grow(cur, hi);
      cur.pop_back();
    }
  };
  for (std::int64_t j1 = -n + 1; j1 <= 2 * n; ++j1) {
    std::vector<std::int64_t> cur{j1};
    grow(cur, j1 + 2 * n);
  }
  auto residue = [n](std::int64_t j) { return static_cast<int>(((j - 1) % n + n) % n); };
  std::vector<int> d(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, std::size_t, unsigned, int, int)> pick = [&](int q, std::size_t from, unsigned used, int size,
                                                                        int left) {
    d[static_cast<std::size_t>(q - left)] = std::max(d[static_cast<std::size_t>(q - left)], size);
    if (left == 0) return;
    for (std::size_t c = from; c < chains.size(); ++c) {
      unsigned m = 0;
      bool ok = true;
      for (auto j : chains[c]) {
        unsigned bit = 1u << residue(j);
        if ((used | m) & bit) ok = false;
        m |= bit;
      }
      if (ok) pick(q, c + 1, used | m, size + static_cast<int>(chains[c].size()), left - 1);
    }
  };
  pick(n, 0, 0, 0, n);
  for (int q = 1; q <= n; ++q) d[static_cast<std::size_t>(q)] = std::max(d[static_cast<std::size_t>(q)], d[static_cast<std::size_t>(q - 1)]);
  Partition mu;
  for (int q = 1; q <= n; ++q)
    if (d[static_cast<std::size_t>(q)] > d[static_cast<std::size_t>(q - 1)])
      mu.push_back(d[static_cast<std::size_t>(q)] - d[static_cast<std::size_t>(q - 1)]);
  return mu;
}

Element random_element(const RootSystemPtr& rs, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> d(0, rs->rank());
  Element g = Element::identity(rs);
  for (int i = 0; i < len; ++i) g = g.times_generator(d(rng));
  return g;
}

Partition ones(int n) { return Partition(static_cast<std::size_t>(n), 1); }

}  // namespace

TEST_CASE("window validation and parsing") {
  CHECK(AffinePermutation::parse("[2, 1, 3]").window() == std::vector<std::int64_t>{2, 1, 3});
  CHECK_THROWS_AS(AffinePermutation::parse("[1,4,3]"), std::invalid_argument);  // 1 = 4 mod 3
  CHECK_THROWS_AS(AffinePermutation::parse("[1,2,4]"), std::invalid_argument);  // sum of shifts not divisible
  CHECK_THROWS_AS(AffinePermutation::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(AffinePermutation::parse("[1,x]"), std::invalid_argument);
  CHECK(AffinePermutation::parse("[1,2,3]").str() == "[1,2,3]");
}

TEST_CASE("generators of the permutation model") {
  for (int r = 1; r <= 5; ++r) {
    const int n = r + 1;
    auto rs = RootSystem::build(Family::A, r);
    CHECK(to_permutation(Element::identity(rs)) == AffinePermutation::identity(n));
    CHECK(to_permutation(Element::fundamental(rs, 1)) == AffinePermutation::tau(n, 1));
    for (int i = 0; i < n; ++i) CHECK(to_permutation(Element::generator(rs, i)) == AffinePermutation::reflection(n, i));
    // pi has length zero and equals t_{lambda_1} s_1 s_2 ... s_{n-1}
    Element pi = from_permutation(rs, AffinePermutation::rotation(n));
    CHECK(pi.length() == 0);
    std::vector<int> word;
    for (int i = 1; i < n; ++i) word.push_back(i);
    CHECK(pi == Element::fundamental(rs, 1) * Element::from_generators(rs, word));
    // x_i = tau_1 ... tau_i
    for (int i = 1; i < n; ++i) {
      AffinePermutation t = AffinePermutation::identity(n);
      for (int k = 1; k <= i; ++k) t = t * AffinePermutation::tau(n, k);
      CHECK(to_permutation(Element::fundamental(rs, i)) == t.normalized());
    }
  }
}

TEST_CASE("fundamental translations as pi^i times finite words") {
  for (int n = 2; n <= 6; ++n) {
    AffinePermutation pi = AffinePermutation::rotation(n);
    AffinePermutation pi_pow = AffinePermutation::identity(n);
    for (int i = 1; i <= n; ++i) {
      pi_pow = pi_pow * pi;
      // (s_{n-i} ... s_1)(s_{n-i+1} ... s_2) ... (s_{n-1} ... s_i)
      AffinePermutation p = pi_pow;
      for (int b = 0; b < i; ++b)
        for (int s = n - i + b; s >= 1 + b; --s) p = p * AffinePermutation::reflection(n, s);
      AffinePermutation x = AffinePermutation::identity(n);
      for (int k = 1; k <= i; ++k) x = x * AffinePermutation::tau(n, k);
      CHECK(p == x);
    }
    // s_{i+1} pi = pi s_i
    for (int i = 0; i < n; ++i)
      CHECK(AffinePermutation::reflection(n, (i + 1) % n) * pi == pi * AffinePermutation::reflection(n, i));
  }
}

TEST_CASE("the permutation model is a length-preserving isomorphism") {
  std::mt19937 rng(41);
  for (int r = 1; r <= 4; ++r) {
    auto rs = RootSystem::build(Family::A, r);
    for (int trial = 0; trial < 40; ++trial) {
      Element g = random_element(rs, rng, 1 + trial % 11);
      if (trial % 3 == 0) g = Element::gamma(rs, 1 + trial % r) * g;
      Element h = random_element(rs, rng, 6);
      AffinePermutation pg = to_permutation(g);
      CHECK(from_permutation(rs, pg) == g);
      CHECK(from_permutation(rs, pg * AffinePermutation::rotation(r + 1).normalized()) ==
            g * from_permutation(rs, AffinePermutation::rotation(r + 1)));
      CHECK(to_permutation(g * h) == (pg * to_permutation(h)).normalized());
      CHECK(pg.inversions() == g.length());
      CHECK(pg.inverse() * pg == AffinePermutation::identity(r + 1));
    }
  }
  auto g2 = RootSystem::build(Family::G2, 2);
  CHECK_THROWS_AS(to_permutation(Element::identity(g2)), std::invalid_argument);
}

TEST_CASE("d-antichain conditions") {
  AffinePermutation id = AffinePermutation::identity(3);
  CHECK(is_d_antichain(id, {1, 2, 3}));
  CHECK_FALSE(is_d_antichain(id, {1, 2, 3, 4}));
  AffinePermutation s1 = AffinePermutation::parse("[2,1,3]");
  for (std::int64_t j = -4; j <= 7; ++j) CHECK(is_d_antichain(s1, {j}));
  CHECK_FALSE(is_d_antichain(s1, {1, 2}));
  CHECK(is_d_antichain(s1, {2, 3}));
  CHECK_THROWS_AS(is_d_antichain(s1, {2, 2}), std::invalid_argument);
}

TEST_CASE("mu of identity, longest element and the lowest cell") {
  for (int r = 1; r <= 5; ++r) {
    const int n = r + 1;
    auto rs = RootSystem::build(Family::A, r);
    CHECK(mu_partition(Element::identity(rs)) == Partition{n});
    CHECK(mu_partition(longest_finite(rs)) == ones(n));
    IntVec all(static_cast<std::size_t>(r), 1);
    CHECK(mu_partition(Element::dominant(rs, all)) == ones(n));
  }
}

TEST_CASE("mu agrees with the RSK shape on finite permutations") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      CHECK(mu_partition(AffinePermutation(perm)) == rsk_shape(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("mu agrees with a direct search over explicit d-antichain families") {
  std::mt19937 rng(43);
  for (int r = 1; r <= 3; ++r) {
    auto rs = RootSystem::build(Family::A, r);
    for (int trial = 0; trial < 25; ++trial) {
      Element g = random_element(rs, rng, 2 + trial % 9);
      if (trial % 4 == 0) g = Element::gamma(rs, 1) * g;
      AffinePermutation p = to_permutation(g);
      CHECK(mu_partition(p) == mu_brute_force(p));
    }
  }
}

TEST_CASE("mu is a partition, invariant under inversion") {
  std::mt19937 rng(47);
  for (int r = 1; r <= 5; ++r) {
    auto rs = RootSystem::build(Family::A, r);
    for (int trial = 0; trial < 30; ++trial) {
      Element g = random_element(rs, rng, 3 + trial % 12);
      Partition mu = mu_partition(g);
      CHECK(std::accumulate(mu.begin(), mu.end(), 0) == r + 1);
      CHECK(std::is_sorted(mu.rbegin(), mu.rend()));
      CHECK(mu_partition(g.inverse()) == mu);
    }
  }
}

TEST_CASE("second-lowest translations have mu (2,1,...,1)") {
  for (int r = 2; r <= 5; ++r) {
    auto rs = RootSystem::build(Family::A, r);
    Partition expect{2};
    for (int i = 2; i < r + 1; ++i) expect.push_back(1);
    for (int k = 1; k <= r; ++k) {
      IntVec a(static_cast<std::size_t>(r), 1);
      a[static_cast<std::size_t>(k - 1)] = 0;
      Element x = Element::dominant(rs, a);
      CHECK(mu_partition(x) == expect);
      for (int i = 1; i <= r; ++i) {
        Element s = Element::generator(rs, i);
        CHECK(mu_partition(s * x * s) == mu_partition(x));
      }
    }
  }
}

TEST_CASE("two-sided cell comparison") {
  auto p = AffinePermutation::parse("[3,1,2]");
  CHECK(same_two_sided_cell(p, p));
  CHECK_FALSE(same_two_sided_cell(AffinePermutation::identity(3), AffinePermutation::parse("[3,2,1]")));
  CHECK_THROWS_AS(same_two_sided_cell(AffinePermutation::identity(3), AffinePermutation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("conjugation and powers preserve mu") {
  auto a2 = RootSystem::build(Family::A, 2);
  auto rep = check_conjugation_and_powers(Element::fundamental(a2, 1), finite_weyl_group(a2), 4);
  CHECK(rep.ok());
  CHECK(rep.conjugates_checked == 6);
  CHECK(rep.powers_checked == 4);
  auto a3 = RootSystem::build(Family::A, 3);
  auto rep3 = check_conjugation_and_powers(Element::fundamental(a3, 2), finite_weyl_group(a3), 3);
  CHECK(rep3.ok());
  std::mt19937 rng(53);
  for (int r = 2; r <= 4; ++r) {
    auto rs = RootSystem::build(Family::A, r);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 5; ++trial) {
      IntVec l(static_cast<std::size_t>(r));
      for (auto& c : l) c = d(rng);
      CHECK(check_conjugation_and_powers(Element::translation(rs, l), finite_weyl_group(rs), 3).ok());
    }
  }
  CHECK_THROWS_AS(check_conjugation_and_powers(Element::generator(a2, 1), {}, 2), std::invalid_argument);
}

TEST_CASE("right-cell certificates") {
  auto a2 = RootSystem::build(Family::A, 2);
  Element x1 = Element::fundamental(a2, 1);
  auto self = right_cell_certificate(x1, x1);
  REQUIRE(self);
  CHECK(self->size() == 1);
  Element s1 = Element::generator(a2, 1);
  CHECK_FALSE(right_cell_certificate(x1, s1 * x1 * s1).has_value());
  CHECK_THROWS_AS(right_cell_certificate(x1, Element::identity(a2)), std::invalid_argument);
  // w x ~_R w x w^{-1} along the suffix chain, for w s_k > w
  Element x = Element::dominant(a2, {1, 0});
  for (const Element& w : finite_weyl_group(a2)) {
    if (w.is_right_descent(2)) continue;
    auto chain = right_conjugation_chain(w, x);
    CHECK(chain.front() == w * x);
    CHECK(chain.back() == w * x * w.inverse());
    CHECK(chain_keeps_mu(chain));
    auto found = right_cell_certificate(w * x, w * x * w.inverse());
    CHECK(found.has_value());
  }
}
