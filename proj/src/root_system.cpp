#include "weylcells/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace weylcells {

namespace {

Vector unit(int dim, int i, Rational c = 1) {
  Vector v(static_cast<std::size_t>(dim));
  v[static_cast<std::size_t>(i)] = c;
  return v;
}

Vector combo(int dim, std::initializer_list<std::pair<int, Rational>> terms) {
  Vector v(static_cast<std::size_t>(dim));
  for (auto [i, c] : terms) v[static_cast<std::size_t>(i)] += c;
  return v;
}

std::vector<Vector> simple_roots_for(Family f, int n) {
  std::vector<Vector> s;
  auto chain = [&](int dim, int count) {
    for (int i = 0; i < count; ++i) s.push_back(combo(dim, {{i, 1}, {i + 1, -1}}));
  };
  const Rational half(1, 2);
  switch (f) {
    case Family::A:
      chain(n + 1, n);
      break;
    case Family::B:
      chain(n, n - 1);
      s.push_back(unit(n, n - 1, 2));
      break;
    case Family::C:
      chain(n, n - 1);
      s.push_back(unit(n, n - 1));
      break;
    case Family::D:
      chain(n, n - 1);
      s.push_back(combo(n, {{n - 2, 1}, {n - 1, 1}}));
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      Vector a1(8, -half);
      a1[0] = half;
      a1[7] = half;
      s.push_back(a1);
      s.push_back(combo(8, {{0, 1}, {1, 1}}));
      for (int i = 0; i + 2 < n; ++i) s.push_back(combo(8, {{i + 1, 1}, {i, -1}}));
      break;
    }
    case Family::F4:
      s.push_back(Vector{half, -half, -half, -half});
      s.push_back(unit(4, 3));
      s.push_back(combo(4, {{2, 1}, {3, -1}}));
      s.push_back(combo(4, {{1, 1}, {2, -1}}));
      break;
    case Family::G2:
      s.push_back(combo(3, {{0, 1}, {1, -1}}));
      s.push_back(combo(3, {{0, -2}, {1, 1}, {2, 1}}));
      break;
  }
  return s;
}

void check_rank(Family f, int n) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 3; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E6: ok = n == 6; break;
    case Family::E7: ok = n == 7; break;
    case Family::E8: ok = n == 8; break;
    case Family::F4: ok = n == 4; break;
    case Family::G2: ok = n == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("unsupported root system " + std::string(family_name(f)) +
                                " of rank " + std::to_string(n));
}

std::vector<Rational> invert(const std::vector<Rational>& m, int n) {
  std::vector<Rational> a(m);
  std::vector<Rational> inv(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i * n + i)] = 1;
  auto at = [n](std::vector<Rational>& v, int r, int c) -> Rational& {
    return v[static_cast<std::size_t>(r * n + c)];
  };
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && at(a, piv, col) == Rational(0)) ++piv;
    if (piv == n) throw std::logic_error("singular matrix");
    for (int c = 0; c < n; ++c) {
      std::swap(at(a, col, c), at(a, piv, c));
      std::swap(at(inv, col, c), at(inv, piv, c));
    }
    Rational p = at(a, col, col);
    for (int c = 0; c < n; ++c) {
      at(a, col, c) /= p;
      at(inv, col, c) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational f = at(a, r, col);
      if (f == Rational(0)) continue;
      for (int c = 0; c < n; ++c) {
        at(a, r, c) -= f * at(a, col, c);
        at(inv, r, c) -= f * at(inv, col, c);
      }
    }
  }
  return inv;
}

std::int64_t det3(const std::int64_t g[3][3]) {
  return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
         g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
         g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string up;
  for (char c : text) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E6, Family::E7, Family::E8,
                   Family::F4, Family::G2}) {
    if (up == family_name(f)) return f;
  }
  if (up == "E") throw std::invalid_argument("family E needs its rank in the name: E6, E7 or E8");
  throw std::invalid_argument("unknown root system family '" + std::string(text) + "'");
}

std::shared_ptr<const RootSystem> RootSystem::build(Family family, int rank) {
  check_rank(family, rank);
  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->finish(family, rank, simple_roots_for(family, rank));
  return rs;
}

void RootSystem::finish(Family family, int rank, std::vector<Vector> simple) {
  family_ = family;
  rank_ = rank;
  const int n = rank;
  ambient_dim_ = static_cast<int>(simple.front().size());

  std::vector<Vector> simple_coroots;
  for (const auto& a : simple) simple_coroots.push_back((Rational(2) / dot(a, a)) * a);

  cartan_.assign(static_cast<std::size_t>(n * n), 0);
  std::vector<Rational> cart(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational v = dot(simple[static_cast<std::size_t>(i)], simple_coroots[static_cast<std::size_t>(j)]);
      cartan_[static_cast<std::size_t>(i * n + j)] = v.to_integer();
      cart[static_cast<std::size_t>(i * n + j)] = v;
    }
  }
  cartan_inverse_ = invert(cart, n);

  // lambda_i = sum_k (A^-1)_{ik} alpha_k
  weights_.clear();
  for (int i = 0; i < n; ++i) {
    Vector w(static_cast<std::size_t>(ambient_dim_));
    for (int k = 0; k < n; ++k)
      w = w + cartan_inverse_[static_cast<std::size_t>(i * n + k)] * simple[static_cast<std::size_t>(k)];
    weights_.push_back(w);
  }

  // Phi is the W0-orbit of the simple roots.
  std::set<Vector> seen(simple.begin(), simple.end());
  std::deque<Vector> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    Vector v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const Vector& a = simple[static_cast<std::size_t>(i)];
      Vector r = v - dot(v, simple_coroots[static_cast<std::size_t>(i)]) * a;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }

  Rational min_norm = dot(simple.front(), simple.front());
  for (const auto& a : simple) min_norm = std::min(min_norm, dot(a, a));

  positive_.clear();
  for (const Vector& v : seen) {
    RootData r;
    r.ambient = v;
    r.weight_coords.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      r.weight_coords[static_cast<std::size_t>(j)] = dot(v, simple_coroots[static_cast<std::size_t>(j)]).to_integer();
    r.root_coeffs.assign(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      Rational b;
      for (int j = 0; j < n; ++j)
        b += cartan_inverse_[static_cast<std::size_t>(j * n + k)] * r.weight_coords[static_cast<std::size_t>(j)];
      r.root_coeffs[static_cast<std::size_t>(k)] = b.to_integer();
    }
    bool pos = std::all_of(r.root_coeffs.begin(), r.root_coeffs.end(), [](auto c) { return c >= 0; });
    if (!pos) continue;
    Vector coroot = (Rational(2) / dot(v, v)) * v;
    r.coroot_coeffs.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      r.coroot_coeffs[static_cast<std::size_t>(k)] = dot(weights_[static_cast<std::size_t>(k)], coroot).to_integer();
    r.height = 0;
    for (auto c : r.root_coeffs) r.height += c;
    r.is_short = dot(v, v) == min_norm;
    positive_.push_back(std::move(r));
  }
  std::sort(positive_.begin(), positive_.end(), [](const RootData& a, const RootData& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.root_coeffs > b.root_coeffs;
  });

  by_weight_.clear();
  highest_short_ = -1;
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    const auto& r = positive_[i];
    by_weight_[r.weight_coords] = SignedRoot{static_cast<int>(i), true};
    IntVec neg(r.weight_coords);
    for (auto& c : neg) c = -c;
    by_weight_[neg] = SignedRoot{static_cast<int>(i), false};
    if (r.is_short) highest_short_ = static_cast<int>(i);  // heights are sorted
  }

  // Rank-2 subsystems: intersections of Phi with planes spanned by two positive roots.
  const std::size_t nu = positive_.size();
  std::vector<std::int64_t> gram(nu * nu);
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = 0; j < nu; ++j)
      gram[i * nu + j] = (Rational(4) * dot(positive_[i].ambient, positive_[j].ambient)).to_integer();
  auto g = [&](std::size_t i, std::size_t j) { return gram[i * nu + j]; };

  std::set<std::vector<int>> planes;
  std::vector<char> covered(nu * nu, 0);
  for (std::size_t p = 0; p < nu; ++p) {
    for (std::size_t q = p + 1; q < nu; ++q) {
      if (covered[p * nu + q]) continue;
      std::vector<int> members;
      for (std::size_t r = 0; r < nu; ++r) {
        const std::int64_t m[3][3] = {{g(p, p), g(p, q), g(p, r)},
                                      {g(q, p), g(q, q), g(q, r)},
                                      {g(r, p), g(r, q), g(r, r)}};
        if (det3(m) == 0) members.push_back(static_cast<int>(r));
      }
      for (int a : members)
        for (int b : members) covered[static_cast<std::size_t>(a) * nu + static_cast<std::size_t>(b)] = 1;
      planes.insert(members);
    }
  }

  auto is_sum = [&](int target, const std::vector<int>& members) {
    for (int a : members)
      for (int b : members) {
        if (a >= b) continue;
        if (positive_[static_cast<std::size_t>(a)].ambient + positive_[static_cast<std::size_t>(b)].ambient ==
            positive_[static_cast<std::size_t>(target)].ambient)
          return true;
      }
    return false;
  };

  rank2_.clear();
  for (const auto& members : planes) {
    if (members.size() == 2) continue;  // A1 x A1
    std::vector<int> simple_in, other;
    for (int r : members) (is_sum(r, members) ? other : simple_in).push_back(r);
    if (simple_in.size() != 2) throw std::logic_error("rank-2 subsystem without two simple roots");
    Rank2Subsystem sub;
    if (members.size() == 3) {
      sub.kind = Rank2Subsystem::Kind::A2;
      sub.roots = {simple_in[0], simple_in[1], other.at(0)};
    } else if (members.size() == 4) {
      sub.kind = Rank2Subsystem::Kind::B2;
      int a = simple_in[0], b = simple_in[1];
      if (g(static_cast<std::size_t>(a), static_cast<std::size_t>(a)) >
          g(static_cast<std::size_t>(b), static_cast<std::size_t>(b)))
        std::swap(a, b);
      const Vector& va = positive_[static_cast<std::size_t>(a)].ambient;
      const Vector& vb = positive_[static_cast<std::size_t>(b)].ambient;
      int ab = -1, aab = -1;
      for (int r : other) {
        const Vector& v = positive_[static_cast<std::size_t>(r)].ambient;
        if (v == va + vb) ab = r;
        if (v == Rational(2) * va + vb) aab = r;
      }
      if (ab < 0 || aab < 0) throw std::logic_error("malformed B2 subsystem");
      sub.roots = {a, b, ab, aab};
    } else if (members.size() == 6) {
      sub.kind = Rank2Subsystem::Kind::G2;
      sub.roots = members;
    } else {
      throw std::logic_error("unexpected rank-2 subsystem size " + std::to_string(members.size()));
    }
    rank2_.push_back(std::move(sub));
  }
}

std::string RootSystem::name() const {
  std::string f(family_name(family_));
  if (family_ == Family::A || family_ == Family::B || family_ == Family::C || family_ == Family::D)
    f += std::to_string(rank_);
  return f;
}

std::int64_t RootSystem::cartan(int i, int j) const {
  return cartan_.at(static_cast<std::size_t>((i - 1) * rank_ + (j - 1)));
}

IntVec RootSystem::weight_coords(const Vector& v) const {
  if (static_cast<int>(v.size()) != ambient_dim_)
    throw std::invalid_argument("vector has dimension " + std::to_string(v.size()) + ", expected " +
                                std::to_string(ambient_dim_));
  IntVec out(static_cast<std::size_t>(rank_));
  for (int j = 1; j <= rank_; ++j) {
    const Vector& a = simple_root(j);
    Rational p = Rational(2) * dot(v, a) / dot(a, a);
    if (!p.is_integer())
      throw std::invalid_argument("vector is not in the weight lattice: pairing with coroot alpha_" +
                                  std::to_string(j) + "^vee is " + p.compact());
    out[static_cast<std::size_t>(j - 1)] = p.num();
  }
  // Weights must lie in the span of the roots.
  if (to_ambient(out) != v) throw std::invalid_argument("vector does not lie in the span of the roots");
  return out;
}

Vector RootSystem::to_ambient(const IntVec& weight) const {
  Vector v(static_cast<std::size_t>(ambient_dim_));
  for (int i = 0; i < rank_; ++i)
    if (weight[static_cast<std::size_t>(i)] != 0)
      v = v + Rational(weight[static_cast<std::size_t>(i)]) * weights_[static_cast<std::size_t>(i)];
  return v;
}

std::int64_t RootSystem::pair_weight(const IntVec& weight, int root_index) const {
  const auto& c = positive_[static_cast<std::size_t>(root_index)].coroot_coeffs;
  std::int64_t s = 0;
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * weight[k];
  return s;
}

std::optional<SignedRoot> RootSystem::find_root(const IntVec& weight) const {
  auto it = by_weight_.find(weight);
  if (it == by_weight_.end()) return std::nullopt;
  return it->second;
}

std::optional<SignedRoot> RootSystem::find_root(const Vector& ambient) const {
  if (static_cast<int>(ambient.size()) != ambient_dim_) return std::nullopt;
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    if (positive_[i].ambient == ambient) return SignedRoot{static_cast<int>(i), true};
    if (-positive_[i].ambient == ambient) return SignedRoot{static_cast<int>(i), false};
  }
  return std::nullopt;
}

std::int64_t RootSystem::pairing(const Vector& v, const Vector& alpha) const {
  auto r = find_root(alpha);
  if (!r) throw std::invalid_argument("vector is not a root");
  IntVec w = weight_coords(v);
  std::int64_t p = pair_weight(w, r->index);
  return r->positive ? p : -p;
}

Vector RootSystem::reflect(const Vector& alpha, const Vector& v) const {
  if (!find_root(alpha)) throw std::invalid_argument("reflection along a vector that is not a root");
  Rational c = Rational(2) * dot(v, alpha) / dot(alpha, alpha);
  return v - c * alpha;
}

std::vector<Rational> RootSystem::weight_class(const IntVec& weight) const {
  std::vector<Rational> out(static_cast<std::size_t>(rank_));
  for (int k = 0; k < rank_; ++k) {
    Rational b;
    for (int j = 0; j < rank_; ++j)
      b += cartan_inverse_[static_cast<std::size_t>(j * rank_ + k)] * weight[static_cast<std::size_t>(j)];
    // fractional part in [0, 1)
    std::int64_t q = b.num() / b.den();
    if (b.num() < 0 && b.num() % b.den() != 0) --q;
    out[static_cast<std::size_t>(k)] = b - Rational(q);
  }
  return out;
}

std::uint64_t RootSystem::weyl_group_order() const {
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = rank_;
  switch (family_) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * fact(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * fact(n);
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
    case Family::F4: return 1152;
    case Family::G2: return 12;
  }
  return 0;
}

int RootSystem::coxeter_number() const {
  return static_cast<int>(2 * num_positive() / static_cast<std::size_t>(rank_));
}

}  // namespace weylcells
