#include "weylcells/affine_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace weylcells {

namespace {

IntVec identity_matrix(int n) {
  IntVec m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
  return m;
}

IntVec matmul(const IntVec& a, const IntVec& b, int n) {
  IntVec c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::int64_t v = a[static_cast<std::size_t>(i * n + k)];
      if (v == 0) continue;
      for (int j = 0; j < n; ++j)
        c[static_cast<std::size_t>(i * n + j)] += v * b[static_cast<std::size_t>(k * n + j)];
    }
  return c;
}

IntVec matvec(const IntVec& m, const IntVec& v, int n) {
  IntVec r(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += m[static_cast<std::size_t>(i * n + j)] * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

// Matrix of s_i (i >= 1) or of s_theta (i = 0) on weight coordinates, together
// with the translation part of the generator.
std::pair<IntVec, IntVec> generator_data(const RootSystem& rs, int i) {
  const int n = rs.rank();
  if (i < 0 || i > n)
    throw std::invalid_argument("generator s_" + std::to_string(i) + " out of range 0.." + std::to_string(n));
  const RootData& r = rs.root(i == 0 ? rs.highest_short_index() : i - 1);
  // s_beta(lambda) = lambda - <lambda, beta^vee> beta
  IntVec m = identity_matrix(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m[static_cast<std::size_t>(a * n + b)] -=
          r.weight_coords[static_cast<std::size_t>(a)] * r.coroot_coeffs[static_cast<std::size_t>(b)];
  IntVec t(static_cast<std::size_t>(n), 0);
  if (i == 0) t = r.weight_coords;
  return {t, m};
}

}  // namespace

Element::Element(RootSystemPtr rs) : rs_(std::move(rs)) {
  if (!rs_) throw std::invalid_argument("element needs a root system");
  lambda_.assign(static_cast<std::size_t>(rs_->rank()), 0);
  matrix_ = identity_matrix(rs_->rank());
}

Element::Element(RootSystemPtr rs, IntVec lambda, IntVec matrix)
    : rs_(std::move(rs)), lambda_(std::move(lambda)), matrix_(std::move(matrix)) {
  const auto n = static_cast<std::size_t>(rs_->rank());
  if (lambda_.size() != n || matrix_.size() != n * n) throw std::invalid_argument("element data has wrong size");
}

Element Element::generator(RootSystemPtr rs, int i) {
  auto [t, m] = generator_data(*rs, i);
  return Element(std::move(rs), std::move(t), std::move(m));
}

Element Element::translation(RootSystemPtr rs, IntVec lambda) {
  const int n = rs->rank();
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("translation needs " + std::to_string(n) + " coordinates, got " +
                                std::to_string(lambda.size()));
  return Element(std::move(rs), std::move(lambda), identity_matrix(n));
}

Element Element::fundamental(RootSystemPtr rs, int i) {
  const int n = rs->rank();
  if (i < 1 || i > n) throw std::invalid_argument("x_" + std::to_string(i) + " out of range 1.." + std::to_string(n));
  IntVec l(static_cast<std::size_t>(n), 0);
  l[static_cast<std::size_t>(i - 1)] = 1;
  return translation(std::move(rs), std::move(l));
}

Element Element::dominant(RootSystemPtr rs, const IntVec& exponents) {
  for (auto a : exponents)
    if (a < 0) throw std::invalid_argument("dominant translation needs non-negative exponents");
  return translation(std::move(rs), exponents);
}

Element Element::gamma(RootSystemPtr rs, int j) {
  if (j == 0) return identity(std::move(rs));
  Element g = fundamental(std::move(rs), j);
  while (true) {
    auto d = g.right_descents();
    if (d.empty()) return g;
    g = g.times_generator(d.front());
  }
}

Element Element::from_word(RootSystemPtr rs, const Word& word) {
  Element g = identity(rs);
  for (const Letter& l : word) {
    if (l.kind == Letter::Kind::Generator) {
      g = g.times_generator(l.index);
    } else {
      if (l.index < 0 || l.index > rs->rank())
        throw std::invalid_argument("length-zero label g" + std::to_string(l.index) + " out of range");
      g = g * gamma(rs, l.index);
    }
  }
  return g;
}

Element Element::from_generators(RootSystemPtr rs, const std::vector<int>& gens) {
  Element g = identity(std::move(rs));
  for (int i : gens) g = g.times_generator(i);
  return g;
}

void Element::check_same(const Element& o) const {
  if (rs_ != o.rs_ && (rs_->family() != o.rs_->family() || rs_->rank() != o.rs_->rank()))
    throw std::invalid_argument("elements belong to different root systems");
}

Element Element::operator*(const Element& o) const {
  check_same(o);
  const int n = rs_->rank();
  IntVec l = matvec(matrix_, o.lambda_, n);
  for (int i = 0; i < n; ++i) l[static_cast<std::size_t>(i)] += lambda_[static_cast<std::size_t>(i)];
  return Element(rs_, std::move(l), matmul(matrix_, o.matrix_, n));
}

Element Element::inverse() const {
  // With N the matrix of w on simple-coroot coordinates, pairing invariance
  // gives M^{-1} = N^T. Column j of N is the coroot of w(alpha_j).
  const int n = rs_->rank();
  IntVec inv(static_cast<std::size_t>(n * n), 0);
  for (int j = 0; j < n; ++j) {
    IntVec image = matvec(matrix_, rs_->root(j).weight_coords, n);
    auto r = rs_->find_root(image);
    if (!r) throw std::logic_error("finite part does not permute the roots");
    const auto& c = rs_->root(r->index).coroot_coeffs;
    for (int k = 0; k < n; ++k)
      inv[static_cast<std::size_t>(j * n + k)] = r->positive ? c[static_cast<std::size_t>(k)] : -c[static_cast<std::size_t>(k)];
  }
  IntVec l = matvec(inv, lambda_, n);
  for (auto& v : l) v = -v;
  return Element(rs_, std::move(l), std::move(inv));
}

Element Element::times_generator(int i) const {
  auto [t, m] = generator_data(*rs_, i);
  return *this * Element(rs_, std::move(t), std::move(m));
}

Element Element::generator_times(int i) const {
  auto [t, m] = generator_data(*rs_, i);
  return Element(rs_, std::move(t), std::move(m)) * *this;
}

bool Element::is_finite() const {
  return std::all_of(lambda_.begin(), lambda_.end(), [](auto v) { return v == 0; });
}

bool Element::is_translation() const { return matrix_ == identity_matrix(rs_->rank()); }

bool Element::is_involution() const { return (*this * *this) == identity(rs_); }

bool Element::in_affine_weyl() const {
  for (const auto& c : rs_->weight_class(lambda_))
    if (c != Rational(0)) return false;
  return true;
}

int Element::gamma_label() const {
  auto cls = rs_->weight_class(lambda_);
  if (std::all_of(cls.begin(), cls.end(), [](const Rational& c) { return c == Rational(0); })) return 0;
  const int n = rs_->rank();
  for (int j = 1; j <= n; ++j) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j - 1)] = 1;
    if (rs_->weight_class(e) == cls) return j;
  }
  throw std::logic_error("weight class not represented by a fundamental weight");
}

IntVec Element::act(const IntVec& weight) const { return matvec(matrix_, weight, rs_->rank()); }

bool Element::inverts(int root_index) const {
  IntVec rho(static_cast<std::size_t>(rs_->rank()), 1);
  return rs_->pair_weight(act(rho), root_index) < 0;
}

std::int64_t Element::length() const {
  IntVec wrho = act(IntVec(static_cast<std::size_t>(rs_->rank()), 1));
  std::int64_t len = 0;
  const int nu = static_cast<int>(rs_->num_positive());
  for (int r = 0; r < nu; ++r) {
    std::int64_t p = rs_->pair_weight(lambda_, r);
    if (rs_->pair_weight(wrho, r) < 0) p -= 1;
    len += p < 0 ? -p : p;
  }
  return len;
}

IntVec Element::coordinate_form() const {
  IntVec wrho = act(IntVec(static_cast<std::size_t>(rs_->rank()), 1));
  const int nu = static_cast<int>(rs_->num_positive());
  IntVec k(static_cast<std::size_t>(nu));
  for (int r = 0; r < nu; ++r) {
    std::int64_t p = rs_->pair_weight(lambda_, r);
    if (rs_->pair_weight(wrho, r) < 0) p -= 1;
    k[static_cast<std::size_t>(r)] = p;
  }
  return k;
}

bool Element::is_left_descent(int i) const {
  const int n = rs_->rank();
  if (i < 0 || i > n) throw std::invalid_argument("generator index out of range");
  IntVec wrho = act(IntVec(static_cast<std::size_t>(n), 1));
  auto k = [&](int r) {
    std::int64_t p = rs_->pair_weight(lambda_, r);
    return rs_->pair_weight(wrho, r) < 0 ? p - 1 : p;
  };
  if (i == 0) return k(rs_->highest_short_index()) > 0;
  return k(i - 1) < 0;
}

bool Element::is_right_descent(int i) const { return inverse().is_left_descent(i); }

std::vector<int> Element::left_descents() const {
  std::vector<int> d;
  for (int i = 0; i <= rs_->rank(); ++i)
    if (is_left_descent(i)) d.push_back(i);
  return d;
}

std::vector<int> Element::right_descents() const { return inverse().left_descents(); }

ReducedWord Element::reduced_word() const {
  ReducedWord out;
  out.gamma = gamma_label();
  Element g = *this;
  std::vector<int> stripped;
  while (true) {
    Element gi = g.inverse();
    int s = -1;
    for (int i = 0; i <= rs_->rank(); ++i)
      if (gi.is_left_descent(i)) {
        s = i;
        break;
      }
    if (s < 0) break;
    stripped.push_back(s);
    g = g.times_generator(s);
  }
  out.letters.assign(stripped.rbegin(), stripped.rend());
  return out;
}

std::size_t Element::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::int64_t v) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (auto v : lambda_) mix(v);
  for (auto v : matrix_) mix(v);
  return h;
}

std::optional<bool> bruhat_leq(const Element& a, const Element& b) {
  if (a.gamma_label() != b.gamma_label()) return std::nullopt;
  Element x = a, y = b;
  while (true) {
    std::int64_t lx = x.length(), ly = y.length();
    if (lx > ly) return false;
    if (lx == 0) return ly == 0 ? x == y : true;
    auto d = y.right_descents();
    int s = d.front();
    y = y.times_generator(s);
    if (x.is_right_descent(s)) x = x.times_generator(s);
  }
}

std::pair<Element, Element> make_dominant(const Element& x) {
  if (!x.is_translation()) throw std::invalid_argument("make_dominant expects a translation");
  const auto& rs = x.system_ptr();
  Element w = Element::identity(rs);
  Element t = x;
  while (true) {
    const IntVec& l = t.lambda();
    auto it = std::find_if(l.begin(), l.end(), [](auto c) { return c < 0; });
    if (it == l.end()) break;
    int i = static_cast<int>(it - l.begin()) + 1;
    Element s = Element::generator(rs, i);
    w = s * w;
    t = s * t * s;
  }
  return {w, t};
}

Element longest_parabolic(const RootSystemPtr& rs, const std::vector<int>& J, std::int64_t cap) {
  std::vector<int> gens(J);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (int i : gens)
    if (i < 0 || i > rs->rank()) throw std::invalid_argument("generator index out of range in parabolic subset");
  if (static_cast<int>(gens.size()) == rs->rank() + 1)
    throw std::invalid_argument("parabolic subgroup generated by all of S is infinite");
  Element g = Element::identity(rs);
  for (std::int64_t step = 0;; ++step) {
    if (step > cap) throw std::invalid_argument("parabolic subgroup exceeds the enumeration cap");
    Element gi = g.inverse();
    auto it = std::find_if(gens.begin(), gens.end(), [&](int s) { return !gi.is_left_descent(s); });
    if (it == gens.end()) return g;
    g = g.times_generator(*it);
  }
}

Element longest_finite(const RootSystemPtr& rs) {
  std::vector<int> J;
  for (int i = 1; i <= rs->rank(); ++i) J.push_back(i);
  return longest_parabolic(rs, J);
}

std::vector<Element> finite_weyl_group(const RootSystemPtr& rs, std::size_t cap) {
  if (rs->weyl_group_order() > cap) throw std::invalid_argument("Weyl group of " + rs->name() + " is too large to enumerate");
  std::vector<Element> out{Element::identity(rs)};
  std::unordered_set<Element, ElementHash> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 1; i <= rs->rank(); ++i) {
      Element h = out[head].times_generator(i);
      if (seen.insert(h).second) out.push_back(h);
    }
  }
  return out;
}

BallCapExceeded::BallCapExceeded(int attained_length, std::size_t cap)
    : std::runtime_error("ball exceeds " + std::to_string(cap) + " elements; complete up to length " +
                         std::to_string(attained_length)),
      attained(attained_length) {}

std::vector<Element> affine_ball(const RootSystemPtr& rs, int L, std::size_t cap) {
  if (L < 0) throw std::invalid_argument("ball length must be non-negative");
  std::vector<Element> out{Element::identity(rs)};
  std::unordered_set<Element, ElementHash> seen{out.front()};
  std::size_t begin = 0;
  for (int len = 1; len <= L; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (int i = 0; i <= rs->rank(); ++i) {
        Element h = out[k].times_generator(i);
        if (h.length() != len || !seen.insert(h).second) continue;
        if (out.size() >= cap) throw BallCapExceeded(len - 1, cap);
        out.push_back(std::move(h));
      }
    }
    begin = end;
  }
  return out;
}

std::string format_word(const ReducedWord& w) {
  Word word;
  if (w.gamma != 0) word.push_back(Letter::gamma(w.gamma));
  for (int l : w.letters) word.push_back(Letter::gen(l));
  return format_word(word);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    if (w[i].kind == Letter::Kind::Gamma) s += 'g';
    s += std::to_string(w[i].index);
  }
  return s;
}

}  // namespace weylcells
