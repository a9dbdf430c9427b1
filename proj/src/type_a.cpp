#include "weylcells/type_a.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace weylcells {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t n) { return a - floor_div(a, n) * n; }

void require_type_a(const RootSystem& rs) {
  if (rs.family() != Family::A) throw std::invalid_argument("the permutation model needs family A, got " + rs.name());
}

}  // namespace

AffinePermutation::AffinePermutation(std::vector<std::int64_t> window) : window_(std::move(window)) {
  const auto n = static_cast<std::int64_t>(window_.size());
  if (n == 0) throw std::invalid_argument("empty window");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    auto r = static_cast<std::size_t>(mod_pos(window_[static_cast<std::size_t>(i)], n));
    if (seen[r]) throw std::invalid_argument("window values must be pairwise incongruent mod " + std::to_string(n));
    seen[r] = 1;
    total += window_[static_cast<std::size_t>(i)] - (i + 1);
  }
  if (mod_pos(total, n) != 0)
    throw std::invalid_argument("sum of sigma(i) - i must be divisible by " + std::to_string(n));
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::rotation(int n) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 2;
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::reflection(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("s_" + std::to_string(i) + " out of range");
  std::vector<std::int64_t> w(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    std::int64_t v = j;
    if (mod_pos(j, n) == i) v = j + 1;
    else if (mod_pos(j, n) == mod_pos(i + 1, n)) v = j - 1;
    w[static_cast<std::size_t>(j - 1)] = v;
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::tau(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("tau_" + std::to_string(i) + " out of range");
  auto p = identity(n);
  p.window_[static_cast<std::size_t>(i - 1)] += n;
  return p;
}

std::int64_t AffinePermutation::operator()(std::int64_t j) const {
  const std::int64_t n = this->n();
  std::int64_t idx = mod_pos(j - 1, n);
  return window_[static_cast<std::size_t>(idx)] + (j - 1 - idx);
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& o) const {
  if (o.n() != n()) throw std::invalid_argument("affine permutations of different periods");
  std::vector<std::int64_t> w(window_.size());
  for (int i = 1; i <= n(); ++i) w[static_cast<std::size_t>(i - 1)] = (*this)(o(i));
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
  const std::int64_t n = this->n();
  std::vector<std::int64_t> w(window_.size());
  for (std::int64_t i = 1; i <= n; ++i) {
    std::int64_t v = window_[static_cast<std::size_t>(i - 1)];
    std::int64_t r = mod_pos(v - 1, n) + 1;
    w[static_cast<std::size_t>(r - 1)] = i - (v - r);
  }
  return AffinePermutation(std::move(w));
}

std::int64_t AffinePermutation::shift() const {
  std::int64_t total = 0;
  for (int i = 0; i < n(); ++i) total += window_[static_cast<std::size_t>(i)] - (i + 1);
  return total / n();
}

AffinePermutation AffinePermutation::normalized() const {
  const std::int64_t n = this->n();
  std::int64_t t = floor_div(shift(), n);
  std::vector<std::int64_t> w(window_);
  for (auto& v : w) v -= t * n;
  return AffinePermutation(std::move(w));
}

std::int64_t AffinePermutation::inversions() const {
  const std::int64_t n = this->n();
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t si = window_[static_cast<std::size_t>(i - 1)];
    for (std::int64_t r = 1; r <= n; ++r) {
      const std::int64_t sr = window_[static_cast<std::size_t>(r - 1)];
      // j = r + q n with j > i and sigma(j) = sr + q n < si
      std::int64_t qmin = floor_div(i - r, n) + 1;
      std::int64_t qmax = floor_div(si - sr - 1, n);
      if (qmax >= qmin) count += qmax - qmin + 1;
    }
  }
  return count;
}

std::string AffinePermutation::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(window_[i]);
  }
  return s + "]";
}

AffinePermutation AffinePermutation::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("window must look like [v1,...,vn]: '" + text + "'");
  std::vector<std::int64_t> w;
  std::string body = t.substr(1, t.size() - 2);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      w.push_back(v);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad window entry '" + tok + "' in '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation to_permutation(const Element& g) {
  const RootSystem& rs = g.system();
  require_type_a(rs);
  const int n = rs.rank() + 1;
  const IntVec ones(static_cast<std::size_t>(rs.rank()), 1);
  const Vector rho = rs.to_ambient(ones);
  const Vector wrho = rs.to_ambient(g.act(ones));
  std::vector<std::int64_t> w(static_cast<std::size_t>(n));  // w(j), 1-based values
  for (int j = 0; j < n; ++j) {
    auto it = std::find(wrho.begin(), wrho.end(), rho[static_cast<std::size_t>(j)]);
    w[static_cast<std::size_t>(j)] = (it - wrho.begin()) + 1;
  }
  // lambda = sum a_i (e_1 + ... + e_i) modulo (1, ..., 1)
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
  for (int j = n - 2; j >= 0; --j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j + 1)] + g.lambda()[static_cast<std::size_t>(j)];
  std::int64_t total = 0;
  for (auto v : c) total += v;
  std::int64_t t = floor_div(total, n);
  for (auto& v : c) v -= t;
  std::vector<std::int64_t> window(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::int64_t wj = w[static_cast<std::size_t>(j)];
    window[static_cast<std::size_t>(j)] = wj + n * c[static_cast<std::size_t>(wj - 1)];
  }
  return AffinePermutation(std::move(window));
}

Element from_permutation(const RootSystemPtr& rs, const AffinePermutation& p) {
  require_type_a(*rs);
  const int n = rs->rank() + 1;
  if (p.n() != n)
    throw std::invalid_argument("window has length " + std::to_string(p.n()) + ", expected " + std::to_string(n));
  std::vector<std::int64_t> w(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    std::int64_t v = p(j);
    std::int64_t wj = mod_pos(v - 1, n) + 1;
    w[static_cast<std::size_t>(j - 1)] = wj;
    c[static_cast<std::size_t>(wj - 1)] = (v - wj) / n;
  }
  IntVec lambda(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) lambda[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i + 1)];
  // finite part: column k is w(lambda_k) in weight coordinates, where w sends e_j to e_{w(j)}
  const int r = n - 1;
  IntVec m(static_cast<std::size_t>(r * r));
  for (int k = 1; k <= r; ++k) {
    const Vector& lam = rs->fundamental_weight(k);
    Vector img(lam.size());
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(w[static_cast<std::size_t>(j)] - 1)] = lam[static_cast<std::size_t>(j)];
    IntVec col = rs->weight_coords(img);
    for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i * r + (k - 1))] = col[static_cast<std::size_t>(i)];
  }
  return Element(rs, std::move(lambda), std::move(m));
}

bool is_d_antichain(const AffinePermutation& p, const std::vector<std::int64_t>& js) {
  if (js.empty()) return false;
  const std::int64_t n = p.n();
  for (std::size_t i = 1; i < js.size(); ++i)
    if (js[i] <= js[i - 1]) throw std::invalid_argument("d-antichain indices must be strictly increasing");
  if (!(js.back() - n < js.front())) return false;
  for (std::size_t i = 1; i < js.size(); ++i)
    if (!(p(js[i - 1]) < p(js[i]))) return false;
  return p(js.back()) - n < p(js.front());
}

Partition mu_partition(const AffinePermutation& p) {
  const int n = p.n();
  if (n > 20) throw std::invalid_argument("mu_partition supports periods up to 20");
  std::set<std::uint32_t> family;
  // chains starting at j1 in [1, n], continuing inside (j1, j1 + n - 1]
  for (int j1 = 1; j1 <= n; ++j1) {
    const std::int64_t first = p(j1);
    struct Frame {
      int next;
      std::int64_t last;
      std::uint32_t mask;
    };
    std::vector<Frame> stack{{j1 + 1, first, 1u << (j1 - 1)}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      family.insert(f.mask);
      for (int j = f.next; j <= j1 + n - 1; ++j) {
        std::int64_t v = p(j);
        if (v > f.last && v - n < first)
          stack.push_back({j + 1, v, f.mask | (1u << ((j - 1) % n))});
      }
    }
  }
  // keep the inclusion-maximal residue sets
  std::vector<std::uint32_t> maximal;
  for (auto m : family) {
    bool dominated = false;
    for (auto o : family)
      if (o != m && (o & m) == m) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(m);
  }
  std::vector<int> d(static_cast<std::size_t>(n) + 1, 0);
  std::set<std::uint32_t> unions{0};
  for (int q = 1; q <= n; ++q) {
    std::set<std::uint32_t> next;
    for (auto u : unions)
      for (auto m : maximal) next.insert(u | m);
    unions.swap(next);
    int best = 0;
    for (auto u : unions) best = std::max(best, std::popcount(u));
    d[static_cast<std::size_t>(q)] = best;
    if (best == n) {
      for (int r = q + 1; r <= n; ++r) d[static_cast<std::size_t>(r)] = n;
      break;
    }
  }
  Partition mu;
  for (int q = 1; q <= n; ++q) {
    int part = d[static_cast<std::size_t>(q)] - d[static_cast<std::size_t>(q - 1)];
    if (part > 0) mu.push_back(part);
  }
  return mu;
}

Partition mu_partition(const Element& g) { return mu_partition(to_permutation(g)); }

std::string format_partition(const Partition& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(mu[i]);
  }
  return s + ")";
}

bool same_two_sided_cell(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("affine permutations of different periods");
  return mu_partition(a) == mu_partition(b);
}

std::optional<std::vector<Element>> right_cell_certificate(const Element& a, const Element& b,
                                                           const SearchLimits& limits) {
  const Partition mu = mu_partition(a);
  if (mu_partition(b) != mu)
    throw std::invalid_argument("elements lie in different two-sided cells; no right-cell chain exists");
  if (a == b) return std::vector<Element>{a};
  const int gens = a.system().rank() + 1;
  std::vector<Element> states{a};
  std::vector<std::size_t> parent{0};
  std::unordered_map<Element, std::size_t, ElementHash> index{{a, 0}};
  std::unordered_set<Element, ElementHash> rejected;
  std::size_t layer_begin = 0;
  for (int depth = 0; depth < limits.max_depth; ++depth) {
    const std::size_t layer_end = states.size();
    for (std::size_t h = layer_begin; h < layer_end; ++h) {
      for (int s = 0; s < gens; ++s) {
        Element next = states[h].times_generator(s);
        if (index.count(next) || rejected.count(next)) continue;
        if (mu_partition(next) != mu) {
          rejected.insert(next);
          continue;
        }
        index.emplace(next, states.size());
        states.push_back(next);
        parent.push_back(h);
        if (next == b) {
          std::vector<Element> chain;
          for (std::size_t at = states.size() - 1;; at = parent[at]) {
            chain.push_back(states[at]);
            if (at == 0) break;
          }
          std::reverse(chain.begin(), chain.end());
          return chain;
        }
        if (states.size() >= limits.max_states) return std::nullopt;
      }
    }
    layer_begin = layer_end;
    if (layer_begin == states.size()) break;
  }
  return std::nullopt;
}

std::vector<Element> right_conjugation_chain(const Element& w, const Element& x) {
  if (!w.is_finite()) throw std::invalid_argument("conjugating element must lie in W0");
  std::vector<Element> chain{w * x};
  for (int s : w.inverse().reduced_word().letters) chain.push_back(chain.back().times_generator(s));
  return chain;
}

bool chain_keeps_mu(const std::vector<Element>& chain) {
  if (chain.empty()) return true;
  const Partition mu = mu_partition(chain.front());
  return std::all_of(chain.begin(), chain.end(), [&](const Element& g) { return mu_partition(g) == mu; });
}

ConjugationPowerReport check_conjugation_and_powers(const Element& x, const std::vector<Element>& ws, int max_power,
                                                   const SearchLimits& limits) {
  if (!x.is_translation()) throw std::invalid_argument("expected a translation");
  ConjugationPowerReport rep;
  rep.mu = mu_partition(x);
  for (const Element& w : ws) {
    Element c = w * x * w.inverse();
    ++rep.conjugates_checked;
    Partition m = mu_partition(c);
    if (m != rep.mu)
      rep.failures.push_back("mu of conjugate by " + format_word(w.reduced_word()) + " is " + format_partition(m) +
                             ", expected " + format_partition(rep.mu));
  }
  Element power = x;
  for (int k = 1; k <= max_power; ++k) {
    ++rep.powers_checked;
    Partition m = mu_partition(power);
    if (m != rep.mu)
      rep.failures.push_back("mu of power " + std::to_string(k) + " is " + format_partition(m) + ", expected " +
                             format_partition(rep.mu));
    if (k > 1 && limits.max_depth > 0 && right_cell_certificate(x, power, limits)) ++rep.power_certificates_found;
    power = power * x;
  }
  return rep;
}

}  // namespace weylcells
