#include "weylcells/kl_engine.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

namespace weylcells {

namespace {

const Poly kZero;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// acc += c * q^k * p
void add_scaled(Poly& acc, const Poly& p, std::int64_t c, int k) {
  if (p.empty() || c == 0) return;
  if (acc.size() < p.size() + static_cast<std::size_t>(k)) acc.resize(p.size() + static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + static_cast<std::size_t>(k)] += c * p[i];
}

}  // namespace

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

std::string format_poly(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::int64_t c = p[i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (i == 0) s += std::to_string(a);
    else {
      if (a != 1) s += std::to_string(a) + "*";
      s += i == 1 ? "q" : "q^" + std::to_string(i);
    }
  }
  return s;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  add_scaled(out, b, 1, 0);
  trim(out);
  return out;
}

Poly poly_shift(const Poly& a, int k) {
  Poly out;
  add_scaled(out, a, 1, k);
  trim(out);
  return out;
}

Poly poly_scale(const Poly& a, std::int64_t c) {
  Poly out;
  add_scaled(out, a, c, 0);
  trim(out);
  return out;
}

KLTable::KLTable(RootSystemPtr rs, int L, std::size_t cap) : rs_(std::move(rs)), L_(L) {
  elements_ = affine_ball(rs_, L, cap);
  index_ball();
  compute_columns();
  collect_mu();
}

KLTable::KLTable(RootSystemPtr rs, int L, std::vector<Element> elements,
                 std::vector<std::vector<std::pair<int, Poly>>> columns)
    : rs_(std::move(rs)), L_(L), elements_(std::move(elements)) {
  if (columns.size() != elements_.size()) throw std::invalid_argument("one column per element required");
  for (const auto& g : elements_)
    if (g.length() > L || !g.in_affine_weyl()) throw std::invalid_argument("element outside the ball");
  index_ball();
  ideal_.resize(elements_.size());
  polys_.resize(elements_.size());
  for (std::size_t w = 0; w < columns.size(); ++w) {
    auto& col = columns[w];
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [x, p] : col) {
      if (x < 0 || static_cast<std::size_t>(x) >= elements_.size()) throw std::invalid_argument("index out of range");
      if (!ideal_[w].empty() && ideal_[w].back() == x) throw std::invalid_argument("duplicate polynomial entry");
      ideal_[w].push_back(x);
      polys_[w].push_back(std::move(p));
    }
  }
  collect_mu();
}

void KLTable::index_ball() {
  const std::size_t n = elements_.size();
  const int gens = rs_->rank() + 1;
  index_.clear();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!index_.emplace(elements_[i], static_cast<int>(i)).second) throw std::invalid_argument("duplicate element");
  lengths_.resize(n);
  left_mask_.assign(n, 0);
  right_mask_.assign(n, 0);
  left_mul_.assign(n * static_cast<std::size_t>(gens), -1);
  right_mul_.assign(n * static_cast<std::size_t>(gens), -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Element& g = elements_[i];
    lengths_[i] = static_cast<int>(g.length());
    for (int s = 0; s < gens; ++s) {
      const std::size_t slot = i * static_cast<std::size_t>(gens) + static_cast<std::size_t>(s);
      left_mul_[slot] = index_of(g.generator_times(s));
      right_mul_[slot] = index_of(g.times_generator(s));
      if (g.is_left_descent(s)) left_mask_[i] |= 1u << s;
      if (g.is_right_descent(s)) right_mask_[i] |= 1u << s;
    }
  }
}

int KLTable::index_of(const Element& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

int KLTable::require_index(const Element& g) const {
  const int i = index_of(g);
  if (i < 0) throw std::out_of_range("element " + format_word(g.reduced_word()) + " is outside the ball of length " +
                                     std::to_string(L_));
  return i;
}

int KLTable::left_mul(int s, int i) const {
  return left_mul_[static_cast<std::size_t>(i) * static_cast<std::size_t>(rs_->rank() + 1) + static_cast<std::size_t>(s)];
}

int KLTable::right_mul(int i, int s) const {
  return right_mul_[static_cast<std::size_t>(i) * static_cast<std::size_t>(rs_->rank() + 1) +
                    static_cast<std::size_t>(s)];
}

bool KLTable::leq(int x, int w) const {
  const auto& id = ideal_[static_cast<std::size_t>(w)];
  return std::binary_search(id.begin(), id.end(), x);
}

const Poly& KLTable::P(int x, int w) const {
  if (x < 0 || w < 0) return kZero;
  const auto& id = ideal_[static_cast<std::size_t>(w)];
  auto it = std::lower_bound(id.begin(), id.end(), x);
  if (it == id.end() || *it != x) return kZero;
  return polys_[static_cast<std::size_t>(w)][static_cast<std::size_t>(it - id.begin())];
}

std::int64_t KLTable::mu(int x, int w) const {
  const int d = length(w) - length(x);
  if (d <= 0 || d % 2 == 0) return 0;
  const Poly& p = P(x, w);
  const std::size_t k = static_cast<std::size_t>((d - 1) / 2);
  return k < p.size() ? p[k] : 0;
}

bool KLTable::edge(int x, int w) const { return mu(x, w) != 0 || mu(w, x) != 0; }

void KLTable::compute_columns() {
  const std::size_t n = elements_.size();
  ideal_.assign(n, {});
  polys_.assign(n, {});
  mu_below_.assign(n, {});
  ideal_[0] = {0};
  polys_[0] = {Poly{1}};

  // layers of equal length; columns in one layer only read shorter ones
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  std::size_t begin = 1;
  while (begin < n) {
    std::size_t end = begin;
    while (end < n && lengths_[end] == lengths_[begin]) ++end;
    const std::size_t chunk = (end - begin + workers - 1) / workers;
    std::vector<std::future<void>> jobs;
    for (std::size_t lo = begin; lo < end; lo += chunk) {
      const std::size_t hi = std::min(end, lo + chunk);
      jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, [this, lo, hi, n] {
        std::vector<int> pos(n, -1);
        for (std::size_t w = lo; w < hi; ++w) compute_column(static_cast<int>(w), pos);
      }));
    }
    for (auto& j : jobs) j.get();
    // mu values of the finished layer feed the next one
    for (std::size_t w = begin; w < end; ++w) {
      const auto& id = ideal_[w];
      for (std::size_t k = 0; k < id.size(); ++k) {
        const std::int64_t m = mu(id[k], static_cast<int>(w));
        if (m != 0) mu_below_[w].emplace_back(id[k], m);
      }
    }
    begin = end;
  }
}

void KLTable::compute_column(int w, std::vector<int>& pos) {
  const std::size_t wi = static_cast<std::size_t>(w);
  int s = 0;
  while (!(left_mask_[wi] >> s & 1u)) ++s;
  const int v = left_mul(s, w);
  const auto& iv = ideal_[static_cast<std::size_t>(v)];

  std::vector<int> id = iv;
  for (int x : iv) id.push_back(left_mul(s, x));
  std::sort(id.begin(), id.end());
  id.erase(std::unique(id.begin(), id.end()), id.end());
  if (id.front() < 0) throw std::logic_error("Bruhat ideal leaves the ball");

  std::vector<Poly> col(id.size());
  for (std::size_t k = 0; k < id.size(); ++k) pos[static_cast<std::size_t>(id[k])] = static_cast<int>(k);
  for (std::size_t k = 0; k < id.size(); ++k) {
    const int x = id[k];
    const int sx = left_mul(s, x);
    const int c = (left_mask_[static_cast<std::size_t>(x)] >> s & 1u) ? 1 : 0;
    add_scaled(col[k], P(sx, v), 1, 1 - c);
    add_scaled(col[k], P(x, v), 1, c);
  }
  for (const auto& [z, m] : mu_below_[static_cast<std::size_t>(v)]) {
    if (!(left_mask_[static_cast<std::size_t>(z)] >> s & 1u)) continue;
    const int shift = (lengths_[wi] - lengths_[static_cast<std::size_t>(z)]) / 2;
    const auto& iz = ideal_[static_cast<std::size_t>(z)];
    const auto& pz = polys_[static_cast<std::size_t>(z)];
    for (std::size_t k = 0; k < iz.size(); ++k) add_scaled(col[static_cast<std::size_t>(pos[static_cast<std::size_t>(iz[k])])], pz[k], -m, shift);
  }
  for (std::size_t k = 0; k < id.size(); ++k) {
    trim(col[k]);
    pos[static_cast<std::size_t>(id[k])] = -1;
    const int x = id[k];
    const int d = lengths_[wi] - lengths_[static_cast<std::size_t>(x)];
    const bool ok = x == w ? col[k] == Poly{1} : (!col[k].empty() && col[k][0] == 1 && 2 * degree(col[k]) <= d - 1);
    if (!ok)
      throw std::logic_error("KL polynomial P(" + format_word(elements_[static_cast<std::size_t>(x)].reduced_word()) +
                             ", " + format_word(elements_[wi].reduced_word()) + ") = " + format_poly(col[k]) +
                             " violates the degree bound");
  }
  ideal_[wi] = std::move(id);
  polys_[wi] = std::move(col);
}

void KLTable::collect_mu() {
  mu_below_.assign(elements_.size(), {});
  mu_pairs_.clear();
  for (std::size_t w = 0; w < elements_.size(); ++w) {
    for (int x : ideal_[w]) {
      const std::int64_t m = mu(x, static_cast<int>(w));
      if (m == 0) continue;
      mu_below_[w].emplace_back(x, m);
      mu_pairs_.emplace_back(x, static_cast<int>(w));
    }
  }
}

Poly KLTable::recompute(int x, int w, int s, Side side) const {
  const bool left = side == Side::Left;
  if (side == Side::TwoSided) throw std::invalid_argument("recompute needs a left or right descent");
  const auto mask = [&](int i) { return left ? left_descent_mask(i) : right_descent_mask(i); };
  const auto mul = [&](int i) { return left ? left_mul(s, i) : right_mul(i, s); };
  if (!(mask(w) >> s & 1u)) throw std::invalid_argument("generator is not a descent of w on that side");
  const int v = mul(w);
  const int sx = mul(x);
  const int c = (mask(x) >> s & 1u) ? 1 : 0;
  Poly acc;
  add_scaled(acc, P(sx, v), 1, 1 - c);
  add_scaled(acc, P(x, v), 1, c);
  for (const auto& [z, m] : mu_below_[static_cast<std::size_t>(v)]) {
    if (!(mask(z) >> s & 1u)) continue;
    add_scaled(acc, P(x, z), -m, (length(w) - length(z)) / 2);
  }
  trim(acc);
  return acc;
}

CellGraph KLTable::cell_graph(Side side) const {
  const std::size_t n = elements_.size();
  CellGraph g;
  g.side = side;
  g.out.assign(n, {});
  auto not_subset = [](std::uint32_t a, std::uint32_t b) { return (a & ~b) != 0; };
  auto add = [&](int x, int y) {
    const std::size_t xi = static_cast<std::size_t>(x), yi = static_cast<std::size_t>(y);
    bool e = false;
    if (side != Side::Right) e = e || not_subset(left_mask_[xi], left_mask_[yi]);
    if (side != Side::Left) e = e || not_subset(right_mask_[xi], right_mask_[yi]);
    if (e) g.out[xi].push_back(y);
  };
  for (const auto& [x, w] : mu_pairs_) {
    add(x, w);
    add(w, x);
  }
  for (auto& o : g.out) {
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
  }

  // iterative Tarjan
  g.component.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.emplace_back(static_cast<int>(root), 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      const std::size_t vi = static_cast<std::size_t>(v);
      if (next == 0 && index[vi] < 0) {
        index[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = 1;
      }
      if (next < g.out[vi].size()) {
        const int u = g.out[vi][next++];
        const std::size_t ui = static_cast<std::size_t>(u);
        if (index[ui] < 0) call.emplace_back(u, 0);
        else if (on_stack[ui]) low[vi] = std::min(low[vi], index[ui]);
        continue;
      }
      if (low[vi] == index[vi]) {
        std::vector<int> comp;
        int u;
        do {
          u = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(u)] = 0;
          g.component[static_cast<std::size_t>(u)] = static_cast<int>(g.components.size());
          comp.push_back(u);
        } while (u != v);
        std::sort(comp.begin(), comp.end());
        g.components.push_back(std::move(comp));
      }
      const int done = v;
      call.pop_back();
      if (!call.empty()) {
        const std::size_t pi = static_cast<std::size_t>(call.back().first);
        low[pi] = std::min(low[pi], low[static_cast<std::size_t>(done)]);
      }
    }
  }
  return g;
}

bool KLTable::is_distinguished(int w, std::int64_t a, std::string* reason) const {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (!element(w).is_involution()) return fail("not an involution");
  const int d = degree(P(0, w));
  if (2 * static_cast<std::int64_t>(d) != length(w) - a)
    return fail("2 deg P_{e,w} = " + std::to_string(2 * d) + " but l(w) - a = " + std::to_string(length(w) - a));
  if (reason) reason->clear();
  return true;
}

}  // namespace weylcells
