#include "weylcells/g2_normal_form.hpp"

#include <array>
#include <stdexcept>

namespace weylcells {

namespace {

void require_g2(const RootSystem& rs) {
  if (rs.family() != Family::G2) throw std::invalid_argument("normal form u(i,j,k) is defined for G2 only");
}

const std::array<std::vector<int>, 6> kUWords{{{}, {2}, {1, 2}, {2, 1, 2}, {1, 2, 1, 2}, {0, 1, 2, 1, 2}}};

}  // namespace

std::string G2CellIndex::str() const {
  return "u(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

Element g2_u(const RootSystemPtr& rs, int i) {
  require_g2(*rs);
  if (i < 1 || i > 6) throw std::invalid_argument("u_i needs 1 <= i <= 6");
  return Element::from_generators(rs, kUWords[static_cast<std::size_t>(i - 1)]);
}

Element g2_core(const RootSystemPtr& rs, int k) {
  require_g2(*rs);
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  Element g = Element::from_generators(rs, {0, 1, 0});
  const Element period = Element::from_generators(rs, {2, 1, 0});
  for (int t = 0; t < k; ++t) g = g * period;
  return g;
}

Element g2_element(const RootSystemPtr& rs, const G2CellIndex& idx) {
  return g2_u(rs, idx.i) * g2_core(rs, idx.k) * g2_u(rs, idx.j).inverse();
}

std::optional<G2CellIndex> g2_normal_form(const Element& g) {
  require_g2(g.system());
  const RootSystemPtr& rs = g.system_ptr();
  if (!g.in_affine_weyl()) return std::nullopt;
  std::array<Element, 6> u{g2_u(rs, 1), g2_u(rs, 2), g2_u(rs, 3), g2_u(rs, 4), g2_u(rs, 5), g2_u(rs, 6)};
  for (int i = 1; i <= 6; ++i) {
    const Element left = u[static_cast<std::size_t>(i - 1)].inverse() * g;
    for (int j = 1; j <= 6; ++j) {
      const Element core = left * u[static_cast<std::size_t>(j - 1)];
      // the core words are reduced, so their length fixes k
      const std::int64_t len = core.length();
      if (len < 3 || len % 3 != 0) continue;
      const int k = static_cast<int>(len / 3 - 1);
      if (core == g2_core(rs, k)) return G2CellIndex{i, j, k};
    }
  }
  return std::nullopt;
}

namespace {

G2CellIndex require_form(const Element& g) {
  auto nf = g2_normal_form(g);
  if (!nf) throw std::invalid_argument("element " + format_word(g.reduced_word()) + " has no normal form u(i,j,k)");
  return *nf;
}

}  // namespace

bool g2_same_left_cell(const Element& a, const Element& b) { return require_form(a).j == require_form(b).j; }

bool g2_same_right_cell(const Element& a, const Element& b) { return require_form(a).i == require_form(b).i; }

}  // namespace weylcells
