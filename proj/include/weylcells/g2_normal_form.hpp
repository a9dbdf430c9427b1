#pragma once

#include <optional>
#include <string>

#include "weylcells/affine_group.hpp"

namespace weylcells {

/// Index (i, j, k) of u(i, j, k) = u_i s0 s1 s0 (s2 s1 s0)^k u_j^{-1} with
/// u_1 = e, u_2 = s2, u_3 = s1 s2, u_4 = s2 s1 s2, u_5 = s1 s2 s1 s2,
/// u_6 = s0 s1 s2 s1 s2. These elements make up the second-lowest two-sided
/// cell of G2; u(i,j,k) ~_L u(m,n,k') iff j = n and ~_R iff i = m.
struct G2CellIndex {
  int i = 1;
  int j = 1;
  int k = 0;
  friend auto operator<=>(const G2CellIndex&, const G2CellIndex&) = default;
  std::string str() const;
};

/// u_i for 1 <= i <= 6.
Element g2_u(const RootSystemPtr& rs, int i);
/// s0 s1 s0 (s2 s1 s0)^k.
Element g2_core(const RootSystemPtr& rs, int k);
Element g2_element(const RootSystemPtr& rs, const G2CellIndex& idx);

/// The index of g, or nullopt when g is not of the form u(i, j, k). Throws
/// std::invalid_argument for systems other than G2.
std::optional<G2CellIndex> g2_normal_form(const Element& g);

/// Throw std::invalid_argument when either element has no normal form.
bool g2_same_left_cell(const Element& a, const Element& b);
bool g2_same_right_cell(const Element& a, const Element& b);

}  // namespace weylcells
