#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylcells/affine_group.hpp"

namespace weylcells {

/// Polynomial in q with integer coefficients, lowest degree first, no
/// trailing zeros (the zero polynomial is empty).
using Poly = std::vector<std::int64_t>;

int degree(const Poly& p);  ///< -1 for the zero polynomial
std::string format_poly(const Poly& p);

enum class Side { Left, Right, TwoSided };

/// Strongly connected components of a preorder graph on ball indices.
/// Components are numbered in reverse topological order of the condensation
/// (Tarjan order): every edge goes from a component to one with a number
/// less than or equal to its own.
struct CellGraph {
  Side side = Side::Left;
  std::vector<std::vector<int>> out;  ///< x -> y means x <= y in the preorder
  std::vector<int> component;         ///< ball index -> component id
  std::vector<std::vector<int>> components;
  /// Components are computed inside a finite ball: each lies inside one cell,
  /// and a cell may be split across several components.
  static constexpr const char* kCaveat = "within-ball: components lie inside cells but may split them";
};

/// Kazhdan-Lusztig polynomials P_{x,w} for all x <= w in the ball
/// {w in W_a : l(w) <= L}.
///
/// The ball is enumerated breadth-first (affine_ball), so indices are stable.
/// Columns are computed in length order with the recursion along the
/// smallest left descent s of w (v = s w):
///   P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
///             - sum_{z : sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z},
/// c = 1 if sx < x and 0 otherwise. The Bruhat ideal of w is
/// {x : x <= v} u s{x : x <= v}.
class KLTable {
 public:
  KLTable(RootSystemPtr rs, int L, std::size_t cap = 200'000);

  const RootSystemPtr& system() const { return rs_; }
  int bound() const { return L_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(int i) const { return elements_.at(static_cast<std::size_t>(i)); }
  /// -1 when g is not in the ball.
  int index_of(const Element& g) const;
  /// Throws std::out_of_range when g is not in the ball.
  int require_index(const Element& g) const;

  int length(int i) const { return lengths_[static_cast<std::size_t>(i)]; }
  /// Bit s set iff s is a left (right) descent, s in 0..n.
  std::uint32_t left_descent_mask(int i) const { return left_mask_[static_cast<std::size_t>(i)]; }
  std::uint32_t right_descent_mask(int i) const { return right_mask_[static_cast<std::size_t>(i)]; }
  /// Index of s*g (g*s), or -1 outside the ball.
  int left_mul(int s, int i) const;
  int right_mul(int i, int s) const;

  /// Sorted indices x with x <= w.
  const std::vector<int>& ideal(int w) const { return ideal_[static_cast<std::size_t>(w)]; }
  bool leq(int x, int w) const;
  /// P_{x,w}; the zero polynomial when x is not <= w.
  const Poly& P(int x, int w) const;
  Poly P(const Element& x, const Element& w) const { return P(require_index(x), require_index(w)); }
  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w} for x < w, else 0.
  std::int64_t mu(int x, int w) const;
  /// x - w: mu(x, w) != 0 or mu(w, x) != 0.
  bool edge(int x, int w) const;
  /// All pairs (x, w), x < w, with mu(x, w) != 0.
  const std::vector<std::pair<int, int>>& mu_pairs() const { return mu_pairs_; }

  /// P_{x,w} recomputed by one step of the recursion along the descent s of w
  /// on the given side (Left: s w < w, Right: w s < w) from the stored table.
  /// Throws std::invalid_argument when s is not a descent on that side.
  Poly recompute(int x, int w, int s, Side side) const;

  CellGraph cell_graph(Side side) const;

  /// w is an involution and 2 deg P_{e,w} = l(w) - a. On failure `reason`
  /// (when given) says why.
  bool is_distinguished(int w, std::int64_t a, std::string* reason = nullptr) const;

  /// Build from explicit data (used by the cache loader). Throws
  /// std::invalid_argument when the data is inconsistent.
  KLTable(RootSystemPtr rs, int L, std::vector<Element> elements,
          std::vector<std::vector<std::pair<int, Poly>>> columns);

 private:
  void index_ball();
  void compute_columns();
  void compute_column(int w, std::vector<int>& pos);
  void collect_mu();

  RootSystemPtr rs_;
  int L_ = 0;
  std::vector<Element> elements_;
  std::unordered_map<Element, int, ElementHash> index_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> left_mask_, right_mask_;
  std::vector<int> left_mul_, right_mul_;  // row-major size x (n+1)
  std::vector<std::vector<int>> ideal_;
  std::vector<std::vector<Poly>> polys_;  // parallel to ideal_
  std::vector<std::vector<std::pair<int, std::int64_t>>> mu_below_;  // (z, mu(z,w)) for z < w
  std::vector<std::pair<int, int>> mu_pairs_;
};

/// Polynomial identity helpers.
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_shift(const Poly& a, int k);
Poly poly_scale(const Poly& a, std::int64_t c);

}  // namespace weylcells
