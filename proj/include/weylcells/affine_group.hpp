#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylcells/root_system.hpp"

namespace weylcells {

/// One letter of a word: a Coxeter generator s_0..s_n, or the length-zero
/// element of the coset of x_j in W / W_a (written g<j>).
struct Letter {
  enum class Kind { Generator, Gamma };
  Kind kind = Kind::Generator;
  int index = 0;

  static Letter gen(int i) { return {Kind::Generator, i}; }
  static Letter gamma(int j) { return {Kind::Gamma, j}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// A word in s_0..s_n preceded by a length-zero element. `gamma` is 0 when
/// the element lies in W_a, otherwise the smallest j with x_j in the same
/// coset of W_a.
struct ReducedWord {
  int gamma = 0;
  std::vector<int> letters;
};

/// Element t_lambda * w of the extended affine Weyl group W = W0 x| P.
///
/// lambda is stored in fundamental-weight coordinates; w is an integer n x n
/// matrix acting on those coordinates. Both are canonical, so equality and
/// hashing are structural.
class Element {
 public:
  explicit Element(RootSystemPtr rs);
  Element(RootSystemPtr rs, IntVec lambda, IntVec matrix);

  static Element identity(RootSystemPtr rs) { return Element(std::move(rs)); }
  /// s_0..s_n.
  static Element generator(RootSystemPtr rs, int i);
  static Element translation(RootSystemPtr rs, IntVec lambda);
  /// x_i = t_{lambda_i}, 1-based.
  static Element fundamental(RootSystemPtr rs, int i);
  /// Product x_1^{a_1} ... x_n^{a_n}.
  static Element dominant(RootSystemPtr rs, const IntVec& exponents);
  /// Length-zero element in the coset of x_j (j = 0 gives the identity).
  static Element gamma(RootSystemPtr rs, int j);
  /// Product of the letters, left to right.
  static Element from_word(RootSystemPtr rs, const Word& word);
  static Element from_generators(RootSystemPtr rs, const std::vector<int>& gens);

  const RootSystem& system() const { return *rs_; }
  const RootSystemPtr& system_ptr() const { return rs_; }
  const IntVec& lambda() const { return lambda_; }
  const IntVec& matrix() const { return matrix_; }

  Element operator*(const Element& o) const;
  Element inverse() const;
  /// g * s_i and s_i * g without building s_i.
  Element times_generator(int i) const;
  Element generator_times(int i) const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.lambda_ == b.lambda_ && a.matrix_ == b.matrix_;
  }
  /// Arbitrary but deterministic total order (for maps and sorting).
  friend bool operator<(const Element& a, const Element& b) {
    if (a.lambda_ != b.lambda_) return a.lambda_ < b.lambda_;
    return a.matrix_ < b.matrix_;
  }

  bool is_translation() const;
  bool is_finite() const;  ///< lambda = 0, i.e. the element lies in W0
  bool is_involution() const;
  /// True iff the element lies in W_a (lambda in the root lattice).
  bool in_affine_weyl() const;
  /// Label j of the coset in W / W_a (see ReducedWord::gamma).
  int gamma_label() const;

  /// Applies the finite part w to a weight.
  IntVec act(const IntVec& weight) const;
  /// True iff w^{-1}(alpha) < 0 for the positive root with this index.
  bool inverts(int root_index) const;

  /// Iwahori-Matsumoto length.
  std::int64_t length() const;
  /// k(g, alpha) on the positive roots in canonical order.
  IntVec coordinate_form() const;
  /// Generator indices (0..n, ascending) with s g < g, resp. g s < g.
  std::vector<int> left_descents() const;
  std::vector<int> right_descents() const;
  bool is_left_descent(int i) const;
  bool is_right_descent(int i) const;

  /// Greedy: strips the smallest right descent until the length is zero.
  ReducedWord reduced_word() const;

  std::size_t hash() const;

 private:
  void check_same(const Element& o) const;

  RootSystemPtr rs_;
  IntVec lambda_;
  IntVec matrix_;  // row-major n x n
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

/// Bruhat order on W. Elements in different cosets of W_a are incomparable,
/// reported as nullopt.
std::optional<bool> bruhat_leq(const Element& a, const Element& b);

/// For a translation t_lambda returns (w, t_{w lambda}) with w lambda dominant
/// and w of minimal length. Throws std::invalid_argument for non-translations.
std::pair<Element, Element> make_dominant(const Element& x);

/// Longest element of the standard parabolic subgroup generated by J
/// (indices in 0..n). Throws when W_J is infinite, i.e. J = S, or when the
/// ascent exceeds `cap` steps.
Element longest_parabolic(const RootSystemPtr& rs, const std::vector<int>& J,
                          std::int64_t cap = std::int64_t{1} << 20);

/// Longest element w0 of W0.
Element longest_finite(const RootSystemPtr& rs);

/// All elements of W0 (breadth-first from e, so sorted by length).
std::vector<Element> finite_weyl_group(const RootSystemPtr& rs, std::size_t cap = 50'000'000);

/// Raised when a ball would exceed its element cap; `attained` is the largest
/// length whose layer was completed.
struct BallCapExceeded : std::runtime_error {
  BallCapExceeded(int attained_length, std::size_t cap);
  int attained;
};

/// {g in W_a : l(g) <= L} in breadth-first order: layers by length, each layer
/// in order of discovery from the previous one by s_0..s_n.
std::vector<Element> affine_ball(const RootSystemPtr& rs, int L, std::size_t cap = 200'000);

std::string format_word(const ReducedWord& w);
std::string format_word(const Word& w);

}  // namespace weylcells
