#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylcells/rational.hpp"

namespace weylcells {

using IntVec = std::vector<std::int64_t>;

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

std::string_view family_name(Family f);
/// Accepts "A".."G2" (case-insensitive). Throws std::invalid_argument.
Family parse_family(std::string_view text);

/// A root together with the integer data every other module needs.
struct RootData {
  Vector ambient;        ///< coordinates in the orthonormal basis
  IntVec root_coeffs;    ///< expansion in the simple roots
  IntVec coroot_coeffs;  ///< expansion of the coroot in the simple coroots
  IntVec weight_coords;  ///< pairings <alpha, alpha_j^vee>, i.e. coordinates in the fundamental weights
  std::int64_t height = 0;
  bool is_short = false;
};

/// A root given as (index into the positive roots, sign).
struct SignedRoot {
  int index = 0;
  bool positive = true;
  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

/// Indecomposable rank-2 positive subsystem. `roots` lists indices into the
/// positive roots:
///   A2: {alpha, beta, alpha+beta}
///   B2: {alpha (short simple), beta (long simple), alpha+beta, 2alpha+beta}
///   G2: all six positive roots of the plane.
struct Rank2Subsystem {
  enum class Kind { A2, B2, G2 };
  Kind kind;
  std::vector<int> roots;
};

/// Immutable irreducible root system with its weight lattice. Built once and
/// shared (std::shared_ptr<const RootSystem>) by every element that lives in
/// the corresponding extended affine Weyl group.
///
/// Index conventions: simple roots, simple reflections and fundamental weights
/// are numbered 1..n as usual; generator 0 is the affine reflection. Positive
/// roots are stored in canonical order (height, then simple-root coefficients
/// in decreasing lexicographic order), so alpha_1..alpha_n come first.
class RootSystem {
 public:
  /// B means the group of type B~_n with Phi = {+-e_i+-e_j, +-2e_k} (n >= 3);
  /// C means type C~_n with Phi = {+-e_i+-e_j, +-e_k} (n >= 2). A, D, E use
  /// the Bourbaki coordinates; F4 and G2 use the numbering where alpha_1 is short.
  static std::shared_ptr<const RootSystem> build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  std::string name() const;

  /// Number of positive roots (nu).
  std::size_t num_positive() const { return positive_.size(); }
  std::span<const RootData> positive_roots() const { return positive_; }
  const RootData& root(int index) const { return positive_.at(static_cast<std::size_t>(index)); }

  const Vector& simple_root(int i) const { return positive_.at(static_cast<std::size_t>(i - 1)).ambient; }
  const Vector& fundamental_weight(int i) const { return weights_.at(static_cast<std::size_t>(i - 1)); }
  /// <alpha_i, alpha_j^vee>, 1-based.
  std::int64_t cartan(int i, int j) const;

  /// Highest short root (-alpha_0) as an index into the positive roots.
  int highest_short_index() const { return highest_short_; }
  const Vector& highest_short_root() const { return root(highest_short_).ambient; }

  /// <v, alpha^vee> for a weight v and a root alpha. Throws when alpha is not a
  /// root or when v is not in the weight lattice (the message names the first
  /// simple coroot with a non-integral pairing).
  std::int64_t pairing(const Vector& v, const Vector& alpha) const;
  /// s_alpha(v); alpha must be a root.
  Vector reflect(const Vector& alpha, const Vector& v) const;

  /// Coordinates of v in the fundamental weights; throws if v is not in P.
  IntVec weight_coords(const Vector& v) const;
  Vector to_ambient(const IntVec& weight) const;
  /// <lambda, alpha^vee> for lambda in fundamental-weight coordinates.
  std::int64_t pair_weight(const IntVec& weight, int root_index) const;
  /// Looks a root up by its fundamental-weight coordinates.
  std::optional<SignedRoot> find_root(const IntVec& weight) const;
  std::optional<SignedRoot> find_root(const Vector& ambient) const;

  /// Class of a weight in P/Q, as the fractional parts of its simple-root
  /// coordinates. Two weights differ by an element of Q iff these agree.
  std::vector<Rational> weight_class(const IntVec& weight) const;

  std::span<const Rank2Subsystem> rank2_subsystems() const { return rank2_; }

  std::uint64_t weyl_group_order() const;
  int coxeter_number() const;

 private:
  RootSystem() = default;
  void finish(Family family, int rank, std::vector<Vector> simple);

  Family family_ = Family::A;
  int rank_ = 0;
  int ambient_dim_ = 0;
  std::vector<RootData> positive_;
  std::vector<Vector> weights_;
  std::vector<std::int64_t> cartan_;          // row-major n x n
  std::vector<Rational> cartan_inverse_;      // row-major n x n
  int highest_short_ = 0;
  std::map<IntVec, SignedRoot> by_weight_;
  std::vector<Rank2Subsystem> rank2_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace weylcells
