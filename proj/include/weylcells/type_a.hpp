#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylcells/affine_group.hpp"

namespace weylcells {

/// Bijection sigma of Z with sigma(j + n) = sigma(j) + n, given by its window
/// (sigma(1), ..., sigma(n)).
class AffinePermutation {
 public:
  /// Validates that the window values are pairwise incongruent mod n and that
  /// sum(sigma(i) - i) is divisible by n.
  explicit AffinePermutation(std::vector<std::int64_t> window);

  static AffinePermutation identity(int n);
  /// pi(j) = j + 1.
  static AffinePermutation rotation(int n);
  /// s_i for 0 <= i < n.
  static AffinePermutation reflection(int n, int i);
  /// tau_i: j -> j + n on the class of i.
  static AffinePermutation tau(int n, int i);

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<std::int64_t>& window() const { return window_; }
  std::int64_t operator()(std::int64_t j) const;

  /// Composition: (a * b)(j) = a(b(j)).
  AffinePermutation operator*(const AffinePermutation& o) const;
  AffinePermutation inverse() const;
  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;

  /// sum_{i=1..n} (sigma(i) - i) / n.
  std::int64_t shift() const;
  /// Representative modulo the centre <pi^n> with shift in [0, n).
  AffinePermutation normalized() const;
  /// #{(i, j) : 1 <= i <= n, i < j, sigma(i) > sigma(j)}.
  std::int64_t inversions() const;

  /// "[v1,...,vn]".
  std::string str() const;
  /// Parses "[v1,...,vn]". Throws std::invalid_argument.
  static AffinePermutation parse(const std::string& text);

 private:
  std::vector<std::int64_t> window_;
};

/// Group elements of type A_{n-1} and affine permutations of period n,
/// identified modulo the centre <pi^n>. to_permutation returns the normalized
/// representative; from_permutation accepts any representative.
AffinePermutation to_permutation(const Element& g);
Element from_permutation(const RootSystemPtr& rs, const AffinePermutation& p);

/// Conditions j_k - n < j_1 < ... < j_k and p(j_k) - n < p(j_1) < ... < p(j_k).
bool is_d_antichain(const AffinePermutation& p, const std::vector<std::int64_t>& js);

using Partition = std::vector<int>;

/// d_q is the largest size of a set of pairwise incongruent integers that is a
/// disjoint union of q d-antichains; returns (d_1, d_2 - d_1, ..., d_n - d_{n-1})
/// with trailing zeros removed.
///
/// A d-antichain stays one after shifting all of its entries by n, and after
/// dropping entries, so only its set of residues matters and d_q is the largest
/// union of q residue sets. Every d-antichain has a shift with j_1 in [1, n]
/// and then lies in [j_1, j_1 + n - 1], so the enumeration is finite and exact.
Partition mu_partition(const AffinePermutation& p);
Partition mu_partition(const Element& g);
std::string format_partition(const Partition& mu);

bool same_two_sided_cell(const AffinePermutation& a, const AffinePermutation& b);

/// Search bounds for right-cell certificates.
struct SearchLimits {
  int max_depth = 8;
  std::size_t max_states = 100'000;
};

/// Breadth-first search from a through right multiplications by s_0..s_n that
/// keep mu constant. A path to b certifies a ~_R b (a right-connected set
/// inside one two-sided cell lies in one right cell). nullopt means "not
/// found within the bounds". Throws when mu(a) != mu(b).
std::optional<std::vector<Element>> right_cell_certificate(const Element& a, const Element& b,
                                                           const SearchLimits& limits = {});

/// Chain w x, w x s_{a_1}, ..., w x w^{-1} following a reduced word
/// s_{a_1} ... s_{a_m} of w^{-1}.
std::vector<Element> right_conjugation_chain(const Element& w, const Element& x);
/// True iff every link of the chain has the same mu.
bool chain_keeps_mu(const std::vector<Element>& chain);

struct ConjugationPowerReport {
  Partition mu;
  std::size_t conjugates_checked = 0;
  std::size_t powers_checked = 0;
  std::vector<std::string> failures;
  /// Conjugates w x w^{-1} (w != e) linked to x^m by a certificate for
  /// x^m ~_R x where found; only reported.
  std::size_t power_certificates_found = 0;
  bool ok() const { return failures.empty(); }
};

/// For a type A translation x: mu(w x w^{-1}) = mu(x) for every w given and
/// mu(x^m) = mu(x) for 1 <= m <= max_power. Right-cell certificates for
/// x ~_R x^m are attempted within `limits` and counted.
ConjugationPowerReport check_conjugation_and_powers(const Element& x, const std::vector<Element>& ws, int max_power,
                                                   const SearchLimits& limits = {0, 0});

}  // namespace weylcells
