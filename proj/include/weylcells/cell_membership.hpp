#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylcells/affine_group.hpp"
#include "weylcells/g2_normal_form.hpp"
#include "weylcells/type_a.hpp"

namespace weylcells {

enum class Verdict { InLowest, InSecondLowest, NotInEither, Unknown };
std::string_view verdict_name(Verdict v);

/// Names of the criteria that produce verdicts.
namespace criterion {
inline constexpr std::string_view kLowestCoordinateForm = "lowest cell: nowhere-zero coordinate form";
inline constexpr std::string_view kSimplyLacedOneZero = "simply-laced: exactly one zero exponent";
inline constexpr std::string_view kSimplyLacedManyZeros = "simply-laced: two or more zero exponents";
inline constexpr std::string_view kG2FirstPower = "G2: x = x1^m with m >= 2";
inline constexpr std::string_view kBSufficient = "B: a_n = 0, a_1..a_{n-2} >= 1, a_{n-1} >= 2 (sufficient)";
inline constexpr std::string_view kCSufficient = "C: a_1 = 0, a_2..a_n >= 1 (sufficient)";
inline constexpr std::string_view kF4Sufficient = "F4: a_4 = 0, a_1, a_2 >= 1, a_3 >= 2 (sufficient)";
inline constexpr std::string_view kIdentity = "identity has a-value 0";
inline constexpr std::string_view kG2NormalForm = "G2: second-lowest cell is the set of u(i,j,k)";
inline constexpr std::string_view kTypeAPartition = "type A: two-sided cells are determined by the partition mu";
inline constexpr std::string_view kTypeAConjugate = "type A: a translation lies in the cell of its dominant conjugate";
inline constexpr std::string_view kThickenedConjugate =
    "conjugates of x * x_{I_k} lie in the second-lowest cell when x does";
inline constexpr std::string_view kNone = "no implemented criterion applies";
}  // namespace criterion

/// A verdict and the criterion (with witness data) that produced it.
struct CellVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string criterion;
  std::string witness;
};

/// True iff k(g, alpha) != 0 for every positive root.
bool in_lowest_cell(const Element& g);

/// Verdict for a dominant translation x = prod x_i^{a_i}. Criteria stated only
/// as sufficient conditions never yield NotInEither. Throws
/// std::invalid_argument unless x is a dominant translation.
CellVerdict translation_second_lowest(const Element& x);

/// a-value of the second-lowest two-sided cell.
std::int64_t a_value_table(Family family, int rank);
/// a-value of the lowest two-sided cell (the number of positive roots).
std::int64_t lowest_a_value(const RootSystem& rs);

/// Verdict for an arbitrary element, trying in order: the lowest-cell test,
/// the G2 normal form, translations (via their dominant conjugate), the type A
/// partition, and otherwise Unknown.
CellVerdict classify(const Element& g);

/// For x dominant with all exponents >= 1 and w != u in W0: the first positive
/// root where k(w x^{-1} w^{-1}, .) and k(u x^{-1} u^{-1}, .) have different
/// signs. Such a root shows w x w^{-1} and u x u^{-1} lie in different right
/// cells. nullopt if the signs agree everywhere. Throws when w = u or x is not
/// strictly dominant.
std::optional<int> lowest_cell_right_distinct(const Element& x, const Element& w, const Element& u);

/// Lengths around x_{I_k} s_k, with x_{I_k} the product of x_i over i != k.
struct ComplementProductCheck {
  std::int64_t len_x = 0;       ///< l(x_{I_k})
  std::int64_t len_xs = 0;      ///< l(x_{I_k} s_k)
  std::int64_t len_xs_w0 = 0;   ///< l(x_{I_k} s_k w0)
  std::int64_t len_w0 = 0;
  bool in_lowest = false;
  bool ok() const { return len_xs == len_x + 1 && len_xs == len_xs_w0 + len_w0 && in_lowest; }
};
/// x_{I_k} s_k = (x_{I_k} s_k w0) w0 with lengths adding, and it lies in the
/// lowest cell.
ComplementProductCheck check_complement_product_descent(const RootSystemPtr& rs, int k);

/// x_{I_k} = prod_{i != k} x_i.
Element complement_product(const RootSystemPtr& rs, int k);

struct HarnessEntry {
  Element w;
  Element conjugate;  ///< w x w^{-1}
  /// Whether the evidence shows w x w^{-1} in the second-lowest cell.
  bool member = false;
  std::string evidence;
  std::optional<G2CellIndex> g2_index;
  Partition mu;
  /// Type A: the chain w x, ..., w x w^{-1} keeps mu constant.
  bool chain_certificate = false;
};

struct HarnessReport {
  std::string method;  ///< "G2 normal form", "type A partition" or "thickening only"
  int k = 0;           ///< index of the zero exponent
  std::size_t weyl_order = 0;
  std::size_t expected = 0;  ///< |W0| / 2
  std::vector<HarnessEntry> entries;
  bool partial = false;
  bool all_distinct = false;
  std::size_t distinct_right_indices = 0;  ///< G2 only
  std::vector<std::string> notes;
  /// Every entry carries membership evidence (or is explicitly not decided for
  /// the thickening-only method), counts match and conjugates are distinct.
  bool ok() const;
};

/// Conjugates w x w^{-1} over the w in W0 with w s_k > w, for a dominant x that
/// classifies as InSecondLowest with a single zero exponent a_k. Enumeration
/// of W0 stops at `cap` elements and flags the report as partial.
HarnessReport conjecture_harness(const Element& x, std::size_t cap = 50'000);

}  // namespace weylcells
