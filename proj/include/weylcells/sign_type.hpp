#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "weylcells/affine_group.hpp"

namespace weylcells {

/// Map from the positive roots to {+, o, -}, stored as a string in the
/// canonical positive-root order.
struct SignType {
  std::string signs;

  const std::string& str() const { return signs; }
  /// Accepts exactly num_positive characters over "+o-" (also "0" for o).
  static SignType parse(const RootSystem& rs, std::string_view text);
  friend auto operator<=>(const SignType&, const SignType&) = default;
};

/// Sign of k(g, alpha) for every positive alpha. Throws std::invalid_argument
/// when g is not in W_a.
SignType sign_type(const Element& g);

/// Admissible patterns on one rank-2 subsystem. A2 strings list the slots
/// (alpha, beta, alpha+beta); B2 strings list (alpha, beta, alpha+beta,
/// 2alpha+beta) with alpha short.
struct AdmissibilityTables {
  std::set<std::string> a2;
  std::set<std::string> b2;
};

/// Tables parsed from the embedded data file.
const AdmissibilityTables& admissibility_tables();
/// Parses the table file format; throws std::invalid_argument on malformed input.
AdmissibilityTables parse_admissibility_tables(std::string_view text);

/// Length bound of the ball used to collect the realized sign types of G2,
/// whose rank-2 plane has no printed table.
inline constexpr int kG2RealizationLength = 24;
/// Sign types of G2 realized by W_a elements of length <= kG2RealizationLength.
const std::set<std::string>& g2_realized_sign_types();

/// Description of the first rank-2 subsystem whose restriction is not an
/// admissible pattern, or nullopt when the sign type is admissible.
std::optional<std::string> admissibility_violation(const RootSystem& rs, const SignType& st);
bool is_admissible(const RootSystem& rs, const SignType& st);

}  // namespace weylcells
