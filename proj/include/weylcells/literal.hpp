#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "weylcells/affine_group.hpp"

namespace weylcells {

/// Unparseable element literal; `token` is the offending piece of input.
struct LiteralError : std::invalid_argument {
  LiteralError(const std::string& message, std::string bad_token);
  std::string token;
};

/// Element literals:
///   w:<letters>      comma-separated generators 0..n; "g<j>" names the
///                    length-zero element in the coset of x_j; "w:e" is e
///   t:[a1,...,an]    translation by sum a_i lambda_i
///   [v1,...,vn]      affine permutation window (family A of rank n-1)
///   a*b*...          product, left to right
Element parse_element(const RootSystemPtr& rs, std::string_view text);

/// Canonical literal "w:<reduced word>", parseable by parse_element.
std::string element_literal(const Element& g);

}  // namespace weylcells
