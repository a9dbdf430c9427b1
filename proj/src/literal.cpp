#include "weylcells/literal.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "weylcells/type_a.hpp"

namespace weylcells {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view tok, std::string_view context) {
  tok = strip(tok);
  std::int64_t v = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw LiteralError("bad integer '" + std::string(tok) + "' in '" + std::string(context) + "'", std::string(tok));
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

IntVec parse_bracketed(std::string_view body, std::string_view context) {
  body = strip(body);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw LiteralError("expected [a1,...,an] in '" + std::string(context) + "'", std::string(body));
  IntVec out;
  for (auto tok : split(body.substr(1, body.size() - 2), ',')) out.push_back(parse_int(tok, context));
  return out;
}

Element parse_factor(const RootSystemPtr& rs, std::string_view f) {
  f = strip(f);
  const std::string tok(f);
  if (f.empty()) throw LiteralError("empty factor in element literal", tok);
  if (f == "e") return Element::identity(rs);
  if (f.substr(0, 2) == "w:") {
    std::string_view body = strip(f.substr(2));
    if (body == "e" || body.empty()) return Element::identity(rs);
    Word word;
    for (auto l : split(body, ',')) {
      l = strip(l);
      if (!l.empty() && l.front() == 'g') {
        const auto j = parse_int(l.substr(1), f);
        if (j < 0 || j > rs->rank()) throw LiteralError("coset label out of range in '" + tok + "'", std::string(l));
        word.push_back(Letter::gamma(static_cast<int>(j)));
      } else {
        const auto i = parse_int(l, f);
        if (i < 0 || i > rs->rank())
          throw LiteralError("generator " + std::string(l) + " out of range 0.." + std::to_string(rs->rank()),
                             std::string(l));
        word.push_back(Letter::gen(static_cast<int>(i)));
      }
    }
    return Element::from_word(rs, word);
  }
  if (f.substr(0, 2) == "t:") {
    IntVec a = parse_bracketed(f.substr(2), f);
    if (a.size() != static_cast<std::size_t>(rs->rank()))
      throw LiteralError("translation needs " + std::to_string(rs->rank()) + " coordinates", tok);
    return Element::translation(rs, a);
  }
  if (f.front() == '[') {
    if (rs->family() != Family::A) throw LiteralError("window notation needs family A", tok);
    IntVec v = parse_bracketed(f, f);
    if (v.size() != static_cast<std::size_t>(rs->rank() + 1))
      throw LiteralError("window needs " + std::to_string(rs->rank() + 1) + " entries", tok);
    try {
      return from_permutation(rs, AffinePermutation(std::vector<std::int64_t>(v.begin(), v.end())));
    } catch (const std::invalid_argument& e) {
      throw LiteralError(e.what(), tok);
    }
  }
  throw LiteralError("unrecognized element literal '" + tok + "' (expected w:..., t:[...] or a window)", tok);
}

}  // namespace

LiteralError::LiteralError(const std::string& message, std::string bad_token)
    : std::invalid_argument(message), token(std::move(bad_token)) {}

Element parse_element(const RootSystemPtr& rs, std::string_view text) {
  Element g = Element::identity(rs);
  for (auto f : split(text, '*')) g = g * parse_factor(rs, f);
  return g;
}

std::string element_literal(const Element& g) { return "w:" + format_word(g.reduced_word()); }

}  // namespace weylcells
