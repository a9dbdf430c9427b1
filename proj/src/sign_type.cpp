#include "weylcells/sign_type.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace weylcells {

namespace detail {
extern const std::string_view kAdmissibilityTables;
}

namespace {

char sign_char(std::int64_t k) { return k > 0 ? '+' : (k < 0 ? '-' : 'o'); }

char normalize_sign(const std::string& tok) {
  if (tok == "+") return '+';
  if (tok == "-") return '-';
  if (tok == "o" || tok == "0") return 'o';
  throw std::invalid_argument("bad sign '" + tok + "' in admissibility table");
}

std::string restrict_to(const SignType& st, const Rank2Subsystem& sub) {
  std::string out;
  for (int r : sub.roots) out += st.signs.at(static_cast<std::size_t>(r));
  return out;
}

std::string describe(const RootSystem& rs, const Rank2Subsystem& sub) {
  std::string out = sub.kind == Rank2Subsystem::Kind::A2 ? "A2" : (sub.kind == Rank2Subsystem::Kind::B2 ? "B2" : "G2");
  out += " subsystem on roots {";
  for (std::size_t i = 0; i < sub.roots.size(); ++i) {
    if (i) out += ";";
    const auto& c = rs.root(sub.roots[i]).root_coeffs;
    for (std::size_t k = 0; k < c.size(); ++k) out += (k ? "," : "") + std::to_string(c[k]);
  }
  return out + "}";
}

}  // namespace

SignType SignType::parse(const RootSystem& rs, std::string_view text) {
  if (text.size() != rs.num_positive())
    throw std::invalid_argument("sign type needs " + std::to_string(rs.num_positive()) + " characters, got " +
                                std::to_string(text.size()));
  SignType st;
  for (char c : text) {
    if (c == '+' || c == '-' || c == 'o') st.signs += c;
    else if (c == '0') st.signs += 'o';
    else throw std::invalid_argument(std::string("bad sign character '") + c + "'");
  }
  return st;
}

SignType sign_type(const Element& g) {
  if (!g.in_affine_weyl()) throw std::invalid_argument("sign types are defined on W_a only");
  SignType st;
  for (auto k : g.coordinate_form()) st.signs += sign_char(k);
  return st;
}

AdmissibilityTables parse_admissibility_tables(std::string_view text) {
  AdmissibilityTables t;
  // position of each printed b2 column in the canonical (a, b, a+b, 2a+b) order
  std::array<int, 4> b2_slot{-1, -1, -1, -1};
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("admissibility table line " + std::to_string(line_no) + ": " + why);
    };
    if (tag == "a2") {
      if (toks.size() != 3) fail("a2 rows need 3 signs");
      // printed as X_{a+b}, X_a, X_b
      std::string p{normalize_sign(toks[1]), normalize_sign(toks[2]), normalize_sign(toks[0])};
      if (!t.a2.insert(p).second) fail("duplicate a2 row");
    } else if (tag == "b2-slots") {
      if (toks.size() != 4) fail("b2-slots needs 4 names");
      const std::array<std::string, 4> names{"a", "b", "a+b", "2a+b"};
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < 4; ++k)
          if (toks[i] == names[k]) b2_slot[i] = static_cast<int>(k);
        if (b2_slot[i] < 0) fail("unknown b2 slot '" + toks[i] + "'");
      }
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < i; ++k)
          if (b2_slot[i] == b2_slot[k]) fail("b2-slots repeats '" + toks[i] + "'");
    } else if (tag == "b2") {
      if (b2_slot[0] < 0) fail("b2 rows before b2-slots");
      if (toks.size() != 4) fail("b2 rows need 4 signs");
      std::string p(4, '?');
      for (std::size_t i = 0; i < 4; ++i) p[static_cast<std::size_t>(b2_slot[i])] = normalize_sign(toks[i]);
      if (p.find('?') != std::string::npos) fail("b2-slots is not a permutation");
      if (!t.b2.insert(p).second) fail("duplicate b2 row");
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }
  return t;
}

const AdmissibilityTables& admissibility_tables() {
  static const AdmissibilityTables tables = parse_admissibility_tables(detail::kAdmissibilityTables);
  return tables;
}

const std::set<std::string>& g2_realized_sign_types() {
  static const std::set<std::string> realized = [] {
    auto rs = RootSystem::build(Family::G2, 2);
    const Rank2Subsystem& sub = rs->rank2_subsystems().front();
    std::set<std::string> out;
    for (const Element& g : affine_ball(rs, kG2RealizationLength)) out.insert(restrict_to(sign_type(g), sub));
    return out;
  }();
  return realized;
}

std::optional<std::string> admissibility_violation(const RootSystem& rs, const SignType& st) {
  if (st.signs.size() != rs.num_positive()) return "sign type has the wrong number of entries";
  const auto& tables = admissibility_tables();
  for (const auto& sub : rs.rank2_subsystems()) {
    const std::string p = restrict_to(st, sub);
    bool ok = false;
    switch (sub.kind) {
      case Rank2Subsystem::Kind::A2: ok = tables.a2.count(p) > 0; break;
      case Rank2Subsystem::Kind::B2: ok = tables.b2.count(p) > 0; break;
      case Rank2Subsystem::Kind::G2: ok = g2_realized_sign_types().count(p) > 0; break;
    }
    if (!ok) return describe(rs, sub) + " has pattern " + p;
  }
  return std::nullopt;
}

bool is_admissible(const RootSystem& rs, const SignType& st) { return !admissibility_violation(rs, st).has_value(); }

}  // namespace weylcells
