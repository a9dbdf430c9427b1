#include "weylcells/kl_cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace weylcells {

namespace {

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> letters;
  if (text == "e") return letters;
  std::istringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::runtime_error("bad letter '" + tok + "'");
    letters.push_back(v);
  }
  return letters;
}

}  // namespace

std::string cache_header(const RootSystem& rs, int L) {
  return "klcache v1 " + std::string(family_name(rs.family())) + " " + std::to_string(rs.rank()) +
         " L=" + std::to_string(L);
}

void save_kl_cache(const KLTable& table, std::ostream& out) {
  out << cache_header(*table.system(), table.bound()) << '\n';
  for (std::size_t i = 0; i < table.size(); ++i)
    out << "E " << i << ' ' << format_word(table.elements()[i].reduced_word()) << '\n';
  for (std::size_t w = 0; w < table.size(); ++w) {
    for (int x : table.ideal(static_cast<int>(w))) {
      out << "P " << x << ' ' << w;
      for (auto c : table.P(x, static_cast<int>(w))) out << ' ' << c;
      out << '\n';
    }
  }
}

void save_kl_cache(const KLTable& table, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    save_kl_cache(table, out);
    if (!out) throw std::runtime_error("error writing cache file " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::optional<KLTable> load_kl_cache(std::istream& in, const RootSystemPtr& rs, int L, std::string& warning) {
  std::string line;
  if (!std::getline(in, line)) {
    warning = "cache is empty";
    return std::nullopt;
  }
  const std::string expected = cache_header(*rs, L);
  if (line != expected) {
    warning = "cache header '" + line + "' does not match '" + expected + "'; ignoring the cache";
    return std::nullopt;
  }
  std::vector<Element> elements;
  std::vector<std::vector<std::pair<int, Poly>>> columns;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    auto fail = [&](const std::string& why) -> void {
      throw std::runtime_error("cache line " + std::to_string(line_no) + ": " + why);
    };
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "E") {
      std::size_t idx = 0;
      std::string word;
      if (!(ls >> idx >> word) || idx != elements.size()) fail("element lines must be numbered 0, 1, ...");
      try {
        elements.push_back(Element::from_generators(rs, parse_word(word)));
      } catch (const std::exception& e) {
        fail(e.what());
      }
      if (format_word(elements.back().reduced_word()) != word) fail("word '" + word + "' is not canonical");
      columns.emplace_back();
    } else if (tag == "P") {
      long long x = 0, w = 0;
      if (!(ls >> x >> w)) fail("polynomial lines need two indices");
      if (x < 0 || w < 0 || static_cast<std::size_t>(w) >= columns.size() ||
          static_cast<std::size_t>(x) >= elements.size())
        fail("index out of range");
      Poly p;
      for (long long c; ls >> c;) p.push_back(c);
      if (!ls.eof()) fail("bad coefficient");
      if (p.empty() || p.back() == 0) fail("polynomial has trailing zeros");
      columns[static_cast<std::size_t>(w)].emplace_back(static_cast<int>(x), std::move(p));
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  try {
    return KLTable(rs, L, std::move(elements), std::move(columns));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("inconsistent cache: ") + e.what());
  }
}

KLTable load_or_build(const RootSystemPtr& rs, int L, const std::string& path, std::size_t cap,
                      std::vector<std::string>& warnings) {
  if (!path.empty() && std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::string warning;
    try {
      if (auto t = load_kl_cache(in, rs, L, warning)) return std::move(*t);
      warnings.push_back(warning);
    } catch (const std::exception& e) {
      warnings.push_back(std::string("unreadable cache ignored: ") + e.what());
    }
  }
  KLTable table(rs, L, cap);
  if (!path.empty()) save_kl_cache(table, path);
  return table;
}

}  // namespace weylcells
