#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weylcells/kl_engine.hpp"

namespace weylcells {

/// Text cache of a KL table:
///   klcache v1 <family> <rank> L=<L>
///   E <idx> <canonical word>          one line per ball element, in index order
///   P <x-idx> <w-idx> c0 c1 ...       one line per pair x <= w, by w then x
/// Canonical words are the greedy reduced words ("e" for the identity).
std::string cache_header(const RootSystem& rs, int L);
void save_kl_cache(const KLTable& table, std::ostream& out);
void save_kl_cache(const KLTable& table, const std::string& path);

/// nullopt with `warning` set when the header does not match (rs, L); throws
/// std::runtime_error on malformed content.
std::optional<KLTable> load_kl_cache(std::istream& in, const RootSystemPtr& rs, int L, std::string& warning);

/// Loads the table from `path` when it holds a matching cache, otherwise
/// builds it and writes the cache. An empty path disables caching. Stale or
/// unreadable caches add a warning and are rebuilt.
KLTable load_or_build(const RootSystemPtr& rs, int L, const std::string& path, std::size_t cap,
                      std::vector<std::string>& warnings);

}  // namespace weylcells
