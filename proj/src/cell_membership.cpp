#include "weylcells/cell_membership.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace weylcells {

namespace {

std::string format_exponents(const IntVec& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + "]";
}

bool simply_laced(Family f) {
  return f == Family::A || f == Family::D || f == Family::E6 || f == Family::E7 || f == Family::E8;
}

int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }

CellVerdict make(Verdict v, std::string_view crit, std::string witness) {
  return CellVerdict{v, std::string(crit), std::move(witness)};
}

// Coset representatives are taken from a bounded breadth-first walk of W0.
std::vector<Element> bounded_weyl_group(const RootSystemPtr& rs, std::size_t cap, bool& partial) {
  std::vector<Element> out{Element::identity(rs)};
  std::unordered_set<Element, ElementHash> seen{out.front()};
  partial = false;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 1; i <= rs->rank(); ++i) {
      Element h = out[head].times_generator(i);
      if (seen.count(h)) continue;
      if (out.size() >= cap) {
        partial = true;
        return out;
      }
      seen.insert(h);
      out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::InLowest: return "InLowest";
    case Verdict::InSecondLowest: return "InSecondLowest";
    case Verdict::NotInEither: return "NotInEither";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool in_lowest_cell(const Element& g) {
  const IntVec k = g.coordinate_form();
  return std::none_of(k.begin(), k.end(), [](std::int64_t v) { return v == 0; });
}

CellVerdict translation_second_lowest(const Element& x) {
  if (!x.is_translation()) throw std::invalid_argument("expected a translation");
  const IntVec& a = x.lambda();
  if (std::any_of(a.begin(), a.end(), [](std::int64_t v) { return v < 0; }))
    throw std::invalid_argument("translation " + format_exponents(a) + " is not dominant; conjugate it first");
  const RootSystem& rs = x.system();
  const int n = rs.rank();
  const std::string w = "exponents " + format_exponents(a);
  auto at = [&](int i) { return a[static_cast<std::size_t>(i - 1)]; };
  const auto zeros = std::count(a.begin(), a.end(), 0);

  if (zeros == 0) return make(Verdict::InLowest, criterion::kLowestCoordinateForm, w + ", all positive");
  if (simply_laced(rs.family())) {
    if (zeros == 1) return make(Verdict::InSecondLowest, criterion::kSimplyLacedOneZero, w);
    return make(Verdict::NotInEither, criterion::kSimplyLacedManyZeros, w);
  }
  if (zeros == n) return make(Verdict::NotInEither, criterion::kIdentity, w);
  switch (rs.family()) {
    case Family::G2:
      if (at(1) >= 2 && at(2) == 0) return make(Verdict::InSecondLowest, criterion::kG2FirstPower, w);
      return make(Verdict::NotInEither, criterion::kG2FirstPower, w);
    case Family::B: {
      bool ok = at(n) == 0 && at(n - 1) >= 2;
      for (int i = 1; i <= n - 2; ++i) ok = ok && at(i) >= 1;
      if (ok) return make(Verdict::InSecondLowest, criterion::kBSufficient, w);
      break;
    }
    case Family::C: {
      bool ok = at(1) == 0;
      for (int i = 2; i <= n; ++i) ok = ok && at(i) >= 1;
      if (ok) return make(Verdict::InSecondLowest, criterion::kCSufficient, w);
      break;
    }
    case Family::F4:
      if (at(4) == 0 && at(1) >= 1 && at(2) >= 1 && at(3) >= 2)
        return make(Verdict::InSecondLowest, criterion::kF4Sufficient, w);
      break;
    default:
      break;
  }
  return make(Verdict::Unknown, criterion::kNone, w);
}

std::int64_t a_value_table(Family family, int n) {
  const std::int64_t m = n;
  switch (family) {
    case Family::A: return (m * m - m) / 2;
    case Family::B: return m * m - m;
    case Family::C: return m * m - 2 * m + 2;
    case Family::D: return m * m - 3 * m + 3;
    case Family::E6: return 25;
    case Family::E7: return 46;
    case Family::E8: return 91;
    case Family::F4: return 16;
    case Family::G2: return 3;
  }
  return 0;
}

std::int64_t lowest_a_value(const RootSystem& rs) { return static_cast<std::int64_t>(rs.num_positive()); }

Element complement_product(const RootSystemPtr& rs, int k) {
  if (k < 1 || k > rs->rank()) throw std::invalid_argument("k out of range");
  IntVec a(static_cast<std::size_t>(rs->rank()), 1);
  a[static_cast<std::size_t>(k - 1)] = 0;
  return Element::dominant(rs, a);
}

CellVerdict classify(const Element& g) {
  const RootSystem& rs = g.system();
  if (in_lowest_cell(g)) return make(Verdict::InLowest, criterion::kLowestCoordinateForm, "every k(g, alpha) != 0");

  if (rs.family() == Family::G2) {
    if (auto nf = g2_normal_form(g)) return make(Verdict::InSecondLowest, criterion::kG2NormalForm, nf->str());
    return make(Verdict::NotInEither, criterion::kG2NormalForm, "no factorization u(i,j,k)");
  }

  if (g.is_translation()) {
    auto [w, d] = make_dominant(g);
    CellVerdict v = translation_second_lowest(d);
    if (d == g) return v;
    const std::string conj = "conjugator " + format_word(w.reduced_word()) + ", dominant " + format_exponents(d.lambda());
    if (rs.family() == Family::A)
      return make(v.verdict, std::string(criterion::kTypeAConjugate) + "; " + v.criterion, conj + ", " + v.witness);
    const IntVec& a = d.lambda();
    if (std::count(a.begin(), a.end(), 0) == 1) {
      const int k = static_cast<int>(std::find(a.begin(), a.end(), 0) - a.begin()) + 1;
      IntVec thin = a;
      for (auto& c : thin) c = c > 0 ? c - 1 : 0;
      const bool same_zero_set = std::count(thin.begin(), thin.end(), 0) == 1;
      if (same_zero_set &&
          translation_second_lowest(Element::dominant(g.system_ptr(), thin)).verdict == Verdict::InSecondLowest)
        return make(Verdict::InSecondLowest, criterion::kThickenedConjugate,
                    conj + ", x = " + format_exponents(thin) + ", k = " + std::to_string(k));
    }
    return make(Verdict::Unknown, criterion::kNone, conj + ", " + v.criterion + ": " + verdict_name(v.verdict).data());
  }

  if (rs.family() == Family::A) {
    const Partition mu = mu_partition(g);
    const Partition ref = mu_partition(complement_product(g.system_ptr(), 1));
    const std::string w = "mu " + format_partition(mu) + ", second-lowest mu " + format_partition(ref);
    return make(mu == ref ? Verdict::InSecondLowest : Verdict::NotInEither, criterion::kTypeAPartition, w);
  }
  return make(Verdict::Unknown, criterion::kNone, "");
}

std::optional<int> lowest_cell_right_distinct(const Element& x, const Element& w, const Element& u) {
  if (!x.is_translation() ||
      std::any_of(x.lambda().begin(), x.lambda().end(), [](std::int64_t v) { return v < 1; }))
    throw std::invalid_argument("expected a dominant translation with all exponents >= 1");
  if (!w.is_finite() || !u.is_finite()) throw std::invalid_argument("w and u must lie in W0");
  if (w == u) throw std::invalid_argument("w and u must differ");
  const Element xi = x.inverse();
  const IntVec kw = (w * xi * w.inverse()).coordinate_form();
  const IntVec ku = (u * xi * u.inverse()).coordinate_form();
  for (std::size_t a = 0; a < kw.size(); ++a)
    if (sign_of(kw[a]) != sign_of(ku[a])) return static_cast<int>(a);
  return std::nullopt;
}

ComplementProductCheck check_complement_product_descent(const RootSystemPtr& rs, int k) {
  const Element x = complement_product(rs, k);
  const Element xs = x.times_generator(k);
  const Element w0 = longest_finite(rs);
  ComplementProductCheck c;
  c.len_x = x.length();
  c.len_xs = xs.length();
  c.len_xs_w0 = (xs * w0).length();
  c.len_w0 = w0.length();
  c.in_lowest = in_lowest_cell(xs);
  return c;
}

bool HarnessReport::ok() const {
  if (!partial && entries.size() != expected) return false;
  if (!all_distinct) return false;
  for (const auto& e : entries) {
    if (in_lowest_cell(e.conjugate)) return false;
    if (method != "thickening only" && !e.member) return false;
    if (method == "type A partition" && !e.chain_certificate) return false;
  }
  if (method == "G2 normal form" && !partial && distinct_right_indices != expected) return false;
  return true;
}

HarnessReport conjecture_harness(const Element& x, std::size_t cap) {
  const CellVerdict v = translation_second_lowest(x);
  if (v.verdict != Verdict::InSecondLowest)
    throw std::invalid_argument("harness needs a dominant translation in the second-lowest cell (got " +
                                std::string(verdict_name(v.verdict)) + ")");
  const IntVec& a = x.lambda();
  if (std::count(a.begin(), a.end(), 0) != 1) throw std::invalid_argument("harness needs exactly one zero exponent");
  const RootSystemPtr& rs = x.system_ptr();
  const Family fam = rs->family();

  HarnessReport rep;
  rep.k = static_cast<int>(std::find(a.begin(), a.end(), 0) - a.begin()) + 1;
  rep.method = fam == Family::G2 ? "G2 normal form" : (fam == Family::A ? "type A partition" : "thickening only");
  rep.weyl_order = rs->weyl_group_order();
  rep.expected = rep.weyl_order / 2;

  std::vector<Element> reps;
  for (Element& w : bounded_weyl_group(rs, cap, rep.partial))
    if (!w.is_right_descent(rep.k)) reps.push_back(std::move(w));
  if (rep.partial) rep.notes.push_back("W0 enumeration stopped at " + std::to_string(cap) + " elements");

  const Partition mu_x = fam == Family::A ? mu_partition(x) : Partition{};
  auto evaluate = [&](const Element& w) {
    HarnessEntry e{w, w * x * w.inverse(), false, {}, std::nullopt, {}, false};
    if (fam == Family::G2) {
      e.g2_index = g2_normal_form(e.conjugate);
      e.member = e.g2_index.has_value();
      e.evidence = e.member ? "normal form " + e.g2_index->str() : "no normal form";
    } else if (fam == Family::A) {
      e.mu = mu_partition(e.conjugate);
      e.member = e.mu == mu_x;
      e.chain_certificate = chain_keeps_mu(right_conjugation_chain(w, x));
      e.evidence = "mu " + format_partition(e.mu) + (e.member ? " equals" : " differs from") + " mu(x)";
    } else {
      e.evidence = "w x x_{I_k} w^{-1} lies in the second-lowest cell; w x w^{-1} itself not decided";
    }
    return e;
  };

  // fixed chunking keeps the merged order independent of scheduling
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  const std::size_t chunk = (reps.size() + workers - 1) / workers;
  std::vector<std::future<std::vector<HarnessEntry>>> jobs;
  for (std::size_t begin = 0; begin < reps.size(); begin += chunk) {
    const std::size_t end = std::min(reps.size(), begin + chunk);
    jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, [&, begin, end] {
      std::vector<HarnessEntry> out;
      for (std::size_t i = begin; i < end; ++i) out.push_back(evaluate(reps[i]));
      return out;
    }));
  }
  for (auto& j : jobs)
    for (auto& e : j.get()) rep.entries.push_back(std::move(e));

  std::unordered_set<Element, ElementHash> conj;
  std::set<int> right_indices;
  for (const auto& e : rep.entries) {
    conj.insert(e.conjugate);
    if (e.g2_index) right_indices.insert(e.g2_index->i);
  }
  rep.all_distinct = conj.size() == rep.entries.size();
  rep.distinct_right_indices = right_indices.size();
  if (fam == Family::A)
    rep.notes.push_back("pairwise right-cell separation is consistent with distinct conjugates and equal mu, not proved");
  if (fam != Family::A && fam != Family::G2)
    rep.notes.push_back("membership of w x w^{-1} is only known for the thickened translation x * x_{I_k}");
  return rep;
}

}  // namespace weylcells
