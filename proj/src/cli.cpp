#include "weylcells/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <ostream>
#include <set>

#include "weylcells/cell_membership.hpp"
#include "weylcells/g2_normal_form.hpp"
#include "weylcells/kl_cache.hpp"
#include "weylcells/literal.hpp"
#include "weylcells/sign_type.hpp"
#include "weylcells/verify.hpp"

namespace weylcells {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kGrammar = R"(Element literals:
  w:0,1,2,1      word in the generators s0..sn (g<j> is the length-zero
                 element of the coset of x_j; w:e is the identity)
  t:[a1,...,an]  translation by a1*lambda_1 + ... + an*lambda_n
  [v1,...,vn]    affine permutation window (family A, rank n-1)
  a*b*c          product, evaluated left to right
Exit status: 0 success, 1 usage error, 2 verification failure.)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  int rank = 0;
  bool json_out = false;
  bool text_out = false;
  std::string cache;
  std::size_t max_ball = 200'000;
  std::size_t max_states = 50'000;
  std::vector<std::string> elements;
  int L = -1;
  std::string side = "left";
  bool list = false;
  std::string suite;
};

struct Output {
  json result = json::object();
  std::vector<std::string> lines;
  std::vector<std::string> warnings;
  int status = kExitOk;
};

int default_rank(Family f) {
  switch (f) {
    case Family::G2: return 2;
    case Family::F4: return 4;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    default: return 0;
  }
}

class Context {
 public:
  explicit Context(const Options& o) : opt(o) {}

  const RootSystemPtr& system() {
    if (rs_) return rs_;
    if (opt.family.empty()) throw UsageError("--family is required for this subcommand");
    Family f;
    try {
      f = parse_family(opt.family);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    const int rank = opt.rank > 0 ? opt.rank : default_rank(f);
    if (rank <= 0) throw UsageError("--rank is required for family " + opt.family);
    try {
      rs_ = RootSystem::build(f, rank);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    return rs_;
  }

  Element element(std::size_t i) {
    const auto& rs = system();
    try {
      return parse_element(rs, opt.elements.at(i));
    } catch (const LiteralError& e) {
      throw UsageError(std::string("bad element literal: ") + e.what() + " (offending token '" + e.token + "')");
    }
  }

  void need_elements(std::size_t lo, std::size_t hi) const {
    const auto n = opt.elements.size();
    if (n < lo || n > hi)
      throw UsageError("expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or more") +
                       " element literal(s), got " + std::to_string(n));
  }

  KLTable table(int L, Output& out) {
    if (L < 0) throw UsageError("--L must be non-negative");
    std::vector<std::string> warnings;
    KLTable t = load_or_build(system(), L, opt.cache, opt.max_ball, warnings);
    out.warnings.insert(out.warnings.end(), warnings.begin(), warnings.end());
    return t;
  }

  const Options& opt;

 private:
  RootSystemPtr rs_;
};

json rationals(const Vector& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

json element_json(const Element& g) {
  const auto rw = g.reduced_word();
  json j;
  j["literal"] = element_literal(g);
  j["word"] = format_word(rw);
  j["gamma"] = rw.gamma;
  j["length"] = g.length();
  if (g.system().family() == Family::A) j["window"] = to_permutation(g).str();
  return j;
}

std::string verdict_line(const CellVerdict& v) {
  return std::string(verdict_name(v.verdict)) + "\ncertificate: " + v.criterion +
         (v.witness.empty() ? "" : " [" + v.witness + "]");
}

void cmd_len(Context& c, Output& o) {
  c.need_elements(1, 1);
  const Element g = c.element(0);
  o.result["element"] = element_json(g);
  o.result["length"] = g.length();
  o.lines.push_back(std::to_string(g.length()));
}

void cmd_word(Context& c, Output& o) {
  c.need_elements(1, 1);
  const Element g = c.element(0);
  o.result["element"] = element_json(g);
  o.lines.push_back(format_word(g.reduced_word()));
}

void cmd_product(Context& c, Output& o, bool invert) {
  if (invert) c.need_elements(1, 1);
  else c.need_elements(2, SIZE_MAX);
  Element g = c.element(0);
  if (invert) g = g.inverse();
  for (std::size_t i = 1; i < c.opt.elements.size(); ++i) g = g * c.element(i);
  o.result["element"] = element_json(g);
  o.lines.push_back(element_literal(g));
}

void cmd_coords(Context& c, Output& o) {
  c.need_elements(1, 1);
  const Element g = c.element(0);
  const RootSystem& rs = g.system();
  const int n = rs.rank();
  o.result["element"] = element_json(g);
  o.result["lambda"] = g.lambda();
  o.result["lambda_ambient"] = rationals(rs.to_ambient(g.lambda()));
  json rows = json::array();
  for (int i = 0; i < n; ++i)
    rows.push_back(IntVec(g.matrix().begin() + i * n, g.matrix().begin() + (i + 1) * n));
  o.result["matrix"] = rows;
  std::string lam;
  for (auto v : g.lambda()) lam += (lam.empty() ? "" : ",") + std::to_string(v);
  o.lines.push_back("lambda [" + lam + "]");
  if (g.in_affine_weyl()) {
    const IntVec k = g.coordinate_form();
    json roots = json::array();
    std::string line;
    for (std::size_t r = 0; r < k.size(); ++r) {
      roots.push_back({{"root", rs.root(static_cast<int>(r)).root_coeffs}, {"k", k[r]}});
      line += (line.empty() ? "" : " ") + std::to_string(k[r]);
    }
    o.result["coordinate_form"] = roots;
    o.lines.push_back("coordinate form " + line);
  } else {
    o.result["coordinate_form"] = nullptr;
    o.warnings.push_back("element has gamma label " + std::to_string(g.gamma_label()) +
                         "; the coordinate form is defined on W_a only");
  }
}

void cmd_signtype(Context& c, Output& o) {
  c.need_elements(1, 1);
  const Element g = c.element(0);
  if (!g.in_affine_weyl()) throw UsageError("sign types are defined on W_a; the element has a non-trivial gamma label");
  const SignType st = sign_type(g);
  const auto why = admissibility_violation(g.system(), st);
  o.result["element"] = element_json(g);
  o.result["sign_type"] = st.str();
  o.result["admissible"] = !why.has_value();
  o.result["violation"] = why ? json(*why) : json(nullptr);
  o.lines.push_back(st.str());
  o.lines.push_back(why ? "not admissible: " + *why : "admissible");
}

void cmd_cell(Context& c, Output& o) {
  c.need_elements(1, 1);
  const Element g = c.element(0);
  const CellVerdict v = classify(g);
  o.result["element"] = element_json(g);
  o.result["verdict"] = verdict_name(v.verdict);
  o.result["certificate"] = {{"criterion", v.criterion}, {"witness", v.witness}};
  const RootSystem& rs = g.system();
  if (v.verdict == Verdict::InLowest) o.result["a_value"] = lowest_a_value(rs);
  else if (v.verdict == Verdict::InSecondLowest) o.result["a_value"] = a_value_table(rs.family(), rs.rank());
  else o.result["a_value"] = nullptr;
  if (v.verdict == Verdict::Unknown) o.warnings.push_back("verdict Unknown: " + v.criterion);
  o.lines.push_back(verdict_line(v));
}

void cmd_mu(Context& c, Output& o) {
  c.need_elements(1, 1);
  if (c.system()->family() != Family::A) throw UsageError("mu is defined for family A only");
  const Element g = c.element(0);
  const Partition mu = mu_partition(g);
  o.result["element"] = element_json(g);
  o.result["partition"] = mu;
  o.lines.push_back(format_partition(mu));
}

void cmd_g2nf(Context& c, Output& o) {
  c.need_elements(1, 1);
  if (c.system()->family() != Family::G2) throw UsageError("g2-nf needs --family G2");
  const Element g = c.element(0);
  const auto nf = g2_normal_form(g);
  o.result["element"] = element_json(g);
  if (nf) o.result["normal_form"] = {{"i", nf->i}, {"j", nf->j}, {"k", nf->k}, {"text", nf->str()}};
  else o.result["normal_form"] = nullptr;
  o.lines.push_back(nf ? nf->str() : "none");
}

void cmd_kl(Context& c, Output& o) {
  c.need_elements(2, 2);
  const Element x = c.element(0), w = c.element(1);
  if (!x.in_affine_weyl() || !w.in_affine_weyl())
    throw UsageError("KL polynomials are computed on W_a; both elements need gamma label 0");
  const int L = c.opt.L >= 0 ? c.opt.L : static_cast<int>(std::max(x.length(), w.length()));
  const KLTable t = c.table(L, o);
  const int xi = t.index_of(x), wi = t.index_of(w);
  if (xi < 0 || wi < 0) throw UsageError("element outside the ball of length " + std::to_string(L));
  const Poly& p = t.P(xi, wi);
  o.result["x"] = element_json(x);
  o.result["w"] = element_json(w);
  o.result["L"] = L;
  o.result["leq"] = t.leq(xi, wi);
  o.result["P"] = p;
  o.result["P_text"] = format_poly(p);
  o.result["mu"] = t.mu(xi, wi);
  o.result["edge"] = t.edge(xi, wi);
  o.lines.push_back("P = " + format_poly(p));
  o.lines.push_back("mu = " + std::to_string(t.mu(xi, wi)));
}

void cmd_ball(Context& c, Output& o) {
  if (c.opt.L < 0) throw UsageError("ball needs --L");
  std::vector<Element> ball;
  try {
    ball = affine_ball(c.system(), c.opt.L, c.opt.max_ball);
  } catch (const BallCapExceeded& e) {
    throw UsageError(e.what());
  }
  std::vector<std::size_t> by_length(static_cast<std::size_t>(c.opt.L) + 1, 0);
  for (const auto& g : ball) ++by_length[static_cast<std::size_t>(g.length())];
  o.result["L"] = c.opt.L;
  o.result["size"] = ball.size();
  o.result["by_length"] = by_length;
  o.lines.push_back("size " + std::to_string(ball.size()));
  std::string counts;
  for (auto n : by_length) counts += (counts.empty() ? "" : " ") + std::to_string(n);
  o.lines.push_back("by length " + counts);
  if (c.opt.list) {
    json items = json::array();
    for (const auto& g : ball) {
      items.push_back(element_literal(g));
      o.lines.push_back(element_literal(g));
    }
    o.result["elements"] = items;
  }
}

void cmd_cellgraph(Context& c, Output& o) {
  if (c.opt.L < 0) throw UsageError("cellgraph needs --L");
  Side side;
  if (c.opt.side == "left") side = Side::Left;
  else if (c.opt.side == "right") side = Side::Right;
  else if (c.opt.side == "two-sided") side = Side::TwoSided;
  else throw UsageError("--side must be left, right or two-sided");
  const KLTable t = c.table(c.opt.L, o);
  const CellGraph g = t.cell_graph(side);
  o.warnings.push_back(CellGraph::kCaveat);
  o.result["L"] = c.opt.L;
  o.result["side"] = c.opt.side;
  o.result["caveat"] = CellGraph::kCaveat;
  json comps = json::array();
  for (std::size_t id = 0; id < g.components.size(); ++id) {
    json words = json::array();
    std::string line = "[" + std::to_string(id) + "]";
    for (int x : g.components[id]) {
      words.push_back(element_literal(t.element(x)));
      line += " " + format_word(t.element(x).reduced_word());
    }
    std::set<int> below;
    for (int x : g.components[id])
      for (int y : g.out[static_cast<std::size_t>(x)]) {
        const int cy = g.component[static_cast<std::size_t>(y)];
        if (cy != static_cast<int>(id)) below.insert(cy);
      }
    comps.push_back({{"id", id}, {"elements", words}, {"below", below}});
    o.lines.push_back(line);
  }
  o.result["components"] = comps;
}

json report_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& ch : r.checks) checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
  return {{"suite", r.suite}, {"claim", r.claim}, {"pass", r.pass()}, {"checks", checks}, {"findings", r.findings}};
}

void cmd_verify(Context& c, Output& o) {
  SuiteOptions so;
  so.cache_prefix = c.opt.cache;
  so.max_ball = c.opt.max_ball;
  so.max_states = c.opt.max_states;
  std::vector<std::string> names;
  if (c.opt.suite == "all") {
    for (const auto& s : suites()) names.push_back(s.name);
  } else {
    names.push_back(c.opt.suite);
  }
  json reports = json::array();
  for (const auto& name : names) {
    SuiteReport r;
    try {
      r = run_suite(name, so);
    } catch (const UnknownSuite& e) {
      throw UsageError(e.what());
    }
    reports.push_back(report_json(r));
    o.lines.push_back((r.pass() ? "PASS " : "FAIL ") + r.suite + ": " + r.claim);
    for (const auto& ch : r.checks)
      o.lines.push_back(std::string("  ") + (ch.pass ? "ok   " : "FAIL ") + ch.name +
                        (ch.detail.empty() ? "" : " (" + ch.detail + ")"));
    for (const auto& f : r.findings) o.lines.push_back("  note " + f);
    if (!r.pass()) o.status = kExitVerificationFailed;
  }
  o.result["suites"] = reports;
  o.result["pass"] = o.status == kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Affine Weyl group cells: element arithmetic, cell criteria, Kazhdan-Lusztig polynomials",
               "weylcells"};
  app.footer(kGrammar);
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.allow_extras();  // subcommands inherit this; see the check after parsing
  app.add_option("--family", opt.family, "root system family: A B C D E6 E7 E8 F4 G2");
  app.add_option("--rank", opt.rank, "rank (implied for E6, E7, E8, F4, G2)");
  auto* json_flag = app.add_flag("--json", opt.json_out, "JSON report");
  auto* text_flag = app.add_flag("--text", opt.text_out, "plain text (default)");
  json_flag->excludes(text_flag);
  app.add_option("--cache", opt.cache, "KL table cache file; verify uses it as a prefix")->envname("WEYLCELLS_CACHE");
  app.add_option("--max-ball", opt.max_ball, "largest ball (element count) to enumerate")->capture_default_str();
  app.add_option("--max-states", opt.max_states, "cap on finite Weyl group enumeration in harness runs")
      ->capture_default_str();

  struct Sub {
    const char* name;
    const char* help;
    const char* arg_help;
  };
  const std::vector<Sub> element_subs{
      {"len", "length of an element", "element literal"},
      {"word", "reduced word (gamma label first)", "element literal"},
      {"mul", "product of two or more elements", "element literals"},
      {"inv", "inverse", "element literal"},
      {"coords", "translation part, matrix and coordinate form", "element literal"},
      {"signtype", "sign type and admissibility", "element literal"},
      {"cell", "lowest / second-lowest cell verdict with certificate", "element literal"},
      {"mu", "type A partition invariant (family A)", "element literal or window"},
      {"g2-nf", "normal form u(i,j,k) in the second-lowest cell of G2", "element literal"},
      {"kl", "Kazhdan-Lusztig polynomial P_{x,w} and mu(x,w)", "x w"},
  };
  for (const auto& s : element_subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    // Literals are taken verbatim from the unmatched arguments: an option
    // would expand "[1,2,3]" into three values.
    sub->usage(std::string("weylcells ") + s.name + " [OPTIONS] <" + s.arg_help + ">");
    if (std::string(s.name) == "kl") sub->add_option("--L", opt.L, "ball length (default: the longer element)");
  }
  auto* ball = app.add_subcommand("ball", "enumerate {w in W_a : l(w) <= L}");
  ball->add_option("--L", opt.L, "length bound")->required();
  ball->add_flag("--list", opt.list, "list every element");
  auto* graph = app.add_subcommand("cellgraph", "components of the left, right or two-sided cell graph of a ball");
  graph->add_option("--L", opt.L, "length bound")->required();
  graph->add_option("--side", opt.side, "left, right or two-sided")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
  std::string suite_help = "one of:";
  for (const auto& s : suites()) suite_help += " " + s.name;
  verify->add_option("suite", opt.suite, suite_help)->required();

  std::vector<const char*> argv{"weylcells"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  const bool takes_elements = std::any_of(element_subs.begin(), element_subs.end(),
                                          [&](const Sub& s) { return name == s.name; });
  const std::vector<std::string> extras = app.remaining(true);
  for (const auto& e : extras)
    if (!takes_elements || (e.size() > 1 && e[0] == '-' && !std::isdigit(static_cast<unsigned char>(e[1])))) {
      err << "error: unexpected argument '" << e << "'\nRun with --help for more information.\n";
      return kExitUsage;
    }
  opt.elements = extras;
  Output o;
  Context ctx(opt);
  try {
    if (name == "len") cmd_len(ctx, o);
    else if (name == "word") cmd_word(ctx, o);
    else if (name == "mul") cmd_product(ctx, o, false);
    else if (name == "inv") cmd_product(ctx, o, true);
    else if (name == "coords") cmd_coords(ctx, o);
    else if (name == "signtype") cmd_signtype(ctx, o);
    else if (name == "cell") cmd_cell(ctx, o);
    else if (name == "mu") cmd_mu(ctx, o);
    else if (name == "g2-nf") cmd_g2nf(ctx, o);
    else if (name == "kl") cmd_kl(ctx, o);
    else if (name == "ball") cmd_ball(ctx, o);
    else if (name == "cellgraph") cmd_cellgraph(ctx, o);
    else cmd_verify(ctx, o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (opt.json_out) {
    json command{{"subcommand", name}, {"args", args}};
    json report{{"schema", 1},
                {"command", command},
                {"result", o.result},
                {"warnings", o.warnings},
                {"status", o.status == kExitOk ? "ok" : "verification failed"}};
    out << report.dump(2) << '\n';
  } else {
    for (const auto& l : o.lines) out << l << '\n';
    for (const auto& w : o.warnings) err << "warning: " << w << '\n';
  }
  return o.status;
}

}  // namespace weylcells
