#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qshuffle/analysis.hpp"
#include "qshuffle/dcb.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/json_io.hpp"
#include "qshuffle/type_a.hpp"
#include "qshuffle/verify.hpp"

using namespace qshuffle;

namespace {

enum Exit { kOk = 0, kUsage = 1, kEngine = 2, kMismatch = 3 };

struct RunConfig {
  std::string cartan_type = "G2";
  bool type_given = false;
  std::string word;
  std::string cache_dir;
  std::string tier = "standard";
  std::string output = "text";
  double budget = 0;
  int jobs = 1;

  bool json() const { return output == "json"; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<std::filesystem::path> cache_dir(const RunConfig& cfg) {
  if (const char* env = std::getenv("QSHUFFLE_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  if (!cfg.cache_dir.empty()) return std::filesystem::path(cfg.cache_dir);
  return std::nullopt;
}

std::shared_ptr<const LyndonTable> table_for(const RunConfig& cfg) {
  return LyndonTable::build(cfg.cartan_type, cfg.word.empty() ? std::vector<int>{} : parse_word_list(cfg.word));
}

DCBEngine engine_for(const RunConfig& cfg) {
  DCBEngine::Options o;
  o.cache_dir = cache_dir(cfg);
  return DCBEngine(table_for(cfg), o);
}

MVector mvector_arg(const LyndonTable& t, const std::string& text, const char* flag) {
  const MVector m = MVector::parse(text);
  if (m.size() != t.size()) {
    throw UsageError(std::string(flag) + " has " + std::to_string(m.size()) + " entries but " + t.cartan().name() +
                     " has " + std::to_string(t.size()) + " positive roots");
  }
  return m;
}

Json header(const char* command, const LyndonTable& t) {
  return Json{{"format", kFormatVersion},
              {"command", command},
              {"cartan_type", t.cartan().name()},
              {"reduced_word", t.order().reduced_word()}};
}

std::string provenance_name(Provenance p) { return p == Provenance::Cached ? "cached" : "computed"; }

int cmd_dcb(const RunConfig& cfg, const std::string& m_text, bool show_pbw) {
  DCBEngine engine = engine_for(cfg);
  const MVector m = mvector_arg(engine.table(), m_text, "--m");
  const DCBRecord r = engine.record(m);
  const bool full = engine.materializable(m.weight(engine.table().order()));
  if (cfg.json()) {
    Json j = header("dcb", engine.table());
    j["m"] = to_json(m);
    j["good_word"] = word_letters(engine.table().good_word(m));
    j["theta_fixed"] = r.theta_fixed;
    j["provenance"] = provenance_name(r.provenance);
    j["pbw"] = to_json(r.pbw);
    if (full) j["element"] = to_json(r.element);
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "b" << m.to_string() << " [" << engine.table().cartan().name() << ", word "
            << engine.table().order().word_string() << "]\n";
  if (full) {
    std::cout << r.element.to_string() << "\n";
  } else {
    std::cout << "(word expansion too large to print; " << r.pbw.size() << " dual PBW terms)\n";
  }
  if (show_pbw || !full) std::cout << "dual PBW: " << format_expansion(r.pbw) << "\n";
  return kOk;
}

// Accepted forms: "q^K(b2+z)", "q^K(b2)", or "m: coeff; m: coeff; ...".
std::optional<std::string> expectation_failure(const std::string& expect, const MVector& m1, const MVector& m2,
                                               const Expansion& got) {
  std::string s;
  for (char c : expect) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  const auto open = s.find('(');
  if (open != std::string::npos && s.find(':') == std::string::npos) {
    const LaurentPoly scale = LaurentPoly::parse(s.substr(0, open));
    const std::string inner = s.substr(open);
    if (m1 != m2) return "the b2 shorthand needs m1 = m2";
    if (inner != "(b2)" && inner != "(b2+z)") throw UsageError("cannot read --expect '" + expect + "'");
    const std::size_t want_terms = inner == "(b2)" ? 1 : 2;
    auto it = got.find(2 * m1);
    if (got.size() != want_terms || it == got.end()) {
      return "expected " + std::to_string(want_terms) + " terms including b" + (2 * m1).to_string();
    }
    for (const auto& [p, c] : got) {
      if (c != scale) return "coefficient of b" + p.to_string() + " is " + c.to_string() + ", expected " + scale.to_string();
    }
    return std::nullopt;
  }
  Expansion want;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("cannot read --expect entry '" + item + "'");
    std::string mv = item.substr(0, colon);
    if (!mv.empty() && mv.front() == '(') mv = mv.substr(1, mv.size() - 2);
    want.emplace(MVector::parse(mv), LaurentPoly::parse(item.substr(colon + 1)));
  }
  if (want != got) return "expected " + format_expansion(want);
  return std::nullopt;
}

int cmd_product(const RunConfig& cfg, const std::string& a, const std::string& b, const std::string& expect) {
  DCBEngine engine = engine_for(cfg);
  const MVector m1 = mvector_arg(engine.table(), a, "--m1");
  const MVector m2 = mvector_arg(engine.table(), b, "--m2");
  const Expansion e = engine.expand_product(m1, m2);
  std::optional<Conj1Report> conj;
  if (!m1.is_zero() && !m2.is_zero() && reality_certificate(engine, m1).is_real) {
    conj = conjecture1_check(engine, m1, m2);
  }
  std::optional<std::string> failure;
  if (!expect.empty()) failure = expectation_failure(expect, m1, m2, e);

  if (cfg.json()) {
    Json j = header("product", engine.table());
    j["m1"] = to_json(m1);
    j["m2"] = to_json(m2);
    j["expansion"] = to_json(e);
    if (conj) {
      Json c{{"in_qZB", conj->in_qZB}, {"gap_ok", conj->gap_ok}, {"m", conj->m}, {"s", conj->s}};
      if (conj->bprime) c["bprime"] = to_json(*conj->bprime);
      if (conj->bsecond) c["bsecond"] = to_json(*conj->bsecond);
      Json w = Json::array();
      for (const auto& [p, coeff] : conj->witnesses) w.push_back({{"m", to_json(p)}, {"c", to_json(coeff)}});
      c["witnesses"] = w;
      j["conjecture1"] = c;
    }
    if (!expect.empty()) {
      j["expect"] = expect;
      j["expect_ok"] = !failure;
      if (failure) j["mismatch"] = *failure;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "b" << m1.to_string() << " b" << m2.to_string() << " = " << format_expansion(e) << "\n";
    if (conj) {
      std::cout << "conjecture 1: " << (conj->in_qZB ? "product in q^Z B*" : conj->gap_ok ? "gap condition holds"
                                                                                          : "gap condition fails")
                << " (m = " << conj->m << ", s = " << conj->s << ")\n";
      for (const auto& [p, c] : conj->witnesses) std::cout << "  witness b" << p.to_string() << ": " << c.to_string() << "\n";
    }
    if (!expect.empty()) std::cout << "expect: " << (failure ? "MISMATCH, " + *failure : std::string("ok")) << "\n";
  }
  return failure ? kMismatch : kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, int degree) {
  VerifyOptions o;
  o.tier = parse_tier(cfg.tier);
  if (cfg.budget > 0) o.budget = cfg.budget;
  o.cache_dir = cache_dir(cfg);
  o.max_degree = degree;
  o.jobs = cfg.jobs;
  const SuiteReport r = run_suite(suite, o);
  if (cfg.json()) {
    Json j{{"format", kFormatVersion}, {"command", "verify"}, {"suite", suite}, {"tier", cfg.tier},
           {"passed", r.passed()}, {"seconds", r.seconds}};
    Json checks = Json::array();
    for (const Check& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const Check& c : r.checks) {
      std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name;
      if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
      std::cout << "\n";
    }
    std::cout << suite << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.seconds << " s)\n";
  }
  return r.passed() ? kOk : kMismatch;
}

int cmd_translate(RunConfig cfg, const std::string& m_text, const std::string& segments, const std::string& to, int n) {
  if (m_text.empty() == segments.empty()) throw UsageError("give exactly one of --m and --segments");
  std::optional<Multisegment> ms;
  if (!segments.empty()) {
    ms = Multisegment::parse(segments);
    if (!cfg.type_given) {
      int r = 1;
      for (const Segment& s : ms->segments()) r = std::max(r, s.b);
      cfg.cartan_type = "A" + std::to_string(r);
    }
  }
  Json j{{"format", kFormatVersion}, {"command", "translate"}, {"to", to}};
  std::string text;
  auto need_engine = [&]() {
    DCBEngine engine = engine_for(cfg);
    const MVector m = ms ? multisegment_to_mvector(engine.table(), *ms) : mvector_arg(engine.table(), m_text, "--m");
    if (!ms) ms = mvector_to_multisegment(engine.table(), m);
    return std::make_pair(std::move(engine), m);
  };
  if (to == "multisegment" || to == "mvector") {
    auto [engine, m] = need_engine();
    j["cartan_type"] = engine.table().cartan().name();
    j["m"] = to_json(m);
    j["multisegment"] = ms->to_string();
    text = to == "multisegment" ? ms->to_string() : m.csv();
  } else if (to == "drinfeld") {
    if (n <= 0) throw UsageError("--to drinfeld needs --N");
    if (!ms) need_engine();
    const DrinfeldSet d = drinfeld(*ms, n);
    Json polys = Json::object();
    for (const auto& [k, es] : d.polynomials()) polys[std::to_string(k)] = es;
    j["N"] = n;
    j["multisegment"] = ms->to_string();
    j["drinfeld"] = polys;
    text = d.to_string();
    if (!text.empty() && text.back() == '\n') text.pop_back();
  } else if (to == "dimension") {
    auto [engine, m] = need_engine();
    const Integer dim = dimension_eval_pbw(engine, m);
    j["m"] = to_json(m);
    j["multisegment"] = ms->to_string();
    j["dimension"] = to_json(dim);
    text = dim.to_string();
  } else {
    throw UsageError("--to must be multisegment, mvector, drinfeld or dimension");
  }
  std::cout << (cfg.json() ? j.dump(2) : text) << "\n";
  return kOk;
}

int cmd_strings(const RunConfig& cfg, const std::string& b1_text, int depth, int degree) {
  DCBEngine engine = engine_for(cfg);
  const MVector b1 = mvector_arg(engine.table(), b1_text, "--b1");
  const Deadline deadline = cfg.budget > 0 ? Deadline(cfg.budget) : Deadline();
  const StringDecomposition s = string_decomposition(engine, b1, degree, deadline);
  auto clipped = [&](const std::vector<MVector>& chain) {
    return std::vector<MVector>(chain.begin(), chain.begin() + std::min<std::ptrdiff_t>(chain.size(), depth + 1));
  };
  if (cfg.json()) {
    Json j = header("strings", engine.table());
    j["b1"] = to_json(b1);
    j["depth"] = depth;
    j["max_degree"] = degree;
    Json chains = Json::array();
    for (const auto& chain : s.strings) {
      Json c = Json::array();
      for (const MVector& m : clipped(chain)) c.push_back(to_json(m));
      chains.push_back(c);
    }
    j["strings"] = chains;
    j["violations"] = s.violations;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << s.strings.size() << " strings for b1 = b" << b1.to_string() << " within degree " << degree << "\n";
    for (const auto& chain : s.strings) {
      std::string line;
      for (const MVector& m : clipped(chain)) line += (line.empty() ? "" : " -> ") + m.to_string();
      std::cout << line << "\n";
    }
    for (const std::string& v : s.violations) std::cout << "violation: " << v << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual canonical bases in the quantum shuffle algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--type", cfg.cartan_type, "Cartan type, e.g. G2, B3, C3, D4, A5")
      ->each([&](const std::string&) { cfg.type_given = true; });
  app.add_option("--word", cfg.word, "Reduced word for w0, e.g. 1,2,1,2,1,2");
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached basis vectors (QSHUFFLE_CACHE_DIR overrides)");
  app.add_option("--tier", cfg.tier, "fast, standard or heavy")->check(CLI::IsMember({"fast", "standard", "heavy"}));
  app.add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", cfg.budget, "Wall-clock budget in seconds");
  app.add_option("--jobs", cfg.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  std::string m, m1, m2, expect, suite, segments, to = "multisegment", b1;
  bool show_pbw = false;
  int n = 0, depth = 1, degree = -1, strings_degree = 7;

  CLI::App* dcb = app.add_subcommand("dcb", "Print a dual canonical basis vector");
  dcb->add_option("--m", m, "m-vector, comma separated")->required();
  dcb->add_flag("--pbw", show_pbw, "Also print the dual PBW coordinates");

  CLI::App* product = app.add_subcommand("product", "Expand b(m1) b(m2) on the dual canonical basis");
  product->add_option("--m1", m1)->required();
  product->add_option("--m2", m2)->required();
  product->add_option("--expect", expect, "\"q^K(b2+z)\", \"q^K(b2)\" or \"m: coeff; ...\"");

  CLI::App* verify = app.add_subcommand("verify", "Run a reference suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--degree", degree, "Degree bound for census and conj1");

  CLI::App* translate = app.add_subcommand("translate", "Type A dictionary");
  translate->add_option("--m", m);
  translate->add_option("--segments", segments, "e.g. \"[1,2],[2,3,4],[3],[4,5]\"");
  translate->add_option("--to", to)->check(CLI::IsMember({"multisegment", "mvector", "drinfeld", "dimension"}));
  translate->add_option("--N", n, "Drinfeld polynomials P_1..P_{N-1}");

  CLI::App* strings = app.add_subcommand("strings", "b1-strings under b -> b1 <> b");
  strings->add_option("--b1", b1)->required();
  strings->add_option("--depth", depth, "Steps shown per string")->check(CLI::NonNegativeNumber);
  strings->add_option("--degree", strings_degree, "Degree bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*dcb) return cmd_dcb(cfg, m, show_pbw);
    if (*product) return cmd_product(cfg, m1, m2, expect);
    if (*verify) return cmd_verify(cfg, suite, degree);
    if (*translate) return cmd_translate(cfg, m, segments, to, n);
    if (*strings) return cmd_strings(cfg, b1, depth, strings_degree);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_engine_error() ? kEngine : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEngine;
  }
  return kUsage;
}
