#include "qshuffle/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "qshuffle/analysis.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/reference.hpp"

namespace qshuffle {

Tier parse_tier(const std::string& name) {
  if (name == "fast") return Tier::Fast;
  if (name == "standard") return Tier::Standard;
  if (name == "heavy") return Tier::Heavy;
  throw Error(ErrorKind::InvalidArgument, "unknown tier '" + name + "'");
}

const char* to_string(Tier tier) {
  switch (tier) {
    case Tier::Fast: return "fast";
    case Tier::Standard: return "standard";
    case Tier::Heavy: return "heavy";
  }
  return "?";
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"g2", "b3", "c3", "d4", "a5", "census", "conj1"};
  return names;
}

namespace {

ShuffleElement element_of(const LyndonTable& t, const std::vector<reference::WordTerm>& terms) {
  ShuffleElement x(t.cartan_ptr());
  for (const auto& [w, c] : terms) x.add_term(parse_word(w), LaurentPoly::parse(c));
  return x;
}

Check compare_elements(std::string name, const ShuffleElement& got, const ShuffleElement& want) {
  Check c{std::move(name), got == want, ""};
  if (!c.pass) c.detail = "got " + got.to_string() + "; expected " + want.to_string();
  return c;
}

DCBEngine make_engine(const std::shared_ptr<const LyndonTable>& t, const VerifyOptions& o) {
  DCBEngine::Options eo;
  eo.cache_dir = o.cache_dir;
  return DCBEngine(t, eo);
}

void imaginary_checks(const std::string& type, const VerifyOptions& o, SuiteReport& r) {
  const reference::ImaginaryIdentity& ref = reference::imaginary_identity(type);
  const auto table = LyndonTable::build(type, ref.reduced_word);

  Check order{"convex order " + table->order().word_string(), true, ""};
  const auto& roots = table->order().roots();
  for (std::size_t k = 0; k < ref.roots.size(); ++k) {
    if (k >= roots.size() || roots[k] != Weight(ref.roots[k])) {
      order.pass = false;
      order.detail = "position " + std::to_string(k + 1) + ": expected " + Weight(ref.roots[k]).to_string();
      if (k < roots.size()) order.detail += ", got " + roots[k].to_string();
      break;
    }
  }
  if (roots.size() != ref.roots.size()) order.pass = false;
  r.checks.push_back(order);

  DCBEngine engine = make_engine(table, o);
  const MVector b = MVector::parse(ref.b);
  const MVector z = MVector::parse(ref.z);
  const RealityCertificate cert = reality_certificate(engine, b);
  Expansion want;
  want.emplace(2 * b, LaurentPoly::monomial(ref.shift));
  want.emplace(z, LaurentPoly::monomial(ref.shift));
  Check ident{"b^2 = q^" + std::to_string(ref.shift) + "(b^[2] + b" + z.to_string() + ")", cert.square == want, ""};
  if (!ident.pass) ident.detail = "got " + format_expansion(cert.square);
  r.checks.push_back(ident);

  r.checks.push_back({"z is q-central", q_centrality_check(engine, z), ""});
}

void g2_checks(const VerifyOptions& o, SuiteReport& r) {
  imaginary_checks("G2", o, r);
  const auto table = LyndonTable::build("G2", {1, 2, 1, 2, 1, 2});
  DCBEngine engine = make_engine(table, o);
  const LyndonTable& t = *table;
  const ShuffleElement& b = engine.element(MVector::parse("1,0,0,0,1,0"));
  r.checks.push_back(compare_elements("b(1,0,0,0,1,0) = w[1,2,1]", b, element_of(t, reference::g2_b())));
  r.checks.push_back(compare_elements("b^2 word expansion", mul(b, b), element_of(t, reference::g2_b_squared())));
  r.checks.push_back(compare_elements("b(2,0,0,0,2,0) word expansion", engine.element(MVector::parse("2,0,0,0,2,0")),
                                      element_of(t, reference::g2_b2())));
  r.checks.push_back(compare_elements("b(1,0,1,0,1,0) = (q+q^-1)w[1,2,1,1,2,1]",
                                      engine.element(MVector::parse("1,0,1,0,1,0")), element_of(t, reference::g2_z())));
  r.checks.push_back({"b is not q-central", !q_centrality_check(engine, MVector::parse("1,0,0,0,1,0")), ""});
}

std::string join(const std::vector<MVector>& v) {
  std::string s;
  for (const MVector& m : v) s += (s.empty() ? "" : " ") + m.to_string();
  return s;
}

void census_checks(const VerifyOptions& o, const Deadline& deadline, SuiteReport& r) {
  const reference::G2Census& ref = reference::g2_census();
  const int degree = o.max_degree >= 0 ? o.max_degree : ref.max_degree;
  const auto table = LyndonTable::build("G2", {1, 2, 1, 2, 1, 2});
  DCBEngine engine = make_engine(table, o);
  const CensusReport c = census(engine, degree, deadline, o.jobs);
  if (degree != ref.max_degree) {
    r.checks.push_back({"census at degree " + std::to_string(degree), true,
                        std::to_string(c.total) + " vectors, imaginary: " + join(c.imaginary) +
                            "; prime: " + join(c.prime_imaginary)});
    return;
  }
  std::set<MVector> want_imag, want_prime;
  for (const auto& s : ref.imaginary) want_imag.insert(MVector::parse(s));
  for (const auto& s : ref.primes) want_prime.insert(MVector::parse(s));
  const std::set<MVector> got_imag(c.imaginary.begin(), c.imaginary.end());
  const std::set<MVector> got_prime(c.prime_imaginary.begin(), c.prime_imaginary.end());
  r.checks.push_back({std::to_string(ref.total) + " basis vectors of degree <= 7", c.total == ref.total,
                      "got " + std::to_string(c.total)});
  r.checks.push_back({std::to_string(ref.imaginary.size()) + " imaginary vectors", got_imag == want_imag,
                      "got " + join(c.imaginary)});
  r.checks.push_back({std::to_string(ref.primes.size()) + " prime imaginary vectors", got_prime == want_prime,
                      "got " + join(c.prime_imaginary)});
}

void conj1_checks(const VerifyOptions& o, const Deadline& deadline, SuiteReport& r) {
  const int degree = o.max_degree >= 0 ? o.max_degree : (o.tier == Tier::Heavy ? 7 : 5);
  const auto table = LyndonTable::build("G2", {1, 2, 1, 2, 1, 2});
  DCBEngine engine = make_engine(table, o);
  const SweepReport lead = leading_term_sweep(engine, std::min(degree, 4), deadline, o.jobs);
  Check lc{"leading term b(m+p) in b(m)b(p), degree <= " + std::to_string(std::min(degree, 4)),
           lead.violations.empty(), std::to_string(lead.pairs) + " pairs"};
  if (!lc.pass) lc.detail += "; first violation: " + lead.violations.front();
  r.checks.push_back(lc);
  const SweepReport s = conjecture1_sweep(engine, degree, deadline, o.jobs);
  Check cc{"conjecture 1, degree <= " + std::to_string(degree), s.violations.empty(),
           std::to_string(s.pairs) + " pairs, " + std::to_string(s.skipped) + " skipped (b1 imaginary)"};
  if (!cc.pass) cc.detail += "; " + std::to_string(s.violations.size()) + " violations, first: " + s.violations.front();
  r.checks.push_back(cc);
}

}  // namespace

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
  }
  if (name == "a5" && options.tier != Tier::Heavy) {
    throw Error(ErrorKind::PreconditionViolated, "suite a5 needs --tier heavy");
  }
  if (options.tier == Tier::Fast && (name == "census" || name == "conj1")) {
    throw Error(ErrorKind::PreconditionViolated, "suite " + name + " needs --tier standard or heavy");
  }
  const auto start = std::chrono::steady_clock::now();
  const Deadline deadline = options.budget ? Deadline(*options.budget) : Deadline();
  SuiteReport r;
  r.suite = name;
  if (name == "g2") {
    g2_checks(options, r);
  } else if (name == "census") {
    census_checks(options, deadline, r);
  } else if (name == "conj1") {
    conj1_checks(options, deadline, r);
  } else {
    std::string type = name;
    std::transform(type.begin(), type.end(), type.begin(), ::toupper);
    imaginary_checks(type, options, r);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace qshuffle
