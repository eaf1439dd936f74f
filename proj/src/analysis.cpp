#include "qshuffle/analysis.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "qshuffle/errors.hpp"

namespace qshuffle {

Deadline::Deadline(double seconds) {
  until_ = std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
}

void Deadline::check(const char* what) const {
  if (until_ && std::chrono::steady_clock::now() > *until_) {
    throw Error(ErrorKind::BudgetExceeded, std::string("time budget exhausted during ") + what);
  }
}

namespace {

// Runs f(engine, i) for i < n. Worker t takes the indices congruent to t
// modulo jobs and owns its engine; worker 0 reuses the caller's.
template <class F>
void for_each_index(DCBEngine& engine, std::size_t n, int jobs, F f) {
  const auto workers = static_cast<std::size_t>(std::max(1, std::min<int>(jobs, static_cast<int>(n))));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(engine, i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < workers; ++t) {
    threads.emplace_back([&, t] {
      try {
        DCBEngine local(engine.table_ptr(), engine.options());
        for (std::size_t i = t; i < n; i += workers) f(local, i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  try {
    for (std::size_t i = 0; i < n; i += workers) f(engine, i);
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (std::thread& th : threads) th.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<MVector> nonzero(std::vector<MVector> v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](const MVector& m) { return m.is_zero(); }), v.end());
  return v;
}

bool single_power_term(const Expansion& e, const MVector& m) {
  return e.size() == 1 && e.begin()->first == m && e.begin()->second.pure_power().has_value();
}

}  // namespace

RealityCertificate reality_certificate(DCBEngine& engine, const MVector& m) {
  RealityCertificate r;
  r.mvector = m;
  r.square = engine.expand_product(m, m);
  const MVector m2 = 2 * m;
  auto it = r.square.find(m2);
  if (it == r.square.end() || !it->second.pure_power()) {
    throw Error(ErrorKind::CalibrationFailure,
                "b" + m.to_string() + "^2 does not contain b" + m2.to_string() + " with a power of q");
  }
  r.shift = *it->second.pure_power();
  for (const auto& [p, c] : r.square) {
    if (p != m2) r.extra_terms.emplace(p, c.shifted(-r.shift));
  }
  r.is_real = r.extra_terms.empty();
  return r;
}

std::vector<MVector> enumerate_dcb(const LyndonTable& table, int max_degree, std::size_t limit) {
  const auto rank = static_cast<std::size_t>(table.cartan().rank());
  std::vector<MVector> out;
  for (int h = 0; h <= max_degree; ++h) {
    // weights of height h, in decreasing lexicographic order
    std::vector<Weight> weights;
    Weight w(rank);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == rank) {
        w[i] = left;
        weights.push_back(w);
        return;
      }
      for (int c = left; c >= 0; --c) {
        w[i] = c;
        rec(i + 1, left - c);
      }
    };
    rec(0, h);
    for (const Weight& nu : weights) {
      for (MVector& m : table.kostant_partitions(nu)) {
        out.push_back(std::move(m));
        if (out.size() > limit) {
          throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(limit) + " basis vectors");
        }
      }
    }
  }
  return out;
}

CensusReport census(DCBEngine& engine, int max_degree, const Deadline& deadline, int jobs) {
  CensusReport r;
  r.max_degree = max_degree;
  const std::vector<MVector> all = enumerate_dcb(engine.table(), max_degree);
  r.total = all.size();
  const std::vector<MVector> candidates = nonzero(all);
  std::vector<char> imaginary(candidates.size(), 0);
  for_each_index(engine, candidates.size(), jobs, [&](DCBEngine& e, std::size_t i) {
    deadline.check("census");
    imaginary[i] = !reality_certificate(e, candidates[i]).is_real;
  });
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (imaginary[i]) r.imaginary.push_back(candidates[i]);
  }
  std::vector<char> prime(r.imaginary.size(), 0);
  for_each_index(engine, r.imaginary.size(), jobs,
                 [&](DCBEngine& e, std::size_t i) { prime[i] = is_prime(e, r.imaginary[i], deadline); });
  for (std::size_t i = 0; i < r.imaginary.size(); ++i) {
    if (prime[i]) r.prime_imaginary.push_back(r.imaginary[i]);
  }
  return r;
}

bool is_prime(DCBEngine& engine, const MVector& m, const Deadline& deadline) {
  const LyndonTable& t = engine.table();
  const Weight nu = m.weight(t.order());
  if (nu.height() == 0) return false;
  // every nonzero nu1 < nu
  Weight nu1(nu.rank());
  bool prime = true;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (!prime) return;
    if (i == nu.rank()) {
      if (nu1.is_zero() || nu1 == nu) return;
      const Weight nu2 = nu - nu1;
      const std::vector<MVector> left = t.kostant_partitions(nu1);
      const std::vector<MVector> right = t.kostant_partitions(nu2);
      for (const MVector& a : left) {
        for (const MVector& b : right) {
          deadline.check("primality search");
          if (single_power_term(engine.expand_product(a, b), m)) {
            prime = false;
            return;
          }
        }
      }
      return;
    }
    for (int c = 0; c <= nu[i]; ++c) {
      nu1[i] = c;
      rec(i + 1);
      if (!prime) return;
    }
    nu1[i] = 0;
  };
  rec(0);
  return prime;
}

Conj1Report conjecture1_check(DCBEngine& engine, const MVector& m1, const MVector& m2) {
  if (!reality_certificate(engine, m1).is_real) {
    throw Error(ErrorKind::PreconditionViolated, "b" + m1.to_string() + " is imaginary");
  }
  Conj1Report r;
  r.b1 = m1;
  r.b2 = m2;
  r.product = engine.expand_product(m1, m2);
  if (r.product.size() == 1 && r.product.begin()->second.pure_power()) {
    r.in_qZB = true;
    r.gap_ok = true;
    r.bprime = r.bsecond = r.product.begin()->first;
    r.m = r.s = *r.product.begin()->second.pure_power();
    return r;
  }
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [p, c] : r.product) {
    if (first || c.min_exponent() < lo) lo = c.min_exponent();
    if (first || c.max_exponent() > hi) hi = c.max_exponent();
    first = false;
  }
  r.m = lo;
  r.s = hi;
  std::vector<MVector> at_lo, at_hi;
  for (const auto& [p, c] : r.product) {
    if (c.min_exponent() == lo) at_lo.push_back(p);
    if (c.max_exponent() == hi) at_hi.push_back(p);
  }
  bool ok = lo < hi && at_lo.size() == 1 && at_hi.size() == 1 && at_lo[0] != at_hi[0];
  if (at_lo.size() == 1) r.bprime = at_lo[0];
  if (at_hi.size() == 1) r.bsecond = at_hi[0];
  for (const auto& [p, c] : r.product) {
    bool good;
    if (r.bprime && p == *r.bprime) good = c.pure_power() == std::optional<int>(lo);
    else if (r.bsecond && p == *r.bsecond) good = c.pure_power() == std::optional<int>(hi);
    else good = band_test(c, lo, hi);
    if (!good) {
      ok = false;
      r.witnesses.emplace_back(p, c);
    }
  }
  r.gap_ok = ok;
  return r;
}

MVector diamond(DCBEngine& engine, const MVector& m1, const MVector& m2, DiamondSide side) {
  if (!reality_certificate(engine, m1).is_real) {
    throw Error(ErrorKind::PreconditionViolated, "b" + m1.to_string() + " is imaginary");
  }
  const Expansion e = engine.expand_product(m1, m2);
  if (e.empty()) throw Error(ErrorKind::AmbiguousExtreme, "product vanishes");
  int extreme = 0;
  bool first = true;
  for (const auto& [p, c] : e) {
    const int x = side == DiamondSide::Left ? c.min_exponent() : c.max_exponent();
    if (first || (side == DiamondSide::Left ? x < extreme : x > extreme)) extreme = x;
    first = false;
  }
  std::vector<MVector> hits;
  for (const auto& [p, c] : e) {
    if ((side == DiamondSide::Left ? c.min_exponent() : c.max_exponent()) == extreme) hits.push_back(p);
  }
  const std::string what = "b" + m1.to_string() + " b" + m2.to_string() + " = " + format_expansion(e);
  if (hits.size() != 1) throw Error(ErrorKind::AmbiguousExtreme, "extreme term not unique in " + what);
  if (e.at(hits[0]).pure_power() != std::optional<int>(extreme)) {
    throw Error(ErrorKind::AmbiguousExtreme, "extreme coefficient is not a power of q in " + what);
  }
  return hits[0];
}

StringDecomposition string_decomposition(DCBEngine& engine, const MVector& m1, int max_degree,
                                         const Deadline& deadline) {
  const LyndonTable& t = engine.table();
  if (m1.degree(t.order()) == 0) throw Error(ErrorKind::PreconditionViolated, "b1 must have positive degree");
  if (!reality_certificate(engine, m1).is_real) {
    throw Error(ErrorKind::PreconditionViolated, "b" + m1.to_string() + " is imaginary");
  }
  StringDecomposition r;
  r.b1 = m1;
  const std::vector<MVector> all = enumerate_dcb(t, max_degree);
  const std::set<MVector> members(all.begin(), all.end());
  std::map<MVector, MVector> next;
  std::map<MVector, MVector> prev;
  for (const MVector& b : all) {
    deadline.check("string decomposition");
    if (b.degree(t.order()) + m1.degree(t.order()) > max_degree) continue;
    MVector target;
    try {
      target = diamond(engine, m1, b, DiamondSide::Left);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AmbiguousExtreme) throw;
      r.violations.push_back(e.what());
      continue;
    }
    if (!members.count(target)) continue;
    auto [it, inserted] = prev.emplace(target, b);
    if (!inserted) {
      r.violations.push_back("not injective: b" + it->second.to_string() + " and b" + b.to_string() +
                             " both map to b" + target.to_string());
      continue;
    }
    next.emplace(b, target);
  }
  for (const MVector& b : all) {
    if (prev.count(b)) continue;
    r.roots.push_back(b);
    std::vector<MVector> chain{b};
    for (auto it = next.find(b); it != next.end(); it = next.find(it->second)) chain.push_back(it->second);
    r.strings.push_back(std::move(chain));
  }
  return r;
}

namespace {

SweepReport merge(std::vector<SweepReport>& parts) {
  SweepReport r;
  for (SweepReport& p : parts) {
    r.pairs += p.pairs;
    r.skipped += p.skipped;
    for (std::string& v : p.violations) r.violations.push_back(std::move(v));
  }
  return r;
}

}  // namespace

SweepReport leading_term_sweep(DCBEngine& engine, int max_degree, const Deadline& deadline, int jobs) {
  const std::vector<MVector> all = nonzero(enumerate_dcb(engine.table(), max_degree));
  std::vector<SweepReport> parts(all.size());
  for_each_index(engine, all.size(), jobs, [&](DCBEngine& e, std::size_t i) {
    const MVector& a = all[i];
    for (const MVector& b : all) {
      deadline.check("leading-term sweep");
      ++parts[i].pairs;
      const Expansion x = e.expand_product(a, b);
      auto it = x.find(a + b);
      if (it == x.end() || !it->second.pure_power()) {
        parts[i].violations.push_back("b" + a.to_string() + " b" + b.to_string() + " = " + format_expansion(x));
      }
    }
  });
  return merge(parts);
}

SweepReport conjecture1_sweep(DCBEngine& engine, int max_degree, const Deadline& deadline, int jobs) {
  const std::vector<MVector> all = nonzero(enumerate_dcb(engine.table(), max_degree));
  std::vector<SweepReport> parts(all.size());
  for_each_index(engine, all.size(), jobs, [&](DCBEngine& e, std::size_t i) {
    const MVector& a = all[i];
    deadline.check("conjecture 1 sweep");
    if (!reality_certificate(e, a).is_real) {
      parts[i].skipped = all.size();
      return;
    }
    for (const MVector& b : all) {
      deadline.check("conjecture 1 sweep");
      ++parts[i].pairs;
      const Conj1Report c = conjecture1_check(e, a, b);
      if (!c.in_qZB && !c.gap_ok) {
        parts[i].violations.push_back("b" + a.to_string() + " b" + b.to_string() + " = " + format_expansion(c.product));
      }
    }
  });
  return merge(parts);
}

std::optional<int> proportional(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::optional<int> k;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return std::nullopt;
    if (a[i].is_zero()) continue;
    const int ki = a[i].min_exponent() - b[i].min_exponent();
    if (k && *k != ki) return std::nullopt;
    if (a[i] != b[i].shifted(ki)) return std::nullopt;
    k = ki;
  }
  return k ? k : std::optional<int>(0);
}

bool q_centrality_check(DCBEngine& engine, const MVector& m) {
  const LyndonTable& t = engine.table();
  const auto rank = static_cast<std::size_t>(t.cartan().rank());
  for (int i = 1; i <= t.cartan().rank(); ++i) {
    const MVector e = MVector::unit(t.size(), *t.order().position_of(Weight::simple(rank, i)));
    const Expansion left = engine.expand_product(m, e);
    const Expansion right = engine.expand_product(e, m);
    std::vector<LaurentPoly> a, b;
    for (const auto& [p, c] : left) {
      a.push_back(c);
      auto it = right.find(p);
      b.push_back(it == right.end() ? LaurentPoly() : it->second);
    }
    if (left.size() != right.size() || !proportional(a, b)) return false;
  }
  return true;
}

}  // namespace qshuffle
