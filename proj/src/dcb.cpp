#include "qshuffle/dcb.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qshuffle/errors.hpp"
#include "qshuffle/json_io.hpp"

namespace qshuffle {

int theta_twist(const CartanDatum& cartan, const Weight& nu) {
  int t = cartan.form(nu, nu) / 2;
  for (int i = 1; i <= cartan.rank(); ++i) t -= nu[static_cast<std::size_t>(i - 1)] * cartan.d(i);
  return t;
}

ShuffleElement theta(const ShuffleElement& x) { return x.bar(); }

ShuffleElement sigma(const ShuffleElement& x) {
  ShuffleElement r = x.bar();
  if (!x.is_zero()) r *= LaurentPoly::monomial(-theta_twist(x.cartan(), x.weight()));
  return r;
}

namespace {

std::vector<Word> words_of_weight(const Weight& nu) {
  Word w;
  for (std::size_t i = 0; i < nu.rank(); ++i) w += Word(static_cast<std::size_t>(nu[i]), static_cast<char>(i + 1));
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

ShuffleElement letter_monomial(const std::shared_ptr<const CartanDatum>& cartan, const Word& w) {
  ShuffleElement x = ShuffleElement::unit(cartan);
  for (char c : w) x = mul(x, ShuffleElement(cartan, Word(1, c)));
  return x;
}

}  // namespace

ShuffleElement sigma_by_solve(const ShuffleElement& x) {
  if (x.is_zero()) return x;
  const auto cartan = x.cartan_ptr();
  const Weight nu = x.weight();
  if (word_space_size(nu) > 2000) throw Error(ErrorKind::BudgetExceeded, "weight space too large for sigma_by_solve");
  const std::vector<Word> words = words_of_weight(nu);
  const std::size_t n = words.size();
  std::map<Word, std::size_t> row_of;
  for (std::size_t i = 0; i < n; ++i) row_of[words[i]] = i;
  std::vector<ShuffleElement> mono;
  mono.reserve(n);
  for (const Word& w : words) mono.push_back(letter_monomial(cartan, w));

  // Augmented matrix: rows = word coordinates, columns = x_w, last = x.
  std::vector<std::vector<RationalFunction>> a(n, std::vector<RationalFunction>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [w, c] : mono[j].terms()) a[row_of.at(w)][j] = RationalFunction(c);
  }
  for (const auto& [w, c] : x.terms()) {
    auto it = row_of.find(w);
    if (it == row_of.end()) throw Error(ErrorKind::NotInImage, "inhomogeneous input");
    a[it->second][n] = RationalFunction(c);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    const RationalFunction inv = RationalFunction(LaurentPoly(1)) / a[r][col];
    for (std::size_t k = col; k <= n; ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      const RationalFunction f = a[i][col];
      for (std::size_t k = col; k <= n; ++k) {
        if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
      }
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i) {
    if (!a[i][n].is_zero()) throw Error(ErrorKind::NotInImage, "element is not in the span of letter monomials");
  }
  std::map<Word, RationalFunction> acc;
  for (std::size_t i = 0; i < r; ++i) {
    const RationalFunction coeff = a[i][n].bar();
    if (coeff.is_zero()) continue;
    const ShuffleElement& rev = mono[row_of.at(reversed(words[pivot_col[i]]))];
    for (const auto& [w, c] : rev.terms()) acc[w] += coeff * RationalFunction(c);
  }
  ShuffleElement out(cartan);
  for (const auto& [w, c] : acc) {
    if (c.is_zero()) continue;
    auto l = c.to_laurent();
    if (!l) throw Error(ErrorKind::InexactDivision, "sigma produced a non-Laurent coefficient " + c.to_string());
    out.add_term(w, *l);
  }
  return out;
}

ShuffleElement theta_by_solve(const ShuffleElement& x) {
  ShuffleElement s = sigma_by_solve(x);
  if (!x.is_zero()) s *= LaurentPoly::monomial(theta_twist(x.cartan(), x.weight()));
  return s;
}

WeightSpace::WeightSpace(std::shared_ptr<const LyndonTable> table, Weight nu)
    : table_(std::move(table)),
      nu_(std::move(nu)),
      partitions_(table_->kostant_partitions(nu_)),
      projector_(table_->cartan_ptr(), [this]() {
        std::vector<Word> g;
        g.reserve(partitions_.size());
        for (const MVector& m : partitions_) g.push_back(table_->good_word(m));
        return g;
      }()) {
  for (std::size_t i = 0; i < partitions_.size(); ++i) index_.emplace(partitions_[i], i);
  rows_.resize(partitions_.size());
}

std::size_t WeightSpace::index_of(const MVector& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw Error(ErrorKind::InvalidArgument, m.to_string() + " is not of weight " + nu_.to_string());
  return it->second;
}

const std::vector<LaurentPoly>& WeightSpace::pbw_row(std::size_t i) {
  auto& slot = rows_.at(i);
  if (!slot) {
    const MVector& p = partitions_[i];
    slot = projector_.project(table_->dual_pbw_factors(p), table_->normalization_exponent(p), i);
    ++rows_computed_;
    if ((*slot)[i].is_zero()) {
      throw Error(ErrorKind::LeadingWordMismatch, "E*" + p.to_string() + " vanishes on its good word");
    }
  }
  return *slot;
}

bool congruent_to_pbw(const Expansion& pbw_coordinates, const MVector& m) {
  bool seen = false;
  for (const auto& [p, c] : pbw_coordinates) {
    if (p == m) {
      if (c != LaurentPoly(1)) return false;
      seen = true;
    } else if (!c.is_zero() && c.min_exponent() < 1) {
      return false;
    }
  }
  return seen;
}

std::string cache_key(const LyndonTable& table, const MVector& m) {
  return table.cartan().name() + "|" + table.order().word_string() + "|" + m.csv();
}

std::string format_expansion(const Expansion& e) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : e) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")b" + m.to_string();
  }
  return s;
}

DCBEngine::DCBEngine(std::shared_ptr<const LyndonTable> table) : DCBEngine(std::move(table), Options()) {}

DCBEngine::DCBEngine(std::shared_ptr<const LyndonTable> table, Options options)
    : table_(std::move(table)), options_(std::move(options)) {
  if (options_.cache_dir) std::filesystem::create_directories(*options_.cache_dir);
}

WeightSpace& DCBEngine::space(const Weight& nu) {
  auto it = spaces_.find(nu);
  if (it == spaces_.end()) it = spaces_.emplace(nu, std::make_unique<WeightSpace>(table_, nu)).first;
  return *it->second;
}

bool DCBEngine::materializable(const Weight& nu) const { return word_space_size(nu) <= options_.full_limit; }

const ShuffleElement& DCBEngine::dual_pbw(const MVector& m) {
  auto it = pbw_cache_.find(m);
  if (it != pbw_cache_.end()) return it->second;
  if (!materializable(m.weight(table_->order()))) {
    throw Error(ErrorKind::BudgetExceeded, "weight space of E*" + m.to_string() + " is too large to materialize");
  }
  return pbw_cache_.emplace(m, table_->dual_pbw(m)).first->second;
}

DCBEngine::Data DCBEngine::compute(const MVector& m) {
  WeightSpace& sp = space(m.weight(table_->order()));
  const std::size_t i0 = sp.index_of(m);
  Data d;
  d.proj = sp.pbw_row(i0);
  d.pbw.emplace(m, LaurentPoly(1));
  if (!d.proj[i0].is_bar_invariant()) {
    throw Error(ErrorKind::TriangularityViolation,
                "leading coefficient of E*" + m.to_string() + " is not bar-invariant: " + d.proj[i0].to_string());
  }
  for (std::size_t j = i0 + 1; j < sp.dimension(); ++j) {
    const LaurentPoly diff = d.proj[j].bar() - d.proj[j];
    if (diff.is_zero()) continue;
    const std::vector<LaurentPoly>& row = sp.pbw_row(j);
    auto rho = LaurentPoly::divide_exact(diff, row[j]);
    if (!rho || !rho->is_bar_antisymmetric()) {
      throw Error(ErrorKind::NonConvergence, "correction for b" + m.to_string() + " at E*" +
                                                 sp.partitions()[j].to_string() + " is not solvable: " +
                                                 diff.to_string() + " over " + row[j].to_string());
    }
    const LaurentPoly c = kl_solve(*rho);
    for (std::size_t k = j; k < sp.dimension(); ++k) {
      if (!row[k].is_zero()) d.proj[k].add_product(c, row[k]);
    }
    d.pbw.emplace(sp.partitions()[j], c);
  }
  return d;
}

void DCBEngine::verify(const MVector& m, const Data& d) {
  for (const LaurentPoly& c : d.proj) {
    if (!c.is_bar_invariant()) {
      throw Error(ErrorKind::NonConvergence, "b" + m.to_string() + " is not Theta-fixed on good words");
    }
  }
  if (!congruent_to_pbw(d.pbw, m)) {
    throw Error(ErrorKind::NonConvergence, "b" + m.to_string() + " is not congruent to E*" + m.to_string());
  }
}

void DCBEngine::verify_full(const MVector& m, const Data& d) {
  const Weight nu = m.weight(table_->order());
  if (!options_.verify_full || word_space_size(nu) > 20000) return;
  ShuffleElement e(table_->cartan_ptr());
  for (const auto& [p, c] : d.pbw) e += c * dual_pbw(p);
  if (theta(e) != e) throw Error(ErrorKind::NonConvergence, "b" + m.to_string() + " is not Theta-fixed");
  const Expansion back = table_->expand_on_pbw(e);
  if (back != d.pbw || !congruent_to_pbw(back, m)) {
    throw Error(ErrorKind::NonConvergence, "b" + m.to_string() + " fails the congruence check");
  }
  // Theta(E*(m)) must be unitriangular with respect to good words.
  const Expansion th = table_->expand_on_pbw(theta(dual_pbw(m)));
  const Word gm = table_->good_word(m);
  for (const auto& [p, c] : th) {
    if (p == m ? c != LaurentPoly(1) : table_->good_word(p) >= gm) {
      throw Error(ErrorKind::TriangularityViolation,
                  "Theta(E*" + m.to_string() + ") has coefficient " + c.to_string() + " on E*" + p.to_string());
    }
  }
  elements_.emplace(m, std::move(e));
}

const DCBEngine::Data& DCBEngine::data(const MVector& m) {
  auto it = data_.find(m);
  if (it != data_.end()) return it->second;
  if (m.size() != table_->size()) throw Error(ErrorKind::InvalidArgument, "m-vector length mismatch");
  std::optional<Data> d = load(m);
  if (!d) {
    d = compute(m);
    verify(m, *d);
    verify_full(m, *d);
    store(m, *d);
  }
  return data_.emplace(m, std::move(*d)).first->second;
}

const Expansion& DCBEngine::pbw_coordinates(const MVector& m) { return data(m).pbw; }

const std::vector<LaurentPoly>& DCBEngine::projection(const MVector& m) { return data(m).proj; }

Provenance DCBEngine::provenance(const MVector& m) { return data(m).provenance; }

const ShuffleElement& DCBEngine::element(const MVector& m) {
  const Data& d = data(m);
  auto it = elements_.find(m);
  if (it != elements_.end()) return it->second;
  ShuffleElement e(table_->cartan_ptr());
  for (const auto& [p, c] : d.pbw) e += c * dual_pbw(p);
  return elements_.emplace(m, std::move(e)).first->second;
}

DCBRecord DCBEngine::record(const MVector& m) {
  DCBRecord r;
  r.mvector = m;
  r.pbw = pbw_coordinates(m);
  r.provenance = provenance(m);
  const std::vector<LaurentPoly>& proj = projection(m);
  r.theta_fixed = std::all_of(proj.begin(), proj.end(), [](const LaurentPoly& c) { return c.is_bar_invariant(); });
  if (materializable(m.weight(table_->order()))) {
    r.element = element(m);
    r.theta_fixed = r.theta_fixed && theta(r.element) == r.element;
  } else {
    r.element = ShuffleElement(table_->cartan_ptr());
  }
  return r;
}

Expansion DCBEngine::expand_projection(const Weight& nu, std::vector<LaurentPoly> coords) {
  WeightSpace& sp = space(nu);
  if (coords.size() != sp.dimension()) throw Error(ErrorKind::InvalidArgument, "projection has wrong length");
  Expansion out;
  for (std::size_t i = 0; i < sp.dimension(); ++i) {
    if (coords[i].is_zero()) continue;
    const MVector p = sp.partitions()[i];
    const std::vector<LaurentPoly>& bp = projection(p);
    auto c = LaurentPoly::divide_exact(coords[i], bp[i]);
    if (!c) {
      throw Error(ErrorKind::NotInSpan, "coefficient " + coords[i].to_string() + " on " + format_word(sp.good_words()[i]) +
                                            " is not divisible by " + bp[i].to_string());
    }
    for (std::size_t k = i; k < sp.dimension(); ++k) {
      if (!bp[k].is_zero()) coords[k].add_product(-*c, bp[k]);
    }
    out.emplace(p, std::move(*c));
  }
  return out;
}

Expansion DCBEngine::expand(const ShuffleElement& x) {
  if (x.is_zero()) return {};
  const Weight nu = x.weight();
  const Word lead = x.leading_word();
  if (!table_->is_good_word(lead)) throw Error(ErrorKind::NotInSpan, "leading word " + format_word(lead) + " is not good");
  WeightSpace& sp = space(nu);
  Expansion out = expand_projection(nu, sp.projector().restrict(x));
  if (options_.verify_full && materializable(nu)) {
    ShuffleElement back(table_->cartan_ptr());
    for (const auto& [p, c] : out) back += c * element(p);
    if (back != x) throw Error(ErrorKind::NotInSpan, "element is not in the span of the dual canonical basis");
  }
  return out;
}

std::vector<LaurentPoly> DCBEngine::product_projection(const MVector& a, const MVector& b) {
  const Weight nu = a.weight(table_->order()) + b.weight(table_->order());
  const ProductProjector& proj = space(nu).projector();
  if (materializable(a.weight(table_->order())) && materializable(b.weight(table_->order()))) {
    const ShuffleElement& x = element(a);
    const ShuffleElement& y = element(b);
    return proj.project({&x, &y});
  }
  // Expand both sides on the dual PBW basis and project products of root vectors.
  std::vector<LaurentPoly> out(proj.targets().size());
  for (const auto& [p, cp] : pbw_coordinates(a)) {
    for (const auto& [r, cr] : pbw_coordinates(b)) {
      std::vector<const ShuffleElement*> factors = table_->dual_pbw_factors(p);
      const std::vector<const ShuffleElement*> right = table_->dual_pbw_factors(r);
      factors.insert(factors.end(), right.begin(), right.end());
      const int shift = table_->normalization_exponent(p) + table_->normalization_exponent(r);
      const std::vector<LaurentPoly> v = proj.project(factors, shift);
      const LaurentPoly c = cp * cr;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) out[i].add_product(c, v[i]);
      }
    }
  }
  return out;
}

Expansion DCBEngine::expand_product(const MVector& a, const MVector& b) {
  const Weight nu = a.weight(table_->order()) + b.weight(table_->order());
  return expand_projection(nu, product_projection(a, b));
}

std::filesystem::path DCBEngine::cache_path(const MVector& m) const {
  const std::string key = cache_key(*table_, m);
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : key) h = (h ^ c) * 0x100000001b3ULL;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx.json", static_cast<unsigned long long>(h));
  return *options_.cache_dir / buf;
}

void DCBEngine::store(const MVector& m, const Data& d) {
  if (!options_.cache_dir) return;
  Json j;
  j["format"] = kFormatVersion;
  j["engine_version"] = kEngineVersion;
  j["key"] = {{"cartan_type", table_->cartan().name()},
              {"reduced_word", table_->order().reduced_word()},
              {"m", to_json(m)}};
  Json signs = Json::array();
  for (std::size_t k = 0; k < table_->size(); ++k) {
    signs.push_back(table_->bracket_sign(k) == BracketSign::Plus ? "+" : "-");
  }
  j["conventions"] = {{"bracket_signs", signs},
                      {"factor_order", "increasing Lyndon"},
                      {"root_normalization", "lattice primitive"},
                      {"theta", "coefficient bar"}};
  j["pbw"] = to_json(d.pbw);
  if (auto it = elements_.find(m); it != elements_.end()) {
    Json e = to_json(it->second);
    j["cartan_type"] = e["cartan_type"];
    j["words"] = e["words"];
  }
  const auto path = cache_path(m);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
    if (!out) throw Error(ErrorKind::CacheCorrupt, "cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::optional<DCBEngine::Data> DCBEngine::load(const MVector& m) {
  if (!options_.cache_dir) return std::nullopt;
  const auto path = cache_path(m);
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    std::ifstream in(path);
    Json j = Json::parse(in);
    if (j.at("format").get<int>() != kFormatVersion || j.at("engine_version") != kEngineVersion ||
        j.at("key").at("cartan_type") != table_->cartan().name() ||
        j.at("key").at("reduced_word").get<std::vector<int>>() != table_->order().reduced_word() ||
        mvector_from_json(j.at("key").at("m")) != m) {
      throw Error(ErrorKind::CacheCorrupt, "key mismatch");
    }
    Data d;
    d.provenance = Provenance::Cached;
    d.pbw = expansion_from_json(j.at("pbw"));
    if (!congruent_to_pbw(d.pbw, m)) throw Error(ErrorKind::CacheCorrupt, "congruence fails");
    WeightSpace& sp = space(m.weight(table_->order()));
    d.proj.assign(sp.dimension(), LaurentPoly());
    for (const auto& [p, c] : d.pbw) {
      const std::size_t i = sp.index_of(p);
      const std::vector<LaurentPoly>& row = sp.pbw_row(i);
      for (std::size_t k = i; k < sp.dimension(); ++k) {
        if (!row[k].is_zero()) d.proj[k].add_product(c, row[k]);
      }
    }
    for (const LaurentPoly& c : d.proj) {
      if (!c.is_bar_invariant()) throw Error(ErrorKind::CacheCorrupt, "not Theta-fixed");
    }
    if (j.contains("words")) {
      ShuffleElement e = element_from_json(j, table_->cartan_ptr());
      if (e.bar() != e) throw Error(ErrorKind::CacheCorrupt, "stored element is not Theta-fixed");
      if (materializable(m.weight(table_->order()))) {
        ShuffleElement expect(table_->cartan_ptr());
        for (const auto& [p, c] : d.pbw) expect += c * dual_pbw(p);
        if (expect != e) throw Error(ErrorKind::CacheCorrupt, "stored element disagrees with its coordinates");
      }
      elements_.emplace(m, std::move(e));
    }
    return d;
  } catch (const std::exception& ex) {
    ++cache_rejections_;
    last_cache_error_ = ex.what();
    return std::nullopt;
  }
}

}  // namespace qshuffle
