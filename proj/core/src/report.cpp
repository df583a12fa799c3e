#include "bidisk/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bidisk {

const char* to_string(Command command) {
  switch (command) {
    case Command::Analyze: return "analyze";
    case Command::Verify: return "verify";
    case Command::Classes: return "classes";
    case Command::Commutant: return "commutant";
  }
  return "?";
}

const char* to_string(Format format) { return format == Format::Json ? "json" : "text"; }

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

std::string to_string(const IntRange& range) {
  if (range.lo == range.hi) return std::to_string(range.lo);
  return std::to_string(range.lo) + ".." + std::to_string(range.hi);
}

void validate(const RunConfig& cfg) {
  for (const IntRange& r : {cfg.k, cfg.l}) {
    if (r.lo < 1) throw std::invalid_argument("k and l must be at least 1");
    if (r.hi < r.lo) throw std::invalid_argument("range " + to_string(r) + " is reversed");
  }
  if (cfg.safe_grade < 2) throw std::invalid_argument("safe-grade must be at least 2");
  if (cfg.max_grade < cfg.safe_grade + 2) {
    throw std::invalid_argument("max-grade must be at least safe-grade + 2");
  }
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (cfg.fault && *cfg.fault != "adjoint") {
    throw std::invalid_argument("unknown fault '" + *cfg.fault + "'");
  }
}

// --- serialization -------------------------------------------------------

Json to_json(const RunConfig& cfg) {
  Json j;
  j["command"] = to_string(cfg.command);
  j["k"] = to_string(cfg.k);
  j["l"] = to_string(cfg.l);
  j["max_grade"] = cfg.max_grade;
  j["safe_grade"] = cfg.safe_grade;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  j["format"] = to_string(cfg.format);
  j["commutant"] = cfg.commutant;
  if (cfg.fault) j["fault"] = *cfg.fault;
  return j;
}

Json to_json(const SparseVector& f) {
  // Keys are "i,j" exponents of z^i w^j.
  Json j = Json::object();
  for (const auto& [x, c] : f.terms()) {
    j[std::to_string(x.i) + "," + std::to_string(x.j)] = to_string(c);
  }
  return j;
}

namespace {

Json label_json(const SubspaceLabel& label) {
  Json j;
  j["name"] = to_string(label);
  j["kind"] = to_string(label.kind);
  j["cell"] = {label.a, label.b};
  if (label.kind == SubspaceKind::Er) j["grade"] = label.r;
  return j;
}

Json cell_json(const Cell& c) { return Json::array({c.a, c.b}); }

}  // namespace

Json to_json(const Subspace& M) {
  Json j;
  j["label"] = M.label() ? Json(to_string(*M.label())) : Json(nullptr);
  j["dimension"] = M.dimension();
  j["basis"] = Json::array();
  for (const SparseVector& v : M.basis()) j["basis"].push_back(to_json(v));
  return j;
}

Json to_json(const StructureReport& r) {
  Json j;
  j["k"] = r.k;
  j["l"] = r.l;
  j["delta"] = r.delta;
  j["minimal_subspaces"] = Json::array();
  for (const MinimalEntry& e : r.minimal_subspaces) {
    Json entry = label_json(e.label);
    entry["paired_with"] = e.paired_with ? cell_json(*e.paired_with) : Json(nullptr);
    j["minimal_subspaces"].push_back(std::move(entry));
  }
  j["pairs"] = Json::array();
  for (const auto& [c1, c2] : r.pairs) j["pairs"].push_back({cell_json(c1), cell_json(c2)});
  j["m"] = r.m;
  j["m_prime"] = r.m_prime;
  j["dim_predicted"] = r.dim_predicted;
  j["dim_measured"] = r.dim_measured ? Json(*r.dim_measured) : Json(nullptr);
  j["minimal_count"] = r.minimal_count;
  j["abelian"] = r.abelian;
  return j;
}

Json to_json(const LemmaReport& r) {
  Json j;
  j["range_bound"] = r.range_bound;
  j["all_passed"] = r.all_passed();
  j["checks"] = Json::array();
  for (const LemmaCheck& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["statement"] = c.statement;
    cj["passed"] = c.passed;
    cj["cases"] = c.cases;
    cj["counterexamples"] = Json::array();
    for (const Counterexample& ce : c.counterexamples) {
      Json pts = Json::array();
      for (const auto& [n, m] : ce.points) pts.push_back({n, m});
      cj["counterexamples"].push_back({{"cell", {ce.a, ce.b}}, {"points", pts}, {"note", ce.note}});
    }
    j["checks"].push_back(std::move(cj));
  }
  return j;
}

Json to_json(const NullityResult& r) {
  Json j;
  j["nullity"] = r.nullity;
  j["unknowns"] = r.unknowns;
  j["equations"] = r.equations;
  j["max_null_sv"] = r.max_null_sv;
  j["min_kept_sv"] = r.min_kept_sv;
  // JSON has no infinity; an exactly zero null group serializes as null.
  j["gap_ratio"] = std::isfinite(r.gap_ratio) ? Json(r.gap_ratio) : Json(nullptr);
  j["clean_gap"] = r.clean_gap;
  j["smallest_singular_values"] = r.smallest;
  return j;
}

// --- checks ---------------------------------------------------------------

namespace {

constexpr std::size_t kMaxFailures = 5;

class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, Json failure) {
    ++cases_;
    if (ok) return;
    passed_ = false;
    if (failures_.size() < kMaxFailures) failures_.push_back(std::move(failure));
  }
  void fail(Json failure) { expect(false, std::move(failure)); }
  bool passed() const { return passed_; }

  Json to_json() const {
    Json j;
    j["name"] = name_;
    j["passed"] = passed_;
    j["cases"] = cases_;
    j["failures"] = failures_;
    return j;
  }

 private:
  std::string name_;
  bool passed_ = true;
  std::size_t cases_ = 0;
  Json failures_ = Json::array();
};

Json monomial_json(const MonomialIndex& x) {
  return {{"cell", {x.a, x.b}}, {"n", x.n}, {"m", x.m}};
}

std::vector<std::pair<int, int>> instances(const RunConfig& cfg) {
  std::vector<std::pair<int, int>> out;
  for (int k = cfg.k.lo; k <= cfg.k.hi; ++k) {
    for (int l = cfg.l.lo; l <= cfg.l.hi; ++l) out.emplace_back(k, l);
  }
  return out;
}

Window window_of(const RunConfig& cfg) { return make_window(cfg.max_grade, cfg.safe_grade); }

Json document(const RunConfig& cfg, Json results) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["config"] = to_json(cfg);
  doc["results"] = std::move(results);
  return doc;
}

Check count_check(const Context& ctx) {
  Check check("structure_counts");
  const StructureReport r = structure_report(ctx);
  const int kl = ctx.k() * ctx.l();
  const int d = ctx.delta();
  auto expect = [&](const char* what, int got, int want) {
    check.expect(got == want, {{"quantity", what}, {"got", got}, {"expected", want}});
  };
  expect("m", r.m, (d * d - d) / 2);
  expect("m_prime", r.m_prime, kl - d * d + 2 * d);
  expect("dim_predicted", r.dim_predicted, kl + d * d);
  expect("minimal_count", r.minimal_count, kl + d);
  check.expect(r.abelian == (d == 1), {{"quantity", "abelian"}, {"got", r.abelian}});
  return check;
}

Check eigenvalue_check(const Context& ctx, const Window& w) {
  Check check("eigenvalue_consistency");
  for (const MonomialIndex& x : window_basis(ctx, w)) {
    const SparseVector e = SparseVector::monomial(x, w);
    check.expect(apply(ctx, OpTag::T, e) == e * lambda_of(ctx, x), monomial_json(x));
  }
  return check;
}

Check commutator_check(const Context& ctx, const Window& w) {
  Check check("commutator_identity");
  for (const MonomialIndex& x : window_basis(ctx, make_window(w.max_grade - 2))) {
    const SparseVector e = SparseVector::monomial(x, w);
    const SparseVector lhs = apply(ctx, OpTag::MpStar, apply(ctx, OpTag::Mp, e)) -
                             apply(ctx, OpTag::Mp, apply(ctx, OpTag::MpStar, e));
    check.expect(lhs == apply(ctx, OpTag::T, e), monomial_json(x));
  }
  return check;
}

Check adjoint_check(const Context& ctx, const Window& w, bool corrupt) {
  Check check("adjoint_identity");
  auto star = [&](const SparseVector& f) {
    SparseVector out = apply(ctx, OpTag::MpStar, f);
    if (corrupt && !out.is_zero()) {
      const auto& [x, c] = *out.terms().begin();
      out.set(x, c * 2);
    }
    return out;
  };
  // <Mp x, y> = <x, Mp* y> on monomials x below the top grade and every y
  // reached by Mp from x; and the same with the roles swapped.
  for (const MonomialIndex& x : window_basis(ctx, make_window(w.max_grade - 1))) {
    const SparseVector e = SparseVector::monomial(x, w);
    const SparseVector up = apply(ctx, OpTag::Mp, e);
    for (const auto& [y, c] : up.terms()) {
      const SparseVector f = SparseVector::monomial(y, w);
      check.expect(inner_product(up, f) == inner_product(e, star(f)),
                   {{"x", monomial_json(x)}, {"y", monomial_json(y)}});
    }
    const SparseVector down = star(e);
    for (const auto& [y, c] : down.terms()) {
      const SparseVector f = SparseVector::monomial(y, w);
      check.expect(inner_product(down, f) == inner_product(e, apply(ctx, OpTag::Mp, f)),
                   {{"x", monomial_json(x)}, {"y", monomial_json(y)}});
    }
  }
  return check;
}

Check grading_check(const Context& ctx, const Window& w) {
  Check check("grading_step");
  for (const Cell& c : ctx.cells()) {
    for (int r = 1; r + 1 <= w.max_grade; ++r) {
      check.expect(grading_step_holds(ctx, c.a, c.b, r, w), {{"cell", {c.a, c.b}}, {"r", r}});
    }
  }
  return check;
}

Check decomposition_check(const Context& ctx, const Window& w) {
  Check check("decomposition");
  std::size_t total = 0;
  for (const Cell& c : ctx.cells()) {
    const Subspace L = canonical_subspace(ctx, {SubspaceKind::L, c.a, c.b, 0}, w);
    total += L.dimension();
    if (c.kind != CellKind::Omega2) continue;
    const Subspace plus = canonical_subspace(ctx, {SubspaceKind::Mplus, c.a, c.b, 0}, w);
    const Subspace minus = canonical_subspace(ctx, {SubspaceKind::Mminus, c.a, c.b, 0}, w);
    std::vector<SparseVector> both = plus.basis();
    both.insert(both.end(), minus.basis().begin(), minus.basis().end());
    bool orthogonal = true;
    for (const SparseVector& u : plus.basis()) {
      for (const SparseVector& v : minus.basis()) orthogonal = orthogonal && sgn(inner_product(u, v)) == 0;
    }
    check.expect(orthogonal && plus.dimension() + minus.dimension() == L.dimension() &&
                     same_span(both, L.basis()),
                 {{"cell", {c.a, c.b}}, {"split", "Mplus + Mminus != L"}});
  }
  const std::size_t window_dim = window_basis(ctx, w).size();
  check.expect(total == window_dim, {{"sum_of_cells", total}, {"window", window_dim}});
  return check;
}

struct MinimalSet {
  std::vector<SubspaceLabel> labels;
  std::vector<Subspace> spaces;
};

MinimalSet minimal_set(const Context& ctx, const Window& w) {
  MinimalSet out;
  out.labels = minimal_labels(ctx);
  for (const SubspaceLabel& label : out.labels) out.spaces.push_back(canonical_subspace(ctx, label, w));
  return out;
}

Check generation_check(const Context& ctx, const Window& w, const MinimalSet& mins) {
  Check check("generation");
  for (std::size_t i = 0; i < mins.labels.size(); ++i) {
    const SubspaceLabel& label = mins.labels[i];
    const SparseVector g = wandering_generator(ctx, label, w);
    const Subspace G = generate_reducing(ctx, g, w);
    check.expect(agree_up_to_grade(G, mins.spaces[i], w.safe_grade),
                 {{"subspace", to_string(label)}, {"generator", to_json(g)}});
  }
  for (const Cell& c : ctx.cells()) {
    const Subspace L = canonical_subspace(ctx, {SubspaceKind::L, c.a, c.b, 0}, w);
    for (int r = 1; r <= w.safe_grade; ++r) {
      std::vector<SparseVector> slice;
      for (const MonomialIndex& x : grade_slice(ctx, c.a, c.b, r)) {
        slice.push_back(SparseVector::monomial(x, w));
      }
      check.expect(agree_up_to_grade(generate_reducing(ctx, slice, w), L, w.safe_grade),
                   {{"cell", {c.a, c.b}}, {"slice", r}});
    }
  }
  return check;
}

Check minimality_check(const Context& ctx, const Window& w, const MinimalSet& mins,
                       const RunConfig& cfg) {
  Check check("minimality");
  for (std::size_t i = 0; i < mins.labels.size(); ++i) {
    const Subspace& M = mins.spaces[i];
    if (!projection_commutes(ctx, M, w)) {
      check.fail({{"subspace", to_string(mins.labels[i])}, {"reason", "not reducing"}});
      continue;
    }
    const MinimalityResult r = minimality_test(ctx, M, w, cfg.trials, cfg.seed);
    Json failure = {{"subspace", to_string(mins.labels[i])}};
    if (r.witness) {
      failure["witness"] = to_json(*r.witness);
      failure["witness_dimension"] = r.witness_dimension;
      failure["target_dimension"] = r.target_dimension;
    }
    check.expect(r.minimal, std::move(failure));
  }
  return check;
}

Check wandering_check(const Context& ctx, const Window& w, const MinimalSet& mins) {
  Check check("wandering_space");
  for (std::size_t i = 0; i < mins.labels.size(); ++i) {
    const Subspace& M = mins.spaces[i];
    const Subspace W = wandering_space(ctx, M, w);
    const std::vector<SparseVector> expected{wandering_generator(ctx, mins.labels[i], w)};
    check.expect(W.dimension() == 1 && same_span(W.basis(), expected),
                 {{"subspace", to_string(mins.labels[i])}, {"wandering", to_json(W)}});
    if (W.empty()) continue;
    check.expect(agree_up_to_grade(generate_reducing(ctx, W.basis(), w), M, w.safe_grade),
                 {{"subspace", to_string(mins.labels[i])}, {"reason", "[M - S(p)M] != M"}});
  }
  return check;
}

Check stabilization_check(const Context& ctx, const Window& w, const MinimalSet& mins) {
  Check check("word_bound_stabilization");
  const int bound = default_word_bound(w);
  for (std::size_t i = 0; i < mins.labels.size(); ++i) {
    const std::size_t at = restrict_to_grade(s_p_span(ctx, mins.spaces[i], w, bound), w.safe_grade).size();
    const std::size_t beyond =
        restrict_to_grade(s_p_span(ctx, mins.spaces[i], w, bound + 2), w.safe_grade).size();
    check.expect(at == beyond, {{"subspace", to_string(mins.labels[i])},
                                {"dimension", at},
                                {"dimension_longer_words", beyond}});
  }
  return check;
}

Check equivalence_check(const Context& ctx, const Window& w, const MinimalSet& mins, double tol) {
  Check check("unitary_equivalence");
  for (const auto& [c1, c2] : mirrored_pairs(ctx)) {
    check.expect(swap_unitary_check(ctx, c1, c2, w),
                 {{"pair", {cell_json(c1), cell_json(c2)}}, {"reason", "swap does not intertwine"}});
  }
  const auto matrix = intertwiner_matrix(ctx, mins.spaces, w, tol);
  for (std::size_t i = 0; i < mins.labels.size(); ++i) {
    for (std::size_t j = 0; j < mins.labels.size(); ++j) {
      const SubspaceLabel& a = mins.labels[i];
      const SubspaceLabel& b = mins.labels[j];
      bool equivalent = i == j;
      if (a.kind == SubspaceKind::L && b.kind == SubspaceKind::L && i != j) {
        const auto partner = partner_cell(ctx, ctx.cell(a.a, a.b));
        equivalent = partner && partner->a == b.a && partner->b == b.b;
      }
      const NullityResult& r = matrix[i][j];
      check.expect(r.nullity == (equivalent ? 1U : 0U) && r.clean_gap,
                   {{"from", to_string(a)},
                    {"to", to_string(b)},
                    {"expected", equivalent ? 1 : 0},
                    {"measured", to_json(r)}});
    }
  }
  return check;
}

Check commutant_check(const Context& ctx, const Window& w, double tol) {
  Check check("commutant_dimension");
  const int predicted = ctx.k() * ctx.l() + ctx.delta() * ctx.delta();
  const NullityResult r = commutant_dimension(ctx, w, tol);
  check.expect(static_cast<int>(r.nullity) == predicted && r.clean_gap,
               {{"expected", predicted}, {"measured", to_json(r)}});
  return check;
}

}  // namespace

// --- commands -------------------------------------------------------------

RunResult run_verify(const RunConfig& cfg) {
  validate(cfg);
  const Window w = window_of(cfg);
  RunResult out;
  Json results = Json::array();
  bool all = true;
  for (const auto& [k, l] : instances(cfg)) {
    const Context ctx = build_context(k, l);
    const MinimalSet mins = minimal_set(ctx, w);
    std::vector<Check> checks;
    checks.push_back(count_check(ctx));

    const LemmaReport lemmas = lemma_suite(ctx, cfg.max_grade);
    Check lemma("lemma_suite");
    for (const LemmaCheck& c : lemmas.checks) {
      lemma.expect(c.passed, {{"lemma", c.name}, {"statement", c.statement}});
    }

    checks.push_back(std::move(lemma));
    checks.push_back(eigenvalue_check(ctx, w));
    checks.push_back(commutator_check(ctx, w));
    checks.push_back(adjoint_check(ctx, w, cfg.fault.has_value()));
    checks.push_back(grading_check(ctx, w));
    checks.push_back(decomposition_check(ctx, w));
    checks.push_back(generation_check(ctx, w, mins));
    checks.push_back(minimality_check(ctx, w, mins, cfg));
    checks.push_back(wandering_check(ctx, w, mins));
    checks.push_back(stabilization_check(ctx, w, mins));
    checks.push_back(equivalence_check(ctx, w, mins, cfg.tol));
    if (cfg.commutant) checks.push_back(commutant_check(ctx, w, cfg.tol));

    Json entry;
    entry["k"] = k;
    entry["l"] = l;
    bool passed = true;
    entry["checks"] = Json::array();
    for (const Check& c : checks) {
      passed = passed && c.passed();
      entry["checks"].push_back(c.to_json());
    }
    entry["lemma_report"] = to_json(lemmas);
    entry["passed"] = passed;
    all = all && passed;
    results.push_back(std::move(entry));
  }
  out.document = document(cfg, std::move(results));
  out.document["passed"] = all;
  out.exit_code = all ? 0 : 1;
  return out;
}

RunResult run_analyze(const RunConfig& cfg) {
  validate(cfg);
  const Window w = window_of(cfg);
  Json results = Json::array();
  for (const auto& [k, l] : instances(cfg)) {
    const Context ctx = build_context(k, l);
    StructureReport report = structure_report(ctx);
    Json entry;
    entry["k"] = k;
    entry["l"] = l;
    if (cfg.commutant) {
      const NullityResult r = commutant_dimension(ctx, w, cfg.tol);
      report.dim_measured = static_cast<int>(r.nullity);
      entry["commutant"] = to_json(r);
    }
    entry["structure"] = to_json(report);

    Json inventory = Json::array();
    for (const SubspaceLabel& label : minimal_labels(ctx)) {
      const Subspace M = canonical_subspace(ctx, label, w);
      const Subspace W = wandering_space(ctx, M, w);
      Json item = label_json(label);
      item["dimension_safe"] = restrict_to_grade(M, w.safe_grade).size();
      item["wandering"] = Json::array();
      for (const SparseVector& v : W.basis()) item["wandering"].push_back(to_json(v));
      inventory.push_back(std::move(item));
    }
    entry["minimal_subspaces"] = std::move(inventory);

    const auto classes = partition_window(ctx, w);
    std::size_t nontrivial = 0;
    std::size_t largest = 0;
    std::size_t complete = 0;
    for (const EquivalenceClass& c : classes) {
      if (c.members.size() > 1) ++nontrivial;
      largest = std::max(largest, c.members.size());
      if (c.complete) ++complete;
    }
    entry["partition"] = {{"window_dimension", window_basis(ctx, w).size()},
                          {"classes", classes.size()},
                          {"nontrivial_classes", nontrivial},
                          {"largest_class", largest},
                          {"complete_classes", complete}};
    results.push_back(std::move(entry));
  }
  return {document(cfg, std::move(results)), 0};
}

RunResult run_classes(const RunConfig& cfg) {
  validate(cfg);
  const Window w = window_of(cfg);
  Json results = Json::array();
  for (const auto& [k, l] : instances(cfg)) {
    const Context ctx = build_context(k, l);
    Json classes = Json::array();
    for (const EquivalenceClass& c : partition_window(ctx, w)) {
      Json members = Json::array();
      for (const MonomialIndex& x : c.members) members.push_back({x.a, x.b, x.n, x.m});
      classes.push_back({{"lambda", to_string(c.lambda)},
                         {"size", c.members.size()},
                         {"complete", c.complete},
                         {"members", std::move(members)}});
    }
    results.push_back({{"k", k}, {"l", l}, {"classes", std::move(classes)}});
  }
  return {document(cfg, std::move(results)), 0};
}

RunResult run_commutant(const RunConfig& cfg) {
  validate(cfg);
  const Window w = window_of(cfg);
  Json results = Json::array();
  for (const auto& [k, l] : instances(cfg)) {
    const Context ctx = build_context(k, l);
    const NullityResult r = commutant_dimension(ctx, w, cfg.tol);
    const int predicted = k * l + ctx.delta() * ctx.delta();
    results.push_back({{"k", k},
                       {"l", l},
                       {"dim_predicted", predicted},
                       {"dim_measured", r.nullity},
                       {"matches", static_cast<int>(r.nullity) == predicted},
                       {"diagnostics", to_json(r)}});
  }
  return {document(cfg, std::move(results)), 0};
}

RunResult run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Analyze: return run_analyze(cfg);
    case Command::Verify: return run_verify(cfg);
    case Command::Classes: return run_classes(cfg);
    case Command::Commutant: return run_commutant(cfg);
  }
  throw std::invalid_argument("unknown command");
}

// --- rendering ------------------------------------------------------------

namespace {

bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& e : j) {
    if (!scalar(e) && !flat_array(e)) return false;
  }
  return true;
}

std::string inline_value(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render_text(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (scalar(value) || flat_array(value)) {
        os << pad << key << ": " << inline_value(value) << '\n';
      } else if (value.empty()) {
        os << pad << key << ": " << (value.is_array() ? "[]" : "{}") << '\n';
      } else {
        os << pad << key << ":\n";
        render_text(os, value, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const Json& e : j) {
      if (scalar(e) || flat_array(e)) {
        os << pad << "- " << inline_value(e) << '\n';
      } else {
        os << pad << "-\n";
        render_text(os, e, depth + 1);
      }
    }
  } else {
    os << pad << inline_value(j) << '\n';
  }
}

}  // namespace

std::string render(const Json& doc, Format format) {
  if (format == Format::Json) return doc.dump(2) + "\n";
  std::ostringstream os;
  render_text(os, doc, 0);
  return os.str();
}

}  // namespace bidisk
