#include "vhs_cli/cli.hpp"

#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "vhs/acceptance/acceptance.hpp"
#include "vhs/chern/chern.hpp"
#include "vhs/error.hpp"
#include "vhs/exact/random.hpp"
#include "vhs/flag/derived_flag.hpp"
#include "vhs/hodge/graded_lie.hpp"
#include "vhs/integral/integral_element.hpp"
#include "vhs/jacobian/hypersurface.hpp"
#include "vhs/nl/noether_lefschetz.hpp"

namespace vhs::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kHodgeCommands{"domain-info", "derived-flag", "integral", "chern-verify", "nl-bound"};
const std::set<std::string> kCommands{"domain-info", "derived-flag", "integral", "chern-verify",
                                      "nl-bound",    "jacobian",     "selftest"};
const std::map<std::string, std::set<std::string>> kSubcommands{
    {"integral", {"check", "construct", "cartan"}},
    {"jacobian", {"smoothness", "hodge", "pairing", "tp-codim", "nl-pipeline", "symmetrizer", "write"}},
};
const std::set<std::string> kParamKeys{"element.method", "element.dim",    "element.lambda", "element.mu",
                                       "element.vectors", "nl.zeta",       "nl.x",           "nl.c",
                                       "jacobian.k",     "selftest.only"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::uint64_t parse_count(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ConfigError(key + ": expected a non-negative integer, got '" + text + "'");
  try {
    return std::stoull(t);
  } catch (const std::out_of_range&) {
    throw ConfigError(key + ": value out of range");
  }
}

std::vector<std::string> split_list(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    std::istringstream words(cur);
    std::string w;
    while (words >> w) out.push_back(w);
  }
  return out;
}

std::vector<std::size_t> parse_counts(const std::string& key, const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& w : split_list(text)) out.push_back(parse_count(key, w));
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

Scalar parse_scalar(const std::string& key, const std::string& text) {
  try {
    Scalar q(text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ConfigError(key + ": bad rational '" + text + "'");
  }
}

std::vector<Scalar> parse_scalars(const std::string& key, const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& w : split_list(text)) out.push_back(parse_scalar(key, w));
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

/// Rows separated by ';', entries by ',' or spaces.
std::vector<Vec> parse_rows(const std::string& key, const std::string& text) {
  std::vector<Vec> rows;
  std::istringstream in(text);
  std::string row;
  while (std::getline(in, row, ';')) {
    if (trim(row).empty()) continue;
    rows.push_back(parse_scalars(key, row));
  }
  if (rows.empty()) throw ConfigError(key + ": no rows");
  return rows;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ConfigError(key + ": expected true or false");
}

std::string param(const RunConfig& cfg, const std::string& key, const std::string& fallback = "") {
  const auto it = cfg.params.find(key);
  return it == cfg.params.end() ? fallback : it->second;
}

bool has_param(const RunConfig& cfg, const std::string& key) { return cfg.params.count(key) > 0; }

json to_json(const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
  return s.get_str();
}

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const std::vector<Vec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

/// Result values with the operations that produced them, plus named pass/fail checks.
class Report {
 public:
  void put(const std::string& key, json value, std::vector<std::string> ops) {
    result_[key] = std::move(value);
    trace_[key] = std::move(ops);
  }
  void check(const std::string& name, bool ok) {
    checks_[name] = ok;
    pass_ = pass_ && ok;
  }
  bool pass() const { return pass_; }
  json finish(json head) const {
    head["result"] = result_;
    head["trace"] = trace_;
    head["checks"] = checks_;
    head["pass"] = pass_;
    return head;
  }

 private:
  json result_ = json::object();
  json trace_ = json::object();
  json checks_ = json::object();
  bool pass_ = true;
};

HodgeNumbers hodge_of(const RunConfig& cfg) {
  const auto& h = cfg.hodge->h;
  return HodgeNumbers(static_cast<int>(h.size()) - 1, h);
}

MiddleForm form_of(const RunConfig& cfg) {
  const std::string& f = cfg.hodge->form;
  if (f == "diagonal") return MiddleForm::Diagonal;
  if (f == "split") return MiddleForm::Split;
  throw ConfigError("hodge.form: expected diagonal or split, got '" + f + "'");
}

json subject_json(const RunConfig& cfg) {
  json s = json::object();
  if (cfg.hodge) {
    s["hodge"] = {{"h", cfg.hodge->h}, {"n", cfg.hodge->h.size() - 1}, {"form", cfg.hodge->form}};
  }
  if (cfg.fixture) {
    const auto& f = *cfg.fixture;
    s["fixture"] = {{"kind", f.kind}, {"n", f.n}, {"d", f.d}, {"seed", f.seed.value_or(cfg.seed)},
                    {"file", f.file}, {"plane", f.with_plane}};
  }
  return s;
}

json head_json(const RunConfig& cfg) {
  json head = json::object();
  head["schema"] = 1;
  head["command"] = cfg.command;
  head["sub"] = cfg.sub;
  head["seed"] = cfg.seed;
  head["subject"] = subject_json(cfg);
  return head;
}

void domain_info(const RunConfig& cfg, Report& rep) {
  const HodgeNumbers h = hodge_of(cfg);
  const GradedLie lie(h, form_of(cfg));
  const std::size_t dim_d = domain_dimension(h);
  json pieces = json::array();
  for (int r = 0; r <= h.weight(); ++r) pieces.push_back(lie.piece_dim(r));
  json f = json::array();
  for (int p = h.weight(); p >= 0; --p) f.push_back(h.f(p));
  rep.put("weight", h.weight(), {"HodgeNumbers"});
  rep.put("dim_D", dim_d, {"domain_dimension"});
  rep.put("piece_dims", pieces, {"GradedLie::piece_dim"});
  rep.put("hodge_filtration_dims", f, {"HodgeNumbers::f"});
  rep.put("nilpotent_dim", lie.nilpotent_dim(), {"GradedLie::nilpotent_dim"});
  rep.put("lie_dim", lie.total_dim(), {"GradedLie::total_dim"});
  rep.check("dim_D equals dim of the nilpotent part", dim_d == lie.nilpotent_dim());
}

void derived_flag_cmd(const RunConfig& cfg, Report& rep) {
  const HodgeNumbers h = hodge_of(cfg);
  const GradedLie lie(h, form_of(cfg));
  const FlagReport f = derived_flag(lie);
  json steps = json::array();
  for (const auto& s : f.steps)
    steps.push_back({{"k", s.k}, {"w_dim", s.w_dim}, {"i_dim", s.i_dim}, {"graded_dims", s.graded_dims}});
  rep.put("rank_I", f.rank_I(), {"derived_flag"});
  rep.put("steps", steps, {"derived_flag"});
  rep.put("stabilized_at", f.stabilized_at, {"derived_flag"});
  rep.put("terminal_dim", f.terminal_dim, {"derived_flag"});
  const auto t = check_flag_theorem(lie, f);
  rep.put("theorem",
          {{"hypothesis", t.hypothesis},
           {"inclusion_holds", t.inclusion_holds},
           {"equality_expected", t.equality_expected},
           {"equality_holds", t.equality_holds},
           {"termination_holds", t.termination_holds},
           {"termination_bound", t.termination_bound},
           {"strict", t.strict},
           {"failure", t.failure}},
          {"check_flag_theorem", "horizontal_subsystem"});
  rep.check("flag theorem", t.pass);
  if (h.weight() == 4) {
    const auto sc = special_cases(lie);
    rep.put("special_cases",
            {{"h40", sc.h40}, {"h22", sc.h22}, {"top_forms_dim", sc.top_forms_dim}, {"failure", sc.failure}},
            {"special_cases"});
    rep.check("weight-four special cases", sc.pass);
  }
}

IntegralElement build_element(const GradedLie& lie, const RunConfig& cfg, std::string& method) {
  method = param(cfg, "element.method");
  if (method.empty()) {
    if (has_param(cfg, "element.vectors")) method = "vectors";
    else if (has_param(cfg, "element.lambda")) method = "normal-form";
    else method = "random";
  }
  if (method == "random") {
    const std::size_t dim = parse_count("element.dim", param(cfg, "element.dim", "2"));
    return random_integral_element(lie, dim, cfg.seed);
  }
  if (method == "normal-form") {
    if (!has_param(cfg, "element.lambda") || !has_param(cfg, "element.mu"))
      throw ConfigError("normal-form needs element.lambda and element.mu");
    return normal_form_w2(lie, parse_scalars("element.lambda", param(cfg, "element.lambda")),
                          parse_scalars("element.mu", param(cfg, "element.mu")));
  }
  if (method == "sharp") return sharp_construction_w2(lie);
  if (method == "vectors") {
    if (!has_param(cfg, "element.vectors")) throw ConfigError("method vectors needs element.vectors");
    return IntegralElement(lie, parse_rows("element.vectors", param(cfg, "element.vectors")));
  }
  throw ConfigError("element.method: unknown method '" + method + "'");
}

void put_element(Report& rep, const IntegralElement& e, const std::string& method) {
  const std::string op = method == "random"        ? "random_integral_element"
                         : method == "normal-form" ? "normal_form_w2"
                         : method == "sharp"       ? "sharp_construction_w2"
                                                   : "IntegralElement";
  rep.put("method", method, {op});
  rep.put("dim", e.dim(), {op});
  rep.put("basis", to_json(e.basis()), {op});
}

void integral_cmd(const RunConfig& cfg, Report& rep) {
  const HodgeNumbers h = hodge_of(cfg);
  const GradedLie lie(h, form_of(cfg));
  if (cfg.sub == "check") {
    if (has_param(cfg, "element.vectors")) {
      const auto vs = parse_rows("element.vectors", param(cfg, "element.vectors"));
      for (const auto& v : vs)
        if (v.size() != lie.piece_dim(1))
          throw ConfigError("element.vectors: rows need " + std::to_string(lie.piece_dim(1)) + " entries");
      const bool ok = is_integral(lie, vs);
      rep.put("vectors", to_json(vs), {"parse"});
      rep.put("integral", ok, {"is_integral"});
      rep.check("vectors span an integral element", ok);
      return;
    }
    SearchOptions opts;
    opts.seed = cfg.seed;
    if (cfg.trials) opts.trials = *cfg.trials;
    const auto s = max_abelian_search(lie, opts);
    rep.put("best_dim", s.best_dim, {"max_abelian_search"});
    rep.put("exhaustive", s.exhaustive, {"max_abelian_search"});
    rep.put("states", s.states, {"max_abelian_search"});
    rep.put("trials", s.trials, {"max_abelian_search"});
    rep.put("witness", to_json(s.witness), {"max_abelian_search"});
    rep.check("witness is integral", is_integral(lie, s.witness));
    if (h.weight() == 2) {
      const std::size_t bound = sharp_bound_w2(h.level_dim(2), h.level_dim(1));
      rep.put("bound", bound, {"sharp_bound_w2"});
      rep.check("best_dim within the weight-two bound", s.best_dim <= bound);
    }
    return;
  }
  std::string method;
  const IntegralElement e = build_element(lie, cfg, method);
  put_element(rep, e, method);
  if (cfg.sub == "construct") {
    const Subspace polar = polar_space(e);
    rep.put("polar_dim", polar.dim(), {"polar_space"});
    rep.put("tangent_codim", tangent_codim(e), {"tangent_codim"});
    rep.check("element is integral", is_integral(lie, e.basis()));
    rep.check("element lies in its polar space", polar.contains(e.span()));
    return;
  }
  const auto c = cartan_test(e, cfg.trials.value_or(8), cfg.seed);
  rep.put("c", c.c, {"cartan_test"});
  rep.put("sum_c", c.sum_c, {"cartan_test"});
  rep.put("tangent_codim", c.tangent_codim, {"cartan_test", "tangent_codim"});
  rep.put("ordinary", c.ordinary, {"cartan_test"});
  rep.put("flags_tried", c.flags_tried, {"cartan_test"});
  rep.check("sum of polar ranks at most the tangent codimension", c.sum_c <= c.tangent_codim);
}

void chern_cmd(const RunConfig& cfg, Report& rep) {
  const GradedLie lie(hodge_of(cfg), form_of(cfg));
  std::string method;
  const IntegralElement e = build_element(lie, cfg, method);
  put_element(rep, e, method);
  const auto c = verify_chern_relations(e);
  const std::vector<std::string> ops{"verify_chern_relations"};
  rep.put("integrable", c.integrable, ops);
  rep.put("theta_identity", c.theta_identity, ops);
  rep.put("rank_vanishing", c.rank_vanishing, ops);
  rep.put("product_vanishing", c.product_vanishing, ops);
  rep.put("direct_product_vanishing", c.direct_product_vanishing, ops);
  rep.put("identities_checked", c.identities_checked, ops);
  rep.put("products_checked", c.products_checked, ops);
  rep.put("failures", c.failures, ops);
  rep.check("curvature relations", c.pass);
}

void nl_bound_cmd(const RunConfig& cfg, Report& rep) {
  const HodgeNumbers h = hodge_of(cfg);
  rep.put("nl_codim", nl_codim(h), {"nl_codim"});
  if (h.weight() != 4 || h.level_dim(4) != 1) return;
  const std::size_t a = h.level_dim(3), b = h.level_dim(2);
  const GradedLie lie(h, form_of(cfg));
  SeededStream rng(cfg.seed);
  Mat x(b, a);
  if (has_param(cfg, "nl.x")) {
    const auto rows = parse_rows("nl.x", param(cfg, "nl.x"));
    if (rows.size() != b || std::any_of(rows.begin(), rows.end(), [&](const Vec& r) { return r.size() != a; }))
      throw ConfigError("nl.x: expected " + std::to_string(b) + " rows of " + std::to_string(a) + " entries");
    x = Mat::from_rows(rows, a);
  } else {
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < a; ++j) x(i, j) = rng.next_int(-2, 2);
  }
  std::vector<Scalar> c;
  if (has_param(cfg, "nl.c")) {
    c = parse_scalars("nl.c", param(cfg, "nl.c"));
  } else {
    for (std::size_t i = 0; i < b; ++i) c.push_back(rng.next_nonzero(3));
  }
  Vec zeta;
  if (has_param(cfg, "nl.zeta")) {
    zeta = parse_scalars("nl.zeta", param(cfg, "nl.zeta"));
  } else {
    zeta.resize(b);
    for (auto& z : zeta) z = rng.next_int(-3, 3);
    if (is_zero(zeta)) zeta[0] = 1;
  }
  const auto e = cy_type_element(lie, x, c);
  const auto r = refined_bound({e, zeta, std::nullopt});
  rep.put("element_dim", e.dim(), {"cy_type_element"});
  rep.put("zeta", to_json(zeta), {"SeededStream"});
  rep.put("codim", r.codim, {"refined_bound", "codim_e_zeta"});
  rep.put("q_rank", r.q_rank ? json(*r.q_rank) : json(nullptr), {"refined_bound", "quadric_q_zeta"});
  rep.put("h_lower", r.h_lower, {"refined_bound"});
  rep.put("sigma", r.sigma, {"refined_bound", "sigma_zeta"});
  rep.put("bound", r.bound, {"refined_bound"});
  rep.put("holds", r.holds, {"refined_bound"});
  rep.put("equality", r.equality, {"refined_bound"});
  rep.check("codim at most h^{1,3} - sigma", r.holds);
  if (r.q_rank) rep.check("codim equals rank Q_zeta", r.codim == *r.q_rank);
}

HypersurfaceFixture build_fixture(const RunConfig& cfg) {
  const FixtureSubject& f = *cfg.fixture;
  const std::uint64_t seed = f.seed.value_or(cfg.seed);
  std::string kind = f.kind;
  if (kind.empty()) kind = !f.file.empty() ? "file" : cfg.sub == "nl-pipeline" || cfg.sub == "tp-codim" ? "plane" : "fermat";
  if (kind == "fermat") return fermat_fixture(f.n, f.d);
  if (kind == "seeded") return seeded_fixture(f.n, f.d, seed);
  if (kind == "plane") {
    if (f.n != 4) throw ConfigError("plane fixtures are fourfolds: fixture.n must be 4");
    return plane_fixture(f.d, seed);
  }
  if (kind == "degenerate-plane") {
    if (f.n != 4) throw ConfigError("plane fixtures are fourfolds: fixture.n must be 4");
    return degenerate_plane_fixture(f.d, seed);
  }
  if (kind == "file") {
    if (f.file.empty()) throw ConfigError("fixture.kind file needs fixture.file");
    std::ifstream in(f.file);
    if (!in) throw ConfigError("cannot open polynomial file '" + f.file + "'");
    return hypersurface_from_poly(read_poly(in), f.with_plane);
  }
  throw ConfigError("fixture.kind: unknown kind '" + kind + "'");
}

json smoothness_json(const SmoothnessReport& s) {
  return {{"pass", s.pass},
          {"complete", s.complete},
          {"socle_degree", s.socle_degree},
          {"checked_up_to", s.checked_up_to},
          {"first_mismatch", s.first_mismatch ? json(*s.first_mismatch) : json(nullptr)},
          {"expected", s.expected},
          {"actual", s.actual}};
}

void jacobian_cmd(const RunConfig& cfg, Report& rep) {
  const HypersurfaceFixture fix = build_fixture(cfg);
  const HypersurfaceRing ring(fix, cfg.budget);
  rep.put("n", ring.n(), {"HypersurfaceRing"});
  rep.put("d", ring.d(), {"HypersurfaceRing"});
  rep.put("terms", fix.F.terms().size(), {"HypersurfaceFixture"});
  if (cfg.sub == "write") {
    rep.put("polynomial", format_poly(fix.F), {"format_poly"});
    return;
  }
  if (cfg.sub == "smoothness") {
    const auto s = smoothness_check(ring);
    rep.put("smoothness", smoothness_json(s), {"smoothness_check", "modular_quotient_dim", "complete_intersection_hilbert"});
    rep.check("Hilbert function matches a complete intersection", s.pass);
    return;
  }
  if (cfg.sub == "hodge") {
    json dims = json::array();
    for (int p = 0; p <= ring.n(); ++p) dims.push_back(hodge_piece_dim(ring, p));
    rep.put("primitive_hodge_dims", dims, {"hodge_piece_dim", "GradedIdeal::quotient_dim"});
    return;
  }
  if (cfg.sub == "pairing") {
    const int socle = ring.socle_degree();
    std::vector<int> ks;
    if (has_param(cfg, "jacobian.k")) {
      ks.push_back(static_cast<int>(parse_count("jacobian.k", param(cfg, "jacobian.k"))));
    } else {
      for (int k = 0; k <= socle; ++k) ks.push_back(k);
    }
    json rows = json::array();
    bool full = true;
    for (int k : ks) {
      const Mat m = macaulay_pairing(ring, k);
      const std::size_t r = rank(m);
      rows.push_back({{"k", k}, {"rows", m.rows()}, {"cols", m.cols()}, {"rank", r}});
      full = full && r == m.rows() && r == m.cols();
    }
    rep.put("socle_degree", socle, {"HypersurfaceRing::socle_degree"});
    rep.put("pairings", rows, {"macaulay_pairing", "rank"});
    rep.check("pairings have full rank", full);
    return;
  }
  if (cfg.sub == "tp-codim") {
    const auto t = t_p_codim(ring);
    rep.put("dim_t", t.dim_t, {"t_p_codim", "GradedIdeal::quotient_dim"});
    rep.put("dim_plane_ideal", t.dim_plane_ideal, {"t_p_codim", "IdealSlice"});
    rep.put("codim_slice", t.via_slice, {"t_p_codim", "IdealSlice"});
    rep.put("codim_restriction", t.via_restriction, {"t_p_codim", "restrict_to_plane", "rank"});
    rep.put("dim_vp", t.dim_vp, {"t_p_codim", "monomial_count"});
    rep.put("dim_gp", t.dim_gp, {"t_p_codim", "IdealSlice"});
    rep.put("koszul", t.koszul, {"t_p_codim"});
    rep.check("both codimension counts agree", t.via_slice == t.via_restriction);
    return;
  }
  if (cfg.sub == "nl-pipeline") {
    const auto p = nl_pipeline(ring);
    const std::vector<std::string> ops{"nl_pipeline"};
    rep.put("smoothness", smoothness_json(p.smoothness), {"nl_pipeline", "smoothness_check"});
    rep.put("regularity",
            {{"regular", p.regularity.regular},
             {"hilbert_match", p.regularity.hilbert_match},
             {"socle_degree", p.regularity.socle_degree},
             {"socle_dim", p.regularity.socle_dim}},
            {"nl_pipeline", "restricted_regularity"});
    rep.put("h40", p.h40, {"nl_pipeline", "hodge_piece_dim"});
    rep.put("h31", p.h31, {"nl_pipeline", "hodge_piece_dim"});
    rep.put("h13", p.h13, {"nl_pipeline", "hodge_piece_dim"});
    rep.put("nl_codim", p.nl_codim, ops);
    rep.put("dim_j_d", p.dim_j_d, {"nl_pipeline", "GradedIdeal::ideal_dim"});
    rep.put("dim_plane_ideal", p.dim_plane_ideal, {"nl_pipeline", "IdealSlice"});
    rep.put("codim_slice", p.codim_slice, {"nl_pipeline", "t_p_codim"});
    rep.put("codim_restriction", p.codim_restriction, {"nl_pipeline", "t_p_codim", "restrict_to_plane"});
    rep.put("rank_q_zeta", p.q_rank ? json(*p.q_rank) : json(nullptr), {"nl_pipeline", "rank_q_zeta", "restricted_pairing"});
    rep.put("dim_vp", p.dim_vp, ops);
    rep.put("dim_gp", p.dim_gp, ops);
    rep.put("sigma", p.sigma, {"nl_pipeline", "GradedIdeal::reduce", "rank"});
    rep.put("bound", p.bound, ops);
    rep.put("holds", p.holds, ops);
    rep.put("equality", p.equality, ops);
    rep.put("failures", p.failures, ops);
    rep.check("pipeline gates", p.failures.empty());
    rep.check("codim at most h^{1,3} - sigma", p.holds);
    return;
  }
  const auto s = symmetrizer_kernel(ring);
  const std::vector<std::string> ops{"symmetrizer_kernel", "symmetrizer", "period_multiplication"};
  rep.put("h20", s.h20, ops);
  rep.put("dim_e", s.dim_e, ops);
  rep.put("h11", s.h11, ops);
  rep.put("equations", s.equations, ops);
  rep.put("kernel_dim", s.kernel_dim, ops);
  rep.put("lower_bound", s.lower_bound, ops);
  rep.put("multiplications_in_kernel", s.multiplications_in_kernel, ops);
  rep.put("multiplication_span", s.multiplication_span, ops);
  rep.check("multiplications lie in the kernel", s.multiplications_in_kernel);
  rep.check("kernel at least dim V^4/J_4", s.kernel_dim >= s.lower_bound);
}

void selftest_cmd(const RunConfig& cfg, Report& rep) {
  std::vector<int> ids;
  if (has_param(cfg, "selftest.only")) {
    const auto known = acceptance_ids();
    for (std::size_t id : parse_counts("selftest.only", param(cfg, "selftest.only"))) {
      if (std::find(known.begin(), known.end(), static_cast<int>(id)) == known.end())
        throw ConfigError("selftest.only: unknown criterion " + std::to_string(id));
      ids.push_back(static_cast<int>(id));
    }
  }
  json rows = json::array();
  for (const auto& r : run_acceptance(ids)) {
    rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"time_limit", r.time_limit}});
    rep.check("criterion " + std::to_string(r.id), r.pass);
  }
  rep.put("criteria", rows, {"run_acceptance"});
}

std::string render_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : " ") + render_value(x);
    return "[" + out + "]";
  }
  return v.dump();
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.message() + " at line " + std::to_string(e.line()));
  }
  if (tree.empty()) throw ConfigError("empty config");
  RunConfig cfg;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("config key '" + section + "' must be inside a section");
    for (const auto& [key, node] : body) {
      const std::string full = section + "." + key;
      const std::string value = trim(node.data());
      if (full == "run.command") cfg.command = value;
      else if (full == "run.sub") cfg.sub = value;
      else if (full == "run.seed") cfg.seed = parse_count(full, value);
      else if (full == "run.trials") cfg.trials = parse_count(full, value);
      else if (full == "run.budget") cfg.budget = parse_count(full, value);
      else if (section == "hodge") {
        if (!cfg.hodge) cfg.hodge.emplace();
        if (key == "h") cfg.hodge->h = parse_counts(full, value);
        else if (key == "form") cfg.hodge->form = value;
        else if (key != "n") throw ConfigError("unknown config key '" + full + "'");
      } else if (section == "fixture") {
        if (!cfg.fixture) cfg.fixture.emplace();
        auto& f = *cfg.fixture;
        if (key == "kind") f.kind = value;
        else if (key == "n") f.n = static_cast<int>(parse_count(full, value));
        else if (key == "d") f.d = static_cast<int>(parse_count(full, value));
        else if (key == "seed") f.seed = parse_count(full, value);
        else if (key == "file") f.file = value;
        else if (key == "plane") f.with_plane = parse_bool(full, value);
        else throw ConfigError("unknown config key '" + full + "'");
      } else if (kParamKeys.count(full)) {
        cfg.params[full] = value;
      } else {
        throw ConfigError("unknown config key '" + full + "'");
      }
    }
  }
  if (cfg.hodge) {
    if (cfg.hodge->h.empty()) throw ConfigError("[hodge] needs h");
    const auto n = tree.get_optional<std::string>("hodge.n");
    if (n && parse_count("hodge.n", *n) + 1 != cfg.hodge->h.size())
      throw ConfigError("hodge.n does not match the length of hodge.h");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in);
}

void validate(const RunConfig& cfg) {
  if (cfg.command.empty()) throw ConfigError("no command given");
  if (!kCommands.count(cfg.command)) throw ConfigError("unknown command '" + cfg.command + "'");
  const auto subs = kSubcommands.find(cfg.command);
  if (subs != kSubcommands.end()) {
    if (cfg.sub.empty()) throw ConfigError(cfg.command + " needs a subcommand");
    if (!subs->second.count(cfg.sub)) throw ConfigError("unknown subcommand '" + cfg.sub + "' for " + cfg.command);
  } else if (!cfg.sub.empty()) {
    throw ConfigError(cfg.command + " takes no subcommand");
  }
  if (cfg.hodge && cfg.fixture) throw ConfigError("give either Hodge numbers or a fixture, not both");
  if (kHodgeCommands.count(cfg.command) && !cfg.hodge) throw ConfigError(cfg.command + " needs Hodge numbers");
  if (cfg.command == "jacobian" && !cfg.fixture) throw ConfigError("jacobian needs a fixture");
  if (cfg.command == "selftest" && (cfg.hodge || cfg.fixture)) throw ConfigError("selftest takes no subject");
  if (cfg.budget == 0) throw ConfigError("budget must be positive");
}

RunResult run(const RunConfig& cfg) {
  RunResult out;
  json head = head_json(cfg);
  try {
    validate(cfg);
    Report rep;
    if (cfg.command == "domain-info") domain_info(cfg, rep);
    else if (cfg.command == "derived-flag") derived_flag_cmd(cfg, rep);
    else if (cfg.command == "integral") integral_cmd(cfg, rep);
    else if (cfg.command == "chern-verify") chern_cmd(cfg, rep);
    else if (cfg.command == "nl-bound") nl_bound_cmd(cfg, rep);
    else if (cfg.command == "jacobian") jacobian_cmd(cfg, rep);
    else selftest_cmd(cfg, rep);
    out.report = rep.finish(head);
    out.exit_code = rep.pass() ? kPass : kAssertionFailure;
  } catch (const ConfigError& e) {
    head["error"] = e.what();
    out.exit_code = kConfigError;
  } catch (const PreconditionError& e) {
    head["error"] = e.what();
    out.exit_code = kConfigError;
  } catch (const BudgetExceeded& e) {
    head["error"] = std::string("budget exceeded: ") + e.what();
    out.exit_code = kConfigError;
  } catch (const CheckFailure& e) {
    head["error"] = e.what();
    out.exit_code = kAssertionFailure;
  }
  if (out.exit_code != kPass && !out.report.contains("pass")) {
    out.report = head;
    out.report["pass"] = false;
  }
  return out;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

std::string render_table(const json& report) {
  std::ostringstream out;
  std::string cmd = report.value("command", "");
  const std::string sub = report.value("sub", "");
  if (!sub.empty()) cmd += " " + sub;
  out << "command  " << cmd << "\n";
  if (report.contains("error")) out << "error    " << report["error"].get<std::string>() << "\n";
  if (report.contains("result")) {
    std::size_t width = 0;
    for (const auto& [k, v] : report["result"].items()) width = std::max(width, k.size());
    for (const auto& [k, v] : report["result"].items()) {
      out << "  " << k << std::string(width - k.size() + 2, ' ') << render_value(v);
      if (report.contains("trace") && report["trace"].contains(k)) out << "   <- " << render_value(report["trace"][k]);
      out << "\n";
    }
  }
  if (report.contains("checks"))
    for (const auto& [k, v] : report["checks"].items()) out << (v.get<bool>() ? "PASS " : "FAIL ") << k << "\n";
  out << "result   " << (report.value("pass", false) ? "PASS" : "FAIL") << "\n";
  return out.str();
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for variations of Hodge structure"};
  app.set_help_flag("--help", "print help and exit");
  std::vector<std::string> words;
  std::string config_path, json_path, h_text, form, fixture_kind, poly_path;
  std::string method, lambda, mu, zeta, vectors, only;
  std::uint64_t seed = 0, fixture_seed = 0;
  std::size_t trials = 0, budget = 0, dim = 0, k = 0;
  int n = 0, d = 0;
  bool plane = false;
  app.add_option("command", words, "command and subcommand");
  auto* o_config = app.add_option("--config", config_path, "sectioned key/value config file");
  auto* o_seed = app.add_option("--seed", seed, "random seed");
  auto* o_trials = app.add_option("--trials", trials, "trial count");
  auto* o_budget = app.add_option("--budget", budget, "largest graded piece dimension");
  auto* o_json = app.add_option("--json", json_path, "write the JSON report to PATH (- for stdout)");
  auto* o_h = app.add_option("--h", h_text, "Hodge numbers, e.g. 1,1,1,1");
  auto* o_form = app.add_option("--form", form, "middle form: diagonal or split");
  auto* o_n = app.add_option("--n", n, "weight (Hodge) or dimension (fixture)");
  auto* o_d = app.add_option("--d", d, "hypersurface degree");
  auto* o_fixture = app.add_option("--fixture", fixture_kind, "fermat, seeded, plane, degenerate-plane or file");
  auto* o_fseed = app.add_option("--fixture-seed", fixture_seed, "fixture seed");
  auto* o_poly = app.add_option("--poly", poly_path, "polynomial file");
  auto* o_plane = app.add_flag("--plane", plane, "extract a plane decomposition from the polynomial");
  auto* o_method = app.add_option("--method", method, "random, normal-form, sharp or vectors");
  auto* o_dim = app.add_option("--dim", dim, "integral element dimension");
  auto* o_lambda = app.add_option("--lambda", lambda, "normal-form lambda");
  auto* o_mu = app.add_option("--mu", mu, "normal-form mu");
  auto* o_vectors = app.add_option("--vectors", vectors, "basis rows, ';' separated");
  auto* o_zeta = app.add_option("--zeta", zeta, "class zeta");
  auto* o_k = app.add_option("--k", k, "pairing degree");
  auto* o_only = app.add_option("--only", only, "selftest criteria, e.g. 1,2,10");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kConfigError;
  }

  RunConfig cfg;
  try {
    if (*o_config) cfg = load_config(config_path);
    else if (words.empty()) throw ConfigError("empty config: give a command or --config PATH");
    if (!words.empty()) cfg.command = words[0];
    if (words.size() > 1) cfg.sub = words[1];
    if (words.size() > 2) throw ConfigError("unexpected argument '" + words[2] + "'");
    if (*o_seed) cfg.seed = seed;
    if (*o_trials) cfg.trials = trials;
    if (*o_budget) cfg.budget = budget;
    if (*o_h) {
      if (!cfg.hodge) cfg.hodge.emplace();
      cfg.hodge->h = parse_counts("--h", h_text);
    }
    if (*o_form) {
      if (!cfg.hodge) throw ConfigError("--form needs Hodge numbers");
      cfg.hodge->form = form;
    }
    const bool fixture_flag = *o_d || *o_fixture || *o_poly || *o_plane || *o_fseed;
    if (fixture_flag && !cfg.fixture) cfg.fixture.emplace();
    if (*o_d) cfg.fixture->d = d;
    if (*o_fixture) cfg.fixture->kind = fixture_kind;
    if (*o_fseed) cfg.fixture->seed = fixture_seed;
    if (*o_poly) cfg.fixture->file = poly_path;
    if (*o_plane) cfg.fixture->with_plane = plane;
    if (*o_n) {
      if (n < 0) throw ConfigError("--n must be non-negative");
      if (cfg.hodge && !cfg.hodge->h.empty() && static_cast<std::size_t>(n) + 1 != cfg.hodge->h.size())
        throw ConfigError("--n does not match the length of --h");
      if (cfg.fixture) cfg.fixture->n = n;
    }
    if (*o_method) cfg.params["element.method"] = method;
    if (*o_dim) cfg.params["element.dim"] = std::to_string(dim);
    if (*o_lambda) cfg.params["element.lambda"] = lambda;
    if (*o_mu) cfg.params["element.mu"] = mu;
    if (*o_vectors) cfg.params["element.vectors"] = vectors;
    if (*o_zeta) cfg.params["nl.zeta"] = zeta;
    if (*o_k) cfg.params["jacobian.k"] = std::to_string(k);
    if (*o_only) cfg.params["selftest.only"] = only;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  const RunResult r = run(cfg);
  if (r.report.contains("error")) err << "error: " << r.report["error"].get<std::string>() << "\n";
  const std::string text = dump_report(r.report);
  if (*o_json && json_path == "-") {
    out << text;
  } else {
    if (*o_json) {
      std::ofstream f(json_path, std::ios::binary);
      if (!f) {
        err << "error: cannot write '" << json_path << "'\n";
        return kConfigError;
      }
      f << text;
    }
    out << render_table(r.report);
  }
  return r.exit_code;
}

}  // namespace vhs::cli
