// conewit command-line front end. Every subcommand prints one JSON object
// {command, inputs, status, ...}. Exit codes: 0 analysis ran (whatever the
// verdict), 1 usage error, 2 unreadable or invalid input.

#include "conewit/conewit.hpp"
#include "conewit/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

using namespace conewit;

namespace {

struct Globals {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::size_t restarts = 64;
  bool json = false;

  SearchConfig search() const {
    SearchConfig c;
    c.seed = seed;
    c.restarts = restarts;
    return c;
  }
  Json inputs() const { return Json{{"tol", tol}, {"seed", seed}, {"restarts", restarts}}; }
};

// Example selection shared by check, edge, witness and example.
struct ExampleArgs {
  std::string name;
  double mu = 1.0;
  double lambda = std::sqrt(2.0);
  std::string config = "independent";
  std::vector<double> family;

  Json to_json() const {
    Json j{{"example", name}};
    if (name == "stormer") j["mu"] = mu;
    if (name == "x") {
      j["lambda"] = lambda;
      j["config"] = config;
    }
    if (name == "family") j["abc"] = family;
    return j;
  }
};

Vector unit3(int k) {
  Vector v = Vector::Zero(3);
  v(k) = 1.0;
  return v;
}

const std::vector<std::string> kStateExamples{"choi", "stormer", "x"};
const std::vector<std::string> kMapExamples{"choi-map", "family", "trace", "transpose", "segment"};

bool is_state_example(const std::string& s) {
  return std::find(kStateExamples.begin(), kStateExamples.end(), s) != kStateExamples.end();
}

CMat state_example(const ExampleArgs& e) {
  if (e.name == "choi") return choi_ppt_state();
  if (e.name == "stormer") return stormer_state(e.mu);
  if (e.name == "x") {
    const Vector e1 = unit3(0), e2 = unit3(1), e3 = unit3(2);
    const Vector mix = (e1 + e2).normalized();
    if (x_state_degenerate(e.lambda)) throw DomainError("x example: lambda = 1 is degenerate");
    if (e.config == "independent") return x_state(e.lambda, e1, e2, e3);
    if (e.config == "dim2") return x_state(e.lambda, e1, e2, mix);
    if (e.config == "dim2par") return x_state(e.lambda, e1, e1, e2);
    if (e.config == "equal") return x_state(e.lambda, e1, e1, e1);
    throw DomainError("unknown x configuration '" + e.config + "'");
  }
  throw DomainError("unknown state example '" + e.name + "'");
}

LinMap map_example(const ExampleArgs& e) {
  if (e.name == "choi-map") return phi_family(1, 0, 1);
  if (e.name == "family") {
    if (e.family.size() != 3) throw DomainError("family example needs --abc A B C");
    return phi_family(e.family[0], e.family[1], e.family[2]);
  }
  if (e.name == "trace") return trace_map(3, 3);
  if (e.name == "transpose") return transpose_map(3);
  if (e.name == "segment") return segment_witness(std::sqrt(2.0), 0.5);
  throw DomainError("unknown map example '" + e.name + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError("'" + path + "': " + e.what());
  }
}

CMat load_state(const std::string& file, const ExampleArgs& ex) {
  if (!file.empty()) {
    CMat a = read_matrix_file(read_json_file(file));
    if (!is_hermitian(a.mat())) throw FormatError("'" + file + "': matrix is not Hermitian");
    return a;
  }
  return state_example(ex);
}

LinMap load_map(const std::string& file, const ExampleArgs& ex) {
  if (!file.empty()) return read_map_file(read_json_file(file));
  return map_example(ex);
}

// --- JSON rendering ----------------------------------------------------------

Json product_json(const ProductVector& pv) {
  return Json{{"xi", vector_to_json(pv.xi())}, {"eta", vector_to_json(pv.eta())}};
}

Json certificate_json(const Certificate& c) {
  Json j{{"kind", to_string(c.kind)}, {"value", c.value}};
  if (!c.side.empty()) j["side"] = c.side;
  if (c.vector.size() > 0) j["vector"] = vector_to_json(c.vector);
  if (c.product) j["product"] = product_json(*c.product);
  if (c.rank > 0) j["rank"] = c.rank;
  if (c.s_part.size() > 0) j["s_part"] = matrix_to_json(c.s_part);
  if (c.t_part.size() > 0) j["t_part"] = matrix_to_json(c.t_part);
  if (c.state.size() > 0) j["state"] = matrix_to_json(c.state);
  return j;
}

Json stats_json(const SearchStats& s) {
  return Json{{"restarts", s.restarts},   {"n_converged", s.n_converged}, {"best", s.best},
              {"iterations", s.iterations}, {"residual", s.residual}};
}

void add_verdict(Json& j, const Verdict& v) {
  j["status"] = to_string(v.status);
  if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
  if (v.stats) j["stats"] = stats_json(*v.stats);
  if (!v.note.empty()) j["note"] = v.note;
}

Json types_json(const std::vector<EdgeType>& ts) {
  Json out = Json::array();
  for (const auto& [p, q] : ts) out.push_back({p, q});
  return out;
}

// --- subcommands ------------------------------------------------------------

Json run_classify(const Globals& g, double a, double b, double c) {
  const FamilyClassification f = classify(a, b, c);
  Json j{{"command", "classify-family"}, {"inputs", g.inputs()}, {"status", "exact"}};
  j["inputs"]["abc"] = {a, b, c};
  j["classification"] = {{"positive", f.positive},
                         {"two_positive", f.two_positive},
                         {"completely_positive", f.completely_positive},
                         {"completely_copositive", f.completely_copositive},
                         {"decomposable", f.decomposable},
                         {"choi_matrix_ppt", f.choi_matrix_ppt}};
  return j;
}

Json run_check(const Globals& g, const std::string& what, std::size_t s, const std::string& file,
               const ExampleArgs& ex) {
  Json j{{"command", "check"}, {"inputs", g.inputs()}};
  j["inputs"]["property"] = what;
  if (!file.empty()) j["inputs"]["file"] = file;
  else j["inputs"].update(ex.to_json());

  const bool state_check = what == "ppt" || what == "separable";
  if (file.empty() && state_check != is_state_example(ex.name)) {
    throw DomainError("check " + what + " needs a " + (state_check ? "state" : "map") + " example");
  }
  if (what == "ppt") {
    add_verdict(j, is_ppt(load_state(file, ex)));
  } else if (what == "separable") {
    const SeparabilityReport r = separability_report(load_state(file, ex), g.search());
    add_verdict(j, r.verdict);
    j["rank"] = r.rank;
    j["rank_pt"] = r.rank_pt;
    j["pairs_found"] = r.pairs.size();
    j["span_dim"] = r.span_dim;
    j["conj_span_dim"] = r.conj_span_dim;
  } else {
    const LinMap phi = load_map(file, ex);
    if (what == "cp") add_verdict(j, is_cp(phi));
    else if (what == "ccp") add_verdict(j, is_ccp(phi));
    else if (what == "block-positive") add_verdict(j, is_block_positive(phi, g.search(), g.tol));
    else if (what == "s-positive") {
      j["inputs"]["s"] = s;
      add_verdict(j, is_s_positive(phi, s, g.search(), g.tol));
    } else if (what == "decomposable") {
      add_verdict(j, is_decomposable(phi, {}, {}, g.tol));
    }
  }
  return j;
}

Json run_pair(const Globals& g, const std::string& state_file, const std::string& map_file) {
  const CMat a = read_matrix_file(read_json_file(state_file));
  const LinMap phi = read_map_file(read_json_file(map_file));
  Json j{{"command", "pair"}, {"inputs", g.inputs()}, {"status", "exact"}};
  j["inputs"]["state"] = state_file;
  j["inputs"]["map"] = map_file;
  j["value"] = pair(a, phi);
  return j;
}

Json run_edge(const Globals& g, const std::string& file, const ExampleArgs& ex) {
  const CMat a = load_state(file, ex);
  const EdgeReport r = is_edge(a, g.search());
  Json j{{"command", "edge"}, {"inputs", g.inputs()}};
  if (!file.empty()) j["inputs"]["file"] = file;
  else j["inputs"].update(ex.to_json());
  add_verdict(j, r.edge);
  j["ppt"] = to_string(r.ppt.status);
  j["type"] = {r.p, r.q};
  j["edge"] = to_string(r.edge.status);
  return j;
}

Json run_edge_types(const Globals& g, std::size_t m, std::size_t n, bool no_rank4) {
  const TypeCatalog cat = admissible_edge_types(m, n, !no_rank4);
  Json j{{"command", "edge-types"}, {"inputs", g.inputs()}, {"status", "exact"}};
  j["inputs"]["m"] = m;
  j["inputs"]["n"] = n;
  j["inputs"]["rank4_rule"] = !no_rank4;
  j["admissible"] = types_json(cat.admissible);
  j["up_to_symmetry"] = types_json(cat.up_to_symmetry());
  std::map<std::string, Json> by_reason;
  for (const auto& x : cat.exclusions) {
    auto& list = by_reason[to_string(x.reason)];
    if (list.is_null()) list = Json::array();
    list.push_back({x.type.first, x.type.second});
  }
  j["exclusions"] = by_reason;
  j["note"] = cat.note;
  return j;
}

Json run_witness(const Globals& g, const std::string& file, const ExampleArgs& ex) {
  const LinMap phi = load_map(file, ex);
  const WitnessReport r = witness_analysis(phi, g.search());
  Json j{{"command", "witness"}, {"inputs", g.inputs()}};
  if (!file.empty()) j["inputs"]["map"] = file;
  else j["inputs"].update(ex.to_json());
  j["status"] = r.zero_set.empty() ? "Inconclusive" : "HeuristicYes";
  j["zero_lines"] = r.zero_set.size();
  j["span_dim"] = r.span_dim;
  j["conj_span_dim"] = r.conj_span_dim;
  j["spanning"] = r.spanning;
  j["co_spanning"] = r.co_spanning;
  j["scale"] = r.scale;
  j["stats"] = stats_json(r.stats);
  return j;
}

Json run_product_lines(const Globals& g, const std::string& file) {
  const CMat a = read_matrix_file(read_json_file(file));
  const Dims d = a.require_dims("product-lines");
  const Subspace range = range_basis(hermitian_part(a.mat(), "product-lines"));
  const auto lines = enumerate_product_lines(range, d, g.search());
  const SearchResult best = best_product_in_subspace(range, d, g.search());
  Json j{{"command", "product-lines"}, {"inputs", g.inputs()}};
  j["inputs"]["file"] = file;
  j["status"] = lines.empty() ? "HeuristicNo" : "CertifiedYes";
  j["subspace_dim"] = range.dim();
  j["expected_generic_count"] = binomial(d.m + d.n - 2, d.n - 1).convert_to<std::size_t>();
  Json ls = Json::array();
  for (const auto& pv : lines) ls.push_back(product_json(pv));
  j["lines"] = ls;
  j["stats"] = stats_json(SearchStats{best.per_restart_values.size(), best.n_converged, best.value, 0, best.residual});
  return j;
}

Json run_fixture(const Globals& g, std::size_t n) {
  const TwoByNFixture f = two_by_n_fixture(n, g.search());
  Json j{{"command", "fixture-2xn"}, {"inputs", g.inputs()}};
  j["inputs"]["n"] = n;
  j["status"] = f.perp_completely_entangled ? "HeuristicYes" : "HeuristicNo";
  j["dim_d"] = f.d.dim();
  j["dim_d_perp"] = f.d_perp.dim();
  j["perp_matches"] = f.perp_matches;
  j["perp_residual"] = f.perp_search.residual;
  j["perp_completely_entangled"] = f.perp_completely_entangled;
  j["conj_span_dim"] = f.conj_span_dim;
  return j;
}

Json run_example(const ExampleArgs& ex) {
  return is_state_example(ex.name) ? write_matrix_file(state_example(ex)) : write_map_file(map_example(ex));
}

void add_example_options(CLI::App* cmd, ExampleArgs& ex, bool states, bool maps) {
  std::vector<std::string> names;
  if (states) names.insert(names.end(), kStateExamples.begin(), kStateExamples.end());
  if (maps) names.insert(names.end(), kMapExamples.begin(), kMapExamples.end());
  cmd->add_option("--example", ex.name, "built-in example")->check(CLI::IsMember(names));
  if (states) {
    cmd->add_option("--mu", ex.mu, "stormer parameter");
    cmd->add_option("--lambda", ex.lambda, "x-state parameter");
    cmd->add_option("--config", ex.config, "x-state vectors")
        ->check(CLI::IsMember({"independent", "dim2", "dim2par", "equal"}));
  }
  if (maps) cmd->add_option("--abc", ex.family, "family parameters for --example family")->expected(3);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive maps, PPT states and entanglement witnesses"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "verdict threshold")->capture_default_str();
  app.add_option("--seed", g.seed, "search seed")->capture_default_str();
  app.add_option("--restarts", g.restarts, "search restarts")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "compact single-line output");

  double fa = 0, fb = 0, fc = 0;
  auto* classify_cmd = app.add_subcommand("classify-family", "closed-form membership of Phi[a,b,c]");
  classify_cmd->add_option("a", fa)->required();
  classify_cmd->add_option("b", fb)->required();
  classify_cmd->add_option("c", fc)->required();

  std::string property, file;
  std::size_t s_rank = 2;
  ExampleArgs ex;
  auto* check_cmd = app.add_subcommand("check", "cone membership of a map or state");
  check_cmd->add_option("property", property)
      ->required()
      ->check(CLI::IsMember({"cp", "ccp", "ppt", "block-positive", "s-positive", "decomposable", "separable"}));
  check_cmd->add_option("--s", s_rank, "Schmidt rank bound for s-positive");
  auto* check_file = check_cmd->add_option("--file", file, "map file or matrix file");
  add_example_options(check_cmd, ex, true, true);

  std::string state_file, map_file;
  auto* pair_cmd = app.add_subcommand("pair", "pairing <A, phi>");
  pair_cmd->add_option("--state", state_file)->required();
  pair_cmd->add_option("--map", map_file)->required();

  auto* edge_cmd = app.add_subcommand("edge", "edge test and type of a PPT state");
  auto* edge_file = edge_cmd->add_option("--file", file, "matrix file");
  add_example_options(edge_cmd, ex, true, false);

  std::size_t tm = 0, tn = 0;
  bool no_rank4 = false;
  auto* types_cmd = app.add_subcommand("edge-types", "edge types not excluded by the integer conditions");
  types_cmd->add_option("m", tm)->required();
  types_cmd->add_option("n", tn)->required();
  types_cmd->add_flag("--no-rank4-rule", no_rank4);

  auto* witness_cmd = app.add_subcommand("witness", "zero set and spanning properties of a witness");
  auto* witness_file = witness_cmd->add_option("--map", file, "map file");
  add_example_options(witness_cmd, ex, false, true);

  auto* lines_cmd = app.add_subcommand("product-lines", "product lines in the range of a state");
  lines_cmd->add_option("--file", file, "matrix file")->required();

  std::size_t fixture_n = 0;
  auto* fixture_cmd = app.add_subcommand("fixture-2xn", "the 2 x n completely entangled complement");
  fixture_cmd->add_option("n", fixture_n)->required();

  auto* example_cmd = app.add_subcommand("example", "print a built-in example as a matrix or map file");
  example_cmd->add_option("name", ex.name)->required();
  example_cmd->add_option("--mu", ex.mu);
  example_cmd->add_option("--lambda", ex.lambda);
  example_cmd->add_option("--config", ex.config);
  example_cmd->add_option("--abc", ex.family)->expected(3);

  for (auto* cmd : {check_cmd, edge_cmd, witness_cmd}) {
    auto* f = cmd == check_cmd ? check_file : cmd == edge_cmd ? edge_file : witness_file;
    auto* e = cmd->get_option("--example");
    f->excludes(e);
    cmd->callback([cmd, f, e]() {
      if (f->count() == 0 && e->count() == 0) throw CLI::RequiredError(cmd->get_name() + ": --file or --example");
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Json out;
    if (*classify_cmd) out = run_classify(g, fa, fb, fc);
    else if (*check_cmd) out = run_check(g, property, s_rank, file, ex);
    else if (*pair_cmd) out = run_pair(g, state_file, map_file);
    else if (*edge_cmd) out = run_edge(g, file, ex);
    else if (*types_cmd) out = run_edge_types(g, tm, tn, no_rank4);
    else if (*witness_cmd) out = run_witness(g, file, ex);
    else if (*lines_cmd) out = run_product_lines(g, file);
    else if (*fixture_cmd) out = run_fixture(g, fixture_n);
    else if (*example_cmd) out = run_example(ex);
    std::cout << (g.json ? out.dump() : out.dump(2)) << '\n';
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
