#include "irreps/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "irreps/altrep.hpp"
#include "irreps/hadamard.hpp"
#include "irreps/json_io.hpp"
#include "irreps/liegroup.hpp"
#include "irreps/schar.hpp"
#include "irreps/symrep.hpp"

namespace irreps {

namespace {

// Parse-stage failures exit with code 2; anything thrown later is a domain
// error and exits with code 1.
struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseFailure(std::string(what) + ": expected comma-separated integers");
    }
  }
  if (out.empty()) throw ParseFailure(std::string(what) + ": empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseFailure(std::string(what) + ": expected comma-separated reals");
    }
  }
  if (out.empty()) throw ParseFailure(std::string(what) + ": empty list");
  return out;
}

// Weight entries may be integers, halves written as decimals (1.5) or as
// fractions over two (3/2); stored doubled.
std::vector<int> parse_twice_entries(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      if (auto pos = tok.find('/'); pos != std::string::npos) {
        const int num = std::stoi(tok.substr(0, pos));
        const int den = std::stoi(tok.substr(pos + 1));
        if (den != 2) throw std::invalid_argument(tok);
        out.push_back(num);
      } else if (tok.find('.') != std::string::npos) {
        const double v = std::stod(tok);
        const double t = 2.0 * v;
        if (std::abs(t - std::round(t)) > 1e-9) throw std::invalid_argument(tok);
        out.push_back(static_cast<int>(std::lround(t)));
      } else {
        out.push_back(2 * std::stoi(tok));
      }
    } catch (const ParseFailure&) {
      throw;
    } catch (const std::exception&) {
      throw ParseFailure("weight: entries must be integers or half-integers");
    }
  }
  if (out.empty()) throw ParseFailure("weight: empty list");
  return out;
}

GroupTag parse_group_tag(const std::string& s) {
  if (s == "gl" || s == "u") return GroupTag::gl;
  if (s == "so_odd") return GroupTag::so_odd;
  if (s == "so_even") return GroupTag::so_even;
  throw ParseFailure("group: expected gl|u|so_odd|so_even");
}

json read_json_arg(const std::string& arg, const char* what) {
  try {
    if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw ParseFailure(std::string(what) + ": cannot open " + arg);
    json j;
    in >> j;
    return j;
  } catch (const ParseFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseFailure(std::string(what) + ": invalid JSON (" + e.what() + ")");
  }
}

StandardTableau parse_tableau(const YoungDiagram& shape, const std::string& inline_json,
                              const std::string& word, const char* what) {
  if (!inline_json.empty() && !word.empty())
    throw ParseFailure(std::string(what) + ": give either a tableau or a row word, not both");
  if (!inline_json.empty()) {
    StandardTableau t = tableau_from_json(read_json_arg(inline_json, what));
    if (t.shape != shape) throw ParseFailure(std::string(what) + ": shape mismatch");
    return t;
  }
  if (!word.empty()) return tableau_from_row_word(shape, parse_int_list(word, what));
  throw ParseFailure(std::string(what) + ": required");
}

// Enumeration cache under IRREP_CACHE_DIR, keyed by shape or weight.
std::optional<json> cache_get(const std::string& key) {
  const char* dir = std::getenv("IRREP_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  std::ifstream in(std::filesystem::path(dir) / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    json j;
    in >> j;
    return j;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_put(const std::string& key, const json& value) {
  const char* dir = std::getenv("IRREP_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  std::ofstream out(std::filesystem::path(dir) / (key + ".json"));
  if (out) out << value.dump() << '\n';
}

std::string shape_key(const YoungDiagram& d) {
  std::string k = "syt";
  for (int r : d.rows) k += "_" + std::to_string(r);
  return k;
}

std::string weight_key(const GTWeight& w) {
  std::string k = w.group == GroupTag::gl      ? "pat_gl"
                  : w.group == GroupTag::so_odd ? "pat_so_odd"
                                                : "pat_so_even";
  for (int e : w.twice_entries) k += (e < 0 ? "_m" + std::to_string(-e) : "_" + std::to_string(e));
  return k;
}

std::vector<StandardTableau> enumerate_syt_cached(const YoungDiagram& shape) {
  const std::string key = shape_key(shape);
  if (auto hit = cache_get(key)) {
    try {
      std::vector<StandardTableau> out;
      for (const auto& word : hit->at("words"))
        out.push_back(tableau_from_row_word(shape, word.get<std::vector<int>>()));
      return out;
    } catch (const std::exception&) {
      // fall through to a fresh enumeration on any stale cache content
    }
  }
  std::vector<StandardTableau> out = enumerate_syt(shape);
  json words = json::array();
  for (const auto& t : out) words.push_back(row_reading_word(t));
  cache_put(key, json{{"words", words}});
  return out;
}

cplx parse_unit_eig(double angle) { return std::polar(1.0, angle); }

struct CommandContext {
  json output;
};

void cmd_syt_sample(CLI::App& app, CommandContext& ctx) {
  auto shape_s = std::make_shared<std::string>();
  auto count = std::make_shared<int>(1);
  auto seed = std::make_shared<std::uint64_t>(0);
  app.add_option("--shape", *shape_s, "diagram rows, e.g. 3,2,1")->required();
  app.add_option("--count", *count, "number of samples");
  app.add_option("--seed", *seed, "rng seed");
  app.callback([&ctx, shape_s, count, seed] {
    const YoungDiagram shape{parse_int_list(*shape_s, "--shape")};
    validate_diagram(shape);
    if (*count < 1) throw std::invalid_argument("--count must be positive");
    Rng rng(*seed);
    json samples = json::array();
    for (int k = 0; k < *count; ++k) samples.push_back(to_json(hook_walk_sample(shape, rng)));
    ctx.output = json{{"shape", to_json(shape)}, {"seed", *seed}, {"samples", samples}};
  });
}

void cmd_sym_element(CLI::App& app, CommandContext& ctx) {
  auto shape_s = std::make_shared<std::string>();
  auto perms = std::make_shared<std::vector<std::string>>();
  auto row_s = std::make_shared<std::string>();
  auto col_s = std::make_shared<std::string>();
  auto row_word = std::make_shared<std::string>();
  auto col_word = std::make_shared<std::string>();
  app.add_option("--shape", *shape_s)->required();
  app.add_option("--perm", *perms, "one-based image list; repeat to compose left to right")
      ->required();
  app.add_option("--row", *row_s, "row tableau as JSON");
  app.add_option("--col", *col_s, "column tableau as JSON");
  app.add_option("--row-word", *row_word, "row tableau by row reading word");
  app.add_option("--col-word", *col_word, "column tableau by row reading word");
  app.callback([&ctx, shape_s, perms, row_s, col_s, row_word, col_word] {
    const YoungDiagram shape{parse_int_list(*shape_s, "--shape")};
    validate_diagram(shape);
    Permutation p{parse_int_list(perms->front(), "--perm")};
    for (std::size_t k = 1; k < perms->size(); ++k)
      p = compose(p, Permutation{parse_int_list((*perms)[k], "--perm")});
    const StandardTableau row = parse_tableau(shape, *row_s, *row_word, "--row");
    const StandardTableau col = parse_tableau(shape, *col_s, *col_word, "--col");
    ctx.output = json{{"value", matrix_element(shape, p, row, col)}};
  });
}

void cmd_sym_char_exact(CLI::App& app, CommandContext& ctx) {
  auto shape_s = std::make_shared<std::string>();
  auto perm_s = std::make_shared<std::string>();
  auto mu_s = std::make_shared<std::string>();
  app.add_option("--shape", *shape_s)->required();
  app.add_option("--perm", *perm_s, "permutation; trace evaluation");
  app.add_option("--mu", *mu_s, "cycle type; tableau-sum evaluation");
  app.callback([&ctx, shape_s, perm_s, mu_s] {
    const YoungDiagram shape{parse_int_list(*shape_s, "--shape")};
    validate_diagram(shape);
    if (perm_s->empty() == mu_s->empty())
      throw ParseFailure("sym-char-exact: give exactly one of --perm or --mu");
    const long long dim = static_cast<long long>(syt_count(shape));
    if (!perm_s->empty()) {
      const Permutation p{parse_int_list(*perm_s, "--perm")};
      const double chi = exact_character(shape, p);
      ctx.output = json{{"character", chi},
                        {"dimension", dim},
                        {"normalized", chi / static_cast<double>(dim)},
                        {"mu", to_json(cycle_type(p))}};
      return;
    }
    const CycleType mu{parse_int_list(*mu_s, "--mu")};
    const RoichmanContext rc = roichman_context(mu);
    long long chi = 0;
    for (const StandardTableau& t : enumerate_syt_cached(shape)) chi += roichman_weight(rc, t);
    ctx.output = json{{"character", chi},
                      {"dimension", dim},
                      {"normalized", static_cast<double>(chi) / static_cast<double>(dim)},
                      {"mu", to_json(mu)}};
  });
}

void cmd_sym_char_estimate(CLI::App& app, CommandContext& ctx) {
  auto threads = std::make_shared<int>(1);
  auto shape_s = std::make_shared<std::string>();
  auto mu_s = std::make_shared<std::string>();
  auto eps = std::make_shared<double>(0.1);
  auto delta = std::make_shared<double>(0.05);
  auto seed = std::make_shared<std::uint64_t>(0);
  app.add_option("--shape", *shape_s)->required();
  app.add_option("--mu", *mu_s)->required();
  app.add_option("--eps", *eps, "additive accuracy");
  app.add_option("--delta", *delta, "failure probability");
  app.add_option("--seed", *seed);
  app.add_option("--threads", *threads, "worker threads (default 1)");
  app.callback([&ctx, shape_s, mu_s, eps, delta, seed, threads] {
    const YoungDiagram shape{parse_int_list(*shape_s, "--shape")};
    const CycleType mu{parse_int_list(*mu_s, "--mu")};
    const EstimatorReport r =
        estimate_normalized_character(shape, mu, *eps, *delta, *seed, *threads);
    ctx.output = to_json(r);
  });
}

void cmd_alt_element(CLI::App& app, CommandContext& ctx) {
  auto shape_s = std::make_shared<std::string>();
  auto branch_s = std::make_shared<std::string>("whole");
  auto perm_s = std::make_shared<std::string>();
  auto row = std::make_shared<int>(0);
  auto col = std::make_shared<int>(0);
  app.add_option("--shape", *shape_s)->required();
  app.add_option("--branch", *branch_s, "whole|plus|minus");
  app.add_option("--perm", *perm_s)->required();
  app.add_option("--row-index", *row, "0-based row index in the branch basis")->required();
  app.add_option("--col-index", *col, "0-based column index in the branch basis")->required();
  app.callback([&ctx, shape_s, branch_s, perm_s, row, col] {
    const YoungDiagram shape{parse_int_list(*shape_s, "--shape")};
    AltBranch branch;
    if (*branch_s == "whole")
      branch = AltBranch::whole;
    else if (*branch_s == "plus")
      branch = AltBranch::plus;
    else if (*branch_s == "minus")
      branch = AltBranch::minus;
    else
      throw ParseFailure("--branch: expected whole|plus|minus");
    const Permutation p{parse_int_list(*perm_s, "--perm")};
    const AltIrrepLabel label{shape, branch};
    const cplx v = alt_matrix_element(label, p, *row, *col);
    ctx.output = json{{"value", json::array({v.real(), v.imag()})},
                      {"branch", *branch_s},
                      {"dimension", alt_branch_dimension(label)}};
  });
}

void cmd_gt_dim(CLI::App& app, CommandContext& ctx) {
  auto weight_s = std::make_shared<std::string>();
  auto group_s = std::make_shared<std::string>("gl");
  app.add_option("--weight", *weight_s, "entries, e.g. 2,1,0 (halves allowed for so)")
      ->required();
  app.add_option("--group", *group_s, "gl|so_odd|so_even");
  app.callback([&ctx, weight_s, group_s] {
    GTWeight w;
    w.group = parse_group_tag(*group_s);
    w.twice_entries = parse_twice_entries(*weight_s);
    validate_weight(w);
    const std::string key = weight_key(w);
    if (auto hit = cache_get(key)) {
      if (hit->contains("dimension")) {
        ctx.output = json{{"dimension", hit->at("dimension").get<long long>()}};
        return;
      }
    }
    const long long dim = gt_dimension(w);
    cache_put(key, json{{"dimension", dim}});
    ctx.output = json{{"dimension", dim}};
  });
}

void cmd_u_rep(CLI::App& app, CommandContext& ctx) {
  auto threads = std::make_shared<int>(1);
  auto weight_s = std::make_shared<std::string>();
  auto unitary_s = std::make_shared<std::string>();
  auto generator_s = std::make_shared<std::string>();
  auto su = std::make_shared<bool>(false);
  app.add_option("--weight", *weight_s)->required();
  app.add_option("--unitary", *unitary_s, "matrix JSON (inline or file path)");
  app.add_option("--generator", *generator_s, "emit the algebra action for indices i,j");
  app.add_flag("--su", *su, "reduce the weight to its determinant-insensitive representative");
  app.add_option("--threads", *threads, "worker threads (default 1)");
  app.callback([&ctx, weight_s, unitary_s, generator_s, su, threads] {
    GTWeight w;
    w.group = GroupTag::gl;
    w.twice_entries = parse_twice_entries(*weight_s);
    validate_weight(w);
    int shift = 0;
    if (*su) std::tie(w, shift) = su_canonical_weight(w);
    if (unitary_s->empty() == generator_s->empty())
      throw ParseFailure("u-rep: give exactly one of --unitary or --generator");
    if (!generator_s->empty()) {
      const std::vector<int> ij = parse_int_list(*generator_s, "--generator");
      if (ij.size() != 2) throw ParseFailure("--generator: expected i,j");
      const SparseOperator op = gl_action_general(w, ij[0], ij[1]);
      ctx.output = json{{"dimension", op.dim()}, {"matrix", to_json(op.to_dense())}};
      if (*su) ctx.output["weight_shift"] = shift;
      return;
    }
    const DenseMatrix u = matrix_from_json(read_json_arg(*unitary_s, "--unitary"));
    const DenseUnitary rep = group_rep_u(w, u, kDefaultPatternCap, *threads);
    ctx.output = json{{"dimension", rep.dim()}, {"matrix", to_json(rep.matrix())}};
    if (*su) ctx.output["weight_shift"] = shift;
  });
}

void cmd_so_rep(CLI::App& app, CommandContext& ctx) {
  auto threads = std::make_shared<int>(1);
  auto weight_s = std::make_shared<std::string>();
  auto group_s = std::make_shared<std::string>();
  auto matrix_s = std::make_shared<std::string>();
  app.add_option("--weight", *weight_s)->required();
  app.add_option("--group", *group_s, "so_odd|so_even")->required();
  app.add_option("--orthogonal", *matrix_s, "matrix JSON (inline or file path)")->required();
  app.add_option("--threads", *threads, "worker threads (default 1)");
  app.callback([&ctx, weight_s, group_s, matrix_s, threads] {
    GTWeight w;
    w.group = parse_group_tag(*group_s);
    if (w.group == GroupTag::gl) throw ParseFailure("so-rep: group must be so_odd or so_even");
    w.twice_entries = parse_twice_entries(*weight_s);
    validate_weight(w);
    const DenseMatrix g = matrix_from_json(read_json_arg(*matrix_s, "--orthogonal"));
    const DenseUnitary rep = group_rep_so(w, g, kDefaultPatternCap, *threads);
    ctx.output = json{{"dimension", rep.dim()}, {"matrix", to_json(rep.matrix())}};
  });
}

void cmd_weyl_char(CLI::App& app, CommandContext& ctx) {
  auto weight_s = std::make_shared<std::string>();
  auto group_s = std::make_shared<std::string>("u");
  auto eigs_s = std::make_shared<std::string>();
  app.add_option("--weight", *weight_s)->required();
  app.add_option("--group", *group_s, "u|so_odd|so_even");
  app.add_option("--eigs", *eigs_s, "eigenvalue angles in radians")->required();
  app.callback([&ctx, weight_s, group_s, eigs_s] {
    GTWeight w;
    w.group = parse_group_tag(*group_s);
    w.twice_entries = parse_twice_entries(*weight_s);
    validate_weight(w);
    const std::vector<double> angles = parse_double_list(*eigs_s, "--eigs");
    if (w.group == GroupTag::gl) {
      std::vector<cplx> eigs;
      for (double a : angles) eigs.push_back(parse_unit_eig(a));
      const cplx chi = weyl_character_u(w, eigs);
      ctx.output = json{{"character", json::array({chi.real(), chi.imag()})},
                        {"dimension", weyl_dimension(w)}};
      return;
    }
    ctx.output = json{{"character", weyl_character_so(w, angles)}};
  });
}

void cmd_hadamard_estimate(CLI::App& app, CommandContext& ctx) {
  auto threads = std::make_shared<int>(1);
  auto shape_s = std::make_shared<std::string>();
  auto perm_s = std::make_shared<std::string>();
  auto tab_s = std::make_shared<std::string>();
  auto word_s = std::make_shared<std::string>();
  auto part_s = std::make_shared<std::string>("real");
  auto eps = std::make_shared<double>(0.05);
  auto delta = std::make_shared<double>(0.01);
  auto seed = std::make_shared<std::uint64_t>(0);
  app.add_option("--shape", *shape_s)->required();
  app.add_option("--perm", *perm_s)->required();
  app.add_option("--tableau", *tab_s, "basis state as tableau JSON");
  app.add_option("--row-word", *word_s, "basis state by row reading word");
  app.add_option("--part", *part_s, "real|imaginary");
  app.add_option("--eps", *eps);
  app.add_option("--delta", *delta);
  app.add_option("--seed", *seed);
  app.add_option("--threads", *threads, "worker threads (default 1)");
  app.callback([&ctx, shape_s, perm_s, tab_s, word_s, part_s, eps, delta, seed, threads] {
    const YoungDiagram shape{parse_int_list(*shape_s, "--shape")};
    validate_diagram(shape);
    const Permutation p{parse_int_list(*perm_s, "--perm")};
    const StandardTableau state = parse_tableau(shape, *tab_s, *word_s, "--tableau");
    OverlapPart part;
    if (*part_s == "real")
      part = OverlapPart::real;
    else if (*part_s == "imaginary" || *part_s == "imag")
      part = OverlapPart::imaginary;
    else
      throw ParseFailure("--part: expected real or imaginary");
    const SytBasis basis = syt_basis(shape);
    const int idx = basis.index_of(state);
    std::vector<cplx> psi(basis.dim());
    psi[idx] = 1.0;
    const DenseMatrix rep = rep_permutation(shape, p).matrix();
    const ShotPlan plan = make_shot_plan(*eps, *delta, part);
    const HadamardEstimate est = simulate_estimate(
        [&rep](const std::vector<cplx>& v) { return apply(rep, v); }, psi, plan, *seed, *threads);
    ctx.output = json{{"estimate", est.estimate}, {"std_error", est.std_error},
                      {"shots", plan.shots},     {"epsilon", *eps},
                      {"delta", *delta},         {"part", *part_s},
                      {"seed", *seed}};
  });
}

void cmd_hard_instance(CLI::App& app, CommandContext& ctx) {
  auto n = std::make_shared<int>(0);
  app.add_option("--n", *n, "number of objects")->required();
  app.callback([&ctx, n] {
    const Permutation p = hard_instance(*n);
    const PermStats s = perm_stats(p);
    ctx.output = json{{"perm", to_json(p)},
                      {"stats",
                       json{{"sign", s.sign},
                            {"min_transpositions", s.min_transpositions},
                            {"moved", s.moved},
                            {"largest_moved", s.largest_moved},
                            {"coxeter_length", s.coxeter_length}}}};
  });
}

void cmd_norm_profile(CLI::App& app, CommandContext& ctx) {
  auto weight_s = std::make_shared<std::string>();
  auto h_s = std::make_shared<std::string>();
  app.add_option("--weight", *weight_s)->required();
  app.add_option("--block", *h_s, "2x2 antihermitian block, matrix JSON")->required();
  app.callback([&ctx, weight_s, h_s] {
    GTWeight w;
    w.group = GroupTag::gl;
    w.twice_entries = parse_twice_entries(*weight_s);
    validate_weight(w);
    const DenseMatrix h = matrix_from_json(read_json_arg(*h_s, "--block"));
    const NormProfile profile = norm_profile(w, h);
    ctx.output = json{{"norms", profile.norms}, {"gershgorin", profile.gershgorin}};
  });
}

}  // namespace

const std::vector<SubcommandInfo>& cli_subcommands() {
  static const std::vector<SubcommandInfo> table = {
      {"syt-sample", "uniform random standard tableaux", {"hook_walk_sample"}},
      {"sym-element",
       "matrix element of a symmetric-group representation",
       {"matrix_element", "compose", "bubblesort_decompose", "rep_adjacent", "axial_distance"}},
      {"sym-char-exact",
       "exact character by trace or tableau sum",
       {"exact_character", "rep_permutation", "exact_character_roichman", "roichman_weight",
        "roichman_f", "enumerate_syt", "cycle_type"}},
      {"sym-char-estimate",
       "randomized normalized-character estimate",
       {"estimate_normalized_character"}},
      {"alt-element",
       "matrix element of an alternating-group representation",
       {"alt_matrix_element", "associator", "split_basis", "conjugate_tableau",
        "conjugate_diagram", "typewriter_data"}},
      {"gt-dim", "pattern count of a weight", {"gt_dimension", "enumerate_patterns"}},
      {"u-rep",
       "assembled unitary-group representation or algebra action",
       {"group_rep_u", "two_level_decompose", "adjacency_reduce", "log_unitary_2x2",
        "gl_algebra_element", "gl_action", "gl_action_general", "su_canonical_weight"}},
      {"so-rep", "assembled special-orthogonal representation", {"group_rep_so", "so_action"}},
      {"weyl-char",
       "character from the determinant formulas",
       {"weyl_character_u", "weyl_character_so", "weyl_dimension"}},
      {"hadamard-estimate",
       "shot-based estimate of a representation matrix element",
       {"simulate_estimate", "overlap", "p_zero"}},
      {"hard-instance", "the transposition of 1 and n with its statistics",
       {"hard_instance", "stats"}},
      {"norm-profile", "algebra-action norms across block positions", {"norm_profile"}},
  };
  return table;
}

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"unitary irreducible representations: construction and estimation"};
  app.require_subcommand(1);

  CommandContext ctx;
  cmd_syt_sample(*app.add_subcommand("syt-sample"), ctx);
  cmd_sym_element(*app.add_subcommand("sym-element"), ctx);
  cmd_sym_char_exact(*app.add_subcommand("sym-char-exact"), ctx);
  cmd_sym_char_estimate(*app.add_subcommand("sym-char-estimate"), ctx);
  cmd_alt_element(*app.add_subcommand("alt-element"), ctx);
  cmd_gt_dim(*app.add_subcommand("gt-dim"), ctx);
  cmd_u_rep(*app.add_subcommand("u-rep"), ctx);
  cmd_so_rep(*app.add_subcommand("so-rep"), ctx);
  cmd_weyl_char(*app.add_subcommand("weyl-char"), ctx);
  cmd_hadamard_estimate(*app.add_subcommand("hadamard-estimate"), ctx);
  cmd_hard_instance(*app.add_subcommand("hard-instance"), ctx);
  cmd_norm_profile(*app.add_subcommand("norm-profile"), ctx);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    out << json{{"error", e.what()}}.dump(2) << '\n';
    return 2;
  } catch (const ParseFailure& e) {
    out << json{{"error", e.what()}}.dump(2) << '\n';
    return 2;
  } catch (const std::exception& e) {
    out << json{{"error", e.what()}}.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return 1;
  }
  out << ctx.output.dump(2) << '\n';
  return 0;
}

}  // namespace irreps
