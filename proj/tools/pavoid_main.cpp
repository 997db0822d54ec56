// Command-line workbench over the pavoid library: containment and interval
// minor tests, constructions, repetition analysis, the tight-occurrence scan,
// extremal and counting searches, bound formulas, high-dimensional tools, and
// the self-verification suites.  JSON results on stdout, diagnostics on
// stderr; deterministic for fixed parameters and seed.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pavoid/acceptance.hpp"
#include "pavoid/bignum.hpp"
#include "pavoid/bounds.hpp"
#include "pavoid/constructions.hpp"
#include "pavoid/containment.hpp"
#include "pavoid/counting.hpp"
#include "pavoid/errors.hpp"
#include "pavoid/extremal.hpp"
#include "pavoid/greedy.hpp"
#include "pavoid/highdim.hpp"
#include "pavoid/io.hpp"
#include "pavoid/oracle.hpp"
#include "pavoid/permutation.hpp"
#include "pavoid/repetition.hpp"
#include "pavoid/rng.hpp"

using nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "json";
  int threads = 1;
  std::uint64_t seed = 1;
  bool seed_given = false;
};

// Results are printed inside a stable envelope; rerunning with the same
// parameters and seed reproduces the payload byte for byte.
void print_report(const Options& opt, const std::string& command,
                  const ordered_json& params, const ordered_json& results,
                  double elapsed_ms) {
  if (opt.format == "csv") {
    // Tabular payloads render as rows; anything else flattens to key,value.
    if (results.contains("csv_header")) {
      std::cout << results["csv_header"].get<std::string>() << "\n";
      for (const auto& row : results["csv_rows"])
        std::cout << row.get<std::string>() << "\n";
      return;
    }
    for (const auto& [key, value] : results.items()) {
      if (value.is_primitive())
        std::cout << key << "," << (value.is_string()
                                        ? value.get<std::string>()
                                        : value.dump())
                  << "\n";
    }
    return;
  }
  ordered_json trimmed = results;  // CSV render hints stay out of the JSON view
  trimmed.erase("csv_header");
  trimmed.erase("csv_rows");
  ordered_json report;
  report["command"] = command;
  report["params"] = params;
  report["results"] = trimmed;
  report["elapsed_ms"] = elapsed_ms;
  if (opt.seed_given) report["seed"] = opt.seed;
  std::cout << report.dump(2) << std::endl;
}

ordered_json embedding_json(const pavoid::Embedding& e) {
  ordered_json j;
  j["rows"] = e.row_map;
  j["cols"] = e.col_map;
  return j;
}

ordered_json matrix_json(const pavoid::BinaryMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 1; r <= m.rows(); ++r) rows.push_back(m.row_string(r));
  return rows;
}

// --pattern and --host accept a file path or, as a convenience, inline text
// ("1 3 2" or "2 2\n10\n01").
pavoid::ParsedInput load_input(const std::string& arg) {
  std::ifstream probe(arg);
  if (probe.good()) return pavoid::parse_input_file(arg);
  try {
    return pavoid::parse_input_text(arg);
  } catch (const std::invalid_argument& e) {
    bool path_like = arg.find('\n') == std::string::npos &&
                     arg.find('/') != std::string::npos;
    if (path_like)
      throw std::invalid_argument("cannot open file \"" + arg +
                                  "\", and as inline text: " + e.what());
    throw;
  }
}

std::map<std::string, mpq_class> parse_param_list(
    const std::vector<std::string>& kvs) {
  std::map<std::string, mpq_class> out;
  for (const std::string& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("--param expects name=value, got \"" + kv + "\"");
    out[kv.substr(0, eq)] = pavoid::parse_rational(kv.substr(eq + 1));
  }
  return out;
}

std::string opt_value_str(const pavoid::BoundValue& b) {
  return b.value ? pavoid::rational_to_string(*b.value) : "";
}

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch())
      .count();
}

const char* outcome_name(pavoid::StepOutcome o) {
  switch (o) {
    case pavoid::StepOutcome::stall: return "stall";
    case pavoid::StepOutcome::move: return "move";
    default: return "found";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forbidden-pattern workbench for binary and permutation matrices"};
  app.require_subcommand(1);
  app.fallthrough();  // inherited: lets --format/--threads/--seed follow the subcommand

  Options opt;
  if (const char* env = std::getenv("PAVOID_SEED")) {
    opt.seed = std::strtoull(env, nullptr, 10);
    opt.seed_given = true;
  }
  app.add_option("--format", opt.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", opt.threads, "worker thread cap")
      ->check(CLI::Range(1, 256));
  auto* seed_opt = app.add_option("--seed", opt.seed, "random seed (default: PAVOID_SEED)");

  // ---- contain ----
  auto* c_contain = app.add_subcommand("contain", "pattern containment test");
  std::string c_host, c_pattern;
  bool c_tight = false;
  c_contain->add_option("--host", c_host, "host matrix or permutation")->required();
  c_contain->add_option("--pattern", c_pattern, "pattern matrix or permutation")->required();
  c_contain->add_flag("--tight", c_tight, "restrict to k consecutive host rows");

  // ---- minor ----
  auto* c_minor = app.add_subcommand("minor", "interval-minor test");
  std::string m_host, m_pattern;
  c_minor->add_option("--host", m_host)->required();
  c_minor->add_option("--pattern", m_pattern)->required();

  // ---- construct ----
  auto* c_construct = app.add_subcommand(
      "construct", "emit a named matrix or permutation in the shared text format");
  std::string t_name, t_a, t_b;
  int t_k = 0, t_rows = 0;
  c_construct->add_option("--name", t_name,
                          "identity|reversal|cross|fox_grid|x_matrix|all_ones|"
                          "random|grid_product|direct_sum|skew_sum|minkowski_sum")
      ->required();
  c_construct->add_option("--k", t_k, "size parameter");
  c_construct->add_option("--rows", t_rows, "row count for all_ones");
  c_construct->add_option("--a", t_a, "first operand (file or inline)");
  c_construct->add_option("--b", t_b, "second operand (file or inline)");

  // ---- repetition ----
  auto* c_rep = app.add_subcommand("repetition", "distance-vector analysis");
  std::string r_input;
  int r_census = 0, r_mck = 0;
  long r_samples = 100000;
  bool r_hist = false;
  c_rep->add_option("--input", r_input, "permutation (file or inline)");
  c_rep->add_flag("--histogram", r_hist, "include the full distance histogram");
  c_rep->add_option("--census", r_census, "exhaustive census over all k! permutations");
  c_rep->add_option("--mc", r_mck, "Monte Carlo scattered fraction at size k");
  c_rep->add_option("--samples", r_samples, "Monte Carlo sample count");

  // ---- greedy ----
  auto* c_greedy = app.add_subcommand("greedy", "tight-occurrence column scan");
  std::string g_host, g_pattern;
  int g_trace = 0, g_k = 0, g_r = 0;
  bool g_robust = false, g_window = false;
  c_greedy->add_option("--host", g_host, "host matrix");
  c_greedy->add_option("--pattern", g_pattern, "permutation pattern");
  c_greedy->add_flag("--robust", g_robust, "trim worst rows/columns first (4k x 4k host)");
  c_greedy->add_option("--trace", g_trace, "emit the full trace of the instance at this base row");
  c_greedy->add_flag("--window-check", g_window, "aggregate-move window diagnostic");
  c_greedy->add_option("--k", g_k, "pattern size for parameter report");
  c_greedy->add_option("--r", g_r, "repetition-freeness for parameter report");

  // ---- extremal ----
  auto* c_ex = app.add_subcommand("extremal", "maximum avoider weight search");
  std::string e_pattern;
  int e_n = 0, e_z = 0, e_y = -1;
  std::uint64_t e_budget = pavoid::kDefaultNodeBudget;
  bool e_minor = false, e_series = false, e_transposed = false;
  c_ex->add_option("--pattern", e_pattern)->required();
  c_ex->add_option("--n", e_n, "host side length")->required();
  c_ex->add_flag("--minor", e_minor, "forbid as interval minor instead of submatrix");
  c_ex->add_flag("--series", e_series, "report sizes 1..n plus the ratio estimate");
  c_ex->add_option("--budget", e_budget, "node budget");
  c_ex->add_option("--z", e_z, "row-density mode: column count");
  c_ex->add_option("--y", e_y, "row-density mode: minimum ones per row");
  c_ex->add_flag("--transposed", e_transposed, "row-density mode on the transpose");

  // ---- count ----
  auto* c_count = app.add_subcommand("count", "pattern-avoiding permutation counts");
  std::string n_pattern;
  int n_n = 0;
  bool n_series = false;
  c_count->add_option("--pattern", n_pattern)->required();
  c_count->add_option("--n", n_n)->required();
  c_count->add_flag("--series", n_series, "sizes 1..n with growth-rate roots");

  // ---- bounds ----
  auto* c_bounds = app.add_subcommand("bounds", "bound formulas and recurrences");
  c_bounds->require_subcommand(1);
  auto* b_eval = c_bounds->add_subcommand("eval", "evaluate a catalog formula");
  std::string b_name;
  std::vector<std::string> b_params;
  b_eval->add_option("--name", b_name)->required();
  b_eval->add_option("--param", b_params, "name=value (rationals allowed)");
  auto* b_list = c_bounds->add_subcommand("list", "catalog names");
  auto* b_cascade = c_bounds->add_subcommand("cascade", "density-decay schedule");
  unsigned long bc_u = 0, bc_h = 0;
  std::string bc_q;
  long bc_imax = 32;
  b_cascade->add_option("--u", bc_u)->required();
  b_cascade->add_option("--q", bc_q)->required();
  b_cascade->add_option("--base", bc_h, "per-step bound base, reported as base^i")
      ->required();
  b_cascade->add_option("--imax", bc_imax);
  auto* b_rec = c_bounds->add_subcommand("recurrence", "two-parameter recurrence value");
  long br_r = 0, br_k = 0;
  unsigned long br_t = 0, br_s = 0;
  b_rec->add_option("--r", br_r)->required();
  b_rec->add_option("--k", br_k)->required();
  b_rec->add_option("--t", br_t)->required();
  b_rec->add_option("--s", br_s)->required();
  auto* b_step = c_bounds->add_subcommand("step", "one blow-up recursion step");
  std::string bs_sm1, bs_n, bs_t, bs_f, bs_g;
  long bs_tv = 0, bs_nv = 0;
  b_step->add_option("--ex-sm1", bs_sm1)->required();
  b_step->add_option("--ex-n", bs_n)->required();
  b_step->add_option("--ex-t", bs_t)->required();
  b_step->add_option("--f", bs_f)->required();
  b_step->add_option("--g", bs_g)->required();
  b_step->add_option("--t", bs_tv)->required();
  b_step->add_option("--n", bs_nv)->required();

  // ---- highdim ----
  auto* c_hd = app.add_subcommand("highdim", "d-dimensional permutation tools");
  c_hd->require_subcommand(1);
  auto* h_count = c_hd->add_subcommand("count", "avoider counts");
  std::string hc_pattern;
  int hc_n = 0;
  bool hc_all = false;
  h_count->add_option("--pattern", hc_pattern)->required();
  h_count->add_option("--n", hc_n)->required();
  h_count->add_flag("--all", hc_all, "count all 0/1 matrices, not just permutations");
  auto* h_contains = c_hd->add_subcommand("contains", "containment test");
  std::string hh_host, hh_pattern;
  h_contains->add_option("--host", hh_host)->required();
  h_contains->add_option("--pattern", hh_pattern)->required();
  auto* h_anti = c_hd->add_subcommand("antichain", "antichain probability");
  int ha_d = 0, ha_n = 0;
  long ha_samples = 0;
  h_anti->add_option("--d", ha_d)->required();
  h_anti->add_option("--n", ha_n)->required();
  h_anti->add_option("--samples", ha_samples, "Monte Carlo mode with this many samples");
  auto* h_mono = c_hd->add_subcommand("monotone", "monotone subpattern extraction");
  std::string hm_input;
  h_mono->add_option("--input", hm_input)->required();
  auto* h_merge = c_hd->add_subcommand("merge", "interleave chain-free parts");
  std::vector<std::string> hg_parts;
  h_merge->add_option("--part", hg_parts, "part (file or inline); repeatable")
      ->required();

  // ---- verify ----
  auto* c_verify = app.add_subcommand("verify", "self-verification suites");
  int v_id = 0;
  c_verify->add_option("--criterion", v_id, "run a single suite 1..10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ordered_json params;
  std::function<void(const CLI::App*)> collect = [&](const CLI::App* s) {
    for (const auto* o : s->get_options()) {
      if (!o->count() || o->get_name() == "--help") continue;
      const auto& rs = o->results();
      if (rs.empty())
        params[o->get_name()] = "true";
      else if (rs.size() == 1)
        params[o->get_name()] = rs[0];
      else
        params[o->get_name()] = rs;
    }
    for (const CLI::App* inner : s->get_subcommands()) collect(inner);
  };
  collect(&app);
  if (seed_opt->count()) opt.seed_given = true;

  double t0 = now_ms();
  int exit_code = 0;
  ordered_json results;
  std::string command;

  try {
    if (*c_contain) {
      command = "contain";
      pavoid::BinaryMatrix host = pavoid::as_binary_matrix(load_input(c_host));
      std::optional<pavoid::Embedding> emb;
      if (c_tight) {
        pavoid::Permutation pat = pavoid::as_permutation(load_input(c_pattern));
        emb = pavoid::find_tight_occurrence(host, pat);
        results["tight"] = true;
      } else {
        pavoid::BinaryMatrix pat = pavoid::as_binary_matrix(load_input(c_pattern));
        emb = pavoid::contains(host, pat);
      }
      results["contained"] = emb.has_value();
      if (emb) results["embedding"] = embedding_json(*emb);
      exit_code = emb ? 0 : 1;
    } else if (*c_minor) {
      command = "minor";
      pavoid::BinaryMatrix host = pavoid::as_binary_matrix(load_input(m_host));
      pavoid::BinaryMatrix pat = pavoid::as_binary_matrix(load_input(m_pattern));
      bool found = pavoid::is_interval_minor(pat, host);
      results["interval_minor"] = found;
      exit_code = found ? 0 : 1;
    } else if (*c_construct) {
      command = "construct";
      std::string text;
      if (t_name == "identity")
        text = pavoid::emit_text(pavoid::Permutation::identity(t_k));
      else if (t_name == "reversal")
        text = pavoid::emit_text(pavoid::Permutation::reversal(t_k));
      else if (t_name == "cross")
        text = pavoid::emit_text(pavoid::cross(t_k));
      else if (t_name == "fox_grid")
        text = pavoid::emit_text(pavoid::fox_grid(t_k));
      else if (t_name == "x_matrix")
        text = pavoid::emit_text(pavoid::x_matrix(t_k));
      else if (t_name == "all_ones")
        text = pavoid::emit_text(
            pavoid::all_ones_matrix(t_rows > 0 ? t_rows : t_k, t_k));
      else if (t_name == "random")
        text = pavoid::emit_text(pavoid::random_permutation(t_k, opt.seed));
      else if (t_name == "grid_product")
        text = pavoid::emit_text(
            pavoid::grid_product(pavoid::as_permutation(load_input(t_a)),
                                 pavoid::as_permutation(load_input(t_b))));
      else if (t_name == "direct_sum")
        text = pavoid::emit_text(
            pavoid::direct_sum(pavoid::as_binary_matrix(load_input(t_a)),
                               pavoid::as_binary_matrix(load_input(t_b))));
      else if (t_name == "skew_sum")
        text = pavoid::emit_text(
            pavoid::skew_sum(pavoid::as_binary_matrix(load_input(t_a)),
                             pavoid::as_binary_matrix(load_input(t_b))));
      else if (t_name == "minkowski_sum")
        text = pavoid::emit_text(
            pavoid::minkowski_sum(pavoid::as_binary_matrix(load_input(t_a)),
                                  pavoid::as_binary_matrix(load_input(t_b))));
      else
        throw std::invalid_argument("unknown construction: " + t_name);
      std::cout << text;  // raw shared format, no JSON envelope
      return 0;
    } else if (*c_rep) {
      command = "repetition";
      if (r_census > 0) {
        pavoid::FullCensus census = pavoid::full_census(r_census, opt.threads);
        results["k"] = census.k;
        results["with_repetition"] = census.with_repetition;
        results["per_vector_max"] = census.per_vector_max;
        results["scattered_count"] = census.scattered_count;
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < census.with_repetition.size(); ++i)
          rows.push_back(std::to_string(census.k) + "," + std::to_string(i + 1) +
                         "," + std::to_string(census.with_repetition[i]) + "," +
                         std::to_string(census.per_vector_max[i]));
        results["csv_header"] = "k,r,with_repetition,per_vector_max";
        results["csv_rows"] = rows;
      } else if (r_mck > 0) {
        pavoid::McEstimate est =
            pavoid::scattered_fraction_mc(r_mck, r_samples, opt.seed);
        results["k"] = r_mck;
        results["samples"] = est.samples;
        results["hits"] = est.hits;
        results["value"] = est.value;
        results["std_error"] = est.std_error;
      } else if (!r_input.empty()) {
        pavoid::Permutation p = pavoid::as_permutation(load_input(r_input));
        results["k"] = p.size();
        results["max_repetition"] = pavoid::max_repetition(p);
        results["scattered_threshold"] = pavoid::scattered_threshold(p.size());
        results["scattered"] = pavoid::is_scattered(p);
        if (r_hist) {
          ordered_json h = ordered_json::array();
          for (const auto& [vec, count] : pavoid::distance_histogram(p).counts) {
            ordered_json e;
            e["di"] = vec.first;
            e["dj"] = vec.second;
            e["count"] = count;
            h.push_back(e);
          }
          results["histogram"] = h;
        }
      } else {
        throw std::invalid_argument("repetition needs --input, --census or --mc");
      }
    } else if (*c_greedy) {
      command = "greedy";
      if (g_k > 0) {
        pavoid::RepfreeParams rp = pavoid::repfree_params(g_k, g_r > 0 ? g_r : 3);
        ordered_json pj;
        pj["w"] = rp.w;
        pj["v"] = rp.v;
        pj["per_line_zero_budget"] =
            pavoid::per_line_zero_budget(g_k, g_r > 0 ? g_r : 3);
        pj["total_zero_budget"] =
            pavoid::total_zero_budget(g_k, g_r > 0 ? g_r : 3);
        results["params"] = pj;
      }
      if (!g_host.empty()) {
        pavoid::BinaryMatrix host = pavoid::as_binary_matrix(load_input(g_host));
        pavoid::Permutation pat = pavoid::as_permutation(load_input(g_pattern));
        std::optional<pavoid::Embedding> emb;
        if (g_robust) {
          emb = pavoid::robust_find(host, pat);
        } else {
          emb = pavoid::find_tight_occurrence(host, pat);
          auto traces = pavoid::run_all_instances(host, pat);
          ordered_json found_rows = ordered_json::array();
          for (const auto& tr : traces)
            if (tr.found) found_rows.push_back(tr.base_row);
          results["instances"] = traces.size();
          results["found_base_rows"] = found_rows;
          if (g_window) {
            int w = g_k > 0 ? pavoid::repfree_params(g_k, g_r > 0 ? g_r : 3).w
                            : pavoid::repfree_params(pat.size(), 3).w;
            results["window_violation"] =
                pavoid::window_moves_violation(traces, pat.size(), w);
          }
          if (g_trace > 0) {
            if (static_cast<std::size_t>(g_trace) > traces.size())
              throw std::invalid_argument(
                  "--trace " + std::to_string(g_trace) + " out of range: host has " +
                  std::to_string(traces.size()) + " instances");
            const pavoid::InstanceTrace& tr = traces[g_trace - 1];
            ordered_json steps = ordered_json::array();
            ordered_json rows = ordered_json::array();
            int stepno = 0;
            for (const auto& st : tr.steps) {
              ordered_json sj;
              sj["column"] = st.column;
              sj["row"] = st.inspected_row;
              sj["outcome"] = outcome_name(st.outcome);
              steps.push_back(sj);
              rows.push_back(std::to_string(++stepno) + "," +
                             std::to_string(st.column) + "," +
                             std::to_string(st.inspected_row) + "," +
                             outcome_name(st.outcome));
            }
            results["trace"] = steps;
            results["csv_header"] = "step,column,row,outcome";
            results["csv_rows"] = rows;
          }
        }
        results["found"] = emb.has_value();
        if (emb) results["embedding"] = embedding_json(*emb);
        exit_code = emb ? 0 : 1;
      } else if (g_k == 0) {
        throw std::invalid_argument("greedy needs --host/--pattern or --k");
      }
    } else if (*c_ex) {
      command = "extremal";
      if (e_z > 0) {
        pavoid::Permutation p = pavoid::as_permutation(load_input(e_pattern));
        pavoid::RowDensityResult rd = pavoid::row_density_extremal(
            p, e_z, e_y >= 0 ? e_y : p.size(), e_transposed, e_budget);
        results["z"] = e_z;
        results["y"] = e_y >= 0 ? e_y : p.size();
        results["value"] = rd.value;
        results["status"] = pavoid::to_string(rd.status);
        results["nodes"] = rd.nodes_explored;
        if (rd.status != pavoid::SearchStatus::exact) exit_code = 3;
      } else if (e_minor) {
        pavoid::BinaryMatrix b = pavoid::as_binary_matrix(load_input(e_pattern));
        pavoid::ExtremalResult r = pavoid::exm_exact(e_n, b, e_budget);
        results["n"] = r.n;
        results["value"] = r.value;
        results["status"] = pavoid::to_string(r.status);
        results["nodes"] = r.nodes_explored;
        if (r.witness) results["witness"] = matrix_json(*r.witness);
        if (r.status != pavoid::SearchStatus::exact) exit_code = 3;
      } else {
        pavoid::Permutation p = pavoid::as_permutation(load_input(e_pattern));
        if (e_series) {
          ordered_json values = ordered_json::array();
          ordered_json rows = ordered_json::array();
          bool truncated = false;
          for (int n = 1; n <= e_n; ++n) {
            pavoid::ExtremalResult r = pavoid::ex_exact(n, p, e_budget);
            ordered_json v;
            v["n"] = n;
            v["value"] = r.value;
            v["status"] = pavoid::to_string(r.status);
            values.push_back(v);
            rows.push_back(std::to_string(n) + "," + std::to_string(r.value) +
                           "," + pavoid::to_string(r.status));
            truncated |= r.status != pavoid::SearchStatus::exact;
          }
          results["series"] = values;
          results["ratio_lower_bound"] = pavoid::rational_to_string(
              pavoid::fh_lower_estimate(p, e_n, e_budget));
          results["csv_header"] = "n,value,status";
          results["csv_rows"] = rows;
          if (truncated) exit_code = 3;
        } else {
          pavoid::ExtremalResult r = pavoid::ex_exact(e_n, p, e_budget);
          results["n"] = r.n;
          results["value"] = r.value;
          results["status"] = pavoid::to_string(r.status);
          results["nodes"] = r.nodes_explored;
          if (r.witness) results["witness"] = matrix_json(*r.witness);
          if (r.status != pavoid::SearchStatus::exact) exit_code = 3;
        }
      }
    } else if (*c_count) {
      command = "count";
      pavoid::Permutation p = pavoid::as_permutation(load_input(n_pattern));
      if (n_series) {
        pavoid::CountSeries s = pavoid::sw_estimate(p, n_n, opt.threads);
        ordered_json counts = ordered_json::array();
        ordered_json roots = ordered_json::array();
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < s.counts.size(); ++i) {
          counts.push_back(s.counts[i].get_str());
          roots.push_back(pavoid::rational_to_string(s.roots[i]));
          rows.push_back(std::to_string(i + 1) + "," + s.counts[i].get_str() +
                         "," + pavoid::rational_to_string(s.roots[i]));
        }
        results["pattern"] = p.to_text();
        results["counts"] = counts;
        results["roots"] = roots;
        results["growth_lower_bound"] = pavoid::rational_to_string(s.lower_bound);
        results["csv_header"] = "n,count,root";
        results["csv_rows"] = rows;
      } else {
        results["pattern"] = p.to_text();
        results["n"] = n_n;
        results["count"] = pavoid::count_avoiders(p, n_n, opt.threads).get_str();
      }
    } else if (*c_bounds) {
      command = "bounds";
      if (*b_eval) {
        pavoid::BoundValue b = pavoid::eval_bound(b_name, parse_param_list(b_params));
        results["name"] = b.name;
        ordered_json pj;
        for (const auto& [k, v] : b.params) pj[k] = v;
        results["params"] = pj;
        if (b.value) results["value"] = opt_value_str(b);
        results["log2"] = b.log2;
      } else if (*b_list) {
        results["catalog"] = pavoid::bound_catalog();
      } else if (*b_cascade) {
        pavoid::CascadeResult cr = pavoid::density_cascade(
            bc_u, pavoid::parse_rational(bc_q), bc_h, bc_imax);
        results["i0"] = cr.i0;
        ordered_json rows = ordered_json::array();
        ordered_json csv = ordered_json::array();
        for (const auto& row : cr.rows) {
          ordered_json rj;
          rj["i"] = row.i;
          rj["q"] = pavoid::rational_to_string(row.qi);
          rj["bound"] = row.bound.get_str();
          rows.push_back(rj);
          csv.push_back(std::to_string(row.i) + "," +
                        pavoid::rational_to_string(row.qi) + "," +
                        row.bound.get_str());
        }
        results["rows"] = rows;
        results["csv_header"] = "i,q,bound";
        results["csv_rows"] = csv;
      } else if (*b_rec) {
        pavoid::FrkResult f = pavoid::frk_recurrence(br_r, br_k, br_t, br_s);
        results["recurrence"] = f.recurrence.get_str();
        if (f.closed) results["closed"] = pavoid::rational_to_string(*f.closed);
        results["value"] = f.value.get_str();
      } else if (*b_step) {
        mpz_class v = pavoid::mt_recursion_step(
            mpz_class(bs_sm1), mpz_class(bs_n), mpz_class(bs_t),
            mpz_class(bs_f), mpz_class(bs_g), bs_tv, bs_nv);
        results["value"] = v.get_str();
      }
    } else if (*c_hd) {
      command = "highdim";
      auto load_dd = [](const std::string& arg) {
        pavoid::ParsedInput in = load_input(arg);
        if (const auto* dd = std::get_if<pavoid::DDimPermutation>(&in)) return *dd;
        return pavoid::DDimPermutation::from_layers({pavoid::as_permutation(in)});
      };
      if (*h_count) {
        pavoid::DDimPermutation pat = load_dd(hc_pattern);
        mpz_class n = hc_all ? pavoid::count_all_avoiders_dd(pat, hc_n)
                             : pavoid::count_avoiders_dd(pat, hc_n, opt.threads);
        results["d"] = pat.dim();
        results["n"] = hc_n;
        results["count"] = n.get_str();
      } else if (*h_contains) {
        pavoid::DDimPermutation host = load_dd(hh_host);
        pavoid::DDimPermutation pat = load_dd(hh_pattern);
        bool found = pavoid::contains_dd(host, pat);
        results["contained"] = found;
        exit_code = found ? 0 : 1;
      } else if (*h_anti) {
        if (ha_samples > 0) {
          pavoid::SplitMix64 gen(opt.seed);
          pavoid::McEstimate est =
              pavoid::antichain_probability_mc(ha_d, ha_n, ha_samples, gen);
          results["samples"] = est.samples;
          results["hits"] = est.hits;
          results["value"] = est.value;
          results["std_error"] = est.std_error;
        } else {
          results["probability"] = pavoid::rational_to_string(
              pavoid::antichain_probability_exact(ha_d, ha_n));
        }
      } else if (*h_mono) {
        pavoid::DDimPermutation p = load_dd(hm_input);
        pavoid::MonotoneSub ms = pavoid::monotone_subpattern(p);
        results["size"] = ms.sub.size();
        results["guarantee"] = pavoid::min_monotone_size(p.dim(), p.size());
        results["positions"] = ms.positions;
        results["sub"] = ms.sub.to_text();
      } else if (*h_merge) {
        std::vector<pavoid::DDimPermutation> parts;
        for (const std::string& s : hg_parts) parts.push_back(load_dd(s));
        pavoid::SplitMix64 gen(opt.seed);
        pavoid::DDimPermutation merged = pavoid::merge_avoiders_random(parts, gen);
        results["size"] = merged.size();
        results["text"] = merged.to_text();
      }
    } else if (*c_verify) {
      command = "verify";
      std::vector<pavoid::CriterionResult> crs;
      if (v_id > 0)
        crs.push_back(pavoid::run_criterion(v_id, opt.threads));
      else
        crs = pavoid::run_acceptance(opt.threads);
      bool all = true;
      ordered_json arr = ordered_json::array();
      for (const auto& cr : crs) {
        ordered_json cj;
        cj["id"] = cr.id;
        cj["name"] = cr.name;
        cj["pass"] = cr.pass;
        cj["detail"] = cr.detail;
        arr.push_back(cj);
        std::cerr << (cr.pass ? "PASS" : "FAIL") << " criterion " << cr.id
                  << " (" << cr.name << ") [" << cr.seconds << " s]: "
                  << cr.detail << "\n";
        all = all && cr.pass;
      }
      results["criteria"] = arr;
      results["all_pass"] = all;
      exit_code = all ? 0 : 1;
    }
  } catch (const pavoid::SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 3;
  } catch (const pavoid::UnavailableError& e) {
    std::cerr << "unavailable: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  print_report(opt, command, params, results, now_ms() - t0);
  return exit_code;
}
