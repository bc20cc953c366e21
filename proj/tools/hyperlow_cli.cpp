// Command-line front end: decision procedures, expansions, the module
// oracle, reachability and the verification batteries.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "hyperlow/battery.hpp"
#include "hyperlow/criteria.hpp"
#include "hyperlow/generator.hpp"
#include "hyperlow/modrep.hpp"
#include "hyperlow/render.hpp"
#include "hyperlow/symbolic.hpp"

using namespace hyperlow;
using nlohmann::json;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInvalid = 2;

struct Args {
  int p = 0;
  int n = 0;
  std::string lambda;
  std::string mu;
  int i = 0;
  int j = 0;
  int d = 0;
  std::string M;
  std::string C;
  std::string K;
  std::string L;
  std::string R = "1";
  std::string mode;
  std::string format = "text";
  std::string what = "T";
  std::uint64_t seed = 20240611;
  int jobs = 1;
  std::size_t count = 500;
  bool inject_fault = false;
};

std::vector<int> parse_list(const std::string& text) {
  std::string t = text;
  for (char& ch : t) {
    if (ch == '{' || ch == '}') ch = ' ';
  }
  return parse_weight(t).entries();
}

std::vector<long> parse_long_list(const std::string& text) {
  auto v = parse_list(text);
  return {v.begin(), v.end()};
}

bool json_out(const Args& a) { return a.format == "json"; }

void emit(const Args& a, const json& j, const std::string& text) {
  if (json_out(a)) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

BranchContext context(const Args& a) {
  BranchContext ctx{parse_weight(a.lambda), parse_weight(a.mu), a.p};
  ctx.validate();
  return ctx;
}

int run_check(const Args& a) {
  CriterionQuery q{context(a), a.i, a.j, a.d, parse_list(a.M)};
  CriterionVerdict v = check(q);
  emit(a, to_json(q, v), render_text(q, v));
  return v.holds ? kHolds : kFails;
}

int run_exists(const Args& a) {
  BranchContext ctx = context(a);
  json out = envelope("exists-m");
  out["lambda"] = to_json(ctx.lambda);
  out["mu"] = to_json(ctx.mu);
  out["p"] = ctx.p;
  out["i"] = a.i;
  out["j"] = a.j;
  out["d"] = a.d;
  std::string text;
  bool found = false;
  if (a.j == ctx.n()) {
    auto r = exists_m_terminal(ctx, a.i, a.d);
    found = r.has_value();
    if (r) {
      out["M"] = r->M;
      out["epsilon"] = to_json(r->epsilon);
      out["gamma"] = to_json(r->gamma);
      text = "M = " + format_columns(r->M) + "\ngamma: " + format_gamma(r->gamma) + "\n";
    }
  } else {
    InnerMode mode = a.mode == "cones" ? InnerMode::Cones : InnerMode::Injections;
    if (!a.mode.empty() && a.mode != "cones" && a.mode != "injections") {
      throw PreconditionError("--mode must be injections or cones");
    }
    auto r = exists_m_inner(ctx, a.i, a.j, a.d, mode);
    found = r.has_value();
    if (r) {
      out["M"] = r->M;
      out["epsilon"] = to_json(r->epsilon);
      if (r->tau) out["tau"] = to_json(*r->tau);
      text = "M = " + format_columns(r->M) + "\n";
    }
  }
  out["found"] = found;
  if (!found) text = "no M\n";
  emit(a, out, text);
  return found ? kHolds : kFails;
}

int run_expand(const Args& a) {
  auto M = parse_list(a.M);
  LoweringElement T = a.what == "S" ? expand_S_power(a.i, a.j, a.d)
                                    : expand_T(a.i, a.j, a.d, M);
  json out = envelope("expand");
  out["i"] = a.i;
  out["j"] = a.j;
  out["d"] = a.d;
  out["M"] = M;
  out["terms"] = to_json(T);
  emit(a, out, T.str());
  return kHolds;
}

int run_rho(const Args& a) {
  auto C = parse_long_list(a.C);
  auto K = parse_list(a.K);
  auto L = parse_long_list(a.L);
  auto M = parse_list(a.M);
  if (K.empty()) throw PreconditionError("--K is required");
  if (L.empty()) L.assign(K.size(), 0);
  RationalTag R = parse_rational_tag(a.R);
  Polynomial f = rho(C, a.i, a.j, K, L, M, R);
  json out = envelope("rho");
  out["C"] = C;
  out["i"] = a.i;
  out["j"] = a.j;
  out["K"] = K;
  out["L"] = L;
  out["M"] = M;
  out["R"] = rational_tag_name(R);
  out["polynomial"] = f.str();
  std::string text = f.str() + "\n";
  if (!a.lambda.empty() && a.p) {
    int v = evaluate_mod_p(f, parse_weight(a.lambda), a.p);
    out["value_mod_p"] = v;
    text += "at " + a.lambda + " mod " + std::to_string(a.p) + ": " + std::to_string(v) + "\n";
  }
  emit(a, out, text);
  return kHolds;
}

int run_oracle(const Args& a) {
  Weight lam = parse_weight(a.lambda);
  auto weyl = build_weyl(lam, a.p);
  auto simple = simple_quotient(weyl);
  auto nabla = dual_realization(weyl);
  std::set<Weight> normal;
  for (const auto& hw : high_weight_vectors(*simple)) normal.insert(hw.weight.truncated());
  json out = envelope("oracle");
  out["lambda"] = to_json(lam);
  out["p"] = a.p;
  out["dim_weyl"] = as_realization(weyl)->dimension();
  out["dim_simple"] = simple->dimension();
  json nw = json::array();
  std::string text = "dim Weyl: " + std::to_string(as_realization(weyl)->dimension()) +
                     "\ndim simple: " + std::to_string(simple->dimension()) +
                     "\nnormal weights:";
  for (const auto& w : normal) {
    nw.push_back(to_json(w));
    text += " " + w.str();
  }
  text += "\n";
  out["normal_weights"] = nw;
  int code = kHolds;
  if (!a.mu.empty() && a.i && a.j && a.d) {
    Weight mu = parse_weight(a.mu);
    auto M = parse_list(a.M);
    ModuleVector v = apply_lowering(*nabla, expand_T(a.i, a.j, a.d, M),
                                    normalized_f(*nabla, mu));
    bool high = is_high_weight_vector(*nabla, v);
    Fp c = cf(*nabla, v);
    out["query"] = {{"mu", to_json(mu)}, {"i", a.i}, {"j", a.j}, {"d", a.d},
                    {"M", M}, {"nonzero_high", high}, {"cf", c}};
    text += std::string("T f: ") + (high ? "nonzero high weight vector" : "not a nonzero high weight vector") +
            ", cf = " + std::to_string(c) + "\n";
    code = high ? kHolds : kFails;
  }
  emit(a, out, text);
  return code;
}

int run_reach(const Args& a) {
  ReachReport r = reach_report(parse_weight(a.lambda), a.p);
  emit(a, to_json(r), render_text(r));
  return kHolds;
}

int run_table1(const Args& a) {
  std::vector<std::pair<int, int>> cells;
  if (a.p && a.n) {
    cells.emplace_back(a.p, a.n);
  } else {
    cells = {{3, 2}, {3, 3}, {3, 4}, {5, 3}};
  }
  json rows = json::array();
  std::string text = table1_header() + "\n";
  for (auto [p, n] : cells) {
    Table1Entry e = table1_entry(p, n, a.jobs);
    text += table1_row(e) + "\n";
    rows.push_back({{"p", p}, {"n", n}, {"max", e.max_count},
                    {"argmax_lambda", to_json(e.argmax)}, {"elapsed_ms", e.elapsed_ms}});
  }
  json out = envelope("table1");
  out["rows"] = rows;
  emit(a, out, text);
  return kHolds;
}

int run_verify(const Args& a) {
  int n = a.n ? a.n : 3;
  int p = a.p ? a.p : 3;
  std::vector<BatteryResult> results;
  auto exhaustive = exhaustive_instances(p, n);
  results.push_back(criteria_vs_oracle(
      exhaustive, a.inject_fault ? Fault::FlipOneVerdict : Fault::None));
  results.push_back(cf_bridge(exhaustive));
  results.push_back(integrality_sweep(std::min(n + 1, 5), 2, a.seed));
  results.push_back(matching_vs_hall(a.count, a.seed));
  json out = envelope("verify");
  json arr = json::array();
  std::string text;
  bool ok = true;
  for (const auto& r : results) {
    arr.push_back(to_json(r));
    text += render_text(r);
    ok = ok && r.passed();
  }
  out["batteries"] = arr;
  out["passed"] = ok;
  emit(a, out, text);
  return ok ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized lowering operators: criteria, expansions and oracle"};
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", a.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto weights = [&](CLI::App* sub, bool need_mu) {
    sub->add_option("--p", a.p, "prime")->required();
    sub->add_option("--lambda", a.lambda, "dominant weight, e.g. 3,1,0")->required();
    auto* mu = sub->add_option("--mu", a.mu, "interlacing weight, e.g. 3,0");
    if (need_mu) mu->required();
  };
  auto indices = [&](CLI::App* sub, bool required) {
    auto* i = sub->add_option("--i", a.i, "first index");
    auto* j = sub->add_option("--j", a.j, "last index");
    auto* d = sub->add_option("--d", a.d, "divided power, 1 <= d < p");
    if (required) {
      i->required();
      j->required();
      d->required();
    }
  };

  auto* check_cmd = app.add_subcommand("check", "decide whether T f is a nonzero high weight vector");
  weights(check_cmd, true);
  indices(check_cmd, true);
  check_cmd->add_option("--M", a.M, "subset of (i..j), e.g. 2,3");
  check_cmd->add_option("--n", a.n, "rank (taken from lambda)");
  common(check_cmd);

  auto* exists_cmd = app.add_subcommand("exists-m", "search for some M making T f nonzero and high");
  weights(exists_cmd, true);
  indices(exists_cmd, true);
  exists_cmd->add_option("--mode", a.mode, "injections (default) or cones");
  common(exists_cmd);

  auto* expand_cmd = app.add_subcommand("expand", "expand T_{i,j}^{(d)}(M,1) in the PBW basis");
  indices(expand_cmd, true);
  expand_cmd->add_option("--M", a.M, "subset of (i..j)");
  expand_cmd->add_option("--what", a.what, "T (default) or S for S_{i,j}^d")
      ->check(CLI::IsMember({"T", "S"}));
  common(expand_cmd);

  auto* rho_cmd = app.add_subcommand("rho", "compute the rho polynomial");
  rho_cmd->add_option("--C", a.C, "c_1..c_{n-1}")->required();
  rho_cmd->add_option("--i", a.i)->required();
  rho_cmd->add_option("--j", a.j)->required();
  rho_cmd->add_option("--K", a.K, "weakly increasing, entries in [i..j]")->required();
  rho_cmd->add_option("--L", a.L, "length d or d+1 (default zeros)");
  rho_cmd->add_option("--M", a.M, "subset of (i..j)");
  rho_cmd->add_option("--R", a.R, "1, zeta-d or zeta-d-1");
  rho_cmd->add_option("--lambda", a.lambda, "evaluate at this weight");
  rho_cmd->add_option("--p", a.p, "reduce the value mod p");
  common(rho_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force module computation over F_p");
  weights(oracle_cmd, false);
  indices(oracle_cmd, false);
  oracle_cmd->add_option("--M", a.M, "subset of (i..j)");
  common(oracle_cmd);

  auto* reach_cmd = app.add_subcommand("reach", "weights reached from lambda-bar");
  reach_cmd->add_option("--p", a.p)->required();
  reach_cmd->add_option("--lambda", a.lambda)->required();
  reach_cmd->add_option("--jobs", a.jobs);
  common(reach_cmd);

  auto* table_cmd = app.add_subcommand("table1", "max count of weights missed by d = 1");
  table_cmd->add_option("--p", a.p);
  table_cmd->add_option("--n", a.n);
  table_cmd->add_option("--jobs", a.jobs, "worker threads (HYPERLOW_JOBS overrides)");
  common(table_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run the verification batteries");
  verify_cmd->add_option("--p", a.p, "prime for the exhaustive battery (default 3)");
  verify_cmd->add_option("--n", a.n, "rank for the exhaustive battery (default 3)");
  verify_cmd->add_option("--seed", a.seed);
  verify_cmd->add_option("--count", a.count, "matching instances");
  verify_cmd->add_option("--jobs", a.jobs);
  verify_cmd->add_flag("--inject-fault", a.inject_fault, "flip one verdict to test the harness");
  common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    if (check_cmd->parsed()) return run_check(a);
    if (exists_cmd->parsed()) return run_exists(a);
    if (expand_cmd->parsed()) return run_expand(a);
    if (rho_cmd->parsed()) return run_rho(a);
    if (oracle_cmd->parsed()) return run_oracle(a);
    if (reach_cmd->parsed()) return run_reach(a);
    if (table_cmd->parsed()) return run_table1(a);
    if (verify_cmd->parsed()) return run_verify(a);
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return kInvalid;
}
