// llshock: command-line front end.
//
// Exit codes: 0 success / relation holds, 1 relation does not hold or
// verification failed, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "llshock/llshock.hpp"

namespace {

using namespace llshock;

constexpr int kOk = 0;
constexpr int kDoesNotHold = 1;
constexpr int kInputError = 2;

void print(const Json& j) { std::cout << j.dump() << '\n'; }

struct DistArgs {
  double sigma = 1.0;
  double lambda = 0.0;
  std::vector<double> values;
  std::size_t n = 1;
  std::uint64_t seed = kDefaultSeed;
};

int run_dist(const CLI::App& dist, const DistArgs& a) {
  const LLParams params(a.sigma, a.lambda);
  const std::string query = dist.get_subcommands().front()->get_name();
  if (query == "sample") {
    Rng rng(a.seed);
    for (double v : ll_sample(params, rng, a.n)) print({{"sample", v}});
    return kOk;
  }
  if (a.values.empty()) throw std::invalid_argument(query + " needs at least one value");
  for (double x : a.values) {
    double y = 0.0;
    if (query == "pdf") {
      y = ll_pdf(params, x);
    } else if (query == "cdf") {
      y = ll_cdf(params, x);
    } else if (query == "survival") {
      y = ll_survival(params, x);
    } else {
      y = ll_quantile(params, x);
    }
    print({{query == "quantile" ? "q" : "x", x}, {query, y}});
  }
  return kOk;
}

struct MajorArgs {
  std::string first;
  std::string second;
};

int run_major(const std::string& kind, const MajorArgs& a) {
  auto need_second = [&] {
    if (a.second.empty()) throw std::invalid_argument(kind + " compares two operands");
  };
  MajorVerdict v;
  if (kind == "majorize" || kind == "weak-super" || kind == "weak-sub") {
    need_second();
    const auto x = parse_real_vec(a.first);
    const auto y = parse_real_vec(a.second);
    v = kind == "majorize"     ? majorizes(x, y)
        : kind == "weak-super" ? weakly_supermajorizes(x, y)
                               : weakly_submajorizes(x, y);
  } else if (kind == "row" || kind == "row-weak") {
    need_second();
    const auto ma = parse_param_matrix(a.first);
    const auto mb = parse_param_matrix(a.second);
    v = kind == "row" ? row_majorizes(ma, mb) : row_weakly_majorizes(ma, mb);
  } else if (kind == "doubly-stochastic") {
    v.holds = is_doubly_stochastic(parse_square_matrix(a.first));
  } else {
    v.holds = in_U_n(parse_param_matrix(a.first));
  }
  Json out = to_json(v);
  out["relation"] = kind;
  print(out);
  return v.holds ? kOk : kDoesNotHold;
}

struct OrderArgs {
  std::string x_path;
  std::string y_path;
  std::size_t grid = kDefaultGridInterior;
  double tol = kDefaultOrderTol;
  std::string csv;
  std::size_t mc = 0;
  std::uint64_t seed = kDefaultSeed;
};

int run_order(const OrderArgs& a) {
  const SystemSpec x = load_system(a.x_path);
  const SystemSpec y = load_system(a.y_path);
  const Grid grid = make_grid(a.grid);
  const OrderVerdict v = compare_st(x, y, grid, a.tol);
  Json out = to_json(v);
  if (!a.csv.empty()) {
    write_diff_csv(a.csv, cdf_difference(x, y, grid));
    out["csv"] = a.csv;
  }
  int code = kOk;
  if (a.mc > 0) {
    const OrderVerdict m = compare_st_mc(x, y, a.mc, a.seed, grid);
    Json mj = to_json(m);
    mj["draws"] = a.mc;
    mj["seed"] = a.seed;
    mj["agrees"] = m.outcome == v.outcome;
    out["monte_carlo"] = mj;
    if (m.outcome != v.outcome) code = kDoesNotHold;
  }
  print(out);
  return code;
}

struct VerifyArgs {
  std::string theorem;
  std::string h;
  std::size_t instances = 1000;
  std::size_t min_dim = 2;
  std::size_t max_dim = 6;
  std::size_t grid = kDefaultGridInterior;
  double tol = kDefaultOrderTol;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
};

int run_verify(const VerifyArgs& a) {
  const TheoremId id = parse_theorem_id(a.theorem);
  std::string h_name = a.h;
  if (h_name.empty()) {
    const auto need = required_monotonicity(id);
    h_name = need && *need == Monotonicity::kIncreasing ? "square" : "neg_log";
  }
  const HFunction h = builtin_h(h_name);
  VerifyOptions opt;
  opt.n_min = a.min_dim;
  opt.n_max = a.max_dim;
  opt.instances = a.instances;
  opt.tol = a.tol;
  opt.seed = a.seed;
  opt.jobs = a.jobs;
  const VerifyReport r = verify_theorem(id, h, make_grid(a.grid), opt);
  Json out = to_json(r);
  out["seed"] = a.seed;
  print(out);
  return r.pass ? kOk : kDoesNotHold;
}

struct FigureArgs {
  std::string id;
  std::string out;
  std::size_t grid = kDefaultGridInterior;
};

int run_figure(const FigureArgs& a) {
  const ExampleId id = parse_example_id(a.id);
  const auto table = counterexample(id, make_grid(a.grid));
  double lo = 0.0, hi = 0.0;
  for (const auto& pt : table) {
    lo = std::min(lo, pt.diff);
    hi = std::max(hi, pt.diff);
  }
  if (a.out == "-") {
    write_diff_csv(std::cout, table);
    return kOk;
  }
  write_diff_csv(a.out, table);
  print({{"id", a.id},
         {"difference", example_systems(id).survival_difference ? "survival_X - survival_Y" : "F_X - F_Y"},
         {"points", table.size()},
         {"min_diff", lo},
         {"max_diff", hi},
         {"out", a.out}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel systems of shocked log-Lindley components: distributions, majorization, stochastic order."};
  app.footer(
      "Exit codes: 0 success or relation holds, 1 relation fails or verification found violations, "
      "2 usage or input error.\nRandomized commands default to the master seed 0xC0FFEE (12648430).");
  app.require_subcommand(1);

  auto seed_opt = [](CLI::App* sub, std::uint64_t& seed) {
    sub->add_option("--seed", seed, "RNG seed, decimal or 0x-hex")->capture_default_str();
  };
  auto grid_opt = [](CLI::App* sub, std::size_t& grid) {
    sub->add_option("--grid", grid, "interior grid points (>= 16)")
        ->check(CLI::Range(std::size_t{16}, std::size_t{1} << 24))
        ->capture_default_str();
  };

  DistArgs dist_args;
  CLI::App* dist = app.add_subcommand("dist", "evaluate LL(sigma, lambda)");
  dist->add_option("--sigma", dist_args.sigma, "shape sigma > 0")->required();
  dist->add_option("--lambda", dist_args.lambda, "scale lambda >= 0")->required();
  dist->require_subcommand(1);
  for (const char* q : {"pdf", "cdf", "survival", "quantile"}) {
    CLI::App* sub = dist->add_subcommand(q, std::string("print ") + q + " values as JSON lines");
    sub->add_option("values", dist_args.values, std::string(q) == std::string("quantile") ? "probabilities" : "points");
  }
  CLI::App* sample = dist->add_subcommand("sample", "inverse-transform draws as JSON lines");
  sample->add_option("--n", dist_args.n, "number of draws")->capture_default_str();
  seed_opt(sample, dist_args.seed);

  MajorArgs major_args;
  std::string major_kind;
  CLI::App* major = app.add_subcommand("major", "majorization predicates on JSON vectors or 2-row matrices");
  major->add_option("kind", major_kind, "relation")
      ->required()
      ->check(CLI::IsMember({"majorize", "weak-super", "weak-sub", "row", "row-weak", "doubly-stochastic", "in-un"}));
  major->add_option("first", major_args.first, "JSON vector, [[top],[bottom]] matrix or square matrix")->required();
  major->add_option("second", major_args.second, "second operand of binary relations");

  OrderArgs order_args;
  CLI::App* order = app.add_subcommand("order", "usual stochastic order between two parallel systems");
  order->add_option("x", order_args.x_path, "system X spec {\"sigma\":[],\"lambda\":[],\"p\":[]}")->required();
  order->add_option("y", order_args.y_path, "system Y spec")->required();
  grid_opt(order, order_args.grid);
  order->add_option("--tol", order_args.tol, "tolerance on F_X - F_Y")->capture_default_str();
  order->add_option("--csv", order_args.csv, "also write the x,diff table here");
  order->add_option("--mc", order_args.mc, "Monte Carlo cross-check with this many draws (>= 10000)");
  seed_opt(order, order_args.seed);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "randomized sweep of one theorem branch");
  verify->set_help_flag("--help", "print this help message and exit");  // frees the h for --h
  verify->add_option("--theorem", verify_args.theorem, "T3_1i T3_1ii T3_2 T3_2i T3_2ii T3_3 T3_4 T3_5i T3_5ii")
      ->required();
  verify->add_option("--h", verify_args.h, "neg_log, square or exp (default: square if h must increase, else neg_log)");
  verify->add_option("--instances,--n", verify_args.instances, "instances to generate")->capture_default_str();
  verify->add_option("--min-dim", verify_args.min_dim, "smallest system size")->capture_default_str();
  verify->add_option("--max-dim", verify_args.max_dim, "largest system size")->capture_default_str();
  grid_opt(verify, verify_args.grid);
  verify->add_option("--tol", verify_args.tol, "order tolerance")->capture_default_str();
  seed_opt(verify, verify_args.seed);
  verify->add_option("--jobs", verify_args.jobs, "worker threads; output does not depend on it")
      ->capture_default_str();

  FigureArgs figure_args;
  CLI::App* figure = app.add_subcommand("figure", "difference table of a worked example as x,diff CSV");
  figure->add_option("--id", figure_args.id, "CE3_1, CE3_2a or CE3_2b")->required();
  figure->add_option("--out", figure_args.out, "output CSV path, - for stdout")->required();
  grid_opt(figure, figure_args.grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (dist->parsed()) return run_dist(*dist, dist_args);
    if (major->parsed()) return run_major(major_kind, major_args);
    if (order->parsed()) return run_order(order_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (figure->parsed()) return run_figure(figure_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
