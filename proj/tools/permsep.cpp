// permsep: construct, verify, and solve k-neighbor separated permutation families.

#include "permsep/bounds.hpp"
#include "permsep/constructions.hpp"
#include "permsep/io.hpp"
#include "permsep/merge.hpp"
#include "permsep/solver.hpp"
#include "permsep/strip.hpp"
#include "permsep/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using permsep::io::Json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kTimeLimit = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int default_jobs() {
  if (const char* env = std::getenv("PERMSEP_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 0) return j;
    } catch (const std::exception&) {
    }
    throw UsageError("PERMSEP_JOBS must be a non-negative integer");
  }
  return 0;
}

struct ConstructArgs {
  int n = 0;
  int ell = 1;
  int r = 2;
  int k = 4;
  std::size_t cap = 1'000'000;
  bool count_only = false;
  std::string out;
  std::string graphs_out;
};

void emit_family(const ConstructArgs& a, const Json& header,
                 std::span<const permsep::Permutation> members) {
  if (a.out.empty() || a.out == "-") {
    permsep::io::write_family(std::cout, header, members);
  } else {
    permsep::io::write_family_file(a.out, header, members);
  }
}

Json header_for(const std::string& name, Json params, std::size_t n, std::optional<int> k,
                std::size_t members) {
  return Json{{"construction", name},
              {"params", std::move(params)},
              {"n", n},
              {"k", k ? Json(*k) : Json(nullptr)},
              {"members", members}};
}

int run_simple(const std::string& name, const ConstructArgs& a, Json params,
               std::optional<int> k, const std::vector<permsep::Permutation>& fam) {
  const std::size_t n = fam.empty() ? 0 : fam.front().size();
  const Json header = header_for(name, std::move(params), n, k, fam.size());
  if (a.count_only) {
    std::cout << header.dump() << '\n';
  } else {
    emit_family(a, header, fam);
  }
  return kOk;
}

int construct_pow2(const ConstructArgs& a, int jobs) {
  permsep::Pow2Options opt;
  opt.cap = a.cap;
  opt.count_only = a.count_only;
  opt.jobs = jobs;
  const permsep::Pow2Result r = permsep::pow2_family(a.n, a.ell, opt);
  const Json params{{"n", a.n}, {"ell", a.ell}};
  if (a.count_only) {
    Json j{{"construction", "pow2"}, {"params", params}, {"k", r.k},
           {"n_prime", r.n_prime}, {"fresh", r.fresh}};
    j["stats"] = permsep::io::to_json(r.stats);
    std::cout << j.dump() << '\n';
    return kOk;
  }
  if (!a.graphs_out.empty()) {
    std::ofstream g(a.graphs_out);
    if (!g) throw std::runtime_error("cannot write " + a.graphs_out);
    for (const permsep::LabelledGraph& w : r.graphs) g << permsep::io::to_json(w).dump() << '\n';
  }
  emit_family(a, header_for("pow2", params, r.n_prime, r.k, r.family.size()), r.family);
  return kOk;
}

int construct_strip(const ConstructArgs& a, int jobs) {
  const permsep::StripParams p{a.r, a.k};
  p.validate();
  const Json params{{"r", a.r}, {"k", a.k}};
  const int claimed = p.side() + 1;
  const auto n = static_cast<std::size_t>(p.side()) * static_cast<std::size_t>(p.side());
  if (a.count_only) {
    Json j = header_for("strip", params, n, claimed, 0);
    j["members"] = permsep::to_string(permsep::pow2(p.edge_count()));
    std::cout << j.dump() << '\n';
    return kOk;
  }
  const std::vector<permsep::Permutation> fam = permsep::strip_family(p, jobs);
  emit_family(a, header_for("strip", params, n, claimed, fam.size()), fam);
  return kOk;
}

void add_construct(CLI::App& root, ConstructArgs& a, std::string& kind) {
  CLI::App* c = root.add_subcommand("construct", "build a family and write it as JSONL");
  c->add_option("kind", kind, "pow2 | pnn | pn2 | strip | balanced | decomp | cover")
      ->required()
      ->check(CLI::IsMember({"pow2", "pnn", "pn2", "strip", "balanced", "decomp", "cover"}));
  c->add_option("--n", a.n, "ground set size");
  c->add_option("--ell", a.ell, "pow2: k = 2^ell + 1");
  c->add_option("--r", a.r, "strip: path length");
  c->add_option("--k", a.k, "strip: base parameter (r divides k)");
  c->add_option("--cap", a.cap, "pow2: enumeration cap");
  c->add_flag("--count-only", a.count_only, "print counts instead of members");
  c->add_option("--out", a.out, "output file (default stdout)");
  c->add_option("--graphs-out", a.graphs_out, "pow2: also write the labelled graphs as JSONL");
}

int run_construct(const std::string& kind, const ConstructArgs& a, int jobs) {
  const Json nparam{{"n", a.n}};
  if (kind == "pow2") return construct_pow2(a, jobs);
  if (kind == "strip") return construct_strip(a, jobs);
  if (kind == "pnn") return run_simple(kind, a, nparam, a.n, permsep::pnn_family(a.n));
  if (kind == "pn2") return run_simple(kind, a, nparam, 2, permsep::fixed_edge_family(a.n));
  if (kind == "balanced") return run_simple(kind, a, nparam, std::nullopt, permsep::balanced_family(a.n));
  if (kind == "decomp") return run_simple(kind, a, nparam, std::nullopt, permsep::ham_decomposition(a.n));
  return run_simple(kind, a, nparam, std::nullopt, permsep::ham_cover(a.n));
}

struct VerifyArgs {
  std::optional<int> k;
  std::string mode = "exhaustive";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::string file;
};

int run_verify(const VerifyArgs& a, int jobs) {
  const permsep::io::FamilyFile f = permsep::io::read_family_file(a.file);
  int k = 0;
  if (a.k) {
    k = *a.k;
  } else if (f.header && f.header->contains("k") && (*f.header)["k"].is_number_integer()) {
    k = (*f.header)["k"].get<int>();
  } else {
    throw UsageError("--k is required when the file header does not name k");
  }
  const permsep::VerifyMode mode = a.mode == "exhaustive"
                                       ? permsep::VerifyMode::exhaustive()
                                       : permsep::VerifyMode::sampled(a.seed, a.samples);
  const permsep::FamilyReport r = permsep::verify_family(f.members, k, mode, jobs);
  Json j = permsep::io::to_json(r);
  j["k"] = k;
  std::cout << j.dump() << '\n';
  if (!r.ok) {
    const auto [i, jj] = *r.witness;
    const Json w{{"witness", Json::array({i, jj})},
                 {"first", f.members[i].seq()},
                 {"second", f.members[jj].seq()},
                 {"k", k}};
    std::cerr << w.dump() << '\n';
    return kViolation;
  }
  return kOk;
}

struct SolveArgs {
  int n = 0;
  int k = 0;
  std::optional<double> time_limit;
  bool long_run = false;
  bool parallel = false;
  bool no_symmetry = false;
  std::string witness_out;
  bool table = false;
  int n_max = 6;
  std::string k_rule = "all";
  bool tsv = false;
};

permsep::CliqueOptions solve_options(const SolveArgs& a, int largest_n, int jobs) {
  if (largest_n >= 7 && !a.long_run) {
    throw UsageError("n >= 7 needs --long-run (it can take up to an hour)");
  }
  permsep::CliqueOptions opt;
  opt.time_limit_seconds = a.time_limit ? *a.time_limit : (a.long_run ? 3600.0 : 60.0);
  opt.parallel = a.parallel;
  opt.jobs = jobs;
  opt.vertex_transitive = !a.no_symmetry;
  return opt;
}

int run_table(const SolveArgs& a, int jobs) {
  const permsep::CliqueOptions opt = solve_options(a, a.n_max, jobs);
  const std::vector<permsep::TableRow> rows =
      permsep::p_table(a.n_max, permsep::parse_k_rule(a.k_rule), opt);
  bool all_proven = true;
  if (a.tsv) {
    std::cout << "n\tk\tvalue\tproven_optimal\tformula\n";
    for (const auto& r : rows) {
      std::cout << r.n << '\t' << r.k << '\t' << r.value << '\t'
                << (r.proven_optimal ? "true" : "false") << '\t' << r.formula.value_or("") << '\n';
      all_proven = all_proven && r.proven_optimal;
    }
  } else {
    Json out = Json::array();
    for (const auto& r : rows) {
      out.push_back(Json{{"n", r.n}, {"k", r.k}, {"value", r.value},
                         {"proven_optimal", r.proven_optimal},
                         {"formula", r.formula ? Json(*r.formula) : Json(nullptr)}});
      all_proven = all_proven && r.proven_optimal;
    }
    std::cout << out.dump() << '\n';
  }
  return all_proven ? kOk : kTimeLimit;
}

int run_solve(const SolveArgs& a, int jobs) {
  if (a.table) return run_table(a, jobs);
  if (a.n == 0 || a.k == 0) throw UsageError("solve needs --n and --k (or --table)");
  const permsep::CliqueOptions opt = solve_options(a, a.n, jobs);
  const permsep::CompatibilityGraph g = permsep::build_graph(a.n, a.k, jobs);
  const permsep::CliqueResult r = permsep::max_clique(g, opt);
  Json j{{"n", a.n}, {"k", a.k}, {"candidates", g.size()}};
  const Json result = permsep::io::to_json(r);
  for (auto it = result.begin(); it != result.end(); ++it) j[it.key()] = it.value();
  std::cout << j.dump() << '\n';
  std::cerr << "solved in " << r.wall_seconds << " s\n";
  if (!a.witness_out.empty()) {
    std::vector<permsep::Permutation> fam;
    for (const std::size_t i : r.witness) fam.push_back(g.candidates()[i]);
    const Json header{{"construction", "solver"},
                      {"params", Json{{"n", a.n}, {"k", a.k}}},
                      {"n", a.n},
                      {"k", a.k},
                      {"members", fam.size()}};
    permsep::io::write_family_file(a.witness_out, header, fam);
  }
  return r.proven_optimal ? kOk : kTimeLimit;
}

// Family sizes are integers, so "value" is the floor; "exact" keeps the rational.
Json bound_json(const permsep::BoundValue& b) {
  const permsep::BigInt num = boost::multiprecision::numerator(b.exact);
  const permsep::BigInt den = boost::multiprecision::denominator(b.exact);
  Json j{{"value", permsep::to_string(num / den)}};
  if (den != 1) j["exact"] = permsep::to_string(num) + "/" + permsep::to_string(den);
  j["log2"] = b.log2;
  j["formula"] = b.formula;
  return j;
}

int run_bounds(int n, int k) {
  if (n < 2 || k < 2 || k > n) throw UsageError("bounds needs 2 <= k <= n");
  Json lower = Json::object();
  Json upper = Json::object();
  if (permsep::exact_formula_covers(n, k)) {
    const permsep::ExactValue e = permsep::exact_formulas(n, k);
    lower["exact_formula"] = Json{{"value", permsep::to_string(e.lo)}, {"formula", e.formula}};
    upper["exact_formula"] = Json{{"value", permsep::to_string(e.hi)}, {"formula", e.formula}};
  }
  const auto un = static_cast<unsigned>(n);
  upper["tuza_set_sizes"] = bound_json(permsep::tuza_bound(un - 1, un - static_cast<unsigned>(k) + 1));
  upper["tuza_4n"] = bound_json(permsep::tuza_bound(un, un));
  upper["tuza_4n"]["formula"] = "4^n";
  if (k >= 3) {
    upper["coloring"] = bound_json(permsep::coloring_count_bound(static_cast<std::size_t>(n), k));
    upper["coloring"]["exponent"] = permsep::coloring_exponent(k);
    upper["coloring"]["exponent_as_stated"] = permsep::coloring_exponent_as_stated(k);
  }
  std::cout << Json{{"n", n}, {"k", k}, {"lower_bounds", lower}, {"upper_bounds", upper}}.dump()
            << '\n';
  return kOk;
}

int run_stats(const std::string& file, int jobs) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file);
  const std::vector<permsep::LabelledGraph> graphs = permsep::io::read_labelled_graphs(in);
  Json j;
  j["stats"] = permsep::io::to_json(permsep::family_stats(graphs));
  j["compatibility"] = permsep::io::to_json(permsep::pairwise_compatible(graphs, jobs));
  std::cout << j.dump() << '\n';
  return j["compatibility"]["ok"].get<bool>() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-neighbor separated permutation families"};
  app.require_subcommand(1);
  int jobs = -1;
  app.add_option("--jobs", jobs, "worker threads (0 = all; env PERMSEP_JOBS)")->check(CLI::NonNegativeNumber);

  ConstructArgs construct;
  std::string kind;
  add_construct(app, construct, kind);

  VerifyArgs verify;
  CLI::App* v = app.add_subcommand("verify", "check a family JSONL for pairwise separation");
  v->add_option("--k", verify.k, "separation parameter (default: from the header)");
  v->add_option("--mode", verify.mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  v->add_option("--samples", verify.samples, "sampled mode: number of pairs");
  v->add_option("--seed", verify.seed, "sampled mode: seed");
  v->add_option("file", verify.file)->required();

  SolveArgs solve;
  CLI::App* s = app.add_subcommand("solve", "exact P(n,k) by maximum clique");
  s->add_option("--n", solve.n);
  s->add_option("--k", solve.k);
  s->add_option("--time-limit", solve.time_limit, "seconds");
  s->add_flag("--long-run", solve.long_run, "allow n >= 7 (default limit one hour)");
  s->add_flag("--parallel", solve.parallel, "split top-level branches across threads");
  s->add_flag("--no-symmetry", solve.no_symmetry, "search every clique, not only those through path 0");
  s->add_option("--witness-out", solve.witness_out, "write the clique as a family JSONL");
  s->add_flag("--table", solve.table, "tabulate P(n,k) for 3 <= n <= --n-max");
  s->add_option("--n-max", solve.n_max);
  s->add_option("--k-rule", solve.k_rule)->check(CLI::IsMember({"2", "3", "n", "all"}));
  s->add_flag("--tsv", solve.tsv, "table as TSV");

  int bn = 0;
  int bk = 0;
  CLI::App* b = app.add_subcommand("bounds", "closed-form bounds for P(n,k)");
  b->add_option("--n", bn)->required();
  b->add_option("--k", bk)->required();

  std::string stats_file;
  CLI::App* st = app.add_subcommand("stats", "family statistics of labelled graphs");
  st->add_option("file", stats_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const int j = jobs >= 0 ? jobs : default_jobs();
    if (app.got_subcommand("construct")) return run_construct(kind, construct, j);
    if (app.got_subcommand(v)) return run_verify(verify, j);
    if (app.got_subcommand(s)) return run_solve(solve, j);
    if (app.got_subcommand(b)) return run_bounds(bn, bk);
    return run_stats(stats_file, j);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
