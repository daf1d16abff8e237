// frob: Frobenius numbers and Sylvester statistics from the command line.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frob/closed_forms.hpp"
#include "frob/ct.hpp"
#include "frob/errors.hpp"
#include "frob/fx.hpp"
#include "frob/grid.hpp"
#include "frob/nr_engine.hpp"
#include "frob/oracle.hpp"
#include "frob/verify.hpp"

using namespace frob;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

FamilySpec spec_from(const std::string& family, const std::string& params) {
  FamilySpec spec{parse_family(family), {}};
  for (const auto& ax : parse_grid(params)) {
    if (ax.lo != ax.hi) throw DomainError("--params takes single values, got a range for " + ax.name);
    spec.params[ax.name] = ax.lo;
  }
  const auto& info = family_info(spec.tag);
  for (const auto& p : info.params)
    if (!spec.params.count(p)) {
      if (p == "h" || p == "d") spec.params[p] = 1;
      else throw DomainError("family " + info.name + " needs parameter " + p);
    }
  return spec;
}

std::string join_map(const std::map<unsigned, Int>& m) {
  std::string s;
  for (const auto& [k, v] : m) s += (s.empty() ? "" : " ") + std::to_string(k) + ":" + to_string(v);
  return s;
}

void print_bundle(std::ostream& os, const StatBundle& b) {
  auto f = [](const std::optional<Int>& v) { return v ? to_string(*v) : std::string("NA"); };
  os << "[" << b.engine << "] g=" << f(b.g) << " n=" << f(b.n) << " s=" << f(b.s) << "\n";
  if (!b.s_mu.empty()) os << "  s_mu     " << join_map(b.s_mu) << "\n";
  if (!b.shat_mu.empty()) os << "  shat_mu  " << join_map(b.shat_mu) << "\n";
  for (const auto& [lam, m] : b.s_mu_lambda) {
    os << "  s_mu^(" << to_string(lam) << ")";
    for (const auto& [mu, v] : m) os << " " << mu << ":" << to_string(v);
    os << "\n";
  }
  for (const auto& n : b.notes) os << "  note: " << n << "\n";
}

struct ComputeArgs {
  std::string tuple, family, params, engine = "nr";
  unsigned mu = 0;
  std::vector<std::string> lambdas;
  bool json = false, check = false;
};

int cmd_compute(const ComputeArgs& args) {
  if (args.tuple.empty() == args.family.empty()) throw DomainError("give exactly one of --tuple or --family");
  std::vector<Rational> lambdas;
  for (const auto& l : args.lambdas) lambdas.push_back(parse_rational(l));
  for (const auto& l : lambdas)
    if (l == 0 || l == 1) throw DomainError("lambda must not be 0 or 1");

  std::optional<FamilySpec> spec;
  std::optional<Tuple> A;
  if (!args.family.empty()) {
    spec = spec_from(args.family, args.params);
    A = family_tuple(*spec);
  } else {
    A = Tuple::parse(args.tuple);
  }
  const unsigned mu = args.mu;

  auto run_nr = [&] {
    auto T = compute_nr(*A);
    auto b = stats_from_nr(T, mu);
    b.tuple = A->elements();
    // Weighted sums: the residue table alone does not give them, the CT pipeline does.
    if (!lambdas.empty()) b.s_mu_lambda = stats_via_ct(fx_from_table(T), A->modulus(), std::max(mu, 1u), lambdas).s_mu_lambda;
    return b;
  };
  auto run_oracle = [&] {
    auto b = oracle_stats(*A, mu, lambdas);
    return b;
  };
  auto run_ct = [&] {
    RationalTermSum f = spec ? fx_family(*spec) : fx_from_table(compute_nr(*A));
    auto b = stats_via_ct(f, A->modulus(), mu, lambdas);
    b.tuple = A->elements();
    // g = deg f - a; left out when f is too wide to expand
    try {
      b.g = expand_to_polynomial(f).rbegin()->first - A->modulus();
    } catch (const ResourceError&) {
      b.notes.push_back("g not derived: f(x) too wide to expand");
    }
    return b;
  };

  std::vector<StatBundle> bundles;
  const std::string& e = args.engine;
  if (spec) {
    auto b = evaluate_family(*spec, mu);
    b.tuple = A->elements();
    bundles.push_back(b);
  }
  if (e == "nr") bundles.push_back(run_nr());
  else if (e == "oracle") bundles.push_back(run_oracle());
  else if (e == "ct") bundles.push_back(run_ct());
  else if (e == "all") {
    bundles.push_back(run_nr());
    bundles.push_back(run_oracle());
    bundles.push_back(run_ct());
  } else {
    throw DomainError("unknown engine '" + e + "' (nr, oracle, ct, all)");
  }
  if (args.check && e != "all" && e != "oracle") bundles.push_back(run_oracle());

  std::vector<std::string> disagreements;
  for (std::size_t i = 0; i < bundles.size(); ++i)
    for (std::size_t j = i + 1; j < bundles.size(); ++j)
      for (const auto& line : compare_bundles(bundles[i], bundles[j]))
        disagreements.push_back(bundles[i].engine + " vs " + bundles[j].engine + ": " + line);

  if (args.json) {
    if (bundles.size() == 1) {
      std::cout << to_json(bundles.front()).dump(2) << "\n";
    } else {
      json arr = json::array();
      for (const auto& b : bundles) arr.push_back(to_json(b));
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    std::cout << "tuple " << A->str() << "\n";
    for (const auto& b : bundles) print_bundle(std::cout, b);
    if (bundles.size() > 1) {
      if (disagreements.empty()) std::cout << "agreement: all " << bundles.size() << " engines agree\n";
      for (const auto& d : disagreements) std::cout << "DISAGREEMENT " << d << "\n";
    }
  }
  return disagreements.empty() ? kOk : kMismatch;
}

struct VerifyArgs {
  std::string family, grid;
  unsigned parallel = 1, mu = 3;
  bool oracle = false, no_ct = false, no_appendix_guards = false;
};

int cmd_verify(const VerifyArgs& args) {
  const auto tag = parse_family(args.family);
  VerifyOptions opts;
  opts.threads = args.parallel;
  opts.max_mu = args.mu;
  opts.oracle = args.oracle;
  opts.ct = !args.no_ct;
  opts.fx_appendix_guards = !args.no_appendix_guards;
  const auto rep = verify_family(tag, parse_grid(args.grid), opts);
  std::cout << "family " << args.family << ": " << rep.points << " grid points, " << rep.instances
            << " instances, " << rep.passed << " passed, " << rep.failed << " failed"
            << " (ct checked " << rep.ct_checked << ", oracle checked " << rep.oracle_checked << ")\n";
  if (rep.instances == 0) std::cout << "warning: 0 instances satisfy the family's guards\n";
  if (!rep.failures.empty()) std::cout << "first counterexample: " << describe_failure(rep.failures.front()) << "\n";
  bool resource = false;
  for (const auto& f : rep.failures)
    if (f.outcome == Outcome::Error && f.detail.find("cap") != std::string::npos) resource = true;
  if (rep.ok()) return kOk;
  return resource ? kResource : kMismatch;
}

struct TableArgs {
  std::string family, range, cols = "g,n,s";
};

int cmd_table(const TableArgs& args) {
  const auto tag = parse_family(args.family);
  const auto& info = family_info(tag);
  std::vector<std::string> cols;
  {
    std::stringstream ss(args.cols);
    for (std::string c; std::getline(ss, c, ',');)
      if (!c.empty()) cols.push_back(c);
  }
  unsigned max_mu = 0;
  for (const auto& c : cols) {
    if (c == "g" || c == "n" || c == "s" || c == "tuple") continue;
    if (c.rfind("s_mu", 0) == 0 && c.size() > 4) {
      max_mu = std::max(max_mu, static_cast<unsigned>(std::stoul(c.substr(4))));
      continue;
    }
    throw DomainError("unknown column '" + c + "' (g, n, s, tuple, s_mu<k>)");
  }
  const auto specs = family_grid(tag, parse_grid(args.range));
  std::cout << [&] {
    std::string h;
    for (const auto& p : info.params) h += p + "\t";
    for (std::size_t i = 0; i < cols.size(); ++i) h += cols[i] + (i + 1 < cols.size() ? "\t" : "");
    return h;
  }() << "\n";
  for (const auto& spec : specs) {
    StatBundle b;
    try {
      b = evaluate_family(spec, max_mu);
    } catch (const PreconditionError&) {
      continue;
    }
    std::string row;
    for (const auto& p : info.params) row += to_string(spec.at(p)) + "\t";
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto& c = cols[i];
      std::string cell = "NA";
      auto opt = [](const std::optional<Int>& v) { return v ? to_string(*v) : std::string("NA"); };
      if (c == "g") cell = opt(b.g);
      else if (c == "n") cell = opt(b.n);
      else if (c == "s") cell = opt(b.s);
      else if (c == "tuple") cell = Tuple(b.tuple).str();
      else {
        const auto k = static_cast<unsigned>(std::stoul(c.substr(4)));
        if (b.s_mu.count(k)) cell = to_string(b.s_mu.at(k));
      }
      row += cell + (i + 1 < cols.size() ? "\t" : "");
    }
    std::cout << row << "\n";
  }
  return kOk;
}

int cmd_families() {
  for (const auto& f : family_registry()) {
    std::cout << f.name << "\t";
    for (std::size_t i = 0; i < f.params.size(); ++i) std::cout << (i ? "," : "") << f.params[i];
    std::cout << "\t" << f.generators << "\t" << f.provides << (f.has_fx ? "\tf(x)" : "") << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius numbers and Sylvester statistics"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "statistics of a tuple or a family instance");
  compute->add_option("--tuple", ca.tuple, "comma-separated generators, e.g. 5,16,19,22");
  compute->add_option("--family", ca.family, "closed-form family (see `frob families`)");
  compute->add_option("--params", ca.params, "family parameters, e.g. a=5,h=2,d=1");
  compute->add_option("--mu", ca.mu, "highest power for s_mu and binomial moments");
  compute->add_option("--lambda", ca.lambdas, "weight for s_mu^(lambda); repeatable, rationals like 1/2")
      ->allow_extra_args(false);
  compute->add_option("--engine", ca.engine, "nr | oracle | ct | all");
  compute->add_flag("--json", ca.json, "emit JSON");
  compute->add_flag("--check", ca.check, "cross-check against the brute-force oracle");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "sweep a family grid: closed form vs engines");
  verify->add_option("--family", va.family)->required();
  verify->add_option("--grid", va.grid, "e.g. a=3..60,h=1..3,d=1..3,j=4..8")->required();
  verify->add_option("--parallel", va.parallel, "worker threads");
  verify->add_option("--mu", va.mu, "highest power compared");
  verify->add_flag("--oracle", va.oracle, "also compare with the brute-force oracle");
  verify->add_flag("--no-ct", va.no_ct, "skip the f(x)/constant-term pipeline");
  verify->add_flag("--no-appendix-guards", va.no_appendix_guards, "build f(x) even where only the theorem guards hold");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "TSV of closed-form statistics over a parameter range");
  table->add_option("--family", ta.family)->required();
  table->add_option("--param-range", ta.range)->required();
  table->add_option("--cols", ta.cols, "g,n,s,tuple,s_mu<k>");

  std::string nr_tuple;
  auto* nr = app.add_subcommand("nr", "residue table N_r as JSON");
  nr->add_option("--tuple", nr_tuple)->required();

  std::string fx_tuple, fx_family_name, fx_params;
  auto* fx = app.add_subcommand("fx", "f(x) as a JSON rational-term sum");
  fx->add_option("--tuple", fx_tuple);
  fx->add_option("--family", fx_family_name);
  fx->add_option("--params", fx_params);

  app.add_subcommand("families", "list closed-form families and their parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) return cmd_compute(ca);
    if (*verify) return cmd_verify(va);
    if (*table) return cmd_table(ta);
    if (*nr) {
      std::cout << to_json(compute_nr(Tuple::parse(nr_tuple))).dump() << "\n";
      return kOk;
    }
    if (*fx) {
      if (fx_tuple.empty() == fx_family_name.empty()) throw DomainError("give exactly one of --tuple or --family");
      const auto S = fx_tuple.empty() ? fx_family(spec_from(fx_family_name, fx_params))
                                      : fx_from_table(compute_nr(Tuple::parse(fx_tuple)));
      std::cout << to_json(S).dump() << "\n";
      return kOk;
    }
    return cmd_families();
  } catch (const DomainError& e) {
    std::cerr << "frob: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "frob: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "frob: internal error: " << e.what() << "\n";
    return kMismatch;
  }
}
