#include <sym3inv/cli.hpp>

#include <sym3inv/function_basis.hpp>
#include <sym3inv/optimizer.hpp>
#include <sym3inv/syzygy.hpp>
#include <sym3inv/tensor_io.hpp>
#include <sym3inv/witness.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <sstream>

namespace sym3::cli {

using nlohmann::json;

namespace {

class FieldMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  all checks passed\n"
    "  1  a check failed\n"
    "  2  usage error or unknown subcommand\n"
    "  3  malformed tensor file\n"
    "  4  field mismatch (exact-only operation given a float tensor)\n"
    "  5  tensor file cannot be read\n";

// Options for every subcommand; only the fields of the chosen one are read.
struct Args {
  std::string file;
  bool exact = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::int64_t range = 9;
  int basis = 13;
  int degree = 10;
  bool no_split = false;
  unsigned threads = 0;
  int starts = 200;
  int iters = 500;
  std::string witness_case;
  double theta = 0.0;
  double a = 0, b = 0, c = 0, d = 0;
};

template <class S>
json invariant_json(const InvariantVector<S>& inv) {
  json out = json::object();
  for (int i = 0; i < kInvariantCount; ++i) out[std::string(kInvariantInfo[i].name)] = scalar_to_json(inv.values[i]);
  return out;
}

json invariant_json_decimal(const InvariantVector<ExactScalar>& inv) {
  json out = json::object();
  for (int i = 0; i < kInvariantCount; ++i) out[std::string(kInvariantInfo[i].name)] = inv.values[i].get_d();
  return out;
}

template <class S>
double frobenius(const Sym3Tensor<S>& t) {
  const Full3<S> f = expand(t);
  double s = 0.0;
  for (const auto& x : f) s += to_double(x) * to_double(x);
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------

void cmd_invariants(const Args& args, RunReport& r) {
  const AnyTensor t = read_tensor_file(args.file);
  r.parameters = {{"file", args.file}, {"exact", args.exact}};
  if (const auto* q = std::get_if<Sym3Tensor<ExactScalar>>(&t)) {
    const auto inv = invariants_of(*q);
    r.results = {{"field", "rational"}, {"invariants", args.exact ? invariant_json(inv) : invariant_json_decimal(inv)}};
  } else {
    if (args.exact) throw FieldMismatch("--exact requires a tensor with \"field\": \"rational\"");
    r.results = {{"field", "float"}, {"invariants", invariant_json(invariants_of(std::get<Sym3Tensor<double>>(t)))}};
  }
  r.pass = true;
}

template <class S>
void decompose_into(const Sym3Tensor<S>& a, RunReport& r) {
  const HarmonicParts<S> h = decompose(a);
  json dev = json::array();
  for (const auto& x : h.deviator.c) dev.push_back(scalar_to_json(x));
  json vec = json::array();
  for (const auto& x : h.vector.e) vec.push_back(scalar_to_json(x));
  const Sym3Tensor<S> back = recompose(h);
  bool round_trip = true;
  for (std::size_t i = 0; i < 10; ++i) {
    if constexpr (is_exact_v<S>)
      round_trip = round_trip && back.c[i] == a.c[i];
    else
      round_trip = round_trip && std::abs(back.c[i] - a.c[i]) <= 1e-12 * std::max(1.0, std::abs(a.c[i]));
  }
  r.results = {{"deviator",
                {{"components", dev},
                 {"D133", scalar_to_json(h.deviator.d133())},
                 {"D233", scalar_to_json(h.deviator.d233())},
                 {"D333", scalar_to_json(h.deviator.d333())}}},
               {"vector", vec},
               {"round_trip", round_trip}};
  r.pass = round_trip;
}

void cmd_decompose(const Args& args, RunReport& r) {
  r.parameters = {{"file", args.file}};
  std::visit([&](const auto& t) { decompose_into(t, r); }, read_tensor_file(args.file));
}

template <class S>
void reconstruct_into(const Sym3Tensor<S>& a, RunReport& r) {
  const auto direct = invariants_of(a);
  const auto b = ElevenBasis<S>::from(direct);
  const S k6 = reconstruct_K6(b);
  const S i8 = reconstruct_I8(b, k6);
  const S dk6 = k6 - direct[Inv::K6];
  const S di8 = i8 - direct[Inv::I8];
  bool pass;
  if constexpr (is_exact_v<S>) {
    pass = sgn(dk6) == 0 && sgn(di8) == 0;
  } else {
    // Scale by the natural magnitude |A|^degree of each invariant.
    const double n = frobenius(a);
    pass = std::abs(dk6) <= 1e-9 * std::max(1.0, std::pow(n, 6)) && std::abs(di8) <= 1e-9 * std::max(1.0, std::pow(n, 8));
  }
  const S denominator = detail::split_linear(relation_k6(), Inv::K6, b.embedded()).denominator;
  r.results = {
      {"K6", {{"direct", scalar_to_json(direct[Inv::K6])}, {"reconstructed", scalar_to_json(k6)}, {"difference", scalar_to_json(dk6)}}},
      {"I8", {{"direct", scalar_to_json(direct[Inv::I8])}, {"reconstructed", scalar_to_json(i8)}, {"difference", scalar_to_json(di8)}}},
      {"degenerate",
       {{"J2_zero", j2_is_zero(b[Inv::J2], b[Inv::I2])},
        {"K6_denominator_zero", k6_denominator_is_zero(denominator, b[Inv::I2], b[Inv::J2])}}},
  };
  r.pass = pass;
}

void cmd_reconstruct(const Args& args, RunReport& r) {
  r.parameters = {{"file", args.file}};
  std::visit([&](const auto& t) { reconstruct_into(t, r); }, read_tensor_file(args.file));
}

void cmd_verify_syzygies(const Args& args, RunReport& r) {
  const std::size_t samples = args.samples == 0 ? 100 : args.samples;
  r.parameters = {{"samples", samples}, {"seed", args.seed}, {"range", args.range}};
  const auto& relations = builtin_relations();
  std::vector<ExactScalar> worst(relations.size());
  for (std::size_t k = 0; k < samples; ++k) {
    const auto inv = all_invariants(random_harmonic<ExactScalar>(args.seed, k, args.range));
    for (std::size_t i = 0; i < relations.size(); ++i) {
      const ExactScalar res = abs(relations[i].residual(inv));
      if (res > worst[i]) worst[i] = res;
    }
  }
  json table = json::array();
  bool pass = true;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    table.push_back({{"relation", relations[i].name()},
                     {"degree", relations[i].degree()},
                     {"terms", relations[i].terms().size()},
                     {"max_abs_residual", format_rational(worst[i])}});
    pass = pass && sgn(worst[i]) == 0;
  }
  r.results = {{"relations", table}};
  r.pass = pass;
}

void cmd_discover(const Args& args, RunReport& r) {
  if (args.basis != 13 && args.basis != 11) throw CLI::ValidationError("--basis", "must be 13 or 11");
  DiscoveryOptions opt;
  opt.basis = args.basis == 13 ? Basis::Thirteen : Basis::Eleven;
  opt.degree = args.degree;
  opt.seed = args.seed;
  opt.sample_count = args.samples;
  opt.split_by_u_degree = !args.no_split;
  opt.threads = args.threads;
  r.parameters = {{"basis", args.basis}, {"degree", args.degree}, {"seed", args.seed}, {"samples", args.samples},
                  {"split_by_u_degree", opt.split_by_u_degree}};
  const DiscoveryResult d = discover_relations(opt);

  json relations = json::array();
  for (const auto& rel : d.relations) {
    json terms = json::array();
    for (const auto& t : rel.terms())
      terms.push_back({{"coefficient", format_rational(t.coefficient)}, {"product", t.product.to_string()}});
    relations.push_back({{"name", rel.name()}, {"degree", rel.degree()}, {"terms", terms}});
  }
  json known = json::object();
  bool pass = true;
  for (const auto& rel : builtin_relations()) {
    if (rel.degree() != d.degree || !std::all_of(rel.terms().begin(), rel.terms().end(), [&](const auto& t) {
          return t.product.uses_only(d.basis);
        }))
      continue;
    const bool in = spans_relation(d, rel);
    known[rel.name()] = in;
    pass = pass && in;
  }
  r.results = {{"products", d.products.size()},
               {"samples", d.sample_count},
               {"rank", d.rank},
               {"relation_count", d.relations.size()},
               {"discarded", d.discarded},
               {"builtin_relations_in_span", known},
               {"relations", relations}};
  r.pass = pass;
}

void cmd_isotropy(const Args& args, RunReport& r) {
  const std::size_t samples = args.samples == 0 ? 1000 : args.samples;
  r.parameters = {{"samples", samples}, {"seed", args.seed}, {"range", args.range}};
  std::array<double, kInvariantCount> worst{};
  std::mt19937_64 keys(args.seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const Sym3Tensor<double> a = recompose(random_harmonic<double>(args.seed, k, args.range));
    const auto q = random_orthogonal(keys(), k % 2 == 0 ? 1 : -1);
    const auto before = invariants_of(a);
    const auto after = invariants_of(rotate(a, q));
    const double n = frobenius(a);
    for (int i = 0; i < kInvariantCount; ++i) {
      const double scale = std::max(std::abs(before.values[i]), std::pow(n, kInvariantInfo[i].degree));
      worst[i] = std::max(worst[i], std::abs(after.values[i] - before.values[i]) / scale);
    }
  }
  json table = json::object();
  double overall = 0.0;
  for (int i = 0; i < kInvariantCount; ++i) {
    table[std::string(kInvariantInfo[i].name)] = worst[i];
    overall = std::max(overall, worst[i]);
  }
  r.results = {{"max_relative_error", table}, {"worst", overall}, {"tolerance", 1e-9}};
  r.pass = overall <= 1e-9;
}

void cmd_prop31(const Args& args, RunReport& r) {
  const std::size_t samples = args.samples;
  r.parameters = {{"starts", args.starts}, {"iters", args.iters}, {"seed", args.seed}, {"samples", samples}};
  const opt::MinimizeResult m = opt::minimize(args.seed, args.starts, args.iters);
  const double at_reported = opt::objective(opt::reported_minimizer());

  json point = {{"deviator", m.best.deviator().c}, {"vector", m.best.vector().e}};
  json checks = json::array();
  const auto check = [&](std::string label, double value, bool ok) {
    checks.push_back({{"label", std::move(label)}, {"value", value}, {"pass", ok}});
  };
  check("best value within 1e-3 of 0.2", m.value, std::abs(m.value - 0.2) <= 1e-3);
  check("best value not below 0.2 - 1e-6", m.value, m.value >= 0.2 - 1e-6);
  check("objective at reported minimizer within 2e-3 of 0.2", at_reported, std::abs(at_reported - 0.2) <= 2e-3);
  r.results = {{"best_value", m.value},
               {"best_point", point},
               {"gradient_norm", m.gradient_norm},
               {"best_start", m.best_start},
               {"reported_minimizer_value", at_reported}};
  if (samples > 0) {
    const double sampled = opt::sample_minimum(args.seed, samples);
    check("sampled minimum not below 0.2 - 1e-6", sampled, sampled >= 0.2 - 1e-6);
    r.results["sample_minimum"] = sampled;
  }
  r.results["checks"] = checks;
  r.pass = std::all_of(checks.begin(), checks.end(), [](const json& c) { return c["pass"].get<bool>(); });
}

void cmd_witness(const Args& args, const CLI::App& sub, RunReport& r) {
  const auto which = witness_case_from_name(args.witness_case);
  if (!which) throw CLI::ValidationError("--case", "must be one of L6, J6, L4, K4, M6, J4");
  WitnessOptions options;
  r.parameters = {{"case", args.witness_case}};
  if (sub.count("--theta") > 0) {
    options.theta = args.theta;
    r.parameters["theta"] = args.theta;
  }
  const std::size_t given = sub.count("--a") + sub.count("--b") + sub.count("--c") + sub.count("--d");
  if (given != 0 && given != 4) throw CLI::ValidationError("--a/--b/--c/--d", "give all four or none");
  if (given == 4) {
    options.abcd = std::array<double, 4>{args.a, args.b, args.c, args.d};
    r.parameters["abcd"] = *options.abcd;
  }
  const WitnessResult w = run_witness(*which, options);
  json checks = json::array();
  for (const auto& c : w.checks) checks.push_back(check_to_json(c));
  r.results = w.details;
  r.results["checks"] = checks;
  r.pass = w.pass;
}

}  // namespace

json RunReport::to_json() const {
  return {{"command", command},
          {"parameters", parameters},
          {"results", results},
          {"pass", pass},
          {"wall_time_seconds", wall_time_seconds}};
}

Outcome run(const std::vector<std::string>& argv) {
  Outcome outcome;
  Args args;
  CLI::App app{"Invariants of symmetric third-order tensors: evaluation, syzygy checks, witnesses.", "sym3inv"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);

  auto* inv = app.add_subcommand("invariants", "Print the thirteen invariants of a tensor file");
  inv->add_option("file", args.file, "sym3-v1 tensor JSON")->required();
  inv->add_flag("--exact", args.exact, "Print rationals as \"p/q\" (rational files only)");

  auto* dec = app.add_subcommand("decompose", "Print the harmonic parts (D, u) of a tensor file");
  dec->add_option("file", args.file, "sym3-v1 tensor JSON")->required();

  auto* rec = app.add_subcommand("reconstruct", "Compare direct and reconstructed K6 and I8");
  rec->add_option("file", args.file, "sym3-v1 tensor JSON")->required();

  auto* ver = app.add_subcommand("verify-syzygies", "Evaluate the five built-in relations at random rational points");
  ver->add_option("--samples", args.samples, "Number of points (default 100)");
  ver->add_option("--seed", args.seed, "Random seed")->required();
  ver->add_option("--range", args.range, "Integer entries drawn from [-range, range]")->capture_default_str();

  auto* dis = app.add_subcommand("discover", "Find all relations of one degree by exact nullspace computation");
  dis->add_option("--basis", args.basis, "13 or 11 invariants")->capture_default_str();
  dis->add_option("--degree", args.degree, "Even weighted degree")->capture_default_str();
  dis->add_option("--seed", args.seed, "Random seed")->required();
  dis->add_option("--samples", args.samples, "Evaluation points (default: products + 10)");
  dis->add_flag("--no-split", args.no_split, "Eliminate on the full matrix instead of per u-degree block");
  dis->add_option("--threads", args.threads, "Worker threads for evaluation (0: hardware)");

  auto* iso = app.add_subcommand("isotropy-check", "Invariance under random orthogonal transformations");
  iso->add_option("--samples", args.samples, "Number of tensors (default 1000)");
  iso->add_option("--seed", args.seed, "Random seed")->required();
  iso->add_option("--range", args.range, "Components drawn from [-range, range]")->capture_default_str();

  auto* p31 = app.add_subcommand("prop31", "Minimize 2 I2 J2 - 3 J4 over unit-norm (D, u)");
  p31->add_option("--starts", args.starts, "Descent starts")->capture_default_str();
  p31->add_option("--iters", args.iters, "Iterations per start")->capture_default_str();
  p31->add_option("--seed", args.seed, "Random seed")->required();
  p31->add_option("--samples", args.samples, "Extra random feasible samples (0 skips)")->capture_default_str();

  auto* wit = app.add_subcommand("witness", "Check a witness tensor against its stored invariant values");
  wit->add_option("--case", args.witness_case, "L6, J6, L4, K4, M6 or J4")->required();
  wit->add_option("--theta", args.theta, "Angle in [0, pi] (case J4)");
  wit->add_option("--a", args.a, "Family parameter (case M6)");
  wit->add_option("--b", args.b, "Family parameter (case M6)");
  wit->add_option("--c", args.c, "Family parameter (case M6)");
  wit->add_option("--d", args.d, "Family parameter (case M6)");

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    outcome.exit_code = code == 0 ? kPass : kUsage;
    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
  }

  CLI::App* chosen = app.get_subcommands().front();
  RunReport& r = outcome.report;
  r.command = chosen->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    if (chosen == inv) cmd_invariants(args, r);
    else if (chosen == dec) cmd_decompose(args, r);
    else if (chosen == rec) cmd_reconstruct(args, r);
    else if (chosen == ver) cmd_verify_syzygies(args, r);
    else if (chosen == dis) cmd_discover(args, r);
    else if (chosen == iso) cmd_isotropy(args, r);
    else if (chosen == p31) cmd_prop31(args, r);
    else cmd_witness(args, *chosen, r);
  } catch (const MalformedInput& e) {
    outcome.exit_code = kMalformedInput;
    outcome.err = std::string("malformed input: ") + e.what() + "\n";
    return outcome;
  } catch (const UnreadableFile& e) {
    outcome.exit_code = kUnreadableFile;
    outcome.err = std::string("unreadable file: ") + e.what() + "\n";
    return outcome;
  } catch (const FieldMismatch& e) {
    outcome.exit_code = kFieldMismatch;
    outcome.err = std::string("field mismatch: ") + e.what() + "\n";
    return outcome;
  } catch (const CLI::Error& e) {
    outcome.exit_code = kUsage;
    outcome.err = std::string("usage: ") + e.what() + "\n";
    return outcome;
  } catch (const std::invalid_argument& e) {
    outcome.exit_code = kUsage;
    outcome.err = std::string("invalid argument: ") + e.what() + "\n";
    return outcome;
  }
  r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  outcome.has_report = true;
  outcome.exit_code = r.pass ? kPass : kCheckFailed;
  outcome.out = r.to_json().dump(2) + "\n";
  return outcome;
}

}  // namespace sym3::cli
