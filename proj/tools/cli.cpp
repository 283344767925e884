#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "coxdesc/classical.hpp"
#include "coxdesc/descent_algebra.hpp"
#include "coxdesc/enumeration.hpp"
#include "coxdesc/errors.hpp"
#include "coxdesc/reproduce.hpp"
#include "coxdesc/serialize.hpp"
#include "coxdesc/subalgebra.hpp"

namespace coxdesc::cli {

namespace {

struct Options {
  std::uint64_t cap = EnumerationLimits{}.cap;
  std::string format;  // empty: the command's default
  std::string out_path;
  std::uint64_t seed = 20240229;

  std::string type;
  std::string first;
  std::string second;
  int generator = 0;
  std::string target;
  int samples = 16;
};

// Raised for option values that parse but make no sense for the command.
struct UsageError : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

struct Output {
  std::string text;
  int code = kSuccess;
};

std::string pick_format(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError("format '" + f + "' is not available here (choose " + list + ")");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

EnumerationLimits limits_of(const Options& o) { return EnumerationLimits{o.cap}; }

std::string matrix_text(const CoxeterMatrix& m) {
  std::ostringstream s;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) s << (j ? " " : "  ") << row[j];
    s << '\n';
  }
  return s.str();
}

Output cmd_group(const Options& o) {
  const std::string fmt = pick_format(o, "text", {"text", "json"});
  const CoxeterSystem sys = CoxeterSystem::build(CoxeterType::parse(o.type));
  const bool enumerable = sys.order() <= BigInt(static_cast<unsigned long>(o.cap));
  const std::string note = enumerable ? "enumeration enabled" : "enumeration disabled";
  std::vector<std::string> gens;
  for (int i = 1; i <= sys.rank(); ++i) {
    gens.push_back(sys.model() == ModelKind::Roots ? "permutation of " + std::to_string(2 * sys.positive_root_count()) + " roots"
                                                   : sys.format_payload(sys.generator(i)));
  }
  if (fmt == "json") {
    Json j;
    j["schema"] = kSchemaVersion;
    j["type"] = sys.type().label();
    j["rank"] = sys.rank();
    j["order"] = sys.order().get_str();
    j["positive_roots"] = sys.positive_root_count();
    j["model"] = to_string(sys.model());
    j["coxeter_matrix"] = sys.coxeter_matrix();
    j["generators"] = gens;
    j["note"] = note;
    return {dump(j)};
  }
  std::ostringstream s;
  s << "type " << sys.type().label() << "\n"
    << "rank " << sys.rank() << "\n"
    << "order " << sys.order().get_str() << "\n"
    << "positive roots " << sys.positive_root_count() << "\n"
    << "model " << to_string(sys.model()) << "\n"
    << "coxeter matrix\n"
    << matrix_text(sys.coxeter_matrix());
  for (int i = 1; i <= sys.rank(); ++i) s << "s" << i << " = " << gens[static_cast<std::size_t>(i - 1)] << "\n";
  s << note;
  if (!enumerable) s << " (order exceeds cap " << o.cap << ")";
  s << "\n";
  return {s.str()};
}

Output cmd_transversal(const Options& o) {
  const std::string fmt = pick_format(o, "text", {"text", "json", "csv"});
  const CoxeterSystem sys = CoxeterSystem::build(CoxeterType::parse(o.type));
  const SubsetMask J = SubsetMask::parse(o.first, sys.rank());
  Transversal t;
  if (o.second.empty()) {
    t = min_coset_reps(sys, J, limits_of(o));
  } else {
    t = min_double_coset_reps(sys, J, SubsetMask::parse(o.second, sys.rank()), limits_of(o));
  }
  std::vector<std::string> words;
  for (const auto& w : t.elements) words.push_back(sys.format_word(w));
  if (fmt == "json") {
    Json j;
    j["schema"] = kSchemaVersion;
    j["type"] = sys.type().label();
    j["kind"] = o.second.empty() ? "X_J" : "X_JK";
    j["J"] = J.to_string();
    if (!o.second.empty()) j["K"] = t.K.to_string();
    j["count"] = words.size();
    j["elements"] = words;
    return {dump(j)};
  }
  std::ostringstream s;
  if (fmt == "csv") s << "index,length,word\n";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (fmt == "csv") {
      s << i << ',' << sys.length(t.elements[i]) << ',' << words[i] << '\n';
    } else {
      s << words[i] << '\n';
    }
  }
  return {s.str()};
}

Output cmd_product(const Options& o) {
  const std::string fmt = pick_format(o, "json", {"json", "text", "csv"});
  const CoxeterSystem sys = CoxeterSystem::build(CoxeterType::parse(o.type));
  const SubsetMask J = SubsetMask::parse(o.first, sys.rank());
  const SubsetMask K = SubsetMask::parse(o.second, sys.rank());
  const DescentAlgebra alg(sys, limits_of(o));
  const AlgebraElement& p = alg.solomon_product(J, K);
  if (fmt == "json") {
    Json j;
    j["schema"] = kSchemaVersion;
    j["type"] = sys.type().label();
    j["J"] = J.to_string();
    j["K"] = K.to_string();
    j["product"] = to_json(p);
    return {dump(j)};
  }
  if (fmt == "csv") {
    std::string s = "L,coefficient\n";
    for (const auto& [L, c] : p.terms()) s += "\"" + L.to_string() + "\"," + to_string(c) + "\n";
    return {s};
  }
  return {"x[" + J.to_string() + "] x[" + K.to_string() + "] = " + p.to_string() + "\n"};
}

std::string power_sum(const std::vector<Rational>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    const Rational mag = abs(row[i]);
    out += out.empty() ? (row[i] < 0 ? "-" : "") : (row[i] < 0 ? " - " : " + ");
    if (mag != 1 || i == 0) out += to_string(mag) + (i == 0 ? "" : " ");
    if (i == 1) out += "x_J";
    if (i >= 2) out += "x_J^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Output cmd_analyze(const Options& o) {
  const std::string fmt = pick_format(o, "json", {"json", "text"});
  const CoxeterSystem sys = CoxeterSystem::build(CoxeterType::parse(o.type));
  if (o.generator < 1 || o.generator > sys.rank()) {
    throw UsageError("generator " + std::to_string(o.generator) + " is not in 1.." + std::to_string(sys.rank()));
  }
  const DescentAlgebra alg(sys, limits_of(o));
  const SubalgebraReport r = detect_native_basis(alg, SubsetMask::full(sys.rank()).without(o.generator));
  if (fmt == "json") return {dump(to_json(r))};
  std::ostringstream s;
  s << "type " << r.type << ", J = " << r.J.to_string() << " (s = " << o.generator << ")\n"
    << "dim " << r.dim << "\n"
    << "minimal polynomial " << r.minimal_poly.to_string() << "\n";
  if (r.has_native_basis) {
    s << "native basis (" << (r.all_integer ? "integral" : "not integral") << ")\n";
    for (std::size_t i = 0; i < r.native_basis.size(); ++i) {
      s << "  x[" << r.native_basis[i].to_string() << "] = " << power_sum(r.change_of_basis[i]) << "\n";
    }
  } else {
    s << "no native basis";
    if (!r.native_basis.empty()) {
      s << "; x_L in Q[x_J] only for L =";
      for (const auto& L : r.native_basis) s << " " << L.to_string();
    }
    s << "\n";
    if (auto w = commutation_witness(sys, o.generator, limits_of(o))) {
      s << "witness: K = " << w->K.to_string() << ", t = " << w->t << ", y = " << sys.format_word(w->y)
        << ", t^y = " << w->t_conjugate << "\n";
    }
  }
  return {s.str()};
}

Output cmd_reproduce(const Options& o) {
  const std::string fmt = pick_format(o, "text", {"text", "json"});
  std::vector<std::string> targets;
  if (o.target == "all") {
    targets = reproduce_targets();
  } else {
    targets.push_back(o.target);
  }
  std::vector<SuiteReport> reports;
  for (const auto& t : targets) reports.push_back(reproduce(t, limits_of(o)));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();

  if (fmt == "json") {
    Json j;
    j["schema"] = kSchemaVersion;
    Json suites = Json::array();
    for (const auto& r : reports) {
      Json sj;
      sj["target"] = r.target;
      sj["passed"] = r.passed();
      sj["total"] = r.checks.size();
      Json checks = Json::array();
      for (const auto& c : r.checks) checks.push_back(to_json(c));
      sj["checks"] = std::move(checks);
      sj["details"] = r.details;
      suites.push_back(std::move(sj));
    }
    j["suites"] = std::move(suites);
    j["ok"] = ok;
    return {dump(j), ok ? kSuccess : kMismatch};
  }
  std::ostringstream s;
  for (const auto& r : reports) {
    s << "== " << r.target << "\n";
    for (const auto& c : r.checks) {
      if (c.ok) {
        s << "PASS " << c.anchor << "\n";
      } else {
        s << "FAIL " << c.anchor << "\n  expected: " << c.expected << "\n  actual:   " << c.actual << "\n";
      }
    }
    for (const auto& d : r.details) s << "  " << d << "\n";
    s << r.passed() << "/" << r.checks.size() << " checks passed\n";
  }
  return {s.str(), ok ? kSuccess : kMismatch};
}

Output cmd_chain_table(const Options& o) {
  const std::string fmt = pick_format(o, "csv", {"csv", "json"});
  const CoxeterType type = CoxeterType::parse(o.type);
  if (!type.is_classical() || type.family == Family::I2) throw UsageError("chain tables exist for types A, B and D only");
  if (fmt == "csv") return {chain_table_csv(type.family, type.rank)};
  Json j;
  j["schema"] = kSchemaVersion;
  j["type"] = type.label();
  Json table = Json::object();
  for (int a = chain_min_index(type.family); a <= type.rank; ++a) {
    Json row = Json::object();
    for (int b = chain_min_index(type.family); b <= type.rank; ++b) {
      row[std::to_string(b)] = chain_to_json(closed_form_product(type.family, type.rank, a, b));
    }
    table[std::to_string(a)] = std::move(row);
  }
  j["products"] = std::move(table);
  return {dump(j)};
}

Output cmd_spot_check(const Options& o) {
  const std::string fmt = pick_format(o, "text", {"text", "json"});
  if (o.samples < 1) throw UsageError("--samples must be positive");
  const CoxeterSystem sys = CoxeterSystem::build(CoxeterType::parse(o.type));
  const DescentAlgebra alg(sys, limits_of(o));
  const GroupAlgebra qw(sys, limits_of(o));
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, (1u << sys.rank()) - 1);
  std::vector<CheckResult> checks;
  for (int i = 0; i < o.samples; ++i) {
    const SubsetMask J(pick(rng));
    const SubsetMask K(pick(rng));
    const bool ok = qw.multiply(qw.x_of(J), qw.x_of(K)) == qw.embed(alg.solomon_product(J, K));
    checks.push_back({"x[" + J.to_string() + "] x[" + K.to_string() + "]", ok, "group algebra product",
                      ok ? "equal" : "differs"});
  }
  const bool ok = all_ok(checks);
  if (fmt == "json") {
    Json j;
    j["schema"] = kSchemaVersion;
    j["type"] = sys.type().label();
    j["seed"] = o.seed;
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(to_json(c));
    j["checks"] = std::move(arr);
    j["ok"] = ok;
    return {dump(j), ok ? kSuccess : kMismatch};
  }
  std::ostringstream s;
  for (const auto& c : checks) s << (c.ok ? "PASS " : "FAIL ") << c.anchor << "\n";
  s << "seed " << o.seed << ", " << checks.size() << " pairs\n";
  return {s.str(), ok ? kSuccess : kMismatch};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite Coxeter groups and their descent algebras", "coxdesc"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--cap", o.cap, "Largest number of group elements any enumeration may produce")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", o.out_path, "Write the result to this file instead of standard output");
  app.add_option("--seed", o.seed, "Seed for randomly sampled checks");

  auto* group = app.add_subcommand("group", "Order, Coxeter matrix and generator models");
  group->add_option("type", o.type, "Type such as A5, B3, D4, I2:7, H3, E8")->required();

  auto* transversal = app.add_subcommand("transversal", "X_J, or X_JK when K is given, as reduced words");
  transversal->add_option("type", o.type)->required();
  transversal->add_option("J", o.first, "Subset such as 1,3 or - for the empty set")->required();
  transversal->add_option("K", o.second);

  auto* product = app.add_subcommand("product", "The product x_J x_K in the x-basis");
  product->add_option("type", o.type)->required();
  product->add_option("J", o.first)->required();
  product->add_option("K", o.second)->required();

  auto* analyze = app.add_subcommand("analyze", "Structure of Q[x_J] for J = S without s");
  analyze->add_option("type", o.type)->required();
  analyze->add_option("s", o.generator, "The generator left out of J")->required();

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a reproduction suite");
  std::vector<std::string> names = reproduce_targets();
  names.push_back("all");
  reproduce_cmd->add_option("target", o.target)->required()->check(CLI::IsMember(names));

  auto* chain = app.add_subcommand("chain-table", "Closed-form chain structure constants of A_n, B_n or D_n");
  chain->add_option("type", o.type)->required();

  auto* spot = app.add_subcommand("spot-check", "Compare random Solomon products with the group algebra");
  spot->add_option("type", o.type)->required();
  spot->add_option("--samples", o.samples, "Number of random subset pairs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    Output result;
    if (group->parsed()) result = cmd_group(o);
    if (transversal->parsed()) result = cmd_transversal(o);
    if (product->parsed()) result = cmd_product(o);
    if (analyze->parsed()) result = cmd_analyze(o);
    if (reproduce_cmd->parsed()) result = cmd_reproduce(o);
    if (chain->parsed()) result = cmd_chain_table(o);
    if (spot->parsed()) result = cmd_spot_check(o);

    if (o.out_path.empty()) {
      out << result.text;
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << o.out_path << "\n";
        return kUsage;
      }
      file << result.text;
    }
    return result.code;
  } catch (const EnumerationRefused& e) {
    err << "error: " << e.what() << "\n";
    return kEnumerationRefused;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationFailure& e) {
    err << "mismatch: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace coxdesc::cli
