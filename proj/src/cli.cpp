#include "symcubic/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "symcubic/errors.hpp"
#include "symcubic/io.hpp"

namespace symcubic {

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::uint32_t modulus = kDefaultPrime;
  bool exact = false;
  bool json = false;
  std::string out_path;

  int order = 0;
  std::vector<int> weights;
  int lambda = 0;
  std::vector<int> primes;
  std::string poly_path;
  std::string lattice_path;
  std::string golden_path;
  int sign = 1;
  int height = 3;
  int prime = 3;
  std::string d = "1";
  std::string a = "1";
  std::string b = "0";
  bool verify_veronese = false;
};

RankOptions rank_options(const Options& o) {
  if (!o.exact && !is_prime(o.modulus)) throw InvalidInput("--modulus must be a prime");
  RankOptions r;
  r.modulus = o.modulus;
  r.exact = o.exact;
  return r;
}

Json config_json(const Options& o) {
  return {{"seed", o.seed}, {"modulus", o.modulus}, {"exact", o.exact}};
}

SymmetryType symmetry_from_flags(const Options& o) {
  if (o.weights.size() != kVars) throw InvalidInput("--weights needs exactly 6 comma-separated integers");
  if (o.order < 1) throw InvalidInput("--order must be >= 1");
  SymmetryType s;
  s.order = o.order;
  std::copy(o.weights.begin(), o.weights.end(), s.weights.begin());
  s.lambda_exp = o.lambda;
  return s.normalized();
}

std::string compact(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void print_table(const Json& report, std::ostream& out) {
  const Json& result = report.at("result");
  if (report.at("command") == "classify") {
    out << std::left << std::setw(8) << "label" << std::setw(30) << "type" << std::setw(5) << "n"
        << std::setw(20) << "zeta" << std::setw(12) << "domain" << "bb\n";
    for (const auto& row : result.at("rows")) {
      const Json& s = row.at("sym");
      std::ostringstream type;
      type << "N=" << s.at("order") << " m=" << s.at("weights").dump() << " w=" << s.at("lambda_exp");
      out << std::setw(8) << (row.at("label").is_null() ? "-" : row.at("label").get<std::string>())
          << std::setw(30) << type.str() << std::setw(5) << row.at("n").get<int>() << std::setw(20)
          << row.at("zeta").get<std::string>() << std::setw(12) << row.at("domain").get<std::string>()
          << (row.at("bb").get<bool>() ? "yes" : "no");
      if (!row.at("flag").is_null()) out << "  (" << row.at("flag").get<std::string>() << ")";
      out << "\n";
    }
    out << result.at("rows").size() << " rows\n";
    return;
  }
  for (const auto& [key, value] : result.items()) out << key << ": " << compact(value) << "\n";
}

Json do_analyze(const Options& o) {
  const ModuliReport r = analyze(symmetry_from_flags(o), o.seed, {}, rank_options(o));
  Json result = to_json(r);
  if (const auto ref = find_reference(r.sym)) {
    result["reference"] = {{"label", ref->label}, {"n", ref->n}, {"bb", ref->bb ? Json(*ref->bb) : Json(nullptr)}};
  }
  return result;
}

Json do_classify(const Options& o) {
  if (o.primes.empty()) throw InvalidInput("--primes needs at least one order");
  for (int p : o.primes) {
    if (p < 2) throw InvalidInput("--primes entries must be >= 2");
  }
  const auto rows = classify_all(o.primes, o.seed, {}, rank_options(o));
  Json list = Json::array();
  for (const auto& row : rows) list.push_back(to_json(row));
  return {{"orders", o.primes}, {"rows", list}};
}

Json do_smooth(const Options& o) {
  const Polynomial f = polynomial_from_json(read_json_file(o.poly_path));
  const RankOptions ro = rank_options(o);
  Json result = to_json(smoothness_certificate(f, ro));
  result["hilbert"] = hilbert_function(f, std::nullopt, ro).hilbert;
  return result;
}

Json do_hodge(const Options& o) {
  const Polynomial f = polynomial_from_json(read_json_file(o.poly_path));
  const SymmetryType s = symmetry_from_flags(o);
  const HodgeEigenData h = hodge_eigen(f, s, rank_options(o));
  const NPrime np = nprime(h);
  Json result = to_json(h);
  result["n_prime"] = np.n_prime;
  result["signature"] = {np.sig_pos, np.sig_neg};
  result["domain"] = classify_domain(h).to_string();
  return result;
}

Json do_bb(const Options& o) {
  const SymmetryType s = symmetry_from_flags(o);
  Json result = to_json(bb_verdict(s));
  result["sym"] = to_json(canonicalize(s));
  return result;
}

Json do_chi(const Options& o, bool& failed) {
  const Rational a = Rational::parse(o.a);
  const Rational b = Rational::parse(o.b);
  const Polynomial g = chi_form(a, b);
  Json result = {{"a", a.to_fraction_string()}, {"b", b.to_fraction_string()}, {"form", to_json(g)},
                 {"text", g.to_string()}};
  if (o.verify_veronese) {
    const bool ok = vanishes_on_veronese(g);
    result["ok"] = ok;
    failed = !ok;
  }
  return result;
}

Json subspace_json(const Subspace& s) { return {{"dim", s.dim()}, {"basis", rational_vectors_json(s.vectors())}}; }

const MatrixQ& require_isometry(const LatticeInput& in) {
  if (!in.isometry) throw InvalidInput("lattice file has no \"isometry\"");
  return *in.isometry;
}

Json do_lattice(const std::string& sub, const Options& o, bool& failed) {
  const LatticeInput in = lattice_from_json(read_json_file(o.lattice_path));
  const std::size_t n = in.lattice.rank();
  if (sub == "eigen") return to_json(eigenlattice(in.lattice, require_isometry(in), o.sign));
  if (sub == "isometry") {
    const IsometryCheck c = verify_isometry(in.lattice, require_isometry(in));
    return {{"ok", c.ok}, {"order", c.order}};
  }
  if (sub == "cyclotomic") {
    const CyclotomicEigenlattice c = cyclotomic_eigenlattice(in.lattice, require_isometry(in), o.prime);
    failed = !c.isotropic;
    return {{"kernel", to_json(c.kernel)}, {"eigenspace_dims", c.eigenspace_dims}, {"isotropic", c.isotropic}};
  }
  if (sub == "isotropic") {
    Json vs = Json::array();
    for (const auto& v : isotropic_vectors(in.lattice, o.height)) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(x.get_si());
      vs.push_back(row);
    }
    return {{"height", o.height}, {"count", vs.size()}, {"vectors", vs}};
  }
  if (sub == "boundary-j" || sub == "boundary-vsigma") {
    const Subspace s = Subspace::span(in.subspace, n);
    const Subspace cut = sub == "boundary-j" ? boundary_subspace_j(s, in.arrangement, in.lattice)
                                             : boundary_subspace_vsigma(s, in.arrangement, in.lattice);
    return {{"input", subspace_json(s)}, {"result", subspace_json(cut)},
            {"in_orthogonal", s.orthogonal_complement(in.lattice.gram()).contains(cut)}};
  }
  if (sub == "cm") {
    if (!in.e || !in.f) throw InvalidInput("lattice file needs \"e\" and \"f\"");
    Integer d;
    if (d.set_str(o.d, 10) != 0) throw InvalidInput("--d must be an integer");
    const auto plane = cm_line_to_plane(*in.e, *in.f, d, in.lattice);
    Json result = {{"isotropic_plane", plane.has_value()}, {"d", o.d}};
    result["plane"] = plane ? subspace_json(*plane) : Json(nullptr);
    return result;
  }
  throw InvalidInput("unknown lattice subcommand " + sub);
}

void add_rank_flags(CLI::App* app, Options& o) {
  app->add_option("--seed", o.seed, "random seed");
  app->add_option("--modulus", o.modulus, "prime for modular ranks");
  app->add_flag("--exact", o.exact, "rational elimination instead of modular ranks");
}

void add_output_flags(CLI::App* app, Options& o) {
  app->add_flag("--json", o.json, "print the JSON report");
  app->add_option("--out", o.out_path, "also write the JSON report to this file");
}

void add_symmetry_flags(CLI::App* app, Options& o) {
  app->add_option("--order", o.order, "order N of the generator")->required();
  app->add_option("--weights", o.weights, "six weights m0,...,m5")->delimiter(',')->required();
  app->add_option("--lambda", o.lambda, "character exponent w (default 0)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Invariants of cubic fourfolds with a cyclic symmetry", "symcubic"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "moduli report for one symmetry type");
  add_symmetry_flags(analyze_cmd, o);
  add_rank_flags(analyze_cmd, o);
  add_output_flags(analyze_cmd, o);

  auto* classify_cmd = app.add_subcommand("classify", "all types of the given prime orders");
  classify_cmd->add_option("--primes", o.primes, "orders, comma separated")->delimiter(',')->required();
  classify_cmd->add_option("--golden", o.golden_path, "compare rows against a stored report");
  add_rank_flags(classify_cmd, o);
  add_output_flags(classify_cmd, o);

  auto* smooth_cmd = app.add_subcommand("smooth", "smoothness certificate of a cubic form");
  smooth_cmd->add_option("--poly", o.poly_path, "polynomial JSON file")->required();
  add_rank_flags(smooth_cmd, o);
  add_output_flags(smooth_cmd, o);

  auto* hodge_cmd = app.add_subcommand("hodge", "character decomposition of primitive H^4");
  hodge_cmd->add_option("--poly", o.poly_path, "polynomial JSON file")->required();
  add_symmetry_flags(hodge_cmd, o);
  add_rank_flags(hodge_cmd, o);
  add_output_flags(hodge_cmd, o);

  auto* bb_cmd = app.add_subcommand("bb", "Baily-Borel criterion by factorization search");
  add_symmetry_flags(bb_cmd, o);
  add_output_flags(bb_cmd, o);

  auto* chi_cmd = app.add_subcommand("chi", "member g_{a,b} of the determinantal family");
  chi_cmd->add_option("--a", o.a, "a as p/q (default 1)");
  chi_cmd->add_option("--b", o.b, "b as p/q (default 0)");
  chi_cmd->add_flag("--verify-veronese", o.verify_veronese, "check singularity along the Veronese surface");
  add_output_flags(chi_cmd, o);

  auto* lattice_cmd = app.add_subcommand("lattice", "integral lattice operations");
  lattice_cmd->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> lattice_subs = {
      {"eigen", "invariant or anti-invariant sublattice of an involution"},
      {"cyclotomic", "kernel of Phi_p(g) and isotropy of its eigenspaces"},
      {"isotropic", "primitive isotropic vectors up to a height"},
      {"boundary-j", "boundary cut of an isotropic line"},
      {"boundary-vsigma", "boundary cut of an isotropic plane"},
      {"cm", "isotropic plane through a line from a CM point"},
      {"isometry", "check that g preserves the form and find its order"}};
  for (const auto& [name, help] : lattice_subs) {
    auto* sub = lattice_cmd->add_subcommand(name, help);
    sub->add_option("--lattice", o.lattice_path, "lattice JSON file")->required();
    if (name == "eigen") sub->add_option("--sign", o.sign, "+1 or -1");
    if (name == "cyclotomic") sub->add_option("--prime", o.prime, "odd prime p");
    if (name == "isotropic") sub->add_option("--height", o.height, "coordinate bound");
    if (name == "cm") sub->add_option("--d", o.d, "positive integer D");
    add_output_flags(sub, o);
  }

  std::vector<const char*> argv = {"symcubic"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  std::string command;
  Json result;
  bool failed = false;
  try {
    if (analyze_cmd->parsed()) {
      command = "analyze";
      result = do_analyze(o);
    } else if (classify_cmd->parsed()) {
      command = "classify";
      result = do_classify(o);
    } else if (smooth_cmd->parsed()) {
      command = "smooth";
      result = do_smooth(o);
    } else if (hodge_cmd->parsed()) {
      command = "hodge";
      result = do_hodge(o);
    } else if (bb_cmd->parsed()) {
      command = "bb";
      result = do_bb(o);
    } else if (chi_cmd->parsed()) {
      command = "chi";
      result = do_chi(o, failed);
    } else {
      for (auto* sub : lattice_cmd->get_subcommands()) {
        command = "lattice " + sub->get_name();
        result = do_lattice(sub->get_name(), o, failed);
      }
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const SearchExhausted& e) {
    err << "search exhausted: " << e.what() << "\n";
    return kExitVerification;
  }

  Json config = config_json(o);
  if (analyze_cmd->parsed() || hodge_cmd->parsed() || bb_cmd->parsed()) {
    config["order"] = o.order;
    config["weights"] = o.weights;
    config["lambda"] = o.lambda;
  }
  const Json report = make_report(command, config, result);

  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "error: cannot write " << o.out_path << "\n";
      return kExitInvalid;
    }
    file << report.dump(2) << "\n";
  }
  if (o.json) {
    out << report.dump(2) << "\n";
  } else {
    print_table(report, out);
  }

  if (!o.golden_path.empty()) {
    Json golden;
    try {
      golden = read_json_file(o.golden_path);
    } catch (const InvalidInput& e) {
      err << "error: " << e.what() << "\n";
      return kExitInvalid;
    }
    if (!golden.contains("result") || golden.at("result") != result) {
      err << "verification failed: rows differ from " << o.golden_path << "\n";
      return kExitVerification;
    }
  }
  return failed ? kExitVerification : kExitOk;
}

}  // namespace symcubic
