#include "symcubic/io.hpp"

#include <fstream>

#include "symcubic/errors.hpp"

namespace symcubic {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput("malformed JSON in " + path + ": " + e.what());
  }
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1000000000LL || v > 1000000000LL) throw InvalidInput(std::string(what) + " out of range");
  return static_cast<int>(v);
}

Rational as_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InvalidInput("expected an integer or a \"p/q\" string");
}

VectorQ as_vector(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array");
  VectorQ v;
  for (const auto& x : j) v.push_back(as_rational(x));
  return v;
}

MatrixQ as_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("expected a non-empty matrix");
  std::vector<VectorQ> rows;
  for (const auto& r : j) rows.push_back(as_vector(r));
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw InvalidInput("matrix rows have different lengths");
  }
  return MatrixQ::from_rows(rows, rows.front().size());
}

std::vector<VectorQ> as_vectors(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a list of vectors");
  std::vector<VectorQ> out;
  for (const auto& r : j) out.push_back(as_vector(r));
  return out;
}

Json integer_json(const Rational& x) {
  const Integer n = x.numerator();
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

}  // namespace

Json to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"coef", c.to_fraction_string()}, {"exps", std::vector<int>(m.exps().begin(), m.exps().end())}});
  }
  return {{"vars", f.nvars()}, {"degree", f.degree()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
  const int vars = as_int(field(j, "vars"), "vars");
  const int degree = as_int(field(j, "degree"), "degree");
  if (vars < 1 || degree < 0) throw InvalidInput("vars must be >= 1 and degree >= 0");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InvalidInput("terms must be an array");
  std::vector<std::pair<Monomial, Rational>> parsed;
  for (const auto& t : terms) {
    const Json& exps = field(t, "exps");
    if (!exps.is_array()) throw InvalidInput("exps must be an array");
    std::vector<int> e;
    for (const auto& x : exps) {
      const int v = as_int(x, "exponent");
      if (v < 0) throw InvalidInput("exponents must be non-negative");
      e.push_back(v);
    }
    const Json& coef = field(t, "coef");
    if (!coef.is_string()) throw InvalidInput("coef must be a \"p/q\" string");
    parsed.emplace_back(Monomial(e), Rational::parse(coef.get<std::string>()));
  }
  return Polynomial::from_terms(static_cast<std::size_t>(vars), degree, parsed);
}

Json to_json(const SymmetryType& s) {
  return {{"order", s.order}, {"weights", s.weights}, {"lambda_exp", s.lambda_exp}};
}

SymmetryType symmetry_from_json(const Json& j) {
  SymmetryType s;
  s.order = as_int(field(j, "order"), "order");
  const Json& w = field(j, "weights");
  if (!w.is_array() || w.size() != kVars) throw InvalidInput("weights must have 6 entries");
  for (std::size_t i = 0; i < kVars; ++i) s.weights[i] = as_int(w[i], "weight");
  s.lambda_exp = as_int(field(j, "lambda_exp"), "lambda_exp");
  return s.normalized();
}

LatticeInput lattice_from_json(const Json& j) {
  LatticeInput in{IntegralLattice(as_matrix(field(j, "gram"))), std::nullopt, {}, {}, std::nullopt, std::nullopt};
  if (j.contains("isometry") && !j.at("isometry").is_null()) in.isometry = as_matrix(j.at("isometry"));
  if (j.contains("arrangement")) in.arrangement = as_vectors(j.at("arrangement"));
  if (j.contains("subspace")) in.subspace = as_vectors(j.at("subspace"));
  if (j.contains("e")) in.e = as_vector(j.at("e"));
  if (j.contains("f")) in.f = as_vector(j.at("f"));
  return in;
}

Json integral_matrix_json(const MatrixQ& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Json rational_vectors_json(const std::vector<VectorQ>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(x.to_fraction_string());
    out.push_back(row);
  }
  return out;
}

Json to_json(const SmoothnessCertificate& c) {
  return {{"verdict", to_string(c.verdict)},
          {"primes_used", c.primes_used},
          {"exact", c.exact},
          {"r7_dimension", c.r7_dimension}};
}

Json to_json(const JacobianProfile& p) {
  Json by_weight = Json::array();
  if (p.sym) {
    for (const auto& piece : p.by_weight) {
      Json entry = Json::object();
      for (const auto& [u, d] : piece) entry[std::to_string(u)] = d;
      by_weight.push_back(entry);
    }
  }
  return {{"hilbert", p.hilbert}, {"by_weight", by_weight}, {"modulus", p.modulus}};
}

Json to_json(const HodgeEigenData& h) {
  Json chars = Json::array();
  for (const auto& [t, x] : h.by_character) {
    chars.push_back({{"character", t}, {"h31", x.h31}, {"h22", x.h22}, {"h13", x.h13}});
  }
  return {{"order", h.order},
          {"zeta_exp", h.zeta_exp},
          {"zeta", zeta_string(h.zeta_exp, h.order)},
          {"zeta_real", h.zeta_real()},
          {"characters", chars},
          {"hyperplane_class", {{"character", 0}, {"included", false}}}};
}

Json to_json(const FactorizationWitness& w) {
  const WitnessImage img = witness_image(w);
  return {{"target", to_string(w.target)}, {"modulus", w.modulus},  {"shift", w.shift},
          {"exponents", w.exponents},      {"power", w.power},        {"weights", img.weights},
          {"character", img.character}};
}

Json to_json(const BBVerdict& v) {
  Json ws = Json::array();
  for (const auto& w : v.witnesses) ws.push_back(to_json(w));
  return {{"is_bb", v.is_bb}, {"witnesses", ws}};
}

Json to_json(const Inertia& i) { return {{"pos", i.pos}, {"neg", i.neg}, {"zero", i.zero}}; }

Json to_json(const ModuliReport& r) {
  Json out = {{"input", to_json(r.input)},
              {"sym", to_json(r.sym)},
              {"dim_v", r.dim_v},
              {"orbit_rank", r.orbit_rank},
              {"n", r.n},
              {"n_prime", r.n_prime.n_prime},
              {"signature", {r.n_prime.sig_pos, r.n_prime.sig_neg}},
              {"zeta", zeta_string(r.hodge.zeta_exp, r.sym.order)},
              {"zeta_exp", r.hodge.zeta_exp},
              {"domain", r.domain.to_string()},
              {"hodge", to_json(r.hodge)},
              {"member", to_json(r.member)},
              {"certificate", to_json(r.certificate)},
              {"profile", to_json(r.profile)},
              {"seeds_used", r.seeds_used}};
  if (is_prime(static_cast<std::uint32_t>(r.sym.order))) {
    out["bb"] = r.bb.is_bb;
    out["bb_witnesses"] = to_json(r.bb)["witnesses"];
  } else {
    out["bb"] = nullptr;
  }
  return out;
}

Json to_json(const ClassificationRow& row) {
  const ModuliReport& r = row.report;
  Json out = {{"sym", to_json(r.sym)},
              {"dim_v", r.dim_v},
              {"orbit_rank", r.orbit_rank},
              {"n", r.n},
              {"n_prime", r.n_prime.n_prime},
              {"zeta", zeta_string(r.hodge.zeta_exp, r.sym.order)},
              {"domain", r.domain.to_string()},
              {"bb", r.bb.is_bb},
              {"bb_witnesses", to_json(r.bb)["witnesses"]},
              {"label", row.label ? Json(*row.label) : Json(nullptr)},
              {"reference_bb", row.reference_bb ? Json(*row.reference_bb) : Json(nullptr)},
              {"flag", row.flag ? Json(*row.flag) : Json(nullptr)}};
  return out;
}

Json to_json(const Sublattice& s) {
  return {{"rank", s.rank()},
          {"basis", integral_matrix_json(s.basis)},
          {"gram", integral_matrix_json(s.gram)},
          {"signature", to_json(s.signature)}};
}

Json make_report(const std::string& command, const Json& config, const Json& result) {
  return {{"schema", kReportSchema}, {"version", kVersion}, {"command", command}, {"config", config}, {"result", result}};
}

}  // namespace symcubic
