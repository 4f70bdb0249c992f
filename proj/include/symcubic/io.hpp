#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symcubic/boundary.hpp"
#include "symcubic/jacobian.hpp"
#include "symcubic/lattice.hpp"
#include "symcubic/moduli.hpp"

namespace symcubic {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "symcubic.report/1";
inline constexpr const char* kVersion = "0.1.0";

/// Parses and throws InvalidInput on unreadable or malformed files.
Json read_json_file(const std::string& path);

/// {"vars": 6, "degree": 3, "terms": [{"coef": "p/q", "exps": [...]}]}
Json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j);

/// {"order": N, "weights": [...], "lambda_exp": w}
Json to_json(const SymmetryType& s);
SymmetryType symmetry_from_json(const Json& j);

/// {"gram": [[...]], "isometry": [[...]], "arrangement": [[...]], "subspace": [[...]],
///  "e": [...], "f": [...]}; everything but "gram" is optional.
struct LatticeInput {
  IntegralLattice lattice;
  std::optional<MatrixQ> isometry;
  std::vector<VectorQ> arrangement;
  std::vector<VectorQ> subspace;
  std::optional<VectorQ> e;
  std::optional<VectorQ> f;
};
LatticeInput lattice_from_json(const Json& j);

/// Integral matrices as JSON integers, rational vectors as "p/q" strings.
Json integral_matrix_json(const MatrixQ& m);
Json rational_vectors_json(const std::vector<VectorQ>& rows);

Json to_json(const SmoothnessCertificate& c);
Json to_json(const JacobianProfile& p);
Json to_json(const HodgeEigenData& h);
Json to_json(const FactorizationWitness& w);
Json to_json(const BBVerdict& v);
Json to_json(const ModuliReport& r);
/// Seed-independent columns only, so tables are comparable across seeds.
Json to_json(const ClassificationRow& row);
Json to_json(const Sublattice& s);
Json to_json(const Inertia& i);

Json make_report(const std::string& command, const Json& config, const Json& result);

}  // namespace symcubic
