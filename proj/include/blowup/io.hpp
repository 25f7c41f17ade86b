// JSON forms of fields, matrices, space files, certificates and reports.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blowup/construct.hpp"
#include "json.hpp"

namespace blowup {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"p", "k", "modulus"}; modulus (low-to-high) omitted when k = 1.
json field_to_json(const FieldSpec& f);
Field field_from_json(const json& j);

/// {"rows", "cols", "entries": [[rep, ...], ...]}.
json matrix_to_json(const MatrixFq& m);
MatrixFq matrix_from_json(const json& j, const Field& field);
json matrices_to_json(const std::vector<MatrixFq>& ms);

struct SpaceFile {
    LinearMatrix pencil;
    std::optional<Instance> instance;
};

/// {"field", "rows", "cols", "labels", "basis", ["instance"]}.
json space_to_json(const LinearMatrix& l, const std::optional<Instance>& instance = std::nullopt);
SpaceFile space_from_json(const json& j);

json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);

/// {"rank", "d", "mode", "exhaustive", "multiple_of_d", "witness",
///  "tuples_checked", "seed", "elapsed_ms"}.
json certificate_to_json(const RankCertificate& c);

json census_to_json(const CensusReport& c);
json witness_to_json(const WitnessResult& w);
json hypothesis_to_json(const HypothesisReport& h);
json higman_verification_to_json(const HigmanVerification& v);

/// [{"op": "row_axpy"|"col_axpy"|"permute", "d", "src", "dst", "factor" | "perm"}, ...]
json transcript_to_json(const std::vector<BlockOp>& ops, std::size_t d);
std::vector<BlockOp> transcript_from_json(const json& j, const Field& field);

/// {"instance", "certificate", "proposition_bounds", "bounds_consistent", "verdict", ...}.
json counterexample_to_json(const CounterexampleReport& r, const Instance& inst);

}  // namespace blowup
