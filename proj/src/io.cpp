#include "blowup/io.hpp"

namespace blowup {

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key) {
    try {
        return require(j, key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad value for \"") + key + "\": " + e.what());
    }
}

}  // namespace

json field_to_json(const FieldSpec& f) {
    json j{{"p", f.p()}, {"k", f.k()}};
    if (f.k() > 1) j["modulus"] = f.modulus();
    return j;
}

Field field_from_json(const json& j) {
    const auto p = get_as<std::uint32_t>(j, "p");
    const auto k = j.contains("k") ? get_as<std::uint32_t>(j, "k") : 1u;
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus")) modulus = get_as<std::vector<std::uint32_t>>(j, "modulus");
    try {
        return FieldSpec::make(p, k, modulus);
    } catch (const FieldError& e) {
        throw FormatError(std::string("invalid field: ") + e.what());
    }
}

json matrix_to_json(const MatrixFq& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).rep);
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

MatrixFq matrix_from_json(const json& j, const Field& field) {
    const auto rows = get_as<std::size_t>(j, "rows");
    const auto cols = get_as<std::size_t>(j, "cols");
    const auto entries = get_as<std::vector<std::vector<std::uint32_t>>>(j, "entries");
    if (entries.size() != rows) throw FormatError("matrix row count does not match \"rows\"");
    std::vector<FieldElement> flat;
    flat.reserve(rows * cols);
    for (const auto& row : entries) {
        if (row.size() != cols) throw FormatError("matrix row length does not match \"cols\"");
        for (auto v : row) {
            if (v >= field->q()) throw FormatError("matrix entry out of range for field");
            flat.emplace_back(v);
        }
    }
    return MatrixFq::from_reps(field, rows, cols, std::move(flat));
}

json matrices_to_json(const std::vector<MatrixFq>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(matrix_to_json(m));
    return out;
}

json instance_to_json(const Instance& inst) {
    json j{{"kind", inst.kind}};
    if (inst.kind == "theorem2") {
        j["q"] = inst.q;
        j["d"] = inst.d;
        j["n"] = inst.n;
    }
    if (inst.shape) j["padded_shape"] = {{"ell", inst.shape->ell}, {"r", inst.shape->r}};
    return j;
}

Instance instance_from_json(const json& j) {
    Instance inst;
    inst.kind = get_as<std::string>(j, "kind");
    if (j.contains("q")) inst.q = get_as<std::uint32_t>(j, "q");
    if (j.contains("d")) inst.d = get_as<std::size_t>(j, "d");
    if (j.contains("n")) inst.n = get_as<std::size_t>(j, "n");
    if (j.contains("padded_shape")) {
        const auto& s = j.at("padded_shape");
        inst.shape = PaddedShape{get_as<std::size_t>(s, "ell"), get_as<std::size_t>(s, "r")};
    }
    return inst;
}

json space_to_json(const LinearMatrix& l, const std::optional<Instance>& instance) {
    json j{{"field", field_to_json(*l.field())},
           {"rows", l.rows()},
           {"cols", l.cols()},
           {"labels", l.labels()},
           {"basis", matrices_to_json(l.coeffs())}};
    if (instance) j["instance"] = instance_to_json(*instance);
    return j;
}

SpaceFile space_from_json(const json& j) {
    Field field = field_from_json(require(j, "field"));
    const auto rows = get_as<std::size_t>(j, "rows");
    const auto cols = get_as<std::size_t>(j, "cols");
    const auto& basis = require(j, "basis");
    if (!basis.is_array() || basis.empty()) throw FormatError("\"basis\" must be a nonempty array");
    std::vector<MatrixFq> coeffs;
    for (const auto& m : basis) {
        MatrixFq x = matrix_from_json(m, field);
        if (x.rows() != rows || x.cols() != cols) throw FormatError("basis matrix has wrong shape");
        coeffs.push_back(std::move(x));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = get_as<std::vector<std::string>>(j, "labels");
    std::optional<Instance> inst;
    if (j.contains("instance")) inst = instance_from_json(j.at("instance"));
    try {
        return SpaceFile{LinearMatrix(field, rows, cols, std::move(coeffs), std::move(labels)), inst};
    } catch (const MatrixError& e) {
        throw FormatError(std::string("invalid space: ") + e.what());
    }
}

json certificate_to_json(const RankCertificate& c) {
    json j{{"rank", c.achieved_rank},
           {"d", c.blowup_rows},
           {"mode", to_string(c.mode)},
           {"exhaustive", c.exhaustive_proof},
           {"multiple_of_d", c.is_multiple_of_d},
           {"witness", matrices_to_json(c.witness)},
           {"tuples_checked", c.tuples_checked},
           {"elapsed_ms", c.elapsed_ms}};
    j["seed"] = c.seed ? json(*c.seed) : json(nullptr);
    return j;
}

json census_to_json(const CensusReport& c) {
    return json{{"all_singular", c.all_singular},
                {"witness", c.invertible_witness ? matrices_to_json(*c.invertible_witness) : json(nullptr)},
                {"tuples_checked", c.tuples_checked},
                {"elapsed_ms", c.elapsed_ms}};
}

json witness_to_json(const WitnessResult& w) {
    const char* status = w.status == WitnessStatus::found  ? "found"
                         : w.status == WitnessStatus::none ? "none"
                                                           : "unknown";
    json j{{"status", status},
           {"exhaustive", w.exhaustive},
           {"tuples_checked", w.tuples_checked},
           {"witness", w.status == WitnessStatus::found ? matrices_to_json(w.witness) : json(nullptr)}};
    j["seed"] = w.seed ? json(*w.seed) : json(nullptr);
    return j;
}

json hypothesis_to_json(const HypothesisReport& h) {
    return json{{"census", census_to_json(h.census)},
                {"nonzero_witness", witness_to_json(h.witness)},
                {"holds", h.holds}};
}

json higman_verification_to_json(const HigmanVerification& v) {
    json j{{"holds", v.holds}, {"d", v.d}, {"ell", v.ell}, {"tuples_checked", v.tuples_checked}};
    if (v.violation)
        j["violation"] = {{"tuple", matrices_to_json(*v.violation)},
                          {"lhs_rank", v.lhs_rank},
                          {"rhs_rank", v.rhs_rank}};
    else
        j["violation"] = nullptr;
    return j;
}

json transcript_to_json(const std::vector<BlockOp>& ops, std::size_t d) {
    json out = json::array();
    for (const auto& op : ops) {
        json j{{"op", to_string(op.kind)}, {"d", d}};
        if (op.kind == BlockOp::Kind::permute) {
            j["perm"] = op.perm;
        } else {
            j["src"] = op.src;
            j["dst"] = op.dst;
            j["factor"] = matrix_to_json(op.factor.value());
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<BlockOp> transcript_from_json(const json& j, const Field& field) {
    if (!j.is_array()) throw FormatError("transcript must be an array");
    std::vector<BlockOp> ops;
    for (const auto& e : j) {
        const auto name = get_as<std::string>(e, "op");
        BlockOp op;
        if (name == "permute") {
            op.perm = get_as<std::vector<std::size_t>>(e, "perm");
        } else if (name == "row_axpy" || name == "col_axpy") {
            op.kind = name == "row_axpy" ? BlockOp::Kind::row_axpy : BlockOp::Kind::col_axpy;
            op.src = get_as<std::size_t>(e, "src");
            op.dst = get_as<std::size_t>(e, "dst");
            op.factor = matrix_from_json(require(e, "factor"), field);
        } else {
            throw FormatError("unknown transcript op \"" + name + "\"");
        }
        ops.push_back(std::move(op));
    }
    return ops;
}

json counterexample_to_json(const CounterexampleReport& r, const Instance& inst) {
    json j{{"instance", instance_to_json(inst)},
           {"field", field_to_json(*r.space.field())},
           {"labels", r.space.labels()},
           {"certificate", certificate_to_json(r.certificate)},
           {"verdict", to_string(r.verdict)},
           {"tool_version", kToolVersion}};
    if (r.proposition_bounds) {
        j["proposition_bounds"] = {r.proposition_bounds->first, r.proposition_bounds->second};
        j["bounds_consistent"] = *r.bounds_consistent;
    } else {
        j["proposition_bounds"] = nullptr;
        j["bounds_consistent"] = nullptr;
    }
    return j;
}

}  // namespace blowup
