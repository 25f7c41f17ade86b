#include "blowup/construct.hpp"

#include <stdexcept>

namespace blowup {

namespace {

std::size_t frobenius_size(std::uint32_t q, std::size_t d) {
    auto s = checked_pow(q, d);
    if (!s || *s > (std::uint64_t{1} << 20)) throw std::invalid_argument("q^d is too large to construct");
    return static_cast<std::size_t>(*s);
}

}  // namespace

LinearMatrix construct_theorem2(const Field& field, std::size_t d, std::size_t n) {
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    const std::size_t s = frobenius_size(field->q(), d);
    if (n < s + 1)
        throw std::invalid_argument("n must be >= q^d + 1 = " + std::to_string(s + 1) +
                                    " so that the t0 tail r = n - q^d is at least 1");
    return pad_pencil(build_frobenius_pencil(field, s), n - s);
}

Instance theorem2_instance(const Field& field, std::size_t d, std::size_t n) {
    const std::size_t s = frobenius_size(field->q(), d);
    return Instance{"theorem2", field->q(), d, n, PaddedShape{s, n - s}};
}

bool theorem2_log_condition(std::uint32_t q, std::size_t d, std::size_t n) {
    if (n < 1) return false;
    auto dq = checked_pow(d, q);
    return dq && *dq <= n - 1;
}

LinearMatrix construct_remark_f2() {
    const Field f2 = FieldSpec::make(2);
    const auto neg = f2->from_int(-1);
    MatrixFq a(f2, 7, 7), b(f2, 7, 7), c(f2, 7, 7), d(f2, 7, 7);
    // Entries from the displayed matrix, 1-based (row, col).
    auto put = [&](MatrixFq& x, std::size_t i, std::size_t j, FieldElement v = FieldElement{1}) {
        x.at(i - 1, j - 1) = v;
    };
    // rows 1-3: [S | S | 0] with S = [[0,d,a],[-d,0,b],[a,b,0]]
    for (std::size_t off : {0u, 3u}) {
        put(d, 1, 2 + off);
        put(a, 1, 3 + off);
        put(d, 2, 1 + off, neg);
        put(b, 2, 3 + off);
        put(a, 3, 1 + off);
        put(b, 3, 2 + off);
    }
    // rows 4-6: [S | diag(0,0,d) | 0]
    put(d, 4, 2);
    put(a, 4, 3);
    put(d, 5, 1, neg);
    put(b, 5, 3);
    put(a, 6, 1);
    put(b, 6, 2);
    put(d, 6, 6);
    put(d, 7, 7);
    return LinearMatrix(f2, 7, 7, {a, b, c, d}, {"a", "b", "c", "d"});
}

Instance remark_f2_instance() { return Instance{"remark_f2", 2, 2, 7, PaddedShape{6, 1}}; }

std::optional<PaddedShape> recognize_padded_frobenius(const LinearMatrix& l) {
    if (l.rows() != l.cols() || l.num_vars() != 2 || l.rows() < 3) return std::nullopt;
    const std::size_t n = l.rows();
    for (std::size_t s = 2; s < n; ++s) {
        const LinearMatrix cand = pad_pencil(build_frobenius_pencil(l.field(), s), n - s);
        if (cand.coeffs() == l.coeffs()) return PaddedShape{s, n - s};
    }
    return std::nullopt;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::counterexample_confirmed: return "counterexample_confirmed";
        case Verdict::not_a_counterexample: return "not_a_counterexample";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

CounterexampleReport verify_counterexample(const LinearMatrix& l, std::size_t d, SearchMode mode,
                                           const SearchConfig& cfg, std::optional<PaddedShape> hint) {
    LinearMatrix space = space_from_pencil(l);
    RankCertificate cert = blowup_rank(space, d, mode, cfg);
    CounterexampleReport report{std::move(space), std::move(cert), d, std::nullopt, std::nullopt,
                                Verdict::inconclusive};

    const auto shape = hint ? hint : recognize_padded_frobenius(l);
    if (shape) {
        const std::size_t size = shape->ell + shape->r;
        report.proposition_bounds = std::pair{d * (size - 1), d * size};
        const std::size_t rk = report.certificate.achieved_rank;
        report.bounds_consistent =
            report.proposition_bounds->first < rk && rk < report.proposition_bounds->second;
    }
    if (report.certificate.exhaustive_proof)
        report.verdict = report.certificate.is_multiple_of_d ? Verdict::not_a_counterexample
                                                             : Verdict::counterexample_confirmed;
    return report;
}

HypothesisReport check_hypothesis(const NcPoly& f, std::size_t d, const SearchConfig& cfg) {
    HypothesisReport report;
    report.census = singular_census(f, d, cfg);
    report.witness = ev_nonzero_witness(f, d, cfg);
    report.holds = report.census.all_singular && report.witness.status == WitnessStatus::found;
    return report;
}

}  // namespace blowup
