// The two counterexample families and their verification.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "blowup/higman.hpp"
#include "blowup/ncpoly.hpp"
#include "blowup/pencil.hpp"

namespace blowup {

/// Block sizes of a padded linearization D_{f,r}: L_f is ell x ell, the t0 tail r x r.
struct PaddedShape {
    std::size_t ell = 0;
    std::size_t r = 0;
    friend bool operator==(const PaddedShape&, const PaddedShape&) = default;
};

/// Parameters identifying a constructed instance; embedded in space files and reports.
struct Instance {
    std::string kind = "custom";  // "theorem2", "remark_f2" or "custom"
    std::uint32_t q = 0;
    std::size_t d = 0;
    std::size_t n = 0;
    std::optional<PaddedShape> shape;
};

/// n x n pencil D(t0, t1): the Frobenius pencil of size q^d padded with an
/// (n - q^d) x (n - q^d) t0 tail. Requires d >= 2 and n >= q^d + 1.
LinearMatrix construct_theorem2(const Field& field, std::size_t d, std::size_t n);
Instance theorem2_instance(const Field& field, std::size_t d, std::size_t n);

/// The field-size condition q <= log_d(n - 1), i.e. d^q <= n - 1.
bool theorem2_log_condition(std::uint32_t q, std::size_t d, std::size_t n);

/// The 7 x 7 pencil over GF(2) in (a, b, c, d); c has a zero coefficient.
LinearMatrix construct_remark_f2();
Instance remark_f2_instance();

/// Detects pad_pencil(build_frobenius_pencil(F, s), r) up to labels.
std::optional<PaddedShape> recognize_padded_frobenius(const LinearMatrix& l);

enum class Verdict { counterexample_confirmed, not_a_counterexample, inconclusive };
const char* to_string(Verdict v);

struct CounterexampleReport {
    LinearMatrix space;  // the reduced basis the search ran over
    RankCertificate certificate;
    std::size_t d = 0;
    std::optional<std::pair<std::size_t, std::size_t>> proposition_bounds;
    std::optional<bool> bounds_consistent;
    Verdict verdict = Verdict::inconclusive;
};

/// Runs blowup_rank on the reduced basis of l. The verdict is
/// counterexample_confirmed iff the search is a proof and the rank is not a
/// multiple of d. Bounds (d(ell+r-1), d(ell+r)) are reported when the padded
/// shape is known from `hint` or recognized.
CounterexampleReport verify_counterexample(const LinearMatrix& l, std::size_t d, SearchMode mode,
                                           const SearchConfig& cfg = {},
                                           std::optional<PaddedShape> hint = std::nullopt);

struct HypothesisReport {
    CensusReport census;
    WitnessResult witness;
    bool holds = false;
};

/// f(A) singular for all A in Mat_d^m, and f(A) != 0 for some A.
HypothesisReport check_hypothesis(const NcPoly& f, std::size_t d, const SearchConfig& cfg = {});

}  // namespace blowup
