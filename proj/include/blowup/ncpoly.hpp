// Noncommutative polynomials in K<T1,...,Tm>: parsing, arithmetic,
// evaluation at matrix tuples, and the two searches that decide whether a
// polynomial is everywhere-singular yet not identically zero on Mat_d.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blowup/gf.hpp"
#include "blowup/matrix.hpp"
#include "blowup/search.hpp"

namespace blowup {

/// Variable indices, 1-based. The empty word is the constant monomial.
using Word = std::vector<std::uint8_t>;

struct Term {
    FieldElement coeff;
    Word word;
    friend bool operator==(const Term&, const Term&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Normalized: distinct words, no zero coefficients, terms ordered by
/// degree descending then word ascending.
class NcPoly {
public:
    NcPoly(Field field, std::size_t num_vars, std::vector<Term> terms = {});

    static NcPoly constant(Field field, std::size_t num_vars, FieldElement c);
    static NcPoly variable(Field field, std::size_t num_vars, std::uint8_t index);

    const Field& field() const { return field_; }
    std::size_t num_vars() const { return num_vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].word.empty()); }
    std::size_t degree() const { return terms_.empty() ? 0 : terms_.front().word.size(); }

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly pow(std::uint64_t e) const;

    /// Re-parseable text form, e.g. "T1^4 + T1" or "T1*T2 + 2*T2*T1".
    std::string to_string() const;

    friend bool operator==(const NcPoly& a, const NcPoly& b) {
        return same_field(a.field_, b.field_) && a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

private:
    void normalize();

    Field field_;
    std::size_t num_vars_;
    std::vector<Term> terms_;
};

/// [f, g] = f g - g f.
NcPoly commutator(const NcPoly& f, const NcPoly& g);

/// Grammar: sums/differences of products; factors are integers, T1..T9,
/// parenthesized expressions or commutators [f,g], each optionally raised to
/// a positive integer power. Products are `*` or juxtaposition.
NcPoly ncpoly_parse(std::string_view text, Field field);

/// f(A_1,...,A_m); the empty word evaluates to the identity.
MatrixFq ncpoly_eval(const NcPoly& f, std::span<const MatrixFq> args);

/// Splits a flat tuple of m*d*d reps (row-major per matrix) into matrices.
std::vector<MatrixFq> unpack_tuple(const Field& field, std::size_t m, std::size_t d,
                                   std::span<const FieldElement> flat);

enum class WitnessStatus { found, none, unknown };

struct WitnessResult {
    WitnessStatus status = WitnessStatus::unknown;
    std::vector<MatrixFq> witness;
    std::uint64_t tuples_checked = 0;
    bool exhaustive = false;
    std::optional<std::uint64_t> seed;
};

/// Some tuple with f(A) != 0. Exhaustive when q^(m d^2) <= cap (then `none`
/// proves ev_d(f) = 0); otherwise `budget` seeded random samples, where a
/// miss is reported as `unknown`.
WitnessResult ev_nonzero_witness(const NcPoly& f, std::size_t d, const SearchConfig& cfg = {});

struct CensusReport {
    bool all_singular = true;
    std::optional<std::vector<MatrixFq>> invertible_witness;
    std::uint64_t tuples_checked = 0;
    std::int64_t elapsed_ms = 0;
};

/// Exhaustively checks whether f(A) is singular for every d x d tuple.
/// Throws SearchError when the tuple space exceeds the cap.
CensusReport singular_census(const NcPoly& f, std::size_t d, const SearchConfig& cfg = {});

}  // namespace blowup
