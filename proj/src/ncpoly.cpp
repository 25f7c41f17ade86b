#include "blowup/ncpoly.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace blowup {

namespace {

constexpr std::size_t kMaxTerms = std::size_t{1} << 20;

bool term_order(const Term& a, const Term& b) {
    if (a.word.size() != b.word.size()) return a.word.size() > b.word.size();
    return a.word < b.word;
}

void require_field(const NcPoly& a, const NcPoly& b) {
    if (!same_field(a.field(), b.field()))
        throw std::invalid_argument("polynomials live in different fields");
}

std::int64_t elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

NcPoly::NcPoly(Field field, std::size_t num_vars, std::vector<Term> terms)
    : field_(std::move(field)), num_vars_(num_vars), terms_(std::move(terms)) {
    if (!field_) throw std::invalid_argument("polynomial requires a field");
    if (num_vars_ < 1) throw std::invalid_argument("polynomial needs at least one variable");
    for (const auto& t : terms_) {
        if (!field_->contains(t.coeff)) throw std::invalid_argument("coefficient not in field");
        for (auto v : t.word)
            if (v < 1 || v > num_vars_) throw std::invalid_argument("variable index out of range");
    }
    normalize();
}

void NcPoly::normalize() {
    std::map<Word, FieldElement> acc;
    for (auto& t : terms_) {
        auto [it, inserted] = acc.try_emplace(std::move(t.word), t.coeff);
        if (!inserted) it->second = field_->add(it->second, t.coeff);
    }
    terms_.clear();
    for (auto& [w, c] : acc)
        if (!c.is_zero()) terms_.push_back(Term{c, w});
    std::sort(terms_.begin(), terms_.end(), term_order);
}

NcPoly NcPoly::constant(Field field, std::size_t num_vars, FieldElement c) {
    return NcPoly(std::move(field), num_vars, {Term{c, {}}});
}

NcPoly NcPoly::variable(Field field, std::size_t num_vars, std::uint8_t index) {
    return NcPoly(std::move(field), num_vars, {Term{FieldElement{1}, {index}}});
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    require_field(*this, o);
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return NcPoly(field_, std::max(num_vars_, o.num_vars_), std::move(all));
}

NcPoly NcPoly::operator-() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff = field_->neg(t.coeff);
    return NcPoly(field_, num_vars_, std::move(out));
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + (-o); }

NcPoly NcPoly::operator*(const NcPoly& o) const {
    require_field(*this, o);
    if (terms_.size() * o.terms_.size() > kMaxTerms)
        throw std::length_error("polynomial expansion exceeds the term limit");
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Word w = a.word;
            w.insert(w.end(), b.word.begin(), b.word.end());
            out.push_back(Term{field_->mul(a.coeff, b.coeff), std::move(w)});
        }
    return NcPoly(field_, std::max(num_vars_, o.num_vars_), std::move(out));
}

NcPoly NcPoly::pow(std::uint64_t e) const {
    NcPoly result = constant(field_, num_vars_, field_->one());
    NcPoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

NcPoly commutator(const NcPoly& f, const NcPoly& g) { return f * g - g * f; }

std::string NcPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t ti = 0; ti < terms_.size(); ++ti) {
        const Term& t = terms_[ti];
        if (t.coeff.rep >= field_->p())
            throw std::logic_error("coefficient outside the prime subfield has no text form");
        if (ti > 0) out += " + ";
        std::string word;
        for (std::size_t i = 0; i < t.word.size();) {
            std::size_t j = i;
            while (j < t.word.size() && t.word[j] == t.word[i]) ++j;
            if (!word.empty()) word += "*";
            word += "T" + std::to_string(t.word[i]);
            if (j - i > 1) word += "^" + std::to_string(j - i);
            i = j;
        }
        if (word.empty())
            out += std::to_string(t.coeff.rep);
        else if (t.coeff.rep == 1)
            out += word;
        else
            out += std::to_string(t.coeff.rep) + "*" + word;
    }
    return out;
}

MatrixFq ncpoly_eval(const NcPoly& f, std::span<const MatrixFq> args) {
    if (args.size() != f.num_vars())
        throw MatrixError("ncpoly_eval: expected " + std::to_string(f.num_vars()) + " matrices");
    if (args.empty()) throw MatrixError("ncpoly_eval: no arguments");
    const std::size_t d = args[0].rows();
    for (const auto& a : args) {
        if (!a.is_square() || a.rows() != d) throw MatrixError("ncpoly_eval: arguments must be d x d");
        if (!same_field(a.field(), f.field())) throw MatrixError("ncpoly_eval: field mismatch");
    }
    MatrixFq sum(f.field(), d, d);
    for (const auto& t : f.terms()) {
        MatrixFq prod = MatrixFq::identity(f.field(), d);
        for (auto v : t.word) prod = mat_mul(prod, args[v - 1]);
        sum = mat_add(sum, mat_scale(t.coeff, prod));
    }
    return sum;
}

std::vector<MatrixFq> unpack_tuple(const Field& field, std::size_t m, std::size_t d,
                                   std::span<const FieldElement> flat) {
    std::vector<MatrixFq> out;
    out.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        auto part = flat.subspan(k * d * d, d * d);
        out.push_back(MatrixFq::from_reps(field, d, d, {part.begin(), part.end()}));
    }
    return out;
}

WitnessResult ev_nonzero_witness(const NcPoly& f, std::size_t d, const SearchConfig& cfg) {
    if (d < 1) throw std::invalid_argument("ev_nonzero_witness: d must be >= 1");
    const Field& field = f.field();
    const std::uint32_t q = field->q();
    const std::size_t m = f.num_vars();
    const std::size_t len = m * d * d;
    auto count = checked_pow(q, len);

    WitnessResult result;
    if (count && *count <= cfg.cap) {
        result.exhaustive = true;
        auto make_pred = [&] {
            return [&, buf = std::vector<FieldElement>(len)](std::uint64_t i) mutable {
                decode_tuple(i, q, buf);
                return !ncpoly_eval(f, unpack_tuple(field, m, d, buf)).is_zero();
            };
        };
        auto hit = find_first(cfg, *count, make_pred, &result.tuples_checked);
        std::vector<FieldElement> buf(len);
        if (hit) {
            decode_tuple(*hit, q, buf);
            result.status = WitnessStatus::found;
            result.witness = unpack_tuple(field, m, d, buf);
        } else {
            result.status = WitnessStatus::none;
        }
        return result;
    }

    result.seed = cfg.seed;
    auto make_pred = [&] {
        return [&, buf = std::vector<FieldElement>(len)](std::uint64_t i) mutable {
            random_tuple(cfg.seed, i, q, buf);
            return !ncpoly_eval(f, unpack_tuple(field, m, d, buf)).is_zero();
        };
    };
    auto hit = find_first(cfg, cfg.budget, make_pred, &result.tuples_checked);
    if (hit) {
        std::vector<FieldElement> buf(len);
        random_tuple(cfg.seed, *hit, q, buf);
        result.status = WitnessStatus::found;
        result.witness = unpack_tuple(field, m, d, buf);
    }
    return result;
}

CensusReport singular_census(const NcPoly& f, std::size_t d, const SearchConfig& cfg) {
    if (d < 1) throw std::invalid_argument("singular_census: d must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const Field& field = f.field();
    const std::uint32_t q = field->q();
    const std::size_t m = f.num_vars();
    const std::size_t len = m * d * d;
    const std::uint64_t count = require_within_cap(q, len, cfg.cap, "singular_census");

    auto make_pred = [&] {
        return [&, buf = std::vector<FieldElement>(len)](std::uint64_t i) mutable {
            decode_tuple(i, q, buf);
            return mat_rank(ncpoly_eval(f, unpack_tuple(field, m, d, buf))) == d;
        };
    };
    CensusReport report;
    auto hit = find_first(cfg, count, make_pred, &report.tuples_checked);
    if (hit) {
        std::vector<FieldElement> buf(len);
        decode_tuple(*hit, q, buf);
        report.all_singular = false;
        report.invertible_witness = unpack_tuple(field, m, d, buf);
    }
    report.elapsed_ms = elapsed_ms_since(t0);
    return report;
}

}  // namespace blowup
