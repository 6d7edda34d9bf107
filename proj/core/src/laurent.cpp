#include "ramtower/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "ramtower/errors.hpp"
#include "ramtower/rational.hpp"

namespace ramtower {

namespace {

using Precision = LaurentSeries::Precision;

Precision min_prec(Precision a, Precision b) {
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    return std::min(*a, *b);
}

Precision add_prec(Precision a, Precision b) {
    if (!a || !b) {
        return std::nullopt;
    }
    return *a + *b;
}

} // namespace

LaurentSeries::LaurentSeries(FqFieldPtr field) : field_(std::move(field)) {
    if (!field_) {
        throw DomainError("LaurentSeries requires a field");
    }
}

LaurentSeries::LaurentSeries(FqFieldPtr field, std::int64_t offset, std::vector<FqElem> coeffs,
                             Precision abs_precision)
    : field_(std::move(field)), offset_(offset), coeffs_(std::move(coeffs)), precision_(abs_precision) {
    if (!field_) {
        throw DomainError("LaurentSeries requires a field");
    }
    for (const FqElem c : coeffs_) {
        if (!field_->contains(c)) {
            throw DomainError("coefficient code " + std::to_string(c.code) + " outside " +
                              field_->describe());
        }
    }
    normalize();
}

LaurentSeries LaurentSeries::big_o(FqFieldPtr field, std::int64_t precision) {
    return LaurentSeries(std::move(field), 0, {}, precision);
}

LaurentSeries LaurentSeries::constant(FqFieldPtr field, FqElem c) {
    return LaurentSeries(std::move(field), 0, {c});
}

LaurentSeries LaurentSeries::monomial(FqFieldPtr field, FqElem c, std::int64_t exponent) {
    return LaurentSeries(std::move(field), exponent, {c});
}

void LaurentSeries::normalize() {
    if (precision_) {
        const std::int64_t keep = *precision_ - offset_;
        if (keep <= 0) {
            coeffs_.clear();
        } else if (static_cast<std::int64_t>(coeffs_.size()) > keep) {
            coeffs_.resize(static_cast<std::size_t>(keep));
        }
    }
    while (!coeffs_.empty() && coeffs_.back().code == 0) {
        coeffs_.pop_back();
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].code == 0) {
        ++lead;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        offset_ += static_cast<std::int64_t>(lead);
    }
    if (coeffs_.empty()) {
        offset_ = 0;
    }
}

void LaurentSeries::check_field(const LaurentSeries& other) const {
    if (!same_field(field_, other.field_)) {
        throw DomainError("series over different fields: " + field_->describe() + " vs " +
                          other.field_->describe());
    }
}

std::optional<std::int64_t> LaurentSeries::valuation() const {
    if (!coeffs_.empty()) {
        return offset_;
    }
    if (is_exact()) {
        return std::nullopt;
    }
    throw InsufficientPrecision("valuation undetermined: series is O(t^" +
                                std::to_string(*precision_) + ")");
}

Precision LaurentSeries::valuation_lower_bound() const {
    if (!coeffs_.empty()) {
        return offset_;
    }
    return precision_;
}

FqElem LaurentSeries::coeff(std::int64_t k) const {
    if (precision_ && k >= *precision_) {
        throw InsufficientPrecision("coefficient of t^" + std::to_string(k) +
                                    " unknown (series known mod t^" + std::to_string(*precision_) + ")");
    }
    const std::int64_t idx = k - offset_;
    if (idx < 0 || idx >= static_cast<std::int64_t>(coeffs_.size())) {
        return field_->zero();
    }
    return coeffs_[static_cast<std::size_t>(idx)];
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries out = *this;
    for (FqElem& c : out.coeffs_) {
        c = field_->neg(c);
    }
    return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    a.check_field(b);
    const Precision prec = min_prec(a.precision_, b.precision_);
    if (a.coeffs_.empty()) {
        return LaurentSeries(a.field_, b.offset_, b.coeffs_, prec);
    }
    if (b.coeffs_.empty()) {
        return LaurentSeries(a.field_, a.offset_, a.coeffs_, prec);
    }
    const std::int64_t lo = std::min(a.offset_, b.offset_);
    std::int64_t hi = std::max(a.offset_ + static_cast<std::int64_t>(a.coeffs_.size()),
                               b.offset_ + static_cast<std::int64_t>(b.coeffs_.size()));
    if (prec) {
        hi = std::min(hi, *prec);
    }
    if (hi <= lo) {
        return LaurentSeries(a.field_, 0, {}, prec);
    }
    std::vector<FqElem> out(static_cast<std::size_t>(hi - lo), a.field_->zero());
    auto accumulate = [&](const LaurentSeries& s) {
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            const std::int64_t k = s.offset_ + static_cast<std::int64_t>(i) - lo;
            if (k < hi - lo) {
                out[static_cast<std::size_t>(k)] = a.field_->add(out[static_cast<std::size_t>(k)], s.coeffs_[i]);
            }
        }
    };
    accumulate(a);
    accumulate(b);
    return LaurentSeries(a.field_, lo, std::move(out), prec);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    a.check_field(b);
    if (a.is_exact_zero() || b.is_exact_zero()) {
        return LaurentSeries(a.field_);
    }
    const Precision va = a.valuation_lower_bound();
    const Precision vb = b.valuation_lower_bound();
    const Precision prec = min_prec(add_prec(a.precision_, vb), add_prec(b.precision_, va));
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        return LaurentSeries(a.field_, 0, {}, prec);
    }
    const std::int64_t lo = a.offset_ + b.offset_;
    std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (prec) {
        const std::int64_t limit = *prec - lo;
        if (limit <= 0) {
            return LaurentSeries(a.field_, 0, {}, prec);
        }
        len = std::min<std::size_t>(len, static_cast<std::size_t>(limit));
    }
    const FqField& f = *a.field_;
    std::vector<FqElem> out(len, f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
        const FqElem ai = a.coeffs_[i];
        if (ai.code == 0) {
            continue;
        }
        const std::size_t jmax = std::min(b.coeffs_.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            const FqElem bj = b.coeffs_[j];
            if (bj.code != 0) {
                out[i + j] = f.add(out[i + j], f.mul(ai, bj));
            }
        }
    }
    return LaurentSeries(a.field_, lo, std::move(out), prec);
}

LaurentSeries LaurentSeries::scaled(FqElem c) const {
    if (c.code == 0) {
        // 0 * (s + O(t^P)) is the exact zero.
        return LaurentSeries(field_);
    }
    LaurentSeries out = *this;
    for (FqElem& x : out.coeffs_) {
        x = field_->mul(x, c);
    }
    return out;
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const {
    LaurentSeries out = *this;
    if (!out.coeffs_.empty()) {
        out.offset_ += k;
    }
    if (out.precision_) {
        *out.precision_ += k;
    }
    return out;
}

LaurentSeries LaurentSeries::truncated(std::int64_t precision) const {
    return LaurentSeries(field_, offset_, coeffs_, min_prec(precision_, precision));
}

LaurentSeries LaurentSeries::pow(std::uint64_t e) const {
    LaurentSeries result = constant(field_, field_->one());
    LaurentSeries base = *this;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

LaurentSeries LaurentSeries::p_power(std::uint64_t k) const {
    const std::int64_t e = static_cast<std::int64_t>(checked_pow(field_->p(), k));
    Precision prec = precision_;
    if (prec) {
        *prec *= e;
    }
    if (coeffs_.empty()) {
        return LaurentSeries(field_, 0, {}, prec);
    }
    std::vector<FqElem> out((coeffs_.size() - 1) * static_cast<std::size_t>(e) + 1, field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i * static_cast<std::size_t>(e)] = field_->frobenius(coeffs_[i], k);
    }
    return LaurentSeries(field_, offset_ * e, std::move(out), prec);
}

LaurentSeries LaurentSeries::inverse(std::optional<std::int64_t> rel_precision) const {
    if (is_exact_zero()) {
        throw DomainError("inverse of the zero series");
    }
    const std::int64_t v = *valuation();
    if (is_exact() && coeffs_.size() == 1) {
        return monomial(field_, field_->inv(coeffs_[0]), -v);
    }
    std::int64_t r = 0;
    if (precision_) {
        r = *precision_ - v;
        if (rel_precision) {
            r = std::min(r, *rel_precision);
        }
    } else {
        if (!rel_precision) {
            throw DomainError("inverse of an exact non-monomial series needs a precision cap");
        }
        r = *rel_precision;
    }
    const FqField& f = *field_;
    const FqElem u0inv = f.inv(coeffs_[0]);
    std::vector<FqElem> w(static_cast<std::size_t>(std::max<std::int64_t>(r, 0)), f.zero());
    for (std::size_t n = 0; n < w.size(); ++n) {
        if (n == 0) {
            w[0] = u0inv;
            continue;
        }
        FqElem acc = f.zero();
        for (std::size_t k = 1; k <= n && k < coeffs_.size(); ++k) {
            acc = f.add(acc, f.mul(coeffs_[k], w[n - k]));
        }
        w[n] = f.neg(f.mul(u0inv, acc));
    }
    return LaurentSeries(field_, -v, std::move(w), -v + r);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return same_field(a.field_, b.field_) && a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_ &&
           a.precision_ == b.precision_;
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
    check_field(other);
    const Precision prec = min_prec(precision_, other.precision_);
    std::int64_t lo = std::min(offset_, other.offset_);
    std::int64_t hi = std::max(offset_ + static_cast<std::int64_t>(coeffs_.size()),
                               other.offset_ + static_cast<std::int64_t>(other.coeffs_.size()));
    if (coeffs_.empty()) {
        lo = other.offset_;
    }
    if (other.coeffs_.empty()) {
        lo = coeffs_.empty() ? 0 : offset_;
    }
    if (prec) {
        hi = std::min(hi, *prec);
    }
    for (std::int64_t k = lo; k < hi; ++k) {
        const auto get = [k](const LaurentSeries& s) {
            const std::int64_t idx = k - s.offset_;
            if (idx < 0 || idx >= static_cast<std::int64_t>(s.coeffs_.size())) {
                return FqElem{0};
            }
            return s.coeffs_[static_cast<std::size_t>(idx)];
        };
        if (get(*this) != get(other)) {
            return false;
        }
    }
    return true;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    if (coeffs_.empty()) {
        if (is_exact()) {
            return "0";
        }
        os << "O(t^" << *precision_ << ")";
        return os.str();
    }
    const auto power = [](std::int64_t e) -> std::string {
        if (e == 0) {
            return "";
        }
        if (e == 1) {
            return "t";
        }
        return "t^" + std::to_string(e);
    };
    std::ostringstream body;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].code == 0) {
            continue;
        }
        if (!first) {
            body << " + ";
        }
        first = false;
        const std::string tp = power(static_cast<std::int64_t>(i));
        if (tp.empty()) {
            body << coeffs_[i].code;
        } else if (coeffs_[i].code == 1) {
            body << tp;
        } else {
            body << coeffs_[i].code << "*" << tp;
        }
    }
    if (offset_ == 0) {
        os << body.str();
    } else {
        os << power(offset_) << "*(" << body.str() << ")";
    }
    if (precision_) {
        os << " + O(t^" << *precision_ << ")";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Literal parser: a small recursive-descent evaluator over +, -, *, (), t^k,
// integers, and O(t^k).

namespace {

class SeriesParser {
public:
    SeriesParser(const FqFieldPtr& field, std::string_view text) : field_(field), text_(text) {}

    LaurentSeries parse() {
        LaurentSeries value = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw DomainError("series literal '" + std::string(text_) + "': " + why + " at offset " +
                          std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    long long integer() {
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        const std::size_t start = pos_;
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > (std::numeric_limits<long long>::max() - 9) / 10) {
                fail("integer too large");
            }
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        return negative ? -v : v;
    }

    std::int64_t exponent() {
        if (!accept('^')) {
            return 1;
        }
        if (accept('(')) {
            const long long e = integer();
            expect(')');
            return e;
        }
        return integer();
    }

    LaurentSeries expr() {
        LaurentSeries acc = term();
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    LaurentSeries term() {
        LaurentSeries acc = factor();
        while (accept('*')) {
            acc = acc * factor();
        }
        return acc;
    }

    LaurentSeries factor() {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            LaurentSeries inner = expr();
            expect(')');
            return inner;
        }
        if (c == 'O') {
            ++pos_;
            expect('(');
            expect('t');
            const std::int64_t e = exponent();
            expect(')');
            return LaurentSeries::big_o(field_, e);
        }
        if (c == 't') {
            ++pos_;
            return LaurentSeries::monomial(field_, field_->one(), exponent());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return LaurentSeries::constant(field_, field_->from_int(integer()));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const FqFieldPtr& field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentSeries parse_series(const FqFieldPtr& field, std::string_view text) {
    return SeriesParser(field, text).parse();
}

LaurentSeries frobenius_twist(const LaurentSeries& s, std::uint64_t e) {
    return s.p_power(e * s.field()->m());
}

} // namespace ramtower
