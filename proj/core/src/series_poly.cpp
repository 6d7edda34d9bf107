#include "ramtower/series_poly.hpp"

#include <sstream>

#include "ramtower/errors.hpp"

namespace ramtower {

SeriesPoly::SeriesPoly(FqFieldPtr field) : field_(std::move(field)) {}

SeriesPoly::SeriesPoly(FqFieldPtr field, std::vector<LaurentSeries> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const LaurentSeries& c : coeffs_) {
        if (!same_field(c.field(), field_)) {
            throw DomainError("SeriesPoly coefficient over a different field");
        }
    }
    trim();
}

SeriesPoly SeriesPoly::from_terms(FqFieldPtr field,
                                  const std::vector<std::pair<std::size_t, LaurentSeries>>& terms) {
    std::size_t len = 0;
    for (const auto& [e, c] : terms) {
        len = std::max(len, e + 1);
    }
    std::vector<LaurentSeries> coeffs(len, LaurentSeries::zero(field));
    for (const auto& [e, c] : terms) {
        coeffs[e] = coeffs[e] + c;
    }
    return SeriesPoly(std::move(field), std::move(coeffs));
}

SeriesPoly SeriesPoly::x(FqFieldPtr field) {
    std::vector<LaurentSeries> coeffs{LaurentSeries::zero(field),
                                      LaurentSeries::constant(field, field->one())};
    return SeriesPoly(std::move(field), std::move(coeffs));
}

SeriesPoly SeriesPoly::constant(const LaurentSeries& c) { return SeriesPoly(c.field(), {c}); }

void SeriesPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_exact_zero()) {
        coeffs_.pop_back();
    }
}

LaurentSeries SeriesPoly::coeff(std::size_t i) const {
    if (i >= coeffs_.size()) {
        return LaurentSeries::zero(field_);
    }
    return coeffs_[i];
}

int SeriesPoly::degree() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].has_known_valuation()) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

bool SeriesPoly::is_monic() const {
    const int d = degree();
    if (d < 0 || static_cast<std::size_t>(d) + 1 != coeffs_.size()) {
        return false;
    }
    return coeffs_.back() == LaurentSeries::constant(field_, field_->one());
}

SeriesPoly SeriesPoly::operator-() const {
    std::vector<LaurentSeries> out;
    out.reserve(coeffs_.size());
    for (const LaurentSeries& c : coeffs_) {
        out.push_back(-c);
    }
    return SeriesPoly(field_, std::move(out));
}

SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
    const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<LaurentSeries> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(a.coeff(i) + b.coeff(i));
    }
    return SeriesPoly(a.field_, std::move(out));
}

SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) { return a + (-b); }

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        return SeriesPoly(a.field_);
    }
    std::vector<LaurentSeries> out(a.coeffs_.size() + b.coeffs_.size() - 1, LaurentSeries::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_exact_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_exact_zero()) {
                continue;
            }
            out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return SeriesPoly(a.field_, std::move(out));
}

SeriesPoly SeriesPoly::scaled(const LaurentSeries& c) const {
    std::vector<LaurentSeries> out;
    out.reserve(coeffs_.size());
    for (const LaurentSeries& x : coeffs_) {
        out.push_back(x * c);
    }
    return SeriesPoly(field_, std::move(out));
}

SeriesPoly SeriesPoly::rem_monic(const SeriesPoly& modulus) const {
    if (!modulus.is_monic()) {
        throw DomainError("rem_monic: modulus is not monic");
    }
    const std::size_t n = static_cast<std::size_t>(modulus.degree());
    std::vector<LaurentSeries> r = coeffs_;
    for (std::size_t k = r.size(); k-- > n;) {
        const LaurentSeries lead = r[k];
        if (lead.is_exact_zero()) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            r[k - n + i] = r[k - n + i] - lead * modulus.coeffs_[i];
        }
        r[k] = LaurentSeries::zero(field_);
    }
    if (r.size() > n) {
        r.resize(n, LaurentSeries::zero(field_));
    }
    return SeriesPoly(field_, std::move(r));
}

LaurentSeries SeriesPoly::evaluate(const LaurentSeries& x0) const {
    LaurentSeries acc = LaurentSeries::zero(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x0 + coeffs_[i];
    }
    return acc;
}

SeriesPoly SeriesPoly::compose(const SeriesPoly& h) const {
    SeriesPoly acc(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * h + constant(coeffs_[i]);
    }
    return acc;
}

SeriesPoly SeriesPoly::substitute_power(std::size_t k) const {
    if (k == 0) {
        throw DomainError("substitute_power: exponent must be positive");
    }
    if (coeffs_.empty()) {
        return *this;
    }
    std::vector<LaurentSeries> out((coeffs_.size() - 1) * k + 1, LaurentSeries::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i * k] = coeffs_[i];
    }
    return SeriesPoly(field_, std::move(out));
}

bool operator==(const SeriesPoly& a, const SeriesPoly& b) {
    return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
}

std::string SeriesPoly::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_exact_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << coeffs_[i].to_string() << ")";
        if (i == 1) {
            os << "*x";
        } else if (i > 1) {
            os << "*x^" << i;
        }
    }
    return os.str();
}

SeriesPoly frobenius_twist(const SeriesPoly& f, std::uint64_t e) {
    std::vector<LaurentSeries> out;
    out.reserve(f.coeffs().size());
    for (const LaurentSeries& c : f.coeffs()) {
        out.push_back(frobenius_twist(c, e));
    }
    return SeriesPoly(f.field(), std::move(out));
}

LaurentSeries determinant(const std::vector<std::vector<LaurentSeries>>& a) {
    const std::size_t n = a.size();
    if (n == 0) {
        throw DomainError("determinant of an empty matrix");
    }
    const FqFieldPtr& field = a[0][0].field();
    for (const auto& row : a) {
        if (row.size() != n) {
            throw DomainError("determinant: matrix is not square");
        }
    }
    const LaurentSeries zero = LaurentSeries::zero(field);
    const LaurentSeries one = LaurentSeries::constant(field, field->one());

    // Berkowitz: poly holds the characteristic polynomial of the leading
    // r x r block, highest degree first.
    std::vector<LaurentSeries> poly{one};
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<LaurentSeries> col(r + 2, zero);
        col[0] = one;
        col[1] = -a[r][r];
        std::vector<LaurentSeries> v(r, zero);
        for (std::size_t i = 0; i < r; ++i) {
            v[i] = a[i][r];
        }
        for (std::size_t k = 0; k < r; ++k) {
            LaurentSeries dot = zero;
            for (std::size_t i = 0; i < r; ++i) {
                if (!a[r][i].is_exact_zero() && !v[i].is_exact_zero()) {
                    dot = dot + a[r][i] * v[i];
                }
            }
            col[k + 2] = -dot;
            if (k + 1 < r) {
                std::vector<LaurentSeries> next(r, zero);
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t j = 0; j < r; ++j) {
                        if (!a[i][j].is_exact_zero() && !v[j].is_exact_zero()) {
                            next[i] = next[i] + a[i][j] * v[j];
                        }
                    }
                }
                v = std::move(next);
            }
        }
        std::vector<LaurentSeries> next_poly(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t j = 0; j <= i && j < poly.size(); ++j) {
                if (!col[i - j].is_exact_zero() && !poly[j].is_exact_zero()) {
                    next_poly[i] = next_poly[i] + col[i - j] * poly[j];
                }
            }
        }
        poly = std::move(next_poly);
    }
    return (n % 2 == 0) ? poly[n] : -poly[n];
}

LaurentSeries resultant(const SeriesPoly& f, const SeriesPoly& g) {
    if (!same_field(f.field(), g.field())) {
        throw DomainError("resultant: polynomials over different fields");
    }
    if (!f.is_monic()) {
        throw DomainError("resultant: first argument must be monic");
    }
    const int dg = g.degree();
    if (dg < 0) {
        if (g.is_zero()) {
            return LaurentSeries::zero(f.field());
        }
        throw InsufficientPrecision("resultant: second argument has no known nonzero coefficient");
    }
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const std::size_t m = static_cast<std::size_t>(dg);
    if (m == 0) {
        return g.coeff(0).pow(n);
    }
    if (n == 0) {
        return LaurentSeries::constant(f.field(), f.field()->one());
    }
    const std::size_t size = n + m;
    std::vector<std::vector<LaurentSeries>> s(size, std::vector<LaurentSeries>(size, LaurentSeries::zero(f.field())));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            s[i][i + j] = f.coeff(n - j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= m; ++j) {
            s[m + i][i + j] = g.coeff(m - j);
        }
    }
    return determinant(s);
}

LaurentSeries series_compose(const SeriesPoly& outer, std::optional<std::int64_t> outer_precision,
                             const LaurentSeries& inner) {
    const auto v = inner.valuation_lower_bound();
    if (v && *v <= 0) {
        throw DomainError("series_compose: inner series must have valuation >= 1");
    }
    if (outer_precision && static_cast<std::size_t>(std::max<std::int64_t>(*outer_precision, 0)) <
                               outer.coeffs().size()) {
        const SeriesPoly cut(outer.field(),
                             std::vector<LaurentSeries>(outer.coeffs().begin(),
                                                        outer.coeffs().begin() + std::max<std::int64_t>(*outer_precision, 0)));
        return series_compose(cut, outer_precision, inner);
    }
    LaurentSeries result = outer.evaluate(inner);
    if (outer_precision && v) {
        result = result + LaurentSeries::big_o(outer.field(), *outer_precision * *v);
    }
    return result;
}

} // namespace ramtower
