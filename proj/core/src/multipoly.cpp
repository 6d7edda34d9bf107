#include "ramtower/multipoly.hpp"

#include <sstream>

namespace ramtower {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rat& c) {
    MultiPoly out(nvars);
    out.add_term(Exponents(nvars, 0), c);
    return out;
}

MultiPoly MultiPoly::variable_power(std::size_t nvars, std::size_t index, std::uint64_t power, const Rat& c) {
    if (index == 0 || index > nvars) {
        throw DomainError("variable index " + std::to_string(index) + " out of range");
    }
    Exponents e(nvars, 0);
    e[index - 1] = power;
    MultiPoly out(nvars);
    out.add_term(e, c);
    return out;
}

bool MultiPoly::is_constant(Rat* c) const {
    if (terms_.empty()) {
        if (c) {
            *c = 0;
        }
        return true;
    }
    if (terms_.size() != 1) {
        return false;
    }
    const auto& [e, v] = *terms_.begin();
    for (const std::uint64_t x : e) {
        if (x != 0) {
            return false;
        }
    }
    if (c) {
        *c = v;
    }
    return true;
}

Rat MultiPoly::coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rat& c) {
    if (e.size() != nvars_) {
        throw DomainError("monomial has the wrong number of variables");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void MultiPoly::check_vars(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) {
        throw DomainError("MultiPoly variable count mismatch");
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) {
        out.add_term(e, c);
    }
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly out(a.nvars_);
    MultiPoly::Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.nvars_; ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    if (c == 0) {
        return MultiPoly(nvars_);
    }
    MultiPoly out = *this;
    for (auto& [e, v] : out.terms_) {
        v *= c;
    }
    return out;
}

MultiPoly MultiPoly::without_variable(std::size_t index) const {
    if (index == 0 || index > nvars_) {
        throw DomainError("variable index " + std::to_string(index) + " out of range");
    }
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[index - 1] == 0) {
            out.terms_.emplace(e, c);
        }
    }
    return out;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& values) const {
    if (values.size() != nvars_) {
        throw DomainError("evaluate: expected " + std::to_string(nvars_) + " values");
    }
    Rat sum(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < nvars_ && term != 0; ++i) {
            term *= rat_pow(values[i], e[i]);
        }
        sum += term;
    }
    return sum;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        bool has_var = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (has_var) {
                mono << "*";
            }
            has_var = true;
            mono << "v" << (i + 1);
            if (e[i] > 1) {
                mono << "^" << e[i];
            }
        }
        if (!has_var) {
            os << ramtower::to_string(c);
        } else if (c == 1) {
            os << mono.str();
        } else {
            os << "(" << ramtower::to_string(c) << ")*" << mono.str();
        }
    }
    return os.str();
}

} // namespace ramtower
