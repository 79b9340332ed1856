#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sublat/bigint.hpp"

namespace sublat {

/// Dense univariate polynomial in the formal variable p with
/// arbitrary-precision integer coefficients. Canonical form: the stored
/// coefficient of highest index is nonzero; the zero polynomial stores
/// nothing at all.
class IntPoly {
public:
    IntPoly() = default;

    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly constant(BigInt v) {
        IntPoly r;
        if (v != 0) r.c_.push_back(std::move(v));
        return r;
    }

    /// coeff * p^exp
    static IntPoly monomial(std::size_t exp, BigInt coeff = 1) {
        IntPoly r;
        if (coeff != 0) {
            r.c_.assign(exp + 1, BigInt(0));
            r.c_.back() = std::move(coeff);
        }
        return r;
    }

    bool is_zero() const { return c_.empty(); }

    /// Degree of the zero polynomial is deliberately not a number.
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    const std::vector<BigInt>& coeffs() const { return c_; }

    /// Coefficient of p^i; zero beyond the stored range.
    const BigInt& coeff(std::size_t i) const {
        static const BigInt zero{};
        return i < c_.size() ? c_[i] : zero;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(c));
    }

    IntPoly operator-() const {
        IntPoly r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }

    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    bool operator==(const IntPoly&) const = default;

    /// Exact evaluation at x (Horner).
    BigInt eval(const BigInt& x) const {
        BigInt r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// Exact quotient a / b. Throws std::domain_error when b is zero or when
/// the division leaves a remainder (no integer-polynomial quotient exists).
inline IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("div_exact: division by zero polynomial");
    if (a.is_zero()) return {};
    const std::size_t db = *b.degree();
    if (*a.degree() < db) throw std::domain_error("div_exact: non-exact division");
    std::vector<BigInt> q(*a.degree() - db + 1, BigInt(0));
    IntPoly rem = a;
    const BigInt& lead = b.coeff(db);
    while (!rem.is_zero() && *rem.degree() >= db) {
        const std::size_t dr = *rem.degree();
        if (!divides(lead, rem.coeff(dr))) throw std::domain_error("div_exact: non-exact division");
        BigInt f = div_exact(rem.coeff(dr), lead);
        q[dr - db] = f;
        rem -= IntPoly::monomial(dr - db, std::move(f)) * b;
    }
    if (!rem.is_zero()) throw std::domain_error("div_exact: non-exact division");
    return IntPoly(std::move(q));
}

/// Coefficient-shape report. For the zero polynomial only is_zero is
/// meaningful; p_power is undefined and left at zero.
struct PolyShape {
    bool is_zero = false;
    bool unimodal = false;
    /// Palindromic after dividing out the maximal power of p.
    bool symmetric = false;
    std::size_t p_power = 0;
    IntPoly reduced;
};

inline PolyShape shape(const IntPoly& a) {
    PolyShape s;
    if (a.is_zero()) {
        s.is_zero = true;
        return s;
    }
    const auto& c = a.coeffs();
    std::size_t low = 0;
    while (c[low] == 0) ++low;
    s.p_power = low;
    s.reduced = IntPoly(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end()));

    std::size_t i = 0;
    while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
    while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
    s.unimodal = (i + 1 == c.size());

    const auto& rc = s.reduced.coeffs();
    s.symmetric = true;
    for (std::size_t j = 0; j < rc.size() / 2; ++j)
        if (rc[j] != rc[rc.size() - 1 - j]) {
            s.symmetric = false;
            break;
        }
    return s;
}

}  // namespace sublat
