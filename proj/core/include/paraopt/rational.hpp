#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace paraopt {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Vec = std::vector<Rational>;

/// Parse "p/q", an integer, or a decimal like "3.5" (exact: 7/2).
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "p/q" with "/q" omitted when q == 1.
std::string render(const Rational& q);

double to_double(const Rational& q);

/// Floor/ceil of an exact rational, as arbitrary-precision integers.
Int floor_rat(const Rational& q);
Int ceil_rat(const Rational& q);

/// Floored integer division (rounds toward negative infinity).
Int floor_div(const Int& a, const Int& b);

Rational dot(const Vec& a, const Vec& b);

/// c*d + e in the single parameter d: the last-column entries of the
/// parametric tableau.
struct AffineForm {
    Rational dcoeff;
    Rational constant;

    AffineForm() : dcoeff(0), constant(0) {}
    AffineForm(Rational c, Rational e) : dcoeff(std::move(c)), constant(std::move(e)) {}

    Rational eval(const Rational& d) const { return Rational(dcoeff * d + constant); }

    /// Root of c*d + e = 0; defined iff dcoeff != 0.
    std::optional<Rational> root() const {
        if (dcoeff == 0) return std::nullopt;
        return Rational(-constant / dcoeff);
    }

    bool is_zero() const { return dcoeff == 0 && constant == 0; }

    AffineForm& operator+=(const AffineForm& o) {
        dcoeff += o.dcoeff;
        constant += o.constant;
        return *this;
    }
    AffineForm& operator-=(const AffineForm& o) {
        dcoeff -= o.dcoeff;
        constant -= o.constant;
        return *this;
    }
    AffineForm& operator*=(const Rational& k) {
        dcoeff *= k;
        constant *= k;
        return *this;
    }
    friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
    friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
    friend AffineForm operator*(AffineForm a, const Rational& k) { return a *= k; }
    friend AffineForm operator*(const Rational& k, AffineForm a) { return a *= k; }
    friend bool operator==(const AffineForm& a, const AffineForm& b) {
        return a.dcoeff == b.dcoeff && a.constant == b.constant;
    }
};

/// "c*d + e" with both parts rendered canonically, e.g. "-3*d + 10".
std::string render(const AffineForm& f);

}  // namespace paraopt
