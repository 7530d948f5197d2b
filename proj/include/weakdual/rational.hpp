#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weakdual {

using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;

// Error categories surfaced by the library. The CLI maps them to exit codes.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// Canonical form: "p" for integers, otherwise "p/q" with q > 0.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

bool is_integer(const Rational& x);
Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);
long to_long(const Integer& x);
long to_long_exact(const Rational& x);

// x^e for any integer e; x must be nonzero when e < 0.
Rational power(const Rational& x, long e);

Rational dot(const QVector& a, const QVector& b);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& c, const QVector& a);
bool is_zero(const QVector& v);

std::strong_ordering compare_vectors(const QVector& a, const QVector& b);

std::string to_string(const QVector& v);

}  // namespace weakdual
