#ifndef CIRCDIAM_RATIONAL_HPP
#define CIRCDIAM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circdiam {

// mpq_class keeps values canonical (lowest terms, positive denominator) as long
// as every construction goes through make_rational / parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

Rational make_rational(long num, long den = 1);

// Accepts "-3", "+7", "p/q" and decimal literals such as "3.2" or "-1.05e-2".
// Decimals are converted exactly (3.2 -> 16/5). Returns nullopt on malformed
// input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

// Lowest-terms "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

int sign(const Rational& q);
int sign(const Integer& z);

QVector to_rational(const ZVector& v);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& s, const QVector& v);
QVector axpy(const QVector& x, const Rational& alpha, const QVector& g);  // x + alpha*g
bool is_zero(const QVector& v);

std::string to_string(const QVector& v);

struct QVectorHash {
    std::size_t operator()(const QVector& v) const noexcept;
};

}  // namespace circdiam

#endif
