#include "circdiam/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace circdiam {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<Integer> parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return std::nullopt;
    Integer z(std::string(s), 10);
    if (neg) z = -z;
    return z;
}

std::optional<Rational> parse_decimal(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_part = parse_integer(s.substr(e + 1));
        if (!exp_part || !exp_part->fits_slong_p()) return std::nullopt;
        exponent = exp_part->get_si();
        if (exponent > 4096 || exponent < -4096) return std::nullopt;
        s = s.substr(0, e);
    }
    std::string_view int_part = s, frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
    if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;

    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer mantissa(digits, 10);
    exponent -= static_cast<long>(frac_part.size());
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational q = exponent < 0 ? Rational(mantissa, power) : Rational(mantissa * power);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_integer(text.substr(0, slash));
        auto den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-')) return std::nullopt;
        auto den = parse_integer(den_text);
        if (!num || !den || *den == 0) return std::nullopt;
        Rational q(*num, *den);
        q.canonicalize();
        return q;
    }
    if (auto z = parse_integer(text)) return Rational(*z);
    return parse_decimal(text);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

QVector to_rational(const ZVector& v) {
    QVector out;
    out.reserve(v.size());
    for (const auto& z : v) out.emplace_back(z);
    return out;
}

QVector add(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

QVector sub(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

QVector scale(const Rational& s, const QVector& v) {
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

QVector axpy(const QVector& x, const Rational& alpha, const QVector& g) {
    if (x.size() != g.size()) throw std::invalid_argument("vector length mismatch");
    QVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + alpha * g[i];
    return out;
}

bool is_zero(const QVector& v) {
    for (const auto& q : v)
        if (sgn(q) != 0) return false;
    return true;
}

std::string to_string(const QVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

std::size_t QVectorHash::operator()(const QVector& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& q : v) {
        std::size_t part = mpz_get_ui(q.get_num_mpz_t()) * 31 + mpz_get_ui(q.get_den_mpz_t());
        if (sgn(q) < 0) part = ~part;
        h ^= part + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace circdiam
