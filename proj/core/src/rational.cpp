#include "pants/exact/rational.hpp"

#include <cctype>
#include <ostream>

namespace pants::exact {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);  // mpq division canonicalizes
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZeroError("reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    std::size_t i = 0;
    auto digits = [&]() {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return i > start;
    };
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (!digits()) return std::nullopt;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_start = i;
        if (!digits()) return std::nullopt;
        // all-zero denominator
        if (text.find_first_not_of('0', den_start) >= i) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;
    if (text.front() == '+') text.remove_prefix(1);  // GMP rejects a leading plus

    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0) return std::nullopt;
    v.canonicalize();
    return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace pants::exact
