#include "hamstab/rational.hpp"

#include <stdexcept>

namespace hamstab {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    mpz_class zn(n, 10), zd(std::string(den), 10);
    if (zd == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(zn, zd));
}

std::optional<long> Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
    return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(mpq_class(n, d));
}

std::string Rational::to_fraction_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_string() const {
    return is_integer() ? v_.get_num().get_str() : to_fraction_string();
}

Rational binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(mpq_class(r));
}

}  // namespace hamstab
