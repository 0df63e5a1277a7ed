#include "hamstab/expr.hpp"

#include <cctype>
#include <string>

#include "hamstab/errors.hpp"

namespace hamstab {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    CycNum parse() {
        CycNum v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("cannot parse '" + std::string(s_) + "' at offset " +
                          std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    bool at_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    mpz_class integer() {
        if (!at_digit()) fail("expected integer");
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
    }

    CycNum expr() {
        CycNum v = term();
        for (;;) {
            if (accept("+")) v += term();
            else if (accept("-")) v -= term();
            else return v;
        }
    }

    CycNum term() {
        CycNum v = unary();
        for (;;) {
            if (accept("*") || accept("\xC2\xB7")) {
                v *= unary();
            } else if (accept("/")) {
                const CycNum d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    CycNum unary() {
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        return power();
    }

    CycNum power() {
        CycNum base = atom();
        if (!accept("^")) return base;
        const bool negative = accept("-");
        const mpz_class e = integer();
        if (!e.fits_uint_p() || e > 4096) fail("exponent too large");
        if (negative) {
            if (base.is_zero()) fail("zero to a negative power");
            base = base.inverse();
        }
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    CycNum atom() {
        if (accept("(")) {
            CycNum v = expr();
            if (!accept(")")) fail("expected ')'");
            return v;
        }
        if (accept("zeta24")) return CycNum::zeta(1);
        if (accept("sqrt2")) return CycNum::sqrt2();
        if (accept("sqrt3")) return CycNum::sqrt3();
        if (accept("i")) return CycNum::i();
        if (at_digit()) return CycNum(Rational(mpq_class(integer())));
        fail("expected a number, i, sqrt2, sqrt3, zeta24 or '('");
    }
};

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = s.find(sep, start);
        parts.push_back(s.substr(start, at - start));
        if (at == std::string_view::npos) return parts;
        start = at + 1;
    }
}

}  // namespace

CycNum parse_cyc(std::string_view text) { return Parser(text).parse(); }

CycVector parse_cyc_list(std::string_view text) {
    CycVector out;
    for (auto part : split(text, ',')) out.push_back(parse_cyc(part));
    return out;
}

CycMatrix parse_cyc_matrix(std::string_view text) {
    const auto rows = split(text, ';');
    std::vector<CycVector> parsed;
    for (auto r : rows) parsed.push_back(parse_cyc_list(r));
    const std::size_t cols = parsed.front().size();
    CycMatrix m(parsed.size(), cols);
    for (std::size_t r = 0; r < parsed.size(); ++r) {
        if (parsed[r].size() != cols)
            throw ConfigError("matrix '" + std::string(text) + "' has ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = parsed[r][c];
    }
    return m;
}

}  // namespace hamstab
