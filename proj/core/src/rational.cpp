#include "unisplit/rational.hpp"

#include "unisplit/errors.hpp"

#include <algorithm>
#include <cctype>

namespace unisplit {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) {
        throw input_error("rational with zero denominator");
    }
    if (den < 0) {
        return Rational(-num, -den);
    }
    return Rational(num, den);
}

Int floor_rat(const Rational& v) {
    Int q = numerator(v) / denominator(v);
    if (v < 0 && q * denominator(v) != numerator(v)) {
        --q;
    }
    return q;
}

Int ceil_rat(const Rational& v) {
    return -floor_rat(-v);
}

namespace {

Int parse_digits(std::string_view s) {
    Int value = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw input_error("invalid digit in rational literal");
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

Int pow10(std::size_t k) {
    Int p = 1;
    for (std::size_t i = 0; i < k; ++i) {
        p *= 10;
    }
    return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) {
        throw input_error("empty rational literal");
    }
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw input_error("missing digits in rational literal");
    }

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        if (slash == 0 || slash + 1 == text.size()) {
            throw input_error("malformed fraction literal");
        }
        Int num = parse_digits(text.substr(0, slash));
        Int den = parse_digits(text.substr(slash + 1));
        value = make_rational(num, den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) {
            throw input_error("malformed decimal literal");
        }
        Int num = whole.empty() ? Int(0) : parse_digits(whole);
        Int scale = pow10(frac.size());
        num *= scale;
        if (!frac.empty()) {
            num += parse_digits(frac);
        }
        value = make_rational(num, scale);
    } else {
        value = Rational(parse_digits(text));
    }
    return negative ? Rational(-value) : value;
}

std::string fraction_string(const Rational& v) {
    std::string s = numerator(v).str();
    if (denominator(v) != 1) {
        s += "/";
        s += denominator(v).str();
    }
    return s;
}

std::string decimal_string(const Rational& v, int significant) {
    if (significant < 1) {
        significant = 1;
    }
    if (v == 0) {
        return "0";
    }
    const bool negative = v < 0;
    const Int num = negative ? Int(-numerator(v)) : numerator(v);
    const Int den = denominator(v);

    // e = floor(log10(num/den)); start from digit-count difference, then fix.
    auto digits = [](const Int& x) { return static_cast<long>(x.str().size()); };
    long e = digits(num) - digits(den);
    auto at_least = [&](long exp) {  // num/den >= 10^exp ?
        if (exp >= 0) {
            return num >= den * pow10(static_cast<std::size_t>(exp));
        }
        return num * pow10(static_cast<std::size_t>(-exp)) >= den;
    };
    while (!at_least(e)) {
        --e;
    }
    while (at_least(e + 1)) {
        ++e;
    }

    long scale = significant - 1 - e;
    Int q, r, d;
    if (scale >= 0) {
        d = den;
        divide_qr(num * pow10(static_cast<std::size_t>(scale)), d, q, r);
    } else {
        d = den * pow10(static_cast<std::size_t>(-scale));
        divide_qr(num, d, q, r);
    }
    if (2 * r >= d) {
        ++q;
    }
    std::string s = q.str();
    if (static_cast<long>(s.size()) > significant) {  // rounding carried, e.g. 999.9 -> 1000
        ++e;
        --scale;
        s.pop_back();
    }

    std::string out;
    if (e >= 0) {
        if (e + 1 >= static_cast<long>(s.size())) {
            out = s + std::string(e + 1 - s.size(), '0');
        } else {
            std::string frac = s.substr(e + 1);
            while (!frac.empty() && frac.back() == '0') {
                frac.pop_back();
            }
            out = s.substr(0, e + 1);
            if (!frac.empty()) {
                out += "." + frac;
            }
        }
    } else {
        std::string frac = std::string(-e - 1, '0') + s;
        while (!frac.empty() && frac.back() == '0') {
            frac.pop_back();
        }
        out = "0." + frac;
    }
    return negative ? "-" + out : out;
}

}  // namespace unisplit
