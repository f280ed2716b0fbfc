#include "toral/rational.hpp"

#include <stdexcept>

#include "toral/errors.hpp"

namespace toral {

Rat make_rat(long num, long den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty rational literal");
    for (char c : text) {
        if (c != '-' && c != '/' && (c < '0' || c > '9'))
            throw InvalidInput("bad rational literal: " + text);
    }
    try {
        Rat r(text);
        if (r.get_den() == 0) throw InvalidInput("zero denominator: " + text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("bad rational literal: " + text);
    }
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_str();
}

long rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

Rat mod1(const Rat& r) {
    Rat out = r - rat_floor(r);
    out.canonicalize();
    return out;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::string rat_to_decimal(const Rat& r, int digits) {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round(|r| * scale) with ties away from zero, sign re-attached
    mpq_class scaled = r * Rat(scale);
    bool neg = scaled < 0;
    mpz_class num = abs(scaled.get_num()), den = scaled.get_den();
    mpz_class mag = (2 * num + den) / (2 * den);
    if (mag == 0) neg = false;
    mpz_class ipart = mag / scale, fpart = mag % scale;
    std::string out = (neg ? "-" : "") + ipart.get_str();
    if (digits > 0) {
        std::string frac = fpart.get_str();
        frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
        out += "." + frac;
    }
    return out;
}

}  // namespace toral
