#include "quent/degree.hpp"

#include <cctype>

namespace quent {
namespace {

std::string mpzToString(const mpz_t z) {
    char* s = mpz_get_str(nullptr, 10, z);
    std::string out(s);
    void (*freefn)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

bool allDigits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Degree Degree::fromUint(unsigned long n) {
    Degree d;
    mpq_set_ui(d.q_, n, 1);
    return d;
}

Degree Degree::fraction(unsigned long num, unsigned long den) {
    if (den == 0) throw std::invalid_argument("Degree: zero denominator");
    Degree d;
    mpq_set_ui(d.q_, num, den);
    mpq_canonicalize(d.q_);
    return d;
}

Degree Degree::operator+(const Degree& rhs) const {
    Degree r;
    mpq_add(r.q_, q_, rhs.q_);
    return r;
}

std::optional<Degree> Degree::parse(const std::string& text) {
    if (text.empty() || !std::isdigit(static_cast<unsigned char>(text[0]))) return std::nullopt;

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!allDigits(num) || !allDigits(den)) return std::nullopt;
        mpz_t n, m;
        mpz_init_set_str(n, num.c_str(), 10);
        mpz_init_set_str(m, den.c_str(), 10);
        if (mpz_sgn(m) == 0) {
            mpz_clear(n);
            mpz_clear(m);
            return std::nullopt;
        }
        Degree d;
        mpq_set_num(d.q_, n);
        mpq_set_den(d.q_, m);
        mpq_canonicalize(d.q_);
        mpz_clear(n);
        mpz_clear(m);
        return d;
    }

    auto dot = text.find('.');
    std::string intPart = dot == std::string::npos ? text : text.substr(0, dot);
    std::string fracPart = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (!allDigits(intPart)) return std::nullopt;
    if (dot != std::string::npos && !allDigits(fracPart)) return std::nullopt;

    mpz_t n, m;
    mpz_init_set_str(n, (intPart + fracPart).c_str(), 10);
    mpz_init_set_ui(m, 1);
    for (std::size_t i = 0; i < fracPart.size(); ++i) mpz_mul_ui(m, m, 10);
    Degree d;
    mpq_set_num(d.q_, n);
    mpq_set_den(d.q_, m);
    mpq_canonicalize(d.q_);
    mpz_clear(n);
    mpz_clear(m);
    return d;
}

std::string Degree::str() const {
    mpz_t num, den;
    mpz_init(num);
    mpz_init(den);
    mpq_get_num(num, q_);
    mpq_get_den(den, q_);

    // The value has a finite decimal expansion iff the reduced denominator
    // is of the form 2^a * 5^b.
    mpz_t rest;
    mpz_init_set(rest, den);
    unsigned twos = 0, fives = 0;
    while (mpz_divisible_ui_p(rest, 2)) {
        mpz_divexact_ui(rest, rest, 2);
        ++twos;
    }
    while (mpz_divisible_ui_p(rest, 5)) {
        mpz_divexact_ui(rest, rest, 5);
        ++fives;
    }

    std::string out;
    if (mpz_cmp_ui(rest, 1) == 0) {
        unsigned digits = twos > fives ? twos : fives;
        mpz_t scaled;
        mpz_init_set(scaled, num);
        for (unsigned i = 0; i < digits; ++i) mpz_mul_ui(scaled, scaled, 10);
        mpz_divexact(scaled, scaled, den);
        std::string body = mpzToString(scaled);
        mpz_clear(scaled);
        if (digits == 0) {
            out = body;
        } else {
            while (body.size() <= digits) body.insert(body.begin(), '0');
            body.insert(body.size() - digits, ".");
            out = body;
        }
    } else {
        out = mpzToString(num) + "/" + mpzToString(den);
    }
    mpz_clear(rest);
    mpz_clear(num);
    mpz_clear(den);
    return out;
}

std::optional<ExtendedDegree> ExtendedDegree::parse(const std::string& text) {
    if (text == "inf") return infinity();
    auto d = Degree::parse(text);
    if (!d) return std::nullopt;
    return ExtendedDegree(*d);
}

}  // namespace quent
