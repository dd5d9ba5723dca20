#ifndef QUENT_DEGREE_HPP
#define QUENT_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmp.h>

namespace quent {

// Exact nonnegative rational, always kept in canonical reduced form.
// Wraps a GMP mpq_t; all arithmetic used by the calculus (addition, min,
// max, comparison) is exact.
class Degree {
public:
    Degree() { mpq_init(q_); }
    Degree(const Degree& other) {
        mpq_init(q_);
        mpq_set(q_, other.q_);
    }
    Degree(Degree&& other) noexcept {
        mpq_init(q_);
        mpq_swap(q_, other.q_);
    }
    Degree& operator=(const Degree& other) {
        if (this != &other) mpq_set(q_, other.q_);
        return *this;
    }
    Degree& operator=(Degree&& other) noexcept {
        if (this != &other) mpq_swap(q_, other.q_);
        return *this;
    }
    ~Degree() { mpq_clear(q_); }

    static Degree zero() { return Degree(); }
    static Degree fromUint(unsigned long n);
    static Degree fraction(unsigned long num, unsigned long den);

    // Accepts a decimal literal ("0.3", "2") or a fraction ("3/10").
    // Returns nullopt on malformed or negative input.
    static std::optional<Degree> parse(const std::string& text);

    bool isZero() const { return mpq_sgn(q_) == 0; }

    Degree operator+(const Degree& rhs) const;
    friend Degree max(const Degree& a, const Degree& b) { return a < b ? b : a; }
    friend Degree min(const Degree& a, const Degree& b) { return a < b ? a : b; }

    bool operator==(const Degree& rhs) const { return mpq_equal(q_, rhs.q_) != 0; }
    std::strong_ordering operator<=>(const Degree& rhs) const {
        int c = mpq_cmp(q_, rhs.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Canonical rendering: a finite decimal when the reduced denominator is
    // of the form 2^a*5^b ("0.3", "2", "0.25"), otherwise "p/q".
    std::string str() const;

    double toDouble() const { return mpq_get_d(q_); }

private:
    mpq_t q_;
};

// A Degree extended with the single absorbing value INF, with
// r + INF = INF + r = INF and INF the maximum of the order.
class ExtendedDegree {
public:
    ExtendedDegree() : inf_(false) {}
    ExtendedDegree(Degree d) : inf_(false), d_(std::move(d)) {}  // NOLINT(implicit)
    static ExtendedDegree infinity() {
        ExtendedDegree e;
        e.inf_ = true;
        return e;
    }

    bool isInf() const { return inf_; }
    bool isZero() const { return !inf_ && d_.isZero(); }
    const Degree& finite() const {
        if (inf_) throw std::logic_error("ExtendedDegree: infinite value has no finite part");
        return d_;
    }

    ExtendedDegree operator+(const ExtendedDegree& rhs) const {
        if (inf_ || rhs.inf_) return infinity();
        return ExtendedDegree(d_ + rhs.d_);
    }

    bool operator==(const ExtendedDegree& rhs) const {
        if (inf_ != rhs.inf_) return false;
        return inf_ || d_ == rhs.d_;
    }
    std::strong_ordering operator<=>(const ExtendedDegree& rhs) const {
        if (inf_ && rhs.inf_) return std::strong_ordering::equal;
        if (inf_) return std::strong_ordering::greater;
        if (rhs.inf_) return std::strong_ordering::less;
        return d_ <=> rhs.d_;
    }

    std::string str() const { return inf_ ? "inf" : d_.str(); }

    // Accepts everything Degree::parse does, plus "inf".
    static std::optional<ExtendedDegree> parse(const std::string& text);

private:
    bool inf_;
    Degree d_;
};

}  // namespace quent

#endif
