#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>

namespace sl3 {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in q^{1/2}; keys are doubled exponents.
class QLaurent {
public:
    QLaurent() = default;
    QLaurent(long long c);
    explicit QLaurent(const BigInt& c);

    static QLaurent monomial(int twice_exp, const BigInt& c = 1);
    // q^{a/b} shorthand is not provided; use twice exponents.

    const std::map<int, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_positive() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exp() const { return terms_.begin()->first; }
    int max_exp() const { return terms_.rbegin()->first; }

    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent operator-() const;
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const QLaurent& o) const { return !(*this == o); }
    bool operator<(const QLaurent& o) const { return terms_ < o.terms_; }

    // multiply by q^{twice/2}
    QLaurent shifted(int twice) const;
    QLaurent bar() const;
    BigInt at_one() const;
    // exact quotient a/b, nullopt if b does not divide a
    std::optional<QLaurent> divide(const QLaurent& b) const;

    std::string str() const;    // human readable, e.g. "q^(3/2) + 2 + q^(-3)"
    std::string json() const;   // [[twice_exp,"coeff"],...]

    void add_term(int twice, const BigInt& c);

private:
    std::map<int, BigInt> terms_;
};

QLaurent add(const QLaurent& a, const QLaurent& b);
QLaurent mul(const QLaurent& a, const QLaurent& b);
QLaurent bar(const QLaurent& a);
bool is_positive(const QLaurent& a);
BigInt specialize_at_one(const QLaurent& a);

// q^{twice/2}
inline QLaurent qpow(int twice) { return QLaurent::monomial(twice); }

} // namespace sl3
