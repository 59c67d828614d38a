#include "sl3/qlaurent.hpp"

#include <sstream>

namespace sl3 {

QLaurent::QLaurent(long long c) {
    if (c != 0) terms_[0] = c;
}

QLaurent::QLaurent(const BigInt& c) {
    if (c != 0) terms_[0] = c;
}

QLaurent QLaurent::monomial(int twice_exp, const BigInt& c) {
    QLaurent r;
    if (c != 0) r.terms_[twice_exp] = c;
    return r;
}

void QLaurent::add_term(int twice, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(twice);
    if (it == terms_.end()) {
        terms_.emplace(twice, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

bool QLaurent::is_positive() const {
    for (auto& [e, c] : terms_)
        if (c <= 0) return false;
    return true;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QLaurent QLaurent::operator-() const {
    QLaurent r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (auto& [e1, c1] : a.terms_)
        for (auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

QLaurent QLaurent::shifted(int twice) const {
    QLaurent r;
    for (auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + twice, c);
    return r;
}

QLaurent QLaurent::bar() const {
    QLaurent r;
    for (auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

BigInt QLaurent::at_one() const {
    BigInt s = 0;
    for (auto& kv : terms_) s += kv.second;
    return s;
}

std::optional<QLaurent> QLaurent::divide(const QLaurent& b) const {
    if (b.is_zero()) return std::nullopt;
    if (is_zero()) return QLaurent{};
    QLaurent rem = *this, quo;
    const int bmax = b.max_exp();
    const BigInt& bc = b.terms_.rbegin()->second;
    const int floor = min_exp() - b.min_exp();
    while (!rem.is_zero()) {
        int e = rem.max_exp() - bmax;
        if (e < floor) return std::nullopt;
        const BigInt& rc = rem.terms_.rbegin()->second;
        if (rc % bc != 0) return std::nullopt;
        QLaurent t = monomial(e, rc / bc);
        quo += t;
        rem -= t * b;
    }
    return quo;
}

static std::string exp_str(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        BigInt c = it->second;
        int e = it->first;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (c < 0) c = -c;
        first = false;
        if (e == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << "q^(" << exp_str(e) << ")";
    }
    return os.str();
}

std::string QLaurent::json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "[" << e << ",\"" << c << "\"]";
    }
    os << "]";
    return os.str();
}

QLaurent add(const QLaurent& a, const QLaurent& b) { return a + b; }
QLaurent mul(const QLaurent& a, const QLaurent& b) { return a * b; }
QLaurent bar(const QLaurent& a) { return a.bar(); }
bool is_positive(const QLaurent& a) { return a.is_positive(); }
BigInt specialize_at_one(const QLaurent& a) { return a.at_one(); }

} // namespace sl3
