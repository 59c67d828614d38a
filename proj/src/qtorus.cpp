#include "sl3/qtorus.hpp"

#include <sstream>

namespace sl3 {

long long SkewForm::operator()(const ExpVec& a, const ExpVec& b) const {
    long long s = 0;
    const int N = n();
    for (int i = 0; i < N; ++i) {
        if (!a[i]) continue;
        long long r = 0;
        for (int j = 0; j < N; ++j)
            if (b[j]) r += pi(i, j) * b[j];
        s += a[i] * r;
    }
    return s;
}

bool SkewForm::is_skew() const {
    return pi.rows() == pi.cols() && (pi + pi.transpose()).isZero();
}

FormPtr make_form(const IMat& pi) {
    auto f = std::make_shared<SkewForm>();
    f->pi = pi;
    if (!f->is_skew()) throw std::invalid_argument("form is not skew-symmetric");
    return f;
}

bool deglex_less(const ExpVec& a, const ExpVec& b) {
    long long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a < b;
}

ExpVec add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

long long commutation_exponent(const SkewForm& f, const ExpVec& a, const ExpVec& b) { return f(a, b); }

TorusElement TorusElement::monomial(FormPtr f, const ExpVec& alpha, const QLaurent& c) {
    if (int(alpha.size()) != f->n()) throw std::invalid_argument("dimension mismatch");
    TorusElement r(std::move(f));
    if (!c.is_zero()) r.terms_.emplace(alpha, c);
    return r;
}

TorusElement TorusElement::unit(FormPtr f) {
    ExpVec z(f->n(), 0);
    return monomial(std::move(f), z);
}

TorusElement TorusElement::basis(FormPtr f, int i) {
    ExpVec z(f->n(), 0);
    z[i] = 1;
    return monomial(std::move(f), z);
}

void TorusElement::add_term(const ExpVec& a, const QLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

const std::pair<const ExpVec, QLaurent>& TorusElement::leading() const {
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (deglex_less(best->first, it->first)) best = it;
    return *best;
}

const std::pair<const ExpVec, QLaurent>& TorusElement::trailing() const {
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (deglex_less(it->first, best->first)) best = it;
    return *best;
}

static void check_forms(const TorusElement& a, const TorusElement& b) {
    if (a.form() && b.form() && a.form() != b.form() && a.form()->pi != b.form()->pi)
        throw std::invalid_argument("form mismatch");
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    check_forms(*this, o);
    if (!form_) form_ = o.form_;
    for (auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    check_forms(*this, o);
    if (!form_) form_ = o.form_;
    for (auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

TorusElement operator*(const TorusElement& x, const TorusElement& y) {
    check_forms(x, y);
    TorusElement r(x.form() ? x.form() : y.form());
    for (auto& [a, ca] : x.terms())
        for (auto& [b, cb] : y.terms()) {
            int s = int((*r.form())(a, b));
            r.add_term(add(a, b), (ca * cb).shifted(s));
        }
    return r;
}

TorusElement mul(const TorusElement& x, const TorusElement& y) { return x * y; }

TorusElement TorusElement::scaled(const QLaurent& c) const {
    TorusElement r(form_);
    for (auto& [a, v] : terms_) r.add_term(a, v * c);
    return r;
}

TorusElement TorusElement::shifted(int twice) const {
    TorusElement r(form_);
    for (auto& [a, v] : terms_) r.terms_.emplace(a, v.shifted(twice));
    return r;
}

TorusElement TorusElement::bar() const {
    TorusElement r(form_);
    for (auto& [a, v] : terms_) r.terms_.emplace(a, v.bar());
    return r;
}

TorusElement bar_element(const TorusElement& x) { return x.bar(); }

bool TorusElement::is_positive() const {
    for (auto& kv : terms_)
        if (!kv.second.is_positive()) return false;
    return true;
}

TorusElement TorusElement::inverse() const {
    if (!is_monomial()) throw NotDivisible("inverse of a non-monomial");
    auto& [a, c] = *terms_.begin();
    if (!c.is_monomial()) throw NotDivisible("non-unit coefficient");
    auto& [e, v] = *c.terms().begin();
    if (v != 1 && v != -1) throw NotDivisible("non-unit coefficient");
    ExpVec na(a.size());
    for (size_t i = 0; i < a.size(); ++i) na[i] = -a[i];
    return monomial(form_, na, QLaurent::monomial(-e, v));
}

TorusElement TorusElement::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    TorusElement r = unit(form_), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

TorusElement weyl_product(const FormPtr& f, const std::vector<ExpVec>& alphas) {
    ExpVec sum(f->n(), 0);
    long long s = 0;
    for (auto& a : alphas) {
        s += (*f)(sum, a);
        sum = add(sum, a);
    }
    return TorusElement::monomial(f, sum, QLaurent::monomial(int(s)));
}

TorusElement exact_left_divide(const TorusElement& f, const TorusElement& g) {
    if (g.is_zero()) throw NotDivisible("division by zero");
    TorusElement h(g.form());
    if (f.is_zero()) return h;
    const auto& form = *g.form();
    const ExpVec beta = g.leading().first;
    const QLaurent c = g.leading().second;
    const ExpVec floor = sub(f.trailing().first, g.trailing().first);
    TorusElement rem = f;
    while (!rem.is_zero()) {
        auto [alpha, d] = rem.leading();
        ExpVec gamma = sub(alpha, beta);
        if (deglex_less(gamma, floor)) throw NotDivisible("remainder below quotient floor");
        auto q = d.shifted(-int(form(beta, gamma))).divide(c);
        if (!q) throw NotDivisible("inexact coefficient division");
        TorusElement t = TorusElement::monomial(g.form(), gamma, *q);
        h += t;
        rem -= g * t;
    }
    return h;
}

std::optional<int> q_commutator(const TorusElement& x, const TorusElement& y) {
    if (x.is_zero() || y.is_zero()) return 0;
    int c = int((*x.form())(x.leading().first, y.leading().first));
    if (x * y == (y * x).shifted(2 * c)) return c;
    return std::nullopt;
}

TorusElement weyl_order(const std::vector<TorusElement>& xs) {
    if (xs.empty()) throw std::invalid_argument("empty weyl order");
    TorusElement r = xs[0];
    long long s = 0;
    for (size_t m = 1; m < xs.size(); ++m) {
        for (size_t l = 0; l < m; ++l) {
            auto c = q_commutator(xs[l], xs[m]);
            if (!c) throw std::invalid_argument("weyl order of non q-commuting elements");
            s += *c;
        }
        r = r * xs[m];
    }
    return r.shifted(int(-s));
}

Grade grade(const TorusElement& x, const IMat& proj) {
    Grade g;
    g.value = IVec::Zero(proj.rows());
    bool first = true;
    for (auto& [a, c] : x.terms()) {
        IVec v(a.size());
        for (size_t i = 0; i < a.size(); ++i) v[i] = a[i];
        IVec p = proj * v;
        if (first) {
            g.value = p;
            first = false;
        } else if (p != g.value) {
            g.homogeneous = false;
        }
    }
    return g;
}

std::string exp_json(const ExpVec& a) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << "]";
    return os.str();
}

std::string TorusElement::json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto& [a, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "[" << exp_json(a) << "," << c.json() << "]";
    }
    os << "]";
    return os.str();
}

std::string TorusElement::str(const std::vector<std::string>* labels) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")*M[";
        bool f2 = true;
        for (size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (!e) continue;
            if (!f2) os << " ";
            f2 = false;
            if (labels) os << (*labels)[i];
            else os << "x" << i;
            if (e != 1) os << "^" << e;
        }
        os << "]";
    }
    return os.str();
}

} // namespace sl3
