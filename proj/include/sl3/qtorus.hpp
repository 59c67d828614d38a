#pragma once

#include "sl3/qlaurent.hpp"

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl3 {

using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;
using ExpVec = std::vector<int>;

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// M^a M^b = q^{pi(a,b)/2} M^{a+b}
struct SkewForm {
    IMat pi;
    int n() const { return int(pi.rows()); }
    long long operator()(const ExpVec& a, const ExpVec& b) const;
    bool is_skew() const;
};

using FormPtr = std::shared_ptr<const SkewForm>;
FormPtr make_form(const IMat& pi);

// total degree, then lex
bool deglex_less(const ExpVec& a, const ExpVec& b);

class TorusElement {
public:
    TorusElement() = default;
    explicit TorusElement(FormPtr f) : form_(std::move(f)) {}

    static TorusElement monomial(FormPtr f, const ExpVec& alpha, const QLaurent& c = QLaurent(1));
    static TorusElement unit(FormPtr f);
    static TorusElement basis(FormPtr f, int i);

    const FormPtr& form() const { return form_; }
    int n() const { return form_ ? form_->n() : 0; }
    const std::map<ExpVec, QLaurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const ExpVec& a, const QLaurent& c);
    // deg-lex extreme terms
    const std::pair<const ExpVec, QLaurent>& leading() const;
    const std::pair<const ExpVec, QLaurent>& trailing() const;

    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(const TorusElement& x, const TorusElement& y);
    TorusElement scaled(const QLaurent& c) const;
    TorusElement shifted(int twice) const;   // times q^{twice/2}
    bool operator==(const TorusElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    TorusElement bar() const;
    bool is_positive() const;
    bool is_bar_invariant() const { return bar() == *this; }
    TorusElement pow(int k) const;
    // inverse of a monomial
    TorusElement inverse() const;

    std::string json() const;
    std::string str(const std::vector<std::string>* labels = nullptr) const;

private:
    FormPtr form_;
    std::map<ExpVec, QLaurent> terms_;
};

TorusElement mul(const TorusElement& x, const TorusElement& y);
TorusElement weyl_product(const FormPtr& f, const std::vector<ExpVec>& alphas);
// h with f = g*h
TorusElement exact_left_divide(const TorusElement& f, const TorusElement& g);
TorusElement bar_element(const TorusElement& x);
long long commutation_exponent(const SkewForm& f, const ExpVec& a, const ExpVec& b);

// c with x*y = q^c * y*x, nullopt if they do not q-commute
std::optional<int> q_commutator(const TorusElement& x, const TorusElement& y);
// [x1 ... xk] for pairwise q-commuting elements
TorusElement weyl_order(const std::vector<TorusElement>& xs);

struct Grade {
    bool homogeneous = true;
    IVec value;
};
Grade grade(const TorusElement& x, const IMat& proj);

ExpVec add(const ExpVec& a, const ExpVec& b);
ExpVec sub(const ExpVec& a, const ExpVec& b);
std::string exp_json(const ExpVec& a);

} // namespace sl3
