#include "conedef/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace conedef {

namespace {

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

void require_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials live in different rings");
}

}  // namespace

bool degrevlex_greater(const Exponents& a, const Exponents& b) {
    const int da = total(a), db = total(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

bool Polynomial::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return false;
    return true;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total(t.first) == d; });
}

int Polynomial::degree() const {
    if (terms_.empty() || !is_homogeneous()) throw std::invalid_argument("degree of a zero or inhomogeneous polynomial");
    return total(terms_.begin()->first);
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent vector has wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_vars(a, b);
    Polynomial p(a.nvars());
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= nvars_) throw std::out_of_range("derivative: variable index out of range");
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        p.add_term(d, c * e[var]);
    }
    return p;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw std::invalid_argument("substitute: need one image per variable");
    const std::size_t target = images.empty() ? 0 : images.front().nvars();
    Polynomial result(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] < 0) throw std::invalid_argument("substitute: negative exponent");
            for (int k = 0; k < e[i]; ++k) term = term * images[i];
        }
        result += term;
    }
    return result;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw std::invalid_argument("to_string: need one name per variable");
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exponents, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return degrevlex_greater(a->first, b->first); });

    std::ostringstream out;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out << mag.str();
        else if (mag == 1)
            out << mono;
        else
            out << mag.str() << "*" << mono;
    }
    return out.str();
}

std::string Polynomial::to_string(const std::string& prefix) const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars_; ++i) names.push_back(prefix + std::to_string(i));
    return to_string(names);
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (num_.nvars() != den_.nvars()) throw std::invalid_argument("numerator and denominator in different rings");
}

RationalFunction::RationalFunction(Polynomial numerator)
    : RationalFunction(numerator, Polynomial::constant(numerator.nvars(), 1)) {}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
    return {num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_};
}

RationalFunction RationalFunction::log_derivative(std::size_t var) const {
    if (is_zero()) throw std::domain_error("logarithmic derivative of zero");
    // (n/d)' / (n/d) = (n' d - n d') / (n d)
    return {num_.derivative(var) * den_ - num_ * den_.derivative(var), num_ * den_};
}

}  // namespace conedef
