// The ordered field C(t) where t is a fresh positive infinitesimal,
// i.e. 0 < t < c for every positive c in C.
//
// Canonical form: t^k * num(t)/den(t) with num(0) != 0, den(0) = 1 and
// gcd(num, den) = 1 (zero is stored as k=0, num=0, den=1). Sign, order
// and standard part are then O(1) reads off the representation.
//
// Stacking the template gives towers like Q(t1)(t2) with t2 smaller than
// every positive element of Q(t1); those realize the auxiliary
// infinitesimals used by the limit computations.

#pragma once

#include "rational.hpp"
#include "upoly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace stind {

template <class C>
class FieldElem {
public:
    FieldElem() : k_(0), num_(), den_(UPoly<C>::one()) {}
    FieldElem(int n) : FieldElem(C(n)) {}
    FieldElem(const C& c) : k_(0), num_(UPoly<C>(c)), den_(UPoly<C>::one()) {}
    FieldElem(long k, UPoly<C> num, UPoly<C> den) { normalize(k, std::move(num), std::move(den)); }

    static FieldElem eps() { return FieldElem(1, UPoly<C>::one(), UPoly<C>::one()); }
    static FieldElem eps_pow(long k) { return FieldElem(k, UPoly<C>::one(), UPoly<C>::one()); }

    long order() const { return k_; }
    const UPoly<C>& num() const { return num_; }
    const UPoly<C>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return k_ == 0 && num_ == UPoly<C>::one() && den_ == UPoly<C>::one(); }

    int sign() const { return is_zero() ? 0 : num_.coeff(0).sign(); }

    // bounded w.r.t. the own infinitesimal: no negative t-power
    bool is_bounded() const { return is_zero() || k_ >= 0; }

    // value at t = 0, killing the own infinitesimal only
    C st_local() const {
        if (is_zero() || k_ > 0) return C(0);
        if (k_ < 0) throw std::domain_error("standard part of unbounded element");
        return num_.coeff(0); // den(0) = 1
    }

    FieldElem operator-() const {
        FieldElem r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long k = a.k_ < b.k_ ? a.k_ : b.k_;
        UPoly<C> ta = a.num_ * b.den_;
        UPoly<C> tb = b.num_ * a.den_;
        if (a.k_ > k) ta = ta * t_pow(static_cast<std::size_t>(a.k_ - k));
        if (b.k_ > k) tb = tb * t_pow(static_cast<std::size_t>(b.k_ - k));
        return FieldElem(k, ta + tb, a.den_ * b.den_);
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        if (a.is_zero() || b.is_zero()) return FieldElem();
        return FieldElem(a.k_ + b.k_, a.num_ * b.num_, a.den_ * b.den_);
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        if (a.is_zero()) return FieldElem();
        return FieldElem(a.k_ - b.k_, a.num_ * b.den_, a.den_ * b.num_);
    }
    FieldElem& operator+=(const FieldElem& o) { *this = *this + o; return *this; }
    FieldElem& operator-=(const FieldElem& o) { *this = *this - o; return *this; }
    FieldElem& operator*=(const FieldElem& o) { *this = *this * o; return *this; }
    FieldElem& operator/=(const FieldElem& o) { *this = *this / o; return *this; }

    FieldElem inv() const { return FieldElem(1) / *this; }
    FieldElem abs() const { return sign() < 0 ? -*this : *this; }

    static FieldElem pow(const FieldElem& b, unsigned e) {
        FieldElem r(1), x = b;
        for (unsigned k = e; k; k >>= 1) {
            if (k & 1) r *= x;
            if (k > 1) x *= x;
        }
        return r;
    }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.k_ == b.k_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
    friend bool operator<(const FieldElem& a, const FieldElem& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const FieldElem& a, const FieldElem& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const FieldElem& a, const FieldElem& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const FieldElem& a, const FieldElem& b) { return (a - b).sign() >= 0; }

    // substitute t := t^m (global reparametrization; m >= 1)
    FieldElem reparam(std::size_t m) const {
        if (is_zero() || m == 1) return *this;
        return FieldElem(k_ * static_cast<long>(m), num_.stretch(m), den_.stretch(m));
    }

    // numeric value with eps[i] substituted for the infinitesimal at depth i
    // (own infinitesimal first, inner ones after it)
    double to_double_at(const std::vector<double>& eps, std::size_t i = 0) const {
        if (is_zero()) return 0.0;
        double t = i < eps.size() ? eps[i] : 0.0;
        double n = 0.0, d = 0.0;
        for (std::size_t j = num_.coeffs().size(); j-- > 0;)
            n = n * t + coeff_to_double(num_.coeff(j), eps, i + 1);
        for (std::size_t j = den_.coeffs().size(); j-- > 0;)
            d = d * t + coeff_to_double(den_.coeff(j), eps, i + 1);
        double p = 1.0;
        long k = k_;
        for (; k > 0; --k) p *= t;
        for (; k < 0; ++k) p /= t;
        return p * n / d;
    }

    std::string str(const std::string& tname = "eps") const;

private:
    static UPoly<C> t_pow(std::size_t k) { return UPoly<C>::monomial(C(1), k); }

    static double coeff_to_double(const Rat& c, const std::vector<double>&, std::size_t) {
        return c.to_double();
    }
    template <class D>
    static double coeff_to_double(const FieldElem<D>& c, const std::vector<double>& eps, std::size_t i) {
        return c.to_double_at(eps, i);
    }

    void normalize(long k, UPoly<C> n, UPoly<C> d) {
        if (n.is_zero()) {
            k_ = 0;
            num_ = UPoly<C>();
            den_ = UPoly<C>::one();
            return;
        }
        std::size_t vn = n.valuation(), vd = d.valuation();
        k += static_cast<long>(vn) - static_cast<long>(vd);
        n = n.shift_down(vn);
        d = d.shift_down(vd);
        UPoly<C> g = UPoly<C>::gcd(n, d);
        if (g.degree() > 0) {
            n = n / g;
            d = d / g;
        }
        C c0 = d.coeff(0);
        if (!c0.is_one()) {
            C ic = C(1) / c0;
            n = n.scaled(ic);
            d = d.scaled(ic);
        }
        k_ = k;
        num_ = std::move(n);
        den_ = std::move(d);
    }

    long k_;
    UPoly<C> num_, den_;
};

namespace detail {
inline std::string coeff_str(const Rat& c) { return c.str(); }
template <class D>
std::string coeff_str(const FieldElem<D>& c) { return "(" + c.str("eta") + ")"; }

template <class C>
std::string upoly_str(const UPoly<C>& p, const std::string& t) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const C& c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string cs = coeff_str(c);
        std::string term;
        if (i == 0) term = cs;
        else {
            std::string tp = i == 1 ? t : t + "^" + std::to_string(i);
            term = (cs == "1") ? tp : (cs == "-1" ? "-" + tp : cs + "*" + tp);
        }
        if (first) { s = term; first = false; }
        else if (!term.empty() && term[0] == '-') s += " - " + term.substr(1);
        else s += " + " + term;
    }
    return s;
}
} // namespace detail

template <class C>
std::string FieldElem<C>::str(const std::string& tname) const {
    if (is_zero()) return "0";
    std::string s;
    if (k_ != 0) {
        s = tname;
        if (k_ != 1) s += "^" + std::to_string(k_);
    }
    std::string ns = detail::upoly_str(num_, tname);
    if (num_.degree() > 0 || !s.empty()) {
        bool needs_paren = num_.degree() > 0 || ns.find('-') == 0;
        if (!s.empty()) s += "*";
        s += needs_paren && num_.degree() > 0 ? "(" + ns + ")" : ns;
    } else {
        s = ns;
    }
    if (den_ != UPoly<C>::one())
        s += "/(" + detail::upoly_str(den_, tname) + ")";
    return s;
}

// ---- generic field queries, recursing through the tower ----

inline int field_sign(const Rat& x) { return x.sign(); }
template <class C>
int field_sign(const FieldElem<C>& x) { return x.sign(); }

inline bool field_bounded_over_Q(const Rat&) { return true; }
template <class C>
bool field_bounded_over_Q(const FieldElem<C>& x) {
    if (x.is_zero() || x.order() > 0) return true;
    if (x.order() < 0) return false;
    return field_bounded_over_Q(x.num().coeff(0));
}

inline Rat field_st_Q(const Rat& x) { return x; }
template <class C>
Rat field_st_Q(const FieldElem<C>& x) {
    if (x.is_zero() || x.order() > 0) return Rat(0);
    if (x.order() < 0) throw std::domain_error("standard part of unbounded element");
    return field_st_Q(x.num().coeff(0));
}

inline int compare(const Rat& a, const Rat& b);
template <class C>
int compare(const UPoly<C>& a, const UPoly<C>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (long i = a.degree(); i >= 0; --i) {
        int c = compare(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
        if (c != 0) return c;
    }
    return 0;
}
template <class C>
int compare(const FieldElem<C>& a, const FieldElem<C>& b) {
    // structural order (canonical forms), fine for container keys
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero()) return 0;
        return a.is_zero() ? -1 : 1;
    }
    if (a.order() != b.order()) return a.order() < b.order() ? -1 : 1;
    int c = compare(a.num(), b.num());
    if (c != 0) return c;
    return compare(a.den(), b.den());
}

// embed an element of C(t) into C(t)(s) mapping t to the *smaller* new
// infinitesimal s (coefficients of t become constants of the outer layer)
inline FieldElem<Rat> deepen(const Rat& x) { return FieldElem<Rat>(x); }
template <class C>
FieldElem<FieldElem<C>> deepen(const FieldElem<C>& x) {
    using F = FieldElem<C>;
    using G = FieldElem<F>;
    if (x.is_zero()) return G();
    auto lift_poly = [](const UPoly<C>& p) {
        std::vector<F> cs;
        cs.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) cs.emplace_back(c);
        return UPoly<F>(std::move(cs));
    };
    return G(x.order(), lift_poly(x.num()), lift_poly(x.den()));
}

using F1 = FieldElem<Rat>;           // Q(eps)
using F2 = FieldElem<FieldElem<Rat>>; // Q(t1)(t2), t2 << t1 << Q^{>0}

} // namespace stind
