// Sparse multivariate polynomials over a field, with the algebra the CAD
// projection needs: pseudo-division, subresultant PRS, resultants,
// discriminants, multivariate gcd and squarefree parts.
//
// Exponent vectors are fixed-arity; the variable set is positional and
// owned by the caller (formulas carry the name table).

#pragma once

#include "field_elem.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stind {

template <class C>
class MPoly {
public:
    using Expo = std::vector<unsigned>;

    MPoly() : n_(0) {}
    explicit MPoly(std::size_t nvars) : n_(nvars) {}

    static MPoly constant(std::size_t nvars, const C& c) {
        MPoly p(nvars);
        if (!c.is_zero()) p.t_[Expo(nvars, 0)] = c;
        return p;
    }
    static MPoly var(std::size_t nvars, std::size_t i) {
        MPoly p(nvars);
        Expo e(nvars, 0);
        e.at(i) = 1;
        p.t_[std::move(e)] = C(1);
        return p;
    }
    static MPoly monomial(std::size_t nvars, Expo e, const C& c) {
        MPoly p(nvars);
        if (!c.is_zero()) p.t_[std::move(e)] = c;
        return p;
    }

    std::size_t nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == Expo(n_, 0));
    }
    C constant_value() const {
        if (t_.empty()) return C(0);
        auto it = t_.find(Expo(n_, 0));
        return it == t_.end() ? C(0) : it->second;
    }
    const std::map<Expo, C>& terms() const { return t_; }

    long degree(std::size_t var) const {
        long d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, static_cast<long>(e[var]));
        return d;
    }
    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : t_) {
            long s = 0;
            for (unsigned x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }
    bool depends_on(std::size_t var) const { return degree(var) > 0; }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.t_) {
            auto it = t_.find(e);
            if (it == t_.end()) t_[e] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) t_.erase(it);
            }
        }
        return *this;
    }
    MPoly& operator-=(const MPoly& o) { return *this += -o; }
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_arity(b);
        MPoly r(a.n_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Expo e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                C v = ca * cb;
                if (v.is_zero()) continue;
                auto it = r.t_.find(e);
                if (it == r.t_.end()) r.t_[std::move(e)] = std::move(v);
                else {
                    it->second += v;
                    if (it->second.is_zero()) r.t_.erase(it);
                }
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly scaled(const C& s) const {
        if (s.is_zero()) return MPoly(n_);
        MPoly r = *this;
        for (auto& [e, c] : r.t_) c = c * s;
        return r;
    }

    static MPoly pow(const MPoly& b, unsigned e) {
        MPoly r = constant(b.n_, C(1)), x = b;
        for (unsigned k = e; k; k >>= 1) {
            if (k & 1) r *= x;
            if (k > 1) x *= x;
        }
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.n_ == b.n_ && a.t_ == b.t_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly derivative(std::size_t var) const {
        MPoly r(n_);
        for (const auto& [e, c] : t_) {
            if (e[var] == 0) continue;
            Expo e2 = e;
            e2[var] -= 1;
            r.t_[std::move(e2)] = c * C(static_cast<int>(e[var]));
        }
        return r;
    }

    // view as univariate in `var`: coefficient of var^i, same arity
    std::vector<MPoly> coeffs_in(std::size_t var) const {
        long d = std::max<long>(degree(var), 0);
        std::vector<MPoly> cs(static_cast<std::size_t>(d + 1), MPoly(n_));
        for (const auto& [e, c] : t_) {
            Expo e2 = e;
            unsigned i = e2[var];
            e2[var] = 0;
            cs[i].t_[std::move(e2)] = c;
        }
        while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
        return cs;
    }
    MPoly lc_in(std::size_t var) const { return coeffs_in(var).back(); }

    static MPoly from_coeffs_in(std::size_t var, const std::vector<MPoly>& cs, std::size_t nvars) {
        MPoly r(nvars);
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (const auto& [e, c] : cs[i].t_) {
                Expo e2 = e;
                e2[var] += static_cast<unsigned>(i);
                r.t_[std::move(e2)] = c;
            }
        return r;
    }

    // full evaluation; X must be constructible from C and support ring ops
    template <class X>
    X eval(const std::vector<X>& pt) const {
        X r(0);
        for (const auto& [e, c] : t_) {
            X m(c);
            for (std::size_t i = 0; i < n_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) m = m * pt[i];
            r = r + m;
        }
        return r;
    }

    // substitute all variables except `var`, producing a univariate in `var`
    template <class X>
    UPoly<X> specialize(const std::vector<X>& pt, std::size_t var) const {
        if (is_zero()) return UPoly<X>();
        std::vector<X> cs(static_cast<std::size_t>(std::max<long>(degree(var), 0)) + 1, X(0));
        for (const auto& [e, c] : t_) {
            X m(c);
            for (std::size_t i = 0; i < n_; ++i) {
                if (i == var) continue;
                for (unsigned k = 0; k < e[i]; ++k) m = m * pt[i];
            }
            cs[e[var]] = cs[e[var]] + m;
        }
        return UPoly<X>(std::move(cs));
    }

    // substitute var := value (a field constant), keeping arity
    MPoly substitute(std::size_t var, const C& value) const {
        MPoly r(n_);
        for (const auto& [e, c] : t_) {
            C v = c;
            for (unsigned k = 0; k < e[var]; ++k) v = v * value;
            if (v.is_zero()) continue;
            Expo e2 = e;
            e2[var] = 0;
            auto it = r.t_.find(e2);
            if (it == r.t_.end()) r.t_[std::move(e2)] = v;
            else {
                it->second += v;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
        return r;
    }

    // substitute var := polynomial
    MPoly substitute(std::size_t var, const MPoly& value) const {
        check_arity(value);
        MPoly r(n_);
        for (const auto& [e, c] : t_) {
            Expo e2 = e;
            e2[var] = 0;
            MPoly term = monomial(n_, std::move(e2), c);
            for (unsigned k = 0; k < e[var]; ++k) term *= value;
            r += term;
        }
        return r;
    }

    // remap into a context with new_nvars variables; where[i] is the new
    // position of old variable i
    MPoly widen(std::size_t new_nvars, const std::vector<std::size_t>& where) const {
        MPoly r(new_nvars);
        for (const auto& [e, c] : t_) {
            Expo e2(new_nvars, 0);
            for (std::size_t i = 0; i < n_; ++i) e2[where[i]] = e[i];
            r.t_[std::move(e2)] = c;
        }
        return r;
    }

    // map coefficients through a functor (field embeddings)
    template <class D, class Fn>
    MPoly<D> map_coeffs(Fn&& fn) const {
        MPoly<D> r(n_);
        for (const auto& [e, c] : t_) {
            D d = fn(c);
            if (!d.is_zero()) r.set_term(e, std::move(d));
        }
        return r;
    }
    void set_term(const Expo& e, C c) {
        if (c.is_zero()) t_.erase(e);
        else t_[e] = std::move(c);
    }

    // canonical representative: divide by the lex-leading coefficient
    MPoly normalized() const {
        if (t_.empty()) return *this;
        return scaled(C(1) / t_.rbegin()->second);
    }

    // strip common variable powers
    MPoly strip_monomial_content() const {
        if (t_.empty()) return *this;
        Expo m = t_.begin()->first;
        for (const auto& [e, c] : t_)
            for (std::size_t i = 0; i < n_; ++i) m[i] = std::min(m[i], e[i]);
        MPoly r(n_);
        for (const auto& [e, c] : t_) {
            Expo e2 = e;
            for (std::size_t i = 0; i < n_; ++i) e2[i] -= m[i];
            r.t_[std::move(e2)] = c;
        }
        return r;
    }

    std::string str(const std::vector<std::string>& names) const;

private:
    void check_arity(const MPoly& o) const {
        if (n_ != o.n_) throw std::logic_error("polynomial arity mismatch");
    }

    std::size_t n_;
    std::map<Expo, C> t_;
};

template <class C>
int compare(const MPoly<C>& a, const MPoly<C>& b) {
    if (a.nvars() != b.nvars()) return a.nvars() < b.nvars() ? -1 : 1;
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = compare(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

template <class C>
struct MPolyLess {
    bool operator()(const MPoly<C>& a, const MPoly<C>& b) const { return compare(a, b) < 0; }
};

// exact division (caller guarantees divisibility, as in PRS chains)
template <class C>
MPoly<C> divide_exact(MPoly<C> a, const MPoly<C>& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return a;
    if (b.is_constant()) return a.scaled(C(1) / b.constant_value());
    MPoly<C> q(a.nvars());
    const auto lead = *b.terms().rbegin();
    while (!a.is_zero()) {
        const auto la = *a.terms().rbegin();
        typename MPoly<C>::Expo e = la.first;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < lead.first[i]) throw std::logic_error("inexact polynomial division");
            e[i] -= lead.first[i];
        }
        MPoly<C> mono = MPoly<C>::monomial(a.nvars(), std::move(e), la.second / lead.second);
        q += mono;
        a -= mono * b;
    }
    return q;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b   (in `var`)
template <class C>
MPoly<C> prem(const MPoly<C>& a, const MPoly<C>& b, std::size_t var) {
    long da = a.degree(var), db = b.degree(var);
    if (db < 0) throw std::domain_error("pseudo-division by zero");
    if (da < db) return a;
    MPoly<C> lb = b.lc_in(var);
    MPoly<C> r = a;
    long mults = 0;
    while (!r.is_zero() && r.degree(var) >= db) {
        long dr = r.degree(var);
        MPoly<C> lr = r.lc_in(var);
        MPoly<C> shift = MPoly<C>::pow(MPoly<C>::var(a.nvars(), var), static_cast<unsigned>(dr - db));
        r = lb * r - lr * shift * b;
        ++mults;
    }
    for (; mults < da - db + 1; ++mults) r = lb * r;
    return r;
}

// Resultant of f and g with respect to `var`, by the subresultant PRS.
template <class C>
MPoly<C> resultant(MPoly<C> f, MPoly<C> g, std::size_t var) {
    std::size_t n = f.nvars();
    long df = f.degree(var), dg = g.degree(var);
    if (df < 0 || dg < 0) throw std::domain_error("resultant of zero polynomial");
    if (df == 0 && dg == 0) throw std::domain_error("resultant: both arguments constant in variable");
    bool neg = false;
    if (df < dg) {
        std::swap(f, g);
        std::swap(df, dg);
        if ((df % 2) == 1 && (dg % 2) == 1) neg = true;
    }
    if (dg == 0) {
        MPoly<C> r = MPoly<C>::pow(g, static_cast<unsigned>(df));
        return neg ? -r : r;
    }
    int s = neg ? -1 : 1;
    MPoly<C> one = MPoly<C>::constant(n, C(1));
    MPoly<C> gg = one, h = one;
    while (true) {
        df = f.degree(var);
        dg = g.degree(var);
        long delta = df - dg;
        if ((df % 2) == 1 && (dg % 2) == 1) s = -s;
        MPoly<C> r = prem(f, g, var);
        f = g;
        MPoly<C> div = gg * MPoly<C>::pow(h, static_cast<unsigned>(delta));
        g = r.is_zero() ? MPoly<C>(n) : divide_exact(r, div);
        if (g.is_zero()) return MPoly<C>(n); // nontrivial common factor
        gg = f.lc_in(var);
        if (delta > 0) {
            MPoly<C> num = MPoly<C>::pow(gg, static_cast<unsigned>(delta));
            h = delta == 1 ? num : divide_exact(num, MPoly<C>::pow(h, static_cast<unsigned>(delta - 1)));
        }
        if (g.degree(var) == 0) {
            long dfin = f.degree(var);
            MPoly<C> num = MPoly<C>::pow(g, static_cast<unsigned>(dfin));
            MPoly<C> res = dfin <= 1 ? num : divide_exact(num, MPoly<C>::pow(h, static_cast<unsigned>(dfin - 1)));
            return s < 0 ? -res : res;
        }
    }
}

template <class C>
MPoly<C> discriminant(const MPoly<C>& p, std::size_t var) {
    long d = p.degree(var);
    if (d < 2) throw std::domain_error("discriminant needs degree >= 2 in the variable");
    MPoly<C> r = resultant(p, p.derivative(var), var);
    MPoly<C> q = divide_exact(r, p.lc_in(var));
    if (((d * (d - 1)) / 2) % 2 == 1) q = -q;
    return q;
}

// multivariate gcd via the primitive PRS, recursing on the active variables
template <class C>
MPoly<C> mgcd(const MPoly<C>& a, const MPoly<C>& b);

namespace detail {
template <class C>
MPoly<C> content_in(const MPoly<C>& p, std::size_t var) {
    auto cs = p.coeffs_in(var);
    MPoly<C> g(p.nvars());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.normalized() : mgcd(g, c);
        if (g.is_constant()) return MPoly<C>::constant(p.nvars(), C(1));
    }
    return g.is_zero() ? MPoly<C>::constant(p.nvars(), C(1)) : g;
}
} // namespace detail

template <class C>
MPoly<C> mgcd(const MPoly<C>& a, const MPoly<C>& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    if (a.is_constant() || b.is_constant()) return MPoly<C>::constant(a.nvars(), C(1));
    std::size_t var = a.nvars();
    for (std::size_t i = a.nvars(); i-- > 0;)
        if (a.depends_on(i) || b.depends_on(i)) { var = i; break; }
    if (var == a.nvars()) return MPoly<C>::constant(a.nvars(), C(1));
    if (!a.depends_on(var))
        return mgcd(a, detail::content_in(b, var));
    if (!b.depends_on(var))
        return mgcd(detail::content_in(a, var), b);
    MPoly<C> ca = detail::content_in(a, var), cb = detail::content_in(b, var);
    MPoly<C> f = divide_exact(a, ca), g = divide_exact(b, cb);
    if (f.degree(var) < g.degree(var)) std::swap(f, g);
    while (true) {
        MPoly<C> r = prem(f, g, var);
        if (r.is_zero()) break;
        if (r.degree(var) == 0) {
            // primitive parts coprime in var
            return mgcd(ca, cb);
        }
        f = g;
        g = divide_exact(r, detail::content_in(r, var));
    }
    return (mgcd(ca, cb) * divide_exact(g, detail::content_in(g, var))).normalized();
}

template <class C>
MPoly<C> squarefree_part(const MPoly<C>& p) {
    if (p.is_zero() || p.is_constant()) return p;
    MPoly<C> g(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        if (!p.depends_on(i)) continue;
        MPoly<C> d = p.derivative(i);
        if (d.is_zero()) continue;
        g = g.is_zero() ? mgcd(p, d) : mgcd(g, d);
        if (g.is_constant()) break;
    }
    if (g.is_zero() || g.is_constant()) return p.normalized();
    return divide_exact(p, g).normalized();
}

template <class C>
std::string MPoly<C>::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = detail::coeff_str(c);
        std::string term;
        if (mono.empty()) term = cs;
        else if (cs == "1") term = mono;
        else if (cs == "-1") term = "-" + mono;
        else {
            bool paren = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos ||
                         cs.find('*') != std::string::npos;
            term = (paren ? "(" + cs + ")" : cs) + "*" + mono;
        }
        if (first) { s = term; first = false; }
        else if (!term.empty() && term[0] == '-') s += " - " + term.substr(1);
        else s += " + " + term;
    }
    return s;
}

} // namespace stind
