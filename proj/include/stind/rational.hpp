// Exact rational arithmetic, backed by GMP.
//
// Rat is the ground field of everything else in this library: all other
// coefficient fields are built on top of it by adjoining infinitesimals
// (field_elem.hpp) or algebraic elements (tower.hpp).

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace stind {

class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long num, long den) : v_(mpq_class(num, den)) { v_.canonicalize(); }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    explicit Rat(const mpz_class& z) : v_(z) {}

    // Accepts "p", "p/q", and decimal strings like "-0.25".
    static Rat parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { v_ /= o.v_; return *this; }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat inv() const { return Rat(mpq_class(1) / v_); }

    static Rat pow(const Rat& b, unsigned e) {
        Rat r(1), x = b;
        for (unsigned k = e; k; k >>= 1) {
            if (k & 1) r *= x;
            if (k > 1) x *= x;
        }
        return r;
    }

    // Largest integer <= value.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    double to_double() const { return v_.get_d(); }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

inline Rat Rat::parse(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        mpq_class q(s);
        q.canonicalize();
        return Rat(q);
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    mpz_class den(1);
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    mpq_class q(mpz_class(digits), den);
    q.canonicalize();
    return Rat(q);
}

// Three-way compare usable as a strict weak order in containers.
inline int compare(const Rat& a, const Rat& b) {
    return a < b ? -1 : (b < a ? 1 : 0);
}

} // namespace stind
