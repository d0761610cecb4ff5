#ifndef REALCUBIC_GAUSS_HPP
#define REALCUBIC_GAUSS_HPP

#include <string>

#include "realcubic/rational.hpp"

namespace realcubic {

// Element of Q(i). Canonical form is inherited from mpq_class.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long n) : re(rat(n)), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(rat(0), rat(1)); }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        Rat n = o.re * o.re + o.im * o.im;
        if (is_zero(n)) throw std::domain_error("GaussRat: division by zero");
        Rat r = (re * o.re + im * o.im) / n;
        Rat i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
};

inline GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
inline GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
inline GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
inline GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

inline bool is_zero(const GaussRat& z) { return is_zero(z.re) && is_zero(z.im); }
inline bool is_real(const GaussRat& z) { return is_zero(z.im); }
inline GaussRat conj(const GaussRat& z) { return GaussRat(z.re, -z.im); }
inline Rat norm(const GaussRat& z) { return z.re * z.re + z.im * z.im; }

inline std::string to_string(const GaussRat& z) {
    if (is_zero(z.im)) return to_string(z.re);
    std::string s;
    if (!is_zero(z.re)) s = to_string(z.re) + (sign(z.im) >= 0 ? "+" : "");
    s += to_string(z.im) + "*i";
    return s;
}

}  // namespace realcubic

#endif
