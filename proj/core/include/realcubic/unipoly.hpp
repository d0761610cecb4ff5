#ifndef REALCUBIC_UNIPOLY_HPP
#define REALCUBIC_UNIPOLY_HPP

#include <string>
#include <vector>

#include "realcubic/rational.hpp"

namespace realcubic {

// Dense univariate polynomial over Q, coefficients lowest degree first.
class UnivariatePoly {
  public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(Rat c) { set_coeff(0, std::move(c)); }
    explicit UnivariatePoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UnivariatePoly x() { return monomial(1, rat(1)); }
    static UnivariatePoly monomial(unsigned deg, Rat c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero poly
    const Rat& coeff(unsigned k) const;
    void set_coeff(unsigned k, Rat v);
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    UnivariatePoly operator-() const;
    UnivariatePoly& operator+=(const UnivariatePoly& o);
    UnivariatePoly& operator-=(const UnivariatePoly& o);
    UnivariatePoly operator*(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const Rat& s) const;

    Rat operator()(const Rat& x) const;  // Horner
    double eval_double(double x) const;

    bool operator==(const UnivariatePoly& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<Rat> c_;
    void trim();
};

inline UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
inline UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
inline UnivariatePoly operator*(const Rat& s, const UnivariatePoly& p) { return p * s; }

UnivariatePoly derivative(const UnivariatePoly& p);
// quotient/remainder over Q; divisor must be nonzero
std::pair<UnivariatePoly, UnivariatePoly> divrem(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b);  // monic
UnivariatePoly squarefree_part(const UnivariatePoly& p);      // monic-normalized radical
UnivariatePoly make_monic(UnivariatePoly p);

// Canonical Sturm chain of squarefree_part(p). Throws on the zero polynomial.
std::vector<UnivariatePoly> sturm_chain(const UnivariatePoly& p);

// Number of distinct real roots of p in (lo, hi].
int count_real_roots(const UnivariatePoly& p, const ExtRat& lo, const ExtRat& hi);
inline int count_real_roots(const UnivariatePoly& p) {
    return count_real_roots(p, ExtRat::neg_inf(), ExtRat::pos_inf());
}

// Isolating interval for one real root of a squarefree polynomial. The root
// lies in [lo, hi]; either lo == hi (exact rational root) or poly(lo) and
// poly(hi) are nonzero of opposite sign. refine() halves the interval.
struct IsolatedRoot {
    UnivariatePoly poly;
    Rat lo, hi;

    bool exact() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    void refine();
    void refine_below(const Rat& w);

    double approx() const;
};

std::vector<IsolatedRoot> isolate_real_roots(const UnivariatePoly& p);

enum class Order { Less, Equal, Greater };
Order compare_root_to_rational(IsolatedRoot r, const Rat& c);

// Exact sign of q at the algebraic number described by r: -1, 0, +1.
int sign_at_root(const UnivariatePoly& q, IsolatedRoot r);

// Cauchy bound: all real roots lie in (-B, B).
Rat cauchy_bound(const UnivariatePoly& p);

}  // namespace realcubic

#endif
