#ifndef REALCUBIC_RATIONAL_HPP
#define REALCUBIC_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace realcubic {

using Int = mpz_class;
using Rat = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised when an exact criterion hits a degenerate configuration it refuses to guess about.
struct BoundaryCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rat& x) { return sgn(x); }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline Rat rat_abs(const Rat& x) { return sign(x) < 0 ? Rat(-x) : x; }

inline Rat rat_pow(const Rat& x, unsigned e) {
    Rat r(1);
    Rat b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Parses "p", "-p", or "p/q" with arbitrary-precision integers.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (sgn(d) == 0) throw ParseError("rational with zero denominator: " + s);
        Rat r(n, d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal: " + s);
    }
}

inline std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// True iff x = (p/q)^2 for some rational; reports the nonnegative root.
inline bool rat_is_square(const Rat& x, Rat* root = nullptr) {
    if (sign(x) < 0) return false;
    Int n = x.get_num(), d = x.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    if (root) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        *root = Rat(rn, rd);
        root->canonicalize();
    }
    return true;
}

// Extended rational for interval endpoints.
struct ExtRat {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rat value;

    ExtRat() = default;
    ExtRat(Rat v) : kind(Finite), value(std::move(v)) {}
    static ExtRat neg_inf() { return ExtRat(NegInf); }
    static ExtRat pos_inf() { return ExtRat(PosInf); }

    bool finite() const { return kind == Finite; }
    bool operator<(const ExtRat& o) const {
        if (kind != o.kind) return kind < o.kind;
        return kind == Finite && value < o.value;
    }

  private:
    explicit ExtRat(Kind k) : kind(k) {}
};

}  // namespace realcubic

#endif
