#include "realcubic/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace realcubic {

namespace {
const Rat kZero = Rat(0);
}

UnivariatePoly UnivariatePoly::monomial(unsigned deg, Rat c) {
    UnivariatePoly p;
    p.set_coeff(deg, std::move(c));
    return p;
}

const Rat& UnivariatePoly::coeff(unsigned k) const {
    if (k >= c_.size()) return kZero;
    return c_[k];
}

void UnivariatePoly::set_coeff(unsigned k, Rat v) {
    if (k >= c_.size()) {
        if (is_zero(v)) return;
        c_.resize(k + 1, Rat(0));
    }
    c_[k] = std::move(v);
    trim();
}

const Rat& UnivariatePoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

void UnivariatePoly::trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
}

UnivariatePoly UnivariatePoly::operator-() const {
    UnivariatePoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (realcubic::is_zero(c_[i])) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::operator*(const Rat& s) const {
    if (realcubic::is_zero(s)) return {};
    UnivariatePoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

Rat UnivariatePoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UnivariatePoly::eval_double(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::string UnivariatePoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = coeff(k);
        if (realcubic::is_zero(c)) continue;
        if (!first) os << (sign(c) > 0 ? " + " : " - ");
        else if (sign(c) < 0) os << "-";
        first = false;
        Rat a = rat_abs(c);
        if (k == 0 || a != 1) os << to_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

UnivariatePoly derivative(const UnivariatePoly& p) {
    if (p.degree() < 1) return {};
    std::vector<Rat> r(p.degree());
    for (int k = 1; k <= p.degree(); ++k) r[k - 1] = p.coeff(k) * rat(k);
    return UnivariatePoly(std::move(r));
}

std::pair<UnivariatePoly, UnivariatePoly> divrem(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    UnivariatePoly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        unsigned d = r.degree() - b.degree();
        Rat f = r.leading() / b.leading();
        q.set_coeff(d, q.coeff(d) + f);
        r -= UnivariatePoly::monomial(d, f) * b;
    }
    return {q, r};
}

UnivariatePoly make_monic(UnivariatePoly p) {
    if (p.is_zero()) return p;
    Rat inv = Rat(1) / p.leading();
    return p * inv;
}

UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

UnivariatePoly squarefree_part(const UnivariatePoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero input");
    if (p.degree() == 0) return UnivariatePoly(rat(1));
    UnivariatePoly g = poly_gcd(p, derivative(p));
    auto [q, r] = divrem(p, g);
    assert(r.is_zero());
    return make_monic(std::move(q));
}

std::vector<UnivariatePoly> sturm_chain(const UnivariatePoly& p) {
    if (p.is_zero()) throw std::domain_error("sturm_chain: zero input");
    std::vector<UnivariatePoly> chain;
    UnivariatePoly s0 = squarefree_part(p);
    chain.push_back(s0);
    if (s0.degree() == 0) return chain;
    chain.push_back(derivative(s0));
    while (chain.back().degree() > 0) {
        auto [q, r] = divrem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;  // squarefree input: only at the constant tail
        chain.push_back(-r);
    }
    return chain;
}

namespace {

int sign_at(const UnivariatePoly& p, const ExtRat& x) {
    if (p.is_zero()) return 0;
    switch (x.kind) {
        case ExtRat::Finite:
            return sign(p(x.value));
        case ExtRat::PosInf:
            return sign(p.leading());
        case ExtRat::NegInf:
            return p.degree() % 2 == 0 ? sign(p.leading()) : -sign(p.leading());
    }
    return 0;
}

// Sign variations of the chain just right of x. A zero of the first chain
// member takes the sign it has immediately after x (= sign of the derivative
// there); interior zeros are skipped as usual.
int variations_plus(const std::vector<UnivariatePoly>& chain, const ExtRat& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (size_t i = 0; i < chain.size(); ++i) {
        int s = sign_at(chain[i], x);
        if (i == 0 && s == 0 && chain.size() > 1) s = sign_at(chain[1], x);
        signs.push_back(s);
    }
    int var = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int count_real_roots(const UnivariatePoly& p, const ExtRat& lo, const ExtRat& hi) {
    if (p.is_zero()) throw std::domain_error("count_real_roots: zero input");
    if (!(lo < hi)) throw std::domain_error("count_real_roots: empty interval");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    // V+(lo) - V+(hi) counts distinct roots in (lo, hi]; a root at hi is
    // excluded by the just-right convention, so add it back.
    int n = variations_plus(chain, lo) - variations_plus(chain, hi);
    if (hi.finite() && is_zero(p(hi.value))) ++n;
    return n;
}

Rat cauchy_bound(const UnivariatePoly& p) {
    if (p.is_zero() || p.degree() == 0) return rat(1);
    Rat m(0);
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, rat_abs(p.coeff(k)));
    return Rat(1) + m / rat_abs(p.leading());
}

void IsolatedRoot::refine() {
    if (exact()) return;
    Rat mid = (lo + hi) / 2;
    int sm = sign(poly(mid));
    if (sm == 0) {
        lo = hi = mid;
        return;
    }
    if (sm == sign(poly(lo))) lo = mid;
    else hi = mid;
}

void IsolatedRoot::refine_below(const Rat& w) {
    while (!exact() && width() > w) refine();
}

double IsolatedRoot::approx() const {
    IsolatedRoot r = *this;
    r.refine_below(rat(1, 1l << 40));
    return ((r.lo + r.hi) / 2).get_d();
}

namespace {

void isolate_rec(const UnivariatePoly& p, const std::vector<UnivariatePoly>& chain, const Rat& lo,
                 const Rat& hi, int nroots, std::vector<IsolatedRoot>& out) {
    if (nroots == 0) return;
    if (nroots == 1) {
        // Tighten until the endpoints are not roots themselves.
        Rat a = lo, b = hi;
        if (is_zero(p(b))) {
            out.push_back({p, b, b});
            return;
        }
        while (is_zero(p(a))) {
            Rat mid = (a + b) / 2;
            if (is_zero(p(mid))) {
                out.push_back({p, mid, mid});
                return;
            }
            if (count_real_roots(p, ExtRat(mid), ExtRat(b)) == 1) a = mid;
            else b = mid;  // the one root is in (a, mid], but a is a root of ... cannot happen
        }
        out.push_back({p, a, b});
        return;
    }
    Rat mid = (lo + hi) / 2;
    int left = count_real_roots(p, ExtRat(lo), ExtRat(mid));
    if (is_zero(p(mid))) {
        out.push_back({p, mid, mid});
        isolate_rec(p, chain, lo, mid, left - 1, out);
        // re-sort below; exact roots are emitted out of order
        isolate_rec(p, chain, mid, hi, nroots - left, out);
    } else {
        isolate_rec(p, chain, lo, mid, left, out);
        isolate_rec(p, chain, mid, hi, nroots - left, out);
    }
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const UnivariatePoly& p) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero input");
    UnivariatePoly sf = squarefree_part(p);
    std::vector<IsolatedRoot> out;
    if (sf.degree() < 1) return out;
    auto chain = sturm_chain(sf);
    Rat b = cauchy_bound(sf);
    int n = count_real_roots(sf, ExtRat(-b), ExtRat(b));
    isolate_rec(sf, chain, -b, b, n, out);
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
    // Shrink until pairwise disjoint so the ordering is certified.
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        while (!(out[i].hi < out[i + 1].lo) && !(out[i].exact() && out[i + 1].exact())) {
            out[i].refine();
            out[i + 1].refine();
        }
    }
    return out;
}

Order compare_root_to_rational(IsolatedRoot r, const Rat& c) {
    if (r.exact()) {
        if (r.lo < c) return Order::Less;
        return r.lo == c ? Order::Equal : Order::Greater;
    }
    for (;;) {
        if (r.hi < c || r.hi == c) return Order::Less;
        if (c < r.lo || c == r.lo) return Order::Greater;
        // c lies strictly inside (lo, hi)
        if (is_zero(r.poly(c))) return Order::Equal;
        int sc = sign(r.poly(c));
        if (sc == sign(r.poly(r.lo))) r.lo = c;
        else r.hi = c;
        r.refine();
        if (r.exact()) return compare_root_to_rational(r, c);
    }
}

int sign_at_root(const UnivariatePoly& q, IsolatedRoot r) {
    if (q.is_zero()) return 0;
    if (r.exact()) return sign(q(r.lo));
    UnivariatePoly sf = squarefree_part(r.poly);
    UnivariatePoly g = poly_gcd(sf, q);
    if (g.degree() > 0) {
        // q vanishes at the root iff the shared factor has a root in [lo, hi].
        int shared = count_real_roots(g, ExtRat(r.lo), ExtRat(r.hi)) + (is_zero(g(r.lo)) ? 1 : 0);
        if (shared > 0) return 0;
    }
    for (;;) {
        if (!is_zero(q(r.lo)) && !is_zero(q(r.hi)) &&
            count_real_roots(q, ExtRat(r.lo), ExtRat(r.hi)) == 0) {
            return sign(q(r.lo));
        }
        r.refine();
        if (r.exact()) return sign(q(r.lo));
    }
}

}  // namespace realcubic
