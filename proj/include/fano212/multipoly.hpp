#ifndef FANO212_MULTIPOLY_HPP
#define FANO212_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano212 {

// Fixed variable universe. Polynomial arithmetic is exact and sparse; the
// universe covers the ambient coordinates, the pencil plane, and the scalar
// parameters that appear in the computations.
namespace vars {
constexpr int kCount = 17;
constexpr const char* kNames[kCount] = {"x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3",
                                        "x",  "y",  "z",  "u",  "v",  "a",  "t",  "lambda",
                                        "e"};
constexpr int x0 = 0, x1 = 1, x2 = 2, x3 = 3;
constexpr int y0 = 4, y1 = 5, y2 = 6, y3 = 7;
constexpr int px = 8, py = 9, pz = 10;
constexpr int u = 11, v = 12, a = 13, t = 14, lambda = 15, e = 16;

inline int id(const std::string& name) {
    for (int k = 0; k < kCount; ++k)
        if (name == kNames[k]) return k;
    throw std::invalid_argument("unknown variable '" + name + "'");
}
inline const char* name(int k) { return kNames[k]; }
}  // namespace vars

struct Monomial {
    std::array<uint8_t, vars::kCount> e{};

    int total_degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const { return total_degree() == 0; }

    static Monomial var(int id, int exp = 1) {
        Monomial m;
        m.e[id] = static_cast<uint8_t>(exp);
        return m;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int k = 0; k < vars::kCount; ++k) {
            int s = e[k] + o.e[k];
            if (s > 255) throw std::overflow_error("monomial exponent overflow");
            r.e[k] = static_cast<uint8_t>(s);
        }
        return r;
    }

    // Graded lexicographic order (canonical monomial order of the toolkit).
    bool operator<(const Monomial& o) const {
        int da = total_degree(), db = o.total_degree();
        if (da != db) return da < db;
        return e < o.e;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

template <class C>
class MultiPoly {
  public:
    using Coeff = C;
    using TermMap = std::map<Monomial, C>;

    MultiPoly() = default;
    MultiPoly(long n) {
        if (n != 0) terms_[Monomial{}] = C(n);
    }
    MultiPoly(const C& c) {
        if (!(c == C(0))) terms_[Monomial{}] = c;
    }
    static MultiPoly var(int id, int exp = 1) {
        MultiPoly p;
        if (exp == 0) return MultiPoly(1);
        p.terms_[Monomial::var(id, exp)] = C(1);
        return p;
    }
    static MultiPoly term(const Monomial& m, const C& c) {
        MultiPoly p;
        if (!(c == C(0))) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    C constant_value() const {
        if (terms_.empty()) return C(0);
        if (!is_constant()) throw std::domain_error("MultiPoly: not a constant");
        return terms_.begin()->second;
    }
    C coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;  // -1 for the zero polynomial
    }
    int degree_in(int var) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[var]));
        return d;
    }
    bool is_homogeneous(int d) const {
        for (const auto& [m, c] : terms_)
            if (m.total_degree() != d) return false;
        return true;
    }
    bool uses_var(int var) const { return degree_in(var) > 0; }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = C(0) - c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, C(0) - c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& operator*=(const C& c) {
        if (c == C(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, cc] : terms_) cc = cc * c;
        return *this;
    }
    friend MultiPoly operator*(MultiPoly a, const C& c) { return a *= c; }
    friend MultiPoly operator*(const C& c, MultiPoly a) { return a *= c; }
    MultiPoly& operator/=(const C& c) { return *this *= (C(1) / c); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(int k) const {
        MultiPoly r(1), b(*this);
        for (; k; k >>= 1) {
            if (k & 1) r = r * b;
            b = (k > 1) ? b * b : b;
        }
        return r;
    }

    // Simultaneous substitution var -> polynomial; unbound variables pass
    // through. Exact composition.
    MultiPoly subst(const std::map<int, MultiPoly>& bind) const {
        MultiPoly out;
        for (const auto& [m, c] : terms_) {
            MultiPoly t(c);
            for (int k = 0; k < vars::kCount; ++k) {
                if (!m.e[k]) continue;
                auto it = bind.find(k);
                if (it == bind.end())
                    t *= MultiPoly::var(k, m.e[k]);
                else
                    t *= it->second.pow(m.e[k]);
            }
            out += t;
        }
        return out;
    }
    MultiPoly subst_var(int var, const MultiPoly& p) const { return subst({{var, p}}); }
    MultiPoly subst_const(int var, const C& c) const { return subst({{var, MultiPoly(c)}}); }

    // Full evaluation: every variable present must be bound.
    C eval(const std::map<int, C>& bind) const {
        C out(0);
        for (const auto& [m, c] : terms_) {
            C t = c;
            for (int k = 0; k < vars::kCount; ++k) {
                if (!m.e[k]) continue;
                auto it = bind.find(k);
                if (it == bind.end()) throw std::domain_error("eval: unbound variable");
                C b = it->second;
                for (int j = 0; j < m.e[k]; ++j) t = t * b;
            }
            out = out + t;
        }
        return out;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            if (!m.e[var]) continue;
            Monomial n = m;
            n.e[var] -= 1;
            r.add_term(n, c * C(m.e[var]));
        }
        return r;
    }

    // Antiderivative in var (constant of integration 0); needs a field.
    MultiPoly antiderivative(int var) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            Monomial n = m;
            n.e[var] += 1;
            r.add_term(n, c / C(n.e[var]));
        }
        return r;
    }

    template <class D, class Fn>
    MultiPoly<D> map_coeffs(Fn fn) const {
        MultiPoly<D> r;
        for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
        return r;
    }

    // Dense coefficient vector in a single variable; error if others appear.
    std::vector<C> to_univariate(int var) const {
        std::vector<C> out(degree_in(var) + 1, C(0));
        for (const auto& [m, c] : terms_) {
            for (int k = 0; k < vars::kCount; ++k)
                if (k != var && m.e[k]) throw std::domain_error("to_univariate: extra variable");
            out[m.e[var]] = c;
        }
        if (is_zero()) out.assign(1, C(0));
        return out;
    }

    void add_term(const Monomial& m, const C& c) {
        if (c == C(0)) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    // Leading-term-first rendering; CoeffStr turns a coefficient into a
    // grammar-compatible string.
    std::string str(const std::function<std::string(const C&)>& coeff_str) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string cs = coeff_str(it->second);
            bool composite = cs.find(' ') != std::string::npos;
            bool neg = !composite && !cs.empty() && cs[0] == '-';
            std::string body = composite ? "(" + cs + ")" : (neg ? cs.substr(1) : cs);
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string mono;
            for (int k = 0; k < vars::kCount; ++k) {
                if (!it->first.e[k]) continue;
                if (!mono.empty()) mono += "*";
                mono += vars::name(k);
                if (it->first.e[k] > 1) mono += "^" + std::to_string(it->first.e[k]);
            }
            if (mono.empty())
                out += body;
            else if (body == "1")
                out += mono;
            else
                out += body + "*" + mono;
        }
        return out;
    }

  private:
    TermMap terms_;
};

}  // namespace fano212

#endif
