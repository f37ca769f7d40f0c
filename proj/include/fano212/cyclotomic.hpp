#ifndef FANO212_CYCLOTOMIC_HPP
#define FANO212_CYCLOTOMIC_HPP

#include <array>
#include <optional>
#include <string>

#include "fano212/rational.hpp"

namespace fano212 {

// Element of Q(zeta) for zeta a primitive 24th root of unity, stored in the
// power basis 1, zeta, ..., zeta^7 modulo the minimal polynomial
// zeta^8 = zeta^4 - 1.
//
// Fixed embeddings (zeta = exp(i*pi/12) is a consistent model):
//   i     = zeta^6
//   sqrt2 = zeta^3 - zeta^9  (reduced: zeta + zeta^3 - zeta^5)
//   sqrt3 = zeta^2 - zeta^10 (reduced: 2*zeta^2 - zeta^6)
//   omega = zeta^8           (primitive cube root, reduced: zeta^4 - 1)
// All reproduction targets are rational, hence independent of the sign
// choices; the defining identities i^2 = -1, sqrt2^2 = 2, sqrt3^2 = 3 are
// pinned in tests.
class Cyclo {
  public:
    static constexpr int kDeg = 8;

    Cyclo() { c_.fill(Rat(0)); }
    Cyclo(long n) {
        c_.fill(Rat(0));
        c_[0] = Rat(n);
    }
    Cyclo(const Rat& r) {
        c_.fill(Rat(0));
        c_[0] = r;
    }

    static Cyclo zeta_pow(long k);
    static Cyclo zeta() { return zeta_pow(1); }
    static Cyclo i() { return zeta_pow(6); }
    static Cyclo sqrt2() { return zeta_pow(3) - zeta_pow(9); }
    static Cyclo sqrt3() { return zeta_pow(2) - zeta_pow(10); }
    static Cyclo omega() { return zeta_pow(8); }

    const Rat& coeff(int k) const { return c_[k]; }
    Rat& coeff(int k) { return c_[k]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (int k = 1; k < kDeg; ++k)
            if (!c_[k].is_zero()) return false;
        return true;
    }
    // Defined only when is_rational().
    const Rat& rational_part() const { return c_[0]; }
    std::optional<Rat> as_rational() const {
        if (!is_rational()) return std::nullopt;
        return c_[0];
    }

    Cyclo operator-() const {
        Cyclo r;
        for (int k = 0; k < kDeg; ++k) r.c_[k] = -c_[k];
        return r;
    }
    Cyclo& operator+=(const Cyclo& o) {
        for (int k = 0; k < kDeg; ++k) c_[k] += o.c_[k];
        return *this;
    }
    Cyclo& operator-=(const Cyclo& o) {
        for (int k = 0; k < kDeg; ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inv(); }

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
    // Lexicographic on coefficients; a total order for set/map keys only.
    friend bool operator<(const Cyclo& a, const Cyclo& b) {
        for (int k = 0; k < kDeg; ++k) {
            if (a.c_[k] < b.c_[k]) return true;
            if (b.c_[k] < a.c_[k]) return false;
        }
        return false;
    }

    Cyclo inv() const;
    Cyclo pow(long k) const;
    // Complex conjugation zeta -> zeta^-1 (a field automorphism).
    Cyclo conj() const;

    // Canonical rendering over the basis {1,i} x {1,sqrt2} x {1,sqrt3},
    // using the grammar constants "i", "r2", "r3". Parses back exactly.
    std::string str() const;

  private:
    std::array<Rat, kDeg> c_;
};

}  // namespace fano212

#endif
