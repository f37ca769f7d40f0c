#include "fano212/cyclotomic.hpp"

#include <vector>

#include "fano212/linalg.hpp"

namespace fano212 {

namespace {

// Reduce sum of c[k]*zeta^k, 0 <= k <= 14, modulo zeta^8 = zeta^4 - 1.
void reduce_high(std::array<Rat, 15>& acc, std::array<Rat, 8>& out) {
    for (int k = 14; k >= 8; --k) {
        if (acc[k].is_zero()) continue;
        acc[k - 4] += acc[k];
        acc[k - 8] -= acc[k];
        acc[k] = Rat(0);
    }
    for (int k = 0; k < 8; ++k) out[k] = acc[k];
}

}  // namespace

Cyclo Cyclo::zeta_pow(long k) {
    k %= 24;
    if (k < 0) k += 24;
    Cyclo r;
    bool neg = false;
    if (k >= 12) {
        k -= 12;  // zeta^12 = -1
        neg = true;
    }
    std::array<Rat, 15> acc;
    acc.fill(Rat(0));
    acc[k] = Rat(neg ? -1 : 1);
    std::array<Rat, 8> red;
    reduce_high(acc, red);
    for (int j = 0; j < kDeg; ++j) r.c_[j] = red[j];
    return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    std::array<Rat, 15> acc;
    acc.fill(Rat(0));
    for (int a = 0; a < kDeg; ++a) {
        if (c_[a].is_zero()) continue;
        for (int b = 0; b < kDeg; ++b) {
            if (o.c_[b].is_zero()) continue;
            acc[a + b] += c_[a] * o.c_[b];
        }
    }
    reduce_high(acc, c_);
    return *this;
}

Cyclo Cyclo::inv() const {
    if (is_zero()) throw std::domain_error("Cyclo: division by zero");
    if (is_rational()) return Cyclo(c_[0].inv());
    // Solve M x = e0 where M is multiplication by *this in the power basis.
    Mat<Rat> m(kDeg, std::vector<Rat>(kDeg, Rat(0)));
    for (int j = 0; j < kDeg; ++j) {
        Cyclo col = *this * zeta_pow(j);
        for (int i = 0; i < kDeg; ++i) m[i][j] = col.c_[i];
    }
    std::vector<Rat> e0(kDeg, Rat(0));
    e0[0] = Rat(1);
    auto x = solve(m, e0);
    if (!x) throw std::domain_error("Cyclo: inverse failed");  // cannot happen in a field
    Cyclo r;
    for (int i = 0; i < kDeg; ++i) r.c_[i] = (*x)[i];
    return r;
}

Cyclo Cyclo::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    Cyclo r(1), b(*this);
    for (; k; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    return r;
}

Cyclo Cyclo::conj() const {
    Cyclo r;
    for (int k = 0; k < kDeg; ++k) {
        if (c_[k].is_zero()) continue;
        Cyclo t = zeta_pow(-k);
        for (int j = 0; j < kDeg; ++j) r.c_[j] += c_[k] * t.c_[j];
    }
    return r;
}

namespace {

struct RadicalBasis {
    // Columns: power-basis coordinates of i^a * sqrt2^b * sqrt3^c, ordered
    // 1, i, r2, i*r2, r3, i*r3, r2*r3, i*r2*r3. Inverse converts power-basis
    // coordinates to this basis for printing.
    Mat<Rat> from_radical;
    Mat<Rat> to_radical;
    RadicalBasis() {
        std::vector<Cyclo> b;
        Cyclo one(1);
        for (const Cyclo& t : {one, Cyclo::sqrt3()})
            for (const Cyclo& s : {one, Cyclo::sqrt2()})
                for (const Cyclo& u : {one, Cyclo::i()}) b.push_back(u * s * t);
        from_radical.assign(Cyclo::kDeg, std::vector<Rat>(Cyclo::kDeg, Rat(0)));
        for (int j = 0; j < Cyclo::kDeg; ++j)
            for (int i = 0; i < Cyclo::kDeg; ++i) from_radical[i][j] = b[j].coeff(i);
        to_radical = mat_invert(from_radical);
    }
};

const RadicalBasis& radical_basis() {
    static const RadicalBasis rb;
    return rb;
}

const char* kRadicalName[8] = {"", "i", "r2", "i*r2", "r3", "i*r3", "r2*r3", "i*r2*r3"};

}  // namespace

std::string Cyclo::str() const {
    const auto& rb = radical_basis();
    std::array<Rat, 8> rc;
    for (int i = 0; i < kDeg; ++i) {
        Rat s(0);
        for (int j = 0; j < kDeg; ++j) s += rb.to_radical[i][j] * c_[j];
        rc[i] = s;
    }
    std::string out;
    for (int i = 0; i < kDeg; ++i) {
        if (rc[i].is_zero()) continue;
        Rat a = rc[i];
        if (out.empty()) {
            if (a.sign() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        bool unit_coeff = (a == Rat(1)) && i != 0;
        if (!unit_coeff) out += a.str();
        if (i != 0) {
            if (!unit_coeff) out += "*";
            out += kRadicalName[i];
        }
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace fano212
