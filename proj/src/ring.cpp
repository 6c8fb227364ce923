#include "fmr/ring.hpp"

#include <numeric>

namespace fmr {

BaseRing BaseRing::modular(Int m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    return BaseRing(Kind::Modular, m);
}

Int BaseRing::norm(Int v) const {
    if (kind_ == Kind::Integers) return v;
    Int r = v % m_;
    return r < 0 ? r + m_ : r;
}

Int BaseRing::pow(Int a, Int e) const {
    Int r = norm(1);
    Int b = norm(a);
    for (; e > 0; e >>= 1) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
    }
    return r;
}

bool BaseRing::is_unit(Int v) const {
    if (kind_ == Kind::Integers) return v == 1 || v == -1;
    return std::gcd(norm(v), m_) == 1;
}

bool BaseRing::is_nilpotent(Int v) const {
    if (kind_ == Kind::Integers) return v == 0;
    // x^k = 0 mod m forces x^ceil(log2 m) = 0, so squaring that many
    // times is a complete test.
    Int x = norm(v);
    Int steps = 0;
    for (Int t = 1; t < m_; t <<= 1) ++steps;
    for (Int i = 0; i <= steps; ++i) {
        if (x == 0) return true;
        x = mul(x, x);
    }
    return x == 0;
}

std::string BaseRing::describe() const {
    if (kind_ == Kind::Integers) return "Z";
    return "Z/" + std::to_string(m_);
}

RingElement RingElement::operator+(const RingElement& o) const {
    if (!(ring_ == o.ring_)) throw MixedRings("elements from different base rings");
    return RingElement(ring_, ring_.add(value_, o.value_));
}

RingElement RingElement::operator*(const RingElement& o) const {
    if (!(ring_ == o.ring_)) throw MixedRings("elements from different base rings");
    return RingElement(ring_, ring_.mul(value_, o.value_));
}

bool RingElement::operator==(const RingElement& o) const {
    if (!(ring_ == o.ring_)) throw MixedRings("elements from different base rings");
    return value_ == o.value_;
}

Int squarefree_radical(Int m) {
    Int rad = 1;
    Int x = m;
    for (Int p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            rad *= p;
            while (x % p == 0) x /= p;
        }
    }
    if (x > 1) rad *= x;
    return rad;
}

std::vector<Int> nilradical(const BaseRing& ring) {
    if (!ring.is_modular()) return {0};
    Int rad = squarefree_radical(ring.modulus());
    std::vector<Int> out;
    for (Int v = 0; v < ring.modulus(); v += rad) out.push_back(v);
    return out;
}

bool indecomposable_mod_radical(const BaseRing& ring) {
    if (!ring.is_modular()) return true;
    // R/P(R) = Z/rad(m); it is indecomposable iff rad(m) is prime,
    // i.e. m is a prime power.
    Int m = ring.modulus();
    Int p = 2;
    while (m % p != 0) ++p;
    while (m % p == 0) m /= p;
    return m == 1;
}

}  // namespace fmr
