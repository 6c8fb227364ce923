#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fmr {

using Int = std::int64_t;

struct MixedRings : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Commutative coefficient ring: the integers, or Z/mZ with canonical
/// residues in [0, m). Equality of elements is plain value equality.
class BaseRing {
public:
    enum class Kind { Integers, Modular };

    static BaseRing integers() { return BaseRing(Kind::Integers, 0); }
    static BaseRing modular(Int m);

    Kind kind() const { return kind_; }
    bool is_modular() const { return kind_ == Kind::Modular; }
    Int modulus() const { return m_; }

    /// Canonical representative of v.
    Int norm(Int v) const;

    Int add(Int a, Int b) const { return norm(a + b); }
    Int sub(Int a, Int b) const { return norm(a - b); }
    Int mul(Int a, Int b) const { return norm(a * b); }
    Int neg(Int a) const { return norm(-a); }
    Int pow(Int a, Int e) const;

    bool is_unit(Int v) const;
    bool is_nilpotent(Int v) const;

    bool operator==(const BaseRing&) const = default;

    std::string describe() const;

private:
    BaseRing(Kind k, Int m) : kind_(k), m_(m) {}

    Kind kind_;
    Int m_;  // 0 when Kind::Integers
};

/// Element of a BaseRing. Cross-ring operations throw MixedRings.
class RingElement {
public:
    RingElement(const BaseRing& ring, Int value)
        : ring_(ring), value_(ring.norm(value)) {}

    Int value() const { return value_; }
    const BaseRing& ring() const { return ring_; }

    RingElement operator+(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const { return RingElement(ring_, ring_.neg(value_)); }
    bool operator==(const RingElement& o) const;

    bool is_unit() const { return ring_.is_unit(value_); }
    bool is_nilpotent() const { return ring_.is_nilpotent(value_); }

private:
    BaseRing ring_;
    Int value_;
};

/// Element set of the nilradical of R: the multiples of rad(m) for Z/mZ,
/// {0} for the integers.
std::vector<Int> nilradical(const BaseRing& ring);

/// True iff R/P(R) has exactly two idempotents. For Z/mZ this is
/// equivalent to m being a prime power; for the integers, always true.
bool indecomposable_mod_radical(const BaseRing& ring);

/// Product of the distinct prime divisors of m.
Int squarefree_radical(Int m);

}  // namespace fmr
