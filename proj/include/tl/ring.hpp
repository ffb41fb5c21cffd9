#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tl {

// Exact scalar used throughout. Integers and modular residues are stored with
// denominator 1; mpq keeps values canonical (reduced, positive denominator).
using Scalar = mpq_class;

enum class RingKind { integers, rationals, modular };

/// A coefficient ring Z, Q or Z/m together with the algebra parameter a,
/// stored in canonical form for that ring.
class RingSpec {
  public:
    static RingSpec integers(const Scalar& a);
    static RingSpec rationals(const Scalar& a);
    static RingSpec modular(unsigned long m, const Scalar& a);

    // Parses "Z", "Q" or "Fp:<m>" plus a parameter literal like "2" or "-1/3".
    static RingSpec parse(const std::string& ring, const std::string& parameter);

    RingKind kind() const { return kind_; }
    unsigned long modulus() const { return modulus_; }
    const Scalar& parameter() const { return parameter_; }

    bool is_field() const;
    bool modulus_is_prime() const { return modulus_prime_; }

    // Canonical form of a value in this ring. For Z/m the residue lands in
    // [0, m) with denominator 1 (denominators must be invertible mod m); for Z
    // a nontrivial denominator is rejected.
    Scalar normalize(const Scalar& x) const;

    Scalar add(const Scalar& x, const Scalar& y) const { return normalize(x + y); }
    Scalar sub(const Scalar& x, const Scalar& y) const { return normalize(x - y); }
    Scalar mul(const Scalar& x, const Scalar& y) const { return normalize(x * y); }
    Scalar neg(const Scalar& x) const { return normalize(-x); }

    bool is_zero(const Scalar& x) const { return normalize(x) == 0; }
    bool is_unit(const Scalar& x) const;

    // a^k, canonical in the ring; k >= 0.
    Scalar parameter_power(unsigned k) const;

    std::string description() const;  // "Z", "Q", "Fp:<m>"

    bool operator==(const RingSpec& other) const;
    bool operator!=(const RingSpec& other) const { return !(*this == other); }

  private:
    RingSpec(RingKind kind, unsigned long modulus, const Scalar& a);

    RingKind kind_;
    unsigned long modulus_ = 0;  // 0 unless modular
    bool modulus_prime_ = false;
    Scalar parameter_;
};

Scalar parse_scalar(const std::string& text);
std::string scalar_to_string(const Scalar& x);

}  // namespace tl
