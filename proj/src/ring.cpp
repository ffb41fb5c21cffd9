#include "tl/ring.hpp"

namespace tl {

namespace {

bool is_prime_ulong(unsigned long m) {
    if (m < 2)
        return false;
    for (unsigned long d = 2; d * d <= m; ++d)
        if (m % d == 0)
            return false;
    return true;
}

}  // namespace

RingSpec::RingSpec(RingKind kind, unsigned long modulus, const Scalar& a)
    : kind_(kind), modulus_(modulus) {
    if (kind_ == RingKind::modular) {
        if (modulus_ < 2)
            throw std::invalid_argument("modular ring needs modulus >= 2");
        modulus_prime_ = is_prime_ulong(modulus_);
    }
    parameter_ = normalize(a);
}

RingSpec RingSpec::integers(const Scalar& a) {
    return RingSpec(RingKind::integers, 0, a);
}

RingSpec RingSpec::rationals(const Scalar& a) {
    return RingSpec(RingKind::rationals, 0, a);
}

RingSpec RingSpec::modular(unsigned long m, const Scalar& a) {
    return RingSpec(RingKind::modular, m, a);
}

RingSpec RingSpec::parse(const std::string& ring, const std::string& parameter) {
    Scalar a = parse_scalar(parameter);
    if (ring == "Z")
        return integers(a);
    if (ring == "Q")
        return rationals(a);
    if (ring.rfind("Fp:", 0) == 0) {
        const std::string mod = ring.substr(3);
        if (mod.empty() || mod.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad modulus in ring spec '" + ring + "'");
        unsigned long m = std::stoul(mod);
        if (!is_prime_ulong(m))
            throw std::invalid_argument("Fp modulus must be prime, got " + mod);
        return modular(m, a);
    }
    throw std::invalid_argument("unknown ring '" + ring + "' (expected Z, Q or Fp:<p>)");
}

bool RingSpec::is_field() const {
    return kind_ == RingKind::rationals ||
           (kind_ == RingKind::modular && modulus_prime_);
}

Scalar RingSpec::normalize(const Scalar& x) const {
    switch (kind_) {
        case RingKind::rationals:
            return x;
        case RingKind::integers:
            if (x.get_den() != 1)
                throw std::invalid_argument("non-integer value " + scalar_to_string(x) +
                                            " in ring Z");
            return x;
        case RingKind::modular: {
            mpz_class m(modulus_);
            mpz_class num = x.get_num() % m;
            if (num < 0)
                num += m;
            mpz_class den = x.get_den() % m;
            if (den != 1) {
                mpz_class inv;
                if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
                    throw std::invalid_argument("denominator of " + scalar_to_string(x) +
                                                " not invertible mod " + m.get_str());
                num = (num * inv) % m;
            }
            return Scalar(num);
        }
    }
    throw std::logic_error("unreachable ring kind");
}

bool RingSpec::is_unit(const Scalar& x) const {
    Scalar v = normalize(x);
    switch (kind_) {
        case RingKind::rationals:
            return v != 0;
        case RingKind::integers:
            return v == 1 || v == -1;
        case RingKind::modular: {
            mpz_class g;
            mpz_class m(modulus_);
            mpz_gcd(g.get_mpz_t(), v.get_num().get_mpz_t(), m.get_mpz_t());
            return g == 1;
        }
    }
    return false;
}

Scalar RingSpec::parameter_power(unsigned k) const {
    Scalar result(1);
    for (unsigned i = 0; i < k; ++i)
        result = mul(result, parameter_);
    return result;
}

std::string RingSpec::description() const {
    switch (kind_) {
        case RingKind::integers:
            return "Z";
        case RingKind::rationals:
            return "Q";
        case RingKind::modular:
            return "Fp:" + std::to_string(modulus_);
    }
    return "?";
}

bool RingSpec::operator==(const RingSpec& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_ &&
           parameter_ == other.parameter_;
}

Scalar parse_scalar(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty number literal");
    try {
        Scalar x(text);
        x.canonicalize();
        return x;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad number literal '" + text + "'");
    }
}

std::string scalar_to_string(const Scalar& x) {
    return x.get_str();
}

}  // namespace tl
