#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gci {

// Coefficient field: Q when prime == 0, otherwise F_p for an odd prime p < 2^31.
struct Field {
    std::uint32_t prime = 0;

    bool is_rational() const { return prime == 0; }
    bool operator==(const Field&) const = default;

    static Field rationals() { return {}; }
    static Field mod(std::uint32_t p);
};

bool is_odd_prime(std::uint64_t n);

class Coefficient {
public:
    Coefficient() = default;  // rational zero
    explicit Coefficient(long v) : q_(v) {}
    explicit Coefficient(mpq_class v);

    static Coefficient zero(Field f);
    static Coefficient one(Field f);
    static Coefficient from_integer(const mpz_class& v, Field f);
    // Residue taken mod f.prime; for Q this is just the rational number.
    static Coefficient from_rational(const mpq_class& v, Field f);

    Field field() const { return {prime_}; }
    bool is_zero() const;
    bool is_one() const;

    // Valid only over Q.
    const mpq_class& rational() const;
    // Valid only over F_p; value in [0, p).
    std::uint32_t residue() const;

    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient operator/(const Coefficient& o) const;
    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
    Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

    bool operator==(const Coefficient& o) const;

    // Map a rational into F_p; throws PreconditionError if p divides the denominator.
    Coefficient reduce_mod(std::uint32_t p) const;

    // "3", "-3/2"; residues print as integers in [0, p).
    std::string to_string() const;
    // True when the printed form starts with '-'.
    bool is_negative_printed() const;

private:
    std::uint32_t prime_ = 0;
    mpq_class q_;
    std::uint32_t r_ = 0;

    void check_same_field(const Coefficient& o) const;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

}  // namespace gci
