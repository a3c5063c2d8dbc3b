#include "gci/coefficient.hpp"

#include "gci/errors.hpp"

namespace gci {

bool is_odd_prime(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (std::uint64_t k = 3; k * k <= n; k += 2)
        if (n % k == 0) return false;
    return true;
}

Field Field::mod(std::uint32_t p) {
    if (p >= (1u << 31) || !is_odd_prime(p))
        throw ValidationError("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
    return {p};
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is prime.
    std::uint64_t base = a % p, result = 1;
    if (base == 0) throw PreconditionError("division by zero in F_" + std::to_string(p));
    for (std::uint64_t e = p - 2; e; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

Coefficient::Coefficient(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }

Coefficient Coefficient::zero(Field f) {
    Coefficient c;
    c.prime_ = f.prime;
    return c;
}

Coefficient Coefficient::one(Field f) {
    Coefficient c = zero(f);
    if (f.is_rational())
        c.q_ = 1;
    else
        c.r_ = 1;
    return c;
}

Coefficient Coefficient::from_integer(const mpz_class& v, Field f) {
    Coefficient c = zero(f);
    if (f.is_rational()) {
        c.q_ = v;
    } else {
        mpz_class r = v % f.prime;
        if (r < 0) r += f.prime;
        c.r_ = static_cast<std::uint32_t>(r.get_ui());
    }
    return c;
}

Coefficient Coefficient::from_rational(const mpq_class& v, Field f) {
    if (f.is_rational()) return Coefficient(v);
    return Coefficient(v).reduce_mod(f.prime);
}

bool Coefficient::is_zero() const { return prime_ ? r_ == 0 : q_ == 0; }
bool Coefficient::is_one() const { return prime_ ? r_ == 1 : q_ == 1; }

const mpq_class& Coefficient::rational() const {
    if (prime_) throw ValidationError("rational value requested from an F_p coefficient");
    return q_;
}

std::uint32_t Coefficient::residue() const {
    if (!prime_) throw ValidationError("residue requested from a rational coefficient");
    return r_;
}

void Coefficient::check_same_field(const Coefficient& o) const {
    if (prime_ != o.prime_) throw ValidationError("arithmetic between coefficients of different fields");
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
    check_same_field(o);
    Coefficient c = zero(field());
    if (prime_)
        c.r_ = static_cast<std::uint32_t>((std::uint64_t(r_) + o.r_) % prime_);
    else
        c.q_ = q_ + o.q_;
    return c;
}

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

Coefficient Coefficient::operator*(const Coefficient& o) const {
    check_same_field(o);
    Coefficient c = zero(field());
    if (prime_)
        c.r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * o.r_ % prime_);
    else
        c.q_ = q_ * o.q_;
    return c;
}

Coefficient Coefficient::operator/(const Coefficient& o) const {
    check_same_field(o);
    if (o.is_zero()) throw PreconditionError("division by zero coefficient");
    Coefficient c = zero(field());
    if (prime_)
        c.r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * mod_inverse(o.r_, prime_) % prime_);
    else
        c.q_ = q_ / o.q_;
    return c;
}

Coefficient Coefficient::operator-() const {
    Coefficient c = zero(field());
    if (prime_)
        c.r_ = r_ ? prime_ - r_ : 0;
    else
        c.q_ = -q_;
    return c;
}

bool Coefficient::operator==(const Coefficient& o) const {
    return prime_ == o.prime_ && (prime_ ? r_ == o.r_ : q_ == o.q_);
}

Coefficient Coefficient::reduce_mod(std::uint32_t p) const {
    if (prime_) {
        if (prime_ == p) return *this;
        throw ValidationError("cannot reduce an F_" + std::to_string(prime_) + " coefficient mod " +
                              std::to_string(p));
    }
    Field f = Field::mod(p);
    mpz_class den = q_.get_den();
    if (den % p == 0)
        throw PreconditionError("denominator of " + q_.get_str() + " is divisible by " + std::to_string(p));
    Coefficient num = from_integer(q_.get_num(), f);
    Coefficient d = from_integer(den, f);
    return num / d;
}

std::string Coefficient::to_string() const {
    if (prime_) return std::to_string(r_);
    return q_.get_str();
}

bool Coefficient::is_negative_printed() const { return !prime_ && q_ < 0; }

}  // namespace gci
