#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qhh {

// Exact coefficient arithmetic. A field object owns the arithmetic; elements
// are plain values (uint32_t residues for GF(p), mpq_class for QQ) so that
// containers stay compact and copyable.

class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 16) || !is_prime(p))
            throw std::invalid_argument("PrimeField: modulus must be a prime < 2^16, got " + std::to_string(p));
    }

    std::uint32_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }

    Elem from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }
    Elem from_fraction(long long num, long long den) const {
        Elem d = from_int(den);
        if (d == 0) throw std::domain_error("PrimeField: denominator vanishes mod p");
        return mul(from_int(num), inv(d));
    }

    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid on (a, p)
        long long t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    unsigned characteristic() const { return p_; }
    std::string description() const { return "GF(" + std::to_string(p_) + ")"; }
    std::string str(Elem a) const { return std::to_string(a); }

private:
    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
    std::uint32_t p_;
};

class RationalField {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }

    Elem from_int(long long n) const { return Elem(static_cast<long>(n)); }
    Elem from_fraction(long long num, long long den) const {
        if (den == 0) throw std::domain_error("RationalField: zero denominator");
        Elem e(static_cast<long>(num), static_cast<long>(den));
        e.canonicalize();
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("RationalField: inverse of zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    unsigned characteristic() const { return 0; }
    std::string description() const { return "QQ"; }
    std::string str(const Elem& a) const { return a.get_str(); }

    // combined bit size of numerator and denominator, for blow-up guards
    static std::size_t bit_size(const Elem& a) {
        return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
    }

private:
    const Elem& inv_guard(const Elem& b) const {
        if (b == 0) throw std::domain_error("RationalField: division by zero");
        return b;
    }
};

} // namespace qhh
