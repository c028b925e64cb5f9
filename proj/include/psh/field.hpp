#pragma once

#include "psh/rational.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace psh {

struct FieldMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// Seeded generator used everywhere randomness is needed.  Never global.
using Rng = std::mt19937_64;

class QField {
public:
    using Elem = Rational;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem from_rational(const Rational& q) const { return q; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    // a -= f*b
    void axpy_neg(Elem& a, const Elem& f, const Elem& b) const { a -= f * b; }
    // small integers keep rational eliminations cheap
    Elem random(Rng& rng) const { return Elem(static_cast<long>(rng() % 19) - 9); }
    std::string str(const Elem& a) const { return to_str(a); }
    std::string name() const { return "Q"; }
    void check_same(const QField&) const {}
    bool operator==(const QField&) const { return true; }
};

bool is_probable_prime(std::uint64_t n);

class PrimeField {
public:
    using Elem = std::uint64_t;

    static constexpr std::uint64_t default_prime = 2147483647ULL;  // 2^31 - 1

    explicit PrimeField(std::uint64_t p = default_prime) : p_(p) {
        if (p < 2 || p >= (1ULL << 31) + (1ULL << 30) || !is_probable_prime(p))
            throw std::invalid_argument("prime field needs a prime below 3*2^30, got " + std::to_string(p));
    }

    std::uint64_t prime() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const {
        long r = v % static_cast<long>(p_);
        return static_cast<Elem>(r < 0 ? r + static_cast<long>(p_) : r);
    }
    Elem from_integer(const Integer& z) const {
        Integer r;
        Integer pz(static_cast<unsigned long>(p_));
        mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
        return r.get_ui();
    }
    Elem from_rational(const Rational& q) const {
        Elem d = from_integer(q.get_den());
        if (d == 0) throw std::domain_error("denominator divisible by p: " + to_str(q));
        return mul(from_integer(q.get_num()), inv(d));
    }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return pow(a, p_ - 2);
    }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    void axpy_neg(Elem& a, Elem f, Elem b) const { a = (a + (p_ - f) * b) % p_; }
    Elem random(Rng& rng) const { return rng() % p_; }
    std::string str(Elem a) const { return std::to_string(a); }
    std::string name() const { return "F_" + std::to_string(p_); }
    void check_same(const PrimeField& o) const {
        if (o.p_ != p_) throw FieldMismatch("mixing F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
    }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

inline bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

}  // namespace psh
