#ifndef LEXIDEAL_PRIME_FIELD_HPP
#define LEXIDEAL_PRIME_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <ostream>
#include <string>

#include "error.hpp"

namespace lexideal {

// Deterministic Miller-Rabin for 64-bit inputs (the listed bases are a
// proven witness set below 2^64).
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1)
                r = mulmod(r, a, m);
            a = mulmod(a, a, m);
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
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

// Prime-field scalar with a runtime modulus carried per value. Mixing values
// from different moduli throws; a default-constructed Fp is an inert
// placeholder (modulus 0) that only containers may hold.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t p) : p_(p) {
        check_modulus(p);
        v_ = value % p;
    }

    // Moduli are capped below 2^63 so sums and the signed Euclid never overflow.
    static void check_modulus(std::uint64_t p) {
        if (p < 2)
            throw ValidationError("prime-field modulus must be at least 2");
        if (p >= (1ull << 63))
            throw ValidationError("prime-field modulus must be below 2^63");
    }

    // Accepts optionally signed integers of any size (reduced mod p) and
    // fractions "a/b" meaning a * b^-1.
    static Fp parse(const std::string& text, std::uint64_t p) {
        check_modulus(p);
        std::string s = trim(text);
        if (s.empty())
            throw ParseError("empty scalar");
        std::size_t slash = s.find('/');
        if (slash != std::string::npos && s.find('/', slash + 1) != std::string::npos)
            throw ParseError("malformed scalar '" + text + "'");
        if (slash == std::string::npos)
            return Fp(reduce_str(s, p, text), p);
        Fp num(reduce_str(s.substr(0, slash), p, text), p);
        Fp den(reduce_str(s.substr(slash + 1), p, text), p);
        return num / den;
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    Fp zero() const { require_init(); return Fp(0, p_); }
    Fp one() const { require_init(); return Fp(1, p_); }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const {
        require_init();
        return Fp(v_ == 0 ? 0 : p_ - v_, p_);
    }
    Fp& operator+=(const Fp& o) {
        match(o);
        v_ += o.v_;
        if (v_ >= p_)
            v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        match(o);
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        match(o);
        v_ = mulmod(v_, o.v_, p_);
        return *this;
    }
    Fp& operator/=(const Fp& o) {
        match(o);
        if (o.v_ == 0)
            throw ValidationError("division by zero");
        v_ = mulmod(v_, inverse(o.v_, p_), p_);
        return *this;
    }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    friend bool operator==(const Fp& a, const Fp& b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    bool negative() const { return false; } // canonical representative 0..p-1

    std::string str() const { return std::to_string(v_); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) {
        return os << x.str();
    }

private:
    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a) * b) % m);
    }

    // Extended Euclid; `a` must be a unit mod m.
    static std::uint64_t inverse(std::uint64_t a, std::uint64_t m) {
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt; nt = tmp;
            tmp = r - q * nr;
            r = nr; nr = tmp;
        }
        if (r != 1)
            throw ValidationError("non-invertible element (modulus not prime?)");
        if (t < 0)
            t += static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(t);
    }

    static std::string trim(const std::string& s) {
        std::size_t b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos)
            return "";
        std::size_t e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    }

    static std::uint64_t reduce_str(const std::string& s, std::uint64_t p,
                                    const std::string& whole) {
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
        }
        if (i == s.size())
            throw ParseError("malformed scalar '" + whole + "'");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw ParseError("malformed scalar '" + whole + "'");
        boost::multiprecision::cpp_int big(s.substr(i));
        std::uint64_t r = static_cast<std::uint64_t>(big % p);
        if (neg && r != 0)
            r = p - r;
        return r;
    }

    void require_init() const {
        if (p_ == 0)
            throw InternalError("use of uninitialized prime-field value");
    }
    void match(const Fp& o) const {
        require_init();
        if (p_ != o.p_)
            throw ValidationError("prime-field modulus mismatch");
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

} // namespace lexideal

#endif // LEXIDEAL_PRIME_FIELD_HPP
