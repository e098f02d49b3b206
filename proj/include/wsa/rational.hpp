#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace wsa {

// Exact rational number. Values whose numerator and denominator fit in int64
// are kept inline; anything larger spills into a GMP rational and is demoted
// again as soon as it fits.
class Rational {
public:
    Rational() noexcept = default;

    template <std::integral I>
    Rational(I value) { // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<I> && sizeof(I) <= sizeof(std::int64_t)) {
            if (static_cast<std::int64_t>(value) != kMin) {
                n_ = static_cast<std::int64_t>(value);
                return;
            }
        }
        set_from_i128(static_cast<__int128>(value), 1);
    }

    Rational(std::int64_t num, std::int64_t den) {
        require(den != 0, ErrorCode::DivisionByZero, "rational with zero denominator");
        set_from_i128(num, den);
    }

    explicit Rational(const mpq_class& q) { set_from_mpq(mpq_class(q)); }

    Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this == &o) return *this;
        n_ = o.n_;
        d_ = o.d_;
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
        else big_.reset();
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    // Accepts "a", "-a", "a/b".
    static Rational parse(std::string_view text) {
        std::string s(text);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        std::size_t start = 0;
        while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
        s = s.substr(start);
        if (s.empty()) fail(ErrorCode::ParseError, "empty rational literal");
        auto slash = s.find('/');
        auto check_int = [&](const std::string& part) {
            std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
            if (i >= part.size()) fail(ErrorCode::ParseError, "bad rational literal '" + s + "'");
            for (; i < part.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(part[i])))
                    fail(ErrorCode::ParseError, "bad rational literal '" + s + "'");
        };
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        check_int(num);
        check_int(den);
        if (num[0] == '+') num.erase(0, 1);
        if (den[0] == '+') den.erase(0, 1);
        mpz_class zn(num), zd(den);
        require(zd != 0, ErrorCode::DivisionByZero, "rational literal with zero denominator");
        mpq_class q(zn, zd);
        q.canonicalize();
        return Rational(q);
    }

    bool is_small() const noexcept { return !big_; }
    bool is_zero() const noexcept { return !big_ && n_ == 0; }
    bool is_one() const noexcept { return !big_ && n_ == 1 && d_ == 1; }
    int sign() const noexcept {
        if (big_) return sgn(*big_);
        return (n_ > 0) - (n_ < 0);
    }

    mpq_class to_mpq() const {
        if (big_) return *big_;
        mpq_class q;
        mpz_set_si(q.get_num_mpz_t(), n_);
        mpz_set_si(q.get_den_mpz_t(), d_);
        return q;
    }

    mpz_class numerator() const { return to_mpq().get_num(); }
    mpz_class denominator() const { return to_mpq().get_den(); }

    std::string to_string() const {
        if (big_) return big_->get_str();
        if (d_ == 1) return std::to_string(n_);
        return std::to_string(n_) + "/" + std::to_string(d_);
    }

    Rational operator-() const {
        if (!big_) {
            Rational r;
            r.n_ = -n_;
            r.d_ = d_;
            return r;
        }
        return Rational(mpq_class(-*big_));
    }

    Rational inverse() const {
        require(!is_zero(), ErrorCode::DivisionByZero, "inverse of zero");
        if (!big_) {
            Rational r;
            r.n_ = n_ < 0 ? -d_ : d_;
            r.d_ = n_ < 0 ? -n_ : n_;
            return r;
        }
        return Rational(mpq_class(1 / *big_));
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.d_ == 1 && b.d_ == 1) return from_i128(static_cast<__int128>(a.n_) + b.n_, 1);
            __int128 num = static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_;
            __int128 den = static_cast<__int128>(a.d_) * b.d_;
            return from_i128(num, den);
        }
        return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.d_ == 1 && b.d_ == 1) return from_i128(static_cast<__int128>(a.n_) - b.n_, 1);
            __int128 num = static_cast<__int128>(a.n_) * b.d_ - static_cast<__int128>(b.n_) * a.d_;
            __int128 den = static_cast<__int128>(a.d_) * b.d_;
            return from_i128(num, den);
        }
        return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.n_ == 0 || b.n_ == 0) return Rational();
            __int128 num = static_cast<__int128>(a.n_) * b.n_;
            __int128 den = static_cast<__int128>(a.d_) * b.d_;
            if (den == 1) return from_i128(num, 1);
            return from_i128(num, den);
        }
        return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        require(!b.is_zero(), ErrorCode::DivisionByZero, "division by zero");
        if (!a.big_ && !b.big_) {
            __int128 num = static_cast<__int128>(a.n_) * b.d_;
            __int128 den = static_cast<__int128>(a.d_) * b.n_;
            return from_i128(num, den);
        }
        return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        // Canonical storage: a small value never equals a big one.
        if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            __int128 l = static_cast<__int128>(a.n_) * b.d_;
            __int128 r = static_cast<__int128>(b.n_) * a.d_;
            return l <=> r;
        }
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

    std::size_t hash() const noexcept {
        if (!big_) return std::hash<std::int64_t>{}(n_) * 1000003u ^ std::hash<std::int64_t>{}(d_);
        return std::hash<std::string>{}(big_->get_str());
    }

private:
    static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::unique_ptr<mpq_class> big_;

    using u128 = unsigned __int128;

    static u128 gcd128(u128 a, u128 b) {
        if ((a >> 64) == 0 && (b >> 64) == 0)
            return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        while (b != 0) {
            u128 t = a % b;
            a = b;
            b = t;
            if ((a >> 64) == 0 && (b >> 64) == 0)
                return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        }
        return a;
    }

    static mpz_class mpz_from_u128(u128 v) {
        mpz_class z;
        std::uint64_t limbs[2] = {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64)};
        mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
        return z;
    }

    static Rational from_i128(__int128 num, __int128 den) {
        Rational r;
        r.set_from_i128(num, den);
        return r;
    }

    static bool fits(u128 v) { return v <= static_cast<u128>(kMax); }

    void set_from_i128(__int128 num, __int128 den) {
        bool neg = (num < 0) != (den < 0);
        u128 un = num < 0 ? static_cast<u128>(-(num + 1)) + 1 : static_cast<u128>(num);
        u128 ud = den < 0 ? static_cast<u128>(-(den + 1)) + 1 : static_cast<u128>(den);
        if (un == 0) {
            n_ = 0;
            d_ = 1;
            big_.reset();
            return;
        }
        if (ud != 1) {
            u128 g = gcd128(un, ud);
            if (g != 1) {
                un /= g;
                ud /= g;
            }
        }
        if (fits(un) && fits(ud)) {
            n_ = neg ? -static_cast<std::int64_t>(un) : static_cast<std::int64_t>(un);
            d_ = static_cast<std::int64_t>(ud);
            big_.reset();
            return;
        }
        mpq_class q(mpz_from_u128(un), mpz_from_u128(ud));
        if (neg) q = -q;
        n_ = 0;
        d_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }

    void set_from_mpq(mpq_class q) {
        q.canonicalize();
        const mpz_class& num = q.get_num();
        const mpz_class& den = q.get_den();
        if (num.fits_slong_p() && den.fits_slong_p()) {
            long nn = num.get_si();
            long dd = den.get_si();
            if (nn != kMin && dd != kMin) {
                n_ = nn;
                d_ = dd;
                big_.reset();
                return;
            }
        }
        n_ = 0;
        d_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
};

} // namespace wsa

template <>
struct std::hash<wsa::Rational> {
    std::size_t operator()(const wsa::Rational& r) const noexcept { return r.hash(); }
};
