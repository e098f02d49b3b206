#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "error.hpp"
#include "rational.hpp"

namespace wsa {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Element of GF(p). The modulus is per thread and installed by a Zp::Context.
class Zp {
public:
    class Context {
    public:
        explicit Context(std::uint32_t p) : saved_(modulus_ref()) {
            require(p < (1u << 31) && is_prime(p), ErrorCode::InvalidArgument,
                    "GF(p) needs a prime below 2^31, got " + std::to_string(p));
            modulus_ref() = p;
        }
        Context(const Context&) = delete;
        Context& operator=(const Context&) = delete;
        ~Context() { modulus_ref() = saved_; }

    private:
        std::uint32_t saved_;
    };

    static std::uint32_t modulus() {
        std::uint32_t p = modulus_ref();
        require(p != 0, ErrorCode::InvalidArgument, "no GF(p) modulus installed");
        return p;
    }

    // 0 when no context is active on this thread.
    static std::uint32_t installed_modulus() noexcept { return modulus_ref(); }

    Zp() noexcept = default;

    template <std::integral I>
    Zp(I value) { // NOLINT(google-explicit-constructor)
        const std::int64_t p = modulus();
        if constexpr (std::is_signed_v<I>) {
            std::int64_t r = static_cast<std::int64_t>(value % static_cast<I>(p));
            if (r < 0) r += p;
            v_ = static_cast<std::uint32_t>(r);
        } else {
            v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(value) % static_cast<std::uint64_t>(p));
        }
    }

    static Zp from_rational(const Rational& q) {
        const std::uint32_t p = modulus();
        mpz_class num = q.numerator();
        mpz_class den = q.denominator();
        mpz_class pp(static_cast<unsigned long>(p));
        mpz_class dn = den % pp;
        require(dn != 0, ErrorCode::DivisionByZero,
                q.to_string() + " has denominator divisible by " + std::to_string(p));
        mpz_class nn = num % pp;
        if (nn < 0) nn += pp;
        Zp a = raw(static_cast<std::uint32_t>(nn.get_ui()));
        Zp b = raw(static_cast<std::uint32_t>(dn.get_ui()));
        return a / b;
    }

    static Zp parse(std::string_view text) { return from_rational(Rational::parse(text)); }

    std::uint32_t value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    Zp inverse() const {
        require(v_ != 0, ErrorCode::DivisionByZero, "inverse of zero in GF(p)");
        return pow(modulus() - 2);
    }

    Zp pow(std::uint64_t e) const {
        const std::uint64_t p = modulus();
        std::uint64_t base = v_, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return raw(static_cast<std::uint32_t>(acc));
    }

    std::string to_string() const { return std::to_string(v_); }

    Zp operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }

    friend Zp operator+(Zp a, Zp b) {
        std::uint64_t s = static_cast<std::uint64_t>(a.v_) + b.v_;
        const std::uint32_t p = modulus_ref();
        return raw(static_cast<std::uint32_t>(s >= p ? s - p : s));
    }
    friend Zp operator-(Zp a, Zp b) {
        const std::uint32_t p = modulus_ref();
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (p - b.v_));
    }
    friend Zp operator*(Zp a, Zp b) {
        return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % modulus_ref()));
    }
    friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }

    Zp& operator+=(Zp o) { return *this = *this + o; }
    Zp& operator-=(Zp o) { return *this = *this - o; }
    Zp& operator*=(Zp o) { return *this = *this * o; }
    Zp& operator/=(Zp o) { return *this = *this / o; }

    friend bool operator==(Zp a, Zp b) noexcept { return a.v_ == b.v_; }
    friend auto operator<=>(Zp a, Zp b) noexcept { return a.v_ <=> b.v_; }

    friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

private:
    std::uint32_t v_ = 0;

    static Zp raw(std::uint32_t v) {
        Zp z;
        z.v_ = v;
        return z;
    }

    static std::uint32_t& modulus_ref() {
        thread_local std::uint32_t p = 0;
        return p;
    }
};

} // namespace wsa

template <>
struct std::hash<wsa::Zp> {
    std::size_t operator()(wsa::Zp a) const noexcept { return std::hash<std::uint32_t>{}(a.value()); }
};
