#pragma once

#include <concepts>
#include <string>

#include "prime_field.hpp"
#include "rational.hpp"

namespace wsa {

template <class F>
concept ExactField = std::regular<F> && requires(F a, F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::convertible_to<F>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

template <class F>
struct field_traits;

template <>
struct field_traits<Rational> {
    static constexpr bool infinite = true;
    static std::string name() { return "Q"; }
    static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct field_traits<Zp> {
    static constexpr bool infinite = false;
    static std::string name() { return "GF(" + std::to_string(Zp::modulus()) + ")"; }
    static Zp from_rational(const Rational& q) { return Zp::from_rational(q); }
};

static_assert(ExactField<Rational>);
static_assert(ExactField<Zp>);

} // namespace wsa
