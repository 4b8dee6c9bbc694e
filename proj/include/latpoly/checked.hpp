#pragma once

#include <concepts>
#include <cstdint>
#include <limits>

#include "latpoly/errors.hpp"

namespace latpoly {

using Int = std::int64_t;
// Products of two Int values always fit; sums of two products may not.
using Wide = __int128;

namespace checked {

template <typename T>
concept Integer = std::integral<T> || std::same_as<T, __int128>;

template <Integer T>
constexpr T add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

template <Integer T>
constexpr T sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

template <Integer T>
constexpr T mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

template <Integer T>
constexpr T neg(T a) {
  return sub(T{0}, a);
}

// Narrow a wide intermediate back to Int.
constexpr Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw OverflowError("result does not fit in 64 bits");
  return static_cast<Int>(v);
}

constexpr Wide widen(Int v) { return static_cast<Wide>(v); }

template <Integer T>
constexpr int sign(T v) {
  return (v > 0) - (v < 0);
}

// Floor and ceiling division; d != 0.
template <Integer T>
constexpr T floor_div(T n, T d) {
  T q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

template <Integer T>
constexpr T ceil_div(T n, T d) {
  T q = n / d;
  if ((n % d != 0) && ((n < 0) == (d < 0))) ++q;
  return q;
}

template <Integer T>
constexpr T abs(T v) {
  return v < 0 ? neg(v) : v;
}

template <Integer T>
constexpr T gcd(T a, T b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    T t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace checked
}  // namespace latpoly
