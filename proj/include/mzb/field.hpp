#pragma once

#include <concepts>
#include <cstdint>

namespace mzb {

/// Static field interface: the elimination engine is written against this
/// contract, with GF(2) as the mandatory instantiation.
template <class F>
concept FieldContract = requires(typename F::Elem a, typename F::Elem b) {
    { F::zero() } -> std::convertible_to<typename F::Elem>;
    { F::one() } -> std::convertible_to<typename F::Elem>;
    { F::add(a, b) } -> std::convertible_to<typename F::Elem>;
    { F::negate(a) } -> std::convertible_to<typename F::Elem>;
    { F::multiply(a, b) } -> std::convertible_to<typename F::Elem>;
    { F::invert(a) } -> std::convertible_to<typename F::Elem>;
    { F::equal(a, b) } -> std::convertible_to<bool>;
};

struct Gf2 {
    using Elem = uint8_t;
    static Elem zero() { return 0; }
    static Elem one() { return 1; }
    static Elem add(Elem a, Elem b) { return a ^ b; }
    static Elem negate(Elem a) { return a; }
    static Elem multiply(Elem a, Elem b) { return a & b; }
    static Elem invert(Elem a) { return a; }  // nonzero only
    static bool equal(Elem a, Elem b) { return a == b; }
};

static_assert(FieldContract<Gf2>);

}  // namespace mzb
