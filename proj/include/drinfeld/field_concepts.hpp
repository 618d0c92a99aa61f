#ifndef DRINFELD_FIELD_CONCEPTS_HPP
#define DRINFELD_FIELD_CONCEPTS_HPP

#include <concepts>

namespace drinfeld {

/// Arithmetic context for a commutative field. Elements are plain values;
/// all operations go through the context object.
template <class F>
concept Field = requires(const F& f, const typename F::Elem& a, const typename F::Elem& b) {
    typename F::Elem;
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.neg(a) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.equal(a, b) } -> std::convertible_to<bool>;
};

}  // namespace drinfeld

#endif  // DRINFELD_FIELD_CONCEPTS_HPP
