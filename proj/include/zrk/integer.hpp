#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace zrk {

// Expression templates are disabled so the type behaves as a plain value
// inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

}  // namespace zrk

// Eigen expressions declare a void const_iterator, which the byte-container
// probe behind cpp_int's converting constructor cannot digest.
namespace boost::multiprecision::detail {

template <typename Derived>
    requires requires { typename Derived::StorageKind; }
struct is_byte_container<Derived> : boost::false_type {};

}  // namespace boost::multiprecision::detail

namespace Eigen {

template <>
struct NumTraits<zrk::Integer> : GenericNumTraits<zrk::Integer> {
    using Real = zrk::Integer;
    using NonInteger = zrk::Integer;
    using Nested = zrk::Integer;
    using Literal = zrk::Integer;

    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
