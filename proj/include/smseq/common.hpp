#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace smseq {

// Universal value type: arbitrary-precision nonnegative integer.
// (cpp_int is signed; library functions only ever produce values >= 0.)
using Natural = boost::multiprecision::cpp_int;

// Precondition violations (bad argument values, malformed parameters).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request is well-formed but exceeds a configured workload bound
// (factorization size, digit-permutation width, rendering size, ...).
struct WorkloadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t to_u64(const Natural& n, const char* what = "value") {
    if (n < 0 || n > Natural(~std::uint64_t{0}))
        throw DomainError(std::string(what) + " out of 64-bit range");
    return static_cast<std::uint64_t>(n);
}

} // namespace smseq
