#ifndef CFIRE_ERRORS_HPP
#define CFIRE_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cfire {

/// Caller passed something outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 64-bit checked arithmetic overflowed; the weight escaped the supported range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Internal consistency check failed (corrupted tables or a broken invariant).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An exhaustive search hit its node budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::size_t explored)
        : std::runtime_error("node budget exceeded after " + std::to_string(explored) +
                             " explored nodes"),
          explored_(explored) {}

    std::size_t explored() const noexcept { return explored_; }

private:
    std::size_t explored_;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
    return r;
}

} // namespace checked

} // namespace cfire

#endif // CFIRE_ERRORS_HPP
