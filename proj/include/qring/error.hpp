#ifndef QRING_ERROR_HPP_
#define QRING_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qring {

  // Categories line up with the CLI exit codes (2, 3, 4).
  enum class ErrorKind {
    invalid_input,
    cap_exceeded,
    internal,
  };

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  class InvalidInput : public Error {
   public:
    explicit InvalidInput(std::string const& what)
        : Error(ErrorKind::invalid_input, what) {}
  };

  class CapExceeded : public Error {
   public:
    explicit CapExceeded(std::string const& what)
        : Error(ErrorKind::cap_exceeded, what) {}
  };

  class InternalError : public Error {
   public:
    explicit InternalError(std::string const& what)
        : Error(ErrorKind::internal, what) {}
  };

  // Path counts and Hom counts grow exponentially; all integer arithmetic on
  // them goes through these helpers.
  inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw CapExceeded("64-bit integer overflow in addition");
    }
    return r;
  }

  inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
      throw CapExceeded("64-bit integer overflow in subtraction");
    }
    return r;
  }

  inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw CapExceeded("64-bit integer overflow in multiplication");
    }
    return r;
  }

}  // namespace qring

#endif  // QRING_ERROR_HPP_
