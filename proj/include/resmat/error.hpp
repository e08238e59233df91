#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace resmat {

/// Failure categories shared by the whole library. The CLI maps these onto
/// exit codes, so every thrown error carries one.
enum class errc {
  invalid_argument,
  unsupported_dimension,
  search_exhausted,
  not_a_member,
  ramified_prime,
  not_coprime,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Raised when a bounded search for a prime (or prime element) runs past its
/// limit. Carries enough context to reproduce the failing search.
class search_exhausted : public error {
 public:
  search_exhausted(std::int64_t residue, std::int64_t modulus, std::int64_t limit)
      : error(errc::search_exhausted,
              "no prime = " + std::to_string(residue) + " mod " + std::to_string(modulus) +
                  " found up to " + std::to_string(limit)),
        residue_(residue),
        modulus_(modulus),
        limit_(limit) {}

  explicit search_exhausted(const std::string& what, std::int64_t limit)
      : error(errc::search_exhausted, what), limit_(limit) {}

  std::int64_t residue() const noexcept { return residue_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  std::int64_t limit() const noexcept { return limit_; }

 private:
  std::int64_t residue_ = 0;
  std::int64_t modulus_ = 0;
  std::int64_t limit_ = 0;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool condition, errc code, const char* what) {
  if (!condition) throw error(code, what);
}

}  // namespace resmat
