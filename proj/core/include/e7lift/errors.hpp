#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace e7lift {

/// Input outside the mathematical domain of an operation (p | N for satake, a = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input the toolkit deliberately does not handle (non-square-free level at p, ...).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent data files.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SiegelUnavailable : public std::runtime_error {
 public:
  SiegelUnavailable(std::uint64_t p, std::string key, std::string what)
      : std::runtime_error(std::move(what)), p_(p), key_(std::move(key)) {}
  std::uint64_t prime() const { return p_; }
  const std::string& key() const { return key_; }

 private:
  std::uint64_t p_;
  std::string key_;
};

}  // namespace e7lift
