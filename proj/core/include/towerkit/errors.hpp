#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace towerkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation needed simplices above the degree a simplicial set was built to.
class BoundError : public Error {
 public:
  BoundError(int needed, int available, const std::string& what)
      : Error(what + ": needs degree " + std::to_string(needed) + ", object is known through degree " +
              std::to_string(available)),
        needed_(needed),
        available_(available) {}
  int needed() const { return needed_; }
  int available() const { return available_; }

 private:
  int needed_;
  int available_;
};

/// An enumeration hit its candidate cap. Never a silent truncation.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string where, int degree, std::uint64_t cap)
      : Error("enumeration cap " + std::to_string(cap) + " exceeded in degree " + std::to_string(degree) +
              " at " + where),
        where_(std::move(where)),
        degree_(degree),
        cap_(cap) {}
  const std::string& where() const { return where_; }
  int degree() const { return degree_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::string where_;
  int degree_;
  std::uint64_t cap_;
};

/// Input violates a structural invariant (closure, functoriality, identities).
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"), message_(msg), position_(position) {}
  std::size_t position() const { return position_; }
  /// The message without the position suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Enumeration limits shared by every potentially large construction.
struct Limits {
  std::uint64_t cap = 2'000'000;  ///< max produced elements per degree
  std::uint64_t node_factor = 8;  ///< search nodes allowed per enumeration, as a multiple of cap
  std::uint64_t key_budget = std::uint64_t{1} << 27;  ///< total key entries held per degree

  std::uint64_t node_cap() const { return cap * node_factor; }
};

}  // namespace towerkit
