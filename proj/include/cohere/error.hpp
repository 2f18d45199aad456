#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cohere {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: cycle notation, partitions, group specs,
/// generator files.
class ParseError : public Error
{
public:
  using Error::Error;
};

/// An enumeration would exceed its configured cap. Never a silent truncation.
class CapExceeded : public Error
{
public:
  CapExceeded(std::string const &what, std::uint64_t cap, std::string required)
    : Error(what + " (cap " + std::to_string(cap) + ", required " + required + ")"),
      cap_(cap), required_(std::move(required))
  {}

  std::uint64_t cap() const { return cap_; }
  std::string const &required() const { return required_; }

private:
  std::uint64_t cap_;
  std::string required_;
};

} // namespace cohere
