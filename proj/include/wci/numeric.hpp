#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wci {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed user input: bad text, non-positive weights, empty lists.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (wrong amplitude, wrong dimension).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A formal basket produced a non-integral Euler characteristic.
class BasketInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Smallest integer >= q.
Integer ceil(const Rational& q);

bool is_integer(const Rational& q);

long gcd_of(std::span<const long> values);

}  // namespace wci
