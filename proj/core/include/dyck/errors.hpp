#pragma once

#include <stdexcept>
#include <string>

namespace dyck {

/// Input is not a Dyck number, or a word is not balanced.
class not_dyck_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Valid input must never raise this.
class defect_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// root_of was asked for the tree root of a term that lies on no bijection
/// tree.
class root_refused : public std::domain_error {
 public:
  enum class Reason {
    MersenneLadder,  // B^-1 climbs the Mersenne numbers forever
    FixedPoint,      // B^-1 is the identity on this term
  };

  root_refused(Reason reason, const std::string& what)
      : std::domain_error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

}  // namespace dyck
