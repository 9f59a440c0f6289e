#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vrpmtw/instance.h"

namespace vrpmtw {

// Raised for unreadable instance or solution documents. line() is 1-based,
// or 0 when the error is not tied to a line.
class InputError : public std::runtime_error {
 public:
  InputError(std::size_t line, const std::string& message);
  explicit InputError(const std::string& message) : InputError(0, message) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Extended Solomon format:
//
//   VRPMTW 1 <precision>
//   <name>
//   [DEADLINE <minutes>] [VEHICLE_COST <cost>] [MINIMISE_TIME <0|1>]
//   VEHICLE
//   NUMBER CAPACITY
//   <count> <capacity>
//   CUSTOMER
//   <column titles>
//   <id> <x> <y> <demand> <service> <window count> <lower> <upper> ...
//
// The first customer row is the depot and carries exactly one window (the
// planning horizon). Brackets and commas are accepted as separators, so
// "2 [5,10] [20,30]" is a valid window list. Documents without the VRPMTW
// header are read as classical Solomon files (id x y demand ready due service).
Instance parse_instance(std::string_view text);

Instance load_instance(const std::string& path);

// Inverse of parse_instance for coordinate-based instances.
std::string write_instance(const Instance& instance);

// Randomly reassigns the visits' window sets among the visits. Everything
// else, including the depot horizon, is left untouched.
Instance perturb_instance(const Instance& instance, std::uint64_t seed);

}  // namespace vrpmtw
