#pragma once

#include <string>
#include <vector>

#include "fitt/errors.hpp"

namespace fitt {

// A named polynomial ring over the rationals. Variables are addressed by
// 0-based index; names only matter for parsing and printing.
class PolynomialRing {
 public:
  explicit PolynomialRing(std::vector<std::string> variable_names)
      : names_(std::move(variable_names)) {
    if (names_.empty())
      throw PreconditionViolated("polynomial ring needs at least one variable");
  }

  static PolynomialRing with_indexed_vars(int n, const std::string& stem = "x") {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return PolynomialRing(std::move(names));
  }

  int var_count() const { return static_cast<int>(names_.size()); }
  const std::string& var_name(int i) const { return names_.at(i); }
  const std::vector<std::string>& var_names() const { return names_; }

  // -1 when the name is unknown
  int var_index(const std::string& name) const {
    for (int i = 0; i < var_count(); ++i)
      if (names_[i] == name) return i;
    return -1;
  }

  bool operator==(const PolynomialRing& o) const { return names_ == o.names_; }
  bool operator!=(const PolynomialRing& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
};

}  // namespace fitt
