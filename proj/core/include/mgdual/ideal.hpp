#pragma once

#include <string>
#include <vector>

#include "mgdual/grading.hpp"
#include "mgdual/polynomial.hpp"

namespace mgdual {

/// An ideal given by M-homogeneous generators. Zero generators are dropped;
/// non-homogeneous generators and units (degree 0) are rejected.
class GradedIdeal {
public:
  GradedIdeal(Grading grading, std::vector<Polynomial> generators);
  static GradedIdeal zero(Grading grading) { return GradedIdeal(std::move(grading), {}); }

  const Grading& grading() const noexcept { return grading_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<MultiDegree>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_zero() const noexcept { return generators_.empty(); }

  /// Stable textual identity: grading plus generators in canonical form.
  const std::string& canonical_key() const noexcept { return key_; }

  friend bool operator==(const GradedIdeal& a, const GradedIdeal& b) { return a.key_ == b.key_; }

private:
  Grading grading_;
  std::vector<Polynomial> generators_;
  std::vector<MultiDegree> degrees_;
  std::string key_;
};

}  // namespace mgdual
