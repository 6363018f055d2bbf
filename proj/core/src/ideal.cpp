#include "mgdual/ideal.hpp"

#include <sstream>

#include "mgdual/error.hpp"

namespace mgdual {

GradedIdeal::GradedIdeal(Grading grading, std::vector<Polynomial> generators)
    : grading_(std::move(grading)) {
  std::ostringstream key;
  for (const auto& row : grading_.degree_matrix()) {
    for (Int a : row) key << a << ' ';
    key << ';';
  }
  key << '|';
  for (const auto& row : grading_.cone_matrix()) {
    for (Int b : row) key << b << ' ';
    key << ';';
  }
  key << '|';

  for (std::size_t i = 0; i < generators.size(); ++i) {
    Polynomial& f = generators[i];
    if (f.nvars() != grading_.nvars())
      throw Error(Errc::DimensionMismatch, "generator " + std::to_string(i + 1) +
                                               " lives in a ring with " + std::to_string(f.nvars()) +
                                               " variables");
    if (f.is_zero()) continue;
    auto d = f.homogeneous_degree(grading_);
    if (!d)
      throw Error(Errc::NotHomogeneous,
                  "generator " + std::to_string(i + 1) + " (" + f.to_string(grading_.var_names()) +
                      ") is not homogeneous");
    if (d->is_zero())
      throw Error(Errc::UnitGenerator,
                  "generator " + std::to_string(i + 1) + " has degree 0 and is a unit");
    key << f.to_string(grading_.var_names()) << ';';
    degrees_.push_back(std::move(*d));
    generators_.push_back(std::move(f));
  }
  key_ = key.str();
}

}  // namespace mgdual
