// Copyright 2026 The patternq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "patternq/classifier.hpp"

#include <algorithm>

namespace patternq {

ClassifierSpec::ClassifierSpec(Recipe recipe) : recipe_(std::move(recipe)) {
  require_buildable(recipe_);
}

ThresholdReport classification_threshold(const ClassifierSpec& spec, const PatternBasis& basis,
                                         const PatternVector& h) {
  if (spec.recipe() != basis.recipe()) {
    throw UsageError("classifier recipe " + spec.recipe().to_string() +
                     " does not match basis recipe " + basis.recipe().to_string());
  }
  ThresholdReport report;
  report.nearest = distance_from_class(basis, h);
  report.distribution = outcome_distribution<double>(spec, h);
  double theta = 0.0;
  for (std::size_t k : report.nearest.indices) theta += report.distribution[static_cast<Eigen::Index>(k)];
  report.theta = std::min(1.0, theta);
  return report;
}

}  // namespace patternq
