// Copyright 2026 The arithdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARITHDYN_REPORTS_HPP
#define ARITHDYN_REPORTS_HPP

#include <iosfwd>

#include "json.hpp"

#include "arithdyn/classifier.hpp"
#include "arithdyn/dynamics.hpp"
#include "arithdyn/rationality.hpp"

// JSON and CSV views of the result types. Exact rationals are always
// written as "num/den" strings.
namespace arithdyn {

nlohmann::json rational_list_json(const std::vector<BigRational>& values);
nlohmann::json upoly_json(const UPoly& p);

nlohmann::json to_json(const GrowthEstimate& g);
nlohmann::json to_json(const RationalityVerdict& v);
nlohmann::json to_json(const CriterionReport& r);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const RuzsaEstimate& e);
nlohmann::json to_json(const ClassifyBudgets& b);

/// Columns n,point_height_log,observable_height_log,point_height_bits,observable_height_bits.
void write_heights_csv(std::ostream& out, const CoefficientSeries& series);

}  // namespace arithdyn

#endif  // ARITHDYN_REPORTS_HPP
