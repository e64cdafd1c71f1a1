// Copyright 2026 The qss Authors
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

#ifndef QSS_REPORT_HPP
#define QSS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qss/classical.hpp"
#include "qss/code.hpp"
#include "qss/infogroup.hpp"
#include "qss/twirl.hpp"

namespace qss {

/// Key order is preserved so equal reports serialize to equal bytes.
using Json = nlohmann::ordered_json;

struct CodeSummary {
    std::string name;
    std::uint32_t d = 2;
    std::size_t n = 0;
    std::size_t k = 0;
    bool operator==(const CodeSummary &) const = default;
};

CodeSummary summarize(const StabilizerCode &code);

struct ValidationSummary {
    CodeSummary code;
    bool valid = false;
    std::optional<std::size_t> distance;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    bool operator==(const ValidationSummary &) const = default;
};

struct ClassificationReport {
    CodeSummary code;
    SchemeTriplet triplet;
};

struct PlanReport {
    CodeSummary code;
    std::size_t r = 0;
    std::size_t s = 0;
    std::size_t l = 0;
    std::vector<FieldVector> intermediate_group;
    std::vector<PauliProduct> generators;
    ClassicalPrescription scheme;
};

PlanReport plan_report(const StabilizerCode &code, const TwirlPlan &plan);

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Worst observed figure of merit (distance, defect); absent for purely discrete checks.
    std::optional<double> value;
    std::string detail;
    bool operator==(const CheckResult &) const = default;
};

struct SimulationReport {
    CodeSummary code;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool passed() const;
    bool operator==(const SimulationReport &) const = default;
};

struct KeyReport {
    std::vector<std::size_t> players;
    FieldVector key;
    bool operator==(const KeyReport &) const = default;
};

Json to_json(const CodeSummary &summary);
Json to_json(const ValidationSummary &report);
Json to_json(const ClassificationReport &report);
Json to_json(const PlanReport &report);
Json to_json(const ClassicalShareSet &bundle);
Json to_json(const SimulationReport &report);
Json to_json(const KeyReport &report);

/// Parsers throw ParseError naming the offending field.
CodeSummary code_summary_from_json(const Json &j);
ValidationSummary validation_from_json(const Json &j);
ClassificationReport classification_from_json(const Json &j);
PlanReport plan_from_json(const Json &j);
ClassicalShareSet share_bundle_from_json(const Json &j);
SimulationReport simulation_from_json(const Json &j);
KeyReport key_from_json(const Json &j);

Json parse_report(std::string_view text);
std::string dump_report(const Json &j);

}  // namespace qss

#endif  // QSS_REPORT_HPP
