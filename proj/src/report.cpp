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

#include "qss/report.hpp"

#include <algorithm>

#include "qss/errors.hpp"

namespace qss {

namespace {

const Json &at(const Json &j, const char *key, std::string_view where) {
    if (!j.is_object()) {
        throw ParseError(std::string(where) + ": expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string(where) + ": missing field '" + key + "'");
    }
    return *it;
}

template <typename T>
T get(const Json &j, const char *key, std::string_view where) {
    const Json &v = at(j, key, where);
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception &) {
        throw ParseError(std::string(where) + "." + key + ": wrong type");
    }
}

void expect_kind(const Json &j, std::string_view kind) {
    auto got = get<std::string>(j, "kind", "report");
    if (got != kind) {
        throw ParseError("report: kind is '" + got + "', expected '" + std::string(kind) + "'");
    }
}

Json subset_json(Subset s) { return Json(s.one_based()); }

Subset subset_from(const Json &j, std::size_t n, std::string_view where) {
    try {
        return Subset::from_one_based(j.get<std::vector<std::size_t>>(), n);
    } catch (const nlohmann::json::exception &) {
        throw ParseError(std::string(where) + ": subset must be a list of player indices");
    } catch (const InputError &e) {
        throw ParseError(std::string(where) + ": " + e.what());
    }
}

Json subsets_json(const std::vector<Subset> &subsets) {
    Json out = Json::array();
    for (auto s : subsets) {
        out.push_back(subset_json(s));
    }
    return out;
}

std::vector<Subset> subsets_from(const Json &j, std::size_t n, std::string_view where) {
    if (!j.is_array()) {
        throw ParseError(std::string(where) + ": expected a list of subsets");
    }
    std::vector<Subset> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(subset_from(j[i], n, std::string(where) + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Json pauli_json(const PauliProduct &p) {
    Json out;
    out["x"] = p.x();
    out["z"] = p.z();
    if (p.phase() != 0) {
        out["phase"] = p.phase();
    }
    out["text"] = to_string(p);
    return out;
}

PauliProduct pauli_from(const Json &j, PrimeModulus d, std::string_view where) {
    auto x = get<FieldVector>(j, "x", where);
    auto z = get<FieldVector>(j, "z", where);
    Digit phase = j.contains("phase") ? get<Digit>(j, "phase", where) : 0;
    try {
        return PauliProduct(d, std::move(x), std::move(z), phase);
    } catch (const InputError &e) {
        throw ParseError(std::string(where) + ": " + e.what());
    }
}

PrimeModulus modulus_from(std::uint64_t value, std::string_view where) {
    try {
        return PrimeModulus(value);
    } catch (const InputError &e) {
        throw ParseError(std::string(where) + ": " + e.what());
    }
}

AccessClass class_from(const std::string &letter, std::string_view where) {
    if (letter == "A") {
        return AccessClass::authorized;
    }
    if (letter == "F") {
        return AccessClass::forbidden;
    }
    if (letter == "I") {
        return AccessClass::intermediate;
    }
    throw ParseError(std::string(where) + ": class must be A, F or I, got '" + letter + "'");
}

Json prescription_json(const ClassicalPrescription &p, bool empty_plan) {
    Json out;
    if (empty_plan) {
        out["scheme"] = "none";
    } else {
        out["scheme"] = p.threshold ? "shamir" : "monotone";
    }
    out["players"] = p.players;
    out["threshold"] = p.threshold ? Json(*p.threshold) : Json(nullptr);
    out["minimal_authorized"] = subsets_json(p.minimal_authorized);
    return out;
}

}  // namespace

CodeSummary summarize(const StabilizerCode &code) { return {code.name, code.d.value(), code.n, code.k}; }

PlanReport plan_report(const StabilizerCode &code, const TwirlPlan &plan) {
    PlanReport out;
    out.code = summarize(code);
    out.r = plan.canonical.r;
    out.s = plan.canonical.s;
    out.l = plan.key_length;
    out.intermediate_group = plan.intermediate.generators;
    out.generators = plan.generators;
    out.scheme = plan.scheme;
    return out;
}

bool SimulationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

Json to_json(const CodeSummary &summary) {
    Json out;
    out["name"] = summary.name;
    out["D"] = summary.d;
    out["n"] = summary.n;
    out["k"] = summary.k;
    return out;
}

CodeSummary code_summary_from_json(const Json &j) {
    return {get<std::string>(j, "name", "code"), get<std::uint32_t>(j, "D", "code"), get<std::size_t>(j, "n", "code"),
            get<std::size_t>(j, "k", "code")};
}

Json to_json(const ValidationSummary &report) {
    Json out;
    out["kind"] = "validation";
    out["code"] = to_json(report.code);
    out["valid"] = report.valid;
    out["distance"] = report.distance ? Json(*report.distance) : Json(nullptr);
    out["violations"] = report.violations;
    out["notes"] = report.notes;
    return out;
}

ValidationSummary validation_from_json(const Json &j) {
    expect_kind(j, "validation");
    ValidationSummary out;
    out.code = code_summary_from_json(at(j, "code", "validation"));
    out.valid = get<bool>(j, "valid", "validation");
    const Json &d = at(j, "distance", "validation");
    if (!d.is_null()) {
        out.distance = get<std::size_t>(j, "distance", "validation");
    }
    out.violations = get<std::vector<std::string>>(j, "violations", "validation");
    out.notes = get<std::vector<std::string>>(j, "notes", "validation");
    return out;
}

Json to_json(const ClassificationReport &report) {
    const auto &t = report.triplet;
    Json out;
    out["kind"] = "classification";
    out["code"] = to_json(report.code);
    Json summary;
    summary["authorized"] = t.authorized().size();
    summary["forbidden"] = t.forbidden().size();
    summary["intermediate"] = t.intermediate().size();
    summary["threshold"] = t.threshold() ? Json(*t.threshold()) : Json(nullptr);
    summary["perfect"] = t.is_perfect();
    out["summary"] = summary;
    out["minimal_authorized"] = subsets_json(t.minimal_authorized);
    out["maximal_forbidden"] = subsets_json(t.maximal_forbidden);
    if (t.n <= kListingCap) {
        Json records = Json::array();
        for (const auto &r : t.records) {
            Json rec;
            rec["subset"] = subset_json(r.subset);
            rec["class"] = std::string(1, class_letter(r.access));
            rec["r"] = r.r;
            rec["s"] = r.s;
            records.push_back(rec);
        }
        out["subsets"] = records;
    }
    return out;
}

ClassificationReport classification_from_json(const Json &j) {
    expect_kind(j, "classification");
    ClassificationReport out;
    out.code = code_summary_from_json(at(j, "code", "classification"));
    const std::size_t n = out.code.n;
    if (n > 20) {
        throw ParseError("classification: n = " + std::to_string(n) + " is beyond the supported range");
    }
    auto order = enumerate_subsets(n);
    std::vector<SubsetRecord> records;
    records.reserve(order.size());
    if (j.contains("subsets")) {
        const Json &list = j["subsets"];
        if (!list.is_array() || list.size() != order.size()) {
            throw ParseError("classification.subsets: expected " + std::to_string(order.size()) + " records");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            std::string where = "classification.subsets[" + std::to_string(i) + "]";
            Subset s = subset_from(at(list[i], "subset", where), n, where + ".subset");
            if (s != order[i]) {
                throw ParseError(where + ": subset " + s.to_string() + " out of order, expected " +
                                 order[i].to_string());
            }
            records.push_back({s, class_from(get<std::string>(list[i], "class", where), where),
                               get<std::uint8_t>(list[i], "r", where), get<std::uint8_t>(list[i], "s", where)});
        }
    } else {
        // Summary-only reports: rebuild classes from the antichains; r and s are not recorded.
        auto minimal = subsets_from(at(j, "minimal_authorized", "classification"), n, "minimal_authorized");
        auto maximal = subsets_from(at(j, "maximal_forbidden", "classification"), n, "maximal_forbidden");
        for (auto s : order) {
            AccessClass c = AccessClass::intermediate;
            if (std::any_of(minimal.begin(), minimal.end(), [&](Subset m) { return m.is_subset_of(s); })) {
                c = AccessClass::authorized;
            } else if (std::any_of(maximal.begin(), maximal.end(), [&](Subset m) { return s.is_subset_of(m); })) {
                c = AccessClass::forbidden;
            }
            records.push_back({s, c, 0, 0});
        }
    }
    try {
        out.triplet = build_triplet(n, out.code.k, std::move(records));
    } catch (const std::logic_error &e) {
        throw ParseError(std::string("classification: ") + e.what());
    }
    return out;
}

Json to_json(const PlanReport &report) {
    Json out;
    out["kind"] = "twirl_plan";
    out["code"] = to_json(report.code);
    out["r"] = report.r;
    out["s"] = report.s;
    out["l"] = report.l;
    out["intermediate_group"] = report.intermediate_group;
    Json gens = Json::array();
    for (const auto &g : report.generators) {
        gens.push_back(pauli_json(g));
    }
    out["generators"] = gens;
    out["classical"] = prescription_json(report.scheme, report.l == 0);
    return out;
}

PlanReport plan_from_json(const Json &j) {
    expect_kind(j, "twirl_plan");
    PlanReport out;
    out.code = code_summary_from_json(at(j, "code", "twirl_plan"));
    PrimeModulus d = modulus_from(out.code.d, "twirl_plan.code.D");
    out.r = get<std::size_t>(j, "r", "twirl_plan");
    out.s = get<std::size_t>(j, "s", "twirl_plan");
    out.l = get<std::size_t>(j, "l", "twirl_plan");
    out.intermediate_group = get<std::vector<FieldVector>>(j, "intermediate_group", "twirl_plan");
    const Json &gens = at(j, "generators", "twirl_plan");
    if (!gens.is_array()) {
        throw ParseError("twirl_plan.generators: expected a list");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        out.generators.push_back(pauli_from(gens[i], d, "twirl_plan.generators[" + std::to_string(i) + "]"));
    }
    if (out.generators.size() != out.l || out.l != 2 * out.r + out.s) {
        throw ParseError("twirl_plan: l must equal 2r + s and the number of generators");
    }
    const Json &c = at(j, "classical", "twirl_plan");
    out.scheme.players = get<std::size_t>(c, "players", "twirl_plan.classical");
    if (!at(c, "threshold", "twirl_plan.classical").is_null()) {
        out.scheme.threshold = get<std::size_t>(c, "threshold", "twirl_plan.classical");
    }
    out.scheme.minimal_authorized = subsets_from(at(c, "minimal_authorized", "twirl_plan.classical"),
                                                 out.scheme.players, "twirl_plan.classical.minimal_authorized");
    return out;
}

Json to_json(const ClassicalShareSet &bundle) {
    Json out;
    out["kind"] = "share_bundle";
    out["scheme"] = bundle.kind == SharingKind::threshold ? "shamir" : "monotone";
    out["P"] = bundle.p.value();
    out["players"] = bundle.players;
    out["key_length"] = bundle.key_length;
    if (bundle.kind == SharingKind::threshold) {
        out["q"] = bundle.q;
    } else {
        out["minimal_sets"] = subsets_json(bundle.minimal_sets);
    }
    out["source_modulus"] = bundle.source_modulus ? Json(*bundle.source_modulus) : Json(nullptr);
    Json shares = Json::array();
    for (const auto &s : bundle.shares) {
        Json rec;
        rec["player"] = s.player;
        rec["digits"] = s.digits;
        shares.push_back(rec);
    }
    out["shares"] = shares;
    return out;
}

ClassicalShareSet share_bundle_from_json(const Json &j) {
    expect_kind(j, "share_bundle");
    ClassicalShareSet out;
    auto scheme = get<std::string>(j, "scheme", "share_bundle");
    if (scheme == "shamir") {
        out.kind = SharingKind::threshold;
    } else if (scheme == "monotone") {
        out.kind = SharingKind::monotone;
    } else {
        throw ParseError("share_bundle.scheme: expected 'shamir' or 'monotone', got '" + scheme + "'");
    }
    out.p = modulus_from(get<std::uint64_t>(j, "P", "share_bundle"), "share_bundle.P");
    out.players = get<std::size_t>(j, "players", "share_bundle");
    if (out.players > kMaxPlayers) {
        throw ParseError("share_bundle.players: at most " + std::to_string(kMaxPlayers) + " players");
    }
    out.key_length = get<std::size_t>(j, "key_length", "share_bundle");
    if (out.kind == SharingKind::threshold) {
        out.q = get<std::size_t>(j, "q", "share_bundle");
        if (out.q == 0 || out.q > out.players) {
            throw ParseError("share_bundle.q: must lie in 1..players");
        }
    } else {
        out.minimal_sets = subsets_from(at(j, "minimal_sets", "share_bundle"), out.players, "share_bundle.minimal_sets");
    }
    if (!at(j, "source_modulus", "share_bundle").is_null()) {
        out.source_modulus = get<Digit>(j, "source_modulus", "share_bundle");
    }
    const Json &shares = at(j, "shares", "share_bundle");
    if (!shares.is_array()) {
        throw ParseError("share_bundle.shares: expected a list");
    }
    for (std::size_t i = 0; i < shares.size(); ++i) {
        std::string where = "share_bundle.shares[" + std::to_string(i) + "]";
        PlayerShare s{get<std::size_t>(shares[i], "player", where), get<FieldVector>(shares[i], "digits", where)};
        if (s.player == 0 || s.player > out.players) {
            throw ParseError(where + ".player: outside 1.." + std::to_string(out.players));
        }
        for (Digit v : s.digits) {
            if (v >= out.p.value()) {
                throw ParseError(where + ".digits: value " + std::to_string(v) + " is not in Z_" +
                                 std::to_string(out.p.value()));
            }
        }
        out.shares.push_back(std::move(s));
    }
    return out;
}

Json to_json(const SimulationReport &report) {
    Json out;
    out["kind"] = "simulation";
    out["code"] = to_json(report.code);
    out["seed"] = report.seed;
    out["passed"] = report.passed();
    Json checks = Json::array();
    for (const auto &c : report.checks) {
        Json rec;
        rec["name"] = c.name;
        rec["passed"] = c.passed;
        rec["value"] = c.value ? Json(*c.value) : Json(nullptr);
        rec["detail"] = c.detail;
        checks.push_back(rec);
    }
    out["checks"] = checks;
    return out;
}

SimulationReport simulation_from_json(const Json &j) {
    expect_kind(j, "simulation");
    SimulationReport out;
    out.code = code_summary_from_json(at(j, "code", "simulation"));
    out.seed = get<std::uint64_t>(j, "seed", "simulation");
    const Json &checks = at(j, "checks", "simulation");
    if (!checks.is_array()) {
        throw ParseError("simulation.checks: expected a list");
    }
    for (std::size_t i = 0; i < checks.size(); ++i) {
        std::string where = "simulation.checks[" + std::to_string(i) + "]";
        CheckResult c;
        c.name = get<std::string>(checks[i], "name", where);
        c.passed = get<bool>(checks[i], "passed", where);
        if (!at(checks[i], "value", where).is_null()) {
            c.value = get<double>(checks[i], "value", where);
        }
        c.detail = get<std::string>(checks[i], "detail", where);
        out.checks.push_back(std::move(c));
    }
    if (get<bool>(j, "passed", "simulation") != out.passed()) {
        throw ParseError("simulation.passed: disagrees with the individual checks");
    }
    return out;
}

Json to_json(const KeyReport &report) {
    Json out;
    out["kind"] = "key";
    out["players"] = report.players;
    out["key"] = report.key;
    return out;
}

KeyReport key_from_json(const Json &j) {
    expect_kind(j, "key");
    return {get<std::vector<std::size_t>>(j, "players", "key"), get<FieldVector>(j, "key", "key")};
}

Json parse_report(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

std::string dump_report(const Json &j) { return j.dump(2) + "\n"; }

}  // namespace qss
