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

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qss/code.hpp"
#include "qss/errors.hpp"

namespace qss {

namespace {

using nlohmann::json;

void write_digits(std::ostream &out, const FieldVector &v) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? "," : "") << v[i];
    }
    out << ']';
}

void write_ops(std::ostream &out, std::string_view key, const std::vector<PauliProduct> &ops, bool last) {
    out << "  \"" << key << "\": [";
    for (std::size_t i = 0; i < ops.size(); ++i) {
        out << (i ? "," : "") << "\n    {\"x\": ";
        write_digits(out, ops[i].x());
        out << ", \"z\": ";
        write_digits(out, ops[i].z());
        if (ops[i].phase() != 0) {
            out << ", \"phase\": " << ops[i].phase();
        }
        out << '}';
    }
    out << (ops.empty() ? "]" : "\n  ]") << (last ? "\n" : ",\n");
}

const json &field(const json &obj, const std::string &key, std::string_view where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(std::string(where) + ": missing field '" + key + "'");
    }
    return *it;
}

std::uint64_t unsigned_field(const json &obj, const std::string &key, std::string_view where) {
    const auto &v = field(obj, key, where);
    if (!v.is_number_unsigned()) {
        throw ParseError(std::string(where) + ": field '" + key + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

FieldVector digits(const json &v, const std::string &where, const PrimeModulus &d, std::size_t n) {
    if (!v.is_array()) {
        throw ParseError(where + ": expected an array");
    }
    if (v.size() != n) {
        throw ParseError(where + ": expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
    }
    FieldVector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_unsigned() || v[i].get<std::uint64_t>() >= d.value()) {
            throw ParseError(where + "[" + std::to_string(i) + "]: expected an integer in [0, D)");
        }
        out.push_back(static_cast<Digit>(v[i].get<std::uint64_t>()));
    }
    return out;
}

std::vector<PauliProduct> parse_ops(const json &root, const std::string &key, const PrimeModulus &d, std::size_t n,
                                    bool pauli_strings) {
    const auto &arr = field(root, key, "code file");
    if (!arr.is_array()) {
        throw ParseError("field '" + key + "' must be an array");
    }
    std::vector<PauliProduct> ops;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = key + "[" + std::to_string(i) + "]";
        const auto &item = arr[i];
        if (item.is_string()) {
            if (!pauli_strings) {
                throw ParseError(where + ": Pauli strings need \"pauli_strings\": true");
            }
            if (d.value() != 2) {
                throw ParseError(where + ": Pauli strings are only accepted for D = 2");
            }
            PauliProduct p = [&] {
                try {
                    return parse_pauli(item.get<std::string>(), d);
                } catch (const ParseError &e) {
                    throw ParseError(where + ": " + e.what());
                }
            }();
            if (p.size() != n) {
                throw ParseError(where + ": expected " + std::to_string(n) + " sites");
            }
            ops.push_back(std::move(p));
            continue;
        }
        if (!item.is_object()) {
            throw ParseError(where + ": expected an object {x, z}");
        }
        for (const auto &[k, v] : item.items()) {
            if (k != "x" && k != "z" && k != "phase") {
                throw ParseError(where + ": unknown field '" + k + "'");
            }
        }
        FieldVector x = digits(field(item, "x", where), where + ".x", d, n);
        FieldVector z = digits(field(item, "z", where), where + ".z", d, n);
        Digit phase = 0;
        if (item.contains("phase")) {
            auto raw = unsigned_field(item, "phase", where);
            if (raw >= d.value()) {
                throw ParseError(where + ".phase: expected an integer in [0, D)");
            }
            phase = static_cast<Digit>(raw);
        }
        ops.emplace_back(d, std::move(x), std::move(z), phase);
    }
    return ops;
}

}  // namespace

std::string save_code(const StabilizerCode &code) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"name\": " << json(code.name).dump() << ",\n";
    out << "  \"D\": " << code.d.value() << ",\n";
    out << "  \"n\": " << code.n << ",\n";
    out << "  \"k\": " << code.k << ",\n";
    write_ops(out, "stabilizer", code.stabilizers, false);
    write_ops(out, "logical_x", code.logical_x, false);
    write_ops(out, "logical_z", code.logical_z, true);
    out << "}\n";
    return out.str();
}

StabilizerCode load_code(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("code file: ") + e.what());
    }
    if (!root.is_object()) {
        throw ParseError("code file: top level must be an object");
    }
    static const std::set<std::string> kKnown = {"name", "D", "n", "k", "stabilizer", "logical_x", "logical_z",
                                                 "pauli_strings"};
    for (const auto &[key, value] : root.items()) {
        if (!kKnown.contains(key)) {
            throw ParseError("code file: unknown field '" + key + "'");
        }
    }
    const auto &name = field(root, "name", "code file");
    if (!name.is_string()) {
        throw ParseError("code file: field 'name' must be a string");
    }
    auto raw_d = unsigned_field(root, "D", "code file");
    if (!is_prime(raw_d)) {
        throw ValidationError("code file: D must be prime, got " + std::to_string(raw_d));
    }
    PrimeModulus d(raw_d);
    auto n = static_cast<std::size_t>(unsigned_field(root, "n", "code file"));
    auto k = static_cast<std::size_t>(unsigned_field(root, "k", "code file"));
    bool pauli_strings = false;
    if (root.contains("pauli_strings")) {
        if (!root["pauli_strings"].is_boolean()) {
            throw ParseError("code file: field 'pauli_strings' must be a boolean");
        }
        pauli_strings = root["pauli_strings"].get<bool>();
    }
    StabilizerCode code{name.get<std::string>(),
                        d,
                        n,
                        k,
                        parse_ops(root, "stabilizer", d, n, pauli_strings),
                        parse_ops(root, "logical_x", d, n, pauli_strings),
                        parse_ops(root, "logical_z", d, n, pauli_strings)};
    require_valid(code);
    return code;
}

StabilizerCode load_code_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open code file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return load_code(buf.str());
    } catch (const ValidationError &e) {
        throw ValidationError(path + ": " + e.what());
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace qss
