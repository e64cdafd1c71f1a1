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

#include <string>

#include "qss/code.hpp"
#include "qss/errors.hpp"

namespace qss {

namespace {

std::vector<PauliProduct> qubit_ops(std::initializer_list<std::string_view> strings) {
    PrimeModulus two(2);
    std::vector<PauliProduct> out;
    for (auto s : strings) {
        out.push_back(parse_pauli(s, two));
    }
    return out;
}

StabilizerCode qubit_code(std::string name, std::size_t n, std::size_t k,
                          std::initializer_list<std::string_view> stabilizers,
                          std::initializer_list<std::string_view> logical_x,
                          std::initializer_list<std::string_view> logical_z) {
    return {std::move(name), PrimeModulus(2), n, k, qubit_ops(stabilizers), qubit_ops(logical_x),
            qubit_ops(logical_z)};
}

StabilizerCode ghz(std::size_t n) {
    if (n < 2) {
        throw InputError("ghz_n needs n >= 2");
    }
    PrimeModulus two(2);
    StabilizerCode code{"ghz_" + std::to_string(n), two, n, 1, {}, {}, {}};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        FieldVector z(n, 0);
        z[i] = 1;
        z[i + 1] = 1;
        code.stabilizers.emplace_back(two, FieldVector(n, 0), std::move(z));
    }
    code.logical_x.emplace_back(two, FieldVector(n, 1), FieldVector(n, 0));
    code.logical_z.push_back(PauliProduct::single(two, n, 0, 0, 1));
    return code;
}

}  // namespace

std::vector<std::string> catalog_names() { return {"cnot_2_1", "ghz_n", "five_qubit", "four_two_two", "steane"}; }

StabilizerCode catalog(std::string_view name, std::optional<std::size_t> size_param) {
    if (name == "cnot_2_1") {
        return qubit_code("cnot_2_1", 2, 1, {"ZZ"}, {"XX"}, {"ZI"});
    }
    if (name == "ghz_n") {
        return ghz(size_param.value_or(3));
    }
    if (name == "five_qubit") {
        return qubit_code("five_qubit", 5, 1, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, {"XXXXX"}, {"ZZZZZ"});
    }
    if (name == "four_two_two") {
        return qubit_code("four_two_two", 4, 2, {"XXXX", "ZZZZ"}, {"XXII", "XIXI"}, {"ZIZI", "ZZII"});
    }
    if (name == "steane") {
        return qubit_code("steane", 7, 1,
                          {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}, {"XXXXXXX"},
                          {"ZZZZZZZ"});
    }
    throw InputError("unknown catalog code '" + std::string(name) + "'");
}

StabilizerCode resolve_code(std::string_view source, std::optional<std::size_t> size_param) {
    constexpr std::string_view kPrefix = "catalog:";
    if (source.starts_with(kPrefix)) {
        return catalog(source.substr(kPrefix.size()), size_param);
    }
    return load_code_file(std::string(source));
}

}  // namespace qss
