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

#include "qss/subset.hpp"

#include <algorithm>
#include <charconv>

#include "qss/errors.hpp"

namespace qss {

Subset Subset::from_one_based(const std::vector<std::size_t> &indices, std::size_t n) {
    if (n > kMaxPlayers) {
        throw InputError("at most " + std::to_string(kMaxPlayers) + " players are supported");
    }
    std::uint32_t bits = 0;
    for (auto i : indices) {
        if (i < 1 || i > n) {
            throw InputError("player index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        }
        if ((bits >> (i - 1)) & 1U) {
            throw InputError("player index " + std::to_string(i) + " repeated");
        }
        bits |= 1U << (i - 1);
    }
    return Subset(bits);
}

Subset Subset::full(std::size_t n) {
    if (n > kMaxPlayers) {
        throw InputError("at most " + std::to_string(kMaxPlayers) + " players are supported");
    }
    return Subset(n == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

std::vector<std::size_t> Subset::sites() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 32; ++i) {
        if (contains(i)) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> Subset::one_based() const {
    auto out = sites();
    for (auto &i : out) {
        ++i;
    }
    return out;
}

std::string Subset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto i : one_based()) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += std::to_string(i);
    }
    return out + "}";
}

Subset parse_subset(std::string_view text, std::size_t n) {
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}') {
            throw InputError("unbalanced braces in subset '" + std::string(text) + "'");
        }
        text = text.substr(1, text.size() - 2);
    }
    std::vector<std::size_t> indices;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto token = text.substr(pos, end - pos);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
            throw InputError("bad player index '" + std::string(token) + "'");
        }
        indices.push_back(value);
        pos = end + 1;
    }
    return Subset::from_one_based(indices, n);
}

std::vector<Subset> subsets_of_size(std::size_t n, std::size_t size) {
    std::vector<Subset> out;
    if (size > n) {
        return out;
    }
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) {
        idx[i] = i;
    }
    while (true) {
        std::uint32_t bits = 0;
        for (auto i : idx) {
            bits |= 1U << i;
        }
        out.emplace_back(bits);
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == n - size + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

std::vector<Subset> enumerate_subsets(std::size_t n) {
    if (n > kMaxPlayers) {
        throw InputError("at most " + std::to_string(kMaxPlayers) + " players are supported");
    }
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t size = 0; size <= n; ++size) {
        auto layer = subsets_of_size(n, size);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

bool subset_order_less(Subset a, Subset b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    auto sa = a.sites();
    auto sb = b.sites();
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

}  // namespace qss
