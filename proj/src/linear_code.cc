// Copyright 2026 The ebcsim Authors
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

#include "ebc/linear_code.h"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ebc/security_analysis.h"

namespace ebc {

namespace {

void check_rows(const std::vector<BitString> &rows) {
    if (rows.empty()) {
        throw std::invalid_argument("generator must have at least one row");
    }
    size_t n = rows[0].size();
    if (n == 0) {
        throw std::invalid_argument("generator rows must be nonempty");
    }
    for (const auto &r : rows) {
        if (r.size() != n) {
            throw std::invalid_argument("generator rows have unequal lengths");
        }
    }
    if (gf2_rank(rows) != rows.size()) {
        throw std::invalid_argument("generator rows are linearly dependent");
    }
}

}  // namespace

LinearCode::LinearCode(std::vector<BitString> rows, size_t d, bool verified)
    : n_(rows[0].size()), d_(d), verified_(verified), rows_(std::move(rows)) {
}

LinearCode LinearCode::from_generator(std::vector<BitString> rows) {
    check_rows(rows);
    size_t d = min_distance(rows);
    return LinearCode(std::move(rows), d, true);
}

LinearCode LinearCode::with_certified_distance(std::vector<BitString> rows, size_t d) {
    check_rows(rows);
    if (rows.size() <= kMaxEnumerableDimension) {
        size_t actual = min_distance(rows);
        if (actual != d) {
            throw std::invalid_argument(
                "claimed distance " + std::to_string(d) + " but enumeration gives " + std::to_string(actual));
        }
        return LinearCode(std::move(rows), d, true);
    }
    return LinearCode(std::move(rows), d, false);
}

LinearCode LinearCode::repetition(size_t n) {
    return from_generator({BitString::ones(n)});
}

LinearCode LinearCode::hamming_7_4() {
    return from_generator({
        BitString::from_string("1000110"),
        BitString::from_string("0100101"),
        BitString::from_string("0010011"),
        BitString::from_string("0001111"),
    });
}

LinearCode LinearCode::two_block(size_t n, size_t w) {
    if (w >= n || 2 * w <= n) {
        throw std::invalid_argument("two_block needs n/2 < w < n");
    }
    BitString g1(n);
    BitString g2(n);
    for (size_t i = 0; i < w; i++) {
        g1.set(i, true);
        g2.set(n - w + i, true);
    }
    return from_generator({g1, g2});
}

BitString LinearCode::encode(const BitString &message) const {
    if (message.size() != k()) {
        throw std::invalid_argument(
            "encode: message has length " + std::to_string(message.size()) + ", code dimension is " +
            std::to_string(k()));
    }
    BitString y(n_);
    for (size_t i = 0; i < rows_.size(); i++) {
        if (message[i]) {
            y ^= rows_[i];
        }
    }
    return y;
}

size_t gf2_rank(std::vector<BitString> rows) {
    size_t rank = 0;
    if (rows.empty()) {
        return 0;
    }
    size_t n = rows[0].size();
    for (size_t col = 0; col < n && rank < rows.size(); col++) {
        size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][col]) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r][col]) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }
    return rank;
}

size_t min_distance(std::span<const BitString> generator) {
    size_t k = generator.size();
    if (k > kMaxEnumerableDimension) {
        throw std::invalid_argument(
            "min_distance: k=" + std::to_string(k) + " exceeds the enumeration budget of " +
            std::to_string(kMaxEnumerableDimension) + "; supply a verified distance instead");
    }
    if (k == 0) {
        return 0;
    }
    // Gray-code walk: each step XORs exactly one row into the running codeword.
    BitString word(generator[0].size());
    size_t best = SIZE_MAX;
    uint64_t total = uint64_t{1} << k;
    for (uint64_t i = 1; i < total; i++) {
        word ^= generator[std::countr_zero(i)];
        size_t w = word.weight();
        if (w < best) {
            best = w;
        }
    }
    return best == SIZE_MAX ? 0 : best;
}

DecodeResult closest_codeword(const LinearCode &code, const BitString &received) {
    if (received.size() != code.n()) {
        throw std::invalid_argument("closest_codeword: received word has wrong length");
    }
    size_t k = code.k();
    if (k > kMaxEnumerableDimension) {
        throw std::invalid_argument("closest_codeword: k exceeds the enumeration budget");
    }
    const auto &rows = code.generator();
    // Gray code over message indices; row j is message bit j, the (k-1-j)-th
    // bit of the integer form.
    BitString diff = received;
    uint64_t gray = 0;
    size_t best_distance = diff.weight();
    uint64_t best_message = 0;
    uint64_t total = uint64_t{1} << k;
    for (uint64_t i = 1; i < total; i++) {
        int bit = std::countr_zero(i);
        gray ^= uint64_t{1} << bit;
        diff ^= rows[k - 1 - bit];
        size_t dist = diff.weight();
        if (dist < best_distance || (dist == best_distance && gray < best_message)) {
            best_distance = dist;
            best_message = gray;
        }
    }
    return DecodeResult{BitString::from_uint(best_message, k), best_distance};
}

std::optional<DecodeResult> nearest_codeword(const LinearCode &code, const BitString &received, size_t radius) {
    if (code.d() == 0 || 2 * radius > code.d() - 1) {
        throw std::invalid_argument(
            "nearest_codeword: radius " + std::to_string(radius) + " exceeds (d-1)/2 for d=" +
            std::to_string(code.d()) + "; uniqueness not guaranteed");
    }
    DecodeResult best = closest_codeword(code, received);
    if (best.distance > radius) {
        return std::nullopt;
    }
    return best;
}

bool gv_feasible(double rate) {
    if (!(rate >= 0)) {
        return false;
    }
    if (rate >= 0.25) {
        return false;
    }
    return rate < 1.0 - binary_entropy(4 * rate);
}

size_t griesmer_length(size_t k, size_t d) {
    size_t total = 0;
    for (size_t i = 0; i < k; i++) {
        if (i >= 63) {
            total += 1;
            continue;
        }
        uint64_t p = uint64_t{1} << i;
        total += (d + p - 1) / p;
    }
    return total;
}

std::optional<LinearCode> search_random_code(size_t n, size_t k, size_t d_target, Rng &rng, size_t max_attempts) {
    if (k == 0 || k > n) {
        throw std::invalid_argument("search_random_code: need 0 < k <= n");
    }
    if (k > kMaxEnumerableDimension) {
        throw std::invalid_argument("search_random_code: k exceeds the enumeration budget");
    }
    if (max_attempts == 0) {
        throw std::invalid_argument("search_random_code: max_attempts must be at least 1");
    }
    if (griesmer_length(k, d_target) > n) {
        return std::nullopt;
    }
    for (size_t attempt = 0; attempt < max_attempts; attempt++) {
        std::vector<BitString> rows;
        rows.reserve(k);
        for (size_t i = 0; i < k; i++) {
            rows.push_back(sample_uniform(n, rng));
        }
        if (gf2_rank(rows) != k) {
            continue;
        }
        size_t d = min_distance(rows);
        if (d >= d_target) {
            return LinearCode::from_generator(std::move(rows));
        }
    }
    return std::nullopt;
}

LinearCode read_code(std::istream &in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') {
            continue;
        }
        size_t b = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(a, b - a + 1));
    }
    if (lines.empty()) {
        throw std::invalid_argument("code file: missing header");
    }
    std::istringstream header(lines[0]);
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;
    if (!(header >> n >> k >> d)) {
        throw std::invalid_argument("code file: header must be 'n k d'");
    }
    if (lines.size() - 1 != k) {
        throw std::invalid_argument(
            "code file: header says k=" + std::to_string(k) + " but found " + std::to_string(lines.size() - 1) +
            " rows");
    }
    std::vector<BitString> rows;
    for (size_t i = 1; i < lines.size(); i++) {
        BitString row = BitString::from_string(lines[i]);
        if (row.size() != n) {
            throw std::invalid_argument("code file: row " + std::to_string(i) + " does not have n bits");
        }
        rows.push_back(std::move(row));
    }
    return LinearCode::with_certified_distance(std::move(rows), d);
}

void write_code(std::ostream &out, const LinearCode &code) {
    out << code.n() << " " << code.k() << " " << code.d() << "\n";
    for (const auto &row : code.generator()) {
        out << row.to_string() << "\n";
    }
}

LinearCode load_code(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open code file '" + path + "'");
    }
    return read_code(in);
}

void save_code(const std::string &path, const LinearCode &code) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write code file '" + path + "'");
    }
    write_code(out, code);
}

}  // namespace ebc
