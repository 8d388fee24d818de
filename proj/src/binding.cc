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

#include "ebc/binding.h"

#include <bit>
#include <stdexcept>
#include <vector>

#include "ebc/extractor.h"

namespace ebc {

namespace {

// Strings of length n <= 20 as integers, position 0 at the most significant bit.
uint32_t pack(const BitString &b) {
    return static_cast<uint32_t>(b.to_uint());
}

struct Tables {
    size_t n = 0;
    size_t k = 0;
    size_t threshold = 0;
    std::vector<uint32_t> codewords;
    std::vector<uint32_t> patterns;
    /// ext[s][x] for every seed s.
    std::vector<std::vector<uint32_t>> ext;
};

void enumerate_patterns(size_t n, size_t budget, size_t start, uint32_t acc, std::vector<uint32_t> &out) {
    out.push_back(acc);
    if (budget == 0) {
        return;
    }
    for (size_t i = start; i < n; i++) {
        enumerate_patterns(n, budget - 1, i + 1, acc | (uint32_t{1} << i), out);
    }
}

Tables build(const ProtocolParams &params, const LinearCode &code, size_t budget, std::optional<size_t> override_thr) {
    if (code.n() > kMaxBindingLength || code.k() > kMaxBindingDimension) {
        throw std::invalid_argument("binding search limited to n <= 20 and k <= 4");
    }
    if (params.ell == 0 || params.ell > code.k()) {
        throw std::invalid_argument("binding search needs 0 < ell <= k");
    }
    if (code.n() != params.n || code.k() != params.k) {
        throw std::invalid_argument("binding search: code does not match parameters");
    }
    Tables t;
    t.n = code.n();
    t.k = code.k();
    t.threshold = override_thr.value_or(params.accept_threshold());
    for (uint64_t x = 0; x < (uint64_t{1} << t.k); x++) {
        t.codewords.push_back(pack(code.encode(BitString::from_uint(x, t.k))));
    }
    enumerate_patterns(t.n, std::min(budget, t.n), 0, 0, t.patterns);
    size_t seed_bits = t.k + params.ell - 1;
    for (uint64_t s = 0; s < (uint64_t{1} << seed_bits); s++) {
        ToeplitzSeed seed(BitString::from_uint(s, seed_bits), t.k, params.ell);
        std::vector<uint32_t> row;
        for (uint64_t x = 0; x < (uint64_t{1} << t.k); x++) {
            row.push_back(static_cast<uint32_t>(extract(BitString::from_uint(x, t.k), seed).to_uint()));
        }
        t.ext.push_back(std::move(row));
    }
    return t;
}

size_t closest(const Tables &t, uint32_t y) {
    size_t best = 0;
    int best_d = std::popcount(y ^ t.codewords[0]);
    for (size_t x = 1; x < t.codewords.size(); x++) {
        int d = std::popcount(y ^ t.codewords[x]);
        if (d < best_d) {
            best_d = d;
            best = x;
        }
    }
    return best;
}

}  // namespace

BindingResult binding_attack_exhaustive(
    const ProtocolParams &params, const LinearCode &code, size_t budget, std::optional<size_t> threshold_override) {
    Tables t = build(params, code, budget, threshold_override);
    BindingResult out;
    out.threshold = t.threshold;
    out.flip_patterns = t.patterns.size();
    size_t messages = t.codewords.size();
    // Pairs of messages some seed separates.
    std::vector<int> separating_seed(messages * messages, -1);
    for (size_t a = 0; a < messages; a++) {
        for (size_t b = 0; b < messages; b++) {
            for (size_t s = 0; s < t.ext.size(); s++) {
                if (t.ext[s][a] != t.ext[s][b]) {
                    separating_seed[a * messages + b] = static_cast<int>(s);
                    break;
                }
            }
        }
    }
    int thr = static_cast<int>(t.threshold);
    for (uint64_t y = 0; y < (uint64_t{1} << t.n); y++) {
        uint32_t committed = static_cast<uint32_t>(y);
        size_t sim = closest(t, committed);
        for (uint32_t e : t.patterns) {
            uint32_t seen = committed ^ e;
            for (size_t x = 0; x < messages; x++) {
                out.strategies += t.ext.size();
                if (std::popcount(seen ^ t.codewords[x]) > thr) {
                    continue;
                }
                int s = separating_seed[x * messages + sim];
                if (s < 0) {
                    continue;
                }
                out.max_probability = 1.0;
                if (!out.witness) {
                    size_t seed_bits = t.k + params.ell - 1;
                    out.witness = Equivocation{
                        BitString::from_uint(committed, t.n),
                        BitString::from_uint(e, t.n),
                        BitString::from_uint(x, t.k),
                        BitString::from_uint(sim, t.k),
                        BitString::from_uint(static_cast<uint64_t>(s), seed_bits),
                    };
                }
            }
        }
    }
    return out;
}

WeakBindingResult weak_binding_sum(
    const ProtocolParams &params, const LinearCode &code, size_t budget, std::optional<size_t> threshold_override) {
    Tables t = build(params, code, budget, threshold_override);
    WeakBindingResult out;
    out.threshold = t.threshold;
    int thr = static_cast<int>(t.threshold);
    size_t messages = t.codewords.size();
    std::vector<bool> openable(messages);
    for (uint64_t y = 0; y < (uint64_t{1} << t.n); y++) {
        uint32_t committed = static_cast<uint32_t>(y);
        for (size_t x = 0; x < messages; x++) {
            openable[x] = false;
            for (uint32_t e : t.patterns) {
                if (std::popcount((committed ^ e) ^ t.codewords[x]) <= thr) {
                    openable[x] = true;
                    break;
                }
            }
        }
        for (const auto &row : t.ext) {
            uint64_t values = 0;
            for (size_t x = 0; x < messages; x++) {
                if (openable[x]) {
                    values |= uint64_t{1} << row[x];
                }
            }
            double sum = static_cast<double>(std::popcount(values));
            if (sum > out.max_sum) {
                out.max_sum = sum;
            }
        }
    }
    return out;
}

}  // namespace ebc
