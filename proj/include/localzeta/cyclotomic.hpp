/*
   Copyright 2026 The localzeta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <vector>

#include "rational.hpp"

namespace localzeta {

/// Power-basis data for Q(zeta_N): the N-th cyclotomic polynomial and a
/// reduction table expressing x^k, k < 2N, in the basis 1, x, ..., x^{phi(N)-1}.
class CycloBasis {
  public:
    explicit CycloBasis(unsigned N) : N_(N) {
        if (N == 0) throw input_error("cyclotomic order must be positive");
        phi_ = build_cyclotomic(N, poly_);
        build_reduction();
    }

    unsigned order() const { return N_; }
    unsigned degree() const { return phi_; }

    /// Coordinates of x^k (k < 2N) in the power basis.
    const std::vector<Rat>& reduce_power(unsigned k) const { return table_[k]; }

  private:
    // Phi_N by iterated exact division of x^N - 1 by Phi_d for proper divisors d.
    static unsigned build_cyclotomic(unsigned N, std::vector<Rat>& out) {
        std::vector<std::vector<Rat>> phis(N + 1);
        for (unsigned n = 1; n <= N; ++n) {
            std::vector<Rat> num(n + 1, Rat(0));
            num[0] = -1;
            num[n] = 1;
            for (unsigned d = 1; d < n; ++d) {
                if (n % d != 0) continue;
                num = divide_exact(num, phis[d]);
            }
            phis[n] = num;
        }
        out = phis[N];
        return static_cast<unsigned>(out.size() - 1);
    }

    static std::vector<Rat> divide_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
        const size_t dd = den.size() - 1;
        std::vector<Rat> quot(num.size() - dd, Rat(0));
        for (size_t i = num.size(); i-- > dd;) {
            Rat c = num[i] / den[dd];
            quot[i - dd] = c;
            if (c != 0)
                for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        return quot;
    }

    void build_reduction() {
        table_.assign(2 * N_, std::vector<Rat>(phi_, Rat(0)));
        for (unsigned k = 0; k < phi_; ++k) table_[k][k] = 1;
        for (unsigned k = phi_; k < 2 * N_; ++k) {
            // x^k = x * x^{k-1}; reduce the top coefficient with Phi_N.
            std::vector<Rat> v(phi_ + 1, Rat(0));
            const auto& prev = table_[k - 1];
            for (unsigned i = 0; i < phi_; ++i) v[i + 1] = prev[i];
            Rat top = v[phi_];
            if (top != 0)
                for (unsigned j = 0; j < phi_; ++j) v[j] -= top * poly_[j];
            v.resize(phi_);
            table_[k] = std::move(v);
        }
    }

    unsigned N_;
    unsigned phi_;
    std::vector<Rat> poly_;
    std::vector<std::vector<Rat>> table_;
};

}  // namespace localzeta
