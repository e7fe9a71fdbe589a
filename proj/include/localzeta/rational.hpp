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

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace localzeta {

using Rat = mpq_class;

struct arithmetic_error : std::runtime_error {
    explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// q^e for integer e of either sign.
inline Rat rat_pow(long base, long e) {
    if (base == 0) throw arithmetic_error("rat_pow: zero base");
    mpz_class b(base);
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rat(p);
    Rat r(1, p);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat acc(1);
    Rat b = e < 0 ? Rat(1) / base : base;
    long n = e < 0 ? -e : e;
    for (long i = 0; i < n; ++i) acc *= b;
    return acc;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Integer square root test; returns root when q is a perfect square.
inline bool perfect_square(long q, long& root) {
    if (q < 0) return false;
    mpz_class z(q), r;
    if (mpz_perfect_square_p(z.get_mpz_t())) {
        mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
        root = r.get_si();
        return true;
    }
    return false;
}

}  // namespace localzeta
