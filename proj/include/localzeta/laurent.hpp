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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "coeff.hpp"

namespace localzeta {

/// Laurent polynomial in t with CoeffElement coefficients.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    explicit LaurentPoly(SessionPtr s) : sess_(std::move(s)), lo_(0) {}

    static LaurentPoly zero(SessionPtr s) { return LaurentPoly(std::move(s)); }

    static LaurentPoly constant(const CoeffElement& c) {
        LaurentPoly p(c.session());
        if (!c.is_zero()) p.c_.push_back(c);
        return p;
    }

    static LaurentPoly monomial(const CoeffElement& c, long e) {
        LaurentPoly p = constant(c);
        p.lo_ = p.c_.empty() ? 0 : e;
        return p;
    }

    const SessionPtr& session() const { return sess_; }
    bool is_zero() const { return c_.empty(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    size_t size() const { return c_.size(); }

    CoeffElement coeff(long e) const {
        if (c_.empty() || e < lo_ || e > hi()) return sess_->zero();
        return c_[static_cast<size_t>(e - lo_)];
    }

    bool is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0].is_one(); }

    LaurentPoly shifted(long e) const {
        LaurentPoly p = *this;
        if (!p.c_.empty()) p.lo_ += e;
        return p;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.c_.empty()) return b;
        if (b.c_.empty()) return a;
        long lo = std::min(a.lo_, b.lo_);
        long hi = std::max(a.hi(), b.hi());
        LaurentPoly r(a.sess_);
        r.lo_ = lo;
        r.c_.assign(static_cast<size_t>(hi - lo + 1), a.sess_->zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[a.lo_ - lo + i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[b.lo_ - lo + i] += b.c_[i];
        r.trim();
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return LaurentPoly(a.sess_ ? a.sess_ : b.sess_);
        LaurentPoly r(a.sess_);
        r.lo_ = a.lo_ + b.lo_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, a.sess_->zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    LaurentPoly scaled(const CoeffElement& k) const {
        if (k.is_zero()) return LaurentPoly(sess_);
        LaurentPoly r = *this;
        for (auto& c : r.c_) c = c * k;
        r.trim();
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.c_.empty() && b.c_.empty()) return true;
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    CoeffElement eval(const CoeffElement& t0) const {
        if (c_.empty()) return sess_->zero();
        CoeffElement acc = sess_->zero();
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t0 + c_[i];
        if (lo_ != 0) acc = acc * t0.pow(lo_);
        return acc;
    }

    std::complex<double> eval(std::complex<double> t0) const {
        std::complex<double> acc(0.0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t0 + c_[i].embed();
        return acc * std::pow(t0, static_cast<double>(lo_));
    }

    CoeffElement value_at_one() const {
        CoeffElement acc = sess_->zero();
        for (const auto& c : c_) acc += c;
        return acc;
    }

    /// Order of vanishing at t = 1 together with the deflated polynomial
    /// (this = (1-t)^k * deflated, deflated(1) != 0). Zero input is an error.
    std::pair<long, LaurentPoly> factor_one_minus_t() const {
        if (c_.empty()) throw arithmetic_error("order at 1 of the zero polynomial");
        LaurentPoly cur = *this;
        long k = 0;
        while (cur.value_at_one().is_zero()) {
            cur = cur.divide_by_one_minus_t();
            ++k;
        }
        return {k, cur};
    }

    /// Exact division by an arbitrary nonzero polynomial; nullopt when the
    /// remainder is nonzero. Requires the divisor's leading coefficient to be
    /// invertible.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& den) const {
        if (den.is_zero()) throw arithmetic_error("division by the zero polynomial");
        if (is_zero()) return LaurentPoly(sess_);
        if (c_.size() < den.c_.size()) return std::nullopt;
        CoeffElement lead_inv = den.c_.back().inverse();
        std::vector<CoeffElement> rem = c_;
        size_t qn = c_.size() - den.c_.size() + 1;
        std::vector<CoeffElement> quot(qn, sess_->zero());
        for (size_t ii = c_.size(); ii > den.c_.size() - 1; --ii) {
            size_t i = ii - 1;
            CoeffElement f = rem[i] * lead_inv;
            quot[i - (den.c_.size() - 1)] = f;
            if (!f.is_zero())
                for (size_t j = 0; j < den.c_.size(); ++j)
                    rem[i - (den.c_.size() - 1) + j] -= f * den.c_[j];
        }
        for (size_t j = 0; j + 1 < den.c_.size(); ++j)
            if (!rem[j].is_zero()) return std::nullopt;
        LaurentPoly q(sess_);
        q.lo_ = lo_ - den.lo_;
        q.c_ = std::move(quot);
        q.trim();
        return q;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s = "t^" + std::to_string(lo_) + "*(";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += " ";
            s += c_[i].str();
        }
        s += ")";
        return s;
    }

  private:
    LaurentPoly divide_by_one_minus_t() const {
        // p = (1-t) q with p(1) = 0: q_i is the running prefix sum of p.
        LaurentPoly q(sess_);
        q.lo_ = lo_;
        q.c_.assign(c_.size() - 1, sess_->zero());
        CoeffElement acc = sess_->zero();
        for (size_t i = 0; i + 1 < c_.size(); ++i) {
            acc += c_[i];
            q.c_[i] = acc;
        }
        q.trim();
        return q;
    }

    void trim() {
        size_t a = 0, b = c_.size();
        while (b > a && c_[b - 1].is_zero()) --b;
        while (a < b && c_[a].is_zero()) ++a;
        if (a > 0 || b < c_.size()) {
            std::vector<CoeffElement> nc(c_.begin() + a, c_.begin() + b);
            c_ = std::move(nc);
            lo_ += static_cast<long>(a);
        }
        if (c_.empty()) lo_ = 0;
    }

    SessionPtr sess_;
    long lo_ = 0;
    std::vector<CoeffElement> c_;
};

/// Monic gcd over the coefficient ring (Euclid). Stops with an error if a
/// leading coefficient fails to invert, which only happens in sessions where
/// the ring has zero divisors.
inline LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    a = a.shifted(-a.lo());
    b = b.shifted(-b.lo());
    while (!b.is_zero()) {
        // remainder of a by b
        CoeffElement lead_inv = b.coeff(b.hi()).inverse();
        LaurentPoly r = a;
        while (!r.is_zero() && r.hi() >= b.hi()) {
            CoeffElement f = r.coeff(r.hi()) * lead_inv;
            r -= b.shifted(r.hi() - b.hi()).scaled(f);
        }
        a = b;
        b = r.shifted(r.is_zero() ? 0 : -r.lo());
    }
    if (a.is_zero()) return a;
    return a.scaled(a.coeff(a.hi()).inverse());
}

}  // namespace localzeta
