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

#include <cmath>
#include <complex>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "rational.hpp"

namespace localzeta {

class CoeffElement;

/// One arithmetic session: the coefficient ring Q(zeta_N)[u]/(u^2 - 1/q).
/// When q is a perfect square, u collapses to the rational 1/sqrt(q) and
/// elements are kept with an identically zero u-part.
class Session : public std::enable_shared_from_this<Session> {
  public:
    static std::shared_ptr<const Session> make(long q, unsigned N) {
        if (q < 2) throw input_error("residue cardinality q must be >= 2");
        return std::shared_ptr<const Session>(new Session(q, N));
    }

    long q() const { return q_; }
    unsigned N() const { return N_; }
    unsigned degree() const { return basis_.degree(); }
    bool u_is_rational() const { return u_rat_.has_value(); }
    const Rat& u_rational() const { return *u_rat_; }
    const CycloBasis& basis() const { return basis_; }
    const Rat& inv_q() const { return inv_q_; }

    bool same(const Session& other) const { return q_ == other.q_ && N_ == other.N_; }

    CoeffElement zero() const;
    CoeffElement one() const;
    CoeffElement rational(const Rat& r) const;
    CoeffElement rational(long r) const;
    /// zeta_N^k (any integer k).
    CoeffElement zeta_pow(long k) const;
    /// u^e (any integer e); u^2 = 1/q, u^{-1} = q*u.
    CoeffElement u_pow(long e) const;
    /// q^e as a ring element.
    CoeffElement q_pow(long e) const;
    CoeffElement from_parts(std::vector<Rat> p0, std::vector<Rat> p1) const;

  private:
    Session(long q, unsigned N) : q_(q), N_(N), basis_(N), inv_q_(Rat(1, q)) {
        inv_q_.canonicalize();
        long root = 0;
        if (perfect_square(q, root)) {
            Rat r(1, root);
            r.canonicalize();
            u_rat_ = r;
        }
    }

    long q_;
    unsigned N_;
    CycloBasis basis_;
    Rat inv_q_;
    std::optional<Rat> u_rat_;
};

using SessionPtr = std::shared_ptr<const Session>;

/// Exact scalar a + b*u with a, b in Q(zeta_N), in the reduced power basis.
class CoeffElement {
  public:
    CoeffElement() = default;

    CoeffElement(SessionPtr s, std::vector<Rat> p0, std::vector<Rat> p1)
        : sess_(std::move(s)), p0_(std::move(p0)), p1_(std::move(p1)) {
        fold_rational_u();
    }

    const SessionPtr& session() const { return sess_; }
    const std::vector<Rat>& cyclo_part_0() const { return p0_; }
    const std::vector<Rat>& cyclo_part_1() const { return p1_; }

    bool is_zero() const {
        for (const auto& c : p0_)
            if (c != 0) return false;
        for (const auto& c : p1_)
            if (c != 0) return false;
        return true;
    }

    bool is_one() const {
        if (p0_.empty() || p0_[0] != 1) return false;
        for (size_t i = 1; i < p0_.size(); ++i)
            if (p0_[i] != 0) return false;
        for (const auto& c : p1_)
            if (c != 0) return false;
        return true;
    }

    /// Purely rational value, if the element lies in Q.
    std::optional<Rat> as_rational() const {
        for (size_t i = 1; i < p0_.size(); ++i)
            if (p0_[i] != 0) return std::nullopt;
        for (const auto& c : p1_)
            if (c != 0) return std::nullopt;
        return p0_.empty() ? Rat(0) : p0_[0];
    }

    friend CoeffElement operator+(const CoeffElement& a, const CoeffElement& b) {
        check_mix(a, b);
        CoeffElement r = a;
        for (size_t i = 0; i < r.p0_.size(); ++i) r.p0_[i] += b.p0_[i];
        for (size_t i = 0; i < r.p1_.size(); ++i) r.p1_[i] += b.p1_[i];
        return r;
    }

    friend CoeffElement operator-(const CoeffElement& a, const CoeffElement& b) {
        check_mix(a, b);
        CoeffElement r = a;
        for (size_t i = 0; i < r.p0_.size(); ++i) r.p0_[i] -= b.p0_[i];
        for (size_t i = 0; i < r.p1_.size(); ++i) r.p1_[i] -= b.p1_[i];
        return r;
    }

    CoeffElement operator-() const {
        CoeffElement r = *this;
        for (auto& c : r.p0_) c = -c;
        for (auto& c : r.p1_) c = -c;
        return r;
    }

    friend CoeffElement operator*(const CoeffElement& a, const CoeffElement& b) {
        check_mix(a, b);
        const auto& basis = a.sess_->basis();
        // (a0 + a1 u)(b0 + b1 u) = a0 b0 + (1/q) a1 b1 + (a0 b1 + a1 b0) u
        std::vector<Rat> r0 = cyclo_mul(basis, a.p0_, b.p0_);
        std::vector<Rat> cross = cyclo_mul(basis, a.p1_, b.p1_);
        const Rat& iq = a.sess_->inv_q();
        for (size_t i = 0; i < r0.size(); ++i) r0[i] += iq * cross[i];
        std::vector<Rat> r1 = cyclo_mul(basis, a.p0_, b.p1_);
        std::vector<Rat> r1b = cyclo_mul(basis, a.p1_, b.p0_);
        for (size_t i = 0; i < r1.size(); ++i) r1[i] += r1b[i];
        return CoeffElement(a.sess_, std::move(r0), std::move(r1));
    }

    CoeffElement& operator+=(const CoeffElement& b) { return *this = *this + b; }
    CoeffElement& operator-=(const CoeffElement& b) { return *this = *this - b; }
    CoeffElement& operator*=(const CoeffElement& b) { return *this = *this * b; }

    friend bool operator==(const CoeffElement& a, const CoeffElement& b) {
        check_mix(a, b);
        return a.p0_ == b.p0_ && a.p1_ == b.p1_;
    }
    friend bool operator!=(const CoeffElement& a, const CoeffElement& b) { return !(a == b); }

    /// Multiplicative inverse; throws on zero and on the zero divisors that can
    /// occur when u^2 - 1/q is reducible over Q(zeta_N).
    CoeffElement inverse() const {
        if (is_zero()) throw arithmetic_error("inversion of zero");
        const unsigned d = sess_->degree();
        const bool flat = sess_->u_is_rational();
        const unsigned n = flat ? d : 2 * d;
        // Columns: this * basis_j, basis = {zeta^i} then {zeta^i u}.
        std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
        for (unsigned j = 0; j < n; ++j) {
            std::vector<Rat> e0(d, Rat(0)), e1(d, Rat(0));
            if (j < d)
                e0[j] = 1;
            else
                e1[j - d] = 1;
            CoeffElement col = *this * CoeffElement(sess_, std::move(e0), std::move(e1));
            for (unsigned i = 0; i < d; ++i) M[i][j] = col.p0_[i];
            if (!flat)
                for (unsigned i = 0; i < d; ++i) M[d + i][j] = col.p1_[i];
        }
        std::vector<Rat> rhs(n, Rat(0));
        rhs[0] = 1;
        std::vector<Rat> sol;
        if (!solve_linear(M, rhs, sol)) throw arithmetic_error("element is not invertible");
        std::vector<Rat> s0(sol.begin(), sol.begin() + d);
        std::vector<Rat> s1 = flat ? std::vector<Rat>(d, Rat(0))
                                   : std::vector<Rat>(sol.begin() + d, sol.end());
        return CoeffElement(sess_, std::move(s0), std::move(s1));
    }

    friend CoeffElement operator/(const CoeffElement& a, const CoeffElement& b) {
        return a * b.inverse();
    }

    /// Complex conjugation: zeta -> zeta^{-1}, u fixed.
    CoeffElement conj() const {
        const auto& basis = sess_->basis();
        const unsigned N = sess_->N();
        const unsigned d = sess_->degree();
        std::vector<Rat> q0(d, Rat(0)), q1(d, Rat(0));
        for (unsigned i = 0; i < d; ++i) {
            unsigned k = (i == 0) ? 0 : N - i;
            if (p0_[i] != 0) {
                const auto& row = basis.reduce_power(k);
                for (unsigned j = 0; j < d; ++j) q0[j] += p0_[i] * row[j];
            }
            if (p1_[i] != 0) {
                const auto& row = basis.reduce_power(k);
                for (unsigned j = 0; j < d; ++j) q1[j] += p1_[i] * row[j];
            }
        }
        return CoeffElement(sess_, std::move(q0), std::move(q1));
    }

    /// zeta_N -> exp(2 pi i / N), u -> q^{-1/2}.
    std::complex<double> embed() const {
        const unsigned N = sess_->N();
        std::complex<double> a(0.0), b(0.0);
        for (size_t i = 0; i < p0_.size(); ++i) {
            double ang = 2.0 * M_PI * static_cast<double>(i) / N;
            std::complex<double> z(std::cos(ang), std::sin(ang));
            a += p0_[i].get_d() * z;
            b += p1_[i].get_d() * z;
        }
        double unum = sess_->u_is_rational() ? sess_->u_rational().get_d()
                                             : 1.0 / std::sqrt(static_cast<double>(sess_->q()));
        return a + b * unum;
    }

    double modulus() const { return std::abs(embed()); }

    CoeffElement pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CoeffElement acc = sess_->one();
        CoeffElement b = *this;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return acc;
    }

    /// Deterministic text form, used in reports and as a map key.
    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < p0_.size(); ++i) {
            if (i) os << ",";
            os << p0_[i].get_str();
        }
        os << "|";
        for (size_t i = 0; i < p1_.size(); ++i) {
            if (i) os << ",";
            os << p1_[i].get_str();
        }
        os << "]";
        return os.str();
    }

  private:
    static void check_mix(const CoeffElement& a, const CoeffElement& b) {
        if (!a.sess_ || !b.sess_) throw arithmetic_error("uninitialized coefficient");
        if (!a.sess_->same(*b.sess_))
            throw arithmetic_error("operands from different (q, N) sessions");
    }

    static std::vector<Rat> cyclo_mul(const CycloBasis& basis, const std::vector<Rat>& a,
                                      const std::vector<Rat>& b) {
        const unsigned d = basis.degree();
        std::vector<Rat> out(d, Rat(0));
        for (unsigned i = 0; i < d; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; j < d; ++j) {
                if (b[j] == 0) continue;
                Rat prod = a[i] * b[j];
                unsigned k = i + j;
                if (k < d) {
                    out[k] += prod;
                } else {
                    const auto& row = basis.reduce_power(k);
                    for (unsigned t = 0; t < d; ++t)
                        if (row[t] != 0) out[t] += prod * row[t];
                }
            }
        }
        return out;
    }

    static bool solve_linear(std::vector<std::vector<Rat>>& M, std::vector<Rat>& rhs,
                             std::vector<Rat>& sol) {
        const size_t n = M.size();
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && M[piv][col] == 0) ++piv;
            if (piv == n) return false;
            std::swap(M[piv], M[col]);
            std::swap(rhs[piv], rhs[col]);
            Rat inv = Rat(1) / M[col][col];
            for (size_t j = col; j < n; ++j) M[col][j] *= inv;
            rhs[col] *= inv;
            for (size_t i = 0; i < n; ++i) {
                if (i == col || M[i][col] == 0) continue;
                Rat f = M[i][col];
                for (size_t j = col; j < n; ++j) M[i][j] -= f * M[col][j];
                rhs[i] -= f * rhs[col];
            }
        }
        sol = rhs;
        return true;
    }

    // Canonical form: with rational u the u-part is folded into the base field.
    void fold_rational_u() {
        if (!sess_ || !sess_->u_is_rational()) return;
        const Rat& ur = sess_->u_rational();
        for (size_t i = 0; i < p1_.size(); ++i) {
            if (p1_[i] != 0) {
                p0_[i] += ur * p1_[i];
                p1_[i] = 0;
            }
        }
    }

    SessionPtr sess_;
    std::vector<Rat> p0_, p1_;
};

inline CoeffElement Session::zero() const {
    const unsigned d = degree();
    return CoeffElement(shared_from_this(), std::vector<Rat>(d, Rat(0)),
                        std::vector<Rat>(d, Rat(0)));
}

inline CoeffElement Session::one() const { return rational(Rat(1)); }

inline CoeffElement Session::rational(const Rat& r) const {
    const unsigned d = degree();
    std::vector<Rat> p0(d, Rat(0)), p1(d, Rat(0));
    p0[0] = r;
    return CoeffElement(shared_from_this(), std::move(p0), std::move(p1));
}

inline CoeffElement Session::rational(long r) const { return rational(Rat(r)); }

inline CoeffElement Session::zeta_pow(long k) const {
    const unsigned d = degree();
    long m = k % static_cast<long>(N_);
    if (m < 0) m += N_;
    std::vector<Rat> p0(d, Rat(0)), p1(d, Rat(0));
    const auto& row = basis_.reduce_power(static_cast<unsigned>(m));
    for (unsigned j = 0; j < d; ++j) p0[j] = row[j];
    return CoeffElement(shared_from_this(), std::move(p0), std::move(p1));
}

inline CoeffElement Session::q_pow(long e) const { return rational(rat_pow(q_, e)); }

inline CoeffElement Session::u_pow(long e) const {
    // u^{2k} = q^{-k}; u^{2k+1} = q^{-k} u; u^{-1} = q u.
    long k = (e >= 0) ? e / 2 : -((-e + 1) / 2);
    long r = e - 2 * k;  // 0 or 1
    Rat scale = rat_pow(q_, -k);
    const unsigned d = degree();
    std::vector<Rat> p0(d, Rat(0)), p1(d, Rat(0));
    if (r == 0)
        p0[0] = scale;
    else
        p1[0] = scale;
    return CoeffElement(shared_from_this(), std::move(p0), std::move(p1));
}

inline CoeffElement Session::from_parts(std::vector<Rat> p0, std::vector<Rat> p1) const {
    if (p0.size() != degree() || p1.size() != degree())
        throw input_error("coefficient vectors must have length phi(N)");
    return CoeffElement(shared_from_this(), std::move(p0), std::move(p1));
}

/// k_arith entry point matching the operation table; binary ops use (a, b),
/// unary ops act on a.
enum class KOp { add, mul, inv, conj };

inline CoeffElement k_arith(const CoeffElement& a, const CoeffElement& b, KOp op) {
    switch (op) {
        case KOp::add:
            return a + b;
        case KOp::mul:
            return a * b;
        case KOp::inv:
            return a.inverse();
        case KOp::conj:
            return a.conj();
    }
    throw input_error("unknown k_arith op");
}

}  // namespace localzeta
