/*
   Copyright 2026 The mosls Authors

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

// Exact and numeric spectra, and the closed-form spectra of strongly regular graphs, of the
// block quotient matrix, and of MOSLS graphs whose MOLS part commutes with the block edges.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace mosls {

// ---------------------------------------------------------------------------------------------
// Closed-form spectra
// ---------------------------------------------------------------------------------------------

/// (a + b*sqrt(d)) / den. Integers and rationals have b == 0; surds have d > 1 not a perfect square.
struct ClosedEigenvalue {
    long long a = 0;
    long long b = 0;
    long long d = 0;
    long long den = 1;

    static ClosedEigenvalue integer(long long k) { return {k, 0, 0, 1}; }
    static ClosedEigenvalue rational(long long num, long long den) {
        if (den == 0) throw DomainError("zero denominator");
        if (den < 0) num = -num, den = -den;
        const long long g = std::gcd(num, den);
        return {num / g, 0, 0, den / g};
    }
    static ClosedEigenvalue surd(long long a, long long b, long long d, long long den) {
        if (den == 0) throw DomainError("zero denominator");
        if (b == 0) return rational(a, den);
        const auto s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(d))));
        if (d < 0) throw DomainError("negative radicand");
        if (s * s == d) return rational(a + b * s, den);
        if (den < 0) a = -a, b = -b, den = -den;
        const long long g = std::gcd(std::gcd(a, b), den);
        return {a / g, b / g, d, den / g};
    }

    bool is_surd() const noexcept { return b != 0; }
    bool is_integer() const noexcept { return b == 0 && den == 1; }
    ClosedEigenvalue conjugate() const { return {a, -b, d, den}; }
    long double value() const {
        return (static_cast<long double>(a) + static_cast<long double>(b) * std::sqrt(static_cast<long double>(d))) /
               static_cast<long double>(den);
    }

    std::string to_string() const {
        std::string num = std::to_string(a);
        if (b != 0) {
            num = (a != 0 ? std::to_string(a) : std::string()) + (b < 0 ? "-" : (a != 0 ? "+" : "")) +
                  (std::llabs(b) != 1 ? std::to_string(std::llabs(b)) : std::string()) + "sqrt(" + std::to_string(d) + ")";
            if (den != 1) num = "(" + num + ")";
        }
        return den == 1 ? num : num + "/" + std::to_string(den);
    }

    friend bool operator==(const ClosedEigenvalue&, const ClosedEigenvalue&) = default;
};

struct ClosedSpectrumEntry {
    ClosedEigenvalue value;
    long long multiplicity = 0;

    friend bool operator==(const ClosedSpectrumEntry&, const ClosedSpectrumEntry&) = default;
};

/// Eigenvalues with multiplicities, sorted by decreasing value, equal values merged and zero
/// multiplicities dropped.
class ClosedSpectrum {
public:
    ClosedSpectrum() = default;
    explicit ClosedSpectrum(std::vector<ClosedSpectrumEntry> entries) {
        for (const auto& e : entries) {
            if (e.multiplicity < 0) throw DomainError("negative multiplicity for eigenvalue " + e.value.to_string());
            if (e.multiplicity == 0) continue;
            auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto& x) { return x.value == e.value; });
            if (it != entries_.end()) it->multiplicity += e.multiplicity;
            else entries_.push_back(e);
        }
        std::stable_sort(entries_.begin(), entries_.end(),
                         [](const auto& x, const auto& y) { return x.value.value() > y.value.value(); });
    }

    const std::vector<ClosedSpectrumEntry>& entries() const noexcept { return entries_; }
    long long dimension() const {
        long long s = 0;
        for (const auto& e : entries_) s += e.multiplicity;
        return s;
    }
    long long multiplicity_of(const ClosedEigenvalue& v) const {
        for (const auto& e : entries_)
            if (e.value == v) return e.multiplicity;
        return 0;
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t k = 0; k < entries_.size(); ++k)
            s += (k ? ", " : "") + entries_[k].value.to_string() + "^" + std::to_string(entries_[k].multiplicity);
        return s + "}";
    }

    friend bool operator==(const ClosedSpectrum&, const ClosedSpectrum&) = default;

private:
    std::vector<ClosedSpectrumEntry> entries_;
};

/// Integer eigenvalue list {value^mult, ...}.
inline ClosedSpectrum integer_spectrum(std::initializer_list<std::pair<long long, long long>> values) {
    std::vector<ClosedSpectrumEntry> e;
    for (auto [v, m] : values) e.push_back({ClosedEigenvalue::integer(v), m});
    return ClosedSpectrum(std::move(e));
}

/// prod (t - lambda)^m. Surds must come with their conjugate at equal multiplicity and must be
/// algebraic integers; a pair contributes t^2 - (2a/den) t + (a^2 - b^2 d)/den^2.
inline IntPolynomial closed_to_poly(const ClosedSpectrum& S) {
    IntPolynomial out{1};
    for (const auto& e : S.entries()) {
        const auto& v = e.value;
        if (!v.is_surd()) {
            if (v.den != 1) throw DomainError("eigenvalue " + v.to_string() + " is not an algebraic integer");
            out *= IntPolynomial::linear(v.a).pow(static_cast<unsigned>(e.multiplicity));
            continue;
        }
        if (v.b < 0) continue;  // handled with its positive partner
        if (S.multiplicity_of(v.conjugate()) != e.multiplicity)
            throw DomainError("unmatched surd pair for eigenvalue " + v.to_string());
        const long long den2 = v.den * v.den;
        if ((2 * v.a) % v.den != 0 || (v.a * v.a - v.b * v.b * v.d) % den2 != 0)
            throw DomainError("eigenvalue " + v.to_string() + " is not an algebraic integer");
        const IntPolynomial quad{(v.a * v.a - v.b * v.b * v.d) / den2, -(2 * v.a) / v.den, 1};
        out *= quad.pow(static_cast<unsigned>(e.multiplicity));
    }
    for (const auto& e : S.entries())
        if (e.value.is_surd() && e.value.b < 0 && S.multiplicity_of(e.value.conjugate()) != e.multiplicity)
            throw DomainError("unmatched surd pair for eigenvalue " + e.value.to_string());
    return out;
}

/// Spectrum of a strongly regular graph with parameters (v, k, lambda, mu):
/// k^1, ((lambda - mu + sqrt(D))/2)^s, ((lambda - mu - sqrt(D))/2)^t with
/// D = (lambda - mu)^2 + 4(k - mu) and
/// s, t = ((v - 1) -/+ (2k + (v - 1)(lambda - mu)) / sqrt(D)) / 2.
inline ClosedSpectrum srg_spectrum(long long v, long long k, long long lambda, long long mu) {
    const long long diff = lambda - mu;
    const long long disc = diff * diff + 4 * (k - mu);
    const long long skew = 2 * k + (v - 1) * diff;
    auto infeasible = [&](long double s, long double t) {
        std::ostringstream msg;
        msg << "infeasible SRG parameters (" << v << "," << k << "," << lambda << "," << mu << "): s = " << static_cast<double>(s)
            << ", t = " << static_cast<double>(t);
        return DomainError(msg.str());
    };
    if (disc <= 0) throw infeasible(NAN, NAN);
    const long double root = std::sqrt(static_cast<long double>(disc));
    const long double s_real = ((v - 1) - skew / root) / 2, t_real = ((v - 1) + skew / root) / 2;

    const auto sq = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(disc))));
    if (sq * sq == disc) {
        const long long num = (v - 1) * sq - skew;
        if (num % (2 * sq) != 0 || num < 0 || num / (2 * sq) > v - 1) throw infeasible(s_real, t_real);
        const long long s = num / (2 * sq), t = v - 1 - s;
        return ClosedSpectrum({{ClosedEigenvalue::integer(k), 1},
                               {ClosedEigenvalue::rational(diff + sq, 2), s},
                               {ClosedEigenvalue::rational(diff - sq, 2), t}});
    }
    if (skew != 0 || (v - 1) % 2 != 0) throw infeasible(s_real, t_real);
    const long long s = (v - 1) / 2;
    return ClosedSpectrum({{ClosedEigenvalue::integer(k), 1},
                           {ClosedEigenvalue::surd(diff, 1, disc, 2), s},
                           {ClosedEigenvalue::surd(diff, -1, disc, 2), s}});
}

/// Spectrum of the block quotient matrix of a type-(q, r) MOSLS graph on f squares:
/// (3qr-q-r-1+f(qr-1))^1, (2qr-q-r-1-f)^{q+r-2}, (qr-q-r-1-f)^{(q-1)(r-1)}.
inline ClosedSpectrum quotient_spectrum(long long q, long long r, long long f) {
    if (q < 1 || r < 1 || f < 0) throw DomainError("quotient_spectrum: need q, r >= 1 and f >= 0");
    const long long qr = q * r;
    return ClosedSpectrum({{ClosedEigenvalue::integer(3 * qr - q - r - 1 + f * (qr - 1)), 1},
                           {ClosedEigenvalue::integer(2 * qr - q - r - 1 - f), q + r - 2},
                           {ClosedEigenvalue::integer(qr - q - r - 1 - f), (q - 1) * (r - 1)}});
}

/// Spectrum of A_MOLS + B for f mutually orthogonal Sudoku squares of type (q, r) when A_MOLS and
/// B commute. Throws DomainError if one of the nine multiplicities is negative.
inline ClosedSpectrum ev1_spectrum(long long q, long long r, long long f) {
    if (q < 1 || r < 1 || f < 1) throw DomainError("ev1_spectrum: need q, r, f >= 1");
    const long long qr = q * r, c = (q - 1) * (r - 1);
    const std::vector<std::pair<long long, long long>> lines{
        {c + (qr - 1) * (f + 2), 1},
        {c + qr - 2 - f, q + r - 2},
        {c - 2 - f, c},
        {qr - 1 - f, f * c},
        {qr - q - 1 - f, (r - 1) * (q + f)},
        {qr - r - 1 - f, (q - 1) * (r + f)},
        {-1 - f, c * (qr - f)},
        {-q - 1 - f, (r - 1) * (qr - q - f)},
        {-r - 1 - f, (q - 1) * (qr - r - f)},
    };
    std::vector<ClosedSpectrumEntry> e;
    for (auto [value, mult] : lines) {
        if (mult < 0)
            throw DomainError("ev1_spectrum: multiplicity of " + std::to_string(value) + " is negative for (q,r,f) = (" +
                              std::to_string(q) + "," + std::to_string(r) + "," + std::to_string(f) + ")");
        e.push_back({ClosedEigenvalue::integer(value), mult});
    }
    return ClosedSpectrum(std::move(e));
}

// ---------------------------------------------------------------------------------------------
// Numeric spectra
// ---------------------------------------------------------------------------------------------

struct NumericEigenvalue {
    double value = 0;
    int multiplicity = 0;
};

struct SpectrumOptions {
    double jacobi_tol = 1e-12;     ///< stop when off-diagonal norm < jacobi_tol * ||M||_F
    double group_tol = 1e-6;       ///< eigenvalues closer than this are one multiplicity group
    bool exact = true;             ///< compute the exact characteristic polynomial
    std::size_t exact_cap = 150;   ///< largest dimension for the exact polynomial
};

struct SpectrumReport {
    std::optional<IntPolynomial> charpoly;
    std::vector<NumericEigenvalue> numeric;  ///< descending
    /// max over groups of |p(x)| / sum_k |c_k| max(1,|x|)^k; absent without charpoly.
    std::optional<double> residual;
    std::vector<std::string> warnings;

    std::size_t dimension() const {
        std::size_t s = 0;
        for (const auto& e : numeric) s += static_cast<std::size_t>(e.multiplicity);
        return s;
    }
};

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(const IntMatrix& M, double tol = 1e-12) {
    if (!M.symmetric()) throw DomainError("jacobi_eigenvalues: matrix is not symmetric");
    const std::size_t N = M.rows();
    std::vector<double> a(N * N);
    double frob = 0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            a[i * N + j] = static_cast<double>(M(i, j));
            frob += a[i * N + j] * a[i * N + j];
        }
    frob = std::sqrt(frob);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * N + j]; };
    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j) s += 2 * at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() >= tol * std::max(frob, 1.0); ++sweep) {
        for (std::size_t p = 0; p + 1 < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) {
                const double apq = at(p, q);
                if (apq == 0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < N; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = at(q, p) = 0;
            }
    }
    std::vector<double> ev(N);
    for (std::size_t i = 0; i < N; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Groups sorted eigenvalues into (mean value, count), descending.
inline std::vector<NumericEigenvalue> group_eigenvalues(std::vector<double> ev, double group_tol) {
    std::sort(ev.begin(), ev.end(), std::greater<>());
    std::vector<NumericEigenvalue> out;
    double sum = 0;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        if (!out.empty() && std::fabs(ev[i] - ev[i - 1]) < group_tol) {
            sum += ev[i];
            ++out.back().multiplicity;
            out.back().value = sum / out.back().multiplicity;
        } else {
            sum = ev[i];
            out.push_back({ev[i], 1});
        }
    }
    for (auto& e : out)
        if (std::fabs(e.value) < group_tol) e.value = 0;  // avoid printing -0
    return out;
}

/// |p(x)| / sum_k |c_k| max(1, |x|)^k
inline double normalized_residual(const IntPolynomial& p, double x) {
    const long double xl = x;
    const long double scale = p.evaluation_scale(std::max<long double>(1, std::fabs(xl)));
    if (scale == 0) return 0;
    return static_cast<double>(std::fabs(p.evaluate(xl)) / scale);
}

inline SpectrumReport numeric_spectrum(const IntMatrix& M, const SpectrumOptions& opt = {}) {
    if (!M.symmetric()) throw DomainError("numeric_spectrum: matrix is not symmetric");
    SpectrumReport rep;
    rep.numeric = group_eigenvalues(jacobi_eigenvalues(M, opt.jacobi_tol), opt.group_tol);
    if (opt.exact && M.rows() <= opt.exact_cap) {
        rep.charpoly = charpoly_exact(M);
        double worst = 0;
        for (const auto& e : rep.numeric) worst = std::max(worst, normalized_residual(*rep.charpoly, e.value));
        rep.residual = worst;
    } else if (opt.exact) {
        rep.warnings.push_back("dimension " + std::to_string(M.rows()) + " exceeds the exact cap " +
                               std::to_string(opt.exact_cap) + "; numeric spectrum only");
    }
    return rep;
}

inline std::string format_numeric(const std::vector<NumericEigenvalue>& ev) {
    std::ostringstream out;
    out << '{';
    for (std::size_t k = 0; k < ev.size(); ++k) {
        std::ostringstream v;
        v.precision(10);
        const double rounded = std::round(ev[k].value);
        if (std::fabs(ev[k].value - rounded) < 1e-9) v << static_cast<long long>(rounded);
        else v << ev[k].value;
        out << (k ? ", " : "") << v.str() << '^' << ev[k].multiplicity;
    }
    out << '}';
    return out.str();
}

inline nlohmann::json to_json(const SpectrumReport& rep) {
    nlohmann::json j;
    j["charpoly"] = rep.charpoly ? nlohmann::json(rep.charpoly->coefficient_strings()) : nlohmann::json(nullptr);
    j["numeric"] = nlohmann::json::array();
    for (const auto& e : rep.numeric) j["numeric"].push_back({{"value", e.value}, {"mult", e.multiplicity}});
    j["residual"] = rep.residual ? nlohmann::json(*rep.residual) : nlohmann::json(nullptr);
    return j;
}

}  // namespace mosls
