#pragma once

// Zero-ordinate tables: ingestion, validation, N(T) counting, and the
// Backlund unit-interval audit N(T+1) - N(T) < log T.
//
// Tables store only the positive ordinates gamma of zeros 1/2 + i*gamma;
// consumers synthesize the conjugate -gamma on demand. File format is the
// de-facto one of published tables: one decimal ordinate per line, '#'
// comments, blank lines allowed.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "goldbach/errors.hpp"
#include "goldbach/zeros_builtin.hpp"

namespace goldbach {

inline constexpr double kGamma1 = 14.134725141734693;

// Riemann-von Mangoldt main term (T/2pi) log(T/(2pi e)) + 7/8.
inline double rvm_estimate(double t) {
    const double two_pi = 6.283185307179586476925286766559;
    if (t <= 0.0) return 0.875;
    return t / two_pi * std::log(t / (two_pi * 2.718281828459045235360287471353)) + 0.875;
}

struct ZeroTable {
    std::vector<double> gammas;   // strictly increasing positive ordinates
    int precision_digits = 9;     // decimal digits guaranteed per entry
    std::string source;
    std::vector<std::string> warnings;  // sanity flags, never fatal

    std::size_t size() const noexcept { return gammas.size(); }
    bool empty() const noexcept { return gammas.empty(); }
    double max_ordinate() const { return gammas.back(); }

    double min_gap() const {
        double g = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < gammas.size(); ++i)
            g = std::min(g, gammas[i] - gammas[i - 1]);
        return g;
    }

    // Validating factory for genuine zeta tables.
    static ZeroTable from_ordinates(std::vector<double> ordinates, int precision_digits,
                                    std::string source) {
        if (ordinates.empty()) throw ParseError("no ordinates", 0);
        ZeroTable t;
        t.gammas = std::move(ordinates);
        t.precision_digits = precision_digits;
        t.source = std::move(source);
        for (std::size_t i = 0; i < t.gammas.size(); ++i) {
            if (!std::isfinite(t.gammas[i]) || t.gammas[i] <= 14.0)
                throw ParseError("ordinate " + std::to_string(i + 1) +
                                     " is not a positive zeta ordinate (> 14 required)",
                                 i + 1);
            if (i > 0 && t.gammas[i] <= t.gammas[i - 1])
                throw ParseError("ordinates not strictly increasing at entry " +
                                     std::to_string(i + 1),
                                 i + 1);
        }
        double tol = std::max(5.0 * std::pow(10.0, -precision_digits), 1e-12);
        if (std::abs(t.gammas.front() - kGamma1) > tol)
            throw ParseError("first ordinate " + std::to_string(t.gammas.front()) +
                                 " does not match gamma_1 = 14.134725... at the declared precision",
                             1);
        t.run_rvm_sanity();
        return t;
    }

    // Synthetic tables for crafted tests; no invariants enforced.
    static ZeroTable unchecked(std::vector<double> ordinates, int precision_digits,
                               std::string source) {
        ZeroTable t;
        t.gammas = std::move(ordinates);
        t.precision_digits = precision_digits;
        t.source = std::move(source);
        return t;
    }

private:
    // |N(T) - rvm_estimate(T)| < 2 should hold throughout the range; a
    // violation indicates a corrupt table. Flag, don't fail. N is constant
    // between ordinates, so checking both sides of every jump covers all T.
    void run_rvm_sanity() {
        for (std::size_t k = 0; k < gammas.size(); ++k) {
            double est = rvm_estimate(gammas[k]);
            double lo = static_cast<double>(k);      // N just below gamma_k
            double hi = static_cast<double>(k + 1);  // N at gamma_k
            if (std::abs(hi - est) >= 2.0 || std::abs(lo - est) >= 2.0) {
                std::ostringstream os;
                os << "Riemann-von Mangoldt sanity exceeded near gamma_" << (k + 1) << " = "
                   << gammas[k] << " (N=" << (k + 1) << ", estimate=" << est << ")";
                warnings.push_back(os.str());
            }
        }
    }
};

// Parse one ordinate per line; '#' starts a comment, blank lines skipped.
inline ZeroTable load_zeros(std::istream& in, int declared_precision = 9,
                            std::string source = "stream") {
    std::vector<double> ordinates;
    std::string line;
    std::size_t lineno = 0;
    double prev = -std::numeric_limits<double>::infinity();
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r\n");
        std::string tok = line.substr(b, e - b + 1);
        std::size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &consumed);
        } catch (const std::exception&) {
            throw ParseError("unparsable ordinate '" + tok + "' at line " +
                                 std::to_string(lineno),
                             lineno);
        }
        if (consumed != tok.size())
            throw ParseError("trailing garbage after ordinate at line " +
                                 std::to_string(lineno),
                             lineno);
        if (v <= prev)
            throw ParseError("non-monotone ordinate at line " + std::to_string(lineno),
                             lineno);
        prev = v;
        ordinates.push_back(v);
    }
    if (ordinates.empty()) throw ParseError("no ordinates", lineno);
    return ZeroTable::from_ordinates(std::move(ordinates), declared_precision,
                                     std::move(source));
}

inline ZeroTable builtin_zero_table() {
    std::vector<double> g(kBuiltinZeroOrdinates.begin(), kBuiltinZeroOrdinates.end());
    return ZeroTable::from_ordinates(std::move(g), 15, "builtin:first100");
}

// N(T) restricted to the table: #{gamma <= T}. Ties included. Refuses to
// silently undercount beyond table coverage.
inline std::size_t count_upto(const ZeroTable& table, double t) {
    if (!(t >= 0.0)) throw std::domain_error("count_upto: T must be >= 0");
    if (table.empty()) throw std::out_of_range("count_upto: empty table");
    if (t > table.max_ordinate())
        throw std::out_of_range("count_upto: T = " + std::to_string(t) +
                                " exceeds table coverage " +
                                std::to_string(table.max_ordinate()) +
                                "; a larger table is required");
    return static_cast<std::size_t>(
        std::upper_bound(table.gammas.begin(), table.gammas.end(), t) -
        table.gammas.begin());
}

struct BacklundRow {
    double t;
    long unit_count;  // N(T+1) - N(T)
    double log_t;
    bool pass;        // strict inequality unit_count < log T
};

struct BacklundReport {
    std::vector<BacklundRow> rows;
    bool pass = true;  // vacuous pass on an empty grid
};

// Grid T = t_lo + k*step for k >= 0, T < t_hi (half-open; t_lo == t_hi is
// an empty grid). Needs T+1 within table coverage at every grid point.
inline BacklundReport backlund_audit(const ZeroTable& table, double t_lo, double t_hi,
                                     double step) {
    if (!(step > 0.0)) throw std::domain_error("backlund_audit: step must be positive");
    if (!(t_lo >= 1.0)) throw std::domain_error("backlund_audit: T_lo must be >= 1");
    if (t_lo > t_hi) throw std::domain_error("backlund_audit: T_lo must not exceed T_hi");
    if (table.empty()) throw std::out_of_range("backlund_audit: empty table");
    if (t_hi > table.max_ordinate() - 1.0)
        throw std::out_of_range("backlund_audit: grid exceeds table coverage minus 1");
    BacklundReport rep;
    for (double t = t_lo; t < t_hi; t += step) {
        long n1 = static_cast<long>(count_upto(table, t + 1.0));
        long n0 = static_cast<long>(count_upto(table, t));
        BacklundRow row;
        row.t = t;
        row.unit_count = n1 - n0;
        row.log_t = std::log(t);
        row.pass = static_cast<double>(row.unit_count) < row.log_t;
        if (!row.pass) rep.pass = false;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace goldbach
