#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goldbach {

// Malformed zero-table input; carries the 1-based line number of the
// offending token so rejections can name it.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Gamma evaluated at a nonpositive integer; carries the offending integer.
class PoleError : public std::domain_error {
public:
    PoleError(const std::string& what, long pole)
        : std::domain_error(what), pole_(pole) {}
    long pole() const noexcept { return pole_; }

private:
    long pole_;
};

// Evaluation point too close to a candidate pole rho + rho'; carries the
// 1-based ordinate indices of the colliding pair (negative index = conjugate).
class PoleProximityError : public std::domain_error {
public:
    PoleProximityError(const std::string& what, int i, int j, double distance)
        : std::domain_error(what), i_(i), j_(j), distance_(distance) {}
    int pair_i() const noexcept { return i_; }
    int pair_j() const noexcept { return j_; }
    double distance() const noexcept { return distance_; }

private:
    int i_, j_;
    double distance_;
};

} // namespace goldbach
