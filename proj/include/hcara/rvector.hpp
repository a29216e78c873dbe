#pragma once

#include "hcara/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hcara {

/// Fixed-dimension vector of exact rationals.
class RVector {
public:
    RVector() = default;
    explicit RVector(std::size_t dim) : coords_(dim) {}
    explicit RVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    RVector(std::initializer_list<Rational> coords) : coords_(coords) {}

    /// Convenience for literals in tests and shape tables.
    static RVector from_ints(std::initializer_list<long> values);

    std::size_t dim() const { return coords_.size(); }
    bool empty() const { return coords_.empty(); }

    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }

    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;

    RVector& operator+=(const RVector& other);
    RVector& operator-=(const RVector& other);
    RVector& operator*=(const Rational& factor);

    friend RVector operator+(RVector lhs, const RVector& rhs) { return lhs += rhs; }
    friend RVector operator-(RVector lhs, const RVector& rhs) { return lhs -= rhs; }
    friend RVector operator*(const Rational& factor, RVector v) { return v *= factor; }
    friend RVector operator-(RVector v) { return v *= Rational(-1); }

    friend bool operator==(const RVector& lhs, const RVector& rhs) { return lhs.coords_ == rhs.coords_; }
    friend bool operator!=(const RVector& lhs, const RVector& rhs) { return !(lhs == rhs); }

    static RVector zero(std::size_t dim) { return RVector(dim); }
    static RVector unit(std::size_t dim, std::size_t axis);

private:
    std::vector<Rational> coords_;
};

/// Exact inner product. Throws InputError on dimension mismatch.
Rational dot(const RVector& lhs, const RVector& rhs);

/// True iff lhs = c * rhs for some rational c > 0.
bool is_positive_multiple(const RVector& lhs, const RVector& rhs);

/// "(p1, p2, ...)" using canonical rational strings.
std::string to_string(const RVector& v);

/// Parses comma-separated rational literals, e.g. "1/2,-3,0". Rejects
/// floating-point literals and empty input with InputError.
RVector parse_point(std::string_view text);

}  // namespace hcara
