#include "hcara/rvector.hpp"

#include "hcara/errors.hpp"

namespace hcara {

RVector RVector::from_ints(std::initializer_list<long> values) {
    std::vector<Rational> coords;
    coords.reserve(values.size());
    for (long v : values) coords.emplace_back(v);
    return RVector(std::move(coords));
}

RVector RVector::unit(std::size_t dim, std::size_t axis) {
    RVector v(dim);
    v[axis] = 1;
    return v;
}

bool RVector::is_zero() const {
    for (const auto& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

RVector& RVector::operator+=(const RVector& other) {
    if (other.dim() != dim()) throw InputError("vector dimension mismatch in addition");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

RVector& RVector::operator-=(const RVector& other) {
    if (other.dim() != dim()) throw InputError("vector dimension mismatch in subtraction");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

RVector& RVector::operator*=(const Rational& factor) {
    for (auto& c : coords_) c *= factor;
    return *this;
}

Rational dot(const RVector& lhs, const RVector& rhs) {
    if (lhs.dim() != rhs.dim()) {
        throw InputError("dimension mismatch in inner product (" + std::to_string(lhs.dim()) + " vs " +
                         std::to_string(rhs.dim()) + ")");
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < lhs.dim(); ++i) {
        if (lhs[i] != 0 && rhs[i] != 0) sum += lhs[i] * rhs[i];
    }
    return sum;
}

bool is_positive_multiple(const RVector& lhs, const RVector& rhs) {
    if (lhs.dim() != rhs.dim()) return false;
    std::size_t k = 0;
    while (k < rhs.dim() && rhs[k] == 0) ++k;
    if (k == rhs.dim()) return lhs.is_zero();
    const Rational factor = lhs[k] / rhs[k];
    if (factor <= 0) return false;
    for (std::size_t i = 0; i < lhs.dim(); ++i) {
        if (lhs[i] != factor * rhs[i]) return false;
    }
    return true;
}

std::string to_string(const RVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

RVector parse_point(std::string_view text) {
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        coords.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                           : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return RVector(std::move(coords));
}

}  // namespace hcara
