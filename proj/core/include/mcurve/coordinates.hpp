#ifndef MCURVE_COORDINATES_HPP
#define MCURVE_COORDINATES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcurve/diagnostics.hpp"
#include "mcurve/surface.hpp"

namespace mcurve {

/// Exact integer coordinate vector of a multicurve: the intersection
/// numbers with the reference arcs, stored flat in group order
/// (alpha; beta; beta'; xi; xi'; gamma; c; c*).  Entries are non-negative
/// 64-bit integers; overflow anywhere is reported as an error, never
/// wrapped.
class CoordVector {
public:
    CoordVector() = default;

    /// Validates length and non-negativity.
    static Result<CoordVector> make(SurfaceSig sig, std::vector<std::int64_t> values);

    SurfaceSig sig() const { return sig_; }
    std::span<const std::int64_t> values() const { return values_; }
    std::int64_t operator[](int flat) const { return values_[static_cast<std::size_t>(flat)]; }
    std::int64_t at(ArcId arc) const;
    void set(ArcId arc, std::int64_t v);

    // 1-based accessors matching the classical arc numbering.
    std::int64_t alpha(int i) const;       // 1..2n
    std::int64_t beta(int i) const;        // 1..n+g
    std::int64_t beta_prime(int i) const;  // n+2..n+g
    std::int64_t xi(int i) const;          // 1..2g-2
    std::int64_t xi_prime(int i) const;    // 1..2g-2
    std::int64_t gamma(int i) const;       // 1..g
    std::int64_t c(int i) const;           // 1..g-1
    std::int64_t c_star() const;

    /// Invisible-left wall of handle region i (1..g): beta'_{n+i} for
    /// i >= 2, beta_1 for i = 1 (the beta'_{n+1} role).  For i = g this is
    /// the invisible wall of G*.
    std::int64_t invisible_wall(int i) const;

    bool is_zero() const;

    friend bool operator==(const CoordVector&, const CoordVector&) = default;

private:
    CoordVector(SurfaceSig sig, std::vector<std::int64_t> values)
        : sig_(sig), values_(std::move(values)) {}

    SurfaceSig sig_;
    std::vector<std::int64_t> values_;
};

/// Per-handle-region twist directions, one entry per G_1..G_{g-1}, G*.
/// Required side input for decoding: the coordinates alone cannot tell
/// clockwise from counterclockwise twisting.
struct TwistSigns {
    std::vector<int> signs;  ///< each in {-1, 0, +1}, length g

    int at(int i) const { return signs[static_cast<std::size_t>(i - 1)]; }  // 1-based
    friend bool operator==(const TwistSigns&, const TwistSigns&) = default;
};

/// Parse the canonical text form: semicolon-separated groups of
/// comma-separated integers, optionally wrapped in parentheses.  Empty
/// groups (g = 1) are omitted, so g = 1 vectors have 4 groups
/// (alpha; beta; gamma; c*) instead of 8.
Result<CoordVector> parse_vector(std::string_view text, SurfaceSig sig);

/// Canonical single-space formatting; parse_vector(serialize_vector(v)) == v.
std::string serialize_vector(const CoordVector& v);

/// Parse "+,-,0" style sign lists (length g, tokens from {+, -, 0}).
Result<TwistSigns> parse_signs(std::string_view text, SurfaceSig sig);
std::string serialize_signs(const TwistSigns& signs);

/// Cheap structural validation before decoding: rejects the zero vector
/// and every parity or sign violation forced by the halving formulas
/// (puncture-wall differences, handle-wall differences against c_i, and
/// the G* walls against c*).  Decode assumes these checks have passed.
Diagnostics validate_basic(const CoordVector& v);

/// JSON form: {"n","g","alpha","beta","beta_prime","xi","xi_prime",
/// "gamma","c","c_star","signs"}; signs entries are -1/0/1 and optional.
std::string vector_to_json(const CoordVector& v, const TwistSigns* signs = nullptr,
                           int indent = -1);
Result<std::pair<CoordVector, TwistSigns>> vector_from_json(std::string_view text);

}  // namespace mcurve

#endif
