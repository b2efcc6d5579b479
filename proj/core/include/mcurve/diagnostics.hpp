#ifndef MCURVE_DIAGNOSTICS_HPP
#define MCURVE_DIAGNOSTICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mcurve {

enum class Severity { Error, Warning };

enum class DiagCode {
    // text / structural input errors
    WrongGroupCount,
    WrongGroupLength,
    NegativeEntry,
    NonInteger,
    BadSigns,
    Overflow,
    // vector-level validation
    ZeroVector,
    ParityError,
    // decode-stage: the vector is not realizable as a multicurve
    NegativeCount,
    SignMissing,
    InconsistentTwist,
    AmbiguousDiagonals,
    // census-level
    ArcImbalance,
    InvariantViolation,
    InconsistentCensus,
    // generator
    Infeasible,
};

const char* to_string(DiagCode code);
const char* to_string(Severity severity);

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string locus;  ///< region or arc name, or input position
    DiagCode code = DiagCode::InvariantViolation;
    std::string detail;

    std::string to_string() const;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Ordered list of findings.  Empty (or warning-only) means the checked
/// stage passed.
class Diagnostics {
public:
    bool ok() const;  ///< no Error-severity entries
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

    void error(std::string locus, DiagCode code, std::string detail = {});
    void warn(std::string locus, DiagCode code, std::string detail = {});
    void merge(const Diagnostics& other);
    bool has(DiagCode code) const;

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const Diagnostic& operator[](std::size_t i) const { return items_[i]; }

    std::string to_string() const;  ///< one line per entry

    friend bool operator==(const Diagnostics&, const Diagnostics&) = default;

private:
    std::vector<Diagnostic> items_;
};

/// Value-or-diagnostics return used throughout: a present value with a
/// clean diagnostics list means success; otherwise diags explains why.
template <class T>
struct Result {
    std::optional<T> value;
    Diagnostics diags;

    bool ok() const { return value.has_value() && diags.ok(); }
    const T& operator*() const { return *value; }
    T& operator*() { return *value; }
    const T* operator->() const { return &*value; }

    static Result success(T v) {
        Result r;
        r.value = std::move(v);
        return r;
    }
    static Result failure(Diagnostics d) {
        Result r;
        r.diags = std::move(d);
        return r;
    }
};

}  // namespace mcurve

#endif
