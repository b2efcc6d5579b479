#include "mcurve/diagnostics.hpp"

#include <algorithm>

namespace mcurve {

const char* to_string(DiagCode code) {
    switch (code) {
        case DiagCode::WrongGroupCount:    return "WrongGroupCount";
        case DiagCode::WrongGroupLength:   return "WrongGroupLength";
        case DiagCode::NegativeEntry:      return "NegativeEntry";
        case DiagCode::NonInteger:         return "NonInteger";
        case DiagCode::BadSigns:           return "BadSigns";
        case DiagCode::Overflow:           return "Overflow";
        case DiagCode::ZeroVector:         return "ZeroVector";
        case DiagCode::ParityError:        return "ParityError";
        case DiagCode::NegativeCount:      return "NegativeCount";
        case DiagCode::SignMissing:        return "SignMissing";
        case DiagCode::InconsistentTwist:  return "InconsistentTwist";
        case DiagCode::AmbiguousDiagonals: return "AmbiguousDiagonals";
        case DiagCode::ArcImbalance:       return "ArcImbalance";
        case DiagCode::InvariantViolation: return "InvariantViolation";
        case DiagCode::InconsistentCensus: return "InconsistentCensus";
        case DiagCode::Infeasible:         return "Infeasible";
    }
    return "Unknown";
}

const char* to_string(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

std::string Diagnostic::to_string() const {
    std::string out = mcurve::to_string(severity);
    out += ": [";
    out += mcurve::to_string(code);
    out += "] ";
    out += locus;
    if (!detail.empty()) {
        out += ": ";
        out += detail;
    }
    return out;
}

bool Diagnostics::ok() const {
    return std::none_of(items_.begin(), items_.end(), [](const Diagnostic& d) {
        return d.severity == Severity::Error;
    });
}

void Diagnostics::error(std::string locus, DiagCode code, std::string detail) {
    items_.push_back({Severity::Error, std::move(locus), code, std::move(detail)});
}

void Diagnostics::warn(std::string locus, DiagCode code, std::string detail) {
    items_.push_back({Severity::Warning, std::move(locus), code, std::move(detail)});
}

void Diagnostics::merge(const Diagnostics& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

bool Diagnostics::has(DiagCode code) const {
    return std::any_of(items_.begin(), items_.end(),
                       [code](const Diagnostic& d) { return d.code == code; });
}

std::string Diagnostics::to_string() const {
    std::string out;
    for (const Diagnostic& d : items_) {
        out += d.to_string();
        out += '\n';
    }
    return out;
}

}  // namespace mcurve
