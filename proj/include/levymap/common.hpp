#ifndef LEVYMAP_COMMON_HPP
#define LEVYMAP_COMMON_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace levymap {

inline constexpr const char* kVersion = "0.1.0";

/// Divergent integrals and moments are reported as IEEE +infinity, decided
/// analytically per measure family (never by letting a quadrature overflow).
inline constexpr double kPlusInf = std::numeric_limits<double>::infinity();

inline bool is_inf(double x) { return std::isinf(x); }

/// Numerical tolerances threaded through all operations.  The defaults are
/// the library contract; CLI overrides must stay within [1e-14, 1e-2].
struct Tolerances {
    double quad  = 1e-10;  ///< absolute tolerance for adaptive quadrature
    double inv   = 1e-12;  ///< relative tolerance for kernel inversion
    double limit = 1e-8;   ///< Cauchy acceptance for dyadic limits
    double mono  = 1e-12;  ///< relative slack for monotonicity grid checks
    double unit  = 1e-12;  ///< unit-norm tolerance for spherical directions
    double psd_rel = 1e-12;///< relative PSD tolerance (scaled by max |A| entry)
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t;
    return t;
}

enum class ErrorKind {
    AnalyticReject,   ///< NotInClass, DomainViolation, InvalidCutoff
    NumericFailure,   ///< QuadratureNonConvergence, LimitNonConvergence
    IoFailure,        ///< file / parse errors
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), kind_(kind), code_(std::move(code)) {}
    ErrorKind kind() const { return kind_; }
    const std::string& code() const { return code_; }
private:
    ErrorKind kind_;
    std::string code_;
};

inline Error not_in_class(const std::string& msg) {
    return Error(ErrorKind::AnalyticReject, "NotInClass", msg);
}
inline Error domain_violation(const std::string& msg) {
    return Error(ErrorKind::AnalyticReject, "DomainViolation", msg);
}
inline Error invalid_cutoff(const std::string& msg) {
    return Error(ErrorKind::AnalyticReject, "InvalidCutoff", msg);
}
inline Error quadrature_nonconvergence(const std::string& msg) {
    return Error(ErrorKind::NumericFailure, "QuadratureNonConvergence", msg);
}
inline Error limit_nonconvergence(const std::string& msg) {
    return Error(ErrorKind::NumericFailure, "LimitNonConvergence", msg);
}
inline Error io_failure(const std::string& msg) {
    return Error(ErrorKind::IoFailure, "IoError", msg);
}

} // namespace levymap

#endif
