#ifndef LEVYMAP_ELL_FUNCTION_HPP
#define LEVYMAP_ELL_FUNCTION_HPP

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "levymap/common.hpp"
#include "levymap/quadrature.hpp"

namespace levymap {

class RadialMeasure;

/// Asymptotic decay of a nonnegative function of r as r -> infinity.
struct TailBehavior {
    enum class Kind { Power, Exponential, Compact };
    Kind kind = Kind::Power;
    double exponent = 0.0;  ///< f ~ r^{-exponent} when kind == Power

    bool vanishes() const {
        return kind != Kind::Power || exponent > 0.0;
    }
};

/// Nonincreasing factor ell(r) of a class-K radial density r^{-alpha-1} ell(r).
///
/// Tagged union of the analytic families the mapped measures live in, a
/// tabulated form for everything else, and a lazily evaluated tail transform
/// (MappedTail) that computes (m!)^{-1} int_u^inf (log(r/u))^m r^alpha nu(dr)
/// against a source radial measure to quadrature accuracy.
class EllFunction {
public:
    struct StepDown {
        std::vector<double> thresholds;  ///< ascending; right-continuous steps
        std::vector<double> values;      ///< size() == thresholds.size() + 1
    };
    struct PowerTail {
        double c;  ///< ell(r) = c * r^{-p}
        double p;
    };
    struct ExpTail {
        double c;      ///< ell(r) = c * exp(-theta r)
        double theta;
    };
    struct LogFactor {
        std::shared_ptr<const EllFunction> base;
        int k = 1;          ///< power of the log factor
        double scale = 1.0; ///< ell(r) = base(r) * (log(scale/r))^k on (0, scale)
    };
    struct Composite {
        std::vector<EllFunction> parts;  ///< finite sum
    };
    struct Tabulated {
        std::vector<double> r;       ///< ascending grid
        std::vector<double> v;       ///< ell values at grid points
        bool extrapolate_lo = false; ///< power-law continuation below r.front()
        bool extrapolate_hi = false; ///< power-law continuation above r.back()
        double slope_lo = 0.0;       ///< fitted log-log slopes (outermost decade)
        double slope_hi = 0.0;
    };
    struct MappedTail {
        std::shared_ptr<const RadialMeasure> source;
        double alpha = 0.0;
        int m = 0;
    };

    using Variant = std::variant<StepDown, PowerTail, ExpTail, LogFactor,
                                 Composite, Tabulated, MappedTail>;

    EllFunction() : v_(StepDown{{}, {0.0}}) {}
    explicit EllFunction(Variant v) : v_(std::move(v)) {}

    static EllFunction step_down(std::vector<double> thresholds,
                                 std::vector<double> values);
    static EllFunction power_tail(double c, double p);
    static EllFunction exp_tail(double c, double theta);
    static EllFunction log_factor(EllFunction base, int k, double scale);
    static EllFunction composite(std::vector<EllFunction> parts);
    static EllFunction tabulated(std::vector<double> r, std::vector<double> v,
                                 bool extrapolate_lo, bool extrapolate_hi);
    static EllFunction mapped_tail(std::shared_ptr<const RadialMeasure> source,
                                   double alpha, int m,
                                   const Tolerances& tol = default_tolerances());

    const Variant& variant() const { return v_; }

    double eval(double r) const;

    /// Smallest R with ell == 0 on [R, inf), +inf if none.
    double support_hi() const;
    /// Scale below which ell is effectively constant (grid lower anchor).
    double scale_lo() const;

    TailBehavior tail() const;
    /// p >= 0 with ell(r) = O(r^{-p}) as r -> 0 (log factors not counted).
    double growth_at_zero() const;

    /// True/false when monotonicity is known analytically, nullopt otherwise.
    std::optional<bool> nonincreasing_analytic() const;

    bool is_zero() const;

    /// Constant value when ell is a single step that is flat on (0, s).
    std::optional<double> constant_below(double s) const;

    /// -u d/du of this function, when it stays inside the union.
    std::optional<EllFunction> reduce_order_once() const;

    /// Stieltjes integral  int f(r) r^{-alpha} (-d ell)(r)  against the jump /
    /// density measure of -d ell.  Returns nullopt when the variant has no
    /// usable representation of -d ell.
    std::optional<double> stieltjes_integral(const RealFn& f, double alpha,
                                             const Tolerances& tol) const;

    bool operator==(const EllFunction& other) const;

private:
    Variant v_;
};

double factorial(int n);

} // namespace levymap

#endif
