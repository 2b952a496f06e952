#pragma once

#include <functional>
#include <string>
#include <vector>

#include "metra/errors.hpp"

namespace metra {

/// Modulus of uniform convexity: an increasing, continuous function
/// delta: (0,2] -> (0,1] with a numeric inverse.
///
/// inverse() is the generalized (monotone) inverse extended to all of
/// [0,2]: for t >= delta(2) it returns 2, the largest possible normalized
/// gap. This keeps inverse nondecreasing, which the triangle-defect
/// inequalities require to stay valid for arbitrary metric inputs.
class ConvexityModulus {
public:
    /// delta(eps) = 1 - sqrt(1 - eps^2/4); inverse(t) = 2 sqrt(2t - t^2).
    static ConvexityModulus l2();

    /// p >= 2: delta(eps) = 1 - (1 - (eps/2)^p)^{1/p} with a closed-form
    /// inverse. 1 < p < 2: the lower estimate delta(eps) = (p-1) eps^2 / 8
    /// (valid, hence sound for certificates; not tight).
    static ConvexityModulus lp(double p);

    /// Custom evaluate hook; inverse computed by bisection to 1e-12.
    static ConvexityModulus custom(std::string name, std::function<double(double)> evaluate);

    double evaluate(double eps) const;
    double inverse(double t) const;
    const std::string& name() const { return name_; }

private:
    ConvexityModulus(std::string name, std::function<double(double)> eval,
                     std::function<double(double)> inv)
        : name_(std::move(name)), eval_(std::move(eval)), inv_(std::move(inv)) {}

    std::string name_;
    std::function<double(double)> eval_;
    std::function<double(double)> inv_;
};

/// RHS - LHS of the uniform-convexity displacement inequality for three
/// points of l_p: the distance from y to the canonical convex combination
/// of x and z is at most
///   (|x-y| |y-z| / (|x-y| + |y-z|)) *
///   delta^{-1}((|x-y| + |y-z| - |x-z|) / min(|x-y|, |y-z|)).
/// Nonnegative whenever delta is dominated by the modulus of the norm the
/// points live in.
double uc_slack(const std::vector<double>& x, const std::vector<double>& y,
                const std::vector<double>& z, double p, const ConvexityModulus& delta);

/// RHS - LHS of the four-point consequence: with distances d_ab between
/// points x_a, x_b,
///   LHS = (d12 + d23 - d13) / (2 d23)
///   RHS = delta^{-1}((d13 + d34 - d14)/min(d13, d34))
///       + delta^{-1}((d23 + d34 - d24)/min(d23, d34)).
/// The derivation reduces by symmetry to d13 >= d23, so the roles of x1
/// and x2 are normalized that way internally (the RHS is symmetric under
/// the swap). Nonnegative when the six values come from four points of a
/// space whose modulus dominates delta; a negative gap certifies that no
/// such space contains the quadruple isometrically.
double convexity_lemma_gap(double d12, double d13, double d14, double d23, double d24,
                           double d34, const ConvexityModulus& delta);

}  // namespace metra
