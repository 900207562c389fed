#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "fdbench/errors.hpp"
#include "fdbench/series.hpp"

namespace fdbench {

/// Logistic population model dp/dt = -A p (p - p1), p(0) = p0, with the
/// closed-form solution p(t) = p0 p1 / (p0 + (p1 - p0) e^(-A p1 t)).
/// The templated evaluators exist so convergence sweeps can run in
/// extended precision; double is the normal entry point.
struct LogisticModel {
    double A;   // rate constant, 1/(population*year)
    double p1;  // asymptotic parameter, millions
    double p0;  // initial population, millions

    template <typename Scalar>
    Scalar value_t(Scalar t) const {
        const Scalar P0 = p0, P1 = p1;
        const Scalar denom = P0 + (P1 - P0) * std::exp(-Scalar(A) * P1 * t);
        const Scalar guard = Scalar(1e-9) * std::abs(P1 - P0);
        if (std::abs(denom) <= guard)
            throw SingularityError(
                "logistic denominator vanishes near t=" + std::to_string(double(t)),
                double(t));
        // A sign flip relative to the t = 0 denominator (which equals p1)
        // means t lies beyond the blow-up time; the closed form is then on
        // the other branch and no longer solves the initial-value problem.
        if (denom * P1 < 0)
            throw SingularityError(
                "t=" + std::to_string(double(t)) +
                    " lies beyond the logistic blow-up time",
                double(t));
        return P0 * P1 / denom;
    }

    template <typename Scalar>
    Scalar rate_t(Scalar t) const {
        const Scalar p = value_t(t);
        return -Scalar(A) * p * (p - Scalar(p1));
    }

    double value(double t) const { return value_t<double>(t); }
    double rate(double t) const { return rate_t<double>(t); }

    /// Time at which the solution's denominator vanishes, if any.
    std::optional<double> singularity() const;
};

/// Single-compartment building temperature,
/// T(t) = B2 - B1 F1(t) + C e^(-k1 t) with C = T0 - B2 + B1 F1(0).
struct TemperatureModel {
    double B1;     // forcing amplitude, degC
    double B2;     // baseline temperature, degC
    double k1;     // decay rate, 1/hour
    double omega;  // angular frequency, rad/hour
    double T0;     // initial temperature, degC

    void validate() const;  // throws Error unless k1 > 0

    /// F1(t) = (cos(wt) + (w/k1) sin(wt)) / (1 + (w/k1)^2).
    template <typename Scalar>
    Scalar f1_t(Scalar t) const {
        validate();
        const Scalar r = Scalar(omega) / Scalar(k1);
        return (std::cos(Scalar(omega) * t) + r * std::sin(Scalar(omega) * t)) /
               (Scalar(1) + r * r);
    }

    template <typename Scalar>
    Scalar f1_derivative_t(Scalar t) const {
        validate();
        const Scalar r = Scalar(omega) / Scalar(k1);
        return Scalar(omega) *
               (-std::sin(Scalar(omega) * t) + r * std::cos(Scalar(omega) * t)) /
               (Scalar(1) + r * r);
    }

    template <typename Scalar>
    Scalar C_t() const {
        return Scalar(T0) - Scalar(B2) + Scalar(B1) * f1_t<Scalar>(0);
    }

    template <typename Scalar>
    Scalar value_t(Scalar t) const {
        return Scalar(B2) - Scalar(B1) * f1_t(t) +
               C_t<Scalar>() * std::exp(-Scalar(k1) * t);
    }

    template <typename Scalar>
    Scalar rate_t(Scalar t) const {
        return -Scalar(B1) * f1_derivative_t(t) -
               Scalar(k1) * C_t<Scalar>() * std::exp(-Scalar(k1) * t);
    }

    double f1(double t) const { return f1_t<double>(t); }
    double f1_derivative(double t) const { return f1_derivative_t<double>(t); }
    double C() const { return C_t<double>(); }
    double value(double t) const { return value_t<double>(t); }
    double rate(double t) const { return rate_t<double>(t); }
};

/// Market price under adaptive expectations,
/// P(t) = D e^(r t) + a/b with r = lambda*b / (c*lambda - 1).
struct MarketModel {
    double D;       // integration constant, price units
    double lambda;  // expectation coefficient
    double a;       // aggregate constant d0 + s0
    double b;       // aggregate constant d1 + s1
    double c;       // aggregate constant d2 + s2

    void validate() const;  // throws Error on b = 0 or c*lambda = 1

    double growth_rate() const;  // r

    template <typename Scalar>
    Scalar value_t(Scalar t) const {
        validate();
        const Scalar r = Scalar(lambda) * Scalar(b) /
                         (Scalar(c) * Scalar(lambda) - Scalar(1));
        return Scalar(D) * std::exp(r * t) + Scalar(a) / Scalar(b);
    }

    template <typename Scalar>
    Scalar rate_t(Scalar t) const {
        validate();
        const Scalar r = Scalar(lambda) * Scalar(b) /
                         (Scalar(c) * Scalar(lambda) - Scalar(1));
        return Scalar(D) * r * std::exp(r * t);
    }

    double value(double t) const { return value_t<double>(t); }
    double rate(double t) const { return rate_t<double>(t); }
    double equilibrium_price() const;  // a/b
};

/// Samples a scalar function on an inclusive uniform grid of n points.
/// Evaluation failures propagate, annotated with the failing grid point.
Series sample_model(const std::function<double(double)>& f, double t0,
                    double t1, int n, std::string time_unit = "",
                    std::string value_unit = "");

} // namespace fdbench
