#include "fdbench/models.hpp"

#include <cmath>

#include "fdbench/numfmt.hpp"

namespace fdbench {

std::optional<double> LogisticModel::singularity() const {
    // p0 + (p1 - p0) e^(-A p1 t) = 0  =>  e^(-A p1 t) = -p0/(p1 - p0).
    if (p1 == p0) return std::nullopt;        // constant denominator p0
    const double q = -p0 / (p1 - p0);
    if (!(q > 0)) return std::nullopt;
    const double k = A * p1;
    if (k == 0) return std::nullopt;          // denominator frozen in time
    return std::log(q) / (-k);
}

void TemperatureModel::validate() const {
    if (!(k1 > 0))
        throw Error("temperature model requires k1 > 0, got " +
                    format_double(k1));
}

void MarketModel::validate() const {
    if (b == 0)
        throw Error("market model requires b != 0");
    if (std::abs(c * lambda - 1.0) < 1e-12)
        throw Error("market model pole: c*lambda = 1");
}

double MarketModel::growth_rate() const {
    validate();
    return lambda * b / (c * lambda - 1.0);
}

double MarketModel::equilibrium_price() const {
    if (b == 0)
        throw Error("equilibrium price undefined for b = 0");
    return a / b;
}

Series sample_model(const std::function<double(double)>& f, double t0,
                    double t1, int n, std::string time_unit,
                    std::string value_unit) {
    if (n < 2) throw GridError("sample count must be at least 2");
    if (!(t1 > t0)) throw GridError("sampling interval requires t1 > t0");
    Series s;
    s.time_unit = std::move(time_unit);
    s.value_unit = std::move(value_unit);
    s.times.reserve(n);
    s.values.reserve(n);
    const double h = (t1 - t0) / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double t = (i == n - 1) ? t1 : t0 + i * h;
        s.times.push_back(t);
        try {
            s.values.push_back(f(t));
        } catch (const SingularityError& e) {
            throw SingularityError("grid point t=" + format_double(t) +
                                       " hits a model singularity: " + e.what(),
                                   e.time());
        }
    }
    return s;
}

} // namespace fdbench
