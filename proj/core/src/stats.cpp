#include "sbe/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace sbe {

namespace {

constexpr size_t kBatches = 16;

double z_score(double mean, double target, double se) {
    if (se > 0) return (mean - target) / se;
    if (mean == target) return 0;
    return std::copysign(std::numeric_limits<double>::infinity(), mean - target);
}

struct FitCore {
    double slope = 0, intercept = 0, slope_se = 0;
};

// Weighted least squares of y on x with residual-scaled errors; weights must
// be positive. Needs >= 3 points for a residual estimate, >= 2 for the line.
FitCore wls_line(const std::vector<double>& x, const std::vector<double>& y,
                 const std::vector<double>& w) {
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sw += w[i];
        sx += w[i] * x[i];
        sy += w[i] * y[i];
        sxx += w[i] * x[i] * x[i];
        sxy += w[i] * x[i] * y[i];
    }
    double det = sw * sxx - sx * sx;
    if (det <= 0) throw std::invalid_argument("regression: degenerate abscissa");
    FitCore f;
    f.slope = (sw * sxy - sx * sy) / det;
    f.intercept = (sxx * sy - sx * sxy) / det;
    if (x.size() > 2) {
        double rss = 0;
        for (size_t i = 0; i < x.size(); ++i) {
            double r = y[i] - f.intercept - f.slope * x[i];
            rss += w[i] * r * r;
        }
        double s2 = rss / double(x.size() - 2);
        f.slope_se = std::sqrt(std::max(0.0, s2 * sw / det));
    }
    return f;
}

}  // namespace

Estimate batch_mean(const std::vector<double>& samples) {
    size_t n = samples.size();
    if (n < kBatches)
        throw std::invalid_argument("batch_mean: need >= 16 samples for batch-means errors");
    double total = 0;
    for (double s : samples) total += s;

    double bmeans[kBatches];
    size_t base = n / kBatches, extra = n % kBatches, pos = 0;
    for (size_t b = 0; b < kBatches; ++b) {
        size_t len = base + (b < extra ? 1 : 0);
        double acc = 0;
        for (size_t i = 0; i < len; ++i) acc += samples[pos + i];
        bmeans[b] = acc / double(len);
        pos += len;
    }
    double bbar = 0;
    for (double b : bmeans) bbar += b;
    bbar /= double(kBatches);
    double var = 0;
    for (double b : bmeans) var += (b - bbar) * (b - bbar);
    var /= double(kBatches * (kBatches - 1));
    return {total / double(n), std::sqrt(var)};
}

Estimate lp_norm(const std::vector<double>& sups, double p) {
    if (!(p > 0)) throw std::invalid_argument("lp_norm: p must be positive");
    std::vector<double> moments(sups.size());
    for (size_t i = 0; i < sups.size(); ++i) moments[i] = std::pow(std::abs(sups[i]), p);
    Estimate m = batch_mean(moments);
    if (m.value <= 0) return {0, 0};
    double root = std::pow(m.value, 1.0 / p);
    return {root, m.se * root / (p * m.value)};
}

Estimate lp_sup_norm(const std::vector<DriftAccumulator>& ensemble, size_t mode_index, double p,
                     size_t t_limit) {
    std::vector<double> sups(ensemble.size());
    for (size_t i = 0; i < ensemble.size(); ++i) sups[i] = ensemble[i].sup_abs(mode_index, t_limit);
    return lp_norm(sups, p);
}

Estimate lp_sup_norm(const std::vector<DriftAccumulator>& ensemble, size_t mode_index, double p) {
    if (ensemble.empty()) throw std::invalid_argument("lp_sup_norm: empty ensemble");
    return lp_sup_norm(ensemble, mode_index, p, ensemble.front().times.size() - 1);
}

ScalingFit scaling_regression(std::vector<ScalingPoint> points, std::string abscissa_label) {
    if (points.size() < 5) throw std::invalid_argument("scaling_regression: need >= 5 points");
    bool weighted = true;
    for (const auto& pt : points) {
        if (!(pt.x > 0) || !(pt.value > 0))
            throw std::invalid_argument("scaling_regression: nonpositive abscissa or estimate");
        if (!(pt.se > 0)) weighted = false;
    }
    std::sort(points.begin(), points.end(),
              [](const ScalingPoint& a, const ScalingPoint& b) { return a.x < b.x; });

    std::vector<double> x(points.size()), y(points.size()), w(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        x[i] = std::log(points[i].x);
        y[i] = std::log(points[i].value);
        double se_log = weighted ? points[i].se / points[i].value : 1.0;
        w[i] = weighted ? 1.0 / (se_log * se_log) : 1.0;
    }
    FitCore f = wls_line(x, y, w);

    ScalingFit fit;
    fit.abscissa = std::move(abscissa_label);
    fit.slope = f.slope;
    fit.intercept = f.intercept;
    fit.slope_se = f.slope_se;
    fit.x_min = points.front().x;
    fit.x_max = points.back().x;
    fit.n_points = points.size();
    return fit;
}

ScalingFit loglog_fit(std::vector<ScalingPoint> points, std::string abscissa_label) {
    if (points.size() < 2) throw std::invalid_argument("loglog_fit: need >= 2 points");
    for (const auto& pt : points)
        if (!(pt.x > 0) || !(pt.value > 0))
            throw std::invalid_argument("loglog_fit: nonpositive abscissa or estimate");
    std::sort(points.begin(), points.end(),
              [](const ScalingPoint& a, const ScalingPoint& b) { return a.x < b.x; });
    std::vector<double> x(points.size()), y(points.size()), w(points.size(), 1.0);
    for (size_t i = 0; i < points.size(); ++i) {
        x[i] = std::log(points[i].x);
        y[i] = std::log(points[i].value);
    }
    FitCore f = wls_line(x, y, w);
    ScalingFit fit;
    fit.abscissa = std::move(abscissa_label);
    fit.slope = f.slope;
    fit.intercept = f.intercept;
    fit.slope_se = f.slope_se;
    fit.x_min = points.front().x;
    fit.x_max = points.back().x;
    fit.n_points = points.size();
    return fit;
}

double EnsembleSummary::pass_fraction(double z_gate) const {
    if (modes.empty()) return 0;
    size_t pass = 0;
    for (const auto& m : modes)
        if (std::abs(m.z2) < z_gate && std::abs(m.z4) < z_gate) ++pass;
    return double(pass) / double(modes.size());
}

namespace {

template <typename FieldT, typename ModeT>
ModeStationarity mode_row(const std::vector<FieldT>& fields, ModeT k, double v) {
    std::vector<double> m2(fields.size()), m4(fields.size());
    for (size_t i = 0; i < fields.size(); ++i) {
        double a2 = std::norm(fields[i].at(k));
        m2[i] = a2;
        m4[i] = a2 * a2;
    }
    Estimate e2 = batch_mean(m2), e4 = batch_mean(m4);
    ModeStationarity row;
    row.m2 = e2.value;
    row.m2_se = e2.se;
    row.m2_target = v;
    row.z2 = z_score(e2.value, v, e2.se);
    row.m4 = e4.value;
    row.m4_se = e4.se;
    row.m4_target = 2 * v * v;
    row.z4 = z_score(e4.value, 2 * v * v, e4.se);
    return row;
}

}  // namespace

EnsembleSummary stationarity_test(const std::vector<SpectralField>& fields,
                                  const MeasureSpec& spec) {
    if (fields.empty()) throw std::invalid_argument("stationarity_test: empty ensemble");
    EnsembleSummary out;
    out.paths = fields.size();
    for (int k = 1; k <= fields.front().cutoff(); ++k) {
        ModeStationarity row = mode_row(fields, k, spec.variance(k));
        row.k = k;
        out.modes.push_back(row);
    }
    return out;
}

EnsembleSummary stationarity_test_2d(const std::vector<Field2d>& fields, const MeasureSpec& spec) {
    if (fields.empty()) throw std::invalid_argument("stationarity_test: empty ensemble");
    EnsembleSummary out;
    out.paths = fields.size();
    for (Mode2d k : fields.front().half_modes()) {
        ModeStationarity row = mode_row(fields, k, spec.variance(k));
        row.k2 = k;
        out.modes.push_back(row);
    }
    return out;
}

QVReport quadratic_variation(const std::vector<double>& path, const std::vector<int>& levels) {
    size_t n = path.size();
    if (n < 3 || ((n - 1) & (n - 2)) != 0)
        throw std::invalid_argument("quadratic_variation: need 2^L + 1 uniform samples");
    int l_max = 0;
    for (size_t m = n - 1; m > 1; m >>= 1) ++l_max;

    QVReport report;
    report.levels = levels;
    std::sort(report.levels.begin(), report.levels.end());
    report.levels.erase(std::unique(report.levels.begin(), report.levels.end()),
                        report.levels.end());

    std::vector<double> xs, ys;
    for (int l : report.levels) {
        if (l < 1 || l > l_max)
            throw std::invalid_argument("quadratic_variation: level out of range");
        size_t stride = (n - 1) >> l;
        double qv = 0;
        for (size_t i = 0; i + stride < n; i += stride) {
            double inc = path[i + stride] - path[i];
            qv += inc * inc;
        }
        report.qv.push_back(qv);
        if (qv > 0) {
            xs.push_back(-double(l) * std::log(2.0));  // log of relative mesh 2^-l
            ys.push_back(std::log(qv));
        }
    }
    if (xs.size() >= 2) {
        std::vector<double> w(xs.size(), 1.0);
        FitCore f = wls_line(xs, ys, w);
        report.decay_exponent = f.slope;
        report.decay_se = f.slope_se;
    } else {
        report.decay_exponent = std::numeric_limits<double>::quiet_NaN();
        report.decay_se = std::numeric_limits<double>::quiet_NaN();
    }
    return report;
}

std::vector<ExpMomentRow> exp_moment_probe(const std::vector<double>& samples,
                                           const std::vector<double>& lambdas) {
    if (samples.empty()) throw std::invalid_argument("exp_moment_probe: empty sample");
    std::vector<ExpMomentRow> rows;
    std::vector<double> shifted(samples.size());
    for (double lambda : lambdas) {
        double mx = -std::numeric_limits<double>::infinity();
        for (double q : samples) mx = std::max(mx, lambda * q);
        double total = 0;
        for (size_t i = 0; i < samples.size(); ++i) {
            shifted[i] = std::exp(lambda * samples[i] - mx);
            total += shifted[i];
        }
        ExpMomentRow row;
        row.lambda = lambda;
        row.value = std::exp(mx + std::log(total / double(samples.size())));

        size_t top = std::max<size_t>(1, samples.size() / 100);
        std::vector<double> contrib = shifted;
        std::nth_element(contrib.begin(), contrib.begin() + top - 1, contrib.end(),
                         std::greater<double>());
        double top_sum = 0;
        for (size_t i = 0; i < top; ++i) top_sum += contrib[i];
        row.unreliable = top_sum > 0.5 * total;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace sbe
