#include "ghct/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "ghct/rng.hpp"

namespace ghct {

namespace {

void check_labels(const Graph& g, const StrengthLabels& labels) {
    if (static_cast<int>(labels.labels.size()) != g.edge_count())
        throw std::invalid_argument("labels: one entry per edge required");
    for (double k : labels.labels)
        if (!(k > 0.0)) throw std::invalid_argument("labels: every entry must be positive");
}

// Round a candidate weight down to an integer and raise the keep probability
// to preserve the expected contribution. Left unchanged when that is not
// possible (weight below 1, or the compensated probability would exceed 1).
void round_weight(double& p, double& w) {
    double floored = std::floor(w);
    if (floored < 1.0 || floored == w) return;
    double adjusted = p * w / floored;
    if (adjusted > 1.0) return;
    p = adjusted;
    w = floored;
}

}  // namespace

double SparsifyParams::rho(int n) const {
    return 3.0 * (d + 4.0) * std::log(static_cast<double>(n)) / (epsilon * epsilon);
}

void SparsifyParams::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("params: epsilon must lie in (0,1)");
    if (!(d >= 1.0)) throw std::invalid_argument("params: failure exponent d must be >= 1");
}

CompressedGraph compress(const Graph& g, const StrengthLabels& labels,
                         const SparsifyParams& params) {
    params.validate();
    check_labels(g, labels);

    CompressedGraph out;
    out.params = params;
    out.probabilities.assign(g.edge_count(), 1.0);
    if (g.vertex_count() < 3) {  // ln(n) degenerates; keep verbatim
        out.graph = g;
        return out;
    }

    const double rho = params.rho(g.vertex_count());
    CounterRng rng(params.seed);
    std::vector<Edge> kept;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        const double k = labels.labels[i];
        const auto stream = static_cast<std::uint64_t>(i);
        switch (params.mode) {
            case CompressMode::UnweightedBernoulli: {
                double p = std::min(1.0, rho / k);
                double w = e.weight / p;
                if (params.integer_rounding) round_weight(p, w);
                out.probabilities[i] = p;
                if (rng.flip(stream, 0, p)) kept.push_back({e.u, e.v, w});
                break;
            }
            case CompressMode::IntegerBinomial: {
                double trials_f = std::round(e.weight);
                if (std::abs(trials_f - e.weight) > 1e-9)
                    throw std::invalid_argument(
                        "compress: integer-binomial mode requires integer weights");
                double p = rho / k;
                if (p >= 1.0) {
                    out.probabilities[i] = 1.0;
                    kept.push_back(e);
                    break;
                }
                double w = k / rho;
                if (params.integer_rounding) round_weight(p, w);
                auto trials = static_cast<long long>(trials_f);
                long long s = rng.binomial(stream, 0, trials, p);
                out.probabilities[i] = 1.0 - std::pow(1.0 - p, static_cast<double>(trials));
                if (s > 0) kept.push_back({e.u, e.v, static_cast<double>(s) * w});
                break;
            }
            case CompressMode::RealSimplified: {
                double p = rho * e.weight / k;
                if (p >= 1.0) {
                    // clamped regime: keeping the original weight is the only
                    // expectation-preserving choice
                    out.probabilities[i] = 1.0;
                    kept.push_back(e);
                    break;
                }
                double w = k / rho;
                if (params.integer_rounding) round_weight(p, w);
                out.probabilities[i] = p;
                if (rng.flip(stream, 0, p)) kept.push_back({e.u, e.v, w});
                break;
            }
            case CompressMode::RealPoisson: {
                double lambda = rho * e.weight / k;
                double w = k / rho;
                if (params.integer_rounding) {
                    double floored = std::floor(w);
                    if (floored >= 1.0 && floored != w) {
                        lambda *= w / floored;
                        w = floored;
                    }
                }
                long long s = rng.poisson(stream, 0, lambda);
                out.probabilities[i] = 1.0 - std::exp(-lambda);
                if (s > 0) kept.push_back({e.u, e.v, static_cast<double>(s) * w});
                break;
            }
        }
    }
    out.graph = Graph(g.vertex_count(), std::move(kept));
    return out;
}

SmoothedGraph smooth_tracked(const Graph& g, const StrengthLabels& labels, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("smooth: c must be positive");
    check_labels(g, labels);
    SmoothedGraph out;
    std::vector<Edge> pieces;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        auto count = static_cast<long long>(std::ceil(c * e.weight / labels.labels[i] - 1e-12));
        if (count < 1) count = 1;
        double cap = e.weight / static_cast<double>(count);
        for (long long j = 0; j < count; ++j) {
            pieces.push_back({e.u, e.v, cap});
            out.source_edge.push_back(i);
        }
    }
    out.graph = Graph(g.vertex_count(), std::move(pieces));
    return out;
}

Graph smooth(const Graph& g, const StrengthLabels& labels, double c) {
    return smooth_tracked(g, labels, c).graph;
}

Graph uniform_sample(const Graph& g, double p, std::uint64_t seed) {
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("uniform_sample: p must lie in (0,1]");
    CounterRng rng(seed);
    std::vector<Edge> kept;
    for (int i = 0; i < g.edge_count(); ++i)
        if (rng.flip(static_cast<std::uint64_t>(i), 0, p)) kept.push_back(g.edge(i));
    return Graph(g.vertex_count(), std::move(kept));
}

std::vector<Graph> random_division(const Graph& g, int groups, std::uint64_t seed) {
    if (groups < 1) throw std::invalid_argument("random_division: groups must be >= 1");
    CounterRng rng(seed);
    std::vector<std::vector<Edge>> buckets(groups);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto which = rng.below(static_cast<std::uint64_t>(i), 0,
                               static_cast<std::uint64_t>(groups));
        buckets[which].push_back(g.edge(i));
    }
    std::vector<Graph> out;
    out.reserve(groups);
    for (auto& bucket : buckets) out.emplace_back(g.vertex_count(), std::move(bucket));
    return out;
}

}  // namespace ghct
