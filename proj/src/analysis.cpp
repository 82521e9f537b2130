#include "cagrow/analysis.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

namespace cagrow {

std::string ClassVerdict::summary() const {
    std::ostringstream out;
    if (unknown()) {
        out << "unknown (horizon " << horizon << ")";
        return out.str();
    }
    out << "class " << label << (exact ? " (exact)" : " (tentative)");
    if (certificate) {
        if (label == 1)
            out << ", blank from t=" << certificate->t1;
        else
            out << ", glider shift=" << certificate->shift << " period="
                << (certificate->t2 - certificate->t1) << " at t=" << certificate->t1;
    }
    return out.str();
}

ClassVerdict classify_pair(const CaRule& rule, const Configuration& input, std::uint64_t horizon,
                           std::uint64_t span_budget) {
    ClassVerdict v;
    v.horizon = horizon;

    Configuration cur = input;
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, Configuration>> seen;

    auto record = [&](std::uint64_t t) {
        GrowthEntry e;
        e.t = t;
        e.span = cur.cells.size();
        e.left = cur.all_blank() ? 0 : cur.leftmost();
        e.right = cur.all_blank() ? -1 : cur.rightmost();
        e.hash = canonical_hash(cur);
        v.trace.entries.push_back(e);
    };

    for (std::uint64_t t = 0;; ++t) {
        record(t);
        if (cur.all_blank()) {
            v.label = 1;
            v.exact = true;
            v.certificate = RepeatCertificate{t, t, 0};
            return v;
        }
        std::uint64_t h = canonical_hash(cur);
        auto it = seen.find(h);
        if (it != seen.end() && it->second.second.cells == cur.cells) {
            v.label = 2;
            v.exact = true;
            v.certificate = RepeatCertificate{it->second.first, t,
                                              cur.offset - it->second.second.offset};
            return v;
        }
        if (it == seen.end()) seen.emplace(h, std::make_pair(t, cur));
        if (t == horizon) break;
        if (cur.cells.size() > span_budget) {
            v.trace.truncated = true;
            v.label = 0;
            return v;
        }
        cur = ca_step(rule, cur);
    }

    // No repeat within the horizon: split 3/4 on the trailing window.
    const std::uint64_t w = analysis_window(horizon);
    const auto& es = v.trace.entries;
    std::size_t from = es.size() > w ? es.size() - w - 1 : 0;
    bool decrease = false;
    for (std::size_t i = from + 1; i < es.size(); ++i)
        if (es[i].span < es[i - 1].span) decrease = true;
    if (!decrease) {
        v.label = 3;
        return v;
    }
    // A decrease is class 4 only when the overall trend still grows.
    std::uint64_t max_first = 0, max_second = 0;
    for (std::size_t i = 0; i < es.size(); ++i) {
        auto& m = (i < es.size() / 2) ? max_first : max_second;
        m = std::max(m, es[i].span);
    }
    if (max_second > max_first) {
        v.label = 4;
        return v;
    }
    v.label = 0;
    return v;
}

bool verify_certificate(const CaRule& rule, const Configuration& input, const ClassVerdict& v) {
    if (!v.exact || !v.certificate) return false;
    Configuration cur = input;
    for (std::uint64_t t = 0; t < v.certificate->t1; ++t) cur = ca_step(rule, cur);
    if (v.label == 1) return cur.all_blank();
    Configuration at_t1 = cur;
    for (std::uint64_t t = v.certificate->t1; t < v.certificate->t2; ++t) cur = ca_step(rule, cur);
    return cur.cells == at_t1.cells && cur.offset == at_t1.offset + v.certificate->shift;
}

bool check_growth_bounds(const GrowthTrace& trace, std::size_t sigma_size, unsigned radius,
                         std::uint64_t input_len) {
    const double logp = std::log(static_cast<double>(sigma_size + 1));
    for (const auto& e : trace.entries) {
        if (e.t < 2) continue;
        if (!(static_cast<double>(e.span) <
              static_cast<double>(input_len) + static_cast<double>(radius) * e.t))
            return false;
        if (static_cast<double>(e.span) < std::log(static_cast<double>(e.t)) / logp) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> local_minima(const GrowthTrace& trace) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const auto& es = trace.entries;
    std::size_t i = 1;
    while (i + 1 < es.size()) {
        if (es[i].span >= es[i - 1].span) {
            ++i;
            continue;
        }
        std::size_t j = i;  // plateau [i, j]
        while (j + 1 < es.size() && es[j + 1].span == es[i].span) ++j;
        if (j + 1 < es.size() && es[j + 1].span > es[i].span)
            out.emplace_back(es[i].t, es[i].span);
        i = j + 1;
    }
    return out;
}

namespace {

// Smallest t0 from which tx.span(t) == tstd.span(t - lag) holds through the
// overlap, or nullopt when even the trailing entry disagrees. Entries past
// either trace's end are outside the required range.
std::optional<std::uint64_t> minimal_t0(const GrowthTrace& tx, const GrowthTrace& tstd,
                                        std::int64_t lag, std::uint64_t min_overlap) {
    const auto& a = tx.entries;
    const auto& b = tstd.entries;
    std::int64_t hi = std::min<std::int64_t>(static_cast<std::int64_t>(a.size()),
                                             static_cast<std::int64_t>(b.size()) + lag);
    std::int64_t lo = std::max<std::int64_t>(0, lag);
    if (hi - lo < static_cast<std::int64_t>(min_overlap)) return std::nullopt;
    std::int64_t t = hi - 1;
    for (; t >= lo; --t)
        if (a[static_cast<std::size_t>(t)].span !=
            b[static_cast<std::size_t>(t - lag)].span)
            break;
    std::int64_t t0 = t + 1;
    if (hi - t0 < static_cast<std::int64_t>(min_overlap)) return std::nullopt;
    return static_cast<std::uint64_t>(t0 < lo ? lo : t0);
}

}  // namespace

std::optional<Alignment> align_traces(const GrowthTrace& tx, const GrowthTrace& tstd,
                                      std::uint64_t max_shift, std::uint64_t min_overlap) {
    if (tx.entries.empty() || tstd.entries.empty()) return std::nullopt;

    auto consider = [&](std::int64_t lag, std::optional<Alignment>& best) {
        if (static_cast<std::uint64_t>(std::llabs(lag)) > max_shift) return;
        auto t0 = minimal_t0(tx, tstd, lag, min_overlap);
        if (!t0) return;
        Alignment cand{*t0, lag};
        if (!best || cand.t0 < best->t0 ||
            (cand.t0 == best->t0 && std::llabs(cand.lag) < std::llabs(best->lag)))
            best = cand;
    };

    // Canonical-hash anchors on the trailing entry give the true lag directly
    // whenever the runs really merge; the exhaustive scan is the fallback.
    std::optional<Alignment> best;
    const auto& last = tx.entries.back();
    for (std::size_t u = 0; u < tstd.entries.size(); ++u)
        if (tstd.entries[u].hash == last.hash)
            consider(static_cast<std::int64_t>(last.t) - static_cast<std::int64_t>(u), best);
    if (best) return best;
    for (std::int64_t lag = 0; lag <= static_cast<std::int64_t>(max_shift); ++lag) {
        consider(lag, best);
        if (lag > 0) consider(-lag, best);
    }
    return best;
}

namespace {

GrowthFit fit_range(const GrowthTrace& trace, std::uint64_t from, std::uint64_t to) {
    GrowthFit fit;
    // Least squares for span ~ a*f(t) + b under f = log and f = id.
    double n = 0, sx_log = 0, sx_lin = 0, sy = 0, sxx_log = 0, sxx_lin = 0, sxy_log = 0,
           sxy_lin = 0;
    for (const auto& e : trace.entries) {
        if (e.t < from || e.t > to || e.t < 1) continue;
        double y = static_cast<double>(e.span);
        double xl = std::log(static_cast<double>(e.t));
        double xi = static_cast<double>(e.t);
        n += 1;
        sy += y;
        sx_log += xl;
        sx_lin += xi;
        sxx_log += xl * xl;
        sxx_lin += xi * xi;
        sxy_log += xl * y;
        sxy_lin += xi * y;
    }
    if (n < 3) return fit;
    auto solve = [&](double sx, double sxx, double sxy, double& a, double& b) {
        double denom = n * sxx - sx * sx;
        a = denom != 0 ? (n * sxy - sx * sy) / denom : 0;
        b = (sy - a * sx) / n;
    };
    double a_log, b_log, a_lin, b_lin;
    solve(sx_log, sxx_log, sxy_log, a_log, b_log);
    solve(sx_lin, sxx_lin, sxy_lin, a_lin, b_lin);
    double r_log = 0, r_lin = 0;
    for (const auto& e : trace.entries) {
        if (e.t < from || e.t > to || e.t < 1) continue;
        double y = static_cast<double>(e.span);
        double dl = y - (a_log * std::log(static_cast<double>(e.t)) + b_log);
        double di = y - (a_lin * static_cast<double>(e.t) + b_lin);
        r_log += dl * dl;
        r_lin += di * di;
    }
    fit.rms_log = std::sqrt(r_log / n);
    fit.rms_lin = std::sqrt(r_lin / n);
    if (fit.rms_log < 0.5 * fit.rms_lin) {
        fit.model = GrowthModel::logarithmic;
        fit.coefficient = a_log;
    } else if (fit.rms_lin < 0.5 * fit.rms_log) {
        fit.model = GrowthModel::linear;
        fit.coefficient = a_lin;
    } else {
        fit.model = GrowthModel::other;
        fit.coefficient = 0;
    }
    return fit;
}

}  // namespace

GrowthFit fit_growth_rate(const GrowthTrace& trace) {
    if (trace.entries.size() < 1000)
        throw std::invalid_argument("growth fit needs a trace of length >= 1000");
    std::uint64_t last = trace.entries.back().t;
    return fit_range(trace, last / 10, last);
}

GrowthFit fit_growth_rate_range(const GrowthTrace& trace, std::uint64_t from, std::uint64_t to) {
    return fit_range(trace, from, to);
}

std::uint64_t SampleRng::next() {
    // splitmix64: stable across platforms.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t SampleRng::below(std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased and platform-independent.
    std::uint64_t limit = ~0ull - (~0ull % bound);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

Configuration random_configuration(const AlphabetPtr& a, std::size_t n, SampleRng& rng) {
    std::vector<Symbol> cells(n);
    for (auto& c : cells) c = static_cast<Symbol>(rng.below(a->size()));
    return Configuration(a, 0, std::move(cells));
}

ClassDistribution estimate_class_distribution(const CaRule& rule, std::size_t n,
                                              std::uint64_t samples, std::uint64_t seed,
                                              std::uint64_t horizon) {
    if (samples == 0) throw std::invalid_argument("need at least one sample");
    ClassDistribution dist;
    const AlphabetPtr& a = rule.alphabet();

    double total = std::pow(static_cast<double>(a->size()), static_cast<double>(n));
    dist.exhaustive = total <= static_cast<double>(samples);

    auto classify_one = [&](const Configuration& x) {
        ClassVerdict v = classify_pair(rule, x, horizon);
        dist.counts[v.unknown() ? 0 : v.label] += 1;
        dist.samples += 1;
    };

    if (dist.exhaustive) {
        std::vector<Symbol> cells(n, 0);
        bool done = false;
        while (!done) {
            classify_one(Configuration(a, 0, cells));
            std::size_t i = 0;
            for (; i < n; ++i) {
                if (++cells[i] < a->size()) break;
                cells[i] = 0;
            }
            done = (i == n);
        }
        return dist;
    }

    for (std::uint64_t k = 0; k < samples; ++k) {
        // Per-sample stream keyed by index: scheduling-independent.
        SampleRng rng(seed * 0x100000001b3ull + k);
        classify_one(random_configuration(a, n, rng));
    }
    return dist;
}

std::string distribution_csv(const ClassDistribution& d) {
    std::ostringstream out;
    out << "class,count,frequency\n";
    for (int label = 1; label <= 4; ++label)
        out << label << ',' << d.counts[label] << ',' << d.frequency(label) << '\n';
    out << "unknown," << d.counts[0] << ',' << d.frequency(0) << '\n';
    return out.str();
}

}  // namespace cagrow
