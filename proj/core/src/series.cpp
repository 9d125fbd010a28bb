#include "symdyn/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace symdyn {

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
    const int order = std::min(a.order(), b.order());
    IntSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeff[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= order; ++j)
            out.coeff[static_cast<size_t>(i + j)] += a.coeff[static_cast<size_t>(i)] * b.coeff[static_cast<size_t>(j)];
    }
    return out;
}

void PeriodicTable::set(int n, BigInt v) {
    if (n < 1) throw input_error("periodic table: n must be >= 1");
    if (v < 0) throw input_error("periodic table: negative count");
    p[n] = std::move(v);
}

const BigInt& PeriodicTable::at(int n) const {
    auto it = p.find(n);
    if (it == p.end()) throw input_error("periodic table: undefined at n=" + std::to_string(n));
    return it->second;
}

bool PeriodicTable::defined_through(int order) const {
    for (int n = 1; n <= order; ++n)
        if (!p.count(n)) return false;
    return true;
}

BigInt periodic_points_sft(const SftPresentation& p, int n) {
    if (n <= 0) throw input_error("periodic_points_sft: n must be positive");
    DiGraph g = sft_to_labeled_graph(p).underlying();
    BigInt trace = 0;
    for (int v = 0; v < g.vertex_count(); ++v) trace += count_paths(g, v, v, n);
    return trace;
}

BigInt periodic_points_sft_enumerate(const SftPresentation& p, int n) {
    if (n <= 0) throw input_error("periodic_points_sft_enumerate: n must be positive");
    double scale = n * std::log2(static_cast<double>(p.alphabet().size()));
    if (scale > 24) throw budget_error("periodic_points_sft_enumerate: enumeration scale too large");
    int reps = 1;
    while (reps * n < n + p.memory() + 1) ++reps;
    BigInt count = 0;
    Word w(static_cast<size_t>(n), 0);
    const int k = p.alphabet().size();
    for (;;) {
        Word doubled;
        doubled.reserve(w.size() * static_cast<size_t>(reps));
        for (int r = 0; r < reps; ++r) doubled.insert(doubled.end(), w.begin(), w.end());
        if (is_admissible(p, doubled)) ++count;
        int i = n - 1;
        while (i >= 0 && w[static_cast<size_t>(i)] == k - 1) w[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++w[static_cast<size_t>(i)];
    }
    return count;
}

PeriodicTable periodic_table_sft(const SftPresentation& p, int order) {
    PeriodicTable t;
    for (int n = 1; n <= order; ++n) t.set(n, periodic_points_sft(p, n));
    return t;
}

PeriodicTable periodic_table_sofic(const LabeledGraph& g, int order) {
    PeriodicTable t;
    for (int n = 1; n <= order; ++n) t.set(n, periodic_points_sofic(g, n));
    return t;
}

IntSeries zeta_from_periodic(const PeriodicTable& t, int order) {
    if (!t.defined_through(order))
        throw input_error("zeta_from_periodic: periodic counts not defined through the order");
    // Z = exp(S) with S = sum p_n t^n / n satisfies n z_n = sum_k p_k z_{n-k}.
    std::vector<BigRat> z(static_cast<size_t>(order) + 1);
    z[0] = 1;
    for (int n = 1; n <= order; ++n) {
        BigRat acc = 0;
        for (int k = 1; k <= n; ++k) acc += BigRat(t.at(k)) * z[static_cast<size_t>(n - k)];
        z[static_cast<size_t>(n)] = acc / n;
    }
    IntSeries out(order);
    for (int n = 0; n <= order; ++n) {
        const BigRat& c = z[static_cast<size_t>(n)];
        if (boost::multiprecision::denominator(c) != 1) {
            std::ostringstream os;
            os << "zeta_from_periodic: coefficient of t^" << n
               << " is not an integer; periodic counts are inconsistent with a shift space";
            throw integrity_error(os.str());
        }
        out.coeff[static_cast<size_t>(n)] = BigInt(boost::multiprecision::numerator(c));
    }
    return out;
}

std::vector<BigRat> series_log(const IntSeries& z) {
    if (z.order() < 0 || z.coeff[0] != 1)
        throw input_error("series_log: constant term must be 1");
    const int order = z.order();
    // n z_n = sum_{k=1}^{n} p_k z_{n-k}, solved for p_n.
    std::vector<BigRat> p(static_cast<size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) {
        BigRat acc = BigRat(z.coeff[static_cast<size_t>(n)]) * n;
        for (int k = 1; k < n; ++k) acc -= p[static_cast<size_t>(k)] * BigRat(z.coeff[static_cast<size_t>(n - k)]);
        p[static_cast<size_t>(n)] = acc;
    }
    return p;
}

IntSeries zeta_loop(const IntSeries& f, int order) {
    if (f.order() >= 0 && f.coeff[0] != 0)
        throw input_error("zeta_loop: first-return series must have zero constant term");
    IntSeries out(order);
    out.coeff[0] = 1;
    for (int n = 1; n <= order; ++n) {
        BigInt acc = 0;
        for (int k = 1; k <= std::min(n, f.order()); ++k)
            acc += f.coeff[static_cast<size_t>(k)] * out.coeff[static_cast<size_t>(n - k)];
        out.coeff[static_cast<size_t>(n)] = acc;
    }
    return out;
}

IntSeries first_return_series(const LoopSpec& spec, int order) {
    spec.validate();
    IntSeries f(order);
    for (int n = 1; n <= order; ++n) f.coeff[static_cast<size_t>(n)] = spec.count_at(n);
    return f;
}

IntSeries zeta_loop(const LoopSpec& spec, int order) {
    if (spec.empty()) throw input_error("zeta_loop: empty loop spec");
    return zeta_loop(first_return_series(spec, order), order);
}

IntSeries zeta_depth_product(const std::vector<IntSeries>& fs, int order) {
    IntSeries out(order);
    out.coeff[0] = 1; // empty-product convention
    for (const auto& f : fs) out = series_mul(out, zeta_loop(f, order));
    return out;
}

namespace {

/// Solve M x = b over the rationals by elimination; free variables are set to
/// zero. nullopt when inconsistent.
std::optional<std::vector<BigRat>> solve_rational(std::vector<std::vector<BigRat>> m, std::vector<BigRat> b) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivot_col(rows, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        std::swap(b[sel], b[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            BigRat factor = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
            b[i] -= factor * b[r];
        }
        pivot_col[r] = static_cast<int>(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<BigRat> x(cols, 0);
    for (size_t i = 0; i < r; ++i)
        x[static_cast<size_t>(pivot_col[i])] = b[i] / m[i][static_cast<size_t>(pivot_col[i])];
    return x;
}

} // namespace

std::optional<Recurrence> detect_linear_recurrence(const std::vector<BigInt>& data, int max_order) {
    const int n = static_cast<int>(data.size());
    if (max_order < 1) throw input_error("detect_linear_recurrence: max_order must be >= 1");
    if (n < 2 * max_order + 2)
        throw input_error("detect_linear_recurrence: need at least 2*max_order + 2 data points");
    for (int d = 1; d <= max_order; ++d) {
        // Fit on the last d equations, then verify backwards.
        std::vector<std::vector<BigRat>> m;
        std::vector<BigRat> b;
        for (int row = n - d; row < n; ++row) {
            std::vector<BigRat> eq(static_cast<size_t>(d));
            for (int i = 0; i < d; ++i) eq[static_cast<size_t>(i)] = BigRat(data[static_cast<size_t>(row - 1 - i)]);
            m.push_back(std::move(eq));
            b.emplace_back(data[static_cast<size_t>(row)]);
        }
        auto sol = solve_rational(std::move(m), std::move(b));
        if (!sol) continue;
        auto holds_at = [&](int idx) {
            BigRat acc = 0;
            for (int i = 0; i < d; ++i) acc += (*sol)[static_cast<size_t>(i)] * BigRat(data[static_cast<size_t>(idx - 1 - i)]);
            return acc == BigRat(data[static_cast<size_t>(idx)]);
        };
        int start = n;
        for (int idx = n - 1; idx >= d; --idx) {
            if (!holds_at(idx)) break;
            start = idx;
        }
        // Demand real evidence: the recurrence must cover at least 2d points.
        if (n - start >= std::max(2 * d, d + 1)) return Recurrence{d, *sol, start};
    }
    return std::nullopt;
}

std::optional<Recurrence> detect_linear_recurrence(const PeriodicTable& t, int max_order) {
    std::vector<BigInt> data;
    for (int n = 1; t.p.count(n); ++n) data.push_back(t.at(n));
    return detect_linear_recurrence(data, max_order);
}

std::optional<Recurrence> detect_linear_recurrence(const IntSeries& s, int max_order) {
    return detect_linear_recurrence(s.coeff, max_order);
}

} // namespace symdyn
