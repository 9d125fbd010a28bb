#ifndef SYMDYN_SERIES_HPP
#define SYMDYN_SERIES_HPP

#include <map>
#include <optional>
#include <vector>

#include "symdyn/generators.hpp"
#include "symdyn/labeled_graph.hpp"
#include "symdyn/sft.hpp"

namespace symdyn {

/// Truncated formal power series with exact integer coefficients.
struct IntSeries {
    std::vector<BigInt> coeff; // coeff[k] = coefficient of t^k

    IntSeries() = default;
    explicit IntSeries(int order) : coeff(static_cast<size_t>(order) + 1, 0) {}

    int order() const { return static_cast<int>(coeff.size()) - 1; }
    const BigInt& operator[](size_t k) const { return coeff[k]; }
    BigInt& operator[](size_t k) { return coeff[k]; }
    bool operator==(const IntSeries& o) const { return coeff == o.coeff; }
};

/// Truncated product, to the smaller of the two orders.
IntSeries series_mul(const IntSeries& a, const IntSeries& b);

/// Counts of fixed points of sigma^n, n >= 1.
struct PeriodicTable {
    std::map<int, BigInt> p;

    void set(int n, BigInt v);
    const BigInt& at(int n) const;
    bool defined_through(int order) const;
};

/// Number of fixed points of sigma^n of the SFT: cycles of length n in the
/// de Bruijn vertex graph (trace of the n-th transfer-matrix power).
BigInt periodic_points_sft(const SftPresentation& p, int n);

/// Enumeration oracle for the same count: words w of length n whose periodic
/// repetition is admissible. budget_error above |A|^n enumeration scale.
BigInt periodic_points_sft_enumerate(const SftPresentation& p, int n);

PeriodicTable periodic_table_sft(const SftPresentation& p, int order);
PeriodicTable periodic_table_sofic(const LabeledGraph& g, int order);

/// zeta(t) = exp(sum p_n t^n / n), truncated. Exact rational intermediates;
/// integrity_error naming the first index whose coefficient is not an integer.
IntSeries zeta_from_periodic(const PeriodicTable& t, int order);

/// Formal log of a series with constant term 1: recovers sum p_n t^n / n,
/// returned as the p_n table. Exact; used as the round-trip oracle.
std::vector<BigRat> series_log(const IntSeries& z);

/// Truncated 1 / (1 - f) for a first-return series f (zero constant term).
IntSeries zeta_loop(const IntSeries& f, int order);

/// First-return series of a loop spec, truncated.
IntSeries first_return_series(const LoopSpec& spec, int order);
IntSeries zeta_loop(const LoopSpec& spec, int order);

/// Truncated product of 1/(1 - f_i) over a depth tower of first-return
/// series. The empty product is the constant series 1.
IntSeries zeta_depth_product(const std::vector<IntSeries>& fs, int order);

struct Recurrence {
    int order = 0;
    std::vector<BigRat> coeff; // a_n = sum coeff[i] * a_{n-1-i}
    int start = 0;             // first index where the recurrence is asserted
};

/// Minimal-order linear recurrence satisfied by the data tail, by exact
/// rational elimination; nullopt when none of order <= max_order fits.
/// input_error unless at least 2*max_order + 2 data points are given.
std::optional<Recurrence> detect_linear_recurrence(const std::vector<BigInt>& data, int max_order);
std::optional<Recurrence> detect_linear_recurrence(const PeriodicTable& t, int max_order);
std::optional<Recurrence> detect_linear_recurrence(const IntSeries& s, int max_order);

} // namespace symdyn

#endif
