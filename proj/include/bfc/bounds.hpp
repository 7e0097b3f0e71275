#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bfc/rational.hpp"

namespace bfc
{

/// Largest b with a feasible moment system, d = 1..14.
inline constexpr std::array<int, 14> kLpCapTable{ 1, 3, 6, 10, 15, 21, 29, 38, 47, 58, 71, 84, 99, 114 };

enum class CapMode
{
  LpTable,
  Square,
  Markov
};

/// Largest integer b with b^2 - b <= (2/3)(d^4 - d^2).
std::int64_t markov_cap( std::int64_t d );

/*! \brief Block-sensitivity caps B_d.
 *
 * SQUARE: d^2. LP_TABLE: the table for d <= 14, then `fallback`.
 * MARKOV: the quadratic bound, intersected with the table for d <= 14.
 */
struct CapProfile
{
  CapMode mode = CapMode::Square;
  CapMode fallback = CapMode::Square;

  static CapProfile square() { return { CapMode::Square, CapMode::Square }; }
  static CapProfile lp_table( CapMode fallback = CapMode::Square ) { return { CapMode::LpTable, fallback }; }
  static CapProfile markov() { return { CapMode::Markov, CapMode::Markov }; }

  std::int64_t cap( std::int64_t d ) const;
  /// Which bound is active at d: "LP_TABLE", "SQUARE" or "MARKOV" (ties go to LP_TABLE).
  std::string source( std::int64_t d ) const;
  std::string name() const;
};

CapProfile parse_cap_profile( const std::string& text );

struct HeadlineBreakdown
{
  double corner = 0;
  /// w(d+1) * B_{d+1}.
  double edge = 0;
  /// sum_{k >= d+2} w(k) (B_k - B_{k-1}), summed or in closed form.
  double series = 0;
  /// Upper bound on the part of the series not summed explicitly.
  double remainder = 0;
  double headline = 0;
  /// The cruder second tail form, (d+1)^3/2^{d+1} + sum_{k>=d+2} (2k^2-k)/2^k (degree DP only).
  double alternative_tail = 0;
};

struct BoundGrid
{
  int d_max = 0;
  CapProfile caps;
  std::vector<std::int64_t> cap_by_d;
  /// values[b][d] for 0 <= b <= B_{d_max}, 1 <= d <= d_max (column 0 unused).
  std::vector<std::vector<double>> values;
  HeadlineBreakdown headline;

  double at( std::int64_t b, int d ) const;
};

/// Accumulated floating error budget of a grid (documented bound, not a measurement).
inline constexpr double kGridErrorBudget = 1e-9;

BoundGrid dp_degree( int d_max, const CapProfile& caps );

struct MonotoneDegreeResult
{
  /// values[d] for 1 <= d <= d_max (index 0 unused).
  std::vector<BigRational> values;
  BigRational headline;
};

MonotoneDegreeResult dp_monotone_degree( int d_max );

struct InfluenceMinResult
{
  int k = 0;
  double value = 0;
  /// value(k) for k = 1..200 (index 0 unused).
  std::vector<double> profile;
};

/// min over k in [1, 200] of (k + sum_{i>k} i^3 2^{-beta i}) / 2^{2-beta}.
InfluenceMinResult ds_influence_min( double beta );

enum class DsWeight
{
  /// 2^{-beta d} times sum of 2^{-(1-beta)s} over the smallest sensitivities possible when at most (k-1)^2 coordinates have sens_i <= k.
  MonomialSens,
  /// d * 2^{-(beta d + 2(1-beta))}: every coordinate only known to have sens_i >= 2.
  SensFloor
};

std::string ds_weight_name( DsWeight w );

/// Per-step weight for the mixed DP.
double ds_step_weight( double beta, int d, DsWeight weight );

BoundGrid dp_mixed_ds( double beta, int d_max, const CapProfile& caps, DsWeight weight = DsWeight::MonomialSens );

/// H_d / 2.
BigRational cs_harmonic_bound( int d );

inline constexpr double kEulerGamma = 0.57721566490153286;

/// ln(s) + gamma/2.
double cs_sens_bound( int s );

struct TechnicalRecursionResult
{
  /// values[d] for 1 <= d <= d_max.
  std::vector<double> values;
  /// The bound each A_d was checked against.
  std::vector<double> bounds;
  /// A_d <= C H_d with C = max{A_1, B} (alpha = 1/2), or A_d <= max{A_1, max_h B h (2 alpha)^h}.
  bool verdict = true;
  double constant = 0;
  /// First d with A_d above its bound; 0 when none.
  int first_failure = 0;
  /// alpha = 1/2 only: the same check with C = max{A_1, B / ln 2}, the constant the
  /// continuous relaxation over real h actually supports.
  bool corrected_verdict = true;
  double corrected_constant = 0;
};

/// A_{d+1} = sup_h { B h alpha^h + (1 - 2^{-h}) A_d } from A_1 = a1.
TechnicalRecursionResult technical_recursion( double b, double alpha, int d_max, double a1 = 0.5 );

struct MonotoneDtResult
{
  /// values[d] for 0 <= d <= d_max.
  std::vector<std::uint64_t> values;
  double ratio = 0;
};

/// R_0 = 0, R_1 = 1, R_d = max{2R_{d-1} - 2, 2 + 2R_{d-2}, 1 + R_{d-1}}; d_max <= 62.
MonotoneDtResult monotone_dt_table( int d_max );

/// sum_{i >= a} i^p r^i for p in 0..3 and 0 < r < 1.
double tail_power_sum( int p, double r, std::int64_t a );

void write_grid( std::ostream& out, const BoundGrid& grid );
void write_headline( std::ostream& out, const HeadlineBreakdown& h );

} // namespace bfc
