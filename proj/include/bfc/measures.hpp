#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bfc/boolean_function.hpp"
#include "bfc/rational.hpp"

namespace bfc
{

/// Arity cap for block sensitivity, certificates and decision trees.
inline constexpr int kSearchMaxArity = 14;

int degree( const BooleanFunction& f );

struct SensitivityResult
{
  int s = 0;
  int s0 = 0;
  int s1 = 0;
  /// s_x(f) indexed by x.
  std::vector<int> per_point;
};

int sensitivity_at( const BooleanFunction& f, std::uint32_t x );
SensitivityResult sensitivity( const BooleanFunction& f );

struct BlockSensitivityResult
{
  int bs = 0;
  std::uint32_t witness = 0;
  std::vector<CoordinateMask> blocks;
  std::vector<int> per_point;
};

/// bs_x(f) with an optimal disjoint family of minimal sensitive blocks.
int block_sensitivity_at( const BooleanFunction& f, std::uint32_t x, std::vector<CoordinateMask>* blocks = nullptr );
BlockSensitivityResult block_sensitivity( const BooleanFunction& f );

struct CertificateResult
{
  int c = 0;
  int c0 = 0;
  int c1 = 0;
  /// Minimum over inputs (with the given value); empty when there is no such input.
  std::optional<int> c_min, c_min0, c_min1;
  /// C_x(f) indexed by x.
  std::vector<int> per_point;
};

CertificateResult certificate_complexity( const BooleanFunction& f );

int dt_depth( const BooleanFunction& f );

/*! \brief Decision-tree depth and certificate sizes of every point in one pass.
 *
 * Subcubes are indexed in base 3 (digit 0/1 fixed, 2 free, digit i for
 * coordinate i), so both children of a subcube precede it and every
 * subfunction is handled once.
 */
struct SubcubeAnalysis
{
  int dt = 0;
  /// First query of an optimal tree (lowest index among ties); -1 for constants.
  int dt_root = -1;
  std::vector<int> certificate;
};

SubcubeAnalysis analyze_subcubes( const BooleanFunction& f );

struct InfluenceResult
{
  std::vector<BigRational> per_coordinate;
  BigRational total;
};

/// Exact counting, cross-checked against the Fourier spectrum (std::logic_error on mismatch).
InfluenceResult influence( const BooleanFunction& f );

/// Number of x with f(x) != f(x ^ e_i).
std::uint32_t sensitive_edge_count( const BooleanFunction& f, Coordinate i );

/// Smallest d whose approximation LP is feasible; 0 < eps < 1/2, arity <= 10.
int approx_degree( const BooleanFunction& f, const BigRational& eps );

struct MeasureReport
{
  int arity = 0;
  int degree = 0;
  int s = 0, s0 = 0, s1 = 0;
  int bs = 0;
  int c = 0, c0 = 0, c1 = 0;
  std::optional<int> c_min, c_min0, c_min1;
  int dt = 0;
  BigRational total_influence;
  std::vector<BigRational> influences;
  std::optional<BigRational> eps;
  std::optional<int> approx_degree;
};

MeasureReport measure_report( const BooleanFunction& f, std::optional<BigRational> eps = std::nullopt );

/// key<TAB>value lines in a fixed order; absent optionals print as "-".
void write_measure_report( std::ostream& out, const MeasureReport& report );

} // namespace bfc
