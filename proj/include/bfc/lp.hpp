#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bfc/boolean_function.hpp"
#include "bfc/rational.hpp"

namespace bfc
{

enum class Relation
{
  LessEqual,
  Equal,
  GreaterEqual
};

struct Constraint
{
  std::vector<BigRational> coefficients;
  Relation relation = Relation::Equal;
  BigRational rhs;
};

/// Feasibility-only linear program over free real variables.
class LinearProgram
{
public:
  explicit LinearProgram( int num_variables = 0 );

  int num_variables() const { return num_variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Throws std::invalid_argument if the coefficient count differs from num_variables().
  void add( std::vector<BigRational> coefficients, Relation relation, BigRational rhs );

  /// True iff `x` satisfies every constraint exactly.
  bool satisfied_by( const std::vector<BigRational>& x ) const;

private:
  int num_variables_;
  std::vector<Constraint> constraints_;
};

struct LpResult
{
  bool feasible = false;
  /// A point satisfying every constraint; empty when infeasible.
  std::vector<BigRational> witness;
};

/*! \brief Decides feasibility exactly.
 *
 * General-form simplex with one bounded slack per distinct coefficient row.
 * The leaving variable is the one with the largest bound violation for the
 * first kBlandAfter pivots of a check, after which Bland's smallest-index
 * rule takes over, so termination is guaranteed. A feasible witness is substituted back
 * into the original constraints before returning; a mismatch throws
 * std::logic_error.
 */
LpResult simplex_feasible( const LinearProgram& lp );

/// Pivots per check() before switching to the pure smallest-index rule.
inline constexpr std::size_t kBlandAfter = 1000;

/// Incremental solver: rows can be appended and slack bounds changed between checks.
class IncrementalSimplex
{
public:
  explicit IncrementalSimplex( int num_variables );

  /// Adds the row sum_j c_j x_j with bounds [lo, hi] (either may be absent); returns its row id.
  int add_row( const std::vector<BigRational>& coefficients, std::optional<BigRational> lo, std::optional<BigRational> hi );

  void set_row_bounds( int row, std::optional<BigRational> lo, std::optional<BigRational> hi );

  /// Restores feasibility from the current basis; returns false iff the bounds are inconsistent.
  bool check();

  /// Current values of the original variables (feasible after check() returned true).
  std::vector<BigRational> values() const;

  std::size_t pivots() const { return pivots_; }

private:
  struct Bounds
  {
    std::optional<BigRational> lo, hi;
  };

  int total_variables() const { return static_cast<int>( value_.size() ); }
  void pivot_and_update( int row, int col, const BigRational& v );
  void update_nonbasic( int col, const BigRational& v );
  bool below( int var ) const;
  bool above( int var ) const;

  int num_original_;
  std::vector<Bounds> bounds_;
  std::vector<BigRational> value_;
  /// tableau_[r][c]: coefficient of nonbasic column c in basic row r.
  std::vector<std::vector<BigRational>> tableau_;
  std::vector<int> row_var_;
  std::vector<int> col_var_;
  /// var -> row index when basic, otherwise -(col + 1).
  std::vector<int> position_;
  std::vector<int> slack_of_row_;
  std::size_t pivots_ = 0;
};

/// Moment system: d variables p; p.m(1) = 1, 0 <= p.m(k) <= 1 for 1 < k < b, p.m(b) = tau,
/// with m(t) = (t, t^2, ..., t^d).
LinearProgram moment_lp( int d, int b, int tau );

struct CapScanEntry
{
  int b;
  std::array<bool, 2> feasible;
};

struct CapScan
{
  int d = 0;
  int cap = 0;
  std::vector<CapScanEntry> profile;
  /// True iff some infeasible b is followed by a feasible one.
  bool non_monotone = false;
};

/// Largest b in [d, 2d^2] with a feasible moment system for some tau; 1 when none (d = 1).
CapScan lp_bs_cap_scan( int d );
int lp_bs_cap( int d );

inline constexpr int kLpCapMaxDegree = 16;
inline constexpr int kApproxDegreeMaxArity = 10;

/// Monomials of size <= d, ordered by (size, lexicographic index list).
std::vector<CoordinateMask> monomials_up_to( int arity, int d );

/// Variables are the coefficients of monomials_up_to(arity, d); f(x) - eps <= p(x) <= f(x) + eps for all x.
LinearProgram adeg_lp( const BooleanFunction& f, int d, const BigRational& eps );

LinearProgram read_linear_program( std::istream& in );
void write_linear_program( std::ostream& out, const LinearProgram& lp );

} // namespace bfc
