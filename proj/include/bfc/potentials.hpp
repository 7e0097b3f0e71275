#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "bfc/boolean_function.hpp"
#include "bfc/rational.hpp"

namespace bfc
{

using Real = boost::multiprecision::cpp_dec_float_50;

Real to_real( const BigRational& r );

enum class MeasureTag
{
  DegI,
  SensI,
  CertI,
  MixDS,
  MixCS
};

/// A coordinate measure m_i. Mixed kinds are beta * first + (1 - beta) * sens_i,
/// where first is deg_i (MIX_DS) or cert_i (MIX_CS).
struct CoordinateMeasureKind
{
  MeasureTag tag = MeasureTag::DegI;
  BigRational beta = 1;

  static CoordinateMeasureKind deg() { return { MeasureTag::DegI, 1 }; }
  static CoordinateMeasureKind sens() { return { MeasureTag::SensI, 1 }; }
  static CoordinateMeasureKind cert() { return { MeasureTag::CertI, 1 }; }
  static CoordinateMeasureKind mix_ds( const BigRational& beta );
  static CoordinateMeasureKind mix_cs( const BigRational& beta );

  /// "DEG_I", "MIX_DS(1/2)", ...
  std::string name() const;
  static CoordinateMeasureKind parse( std::string_view text );

  friend bool operator==( const CoordinateMeasureKind&, const CoordinateMeasureKind& ) = default;
};

/// The five kinds exercised throughout: the three base measures and both mixes at beta = 1/2.
std::vector<CoordinateMeasureKind> standard_kinds();

int deg_i( const BooleanFunction& f, Coordinate i );
int sens_i( const BooleanFunction& f, Coordinate i );
int cert_i( const BooleanFunction& f, Coordinate i );

/// deg_i, sens_i and cert_i for every coordinate at once.
struct CoordinateProfile
{
  int arity = 0;
  CoordinateMask relevant = 0;
  std::vector<int> deg, sens, cert;

  bool is_relevant( Coordinate i ) const { return ( relevant >> i ) & 1u; }
  BigRational value( Coordinate i, const CoordinateMeasureKind& kind ) const;
};

/// Certificates are skipped (left at 0) when `with_cert` is false or the arity is above the search cap.
CoordinateProfile coordinate_profile( const BooleanFunction& f, bool with_cert = true );

/// Memoizes profiles of small functions; restrictions of corpus members recur constantly.
class ProfileCache
{
public:
  explicit ProfileCache( int max_arity = 4 ) : max_arity_( max_arity ) {}

  const CoordinateProfile& get( const BooleanFunction& f );
  std::size_t size() const { return cache_.size(); }

private:
  int max_arity_;
  CoordinateProfile scratch_;
  std::unordered_map<BooleanFunction, CoordinateProfile, BooleanFunctionHash> cache_;
};

BigRational coordinate_measure( const BooleanFunction& f, Coordinate i, const CoordinateMeasureKind& kind );

struct PotentialTerm
{
  Coordinate coordinate;
  BigRational m;
  /// 2^{-m} when m is an integer.
  std::optional<BigRational> exact;
  Real value;
};

struct PotentialValue
{
  std::vector<PotentialTerm> terms;
  /// Present iff every exponent is an integer.
  std::optional<BigRational> exact;
  Real value = 0;
  /// Absolute error bound on `value` (0 when exact).
  Real error = 0;

  double to_double() const { return value.convert_to<double>(); }
};

/// 2^{-m}, exact when m is an integer.
PotentialTerm potential_term( Coordinate i, const BigRational& m );

PotentialValue potential( const BooleanFunction& f, const CoordinateMeasureKind& kind );
PotentialValue restricted_potential( const BooleanFunction& f, const CoordinateMeasureKind& kind, CoordinateMask h );
PotentialValue potential_from_profile( const CoordinateProfile& p, const CoordinateMeasureKind& kind, CoordinateMask h );

/// coord<TAB>m_i<TAB>term per relevant coordinate (1-based), then total<TAB>value.
void write_potential( std::ostream& out, const PotentialValue& v );

/// a <= b, exactly when both are exact, otherwise with `slack` on top of the error bounds.
bool potential_leq( const PotentialValue& a, const PotentialValue& b, double slack = 1e-12 );

/// Minimum of m_1 over the two dictators x and not-x on one variable.
BigRational dictator_minimum( const CoordinateMeasureKind& kind );

/// Hard-coded r: 1 for DEG_I, 2 for SENS_I and CERT_I, beta * r1 + (1 - beta) * r2 for mixes.
BigRational r_constant( const CoordinateMeasureKind& kind );

/// Recomputes r for all base kinds from the dictators; throws std::logic_error on drift.
void verify_r_constants();

struct RrcmResult
{
  bool pass = true;
  /// First violating (j, b) in lexicographic order.
  std::optional<std::pair<Coordinate, bool>> counterexample;
  int property = 0;
};

RrcmResult check_rrcm( const BooleanFunction& f, Coordinate i, const CoordinateMeasureKind& kind, ProfileCache* cache = nullptr );

struct InequalityResult
{
  bool pass = true;
  Real lhs = 0;
  Real rhs = 0;
};

/// delta_i(f) 2^{-m_i(f)} <= E_alpha[delta_i(f_alpha) 2^{-m_i(f_alpha)}] over assignments alpha to H (i not in H).
InequalityResult check_restriction_inequality( const BooleanFunction& f, Coordinate i, const CoordinateMeasureKind& kind,
                                               CoordinateMask h, ProfileCache* cache = nullptr );

struct InfluenceBoundResult
{
  bool pass = true;
  std::optional<Coordinate> failing_coordinate;
  bool potential_pass = true;
};

/// delta_i 2^{-m_i} <= 2^{-r} Inf_i for every i, and M(f) <= 2^{-r} I[f].
InfluenceBoundResult check_influence_bound( const BooleanFunction& f, const CoordinateMeasureKind& kind,
                                            const CoordinateProfile* profile = nullptr );

struct MonomialSensitivityResult
{
  bool pass = true;
  std::optional<CoordinateMask> counterexample;
};

inline constexpr int kMonomialCheckMaxArity = 10;

/// For every monomial with a nonzero {0,1}- or Fourier coefficient, #{i in M : sens_i <= k} <= (k-1)^2.
MonomialSensitivityResult check_monomial_sensitivity( const BooleanFunction& f, int k, const CoordinateProfile* profile = nullptr );

/// sum_{j>=1} 1/j^2.
inline constexpr double kJuntaConstant = 1.6449340668482264;

/// #{i relevant : sens_i <= k} <= kJuntaConstant * k^3 * 2^k.
bool check_junta_count( const BooleanFunction& f, int k, const CoordinateProfile* profile = nullptr );

struct SplitBoundResult
{
  bool hypothesis_holds = false;
  bool bound_holds = false;
};

/// Y must consist of relevant coordinates (std::invalid_argument otherwise).
SplitBoundResult check_split_bound( const BooleanFunction& f, CoordinateMask y );

/// Largest possible S(M, f) for a monomial of size d given the per-level sensitivity counts.
BigRational monomial_sens_bound( int d );

} // namespace bfc
