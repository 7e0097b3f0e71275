#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfc/boolean_function.hpp"
#include "bfc/rational.hpp"

namespace bfc
{

/// A function in standard form together with how it was obtained from f.
struct StandardForm
{
  BooleanFunction g;
  /// The bs-maximizing input.
  std::uint32_t z = 0;
  /// Disjoint minimal sensitive blocks at z; input i of g drives block i.
  std::vector<CoordinateMask> blocks;
  bool complemented = false;
};

/// g(y) = f(z XOR union of the blocks B_i with y_i = 1), complemented when f(z) = 1.
/// Throws std::invalid_argument for constant f.
StandardForm standard_form( const BooleanFunction& f );

/// g(0) = 0 and g(e_i) = 1 for every i.
bool is_standard_form( const BooleanFunction& g );

/// Coefficients of p(mu) = g(mu, ..., mu) in increasing powers: entry j is the sum
/// of the Moebius coefficients over |S| = j. Trailing zeros are dropped.
std::vector<BigRational> symmetrize( const BooleanFunction& g );

BigRational evaluate_polynomial( const std::vector<BigRational>& p, const BigRational& mu );

struct StandardFormLemmas
{
  /// Every pairwise coefficient c_ij lies in {-1, -2}.
  bool pairwise = true;
  /// p''(0) = 2 sum c_ij, and it lies in [-4 C(b,2), -2 C(b,2)].
  bool second_derivative = true;
  BigRational p2;
  bool degree = true;
  /// |p(k/b)| <= 1 for k = 0..b.
  bool grid = true;

  bool pass() const { return pairwise && second_derivative && degree && grid; }
};

/// Throws std::invalid_argument when g is not in standard form.
StandardFormLemmas check_standard_form_lemmas( const BooleanFunction& g );

struct MarkovConsequence
{
  int bs = 0;
  int deg = 0;
  /// bs^2 - bs <= (2/3)(deg^4 - deg^2).
  bool quadratic = true;
  /// bs <= sqrt(2/3) deg^2 + 1.
  bool linear = true;

  bool pass() const { return quadratic && linear; }
};

MarkovConsequence check_markov_consequence( const BooleanFunction& f );
MarkovConsequence check_markov_consequence( int bs, int deg );

enum class CheckStatus
{
  Pass,
  Fail,
  Skip
};

std::string check_status_name( CheckStatus s );

struct DtIntersectResult
{
  CheckStatus status = CheckStatus::Skip;
  /// C_min^0(f_0) + C_min^1(f_1).
  int left = 0;
  /// |R(f_0) and R(f_1)| + 1.
  int right = 0;
};

/// Skips when f is not monotone or a restriction at `root` is constant.
DtIntersectResult check_dt_intersect( const BooleanFunction& f, Coordinate root );

/// A DAG of gates over numbered inputs.
class Formula
{
public:
  enum class Op
  {
    Input,
    Const,
    Not,
    And,
    Or
  };

  struct Node
  {
    Op op = Op::Const;
    /// Input index, or the constant's value.
    int value = 0;
    std::vector<int> children;
  };

  explicit Formula( int arity = 0 ) : arity_( arity ) {}

  int input( int index );
  int constant( bool value );
  int negate( int child );
  int conj( std::vector<int> children );
  int disj( std::vector<int> children );

  void set_root( int node ) { root_ = node; }
  int root() const { return root_; }
  int arity() const { return arity_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  /// x[i] is input i.
  bool evaluate( const std::vector<bool>& x ) const;
  /// Arity <= 20.
  BooleanFunction truth_table() const;

private:
  int add( Node n );

  int arity_;
  int root_ = -1;
  std::vector<Node> nodes_;
};

/// Whether flipping input v can change the output. Exhaustive search over partial
/// assignments with three-valued propagation; throws std::runtime_error past `budget` nodes.
bool formula_input_relevant( const Formula& f, int v, std::uint64_t budget = 50'000'000 );
int formula_num_relevant( const Formula& f );

struct DoublingMember
{
  int d = 0;
  Formula formula;
  /// Present when the arity is at most 20.
  std::optional<BooleanFunction> table;
};

/*! \brief f_d(a, b, x, y) = (not a and b and f_{d-2}(x)) or (a and (b or f_{d-2}(y))).
 *
 * Odd d starts from the dictator at d = 1, even d from the constant 1 on no
 * inputs at d = 0. Inputs are ordered a, b, the x block, then the y block.
 */
DoublingMember dt_doubling_family( int d );

struct CorpusEntry
{
  std::string id;
  BooleanFunction f;
};

/// A reproducible list of functions.
class Corpus
{
public:
  /// all:N, monotone:N, random:N:COUNT:SEED, random-monotone:N:COUNT:SEED or named:A,B,...
  static Corpus parse( std::string_view spec );

  static Corpus all( int n );
  static Corpus monotone( int n );
  static Corpus random( int n, std::uint64_t count, std::uint64_t seed );
  /// Random tables pushed up to their monotone closure. Biased toward functions near the top.
  static Corpus random_monotone( int n, std::uint64_t count, std::uint64_t seed );
  /// Names like MAJ_3, PARITY_4, ADDR_2 or KUSHILEVITZ.
  static Corpus named( const std::vector<std::string>& names );

  const std::string& spec() const { return spec_; }
  std::uint64_t size() const;
  CorpusEntry at( std::uint64_t index ) const;

private:
  enum class Source
  {
    All,
    Listed
  };
  Source source_ = Source::Listed;
  int n_ = 0;
  std::string spec_;
  std::vector<CorpusEntry> entries_;
};

/// Every monotone function on n <= 5 inputs, by pairing f_0 <= f_1 on n - 1 inputs.
std::vector<BooleanFunction> enumerate_monotone( int n );

/// One inequality evaluated on one function.
struct TheoremCheck
{
  std::string id;
  std::string text;
  double left = 0;
  double right = 0;
  bool pass = true;
  std::string witness;
};

struct TheoremSummary
{
  std::string id;
  std::string text;
  /// Checks taken from the literature rather than derived here.
  bool external = false;
  std::uint64_t evaluated = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;
  std::optional<TheoremCheck> first_failure;
  /// Largest left / right seen (how tight the check got).
  double worst_ratio = 0;
  std::string worst_witness;
};

struct SuiteReport
{
  std::string corpus;
  std::uint64_t functions = 0;
  std::vector<TheoremSummary> theorems;
  /// Functions whose measures could not be computed.
  std::vector<std::string> errors;

  std::uint64_t total_failures() const;
  const TheoremSummary* find( std::string_view id ) const;
};

/// Slack for comparisons against real constants.
inline constexpr double kSuiteSlack = 1e-6;
inline constexpr int kSuiteApproxDegreeMaxArity = 3;

SuiteReport run_theorem_suite( const Corpus& corpus );

/// One row per theorem, then a totals line.
void write_suite_report( std::ostream& out, const SuiteReport& report );

} // namespace bfc
