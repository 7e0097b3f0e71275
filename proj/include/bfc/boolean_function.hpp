#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bfc
{

/// Largest supported arity; exhaustive 2^n scans stay desk-sized.
inline constexpr int kMaxArity = 20;

/// Coordinates are 0-based in the API. Coordinate i is bit i of the table
/// index, so coordinate 0 is the least significant bit. Text formats print
/// coordinates 1-based.
using Coordinate = int;

/// Bitmask over coordinates (bit i <-> coordinate i).
using CoordinateMask = std::uint32_t;

/// A Boolean function given by its explicit truth table.
class BooleanFunction
{
public:
  BooleanFunction() : BooleanFunction( 0 ) {}

  /// Constant-0 function of the given arity.
  explicit BooleanFunction( int arity );

  static BooleanFunction from_table( int arity, std::span<const bool> table );
  static BooleanFunction from_string( std::string_view bits );
  static BooleanFunction from_callable( int arity, const std::function<bool( std::uint32_t )>& fn );
  /// Low 2^arity bits of `bits`; arity <= 6.
  static BooleanFunction from_word( int arity, std::uint64_t bits );

  int arity() const { return arity_; }
  std::uint32_t size() const { return std::uint32_t{ 1 } << arity_; }

  bool operator()( std::uint32_t index ) const { return ( words_[index >> 6] >> ( index & 63 ) ) & 1u; }
  bool get( std::uint32_t index ) const { return ( *this )( index ); }
  void set( std::uint32_t index, bool value );

  /// Evaluates at an explicit bit string; x[i] is coordinate i.
  bool evaluate( std::span<const int> x ) const;

  std::uint32_t count_ones() const;
  bool is_constant() const;

  /// First 64 table bits; the whole table when arity <= 6.
  std::uint64_t low_word() const { return words_[0]; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  /// Table as a '0'/'1' string in index order.
  std::string table_string() const;

  BooleanFunction complement() const;

  friend bool operator==( const BooleanFunction& a, const BooleanFunction& b ) = default;

private:
  int arity_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BooleanFunctionHash
{
  std::size_t operator()( const BooleanFunction& f ) const;
};

/// Fixed values for a set of distinct coordinates.
class PartialAssignment
{
public:
  PartialAssignment() = default;
  PartialAssignment( std::initializer_list<std::pair<Coordinate, bool>> items );
  explicit PartialAssignment( std::vector<std::pair<Coordinate, bool>> items );

  /// Fixes every coordinate in `mask`, reading values from the matching bits of `values`.
  static PartialAssignment from_mask( CoordinateMask mask, std::uint32_t values );

  const std::vector<std::pair<Coordinate, bool>>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

  CoordinateMask mask() const;
  std::uint32_t values() const;

  /// Throws std::invalid_argument on duplicate or out-of-range coordinates.
  void validate( int arity ) const;

private:
  std::vector<std::pair<Coordinate, bool>> items_;
};

/// f_alpha. The surviving coordinates are renumbered keeping their order.
BooleanFunction restrict( const BooleanFunction& f, const PartialAssignment& a );
BooleanFunction restrict( const BooleanFunction& f, Coordinate j, bool b );

CoordinateMask relevant_mask( const BooleanFunction& f );
std::vector<Coordinate> relevant_variables( const BooleanFunction& f );
bool is_relevant( const BooleanFunction& f, Coordinate i );
/// n(f).
int num_relevant( const BooleanFunction& f );

bool is_monotone( const BooleanFunction& f );

/// f o g: input j of f is fed by a copy of g on coordinates [j*m, (j+1)*m).
BooleanFunction compose( const BooleanFunction& f, const BooleanFunction& g );

/// Pointwise OR over the lower shadow; the smallest monotone function above f.
BooleanFunction monotone_closure( const BooleanFunction& f );

/// f(x XOR shift).
BooleanFunction translate( const BooleanFunction& f, std::uint32_t shift );

/// Reads the .tt text format: "n=<arity>" then 2^n characters of 0/1.
BooleanFunction read_truth_table( std::istream& in );
BooleanFunction read_truth_table_file( const std::string& path );
void write_truth_table( std::ostream& out, const BooleanFunction& f );

/// Expands the bits of `mask` into the positions of `free_mask` (pdep).
std::uint32_t deposit_bits( std::uint32_t value, CoordinateMask free_mask );

} // namespace bfc
