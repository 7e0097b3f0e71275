#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfc/boolean_function.hpp"
#include "bfc/polynomial.hpp"

namespace bfc
{

enum class Family
{
  Const0,
  Const1,
  Dict,
  And,
  Or,
  Parity,
  Maj,
  Addr,
  Maf,
  Kushilevitz
};

Family parse_family( std::string_view name );
std::string family_name( Family family );

/// Builds a named family member.
///
/// The parameter is the arity for CONST0/CONST1/DICT/AND/OR/PARITY/MAJ
/// (DICT is the dictator on coordinate 1), the number of address bits for
/// ADDR (arity k + 2^k), and k for MAF (arity k + C(k, floor(k/2))).
/// KUSHILEVITZ takes no parameter.
BooleanFunction family( Family family, std::optional<int> parameter = std::nullopt );
BooleanFunction family( std::string_view name, std::optional<int> parameter = std::nullopt );

/// The six-variable degree-3 polynomial whose tensor powers separate bs from deg.
MultilinearPolynomial kushilevitz_polynomial();

/// floor(k/2)-subsets of [k] in lexicographic order; these index the MAF target variables.
std::vector<CoordinateMask> maf_selector_subsets( int k );

} // namespace bfc
