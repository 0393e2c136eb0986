#pragma once

#include <string_view>

#include "semigauss/instance.hpp"
#include "semigauss/polynomial.hpp"

namespace semigauss {

/// Grammar (whitespace ignored):
///   polynomial := term ("+" term)*
///   term       := coeff | coeff "*" "X" ["^" k] | "X" ["^" k]
///   coeff      := natural ["/" natural]
/// Over Z a coefficient, or a bare X, may carry a leading "-". Repeated powers
/// are summed. Throws ParseError with the byte offset into `text`.
Polynomial parse_polynomial(const SemiringInstance& s, std::string_view text);

/// A single signed or unsigned integer.
Element parse_element(const SemiringInstance& s, std::string_view text);

}  // namespace semigauss
