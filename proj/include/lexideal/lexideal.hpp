#ifndef LEXIDEAL_LEXIDEAL_HPP
#define LEXIDEAL_LEXIDEAL_HPP

#include "axis_of_evil.hpp"
#include "error.hpp"
#include "escalier.hpp"
#include "linalg.hpp"
#include "minimal_basis.hpp"
#include "moeller.hpp"
#include "monomial_set.hpp"
#include "point.hpp"
#include "polynomial.hpp"
#include "prime_field.hpp"
#include "rational.hpp"
#include "term.hpp"
#include "verify.hpp"

#endif // LEXIDEAL_LEXIDEAL_HPP
