#pragma once

#include "syslat/error.hpp"
#include "syslat/rational.hpp"
#include "syslat/quadratic.hpp"
#include "syslat/residue.hpp"
#include "syslat/polynomial.hpp"
#include "syslat/ratfunc.hpp"
#include "syslat/tower.hpp"
#include "syslat/matrix.hpp"
#include "syslat/linalg.hpp"
#include "syslat/hermitian.hpp"
#include "syslat/word.hpp"
#include "syslat/expr.hpp"
#include "syslat/appendix.hpp"
#include "syslat/representation.hpp"
#include "syslat/vol3.hpp"
#include "syslat/pell.hpp"
#include "syslat/factor.hpp"
#include "syslat/lucas.hpp"
#include "syslat/finite_image.hpp"
#include "syslat/congruence.hpp"
#include "syslat/systole.hpp"
#include "syslat/report.hpp"
