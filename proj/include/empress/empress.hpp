#pragma once

// Umbrella header for the whole library: Queen-variant move rules, the
// retrograde P-position oracle, substitution morphisms and word tables,
// closed-form generators, and the cross-verification checks.

#include "empress/analysis.hpp"
#include "empress/errors.hpp"
#include "empress/integer.hpp"
#include "empress/moves.hpp"
#include "empress/position.hpp"
#include "empress/rational.hpp"
#include "empress/sequences.hpp"
#include "empress/solver.hpp"
#include "empress/table.hpp"
#include "empress/table_io.hpp"
#include "empress/variant.hpp"
#include "empress/words.hpp"
