#pragma once

// Exact surgery calculus: homology of surgered 3-manifolds, nullhomology
// certificates, Thurston-Bennequin updates under contact Dehn surgery,
// Rolfsen-twist rewriting, and lens-space recognition. Everything is
// computed in exact integer/rational arithmetic.

#include "surgcalc/numbers.hpp"
#include "surgcalc/matrix.hpp"
#include "surgcalc/snf.hpp"
#include "surgcalc/diophantine.hpp"
#include "surgcalc/slope.hpp"
#include "surgcalc/diagram.hpp"
#include "surgcalc/homology.hpp"
#include "surgcalc/tb.hpp"
#include "surgcalc/moves.hpp"
#include "surgcalc/lens.hpp"
#include "surgcalc/io.hpp"
