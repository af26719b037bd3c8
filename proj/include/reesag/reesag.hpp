#pragma once

// Umbrella header: the full library.

#include "reesag/artinian.hpp"
#include "reesag/cli.hpp"
#include "reesag/decider.hpp"
#include "reesag/eagon_northcott.hpp"
#include "reesag/errors.hpp"
#include "reesag/field.hpp"
#include "reesag/instance.hpp"
#include "reesag/linalg.hpp"
#include "reesag/local_ideal.hpp"
#include "reesag/monomial.hpp"
#include "reesag/oracle.hpp"
#include "reesag/parameter.hpp"
#include "reesag/parse.hpp"
#include "reesag/polynomial.hpp"
#include "reesag/ring.hpp"
