#pragma once

#include "socle/canonical.hpp"
#include "socle/degree.hpp"
#include "socle/error.hpp"
#include "socle/field.hpp"
#include "socle/frobenius.hpp"
#include "socle/groebner.hpp"
#include "socle/ideal.hpp"
#include "socle/linalg.hpp"
#include "socle/local_cohomology.hpp"
#include "socle/module.hpp"
#include "socle/monomial.hpp"
#include "socle/parse.hpp"
#include "socle/polynomial.hpp"
#include "socle/resolution.hpp"
#include "socle/ring.hpp"
