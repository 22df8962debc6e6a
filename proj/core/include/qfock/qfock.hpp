#pragma once

#include "qfock/analytic.hpp"
#include "qfock/bargmann.hpp"
#include "qfock/complex_hermite.hpp"
#include "qfock/context.hpp"
#include "qfock/elliptic.hpp"
#include "qfock/fock.hpp"
#include "qfock/gram.hpp"
#include "qfock/jackson.hpp"
#include "qfock/polynomial.hpp"
#include "qfock/qexp.hpp"
#include "qfock/qgamma.hpp"
#include "qfock/qgrid.hpp"
#include "qfock/qhermite.hpp"
#include "qfock/qnumbers.hpp"
#include "qfock/real_poly.hpp"
#include "qfock/verify.hpp"
