#pragma once

#include "planarharm/rational.hpp"
#include "planarharm/monomial.hpp"
#include "planarharm/poly.hpp"
#include "planarharm/params.hpp"
#include "planarharm/dunkl.hpp"
#include "planarharm/hypergeometric.hpp"
#include "planarharm/pbasis.hpp"
#include "planarharm/series.hpp"
#include "planarharm/planar.hpp"
#include "planarharm/harmonic.hpp"
#include "planarharm/special.hpp"
#include "planarharm/calogero.hpp"
#include "planarharm/format.hpp"
#include "planarharm/verify.hpp"
