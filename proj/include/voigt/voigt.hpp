#pragma once

#include "voigt/continued_fraction.hpp"
#include "voigt/error.hpp"
#include "voigt/fadsamp.hpp"
#include "voigt/oracle.hpp"
#include "voigt/sampling.hpp"
#include "voigt/spline.hpp"
#include "voigt/trapezoidal.hpp"
#include "voigt/twodomain.hpp"
#include "voigt/types.hpp"
