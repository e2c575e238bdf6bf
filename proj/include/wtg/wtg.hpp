// Umbrella header for the weighted threshold graph library.

#pragma once

#include "wtg/algebra.hpp"
#include "wtg/cospectral.hpp"
#include "wtg/error.hpp"
#include "wtg/io.hpp"
#include "wtg/matrix.hpp"
#include "wtg/numkernel.hpp"
#include "wtg/polynomial.hpp"
#include "wtg/scalar.hpp"
#include "wtg/spectral.hpp"
#include "wtg/threshold.hpp"
