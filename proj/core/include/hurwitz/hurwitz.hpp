#pragma once

// Umbrella header.

#include "hurwitz/builders.hpp"
#include "hurwitz/classification.hpp"
#include "hurwitz/config.hpp"
#include "hurwitz/determinant.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/matrix.hpp"
#include "hurwitz/polya.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/roots.hpp"
#include "hurwitz/sector.hpp"
#include "hurwitz/spectral.hpp"
#include "hurwitz/tnn.hpp"
