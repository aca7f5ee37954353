#pragma once

// Umbrella header.

#include "hilbsg/errors.hpp"
#include "hilbsg/polyring.hpp"
#include "hilbsg/groebner.hpp"
#include "hilbsg/idealops.hpp"
#include "hilbsg/semigroup.hpp"
#include "hilbsg/hilbert.hpp"
#include "hilbsg/verdict.hpp"
#include "hilbsg/job.hpp"
