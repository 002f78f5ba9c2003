#pragma once

#include "opflow/algebra.hpp"
#include "opflow/cohomology.hpp"
#include "opflow/deformation.hpp"
#include "opflow/dynamics.hpp"
#include "opflow/errors.hpp"
#include "opflow/flows.hpp"
#include "opflow/identities.hpp"
#include "opflow/linalg.hpp"
#include "opflow/operation.hpp"
#include "opflow/regions.hpp"
#include "opflow/rng.hpp"
#include "opflow/scalar.hpp"
#include "opflow/variations.hpp"
