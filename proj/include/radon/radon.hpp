#pragma once

// Umbrella header.

#include "radon/circle_example.hpp"
#include "radon/coset_space.hpp"
#include "radon/function.hpp"
#include "radon/function_spaces.hpp"
#include "radon/group.hpp"
#include "radon/group_spec.hpp"
#include "radon/linalg.hpp"
#include "radon/measures.hpp"
#include "radon/operators.hpp"
#include "radon/projections.hpp"
#include "radon/radon_transform.hpp"
#include "radon/random.hpp"
#include "radon/rational.hpp"
#include "radon/rho.hpp"
#include "radon/serialize.hpp"
#include "radon/transport.hpp"
