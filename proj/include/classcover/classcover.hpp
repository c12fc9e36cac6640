#pragma once

// Umbrella header.

#include "classcover/rational.hpp"
#include "classcover/geometry.hpp"
#include "classcover/staircase.hpp"
#include "classcover/slide.hpp"
#include "classcover/candidates.hpp"
#include "classcover/online.hpp"
#include "classcover/oracle.hpp"
#include "classcover/adversary.hpp"
#include "classcover/instance_io.hpp"
#include "classcover/generators.hpp"
#include "classcover/svg.hpp"
#include "classcover/harness.hpp"
