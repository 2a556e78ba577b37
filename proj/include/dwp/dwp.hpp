#pragma once

#include "dwp/braid.hpp"
#include "dwp/congruence.hpp"
#include "dwp/dw_invariant.hpp"
#include "dwp/error.hpp"
#include "dwp/finite_field.hpp"
#include "dwp/group.hpp"
#include "dwp/group_spec.hpp"
#include "dwp/holonomy.hpp"
#include "dwp/report_json.hpp"
