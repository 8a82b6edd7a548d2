#pragma once

#include "g3enum/checks.hpp"
#include "g3enum/cr3.hpp"
#include "g3enum/descendant.hpp"
#include "g3enum/errors.hpp"
#include "g3enum/exact.hpp"
#include "g3enum/gw_core.hpp"
#include "g3enum/invariant_key.hpp"
#include "g3enum/memo_store.hpp"
#include "g3enum/rt.hpp"
#include "g3enum/session.hpp"
#include "g3enum/singular.hpp"
#include "g3enum/taut.hpp"
