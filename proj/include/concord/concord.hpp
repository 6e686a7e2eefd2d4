#pragma once

// Umbrella header: exact knot invariants from Seifert matrices and the
// concordance ledger for tau and s.

#include "concord/catalog.hpp"
#include "concord/error.hpp"
#include "concord/integer.hpp"
#include "concord/invariants.hpp"
#include "concord/laurent.hpp"
#include "concord/ledger.hpp"
#include "concord/linalg.hpp"
#include "concord/matrix.hpp"
#include "concord/matrix_io.hpp"
#include "concord/pipeline.hpp"
#include "concord/seifert.hpp"
