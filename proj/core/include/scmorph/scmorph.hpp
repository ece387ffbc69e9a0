#pragma once

#include "scmorph/builders.hpp"
#include "scmorph/complex.hpp"
#include "scmorph/dimensional.hpp"
#include "scmorph/error.hpp"
#include "scmorph/filters.hpp"
#include "scmorph/graph_ops.hpp"
#include "scmorph/io.hpp"
#include "scmorph/simplex.hpp"
#include "scmorph/simplex_set.hpp"
#include "scmorph/weighted.hpp"
