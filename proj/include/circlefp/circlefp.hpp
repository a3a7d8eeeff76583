#pragma once

#include "classify.hpp"
#include "constraints.hpp"
#include "core.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "multigraph.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "rewrite.hpp"
#include "series.hpp"
