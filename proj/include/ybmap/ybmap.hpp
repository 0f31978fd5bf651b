#pragma once

#include "ybmap/catalog.hpp"
#include "ybmap/construct.hpp"
#include "ybmap/engine.hpp"
#include "ybmap/errors.hpp"
#include "ybmap/expr.hpp"
#include "ybmap/field.hpp"
#include "ybmap/glmatrix.hpp"
#include "ybmap/lax.hpp"
#include "ybmap/matrix.hpp"
#include "ybmap/objects.hpp"
#include "ybmap/quasigroup.hpp"
#include "ybmap/reduce.hpp"
#include "ybmap/report.hpp"
#include "ybmap/sampling.hpp"
#include "ybmap/verify.hpp"
